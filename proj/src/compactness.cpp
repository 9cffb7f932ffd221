#include "hend/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hend {

namespace {

const GroundSpace& family_space(const FuzzyFamily& u) {
    if (u.members.empty()) throw std::invalid_argument("empty family");
    return *u.members.front().space();
}

double grid_gap(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("empty alpha grid");
    std::vector<double> g = grid;
    std::sort(g.begin(), g.end());
    double gap = g.front();  // gap from level 0
    for (std::size_t i = 0; i + 1 < g.size(); ++i) gap = std::max(gap, g[i + 1] - g[i]);
    gap = std::max(gap, 1.0 - g.back());
    return gap;
}

}  // namespace

GroundSet family_union(const FuzzyFamily& u, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
    GroundSet out = GroundSet::empty();
    for (const auto& m : u.members) out = out.unite(m.cut(alpha));
    return out;
}

FamilyNetResult family_eps_net_hend(const FuzzyFamily& u, double eps, std::size_t budget) {
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    FamilyNet net;
    net.radius = eps;
    for (std::size_t i = 0; i < u.members.size(); ++i) {
        bool covered = false;
        for (std::size_t c : net.center_indices)
            if (endograph_dist(ProductMetricVariant::Sum, u.members[i], u.members[c]) <= eps) {
                covered = true;
                break;
            }
        if (covered) continue;
        if (net.center_indices.size() == budget) return FamilyNetFailure{i};
        net.center_indices.push_back(i);
    }
    return net;
}

TbReport tb_audit(const FuzzyFamily& u, double eps, const std::vector<double>& alpha_grid,
                  std::size_t budget) {
    const GroundSpace& space = family_space(u);
    for (const auto& m : u.members)
        if (!classify(m).is_uscg) throw std::domain_error("tb_audit requires USCG members");

    TbReport report;
    const auto fam = family_eps_net_hend(u, eps, budget);
    report.family_net_ok = family_net_ok(fam);
    if (report.family_net_ok)
        report.family_net_size = std::get<FamilyNet>(fam).center_indices.size();
    else
        report.family_uncovered = std::get<FamilyNetFailure>(fam).uncovered_index;

    // forward: family net => constructed 2*eps covers of the cut unions
    if (report.family_net_ok) {
        for (double alpha : alpha_grid) {
            if (alpha <= 2.0 * eps) continue;
            const double beta = alpha - eps - 1e-12;
            std::vector<Point> centers;
            bool built = true;
            for (std::size_t c : std::get<FamilyNet>(fam).center_indices) {
                const GroundSet cut = u.members[c].cut(beta);
                const auto net = greedy_eps_net(space, cut, eps, budget);
                if (!net_ok(net)) { built = false; break; }
                for (const auto& p : std::get<EpsNet>(net).centers) centers.push_back(p);
            }
            bool covered = false;
            if (built) {
                const GroundSet target = family_union(u, alpha);
                const GroundSet cover = GroundSet::points(centers);
                covered = target.is_empty() ||
                          semi_hausdorff(space, target, cover).leq(2.0 * eps + 1e-9);
            }
            if (!covered) {
                report.forward_pass = false;
                report.forward_failing_alpha = alpha;
                break;
            }
        }
    }

    // backward: cut nets on the grid => family net at eps' within the
    // signature budget (members sharing all cut-net signatures are close)
    double signature_cap = 1.0;
    for (double alpha : alpha_grid) {
        const auto net = greedy_eps_net(space, family_union(u, alpha), eps, budget);
        if (!net_ok(net)) {
            report.cut_nets_ok = false;
            report.cut_net_failing_alpha = alpha;
            break;
        }
        signature_cap *= std::pow(2.0, static_cast<double>(std::get<EpsNet>(net).centers.size()));
        signature_cap = std::min(signature_cap, static_cast<double>(u.members.size()));
    }
    report.eps_prime = 3.0 * eps + grid_gap(alpha_grid);
    if (report.cut_nets_ok) {
        const auto backward_budget =
            static_cast<std::size_t>(std::min(signature_cap, static_cast<double>(u.members.size())));
        report.backward_pass =
            family_net_ok(family_eps_net_hend(u, report.eps_prime, std::max<std::size_t>(1, backward_budget)));
    }
    report.pass = report.forward_pass && report.backward_pass;
    return report;
}

TbReport kx_tb_audit(const GroundSpace& space, const std::vector<GroundSet>& d, double eps,
                     std::size_t budget) {
    if (d.empty()) throw std::invalid_argument("empty set family");
    for (const auto& s : d)
        if (!s.bounded()) throw std::domain_error("kx_tb_audit requires bounded members");

    TbReport report;
    // greedy family net under the Hausdorff metric
    std::vector<std::size_t> centers;
    std::optional<std::size_t> uncovered;
    for (std::size_t i = 0; i < d.size(); ++i) {
        bool covered = false;
        for (std::size_t c : centers)
            if (hausdorff(space, d[i], d[c]).leq(eps)) { covered = true; break; }
        if (covered) continue;
        if (centers.size() == budget) { uncovered = i; break; }
        centers.push_back(i);
    }
    report.family_net_ok = !uncovered.has_value();
    report.family_net_size = centers.size();
    report.family_uncovered = uncovered;

    GroundSet all = GroundSet::empty();
    for (const auto& s : d) all = all.unite(s);

    // forward: set-family net => constructed 2*eps cover of the union
    if (report.family_net_ok) {
        std::vector<Point> cover_pts;
        bool built = true;
        for (std::size_t c : centers) {
            const auto net = greedy_eps_net(space, d[c], eps, budget);
            if (!net_ok(net)) { built = false; break; }
            for (const auto& p : std::get<EpsNet>(net).centers) cover_pts.push_back(p);
        }
        const bool covered =
            built && (all.is_empty() ||
                      semi_hausdorff(space, all, GroundSet::points(cover_pts)).leq(2.0 * eps + 1e-9));
        if (!covered) report.forward_pass = false;
    }

    // backward: union net => family net at 4*eps within the signature budget
    const auto union_net = greedy_eps_net(space, all, eps, budget);
    report.cut_nets_ok = net_ok(union_net);
    report.eps_prime = 4.0 * eps;
    if (report.cut_nets_ok) {
        const std::size_t p = std::get<EpsNet>(union_net).centers.size();
        double cap = p < 20 ? std::pow(2.0, static_cast<double>(p)) : static_cast<double>(d.size());
        cap = std::min(cap, static_cast<double>(d.size()));
        const auto backward_budget = std::max<std::size_t>(1, static_cast<std::size_t>(cap));
        std::vector<std::size_t> bcenters;
        bool ok = true;
        for (std::size_t i = 0; i < d.size(); ++i) {
            bool covered = false;
            for (std::size_t c : bcenters)
                if (hausdorff(space, d[i], d[c]).leq(report.eps_prime)) { covered = true; break; }
            if (covered) continue;
            if (bcenters.size() == backward_budget) { ok = false; break; }
            bcenters.push_back(i);
        }
        report.backward_pass = ok;
    }
    report.pass = report.forward_pass && report.backward_pass;
    return report;
}

ChiTransferReport chi_transfer_audit(const GroundSpace& space, const std::vector<GroundSet>& d,
                                     double eps, std::size_t budget) {
    if (d.empty()) throw std::invalid_argument("empty set family");
    ChiTransferReport report;
    SpacePtr sp;
    switch (space.backend()) {
        case GroundSpace::Backend::RealLine: sp = make_real_line(); break;
        case GroundSpace::Backend::Euclidean: sp = make_euclidean(space.dimension()); break;
        case GroundSpace::Backend::PointCloud:
            throw std::invalid_argument("chi_transfer_audit needs a shareable space");
    }
    std::vector<StepFuzzySet> chis;
    chis.reserve(d.size());
    for (const auto& s : d) chis.push_back(StepFuzzySet::characteristic(sp, s));

    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j) {
            const ExtDist h = hausdorff(space, d[i], d[j]);
            const double lhs = h.infinite ? 1.0 : std::min(h.value, 1.0);
            const double rhs = endograph_dist(ProductMetricVariant::Sum, chis[i], chis[j]);
            report.max_identity_gap = std::max(report.max_identity_gap, std::fabs(lhs - rhs));
        }
    report.identity_pass = report.max_identity_gap <= 1e-12;

    if (eps < 1.0) {
        // greedy set net under min(H,1) must pick the same centers as the
        // fuzzy net under H_end
        std::vector<std::size_t> set_centers;
        bool set_ok = true;
        for (std::size_t i = 0; i < d.size() && set_ok; ++i) {
            bool covered = false;
            for (std::size_t c : set_centers) {
                const ExtDist h = hausdorff(space, d[i], d[c]);
                const double v = h.infinite ? 1.0 : std::min(h.value, 1.0);
                if (v <= eps) { covered = true; break; }
            }
            if (covered) continue;
            if (set_centers.size() == budget) { set_ok = false; break; }
            set_centers.push_back(i);
        }
        const auto fam = family_eps_net_hend(FuzzyFamily{chis, std::nullopt}, eps, budget);
        if (set_ok != family_net_ok(fam))
            report.nets_agree = false;
        else if (set_ok && std::get<FamilyNet>(fam).center_indices != set_centers)
            report.nets_agree = false;
    }
    report.pass = report.identity_pass && report.nets_agree;
    return report;
}

ExtractionResult diagonal_extract(const FuzzySeqWindow& w, const DiagonalSchedule& sched) {
    if (w.members.empty()) throw std::invalid_argument("empty window");
    if (sched.alpha.empty() || sched.alpha.size() != sched.eps.size())
        throw std::invalid_argument("schedule needs matching alpha/eps stages");
    for (std::size_t k = 0; k < sched.alpha.size(); ++k) {
        if (!(sched.alpha[k] > 0.0)) throw std::invalid_argument("alpha stages must be positive");
        if (k > 0 && !(sched.alpha[k] < sched.alpha[k - 1]))
            throw std::invalid_argument("alpha stages must decrease strictly");
        if (sched.alpha[k] > std::min(sched.xi, 1.0 / static_cast<double>(k + 1)) + 1e-12)
            throw std::invalid_argument("alpha_k must not exceed min(xi, 1/k)");
        if (!(sched.eps[k] > 0.0)) throw std::invalid_argument("eps stages must be positive");
    }
    for (const auto& m : w.members)
        if (m.height() < sched.xi - 1e-12)
            throw std::domain_error("every member must reach the height floor xi");

    ExtractionResult result;
    std::vector<std::size_t> pool;  // 1-based window indices
    for (std::size_t i = w.tail_start; i <= w.members.size(); ++i) pool.push_back(i);

    auto member = [&](std::size_t idx) -> const StepFuzzySet& { return w.members[idx - 1]; };
    auto trunc_dist = [&](std::size_t i, std::size_t j, double alpha) {
        const ExtDist d = truncated_hausdorff(ProductMetricVariant::Sum, member(i), member(j), alpha);
        return d.infinite ? kInf : d.value;
    };

    std::vector<std::vector<std::size_t>> pools;
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < sched.alpha.size(); ++k) {
        const double alpha = sched.alpha[k];
        const double eps = sched.eps[k];

        // greedy net of the pool's truncated endographs
        std::vector<std::size_t> centers;
        std::optional<std::size_t> uncovered;
        for (std::size_t idx : pool) {
            bool covered = false;
            for (std::size_t c : centers)
                if (trunc_dist(idx, c, alpha) <= eps) { covered = true; break; }
            if (covered) continue;
            if (centers.size() == sched.net_budget) { uncovered = idx; break; }
            centers.push_back(idx);
        }
        if (uncovered) {
            result.error = ExtractionResult::Error::StageNetFailure;
            result.failed_stage = k + 1;
            result.failure_witness = uncovered;
            return result;
        }

        // pigeonhole: keep the largest cluster (ties to the smallest center)
        std::vector<std::vector<std::size_t>> clusters(centers.size());
        for (std::size_t idx : pool)
            for (std::size_t c = 0; c < centers.size(); ++c)
                if (trunc_dist(idx, centers[c], alpha) <= eps) { clusters[c].push_back(idx); break; }
        std::size_t best = 0;
        for (std::size_t c = 1; c < clusters.size(); ++c)
            if (clusters[c].size() > clusters[best].size()) best = c;

        pool = clusters[best];
        pools.push_back(pool);
        reps.push_back(centers[best]);
    }

    // diagonal member selection: strictly increasing through the nested pools
    std::size_t prev = 0;
    for (std::size_t k = 0; k < pools.size(); ++k) {
        std::optional<std::size_t> pick;
        for (std::size_t idx : pools[k])
            if (idx > prev) { pick = idx; break; }
        if (!pick) {
            result.error = ExtractionResult::Error::WindowExhausted;
            result.failed_stage = k + 1;
            return result;
        }
        result.subsequence.push_back(*pick);
        prev = *pick;
    }

    // stage limits and residuals
    std::vector<SlabSet> stage_limits;
    for (std::size_t k = 0; k < pools.size(); ++k) {
        StageInfo st;
        st.stage = k + 1;
        st.alpha = sched.alpha[k];
        st.eps = sched.eps[k];
        st.rep_index = reps[k];
        st.pool_size = pools[k].size();
        st.residual = trunc_dist(result.subsequence[k], reps[k], sched.alpha[k]);
        st.bound = std::max(sched.alpha[k], 3.0 * sched.eps[k]);
        result.stages.push_back(st);
        stage_limits.push_back(truncated_view(member(reps[k]), sched.alpha[k]));
    }
    // the deepest stage covers every shared level at the finest tolerance,
    // so it subsumes the earlier stage limits
    result.limit = slab_union({stage_limits.back()}, SlabSet::BaseKind::Full);
    result.limit_fuzzy = reconstruct(*result.limit);
    for (std::size_t idx : result.subsequence)
        result.final_residuals.push_back(
            endograph_dist(ProductMetricVariant::Sum, member(idx), *result.limit_fuzzy));
    result.ok = true;
    return result;
}

ClosednessReport closedness_probe(const FuzzyFamily& u, const FuzzySeqWindow& w, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    double xi = 1.0;
    for (const auto& m : w.members) xi = std::min(xi, m.height());
    ClosednessReport report;
    if (xi <= 0.0) return report;  // no positive height floor: nothing to extract

    DiagonalSchedule sched;
    sched.xi = xi;
    double a = xi;
    for (std::size_t k = 1; k <= 8; ++k) {
        a = std::min(xi, 1.0 / static_cast<double>(k)) / std::pow(2.0, static_cast<double>(k));
        sched.alpha.push_back(a);
        sched.eps.push_back(eps / 3.0);
        if (a <= eps) break;
    }
    sched.net_budget = std::max<std::size_t>(64, w.members.size());

    const auto ext = diagonal_extract(w, sched);
    report.extraction_ok = ext.ok;
    if (!ext.ok) return report;
    report.final_residual = ext.final_residuals.empty() ? 0.0 : ext.final_residuals.back();
    if (report.final_residual > eps) return report;
    report.candidate_found = true;
    double best = kInf;
    for (std::size_t i = 0; i < u.members.size(); ++i) {
        const double d =
            endograph_dist(ProductMetricVariant::Sum, *ext.limit_fuzzy, u.members[i]);
        if (d < best) { best = d; report.nearest_member = i; }
    }
    report.gap = best;
    report.pass = best <= 2.0 * eps;
    return report;
}

FrReport fr_restrict_audit(const FuzzyFamily& u, double eps, const std::vector<double>& alpha_grid,
                           std::size_t budget) {
    if (!u.height_tag) throw std::domain_error("fr_restrict_audit requires a height tag");
    const double r = *u.height_tag;
    for (const auto& m : u.members)
        if (m.height() != r) throw std::domain_error("member height differs from the family tag");

    FrReport report;
    std::vector<double> clipped_grid;
    for (double a : alpha_grid) {
        if (a > r) {
            if (!family_union(u, a).is_empty()) report.empty_above_r = false;
        } else {
            clipped_grid.push_back(a);
        }
    }
    if (clipped_grid.empty()) clipped_grid.push_back(r);
    report.full = tb_audit(u, eps, alpha_grid, budget);
    report.clipped = tb_audit(u, eps, clipped_grid, budget);
    report.verdicts_match = report.full.family_net_ok == report.clipped.family_net_ok &&
                            report.full.cut_nets_ok == report.clipped.cut_nets_ok &&
                            report.full.forward_pass == report.clipped.forward_pass;
    report.pass = report.empty_above_r && report.verdicts_match;
    return report;
}

EquivalenceReport hend_iff_gamma_plus_compact_audit(const FuzzySeqWindow& w,
                                                    const StepFuzzySet& u, double eps,
                                                    const std::vector<double>& alpha_grid,
                                                    std::size_t budget) {
    const GroundSpace& space = *w.members.front().space();
    EquivalenceReport report;

    for (std::size_t i = w.tail_start; i <= w.members.size(); ++i)
        report.max_tail_dist = std::max(
            report.max_tail_dist, endograph_dist(ProductMetricVariant::Sum, w.members[i - 1], u));
    report.a = report.max_tail_dist <= eps;
    report.b = gamma_limit_check(w, u, 2.0 * eps).pass;

    auto tail_union = [&](double alpha) {
        GroundSet out = GroundSet::empty();
        for (std::size_t i = w.tail_start; i <= w.members.size(); ++i)
            out = out.unite(w.members[i - 1].cut(alpha));
        return out;
    };

    report.c = true;
    for (double alpha : alpha_grid) {
        if (!net_ok(greedy_eps_net(space, tail_union(alpha), eps, budget))) {
            report.c = false;
            report.c_failing_alpha = alpha;
            break;
        }
    }

    if (report.a) {
        report.forward_pass = report.b;
        // constructed 2*eps covers of the tail unions from the limit's cuts
        for (double alpha : alpha_grid) {
            if (alpha <= 2.0 * eps) continue;
            const GroundSet target = tail_union(alpha);
            if (target.is_empty()) continue;
            const auto net = greedy_eps_net(space, u.cut(alpha - eps - 1e-12), eps, budget);
            const bool covered =
                net_ok(net) &&
                semi_hausdorff(space, target,
                               GroundSet::points(std::get<EpsNet>(net).centers))
                    .leq(2.0 * eps + 1e-9);
            if (!covered) { report.forward_pass = false; break; }
        }
    }

    bool c_quarter = true;
    for (double alpha : alpha_grid)
        if (!net_ok(greedy_eps_net(space, tail_union(alpha), eps / 4.0, budget))) {
            c_quarter = false;
            break;
        }
    if (report.b && c_quarter) report.backward_pass = report.max_tail_dist <= 4.0 * eps;

    report.pass = report.forward_pass && report.backward_pass;
    return report;
}

}  // namespace hend
