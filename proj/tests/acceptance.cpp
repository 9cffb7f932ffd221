// End-to-end acceptance checks. Each test case audits one pinned criterion
// and prints a single verdict line so a log scan shows the full checklist.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "hend/compactness.hpp"
#include "hend/generators.hpp"

using namespace hend;
using Clock = std::chrono::steady_clock;

namespace {

const SpacePtr R = make_real_line();

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void verdict(int n, const char* name, bool ok) {
    std::printf("criterion %2d [%s]: %s\n", n, name, ok ? "pass" : "FAIL");
    std::fflush(stdout);
    CHECK_MESSAGE(ok, name);
}

double u01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

GroundSet random_point_set(std::mt19937_64& eng, std::size_t max_pts) {
    std::vector<Point> pts;
    const std::size_t k = 1 + eng() % max_pts;
    for (std::size_t i = 0; i < k; ++i) pts.push_back(Point::real(std::round(u01(eng) * 60) / 10.0));
    return GroundSet::points(std::move(pts));
}

GroundSet random_interval_union(std::mt19937_64& eng) {
    std::vector<Interval> ivs;
    const std::size_t k = 1 + eng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
        const double lo = std::round(u01(eng) * 50) / 10.0;
        ivs.push_back(Interval{lo, lo + 0.1 + std::round(u01(eng) * 12) / 10.0});
    }
    return GroundSet::intervals(std::move(ivs));
}

StepFuzzySet random_point_fuzzy(std::mt19937_64& eng) {
    std::vector<double> levels;
    const int k = 1 + static_cast<int>(eng() % 3);
    for (int i = 0; i < k; ++i) levels.push_back(0.15 + 0.8 * u01(eng));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<Point> cur;
    for (int i = 0; i < 4; ++i) cur.push_back(Point::real(std::round(u01(eng) * 40) / 10.0));
    std::vector<GroundSet> cuts;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        cuts.push_back(GroundSet::points(cur));
        if (cur.size() > 1) cur.pop_back();
    }
    return StepFuzzySet::from_cuts(R, std::move(levels), std::move(cuts));
}

StepFuzzySet random_interval_fuzzy(std::mt19937_64& eng) {
    std::vector<double> levels;
    const int k = 1 + static_cast<int>(eng() % 3);
    for (int i = 0; i < k; ++i) levels.push_back(0.15 + 0.8 * u01(eng));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    double a = std::round(u01(eng) * 20) / 10.0;
    double b = a + 0.4 + std::round(u01(eng) * 16) / 10.0;
    std::vector<GroundSet> cuts;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        cuts.push_back(GroundSet::interval(a, b));
        a = std::min(a + 0.1, b);
        b = std::max(a, b - 0.2);
    }
    return StepFuzzySet::from_cuts(R, std::move(levels), std::move(cuts));
}

StepFuzzySet random_mixed_fuzzy(std::mt19937_64& eng) {
    return (eng() & 1) ? random_point_fuzzy(eng) : random_interval_fuzzy(eng);
}

double ext_or_cap(const ExtDist& d, double cap) { return d.infinite ? cap : std::min(d.value, cap); }

// Dense-column oracle for the endograph distance over the real line: lay
// columns at pitch h across the joint support, read memberships pointwise,
// and take the worst column-top gap. For a source point (x, t) the gap to
// the target columns is min_j combine(|x - x_j|, max(0, t - m_j)), which is
// nondecreasing in t, so each source column peaks at its own top. Columns
// are scanned outward from the query and pruned once |x - x_j| alone
// exceeds the best gap.
double oracle_hend(ProductMetricVariant var, const StepFuzzySet& u, const StepFuzzySet& v,
                   double h) {
    auto combine = [var](double dx, double dt) {
        return var == ProductMetricVariant::Sum ? dx + dt : std::max(dx, dt);
    };
    std::vector<double> xs;
    double lo = kInf, hi = -kInf;
    for (const auto* f : {&u, &v})
        for (const auto& c : f->cuts())
            for (const Point& p : c.sample_points()) {
                xs.push_back(p.coords[0]);
                lo = std::min(lo, p.coords[0]);
                hi = std::max(hi, p.coords[0]);
            }
    for (double x = lo; x <= hi + h / 2; x += h) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const std::size_t n = xs.size();
    std::vector<double> mu(n), mv(n);
    for (std::size_t i = 0; i < n; ++i) {
        mu[i] = u.membership(Point::real(xs[i]));
        mv[i] = v.membership(Point::real(xs[i]));
    }
    auto semi = [&](const std::vector<double>& src, const std::vector<double>& dst) {
        double sup = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = src[i];
            if (t <= sup) continue;  // the gap never exceeds the query level
            double best = combine(0.0, std::max(0.0, t - dst[i]));
            for (std::size_t s = 1; s < n && best > 0; ++s) {
                bool moved = false;
                if (i >= s) {
                    const double dx = xs[i] - xs[i - s];
                    if (dx < best) {
                        moved = true;
                        best = std::min(best, combine(dx, std::max(0.0, t - dst[i - s])));
                    }
                }
                if (i + s < n) {
                    const double dx = xs[i + s] - xs[i];
                    if (dx < best) {
                        moved = true;
                        best = std::min(best, combine(dx, std::max(0.0, t - dst[i + s])));
                    }
                }
                if (!moved) break;
            }
            sup = std::max(sup, best);
        }
        return sup;
    };
    return std::max(semi(mu, mv), semi(mv, mu));
}

// Exact minimal eps-net size with centers drawn from the family, by set
// cover over all subset sizes.
template <typename Dist>
std::size_t brute_min_net(std::size_t n, double eps, Dist&& dist) {
    std::vector<std::uint64_t> covers(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dist(i, j) <= eps) covers[i] |= std::uint64_t{1} << j;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::size_t k = 0; k <= n; ++k) {
        std::function<bool(std::size_t, std::size_t, std::uint64_t)> rec =
            [&](std::size_t pos, std::size_t start, std::uint64_t got) {
                if (got == all) return true;
                if (pos == k) return false;
                for (std::size_t i = start; i < n; ++i)
                    if (rec(pos + 1, i + 1, got | covers[i])) return true;
                return false;
            };
        if (rec(0, 0, 0)) return k;
    }
    return n;
}

StepFuzzySet shift_fuzzy(const StepFuzzySet& u, double t) {
    std::vector<GroundSet> cuts;
    for (const auto& c : u.cuts()) {
        if (c.kind() == GroundSet::Kind::Intervals) {
            std::vector<Interval> ivs;
            for (const auto& iv : c.ivs()) ivs.push_back(Interval{iv.lo + t, iv.hi + t});
            cuts.push_back(GroundSet::intervals(std::move(ivs)));
        } else {
            std::vector<Point> pts;
            for (Point p : c.pts()) {
                p.coords[0] += t;
                pts.push_back(p);
            }
            cuts.push_back(GroundSet::points(std::move(pts)));
        }
    }
    return StepFuzzySet::from_cuts(u.space(), u.levels(), std::move(cuts));
}

std::vector<double> grid10() {
    std::vector<double> g;
    for (int i = 1; i <= 10; ++i) g.push_back(0.1 * i);
    return g;
}

}  // namespace

TEST_CASE("criterion 1") {
    const auto t0 = Clock::now();
    std::mt19937_64 eng(101);
    bool ok = true;
    for (int it = 0; it < 200 && ok; ++it) {
        const GroundSet a = (it < 100) ? random_point_set(eng, 5) : random_interval_union(eng);
        const GroundSet b = (it < 100) ? random_point_set(eng, 5) : random_interval_union(eng);
        const auto ca = StepFuzzySet::characteristic(R, a);
        const auto cb = StepFuzzySet::characteristic(R, b);
        const double want = ext_or_cap(hausdorff(*R, a, b), 1.0);
        const double want_semi = ext_or_cap(semi_hausdorff(*R, a, b), 1.0);
        ok = ok && std::abs(endograph_dist(ProductMetricVariant::Sum, ca, cb) - want) <= 1e-12;
        ok = ok && std::abs(endograph_semi(ProductMetricVariant::Sum, ca, cb) - want_semi) <= 1e-12;
    }
    ok = ok && seconds_since(t0) < 5.0;
    verdict(1, "chi identity", ok);
}

TEST_CASE("criteria 2 and 3") {
    const auto t0 = Clock::now();
    std::mt19937_64 eng(202);
    bool sandwich = true, heights = true;
    for (int it = 0; it < 500; ++it) {
        const auto u = random_mixed_fuzzy(eng);
        const auto v = random_mixed_fuzzy(eng);
        const double sum = endograph_dist(ProductMetricVariant::Sum, u, v);
        const double mx = endograph_dist(ProductMetricVariant::Max, u, v);
        sandwich = sandwich && mx <= sum + 1e-12 && sum <= 2.0 * mx + 1e-12;
        const double hu = u.height(), hv = v.height();
        heights = heights && std::abs(hu - hv) <= sum + 1e-12 && sum <= std::max(hu, hv) + 1e-12;
    }
    sandwich = sandwich && seconds_since(t0) < 10.0;
    verdict(2, "metric sandwich", sandwich);
    verdict(3, "height bounds", heights);
}

TEST_CASE("criterion 4") {
    std::mt19937_64 eng(404);
    std::vector<std::pair<StepFuzzySet, StepFuzzySet>> insts;
    for (int it = 0; it < 100; ++it)
        insts.emplace_back(it < 50 ? random_point_fuzzy(eng) : random_interval_fuzzy(eng),
                           it < 50 ? random_point_fuzzy(eng) : random_interval_fuzzy(eng));
    bool ok = true;
    for (const double h : {1e-2, 1e-3}) {
        const auto t0 = Clock::now();
        for (const auto& [u, v] : insts) {
            for (const auto var : {ProductMetricVariant::Sum, ProductMetricVariant::Max}) {
                const double exact = endograph_dist(var, u, v);
                const double approx = oracle_hend(var, u, v, h);
                ok = ok && std::abs(exact - approx) <= 2.0 * h;
            }
        }
        if (h == 1e-3) ok = ok && seconds_since(t0) < 60.0;
    }
    verdict(4, "oracle equivalence", ok);
}

TEST_CASE("criterion 5") {
    std::mt19937_64 eng(505);
    bool ok = true;
    int applied = 0;
    for (int it = 0; it < 300; ++it) {
        const auto u = random_mixed_fuzzy(eng);
        const auto v = random_mixed_fuzzy(eng);
        const double eps = 0.05 + 0.3 * u01(eng);
        const double beta = 0.7 * u01(eng);
        const double alpha = std::min(1.0, beta + eps + 0.2 * u01(eng));
        if (alpha > u.height()) continue;
        const double s = endograph_semi(ProductMetricVariant::Sum, u, v);
        const auto rep = cut_bound_check(u, v, alpha, beta, eps);
        ok = ok && rep.pass;
        if (s < eps) {
            ++applied;
            const ExtDist cs = semi_hausdorff(*R, u.cut(alpha), v.cut(beta));
            ok = ok && !cs.infinite && cs.value <= s + 1e-12;
            ok = ok && rep.hypothesis_met;
        }
    }
    ok = ok && applied > 0;
    verdict(5, "cut bound", ok);
}

TEST_CASE("criterion 6") {
    std::mt19937_64 eng(606);
    const SpacePtr E2 = make_euclidean(2);
    bool ok = true;
    for (int it = 0; it < 100 && ok; ++it) {
        std::vector<GroundSet> d;
        const std::size_t n = 5 + eng() % 6;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Point> pts;
            const std::size_t k = 1 + eng() % 4;
            for (std::size_t j = 0; j < k; ++j)
                pts.push_back(Point::eucl({u01(eng), u01(eng)}));
            d.push_back(GroundSet::points(std::move(pts)));
        }
        const double eps = 0.2 + 0.4 * u01(eng);
        const auto rep = kx_tb_audit(*E2, d, eps, n);
        ok = ok && rep.family_net_ok && rep.forward_pass && rep.backward_pass && rep.pass;

        auto dist = [&](std::size_t i, std::size_t j) {
            return ext_or_cap(hausdorff(*E2, d[i], d[j]), 1e9);
        };
        const std::size_t opt = brute_min_net(n, eps, dist);
        const std::size_t half = brute_min_net(n, eps / 2.0, dist);
        const std::size_t g = rep.family_net_size;
        ok = ok && opt <= g && g <= half;
        if (g >= 2) ok = ok && !kx_tb_audit(*E2, d, eps, g - 1).family_net_ok;
    }
    verdict(6, "set level tolerance audit", ok);
}

TEST_CASE("criterion 7") {
    const auto t0 = Clock::now();
    std::mt19937_64 eng(707);
    bool ok = true;
    for (int it = 0; it < 100 && ok; ++it) {
        RandomFamilySpec spec;
        spec.member_count = 20 + eng() % 181;
        const auto fam = gen_random_family(spec, eng());
        for (const double eps : {0.05, 0.1}) {
            const auto rep = tb_audit(fam, eps, grid10(), 4000);
            ok = ok && rep.family_net_ok && rep.cut_nets_ok && rep.forward_pass &&
                 rep.backward_pass && rep.pass;
        }
    }
    auto esc = gen_escaping(60, 10.0);
    FuzzyFamily ef{esc.members, std::nullopt};
    for (const double eps : {0.05, 0.1}) {
        const auto rep = tb_audit(ef, eps, grid10(), 16);
        ok = ok && !rep.family_net_ok && !rep.cut_nets_ok && rep.pass;
    }
    ok = ok && seconds_since(t0) < 120.0;
    verdict(7, "fuzzy level tolerance audit", ok);
}

TEST_CASE("criterion 8") {
    auto w = gen_nested_intervals(256);
    DiagonalSchedule s;
    s.xi = 1.0;
    for (int k = 1; k <= 6; ++k) {
        s.alpha.push_back(std::pow(2.0, -k));
        s.eps.push_back(std::pow(2.0, -k));
    }
    s.net_budget = 64;
    const auto r = diagonal_extract(w, s);
    bool ok = r.ok && r.subsequence.size() == 6;
    for (const auto& st : r.stages) ok = ok && st.residual <= st.bound + 1e-12;
    ok = ok && r.limit_fuzzy.has_value() && r.final_residuals.back() <= 0.05;

    auto esc = gen_escaping(64, 10.0);
    DiagonalSchedule es;
    es.xi = 1.0;
    es.alpha = {0.5};
    es.eps = {0.1};
    es.net_budget = 4;
    const auto er = diagonal_extract(esc, es);
    ok = ok && !er.ok && er.failed_stage == 1 &&
         er.error == ExtractionResult::Error::StageNetFailure && er.failure_witness.has_value();
    verdict(8, "diagonal extraction", ok);
}

TEST_CASE("criterion 9") {
    bool ok = true;
    for (const double r : {0.5, 1.0}) {
        auto [w, limit] = gen_example_rnce(r, 8, 1e-3);
        for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
            const double d = endograph_dist(ProductMetricVariant::Sum, w.members[n - 1], limit);
            ok = ok && std::abs(d - std::min(1.0 / static_cast<double>(n), r)) <= 1e-3;
        }
    }
    for (const double spacing : {0.25, 1.0}) {
        const auto w = gen_escaping(5, spacing);
        for (std::size_t k = 2; k <= 5; ++k) {
            const double d =
                endograph_dist(ProductMetricVariant::Sum, w.members[k - 1], w.members[0]);
            ok = ok && d == std::min(1.0, static_cast<double>(k - 1) * spacing);
        }
    }
    const auto osc = gen_oscillating(24);
    const auto probe = gamma_oscillation_probe(osc, 0.3);
    ok = ok && probe.oscillation && probe.witness.has_value();
    FuzzySeqWindow odd;
    for (std::size_t i = 0; i < osc.members.size(); i += 2) odd.members.push_back(osc.members[i]);
    const auto one_hat = StepFuzzySet::characteristic(R, GroundSet::points({Point::real(1.0)}));
    ok = ok && gamma_limit_check(odd, one_hat, 0.05).pass;
    verdict(9, "counterexample fidelity", ok);
}

TEST_CASE("criterion 10") {
    std::mt19937_64 eng(1010);
    bool ok = true;
    for (int it = 0; it < 50 && ok; ++it) {
        const auto u = random_mixed_fuzzy(eng);
        const double drift = (u01(eng) - 0.5) * 0.6;
        FuzzySeqWindow w;
        for (int n = 1; n <= 40; ++n)
            w.members.push_back(shift_fuzzy(u, drift / static_cast<double>(n)));
        w.tail_start = 20;
        const auto rep = hend_iff_gamma_plus_compact_audit(w, u, 0.05, grid10(), 512);
        ok = ok && rep.a && rep.b && rep.c && rep.forward_pass && rep.backward_pass && rep.pass;
    }
    auto esc = gen_escaping(40, 10.0);
    esc.tail_start = 5;
    const auto er =
        hend_iff_gamma_plus_compact_audit(esc, esc.members.front(), 0.1, grid10(), 8);
    ok = ok && !er.a && er.b && !er.c && er.pass;
    verdict(10, "convergence equivalence audit", ok);
}

TEST_CASE("criterion 11") {
    std::mt19937_64 eng(1111);
    bool ok = true;
    for (int it = 0; it < 500 && ok; ++it) {
        const auto u = random_mixed_fuzzy(eng);
        for (std::size_t i = 0; i < u.level_count(); ++i) {
            const auto again =
                StepFuzzySet::from_cuts(u.space(), u.levels(), u.cuts());
            ok = ok && again.cut(u.levels()[i]) == u.cuts()[i];
        }
    }
    for (int it = 0; it < 200 && ok; ++it) {
        const auto u = random_mixed_fuzzy(eng);
        ok = ok && reconstruct(end_view(u)) == u && reconstruct(send_view(u)) == u;
    }
    verdict(11, "representation round trips", ok);
}
