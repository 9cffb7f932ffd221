#include "hend/endograph.hpp"

#include <algorithm>
#include <set>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace hend {

SlabSet SlabSet::make(SpacePtr space, std::vector<Slab> slabs, BaseKind base_kind,
                      GroundSet base) {
    if (!space) throw std::invalid_argument("null space");
    std::sort(slabs.begin(), slabs.end(),
              [](const Slab& a, const Slab& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i < slabs.size(); ++i) {
        const auto& s = slabs[i];
        if (!(s.lo >= 0.0 && s.lo <= s.hi && s.hi <= 1.0))
            throw std::invalid_argument("slab levels must satisfy 0 <= lo <= hi <= 1");
        // degenerate slabs (lo == hi) only arise as the floor of truncations
        if (i > 0 && s.lo < slabs[i - 1].hi)
            throw std::invalid_argument("slab level ranges must be disjoint");
    }
    SlabSet out;
    out.space_ = std::move(space);
    out.slabs_ = std::move(slabs);
    out.base_kind_ = base_kind;
    out.base_ = std::move(base);
    return out;
}

std::vector<double> SlabSet::breakpoints() const {
    std::vector<double> out;
    for (const auto& s : slabs_) {
        out.push_back(s.lo);
        out.push_back(s.hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Slice slice(const SlabSet& s, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0,1]");
    if (alpha == 0.0) {
        if (s.base_kind() == SlabSet::BaseKind::Full) return Slice{true, GroundSet::empty()};
        if (s.base_kind() == SlabSet::BaseKind::Set) return Slice{false, s.base()};
        // fall through: a slab may still reach level 0 only via lo == hi == 0
    }
    for (const auto& sl : s.slabs()) {
        if ((alpha > sl.lo && alpha <= sl.hi) || (sl.lo == sl.hi && alpha == sl.lo))
            return Slice{false, sl.body};
    }
    return Slice{false, GroundSet::empty()};
}

SlabSet end_view(const StepFuzzySet& u) {
    std::vector<Slab> slabs;
    double prev = 0.0;
    for (std::size_t i = 0; i < u.level_count(); ++i) {
        slabs.push_back(Slab{prev, u.levels()[i], u.cuts()[i]});
        prev = u.levels()[i];
    }
    return SlabSet::make(u.space(), std::move(slabs), SlabSet::BaseKind::Full);
}

SlabSet send_view(const StepFuzzySet& u) {
    std::vector<Slab> slabs;
    double prev = 0.0;
    for (std::size_t i = 0; i < u.level_count(); ++i) {
        slabs.push_back(Slab{prev, u.levels()[i], u.cuts()[i]});
        prev = u.levels()[i];
    }
    const GroundSet supp = u.is_empty_fuzzy() ? GroundSet::empty() : u.cuts().front();
    return SlabSet::make(u.space(), std::move(slabs),
                         u.is_empty_fuzzy() ? SlabSet::BaseKind::None : SlabSet::BaseKind::Set,
                         supp);
}

SlabSet truncated_view(const StepFuzzySet& u, double r, double t) {
    if (!(r >= 0.0 && r <= t && t <= 1.0)) throw std::invalid_argument("need 0 <= r <= t <= 1");
    std::vector<Slab> slabs;
    double prev = 0.0;
    for (std::size_t i = 0; i < u.level_count(); ++i) {
        const double lo = std::max(r, prev);
        const double hi = std::min(t, u.levels()[i]);
        if (hi > lo || (hi == lo && hi == r))
            slabs.push_back(Slab{lo, hi, u.cuts()[i]});
        prev = u.levels()[i];
    }
    return SlabSet::make(u.space(), std::move(slabs), SlabSet::BaseKind::None);
}

SlabSet slab_union(const std::vector<SlabSet>& parts, SlabSet::BaseKind base_kind) {
    if (parts.empty()) throw std::invalid_argument("empty slab union");
    std::vector<double> levels;
    for (const auto& p : parts)
        for (double b : p.breakpoints()) levels.push_back(b);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    auto union_at = [&](double a) {
        GroundSet body = GroundSet::empty();
        for (const auto& p : parts) {
            const Slice s = slice(p, a);
            if (!s.full_space) body = body.unite(s.set);
        }
        return body;
    };

    std::vector<Slab> slabs;
    if (!levels.empty()) {
        const GroundSet floor = union_at(levels.front());
        if (!floor.is_empty()) slabs.push_back(Slab{levels.front(), levels.front(), floor});
        for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
            GroundSet body = union_at(levels[i + 1]);
            if (body.is_empty()) continue;
            if (!slabs.empty() && slabs.back().hi == levels[i] && slabs.back().body == body)
                slabs.back().hi = levels[i + 1];
            else
                slabs.push_back(Slab{levels[i], levels[i + 1], body});
        }
        // a degenerate floor slab swallowed by the next slab is redundant
        if (slabs.size() >= 2 && slabs[0].lo == slabs[0].hi && slabs[1].lo == slabs[0].lo &&
            slabs[0].body.subset_of(*parts.front().space(), slabs[1].body))
            slabs.erase(slabs.begin());
    }
    return SlabSet::make(parts.front().space(), std::move(slabs), base_kind);
}

namespace {

bool body_compact(const GroundSpace& space, const GroundSet& b) {
    (void)space;
    return b.bounded();
}

}  // namespace

bool is_p_usc(const SlabSet& s) {
    const auto& slabs = s.slabs();
    for (std::size_t i = 0; i + 1 < slabs.size(); ++i) {
        if (slabs[i + 1].lo != slabs[i].hi) return false;  // gap: intersection fails
        if (!slabs[i + 1].body.subset_of(*s.space(), slabs[i].body)) return false;
    }
    if (!slabs.empty()) {
        if (slabs.front().lo != 0.0) return false;  // must reach down to the base
        if (s.base_kind() == SlabSet::BaseKind::Set &&
            !slabs.front().body.subset_of(*s.space(), s.base()))
            return false;
        if (s.base_kind() == SlabSet::BaseKind::None) return false;
    }
    return true;
}

bool is_p_uscb(const SlabSet& s) {
    if (!is_p_usc(s)) return false;
    for (const auto& sl : s.slabs())
        if (!body_compact(*s.space(), sl.body)) return false;
    switch (s.base_kind()) {
        case SlabSet::BaseKind::None:
            return true;
        case SlabSet::BaseKind::Set:
            return body_compact(*s.space(), s.base());
        case SlabSet::BaseKind::Full:
            return s.space()->backend() == GroundSpace::Backend::PointCloud;
    }
    return false;
}

StepFuzzySet reconstruct(const SlabSet& s) {
    // Nested contiguous stacks only. Over a Full base the floor may sit
    // above level 0 (the step semantics extend the lowest body downward),
    // which absorbs the truncated limit sets of the diagonal extraction;
    // any other base requires the stack to reach level 0.
    const auto& slabs = s.slabs();
    for (std::size_t i = 0; i + 1 < slabs.size(); ++i) {
        if (slabs[i + 1].lo != slabs[i].hi)
            throw std::domain_error("reconstruct: slab stack has a level gap");
        if (!slabs[i + 1].body.subset_of(*s.space(), slabs[i].body))
            throw std::domain_error("reconstruct: slab bodies are not nested");
    }
    if (!slabs.empty() && s.base_kind() != SlabSet::BaseKind::Full && slabs.front().lo != 0.0)
        throw std::domain_error("reconstruct: slab stack does not reach its base");
    if (!slabs.empty() && s.base_kind() == SlabSet::BaseKind::Set &&
        !slabs.front().body.subset_of(*s.space(), s.base()))
        throw std::domain_error("reconstruct: body exceeds the base slab");
    std::vector<double> levels;
    std::vector<GroundSet> cuts;
    for (const auto& sl : slabs) {
        if (sl.body.is_empty()) continue;
        levels.push_back(sl.hi);
        cuts.push_back(sl.body);
    }
    return StepFuzzySet::from_cuts(s.space(), std::move(levels), std::move(cuts));
}

// --- distance kernels ----------------------------------------------------

double point_to_endograph(ProductMetricVariant variant, const LiftedPoint& a,
                          const StepFuzzySet& v) {
    if (a.t < 0.0 || a.t > 1.0) throw std::domain_error("level must lie in [0,1]");
    double best = a.t;  // the base X x {0} is always available
    for (std::size_t j = 0; j < v.level_count(); ++j) {
        const double off = std::max(0.0, a.t - v.levels()[j]);
        const ExtDist dx = v.cuts()[j].dist_to(*v.space(), a.x);
        best = std::min(best, combine(variant, dx.value, off));
    }
    return best;
}

namespace {

struct TargetTerm {
    const GroundSet* cut = nullptr;
    std::vector<Interval> ivs;
    double off = 0.0;
    bool unb_left = false;
    bool unb_right = false;
};

std::vector<Interval> lifted_intervals(const GroundSet& s) {
    if (s.kind() == GroundSet::Kind::Intervals) return s.ivs();
    std::vector<Interval> out;
    for (const auto& p : s.pts()) out.push_back(Interval{p.coords.at(0), p.coords.at(0)});
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

double dist_to_ivs(const std::vector<Interval>& ivs, double x) {
    double best = kInf;
    for (const auto& iv : ivs) {
        double d = 0.0;
        if (x < iv.lo) d = iv.lo - x;
        else if (x > iv.hi) d = x - iv.hi;
        best = std::min(best, d);
    }
    return best;
}

// Piecewise-linear function over R with slopes in {-1, 0, +1}: knot
// positions kx (sorted), values kv at the knots, and slopes for the
// kx.size()+1 pieces (leading ray, interior segments, trailing ray).
struct PwLin {
    std::vector<double> kx;
    std::vector<double> kv;
    std::vector<int> slope;
};

// True slopes are exactly -1, 0 or +1; rounding the value ratio guards
// against ulp-level noise at inserted knots.
int seg_slope(double x0, double v0, double x1, double v1) {
    const double dv = v1 - v0;
    if (std::abs(dv) < 0.5 * (x1 - x0)) return 0;
    return dv > 0 ? 1 : -1;
}

// d(x, union of intervals): knots at finite endpoints and gap midpoints.
PwLin pw_from_ivs(const std::vector<Interval>& ivs) {
    PwLin pw;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        if (ivs[i].lo != -kInf) pw.kx.push_back(ivs[i].lo);
        if (ivs[i].hi != kInf && ivs[i].hi != ivs[i].lo) pw.kx.push_back(ivs[i].hi);
        if (i + 1 < ivs.size()) pw.kx.push_back(0.5 * (ivs[i].hi + ivs[i + 1].lo));
    }
    if (pw.kx.empty()) pw.kx.push_back(0.0);  // the whole line
    std::sort(pw.kx.begin(), pw.kx.end());
    pw.kx.erase(std::unique(pw.kx.begin(), pw.kx.end()), pw.kx.end());
    for (double x : pw.kx) pw.kv.push_back(dist_to_ivs(ivs, x));
    pw.slope.push_back(ivs.front().lo == -kInf ? 0 : -1);
    for (std::size_t i = 1; i < pw.kx.size(); ++i)
        pw.slope.push_back(seg_slope(pw.kx[i - 1], pw.kv[i - 1], pw.kx[i], pw.kv[i]));
    pw.slope.push_back(ivs.back().hi == kInf ? 0 : 1);
    return pw;
}

// max(f, floor): insert knots where f crosses the floor, then clamp.
PwLin pw_clamp_below(const PwLin& f, double floor_v) {
    std::vector<double> xs = f.kx;
    if (f.slope.front() == -1 && f.kv.front() < floor_v)
        xs.push_back(f.kx.front() - (floor_v - f.kv.front()));
    if (f.slope.back() == 1 && f.kv.back() < floor_v)
        xs.push_back(f.kx.back() + (floor_v - f.kv.back()));
    for (std::size_t i = 1; i < f.kx.size(); ++i) {
        const double vp = f.kv[i - 1], vq = f.kv[i];
        if ((vp - floor_v) * (vq - floor_v) < 0.0)
            xs.push_back(f.kx[i - 1] +
                         (f.kx[i] - f.kx[i - 1]) * (floor_v - vp) / (vq - vp));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto eval_f = [&](double x) {
        if (x <= f.kx.front()) return f.kv.front() + std::abs(f.slope.front() * (f.kx.front() - x));
        if (x >= f.kx.back()) return f.kv.back() + std::abs(f.slope.back() * (x - f.kx.back()));
        const auto it = std::lower_bound(f.kx.begin(), f.kx.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - f.kx.begin());
        if (f.kx[i] == x) return f.kv[i];
        return f.kv[i - 1] + f.slope[i] * (x - f.kx[i - 1]);
    };

    PwLin g;
    g.kx = xs;
    for (double x : xs) g.kv.push_back(std::max(eval_f(x), floor_v));
    // beyond the outermost knots f sits at or above the floor (crossings
    // were inserted), so the rays keep f's slopes
    g.slope.push_back(f.slope.front() == -1 ? -1 : 0);
    for (std::size_t i = 1; i < g.kx.size(); ++i)
        g.slope.push_back(seg_slope(g.kx[i - 1], g.kv[i - 1], g.kx[i], g.kv[i]));
    g.slope.push_back(f.slope.back() == 1 ? 1 : 0);
    return g;
}

// Intercept of piece `i` of pw: up pieces store v-x, down pieces v+x,
// flat pieces the value itself.
struct PieceEntry {
    int cls = 0;  // -1 down, 0 flat, +1 up
    double c = 0.0;
};

PieceEntry piece_entry(const PwLin& pw, std::size_t piece) {
    const std::size_t a = piece == 0 ? 0 : piece - 1;
    const int s = pw.slope[piece];
    if (s > 0) return {1, pw.kv[a] - pw.kx[a]};
    if (s < 0) return {-1, pw.kv[a] + pw.kx[a]};
    return {0, pw.kv[a]};
}

// sup over x in src of min(cap, min_j combine(d(x, T_j), off_j)), exact.
// Every branch is piecewise linear with slopes in {-1,0,+1}, so on any
// knot-free segment the envelope is min(flat, up_0 + x, dn_0 - x), a
// concave function whose max is closed form; a sweep over all knots with
// per-slope-class intercept multisets gives the global sup. Unbounded
// source tails use their limit values; +infinity reports via the flag.
double sup_over_interval_source(ProductMetricVariant variant, const std::vector<Interval>& src,
                                const std::vector<TargetTerm>& targets, std::optional<double> cap,
                                bool& infinite) {
    infinite = false;
    if (src.empty()) return 0.0;
    if (targets.empty()) {
        if (!cap) { infinite = true; return 0.0; }
        return *cap;
    }

    std::vector<PwLin> pws;
    pws.reserve(targets.size());
    for (const auto& t : targets) {
        PwLin pw = pw_from_ivs(t.ivs);
        if (variant == ProductMetricVariant::Sum) {
            for (double& v : pw.kv) v += t.off;
        } else {
            pw = pw_clamp_below(pw, t.off);
        }
        pws.push_back(std::move(pw));
    }

    struct Ev {
        double x;
        int term;  // -1: src boundary only
    };
    std::vector<Ev> evs;
    for (std::size_t j = 0; j < pws.size(); ++j)
        for (double x : pws[j].kx) evs.push_back({x, static_cast<int>(j)});
    for (const auto& iv : src) {
        if (iv.lo != -kInf) evs.push_back({iv.lo, -1});
        if (iv.hi != kInf) evs.push_back({iv.hi, -1});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) { return a.x < b.x; });

    std::multiset<double> up, dn, fl;
    std::vector<std::size_t> piece(pws.size(), 0);
    auto insert_entry = [&](const PieceEntry& e) {
        (e.cls > 0 ? up : e.cls < 0 ? dn : fl).insert(e.c);
    };
    auto erase_entry = [&](const PieceEntry& e) {
        auto& s = e.cls > 0 ? up : e.cls < 0 ? dn : fl;
        s.erase(s.find(e.c));
    };
    for (const auto& pw : pws) insert_entry(piece_entry(pw, 0));

    auto in_src = [&](double x) {
        for (const auto& iv : src)
            if (iv.lo <= x && x <= iv.hi) return true;
        return false;
    };
    const double cap_v = cap ? *cap : kInf;
    auto env_at = [&](double x) {
        double e = cap_v;
        if (!fl.empty()) e = std::min(e, *fl.begin());
        if (!up.empty()) e = std::min(e, *up.begin() + x);
        if (!dn.empty()) e = std::min(e, *dn.begin() - x);
        return e;
    };

    double sup = 0.0;
    double prev = -kInf;
    std::size_t i = 0;
    while (i < evs.size()) {
        const double x = evs[i].x;
        // segment (prev, x) under the current class state
        if (prev != -kInf && in_src(prev)) sup = std::max(sup, env_at(prev));
        if (in_src(x)) sup = std::max(sup, env_at(x));
        const double probe = prev == -kInf ? x - 1.0 : 0.5 * (prev + x);
        if (in_src(probe) && !up.empty() && !dn.empty()) {
            const double peak = 0.5 * (*dn.begin() - *up.begin());
            if (peak > prev && peak < x)
                sup = std::max(sup, std::min(env_at(peak), cap_v));
        }
        while (i < evs.size() && evs[i].x == x) {
            const int j = evs[i].term;
            if (j >= 0) {
                erase_entry(piece_entry(pws[j], piece[j]));
                ++piece[j];
                insert_entry(piece_entry(pws[j], piece[j]));
            }
            ++i;
        }
        prev = x;
    }
    if (prev != -kInf && in_src(prev)) sup = std::max(sup, env_at(prev));

    // tails of unbounded source intervals
    auto tail_limit = [&](bool left) {
        double lim = cap_v;
        for (const auto& t : targets)
            if (left ? t.unb_left : t.unb_right) lim = std::min(lim, t.off);
        return lim;
    };
    if (src.front().lo == -kInf) {
        const double lim = tail_limit(true);
        if (lim == kInf) { infinite = true; return 0.0; }
        sup = std::max(sup, lim);
    }
    if (src.back().hi == kInf) {
        const double lim = tail_limit(false);
        if (lim == kInf) { infinite = true; return 0.0; }
        sup = std::max(sup, lim);
    }
    return sup;
}

std::vector<TargetTerm> targets_for(const StepFuzzySet& v, double t, double min_level) {
    std::vector<TargetTerm> out;
    for (std::size_t j = 0; j < v.level_count(); ++j) {
        if (v.levels()[j] < min_level) continue;
        TargetTerm term;
        term.cut = &v.cuts()[j];
        if (v.space()->backend() == GroundSpace::Backend::RealLine)
            term.ivs = lifted_intervals(v.cuts()[j]);
        term.off = std::max(0.0, t - v.levels()[j]);
        term.unb_left = v.cuts()[j].unbounded_left();
        term.unb_right = v.cuts()[j].unbounded_right();
        out.push_back(std::move(term));
    }
    return out;
}

}  // namespace

double endograph_semi(ProductMetricVariant variant, const StepFuzzySet& u,
                      const StepFuzzySet& v) {
    if (!u.space()->same(*v.space())) throw std::domain_error("fuzzy sets over different spaces");
    double best = 0.0;
    for (std::size_t i = 0; i < u.level_count(); ++i) {
        const double t = u.levels()[i];
        const GroundSet& c = u.cuts()[i];
        if (c.kind() == GroundSet::Kind::Points) {
            for (const auto& p : c.pts())
                best = std::max(best, point_to_endograph(variant, LiftedPoint{p, t}, v));
        } else {
            bool infinite = false;
            const double s = sup_over_interval_source(variant, c.ivs(), targets_for(v, t, 0.0),
                                                      t, infinite);
            best = std::max(best, s);  // never infinite: the base caps at t
        }
    }
    return best;
}

double endograph_dist(ProductMetricVariant variant, const StepFuzzySet& u,
                      const StepFuzzySet& v) {
    return std::max(endograph_semi(variant, u, v), endograph_semi(variant, v, u));
}

ExtDist truncated_semi(ProductMetricVariant variant, const StepFuzzySet& u,
                       const StepFuzzySet& v, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
    if (u.height() < alpha) return ExtDist::finite(0.0);  // empty truncation
    if (v.height() < alpha) return ExtDist::inf();
    double best = 0.0;
    for (std::size_t i = 0; i < u.level_count(); ++i) {
        if (u.levels()[i] < alpha) continue;
        const double t = u.levels()[i];
        const GroundSet& c = u.cuts()[i];
        const auto targets = targets_for(v, t, alpha);
        if (c.kind() == GroundSet::Kind::Points) {
            for (const auto& p : c.pts()) {
                double dp = kInf;
                for (const auto& term : targets) {
                    const ExtDist dx = term.cut->dist_to(*u.space(), p);
                    dp = std::min(dp, combine(variant, dx.value, term.off));
                }
                best = std::max(best, dp);
            }
        } else {
            bool infinite = false;
            const double s =
                sup_over_interval_source(variant, c.ivs(), targets, std::nullopt, infinite);
            if (infinite) return ExtDist::inf();
            best = std::max(best, s);
        }
    }
    return ExtDist::finite(best);
}

ExtDist truncated_hausdorff(ProductMetricVariant variant, const StepFuzzySet& u,
                            const StepFuzzySet& v, double alpha) {
    return ext_max(truncated_semi(variant, u, v, alpha), truncated_semi(variant, v, u, alpha));
}

CutBoundReport cut_bound_check(const StepFuzzySet& u, const StepFuzzySet& v, double alpha,
                               double beta, double eps) {
    if (!(eps > 0.0) || alpha - beta < eps)
        throw std::domain_error("cut_bound_check requires alpha - beta >= eps > 0");
    CutBoundReport r;
    r.end_semi = endograph_semi(ProductMetricVariant::Sum, u, v);
    r.cut_semi = semi_hausdorff(*u.space(), u.cut(alpha), v.cut(beta));
    r.hypothesis_met = r.end_semi < eps;
    r.pass = !r.hypothesis_met || r.cut_semi.leq(r.end_semi + 1e-12);
    return r;
}

}  // namespace hend
