#include "hend/ground_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hend {

GroundSet GroundSet::points(std::vector<Point> pts) {
    std::vector<Point> uniq;
    for (auto& p : pts)
        if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(std::move(p));
    if (uniq.empty()) return empty();
    GroundSet s;
    s.kind_ = Kind::Points;
    s.pts_ = std::move(uniq);
    return s;
}

GroundSet GroundSet::intervals(std::vector<Interval> ivs) {
    for (const auto& iv : ivs) {
        if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.lo > iv.hi)
            throw std::invalid_argument("interval endpoints must satisfy lo <= hi");
        if (iv.lo == kInf || iv.hi == -kInf)
            throw std::invalid_argument("interval may not degenerate at infinity");
    }
    if (ivs.empty()) return empty();
    std::sort(ivs.begin(), ivs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& iv : ivs) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    GroundSet s;
    s.kind_ = Kind::Intervals;
    s.ivs_ = std::move(merged);
    return s;
}

bool GroundSet::bounded() const {
    if (kind_ != Kind::Intervals) return true;
    return !unbounded_left() && !unbounded_right();
}

bool GroundSet::contains(const GroundSpace& space, const Point& p) const {
    switch (kind_) {
        case Kind::Empty:
            return false;
        case Kind::Points:
            for (const auto& q : pts_)
                if (space.dist(p, q) == 0.0) return true;
            return false;
        case Kind::Intervals: {
            const double x = p.coords.at(0);
            for (const auto& iv : ivs_)
                if (iv.lo <= x && x <= iv.hi) return true;
            return false;
        }
    }
    return false;
}

bool GroundSet::subset_of(const GroundSpace& space, const GroundSet& other) const {
    switch (kind_) {
        case Kind::Empty:
            return true;
        case Kind::Points:
            for (const auto& p : pts_)
                if (!other.contains(space, p)) return false;
            return true;
        case Kind::Intervals:
            if (other.kind_ == Kind::Intervals) {
                for (const auto& iv : ivs_) {
                    bool covered = false;
                    for (const auto& jv : other.ivs_)
                        if (jv.lo <= iv.lo && iv.hi <= jv.hi) { covered = true; break; }
                    if (!covered) return false;
                }
                return true;
            }
            // a union of intervals fits in a finite point set only degenerately
            for (const auto& iv : ivs_) {
                if (iv.lo != iv.hi) return false;
                if (!other.contains(space, Point::real(iv.lo))) return false;
            }
            return true;
    }
    return true;
}

ExtDist GroundSet::dist_to(const GroundSpace& space, const Point& p) const {
    switch (kind_) {
        case Kind::Empty:
            return ExtDist::inf();
        case Kind::Points: {
            double best = kInf;
            for (const auto& q : pts_) best = std::min(best, space.dist(p, q));
            return ExtDist::finite(best);
        }
        case Kind::Intervals: {
            const double x = p.coords.at(0);
            double best = kInf;
            for (const auto& iv : ivs_) {
                double d = 0.0;
                if (x < iv.lo) d = iv.lo - x;
                else if (x > iv.hi) d = x - iv.hi;
                best = std::min(best, d);
            }
            return ExtDist::finite(best);
        }
    }
    return ExtDist::inf();
}

GroundSet GroundSet::unite(const GroundSet& other) const {
    if (is_empty()) return other;
    if (other.is_empty()) return *this;
    if (kind_ == other.kind_) {
        if (kind_ == Kind::Points) {
            std::vector<Point> all = pts_;
            all.insert(all.end(), other.pts_.begin(), other.pts_.end());
            return points(std::move(all));
        }
        std::vector<Interval> all = ivs_;
        all.insert(all.end(), other.ivs_.begin(), other.ivs_.end());
        return intervals(std::move(all));
    }
    // mixed kinds only arise on the real line; lift points to degenerate intervals
    auto lift = [](const GroundSet& s) {
        std::vector<Interval> out = s.ivs_;
        for (const auto& p : s.pts_) out.push_back(Interval{p.coords.at(0), p.coords.at(0)});
        return out;
    };
    auto all = lift(*this);
    auto more = lift(other);
    all.insert(all.end(), more.begin(), more.end());
    return intervals(std::move(all));
}

std::vector<Point> GroundSet::sample_points() const {
    std::vector<Point> out;
    if (kind_ == Kind::Points) return pts_;
    for (const auto& iv : ivs_) {
        if (iv.lo != -kInf) out.push_back(Point::real(iv.lo));
        if (iv.hi != kInf && iv.hi != iv.lo) out.push_back(Point::real(iv.hi));
    }
    return out;
}

std::vector<Point> GroundSet::mesh_points(double mesh) const {
    if (kind_ != Kind::Intervals) return sample_points();
    std::vector<Point> out;
    for (const auto& iv : ivs_) {
        // unbounded sides are sampled a few steps beyond the finite endpoint
        double lo = iv.lo == -kInf ? (iv.hi == kInf ? -10.0 * mesh : iv.hi - 10.0 * mesh) : iv.lo;
        double hi = iv.hi == kInf ? (iv.lo == -kInf ? 10.0 * mesh : iv.lo + 10.0 * mesh) : iv.hi;
        // cap the sample count per interval; the mesh only tightens probes
        const double step = std::max(mesh, (hi - lo) / 100000.0);
        for (double x = lo; x < hi; x += step) out.push_back(Point::real(x));
        out.push_back(Point::real(hi));
    }
    return out;
}

// --- Hausdorff -----------------------------------------------------------

namespace {

// Closed-form sup_{x in A} d(x, B) for interval unions over the real line.
// Peaks of d(., B) are at gap midpoints of B; restricted to A the sup is
// attained at a finite endpoint of A or at a gap midpoint of B inside A.
double interval_semi(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    auto dist_b = [&](double x) {
        double best = kInf;
        for (const auto& iv : b) {
            double d = 0.0;
            if (x < iv.lo) d = iv.lo - x;
            else if (x > iv.hi) d = x - iv.hi;
            best = std::min(best, d);
        }
        return best;
    };
    auto in_a = [&](double x) {
        for (const auto& iv : a)
            if (iv.lo <= x && x <= iv.hi) return true;
        return false;
    };
    double sup = 0.0;
    for (const auto& iv : a) {
        if (iv.lo != -kInf) sup = std::max(sup, dist_b(iv.lo));
        if (iv.hi != kInf) sup = std::max(sup, dist_b(iv.hi));
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const double mid = 0.5 * (b[i].hi + b[i + 1].lo);
        if (in_a(mid)) sup = std::max(sup, dist_b(mid));
    }
    return sup;
}

std::vector<Interval> as_intervals(const GroundSet& s) {
    if (s.kind() == GroundSet::Kind::Intervals) return s.ivs();
    std::vector<Interval> out;
    for (const auto& p : s.pts()) out.push_back(Interval{p.coords.at(0), p.coords.at(0)});
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace

ExtDist semi_hausdorff(const GroundSpace& space, const GroundSet& a, const GroundSet& b) {
    if (a.is_empty()) return ExtDist::finite(0.0);
    if (b.is_empty()) return ExtDist::inf();
    const bool interval_case =
        a.kind() == GroundSet::Kind::Intervals || b.kind() == GroundSet::Kind::Intervals;
    if (interval_case) {
        if (space.backend() != GroundSpace::Backend::RealLine)
            throw std::domain_error("interval sets require the real-line backend");
        if ((a.unbounded_left() && !b.unbounded_left()) ||
            (a.unbounded_right() && !b.unbounded_right()))
            return ExtDist::inf();
        return ExtDist::finite(interval_semi(as_intervals(a), as_intervals(b)));
    }
    double sup = 0.0;
    for (const auto& p : a.pts()) {
        const ExtDist d = b.dist_to(space, p);
        sup = std::max(sup, d.value);
    }
    return ExtDist::finite(sup);
}

ExtDist hausdorff(const GroundSpace& space, const GroundSet& a, const GroundSet& b) {
    return ext_max(semi_hausdorff(space, a, b), semi_hausdorff(space, b, a));
}

// --- epsilon nets --------------------------------------------------------

NetResult greedy_eps_net(const GroundSpace& space, const GroundSet& a, double eps,
                         std::size_t budget) {
    if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    EpsNet net;
    net.radius = eps;
    net.covered = a;
    if (a.is_empty()) return net;

    if (a.kind() == GroundSet::Kind::Points) {
        for (const auto& p : a.pts()) {
            bool covered = false;
            for (const auto& c : net.centers)
                if (space.dist(p, c) <= eps) { covered = true; break; }
            if (covered) continue;
            if (net.centers.size() == budget)
                return NetFailure{NetFailure::Reason::BudgetExhausted, p};
            net.centers.push_back(p);
        }
        return net;
    }

    if (!a.bounded()) return NetFailure{NetFailure::Reason::Unbounded, std::nullopt};
    double cov = -kInf;  // coverage is a growing prefix: centers ascend
    for (const auto& iv : a.ivs()) {
        while (cov < iv.hi) {
            const double c = std::max(iv.lo, cov);
            if (iv.hi <= cov) break;
            if (net.centers.size() == budget) {
                const double witness = std::min(iv.hi, cov + eps);
                return NetFailure{NetFailure::Reason::BudgetExhausted, Point::real(witness)};
            }
            net.centers.push_back(Point::real(c));
            cov = c + eps;
        }
    }
    return net;
}

// --- Kuratowski windows --------------------------------------------------

namespace {

std::size_t block_length(const SetSequenceWindow& w) {
    const std::size_t n = w.sets.size();
    const std::size_t span = n >= w.tail_start ? n - w.tail_start : 0;
    return std::max<std::size_t>(1, (span + 3) / 4);
}

}  // namespace

std::vector<ProbeVerdict> kuratowski_window(const GroundSpace& space,
                                            const SetSequenceWindow& w, double eps,
                                            const std::vector<Point>& probes) {
    if (w.tail_start < 1 || w.tail_start > w.sets.size())
        throw std::invalid_argument("tail_start out of range");
    const std::size_t n = w.sets.size();
    const std::size_t blk = block_length(w);
    std::vector<ProbeVerdict> out;
    out.reserve(probes.size());
    for (const auto& p : probes) {
        ProbeVerdict v;
        v.point = p;
        v.in_liminf = true;
        for (std::size_t i = w.tail_start; i <= n; ++i)
            if (!w.sets[i - 1].dist_to(space, p).leq(eps)) { v.in_liminf = false; break; }
        v.in_limsup = true;
        for (std::size_t start = w.tail_start; start <= n; start += blk) {
            const std::size_t stop = std::min(n, start + blk - 1);
            bool hit = false;
            for (std::size_t i = start; i <= stop; ++i)
                if (w.sets[i - 1].dist_to(space, p).leq(eps)) { hit = true; break; }
            if (!hit) { v.in_limsup = false; break; }
        }
        out.push_back(std::move(v));
    }
    return out;
}

ConvergenceVerdict kuratowski_converges(const GroundSpace& space, const SetSequenceWindow& w,
                                        const GroundSet& c, double eps) {
    ConvergenceVerdict verdict;
    std::vector<Point> probes =
        c.kind() == GroundSet::Kind::Intervals ? c.mesh_points(eps / 2.0) : c.sample_points();
    const auto reports = kuratowski_window(space, w, eps, probes);
    for (const auto& r : reports) {
        if (!r.in_liminf) {
            verdict.pass = false;
            verdict.failing_point = r.point;
            for (std::size_t i = w.tail_start; i <= w.sets.size(); ++i) {
                if (!w.sets[i - 1].dist_to(space, r.point).leq(eps)) {
                    verdict.failing_index = i;
                    break;
                }
            }
            return verdict;
        }
    }
    for (std::size_t i = w.tail_start; i <= w.sets.size(); ++i) {
        if (!semi_hausdorff(space, w.sets[i - 1], c).leq(eps)) {
            verdict.pass = false;
            verdict.failing_index = i;
            return verdict;
        }
    }
    return verdict;
}

}  // namespace hend
