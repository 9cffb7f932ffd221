#pragma once

#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "hend/space.hpp"

namespace hend {

/// Extended distance value: finite nonnegative or +infinity (the empty-set
/// conventions of the Hausdorff semi-distance need the latter).
struct ExtDist {
    double value = 0.0;
    bool infinite = false;

    static ExtDist finite(double v) { return ExtDist{v, false}; }
    static ExtDist inf() { return ExtDist{0.0, true}; }

    bool operator==(const ExtDist& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator<(const ExtDist& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    bool leq(double v) const { return !infinite && value <= v; }
};

inline ExtDist ext_max(const ExtDist& a, const ExtDist& b) { return a < b ? b : a; }

/// Closed interval over the real line; +-infinity allowed as endpoints
/// (then open at infinity). lo == hi encodes a single point.
struct Interval {
    double lo;
    double hi;
    bool operator==(const Interval&) const = default;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A represented subset of a GroundSpace: a finite point set, a finite
/// union of closed intervals over the real line, or the empty set.
class GroundSet {
public:
    enum class Kind { Empty, Points, Intervals };

    static GroundSet empty() { return GroundSet{}; }
    /// Deduplicates; an empty list yields the empty set.
    static GroundSet points(std::vector<Point> pts);
    /// Sorts and merges overlapping/touching intervals into canonical form.
    static GroundSet intervals(std::vector<Interval> ivs);
    static GroundSet interval(double lo, double hi) { return intervals({Interval{lo, hi}}); }

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    const std::vector<Point>& pts() const { return pts_; }
    const std::vector<Interval>& ivs() const { return ivs_; }

    bool bounded() const;
    bool unbounded_left() const { return kind_ == Kind::Intervals && ivs_.front().lo == -kInf; }
    bool unbounded_right() const { return kind_ == Kind::Intervals && ivs_.back().hi == kInf; }

    bool contains(const GroundSpace& space, const Point& p) const;
    bool subset_of(const GroundSpace& space, const GroundSet& other) const;
    bool operator==(const GroundSet&) const = default;

    /// inf_{y in this} d(p, y); +inf on the empty set.
    ExtDist dist_to(const GroundSpace& space, const Point& p) const;

    GroundSet unite(const GroundSet& other) const;

    /// Representative points: all points, or finite interval endpoints.
    std::vector<Point> sample_points() const;
    /// Endpoints plus a mesh of interior samples (intervals only).
    std::vector<Point> mesh_points(double mesh) const;

private:
    Kind kind_ = Kind::Empty;
    std::vector<Point> pts_;
    std::vector<Interval> ivs_;
};

// --- Hausdorff machinery -------------------------------------------------

/// H*(A,B) with the extended conventions: 0 if A empty, +inf if A nonempty
/// and B empty, else sup_{a in A} d(a,B). Interval unions are solved in
/// closed form; an unbounded direction of A unmatched by B gives +inf.
ExtDist semi_hausdorff(const GroundSpace& space, const GroundSet& a, const GroundSet& b);

/// H(A,B) = max of the two semi-distances.
ExtDist hausdorff(const GroundSpace& space, const GroundSet& a, const GroundSet& b);

// --- epsilon nets --------------------------------------------------------

struct EpsNet {
    std::vector<Point> centers;
    double radius = 0.0;
    GroundSet covered;
};

struct NetFailure {
    enum class Reason { Unbounded, BudgetExhausted } reason;
    std::optional<Point> witness;  // an uncovered point, when applicable
};

using NetResult = std::variant<EpsNet, NetFailure>;

inline bool net_ok(const NetResult& r) { return std::holds_alternative<EpsNet>(r); }

/// Greedy net: the first uncovered point in canonical order becomes the
/// next center (point order for finite sets, left to right for intervals).
/// Unbounded interval unions fail immediately.
NetResult greedy_eps_net(const GroundSpace& space, const GroundSet& a, double eps,
                         std::size_t budget);

// --- Kuratowski windows --------------------------------------------------

/// A finite window C_1..C_N of a set sequence plus the tail start used by
/// the convergence proxies.
struct SetSequenceWindow {
    std::vector<GroundSet> sets;
    std::size_t tail_start = 1;  // 1-based
};

struct ProbeVerdict {
    Point point;
    bool in_liminf = false;
    bool in_limsup = false;
};

/// Tolerance proxies for the Kuratowski liminf/limsup on a finite window:
/// liminf = within eps of every tail member; limsup = within eps of some
/// member in every suffix block of length ceil((N - tail_start)/4).
std::vector<ProbeVerdict> kuratowski_window(const GroundSpace& space,
                                            const SetSequenceWindow& w, double eps,
                                            const std::vector<Point>& probes);

struct ConvergenceVerdict {
    bool pass = true;
    std::optional<Point> failing_point;   // a limit point not approached
    std::optional<std::size_t> failing_index;  // a member with excess > eps (1-based)
};

/// Finite-window surrogate for C = K-lim C_n: every sampled point of C is
/// in the liminf proxy, and H*(C_n, C) <= eps for every tail member.
ConvergenceVerdict kuratowski_converges(const GroundSpace& space, const SetSequenceWindow& w,
                                        const GroundSet& c, double eps);

}  // namespace hend
