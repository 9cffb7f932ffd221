#pragma once

#include "hend/fuzzy.hpp"

namespace hend {

/// One horizontal slab of a subset of X x [0,1]: levels (lo, hi] share the
/// same body. Level ranges are treated as closed for distance purposes.
struct Slab {
    double lo;
    double hi;
    GroundSet body;
};

/// A finite stack of slabs, optionally sitting on a base slab at level 0
/// (the full space X x {0}, or a given set B x {0}). Encodes endograph-like
/// subsets of X x [0,1].
class SlabSet {
public:
    enum class BaseKind { None, Full, Set };

    static SlabSet make(SpacePtr space, std::vector<Slab> slabs,
                        BaseKind base_kind = BaseKind::None, GroundSet base = GroundSet::empty());

    const SpacePtr& space() const { return space_; }
    const std::vector<Slab>& slabs() const { return slabs_; }
    BaseKind base_kind() const { return base_kind_; }
    const GroundSet& base() const { return base_; }

    /// Levels at which the stack changes, ascending (slab bounds).
    std::vector<double> breakpoints() const;

private:
    SpacePtr space_;
    std::vector<Slab> slabs_;  // sorted by lo, disjoint level ranges
    BaseKind base_kind_ = BaseKind::None;
    GroundSet base_;
};

/// Result of slicing: either the full-space marker (base at level 0) or a
/// concrete ground set.
struct Slice {
    bool full_space = false;
    GroundSet set;
};

Slice slice(const SlabSet& s, double alpha);

/// end u: slabs from the step structure plus the base X x {0}.
SlabSet end_view(const StepFuzzySet& u);
/// send u: same slabs with base supp(u) x {0}.
SlabSet send_view(const StepFuzzySet& u);
/// end_r^t u = end u restricted to [u]_r x [r, t].
SlabSet truncated_view(const StepFuzzySet& u, double r, double t = 1.0);

/// Union of slab stacks (slicewise union of bodies), with the given base.
SlabSet slab_union(const std::vector<SlabSet>& parts, SlabSet::BaseKind base_kind);

/// Nested closed slices reaching down to level 0 (the monotone-slice
/// equivalence); p_uscb additionally requires compact bodies.
bool is_p_usc(const SlabSet& s);
bool is_p_uscb(const SlabSet& s);

/// The fuzzy set whose cuts are the positive-level slices of s.
StepFuzzySet reconstruct(const SlabSet& s);

/// Distance from a lifted point to end v under the chosen product metric.
/// Exact: min(t, min over levels j of combine(d(x, [v]_j), max(0, t - a_j))).
double point_to_endograph(ProductMetricVariant variant, const LiftedPoint& a,
                          const StepFuzzySet& v);

/// H*(end u, end v); always finite (the base X x {0} is shared).
double endograph_semi(ProductMetricVariant variant, const StepFuzzySet& u,
                      const StepFuzzySet& v);
/// H_end(u, v) = max of the two semi-distances.
double endograph_dist(ProductMetricVariant variant, const StepFuzzySet& u,
                      const StepFuzzySet& v);

/// H*(end_alpha u, end_alpha v) between truncated endographs (no base);
/// +inf when the source reaches level alpha but the target does not.
ExtDist truncated_semi(ProductMetricVariant variant, const StepFuzzySet& u,
                       const StepFuzzySet& v, double alpha);
ExtDist truncated_hausdorff(ProductMetricVariant variant, const StepFuzzySet& u,
                            const StepFuzzySet& v, double alpha);

/// Audit of the cut semi-distance bound: whenever H*(end u, end v) < eps
/// and alpha - beta >= eps, H*([u]_alpha, [v]_beta) <= H*(end u, end v).
struct CutBoundReport {
    double end_semi = 0.0;
    ExtDist cut_semi;
    bool hypothesis_met = false;
    bool pass = true;
};

CutBoundReport cut_bound_check(const StepFuzzySet& u, const StepFuzzySet& v, double alpha,
                               double beta, double eps);

}  // namespace hend
