#pragma once

#include "hend/ground_set.hpp"

namespace hend {

/// A fuzzy set with finitely many distinct positive levels and nested cuts.
/// cut(alpha) = C_i for alpha in (a_{i-1}, a_i] (a_0 = 0), empty above the
/// top level. K = 0 encodes the empty fuzzy set.
class StepFuzzySet {
public:
    /// levels strictly increasing in (0,1]; cuts nested downward, nonempty.
    static StepFuzzySet from_cuts(SpacePtr space, std::vector<double> levels,
                                  std::vector<GroundSet> cuts);
    static StepFuzzySet empty_fuzzy(SpacePtr space) { return from_cuts(std::move(space), {}, {}); }
    /// chi_A: the characteristic fuzzy set of A (the empty fuzzy set for A = empty).
    static StepFuzzySet characteristic(SpacePtr space, GroundSet a);
    /// x-hat: chi of a singleton.
    static StepFuzzySet singleton(SpacePtr space, Point x);

    const SpacePtr& space() const { return space_; }
    const std::vector<double>& levels() const { return levels_; }
    const std::vector<GroundSet>& cuts() const { return cuts_; }
    std::size_t level_count() const { return levels_.size(); }
    bool is_empty_fuzzy() const { return levels_.empty(); }

    /// max level whose cut contains x, else 0.
    double membership(const Point& x) const;

    /// alpha in [0,1]; cut(0) is the lowest cut (closure of the support).
    GroundSet cut(double alpha) const;

    /// Height S_u: the top level, 0 for the empty fuzzy set. Always attained.
    double height() const { return levels_.empty() ? 0.0 : levels_.back(); }

    /// Inserts grid levels at multiples of delta below the height without
    /// changing the endograph.
    StepFuzzySet refine_levels(double delta) const;

    bool operator==(const StepFuzzySet& o) const {
        return levels_ == o.levels_ && cuts_ == o.cuts_ && space_->same(*o.space_);
    }

private:
    StepFuzzySet() = default;
    SpacePtr space_;
    std::vector<double> levels_;
    std::vector<GroundSet> cuts_;
};

/// Membership flags for the USC class chain and related predicates.
struct ClassReport {
    bool is_usc = true;       // closed cuts (always, by representation)
    bool is_uscg = true;      // compact positive cuts
    bool is_uscb = true;      // additionally compact support
    bool is_normal = false;   // height exactly 1 and attained
    bool height_attained = true;
    bool is_connected_cuts = false;  // real line only: every cut one interval
};

ClassReport classify(const StepFuzzySet& u);

}  // namespace hend
