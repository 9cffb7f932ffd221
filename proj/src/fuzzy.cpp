#include "hend/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hend {

StepFuzzySet StepFuzzySet::from_cuts(SpacePtr space, std::vector<double> levels,
                                     std::vector<GroundSet> cuts) {
    if (!space) throw std::invalid_argument("null space");
    if (levels.size() != cuts.size())
        throw std::invalid_argument("levels and cuts must have equal length");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] > 0.0 && levels[i] <= 1.0))
            throw std::invalid_argument("levels must lie in (0,1]");
        if (i > 0 && !(levels[i] > levels[i - 1]))
            throw std::invalid_argument("levels must be strictly increasing");
        if (cuts[i].is_empty()) throw std::invalid_argument("cuts must be nonempty");
        if (i > 0 && !cuts[i].subset_of(*space, cuts[i - 1]))
            throw std::invalid_argument("cuts must be nested downward");
    }
    StepFuzzySet u;
    u.space_ = std::move(space);
    u.levels_ = std::move(levels);
    u.cuts_ = std::move(cuts);
    return u;
}

StepFuzzySet StepFuzzySet::characteristic(SpacePtr space, GroundSet a) {
    if (a.is_empty()) return empty_fuzzy(std::move(space));
    return from_cuts(std::move(space), {1.0}, {std::move(a)});
}

StepFuzzySet StepFuzzySet::singleton(SpacePtr space, Point x) {
    return characteristic(std::move(space), GroundSet::points({std::move(x)}));
}

double StepFuzzySet::membership(const Point& x) const {
    for (std::size_t i = levels_.size(); i-- > 0;)
        if (cuts_[i].contains(*space_, x)) return levels_[i];
    return 0.0;
}

GroundSet StepFuzzySet::cut(double alpha) const {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0,1]");
    if (levels_.empty()) return GroundSet::empty();
    if (alpha == 0.0) return cuts_.front();
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (alpha <= levels_[i]) return cuts_[i];
    return GroundSet::empty();
}

StepFuzzySet StepFuzzySet::refine_levels(double delta) const {
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");
    if (levels_.empty()) return *this;
    std::vector<double> grid = levels_;
    for (double g = delta; g < height(); g += delta) grid.push_back(g);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<GroundSet> cuts;
    cuts.reserve(grid.size());
    for (double g : grid) cuts.push_back(cut(g));
    return from_cuts(space_, std::move(grid), std::move(cuts));
}

ClassReport classify(const StepFuzzySet& u) {
    ClassReport r;
    const auto& space = *u.space();
    r.is_usc = true;  // step cuts are closed in every backend
    r.is_uscg = true;
    for (const auto& c : u.cuts())
        if (!c.bounded()) { r.is_uscg = false; break; }
    r.is_uscb = r.is_uscg && (u.is_empty_fuzzy() || u.cuts().front().bounded());
    r.is_normal = u.height() == 1.0;
    r.height_attained = true;  // a step fuzzy set always attains its height
    if (space.backend() == GroundSpace::Backend::RealLine) {
        r.is_connected_cuts = true;
        for (const auto& c : u.cuts()) {
            const bool one_piece =
                (c.kind() == GroundSet::Kind::Intervals && c.ivs().size() == 1) ||
                (c.kind() == GroundSet::Kind::Points && c.pts().size() == 1);
            if (!one_piece) { r.is_connected_cuts = false; break; }
        }
    }
    return r;
}

}  // namespace hend
