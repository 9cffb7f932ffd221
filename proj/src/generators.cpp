#include "hend/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hend {

FuzzyFamily gen_random_family(const RandomFamilySpec& spec, std::uint64_t seed) {
    if (spec.min_levels < 1 || spec.max_levels < spec.min_levels || spec.min_cut < 1 ||
        spec.max_cut < spec.min_cut || !(spec.box_hi > spec.box_lo) || spec.dim < 1)
        throw std::invalid_argument("invalid random family parameters");
    Rng rng(seed);
    const SpacePtr space = make_euclidean(spec.dim);
    FuzzyFamily fam;
    for (std::size_t m = 0; m < spec.member_count; ++m) {
        const std::size_t nlevels =
            spec.min_levels + rng.index(spec.max_levels - spec.min_levels + 1);
        std::vector<double> levels;
        for (std::size_t i = 0; i < nlevels; ++i) levels.push_back(rng.uniform(0.05, 1.0));
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

        const std::size_t base_size = spec.min_cut + rng.index(spec.max_cut - spec.min_cut + 1);
        std::vector<Point> base;
        for (std::size_t i = 0; i < base_size; ++i) {
            std::vector<double> x;
            for (std::size_t d = 0; d < spec.dim; ++d)
                x.push_back(rng.uniform(spec.box_lo, spec.box_hi));
            base.push_back(Point::eucl(std::move(x)));
        }

        std::vector<GroundSet> cuts;
        std::vector<Point> current = base;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            cuts.push_back(GroundSet::points(current));
            // shrink for the next (higher) level, keeping at least one point
            if (current.size() > 1) {
                const std::size_t drop = rng.index(current.size());
                current.resize(std::max<std::size_t>(1, current.size() - drop));
            }
        }
        fam.members.push_back(StepFuzzySet::from_cuts(space, std::move(levels), std::move(cuts)));
    }
    return fam;
}

FuzzySeqWindow gen_escaping(std::size_t n, double spacing) {
    if (n < 2 || !(spacing > 0.0)) throw std::invalid_argument("need n >= 2 and spacing > 0");
    const SpacePtr space = make_real_line();
    FuzzySeqWindow w;
    for (std::size_t k = 1; k <= n; ++k) {
        const double xk = static_cast<double>(k - 1) * spacing;
        w.members.push_back(StepFuzzySet::characteristic(
            space, GroundSet::points({Point::real(0.0), Point::real(xk)})));
    }
    return w;
}

FuzzySeqWindow gen_oscillating(std::size_t n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    const SpacePtr space = make_real_line();
    FuzzySeqWindow w;
    for (std::size_t k = 1; k <= n; ++k)
        w.members.push_back(StepFuzzySet::singleton(space, Point::real(k % 2 == 1 ? 1.0 : 3.0)));
    return w;
}

StepFuzzySet gen_example_empu(double r, double mesh) {
    if (!(r > 0.0 && r <= 1.0) || !(mesh > 0.0 && mesh < r))
        throw std::invalid_argument("need 0 < mesh < r <= 1");
    const SpacePtr space = make_real_line();
    std::vector<double> levels;
    std::vector<GroundSet> cuts;
    for (std::size_t i = 1; static_cast<double>(i) * mesh < r - 1e-12; ++i) {
        const double a = static_cast<double>(i) * mesh;
        levels.push_back(a);
        cuts.push_back(GroundSet::interval(-kInf, -1.0 / (r - a)));
    }
    return StepFuzzySet::from_cuts(space, std::move(levels), std::move(cuts));
}

namespace {

StepFuzzySet rnce_member(const SpacePtr& space, double r, double mesh, double left) {
    std::vector<double> levels;
    for (std::size_t i = 1; static_cast<double>(i) * mesh < r - 1e-12; ++i)
        levels.push_back(static_cast<double>(i) * mesh);
    levels.push_back(r);
    std::vector<GroundSet> cuts;
    for (double a : levels) cuts.push_back(GroundSet::interval(left, 2.0 - a / r));
    return StepFuzzySet::from_cuts(space, std::move(levels), std::move(cuts));
}

}  // namespace

std::pair<FuzzySeqWindow, StepFuzzySet> gen_example_rnce(double r, std::size_t n, double mesh) {
    if (!(r > 0.0 && r <= 1.0) || n < 1 || !(mesh > 0.0 && mesh < r))
        throw std::invalid_argument("need 0 < mesh < r <= 1 and n >= 1");
    const SpacePtr space = make_real_line();
    FuzzySeqWindow w;
    for (std::size_t m = 1; m <= n; ++m)
        w.members.push_back(rnce_member(space, r, mesh, 1.0 - 1.0 / static_cast<double>(m)));
    StepFuzzySet limit = rnce_member(space, r, mesh, 1.0);
    return {std::move(w), std::move(limit)};
}

FuzzySeqWindow gen_nested_intervals(std::size_t n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    const SpacePtr space = make_real_line();
    FuzzySeqWindow w;
    for (std::size_t k = 1; k <= n; ++k)
        w.members.push_back(StepFuzzySet::characteristic(
            space, GroundSet::interval(0.0, 1.0 + 1.0 / static_cast<double>(k))));
    return w;
}

}  // namespace hend
