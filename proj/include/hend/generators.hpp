#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "hend/compactness.hpp"

namespace hend {

/// Pinned algorithm identifier recorded in instance metadata; regenerated
/// corpora stay byte-identical as long as this string does not change.
inline constexpr const char* kRngAlgorithm = "mt19937_64/u53-v1";

/// Seeded generator with an implementation-pinned uniform mapping
/// (std::uniform_real_distribution is not portable across libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(eng_() >> 11) * 0x1.0p-53);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

private:
    std::mt19937_64 eng_;
};

struct RandomFamilySpec {
    std::size_t member_count = 10;
    std::size_t min_levels = 1;
    std::size_t max_levels = 4;
    std::size_t min_cut = 2;
    std::size_t max_cut = 8;
    double box_lo = 0.0;
    double box_hi = 1.0;
    std::size_t dim = 2;
};

/// Random USCB family in a Euclidean box: nested cuts by monotone
/// shrinking of a random base point set. Deterministic per (spec, seed).
FuzzyFamily gen_random_family(const RandomFamilySpec& spec, std::uint64_t seed);

/// x_k = (k-1)*spacing on the line, u_k = chi_{{x_1, x_k}}: the escaping
/// sequence whose Gamma limit is u_1 while H_end(u_k, u_1) -> 1.
FuzzySeqWindow gen_escaping(std::size_t n, double spacing);

/// Alternating 1-hat / 3-hat on the line: no Gamma limit.
FuzzySeqWindow gen_oscillating(std::size_t n);

/// Level-mesh discretization of the unbounded-cut example
/// [u]_alpha = (-inf, -1/(r-alpha)] for alpha < r: USC but not USCG.
StepFuzzySet gen_example_empu(double r, double mesh);

/// Level-mesh discretization (with closures taken in R) of the
/// F^r-non-closedness example; H_end(u_n, u) = min(1/n, r).
std::pair<FuzzySeqWindow, StepFuzzySet> gen_example_rnce(double r, std::size_t n, double mesh);

/// Nested-interval sequence u_k = chi_{[0, 1 + 1/k]} with limit
/// chi_{[0,1]}; H_end(u_k, u) = 1/k.
FuzzySeqWindow gen_nested_intervals(std::size_t n);

}  // namespace hend
