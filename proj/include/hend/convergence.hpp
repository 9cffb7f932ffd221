#pragma once

#include "hend/endograph.hpp"

namespace hend {

/// A finite window u_1..u_N of a fuzzy-set sequence over one space.
struct FuzzySeqWindow {
    std::vector<StepFuzzySet> members;
    std::size_t tail_start = 1;  // 1-based
};

struct GammaVerdict {
    bool pass = true;
    std::optional<LiftedPoint> failing_probe;     // limit corner not approached
    std::optional<std::size_t> failing_index;     // member violating the excess side
};

/// Finite-window surrogate for end u = K-lim end u_n. The liminf side
/// probes the slab corners of u against every tail member; the limsup side
/// probes the corners of all members with the suffix-block proxy and
/// requires block-recurrent corners to lie within 2*eps of end u. (An
/// excess bound H*(end u_n, end u) <= eps would wrongly reject escaping
/// sequences whose drifting mass leaves every compact set.)
GammaVerdict gamma_limit_check(const FuzzySeqWindow& w, const StepFuzzySet& u, double eps);

struct OscillationReport {
    bool oscillation = false;
    std::optional<LiftedPoint> witness;  // a probe in limsup_eps \ liminf_eps
};

/// Looks for a corner of some member that recurs in every suffix block but
/// is not approached by all tail members.
OscillationReport gamma_oscillation_probe(const FuzzySeqWindow& w, double eps);

struct HendGammaReport {
    bool hypothesis_met = false;   // H_end(u_n, u) <= eps on the tail
    double max_tail_dist = 0.0;
    GammaVerdict gamma;            // evaluated at 2*eps when hypothesis met
    bool pass = true;              // hypothesis => gamma passes
};

/// Audit of "H_end convergence implies Gamma convergence" at tolerance.
HendGammaReport hend_implies_gamma_audit(const FuzzySeqWindow& w, const StepFuzzySet& u,
                                         double eps);

/// Slab corners (cut representative, level) of u plus the base, used as
/// probe points for the Gamma checks.
std::vector<LiftedPoint> endograph_corners(const StepFuzzySet& u);

}  // namespace hend
