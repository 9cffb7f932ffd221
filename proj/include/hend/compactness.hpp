#pragma once

#include "hend/convergence.hpp"

namespace hend {

/// A finite family of fuzzy sets over one space; height_tag marks an F^r
/// family (every member attains exactly that height).
struct FuzzyFamily {
    std::vector<StepFuzzySet> members;
    std::optional<double> height_tag;
};

/// U(alpha): union of the members' alpha-cuts (empty union is empty).
GroundSet family_union(const FuzzyFamily& u, double alpha);

struct FamilyNet {
    std::vector<std::size_t> center_indices;  // 0-based into members
    double radius = 0.0;
};
struct FamilyNetFailure {
    std::size_t uncovered_index = 0;
};
using FamilyNetResult = std::variant<FamilyNet, FamilyNetFailure>;

inline bool family_net_ok(const FamilyNetResult& r) {
    return std::holds_alternative<FamilyNet>(r);
}

/// Greedy weak net of the family under H_end (Sum variant), centers drawn
/// from the family in index order.
FamilyNetResult family_eps_net_hend(const FuzzyFamily& u, double eps, std::size_t budget);

/// Two-directional total-boundedness audit linking the family level
/// (H_end nets) with the cut level (ground nets of U(alpha)).
///
/// Forward: a family eps-net with centers {c} forces, for every grid level
/// alpha > 2*eps, a 2*eps cover of U(alpha) built from eps-nets of the
/// centers' (alpha - eps)-cuts; the cover is verified exactly.
/// Backward: if every U(alpha) admits a greedy eps-net, the family admits
/// a net of radius eps' = 3*eps + (largest grid gap); the net-size budget
/// comes from the signature count over the cut nets.
struct TbReport {
    bool family_net_ok = false;
    std::size_t family_net_size = 0;
    std::optional<std::size_t> family_uncovered;
    bool forward_pass = true;
    std::optional<double> forward_failing_alpha;
    bool cut_nets_ok = true;
    std::optional<double> cut_net_failing_alpha;
    double eps_prime = 0.0;
    bool backward_pass = true;
    bool pass = true;
};

TbReport tb_audit(const FuzzyFamily& u, double eps, const std::vector<double>& alpha_grid,
                  std::size_t budget);

/// K(X)-level version of the audit over plain ground sets under H.
TbReport kx_tb_audit(const GroundSpace& space, const std::vector<GroundSet>& d, double eps,
                     std::size_t budget);

/// Exact transfer audit: H_end(chi_A, chi_B) = min(H(A,B), 1) on all
/// pairs, and greedy family nets agree between the two levels when eps < 1.
struct ChiTransferReport {
    bool identity_pass = true;
    double max_identity_gap = 0.0;
    bool nets_agree = true;
    bool pass = true;
};

ChiTransferReport chi_transfer_audit(const GroundSpace& space, const std::vector<GroundSet>& d,
                                     double eps, std::size_t budget);

/// Level schedule of the diagonal extraction: strictly decreasing levels
/// alpha_k <= min(xi, 1/k) with per-stage net radii.
struct DiagonalSchedule {
    double xi = 1.0;
    std::vector<double> alpha;
    std::vector<double> eps;
    std::size_t net_budget = 64;
};

struct StageInfo {
    std::size_t stage = 0;  // 1-based
    double alpha = 0.0;
    double eps = 0.0;
    std::size_t rep_index = 0;   // 1-based window index of the representative
    std::size_t pool_size = 0;   // surviving cluster size
    double residual = 0.0;       // H(end_alpha u_diag, v^k)
    double bound = 0.0;          // max(alpha_k, 3*eps_k)
};

struct ExtractionResult {
    enum class Error { None, StageNetFailure, WindowExhausted };
    bool ok = false;
    Error error = Error::None;
    std::size_t failed_stage = 0;
    std::optional<std::size_t> failure_witness;  // uncovered member (1-based)
    std::vector<std::size_t> subsequence;        // diagonal indices (1-based, increasing)
    std::vector<StageInfo> stages;
    std::optional<SlabSet> limit;                // v, the deepest stage limit
    std::optional<StepFuzzySet> limit_fuzzy;     // reconstruct(v)
    std::vector<double> final_residuals;         // H_end(u_diag_j, reconstruct(v))
};

/// The staged pigeonhole construction: each stage nets the truncated
/// endographs at alpha_k and keeps the largest cluster; the deepest
/// representative's truncation becomes the limit set v.
ExtractionResult diagonal_extract(const FuzzySeqWindow& w, const DiagonalSchedule& sched);

struct ClosednessReport {
    bool extraction_ok = false;
    double final_residual = 0.0;
    bool candidate_found = false;
    std::size_t nearest_member = 0;  // 0-based
    double gap = 0.0;
    bool pass = true;
};

/// Closedness surrogate: extract a limit candidate from the window and
/// check it stays within 2*eps of the family.
ClosednessReport closedness_probe(const FuzzyFamily& u, const FuzzySeqWindow& w, double eps);

/// F^r restriction audit: unions above r are empty, and the audit verdict
/// on the grid clipped to (0, r] matches the full-grid verdict.
struct FrReport {
    bool empty_above_r = true;
    bool verdicts_match = true;
    TbReport clipped;
    TbReport full;
    bool pass = true;
};

FrReport fr_restrict_audit(const FuzzyFamily& u, double eps, const std::vector<double>& alpha_grid,
                           std::size_t budget);

/// Three-way audit of "H_end convergence iff Gamma + relatively compact
/// cut unions" at tolerance. A: H_end tail convergence at eps; B: Gamma
/// check at 2*eps; C: greedy eps-nets of the tail cut unions on the grid.
/// Forward asserts A => B and a constructed 2*eps cover of each union;
/// backward asserts (B and C at radius eps/4) => A at 4*eps.
struct EquivalenceReport {
    bool a = false;
    double max_tail_dist = 0.0;
    bool b = false;
    bool c = false;
    std::optional<double> c_failing_alpha;
    bool forward_pass = true;
    bool backward_pass = true;
    bool pass = true;
};

EquivalenceReport hend_iff_gamma_plus_compact_audit(const FuzzySeqWindow& w,
                                                    const StepFuzzySet& u, double eps,
                                                    const std::vector<double>& alpha_grid,
                                                    std::size_t budget);

}  // namespace hend
