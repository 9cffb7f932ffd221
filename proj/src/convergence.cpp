#include "hend/convergence.hpp"

#include <algorithm>
#include <stdexcept>

namespace hend {

namespace {

void check_window(const FuzzySeqWindow& w) {
    if (w.members.empty()) throw std::invalid_argument("empty window");
    if (w.tail_start < 1 || w.tail_start > w.members.size())
        throw std::invalid_argument("tail_start out of range");
    for (const auto& m : w.members)
        if (!m.space()->same(*w.members.front().space()))
            throw std::domain_error("window members over different spaces");
}

std::size_t block_length(const FuzzySeqWindow& w) {
    const std::size_t span = w.members.size() - w.tail_start;
    return std::max<std::size_t>(1, (span + 3) / 4);
}

// block-recurrence proxy for "infinitely often"
bool limsup_member(const FuzzySeqWindow& w, const LiftedPoint& p, double eps) {
    const std::size_t n = w.members.size();
    const std::size_t blk = block_length(w);
    for (std::size_t start = w.tail_start; start <= n; start += blk) {
        const std::size_t stop = std::min(n, start + blk - 1);
        bool hit = false;
        for (std::size_t i = start; i <= stop; ++i)
            if (point_to_endograph(ProductMetricVariant::Sum, p, w.members[i - 1]) <= eps) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

bool liminf_member(const FuzzySeqWindow& w, const LiftedPoint& p, double eps) {
    for (std::size_t i = w.tail_start; i <= w.members.size(); ++i)
        if (point_to_endograph(ProductMetricVariant::Sum, p, w.members[i - 1]) > eps)
            return false;
    return true;
}

}  // namespace

std::vector<LiftedPoint> endograph_corners(const StepFuzzySet& u) {
    std::vector<LiftedPoint> out;
    for (std::size_t i = 0; i < u.level_count(); ++i)
        for (const auto& p : u.cuts()[i].sample_points())
            out.push_back(LiftedPoint{p, u.levels()[i]});
    return out;
}

GammaVerdict gamma_limit_check(const FuzzySeqWindow& w, const StepFuzzySet& u, double eps) {
    check_window(w);
    if (!u.space()->same(*w.members.front().space()))
        throw std::domain_error("limit candidate over a different space");
    GammaVerdict verdict;

    // liminf side: every point of end u within eps of every tail endograph
    for (std::size_t i = w.tail_start; i <= w.members.size(); ++i) {
        if (endograph_semi(ProductMetricVariant::Sum, u, w.members[i - 1]) > eps) {
            verdict.pass = false;
            verdict.failing_index = i;
            // locate the worst corner as witness
            double worst = -1.0;
            for (const auto& p : endograph_corners(u)) {
                const double d = point_to_endograph(ProductMetricVariant::Sum, p, w.members[i - 1]);
                if (d > worst) { worst = d; verdict.failing_probe = p; }
            }
            return verdict;
        }
    }

    // limsup side: block-recurrent corners of the members must lie near end u
    for (const auto& m : w.members) {
        for (const auto& p : endograph_corners(m)) {
            if (!limsup_member(w, p, eps)) continue;
            if (point_to_endograph(ProductMetricVariant::Sum, p, u) > 2.0 * eps) {
                verdict.pass = false;
                verdict.failing_probe = p;
                return verdict;
            }
        }
    }
    return verdict;
}

OscillationReport gamma_oscillation_probe(const FuzzySeqWindow& w, double eps) {
    check_window(w);
    OscillationReport report;
    for (const auto& m : w.members) {
        for (const auto& p : endograph_corners(m)) {
            if (limsup_member(w, p, eps) && !liminf_member(w, p, eps)) {
                report.oscillation = true;
                report.witness = p;
                return report;
            }
        }
    }
    return report;
}

HendGammaReport hend_implies_gamma_audit(const FuzzySeqWindow& w, const StepFuzzySet& u,
                                         double eps) {
    check_window(w);
    HendGammaReport report;
    report.max_tail_dist = 0.0;
    for (std::size_t i = w.tail_start; i <= w.members.size(); ++i)
        report.max_tail_dist = std::max(
            report.max_tail_dist, endograph_dist(ProductMetricVariant::Sum, w.members[i - 1], u));
    report.hypothesis_met = report.max_tail_dist <= eps;
    report.gamma = gamma_limit_check(w, u, 2.0 * eps);
    report.pass = !report.hypothesis_met || report.gamma.pass;
    return report;
}

}  // namespace hend
