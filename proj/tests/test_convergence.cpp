#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hend/convergence.hpp"
#include "hend/generators.hpp"

using namespace hend;

namespace {
const SpacePtr R = make_real_line();

FuzzySeqWindow nested_intervals(int n) { return gen_nested_intervals(n); }
}  // namespace

TEST_CASE("constant sequence passes gamma check") {
    const auto u = StepFuzzySet::characteristic(R, GroundSet::interval(0, 1));
    FuzzySeqWindow w;
    for (int i = 0; i < 20; ++i) w.members.push_back(u);
    CHECK(gamma_limit_check(w, u, 1e-6).pass);
}

TEST_CASE("escaping sequence gamma-converges to its first member") {
    auto w = gen_escaping(30, 10.0);
    w.tail_start = 5;
    const auto u1 = w.members.front();
    CHECK(gamma_limit_check(w, u1, 0.05).pass);
    // yet the endograph distances stay at 1 (converse failure exhibit)
    for (std::size_t n = 2; n <= 30; ++n)
        CHECK(endograph_dist(ProductMetricVariant::Sum, w.members[n - 1], u1) ==
              doctest::Approx(1.0));
}

TEST_CASE("oscillating sequence fails gamma check with witness") {
    auto w = gen_oscillating(40);
    w.tail_start = 1;
    const auto one_hat = StepFuzzySet::singleton(R, Point::real(1.0));
    const auto r = gamma_limit_check(w, one_hat, 0.1);
    CHECK_FALSE(r.pass);
    CHECK((r.failing_probe.has_value() || r.failing_index.has_value()));

    const auto probe = gamma_oscillation_probe(w, 0.1);
    CHECK(probe.oscillation);
    REQUIRE(probe.witness.has_value());
    // witness at one of the oscillation poles, at full level
    const double wx = probe.witness->x.coords[0];
    CHECK((wx == doctest::Approx(1.0) || wx == doctest::Approx(3.0)));
    CHECK(probe.witness->t == doctest::Approx(1.0));

    // odd subwindow converges to 1-hat
    FuzzySeqWindow odd;
    for (std::size_t i = 0; i < w.members.size(); i += 2) odd.members.push_back(w.members[i]);
    odd.tail_start = 1;
    CHECK(gamma_limit_check(odd, one_hat, 1e-6).pass);
    CHECK_FALSE(gamma_oscillation_probe(odd, 0.1).oscillation);
}

TEST_CASE("nested interval shrink is a plausible limit") {
    auto w = nested_intervals(80);
    w.tail_start = 40;
    CHECK_FALSE(gamma_oscillation_probe(w, 0.05).oscillation);
    CHECK(gamma_limit_check(w, StepFuzzySet::characteristic(R, GroundSet::interval(0, 1)),
                            0.05)
              .pass);
}

TEST_CASE("hend implies gamma audit") {
    auto w = nested_intervals(80);
    w.tail_start = 40;
    const auto u = StepFuzzySet::characteristic(R, GroundSet::interval(0, 1));
    const auto rep = hend_implies_gamma_audit(w, u, 0.05);
    CHECK(rep.hypothesis_met);
    CHECK(rep.max_tail_dist == doctest::Approx(1.0 / 40).epsilon(0.01));
    CHECK(rep.pass);

    // escaping: hypothesis fails, audit vacuous
    auto esc = gen_escaping(30, 10.0);
    esc.tail_start = 5;
    const auto vac = hend_implies_gamma_audit(esc, esc.members.front(), 0.05);
    CHECK_FALSE(vac.hypothesis_met);
    CHECK(vac.pass);

    // constant
    FuzzySeqWindow cons;
    for (int i = 0; i < 10; ++i) cons.members.push_back(u);
    CHECK(hend_implies_gamma_audit(cons, u, 1e-9).pass);
}

TEST_CASE("subsequence stability") {
    auto w = nested_intervals(120);
    w.tail_start = 40;
    const auto u = StepFuzzySet::characteristic(R, GroundSet::interval(0, 1));
    REQUIRE(gamma_limit_check(w, u, 0.05).pass);
    for (std::size_t stride : {2, 3, 5}) {
        FuzzySeqWindow sub;
        for (std::size_t i = w.tail_start - 1; i < w.members.size(); i += stride)
            sub.members.push_back(w.members[i]);
        sub.tail_start = 1;
        CHECK(gamma_limit_check(sub, u, 0.05).pass);
    }
}

TEST_CASE("height continuity under hend") {
    auto w = nested_intervals(80);
    w.tail_start = 40;
    const auto u = StepFuzzySet::characteristic(R, GroundSet::interval(0, 1));
    double eps = 0.0;
    for (std::size_t n = w.tail_start; n <= w.members.size(); ++n)
        eps = std::max(eps,
                       endograph_dist(ProductMetricVariant::Sum, w.members[n - 1], u));
    for (std::size_t n = w.tail_start; n <= w.members.size(); ++n)
        CHECK(std::abs(w.members[n - 1].height() - u.height()) <= eps + 1e-12);
}

TEST_CASE("rnce example distances") {
    auto [w, u] = gen_example_rnce(0.5, 8, 1e-2);
    for (std::size_t n = 1; n <= 8; ++n) {
        const double d = endograph_dist(ProductMetricVariant::Sum, w.members[n - 1], u);
        CHECK(d == doctest::Approx(std::min(1.0 / n, 0.5)).epsilon(0.03));
    }
}
