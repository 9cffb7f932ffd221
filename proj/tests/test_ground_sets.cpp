#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hend/ground_set.hpp"

using namespace hend;

namespace {
const GroundSpace R = GroundSpace::real_line();

GroundSet reals(std::initializer_list<double> xs) {
    std::vector<Point> pts;
    for (double x : xs) pts.push_back(Point::real(x));
    return GroundSet::points(std::move(pts));
}

// dense sampling oracle for bounded interval unions
double sampled_semi(const GroundSet& a, const GroundSet& b, double mesh) {
    double sup = 0.0;
    for (const Point& p : a.mesh_points(mesh)) sup = std::max(sup, b.dist_to(R, p).value);
    return sup;
}
}  // namespace

TEST_CASE("empty set conventions") {
    const GroundSet e = GroundSet::empty();
    const GroundSet a = reals({0.0});
    CHECK(semi_hausdorff(R, e, a) == ExtDist::finite(0.0));
    CHECK(semi_hausdorff(R, e, e) == ExtDist::finite(0.0));
    CHECK(semi_hausdorff(R, a, e).infinite);
    CHECK(hausdorff(R, a, e).infinite);
    CHECK(a.dist_to(R, Point::real(5.0)).value == 5.0);
    CHECK(e.dist_to(R, Point::real(5.0)).infinite);
}

TEST_CASE("semi distance asymmetry") {
    const GroundSet a = reals({0.0, 1.0});
    const GroundSet b = reals({0.0, 2.0});
    CHECK(semi_hausdorff(R, a, b).value == doctest::Approx(1.0));
    CHECK(semi_hausdorff(R, b, a).value == doctest::Approx(1.0));
    const GroundSet c = reals({0.0});
    CHECK(semi_hausdorff(R, c, a).value == 0.0);
    CHECK(semi_hausdorff(R, a, c).value == 1.0);  // not symmetric
    CHECK(hausdorff(R, a, c).value == hausdorff(R, c, a).value);
}

TEST_CASE("interval hausdorff closed forms") {
    CHECK(hausdorff(R, GroundSet::interval(0, 1), GroundSet::interval(0, 2)).value ==
          doctest::Approx(1.0));
    CHECK(hausdorff(R, reals({0.0}), reals({3.0})).value == 3.0);
    CHECK(hausdorff(R, GroundSet::interval(-kInf, 0), GroundSet::interval(-kInf, 5)).value ==
          doctest::Approx(5.0));
    // unmatched unbounded direction
    CHECK(semi_hausdorff(R, GroundSet::interval(-kInf, 0), GroundSet::interval(0, 1)).infinite);
    CHECK_FALSE(
        semi_hausdorff(R, GroundSet::interval(0, 1), GroundSet::interval(-kInf, 0)).infinite);
    // gap midpoint of the target drives the semi distance
    const GroundSet gap = GroundSet::intervals({{0.0, 1.0}, {3.0, 4.0}});
    CHECK(semi_hausdorff(R, GroundSet::interval(0, 4), gap).value == doctest::Approx(1.0));
}

TEST_CASE("interval union canonicalization") {
    const GroundSet m = GroundSet::intervals({{2.0, 3.0}, {0.0, 1.0}, {1.0, 2.5}});
    REQUIRE(m.ivs().size() == 1);
    CHECK(m.ivs()[0] == Interval{0.0, 3.0});
    CHECK(reals({1.0, 1.0, 2.0}).pts().size() == 2);
}

TEST_CASE("interval hausdorff vs dense sampling") {
    std::mt19937_64 eng(11);
    auto u01 = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    const double mesh = 1e-3;
    for (int it = 0; it < 120; ++it) {
        auto rand_set = [&] {
            std::vector<Interval> ivs;
            const int n = 1 + static_cast<int>(eng() % 3);
            for (int i = 0; i < n; ++i) {
                const double lo = u01() * 10 - 5;
                ivs.push_back({lo, lo + u01() * 3});
            }
            return GroundSet::intervals(std::move(ivs));
        };
        const GroundSet a = rand_set(), b = rand_set();
        const double exact = hausdorff(R, a, b).value;
        const double approx = std::max(sampled_semi(a, b, mesh), sampled_semi(b, a, mesh));
        CHECK(std::abs(exact - approx) <= 2 * mesh);
    }
}

TEST_CASE("greedy nets") {
    const GroundSet a = reals({0.0, 0.1, 0.2, 5.0});
    const auto r = greedy_eps_net(R, a, 0.5, 2);
    REQUIRE(net_ok(r));
    CHECK(std::get<EpsNet>(r).centers.size() == 2);

    CHECK(net_ok(greedy_eps_net(R, GroundSet::empty(), 0.5, 1)));
    CHECK(std::get<EpsNet>(greedy_eps_net(R, GroundSet::empty(), 0.5, 1)).centers.empty());

    const auto unb = greedy_eps_net(R, GroundSet::interval(-kInf, 0), 0.5, 100);
    REQUIRE_FALSE(net_ok(unb));
    CHECK(std::get<NetFailure>(unb).reason == NetFailure::Reason::Unbounded);

    const auto tight = greedy_eps_net(R, a, 0.01, 2);
    REQUIRE_FALSE(net_ok(tight));
    CHECK(std::get<NetFailure>(tight).reason == NetFailure::Reason::BudgetExhausted);
    CHECK(std::get<NetFailure>(tight).witness.has_value());

    const auto iv = greedy_eps_net(R, GroundSet::interval(0, 1), 0.3, 10);
    REQUIRE(net_ok(iv));
    const auto& net = std::get<EpsNet>(iv);
    for (double x = 0.0; x <= 1.0; x += 0.01) {
        double best = kInf;
        for (const Point& c : net.centers) best = std::min(best, std::abs(c.coords[0] - x));
        CHECK(best <= 0.3 + 1e-12);
    }
}

TEST_CASE("family net transfer on finite point families") {
    // union netted at eps iff the family admits an eps-level structure:
    // checked against brute-force minimal covers on random families
    std::mt19937_64 eng(23);
    auto u01 = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    for (int it = 0; it < 100; ++it) {
        std::vector<GroundSet> fam;
        GroundSet uni = GroundSet::empty();
        for (int m = 0; m < 4; ++m) {
            std::vector<Point> pts;
            for (int i = 0; i < 3; ++i) pts.push_back(Point::real(u01() * 4));
            fam.push_back(GroundSet::points(pts));
            uni = uni.unite(fam.back());
        }
        const double eps = 0.5;
        const auto un = greedy_eps_net(R, uni, eps, 100);
        REQUIRE(net_ok(un));
        // greedy net size never exceeds points and every family member is
        // covered by the union net
        for (const auto& s : fam)
            for (const Point& p : s.pts()) {
                double best = kInf;
                for (const Point& c : std::get<EpsNet>(un).centers)
                    best = std::min(best, std::abs(c.coords[0] - p.coords[0]));
                CHECK(best <= eps + 1e-12);
            }
    }
}

TEST_CASE("kuratowski window probes") {
    SetSequenceWindow w;
    for (int n = 0; n < 20; ++n) w.sets.push_back(reals({1.0}));
    w.tail_start = 1;
    auto verdicts = kuratowski_window(R, w, 1e-9, {Point::real(1.0)});
    CHECK(verdicts[0].in_liminf);
    CHECK(verdicts[0].in_limsup);

    SetSequenceWindow alt;
    for (int n = 1; n <= 40; ++n) alt.sets.push_back(reals({n % 2 == 1 ? 1.0 : 3.0}));
    alt.tail_start = 1;
    auto v1 = kuratowski_window(R, alt, 0.1, {Point::real(1.0), Point::real(3.0)});
    CHECK_FALSE(v1[0].in_liminf);
    CHECK(v1[0].in_limsup);
    CHECK_FALSE(v1[1].in_liminf);
    CHECK(v1[1].in_limsup);

    SetSequenceWindow shrink;
    for (int n = 1; n <= 400; ++n) shrink.sets.push_back(reals({1.0 / n}));
    shrink.tail_start = 200;
    auto v2 = kuratowski_window(R, shrink, 0.01, {Point::real(0.0)});
    CHECK(v2[0].in_liminf);
    CHECK(v2[0].in_limsup);
}

TEST_CASE("kuratowski convergence verdicts") {
    SetSequenceWindow w;
    for (int n = 1; n <= 80; ++n) w.sets.push_back(reals({1.0 + 1.0 / n}));
    w.tail_start = 40;
    CHECK(kuratowski_converges(R, w, reals({1.0}), 0.05).pass);

    SetSequenceWindow alt;
    for (int n = 1; n <= 40; ++n) alt.sets.push_back(reals({n % 2 == 1 ? 1.0 : 3.0}));
    alt.tail_start = 1;
    const auto bad = kuratowski_converges(R, alt, reals({1.0}), 0.1);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.failing_index.has_value());
    CHECK(*bad.failing_index % 2 == 0);  // an even member witnesses the excess

    SetSequenceWindow cons;
    for (int n = 0; n < 10; ++n) cons.sets.push_back(GroundSet::interval(0, 1));
    cons.tail_start = 1;
    CHECK(kuratowski_converges(R, cons, GroundSet::interval(0, 1), 1e-9).pass);
}

TEST_CASE("hausdorff convergence implies kuratowski at 2eps") {
    std::mt19937_64 eng(5);
    auto u01 = [&] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    for (int it = 0; it < 30; ++it) {
        const GroundSet limit = reals({u01(), 2 + u01()});
        SetSequenceWindow w;
        const double eps = 0.1;
        for (int n = 0; n < 30; ++n) {
            std::vector<Point> pts;
            for (const Point& p : limit.pts())
                pts.push_back(Point::real(p.coords[0] + (u01() - 0.5) * eps));
            w.sets.push_back(GroundSet::points(pts));
        }
        w.tail_start = 1;
        bool hyp = true;
        for (const auto& s : w.sets)
            if (!hausdorff(R, s, limit).leq(eps)) hyp = false;
        REQUIRE(hyp);
        CHECK(kuratowski_converges(R, w, limit, 2 * eps).pass);
    }
}
