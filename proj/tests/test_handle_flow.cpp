#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "lch/handle_flow.hpp"

using namespace lch;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidParams;
}

HandleParams index1() { return {3, 1, {1.0, std::numbers::sqrt2}, 1.0}; }
HandleParams index2() { return {4, 2, {1.3, std::numbers::pi / 2}, 0.7}; }

HandleState random_state(std::mt19937_64& rng, const HandleParams& params, bool on_slice) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    HandleState s;
    for (int j = 0; j < params.n - params.k; ++j) {
        s.x.push_back(u(rng));
        s.y.push_back(u(rng));
    }
    for (int j = 0; j < params.k; ++j) {
        s.p.push_back(on_slice ? 0.0 : u(rng));
        s.q.push_back(on_slice ? 0.0 : u(rng));
    }
    return s;
}

// Independent bisection on u = e^T of q^2 u^3 - delta^2 u - (delta^2 + q^2).
double cubic_root(double q, double delta) {
    auto f = [&](double u) { return q * q * u * u * u - delta * delta * u - (delta * delta + q * q); };
    double lo = 1.0, hi = 2.0;
    while (f(hi) < 0) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("params validation") {
    CHECK_NOTHROW(index1().validate());
    CHECK_NOTHROW(index2().validate());
    CHECK(code_of([] { HandleParams{3, 2, {1.0}, 1.0}.validate(); }) == Errc::InvalidParams);
    CHECK(code_of([] { HandleParams{3, 0, {1.0, 2.0, 3.0}, 1.0}.validate(); }) == Errc::InvalidParams);
    CHECK(code_of([] { HandleParams{3, 1, {1.0}, 1.0}.validate(); }) == Errc::InvalidParams);
    CHECK(code_of([] { HandleParams{3, 1, {1.0, 1.0}, 1.0}.validate(); }) == Errc::InvalidParams);
    CHECK(code_of([] { HandleParams{3, 1, {1.0, -2.0}, 1.0}.validate(); }) == Errc::InvalidParams);
    CHECK(code_of([] { HandleParams{3, 1, {1.0, 2.0}, 0.0}.validate(); }) == Errc::InvalidParams);
    CHECK(code_of([] { check_shape({{1}, {1}, {0}, {0}}, index1()); }) == Errc::InvalidParams);
}

TEST_CASE("reeb_flow examples") {
    const auto params = index1();
    SUBCASE("hyperbolic block stays at zero") {
        const HandleState s{{0.3, -0.2}, {0.1, 0.5}, {0.0}, {0.0}};
        for (double t : {0.1, 1.0, 10.0}) {
            const auto out = reeb_flow(s, t, params);
            CHECK(out.p[0] == 0.0);
            CHECK(out.q[0] == 0.0);
        }
    }
    SUBCASE("quarter rotation") {
        const HandleState s{{0.8, 0.0}, {0.3, 0.0}, {0.0}, {0.0}};
        const double N = reeb_normalization(s, params);
        const double t = std::numbers::pi / (N * params.a[0]);
        const auto out = reeb_flow(s, t, params);
        CHECK(out.x[0] == doctest::Approx(-0.3).epsilon(1e-12));
        CHECK(out.y[0] == doctest::Approx(0.8).epsilon(1e-12));
    }
    SUBCASE("hyperbolic block") {
        const HandleState s{{0.0, 0.0}, {0.0, 0.0}, {1.0}, {0.0}};
        const double N = reeb_normalization(s, params);
        CHECK(N == doctest::Approx(0.25));
        const double t = std::log(2.0) / (N * std::numbers::sqrt2);
        const auto out = reeb_flow(s, t, params);
        CHECK(out.p[0] == doctest::Approx(1.25).epsilon(1e-12));
        CHECK(out.q[0] == doctest::Approx(0.75 * std::numbers::sqrt2).epsilon(1e-12));
    }
    SUBCASE("origin") {
        const HandleState zero{{0.0, 0.0}, {0.0, 0.0}, {0.0}, {0.0}};
        CHECK(code_of([&] { reeb_flow(zero, 1.0, params); }) == Errc::DegeneratePoint);
    }
}

TEST_CASE("reeb_flow preserves the level function") {
    std::mt19937_64 rng(20240611);
    for (const auto& params : {index1(), index2()}) {
        for (int i = 0; i < 200; ++i) {
            std::uniform_real_distribution<double> time(-3.0, 3.0);
            const bool slice = i % 2 == 0;
            const auto s = random_state(rng, params, slice);
            const auto out = reeb_flow(s, time(rng), params);
            CHECK(level(out, params) == doctest::Approx(level(s, params)).epsilon(1e-9));
            if (slice) {
                for (double v : out.p) CHECK(v == 0.0);
                for (double v : out.q) CHECK(v == 0.0);
            }
        }
    }
}

TEST_CASE("frozen N matches the integrated field on the slice only") {
    std::mt19937_64 rng(3);
    const auto params = index1();
    const auto s = random_state(rng, params, true);
    const auto exact = reeb_flow(s, 0.7, params);
    const auto integrated = reeb_flow_integrated(s, 0.7, params);
    for (std::size_t j = 0; j < s.x.size(); ++j) {
        CHECK(integrated.x[j] == doctest::Approx(exact.x[j]).epsilon(1e-9));
        CHECK(integrated.y[j] == doctest::Approx(exact.y[j]).epsilon(1e-9));
    }
    // off the slice N changes along the flow, so the closed form drifts away
    const HandleState off{{0.2, 0.1}, {0.0, 0.3}, {0.5}, {0.4}};
    const double N0 = reeb_normalization(off, params);
    const double N1 = reeb_normalization(reeb_flow(off, 1.0, params), params);
    CHECK(std::abs(N1 - N0) > 1e-3);
}

TEST_CASE("liouville_flow") {
    const HandleState s{{1.0}, {0.0}, {1.0}, {1.0}};
    const auto same = liouville_flow(s, 0.0);
    CHECK(same.x == s.x);
    CHECK(same.p == s.p);
    const auto out = liouville_flow(s, std::log(4.0));
    CHECK(out.x[0] == doctest::Approx(2.0));
    CHECK(out.y[0] == 0.0);
    CHECK(out.p[0] == doctest::Approx(16.0));
    CHECK(out.q[0] == doctest::Approx(0.25));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> time(-2.0, 2.0);
    const auto params = index2();
    for (int i = 0; i < 100; ++i) {
        const auto st = random_state(rng, params, false);
        const double t1 = time(rng), t2 = time(rng);
        const auto a = liouville_flow(st, t1 + t2);
        const auto b = liouville_flow(liouville_flow(st, t1), t2);
        for (std::size_t j = 0; j < st.x.size(); ++j) CHECK(a.x[j] == doctest::Approx(b.x[j]).epsilon(1e-12));
        for (std::size_t j = 0; j < st.p.size(); ++j) {
            CHECK(a.p[j] == doctest::Approx(b.p[j]).epsilon(1e-12));
            CHECK(a.q[j] == doctest::Approx(b.q[j]).epsilon(1e-12));
        }
        const auto before = level_parts(st, params), after = level_parts(liouville_flow(st, t1), params);
        CHECK(after.rotational == doctest::Approx(std::exp(t1) * before.rotational).epsilon(1e-12));
        CHECK(after.expanding == doctest::Approx(std::exp(4 * t1) * before.expanding).epsilon(1e-12));
        CHECK(after.contracting == doctest::Approx(std::exp(-2 * t1) * before.contracting).epsilon(1e-12));
    }
}

TEST_CASE("solve_T") {
    const double T = solve_T(1.0, 1.0);
    CHECK(std::exp(T) == doctest::Approx(1.5213797068).epsilon(1e-9));
    CHECK(std::exp(T) > 1.50);
    CHECK(std::exp(T) < 1.55);
    CHECK(solve_T(0.5, 1.0) > solve_T(1.0, 1.0));
    CHECK(solve_T(1.0, 1.0) > solve_T(2.0, 1.0));
    CHECK(solve_T(1e4, 1.0) < 1e-3);
    CHECK(solve_T(1e4, 1.0) > 0.0);
    CHECK(code_of([] { solve_T(0.0, 1.0); }) == Errc::NoRootInBracket);
    CHECK(code_of([] { solve_T(1.0, 0.0); }) == Errc::NoRootInBracket);
    CHECK(solve_T(-1.0, 1.0) == doctest::Approx(T));
}

TEST_CASE("solve_T residuals and monotonicity on a grid") {
    for (double delta : {0.5, 1.0, 3.0}) {
        double previous = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 60; ++i) {
            const double q = delta * 0.1 * std::pow(100.0, i / 60.0);
            const double T = solve_T(q, delta);
            CHECK(T > 0);
            CHECK(std::abs(flow_time_residual(T, q, delta)) < 1e-10);
            CHECK(std::exp(T) == doctest::Approx(cubic_root(q, delta)).epsilon(1e-10));
            CHECK(T < previous);
            previous = T;
        }
    }
}

TEST_CASE("attach maps") {
    CHECK(attach_fc({0, 0, 0}, {0, 0, 0}) == std::vector<double>{0, 0, 0});
    // m = 1: (x + u, y + v, z + z0 + y u + u v / 2)
    const auto img = attach_fc({1, 2, 3}, {0.5, -1, 0.25});
    CHECK(img[0] == doctest::Approx(1.5));
    CHECK(img[1] == doctest::Approx(1.0));
    CHECK(img[2] == doctest::Approx(0.25 + 3 + 2 * 0.5 + 0.5 * -1 / 2));
    AttachRadii tight;
    tight.rho = 0.1;
    CHECK(code_of([&] { attach_fc({0, 0, 0}, {1, 1, 0}, {1.0}, tight); }) == Errc::OutOfDomain);
    CHECK(code_of([] { attach_fc({0, 0, 0}, {1, 1}); }) == Errc::InvalidParams);

    const auto p1 = index1();
    // level -delta^2 with p = 0: q^2 = delta^2 + sum a/2 (x^2 + y^2)
    HandleState s{{0.3, -0.4}, {0.2, 0.1}, {0.0}, {0.0}};
    s.q[0] = std::sqrt(1.0 + 0.5 * (0.09 + 0.04) + std::numbers::sqrt2 / 2 * (0.16 + 0.01));
    CHECK(attach_g_index1(s, p1) == std::vector<double>{0.3, -0.4, 0.2, 0.1, 0.0});
    auto bad = s;
    bad.p[0] = 0.1;
    CHECK(code_of([&] { attach_g_index1(bad, p1); }) == Errc::OutOfDomain);
    bad = s;
    bad.q[0] += 0.1;
    CHECK(code_of([&] { attach_g_index1(bad, p1); }) == Errc::OutOfDomain);

    const auto p2 = index2();
    HandleState t{{0.3, 0.5}, {-0.2, 0.4}, {0.0, 0.0}, {0.0, 0.0}};
    const double rot = 1.3 / 2 * (0.09 + 0.04) + std::numbers::pi / 4 * (0.25 + 0.16);
    t.q = {std::sqrt(0.49 + rot), 0.0};
    const auto g = attach_g_indexk(t, p2);
    REQUIRE(g.size() == 9);
    CHECK(g[0] == t.q[0]);
    CHECK(g[1] == t.q[1]);
    CHECK(g[8] == doctest::Approx((0.3 * -0.2 + 0.5 * 0.4) / 2));
    auto skew = t;
    skew.p = {0.1, 0.0};
    CHECK(code_of([&] { attach_g_indexk(skew, p2); }) == Errc::OutOfDomain);
}

TEST_CASE("contact form pullbacks") {
    for (auto variant : {AttachVariant::Fc, AttachVariant::GIndex1}) {
        const auto r = pullback_check(variant, index1());
        CHECK(r.samples == 1000);
        CHECK_MESSAGE(r.max_residual < 1e-6, r.max_residual);
    }
    for (const auto& params : {index2(), HandleParams{5, 2, {0.9, 1.7, 2.3}, 1.2}}) {
        const auto r = pullback_check(AttachVariant::GIndexK, params);
        CHECK_MESSAGE(r.max_residual < 1e-6, r.max_residual);
        CHECK(r.worst_point.size() == static_cast<std::size_t>(2 * params.n));
    }
    CHECK(code_of([] { pullback_check(AttachVariant::GIndex1, index2()); }) == Errc::InvalidParams);
    PullbackOptions small;
    small.samples = 10;
    CHECK(pullback_check(AttachVariant::GIndexK, index2(), small).max_residual ==
          pullback_check(AttachVariant::GIndexK, index2(), small).max_residual);
}
