#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mlrelax/eval.hpp"
#include "mlrelax/fracsolve.hpp"
#include "mlrelax/gamma.hpp"
#include "oracle/erfcx_oracle.hpp"

using namespace mlrelax;

namespace {

std::pair<std::vector<double>, std::vector<double>> sampled(double h, size_t n, auto&& fn) {
    std::vector<double> t(n + 1), f(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        t[k] = static_cast<double>(k) * h;
        f[k] = fn(t[k]);
    }
    return {t, f};
}

}  // namespace

TEST_CASE("caputo derivative of a constant vanishes") {
    const auto [t, f] = sampled(0.01, 200, [](double) { return 3.25; });
    for (double d : caputo_derivative_discrete(t, f, 0.5)) CHECK(std::abs(d) < 1e-13);
}

TEST_CASE("caputo derivative of t is exact for the piecewise-linear rule") {
    // D*^0.5 t = t^0.5 / Gamma(1.5); the product-integration rule reproduces
    // linear f without discretisation error
    const double h = 0.01;
    const auto [t, f] = sampled(h, 150, [](double x) { return x; });
    const auto d = caputo_derivative_discrete(t, f, 0.5);
    for (size_t k = 1; k < t.size(); ++k) {
        const double want = std::sqrt(t[k]) / gamma_real(1.5);
        CHECK(std::abs(d[k - 1] - want) < 1e-12 * std::max(1.0, want));
    }
    CHECK(d[99] == doctest::Approx(1.1283791670955125739).epsilon(1e-12));  // t = 1
}

TEST_CASE("caputo derivative tends to f' as mu -> 1") {
    const double h = 1e-3;
    const auto [t, f] = sampled(h, 2000, [](double x) { return x * x; });
    const auto d = caputo_derivative_discrete(t, f, 0.999);
    for (size_t k = 500; k < t.size(); k += 250) {
        CHECK(std::abs(d[k - 1] - 2.0 * t[k]) < 0.02 * std::max(1.0, 2.0 * t[k]));
    }
}

TEST_CASE("rl derivative of a constant recovers c t^-mu / Gamma(1-mu)") {
    const double h = 1e-3;
    const auto [t, f] = sampled(h, 2000, [](double) { return 1.0; });
    const auto d = rl_derivative_discrete(t, f, 0.5);
    for (size_t k = 100; k < t.size(); k += 200) {
        const double want = std::pow(t[k], -0.5) / gamma_real(0.5);
        CHECK(std::abs(d[k - 1] - want) < 0.01 * want);
    }
}

TEST_CASE("discrete Caputo relation for f = 1 + t") {
    const double h = 1e-3;
    const auto [t, f] = sampled(h, 2000, [](double x) { return 1.0 + x; });
    for (double mu : {0.3, 0.7}) {
        const auto rl = rl_derivative_discrete(t, f, mu);
        const auto cp = caputo_derivative_discrete(t, f, mu);
        for (size_t k = 1; k < t.size(); ++k) {
            const double want = std::pow(t[k], -mu) / gamma_real(1.0 - mu);
            const double scale = 1.0 + std::pow(t[k], -(1.0 + mu));
            CHECK(std::abs((rl[k - 1] - cp[k - 1]) - want) <= 5.0 * h * scale);
        }
    }
}

TEST_CASE("mu -> 0 limits of both operators") {
    const double h = 1e-3;
    const auto [t, f] = sampled(h, 2000, [](double x) { return 1.0 + x; });
    const auto rl = rl_derivative_discrete(t, f, 0.01);
    const auto cp = caputo_derivative_discrete(t, f, 0.01);
    for (size_t k = 500; k < t.size(); k += 100) {
        CHECK(std::abs(rl[k - 1] - f[k]) <= 0.02 * f[k]);          // D^mu f -> f
        CHECK(std::abs(cp[k - 1] - (f[k] - 1.0)) <= 0.02 * f[k]);  // *D^mu f -> f - f(0)
    }
}

TEST_CASE("discrete operators validate their input") {
    std::vector<double> t{0.0, 0.1, 0.25};
    std::vector<double> f{1.0, 1.0, 1.0};
    CHECK_THROWS_AS(caputo_derivative_discrete(t, f, 0.5), DomainError);
    CHECK_THROWS_AS(rl_derivative_discrete(t, f, 0.5), DomainError);
    std::vector<double> t2{0.0, 0.1};
    std::vector<double> f2{1.0, 1.0};
    CHECK_THROWS_AS(caputo_derivative_discrete(t2, f2, 1.5), DomainError);
    CHECK_THROWS_AS(caputo_derivative_discrete(t2, f2, 0.0), DomainError);
    std::vector<double> one{0.0};
    CHECK_THROWS_AS(caputo_derivative_discrete(one, one, 0.5), DomainError);
}

TEST_CASE("classical limit: backward Euler in disguise") {
    const double h = 1e-3;
    const auto run = solve_relaxation(Alpha(1.0), h, 2.0, Scheme::caputo_gl);
    for (size_t k = 1; k < run.trajectory.size(); k += 100) {
        const auto [tk, uk] = run.trajectory[k];
        CHECK(uk == doctest::Approx(std::pow(1.0 + h, -static_cast<double>(k))).epsilon(1e-12));
    }
    CHECK(run.max_abs_err < h);  // first-order error profile against exp(-t)
}

TEST_CASE("solver trajectories stay positive and non-increasing") {
    for (double a : {0.25, 0.6, 0.95}) {
        for (Scheme s : {Scheme::caputo_gl, Scheme::rl_gl}) {
            const auto run = solve_relaxation(Alpha(a), 0.01, 2.0, s);
            double prev = 1.0;
            for (const auto& [tk, uk] : run.trajectory) {
                CHECK(uk > 0.0);
                CHECK(uk <= prev + 1e-14);
                prev = uk;
            }
        }
    }
}

TEST_CASE("solver converges to the closed form at alpha = 1/2") {
    const auto run = solve_relaxation(Alpha(0.5), 1e-3, 5.0, Scheme::caputo_gl);
    // away from the start-up layer the trajectory matches exp(t) erfc(sqrt t)
    for (size_t k = 500; k < run.trajectory.size(); k += 500) {
        const auto [tk, uk] = run.trajectory[k];
        CHECK(std::abs(uk - oracle::ml_half(tk)) < 2e-3);
    }
    CHECK(run.max_abs_err < 0.02);
}

TEST_CASE("the two formulations agree within their combined errors") {
    for (double a : {0.25, 0.5, 0.75}) {
        const auto c = solve_relaxation(Alpha(a), 5e-3, 2.0, Scheme::caputo_gl);
        const auto r = solve_relaxation(Alpha(a), 5e-3, 2.0, Scheme::rl_gl);
        REQUIRE(c.trajectory.size() == r.trajectory.size());
        const double budget = c.max_abs_err + r.max_abs_err;
        for (size_t k = 0; k < c.trajectory.size(); ++k)
            CHECK(std::abs(c.trajectory[k].second - r.trajectory[k].second) <= budget + 1e-12);
    }
}

TEST_CASE("convergence study: errors fall monotonically") {
    const double hs[] = {2e-2, 1e-2, 5e-3, 2.5e-3};
    for (Scheme s : {Scheme::caputo_gl, Scheme::rl_gl}) {
        const auto pts = convergence_study(Alpha(0.5), hs, 5.0, s);
        REQUIRE(pts.size() == 4);
        for (size_t i = 1; i < pts.size(); ++i) {
            CHECK(pts[i].max_abs_err < pts[i - 1].max_abs_err);
            CHECK(pts[i].observed_order > 0.0);
        }
    }
}

TEST_CASE("convergence study: classical case is first order") {
    const double hs[] = {1e-2, 5e-3, 2.5e-3};
    const auto pts = convergence_study(Alpha(1.0), hs, 5.0, Scheme::caputo_gl);
    CHECK(std::abs(pts[1].observed_order - 1.0) < 0.1);
    CHECK(std::abs(pts[2].observed_order - 1.0) < 0.1);
}

TEST_CASE("error at fixed time is first order even with the singular layer") {
    // the t = 0 boundary layer limits the max-norm rate, but at a fixed node
    // the scheme converges at its design order
    for (double a : {0.5, 0.75}) {
        double errs[2];
        int i = 0;
        for (double h : {1e-2, 5e-3}) {
            const auto run = solve_relaxation(Alpha(a), h, 5.0, Scheme::caputo_gl);
            errs[i++] = std::abs(run.trajectory.back().second - eval_auto(Alpha(a), 5.0).value);
        }
        const double order = std::log2(errs[0] / errs[1]);
        CHECK(order > 0.8);
        CHECK(order < 1.3);
    }
}

TEST_CASE("solver preconditions") {
    CHECK_THROWS_AS(solve_relaxation(Alpha(0.5), 1.0, 5.0, Scheme::caputo_gl), DomainError);
    CHECK_THROWS_AS(solve_relaxation(Alpha(0.5), -0.1, 5.0, Scheme::caputo_gl), DomainError);
    const double hs_bad[] = {1e-2, 5e-3};
    CHECK_THROWS_AS(convergence_study(Alpha(0.5), hs_bad, 5.0, Scheme::caputo_gl), DomainError);
    const double hs_up[] = {1e-3, 5e-3, 1e-2};
    CHECK_THROWS_AS(convergence_study(Alpha(0.5), hs_up, 5.0, Scheme::caputo_gl), DomainError);
}
