#include "mlrelax/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "mlrelax/errors.hpp"
#include "mlrelax/gamma.hpp"
#include "mlrelax/quadrature.hpp"

namespace mlrelax {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();

void require_time(double t, const char* who, bool strictly_positive = false) {
    if (!std::isfinite(t) || t < 0.0 || (strictly_positive && t == 0.0))
        throw DomainError(std::string(who) + ": t outside domain");
}

long double lgamma_ld(long double x) {
#if defined(__GLIBC__)
    int sign = 0;
    return lgammal_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

// Compensated (Neumaier) accumulator. The alternating series loses up to
// eight digits to cancellation near x = t^alpha ~ 2; running the sum and the
// term construction in long double keeps the result well inside the
// cross-method agreement budget.
struct Accumulator {
    long double sum{0.0L};
    long double comp{0.0L};

    void add(long double v) {
        const long double next = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - next) + v;
        else
            comp += (v - next) + sum;
        sum = next;
    }
    long double total() const { return sum + comp; }
};

// alpha*n sits on a pole of Gamma(1 - alpha*n) whenever alpha*n is a positive
// integer; treat near-hits as exact so that rounding in alpha*n cannot leave
// a spurious micro-term that derails the decrease test.
bool asymptotic_pole_term(double alpha, int n) {
    const double an = alpha * n;
    const double k = std::nearbyint(an);
    return k >= 1.0 && std::abs(an - k) <= 1e-9 * n;
}

}  // namespace

EvalResult eval_series(Alpha alpha, double t, Tolerance tol) {
    require_time(t, "eval_series");
    if (t == 0.0) return {1.0, 0.0, Method::series};

    const long double a = alpha.value();
    const long double x = std::pow(static_cast<long double>(t), a);
    const long double lnx = std::log(x);

    Accumulator acc;
    acc.add(1.0L);  // n = 0
    long double abs_sum = 1.0L;
    long double prev_mag = 1.0L;
    long double noise_scale = 32.0L;
    bool decreasing = false;

    for (int n = 1; n <= 10000; ++n) {
        const long double garg = n * a + 1.0L;
        long double mag;
        if (garg < 1700.0L && std::fabs(n * lnx) < 11000.0L) {
            mag = std::pow(x, static_cast<long double>(n)) / std::tgamma(garg);
        } else {
            const long double ln_mag = n * lnx - lgamma_ld(garg);
            if (ln_mag > 11200.0L)
                throw ConvergenceError(
                    "eval_series: terms outgrow the representable range before converging");
            mag = std::exp(ln_mag);
            noise_scale = std::max(noise_scale, std::fabs(n * lnx) + std::fabs(ln_mag));
        }

        const long double stop_at =
            static_cast<long double>(tol.rel) * std::fabs(acc.total()) + tol.abs;
        if (mag < stop_at || mag == 0.0L) {
            const double value = static_cast<double>(acc.total());
            const double err = static_cast<double>(mag + noise_scale * kEpsLd * abs_sum);
            return {value, err, Method::series};
        }
        if (decreasing && mag > prev_mag * (1.0L + 1e-9L))
            throw ConvergenceError("eval_series: terms grow again before meeting tolerance");
        if (mag < prev_mag) decreasing = true;
        acc.add((n % 2 != 0) ? -mag : mag);
        abs_sum += mag;
        prev_mag = mag;
    }
    throw ConvergenceError("eval_series: stopping rule not met within 10000 terms");
}

EvalResult eval_asymptotic(Alpha alpha, double t) {
    require_time(t, "eval_asymptotic", /*strictly_positive=*/true);
    if (alpha.classical()) throw DomainError("eval_asymptotic: requires alpha < 1");

    const double a = alpha.value();
    const double lnt = std::log(t);
    constexpr double eps = std::numeric_limits<double>::epsilon();

    Accumulator acc;
    double abs_sum = 0.0;
    double prev_mag = 0.0;
    int used = 0;
    double first_omitted = 0.0;

    for (int n = 1; n <= 130; ++n) {
        if (asymptotic_pole_term(a, n)) continue;
        const double rg = recip_gamma(1.0 - a * n);
        if (rg == 0.0) continue;
        const double mag = std::exp(-(a * n) * lnt) * std::abs(rg);
        if (used == 0) {
            if (mag > 1.0)
                throw ConvergenceError(
                    "eval_asymptotic: leading term exceeds 1; t is below the asymptotic regime");
        } else if (mag >= prev_mag || used >= 100) {
            first_omitted = mag;
            break;
        }
        const double sign = ((n % 2 != 0) ? 1.0 : -1.0) * (rg > 0.0 ? 1.0 : -1.0);
        acc.add(sign * mag);
        abs_sum += mag;
        prev_mag = mag;
        ++used;
        if (mag == 0.0) break;  // terms underflowed; the expansion is exhausted
    }

    const double value = static_cast<double>(acc.total());
    const double err = first_omitted + 4.0 * eps * abs_sum;
    if (!(err < std::abs(value)))
        throw ConvergenceError(
            "eval_asymptotic: truncation error swamps the sum; t is below the asymptotic regime");
    return {value, err, Method::asymptotic};
}

EvalResult eval_spectral(Alpha alpha, double t, Tolerance tol) {
    require_time(t, "eval_spectral");
    if (alpha.classical()) throw DomainError("eval_spectral: requires alpha < 1");
    if (t == 0.0) return {1.0, 0.0, Method::spectral};

    const double a = alpha.value();
    const double inv_a = 1.0 / a;
    const double s = sin_pi(a);
    const double c = cos_pi(a);
    const double kappa = s / (a * kPi);

    // u = r^alpha:  e_alpha(t) = Int_0^inf kappa e^(-t u^(1/alpha))
    //                                     / ((u+c)^2 + s^2) du.
    auto body = [=](double u) {
        return kappa * std::exp(-t * std::pow(u, inv_a)) / ((u + c) * (u + c) + s * s);
    };

    const double upeak = (c < 0.0) ? -c : 1.0;
    const double uexp = std::pow(1.0 / t, a);   // exponent reaches 1 here
    const double ucut = std::pow(37.0 / t, a);  // exponential factor dies here
    const double body_end = std::max({4.0, 4.0 * upeak, ucut});

    std::vector<double> pts{0.0, body_end};
    for (double p : {0.5 * std::min(upeak, uexp), std::min(upeak, uexp), upeak, 2.0 * upeak, uexp})
        if (p > 0.0 && p < body_end) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    QuadOptions opt;
    opt.rel_tol = std::max(tol.rel * 0.2, 2e-14);
    opt.abs_tol = tol.abs * 0.2;

    const QuadOutcome head = integrate_adaptive(body, pts, opt);

    // Tail [body_end, inf) through v = 1/u; either the exponential factor is
    // already below e^-37 out there, or t is so small that the fold-back
    // carries real mass -- both land on the same smooth transformed kernel.
    auto tail_f = [=](double v) {
        const double w = t * std::pow(v, -inv_a);
        const double e = (w < 745.0) ? std::exp(-w) : 0.0;
        return kappa * e / ((1.0 + c * v) * (1.0 + c * v) + s * s * v * v);
    };
    const double tail_pts[] = {0.0, 1.0 / body_end};
    const QuadOutcome tail = integrate_adaptive(tail_f, tail_pts, opt);

    const double value = head.value + tail.value;
    const double err = head.err_est + tail.err_est +
                       4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
    if (!head.converged || !tail.converged) {
        if (err > 10.0 * std::max(tol.abs, tol.rel * std::abs(value)))
            throw QuadratureError("eval_spectral: quadrature failed to reach tolerance");
    }
    return {value, err, Method::spectral};
}

EvalResult eval_auto(Alpha alpha, double t, Tolerance tol, DispatchPolicy policy) {
    require_time(t, "eval_auto");
    if (alpha.classical()) {
        const double v = std::exp(-t);
        return {v, 2.0 * std::numeric_limits<double>::epsilon() * v, Method::exponential};
    }
    if (t == 0.0) return {1.0, 0.0, Method::series};

    const double x = std::pow(t, alpha.value());
    std::optional<EvalResult> best;
    std::exception_ptr failure;

    auto within_tol = [&](const EvalResult& r) {
        return r.err_est <= tol.rel * std::abs(r.value) + tol.abs;
    };
    auto consider = [&](auto&& evaluate) {
        if (best && within_tol(*best)) return;
        try {
            EvalResult r = evaluate();
            if (!best || r.err_est < best->err_est) best = r;
        } catch (const Error&) {
            if (!failure) failure = std::current_exception();
        }
    };

    if (x <= policy.series_max) {
        consider([&] { return eval_series(alpha, t, tol); });
        consider([&] { return eval_spectral(alpha, t, tol); });
    } else if (x >= policy.asymptotic_min) {
        consider([&] {
            EvalResult r = eval_asymptotic(alpha, t);
            if (!within_tol(r))
                throw ConvergenceError("eval_auto: asymptotic estimate misses tolerance");
            return r;
        });
        consider([&] { return eval_spectral(alpha, t, tol); });
    } else {
        consider([&] { return eval_spectral(alpha, t, tol); });
        consider([&] { return eval_series(alpha, t, tol); });
    }

    if (best) return *best;
    std::rethrow_exception(failure);
}

LaplacePair laplace_check(Alpha alpha, double s, Tolerance tol) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("laplace_check: s must be > 0");
    const double a = alpha.value();
    const double rhs = std::pow(s, a - 1.0) / (std::pow(s, a) + 1.0);

    const double horizon = 45.0 / s;  // exp(-s t) below 3e-20 past here
    auto f = [&](double t) { return std::exp(-s * t) * eval_auto(alpha, t, tol).value; };

    std::vector<double> pts{0.0, horizon};
    for (double p : {1e-3 * horizon, 1e-2 * horizon, 0.1 * horizon, std::min(1.0, 0.5 * horizon)})
        if (p > 0.0 && p < horizon) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    QuadOptions opt;
    opt.rel_tol = std::max(tol.rel * 0.5, 1e-11);
    opt.max_panels = 6000;
    const QuadOutcome q = integrate_adaptive(f, pts, opt);
    if (!q.converged && q.err_est > 10.0 * std::max(tol.abs, tol.rel * std::abs(q.value)))
        throw QuadratureError("laplace_check: quadrature failed to reach tolerance");
    return {q.value, rhs};
}

}  // namespace mlrelax
