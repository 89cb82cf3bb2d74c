#include "xx0/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "xx0/errors.hpp"

namespace xx0::special {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos g = 7, 9 terms.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,   676.5203681218851,   -1259.1392167224028,
    771.32342877765313,    -176.61502916214059, 12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
};

// ln Gamma(x) for x >= 0.5.
double log_gamma_positive(double x) {
    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

LogReal log_gamma(double x) {
    if (is_nonpositive_integer(x))
        throw DomainError("log_gamma: pole at nonpositive integer x=" + std::to_string(x));
    if (x >= 0.5) return {log_gamma_positive(x), 1};
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const double s = std::sin(kPi * x);
    const double lg = std::log(kPi / std::abs(s)) - log_gamma_positive(1.0 - x);
    return {lg, s > 0 ? 1 : -1};
}

double bessel_i(int n, double x) {
    if (n < 0) throw DomainError("bessel_i: order must be >= 0");
    if (x < 0) throw DomainError("bessel_i: argument must be >= 0");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= 12.0) {
        // All-positive series, no cancellation.
        double term = 1.0;
        for (int k = 1; k <= n; ++k) term *= (x / 2.0) / k;
        double sum = term;
        for (int k = 1; k < 200; ++k) {
            term *= (x * x / 4.0) / (k * (n + k));
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return sum;
    }
    // Miller downward recurrence, normalized by e^x = I_0 + 2 sum I_k.
    int top = n + static_cast<int>(2.0 * std::sqrt(40.0 * (n + 1)) + 0.5 * x) + 40;
    double ip1 = 0.0, i0 = 1e-300;
    double norm = 0.0, target = 0.0;
    for (int k = top; k >= 1; --k) {
        double im1 = ip1 + (2.0 * k / x) * i0;
        ip1 = i0;
        i0 = im1;
        if (k == n + 1) target = ip1; // holds I_n un-normalized once k reaches n+1
        if (k <= n) target = target;  // value captured above
        norm += 2.0 * ip1 * ((k % 1 == 0) ? 1.0 : 0.0);
        if (std::abs(i0) > 1e270) { // rescale to avoid overflow
            i0 *= 1e-270;
            ip1 *= 1e-270;
            norm *= 1e-270;
            target *= 1e-270;
        }
    }
    if (n == 0) target = i0;
    norm += i0; // I_0 counted once
    return target * std::exp(x) / norm;
}

double bessel_j(int n, double x) {
    if (n < 0) throw DomainError("bessel_j: order must be >= 0");
    const double ax = std::abs(x);
    const double sign = (x < 0 && (n % 2 == 1)) ? -1.0 : 1.0;
    if (ax == 0.0) return n == 0 ? 1.0 : 0.0;
    if (ax <= 12.0) {
        double term = 1.0;
        for (int k = 1; k <= n; ++k) term *= (ax / 2.0) / k;
        double sum = term;
        for (int k = 1; k < 200; ++k) {
            term *= -(ax * ax / 4.0) / (k * (n + k));
            sum += term;
            if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30) && k > n / 2 + 4) break;
        }
        return sign * sum;
    }
    // Normalized Miller recurrence: J_0 + 2 (J_2 + J_4 + ...) = 1.
    int top = n + static_cast<int>(2.0 * std::sqrt(40.0 * (n + 1)) + ax) + 40;
    if (top % 2 == 1) ++top;
    double jp1 = 0.0, j0 = 1e-300;
    double norm = 0.0, target = 0.0;
    bool captured = false;
    for (int k = top; k >= 1; --k) {
        double jm1 = (2.0 * k / ax) * j0 - jp1;
        jp1 = j0;
        j0 = jm1;
        if (k == n + 1) { target = jp1; captured = true; }
        if (k % 2 == 0) norm += 2.0 * jp1;
        if (std::abs(j0) > 1e270) {
            j0 *= 1e-270;
            jp1 *= 1e-270;
            norm *= 1e-270;
            if (captured) target *= 1e-270;
        }
    }
    if (n == 0) target = j0;
    norm += j0;
    return sign * target / norm;
}

namespace {

// Maclaurin branch: Ai = c1 f - c2 g with the two standard series.
AiryResult airy_series(double x) {
    const double c1 = 0.35502805388781723926; // Ai(0)
    const double c2 = 0.25881940379280679840; // -Ai'(0)
    double f = 1.0, df = 0.0;   // f(x) = sum 3^k (1/3)_k x^(3k) / (3k)!
    double g = x, dg = 1.0;     // g(x) = sum 3^k (2/3)_k x^(3k+1) / (3k+1)!
    double tf = 1.0, tg = x;
    const double x3 = x * x * x;
    for (int k = 1; k < 80; ++k) {
        tf *= x3 / ((3.0 * k) * (3.0 * k - 1.0) * (3.0 * k - 2.0)) * (3.0 * k - 2.0);
        tg *= x3 / ((3.0 * k + 1.0) * (3.0 * k) * (3.0 * k - 1.0)) * (3.0 * k - 1.0);
        f += tf;
        g += tg;
        df += tf * (3.0 * k) / (x == 0.0 ? 1.0 : x);
        dg += tg * (3.0 * k + 1.0) / (x == 0.0 ? 1.0 : x);
        if (std::abs(tf) < 1e-18 && std::abs(tg) < 1e-18 && k > 4) break;
    }
    return {c1 * f - c2 * g, c1 * df - c2 * dg};
}

// Right asymptotic branch, x > 0 large: Ai ~ e^{-zeta} / (2 sqrt(pi) x^{1/4}) sum (-1)^k u_k zeta^{-k}.
AiryResult airy_asym_right(double x) {
    const double zeta = (2.0 / 3.0) * std::pow(x, 1.5);
    const double pre_log = -zeta - 0.25 * std::log(x) - 0.5 * std::log(4.0 * kPi);
    double u = 1.0, v = 1.0;
    double su = 1.0, sv = 1.0;
    double zk = 1.0;
    double prev = 1.0;
    for (int k = 0; k < 60; ++k) {
        const double un = u * (3.0 * k + 0.5) * (3.0 * k + 1.5) * (3.0 * k + 2.5) /
                          (54.0 * (k + 1.0) * (k + 0.5));
        const double vn = -un * (6.0 * k + 7.0) / (6.0 * k + 5.0);
        zk /= -zeta;
        const double tu = un * zk, tv = vn * zk;
        if (std::abs(tu) > prev) break; // asymptotic series: stop at smallest term
        prev = std::abs(tu);
        su += tu;
        sv += tv;
        u = un;
        v = vn;
        if (std::abs(tu) < 1e-18) break;
    }
    if (pre_log < -745.0) return {0.0, 0.0};
    const double pre = std::exp(pre_log);
    return {pre * su, -pre * std::pow(x, 0.5) * sv * (1.0)};
}

// Left oscillatory branch, x < 0 with |x| large.
AiryResult airy_asym_left(double x) {
    const double y = -x;
    const double zeta = (2.0 / 3.0) * std::pow(y, 1.5);
    const double phase = zeta + kPi / 4.0;
    // Split u_k, v_k into even/odd parts of the alternating expansions.
    double uk = 1.0, vk = 1.0;
    double ce = 1.0, co = 0.0; // cos/sin partial sums for Ai
    double de = 1.0, dn = 0.0; // for Ai'
    double zpow = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 60; ++k) {
        uk *= (3.0 * (k - 1) + 0.5) * (3.0 * (k - 1) + 1.5) * (3.0 * (k - 1) + 2.5) /
              (54.0 * k * (k - 0.5));
        vk = -uk * (6.0 * (k - 1) + 7.0) / (6.0 * (k - 1) + 5.0);
        zpow /= zeta;
        const double tu = uk * zpow, tv = vk * zpow;
        if (std::abs(tu) > prev) break;
        prev = std::abs(tu);
        const int r = k % 4;
        // (-1)^{floor(k/2)} pattern from i^k split into real/imag
        const double s4[4] = {1.0, 1.0, -1.0, -1.0};
        if (k % 2 == 0) {
            ce += s4[r] * tu;
            de += s4[r] * tv;
        } else {
            co += s4[r] * tu;
            dn += s4[r] * tv;
        }
        if (std::abs(tu) < 1e-18) break;
    }
    const double amp = 1.0 / (std::sqrt(kPi) * std::pow(y, 0.25));
    const double ai = amp * (std::sin(phase) * ce - std::cos(phase) * co);
    const double aip = -amp * std::pow(y, 0.5) * (std::cos(phase) * de + std::sin(phase) * dn);
    return {ai, aip};
}

} // namespace

AiryResult airy(double x) {
    if (x < -30.0) throw DomainError("airy: argument below -30 unsupported");
    if (std::abs(x) <= 7.0) return airy_series(x);
    return x > 0 ? airy_asym_right(x) : airy_asym_left(x);
}

double pochhammer(double b, int n) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= b + k;
    return p;
}

double pochhammer_partition(double b, const std::vector<int>& lambda) {
    double p = 1.0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        p *= pochhammer(b + 1.0 - static_cast<double>(i + 1), lambda[i]);
    return p;
}

} // namespace xx0::special
