#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace xx0 {

/// A real number stored as sign * exp(log_abs). Survives products that would
/// overflow double, e.g. determinants and Gamma-function ratios.
struct LogReal {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0; // -1, 0, +1

    static LogReal zero() { return {}; }
    static LogReal one() { return {0.0, 1}; }

    static LogReal from_value(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::abs(v)), v > 0 ? 1 : -1};
    }

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
    bool is_zero() const { return sign == 0; }

    LogReal& operator*=(const LogReal& o) {
        sign *= o.sign;
        log_abs = (sign == 0) ? -std::numeric_limits<double>::infinity() : log_abs + o.log_abs;
        return *this;
    }
    LogReal& operator/=(const LogReal& o) {
        sign *= o.sign;
        log_abs -= o.log_abs;
        return *this;
    }
    friend LogReal operator*(LogReal a, const LogReal& b) { return a *= b; }
    friend LogReal operator/(LogReal a, const LogReal& b) { return a /= b; }
};

/// Complex analogue: exp(log_abs) * exp(i phase).
struct LogComplex {
    double log_abs = -std::numeric_limits<double>::infinity();
    double phase = 0.0;
    bool zero = true;

    static LogComplex from_value(std::complex<double> v) {
        if (v == std::complex<double>(0.0, 0.0)) return {};
        return {std::log(std::abs(v)), std::arg(v), false};
    }
    std::complex<double> value() const {
        if (zero) return {0.0, 0.0};
        return std::polar(std::exp(log_abs), phase);
    }
    LogComplex& operator*=(const LogComplex& o) {
        zero = zero || o.zero;
        if (!zero) { log_abs += o.log_abs; phase += o.phase; }
        return *this;
    }
};

} // namespace xx0
