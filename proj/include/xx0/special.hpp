#pragma once

#include <utility>
#include <vector>

#include "xx0/log_value.hpp"

namespace xx0::special {

/// ln|Gamma(x)| with the sign of Gamma(x). Lanczos approximation plus the
/// reflection formula for x < 0.5; relative accuracy ~1e-13 on [0.5, 170].
/// Throws DomainError at the poles x = 0, -1, -2, ...
LogReal log_gamma(double x);

/// Convenience: Gamma(x) as LogReal (same preconditions as log_gamma).
inline LogReal gamma_log(double x) { return log_gamma(x); }

/// Modified Bessel function I_n(x), integer n >= 0, x >= 0.
/// Power series below x = 12, Miller downward recurrence above.
double bessel_i(int n, double x);

/// Bessel function J_n(x), integer n >= 0. Series below |x| = 12,
/// normalized Miller recurrence above.
double bessel_j(int n, double x);

struct AiryResult {
    double ai;
    double ai_prime;
};

/// Airy Ai and Ai'. Maclaurin series on [-7, 7], asymptotic expansions
/// beyond; supported for x >= -30 (the right tail improves with x, so no
/// upper cutoff). Throws DomainError for x < -30.
AiryResult airy(double x);

/// Partition-indexed Pochhammer [b]_lambda = prod_i (b + 1 - i)_(lambda_i).
/// Exact product; zero is a legitimate value.
double pochhammer_partition(double b, const std::vector<int>& lambda);

/// Rising factorial (b)_n as an exact finite product.
double pochhammer(double b, int n);

} // namespace xx0::special
