#pragma once

#include <utility>
#include <vector>

namespace xx0 {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Same rule mapped to (0, 1).
GaussLegendre gauss_legendre01(int n);

/// Finite-difference weights for the m-th derivative at x0 from arbitrary
/// nodes xs (Fornberg's recurrence). Returns one weight per node.
std::vector<double> fornberg_weights(double x0, const std::vector<double>& xs, int m);

} // namespace xx0
