#pragma once

#include <array>
#include <vector>

namespace helmlab::fem {

struct TrianglePoint {
  double xi, eta, weight;  // weights sum to 1 (multiply by triangle area)
};

/// Symmetric rules on the reference triangle: 7-point (degree 5) and
/// 12-point (degree 6).
const std::vector<TrianglePoint>& triangle_rule_deg5();
const std::vector<TrianglePoint>& triangle_rule_deg6();

/// Rule for Lagrange order p: degree-5 for p <= 2, degree-6 for p = 3.
const std::vector<TrianglePoint>& triangle_rule_for_order(int p);

struct LinePoint {
  double t, weight;  // on [0,1], weights sum to 1
};

/// Gauss-Legendre rule on [0,1].
const std::vector<LinePoint>& line_rule_5();

}  // namespace helmlab::fem
