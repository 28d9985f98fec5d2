#include "helmlab/fem/quadrature.hpp"

#include <cmath>

#include "helmlab/errors.hpp"

namespace helmlab::fem {

const std::vector<TrianglePoint>& triangle_rule_deg5() {
  static const std::vector<TrianglePoint> rule = [] {
    std::vector<TrianglePoint> r;
    const double s15 = std::sqrt(15.0);
    r.push_back({1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0});
    const double b1 = (6.0 + s15) / 21.0, a1 = 1.0 - 2.0 * b1;
    const double w1 = (155.0 + s15) / 1200.0;
    const double b2 = (6.0 - s15) / 21.0, a2 = 1.0 - 2.0 * b2;
    const double w2 = (155.0 - s15) / 1200.0;
    auto orbit3 = [&r](double a, double b, double w) {
      r.push_back({a, b, w});
      r.push_back({b, a, w});
      r.push_back({b, b, w});
    };
    orbit3(a1, b1, w1);
    orbit3(a2, b2, w2);
    return r;
  }();
  return rule;
}

const std::vector<TrianglePoint>& triangle_rule_deg6() {
  static const std::vector<TrianglePoint> rule = [] {
    std::vector<TrianglePoint> r;
    auto orbit3 = [&r](double a, double b, double w) {
      r.push_back({a, b, w});
      r.push_back({b, a, w});
      r.push_back({b, b, w});
    };
    auto orbit6 = [&r](double a, double b, double c, double w) {
      r.push_back({a, b, w});
      r.push_back({b, a, w});
      r.push_back({a, c, w});
      r.push_back({c, a, w});
      r.push_back({b, c, w});
      r.push_back({c, b, w});
    };
    orbit3(0.873821971016996, 0.063089014491502, 0.050844906370207);
    orbit3(0.501426509658179, 0.249286745170910, 0.116786275726379);
    orbit6(0.636502499121399, 0.310352451033785, 0.053145049844816,
           0.082851075618374);
    return r;
  }();
  return rule;
}

const std::vector<TrianglePoint>& triangle_rule_for_order(int p) {
  if (p <= 2) return triangle_rule_deg5();
  if (p == 3) return triangle_rule_deg6();
  throw GeometryError("unsupported element order");
}

const std::vector<LinePoint>& line_rule_5() {
  static const std::vector<LinePoint> rule = [] {
    // 5-point Gauss-Legendre on [-1,1], mapped to [0,1].
    const double x1 = 0.0;
    const double x2 = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double x3 = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double w1 = 128.0 / 225.0;
    const double w2 = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    const double w3 = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    std::vector<LinePoint> r;
    for (auto [x, w] : {std::pair{-x3, w3}, {-x2, w2}, {x1, w1}, {x2, w2}, {x3, w3}})
      r.push_back({0.5 * (x + 1.0), 0.5 * w});
    return r;
  }();
  return rule;
}

}  // namespace helmlab::fem
