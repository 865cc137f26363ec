#ifndef G1_ELLIPTIC_HPP
#define G1_ELLIPTIC_HPP

// Generalized Weierstrass curves y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// over the rationals, with the exact chord-tangent group law.

#include <optional>
#include <stdexcept>

#include "g1/rational.hpp"

namespace g1 {

struct PointNotOnCurve : std::runtime_error {
  PointNotOnCurve() : std::runtime_error("point is not on the curve") {}
};
struct SingularCurve : std::runtime_error {
  SingularCurve() : std::runtime_error("curve is singular") {}
};

struct CurvePoint {
  bool infinity = true;
  Rat x, y;

  CurvePoint() = default;  // the point at infinity O
  CurvePoint(Rat xx, Rat yy) : infinity(false), x(std::move(xx)), y(std::move(yy)) {}
  static CurvePoint O() { return CurvePoint(); }

  bool operator==(const CurvePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;
  Rat b2, b4, b6, b8, disc;  // standard b-invariants and discriminant

  WeierstrassCurve(Rat A1, Rat A2, Rat A3, Rat A4, Rat A6)
      : a1(std::move(A1)), a2(std::move(A2)), a3(std::move(A3)),
        a4(std::move(A4)), a6(std::move(A6)) {
    b2 = a1 * a1 + 4 * a2;
    b4 = 2 * a4 + a1 * a3;
    b6 = a3 * a3 + 4 * a6;
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  }

  bool singular() const { return disc == 0; }

  // c-invariants and j-invariant (valid when nonsingular).
  Rat c4() const { return b2 * b2 - 24 * b4; }
  Rat c6() const { return -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6; }
  Rat j_invariant() const {
    if (singular()) throw SingularCurve();
    Rat c = c4();
    return c * c * c / disc;
  }

  bool contains(const CurvePoint& p) const {
    if (p.infinity) return true;
    Rat lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
    Rat rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
    return lhs == rhs;
  }

  CurvePoint negate(const CurvePoint& p) const {
    if (p.infinity) return p;
    return CurvePoint(p.x, -p.y - a1 * p.x - a3);
  }
};

inline WeierstrassCurve curve_new(const Rat& a1, const Rat& a2, const Rat& a3,
                                  const Rat& a4, const Rat& a6) {
  return WeierstrassCurve(a1, a2, a3, a4, a6);
}

CurvePoint add_points(const WeierstrassCurve& e, const CurvePoint& p,
                      const CurvePoint& q);

CurvePoint mul_point(const WeierstrassCurve& e, const Int& n, CurvePoint p);

// Least n <= bound with n*P = O, or nullopt.
std::optional<int> torsion_order(const WeierstrassCurve& e, const CurvePoint& p,
                                 int bound = 12);

}  // namespace g1

#endif  // G1_ELLIPTIC_HPP
