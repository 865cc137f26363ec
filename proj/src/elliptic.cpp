#include "g1/elliptic.hpp"

namespace g1 {

CurvePoint add_points(const WeierstrassCurve& e, const CurvePoint& p,
                      const CurvePoint& q) {
  if (e.singular()) throw SingularCurve();
  if (!e.contains(p) || !e.contains(q)) throw PointNotOnCurve();
  if (p.infinity) return q;
  if (q.infinity) return p;
  if (q == e.negate(p)) return CurvePoint::O();

  // Chord (P != Q) or tangent (P == Q) slope.
  Rat lambda, nu;
  if (p.x == q.x && p.y == q.y) {
    Rat denom = 2 * p.y + e.a1 * p.x + e.a3;
    lambda = (3 * p.x * p.x + 2 * e.a2 * p.x + e.a4 - e.a1 * p.y) / denom;
    nu = (-p.x * p.x * p.x + e.a4 * p.x + 2 * e.a6 - e.a3 * p.y) / denom;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  }
  Rat x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  Rat y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return CurvePoint(x3, y3);
}

CurvePoint mul_point(const WeierstrassCurve& e, const Int& n, CurvePoint p) {
  Int k = n;
  if (k < 0) {
    p = e.negate(p);
    k = -k;
  }
  CurvePoint acc = CurvePoint::O();
  CurvePoint base = p;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = add_points(e, acc, base);
    k >>= 1;
    if (k > 0) base = add_points(e, base, base);
  }
  return acc;
}

std::optional<int> torsion_order(const WeierstrassCurve& e, const CurvePoint& p,
                                 int bound) {
  if (!e.contains(p)) throw PointNotOnCurve();
  CurvePoint acc = CurvePoint::O();
  for (int n = 1; n <= bound; n++) {
    acc = add_points(e, acc, p);
    if (acc.infinity) return n;
  }
  return std::nullopt;
}

}  // namespace g1
