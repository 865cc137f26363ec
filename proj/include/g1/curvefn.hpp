#ifndef G1_CURVEFN_HPP
#define G1_CURVEFN_HPP

// Functions on a fixed Weierstrass curve written as a(x) + b(x)·y with a, b
// univariate rational functions; y^2 is reduced through the curve equation.
// These are the section spaces of the line bundles used by the inverse
// constructions.

#include <stdexcept>

#include "g1/elliptic.hpp"
#include "g1/linalg.hpp"
#include "g1/unipoly.hpp"

namespace g1 {

struct RatFn {
  UniPoly num, den;  // den nonzero; normalized below

  RatFn() : den(uni_const(Rat(1))) {}
  RatFn(UniPoly n, UniPoly d) : num(std::move(n)), den(std::move(d)) {
    normalize();
  }
  static RatFn from_poly(UniPoly p) { return RatFn(std::move(p), uni_const(Rat(1))); }

  bool is_zero() const { return uni_is_zero(num); }

  // Reduce by the monic gcd, clear coefficient denominators, strip integer
  // content, and fix the sign of the leading denominator coefficient.
  void normalize() {
    if (uni_is_zero(den)) throw std::invalid_argument("zero denominator");
    if (uni_is_zero(num)) {
      den = uni_const(Rat(1));
      return;
    }
    UniPoly g = uni_gcd(num, den);
    if (uni_deg(g) >= 1) {
      UniPoly q, r;
      uni_divmod(num, g, q, r);
      num = q;
      uni_divmod(den, g, q, r);
      den = q;
    }
    Int lcm(1), content(0);
    for (const auto& c : num) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    for (const auto& c : den) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    for (auto* p : {&num, &den})
      for (auto& c : *p) {
        c *= Rat(lcm);
        content = gcd(content, c.get_num());
      }
    if (content > 1)
      for (auto* p : {&num, &den})
        for (auto& c : *p) c /= Rat(content);
    if (den.back() < 0)
      for (auto* p : {&num, &den})
        for (auto& c : *p) c = -c;
  }

  RatFn operator+(const RatFn& o) const {
    return RatFn(uni_add(uni_mul(num, o.den), uni_mul(o.num, den)),
                 uni_mul(den, o.den));
  }
  RatFn operator-(const RatFn& o) const {
    return RatFn(uni_sub(uni_mul(num, o.den), uni_mul(o.num, den)),
                 uni_mul(den, o.den));
  }
  RatFn operator*(const RatFn& o) const {
    return RatFn(uni_mul(num, o.num), uni_mul(den, o.den));
  }
  RatFn scale(const Rat& c) const { return RatFn(uni_scale(num, c), den); }
};

struct CurveFunction {
  const WeierstrassCurve* curve;
  RatFn a, b;  // represents a(x) + b(x)·y

  explicit CurveFunction(const WeierstrassCurve& e) : curve(&e) {}
  static CurveFunction constant(const WeierstrassCurve& e, const Rat& c) {
    CurveFunction f(e);
    f.a = RatFn::from_poly(uni_const(c));
    return f;
  }
  static CurveFunction coord_x(const WeierstrassCurve& e) {
    CurveFunction f(e);
    f.a = RatFn::from_poly(uni_x());
    return f;
  }
  static CurveFunction coord_y(const WeierstrassCurve& e) {
    CurveFunction f(e);
    f.b = RatFn::from_poly(uni_const(Rat(1)));
    return f;
  }

  CurveFunction operator+(const CurveFunction& o) const {
    CurveFunction r(*curve);
    r.a = a + o.a;
    r.b = b + o.b;
    return r;
  }
  CurveFunction operator-(const CurveFunction& o) const {
    CurveFunction r(*curve);
    r.a = a - o.a;
    r.b = b - o.b;
    return r;
  }
  CurveFunction operator*(const CurveFunction& o) const {
    // (a1 + b1 y)(a2 + b2 y), with y^2 = f(x) - (a1coef*x + a3)*y.
    const WeierstrassCurve& e = *curve;
    UniPoly f{e.a6, e.a4, e.a2, Rat(1)};  // x^3 + a2 x^2 + a4 x + a6
    uni_trim(f);
    UniPoly lin{e.a3, e.a1};
    uni_trim(lin);
    RatFn fr = RatFn::from_poly(f), linr = RatFn::from_poly(lin);
    CurveFunction r(e);
    RatFn bd = b * o.b;
    r.a = a * o.a + bd * fr;
    r.b = a * o.b + b * o.a - bd * linr;
    return r;
  }
  CurveFunction scale(const Rat& c) const {
    CurveFunction r(*curve);
    r.a = a.scale(c);
    r.b = b.scale(c);
    return r;
  }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  // Evaluation at an affine point with nonvanishing denominators.
  Rat eval(const CurvePoint& p) const {
    Rat va = uni_eval(a.num, p.x) / uni_eval(a.den, p.x);
    Rat vb = uni_eval(b.num, p.x) / uni_eval(b.den, p.x);
    return va + vb * p.y;
  }
};

// Expresses each of `funcs` in the span of `basis`: returns the matrix of
// coordinates (rows = funcs).  Throws if some function is not in the span.
Mat express_in_basis(const std::vector<CurveFunction>& funcs,
                     const std::vector<CurveFunction>& basis);

}  // namespace g1

#endif  // G1_CURVEFN_HPP
