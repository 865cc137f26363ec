#ifndef G1_CLASSICAL_HPP
#define G1_CLASSICAL_HPP

// Closed-form invariants and covariants for the low-dimensional spaces:
// binary quartics, 2x2x2 cubes, ternary cubics, (2,2) forms, pencils of
// quadrics and Pfaffian models, plus the Hessian constructions.

#include <array>

#include "g1/elliptic.hpp"
#include "g1/linalg.hpp"
#include "g1/poly.hpp"
#include "g1/tensor.hpp"

namespace g1 {

struct Degenerate : std::runtime_error {
  Degenerate() : std::runtime_error("degenerate input (vanishing discriminant)") {}
};
struct CalibrationMissing : std::runtime_error {
  CalibrationMissing() : std::runtime_error("no calibration record available") {}
};

// ---- Binary quartics: a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4,
//      coefficient list (a,b,c,d,e). ----

struct BinaryQuarticInvariants {
  Rat I, J, Delta;  // Delta = 4 I^3 - J^2
};

BinaryQuarticInvariants bq_invariants(const std::vector<Rat>& q);

// y^2 = x^3 - 27 I x - 27 J; throws Degenerate when Delta = 0.
WeierstrassCurve bq_jacobian(const std::vector<Rat>& q);

// Binary quartic covariant: discriminant of the 2x2x2 cube of triple partial
// derivatives of q (raw determinant values, no rescaling).
std::vector<Rat> bq_hessian(const std::vector<Rat>& q);

// Applies g to a binary form of degree `deg` (coefficients of x^(deg-m) y^m):
// variables substitute as (x, y) -> (g11 x + g21 y, g12 x + g22 y), matching
// act_tied on the symmetric embedding.
std::vector<Rat> binary_form_act(const std::vector<Rat>& coeffs, const Mat& g);

// ---- 2x2x2 cubes ----

struct CubeDisc {
  Rat Delta;
  // Q[l] = coefficients (x^2, xy, y^2) of Q_l(x,y) = det(M_l x + N_l y) for
  // the three slicings; Delta = disc(Q_l) = b^2 - 4ac for each l.
  std::array<std::array<Rat, 3>, 3> Q;
};

CubeDisc cube_disc(const RationalTensor& a);

// ---- Ternary cubics: 10 coefficients in the monomial order
//      x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3. ----

struct TernaryCubicInvariants {
  Rat d4, d6, Delta;  // 1728 Delta = d4^3 - d6^2
};

// Calibrated invariants (see calibration machinery); throws
// CalibrationMissing until a calibration record has been established.
TernaryCubicInvariants tc_invariants(const std::vector<Rat>& f);

// y^2 = x^3 - 27 d4 x - 54 d6; throws Degenerate when Delta = 0.
WeierstrassCurve tc_jacobian(const std::vector<Rat>& f);

// Determinant of the 3x3 matrix of second partials, as a ternary cubic.
std::vector<Rat> tc_hessian(const std::vector<Rat>& f);

// Applies g in GL3 to a ternary cubic (same substitution convention as
// binary_form_act).
std::vector<Rat> ternary_cubic_act(const std::vector<Rat>& f, const Mat& g);

// Ternary cubic as a polynomial in (x, y, z) and back.
SparsePoly ternary_cubic_poly(const std::vector<Rat>& f);
std::vector<Rat> ternary_cubic_coeffs(const SparsePoly& p);

// ---- (2,2) forms: 9 coefficients (a22, a32, a42, a23, a33, a43, a24, a34,
//      a44), the form being sum a_{ij} (w-quadratic i) (x-quadratic j) with
//      index 2,3,4 <-> w1^2, w1w2, w2^2 resp. x1^2, x1x2, x2^2. ----

struct Form22Invariants {
  Rat delta2, delta3, delta4, I, J, Delta;
  std::vector<Rat> q1, q2;  // the two covariant binary quartics
};

Form22Invariants form22_invariants(const std::vector<Rat>& a);

struct Form22Jacobian {
  WeierstrassCurve model;        // y^2 + 216 d3 y = x^3 + 9 d2 x^2 + (27 d2^2 - 27 d4) x
  WeierstrassCurve short_curve;  // y^2 = x^3 - 27 I x - 27 J
  CurvePoint point;              // (3 d2, 108 d3) on short_curve
};

Form22Jacobian form22_jacobian_point(const std::vector<Rat>& a);

// Determinant of the 2x2 matrix of mixed second partials d^2 f / dw_i dx_j.
std::vector<Rat> form22_hessian(const std::vector<Rat>& a);

// Applies (g, h) in GL2 x GL2 (standard, untwisted action).
std::vector<Rat> form22_act(const std::vector<Rat>& a, const Mat& g, const Mat& h);

// ---- Pencils of quadrics ----

struct QuadricPencilInvariants {
  Rat d8, d12;         // I and J of q
  std::vector<Rat> q;  // det(Ax + By), binary quartic coefficients
};

// A, B symmetric 4x4 matrices.
QuadricPencilInvariants quadric_pencil_invariants(const Mat& a, const Mat& b);

// ---- Pfaffian models ----

// Phi has shape {5,5,5}; entry (i,j,k) is the x_i-coefficient of the (j,k)
// entry of a 5x5 skew matrix of linear forms (the (j,k) and (k,j) parts are
// averaged so non-skew input is projected).  Returns the five principal 4x4
// sub-Pfaffians (delete row/column m), each a quadratic form in 5 variables,
// with Pf([[0,a,b,c],[-a,0,d,e],[-b,-d,0,f],[-c,-e,-f,0]]) = af - be + cd.
std::vector<SparsePoly> pfaffian_quadrics(const RationalTensor& phi);

// Exact determinant of a square rational matrix (Bareiss).
Rat mat_det(const Mat& m);

}  // namespace g1

#endif  // G1_CLASSICAL_HPP
