#ifndef G1_RUBIKS_HPP
#define G1_RUBIKS_HPP

// 3x3x3 tensor ("Rubik's cube") machinery: covariant ternary cubics, the
// degree 6/9/12 invariants, the Jacobian with its marked point, the inverse
// construction from target invariants, and triangle point-chasing on the
// associated genus one curves.

#include <array>

#include "g1/classical.hpp"
#include "g1/elliptic.hpp"
#include "g1/tensor.hpp"

namespace g1 {

struct AllSlicesSingular : std::runtime_error {
  AllSlicesSingular()
      : std::runtime_error("every middle slice is singular in all directions") {}
};
struct RootTrackingFailed : std::runtime_error {
  RootTrackingFailed()
      : std::runtime_error("root tracking found no consistent interpolant") {}
};
struct SingularTarget : std::runtime_error {
  SingularTarget() : std::runtime_error("target curve is singular") {}
};
struct NotOnCurve : std::runtime_error {
  NotOnCurve() : std::runtime_error("point does not lie on the curve") {}
};
struct KernelRankUnexpected : std::runtime_error {
  KernelRankUnexpected()
      : std::runtime_error("contraction kernel is not one-dimensional") {}
};

struct RubiksInvariants {
  Rat c6, c9, c12;      // generators, degrees 6, 9, 12 in the entries
  Rat d4, d6, d18;      // d4 = 16c6^2 - 48c12, d6 = -64c6^3 - 216c9^2
                        //   + 288 c6 c12, d18 = -54 d6
  Rat Delta;            // discriminant of y^2 + c9 y = x^3 + c6 x^2 + c12 x
};

// f_i(x,y,z) = det of (front x + middle y + back z) for the three slicing
// directions (axes 0, 1, 2), as 10-coefficient ternary cubics.
std::array<std::vector<Rat>, 3> rc_ternary_cubics(const RationalTensor& b);

// The degree-9 invariant det(M1 adj(M2) M3 - M3 adj(M2) M1) / det(M2), taken
// in the first slicing direction with an invertible middle slice.  When all
// three middle slices are singular, retries after random determinant-one
// coordinate changes (which fix the value) up to ten times.
Rat rc_strassen(const RationalTensor& b);

// All invariants.  c6 is pinned as the rational root of
// 32 X^3 - 6 d4 X - (216 c9^2 + d6) selected by root tracking along the
// pencil toward a calibration anchor with known c6.
RubiksInvariants rc_invariants(const RationalTensor& b);

struct RubiksJacobian {
  WeierstrassCurve curve;        // y^2 + c9 y = x^3 + c6 x^2 + c12 x
  CurvePoint point;              // (0, 0)
  WeierstrassCurve short_curve;  // y^2 = x^3 - 27 d4 x - 54 d6
  CurvePoint short_point;        // (12 c6, 108 c9)
};

RubiksJacobian rc_jacobian_point(const RationalTensor& b);

// Inverse construction: a 3x3x3 tensor whose invariants are
// (lambda^6 c6, lambda^9 c9, lambda^12 c12) for a single rational weight.
// Expands the section products of O(3O) x O(2O + P) on the target curve in
// the basis {1, x, y, x^2, xy, g} and returns the kernel of the resulting
// 9x6 product matrix.  Throws SingularTarget when the curve
// y^2 + c9 y = x^3 + c6 x^2 + c12 x is singular.
RationalTensor rc_construct(const Rat& c6, const Rat& c9, const Rat& c12);

// One full triangle of isomorphisms C12 -> C23 -> C13 -> C12, clockwise or
// counterclockwise; clockwise composes to translation by a point P of the
// Jacobian and counterclockwise to translation by -P.
enum class TriangleMove { Clockwise, Counterclockwise };

// A point of C12: a pair of projective 3-vectors (w, x) with B(w, x, .) = 0,
// each normalized so its first nonzero coordinate is 1.
struct C12Point {
  Vec w, x;
  bool operator==(const C12Point& o) const { return w == o.w && x == o.x; }
};

C12Point rc_chase(const RationalTensor& b, const C12Point& start,
                  const std::vector<TriangleMove>& steps);

}  // namespace g1

#endif  // G1_RUBIKS_HPP
