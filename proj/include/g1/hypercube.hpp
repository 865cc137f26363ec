#ifndef G1_HYPERCUBE_HPP
#define G1_HYPERCUBE_HPP

// 2x2x2x2 tensor ("hypercube") machinery: covariant binary quartics, the
// I/J invariants, the calibrated generators (a2, a4, a4', a6) with their
// derived family, the Jacobian with three marked collinear points, the
// inverse construction from a curve and two marked points, the explicit
// desymmetrization transforms, and tetrahedron point-chasing.

#include <array>
#include <utility>

#include "g1/classical.hpp"
#include "g1/elliptic.hpp"
#include "g1/poly.hpp"
#include "g1/rubiks.hpp"
#include "g1/tensor.hpp"

namespace g1 {

struct BadMarkedPoints : std::runtime_error {
  BadMarkedPoints()
      : std::runtime_error("marked points violate the distinctness conditions") {}
};
struct InterpolationFailed : std::runtime_error {
  InterpolationFailed()
      : std::runtime_error("pencil interpolation found no consistent value") {}
};
struct DegenerateTransform : std::runtime_error {
  DegenerateTransform()
      : std::runtime_error("desymmetrization transform is singular") {}
};

// f_i(x,y) for the four slicing directions: the cube discriminant of the
// pencil of 2x2x2 cubes (front x + back y) sliced along axis i, as a
// 5-coefficient binary quartic.  All four share I and J.
std::array<std::vector<Rat>, 4> hc_binary_quartics(const RationalTensor& h);

struct HypercubeIJ {
  Rat I, J, Delta;  // Delta = 4 I^3 - J^2; nondegenerate iff Delta != 0
};

HypercubeIJ hc_IJ(const RationalTensor& h);

// The (2,2) form det of the 2x2 matrix of bilinear forms obtained by
// contracting the first axis of `axes` with w-variables and the second with
// x-variables (remaining axes index the matrix, in increasing order).
// Coefficients in the form22 order of classical.hpp.
std::vector<Rat> hc_22form(const RationalTensor& h, std::pair<int, int> axes);

struct HypercubeInvariants {
  Rat a2, a4, a4p, a6;        // free generators, degrees 2, 4, 4, 6
  Rat a6p, a4pp, a6pp;        // coordinates of the other marked points
  Rat a8, a12;                // curve coefficients: a8 = -27 I, a12 = -27 J
  Rat I, J, Delta;            // Delta = 4 I^3 - J^2
};

// Calibrated invariants.  a2 comes from the scaled derived degree-2
// invariant, (a4, a4') from the pinned combinations of the derived degree-4
// basis, and a6 from the exact linear relation
//   a6 + a6' = (a8 + a4^2 + a4 a4' + a4'^2) / a2        (a2 != 0)
// or, when a2 = 0, from degree-6 interpolation along a pencil toward the
// calibration anchor.  Throws Degenerate when Delta = 0.
HypercubeInvariants hc_invariants(const RationalTensor& h);

struct HypercubeJacobian {
  WeierstrassCurve curve;  // y^2 = x^3 + a8 x + a12
  CurvePoint P, Pp, Ppp;   // (a4,a6), (a4',a6'), (a4'',a6''); collinear with
                           // slope a2 and P + P' + P'' = O
};

HypercubeJacobian hc_jacobian_points(const RationalTensor& h);

// Inverse construction.  Given a nonsingular curve E and points P, P' with
// P, P', P'' := -(P+P') all nonzero, P != P' and P != P'', expands the eight
// products of the section bases {1, x}, {1, g_P}, {1, g_P'} (where
// g_Q = (y + yQ + a1 xQ + a3)/(x - xQ)) in the six-dimensional section basis
// {1, x, y, x^2, g_P, g_P'} and returns the two-dimensional kernel of the
// 8x6 product matrix as a hypercube (axes: {1,x}, {1,g_P}, {1,g_P'}, kernel).
RationalTensor hc_construct(const WeierstrassCurve& e, const CurvePoint& p,
                            const CurvePoint& pp);

// Desymmetrization of a hypercube symmetric in its last two axes: applies an
// explicit degree-3 transform on axis 0 making the result symmetric in the
// first two axes as well.  The transform determinant is a6'/27; throws
// DegenerateTransform when it vanishes.
RationalTensor hc_desym_2sym(const RationalTensor& h);

// Same for a hypercube symmetric in its last three axes; the result is fully
// symmetric.  The transform determinant is a6/108.
RationalTensor hc_desym_3sym(const RationalTensor& h);

// A point of one of the curves C_{ijk}: the three active axes (ascending)
// and the projective 2-vectors on them, each normalized so its first nonzero
// coordinate is 1.  The start state must satisfy h(w1, w2, w3, .) = 0 over
// the missing axis.
struct ChaseState {
  std::array<int, 3> axes;
  std::array<Vec, 3> pts;

  bool operator==(const ChaseState& o) const {
    return axes == o.axes && pts == o.pts;
  }
};

// Applies tetrahedron moves in order: each move names an axis of the current
// triple to drop; the kept two coordinates are contracted into a 2x2 matrix
// whose one-dimensional kernel is the coordinate on the previously missing
// axis.  Throws NotOnCurve for a bad start and KernelRankUnexpected when a
// contraction kernel is not one-dimensional.
ChaseState hc_chase(const RationalTensor& h, const ChaseState& start,
                    const std::vector<int>& drops);

// The derived (uncalibrated) invariants used by the calibration machinery:
// the one-dimensional degree-2 space and the three-dimensional degree-4
// basis, as polynomials in the 16 entries.
const SparsePoly& hc_derived_deg2();
const std::vector<SparsePoly>& hc_derived_deg4();

}  // namespace g1

#endif  // G1_HYPERCUBE_HPP
