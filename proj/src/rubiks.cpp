#include "g1/rubiks.hpp"

#include <algorithm>
#include <random>

#include "g1/calibration.hpp"
#include "g1/linalg.hpp"
#include "g1/poly.hpp"

namespace g1 {

namespace {

// Slice m of the cube along `axis`; rows and columns of the result are the
// remaining two axes in increasing order.
Mat cube_slice(const RationalTensor& b, int axis, int m) {
  Mat s(3, Vec(3, Rat(0)));
  int a1 = axis == 0 ? 1 : 0;
  int a2 = axis == 2 ? 1 : 2;
  for (int p = 0; p < 3; p++)
    for (int q = 0; q < 3; q++) {
      std::vector<int> idx(3);
      idx[axis] = m;
      idx[a1] = p;
      idx[a2] = q;
      s[p][q] = b.at(idx);
    }
  return s;
}

Mat mat_mul3(const Mat& a, const Mat& b) {
  Mat r(3, Vec(3, Rat(0)));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int k = 0; k < 3; k++) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat mat_adj3(const Mat& m) {
  Mat a(3, Vec(3, Rat(0)));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return a;
}

// Strassen quotient in one slicing direction, or nullopt when the middle
// slice is singular.
std::optional<Rat> strassen_direction(const RationalTensor& b, int axis) {
  Mat m1 = cube_slice(b, axis, 0), m2 = cube_slice(b, axis, 1),
      m3 = cube_slice(b, axis, 2);
  Rat d2 = mat_det(m2);
  if (d2 == 0) return std::nullopt;
  Mat a2 = mat_adj3(m2);
  Mat l = mat_mul3(mat_mul3(m1, a2), m3), r = mat_mul3(mat_mul3(m3, a2), m1);
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) l[i][j] -= r[i][j];
  // Slicing along the middle axis swaps the row/column roles relative to the
  // other two directions (an odd axis permutation), flipping the sign of the
  // commutator determinant; compensate so all directions agree.
  Rat v = mat_det(l) / d2;
  return axis == 1 ? -v : v;
}

Mat random_unimodular3(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat u(3, Vec(3, Rat(0))), l(3, Vec(3, Rat(0)));
  for (int i = 0; i < 3; i++) {
    u[i][i] = l[i][i] = Rat(1);
    for (int j = i + 1; j < 3; j++) {
      u[i][j] = Rat(d(rng));
      l[j][i] = Rat(d(rng));
    }
  }
  return mat_mul3(u, l);
}

// Normalizes a projective vector so its first nonzero coordinate is 1.
Vec normalize_projective(Vec v) {
  for (const Rat& c : v)
    if (c != 0) {
      Rat pivot = c;
      for (Rat& e : v) e /= pivot;
      return v;
    }
  throw KernelRankUnexpected();
}

// The unique (projective) kernel vector of m, or KernelRankUnexpected.
Vec kernel_line(const Mat& m) {
  std::vector<Vec> k = exact_kernel(m);
  if (k.size() != 1) throw KernelRankUnexpected();
  return normalize_projective(k[0]);
}

Mat transpose(const Mat& m) {
  Mat t(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); i++)
    for (size_t j = 0; j < m[i].size(); j++) t[j][i] = m[i][j];
  return t;
}

// Contracts one axis of the cube with a vector; rows and columns of the
// result are the remaining axes in increasing order.
Mat contract_axis(const RationalTensor& b, int axis, const Vec& v) {
  Mat r(3, Vec(3, Rat(0)));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int k = 0; k < 3; k++) {
        std::vector<int> idx = {i, j, k};
        int rest[2], n = 0;
        for (int a = 0; a < 3; a++)
          if (a != axis) rest[n++] = idx[a];
        r[rest[0]][rest[1]] += b.at(idx) * v[idx[axis]];
      }
  return r;
}

}  // namespace

std::array<std::vector<Rat>, 3> rc_ternary_cubics(const RationalTensor& b) {
  if (b.shape != std::vector<int>{3, 3, 3}) throw ShapeMismatch("expected 3x3x3");
  std::array<std::vector<Rat>, 3> out;
  for (int axis = 0; axis < 3; axis++) {
    // det of slice0*x + slice1*y + slice2*z as a polynomial matrix
    std::vector<std::vector<SparsePoly>> m(3, std::vector<SparsePoly>(3));
    for (int p = 0; p < 3; p++)
      for (int q = 0; q < 3; q++) {
        SparsePoly e(3);
        for (int v = 0; v < 3; v++) {
          Mat s = cube_slice(b, axis, v);
          Expo mono(3, 0);
          mono[v] = 1;
          e.add_term(mono, s[p][q]);
        }
        m[p][q] = e;
      }
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                      {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    SparsePoly det(3);
    for (int t = 0; t < 6; t++) {
      SparsePoly term = m[0][perm[t][0]] * m[1][perm[t][1]] * m[2][perm[t][2]];
      det = t < 3 ? det + term : det - term;
    }
    out[axis] = ternary_cubic_coeffs(det);
  }
  return out;
}

Rat rc_strassen(const RationalTensor& b) {
  if (b.shape != std::vector<int>{3, 3, 3}) throw ShapeMismatch("expected 3x3x3");
  for (int axis = 0; axis < 3; axis++)
    if (auto v = strassen_direction(b, axis)) return *v;
  // All middle slices singular: mix the slices by determinant-one coordinate
  // changes, which leave the value unchanged.
  std::mt19937 rng(0x9e3779b9u);
  for (int attempt = 0; attempt < 10; attempt++) {
    RationalTensor t = b;
    for (int axis = 0; axis < 3; axis++) t = act(t, axis, random_unimodular3(rng));
    for (int axis = 0; axis < 3; axis++)
      if (auto v = strassen_direction(t, axis)) return *v;
  }
  throw AllSlicesSingular();
}

namespace {

// Coefficients of 32 X^3 - 6 d4 X - (216 c9^2 + d6) as a UniPoly.
UniPoly pinning_cubic(const Rat& d4, const Rat& d6, const Rat& c9) {
  return UniPoly{-(216 * c9 * c9 + d6), -6 * d4, Rat(0), Rat(32)};
}

struct PencilSample {
  Rat t;
  std::vector<Rat> roots;  // rational roots of the sample's pinning cubic
};

// Tracks c6 along the pencil (1-s) b + s anchor from s = 1 (known value)
// back to s = 0.  c6 of the pencil member is a polynomial of degree <= 6 in
// s, so a degree-6 interpolant through consistent root choices pins it.
Rat track_c6(const RationalTensor& b, const std::vector<Rat>& candidates) {
  const CalibrationRecord& cal = default_calibration();
  auto member = [&](const Rat& s) {
    RationalTensor m = b.scale(1 - s);
    RationalTensor a = cal.rc_anchor.scale(s);
    for (size_t i = 0; i < m.entries.size(); i++) m.entries[i] += a.entries[i];
    return m;
  };
  int next_t = 1;
  for (int round = 0; round < 2; round++) {
    std::vector<PencilSample> samples;
    while ((int)samples.size() < 9 && next_t <= 60) {
      Rat t = Rat(next_t % 2 ? (next_t + 1) / 2 : -(next_t / 2) - 1);
      next_t++;
      if (t == 1) continue;
      try {
        RationalTensor m = member(t);
        TernaryCubicInvariants tc = tc_invariants(rc_ternary_cubics(m)[0]);
        if (tc.Delta == 0) continue;
        Rat c9 = rc_strassen(m);
        std::vector<Rat> roots =
            rational_roots(pinning_cubic(tc.d4, tc.d6, c9));
        if (roots.empty()) continue;
        samples.push_back({t, roots});
      } catch (const AllSlicesSingular&) {
        continue;
      }
    }
    if (samples.size() < 9) break;
    // Fit through the anchor endpoint and six samples; validate on three.
    std::vector<Rat> found;
    std::vector<int> choice(6, 0);
    for (;;) {
      std::vector<std::pair<Rat, Rat>> pts = {{Rat(1), cal.rc_anchor_c6}};
      for (int i = 0; i < 6; i++)
        pts.push_back({samples[i].t, samples[i].roots[choice[i]]});
      UniPoly p = lagrange_interpolate(pts, 6);
      bool ok = true;
      for (int i = 6; i < 9 && ok; i++) {
        Rat v = uni_eval(p, samples[i].t);
        ok = std::find(samples[i].roots.begin(), samples[i].roots.end(), v) !=
             samples[i].roots.end();
      }
      if (ok) {
        Rat v = uni_eval(p, Rat(0));
        if (std::find(candidates.begin(), candidates.end(), v) !=
                candidates.end() &&
            std::find(found.begin(), found.end(), v) == found.end())
          found.push_back(v);
      }
      int i = 0;
      while (i < 6 && ++choice[i] == (int)samples[i].roots.size())
        choice[i++] = 0;
      if (i == 6) break;
    }
    if (found.size() == 1) return found[0];
  }
  throw RootTrackingFailed();
}

}  // namespace

RubiksInvariants rc_invariants(const RationalTensor& b) {
  TernaryCubicInvariants tc = tc_invariants(rc_ternary_cubics(b)[0]);
  if (tc.Delta == 0) throw Degenerate();
  Rat c9 = rc_strassen(b);
  std::vector<Rat> roots = rational_roots(pinning_cubic(tc.d4, tc.d6, c9));
  if (roots.empty()) throw RootTrackingFailed();
  RubiksInvariants inv;
  inv.c9 = c9;
  inv.d4 = tc.d4;
  inv.d6 = tc.d6;
  inv.d18 = Rat(-54) * tc.d6;
  inv.c6 = roots.size() == 1 ? roots[0] : track_c6(b, roots);
  inv.c12 = (16 * inv.c6 * inv.c6 - inv.d4) / 48;
  inv.Delta = curve_new(Rat(0), inv.c6, inv.c9, inv.c12, Rat(0)).disc;
  return inv;
}

RubiksJacobian rc_jacobian_point(const RationalTensor& b) {
  RubiksInvariants v = rc_invariants(b);
  if (v.Delta == 0) throw Degenerate();
  RubiksJacobian j = {
      curve_new(Rat(0), v.c6, v.c9, v.c12, Rat(0)), CurvePoint(Rat(0), Rat(0)),
      curve_new(Rat(0), Rat(0), Rat(0), -27 * v.d4, -54 * v.d6),
      CurvePoint(12 * v.c6, 108 * v.c9)};
  return j;
}

RationalTensor rc_construct(const Rat& c6, const Rat& c9, const Rat& c12) {
  WeierstrassCurve e = curve_new(Rat(0), c6, c9, c12, Rat(0));
  if (e.singular()) throw SingularTarget();
  // Section products of L1 = O(3O), basis {1, x, y}, and L2 = O(2O + P) with
  // P = (0,0), basis {1, x, g} for g = (y + c9)/x, expanded in the basis
  // {1, x, y, x^2, xy, g} of sections of L1 (x) L2 via the curve relation:
  //   x*g = y + c9,    y*g = x^2 + c6 x + c12.
  Mat rows(9, Vec(6, Rat(0)));
  auto row = [&](int i, int j) -> Vec& { return rows[3 * i + j]; };
  row(0, 0)[0] = 1;                    // 1*1
  row(0, 1)[1] = 1;                    // 1*x
  row(0, 2)[5] = 1;                    // 1*g
  row(1, 0)[1] = 1;                    // x*1
  row(1, 1)[3] = 1;                    // x*x
  row(1, 2)[2] = 1;                    // x*g = y + c9
  row(1, 2)[0] = c9;
  row(2, 0)[2] = 1;                    // y*1
  row(2, 1)[4] = 1;                    // y*x
  row(2, 2)[3] = 1;                    // y*g = x^2 + c6 x + c12
  row(2, 2)[1] = c6;
  row(2, 2)[0] = c12;
  std::vector<Vec> ker = exact_kernel(transpose(rows));
  if (ker.size() != 3) throw KernelRankUnexpected();
  RationalTensor b({3, 3, 3});
  for (int k = 0; k < 3; k++)
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++) b.at({k, i, j}) = ker[k][3 * i + j];
  return b;
}

C12Point rc_chase(const RationalTensor& b, const C12Point& start,
                  const std::vector<TriangleMove>& steps) {
  if (b.shape != std::vector<int>{3, 3, 3}) throw ShapeMismatch("expected 3x3x3");
  Vec w1 = normalize_projective(start.w), w2 = normalize_projective(start.x);
  // Membership in C12: B(w1, w2, .) = 0.
  if (mat_apply(transpose(contract_axis(b, 0, w1)), w2) != Vec(3, Rat(0)))
    throw NotOnCurve();
  for (TriangleMove mv : steps) {
    if (mv == TriangleMove::Clockwise) {
      // C12 -> C23 -> C13 -> C12
      Vec w3 = kernel_line(contract_axis(b, 1, w2));
      w1 = kernel_line(transpose(contract_axis(b, 2, w3)));
      w2 = kernel_line(transpose(contract_axis(b, 0, w1)));
    } else {
      // C12 -> C13 -> C23 -> C12
      Vec w3 = kernel_line(contract_axis(b, 0, w1));
      w2 = kernel_line(contract_axis(b, 2, w3));
      w1 = kernel_line(transpose(contract_axis(b, 1, w2)));
    }
  }
  return {w1, w2};
}

}  // namespace g1
