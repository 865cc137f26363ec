#include "g1/hypercube.hpp"

#include <mutex>
#include <random>

#include "g1/calibration.hpp"
#include "g1/curvefn.hpp"
#include "g1/deriver.hpp"

namespace g1 {

namespace {

void require_hypercube(const RationalTensor& h) {
  if (h.shape != std::vector<int>{2, 2, 2, 2})
    throw ShapeMismatch("expected a 2x2x2x2 tensor");
}

// Cube discriminant of a 2x2x2 array with polynomial entries, via the
// quadratic Q(s,t) = det(front s + back t): disc Q = b^2 - 4ac.
std::vector<Rat> poly_cube_disc(const std::array<SparsePoly, 8>& c) {
  auto det2 = [](const SparsePoly& m00, const SparsePoly& m01,
                 const SparsePoly& m10, const SparsePoly& m11) {
    return m00 * m11 - m01 * m10;
  };
  SparsePoly a = det2(c[0], c[1], c[2], c[3]);
  SparsePoly cc = det2(c[4], c[5], c[6], c[7]);
  SparsePoly b =
      det2(c[0] + c[4], c[1] + c[5], c[2] + c[6], c[3] + c[7]) - a - cc;
  SparsePoly disc = b * b - a * cc * Rat(4);
  std::vector<Rat> out(5);
  for (int m = 0; m <= 4; m++) out[m] = disc.coeff({4 - m, m});
  return out;
}

const RepDescriptor& hc_rep() {
  static RepDescriptor rep = RepDescriptor::plain({2, 2, 2, 2});
  return rep;
}

struct DerivedCache {
  SparsePoly p2;
  std::vector<SparsePoly> q4;
};

const DerivedCache& derived_cache() {
  static std::once_flag once;
  static DerivedCache cache;
  std::call_once(once, [] {
    auto d2 = derive_invariants(hc_rep(), 2);
    auto d4 = derive_invariants(hc_rep(), 4);
    if (d2.size() != 1 || d4.size() != 3)
      throw std::runtime_error("unexpected derived invariant dimensions");
    cache.p2 = d2[0];
    cache.q4 = d4;
  });
  return cache;
}

struct PartialInvariants {
  Rat a2, a4, a4p;
};

PartialInvariants partial_invariants(const RationalTensor& h,
                                     const CalibrationRecord& cal) {
  const DerivedCache& dc = derived_cache();
  std::vector<Rat> coords = rep_coordinates(hc_rep(), h);
  PartialInvariants p;
  p.a2 = cal.hc_a2_scale * dc.p2.eval(coords);
  Vec q(3);
  for (int i = 0; i < 3; i++) q[i] = dc.q4[i].eval(coords);
  Vec a4s = mat_apply(cal.hc_deg4, q);
  p.a4 = a4s[0];
  p.a4p = a4s[1];
  return p;
}

// a6 from the a8 relation, available whenever a2 != 0.
std::optional<Rat> a6_linear(const PartialInvariants& p, const Rat& a8) {
  if (p.a2 == 0) return std::nullopt;
  Rat s = p.a4 * p.a4 + p.a4 * p.a4p + p.a4p * p.a4p;
  Rat sum6 = (a8 + s) / p.a2;          // a6 + a6'
  Rat diff6 = p.a2 * (p.a4p - p.a4);   // a6' - a6
  return Rat((sum6 - diff6) / 2);
}

Mat random_unimodular2(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Rat a(d(rng)), b(d(rng));
  // Product of unit triangular matrices: always determinant one.
  return Mat{{Rat(1) + a * b, a}, {b, Rat(1)}};
}

void normalize_projective(Vec& v) {
  for (const Rat& c : v)
    if (c != 0) {
      Rat pivot = c;
      for (Rat& e : v) e /= pivot;
      return;
    }
}

Vec kernel_line(const Mat& m) {
  auto ker = exact_kernel(m);
  if (ker.size() != 1) throw KernelRankUnexpected();
  Vec v = ker[0];
  normalize_projective(v);
  return v;
}

}  // namespace

std::array<std::vector<Rat>, 4> hc_binary_quartics(const RationalTensor& h) {
  require_hypercube(h);
  std::array<std::vector<Rat>, 4> out;
  for (int axis = 0; axis < 4; axis++) {
    RationalTensor front = slice(h, axis, 0), back = slice(h, axis, 1);
    std::array<SparsePoly, 8> pencil;
    for (int m = 0; m < 8; m++) {
      SparsePoly p(2);
      p.add_term({1, 0}, front.entries[m]);
      p.add_term({0, 1}, back.entries[m]);
      pencil[m] = p;
    }
    out[axis] = poly_cube_disc(pencil);
  }
  return out;
}

HypercubeIJ hc_IJ(const RationalTensor& h) {
  auto f = hc_binary_quartics(h);
  auto bq = bq_invariants(f[0]);
  return {bq.I, bq.J, bq.Delta};
}

std::vector<Rat> hc_22form(const RationalTensor& h, std::pair<int, int> axes) {
  require_hypercube(h);
  int wi = axes.first, xi = axes.second;
  if (wi == xi || wi < 0 || wi > 3 || xi < 0 || xi > 3)
    throw ShapeMismatch("axes must be distinct hypercube axes");
  std::vector<int> rest;
  for (int a = 0; a < 4; a++)
    if (a != wi && a != xi) rest.push_back(a);
  // M[k][l] = sum over entries of h * w_(idx[wi]) * x_(idx[xi]); variables
  // are (w1, w2, x1, x2).
  std::array<std::array<SparsePoly, 2>, 2> m;
  for (auto& row : m)
    for (auto& e : row) e = SparsePoly(4);
  std::vector<int> idx{0, 0, 0, 0};
  do {
    Expo e(4, 0);
    e[idx[wi]] += 1;
    e[2 + idx[xi]] += 1;
    m[idx[rest[0]]][idx[rest[1]]].add_term(e, h.at(idx));
  } while (next_index(h.shape, idx));
  SparsePoly det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::vector<Rat> out(9);
  for (int jx = 0; jx < 3; jx++)
    for (int iw = 0; iw < 3; iw++)
      out[3 * jx + iw] = det.coeff({2 - iw, iw, 2 - jx, jx});
  return out;
}

HypercubeInvariants hc_invariants(const RationalTensor& h) {
  require_hypercube(h);
  HypercubeIJ ij = hc_IJ(h);
  if (ij.Delta == 0) throw Degenerate();
  const CalibrationRecord& cal = default_calibration();
  if (!cal.has_hc) throw CalibrationMissing();

  HypercubeInvariants r;
  r.I = ij.I;
  r.J = ij.J;
  r.Delta = ij.Delta;
  r.a8 = -27 * ij.I;
  r.a12 = -27 * ij.J;
  PartialInvariants part = partial_invariants(h, cal);
  r.a2 = part.a2;
  r.a4 = part.a4;
  r.a4p = part.a4p;

  if (auto direct = a6_linear(part, r.a8)) {
    r.a6 = *direct;
  } else {
    // a2 = 0: interpolate a6, a polynomial of degree six in the entries,
    // along a pencil toward the calibration anchor through parameters where
    // the linear relation applies.
    std::mt19937 rng(0x9e3779b9u);
    bool found = false;
    for (int round = 0; round < 5 && !found; round++) {
      RationalTensor dir = cal.hc_anchor;
      if (round > 0)
        for (int axis = 0; axis < 4; axis++)
          dir = act(dir, axis, random_unimodular2(rng));
      std::vector<std::pair<Rat, Rat>> samples;
      for (int k = 1; k <= 40 && samples.size() < 9; k++) {
        for (int sign : {1, -1}) {
          if (samples.size() >= 9) break;
          Rat t(sign * k);
          RationalTensor ht = h + dir.scale(t);
          HypercubeIJ ijt = hc_IJ(ht);
          if (ijt.Delta == 0) continue;
          PartialInvariants pt = partial_invariants(ht, cal);
          auto a6t = a6_linear(pt, Rat(-27) * ijt.I);
          if (!a6t) continue;
          samples.push_back({t, *a6t});
        }
      }
      if (samples.size() < 9) continue;
      try {
        UniPoly fit = lagrange_interpolate(samples, 6);
        r.a6 = uni_eval(fit, Rat(0));
        found = true;
      } catch (const InconsistentSamples&) {
      }
    }
    if (!found) throw InterpolationFailed();
  }

  r.a6p = r.a6 + r.a2 * (r.a4p - r.a4);
  r.a4pp = r.a2 * r.a2 - r.a4 - r.a4p;
  r.a6pp = r.a2 * r.a2 * r.a2 - 3 * (r.a2 * r.a4 - r.a6) - r.a6 - r.a6p;
  return r;
}

HypercubeJacobian hc_jacobian_points(const RationalTensor& h) {
  HypercubeInvariants v = hc_invariants(h);
  HypercubeJacobian j{curve_new(Rat(0), Rat(0), Rat(0), v.a8, v.a12),
                      CurvePoint(v.a4, v.a6), CurvePoint(v.a4p, v.a6p),
                      CurvePoint(v.a4pp, v.a6pp)};
  return j;
}

RationalTensor hc_construct(const WeierstrassCurve& e, const CurvePoint& p,
                            const CurvePoint& pp) {
  if (e.singular()) throw SingularTarget();
  CurvePoint ppp = e.negate(add_points(e, p, pp));
  if (p.infinity || pp.infinity || ppp.infinity || p == pp || p == ppp)
    throw BadMarkedPoints();

  auto section = [&](const CurvePoint& q) {
    // g_Q = (y + yQ + a1 xQ + a3) / (x - xQ): poles O + Q only.
    CurveFunction f(e);
    UniPoly den{-q.x, Rat(1)};
    f.a = RatFn(uni_const(q.y + e.a1 * q.x + e.a3), den);
    f.b = RatFn(uni_const(Rat(1)), den);
    return f;
  };
  CurveFunction one = CurveFunction::constant(e, Rat(1));
  CurveFunction fx = CurveFunction::coord_x(e);
  CurveFunction fy = CurveFunction::coord_y(e);
  CurveFunction gp = section(p), gpp = section(pp);
  std::vector<CurveFunction> basis{one, fx, fy, fx * fx, gp, gpp};

  std::vector<CurveFunction> products;
  for (const CurveFunction& u : {one, fx})
    for (const CurveFunction& v : {one, gp})
      for (const CurveFunction& w : {one, gpp}) products.push_back(u * v * w);
  Mat rows = express_in_basis(products, basis);

  Mat tr(6, Vec(8));
  for (int r = 0; r < 8; r++)
    for (int c = 0; c < 6; c++) tr[c][r] = rows[r][c];
  auto ker = exact_kernel(tr);
  if (ker.size() != 2) throw KernelRankUnexpected();

  RationalTensor h({2, 2, 2, 2});
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++)
      for (int k = 0; k < 2; k++)
        for (int l = 0; l < 2; l++)
          h.at({i, j, k, l}) = ker[l][4 * i + 2 * j + k];
  return h;
}

RationalTensor hc_desym_2sym(const RationalTensor& h) {
  require_hypercube(h);
  if (!symmetry_check(h, {0, 1, 3, 2}))
    throw ShapeMismatch("input is not symmetric in its last two axes");
  // Coefficients of the 2x2 matrix of binary quadratics r v1^2 + s v1v2 +
  // t v2^2 indexed by the first two axes.
  Rat r11 = h.at({0, 0, 0, 0}), r12 = h.at({0, 1, 0, 0});
  Rat r21 = h.at({1, 0, 0, 0}), r22 = h.at({1, 1, 0, 0});
  Rat s11 = 2 * h.at({0, 0, 0, 1}), s12 = 2 * h.at({0, 1, 0, 1});
  Rat s21 = 2 * h.at({1, 0, 0, 1}), s22 = 2 * h.at({1, 1, 0, 1});
  Rat t11 = h.at({0, 0, 1, 1}), t12 = h.at({0, 1, 1, 1});
  Rat t21 = h.at({1, 0, 1, 1}), t22 = h.at({1, 1, 1, 1});
  Rat a = -r22 * s21 * t11 + r21 * s22 * t11 + r22 * s11 * t21 -
          r11 * s22 * t21 - r21 * s11 * t22 + r11 * s21 * t22;
  Rat b = -r21 * s12 * t11 + r12 * s21 * t11 + r21 * s11 * t12 -
          r11 * s21 * t12 - r12 * s11 * t21 + r11 * s12 * t21;
  Rat c = -r22 * s21 * t12 + r21 * s22 * t12 + r22 * s12 * t21 -
          r12 * s22 * t21 - r21 * s12 * t22 + r12 * s21 * t22;
  Rat d = -r22 * s12 * t11 + r12 * s22 * t11 + r22 * s11 * t12 -
          r11 * s22 * t12 - r12 * s11 * t22 + r11 * s12 * t22;
  if (a * d - b * c == 0) throw DegenerateTransform();
  RationalTensor out = act(h, 0, Mat{{a, b}, {c, d}});
  out.symmetry = SymmetryTag::none();
  return out;
}

RationalTensor hc_desym_3sym(const RationalTensor& h) {
  require_hypercube(h);
  if (!symmetry_check(h, {0, 2, 1, 3}) || !symmetry_check(h, {0, 1, 3, 2}))
    throw ShapeMismatch("input is not symmetric in its last three axes");
  // Symmetric-tensor entries of the two cubes indexed by the first axis
  // (r, s, t, u = entries with 0, 1, 2, 3 indices equal to 1).
  Rat r1 = h.at({0, 0, 0, 0}), r2 = h.at({1, 0, 0, 0});
  Rat s1 = h.at({0, 0, 0, 1}), s2 = h.at({1, 0, 0, 1});
  Rat t1 = h.at({0, 0, 1, 1}), t2 = h.at({1, 0, 1, 1});
  Rat u1 = h.at({0, 1, 1, 1}), u2 = h.at({1, 1, 1, 1});
  Rat a = -s2 * s2 * t1 + s1 * s2 * t2 + r2 * t1 * t2 - r1 * t2 * t2 -
          r2 * s1 * u2 + r1 * s2 * u2;
  Rat b = s1 * s2 * t1 - r2 * t1 * t1 - s1 * s1 * t2 + r1 * t1 * t2 +
          r2 * s1 * u1 - r1 * s2 * u1;
  Rat c = s2 * t1 * t2 - s1 * t2 * t2 - s2 * s2 * u1 + r2 * t2 * u1 +
          s1 * s2 * u2 - r2 * t1 * u2;
  Rat d = -s2 * t1 * t1 + s1 * t1 * t2 + s1 * s2 * u1 - r1 * t2 * u1 -
          s1 * s1 * u2 + r1 * t1 * u2;
  if (a * d - b * c == 0) throw DegenerateTransform();
  RationalTensor out = act(h, 0, Mat{{a, b}, {c, d}});
  out.symmetry = symmetry_check(out, {1, 0, 2, 3}) &&
                         symmetry_check(out, {0, 2, 1, 3}) &&
                         symmetry_check(out, {0, 1, 3, 2})
                     ? SymmetryTag::full()
                     : SymmetryTag::none();
  return out;
}

ChaseState hc_chase(const RationalTensor& h, const ChaseState& start,
                    const std::vector<int>& drops) {
  require_hypercube(h);
  ChaseState st = start;
  for (Vec& v : st.pts) {
    if (v.size() != 2 || (v[0] == 0 && v[1] == 0)) throw NotOnCurve();
    normalize_projective(v);
  }
  for (int a = 0; a < 3; a++)
    if (st.axes[a] < 0 || st.axes[a] > 3 || (a > 0 && st.axes[a] <= st.axes[a - 1]))
      throw ShapeMismatch("chase axes must be ascending hypercube axes");

  auto missing_axis = [](const std::array<int, 3>& axes) {
    for (int m = 0; m < 4; m++)
      if (m != axes[0] && m != axes[1] && m != axes[2]) return m;
    return -1;
  };

  // Membership: the full contraction over the three active axes vanishes.
  {
    int miss = missing_axis(st.axes);
    Vec resid(2, Rat(0));
    std::vector<int> idx{0, 0, 0, 0};
    do {
      Rat term = h.at(idx);
      for (int a = 0; a < 3; a++) term *= st.pts[a][idx[st.axes[a]]];
      resid[idx[miss]] += term;
    } while (next_index(h.shape, idx));
    if (resid != Vec(2, Rat(0))) throw NotOnCurve();
  }

  for (int drop : drops) {
    int pos = -1;
    for (int a = 0; a < 3; a++)
      if (st.axes[a] == drop) pos = a;
    if (pos < 0) throw ShapeMismatch("dropped axis is not in the active triple");
    int miss = missing_axis(st.axes);
    // Contract the two kept coordinates: rows = dropped axis, columns =
    // previously missing axis; the new coordinate spans the kernel.
    Mat m(2, Vec(2, Rat(0)));
    std::vector<int> idx{0, 0, 0, 0};
    do {
      Rat term = h.at(idx);
      for (int a = 0; a < 3; a++)
        if (a != pos) term *= st.pts[a][idx[st.axes[a]]];
      m[idx[drop]][idx[miss]] += term;
    } while (next_index(h.shape, idx));
    Vec fresh = kernel_line(m);

    std::array<int, 3> axes;
    std::array<Vec, 3> pts;
    int n = 0;
    for (int a = 0; a < 3; a++)
      if (a != pos) {
        axes[n] = st.axes[a];
        pts[n++] = st.pts[a];
      }
    axes[2] = miss;
    pts[2] = fresh;
    // Restore ascending axis order.
    for (int a = 1; a < 3; a++)
      for (int b = a; b > 0 && axes[b] < axes[b - 1]; b--) {
        std::swap(axes[b], axes[b - 1]);
        std::swap(pts[b], pts[b - 1]);
      }
    st.axes = axes;
    st.pts = pts;
  }
  return st;
}

const SparsePoly& hc_derived_deg2() { return derived_cache().p2; }
const std::vector<SparsePoly>& hc_derived_deg4() { return derived_cache().q4; }

}  // namespace g1
