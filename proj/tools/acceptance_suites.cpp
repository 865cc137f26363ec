#include "acceptance_suites.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "g1/calibration.hpp"
#include "g1/classical.hpp"
#include "g1/deriver.hpp"
#include "g1/elliptic.hpp"
#include "g1/hypercube.hpp"
#include "g1/jordan.hpp"
#include "g1/linalg.hpp"
#include "g1/rubiks.hpp"
#include "g1/tensor.hpp"

namespace g1 {
namespace {

struct Ctx {
  SuiteResult r;
  long seed = 12345;

  void check(bool ok) {
    r.checks++;
    if (!ok) r.failures++;
  }
  long lcg() {
    seed = (seed * 1103515245 + 12345) % (1L << 31);
    return seed % 9 - 4;
  }
  Rat rnd() { return Rat(lcg()); }

  Mat unimodular(int n) {
    Mat u(n, Vec(n, Rat(0))), l(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; i++) {
      u[i][i] = l[i][i] = Rat(1);
      for (int j = i + 1; j < n; j++) {
        u[i][j] = rnd();
        l[j][i] = rnd();
      }
    }
    Mat m(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++)
        for (int k = 0; k < n; k++) m[i][j] += u[i][k] * l[k][j];
    return m;
  }

  RationalTensor random_tensor(const std::vector<int>& shape) {
    RationalTensor t(shape);
    for (auto& e : t.entries) e = rnd();
    return t;
  }
  std::vector<Rat> random_coeffs(int n) {
    std::vector<Rat> c(n);
    for (auto& e : c) e = rnd();
    return c;
  }
};

// (2,2) form as an element of Sym_2 V1 (x) Sym_2 V2 inside the hypercube
// space: axes 0,1 carry w, axes 2,3 carry x.
RationalTensor embed_22form(const std::vector<Rat>& f) {
  RationalTensor h({2, 2, 2, 2});
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++)
      for (int k = 0; k < 2; k++)
        for (int l = 0; l < 2; l++) {
          int cw = (i + j == 1) ? 2 : 1, cx = (k + l == 1) ? 2 : 1;
          h.at({i, j, k, l}) = f[3 * (k + l) + (i + j)] / (cw * cx);
        }
  return h;
}

// A nonsingular y^2 = x^3 + a x + b through two given small random points,
// with (curve, P, P') valid for the inverse construction.
struct CurveData {
  WeierstrassCurve e;
  CurvePoint p, pp;
  CurveData(WeierstrassCurve ee, CurvePoint q, CurvePoint qq)
      : e(std::move(ee)), p(std::move(q)), pp(std::move(qq)) {}
};

CurveData random_curve_with_points(Ctx& c) {
  for (;;) {
    Rat x1 = c.rnd(), y1 = c.rnd(), x2 = c.rnd(), y2 = c.rnd();
    if (x1 == x2) continue;
    Rat a = ((y1 * y1 - x1 * x1 * x1) - (y2 * y2 - x2 * x2 * x2)) / (x1 - x2);
    Rat b = y1 * y1 - x1 * x1 * x1 - a * x1;
    WeierstrassCurve e = curve_new(Rat(0), Rat(0), Rat(0), a, b);
    if (e.singular()) continue;
    CurvePoint p(x1, y1), pp(x2, y2);
    CurvePoint ppp = e.negate(add_points(e, p, pp));
    if (p.infinity || pp.infinity || ppp.infinity) continue;
    if (p == pp || p == ppp) continue;
    return CurveData(e, p, pp);
  }
}

std::vector<ChaseState> small_hc_chase_points(const RationalTensor& h) {
  std::vector<Vec> line;
  for (int a = -4; a <= 4; a++) line.push_back({Rat(1), Rat(a)});
  line.push_back({Rat(0), Rat(1)});
  std::vector<ChaseState> out;
  for (const Vec& w1 : line)
    for (const Vec& w2 : line) {
      Mat m(2, Vec(2, Rat(0)));
      for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
          for (int k = 0; k < 2; k++)
            for (int l = 0; l < 2; l++)
              m[k][l] += w1[i] * w2[j] * h.at({i, j, k, l});
      if (m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0) continue;
      Vec w3;
      if (m[0][0] == 0 && m[0][1] == 0)
        w3 = {Rat(1), Rat(0)};
      else if (m[1][0] == 0 && m[1][1] == 0)
        w3 = {Rat(0), Rat(1)};
      else if (m[0][0] != 0)
        w3 = {-m[1][0] / m[0][0], Rat(1)};
      else
        w3 = {-m[1][1] / m[0][1], Rat(1)};
      try {
        out.push_back(hc_chase(h, ChaseState{{0, 1, 2}, {w1, w2, w3}}, {}));
      } catch (const NotOnCurve&) {
      }
    }
  return out;
}

std::vector<C12Point> small_c12_points(const RationalTensor& b) {
  std::vector<C12Point> out;
  for (int a = -2; a <= 2; a++)
    for (int c = -2; c <= 2; c++)
      for (int d = -2; d <= 2; d++) {
        if (!a && !c && !d) continue;
        Vec w = {Rat(a), Rat(c), Rat(d)};
        Mat m(3, Vec(3, Rat(0)));
        for (int k = 0; k < 3; k++)
          for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) m[i][j] += b.at({k, i, j}) * w[k];
        Mat mt(3, Vec(3));
        for (int i = 0; i < 3; i++)
          for (int j = 0; j < 3; j++) mt[j][i] = m[i][j];
        auto ker = exact_kernel(mt);
        if (ker.size() != 1) continue;
        Vec res(3, Rat(0));
        for (int k = 0; k < 3; k++)
          for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++)
              res[j] += b.at({k, i, j}) * w[k] * ker[0][i];
        if (res == Vec(3, Rat(0))) out.push_back({w, ker[0]});
      }
  return out;
}

JordanElement random_jordan(Ctx& c, const JordanAlg& alg) {
  JordanElement x = jordan_zero(alg);
  for (auto& v : x.c) v = c.rnd();
  return x;
}
HermCube random_herm(Ctx& c, const JordanAlg& alg) {
  return {alg, c.rnd(), c.rnd(), random_jordan(c, alg), random_jordan(c, alg)};
}
bool herm_equal(const HermCube& x, const HermCube& y) {
  return x.a == y.a && x.d == y.d && x.b.c == y.b.c && x.c.c == y.c.c;
}

// ---- suite 1: invariance under unimodular actions and scaling weights ----

void suite_invariance(Ctx& c) {
  for (int t = 0; t < 100; t++) {  // binary quartics
    std::vector<Rat> q = c.random_coeffs(5);
    BinaryQuarticInvariants v = bq_invariants(q);
    for (int k = 0; k < 20; k++) {
      BinaryQuarticInvariants w = bq_invariants(binary_form_act(q, c.unimodular(2)));
      c.check(w.I == v.I && w.J == v.J);
    }
    std::vector<Rat> q2 = q;
    for (auto& e : q2) e *= 2;
    BinaryQuarticInvariants s = bq_invariants(q2);
    c.check(s.I == 4 * v.I && s.J == 8 * v.J);
  }
  for (int t = 0; t < 100; t++) {  // 2x2x2 cubes
    RationalTensor h = c.random_tensor({2, 2, 2});
    Rat v = cube_disc(h).Delta;
    for (int k = 0; k < 20; k++) {
      h = act(h, (int)(c.lcg() + 4) % 3, c.unimodular(2));
      c.check(cube_disc(h).Delta == v);
    }
    c.check(cube_disc(h.scale(Rat(2))).Delta == 16 * v);
  }
  for (int t = 0; t < 100;) {  // hypercubes
    RationalTensor h = c.random_tensor({2, 2, 2, 2});
    if (hc_IJ(h).Delta == 0) continue;
    t++;
    HypercubeInvariants v = hc_invariants(h);
    for (int k = 0; k < 20; k++) {
      h = act(h, (int)(c.lcg() + 4) % 4, c.unimodular(2));
      HypercubeInvariants w = hc_invariants(h);
      c.check(w.a2 == v.a2 && w.a4 == v.a4 && w.a4p == v.a4p && w.a6 == v.a6);
    }
    HypercubeInvariants s = hc_invariants(h.scale(Rat(2)));
    c.check(s.a2 == 4 * v.a2 && s.a4 == 16 * v.a4 && s.a4p == 16 * v.a4p &&
            s.a6 == 64 * v.a6);
  }
  for (int t = 0; t < 100;) {  // 3x3x3 cubes
    RationalTensor b = c.random_tensor({3, 3, 3});
    if (tc_invariants(rc_ternary_cubics(b)[0]).Delta == 0) continue;
    t++;
    RubiksInvariants v = rc_invariants(b);
    for (int k = 0; k < 20; k++) {
      b = act(b, (int)(c.lcg() + 4) % 3, c.unimodular(3));
      RubiksInvariants w = rc_invariants(b);
      c.check(w.c6 == v.c6 && w.c9 == v.c9 && w.c12 == v.c12);
    }
    RubiksInvariants s = rc_invariants(b.scale(Rat(2)));
    c.check(s.c6 == 64 * v.c6 && s.c9 == 512 * v.c9 && s.c12 == 4096 * v.c12);
  }
  for (int t = 0; t < 100; t++) {  // (2,2) forms
    std::vector<Rat> f = c.random_coeffs(9);
    Form22Invariants v = form22_invariants(f);
    for (int k = 0; k < 20; k++) {
      f = form22_act(f, c.unimodular(2), c.unimodular(2));
      Form22Invariants w = form22_invariants(f);
      c.check(w.delta2 == v.delta2 && w.delta3 == v.delta3 &&
              w.delta4 == v.delta4);
    }
    std::vector<Rat> g = f;
    for (auto& e : g) e *= 2;
    Form22Invariants s = form22_invariants(g);
    c.check(s.delta2 == 4 * v.delta2 && s.delta3 == 8 * v.delta3 &&
            s.delta4 == 16 * v.delta4);
  }
  for (int t = 0; t < 100; t++) {  // pencils of quadrics
    Mat a(4, Vec(4)), b(4, Vec(4));
    for (int i = 0; i < 4; i++)
      for (int j = i; j < 4; j++) {
        a[i][j] = a[j][i] = c.rnd();
        b[i][j] = b[j][i] = c.rnd();
      }
    QuadricPencilInvariants v = quadric_pencil_invariants(a, b);
    for (int k = 0; k < 20; k++) {
      if (k % 2 == 0) {
        // congruence by a unimodular matrix on the quadric variables
        Mat g = c.unimodular(4), na(4, Vec(4, Rat(0))), nb(4, Vec(4, Rat(0)));
        for (int i = 0; i < 4; i++)
          for (int j = 0; j < 4; j++)
            for (int p = 0; p < 4; p++)
              for (int q = 0; q < 4; q++) {
                na[i][j] += g[p][i] * a[p][q] * g[q][j];
                nb[i][j] += g[p][i] * b[p][q] * g[q][j];
              }
        a = na;
        b = nb;
      } else {
        // unimodular mix of the pencil members
        Mat g = c.unimodular(2), na(4, Vec(4)), nb(4, Vec(4));
        for (int i = 0; i < 4; i++)
          for (int j = 0; j < 4; j++) {
            na[i][j] = g[0][0] * a[i][j] + g[0][1] * b[i][j];
            nb[i][j] = g[1][0] * a[i][j] + g[1][1] * b[i][j];
          }
        a = na;
        b = nb;
      }
      QuadricPencilInvariants w = quadric_pencil_invariants(a, b);
      c.check(w.d8 == v.d8 && w.d12 == v.d12);
    }
    Mat a2 = a, b2 = b;
    for (auto& row : a2)
      for (auto& e : row) e *= 2;
    for (auto& row : b2)
      for (auto& e : row) e *= 2;
    QuadricPencilInvariants s = quadric_pencil_invariants(a2, b2);
    c.check(s.d8 == 256 * v.d8 && s.d12 == 4096 * v.d12);
  }
}

// ---- suite 2: slicing coherence ----

void suite_slicing(Ctx& c) {
  for (int t = 0; t < 100; t++) {
    RationalTensor h = c.random_tensor({2, 2, 2, 2});
    auto f = hc_binary_quartics(h);
    BinaryQuarticInvariants ref = bq_invariants(f[0]);
    for (int axis = 1; axis < 4; axis++) {
      BinaryQuarticInvariants o = bq_invariants(f[axis]);
      c.check(o.I == ref.I && o.J == ref.J);
    }
  }
  for (int t = 0; t < 100; t++) {
    RationalTensor b = c.random_tensor({3, 3, 3});
    auto f = rc_ternary_cubics(b);
    TernaryCubicInvariants ref = tc_invariants(f[0]);
    for (int axis = 1; axis < 3; axis++) {
      TernaryCubicInvariants o = tc_invariants(f[axis]);
      c.check(o.d4 == ref.d4 && o.d6 == ref.d6);
    }
  }
  for (int t = 0; t < 100; t++) {
    RationalTensor h = c.random_tensor({2, 2, 2});
    CubeDisc d = cube_disc(h);
    for (int l = 0; l < 3; l++)
      c.check(d.Q[l][1] * d.Q[l][1] - 4 * d.Q[l][0] * d.Q[l][2] == d.Delta);
  }
}

// ---- suite 3: the (2,2) invariant identity and the pinned instance ----

void suite_form22_identity(Ctx& c) {
  for (int t = 0; t < 1000; t++) {
    std::vector<Rat> f = c.random_coeffs(9);
    Form22Invariants v = form22_invariants(f);
    Rat x = 3 * v.delta2, y = 108 * v.delta3;
    c.check(y * y == x * x * x - 27 * v.I * x - 27 * v.J);
  }
  std::vector<Rat> f = {Rat(1), Rat(0), Rat(1), Rat(0), Rat(1),
                        Rat(0), Rat(1), Rat(0), Rat(1)};
  Form22Invariants v = form22_invariants(f);
  c.check(v.delta2 == 17 && v.delta3 == 0 && v.I == 241 && v.J == -7378);
  Form22Jacobian j = form22_jacobian_point(f);
  c.check(j.point == CurvePoint(Rat(51), Rat(0)));
  c.check(j.short_curve.contains(j.point));
}

// ---- suite 4: hypercube relation suite on constructed samples ----

void suite_hypercube_relations(Ctx& c) {
  for (int t = 0; t < 100; t++) {
    CurveData cd = random_curve_with_points(c);
    RationalTensor h = hc_construct(cd.e, cd.p, cd.pp);
    HypercubeInvariants v = hc_invariants(h);
    c.check(v.a6p == v.a6 + v.a2 * (v.a4p - v.a4));
    c.check(v.a4pp == v.a2 * v.a2 - v.a4 - v.a4p);
    c.check(v.a6pp ==
            v.a2 * v.a2 * v.a2 - 3 * (v.a2 * v.a4 - v.a6) - v.a6 - v.a6p);
    c.check(v.a8 == v.a2 * (v.a6 + v.a6p) -
                        (v.a4 * v.a4 + v.a4 * v.a4p + v.a4p * v.a4p));
    c.check(v.a12 == v.a6 * v.a6 - v.a2 * v.a4 * (v.a6 + v.a6p) +
                         v.a4 * v.a4p * (v.a4 + v.a4p));
    c.check(v.a8 == -27 * v.I);
    c.check(v.a12 == -27 * v.J);
    HypercubeJacobian jp = hc_jacobian_points(h);
    c.check(jp.curve.contains(jp.P) && jp.curve.contains(jp.Pp) &&
            jp.curve.contains(jp.Ppp));
    c.check(add_points(jp.curve, add_points(jp.curve, jp.P, jp.Pp), jp.Ppp)
                .infinity);
    c.check(v.a6 - v.a2 * v.a4 == v.a6p - v.a2 * v.a4p &&
            v.a6 - v.a2 * v.a4 == v.a6pp - v.a2 * v.a4pp);
  }
}

// ---- suite 5: round trips through the inverse constructions ----

void suite_round_trips(Ctx& c) {
  long targets[][3] = {{0, 1, 0},  {1, 1, 1},  {2, 1, 1},  {1, 1, 0},
                       {-1, 2, 3}, {5, -2, 1}, {0, 3, 2},  {2, -1, -1},
                       {1, 4, 1},  {-3, 1, 2}};
  for (auto& v : targets) {
    Rat c6(v[0]), c9(v[1]), c12(v[2]);
    RubiksInvariants inv = rc_invariants(rc_construct(c6, c9, c12));
    auto mu = rat_kth_root(inv.c9 / c9, 3);
    c.check(mu.has_value());
    if (mu.has_value()) {
      Rat m2 = *mu * *mu;
      c.check(inv.c6 == c6 * m2 && inv.c12 == c12 * m2 * m2);
    }
  }

  // the pinned target plus generated nonsingular (curve, P, P') triples
  std::vector<CurveData> hc_targets;
  hc_targets.emplace_back(curve_new(Rat(0), Rat(0), Rat(0), Rat(-25), Rat(0)),
                          CurvePoint(Rat(-4), Rat(6)),
                          CurvePoint(Rat(0), Rat(0)));
  while (hc_targets.size() < 10) hc_targets.push_back(random_curve_with_points(c));
  for (const CurveData& cd : hc_targets) {
    RationalTensor h = hc_construct(cd.e, cd.p, cd.pp);
    HypercubeJacobian jp = hc_jacobian_points(h);
    c.check(jp.curve.j_invariant() == cd.e.j_invariant());
    // marked points (P, P' - P, -P') at the universal weights (36, 216)
    CurvePoint diff = add_points(cd.e, cd.pp, cd.e.negate(cd.p));
    CurvePoint mpp = cd.e.negate(cd.pp);
    c.check(jp.P == CurvePoint(36 * cd.p.x, 216 * cd.p.y));
    c.check(jp.Pp == CurvePoint(36 * diff.x, 216 * diff.y));
    c.check(jp.Ppp == CurvePoint(36 * mpp.x, 216 * mpp.y));
  }
}

// ---- suite 6: symmetric inputs and their torsion points ----

void suite_symmetry_torsion(Ctx& c) {
  for (int t = 0; t < 100; t++) {  // doubly symmetric 3x3x3: c9 vanishes
    RationalTensor b({3, 3, 3});
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++)
        for (int k = j; k < 3; k++) b.at({i, j, k}) = b.at({i, k, j}) = c.rnd();
    c.check(rc_strassen(b) == 0);
  }
  for (int t = 0; t < 20;) {  // triply symmetric 3x3x3: (0,0) is 2-torsion
    std::vector<Rat> f = c.random_coeffs(10);
    RationalTensor b = sym_embed_ternary_cubic(f);
    if (tc_invariants(rc_ternary_cubics(b)[0]).Delta == 0) continue;
    t++;
    RubiksJacobian j = rc_jacobian_point(b);
    c.check(j.curve.a1 == 0 && j.curve.a3 == 0);
    c.check(torsion_order(j.curve, j.point).value_or(0) == 2);
  }
  for (int t = 0; t < 100;) {  // doubly symmetric hypercubes: P = -2P'
    RationalTensor h({2, 2, 2, 2});
    for (int i = 0; i < 2; i++)
      for (int j = 0; j < 2; j++) {
        h.at({i, j, 0, 0}) = c.rnd();
        h.at({i, j, 0, 1}) = h.at({i, j, 1, 0}) = c.rnd();
        h.at({i, j, 1, 1}) = c.rnd();
      }
    if (hc_IJ(h).Delta == 0) continue;
    t++;
    HypercubeJacobian jp = hc_jacobian_points(h);
    c.check(jp.P == mul_point(jp.curve, -2, jp.Pp));
  }
  for (int t = 0; t < 20;) {  // triply symmetric hypercubes: (0,0) order 3
    RationalTensor h = sym_embed_cubic_pair(c.random_coeffs(8));
    if (hc_IJ(h).Delta == 0) continue;
    HypercubeInvariants v = hc_invariants(h);
    WeierstrassCurve cand = curve_new(2 * v.a2, Rat(0), 2 * v.a6, Rat(0), Rat(0));
    if (cand.singular()) continue;
    t++;
    c.check(cand.j_invariant() == hc_jacobian_points(h).curve.j_invariant());
    c.check(torsion_order(cand, CurvePoint(Rat(0), Rat(0))).value_or(0) == 3);
  }
  for (int t = 0; t < 20;) {  // quadruply symmetric hypercubes: (0,0) order 3
    std::vector<Rat> q = c.random_coeffs(5);
    RationalTensor h = sym_embed_quartic(q);
    if (hc_IJ(h).Delta == 0) continue;
    HypercubeInvariants v = hc_invariants(h);
    Rat a3 = bq_invariants(q).J / 432;
    WeierstrassCurve cand =
        curve_new(2 * v.a2, Rat(0), 216 * a3 * a3, Rat(0), Rat(0));
    if (cand.singular()) continue;
    t++;
    c.check(cand.j_invariant() == hc_jacobian_points(h).curve.j_invariant());
    c.check(torsion_order(cand, CurvePoint(Rat(0), Rat(0))).value_or(0) == 3);
  }
}

// ---- suite 7: desymmetrization transforms ----

void suite_desym(Ctx& c) {
  for (int t = 0; t < 100;) {
    RationalTensor h({2, 2, 2, 2});
    for (int i = 0; i < 2; i++)
      for (int j = 0; j < 2; j++) {
        h.at({i, j, 0, 0}) = c.rnd();
        h.at({i, j, 0, 1}) = h.at({i, j, 1, 0}) = c.rnd();
        h.at({i, j, 1, 1}) = c.rnd();
      }
    h.symmetry = SymmetryTag::last(2);
    if (hc_IJ(h).Delta == 0) continue;
    HypercubeInvariants v = hc_invariants(h);
    if (v.a6p == 0) continue;
    t++;
    RationalTensor dd = hc_desym_2sym(h);
    c.check(symmetry_check(dd, {1, 0, 2, 3}));
    c.check(symmetry_check(dd, {0, 1, 3, 2}));
    // transform determinant = a6'/27 read off through the weight-(1,2,3) scaling
    HypercubeInvariants w = hc_invariants(dd);
    Rat det = v.a6p / 27;
    c.check(w.a2 == det * v.a2 && w.a4 == det * det * v.a4 &&
            w.a6 == det * det * det * v.a6);
  }
  for (int t = 0; t < 100;) {
    RationalTensor h = sym_embed_cubic_pair(c.random_coeffs(8));
    if (hc_IJ(h).Delta == 0) continue;
    HypercubeInvariants v = hc_invariants(h);
    if (v.a6 == 0) continue;
    t++;
    RationalTensor q = hc_desym_3sym(h);
    c.check(symmetry_check(q, {1, 0, 2, 3}));
    c.check(symmetry_check(q, {1, 2, 3, 0}));
    HypercubeInvariants w = hc_invariants(q);
    Rat det = v.a6 / 108;
    c.check(w.a2 == det * v.a2 && w.a4 == det * det * v.a4 &&
            w.a6 == det * det * det * v.a6);
  }
}

// ---- suite 8: Jordan algebra and hermitian-cube identities ----

void suite_jordan(Ctx& c) {
  std::vector<JordanAlg> algs = {JordanAlg::field(),
                                 JordanAlg::binarions(),
                                 JordanAlg::split3(),
                                 JordanAlg::field_mat2(),
                                 JordanAlg::herm3(CompKind::Unarion),
                                 JordanAlg::herm3(CompKind::Binarion),
                                 JordanAlg::herm3(CompKind::Quaternion),
                                 JordanAlg::herm3(CompKind::Octonion)};
  for (const JordanAlg& alg : algs) {
    JordanElement e = jordan_e(alg);
    for (int t = 0; t < 100; t++) {
      JordanElement x = random_jordan(c, alg);
      Rat n = jordan_norm(x), tr = jordan_trace(x), sp = jordan_spur(x);
      JordanElement ss = jordan_sharp(jordan_sharp(x));
      bool ok = true;
      for (size_t i = 0; i < x.c.size(); i++)
        if (ss.c[i] != n * x.c[i]) ok = false;
      c.check(ok);
      JordanElement ex = jordan_cross(e, x);
      ok = true;
      for (size_t i = 0; i < x.c.size(); i++)
        if (ex.c[i] != tr * e.c[i] - x.c[i]) ok = false;
      c.check(ok);
      JordanElement x2 = jordan_bullet(x, x);
      JordanElement x3 = jordan_bullet(x, x2);
      ok = true;
      for (size_t i = 0; i < x.c.size(); i++)
        if (x3.c[i] - tr * x2.c[i] + sp * x.c[i] - n * e.c[i] != 0) ok = false;
      c.check(ok);

      HermCube a = random_herm(c, alg), b = random_herm(c, alg);
      Rat d = fts_disc(a);
      c.check(herm_equal(fts_flat(fts_flat(a)), fts_scale(a, -d * d)));
      // <A-flat, B> equals the quadrilinearized disc(A,A,A,B)
      Rat dp = fts_disc(fts_add(a, b));
      Rat dm = fts_disc(fts_add(a, fts_scale(b, Rat(-1))));
      Rat d2 = fts_disc(fts_add(a, fts_scale(b, Rat(2))));
      Rat q2 = (dp + dm) / 2 - d - fts_disc(b);
      Rat odd = (dp - dm) / 2;
      Rat q3 = (d2 - d - 4 * q2 - 16 * fts_disc(b) - 2 * odd) / 6;
      c.check(fts_pair(fts_flat(a), b) == (odd - q3) / 2);
      HermCube s = fts_segre(random_jordan(c, alg), random_jordan(c, alg));
      c.check(fts_disc(s) == 0 && fts_is_zero(fts_flat(s)));
    }
  }
  for (const JordanAlg& alg : {JordanAlg::field(), JordanAlg::split3()}) {
    for (int t = 0; t < 50; t++) {
      HermCube a = random_herm(c, alg);
      c.check(fts_disc(a) == cube_disc(fts_specialize(a)).Delta);
    }
  }
}

// ---- suite 9: point chasing ----

void suite_chasing(Ctx& c) {
  WeierstrassCurve e = curve_new(Rat(0), Rat(0), Rat(0), Rat(-25), Rat(0));
  RationalTensor h =
      hc_construct(e, CurvePoint(Rat(-4), Rat(6)), CurvePoint(Rat(0), Rat(0)));
  auto pts = small_hc_chase_points(h);
  c.check(!pts.empty());
  for (const ChaseState& st : pts) {
    ChaseState once = hc_chase(h, st, {2, 1, 3});
    c.check(hc_chase(h, once, {2, 1, 3}) == st);
    c.check(hc_chase(h, st, {0, 1, 2, 3, 0, 2, 1, 3, 1, 0, 2, 3}) == st);
  }
  RationalTensor b = rc_construct(Rat(0), Rat(1), Rat(0));
  auto cps = small_c12_points(b);
  c.check(!cps.empty());
  using TM = TriangleMove;
  for (const auto& p : cps) {
    C12Point start = rc_chase(b, p, {});
    C12Point one = rc_chase(b, p, {TM::Clockwise});
    c.check(rc_chase(b, one, {TM::Counterclockwise}) == start);
    c.check(rc_chase(b, p, {TM::Clockwise, TM::Clockwise, TM::Clockwise}) ==
            start);
  }
}

// ---- suite 10: derived invariant dimensions and the cache ----

void suite_deriver(Ctx& c) {
  RepDescriptor hc = RepDescriptor::plain({2, 2, 2, 2});
  c.check(derive_invariants(hc, 2).size() == 1);
  c.check(derive_invariants(hc, 4).size() == 3);
  RepDescriptor tc = RepDescriptor::sym(3, 3);
  c.check(derive_invariants(tc, 4).size() == 1);
  c.check(derive_invariants(tc, 6).size() == 1);
  RepDescriptor s22{{RepFactor{2, 2}, RepFactor{2, 2}}};
  c.check(derive_invariants(s22, 2).size() == 1);
  c.check(derive_invariants(s22, 3).size() == 1);
  c.check(derive_invariants(s22, 4).size() >= 1);

  // cache round trip is bit-exact
  std::string dir = (std::filesystem::temp_directory_path() /
                     "g1-acceptance-cache").string();
  std::filesystem::remove_all(dir);
  auto first = derive_invariants_cached(hc, 4, dir);
  auto second = derive_invariants_cached(hc, 4, dir);
  c.check(invariants_to_text(hc, 4, first) == invariants_to_text(hc, 4, second));
  c.check(first == derive_invariants(hc, 4));
  std::filesystem::remove_all(dir);
}

// ---- suite 11: cross-construction consistency ----

void suite_cross_construction(Ctx& c) {
  auto s3 = JordanAlg::split3();
  for (int t = 0; t < 50; t++) {
    RationalTensor h = c.random_tensor({2, 2, 2, 2});
    HermCube a0 = fts_eps(s3), a1 = fts_eps(s3);
    for (int s = 0; s < 2; s++) {
      RationalTensor slab({2, 2, 2});
      for (int j = 0; j < 2; j++)
        for (int k = 0; k < 2; k++)
          for (int l = 0; l < 2; l++) slab.at({j, k, l}) = h.at({s, j, k, l});
      (s == 0 ? a0 : a1) = fts_despecialize(slab, s3);
    }
    c.check(degree2_disc_quartic(a0, a1) == hc_binary_quartics(h)[0]);
  }
  for (int t = 0; t < 50; t++) {
    RationalTensor b = c.random_tensor({3, 3, 3});
    std::vector<JordanElement> xs;
    for (int s = 0; s < 3; s++) {
      Mat m(3, Vec(3));
      for (int j = 0; j < 3; j++)
        for (int k = 0; k < 3; k++) m[j][k] = b.at({s, j, k});
      xs.push_back(jordan_from_mat3(m));
    }
    c.check(degree3_norm_cubic(xs[0], xs[1], xs[2]) == rc_ternary_cubics(b)[0]);
  }
  for (int t = 0; t < 50;) {
    std::vector<Rat> f = c.random_coeffs(9);
    RationalTensor h = embed_22form(f);
    if (hc_IJ(h).Delta == 0) continue;
    t++;
    HypercubeInvariants v = hc_invariants(h);
    Form22Invariants fi = form22_invariants(f);
    c.check(3 * fi.delta2 == 8 * v.a2);
    c.check(27 * fi.delta3 * fi.delta3 == 4 * v.a6p);
    c.check(9 * fi.delta4 == 64 * v.a2 * v.a2 - 144 * v.a4p);
    Form22Jacobian hj = form22_jacobian_point(form22_hessian(f));
    c.check(hj.short_curve.j_invariant() ==
            hc_jacobian_points(h).curve.j_invariant());
  }
}

}  // namespace

const std::vector<std::string>& acceptance_suite_names() {
  static const std::vector<std::string> names = {
      "invariance",        "slicing",          "form22-identity",
      "hypercube-relations", "round-trips",    "symmetry-torsion",
      "desym",             "jordan-freudenthal", "point-chasing",
      "deriver-dimensions", "cross-construction"};
  return names;
}

SuiteResult run_acceptance_suite(const std::string& name) {
  Ctx c;
  c.r.name = name;
  if (name == "invariance")
    suite_invariance(c);
  else if (name == "slicing")
    suite_slicing(c);
  else if (name == "form22-identity")
    suite_form22_identity(c);
  else if (name == "hypercube-relations")
    suite_hypercube_relations(c);
  else if (name == "round-trips")
    suite_round_trips(c);
  else if (name == "symmetry-torsion")
    suite_symmetry_torsion(c);
  else if (name == "desym")
    suite_desym(c);
  else if (name == "jordan-freudenthal")
    suite_jordan(c);
  else if (name == "point-chasing")
    suite_chasing(c);
  else if (name == "deriver-dimensions")
    suite_deriver(c);
  else if (name == "cross-construction")
    suite_cross_construction(c);
  else
    throw std::invalid_argument("unknown suite: " + name);
  return c.r;
}

}  // namespace g1
