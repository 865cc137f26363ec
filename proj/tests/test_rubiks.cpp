#include "doctest.h"

#include "g1/calibration.hpp"
#include "g1/rubiks.hpp"

using namespace g1;

namespace {

long lcg(long& s) {
  s = (s * 1103515245 + 12345) % (1L << 31);
  return s % 9 - 4;
}

Mat unimodular3(long& s) {
  Mat u(3, Vec(3, Rat(0))), l(3, Vec(3, Rat(0)));
  for (int i = 0; i < 3; i++) {
    u[i][i] = l[i][i] = Rat(1);
    for (int j = i + 1; j < 3; j++) {
      u[i][j] = Rat(lcg(s));
      l[j][i] = Rat(lcg(s));
    }
  }
  Mat r(3, Vec(3, Rat(0)));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int k = 0; k < 3; k++) r[i][j] += u[i][k] * l[k][j];
  return r;
}

RationalTensor random_cube(long& s) {
  RationalTensor t({3, 3, 3});
  for (auto& e : t.entries) e = Rat(lcg(s));
  return t;
}

// A random element of V (x) Sym^2 V: three symmetric slices.
RationalTensor random_doubly_symmetric(long& s) {
  RationalTensor t({3, 3, 3});
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      for (int k = j; k < 3; k++) t.at({i, j, k}) = t.at({i, k, j}) = Rat(lcg(s));
  return t;
}

// Brute-force small rational points of C12 for a constructed cube.
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

}  // namespace

TEST_CASE("ternary cubic slicing determinants") {
  RationalTensor b({3, 3, 3});
  for (int j = 0; j < 3; j++) b.at({0, j, j}) = Rat(1);
  auto f = rc_ternary_cubics(b);
  std::vector<Rat> x3(10, Rat(0));
  x3[0] = Rat(1);
  CHECK(f[0] == x3);
  CHECK(f[1] == std::vector<Rat>(10, Rat(0)));

  RationalTensor z({3, 3, 3});
  auto fz = rc_ternary_cubics(z);
  for (int i = 0; i < 3; i++) CHECK(fz[i] == std::vector<Rat>(10, Rat(0)));

  // All three cubics share their invariants.
  long s = 3;
  for (int trial = 0; trial < 10; trial++) {
    auto g = rc_ternary_cubics(random_cube(s));
    auto i1 = tc_invariants(g[0]), i2 = tc_invariants(g[1]),
         i3 = tc_invariants(g[2]);
    CHECK(i1.d4 == i2.d4);
    CHECK(i1.d4 == i3.d4);
    CHECK(i1.d6 == i2.d6);
    CHECK(i1.d6 == i3.d6);
  }
}

TEST_CASE("degree-9 invariant") {
  RationalTensor b({3, 3, 3});
  long diag[3] = {1, 2, 3};
  for (int i = 0; i < 3; i++) b.at({0, i, i}) = Rat(diag[i]);
  for (int i = 0; i < 3; i++) b.at({1, i, i}) = Rat(1);
  b.at({2, 0, 1}) = b.at({2, 1, 2}) = b.at({2, 2, 0}) = Rat(1);
  CHECK(rc_strassen(b) == 2);

  // Doubly symmetric cubes: the degree-9 invariant vanishes.
  long s = 5;
  for (int trial = 0; trial < 100; trial++)
    CHECK(rc_strassen(random_doubly_symmetric(s)) == 0);

  // One matrix repeated: every middle slice singular in some directions; the
  // determinant-one fallback settles on 0.
  RationalTensor e({3, 3, 3});
  for (int j = 0; j < 3; j++) e.at({0, j, j}) = Rat(1);
  CHECK(rc_strassen(e) == 0);

  // Invariance under determinant-one coordinate changes on each axis, and
  // weight 9 under scaling.
  s = 11;
  RationalTensor t = random_cube(s);
  Rat c9 = rc_strassen(t);
  for (int axis = 0; axis < 3; axis++)
    CHECK(rc_strassen(act(t, axis, unimodular3(s))) == c9);
  CHECK(rc_strassen(t.scale(Rat(2))) == 512 * c9);
}

TEST_CASE("construct/invariants round trips") {
  long targets[][3] = {{0, 1, 0},  {1, 1, 1},  {2, 1, 1},   {1, 1, 0},
                       {-1, 2, 3}, {5, -2, 1}, {0, 3, 2},   {2, -1, -1},
                       {1, 4, 1},  {-3, 1, 2}};
  for (auto& v : targets) {
    Rat c6(v[0]), c9(v[1]), c12(v[2]);
    RationalTensor b = rc_construct(c6, c9, c12);
    // Constructed cubes are nondegenerate.
    CHECK(tc_invariants(rc_ternary_cubics(b)[0]).Delta != 0);
    RubiksInvariants inv = rc_invariants(b);
    // One rational weight lambda^3 accounts for all three invariants.
    auto mu = rat_kth_root(inv.c9 / c9, 3);
    REQUIRE(mu.has_value());
    Rat m2 = *mu * *mu;
    CHECK(inv.c6 == c6 * m2);
    CHECK(inv.c12 == c12 * m2 * m2);
  }
  // (1,1,0) exercises root selection: its pinning cubic factors as
  // 32 (X-1)^2 (X+2), so tracking must pick 1 over -2 (checked above).
  CHECK_THROWS_AS(rc_construct(Rat(0), Rat(0), Rat(0)), SingularTarget);
  CHECK_THROWS_AS(rc_construct(Rat(1), Rat(0), Rat(0)), SingularTarget);
}

TEST_CASE("anchor cube (0,1,0)") {
  RationalTensor b = rc_construct(Rat(0), Rat(1), Rat(0));
  CHECK(tc_invariants(rc_ternary_cubics(b)[0]).d4 == 0);
  RubiksJacobian j = rc_jacobian_point(b);
  // y^2 + c9 y = x^3 with 3-torsion point (0,0)
  CHECK(j.curve.a2 == 0);
  CHECK(j.curve.a4 == 0);
  CHECK(j.curve.a3 != 0);
  CHECK(j.curve.contains(j.point));
  CHECK(torsion_order(j.curve, j.point).value() == 3);
  CHECK(j.short_curve.contains(j.short_point));
}

TEST_CASE("invariance and the pinning identity") {
  long s = 17;
  for (int trial = 0; trial < 5;) {
    RationalTensor t = random_cube(s);
    TernaryCubicInvariants tc = tc_invariants(rc_ternary_cubics(t)[0]);
    if (tc.Delta == 0) continue;
    trial++;
    RubiksInvariants inv = rc_invariants(t);
    CHECK(32 * inv.c6 * inv.c6 * inv.c6 - 6 * inv.d4 * inv.c6 -
              (216 * inv.c9 * inv.c9 + inv.d6) ==
          0);
    // (0,0) lies on the model exactly.
    CHECK(curve_new(Rat(0), inv.c6, inv.c9, inv.c12, Rat(0))
              .contains(CurvePoint(Rat(0), Rat(0))));
    // d4, d6 are invariant under determinant-one actions on any axis.
    for (int axis = 0; axis < 3; axis++) {
      TernaryCubicInvariants moved =
          tc_invariants(rc_ternary_cubics(act(t, axis, unimodular3(s)))[0]);
      CHECK(moved.d4 == inv.d4);
      CHECK(moved.d6 == inv.d6);
    }
    // Scaling weights 6, 9, 12, 12, 18.
    RubiksInvariants sc = rc_invariants(t.scale(Rat(2)));
    CHECK(sc.c6 == 64 * inv.c6);
    CHECK(sc.c9 == 512 * inv.c9);
    CHECK(sc.c12 == 4096 * inv.c12);
    CHECK(sc.d4 == 4096 * inv.d4);
    CHECK(sc.d6 == 262144 * inv.d6);
    CHECK(sc.d18 == -54 * sc.d6);
  }
  // Degenerate input is rejected.
  RationalTensor e({3, 3, 3});
  for (int j = 0; j < 3; j++) e.at({0, j, j}) = Rat(1);
  CHECK_THROWS_AS(rc_invariants(e), Degenerate);
}

TEST_CASE("doubly symmetric cubes") {
  long s = 23;
  for (int trial = 0; trial < 5;) {
    RationalTensor t = random_doubly_symmetric(s);
    if (tc_invariants(rc_ternary_cubics(t)[0]).Delta == 0) continue;
    trial++;
    RubiksInvariants inv = rc_invariants(t);
    CHECK(inv.c9 == 0);
    // Model y^2 = x^3 + c6 x^2 + c12 x with the marked point 2-torsion, and
    // the discriminant factorization 16 c12^2 (c6^2 - 4 c12).
    RubiksJacobian j = rc_jacobian_point(t);
    CHECK(j.curve.a1 == 0);
    CHECK(j.curve.a3 == 0);
    CHECK(torsion_order(j.curve, j.point).value() == 2);
    CHECK(inv.Delta ==
          16 * inv.c12 * inv.c12 * (inv.c6 * inv.c6 - 4 * inv.c12));
  }
}

TEST_CASE("triply symmetric cubes") {
  long s = 29;
  bool first = true;
  Rat k6, k12, kdisc;
  for (int trial = 0; trial < 5;) {
    std::vector<Rat> h(10);
    for (auto& c : h) c = Rat(lcg(s));
    TernaryCubicInvariants tc = tc_invariants(h);
    if (tc.d4 == 0 || tc.d6 == 0 || tc.Delta == 0) continue;
    RationalTensor t = sym_embed_ternary_cubic(h);
    if (tc_invariants(rc_ternary_cubics(t)[0]).Delta == 0) continue;
    trial++;
    RubiksInvariants inv = rc_invariants(t);
    CHECK(inv.c9 == 0);
    // The Jacobian is y^2 = x^3 - 72 d6 x^2 + 1296 d4^3 x up to weights:
    // fixed ratios c6 : d6 and c12 : d4^3 with the display's cross-relation.
    Rat r6 = inv.c6 / tc.d6;
    Rat r12 = inv.c12 / (tc.d4 * tc.d4 * tc.d4);
    Rat rd = inv.Delta / (rat_pow(tc.d4, 6) *
                          (tc.d4 * tc.d4 * tc.d4 - tc.d6 * tc.d6));
    if (first) {
      k6 = r6;
      k12 = r12;
      kdisc = rd;
      first = false;
      CHECK(r12 / 1296 == (r6 / -72) * (r6 / -72));
    } else {
      CHECK(r6 == k6);
      CHECK(r12 == k12);
      CHECK(rd == kdisc);
    }
    CHECK(torsion_order(rc_jacobian_point(t).curve,
                        CurvePoint(Rat(0), Rat(0)))
              .value() == 2);
  }
}

TEST_CASE("triangle point chasing") {
  RationalTensor b = rc_construct(Rat(0), Rat(1), Rat(0));
  auto pts = small_c12_points(b);
  REQUIRE(!pts.empty());
  using TM = TriangleMove;
  for (const auto& p : pts) {
    C12Point start = rc_chase(b, p, {});
    C12Point one = rc_chase(b, p, {TM::Clockwise});
    CHECK(!(one == start));  // translation by a nonzero point
    CHECK(rc_chase(b, one, {TM::Counterclockwise}) == start);
    CHECK(rc_chase(b, p, {TM::Clockwise, TM::Clockwise, TM::Clockwise}) ==
          start);  // 3 P = O on the 3-torsion anchor
  }
  C12Point bogus = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
  CHECK_THROWS_AS(rc_chase(b, bogus, {}), NotOnCurve);
}

TEST_CASE("calibration") {
  // Idempotent: recalibrating reproduces the record bit-exactly.
  CalibrationRecord a = calibrate(standard_anchors());
  CalibrationRecord b = calibrate(standard_anchors());
  CHECK(a.alpha == b.alpha);
  CHECK(a.beta == b.beta);
  CHECK(a.rc_anchor_c6 == b.rc_anchor_c6);
  CHECK(a.rc_anchor.entries == b.rc_anchor.entries);
  CHECK(a.provenance == b.provenance);

  // An anchor whose target is off by one is rejected.
  auto bad = standard_anchors();
  bad[1].targets[2] += 1;
  CHECK_THROWS_AS(calibrate(bad), InconsistentAnchors);

  // Nodal cubic x^3 - y^2 z is singular.
  std::vector<Rat> nodal(10, Rat(0));
  nodal[0] = Rat(1);
  nodal[7] = Rat(-1);
  CHECK(tc_invariants(nodal).Delta == 0);
  CHECK_THROWS_AS(tc_jacobian(nodal), Degenerate);

  // tc invariance and the Jacobian coefficients.
  long s = 31;
  std::vector<Rat> f(10);
  for (auto& c : f) c = Rat(lcg(s));
  TernaryCubicInvariants tc = tc_invariants(f);
  for (int i = 0; i < 5; i++) {
    TernaryCubicInvariants moved = tc_invariants(ternary_cubic_act(f, unimodular3(s)));
    CHECK(moved.d4 == tc.d4);
    CHECK(moved.d6 == tc.d6);
  }
  if (tc.Delta != 0) {
    WeierstrassCurve e = tc_jacobian(f);
    CHECK(e.a4 == -27 * tc.d4);
    CHECK(e.a6 == -54 * tc.d6);
  }
}
