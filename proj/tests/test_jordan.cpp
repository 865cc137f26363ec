#include <doctest.h>

#include "g1/classical.hpp"
#include "g1/hypercube.hpp"
#include "g1/jordan.hpp"
#include "g1/rubiks.hpp"

using namespace g1;

namespace {

long lcg_state = 1;
Rat rnd() {
  lcg_state = (lcg_state * 1103515245 + 12345) % 2147483648L;
  return Rat((lcg_state % 9) - 4);
}

JordanElement random_element(const JordanAlg& alg) {
  JordanElement x = jordan_zero(alg);
  for (auto& v : x.c) v = rnd();
  return x;
}

HermCube random_cube(const JordanAlg& alg) {
  return {alg, rnd(), rnd(), random_element(alg), random_element(alg)};
}

std::vector<JordanAlg> all_algebras() {
  return {JordanAlg::field(),
          JordanAlg::binarions(),
          JordanAlg::split3(),
          JordanAlg::field_mat2(),
          JordanAlg::herm3(CompKind::Unarion),
          JordanAlg::herm3(CompKind::Binarion),
          JordanAlg::herm3(CompKind::Quaternion),
          JordanAlg::herm3(CompKind::Octonion)};
}

bool cube_equal(const HermCube& x, const HermCube& y) {
  return x.a == y.a && x.d == y.d && x.b.c == y.b.c && x.c.c == y.c.c;
}

Mat random_mat3() {
  Mat m(3, Vec(3));
  for (auto& r : m)
    for (auto& v : r) v = rnd();
  return m;
}

Mat adjugate3(const Mat& m) {
  Mat a(3, Vec(3));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      a[j][i] = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
    }
  return a;
}

// coefficient of t in disc(A + tB), halved; the duality pairing target
Rat half_disc_slope(const HermCube& a, const HermCube& b) {
  Rat dp = fts_disc(fts_add(a, b));
  Rat dm = fts_disc(fts_add(a, fts_scale(b, Rat(-1))));
  Rat d2 = fts_disc(fts_add(a, fts_scale(b, Rat(2))));
  Rat d0 = fts_disc(a), d4 = fts_disc(b);
  Rat q2 = (dp + dm) / 2 - d0 - d4;
  Rat odd = (dp - dm) / 2;
  Rat q3 = (d2 - d0 - 4 * q2 - 16 * d4 - 2 * odd) / 6;
  Rat q1 = odd - q3;
  return q1 / 2;
}

}  // namespace

TEST_CASE("composition algebras multiply norms and kill conjugates") {
  for (CompKind k : {CompKind::Unarion, CompKind::Binarion,
                     CompKind::Quaternion, CompKind::Octonion}) {
    for (int it = 0; it < 30; it++) {
      CompElement a = comp_zero(k), b = comp_zero(k);
      for (auto& v : a.c) v = rnd();
      for (auto& v : b.c) v = rnd();
      CHECK(comp_norm(comp_mul(a, b)) == comp_norm(a) * comp_norm(b));
      CHECK(comp_mul(a, comp_conj(a)).c ==
            comp_scale(comp_one(k), comp_norm(a)).c);
      CHECK(comp_trace(a) == comp_trace(comp_conj(a)));
    }
    CHECK(comp_norm(comp_one(k)) == 1);
  }
}

TEST_CASE("jordan norm, sharp, and trace on pinned elements") {
  // diag(1,2,3) in the symmetric 3x3 algebra
  auto h3k = JordanAlg::herm3(CompKind::Unarion);
  JordanElement x = jordan_zero(h3k);
  x.c[0] = 1;
  x.c[1] = 2;
  x.c[2] = 3;
  CHECK(jordan_norm(x) == 6);
  JordanElement s = jordan_sharp(x);
  CHECK(s.c[0] == 6);
  CHECK(s.c[1] == 3);
  CHECK(s.c[2] == 2);
  JordanElement ss = jordan_sharp(s);
  CHECK(ss.c[0] == 6);
  CHECK(ss.c[1] == 12);
  CHECK(ss.c[2] == 18);
  CHECK(jordan_trace(x) == 6);
  CHECK(jordan_spur(x) == 11);

  auto s3 = JordanAlg::split3();
  JordanElement y = jordan_zero(s3);
  y.c = {Rat(2), Rat(5), Rat(7)};
  CHECK(jordan_sharp(y).c == Vec{Rat(35), Rat(14), Rat(10)});

  for (const auto& alg : all_algebras()) {
    JordanElement e = jordan_e(alg);
    CHECK(jordan_norm(e) == 1);
    CHECK(jordan_sharp(e).c == e.c);
    CHECK(jordan_trace(e) == 3);
  }
}

TEST_CASE("jordan identities hold exactly over every algebra") {
  for (const auto& alg : all_algebras()) {
    JordanElement e = jordan_e(alg);
    for (int it = 0; it < 100; it++) {
      JordanElement x = random_element(alg), y = random_element(alg);
      Rat n = jordan_norm(x), t = jordan_trace(x), sp = jordan_spur(x);

      // adjoint identity (x#)# = Norm(x) x
      JordanElement ss = jordan_sharp(jordan_sharp(x));
      for (size_t i = 0; i < x.c.size(); i++) CHECK(ss.c[i] == n * x.c[i]);

      // e x x = Tr(x) e - x
      JordanElement ex = jordan_cross(e, x);
      for (size_t i = 0; i < x.c.size(); i++)
        CHECK(ex.c[i] == t * e.c[i] - x.c[i]);

      // trace duality Tr(x#, y) = Norm(x, x, y)
      Rat np = jordan_norm(jordan_add(x, y));
      Rat nm = jordan_norm(jordan_add(x, jordan_scale(y, Rat(-1))));
      Rat nxxy = (np - nm) / 2 - jordan_norm(y);
      CHECK(jordan_trace2(jordan_sharp(x), y) == nxxy);

      // Cayley-Hamilton x^3 - Tr(x) x^2 + Spur(x) x - Norm(x) e = 0
      JordanElement x2 = jordan_bullet(x, x);
      JordanElement x3 = jordan_bullet(x, x2);
      for (size_t i = 0; i < x.c.size(); i++)
        CHECK(x3.c[i] - t * x2.c[i] + sp * x.c[i] - n * e.c[i] == 0);
    }
  }
}

TEST_CASE("the 3x3 matrix model of the binarion hermitian algebra") {
  for (int it = 0; it < 30; it++) {
    Mat m = random_mat3(), n = random_mat3();
    JordanElement x = jordan_from_mat3(m), y = jordan_from_mat3(n);
    CHECK(jordan_norm(x) == mat_det(m));
    CHECK(jordan_to_mat3(jordan_sharp(x)) == adjugate3(m));
    // trace form is tr(MN)
    Rat tr = 0;
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++) tr += m[i][j] * n[j][i];
    CHECK(jordan_trace2(x, y) == tr);
    // bullet is the symmetrized matrix product
    Mat p(3, Vec(3));
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++) {
        Rat s = 0;
        for (int k = 0; k < 3; k++)
          s += m[i][k] * n[k][j] + n[i][k] * m[k][j];
        p[i][j] = s / 2;
      }
    CHECK(jordan_to_mat3(jordan_bullet(x, y)) == p);
    CHECK(jordan_to_mat3(x) == m);
  }
  CHECK_THROWS_AS(jordan_to_mat3(jordan_e(JordanAlg::split3())),
                  AlgebraMismatch);
}

TEST_CASE("hermitian cube discriminant, adjoint, and duality") {
  for (const auto& alg : all_algebras()) {
    HermCube eps = fts_eps(alg);
    CHECK(fts_disc(eps) == 1);
    HermCube ef = fts_flat(eps);
    CHECK(ef.a == 1);
    CHECK(ef.d == -1);
    CHECK(fts_is_zero({alg, Rat(0), Rat(0), ef.b, ef.c}));

    for (int it = 0; it < 100; it++) {
      HermCube a = random_cube(alg), b = random_cube(alg);
      Rat d = fts_disc(a);
      HermCube ff = fts_flat(fts_flat(a));
      CHECK(cube_equal(ff, fts_scale(a, -d * d)));
      CHECK(fts_pair(fts_flat(a), b) == half_disc_slope(a, b));
      CHECK(fts_pair(a, b) == -fts_pair(b, a));
    }
  }
}

TEST_CASE("the binary cubic model over the one-dimensional algebra") {
  auto k = JordanAlg::field();
  auto mk = [&](int a, int b, int c, int d) {
    HermCube x = fts_eps(k);
    x.a = a;
    x.d = d;
    x.b.c[0] = b;
    x.c.c[0] = c;
    return x;
  };
  // (1,0,0,1): the cubic X^3 + Y^3
  HermCube e = mk(1, 0, 0, 1);
  CHECK(fts_disc(e) == 1);
  HermCube f = fts_flat(e);
  CHECK(f.a == 1);
  CHECK(f.b.c[0] == 0);
  CHECK(f.c.c[0] == 0);
  CHECK(f.d == -1);
  HermCube f2 = fts_flat(f);
  CHECK(f2.a == -1);
  CHECK(f2.d == -1);

  for (int it = 0; it < 100; it++) {
    HermCube x = random_cube(k);
    Rat a = x.a, b = x.b.c[0], c = x.c.c[0], d = x.d;
    CHECK(fts_disc(x) == a * a * d * d - 3 * b * b * c * c -
                             6 * a * b * c * d + 4 * a * c * c * c +
                             4 * b * b * b * d);
    HermCube fl = fts_flat(x);
    CHECK(fl.a == 2 * b * b * b - 3 * a * b * c + a * a * d);
    CHECK(fl.b.c[0] == b * b * c - 2 * a * c * c + a * b * d);
    CHECK(fl.c.c[0] == -b * c * c + 2 * b * b * d - a * c * d);
    CHECK(fl.d == -2 * c * c * c + 3 * b * c * d - a * d * d);
  }
}

TEST_CASE("rank-one elements and the rank stratification") {
  for (const auto& alg : all_algebras()) {
    CHECK(fts_rank({alg, Rat(0), Rat(0), jordan_zero(alg),
                    jordan_zero(alg)}) == 0);
    CHECK(fts_rank(fts_eps(alg)) == 4);
    // (1, 0, 0, 0) is rank one, (1, 0, c, 0) with c# = 0, c != 0 is rank two
    HermCube one{alg, Rat(1), Rat(0), jordan_zero(alg), jordan_zero(alg)};
    CHECK(fts_rank(one) == 1);
    HermCube two = one;
    two.c.c[0] = 1;  // a coordinate with vanishing sharp in every algebra
    if (fts_is_zero(fts_flat(two)) && fts_disc(two) == 0)
      CHECK(fts_rank(two) == 2);
    // rank three: flat nonzero, disc zero
    for (int it = 0; it < 100; it++) {
      JordanElement al = random_element(alg), be = random_element(alg);
      HermCube s = fts_segre(al, be);
      CHECK(fts_disc(s) == 0);
      CHECK(fts_is_zero(fts_flat(s)));
      CHECK(fts_rank(s) <= 1);
      HermCube g = random_cube(alg);
      if (fts_disc(g) != 0) {
        CHECK(fts_rank(g) == 4);
        if (fts_disc(fts_flat(g)) == 0 && !fts_is_zero(fts_flat(g)))
          CHECK(fts_rank(fts_flat(g)) <= 3);
      }
    }
  }
  // Segre of (1, 1) over the one-dimensional algebra is (1,1,1,1)
  auto k = JordanAlg::field();
  HermCube s = fts_segre(jordan_e(k), jordan_e(k));
  CHECK(s.a == 1);
  CHECK(s.b.c[0] == 1);
  CHECK(s.c.c[0] == 1);
  CHECK(s.d == 1);
  // vanishing first argument kills everything but the final norm
  JordanElement z = jordan_zero(k), w = jordan_e(k);
  w.c[0] = 3;
  HermCube s2 = fts_segre(z, w);
  CHECK(s2.a == 0);
  CHECK(s2.b.c == Vec{Rat(0)});
  CHECK(s2.c.c == Vec{Rat(0)});
  CHECK(s2.d == 27);
}

TEST_CASE("discriminant transport through the cube specializations") {
  for (const auto& alg :
       {JordanAlg::field(), JordanAlg::binarions(), JordanAlg::split3()}) {
    for (int it = 0; it < 50; it++) {
      HermCube a = random_cube(alg);
      RationalTensor t = fts_specialize(a);
      CHECK(fts_disc(a) == cube_disc(t).Delta);
      CHECK(cube_equal(a, fts_despecialize(t, alg)));
    }
  }
  // symmetry tags of the small targets
  HermCube a = random_cube(JordanAlg::field());
  CHECK(fts_specialize(a).symmetry.kind == SymmetryTag::FullSym);
  HermCube b = random_cube(JordanAlg::binarions());
  RationalTensor tb = fts_specialize(b);
  CHECK(tb.symmetry.kind == SymmetryTag::SymLastK);
  CHECK(tb.at({0, 1, 0}) == tb.at({0, 0, 1}));
  CHECK_THROWS_AS(fts_specialize(random_cube(JordanAlg::herm3(
                      CompKind::Octonion))),
                  AlgebraMismatch);
}

TEST_CASE("pairs of skew quaternary forms and their decomposables") {
  auto alg = JordanAlg::field_mat2();
  for (int it = 0; it < 30; it++) {
    HermCube a = random_cube(alg);
    RationalTensor t = fts_specialize(a);
    CHECK(t.shape == std::vector<int>{2, 4, 4});
    for (int s = 0; s < 2; s++)
      for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
          CHECK(t.at({s, i, j}) == -t.at({s, j, i}));
    CHECK(cube_equal(a, fts_despecialize(t, alg)));
    Rat d0 = fts_disc(a);
    // unimodular change on the two-dimensional axis
    Mat g{{Rat(1), rnd()}, {Rat(0), Rat(1)}};
    CHECK(fts_disc(fts_despecialize(act(t, 0, g), alg)) == d0);
    // elementary SL4 change acting on both four-dimensional axes
    Mat h(4, Vec(4, Rat(0)));
    for (int k = 0; k < 4; k++) h[k][k] = 1;
    h[1][3] = rnd();
    CHECK(fts_disc(fts_despecialize(act(act(t, 1, h), 2, h), alg)) == d0);
  }
  // v (x) w1 ^ w2 despecializes to a rank <= 1 cube
  for (int it = 0; it < 30; it++) {
    Vec v = {rnd(), rnd()}, w1(4), w2(4);
    for (auto& x : w1) x = rnd();
    for (auto& x : w2) x = rnd();
    RationalTensor t({2, 4, 4});
    for (int s = 0; s < 2; s++)
      for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
          t.at({s, i, j}) = v[s] * (w1[i] * w2[j] - w1[j] * w2[i]);
    HermCube a = fts_despecialize(t, alg);
    CHECK(fts_disc(a) == 0);
    CHECK(fts_is_zero(fts_flat(a)));
    if (!fts_is_zero(a)) CHECK(fts_rank(a) == 1);
  }
}

TEST_CASE("senary three-forms and their decomposables") {
  auto alg = JordanAlg::herm3(CompKind::Binarion);
  // the basepoint goes to e1^e2^e3 + f1^f2^f3
  RationalTensor te = fts_specialize(fts_eps(alg));
  for (int p = 0; p < 6; p++)
    for (int q = 0; q < 6; q++)
      for (int r = 0; r < 6; r++) {
        Rat want = 0;
        // alternating images of e1^e2^e3 and f1^f2^f3
        if (p != q && q != r && p != r &&
            ((p < 3 && q < 3 && r < 3) || (p >= 3 && q >= 3 && r >= 3))) {
          int inv = (p > q) + (q > r) + (p > r);
          want = inv % 2 ? -1 : 1;
        }
        CHECK(te.at({p, q, r}) == want);
      }

  for (int it = 0; it < 20; it++) {
    HermCube a = random_cube(alg);
    RationalTensor t = fts_specialize(a);
    CHECK(cube_equal(a, fts_despecialize(t, alg)));
    Rat d0 = fts_disc(a);
    // elementary unimodular substitution through all three axes
    Mat g(6, Vec(6, Rat(0)));
    for (int k = 0; k < 6; k++) g[k][k] = 1;
    g[(it * 5) % 6][(it * 5 + 1 + it % 5) % 6] = rnd();
    RationalTensor u = t;
    for (int ax = 0; ax < 3; ax++) u = act(u, ax, g);
    CHECK(fts_disc(fts_despecialize(u, alg)) == d0);
  }

  // the wedge of the rows of a random 3x6 matrix is rank <= 1
  for (int it = 0; it < 15; it++) {
    Mat m = random_mat3(), n = random_mat3();
    RationalTensor t({6, 6, 6});
    auto comp = [&](int row, int idx) {
      return idx < 3 ? m[row][idx] : n[row][idx - 3];
    };
    for (int p = 0; p < 6; p++)
      for (int q = 0; q < 6; q++)
        for (int r = 0; r < 6; r++) {
          if (p == q || q == r || p == r) continue;
          Mat box(3, Vec(3));
          int idx[3] = {p, q, r};
          for (int row = 0; row < 3; row++)
            for (int s = 0; s < 3; s++) box[row][s] = comp(row, idx[s]);
          t.at({p, q, r}) = mat_det(box);
        }
    HermCube a = fts_despecialize(t, alg);
    CHECK(a.a == mat_det(m));
    CHECK(a.d == mat_det(n));
    CHECK(fts_disc(a) == 0);
    CHECK(fts_is_zero(fts_flat(a)));
    if (!fts_is_zero(a)) CHECK(fts_rank(a) == 1);
  }
}

TEST_CASE("norm cubics of matrix triples recover rubiks slicing") {
  auto alg = JordanAlg::herm3(CompKind::Binarion);
  for (int trial = 0; trial < 20; trial++) {
    RationalTensor rc({3, 3, 3});
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++)
        for (int k = 0; k < 3; k++) rc.at({i, j, k}) = rnd();
    std::vector<JordanElement> xs;
    for (int s = 0; s < 3; s++) {
      Mat m(3, Vec(3));
      for (int j = 0; j < 3; j++)
        for (int k = 0; k < 3; k++) m[j][k] = rc.at({s, j, k});
      xs.push_back(jordan_from_mat3(m));
    }
    CHECK(degree3_norm_cubic(xs[0], xs[1], xs[2]) == rc_ternary_cubics(rc)[0]);
  }
  // diagonal units give the xyz-type cubic
  auto h3k = JordanAlg::herm3(CompKind::Unarion);
  JordanElement u1 = jordan_zero(h3k), u2 = jordan_zero(h3k),
                u3 = jordan_zero(h3k);
  u1.c[0] = 1;
  u2.c[1] = 1;
  u3.c[2] = 1;
  auto cubic = degree3_norm_cubic(u1, u2, u3);
  std::vector<Rat> want(10, Rat(0));
  want[4] = 1;  // the xyz coefficient
  CHECK(cubic == want);
  CHECK(degree3_norm_cubic(jordan_zero(h3k), jordan_zero(h3k),
                           jordan_zero(h3k)) == std::vector<Rat>(10, Rat(0)));
}

TEST_CASE("disc quartics of cube pairs recover hypercube slicing") {
  auto s3 = JordanAlg::split3();
  for (int trial = 0; trial < 20; trial++) {
    RationalTensor h({2, 2, 2, 2});
    for (int i = 0; i < 2; i++)
      for (int j = 0; j < 2; j++)
        for (int k = 0; k < 2; k++)
          for (int l = 0; l < 2; l++) h.at({i, j, k, l}) = rnd();
    HermCube a0 = fts_eps(s3), a1 = fts_eps(s3);
    for (int s = 0; s < 2; s++) {
      RationalTensor c({2, 2, 2});
      for (int j = 0; j < 2; j++)
        for (int k = 0; k < 2; k++)
          for (int l = 0; l < 2; l++) c.at({j, k, l}) = h.at({s, j, k, l});
      (s == 0 ? a0 : a1) = fts_despecialize(c, s3);
    }
    auto q = degree2_disc_quartic(a0, a1);
    CHECK(q == hc_binary_quartics(h)[0]);
    // equivariance: a substitution on the pencil matches a substitution
    // of the quartic variables
    Rat aa = rnd(), bb = rnd(), cc = rnd(), dd = rnd();
    if (aa * dd - bb * cc == 0) continue;
    HermCube m0 = fts_add(fts_scale(a0, aa), fts_scale(a1, cc));
    HermCube m1 = fts_add(fts_scale(a0, bb), fts_scale(a1, dd));
    auto q2 = degree2_disc_quartic(m0, m1);
    Mat g{{aa, cc}, {bb, dd}};
    CHECK(q2 == binary_form_act(q, g));
  }
  // a vanishing second member leaves only the leading coefficient
  HermCube a = random_cube(s3);
  HermCube zero{s3, Rat(0), Rat(0), jordan_zero(s3), jordan_zero(s3)};
  auto q = degree2_disc_quartic(a, zero);
  CHECK(q == std::vector<Rat>{fts_disc(a), Rat(0), Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("operations across different algebras are rejected") {
  auto k = JordanAlg::field(), s3 = JordanAlg::split3();
  CHECK_THROWS_AS(jordan_add(jordan_e(k), jordan_e(s3)), AlgebraMismatch);
  CHECK_THROWS_AS(jordan_trace2(jordan_e(k), jordan_e(s3)), AlgebraMismatch);
  CHECK_THROWS_AS(fts_segre(jordan_e(k), jordan_e(s3)), AlgebraMismatch);
  CHECK_THROWS_AS(fts_pair(fts_eps(k), fts_eps(s3)), AlgebraMismatch);
  CHECK_THROWS_AS(degree2_disc_quartic(fts_eps(k), fts_eps(s3)),
                  AlgebraMismatch);
  CHECK_THROWS_AS(comp_mul(comp_one(CompKind::Binarion),
                           comp_one(CompKind::Quaternion)),
                  AlgebraMismatch);
}
