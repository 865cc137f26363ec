#include "g1/jordan.hpp"

namespace g1 {

namespace {

void require_same(const JordanAlg& a, const JordanAlg& b) {
  if (!(a == b)) throw AlgebraMismatch();
}

// cross product of 3-vectors stored in spans of a coordinate list
std::array<Rat, 3> cross3(const Rat* a, const Rat* b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Rat dot3(const Rat* a, const Rat* b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

// ---- composition algebras ----

int comp_dim(CompKind k) {
  switch (k) {
    case CompKind::Unarion: return 1;
    case CompKind::Binarion: return 2;
    case CompKind::Quaternion: return 4;
    default: return 8;
  }
}

CompElement comp_zero(CompKind k) {
  return {k, std::vector<Rat>(comp_dim(k), Rat(0))};
}

CompElement comp_one(CompKind k) {
  CompElement e = comp_zero(k);
  switch (k) {
    case CompKind::Unarion: e.c[0] = 1; break;
    case CompKind::Binarion: e.c[0] = e.c[1] = 1; break;
    case CompKind::Quaternion: e.c[0] = e.c[3] = 1; break;
    default: e.c[0] = e.c[7] = 1; break;
  }
  return e;
}

CompElement comp_add(const CompElement& a, const CompElement& b) {
  if (a.kind != b.kind) throw AlgebraMismatch();
  CompElement r = a;
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] += b.c[i];
  return r;
}

CompElement comp_scale(const CompElement& a, const Rat& s) {
  CompElement r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

CompElement comp_mul(const CompElement& a, const CompElement& b) {
  if (a.kind != b.kind) throw AlgebraMismatch();
  CompElement r = comp_zero(a.kind);
  switch (a.kind) {
    case CompKind::Unarion:
      r.c[0] = a.c[0] * b.c[0];
      break;
    case CompKind::Binarion:
      r.c[0] = a.c[0] * b.c[0];
      r.c[1] = a.c[1] * b.c[1];
      break;
    case CompKind::Quaternion:
      // 2x2 matrix product, coordinates (m11, m12, m21, m22)
      r.c[0] = a.c[0] * b.c[0] + a.c[1] * b.c[2];
      r.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[3];
      r.c[2] = a.c[2] * b.c[0] + a.c[3] * b.c[2];
      r.c[3] = a.c[2] * b.c[1] + a.c[3] * b.c[3];
      break;
    default: {
      // Zorn vector matrices ((s, v), (w, t)):
      // (s1,v1,w1,t1)(s2,v2,w2,t2) = (s1 s2 + v1.w2,
      //   s1 v2 + t2 v1 - w1 x w2, s2 w1 + t1 w2 + v1 x v2, t1 t2 + w1.v2)
      const Rat *v1 = &a.c[1], *w1 = &a.c[4], *v2 = &b.c[1], *w2 = &b.c[4];
      const Rat &s1 = a.c[0], &t1 = a.c[7], &s2 = b.c[0], &t2 = b.c[7];
      r.c[0] = s1 * s2 + dot3(v1, w2);
      auto vw = cross3(w1, w2);
      for (int i = 0; i < 3; i++)
        r.c[1 + i] = s1 * v2[i] + t2 * v1[i] - vw[i];
      auto vv = cross3(v1, v2);
      for (int i = 0; i < 3; i++)
        r.c[4 + i] = s2 * w1[i] + t1 * w2[i] + vv[i];
      r.c[7] = t1 * t2 + dot3(w1, v2);
      break;
    }
  }
  return r;
}

CompElement comp_conj(const CompElement& a) {
  CompElement r = a;
  switch (a.kind) {
    case CompKind::Unarion:
      break;
    case CompKind::Binarion:
      std::swap(r.c[0], r.c[1]);
      break;
    case CompKind::Quaternion:
      r.c = {a.c[3], -a.c[1], -a.c[2], a.c[0]};
      break;
    default:
      r.c[0] = a.c[7];
      r.c[7] = a.c[0];
      for (int i = 1; i < 7; i++) r.c[i] = -a.c[i];
      break;
  }
  return r;
}

Rat comp_norm(const CompElement& a) {
  switch (a.kind) {
    case CompKind::Unarion: return a.c[0] * a.c[0];
    case CompKind::Binarion: return a.c[0] * a.c[1];
    case CompKind::Quaternion: return a.c[0] * a.c[3] - a.c[1] * a.c[2];
    default:
      return a.c[0] * a.c[7] - dot3(&a.c[1], &a.c[4]);
  }
}

Rat comp_trace(const CompElement& a) {
  switch (a.kind) {
    case CompKind::Unarion: return 2 * a.c[0];
    case CompKind::Binarion: return a.c[0] + a.c[1];
    case CompKind::Quaternion: return a.c[0] + a.c[3];
    default: return a.c[0] + a.c[7];
  }
}

// ---- cubic Jordan algebras ----

int JordanAlg::dim() const {
  switch (kind) {
    case Field: return 1;
    case Binarions: return 2;
    case Split3: return 3;
    case FieldMat2: return 5;
    default: return 3 + 3 * comp_dim(comp);
  }
}

std::string JordanAlg::str() const {
  switch (kind) {
    case Field: return "K";
    case Binarions: return "KxK";
    case Split3: return "KxKxK";
    case FieldMat2: return "KxMat2";
    default:
      switch (comp) {
        case CompKind::Unarion: return "H3(K)";
        case CompKind::Binarion: return "H3(KxK)";
        case CompKind::Quaternion: return "H3(Q)";
        default: return "H3(O)";
      }
  }
}

namespace {

// Herm3 coordinate access: (c1, c2, c3, a1, a2, a3)
CompElement herm3_off(const JordanElement& x, int i) {
  int d = comp_dim(x.alg.comp);
  CompElement e{x.alg.comp, {}};
  e.c.assign(x.c.begin() + 3 + i * d, x.c.begin() + 3 + (i + 1) * d);
  return e;
}

void herm3_set_off(JordanElement& x, int i, const CompElement& e) {
  int d = comp_dim(x.alg.comp);
  for (int j = 0; j < d; j++) x.c[3 + i * d + j] = e.c[j];
}

}  // namespace

JordanElement jordan_zero(const JordanAlg& alg) {
  return {alg, std::vector<Rat>(alg.dim(), Rat(0))};
}

JordanElement jordan_e(const JordanAlg& alg) {
  JordanElement e = jordan_zero(alg);
  switch (alg.kind) {
    case JordanAlg::Field: e.c[0] = 1; break;
    case JordanAlg::Binarions: e.c[0] = e.c[1] = 1; break;
    case JordanAlg::Split3: e.c[0] = e.c[1] = e.c[2] = 1; break;
    case JordanAlg::FieldMat2: e.c[0] = e.c[1] = e.c[4] = 1; break;
    default: e.c[0] = e.c[1] = e.c[2] = 1; break;
  }
  return e;
}

JordanElement jordan_add(const JordanElement& x, const JordanElement& y) {
  require_same(x.alg, y.alg);
  JordanElement r = x;
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] += y.c[i];
  return r;
}

JordanElement jordan_scale(const JordanElement& x, const Rat& s) {
  JordanElement r = x;
  for (auto& v : r.c) v *= s;
  return r;
}

Rat jordan_norm(const JordanElement& x) {
  switch (x.alg.kind) {
    case JordanAlg::Field:
      return x.c[0] * x.c[0] * x.c[0];
    case JordanAlg::Binarions:
      return x.c[0] * x.c[1] * x.c[1];
    case JordanAlg::Split3:
      return x.c[0] * x.c[1] * x.c[2];
    case JordanAlg::FieldMat2:
      return x.c[0] * (x.c[1] * x.c[4] - x.c[2] * x.c[3]);
    default: {
      CompElement a1 = herm3_off(x, 0), a2 = herm3_off(x, 1),
                  a3 = herm3_off(x, 2);
      return x.c[0] * x.c[1] * x.c[2] - x.c[0] * comp_norm(a1) -
             x.c[1] * comp_norm(a2) - x.c[2] * comp_norm(a3) +
             comp_trace(comp_mul(comp_mul(a1, a2), a3));
    }
  }
}

JordanElement jordan_sharp(const JordanElement& x) {
  JordanElement r = jordan_zero(x.alg);
  switch (x.alg.kind) {
    case JordanAlg::Field:
      r.c[0] = x.c[0] * x.c[0];
      break;
    case JordanAlg::Binarions:
      r.c[0] = x.c[1] * x.c[1];
      r.c[1] = x.c[0] * x.c[1];
      break;
    case JordanAlg::Split3:
      r.c[0] = x.c[1] * x.c[2];
      r.c[1] = x.c[0] * x.c[2];
      r.c[2] = x.c[0] * x.c[1];
      break;
    case JordanAlg::FieldMat2:
      // (s, M) -> (det M, s adj M)
      r.c[0] = x.c[1] * x.c[4] - x.c[2] * x.c[3];
      r.c[1] = x.c[0] * x.c[4];
      r.c[2] = -x.c[0] * x.c[2];
      r.c[3] = -x.c[0] * x.c[3];
      r.c[4] = x.c[0] * x.c[1];
      break;
    default: {
      const Rat &c1 = x.c[0], &c2 = x.c[1], &c3 = x.c[2];
      CompElement a1 = herm3_off(x, 0), a2 = herm3_off(x, 1),
                  a3 = herm3_off(x, 2);
      r.c[0] = c2 * c3 - comp_norm(a1);
      r.c[1] = c1 * c3 - comp_norm(a2);
      r.c[2] = c1 * c2 - comp_norm(a3);
      herm3_set_off(
          r, 0,
          comp_add(comp_mul(comp_conj(a3), comp_conj(a2)),
                   comp_scale(a1, -c1)));
      herm3_set_off(
          r, 1,
          comp_add(comp_mul(comp_conj(a1), comp_conj(a3)),
                   comp_scale(a2, -c2)));
      herm3_set_off(
          r, 2,
          comp_add(comp_mul(comp_conj(a2), comp_conj(a1)),
                   comp_scale(a3, -c3)));
      break;
    }
  }
  return r;
}

// Norm(x + t e) = Norm(x) + t Spur(x) + t^2 Tr(x) + t^3, so two shifted
// norm evaluations recover the trace and spur exactly.
Rat jordan_trace(const JordanElement& x) {
  JordanElement e = jordan_e(x.alg);
  Rat np = jordan_norm(jordan_add(x, e));
  Rat nm = jordan_norm(jordan_add(x, jordan_scale(e, Rat(-1))));
  return (np + nm) / 2 - jordan_norm(x);
}

Rat jordan_spur(const JordanElement& x) {
  JordanElement e = jordan_e(x.alg);
  Rat np = jordan_norm(jordan_add(x, e));
  Rat nm = jordan_norm(jordan_add(x, jordan_scale(e, Rat(-1))));
  return (np - nm) / 2 - 1;
}

Rat jordan_trace2(const JordanElement& x, const JordanElement& y) {
  require_same(x.alg, y.alg);
  Rat spur_xy =
      jordan_spur(jordan_add(x, y)) - jordan_spur(x) - jordan_spur(y);
  return jordan_trace(x) * jordan_trace(y) - spur_xy;
}

JordanElement jordan_cross(const JordanElement& x, const JordanElement& y) {
  require_same(x.alg, y.alg);
  JordanElement r = jordan_sharp(jordan_add(x, y));
  JordanElement xs = jordan_sharp(x), ys = jordan_sharp(y);
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] -= xs.c[i] + ys.c[i];
  return r;
}

JordanElement jordan_bullet(const JordanElement& x, const JordanElement& y) {
  require_same(x.alg, y.alg);
  Rat spur_xy =
      jordan_spur(jordan_add(x, y)) - jordan_spur(x) - jordan_spur(y);
  JordanElement r = jordan_cross(x, y);
  JordanElement e = jordan_e(x.alg);
  Rat tx = jordan_trace(x), ty = jordan_trace(y);
  for (size_t i = 0; i < r.c.size(); i++)
    r.c[i] = (r.c[i] + tx * y.c[i] + ty * x.c[i] - spur_xy * e.c[i]) / 2;
  return r;
}

JordanData jordan_norm_sharp(const JordanElement& x) {
  return {jordan_norm(x), jordan_trace(x), jordan_spur(x), jordan_sharp(x)};
}

JordanElement jordan_from_mat3(const Mat& m) {
  JordanElement x = jordan_zero(JordanAlg::herm3(CompKind::Binarion));
  x.c[0] = m[0][0];
  x.c[1] = m[1][1];
  x.c[2] = m[2][2];
  // off-diagonal pairs: a1 = (m23, m32), a2 = (m31, m13), a3 = (m12, m21)
  x.c[3] = m[1][2];
  x.c[4] = m[2][1];
  x.c[5] = m[2][0];
  x.c[6] = m[0][2];
  x.c[7] = m[0][1];
  x.c[8] = m[1][0];
  return x;
}

Mat jordan_to_mat3(const JordanElement& x) {
  if (!(x.alg == JordanAlg::herm3(CompKind::Binarion)))
    throw AlgebraMismatch();
  Mat m(3, Vec(3));
  m[0][0] = x.c[0];
  m[1][1] = x.c[1];
  m[2][2] = x.c[2];
  m[1][2] = x.c[3];
  m[2][1] = x.c[4];
  m[2][0] = x.c[5];
  m[0][2] = x.c[6];
  m[0][1] = x.c[7];
  m[1][0] = x.c[8];
  return m;
}

// ---- Hermitian cubes ----

HermCube fts_eps(const JordanAlg& alg) {
  return {alg, Rat(1), Rat(1), jordan_zero(alg), jordan_zero(alg)};
}

HermCube fts_add(const HermCube& x, const HermCube& y) {
  require_same(x.alg, y.alg);
  return {x.alg, x.a + y.a, x.d + y.d, jordan_add(x.b, y.b),
          jordan_add(x.c, y.c)};
}

HermCube fts_scale(const HermCube& x, const Rat& s) {
  return {x.alg, x.a * s, x.d * s, jordan_scale(x.b, s),
          jordan_scale(x.c, s)};
}

bool fts_is_zero(const HermCube& x) {
  if (x.a != 0 || x.d != 0) return false;
  for (const Rat& v : x.b.c)
    if (v != 0) return false;
  for (const Rat& v : x.c.c)
    if (v != 0) return false;
  return true;
}

Rat fts_disc(const HermCube& x) {
  Rat m = x.a * x.d - jordan_trace2(x.b, x.c);
  return m * m - 4 * jordan_trace2(jordan_sharp(x.b), jordan_sharp(x.c)) +
         4 * x.a * jordan_norm(x.c) + 4 * x.d * jordan_norm(x.b);
}

Rat fts_pair(const HermCube& x, const HermCube& y) {
  require_same(x.alg, y.alg);
  return x.a * y.d - jordan_trace2(x.b, y.c) + jordan_trace2(y.b, x.c) -
         y.a * x.d;
}

HermCube fts_flat(const HermCube& x) {
  Rat m = x.a * x.d - jordan_trace2(x.b, x.c);
  JordanElement bs = jordan_sharp(x.b), cs = jordan_sharp(x.c);
  Rat af = x.a * x.a * x.d - x.a * jordan_trace2(x.b, x.c) +
           2 * jordan_norm(x.b);
  Rat df = -x.a * x.d * x.d + x.d * jordan_trace2(x.b, x.c) -
           2 * jordan_norm(x.c);
  JordanElement bf = jordan_cross(x.c, bs);
  JordanElement cf = jordan_cross(x.b, cs);
  for (size_t i = 0; i < bf.c.size(); i++) {
    bf.c[i] = 2 * bf.c[i] - 2 * x.a * cs.c[i] + m * x.b.c[i];
    cf.c[i] = -2 * cf.c[i] + 2 * x.d * bs.c[i] - m * x.c.c[i];
  }
  return {x.alg, af, df, bf, cf};
}

// Quadratic operator U_x(y) = Tr(x,y) x - x# x y.
static JordanElement jordan_u(const JordanElement& x, const JordanElement& y) {
  Rat t = jordan_trace2(x, y);
  JordanElement r = jordan_cross(jordan_sharp(x), y);
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] = t * x.c[i] - r.c[i];
  return r;
}

HermCube fts_segre(const JordanElement& alpha, const JordanElement& beta) {
  require_same(alpha.alg, beta.alg);
  // (Norm(a)^2, U_{a#} b, U_a (b#), Norm(b)) parametrizes the rank-one
  // cone: (U_{a#} b)# = Norm(a)^2 U_a(b#), (U_a b#)# = Norm(b) U_{a#} b,
  // and Tr(U_{a#} b, U_a b#) = 3 Norm(a)^2 Norm(b) follow from the
  // composition rules of U, forcing disc and flat to vanish identically.
  Rat na = jordan_norm(alpha);
  return {alpha.alg, na * na, jordan_norm(beta),
          jordan_u(jordan_sharp(alpha), beta),
          jordan_u(alpha, jordan_sharp(beta))};
}

int fts_rank(const HermCube& x) {
  if (fts_is_zero(x)) return 0;
  if (fts_disc(x) != 0) return 4;
  if (!fts_is_zero(fts_flat(x))) return 3;
  // rank one: the Segre-closure quadrics b# = a c, c# = d b,
  // 3 a d = Tr(b, c) all vanish
  JordanElement bs = jordan_sharp(x.b), cs = jordan_sharp(x.c);
  bool rank1 = 3 * x.a * x.d == jordan_trace2(x.b, x.c);
  for (size_t i = 0; i < bs.c.size() && rank1; i++)
    if (bs.c[i] != x.a * x.c.c[i] || cs.c[i] != x.d * x.b.c[i])
      rank1 = false;
  return rank1 ? 1 : 2;
}

// ---- coordinate isomorphisms ----

namespace {

// corner layout of a {2,2,2} cube for J = K x K x K:
//   (0,0,0) = a; (1,0,0), (0,1,0), (0,0,1) = b1, b2, b3;
//   (0,1,1), (1,0,1), (1,1,0) = c1, c2, c3; (1,1,1) = d
RationalTensor split3_cube(const HermCube& x) {
  RationalTensor t({2, 2, 2});
  t.at({0, 0, 0}) = x.a;
  t.at({1, 1, 1}) = x.d;
  t.at({1, 0, 0}) = x.b.c[0];
  t.at({0, 1, 0}) = x.b.c[1];
  t.at({0, 0, 1}) = x.b.c[2];
  t.at({0, 1, 1}) = x.c.c[0];
  t.at({1, 0, 1}) = x.c.c[1];
  t.at({1, 1, 0}) = x.c.c[2];
  return t;
}

// lift along the norm-preserving inclusions K -> K^3 (x -> (x,x,x)) and
// K x K -> K^3 ((x1,x2) -> (x1,x2,x2))
HermCube lift_to_split3(const HermCube& x) {
  HermCube r = fts_eps(JordanAlg::split3());
  r.a = x.a;
  r.d = x.d;
  r.b = jordan_zero(r.alg);
  r.c = jordan_zero(r.alg);
  if (x.alg.kind == JordanAlg::Field) {
    for (int i = 0; i < 3; i++) {
      r.b.c[i] = x.b.c[0];
      r.c.c[i] = x.c.c[0];
    }
  } else {
    r.b.c = {x.b.c[0], x.b.c[1], x.b.c[1]};
    r.c.c = {x.c.c[0], x.c.c[1], x.c.c[1]};
  }
  return r;
}

void set_alternating(RationalTensor& t, int p, int q, int r, const Rat& v) {
  t.at({p, q, r}) = v;
  t.at({q, r, p}) = v;
  t.at({r, p, q}) = v;
  t.at({p, r, q}) = -v;
  t.at({q, p, r}) = -v;
  t.at({r, q, p}) = -v;
}

}  // namespace

RationalTensor fts_specialize(const HermCube& x) {
  switch (x.alg.kind) {
    case JordanAlg::Field: {
      RationalTensor t = split3_cube(lift_to_split3(x));
      t.symmetry = SymmetryTag::full();
      return t;
    }
    case JordanAlg::Binarions: {
      RationalTensor t = split3_cube(lift_to_split3(x));
      t.symmetry = SymmetryTag::last(2);
      return t;
    }
    case JordanAlg::Split3:
      return split3_cube(x);
    case JordanAlg::FieldMat2: {
      // pair of 4x4 skew matrices; b = (b0, (bij)), c = (c0, (cij))
      RationalTensor t({2, 4, 4});
      auto put = [&](int s, const Rat& top, const Rat& m11, const Rat& m12,
                     const Rat& m21, const Rat& m22, const Rat& bot) {
        // [[0, top, -m12, m11], [., 0, -m22, m21], [., ., 0, bot], ...]
        t.at({s, 0, 1}) = top;
        t.at({s, 1, 0}) = -top;
        t.at({s, 0, 2}) = -m12;
        t.at({s, 2, 0}) = m12;
        t.at({s, 0, 3}) = m11;
        t.at({s, 3, 0}) = -m11;
        t.at({s, 1, 2}) = -m22;
        t.at({s, 2, 1}) = m22;
        t.at({s, 1, 3}) = m21;
        t.at({s, 3, 1}) = -m21;
        t.at({s, 2, 3}) = bot;
        t.at({s, 3, 2}) = -bot;
      };
      // The second slice carries the adjugate of the c-matrix; with that
      // twist the rank-one quadrics reduce to the Pluecker relation of a
      // decomposable v (x) w1 ^ w2.
      put(0, x.a, x.b.c[1], x.b.c[2], x.b.c[3], x.b.c[4], x.c.c[0]);
      put(1, x.b.c[0], x.c.c[4], -x.c.c[2], -x.c.c[3], x.c.c[1], x.d);
      return t;
    }
    default: {
      if (x.alg.comp != CompKind::Binarion) throw AlgebraMismatch();
      // alternating three-form on K^6 = <e1,e2,e3,f1,f2,f3>:
      //   a e123 + sum bij ei ^ f(j+1) ^ f(j+2)
      //   + sum cij fi ^ e(j+1) ^ e(j+2) + d f123
      RationalTensor t({6, 6, 6});
      Mat b = jordan_to_mat3(x.b), c = jordan_to_mat3(x.c);
      set_alternating(t, 0, 1, 2, x.a);
      set_alternating(t, 3, 4, 5, x.d);
      // The e_i ^ f_(j+1) ^ f_(j+2) coefficients carry c (transposed) and
      // the f_i ^ e_(j+1) ^ e_(j+2) coefficients carry b (transposed); this
      // arrangement makes the wedge of the rows of a 3x6 matrix [m | n]
      // correspond to the rank-one cube with b = adj(m) n, c = adj(n) m.
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
          set_alternating(t, i, 3 + (j + 1) % 3, 3 + (j + 2) % 3, c[j][i]);
          set_alternating(t, 3 + i, (j + 1) % 3, (j + 2) % 3, b[j][i]);
        }
      return t;
    }
  }
}

HermCube fts_despecialize(const RationalTensor& t, const JordanAlg& alg) {
  HermCube r = fts_eps(alg);
  switch (alg.kind) {
    case JordanAlg::Field:
    case JordanAlg::Binarions:
    case JordanAlg::Split3: {
      if (t.shape != std::vector<int>{2, 2, 2})
        throw ShapeMismatch("expected a 2x2x2 tensor");
      r.a = t.at({0, 0, 0});
      r.d = t.at({1, 1, 1});
      Vec b = {t.at({1, 0, 0}), t.at({0, 1, 0}), t.at({0, 0, 1})};
      Vec c = {t.at({0, 1, 1}), t.at({1, 0, 1}), t.at({1, 1, 0})};
      if (alg.kind == JordanAlg::Split3) {
        r.b.c = b;
        r.c.c = c;
      } else if (alg.kind == JordanAlg::Binarions) {
        r.b.c = {b[0], (b[1] + b[2]) / 2};
        r.c.c = {c[0], (c[1] + c[2]) / 2};
      } else {
        r.b.c = {(b[0] + b[1] + b[2]) / 3};
        r.c.c = {(c[0] + c[1] + c[2]) / 3};
      }
      return r;
    }
    case JordanAlg::FieldMat2: {
      if (t.shape != std::vector<int>{2, 4, 4})
        throw ShapeMismatch("expected a 2x4x4 tensor");
      r.a = t.at({0, 0, 1});
      r.b.c = {t.at({1, 0, 1}), t.at({0, 0, 3}), -t.at({0, 0, 2}),
               t.at({0, 1, 3}), -t.at({0, 1, 2})};
      // read the adjugate arrangement back: C = adj of the stored matrix
      r.c.c = {t.at({0, 2, 3}), -t.at({1, 1, 2}), t.at({1, 0, 2}),
               -t.at({1, 1, 3}), t.at({1, 0, 3})};
      r.d = t.at({1, 2, 3});
      return r;
    }
    default: {
      if (alg.comp != CompKind::Binarion) throw AlgebraMismatch();
      if (t.shape != std::vector<int>{6, 6, 6})
        throw ShapeMismatch("expected a 6x6x6 tensor");
      r.a = t.at({0, 1, 2});
      r.d = t.at({3, 4, 5});
      Mat b(3, Vec(3)), c(3, Vec(3));
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
          c[j][i] = t.at({i, 3 + (j + 1) % 3, 3 + (j + 2) % 3});
          b[j][i] = t.at({3 + i, (j + 1) % 3, (j + 2) % 3});
        }
      r.b = jordan_from_mat3(b);
      r.c = jordan_from_mat3(c);
      return r;
    }
  }
}

// ---- curve-extraction forms ----

std::vector<Rat> degree3_norm_cubic(const JordanElement& x1,
                                    const JordanElement& x2,
                                    const JordanElement& x3) {
  require_same(x1.alg, x2.alg);
  require_same(x1.alg, x3.alg);
  // Norm(u + t v) = Norm(u) + t Tr(u#, v) + ..., so the v_i^2 v_j
  // coefficients are Tr(xi#, xj); the mixed coefficient is the full
  // trilinear value by inclusion-exclusion.
  auto mixed = [&]() -> Rat {
    Rat s = jordan_norm(jordan_add(jordan_add(x1, x2), x3));
    s -= jordan_norm(jordan_add(x1, x2));
    s -= jordan_norm(jordan_add(x1, x3));
    s -= jordan_norm(jordan_add(x2, x3));
    s += jordan_norm(x1) + jordan_norm(x2) + jordan_norm(x3);
    return s;
  };
  JordanElement s1 = jordan_sharp(x1), s2 = jordan_sharp(x2),
                s3 = jordan_sharp(x3);
  // order: x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3
  return {jordan_norm(x1),      jordan_trace2(s1, x2),
          jordan_trace2(s1, x3), jordan_trace2(s2, x1),
          mixed(),              jordan_trace2(s3, x1),
          jordan_norm(x2),      jordan_trace2(s2, x3),
          jordan_trace2(s3, x2), jordan_norm(x3)};
}

std::vector<Rat> degree2_disc_quartic(const HermCube& a1, const HermCube& a2) {
  require_same(a1.alg, a2.alg);
  Rat c0 = fts_disc(a1), c4 = fts_disc(a2);
  auto at = [&](const Rat& t) {
    return fts_disc(fts_add(a1, fts_scale(a2, t)));
  };
  Rat f1 = at(Rat(1)), fm1 = at(Rat(-1)), f2 = at(Rat(2));
  Rat c2 = (f1 + fm1) / 2 - c0 - c4;
  Rat odd = (f1 - fm1) / 2;                    // c1 + c3
  Rat c3 = (f2 - c0 - 4 * c2 - 16 * c4 - 2 * odd) / 6;
  Rat c1 = odd - c3;
  return {c0, c1, c2, c3, c4};
}

}  // namespace g1
