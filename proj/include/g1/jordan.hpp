#ifndef G1_JORDAN_HPP
#define G1_JORDAN_HPP

// Composition algebras (split, of dimensions 1, 2, 4, 8), cubic Jordan
// algebras built from an admissible norm form (Norm, e, sharp), and the
// Hermitian-cube quadruples (a, b, c, d) over such an algebra carrying a
// quartic discriminant, a cubic adjoint, a rank stratification, and explicit
// coordinate isomorphisms onto the small tensor spaces.

#include <string>
#include <vector>

#include "g1/linalg.hpp"
#include "g1/tensor.hpp"

namespace g1 {

struct AlgebraMismatch : std::runtime_error {
  AlgebraMismatch() : std::runtime_error("operands live in different algebras") {}
};

// ---- Composition algebras (all split over the rationals) ----
//   Unarion: dim 1, scalar.
//   Binarion: dim 2, pair (x, y), norm x y, conjugate (y, x).
//   Quaternion: dim 4, 2x2 matrix (m11, m12, m21, m22), norm det,
//     conjugate the adjugate.
//   Octonion: dim 8, Zorn vector matrix ((s, v), (w, t)) stored as
//     (s, v1, v2, v3, w1, w2, w3, t), norm s t - v.w, conjugate
//     ((t, -v), (-w, s)).
enum class CompKind { Unarion, Binarion, Quaternion, Octonion };

int comp_dim(CompKind k);

struct CompElement {
  CompKind kind;
  std::vector<Rat> c;  // comp_dim(kind) coordinates
};

CompElement comp_zero(CompKind k);
CompElement comp_one(CompKind k);
CompElement comp_add(const CompElement& a, const CompElement& b);
CompElement comp_scale(const CompElement& a, const Rat& s);
CompElement comp_mul(const CompElement& a, const CompElement& b);
CompElement comp_conj(const CompElement& a);
Rat comp_norm(const CompElement& a);
Rat comp_trace(const CompElement& a);

// ---- Cubic Jordan algebras ----
//   Field:     K,            Norm x^3
//   Binarions: K x K,        Norm x1 x2^2
//   Split3:    K x K x K,    Norm x1 x2 x3
//   FieldMat2: K x Mat2(K),  Norm x det(M), coordinates (x, m11, m12, m21, m22)
//   Herm3:     3x3 Hermitian matrices over a composition algebra,
//              coordinates (c1, c2, c3, a1, a2, a3) for the matrix
//              [[c1, a3, a2*], [a3*, c2, a1], [a2, a1*, c3]]
struct JordanAlg {
  enum Kind { Field, Binarions, Split3, FieldMat2, Herm3 } kind = Field;
  CompKind comp = CompKind::Unarion;  // Herm3 only

  static JordanAlg field() { return {Field, CompKind::Unarion}; }
  static JordanAlg binarions() { return {Binarions, CompKind::Unarion}; }
  static JordanAlg split3() { return {Split3, CompKind::Unarion}; }
  static JordanAlg field_mat2() { return {FieldMat2, CompKind::Unarion}; }
  static JordanAlg herm3(CompKind k) { return {Herm3, k}; }

  int dim() const;
  bool operator==(const JordanAlg& o) const {
    return kind == o.kind && (kind != Herm3 || comp == o.comp);
  }
  std::string str() const;
};

struct JordanElement {
  JordanAlg alg;
  std::vector<Rat> c;  // alg.dim() coordinates
};

JordanElement jordan_zero(const JordanAlg& alg);
JordanElement jordan_e(const JordanAlg& alg);
JordanElement jordan_add(const JordanElement& x, const JordanElement& y);
JordanElement jordan_scale(const JordanElement& x, const Rat& s);

Rat jordan_norm(const JordanElement& x);
JordanElement jordan_sharp(const JordanElement& x);

// Linear trace Norm(e,e,x) and quadratic spur Norm(x,x,e); the bilinear
// trace form Tr(x,y) = Tr(x)Tr(y) - Spur(x,y).
Rat jordan_trace(const JordanElement& x);
Rat jordan_spur(const JordanElement& x);
Rat jordan_trace2(const JordanElement& x, const JordanElement& y);

// Bilinearization x x y = (x+y)# - x# - y# and the Jordan product
// x . y = (x x y + Tr(x)y + Tr(y)x - Spur(x,y)e) / 2.
JordanElement jordan_cross(const JordanElement& x, const JordanElement& y);
JordanElement jordan_bullet(const JordanElement& x, const JordanElement& y);

struct JordanData {
  Rat norm, trace, spur;
  JordanElement sharp;
};
JordanData jordan_norm_sharp(const JordanElement& x);

// 3x3 rational matrix <-> Herm3(Binarion), under which the norm is det.
JordanElement jordan_from_mat3(const Mat& m);
Mat jordan_to_mat3(const JordanElement& x);

// ---- Hermitian cubes (a, b, c, d) with a, d scalar and b, c in J ----

struct HermCube {
  JordanAlg alg;
  Rat a, d;
  JordanElement b, c;
};

HermCube fts_eps(const JordanAlg& alg);  // (1, 0, 0, 1), discriminant 1
HermCube fts_add(const HermCube& x, const HermCube& y);
HermCube fts_scale(const HermCube& x, const Rat& s);
bool fts_is_zero(const HermCube& x);

// disc(A) = (ad - Tr(b,c))^2 - 4 Tr(b#, c#) + 4 a Norm(c) + 4 d Norm(b).
Rat fts_disc(const HermCube& x);

// Alternating bilinear pairing <A, B> = a d' - Tr(b, c') + Tr(b', c) - a' d.
Rat fts_pair(const HermCube& x, const HermCube& y);

// Cubic adjoint; satisfies <A-flat, B> = quadrilinearized disc (A,A,A,B)
// and (A-flat)-flat = -disc(A)^2 A.
HermCube fts_flat(const HermCube& x);

// Rank-one element (Norm(alpha)^2, U_{alpha#}(beta), U_alpha(beta#),
// Norm(beta)), where U_x(y) = Tr(x,y)x - x# x y; its disc and flat vanish
// identically over every shipped algebra.
HermCube fts_segre(const JordanElement& alpha, const JordanElement& beta);

// 0; 1 (Segre closure); 2 (flat vanishes); 3 (disc vanishes); 4 otherwise.
int fts_rank(const HermCube& x);

// Coordinate isomorphism onto the concrete tensor space of the algebra:
//   Field     -> fully symmetric {2,2,2} cube
//   Binarions -> {2,2,2} cube symmetric in the last two axes
//   Split3    -> {2,2,2} cube
//   FieldMat2 -> {2,4,4}: a pair of 4x4 skew-symmetric matrices
//   Herm3(Binarion) -> {6,6,6} alternating three-form
// Other algebras have no shipped target and raise AlgebraMismatch.
RationalTensor fts_specialize(const HermCube& x);

// Inverse of fts_specialize (shape and algebra deduced, Field/Binarions
// read the symmetrized part).
HermCube fts_despecialize(const RationalTensor& t, const JordanAlg& alg);

// Ternary cubic v -> Norm(v1 x1 + v2 x2 + v3 x3), coefficients in the
// classical.hpp monomial order.
std::vector<Rat> degree3_norm_cubic(const JordanElement& x1,
                                    const JordanElement& x2,
                                    const JordanElement& x3);

// Binary quartic v -> disc(v1 A1 + v2 A2), coefficients (v1^4 .. v2^4).
std::vector<Rat> degree2_disc_quartic(const HermCube& a1, const HermCube& a2);

}  // namespace g1

#endif  // G1_JORDAN_HPP
