#ifndef G1_TENSOR_HPP
#define G1_TENSOR_HPP

// Multi-index arrays of exact rationals: slicing, the per-factor group
// action, symmetry predicates, and the explicit symmetrization and
// skew-symmetrization embeddings between the tensor spaces.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "g1/linalg.hpp"
#include "g1/rational.hpp"

namespace g1 {

struct IndexOutOfRange : std::runtime_error {
  IndexOutOfRange() : std::runtime_error("tensor index out of range") {}
};
struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Symmetry tags: "none", "full-sym", or "sym-last-<k>" (the last k axes are
// symmetric among themselves).
struct SymmetryTag {
  enum Kind { None, SymLastK, FullSym } kind = None;
  int k = 0;  // for SymLastK

  static SymmetryTag none() { return {}; }
  static SymmetryTag full() { return {FullSym, 0}; }
  static SymmetryTag last(int k) { return {SymLastK, k}; }

  std::string str() const {
    switch (kind) {
      case None: return "none";
      case FullSym: return "full-sym";
      default: return "sym-last-" + std::to_string(k);
    }
  }
  static SymmetryTag parse(const std::string& s);

  bool operator==(const SymmetryTag& o) const {
    return kind == o.kind && (kind != SymLastK || k == o.k);
  }
};

struct RationalTensor {
  std::vector<int> shape;
  std::vector<Rat> entries;  // row-major
  SymmetryTag symmetry;

  RationalTensor() = default;
  explicit RationalTensor(std::vector<int> sh, SymmetryTag tag = {})
      : shape(std::move(sh)), symmetry(tag) {
    entries.assign(size(), Rat(0));
  }

  size_t size() const {
    size_t n = 1;
    for (int d : shape) n *= d;
    return n;
  }
  int ndim() const { return (int)shape.size(); }

  // Row-major offset of a 0-based multi-index.
  size_t offset(const std::vector<int>& idx) const {
    if ((int)idx.size() != ndim()) throw IndexOutOfRange();
    size_t off = 0;
    for (int a = 0; a < ndim(); a++) {
      if (idx[a] < 0 || idx[a] >= shape[a]) throw IndexOutOfRange();
      off = off * shape[a] + idx[a];
    }
    return off;
  }
  Rat& at(const std::vector<int>& idx) { return entries[offset(idx)]; }
  const Rat& at(const std::vector<int>& idx) const { return entries[offset(idx)]; }

  bool operator==(const RationalTensor& o) const {
    return shape == o.shape && entries == o.entries;
  }

  RationalTensor operator+(const RationalTensor& o) const;
  RationalTensor operator-(const RationalTensor& o) const;
  RationalTensor scale(const Rat& c) const;
  bool is_zero() const;

  // Entries satisfy the equalities declared by the symmetry tag.
  bool tag_consistent() const;
};

// Iterate all multi-indices of `shape` in row-major order; returns false
// after the last one.
bool next_index(const std::vector<int>& shape, std::vector<int>& idx);

// The sub-tensor with `axis` (0-based) fixed at `index` (0-based).
RationalTensor slice(const RationalTensor& t, int axis, int index);

// Per-factor action: new slice i along `axis` = sum_j g[i][j] * (old slice j).
// For g = [[r,s],[t,u]] on a 2-slice axis this is (A,B) -> (rA+sB, tA+uB).
// Acting on an axis tied by the symmetry tag clears the tag (the equalities
// may no longer hold); see act_tied.
RationalTensor act(const RationalTensor& t, int axis, const Mat& g);

// Applies the same g to every axis tied by the symmetry tag (all axes for
// full-sym or no tag; the last k for sym-last-k), preserving the tag.
RationalTensor act_tied(const RationalTensor& t, const Mat& g);

// True iff t is fixed entrywise by permuting its axes: entry at idx equals
// the entry at (idx[perm[0]], ..., idx[perm[n-1]]) for all idx.  The permuted
// axes must have equal lengths.
bool symmetry_check(const RationalTensor& t, const std::vector<int>& perm);

// --- Symmetrization embeddings (divisions happen over the rationals) ---

// (a0..a4) = a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4 to the
// quadruply-symmetric hypercube: entry with m indices equal to 2 is a_m/C(4,m).
RationalTensor sym_embed_quartic(const std::vector<Rat>& coeffs);

// Pair of binary cubics (a..d, e..h), each c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3,
// to 2 (x) Sym^3(2): first-axis slice i is the triply-symmetric cube of form i,
// entry with m indices equal to 2 being c_m/C(3,m).
RationalTensor sym_embed_cubic_pair(const std::vector<Rat>& coeffs);

// Ternary cubic, 10 coefficients in the monomial order
//   x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3,
// to the symmetric 3x3x3 tensor (entry = coefficient / multinomial weight).
RationalTensor sym_embed_ternary_cubic(const std::vector<Rat>& coeffs);

// Symmetrized coefficient readouts (inverses of the embeddings above; on a
// non-symmetric tensor they read the symmetrization).
std::vector<Rat> readout_quartic(const RationalTensor& t);
std::vector<Rat> readout_cubic_pair(const RationalTensor& t);
std::vector<Rat> readout_ternary_cubic(const RationalTensor& t);

// --- Skew-symmetrization embeddings ---

// Hypercube (2^4) to a 2x2 matrix of alternating 2-forms on K^4 = W3+W4:
// output shape [2,2,4,4]; block (i,j) has (p, q+2) entry h_{i j p q} and is
// skew-symmetric.
RationalTensor skew_embed_22(const RationalTensor& h);

// Hypercube (2^4) to a pair of alternating 3-forms on K^6 = W2+W3+W4:
// output shape [2,6,6,6], alternating in the last three axes; the component
// in blocks (m1,m2,m3) is the signed sum over the S3 of block assignments.
RationalTensor skew_embed_222(const RationalTensor& h);

// Rubik's cube (3^3) to a triple of alternating 2-forms on K^6 = W2+W3:
// output shape [3,6,6]; phi-bar(r,(s,t),(u,v)) = phi(r,s,v) - phi(r,u,t).
RationalTensor skew_embed_33(const RationalTensor& b);

// Dispatch by kind name: "2,2", "2,2,2", "3,3".
RationalTensor skew_embed(const RationalTensor& t, const std::string& kind);

}  // namespace g1

#endif  // G1_TENSOR_HPP
