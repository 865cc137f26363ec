#ifndef G1_DERIVER_HPP
#define G1_DERIVER_HPP

// Derivation of invariant polynomial bases for products of special linear
// groups acting on (tensor products of) symmetric powers, by solving the
// infinitesimal-invariance linear system, plus a disk cache.

#include <string>

#include "g1/linalg.hpp"
#include "g1/poly.hpp"
#include "g1/tensor.hpp"

namespace g1 {

struct TooLarge : std::runtime_error {
  TooLarge() : std::runtime_error("monomial count exceeds the ceiling") {}
};

// One tensor factor: an SL(dim) acting on its standard representation
// ("plain", sym_power = 1) or on Sym^k of it (sym_power = k).
struct RepFactor {
  int dim = 2;
  int sym_power = 1;
};

struct RepDescriptor {
  std::vector<RepFactor> factors;

  // Number of coordinates of the representation (product over factors of
  // C(dim + k - 1, k)).
  int coordinate_count() const;

  // Stable text form, e.g. "2x2x2x2" or "sym3(3)" or "sym2(2)xsym2(2)";
  // used as the cache key.
  std::string str() const;

  static RepDescriptor plain(const std::vector<int>& dims);
  static RepDescriptor sym(int dim, int k);
};

// Coordinates of the representation are indexed by one label per factor: a
// basis index for plain factors, an exponent vector for symmetric powers.
// Values are raw form coefficients (monomial coefficients, no binomial
// division), matching the classical coefficient conventions.

// Basis of the degree-d invariants of the product of SL(dim) factors, as
// polynomials in the coordinates (graded-lex deterministic echelon basis).
// Throws TooLarge when C(degree + N - 1, degree) exceeds `ceiling`.
std::vector<SparsePoly> derive_invariants(const RepDescriptor& rep, int degree,
                                          long ceiling = 100000);

// Same, consulting/filling a disk cache under cache_dir (empty = no cache).
std::vector<SparsePoly> derive_invariants_cached(const RepDescriptor& rep,
                                                 int degree,
                                                 const std::string& cache_dir);

// Coordinates of a tensor in the representation's coordinate order, for
// evaluating derived polynomials.  Plain factors use tensor axes directly;
// a sym-k factor of dimension n consumes k consecutive axes of length n and
// reads off raw form coefficients (entry times multinomial weight).
std::vector<Rat> rep_coordinates(const RepDescriptor& rep,
                                 const RationalTensor& t);

// Serialization used by the cache (exposed for tests): "G1INV v1" header.
std::string invariants_to_text(const RepDescriptor& rep, int degree,
                               const std::vector<SparsePoly>& basis);
std::vector<SparsePoly> invariants_from_text(const RepDescriptor& rep,
                                             int degree, const std::string& text);

}  // namespace g1

#endif  // G1_DERIVER_HPP
