#ifndef G1_LINALG_HPP
#define G1_LINALG_HPP

// Exact rational linear algebra: right-kernel bases (fraction-free, with an
// optional multi-modular fast path), rational root extraction and Lagrange
// interpolation with validation.

#include <optional>
#include <stdexcept>
#include <vector>

#include "g1/rational.hpp"
#include "g1/unipoly.hpp"

namespace g1 {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major, rectangular

struct InconsistentSamples : std::runtime_error {
  InconsistentSamples() : std::runtime_error("samples admit no interpolant") {}
};

// Basis of { v : M v = 0 }.  Deterministic: pivots are chosen as the first
// nonzero entry scanning columns left to right, rows top to bottom; the basis
// is in standard form (one vector per free column, with a 1 in that column).
// Large systems are solved modulo several word-size primes and reconstructed
// by Chinese remaindering; the result is verified exactly either way.
std::vector<Vec> exact_kernel(const Mat& m);

// Same, forcing one of the two strategies (exposed for tests).
std::vector<Vec> exact_kernel_fraction_free(const Mat& m);
std::vector<Vec> exact_kernel_modular(const Mat& m);

// All distinct rational roots of a nonzero univariate polynomial.
std::vector<Rat> rational_roots(const UniPoly& p);

// Unique interpolant of degree <= bound through the samples, if consistent.
// Throws InconsistentSamples when the extra samples fail validation.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& samples,
                             int degree_bound);

inline Vec mat_apply(const Mat& m, const Vec& v) {
  Vec r(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); i++)
    for (size_t j = 0; j < v.size(); j++)
      if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
  return r;
}

}  // namespace g1

#endif  // G1_LINALG_HPP
