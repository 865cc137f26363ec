#ifndef G1_RATIONAL_HPP
#define G1_RATIONAL_HPP

// Exact rational scalars for the whole library.  mpq_class keeps values
// canonical (denominator > 0, gcd(num, den) = 1, zero stored as 0/1), which
// is exactly the normal form every module relies on.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "n" (arbitrary precision, optional sign).
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  Rat q;
  if (slash == std::string::npos) {
    q = Rat(Int(s), 1);
  } else {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    q = Rat(num, den);
  }
  q.canonicalize();
  return q;
}

// Renders "n" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_pow(const Rat& q, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;  // already canonical: powers of coprime integers stay coprime
}

// Exact k-th root of an integer if it exists.
inline std::optional<Int> int_kth_root(const Int& n, unsigned long k) {
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Int root;
  int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return root;
}

// Exact k-th root of a rational if it exists (unique for odd k; the
// non-negative root is returned for even k).
inline std::optional<Rat> rat_kth_root(const Rat& q, unsigned long k) {
  auto num = int_kth_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = int_kth_root(q.get_den(), k);
  if (!den) return std::nullopt;
  return Rat(*num, *den);
}

}  // namespace g1

#endif  // G1_RATIONAL_HPP
