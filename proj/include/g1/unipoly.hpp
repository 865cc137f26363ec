#ifndef G1_UNIPOLY_HPP
#define G1_UNIPOLY_HPP

// Dense univariate polynomials over the rationals: the workhorse for
// function-field arithmetic on a curve, root extraction and interpolation.

#include <vector>

#include "g1/rational.hpp"

namespace g1 {

// Coefficient vector, index = degree.  Normal form: no trailing zeros
// (zero polynomial = empty vector).
using UniPoly = std::vector<Rat>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }
inline int uni_deg(const UniPoly& p) { return (int)p.size() - 1; }  // -1 for 0

inline UniPoly uni_const(const Rat& c) {
  UniPoly p;
  if (c != 0) p.push_back(c);
  return p;
}
inline UniPoly uni_x() { return UniPoly{Rat(0), Rat(1)}; }

inline UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
  uni_trim(r);
  return r;
}
inline UniPoly uni_neg(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r) c = -c;
  return r;
}
inline UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  return uni_add(a, uni_neg(b));
}
inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}
inline UniPoly uni_scale(const UniPoly& a, const Rat& c) {
  if (c == 0) return {};
  UniPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline Rat uni_eval(const UniPoly& p, const Rat& t) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Division with remainder; divisor must be nonzero.
inline void uni_divmod(const UniPoly& a, const UniPoly& b, UniPoly& q,
                       UniPoly& r) {
  q.clear();
  r = a;
  if (uni_deg(r) >= uni_deg(b)) q.assign(r.size() - b.size() + 1, Rat(0));
  while (!r.empty() && r.size() >= b.size()) {
    Rat c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); i++) r[shift + i] -= c * b[i];
    uni_trim(r);
  }
  uni_trim(q);
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.empty()) {
    UniPoly q, r;
    uni_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;  // monic normal form
  }
  return a;
}

}  // namespace g1

#endif  // G1_UNIPOLY_HPP
