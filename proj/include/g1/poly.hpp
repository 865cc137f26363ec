#ifndef G1_POLY_HPP
#define G1_POLY_HPP

// Sparse multivariate polynomials with exact rational coefficients, keyed by
// exponent vectors under graded-lex order.  Carrier for all covariant forms
// and derived invariants.

#include <map>
#include <vector>

#include "g1/rational.hpp"

namespace g1 {

using Expo = std::vector<int>;

struct GradedLexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;  // lexicographic tie-break
  }
};

class SparsePoly {
 public:
  using TermMap = std::map<Expo, Rat, GradedLexLess>;

  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Rat& c) {
    SparsePoly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
  }
  static SparsePoly variable(int nvars, int idx, const Rat& c = Rat(1)) {
    SparsePoly p(nvars);
    Expo e(nvars, 0);
    e[idx] = 1;
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int x : e) t += x;
      if (t > d) d = t;
    }
    return d;
  }

  void add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  SparsePoly operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  SparsePoly operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  SparsePoly operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  SparsePoly operator*(const SparsePoly& o) const {
    SparsePoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        Expo e(nvars_);
        for (int i = 0; i < nvars_; i++) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    }
    return r;
  }
  SparsePoly operator*(const Rat& c) const {
    SparsePoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rat eval(const std::vector<Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; i++)
        if (e[i] > 0) t *= rat_pow(point[i], e[i]);
      acc += t;
    }
    return acc;
  }

  SparsePoly derivative(int var) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Expo d = e;
      d[var] -= 1;
      r.add_term(d, c * e[var]);
    }
    return r;
  }

  // Substitutes each variable by the given polynomial (in a possibly
  // different variable set); all images must share a variable count.
  SparsePoly substitute(const std::vector<SparsePoly>& images) const {
    int m = images.empty() ? 0 : images[0].nvars();
    SparsePoly r(m);
    for (const auto& [e, c] : terms_) {
      SparsePoly t = SparsePoly::constant(m, c);
      for (int i = 0; i < nvars_; i++)
        for (int k = 0; k < e[i]; k++) t = t * images[i];
      r += t;
    }
    return r;
  }

 private:
  int nvars_;
  TermMap terms_;
};

inline SparsePoly operator*(const Rat& c, const SparsePoly& p) { return p * c; }

}  // namespace g1

#endif  // G1_POLY_HPP
