#include "g1/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace g1 {

namespace {

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss-style) elimination over the integers.
// ---------------------------------------------------------------------------

struct Echelon {
  std::vector<std::vector<Int>> rows;  // echelon rows, integer entries
  std::vector<int> pivot_col;          // pivot column of rows[i]
};

Echelon integer_echelon(const Mat& m) {
  size_t nr = m.size(), nc = m[0].size();
  // Clear denominators row by row.
  std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
  for (size_t i = 0; i < nr; i++) {
    Int lcm(1);
    for (size_t j = 0; j < nc; j++) lcm = lcm / gcd(lcm, m[i][j].get_den()) * m[i][j].get_den();
    for (size_t j = 0; j < nc; j++) a[i][j] = m[i][j].get_num() * (lcm / m[i][j].get_den());
  }

  Echelon e;
  size_t row = 0;
  Int prev_pivot(1);
  for (size_t col = 0; col < nc && row < nr; col++) {
    // First nonzero entry in column order, scanning rows top down.
    size_t piv = row;
    while (piv < nr && a[piv][col] == 0) piv++;
    if (piv == nr) continue;
    std::swap(a[row], a[piv]);
    for (size_t i = row + 1; i < nr; i++) {
      for (size_t j = col + 1; j < nc; j++) {
        Int t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        a[i][j] = t / prev_pivot;  // exact by Bareiss' identity
      }
      a[i][col] = 0;
    }
    prev_pivot = a[row][col];
    e.rows.push_back(a[row]);
    e.pivot_col.push_back((int)col);
    row++;
  }
  return e;
}

std::vector<Vec> kernel_from_echelon(const Echelon& e, size_t nc) {
  std::vector<bool> is_pivot(nc, false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < nc; f++) {
    if (is_pivot[f]) continue;
    Vec v(nc, Rat(0));
    v[f] = 1;
    // Back-substitute pivot rows bottom up.
    for (int i = (int)e.rows.size() - 1; i >= 0; i--) {
      int pc = e.pivot_col[i];
      Rat acc(0);
      for (size_t j = pc + 1; j < nc; j++)
        if (v[j] != 0 && e.rows[i][j] != 0) acc += Rat(e.rows[i][j]) * v[j];
      v[pc] = -acc / Rat(e.rows[i][pc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Multi-modular path: RREF kernels modulo word-size primes, CRT-combined and
// lifted by rational reconstruction, then verified exactly.
// ---------------------------------------------------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = (u128)r * b % p;
    b = (u128)b * b % p;
    e >>= 1;
  }
  return r;
}
u64 mod_inv(u64 a, u64 p) { return mod_pow(a % p, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull})
    if (n % d == 0) return n == d;
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) d >>= 1, s++;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = mod_pow(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; i++) {
      x = (u128)x * x % n;
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

struct ModKernel {
  std::vector<int> pivot_col;
  std::vector<int> free_col;
  std::vector<std::vector<u64>> basis;  // one per free col, standard form
  bool bad = false;                     // a denominator vanished mod p
};

ModKernel modular_kernel(const Mat& m, u64 p) {
  size_t nr = m.size(), nc = m[0].size();
  ModKernel out;
  std::vector<std::vector<u64>> a(nr, std::vector<u64>(nc));
  for (size_t i = 0; i < nr; i++)
    for (size_t j = 0; j < nc; j++) {
      const Rat& q = m[i][j];
      u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
      if (den == 0) {
        out.bad = true;
        return out;
      }
      u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
      a[i][j] = (u128)num * mod_inv(den, p) % p;
    }
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; col++) {
    size_t piv = row;
    while (piv < nr && a[piv][col] == 0) piv++;
    if (piv == nr) continue;
    std::swap(a[row], a[piv]);
    u64 inv = mod_inv(a[row][col], p);
    for (size_t j = col; j < nc; j++) a[row][j] = (u128)a[row][j] * inv % p;
    for (size_t i = 0; i < nr; i++) {
      if (i == row || a[i][col] == 0) continue;
      u64 f = a[i][col];
      for (size_t j = col; j < nc; j++) {
        u64 t = (u128)f * a[row][j] % p;
        a[i][j] = (a[i][j] + p - t) % p;
      }
    }
    out.pivot_col.push_back((int)col);
    row++;
  }
  std::vector<bool> is_pivot(nc, false);
  for (int c : out.pivot_col) is_pivot[c] = true;
  for (size_t f = 0; f < nc; f++)
    if (!is_pivot[f]) out.free_col.push_back((int)f);
  for (int f : out.free_col) {
    std::vector<u64> v(nc, 0);
    v[f] = 1;
    for (size_t i = 0; i < out.pivot_col.size(); i++)
      v[out.pivot_col[i]] = (p - a[i][f]) % p;
    out.basis.push_back(std::move(v));
  }
  return out;
}

// Rational reconstruction: residue r mod M -> p/q with |p|, q <= sqrt(M/2).
std::optional<Rat> rat_reconstruct(const Int& r, const Int& M) {
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(M / 2).get_mpz_t());
  Int r0 = M, r1 = r % M, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += M;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bound) return std::nullopt;
  if (gcd(r1, t1) != 1) return std::nullopt;
  Rat q(r1, t1);
  q.canonicalize();
  return q;
}

bool verify_kernel(const Mat& m, const std::vector<Vec>& basis) {
  for (const auto& v : basis)
    for (const auto& row : mat_apply(m, v))
      if (row != 0) return false;
  return true;
}

}  // namespace

std::vector<Vec> exact_kernel_fraction_free(const Mat& m) {
  Echelon e = integer_echelon(m);
  return kernel_from_echelon(e, m[0].size());
}

std::vector<Vec> exact_kernel_modular(const Mat& m) {
  size_t nc = m[0].size();
  u64 p = (1ull << 62);
  std::vector<int> ref_pivots;
  Int M(1);
  // CRT accumulators per basis vector entry.
  std::vector<std::vector<Int>> acc;
  while (true) {
    do { p++; } while (!is_prime_u64(p));
    ModKernel k = modular_kernel(m, p);
    if (k.bad) continue;
    if (ref_pivots.empty()) {
      ref_pivots = k.pivot_col;
      acc.assign(k.basis.size(), std::vector<Int>(nc, 0));
      M = 1;
    } else if (k.pivot_col != ref_pivots) {
      // An unlucky prime dropped rank; a correct prime can only have the
      // lexicographically smallest pivot set of maximal rank, so restart on
      // whichever disagrees with more pivots (higher rank wins).
      if (k.pivot_col.size() > ref_pivots.size() ||
          (k.pivot_col.size() == ref_pivots.size() &&
           k.pivot_col < ref_pivots)) {
        ref_pivots = k.pivot_col;
        acc.assign(k.basis.size(), std::vector<Int>(nc, 0));
        M = 1;
      } else {
        continue;
      }
    }
    // CRT-merge this prime.
    Int newM = M * Int((unsigned long)p);
    for (size_t b = 0; b < acc.size(); b++)
      for (size_t j = 0; j < nc; j++) {
        if (M == 1) {
          acc[b][j] = Int((unsigned long)k.basis[b][j]);
        } else {
          // x = acc mod M, x = r mod p
          Int r((unsigned long)k.basis[b][j]);
          Int Minv_p;  // M^{-1} mod p
          Int pz((unsigned long)p);
          mpz_invert(Minv_p.get_mpz_t(), M.get_mpz_t(), pz.get_mpz_t());
          Int diff = (r - acc[b][j]) % pz;
          if (diff < 0) diff += pz;
          acc[b][j] = acc[b][j] + M * (diff * Minv_p % pz);
        }
      }
    M = newM;
    // Attempt reconstruction.
    std::vector<Vec> basis;
    bool ok = true;
    for (size_t b = 0; b < acc.size() && ok; b++) {
      Vec v(nc);
      for (size_t j = 0; j < nc; j++) {
        auto q = rat_reconstruct(acc[b][j], M);
        if (!q) {
          ok = false;
          break;
        }
        v[j] = *q;
      }
      if (ok) basis.push_back(std::move(v));
    }
    if (ok && verify_kernel(m, basis)) return basis;
  }
}

std::vector<Vec> exact_kernel(const Mat& m) {
  if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix");
  size_t cells = m.size() * m[0].size();
  if (cells >= 40000) return exact_kernel_modular(m);
  return exact_kernel_fraction_free(m);
}

namespace {

// Real roots of a squarefree integer polynomial, isolated recursively: the
// real line splits into monotone intervals at the roots of the derivative,
// and each monotone interval is bisected for its (at most one) sign change.
std::vector<mpf_class> real_roots_mpf(const std::vector<Int>& z, int prec) {
  size_t n = z.size() - 1;
  auto eval = [&](const mpf_class& t) {
    mpf_class acc(0, prec);
    for (size_t i = z.size(); i-- > 0;) acc = acc * t + mpf_class(z[i], prec);
    return acc;
  };
  if (n == 0) return {};
  if (n == 1) {
    mpf_class r(0, prec);
    r = -mpf_class(z[0], prec) / mpf_class(z[1], prec);
    return {r};
  }
  std::vector<Int> dz(n);
  for (size_t i = 1; i <= n; i++) dz[i - 1] = z[i] * (long)i;
  // Squarefree-ness of the derivative is not needed: spurious breakpoints
  // only refine the monotone partition.
  std::vector<mpf_class> breaks = real_roots_mpf(dz, prec);
  // Cauchy bound on root magnitude.
  mpf_class bound(1, prec);
  for (size_t i = 0; i < n; i++) {
    mpf_class c(abs(z[i]), prec);
    c /= mpf_class(abs(z[n]), prec);
    if (c > bound) bound = c;
  }
  bound += 1;
  std::vector<mpf_class> pts;
  pts.push_back(-bound);
  for (auto& b : breaks)
    if (b > -bound && b < bound) pts.push_back(b);
  pts.push_back(bound);
  std::vector<mpf_class> roots;
  mpf_class eps(1, prec);
  eps >>= (prec - 8);
  for (size_t i = 0; i + 1 < pts.size(); i++) {
    mpf_class lo = pts[i], hi = pts[i + 1];
    mpf_class flo = eval(lo), fhi = eval(hi);
    if (flo == 0) {
      roots.push_back(lo);
      continue;
    }
    if (sgn(flo) * sgn(fhi) > 0) continue;
    // Bisect until the interval is tiny relative to precision.
    for (int it = 0; it < prec + 16; it++) {
      mpf_class mid = (lo + hi) / 2;
      mpf_class fm = eval(mid);
      if (fm == 0) {
        lo = hi = mid;
        break;
      }
      if (sgn(fm) == sgn(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
      if (hi - lo < eps) break;
    }
    roots.push_back((lo + hi) / 2);
  }
  return roots;
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& p) {
  if (uni_is_zero(p)) throw std::invalid_argument("zero polynomial");
  // Squarefree part (distinct roots only).
  UniPoly f = p;
  if (uni_deg(f) >= 1) {
    UniPoly df(f.size() - 1);
    for (size_t i = 1; i < f.size(); i++) df[i - 1] = f[i] * (long)i;
    uni_trim(df);
    UniPoly g = uni_gcd(f, df);
    if (uni_deg(g) >= 1) {
      UniPoly q, r;
      uni_divmod(f, g, q, r);
      f = q;
    }
  }
  // Primitive integer form.
  Int lcm(1);
  for (const auto& c : f) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
  std::vector<Int> z(f.size());
  for (size_t i = 0; i < f.size(); i++)
    z[i] = f[i].get_num() * (lcm / f[i].get_den());
  // Strip x^k factor (root 0).
  std::vector<Rat> roots;
  size_t low = 0;
  while (low < z.size() && z[low] == 0) low++;
  if (low > 0) {
    roots.push_back(Rat(0));
    z.erase(z.begin(), z.begin() + low);
  }
  if (z.size() <= 1) return roots;  // constant left: done
  Int a0 = abs(z.front()), an = abs(z.back());
  if (a0 < Int("1099511627776") && an < Int("1099511627776")) {
    // Small case: rational root theorem with divisor enumeration.
    auto divisors = [](const Int& n) {
      std::vector<Int> ds;
      for (Int d(1); d * d <= n; d++)
        if (n % d == 0) {
          ds.push_back(d);
          if (d * d != n) ds.push_back(n / d);
        }
      return ds;
    };
    for (const Int& num : divisors(a0))
      for (const Int& den : divisors(an)) {
        if (gcd(num, den) != 1) continue;
        for (int sign : {1, -1}) {
          Rat cand(sign * num, den);
          cand.canonicalize();
          if (uni_eval(p, cand) == 0) roots.push_back(cand);
        }
      }
  } else {
    // Large case: any rational root x has an*x integral, so isolate the real
    // roots numerically, round an*x to the nearest integer and verify.
    int prec = 0;
    for (const Int& c : z) prec = std::max(prec, (int)mpz_sizeinbase(c.get_mpz_t(), 2));
    prec = 2 * prec + 256;
    for (const mpf_class& r : real_roots_mpf(z, prec)) {
      mpf_class y = r * mpf_class(an, prec);
      mpf_class half(y + (y >= 0 ? 0.5 : -0.5));
      Int yi;
      mpz_set_f(yi.get_mpz_t(), half.get_mpf_t());  // truncates toward zero
      Rat cand(yi, an);
      cand.canonicalize();
      if (uni_eval(p, cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& samples,
                             int degree_bound) {
  if ((int)samples.size() < degree_bound + 1)
    throw std::invalid_argument("not enough samples");
  // Interpolate through the first degree_bound+1, validate on the rest.
  UniPoly result;
  size_t n = degree_bound + 1;
  for (size_t i = 0; i < n; i++) {
    UniPoly li = uni_const(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < n; j++) {
      if (i == j) continue;
      li = uni_mul(li, UniPoly{-samples[j].first, Rat(1)});
      denom *= samples[i].first - samples[j].first;
    }
    result = uni_add(result, uni_scale(li, samples[i].second / denom));
  }
  for (const auto& [t, v] : samples)
    if (uni_eval(result, t) != v) throw InconsistentSamples();
  return result;
}

}  // namespace g1
