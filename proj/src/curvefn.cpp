#include "g1/curvefn.hpp"

namespace g1 {

namespace {

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  UniPoly g = uni_gcd(a, b);
  UniPoly q, r;
  uni_divmod(a, g, q, r);
  return uni_mul(q, b);
}

// Exact division (throws on nonzero remainder).
UniPoly poly_div_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  uni_divmod(a, b, q, r);
  if (!uni_is_zero(r)) throw std::runtime_error("inexact polynomial division");
  return q;
}

}  // namespace

Mat express_in_basis(const std::vector<CurveFunction>& funcs,
                     const std::vector<CurveFunction>& basis) {
  // Common denominator of every a- and b-part.
  UniPoly D = uni_const(Rat(1));
  auto absorb = [&D](const CurveFunction& f) {
    D = poly_lcm(D, f.a.den);
    D = poly_lcm(D, f.b.den);
  };
  for (const auto& f : funcs) absorb(f);
  for (const auto& f : basis) absorb(f);

  // D*f = A(x) + B(x)y; coefficient vector over {1..x^k} + {1..x^k}*y.
  int maxdeg = 0;
  std::vector<std::pair<UniPoly, UniPoly>> cleared;
  auto clear_one = [&](const CurveFunction& f) {
    UniPoly A = uni_mul(f.a.num, poly_div_exact(D, f.a.den));
    UniPoly B = uni_mul(f.b.num, poly_div_exact(D, f.b.den));
    maxdeg = std::max({maxdeg, uni_deg(A), uni_deg(B)});
    cleared.emplace_back(std::move(A), std::move(B));
  };
  for (const auto& f : basis) clear_one(f);
  for (const auto& f : funcs) clear_one(f);

  size_t dim = 2 * (maxdeg + 1);
  auto vec_of = [&](size_t idx) {
    Vec v(dim, Rat(0));
    const auto& [A, B] = cleared[idx];
    for (int i = 0; i <= uni_deg(A); i++) v[i] = A[i];
    for (int i = 0; i <= uni_deg(B); i++) v[maxdeg + 1 + i] = B[i];
    return v;
  };

  size_t nb = basis.size();
  Mat coords;
  for (size_t fi = 0; fi < funcs.size(); fi++) {
    // Solve sum_j c_j * basis_j = func via the kernel of [basis | func].
    Mat aug(dim, Vec(nb + 1, Rat(0)));
    for (size_t j = 0; j < nb; j++) {
      Vec col = vec_of(j);
      for (size_t i = 0; i < dim; i++) aug[i][j] = col[i];
    }
    Vec fcol = vec_of(nb + fi);
    for (size_t i = 0; i < dim; i++) aug[i][nb] = fcol[i];
    auto ker = exact_kernel_fraction_free(aug);
    if (ker.size() != 1 || ker[0][nb] == 0)
      throw std::runtime_error("function not uniquely expressible in basis");
    Vec row(nb);
    for (size_t j = 0; j < nb; j++) row[j] = -ker[0][j] / ker[0][nb];
    coords.push_back(std::move(row));
  }
  return coords;
}

}  // namespace g1
