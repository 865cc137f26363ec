#include "g1/tensor.hpp"

#include <algorithm>

namespace g1 {

namespace {

Rat binom(int n, int k) {
  Int r(1);
  for (int i = 0; i < k; i++) r = r * (n - i) / (i + 1);
  return Rat(r);
}

int count2(const std::vector<int>& idx) {
  return (int)std::count(idx.begin(), idx.end(), 1);  // 0-based index 1 == "2"
}

void require_shape(const RationalTensor& t, const std::vector<int>& sh,
                   const char* what) {
  if (t.shape != sh) throw ShapeMismatch(what);
}

}  // namespace

SymmetryTag SymmetryTag::parse(const std::string& s) {
  if (s == "none" || s.empty()) return none();
  if (s == "full-sym") return full();
  const std::string pre = "sym-last-";
  if (s.rfind(pre, 0) == 0) return last(std::stoi(s.substr(pre.size())));
  throw std::invalid_argument("unknown symmetry tag: " + s);
}

bool next_index(const std::vector<int>& shape, std::vector<int>& idx) {
  for (int a = (int)shape.size() - 1; a >= 0; a--) {
    if (++idx[a] < shape[a]) return true;
    idx[a] = 0;
  }
  return false;
}

RationalTensor RationalTensor::operator+(const RationalTensor& o) const {
  if (shape != o.shape) throw ShapeMismatch("tensor sum shapes differ");
  RationalTensor r(shape, symmetry == o.symmetry ? symmetry : SymmetryTag::none());
  for (size_t i = 0; i < entries.size(); i++) r.entries[i] = entries[i] + o.entries[i];
  return r;
}

RationalTensor RationalTensor::operator-(const RationalTensor& o) const {
  if (shape != o.shape) throw ShapeMismatch("tensor difference shapes differ");
  RationalTensor r(shape, symmetry == o.symmetry ? symmetry : SymmetryTag::none());
  for (size_t i = 0; i < entries.size(); i++) r.entries[i] = entries[i] - o.entries[i];
  return r;
}

RationalTensor RationalTensor::scale(const Rat& c) const {
  RationalTensor r = *this;
  for (auto& e : r.entries) e *= c;
  return r;
}

bool RationalTensor::is_zero() const {
  for (const auto& e : entries)
    if (e != 0) return false;
  return true;
}

bool RationalTensor::tag_consistent() const {
  if (symmetry.kind == SymmetryTag::None) return true;
  int n = ndim();
  int first = symmetry.kind == SymmetryTag::FullSym ? 0 : n - symmetry.k;
  if (first < 0) return false;
  // Adjacent transpositions of the tied axes generate the full symmetry.
  for (int a = first; a + 1 < n; a++) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[a], perm[a + 1]);
    if (!symmetry_check(*this, perm)) return false;
  }
  return true;
}

RationalTensor slice(const RationalTensor& t, int axis, int index) {
  if (axis < 0 || axis >= t.ndim() || index < 0 || index >= t.shape[axis])
    throw IndexOutOfRange();
  std::vector<int> sh = t.shape;
  sh.erase(sh.begin() + axis);
  RationalTensor r(sh);
  if (sh.empty()) {
    // Slicing a vector yields a rank-0 tensor with one entry.
    r.entries = {t.entries[index]};
    return r;
  }
  std::vector<int> idx(sh.size(), 0), full(t.ndim());
  size_t off = 0;
  do {
    for (int a = 0, b = 0; a < t.ndim(); a++)
      full[a] = a == axis ? index : idx[b++];
    r.entries[off++] = t.at(full);
  } while (next_index(sh, idx));
  return r;
}

RationalTensor act(const RationalTensor& t, int axis, const Mat& g) {
  if (axis < 0 || axis >= t.ndim()) throw IndexOutOfRange();
  int d = t.shape[axis];
  if ((int)g.size() != d) throw ShapeMismatch("matrix size does not match axis");
  for (const auto& row : g)
    if ((int)row.size() != d) throw ShapeMismatch("matrix is not square");
  bool tied = t.symmetry.kind == SymmetryTag::FullSym ||
              (t.symmetry.kind == SymmetryTag::SymLastK &&
               axis >= t.ndim() - t.symmetry.k);
  RationalTensor r(t.shape, tied ? SymmetryTag::none() : t.symmetry);
  std::vector<int> idx(t.ndim(), 0);
  do {
    Rat v(0);
    std::vector<int> src = idx;
    for (int j = 0; j < d; j++) {
      if (g[idx[axis]][j] == 0) continue;
      src[axis] = j;
      v += g[idx[axis]][j] * t.at(src);
    }
    r.at(idx) = v;
  } while (next_index(t.shape, idx));
  return r;
}

RationalTensor act_tied(const RationalTensor& t, const Mat& g) {
  int first = t.symmetry.kind == SymmetryTag::SymLastK ? t.ndim() - t.symmetry.k : 0;
  RationalTensor r = t;
  for (int a = first; a < t.ndim(); a++) r = act(r, a, g);
  r.symmetry = t.symmetry;
  return r;
}

bool symmetry_check(const RationalTensor& t, const std::vector<int>& perm) {
  int n = t.ndim();
  if ((int)perm.size() != n) throw ShapeMismatch("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (int a = 0; a < n; a++) {
    if (perm[a] < 0 || perm[a] >= n || seen[perm[a]])
      throw ShapeMismatch("not a permutation");
    seen[perm[a]] = true;
    if (t.shape[a] != t.shape[perm[a]])
      throw ShapeMismatch("permuted axes have different lengths");
  }
  std::vector<int> idx(n, 0), p(n);
  do {
    for (int a = 0; a < n; a++) p[a] = idx[perm[a]];
    if (t.at(idx) != t.at(p)) return false;
  } while (next_index(t.shape, idx));
  return true;
}

RationalTensor sym_embed_quartic(const std::vector<Rat>& coeffs) {
  if (coeffs.size() != 5) throw ShapeMismatch("binary quartic needs 5 coefficients");
  RationalTensor r({2, 2, 2, 2}, SymmetryTag::full());
  std::vector<int> idx(4, 0);
  do {
    int m = count2(idx);
    r.at(idx) = coeffs[m] / binom(4, m);
  } while (next_index(r.shape, idx));
  return r;
}

RationalTensor sym_embed_cubic_pair(const std::vector<Rat>& coeffs) {
  if (coeffs.size() != 8) throw ShapeMismatch("cubic pair needs 8 coefficients");
  RationalTensor r({2, 2, 2, 2}, SymmetryTag::last(3));
  std::vector<int> idx(4, 0);
  do {
    int m = count2({idx[1], idx[2], idx[3]});
    r.at(idx) = coeffs[4 * idx[0] + m] / binom(3, m);
  } while (next_index(r.shape, idx));
  return r;
}

RationalTensor sym_embed_ternary_cubic(const std::vector<Rat>& coeffs) {
  if (coeffs.size() != 10) throw ShapeMismatch("ternary cubic needs 10 coefficients");
  // Coefficient list order: x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
  // For exponents (e1,e2,e3): position and multinomial weight 3!/(e1!e2!e3!).
  RationalTensor r({3, 3, 3}, SymmetryTag::full());
  std::vector<int> idx(3, 0);
  do {
    int e[3] = {0, 0, 0};
    for (int a = 0; a < 3; a++) e[idx[a]]++;
    static const int order[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                     {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1},
                                     {0, 1, 2}, {0, 0, 3}};
    int pos = -1;
    for (int k = 0; k < 10; k++)
      if (order[k][0] == e[0] && order[k][1] == e[1] && order[k][2] == e[2]) pos = k;
    int fact[4] = {1, 1, 2, 6};
    Rat weight(6 / (fact[e[0]] * fact[e[1]] * fact[e[2]]));
    r.at(idx) = coeffs[pos] / weight;
  } while (next_index(r.shape, idx));
  return r;
}

std::vector<Rat> readout_quartic(const RationalTensor& t) {
  require_shape(t, {2, 2, 2, 2}, "quartic readout needs a 2x2x2x2 tensor");
  std::vector<Rat> c(5, Rat(0));
  std::vector<int> idx(4, 0);
  do {
    c[count2(idx)] += t.at(idx);
  } while (next_index(t.shape, idx));
  return c;
}

std::vector<Rat> readout_cubic_pair(const RationalTensor& t) {
  require_shape(t, {2, 2, 2, 2}, "cubic pair readout needs a 2x2x2x2 tensor");
  std::vector<Rat> c(8, Rat(0));
  std::vector<int> idx(4, 0);
  do {
    c[4 * idx[0] + count2({idx[1], idx[2], idx[3]})] += t.at(idx);
  } while (next_index(t.shape, idx));
  return c;
}

std::vector<Rat> readout_ternary_cubic(const RationalTensor& t) {
  require_shape(t, {3, 3, 3}, "ternary cubic readout needs a 3x3x3 tensor");
  std::vector<Rat> c(10, Rat(0));
  std::vector<int> idx(3, 0);
  do {
    int e[3] = {0, 0, 0};
    for (int a = 0; a < 3; a++) e[idx[a]]++;
    static const int order[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                     {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1},
                                     {0, 1, 2}, {0, 0, 3}};
    for (int k = 0; k < 10; k++)
      if (order[k][0] == e[0] && order[k][1] == e[1] && order[k][2] == e[2])
        c[k] += t.at(idx);
  } while (next_index(t.shape, idx));
  return c;
}

RationalTensor skew_embed_22(const RationalTensor& h) {
  require_shape(h, {2, 2, 2, 2}, "kind 2,2 needs a 2x2x2x2 tensor");
  RationalTensor r({2, 2, 4, 4});
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++)
      for (int p = 0; p < 2; p++)
        for (int q = 0; q < 2; q++) {
          const Rat& v = h.at({i, j, p, q});
          r.at({i, j, p, q + 2}) = v;
          r.at({i, j, q + 2, p}) = -v;
        }
  return r;
}

RationalTensor skew_embed_222(const RationalTensor& h) {
  require_shape(h, {2, 2, 2, 2}, "kind 2,2,2 needs a 2x2x2x2 tensor");
  // K^6 = W2 + W3 + W4: basis index p -> (block p/2, component p%2).
  RationalTensor r({2, 6, 6, 6});
  static const int s3[6][4] = {{0, 1, 2, 1},  {0, 2, 1, -1}, {1, 0, 2, -1},
                               {1, 2, 0, 1},  {2, 0, 1, 1},  {2, 1, 0, -1}};
  for (int i = 0; i < 2; i++)
    for (int p = 0; p < 6; p++)
      for (int q = 0; q < 6; q++)
        for (int s = 0; s < 6; s++) {
          Rat v(0);
          for (const auto& sg : s3) {
            // Argument from block sg[a] must land in tensor axis 1+sg[a].
            if (p / 2 != sg[0] || q / 2 != sg[1] || s / 2 != sg[2]) continue;
            int comp[3];
            comp[sg[0]] = p % 2;
            comp[sg[1]] = q % 2;
            comp[sg[2]] = s % 2;
            Rat term = h.at({i, comp[0], comp[1], comp[2]});
            v += sg[3] > 0 ? term : -term;
          }
          r.at({i, p, q, s}) = v;
        }
  return r;
}

RationalTensor skew_embed_33(const RationalTensor& b) {
  require_shape(b, {3, 3, 3}, "kind 3,3 needs a 3x3x3 tensor");
  // K^6 = W2 + W3: phi-bar(r,(s,t),(u,v)) = phi(r,s,v) - phi(r,u,t).
  RationalTensor r({3, 6, 6});
  for (int i = 0; i < 3; i++)
    for (int p = 0; p < 3; p++)
      for (int q = 0; q < 3; q++) {
        const Rat& v = b.at({i, p, q});
        r.at({i, p, q + 3}) = v;
        r.at({i, q + 3, p}) = -v;
      }
  return r;
}

RationalTensor skew_embed(const RationalTensor& t, const std::string& kind) {
  if (kind == "2,2") return skew_embed_22(t);
  if (kind == "2,2,2") return skew_embed_222(t);
  if (kind == "3,3") return skew_embed_33(t);
  throw std::invalid_argument("unknown skew embedding kind: " + kind);
}

}  // namespace g1
