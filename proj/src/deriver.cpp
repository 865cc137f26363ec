#include "g1/deriver.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace g1 {

namespace {

long binom_l(long n, long k) {
  long r = 1;
  for (long i = 0; i < k; i++) r = r * (n - i) / (i + 1);
  return r;
}

// Exponent vectors of total degree k in n variables, lex-descending
// ((k,0,..), (k-1,1,0,..), ...): the classical coefficient list order.
void enum_exponents(int n, int k, Expo& cur, int pos, std::vector<Expo>& out) {
  if (pos == n - 1) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; e--) {
    cur[pos] = e;
    enum_exponents(n, k - e, cur, pos + 1, out);
  }
}

std::vector<Expo> sym_labels(int n, int k) {
  std::vector<Expo> out;
  Expo cur(n, 0);
  enum_exponents(n, k, cur, 0, out);
  return out;
}

struct Coordinate {
  std::vector<Expo> label;  // one content vector per factor (unit vector for
                            // plain factors, exponent vector for sym powers)
};

// The derivation E_{ab} on factor f maps coordinate `from` to a multiple of
// coordinate `to`; rows of the operator as (from -> list of (to, coeff)).
struct Operator {
  std::vector<std::vector<std::pair<int, Rat>>> rows;
};

struct RepModel {
  RepDescriptor rep;
  std::vector<Coordinate> coords;
  std::vector<Operator> ops;  // all E_{ab}, a != b, per factor

  explicit RepModel(const RepDescriptor& r) : rep(r) {
    // Coordinates in row-major order over factors (last factor fastest).
    std::vector<std::vector<Expo>> per_factor;
    for (const auto& f : rep.factors) {
      if (f.sym_power == 1) {
        std::vector<Expo> labels;
        for (int i = 0; i < f.dim; i++) {
          Expo e(f.dim, 0);
          e[i] = 1;
          labels.push_back(e);
        }
        per_factor.push_back(labels);
      } else {
        per_factor.push_back(sym_labels(f.dim, f.sym_power));
      }
    }
    std::vector<int> pick(rep.factors.size(), 0);
    std::map<std::vector<Expo>, int> index_of;
    while (true) {
      Coordinate c;
      for (size_t f = 0; f < pick.size(); f++) c.label.push_back(per_factor[f][pick[f]]);
      index_of[c.label] = (int)coords.size();
      coords.push_back(c);
      int f = (int)pick.size() - 1;
      while (f >= 0 && ++pick[f] == (int)per_factor[f].size()) pick[f--] = 0;
      if (f < 0) break;
    }
    // Operators: E_{ab} acts on a sym-power coefficient vector c (raw
    // monomial coefficients) by (X c)_gamma = (gamma_b + 1) c_{gamma-e_a+e_b}.
    for (size_t f = 0; f < rep.factors.size(); f++) {
      int n = rep.factors[f].dim;
      for (int aa = 0; aa < n; aa++)
        for (int bb = 0; bb < n; bb++) {
          if (aa == bb) continue;
          Operator op;
          op.rows.resize(coords.size());
          for (size_t m = 0; m < coords.size(); m++) {
            const Expo& beta = coords[m].label[f];
            if (beta[bb] == 0) continue;
            Expo gamma = beta;
            gamma[bb] -= 1;
            gamma[aa] += 1;
            std::vector<Expo> to_label = coords[m].label;
            to_label[f] = gamma;
            // (X c)_gamma += beta_b * c_beta: row indexed by the target
            // coordinate (whose partial derivative it multiplies).
            op.rows[index_of.at(to_label)].push_back({(int)m, Rat(beta[bb])});
          }
          ops.push_back(std::move(op));
        }
    }
  }
};

// Degree-d exponent vectors over N coordinates whose per-factor content is
// balanced (equal totals in every basis direction) -- the weight-0 monomials.
std::vector<Expo> balanced_monomials(const RepModel& model, int degree) {
  int N = (int)model.coords.size();
  std::vector<Expo> out;
  Expo cur(N, 0);
  // Recursive enumeration of multidegrees summing to `degree`.
  std::vector<std::vector<int>> content(model.rep.factors.size());
  for (size_t f = 0; f < content.size(); f++)
    content[f].assign(model.rep.factors[f].dim, 0);
  auto balanced = [&]() {
    for (const auto& c : content)
      for (int v : c)
        if (v != c[0]) return false;
    return true;
  };
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == N - 1 || left == 0) {
      if (pos < N) cur[pos] = left;
      for (int rest = pos + 1; rest < N; rest++) cur[rest] = 0;
      if (left > 0)
        for (size_t f = 0; f < content.size(); f++)
          for (int v = 0; v < (int)content[f].size(); v++)
            content[f][v] += left * model.coords[pos].label[f][v];
      if (balanced()) out.push_back(cur);
      if (left > 0)
        for (size_t f = 0; f < content.size(); f++)
          for (int v = 0; v < (int)content[f].size(); v++)
            content[f][v] -= left * model.coords[pos].label[f][v];
      return;
    }
    for (int e = left; e >= 0; e--) {
      cur[pos] = e;
      for (size_t f = 0; f < content.size(); f++)
        for (int v = 0; v < (int)content[f].size(); v++)
          content[f][v] += e * model.coords[pos].label[f][v];
      rec(pos + 1, left - e);
      for (size_t f = 0; f < content.size(); f++)
        for (int v = 0; v < (int)content[f].size(); v++)
          content[f][v] -= e * model.coords[pos].label[f][v];
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace

int RepDescriptor::coordinate_count() const {
  long n = 1;
  for (const auto& f : factors)
    n *= binom_l(f.dim + f.sym_power - 1, f.sym_power);
  return (int)n;
}

std::string RepDescriptor::str() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); i++) {
    if (i) s += "x";
    if (factors[i].sym_power == 1)
      s += std::to_string(factors[i].dim);
    else
      s += "sym" + std::to_string(factors[i].sym_power) + "(" +
           std::to_string(factors[i].dim) + ")";
  }
  return s;
}

RepDescriptor RepDescriptor::plain(const std::vector<int>& dims) {
  RepDescriptor r;
  for (int d : dims) r.factors.push_back({d, 1});
  return r;
}

RepDescriptor RepDescriptor::sym(int dim, int k) {
  RepDescriptor r;
  r.factors.push_back({dim, k});
  return r;
}

std::vector<SparsePoly> derive_invariants(const RepDescriptor& rep, int degree,
                                          long ceiling) {
  RepModel model(rep);
  int N = (int)model.coords.size();
  if (binom_l(degree + N - 1, degree) > ceiling) throw TooLarge();

  std::vector<Expo> cand = balanced_monomials(model, degree);
  if (cand.empty()) return {};
  std::sort(cand.begin(), cand.end(), GradedLexLess());
  std::map<Expo, int, GradedLexLess> cand_index;
  for (size_t i = 0; i < cand.size(); i++) cand_index[cand[i]] = (int)i;

  // Equations: for each operator X, coefficients of D_X(candidate) on the
  // weight-shifted target monomials must vanish.
  Mat eqs;
  for (const auto& op : model.ops) {
    std::map<Expo, std::map<int, Rat>, GradedLexLess> row_of_target;
    for (size_t ci = 0; ci < cand.size(); ci++) {
      const Expo& e = cand[ci];
      for (int m = 0; m < N; m++) {
        if (e[m] == 0) continue;
        for (const auto& [to, coeff] : op.rows[m]) {
          Expo t = e;
          t[m] -= 1;
          t[to] += 1;
          row_of_target[t][(int)ci] += e[m] * coeff;
        }
      }
    }
    for (const auto& [target, row] : row_of_target) {
      Vec v(cand.size(), Rat(0));
      bool nonzero = false;
      for (const auto& [ci, c] : row) {
        v[ci] = c;
        if (c != 0) nonzero = true;
      }
      if (nonzero) eqs.push_back(std::move(v));
    }
  }

  std::vector<Vec> kernel;
  if (eqs.empty()) {
    for (size_t i = 0; i < cand.size(); i++) {
      Vec v(cand.size(), Rat(0));
      v[i] = 1;
      kernel.push_back(v);
    }
  } else {
    kernel = exact_kernel(eqs);
  }

  std::vector<SparsePoly> basis;
  for (const auto& v : kernel) {
    SparsePoly p(N);
    for (size_t i = 0; i < v.size(); i++)
      if (v[i] != 0) p.add_term(cand[i], v[i]);
    basis.push_back(std::move(p));
  }
  return basis;
}

std::vector<Rat> rep_coordinates(const RepDescriptor& rep,
                                 const RationalTensor& t) {
  // Factor f with sym power k consumes k consecutive axes: enumerate labels
  // per factor and record representative axis indices + multinomial weight.
  int axis = 0;
  struct FactorRead {
    std::vector<Expo> labels;
    std::vector<std::vector<int>> rep_idx;  // per label, indices on its axes
    std::vector<Rat> weight;
  };
  std::vector<FactorRead> reads;
  for (const auto& f : rep.factors) {
    FactorRead fr;
    if (f.sym_power == 1) {
      for (int i = 0; i < f.dim; i++) {
        Expo e(f.dim, 0);
        e[i] = 1;
        fr.labels.push_back(e);
        fr.rep_idx.push_back({i});
        fr.weight.push_back(Rat(1));
      }
    } else {
      for (const Expo& alpha : sym_labels(f.dim, f.sym_power)) {
        fr.labels.push_back(alpha);
        std::vector<int> idx;
        for (int v = 0; v < f.dim; v++)
          for (int rep_count = 0; rep_count < alpha[v]; rep_count++)
            idx.push_back(v);
        // Raw coefficient = entry times the multinomial k!/(prod alpha_v!).
        long num = 1;
        for (long i = 2; i <= f.sym_power; i++) num *= i;
        long den = 1;
        for (int v = 0; v < f.dim; v++)
          for (long i = 2; i <= alpha[v]; i++) den *= i;
        fr.rep_idx.push_back(idx);
        fr.weight.push_back(Rat(num / den));
      }
    }
    if ((int)fr.rep_idx[0].size() + axis > t.ndim())
      throw ShapeMismatch("tensor rank does not match descriptor");
    axis += (int)fr.rep_idx[0].size();
    reads.push_back(std::move(fr));
  }
  if (axis != t.ndim()) throw ShapeMismatch("tensor rank does not match descriptor");

  std::vector<Rat> out;
  std::vector<int> pick(reads.size(), 0);
  while (true) {
    std::vector<int> idx;
    Rat w(1);
    for (size_t f = 0; f < reads.size(); f++) {
      const auto& ri = reads[f].rep_idx[pick[f]];
      idx.insert(idx.end(), ri.begin(), ri.end());
      w *= reads[f].weight[pick[f]];
    }
    out.push_back(t.at(idx) * w);
    int f = (int)pick.size() - 1;
    while (f >= 0 && ++pick[f] == (int)reads[f].labels.size()) pick[f--] = 0;
    if (f < 0) break;
  }
  return out;
}

std::string invariants_to_text(const RepDescriptor& rep, int degree,
                               const std::vector<SparsePoly>& basis) {
  std::ostringstream os;
  os << "G1INV v1\n" << rep.str() << " degree " << degree << "\n";
  for (size_t i = 0; i < basis.size(); i++) {
    if (i) os << "---\n";
    for (const auto& [e, c] : basis[i].terms()) {
      for (size_t j = 0; j < e.size(); j++) os << (j ? " " : "") << e[j];
      os << " : " << rat_str(c) << "\n";
    }
  }
  return os.str();
}

std::vector<SparsePoly> invariants_from_text(const RepDescriptor& rep,
                                             int degree,
                                             const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "G1INV v1")
    throw std::runtime_error("bad cache header");
  std::string expect = rep.str() + " degree " + std::to_string(degree);
  if (!std::getline(is, line) || line != expect)
    throw std::runtime_error("cache descriptor mismatch");
  int n = rep.coordinate_count();
  std::vector<SparsePoly> basis;
  SparsePoly cur(n);
  bool any = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "---") {
      basis.push_back(cur);
      cur = SparsePoly(n);
      continue;
    }
    std::istringstream ls(line);
    Expo e(n);
    for (int i = 0; i < n; i++) ls >> e[i];
    std::string colon, val;
    ls >> colon >> val;
    if (colon != ":") throw std::runtime_error("bad cache line: " + line);
    cur.add_term(e, parse_rat(val));
    any = true;
  }
  if (any || !basis.empty()) basis.push_back(cur);
  return basis;
}

std::vector<SparsePoly> derive_invariants_cached(const RepDescriptor& rep,
                                                 int degree,
                                                 const std::string& cache_dir) {
  if (cache_dir.empty()) return derive_invariants(rep, degree);
  namespace fs = std::filesystem;
  fs::create_directories(cache_dir);
  std::string name = rep.str() + "-d" + std::to_string(degree) + ".g1inv";
  for (auto& ch : name)
    if (ch == '(' || ch == ')') ch = '_';
  fs::path path = fs::path(cache_dir) / name;
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return invariants_from_text(rep, degree, ss.str());
  }
  auto basis = derive_invariants(rep, degree);
  std::ofstream out(path);
  out << invariants_to_text(rep, degree, basis);
  return basis;
}

}  // namespace g1
