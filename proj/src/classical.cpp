#include "g1/classical.hpp"

namespace g1 {

namespace {

// Binary form of degree d as coefficient list (x^d, x^(d-1)y, ..., y^d).
SparsePoly binary_form_poly(const std::vector<Rat>& c) {
  int d = (int)c.size() - 1;
  SparsePoly p(2);
  for (int m = 0; m <= d; m++) p.add_term({d - m, m}, c[m]);
  return p;
}

std::vector<Rat> binary_form_coeffs(const SparsePoly& p, int d) {
  std::vector<Rat> c(d + 1, Rat(0));
  for (int m = 0; m <= d; m++) c[m] = p.coeff({d - m, m});
  return c;
}

// det of the 2x2 matrix [[a,b],[c,d]] given as polynomials.
template <typename T>
T det2(const T& a, const T& b, const T& c, const T& d) {
  return a * d - b * c;
}

// Convolution product of binary-form coefficient lists.
std::vector<Rat> form_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Rat> form_axpy(std::vector<Rat> a, const Rat& s,
                           const std::vector<Rat>& b) {
  for (size_t i = 0; i < b.size(); i++) a[i] += s * b[i];
  return a;
}

// (2,2) form coefficients <-> polynomial in (w1, w2, x1, x2); coefficient
// order (a22, a32, a42, a23, a33, a43, a24, a34, a44): w-index varies fastest.
const int kWExp[3][2] = {{2, 0}, {1, 1}, {0, 2}};

SparsePoly form22_poly(const std::vector<Rat>& a) {
  SparsePoly p(4);
  for (int j = 0; j < 3; j++)  // x-quadratic index
    for (int i = 0; i < 3; i++)  // w-quadratic index
      p.add_term({kWExp[i][0], kWExp[i][1], kWExp[j][0], kWExp[j][1]},
                 a[3 * j + i]);
  return p;
}

std::vector<Rat> form22_coeffs(const SparsePoly& p) {
  std::vector<Rat> a(9, Rat(0));
  for (int j = 0; j < 3; j++)
    for (int i = 0; i < 3; i++)
      a[3 * j + i] =
          p.coeff({kWExp[i][0], kWExp[i][1], kWExp[j][0], kWExp[j][1]});
  return a;
}

// Variable images for substitution by g acting on variables x_j -> sum_i
// g_{ij} x_i (matching the tensor action new-slice convention).
std::vector<SparsePoly> act_images(const Mat& g, int nvars, int offset) {
  std::vector<SparsePoly> images;
  for (size_t j = 0; j < g.size(); j++) {
    SparsePoly im(nvars);
    for (size_t i = 0; i < g.size(); i++) {
      Expo e(nvars, 0);
      e[offset + i] = 1;
      im.add_term(e, g[i][j]);
    }
    images.push_back(im);
  }
  return images;
}

}  // namespace

Rat mat_det(const Mat& m) {
  Mat a = m;
  size_t n = a.size();
  Rat det(1);
  for (size_t col = 0; col < n; col++) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) piv++;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; r++) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; c++) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

BinaryQuarticInvariants bq_invariants(const std::vector<Rat>& q) {
  if (q.size() != 5) throw ShapeMismatch("binary quartic needs 5 coefficients");
  const Rat &a = q[0], &b = q[1], &c = q[2], &d = q[3], &e = q[4];
  BinaryQuarticInvariants r;
  r.I = 12 * a * e - 3 * b * d + c * c;
  r.J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b -
        2 * c * c * c;
  r.Delta = 4 * r.I * r.I * r.I - r.J * r.J;
  return r;
}

WeierstrassCurve bq_jacobian(const std::vector<Rat>& q) {
  BinaryQuarticInvariants inv = bq_invariants(q);
  if (inv.Delta == 0) throw Degenerate();
  return curve_new(Rat(0), Rat(0), Rat(0), -27 * inv.I, -27 * inv.J);
}

std::vector<Rat> binary_form_act(const std::vector<Rat>& coeffs, const Mat& g) {
  int d = (int)coeffs.size() - 1;
  SparsePoly p = binary_form_poly(coeffs).substitute(act_images(g, 2, 0));
  return binary_form_coeffs(p, d);
}

CubeDisc cube_disc(const RationalTensor& a) {
  if (a.shape != std::vector<int>{2, 2, 2})
    throw ShapeMismatch("cube_disc needs a 2x2x2 tensor");
  CubeDisc r;
  for (int l = 0; l < 3; l++) {
    RationalTensor m = slice(a, l, 0), n = slice(a, l, 1);
    Rat dm = det2(m.entries[0], m.entries[1], m.entries[2], m.entries[3]);
    Rat dn = det2(n.entries[0], n.entries[1], n.entries[2], n.entries[3]);
    RationalTensor s = m + n;
    Rat dmn = det2(s.entries[0], s.entries[1], s.entries[2], s.entries[3]);
    r.Q[l] = {dm, dmn - dm - dn, dn};
  }
  r.Delta = r.Q[0][1] * r.Q[0][1] - 4 * r.Q[0][0] * r.Q[0][2];
  return r;
}

std::vector<Rat> bq_hessian(const std::vector<Rat>& q) {
  if (q.size() != 5) throw ShapeMismatch("binary quartic needs 5 coefficients");
  SparsePoly f = binary_form_poly(q);
  // Cube of triple partials T_{ijk} = d^3 f / dw_i dw_j dw_k (linear forms).
  SparsePoly t[2][2][2];
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++)
      for (int k = 0; k < 2; k++)
        t[i][j][k] = f.derivative(i).derivative(j).derivative(k);
  // disc along the first slicing: A = det M, C = det N, B by polarization.
  SparsePoly da = det2(t[0][0][0], t[0][0][1], t[0][1][0], t[0][1][1]);
  SparsePoly dc = det2(t[1][0][0], t[1][0][1], t[1][1][0], t[1][1][1]);
  SparsePoly ds = det2(t[0][0][0] + t[1][0][0], t[0][0][1] + t[1][0][1],
                       t[0][1][0] + t[1][1][0], t[0][1][1] + t[1][1][1]);
  SparsePoly b = ds - da - dc;
  SparsePoly disc = b * b - 4 * (da * dc);
  return binary_form_coeffs(disc, 4);
}

SparsePoly ternary_cubic_poly(const std::vector<Rat>& f) {
  if (f.size() != 10) throw ShapeMismatch("ternary cubic needs 10 coefficients");
  static const int order[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                   {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1},
                                   {0, 1, 2}, {0, 0, 3}};
  SparsePoly p(3);
  for (int k = 0; k < 10; k++)
    p.add_term({order[k][0], order[k][1], order[k][2]}, f[k]);
  return p;
}

std::vector<Rat> ternary_cubic_coeffs(const SparsePoly& p) {
  static const int order[10][3] = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0},
                                   {1, 1, 1}, {1, 0, 2}, {0, 3, 0}, {0, 2, 1},
                                   {0, 1, 2}, {0, 0, 3}};
  std::vector<Rat> f(10);
  for (int k = 0; k < 10; k++)
    f[k] = p.coeff({order[k][0], order[k][1], order[k][2]});
  return f;
}

std::vector<Rat> tc_hessian(const std::vector<Rat>& f) {
  SparsePoly p = ternary_cubic_poly(f);
  SparsePoly h[3][3];
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) h[i][j] = p.derivative(i).derivative(j);
  SparsePoly det = h[0][0] * det2(h[1][1], h[1][2], h[2][1], h[2][2]) -
                   h[0][1] * det2(h[1][0], h[1][2], h[2][0], h[2][2]) +
                   h[0][2] * det2(h[1][0], h[1][1], h[2][0], h[2][1]);
  return ternary_cubic_coeffs(det);
}

std::vector<Rat> ternary_cubic_act(const std::vector<Rat>& f, const Mat& g) {
  SparsePoly p = ternary_cubic_poly(f).substitute(act_images(g, 3, 0));
  return ternary_cubic_coeffs(p);
}

Form22Invariants form22_invariants(const std::vector<Rat>& a) {
  if (a.size() != 9) throw ShapeMismatch("(2,2) form needs 9 coefficients");
  const Rat &a22 = a[0], &a32 = a[1], &a42 = a[2], &a23 = a[3], &a33 = a[4],
            &a43 = a[5], &a24 = a[6], &a34 = a[7], &a44 = a[8];
  Form22Invariants r;
  r.delta2 = a33 * a33 - 4 * a32 * a34 + 8 * a24 * a42 - 4 * a23 * a43 +
             8 * a22 * a44;
  r.delta3 = a24 * a33 * a42 - a23 * a34 * a42 - a24 * a32 * a43 +
             a22 * a34 * a43 + a23 * a32 * a44 - a22 * a33 * a44;
  // q1: discriminant in the x-variables of the w-quadratic coefficient forms.
  std::vector<Rat> A = {a22, a32, a42}, B = {a23, a33, a43}, C = {a24, a34, a44};
  r.q1 = form_axpy(form_mul(B, B), Rat(-4), form_mul(A, C));
  std::vector<Rat> Ax = {a22, a23, a24}, Bx = {a32, a33, a34}, Cx = {a42, a43, a44};
  r.q2 = form_axpy(form_mul(Bx, Bx), Rat(-4), form_mul(Ax, Cx));
  BinaryQuarticInvariants bq = bq_invariants(r.q1);
  r.I = bq.I;
  r.J = bq.J;
  r.Delta = bq.Delta;
  r.delta4 = r.I;
  return r;
}

Form22Jacobian form22_jacobian_point(const std::vector<Rat>& a) {
  Form22Invariants inv = form22_invariants(a);
  if (inv.Delta == 0) throw Degenerate();
  Form22Jacobian r{
      curve_new(Rat(0), 9 * inv.delta2, 216 * inv.delta3,
                27 * inv.delta2 * inv.delta2 - 27 * inv.delta4, Rat(0)),
      curve_new(Rat(0), Rat(0), Rat(0), -27 * inv.I, -27 * inv.J),
      CurvePoint(3 * inv.delta2, 108 * inv.delta3)};
  return r;
}

std::vector<Rat> form22_hessian(const std::vector<Rat>& a) {
  SparsePoly f = form22_poly(a);
  // Mixed second partials d^2 f / dw_i dx_j, a 2x2 matrix of (1,1) forms.
  SparsePoly m[2][2];
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++) m[i][j] = f.derivative(i).derivative(2 + j);
  return form22_coeffs(det2(m[0][0], m[0][1], m[1][0], m[1][1]));
}

std::vector<Rat> form22_act(const std::vector<Rat>& a, const Mat& g, const Mat& h) {
  std::vector<SparsePoly> images = act_images(g, 4, 0);
  std::vector<SparsePoly> ximages = act_images(h, 4, 2);
  images.insert(images.end(), ximages.begin(), ximages.end());
  return form22_coeffs(form22_poly(a).substitute(images));
}

QuadricPencilInvariants quadric_pencil_invariants(const Mat& a, const Mat& b) {
  if (a.size() != 4 || b.size() != 4)
    throw ShapeMismatch("pencil needs two 4x4 matrices");
  // det(At + B) has degree <= 4 in t; det(Ax + By) = sum d_k x^k y^(4-k).
  std::vector<std::pair<Rat, Rat>> samples;
  for (int t = 0; t <= 4; t++) {
    Mat m(4, Vec(4));
    for (int i = 0; i < 4; i++)
      for (int j = 0; j < 4; j++) m[i][j] = a[i][j] * t + b[i][j];
    samples.push_back({Rat(t), mat_det(m)});
  }
  UniPoly p = lagrange_interpolate(samples, 4);
  p.resize(5, Rat(0));
  QuadricPencilInvariants r;
  r.q = {p[4], p[3], p[2], p[1], p[0]};
  BinaryQuarticInvariants inv = bq_invariants(r.q);
  r.d8 = inv.I;
  r.d12 = inv.J;
  return r;
}

std::vector<SparsePoly> pfaffian_quadrics(const RationalTensor& phi) {
  if (phi.shape != std::vector<int>{5, 5, 5})
    throw ShapeMismatch("Pfaffian model needs a 5x5x5 tensor");
  // Skew part of the matrix of linear forms M(x)_{jk} = sum_i phi_{ijk} x_i.
  SparsePoly m[5][5];
  for (int j = 0; j < 5; j++)
    for (int k = 0; k < 5; k++) {
      SparsePoly e(5);
      for (int i = 0; i < 5; i++) {
        Expo x(5, 0);
        x[i] = 1;
        e.add_term(x, (phi.at({i, j, k}) - phi.at({i, k, j})) / 2);
      }
      m[j][k] = e;
    }
  std::vector<SparsePoly> out;
  for (int drop = 0; drop < 5; drop++) {
    int r[4], t = 0;
    for (int i = 0; i < 5; i++)
      if (i != drop) r[t++] = i;
    // Pf([[0,a,b,c],[-a,0,d,e],[-b,-d,0,f],[-c,-e,-f,0]]) = af - be + cd.
    out.push_back(m[r[0]][r[1]] * m[r[2]][r[3]] - m[r[0]][r[2]] * m[r[1]][r[3]] +
                  m[r[0]][r[3]] * m[r[1]][r[2]]);
  }
  return out;
}

}  // namespace g1
