#include "g1/calibration.hpp"

#include <mutex>

#include "g1/classical.hpp"
#include "g1/deriver.hpp"
#include "g1/hypercube.hpp"
#include "g1/rubiks.hpp"

namespace g1 {

namespace {

// Derived (uncalibrated) degree-4 and degree-6 ternary cubic invariants,
// computed once per process.
const SparsePoly& derived_tc(int degree) {
  static std::once_flag once;
  static SparsePoly d4, d6;
  std::call_once(once, [] {
    RepDescriptor rep = RepDescriptor::sym(3, 3);
    d4 = derive_invariants(rep, 4).at(0);
    d6 = derive_invariants(rep, 6).at(0);
  });
  return degree == 4 ? d4 : d6;
}

// Exact cube root of the ratio of the measured Strassen value to the target
// c9; the anchor's unknown weight lambda enters invariants only through
// mu = lambda^3 since all invariant degrees are multiples of 3.
Rat anchor_mu(const RationalTensor& b, const Rat& c9_target) {
  if (c9_target == 0) throw InconsistentAnchors();
  auto mu = rat_kth_root(rc_strassen(b) / c9_target, 3);
  if (!mu) throw InconsistentAnchors();
  return *mu;
}

// Solves a nonsingular 3x3 system q * m = rhs exactly.
Vec solve3(const Mat& q, const Vec& rhs) {
  Mat aug(3, Vec(4));
  for (int r = 0; r < 3; r++) {
    for (int c = 0; c < 3; c++) aug[r][c] = q[r][c];
    aug[r][3] = -rhs[r];
  }
  for (const Vec& v : exact_kernel(aug))
    if (v[3] != 0) return {v[0] / v[3], v[1] / v[3], v[2] / v[3]};
  throw InconsistentAnchors();
}

// Hypercube pinning.  Each anchor is a constructed hypercube with targets
// (a2, a4, a4', a6) = (slope, xP, xP', yP) on a short Weierstrass curve
// y^2 = x^3 + A x + B.  The anchor's unknown basis weight enters invariants
// through w = lambda^2 (all invariant degrees are even); w is recovered from
// the exactly known a8 = -27 I and a12 = -27 J against the targets' A and B.
void hc_pin(const std::vector<const CalibrationAnchor*>& anchors,
            CalibrationRecord& rec) {
  if (anchors.size() < 2) throw InconsistentAnchors();
  struct Prepared {
    Rat w;             // lambda^2
    Rat p2;            // derived degree-2 value
    Vec q;             // derived degree-4 values
    Rat a8m, a12m;     // -27 I, -27 J of the anchor tensor
    Rat a2_t, a4_t, a4p_t, a6_t;
  };
  RepDescriptor rep = RepDescriptor::plain({2, 2, 2, 2});
  const SparsePoly& p2 = hc_derived_deg2();
  const std::vector<SparsePoly>& q4 = hc_derived_deg4();

  std::vector<Prepared> prep;
  for (const CalibrationAnchor* pa : anchors) {
    const CalibrationAnchor& a = *pa;
    if (a.targets.size() != 4) throw InconsistentAnchors();
    Prepared pr;
    pr.a2_t = a.targets[0];
    pr.a4_t = a.targets[1];
    pr.a4p_t = a.targets[2];
    pr.a6_t = a.targets[3];
    Rat a6p_t = pr.a6_t + pr.a2_t * (pr.a4p_t - pr.a4_t);
    Rat A = pr.a2_t * (pr.a6_t + a6p_t) -
            (pr.a4_t * pr.a4_t + pr.a4_t * pr.a4p_t + pr.a4p_t * pr.a4p_t);
    Rat B = pr.a6_t * pr.a6_t - pr.a2_t * pr.a4_t * (pr.a6_t + a6p_t) +
            pr.a4_t * pr.a4p_t * (pr.a4_t + pr.a4p_t);
    if (A == 0 || B == 0) throw InconsistentAnchors();
    HypercubeIJ ij = hc_IJ(a.tensor);
    if (ij.Delta == 0) throw InconsistentAnchors();
    pr.a8m = -27 * ij.I;
    pr.a12m = -27 * ij.J;
    // a8 has weight w^4 and a12 weight w^6, so their ratios give w^2; the
    // w^4 ratio must then match exactly.
    Rat u4 = pr.a8m / A, u6 = pr.a12m / B;
    if (u4 == 0 || u6 == 0) throw InconsistentAnchors();
    auto w = rat_kth_root(u6 / u4, 2);
    if (!w || *w == 0 || *w * *w * *w * *w != u4) throw InconsistentAnchors();
    pr.w = *w;
    std::vector<Rat> coords = rep_coordinates(rep, a.tensor);
    pr.p2 = p2.eval(coords);
    pr.q = {q4[0].eval(coords), q4[1].eval(coords), q4[2].eval(coords)};
    prep.push_back(std::move(pr));
    rec.provenance.push_back(a.id);
  }

  // Scale of a2 against the derived degree-2 invariant.
  bool s_fixed = false;
  for (const Prepared& pr : prep) {
    Rat rhs = pr.w * pr.a2_t;
    if (pr.p2 == 0) {
      if (rhs != 0) throw InconsistentAnchors();
      continue;
    }
    if (!s_fixed) {
      rec.hc_a2_scale = rhs / pr.p2;
      s_fixed = true;
    } else if (rec.hc_a2_scale * pr.p2 != rhs) {
      throw InconsistentAnchors();
    }
  }
  if (!s_fixed) throw InconsistentAnchors();

  // (a4, a4') rows of the degree-4 pinning matrix, from the first three
  // anchors with independent derived degree-4 vectors.
  int n = (int)prep.size();
  bool solved = false;
  for (int i = 0; i < n && !solved; i++)
    for (int j = i + 1; j < n && !solved; j++)
      for (int k = j + 1; k < n && !solved; k++) {
        Mat q{prep[i].q, prep[j].q, prep[k].q};
        if (mat_det(q) == 0) continue;
        rec.hc_deg4.assign(2, Vec(3));
        for (int row = 0; row < 2; row++) {
          Vec rhs(3);
          const Prepared* sel[3] = {&prep[i], &prep[j], &prep[k]};
          for (int s = 0; s < 3; s++) {
            const Rat& t = row == 0 ? sel[s]->a4_t : sel[s]->a4p_t;
            rhs[s] = sel[s]->w * sel[s]->w * t;
          }
          rec.hc_deg4[row] = solve3(q, rhs);
        }
        solved = true;
      }
  if (!solved) throw InconsistentAnchors();

  // Every anchor validates with zero residual, including a6 through the
  // linear relation and a12 through its formula.
  for (const Prepared& pr : prep) {
    Rat w2 = pr.w * pr.w;
    Vec a4s = mat_apply(rec.hc_deg4, pr.q);
    if (a4s[0] != w2 * pr.a4_t || a4s[1] != w2 * pr.a4p_t)
      throw InconsistentAnchors();
    Rat a2m = rec.hc_a2_scale * pr.p2;
    if (a2m == 0) continue;
    Rat s4 = a4s[0] * a4s[0] + a4s[0] * a4s[1] + a4s[1] * a4s[1];
    Rat a6m = ((pr.a8m + s4) / a2m - a2m * (a4s[1] - a4s[0])) / 2;
    if (a6m != w2 * pr.w * pr.a6_t) throw InconsistentAnchors();
    Rat a6pm = a6m + a2m * (a4s[1] - a4s[0]);
    Rat a12m = a6m * a6m - a2m * a4s[0] * (a6m + a6pm) +
               a4s[0] * a4s[1] * (a4s[0] + a4s[1]);
    if (a12m != pr.a12m) throw InconsistentAnchors();
  }

  rec.hc_anchor = anchors[0]->tensor;
  rec.has_hc = true;
}

}  // namespace

CalibrationRecord calibrate(const std::vector<CalibrationAnchor>& anchors) {
  CalibrationRecord rec;
  bool rc_fixed = false;
  std::vector<const CalibrationAnchor*> hc;
  for (const auto& a : anchors) {
    if (a.kind == "hc") {
      hc.push_back(&a);
      continue;
    }
    if (a.kind != "rc" || a.targets.size() != 3) throw InconsistentAnchors();
    const Rat& c6 = a.targets[0];
    const Rat& c9 = a.targets[1];
    const Rat& c12 = a.targets[2];
    Rat d4_t = 16 * c6 * c6 - 48 * c12;
    Rat d6_t = -64 * c6 * c6 * c6 - 216 * c9 * c9 + 288 * c6 * c12;
    std::vector<Rat> f1 = rc_ternary_cubics(a.tensor)[0];
    Rat s = derived_tc(4).eval(f1), t = derived_tc(6).eval(f1);
    Rat mu = anchor_mu(a.tensor, c9);
    Rat mu2 = mu * mu;
    // d4 has weight 12 = lambda^12 = mu^4; d6 has weight 18 = mu^6.
    Rat d4_w = d4_t * mu2 * mu2, d6_w = d6_t * mu2 * mu2 * mu2;
    if (!rc_fixed && d4_t != 0 && d6_t != 0) {
      if (s == 0 || t == 0) throw InconsistentAnchors();
      rec.alpha = d4_w / s;
      rec.beta = d6_w / t;
      rec.rc_anchor = a.tensor;
      rec.rc_anchor_c6 = c6 * mu2;
      rec.has_rc = rc_fixed = true;
    } else if (rc_fixed) {
      if (rec.alpha * s != d4_w || rec.beta * t != d6_w)
        throw InconsistentAnchors();
    } else {
      // Degenerate-target anchor before the scales are fixed: the derived
      // values must vanish exactly where the targets force them to.
      if ((d4_t == 0) != (s == 0) || (d6_t == 0) != (t == 0))
        throw InconsistentAnchors();
    }
    rec.provenance.push_back(a.id);
  }
  if (!rc_fixed) throw InconsistentAnchors();
  // Re-validate degenerate-target anchors now that scales exist.
  for (const auto& a : anchors) {
    if (a.kind != "rc") continue;
    const Rat& c6 = a.targets[0];
    const Rat& c9 = a.targets[1];
    const Rat& c12 = a.targets[2];
    Rat d4_t = 16 * c6 * c6 - 48 * c12;
    Rat d6_t = -64 * c6 * c6 * c6 - 216 * c9 * c9 + 288 * c6 * c12;
    std::vector<Rat> f1 = rc_ternary_cubics(a.tensor)[0];
    Rat mu = anchor_mu(a.tensor, c9);
    Rat mu2 = mu * mu;
    if (rec.alpha * derived_tc(4).eval(f1) != d4_t * mu2 * mu2 ||
        rec.beta * derived_tc(6).eval(f1) != d6_t * mu2 * mu2 * mu2)
      throw InconsistentAnchors();
  }
  if (!hc.empty()) hc_pin(hc, rec);
  return rec;
}

std::vector<CalibrationAnchor> standard_anchors() {
  std::vector<CalibrationAnchor> out;
  auto rc = [&](long c6, long c9, long c12, const std::string& id) {
    CalibrationAnchor a;
    a.kind = "rc";
    a.id = id;
    a.targets = {Rat(c6), Rat(c9), Rat(c12)};
    a.tensor = rc_construct(Rat(c6), Rat(c9), Rat(c12));
    out.push_back(std::move(a));
  };
  rc(1, 1, 1, "rc(1,1,1)");
  rc(2, 1, 1, "rc(2,1,1)");  // held out: must validate with zero residual
  rc(0, 1, 0, "rc(0,1,0)");  // forces the derived degree-4 value to vanish

  // Hypercube anchors: curves y^2 = x^3 + A x + B through two integral
  // points.  The marked collinear triple of the constructed hypercube is
  // {P, P' - P, -P'} (the section-bundle differences), so the targets are
  // (slope of the line through P and -P', xP, x(P'-P), yP).
  auto hc = [&](const Rat& A, const Rat& B, const CurvePoint& p,
                const CurvePoint& pp, const std::string& id) {
    WeierstrassCurve e = curve_new(Rat(0), Rat(0), Rat(0), A, B);
    CurvePoint diff = add_points(e, pp, e.negate(p));
    CalibrationAnchor a;
    a.kind = "hc";
    a.id = id;
    a.targets = {(-pp.y - p.y) / (pp.x - p.x), p.x, diff.x, p.y};
    a.tensor = hc_construct(e, p, pp);
    out.push_back(std::move(a));
  };
  hc(Rat(9, 2), Rat(-9, 2), {Rat(1), Rat(1)}, {Rat(3), Rat(6)},
     "hc(9/2,-9/2)");
  hc(Rat(-5, 2), Rat(11, 2), {Rat(1), Rat(2)}, {Rat(3), Rat(5)},
     "hc(-5/2,11/2)");
  hc(Rat(13, 2), Rat(17, 2), {Rat(-1), Rat(1)}, {Rat(1), Rat(4)},
     "hc(13/2,17/2)");
  // Held out: must validate with zero residual.
  hc(Rat(-8), Rat(9), {Rat(2), Rat(1)}, {Rat(0), Rat(3)}, "hc(-8,9)");
  return out;
}

namespace {
std::mutex cal_mutex;
CalibrationRecord* current_record = nullptr;
}  // namespace

const CalibrationRecord& default_calibration() {
  std::lock_guard<std::mutex> lock(cal_mutex);
  static CalibrationRecord standard;
  if (!current_record) {
    standard = calibrate(standard_anchors());
    current_record = &standard;
  }
  return *current_record;
}

void set_calibration(const CalibrationRecord& record) {
  std::lock_guard<std::mutex> lock(cal_mutex);
  static CalibrationRecord overridden;
  overridden = record;
  current_record = &overridden;
}

// ---- Calibrated ternary cubic invariants (declared in classical.hpp) ----

TernaryCubicInvariants tc_invariants(const std::vector<Rat>& f) {
  const CalibrationRecord& cal = default_calibration();
  if (!cal.has_rc) throw CalibrationMissing();
  TernaryCubicInvariants r;
  r.d4 = cal.alpha * derived_tc(4).eval(f);
  r.d6 = cal.beta * derived_tc(6).eval(f);
  r.Delta = (r.d4 * r.d4 * r.d4 - r.d6 * r.d6) / 1728;
  return r;
}

WeierstrassCurve tc_jacobian(const std::vector<Rat>& f) {
  TernaryCubicInvariants v = tc_invariants(f);
  if (v.Delta == 0) throw Degenerate();
  return curve_new(Rat(0), Rat(0), Rat(0), -27 * v.d4, -54 * v.d6);
}

}  // namespace g1
