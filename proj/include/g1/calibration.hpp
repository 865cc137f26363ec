#ifndef G1_CALIBRATION_HPP
#define G1_CALIBRATION_HPP

// Pins the absolute normalization of the derived relative invariants against
// anchor orbits with known target invariants: the scales alpha (degree-4
// ternary cubic invariant) and beta (degree-6), and the hypercube degree-4
// pinning matrix and a2 scale.

#include <string>
#include <vector>

#include "g1/linalg.hpp"
#include "g1/tensor.hpp"

namespace g1 {

struct InconsistentAnchors : std::runtime_error {
  InconsistentAnchors()
      : std::runtime_error("anchor targets are mutually inconsistent") {}
};

// An anchor orbit: a tensor produced by one of the inverse constructions,
// together with the construction's target invariant values.
//   kind "rc": 3x3x3 tensor, targets (c6, c9, c12)
//   kind "hc": 2x2x2x2 tensor, targets (a2, a4, a4', a6)
struct CalibrationAnchor {
  std::string kind;
  std::string id;  // provenance label
  RationalTensor tensor;
  std::vector<Rat> targets;
};

struct CalibrationRecord {
  // Ternary cubic normalization: d4 = alpha * (derived degree-4 invariant),
  // d6 = beta * (derived degree-6 invariant).
  bool has_rc = false;
  Rat alpha, beta;
  // Root-tracking endpoint: an anchor cube with its exact c6 value.
  RationalTensor rc_anchor;
  Rat rc_anchor_c6;

  // Hypercube normalization: (a4, a4') in the derived degree-4 basis, the
  // scale of a2 against the derived degree-2 invariant, and an anchor tensor
  // used as the pencil direction when a2 = 0.
  bool has_hc = false;
  Mat hc_deg4;  // 2x3
  Rat hc_a2_scale;
  RationalTensor hc_anchor;

  std::vector<std::string> provenance;
};

// Solves the normalization constants from the anchors; every anchor beyond
// the ones needed to fix the constants is validated with zero residual.
// Requires at least two rc anchors (one fixing the scales, one held out).
CalibrationRecord calibrate(const std::vector<CalibrationAnchor>& anchors);

// The standard anchors used by default_calibration (exposed for tests).
std::vector<CalibrationAnchor> standard_anchors();

// Process-wide record, computed lazily from standard_anchors().
const CalibrationRecord& default_calibration();

// Overrides the process-wide record (empty optional-like reset by passing a
// record from calibrate).  Intended for the CLI --calibration flag and tests.
void set_calibration(const CalibrationRecord& record);

}  // namespace g1

#endif  // G1_CALIBRATION_HPP
