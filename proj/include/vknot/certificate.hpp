#ifndef VKNOT_CERTIFICATE_HPP
#define VKNOT_CERTIFICATE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/moves.hpp"

namespace vknot {

struct CertificateStep {
  Move move;
  CanonicalKey key;  // canonical key of the diagram after the move
};

/// A replayable move sequence from `start` to `end`.
///
/// Each move is applied to the canonical form of the current diagram, so a
/// certificate does not depend on the basepoint or labels of `start`.
struct Certificate {
  GaussDiagram start;
  std::vector<CertificateStep> steps;
  GaussDiagram end;
  int flip_count = 0;
};

struct VerifyReport {
  bool ok = true;
  /// Index of the first failing step; steps.size() when the final diagram or
  /// the flip count is wrong.
  std::optional<std::size_t> failed_step;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

inline VerifyReport verify_certificate(const Certificate& cert) {
  const auto failure = [](std::size_t at, std::string msg) {
    return VerifyReport{false, at, std::move(msg)};
  };
  GaussDiagram cur = canonical_form(cert.start);
  int flips = 0;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& step = cert.steps[k];
    try {
      cur = canonical_form(vknot::apply(cur, step.move));
    } catch (const DiagramError& e) {
      return failure(k, std::string("move not applicable: ") + e.what());
    }
    if (canonical_key(cur) != step.key) {
      return failure(k, "recorded key " + to_string(step.key) + " but replay gives " +
                            to_gauss_code(cur));
    }
    if (is_flip(step.move)) ++flips;
  }
  const std::size_t tail = cert.steps.size();
  if (canonical_key(cur) != canonical_key(cert.end)) {
    return failure(tail, "replay ends at " + to_gauss_code(cur) + ", certificate claims " +
                             to_gauss_code(cert.end));
  }
  if (flips != cert.flip_count) {
    return failure(tail, "flip_count " + std::to_string(cert.flip_count) + " but " +
                             std::to_string(flips) + " flips replayed");
  }
  return {};
}

/// Joins a certificate from A to B with one from B to C.
inline Certificate concatenate(const Certificate& first, const Certificate& second) {
  if (canonical_key(first.end) != canonical_key(second.start)) {
    throw DiagramError("concatenate: certificates do not meet");
  }
  Certificate out{first.start, first.steps, second.end, first.flip_count + second.flip_count};
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

}  // namespace vknot

#endif  // VKNOT_CERTIFICATE_HPP
