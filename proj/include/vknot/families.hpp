#ifndef VKNOT_FAMILIES_HPP
#define VKNOT_FAMILIES_HPP

#include <map>
#include <string>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

/// The trivial diagram with no chords.
inline GaussDiagram unknot() { return GaussDiagram{}; }

/// K_i: 2i positive chords, all heads in one block followed by all tails in
/// the same chord order. Chord 2i carries the last head and chord 1 the
/// first, so flipping 2i and cancelling it against 1 gives K_{i-1}.
inline GaussDiagram k_family(int i) {
  if (i < 0) throw DiagramError("k_family: i must be >= 0");
  std::vector<Endpoint> eps;
  std::map<int, Sign> signs;
  for (int c = 1; c <= 2 * i; ++c) {
    eps.push_back({c, Role::Head});
    signs.emplace(c, Sign::Plus);
  }
  for (int c = 1; c <= 2 * i; ++c) eps.push_back({c, Role::Tail});
  return validate(eps, signs);
}

/// Chord ids of kpq_family(p, q, n) before normalization, for replaying
/// moves against particular geometric chords.
struct KpqLayout {
  int p = 0;
  int q = 0;
  int n = 0;

  int horizontal(int k) const { return k; }             // h_1..h_q
  int vertical(int k) const { return q + k; }           // v_1..v_p
  int near_vertical(int k) const { return q + p + k; }  // dV_1..dV_n
  int near_horizontal(int k) const { return q + p + n + k; }  // dH_1..dH_n
};

/// Endpoint sequence of K_n^{p,q} with the ids of KpqLayout, read
/// counterclockwise from the positive x-axis. Horizontal chords point right,
/// vertical chords point up; parallel chords of one group are nested. Each
/// near-vertical diagonal runs from the fourth quadrant arc to the second,
/// each near-horizontal one the other way, and index k grows with the
/// distance from the diagonal's axis.
inline std::vector<Endpoint> kpq_layout_endpoints(int p, int q, int n) {
  if (p < 1 || q < 1 || n < 0) {
    throw DiagramError("kpq_family: need p >= 1, q >= 1, n >= 0");
  }
  const KpqLayout L{p, q, n};
  std::vector<Endpoint> eps;
  for (int k = 1; k <= q; ++k) eps.push_back({L.horizontal(k), Role::Head});
  for (int k = 1; k <= p; ++k) eps.push_back({L.vertical(k), Role::Head});
  // second quadrant
  for (int k = 1; k <= n; ++k) eps.push_back({L.near_vertical(k), Role::Head});
  for (int k = n; k >= 1; --k) eps.push_back({L.near_horizontal(k), Role::Tail});
  for (int k = q; k >= 1; --k) eps.push_back({L.horizontal(k), Role::Tail});
  for (int k = p; k >= 1; --k) eps.push_back({L.vertical(k), Role::Tail});
  // fourth quadrant
  for (int k = 1; k <= n; ++k) eps.push_back({L.near_vertical(k), Role::Tail});
  for (int k = n; k >= 1; --k) eps.push_back({L.near_horizontal(k), Role::Head});
  return eps;
}

/// K_n^{p,q}: p vertical, q horizontal and 2n diagonal positive chords.
inline GaussDiagram kpq_family(int p, int q, int n) {
  const auto eps = kpq_layout_endpoints(p, q, n);
  std::map<int, Sign> signs;
  for (const auto& e : eps) signs.emplace(e.chord, Sign::Plus);
  return validate(eps, signs);
}

/// Normalized chord id in kpq_family(p, q, n) of the chord with KpqLayout id
/// `layout_id`.
inline int kpq_chord_id(int p, int q, int n, int layout_id) {
  const auto eps = kpq_layout_endpoints(p, q, n);
  const auto d = kpq_family(p, q, n);
  for (std::size_t pos = 0; pos < eps.size(); ++pos) {
    if (eps[pos].chord == layout_id) return d.at(pos).chord;
  }
  throw DiagramError("kpq_chord_id: no chord " + std::to_string(layout_id));
}

/// Which family a diagram was generated from.
struct FamilySpec {
  enum class Kind { Ki, Kpqn };
  Kind kind = Kind::Ki;
  int i = 0;
  int p = 0;
  int q = 0;
  int n = 0;

  static FamilySpec ki(int i) { return {Kind::Ki, i, 0, 0, 0}; }
  static FamilySpec kpqn(int p, int q, int n) { return {Kind::Kpqn, 0, p, q, n}; }

  GaussDiagram generate() const {
    return kind == Kind::Ki ? k_family(i) : kpq_family(p, q, n);
  }
};

}  // namespace vknot

#endif  // VKNOT_FAMILIES_HPP
