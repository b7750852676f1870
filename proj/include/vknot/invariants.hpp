#ifndef VKNOT_INVARIANTS_HPP
#define VKNOT_INVARIANTS_HPP

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/poly.hpp"

namespace vknot {

/// Number of arcs between cyclically consecutive heads that contain at least
/// one tail. Zero exactly for the empty diagram.
inline int bridge_count(const GaussDiagram& d) {
  const auto eps = d.endpoints();
  const std::size_t len = eps.size();
  std::size_t first_head = len;
  for (std::size_t p = 0; p < len; ++p) {
    if (eps[p].role == Role::Head) {
      first_head = p;
      break;
    }
  }
  if (first_head == len) return 0;

  int bridges = 0;
  bool tail_seen = false;
  // Walk once around the circle starting just after a head; each head closes
  // the arc opened by the previous one.
  for (std::size_t k = 1; k <= len; ++k) {
    const auto& e = eps[(first_head + k) % len];
    if (e.role == Role::Tail) {
      tail_seen = true;
    } else {
      if (tail_seen) ++bridges;
      tail_seen = false;
    }
  }
  return bridges;
}

/// Which of the two arcs cut out by a chord is used for its index.
enum class ArcConvention {
  HeadToTail,  // positive direction from the chord's head to its tail
  TailToHead,
};

/// Index i(c): signed count of chords crossing c, each counted with its sign
/// if its head lies in the chosen arc and with the opposite sign otherwise.
inline int chord_index(const GaussDiagram& d, int c,
                       ArcConvention arc = ArcConvention::HeadToTail) {
  const std::size_t len = d.size();
  const std::size_t from = arc == ArcConvention::HeadToTail ? d.head_pos(c) : d.tail_pos(c);
  const std::size_t to = arc == ArcConvention::HeadToTail ? d.tail_pos(c) : d.head_pos(c);
  int idx = 0;
  for (int e = 1; e <= static_cast<int>(d.chord_count()); ++e) {
    if (e == c) continue;
    const bool head_in = in_open_arc(from, to, d.head_pos(e), len);
    const bool tail_in = in_open_arc(from, to, d.tail_pos(e), len);
    if (head_in == tail_in) continue;
    idx += head_in ? to_int(d.sign(e)) : -to_int(d.sign(e));
  }
  return idx;
}

/// n(c) = n_+(c) - n_-(c), computed on the diagram with every negative chord
/// flipped to positive.
inline int turaev_n(const GaussDiagram& d, int c) {
  const std::size_t len = d.size();
  const auto head = [&](int e) {
    return d.sign(e) == Sign::Plus ? d.head_pos(e) : d.tail_pos(e);
  };
  const auto tail = [&](int e) {
    return d.sign(e) == Sign::Plus ? d.tail_pos(e) : d.head_pos(e);
  };
  const std::size_t h = head(c);
  const std::size_t t = tail(c);
  int n_plus = 0;
  int n_minus = 0;
  for (int e = 1; e <= static_cast<int>(d.chord_count()); ++e) {
    if (e == c) continue;
    const bool head_pref = in_open_arc(h, t, head(e), len);
    const bool tail_pref = in_open_arc(h, t, tail(e), len);
    if (head_pref && !tail_pref) ++n_plus;
    if (tail_pref && !head_pref) ++n_minus;
  }
  return n_plus - n_minus;
}

struct ChordIndexEntry {
  int chord = 0;
  Sign sign = Sign::Plus;
  int i_value = 0;
  int n_value = 0;
};

inline std::vector<ChordIndexEntry> chord_report(const GaussDiagram& d) {
  std::vector<ChordIndexEntry> out;
  for (int c = 1; c <= static_cast<int>(d.chord_count()); ++c) {
    out.push_back({c, d.sign(c), chord_index(d, c), turaev_n(d, c)});
  }
  return out;
}

/// Henrich's P: sum over chords with i(c) != 0 of sign(c) t^|i(c)|.
inline SparsePoly henrich_P(const GaussDiagram& d) {
  SparsePoly p;
  for (int c = 1; c <= static_cast<int>(d.chord_count()); ++c) {
    const int i = chord_index(d, c);
    if (i != 0) p.add_term(std::abs(i), to_int(d.sign(c)));
  }
  return p;
}

/// Turaev's u: sum over chords with n(c) != 0 of sign(n(c)) t^|n(c)|.
inline SparsePoly turaev_u(const GaussDiagram& d) {
  SparsePoly u;
  for (int c = 1; c <= static_cast<int>(d.chord_count()); ++c) {
    const int n = turaev_n(d, c);
    if (n != 0) u.add_term(std::abs(n), n > 0 ? 1 : -1);
  }
  return u;
}

/// A lower bound on a number of flip moves, kept as the exact rational
/// halves / 2 together with its integer ceiling.
struct FlipBound {
  std::int64_t halves = 0;

  std::int64_t numerator() const noexcept { return halves % 2 == 0 ? halves / 2 : halves; }
  std::int64_t denominator() const noexcept { return halves % 2 == 0 ? 1 : 2; }
  std::int64_t ceil() const noexcept { return (halves + 1) / 2; }
  bool is_integer() const noexcept { return halves % 2 == 0; }

  friend bool operator==(const FlipBound&, const FlipBound&) = default;
};

inline FlipBound vu_lower_bound(const SparsePoly& p) { return {p.l1_norm()}; }

inline FlipBound rvu_lower_bound(const SparsePoly& p1, const SparsePoly& p2) {
  return vu_lower_bound(p1 - p2);
}

}  // namespace vknot

#endif  // VKNOT_INVARIANTS_HPP
