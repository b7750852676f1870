#ifndef VKNOT_MOVES_HPP
#define VKNOT_MOVES_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

// Move parameters refer to the chord ids and positions of the diagram the
// move is applied to. Gaps are insertion points: gap g sits just before
// position g (gap 0 is the only gap of the empty diagram).

/// Reverse a chord and negate its sign.
struct Flip {
  int chord = 0;
  auto operator<=>(const Flip&) const = default;
};

/// Add an isolated chord whose endpoints are adjacent.
struct R1Insert {
  int gap = 0;
  bool head_first = true;
  Sign sign = Sign::Plus;
  auto operator<=>(const R1Insert&) const = default;
};

struct R1Delete {
  int chord = 0;
  auto operator<=>(const R1Delete&) const = default;
};

/// Add two chords of opposite signs whose tails form one adjacent block and
/// whose heads form another. The tail block goes into `tail_gap` of the
/// original diagram; the head block goes into `head_gap` of the diagram that
/// already holds the tail block. The first tail's chord gets `sign`, the
/// other `-sign`. `crossed` makes the head block list the chords in the same
/// order as the tail block (the chords then link).
struct R2Insert {
  int tail_gap = 0;
  int head_gap = 0;
  bool crossed = false;
  Sign sign = Sign::Plus;
  auto operator<=>(const R2Insert&) const = default;
};

struct R2Delete {
  int first = 0;
  int second = 0;
  auto operator<=>(const R2Delete&) const = default;
};

/// Swap the endpoints inside each of three adjacent two-endpoint blocks.
/// With the six endpoints sorted by position s0..s5, `pairing` 0 blocks them
/// as (s0,s1)(s2,s3)(s4,s5) and pairing 1 as (s1,s2)(s3,s4)(s5,s0).
struct R3 {
  std::array<int, 3> chords{};
  int pairing = 0;
  auto operator<=>(const R3&) const = default;
};

/// Alternative order is the deterministic enumeration order.
using Move = std::variant<Flip, R1Insert, R1Delete, R2Insert, R2Delete, R3>;

inline bool is_flip(const Move& m) noexcept { return std::holds_alternative<Flip>(m); }

inline const char* move_name(const Move& m) {
  static constexpr const char* names[] = {"Flip",     "R1Insert", "R1Delete",
                                          "R2Insert", "R2Delete", "R3"};
  return names[m.index()];
}

namespace detail {

struct Builder {
  std::vector<Endpoint> eps;
  std::map<int, Sign> signs;

  explicit Builder(const GaussDiagram& d) : eps(d.endpoints().begin(), d.endpoints().end()) {
    for (int c = 1; c <= static_cast<int>(d.chord_count()); ++c) signs.emplace(c, d.sign(c));
  }

  int fresh_id() const { return signs.empty() ? 1 : signs.rbegin()->first + 1; }

  void erase_chords(std::initializer_list<int> chords) {
    std::erase_if(eps, [&](const Endpoint& e) {
      return std::find(chords.begin(), chords.end(), e.chord) != chords.end();
    });
    for (int c : chords) signs.erase(c);
  }

  GaussDiagram build() const { return validate(eps, signs); }
};

inline void check_gap(int gap, std::size_t len, const char* what) {
  const std::size_t gaps = len == 0 ? 1 : len;
  if (gap < 0 || static_cast<std::size_t>(gap) >= gaps) {
    throw DiagramError(std::string(what) + ": gap " + std::to_string(gap) +
                       " out of range");
  }
}

}  // namespace detail

inline GaussDiagram flip(const GaussDiagram& d, int c) {
  const Sign s = d.sign(c);
  detail::Builder b(d);
  b.signs.at(c) = negate(s);
  b.eps[d.head_pos(c)].role = Role::Tail;
  b.eps[d.tail_pos(c)].role = Role::Head;
  return b.build();
}

inline bool r1_deletable(const GaussDiagram& d, int c) {
  return adjacent(d.head_pos(c), d.tail_pos(c), d.size());
}

inline GaussDiagram r1_delete(const GaussDiagram& d, int c) {
  if (!r1_deletable(d, c)) {
    throw DiagramError("r1_delete: endpoints of chord " + std::to_string(c) +
                       " are not adjacent");
  }
  detail::Builder b(d);
  b.erase_chords({c});
  return b.build();
}

inline GaussDiagram r1_insert(const GaussDiagram& d, int gap, bool head_first, Sign sign) {
  detail::check_gap(gap, d.size(), "r1_insert");
  detail::Builder b(d);
  const int id = b.fresh_id();
  const Endpoint first{id, head_first ? Role::Head : Role::Tail};
  const Endpoint second{id, head_first ? Role::Tail : Role::Head};
  b.eps.insert(b.eps.begin() + gap, {first, second});
  b.signs.emplace(id, sign);
  return b.build();
}

/// True iff chords c and d form a removable second-move pair: opposite signs,
/// tails adjacent and heads adjacent.
inline bool r2_deletable(const GaussDiagram& d, int c, int e) {
  if (c == e || !d.has_chord(c) || !d.has_chord(e)) return false;
  if (d.sign(c) == d.sign(e)) return false;
  const std::size_t len = d.size();
  return adjacent(d.tail_pos(c), d.tail_pos(e), len) &&
         adjacent(d.head_pos(c), d.head_pos(e), len);
}

inline GaussDiagram r2_delete(const GaussDiagram& d, int c, int e) {
  if (c == e) throw DiagramError("r2_delete: chords must be distinct");
  if (d.sign(c) == d.sign(e)) {
    throw DiagramError("r2_delete: chords " + std::to_string(c) + " and " +
                       std::to_string(e) + " have equal signs");
  }
  if (!r2_deletable(d, c, e)) {
    throw DiagramError("r2_delete: chords " + std::to_string(c) + " and " +
                       std::to_string(e) + " do not form adjacent head and tail blocks");
  }
  detail::Builder b(d);
  b.erase_chords({c, e});
  return b.build();
}

inline GaussDiagram r2_insert(const GaussDiagram& d, int tail_gap, int head_gap,
                              bool crossed, Sign sign) {
  detail::check_gap(tail_gap, d.size(), "r2_insert");
  const std::size_t mid = d.size() + 2;
  if (head_gap < 0 || static_cast<std::size_t>(head_gap) >= mid || head_gap == tail_gap + 1) {
    throw DiagramError("r2_insert: head gap " + std::to_string(head_gap) + " out of range");
  }
  detail::Builder b(d);
  const int a = b.fresh_id();
  const int c = a + 1;
  b.eps.insert(b.eps.begin() + tail_gap, {Endpoint{a, Role::Tail}, Endpoint{c, Role::Tail}});
  const Endpoint h1{crossed ? a : c, Role::Head};
  const Endpoint h2{crossed ? c : a, Role::Head};
  b.eps.insert(b.eps.begin() + head_gap, {h1, h2});
  b.signs.emplace(a, sign);
  b.signs.emplace(c, negate(sign));
  return b.build();
}

namespace detail {

struct R3Blocks {
  // Positions of each block's endpoints in circle order.
  std::array<std::array<std::size_t, 2>, 3> pos{};
};

// Splits the six endpoints of three chords into adjacent mixed blocks.
inline bool r3_blocks(const GaussDiagram& d, const std::array<int, 3>& chords, int pairing,
                      R3Blocks& out, std::string* why) {
  const auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (pairing != 0 && pairing != 1) return fail("pairing must be 0 or 1");
  if (chords[0] == chords[1] || chords[1] == chords[2] || chords[0] == chords[2]) {
    return fail("chords must be distinct");
  }
  std::array<std::size_t, 6> s{};
  std::size_t k = 0;
  for (int c : chords) {
    s[k++] = d.head_pos(c);
    s[k++] = d.tail_pos(c);
  }
  std::sort(s.begin(), s.end());
  const std::size_t len = d.size();
  for (std::size_t b = 0; b < 3; ++b) {
    const std::size_t first = s[(2 * b + pairing) % 6];
    const std::size_t second = s[(2 * b + pairing + 1) % 6];
    if ((first + 1) % len != second) return fail("endpoints are not in three adjacent blocks");
    if (d.at(first).chord == d.at(second).chord) return fail("a block holds both ends of one chord");
    out.pos[b] = {first, second};
  }
  return true;
}

// Realizability of the local picture: the block with two tails is the top
// strand, the one with two heads the bottom. With blocks numbered 0,1,2,
// sigma_i = +1 when block i first meets the chord it shares with block i+1,
// and c(i,j) = sign(chord) if the chord's tail is in block i, else -sign.
// A planar triangle of three oriented lines admits exactly the patterns with
// sigma_0 c(0,1) = sigma_2 c(1,2) and sigma_1 c(1,2) = sigma_0 c(2,0).
inline bool r3_legal_pattern(const GaussDiagram& d, const R3Blocks& blk, std::string* why) {
  std::array<int, 3> tails{};
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t p : blk.pos[b]) tails[b] += d.at(p).role == Role::Tail ? 1 : 0;
  }
  std::array<int, 3> sorted = tails;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) {
    if (why) *why = "role pattern is cyclic (no top/middle/bottom strand)";
    return false;
  }
  const auto shared = [&](std::size_t i, std::size_t j) {
    for (std::size_t p : blk.pos[i]) {
      for (std::size_t q : blk.pos[j]) {
        if (d.at(p).chord == d.at(q).chord) return d.at(p).chord;
      }
    }
    return 0;
  };
  const auto crossing = [&](std::size_t i, std::size_t j) {
    const int c = shared(i, j);
    const bool tail_in_i = d.tail_pos(c) == blk.pos[i][0] || d.tail_pos(c) == blk.pos[i][1];
    return tail_in_i ? to_int(d.sign(c)) : -to_int(d.sign(c));
  };
  std::array<int, 3> sigma{};
  for (std::size_t i = 0; i < 3; ++i) {
    sigma[i] = d.at(blk.pos[i][0]).chord == shared(i, (i + 1) % 3) ? 1 : -1;
  }
  const bool ok = sigma[0] * crossing(0, 1) == sigma[2] * crossing(1, 2) &&
                  sigma[1] * crossing(1, 2) == sigma[0] * crossing(2, 0);
  if (!ok && why) *why = "orientation and sign pattern is not a third move";
  return ok;
}

}  // namespace detail

inline bool r3_applicable(const GaussDiagram& d, const std::array<int, 3>& chords,
                          int pairing, std::string* why = nullptr) {
  for (int c : chords) {
    if (!d.has_chord(c)) {
      if (why) *why = "chord " + std::to_string(c) + " is not present";
      return false;
    }
  }
  detail::R3Blocks blk;
  return detail::r3_blocks(d, chords, pairing, blk, why) &&
         detail::r3_legal_pattern(d, blk, why);
}

inline GaussDiagram r3(const GaussDiagram& d, std::array<int, 3> chords, int pairing) {
  std::string why;
  if (!r3_applicable(d, chords, pairing, &why)) throw DiagramError("r3: " + why);
  detail::R3Blocks blk;
  detail::r3_blocks(d, chords, pairing, blk, nullptr);
  detail::Builder b(d);
  for (const auto& [p, q] : blk.pos) std::swap(b.eps[p], b.eps[q]);
  return b.build();
}

inline GaussDiagram apply(const GaussDiagram& d, const Move& m) {
  struct Visitor {
    const GaussDiagram& d;
    GaussDiagram operator()(const Flip& f) const { return flip(d, f.chord); }
    GaussDiagram operator()(const R1Insert& m) const {
      return r1_insert(d, m.gap, m.head_first, m.sign);
    }
    GaussDiagram operator()(const R1Delete& m) const { return r1_delete(d, m.chord); }
    GaussDiagram operator()(const R2Insert& m) const {
      return r2_insert(d, m.tail_gap, m.head_gap, m.crossed, m.sign);
    }
    GaussDiagram operator()(const R2Delete& m) const { return r2_delete(d, m.first, m.second); }
    GaussDiagram operator()(const R3& m) const { return r3(d, m.chords, m.pairing); }
  };
  return std::visit(Visitor{d}, m);
}

enum class MoveSet { All, ReidemeisterOnly };

/// Every move applicable to `d` whose result has at most `max_chords` chords,
/// paired with its result, in Move order.
inline std::vector<std::pair<Move, GaussDiagram>> enumerate_moves(
    const GaussDiagram& d, std::size_t max_chords, MoveSet set = MoveSet::All) {
  const int n = static_cast<int>(d.chord_count());
  if (max_chords < d.chord_count()) {
    throw DiagramError("enumerate_moves: max_chords below current chord count");
  }
  std::vector<Move> moves;
  if (set == MoveSet::All) {
    for (int c = 1; c <= n; ++c) moves.emplace_back(Flip{c});
  }
  if (d.chord_count() + 1 <= max_chords) {
    const int gaps = d.empty() ? 1 : static_cast<int>(d.size());
    for (int g = 0; g < gaps; ++g) {
      for (bool head_first : {false, true}) {
        for (Sign s : {Sign::Plus, Sign::Minus}) moves.emplace_back(R1Insert{g, head_first, s});
      }
    }
  }
  for (int c = 1; c <= n; ++c) {
    if (r1_deletable(d, c)) moves.emplace_back(R1Delete{c});
  }
  if (d.chord_count() + 2 <= max_chords) {
    const int gaps = d.empty() ? 1 : static_cast<int>(d.size());
    const int mid = static_cast<int>(d.size()) + 2;
    for (int tg = 0; tg < gaps; ++tg) {
      for (int hg = 0; hg < mid; ++hg) {
        if (hg == tg + 1) continue;
        for (bool crossed : {false, true}) {
          for (Sign s : {Sign::Plus, Sign::Minus}) moves.emplace_back(R2Insert{tg, hg, crossed, s});
        }
      }
    }
  }
  for (int c = 1; c <= n; ++c) {
    for (int e = c + 1; e <= n; ++e) {
      if (r2_deletable(d, c, e)) moves.emplace_back(R2Delete{c, e});
    }
  }
  if (n >= 3) {
    // Only chords with an endpoint next to another chord's endpoint can take
    // part in a third move.
    std::vector<bool> candidate(n + 1, false);
    const std::size_t len = d.size();
    for (std::size_t p = 0; p < len; ++p) {
      const auto& a = d.at(p);
      const auto& b = d.at((p + 1) % len);
      if (a.chord != b.chord) candidate[a.chord] = candidate[b.chord] = true;
    }
    for (int a = 1; a <= n; ++a) {
      if (!candidate[a]) continue;
      for (int b = a + 1; b <= n; ++b) {
        if (!candidate[b]) continue;
        for (int c = b + 1; c <= n; ++c) {
          if (!candidate[c]) continue;
          for (int pairing : {0, 1}) {
            if (r3_applicable(d, {a, b, c}, pairing)) moves.emplace_back(R3{{a, b, c}, pairing});
          }
        }
      }
    }
  }
  std::sort(moves.begin(), moves.end());

  std::vector<std::pair<Move, GaussDiagram>> out;
  out.reserve(moves.size());
  for (const auto& m : moves) out.emplace_back(m, vknot::apply(d, m));
  return out;
}

}  // namespace vknot

#endif  // VKNOT_MOVES_HPP
