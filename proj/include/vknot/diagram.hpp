#ifndef VKNOT_DIAGRAM_HPP
#define VKNOT_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vknot {

/// Thrown when a diagram, move or parameter violates a structural invariant.
class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

inline constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
inline constexpr Sign negate(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
inline constexpr char sign_char(Sign s) noexcept {
  return s == Sign::Plus ? '+' : '-';
}

/// Head is the under-passing end of a chord, Tail the over-passing end.
enum class Role : std::uint8_t { Head = 0, Tail = 1 };

inline constexpr Role opposite(Role r) noexcept {
  return r == Role::Head ? Role::Tail : Role::Head;
}

struct Endpoint {
  int chord = 0;
  Role role = Role::Head;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

class GaussDiagram;
GaussDiagram validate(std::span<const Endpoint> endpoints,
                      const std::map<int, Sign>& signs);

/// A Gauss diagram: the cyclic sequence of chord endpoints read
/// counterclockwise around the core circle, plus one sign per chord.
///
/// Instances are always normalized: chord ids are 1..n, numbered by first
/// occurrence in the sequence. Construct through validate() or
/// parse_gauss_code().
class GaussDiagram {
 public:
  GaussDiagram() = default;

  std::size_t chord_count() const noexcept { return signs_.size(); }
  std::size_t size() const noexcept { return seq_.size(); }
  bool empty() const noexcept { return seq_.empty(); }

  std::span<const Endpoint> endpoints() const noexcept { return seq_; }
  const Endpoint& at(std::size_t pos) const { return seq_.at(pos); }

  bool has_chord(int c) const noexcept {
    return c >= 1 && static_cast<std::size_t>(c) <= signs_.size();
  }
  Sign sign(int c) const { return signs_.at(check(c) - 1); }
  std::size_t head_pos(int c) const { return pos_.at(check(c) - 1)[0]; }
  std::size_t tail_pos(int c) const { return pos_.at(check(c) - 1)[1]; }
  std::size_t pos(int c, Role r) const {
    return r == Role::Head ? head_pos(c) : tail_pos(c);
  }

  /// Positionwise equality (same basepoint, same numbering).
  friend bool operator==(const GaussDiagram& a, const GaussDiagram& b) {
    return a.seq_ == b.seq_ && a.signs_ == b.signs_;
  }

 private:
  friend GaussDiagram validate(std::span<const Endpoint>,
                               const std::map<int, Sign>&);

  int check(int c) const {
    if (!has_chord(c)) {
      throw DiagramError("chord " + std::to_string(c) + " is not present");
    }
    return c;
  }

  std::vector<Endpoint> seq_;
  std::vector<Sign> signs_;
  std::vector<std::array<std::size_t, 2>> pos_;
};

/// Checks the chord structure of a raw endpoint sequence and returns the
/// normalized diagram (chords renumbered 1..n by first occurrence).
inline GaussDiagram validate(std::span<const Endpoint> endpoints,
                             const std::map<int, Sign>& signs) {
  struct Seen {
    int heads = 0;
    int tails = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& e : endpoints) {
    auto& s = seen[e.chord];
    (e.role == Role::Head ? s.heads : s.tails) += 1;
  }
  for (const auto& [c, s] : seen) {
    const std::string name = "chord " + std::to_string(c);
    if (s.heads + s.tails == 1) throw DiagramError(name + " appears once");
    if (s.heads + s.tails > 2) {
      throw DiagramError(name + " appears more than twice");
    }
    if (s.heads == 2) throw DiagramError(name + " has two heads");
    if (s.tails == 2) throw DiagramError(name + " has two tails");
    if (!signs.contains(c)) throw DiagramError(name + " has no sign");
  }
  for (const auto& [c, s] : signs) {
    if (!seen.contains(c)) {
      throw DiagramError("chord " + std::to_string(c) +
                         " has a sign but no endpoints");
    }
  }

  GaussDiagram d;
  const std::size_t n = seen.size();
  d.seq_.reserve(endpoints.size());
  d.signs_.reserve(n);
  d.pos_.assign(n, {0, 0});
  std::map<int, int> relabel;
  for (std::size_t p = 0; p < endpoints.size(); ++p) {
    const auto& e = endpoints[p];
    auto [it, fresh] = relabel.emplace(e.chord, static_cast<int>(relabel.size()) + 1);
    if (fresh) d.signs_.push_back(signs.at(e.chord));
    d.seq_.push_back({it->second, e.role});
    d.pos_[it->second - 1][e.role == Role::Head ? 0 : 1] = p;
  }
  return d;
}

/// Builds a diagram from an endpoint sequence and a sign vector indexed by
/// chord id - 1.
inline GaussDiagram make_diagram(std::span<const Endpoint> endpoints,
                                 std::span<const Sign> signs_by_id) {
  std::map<int, Sign> signs;
  for (std::size_t i = 0; i < signs_by_id.size(); ++i) {
    signs.emplace(static_cast<int>(i) + 1, signs_by_id[i]);
  }
  return validate(endpoints, signs);
}

/// Moves the basepoint k positions forward: position k becomes position 0.
inline GaussDiagram rotate(const GaussDiagram& d, std::size_t k) {
  const auto eps = d.endpoints();
  if (eps.empty()) return d;
  std::vector<Endpoint> out(eps.size());
  for (std::size_t p = 0; p < eps.size(); ++p) {
    out[p] = eps[(p + k) % eps.size()];
  }
  std::map<int, Sign> signs;
  for (int c = 1; c <= static_cast<int>(d.chord_count()); ++c) {
    signs.emplace(c, d.sign(c));
  }
  return validate(out, signs);
}

/// Basepoint-free identity of a diagram: the lexicographically least token
/// stream over all rotations, with chords renumbered by first occurrence.
/// Tokens order by (id, Head < Tail, + < -).
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint32_t> tokens)
      : tokens_(std::move(tokens)) {}

  static constexpr std::uint32_t token(int id, Role r, Sign s) noexcept {
    return (static_cast<std::uint32_t>(id) << 2) |
           (static_cast<std::uint32_t>(r) << 1) |
           (s == Sign::Plus ? 0u : 1u);
  }
  static constexpr int token_id(std::uint32_t t) noexcept {
    return static_cast<int>(t >> 2);
  }
  static constexpr Role token_role(std::uint32_t t) noexcept {
    return (t & 2u) ? Role::Tail : Role::Head;
  }
  static constexpr Sign token_sign(std::uint32_t t) noexcept {
    return (t & 1u) ? Sign::Minus : Sign::Plus;
  }

  std::span<const std::uint32_t> tokens() const noexcept { return tokens_; }
  bool empty() const noexcept { return tokens_.empty(); }

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::vector<std::uint32_t> tokens_;
};

namespace detail {

// Token stream of the rotation starting at `start`, ids renumbered by first
// occurrence. `scratch` maps old id -> new id and must be zero-filled.
inline void rotation_tokens(const GaussDiagram& d, std::size_t start,
                            std::vector<int>& scratch,
                            std::vector<std::uint32_t>& out) {
  const auto eps = d.endpoints();
  const std::size_t len = eps.size();
  std::fill(scratch.begin(), scratch.end(), 0);
  out.clear();
  int next = 1;
  for (std::size_t k = 0; k < len; ++k) {
    const auto& e = eps[(start + k) % len];
    int& id = scratch[e.chord];
    if (id == 0) id = next++;
    out.push_back(CanonicalKey::token(id, e.role, d.sign(e.chord)));
  }
}

// Rotation offset giving the canonical token stream (smallest offset on ties).
inline std::size_t canonical_offset(const GaussDiagram& d,
                                    std::vector<std::uint32_t>* best_out) {
  const auto eps = d.endpoints();
  if (eps.empty()) {
    if (best_out) best_out->clear();
    return 0;
  }
  // Every rotation starts with chord id 1, so only rotations whose first
  // endpoint has the least (role, sign) pair can win.
  std::uint32_t lead = ~0u;
  for (const auto& e : eps) {
    lead = std::min(lead, CanonicalKey::token(1, e.role, d.sign(e.chord)));
  }
  std::vector<int> scratch(d.chord_count() + 1, 0);
  std::vector<std::uint32_t> best, cur;
  std::size_t best_off = 0;
  for (std::size_t s = 0; s < eps.size(); ++s) {
    if (CanonicalKey::token(1, eps[s].role, d.sign(eps[s].chord)) != lead) continue;
    rotation_tokens(d, s, scratch, cur);
    if (best.empty() || cur < best) {
      best.swap(cur);
      best_off = s;
    }
  }
  if (best_out) *best_out = std::move(best);
  return best_off;
}

}  // namespace detail

inline CanonicalKey canonical_key(const GaussDiagram& d) {
  std::vector<std::uint32_t> tokens;
  detail::canonical_offset(d, &tokens);
  return CanonicalKey(std::move(tokens));
}

/// The rotation of `d` whose positional token stream equals its canonical key.
inline GaussDiagram canonical_form(const GaussDiagram& d) {
  const std::size_t off = detail::canonical_offset(d, nullptr);
  return off == 0 ? d : rotate(d, off);
}

/// Rebuilds a diagram from a canonical key's token stream.
inline GaussDiagram from_key(const CanonicalKey& key) {
  std::vector<Endpoint> eps;
  std::map<int, Sign> signs;
  for (auto t : key.tokens()) {
    eps.push_back({CanonicalKey::token_id(t), CanonicalKey::token_role(t)});
    signs[CanonicalKey::token_id(t)] = CanonicalKey::token_sign(t);
  }
  return validate(eps, signs);
}

/// True iff position `p` lies strictly inside the arc running in the positive
/// direction from position `from` to position `to`.
inline bool in_open_arc(std::size_t from, std::size_t to, std::size_t p,
                        std::size_t len) noexcept {
  const std::size_t a = (p + len - from) % len;
  const std::size_t b = (to + len - from) % len;
  return a > 0 && a < b;
}

/// True iff the endpoints of chords c and d alternate around the circle.
inline bool chords_link(const GaussDiagram& D, int c, int d) {
  if (c == d) throw DiagramError("chords_link needs two distinct chords");
  const std::size_t len = D.size();
  const bool h = in_open_arc(D.head_pos(c), D.tail_pos(c), D.head_pos(d), len);
  const bool t = in_open_arc(D.head_pos(c), D.tail_pos(c), D.tail_pos(d), len);
  return h != t;
}

inline bool adjacent(std::size_t a, std::size_t b, std::size_t len) noexcept {
  return len > 1 && ((a + 1) % len == b || (b + 1) % len == a);
}

}  // namespace vknot

template <>
struct std::hash<vknot::CanonicalKey> {
  std::size_t operator()(const vknot::CanonicalKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto t : k.tokens()) {
      h ^= t;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

#endif  // VKNOT_DIAGRAM_HPP
