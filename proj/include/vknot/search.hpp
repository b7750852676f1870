#ifndef VKNOT_SEARCH_HPP
#define VKNOT_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include "vknot/certificate.hpp"
#include "vknot/diagram.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {

class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caps for a search. Intermediate diagrams never exceed `max_chords`;
/// paths with more than `max_flips` flips are pruned; the search gives up
/// once more than `max_states` distinct diagrams have been stored.
///
/// The search is single-threaded, so results are always reproducible;
/// `deterministic` is kept for callers that record the requested mode.
struct SearchBudget {
  int max_chords = 0;
  int max_flips = 0;
  std::int64_t max_states = 1'000'000;
  bool deterministic = true;

  void check() const {
    if (max_chords < 0 || max_flips < 0 || max_states < 0) {
      throw BudgetError("search budget caps must be non-negative");
    }
  }
};

struct SearchStats {
  std::size_t expanded = 0;
  std::size_t generated = 0;
  std::size_t stored = 0;
  std::size_t frontier = 0;
  int max_f_reached = 0;
};

struct NotFound {
  std::string reason;
  SearchStats stats;
};

using SearchResult = std::variant<Certificate, NotFound>;

namespace detail {

enum class SearchMode { Homotopy, Isotopy };

// Best-first search over canonical diagrams. Flip edges cost 1, Reidemeister
// edges 0. In homotopy mode the guide is ceil(|P(x) - P(goal)|_1 / 2): one
// flip changes one coefficient of P by 2 and Reidemeister moves keep P, so
// the guide never drops by more than an edge costs and the first time the
// goal is popped its flip count is minimal.
class FlipCostSearch {
 public:
  FlipCostSearch(const GaussDiagram& from, const GaussDiagram& to, const SearchBudget& budget,
                 SearchMode mode)
      : from_(from), to_(to), budget_(budget), mode_(mode) {}

  SearchResult run() {
    budget_.check();
    const auto limit = static_cast<std::size_t>(budget_.max_chords);
    if (from_.chord_count() > limit || to_.chord_count() > limit) {
      throw BudgetError("max_chords is below the chord count of an endpoint diagram");
    }
    goal_ = canonical_key(to_);
    goal_P_ = henrich_P(to_);
    const auto start_P = henrich_P(from_);

    if (turaev_u(from_) != turaev_u(to_)) {
      return NotFound{"turaev_u differs: the diagrams are not homotopic", stats_};
    }
    if (mode_ == SearchMode::Isotopy && start_P != goal_P_) {
      return NotFound{"henrich_P differs: the diagrams are not isotopic", stats_};
    }
    if (mode_ == SearchMode::Homotopy &&
        rvu_lower_bound(start_P, goal_P_).ceil() > budget_.max_flips) {
      return NotFound{"henrich_P lower bound exceeds max_flips", stats_};
    }

    const auto start = canonical_form(from_);
    add_node(canonical_key(start), start, 0, guide(start), npos, std::nullopt);

    const MoveSet moves = mode_ == SearchMode::Homotopy ? MoveSet::All : MoveSet::ReidemeisterOnly;
    while (!open_.empty()) {
      const Entry top = open_.top();
      open_.pop();
      Node& node = nodes_[top.node];
      if (top.g != node.g || node.closed) continue;
      node.closed = true;
      stats_.max_f_reached = std::max(stats_.max_f_reached, top.f);
      if (node.key == goal_) return certificate(top.node);

      ++stats_.expanded;
      const GaussDiagram here = node.diagram;
      const int g_here = node.g;
      for (auto& [move, result] : enumerate_moves(here, limit, moves)) {
        ++stats_.generated;
        const int g = g_here + (is_flip(move) ? 1 : 0);
        if (g > budget_.max_flips) continue;
        auto canon = canonical_form(result);
        auto key = canonical_key(canon);
        auto it = index_.find(key);
        if (it == index_.end()) {
          const int h = guide(canon);
          if (g + h > budget_.max_flips) continue;
          add_node(std::move(key), std::move(canon), g, h, top.node, move);
        } else if (g < nodes_[it->second].g) {
          Node& seen = nodes_[it->second];
          seen.g = g;
          seen.parent = top.node;
          seen.move = move;
          seen.closed = false;
          push(it->second);
        }
      }
      if (nodes_.size() > static_cast<std::size_t>(budget_.max_states)) {
        stats_.frontier = open_.size();
        stats_.stored = nodes_.size();
        return NotFound{"max_states exhausted", stats_};
      }
    }
    stats_.stored = nodes_.size();
    return NotFound{"search space within max_chords/max_flips exhausted", stats_};
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    CanonicalKey key;
    GaussDiagram diagram;
    int g = 0;
    int h = 0;
    std::size_t parent = npos;
    std::optional<Move> move;
    bool closed = false;
  };

  struct Entry {
    int f;
    int h;
    int size_gap;
    std::uint64_t seq;
    int g;
    std::size_t node;

    bool operator>(const Entry& o) const {
      return std::tie(f, h, size_gap, seq) > std::tie(o.f, o.h, o.size_gap, o.seq);
    }
  };

  int guide(const GaussDiagram& d) const {
    if (mode_ == SearchMode::Isotopy) return 0;
    return static_cast<int>(rvu_lower_bound(henrich_P(d), goal_P_).ceil());
  }

  void add_node(CanonicalKey key, GaussDiagram diagram, int g, int h, std::size_t parent,
                std::optional<Move> move) {
    const std::size_t id = nodes_.size();
    index_.emplace(key, id);
    nodes_.push_back({std::move(key), std::move(diagram), g, h, parent, std::move(move), false});
    push(id);
  }

  void push(std::size_t id) {
    const Node& n = nodes_[id];
    const int gap = std::abs(static_cast<int>(n.diagram.chord_count()) -
                             static_cast<int>(to_.chord_count()));
    open_.push(Entry{n.g + n.h, n.h, gap, seq_++, n.g, id});
  }

  Certificate certificate(std::size_t goal) const {
    std::vector<CertificateStep> steps;
    int flips = 0;
    for (std::size_t k = goal; nodes_[k].parent != npos; k = nodes_[k].parent) {
      steps.push_back({*nodes_[k].move, nodes_[k].key});
      if (is_flip(*nodes_[k].move)) ++flips;
    }
    std::reverse(steps.begin(), steps.end());
    return Certificate{from_, std::move(steps), to_, flips};
  }

  const GaussDiagram& from_;
  const GaussDiagram& to_;
  SearchBudget budget_;
  SearchMode mode_;
  CanonicalKey goal_;
  SparsePoly goal_P_;
  std::vector<Node> nodes_;
  std::unordered_map<CanonicalKey, std::size_t> index_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open_;
  std::uint64_t seq_ = 0;
  SearchStats stats_;
};

}  // namespace detail

/// Minimum-flip homotopy from d1 to d2 within the budget.
inline SearchResult find_homotopy(const GaussDiagram& d1, const GaussDiagram& d2,
                                  const SearchBudget& budget) {
  return detail::FlipCostSearch(d1, d2, budget, detail::SearchMode::Homotopy).run();
}

/// Reidemeister-only path from d1 to d2 within the budget.
inline SearchResult find_isotopy(const GaussDiagram& d1, const GaussDiagram& d2,
                                 const SearchBudget& budget) {
  return detail::FlipCostSearch(d1, d2, budget, detail::SearchMode::Isotopy).run();
}

/// True when the certificate's flip count meets the lower bound from P, which
/// makes it the exact relative unknotting number.
inline bool is_exact(const Certificate& cert) {
  return rvu_lower_bound(henrich_P(cert.start), henrich_P(cert.end)).ceil() == cert.flip_count;
}

enum class VuStatus {
  Exact,            // lower bound met by a certificate
  UpperBoundOnly,   // certificate found but above the lower bound
  Unknown,          // no certificate within budget
  NotHomotopicallyTrivial,  // turaev_u != 0, vu is undefined
};

inline const char* to_string(VuStatus s) {
  switch (s) {
    case VuStatus::Exact: return "EXACT";
    case VuStatus::UpperBoundOnly: return "UPPER_BOUND_ONLY";
    case VuStatus::Unknown: return "UNKNOWN";
    case VuStatus::NotHomotopicallyTrivial: return "NOT_HOMOTOPIC_TO_UNKNOT";
  }
  return "?";
}

struct VuCertification {
  VuStatus status = VuStatus::Unknown;
  FlipBound bound;
  std::int64_t lower = 0;
  std::optional<int> upper;
  std::optional<Certificate> certificate;
  std::string note;
};

inline VuCertification certify_vu(const GaussDiagram& d, const SearchBudget& budget) {
  VuCertification out;
  out.bound = vu_lower_bound(henrich_P(d));
  out.lower = out.bound.ceil();
  if (!turaev_u(d).is_zero()) {
    out.status = VuStatus::NotHomotopicallyTrivial;
    out.note = "turaev_u = " + to_string(turaev_u(d)) + " is nonzero";
    return out;
  }
  auto result = find_homotopy(d, unknot(), budget);
  if (auto* cert = std::get_if<Certificate>(&result)) {
    out.upper = cert->flip_count;
    out.status = cert->flip_count == out.lower ? VuStatus::Exact : VuStatus::UpperBoundOnly;
    out.certificate = std::move(*cert);
  } else {
    out.note = std::get<NotFound>(result).reason;
  }
  return out;
}

}  // namespace vknot

#endif  // VKNOT_SEARCH_HPP
