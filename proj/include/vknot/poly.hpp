#ifndef VKNOT_POLY_HPP
#define VKNOT_POLY_HPP

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "vknot/diagram.hpp"

namespace vknot {

/// Integer polynomial in t with terms of degree >= 1 only. Zero
/// coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  SparsePoly() = default;
  SparsePoly(std::initializer_list<std::pair<const int, std::int64_t>> terms) {
    for (const auto& [deg, coeff] : terms) add_term(deg, coeff);
  }

  void add_term(int degree, std::int64_t coeff) {
    if (degree < 1) {
      throw DiagramError("polynomial degree must be >= 1, got " +
                         std::to_string(degree));
    }
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(degree, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Sum of absolute values of the coefficients.
  std::int64_t l1_norm() const noexcept {
    std::int64_t s = 0;
    for (const auto& [deg, c] : terms_) s += std::llabs(c);
    return s;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [deg, c] : o.terms_) add_term(deg, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [deg, c] : o.terms_) add_term(deg, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return SparsePoly{} - a; }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Terms terms_;
};

/// Ascending degree, explicit coefficients: "2t^1 + 1t^2 - 1t^4"; "0" when zero.
inline std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [deg, c] : p.terms()) {
    const std::string mono = std::to_string(std::llabs(c)) + "t^" + std::to_string(deg);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + mono;
    } else {
      out += (c < 0 ? " - " : " + ") + mono;
    }
  }
  return out;
}

}  // namespace vknot

#endif  // VKNOT_POLY_HPP
