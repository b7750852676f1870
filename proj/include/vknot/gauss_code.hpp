#ifndef VKNOT_GAUSS_CODE_HPP
#define VKNOT_GAUSS_CODE_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

/// Malformed Gauss code. `position()` is the 0-based character offset of the
/// offending token (or of the failure point for syntax errors).
class ParseError : public DiagramError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DiagramError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Gauss code text form:
//
//   diagram := "" | token ("," token)*
//   token   := ("O" | "U") label ("+" | "-")
//
// O is the over-pass (arrow tail), U the under-pass (arrow head). Each label
// occurs exactly twice, once as O and once as U, with the same sign.
inline GaussDiagram parse_gauss_code(std::string_view text) {
  const auto is_space = [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
  };
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };

  struct Occ {
    std::size_t where;
    Role role;
    Sign sign;
  };
  std::vector<Endpoint> eps;
  std::map<int, std::vector<Occ>> occ;

  skip_ws();
  if (i == text.size()) return GaussDiagram{};

  while (true) {
    skip_ws();
    const std::size_t start = i;
    if (i == text.size()) throw ParseError("expected token", i);
    Role role;
    if (text[i] == 'O') {
      role = Role::Tail;
    } else if (text[i] == 'U') {
      role = Role::Head;
    } else {
      throw ParseError(std::string("expected 'O' or 'U', found '") + text[i] + "'", i);
    }
    ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected chord label", i);
    }
    long long label = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      label = label * 10 + (text[i] - '0');
      if (label > 1'000'000'000) throw ParseError("chord label too large", start + 1);
      ++i;
    }
    if (label < 1) throw ParseError("chord label must be >= 1", start + 1);
    if (i == text.size() || (text[i] != '+' && text[i] != '-')) {
      throw ParseError("expected sign '+' or '-'", i);
    }
    const Sign sign = text[i] == '+' ? Sign::Plus : Sign::Minus;
    ++i;
    eps.push_back({static_cast<int>(label), role});
    occ[static_cast<int>(label)].push_back({start, role, sign});

    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }

  std::map<int, Sign> signs;
  for (const auto& [label, list] : occ) {
    const std::string name = "chord " + std::to_string(label);
    if (list.size() == 1) throw ParseError(name + " appears once", list[0].where);
    if (list.size() > 2) {
      throw ParseError(name + " appears more than twice", list[2].where);
    }
    if (list[0].sign != list[1].sign) {
      throw ParseError(name + " sign mismatch", list[1].where);
    }
    if (list[0].role == list[1].role) {
      throw ParseError(name + (list[0].role == Role::Head ? " has two heads"
                                                          : " has two tails"),
                       list[1].where);
    }
    signs.emplace(label, list[0].sign);
  }
  return validate(eps, signs);
}

/// Gauss code of `d` exactly as stored (no rotation).
inline std::string format_positional(const GaussDiagram& d) {
  std::string out;
  for (const auto& e : d.endpoints()) {
    if (!out.empty()) out += ',';
    out += e.role == Role::Head ? 'U' : 'O';
    out += std::to_string(e.chord);
    out += sign_char(d.sign(e.chord));
  }
  return out;
}

inline std::string to_string(const CanonicalKey& key) {
  std::string out;
  for (auto t : key.tokens()) {
    if (!out.empty()) out += ',';
    out += CanonicalKey::token_role(t) == Role::Head ? 'U' : 'O';
    out += std::to_string(CanonicalKey::token_id(t));
    out += sign_char(CanonicalKey::token_sign(t));
  }
  return out;
}

/// Gauss code starting at the canonical rotation.
inline std::string to_gauss_code(const GaussDiagram& d) {
  return to_string(canonical_key(d));
}

}  // namespace vknot

#endif  // VKNOT_GAUSS_CODE_HPP
