#ifndef VKNOT_JSON_IO_HPP
#define VKNOT_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "vknot/certificate.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {

using json = nlohmann::json;

namespace detail {

inline std::string sign_str(Sign s) { return std::string(1, sign_char(s)); }

inline Sign sign_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw DiagramError("bad sign '" + s + "'");
}

}  // namespace detail

inline json move_params(const Move& m) {
  struct Visitor {
    json operator()(const Flip& f) const { return {{"chord", f.chord}}; }
    json operator()(const R1Insert& m) const {
      return {{"gap", m.gap}, {"head_first", m.head_first}, {"sign", detail::sign_str(m.sign)}};
    }
    json operator()(const R1Delete& m) const { return {{"chord", m.chord}}; }
    json operator()(const R2Insert& m) const {
      return {{"tail_gap", m.tail_gap},
              {"head_gap", m.head_gap},
              {"crossed", m.crossed},
              {"sign", detail::sign_str(m.sign)}};
    }
    json operator()(const R2Delete& m) const {
      return {{"chords", json::array({m.first, m.second})}};
    }
    json operator()(const R3& m) const {
      return {{"chords", json::array({m.chords[0], m.chords[1], m.chords[2]})},
              {"pairing", m.pairing}};
    }
  };
  return std::visit(Visitor{}, m);
}

inline Move move_from_json(const std::string& kind, const json& p) {
  if (kind == "Flip") return Flip{p.at("chord").get<int>()};
  if (kind == "R1Insert") {
    return R1Insert{p.at("gap").get<int>(), p.at("head_first").get<bool>(),
                    detail::sign_from(p.at("sign"))};
  }
  if (kind == "R1Delete") return R1Delete{p.at("chord").get<int>()};
  if (kind == "R2Insert") {
    return R2Insert{p.at("tail_gap").get<int>(), p.at("head_gap").get<int>(),
                    p.at("crossed").get<bool>(), detail::sign_from(p.at("sign"))};
  }
  if (kind == "R2Delete") {
    const auto& c = p.at("chords");
    if (c.size() != 2) throw DiagramError("R2Delete needs two chords");
    return R2Delete{c.at(0).get<int>(), c.at(1).get<int>()};
  }
  if (kind == "R3") {
    const auto& c = p.at("chords");
    if (c.size() != 3) throw DiagramError("R3 needs three chords");
    return R3{{c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()},
              p.at("pairing").get<int>()};
  }
  throw DiagramError("unknown move kind '" + kind + "'");
}

inline json to_json(const Certificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"move", move_name(s.move)},
                     {"params", move_params(s.move)},
                     {"key", to_string(s.key)}});
  }
  return {{"start", to_gauss_code(cert.start)},
          {"steps", std::move(steps)},
          {"end", to_gauss_code(cert.end)},
          {"flip_count", cert.flip_count}};
}

/// Throws DiagramError (or ParseError) on structurally bad input; move
/// legality and keys are left to verify_certificate().
inline Certificate certificate_from_json(const json& j) {
  try {
    Certificate cert;
    cert.start = parse_gauss_code(j.at("start").get<std::string>());
    cert.end = parse_gauss_code(j.at("end").get<std::string>());
    cert.flip_count = j.at("flip_count").get<int>();
    for (const auto& s : j.at("steps")) {
      const auto key_diagram = parse_gauss_code(s.at("key").get<std::string>());
      cert.steps.push_back({move_from_json(s.at("move").get<std::string>(), s.at("params")),
                            canonical_key(key_diagram)});
    }
    return cert;
  } catch (const json::exception& e) {
    throw DiagramError(std::string("malformed certificate: ") + e.what());
  }
}

inline json invariants_json(const GaussDiagram& d) {
  json chords = json::array();
  for (const auto& e : chord_report(d)) {
    chords.push_back({{"chord", e.chord},
                      {"sign", detail::sign_str(e.sign)},
                      {"i", e.i_value},
                      {"n", e.n_value}});
  }
  const auto bound = vu_lower_bound(henrich_P(d));
  return {{"gauss_code", to_gauss_code(d)},
          {"chord_count", d.chord_count()},
          {"bridge", bridge_count(d)},
          {"chords", std::move(chords)},
          {"P", to_string(henrich_P(d))},
          {"u", to_string(turaev_u(d))},
          {"vu_lower", {{"numerator", bound.numerator()},
                        {"denominator", bound.denominator()},
                        {"ceil", bound.ceil()}}}};
}

}  // namespace vknot

#endif  // VKNOT_JSON_IO_HPP
