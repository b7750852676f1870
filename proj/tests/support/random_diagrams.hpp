#ifndef VKNOT_TESTS_RANDOM_DIAGRAMS_HPP
#define VKNOT_TESTS_RANDOM_DIAGRAMS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot::testing {

/// Uniform random chord layout with n chords, random orientations and signs.
inline GaussDiagram random_diagram(std::mt19937_64& rng, int n) {
  std::vector<int> slots;
  for (int c = 1; c <= n; ++c) {
    slots.push_back(c);
    slots.push_back(c);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::map<int, bool> head_first;
  std::map<int, Sign> signs;
  for (int c = 1; c <= n; ++c) {
    head_first[c] = coin(rng);
    signs[c] = coin(rng) ? Sign::Plus : Sign::Minus;
  }
  std::map<int, bool> seen;
  std::vector<Endpoint> eps;
  for (int c : slots) {
    const bool first = !seen[c];
    seen[c] = true;
    const bool head = first == head_first[c];
    eps.push_back({c, head ? Role::Head : Role::Tail});
  }
  return validate(eps, signs);
}

inline GaussDiagram random_diagram(std::mt19937_64& rng, int min_chords, int max_chords) {
  std::uniform_int_distribution<int> pick(min_chords, max_chords);
  return random_diagram(rng, pick(rng));
}

}  // namespace vknot::testing

#endif  // VKNOT_TESTS_RANDOM_DIAGRAMS_HPP
