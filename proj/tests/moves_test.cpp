#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "support/random_diagrams.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"

namespace vknot {
namespace {

GaussDiagram code(const char* text) { return parse_gauss_code(text); }

TEST(Flip, Examples) {
  EXPECT_EQ(format_positional(flip(code("U1+,O1+"), 1)), "O1-,U1-");
  EXPECT_EQ(format_positional(flip(code("U1+,U2+,O1+,O2+"), 2)), "U1+,O2-,O1+,U2-");
  EXPECT_THROW(flip(code("U1+,O1+"), 2), DiagramError);
}

TEST(Flip, Involution) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = testing::random_diagram(rng, 1, 8);
    for (int c = 1; c <= static_cast<int>(d.chord_count()); ++c) EXPECT_EQ(flip(flip(d, c), c), d);
  }
}

TEST(R1, Examples) {
  EXPECT_TRUE(r1_delete(code("U1+,O1+"), 1).empty());
  EXPECT_EQ(format_positional(r1_insert(GaussDiagram{}, 0, true, Sign::Minus)), "U1-,O1-");
  EXPECT_THROW(r1_delete(code("U1+,U2+,O1+,O2+"), 1), DiagramError);
  // Adjacent across the basepoint.
  EXPECT_EQ(format_positional(r1_delete(code("U1+,U2-,O2-,O1+"), 1)), "U1-,O1-");
  EXPECT_THROW(r1_insert(code("U1+,O1+"), 2, true, Sign::Plus), DiagramError);
}

TEST(R1, DeleteUndoesInsert) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_diagram(rng, 0, 6);
    const int gaps = d.empty() ? 1 : static_cast<int>(d.size());
    for (int g = 0; g < gaps; ++g) {
      const auto grown = r1_insert(d, g, g % 2 == 0, Sign::Minus);
      const int fresh = grown.at(static_cast<std::size_t>(g)).chord;
      EXPECT_EQ(canonical_key(r1_delete(grown, fresh)), canonical_key(d));
    }
  }
}

TEST(R2, Examples) {
  EXPECT_TRUE(r2_delete(code("U1+,O2-,O1+,U2-"), 1, 2).empty());
  try {
    r2_delete(code("U1+,U2+,O1+,O2+"), 1, 2);
    FAIL();
  } catch (const DiagramError& e) {
    EXPECT_NE(std::string(e.what()).find("equal signs"), std::string::npos);
  }
  // A head next to a tail in each block is not a second move.
  EXPECT_THROW(r2_delete(code("U1+,O2-,U2-,O1+"), 1, 2), DiagramError);
  for (bool crossed : {false, true}) {
    const auto pair = r2_insert(GaussDiagram{}, 0, 0, crossed, Sign::Plus);
    EXPECT_EQ(pair.chord_count(), 2u);
    EXPECT_EQ(chords_link(pair, 1, 2), crossed);
    EXPECT_TRUE(r2_delete(pair, 1, 2).empty());
  }
}

TEST(R2, RejectsBadGaps) {
  const auto d = code("U1+,O1+");
  EXPECT_THROW(r2_insert(d, 0, 1, false, Sign::Plus), DiagramError);  // splits the tail block
  EXPECT_THROW(r2_insert(d, 0, 4, false, Sign::Plus), DiagramError);
  EXPECT_THROW(r2_insert(d, 2, 0, false, Sign::Plus), DiagramError);
}

TEST(R3, Example) {
  const auto d = code("O1+,O2+,U1+,O3+,U2+,U3+");
  EXPECT_TRUE(r3_applicable(d, {1, 2, 3}, 0));
  EXPECT_FALSE(r3_applicable(d, {1, 2, 3}, 1));  // every block would hold one tail
  const auto moved = r3(d, {1, 2, 3}, 0);
  EXPECT_EQ(format_positional(moved), "O1+,O2+,O3+,U2+,U3+,U1+");
  EXPECT_EQ(r3(moved, {1, 2, 3}, 0), d);
  // Same blocks, wrong sign pattern.
  EXPECT_THROW(r3(code("O1+,O2+,U1+,O3-,U2+,U3-"), {1, 2, 3}, 0), DiagramError);
}

TEST(R3, NotInAdjacentBlocks) {
  const auto d = code("O1+,U4+,O2+,U1+,O3+,U2+,U3+,O4+");
  EXPECT_FALSE(r3_applicable(d, {1, 2, 3}, 0));
  EXPECT_FALSE(r3_applicable(d, {1, 2, 3}, 1));
  EXPECT_THROW(r3(d, {1, 2, 3}, 0), DiagramError);
}

TEST(R3, InvolutionAndInvariance) {
  int applied = 0;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 4000 && applied < 300; ++trial) {
    const auto d = testing::random_diagram(rng, 3, 7);
    for (auto& [m, out] : enumerate_moves(d, d.chord_count(), MoveSet::ReidemeisterOnly)) {
      const auto* move = std::get_if<R3>(&m);
      if (!move) continue;
      ++applied;
      // Chords are renumbered in the result, so look for the inverse among
      // the R3 moves available there.
      bool back = false;
      for (auto& [m2, out2] : enumerate_moves(out, out.chord_count(), MoveSet::ReidemeisterOnly)) {
        if (std::holds_alternative<R3>(m2) && canonical_key(out2) == canonical_key(d)) back = true;
      }
      EXPECT_TRUE(back) << format_positional(d);
      EXPECT_EQ(henrich_P(out), henrich_P(d));
      EXPECT_EQ(turaev_u(out), turaev_u(d));
    }
  }
  EXPECT_GE(applied, 300);
}

TEST(R3, LegalPatternCountOnThreeChords) {
  // Per pairing: 8 of the 15 chord matchings of six points put two distinct
  // chords in every block; 6 of the 8 orientations give a top, middle and
  // bottom strand; the two block-order constraints keep 2 of the 8 sign
  // patterns. 8 * 6 * 2 = 96 per pairing.
  int legal = 0;
  for (const auto& d : testing::all_diagrams(3)) {
    for (int pairing : {0, 1}) {
      if (!r3_applicable(d, {1, 2, 3}, pairing)) continue;
      ++legal;
      const auto out = r3(d, {1, 2, 3}, pairing);
      // The swapped diagram is legal for the pairing occupying the same
      // positions.
      bool back = false;
      for (int q : {0, 1}) {
        if (r3_applicable(out, {1, 2, 3}, q) &&
            canonical_key(r3(out, {1, 2, 3}, q)) == canonical_key(d)) {
          back = true;
        }
      }
      EXPECT_TRUE(back) << format_positional(d);
    }
  }
  EXPECT_EQ(legal, 192);
}

TEST(EnumerateMoves, Examples) {
  EXPECT_TRUE(enumerate_moves(GaussDiagram{}, 0).empty());

  const auto one = enumerate_moves(code("U1+,O1+"), 1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].first, Move{Flip{1}});
  EXPECT_EQ(one[1].first, Move{R1Delete{1}});

  const auto inserts = enumerate_moves(GaussDiagram{}, 1);
  EXPECT_EQ(inserts.size(), 4u);
  std::set<std::string> results;
  for (const auto& [m, d] : inserts) {
    EXPECT_TRUE(std::holds_alternative<R1Insert>(m));
    results.insert(format_positional(d));
  }
  EXPECT_EQ(results, (std::set<std::string>{"U1+,O1+", "U1-,O1-", "O1+,U1+", "O1-,U1-"}));

  EXPECT_THROW(enumerate_moves(code("U1+,O1+"), 0), DiagramError);
}

TEST(EnumerateMoves, SortedAndDuplicateFree) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_diagram(rng, 0, 5);
    const auto moves = enumerate_moves(d, d.chord_count() + 2);
    for (std::size_t k = 1; k < moves.size(); ++k) EXPECT_LT(moves[k - 1].first, moves[k].first);
    const auto again = enumerate_moves(d, d.chord_count() + 2);
    ASSERT_EQ(again.size(), moves.size());
    for (std::size_t k = 0; k < moves.size(); ++k) {
      EXPECT_EQ(again[k].first, moves[k].first);
      EXPECT_EQ(again[k].second, moves[k].second);
    }
  }
}

TEST(EnumerateMoves, EveryMoveHasAnInverse) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = testing::random_diagram(rng, 0, 4);
    const auto key = canonical_key(d);
    const std::size_t cap = d.chord_count() + 2;
    for (const auto& [m, out] : enumerate_moves(d, cap)) {
      bool found = false;
      for (const auto& [back, res] : enumerate_moves(out, cap)) {
        if (is_flip(back) != is_flip(m)) continue;
        if (canonical_key(res) == key) {
          found = true;
          break;
        }
      }
      EXPECT_TRUE(found) << move_name(m) << " on " << format_positional(d);
    }
  }
}

TEST(EnumerateMoves, ReidemeisterOnlyOmitsFlips) {
  const auto d = k_family(2);
  for (const auto& [m, out] : enumerate_moves(d, 4, MoveSet::ReidemeisterOnly)) {
    EXPECT_FALSE(is_flip(m));
  }
}

}  // namespace
}  // namespace vknot
