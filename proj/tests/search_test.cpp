#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/random_diagrams.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/search.hpp"

namespace vknot {
namespace {

SearchBudget budget(int max_chords, int max_flips, std::int64_t max_states = 200'000) {
  return SearchBudget{max_chords, max_flips, max_states, true};
}

Certificate expect_found(const SearchResult& r) {
  if (const auto* nf = std::get_if<NotFound>(&r)) ADD_FAILURE() << "not found: " << nf->reason;
  return std::get<Certificate>(r);
}

TEST(FindHomotopy, IdenticalDiagrams) {
  const auto d = k_family(2);
  const auto r = find_homotopy(d, rotate(d, 3), budget(4, 4));
  const auto& cert = expect_found(r);
  EXPECT_TRUE(cert.steps.empty());
  EXPECT_EQ(cert.flip_count, 0);
}

TEST(FindHomotopy, K1ToUnknotNeedsOneFlip) {
  const auto r = find_homotopy(k_family(1), unknot(), budget(2, 1));
  const auto& cert = expect_found(r);
  EXPECT_EQ(cert.flip_count, 1);
  EXPECT_EQ(cert.steps.size(), 2u);
  EXPECT_TRUE(verify_certificate(cert).ok);
  EXPECT_TRUE(is_exact(cert));
}

TEST(FindHomotopy, Kpq122ToKpq121) {
  const auto r = find_homotopy(kpq_family(1, 2, 2), kpq_family(1, 2, 1), budget(7, 1));
  const auto& cert = expect_found(r);
  EXPECT_EQ(cert.flip_count, 1);
  EXPECT_TRUE(verify_certificate(cert).ok);
  EXPECT_TRUE(is_exact(cert));
}

TEST(FindHomotopy, DifferentUIsNotFound) {
  const auto r = find_homotopy(kpq_family(1, 2, 0), unknot(), budget(3, 5));
  ASSERT_TRUE(std::holds_alternative<NotFound>(r));
  EXPECT_NE(std::get<NotFound>(r).reason.find("turaev_u"), std::string::npos);
}

TEST(FindHomotopy, FlipCapBelowLowerBound) {
  const auto r = find_homotopy(k_family(2), unknot(), budget(4, 1));
  ASSERT_TRUE(std::holds_alternative<NotFound>(r));
}

TEST(FindHomotopy, StateCap) {
  const auto r = find_homotopy(parse_gauss_code("U1+,O2+,U3-,O1+,U2+,O3-"),
                               parse_gauss_code("U1+,O1+"), budget(5, 6, 50));
  ASSERT_TRUE(std::holds_alternative<NotFound>(r));
  EXPECT_EQ(std::get<NotFound>(r).reason, "max_states exhausted");
  EXPECT_GT(std::get<NotFound>(r).stats.expanded, 0u);
}

TEST(FindHomotopy, BudgetErrors) {
  EXPECT_THROW(find_homotopy(k_family(2), unknot(), budget(3, 2)), BudgetError);
  EXPECT_THROW(find_homotopy(unknot(), unknot(), budget(0, -1)), BudgetError);
}

TEST(FindIsotopy, Examples) {
  const auto d = kpq_family(1, 2, 1);
  const auto& same = expect_found(find_isotopy(d, rotate(d, 5), budget(5, 0)));
  EXPECT_TRUE(same.steps.empty());

  const auto kink = r1_insert(unknot(), 0, false, Sign::Minus);
  const auto& one = expect_found(find_isotopy(kink, unknot(), budget(1, 0)));
  EXPECT_EQ(one.steps.size(), 1u);
  EXPECT_EQ(one.flip_count, 0);

  const auto pair = r2_insert(unknot(), 0, 0, true, Sign::Plus);
  const auto& two = expect_found(find_isotopy(pair, unknot(), budget(2, 0)));
  EXPECT_EQ(two.steps.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<R2Delete>(two.steps[0].move));
}

TEST(FindIsotopy, DifferentPIsNotFound) {
  const auto r = find_isotopy(k_family(1), unknot(), budget(4, 0));
  ASSERT_TRUE(std::holds_alternative<NotFound>(r));
}

TEST(FindIsotopy, TwoKinks) {
  // Two isolated chords of opposite orientation.
  const auto d = parse_gauss_code("U1+,O1+,O2-,U2-");
  const auto& c = expect_found(find_isotopy(d, unknot(), budget(3, 0)));
  EXPECT_EQ(c.flip_count, 0);
  EXPECT_TRUE(verify_certificate(c).ok);
}

TEST(CertifyVu, Unknot) {
  const auto v = certify_vu(unknot(), budget(0, 0));
  EXPECT_EQ(v.status, VuStatus::Exact);
  EXPECT_EQ(v.lower, 0);
  EXPECT_EQ(v.upper, 0);
  ASSERT_TRUE(v.certificate);
  EXPECT_TRUE(v.certificate->steps.empty());
}

TEST(CertifyVu, KFamily) {
  for (int i = 1; i <= 3; ++i) {
    const auto v = certify_vu(k_family(i), budget(2 * i, i));
    EXPECT_EQ(v.status, VuStatus::Exact) << v.note;
    EXPECT_EQ(v.lower, i);
    EXPECT_EQ(v.upper, i);
    ASSERT_TRUE(v.certificate);
    EXPECT_TRUE(verify_certificate(*v.certificate).ok);
  }
}

TEST(CertifyVu, KpqIsNotHomotopicToUnknot) {
  const auto v = certify_vu(kpq_family(1, 2, 0), budget(3, 3));
  EXPECT_EQ(v.status, VuStatus::NotHomotopicallyTrivial);
  EXPECT_FALSE(v.upper);
}

TEST(Search, MatchesBruteForceOnSmallDiagrams) {
  std::mt19937_64 rng(99);
  int compared = 0, found = 0;
  while (compared < 14) {
    const auto a = testing::random_diagram(rng, 0, 3);
    const auto b = testing::random_diagram(rng, 0, 2);
    const auto oracle = testing::brute_min_flips(a, b, 4);
    const auto r = find_homotopy(a, b, budget(4, 64, 1'000'000));
    ++compared;
    if (!oracle) {
      EXPECT_TRUE(std::holds_alternative<NotFound>(r))
          << format_positional(a) << " -> " << format_positional(b);
      continue;
    }
    ++found;
    const auto* cert = std::get_if<Certificate>(&r);
    ASSERT_NE(cert, nullptr) << format_positional(a) << " -> " << format_positional(b);
    EXPECT_EQ(cert->flip_count, *oracle) << format_positional(a) << " -> " << format_positional(b);
    EXPECT_TRUE(verify_certificate(*cert).ok);
    EXPECT_GE(cert->flip_count, rvu_lower_bound(henrich_P(a), henrich_P(b)).ceil());
  }
  EXPECT_GT(found, 3);
}

TEST(Search, TriangleThroughConcatenation) {
  const auto a = kpq_family(1, 2, 2);
  const auto b = kpq_family(1, 2, 1);
  const auto c = kpq_family(1, 2, 0);
  const auto& ab = expect_found(find_homotopy(a, b, budget(7, 2)));
  const auto& bc = expect_found(find_homotopy(b, c, budget(7, 2)));
  const auto joined = concatenate(ab, bc);
  EXPECT_TRUE(verify_certificate(joined).ok);
  EXPECT_EQ(joined.flip_count, ab.flip_count + bc.flip_count);
  EXPECT_THROW(concatenate(bc, ab), DiagramError);
}

TEST(Search, Deterministic) {
  const auto run = [] {
    return std::get<Certificate>(find_homotopy(k_family(2), unknot(), budget(4, 2)));
  };
  const auto first = run();
  const auto second = run();
  ASSERT_EQ(first.steps.size(), second.steps.size());
  for (std::size_t k = 0; k < first.steps.size(); ++k) {
    EXPECT_EQ(first.steps[k].move, second.steps[k].move);
    EXPECT_EQ(first.steps[k].key, second.steps[k].key);
  }
}

}  // namespace
}  // namespace vknot
