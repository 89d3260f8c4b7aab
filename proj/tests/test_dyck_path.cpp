#include <gtest/gtest.h>

#include <random>
#include <string>

#include "naive.hpp"
#include "valleyforge/dyck_path.hpp"

using namespace valleyforge;

namespace {

errc error_code_of(const std::string& word) {
  try {
    parse_path(word);
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << word;
  return errc::domain_violation;
}

std::string power(const std::string& s, int m) {
  std::string out;
  for (int i = 0; i < m; ++i) out += s;
  return out;
}

}  // namespace

TEST(ParsePath, EmptyWordIsEmptyPath) {
  const auto p = parse_path("");
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p.semilength(), 0u);
  EXPECT_EQ(p, DyckPath{});
}

TEST(ParsePath, Accepts) {
  const auto p = parse_path("UUDD");
  EXPECT_EQ(p.semilength(), 2u);
  EXPECT_EQ(height(p), 2u);
  EXPECT_EQ(p.word(), "UUDD");
}

TEST(ParsePath, Errors) {
  EXPECT_EQ(error_code_of("UDDU"), errc::negative_prefix);
  EXPECT_EQ(error_code_of("D"), errc::negative_prefix);
  EXPECT_EQ(error_code_of("UUD"), errc::unbalanced_word);
  EXPECT_EQ(error_code_of("UxD"), errc::bad_symbol);
  EXPECT_EQ(error_code_of("ud"), errc::bad_symbol);
}

TEST(ParsePath, LongWordsCrossWordBoundaries) {
  // 200 steps spans four 64-bit words.
  const std::string w = power("U", 70) + power("DU", 15) + power("D", 70);
  const auto p = parse_path(w);
  EXPECT_EQ(p.word(), w);
  EXPECT_EQ(height(p), 70u);
  EXPECT_EQ(max_valley_run_at_height(p, 69), 15u);
}

TEST(ParsePath, RoundTripsEveryPathUpToSemilengthEight) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& w : naive::all_dyck_words(n)) EXPECT_EQ(parse_path(w).word(), w);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(parse_path("UDUD")), 1u);
  EXPECT_EQ(height(parse_path("UUDD")), 2u);
  EXPECT_EQ(height(parse_path("")), 0u);
}

TEST(ValleyRun, Examples) {
  EXPECT_EQ(max_valley_run_at_height(parse_path("UUDUDD"), 1), 1u);
  EXPECT_EQ(max_valley_run_at_height(parse_path("UUUUDUDUDDDD"), 3), 2u);
  EXPECT_EQ(max_valley_run_at_height(parse_path("UUDD"), 1), 0u);
  EXPECT_EQ(naive::valley_run("UUUUDUDUDDDD", 3), 2);
}

TEST(ValleyRun, NonAdjacentValleysDoNotChain) {
  // Two valleys at height 1 separated by a taller excursion.
  const auto p = parse_path("UUDUUDDUDD");
  EXPECT_EQ(max_valley_run_at_height(p, 1), 1u);
  EXPECT_EQ(naive::valley_run(p.word(), 1), 1);
}

TEST(ValleyRun, AgreesWithSubstringScannerExhaustively) {
  for (int n = 0; n <= 9; ++n)
    for (const auto& w : naive::all_dyck_words(n)) {
      const auto p = parse_path(w);
      for (int y = 0; y <= 5; ++y)
        ASSERT_EQ(max_valley_run_at_height(p, static_cast<std::size_t>(y)),
                  static_cast<std::size_t>(naive::valley_run(w, y)))
            << w << " y=" << y;
    }
}

TEST(ValleyRun, VanishesAtOrAboveTheTop) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& w : naive::all_dyck_words(n)) {
      const auto p = parse_path(w);
      for (auto y = height(p); y <= height(p) + 2; ++y)
        EXPECT_EQ(max_valley_run_at_height(p, y), 0u) << w;
    }
}

TEST(IsInClass, Examples) {
  const ClassParams p43(4, 3);
  EXPECT_TRUE(is_in_class(parse_path("UUDD"), p43));
  EXPECT_FALSE(is_in_class(parse_path("UUUUUDDDDD"), p43));
  const auto two_valleys = parse_path("UUUUDUDUDDDD");
  EXPECT_EQ(max_valley_run_at_height(two_valleys, 3), 2u);
  EXPECT_FALSE(is_in_class(two_valleys, p43));
  EXPECT_TRUE(is_in_class(DyckPath{}, p43));
}

TEST(IsInClass, KEqualsTwoMeansNoValleyJustBelowTheTop) {
  for (int h = 1; h <= 5; ++h) {
    const ClassParams p(h, 2);
    for (int n = 0; n <= 8; ++n)
      for (const auto& w : naive::all_dyck_words(n)) {
        const auto path = parse_path(w);
        bool valley_at_top = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
          if (w[i] == 'D' && w[i + 1] == 'U' && naive::ordinate_after(w, i) == h - 1)
            valley_at_top = true;
        EXPECT_EQ(is_in_class(path, p), naive::height(w) <= h && !valley_at_top) << w;
      }
  }
}

TEST(ClassParams, Support) {
  EXPECT_TRUE(ClassParams(3, 2).eco_supported());
  EXPECT_FALSE(ClassParams(2, 2).eco_supported());
  EXPECT_FALSE(ClassParams(3, 3).eco_supported());
  EXPECT_TRUE(ClassParams(4, 3).eco_supported());
  EXPECT_THROW(ClassParams(0, 3), error);
  EXPECT_THROW(ClassParams(4, 1), error);
}

TEST(Catalan, Examples) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(3), 5);
  EXPECT_EQ(catalan(10), 16796);
  // Closed form with exact binomials.
  for (int n = 0; n <= 30; ++n)
    EXPECT_EQ(catalan(static_cast<std::size_t>(n)), binomial(2 * n, n) / (n + 1)) << n;
}

TEST(Catalan, ConvolutionRecurrence) {
  for (std::size_t n = 0; n <= 30; ++n) {
    BigCount sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += catalan(i) * catalan(n - i);
    EXPECT_EQ(catalan(n + 1), sum) << n;
  }
}

TEST(Catalan, LargeValuesAreExact) {
  EXPECT_EQ(catalan(63).str(), "94295850558771979787935384946380125");
  EXPECT_EQ(catalan(100).str(), "896519947090131496687170070074100632420837521538745909320");
}

TEST(DyckPath, OrderIsLexicographicByWord) {
  std::mt19937 rng(7);
  const auto words = naive::all_dyck_words(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& a = words[rng() % words.size()];
    const auto& b = words[rng() % words.size()];
    EXPECT_EQ(parse_path(a) < parse_path(b), a < b);
  }
  EXPECT_LT(parse_path(""), parse_path("UD"));
  EXPECT_LT(parse_path("UD"), parse_path("UDUD"));
}

TEST(DyckPath, PeakInsertionAndRemoval) {
  const auto p = parse_path("UUDD");
  EXPECT_EQ(p.with_peak_at(0).word(), "UDUUDD");
  EXPECT_EQ(p.with_peak_at(2).word(), "UUUDDD");
  EXPECT_EQ(p.with_peak_at(4).word(), "UUDDUD");
  EXPECT_EQ(p.with_peak_at(2).without_peak_at(2), p);
}
