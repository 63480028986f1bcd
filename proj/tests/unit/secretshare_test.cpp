#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include <array>
#include <vector>

#include "gcvs/coloring.hpp"
#include "gcvs/error.hpp"
#include "gcvs/secretshare.hpp"
#include "scripted_source.hpp"

using namespace gcvs;
using gcvs::testing::ScriptedSource;

namespace {

Graph kite_graph() { return Graph(4, {{1, 3}, {1, 4}, {2, 3}, {3, 4}}); }

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected gcvs::Error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(SecretShare, BinarySplitIsOneTimePad) {
  ScriptedSource rng{0, 1, 1, 0};
  const auto shares = kgh_split(SecretVector({1, 0, 1, 1}, 2), 2, rng);
  ASSERT_EQ(shares.size(), 2u);
  EXPECT_EQ(shares[0].digits, (Digits{0, 1, 1, 0}));
  EXPECT_EQ(shares[1].digits, (Digits{1, 1, 0, 1}));
  EXPECT_EQ(shares[1].index, 2u);
  EXPECT_EQ(shares[1].threshold, 2u);
}

TEST(SecretShare, ModFourSplit) {
  ScriptedSource rng{3, 3, 3};
  const auto shares = kgh_split(SecretVector({1, 2, 0}, 4), 2, rng);
  EXPECT_EQ(shares[1].digits, (Digits{2, 3, 1}));
  EXPECT_EQ(rng.remaining(), 0u);
}

TEST(SecretShare, ZeroDrawsLeaveSecretInLastShare) {
  ScriptedSource rng{0, 0, 0, 0, 0, 0};
  const auto shares = kgh_split(SecretVector({2, 1, 0}, 3), 3, rng);
  EXPECT_EQ(shares[2].digits, (Digits{2, 1, 0}));
}

TEST(SecretShare, CombineExamples) {
  const std::vector<KghShare> pair{{1, 2, 4, {1, 2, 0}}, {2, 2, 4, {3, 3, 3}}};
  EXPECT_EQ(kgh_combine(pair, 4).digits(), (Digits{0, 1, 3}));
  const std::vector<KghShare> zero{{1, 2, 3, {0, 0}}};
  EXPECT_EQ(kgh_combine(zero, 3).digits(), (Digits{0, 0}));
}

TEST(SecretShare, CombineErrors) {
  const std::vector<KghShare> lengths{{1, 2, 4, {1, 2}}, {2, 2, 4, {3}}};
  EXPECT_EQ(code_of([&] { kgh_combine(lengths, 4); }), ErrorCode::LengthMismatch);
  const std::vector<KghShare> moduli{{1, 2, 4, {1}}, {2, 2, 3, {1}}};
  EXPECT_EQ(code_of([&] { kgh_combine(moduli, 4); }), ErrorCode::ModulusMismatch);
}

TEST(SecretShare, SplitCombineIdentityRandomized) {
  SeededStream rng(21, "secretshare-test/identity", 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t t = 2 + rng.below(5);
    const std::uint32_t k = 2 + rng.below(3);
    const std::size_t eta = rng.below(13);
    Digits s(eta);
    for (auto& d : s) d = rng.below(k);
    const SecretVector secret(s, k);
    const auto shares = kgh_split(secret, t, rng);
    ASSERT_EQ(shares.size(), t);
    ASSERT_EQ(kgh_combine(shares, k), secret);
  }
}

TEST(SecretShare, SubsetMarginalIsUniform) {
  // k=2, eta=4, t=3: any two shares jointly take 2^8 values with equal
  // probability. Chi-square goodness of fit at significance 0.01.
  constexpr std::size_t kSamples = 10000;
  constexpr std::size_t kCells = 256;
  const SecretVector secret({1, 0, 1, 1}, 2);
  const double critical =
      boost::math::quantile(boost::math::chi_squared(kCells - 1), 0.99);
  for (const auto& subset : {std::array<std::size_t, 2>{0, 1}, std::array<std::size_t, 2>{0, 2},
                             std::array<std::size_t, 2>{1, 2}}) {
    SeededStream rng(99, "secretshare-test/privacy", subset[0] * 3 + subset[1]);
    std::vector<std::size_t> counts(kCells, 0);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const auto shares = kgh_split(secret, 3, rng);
      std::size_t cell = 0;
      for (std::size_t s : subset) {
        for (std::uint32_t d : shares[s].digits) cell = cell * 2 + d;
      }
      ++counts[cell];
    }
    const double expected = static_cast<double>(kSamples) / kCells;
    double stat = 0.0;
    for (std::size_t c : counts) stat += (c - expected) * (c - expected) / expected;
    EXPECT_LT(stat, critical) << "shares " << subset[0] + 1 << "+" << subset[1] + 1;
  }
}

TEST(SecretShare, KgheRoundTripAndExclusion) {
  const ExclusionSet excl(std::set<Digits>{{0, 0}});
  SeededStream rng(2);
  const auto shares = kghe_split(SecretVector({1, 2}, 3), 3, excl, rng);
  EXPECT_EQ(kghe_combine(shares, 3, excl).digits(), (Digits{1, 2}));

  EXPECT_EQ(code_of([&] { kghe_split(SecretVector({0, 0}, 3), 3, excl, rng); }),
            ErrorCode::ExcludedSecret);
  const std::vector<KghShare> to_zero{{1, 2, 3, {1, 2}}, {2, 2, 3, {2, 1}}};
  EXPECT_EQ(code_of([&] { kghe_combine(to_zero, 3, excl); }), ErrorCode::ExcludedSecret);
}

TEST(SecretShare, KgheMatchesKghOutsideExclusion) {
  const ExclusionSet excl([](std::span<const std::uint32_t> d) { return d[0] == 0; });
  const SecretVector secret({2, 1, 3}, 4);
  SeededStream a(8), b(8);
  EXPECT_EQ(kghe_split(secret, 4, excl, a), kgh_split(secret, 4, b));
}

TEST(SecretShare, ColoredRoundTripKite) {
  SeededStream rng(4, "secretshare-test/colored", 0);
  const Coloring c({0, 0, 2, 1}, 4);
  const auto shares = split_colored_graph(kite_graph(), c, 4, 4, rng);
  ASSERT_EQ(shares.size(), 4u);
  for (const auto& s : shares) {
    EXPECT_EQ(s.structure_modulus, 2u);
    EXPECT_EQ(s.structure.size(), 6u);
    EXPECT_EQ(s.colors.size(), 4u);
  }
  const CombinedGraph combined = combine_colored_graph(shares, 4);
  EXPECT_EQ(combined.graph, kite_graph());
  EXPECT_EQ(combined.coloring.digits(), c.digits());
}

TEST(SecretShare, ColoredTrivialGraph) {
  SeededStream rng(1);
  const auto shares = split_colored_graph(Graph(1), Coloring({0}, 2), 2, 2, rng);
  ASSERT_EQ(shares.size(), 2u);
  EXPECT_TRUE(shares[0].structure.empty());
  EXPECT_EQ(shares[0].colors.size(), 1u);
}

TEST(SecretShare, ColoredDeterministic) {
  SeededStream a(77), b(77);
  const Coloring c({0, 0, 2, 1}, 4);
  EXPECT_EQ(split_colored_graph(kite_graph(), c, 3, 4, a),
            split_colored_graph(kite_graph(), c, 3, 4, b));
}

TEST(SecretShare, IdenticalPairCombinesToEdgeless) {
  SeededStream rng(3);
  const auto shares = split_colored_graph(kite_graph(), Coloring({0, 0, 2, 1}, 4), 2, 4, rng);
  const std::vector<ColoredShare> twice{shares[0], shares[0]};
  const CombinedGraph combined = combine_colored_graph(twice, 4);
  EXPECT_EQ(combined.graph, Graph(4));
}

TEST(SecretShare, ColoredShapeMismatch) {
  SeededStream rng(3);
  const auto a = split_colored_graph(kite_graph(), Coloring({0, 0, 2, 1}, 4), 2, 4, rng);
  const auto b = split_colored_graph(Graph(3), Coloring({0, 0, 0}, 4), 2, 4, rng);
  const std::vector<ColoredShare> mixed{a[0], b[0]};
  EXPECT_EQ(code_of([&] { combine_colored_graph(mixed, 4); }), ErrorCode::ShapeMismatch);
}

TEST(SecretShare, UniformModulusMode) {
  SeededStream rng(6);
  ColoredSplitOptions options;
  options.uniform_modulus = true;
  const auto shares =
      split_colored_graph(kite_graph(), Coloring({0, 0, 2, 1}, 4), 4, 4, rng, options);
  EXPECT_EQ(shares[0].structure_modulus, 4u);
  EXPECT_EQ(combine_colored_graph(shares, 4).graph, kite_graph());

  ColoredShare odd = shares[0];
  odd.structure.assign(6, 2);
  const std::vector<ColoredShare> single{odd};
  EXPECT_EQ(code_of([&] { combine_colored_graph(single, 4); }),
            ErrorCode::NonBinaryStructureDigit);
}

TEST(SecretShare, ShareFileRoundTrip) {
  SeededStream rng(12);
  const auto shares = split_colored_graph(kite_graph(), Coloring({0, 0, 2, 1}, 12), 3, 12, rng);
  for (const auto& s : shares) EXPECT_EQ(parse_share(serialize_share(s)), s);
  const std::string text = serialize_share(shares[0]);
  EXPECT_EQ(text.rfind("GCVS1\nindex=1  t=3\nm=4  ext=0  n=3  k=12  ks=2\nS=", 0), 0u) << text;
}

TEST(SecretShare, ShareFileRejectsBrokenText) {
  const auto malformed = [](const std::string& text) {
    return code_of([&] { parse_share(text); }) == ErrorCode::Malformed;
  };
  const std::string good = "GCVS1\nindex=1  t=2\nm=3  ext=0  n=2  k=3  ks=2\nS=101\nC=012\n";
  EXPECT_NO_THROW(parse_share(good));
  EXPECT_TRUE(malformed("GCVS1\nindex=3  t=2\nm=3  ext=0  n=2  k=3  ks=2\nS=101\nC=012\n"));
  EXPECT_TRUE(malformed("GCVS1\nindex=1  t=2\nm=3  ext=0  n=2  k=3  ks=2\nS=10\nC=012\n"));
  EXPECT_TRUE(malformed("GCVS1\nindex=1  t=2\nm=3  ext=0  n=2  k=3  ks=2\nS=121\nC=012\n"));
  EXPECT_TRUE(malformed("GCVS1\nindex=1  t=2\nm=3  ext=0  n=2  k=3  ks=2\nS=101\nC=013\n"));
  EXPECT_TRUE(malformed("GCVS1\nindex=1  t=2\nm=3  ext=0  n=2  k=3  ks=5\nS=101\nC=012\n"));
  EXPECT_TRUE(malformed(good.substr(0, good.size() - 1)));
}
