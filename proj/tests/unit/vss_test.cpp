#include <gtest/gtest.h>

#include "gcvs/error.hpp"
#include "gcvs/vss.hpp"

using namespace gcvs;

namespace {

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

const Graph kTriangle = complete_graph(3);
const Coloring kTriangleColors({0, 1, 2}, 4);

}  // namespace

TEST(Vss, VsosValidation) {
  EXPECT_EQ(Vsos({3, 1}).members(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(Vsos({3, 1, 4}).label(), "1+3+4");
  EXPECT_THROW(Vsos({1}), Error);
  EXPECT_THROW(Vsos({2, 2}), Error);
  EXPECT_THROW(Vsos({0, 1}), Error);
  EXPECT_THROW(VerificationStructure(3, {Vsos({1, 4})}), Error);
  EXPECT_THROW(VerificationStructure(3, {}), Error);
}

TEST(Vss, StructureBuilders) {
  EXPECT_EQ(pairwise_structure(4).size(), 6u);
  EXPECT_EQ(pairwise_structure(2).size(), 1u);
  EXPECT_EQ(pairwise_structure(3).size(), 3u);
  EXPECT_EQ(full_structure(4).sets(), (std::vector<Vsos>{Vsos({1, 2, 3, 4})}));
  EXPECT_EQ(VerificationStructure(3, {Vsos({1, 2}), Vsos({2, 1})}).size(), 1u);
}

TEST(Vss, ParseStructure) {
  const auto vs = parse_structure("# comment\n1,2\n3+4\n\n1 2 3  # trailing\n", 4);
  EXPECT_EQ(vs.sets(), (std::vector<Vsos>{Vsos({1, 2}), Vsos({1, 2, 3}), Vsos({3, 4})}));
  EXPECT_THROW(parse_structure("1,x\n", 4), Error);
  EXPECT_THROW(parse_structure("", 4), Error);
}

TEST(Vss, StrategyNames) {
  EXPECT_EQ(parse_strategy("sequential"), DealStrategy::Sequential);
  EXPECT_EQ(strategy_name(DealStrategy::Rejection), "rejection");
  EXPECT_FALSE(parse_strategy("greedy").has_value());
}

TEST(Vss, DealTrianglePairwise) {
  const auto vs = pairwise_structure(4);
  const DealResult r = deal(kTriangle, kTriangleColors, 4, 4, vs, 42);
  ASSERT_EQ(r.shares.size(), 4u);
  EXPECT_GE(r.attempts, 1u);
  const RoundReport report = verify_structure(r.shares, vs);
  EXPECT_TRUE(report.positive());
  EXPECT_EQ(report.entries.size(), 6u);
  const CombinedGraph back = recover_secret(r.shares, 4);
  EXPECT_EQ(back.graph, kTriangle);
  EXPECT_EQ(back.coloring.digits(), kTriangleColors.digits());
}

TEST(Vss, DealIsDeterministicAndJobIndependent) {
  const auto vs = pairwise_structure(4);
  const DealResult a = deal(kTriangle, kTriangleColors, 4, 4, vs, 7);
  const DealResult b = deal(kTriangle, kTriangleColors, 4, 4, vs, 7);
  DealOptions threaded;
  threaded.jobs = 3;
  const DealResult c = deal(kTriangle, kTriangleColors, 4, 4, vs, 7, threaded);
  EXPECT_EQ(a.shares, b.shares);
  EXPECT_EQ(a.attempts, b.attempts);
  EXPECT_EQ(a.shares, c.shares);
  EXPECT_EQ(a.attempts, c.attempts);
}

TEST(Vss, DealFullStructureFirstAttempt) {
  const DealResult r = deal(kTriangle, kTriangleColors, 4, 4, full_structure(4), 3);
  EXPECT_EQ(r.attempts, 1u);
}

TEST(Vss, DealExhausted) {
  DealOptions options;
  options.max_retries = 0;
  std::size_t exhausted = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    try {
      deal(kTriangle, kTriangleColors, 4, 4, pairwise_structure(4), seed, options);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DealerExhausted);
      ++exhausted;
    }
  }
  EXPECT_GT(exhausted, 0u);
}

TEST(Vss, DealRejectsImproperSecret) {
  EXPECT_EQ(code_of([] {
              deal(kTriangle, Coloring({0, 0, 2}, 4), 4, 4, pairwise_structure(4), 1);
            }),
            ErrorCode::InvalidSecret);
}

TEST(Vss, SequentialDealerLargerSecret) {
  // 6 vertices, chromatic number 3.
  const Envelope e = encode("110101100101011");
  ASSERT_EQ(e.palette, 3u);
  const Graph g = envelope_graph(e);
  const Coloring c(e.check_digits, 3);
  DealOptions options;
  options.strategy = DealStrategy::Sequential;
  const auto vs = pairwise_structure(4);
  const DealResult r = deal(g, c, 4, 3, vs, 5, options);
  EXPECT_TRUE(verify_structure(r.shares, vs).positive());
  const CombinedGraph back = recover_secret(r.shares, 3);
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.coloring.digits(), c.digits());
  EXPECT_EQ(deal(g, c, 4, 3, vs, 5, options).shares, r.shares);
}

TEST(Vss, VerifyRoundFixtures) {
  const DealResult r = deal(kTriangle, kTriangleColors, 4, 4, pairwise_structure(4), 42);
  const std::vector<ColoredShare> pair{r.shares[0], r.shares[1]};
  EXPECT_EQ(verify_round(pair, 4), VerifyOutcome::Positive);

  // Combined structure is the single edge {1,2}; both endpoints colored 1.
  ColoredShare a = r.shares[0];
  ColoredShare b = r.shares[1];
  a.structure = {1, 0, 0};
  b.structure = {0, 0, 0};
  a.colors = {1, 1, 0};
  b.colors = {0, 0, 0};
  EXPECT_EQ(verify_round(std::vector<ColoredShare>{a, b}, 4), VerifyOutcome::ColoringInvalid);

  // Path 1-2-3 (bipartite) with three distinct colors.
  a.structure = {1, 0, 1};
  a.colors = {0, 1, 2};
  EXPECT_EQ(verify_round(std::vector<ColoredShare>{a, b}, 4), VerifyOutcome::ChromaticTooLow);
}

TEST(Vss, TamperedShareIsReported) {
  const auto vs = pairwise_structure(4);
  std::size_t detected = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    DealResult r = deal(kTriangle, kTriangleColors, 4, 4, vs, seed);
    SeededStream rng(seed, "vss-test/tamper", 0);
    const std::size_t victim = tamper_shares(r.shares, ShareTamperKind::FlipStructureDigit, rng);
    ASSERT_GE(victim, 1u);
    const RoundReport report = verify_structure(r.shares, vs);
    if (!report.positive()) {
      ++detected;
      for (const Vsos& s : report.failing_sets()) EXPECT_TRUE(s.contains(victim));
    }
  }
  EXPECT_GT(detected, 10u);
}

TEST(Vss, EmptyTamperModelEqualsPlainVerification) {
  const auto vs = pairwise_structure(3);
  const DealResult r = deal(kTriangle, kTriangleColors, 3, 4, vs, 1);
  const RoundReport plain = verify_structure(r.shares, vs);
  const RoundReport explicit_none = verify_structure(r.shares, vs, 1, std::nullopt, nullptr);
  EXPECT_EQ(plain.to_csv(), explicit_none.to_csv());
}

TEST(Vss, ReportFormatting) {
  const auto vs = pairwise_structure(3);
  const DealResult r = deal(kTriangle, kTriangleColors, 3, 4, vs, 1);
  const RoundReport report = verify_structure(r.shares, vs);
  EXPECT_EQ(report.to_csv(), "vsos,outcome\n1+2,Positive\n1+3,Positive\n2+3,Positive\n");
  EXPECT_EQ(report.verdict_line(), "verdict: Positive (3/3 checks passed)");

  const RoundReport repeated = verify_structure(r.shares, vs, 2);
  EXPECT_EQ(repeated.entries.size(), 6u);
  EXPECT_TRUE(repeated.fixed_shares);
  EXPECT_EQ(repeated.to_csv().rfind("round,vsos,outcome\n1,1+2,Positive\n", 0), 0u);
}

TEST(Vss, SimulateRoundsRedeals) {
  const RoundReport report =
      simulate_rounds(kTriangle, kTriangleColors, 3, 4, pairwise_structure(3), 3, 11);
  EXPECT_EQ(report.rounds, 3u);
  EXPECT_FALSE(report.fixed_shares);
  EXPECT_TRUE(report.positive());
}

TEST(Vss, RecoverNeedsAllShares) {
  const DealResult r = deal(kTriangle, kTriangleColors, 4, 4, pairwise_structure(4), 42);
  const std::vector<ColoredShare> three(r.shares.begin(), r.shares.end() - 1);
  EXPECT_EQ(code_of([&] { recover_secret(three, 4); }), ErrorCode::ShapeMismatch);
}

TEST(Vss, RecoverFlagsBrokenColoring) {
  DealResult r = deal(kTriangle, kTriangleColors, 4, 4, pairwise_structure(4), 42);
  r.shares[0].colors[0] = (r.shares[0].colors[0] + 1) % 4;
  r.shares[0].colors[1] = (r.shares[0].colors[1] + 2) % 4;
  // Colors become (1,3,2): still proper, so recovery is silently wrong.
  const CombinedGraph wrong = recover_secret(r.shares, 4);
  EXPECT_NE(wrong.coloring.digits(), kTriangleColors.digits());

  r.shares[0].colors[0] = (r.shares[0].colors[0] + 2) % 4;
  // Colors become (3,3,2): not proper.
  EXPECT_EQ(code_of([&] { recover_secret(r.shares, 4); }), ErrorCode::InvalidRecovery);
}

TEST(Vss, ShareTamperDetectionRate) {
  const DetectionStats stats = estimate_share_tamper_detection(
      kTriangle, kTriangleColors, 4, 4, pairwise_structure(4), 50,
      ShareTamperKind::FlipStructureDigit, 1);
  EXPECT_EQ(stats.trials, 50u);
  EXPECT_GT(stats.rate(), 0.5);
}

TEST(Vss, NumberPipeline) {
  const auto vs = pairwise_structure(4);
  const NumberDeal nd = number_deal("011101", 4, 4, vs, 8);
  EXPECT_EQ(nd.envelope.check_digits, (Digits{0, 0, 1, 2}));
  EXPECT_TRUE(number_verify(nd.deal.shares, vs).positive());
  EXPECT_EQ(number_recover(nd.deal.shares, 4, 6), "011101");
}

TEST(Vss, NumberPipelineEmptyPayload) {
  const auto vs = pairwise_structure(2);
  const NumberDeal nd = number_deal("", 2, 2, vs, 1);
  EXPECT_TRUE(number_verify(nd.deal.shares, vs).positive());
  EXPECT_EQ(number_recover(nd.deal.shares, 2, 0), "");
}
