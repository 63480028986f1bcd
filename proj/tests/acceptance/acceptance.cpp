// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <boost/math/distributions/chi_squared.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gcvs/checkdigit.hpp"
#include "gcvs/coloring.hpp"
#include "gcvs/counting.hpp"
#include "gcvs/secretshare.hpp"
#include "gcvs/vss.hpp"

using namespace gcvs;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> run;
};

Graph graph_from_mask(std::size_t m, std::uint64_t mask) {
  Bits bits(pair_count(m));
  for (std::size_t p = 0; p < bits.size(); ++p) bits[p] = (mask >> p) & 1u;
  return Graph::from_structure_bits(bits);
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

Outcome partition_counts() {
  std::size_t checked = 0;
  for (std::uint32_t v = 1; v <= 6; ++v) {
    for (std::uint32_t n = 1; n <= v; ++n) {
      for (const ColorPartition& p : enumerate_color_partitions(v, n)) {
        const std::uint64_t count = oracle_count_partition_proper(v, p);
        if (count != (std::uint64_t{1} << partition_exponent(p).exponent)) {
          return {false, "mismatch at V=" + std::to_string(v)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " partitions exact"};
}

Outcome count_bound() {
  std::size_t rows = 0, strict = 0;
  for (std::uint32_t v = 1; v <= 10; ++v) {
    for (std::uint32_t n = 1; n <= v; ++n) {
      const std::uint64_t lhs = gamma_exponent(v).exponent;
      const std::uint64_t rhs = (v - n) + gamma_n_exponent(v, n).exponent;
      if (lhs < rhs || !check_count_bound(v, n)) {
        return {false, "fails at V=" + std::to_string(v) + " n=" + std::to_string(n)};
      }
      if (v > 2 * n) {
        if (lhs == rhs) {
          return {false, "not strict at V=" + std::to_string(v) + " n=" + std::to_string(n)};
        }
        ++strict;
      }
      ++rows;
    }
  }
  return {true, std::to_string(rows) + " rows, " + std::to_string(strict) + " strict"};
}

Outcome labeled_graph_counts() {
  for (std::uint32_t v = 1; v <= 6; ++v) {
    if (oracle_count_labeled_graphs(v) != (std::uint64_t{1} << gamma_exponent(v).exponent)) {
      return {false, "mismatch at V=" + std::to_string(v)};
    }
  }
  return {true, "V=1..6 exact"};
}

Outcome kite_graph() {
  const Graph g(4, {{1, 3}, {1, 4}, {2, 3}, {3, 4}});
  const Coloring c({0, 0, 2, 1}, 3);
  const bool bits = to_bit_string(g.structure_bits()) == "011101";
  const bool valid = check_coloring(g, c).valid;
  const bool chi = chromatic_number(g) == 3;
  const bool flat = flatten_colored(g, c) == Digits{0, 1, 1, 1, 0, 1, 0, 0, 2, 1};
  return {bits && valid && chi && flat,
          std::string("bits ") + (bits ? "ok" : "bad") + ", coloring " + (valid ? "ok" : "bad") +
              ", chi " + (chi ? "ok" : "bad") + ", flatten " + (flat ? "ok" : "bad")};
}

Outcome checkdigit_round_trip() {
  std::size_t checked = 0;
  for (std::size_t l = 0; l <= 12; ++l) {
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      std::string d(l, '0');
      for (std::size_t p = 0; p < l; ++p) d[p] = (mask >> p) & 1u ? '1' : '0';
      for (std::size_t ext = 0; ext <= 2; ++ext) {
        const Envelope e = encode(d, ext);
        if (verify(e).outcome != VerifyOutcome::Positive) {
          return {false, "d=" + d + " ext=" + std::to_string(ext)};
        }
        const Envelope wide = encode(d, ext, e.palette + 1);
        if (verify(wide).outcome != VerifyOutcome::Positive) {
          return {false, "d=" + d + " ext=" + std::to_string(ext) + " k=n+1"};
        }
        checked += 2;
      }
    }
  }
  return {true, std::to_string(checked) + " envelopes Positive"};
}

Outcome undetected_rate() {
  SweepConfig config;
  config.vertices = 6;
  config.palette = 3;
  config.trials = 10000;
  config.model = {TamperKind::ReplaceUniform, 1};
  config.seed = 2024;
  const SweepRecord first = estimate_undetected_rate(config);
  const SweepRecord second = estimate_undetected_rate(config);
  const double p = std::ldexp(1.0, -3);
  const double limit = p + 3.0 * std::sqrt(p * (1.0 - p) / 10000.0);
  const bool deterministic = first.undetected == second.undetected;
  return {first.empirical_rate <= limit && deterministic,
          fmt("rate %.4f <= %.4f", first.empirical_rate, limit) +
              (deterministic ? ", reproducible" : ", NOT reproducible")};
}

Outcome bounds_suite() {
  std::size_t graphs = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(m)); ++mask) {
      const Graph g = graph_from_mask(m, mask);
      const std::uint32_t chi = chromatic_number(g);
      const std::uint32_t lo = clique_lower_bound(g);
      const std::uint32_t hi = brooks_upper_bound(g);
      if (lo > chi || chi > hi) {
        return {false, "violated for m=" + std::to_string(m) + " mask=" + std::to_string(mask)};
      }
      ++graphs;
    }
  }
  bool excluded = true;
  for (std::size_t m = 1; m <= 5; ++m) {
    excluded = excluded && brooks_upper_bound(complete_graph(m)) == chromatic_number(complete_graph(m));
  }
  excluded = excluded && brooks_upper_bound(cycle_graph(3)) == 3 &&
             brooks_upper_bound(cycle_graph(5)) == 3 && chromatic_number(cycle_graph(5)) == 3;
  return {excluded, std::to_string(graphs) + " graphs" +
                        (excluded ? "" : ", complete/odd-cycle equality failed")};
}

Outcome kgh_suite() {
  SeededStream rng(1, "acceptance/kgh-identity", 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t t = 2 + rng.below(5);
    const std::uint32_t k = 2 + rng.below(3);
    const std::size_t eta = rng.below(13);
    Digits s(eta);
    for (auto& d : s) d = rng.below(k);
    const SecretVector secret(s, k);
    if (!(kgh_combine(kgh_split(secret, t, rng), k) == secret)) {
      return {false, "identity failed on case " + std::to_string(trial)};
    }
  }
  // Marginal of shares 1 and 2 (t=3, k=2, eta=4) over 2^8 cells.
  const SecretVector secret({1, 1, 0, 1}, 2);
  SeededStream draws(1, "acceptance/kgh-privacy", 0);
  std::vector<double> counts(256, 0.0);
  constexpr int kSamples = 10000;
  for (int i = 0; i < kSamples; ++i) {
    const auto shares = kgh_split(secret, 3, draws);
    std::size_t cell = 0;
    for (std::size_t j = 0; j < 2; ++j) {
      for (auto d : shares[j].digits) cell = cell * 2 + d;
    }
    counts[cell] += 1.0;
  }
  const double expected = kSamples / 256.0;
  double stat = 0.0;
  for (double c : counts) stat += (c - expected) * (c - expected) / expected;
  const double critical = boost::math::quantile(boost::math::chi_squared(255), 0.99);
  return {stat < critical, fmt("1000 identities; chi2 %.1f < %.1f", stat, critical)};
}

Outcome triangle_deal() {
  const Graph g = complete_graph(3);
  const Coloring c({0, 1, 2}, 4);
  const auto vs = pairwise_structure(4);
  DealOptions options;
  options.max_retries = 1'000'000;
  std::uint64_t worst = 0;
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const DealResult r = deal(g, c, 4, 4, vs, seed, options);
    const DealResult again = deal(g, c, 4, 4, vs, seed, options);
    if (!(r.shares == again.shares)) return {false, "seed " + std::to_string(seed) + " not reproducible"};
    const RoundReport report = verify_structure(r.shares, vs);
    if (!report.positive() || report.entries.size() != 6) {
      return {false, "seed " + std::to_string(seed) + " has a failing pair"};
    }
    const CombinedGraph back = recover_secret(r.shares, 4);
    if (!(back.graph == g) || back.coloring.digits() != c.digits()) {
      return {false, "seed " + std::to_string(seed) + " recovery differs"};
    }
    worst = std::max(worst, r.attempts);
  }
  return {true, "5 seeds, at most " + std::to_string(worst) + " attempts"};
}

Outcome tamper_detection() {
  // Kite graph extended by two star vertices: 6 vertices, chi 3.
  const Envelope secret = encode("011101", 2);
  const Graph g = envelope_graph(secret);
  const Coloring c(secret.check_digits, secret.modulus);
  if (g.vertex_count() != 6 || chromatic_number(g) != 3) return {false, "fixture is not V=6, chi=3"};
  DealOptions options;
  options.strategy = DealStrategy::Sequential;
  const std::uint64_t trials = 2000;
  const DetectionStats stats =
      estimate_share_tamper_detection(g, c, 4, secret.modulus, pairwise_structure(4), trials,
                                      ShareTamperKind::FlipStructureDigit, 2024, options);
  const double p = std::ldexp(1.0, -3);
  const double threshold = (1.0 - p) - 3.0 * std::sqrt(p * (1.0 - p) / trials);
  return {stats.rate() >= threshold,
          fmt("detected %.4f, required >= %.4f", stats.rate(), threshold)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "partition-proper counts equal 2^e for V<=6", 30, partition_counts},
      {2, "graph-count bound for V<=10, strict when V>2n", 1, count_bound},
      {3, "labeled graph count equals 2^(V(V-1)/2) for V<=6", 30, labeled_graph_counts},
      {4, "worked 4-vertex example fixtures", 1, kite_graph},
      {5, "check-digit round trip, all payloads up to 12 bits, ext 0..2", 120, checkdigit_round_trip},
      {6, "undetected rate under uniform replacement, V=6 n=3", 120, undetected_rate},
      {7, "clique <= chi <= Brooks bound on all graphs with m<=5", 60, bounds_suite},
      {8, "KGH identity and share-subset uniformity", 60, kgh_suite},
      {9, "triangle deal, t=4 k=4 pairwise, 5 seeds", 120, triangle_deal},
      {10, "single structure-digit tamper detected, V=6 chi=3 t=4 pairwise", 300, tamper_detection},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.time_limit_s) {
      out.pass = false;
      out.detail += fmt(" (over time limit %.0f s)", c.time_limit_s);
    }
    if (!out.pass) ++failures;
    std::printf("%s criterion %d: %s -- %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
