#include "gcvs/vss.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "gcvs/coloring.hpp"
#include "gcvs/error.hpp"

namespace gcvs {
namespace {

// Structure redraws allowed per share before a sequential attempt gives up.
constexpr std::uint64_t kSequentialStepDraws = 1u << 14;
// Cap on enumerated candidate colorings per structure draw.
constexpr std::uint64_t kCandidateColorings = 1u << 16;

std::vector<ColoredShare> select(std::span<const ColoredShare> shares, const Vsos& set) {
  std::vector<ColoredShare> subset;
  for (std::size_t index : set.members()) {
    auto it = std::find_if(shares.begin(), shares.end(),
                           [index](const ColoredShare& s) { return s.index == index; });
    if (it == shares.end()) {
      fail(ErrorCode::ShapeMismatch, "no share with index " + std::to_string(index));
    }
    subset.push_back(*it);
  }
  return subset;
}

bool all_sets_pass(std::span<const ColoredShare> shares, const VerificationStructure& structure,
                   std::uint32_t modulus) {
  for (const Vsos& set : structure.sets()) {
    const auto subset = select(shares, set);
    if (verify_round(subset, modulus) != VerifyOutcome::Positive) return false;
  }
  return true;
}

// Runs attempt(a) for a = 0, 1, ... until one succeeds or `limit` attempts
// were made. With several jobs the lowest successful index still wins.
template <typename Attempt>
std::optional<std::pair<std::uint64_t, DealResult>> first_success(std::uint64_t limit,
                                                                  unsigned jobs,
                                                                  Attempt attempt) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    for (std::uint64_t a = 0; a < limit; ++a) {
      if (auto shares = attempt(a)) return std::pair{a, DealResult{std::move(*shares), a + 1}};
    }
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex guard;
  std::optional<std::pair<std::uint64_t, DealResult>> winner;
  std::exception_ptr error;
  std::vector<std::thread> threads;
  for (unsigned id = 0; id < jobs; ++id) {
    threads.emplace_back([&, id] {
      try {
        for (std::uint64_t a = id; a < limit && a < best.load(); a += jobs) {
          if (auto shares = attempt(a)) {
            std::lock_guard lock(guard);
            if (a < best.load()) {
              best = a;
              winner = std::pair{a, DealResult{std::move(*shares), a + 1}};
            }
            return;
          }
        }
      } catch (...) {
        std::lock_guard lock(guard);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
  return winner;
}

struct DealProblem {
  const Graph& graph;
  const Coloring& coloring;
  std::size_t threshold;
  std::uint32_t modulus;
  std::uint32_t structure_modulus;
  const VerificationStructure& structure;
  const DealOptions& options;
};

ColoredShare blank_share(const DealProblem& p, std::size_t index) {
  ColoredShare s;
  s.index = index;
  s.threshold = p.threshold;
  s.vertex_count = p.graph.vertex_count();
  s.extension = p.options.extension;
  s.palette = static_cast<std::uint32_t>(p.coloring.distinct_count());
  s.modulus = p.modulus;
  s.structure_modulus = p.structure_modulus;
  return s;
}

// A set whose combined value becomes known once share `step` is fixed. The
// combination equals sign * share[step] + offset.
struct ReadyCheck {
  bool negated = false;
  Digits structure_offset;
  Digits color_offset;
};

// Visits every proper coloring over Z_k using exactly `distinct` colors, in
// lexicographic order, stopping after `cap` of them.
template <typename Visit>
void for_each_exact_coloring(const Graph& graph, std::uint32_t distinct, std::uint32_t modulus,
                             std::uint64_t cap, Visit&& visit) {
  const std::size_t m = graph.vertex_count();
  std::vector<std::vector<std::size_t>> earlier(m);
  for (const Edge& e : graph.edges()) earlier[e.hi - 1].push_back(e.lo - 1);
  std::uint64_t visited = 0;
  Digits colors(m, 0);
  std::vector<std::uint32_t> uses(modulus, 0);
  std::uint32_t used = 0;
  auto place = [&](auto&& self, std::size_t v) -> void {
    if (visited >= cap) return;
    if (v == m) {
      if (used == distinct) {
        ++visited;
        visit(colors);
      }
      return;
    }
    for (std::uint32_t c = 0; c < modulus; ++c) {
      bool clash = false;
      for (std::size_t u : earlier[v]) clash = clash || colors[u] == c;
      if (clash) continue;
      const bool fresh = uses[c] == 0;
      if (fresh && used == distinct) continue;
      if (!fresh && used + (m - v - 1) < distinct) continue;
      colors[v] = c;
      ++uses[c];
      used += fresh;
      self(self, v + 1);
      --uses[c];
      used -= fresh;
    }
  };
  place(place, 0);
}

// True when `colors` is proper on `edges` and uses exactly `distinct` values.
bool exact_proper(const std::vector<Edge>& edges, const Digits& colors, std::uint32_t distinct,
                  std::vector<std::uint8_t>& seen) {
  for (const Edge& e : edges) {
    if (colors[e.lo - 1] == colors[e.hi - 1]) return false;
  }
  std::fill(seen.begin(), seen.end(), 0);
  std::uint32_t count = 0;
  for (std::uint32_t c : colors) {
    count += seen[c] == 0;
    seen[c] = 1;
  }
  return count == distinct;
}

std::optional<std::vector<ColoredShare>> sequential_attempt(const DealProblem& p,
                                                            UniformSource& rng) {
  const std::size_t t = p.threshold;
  const std::size_t len = pair_count(p.graph.vertex_count());
  const std::size_t m = p.graph.vertex_count();
  const std::uint32_t ks = p.structure_modulus;
  const std::uint32_t k = p.modulus;
  const Digits secret_structure(p.graph.structure_bits().begin(), p.graph.structure_bits().end());

  // Each set is decided at one step: the largest member when share t is
  // outside it, else the largest member of its complement.
  std::vector<std::vector<const Vsos*>> ready(t);
  for (const Vsos& set : p.structure.sets()) {
    if (!set.contains(t)) {
      ready[set.members().back()].push_back(&set);
    } else {
      std::size_t step = 0;
      for (std::size_t j = 1; j < t; ++j) {
        if (!set.contains(j)) step = j;
      }
      ready[step].push_back(&set);
    }
  }

  std::vector<ColoredShare> shares;
  for (std::size_t step = 1; step < t; ++step) {
    ColoredShare share = blank_share(p, step);
    share.structure.assign(len, 0);
    share.colors.assign(m, 0);

    if (ready[step].empty()) {
      for (auto& d : share.structure) d = rng.below(ks);
      for (auto& d : share.colors) d = rng.below(k);
      shares.push_back(std::move(share));
      continue;
    }

    std::vector<ReadyCheck> checks;
    for (const Vsos* set : ready[step]) {
      ReadyCheck check;
      check.negated = set->contains(t);
      check.structure_offset.assign(len, 0);
      check.color_offset.assign(m, 0);
      if (check.negated) {
        check.structure_offset = secret_structure;
        check.color_offset = p.coloring.digits();
      }
      for (const ColoredShare& fixed : shares) {
        const bool in_sum = check.negated ? !set->contains(fixed.index) : set->contains(fixed.index);
        if (!in_sum) continue;
        for (std::size_t i = 0; i < len; ++i) {
          check.structure_offset[i] = check.negated
              ? (check.structure_offset[i] + ks - fixed.structure[i]) % ks
              : (check.structure_offset[i] + fixed.structure[i]) % ks;
        }
        for (std::size_t i = 0; i < m; ++i) {
          check.color_offset[i] = check.negated ? (check.color_offset[i] + k - fixed.colors[i]) % k
                                                : (check.color_offset[i] + fixed.colors[i]) % k;
        }
      }
      checks.push_back(std::move(check));
    }

    bool placed = false;
    for (std::uint64_t draw = 0; draw < kSequentialStepDraws && !placed; ++draw) {
      for (auto& d : share.structure) d = rng.below(ks);
      std::vector<Graph> graphs;
      std::vector<std::uint32_t> chi;
      bool structure_ok = true;
      for (const ReadyCheck& check : checks) {
        Bits bits(len);
        for (std::size_t i = 0; i < len && structure_ok; ++i) {
          const std::uint32_t own = check.negated ? (ks - share.structure[i]) % ks : share.structure[i];
          const std::uint32_t digit = (own + check.structure_offset[i]) % ks;
          structure_ok = digit <= 1;
          bits[i] = static_cast<std::uint8_t>(digit);
        }
        if (!structure_ok) break;
        graphs.push_back(Graph::from_structure_bits(bits));
        chi.push_back(chromatic_number(graphs.back()));
      }
      if (!structure_ok) continue;

      // Candidate color parts come from the first set's passing colorings.
      std::uint64_t accepted = 0;
      Digits chosen;
      Digits own(m);
      Digits combined(m);
      std::vector<std::uint8_t> seen(k);
      for_each_exact_coloring(graphs[0], chi[0], k, kCandidateColorings, [&](const Digits& target) {
        for (std::size_t i = 0; i < m; ++i) {
          const std::uint32_t diff = (target[i] + k - checks[0].color_offset[i]) % k;
          own[i] = checks[0].negated ? (k - diff) % k : diff;
        }
        for (std::size_t c = 1; c < checks.size(); ++c) {
          for (std::size_t i = 0; i < m; ++i) {
            const std::uint32_t signed_own = checks[c].negated ? (k - own[i]) % k : own[i];
            combined[i] = (signed_own + checks[c].color_offset[i]) % k;
          }
          if (!exact_proper(graphs[c].edges(), combined, chi[c], seen)) return;
        }
        ++accepted;
        if (rng.below(static_cast<std::uint32_t>(std::min<std::uint64_t>(accepted, UINT32_MAX))) == 0) {
          chosen = own;
        }
      });
      if (accepted == 0) continue;
      share.colors = chosen;
      placed = true;
    }
    if (!placed) return std::nullopt;
    shares.push_back(std::move(share));
  }

  ColoredShare last = blank_share(p, t);
  last.structure = secret_structure;
  last.colors = p.coloring.digits();
  for (const ColoredShare& s : shares) {
    for (std::size_t i = 0; i < len; ++i) last.structure[i] = (last.structure[i] + ks - s.structure[i]) % ks;
    for (std::size_t i = 0; i < m; ++i) last.colors[i] = (last.colors[i] + k - s.colors[i]) % k;
  }
  shares.push_back(std::move(last));
  if (!all_sets_pass(shares, p.structure, k)) return std::nullopt;
  return shares;
}

std::vector<ColoredShare> rejection_attempt(const DealProblem& p, UniformSource& rng) {
  ColoredSplitOptions split;
  split.extension = p.options.extension;
  split.uniform_modulus = p.options.uniform_modulus;
  return split_colored_graph(p.graph, p.coloring, p.threshold, p.modulus, rng, split);
}

}  // namespace

Vsos::Vsos(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (members_.size() < 2) fail(ErrorCode::InvalidArgument, "a verification set needs >= 2 shares");
  if (members_.front() == 0) fail(ErrorCode::InvalidArgument, "share indices start at 1");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    fail(ErrorCode::InvalidArgument, "repeated share index in verification set");
  }
}

bool Vsos::contains(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

std::string Vsos::label() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out.push_back('+');
    out += std::to_string(members_[i]);
  }
  return out;
}

VerificationStructure::VerificationStructure(std::size_t threshold, std::vector<Vsos> sets)
    : threshold_(threshold), sets_(std::move(sets)) {
  if (threshold_ < 2) fail(ErrorCode::InvalidArgument, "threshold must be >= 2");
  if (sets_.empty()) fail(ErrorCode::InvalidArgument, "verification structure is empty");
  for (const Vsos& set : sets_) {
    if (set.members().back() > threshold_) {
      fail(ErrorCode::InvalidArgument,
           "set " + set.label() + " names a share beyond t=" + std::to_string(threshold_));
    }
  }
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

VerificationStructure pairwise_structure(std::size_t threshold) {
  if (threshold < 2) fail(ErrorCode::InvalidArgument, "threshold must be >= 2");
  std::vector<Vsos> sets;
  for (std::size_t i = 1; i <= threshold; ++i) {
    for (std::size_t j = i + 1; j <= threshold; ++j) sets.emplace_back(std::vector{i, j});
  }
  return VerificationStructure(threshold, std::move(sets));
}

VerificationStructure full_structure(std::size_t threshold) {
  if (threshold < 2) fail(ErrorCode::InvalidArgument, "threshold must be >= 2");
  std::vector<std::size_t> all(threshold);
  for (std::size_t i = 0; i < threshold; ++i) all[i] = i + 1;
  return VerificationStructure(threshold, {Vsos(std::move(all))});
}

VerificationStructure parse_structure(std::string_view text, std::size_t threshold) {
  std::vector<Vsos> sets;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line) {
      if (c == ',' || c == '+' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream fields(line);
    std::vector<std::size_t> members;
    std::string token;
    while (fields >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        fail(ErrorCode::Malformed, "structure line " + std::to_string(line_no) +
                                       ": bad index '" + token + "'");
      }
      members.push_back(std::stoul(token));
    }
    if (members.empty()) continue;
    try {
      sets.emplace_back(std::move(members));
    } catch (const Error& err) {
      fail(ErrorCode::Malformed, "structure line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  try {
    return VerificationStructure(threshold, std::move(sets));
  } catch (const Error& err) {
    fail(ErrorCode::Malformed, err.what());
  }
}

VerifyOutcome verify_round(std::span<const ColoredShare> subset, std::uint32_t modulus) {
  try {
    const CombinedGraph combined = combine_colored_graph(subset, modulus);
    return check_colored_graph(combined.graph, combined.coloring).outcome;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NonBinaryStructureDigit) return VerifyOutcome::Malformed;
    throw;
  }
}

std::string_view strategy_name(DealStrategy strategy) noexcept {
  return strategy == DealStrategy::Rejection ? "rejection" : "sequential";
}

std::optional<DealStrategy> parse_strategy(std::string_view name) noexcept {
  if (name == "rejection") return DealStrategy::Rejection;
  if (name == "sequential") return DealStrategy::Sequential;
  return std::nullopt;
}

DealResult deal(const Graph& graph, const Coloring& coloring, std::size_t threshold,
                std::uint32_t modulus, const VerificationStructure& structure,
                std::uint64_t seed, const DealOptions& options) {
  if (threshold < 2) fail(ErrorCode::InvalidArgument, "threshold must be >= 2");
  if (structure.threshold() != threshold) {
    fail(ErrorCode::InvalidArgument, "verification structure was built for a different t");
  }
  if (modulus < 2) fail(ErrorCode::InvalidArgument, "modulus must be >= 2");
  if (graph.vertex_count() > kExactVertexLimit) {
    fail(ErrorCode::GraphTooLarge, "secret graph exceeds the exact-solver limit");
  }
  if (coloring.size() != graph.vertex_count()) {
    fail(ErrorCode::InvalidSecret, "coloring does not pair with the graph");
  }
  for (std::uint32_t d : coloring.digits()) {
    if (d >= modulus) fail(ErrorCode::InvalidSecret, "secret color outside Z_k");
  }
  if (const auto verdict = check_coloring(graph, coloring); !verdict.valid) {
    fail(ErrorCode::InvalidSecret, "secret coloring is not proper on edge " +
                                       to_string(*verdict.first_violation));
  }
  const Verification secret_check = check_colored_graph(graph, Coloring(coloring.digits(), modulus));
  for (const Vsos& set : structure.sets()) {
    if (set.members().size() == threshold && secret_check.outcome != VerifyOutcome::Positive) {
      fail(ErrorCode::DealerExhausted,
           "the full set can never verify: " + secret_check.detail);
    }
  }

  const Coloring secret_colors(coloring.digits(), modulus);
  const DealProblem problem{graph, secret_colors, threshold, modulus,
                            options.uniform_modulus ? modulus : 2u, structure, options};
  const std::uint64_t limit = options.max_retries == std::numeric_limits<std::uint64_t>::max()
                                  ? options.max_retries
                                  : options.max_retries + 1;

  auto attempt = [&](std::uint64_t a) -> std::optional<std::vector<ColoredShare>> {
    if (options.strategy == DealStrategy::Rejection) {
      SeededStream rng(seed, "deal/rejection", a);
      auto shares = rejection_attempt(problem, rng);
      if (all_sets_pass(shares, structure, modulus)) return shares;
      return std::nullopt;
    }
    SeededStream rng(seed, "deal/sequential", a);
    return sequential_attempt(problem, rng);
  };

  auto found = first_success(limit, options.jobs, attempt);
  if (!found) {
    fail(ErrorCode::DealerExhausted,
         "no share assignment satisfied every verification set after " + std::to_string(limit) +
             " attempts (" + std::string(strategy_name(options.strategy)) + ")");
  }
  DealResult result = std::move(found->second);
  const CombinedGraph full = combine_colored_graph(result.shares, modulus);
  if (!(full.graph == graph) || full.coloring.digits() != coloring.digits()) {
    fail(ErrorCode::InvalidRecovery, "dealt shares do not recombine to the secret");
  }
  return result;
}

std::string_view share_tamper_name(ShareTamperKind kind) noexcept {
  switch (kind) {
    case ShareTamperKind::FlipStructureDigit: return "flip_structure_digit";
    case ShareTamperKind::ReplaceStructureUniform: return "replace_structure_uniform";
    case ShareTamperKind::FlipColorDigit: return "flip_color_digit";
  }
  return "unknown";
}

std::size_t tamper_shares(std::vector<ColoredShare>& shares, ShareTamperKind kind,
                          UniformSource& rng) {
  if (shares.empty()) fail(ErrorCode::InvalidArgument, "no shares to tamper with");
  ColoredShare& victim = shares[rng.below(static_cast<std::uint32_t>(shares.size()))];
  auto change_one = [&rng](Digits& digits, std::uint32_t modulus) {
    if (digits.empty()) fail(ErrorCode::PayloadTooShort, "share part is empty");
    auto& d = digits[rng.below(static_cast<std::uint32_t>(digits.size()))];
    d = (d + 1 + rng.below(modulus - 1)) % modulus;
  };
  switch (kind) {
    case ShareTamperKind::FlipStructureDigit:
      change_one(victim.structure, victim.structure_modulus);
      break;
    case ShareTamperKind::FlipColorDigit:
      change_one(victim.colors, victim.modulus);
      break;
    case ShareTamperKind::ReplaceStructureUniform: {
      if (victim.structure.empty()) fail(ErrorCode::PayloadTooShort, "structure part is empty");
      const Digits original = victim.structure;
      do {
        for (auto& d : victim.structure) d = rng.below(victim.structure_modulus);
      } while (victim.structure == original);
      break;
    }
  }
  return victim.index;
}

bool RoundReport::positive() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RoundEntry& e) { return e.outcome == VerifyOutcome::Positive; });
}

std::vector<Vsos> RoundReport::failing_sets() const {
  std::vector<Vsos> out;
  for (const RoundEntry& e : entries) {
    if (e.outcome != VerifyOutcome::Positive &&
        std::find(out.begin(), out.end(), e.set) == out.end()) {
      out.push_back(e.set);
    }
  }
  return out;
}

std::string RoundReport::to_csv() const {
  std::string out = rounds > 1 ? "round,vsos,outcome\n" : "vsos,outcome\n";
  for (const RoundEntry& e : entries) {
    if (rounds > 1) out += std::to_string(e.round) + ",";
    out += e.set.label() + "," + std::string(outcome_name(e.outcome)) + "\n";
  }
  return out;
}

std::string RoundReport::verdict_line() const {
  std::size_t passed = 0;
  for (const RoundEntry& e : entries) passed += e.outcome == VerifyOutcome::Positive;
  std::string line = positive() ? "verdict: Positive" : "verdict: Detected";
  line += " (" + std::to_string(passed) + "/" + std::to_string(entries.size()) + " checks passed";
  if (!positive()) {
    line += "; failing:";
    for (const Vsos& set : failing_sets()) line += " " + set.label();
  }
  line += ")";
  if (fixed_shares && rounds > 1) line += " [repeated rounds over fixed shares are identical]";
  return line;
}

RoundReport verify_structure(std::span<const ColoredShare> shares,
                             const VerificationStructure& structure, std::size_t rounds,
                             std::optional<ShareTamperKind> tamper, UniformSource* rng) {
  if (rounds == 0) fail(ErrorCode::InvalidArgument, "rounds must be >= 1");
  if (tamper && rng == nullptr) fail(ErrorCode::InvalidArgument, "tampering needs a random source");
  if (shares.empty()) fail(ErrorCode::ShapeMismatch, "no shares given");
  const std::uint32_t modulus = shares.front().modulus;
  RoundReport report;
  report.rounds = rounds;
  report.fixed_shares = !tamper.has_value();
  for (std::size_t round = 1; round <= rounds; ++round) {
    std::vector<ColoredShare> working(shares.begin(), shares.end());
    if (tamper) tamper_shares(working, *tamper, *rng);
    for (const Vsos& set : structure.sets()) {
      report.entries.push_back({round, set, verify_round(select(working, set), modulus)});
    }
  }
  return report;
}

RoundReport simulate_rounds(const Graph& graph, const Coloring& coloring, std::size_t threshold,
                            std::uint32_t modulus, const VerificationStructure& structure,
                            std::size_t rounds, std::uint64_t seed, const DealOptions& options) {
  if (rounds == 0) fail(ErrorCode::InvalidArgument, "rounds must be >= 1");
  RoundReport report;
  report.rounds = rounds;
  report.fixed_shares = false;
  for (std::size_t round = 1; round <= rounds; ++round) {
    const auto dealt = deal(graph, coloring, threshold, modulus, structure,
                            derive_seed(seed, "simulate/round", round), options);
    for (const Vsos& set : structure.sets()) {
      report.entries.push_back({round, set, verify_round(select(dealt.shares, set), modulus)});
    }
  }
  return report;
}

CombinedGraph recover_secret(std::span<const ColoredShare> shares, std::uint32_t modulus) {
  if (shares.empty()) fail(ErrorCode::ShapeMismatch, "no shares given");
  const std::size_t t = shares.front().threshold;
  std::vector<bool> seen(t + 1, false);
  for (const ColoredShare& s : shares) {
    if (s.index == 0 || s.index > t || seen[s.index]) {
      fail(ErrorCode::ShapeMismatch, "share indices must be exactly 1.." + std::to_string(t));
    }
    seen[s.index] = true;
  }
  if (shares.size() != t) {
    fail(ErrorCode::ShapeMismatch, "recovery needs all " + std::to_string(t) + " shares, got " +
                                       std::to_string(shares.size()));
  }
  CombinedGraph combined = combine_colored_graph(shares, modulus);
  if (const auto verdict = check_coloring(combined.graph, combined.coloring); !verdict.valid) {
    fail(ErrorCode::InvalidRecovery, "recovered coloring clashes on edge " +
                                         to_string(*verdict.first_violation));
  }
  return combined;
}

DetectionStats estimate_share_tamper_detection(const Graph& graph, const Coloring& coloring,
                                               std::size_t threshold, std::uint32_t modulus,
                                               const VerificationStructure& structure,
                                               std::uint64_t trials, ShareTamperKind kind,
                                               std::uint64_t seed, const DealOptions& options) {
  if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
  DealOptions per_trial = options;
  const unsigned jobs = std::max(1u, options.jobs);
  per_trial.jobs = 1;
  std::vector<std::uint64_t> detected(jobs, 0);
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](unsigned id) {
    try {
      for (std::uint64_t trial = id; trial < trials; trial += jobs) {
        const auto dealt = deal(graph, coloring, threshold, modulus, structure,
                                derive_seed(seed, "share-tamper/deal", trial), per_trial);
        SeededStream rng(seed, "share-tamper/tamper", trial);
        const RoundReport report = verify_structure(dealt.shares, structure, 1, kind, &rng);
        detected[id] += report.positive() ? 0 : 1;
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& th : threads) th.join();
  }
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  DetectionStats stats;
  stats.trials = trials;
  for (auto d : detected) stats.detected += d;
  return stats;
}

NumberDeal number_deal(std::string_view bits, std::size_t threshold, std::uint32_t modulus,
                       const VerificationStructure& structure, std::uint64_t seed,
                       const DealOptions& options) {
  NumberDeal out;
  out.envelope = encode(bits, options.extension, modulus);
  out.padding = graph_from_number(bits).padding;
  const Graph graph = envelope_graph(out.envelope);
  const Coloring coloring(out.envelope.check_digits, modulus);
  out.deal = deal(graph, coloring, threshold, modulus, structure, seed, options);
  return out;
}

RoundReport number_verify(std::span<const ColoredShare> shares,
                          const VerificationStructure& structure) {
  return verify_structure(shares, structure);
}

std::string number_recover(std::span<const ColoredShare> shares, std::uint32_t modulus,
                           std::size_t bit_length) {
  const CombinedGraph combined = recover_secret(shares, modulus);
  const Graph base = strip_extension(combined.graph, shares.front().extension);
  if (vertices_for_bits(bit_length) != base.vertex_count()) {
    fail(ErrorCode::InvalidArgument, "bit length " + std::to_string(bit_length) +
                                         " does not fit a " + std::to_string(base.vertex_count()) +
                                         "-vertex graph");
  }
  const PaddingInfo padding{bit_length, base.vertex_count(),
                            pair_count(base.vertex_count()) - bit_length};
  return number_from_graph(base, padding);
}

}  // namespace gcvs
