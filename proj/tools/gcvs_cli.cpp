// gcvs command-line tool. Talks to the library only through gcvs.h.
//
// Exit codes:
//   0  success / Positive
//   1  detection (verify, verify-shares), oracle mismatch (count),
//      rate above bound + 3 sigma (tamper-sweep)
//   2  malformed input
//   3  dealer exhausted
//   4  usage error
//   5  any other failure (I/O, internal)

#include <CLI11.hpp>

#include <cerrno>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gcvs/gcvs.h"

namespace {

enum Exit : int {
  kOk = 0,
  kDetected = 1,
  kMalformed = 2,
  kDealerExhausted = 3,
  kUsage = 4,
  kFailure = 5,
};

struct Failure {
  int code;
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { gcvs_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct EnvelopeDeleter {
  void operator()(gcvs_envelope* e) const { gcvs_envelope_free(e); }
};
using Envelope = std::unique_ptr<gcvs_envelope, EnvelopeDeleter>;

struct StructureDeleter {
  void operator()(gcvs_structure* s) const { gcvs_structure_free(s); }
};
using Structure = std::unique_ptr<gcvs_structure, StructureDeleter>;

struct SharesDeleter {
  void operator()(gcvs_shares* s) const { gcvs_shares_free(s); }
};
using Shares = std::unique_ptr<gcvs_shares, SharesDeleter>;

struct ReportDeleter {
  void operator()(gcvs_report* r) const { gcvs_report_free(r); }
};
using Report = std::unique_ptr<gcvs_report, ReportDeleter>;

int exit_for(gcvs_status status) {
  switch (status) {
    case GCVS_OK: return kOk;
    case GCVS_E_DEALER_EXHAUSTED: return kDealerExhausted;
    case GCVS_E_INTERNAL: return kFailure;
    default: return kMalformed;
  }
}

void check(gcvs_status status, const std::string& context) {
  if (status == GCVS_OK) return;
  throw Failure{exit_for(status),
                context + ": " + gcvs_status_name(status) + ": " + gcvs_last_error()};
}

std::string take(char* raw) {
  OwnedString owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kFailure, "cannot open " + path + ": " + std::strerror(errno)};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kFailure, "cannot write " + path + ": " + std::strerror(errno)};
  out << text;
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

Structure make_structure(const std::string& spec, std::size_t threshold) {
  gcvs_structure* raw = nullptr;
  if (spec == "pairwise") {
    check(gcvs_structure_pairwise(threshold, &raw), "pairwise structure");
  } else if (spec == "full") {
    check(gcvs_structure_full(threshold, &raw), "full structure");
  } else {
    check(gcvs_structure_parse(read_file(spec).c_str(), threshold, &raw), spec);
  }
  return Structure(raw);
}

Shares load_shares(const std::vector<std::string>& files) {
  gcvs_shares* raw = nullptr;
  check(gcvs_shares_new(&raw), "shares");
  Shares shares(raw);
  for (const auto& file : files) {
    check(gcvs_shares_add_text(shares.get(), read_file(file).c_str()), file);
  }
  return shares;
}

// --- encode / verify --------------------------------------------------------

struct EncodeArgs {
  std::string in;
  std::string out;
  std::size_t ext = 0;
  std::uint32_t modulus = 0;
};

int run_encode(const EncodeArgs& a) {
  const std::string bits = trim(read_file(a.in));
  gcvs_envelope* raw = nullptr;
  check(gcvs_envelope_encode(bits.c_str(), a.ext, a.modulus, &raw), "encode");
  Envelope env(raw);
  char* text = nullptr;
  check(gcvs_envelope_serialize(env.get(), &text), "serialize");
  write_file(a.out, take(text));
  return kOk;
}

int run_verify(const std::string& in) {
  gcvs_envelope* raw = nullptr;
  check(gcvs_envelope_parse(read_file(in).c_str(), &raw), in.empty() ? "stdin" : in);
  Envelope env(raw);
  gcvs_outcome outcome = GCVS_MALFORMED;
  char* detail = nullptr;
  check(gcvs_envelope_verify(env.get(), &outcome, &detail), "verify");
  const std::string why = take(detail);
  std::cout << gcvs_outcome_name(outcome) << "\n";
  if (!why.empty()) std::cerr << why << "\n";
  switch (outcome) {
    case GCVS_POSITIVE: return kOk;
    case GCVS_MALFORMED: return kMalformed;
    default: return kDetected;
  }
}

// --- deal / combine / verify-shares ---------------------------------------

struct DealArgs {
  std::string in;
  std::string number;
  bool use_number = false;
  std::size_t ext = 0;
  std::size_t t = 2;
  std::uint32_t modulus = 0;
  std::string vsos = "pairwise";
  std::uint64_t seed = 0;
  std::uint64_t max_retries = 1'000'000;
  std::string strategy = "rejection";
  bool uniform_modulus = false;
  unsigned jobs = 1;
  std::string out_dir = ".";
};

int run_deal(const DealArgs& a) {
  gcvs_envelope* raw = nullptr;
  if (a.use_number) {
    check(gcvs_envelope_encode(a.number.c_str(), a.ext, 0, &raw), "encode");
  } else {
    check(gcvs_envelope_parse(read_file(a.in).c_str(), &raw), a.in);
  }
  Envelope secret(raw);
  Structure vs = make_structure(a.vsos, a.t);

  gcvs_deal_options options;
  gcvs_deal_options_init(&options);
  options.max_retries = a.max_retries;
  options.strategy = a.strategy == "sequential" ? GCVS_DEAL_SEQUENTIAL : GCVS_DEAL_REJECTION;
  options.jobs = a.jobs;
  options.uniform_modulus = a.uniform_modulus ? 1 : 0;

  gcvs_shares* dealt = nullptr;
  std::uint64_t attempts = 0;
  check(gcvs_shares_deal(secret.get(), a.t, a.modulus, vs.get(), a.seed, &options, &dealt,
                         &attempts),
        "deal");
  Shares shares(dealt);

  std::filesystem::create_directories(a.out_dir);
  for (std::size_t pos = 0; pos < gcvs_shares_count(shares.get()); ++pos) {
    char* text = nullptr;
    check(gcvs_shares_serialize(shares.get(), pos, &text), "serialize share");
    const auto path = std::filesystem::path(a.out_dir) /
                      ("share_" + std::to_string(gcvs_shares_index(shares.get(), pos)) + ".txt");
    write_file(path.string(), take(text));
    std::cout << path.string() << "\n";
  }
  std::cerr << "dealt " << gcvs_shares_count(shares.get()) << " shares on attempt " << attempts
            << "\n";
  return kOk;
}

struct CombineArgs {
  std::vector<std::string> files;
  std::size_t length = std::numeric_limits<std::size_t>::max();
  std::string out;
};

int run_combine(const CombineArgs& a) {
  Shares shares = load_shares(a.files);
  gcvs_envelope* raw = nullptr;
  check(gcvs_shares_combine(shares.get(), a.length, &raw), "combine");
  Envelope env(raw);
  char* text = nullptr;
  check(gcvs_envelope_serialize(env.get(), &text), "serialize");
  write_file(a.out, take(text));
  return kOk;
}

int run_verify_shares(const std::vector<std::string>& files, const std::string& vsos) {
  Shares shares = load_shares(files);
  Structure vs = make_structure(vsos, gcvs_shares_threshold(shares.get()));
  gcvs_report* raw = nullptr;
  check(gcvs_shares_verify(shares.get(), vs.get(), &raw), "verify-shares");
  Report report(raw);
  char* csv = nullptr;
  char* verdict = nullptr;
  check(gcvs_report_csv(report.get(), &csv), "report");
  check(gcvs_report_verdict(report.get(), &verdict), "report");
  std::cout << take(csv) << take(verdict) << "\n";
  return gcvs_report_positive(report.get()) ? kOk : kDetected;
}

// --- count / tamper-sweep ----------------------------------------------------

int run_count(std::uint32_t max_v, bool oracle) {
  char* csv = nullptr;
  int all_pass = 0;
  check(gcvs_count_table(max_v, oracle ? 1 : 0, &csv, &all_pass), "count");
  std::cout << take(csv);
  return all_pass ? kOk : kDetected;
}

struct SweepArgs {
  std::uint32_t v = 6;
  std::uint32_t n = 3;
  std::uint64_t trials = 10000;
  std::string model = "replace_uniform";
  std::size_t bits = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool tamper_check_digits = false;
};

int run_sweep(const SweepArgs& a) {
  gcvs_sweep_config config{};
  config.vertices = a.v;
  config.palette = a.n;
  config.trials = a.trials;
  config.model = a.model == "flip_one_bit" ? GCVS_TAMPER_FLIP_ONE_BIT
                 : a.model == "flip_bits"  ? GCVS_TAMPER_FLIP_BITS
                                           : GCVS_TAMPER_REPLACE_UNIFORM;
  config.bits = a.bits;
  config.seed = a.seed;
  config.jobs = a.jobs;
  config.tamper_check_digits = a.tamper_check_digits ? 1 : 0;
  gcvs_sweep_record record{};
  check(gcvs_tamper_sweep(&config, &record), "tamper-sweep");
  char* csv = nullptr;
  check(gcvs_sweep_csv(&record, &csv), "csv");
  std::cout << take(csv);
  return record.empirical_rate <= record.bound + record.tolerance ? kOk : kDetected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-coloring check digits and verifiable secret sharing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gcvs_version()));

  EncodeArgs encode_args;
  auto* encode = app.add_subcommand("encode", "Append check digits to a bit string");
  encode->add_option("--in", encode_args.in, "Payload file of 0/1 characters (default stdin)");
  encode->add_option("--out", encode_args.out, "Envelope output file (default stdout)");
  encode->add_option("--ext", encode_args.ext, "Extension vertices");
  encode->add_option("--modulus", encode_args.modulus, "Check-digit modulus k (0 = n)");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Re-check an envelope");
  verify->add_option("--in", verify_in, "Envelope file (default stdin)");

  DealArgs deal_args;
  auto* deal = app.add_subcommand("deal", "Share a colored graph among t participants");
  auto* deal_in = deal->add_option("--in", deal_args.in, "Secret envelope file");
  auto* deal_number =
      deal->add_option("--number", deal_args.number, "Secret bit string, encoded on the fly")
          ->excludes(deal_in);
  deal->add_option("--ext", deal_args.ext, "Extension vertices for --number");
  deal->add_option("--t", deal_args.t, "Number of shares")->required()->check(CLI::Range(2, 64));
  deal->add_option("--modulus", deal_args.modulus, "Color modulus k (0 = envelope k)");
  deal->add_option("--vsos", deal_args.vsos, "pairwise, full, or a structure file");
  deal->add_option("--seed", deal_args.seed, "Random seed");
  deal->add_option("--max-retries", deal_args.max_retries, "Dealer retry budget");
  deal->add_option("--strategy", deal_args.strategy, "Dealer strategy")
      ->check(CLI::IsMember({"rejection", "sequential"}));
  deal->add_flag("--uniform-modulus", deal_args.uniform_modulus,
                 "Share structure digits over Z_k instead of Z_2");
  deal->add_option("--jobs", deal_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  deal->add_option("--out-dir", deal_args.out_dir, "Directory for share_<j>.txt files");

  CombineArgs combine_args;
  auto* combine = app.add_subcommand("combine", "Recover the secret from all shares");
  combine->add_option("files", combine_args.files, "Share files")->required();
  combine->add_option("--length", combine_args.length, "Payload bit length l");
  combine->add_option("--out", combine_args.out, "Envelope output file (default stdout)");

  std::vector<std::string> vs_files;
  std::string vs_spec = "pairwise";
  auto* verify_shares = app.add_subcommand("verify-shares", "Run the verification structure");
  verify_shares->add_option("files", vs_files, "Share files")->required();
  verify_shares->add_option("--vsos", vs_spec, "pairwise, full, or a structure file");

  std::uint32_t max_v = 6;
  bool oracle = false;
  auto* count = app.add_subcommand("count", "Graph counting table");
  count->add_option("--max-v", max_v, "Largest vertex count")->check(CLI::Range(1, 64));
  count->add_flag("--oracle", oracle, "Cross-check rows with V <= 6 by enumeration");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("tamper-sweep", "Monte-Carlo undetected-error rate");
  sweep->add_option("--v", sweep_args.v, "Vertices")->check(CLI::Range(1, 24));
  sweep->add_option("--n", sweep_args.n, "Chromatic number of sampled payloads")
      ->check(CLI::Range(1, 24));
  sweep->add_option("--trials", sweep_args.trials, "Trials")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  sweep->add_option("--model", sweep_args.model, "Tamper model")
      ->check(CLI::IsMember({"flip_one_bit", "flip_bits", "replace_uniform"}));
  sweep->add_option("--bits", sweep_args.bits, "Bits flipped by flip_bits")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_args.seed, "Random seed");
  sweep->add_option("--jobs", sweep_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--tamper-checkdigits", sweep_args.tamper_check_digits,
                  "Also replace one check digit per trial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*encode) return run_encode(encode_args);
    if (*verify) return run_verify(verify_in);
    if (*deal) {
      deal_args.use_number = deal_number->count() > 0;
      if (!deal_args.use_number && deal_in->count() == 0) {
        std::cerr << "deal: one of --in or --number is required\n";
        return kUsage;
      }
      return run_deal(deal_args);
    }
    if (*combine) return run_combine(combine_args);
    if (*verify_shares) return run_verify_shares(vs_files, vs_spec);
    if (*count) return run_count(max_v, oracle);
    if (*sweep) return run_sweep(sweep_args);
  } catch (const Failure& f) {
    std::cerr << "gcvs: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "gcvs: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
