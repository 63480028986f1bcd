#include "gcvs/gcvs.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "gcvs/checkdigit.hpp"
#include "gcvs/counting.hpp"
#include "gcvs/error.hpp"
#include "gcvs/secretshare.hpp"
#include "gcvs/vss.hpp"

struct gcvs_envelope {
  gcvs::Envelope value;
};

struct gcvs_structure {
  gcvs::VerificationStructure value;
};

struct gcvs_shares {
  std::vector<gcvs::ColoredShare> value;
};

struct gcvs_report {
  gcvs::RoundReport value;
};

namespace {

thread_local std::string last_error;

gcvs_status to_status(gcvs::ErrorCode code) {
  using gcvs::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return GCVS_E_INVALID_ARGUMENT;
    case ErrorCode::InvalidBitString: return GCVS_E_INVALID_BIT_STRING;
    case ErrorCode::VertexOutOfRange: return GCVS_E_VERTEX_OUT_OF_RANGE;
    case ErrorCode::SelfLoop: return GCVS_E_SELF_LOOP;
    case ErrorCode::DuplicateEdge: return GCVS_E_DUPLICATE_EDGE;
    case ErrorCode::NonTriangularLength: return GCVS_E_NON_TRIANGULAR_LENGTH;
    case ErrorCode::PaddingMismatch: return GCVS_E_PADDING_MISMATCH;
    case ErrorCode::LengthMismatch: return GCVS_E_LENGTH_MISMATCH;
    case ErrorCode::NonBinaryStructureDigit: return GCVS_E_NON_BINARY_STRUCTURE_DIGIT;
    case ErrorCode::ColorOutOfRange: return GCVS_E_COLOR_OUT_OF_RANGE;
    case ErrorCode::GraphTooLarge: return GCVS_E_GRAPH_TOO_LARGE;
    case ErrorCode::TooLargeForOracle: return GCVS_E_TOO_LARGE_FOR_ORACLE;
    case ErrorCode::ExtensionPatternMismatch: return GCVS_E_EXTENSION_PATTERN_MISMATCH;
    case ErrorCode::Malformed: return GCVS_E_MALFORMED;
    case ErrorCode::PayloadTooShort: return GCVS_E_PAYLOAD_TOO_SHORT;
    case ErrorCode::SamplingExhausted: return GCVS_E_SAMPLING_EXHAUSTED;
    case ErrorCode::ModulusMismatch: return GCVS_E_MODULUS_MISMATCH;
    case ErrorCode::ExcludedSecret: return GCVS_E_EXCLUDED_SECRET;
    case ErrorCode::ShapeMismatch: return GCVS_E_SHAPE_MISMATCH;
    case ErrorCode::DealerExhausted: return GCVS_E_DEALER_EXHAUSTED;
    case ErrorCode::InvalidSecret: return GCVS_E_INVALID_SECRET;
    case ErrorCode::InvalidRecovery: return GCVS_E_INVALID_RECOVERY;
  }
  return GCVS_E_INTERNAL;
}

// Runs body, translating exceptions into status codes and last_error.
template <typename Body>
gcvs_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return GCVS_OK;
  } catch (const gcvs::Error& err) {
    last_error = err.what();
    return to_status(err.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GCVS_E_INTERNAL;
  } catch (const std::exception& err) {
    last_error = err.what();
    return GCVS_E_INTERNAL;
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename T>
void require(const T* pointer, const char* what) {
  if (pointer == nullptr) gcvs::fail(gcvs::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

gcvs::TamperKind to_kind(gcvs_tamper_model model) {
  switch (model) {
    case GCVS_TAMPER_FLIP_ONE_BIT: return gcvs::TamperKind::FlipOneBit;
    case GCVS_TAMPER_FLIP_BITS: return gcvs::TamperKind::FlipBits;
    case GCVS_TAMPER_REPLACE_UNIFORM: return gcvs::TamperKind::ReplaceUniform;
  }
  gcvs::fail(gcvs::ErrorCode::InvalidArgument, "unknown tamper model");
}

gcvs_outcome to_outcome(gcvs::VerifyOutcome outcome) {
  switch (outcome) {
    case gcvs::VerifyOutcome::Positive: return GCVS_POSITIVE;
    case gcvs::VerifyOutcome::ColoringInvalid: return GCVS_COLORING_INVALID;
    case gcvs::VerifyOutcome::ChromaticTooLow: return GCVS_CHROMATIC_TOO_LOW;
    case gcvs::VerifyOutcome::Malformed: return GCVS_MALFORMED;
  }
  return GCVS_MALFORMED;
}

}  // namespace

extern "C" {

const char* gcvs_version(void) { return "1.0.0"; }

const char* gcvs_last_error(void) { return last_error.c_str(); }

const char* gcvs_status_name(gcvs_status status) {
  switch (status) {
    case GCVS_OK: return "OK";
    case GCVS_E_INTERNAL: return "Internal";
    default: break;
  }
  for (int code = 0; code <= static_cast<int>(gcvs::ErrorCode::InvalidRecovery); ++code) {
    const auto ec = static_cast<gcvs::ErrorCode>(code);
    if (to_status(ec) == status) return gcvs::error_code_name(ec).data();
  }
  return "Unknown";
}

const char* gcvs_outcome_name(gcvs_outcome outcome) {
  switch (outcome) {
    case GCVS_POSITIVE: return "Positive";
    case GCVS_COLORING_INVALID: return "ColoringInvalid";
    case GCVS_CHROMATIC_TOO_LOW: return "ChromaticTooLow";
    case GCVS_MALFORMED: return "Malformed";
  }
  return "Unknown";
}

void gcvs_string_free(char* str) { std::free(str); }

gcvs_status gcvs_envelope_encode(const char* bits, size_t extension, uint32_t modulus,
                                 gcvs_envelope** out) {
  return guarded([&] {
    require(bits, "bits");
    require(out, "out");
    std::optional<std::uint32_t> k;
    if (modulus != 0) k = modulus;
    *out = new gcvs_envelope{gcvs::encode(bits, extension, k)};
  });
}

gcvs_status gcvs_envelope_parse(const char* text, gcvs_envelope** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new gcvs_envelope{gcvs::parse_envelope(text)};
  });
}

gcvs_status gcvs_envelope_serialize(const gcvs_envelope* envelope, char** out) {
  return guarded([&] {
    require(envelope, "envelope");
    require(out, "out");
    *out = duplicate(gcvs::serialize_envelope(envelope->value));
  });
}

gcvs_status gcvs_envelope_verify(const gcvs_envelope* envelope, gcvs_outcome* outcome,
                                 char** detail) {
  return guarded([&] {
    require(envelope, "envelope");
    require(outcome, "outcome");
    const gcvs::Verification result = gcvs::verify(envelope->value);
    *outcome = to_outcome(result.outcome);
    if (detail) *detail = duplicate(result.detail);
  });
}

gcvs_status gcvs_envelope_tamper(const gcvs_envelope* envelope, gcvs_tamper_model model,
                                 size_t bits, uint64_t seed, gcvs_envelope** out) {
  return guarded([&] {
    require(envelope, "envelope");
    require(out, "out");
    gcvs::SeededStream rng(seed, "envelope-tamper", 0);
    *out = new gcvs_envelope{gcvs::tamper(envelope->value, {to_kind(model), bits}, rng)};
  });
}

gcvs_status gcvs_envelope_payload(const gcvs_envelope* envelope, char** out) {
  return guarded([&] {
    require(envelope, "envelope");
    require(out, "out");
    *out = duplicate(envelope->value.payload);
  });
}

size_t gcvs_envelope_vertex_count(const gcvs_envelope* envelope) {
  return envelope ? envelope->value.vertex_count : 0;
}

uint32_t gcvs_envelope_palette(const gcvs_envelope* envelope) {
  return envelope ? envelope->value.palette : 0;
}

uint32_t gcvs_envelope_modulus(const gcvs_envelope* envelope) {
  return envelope ? envelope->value.modulus : 0;
}

void gcvs_envelope_free(gcvs_envelope* envelope) { delete envelope; }

gcvs_status gcvs_structure_pairwise(size_t threshold, gcvs_structure** out) {
  return guarded([&] {
    require(out, "out");
    *out = new gcvs_structure{gcvs::pairwise_structure(threshold)};
  });
}

gcvs_status gcvs_structure_full(size_t threshold, gcvs_structure** out) {
  return guarded([&] {
    require(out, "out");
    *out = new gcvs_structure{gcvs::full_structure(threshold)};
  });
}

gcvs_status gcvs_structure_parse(const char* text, size_t threshold, gcvs_structure** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new gcvs_structure{gcvs::parse_structure(text, threshold)};
  });
}

size_t gcvs_structure_size(const gcvs_structure* structure) {
  return structure ? structure->value.size() : 0;
}

void gcvs_structure_free(gcvs_structure* structure) { delete structure; }

void gcvs_deal_options_init(gcvs_deal_options* options) {
  if (!options) return;
  options->max_retries = 1'000'000;
  options->strategy = GCVS_DEAL_REJECTION;
  options->jobs = 1;
  options->uniform_modulus = 0;
}

gcvs_status gcvs_shares_deal(const gcvs_envelope* secret, size_t threshold, uint32_t modulus,
                             const gcvs_structure* structure, uint64_t seed,
                             const gcvs_deal_options* options, gcvs_shares** out,
                             uint64_t* attempts) {
  return guarded([&] {
    require(secret, "secret");
    require(structure, "structure");
    require(out, "out");
    gcvs_deal_options defaults;
    gcvs_deal_options_init(&defaults);
    const gcvs_deal_options& opts = options ? *options : defaults;

    const gcvs::Envelope& e = secret->value;
    if (const auto check = gcvs::verify(e); check.outcome != gcvs::VerifyOutcome::Positive) {
      gcvs::fail(gcvs::ErrorCode::InvalidSecret,
                 "secret envelope does not verify: " + check.detail);
    }
    const std::uint32_t k = modulus == 0 ? e.modulus : modulus;
    gcvs::DealOptions deal_options;
    deal_options.max_retries = opts.max_retries;
    deal_options.strategy = opts.strategy == GCVS_DEAL_SEQUENTIAL ? gcvs::DealStrategy::Sequential
                                                                  : gcvs::DealStrategy::Rejection;
    deal_options.jobs = opts.jobs;
    deal_options.extension = e.extension;
    deal_options.uniform_modulus = opts.uniform_modulus != 0;
    const gcvs::Coloring coloring(e.check_digits, std::max(k, e.modulus));
    auto result = gcvs::deal(gcvs::envelope_graph(e), coloring, threshold, k, structure->value,
                             seed, deal_options);
    if (attempts) *attempts = result.attempts;
    *out = new gcvs_shares{std::move(result.shares)};
  });
}

gcvs_status gcvs_shares_new(gcvs_shares** out) {
  return guarded([&] {
    require(out, "out");
    *out = new gcvs_shares{};
  });
}

gcvs_status gcvs_shares_add_text(gcvs_shares* shares, const char* text) {
  return guarded([&] {
    require(shares, "shares");
    require(text, "text");
    shares->value.push_back(gcvs::parse_share(text));
  });
}

size_t gcvs_shares_count(const gcvs_shares* shares) { return shares ? shares->value.size() : 0; }

size_t gcvs_shares_threshold(const gcvs_shares* shares) {
  return shares && !shares->value.empty() ? shares->value.front().threshold : 0;
}

gcvs_status gcvs_shares_serialize(const gcvs_shares* shares, size_t position, char** out) {
  return guarded([&] {
    require(shares, "shares");
    require(out, "out");
    if (position >= shares->value.size()) {
      gcvs::fail(gcvs::ErrorCode::InvalidArgument, "share position out of range");
    }
    *out = duplicate(gcvs::serialize_share(shares->value[position]));
  });
}

size_t gcvs_shares_index(const gcvs_shares* shares, size_t position) {
  if (!shares || position >= shares->value.size()) return 0;
  return shares->value[position].index;
}

gcvs_status gcvs_shares_combine(const gcvs_shares* shares, size_t bit_length,
                                gcvs_envelope** out) {
  return guarded([&] {
    require(shares, "shares");
    require(out, "out");
    if (shares->value.empty()) gcvs::fail(gcvs::ErrorCode::ShapeMismatch, "no shares given");
    const auto& first = shares->value.front();
    const gcvs::CombinedGraph combined = gcvs::recover_secret(shares->value, first.modulus);
    const gcvs::Graph base = gcvs::strip_extension(combined.graph, first.extension);
    const std::size_t l = bit_length == std::numeric_limits<size_t>::max()
                              ? gcvs::pair_count(base.vertex_count())
                              : bit_length;
    gcvs::Envelope e;
    e.payload = gcvs::number_recover(shares->value, first.modulus, l);
    e.vertex_count = combined.graph.vertex_count();
    e.extension = first.extension;
    e.palette = static_cast<std::uint32_t>(combined.coloring.distinct_count());
    e.modulus = first.modulus;
    e.check_digits = combined.coloring.digits();
    *out = new gcvs_envelope{std::move(e)};
  });
}

gcvs_status gcvs_shares_verify(const gcvs_shares* shares, const gcvs_structure* structure,
                               gcvs_report** out) {
  return guarded([&] {
    require(shares, "shares");
    require(structure, "structure");
    require(out, "out");
    *out = new gcvs_report{gcvs::verify_structure(shares->value, structure->value)};
  });
}

void gcvs_shares_free(gcvs_shares* shares) { delete shares; }

gcvs_status gcvs_report_csv(const gcvs_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = duplicate(report->value.to_csv());
  });
}

gcvs_status gcvs_report_verdict(const gcvs_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = duplicate(report->value.verdict_line());
  });
}

int gcvs_report_positive(const gcvs_report* report) {
  return report && report->value.positive() ? 1 : 0;
}

void gcvs_report_free(gcvs_report* report) { delete report; }

gcvs_status gcvs_count_table(uint32_t max_v, int oracle, char** csv, int* all_pass) {
  return guarded([&] {
    require(csv, "csv");
    const auto rows = gcvs::counting_table(max_v, oracle != 0);
    bool pass = true;
    for (const auto& row : rows) {
      pass = pass && row.bound_holds && row.oracle_pass.value_or(true);
    }
    *csv = duplicate(gcvs::counting_csv(rows, oracle != 0));
    if (all_pass) *all_pass = pass ? 1 : 0;
  });
}

gcvs_status gcvs_tamper_sweep(const gcvs_sweep_config* config, gcvs_sweep_record* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    gcvs::SweepConfig c;
    c.vertices = config->vertices;
    c.palette = config->palette;
    c.trials = config->trials;
    c.model = {to_kind(config->model), config->bits};
    c.seed = config->seed;
    c.jobs = config->jobs;
    c.tamper_check_digits = config->tamper_check_digits != 0;
    const gcvs::SweepRecord r = gcvs::estimate_undetected_rate(c);
    *out = gcvs_sweep_record{r.vertices, r.palette, r.y, r.trials, r.undetected,
                             r.empirical_rate, r.bound, r.tolerance()};
  });
}

gcvs_status gcvs_sweep_csv(const gcvs_sweep_record* record, char** out) {
  return guarded([&] {
    require(record, "record");
    require(out, "out");
    gcvs::SweepRecord r;
    r.vertices = record->vertices;
    r.palette = record->palette;
    r.y = record->y;
    r.trials = record->trials;
    r.undetected = record->undetected;
    r.empirical_rate = record->empirical_rate;
    r.bound = record->bound;
    *out = duplicate(gcvs::sweep_csv_header() + gcvs::sweep_csv_row(r));
  });
}

}  // extern "C"
