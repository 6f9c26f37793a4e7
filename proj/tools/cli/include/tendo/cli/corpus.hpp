#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tendo/cli/json_io.hpp"

namespace tendo::cli {

inline constexpr const char* kToolVersion = "tendo 0.1.0";
/// Bumped whenever fixture generation changes in a way that alters records.
inline constexpr const char* kGeneratorVersion = "constancy-fixture/1";

struct CorpusSpec {
  std::vector<std::uint64_t> seeds;
  std::vector<std::int64_t> primes;
  std::vector<int> half_dims;
  /// Entries per (seed, p, n).
  int count = 1;
};

/// One fixture: (seed, index) determines the configuration completely.
struct CorpusEntry {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::int64_t p = 0;
  int half_dim = 0;
  Rational character;  // representative of the square class d, K = Q_p(√d)
};

/// Entries in (seed, index) order. Within a seed, indices run over (p, n) blocks of `count`
/// entries, and entry i of a block uses the i-th admissible character cyclically.
std::vector<CorpusEntry> expand(const CorpusSpec& spec);

GSConfiguration entry_config(const CorpusEntry& entry);

struct CheckRecord {
  CorpusEntry entry;
  std::string inputs_digest;
  Mu8 lhs;
  Mu8 rhs;
  bool passed = false;
  std::string reason;
  double micros = 0;
};

struct RunOptions {
  unsigned jobs = 0;  // 0: hardware concurrency
  bool timing = true;
};

/// Runs gs_constancy_check on every entry, in parallel; records come back in (seed, index) order.
std::vector<CheckRecord> run_entries(const std::vector<CorpusEntry>& entries, const RunOptions& options = {});

/// Corpus file: generator tag, spec, and the entry list.
Json corpus_document(const CorpusSpec& spec, const std::vector<CorpusEntry>& entries);
/// Reads the entries back; rejects an unknown generator tag.
std::vector<CorpusEntry> entries_from_document(const Json& doc, CorpusSpec& spec_out);

Json manifest_document(const CorpusSpec& spec, const std::vector<CheckRecord>& records, bool timing);

}  // namespace tendo::cli
