#include "tendo/cli/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>
#include <tuple>

#include "tendo/error.hpp"

namespace tendo::cli {

std::vector<CorpusEntry> expand(const CorpusSpec& spec) {
  require(spec.count >= 0, "negative corpus count");
  std::vector<CorpusEntry> out;
  for (const auto seed : spec.seeds) {
    std::uint64_t index = 0;
    for (const auto p_value : spec.primes) {
      const Prime p(p_value);
      for (const int n : spec.half_dims) {
        require(n >= 1, "corpus half-dimension must be positive");
        const auto chars = constancy_characters(p, n);
        for (int i = 0; i < spec.count; ++i) {
          const auto& k = chars[static_cast<std::size_t>(i) % chars.size()];
          out.push_back(CorpusEntry{seed, index++, p_value, n, k.d.representative()});
        }
      }
    }
  }
  return out;
}

GSConfiguration entry_config(const CorpusEntry& entry) {
  const Prime p(entry.p);
  Rng rng = Rng::derive(entry.seed, entry.index);
  return constancy_fixture(p, entry.half_dim, QuadraticAlgebra{square_class(entry.character, p)}, rng).config;
}

namespace {

CheckRecord check_entry(const CorpusEntry& entry, bool timing) {
  CheckRecord rec;
  rec.entry = entry;
  const auto start = std::chrono::steady_clock::now();
  try {
    const GSConfiguration config = entry_config(entry);
    rec.inputs_digest = fnv1a_hex(to_json(config).dump());
    const ConstancyResult r = gs_constancy_check(config);
    rec.lhs = r.lhs;
    rec.rhs = r.rhs;
    rec.passed = r.passed;
    rec.reason = r.reason;
  } catch (const Error& e) {
    rec.passed = false;
    rec.reason = e.what();
  }
  if (timing) {
    rec.micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

}  // namespace

std::vector<CheckRecord> run_entries(const std::vector<CorpusEntry>& entries, const RunOptions& options) {
  std::vector<CheckRecord> records(entries.size());
  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) records[i] = check_entry(entries[i], options.timing);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.entry.seed, a.entry.index) < std::tie(b.entry.seed, b.entry.index);
  });
  return records;
}

namespace {

Json spec_json(const CorpusSpec& spec) {
  return Json{{"seeds", spec.seeds}, {"primes", spec.primes}, {"ns", spec.half_dims}, {"count", spec.count}};
}

Json entry_json(const CorpusEntry& e) {
  return Json{{"seed", e.seed}, {"index", e.index}, {"p", e.p}, {"n", e.half_dim}, {"K", to_json(e.character)}};
}

}  // namespace

Json corpus_document(const CorpusSpec& spec, const std::vector<CorpusEntry>& entries) {
  Json list = Json::array();
  for (const auto& e : entries) list.push_back(entry_json(e));
  return Json{{"generator", kGeneratorVersion}, {"spec", spec_json(spec)}, {"entries", std::move(list)}};
}

std::vector<CorpusEntry> entries_from_document(const Json& doc, CorpusSpec& spec_out) {
  if (!doc.is_object() || !doc.contains("generator")) throw ParseError("/", "not a corpus document");
  if (doc["generator"] != kGeneratorVersion) {
    throw ParseError("/generator", "corpus was produced by an incompatible generator");
  }
  const auto seq = [](const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array");
    return j;
  };
  const Json& spec = doc.at("spec");
  spec_out = CorpusSpec{};
  for (const auto& s : seq(spec.at("seeds"), "/spec/seeds")) spec_out.seeds.push_back(s.get<std::uint64_t>());
  for (const auto& p : seq(spec.at("primes"), "/spec/primes")) spec_out.primes.push_back(p.get<std::int64_t>());
  for (const auto& n : seq(spec.at("ns"), "/spec/ns")) spec_out.half_dims.push_back(n.get<int>());
  spec_out.count = spec.at("count").get<int>();

  std::vector<CorpusEntry> out;
  const Json& list = seq(doc.at("entries"), "/entries");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/entries/" + std::to_string(i);
    const Json& e = list[i];
    CorpusEntry entry;
    entry.seed = e.at("seed").get<std::uint64_t>();
    entry.index = e.at("index").get<std::uint64_t>();
    entry.p = integer_from_json(e.at("p"), at + "/p");
    entry.half_dim = static_cast<int>(integer_from_json(e.at("n"), at + "/n"));
    entry.character = rational_from_json(e.at("K"), at + "/K");
    out.push_back(std::move(entry));
  }
  return out;
}

Json manifest_document(const CorpusSpec& spec, const std::vector<CheckRecord>& records, bool timing) {
  Json list = Json::array();
  // (p, n, K) -> (total, passed)
  std::map<std::tuple<std::int64_t, int, std::string>, std::pair<int, int>> cases;
  int passed = 0;
  double total_micros = 0;
  for (const auto& r : records) {
    Json item = entry_json(r.entry);
    item["inputs_digest"] = r.inputs_digest;
    item["lhs"] = to_json(r.lhs);
    item["rhs"] = to_json(r.rhs);
    item["pass"] = r.passed;
    if (!r.reason.empty()) item["reason"] = r.reason;
    if (timing) item["timing_us"] = r.micros;
    list.push_back(std::move(item));
    auto& c = cases[{r.entry.p, r.entry.half_dim, to_string(r.entry.character)}];
    ++c.first;
    if (r.passed) {
      ++c.second;
      ++passed;
    }
    total_micros += r.micros;
  }
  Json per_case = Json::array();
  for (const auto& [key, counts] : cases) {
    per_case.push_back(Json{{"p", std::get<0>(key)},
                            {"n", std::get<1>(key)},
                            {"K", std::get<2>(key)},
                            {"total", counts.first},
                            {"passed", counts.second}});
  }
  Json summary{{"total", records.size()},
               {"passed", passed},
               {"failed", static_cast<int>(records.size()) - passed},
               {"cases", std::move(per_case)}};
  if (timing) summary["timing_us"] = total_micros;
  return Json{{"tool_version", kToolVersion},
              {"generator", kGeneratorVersion},
              {"spec", spec_json(spec)},
              {"records", std::move(list)},
              {"summary", std::move(summary)}};
}

}  // namespace tendo::cli
