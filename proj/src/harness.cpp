#include "gp/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "gp/geometry.hpp"

namespace gp::harness {

using nlohmann::json;

std::string record_to_json(const ResultRecord& r) {
  json j;
  j["triple"] = r.triple;
  j["reversals"] = r.reversals ? json(*r.reversals) : json(nullptr);
  if (r.tags) {
    json tags = json::array();
    for (const auto& [z, o] : *r.tags) tags.push_back({z, o});
    j["tags"] = tags;
  } else {
    j["tags"] = nullptr;
  }
  j["verdict"] = r.realizable ? "realizable" : "unrealizable";
  j["certificate"] = r.certificate ? json(*r.certificate) : json(nullptr);
  j["runtime_ms"] = r.runtime_ms;
  return j.dump();
}

ResultRecord record_from_json(const std::string& line) {
  json j = json::parse(line);
  ResultRecord r;
  r.triple = j.at("triple").get<std::array<std::string, 3>>();
  if (!j.at("reversals").is_null()) r.reversals = j["reversals"].get<unsigned>();
  if (!j.at("tags").is_null()) {
    std::array<std::pair<int, int>, 3> tags;
    for (int l = 0; l < 3; ++l) {
      tags[l] = {j["tags"][l][0].get<int>(), j["tags"][l][1].get<int>()};
    }
    r.tags = tags;
  }
  r.realizable = j.at("verdict").get<std::string>() == "realizable";
  if (!j.at("certificate").is_null())
    r.certificate = j["certificate"].get<std::array<std::vector<std::string>, 3>>();
  r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  return r;
}

ResultRecord make_record(const core::Triple& t, const decide::Verdict& v,
                         std::int64_t runtime_ms) {
  ResultRecord r;
  for (int l = 0; l < 3; ++l) r.triple[l] = core::format_word(t.perms[l]);
  r.runtime_ms = runtime_ms;
  r.realizable = v.realizable();
  if (v.realizable()) {
    const auto& cert = *v.certificate;
    r.reversals = cert.reversal_mask;
    r.tags = cert.tags;
    int n = t.size();
    std::array<std::vector<std::string>, 3> lines;
    for (int l = 0; l < 3; ++l)
      for (int e = 0; e < n; ++e) lines[l].push_back(format_rational(cert.coords[l * n + e]));
    r.certificate = lines;
  }
  return r;
}

bool reverify_record(const ResultRecord& r) {
  core::Triple t;
  for (int l = 0; l < 3; ++l) {
    for (char c : r.triple[l]) t.perms[l].word.push_back(c - '0');
    if (!t.perms[l].valid()) return false;
  }
  if (!r.realizable) return !r.certificate && !r.reversals && !r.tags;
  if (!r.certificate || !r.reversals || !r.tags) return false;
  decide::Certificate cert;
  cert.reversal_mask = *r.reversals;
  cert.tags = *r.tags;
  int n = t.size();
  cert.coords.resize(3 * n);
  for (int l = 0; l < 3; ++l) {
    if (static_cast<int>((*r.certificate)[l].size()) != n) return false;
    for (int e = 0; e < n; ++e)
      cert.coords[l * n + e] = parse_rational((*r.certificate)[l][e]);
  }
  core::TaggedPattern p = decide::certificate_pattern(t, cert);
  return geom::verify_certificate(p, geom::TriangleConfig{n, cert.coords});
}

std::vector<ResultRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ResultRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(record_from_json(line));
  }
  return out;
}

int effective_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GP_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Index-dispensing parallel for; results land in caller-provided slots.
template <typename Fn>
void parallel_for(std::uint64_t count, int threads, Fn&& fn) {
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

EnumerationSummary run_enumeration(int n, const std::string& out, const RunOptions& opts) {
  core::NormalizedTripleStream stream(n, opts.start_index);
  std::vector<core::Triple> triples;
  while (auto t = stream.next()) triples.push_back(std::move(*t));

  int threads = effective_threads(opts.threads);
  std::vector<std::string> lines(triples.size());
  std::vector<char> realizable(triples.size(), 0);
  std::atomic<std::uint64_t> instances{0};

  // The subpattern cache prunes the bulk of the unrealizable taggings; the
  // verdicts are the same either way (checked down at size <= 4 by the
  // acceptance suite).
  std::optional<decide::ForbiddenCache> cache;
  if (opts.use_cache && n > 2) cache = decide::ForbiddenCache::with_size2();

  parallel_for(triples.size(), threads, [&](std::uint64_t i) {
    decide::Options dopts;
    dopts.short_circuit = opts.short_circuit;
    dopts.cache = cache ? &*cache : nullptr;
    decide::Stats stats;
    auto t0 = std::chrono::steady_clock::now();
    decide::Verdict v = decide::decide_full(triples[i], dopts, &stats);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (v.realizable()) {
      core::TaggedPattern p = decide::certificate_pattern(triples[i], *v.certificate);
      geom::TriangleConfig cfg{n, v.certificate->coords};
      if (!geom::verify_certificate(p, cfg))
        throw std::logic_error("emitted certificate failed verification");
      realizable[i] = 1;
    }
    instances += stats.tagged_instances;
    lines[i] = record_to_json(make_record(triples[i], v, ms));
  });

  std::ofstream os(out, opts.start_index ? std::ios::app : std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + out);
  for (const auto& line : lines) os << line << '\n';

  EnumerationSummary summary;
  summary.n = n;
  summary.total = triples.size();
  for (char c : realizable) summary.realizable += c;
  summary.unrealizable = summary.total - summary.realizable;
  summary.tagged_instances = instances.load();
  return summary;
}

namespace {

// Canonical class representatives of size n have an identity first word;
// verdict lookups on deletions are memoized by class key.
struct MiningShard {
  std::vector<core::TaggedPattern> found;
  std::unordered_map<std::string, bool> memo;

  bool realizable_key(const core::TaggedPattern& key) {
    std::string s = core::format_pattern(key);
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    bool r = decide::decide_tagged(key).realizable();
    memo.emplace(std::move(s), r);
    return r;
  }

  void consider(const core::TaggedPattern& p) {
    if (core::tagged_class_key(p) != p) return;
    if (decide::decide_tagged(p).realizable()) return;
    for (int e = 0; e < p.size(); ++e)
      if (!realizable_key(core::tagged_class_key(core::delete_element(p, e)))) return;
    found.push_back(p);
  }
};

std::vector<std::vector<int>> all_words(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

std::vector<core::TaggedPattern> mine_minimal_forbidden(int max_n, bool long_run, int threads) {
  if (max_n > 4 && !long_run)
    throw std::invalid_argument("mining beyond size 4 requires the long-run flag");
  std::vector<core::TaggedPattern> all;
  for (int n = 2; n <= max_n; ++n) {
    auto words = all_words(n);
    auto tags = core::all_taggings(n);
    int nthreads = effective_threads(threads);
    std::vector<MiningShard> shards(words.size());

    parallel_for(words.size(), nthreads, [&](std::uint64_t wi) {
      MiningShard& shard = shards[wi];
      core::TaggedPattern p;
      p.lines[0].perm = core::Permutation::identity(n);
      p.lines[1].perm.word = words[wi];
      for (const auto& w3 : words) {
        p.lines[2].perm.word = w3;
        for (auto [z1, o1] : tags) {
          p.lines[0].tag_zero = z1;
          p.lines[0].tag_one = o1;
          for (auto [z2, o2] : tags) {
            p.lines[1].tag_zero = z2;
            p.lines[1].tag_one = o2;
            for (auto [z3, o3] : tags) {
              p.lines[2].tag_zero = z3;
              p.lines[2].tag_one = o3;
              shard.consider(p);
            }
          }
        }
      }
    });
    for (auto& shard : shards)
      for (auto& p : shard.found) all.push_back(std::move(p));
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::pair<std::string, std::string>> parse_forbidden_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table " + path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto space = line.find(' ');
    if (space == std::string::npos || line.size() != 13 || space != 6)
      fail("expected two 6-digit words");
    std::string a = line.substr(0, 6), b = line.substr(7);
    for (const std::string& w : {a, b}) {
      std::array<bool, 6> seen{};
      for (char c : w) {
        if (c < '0' || c > '5' || seen[c - '0']) fail("corrupted word '" + w + "'");
        seen[c - '0'] = true;
      }
    }
    if (a >= b) fail("pair not in normalized order");
    if (!out.empty() && out.back() >= std::make_pair(a, b)) fail("table not sorted");
    out.emplace_back(std::move(a), std::move(b));
  }
  if (out.empty()) fail("empty table");
  return out;
}

std::uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

DiffReport compare_forbidden_list(const std::vector<ResultRecord>& results,
                                  const std::string& table_file) {
  std::set<std::pair<std::string, std::string>> found;
  for (const auto& r : results)
    if (!r.realizable) found.emplace(r.triple[1], r.triple[2]);
  auto table = parse_forbidden_table(table_file);
  std::set<std::pair<std::string, std::string>> expected(table.begin(), table.end());

  DiffReport diff;
  for (const auto& e : expected)
    if (!found.count(e)) diff.missing_in_results.push_back(e);
  for (const auto& f : found)
    if (!expected.count(f)) diff.extra_in_results.push_back(f);
  return diff;
}

}  // namespace gp::harness
