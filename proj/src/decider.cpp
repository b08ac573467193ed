#include "gp/decider.hpp"

#include <algorithm>

#include "gp/orientations.hpp"

namespace gp::decide {

namespace {

// Raw size-2 pattern code: per line, word order bit (b-before-a) and the
// triangular tag index over (z, o) counts.
inline int size2_line_code(bool b_first, int zc, int oc) {
  int t = zc == 0 ? oc : zc == 1 ? 2 + oc : 5;
  return (b_first ? 6 : 0) + t;
}

core::TaggedPattern size2_pattern(int code) {
  core::TaggedPattern p;
  static constexpr int kTagZ[6] = {0, 0, 0, 1, 1, 2};
  static constexpr int kTagO[6] = {0, 1, 2, 1, 2, 2};
  for (int l = 2; l >= 0; --l) {
    int line = code % 12;
    code /= 12;
    p.lines[l].perm.word = line >= 6 ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
    p.lines[l].tag_zero = kTagZ[line % 6];
    p.lines[l].tag_one = kTagO[line % 6];
  }
  return p;
}

}  // namespace

ForbiddenCache ForbiddenCache::with_size2() {
  ForbiddenCache cache;
  cache.max_size = 2;
  cache.size2.resize(12 * 12 * 12);
  for (int code = 0; code < 12 * 12 * 12; ++code)
    cache.size2[code] = !decide_tagged(size2_pattern(code)).realizable();
  return cache;
}

void ForbiddenCache::insert(const core::TaggedPattern& key_pattern) {
  max_size = std::max(max_size, key_pattern.size());
  if (key_pattern.size() > 2) keys.insert(core::format_pattern(key_pattern));
}

bool ForbiddenCache::contains_forbidden_pair(const core::TaggedPattern& p,
                                             const lift::LiftContext& ctx) const {
  if (size2.empty()) return false;
  int n = ctx.n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int code = 0;
      for (int l = 0; l < 3; ++l) {
        int ra = ctx.rank[l * n + a], rb = ctx.rank[l * n + b];
        int z = p.lines[l].tag_zero, o = p.lines[l].tag_one;
        code = code * 12 +
               size2_line_code(ra > rb, (ra < z) + (rb < z), (ra < o) + (rb < o));
      }
      if (size2[code]) return true;
    }
  }
  return false;
}

bool ForbiddenCache::contains_forbidden(const core::TaggedPattern& p) const {
  int n = p.size();
  if (n > 2 && !size2.empty() && contains_forbidden_pair(p, lift::make_context(p))) return true;
  return contains_forbidden_keys(p);
}

bool ForbiddenCache::contains_forbidden_keys(const core::TaggedPattern& p) const {
  int n = p.size();
  for (int size = 3; size <= max_size && size < n; ++size) {
    // all subpatterns on `size` elements, by deleting the complement
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      core::TaggedPattern sub = p;
      for (int e = n - 1; e >= 0; --e)
        if (std::find(pick.begin(), pick.end(), e) == pick.end())
          sub = core::delete_element(sub, e);
      if (keys.count(core::format_pattern(core::tagged_class_key(sub)))) return true;
      int k = size - 1;
      while (k >= 0 && pick[k] == n - size + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int j = k + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

std::vector<Rational> extract_realization(const lift::RepGraph& g,
                                          const std::vector<lift::Region>& regions) {
  std::vector<int> order = g.topological_sort();
  lift::CellOrder cell = lift::cell_from_rep_order(regions, order);
  return lift::witness_from_order(cell);
}

namespace {

// State for one tagged instance: context, base graph, sign vectors, unknowns.
struct TaggedSearch {
  const core::TaggedPattern& pattern;
  const Options& opts;
  Stats* stats;

  lift::LiftContext ctx;
  lift::RepGraph base;
  lift::RepGraph work;
  std::vector<orient::SignVector> sign_vectors;   // per pair, (i,j) i<j
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> unknowns;                      // sorted vertex ids

  TaggedSearch(const core::TaggedPattern& p, lift::LiftContext context, const Options& o,
               Stats* s)
      : pattern(p), opts(o), stats(s), ctx(std::move(context)),
        base(lift::base_graph(ctx)), work(p.size()) {
    int n = ctx.n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        pairs.emplace_back(i, j);
        sign_vectors.push_back(orient::initial_sign_vector(i, j, ctx, &unknowns));
      }
    std::sort(unknowns.begin(), unknowns.end());
  }

  // Runs the pair loop on `work` (candidate edges already closed in).
  // Returns true when every pair is disjoint; `work` then accepts.
  bool refine_pairs() {
    int n = ctx.n;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto sv = orient::resolve_sign_vector(sign_vectors[k], work, n);
      if ((sv[0] == sv[1] && sv[1] == sv[2]) || (sv[3] == sv[4] && sv[4] == sv[5]))
        continue;
      auto [i, j] = pairs[k];
      orient::RenamedPair re = orient::rename_guigue(sv, i, j, n);
      auto o1 = orient::final_orientation({re.vertex[0], re.vertex[1], re.vertex[3], re.vertex[4]},
                                          work, ctx);
      auto o2 = orient::final_orientation({re.vertex[0], re.vertex[2], re.vertex[5], re.vertex[3]},
                                          work, ctx);
      if (!o1.determined() && !o2.determined())
        throw lemma7_violation("both final orientations unknown for pair (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
      if (o1.determined() && o1.sign == 1) continue;
      if (o2.determined() && o2.sign == 1) continue;
      if (o1.determined() && o2.determined()) return false;   // intersection
      // the undetermined test must hold in every good extension
      const auto& pend = o1.determined() ? o2 : o1;
      auto added = pend.sign == 1 ? work.add_edge_closure(pend.w, pend.v)
                                  : work.add_edge_closure(pend.v, pend.w);
      if (added == lift::RepGraph::AddEdge::kCycle)
        throw std::logic_error("forced edge closed a cycle");
    }
    return true;
  }

  std::optional<std::vector<Rational>> accept() {
    return extract_realization(work, ctx.region);
  }

  // Default scheme: ascending bitmask over the unknown set; bit b set means
  // v_b < f(w_b).
  std::optional<std::vector<Rational>> run_bitmask() {
    int m = static_cast<int>(unknowns.size());
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      if (stats) ++stats->candidates;
      work.copy_bits_from(base);
      bool dead = false;
      for (int b = 0; b < m && !dead; ++b) {
        int v = unknowns[b], w = orient::associated_vertex(v, ctx.n);
        if (mask >> b & 1) {
          if (work.edge(w, v)) dead = true;
          work.set_edge(v, w);
        } else {
          if (work.edge(v, w)) dead = true;
          work.set_edge(w, v);
        }
      }
      if (dead || !work.close_acyclic()) continue;
      if (refine_pairs()) return accept();
    }
    return std::nullopt;
  }

  // Optional scheme: branch pairs one at a time, skipping choices the
  // closure already forces. Low branch (v > f(w)) first, matching the
  // ascending-mask exploration.
  std::optional<std::vector<Rational>> run_incremental() {
    work.copy_bits_from(base);
    return branch(0);
  }

  std::optional<std::vector<Rational>> branch(int b) {
    if (b == static_cast<int>(unknowns.size())) {
      if (stats) ++stats->candidates;
      lift::RepGraph saved(ctx.n);
      saved.copy_bits_from(work);
      auto got = refine_pairs() ? accept() : std::nullopt;
      work.copy_bits_from(saved);
      return got;
    }
    int v = unknowns[b], w = orient::associated_vertex(v, ctx.n);
    if (work.edge(v, w) || work.edge(w, v)) return branch(b + 1);   // already decided
    lift::RepGraph saved(ctx.n);
    saved.copy_bits_from(work);
    for (int bit = 0; bit < 2; ++bit) {
      auto res = bit ? work.add_edge_closure(v, w) : work.add_edge_closure(w, v);
      if (res != lift::RepGraph::AddEdge::kCycle) {
        auto got = branch(b + 1);
        if (got) return got;
      }
      work.copy_bits_from(saved);
    }
    return std::nullopt;
  }
};

}  // namespace

Verdict decide_tagged(const core::TaggedPattern& p, const Options& opts, Stats* stats) {
  if (stats) ++stats->tagged_instances;
  lift::LiftContext ctx = lift::make_context(p);
  if (opts.cache) {
    const ForbiddenCache& cache = *opts.cache;
    bool hit = cache.contains_forbidden_pair(p, ctx);
    if (!hit && cache.max_size > 2) hit = cache.contains_forbidden_keys(p);
    if (hit) {
      if (stats) ++stats->cache_hits;
      return Verdict{};
    }
  }
  TaggedSearch search(p, std::move(ctx), opts, stats);
  auto coords = opts.incremental_branching ? search.run_incremental() : search.run_bitmask();
  if (!coords) return Verdict{};
  Certificate cert;
  cert.reversal_mask = 0;
  for (int l = 0; l < 3; ++l) cert.tags[l] = {p.lines[l].tag_zero, p.lines[l].tag_one};
  cert.coords = std::move(*coords);
  return Verdict{std::move(cert)};
}

Verdict decide_canonical(const core::Triple& t, const Options& opts, Stats* stats) {
  core::TaggingStream stream(t);
  Verdict first;
  while (auto p = stream.next()) {
    Verdict v = decide_tagged(*p, opts, stats);
    if (v.realizable() && !first.realizable()) {
      first = std::move(v);
      if (opts.short_circuit) return first;
    }
  }
  return first;
}

Verdict decide_full(const core::Triple& t, const Options& opts, Stats* stats) {
  Verdict first;
  for (unsigned mask = 0; mask < 8; ++mask) {
    Verdict v = decide_canonical(core::reversed_mask(t, mask), opts, stats);
    if (v.realizable() && !first.realizable()) {
      v.certificate->reversal_mask = mask;
      first = std::move(v);
      if (opts.short_circuit) return first;
    }
  }
  return first;
}

core::TaggedPattern certificate_pattern(const core::Triple& t, const Certificate& cert) {
  core::Triple base = core::reversed_mask(t, cert.reversal_mask);
  core::TaggedPattern p;
  for (int l = 0; l < 3; ++l) {
    p.lines[l].perm = base.perms[l];
    p.lines[l].tag_zero = cert.tags[l].first;
    p.lines[l].tag_one = cert.tags[l].second;
  }
  return p;
}

}  // namespace gp::decide
