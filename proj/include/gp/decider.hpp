#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gp/core.hpp"
#include "gp/lifting.hpp"
#include "gp/rational.hpp"

namespace gp::decide {

// Exact rational realization data. The realized pattern is the input triple
// with `reversal_mask` applied, tagged by `tags`; `coords` are the 3n line
// coordinates by vertex id.
struct Certificate {
  unsigned reversal_mask = 0;
  std::array<std::pair<int, int>, 3> tags{};
  std::vector<Rational> coords;
};

struct Verdict {
  std::optional<Certificate> certificate;
  bool realizable() const { return certificate.has_value(); }
};

// Known forbidden subpatterns of small sizes; a pattern containing one is
// unrealizable without a search.
struct ForbiddenCache {
  int max_size = 0;
  std::unordered_set<std::string> keys;   // formatted class keys, sizes 3..max_size
  std::vector<bool> size2;                // raw size-2 pattern table, 12^3 entries

  // Decides all 1728 raw size-2 patterns once. Sizes above 2 are looked up
  // through class keys inserted with `insert`.
  static ForbiddenCache with_size2();

  void insert(const core::TaggedPattern& key_pattern);
  bool contains_forbidden(const core::TaggedPattern& p) const;

  // O(1) per element pair, given precomputed ranks.
  bool contains_forbidden_pair(const core::TaggedPattern& p,
                               const lift::LiftContext& ctx) const;
  // Class-key lookups for the sizes above 2.
  bool contains_forbidden_keys(const core::TaggedPattern& p) const;
};

struct Options {
  bool short_circuit = true;          // stop at the first realizable instance
  bool incremental_branching = false; // branch undecided pairs one at a time
  const ForbiddenCache* cache = nullptr;
};

struct Stats {
  std::uint64_t tagged_instances = 0;
  std::uint64_t candidates = 0;
  std::uint64_t cache_hits = 0;
};

// The both-final-orientations-unknown guard; never expected to fire.
class lemma7_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Canonical realizability of a tagged pattern: branches over the undecided
// comparisons, refines the representative poset per pair, extracts an exact
// certificate on success.
Verdict decide_tagged(const core::TaggedPattern& p, const Options& opts = {},
                      Stats* stats = nullptr);

// Disjunction of decide_tagged over all taggings of the triple, in
// lexicographic tag order.
Verdict decide_canonical(const core::Triple& t, const Options& opts = {},
                         Stats* stats = nullptr);

// Disjunction of decide_canonical over the 8 reversal masks (ascending).
Verdict decide_full(const core::Triple& t, const Options& opts = {},
                    Stats* stats = nullptr);

// Coordinates from an accepting closed graph: topological order gives the
// representatives the integers 2..3n+1; f propagates them back.
std::vector<Rational> extract_realization(const lift::RepGraph& g,
                                          const std::vector<lift::Region>& regions);

// The tagged pattern a certificate claims to realize.
core::TaggedPattern certificate_pattern(const core::Triple& t, const Certificate& cert);

}  // namespace gp::decide
