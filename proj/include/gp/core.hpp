#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gp::core {

// A permutation is stored as a word: the element ids in line order.
// Elements are 0-based integers 0..n-1.
struct Permutation {
  std::vector<int> word;

  int size() const { return static_cast<int>(word.size()); }
  auto operator<=>(const Permutation&) const = default;

  // rank[e] = position of element e in the word.
  std::vector<int> ranks() const;
  bool valid() const;
  static Permutation identity(int n);
};

// A permutation together with the two parallelotope tags. tag_zero (z) is
// the number of elements preceding ^0, tag_one (o) the number preceding ^1;
// 0 <= z <= o <= n.
struct TaggedPermutation {
  Permutation perm;
  int tag_zero = 0;
  int tag_one = 0;

  int size() const { return perm.size(); }
  bool valid() const;
  auto operator<=>(const TaggedPermutation&) const = default;
};

// Three tagged permutations, one per canonical line (x, y, z in that order).
struct TaggedPattern {
  std::array<TaggedPermutation, 3> lines;

  int size() const { return lines[0].size(); }
  bool valid() const;
  auto operator<=>(const TaggedPattern&) const = default;
};

struct Triple {
  std::array<Permutation, 3> perms;

  int size() const { return perms[0].size(); }
  bool valid() const;
  auto operator<=>(const Triple&) const = default;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Token grammar: three lines joined by " | ", each line whitespace-separated
// tokens that are decimal element ids or the literals "z" (^0) and "o" (^1).
// Untagged shorthand: three digit-words separated by spaces (n <= 10).
// Absent tags yield a Triple.
std::variant<TaggedPattern, Triple> parse_pattern(const std::string& text);

Triple parse_triple(const std::string& text);
TaggedPattern parse_tagged(const std::string& text);

std::string format_pattern(const TaggedPattern& p);
std::string format_triple(const Triple& t);       // digit words when n <= 10
std::string format_word(const Permutation& p);    // digit word, n <= 10 only

// ---- symmetry operations ----

Permutation reversed(const Permutation& p);
// Reversal maps tags (z, o) to (n-o, n-z).
TaggedPermutation reversed(const TaggedPermutation& p);
// Reverses the permutations selected by the mask (bit i = line i).
Triple reversed_mask(const Triple& t, unsigned mask);

// Circular permutation of the triple: lines (2,3,1).
TaggedPattern rotated(const TaggedPattern& p);

// Applies the element relabeling phi (word'[k] = phi[word[k]]).
Permutation relabeled(const Permutation& p, const std::vector<int>& phi);
TaggedPermutation relabeled(const TaggedPermutation& p, const std::vector<int>& phi);
TaggedPattern relabeled(const TaggedPattern& p, const std::vector<int>& phi);

// Appendix-style normal form: among the six anchor choices (each permutation
// or its reverse relabeled to the identity), with the remaining two placed in
// either order and independently reversed, returns the lexicographically
// smallest triple. Idempotent and constant on symmetry orbits.
Triple normalize_triple(const Triple& t);

// Lexicographic minimum of the equivalence class under element relabeling
// and circular rotation of the triple. Idempotent; equal keys iff equivalent.
TaggedPattern tagged_class_key(const TaggedPattern& p);

// Deletes element e from all three lines, compacting ids and adjusting tags.
TaggedPattern delete_element(const TaggedPattern& p, int e);

// ---- enumeration ----

// All (z, o) placements with 0 <= z <= o <= n, in lexicographic order.
std::vector<std::pair<int, int>> all_taggings(int n);

// Streams the C(n+2,2)^3 taggings of a triple in lexicographic tag order,
// line 3 fastest. Deterministic and restartable from an index.
class TaggingStream {
 public:
  explicit TaggingStream(Triple t, std::uint64_t start_index = 0);
  std::optional<TaggedPattern> next();
  void reset(std::uint64_t index = 0);
  std::uint64_t count() const;   // C(n+2,2)^3
  std::uint64_t index() const { return index_; }

 private:
  Triple triple_;
  std::vector<std::pair<int, int>> tags_;
  std::uint64_t index_ = 0;
};

// Streams each normalized triple of size n exactly once, in lexicographic
// order of (second word, third word). Restartable from an emitted index.
class NormalizedTripleStream {
 public:
  explicit NormalizedTripleStream(int n, std::uint64_t start_index = 0);
  std::optional<Triple> next();
  std::uint64_t index() const { return emitted_; }

 private:
  bool advance_raw();
  int n_;
  std::vector<int> second_, third_;
  bool exhausted_ = false;
  bool fresh_ = true;
  std::uint64_t emitted_ = 0;
};

}  // namespace gp::core
