#include "gp/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gp::core {

std::vector<int> Permutation::ranks() const {
  std::vector<int> inv(word.size());
  for (int pos = 0; pos < size(); ++pos) inv[word[pos]] = pos;
  return inv;
}

bool Permutation::valid() const {
  if (word.empty()) return false;
  std::vector<bool> seen(word.size(), false);
  for (int e : word) {
    if (e < 0 || e >= size() || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.word.resize(n);
  for (int i = 0; i < n; ++i) p.word[i] = i;
  return p;
}

bool TaggedPermutation::valid() const {
  return perm.valid() && 0 <= tag_zero && tag_zero <= tag_one && tag_one <= size();
}

bool TaggedPattern::valid() const {
  int n = lines[0].size();
  return lines[0].valid() && lines[1].valid() && lines[2].valid() &&
         lines[1].size() == n && lines[2].size() == n;
}

bool Triple::valid() const {
  int n = perms[0].size();
  return perms[0].valid() && perms[1].valid() && perms[2].valid() &&
         perms[1].size() == n && perms[2].size() == n;
}

// ---- parsing ----

namespace {

struct LineTokens {
  std::vector<int> elements;
  int tag_zero = -1;   // element count seen before "z"
  int tag_one = -1;
  bool has_z = false, has_o = false;
};

LineTokens scan_line(const std::string& text, std::size_t base, std::size_t line_start,
                     std::size_t line_end) {
  LineTokens out;
  std::size_t i = line_start;
  while (i < line_end) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line_end && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string tok = text.substr(start, i - start);
    if (tok == "z") {
      if (out.has_z) throw parse_error("duplicate tag z", base + start);
      if (out.has_o) throw parse_error("tag z after tag o", base + start);
      out.has_z = true;
      out.tag_zero = static_cast<int>(out.elements.size());
    } else if (tok == "o") {
      if (out.has_o) throw parse_error("duplicate tag o", base + start);
      out.has_o = true;
      out.tag_one = static_cast<int>(out.elements.size());
    } else {
      std::size_t pos = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw parse_error("bad token '" + tok + "'", base + start);
      }
      if (pos != tok.size() || value < 0)
        throw parse_error("bad token '" + tok + "'", base + start);
      out.elements.push_back(value);
    }
  }
  if (out.has_o && !out.has_z) throw parse_error("tag o without tag z", base + line_start);
  return out;
}

void check_word(const std::vector<int>& word, std::size_t where) {
  int n = static_cast<int>(word.size());
  if (n == 0) throw parse_error("empty permutation", where);
  std::vector<bool> seen(n, false);
  for (int e : word) {
    if (e >= n) throw parse_error("missing element (ids must be 0.." + std::to_string(n - 1) + ")", where);
    if (seen[e]) throw parse_error("duplicate element " + std::to_string(e), where);
    seen[e] = true;
  }
}

}  // namespace

std::variant<TaggedPattern, Triple> parse_pattern(const std::string& text) {
  if (text.find('|') != std::string::npos) {
    // token grammar, three lines
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = text.find('|', start);
      spans.emplace_back(start, bar == std::string::npos ? text.size() : bar);
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (spans.size() != 3) throw parse_error("expected exactly three lines", 0);
    std::array<LineTokens, 3> toks;
    for (int l = 0; l < 3; ++l) toks[l] = scan_line(text, 0, spans[l].first, spans[l].second);

    bool tagged = toks[0].has_z;
    for (int l = 0; l < 3; ++l) {
      if (toks[l].has_z != tagged || toks[l].has_o != tagged)
        throw parse_error("tags must appear on all lines or none", spans[l].first);
      check_word(toks[l].elements, spans[l].first);
      if (toks[l].elements.size() != toks[0].elements.size())
        throw parse_error("size mismatch across lines", spans[l].first);
    }
    if (!tagged) {
      Triple t;
      for (int l = 0; l < 3; ++l) t.perms[l].word = toks[l].elements;
      return t;
    }
    TaggedPattern p;
    for (int l = 0; l < 3; ++l) {
      p.lines[l].perm.word = toks[l].elements;
      p.lines[l].tag_zero = toks[l].tag_zero;
      p.lines[l].tag_one = toks[l].tag_one;
    }
    return p;
  }

  // digit-word shorthand
  std::vector<std::pair<std::string, std::size_t>> words;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    words.emplace_back(text.substr(start, i - start), start);
  }
  if (words.size() != 3) throw parse_error("expected three words", 0);
  Triple t;
  for (int l = 0; l < 3; ++l) {
    const auto& [w, where] = words[l];
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(w[k])))
        throw parse_error("bad digit word '" + w + "'", where + k);
      t.perms[l].word.push_back(w[k] - '0');
    }
    check_word(t.perms[l].word, where);
    if (t.perms[l].size() != t.perms[0].size())
      throw parse_error("size mismatch across lines", where);
  }
  return t;
}

Triple parse_triple(const std::string& text) {
  auto v = parse_pattern(text);
  if (auto* t = std::get_if<Triple>(&v)) return *t;
  throw parse_error("expected an untagged triple", 0);
}

TaggedPattern parse_tagged(const std::string& text) {
  auto v = parse_pattern(text);
  if (auto* p = std::get_if<TaggedPattern>(&v)) return *p;
  throw parse_error("expected a tagged pattern", 0);
}

namespace {

void format_line(std::ostringstream& os, const TaggedPermutation& tp) {
  int n = tp.size();
  bool first = true;
  auto emit = [&](const std::string& tok) {
    if (!first) os << ' ';
    os << tok;
    first = false;
  };
  for (int pos = 0; pos <= n; ++pos) {
    if (tp.tag_zero == pos) emit("z");
    if (tp.tag_one == pos) emit("o");
    if (pos < n) emit(std::to_string(tp.perm.word[pos]));
  }
}

}  // namespace

std::string format_pattern(const TaggedPattern& p) {
  std::ostringstream os;
  for (int l = 0; l < 3; ++l) {
    if (l) os << " | ";
    format_line(os, p.lines[l]);
  }
  return os.str();
}

std::string format_word(const Permutation& p) {
  if (p.size() > 10) throw std::invalid_argument("digit words require n <= 10");
  std::string s;
  for (int e : p.word) s.push_back(static_cast<char>('0' + e));
  return s;
}

std::string format_triple(const Triple& t) {
  if (t.size() <= 10)
    return format_word(t.perms[0]) + " " + format_word(t.perms[1]) + " " +
           format_word(t.perms[2]);
  std::ostringstream os;
  for (int l = 0; l < 3; ++l) {
    if (l) os << " | ";
    bool first = true;
    for (int e : t.perms[l].word) {
      if (!first) os << ' ';
      os << e;
      first = false;
    }
  }
  return os.str();
}

// ---- symmetry operations ----

Permutation reversed(const Permutation& p) {
  Permutation out = p;
  std::reverse(out.word.begin(), out.word.end());
  return out;
}

TaggedPermutation reversed(const TaggedPermutation& p) {
  TaggedPermutation out;
  out.perm = reversed(p.perm);
  out.tag_zero = p.size() - p.tag_one;
  out.tag_one = p.size() - p.tag_zero;
  return out;
}

Triple reversed_mask(const Triple& t, unsigned mask) {
  Triple out = t;
  for (int l = 0; l < 3; ++l)
    if (mask >> l & 1u) out.perms[l] = reversed(out.perms[l]);
  return out;
}

TaggedPattern rotated(const TaggedPattern& p) {
  return TaggedPattern{{p.lines[1], p.lines[2], p.lines[0]}};
}

Permutation relabeled(const Permutation& p, const std::vector<int>& phi) {
  Permutation out;
  out.word.reserve(p.word.size());
  for (int e : p.word) out.word.push_back(phi[e]);
  return out;
}

TaggedPermutation relabeled(const TaggedPermutation& p, const std::vector<int>& phi) {
  return TaggedPermutation{relabeled(p.perm, phi), p.tag_zero, p.tag_one};
}

TaggedPattern relabeled(const TaggedPattern& p, const std::vector<int>& phi) {
  return TaggedPattern{
      {relabeled(p.lines[0], phi), relabeled(p.lines[1], phi), relabeled(p.lines[2], phi)}};
}

Triple normalize_triple(const Triple& t) {
  int n = t.size();
  Permutation id = Permutation::identity(n);
  std::optional<std::pair<Permutation, Permutation>> best;
  for (int src = 0; src < 3; ++src) {
    for (int rev_first = 0; rev_first < 2; ++rev_first) {
      Permutation anchor = rev_first ? reversed(t.perms[src]) : t.perms[src];
      std::vector<int> phi = anchor.ranks();   // phi makes the anchor the identity
      int a = (src + 1) % 3, b = (src + 2) % 3;
      for (int swap = 0; swap < 2; ++swap) {
        const Permutation& pa = swap ? t.perms[b] : t.perms[a];
        const Permutation& pb = swap ? t.perms[a] : t.perms[b];
        for (int rev_a = 0; rev_a < 2; ++rev_a) {
          Permutation second = relabeled(rev_a ? reversed(pa) : pa, phi);
          for (int rev_b = 0; rev_b < 2; ++rev_b) {
            Permutation third = relabeled(rev_b ? reversed(pb) : pb, phi);
            auto cand = std::make_pair(second, std::move(third));
            if (!best || cand < *best) best = std::move(cand);
          }
        }
      }
    }
  }
  return Triple{{id, best->first, best->second}};
}

TaggedPattern tagged_class_key(const TaggedPattern& p) {
  std::optional<TaggedPattern> best;
  TaggedPattern q = p;
  for (int r = 0; r < 3; ++r) {
    std::vector<int> phi = q.lines[0].perm.ranks();
    TaggedPattern cand = relabeled(q, phi);
    if (!best || cand < *best) best = cand;
    q = rotated(q);
  }
  return *best;
}

TaggedPattern delete_element(const TaggedPattern& p, int e) {
  TaggedPattern out;
  for (int l = 0; l < 3; ++l) {
    const TaggedPermutation& tp = p.lines[l];
    int rank = tp.perm.ranks()[e];
    TaggedPermutation& o = out.lines[l];
    for (int x : tp.perm.word)
      if (x != e) o.perm.word.push_back(x > e ? x - 1 : x);
    o.tag_zero = tp.tag_zero - (rank < tp.tag_zero ? 1 : 0);
    o.tag_one = tp.tag_one - (rank < tp.tag_one ? 1 : 0);
  }
  return out;
}

// ---- enumeration ----

std::vector<std::pair<int, int>> all_taggings(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve((n + 1) * (n + 2) / 2);
  for (int z = 0; z <= n; ++z)
    for (int o = z; o <= n; ++o) out.emplace_back(z, o);
  return out;
}

TaggingStream::TaggingStream(Triple t, std::uint64_t start_index)
    : triple_(std::move(t)), tags_(all_taggings(triple_.size())), index_(start_index) {}

std::uint64_t TaggingStream::count() const {
  std::uint64_t m = tags_.size();
  return m * m * m;
}

void TaggingStream::reset(std::uint64_t index) { index_ = index; }

std::optional<TaggedPattern> TaggingStream::next() {
  if (index_ >= count()) return std::nullopt;
  std::uint64_t m = tags_.size(), k = index_++;
  auto t3 = tags_[k % m];
  auto t2 = tags_[k / m % m];
  auto t1 = tags_[k / (m * m)];
  TaggedPattern p;
  for (int l = 0; l < 3; ++l) p.lines[l].perm = triple_.perms[l];
  p.lines[0].tag_zero = t1.first;
  p.lines[0].tag_one = t1.second;
  p.lines[1].tag_zero = t2.first;
  p.lines[1].tag_one = t2.second;
  p.lines[2].tag_zero = t3.first;
  p.lines[2].tag_one = t3.second;
  return p;
}

NormalizedTripleStream::NormalizedTripleStream(int n, std::uint64_t start_index) : n_(n) {
  second_.resize(n);
  third_.resize(n);
  for (int i = 0; i < n; ++i) second_[i] = third_[i] = i;
  for (std::uint64_t k = 0; k < start_index; ++k)
    if (!next()) break;
}

bool NormalizedTripleStream::advance_raw() {
  if (fresh_) {
    fresh_ = false;
    return true;
  }
  if (std::next_permutation(third_.begin(), third_.end())) return true;
  return std::next_permutation(second_.begin(), second_.end());
}

std::optional<Triple> NormalizedTripleStream::next() {
  while (!exhausted_) {
    if (!advance_raw()) {
      exhausted_ = true;
      break;
    }
    Triple cand{{Permutation::identity(n_), Permutation{second_}, Permutation{third_}}};
    if (normalize_triple(cand) == cand) {
      ++emitted_;
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace gp::core
