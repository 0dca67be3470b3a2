#ifndef SNAKES_WORD_CORE_HPP
#define SNAKES_WORD_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "snakes/error.hpp"

namespace snakes {

/// A finite word over an abstract alphabet. Letters are opaque ids stored as
/// small non-negative integers; positions are 1-based in the public API and
/// in all error messages. Words are immutable values.
///
/// Text form: 'a'..'z' for letter ids 0..25, then "x1", "x2", ... for larger
/// alphabets ("x" followed by digits is always the numbered form).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int c : letters_)
      if (c < 0) fail(Errc::BadWordText, "negative letter id");
  }

  static Word parse(std::string_view text) {
    std::vector<int> letters;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c < 'a' || c > 'z') fail(Errc::BadWordText, "bad character in word at offset " + std::to_string(i));
      if (c == 'x' && i + 1 < text.size() && text[i + 1] >= '0' && text[i + 1] <= '9') {
        std::size_t j = i + 1;
        long n = 0;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
          n = n * 10 + (text[j] - '0');
          ++j;
        }
        if (n < 1) fail(Errc::BadWordText, "bad numbered letter in word");
        letters.push_back(25 + static_cast<int>(n));
        i = j;
      } else {
        letters.push_back(c - 'a');
        ++i;
      }
    }
    return Word(std::move(letters));
  }

  std::string str() const {
    std::string out;
    for (int c : letters_) out += letter_text(c);
    return out;
  }

  static std::string letter_text(int id) {
    if (id < 26) return std::string(1, static_cast<char>('a' + id));
    return "x" + std::to_string(id - 25);
  }

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Letter at 1-based position.
  int at(int pos) const {
    if (pos < 1 || pos > size()) fail(Errc::BadIndex, "position " + std::to_string(pos) + " out of range");
    return letters_[static_cast<std::size_t>(pos - 1)];
  }

  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  std::vector<int> letters_;
};

/// The closed subword [w_j ... w_l], 1-based inclusive bounds.
inline Word subword(const Word& w, int j, int l) {
  if (j < 1 || l > w.size() || j > l) fail(Errc::BadIndex, "bad subword bounds");
  return Word(std::vector<int>(w.letters().begin() + (j - 1), w.letters().begin() + l));
}

namespace detail {

/// Parses "1,5;2,7;3,6" into blocks of positive integers.
inline std::vector<std::vector<int>> parse_blocks(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  if (text.empty()) return blocks;
  std::vector<int> block;
  int value = -1;
  const auto push_value = [&] {
    if (value < 0) fail(Errc::BadBlockText, "empty element in block text");
    block.push_back(value);
    value = -1;
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = (value < 0 ? 0 : value) * 10 + (c - '0');
    } else if (c == ',') {
      push_value();
    } else if (c == ';') {
      push_value();
      blocks.push_back(std::move(block));
      block.clear();
    } else {
      fail(Errc::BadBlockText, std::string("bad character '") + c + "' in block text");
    }
  }
  push_value();
  blocks.push_back(std::move(block));
  return blocks;
}

inline std::string format_blocks(const std::vector<std::vector<int>>& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ';';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks[b][i]);
    }
  }
  return out;
}

/// Sorts elements within blocks and blocks by minimum element; verifies the
/// blocks are disjoint, non-empty and cover {1..n} exactly.
inline std::vector<std::vector<int>> normalize_partition(std::vector<std::vector<int>> blocks) {
  int n = 0;
  for (auto& block : blocks) {
    if (block.empty()) fail(Errc::BadBlockText, "empty block");
    std::sort(block.begin(), block.end());
    n += static_cast<int>(block.size());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& block : blocks)
    for (int e : block) {
      if (e < 1 || e > n) fail(Errc::BadBlockText, "blocks do not cover 1..n: element " + std::to_string(e));
      if (seen[static_cast<std::size_t>(e)]++) fail(Errc::BadBlockText, "duplicate element " + std::to_string(e));
    }
  return blocks;
}

}  // namespace detail

/// A partition of positions {1..m} into disjoint blocks. Canonical order:
/// blocks sorted by minimum element, elements ascending.
class SetPartition {
 public:
  SetPartition() = default;

  static SetPartition of_blocks(std::vector<std::vector<int>> blocks) {
    SetPartition p;
    p.blocks_ = detail::normalize_partition(std::move(blocks));
    return p;
  }

  /// Parses the "1,5;2,7;3,6;4,8" text form.
  static SetPartition parse(std::string_view text) {
    return of_blocks(detail::parse_blocks(text));
  }

  std::string str() const { return detail::format_blocks(blocks_); }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int element_count() const {
    int n = 0;
    for (const auto& b : blocks_) n += static_cast<int>(b.size());
    return n;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// P(W): positions i and i' share a block iff w_i = w_i'.
inline SetPartition partition(const Word& w) {
  if (w.empty()) fail(Errc::EmptyWord, "partition of the empty word is undefined");
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;  // letter id -> block index
  for (int pos = 1; pos <= w.size(); ++pos) {
    const int c = w.at(pos);
    if (c >= static_cast<int>(block_of.size())) block_of.resize(static_cast<std::size_t>(c) + 1, -1);
    if (block_of[static_cast<std::size_t>(c)] < 0) {
      block_of[static_cast<std::size_t>(c)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(c)])].push_back(pos);
  }
  return SetPartition::of_blocks(std::move(blocks));
}

/// Relabels letters 0,1,2,... in order of first appearance. Idempotent;
/// preserves the position partition.
inline Word canonicalize(const Word& w) {
  std::vector<int> map;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size()));
  int next = 0;
  for (int c : w.letters()) {
    if (c >= static_cast<int>(map.size())) map.resize(static_cast<std::size_t>(c) + 1, -1);
    if (map[static_cast<std::size_t>(c)] < 0) map[static_cast<std::size_t>(c)] = next++;
    out.push_back(map[static_cast<std::size_t>(c)]);
  }
  return Word(std::move(out));
}

/// Words are equivalent iff P(W) = P(W').
inline bool equivalent(const Word& a, const Word& b) {
  return canonicalize(a) == canonicalize(b);
}

/// No repeated letters. The empty word is primitive.
inline bool is_primitive(const Word& w) {
  std::vector<char> seen;
  for (int c : w.letters()) {
    if (c >= static_cast<int>(seen.size())) seen.resize(static_cast<std::size_t>(c) + 1, 0);
    if (seen[static_cast<std::size_t>(c)]++) return false;
  }
  return true;
}

/// w_1 = w_m and the prefix [w_1 ... w_{m-1}] is primitive.
inline bool is_semi_primitive(const Word& w) {
  if (w.size() < 2) fail(Errc::TooShort, "semi-primitivity needs length >= 2");
  if (w.at(1) != w.at(w.size())) return false;
  return is_primitive(subword(w, 1, w.size() - 1));
}

/// Exactly two occurrences of every letter.
inline bool is_binary(const Word& w) {
  std::vector<int> count;
  for (int c : w.letters()) {
    if (c >= static_cast<int>(count.size())) count.resize(static_cast<std::size_t>(c) + 1, 0);
    if (++count[static_cast<std::size_t>(c)] > 2) return false;
  }
  for (int n : count)
    if (n == 1) return false;
  return true;
}

/// r(j) = j if w_j is the first occurrence of its letter, otherwise the
/// position of that first occurrence. 1-based positions.
inline std::vector<int> node_entry_map(const Word& w) {
  if (w.empty()) fail(Errc::EmptyWord, "node entry map of the empty word is undefined");
  std::vector<int> first;  // letter id -> first position
  std::vector<int> r(static_cast<std::size_t>(w.size()));
  for (int pos = 1; pos <= w.size(); ++pos) {
    const int c = w.at(pos);
    if (c >= static_cast<int>(first.size())) first.resize(static_cast<std::size_t>(c) + 1, 0);
    if (first[static_cast<std::size_t>(c)] == 0) first[static_cast<std::size_t>(c)] = pos;
    r[static_cast<std::size_t>(pos - 1)] = first[static_cast<std::size_t>(c)];
  }
  return r;
}

inline Word reverse(const Word& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out));
}

}  // namespace snakes

#endif  // SNAKES_WORD_CORE_HPP
