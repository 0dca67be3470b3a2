#ifndef SNAKES_ENUMERATION_HPP
#define SNAKES_ENUMERATION_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snakes/error.hpp"
#include "snakes/snake_names.hpp"
#include "snakes/word_core.hpp"
#include "snakes/young_tableaux.hpp"

namespace snakes {

inline constexpr int kDefaultBruteBound = 8;

/// All canonical binary snake names of length 2m, found by enumerating the
/// (2m-1)!! perfect matchings of {1..2m} (each matching is a canonical
/// binary word) and filtering by validate. Sorted lexicographically.
inline std::vector<Word> brute_force_binary(int m, int bound = kDefaultBruteBound) {
  if (m < 1) fail(Errc::Precondition, "brute_force_binary needs m >= 1");
  if (m > bound)
    fail(Errc::BoundExceeded,
         "m = " + std::to_string(m) + " exceeds the brute-force bound " + std::to_string(bound));
  const int n = 2 * m;
  std::vector<int> word(static_cast<std::size_t>(n), -1);
  std::vector<Word> out;
  const auto rec = [&](auto&& self, int first, int letter) -> void {
    while (first < n && word[static_cast<std::size_t>(first)] >= 0) ++first;
    if (first == n) {
      Word w{word};
      if (validate(w).ok()) out.push_back(std::move(w));
      return;
    }
    word[static_cast<std::size_t>(first)] = letter;
    for (int j = first + 1; j < n; ++j) {
      if (word[static_cast<std::size_t>(j)] >= 0) continue;
      word[static_cast<std::size_t>(j)] = letter;
      self(self, first + 1, letter + 1);
      word[static_cast<std::size_t>(j)] = -1;
    }
    word[static_cast<std::size_t>(first)] = -1;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// One breadth-first step of the insertion tree: all legal (A) and (B)
/// children of every word in the level.
inline std::vector<Word> ab_children(const std::vector<Word>& level) {
  std::vector<Word> next;
  for (const Word& w : level) {
    const BinaryParams p = parameters(w);
    for (int l = 2; l <= p.j; ++l) next.push_back(apply_a(w, l));
    for (int l = p.k + 1; l <= w.size(); ++l) next.push_back(apply_b(w, l));
  }
  return next;
}

inline std::vector<Word> ab_expand(std::vector<Word> level, int from, int to) {
  for (int cur = from; cur < to; ++cur) level = ab_children(level);
  return level;
}

inline void assert_sorted_unique(std::vector<Word>& words) {
  std::sort(words.begin(), words.end());
  if (std::adjacent_find(words.begin(), words.end()) != words.end())
    throw std::logic_error("insertion-tree enumeration produced a duplicate");
}

}  // namespace detail

/// All canonical binary snake names of length 2m generated from the roots
/// "aa" and "abab" by the insertion operations (A) and (B). No deduplication
/// is performed; the output is asserted duplicate-free instead.
inline std::vector<Word> generate_ab(int m) {
  if (m < 1) fail(Errc::Precondition, "generate_ab needs m >= 1");
  if (m == 1) return {Word::parse("aa")};
  auto level = detail::ab_expand({Word::parse("abab")}, 2, m);
  detail::assert_sorted_unique(level);
  return level;
}

/// Parallel variant: the tree is expanded to a shallow level, the resulting
/// subtree roots are split across workers that share nothing mutable, and
/// the per-worker results are merged and sorted.
inline std::vector<Word> generate_ab_parallel(int m, unsigned workers) {
  constexpr int kSplitLevel = 4;
  if (workers <= 1 || m <= kSplitLevel) return generate_ab(m);
  const std::vector<Word> seeds = detail::ab_expand({Word::parse("abab")}, 2, kSplitLevel);
  const std::size_t chunk = (seeds.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<Word>>> futures;
  for (std::size_t begin = 0; begin < seeds.size(); begin += chunk) {
    const std::size_t end = std::min(begin + chunk, seeds.size());
    futures.push_back(std::async(std::launch::async, [&seeds, begin, end, m] {
      return detail::ab_expand({seeds.begin() + static_cast<std::ptrdiff_t>(begin),
                                seeds.begin() + static_cast<std::ptrdiff_t>(end)},
                               kSplitLevel, m);
    }));
  }
  std::vector<Word> out;
  for (auto& f : futures) {
    auto part = f.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  detail::assert_sorted_unique(out);
  return out;
}

/// The table M_m(j,k) with its total M_m.
struct CountTable {
  int m = 0;
  std::map<std::pair<int, int>, std::uint64_t> cells;
  std::uint64_t total = 0;
};

namespace detail {

inline std::uint64_t cell(const std::map<std::pair<int, int>, std::uint64_t>& cells, int j, int k) {
  const auto it = cells.find({j, k});
  return it == cells.end() ? 0 : it->second;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::BoundExceeded, "count overflows 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::BoundExceeded, "count overflows 64 bits");
  return r;
}

}  // namespace detail

/// Counts binary snake names by the recursion
///   M_{m+1}(j,k) = sum_{l=k-1}^{m+2} M_m(k-2,l) + (2m-k+1) M_m(j-1,k-1)
/// from the base M_2(3,4) = 1. Cells are nonzero only for 3 <= j < k and
/// 5 <= k <= m+2 (resp. (3,4) at m = 2).
inline CountTable count_table(int m) {
  if (m < 2) fail(Errc::Precondition, "count_table needs m >= 2");
  std::map<std::pair<int, int>, std::uint64_t> cells{{{3, 4}, 1}};
  for (int cur = 2; cur < m; ++cur) {
    std::map<std::pair<int, int>, std::uint64_t> next;
    for (int k = 5; k <= cur + 3; ++k) {
      for (int j = 3; j < k; ++j) {
        std::uint64_t via_a = 0;
        for (int l = k - 1; l <= cur + 2; ++l)
          via_a = detail::checked_add(via_a, detail::cell(cells, k - 2, l));
        const std::uint64_t via_b =
            detail::checked_mul(static_cast<std::uint64_t>(2 * cur - k + 1), detail::cell(cells, j - 1, k - 1));
        const std::uint64_t value = detail::checked_add(via_a, via_b);
        if (value) next[{j, k}] = value;
      }
    }
    cells = std::move(next);
  }
  CountTable table;
  table.m = m;
  table.cells = std::move(cells);
  for (const auto& [jk, value] : table.cells) table.total = detail::checked_add(table.total, value);
  return table;
}

/// M_m, with M_1 = 1.
inline std::uint64_t count_total(int m) {
  if (m < 1) fail(Errc::Precondition, "count_total needs m >= 1");
  return m == 1 ? 1 : count_table(m).total;
}

/// Writes one JSON record per line: {"word","m","j","k","inversion_free"},
/// words in canonical text form. The bubble name "aa" has no parameters and
/// stores j = k = 0.
inline void cache_save(const std::filesystem::path& path, const std::vector<Word>& words) {
  std::ofstream out(path);
  if (!out) fail(Errc::Io, "cannot open " + path.string() + " for writing");
  for (const Word& raw : words) {
    detail::require_binary_snake_name(raw, "cache_save");
    const Word w = canonicalize(raw);
    BinaryParams p{0, 0};
    if (w.size() > 2) p = parameters(w);
    const nlohmann::json record = {{"word", w.str()},
                                   {"m", w.size() / 2},
                                   {"j", p.j},
                                   {"k", p.k},
                                   {"inversion_free", inversion_free(w)}};
    out << record.dump() << '\n';
  }
  if (!out) fail(Errc::Io, "write to " + path.string() + " failed");
}

/// Reads a cache file, re-verifying every record against validate and
/// parameters. A malformed final line is treated as a truncated write and
/// ignored; any other inconsistency raises CorruptCache.
inline std::vector<Word> cache_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open " + path.string() + " for reading");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  std::vector<Word> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    nlohmann::json record = nlohmann::json::parse(lines[i], nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      if (i + 1 == lines.size()) break;  // truncated trailing write
      fail(Errc::CorruptCache, "unparsable cache line " + std::to_string(i + 1));
    }
    Word w;
    BinaryParams stored{0, 0};
    bool stored_free = false;
    int stored_m = 0;
    try {
      w = Word::parse(record.at("word").get<std::string>());
      stored_m = record.at("m").get<int>();
      stored.j = record.at("j").get<int>();
      stored.k = record.at("k").get<int>();
      stored_free = record.at("inversion_free").get<bool>();
    } catch (const std::exception& e) {
      fail(Errc::CorruptCache, "bad cache record on line " + std::to_string(i + 1) + ": " + e.what());
    }
    if (!(w == canonicalize(w)))
      fail(Errc::CorruptCache, "cached word '" + w.str() + "' is not in canonical form");
    if (!validate(w).ok() || !is_binary(w))
      fail(Errc::CorruptCache, "cached word '" + w.str() + "' is not a binary snake name");
    const BinaryParams actual = w.size() > 2 ? parameters(w) : BinaryParams{0, 0};
    if (stored_m != w.size() / 2 || !(stored == actual) || stored_free != inversion_free(w))
      fail(Errc::CorruptCache, "cache record for '" + w.str() + "' disagrees with the word");
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace snakes

#endif  // SNAKES_ENUMERATION_HPP
