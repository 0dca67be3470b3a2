#ifndef SNAKES_SNAKE_NAMES_HPP
#define SNAKES_SNAKE_NAMES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/word_core.hpp"

namespace snakes {

enum class WordKind { SnakeName, SpiralWord, Invalid };

enum class RuleViolation {
  LetterCount,              // some letter appears fewer than twice
  NoCoveringSemiPrimitive,  // an interior position not inside any semi-primitive subword
};

struct SnakeWordVerdict {
  struct Violation {
    RuleViolation rule;
    int position;  // 1-based; 0 for the empty word
    friend bool operator==(const Violation&, const Violation&) = default;
  };

  WordKind kind = WordKind::Invalid;
  std::optional<Violation> violation;  // present iff kind == Invalid

  bool ok() const { return kind == WordKind::SnakeName; }
  friend bool operator==(const SnakeWordVerdict&, const SnakeWordVerdict&) = default;
};

namespace detail {

/// True iff positions p..q-1 (1-based) carry pairwise distinct letters.
/// `stamp`/`mark` implement a clear-free seen set shared across calls.
inline bool distinct_range(const std::vector<int>& a, int p, int q, std::vector<int>& mark, int stamp) {
  for (int i = p - 1; i < q - 1; ++i) {
    const int c = a[static_cast<std::size_t>(i)];
    if (mark[static_cast<std::size_t>(c)] == stamp) return false;
    mark[static_cast<std::size_t>(c)] = stamp;
  }
  return true;
}

inline std::vector<std::vector<int>> occurrence_lists(const Word& w) {
  std::vector<std::vector<int>> occ;
  for (int pos = 1; pos <= w.size(); ++pos) {
    const int c = w.at(pos);
    if (c >= static_cast<int>(occ.size())) occ.resize(static_cast<std::size_t>(c) + 1);
    occ[static_cast<std::size_t>(c)].push_back(pos);
  }
  return occ;
}

}  // namespace detail

/// Checks the two snake-name rules: (i) every letter appears at least twice;
/// (ii) every interior position k lies strictly inside some semi-primitive
/// subword. Words equivalent to x^q with q >= 3 are reported as SpiralWord.
/// Condition (ii) is decided by scanning all pairs of equal letters (j,l)
/// and marking the interior of each semi-primitive [w_j...w_l]; O(m^3)
/// worst case, which is fine at desk scale.
inline SnakeWordVerdict validate(const Word& w) {
  using V = SnakeWordVerdict::Violation;
  const auto& a = w.letters();
  const int m = w.size();
  if (m == 0) return {WordKind::Invalid, V{RuleViolation::LetterCount, 0}};

  const auto occ = detail::occurrence_lists(w);
  int distinct = 0;
  for (const auto& o : occ) distinct += !o.empty();
  if (distinct == 1 && m >= 3) return {WordKind::SpiralWord, std::nullopt};

  for (int pos = 1; pos <= m; ++pos)
    if (occ[static_cast<std::size_t>(a[static_cast<std::size_t>(pos - 1)])].size() < 2)
      return {WordKind::Invalid, V{RuleViolation::LetterCount, pos}};

  if (m > 2) {
    std::vector<char> covered(static_cast<std::size_t>(m) + 1, 0);
    std::vector<int> mark(occ.size(), 0);
    int stamp = 0;
    for (const auto& positions : occ) {
      for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
          const int p = positions[i], q = positions[j];
          if (!detail::distinct_range(a, p, q, mark, ++stamp)) continue;
          for (int k = p + 1; k < q; ++k) covered[static_cast<std::size_t>(k)] = 1;
        }
      }
    }
    for (int k = 2; k <= m - 1; ++k)
      if (!covered[static_cast<std::size_t>(k)])
        return {WordKind::Invalid, V{RuleViolation::NoCoveringSemiPrimitive, k}};
  }
  return {WordKind::SnakeName, std::nullopt};
}

namespace detail {

inline void require_snake_name(const Word& w, const char* who) {
  if (!validate(w).ok()) fail(Errc::Precondition, std::string(who) + ": not a snake name");
}

inline void require_binary_snake_name(const Word& w, const char* who) {
  require_snake_name(w, who);
  if (!is_binary(w)) fail(Errc::Precondition, std::string(who) + ": not a binary word");
}

}  // namespace detail

/// Rewrites a letter occurring p > 2 times into p-1 fresh letters: the first
/// and last occurrence become one new letter each, every interior occurrence
/// becomes two consecutive new letters. Output is canonicalized.
inline Word binary_reduce(const Word& w, int letter) {
  detail::require_snake_name(w, "binary_reduce");
  std::vector<int> positions;
  for (int pos = 1; pos <= w.size(); ++pos)
    if (w.at(pos) == letter) positions.push_back(pos);
  const int p = static_cast<int>(positions.size());
  if (p <= 2)
    fail(Errc::NotReducible, "letter " + Word::letter_text(letter) + " occurs " + std::to_string(p) +
                                 " times; binary reduction needs more than two");
  const int base = 1 + *std::max_element(w.letters().begin(), w.letters().end());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size() + p - 2));
  int rank = 0;
  for (int c : w.letters()) {
    if (c != letter) {
      out.push_back(c);
      continue;
    }
    if (rank == 0) {
      out.push_back(base);
    } else if (rank == p - 1) {
      out.push_back(base + p - 2);
    } else {
      out.push_back(base + rank - 1);
      out.push_back(base + rank);
    }
    ++rank;
  }
  return canonicalize(Word(std::move(out)));
}

/// Applies binary reduction until every letter occurs exactly twice. The
/// result is independent of the reduction order up to equivalence.
inline Word full_binary_reduction(const Word& w) {
  detail::require_snake_name(w, "full_binary_reduction");
  Word cur = canonicalize(w);
  for (;;) {
    const auto occ = detail::occurrence_lists(cur);
    int letter = -1;
    for (std::size_t c = 0; c < occ.size(); ++c)
      if (occ[c].size() > 2) {
        letter = static_cast<int>(c);
        break;
      }
    if (letter < 0) return cur;
    cur = binary_reduce(cur, letter);
  }
}

/// Removes both occurrences of a letter appearing exactly twice; canonicalizes.
inline Word delete_letter(const Word& w, int letter) {
  int count = 0;
  for (int c : w.letters()) count += (c == letter);
  if (count != 2)
    fail(Errc::NotDeletable, "letter " + Word::letter_text(letter) + " occurs " + std::to_string(count) +
                                 " times; deletion needs exactly two");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size() - 2));
  for (int c : w.letters())
    if (c != letter) out.push_back(c);
  return canonicalize(Word(std::move(out)));
}

/// Parameters (j,k) of a binary snake name of length 2m > 2: j is the
/// position of the second occurrence of the first letter, k the first
/// position such that [w_2 ... w_k] is not primitive.
struct BinaryParams {
  int j = 0;
  int k = 0;
  friend bool operator==(const BinaryParams&, const BinaryParams&) = default;
};

inline BinaryParams parameters(const Word& w) {
  detail::require_binary_snake_name(w, "parameters");
  if (w.size() == 2) fail(Errc::ParamsUndefined, "parameter k is not defined for the bubble snake name");
  const int first = w.at(1);
  int j = 0;
  for (int pos = 2; pos <= w.size(); ++pos)
    if (w.at(pos) == first) {
      j = pos;
      break;
    }
  int k = 0;
  std::vector<char> seen(detail::occurrence_lists(w).size(), 0);
  for (int pos = 2; pos <= w.size(); ++pos) {
    const int c = w.at(pos);
    if (seen[static_cast<std::size_t>(c)]) {
      k = pos;
      break;
    }
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return {j, k};
}

/// Operation (A): insert a fresh letter in front of w_1 and between
/// w_{l-1} and w_l, for 2 <= l <= j. Output canonicalized.
inline Word apply_a(const Word& w, int l) {
  const BinaryParams p = parameters(w);
  if (l < 2 || l > p.j)
    fail(Errc::BadInsertionIndex,
         "operation (A) needs 2 <= l <= " + std::to_string(p.j) + ", got " + std::to_string(l));
  const int fresh = 1 + *std::max_element(w.letters().begin(), w.letters().end());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size() + 2));
  out.push_back(fresh);
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + (l - 1));
  out.push_back(fresh);
  out.insert(out.end(), w.letters().begin() + (l - 1), w.letters().end());
  return canonicalize(Word(std::move(out)));
}

/// Operation (B): insert a fresh letter between w_1 and w_2 and between
/// w_{l-1} and w_l, for k+1 <= l <= 2m. Output canonicalized.
inline Word apply_b(const Word& w, int l) {
  const BinaryParams p = parameters(w);
  if (l < p.k + 1 || l > w.size())
    fail(Errc::BadInsertionIndex, "operation (B) needs " + std::to_string(p.k + 1) +
                                      " <= l <= " + std::to_string(w.size()) + ", got " + std::to_string(l));
  const int fresh = 1 + *std::max_element(w.letters().begin(), w.letters().end());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size() + 2));
  out.push_back(w.letters().front());
  out.push_back(fresh);
  out.insert(out.end(), w.letters().begin() + 1, w.letters().begin() + (l - 1));
  out.push_back(fresh);
  out.insert(out.end(), w.letters().begin() + (l - 1), w.letters().end());
  return canonicalize(Word(std::move(out)));
}

enum class InsertionOp { A, B };

struct Predecessor {
  Word word;
  InsertionOp op;
  int l;
};

/// The unique parent of a binary snake name of length >= 6 under the
/// insertion calculus: if deleting the first letter leaves a snake name the
/// parent is reached by undoing (A), otherwise deleting the second letter is
/// guaranteed to work and the parent is reached by undoing (B). The returned
/// l reinserts the deleted letter at its original positions.
inline Predecessor predecessor(const Word& w) {
  detail::require_binary_snake_name(w, "predecessor");
  if (w.size() < 6) fail(Errc::Precondition, "predecessor needs length >= 6");
  const auto second_occurrence = [&](int letter) {
    int count = 0;
    for (int pos = 1; pos <= w.size(); ++pos)
      if (w.at(pos) == letter && ++count == 2) return pos;
    fail(Errc::Precondition, "predecessor: letter has a single occurrence");
  };
  const int a = w.at(1);
  const Word without_first = delete_letter(w, a);
  if (validate(without_first).ok())
    return {without_first, InsertionOp::A, second_occurrence(a) - 1};
  const int b = w.at(2);
  const Word without_second = delete_letter(w, b);
  if (!validate(without_second).ok())
    fail(Errc::Precondition, "predecessor: neither deletion yields a snake name");
  return {without_second, InsertionOp::B, second_occurrence(b) - 1};
}

}  // namespace snakes

#endif  // SNAKES_SNAKE_NAMES_HPP
