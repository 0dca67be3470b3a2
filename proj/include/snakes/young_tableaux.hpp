#ifndef SNAKES_YOUNG_TABLEAUX_HPP
#define SNAKES_YOUNG_TABLEAUX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/snake_names.hpp"
#include "snakes/word_core.hpp"

namespace snakes {

/// A standard Young tableau of two equal rows: rows and columns strictly
/// increasing, entries exactly {1..2n} where n is the row length. The empty
/// tableau (shape (0,0)) is allowed.
class YoungTableau2 {
 public:
  YoungTableau2() = default;

  static YoungTableau2 of_rows(std::vector<int> row1, std::vector<int> row2) {
    if (row1.size() != row2.size()) fail(Errc::InvalidTableau, "rows differ in length");
    const int n = static_cast<int>(row1.size());
    std::vector<char> seen(static_cast<std::size_t>(2 * n) + 1, 0);
    const auto check_row = [&](const std::vector<int>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        const int v = row[i];
        if (v < 1 || v > 2 * n) fail(Errc::InvalidTableau, "entry " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)]++) fail(Errc::InvalidTableau, "duplicate entry " + std::to_string(v));
        if (i > 0 && row[i - 1] >= v) fail(Errc::InvalidTableau, "row not strictly increasing");
      }
    };
    check_row(row1);
    check_row(row2);
    for (int i = 0; i < n; ++i)
      if (row1[static_cast<std::size_t>(i)] >= row2[static_cast<std::size_t>(i)])
        fail(Errc::InvalidTableau, "column " + std::to_string(i + 1) + " not strictly increasing");
    YoungTableau2 t;
    t.row1_ = std::move(row1);
    t.row2_ = std::move(row2);
    return t;
  }

  /// Parses "1,2,4;3,5,6"; the empty string is the empty tableau.
  static YoungTableau2 parse(std::string_view text) {
    if (text.empty()) return {};
    auto blocks = detail::parse_blocks(text);
    if (blocks.size() != 2) fail(Errc::InvalidTableau, "expected two rows");
    return of_rows(std::move(blocks[0]), std::move(blocks[1]));
  }

  std::string str() const {
    if (row1_.empty()) return "";
    return detail::format_blocks({row1_, row2_});
  }

  int row_length() const { return static_cast<int>(row1_.size()); }
  const std::vector<int>& row1() const { return row1_; }
  const std::vector<int>& row2() const { return row2_; }

  friend bool operator==(const YoungTableau2&, const YoungTableau2&) = default;

 private:
  std::vector<int> row1_, row2_;
};

/// T(W): for i = 2..2m-1 place i-1 into the first row when w_i is a node
/// entry, into the second row otherwise.
inline YoungTableau2 syt_of(const Word& w) {
  detail::require_binary_snake_name(w, "syt_of");
  const auto r = node_entry_map(w);
  std::vector<int> row1, row2;
  for (int i = 2; i <= w.size() - 1; ++i) {
    if (r[static_cast<std::size_t>(i - 1)] == i)
      row1.push_back(i - 1);
    else
      row2.push_back(i - 1);
  }
  return YoungTableau2::of_rows(std::move(row1), std::move(row2));
}

/// W(T): the inversion-free binary snake name whose node entries sit at the
/// first-row positions of T. The empty tableau yields the bubble name "aa".
inline Word word_of(const YoungTableau2& t) {
  const int m = t.row_length() + 1;
  std::vector<int> out(static_cast<std::size_t>(2 * m), -1);
  out.front() = 0;
  out.back() = m - 1;
  for (int c = 0; c < t.row_length(); ++c) {
    out[static_cast<std::size_t>(t.row1()[static_cast<std::size_t>(c)])] = c + 1;  // x_{c+2}
    out[static_cast<std::size_t>(t.row2()[static_cast<std::size_t>(c)])] = c;      // x_{c+1}
  }
  return Word(std::move(out));
}

/// An inversion: the span of `outer` strictly contains both entries of `inner`.
struct Inversion {
  int outer;
  int inner;
  friend bool operator==(const Inversion&, const Inversion&) = default;
};

/// All inversions of a binary word, sorted by the first occurrence of the
/// outer letter, then of the inner one.
inline std::vector<Inversion> inversions(const Word& w) {
  if (!is_binary(w)) fail(Errc::Precondition, "inversions: not a binary word");
  const auto occ = detail::occurrence_lists(w);
  std::vector<int> order;  // letters by first occurrence
  for (int pos = 1; pos <= w.size(); ++pos)
    if (occ[static_cast<std::size_t>(w.at(pos))][0] == pos) order.push_back(w.at(pos));
  std::vector<Inversion> out;
  for (int x : order)
    for (int y : order) {
      if (x == y) continue;
      const auto& ox = occ[static_cast<std::size_t>(x)];
      const auto& oy = occ[static_cast<std::size_t>(y)];
      if (ox[0] < oy[0] && oy[1] < ox[1]) out.push_back({x, y});
    }
  return out;
}

inline bool inversion_free(const Word& w) { return inversions(w).empty(); }

/// C_n = binomial(2n,n)/(n+1), exact; throws BoundExceeded past uint64 range.
inline std::uint64_t catalan(int n) {
  if (n < 0) fail(Errc::Precondition, "catalan of negative index");
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    const unsigned __int128 next = static_cast<unsigned __int128>(c) * (2 * (2 * i + 1)) / (i + 2);
    if (next > UINT64_MAX) fail(Errc::BoundExceeded, "catalan(" + std::to_string(n) + ") exceeds 64 bits");
    c = static_cast<std::uint64_t>(next);
  }
  return c;
}

}  // namespace snakes

#endif  // SNAKES_YOUNG_TABLEAUX_HPP
