#ifndef SNAKES_CLASSIFICATION_HPP
#define SNAKES_CLASSIFICATION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/model_geometry.hpp"
#include "snakes/snake_names.hpp"
#include "snakes/word_core.hpp"

namespace snakes {

/// A partition of the segment indices {1..m-1} into clusters. Same text form
/// as position partitions: "1,3;2".
class ClusterPartition {
 public:
  ClusterPartition() = default;

  static ClusterPartition of_blocks(std::vector<std::vector<int>> blocks) {
    ClusterPartition c;
    c.blocks_ = detail::normalize_partition(std::move(blocks));
    return c;
  }

  static ClusterPartition parse(std::string_view text) {
    return of_blocks(detail::parse_blocks(text));
  }

  std::string str() const { return detail::format_blocks(blocks_); }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int segment_count() const {
    int n = 0;
    for (const auto& b : blocks_) n += static_cast<int>(b.size());
    return n;
  }

  friend bool operator==(const ClusterPartition&, const ClusterPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// A snake word together with a cluster partition of its segments.
struct DecoratedSnake {
  Word word;
  ClusterPartition clusters;
};

/// Multiplicity-one decoration: singleton clusters for snake names, one
/// all-encompassing cluster for spiral words.
inline ClusterPartition default_clusters(const Word& w) {
  const auto verdict = validate(w);
  if (verdict.kind == WordKind::Invalid) fail(Errc::InvalidWord, "default_clusters: not a snake word");
  std::vector<std::vector<int>> blocks;
  if (verdict.kind == WordKind::SpiralWord) {
    std::vector<int> all;
    for (int i = 1; i < w.size(); ++i) all.push_back(i);
    blocks.push_back(std::move(all));
  } else {
    for (int i = 1; i < w.size(); ++i) blocks.push_back({i});
  }
  return ClusterPartition::of_blocks(std::move(blocks));
}

enum class ClusterRule {
  Ok,
  WordInvalid,         // the word is not a snake name or spiral word
  WrongSegmentSet,     // the blocks do not cover exactly {1..m-1}
  ClassMismatch,       // a block mixes segments from different letter-pair classes
  AdjacentSameNode,    // w_{j-1} = w_{j+1} but segments j-1, j share a block
  SpiralSingleCluster, // spiral words admit only the single-block partition
};

struct ClusterVerdict {
  ClusterRule rule = ClusterRule::Ok;
  std::vector<int> segments;  // offending segment indices, if any
  bool ok() const { return rule == ClusterRule::Ok; }
};

/// Checks a cluster partition against a word: correct segment set, blocks
/// confined to one letter-pair class, the w_{j-1} = w_{j+1} adjacency
/// exclusion, and the forced single cluster of spiral words. Returns the
/// first violation found.
inline ClusterVerdict validate_clusters(const Word& w, const ClusterPartition& c) {
  const auto verdict = validate(w);
  if (verdict.kind == WordKind::Invalid) return {ClusterRule::WordInvalid, {}};
  if (c.segment_count() != w.size() - 1) return {ClusterRule::WrongSegmentSet, {}};
  if (verdict.kind == WordKind::SpiralWord) {
    if (c.blocks().size() != 1) return {ClusterRule::SpiralSingleCluster, {}};
    return {};
  }
  const auto classes = segment_pair_classes(w);
  std::vector<std::pair<int, int>> class_of(static_cast<std::size_t>(w.size()), {0, 0});
  for (const auto& [pair, segments] : classes)
    for (int seg : segments) class_of[static_cast<std::size_t>(seg)] = pair;
  for (const auto& block : c.blocks())
    for (std::size_t i = 1; i < block.size(); ++i)
      if (class_of[static_cast<std::size_t>(block[i])] != class_of[static_cast<std::size_t>(block[0])])
        return {ClusterRule::ClassMismatch, {block[0], block[i]}};
  std::vector<int> block_of(static_cast<std::size_t>(w.size()), -1);
  for (std::size_t b = 0; b < c.blocks().size(); ++b)
    for (int seg : c.blocks()[b]) block_of[static_cast<std::size_t>(seg)] = static_cast<int>(b);
  for (int j = 2; j <= w.size() - 1; ++j)
    if (w.at(j - 1) == w.at(j + 1) &&
        block_of[static_cast<std::size_t>(j - 1)] == block_of[static_cast<std::size_t>(j)])
      return {ClusterRule::AdjacentSameNode, {j - 1, j}};
  return {};
}

/// Multiplicity of a segment = size of its cluster.
inline int multiplicity(const Word& w, const ClusterPartition& c, int segment) {
  if (!validate_clusters(w, c).ok()) fail(Errc::Precondition, "multiplicity: invalid cluster partition");
  if (segment < 1 || segment > w.size() - 1)
    fail(Errc::BadIndex, "segment " + std::to_string(segment) + " out of range");
  for (const auto& block : c.blocks())
    if (std::find(block.begin(), block.end(), segment) != block.end())
      return static_cast<int>(block.size());
  fail(Errc::BadIndex, "segment not covered");
}

/// Transports a cluster partition along orientation reversal of a word of
/// length m: segment i becomes segment m - i.
inline ClusterPartition reverse_clusters(const ClusterPartition& c, int m) {
  std::vector<std::vector<int>> blocks;
  for (const auto& block : c.blocks()) {
    std::vector<int> mapped;
    for (int seg : block) mapped.push_back(m - seg);
    blocks.push_back(std::move(mapped));
  }
  return ClusterPartition::of_blocks(std::move(blocks));
}

struct EquivalenceWitness {
  bool reversed = false;        // the orientation that produced the match
  bool direct_match = false;    // whether each orientation matched, for words
  bool reversed_match = false;  // with a reversal self-symmetry
  std::map<int, int> letter_map;  // letters of the first word -> letters of the second
};

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;
};

namespace detail {

inline std::map<int, int> letter_correspondence(const Word& a, const Word& b) {
  std::map<int, int> map;
  for (int pos = 1; pos <= a.size(); ++pos) map.emplace(a.at(pos), b.at(pos));
  return map;
}

}  // namespace detail

/// Decides weak outer Lipschitz equivalence: the snake names must be
/// equivalent under some orientation (identity or reversal of the first
/// snake) and the induced segment correspondence must carry one cluster
/// partition onto the other. Equivalent canonical words match position by
/// position, so cluster comparison is set equality after optional reversal.
/// Both orientations are tried; the witness records which of them matched.
inline EquivalenceResult weakly_equivalent(const DecoratedSnake& a, const DecoratedSnake& b) {
  if (!validate_clusters(a.word, a.clusters).ok() || !validate_clusters(b.word, b.clusters).ok())
    fail(Errc::Precondition, "weakly_equivalent: invalid decoration");
  const auto ka = validate(a.word).kind;
  const auto kb = validate(b.word).kind;
  if (ka != kb) return {};
  if (ka == WordKind::SpiralWord) {
    if (a.word.size() != b.word.size()) return {};
    EquivalenceWitness witness{false, true, true, detail::letter_correspondence(a.word, b.word)};
    return {true, witness};
  }
  const int m = a.word.size();
  const Word canon_b = canonicalize(b.word);
  const Word reversed_a = reverse(a.word);
  const bool direct =
      canonicalize(a.word) == canon_b && a.clusters == b.clusters;
  const bool via_reversal = canonicalize(reversed_a) == canon_b &&
                            reverse_clusters(a.clusters, m) == b.clusters;
  if (!direct && !via_reversal) return {};
  EquivalenceWitness witness;
  witness.reversed = !direct;
  witness.direct_match = direct;
  witness.reversed_match = via_reversal;
  witness.letter_map = detail::letter_correspondence(direct ? a.word : reversed_a, b.word);
  return {true, witness};
}

}  // namespace snakes

#endif  // SNAKES_CLASSIFICATION_HPP
