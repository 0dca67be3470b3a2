#ifndef SNAKES_MODEL_GEOMETRY_HPP
#define SNAKES_MODEL_GEOMETRY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/rational.hpp"
#include "snakes/snake_names.hpp"
#include "snakes/word_core.hpp"

namespace snakes {

/// The exponent pair of the model: 1 <= beta < alpha, exact rationals.
struct Exponents {
  Rational beta{1};
  Rational alpha{2};
};

inline void check_exponents(const Exponents& e) {
  if (e.beta < Rational(1) || !(e.beta < e.alpha))
    fail(Errc::BadExponents, "exponents must satisfy 1 <= beta < alpha");
}

enum class ArcKind { Delta, Sigma };

struct ArcLabel {
  ArcKind kind = ArcKind::Delta;
  int index = 1;  // delta_1..delta_m or sigma_1..sigma_{m-1}

  std::string str() const { return (kind == ArcKind::Delta ? "d" : "s") + std::to_string(index); }
  friend bool operator==(const ArcLabel&, const ArcLabel&) = default;
};

/// A monomial arc t -> sum_i t^{e_i} basis_i with unit coefficients on
/// pairwise-distinct orthogonal axes. Every arc carries the parameterizing
/// term (axis 1, exponent 1).
class MonomialArc {
 public:
  MonomialArc(ArcLabel label, std::map<int, Rational> terms)
      : label_(label), terms_(std::move(terms)) {}

  const ArcLabel& label() const { return label_; }
  const std::map<int, Rational>& terms() const { return terms_; }

 private:
  ArcLabel label_;
  std::map<int, Rational> terms_;
};

/// tord of two arcs of one model: infinity when the arcs coincide, otherwise
/// the smallest exponent carried by an axis where the two term maps differ
/// (with unit coefficients that axis dominates |a(t)-b(t)|).
inline TangencyOrder tord(const MonomialArc& a, const MonomialArc& b) {
  std::optional<Rational> best;
  const auto consider = [&](const Rational& e) {
    if (!best || e < *best) best = e;
  };
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      consider(ia->second);
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      consider(ib->second);
      ++ib;
    } else {
      if (!(ia->second == ib->second)) consider(ia->second < ib->second ? ia->second : ib->second);
      ++ia;
      ++ib;
    }
  }
  if (!best) return TangencyOrder::infinity();
  return TangencyOrder(*best);
}

/// The model snake T_W of a snake name of length m > 2: arcs delta_1..delta_m
/// and sigma_1..sigma_{m-1} in ambient dimension 2m-1, appearing along the
/// link in the order delta_1, sigma_1, delta_2, ..., sigma_{m-1}, delta_m.
class ModelSnake {
 public:
  ModelSnake(Word word, Exponents exps, std::vector<MonomialArc> deltas, std::vector<MonomialArc> sigmas)
      : word_(std::move(word)), exps_(exps), deltas_(std::move(deltas)), sigmas_(std::move(sigmas)) {}

  const Word& word() const { return word_; }
  const Exponents& exponents() const { return exps_; }
  int zones() const { return word_.size(); }

  const MonomialArc& arc(ArcLabel label) const {
    const auto& pool = label.kind == ArcKind::Delta ? deltas_ : sigmas_;
    const int limit = static_cast<int>(pool.size());
    if (label.index < 1 || label.index > limit)
      fail(Errc::BadIndex, "arc " + label.str() + " out of range");
    return pool[static_cast<std::size_t>(label.index - 1)];
  }

  /// delta_1, sigma_1, delta_2, ..., sigma_{m-1}, delta_m.
  std::vector<ArcLabel> link_order() const {
    std::vector<ArcLabel> order;
    for (int j = 1; j <= zones(); ++j) {
      order.push_back({ArcKind::Delta, j});
      if (j < zones()) order.push_back({ArcKind::Sigma, j});
    }
    return order;
  }

 private:
  Word word_;
  Exponents exps_;
  std::vector<MonomialArc> deltas_;
  std::vector<MonomialArc> sigmas_;
};

/// Builds the model arcs: delta_1 = t e_1; node entries get t e_1 + t^beta e_j;
/// repeated letters ride their node entry's arc plus t^alpha e_j; the sigmas
/// are t e_1 + t^beta e_{m+j}. Undefined for the bubble (m = 2), whose model
/// would contain a Lipschitz singular arc.
inline ModelSnake build_model(const Word& w, Exponents exps = {}) {
  check_exponents(exps);
  if (!validate(w).ok()) fail(Errc::Precondition, "build_model: not a snake name");
  if (w.size() <= 2) fail(Errc::ModelUndefined, "the model snake needs length m > 2");
  const int m = w.size();
  const auto r = node_entry_map(w);
  std::vector<MonomialArc> deltas;
  deltas.reserve(static_cast<std::size_t>(m));
  deltas.emplace_back(ArcLabel{ArcKind::Delta, 1}, std::map<int, Rational>{{1, Rational(1)}});
  for (int j = 2; j <= m; ++j) {
    const int rj = r[static_cast<std::size_t>(j - 1)];
    std::map<int, Rational> terms;
    if (rj == j) {
      terms = {{1, Rational(1)}, {j, exps.beta}};
    } else {
      terms = deltas[static_cast<std::size_t>(rj - 1)].terms();
      terms.emplace(j, exps.alpha);
    }
    deltas.emplace_back(ArcLabel{ArcKind::Delta, j}, std::move(terms));
  }
  std::vector<MonomialArc> sigmas;
  sigmas.reserve(static_cast<std::size_t>(m - 1));
  for (int j = 1; j <= m - 1; ++j)
    sigmas.emplace_back(ArcLabel{ArcKind::Sigma, j},
                        std::map<int, Rational>{{1, Rational(1)}, {m + j, exps.beta}});
  return ModelSnake(w, exps, std::move(deltas), std::move(sigmas));
}

/// Inner tangency order of two named arcs: the minimum of tord over the
/// consecutive pairs of the link chain between them. The chain consists of
/// normally embedded triangles, so the inner distance is realized along it;
/// for arcs that are not consecutive this is a modeling convention.
inline TangencyOrder itord_named(const ModelSnake& s, ArcLabel a, ArcLabel b) {
  if (a == b) return TangencyOrder::infinity();
  const auto order = s.link_order();
  int pa = -1, pb = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == a) pa = static_cast<int>(i);
    if (order[i] == b) pb = static_cast<int>(i);
  }
  if (pa < 0 || pb < 0) fail(Errc::BadIndex, "arc label outside the link");
  if (pa > pb) std::swap(pa, pb);
  TangencyOrder result = TangencyOrder::infinity();
  for (int i = pa; i < pb; ++i)
    result = min(result, tord(s.arc(order[static_cast<std::size_t>(i)]),
                              s.arc(order[static_cast<std::size_t>(i + 1)])));
  return result;
}

/// Verdict of the normal-embeddedness test for the subtriangle spanned by
/// nodal zones j..l, with a witness pair (i,i') of equal letters when not.
struct NeResult {
  bool normally_embedded = false;
  std::optional<std::pair<int, int>> witness;
};

/// T(delta_j, delta_l) is normally embedded iff [w_j ... w_l] is primitive.
/// When it is not, the returned witness (i,i') has w_i = w_i' and
/// tord(delta_i, delta_i') = alpha > beta = itord(delta_i, delta_i').
inline NeResult is_ne_subtriangle(const ModelSnake& s, int j, int l) {
  if (j < 1 || l > s.zones() || j >= l) fail(Errc::BadIndex, "bad nodal zone range");
  if (is_primitive(subword(s.word(), j, l))) return {true, std::nullopt};
  for (int i = j; i < l; ++i)
    for (int i2 = i + 1; i2 <= l; ++i2)
      if (s.word().at(i) == s.word().at(i2)) return {false, std::make_pair(i, i2)};
  fail(Errc::Precondition, "unreachable: non-primitive subword without a repeated letter");
}

/// T(delta_j, delta_l) is a bubble snake iff [w_j ... w_l] is semi-primitive.
inline bool is_bubble_subtriangle(const ModelSnake& s, int j, int l) {
  if (j < 1 || l > s.zones() || j >= l) fail(Errc::BadIndex, "bad nodal zone range");
  return is_semi_primitive(subword(s.word(), j, l));
}

/// Combinatorial structure read off a snake name: m nodal zones, the nodes
/// as the position partition, segments between consecutive zones, and the
/// model spectrum {alpha} for every node.
struct SnakeStructure {
  int nodal_zone_count = 0;
  SetPartition nodes;
  std::vector<std::pair<int, int>> segments;     // (i, i+1) adjacencies
  std::pair<int, int> boundary_nodal_zones{0, 0};
  std::vector<std::vector<Rational>> spectra;    // one spectrum per node
};

inline SnakeStructure structure(const Word& w, Exponents exps = {}) {
  check_exponents(exps);
  if (!validate(w).ok()) fail(Errc::Precondition, "structure: not a snake name");
  SnakeStructure s;
  s.nodal_zone_count = w.size();
  s.nodes = partition(w);
  for (int i = 1; i < w.size(); ++i) s.segments.emplace_back(i, i + 1);
  s.boundary_nodal_zones = {1, w.size()};
  s.spectra.assign(static_cast<std::size_t>(s.nodes.block_count()), {exps.alpha});
  return s;
}

/// Segment i (between nodal zones i and i+1) keyed by its unordered letter
/// pair {w_i, w_{i+1}}; this realizes the sets S(x,x') of segments between
/// two nodes. Spiral words are allowed and yield the single pair {x,x}.
inline std::map<std::pair<int, int>, std::vector<int>> segment_pair_classes(const Word& w) {
  const auto verdict = validate(w);
  if (verdict.kind == WordKind::Invalid)
    fail(Errc::Precondition, "segment_pair_classes: not a snake word");
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int i = 1; i < w.size(); ++i) {
    const int x = w.at(i), y = w.at(i + 1);
    classes[{std::min(x, y), std::max(x, y)}].push_back(i);
  }
  return classes;
}

}  // namespace snakes

#endif  // SNAKES_MODEL_GEOMETRY_HPP
