#ifndef SNAKES_CLI_HPP
#define SNAKES_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snakes/classification.hpp"
#include "snakes/enumeration.hpp"
#include "snakes/error.hpp"
#include "snakes/model_geometry.hpp"
#include "snakes/rational.hpp"
#include "snakes/snake_names.hpp"
#include "snakes/word_core.hpp"
#include "snakes/young_tableaux.hpp"

namespace snakes::cli {

struct Config {
  int brute_force_bound = kDefaultBruteBound;
  Rational beta{1};
  Rational alpha{2};
  enum class Format { Text, Json } format = Format::Text;
  std::optional<std::string> cache_path;
};

namespace detail {

using nlohmann::json;

inline const char* rule_name(RuleViolation rule) {
  switch (rule) {
    case RuleViolation::LetterCount: return "LetterCount";
    case RuleViolation::NoCoveringSemiPrimitive: return "NoCoveringSemiPrimitive";
  }
  return "?";
}

inline const char* kind_name(WordKind kind) {
  switch (kind) {
    case WordKind::SnakeName: return "SnakeName";
    case WordKind::SpiralWord: return "SpiralWord";
    case WordKind::Invalid: return "Invalid";
  }
  return "?";
}

inline json verdict_json(const SnakeWordVerdict& verdict) {
  json j{{"kind", kind_name(verdict.kind)}};
  if (verdict.violation)
    j["violation"] = {{"rule", rule_name(verdict.violation->rule)},
                      {"position", verdict.violation->position}};
  return j;
}

inline int cmd_validate(const Word& w, const Config& cfg, std::ostream& out) {
  const auto verdict = validate(w);
  if (cfg.format == Config::Format::Json) {
    out << verdict_json(verdict).dump() << '\n';
  } else if (verdict.kind == WordKind::Invalid) {
    out << "Invalid: " << rule_name(verdict.violation->rule) << " at position "
        << verdict.violation->position << '\n';
  } else {
    out << kind_name(verdict.kind) << '\n';
  }
  return verdict.kind == WordKind::Invalid ? 1 : 0;
}

inline int emit_word(const Word& w, const Config& cfg, std::ostream& out) {
  if (cfg.format == Config::Format::Json)
    out << json{{"word", w.str()}}.dump() << '\n';
  else
    out << w.str() << '\n';
  return 0;
}

inline int cmd_params(const Word& w, const Config& cfg, std::ostream& out) {
  const BinaryParams p = parameters(w);
  if (cfg.format == Config::Format::Json)
    out << json{{"j", p.j}, {"k", p.k}}.dump() << '\n';
  else
    out << "j=" << p.j << " k=" << p.k << '\n';
  return 0;
}

inline json table_json(const CountTable& table) {
  json cells = json::array();
  for (const auto& [jk, value] : table.cells)
    cells.push_back({{"j", jk.first}, {"k", jk.second}, {"count", value}});
  return {{"m", table.m}, {"total", table.total}, {"cells", cells}};
}

inline void print_table(const CountTable& table, std::ostream& out) {
  for (const auto& [jk, value] : table.cells)
    out << jk.first << ' ' << jk.second << ' ' << value << '\n';
  out << "total " << table.total << '\n';
}

inline int cmd_count(int m, bool with_table, const Config& cfg, std::ostream& out) {
  if (with_table && m >= 2) {
    const CountTable table = count_table(m);
    if (cfg.format == Config::Format::Json)
      out << table_json(table).dump() << '\n';
    else
      print_table(table, out);
  } else {
    const auto total = count_total(m);
    if (cfg.format == Config::Format::Json)
      out << json{{"m", m}, {"total", total}}.dump() << '\n';
    else
      out << total << '\n';
  }
  return 0;
}

inline int cmd_enum(int m, const std::string& method, const Config& cfg, std::ostream& out) {
  if (method == "recursion-count") return cmd_count(m, true, cfg, out);
  std::vector<Word> words;
  if (method == "brute") {
    words = brute_force_binary(m, cfg.brute_force_bound);
  } else {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    words = generate_ab_parallel(m, workers);
  }
  if (cfg.cache_path) {
    cache_save(*cfg.cache_path, words);
    if (cfg.format == Config::Format::Json)
      out << json{{"m", m}, {"method", method}, {"count", words.size()}, {"path", *cfg.cache_path}}.dump()
          << '\n';
    else
      out << "wrote " << words.size() << " words to " << *cfg.cache_path << '\n';
    return 0;
  }
  if (cfg.format == Config::Format::Json) {
    json list = json::array();
    for (const Word& w : words) list.push_back(w.str());
    out << json{{"m", m}, {"method", method}, {"count", words.size()}, {"words", list}}.dump() << '\n';
  } else {
    for (const Word& w : words) out << w.str() << '\n';
  }
  return 0;
}

inline int cmd_syt(const Word& w, const Config& cfg, std::ostream& out) {
  const YoungTableau2 t = syt_of(w);
  if (cfg.format == Config::Format::Json)
    out << json{{"rows", {t.row1(), t.row2()}}}.dump() << '\n';
  else
    out << t.str() << '\n';
  return 0;
}

inline int cmd_inversions(const Word& w, const Config& cfg, std::ostream& out) {
  const auto pairs = inversions(w);
  if (cfg.format == Config::Format::Json) {
    json list = json::array();
    for (const auto& inv : pairs)
      list.push_back({Word::letter_text(inv.outer), Word::letter_text(inv.inner)});
    out << json{{"inversions", list}}.dump() << '\n';
  } else {
    for (const auto& inv : pairs)
      out << Word::letter_text(inv.outer) << ',' << Word::letter_text(inv.inner) << '\n';
  }
  return 0;
}

inline int cmd_tord(const Word& w, const Config& cfg, std::ostream& out) {
  const ModelSnake model = build_model(w, {cfg.beta, cfg.alpha});
  std::vector<ArcLabel> labels;
  for (int j = 1; j <= model.zones(); ++j) labels.push_back({ArcKind::Delta, j});
  for (int j = 1; j < model.zones(); ++j) labels.push_back({ArcKind::Sigma, j});
  if (cfg.format == Config::Format::Json) {
    json names = json::array();
    for (const auto& label : labels) names.push_back(label.str());
    json matrix = json::array();
    for (const auto& a : labels) {
      json row = json::array();
      for (const auto& b : labels) row.push_back(tord(model.arc(a), model.arc(b)).str());
      matrix.push_back(row);
    }
    out << json{{"arcs", names}, {"matrix", matrix}}.dump() << '\n';
  } else {
    out << "arcs:";
    for (const auto& label : labels) out << ' ' << label.str();
    out << '\n';
    for (const auto& a : labels) {
      out << a.str();
      for (const auto& b : labels) out << ' ' << tord(model.arc(a), model.arc(b)).str();
      out << '\n';
    }
  }
  return 0;
}

inline int cmd_structure(const Word& w, const Config& cfg, std::ostream& out) {
  const SnakeStructure s = structure(w, {cfg.beta, cfg.alpha});
  if (cfg.format == Config::Format::Json) {
    json nodes = json::array();
    for (const auto& block : s.nodes.blocks()) nodes.push_back(block);
    json segments = json::array();
    for (const auto& [a, b] : s.segments) segments.push_back({a, b});
    json spectra = json::array();
    for (const auto& spectrum : s.spectra) {
      json inner = json::array();
      for (const auto& e : spectrum) inner.push_back(e.str());
      spectra.push_back(inner);
    }
    out << json{{"nodal_zones", s.nodal_zone_count},
                {"nodes", nodes},
                {"segments", segments},
                {"boundary", {s.boundary_nodal_zones.first, s.boundary_nodal_zones.second}},
                {"spectra", spectra}}
               .dump()
        << '\n';
  } else {
    out << "nodal zones: " << s.nodal_zone_count << '\n';
    out << "nodes: " << s.nodes.str() << '\n';
    out << "segments:";
    for (const auto& [a, b] : s.segments) out << ' ' << a << '-' << b;
    out << '\n';
    out << "boundary zones: " << s.boundary_nodal_zones.first << ' ' << s.boundary_nodal_zones.second
        << '\n';
    out << "node spectra:";
    for (const auto& spectrum : s.spectra) {
      for (const auto& e : spectrum) out << ' ' << e.str();
      if (&spectrum != &s.spectra.back()) out << ';';
    }
    out << '\n';
  }
  return 0;
}

inline int cmd_pairs(const Word& w, const Config& cfg, std::ostream& out) {
  const auto classes = segment_pair_classes(w);
  if (cfg.format == Config::Format::Json) {
    json list = json::array();
    for (const auto& [pair, segments] : classes)
      list.push_back({{"pair", {Word::letter_text(pair.first), Word::letter_text(pair.second)}},
                      {"segments", segments}});
    out << json{{"classes", list}}.dump() << '\n';
  } else {
    for (const auto& [pair, segments] : classes) {
      out << Word::letter_text(pair.first) << ',' << Word::letter_text(pair.second) << ':';
      for (int seg : segments) out << ' ' << seg;
      out << '\n';
    }
  }
  return 0;
}

inline int cmd_equiv(const Word& wa, const std::string& clusters_a, const Word& wb,
                     const std::string& clusters_b, const Config& cfg, std::ostream& out) {
  DecoratedSnake a{wa, clusters_a.empty() ? default_clusters(wa) : ClusterPartition::parse(clusters_a)};
  DecoratedSnake b{wb, clusters_b.empty() ? default_clusters(wb) : ClusterPartition::parse(clusters_b)};
  for (const auto* d : {&a, &b}) {
    const auto verdict = validate_clusters(d->word, d->clusters);
    if (!verdict.ok()) fail(Errc::InvalidWord, "invalid cluster partition for '" + d->word.str() + "'");
  }
  const EquivalenceResult result = weakly_equivalent(a, b);
  if (cfg.format == Config::Format::Json) {
    json j{{"equivalent", result.equivalent}};
    if (result.witness) {
      json map = json::object();
      for (const auto& [from, to] : result.witness->letter_map)
        map[Word::letter_text(from)] = Word::letter_text(to);
      j["reversed"] = result.witness->reversed;
      j["direct_match"] = result.witness->direct_match;
      j["reversed_match"] = result.witness->reversed_match;
      j["letter_map"] = map;
    }
    out << j.dump() << '\n';
  } else if (result.equivalent) {
    out << "equivalent (" << (result.witness->reversed ? "reversed" : "direct") << ")\n";
  } else {
    out << "not equivalent\n";
  }
  return result.equivalent ? 0 : 1;
}

inline std::string diagram_dot(const Word& w) {
  const SetPartition nodes = partition(w);
  std::string dot = "graph snake_link {\n  rankdir=LR;\n";
  for (const auto& block : nodes.blocks()) {
    const std::string letter = Word::letter_text(w.at(block.front()));
    dot += "  subgraph cluster_" + letter + " {\n    label=\"node " + letter + "\";\n";
    for (int zone : block)
      dot += "    z" + std::to_string(zone) + " [label=\"N" + std::to_string(zone) + "\"];\n";
    dot += "  }\n";
  }
  for (int i = 1; i < w.size(); ++i)
    dot += "  s" + std::to_string(i) + " [label=\"S" + std::to_string(i) + "\" shape=box];\n";
  for (int i = 1; i < w.size(); ++i) {
    dot += "  z" + std::to_string(i) + " -- s" + std::to_string(i) + ";\n";
    dot += "  s" + std::to_string(i) + " -- z" + std::to_string(i + 1) + ";\n";
  }
  dot += "}\n";
  return dot;
}

inline json diagram_json(const Word& w) {
  const SetPartition nodes = partition(w);
  json zones = json::array();
  for (int i = 1; i <= w.size(); ++i)
    zones.push_back({{"index", i}, {"letter", Word::letter_text(w.at(i))}});
  json node_list = json::array();
  for (const auto& block : nodes.blocks()) node_list.push_back(block);
  json segments = json::array();
  for (int i = 1; i < w.size(); ++i)
    segments.push_back({{"index", i}, {"between", {i, i + 1}}});
  return {{"word", w.str()}, {"zones", zones}, {"nodes", node_list}, {"segments", segments}};
}

inline int cmd_diagram(const Word& w, const std::string& format, const std::string& out_path,
                       std::ostream& out) {
  if (validate(w).kind == WordKind::Invalid) fail(Errc::InvalidWord, "diagram: not a snake word");
  const std::string text = format == "json" ? diagram_json(w).dump() + "\n" : diagram_dot(w);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) fail(Errc::Io, "cannot open " + out_path + " for writing");
    file << text;
    if (!file) fail(Errc::Io, "write to " + out_path + " failed");
  } else {
    out << text;
  }
  return 0;
}

inline bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::Io:
    case Errc::BadWordText:
    case Errc::BadBlockText:
    case Errc::BadExponents:
    case Errc::InvalidTableau:
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// Runs one CLI invocation; `args` excludes the program name. Exit code 0 on
/// success, 1 on negative domain verdicts and domain errors, 2 on usage and
/// I/O errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* bound = std::getenv("SNAKES_BRUTE_BOUND")) cfg.brute_force_bound = std::atoi(bound);

  CLI::App app{"combinatorics of snake words: validation, enumeration, tableaux and the model oracle"};
  app.name("snakes");
  app.require_subcommand(1);
  app.fallthrough();
  bool json_output = false;
  app.add_flag("--json", json_output, "emit JSON instead of text");

  std::string word_text, word_text_b, letter_text, rows_text, clusters_a, clusters_b;
  std::string method = "ab", diagram_format = "dot", out_path;
  std::string alpha_text, beta_text;
  int m = 0;
  bool with_table = false;

  auto* validate_cmd = app.add_subcommand("validate", "classify a word as snake name, spiral word or invalid");
  validate_cmd->add_option("word", word_text)->required();

  auto* canon_cmd = app.add_subcommand("canon", "canonical form of a word");
  canon_cmd->add_option("word", word_text)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "binary reduction (one letter or full)");
  reduce_cmd->add_option("word", word_text)->required();
  reduce_cmd->add_option("--letter", letter_text, "reduce only this letter");

  auto* params_cmd = app.add_subcommand("params", "parameters (j,k) of a binary snake name");
  params_cmd->add_option("word", word_text)->required();

  auto* enum_cmd = app.add_subcommand("enum", "enumerate binary snake names of length 2m");
  enum_cmd->add_option("--m", m)->required();
  enum_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "ab", "recursion-count"}));
  enum_cmd->add_option("--out", out_path, "write the enumeration cache to this file");

  auto* count_cmd = app.add_subcommand("count", "number of binary snake names of length 2m");
  count_cmd->add_option("--m", m)->required();
  count_cmd->add_flag("--table", with_table, "print the (j,k) table");

  auto* syt_cmd = app.add_subcommand("syt", "two-row standard Young tableau of a binary snake name");
  syt_cmd->add_option("word", word_text)->required();

  auto* word_of_cmd = app.add_subcommand("word-of-syt", "binary snake name of a two-row tableau");
  word_of_cmd->add_option("--rows", rows_text, "tableau rows, e.g. \"1,2,4;3,5,6\"")->required();

  auto* inversions_cmd = app.add_subcommand("inversions", "inversions of a binary word");
  inversions_cmd->add_option("word", word_text)->required();

  auto* tord_cmd = app.add_subcommand("tord", "tangency-order matrix of the model snake arcs");
  tord_cmd->add_option("word", word_text)->required();
  tord_cmd->add_option("--alpha", alpha_text);
  tord_cmd->add_option("--beta", beta_text);

  auto* structure_cmd = app.add_subcommand("structure", "nodal zones, nodes, segments and spectra");
  structure_cmd->add_option("word", word_text)->required();
  structure_cmd->add_option("--alpha", alpha_text);
  structure_cmd->add_option("--beta", beta_text);

  auto* pairs_cmd = app.add_subcommand("pairs", "segments keyed by their letter pair");
  pairs_cmd->add_option("word", word_text)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "decide weak outer Lipschitz equivalence");
  equiv_cmd->add_option("worda", word_text)->required();
  equiv_cmd->add_option("wordb", word_text_b)->required();
  equiv_cmd->add_option("--clusters-a", clusters_a, "cluster partition of the first word's segments");
  equiv_cmd->add_option("--clusters-b", clusters_b, "cluster partition of the second word's segments");

  auto* diagram_cmd = app.add_subcommand("diagram", "link diagram of a snake word");
  diagram_cmd->add_option("word", word_text)->required();
  diagram_cmd->add_option("--format", diagram_format)->check(CLI::IsMember({"dot", "json"}));
  diagram_cmd->add_option("--out", out_path, "write to this file instead of stdout");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.format = json_output ? Config::Format::Json : Config::Format::Text;
  if (!out_path.empty() && enum_cmd->parsed()) cfg.cache_path = out_path;
  try {
    if (!alpha_text.empty()) cfg.alpha = Rational::parse(alpha_text);
    if (!beta_text.empty()) cfg.beta = Rational::parse(beta_text);

    if (validate_cmd->parsed()) return detail::cmd_validate(Word::parse(word_text), cfg, out);
    if (canon_cmd->parsed()) return detail::emit_word(canonicalize(Word::parse(word_text)), cfg, out);
    if (reduce_cmd->parsed()) {
      const Word w = Word::parse(word_text);
      if (letter_text.empty()) return detail::emit_word(full_binary_reduction(w), cfg, out);
      const Word letter = Word::parse(letter_text);
      if (letter.size() != 1) fail(Errc::BadWordText, "--letter expects a single letter");
      return detail::emit_word(binary_reduce(w, letter.at(1)), cfg, out);
    }
    if (params_cmd->parsed()) return detail::cmd_params(Word::parse(word_text), cfg, out);
    if (enum_cmd->parsed()) return detail::cmd_enum(m, method, cfg, out);
    if (count_cmd->parsed()) return detail::cmd_count(m, with_table, cfg, out);
    if (syt_cmd->parsed()) return detail::cmd_syt(Word::parse(word_text), cfg, out);
    if (word_of_cmd->parsed()) return detail::emit_word(word_of(YoungTableau2::parse(rows_text)), cfg, out);
    if (inversions_cmd->parsed()) return detail::cmd_inversions(Word::parse(word_text), cfg, out);
    if (tord_cmd->parsed()) return detail::cmd_tord(Word::parse(word_text), cfg, out);
    if (structure_cmd->parsed()) return detail::cmd_structure(Word::parse(word_text), cfg, out);
    if (pairs_cmd->parsed()) return detail::cmd_pairs(Word::parse(word_text), cfg, out);
    if (equiv_cmd->parsed())
      return detail::cmd_equiv(Word::parse(word_text), clusters_a, Word::parse(word_text_b), clusters_b,
                               cfg, out);
    if (diagram_cmd->parsed())
      return detail::cmd_diagram(Word::parse(word_text), diagram_format, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::is_usage_error(e.code()) ? 2 : 1;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace snakes::cli

#endif  // SNAKES_CLI_HPP
