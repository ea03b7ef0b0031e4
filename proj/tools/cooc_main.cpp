// cooc: word-type co-occurrence counts from a bitext, under distance-based,
// boundary-based, or combined co-occurrence models, with naive /
// at-most-one / at-least-one counting and optional POS / MRBD / cognate
// filters.
//
// Exit codes: 0 success, 1 input format error, 2 configuration
// contradiction, 3 internal failure, 4 verification mismatch.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cooc/corpus.hpp"
#include "cooc/counting.hpp"
#include "cooc/errors.hpp"
#include "cooc/filters.hpp"
#include "cooc/geometry.hpp"
#include "cooc/io.hpp"
#include "cooc/model.hpp"
#include "cooc/oracle.hpp"

namespace {

using namespace cooc;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;
constexpr int kExitMismatch = 4;

struct RunConfig {
  std::string text1, text2;
  std::string mode;
  std::string map_path;
  double delta = -1.0;
  bool has_delta = false;
  std::string units = "characters";
  std::string alignment_path;
  std::string assumption = "naive";
  std::string mrbd_path, pos1_path, pos2_path, pos_compat_path;
  bool cognate = false;
  double cognate_threshold = 0.58;
  unsigned cognate_min_length = 4;
  std::string filter_order;
  bool fold_case = false;
  std::string output;
};

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--text1", cfg.text1, "Text half 1 (UTF-8, one segment per line)")
      ->required();
  cmd->add_option("--text2", cfg.text2, "Text half 2")->required();
  cmd->add_option("--mode", cfg.mode, "Co-occurrence model")
      ->required()
      ->check(CLI::IsMember({"distance", "boundary", "combined"}));
  cmd->add_option("--map", cfg.map_path, "Anchor file (distance/combined)");
  auto* delta = cmd->add_option("--delta", cfg.delta,
                                "Distance threshold in axis units (distance/combined)");
  cmd->add_option("--units", cfg.units, "Axis units [characters]")
      ->check(CLI::IsMember({"characters", "tokens"}));
  cmd->add_option("--alignment", cfg.alignment_path,
                  "Segment alignment file (boundary/combined)");
  cmd->add_option("--assumption", cfg.assumption, "Counting assumption [naive]")
      ->check(CLI::IsMember({"naive", "at-most-one", "at-least-one"}));
  cmd->add_option("--mrbd", cfg.mrbd_path, "Bilingual dictionary file (enables MRBD filter)");
  cmd->add_option("--pos1", cfg.pos1_path, "POS tags for half 1 (enables POS filter)");
  cmd->add_option("--pos2", cfg.pos2_path, "POS tags for half 2");
  cmd->add_option("--pos-compat", cfg.pos_compat_path,
                  "Extra compatible tag pairs; absent file = identity compatibility");
  auto* cog = cmd->add_flag("--cognate", cfg.cognate, "Enable the cognate (LCSR) filter");
  auto* cogt = cmd->add_option("--cognate-threshold", cfg.cognate_threshold,
                               "LCSR threshold [0.58]");
  auto* cogl = cmd->add_option("--cognate-min-length", cfg.cognate_min_length,
                               "Minimum word length in code points [4]");
  cmd->parse_complete_callback([&cfg, delta, cog, cogt, cogl] {
    cfg.has_delta = delta->count() > 0;
    if (cog->count() || cogt->count() || cogl->count()) cfg.cognate = true;
  });
  cmd->add_option("--filter-order", cfg.filter_order,
                  "Comma-separated filter order, e.g. mrbd,pos [pos,mrbd,cognate]");
  cmd->add_flag("--fold-case", cfg.fold_case, "Case-fold word types");
}

[[noreturn]] void config_error(const std::string& msg) {
  throw CoocError(Errc::bad_config, msg);
}

void validate_config(const RunConfig& cfg) {
  const bool needs_map = cfg.mode == "distance" || cfg.mode == "combined";
  const bool needs_alignment = cfg.mode == "boundary" || cfg.mode == "combined";
  if (needs_map && cfg.map_path.empty()) config_error("--mode " + cfg.mode + " requires --map");
  if (needs_map && !cfg.has_delta) config_error("--mode " + cfg.mode + " requires --delta");
  if (needs_map && !(std::isfinite(cfg.delta) && cfg.delta >= 0.0)) {
    config_error("--delta must be finite and nonnegative");
  }
  if (!needs_map && (!cfg.map_path.empty() || cfg.has_delta)) {
    config_error("--map/--delta are only meaningful with --mode distance or combined");
  }
  if (needs_alignment && cfg.alignment_path.empty()) {
    config_error("--mode " + cfg.mode + " requires --alignment");
  }
  if (!needs_alignment && !cfg.alignment_path.empty()) {
    config_error("--alignment is only meaningful with --mode boundary or combined");
  }
  if (cfg.pos1_path.empty() != cfg.pos2_path.empty()) {
    config_error("--pos1 and --pos2 must be given together");
  }
  if (!cfg.pos_compat_path.empty() && cfg.pos1_path.empty()) {
    config_error("--pos-compat requires --pos1/--pos2");
  }
}

std::vector<std::string> parse_filter_order(const RunConfig& cfg) {
  std::vector<std::string> order;
  if (!cfg.filter_order.empty()) {
    std::size_t start = 0;
    while (start <= cfg.filter_order.size()) {
      std::size_t comma = cfg.filter_order.find(',', start);
      if (comma == std::string::npos) comma = cfg.filter_order.size();
      order.push_back(cfg.filter_order.substr(start, comma - start));
      start = comma + 1;
      if (start == cfg.filter_order.size() + 1) break;
    }
    for (const std::string& name : order) {
      if (name == "pos") {
        if (cfg.pos1_path.empty()) config_error("filter order names pos but --pos1/--pos2 are missing");
      } else if (name == "mrbd") {
        if (cfg.mrbd_path.empty()) config_error("filter order names mrbd but --mrbd is missing");
      } else if (name == "cognate") {
        if (!cfg.cognate) config_error("filter order names cognate but --cognate is missing");
      } else {
        config_error("unknown filter \"" + name + "\" (expected pos, mrbd or cognate)");
      }
    }
  } else {
    if (!cfg.pos1_path.empty()) order.push_back("pos");
    if (!cfg.mrbd_path.empty()) order.push_back("mrbd");
    if (cfg.cognate) order.push_back("cognate");
  }
  return order;
}

struct LoadedRun {
  TokenizedHalf h1, h2;
  std::optional<CoocModel> model;  // absent when the bitext is empty
  CountingAssumption assumption = CountingAssumption::naive;
  FilterSet filters;
};

CountingAssumption parse_assumption(const std::string& name) {
  if (name == "naive") return CountingAssumption::naive;
  if (name == "at-most-one") return CountingAssumption::at_most_one;
  return CountingAssumption::at_least_one;
}

LoadedRun load_run(const RunConfig& cfg) {
  validate_config(cfg);

  LoadedRun run;
  run.assumption = parse_assumption(cfg.assumption);
  run.h1 = io::load_text_file(cfg.text1, cfg.fold_case);
  run.h2 = io::load_text_file(cfg.text2, cfg.fold_case);

  if (!cfg.pos1_path.empty()) {
    run.h1 = run.h1.with_pos(io::load_pos_file(cfg.pos1_path, run.h1));
    run.h2 = run.h2.with_pos(io::load_pos_file(cfg.pos2_path, run.h2));
  }

  for (const std::string& name : parse_filter_order(cfg)) {
    if (name == "pos") {
      PosCompat compat;
      if (!cfg.pos_compat_path.empty()) {
        compat = io::load_pos_compat_file(cfg.pos_compat_path);
      }
      run.filters.add(std::move(compat));
    } else if (name == "mrbd") {
      run.filters.add(io::load_mrbd_file(cfg.mrbd_path, cfg.fold_case));
    } else {
      run.filters.add(make_cognate_rule(cfg.cognate_threshold, cfg.cognate_min_length));
    }
  }

  if (run.h1.empty() || run.h2.empty()) return run;  // empty bitext, empty table

  const AxisUnits units =
      cfg.units == "characters" ? AxisUnits::characters : AxisUnits::tokens;

  std::optional<DistanceModel> distance;
  if (cfg.mode == "distance" || cfg.mode == "combined") {
    const BitextSpace space{run.h1.length(units), run.h2.length(units), units};
    distance = make_distance_model(io::load_map_file(cfg.map_path, space), cfg.delta);
  }
  std::optional<BoundaryModel> boundary;
  if (cfg.mode == "boundary" || cfg.mode == "combined") {
    boundary = BoundaryModel{io::load_alignment_file(cfg.alignment_path, run.h1, run.h2)};
  }

  if (cfg.mode == "distance") {
    run.model = CoocModel(std::move(*distance));
  } else if (cfg.mode == "boundary") {
    run.model = CoocModel(std::move(*boundary));
  } else {
    run.model = CoocModel(CombinedModel{std::move(*distance), std::move(*boundary)});
  }
  return run;
}

// Candidate edge total for the boundary fast path: per block, the product
// of its side token counts.
std::uint64_t block_edge_total(const SegmentAlignment& alignment,
                               const TokenizedHalf& h1, const TokenizedHalf& h2) {
  std::uint64_t total = 0;
  for (std::size_t b = 0; b < alignment.block_count(); ++b) {
    std::uint64_t n1 = 0, n2 = 0;
    for (std::uint32_t seg : alignment.block(b).side1) {
      const auto [first, last] = h1.segment_tokens(seg);
      n1 += last - first;
    }
    for (std::uint32_t seg : alignment.block(b).side2) {
      const auto [first, last] = h2.segment_tokens(seg);
      n2 += last - first;
    }
    total += n1 * n2;
  }
  return total;
}

void emit_table(const CoocTable& table, const std::string& output_path) {
  const std::string tsv = io::format_table_tsv(table);
  if (output_path.empty()) {
    std::fwrite(tsv.data(), 1, tsv.size(), stdout);
    std::fflush(stdout);
  } else {
    io::write_file_atomic(output_path, tsv);
  }
}

int cmd_count(const RunConfig& cfg) {
  const LoadedRun run = load_run(cfg);

  CoocTable table;
  std::uint64_t edge_count = 0;
  std::size_t consumed_count = 0;

  if (run.model) {
    const auto* boundary = std::get_if<BoundaryModel>(&*run.model);
    if (boundary && run.filters.empty()) {
      table = count_blocks(boundary->alignment, run.h1, run.h2, run.assumption);
      edge_count = block_edge_total(boundary->alignment, run.h1, run.h2);
    } else {
      std::vector<Edge> edges = candidate_edges(*run.model, run.h1, run.h2);
      edge_count = edges.size();
      if (run.filters.empty()) {
        table = count_from_edges(run.h1, run.h2, edges, {}, run.assumption);
      } else {
        const FilterOutcome outcome =
            apply_filter_set(std::move(edges), run.h1, run.h2, run.filters);
        consumed_count = outcome.consumed.size();
        table = count_from_edges(run.h1, run.h2, outcome.residual,
                                 outcome.consumed, run.assumption);
      }
    }
  }

  emit_table(table, cfg.output);
  std::fprintf(stderr, "tokens: %zu x %zu; edges: %llu; consumed: %zu; pairs: %zu\n",
               run.h1.size(), run.h2.size(),
               static_cast<unsigned long long>(edge_count), consumed_count,
               table.size());
  return kExitOk;
}

int cmd_check_map(const std::string& map_path, const std::string& text1,
                  const std::string& text2, const std::string& units_name) {
  const AxisUnits units =
      units_name == "characters" ? AxisUnits::characters : AxisUnits::tokens;
  const TokenizedHalf h1 = io::load_text_file(text1, false);
  const TokenizedHalf h2 = io::load_text_file(text2, false);
  if (h1.char_length() == 0 || h2.char_length() == 0) {
    config_error("cannot validate a map over an empty text half");
  }
  const BitextSpace space{h1.length(units), h2.length(units), units};
  const BitextMap map = io::load_map_file(map_path, space);

  double max_gap = 0.0;
  for (std::size_t i = 1; i < map.anchors().size(); ++i) {
    const auto& a = map.anchors()[i - 1];
    const auto& b = map.anchors()[i];
    max_gap = std::max(max_gap, std::hypot(b.x - a.x, b.y - a.y));
  }
  std::printf("anchors: %zu\nmax-gap: %.3f\n", map.anchors().size(), max_gap);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::size_t max_tokens, bool inject_mismatch) {
  const LoadedRun run = load_run(cfg);
  if (run.h1.size() > max_tokens || run.h2.size() > max_tokens) {
    throw CoocError(Errc::too_large,
                    "bitext exceeds the verify cap of " +
                        std::to_string(max_tokens) + " tokens per half");
  }

  CoocTable production, reference;
  if (run.model) {
    production = count_all(*run.model, run.h1, run.h2, run.assumption, run.filters);
    reference = oracle::brute_count_all(*run.model, run.h1, run.h2,
                                        run.assumption, run.filters);
  }

  if (inject_mismatch) {
    std::vector<CoocEntry> entries(production.entries().begin(),
                                   production.entries().end());
    if (entries.empty()) {
      entries.push_back({"<injected>", "<injected>", 1});
    } else {
      entries.front().count += 1;
    }
    production = CoocTable(std::move(entries));
  }

  if (production == reference) {
    std::fprintf(stderr, "verified %zu pairs\n", production.size());
    return kExitOk;
  }

  const auto prod_map = production.as_map();
  const auto ref_map = reference.as_map();
  for (const auto& [key, count] : ref_map) {
    auto it = prod_map.find(key);
    if (it == prod_map.end()) {
      std::fprintf(stderr, "mismatch: (%s, %s) reference %llu, production absent\n",
                   key.first.c_str(), key.second.c_str(),
                   static_cast<unsigned long long>(count));
      return kExitMismatch;
    }
    if (it->second != count) {
      std::fprintf(stderr, "mismatch: (%s, %s) reference %llu, production %llu\n",
                   key.first.c_str(), key.second.c_str(),
                   static_cast<unsigned long long>(count),
                   static_cast<unsigned long long>(it->second));
      return kExitMismatch;
    }
  }
  for (const auto& [key, count] : prod_map) {
    if (!ref_map.count(key)) {
      std::fprintf(stderr, "mismatch: (%s, %s) production %llu, reference absent\n",
                   key.first.c_str(), key.second.c_str(),
                   static_cast<unsigned long long>(count));
      return kExitMismatch;
    }
  }
  std::fprintf(stderr, "mismatch: tables differ\n");
  return kExitMismatch;
}

int exit_code_for(const CoocError& e) {
  switch (e.kind()) {
    case Errc::bad_config:
    case Errc::duplicate_filter:
    case Errc::missing_tags:
      return kExitConfig;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-type co-occurrence counts from a bitext"};
  app.require_subcommand(1);

  RunConfig count_cfg;
  CLI::App* count = app.add_subcommand("count", "Count co-occurrences and write a TSV table");
  add_run_options(count, count_cfg);
  count->add_option("--output", count_cfg.output, "Output TSV path [stdout]");

  std::string cm_map, cm_text1, cm_text2, cm_units = "characters";
  CLI::App* check = app.add_subcommand("check-map", "Validate an anchor file against a bitext");
  check->add_option("--map", cm_map, "Anchor file")->required();
  check->add_option("--text1", cm_text1, "Text half 1")->required();
  check->add_option("--text2", cm_text2, "Text half 2")->required();
  check->add_option("--units", cm_units, "Axis units [characters]")
      ->check(CLI::IsMember({"characters", "tokens"}));

  RunConfig verify_cfg;
  std::size_t max_tokens = 200;
  bool inject_mismatch = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the production pipeline against the brute-force reference");
  add_run_options(verify, verify_cfg);
  verify->add_option("--max-tokens", max_tokens, "Reference-path cap per half [200]");
  verify->add_flag("--inject-mismatch", inject_mismatch, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (count->parsed()) return cmd_count(count_cfg);
    if (check->parsed()) return cmd_check_map(cm_map, cm_text1, cm_text2, cm_units);
    return cmd_verify(verify_cfg, max_tokens, inject_mismatch);
  } catch (const CoocError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
