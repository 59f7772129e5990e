#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "framelab/defect.hpp"
#include "framelab/frame_algebra.hpp"
#include "framelab/io.hpp"
#include "framelab/model.hpp"
#include "framelab/suites.hpp"

namespace fl = framelab;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 20240811;
  int cap = 22;
  std::string format = "text";
};

// Flipped to 1 by verification commands whose checked property fails.
int exit_status = 0;

void emit(const GlobalOpts& g, const fl::json& j, const std::string& text) {
  if (g.format == "json")
    std::cout << fl::render_json(j);
  else
    std::cout << text;
}

std::string trimmed(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

// Inline text first, then the file (one formula per line, '#' comments).
std::vector<fl::Formula> gather_formulas(const std::string& text, const std::string& path) {
  std::vector<fl::Formula> out;
  if (!text.empty()) out.push_back(fl::parse(text));
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw fl::InvalidArgument("cannot open formula file: " + path);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trimmed(line);
      if (!line.empty()) out.push_back(fl::parse(line));
    }
  }
  if (out.empty())
    throw fl::InvalidArgument("no formula given; use --formula or --formulas-file");
  return out;
}

fl::Alphabet parse_names(const std::string& text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text + ",") {
    if (c == ',') {
      current = trimmed(current);
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  return fl::Alphabet(names);
}

fl::Partition partition_or_trivial(const std::string& text, int n) {
  return text.empty() ? fl::Partition::trivial(n) : fl::partition_from_text(text, n);
}

struct SplitSpec {
  fl::Alphabet vertical, horizontal;
};

// "v:a,b;h:c" names the vertical and horizontal modalities.
SplitSpec parse_split(const std::string& text) {
  SplitSpec out;
  bool have_v = false, have_h = false;
  std::string segment;
  for (char c : text + ";") {
    if (c != ';') {
      segment += c;
      continue;
    }
    segment = trimmed(segment);
    if (segment.rfind("v:", 0) == 0) {
      out.vertical = parse_names(segment.substr(2));
      have_v = true;
    } else if (segment.rfind("h:", 0) == 0) {
      out.horizontal = parse_names(segment.substr(2));
      have_h = true;
    } else if (!segment.empty()) {
      throw fl::InvalidArgument("split segments must start with v: or h:");
    }
    segment.clear();
  }
  if (!have_v || !have_h)
    throw fl::InvalidArgument("split needs both a v: part and an h: part");
  return out;
}

// First modality vertical, the rest horizontal.
SplitSpec default_split(const fl::Frame& f) {
  if (f.modality_count() < 2)
    throw fl::InvalidArgument(
        "frame needs at least two modalities to split; give --split explicitly");
  std::vector<std::string> h;
  for (int d = 1; d < f.modality_count(); ++d) h.push_back(f.alphabet().name(d));
  return {fl::Alphabet({f.alphabet().name(0)}), fl::Alphabet(h)};
}

SplitSpec split_or_default(const std::string& text, const fl::Frame& f) {
  return text.empty() ? default_split(f) : parse_split(text);
}

std::vector<fl::Frame> load_frames(const std::vector<std::string>& paths) {
  std::vector<fl::Frame> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(fl::load_frame(p));
  return out;
}

std::vector<fl::WorldSet> generators_from_file(const std::string& path, int n) {
  std::vector<fl::WorldSet> out;
  if (path.empty()) return out;
  fl::json j = fl::read_json_file(path);
  if (!j.is_array()) throw fl::InvalidArgument("generator file must hold an array of world arrays");
  for (const auto& entry : j) {
    if (!entry.is_array()) throw fl::InvalidArgument("each generator must be a world array");
    fl::WorldSet s(n);
    for (const auto& w : entry) s.insert(w.get<int>());
    out.push_back(std::move(s));
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_parse_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("parse", "parse formulas and print their canonical form");
  auto text = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  sc->add_option("--formula", *text, "formula text");
  sc->add_option("--formulas-file", *file, "file with one formula per line");
  sc->callback([&g, text, file] {
    fl::json results = fl::json::array();
    std::string lines;
    for (const auto& phi : gather_formulas(*text, *file)) {
      results.push_back(fl::json{{"text", fl::print(phi)},
                                 {"variables", phi.variables()},
                                 {"modalities", phi.modalities()},
                                 {"modal_depth", phi.modal_depth()}});
      lines += fl::print(phi) + "\n";
    }
    emit(g, fl::json{{"formulas", results}}, lines);
  });
}

void add_modelcheck_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("modelcheck", "evaluate formulas on a model");
  auto frame = std::make_shared<std::string>();
  auto val = std::make_shared<std::string>();
  auto text = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  sc->add_option("--frame", *frame, "frame JSON file")->required();
  sc->add_option("--val", *val, "valuation JSON file, e.g. {\"p0\": [0, 1]}")->required();
  sc->add_option("--formula", *text, "formula text");
  sc->add_option("--formulas-file", *file, "file with one formula per line");
  sc->callback([&g, frame, val, text, file] {
    fl::Frame f = fl::load_frame(*frame);
    fl::Model m{f, fl::valuation_from_json(fl::read_json_file(*val), f.world_count())};
    fl::json results = fl::json::array();
    std::string lines;
    for (const auto& phi : gather_formulas(*text, *file)) {
      fl::WorldSet worlds = fl::evaluate(m, phi);
      results.push_back(
          fl::json{{"formula", fl::print(phi)}, {"worlds", fl::worldset_to_json(worlds)}});
      lines += fl::print(phi) + "  " + worlds.to_string() + "\n";
    }
    emit(g, fl::json{{"results", results}}, lines);
  });
}

void add_valid_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("valid", "check validity on a frame over all valuations");
  auto frame = std::make_shared<std::string>();
  auto text = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  sc->add_option("--frame", *frame, "frame JSON file")->required();
  sc->add_option("--formula", *text, "formula text");
  sc->add_option("--formulas-file", *file, "file with one formula per line");
  sc->callback([&g, frame, text, file] {
    fl::Frame f = fl::load_frame(*frame);
    fl::json results = fl::json::array();
    std::string lines;
    for (const auto& phi : gather_formulas(*text, *file)) {
      fl::ValidityResult res = fl::check_validity(f, phi, g.cap);
      fl::json entry{{"formula", fl::print(phi)}, {"valid", res.valid}};
      lines += fl::print(phi) + ": ";
      if (res.valid) {
        lines += "valid\n";
      } else {
        fl::json witness = fl::json::object();
        std::string parts;
        for (const auto& [var, set] : res.witness_valuation) {
          witness["p" + std::to_string(var)] = fl::worldset_to_json(set);
          if (!parts.empty()) parts += ", ";
          parts += "p" + std::to_string(var) + "=" + set.to_string();
        }
        entry["witness_valuation"] = witness;
        entry["witness_world"] = res.witness_world;
        lines += "invalid at world " + std::to_string(res.witness_world);
        if (!parts.empty()) lines += " under " + parts;
        lines += "\n";
      }
      results.push_back(entry);
    }
    emit(g, fl::json{{"results", results}}, lines);
  });
}

void add_refine_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("refine", "coarsest tuned refinement of a partition");
  auto frame = std::make_shared<std::string>();
  auto partition = std::make_shared<std::string>();
  auto profile = std::make_shared<std::optional<int>>();
  sc->add_option("--frame", *frame, "frame JSON file")->required();
  sc->add_option("--partition", *partition,
                 "partition text, blocks split by '|', worlds by ',' (default: one block)");
  sc->add_option("--profile", *profile,
                 "also report the largest refinement over all partitions with at most 2^K blocks");
  sc->callback([&g, frame, partition, profile] {
    fl::Frame f = fl::load_frame(*frame);
    int n = f.world_count();
    fl::Partition p = partition_or_trivial(*partition, n);
    bool tuned = fl::is_tuned(f, p);
    fl::Partition refined = fl::coarsest_tuned_refinement(f, p);
    fl::json out{{"input_tuned", tuned},
                 {"refined", fl::partition_to_text(refined)},
                 {"blocks", refined.block_count()}};
    std::string lines = "input tuned: " + yes_no(tuned) + "\nrefined: " +
                        fl::partition_to_text(refined) + "\nblocks: " +
                        std::to_string(refined.block_count()) + "\n";
    if (profile->has_value()) {
      int best = fl::tunability_profile(f, **profile);
      out["profile_max_blocks"] = best;
      lines += "profile max blocks (k=" + std::to_string(**profile) +
               "): " + std::to_string(best) + "\n";
    }
    emit(g, out, lines);
  });
}

void add_frame_queries(CLI::App& app, const GlobalOpts& g) {
  auto height_cmd = app.add_subcommand("height", "longest cluster chain of the skeleton");
  auto hframe = std::make_shared<std::string>();
  height_cmd->add_option("--frame", *hframe, "frame JSON file")->required();
  height_cmd->callback([&g, hframe] {
    int h = fl::height(fl::load_frame(*hframe));
    emit(g, fl::json{{"height", h}}, std::to_string(h) + "\n");
  });

  auto degree_cmd = app.add_subcommand("degree", "least m with R^{m+1} inside R^{<=m}");
  auto dframe = std::make_shared<std::string>();
  degree_cmd->add_option("--frame", *dframe, "frame JSON file")->required();
  degree_cmd->callback([&g, dframe] {
    int d = fl::transitivity_degree(fl::load_frame(*dframe));
    emit(g, fl::json{{"degree", d}}, std::to_string(d) + "\n");
  });

  auto sk_cmd = app.add_subcommand("skeleton", "mutual-reachability clusters and their order");
  auto sframe = std::make_shared<std::string>();
  sk_cmd->add_option("--frame", *sframe, "frame JSON file")->required();
  sk_cmd->callback([&g, sframe] {
    fl::Skeleton sk = fl::skeleton(fl::load_frame(*sframe));
    fl::json clusters = fl::json::array();
    std::string lines = "clusters:";
    for (const auto& c : sk.clusters) {
      clusters.push_back(fl::worldset_to_json(c));
      lines += " " + c.to_string();
    }
    lines += "\norder:";
    fl::json order = fl::json::array();
    for (auto [i, j] : sk.order) {
      order.push_back(fl::json::array({i, j}));
      lines += " " + std::to_string(i) + "->" + std::to_string(j);
    }
    lines += "\n";
    emit(g, fl::json{{"clusters", clusters}, {"order", order}}, lines);
  });
}

void add_sum_command(CLI::App& app, const GlobalOpts&) {
  auto sc = app.add_subcommand("sum", "sum of frames over an index frame");
  auto index = std::make_shared<std::string>();
  auto summands = std::make_shared<std::vector<std::string>>();
  auto out_path = std::make_shared<std::string>();
  sc->add_option("--index", *index, "index frame JSON file")->required();
  sc->add_option("--summands", *summands, "summand frame JSON files")->take_all();
  sc->add_option("--out", *out_path, "write the sum frame to this file");
  sc->callback([index, summands, out_path] {
    fl::SumFrame s = fl::sum_over_index(fl::load_frame(*index), load_frames(*summands));
    std::cout << fl::render_json(fl::frame_to_json(s.frame));
    if (!out_path->empty()) fl::save_frame(s.frame, *out_path);
  });
}

void add_lexsum_command(CLI::App& app, const GlobalOpts&) {
  auto sc = app.add_subcommand("lexsum", "lexicographic sum of frames over an index frame");
  auto index = std::make_shared<std::string>();
  auto summands = std::make_shared<std::vector<std::string>>();
  auto split = std::make_shared<std::string>();
  auto product = std::make_shared<bool>(false);
  auto out_path = std::make_shared<std::string>();
  sc->add_option("--index", *index, "index frame JSON file (vertical alphabet)")->required();
  sc->add_option("--summands", *summands, "summand frame JSON files (horizontal alphabet)")
      ->take_all();
  sc->add_option("--split", *split, "expected split, e.g. \"v:a;h:b\" (validated)");
  sc->add_flag("--product", *product,
               "lexicographic product: replicate the single summand per index world");
  sc->add_option("--out", *out_path, "write the sum frame to this file");
  sc->callback([index, summands, split, product, out_path] {
    fl::Frame idx = fl::load_frame(*index);
    std::vector<fl::Frame> parts = load_frames(*summands);
    if (*product) {
      if (parts.size() != 1)
        throw fl::InvalidArgument("--product takes exactly one summand frame");
      parts.assign(static_cast<std::size_t>(idx.world_count()), parts.front());
    }
    if (!split->empty()) {
      SplitSpec spec = parse_split(*split);
      if (spec.vertical.names != idx.alphabet().names)
        throw fl::InvalidArgument("split v-part does not match the index alphabet");
      if (!parts.empty() && spec.horizontal.names != parts.front().alphabet().names)
        throw fl::InvalidArgument("split h-part does not match the summand alphabet");
    }
    fl::SumFrame s = fl::lex_sum(idx, parts);
    std::cout << fl::render_json(fl::frame_to_json(s.frame));
    if (!out_path->empty()) fl::save_frame(s.frame, *out_path);
  });
}

void add_transfer_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand(
      "transfer", "refine a partition in the disjoint sum and transfer it onto the full sum");
  auto index = std::make_shared<std::string>();
  auto summands = std::make_shared<std::vector<std::string>>();
  auto partition = std::make_shared<std::string>();
  sc->add_option("--index", *index, "index frame JSON file")->required();
  sc->add_option("--summands", *summands, "summand frame JSON files")->take_all();
  sc->add_option("--partition", *partition,
                 "starting partition of the sum's worlds (default: one block)");
  sc->callback([&g, index, summands, partition] {
    fl::Frame idx = fl::load_frame(*index);
    std::vector<fl::Frame> parts = load_frames(*summands);
    fl::SumFrame s = fl::sum_over_index(idx, parts);
    fl::SumFrame diag = fl::disjoint_sum(parts);
    int n = s.frame.world_count();
    fl::Partition v0 = partition_or_trivial(*partition, n);
    fl::Partition v = fl::coarsest_tuned_refinement(diag.frame, v0);
    fl::Partition u = fl::coarsest_tuned_refinement(fl::irreflexive_part(idx),
                                                    fl::footprint_partition(s, v));
    fl::Partition t = fl::transfer_partition(s, idx, v, u);
    fl::json out{{"v", fl::partition_to_text(v)},
                 {"u", fl::partition_to_text(u)},
                 {"transferred", fl::partition_to_text(t)},
                 {"blocks", t.block_count()},
                 {"bound", v.block_count() * u.block_count()}};
    std::string lines = "summand refinement v: " + fl::partition_to_text(v) +
                        "\nindex refinement u: " + fl::partition_to_text(u) +
                        "\ntransferred: " + fl::partition_to_text(t) + "\nblocks: " +
                        std::to_string(t.block_count()) + " (bound " +
                        std::to_string(v.block_count() * u.block_count()) + ")\n";
    emit(g, out, lines);
  });
}

void add_cover_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("cover", "lexicographic cover of a rooted frame");
  auto frame = std::make_shared<std::string>();
  auto root = std::make_shared<std::optional<int>>();
  auto split = std::make_shared<std::string>();
  auto out_frame = std::make_shared<std::string>();
  auto out_map = std::make_shared<std::string>();
  sc->add_option("--frame", *frame, "frame JSON file")->required();
  sc->add_option("--root", *root, "root world (default: least world reaching everything)");
  sc->add_option("--split", *split, "vertical/horizontal split, e.g. \"v:a;h:b\"");
  sc->add_option("--out-frame", *out_frame, "write the cover frame to this file");
  sc->add_option("--out-map", *out_map, "write the world map sidecar to this file");
  sc->callback([&g, frame, root, split, out_frame, out_map] {
    fl::Frame f = fl::load_frame(*frame);
    SplitSpec spec = split_or_default(*split, f);
    int r = 0;
    if (root->has_value()) {
      r = **root;
    } else {
      auto found = fl::find_root(f);
      if (!found) throw fl::InvalidArgument("no world reaches every world; give --root");
      r = *found;
    }
    fl::CoverResult cr = fl::oplus_cover(f, spec.vertical, spec.horizontal, r);
    fl::json out{{"root", r},
                 {"cover", fl::frame_to_json(cr.cover.frame)},
                 {"map", cr.map},
                 {"pmorphism", cr.pmorphism},
                 {"surjective", cr.surjective},
                 {"composition_identity", cr.composition_identity}};
    std::string lines =
        "cover worlds: " + std::to_string(cr.cover.frame.world_count()) + "\nroot: " +
        std::to_string(r) + "\npmorphism: " + yes_no(cr.pmorphism) + "\nsurjective: " +
        yes_no(cr.surjective) + "\ncomposition identity: " + yes_no(cr.composition_identity) +
        "\n";
    emit(g, out, lines);
    if (!out_frame->empty()) fl::save_frame(cr.cover.frame, *out_frame);
    if (!out_map->empty()) fl::write_json_file(fl::map_to_json(cr.map), *out_map);
    if (!(cr.pmorphism && cr.surjective && cr.composition_identity)) exit_status = 1;
  });
}

void add_phi_check_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("phi-check",
                               "check the interaction conditions for a vertical/horizontal split");
  auto frame = std::make_shared<std::string>();
  auto split = std::make_shared<std::string>();
  sc->add_option("--frame", *frame, "frame JSON file")->required();
  sc->add_option("--split", *split, "vertical/horizontal split, e.g. \"v:a;h:b\"");
  sc->callback([&g, frame, split] {
    fl::Frame f = fl::load_frame(*frame);
    SplitSpec spec = split_or_default(*split, f);
    auto fail = fl::phi_condition_failure(f, spec.vertical, spec.horizontal);
    bool splits = fl::composition_splits(f, spec.vertical, spec.horizontal);
    fl::json out{{"conditions_hold", !fail.has_value()}, {"composition_splits", splits}};
    std::string lines = "conditions hold: " + yes_no(!fail.has_value()) + "\n";
    if (fail) {
      out["failure"] = fl::json{{"vertical", fail->vertical},
                                {"horizontal", fail->horizontal},
                                {"condition", fail->condition},
                                {"pair", fl::json::array({fail->pair.first, fail->pair.second})}};
      lines += "  condition " + std::to_string(fail->condition) + " fails for v=" +
               fail->vertical + ", h=" + fail->horizontal + " at pair (" +
               std::to_string(fail->pair.first) + "," + std::to_string(fail->pair.second) +
               ")\n";
    }
    lines += "composition splits: " + yes_no(splits) + "\n";
    emit(g, out, lines);
    if (fail) exit_status = 1;
  });
}

void add_translate_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("translate", "formula translations");
  auto mode = std::make_shared<std::string>();
  auto text = std::make_shared<std::string>();
  auto file = std::make_shared<std::string>();
  auto xi = std::make_shared<std::string>();
  auto steps = std::make_shared<int>(1);
  auto alphabet = std::make_shared<std::string>();
  sc->add_option("--mode", *mode, "reflexive, relativize, or m")
      ->required()
      ->check(CLI::IsMember({"reflexive", "relativize", "m"}));
  sc->add_option("--formula", *text, "formula text");
  sc->add_option("--formulas-file", *file, "file with one formula per line");
  sc->add_option("--xi", *xi, "relativizer formula (mode relativize)");
  sc->add_option("--m", *steps, "step bound (mode m)");
  sc->add_option("--alphabet", *alphabet, "target modality names, e.g. \"a,b\" (mode m)");
  sc->callback([&g, mode, text, file, xi, steps, alphabet] {
    fl::json results = fl::json::array();
    std::string lines;
    for (const auto& phi : gather_formulas(*text, *file)) {
      fl::Formula translated;
      if (*mode == "reflexive") {
        translated = fl::reflexive_translate(phi);
      } else if (*mode == "relativize") {
        if (xi->empty()) throw fl::InvalidArgument("mode relativize needs --xi");
        translated = fl::relativize(phi, fl::parse(*xi));
      } else {
        if (alphabet->empty()) throw fl::InvalidArgument("mode m needs --alphabet");
        translated = fl::m_translate(phi, *steps, parse_names(*alphabet));
      }
      results.push_back(
          fl::json{{"input", fl::print(phi)}, {"output", fl::print(translated)}});
      lines += fl::print(translated) + "\n";
    }
    emit(g, fl::json{{"results", results}}, lines);
  });
}

void add_qes_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("qes", "defect-driven refinement trace with verdicts");
  auto frame = std::make_shared<std::string>();
  auto modality = std::make_shared<std::string>();
  auto generators = std::make_shared<std::string>();
  sc->add_option("--frame", *frame, "frame JSON file")->required();
  sc->add_option("--modality", *modality, "designated modality name")->required();
  sc->add_option("--generators", *generators,
                 "JSON file with an array of world arrays used as generators");
  sc->callback([&g, frame, modality, generators] {
    fl::Frame f = fl::load_frame(*frame);
    std::vector<fl::WorldSet> gens = generators_from_file(*generators, f.world_count());
    fl::QesTrace t = fl::run_qes(f, *modality, gens);
    bool main_ok = !fl::verify_main_claim(t).has_value();
    bool embed_ok = fl::verify_embedding(t);
    bool final_ok = fl::verify_final_partition(t);

    std::string lines = "stages: " + std::to_string(t.stage_count()) + "\n";
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
      lines += "stage " + std::to_string(i) + ": " +
               fl::partition_to_text(t.stages[i].partition) + "  defects " +
               t.stages[i].defects.to_string() + "\n";
    }
    lines += "defect union: " + t.defect_union.to_string() + "\n";
    lines += "even ranks: " + t.even_rank.to_string() + "\n";
    lines += "separator: " + t.separator.to_string() + "\n";
    lines += "main claim: " + yes_no(main_ok) + "\nembedding: " + yes_no(embed_ok) +
             "\nfinal partition: " + yes_no(final_ok) + "\n";
    emit(g, fl::trace_to_json(t), lines);
    if (!(main_ok && embed_ok && final_ok)) exit_status = 1;
  });
}

void add_suite_command(CLI::App& app, const GlobalOpts& g) {
  auto sc = app.add_subcommand("suite", "run one experiment suite");
  auto name = std::make_shared<std::string>();
  auto frames = std::make_shared<std::optional<int>>();
  auto world_bound = std::make_shared<std::optional<int>>();
  auto modality_bound = std::make_shared<std::optional<int>>();
  auto density = std::make_shared<std::optional<double>>();
  auto variable_bound = std::make_shared<std::optional<int>>();
  auto depth_bound = std::make_shared<std::optional<int>>();
  sc->add_option("name", *name, "suite name")
      ->required()
      ->check(CLI::IsMember(fl::suite_names()));
  sc->add_option("--frames", *frames, "number of generated cases");
  sc->add_option("--world-bound", *world_bound, "largest world count");
  sc->add_option("--modality-bound", *modality_bound, "largest alphabet size");
  sc->add_option("--density", *density, "edge probability");
  sc->add_option("--variable-bound", *variable_bound, "largest variable count");
  sc->add_option("--depth-bound", *depth_bound, "largest formula depth");
  sc->callback([&g, name, frames, world_bound, modality_bound, density, variable_bound,
                depth_bound] {
    fl::ExperimentConfig cfg = fl::default_config_for(*name);
    cfg.seed = g.seed;
    cfg.cap = g.cap;
    if (frames->has_value()) cfg.frame_count = **frames;
    if (world_bound->has_value()) cfg.world_bound = **world_bound;
    if (modality_bound->has_value()) cfg.modality_bound = **modality_bound;
    if (density->has_value()) cfg.density = **density;
    if (variable_bound->has_value()) cfg.variable_bound = **variable_bound;
    if (depth_bound->has_value()) cfg.depth_bound = **depth_bound;
    fl::SuiteReport rep = fl::run_suite(*name, cfg);
    emit(g, fl::suite_to_json(rep), fl::suite_to_text(rep));
    if (!rep.passed()) exit_status = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"finite Kripke-frame workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "seed for generated corpora");
  app.add_option("--cap", g.cap, "valuation-bit cap for validity enumeration");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  add_parse_command(app, g);
  add_modelcheck_command(app, g);
  add_valid_command(app, g);
  add_refine_command(app, g);
  add_frame_queries(app, g);
  add_sum_command(app, g);
  add_lexsum_command(app, g);
  add_transfer_command(app, g);
  add_cover_command(app, g);
  add_phi_check_command(app, g);
  add_translate_command(app, g);
  add_qes_command(app, g);
  add_suite_command(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fl::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_status;
}
