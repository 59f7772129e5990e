#include "framelab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace framelab {

Frame frame_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("frame document must be a JSON object");
  for (auto& [key, _] : j.items())
    if (key != "alphabet" && key != "worlds" && key != "relations")
      throw InvalidArgument("unknown frame key '" + key + "'");
  if (!j.contains("alphabet") || !j["alphabet"].is_array())
    throw InvalidArgument("frame needs an 'alphabet' array");
  if (!j.contains("worlds") || !j["worlds"].is_number_integer())
    throw InvalidArgument("frame needs an integer 'worlds'");

  std::vector<std::string> names;
  for (const auto& n : j["alphabet"]) {
    if (!n.is_string()) throw InvalidArgument("alphabet entries must be strings");
    names.push_back(n.get<std::string>());
  }
  int n = j["worlds"].get<int>();
  if (n < 0) throw InvalidArgument("'worlds' must be non-negative");

  Frame f{Alphabet(names), n};
  if (j.contains("relations")) {
    if (!j["relations"].is_object())
      throw InvalidArgument("'relations' must be an object");
    for (auto& [name, pairs] : j["relations"].items()) {
      int d = f.alphabet().index_of(name);
      if (d < 0) throw InvalidArgument("relation for unknown modality '" + name + "'");
      if (!pairs.is_array()) throw InvalidArgument("relation '" + name + "' must be an array");
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer())
          throw InvalidArgument("relation '" + name + "' entries must be [source, target]");
        f.relation_mut(d).insert(p[0].get<int>(), p[1].get<int>());
      }
    }
  }
  return f;
}

json frame_to_json(const Frame& f) {
  json rels = json::object();
  for (int d = 0; d < f.modality_count(); ++d) {
    json list = json::array();
    for (auto [a, b] : f.relation(d).pairs()) list.push_back(json::array({a, b}));
    rels[f.alphabet().name(d)] = std::move(list);
  }
  return json{{"alphabet", f.alphabet().names}, {"worlds", f.world_count()},
              {"relations", std::move(rels)}};
}

Frame load_frame(const std::string& path) { return frame_from_json(read_json_file(path)); }

void save_frame(const Frame& f, const std::string& path) {
  write_json_file(frame_to_json(f), path);
}

std::vector<WorldSet> valuation_from_json(const json& j, int n) {
  if (!j.is_object()) throw InvalidArgument("valuation document must be a JSON object");
  int max_index = -1;
  for (auto& [key, _] : j.items()) {
    if (key.size() < 2 || key[0] != 'p' ||
        key.find_first_not_of("0123456789", 1) != std::string::npos)
      throw InvalidArgument("valuation key '" + key + "' is not of the form p<index>");
    max_index = std::max(max_index, std::stoi(key.substr(1)));
  }
  std::vector<WorldSet> sets(static_cast<std::size_t>(max_index + 1), WorldSet(n));
  for (auto& [key, worlds] : j.items()) {
    if (!worlds.is_array())
      throw InvalidArgument("valuation entry '" + key + "' must be a world array");
    int idx = std::stoi(key.substr(1));
    for (const auto& w : worlds) {
      if (!w.is_number_integer())
        throw InvalidArgument("valuation entry '" + key + "' must list integers");
      sets[static_cast<std::size_t>(idx)].insert(w.get<int>());
    }
  }
  return sets;
}

Partition partition_from_text(const std::string& text, int n) {
  std::vector<WorldSet> blocks;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (!trimmed.empty()) {
    std::stringstream ss(trimmed);
    std::string blk;
    while (std::getline(ss, blk, '|')) {
      WorldSet b(n);
      std::stringstream bs(blk);
      std::string w;
      bool any = false;
      while (std::getline(bs, w, ',')) {
        if (w.empty()) throw InvalidArgument("empty world entry in partition text");
        std::size_t used = 0;
        int world = std::stoi(w, &used);
        if (used != w.size()) throw InvalidArgument("bad world '" + w + "' in partition text");
        b.insert(world);
        any = true;
      }
      if (!any) throw InvalidArgument("empty block in partition text");
      blocks.push_back(std::move(b));
    }
  }
  return Partition::from_blocks(n, std::move(blocks));
}

std::string partition_to_text(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.block_count(); ++i) {
    if (i) out += "|";
    auto xs = p.block(i).elements();
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(xs[k]);
    }
  }
  return out;
}

json worldset_to_json(const WorldSet& s) {
  json out = json::array();
  s.for_each([&](int x) { out.push_back(x); });
  return out;
}

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) out.push_back(worldset_to_json(b));
  return out;
}

json trace_to_json(const QesTrace& t) {
  json stages = json::array();
  for (const auto& s : t.stages)
    stages.push_back(json{{"partition", partition_to_json(s.partition)},
                          {"defects", worldset_to_json(s.defects)}});

  json classes = json::array();
  for (const auto& dc : t.defective_classes) {
    json clusters = json::array();
    for (const auto& c : dc.maximal_clusters) clusters.push_back(worldset_to_json(c));
    classes.push_back(json{{"members", worldset_to_json(dc.members)},
                           {"stage", dc.stage},
                           {"defects", worldset_to_json(dc.defect_members)},
                           {"residue", worldset_to_json(dc.residue)},
                           {"maximal_clusters", std::move(clusters)}});
  }

  json clusters = json::array();
  for (std::size_t i = 0; i < t.cluster_family.size(); ++i)
    clusters.push_back(json{{"members", worldset_to_json(t.cluster_family[i])},
                            {"minimal", static_cast<bool>(t.cluster_minimal[i])}});

  json stage_of = json::array();
  json rank_of = json::array();
  t.defect_union.for_each([&](int w) {
    stage_of.push_back(json::array({w, t.stage_of[static_cast<std::size_t>(w)]}));
    rank_of.push_back(json::array({w, t.rank_of[static_cast<std::size_t>(w)]}));
  });

  json gens = json::array();
  for (const auto& g : t.generators) gens.push_back(worldset_to_json(g));

  auto claim = verify_main_claim(t);
  json verdicts{{"main_claim", !claim.has_value()},
                {"embedding", verify_embedding(t)},
                {"final_partition_tuned", verify_final_partition(t)}};
  if (claim) verdicts["main_claim_witness"] = *claim;

  return json{{"frame", frame_to_json(t.frame)},
              {"designated", t.frame.alphabet().name(t.designated)},
              {"worlds", t.frame.world_count()},
              {"generators", std::move(gens)},
              {"stage_count", t.stage_count()},
              {"stages", std::move(stages)},
              {"defect_union", worldset_to_json(t.defect_union)},
              {"stage_of", std::move(stage_of)},
              {"rank_of", std::move(rank_of)},
              {"even_rank", worldset_to_json(t.even_rank)},
              {"defective_classes", std::move(classes)},
              {"clusters", std::move(clusters)},
              {"picks_first", worldset_to_json(t.picks_first)},
              {"picks_second", worldset_to_json(t.picks_second)},
              {"nested_first", worldset_to_json(t.nested_first)},
              {"nested_second", worldset_to_json(t.nested_second)},
              {"separator", worldset_to_json(t.separator)},
              {"final_partition", partition_to_json(t.final_partition())},
              {"verdicts", std::move(verdicts)}};
}

json map_to_json(const std::vector<int>& map) { return json{{"map", map}}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidArgument("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << render_json(j);
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace framelab
