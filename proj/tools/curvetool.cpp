// Command-line surface: analysis of single curves and the verification
// suites over the enumerated catalog.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curves/census.hpp"
#include "curves/chords.hpp"
#include "curves/cmap.hpp"
#include "curves/moves.hpp"
#include "curves/reduce.hpp"
#include "curves/report.hpp"

namespace {

using nlohmann::json;
using namespace curves;

json embedding_json(const cmap::Embedding& e) {
  return {{"n", e.crossings()}, {"sigma", e.map().sigma()}, {"alpha", e.map().alpha()}};
}

json site_json(const moves::MoveSite& s) {
  return {{"kind", moves::kind_name(s.kind)}, {"darts", {s.a, s.b}}};
}

json event_json(const moves::MoveEvent& ev) {
  return {{"kind", moves::kind_name(ev.kind)},
          {"site", {ev.site.a, ev.site.b}},
          {"before_cert", ev.before_cert},
          {"after_cert", ev.after_cert}};
}

json analyze_embedding(const cmap::Embedding& e) {
  census::CatalogRecord r = census::build_record(e);
  json faces = json::object();
  for (const auto& [k, c] : r.face_p) faces["p" + std::to_string(k)] = c;
  json j;
  j["certificate"] = r.certificate;
  j["word"] = r.word_text;
  j["n"] = r.n;
  j["embedding"] = embedding_json(e);
  j["faces"] = faces;
  j["prime"] = r.prime;
  j["factor_count"] = r.factor_count;
  j["has_cross"] = r.has_cross;
  j["has_h"] = r.has_h;
  j["has_triple"] = r.has_triple;
  j["has_strong_bigon"] = r.has_strong_bigon;
  j["has_weak_bigon"] = r.has_weak_bigon;
  j["triangle_kappas"] = r.triangle_kappas;
  j["reductivity"] = r.reductivity ? json(*r.reductivity) : json(nullptr);
  j["reductivity_degenerate"] = r.reductivity_degenerate;
  j["pr_certificate"] = r.pr_certificate;
  j["strong_trivializable"] = r.strong_trivializable;
  return j;
}

cmap::Embedding pick_embedding(const word::GaussWord& w, int index) {
  auto all = cmap::realize_all(w);
  if (all.empty()) throw std::runtime_error("word is not realizable on the sphere");
  if (index < 0 || index >= static_cast<int>(all.size()))
    throw std::runtime_error("embedding index out of range (word has " +
                             std::to_string(all.size()) + " embeddings)");
  return all[index];
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical curve toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::string word_arg, word_arg2;
  int embedding_index = 0;
  int max_n = -1;
  int jobs = 1;
  unsigned seed = 0;
  std::string catalog_path, suite_id = "all", kinds_arg;

  auto* c_parse = app.add_subcommand("parse", "validate and normalize a word");
  c_parse->add_option("word", word_arg)->required();

  auto* c_analyze = app.add_subcommand("analyze", "full analysis of a word's embeddings");
  c_analyze->add_option("word", word_arg)->required();

  auto* c_moves = app.add_subcommand("moves", "enumerate applicable rewrite sites");
  c_moves->add_option("word", word_arg)->required();
  c_moves->add_option("--embedding", embedding_index);
  c_moves->add_option("--kinds", kinds_arg, "comma-separated move kinds");

  auto* c_reduce = app.add_subcommand("reduce", "monotone removal of 1- and 2-gons");
  c_reduce->add_option("word", word_arg)->required();
  c_reduce->add_option("--embedding", embedding_index);

  auto* c_homotopy = app.add_subcommand("homotopy", "bounded search between two curves");
  c_homotopy->add_option("word", word_arg)->required();
  c_homotopy->add_option("word2", word_arg2)->required();
  c_homotopy->add_option("--max-n", max_n)->required();
  c_homotopy->add_option("--kinds", kinds_arg, "default 1,s2");
  c_homotopy->add_option("--embedding", embedding_index);

  auto* c_reductivity = app.add_subcommand("reductivity", "minimal smoothings to a reducible curve");
  c_reductivity->add_option("word", word_arg)->required();
  c_reductivity->add_option("--embedding", embedding_index);
  c_reductivity->add_option("--max-depth", max_n, "default: crossing count");

  auto* c_decompose = app.add_subcommand("decompose", "connected-sum factorization");
  c_decompose->add_option("word", word_arg)->required();

  auto* c_enumerate = app.add_subcommand("enumerate", "enumerate curve classes, write a catalog");
  c_enumerate->add_option("--max-n", max_n)->required();
  c_enumerate->add_option("--catalog", catalog_path);
  c_enumerate->add_option("--jobs", jobs);

  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->add_option("--suite", suite_id, "suite id or 'all'");
  c_verify->add_option("--max-n", max_n, "override the suite's default range");
  c_verify->add_option("--catalog", catalog_path, "read (or create) a catalog file");
  c_verify->add_option("--jobs", jobs);
  c_verify->add_option("--seed", seed, "reserved for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_parse) {
      word::GaussWord w = word::parse(word_arg);
      json j;
      j["word"] = w.to_text();
      j["n"] = w.crossings();
      j["certificate"] = word::to_hex(word::canonicalize(w).certificate);
      j["parity_ok"] = word::parity_filter(w);
      emit(j, format);
      return 0;
    }
    if (*c_analyze) {
      word::GaussWord w = word::parse(word_arg);
      auto all = cmap::realize_all(w);
      json j;
      j["word"] = w.to_text();
      j["n"] = w.crossings();
      j["parity_ok"] = word::parity_filter(w);
      j["realizable"] = !all.empty();
      j["embedding_count"] = all.size();
      json arr = json::array();
      for (const auto& e : all) arr.push_back(analyze_embedding(e));
      j["embeddings"] = arr;
      if (all.size() == 1) j.update(arr[0]);
      emit(j, format);
      return 0;
    }
    if (*c_moves) {
      auto e = pick_embedding(word::parse(word_arg), embedding_index);
      std::set<moves::MoveKind> kinds;
      if (kinds_arg.empty()) {
        for (const auto& id :
             {"R1a", "R1b", "S2a", "S2b", "W2a", "W2b", "R3", "AInv"})
          kinds.insert(*moves::kind_from_name(id));
      } else {
        std::stringstream ss(kinds_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          auto k = moves::kind_from_name(tok);
          if (!k) throw CLI::ValidationError("--kinds", "unknown move kind " + tok);
          kinds.insert(*k);
        }
      }
      json sites = json::array();
      for (const auto& s : moves::enumerate_moves(e, kinds)) sites.push_back(site_json(s));
      json j;
      j["word"] = e.word().to_text();
      j["certificate"] = e.certificate_hex();
      j["sites"] = sites;
      emit(j, format);
      return 0;
    }
    if (*c_reduce) {
      auto e = pick_embedding(word::parse(word_arg), embedding_index);
      auto [pr, trace] = reduce::reduce_to_pr(e);
      json events = json::array();
      for (const auto& ev : trace.events) events.push_back(event_json(ev));
      json j;
      j["pr"] = pr.word().to_text();
      j["pr_certificate"] = pr.certificate_hex();
      j["trace"] = events;
      emit(j, format);
      return 0;
    }
    if (*c_homotopy) {
      auto a = pick_embedding(word::parse(word_arg), embedding_index);
      auto b = pick_embedding(word::parse(word_arg2), 0);
      std::set<moves::MoveKind> kinds = {moves::MoveKind::R1a, moves::MoveKind::R1b,
                                         moves::MoveKind::S2a, moves::MoveKind::S2b};
      if (!kinds_arg.empty()) {
        kinds.clear();
        std::stringstream ss(kinds_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (tok == "1") {
            kinds.insert(moves::MoveKind::R1a);
            kinds.insert(moves::MoveKind::R1b);
          } else if (tok == "s2") {
            kinds.insert(moves::MoveKind::S2a);
            kinds.insert(moves::MoveKind::S2b);
          } else if (tok == "w2") {
            kinds.insert(moves::MoveKind::W2a);
            kinds.insert(moves::MoveKind::W2b);
          } else {
            auto k = moves::kind_from_name(tok);
            if (!k) throw CLI::ValidationError("--kinds", "unknown move kind " + tok);
            kinds.insert(*k);
          }
        }
      }
      auto res = reduce::homotopy_reachable(a, b, kinds, max_n);
      json j;
      j["reachable"] = res.reach == reduce::Reach::Yes ? "yes" : "no_within_bound";
      j["bound"] = res.bound;
      json events = json::array();
      for (const auto& ev : res.trace) events.push_back(event_json(ev));
      j["trace"] = events;
      emit(j, format);
      return 0;
    }
    if (*c_reductivity) {
      auto e = pick_embedding(word::parse(word_arg), embedding_index);
      int depth = max_n >= 0 ? max_n : std::max(1, e.crossings());
      auto r = reduce::reductivity(e, depth);
      json j;
      j["max_depth"] = depth;
      if (r) {
        j["value"] = r->value;
        j["witness"] = r->witness;
        j["degenerate"] = r->degenerate;
      } else {
        j["value"] = nullptr;
      }
      emit(j, format);
      return 0;
    }
    if (*c_decompose) {
      word::GaussWord w = word::parse(word_arg);
      auto factors = chords::prime_factors(chords::chord_diagram(w));
      json arr = json::array();
      for (const auto& f : factors) arr.push_back(f.to_word().to_text());
      json j;
      j["word"] = w.to_text();
      j["factors"] = arr;
      j["prime"] = chords::is_prime(chords::chord_diagram(w));
      emit(j, format);
      return 0;
    }
    if (*c_enumerate) {
      auto records = census::enumerate_catalog(max_n, jobs);
      if (!catalog_path.empty()) census::catalog_write(records, catalog_path);
      std::map<int, int> counts;
      for (const auto& r : records) ++counts[r.n];
      json j;
      j["max_n"] = max_n;
      j["classes"] = json::object();
      for (const auto& [n, c] : counts) j["classes"][std::to_string(n)] = c;
      j["total"] = records.size();
      if (!catalog_path.empty()) j["catalog"] = catalog_path;
      emit(j, format);
      return 0;
    }
    if (*c_verify) {
      std::vector<std::string> ids =
          suite_id == "all" ? report::all_suite_ids() : std::vector<std::string>{suite_id};
      int needed = 0;
      for (const auto& id : ids)
        needed = std::max(needed, max_n >= 0 ? max_n : report::default_n_max(id));
      std::vector<census::CatalogRecord> catalog;
      bool load = false;
      if (!catalog_path.empty()) {
        std::ifstream probe(catalog_path);
        load = probe.good();
      }
      if (load) {
        catalog = census::catalog_read(catalog_path);
      } else {
        catalog = census::enumerate_catalog(needed, jobs);
        if (!catalog_path.empty()) census::catalog_write(catalog, catalog_path);
      }
      (void)seed;
      bool all_pass = true;
      json arr = json::array();
      json timings = json::object();  // kept out of the reproducible payload
      for (const auto& id : ids) {
        auto rep = report::run_suite(id, max_n >= 0 ? max_n : report::default_n_max(id), catalog);
        all_pass = all_pass && rep.pass();
        json jr;
        jr["suite"] = rep.id;
        jr["n_max"] = rep.n_max;
        jr["instances"] = rep.instances;
        jr["pass"] = rep.pass();
        json cex = json::array();
        for (const auto& c : rep.counterexamples)
          cex.push_back({{"certificate", c.certificate}, {"reason", c.reason}});
        jr["counterexamples"] = cex;
        jr["notes"] = rep.notes;
        arr.push_back(jr);
        timings[rep.id] = rep.wall_seconds;
        if (format == "text") {
          std::cout << rep.id << " " << (rep.pass() ? "PASS" : "FAIL") << " n<=" << rep.n_max
                    << " instances=" << rep.instances
                    << " counterexamples=" << rep.counterexamples.size() << '\n';
        }
      }
      if (format != "text")
        emit(json{{"suites", arr}, {"pass", all_pass}, {"wall_seconds", timings}}, format);
      return all_pass ? 0 : 1;
    }
  } catch (const word::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
