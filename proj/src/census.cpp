#include "curves/census.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "curves/chords.hpp"
#include "curves/reduce.hpp"

namespace curves::census {

namespace {

using cmap::Embedding;
using nlohmann::json;

void dows_rec(std::vector<int>& seq, int n, std::vector<int>& open, int used,
              const std::function<void(const word::GaussWord&)>& fn) {
  if (static_cast<int>(seq.size()) == 2 * n) {
    if (open.empty()) fn(word::GaussWord::from_letters(seq));
    return;
  }
  // close an open label; positions of a label ascend, so closing any open
  // label keeps the word normalized
  for (std::size_t k = 0; k < open.size(); ++k) {
    int label = open[k];
    open.erase(open.begin() + k);
    seq.push_back(label);
    dows_rec(seq, n, open, used, fn);
    seq.pop_back();
    open.insert(open.begin() + k, label);
  }
  if (used < n) {
    int label = used + 1;
    open.push_back(label);
    seq.push_back(label);
    dows_rec(seq, n, open, used + 1, fn);
    seq.pop_back();
    open.pop_back();
  }
}

}  // namespace

void for_each_dow(int n, const std::function<void(const word::GaussWord&)>& fn) {
  if (n == 0) {
    fn(word::GaussWord());
    return;
  }
  std::vector<int> seq, open;
  seq.reserve(2 * n);
  dows_rec(seq, n, open, 0, fn);
}

bool symmetry_canonical(const word::GaussWord& w) {
  return word::canonicalize(w).word == w;
}

namespace {

// Everything except the strong-build flag, which enumerate_catalog fills
// afterwards through one shared memoized search.
CatalogRecord build_record_base(const Embedding& e) {
  CatalogRecord r;
  r.certificate = e.certificate_hex();
  r.word_text = e.word().to_text();
  r.n = e.crossings();
  r.embedding = e;
  auto fc = cmap::face_census(e.map());
  r.face_p = fc.p;
  auto cd = chords::chord_diagram(e.word());
  auto factors = chords::prime_factors(cd);
  r.factor_count = r.n == 0 ? 0 : static_cast<int>(factors.size());
  r.prime = r.n >= 1 && r.factor_count == 1;
  r.has_cross = chords::has_pattern(cd, chords::PatternKind::Cross);
  r.has_h = chords::has_pattern(cd, chords::PatternKind::H);
  r.has_triple = chords::has_pattern(cd, chords::PatternKind::Triple);
  for (const auto& face : e.map().faces()) {
    if (face.size() != 2) continue;
    auto type = moves::bigon_type(e, face[0]);
    if (!type) continue;
    (*type == moves::BigonType::Strong ? r.has_strong_bigon : r.has_weak_bigon) = true;
  }
  for (const auto& tc : chords::triangle_classes(e)) r.triangle_kappas.push_back(tc.kappa);
  std::sort(r.triangle_kappas.begin(), r.triangle_kappas.end());
  r.reductivity_depth = std::max(1, r.n);
  auto red = reduce::reductivity(e, r.reductivity_depth);
  if (red) {
    r.reductivity = red->value;
    r.reductivity_degenerate = red->degenerate;
  }
  auto [pr, trace] = reduce::reduce_to_pr(e);
  r.pr_certificate = pr.certificate_hex();
  return r;
}

}  // namespace

CatalogRecord build_record(const Embedding& e) {
  CatalogRecord r = build_record_base(e);
  r.strong_trivializable = reduce::strong_build_check(e).has_value();
  return r;
}

std::vector<CatalogRecord> enumerate_catalog(int n_max, int jobs) {
  std::vector<CatalogRecord> out;
  std::set<std::string> seen;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<word::GaussWord> candidates;
    for_each_dow(n, [&](const word::GaussWord& w) {
      if (!word::parity_filter(w)) return;
      if (!symmetry_canonical(w)) return;
      candidates.push_back(w);
    });
    std::vector<CatalogRecord> level;
    std::mutex mu;
    auto work = [&](int worker) {
      std::vector<CatalogRecord> local;
      for (std::size_t i = worker; i < candidates.size(); i += static_cast<std::size_t>(jobs)) {
        for (const auto& e : cmap::realize_all(candidates[i])) {
          local.push_back(build_record_base(e));
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      for (auto& r : local) level.push_back(std::move(r));
    };
    if (jobs <= 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
      for (auto& t : threads) t.join();
    }
    std::sort(level.begin(), level.end(),
              [](const CatalogRecord& a, const CatalogRecord& b) {
                return a.certificate < b.certificate;
              });
    for (auto& r : level) {
      if (!seen.insert(r.certificate).second)
        throw std::logic_error("duplicate certificate across words: " + r.certificate);
      out.push_back(std::move(r));
    }
  }
  reduce::StrongBuildSearch search;
  for (auto& r : out) r.strong_trivializable = search.reachable(r.embedding);
  return out;
}

CrossValidateReport cross_validate(int n_max) {
  CrossValidateReport rep;
  for (const auto& r : enumerate_catalog(n_max)) ++rep.word_counts[r.n];

  const std::set<moves::MoveKind> increasing = {moves::MoveKind::R1a, moves::MoveKind::S2a,
                                                moves::MoveKind::W2a};
  std::map<std::string, int> seen;  // certificate -> n
  std::vector<Embedding> frontier{Embedding::circle()};
  seen.emplace(Embedding::circle().certificate(), 0);
  while (!frontier.empty()) {
    std::vector<Embedding> next;
    for (const auto& cur : frontier) {
      for (const auto& s : moves::enumerate_moves(cur, increasing)) {
        if (cur.crossings() + moves::kind_delta(s.kind) > n_max) continue;
        auto result = moves::apply(cur, s);
        if (seen.emplace(result.after.certificate(), result.after.crossings()).second)
          next.push_back(std::move(result.after));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [cert, n] : seen) ++rep.move_counts[n];

  rep.word_superset = true;
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t wc = rep.word_counts.count(n) ? rep.word_counts[n] : 0;
    std::uint64_t mc = rep.move_counts.count(n) ? rep.move_counts[n] : 0;
    if (mc > wc) rep.word_superset = false;
  }
  rep.equal = rep.word_counts == rep.move_counts;
  if (!rep.word_superset)
    throw std::logic_error("move-based generator found classes the word census lacks");
  return rep;
}

namespace {

json record_to_json(const CatalogRecord& r) {
  json j;
  j["certificate"] = r.certificate;
  j["word"] = r.word_text;
  j["n"] = r.n;
  j["embedding"] = {{"n", r.embedding.crossings()},
                    {"sigma", r.embedding.map().sigma()},
                    {"alpha", r.embedding.map().alpha()}};
  json p = json::object();
  for (const auto& [k, c] : r.face_p) p[std::to_string(k)] = c;
  j["faces"] = p;
  j["prime"] = r.prime;
  j["factor_count"] = r.factor_count;
  j["has_cross"] = r.has_cross;
  j["has_h"] = r.has_h;
  j["has_triple"] = r.has_triple;
  j["has_strong_bigon"] = r.has_strong_bigon;
  j["has_weak_bigon"] = r.has_weak_bigon;
  j["triangle_kappas"] = r.triangle_kappas;
  if (r.reductivity)
    j["reductivity"] = *r.reductivity;
  else
    j["reductivity"] = nullptr;
  j["reductivity_depth"] = r.reductivity_depth;
  j["reductivity_degenerate"] = r.reductivity_degenerate;
  j["pr_certificate"] = r.pr_certificate;
  j["strong_trivializable"] = r.strong_trivializable;
  return j;
}

CatalogRecord record_from_json(const json& j) {
  CatalogRecord r;
  r.certificate = j.at("certificate").get<std::string>();
  r.word_text = j.at("word").get<std::string>();
  r.n = j.at("n").get<int>();
  {
    word::GaussWord w = word::parse(r.word_text);
    // rebuild the embedding from the stored permutations
    std::vector<int> sigma = j.at("embedding").at("sigma").get<std::vector<int>>();
    std::vector<int> alpha = j.at("embedding").at("alpha").get<std::vector<int>>();
    std::vector<int> vertex(sigma.size());
    const auto& seq = w.letters();
    for (std::size_t d = 0; d < sigma.size(); ++d) vertex[d] = seq[d / 2] - 1;
    std::vector<char> alive(sigma.size(), 1);
    auto [emb, vmap] = cmap::Embedding::from_raw(sigma, alpha, vertex, alive);
    r.embedding = std::move(emb);
  }
  if (r.embedding.certificate_hex() != r.certificate)
    throw IoError("stored certificate does not match the stored embedding");
  for (const auto& [k, c] : j.at("faces").items()) r.face_p[std::stoi(k)] = c.get<int>();
  r.prime = j.at("prime").get<bool>();
  r.factor_count = j.at("factor_count").get<int>();
  r.has_cross = j.at("has_cross").get<bool>();
  r.has_h = j.at("has_h").get<bool>();
  r.has_triple = j.at("has_triple").get<bool>();
  r.has_strong_bigon = j.at("has_strong_bigon").get<bool>();
  r.has_weak_bigon = j.at("has_weak_bigon").get<bool>();
  r.triangle_kappas = j.at("triangle_kappas").get<std::vector<int>>();
  if (!j.at("reductivity").is_null()) r.reductivity = j.at("reductivity").get<int>();
  r.reductivity_depth = j.at("reductivity_depth").get<int>();
  r.reductivity_degenerate = j.at("reductivity_degenerate").get<bool>();
  r.pr_certificate = j.at("pr_certificate").get<std::string>();
  r.strong_trivializable = j.at("strong_trivializable").get<bool>();
  return r;
}

}  // namespace

void catalog_write(const std::vector<CatalogRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << json{{"schema_version", kSchemaVersion}}.dump() << '\n';
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
  if (!out) throw IoError("write failed: " + path);
}

std::vector<CatalogRecord> catalog_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty catalog: " + path);
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.contains("schema_version"))
    throw IoError("missing schema_version header");
  if (header["schema_version"] != kSchemaVersion)
    throw SchemaVersionMismatch("unsupported schema_version " + header["schema_version"].dump());
  std::vector<CatalogRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw IoError("bad record line");
    out.push_back(record_from_json(j));
  }
  return out;
}

}  // namespace curves::census
