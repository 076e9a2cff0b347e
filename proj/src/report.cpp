#include "curves/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <tuple>

#include "curves/chords.hpp"
#include "curves/reduce.hpp"

namespace curves::report {

namespace {

using census::CatalogRecord;
using cmap::Embedding;

int census_p(const CatalogRecord& r, int k) {
  auto it = r.face_p.find(k);
  return it == r.face_p.end() ? 0 : it->second;
}

bool is_reduced(const CatalogRecord& r) {
  return chords::reducible_chords(chords::chord_diagram(r.embedding.word())).empty();
}

// --- independent oracles for T9 --------------------------------------------
// Deliberately avoid InterlacementGraph and the cached embedding word.

bool brute_interleaved(const std::vector<int>& seq, int a, int b) {
  // walk the cycle; count b endpoints strictly between a's two occurrences
  int inside = 0;
  bool open = false;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    if (seq[p] == a) {
      open = !open;
      continue;
    }
    if (open && seq[p] == b) ++inside;
  }
  return inside == 1;
}

word::GaussWord reread_word(const cmap::CombMap& m) {
  if (m.crossings() == 0) return word::GaussWord();
  std::vector<int> letters;
  int start = 1;
  int cur = start;
  do {
    letters.push_back(m.vertex_of(cur) + 1);
    cur = m.sigma(m.sigma(m.alpha(cur)));
  } while (cur != start && static_cast<int>(letters.size()) <= m.dart_count());
  return word::GaussWord::from_letters(letters);
}

int orbit_count_alpha_sigma(const cmap::CombMap& m) {
  // conjugate face permutation: same cycle count as sigma . alpha
  if (m.crossings() == 0) return 2;
  std::vector<char> seen(m.dart_count(), 0);
  int orbits = 0;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (seen[d]) continue;
    ++orbits;
    int cur = d;
    do {
      seen[cur] = 1;
      cur = m.alpha(m.sigma(cur));
    } while (cur != d);
  }
  return orbits;
}

std::vector<int> smoothing_word_rule(const std::vector<int>& seq, int label) {
  int i = -1, j = -1;
  for (int p = 0; p < static_cast<int>(seq.size()); ++p)
    if (seq[p] == label) (i < 0 ? i : j) = p;
  std::vector<int> out;
  for (int p = j - 1; p > i; --p) out.push_back(seq[p]);
  for (int p = j + 1; p < static_cast<int>(seq.size()); ++p) out.push_back(seq[p]);
  for (int p = 0; p < i; ++p) out.push_back(seq[p]);
  return out;
}

// --- suites -----------------------------------------------------------------

using Sink = std::function<void(const std::string&, const std::string&)>;

void suite_t1(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  reduce::StrongBuildSearch search;
  for (const auto& r : recs) {
    auto cd = chords::chord_diagram(r.embedding.word());
    if (chords::has_pattern(cd, chords::PatternKind::Triple)) continue;
    auto [pr, pr_trace] = reduce::reduce_to_pr(r.embedding);
    bool pr_ok = pr.crossings() == 0 || chords::is_prime(chords::chord_diagram(pr.word()));
    if (!pr_ok) continue;
    ++rep.instances;
    auto trace = search.check(r.embedding);
    if (!trace) {
      cex(r.certificate, "no monotone strong descent to the circle");
      continue;
    }
    try {
      Embedding rebuilt = reduce::replay_reversed(*trace);
      if (rebuilt.certificate_hex() != r.certificate)
        cex(r.certificate, "replayed build ends elsewhere");
    } catch (const std::logic_error& e) {
      cex(r.certificate, e.what());
    }
  }
}

void suite_t1b(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  for (const auto& r : recs) {
    if (!r.prime || census_p(r, 1) || census_p(r, 2)) continue;
    if (r.has_triple) continue;
    ++rep.instances;
    if (r.n > 0) cex(r.certificate, "nontrivial triple-free prime curve without 1-/2-gons");
  }
}

void suite_t2(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  int smallest = 0;
  for (const auto& r : recs) {
    if (!r.prime || r.n == 0 || census_p(r, 1) || census_p(r, 2)) continue;
    ++rep.instances;
    if (!smallest) smallest = r.n;
    if (!r.has_triple) cex(r.certificate, "no triple chord");
  }
  if (smallest) rep.notes.push_back("smallest qualifying n = " + std::to_string(smallest));
}

void suite_t3(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  for (const auto& r : recs) {
    if (r.n == 0 || census_p(r, 1) || census_p(r, 2)) continue;
    ++rep.instances;
    int sum = census_p(r, 3);
    for (const auto& [k, c] : r.face_p)
      if (k >= 4) sum += (4 - k) * c;
    if (sum != 8) cex(r.certificate, "p3 + sum(4-k)p_k = " + std::to_string(sum));
    if (census_p(r, 3) < 8) cex(r.certificate, "p3 = " + std::to_string(census_p(r, 3)));
  }
}

void suite_t5(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  for (const auto& r : recs) {
    if (!is_reduced(r)) continue;
    ++rep.instances;
    auto cd = chords::chord_diagram(r.embedding.word());
    bool cut = !chords::two_point_cuts(cd).empty();
    bool r1 = r.reductivity.has_value() && *r.reductivity == 1;
    if (cut != r1)
      cex(r.certificate, cut ? "two-point cut but reductivity != 1"
                             : "reductivity 1 but no two-point cut");
  }
}

void suite_t5b(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  for (const auto& r : recs) {
    if (!(r.reductivity.has_value() && *r.reductivity == 1)) continue;
    ++rep.instances;
    if (!r.has_triple) cex(r.certificate, "reductivity 1 without a triple chord");
  }
}

void suite_t6(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  for (const auto& r : recs) {
    for (const auto& s : moves::enumerate_moves(r.embedding, {moves::MoveKind::W2a})) {
      ++rep.instances;
      auto result = moves::apply(r.embedding, s);
      auto cd = chords::chord_diagram(result.after.word());
      if (!chords::has_pattern(cd, chords::PatternKind::Triple))
        cex(r.certificate, "weak insertion at (" + std::to_string(s.a) + "," +
                               std::to_string(s.b) + ") has no triple chord");
    }
  }
}

void suite_t7(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  for (const auto& r : recs) {
    if (!r.prime || census_p(r, 1)) continue;
    ++rep.instances;
    if (!is_reduced(r)) cex(r.certificate, "prime 1-gon-free curve with a nugatory crossing");
  }
}

void suite_t8(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  for (const auto& r : recs) {
    if (r.n == 0 || !is_reduced(r)) continue;
    ++rep.instances;
    if (census_p(r, 2) == 0 && census_p(r, 3) == 0)
      cex(r.certificate, "reduced curve with neither 2-gon nor 3-gon");
  }
}

void suite_t9(const std::vector<CatalogRecord>& recs, int n_max, SuiteReport& rep,
              const Sink& cex) {
  // pattern detectors vs brute force over every double-occurrence word; on
  // canonical representatives, parity failure must imply an empty
  // realization (realizability is symmetry-invariant, so this exhausts the
  // claim over all words in range)
  for (int n = 0; n <= n_max; ++n) {
    census::for_each_dow(n, [&](const word::GaussWord& w) {
      ++rep.instances;
      auto cd = chords::chord_diagram(w);
      const auto& seq = w.letters();
      std::size_t cross = 0, triple = 0, h = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (brute_interleaved(seq, a, b)) ++cross;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c) {
            int k = brute_interleaved(seq, a, b) + brute_interleaved(seq, a, c) +
                    brute_interleaved(seq, b, c);
            if (k == 3) ++triple;
            if (k == 2) ++h;
          }
      if (chords::find_patterns(cd, chords::PatternKind::Cross).size() != cross ||
          chords::find_patterns(cd, chords::PatternKind::Triple).size() != triple ||
          chords::find_patterns(cd, chords::PatternKind::H).size() != h)
        cex(word::to_hex(word::canonicalize(w).certificate), "pattern detector disagrees");
      if (!word::parity_filter(w) && census::symmetry_canonical(w) &&
          !cmap::realize_all(w).empty())
        cex(word::to_hex(word::canonicalize(w).certificate),
            "parity-violating word realized on the sphere");
    });
  }
  // realized maps re-read their words; faces agree with the conjugate walk
  for (const auto& r : recs) {
    ++rep.instances;
    auto reread = word::canonicalize(reread_word(r.embedding.map())).certificate;
    auto stored = word::canonicalize(r.embedding.word()).certificate;
    if (reread != stored) cex(r.certificate, "map does not re-read its word");
    if (orbit_count_alpha_sigma(r.embedding.map()) != r.embedding.crossings() + 2)
      cex(r.certificate, "face count disagrees with conjugate walk");
    if (!word::parity_filter(r.embedding.word()))
      cex(r.certificate, "realized word fails the parity condition");
  }
  // smoothing surgery vs the word rule
  for (const auto& r : recs) {
    if (r.n > 7) continue;
    for (int c = 0; c < r.n; ++c) {
      ++rep.instances;
      auto result = moves::a_inverse(r.embedding, c);
      auto expected = word::canonicalize(word::GaussWord::from_letters(
                          smoothing_word_rule(r.embedding.word().letters(), c + 1)))
                          .certificate;
      if (word::canonicalize(result.after.word()).certificate != expected)
        cex(r.certificate, "smoothing at " + std::to_string(c) + " disagrees with word rule");
    }
  }
}

void suite_t10(const std::vector<CatalogRecord>& recs, SuiteReport& rep, const Sink& cex) {
  reduce::PrUniqueness unique;
  for (const auto& r : recs) {
    ++rep.instances;
    if (!unique.check(r.embedding)) cex(r.certificate, "reduction endpoint is not unique");
  }
}

void suite_t11(int n_max, SuiteReport& rep, const Sink& cex) {
  auto cv = census::cross_validate(n_max);
  for (int n = 0; n <= n_max; ++n) {
    ++rep.instances;
    std::uint64_t wc = cv.word_counts.count(n) ? cv.word_counts[n] : 0;
    std::uint64_t mc = cv.move_counts.count(n) ? cv.move_counts[n] : 0;
    rep.notes.push_back("n=" + std::to_string(n) + " word=" + std::to_string(wc) +
                        " move=" + std::to_string(mc));
    if (wc != mc)
      cex("n=" + std::to_string(n),
          "class counts differ: word " + std::to_string(wc) + ", move " + std::to_string(mc));
  }
}

}  // namespace

std::vector<std::string> all_suite_ids() {
  return {"T1", "T1b", "T2", "T3", "T5", "T5b", "T6", "T7", "T8", "T9", "T10", "T11"};
}

int default_n_max(const std::string& id) {
  if (id == "T1" || id == "T5" || id == "T5b" || id == "T10") return 7;
  if (id == "T6" || id == "T11") return 6;
  return 8;
}

SuiteReport run_suite(const std::string& id, int n_max,
                      const std::vector<census::CatalogRecord>& catalog) {
  SuiteReport rep;
  rep.id = id;
  rep.n_max = n_max;
  auto ids = all_suite_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw std::invalid_argument("unknown suite id: " + id);

  std::vector<CatalogRecord> recs;
  if (id != "T11") {
    int covered = 0;
    for (const auto& r : catalog) covered = std::max(covered, r.n);
    if (covered < n_max)
      throw CatalogIncomplete("catalog covers n <= " + std::to_string(covered) +
                              ", suite needs " + std::to_string(n_max));
    for (const auto& r : catalog)
      if (r.n <= n_max) recs.push_back(r);
  }

  auto start = std::chrono::steady_clock::now();
  Sink cex = [&](const std::string& cert, const std::string& reason) {
    rep.counterexamples.push_back({cert, reason});
  };
  if (id == "T1") suite_t1(recs, rep, cex);
  else if (id == "T1b") suite_t1b(recs, rep, cex);
  else if (id == "T2") suite_t2(recs, rep, cex);
  else if (id == "T3") suite_t3(recs, rep, cex);
  else if (id == "T5") suite_t5(recs, rep, cex);
  else if (id == "T5b") suite_t5b(recs, rep, cex);
  else if (id == "T6") suite_t6(recs, rep, cex);
  else if (id == "T7") suite_t7(recs, rep, cex);
  else if (id == "T8") suite_t8(recs, rep, cex);
  else if (id == "T9") suite_t9(recs, n_max, rep, cex);
  else if (id == "T10") suite_t10(recs, rep, cex);
  else if (id == "T11") suite_t11(n_max, rep, cex);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.certificate, a.reason) < std::tie(b.certificate, b.reason);
            });
  return rep;
}

}  // namespace curves::report
