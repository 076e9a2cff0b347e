#include "curves/chords.hpp"

#include <algorithm>
#include <stdexcept>

namespace curves::chords {

word::GaussWord ChordDiagram::to_word() const {
  std::vector<int> letters;
  letters.reserve(chord_at.size());
  for (int c : chord_at) letters.push_back(c + 1);
  return word::GaussWord::from_letters(letters);
}

ChordDiagram chord_diagram(const word::GaussWord& w) {
  ChordDiagram cd;
  cd.n = w.crossings();
  cd.ends.assign(cd.n, {-1, -1});
  cd.chord_at.resize(w.length());
  const auto& seq = w.letters();
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    int c = seq[i] - 1;
    cd.chord_at[i] = c;
    (cd.ends[c][0] < 0 ? cd.ends[c][0] : cd.ends[c][1]) = i;
  }
  return cd;
}

bool interleaved(const ChordDiagram& cd, int a, int b) {
  if (a == b) return false;
  const auto& pa = cd.ends[a];
  const auto& pb = cd.ends[b];
  bool in0 = pa[0] < pb[0] && pb[0] < pa[1];
  bool in1 = pa[0] < pb[1] && pb[1] < pa[1];
  return in0 != in1;
}

InterlacementGraph interlacement(const ChordDiagram& cd) {
  InterlacementGraph g;
  g.n = cd.n;
  g.adj.assign(cd.n, std::vector<char>(cd.n, 0));
  g.degree.assign(cd.n, 0);
  for (int a = 0; a < cd.n; ++a) {
    for (int b = a + 1; b < cd.n; ++b) {
      if (interleaved(cd, a, b)) {
        g.adj[a][b] = g.adj[b][a] = 1;
        ++g.degree[a];
        ++g.degree[b];
      }
    }
  }
  return g;
}

namespace {

int triple_edges(const InterlacementGraph& g, int a, int b, int c) {
  return g.edge(a, b) + g.edge(a, c) + g.edge(b, c);
}

}  // namespace

std::vector<PatternHit> find_patterns(const ChordDiagram& cd, PatternKind kind) {
  InterlacementGraph g = interlacement(cd);
  std::vector<PatternHit> hits;
  if (kind == PatternKind::Cross) {
    for (int a = 0; a < cd.n; ++a)
      for (int b = a + 1; b < cd.n; ++b)
        if (g.edge(a, b)) hits.push_back({kind, {a + 1, b + 1}});
    return hits;
  }
  const int want = kind == PatternKind::Triple ? 3 : 2;
  for (int a = 0; a < cd.n; ++a)
    for (int b = a + 1; b < cd.n; ++b)
      for (int c = b + 1; c < cd.n; ++c)
        if (triple_edges(g, a, b, c) == want) hits.push_back({kind, {a + 1, b + 1, c + 1}});
  return hits;
}

bool has_pattern(const ChordDiagram& cd, PatternKind kind) {
  return !find_patterns(cd, kind).empty();
}

std::vector<int> reducible_chords(const ChordDiagram& cd) {
  InterlacementGraph g = interlacement(cd);
  std::vector<int> out;
  for (int c = 0; c < cd.n; ++c)
    if (g.degree[c] == 0) out.push_back(c + 1);
  return out;
}

namespace {

// Smallest pairing-closed proper cyclic interval, as (start, length) over
// positions; scans lengths ascending so extracted factors are prime.
std::optional<std::array<int, 2>> minimal_cut(const ChordDiagram& cd) {
  const int len = static_cast<int>(cd.chord_at.size());
  for (int l = 2; l <= len - 2; l += 2) {
    for (int s = 0; s < len; ++s) {
      bool closed = true;
      for (int k = 0; k < l && closed; ++k) {
        int p = (s + k) % len;
        int c = cd.chord_at[p];
        int other = cd.ends[c][0] == p ? cd.ends[c][1] : cd.ends[c][0];
        int rel = (other - s + len) % len;
        closed = rel < l;
      }
      if (closed) return std::array<int, 2>{s, l};
    }
  }
  return std::nullopt;
}

ChordDiagram from_positions(const ChordDiagram& cd, const std::vector<int>& positions) {
  std::vector<int> letters;
  letters.reserve(positions.size());
  for (int p : positions) letters.push_back(cd.chord_at[p] + 1);
  return chord_diagram(word::GaussWord::from_letters(letters));
}

}  // namespace

Factorization factorize(const ChordDiagram& cd) {
  Factorization out;
  ChordDiagram rest = cd;
  std::vector<int> origin(cd.chord_at.size());  // rest position -> input position
  for (std::size_t p = 0; p < origin.size(); ++p) origin[p] = static_cast<int>(p);
  while (true) {
    auto cut = minimal_cut(rest);
    if (!cut) break;
    const int len = static_cast<int>(rest.chord_at.size());
    std::vector<int> inside, outside;
    for (int k = 0; k < len; ++k) {
      int p = ((*cut)[0] + k) % len;
      (k < (*cut)[1] ? inside : outside).push_back(p);
    }
    out.factors.push_back(from_positions(rest, inside));
    std::vector<int> factor_origin, rest_origin;
    for (int p : inside) factor_origin.push_back(origin[p]);
    for (int p : outside) rest_origin.push_back(origin[p]);
    out.original_positions.push_back(std::move(factor_origin));
    rest = from_positions(rest, outside);
    origin = std::move(rest_origin);
  }
  out.factors.push_back(rest);
  out.original_positions.push_back(std::move(origin));
  return out;
}

std::vector<ChordDiagram> prime_factors(const ChordDiagram& cd) {
  return factorize(cd).factors;
}

bool is_prime(const ChordDiagram& cd) {
  return cd.n >= 1 && !minimal_cut(cd).has_value();
}

std::vector<TriangleClass> triangle_classes(const cmap::Embedding& e) {
  std::vector<TriangleClass> out;
  ChordDiagram cd = chord_diagram(e.word());
  for (const auto& face : e.map().faces()) {
    if (face.size() != 3) continue;
    TriangleClass tc;
    tc.face_dart = face.front();
    std::array<int, 3> chords;
    for (int k = 0; k < 3; ++k) {
      chords[k] = e.map().vertex_of(face[k]);
      tc.labels[k] = chords[k] + 1;
    }
    tc.kappa = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (interleaved(cd, chords[a], chords[b])) ++tc.kappa;
    // induced sub-diagram on the triangle's chords
    std::vector<int> letters;
    for (int c : cd.chord_at) {
      if (c == chords[0] || c == chords[1] || c == chords[2]) letters.push_back(c + 1);
    }
    tc.subdiagram_cert = word::to_hex(
        word::canonicalize(word::GaussWord::from_letters(letters)).certificate);
    out.push_back(std::move(tc));
  }
  return out;
}

namespace {

std::vector<std::array<int, 2>> interval_pairs(const ChordDiagram& cd, bool want_interleaved) {
  std::vector<std::array<int, 2>> out;
  for (int a = 0; a < cd.n; ++a) {
    for (int b = a + 1; b < cd.n; ++b) {
      if (interleaved(cd, a, b) != want_interleaved) continue;
      std::array<int, 4> cuts = {cd.ends[a][0], cd.ends[a][1], cd.ends[b][0], cd.ends[b][1]};
      std::sort(cuts.begin(), cuts.end());
      auto arc_class = [&](int p) {
        for (int k = 3; k >= 0; --k)
          if (p > cuts[k]) return k % 2;
        return 1;  // before cuts[0] wraps into the last arc
      };
      bool ok = true;
      for (int c = 0; c < cd.n && ok; ++c) {
        if (c == a || c == b) continue;
        ok = arc_class(cd.ends[c][0]) == arc_class(cd.ends[c][1]);
      }
      if (ok) out.push_back({a + 1, b + 1});
    }
  }
  return out;
}

}  // namespace

std::vector<std::array<int, 2>> two_point_cuts(const ChordDiagram& cd) {
  if (cd.n < 2) return {};
  return interval_pairs(cd, true);
}

std::vector<std::array<int, 2>> parallel_interval_pairs(const ChordDiagram& cd) {
  if (cd.n < 2) return {};
  return interval_pairs(cd, false);
}

}  // namespace curves::chords
