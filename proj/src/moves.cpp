#include "curves/moves.hpp"

#include <algorithm>
#include <stdexcept>

#include "curves/chords.hpp"

namespace curves::moves {

namespace {

using cmap::CombMap;
using cmap::Embedding;

void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

// Mutable copy of a map's permutations with room for new darts.
struct RawMap {
  std::vector<int> sigma, alpha, vertex;
  std::vector<char> alive;
  int next_vertex;

  explicit RawMap(const CombMap& m, int extra_darts = 0)
      : sigma(m.sigma()), alpha(m.alpha()), vertex(), alive(), next_vertex(m.crossings()) {
    vertex.resize(m.dart_count());
    for (int d = 0; d < m.dart_count(); ++d) vertex[d] = m.vertex_of(d);
    alive.assign(m.dart_count(), 1);
    grow(extra_darts);
  }

  void grow(int extra) {
    sigma.resize(sigma.size() + extra, -1);
    alpha.resize(alpha.size() + extra, -1);
    vertex.resize(vertex.size() + extra, -1);
    alive.resize(alive.size() + extra, 1);
  }

  void link(int x, int y) {
    alpha[x] = y;
    alpha[y] = x;
  }

  void set_cycle(const std::array<int, 4>& c, int v) {
    for (int k = 0; k < 4; ++k) {
      sigma[c[k]] = c[(k + 1) % 4];
      vertex[c[k]] = v;
    }
  }

  // Removes every dart of the given crossings; surviving alpha links are
  // rerouted through the deleted region, hopping dart -> partner(dart) at
  // each deleted pass.  For straight passes partner is sigma^2.
  template <typename Partner>
  void erase_crossings(const std::vector<int>& dead, Partner partner) {
    std::vector<char> is_dead(alive.size(), 0);
    for (std::size_t d = 0; d < alive.size(); ++d) {
      if (!alive[d]) continue;
      for (int v : dead) {
        if (vertex[d] == v) is_dead[d] = 1;
      }
    }
    for (std::size_t d = 0; d < alive.size(); ++d) {
      if (!alive[d] || is_dead[d]) continue;
      int y = alpha[d];
      int hops = 0;
      while (is_dead[y]) {
        y = alpha[partner(y)];
        require(++hops <= static_cast<int>(alive.size()), "contraction does not terminate");
      }
      alpha[d] = y;
    }
    for (std::size_t d = 0; d < alive.size(); ++d) {
      if (is_dead[d]) alive[d] = 0;
    }
  }

  std::pair<Embedding, std::vector<int>> normalize() const {
    return Embedding::from_raw(sigma, alpha, vertex, alive);
  }
};

int face_size(const CombMap& m, int dart) {
  int cur = dart, size = 0;
  do {
    ++size;
    cur = m.face_next(cur);
  } while (cur != dart);
  return size;
}

int face_min_dart(const CombMap& m, int dart) {
  int cur = dart, best = dart;
  do {
    best = std::min(best, cur);
    cur = m.face_next(cur);
  } while (cur != dart);
  return best;
}

bool same_face(const CombMap& m, int a, int b) {
  int cur = a;
  do {
    if (cur == b) return true;
    cur = m.face_next(cur);
  } while (cur != a);
  return false;
}

int edge_id(const CombMap& m, int d) { return std::min(d, m.alpha(d)); }

// --- increasing surgeries ------------------------------------------------
//
// New crossings are written as explicit counterclockwise 4-cycles derived
// from the local picture; decreasing moves use erase_crossings instead.

RawMap r1a_raw(const Embedding& e, int d) {
  const CombMap& m = e.map();
  RawMap raw(m, 4);
  const int base = m.dart_count();
  const int out2 = base, in1 = base + 1, in2 = base + 2, out1 = base + 3;
  const int a = m.alpha(d);
  raw.set_cycle({out2, in1, in2, out1}, raw.next_vertex++);
  raw.link(d, in1);
  raw.link(out1, in2);
  raw.link(out2, a);
  return raw;
}

struct R2aDarts {
  int u_fin, u_eout, u_fout, u_ein;
  int v_fin, v_ein, v_fout, v_eout;
};

RawMap r2a_raw(const Embedding& e, int d1, int d2, R2aDarts* nd = nullptr) {
  const CombMap& m = e.map();
  RawMap raw(m, 8);
  const int base = m.dart_count();
  R2aDarts x{base, base + 1, base + 2, base + 3, base + 4, base + 5, base + 6, base + 7};
  const int a1 = m.alpha(d1), a2 = m.alpha(d2);
  raw.set_cycle({x.u_fin, x.u_eout, x.u_fout, x.u_ein}, raw.next_vertex++);
  raw.set_cycle({x.v_fin, x.v_ein, x.v_fout, x.v_eout}, raw.next_vertex++);
  raw.link(d1, x.u_fin);
  raw.link(x.u_fout, x.v_fin);
  raw.link(x.v_eout, x.u_ein);
  if (d1 == d2) {
    // self push: an earlier segment of the arc crosses a later segment of
    // the same edge side, leaving five edge pieces
    raw.link(x.v_fout, x.v_ein);
    raw.link(x.u_eout, a1);
  } else {
    raw.link(x.v_fout, a1);
    raw.link(d2, x.v_ein);
    raw.link(x.u_eout, a2);
  }
  if (nd) *nd = x;
  return raw;
}

// --- site enumeration helpers ---------------------------------------------

std::optional<BigonType> classify_bigon(const Embedding& e, const std::vector<int>& face) {
  if (face.size() != 2) return std::nullopt;
  const CombMap& m = e.map();
  int c1 = m.vertex_of(face[0]), c2 = m.vertex_of(face[1]);
  if (c1 == c2) return std::nullopt;
  chords::ChordDiagram cd = chords::chord_diagram(e.word());
  bool strong_by_chords = !chords::interleaved(cd, c1, c2);
  bool strong_by_arcs = e.forward(face[0]) == e.forward(face[1]);
  require(strong_by_chords == strong_by_arcs, "bigon type criteria disagree");
  return strong_by_chords ? BigonType::Strong : BigonType::Weak;
}

MoveResult finish(RawMap&& raw, int expected_n) {
  auto [emb, vmap] = raw.normalize();
  require(emb.crossings() == expected_n, "unexpected crossing count after move");
  return {std::move(emb), std::move(vmap)};
}

MoveResult apply_r1a(const Embedding& e, int d) {
  if (e.crossings() == 0) {
    MoveResult r{cmap::realize_all(word::parse("1 1")).front(), {}};
    return r;
  }
  if (d < 0 || d >= e.map().dart_count()) throw InvalidSite("R1a dart out of range");
  MoveResult r = finish(r1a_raw(e, d), e.crossings() + 1);
  r.crossing_map.resize(e.crossings());
  return r;
}

MoveResult apply_r2a(const Embedding& e, const MoveSite& s) {
  const bool weak = s.kind == MoveKind::W2a;
  if (e.crossings() == 0) {
    if (weak) throw InvalidSite("no weak insertion exists on the circle");
    // strong insertion on the circle: the unique two-crossing curve with a
    // strong 2-gon
    for (auto& emb : cmap::realize_all(word::parse("1 1 2 2"))) {
      for (const auto& face : emb.map().faces()) {
        if (classify_bigon(emb, face) == BigonType::Strong) return {emb, {}};
      }
    }
    throw std::logic_error("strong insertion on the circle not found");
  }
  const CombMap& m = e.map();
  if (s.a < 0 || s.a >= m.dart_count() || s.b < 0 || s.b >= m.dart_count())
    throw InvalidSite("bad insertion darts");
  if (s.a != s.b) {
    if (edge_id(m, s.a) == edge_id(m, s.b)) throw InvalidSite("arcs must be distinct edges");
    if (!same_face(m, s.a, s.b)) throw InvalidSite("arcs must bound a common face");
  }
  bool expect_strong = e.forward(s.a) == e.forward(s.b);
  if (expect_strong == weak) throw InvalidSite("arc directions do not match the move kind");

  R2aDarts nd;
  RawMap raw = r2a_raw(e, s.a, s.b, &nd);
  MoveResult r = finish(std::move(raw), e.crossings() + 2);
  // the created 2-gon must classify as predicted
  int cu = r.crossing_map[e.crossings()], cv = r.crossing_map[e.crossings() + 1];
  const CombMap& rm = r.after.map();
  bool checked = false;
  for (const auto& face : rm.faces()) {
    if (face.size() != 2) continue;
    int f1 = rm.vertex_of(face[0]), f2 = rm.vertex_of(face[1]);
    if ((f1 == cu && f2 == cv) || (f1 == cv && f2 == cu)) {
      auto type = classify_bigon(r.after, face);
      require(type.has_value(), "created face is not a proper 2-gon");
      require((*type == BigonType::Strong) == expect_strong,
              "insertion produced the wrong bigon type");
      checked = true;
    }
  }
  require(checked, "insertion did not create its 2-gon");
  r.crossing_map.resize(e.crossings());
  return r;
}

MoveResult apply_decreasing(const Embedding& e, const MoveSite& s) {
  const CombMap& m = e.map();
  if (s.a < 0 || s.a >= m.dart_count()) throw InvalidSite("dart out of range");
  std::vector<int> face;
  {
    int cur = s.a;
    do {
      face.push_back(cur);
      cur = m.face_next(cur);
    } while (cur != s.a);
  }
  std::vector<int> dead;
  if (s.kind == MoveKind::R1b) {
    if (face.size() != 1) throw InvalidSite("R1b site is not a 1-gon");
    dead = {m.vertex_of(s.a)};
  } else {
    auto type = classify_bigon(e, face);
    if (!type) throw InvalidSite("site is not a removable 2-gon");
    bool want_strong = s.kind == MoveKind::S2b;
    if ((*type == BigonType::Strong) != want_strong) throw InvalidSite("wrong bigon type");
    if (s.a != face_min_dart(m, s.a)) throw InvalidSite("2-gon site must use the minimal dart");
    dead = {m.vertex_of(face[0]), m.vertex_of(face[1])};
  }
  RawMap raw(e.map());
  raw.erase_crossings(dead, [&](int y) { return raw.sigma[raw.sigma[y]]; });
  return finish(std::move(raw), e.crossings() - static_cast<int>(dead.size()));
}

MoveResult apply_r3(const Embedding& e, const MoveSite& s) {
  const CombMap& m = e.map();
  if (s.a < 0 || s.a >= m.dart_count()) throw InvalidSite("dart out of range");
  int t1 = s.a, t2 = m.face_next(t1), t3 = m.face_next(t2);
  if (m.face_next(t3) != t1 || t2 == t1 || t3 == t1) throw InvalidSite("site is not a 3-gon");
  int v1 = m.vertex_of(t1), v2 = m.vertex_of(t2), v3 = m.vertex_of(t3);
  if (v1 == v2 || v1 == v3 || v2 == v3) throw InvalidSite("3-gon must have distinct crossings");
  if (s.a != std::min({t1, t2, t3})) throw InvalidSite("R3 site must use the minimal dart");

  // detour decomposition: push the t1 arc across the t3 arc, then cancel the
  // 2-gon this forms with the old corner at vertex_of(t1)
  R2aDarts nd;
  RawMap raw = r2a_raw(e, t1, t3, &nd);
  int u_vertex = raw.vertex[nd.u_fin];
  raw.erase_crossings({v1, u_vertex}, [&](int y) { return raw.sigma[raw.sigma[y]]; });
  MoveResult r = finish(std::move(raw), e.crossings());
  // the surviving fresh crossing inherits the slot of the slid one
  r.crossing_map[v1] = r.crossing_map[e.crossings() + 1];
  r.crossing_map.resize(e.crossings());
  return r;
}

}  // namespace

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1a: return "R1a";
    case MoveKind::R1b: return "R1b";
    case MoveKind::S2a: return "S2a";
    case MoveKind::S2b: return "S2b";
    case MoveKind::W2a: return "W2a";
    case MoveKind::W2b: return "W2b";
    case MoveKind::R3: return "R3";
    case MoveKind::AInv: return "AInv";
  }
  return "?";
}

std::optional<MoveKind> kind_from_name(const std::string& s) {
  for (MoveKind k : {MoveKind::R1a, MoveKind::R1b, MoveKind::S2a, MoveKind::S2b, MoveKind::W2a,
                     MoveKind::W2b, MoveKind::R3, MoveKind::AInv}) {
    if (s == kind_name(k)) return k;
  }
  return std::nullopt;
}

int kind_delta(MoveKind k) {
  switch (k) {
    case MoveKind::R1a: return 1;
    case MoveKind::R1b: return -1;
    case MoveKind::S2a:
    case MoveKind::W2a: return 2;
    case MoveKind::S2b:
    case MoveKind::W2b: return -2;
    case MoveKind::R3: return 0;
    case MoveKind::AInv: return -1;
  }
  return 0;
}

std::optional<BigonType> bigon_type(const cmap::Embedding& e, int face_dart) {
  const CombMap& m = e.map();
  if (face_dart < 0 || face_dart >= m.dart_count()) return std::nullopt;
  if (face_size(m, face_dart) != 2) return std::nullopt;
  std::vector<int> face = {face_dart, m.face_next(face_dart)};
  return classify_bigon(e, face);
}

std::vector<MoveSite> enumerate_moves(const Embedding& e, const std::set<MoveKind>& kinds) {
  std::vector<MoveSite> sites;
  const CombMap& m = e.map();
  auto want = [&](MoveKind k) { return kinds.count(k) > 0; };

  if (e.crossings() == 0) {
    if (want(MoveKind::R1a)) sites.push_back({MoveKind::R1a, -1, -1});
    if (want(MoveKind::S2a)) sites.push_back({MoveKind::S2a, -1, -1});
    std::sort(sites.begin(), sites.end());
    return sites;
  }

  auto faces = m.faces();
  for (const auto& face : faces) {
    if (face.size() == 1 && want(MoveKind::R1b)) {
      sites.push_back({MoveKind::R1b, face[0], -1});
    } else if (face.size() == 2) {
      auto type = classify_bigon(e, face);
      if (!type) continue;
      MoveKind k = *type == BigonType::Strong ? MoveKind::S2b : MoveKind::W2b;
      if (want(k)) sites.push_back({k, face[0], -1});
    } else if (face.size() == 3 && want(MoveKind::R3)) {
      int v1 = m.vertex_of(face[0]), v2 = m.vertex_of(face[1]), v3 = m.vertex_of(face[2]);
      if (v1 != v2 && v1 != v3 && v2 != v3) sites.push_back({MoveKind::R3, face[0], -1});
    }
  }
  if (want(MoveKind::R1a)) {
    for (int d = 0; d < m.dart_count(); ++d) sites.push_back({MoveKind::R1a, d, -1});
  }
  if (want(MoveKind::S2a) || want(MoveKind::W2a)) {
    for (const auto& face : faces) {
      for (int d1 : face) {
        if (want(MoveKind::S2a)) sites.push_back({MoveKind::S2a, d1, d1});
        for (int d2 : face) {
          if (d1 == d2 || edge_id(m, d1) == edge_id(m, d2)) continue;
          MoveKind k = e.forward(d1) == e.forward(d2) ? MoveKind::S2a : MoveKind::W2a;
          if (want(k)) sites.push_back({k, d1, d2});
        }
      }
    }
  }
  if (want(MoveKind::AInv)) {
    for (int c = 0; c < e.crossings(); ++c) sites.push_back({MoveKind::AInv, c, -1});
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

MoveResult apply(const Embedding& e, const MoveSite& s) {
  switch (s.kind) {
    case MoveKind::R1a: return apply_r1a(e, s.a);
    case MoveKind::S2a:
    case MoveKind::W2a: return apply_r2a(e, s);
    case MoveKind::R1b:
    case MoveKind::S2b:
    case MoveKind::W2b: return apply_decreasing(e, s);
    case MoveKind::R3: return apply_r3(e, s);
    case MoveKind::AInv:
      try {
        return a_inverse(e, s.a);
      } catch (const NoSuchCrossing& ex) {
        throw InvalidSite(ex.what());
      }
  }
  throw InvalidSite("unknown move kind");
}

MoveResult a_inverse(const Embedding& e, int crossing) {
  if (crossing < 0 || crossing >= e.crossings())
    throw NoSuchCrossing("no crossing " + std::to_string(crossing));
  const CombMap& m = e.map();
  // positions of the two passes; entry darts are the arrivals
  int i = -1, j = -1;
  const auto& seq = e.word().letters();
  for (int p = 0; p < static_cast<int>(seq.size()); ++p) {
    if (seq[p] == crossing + 1) (i < 0 ? i : j) = p;
  }
  const int arr1 = 2 * i, dep1 = 2 * i + 1, arr2 = 2 * j, dep2 = 2 * j + 1;
  RawMap raw(m);
  auto partner = [&](int y) {
    if (y == arr1) return arr2;
    if (y == arr2) return arr1;
    if (y == dep1) return dep2;
    if (y == dep2) return dep1;
    return raw.sigma[raw.sigma[y]];
  };
  raw.erase_crossings({crossing}, partner);
  MoveResult r = finish(std::move(raw), e.crossings() - 1);

  // double-entry: the word rule x P x Q -> reverse(P) Q must agree
  std::vector<int> expected;
  for (int p = j - 1; p > i; --p) expected.push_back(seq[p]);
  for (int p = j + 1; p < static_cast<int>(seq.size()); ++p) expected.push_back(seq[p]);
  for (int p = 0; p < i; ++p) expected.push_back(seq[p]);
  auto expected_cert =
      word::canonicalize(word::GaussWord::from_letters(expected)).certificate;
  auto got_cert = word::canonicalize(r.after.word()).certificate;
  require(expected_cert == got_cert, "smoothing surgery disagrees with the word rule");
  return r;
}

std::string MoveEvent::to_json_line() const {
  std::string out = "{\"kind\":\"";
  out += kind_name(kind);
  out += "\",\"site\":[" + std::to_string(site.a) + "," + std::to_string(site.b) + "]";
  out += ",\"before_cert\":\"" + before_cert + "\"";
  out += ",\"after_cert\":\"" + after_cert + "\"}";
  return out;
}

}  // namespace curves::moves
