#include "curves/cmap.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace curves::cmap {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

// Occurrence positions of each label, 0-based chord ids.
std::vector<std::array<int, 2>> visit_positions(const word::GaussWord& w) {
  std::vector<std::array<int, 2>> pos(w.crossings(), {-1, -1});
  const auto& seq = w.letters();
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    auto& p = pos[seq[i] - 1];
    (p[0] < 0 ? p[0] : p[1]) = i;
  }
  return pos;
}

}  // namespace

CombMap CombMap::build(const word::GaussWord& w, const std::vector<std::uint8_t>& bits) {
  CombMap m;
  m.n_ = w.crossings();
  if (m.n_ == 0) return m;
  require(static_cast<int>(bits.size()) == m.n_, "rotation bit per crossing required");
  const int darts = 4 * m.n_;
  m.sigma_.assign(darts, -1);
  m.alpha_.assign(darts, -1);
  m.vertex_.assign(darts, -1);
  const int len = 2 * m.n_;
  for (int p = 0; p < len; ++p) {
    int exit = 2 * p + 1;
    int entry = 2 * ((p + 1) % len);
    m.alpha_[exit] = entry;
    m.alpha_[entry] = exit;
  }
  auto pos = visit_positions(w);
  for (int c = 0; c < m.n_; ++c) {
    const int E = 2 * pos[c][0], X = E + 1;
    const int e = 2 * pos[c][1], x = e + 1;
    for (int d : {E, X, e, x}) m.vertex_[d] = c;
    if (bits[c] == 0) {
      m.sigma_[E] = e; m.sigma_[e] = X; m.sigma_[X] = x; m.sigma_[x] = E;
    } else {
      m.sigma_[E] = x; m.sigma_[x] = X; m.sigma_[X] = e; m.sigma_[e] = E;
    }
  }
  m.sigma_inv_.assign(darts, -1);
  for (int d = 0; d < darts; ++d) m.sigma_inv_[m.sigma_[d]] = d;
  return m;
}

std::vector<std::vector<int>> CombMap::faces() const {
  if (n_ == 0) return {{}, {}};
  std::vector<std::vector<int>> out;
  std::vector<char> seen(dart_count(), 0);
  for (int d = 0; d < dart_count(); ++d) {
    if (seen[d]) continue;
    std::vector<int> orbit;
    int cur = d;
    do {
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = face_next(cur);
    } while (cur != d);
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

void CombMap::validate() const {
  if (n_ == 0) {
    require(sigma_.empty() && alpha_.empty(), "circle map must have no darts");
    return;
  }
  const int darts = dart_count();
  require(static_cast<int>(sigma_.size()) == darts, "sigma size");
  require(static_cast<int>(alpha_.size()) == darts, "alpha size");
  for (int d = 0; d < darts; ++d) {
    require(sigma_[d] >= 0 && sigma_[d] < darts, "sigma range");
    require(alpha_[d] >= 0 && alpha_[d] < darts, "alpha range");
    require(alpha_[d] != d && alpha_[alpha_[d]] == d, "alpha must be a fixed-point-free involution");
    require(vertex_[sigma_[d]] == vertex_[d], "sigma preserves vertices");
  }
  for (int d = 0; d < darts; ++d) {
    // each sigma orbit is a 4-cycle through its vertex's darts
    int a = sigma_[d], b = sigma_[a], c = sigma_[b];
    require(a != d && b != d && c != d && sigma_[c] == d, "sigma must be a product of 4-cycles");
  }
  // single closed curve: the straight-ahead walk has two orbits of length 2n
  std::vector<char> seen(darts, 0);
  int start = 1;  // an exit dart in normal form
  int cur = start, steps = 0;
  do {
    require(!seen[cur], "trip revisits a dart");
    seen[cur] = 1;
    cur = trip_next(cur);
    ++steps;
  } while (cur != start && steps <= darts);
  require(cur == start && steps == 2 * n_, "trip must trace one circle");
  // sphere
  int F = static_cast<int>(faces().size());
  require(n_ - 2 * n_ + F == 2, "Euler characteristic must be 2");
}

int FaceCensus::count(int k) const {
  auto it = p.find(k);
  return it == p.end() ? 0 : it->second;
}

bool FaceCensus::identities_hold() const {
  int faces = 0, corner_sum = 0;
  for (const auto& [k, c] : p) {
    faces += c;
    corner_sum += k * c;
  }
  return faces == F && corner_sum == 2 * E && 4 * V == 2 * E && V - E + F == 2;
}

FaceCensus face_census(const CombMap& m) {
  FaceCensus fc;
  fc.V = m.crossings();
  fc.E = 2 * m.crossings();
  auto faces = m.faces();
  fc.F = static_cast<int>(faces.size());
  for (const auto& f : faces) ++fc.p[static_cast<int>(f.size())];
  return fc;
}

std::string canonical_certificate(const CombMap& m, bool* chirality_out) {
  if (chirality_out) *chirality_out = true;
  if (m.crossings() == 0) return "";
  const int darts = m.dart_count();
  std::string best;
  std::vector<int> label(darts), order(darts);
  for (int orient = 0; orient < 2; ++orient) {
    for (int start = 0; start < darts; ++start) {
      std::fill(label.begin(), label.end(), -1);
      label[start] = 0;
      order[0] = start;
      int assigned = 1;
      for (int k = 0; k < assigned; ++k) {
        int d = order[k];
        int nbrs[2] = {orient ? m.sigma_inv(d) : m.sigma(d), m.alpha(d)};
        for (int nb : nbrs) {
          if (label[nb] < 0) {
            label[nb] = assigned;
            order[assigned++] = nb;
          }
        }
      }
      std::string cand;
      cand.reserve(2 * darts);
      for (int k = 0; k < darts; ++k) {
        int d = order[k];
        cand += static_cast<char>(label[orient ? m.sigma_inv(d) : m.sigma(d)]);
        cand += static_cast<char>(label[m.alpha(d)]);
      }
      if (best.empty() || cand < best) {
        best = std::move(cand);
        if (chirality_out) *chirality_out = orient == 0;
      }
    }
  }
  return best;
}

bool is_equivalent(const CombMap& a, const CombMap& b) {
  if (a.crossings() != b.crossings()) return false;
  return canonical_certificate(a) == canonical_certificate(b);
}

Embedding Embedding::circle() {
  Embedding e;
  return e;
}

Embedding Embedding::realize(const word::GaussWord& w, const std::vector<std::uint8_t>& bits) {
  Embedding e;
  e.word_ = w;
  e.bits_ = bits;
  e.map_ = CombMap::build(w, bits);
  e.map_.validate();
  e.cert_ = canonical_certificate(e.map_, &e.reflection_canonical_);
  return e;
}

std::pair<Embedding, std::vector<int>> Embedding::from_raw(const std::vector<int>& sigma,
                                                           const std::vector<int>& alpha,
                                                           const std::vector<int>& vertex,
                                                           const std::vector<char>& alive) {
  const int raw_darts = static_cast<int>(sigma.size());
  int alive_count = 0, first_alive = -1;
  int max_vertex = -1;
  for (int d = 0; d < raw_darts; ++d) {
    if (alive[d]) {
      ++alive_count;
      if (first_alive < 0) first_alive = d;
    }
    max_vertex = std::max(max_vertex, vertex[d]);
  }
  // prefer an odd start so normal-form input reproduces itself exactly
  if (first_alive >= 0 && raw_darts > 1 && alive[1]) first_alive = 1;
  std::vector<int> vertex_map(max_vertex + 1, -1);
  if (alive_count == 0) return {circle(), vertex_map};
  require(alive_count % 4 == 0, "dart count must be a multiple of 4");
  const int n = alive_count / 4;

  // trace the curve from an arbitrary departure dart
  std::vector<int> departures;
  departures.reserve(2 * n);
  std::vector<int> letters;
  letters.reserve(2 * n);
  int next_label = 0;
  int cur = first_alive;
  std::vector<char> seen(raw_darts, 0);
  for (int step = 0; step < 2 * n; ++step) {
    require(alive[cur] && !seen[cur], "trip leaves the live dart set or revisits");
    seen[cur] = 1;
    departures.push_back(cur);
    int v = vertex[cur];
    if (vertex_map[v] < 0) vertex_map[v] = next_label++;
    letters.push_back(vertex_map[v] + 1);
    int arr = alpha[cur];
    require(arr >= 0 && alive[arr], "alpha leaves the live dart set");
    cur = sigma[sigma[arr]];
  }
  require(cur == first_alive, "trip does not close after 2n steps");
  require(next_label == n, "trip must visit every crossing");

  word::GaussWord w = word::GaussWord::from_letters(letters);
  // word labels follow first appearance along this trace, so w is the literal
  // visit sequence
  auto pos = visit_positions(w);
  std::vector<int> arrival(2 * n);
  for (int p = 0; p < 2 * n; ++p) arrival[p] = alpha[departures[(p + 2 * n - 1) % (2 * n)]];
  std::vector<std::uint8_t> bits(n, 0);
  for (int c = 0; c < n; ++c) {
    int i = pos[c][0], j = pos[c][1];
    int s = sigma[arrival[i]];
    if (s == arrival[j]) {
      bits[c] = 0;
    } else {
      require(s == departures[j], "crossing is not transversal");
      bits[c] = 1;
    }
  }
  Embedding e = realize(w, bits);
  return {std::move(e), std::move(vertex_map)};
}

std::vector<Embedding> realize_all(const word::GaussWord& w) {
  const int n = w.crossings();
  if (n == 0) return {Embedding::circle()};
  std::vector<Embedding> out;
  std::vector<std::string> certs;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::uint8_t> bits(n);
    for (int c = 0; c < n; ++c) bits[c] = (mask >> c) & 1;
    CombMap m = CombMap::build(w, bits);
    // genus-0 test: count face orbits
    const int darts = 4 * n;
    std::vector<char> seen(darts, 0);
    int F = 0;
    for (int d = 0; d < darts; ++d) {
      if (seen[d]) continue;
      ++F;
      int cur = d;
      do {
        seen[cur] = 1;
        cur = m.face_next(cur);
      } while (cur != d);
    }
    if (F != n + 2) continue;
    Embedding e = Embedding::realize(w, bits);
    if (std::find(certs.begin(), certs.end(), e.certificate()) == certs.end()) {
      certs.push_back(e.certificate());
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace curves::cmap
