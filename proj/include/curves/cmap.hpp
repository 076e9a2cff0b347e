#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curves/word.hpp"

namespace curves::cmap {

// Dart-based 4-valent combinatorial map on the sphere.  Darts are kept in
// traversal-normal form: position p of the curve owns darts 2p (entry, points
// back along the arriving edge) and 2p+1 (exit, points along the departing
// edge), so alpha always pairs 2p+1 with 2(p+1) mod 4n.  sigma is the
// counterclockwise rotation around each crossing; at every crossing the two
// passes of the curve occupy sigma-opposite dart pairs.  The crossing-free
// circle is the map with n = 0 and no darts.
class CombMap {
 public:
  CombMap() = default;  // circle

  int crossings() const { return n_; }
  int dart_count() const { return 4 * n_; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int alpha(int d) const { return alpha_[d]; }
  int vertex_of(int d) const { return vertex_[d]; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& alpha() const { return alpha_; }

  // Next dart of the face walk; faces are orbits of this permutation and lie
  // on the right of each dart's direction.
  int face_next(int d) const { return sigma_[alpha_[d]]; }

  // Next departure dart of the curve traversal (straight through).
  int trip_next(int d) const { return sigma_[sigma_[alpha_[d]]]; }

  // Face orbits as dart lists, each rotated to start at its minimal dart,
  // sorted by that dart.  The circle yields two empty faces.
  std::vector<std::vector<int>> faces() const;

  // Checks every structural invariant; throws std::logic_error on violation.
  void validate() const;

  static CombMap build(const word::GaussWord& w, const std::vector<std::uint8_t>& bits);

 private:
  friend class Embedding;
  int n_ = 0;
  std::vector<int> sigma_, sigma_inv_, alpha_, vertex_;
};

// k-gon counts of a map.  The circle's two corner-free faces are recorded
// as p[0].
struct FaceCensus {
  std::map<int, int> p;
  int V = 0, E = 0, F = 0;

  int count(int k) const;
  bool identities_hold() const;
};

FaceCensus face_census(const CombMap& m);

// Canonical byte string, equal for two maps iff they are related by dart
// relabeling, allowing global reflection.  "" is the circle.  When
// chirality_out is given it receives true iff the minimum is attained
// without inverting the rotation.
std::string canonical_certificate(const CombMap& m, bool* chirality_out = nullptr);

bool is_equivalent(const CombMap& a, const CombMap& b);

// A spherical curve: a genus-0 map plus its traced word and rotation bits.
// bit c chooses between the two transversal rotations at crossing c+1; with
// visits at positions i<j and darts E=2i, X=2i+1, e=2j, x=2j+1, bit 0 is the
// sigma cycle (E e X x) and bit 1 is (E x X e).
class Embedding {
 public:
  Embedding() = default;  // the circle
  static Embedding circle();
  static Embedding realize(const word::GaussWord& w, const std::vector<std::uint8_t>& bits);

  // Rebuilds an embedding from surgery output: raw sigma/alpha over an old
  // dart space, a vertex id per dart, and a liveness mask.  Returns the
  // normalized embedding plus the map old vertex id -> new crossing label - 1
  // (dead vertices map to -1).  Throws std::logic_error if the raw data does
  // not describe a single-circle genus-0 map.
  static std::pair<Embedding, std::vector<int>> from_raw(const std::vector<int>& sigma,
                                                         const std::vector<int>& alpha,
                                                         const std::vector<int>& vertex,
                                                         const std::vector<char>& alive);

  const CombMap& map() const { return map_; }
  const word::GaussWord& word() const { return word_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  const std::string& certificate() const { return cert_; }
  std::string certificate_hex() const { return word::to_hex(cert_); }
  int crossings() const { return map_.crossings(); }

  // True when the stored rotation realizes the certificate directly, false
  // when only the mirror image does.
  bool reflection_canonical() const { return reflection_canonical_; }

  // True when the dart is an exit (the curve runs along its direction).
  bool forward(int d) const { return d & 1; }

  auto operator<=>(const Embedding& o) const { return cert_ <=> o.cert_; }
  bool operator==(const Embedding& o) const { return cert_ == o.cert_; }

 private:
  CombMap map_;
  word::GaussWord word_;
  std::vector<std::uint8_t> bits_;
  std::string cert_;
  bool reflection_canonical_ = true;
};

// All spherical embeddings of w up to homeomorphism and reflection, sorted by
// certificate.  Empty iff w is not realizable on the sphere.
std::vector<Embedding> realize_all(const word::GaussWord& w);

}  // namespace curves::cmap
