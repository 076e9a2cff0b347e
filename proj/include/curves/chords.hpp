#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curves/cmap.hpp"
#include "curves/word.hpp"

namespace curves::chords {

// Chords on a 2n-point cycle; chord c (0-based) joins the two occurrence
// positions of label c+1.
struct ChordDiagram {
  int n = 0;
  std::vector<std::array<int, 2>> ends;  // per chord, positions i < j
  std::vector<int> chord_at;             // position -> chord

  word::GaussWord to_word() const;
};

ChordDiagram chord_diagram(const word::GaussWord& w);

// True iff exactly one endpoint of b lies strictly between a's endpoints.
bool interleaved(const ChordDiagram& cd, int a, int b);

struct InterlacementGraph {
  int n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<int> degree;

  bool edge(int a, int b) const { return adj[a][b]; }
};

InterlacementGraph interlacement(const ChordDiagram& cd);

enum class PatternKind { Cross, H, Triple };

// Cross: one interleaved pair.  Triple: three pairwise interleaved chords.
// H: three chords with exactly one non-interleaved pair, the remaining chord
// interleaving both of its members.
struct PatternHit {
  PatternKind kind;
  std::vector<int> labels;  // witnessing chords, as 1-based labels, ascending

  bool operator==(const PatternHit&) const = default;
};

std::vector<PatternHit> find_patterns(const ChordDiagram& cd, PatternKind kind);
bool has_pattern(const ChordDiagram& cd, PatternKind kind);

// Chords whose interlacement neighborhood is empty (nugatory crossings).
std::vector<int> reducible_chords(const ChordDiagram& cd);

// Connected-sum factorization: recursively split at every pairing-closed
// proper cyclic interval.  [cd] iff no cut exists; the empty diagram factors
// as itself.
std::vector<ChordDiagram> prime_factors(const ChordDiagram& cd);

struct Factorization {
  std::vector<ChordDiagram> factors;
  // positions each factor occupied in the input diagram, aligned with the
  // factor's own position order; scattering every factor's letters back to
  // these slots rebuilds the input word up to relabeling
  std::vector<std::vector<int>> original_positions;
};

Factorization factorize(const ChordDiagram& cd);

// One chord or more and no factor cut.
bool is_prime(const ChordDiagram& cd);

struct TriangleClass {
  int face_dart;                // minimal dart of the 3-gon face
  int kappa;                    // interleaved pairs among the triangle's chords
  std::array<int, 3> labels;    // corner crossings as word labels
  std::string subdiagram_cert;  // canonical certificate of the 6-endpoint sub-diagram
};

// One record per 3-gon face of the embedding.
std::vector<TriangleClass> triangle_classes(const cmap::Embedding& e);

// Pairs {a,b} of interleaved chords whose four endpoints split the cycle into
// arcs I1..I4 such that every other chord lies in I1 u I3 or in I2 u I4.  On
// a reduced curve these witness that one non-coherent smoothing produces a
// nugatory crossing.
std::vector<std::array<int, 2>> two_point_cuts(const ChordDiagram& cd);

// Same interval condition for a non-interleaved pair; kept separate because
// such a pair never certifies the smoothing property on reduced curves.
std::vector<std::array<int, 2>> parallel_interval_pairs(const ChordDiagram& cd);

}  // namespace curves::chords
