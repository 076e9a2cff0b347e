#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curves/cmap.hpp"

namespace curves::moves {

enum class MoveKind { R1a, R1b, S2a, S2b, W2a, W2b, R3, AInv };

const char* kind_name(MoveKind k);
std::optional<MoveKind> kind_from_name(const std::string& s);

// Crossing-count delta of the kind.
int kind_delta(MoveKind k);

enum class BigonType { Strong, Weak };

struct InvalidSite : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSuchCrossing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rewrite site.  Meaning of the dart slots per kind:
//   R1b          a = the 1-gon's dart
//   S2b/W2b      a = minimal dart of the 2-gon face
//   R3           a = minimal dart of the 3-gon face
//   R1a          a = edge side receiving the kink (-1 on the circle)
//   S2a/W2a      a = pushed arc, b = crossed arc, same face (-1,-1 on the circle)
//   AInv         a = crossing id
struct MoveSite {
  MoveKind kind;
  int a = -1;
  int b = -1;

  auto operator<=>(const MoveSite&) const = default;
};

struct MoveResult {
  cmap::Embedding after;
  // old crossing id -> new crossing id, -1 for removed crossings
  std::vector<int> crossing_map;
};

// Complete list of applicable sites of the requested kinds, lexicographically
// ordered.  Increasing second moves are classified by the curve directions of
// the two arcs along their common face: equal direction flags give the
// strong (inverse self-tangency) insertion, opposite flags the weak one.
std::vector<MoveSite> enumerate_moves(const cmap::Embedding& e, const std::set<MoveKind>& kinds);

// Applies a site from enumerate_moves.  Throws InvalidSite for stale or
// malformed sites.  The result is fully validated.
MoveResult apply(const cmap::Embedding& e, const MoveSite& s);

// Non-coherent smoothing at a crossing keeping one component; at word level
// x P x Q becomes reverse(P) Q.  Implemented as map surgery and cross-checked
// against the word rule on every call.
MoveResult a_inverse(const cmap::Embedding& e, int crossing);

// Type of a 2-gon face given by its minimal dart; nullopt when the face is
// not a 2-gon on two distinct crossings.  Decided by chord interleavement
// (non-interleaved = strong) with a redundant arc-direction check; a mismatch
// between the two criteria throws std::logic_error.
std::optional<BigonType> bigon_type(const cmap::Embedding& e, int face_dart);

struct MoveEvent {
  MoveKind kind;
  MoveSite site;
  std::string before_cert;  // hex
  std::string after_cert;   // hex

  std::string to_json_line() const;
};

}  // namespace curves::moves
