#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "curves/cmap.hpp"
#include "curves/moves.hpp"

namespace curves::reduce {

struct BoundTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReductionTrace {
  std::string start_cert;  // hex
  std::string end_cert;    // hex
  std::vector<moves::MoveEvent> events;
  bool monotone = true;
};

// Greedy monotone removal of 1- and 2-gons; the result has none of either.
std::pair<cmap::Embedding, ReductionTrace> reduce_to_pr(const cmap::Embedding& e);

// True iff every maximal decreasing {R1b,S2b,W2b} sequence from e ends at the
// same curve.  Shares results via certificate-keyed memoization.
class PrUniqueness {
 public:
  bool check(const cmap::Embedding& e);

 private:
  // certificate -> certificate of the unique endpoint, nullopt when several
  std::unordered_map<std::string, std::optional<std::string>> endpoint_;
  const std::optional<std::string>& endpoints(const cmap::Embedding& e);
};

bool pr_uniqueness_check(const cmap::Embedding& e);

// Searches for a monotone decreasing {R1b,S2b} sequence from e to the circle
// (the reverse of a build out of first moves and strong insertions).
class StrongBuildSearch {
 public:
  std::optional<ReductionTrace> check(const cmap::Embedding& e);
  bool reachable(const cmap::Embedding& e);

 private:
  std::unordered_map<std::string, bool> memo_;
};

std::optional<ReductionTrace> strong_build_check(const cmap::Embedding& e);

// Replays the reverse of a decreasing trace from the circle, matching each
// recorded state by certificate among the applicable increasing moves.
cmap::Embedding replay_reversed(const ReductionTrace& trace);

enum class Reach { Yes, NoWithinBound };

struct HomotopyResult {
  Reach reach;
  std::vector<moves::MoveEvent> trace;  // from a to b when reach == Yes
  int bound;
};

// Breadth-first search over the move graph restricted to curves with at most
// max_n crossings.  A negative answer is bound-relative only.
HomotopyResult homotopy_reachable(const cmap::Embedding& a, const cmap::Embedding& b,
                                  const std::set<moves::MoveKind>& kinds, int max_n);

struct Reductivity {
  int value = 0;
  std::vector<int> witness;  // smoothed crossing per step, ids in each intermediate curve
  bool degenerate = false;   // the crossing-free circle
};

// Minimal number of non-coherent smoothings producing a curve with a
// nugatory crossing; nullopt when none is found within max_depth.
std::optional<Reductivity> reductivity(const cmap::Embedding& e, int max_depth);

}  // namespace curves::reduce
