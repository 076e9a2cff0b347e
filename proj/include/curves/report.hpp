#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curves/census.hpp"

namespace curves::report {

struct CatalogIncomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Counterexample {
  std::string certificate;
  std::string reason;
};

struct SuiteReport {
  std::string id;
  int n_max = 0;
  std::uint64_t instances = 0;  // predicate evaluations performed
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;  // reported values (counts etc.)
  double wall_seconds = 0.0;

  bool pass() const { return counterexamples.empty(); }
};

// Verification suites.  Each evaluates one universal claim exhaustively over
// the qualifying catalog records (or self-generated inputs for T9/T11):
//   T1   triple-free curves whose fully reduced form is prime or trivial
//        admit a monotone strong descent to the circle, and its reverse
//        rebuilds the curve
//   T1b  prime 1-/2-gon-free curves with triple-free diagrams are trivial
//   T2   prime nontrivial 1-/2-gon-free curves contain a triple chord
//   T3   nontrivial 1-/2-gon-free curves satisfy p3 + sum_{k>=4}(4-k)p_k = 8
//        and have at least eight 3-gons
//   T5   on reduced curves, reductivity 1 is equivalent to a two-point cut
//   T5b  reductivity 1 implies a triple chord
//   T6   every weak insertion creates a triple chord
//   T7   prime curves without 1-gons have no nugatory crossing
//   T8   reduced nontrivial curves have a 2-gon or a 3-gon
//   T9   oracle equivalences: pattern detectors vs brute force on all
//        diagrams, map round-trip re-reading, smoothing surgery vs word rule
//   T10  all monotone reductions of a curve end at the same 1-/2-gon-free form
//   T11  word-based and move-grown enumerations agree on class counts
std::vector<std::string> all_suite_ids();
int default_n_max(const std::string& id);

SuiteReport run_suite(const std::string& id, int n_max,
                      const std::vector<census::CatalogRecord>& catalog);

}  // namespace curves::report
