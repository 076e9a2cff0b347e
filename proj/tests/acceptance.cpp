// Acceptance harness: evaluates every verification suite at its pinned range
// over a freshly enumerated catalog and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "curves/census.hpp"
#include "curves/report.hpp"

using namespace curves;

namespace {

struct Criterion {
  std::string id;
  int n_max;
  double time_limit_s;  // <= 0: no limit asserted
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"T1", 7, 300.0}, {"T1b", 8, 0.0}, {"T2", 8, 600.0}, {"T3", 8, 0.0},
      {"T5", 7, 300.0}, {"T5b", 7, 0.0}, {"T6", 6, 0.0},   {"T7", 8, 0.0},
      {"T8", 8, 0.0},   {"T9", 8, 0.0},  {"T10", 7, 0.0},  {"T11", 6, 0.0},
  };

  auto t0 = std::chrono::steady_clock::now();
  std::fprintf(stderr, "enumerating catalog to n <= 8...\n");
  auto catalog = census::enumerate_catalog(8, 2);
  std::fprintf(stderr, "catalog: %zu classes in %.1fs\n", catalog.size(), seconds_since(t0));

  bool all_pass = true;

  // quick-range requirement: the triple-chord criterion over n <= 6,
  // including its enumeration, must finish within ten seconds
  {
    auto tq = std::chrono::steady_clock::now();
    auto small_catalog = census::enumerate_catalog(6, 1);
    auto rep = report::run_suite("T2", 6, small_catalog);
    double elapsed = seconds_since(tq);
    bool ok = rep.pass() && elapsed <= 10.0;
    all_pass = all_pass && ok;
    std::printf("T2(quick n<=6) %s instances=%llu counterexamples=%zu wall=%.2fs (limit 10s)\n",
                ok ? "PASS" : "FAIL", static_cast<unsigned long long>(rep.instances),
                rep.counterexamples.size(), elapsed);
  }

  for (const auto& c : criteria) {
    report::SuiteReport rep;
    try {
      rep = report::run_suite(c.id, c.n_max, catalog);
    } catch (const std::exception& e) {
      std::printf("%s FAIL error=%s\n", c.id.c_str(), e.what());
      all_pass = false;
      continue;
    }
    bool ok = rep.pass() && (c.time_limit_s <= 0.0 || rep.wall_seconds <= c.time_limit_s);
    all_pass = all_pass && ok;
    std::printf("%s %s n<=%d instances=%llu counterexamples=%zu wall=%.2fs\n", c.id.c_str(),
                ok ? "PASS" : "FAIL", c.n_max, static_cast<unsigned long long>(rep.instances),
                rep.counterexamples.size(), rep.wall_seconds);
    for (std::size_t i = 0; i < rep.counterexamples.size() && i < 5; ++i) {
      std::printf("  counterexample %s: %s\n", rep.counterexamples[i].certificate.c_str(),
                  rep.counterexamples[i].reason.c_str());
    }
    for (const auto& note : rep.notes) std::printf("  note: %s\n", note.c_str());
  }

  std::printf("total wall %.1fs\n", seconds_since(t0));
  return all_pass ? 0 : 1;
}
