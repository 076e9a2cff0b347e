#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curves/cmap.hpp"
#include "curves/moves.hpp"

namespace curves::census {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaVersionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

// One enumerated curve with every derived property.  The record is a cache:
// each field is reproducible from the embedding alone.
struct CatalogRecord {
  std::string certificate;  // hex map certificate
  std::string word_text;
  int n = 0;
  cmap::Embedding embedding;
  std::map<int, int> face_p;  // k -> number of k-gons
  bool prime = false;
  int factor_count = 0;
  bool has_cross = false, has_h = false, has_triple = false;
  bool has_strong_bigon = false, has_weak_bigon = false;
  std::vector<int> triangle_kappas;
  std::optional<int> reductivity;  // nullopt = not found within the depth bound
  int reductivity_depth = 0;
  bool reductivity_degenerate = false;
  std::string pr_certificate;  // hex
  bool strong_trivializable = false;
};

CatalogRecord build_record(const cmap::Embedding& e);

// Exactly one record per equivalence class of spherical curve with at most
// n_max crossings, ordered by (n, certificate).  Words are generated in
// normalized double-occurrence form, filtered to symmetry-canonical
// representatives and by the interlacement parity condition, then realized.
std::vector<CatalogRecord> enumerate_catalog(int n_max, int jobs = 1);

// All normalized double-occurrence words of n chords, in generation order.
void for_each_dow(int n, const std::function<void(const word::GaussWord&)>& fn);

// True iff w is the canonical representative of its symmetry orbit.
bool symmetry_canonical(const word::GaussWord& w);

struct CrossValidateReport {
  std::map<int, std::uint64_t> word_counts;
  std::map<int, std::uint64_t> move_counts;
  bool word_superset = false;  // every move-generated class was word-generated
  bool equal = false;
};

// Second, independent generator: grow curves from the circle by all
// increasing moves, dedup by certificate, and compare per-n class counts.
CrossValidateReport cross_validate(int n_max);

void catalog_write(const std::vector<CatalogRecord>& records, const std::string& path);
std::vector<CatalogRecord> catalog_read(const std::string& path);

}  // namespace curves::census
