#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace curves::word {

// Cyclic double-occurrence word over crossing labels 1..n.  The empty word
// denotes the simple closed curve.  Stored as one chosen rotation; all
// operations treat the sequence as cyclic.  Labels are always normalized to
// first-appearance order 1..n.
class GaussWord {
 public:
  GaussWord() = default;

  // Validates the double-occurrence invariant and relabels by first
  // appearance.  Throws std::invalid_argument on violation.
  static GaussWord from_letters(std::vector<int> letters);

  int crossings() const { return static_cast<int>(letters_.size() / 2); }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  int at(std::size_t pos) const { return letters_[pos % letters_.size()]; }

  std::string to_text() const;

  auto operator<=>(const GaussWord&) const = default;

 private:
  std::vector<int> letters_;
};

struct ParseError : std::runtime_error {
  enum class Kind { BadToken, EmptyToken, NotDoubleOccurrence };
  Kind kind;
  ParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Parses whitespace- or comma-separated decimal labels.  "" is the circle.
GaussWord parse(const std::string& text);

struct CanonicalForm {
  GaussWord word;
  std::string certificate;  // byte string, minimal over all symmetries

  bool operator==(const CanonicalForm&) const = default;
};

// Certificate minimal over all 2n rotations x 2 orientations followed by
// first-appearance relabeling.  Idempotent; equal certificates iff the words
// are related by rotation, reflection and relabeling.
CanonicalForm canonicalize(const GaussWord& w);

std::string to_hex(const std::string& bytes);

// Every rotated/reflected variant, renormalized.  canonicalize is constant
// on the returned set.
std::set<GaussWord> symmetry_orbit(const GaussWord& w);

// Classical necessary condition for realizability: every chord must
// interleave an even number of other chords.
bool parity_filter(const GaussWord& w);

}  // namespace curves::word
