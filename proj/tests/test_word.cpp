#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "curves/word.hpp"

using namespace curves;
using word::GaussWord;

namespace {

// Oracle: expand every rotation and reflection by hand, relabel by first
// appearance, take the lexicographic minimum.
std::vector<int> oracle_canonical(const std::vector<int>& seq) {
  auto relabel = [](std::vector<int> s) {
    std::vector<int> map(64, 0);
    int next = 0;
    for (int& x : s) {
      if (!map[x]) map[x] = ++next;
      x = map[x];
    }
    return s;
  };
  std::vector<int> best;
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<int> base = seq;
    if (refl) std::reverse(base.begin(), base.end());
    for (std::size_t r = 0; r < seq.size(); ++r) {
      std::vector<int> rot;
      for (std::size_t i = 0; i < base.size(); ++i) rot.push_back(base[(i + r) % base.size()]);
      rot = relabel(rot);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("parse accepts well-formed words and normalizes labels") {
  GaussWord w = word::parse("1 2 3 1 2 3");
  CHECK(w.letters() == std::vector<int>{1, 2, 3, 1, 2, 3});
  CHECK(w.crossings() == 3);

  CHECK(word::parse("").empty());
  CHECK(word::parse("7 9 7 9").letters() == std::vector<int>{1, 2, 1, 2});
  CHECK(word::parse("2,3,2,3").letters() == std::vector<int>{1, 2, 1, 2});
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(word::parse("1 2 3 1 2"), word::ParseError);
  CHECK_THROWS_AS(word::parse("1 x 1"), word::ParseError);
  CHECK_THROWS_AS(word::parse("1,,1"), word::ParseError);
  try {
    word::parse("1 2 3 1 2");
    CHECK(false);
  } catch (const word::ParseError& e) {
    CHECK(e.kind == word::ParseError::Kind::NotDoubleOccurrence);
  }
}

TEST_CASE("parse of serialized word is the identity") {
  for (const char* text : {"", "1 1", "1 2 1 2", "1 2 3 1 2 3", "1 2 2 3 1 3"}) {
    GaussWord w = word::parse(text);
    CHECK(word::parse(w.to_text()) == w);
  }
}

TEST_CASE("canonicalize identifies symmetric variants") {
  auto c1 = word::canonicalize(word::parse("2 3 1 2 3 1"));
  auto c2 = word::canonicalize(word::parse("1 2 3 1 2 3"));
  CHECK(c1.certificate == c2.certificate);

  auto c3 = word::canonicalize(word::parse("1 2 2 1"));
  auto c4 = word::canonicalize(word::parse("1 1 2 2"));
  CHECK(c3.certificate == c4.certificate);
  // frozen from the oracle
  auto expect = oracle_canonical({1, 2, 2, 1});
  CHECK(c3.word.letters() == expect);

  CHECK(word::canonicalize(GaussWord()).certificate == "");
  // idempotent
  auto again = word::canonicalize(c1.word);
  CHECK(again.certificate == c1.certificate);
}

TEST_CASE("canonicalize matches the expansion oracle on every small word") {
  for (const char* text : {"1 1", "1 2 1 2", "1 2 2 1", "1 2 3 1 2 3", "1 2 1 3 2 3",
                           "1 2 3 2 1 3", "1 1 2 3 2 3", "1 2 3 4 1 2 3 4"}) {
    GaussWord w = word::parse(text);
    CHECK(word::canonicalize(w).word.letters() == oracle_canonical(w.letters()));
  }
}

TEST_CASE("parity filter counts interleavements mod 2") {
  CHECK_FALSE(word::parity_filter(word::parse("1 2 1 2")));
  CHECK(word::parity_filter(word::parse("1 2 3 1 2 3")));
  CHECK(word::parity_filter(GaussWord()));
  CHECK(word::parity_filter(word::parse("1 1")));
  CHECK(word::parity_filter(word::parse("1 1 2 2")));
}

TEST_CASE("symmetry orbit") {
  auto fig8 = word::symmetry_orbit(word::parse("1 1"));
  CHECK(fig8.size() == 1);
  CHECK(fig8.count(word::parse("1 1")) == 1);

  auto tref = word::symmetry_orbit(word::parse("1 2 3 1 2 3"));
  CHECK(tref.count(word::parse("1 2 3 1 2 3")) == 1);
  CHECK(!tref.empty());

  auto aabb = word::symmetry_orbit(word::parse("1 1 2 2"));
  CHECK(aabb.count(word::parse("1 2 2 1")) == 1);

  // canonicalize is constant on every orbit
  for (const auto& w : tref) {
    CHECK(word::canonicalize(w).certificate ==
          word::canonicalize(word::parse("1 2 3 1 2 3")).certificate);
  }
}

TEST_CASE("orbit sizes divide the symmetry group order") {
  for (const char* text : {"1 1", "1 2 1 2", "1 2 2 1", "1 2 3 1 2 3", "1 2 1 3 2 3",
                           "1 1 2 3 2 3", "1 2 3 4 1 2 3 4"}) {
    GaussWord w = word::parse(text);
    auto orbit = word::symmetry_orbit(w);
    CHECK(4 * w.crossings() % orbit.size() == 0);
  }
}

TEST_CASE("certificates serialize to lowercase hex") {
  auto cf = word::canonicalize(word::parse("1 1"));
  CHECK(word::to_hex(cf.certificate) == "0101");
}
