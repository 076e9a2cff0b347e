#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "curves/census.hpp"
#include "curves/chords.hpp"
#include "curves/moves.hpp"

using namespace curves;
using cmap::Embedding;
using moves::MoveKind;
using moves::MoveSite;

namespace {

std::vector<Embedding> embeddings_to(int n_max) {
  std::vector<Embedding> out;
  for (int n = 0; n <= n_max; ++n) {
    census::for_each_dow(n, [&](const word::GaussWord& w) {
      if (!word::parity_filter(w) || !census::symmetry_canonical(w)) return;
      for (auto& e : cmap::realize_all(w)) out.push_back(std::move(e));
    });
  }
  return out;
}

Embedding the(const char* text) {
  auto all = cmap::realize_all(word::parse(text));
  REQUIRE(all.size() == 1);
  return all[0];
}

std::multiset<int> face_sizes(const cmap::CombMap& m) {
  std::multiset<int> out;
  for (const auto& f : m.faces()) out.insert(static_cast<int>(f.size()));
  return out;
}

}  // namespace

TEST_CASE("kind deltas") {
  CHECK(moves::kind_delta(MoveKind::R1a) == 1);
  CHECK(moves::kind_delta(MoveKind::S2a) == 2);
  CHECK(moves::kind_delta(MoveKind::W2b) == -2);
  CHECK(moves::kind_delta(MoveKind::R3) == 0);
  CHECK(moves::kind_delta(MoveKind::AInv) == -1);
}

TEST_CASE("circle sites") {
  Embedding c = Embedding::circle();
  auto strong = moves::enumerate_moves(c, {MoveKind::S2a});
  CHECK(strong.size() == 1);
  auto weak = moves::enumerate_moves(c, {MoveKind::W2a});
  CHECK(weak.empty());
  auto kink = moves::enumerate_moves(c, {MoveKind::R1a});
  CHECK(kink.size() == 1);

  auto fig8 = moves::apply(c, kink[0]).after;
  CHECK(fig8.certificate() == the("1 1").certificate());

  auto vesica = moves::apply(c, strong[0]).after;
  CHECK(vesica.crossings() == 2);
  CHECK(face_sizes(vesica.map()) == std::multiset<int>{1, 1, 2, 4});
  // its 2-gon is strong
  bool found = false;
  for (const auto& f : vesica.map().faces()) {
    if (f.size() == 2) {
      auto t = moves::bigon_type(vesica, f[0]);
      REQUIRE(t.has_value());
      CHECK(*t == moves::BigonType::Strong);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("trefoil bigons are weak; the doubled-kink curve has one strong site") {
  auto tref = the("1 2 3 1 2 3");
  auto weak = moves::enumerate_moves(tref, {MoveKind::S2b, MoveKind::W2b});
  CHECK(weak.size() == 3);
  for (const auto& s : weak) CHECK(s.kind == MoveKind::W2b);

  // the embedding of 1 2 2 1 with a proper 2-gon
  for (const auto& e : cmap::realize_all(word::parse("1 2 2 1"))) {
    auto strong = moves::enumerate_moves(e, {MoveKind::S2b});
    if (face_sizes(e.map()) == std::multiset<int>{1, 1, 2, 4}) {
      REQUIRE(strong.size() == 1);
      auto circle = moves::apply(e, strong[0]).after;
      CHECK(circle.crossings() == 0);
    } else {
      CHECK(strong.empty());
    }
  }
}

TEST_CASE("kink removal") {
  auto fig8 = the("1 1");
  auto sites = moves::enumerate_moves(fig8, {MoveKind::R1b});
  REQUIRE(sites.size() == 2);
  CHECK(moves::apply(fig8, sites[0]).after.crossings() == 0);
}

TEST_CASE("R3 on a trefoil triangle preserves the face census") {
  auto tref = the("1 2 3 1 2 3");
  auto sites = moves::enumerate_moves(tref, {MoveKind::R3});
  REQUIRE(sites.size() == 2);
  for (const auto& s : sites) {
    auto result = moves::apply(tref, s);
    CHECK(result.after.crossings() == 3);
    CHECK(face_sizes(result.after.map()) == std::multiset<int>{2, 2, 2, 3, 3});
  }
}

TEST_CASE("smoothing the trefoil gives the doubled strong pair") {
  auto tref = the("1 2 3 1 2 3");
  auto result = moves::a_inverse(tref, 0);
  CHECK(result.after.crossings() == 2);
  CHECK(word::canonicalize(result.after.word()).certificate ==
        word::canonicalize(word::parse("3 2 2 3")).certificate);
  CHECK_THROWS_AS(moves::a_inverse(tref, 3), moves::NoSuchCrossing);

  auto fig8 = the("1 1");
  CHECK(moves::a_inverse(fig8, 0).after.crossings() == 0);
}

TEST_CASE("increasing then decreasing round-trips, exhaustive to n = 4") {
  for (const auto& e : embeddings_to(4)) {
    // every kink insertion is undone by removing the created kink
    for (const auto& s : moves::enumerate_moves(e, {MoveKind::R1a})) {
      auto result = moves::apply(e, s);
      CHECK(result.after.crossings() == e.crossings() + 1);
      bool undone = false;
      for (const auto& back : moves::enumerate_moves(result.after, {MoveKind::R1b})) {
        if (moves::apply(result.after, back).after.certificate() == e.certificate()) {
          undone = true;
          break;
        }
      }
      CHECK(undone);
    }
    // every insertion of either type is undone by removing its 2-gon
    for (const auto& s : moves::enumerate_moves(e, {MoveKind::S2a, MoveKind::W2a})) {
      auto result = moves::apply(e, s);
      CHECK(result.after.crossings() == e.crossings() + 2);
      MoveKind inverse = s.kind == MoveKind::S2a ? MoveKind::S2b : MoveKind::W2b;
      bool undone = false;
      for (const auto& back : moves::enumerate_moves(result.after, {inverse})) {
        if (moves::apply(result.after, back).after.certificate() == e.certificate()) {
          undone = true;
          break;
        }
      }
      CHECK(undone);
    }
  }
}

TEST_CASE("every removal has a matching insertion, exhaustive to n = 5") {
  for (const auto& e : embeddings_to(5)) {
    for (const auto& s :
         moves::enumerate_moves(e, {MoveKind::R1b, MoveKind::S2b, MoveKind::W2b})) {
      auto result = moves::apply(e, s);
      MoveKind inverse = s.kind == MoveKind::R1b  ? MoveKind::R1a
                         : s.kind == MoveKind::S2b ? MoveKind::S2a
                                                   : MoveKind::W2a;
      bool rebuilt = false;
      for (const auto& fwd : moves::enumerate_moves(result.after, {inverse})) {
        if (moves::apply(result.after, fwd).after.certificate() == e.certificate()) {
          rebuilt = true;
          break;
        }
      }
      CHECK(rebuilt);
    }
  }
}

TEST_CASE("R3 is reversible and direction-independent, exhaustive to n = 5") {
  for (const auto& e : embeddings_to(5)) {
    for (const auto& s : moves::enumerate_moves(e, {MoveKind::R3})) {
      auto result = moves::apply(e, s);
      CHECK(result.after.crossings() == e.crossings());
      // some triangle of the result flips back
      bool back = false;
      for (const auto& s2 : moves::enumerate_moves(result.after, {MoveKind::R3})) {
        if (moves::apply(result.after, s2).after.certificate() == e.certificate()) {
          back = true;
          break;
        }
      }
      CHECK(back);
    }
  }
}

TEST_CASE("smoothings always drop one crossing and stay valid, exhaustive to n = 5") {
  for (const auto& e : embeddings_to(5)) {
    for (int c = 0; c < e.crossings(); ++c) {
      auto result = moves::a_inverse(e, c);
      CHECK(result.after.crossings() == e.crossings() - 1);
      result.after.map().validate();
    }
  }
}

TEST_CASE("strong insertions create strong 2-gons, weak create weak, exhaustive to n = 4") {
  for (const auto& e : embeddings_to(4)) {
    for (const auto& s : moves::enumerate_moves(e, {MoveKind::S2a, MoveKind::W2a})) {
      auto result = moves::apply(e, s);
      auto cdg = chords::chord_diagram(result.after.word());
      // locate the two new crossings via the crossing map
      std::vector<char> is_old(result.after.crossings(), 0);
      for (int v : result.crossing_map)
        if (v >= 0) is_old[v] = 1;
      std::vector<int> fresh;
      for (int v = 0; v < result.after.crossings(); ++v)
        if (!is_old[v]) fresh.push_back(v);
      REQUIRE(fresh.size() == 2);
      bool strong = !chords::interleaved(cdg, fresh[0], fresh[1]);
      CHECK(strong == (s.kind == MoveKind::S2a));
    }
  }
}

TEST_CASE("stale sites are rejected") {
  auto tref = the("1 2 3 1 2 3");
  CHECK_THROWS_AS(moves::apply(tref, MoveSite{MoveKind::R1b, 0, -1}), moves::InvalidSite);
  CHECK_THROWS_AS(moves::apply(tref, MoveSite{MoveKind::S2b, 99, -1}), moves::InvalidSite);
  CHECK_THROWS_AS(moves::apply(tref, MoveSite{MoveKind::W2a, 3, 3}), moves::InvalidSite);
}
