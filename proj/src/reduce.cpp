#include "curves/reduce.hpp"

#include <algorithm>
#include <map>

#include "curves/chords.hpp"

namespace curves::reduce {

namespace {

using cmap::Embedding;
using moves::MoveEvent;
using moves::MoveKind;
using moves::MoveSite;

const std::set<MoveKind> kDecreasing12 = {MoveKind::R1b, MoveKind::S2b, MoveKind::W2b};
const std::set<MoveKind> kDecreasingStrong = {MoveKind::R1b, MoveKind::S2b};

MoveEvent event_for(const Embedding& before, const Embedding& after, const MoveSite& s) {
  return MoveEvent{s.kind, s, before.certificate_hex(), after.certificate_hex()};
}

bool inversion_closed(const std::set<MoveKind>& kinds) {
  auto paired = [&](MoveKind x, MoveKind y) { return kinds.count(x) == kinds.count(y); };
  return !kinds.count(MoveKind::AInv) && paired(MoveKind::R1a, MoveKind::R1b) &&
         paired(MoveKind::S2a, MoveKind::S2b) && paired(MoveKind::W2a, MoveKind::W2b);
}

}  // namespace

std::pair<Embedding, ReductionTrace> reduce_to_pr(const Embedding& e) {
  ReductionTrace trace;
  trace.start_cert = e.certificate_hex();
  Embedding cur = e;
  while (true) {
    auto sites = moves::enumerate_moves(cur, kDecreasing12);
    if (sites.empty()) break;
    auto result = moves::apply(cur, sites.front());
    trace.events.push_back(event_for(cur, result.after, sites.front()));
    cur = std::move(result.after);
  }
  trace.end_cert = cur.certificate_hex();
  return {std::move(cur), std::move(trace)};
}

const std::optional<std::string>& PrUniqueness::endpoints(const Embedding& e) {
  auto it = endpoint_.find(e.certificate());
  if (it != endpoint_.end()) return it->second;
  auto sites = moves::enumerate_moves(e, kDecreasing12);
  std::optional<std::string> value;
  if (sites.empty()) {
    value = e.certificate();
  } else {
    for (const auto& s : sites) {
      const auto& sub = endpoints(moves::apply(e, s).after);
      if (!sub || (value && *sub != *value)) {
        value.reset();
        break;
      }
      value = sub;
    }
  }
  return endpoint_.emplace(e.certificate(), std::move(value)).first->second;
}

bool PrUniqueness::check(const Embedding& e) { return endpoints(e).has_value(); }

bool pr_uniqueness_check(const Embedding& e) {
  PrUniqueness p;
  return p.check(e);
}

bool StrongBuildSearch::reachable(const Embedding& e) {
  if (e.crossings() == 0) return true;
  auto it = memo_.find(e.certificate());
  if (it != memo_.end()) return it->second;
  bool ok = false;
  for (const auto& s : moves::enumerate_moves(e, kDecreasingStrong)) {
    if (reachable(moves::apply(e, s).after)) {
      ok = true;
      break;
    }
  }
  return memo_.emplace(e.certificate(), ok).first->second;
}

std::optional<ReductionTrace> StrongBuildSearch::check(const Embedding& e) {
  if (!reachable(e)) return std::nullopt;
  ReductionTrace trace;
  trace.start_cert = e.certificate_hex();
  Embedding cur = e;
  while (cur.crossings() > 0) {
    bool advanced = false;
    for (const auto& s : moves::enumerate_moves(cur, kDecreasingStrong)) {
      auto result = moves::apply(cur, s);
      if (reachable(result.after)) {
        trace.events.push_back(event_for(cur, result.after, s));
        cur = std::move(result.after);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("reachable state lost its descent");
  }
  trace.end_cert = cur.certificate_hex();
  return trace;
}

std::optional<ReductionTrace> strong_build_check(const Embedding& e) {
  StrongBuildSearch s;
  return s.check(e);
}

cmap::Embedding replay_reversed(const ReductionTrace& trace) {
  Embedding cur = Embedding::circle();
  const std::set<MoveKind> increasing = {MoveKind::R1a, MoveKind::S2a, MoveKind::W2a};
  for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
    const std::string& target = it->before_cert;
    bool found = false;
    for (const auto& s : moves::enumerate_moves(cur, increasing)) {
      auto result = moves::apply(cur, s);
      if (result.after.certificate_hex() == target) {
        cur = std::move(result.after);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no increasing move rebuilds the recorded state");
  }
  if (cur.certificate_hex() != trace.start_cert)
    throw std::logic_error("replayed build does not reach the start curve");
  return cur;
}

namespace {

struct SearchSide {
  struct Link {
    std::string parent;
    MoveEvent event;  // parent -> child, in this side's application direction
  };
  std::map<std::string, Link> seen;
  std::map<std::string, Embedding> frontier;
};

// Forward events from `from` along the certificate chain, found by matching
// move results; every chain edge is realizable because the kind set is
// inversion-closed.
std::vector<MoveEvent> walk_chain(const Embedding& from, const std::vector<std::string>& certs,
                                  const std::set<MoveKind>& kinds) {
  std::vector<MoveEvent> out;
  Embedding cur = from;
  for (const std::string& next : certs) {
    bool found = false;
    for (const auto& s : moves::enumerate_moves(cur, kinds)) {
      auto result = moves::apply(cur, s);
      if (result.after.certificate() == next) {
        out.push_back(event_for(cur, result.after, s));
        cur = std::move(result.after);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("search chain has no realizing move");
  }
  return out;
}

}  // namespace

HomotopyResult homotopy_reachable(const Embedding& a, const Embedding& b,
                                  const std::set<MoveKind>& kinds, int max_n) {
  if (max_n < a.crossings() || max_n < b.crossings())
    throw BoundTooSmall("max crossing bound below an endpoint");
  HomotopyResult out{Reach::NoWithinBound, {}, max_n};
  if (a == b) {
    out.reach = Reach::Yes;
    return out;
  }

  const bool two_sided = inversion_closed(kinds);
  SearchSide side[2];
  side[0].seen.emplace(a.certificate(), SearchSide::Link{});
  side[0].frontier.emplace(a.certificate(), a);
  if (two_sided) {
    side[1].seen.emplace(b.certificate(), SearchSide::Link{});
    side[1].frontier.emplace(b.certificate(), b);
  }

  auto chain_to_root = [&](int which, std::string cert) {
    std::vector<MoveEvent> events;
    const std::string root = which == 0 ? a.certificate() : b.certificate();
    while (cert != root) {
      const auto& link = side[which].seen.at(cert);
      events.push_back(link.event);
      cert = link.parent;
    }
    std::reverse(events.begin(), events.end());
    return events;  // root -> cert, in application order of that side
  };

  auto join = [&](const Embedding& meet) {
    out.reach = Reach::Yes;
    out.trace = chain_to_root(0, meet.certificate());
    if (two_sided) {
      std::vector<std::string> back;
      std::string cert = meet.certificate();
      while (cert != b.certificate()) {
        cert = side[1].seen.at(cert).parent;
        back.push_back(cert);
      }
      auto tail = walk_chain(meet, back, kinds);
      out.trace.insert(out.trace.end(), tail.begin(), tail.end());
    }
    return out;
  };

  while (!side[0].frontier.empty() && (!two_sided || !side[1].frontier.empty())) {
    int which = 0;
    if (two_sided && side[1].frontier.size() < side[0].frontier.size()) which = 1;
    std::map<std::string, Embedding> next;
    for (const auto& [cert, cur] : side[which].frontier) {
      for (const auto& s : moves::enumerate_moves(cur, kinds)) {
        if (cur.crossings() + moves::kind_delta(s.kind) > max_n) continue;
        auto result = moves::apply(cur, s);
        const std::string& rc = result.after.certificate();
        if (side[which].seen.count(rc)) continue;
        side[which].seen.emplace(rc, SearchSide::Link{cert, event_for(cur, result.after, s)});
        bool met = which == 0 ? (two_sided ? side[1].seen.count(rc) > 0 : result.after == b)
                              : side[0].seen.count(rc) > 0;
        if (met) return join(result.after);
        next.emplace(rc, std::move(result.after));
      }
    }
    side[which].frontier = std::move(next);
  }
  return out;
}

std::optional<Reductivity> reductivity(const Embedding& e, int max_depth) {
  if (e.crossings() == 0) return Reductivity{0, {}, true};
  auto is_reducible = [](const Embedding& emb) {
    return !chords::reducible_chords(chords::chord_diagram(emb.word())).empty();
  };
  struct Node {
    Embedding emb;
    std::vector<int> witness;
  };
  std::vector<Node> layer{{e, {}}};
  std::set<std::string> seen{e.certificate()};
  for (int depth = 0; depth <= max_depth; ++depth) {
    for (const auto& node : layer) {
      if (node.emb.crossings() > 0 && is_reducible(node.emb))
        return Reductivity{depth, node.witness, false};
    }
    if (depth == max_depth) break;
    std::vector<Node> next;
    for (const auto& node : layer) {
      for (int c = 0; c < node.emb.crossings(); ++c) {
        auto result = moves::a_inverse(node.emb, c);
        if (!seen.insert(result.after.certificate()).second) continue;
        std::vector<int> witness = node.witness;
        witness.push_back(c);
        next.push_back({std::move(result.after), std::move(witness)});
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return std::nullopt;
}

}  // namespace curves::reduce
