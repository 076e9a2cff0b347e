#include "curves/word.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace curves::word {

namespace {

// First-appearance relabeling: the k-th distinct label becomes k+1.
std::vector<int> relabel(const std::vector<int>& seq) {
  std::vector<int> out;
  out.reserve(seq.size());
  std::map<int, int> next;
  for (int x : seq) {
    auto [it, inserted] = next.emplace(x, static_cast<int>(next.size()) + 1);
    out.push_back(it->second);
  }
  return out;
}

std::vector<int> rotated(const std::vector<int>& seq, std::size_t r) {
  std::vector<int> out;
  out.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out.push_back(seq[(i + r) % seq.size()]);
  return out;
}

}  // namespace

GaussWord GaussWord::from_letters(std::vector<int> letters) {
  std::map<int, int> count;
  for (int x : letters) ++count[x];
  for (const auto& [label, c] : count) {
    if (c != 2) {
      throw std::invalid_argument("label " + std::to_string(label) + " occurs " +
                                  std::to_string(c) + " times, expected 2");
    }
  }
  if (count.size() > 120) throw std::invalid_argument("too many crossings");
  GaussWord w;
  w.letters_ = relabel(letters);
  return w;
}

std::string GaussWord::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

GaussWord parse(const std::string& text) {
  std::vector<int> letters;
  std::string token;
  bool after_comma = false;
  auto flush = [&](bool comma_boundary) {
    if (token.empty()) {
      if (comma_boundary && after_comma) {
        throw ParseError(ParseError::Kind::EmptyToken, "empty token between commas");
      }
      return;
    }
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      throw ParseError(ParseError::Kind::BadToken, "bad token: " + token);
    }
    if (used != token.size() || value < 0) {
      throw ParseError(ParseError::Kind::BadToken, "bad token: " + token);
    }
    letters.push_back(static_cast<int>(value));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush(true);
      after_comma = true;
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush(false);
    } else {
      token += c;
    }
  }
  flush(false);
  try {
    return GaussWord::from_letters(std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Kind::NotDoubleOccurrence, e.what());
  }
}

CanonicalForm canonicalize(const GaussWord& w) {
  const std::vector<int>& seq = w.letters();
  std::vector<int> best = seq.empty() ? std::vector<int>{} : relabel(seq);
  std::vector<int> reversed(seq.rbegin(), seq.rend());
  for (int refl = 0; refl < 2; ++refl) {
    const std::vector<int>& base = refl ? reversed : seq;
    for (std::size_t r = 0; r < seq.size(); ++r) {
      std::vector<int> cand = relabel(rotated(base, r));
      if (cand < best) best = std::move(cand);
    }
  }
  CanonicalForm cf;
  cf.word = GaussWord::from_letters(best);
  cf.certificate.reserve(best.size());
  for (int x : best) cf.certificate += static_cast<char>(x);
  return cf;
}

std::string to_hex(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 0xf];
  }
  return out;
}

std::set<GaussWord> symmetry_orbit(const GaussWord& w) {
  std::set<GaussWord> orbit;
  const std::vector<int>& seq = w.letters();
  if (seq.empty()) {
    orbit.insert(w);
    return orbit;
  }
  std::vector<int> reversed(seq.rbegin(), seq.rend());
  for (int refl = 0; refl < 2; ++refl) {
    const std::vector<int>& base = refl ? reversed : seq;
    for (std::size_t r = 0; r < seq.size(); ++r) {
      orbit.insert(GaussWord::from_letters(rotated(base, r)));
    }
  }
  return orbit;
}

bool parity_filter(const GaussWord& w) {
  const int n = w.crossings();
  const std::vector<int>& seq = w.letters();
  std::vector<std::array<int, 2>> pos(n + 1, {-1, -1});
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    auto& p = pos[seq[i]];
    (p[0] < 0 ? p[0] : p[1]) = i;
  }
  for (int a = 1; a <= n; ++a) {
    int deg = 0;
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      bool in0 = pos[a][0] < pos[b][0] && pos[b][0] < pos[a][1];
      bool in1 = pos[a][0] < pos[b][1] && pos[b][1] < pos[a][1];
      if (in0 != in1) ++deg;
    }
    if (deg % 2) return false;
  }
  return true;
}

}  // namespace curves::word
