#include <string>
#include <utility>
#include <vector>

#include "coeff_detail.hpp"
#include "gradex/coeff.hpp"

namespace gradex {

LeavittWord lword(std::initializer_list<LGen> gens) {
  LeavittWord w;
  w.reserve(gens.size());
  for (auto g : gens) w.push_back(static_cast<char>(g));
  return w;
}

std::string leavitt_word_text(const LeavittWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    switch (static_cast<LGen>(w[i])) {
      case LGen::x1: out += "x1"; break;
      case LGen::x2: out += "x2"; break;
      case LGen::y1: out += "y1"; break;
      case LGen::y2: out += "y2"; break;
      default: throw domain_error("corrupt Leavitt word");
    }
  }
  return out;
}

namespace detail {

namespace {

constexpr char kX1 = static_cast<char>(LGen::x1);
constexpr char kX2 = static_cast<char>(LGen::x2);
constexpr char kY1 = static_cast<char>(LGen::y1);
constexpr char kY2 = static_cast<char>(LGen::y2);

struct Replacement {
  int coef;
  const char* infix;
};

// Two-letter redexes; at most one rule matches a given position.
//   y1 x1 -> 1            y2 x2 -> 1
//   y1 x2 -> 0            y2 x1 -> 0
//   x2 y2 -> 1 - x1 y1    (x1 y1 itself is irreducible)
const std::vector<Replacement>* match_rule(char a, char b) {
  static const std::vector<Replacement> kOne = {{1, ""}};
  static const std::vector<Replacement> kZero = {};
  static const std::vector<Replacement> kSplit = {{1, ""}, {-1, "Aa"}};  // 1 - x1*y1
  if (a == kY1 && b == kX1) return &kOne;
  if (a == kY2 && b == kX2) return &kOne;
  if (a == kY1 && b == kX2) return &kZero;
  if (a == kY2 && b == kX1) return &kZero;
  if (a == kX2 && b == kY2) return &kSplit;
  return nullptr;
}

}  // namespace

LeavittValue leavitt_nf_terms(const std::vector<std::pair<Rational, LeavittWord>>& terms,
                              std::int64_t base_p) {
  LeavittValue out;
  std::vector<std::pair<Rational, LeavittWord>> work(terms.begin(), terms.end());
  while (!work.empty()) {
    auto [coef, word] = std::move(work.back());
    work.pop_back();
    coef = reduce_base_scalar(coef, base_p);
    if (coef == 0) continue;

    const std::vector<Replacement>* rule = nullptr;
    std::size_t pos = 0;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if ((rule = match_rule(word[k], word[k + 1])) != nullptr) {
        pos = k;
        break;
      }
    }
    if (!rule) {
      Rational& slot = out[word];
      slot = reduce_base_scalar(slot + coef, base_p);
      if (slot == 0) out.erase(word);
      continue;
    }
    for (const auto& repl : *rule) {
      LeavittWord next = word.substr(0, pos);
      next += repl.infix;
      next += word.substr(pos + 2);
      work.emplace_back(coef * repl.coef, std::move(next));
    }
  }
  return out;
}

}  // namespace detail

RingElement leavitt_normal_form(const std::vector<std::pair<Rational, LeavittWord>>& terms,
                                const RingSpec& spec) {
  if (spec.variant() != RingVariant::leavitt)
    throw domain_error("leavitt_normal_form requires a Leavitt ring spec");
  for (const auto& [coef, word] : terms)
    for (char c : word)
      if (c != static_cast<char>(LGen::x1) && c != static_cast<char>(LGen::x2) &&
          c != static_cast<char>(LGen::y1) && c != static_cast<char>(LGen::y2))
        throw domain_error("Leavitt word contains a letter outside {x1,x2,y1,y2}");
  return RingElement{detail::leavitt_nf_terms(terms, spec.prime())};
}

}  // namespace gradex
