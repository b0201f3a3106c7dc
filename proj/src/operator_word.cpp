// Oracle for delta^2: expands delta o delta as a noncommutative operator word with k[t]
// coefficients and normalizes it with the Lie relations, without using the closed formula.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "folclass/derivation.hpp"
#include "folclass/error.hpp"

namespace folclass {

namespace {

enum class Letter { Alpha, Beta, Dt };
using Word = std::vector<Letter>;
using OperatorExpr = std::map<Word, Poly>;

void accumulate(OperatorExpr& expr, const Word& w, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = expr.try_emplace(w, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) expr.erase(it);
  }
}

// Rewrites a word to normal form: letters commute, d/dt^2 = 0, alpha^2 and beta^2 per case.
std::optional<Word> normalize(Word w, LieCase lie_case) {
  for (;;) {
    std::sort(w.begin(), w.end());
    const auto count = [&](Letter l) { return std::count(w.begin(), w.end(), l); };
    if (count(Letter::Dt) >= 2) return std::nullopt;
    bool changed = false;
    for (auto [letter, square] : {std::pair{Letter::Alpha, lie_case.alpha_sq()},
                                  std::pair{Letter::Beta, lie_case.beta_sq()}}) {
      if (count(letter) < 2) continue;
      if (square == Square::Zero) return std::nullopt;
      auto it = std::find(w.begin(), w.end(), letter);
      w.erase(it, it + 2);
      w.push_back(square == Square::Alpha ? Letter::Alpha : Letter::Beta);
      changed = true;
      break;
    }
    if (!changed) return w;
  }
}

// The word w applied after multiplication by g, written as sum of h * V with coefficients on
// the left: L g = g L + L(g), where alpha(g) = beta(g) = 0 and d/dt(g) = g'.
std::vector<std::pair<Poly, Word>> move_coefficient_left(const Word& w, const Poly& g) {
  std::vector<std::pair<Poly, Word>> terms{{g, Word{}}};
  for (std::size_t i = w.size(); i-- > 0;) {
    const Letter letter = w[i];
    std::vector<std::pair<Poly, Word>> next;
    for (auto& [h, v] : terms) {
      Word lv{letter};
      lv.insert(lv.end(), v.begin(), v.end());
      next.emplace_back(h, std::move(lv));
      if (letter == Letter::Dt) {
        Poly dh = h.derivative();
        if (!dh.is_zero()) next.emplace_back(std::move(dh), v);
      }
    }
    terms = std::move(next);
  }
  return terms;
}

OperatorExpr compose(const OperatorExpr& x, const OperatorExpr& y, LieCase lie_case) {
  OperatorExpr out;
  for (const auto& [w1, f] : x)
    for (const auto& [w2, g] : y)
      for (const auto& [h, v] : move_coefficient_left(w1, g)) {
        Word w = v;
        w.insert(w.end(), w2.begin(), w2.end());
        if (auto normal = normalize(std::move(w), lie_case)) accumulate(out, *normal, f * h);
      }
  return out;
}

}  // namespace

SquaredDerivation oracle_delta_squared(const DerivationTriple& d) {
  OperatorExpr delta;
  accumulate(delta, {Letter::Alpha}, d.a());
  accumulate(delta, {Letter::Beta}, d.b());
  accumulate(delta, {Letter::Dt}, d.c());
  OperatorExpr sq = compose(delta, delta, d.lie_case());

  const Poly zero(d.field());
  SquaredDerivation out{zero, zero, zero};
  for (const auto& [w, coeff] : sq) {
    if (w == Word{Letter::Alpha}) {
      out.A = coeff;
    } else if (w == Word{Letter::Beta}) {
      out.B = coeff;
    } else if (w == Word{Letter::Dt}) {
      out.C = coeff;
    } else {
      throw ConsistencyError("delta^2 of " + d.to_string() +
                             " has a nonzero component outside span(alpha, beta, d/dt)");
    }
  }
  return out;
}

}  // namespace folclass
