#include "mikado/braid.hpp"

#include <algorithm>
#include <sstream>

namespace mikado {

BraidWord lift_on_word(const CoxeterSystem& sys, const std::vector<int>& word,
                       const BiclosedSet& A) {
  Element w = from_word(sys, word);
  if (length(sys, w) != static_cast<int>(word.size()))
    throw std::invalid_argument("word is not reduced");

  // Walk i = k..1 keeping suffix = s_k...s_{i+1}; the conjugate's root
  // suffix(alpha_{s_i}) is positive because appending s_i keeps the suffix
  // of the reversed word reduced.
  const int k = static_cast<int>(word.size());
  BraidWord beta(k);
  Element suffix = Element::identity(sys.rank);
  for (int i = k - 1; i >= 0; --i) {
    Root alpha(sys.rank, 0);
    alpha[word[i]] = 1;
    Root rho = suffix.apply(alpha);
    beta[i] = {word[i], A.contains(sys, rho) ? -1 : +1};
    suffix = suffix * simple_reflection(sys, word[i]);
  }
  return beta;
}

BraidWord lift(const CoxeterSystem& sys, const Element& x, const BiclosedSet& A) {
  return lift_on_word(sys, reduced_word(sys, x), A);
}

std::vector<BraidWord> lift_all(const CoxeterSystem& sys, const Element& x,
                                const BiclosedSet& A) {
  std::vector<BraidWord> out;
  for (const auto& word : all_reduced_words(sys, x))
    out.push_back(lift_on_word(sys, word, A));
  return out;
}

HeckeElt eval_braid(const HeckeAlgebra& alg, const BraidWord& beta) {
  HeckeElt h = alg.one();
  for (const BraidLetter& l : beta) h = alg.mul_gen(h, l.gen, Side::Right, l.sign);
  return h;
}

HeckeElt t_twisted(const HeckeAlgebra& alg, const Element& x,
                   const BiclosedSet& A) {
  return eval_braid(alg, lift(alg.system(), x, A));
}

Int sign_sum(const BraidWord& beta) {
  Int s = 0;
  for (const BraidLetter& l : beta) s += l.sign;
  return s;
}

BraidWord free_reduce(BraidWord beta) {
  BraidWord out;
  for (const BraidLetter& l : beta) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string format_braid(const CoxeterSystem& sys, const BraidWord& beta) {
  if (beta.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (i) out += ' ';
    out += sys.gens[beta[i].gen];
    if (beta[i].sign < 0) out += "^-1";
  }
  return out;
}

BraidWord parse_braid(const CoxeterSystem& sys, const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "e") return {};
  BraidWord beta;
  for (std::string tok : tokens) {
    int sign = +1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      sign = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    int idx = sys.gen_index(tok);
    if (idx < 0) throw std::invalid_argument("unknown generator '" + tok + "'");
    beta.push_back({idx, sign});
  }
  return beta;
}

}  // namespace mikado
