#pragma once

#include "mikado/biclosed.hpp"
#include "mikado/coxeter.hpp"
#include "mikado/hecke.hpp"

#include <string>
#include <vector>

namespace mikado {

// One letter of a signed braid word: generator index and sign in {+1,-1}.
struct BraidLetter {
  int gen;
  int sign;
  bool operator==(const BraidLetter&) const = default;
};
using BraidWord = std::vector<BraidLetter>;

// Sign the letters of a reduced word s_1...s_k by A: letter i gets -1
// exactly when the suffix conjugate s_k...s_i...s_k lies in A, detected via
// its positive root s_k...s_{i+1}(alpha_{s_i}). The suffix conjugates of a
// reduced word of x run over N(x^-1) exactly, so the sign sum is ell_A(x).
// Throws std::invalid_argument if the word is not reduced.
BraidWord lift_on_word(const CoxeterSystem& sys, const std::vector<int>& word,
                       const BiclosedSet& A);

// The lift at the canonical reduced word of x.
BraidWord lift(const CoxeterSystem& sys, const Element& x, const BiclosedSet& A);

// Lifts at every reduced word of x, in lexicographic word order. All of
// them evaluate to the same Hecke element.
std::vector<BraidWord> lift_all(const CoxeterSystem& sys, const Element& x,
                                const BiclosedSet& A);

// Image in the Hecke algebra: the ordered product of T_{s_i}^{sign_i}.
HeckeElt eval_braid(const HeckeAlgebra& alg, const BraidWord& beta);

// The twisted standard basis element T_{x,A} = eval_braid(lift(x, A)).
HeckeElt t_twisted(const HeckeAlgebra& alg, const Element& x,
                   const BiclosedSet& A);

Int sign_sum(const BraidWord& beta);

// Cancel adjacent inverse pairs until none remain (reduction in the free
// group; meaningful as a normal form when the braid group is free).
BraidWord free_reduce(BraidWord beta);

// Text form "t s^-1 r"; parsing accepts the same tokens.
std::string format_braid(const CoxeterSystem& sys, const BraidWord& beta);
BraidWord parse_braid(const CoxeterSystem& sys, const std::string& text);

}  // namespace mikado
