#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mikado {

using Int = std::int64_t;
// Coordinates of a vector in the root lattice, in the basis of simple roots.
using Root = std::vector<Int>;

// Thrown when a configuration (system or biclosed set) fails validation.
// Carries one message per problem so a bad file is diagnosed in one pass.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// A Coxeter system with a fixed integral realization. coxeter[s][t] is the
// bond label m_st with 0 standing for infinity; cartan[s][t] is the integer
// a_st with s(alpha_t) = alpha_t - a_st * alpha_s.
struct CoxeterSystem {
  std::string name;
  int rank = 0;
  std::vector<std::string> gens;
  std::vector<std::vector<int>> coxeter;
  std::vector<std::vector<Int>> cartan;

  int gen_index(const std::string& g) const;  // -1 if unknown
};

// Validates the Coxeter matrix (labels in {2,3,4,6,inf} off-diagonal) and
// the Cartan matrix (a_ss = 2, off-diagonal <= 0, a_st*a_ts = 4cos^2(pi/m)),
// filling in the default Cartan entries when none are given: m=2 -> (0,0),
// m=3 -> (-1,-1), m=4 -> (-1,-2), m=6 -> (-1,-3), m=inf -> (-2,-2), the
// lopsided entry going to the larger generator index.
CoxeterSystem make_system(std::string name, std::vector<std::string> gens,
                          std::vector<std::vector<int>> coxeter,
                          std::optional<std::vector<std::vector<Int>>> cartan =
                              std::nullopt);

// A group element as its integer matrix on the root lattice (columns are the
// images of the simple roots). Comparison is entrywise lexicographic, which
// gives map keys a deterministic order; anything user-visible is re-sorted
// by (length, canonical word).
class Element {
 public:
  Element() = default;
  static Element identity(int rank);

  int rank() const { return rank_; }
  Int at(int i, int j) const { return m_[i * rank_ + j]; }
  Int& at(int i, int j) { return m_[i * rank_ + j]; }

  Element operator*(const Element& o) const;
  Root apply(const Root& r) const;
  bool is_identity() const;

  auto operator<=>(const Element&) const = default;

 private:
  int rank_ = 0;
  std::vector<Int> m_;
};

Element simple_reflection(const CoxeterSystem& sys, int s);
Element from_word(const CoxeterSystem& sys, const std::vector<int>& word);

// True if every coordinate is <= 0 / >= 0 and the vector is nonzero. Images
// of roots under group elements are always one or the other.
bool is_negative_vec(const Root& r);
bool is_positive_vec(const Root& r);
// Flips a negative vector positive; positive vectors pass through.
Root normalize_root(Root r);

std::vector<int> right_descents(const CoxeterSystem& sys, const Element& w);
bool has_right_descent(const CoxeterSystem& sys, const Element& w, int s);

Element inverse(const CoxeterSystem& sys, const Element& w);
int length(const CoxeterSystem& sys, const Element& w);

// The canonical reduced word: lexicographically minimal, obtained by
// repeatedly stripping the smallest-index left descent.
std::vector<int> reduced_word(const CoxeterSystem& sys, const Element& w);
// Every reduced word, in lexicographic order.
std::vector<std::vector<int>> all_reduced_words(const CoxeterSystem& sys,
                                                const Element& w);

// Left inversion set N(w) = {positive roots alpha : w^-1(alpha) < 0} as a
// lex-sorted vector of roots; |N(w)| = length(w).
std::vector<Root> left_inversion_set(const CoxeterSystem& sys,
                                     const Element& w);

// The reflection whose positive root is alpha; throws std::invalid_argument
// if alpha is not a positive root of this realization.
Element reflection_of_root(const CoxeterSystem& sys, const Root& alpha);
// Inverse direction; std::nullopt if t is not a reflection.
std::optional<Root> root_of_reflection(const CoxeterSystem& sys,
                                       const Element& t);
// Depth certificate for membership queries: the length of the reflection
// with root alpha (= 2*walk depth - 1). Throws on non-roots.
int reflection_length_of_root(const CoxeterSystem& sys, const Root& alpha);

bool bruhat_leq(const CoxeterSystem& sys, const Element& u, const Element& w);

// All elements of length <= radius, sorted by (length, canonical word).
std::vector<Element> ball(const CoxeterSystem& sys, int radius);

// Positive roots of the reflections of length <= radius, lex-sorted.
std::vector<Root> positive_roots_on_ball(const CoxeterSystem& sys, int radius);

// Words over the generator names: "s t s" (the identity is "e"). Parsing
// also accepts glued single-character names, so "tsr" means "t s r".
std::string format_word(const CoxeterSystem& sys, const std::vector<int>& word);
std::string format_element(const CoxeterSystem& sys, const Element& w);
std::vector<int> parse_word(const CoxeterSystem& sys, const std::string& text);
Element parse_element(const CoxeterSystem& sys, const std::string& text);
std::string format_root(const Root& r);

}  // namespace mikado
