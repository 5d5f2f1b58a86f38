#pragma once

#include "mikado/coxeter.hpp"
#include "mikado/laurent.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mikado {

// Membership query on an explicit-ball set for a root deeper than its
// certificate covers.
class DepthExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set of reflections, identified with the set of their positive roots.
// Five membership rules:
//   inversion(y)            N(y)
//   complement(A)           all reflections minus A
//   half_space(f)           {alpha : f(alpha) > 0}, f a rational covector
//   explicit_on_ball(R, d)  listed roots, queryable up to reflection length d
//   twist(y, A)             N(y) symmetric-difference y A y^-1
// The twist rule exists so double_twist can return a set queryable at any
// depth; it never appears in configs. Membership is always decided exactly.
class BiclosedSet {
 public:
  enum class Kind { Inversion, Complement, HalfSpace, Explicit, Twist };

  static BiclosedSet inversion(const CoxeterSystem& sys, const Element& y);
  static BiclosedSet complement(BiclosedSet inner);
  // Covector as integer numerators over one denominator; only signs of
  // values matter, so rational input is cleared to this form upfront.
  static BiclosedSet half_space(std::vector<Coeff> covector);
  static BiclosedSet explicit_on_ball(const CoxeterSystem& sys,
                                      std::vector<Root> roots,
                                      int certified_depth);
  static BiclosedSet twist(const CoxeterSystem& sys, const Element& y,
                           BiclosedSet inner);
  static BiclosedSet empty(const CoxeterSystem& sys);   // N(e)
  static BiclosedSet all(const CoxeterSystem& sys);     // complement of N(e)

  Kind kind() const;
  // True when biclosedness holds a priori (inversion sets, their
  // complements, half-spaces, and twists of such); explicit sets need the
  // ball checker.
  bool a_priori_biclosed() const;
  bool contains(const CoxeterSystem& sys, const Root& positive_root) const;
  std::string describe(const CoxeterSystem& sys) const;

  // N(y) Δ yAy^-1 for A = *this; prefer the free double_twist below.
  BiclosedSet twisted_by(const CoxeterSystem& sys, const Element& y) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

// ell_A(w) = ell(w) - 2 |N(w^-1) ∩ A|.
Int twisted_length(const CoxeterSystem& sys, const BiclosedSet& A,
                   const Element& w);

// For a reflection t with positive root `t_root`: is x*t below or above x in
// the A-twisted order? Down exactly when t lies in N(x^-1) Δ A.
enum class CoverDir { Down, Up };
CoverDir cover_direction(const CoxeterSystem& sys, const BiclosedSet& A,
                         const Element& x, const Root& t_root);

// N(y) Δ yAy^-1, normalized to an inversion set (or complement of one) when
// the cocycle identity collapses it: double_twist(N(z), y) = N(yz).
BiclosedSet double_twist(const CoxeterSystem& sys, const BiclosedSet& A,
                         const Element& y);

// Restriction of the A-twisted order to a metric ball. `edges` holds every
// covering candidate (u, u*t) with ell_A increasing, `hasse` its transitive
// reduction, `closure` full reachability. Indices refer to `elements`,
// which is sorted by (length, canonical word).
struct TwistedOrder {
  std::vector<Element> elements;
  std::vector<Int> ell;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> hasse;
  std::vector<std::vector<bool>> closure;

  int index_of(const Element& w) const;
  bool leq(int i, int j) const { return i == j || closure[i][j]; }
};

TwistedOrder twisted_order_on_ball(const CoxeterSystem& sys,
                                   const BiclosedSet& A, int radius);

// Interleaved enumeration x_0, x_1 = s x_0, x_2, x_3 = s x_2, ... of an
// s-stable set: even slots list {x : sx above x in the A-twisted order}
// sorted by (ell_A, canonical word), odd slots their s-partners. Throws
// std::invalid_argument if the set is not closed under left mult by s.
std::vector<Element> as_compatible_enumeration(const CoxeterSystem& sys,
                                               const BiclosedSet& A, int s,
                                               std::vector<Element> elems);

// Closure failure found by the checker: gamma is a positive combination of
// a and b yet sits on the wrong side.
struct ConeViolation {
  Root a, b, gamma;
  bool in_complement;  // true: complement not closed; false: the set itself
};

struct BiclosedCheckReport {
  int radius = 0;
  int root_count = 0;
  std::vector<ConeViolation> violations;
  bool certified() const { return violations.empty(); }
};

// Brute-force closure check over all roots of reflections of length <=
// radius: for every pair, any third root in their open positive cone must
// be on the same side as the pair. Exact rational arithmetic throughout.
BiclosedCheckReport is_biclosed_on_ball(const CoxeterSystem& sys,
                                        const BiclosedSet& A, int radius);

// Is gamma in R_{>0} a + R_{>0} b? Exact; handles the parallel case.
bool in_open_cone(const Root& gamma, const Root& a, const Root& b);

}  // namespace mikado
