#pragma once

#include "mikado/biclosed.hpp"
#include "mikado/coxeter.hpp"
#include "mikado/laurent.hpp"

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

namespace mikado {

// An element of the Iwahori-Hecke algebra over Z[v, v^-1], stored on the
// T-basis: T_s^2 = (v^-2 - 1) T_s + v^-2. The map is kept free of zero
// coefficients.
class HeckeElt {
 public:
  const std::map<Element, Laurent>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Laurent coeff(const Element& w) const;
  void add(const Element& w, const Laurent& p);

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const Laurent& p) const;
  bool operator==(const HeckeElt& o) const { return c_ == o.c_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

 private:
  std::map<Element, Laurent> c_;
};

enum class Side { Left, Right };

enum class Basis { T, H, C, CPrime, TwistedT };

// Multiplication, the two involutions, and the canonical bases, bound to
// one Coxeter system. The C' table is memoized write-once; concurrent
// lookups take a shared lock and a duplicated computation is tolerated.
// MIKADO_KL_CACHE_CAP bounds the entry count (unset: unlimited).
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const CoxeterSystem& sys);

  const CoxeterSystem& system() const { return sys_; }

  HeckeElt one() const;
  HeckeElt t_basis(const Element& w) const;
  // H_w = v^(length w) T_w.
  HeckeElt h_basis(const Element& w) const;

  // h * T_s^power (Right) or T_s^power * h (Left), power in {+1, -1}.
  HeckeElt mul_gen(const HeckeElt& h, int s, Side side, int power) const;
  // h * T_w^sign along the canonical word of w.
  HeckeElt mul_t(const HeckeElt& h, const Element& w, int sign = +1) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  // v -> v^-1, T_w -> (T_{w^-1})^-1.
  HeckeElt bar(const HeckeElt& h) const;
  // v -> v^-1, T_s -> -v^2 T_s; an involution commuting with bar.
  HeckeElt j_involution(const HeckeElt& h) const;

  // Kazhdan-Lusztig bases: cprime(w) = H_w + sum_{y<w} (v Z[v]) H_y and
  // c(w) = H_w + sum (v^-1 Z[v^-1]) H_y, both bar-invariant; they are
  // exchanged by j up to the sign (-1)^length(w).
  HeckeElt cprime(const Element& w) const;
  HeckeElt c(const Element& w) const;

  // Coefficients of h on the requested basis. TwistedT needs the set A;
  // `twisted_cache` may carry the basis elements T_{x,A} across calls that
  // share one A (keyed by x, filled on demand).
  std::map<Element, Laurent> expand(
      const HeckeElt& h, Basis basis, const BiclosedSet* A = nullptr,
      std::map<Element, HeckeElt>* twisted_cache = nullptr) const;

  std::size_t cache_size() const;

 private:
  const CoxeterSystem& sys_;
  std::size_t cache_cap_;
  mutable std::map<Element, HeckeElt> cp_cache_;
  mutable std::shared_mutex mu_;

  HeckeElt cprime_uncached(const Element& w) const;
  HeckeElt cached_or_compute(const Element& w) const;
};

// Serialization order for Hecke supports: (length, canonical word).
std::vector<std::pair<Element, Laurent>> sorted_terms(
    const CoxeterSystem& sys, const std::map<Element, Laurent>& terms);
std::vector<std::pair<Element, Laurent>> sorted_terms(
    const CoxeterSystem& sys, const HeckeElt& h);

}  // namespace mikado
