#include "mikado/hecke.hpp"

#include "mikado/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

namespace mikado {

Laurent HeckeElt::coeff(const Element& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? Laurent() : it->second;
}

void HeckeElt::add(const Element& w, const Laurent& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = c_.try_emplace(w, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) c_.erase(it);
  }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [w, p] : o.c_) r.add(w, p);
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  HeckeElt r = *this;
  for (const auto& [w, p] : o.c_) r.add(w, -p);
  return r;
}

HeckeElt HeckeElt::scaled(const Laurent& p) const {
  HeckeElt r;
  if (p.is_zero()) return r;
  for (const auto& [w, q] : c_) r.add(w, q * p);
  return r;
}

HeckeAlgebra::HeckeAlgebra(const CoxeterSystem& sys) : sys_(sys) {
  cache_cap_ = static_cast<std::size_t>(-1);
  if (const char* cap = std::getenv("MIKADO_KL_CACHE_CAP"))
    cache_cap_ = std::strtoull(cap, nullptr, 10);
}

HeckeElt HeckeAlgebra::one() const { return t_basis(Element::identity(sys_.rank)); }

HeckeElt HeckeAlgebra::t_basis(const Element& w) const {
  HeckeElt h;
  h.add(w, Laurent::constant(1));
  return h;
}

HeckeElt HeckeAlgebra::h_basis(const Element& w) const {
  HeckeElt h;
  h.add(w, Laurent::power(length(sys_, w)));
  return h;
}

HeckeElt HeckeAlgebra::mul_gen(const HeckeElt& h, int s, Side side,
                               int power) const {
  if (power != 1 && power != -1)
    throw std::invalid_argument("generator power must be +1 or -1");
  const Element refl = simple_reflection(sys_, s);
  const Laurent vm2_minus_1 = Laurent::power(-2) - Laurent::constant(1);
  const Laurent vm2 = Laurent::power(-2);
  const Laurent v2 = Laurent::power(2);
  const Laurent v2_minus_1 = Laurent::power(2) - Laurent::constant(1);

  HeckeElt out;
  for (const auto& [w, p] : h.terms()) {
    bool descent = side == Side::Right
                       ? has_right_descent(sys_, w, s)
                       : has_right_descent(sys_, inverse(sys_, w), s);
    Element ws = side == Side::Right ? w * refl : refl * w;
    if (power == 1) {
      if (!descent) {
        out.add(ws, p);
      } else {
        out.add(w, p * vm2_minus_1);
        out.add(ws, p * vm2);
      }
    } else {
      if (!descent) {
        out.add(ws, p * v2);
        out.add(w, p * v2_minus_1);
      } else {
        out.add(ws, p);
      }
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::mul_t(const HeckeElt& h, const Element& w, int sign) const {
  std::vector<int> word = reduced_word(sys_, w);
  HeckeElt out = h;
  if (sign >= 0) {
    for (int s : word) out = mul_gen(out, s, Side::Right, +1);
  } else {
    // T_w^-1 = T_{s_k}^-1 ... T_{s_1}^-1.
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      out = mul_gen(out, *it, Side::Right, -1);
  }
  return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt out;
  for (const auto& [w, p] : b.terms()) out = out + mul_t(a, w).scaled(p);
  return out;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, p] : h.terms()) {
    // bar(T_w) = (T_{w^-1})^-1 = T_{s_1}^-1 ... T_{s_k}^-1 along a reduced
    // word s_1...s_k of w.
    HeckeElt term = one();
    for (int s : reduced_word(sys_, w)) term = mul_gen(term, s, Side::Right, -1);
    out = out + term.scaled(p.bar());
  }
  return out;
}

HeckeElt HeckeAlgebra::j_involution(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [w, p] : h.terms()) {
    int len = length(sys_, w);
    Laurent factor = Laurent::monomial((len % 2) ? -1 : 1, 2 * len);
    out.add(w, p.bar() * factor);
  }
  return out;
}

HeckeElt HeckeAlgebra::cprime_uncached(const Element& w) const {
  std::vector<int> word = reduced_word(sys_, w);
  if (word.empty()) return one();
  const int s = word.front();  // smallest-index left descent
  Element su = from_word(sys_, {word.begin() + 1, word.end()});
  HeckeElt cu = cprime(su);

  // C'_s C'_{su} = v (T_s + 1) C'_{su}.
  HeckeElt prod =
      (mul_gen(cu, s, Side::Left, +1) + cu).scaled(Laurent::power(1));

  // Subtract mu(z, su) C'_z over z < su with sz < z, where mu is the
  // coefficient of v in the H-coordinate of C'_{su} at z.
  for (const auto& [z, p] : cu.terms()) {
    if (z == su) continue;
    Coeff mu = p.coeff(length(sys_, z) + 1);
    if (mu == 0) continue;
    if (!has_right_descent(sys_, inverse(sys_, z), s)) continue;
    prod = prod - cprime(z).scaled(Laurent::constant(mu));
  }
  return prod;
}

HeckeElt HeckeAlgebra::cached_or_compute(const Element& w) const {
  {
    std::shared_lock lk(mu_);
    auto it = cp_cache_.find(w);
    if (it != cp_cache_.end()) return it->second;
  }
  HeckeElt val = cprime_uncached(w);
  {
    std::unique_lock lk(mu_);
    if (cp_cache_.size() < cache_cap_) cp_cache_.emplace(w, val);
  }
  return val;
}

HeckeElt HeckeAlgebra::cprime(const Element& w) const { return cached_or_compute(w); }

HeckeElt HeckeAlgebra::c(const Element& w) const {
  HeckeElt jc = j_involution(cprime(w));
  if (length(sys_, w) % 2) return jc.scaled(Laurent::constant(-1));
  return jc;
}

std::size_t HeckeAlgebra::cache_size() const {
  std::shared_lock lk(mu_);
  return cp_cache_.size();
}

std::map<Element, Laurent> HeckeAlgebra::expand(
    const HeckeElt& h, Basis basis, const BiclosedSet* A,
    std::map<Element, HeckeElt>* twisted_cache) const {
  std::map<Element, Laurent> out;
  if (basis == Basis::T) {
    out = h.terms();
    return out;
  }
  if (basis == Basis::H) {
    for (const auto& [w, p] : h.terms()) out[w] = p.shifted(-length(sys_, w));
    return out;
  }
  if (basis == Basis::TwistedT && !A)
    throw std::invalid_argument("TwistedT expansion needs a biclosed set");

  // All remaining bases are unitriangular against T by decreasing length
  // (with a monomial diagonal), so peel off a maximal-length term each step.
  std::map<Element, HeckeElt> local_cache;
  std::map<Element, HeckeElt>& tw = twisted_cache ? *twisted_cache : local_cache;
  std::map<Element, int> lengths;
  auto len_of = [&](const Element& w) {
    auto it = lengths.find(w);
    if (it == lengths.end()) it = lengths.emplace(w, length(sys_, w)).first;
    return it->second;
  };

  HeckeElt r = h;
  while (!r.is_zero()) {
    const Element* top = nullptr;
    int top_len = -1;
    for (const auto& [w, p] : r.terms())
      if (int l = len_of(w); l > top_len) top_len = l, top = &w;
    Element x = *top;

    Laurent q;
    HeckeElt basis_elt;
    switch (basis) {
      case Basis::C:
        basis_elt = c(x);
        q = r.coeff(x).shifted(-top_len);
        break;
      case Basis::CPrime:
        basis_elt = cprime(x);
        q = r.coeff(x).shifted(-top_len);
        break;
      case Basis::TwistedT: {
        auto it = tw.find(x);
        if (it == tw.end()) it = tw.emplace(x, t_twisted(*this, x, *A)).first;
        basis_elt = it->second;
        // Diagonal entry is v^(ell - ell_A) exactly.
        Int diag = top_len - twisted_length(sys_, *A, x);
        q = r.coeff(x).shifted(static_cast<int>(-diag));
        break;
      }
      default:
        throw std::logic_error("unhandled basis");
    }
    out[x] = q;
    r = r - basis_elt.scaled(q);
    if (!r.coeff(x).is_zero())
      throw std::logic_error("triangular expansion failed to clear the top term");
  }
  return out;
}

std::vector<std::pair<Element, Laurent>> sorted_terms(
    const CoxeterSystem& sys, const std::map<Element, Laurent>& terms) {
  std::vector<std::tuple<std::size_t, std::vector<int>, Element, Laurent>> keyed;
  keyed.reserve(terms.size());
  for (const auto& [w, p] : terms) {
    auto word = reduced_word(sys, w);
    keyed.emplace_back(word.size(), std::move(word), w, p);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  std::vector<std::pair<Element, Laurent>> out;
  out.reserve(keyed.size());
  for (auto& [len, word, w, p] : keyed) out.emplace_back(std::move(w), std::move(p));
  return out;
}

std::vector<std::pair<Element, Laurent>> sorted_terms(const CoxeterSystem& sys,
                                                      const HeckeElt& h) {
  return sorted_terms(sys, h.terms());
}

}  // namespace mikado
