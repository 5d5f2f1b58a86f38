#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace mikado {

using Coeff = boost::multiprecision::cpp_int;

// Laurent polynomial in one variable v over the integers, kept canonical:
// terms sorted by strictly increasing exponent, no zero coefficients.
// Coefficients are arbitrary precision; exponents are machine ints, which
// is comfortable since every exponent reachable here is bounded by word
// length times a small constant.
class Laurent {
 public:
  using Term = std::pair<int, Coeff>;

  Laurent() = default;

  static Laurent constant(Coeff c);
  static Laurent monomial(Coeff c, int exp);
  // v^exp, the most common monomial.
  static Laurent power(int exp) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  // Number of nonzero terms.
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Coeff coeff(int exp) const;
  // Precondition for both: nonzero polynomial.
  int min_exp() const;
  int max_exp() const;

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // v -> v^-1.
  Laurent bar() const;
  // Multiply by v^shift.
  Laurent shifted(int shift) const;
  // Exact division by c*v^exp; throws std::domain_error if not divisible.
  Laurent div_by_monomial(const Coeff& c, int exp) const;

  bool is_nonnegative() const;
  Coeff eval_at_one() const;
  // Which exponent parities occur: .first = some even exponent present,
  // .second = some odd exponent present.
  std::pair<bool, bool> exponent_parities() const;
  // True if every exponent has the given parity (0 even, 1 odd). Zero
  // polynomial qualifies vacuously.
  bool pure_parity(int parity) const;

  // Keep only terms whose exponent satisfies exp >= lo (use with bar() for
  // the mirrored cut). Used by triangular solves that split a polynomial
  // into its positive and negative halves.
  Laurent truncate_from(int lo) const;

  // Text form: terms in increasing exponent, "c*v^e" with the cosmetic
  // omissions (no "*v^0", no unit coefficient in front of a power), e.g.
  // "v^-2 + 2 + v^2", "v - 1", "0".
  std::string str() const;
  static Laurent parse(const std::string& text);

 private:
  std::vector<Term> terms_;

  void compress();
};

}  // namespace mikado
