#include "mikado/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mikado {

void Laurent::compress() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Laurent Laurent::constant(Coeff c) { return monomial(std::move(c), 0); }

Laurent Laurent::monomial(Coeff c, int exp) {
  Laurent p;
  if (c != 0) p.terms_.emplace_back(exp, std::move(c));
  return p;
}

Coeff Laurent::coeff(int exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

int Laurent::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.front().first;
}

int Laurent::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.back().first;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent p;
  p.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      p.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      p.terms_.push_back(*b++);
    } else {
      Coeff c = a->second + b->second;
      if (c != 0) p.terms_.emplace_back(a->first, std::move(c));
      ++a, ++b;
    }
  }
  return p;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  std::map<int, Coeff> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.first + b.first] += a.second * b.second;
  Laurent p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

Laurent Laurent::bar() const {
  Laurent p = *this;
  for (auto& t : p.terms_) t.first = -t.first;
  std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

Laurent Laurent::shifted(int shift) const {
  Laurent p = *this;
  for (auto& t : p.terms_) t.first += shift;
  return p;
}

Laurent Laurent::div_by_monomial(const Coeff& c, int exp) const {
  if (c == 0) throw std::domain_error("division by zero monomial");
  Laurent p = *this;
  for (auto& t : p.terms_) {
    t.first -= exp;
    if (t.second % c != 0)
      throw std::domain_error("coefficient not divisible by " + c.str());
    t.second /= c;
  }
  return p;
}

bool Laurent::is_nonnegative() const {
  for (const auto& t : terms_)
    if (t.second < 0) return false;
  return true;
}

Coeff Laurent::eval_at_one() const {
  Coeff s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::pair<bool, bool> Laurent::exponent_parities() const {
  bool even = false, odd = false;
  for (const auto& t : terms_) ((t.first % 2) ? odd : even) = true;
  return {even, odd};
}

bool Laurent::pure_parity(int parity) const {
  for (const auto& t : terms_)
    if (((t.first % 2) + 2) % 2 != parity) return false;
  return true;
}

Laurent Laurent::truncate_from(int lo) const {
  Laurent p;
  for (const auto& t : terms_)
    if (t.first >= lo) p.terms_.push_back(t);
  return p;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

// One term of the text grammar: [coeff ['*']] 'v' ['^' int] | coeff.
// `s` points just past any leading sign handled by the caller.
Laurent::Term parse_term(const std::string& s) {
  std::size_t i = 0;
  Coeff c = 1;
  bool saw_coeff = false;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    c = Coeff(s.substr(i, j - i));
    saw_coeff = true;
    i = j;
    if (i < s.size() && s[i] == '*') ++i;
  }
  if (i == s.size()) {
    if (!saw_coeff) throw std::invalid_argument("empty term");
    return {0, c};
  }
  if (s[i] != 'v') throw std::invalid_argument("expected 'v' in term: " + s);
  ++i;
  int e = 1;
  if (i < s.size()) {
    if (s[i] != '^') throw std::invalid_argument("expected '^' in term: " + s);
    ++i;
    std::size_t pos = 0;
    e = std::stoi(s.substr(i), &pos);
    if (i + pos != s.size()) throw std::invalid_argument("trailing junk in term: " + s);
  }
  return {e, c};
}

}  // namespace

Laurent Laurent::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  if (s == "0") return Laurent();

  Laurent p;
  std::size_t i = 0;
  int sign = 1;
  if (s[0] == '-') sign = -1, i = 1;
  else if (s[0] == '+') i = 1;
  while (i < s.size()) {
    std::size_t j = i;
    // A '-' inside "v^-2" is part of the exponent, not a term separator.
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && s[j - 1] != '^')) ++j;
    auto [e, c] = parse_term(s.substr(i, j - i));
    p.terms_.emplace_back(e, sign * c);
    if (j < s.size()) sign = (s[j] == '-') ? -1 : 1;
    i = j + 1;
  }
  p.compress();
  return p;
}

}  // namespace mikado
