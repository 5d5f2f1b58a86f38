#include "mikado/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace mikado {

namespace {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("root lattice coordinate overflow");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("root lattice coordinate overflow");
  return r;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error([&problems] {
        std::string all = "configuration invalid:";
        for (const auto& p : problems) all += "\n  - " + p;
        return all;
      }()),
      problems_(std::move(problems)) {}

int CoxeterSystem::gen_index(const std::string& g) const {
  for (int i = 0; i < rank; ++i)
    if (gens[i] == g) return i;
  return -1;
}

CoxeterSystem make_system(std::string name, std::vector<std::string> gens,
                          std::vector<std::vector<int>> coxeter,
                          std::optional<std::vector<std::vector<Int>>> cartan) {
  std::vector<std::string> bad;
  const int n = static_cast<int>(gens.size());
  if (n < 1) bad.push_back("at least one generator is required");
  for (int i = 0; i < n; ++i) {
    const auto& g = gens[i];
    bool ws = g.empty();
    for (char c : g)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '^') ws = true;
    if (ws)
      bad.push_back("generator name " + std::to_string(i) +
                    " must be nonempty without whitespace or '^'");
    if (g == "e") bad.push_back("generator name 'e' is reserved for the identity");
    for (int j = i + 1; j < n; ++j)
      if (gens[i] == gens[j])
        bad.push_back("duplicate generator name '" + gens[i] + "'");
  }

  auto square = [&](const auto& m, const std::string& what) {
    if (static_cast<int>(m.size()) != n) {
      bad.push_back(what + " must be " + std::to_string(n) + "x" +
                    std::to_string(n));
      return false;
    }
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != n) {
        bad.push_back(what + " must be " + std::to_string(n) + "x" +
                      std::to_string(n));
        return false;
      }
    return true;
  };

  // Allowed bond labels are exactly those with an integral realization.
  auto pair_name = [&](int i, int j) {
    std::string a = i < static_cast<int>(gens.size()) ? gens[i] : std::to_string(i);
    std::string b = j < static_cast<int>(gens.size()) ? gens[j] : std::to_string(j);
    return "(" + a + "," + b + ")";
  };
  if (square(coxeter, "coxeter matrix")) {
    for (int i = 0; i < n; ++i) {
      if (coxeter[i][i] != 1)
        bad.push_back("coxeter matrix diagonal at " + pair_name(i, i) +
                      " must be 1");
      for (int j = i + 1; j < n; ++j) {
        if (coxeter[i][j] != coxeter[j][i])
          bad.push_back("coxeter matrix not symmetric at " + pair_name(i, j));
        int m = coxeter[i][j];
        if (m != 0 && m != 2 && m != 3 && m != 4 && m != 6)
          bad.push_back("label " + std::to_string(m) + " at " + pair_name(i, j) +
                        " unsupported (allowed: 2, 3, 4, 6, inf)");
      }
    }
  }

  CoxeterSystem sys;
  sys.name = std::move(name);
  sys.rank = n;
  sys.gens = std::move(gens);
  sys.coxeter = std::move(coxeter);

  // 4cos^2(pi/m) for the allowed labels.
  auto product_for = [](int m) -> Int {
    switch (m) {
      case 2: return 0;
      case 3: return 1;
      case 4: return 2;
      case 6: return 3;
      default: return 4;  // m = inf
    }
  };

  if (cartan) {
    if (square(*cartan, "cartan matrix") && bad.empty()) {
      for (int i = 0; i < n; ++i) {
        if ((*cartan)[i][i] != 2)
          bad.push_back("cartan diagonal at " + pair_name(i, i) + " must be 2");
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          if ((*cartan)[i][j] > 0)
            bad.push_back("cartan entry at " + pair_name(i, j) +
                          " must be <= 0");
        }
        for (int j = i + 1; j < n; ++j) {
          int m = sys.coxeter[i][j];
          Int prod = (*cartan)[i][j] * (*cartan)[j][i];
          if (prod != product_for(m))
            bad.push_back("cartan product at " + pair_name(i, j) + " is " +
                          std::to_string(prod) + ", label " +
                          (m ? std::to_string(m) : std::string("inf")) +
                          " requires " + std::to_string(product_for(m)));
          bool zi = (*cartan)[i][j] == 0, zj = (*cartan)[j][i] == 0;
          if (zi != zj)
            bad.push_back("cartan entries at " + pair_name(i, j) +
                          " must vanish together");
        }
      }
    }
    sys.cartan = std::move(*cartan);
  } else if (bad.empty()) {
    sys.cartan.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) sys.cartan[i][i] = 2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        switch (sys.coxeter[i][j]) {
          case 2: break;
          case 3: sys.cartan[i][j] = -1; sys.cartan[j][i] = -1; break;
          case 4: sys.cartan[i][j] = -1; sys.cartan[j][i] = -2; break;
          case 6: sys.cartan[i][j] = -1; sys.cartan[j][i] = -3; break;
          default: sys.cartan[i][j] = -2; sys.cartan[j][i] = -2; break;
        }
      }
  }

  if (!bad.empty()) throw ConfigError(std::move(bad));
  return sys;
}

Element Element::identity(int rank) {
  Element w;
  w.rank_ = rank;
  w.m_.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) w.at(i, i) = 1;
  return w;
}

Element Element::operator*(const Element& o) const {
  Element r = identity(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Int s = 0;
      for (int k = 0; k < rank_; ++k)
        s = checked_add(s, checked_mul(at(i, k), o.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

Root Element::apply(const Root& r) const {
  Root out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    Int s = 0;
    for (int k = 0; k < rank_; ++k) s = checked_add(s, checked_mul(at(i, k), r[k]));
    out[i] = s;
  }
  return out;
}

bool Element::is_identity() const { return *this == identity(rank_); }

Element simple_reflection(const CoxeterSystem& sys, int s) {
  Element m = Element::identity(sys.rank);
  for (int j = 0; j < sys.rank; ++j) m.at(s, j) -= sys.cartan[s][j];
  return m;
}

Element from_word(const CoxeterSystem& sys, const std::vector<int>& word) {
  Element w = Element::identity(sys.rank);
  for (int s : word) w = w * simple_reflection(sys, s);
  return w;
}

bool is_negative_vec(const Root& r) {
  bool nonzero = false;
  for (Int x : r) {
    if (x > 0) return false;
    if (x < 0) nonzero = true;
  }
  return nonzero;
}

bool is_positive_vec(const Root& r) {
  bool nonzero = false;
  for (Int x : r) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

Root normalize_root(Root r) {
  if (is_negative_vec(r))
    for (Int& x : r) x = -x;
  return r;
}

bool has_right_descent(const CoxeterSystem& sys, const Element& w, int s) {
  // Column s of w is the image of alpha_s; descent iff it went negative.
  Root col(sys.rank);
  for (int i = 0; i < sys.rank; ++i) col[i] = w.at(i, s);
  return is_negative_vec(col);
}

std::vector<int> right_descents(const CoxeterSystem& sys, const Element& w) {
  std::vector<int> d;
  for (int s = 0; s < sys.rank; ++s)
    if (has_right_descent(sys, w, s)) d.push_back(s);
  return d;
}

Element inverse(const CoxeterSystem& sys, const Element& w) {
  Element u = w;
  Element inv = Element::identity(sys.rank);
  while (!u.is_identity()) {
    auto d = right_descents(sys, u);
    if (d.empty()) throw std::logic_error("descent walk stuck; matrix is not a group element");
    Element s = simple_reflection(sys, d.front());
    u = u * s;
    inv = inv * s;
  }
  return inv;
}

int length(const CoxeterSystem& sys, const Element& w) {
  Element u = w;
  int len = 0;
  while (!u.is_identity()) {
    auto d = right_descents(sys, u);
    if (d.empty()) throw std::logic_error("descent walk stuck; matrix is not a group element");
    u = u * simple_reflection(sys, d.front());
    ++len;
  }
  return len;
}

std::vector<int> reduced_word(const CoxeterSystem& sys, const Element& w) {
  // Strip the smallest left descent each step. Left descents of u are right
  // descents of u^-1, so carry the pair (u, u^-1) and update both.
  std::vector<int> word;
  Element u = w;
  Element v = inverse(sys, w);
  while (!u.is_identity()) {
    int s = 0;
    while (s < sys.rank && !has_right_descent(sys, v, s)) ++s;
    if (s == sys.rank) throw std::logic_error("no left descent on non-identity element");
    Element refl = simple_reflection(sys, s);
    u = refl * u;
    v = v * refl;
    word.push_back(s);
  }
  return word;
}

namespace {

void collect_words(const CoxeterSystem& sys, const Element& u, const Element& u_inv,
                   std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (u.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int s = 0; s < sys.rank; ++s) {
    if (!has_right_descent(sys, u_inv, s)) continue;
    Element refl = simple_reflection(sys, s);
    prefix.push_back(s);
    collect_words(sys, refl * u, u_inv * refl, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(const CoxeterSystem& sys,
                                                const Element& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(sys, w, inverse(sys, w), prefix, out);
  return out;
}

std::vector<Root> left_inversion_set(const CoxeterSystem& sys, const Element& w) {
  // For a reduced word s_1...s_k, N(w) = {alpha_{s_1}, s_1(alpha_{s_2}), ...}.
  std::vector<Root> roots;
  Element prefix = Element::identity(sys.rank);
  for (int s : reduced_word(sys, w)) {
    Root alpha(sys.rank, 0);
    alpha[s] = 1;
    roots.push_back(prefix.apply(alpha));
    prefix = prefix * simple_reflection(sys, s);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Walks a positive root down to a simple root by repeatedly applying a
// generator with positive pairing; records the generators used. Returns the
// simple index, or -1 if the vector is not a positive root.
int root_descent_walk(const CoxeterSystem& sys, Root cur, std::vector<int>& path) {
  if (!is_positive_vec(cur)) return -1;
  for (;;) {
    int simple = -1;
    bool multi = false;
    for (int i = 0; i < sys.rank; ++i) {
      if (cur[i] == 0) continue;
      if (simple != -1 || cur[i] != 1) multi = true;
      simple = i;
    }
    if (!multi && simple != -1) return simple;

    int pick = -1;
    Int pairing = 0;
    for (int i = 0; i < sys.rank && pick == -1; ++i) {
      Int c = 0;
      for (int j = 0; j < sys.rank; ++j) c = checked_add(c, checked_mul(sys.cartan[i][j], cur[j]));
      if (c > 0) pick = i, pairing = c;
    }
    if (pick == -1) return -1;
    cur[pick] -= pairing;
    if (!is_positive_vec(cur)) return -1;
    path.push_back(pick);
  }
}

}  // namespace

Element reflection_of_root(const CoxeterSystem& sys, const Root& alpha) {
  if (static_cast<int>(alpha.size()) != sys.rank)
    throw std::invalid_argument("root has wrong dimension");
  std::vector<int> path;
  int simple = root_descent_walk(sys, alpha, path);
  if (simple == -1)
    throw std::invalid_argument(format_root(alpha) + " is not a positive root");
  // alpha = s_{i1}...s_{im}(alpha_simple), so t = w s w^-1 along the path.
  Element t = simple_reflection(sys, simple);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    Element s = simple_reflection(sys, *it);
    t = s * t * s;
  }
  return t;
}

int reflection_length_of_root(const CoxeterSystem& sys, const Root& alpha) {
  std::vector<int> path;
  if (root_descent_walk(sys, alpha, path) == -1)
    throw std::invalid_argument(format_root(alpha) + " is not a positive root");
  return 2 * static_cast<int>(path.size()) + 1;
}

std::optional<Root> root_of_reflection(const CoxeterSystem& sys, const Element& t) {
  // A reflection negates exactly one positive root, and that root lies in
  // its inversion set.
  if (length(sys, t) % 2 == 0) return std::nullopt;
  std::optional<Root> found;
  for (const Root& alpha : left_inversion_set(sys, t)) {
    Root img = t.apply(alpha);
    bool negated = true;
    for (int i = 0; i < sys.rank; ++i)
      if (img[i] != -alpha[i]) negated = false;
    if (!negated) continue;
    if (found) return std::nullopt;
    found = alpha;
  }
  if (found && reflection_of_root(sys, *found) == t) return found;
  return std::nullopt;
}

bool bruhat_leq(const CoxeterSystem& sys, const Element& u, const Element& w) {
  // Peel the canonical word of w from the left; the first letter is always
  // a left descent of the current w, so the lifting rule applies directly:
  // u <= w iff min(u, su) <= sw.
  Element uu = u;
  Element uu_inv = inverse(sys, u);
  for (int s : reduced_word(sys, w)) {
    if (uu.is_identity()) return true;
    if (has_right_descent(sys, uu_inv, s)) {
      Element refl = simple_reflection(sys, s);
      uu = refl * uu;
      uu_inv = uu_inv * refl;
    }
  }
  return uu.is_identity();
}

std::vector<Element> ball(const CoxeterSystem& sys, int radius) {
  std::set<Element> seen;
  std::vector<Element> frontier{Element::identity(sys.rank)};
  seen.insert(frontier.front());
  for (int level = 0; level < radius; ++level) {
    std::vector<Element> next;
    for (const Element& w : frontier)
      for (int s = 0; s < sys.rank; ++s) {
        if (has_right_descent(sys, w, s)) continue;
        Element ws = w * simple_reflection(sys, s);
        if (seen.insert(ws).second) next.push_back(ws);
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::vector<std::pair<std::vector<int>, Element>> keyed;
  keyed.reserve(seen.size());
  for (const Element& w : seen) keyed.emplace_back(reduced_word(sys, w), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first.size() != b.first.size() ? a.first.size() < b.first.size()
                                            : a.first < b.first;
  });
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& [word, w] : keyed) out.push_back(std::move(w));
  return out;
}

std::vector<Root> positive_roots_on_ball(const CoxeterSystem& sys, int radius) {
  std::vector<Root> roots;
  for (const Element& w : ball(sys, radius))
    if (auto r = root_of_reflection(sys, w)) roots.push_back(*r);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string format_word(const CoxeterSystem& sys, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += sys.gens[word[i]];
  }
  return out;
}

std::string format_element(const CoxeterSystem& sys, const Element& w) {
  return format_word(sys, reduced_word(sys, w));
}

std::vector<int> parse_word(const CoxeterSystem& sys, const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "e") return {};

  bool single_chars = true;
  for (const auto& g : sys.gens)
    if (g.size() != 1) single_chars = false;

  std::vector<int> word;
  for (const auto& tok : tokens) {
    int idx = sys.gen_index(tok);
    if (idx >= 0) {
      word.push_back(idx);
      continue;
    }
    if (!single_chars)
      throw std::invalid_argument("unknown generator '" + tok + "'");
    for (char c : tok) {
      idx = sys.gen_index(std::string(1, c));
      if (idx < 0)
        throw std::invalid_argument("unknown generator '" + std::string(1, c) + "'");
      word.push_back(idx);
    }
  }
  return word;
}

Element parse_element(const CoxeterSystem& sys, const std::string& text) {
  return from_word(sys, parse_word(sys, text));
}

std::string format_root(const Root& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

}  // namespace mikado
