#include "mikado/biclosed.hpp"

#include <algorithm>
#include <map>

namespace mikado {

struct BiclosedSet::Node {
  Kind kind;
  // Inversion / Twist: the twisting element and its inverse.
  Element y, y_inv;
  // Complement / Twist: the wrapped set.
  std::shared_ptr<const Node> inner;
  // HalfSpace.
  std::vector<Coeff> covector;
  // Explicit.
  std::vector<Root> roots;  // lex-sorted
  int certified_depth = 0;
};

BiclosedSet BiclosedSet::inversion(const CoxeterSystem& sys, const Element& y) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inversion;
  n->y = y;
  n->y_inv = inverse(sys, y);
  BiclosedSet s;
  s.node_ = std::move(n);
  return s;
}

BiclosedSet BiclosedSet::complement(BiclosedSet inner) {
  // Double complement cancels.
  if (inner.node_->kind == Kind::Complement) {
    BiclosedSet s;
    s.node_ = inner.node_->inner;
    return s;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Complement;
  n->inner = inner.node_;
  BiclosedSet s;
  s.node_ = std::move(n);
  return s;
}

BiclosedSet BiclosedSet::half_space(std::vector<Coeff> covector) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::HalfSpace;
  n->covector = std::move(covector);
  BiclosedSet s;
  s.node_ = std::move(n);
  return s;
}

BiclosedSet BiclosedSet::explicit_on_ball(const CoxeterSystem& sys,
                                          std::vector<Root> roots,
                                          int certified_depth) {
  std::vector<std::string> bad;
  for (const Root& r : roots) {
    try {
      reflection_of_root(sys, r);
    } catch (const std::invalid_argument& e) {
      bad.push_back(e.what());
    }
  }
  if (!bad.empty()) throw ConfigError(std::move(bad));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Explicit;
  n->roots = std::move(roots);
  n->certified_depth = certified_depth;
  BiclosedSet s;
  s.node_ = std::move(n);
  return s;
}

BiclosedSet BiclosedSet::twist(const CoxeterSystem& sys, const Element& y,
                               BiclosedSet inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Twist;
  n->y = y;
  n->y_inv = inverse(sys, y);
  n->inner = inner.node_;
  BiclosedSet s;
  s.node_ = std::move(n);
  return s;
}

BiclosedSet BiclosedSet::empty(const CoxeterSystem& sys) {
  return inversion(sys, Element::identity(sys.rank));
}

BiclosedSet BiclosedSet::all(const CoxeterSystem& sys) {
  return complement(empty(sys));
}

BiclosedSet::Kind BiclosedSet::kind() const { return node_->kind; }

bool BiclosedSet::a_priori_biclosed() const {
  switch (node_->kind) {
    case Kind::Explicit:
      return false;
    case Kind::Complement:
    case Kind::Twist: {
      BiclosedSet in;
      in.node_ = node_->inner;
      return in.a_priori_biclosed();
    }
    default:
      return true;
  }
}

bool BiclosedSet::contains(const CoxeterSystem& sys, const Root& beta) const {
  switch (node_->kind) {
    case Kind::Inversion: {
      // beta in N(y) iff y^-1(beta) is negative.
      return is_negative_vec(node_->y_inv.apply(beta));
    }
    case Kind::Complement: {
      BiclosedSet in;
      in.node_ = node_->inner;
      return !in.contains(sys, beta);
    }
    case Kind::HalfSpace: {
      Coeff dot = 0;
      for (int i = 0; i < sys.rank; ++i) dot += node_->covector[i] * beta[i];
      return dot > 0;
    }
    case Kind::Explicit: {
      int depth = reflection_length_of_root(sys, beta);
      if (depth > node_->certified_depth)
        throw DepthExceeded("membership of " + format_root(beta) +
                            " needs depth " + std::to_string(depth) +
                            ", certified only to " +
                            std::to_string(node_->certified_depth));
      return std::binary_search(node_->roots.begin(), node_->roots.end(), beta);
    }
    case Kind::Twist: {
      // t in N(y) XOR y^-1 t y in A; the conjugate's root is y^-1(beta) up
      // to sign.
      Root img = node_->y_inv.apply(beta);
      bool in_ny = is_negative_vec(img);
      BiclosedSet in;
      in.node_ = node_->inner;
      return in_ny != in.contains(sys, normalize_root(std::move(img)));
    }
  }
  return false;
}

std::string BiclosedSet::describe(const CoxeterSystem& sys) const {
  switch (node_->kind) {
    case Kind::Inversion:
      return "N(" + format_element(sys, node_->y) + ")";
    case Kind::Complement: {
      BiclosedSet in;
      in.node_ = node_->inner;
      return "co" + in.describe(sys);
    }
    case Kind::HalfSpace: {
      std::string s = "halfspace[";
      for (std::size_t i = 0; i < node_->covector.size(); ++i) {
        if (i) s += ",";
        s += node_->covector[i].str();
      }
      return s + "]";
    }
    case Kind::Explicit: {
      std::string s = "explicit(depth=" + std::to_string(node_->certified_depth) + "){";
      for (std::size_t i = 0; i < node_->roots.size(); ++i) {
        if (i) s += ",";
        s += format_root(node_->roots[i]);
      }
      return s + "}";
    }
    case Kind::Twist: {
      BiclosedSet in;
      in.node_ = node_->inner;
      return "twist[y=" + format_element(sys, node_->y) + "](" +
             in.describe(sys) + ")";
    }
  }
  return "?";
}

Int twisted_length(const CoxeterSystem& sys, const BiclosedSet& A,
                   const Element& w) {
  Int count = 0;
  for (const Root& beta : left_inversion_set(sys, inverse(sys, w)))
    if (A.contains(sys, beta)) ++count;
  return static_cast<Int>(length(sys, w)) - 2 * count;
}

CoverDir cover_direction(const CoxeterSystem& sys, const BiclosedSet& A,
                         const Element& x, const Root& t_root) {
  // t in N(x^-1) iff x(t_root) is negative.
  bool in_n = is_negative_vec(x.apply(t_root));
  bool in_a = A.contains(sys, t_root);
  return (in_n != in_a) ? CoverDir::Down : CoverDir::Up;
}

BiclosedSet BiclosedSet::twisted_by(const CoxeterSystem& sys,
                                    const Element& y) const {
  if (y.is_identity()) return *this;
  // The cocycle N(yz) = N(y) Δ yN(z)y^-1 collapses the twist for inversion
  // sets and their complements; keep those canonical.
  if (node_->kind == Kind::Inversion)
    return inversion(sys, y * node_->y);
  if (node_->kind == Kind::Complement &&
      node_->inner->kind == Kind::Inversion)
    return complement(inversion(sys, y * node_->inner->y));
  return twist(sys, y, *this);
}

BiclosedSet double_twist(const CoxeterSystem& sys, const BiclosedSet& A,
                         const Element& y) {
  return A.twisted_by(sys, y);
}

TwistedOrder twisted_order_on_ball(const CoxeterSystem& sys,
                                   const BiclosedSet& A, int radius) {
  TwistedOrder ord;
  ord.elements = ball(sys, radius);
  const int n = static_cast<int>(ord.elements.size());
  ord.ell.reserve(n);
  for (const Element& w : ord.elements)
    ord.ell.push_back(twisted_length(sys, A, w));

  std::vector<Element> inv(n);
  for (int i = 0; i < n; ++i) inv[i] = inverse(sys, ord.elements[i]);

  // u -> u*t for every reflection t keeping both ends in the ball. Since
  // u^-1 v is a reflection exactly when it negates a unique positive root,
  // scan all ordered pairs.
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || ord.ell[i] >= ord.ell[j]) continue;
      Element z = inv[i] * ord.elements[j];
      if (!root_of_reflection(sys, z)) continue;
      ord.edges.emplace_back(i, j);
      adj[i][j] = true;
    }

  // Reachability by decreasing ell_A (edges always increase it).
  std::vector<int> topo(n);
  for (int i = 0; i < n; ++i) topo[i] = i;
  std::sort(topo.begin(), topo.end(), [&](int a, int b) { return ord.ell[a] > ord.ell[b]; });
  ord.closure.assign(n, std::vector<bool>(n, false));
  for (int u : topo)
    for (int v = 0; v < n; ++v)
      if (adj[u][v]) {
        ord.closure[u][v] = true;
        for (int k = 0; k < n; ++k)
          if (ord.closure[v][k]) ord.closure[u][k] = true;
      }

  // Transitive reduction: drop (u,v) when some other successor of u still
  // reaches v.
  for (auto [u, v] : ord.edges) {
    bool redundant = false;
    for (int k = 0; k < n && !redundant; ++k)
      if (k != v && adj[u][k] && ord.closure[k][v]) redundant = true;
    if (!redundant) ord.hasse.emplace_back(u, v);
  }
  return ord;
}

int TwistedOrder::index_of(const Element& w) const {
  for (int i = 0; i < static_cast<int>(elements.size()); ++i)
    if (elements[i] == w) return i;
  return -1;
}

std::vector<Element> as_compatible_enumeration(const CoxeterSystem& sys,
                                               const BiclosedSet& A, int s,
                                               std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  Element refl = simple_reflection(sys, s);
  for (const Element& x : elems)
    if (!std::binary_search(elems.begin(), elems.end(), refl * x))
      throw std::invalid_argument(
          "set is not closed under left multiplication by " + sys.gens[s]);

  std::vector<Element> ups;
  for (const Element& x : elems) {
    // Compare x and sx via the right reflection x^-1 s x joining them.
    Root t_root = normalize_root(inverse(sys, x).apply(
        [&] { Root a(sys.rank, 0); a[s] = 1; return a; }()));
    if (cover_direction(sys, A, x, t_root) == CoverDir::Up) ups.push_back(x);
  }

  std::vector<std::tuple<Int, std::vector<int>, Element>> keyed;
  keyed.reserve(ups.size());
  for (const Element& x : ups)
    keyed.emplace_back(twisted_length(sys, A, x), reduced_word(sys, x), x);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    const auto& wa = std::get<1>(a);
    const auto& wb = std::get<1>(b);
    return wa.size() != wb.size() ? wa.size() < wb.size() : wa < wb;
  });

  std::vector<Element> seq;
  seq.reserve(2 * keyed.size());
  for (const auto& [ell, word, x] : keyed) {
    seq.push_back(x);
    seq.push_back(refl * x);
  }
  return seq;
}

bool in_open_cone(const Root& gamma, const Root& a, const Root& b) {
  const int n = static_cast<int>(gamma.size());
  // Look for a coordinate pair where a and b are independent.
  int pi = -1, pj = -1;
  Coeff det = 0;
  for (int i = 0; i < n && pi == -1; ++i)
    for (int j = i + 1; j < n && pi == -1; ++j) {
      Coeff d = Coeff(a[i]) * b[j] - Coeff(a[j]) * b[i];
      if (d != 0) pi = i, pj = j, det = d;
    }

  if (pi == -1) {
    // Parallel (or degenerate): the open cone is the open ray through a.
    // gamma must be a positive multiple: gamma x a = 0 and ratio > 0.
    bool ray = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        if (Coeff(gamma[i]) * a[j] != Coeff(gamma[j]) * a[i]) return false;
      if (a[i] != 0 && gamma[i] != 0 && (a[i] > 0) == (gamma[i] > 0)) ray = true;
    }
    return ray;
  }

  // Solve x*a + y*b = gamma on the chosen pair, then verify every
  // coordinate; x, y are rationals with denominator det.
  Coeff xn = Coeff(gamma[pi]) * b[pj] - Coeff(gamma[pj]) * b[pi];
  Coeff yn = Coeff(a[pi]) * gamma[pj] - Coeff(a[pj]) * gamma[pi];
  for (int k = 0; k < n; ++k)
    if (xn * a[k] + yn * b[k] != det * gamma[k]) return false;
  auto pos = [&](const Coeff& num) {
    return det > 0 ? num > 0 : num < 0;
  };
  return pos(xn) && pos(yn);
}

BiclosedCheckReport is_biclosed_on_ball(const CoxeterSystem& sys,
                                        const BiclosedSet& A, int radius) {
  BiclosedCheckReport rep;
  rep.radius = radius;
  std::vector<Root> roots = positive_roots_on_ball(sys, radius);
  rep.root_count = static_cast<int>(roots.size());
  std::vector<char> member(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    member[i] = A.contains(sys, roots[i]);

  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i; j < roots.size(); ++j) {
      if (member[i] != member[j]) continue;
      for (std::size_t k = 0; k < roots.size(); ++k) {
        if (member[k] == member[i]) continue;
        if (!in_open_cone(roots[k], roots[i], roots[j])) continue;
        rep.violations.push_back(
            {roots[i], roots[j], roots[k], /*in_complement=*/!member[i]});
      }
    }
  return rep;
}

}  // namespace mikado
