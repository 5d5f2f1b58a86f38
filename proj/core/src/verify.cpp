#include "mikado/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace mikado {

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {
      "threeparam", "inverse", "doubletwist", "evidence", "costandard"};
  return ids;
}

bool is_theorem_statement(const std::string& id) { return id != "evidence"; }

namespace {

std::string fmt_poly_at(const CoxeterSystem& sys, const Element& x,
                        const Laurent& p) {
  return "coefficient at " + format_element(sys, x) + " is " + p.str();
}

}  // namespace

Report check_threeparam(const HeckeAlgebra& alg, const Element& w,
                        const BiclosedSet& A,
                        std::map<Element, HeckeElt>* twisted_cache) {
  const CoxeterSystem& sys = alg.system();
  Report rep;
  rep.statement = "threeparam";
  rep.system = sys.name;
  rep.params = {{"w", format_element(sys, w)}, {"A", A.describe(sys)}};

  HeckeElt cw = alg.cprime(w);
  auto table = alg.expand(cw, Basis::TwistedT, &A, twisted_cache);
  rep.table = sorted_terms(sys, table);

  Int lw = twisted_length(sys, A, w);
  for (const auto& [x, p] : table) {
    if (!p.is_nonnegative())
      rep.violation("negative " + fmt_poly_at(sys, x, p));
    if (!bruhat_leq(sys, x, w))
      rep.violation("support at " + format_element(sys, x) +
                    " which is not below w");
  }
  Laurent diag = table.count(w) ? table.at(w) : Laurent();
  if (diag != Laurent::power(static_cast<int>(lw)))
    rep.violation("diagonal is " + diag.str() + ", expected v^" +
                  std::to_string(lw));

  // At v=1 the twisted coefficients must forget A: compare against the
  // plain T-basis values.
  auto plain = alg.expand(cw, Basis::T);
  std::map<Element, Coeff> at_one;
  for (const auto& [x, p] : table) at_one[x] = p.eval_at_one();
  for (const auto& [x, p] : plain) {
    Coeff want = p.eval_at_one();
    Coeff got = at_one.count(x) ? at_one.at(x) : Coeff(0);
    if (want != got)
      rep.violation("value at v=1 for " + format_element(sys, x) + " is " +
                    got.str() + ", the untwisted value is " + want.str());
    at_one.erase(x);
  }
  for (const auto& [x, c] : at_one)
    if (c != 0)
      rep.violation("value at v=1 for " + format_element(sys, x) + " is " +
                    c.str() + ", the untwisted value is 0");
  return rep;
}

Report check_inverse(const HeckeAlgebra& alg, const Element& x,
                     const Element& y, Side side) {
  const CoxeterSystem& sys = alg.system();
  Report rep;
  rep.statement = "inverse";
  rep.system = sys.name;
  rep.params = {{"x", format_element(sys, x)},
                {"y", format_element(sys, y)},
                {"side", side == Side::Left ? "left" : "right"}};

  // Left: T_x^-1 T_y. Right: T_x T_y^-1. Either way build by generator
  // multiplications on the right.
  HeckeElt h;
  if (side == Side::Left) {
    h = alg.mul_t(alg.one(), x, -1);
    h = alg.mul_t(h, y, +1);
  } else {
    h = alg.mul_t(alg.t_basis(x), y, -1);
  }
  auto table = alg.expand(h, Basis::C);
  rep.table = sorted_terms(sys, table);

  for (const auto& [z, p] : table) {
    if (!p.is_nonnegative())
      rep.violation("negative " + fmt_poly_at(sys, z, p));
    if (!p.pure_parity(length(sys, z) % 2))
      rep.violation("mixed-parity " + fmt_poly_at(sys, z, p) +
                    " (want exponents = length mod 2)");
  }
  return rep;
}

Report check_doubletwist(const HeckeAlgebra& alg, const Element& w,
                         const Element& y, const BiclosedSet& A) {
  const CoxeterSystem& sys = alg.system();
  Report rep;
  rep.statement = "doubletwist";
  rep.system = sys.name;
  BiclosedSet B = double_twist(sys, A, y);
  rep.params = {{"w", format_element(sys, w)},
                {"y", format_element(sys, y)},
                {"A", A.describe(sys)},
                {"B", B.describe(sys)}};

  HeckeElt prod = alg.mul(alg.cprime(w), t_twisted(alg, y, A));
  auto direct = alg.expand(prod, Basis::TwistedT, &A);
  rep.table = sorted_terms(sys, direct);

  auto via_b = alg.expand(alg.cprime(w), Basis::TwistedT, &B);

  Element y_inv = inverse(sys, y);
  std::size_t matched = 0;
  for (const auto& [x, p] : direct) {
    if (!p.is_nonnegative())
      rep.violation("negative " + fmt_poly_at(sys, x, p));
    Element z = x * y_inv;
    auto it = via_b.find(z);
    Laurent other = it == via_b.end() ? Laurent() : it->second;
    if (it != via_b.end()) ++matched;
    if (other != p)
      rep.violation("coefficient at " + format_element(sys, x) + " is " +
                    p.str() + " but the twisted expansion gives " +
                    other.str() + " at " + format_element(sys, z));
  }
  if (matched != via_b.size())
    rep.violation("the two expansions have different support");
  return rep;
}

Report check_evidence(const HeckeAlgebra& alg, const Element& x,
                      const BiclosedSet& A,
                      std::map<Element, HeckeElt>* twisted_cache) {
  const CoxeterSystem& sys = alg.system();
  Report rep;
  rep.statement = "evidence";
  rep.theorem = false;
  rep.system = sys.name;
  rep.params = {{"x", format_element(sys, x)}, {"A", A.describe(sys)}};

  HeckeElt basis_elt;
  if (twisted_cache) {
    auto it = twisted_cache->find(x);
    if (it == twisted_cache->end())
      it = twisted_cache->emplace(x, t_twisted(alg, x, A)).first;
    basis_elt = it->second;
  } else {
    basis_elt = t_twisted(alg, x, A);
  }
  auto table = alg.expand(basis_elt, Basis::C);
  rep.table = sorted_terms(sys, table);
  for (const auto& [z, p] : table)
    if (!p.is_nonnegative())
      rep.violation("negative " + fmt_poly_at(sys, z, p));
  return rep;
}

Report check_costandard(const HeckeAlgebra& alg, const Element& w,
                        std::map<Element, HeckeElt>* twisted_cache) {
  const CoxeterSystem& sys = alg.system();
  Report rep;
  rep.statement = "costandard";
  rep.system = sys.name;
  rep.params = {{"w", format_element(sys, w)}};

  BiclosedSet all = BiclosedSet::all(sys);
  auto table = alg.expand(alg.cprime(w), Basis::TwistedT, &all, twisted_cache);
  rep.table = sorted_terms(sys, table);

  int lw = length(sys, w);
  for (const auto& [x, p] : table) {
    if (!p.is_nonnegative())
      rep.violation("negative " + fmt_poly_at(sys, x, p));
    if (x == w) {
      if (p != Laurent::power(-lw))
        rep.violation("diagonal is " + p.str() + ", expected v^" +
                      std::to_string(-lw));
      continue;
    }
    int bound = -length(sys, x) - 1;
    if (!p.is_zero() && p.max_exp() > bound)
      rep.violation(fmt_poly_at(sys, x, p) + ", exponents must be <= " +
                    std::to_string(bound));
  }
  return rep;
}

std::string certify_biclosed(const CoxeterSystem& sys, const BiclosedSet& A,
                             int radius) {
  if (A.a_priori_biclosed()) return "a-priori";
  BiclosedCheckReport rep = is_biclosed_on_ball(sys, A, radius);
  if (!rep.certified()) {
    std::vector<std::string> bad;
    for (const auto& v : rep.violations)
      bad.push_back("closure fails " + std::string(v.in_complement ? "(complement)" : "(set)") +
                    ": " + format_root(v.gamma) + " in cone of " +
                    format_root(v.a) + ", " + format_root(v.b));
    throw ConfigError(std::move(bad));
  }
  return "checked(radius=" + std::to_string(rep.radius) +
         ", roots=" + std::to_string(rep.root_count) + ")";
}

SweepResult run_sweep(const HeckeAlgebra& alg, const SweepSpec& spec) {
  const CoxeterSystem& sys = alg.system();
  std::vector<Element> elems = ball(sys, spec.radius);

  std::vector<std::pair<BiclosedSet, std::string>> family;
  auto add_set = [&](BiclosedSet A) {
    std::string cert = certify_biclosed(sys, A, 2 * spec.radius - 1);
    family.emplace_back(std::move(A), std::move(cert));
  };
  if (spec.family_inversions)
    for (const Element& y : elems) add_set(BiclosedSet::inversion(sys, y));
  if (spec.family_complements)
    for (const Element& y : elems)
      add_set(BiclosedSet::complement(BiclosedSet::inversion(sys, y)));
  for (const BiclosedSet& A : spec.extra_sets) add_set(A);

  for (const auto& id : spec.statements)
    if (std::find(statement_ids().begin(), statement_ids().end(), id) ==
        statement_ids().end())
      throw ConfigError({"unknown statement id '" + id + "'"});

  std::vector<std::function<Report()>> cases;
  for (const auto& id : spec.statements) {
    std::vector<std::function<Report()>> mine;
    if (id == "threeparam") {
      for (const auto& [A, cert] : family)
        for (const Element& w : elems)
          mine.push_back([&alg, &A = A, cert = cert, w] {
            Report r = check_threeparam(alg, w, A);
            r.certificate = cert;
            return r;
          });
    } else if (id == "inverse") {
      for (Side side : {Side::Left, Side::Right})
        for (const Element& x : elems)
          for (const Element& y : elems)
            mine.push_back([&alg, x, y, side] { return check_inverse(alg, x, y, side); });
    } else if (id == "doubletwist") {
      for (const auto& [A, cert] : family)
        for (const Element& w : elems)
          for (const Element& y : elems)
            mine.push_back([&alg, &A = A, cert = cert, w, y] {
              Report r = check_doubletwist(alg, w, y, A);
              r.certificate = cert;
              return r;
            });
    } else if (id == "evidence") {
      for (const auto& [A, cert] : family)
        for (const Element& x : elems)
          mine.push_back([&alg, &A = A, cert = cert, x] {
            Report r = check_evidence(alg, x, A);
            r.certificate = cert;
            return r;
          });
    } else if (id == "costandard") {
      for (const Element& w : elems)
        mine.push_back([&alg, w] { return check_costandard(alg, w); });
    }

    auto lim = spec.limits.find(id);
    if (lim != spec.limits.end() &&
        lim->second < static_cast<int>(mine.size())) {
      std::vector<std::function<Report()>> picked;
      const std::size_t m = lim->second;
      for (std::size_t i = 0; i < m; ++i)
        picked.push_back(std::move(mine[i * mine.size() / m]));
      mine = std::move(picked);
    }
    for (auto& c : mine) cases.push_back(std::move(c));
  }

  SweepResult result;
  result.reports.resize(cases.size());
  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) result.reports[i] = cases[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
          result.reports[i] = cases[i]();
      });
    for (auto& th : pool) th.join();
  }

  for (const auto& id : spec.statements) {
    SweepCounts counts;
    for (const Report& r : result.reports) {
      if (r.statement != id) continue;
      ++counts.cases;
      if (!r.holds) {
        ++counts.violated;
        if (r.theorem) result.theorem_violation = true;
      }
    }
    result.summary.emplace_back(id, counts);
  }
  return result;
}

}  // namespace mikado
