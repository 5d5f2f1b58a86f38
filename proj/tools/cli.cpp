#include "cli.hpp"

#include "mikado/braid.hpp"
#include "mikado/config_io.hpp"
#include "mikado/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace mikado::cli {

namespace {

using nlohmann::ordered_json;

ordered_json laurent_json(const Laurent& p) {
  static const Coeff lo = std::numeric_limits<std::int64_t>::min();
  static const Coeff hi = std::numeric_limits<std::int64_t>::max();
  ordered_json o = ordered_json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= lo && c <= hi)
      o[std::to_string(e)] = c.convert_to<std::int64_t>();
    else
      o[std::to_string(e)] = c.str();
  }
  return o;
}

ordered_json table_json(const CoxeterSystem& sys,
                        const std::vector<std::pair<Element, Laurent>>& t) {
  ordered_json o = ordered_json::object();
  for (const auto& [x, p] : t) o[format_element(sys, x)] = laurent_json(p);
  return o;
}

void table_text(const CoxeterSystem& sys,
                const std::vector<std::pair<Element, Laurent>>& t,
                std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [x, p] : t)
    width = std::max(width, format_element(sys, x).size());
  for (const auto& [x, p] : t) {
    std::string word = format_element(sys, x);
    out << "  " << word << std::string(width - word.size(), ' ') << "  "
        << p.str() << "\n";
  }
}

ordered_json report_json(const CoxeterSystem& sys, const Report& r) {
  ordered_json o;
  o["statement"] = r.statement;
  o["theorem"] = r.theorem;
  o["system"] = r.system;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  o["params"] = params;
  if (!r.certificate.empty()) o["biclosedness"] = r.certificate;
  o["holds"] = r.holds;
  o["violations"] = r.violations;
  o["table"] = table_json(sys, r.table);
  return o;
}

void report_text(const CoxeterSystem& sys, const Report& r, std::ostream& out) {
  out << "statement: " << r.statement << (r.theorem ? "" : " (evidence)")
      << "\n";
  out << "system: " << r.system << "\n";
  for (const auto& [k, v] : r.params) out << k << ": " << v << "\n";
  if (!r.certificate.empty()) out << "biclosedness: " << r.certificate << "\n";
  out << "holds: " << (r.holds ? "true" : "false") << "\n";
  for (const auto& v : r.violations) out << "violation: " << v << "\n";
  out << "table:\n";
  table_text(sys, r.table, out);
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string params_string(const Report& r) {
  std::string s;
  for (const auto& [k, v] : r.params) {
    if (!s.empty()) s += ";";
    s += k + "=" + v;
  }
  return s;
}

BiclosedSet biclosed_from_arg(const CoxeterSystem& sys, const std::string& arg) {
  if (arg.empty()) throw ConfigError({"empty biclosed set specification"});
  if (arg == "empty" || arg == "all")
    return biclosed_from_json(sys, nlohmann::json(arg));
  if (arg.rfind("N:", 0) == 0)
    return BiclosedSet::inversion(sys, parse_element(sys, arg.substr(2)));
  if (arg.rfind("coN:", 0) == 0)
    return BiclosedSet::complement(
        BiclosedSet::inversion(sys, parse_element(sys, arg.substr(4))));
  if (arg[0] == '{') {
    try {
      return biclosed_from_json(sys, nlohmann::json::parse(arg));
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError({std::string("inline biclosed JSON: ") + e.what()});
    }
  }
  return biclosed_from_json(sys, load_json_file(arg));
}

// Where the rendered output goes; --output writes a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ConfigError({"cannot write " + path});
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ostream* out_;
  std::ofstream file_;
};

struct Options {
  std::string system_path;
  std::string format;
  std::string output;
  std::string element;
  std::string elt_w, elt_x, elt_y;
  std::string biclosed;
  std::string gen;
  std::string side = "left";
  std::string statement;
  std::string spec_path;
  int radius = 2;
  int jobs = 0;
  bool full = false;
};

std::string pick_format(const Options& opt, const std::string& fallback,
                        const std::vector<std::string>& allowed) {
  std::string f = opt.format.empty() ? fallback : opt.format;
  for (const auto& a : allowed)
    if (f == a) return f;
  std::string msg = "format '" + f + "' not supported here (choose from";
  for (const auto& a : allowed) msg += " " + a;
  throw ConfigError({msg + ")"});
}

CoxeterSystem load_system_arg(const Options& opt) {
  if (opt.system_path.empty())
    throw ConfigError({"--system is required"});
  return system_from_json(load_json_file(opt.system_path));
}

int cmd_group(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json"});
  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "json") {
    ordered_json o;
    o["name"] = sys.name;
    o["rank"] = sys.rank;
    o["generators"] = sys.gens;
    o["coxeter_matrix"] = sys.coxeter;
    o["cartan"] = sys.cartan;
    out << o.dump(2) << "\n";
    return 0;
  }
  out << "name: " << sys.name << "\n";
  out << "rank: " << sys.rank << "\n";
  out << "generators:";
  for (const auto& g : sys.gens) out << " " << g;
  out << "\ncoxeter matrix:\n";
  for (const auto& row : sys.coxeter) {
    out << " ";
    for (int m : row) out << " " << (m == 0 ? std::string("inf") : std::to_string(m));
    out << "\n";
  }
  out << "cartan:\n";
  for (const auto& row : sys.cartan) {
    out << " ";
    for (Int a : row) out << " " << a;
    out << "\n";
  }
  out << "validation: ok\n";
  return 0;
}

int cmd_ball(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json", "csv"});
  auto elems = ball(sys, opt.radius);
  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "json") {
    ordered_json o;
    o["system"] = sys.name;
    o["radius"] = opt.radius;
    o["count"] = elems.size();
    o["elements"] = ordered_json::array();
    for (const Element& w : elems) {
      ordered_json e;
      e["word"] = format_element(sys, w);
      e["length"] = length(sys, w);
      o["elements"].push_back(e);
    }
    out << o.dump(2) << "\n";
    return 0;
  }
  if (fmt == "csv") {
    out << "length,word\n";
    for (const Element& w : elems)
      out << length(sys, w) << "," << format_element(sys, w) << "\n";
    return 0;
  }
  for (const Element& w : elems)
    out << length(sys, w) << "\t" << format_element(sys, w) << "\n";
  out << "count: " << elems.size() << "\n";
  return 0;
}

int cmd_kl(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json"});
  Element w = parse_element(sys, opt.element);
  HeckeAlgebra alg(sys);
  auto cp = alg.cprime(w);
  auto cc = alg.c(w);
  auto cp_t = sorted_terms(sys, cp);
  auto cp_h = sorted_terms(sys, alg.expand(cp, Basis::H));
  auto c_t = sorted_terms(sys, cc);
  auto c_h = sorted_terms(sys, alg.expand(cc, Basis::H));
  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "json") {
    ordered_json o;
    o["system"] = sys.name;
    o["element"] = format_element(sys, w);
    o["cprime"] = {{"T", table_json(sys, cp_t)}, {"H", table_json(sys, cp_h)}};
    o["c"] = {{"T", table_json(sys, c_t)}, {"H", table_json(sys, c_h)}};
    out << o.dump(2) << "\n";
    return 0;
  }
  out << "element: " << format_element(sys, w) << "\n";
  out << "C' in T:\n";
  table_text(sys, cp_t, out);
  out << "C' in H:\n";
  table_text(sys, cp_h, out);
  out << "C in T:\n";
  table_text(sys, c_t, out);
  out << "C in H:\n";
  table_text(sys, c_h, out);
  return 0;
}

int cmd_lift(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json"});
  Element x = parse_element(sys, opt.element);
  BiclosedSet A = biclosed_from_arg(sys, opt.biclosed);
  std::string cert = certify_biclosed(sys, A, 2 * length(sys, x) - 1);
  BraidWord beta = lift(sys, x, A);
  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "json") {
    ordered_json o;
    o["system"] = sys.name;
    o["element"] = format_element(sys, x);
    o["A"] = A.describe(sys);
    o["biclosedness"] = cert;
    o["braid"] = format_braid(sys, beta);
    o["letters"] = ordered_json::array();
    for (const BraidLetter& l : beta)
      o["letters"].push_back(ordered_json::array({sys.gens[l.gen], l.sign}));
    o["sign_sum"] = sign_sum(beta);
    o["twisted_length"] = twisted_length(sys, A, x);
    out << o.dump(2) << "\n";
    return 0;
  }
  out << format_braid(sys, beta) << "\n";
  return 0;
}

int cmd_twisted_basis(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json"});
  Element x = parse_element(sys, opt.element);
  BiclosedSet A = biclosed_from_arg(sys, opt.biclosed);
  std::string cert = certify_biclosed(sys, A, 2 * length(sys, x) - 1);
  HeckeAlgebra alg(sys);
  BraidWord beta = lift(sys, x, A);
  auto terms = sorted_terms(sys, eval_braid(alg, beta));
  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "json") {
    ordered_json o;
    o["system"] = sys.name;
    o["element"] = format_element(sys, x);
    o["A"] = A.describe(sys);
    o["biclosedness"] = cert;
    o["braid"] = format_braid(sys, beta);
    o["T"] = table_json(sys, terms);
    out << o.dump(2) << "\n";
    return 0;
  }
  out << "element: " << format_element(sys, x) << "\n";
  out << "A: " << A.describe(sys) << "\n";
  out << "biclosedness: " << cert << "\n";
  out << "braid: " << format_braid(sys, beta) << "\n";
  out << "T coefficients:\n";
  table_text(sys, terms, out);
  return 0;
}

int cmd_order(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "dot", {"dot", "json", "text"});
  BiclosedSet A = biclosed_from_arg(sys, opt.biclosed);
  std::string cert = certify_biclosed(sys, A, 2 * opt.radius - 1);
  TwistedOrder ord = twisted_order_on_ball(sys, A, opt.radius);
  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "dot") {
    out << "digraph twisted_order {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < ord.elements.size(); ++i)
      out << "  n" << i << " [label=\"" << format_element(sys, ord.elements[i])
          << " | " << ord.ell[i] << "\"];\n";
    for (auto [u, v] : ord.hasse) out << "  n" << u << " -> n" << v << ";\n";
    out << "}\n";
    return 0;
  }
  if (fmt == "json") {
    ordered_json o;
    o["system"] = sys.name;
    o["A"] = A.describe(sys);
    o["radius"] = opt.radius;
    o["biclosedness"] = cert;
    o["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < ord.elements.size(); ++i) {
      ordered_json n;
      n["word"] = format_element(sys, ord.elements[i]);
      n["twisted_length"] = ord.ell[i];
      o["nodes"].push_back(n);
    }
    auto edge_list = [](const std::vector<std::pair<int, int>>& es) {
      ordered_json a = ordered_json::array();
      for (auto [u, v] : es) a.push_back(ordered_json::array({u, v}));
      return a;
    };
    o["hasse"] = edge_list(ord.hasse);
    if (opt.full) o["edges"] = edge_list(ord.edges);
    out << o.dump(2) << "\n";
    return 0;
  }
  out << "A: " << A.describe(sys) << "\n";
  out << "biclosedness: " << cert << "\n";
  for (std::size_t i = 0; i < ord.elements.size(); ++i)
    out << "node " << i << ": " << format_element(sys, ord.elements[i])
        << " (twisted length " << ord.ell[i] << ")\n";
  for (auto [u, v] : ord.hasse)
    out << format_element(sys, ord.elements[u]) << " -> "
        << format_element(sys, ord.elements[v]) << "\n";
  return 0;
}

int cmd_enumerate(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json"});
  BiclosedSet A = biclosed_from_arg(sys, opt.biclosed);
  std::string cert = certify_biclosed(sys, A, 2 * opt.radius - 1);
  int s = sys.gen_index(opt.gen);
  if (s < 0) throw ConfigError({"unknown generator '" + opt.gen + "'"});

  // A metric ball is rarely stable under left multiplication by s; use its
  // largest stable subset.
  auto elems = ball(sys, opt.radius);
  Element refl = simple_reflection(sys, s);
  std::vector<Element> sorted_elems = elems;
  std::sort(sorted_elems.begin(), sorted_elems.end());
  std::vector<Element> stable;
  for (const Element& x : elems)
    if (std::binary_search(sorted_elems.begin(), sorted_elems.end(), refl * x))
      stable.push_back(x);

  auto seq = as_compatible_enumeration(sys, A, s, stable);
  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "json") {
    ordered_json o;
    o["system"] = sys.name;
    o["A"] = A.describe(sys);
    o["generator"] = opt.gen;
    o["radius"] = opt.radius;
    o["biclosedness"] = cert;
    o["restricted_to"] = stable.size();
    o["sequence"] = ordered_json::array();
    for (const Element& x : seq) o["sequence"].push_back(format_element(sys, x));
    o["pairs"] = ordered_json::array();
    for (std::size_t i = 0; i + 1 < seq.size(); i += 2)
      o["pairs"].push_back(ordered_json::array(
          {format_element(sys, seq[i]), format_element(sys, seq[i + 1])}));
    out << o.dump(2) << "\n";
    return 0;
  }
  out << "A: " << A.describe(sys) << "\n";
  out << "biclosedness: " << cert << "\n";
  out << "restricted to the " << stable.size()
      << " elements x of the ball with " << opt.gen << "x also inside\n";
  for (std::size_t i = 0; i < seq.size(); ++i)
    out << i << ": " << format_element(sys, seq[i]) << "\n";
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json"});
  const auto& ids = statement_ids();
  if (std::find(ids.begin(), ids.end(), opt.statement) == ids.end()) {
    std::string msg = "unknown statement id '" + opt.statement + "' (choose from";
    for (const auto& id : ids) msg += " " + id;
    throw ConfigError({msg + ")"});
  }
  HeckeAlgebra alg(sys);

  auto need = [&](const std::string& val, const std::string& flag) {
    if (val.empty())
      throw ConfigError({"statement '" + opt.statement + "' needs " + flag});
    return val;
  };

  Report rep;
  if (opt.statement == "threeparam") {
    Element w = parse_element(sys, need(opt.elt_w, "-w"));
    BiclosedSet A = biclosed_from_arg(sys, need(opt.biclosed, "--biclosed"));
    std::string cert = certify_biclosed(sys, A, 2 * length(sys, w) - 1);
    rep = check_threeparam(alg, w, A);
    rep.certificate = cert;
  } else if (opt.statement == "inverse") {
    Element x = parse_element(sys, need(opt.elt_x, "-x"));
    Element y = parse_element(sys, need(opt.elt_y, "-y"));
    if (opt.side != "left" && opt.side != "right")
      throw ConfigError({"--side must be left or right"});
    rep = check_inverse(alg, x, y,
                        opt.side == "left" ? Side::Left : Side::Right);
  } else if (opt.statement == "doubletwist") {
    Element w = parse_element(sys, need(opt.elt_w, "-w"));
    Element y = parse_element(sys, need(opt.elt_y, "-y"));
    BiclosedSet A = biclosed_from_arg(sys, need(opt.biclosed, "--biclosed"));
    std::string cert = certify_biclosed(
        sys, A, 2 * (length(sys, w) + length(sys, y)) - 1);
    rep = check_doubletwist(alg, w, y, A);
    rep.certificate = cert;
  } else if (opt.statement == "evidence") {
    Element x = parse_element(sys, need(opt.elt_x, "-x"));
    BiclosedSet A = biclosed_from_arg(sys, need(opt.biclosed, "--biclosed"));
    std::string cert = certify_biclosed(sys, A, 2 * length(sys, x) - 1);
    rep = check_evidence(alg, x, A);
    rep.certificate = cert;
  } else {
    Element w = parse_element(sys, need(opt.elt_w, "-w"));
    rep = check_costandard(alg, w);
    rep.certificate = "a-priori";
  }

  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "json")
    out << report_json(sys, rep).dump(2) << "\n";
  else
    report_text(sys, rep, out);
  return (!rep.holds && rep.theorem) ? 1 : 0;
}

int cmd_sweep(const Options& opt, std::ostream& out_stream) {
  CoxeterSystem sys = load_system_arg(opt);
  std::string fmt = pick_format(opt, "text", {"text", "json", "csv"});
  if (opt.spec_path.empty()) throw ConfigError({"--spec is required"});
  SweepSpec spec = sweep_from_json(sys, load_json_file(opt.spec_path));
  if (opt.radius > 0) spec.radius = opt.radius;
  if (opt.jobs > 0) spec.jobs = opt.jobs;

  HeckeAlgebra alg(sys);
  SweepResult result = run_sweep(alg, spec);

  Sink sink(opt.output, out_stream);
  auto& out = sink.stream();
  if (fmt == "csv") {
    out << "statement,system,params,verdict\n";
    for (const Report& r : result.reports)
      out << r.statement << "," << r.system << "," << csv_quote(params_string(r))
          << "," << (r.holds ? "holds" : "violated") << "\n";
  } else if (fmt == "json") {
    ordered_json o;
    o["system"] = sys.name;
    o["radius"] = spec.radius;
    o["summary"] = ordered_json::array();
    for (const auto& [id, counts] : result.summary) {
      ordered_json s;
      s["statement"] = id;
      s["cases"] = counts.cases;
      s["violated"] = counts.violated;
      o["summary"].push_back(s);
    }
    o["theorem_violation"] = result.theorem_violation;
    // Full tables for every case would swamp the output; keep the failures.
    o["violating_reports"] = ordered_json::array();
    for (const Report& r : result.reports)
      if (!r.holds) o["violating_reports"].push_back(report_json(sys, r));
    out << o.dump(2) << "\n";
  } else {
    out << "system: " << sys.name << "\n";
    out << "radius: " << spec.radius << "\n";
    for (const auto& [id, counts] : result.summary)
      out << id << ": " << counts.cases << " cases, " << counts.violated
          << " violated\n";
    out << "theorem violations: " << (result.theorem_violation ? "yes" : "no")
        << "\n";
  }
  return result.theorem_violation ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact engine for twisted Bruhat orders, braid lifts, and "
               "Kazhdan-Lusztig positivity"};
  app.name("mikado");
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_radius = false) {
    sub->add_option("--system", opt.system_path, "system config JSON");
    sub->add_option("--format", opt.format, "output format");
    sub->add_option("--output", opt.output, "write to file instead of stdout");
    if (with_radius) sub->add_option("--radius", opt.radius, "ball radius");
  };

  auto* group = app.add_subcommand("group", "validate and display a system");
  add_common(group);

  auto* ballc = app.add_subcommand("ball", "list the metric ball");
  add_common(ballc, true);

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig basis elements");
  add_common(kl);
  kl->add_option("element", opt.element, "group element word")->required();

  auto* liftc = app.add_subcommand("lift", "signed braid lift of an element");
  add_common(liftc);
  liftc->add_option("element", opt.element, "group element word")->required();
  liftc->add_option("--biclosed", opt.biclosed,
                    "biclosed set (file, inline JSON, empty, all, N:w, coN:w)")
      ->required();

  auto* tb = app.add_subcommand("twisted-basis",
                                "twisted standard basis element in the T basis");
  add_common(tb);
  tb->add_option("element", opt.element, "group element word")->required();
  tb->add_option("--biclosed", opt.biclosed, "biclosed set")->required();

  auto* order = app.add_subcommand("order", "twisted order on a ball");
  add_common(order, true);
  order->add_option("--biclosed", opt.biclosed, "biclosed set")->required();
  order->add_flag("--full", opt.full, "include all increase edges in JSON");

  auto* enumc = app.add_subcommand("enumerate",
                                   "compatible enumeration for a generator");
  add_common(enumc, true);
  enumc->add_option("--biclosed", opt.biclosed, "biclosed set")->required();
  enumc->add_option("--gen", opt.gen, "generator name")->required();

  auto* verify = app.add_subcommand("verify", "run one positivity check");
  add_common(verify);
  verify->add_option("--statement", opt.statement, "statement id")->required();
  verify->add_option("-w", opt.elt_w, "element w");
  verify->add_option("-x", opt.elt_x, "element x");
  verify->add_option("-y", opt.elt_y, "element y");
  verify->add_option("--biclosed", opt.biclosed, "biclosed set");
  verify->add_option("--side", opt.side, "left or right");

  auto* sweep = app.add_subcommand("sweep", "run a family of checks");
  add_common(sweep);
  sweep->add_option("--spec", opt.spec_path, "sweep spec JSON")->required();
  sweep->add_option("--radius", opt.radius, "override the spec radius");
  sweep->add_option("--jobs", opt.jobs, "worker threads");

  // Radius default differs between "unset" and "explicit 0" for sweep.
  opt.radius = 0;

  std::vector<const char*> argv;
  argv.push_back("mikado");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*group) return cmd_group(opt, out);
    if (*ballc) {
      if (opt.radius <= 0 && !ballc->count("--radius"))
        throw ConfigError({"--radius is required"});
      return cmd_ball(opt, out);
    }
    if (*kl) return cmd_kl(opt, out);
    if (*liftc) return cmd_lift(opt, out);
    if (*tb) return cmd_twisted_basis(opt, out);
    if (*order) {
      if (!order->count("--radius")) throw ConfigError({"--radius is required"});
      return cmd_order(opt, out);
    }
    if (*enumc) {
      if (!enumc->count("--radius")) throw ConfigError({"--radius is required"});
      return cmd_enumerate(opt, out);
    }
    if (*verify) return cmd_verify(opt, out);
    if (*sweep) return cmd_sweep(opt, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DepthExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mikado::cli
