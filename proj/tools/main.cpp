#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwbc/hankel/hankel.hpp"
#include "dwbc/identities/identities.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace dwbc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Exact and trigonometric weight modes; exactly one per call.
struct WeightArgs {
  std::vector<std::string> weights;
  std::optional<double> lambda, eta;

  void attach(CLI::App* app) {
    auto* w = app->add_option("--weights", weights, "exact weights a b c, each an integer, p/q or decimal")->expected(3);
    auto* l = app->add_option("--lambda", lambda, "spectral parameter (trigonometric mode)");
    auto* e = app->add_option("--eta", eta, "crossing parameter (trigonometric mode)");
    w->excludes(l)->excludes(e);
    l->needs(e);
    e->needs(l);
  }

  bool trig() const { return lambda.has_value(); }

  void require() const {
    if (weights.empty() && !trig()) throw UsageError("one of --weights or --lambda/--eta is required");
  }

  WeightTriple exact() const {
    if (trig()) return exact_weights(*lambda, *eta);
    std::vector<Rational> v;
    for (const auto& s : weights) {
      try {
        v.push_back(parse_rational(s));
      } catch (const Error&) {
        throw UsageError("--weights: cannot parse '" + s + "'");
      }
    }
    try {
      return WeightTriple(v[0], v[1], v[2]);
    } catch (const Error& e) {
      throw UsageError(std::string("--weights: ") + e.what());
    }
  }

  // exact rationals print as strings; trigonometric runs print 17-digit decimals
  std::string show(const Rational& x) const { return trig() ? decimal(x.get_d()) : to_string(x); }
};

std::string csv_cell(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

struct Output {
  std::string format = "json";
  json doc = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void emit(std::ostream& os) const {
    if (format == "json") {
      os << doc.dump() << '\n';
      return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

std::string joined(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void check_size(int n) {
  if (n < 1) throw UsageError("--size must be at least 1");
}

RowConfig config_of(int n, const std::vector<int>& pos) {
  try {
    return RowConfig(n, pos);
  } catch (const Error& e) {
    throw UsageError(std::string("--positions: ") + e.what());
  }
}

// ---- subcommands ----

struct ZnCmd {
  int n = 0;
  std::string method;
  WeightArgs w;

  Output run() const {
    check_size(n);
    w.require();
    Output out;
    std::string v;
    if (method == "det") {
      if (!w.trig()) throw UsageError("--method det needs --lambda/--eta");
      v = decimal(ik_homogeneous(n, Complex(*w.lambda), Complex(*w.eta)).real());
    } else if (method == "enum" || method == "transfer") {
      const Backend b = method == "enum" ? Backend::Enumerate : Backend::Transfer;
      v = w.show(enumerate_Z(n, w.exact(), b));
    } else {
      throw UsageError("--method must be enum, transfer or det");
    }
    out.doc["Z"] = v;
    out.header = {"N", "Z"};
    out.rows.push_back({std::to_string(n), v});
    return out;
  }
};

struct HrowCmd {
  int n = 0;
  std::vector<int> positions;
  std::string method;
  WeightArgs w;

  Output run() const {
    check_size(n);
    w.require();
    const RowConfig cfg = config_of(n, positions);
    std::string v;
    if (method == "oracle") {
      v = w.show(row_config_probability(cfg, w.exact()));
    } else if (method == "mir") {
      BoundaryGenFamily fam(w.exact(), n);
      v = w.show(Rational(psi_top_mir_new(cfg, fam) * psi_bot_mir(cfg, fam) / fam.Z(n)));
    } else if (method == "ortho") {
      if (!w.trig()) throw UsageError("--method ortho needs --lambda/--eta");
      const double z = ik_homogeneous(n, Complex(*w.lambda), Complex(*w.eta)).real();
      v = decimal(psi_top_ortho(cfg, *w.lambda, *w.eta) * psi_bot_ortho(cfg, *w.lambda, *w.eta) / z);
    } else {
      throw UsageError("--method must be oracle, mir or ortho");
    }
    Output out;
    out.doc["H"] = v;
    out.header = {"N", "positions", "H"};
    out.rows.push_back({std::to_string(n), joined(positions), v});
    return out;
  }
};

struct EfpCmd {
  int n = 0, r = 0, s = 0;
  std::string method, route, variant;
  WeightArgs w;

  Output run() const {
    check_size(n);
    w.require();
    EfpQuery q{n, r, s};
    try {
      q.validate();
    } catch (const Error&) {
      throw UsageError("--r/--s: need 1 <= s <= r <= N");
    }
    if (route != "efp" && route != "efpn") throw UsageError("--route must be efp or efpn");
    if (variant != "mir1" && variant != "mir2") throw UsageError("--variant must be mir1 or mir2");
    std::string v;
    if (method == "ortho") {
      if (!w.trig()) throw UsageError("--method ortho needs --lambda/--eta");
      v = decimal(efp_ortho(q, *w.lambda, *w.eta));
    } else if (method == "enum") {
      v = w.show(efp_oracle(n, r, s, w.exact(), EfpRoute::Direct));
    } else {
      BoundaryGenFamily fam(w.exact(), n);
      if (method == "sum")
        v = w.show(efp_by_summation(q, fam, route == "efp" ? EfpSum::Efp : EfpSum::Efpn));
      else if (method == "mir-s")
        v = w.show(efp_mir_s(q, fam, variant == "mir1" ? EfpIntegral::Mir1 : EfpIntegral::Mir2));
      else if (method == "mir-n")
        v = w.show(efp_mir_n(q, fam));
      else
        throw UsageError("--method must be enum, sum, mir-s, mir-n or ortho");
    }
    Output out;
    out.doc["F"] = v;
    out.header = {"N", "r", "s", "F"};
    out.rows.push_back({std::to_string(n), std::to_string(r), std::to_string(s), v});
    return out;
  }
};

struct BoundaryCmd {
  int n = 0;
  std::string method;
  WeightArgs w;

  Output run() const {
    check_size(n);
    w.require();
    std::vector<std::string> h;
    if (method == "oracle") {
      ExactPoly p = boundary_generating_poly(n, w.exact());
      for (int r = 1; r <= n; ++r) h.push_back(w.show(p.coeff(r - 1)));
    } else if (method == "ortho") {
      if (!w.trig()) throw UsageError("--method ortho needs --lambda/--eta");
      for (int r = 1; r <= n; ++r) h.push_back(decimal(boundary_correlator_ortho(n, r, *w.lambda, *w.eta)));
    } else {
      throw UsageError("--method must be oracle or ortho");
    }
    Output out;
    out.doc["h"] = h;
    out.header = {"N", "r", "H"};
    for (int r = 1; r <= n; ++r) out.rows.push_back({std::to_string(n), std::to_string(r), h[static_cast<std::size_t>(r - 1)]});
    return out;
  }
};

struct PsiCmd {
  int n = 0;
  std::vector<int> positions;
  std::string side, method;
  WeightArgs w;

  Output run() const {
    check_size(n);
    w.require();
    if (side != "top" && side != "bot") throw UsageError("--side must be top or bot");
    const bool top = side == "top";
    const RowConfig cfg = config_of(n, positions);
    std::string v;
    if (method == "ortho") {
      if (!w.trig()) throw UsageError("--method ortho needs --lambda/--eta");
      v = decimal(top ? psi_top_ortho(cfg, *w.lambda, *w.eta) : psi_bot_ortho(cfg, *w.lambda, *w.eta));
    } else if (method == "oracle" || method == "enum") {
      const Backend b = method == "enum" ? Backend::Enumerate : Backend::Transfer;
      v = w.show(top ? psi_top(cfg, w.exact(), b) : psi_bot(cfg, w.exact(), b));
    } else if (method == "mir-coordinate") {
      if (!top) throw UsageError("--method mir-coordinate is for --side top");
      v = w.show(psi_top_mir_coordinate(cfg, w.exact()));
    } else if (method == "mir" || method == "mir-dual") {
      BoundaryGenFamily fam(w.exact(), n);
      Rational x = method == "mir" ? (top ? psi_top_mir_new(cfg, fam) : psi_bot_mir(cfg, fam))
                                   : (top ? psi_top_mir_dual(cfg, fam) : psi_bot_mir_dual(cfg, fam));
      v = w.show(x);
    } else {
      throw UsageError("--method must be oracle, enum, mir, mir-dual, mir-coordinate or ortho");
    }
    Output out;
    out.doc["psi"] = v;
    out.header = {"N", "side", "positions", "psi"};
    out.rows.push_back({std::to_string(n), side, joined(positions), v});
    return out;
  }
};

struct VerifyCmd {
  std::string suite = "all";
  int trials = 20;
  std::uint64_t seed = 42;
  int failures = 0;

  Output run() {
    if (trials < 1) throw UsageError("--trials must be positive");
    const auto& names = identity_suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
      throw UsageError("--suite: unknown suite '" + suite + "'");
    SuiteOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    auto res = run_identity_suite(suite, opt);
    Output out;
    out.doc["suite"] = suite;
    out.doc["trials"] = trials;
    out.doc["seed"] = seed;
    json cases = json::array();
    out.header = {"name", "mode", "N", "s", "n", "lhs", "rhs", "residual", "pass", "error"};
    for (const auto& r : res) {
      if (!r.pass) ++failures;
      json c;
      c["name"] = r.name;
      c["mode"] = r.exact ? "exact" : "numeric";
      c["N"] = r.N;
      c["s"] = r.s;
      c["n"] = r.n;
      c["lhs"] = r.lhs;
      c["rhs"] = r.rhs;
      c["residual"] = decimal(r.residual);
      c["pass"] = r.pass;
      if (!r.error.empty()) c["error"] = r.error;
      cases.push_back(std::move(c));
      out.rows.push_back({r.name, r.exact ? "exact" : "numeric", std::to_string(r.N), std::to_string(r.s),
                          std::to_string(r.n), r.lhs, r.rhs, decimal(r.residual), r.pass ? "true" : "false", r.error});
    }
    out.doc["cases"] = std::move(cases);
    out.doc["failures"] = failures;
    return out;
  }
};

struct TraceCmd {
  int n = 0, r = 0, s = 0;
  WeightArgs w;

  Output run() const {
    check_size(n);
    w.require();
    EfpQuery q{n, r, s};
    try {
      q.validate();
    } catch (const Error&) {
      throw UsageError("--r/--s: need 1 <= s <= r <= N");
    }
    BoundaryGenFamily fam(w.exact(), n);
    EfpTrace tr = efp_double_contour_trace(q, fam, false);
    Output out;
    out.doc["N"] = n;
    out.doc["r"] = r;
    out.doc["s"] = s;
    out.header = {"chain", "step", "label", "value"};
    auto chain = [&](const char* name, const std::vector<TraceStep>& steps) {
      json arr = json::array();
      int i = 0;
      for (const auto& st : steps) {
        json e;
        e["label"] = st.label;
        e["value"] = st.value ? json(w.show(*st.value)) : json(nullptr);
        arr.push_back(std::move(e));
        out.rows.push_back({name, std::to_string(i++), st.label, st.value ? w.show(*st.value) : ""});
      }
      out.doc[name] = std::move(arr);
    };
    chain("s_chain", tr.s_chain);
    chain("n_chain", tr.n_chain);
    out.doc["first_break"] = tr.first_break ? json(*tr.first_break) : json(nullptr);
    return out;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Six-vertex model with domain wall boundary conditions: exact and numeric correlators"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  ZnCmd zn;
  auto* c_zn = app.add_subcommand("zn", "partition function Z_N");
  c_zn->add_option("--size,-N", zn.n, "lattice size N")->required();
  c_zn->add_option("--method", zn.method, "enum | transfer | det")->default_val("transfer");
  zn.w.attach(c_zn);

  HrowCmd hr;
  auto* c_hr = app.add_subcommand("hrow", "row configuration probability H_N for explicit up-arrow positions");
  c_hr->add_option("--size,-N", hr.n, "lattice size N")->required();
  c_hr->add_option("--positions", hr.positions, "increasing positions r_1 < ... < r_s")->expected(0, 64);
  c_hr->add_option("--method", hr.method, "oracle | mir | ortho")->default_val("oracle");
  hr.w.attach(c_hr);

  EfpCmd ef;
  auto* c_ef = app.add_subcommand("efp", "emptiness formation probability F_N^{(r,s)}");
  c_ef->add_option("--size,-N", ef.n, "lattice size N")->required();
  c_ef->add_option("--r", ef.r, "column index r")->required();
  c_ef->add_option("--s", ef.s, "row index s")->required();
  c_ef->add_option("--method", ef.method, "enum | sum | mir-s | mir-n | ortho")->default_val("mir-n");
  c_ef->add_option("--route", ef.route, "summation route for --method sum: efp | efpn")->default_val("efp");
  c_ef->add_option("--variant", ef.variant, "integral variant for --method mir-s: mir1 | mir2")->default_val("mir2");
  ef.w.attach(c_ef);

  BoundaryCmd bd;
  auto* c_bd = app.add_subcommand("boundary", "coefficients of h_N(z), i.e. H_N^{(r)} for r = 1..N");
  c_bd->add_option("--size,-N", bd.n, "lattice size N")->required();
  c_bd->add_option("--method", bd.method, "oracle | ortho")->default_val("oracle");
  bd.w.attach(c_bd);

  PsiCmd ps;
  auto* c_ps = app.add_subcommand("psi", "top or bottom partial partition function for a row configuration");
  c_ps->add_option("--size,-N", ps.n, "lattice size N")->required();
  c_ps->add_option("--positions", ps.positions, "increasing positions r_1 < ... < r_s")->expected(0, 64);
  c_ps->add_option("--side", ps.side, "top | bot")->default_val("top");
  c_ps->add_option("--method", ps.method, "oracle | enum | mir | mir-dual | mir-coordinate | ortho")->default_val("oracle");
  ps.w.attach(c_ps);

  VerifyCmd vf;
  auto* c_vf = app.add_subcommand("verify", "randomized identity checks");
  c_vf->add_option("--suite", vf.suite, "kmst | cantini | bigid | c4 | tangent | hierarchy | crossing | claim | all")
      ->capture_default_str();
  c_vf->add_option("--trials", vf.trials, "draws per case family")->capture_default_str();
  c_vf->add_option("--seed", vf.seed, "random seed")->capture_default_str();

  TraceCmd tc;
  auto* c_tc = app.add_subcommand("trace-efp", "step-by-step values along both EFP derivation chains (N <= 4)");
  c_tc->add_option("--size,-N", tc.n, "lattice size N")->required();
  c_tc->add_option("--r", tc.r, "column index r")->required();
  c_tc->add_option("--s", tc.s, "row index s")->required();
  tc.w.attach(c_tc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    int code = 0;
    if (c_zn->parsed()) out = zn.run();
    else if (c_hr->parsed()) out = hr.run();
    else if (c_ef->parsed()) out = ef.run();
    else if (c_bd->parsed()) out = bd.run();
    else if (c_ps->parsed()) out = ps.run();
    else if (c_vf->parsed()) {
      out = vf.run();
      code = vf.failures ? 1 : 0;
    } else if (c_tc->parsed()) out = tc.run();
    out.format = format;
    out.emit(std::cout);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
    return 1;
  }
}
