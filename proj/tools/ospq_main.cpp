#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ospquant/verify.hpp"

using namespace ospq;

namespace {

struct CommonOpts {
  int p = 1, q = 0, r = 1;
  std::string lambda = "1/2";
  std::string delta = "1/3";
  int max_degree = 2;
  int max_poly_degree = 2;
  int degree_cap = 4;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

void add_common_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--p", o.p, "positive even directions");
  cmd->add_option("--q", o.q, "negative even directions");
  cmd->add_option("--r", o.r, "half the number of odd directions");
  cmd->add_option("--lambda", o.lambda, "source density weight (num/den)");
  cmd->add_option("--delta", o.delta, "weight shift (num/den)");
  cmd->add_option("--max-degree", o.max_degree, "symbol degree bound");
  cmd->add_option("--max-poly-degree", o.max_poly_degree,
                  "coefficient degree bound for sweeps");
  cmd->add_option("--degree-cap", o.degree_cap, "hard cap on symbol degree");
  cmd->add_option("--seed", o.seed, "seed for randomized test vectors");
  cmd->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out, "output file (stdout when absent)");
}

int validate(const CommonOpts& o) {
  if (o.p < 0 || o.q < 0 || o.r < 0 || o.p + o.q < 1) {
    std::cerr << "invalid signature: need p,q,r >= 0 and p+q >= 1\n";
    return 2;
  }
  if (o.max_degree < 0 || o.max_degree > o.degree_cap) {
    std::cerr << "invalid degree bound: need 0 <= max-degree <= " << o.degree_cap
              << "\n";
    return 2;
  }
  if (2 * o.r > 62) {
    std::cerr << "odd directions limited to 62\n";
    return 2;
  }
  return 0;
}

RunConfig to_config(const CommonOpts& o) {
  RunConfig cfg;
  cfg.sig = SpaceSignature{o.p, o.q, o.r};
  cfg.weights = Weights{parse_rational(o.lambda), parse_rational(o.delta)};
  cfg.max_degree = o.max_degree;
  cfg.max_poly_degree = o.max_poly_degree;
  cfg.degree_cap = o.degree_cap;
  cfg.seed = o.seed;
  cfg.format = o.format;
  cfg.out = o.out;
  return cfg;
}

int emit(const CommonOpts& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) {
    std::cerr << "cannot open output file: " << o.out << "\n";
    return 2;
  }
  f << payload;
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  if (int rc = validate(o)) return rc;
  RunConfig cfg = to_config(o);
  Report rep = run_verify(cfg);
  std::string payload;
  if (o.format == "json")
    payload = report_json(rep).dump(2) + "\n";
  else if (o.format == "csv")
    payload = report_csv(rep);
  else
    payload = report_text(rep);
  if (int rc = emit(o, payload)) return rc;
  return rep.failed == 0 ? 0 : 1;
}

int cmd_spectrum(const CommonOpts& o) {
  if (int rc = validate(o)) return rc;
  SpaceSignature sig{o.p, o.q, o.r};
  Rational delta = parse_rational(o.delta);
  auto rows = spectrum_rows(sig, delta, o.max_degree);
  std::ostringstream os;
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& e : rows)
      arr.push_back(Json{{"k", e.k},
                         {"s", e.s},
                         {"b", rat_text(e.b)},
                         {"alpha", rat_text(e.alpha)},
                         {"multiplicity", e.multiplicity}});
    os << Json{{"signature", to_json(sig)},
               {"delta", rat_text(delta)},
               {"rows", arr}}
              .dump(2)
       << "\n";
  } else if (o.format == "csv") {
    os << "k,s,b,alpha,multiplicity\n";
    for (const auto& e : rows)
      os << e.k << ',' << e.s << ',' << rat_text(e.b) << ',' << rat_text(e.alpha)
         << ',' << e.multiplicity << "\n";
  } else {
    os << "spectrum for (" << o.p << "," << o.q << "," << o.r
       << "), delta = " << rat_text(delta) << "\n";
    os << "  k  s  b          alpha           mult\n";
    for (const auto& e : rows)
      os << "  " << e.k << "  " << e.s << "  " << rat_text(e.b) << "\t "
         << rat_text(e.alpha) << "\t " << e.multiplicity << "\n";
  }
  return emit(o, os.str());
}

int cmd_resonances(const CommonOpts& o) {
  if (int rc = validate(o)) return rc;
  SpaceSignature sig{o.p, o.q, o.r};
  std::ostringstream os;
  if (sig.superdim() == 0) {
    if (o.format == "json") {
      os << Json{{"signature", to_json(sig)},
                 {"allResonant", true},
                 {"witness", Json::array({1, 0, 0, 0})}}
                .dump(2)
         << "\n";
    } else {
      os << "superdimension zero: every shift is resonant (witness degrees 1, 0)\n";
    }
    return emit(o, os.str());
  }
  auto rows = resonance_table(sig, o.max_degree);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows)
      arr.push_back(Json{{"k", row.k},
                         {"l", row.l},
                         {"s", row.s},
                         {"t", row.t},
                         {"delta", rat_text(row.direct)},
                         {"closedForm", rat_text(row.closed)},
                         {"discrepancy", row.discrepancy}});
    os << Json{{"signature", to_json(sig)}, {"rows", arr}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    os << "k,l,s,t,delta,closed_form,discrepancy\n";
    for (const auto& row : rows)
      os << row.k << ',' << row.l << ',' << row.s << ',' << row.t << ','
         << rat_text(row.direct) << ',' << rat_text(row.closed) << ','
         << (row.discrepancy ? 1 : 0) << "\n";
  } else {
    os << "resonant shifts for (" << o.p << "," << o.q << "," << o.r
       << ") up to degree " << o.max_degree << "\n";
    os << "  (k,l,s,t)   delta       closed-form table\n";
    for (const auto& row : rows) {
      os << "  (" << row.k << "," << row.l << "," << row.s << "," << row.t << ")   "
         << rat_text(row.direct) << "\t " << rat_text(row.closed);
      if (row.discrepancy) os << "   <- table deviates; exact value kept";
      os << "\n";
    }
  }
  return emit(o, os.str());
}

int cmd_quantize(const CommonOpts& o, const std::string& in_file,
                 const std::string& d0_t) {
  if (int rc = validate(o)) return rc;
  std::ifstream in(in_file);
  if (!in) {
    std::cerr << "cannot open input file: " << in_file << "\n";
    return 2;
  }
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  }
  QuantizeOptions opt;
  opt.degree_cap = o.degree_cap;
  std::optional<QuantizationResult> res;
  try {
    SymbolField s = symbol_from_json(j);
    opt.d0_t = parse_rational(d0_t);
    res = quantize(s, opt);
  } catch (const std::exception& e) {
    std::cerr << "invalid symbol: " << e.what() << "\n";
    return 2;
  }
  std::string payload = to_json(*res).dump(2) + "\n";
  if (int rc = emit(o, payload)) return rc;
  if (res->resonant) {
    std::cerr << "resonant shift refused; witnesses (k,l,i,j):";
    for (const auto& w : res->witnesses)
      std::cerr << " (" << w.k << "," << w.l << "," << w.i << "," << w.j << ")";
    std::cerr << "\n";
    return 3;
  }
  return res->ok ? 0 : 1;
}

int cmd_casimir_matrix(const CommonOpts& o, int degree) {
  if (int rc = validate(o)) return rc;
  SpaceSignature sig{o.p, o.q, o.r};
  Weights w{parse_rational(o.lambda), parse_rational(o.delta)};
  RatMat m = matrix_on_fiber(sig, w, degree, 0,
                             [](const SymbolField& s) { return casimir_c(s); });
  return emit(o, fiber_matrix_csv(sig, degree, 0, m));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact orthosymplectic equivariant quantization engine"};
  app.require_subcommand(1);

  CommonOpts vo, so, ro, qo, co;
  std::string in_file, d0_t = "0";
  int matrix_degree = 2;

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common_opts(verify, vo);

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "eigenvalue table of the Casimir operator");
  add_common_opts(spectrum, so);

  CLI::App* resonances =
      app.add_subcommand("resonances", "resonant weight shifts with witnesses");
  add_common_opts(resonances, ro);

  CLI::App* quantize_cmd =
      app.add_subcommand("quantize", "quantize a serialized symbol");
  add_common_opts(quantize_cmd, qo);
  quantize_cmd->add_option("--in", in_file, "input symbol (JSON)")->required();
  quantize_cmd->add_option(
      "--d0-t", d0_t, "degree-one divergence coefficient at superdimension zero");

  CLI::App* cm = app.add_subcommand("casimir-matrix",
                                    "CSV dump of the Casimir on the fiber basis");
  add_common_opts(cm, co);
  cm->add_option("--degree", matrix_degree, "fiber degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(vo);
    if (spectrum->parsed()) return cmd_spectrum(so);
    if (resonances->parsed()) return cmd_resonances(ro);
    if (quantize_cmd->parsed()) return cmd_quantize(qo, in_file, d0_t);
    if (cm->parsed()) return cmd_casimir_matrix(co, matrix_degree);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
