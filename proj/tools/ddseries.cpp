// ddseries: digit-restricted Dirichlet series evaluator.
//
// Subcommands: eval, kempner, residues, bernoulli, neg-values, mgf, verify.
// Exit codes: 0 success, 1 usage error, 2 domain error (pole, unsupported
// case, enumeration cap).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dd/coeffs.hpp"
#include "dd/continuation.hpp"
#include "dd/digit_system.hpp"
#include "dd/errors.hpp"
#include "dd/genfunc.hpp"
#include "dd/residues.hpp"
#include "dd/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CommonArgs {
  int base = 10;
  std::string digits_text;
  double tol = 1e-12;
  std::string format = "json";
};

dd::Cplx parse_complex(const std::string& text) {
  std::size_t split = text.find(',');
  try {
    std::size_t used = 0;
    if (split == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, split);
    const std::string im_text = text.substr(split + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a complex number as \"re,im\", got '" +
                                text + "'");
  }
}

json complex_json(dd::Cplx z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json pole_json(const std::optional<dd::PoleProximity>& p, const dd::DigitSystem& ds) {
  if (!p) return nullptr;
  return json{{"m", p->point.m},
              {"k", p->point.k},
              {"location", complex_json(dd::lattice_location(ds, p->point))},
              {"distance", p->distance}};
}

json result_json(const dd::EvalResult& r, const dd::DigitSystem& ds) {
  return json{{"value", complex_json(r.value)},
              {"tail_estimate", r.tail_estimate},
              {"terms_used", r.terms_used},
              {"method", dd::method_name(r.method)},
              {"nearest_pole", pole_json(r.nearest_pole, ds)}};
}

std::string fmt_complex(dd::Cplx z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%.15g %c %.15gi", z.real(),
                z.imag() < 0 ? '-' : '+', std::abs(z.imag()));
  return buf;
}

void print_eval_text(const dd::EvalResult& r, const dd::DigitSystem& ds) {
  std::printf("value         %s\n", fmt_complex(r.value).c_str());
  std::printf("tail estimate %.3e\n", r.tail_estimate);
  std::printf("method        %s\n", dd::method_name(r.method));
  std::printf("terms used    %ld\n", r.terms_used);
  if (r.nearest_pole) {
    const dd::Cplx loc = dd::lattice_location(ds, r.nearest_pole->point);
    std::printf("nearest pole  s(m=%d,k=%ld) = %s at distance %.3e\n",
                r.nearest_pole->point.m, r.nearest_pole->point.k,
                fmt_complex(loc).c_str(), r.nearest_pole->distance);
  }
}

void emit(json& doc, const CommonArgs& args, Clock::time_point t0,
          const std::function<void()>& text_renderer) {
  if (args.format == "text") {
    text_renderer();
    return;
  }
  doc["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::cout << doc.dump(2) << "\n";
}

json input_echo(const CommonArgs& args, const dd::DigitSystem& ds) {
  return json{{"base", args.base},
              {"digits_text", args.digits_text},
              {"digits", ds.digits()},
              {"tol", args.tol}};
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_tol = true) {
  cmd->add_option("--base", args.base, "Radix b >= 2")->required();
  cmd->add_option("--digits", args.digits_text,
                  "Admissible digit set, e.g. \"0-8\" or \"1,3,5,7,9\"")
      ->required();
  if (with_tol) {
    cmd->add_option("--tol", args.tol, "Target truncation tolerance")
        ->default_val(1e-12);
  }
  cmd->add_option("--format", args.format, "Output format")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "text"}));
}

int run_cli(int argc, char** argv) {
  CLI::App app{"digit-restricted Dirichlet series evaluator"};
  app.require_subcommand(1);

  // eval
  CommonArgs eval_args;
  std::string eval_s;
  std::string eval_method = "auto";
  int eval_depth = -1;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate K(s) (or H(s))");
  add_common(eval_cmd, eval_args);
  eval_cmd->add_option("--s", eval_s, "Evaluation point \"re,im\"")->required();
  eval_cmd->add_option("--method", eval_method, "Evaluation route")
      ->default_val("auto")
      ->check(CLI::IsMember({"auto", "direct", "geo", "feq", "closed-n1", "h"}));
  eval_cmd->add_option("--depth", eval_depth,
                       "Unwinding depth for the functional-equation route "
                       "(default: automatic)");

  // kempner
  CommonArgs kem_args;
  CLI::App* kem_cmd = app.add_subcommand("kempner", "Evaluate K(1)");
  add_common(kem_cmd, kem_args);

  // residues
  CommonArgs res_args;
  int res_order = 5;
  CLI::App* res_cmd =
      app.add_subcommand("residues", "Residue row on the real axis");
  add_common(res_cmd, res_args);
  res_cmd->add_option("--order", res_order, "Largest m in the row")
      ->default_val(5);

  // bernoulli
  CommonArgs ber_args;
  int ber_order = 10;
  CLI::App* ber_cmd = app.add_subcommand(
      "bernoulli", "Generalized Bernoulli numbers (exact rationals)");
  add_common(ber_cmd, ber_args, /*with_tol=*/false);
  ber_cmd->add_option("--order", ber_order, "Largest index")->required();

  // neg-values
  CommonArgs neg_args;
  int neg_order = 10;
  CLI::App* neg_cmd = app.add_subcommand(
      "neg-values", "K(0), K(-1), ... as exact rationals (1 < N < b)");
  add_common(neg_cmd, neg_args, /*with_tol=*/false);
  neg_cmd->add_option("--order", neg_order, "Largest -s")->required();

  // mgf
  CommonArgs mgf_args;
  std::string mgf_t;
  int mgf_order = -1;
  CLI::App* mgf_cmd = app.add_subcommand(
      "mgf", "Cantor-measure generating functions E and B = 1/E");
  add_common(mgf_cmd, mgf_args);
  mgf_cmd->add_option("--t", mgf_t, "Evaluation point \"re,im\"");
  mgf_cmd->add_option("--order", mgf_order,
                      "Also emit exact EGF Taylor coefficients to this order");

  // verify
  CommonArgs ver_args;
  bool ver_full = false;
  bool ver_quick = false;
  std::uint64_t ver_seed = dd::verify::kDefaultSeed;
  CLI::App* ver_cmd =
      app.add_subcommand("verify", "Run the self-verification suite");
  ver_cmd->add_flag("--full", ver_full, "Everything (minutes)");
  ver_cmd->add_flag("--quick", ver_quick, "Fast identities only (default)");
  ver_cmd->add_option("--seed", ver_seed, "Seed for the randomized checks");
  ver_cmd->add_option("--format", ver_args.format, "Output format")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems are exit 1, --help is 0
  }
  const auto t0 = Clock::now();

  if (eval_cmd->parsed()) {
    const dd::DigitSystem ds(eval_args.base,
                             dd::parse_digit_set(eval_args.digits_text, eval_args.base));
    const dd::Cplx s = parse_complex(eval_s);
    dd::EvalResult r;
    if (eval_method == "auto") {
      r = dd::eval_auto(ds, s, eval_args.tol);
    } else if (eval_method == "direct") {
      r = dd::eval_direct(ds, s, eval_args.tol);
    } else if (eval_method == "geo") {
      r = dd::eval_geo(ds, s, eval_args.tol);
    } else if (eval_method == "feq") {
      r = dd::eval_feq(ds, s, eval_args.tol, eval_depth);
    } else if (eval_method == "h") {
      r = dd::eval_H(ds, s, eval_args.tol, eval_depth);
    } else {
      r = dd::eval_closed_n1(ds, s, eval_args.tol);
    }
    json doc{{"command", "eval"}, {"input", input_echo(eval_args, ds)}};
    doc["input"]["s"] = complex_json(s);
    doc["input"]["method"] = eval_method;
    doc["result"] = result_json(r, ds);
    emit(doc, eval_args, t0, [&] { print_eval_text(r, ds); });
    return 0;
  }

  if (kem_cmd->parsed()) {
    const dd::DigitSystem ds(kem_args.base,
                             dd::parse_digit_set(kem_args.digits_text, kem_args.base));
    const dd::EvalResult r = dd::kempner(ds, kem_args.tol);
    json doc{{"command", "kempner"}, {"input", input_echo(kem_args, ds)}};
    doc["result"] = result_json(r, ds);
    emit(doc, kem_args, t0, [&] { print_eval_text(r, ds); });
    return 0;
  }

  if (res_cmd->parsed()) {
    const dd::DigitSystem ds(res_args.base,
                             dd::parse_digit_set(res_args.digits_text, res_args.base));
    std::vector<dd::Cplx> entire;
    for (int m = 0; m <= res_order; ++m) {
      entire.push_back(dd::residue_entire(ds, {m, 0}, res_args.tol));
    }
    const dd::ResidueRow row = dd::lambda_row(ds, 0, res_order, entire[0]);
    const dd::RationalSeq mu = dd::mu_rational(ds, res_order);
    json entire_json = json::array();
    for (const dd::Cplx& v : entire) entire_json.push_back(complex_json(v));
    json row_json = json::array();
    for (const dd::Cplx& v : row.values) row_json.push_back(complex_json(v));
    json mu_json = nullptr;
    if (!row.mu_values.empty()) {
      mu_json = json::array();
      for (const dd::Cplx& v : row.mu_values) mu_json.push_back(complex_json(v));
    }
    json mu_exact = json::array();
    for (const dd::BigRational& q : mu) mu_exact.push_back(dd::to_string(q));
    json doc{{"command", "residues"}, {"input", input_echo(res_args, ds)}};
    doc["input"]["order"] = res_order;
    doc["result"] = json{{"k", 0},
                         {"entire", entire_json},
                         {"row", row_json},
                         {"mu_row", mu_json},
                         {"mu_rational", mu_exact}};
    emit(doc, res_args, t0, [&] {
      for (int m = 0; m <= res_order; ++m) {
        std::printf("lambda_%-3d %s   (row: %s)\n", m, fmt_complex(entire[m]).c_str(),
                    fmt_complex(row.values[static_cast<std::size_t>(m)]).c_str());
      }
      for (int m = 0; m <= res_order; ++m) {
        std::printf("mu_%-7d %s\n", m, dd::to_string(mu[static_cast<std::size_t>(m)]).c_str());
      }
    });
    return 0;
  }

  if (ber_cmd->parsed()) {
    const dd::DigitSystem ds(ber_args.base,
                             dd::parse_digit_set(ber_args.digits_text, ber_args.base));
    const dd::RationalSeq mu = dd::mu_rational(ds, ber_order);
    json values = json::array();
    for (const dd::BigRational& q : mu) values.push_back(dd::to_string(q));
    json doc{{"command", "bernoulli"}, {"input", input_echo(ber_args, ds)}};
    doc["input"].erase("tol");
    doc["input"]["order"] = ber_order;
    doc["result"] = json{{"values", values}};
    emit(doc, ber_args, t0, [&] {
      for (std::size_t m = 0; m < mu.size(); ++m) {
        std::printf("mu_%-3zu %s\n", m, dd::to_string(mu[m]).c_str());
      }
    });
    return 0;
  }

  if (neg_cmd->parsed()) {
    const dd::DigitSystem ds(neg_args.base,
                             dd::parse_digit_set(neg_args.digits_text, neg_args.base));
    const dd::RationalSeq kv = dd::neg_values(ds, neg_order);
    json values = json::array();
    for (const dd::BigRational& q : kv) values.push_back(dd::to_string(q));
    json doc{{"command", "neg-values"}, {"input", input_echo(neg_args, ds)}};
    doc["input"].erase("tol");
    doc["input"]["order"] = neg_order;
    doc["result"] = json{{"values", values}};
    emit(doc, neg_args, t0, [&] {
      for (std::size_t m = 0; m < kv.size(); ++m) {
        std::printf("K(-%-3zu) %s\n", m, dd::to_string(kv[m]).c_str());
      }
    });
    return 0;
  }

  if (mgf_cmd->parsed()) {
    const dd::DigitSystem ds(mgf_args.base,
                             dd::parse_digit_set(mgf_args.digits_text, mgf_args.base));
    if (mgf_t.empty() && mgf_order < 0) {
      std::cerr << "mgf needs --t and/or --order\n";
      return 1;
    }
    json doc{{"command", "mgf"}, {"input", input_echo(mgf_args, ds)}};
    json result;
    if (!mgf_t.empty()) {
      const dd::Cplx t = parse_complex(mgf_t);
      doc["input"]["t"] = complex_json(t);
      result["E"] = complex_json(dd::mgf_E(ds, t, mgf_args.tol));
      result["B"] = complex_json(dd::bgf_B(ds, t, mgf_args.tol));
    }
    if (mgf_order >= 0) {
      doc["input"]["order"] = mgf_order;
      const dd::TaylorCoeffs e = dd::E_taylor(ds, mgf_order);
      const dd::TaylorCoeffs b = dd::B_taylor(ds, mgf_order);
      json ecoef = json::array(), bcoef = json::array();
      for (const dd::BigRational& q : e.coeffs) ecoef.push_back(dd::to_string(q));
      for (const dd::BigRational& q : b.coeffs) bcoef.push_back(dd::to_string(q));
      result["convention"] = "egf";
      result["E_coeffs"] = ecoef;
      result["B_coeffs"] = bcoef;
    }
    doc["result"] = result;
    emit(doc, mgf_args, t0, [&] {
      if (!mgf_t.empty()) {
        const dd::Cplx t = parse_complex(mgf_t);
        std::printf("E(t) %s\n", fmt_complex(dd::mgf_E(ds, t, mgf_args.tol)).c_str());
        std::printf("B(t) %s\n", fmt_complex(dd::bgf_B(ds, t, mgf_args.tol)).c_str());
      }
      if (mgf_order >= 0) {
        const dd::TaylorCoeffs e = dd::E_taylor(ds, mgf_order);
        const dd::TaylorCoeffs b = dd::B_taylor(ds, mgf_order);
        for (int m = 0; m <= mgf_order; ++m) {
          std::printf("m=%-3d E: %-24s B: %s\n", m,
                      dd::to_string(e.coeffs[static_cast<std::size_t>(m)]).c_str(),
                      dd::to_string(b.coeffs[static_cast<std::size_t>(m)]).c_str());
        }
      }
    });
    return 0;
  }

  if (ver_cmd->parsed()) {
    const bool full = ver_full;  // --quick is the default tier
    (void)ver_quick;
    const auto checks = dd::verify::suite(full, ver_seed);
    json arr = json::array();
    int passed = 0, failed = 0;
    for (const auto& check : checks) {
      const dd::verify::CheckResult r = check.run();
      (r.pass ? passed : failed) += 1;
      arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      if (ver_args.format == "text") {
        std::printf("%-38s %s (%8.1f ms)%s%s\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.wall_ms, r.pass ? "" : "  ",
                    r.pass ? "" : r.detail.c_str());
      }
    }
    if (ver_args.format == "text") {
      std::printf("%d passed, %d failed\n", passed, failed);
    } else {
      json doc{{"command", "verify"},
               {"input", json{{"mode", full ? "full" : "quick"}, {"seed", ver_seed}}},
               {"result", json{{"checks", arr}, {"passed", passed}, {"failed", failed}}}};
      doc["wall_time_ms"] =
          std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      std::cout << doc.dump(2) << "\n";
    }
    return failed == 0 ? 0 : 2;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const dd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
