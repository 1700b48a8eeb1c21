// Command-line front end: sequence tables, sedenion terms, root reports,
// generating-function coefficients, multiplication tables, operation counts
// and the verification suites.

#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cdalg/element.hpp"
#include "emit.hpp"
#include "sedseq/term.hpp"
#include "suites.hpp"
#include "triseq/params.hpp"
#include "triseq/roots.hpp"
#include "triseq/sequence.hpp"

namespace {

using cli::Emitter;
using cli::Json;
using triseq::Rational;
using triseq::TriParams;

struct SequenceChoice {
  std::string name;     // empty when explicit params were given
  TriParams params;
  Json config;          // echo for the output header
};

TriParams parse_params_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 6) {
    throw std::invalid_argument("--params expects 6 comma-separated rationals: v0,v1,v2,r,s,t");
  }
  return TriParams{triseq::parse_rational(parts[0]), triseq::parse_rational(parts[1]),
                   triseq::parse_rational(parts[2]), triseq::parse_rational(parts[3]),
                   triseq::parse_rational(parts[4]), triseq::parse_rational(parts[5])};
}

SequenceChoice resolve_sequence(const std::string& name, const std::string& params) {
  if (name.empty() == params.empty()) {
    throw std::invalid_argument("exactly one of --name or --params must be given");
  }
  SequenceChoice choice;
  if (!name.empty()) {
    choice.name = name;
    choice.params = triseq::named_sequence(name).params;
    choice.config["name"] = name;
  } else {
    choice.params = parse_params_list(params);
    choice.config["params"] = params;
  }
  return choice;
}

std::string rat_str(const Rational& v) { return triseq::format_rational(v); }

int run_seq(const SequenceChoice& choice, long from, long to, const std::string& format) {
  Json config = choice.config;
  config["subcommand"] = "seq";
  config["from"] = from;
  config["to"] = to;
  Emitter emit(format, config, {"n", "value"});
  for (long n = from; n <= to; ++n) {
    emit.add(Json{{"n", n}, {"value", rat_str(triseq::seq_term(choice.params, n))}});
  }
  return emit.write(std::cout);
}

int run_sedenion(const SequenceChoice& choice, long from, long to,
                 const std::string& format) {
  Json config = choice.config;
  config["subcommand"] = "sedenion";
  config["from"] = from;
  config["to"] = to;
  std::vector<std::string> columns = {"n"};
  for (int i = 0; i < 16; ++i) columns.push_back("c" + std::to_string(i));
  columns.push_back("norm_sq");
  Emitter emit(format, config, columns);
  for (long n = from; n <= to; ++n) {
    const sedseq::SedenionTerm term = sedseq::sed_term(choice.params, n);
    Json record{{"n", n}};
    for (int i = 0; i < 16; ++i) {
      record["c" + std::to_string(i)] = rat_str(term.value[static_cast<std::size_t>(i)]);
    }
    record["norm_sq"] = rat_str(sedseq::sed_norm_direct(term));
    emit.add(record);
  }
  return emit.write(std::cout);
}

int run_roots(const SequenceChoice& choice, const std::string& format) {
  Json config = choice.config;
  config["subcommand"] = "roots";
  const Rational delta = triseq::discriminant(choice.params);
  const triseq::RootData rd = triseq::cubic_roots(choice.params);  // throws if delta <= 0
  const std::vector<std::pair<std::string, Json>> fields = {
      {"alpha", rd.alpha},
      {"beta_re", rd.beta.real()},
      {"beta_im", rd.beta.imag()},
      {"gamma_re", rd.gamma.real()},
      {"gamma_im", rd.gamma.imag()},
      {"delta", rat_str(delta)},
      {"delta_approx", delta.get_d()},
      {"A", rd.big_a},
      {"B", rd.big_b},
      {"P_re", rd.p.real()},
      {"P_im", rd.p.imag()},
      {"Q_re", rd.q.real()},
      {"Q_im", rd.q.imag()},
      {"R_re", rd.rr.real()},
      {"R_im", rd.rr.imag()},
  };
  Emitter emit(format, config, {"field", "value"});
  for (const auto& [key, value] : fields) {
    emit.add(Json{{"field", key}, {"value", value}});
  }
  return emit.write(std::cout);
}

int run_gf(const SequenceChoice& choice, long count, const std::string& format) {
  if (count < 1) throw std::invalid_argument("--count must be >= 1");
  Json config = choice.config;
  config["subcommand"] = "gf";
  config["count"] = count;
  std::vector<std::string> columns = {"k"};
  for (int i = 0; i < 16; ++i) columns.push_back("c" + std::to_string(i));
  Emitter emit(format, config, columns);
  const auto coeffs = sedseq::gf_coefficients(choice.params, static_cast<std::size_t>(count));
  for (const auto& term : coeffs) {
    Json record{{"k", term.n}};
    for (int i = 0; i < 16; ++i) {
      record["c" + std::to_string(i)] = rat_str(term.value[static_cast<std::size_t>(i)]);
    }
    emit.add(record);
  }
  return emit.write(std::cout);
}

int run_multable(int level, const std::string& format) {
  Json config{{"subcommand", "multable"}, {"level", level}};
  const cdalg::MulTable& table = cdalg::mul_table(level);
  const std::size_t n = table.dim();
  std::vector<std::string> columns = {"i"};
  for (std::size_t j = 0; j < n; ++j) columns.push_back("e" + std::to_string(j));
  Emitter emit(format, config, columns);
  for (std::size_t i = 0; i < n; ++i) {
    Json record{{"i", i}};
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = table(i, j);
      record["e" + std::to_string(j)] =
          std::string(e.sign < 0 ? "-" : "+") + "e" + std::to_string(e.index);
    }
    emit.add(record);
  }
  return emit.write(std::cout);
}

int run_opcount(int level, const std::string& format, bool format_given) {
  using RatElem = cdalg::Element<Rational>;
  RatElem x(level), y(level);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    x[i] = Rational(static_cast<long>(i) + 1);
    y[i] = Rational(static_cast<long>(i) + 2);
  }
  cdalg::OpCount ops;
  (void)cdalg::multiply_counted(x, y, ops);
  if (!format_given) {
    std::cout << "multiplications: " << ops.multiplications
              << ", additions: " << ops.additions << "\n";
    return 0;
  }
  Json config{{"subcommand", "opcount"}, {"level", level}};
  Emitter emit(format, config, {"level", "multiplications", "additions"});
  emit.add(Json{{"level", level},
                {"multiplications", ops.multiplications},
                {"additions", ops.additions}});
  return emit.write(std::cout);
}

int run_verify(const cli::VerifyOptions& options, const std::string& format,
               bool format_given) {
  const std::vector<cli::CheckResult> results = cli::run_verify(options);
  if (format_given) {
    Json config{{"subcommand", "verify"}, {"suite", options.suite},
                {"tolerance", options.tolerance}};
    if (options.name) config["name"] = *options.name;
    Emitter emit(format, config, {"suite", "check", "status", "residual", "detail"});
    for (const auto& r : results) {
      emit.add(Json{{"suite", r.suite},
                    {"check", r.check},
                    {"status", r.status},
                    {"residual", r.residual},
                    {"exact", r.exact},
                    {"detail", r.detail}});
      emit.count_status(r.status);
    }
    return emit.write(std::cout);
  }
  long passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    std::cout << r.check << ": " << r.status;
    if (r.status == "SKIP") {
      std::cout << " (" << r.detail << ")";
      ++skipped;
    } else {
      std::cout << " residual " << r.residual;
      if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
      r.status == "PASS" ? ++passed : ++failed;
    }
    std::cout << "\n";
  }
  std::cout << "summary: passed " << passed << ", failed " << failed << ", skipped "
            << skipped << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Tribonacci sequences and sedenions, exactly"};
  app.require_subcommand(1);

  std::string name, params, format = "csv", suite = "all";
  long from = 0, to = 10, count = 11;
  int level = 4;
  double tolerance = 0.0;

  const auto add_selector = [&](CLI::App* cmd) {
    cmd->add_option("--name", name, "named sequence (see `verify --help`)");
    cmd->add_option("--params", params, "explicit v0,v1,v2,r,s,t as p/q rationals");
  };
  const auto add_format = [&](CLI::App* cmd) {
    return cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* seq_cmd = app.add_subcommand("seq", "print exact sequence values over an index range");
  add_selector(seq_cmd);
  seq_cmd->add_option("--from", from, "first index");
  seq_cmd->add_option("--to", to, "last index (inclusive)");
  add_format(seq_cmd);

  auto* sed_cmd = app.add_subcommand("sedenion", "print sedenion terms (16 coefficients + norm)");
  add_selector(sed_cmd);
  sed_cmd->add_option("--from", from, "first index");
  sed_cmd->add_option("--to", to, "last index (inclusive)");
  add_format(sed_cmd);

  auto* roots_cmd = app.add_subcommand("roots", "characteristic roots and Binet data");
  add_selector(roots_cmd);
  add_format(roots_cmd);

  auto* gf_cmd = app.add_subcommand("gf", "generating-function power-series coefficients");
  add_selector(gf_cmd);
  gf_cmd->add_option("--count", count, "number of coefficients");
  add_format(gf_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite, "one of: all tables binet gf sum norm identities matrix cdalg");
  verify_cmd->add_option("--name", name, "restrict sequence-indexed checks to one sequence");
  verify_cmd->add_option("--tolerance", tolerance, "override the float tolerance");
  auto* verify_format = add_format(verify_cmd);

  auto* mul_cmd = app.add_subcommand("multable", "signed basis multiplication table");
  mul_cmd->add_option("--level", level, "algebra level 0..5");
  add_format(mul_cmd);

  auto* op_cmd = app.add_subcommand("opcount", "scalar operation count of one naive product");
  op_cmd->add_option("--level", level, "algebra level 0..5");
  auto* op_format = add_format(op_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (seq_cmd->parsed() || sed_cmd->parsed()) {
      if (from > to) throw std::invalid_argument("--from must be <= --to");
      const SequenceChoice choice = resolve_sequence(name, params);
      return seq_cmd->parsed() ? run_seq(choice, from, to, format)
                               : run_sedenion(choice, from, to, format);
    }
    if (roots_cmd->parsed()) {
      return run_roots(resolve_sequence(name, params), format);
    }
    if (gf_cmd->parsed()) {
      return run_gf(resolve_sequence(name, params), count, format);
    }
    if (verify_cmd->parsed()) {
      if (!cli::is_suite(suite)) {
        std::ostringstream msg;
        msg << "unknown suite \"" << suite << "\"; valid suites:";
        for (const auto& s : cli::kSuiteNames) msg << " " << s;
        throw std::invalid_argument(msg.str());
      }
      cli::VerifyOptions options;
      options.suite = suite;
      if (!name.empty()) options.name = name;
      if (tolerance != 0.0) {
        if (tolerance < 0.0) throw std::invalid_argument("--tolerance must be positive");
        options.tolerance = tolerance;
        options.tolerance_scalar = tolerance;
      } else if (const char* env = std::getenv("SEDSEQ_TOLERANCE")) {
        const double env_tol = std::stod(env);
        if (env_tol <= 0.0) throw std::invalid_argument("SEDSEQ_TOLERANCE must be positive");
        options.tolerance = env_tol;
        options.tolerance_scalar = env_tol;
      }
      if (options.name) triseq::named_sequence(*options.name);  // validate early
      return run_verify(options, format, verify_format->count() > 0);
    }
    if (mul_cmd->parsed()) {
      return run_multable(level, format);
    }
    return run_opcount(level, format, op_format->count() > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
