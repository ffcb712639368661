// downup: certify and explore generalized down-up algebras.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "downup/cli/commands.hpp"

namespace {

using namespace downup;

struct Args {
  std::string spec_path;
  std::string preset;
  std::string scheme;
  std::uint64_t seed = 1;
  std::string format = "text";
  cli::Options options;
  int degree = -1;
  std::string expression;
  bool homogenized = false;
  int positional_degree = -1;
};

cli::AlgebraSpec load_spec(const Args& a) {
  if (!a.spec_path.empty() && !a.preset.empty())
    throw InputError("give either --spec or --preset, not both");
  cli::AlgebraSpec spec;
  if (!a.spec_path.empty()) {
    std::ifstream in(a.spec_path);
    if (!in)
      throw InputError("cannot read spec file '" + a.spec_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      spec = cli::parse_spec(buf.str());
    } catch (const cli::ParseError& e) {
      throw InputError(a.spec_path + ": " + e.what());
    }
  } else if (!a.preset.empty()) {
    spec.preset = cli::parse_preset_call(a.preset);
  } else {
    throw InputError("no algebra given; use --spec FILE or --preset NAME(ARGS)");
  }
  if (!a.scheme.empty())
    spec.scheme = gdu::parse_scheme(a.scheme);
  return spec;
}

void emit(const cli::Report& r, const std::string& format) {
  std::cout << (format == "machine" ? cli::render_machine(r) : cli::render_text(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized down-up algebras: Groebner, PBW, solvable and graded checks"};
  app.require_subcommand(1);
  Args a;

  auto add_algebra_flags = [&](CLI::App* cmd) {
    cmd->add_option("--spec", a.spec_path, "Algebra spec file");
    cmd->add_option("--preset", a.preset, "Preset call, e.g. sl2 or conformal(2)");
    cmd->add_option("--scheme", a.scheme, "Weight scheme override")->check(CLI::IsMember({"all-ones", "deg-f"}));
    cmd->add_option("--seed", a.seed, "Seed for random(n) presets");
    cmd->add_option("--format", a.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  };

  auto* certify = app.add_subcommand("certify", "Groebner, PBW, solvable and ordering checks");
  add_algebra_flags(certify);
  certify->add_option("--degree", a.degree, "PBW count degree (default 8)")->check(CLI::NonNegativeNumber);
  certify->add_option("--bound", a.options.bound, "Ordering-axiom bound (default 4)")->check(CLI::Range(2, 12));

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  add_algebra_flags(nf);
  nf->add_option("expression", a.expression, "Expression over X1, X2, X3 (and T with --homogenized)")->required();
  nf->add_flag("--homogenized", a.homogenized, "Reduce modulo the homogenized relations");

  auto* graded = app.add_subcommand("graded", "Associated graded, homogenization, Hilbert series, GK dimension");
  graded->require_subcommand(1);
  std::string graded_sub;
  for (const char* sub : {"assoc", "homogenize", "hilbert", "gk", "rees", "quadratic"}) {
    auto* s = graded->add_subcommand(sub);
    add_algebra_flags(s);
    s->add_option("--degree", a.degree, "Degree cap")->check(CLI::NonNegativeNumber);
    if (std::string(sub) == "hilbert" || std::string(sub) == "rees")
      s->add_option("N", a.positional_degree, "Degree cap")->check(CLI::NonNegativeNumber);
    s->callback([&graded_sub, sub] { graded_sub = sub; });
  }

  auto* presets = app.add_subcommand("presets", "Preset catalog");
  presets->require_subcommand(1);
  auto* list = presets->add_subcommand("list", "List presets");
  list->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (list->parsed()) {
      std::cout << (a.format == "machine" ? cli::presets_machine() : cli::presets_text());
      return 0;
    }
    if (a.positional_degree >= 0)
      a.degree = a.positional_degree;
    if (a.degree >= 0)
      a.options.degree = a.degree;
    auto alg = cli::resolve(load_spec(a), a.seed);
    cli::Report report;
    if (certify->parsed())
      report = cli::cmd_certify(alg, a.options);
    else if (nf->parsed())
      report = cli::cmd_normal_form(alg, a.expression, a.homogenized);
    else
      report = cli::cmd_graded(alg, graded_sub, a.options);
    emit(report, a.format);
    return report.exit_code();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
