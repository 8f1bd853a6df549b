#include "tk/cli.hpp"
#include "tk/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tk::ValidationError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted K-theory and K_*K computations"};
  app.require_subcommand(1);
  bool json = false;
  std::function<tk::CommandResult()> run;

  auto* twist = app.add_subcommand("twist", "twisted K-groups of a presented module");
  std::string twist_file;
  twist->add_option("FILE", twist_file, "presentation document")->required();
  twist->add_flag("--json", json, "machine-readable output");
  twist->callback([&] { run = [&] { return tk::cmd_twist(read_file(twist_file)); }; });

  auto* kk = app.add_subcommand("kk", "elements of K_*K in u, v");
  std::string kk_op, kk_expr;
  kk->add_option("OP", kk_op, "member, decompose, eps or conj")
      ->required()
      ->check(CLI::IsMember({"member", "decompose", "eps", "conj"}));
  kk->add_option("EXPR", kk_expr, "Laurent polynomial in u and v")->required();
  kk->add_flag("--json", json, "machine-readable output");
  kk->callback([&] { run = [&] { return tk::cmd_kk(kk_op, kk_expr); }; });

  auto* fgl = app.add_subcommand("fgl", "multiplicative formal group law");
  fgl->require_subcommand(1);
  auto* nseries = fgl->add_subcommand("nseries", "[n](s) through --order");
  long n = 0, order = 8, m = 2;
  nseries->add_option("N", n, "n")->required();
  nseries->add_option("--order", order, "truncation order")->required();
  nseries->add_flag("--json", json, "machine-readable output");
  nseries->callback([&] { run = [&] { return tk::cmd_fgl_nseries(n, order); }; });
  auto* identity = fgl->add_subcommand("identity", "check b(s)^m = b([m](s))");
  identity->add_option("--m", m, "power")->required();
  identity->add_option("--order", order, "truncation order")->required();
  identity->add_flag("--json", json, "machine-readable output");
  identity->callback([&] { run = [&] { return tk::cmd_fgl_identity(m, order); }; });

  auto* cp = app.add_subcommand("cp", "the ring K_*(CP^inf)");
  cp->require_subcommand(1);
  auto* mult = cp->add_subcommand("mult", "b_I * b_J");
  long i = 0, j = 0, cp_trunc = -1;
  mult->add_option("I", i)->required();
  mult->add_option("J", j)->required();
  mult->add_option("--trunc", cp_trunc, "multiply in the truncation Lambda_D");
  mult->add_flag("--json", json, "machine-readable output");
  mult->callback([&] { run = [&] { return tk::cmd_cp_mult(i, j, cp_trunc); }; });

  auto* tor = app.add_subcommand("tor", "Tor_s(M, Z) over the truncated ring (JSON report)");
  std::string tor_file, mode = "free";
  long max_s = 0, tor_trunc = 0;
  tor->add_option("FILE", tor_file, "presentation document")->required();
  tor->add_option("--max-s", max_s, "highest s")->required();
  tor->add_option("--mode", mode, "free or relative")->check(CLI::IsMember({"free", "relative"}));
  tor->add_option("--trunc", tor_trunc, "truncation D (default: the document's)");
  bool tor_text = false;
  tor->add_flag("--text", tor_text, "human-readable output instead of JSON");
  tor->callback([&] {
    json = !tor_text;
    run = [&] { return tk::cmd_tor(read_file(tor_file), max_s, mode, tor_trunc); };
  });

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  std::string depth = "normal";
  bool inject = false;
  selftest->add_option("--depth", depth, "normal or deep")->check(CLI::IsMember({"normal", "deep"}));
  selftest->add_flag("--inject-fault", inject, "perturb one structure constant; the suites must fail");
  selftest->add_flag("--json", json, "machine-readable output");
  selftest->callback([&] { run = [&] { return tk::cmd_selftest(depth, inject); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return tk::kInputError;
  }

  const tk::CommandResult result = tk::guarded(run);
  if (result.code == tk::kInputError || result.code == tk::kInconsistent) {
    std::cerr << "tk: " << result.text << "\n";
    if (json) std::cout << result.render(true);
  } else {
    std::cout << result.render(json);
  }
  return result.code;
}
