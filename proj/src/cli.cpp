#include "tk/cli.hpp"

#include "tk/cp_ring.hpp"
#include "tk/errors.hpp"
#include "tk/expr_parser.hpp"
#include "tk/kk.hpp"
#include "tk/selftest.hpp"
#include "tk/twist.hpp"

#include <sstream>

namespace tk {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kMaxOrder = 64;
constexpr long kMaxMaxS = 8;
constexpr const char* kCaveat = "higher Tor computed over truncated ring";

CommandResult error(int code, const std::string& kind, const std::string& message) {
  CommandResult r;
  r.code = code;
  r.text = kind + ": " + message;
  r.json = Json{{"error", {{"kind", kind}, {"message", message}}}};
  return r;
}

void require_range(const std::string& what, long value, long lo, long hi) {
  if (value < lo || value > hi)
    throw ValidationError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                          std::to_string(value));
}

Json witness_json(const Witness& w) {
  return Json{{"k", w.k.str()}, {"degree", w.degree}, {"coefficient", to_string(w.coefficient)}};
}

Json number(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

}  // namespace

std::string CommandResult::render(bool as_json) const {
  if (as_json) return json.dump(2) + "\n";
  return text.empty() || text.back() == '\n' ? text : text + "\n";
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    // The message already names the offset or line and column.
    CommandResult r = error(kInputError, "parse error", e.what());
    r.text = e.what();
    if (e.line() > 0) {
      r.json["error"]["line"] = e.line();
      r.json["error"]["column"] = e.column();
    } else {
      r.json["error"]["offset"] = e.offset();
    }
    return r;
  } catch (const ValidationError& e) {
    return error(kInputError, "invalid input", e.what());
  } catch (const NotIntegral& e) {
    return error(kNegative, "not integral", e.what());
  } catch (const OverflowError& e) {
    return error(kInputError, "overflow", e.what());
  } catch (const NonInvertibleSubstitution& e) {
    return error(kInputError, "invalid input", e.what());
  } catch (const CompositionWithUnit& e) {
    return error(kInputError, "invalid input", e.what());
  } catch (const ZeroInput& e) {
    return error(kInputError, "invalid input", e.what());
  } catch (const std::exception& e) {
    // ConsistencyError, NotAComplex and anything unexpected.
    return error(kInconsistent, "internal consistency failure", e.what());
  }
}

CommandResult cmd_twist(const std::string& document) {
  const Presentation p = parse_presentation(document);
  const GradedGroup g = twisted_k(p);
  return CommandResult{kOk, g.str(), to_json(g)};
}

CommandResult cmd_kk(const std::string& subcommand, const std::string& expression) {
  const KKElement f(parse_expression(expression, {"u", "v"}));
  CommandResult r;
  r.json["expression"] = f.str();
  if (subcommand == "member") {
    const Membership m = membership(f);
    r.json["member"] = m.member;
    if (m.member) {
      r.text = "yes";
    } else {
      r.code = kNegative;
      r.text = "no (witness: " + m.witness->str() + ")";
      r.json["witness"] = witness_json(*m.witness);
    }
  } else if (subcommand == "decompose") {
    const Membership m = membership(f);
    if (!m.member) {
      r.code = kNegative;
      r.text = "not in K_*K (witness: " + m.witness->str() + ")";
      r.json["member"] = false;
      r.json["witness"] = witness_json(*m.witness);
      return r;
    }
    const Decomposition d = decompose(f);
    r.text = decomposition_text(d);
    Json terms = Json::object();
    for (const auto& [i, c] : d) terms[std::to_string(i)] = c.str();
    r.json["decomposition"] = terms;
  } else if (subcommand == "eps") {
    const Membership m = membership(f);
    if (!m.member) {
      r.code = kNegative;
      r.text = "not in K_*K (witness: " + m.witness->str() + ")";
      r.json["member"] = false;
      r.json["witness"] = witness_json(*m.witness);
      return r;
    }
    r.text = epsilon(f).str();
    r.json["eps"] = r.text;
  } else if (subcommand == "conj") {
    r.text = conjugate(f).str();
    r.json["conj"] = r.text;
  } else {
    throw ValidationError("unknown kk subcommand '" + subcommand + "'");
  }
  return r;
}

CommandResult cmd_fgl_nseries(long n, long order) {
  require_range("N", n, 0, 1000);
  require_range("--order", order, 0, kMaxOrder);
  const auto series = n_series(static_cast<unsigned>(n), static_cast<unsigned>(order));
  Json coefficients = Json::array();
  for (unsigned e = 0; e <= static_cast<unsigned>(order); ++e) coefficients.push_back(number(series.coefficient({e})));
  CommandResult r;
  r.text = series.str();
  r.json = Json{{"n", n}, {"order", order}, {"series", r.text}, {"coefficients", coefficients}};
  return r;
}

CommandResult cmd_fgl_identity(long m, long order) {
  require_range("--m", m, 1, kMaxOrder);
  require_range("--order", order, 0, kMaxOrder);
  const IdentityReport rep = fgl_identity_check(static_cast<unsigned>(m), static_cast<unsigned>(order));
  CommandResult r;
  r.code = rep.pass ? kOk : kNegative;
  r.text = std::string(rep.pass ? "pass" : "fail") + ": " + rep.identity;
  if (!rep.pass) r.text += " (" + rep.counterexample + ")";
  r.json = Json{{"m", m}, {"order", order}, {"identity", rep.identity}, {"pass", rep.pass}};
  if (!rep.pass) r.json["counterexample"] = rep.counterexample;
  return r;
}

CommandResult cmd_cp_mult(long i, long j, long truncation) {
  require_range("I", i, 0, 1000);
  require_range("J", j, 0, 1000);
  BetaPoly product;
  if (truncation < 0) {
    product = beta_product(static_cast<unsigned>(i), static_cast<unsigned>(j));
  } else {
    require_range("--trunc", truncation, 0, 1000);
    if (i > truncation || j > truncation)
      throw ValidationError("indices exceed the truncation " + std::to_string(truncation));
    const TruncRing ring(static_cast<unsigned>(truncation));
    product = ring.multiply(BetaPoly::beta(static_cast<unsigned>(i)), BetaPoly::beta(static_cast<unsigned>(j)));
  }
  CommandResult r;
  r.text = product.str();
  r.json = Json{{"i", i}, {"j", j}, {"truncation", truncation < 0 ? Json(nullptr) : Json(truncation)},
                {"product", r.text}};
  return r;
}

CommandResult cmd_tor(const std::string& document, long max_s, const std::string& mode, long truncation) {
  require_range("--max-s", max_s, 0, kMaxMaxS);
  require_range("--trunc", truncation, 0, 1000);
  if (mode != "free" && mode != "relative") throw ValidationError("--mode must be free or relative");
  const Presentation p = parse_presentation(document);
  const auto m = mode == "free" ? ResolutionMode::free : ResolutionMode::relative;
  const unsigned d = truncation == 0 ? p.truncation : static_cast<unsigned>(truncation);
  const auto groups = tor(p, static_cast<unsigned>(max_s), m, d);
  const GradedGroup expected = twisted_k(p);
  if (!(groups.at(0) == expected))
    throw ConsistencyError("Tor_0 = " + groups[0].str() + " but twisted K = " + expected.str());

  CommandResult r;
  Json values = Json::array();
  std::ostringstream text;
  for (std::size_t s = 0; s < groups.size(); ++s) {
    Json entry = Json{{"s", s}};
    const Json group = to_json(groups[s]);
    for (const auto& [k, v] : group.items()) entry[k] = v;
    values.push_back(entry);
    text << "Tor_" << s << ": " << groups[s].str() << "\n";
  }
  text << "(truncation " << d << ", " << mode << " mode; " << kCaveat << ")";
  r.text = text.str();
  r.json = Json{{"truncation", d}, {"mode", mode}, {"caveat", kCaveat}, {"tor", values}};
  return r;
}

CommandResult cmd_selftest(const std::string& depth, bool inject_fault) {
  if (depth != "normal" && depth != "deep") throw ValidationError("--depth must be normal or deep");
  SelftestOptions options = depth == "deep" ? deep_depth() : normal_depth();
  if (inject_fault) {
    options.constants = [](unsigned k, unsigned i, unsigned j) {
      Integer c = structure_constant(k, i, j);
      if (k == 3 && ((i == 1 && j == 2) || (i == 2 && j == 1))) c += 1;
      return c;
    };
  }
  const auto checks = run_selftest(options);
  CommandResult r;
  Json suites = Json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    text << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.cases << " cases]";
    if (!c.pass) text << "\n     counterexample: " << c.counterexample;
    text << "\n";
    Json entry = Json{{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}};
    if (!c.pass) entry["counterexample"] = c.counterexample;
    suites.push_back(entry);
  }
  text << (all ? "all suites passed" : "self-test FAILED");
  r.code = all ? kOk : kNegative;
  r.text = text.str();
  r.json = Json{{"depth", depth}, {"fault_injected", inject_fault}, {"pass", all}, {"suites", suites}};
  return r;
}

}  // namespace tk
