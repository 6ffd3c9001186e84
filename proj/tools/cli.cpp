#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "clifford/fvs.hpp"
#include "clifford/matrep.hpp"
#include "clifford/parser.hpp"
#include "clifford/polynomial.hpp"

namespace clifford::cli {
namespace {

using json = nlohmann::json;

// Dense oracle checks in `verify` are limited to spans of this many generators.
constexpr int kVerifyOracleMaxSpan = 8;

struct Config {
  std::string command;
  Signature sig{1, 0};
  StepMode mode = StepMode::span_reduced;
  std::string scalar = "rational";
  bool json = false;
  bool trace = false;
  std::string expr;
};

struct Outcome {
  int status = kOk;
  json result;
  std::string text;  // printed to stdout in text mode
  std::string diagnostic;  // printed to stderr in text mode
  std::vector<std::string> trace_lines;
  json trace = json::array();
};

Signature parse_signature(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--signature", "expected p,q");
  try {
    std::size_t used_p = 0, used_q = 0;
    const std::string ps = text.substr(0, comma), qs = text.substr(comma + 1);
    const int p = std::stoi(ps, &used_p);
    const int q = std::stoi(qs, &used_q);
    if (used_p != ps.size() || used_q != qs.size()) throw std::invalid_argument("trailing characters");
    return Signature(p, q);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--signature", std::string("invalid signature '") + text + "': " + e.what());
  }
}

template <Scalar S>
std::string str(const S& x) {
  return ScalarTraits<S>::to_string(x);
}

template <Scalar S>
json coeff_array(const std::vector<S>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(str(c));
  return arr;
}

template <Scalar S>
void record_trace(const FvsResult<S>& r, Outcome& o) {
  for (std::size_t i = 0; i < r.iterates.size(); ++i) {
    const auto& it = r.iterates[i];
    const std::string idx = std::to_string(i + 1);
    o.trace_lines.push_back("t_{" + idx + "}= " + str(it.t) + " , m_{" + idx + "}= " + format(it.m));
    o.trace.push_back(json{{"i", i + 1}, {"t", str(it.t)}, {"m", format(it.m)}});
  }
}

ExtendedBasis basis_for(const Signature& sig, std::uint32_t effective_span, StepMode mode) {
  if (mode == StepMode::full || mode == StepMode::bott) return ExtendedBasis::full(sig);
  return ExtendedBasis(sig, effective_span);
}

template <Scalar S>
bool nearly_equal(const S& a, const S& b) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
  }
}

template <Scalar S>
bool nearly_equal(const Multivector<S>& a, const Multivector<S>& b) {
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return max_norm(a - b) <= 1e-9 * std::max({1.0, max_norm(a), max_norm(b)});
  }
}

template <Scalar S>
bool nearly_equal(const RepMatrix<S>& a, const RepMatrix<S>& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!nearly_equal(a(i, j), b(i, j))) return false;
  return true;
}

template <Scalar S>
S power(const S& base, std::size_t exponent) {
  S acc(1);
  for (std::size_t k = 0; k < exponent; ++k) acc *= base;
  return acc;
}

template <Scalar S>
Outcome cmd_inverse(const Config& cfg, const Multivector<S>& a) {
  Outcome o;
  const auto r = fvs_run(a, cfg.mode, cfg.trace);
  record_trace(r, o);
  o.result = {{"inverse", r.inverse ? json(format(*r.inverse)) : json(nullptr)},
              {"charpoly", coeff_array(char_poly(r))},
              {"steps", r.steps_run},
              {"singular", r.singular}};
  if (r.inverse) {
    o.text = format(*r.inverse);
  } else {
    o.status = kSingular;
    o.diagnostic = SingularError().what();
  }
  return o;
}

template <Scalar S>
Outcome cmd_charpoly(const Config& cfg, const Multivector<S>& a) {
  Outcome o;
  const auto r = fvs_run(a, cfg.mode, cfg.trace);
  record_trace(r, o);
  const auto poly = char_poly(r);
  o.result = {{"degree", r.degree()}, {"coeffs", coeff_array(poly)}};
  o.text = format_polynomial(poly);
  return o;
}

template <Scalar S>
Outcome cmd_det(const Config& cfg, const Multivector<S>& a) {
  Outcome o;
  const auto r = fvs_run(a, cfg.mode, cfg.trace);
  record_trace(r, o);
  const S det = rep_determinant(r);
  o.result = {{"determinant", str(det)}, {"degree", r.degree()}};
  o.text = str(det);
  return o;
}

template <Scalar S>
Outcome cmd_matrep(const Config& cfg, const Multivector<S>& a) {
  Outcome o;
  const auto basis = basis_for(a.signature(), effective_span_mask(a), cfg.mode);
  const auto m = pi(a, basis);
  json blades = json::array(), rows = json::array();
  std::ostringstream text;
  text << "dim=" << m.dim() << " basis=";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    text << (k ? "," : "") << to_string(basis[k]);
    blades.push_back(to_string(basis[k]));
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    text << '\n';
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      text << (j ? " " : "") << str(m(i, j));
      row.push_back(str(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  o.result = {{"dim", m.dim()}, {"basis", blades}, {"rows", rows}};
  o.text = text.str();
  return o;
}

template <Scalar S>
Outcome cmd_verify(const Config& cfg, const Multivector<S>& a) {
  Outcome o;
  json checks = json::array();
  std::ostringstream text;
  bool all = true;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    all = all && ok;
    checks.push_back({{"name", name}, {"status", ok ? "PASS" : "FAIL"}, {"detail", detail}});
    text << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) text << ": " << detail;
    text << '\n';
  };

  std::optional<FvsResult<S>> run;
  try {
    run = fvs_run(a, cfg.mode, cfg.trace);
    check("termination", true, "N = " + std::to_string(run->steps) + ", steps run = " + std::to_string(run->steps_run));
  } catch (const NonTermination& e) {
    check("termination", false, e.what());
  }
  if (run) {
    record_trace(*run, o);
    if (run->inverse) {
      const auto one = Multivector<S>::scalar(a.signature(), S(1));
      check("right inverse", nearly_equal(a * *run->inverse, one), "A * A^-1 = 1");
      check("left inverse", nearly_equal(*run->inverse * a, one), "A^-1 * A = 1");
    }
  }

  const std::uint32_t span = effective_span_mask(a);
  if (std::popcount(span) > kVerifyOracleMaxSpan) {
    check("matrix oracle", true, "skipped: span of " + std::to_string(std::popcount(span)) + " generators exceeds " +
                                     std::to_string(kVerifyOracleMaxSpan));
  } else {
    const MulTable table{ExtendedBasis(a.signature(), span)};
    const auto m = pi(a, table);
    const std::size_t dim = table.dim();
    const S oracle = bareiss_det(m);
    if (run) {
      const S det = rep_determinant(*run);
      // Representations of different sizes are direct sums of copies of one another.
      bool ok;
      if (run->degree() <= dim && dim % run->degree() == 0)
        ok = nearly_equal(power(det, dim / run->degree()), oracle);
      else
        ok = nearly_equal(det, power(oracle, run->degree() / dim));
      if (run->singular) {
        check("singular", nearly_equal(oracle, S(0)),
              "consistent (oracle det = " + str(oracle) + ")");
      } else {
        check("oracle determinant", ok, "fvs det = " + str(det) + ", oracle det = " + str(oracle));
      }
    }
    check("homomorphism", nearly_equal(pi(a * a, table), m * m), "pi(A A) = pi(A) pi(A)");
    check("trace identity", nearly_equal(m.trace(), S(scalar_from_int<S>(static_cast<long>(dim)) * scalar_part(a))),
          "tr pi(A) = " + std::to_string(dim) + " <A>_0");
    check("first-row recovery", nearly_equal(pi_inverse(m, table.basis()), a), "pi^-1(pi(A)) = A");
    if (run && run->inverse)
      check("inverse image", nearly_equal(m * pi(*run->inverse, table), RepMatrix<S>::identity(dim)),
            "pi(A) pi(A^-1) = I");
  }

  o.result = {{"passed", all}, {"checks", checks}};
  o.text = text.str() + "verify: " + (all ? "PASS" : "FAIL");
  if (!all) o.status = kVerifyFailed;
  return o;
}

template <Scalar S>
Outcome dispatch(const Config& cfg) {
  const auto a = parse<S>(cfg.expr, cfg.sig);
  if (cfg.command == "inverse") return cmd_inverse(cfg, a);
  if (cfg.command == "charpoly") return cmd_charpoly(cfg, a);
  if (cfg.command == "det") return cmd_det(cfg, a);
  if (cfg.command == "matrep") return cmd_matrep(cfg, a);
  return cmd_verify(cfg, a);
}

void render_parse_error(const ParseError& e, const std::string& expr, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (expr.find('\n') == std::string::npos) {
    err << "  " << expr << '\n' << "  " << std::string(std::min(e.position(), expr.size()), ' ') << "^\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multivector inverses, characteristic polynomials and determinants in Cl(p,q)", "clfvs"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  std::string signature, mode = "reduced";
  app.add_option("--signature", signature, "Algebra signature as p,q")->required();
  app.add_option("--mode", mode, "Step count: full, bott, reduced or span-full")
      ->check(CLI::IsMember({"full", "bott", "reduced", "span-full"}));
  app.add_option("--scalar", cfg.scalar, "Scalar field")->check(CLI::IsMember({"rational", "f64"}));
  app.add_flag("--json", cfg.json, "Emit a JSON document");
  app.add_flag("--trace", cfg.trace, "Print every recursion step");

  const std::pair<const char*, const char*> commands[] = {
      {"inverse", "Multivector inverse"},
      {"charpoly", "Characteristic polynomial"},
      {"det", "Representation determinant"},
      {"matrep", "Dump the real matrix representation"},
      {"verify", "Cross-check the recursion against the matrix representation"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("expr", cfg.expr, "Multivector expression, or - to read standard input")->required();
    sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cfg.sig = parse_signature(signature);
    cfg.mode = *parse_step_mode(mode);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (cfg.expr == "-") {
    cfg.expr.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    while (!cfg.expr.empty() && (cfg.expr.back() == '\n' || cfg.expr.back() == '\r')) cfg.expr.pop_back();
  }

  Outcome o;
  try {
    o = cfg.scalar == "f64" ? dispatch<double>(cfg) : dispatch<Rational>(cfg);
  } catch (const ParseError& e) {
    render_parse_error(e, cfg.expr, err);
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.json) {
    json doc = {{"command", cfg.command},
                {"signature", {{"p", cfg.sig.p()}, {"q", cfg.sig.q()}}},
                {"mode", std::string(to_string(cfg.mode))},
                {"scalar", cfg.scalar},
                {"result", o.result}};
    if (cfg.trace) doc["trace"] = o.trace;
    out << doc.dump(2) << '\n';
    if (o.status == kSingular) err << o.diagnostic << '\n';
    return o.status;
  }
  for (const auto& line : o.trace_lines) out << line << '\n';
  if (!o.text.empty()) out << o.text << '\n';
  if (!o.diagnostic.empty()) err << o.diagnostic << '\n';
  return o.status;
}

}  // namespace clifford::cli
