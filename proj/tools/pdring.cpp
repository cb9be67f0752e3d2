// pdring command line: exact invariants of the graded rings attached to an
// ample Q-divisor on the projective line.
//
// Exit codes: 0 success, 1 a verdict contradicts --expect, 2 input error,
// 3 internal cross-check failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "pdr/analyze.hpp"
#include "pdr/classify.hpp"
#include "pdr/frational.hpp"
#include "pdr/hj.hpp"
#include "pdr/parse.hpp"
#include "pdr/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int run_hj(const std::string& value, bool json) {
  pdr::Rational x = pdr::Rational::parse(value);
  pdr::HjSequence seq = pdr::hj_expand(x);
  auto tails = pdr::hj_tails(seq);
  auto sig = pdr::t_signature(seq);
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = "pdring.hj/1";
    j["value"] = x.str();
    j["expansion"] = seq.entries();
    auto t = nlohmann::ordered_json::array();
    for (const auto& e : tails) t.push_back(e.str());
    j["tails"] = std::move(t);
    j["t_signature"] = sig.entries();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << x.str() << " = [[";
    for (std::size_t i = 0; i < seq.size(); ++i) std::cout << (i ? "," : "") << seq[i];
    std::cout << "]]\n";
    std::cout << "tails:";
    for (const auto& e : tails) std::cout << " " << e.str();
    std::cout << "\nT-signature: (";
    for (std::size_t i = 0; i < sig.entries().size(); ++i)
      std::cout << (i ? "," : "") << sig.entries()[i];
    std::cout << ")\n";
  }
  return kExitOk;
}

int run_analyze(const std::string& divisor_text, const std::vector<long long>& primes,
                bool verify, bool json, const std::string& expect) {
  pdr::QDivisor d = pdr::parse_divisor(divisor_text);
  pdr::AnalysisOptions options;
  options.primes = primes;
  options.verify = verify;
  pdr::AnalysisReport report = pdr::analyze(divisor_text, d, options);
  std::cout << (json ? pdr::report_to_json(report) : pdr::report_to_text(report));

  if (expect == "rational" && !report.rationality.rational) return kExitVerdict;
  if (expect == "f-rational") {
    if (!report.rationality.rational) return kExitVerdict;
    for (const auto& pv : report.prime_verdicts)
      if (!pv.verdict.f_rational) return kExitVerdict;
  }
  return kExitOk;
}

int run_failing_primes(const std::string& divisor_text, bool json) {
  pdr::NormalizedDivisor d = pdr::normalize(pdr::parse_divisor(divisor_text));
  auto failing = pdr::failing_primes(d);
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = "pdring.failing_primes/1";
    j["divisor"] = d.str();
    j["failing_primes"] = failing;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << d.str() << " fails F-rationality exactly at: {";
    bool first = true;
    for (long long p : failing) {
      if (!first) std::cout << ", ";
      std::cout << p;
      first = false;
    }
    std::cout << "}\n";
  }
  return kExitOk;
}

int run_render(const std::string& divisor_text, const std::string& format) {
  pdr::NormalizedDivisor d = pdr::normalize(pdr::parse_divisor(divisor_text));
  pdr::DualGraph g = pdr::dual_graph(d);
  pdr::RenderFormat fmt = format == "dot" ? pdr::RenderFormat::dot : pdr::RenderFormat::ascii;
  if (pdr::is_rational_singularity(d).rational) {
    pdr::FundamentalCycle z = pdr::fundamental_cycle(d);
    std::cout << pdr::render_graph(g, &z, fmt);
  } else {
    std::cout << pdr::render_graph(g, nullptr, fmt);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of two-dimensional normal graded rings from divisor data"};
  app.require_subcommand(1);

  std::string hj_value;
  bool hj_json = false;
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of a rational > 1");
  hj->add_option("value", hj_value, "rational number, e.g. 7/5")->required();
  hj->add_flag("--json", hj_json, "emit JSON");

  std::string an_divisor;
  std::vector<long long> an_primes;
  bool an_verify = false, an_json = false;
  std::string an_expect;
  auto* an = app.add_subcommand("analyze", "full analysis of a divisor");
  an->add_option("divisor", an_divisor, "e.g. \"2 - 3/5 - 4/5 - 1/2\"")->required();
  an->add_option("--p", an_primes, "characteristic to test (repeatable)");
  an->add_flag("--verify", an_verify, "run the independent cross-checks");
  an->add_flag("--json", an_json, "emit JSON");
  an->add_option("--expect", an_expect, "exit 1 unless the verdict holds")
      ->check(CLI::IsMember({"rational", "f-rational"}));

  std::string fp_divisor;
  bool fp_json = false;
  auto* fp = app.add_subcommand("failing-primes",
                                "exact set of primes where F-rationality fails");
  fp->add_option("divisor", fp_divisor)->required();
  fp->add_flag("--json", fp_json, "emit JSON");

  long long cl_mult = 3;
  pdr::EnumerationBounds cl_bounds;
  int cl_workers = 0;
  bool cl_json = false;
  auto* cl = app.add_subcommand("classify",
                                "cross-check the multiplicity-3/4 tables by enumeration");
  cl->add_option("--multiplicity", cl_mult, "target multiplicity")
      ->required()
      ->check(CLI::IsMember({3, 4}));
  cl->add_option("--max-s", cl_bounds.max_s, "largest central weight (default 4)");
  cl->add_option("--max-points", cl_bounds.max_points, "largest point count (default 5)");
  cl->add_option("--max-denominator", cl_bounds.max_denominator,
                 "corpus denominator bound (default 9)");
  cl->add_option("--max-param", cl_bounds.max_param, "family parameter bound (default 8)");
  cl->add_option("--max-family-denominator", cl_bounds.max_family_denominator,
                 "instantiated denominator bound, 0 = unbounded (default 60)");
  cl->add_option("--workers", cl_workers, "worker threads (default: hardware)");
  cl->add_flag("--json", cl_json, "emit JSON");

  long long th_mult = 3;
  std::vector<long long> th_primes;
  long long th_max_param = 8, th_max_den = 0;
  int th_workers = 0;
  bool th_json = false;
  auto* th = app.add_subcommand("threshold",
                                "sweep table instantiations through the criterion per prime");
  th->add_option("--multiplicity", th_mult, "target multiplicity")
      ->required()
      ->check(CLI::IsMember({3, 4}));
  th->add_option("--primes", th_primes, "primes to test")->required();
  th->add_option("--max-param", th_max_param, "family parameter bound (default 8)");
  th->add_option("--max-denominator", th_max_den,
                 "instantiated denominator bound, 0 = unbounded (default 0)");
  th->add_option("--workers", th_workers, "worker threads (default: hardware)");
  th->add_flag("--json", th_json, "emit JSON");

  std::string re_divisor, re_format = "ascii";
  auto* re = app.add_subcommand("render", "dual graph with cycle annotations");
  re->add_option("divisor", re_divisor)->required();
  re->add_option("--format", re_format, "dot or ascii (default ascii)")
      ->check(CLI::IsMember({"dot", "ascii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (hj->parsed()) return run_hj(hj_value, hj_json);
    if (an->parsed()) return run_analyze(an_divisor, an_primes, an_verify, an_json, an_expect);
    if (fp->parsed()) return run_failing_primes(fp_divisor, fp_json);
    if (cl->parsed()) {
      auto report = pdr::enumerate_and_verify(cl_bounds, static_cast<int>(cl_mult), cl_workers);
      std::cout << (cl_json ? pdr::report_to_json(report) : pdr::report_to_text(report));
      return report.clean() ? kExitOk : kExitInternal;
    }
    if (th->parsed()) {
      auto report = pdr::threshold_report(static_cast<int>(th_mult), th_primes, th_max_param,
                                          th_max_den, th_workers);
      std::cout << (th_json ? pdr::report_to_json(report) : pdr::report_to_text(report));
      return kExitOk;
    }
    if (re->parsed()) return run_render(re_divisor, re_format);
  } catch (const pdr::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const pdr::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
