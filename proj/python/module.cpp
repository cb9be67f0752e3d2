// Python bindings for the core operations.  Rationals cross the boundary
// as "num/den" strings; everything else maps to plain Python containers.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdr/analyze.hpp"
#include "pdr/classify.hpp"
#include "pdr/frational.hpp"
#include "pdr/hj.hpp"
#include "pdr/parse.hpp"
#include "pdr/render.hpp"

namespace py = pybind11;

namespace {

pdr::Rational rat(const std::string& s) { return pdr::Rational::parse(s); }

std::vector<std::string> rats_to_str(const std::vector<pdr::Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

pdr::NormalizedDivisor make_divisor(long long s, const std::vector<std::string>& fractions) {
  std::vector<pdr::Rational> fr;
  fr.reserve(fractions.size());
  for (const auto& f : fractions) fr.push_back(rat(f));
  return pdr::NormalizedDivisor(s, std::move(fr));
}

const pdr::Family& family_by_id(const std::string& id) {
  for (int table : {3, 4})
    for (const auto& f : pdr::families(table))
      if (f.id == id) return f;
  throw pdr::domain_error("unknown family id: " + id);
}

}  // namespace

PYBIND11_MODULE(pdring, m) {
  m.doc() = "exact invariants of two-dimensional normal graded rings from divisor data";

  py::register_exception<pdr::unsupported_error>(m, "UnsupportedError");
  py::register_exception<pdr::precondition_error>(m, "PreconditionError");
  py::register_exception<pdr::parse_error>(m, "ParseError");
  py::register_exception<pdr::internal_error>(m, "InternalError");

  py::class_<pdr::NormalizedDivisor>(m, "NormalizedDivisor")
      .def(py::init(&make_divisor), py::arg("s"), py::arg("fractions"))
      .def_property_readonly("s", &pdr::NormalizedDivisor::s)
      .def_property_readonly("fractions",
                             [](const pdr::NormalizedDivisor& d) { return rats_to_str(d.fractions()); })
      .def_property_readonly("degree",
                             [](const pdr::NormalizedDivisor& d) { return d.degree().str(); })
      .def("__eq__", [](const pdr::NormalizedDivisor& a,
                        const pdr::NormalizedDivisor& b) { return a == b; })
      .def("__repr__", &pdr::NormalizedDivisor::str);

  py::class_<pdr::DualGraph>(m, "DualGraph")
      .def_property_readonly("central_weight", &pdr::DualGraph::central_weight)
      .def_property_readonly("branches", [](const pdr::DualGraph& g) {
        std::vector<std::vector<long long>> out;
        for (const auto& b : g.branches()) out.push_back(b.entries());
        return out;
      });

  py::class_<pdr::FundamentalCycle>(m, "FundamentalCycle")
      .def_readonly("central", &pdr::FundamentalCycle::n0)
      .def_readonly("branches", &pdr::FundamentalCycle::branch_coeffs)
      .def("total", &pdr::FundamentalCycle::total);

  m.def("hj_expand",
        [](const std::string& x) { return pdr::hj_expand(rat(x)).entries(); },
        py::arg("value"));
  m.def("hj_eval", [](const std::vector<long long>& seq) {
    return pdr::hj_eval(pdr::HjSequence(seq)).str();
  });
  m.def("hj_tails", [](const std::vector<long long>& seq) {
    return rats_to_str(pdr::hj_tails(pdr::HjSequence(seq)));
  });
  m.def("t_signature", [](const std::vector<long long>& seq) {
    return pdr::t_signature(pdr::HjSequence(seq)).entries();
  });
  m.def("hj_closed_form",
        [](const std::string& kind, long long p1, long long p2, long long p3) {
          if (kind == "two_n_two") return pdr::hj_closed_form_two_n_two(p1, p2, p3).str();
          if (kind == "two3two3two") return pdr::hj_closed_form_two3two3two(p1, p2, p3).str();
          throw pdr::domain_error("hj_closed_form: kind must be two_n_two or two3two3two");
        },
        py::arg("kind"), py::arg("p1"), py::arg("p2"), py::arg("p3"));

  m.def("parse_divisor", [](const std::string& text) {
    auto divisor = pdr::parse_divisor(text);
    std::map<std::string, std::string> out;
    for (const auto& [label, coeff] : divisor.terms()) out[label] = coeff.str();
    return out;
  });
  m.def("normalize", [](const std::string& text) {
    return pdr::normalize(pdr::parse_divisor(text));
  });
  m.def("deg_floor", &pdr::deg_floor, py::arg("divisor"), py::arg("n"));
  m.def("period", &pdr::period);
  m.def("is_rational_singularity", [](const pdr::NormalizedDivisor& d) {
    auto v = pdr::is_rational_singularity(d);
    py::dict out;
    out["rational"] = v.rational;
    if (!v.rational) {
      out["witness_n"] = *v.witness_n;
      out["witness_value"] = *v.witness_value;
    }
    return out;
  });

  m.def("dual_graph", &pdr::dual_graph);
  m.def("fundamental_cycle", &pdr::fundamental_cycle);
  m.def("multiplicity", [](const pdr::NormalizedDivisor& d) { return pdr::multiplicity(d).value; });

  m.def("criterion_value", [](const pdr::NormalizedDivisor& d, long long p, long long n) {
    auto rec = pdr::criterion_value(d, p, n);
    py::dict out;
    out["n"] = rec.n;
    out["p"] = rec.p;
    out["support_size"] = rec.support_size;
    out["deg_neg"] = rec.deg_neg;
    out["value"] = rec.value;
    out["coefficients"] = rec.coefficients;
    return out;
  });
  m.def("is_f_rational", [](const pdr::NormalizedDivisor& d, long long p) {
    auto v = pdr::is_f_rational(d, p);
    py::dict out;
    out["f_rational"] = v.f_rational;
    if (!v.f_rational) out["witness_n"] = v.witness->n;
    return out;
  });
  m.def("failing_primes", [](const pdr::NormalizedDivisor& d) {
    auto failing = pdr::failing_primes(d);
    return std::vector<long long>(failing.begin(), failing.end());
  });

  m.def("canonical_order", &pdr::canonical_order);
  m.def("match_families", [](const pdr::NormalizedDivisor& d, int table) {
    std::vector<std::pair<std::string, std::vector<long long>>> out;
    for (const auto& match : pdr::match_families(d, table))
      out.emplace_back(match.family_id, match.params);
    return out;
  });
  m.def("instantiate_family", [](const std::string& id, const std::vector<long long>& params) {
    return pdr::instantiate_family(family_by_id(id), params);
  });
  m.def("family_ids", [](int table) {
    std::vector<std::string> out;
    for (const auto& f : pdr::families(table)) out.push_back(f.id);
    return out;
  });

  m.def("classify_report",
        [](int target, long long max_s, long long max_points, long long max_denominator,
           long long max_param, long long max_family_denominator, int workers) {
          pdr::EnumerationBounds b{max_s, max_points, max_denominator, max_param,
                                   max_family_denominator};
          return pdr::report_to_json(pdr::enumerate_and_verify(b, target, workers));
        },
        py::arg("target"), py::arg("max_s") = 4, py::arg("max_points") = 5,
        py::arg("max_denominator") = 9, py::arg("max_param") = 8,
        py::arg("max_family_denominator") = 60, py::arg("workers") = 0);
  m.def("threshold_report",
        [](int target, const std::vector<long long>& primes, long long max_param,
           long long max_denominator, int workers) {
          return pdr::report_to_json(
              pdr::threshold_report(target, primes, max_param, max_denominator, workers));
        },
        py::arg("target"), py::arg("primes"), py::arg("max_param") = 8,
        py::arg("max_denominator") = 0, py::arg("workers") = 0);

  m.def("analyze",
        [](const std::string& text, const std::vector<long long>& primes, bool verify) {
          pdr::AnalysisOptions options;
          options.primes = primes;
          options.verify = verify;
          return pdr::report_to_json(pdr::analyze(text, pdr::parse_divisor(text), options));
        },
        py::arg("divisor"), py::arg("primes") = std::vector<long long>{}, py::arg("verify") = false);

  m.def("render",
        [](const std::string& text, const std::string& format) {
          auto d = pdr::normalize(pdr::parse_divisor(text));
          auto g = pdr::dual_graph(d);
          auto fmt = format == "dot" ? pdr::RenderFormat::dot : pdr::RenderFormat::ascii;
          if (pdr::is_rational_singularity(d).rational) {
            auto z = pdr::fundamental_cycle(d);
            return pdr::render_graph(g, &z, fmt);
          }
          return pdr::render_graph(g, nullptr, fmt);
        },
        py::arg("divisor"), py::arg("format") = "ascii");
}
