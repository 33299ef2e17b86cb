#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbracket/bracket3.hpp"
#include "qbracket/classical.hpp"
#include "qbracket/cli.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/quotient.hpp"
#include "qbracket/search.hpp"

namespace py = pybind11;
using namespace qbracket;

namespace {

Engine engine_for(const Presentation &p, const std::string &engine) {
  if (engine == "auto")
    return p.is_braid() ? Engine::tl : Engine::naive;
  return parse_engine(engine);
}

Polynomial raw_of(const Presentation &p, Engine e) {
  if (e == Engine::tl) {
    if (!p.is_braid())
      throw std::invalid_argument("the tl engine needs a braid presentation");
    return tl_evaluate(std::get<BraidWord>(p.value));
  }
  return bracket3_raw(p.diagram());
}

py::dict bracket(const std::string &text) {
  const Presentation p = parse_presentation(text);
  const Diagram d = p.diagram();
  const LaurentPolynomial b = kauffman_bracket(d);
  py::dict out;
  out["input"] = p.text;
  out["writhe"] = d.writhe();
  out["bracket"] = b.to_string();
  out["f"] = normalize_writhe(b, d.writhe()).to_string();
  return out;
}

py::dict bracket3_of(const std::string &text, const std::string &engine) {
  const Presentation p = parse_presentation(text);
  const Engine e = engine_for(p, engine);
  const Polynomial raw = raw_of(p, e);
  py::dict out;
  out["input"] = p.text;
  out["writhe"] = p.writhe();
  out["raw"] = raw.to_string();
  out["bracket3"] = normal_form(raw).to_string();
  out["ambient3"] = ambient3_from_raw(raw, p.writhe()).to_string();
  out["engine"] = engine_name(e);
  return out;
}

py::list groebner_checks() {
  py::list out;
  for (const auto &c : verify_groebner().checks) {
    py::dict d;
    d["check"] = c.check;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    out.append(d);
  }
  return out;
}

py::list branch_reports(double tol) {
  py::list out;
  for (const auto &b : branches()) {
    const BranchReport r = verify_branch(b, 4, tol);
    py::dict d;
    d["label"] = r.label;
    d["pass"] = r.pass;
    d["residual_p1"] = r.max_residual_p1;
    d["residual_p2"] = r.max_residual_p2;
    out.append(d);
  }
  return out;
}

py::dict scan(const std::string &table, int max_crossings, const std::string &engine) {
  const Table t = load_table(table);
  ScanOptions opts;
  opts.engine = parse_engine(engine);
  opts.max_crossings = max_crossings;
  ScanReport r;
  {
    py::gil_scoped_release release;
    r = conjecture_scan(t.entries, opts);
  }
  std::ostringstream text;
  write_report_text(text, r, opts);
  py::list comparisons;
  for (const auto &c : r.comparisons)
    comparisons.append(py::make_tuple(c.name1, c.name2, verdict_name(c.verdict)));
  py::dict out;
  out["entries"] = r.records.size();
  out["buckets"] = r.buckets;
  out["witnesses"] = r.witnesses();
  out["comparisons"] = comparisons;
  out["table_errors"] = t.errors.size();
  out["report"] = text.str();
  return out;
}

py::tuple run_cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kauffman bracket and three-variable bracket invariants";
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("normal_form", [](const std::string &p) {
    return normal_form(parse_polynomial(p)).to_string();
  }, py::arg("polynomial"));
  m.def("canonical", [](const std::string &p) {
    return parse_polynomial(p).to_string();
  }, py::arg("polynomial"));
  m.def("groebner_basis", [] {
    std::vector<std::string> out;
    for (const auto &g : fixed_ideal().groebner())
      out.push_back(g.to_string());
    return out;
  });
  m.def("ideal_generators", [] {
    std::vector<std::string> out;
    for (const auto &g : fixed_ideal().generators())
      out.push_back(g.to_string());
    return out;
  });
  m.def("verify_groebner", &groebner_checks);
  m.def("verify_branches", &branch_reports, py::arg("tol") = 1e-9);
  m.def("bracket", &bracket, py::arg("presentation"));
  m.def("bracket3", &bracket3_of, py::arg("presentation"), py::arg("engine") = "auto");
  m.def("scan", &scan, py::arg("table"), py::arg("max_crossings") = -1,
        py::arg("engine") = "tl");
  m.def("run_cli", &run_cli, py::arg("args"));
}
