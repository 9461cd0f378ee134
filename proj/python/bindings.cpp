#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "sftkit/graph.hpp"
#include "sftkit/perron.hpp"

namespace py = pybind11;
using namespace sftkit;

namespace {

Int to_int(py::handle h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("matrix entries must be int");
  return Int(py::str(h).cast<std::string>());
}

py::object from_int(const Int& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

// A catalog id, inline JSON, a JSON file path, or a list of integer rows.
IntMatrix matrix_arg(py::handle h) {
  if (py::isinstance<py::str>(h)) return cli::resolve_source(h.cast<std::string>()).matrix;
  std::vector<std::vector<Int>> rows;
  for (py::handle row : h) {
    rows.emplace_back();
    for (py::handle x : row) rows.back().push_back(to_int(x));
  }
  return IntMatrix::from_rows(rows);
}

IntVector vector_arg(py::handle h) {
  IntVector v;
  if (h.is_none()) return v;
  for (py::handle x : h) v.push_back(to_int(x));
  return v;
}

py::list matrix_out(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(from_int(m(i, j)));
    out.append(row);
  }
  return out;
}

py::object json_out(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json json_in(py::handle h) {
  if (py::isinstance<py::str>(h)) return Json::parse(h.cast<std::string>());
  return Json::parse(py::module_::import("json").attr("dumps")(h).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants and equivalence searches for nonnegative integer matrices";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::out_of_range& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : load_catalog()) ids.push_back(e.id);
    return ids;
  });
  m.def("small_ids", [] {
    std::vector<std::string> ids;
    for (const auto* e : small_entries()) ids.push_back(e->id);
    return ids;
  });
  m.def("matrix", [](py::handle a) { return matrix_out(matrix_arg(a)); }, py::arg("a"));
  m.def("graph", [](const std::string& source) { return json_out(to_json(cli::resolve_source(source).graph)); },
        py::arg("source"));

  m.def("is_small", [](const std::string& source) {
    return small_graph_report(cli::resolve_source(source).graph).is_small;
  }, py::arg("source"));
  m.def("k0", [](py::handle a) { return k0_group(matrix_arg(a)).rendering; }, py::arg("a"));
  m.def("kgr", [](py::handle a) { return kgr_description(matrix_arg(a), &kgr_registry()).rendering; },
        py::arg("a"));
  m.def("pf_eigenvalue", [](py::handle a, unsigned digits) { return spectral_radius(matrix_arg(a)).to_decimal(digits); },
        py::arg("a"), py::arg("digits") = 5);
  m.def("minimal_polynomial", [](py::handle a) {
    return minimal_polynomial(spectral_radius(matrix_arg(a))).poly.to_string();
  }, py::arg("a"));
  m.def("char_poly", [](py::handle a) {
    const Poly p = char_poly(matrix_arg(a));
    py::list out;
    for (const auto& c : p.coeffs()) out.append(from_int(c));
    return out;
  }, py::arg("a"), "Coefficients, constant term first.");
  m.def("period", [](py::handle a) -> py::object {
    const auto p = period(matrix_arg(a));
    if (!p) return py::none();
    return py::int_(*p);
  }, py::arg("a"));
  m.def("is_primitive", [](py::handle a) { return is_primitive(matrix_arg(a)); }, py::arg("a"));

  m.def("search_esse", [](py::handle a, py::handle b, long entries, bool pruned) {
    EsseSearchOptions o;
    o.entry_bound = entries;
    o.pruned = pruned;
    const auto r = search_esse(matrix_arg(a), matrix_arg(b), o);
    py::list ws;
    for (const auto& w : r.witnesses) ws.append(py::make_tuple(matrix_out(w.R), matrix_out(w.S)));
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    d["witnesses"] = ws;
    d["refused"] = r.refused;
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("entries") = 1, py::arg("pruned") = true);

  m.def("search_sse", [](py::handle a, py::handle b, std::size_t depth, std::size_t size_bound, long entries) {
    SseSearchOptions o;
    o.max_steps = depth;
    o.size_bound = size_bound;
    o.entry_bound = entries;
    const auto r = search_sse_path(matrix_arg(a), matrix_arg(b), o);
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    d["certificate"] = r.chain ? json_out(to_json(Certificate{*r.chain})) : py::none();
    d["expanded"] = r.expanded;
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("depth") = 2, py::arg("size_bound") = 4, py::arg("entries") = 1);

  m.def("search_intertwiner", [](py::handle a, py::handle b, bool pointed, bool unimodular, bool cone,
                                 long coeff_bound, py::handle unit_a, py::handle unit_b) {
    IntertwinerSearchOptions o;
    o.require_pointed = pointed;
    o.require_unimodular = unimodular;
    o.require_cone = cone;
    o.coeff_bound = coeff_bound;
    o.unit_a = vector_arg(unit_a);
    o.unit_b = vector_arg(unit_b);
    const auto r = search_intertwiner(matrix_arg(a), matrix_arg(b), o);
    py::list ts;
    for (const auto& w : r.witnesses) ts.append(matrix_out(w.T));
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    d["witnesses"] = ts;
    d["reason"] = r.reason;
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("pointed") = false, py::arg("unimodular") = false,
     py::arg("cone") = false, py::arg("coeff_bound") = 3, py::arg("unit_a") = py::none(),
     py::arg("unit_b") = py::none());

  m.def("verify", [](py::handle certificate, py::handle a, py::handle b) {
    const VerifyResult v = verify(certificate_from_json(json_in(certificate)), matrix_arg(a), matrix_arg(b));
    return py::make_tuple(v.ok, v.diagnostics);
  }, py::arg("certificate"), py::arg("a"), py::arg("b"),
     "Certificate as a dict or JSON string; returns (ok, diagnostics).");

  m.def("cone_contains", [](py::handle a, py::handle v, unsigned long k) {
    const DimElement x(DimensionGroup::create(matrix_arg(a)), vector_arg(v), k);
    return std::string(to_string(cone_contains(x).verdict));
  }, py::arg("a"), py::arg("v"), py::arg("k") = 0);

  m.def("delta_claim_verify", [](py::handle a, py::handle claim, unsigned levels) {
    const auto r = delta_claim_verify(matrix_arg(a), delta_claim_from_json(json_in(claim)), levels);
    py::dict d;
    d["ok"] = r.ok;
    d["levels_checked"] = r.levels_checked;
    d["failing_level"] = r.failing_level ? py::object(py::int_(*r.failing_level)) : py::none();
    d["detail"] = r.detail;
    return d;
  }, py::arg("a"), py::arg("claim"), py::arg("levels") = kDefaultClaimLevels);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line front end in process; returns (exit_code, stdout, stderr).");
}
