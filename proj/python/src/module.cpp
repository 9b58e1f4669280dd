#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "latsum/latsum.hpp"

namespace py = pybind11;
using namespace latsum;

namespace {

PrecisionContext ctx_for(int digits) {
  PrecisionContext c{digits, 10};
  c.validate();
  return c;
}

std::complex<double> to_py(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

py::dict sum_value(int p, int q, const std::string& lattice, const std::string& method, int digits) {
  PrecisionGuard g(ctx_for(digits));
  SumValue v = compute_sum({p, q}, parse_lattice(lattice), parse_method(method));
  py::dict d;
  d["value"] = to_py(v.value);
  d["text"] = v.value.re.to_string(digits);
  d["imag_text"] = v.value.im.to_string(digits);
  d["precision_estimate"] = v.precision_estimate.to_double();
  d["method"] = method_name(v.method);
  return d;
}

py::list table_cells(const std::string& name, unsigned threads, int digits) {
  PrecisionGuard g(ctx_for(digits));
  Table t = generate_table(name, threads);
  py::list out;
  for (const auto& c : t.cells) {
    py::dict d;
    d["p"] = c.p;
    d["q"] = c.q;
    if (t.closed_form) {
      d["family"] = c.family;
      d["r"] = c.r;
    }
    d["value"] = c.value.to_double();
    d["value_text"] = c.value_text;
    d["digits"] = c.value.to_string(30);
    d["delta"] = c.delta.to_double();
    d["method"] = c.method;
    if (c.exact_form) d["exact_form"] = *c.exact_form;
    d["provenance"] = c.provenance;
    out.append(d);
  }
  return out;
}

std::string table_text(const std::string& name, const std::string& fmt, unsigned threads, int digits) {
  PrecisionGuard g(ctx_for(digits));
  OutputFormat f = fmt == "csv" ? OutputFormat::CSV : fmt == "json" ? OutputFormat::JSON : OutputFormat::TEXT;
  return format_table(generate_table(name, threads), f);
}

double isotropy(const std::vector<std::complex<double>>& pts, const std::string& lattice, int digits) {
  PrecisionGuard g(ctx_for(digits));
  std::vector<Complex> zs;
  for (auto z : pts) zs.emplace_back(Real(z.real()), Real(z.imag()));
  return isotropy_e2(zs, parse_lattice(lattice)).to_double();
}

std::complex<double> lattice_function(const std::string& kind, std::complex<double> z, const std::string& lattice,
                                      int digits) {
  PrecisionGuard g(ctx_for(digits));
  LaurentData d(parse_lattice(lattice));
  Complex w(Real(z.real()), Real(z.imag()));
  if (kind == "E2") return to_py(d.e2(w).value);
  SeriesKind k = kind == "zeta" ? SeriesKind::ZETA : kind == "wp" ? SeriesKind::WP : kind == "E1" ? SeriesKind::E1
                                                                                                  : SeriesKind::E2;
  if (kind != "zeta" && kind != "wp" && kind != "E1") throw PreconditionError("kind must be zeta, wp, E1 or E2");
  return to_py(d.series(k, w).value);
}

py::dict singular(const std::string& r, int digits) {
  PrecisionGuard g(ctx_for(digits));
  SingularModulusRecord rec = singular_modulus(mpq_class(r, 10));
  py::dict d;
  d["r"] = rec.r_text();
  d["k"] = rec.k.to_string(digits);
  d["K"] = rec.K.to_string(digits);
  d["E"] = rec.E.to_string(digits);
  d["k_form"] = rec.k_form.text();
  d["K_form"] = rec.K_form.text();
  return d;
}

std::string symbolic_form(int p, int q, const std::string& family) {
  PrecisionGuard g(200);
  return assemble_sum({p, q}, family == "half" ? Family::HALF : Family::IX).to_string();
}

}  // namespace

PYBIND11_MODULE(_latsum, m) {
  m.doc() = "lattice sums S_q^(p) in arbitrary precision";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);

  m.def("sum", &sum_value, py::arg("p"), py::arg("q"), py::arg("lattice") = "square", py::arg("method") = "fast",
        py::arg("digits") = 50);
  m.def("table", &table_cells, py::arg("name"), py::arg("threads") = 0, py::arg("digits") = 50);
  m.def("table_text", &table_text, py::arg("name"), py::arg("format") = "csv", py::arg("threads") = 0,
        py::arg("digits") = 50);
  m.def("table_names", &table_names);
  m.def("isotropy_e2", &isotropy, py::arg("points"), py::arg("lattice") = "square", py::arg("digits") = 50);
  m.def("lattice_function", &lattice_function, py::arg("kind"), py::arg("z"), py::arg("lattice") = "square",
        py::arg("digits") = 50);
  m.def("singular_modulus", &singular, py::arg("r"), py::arg("digits") = 50);
  m.def("symbolic_form", &symbolic_form, py::arg("p"), py::arg("q"), py::arg("family") = "ix");
  m.def("symmetry_vanishes", [](int p, int q, const std::string& lattice) {
    PrecisionGuard g(200);
    return symmetry_vanishes({p, q}, parse_lattice(lattice));
  }, py::arg("p"), py::arg("q"), py::arg("lattice") = "square");
  m.def("ellip_k", [](double k, int digits) {
    PrecisionGuard g(ctx_for(digits));
    return ellip_k(EllipticModulus(Real(k))).to_string(digits);
  }, py::arg("k"), py::arg("digits") = 50);
}
