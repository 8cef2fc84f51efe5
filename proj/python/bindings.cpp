#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cthh/algebra.hpp"
#include "cthh/classifier.hpp"
#include "cthh/error.hpp"
#include "cthh/io.hpp"
#include "cthh/oracle.hpp"
#include "cthh/quiver.hpp"
#include "cthh/relations.hpp"
#include "cthh/series.hpp"
#include "cthh/verify.hpp"

namespace py = pybind11;
using namespace cthh;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

FieldSpec field_arg(const py::object& f) {
  if (py::isinstance<py::int_>(f)) return FieldSpec(f.cast<std::uint32_t>());
  return parse_field(f.cast<std::string>());
}

py::list descending(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.descending()) out.append(to_py(c));
  return out;
}

IntPolynomial poly_arg(const std::vector<py::int_>& coeffs) {
  std::vector<BigInt> c;
  for (const auto& x : coeffs) c.emplace_back(py::str(x).cast<std::string>());
  return IntPolynomial::from_descending(c);
}

py::object parse_json(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hochschild cohomology of cluster-tilted algebras of Dynkin type";

  // Messages start with the error name, e.g. "TwoCycle: ...".
  py::register_exception<Error>(m, "CthhError", PyExc_ValueError);

  py::class_<Quiver>(m, "Quiver")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& arrows) {
             std::vector<Arrow> a;
             for (auto [s, t] : arrows) a.push_back({s, t});
             Quiver q(n, a);
             validate(q);
             return q;
           }),
           py::arg("vertices"), py::arg("arrows"))
      .def_property_readonly("vertices", &Quiver::vertex_count)
      .def_property_readonly("arrows",
                             [](const Quiver& q) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& a : q.arrows()) out.emplace_back(a.source, a.target);
                               return out;
                             })
      .def("mutate", [](const Quiver& q, int k) { return mutate(q, k); }, py::arg("k"))
      .def("canonical", [](const Quiver& q) { return canonical_hex(canonical_form(q)); })
      .def("relabeled", [](const Quiver& q, const std::vector<int>& p) { return q.relabeled(p); })
      .def("to_json", &serialize_quiver)
      .def_static("from_json", [](const std::string& s) { return parse_quiver(s); })
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
      .def("__repr__", [](const Quiver& q) { return "Quiver(" + serialize_quiver(q) + ")"; });

  m.def("standard_seed", [](const std::string& t) { return standard_seed(parse_dynkin(t)); }, py::arg("type"));
  m.def("dynkin_type", [](const Quiver& q) { return to_string(detect_dynkin(q)); });
  m.def(
      "mutation_class",
      [](const std::string& t, std::size_t cap) {
        std::vector<Quiver> out;
        for (auto& c : enumerate_class(standard_seed(parse_dynkin(t)), cap)) out.push_back(std::move(c.quiver));
        return out;
      },
      py::arg("type"), py::arg("cap") = kDefaultClassCap);
  m.def("oriented_3_cycles", &count_oriented_triangles);
  m.def("chordless_cycles", [](const Quiver& q) {
    std::vector<std::pair<std::vector<int>, bool>> out;
    for (const auto& c : chordless_cycles(q)) out.emplace_back(c.vertices, c.oriented);
    return out;
  });
  m.def("relations", [](const Quiver& q) {
    std::vector<std::string> out;
    for (const auto& r : generate_relations(q).relations) out.push_back(format_relation(q, r));
    return out;
  });

  m.def(
      "algebra_info",
      [](const Quiver& q, const py::object& field) {
        const auto a = cluster_tilted_algebra(q, field_arg(field));
        const auto c = cartan(a);
        py::dict d;
        d["dimension"] = a.dimension();
        d["degree_dims"] = a.degree_dims();
        d["cartan"] = c.matrix;
        d["det"] = to_py(c.det);
        d["assoc_poly"] = descending(c.assoc_poly);
        return d;
      },
      py::arg("quiver"), py::arg("field") = 0);

  m.def(
      "hh_dims",
      [](const Quiver& q, const py::object& field, std::size_t max_i) {
        const auto f = field_arg(field);
        return hh_dims(cluster_tilted_algebra(q, f), f, max_i).dims;
      },
      py::arg("quiver"), py::arg("field"), py::arg("max_i"), "Oracle dimensions of HH^0..HH^max_i.");
  m.def(
      "hh1_dim",
      [](const Quiver& q, const py::object& field) {
        const auto f = field_arg(field);
        return hh1_dim(cluster_tilted_algebra(q, f), f);
      },
      py::arg("quiver"), py::arg("field") = 0);
  m.def(
      "center_dim",
      [](const Quiver& q, const py::object& field) {
        const auto f = field_arg(field);
        return center_dim(cluster_tilted_algebra(q, f), f);
      },
      py::arg("quiver"), py::arg("field") = 0);

  m.def("closed_form", [](const Quiver& q) {
    const auto c = hh_closed_form(q);
    py::dict d;
    d["type"] = to_string(c.type);
    d["h"] = format_h(c.h);
    d["method"] = c.method;
    if (c.d_params) d["d_params"] = parse_json(to_json(*c.d_params).dump());
    return d;
  });
  m.def(
      "hh_universal", [](std::size_t hh1, const py::int_& det) {
        return format_h(hh_universal(hh1, BigInt(py::str(det).cast<std::string>())));
      },
      py::arg("hh1"), py::arg("det"));
  m.def("lookup_e", [](const std::vector<py::int_>& c) { return format_h(lookup_E(poly_arg(c))); },
        py::arg("coefficients"), "h for a descending coefficient list of an E-type associated polynomial.");
  m.def(
      "series_dims",
      [](const std::string& h, std::size_t max_i, const py::object& field) {
        return hh_dims_from_series(parse_h(h), max_i, field_arg(field));
      },
      py::arg("h"), py::arg("max_i"), py::arg("field") = 0);
  m.def("f_coeff", [](int n, std::size_t i, const py::object& field) { return f_coeff(n, i, field_arg(field)); },
        py::arg("n"), py::arg("i"), py::arg("field") = 0);

  m.def(
      "verify",
      [](const std::string& t, const std::vector<py::object>& fields, std::size_t max_i,
         std::optional<std::size_t> sample) {
        VerifyOptions o;
        o.type = parse_dynkin(t);
        for (const auto& f : fields) o.fields.push_back(field_arg(f));
        o.max_i = max_i;
        o.sample = sample;
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify_suite(o);
        }
        return parse_json(to_json(r).dump());
      },
      py::arg("type"), py::arg("fields"), py::arg("max_i") = 8, py::arg("sample") = py::none());
}
