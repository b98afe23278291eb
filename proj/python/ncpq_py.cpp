#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncpq/bijection.hpp"
#include "ncpq/error.hpp"
#include "ncpq/serialize.hpp"

namespace py = pybind11;
using namespace ncpq;

namespace {

using Root = std::vector<std::int64_t>;
using Matrix = std::vector<std::vector<std::int64_t>>;

Root to_py(const DimVector& v) { return {v.coords().begin(), v.coords().end()}; }

DimVector from_py(const Root& r) { return DimVector(r); }

std::vector<Root> to_py(const std::vector<DimVector>& vs) {
  std::vector<Root> out;
  for (const auto& v : vs) out.push_back(to_py(v));
  return out;
}

std::vector<DimVector> roots_from_py(const std::vector<Root>& rs) {
  std::vector<DimVector> out;
  for (const auto& r : rs) out.push_back(from_py(r));
  return out;
}

Matrix to_py(const WeylElement& w) { return to_json(w).get<Matrix>(); }

WeylElement element_from_py(const Matrix& m) { return weyl_element_from_json(nlohmann::json(m)); }

// The registry is move-only; keep it alive behind a shared pointer.
struct PyRegistry {
  std::shared_ptr<IndecRegistry> reg;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quiver root systems, exceptional sequences and non-crossing partitions";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<UnsupportedType>(m, "UnsupportedType", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  py::class_<Quiver>(m, "Quiver")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& arrows) {
             std::vector<Arrow> as;
             for (auto [h, t] : arrows) as.push_back({h, t});
             return Quiver(n, as);
           }),
           py::arg("n"), py::arg("arrows") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Quiver::size)
      .def_property_readonly("arrows",
                             [](const Quiver& q) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& a : q.arrows()) out.emplace_back(a.head, a.tail);
                               return out;
                             })
      .def("topological_order", &Quiver::topological_order)
      .def("__eq__", &Quiver::operator==)
      .def("__str__", &Quiver::str)
      .def("__repr__", [](const Quiver& q) { return "<Quiver n=" + std::to_string(q.size()) + ">"; });

  m.def("parse_quiver", [](const std::string& text) { return parse_quiver(text); }, py::arg("text"));
  m.def("load_quiver", &load_quiver, py::arg("path"));

  m.def("euler_form", [](const Quiver& q, const Root& v, const Root& w) { return euler_form(q, from_py(v), from_py(w)); });
  m.def("symmetric_form",
        [](const Quiver& q, const Root& v, const Root& w) { return symmetric_form(q, from_py(v), from_py(w)); });
  m.def("cartan_matrix", [](const Quiver& q) {
    const CartanMatrix c = cartan_matrix(q);
    Matrix out(c.size(), std::vector<std::int64_t>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) out[i][j] = c(i, j);
    return out;
  });
  m.def("classify_type", [](const Quiver& q) { return classify_type(cartan_matrix(q)).str(); });

  m.def(
      "positive_roots",
      [](const Quiver& q, std::int64_t height_bound) {
        const TypeClass t = classify_type(cartan_matrix(q));
        const RootSystem rs = t.is_finite() ? finite_root_system(q) : generate_roots(q, height_bound);
        return py::make_tuple(to_py(rs.positive_roots()), rs.complete());
      },
      py::arg("q"), py::arg("height_bound") = 10,
      "Returns (roots, complete). Non-finite quivers are truncated at height_bound.");

  m.def(
      "coxeter_element",
      [](const Quiver& q, const std::vector<int>& order) {
        return to_py(order.empty() ? coxeter_element(q) : coxeter_element(q, order));
      },
      py::arg("q"), py::arg("order") = std::vector<int>{});
  m.def("reflection", [](const Quiver& q, const Root& root) {
    return to_py(Reflection(cartan_matrix(q), from_py(root)).element());
  });
  m.def("absolute_length",
        [](const Quiver& q, const Matrix& w) { return absolute_length(element_from_py(w), finite_root_system(q)); });
  m.def(
      "noncrossing_partitions",
      [](const Quiver& q, const std::vector<int>& order, std::size_t group_cap, unsigned jobs) {
        const WeylElement c = order.empty() ? coxeter_element(q) : coxeter_element(q, order);
        std::vector<Matrix> out;
        {
          py::gil_scoped_release release;
          for (const auto& w : noncrossing_partitions(c, q, group_cap, jobs)) out.push_back(to_py(w));
        }
        return out;
      },
      py::arg("q"), py::arg("order") = std::vector<int>{}, py::arg("group_cap") = 1'000'000, py::arg("jobs") = 1);

  m.def(
      "reflection_factorizations",
      [](const Quiver& q, const Matrix& w, std::size_t length) {
        const RootSystem rs = finite_root_system(q);
        std::vector<std::vector<Root>> out;
        for (const auto& t : reflection_factorizations(element_from_py(w), length, rs)) out.push_back(to_py(t.roots()));
        return out;
      },
      py::arg("q"), py::arg("w"), py::arg("length"));
  m.def(
      "hurwitz_orbit",
      [](const Quiver& q, const std::vector<Root>& roots, std::size_t cap) {
        const CartanMatrix c = cartan_matrix(q);
        std::vector<std::vector<Root>> out;
        for (const auto& t : hurwitz_orbit(c, ReflectionTuple(c, roots_from_py(roots)), cap)) out.push_back(to_py(t.roots()));
        return out;
      },
      py::arg("q"), py::arg("roots"), py::arg("cap") = 1'000'000);
  m.def(
      "hurwitz_move",
      [](const Quiver& q, const std::vector<Root>& roots, std::size_t i, bool inverse) {
        const CartanMatrix c = cartan_matrix(q);
        return to_py(hurwitz_move(c, ReflectionTuple(c, roots_from_py(roots)), i, inverse).roots());
      },
      py::arg("q"), py::arg("roots"), py::arg("i"), py::arg("inverse") = false);

  py::class_<PyRegistry>(m, "Registry")
      .def(py::init([](const Quiver& q) { return PyRegistry{std::make_shared<IndecRegistry>(build_registry(q))}; }))
      .def("__len__", [](const PyRegistry& r) { return r.reg->size(); })
      .def_property_readonly("roots", [](const PyRegistry& r) { return to_py(r.reg->positive_roots()); })
      .def("hom", [](const PyRegistry& r, const Root& a, const Root& b) { return r.reg->hom(from_py(a), from_py(b)); })
      .def("ext", [](const PyRegistry& r, const Root& a, const Root& b) { return r.reg->ext(from_py(a), from_py(b)); })
      .def("representation",
           [](const PyRegistry& r, const Root& a) { return to_json(r.reg->at(from_py(a))).dump(); },
           "JSON text of the indecomposable with this dimension vector.")
      .def("is_exceptional_sequence",
           [](const PyRegistry& r, const std::vector<Root>& s) { return is_exceptional_sequence(roots_from_py(s), *r.reg); })
      .def("right_perp", [](const PyRegistry& r, const std::vector<Root>& s) { return to_py(right_perp(roots_from_py(s), *r.reg)); })
      .def("left_perp", [](const PyRegistry& r, const std::vector<Root>& s) { return to_py(left_perp(roots_from_py(s), *r.reg)); })
      .def("thick_closure",
           [](const PyRegistry& r, const std::vector<Root>& s) {
             const Subcategory sub = thick_closure(ExcSequence{roots_from_py(s)}, *r.reg);
             return py::make_tuple(to_py(sub.ind_roots), to_py(sub.simples));
           },
           "Returns (indecomposables, simples).")
      .def("braid_mutate",
           [](const PyRegistry& r, const std::vector<Root>& s, std::size_t i, bool inverse) {
             return to_py(braid_mutate(ExcSequence{roots_from_py(s)}, i, inverse, *r.reg).roots);
           },
           py::arg("seq"), py::arg("i"), py::arg("inverse") = false)
      .def("extend_to_complete",
           [](const PyRegistry& r, const std::vector<Root>& s) {
             return to_py(extend_to_complete(ExcSequence{roots_from_py(s)}, *r.reg).roots);
           })
      .def("complete_sequences",
           [](const PyRegistry& r, std::size_t cap) {
             std::vector<std::vector<Root>> out;
             for (const auto& s : enumerate_complete_sequences(*r.reg, cap)) out.push_back(to_py(s.roots));
             return out;
           },
           py::arg("cap") = 1'000'000)
      .def("exceptional_antichains",
           [](const PyRegistry& r) {
             std::vector<std::vector<Root>> out;
             for (const auto& a : enumerate_exceptional_antichains(*r.reg)) out.push_back(to_py(a));
             return out;
           })
      .def("cox", [](const PyRegistry& r, const std::vector<Root>& antichain) {
        const Subcategory sub = thick_closure(order_antichain(roots_from_py(antichain), *r.reg), *r.reg);
        return to_py(cox(sub, *r.reg));
      });

  m.def(
      "verify_bijection_json",
      [](const Quiver& q, const std::vector<int>& order, std::size_t group_cap, std::size_t sequence_cap,
         std::uint64_t seed, unsigned jobs) {
        BijectionOptions opt;
        opt.coxeter_order = order;
        opt.group_cap = group_cap;
        opt.sequence_cap = sequence_cap;
        opt.seed = seed;
        opt.jobs = jobs;
        std::string out;
        {
          py::gil_scoped_release release;
          out = to_json(verify_bijection(q, opt)).dump();
        }
        return out;
      },
      py::arg("q"), py::arg("order") = std::vector<int>{}, py::arg("group_cap") = 1'000'000,
      py::arg("sequence_cap") = 1'000'000, py::arg("seed") = 1, py::arg("jobs") = 1);
}
