#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lorentz/cli.hpp"
#include "lorentz/io.hpp"
#include "lorentz/kacmoody.hpp"
#include "lorentz/qseries.hpp"
#include "lorentz/vinberg.hpp"
#include "lorentz/weylstruct.hpp"

namespace py = pybind11;
using namespace lorentz;

namespace {

// Python ints and Fractions cross the boundary as decimal strings.
py::object to_py(const Integer& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object to_py(const Rational& x) {
  return py::module_::import("fractions").attr("Fraction")(to_py(x.get_num()), to_py(x.get_den()));
}

template <class T>
py::list to_py(const std::vector<T>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::list to_py(const IntMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    out.append(row);
  }
  return out;
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

IntVec vec(const py::iterable& xs) {
  IntVec out;
  for (auto x : xs) out.push_back(from_py(x));
  return out;
}

RootSet roots(const py::iterable& xs) {
  RootSet out;
  for (auto x : xs) out.push_back(vec(py::reinterpret_borrow<py::iterable>(x)));
  return out;
}

IntMatrix matrix(const py::iterable& rows) {
  auto r = roots(rows);
  const std::size_t n = r.size(), m = n ? r.front().size() : 0;
  IntMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i].size() != m) throw DimensionMismatch("ragged matrix");
    for (std::size_t j = 0; j < m; ++j) out(i, j) = r[i][j];
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_lorentz, m) {
  m.doc() = "Exact computations on hyperbolic lattices";
  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      domain_error(e.what());
    }
  });

  py::class_<Lattice>(m, "Lattice")
      .def(py::init([](const py::iterable& gram, const std::string& name) { return Lattice(matrix(gram), name); }),
           py::arg("gram"), py::arg("name") = "")
      .def_property_readonly("rank", &Lattice::rank)
      .def_property_readonly("name", &Lattice::name)
      .def_property_readonly("gram", [](const Lattice& l) { return to_py(l.gram()); })
      .def("pair", [](const Lattice& l, const py::iterable& x, const py::iterable& y) { return to_py(l.pair(vec(x), vec(y))); })
      .def("norm", [](const Lattice& l, const py::iterable& x) { return to_py(l.norm(vec(x))); })
      .def("signature", [](const Lattice& l) {
        auto s = l.signature();
        return py::make_tuple(s.positive, s.negative);
      })
      .def("__repr__", [](const Lattice& l) { return "<Lattice " + l.name() + " rank " + std::to_string(l.rank()) + ">"; });

  m.def("load_lattice", [](const std::string& path) { return io::load_lattice(path); });

  m.def("invariants", [](const Lattice& l) {
    auto inv = invariants(l);
    py::dict d;
    d["signature"] = py::make_tuple(inv.signature.positive, inv.signature.negative);
    d["even"] = inv.even;
    d["determinant"] = to_py(inv.determinant);
    d["smith_divisors"] = to_py(inv.smith_divisors);
    d["exponent"] = to_py(inv.exponent);
    return d;
  });

  m.def("is_crystallographic", [](const Lattice& l, const py::iterable& d) { return is_crystallographic(l, vec(d)); });
  m.def("reflection", [](const Lattice& l, const py::iterable& d) { return to_py(reflection(l, vec(d)).matrix); },
        "Matrix of the reflection; columns are the images of the basis.");

  m.def(
      "vinberg",
      [](const Lattice& l, const py::iterable& h, const py::iterable& norms, const py::object& max_key,
         std::size_t max_roots) {
        vinberg::RootFilter f;
        f.norms = vec(norms);
        vinberg::Limits lim;
        lim.max_key = vinberg::HeightKey{from_py(max_key), Integer(1)};
        lim.max_roots = max_roots;
        auto rep = vinberg::run(l, vec(h), f, lim);
        py::dict d;
        d["roots"] = to_py(rep.accepted);
        d["gram"] = to_py(rep.gram);
        d["terminated"] = rep.terminated;
        d["exhausted"] = rep.exhausted;
        return d;
      },
      py::arg("lattice"), py::arg("controller"), py::arg("norms"), py::arg("max_key") = 1024,
      py::arg("max_roots") = 64);

  m.def("weyl_vector", [](const Lattice& l, const py::iterable& rs) {
    auto w = weyl::lattice_weyl_vector(l, roots(rs));
    py::dict d;
    d["rho"] = w.rho ? py::object(to_py(*w.rho)) : py::none();
    d["rho_norm"] = w.rho ? to_py(w.rho_norm) : py::none();
    d["kind"] = std::string(weyl::name(w.kind));
    return d;
  });

  m.def(
      "cartan_matrix",
      [](const Lattice& l, const py::iterable& rs, bool permissive) {
        return to_py(km::cartan(l, roots(rs), {!permissive}).a);
      },
      py::arg("lattice"), py::arg("roots"), py::arg("permissive") = false);

  m.def(
      "denominator",
      [](const Lattice& l, const py::iterable& rs, int n) {
        auto datum = km::make_root_datum(l, roots(rs));
        auto table = km::solve_multiplicities(datum, n);
        py::dict mults;
        for (const auto& [k, v] : table.mults) mults[py::tuple(py::cast(k))] = to_py(v);
        py::dict d;
        d["multiplicities"] = mults;
        d["weyl_elements"] = km::weyl_elements(datum, n).size();
        d["residual_zero"] = table.residual_zero;
        d["w_invariant"] = km::check_w_invariance(datum, table);
        d["anti_invariance"] = datum.weyl_data.rho ? py::cast(km::anti_invariance_check(datum, n)) : py::none();
        return d;
      },
      py::arg("lattice"), py::arg("roots"), py::arg("n") = 6);

  m.def("eta_power", [](long e, std::size_t n) { return to_py(qs::eta_power(e, n).coefficients()); },
        "Coefficients of prod (1-q^k)^e up to q^n.", py::arg("e"), py::arg("n"));
  m.def("ramanujan_tau", [](std::size_t n) { return to_py(qs::ramanujan_tau(n)); }, py::arg("n"));
  m.def(
      "cusp_identity",
      [](const std::string& direction, const py::iterable& values, std::optional<std::size_t> n) {
        qs::Direction dir;
        if (direction == "tau2m")
          dir = qs::Direction::TauToM;
        else if (direction == "m2tau")
          dir = qs::Direction::MToTau;
        else
          throw py::value_error("direction must be tau2m or m2tau");
        auto v = vec(values);
        return to_py(qs::cusp_identity(dir, v, n.value_or(v.size())));
      },
      py::arg("direction"), py::arg("values"), py::arg("n") = py::none());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
