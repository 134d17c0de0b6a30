#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parkgram/config.hpp"
#include "parkgram/counting.hpp"
#include "parkgram/grammar.hpp"
#include "parkgram/parking.hpp"

namespace py = pybind11;
using namespace parkgram;

namespace {

py::int_ to_py_int(const BigInt& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Rational rational_from_object(const py::object& obj) {
  if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
  if (py::isinstance<py::int_>(obj))
    return Rational::parse(py::str(obj).cast<std::string>());
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  throw py::type_error("expected Rational, int, or 'p/q' string");
}

std::vector<Rational> rational_vector(const py::sequence& seq) {
  std::vector<Rational> out;
  out.reserve(py::len(seq));
  for (py::handle item : seq) out.push_back(rational_from_object(py::reinterpret_borrow<py::object>(item)));
  return out;
}

std::map<VarId, Rational> assignment_map(const py::dict& d) {
  std::map<VarId, Rational> out;
  for (auto item : d)
    out[item.first.cast<std::string>()] =
        rational_from_object(py::reinterpret_borrow<py::object>(item.second));
  return out;
}

Monomial monomial_from_dict(const py::dict& d) {
  Monomial m;
  for (auto item : d) {
    int e = item.second.cast<int>();
    if (e != 0) m.exps[item.first.cast<std::string>()] = e;
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact parking-function enumeration and grammar-derivative engine";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "ParkgramError");

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::object& obj) { return rational_from_object(obj); }))
      .def(py::init([](long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }))
      .def_property_readonly("numerator", [](const Rational& r) { return to_py_int(r.num()); })
      .def_property_readonly("denominator", [](const Rational& r) { return to_py_int(r.den()); })
      .def("is_integer", &Rational::is_integer)
      .def("floor", [](const Rational& r) { return to_py_int(r.floor()); })
      .def("pow", &Rational::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; });
  py::implicitly_convertible<py::int_, Rational>();
  py::implicitly_convertible<py::str, Rational>();

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def_static("parse", [](const std::string& text) { return Polynomial::parse(text); })
      .def_static("constant", [](const py::object& c) { return Polynomial::constant(rational_from_object(c)); })
      .def_static("var", [](const std::string& name) { return Polynomial::var(name); })
      .def("is_zero", &Polynomial::is_zero)
      .def("term_count", &Polynomial::term_count)
      .def("coefficient_of",
           [](const Polynomial& p, const py::dict& exps) {
             return p.coefficient_of(monomial_from_dict(exps));
           })
      .def("substitute",
           [](const Polynomial& p, const py::dict& assignment) {
             return p.substitute(assignment_map(assignment));
           })
      .def("variables", &Polynomial::variables)
      .def("pow", &Polynomial::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const Polynomial& p, const py::object& c) {
        return rational_from_object(c) * p;
      })
      .def("to_json", &Polynomial::to_json_string)
      .def_static("from_json", [](const std::string& text) { return Polynomial::from_json_string(text); })
      .def("__str__", &Polynomial::str)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "')"; });

  py::class_<Grammar>(m, "Grammar")
      .def_static("builtin", [](const std::string& name) { return builtin_grammar(name); })
      .def_static("from_text", [](const std::string& text) { return Grammar::from_text(text); })
      .def("to_text", &Grammar::to_text)
      .def("derive", [](const Grammar& g, const Polynomial& p) { return derive(g, p); })
      .def("derive_n",
           [](const Grammar& g, const Polynomial& p, int n) { return derive_n(g, p, n); })
      .def("__repr__", [](const Grammar& g) {
        return "Grammar(" + std::to_string(g.rules().size()) + " rules)";
      });

  m.def("derive", &derive);
  m.def("derive_n", &derive_n);
  m.def("tree_coefficient_table", [](int n) {
    py::dict out;
    for (const auto& [k, v] : tree_coefficient_table(n)) out[py::int_(k)] = to_py_int(v);
    return out;
  });
  m.def("planted_forest_coefficients", [](int n) {
    py::dict out;
    for (const auto& [k, v] : planted_forest_coefficients(n)) out[py::int_(k)] = to_py_int(v);
    return out;
  });
  m.def("faa_di_bruno_coefficients", [](int k) {
    py::dict out;
    for (const auto& [key, v] : faa_di_bruno_coefficients(k))
      out[py::tuple(py::cast(key))] = to_py_int(v);
    return out;
  });
  m.def("eval_with_spec_hook",
        [](const Polynomial& p, const py::dict& assignment, int k, int b) {
          return p.eval_with_functional(assignment_map(assignment), spec_step_hook(k, b));
        });

  // parking
  m.def("is_u_parking",
        [](const PFSeq& c, const py::sequence& u) { return is_u_parking(c, rational_vector(u)); });
  m.def("is_x_parking",
        [](const PFSeq& c, const py::sequence& x) { return is_x_parking(c, rational_vector(x)); });
  m.def("enumerate_u_parking",
        [](const py::sequence& u) { return enumerate_u_parking(rational_vector(u)); });
  m.def("specification", &specification);
  m.def("ones_count", &ones_count);
  m.def("prefix_sums", [](const py::sequence& x) { return prefix_sums(rational_vector(x)); });
  m.def("ab_threshold_vector", &ab_threshold_vector);
  m.def("block_threshold_vector", &block_threshold_vector);
  m.def("ab_to_u_pf", &ab_to_u_pf);
  m.def("u_to_ab_pf", &u_to_ab_pf);
  m.def("is_ab_parking", &is_ab_parking);

  py::class_<LatticePath>(m, "LatticePath")
      .def_static("parse", [](const std::string& text) { return LatticePath::parse(text); })
      .def("heights", &LatticePath::heights)
      .def("__str__", &LatticePath::str)
      .def("__repr__", [](const LatticePath& p) { return "LatticePath('" + p.str() + "')"; });
  m.def("dyck_path_of", &dyck_path_of);

  py::class_<BlockDecomposition>(m, "BlockDecomposition")
      .def_readonly("blocks", &BlockDecomposition::blocks)
      .def_readonly("lengths", &BlockDecomposition::lengths)
      .def_readonly("positions", &BlockDecomposition::positions);
  m.def("decompose_blocks", &decompose_blocks);
  m.def("normalize_block", &normalize_block);

  // counting
  m.def("factorial", [](int n) { return to_py_int(factorial(n)); });
  m.def("binomial", [](int n, int k) { return to_py_int(binomial(n, k)); });
  m.def("multinomial",
        [](int n, const std::vector<int>& parts) { return to_py_int(multinomial(n, parts)); });
  m.def("spec_compositions", &spec_compositions);
  m.def("count_basic", [](const py::object& alpha, const py::object& beta, int n) {
    return count_basic(rational_from_object(alpha), rational_from_object(beta), n);
  });
  m.def("count_u_incl_excl",
        [](const py::sequence& u) { return count_u_incl_excl(rational_vector(u)); });
  m.def("check_scaling", [](const py::sequence& u, const py::object& k) {
    return check_scaling(rational_vector(u), rational_from_object(k));
  });
  m.def("count_rational", [](int a, int b) { return to_py_int(count_rational(a, b)); });
  m.def("count_periodic_specsum", &count_periodic_specsum);
  m.def("count_periodic_scaled",
        [](int a, int b, int k) { return to_py_int(count_periodic_scaled(a, b, k)); });
  m.def("count_periodic_grammar",
        [](int a, int b, int k) { return to_py_int(count_periodic_grammar(a, b, k)); });
  m.def("count_periodic_grammar_frac", &count_periodic_grammar_frac);
  m.def("count_periodic_egf",
        [](int a, int b, int k) { return to_py_int(count_periodic_egf(a, b, k)); });
  m.def("abel_identity_sides", [](const py::sequence& xs, int n) {
    return abel_identity_sides(rational_vector(xs), n);
  });
  m.def("abel_uniform_sides", [](const py::object& x, int n, int k) {
    return abel_uniform_sides(rational_from_object(x), n, k);
  });

  m.def("q_bruteforce", [](const py::sequence& u) { return q_bruteforce(rational_vector(u)); });
  m.def("q_classical", &q_classical);
  m.def("q_basic", &q_basic);
  m.def("q_unit_step", &q_unit_step);
  m.def("q_periodic", &q_periodic);
  m.def("q_periodic_limit", &q_periodic_limit);
  m.def("qpoly_dense_coeffs", &qpoly_dense_coeffs);
  m.def("qpoly_str", &qpoly_str);

  m.def("get_derive_cap", [] { return limits().derive_cap; });
  m.def("set_derive_cap", [](int n) { limits().derive_cap = n; });
  m.def("get_enum_cap", [] { return limits().enum_len_cap; });
  m.def("set_enum_cap", [](int n) { limits().enum_len_cap = n; });
}
