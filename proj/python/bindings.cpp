#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "multigame/cli.hpp"
#include "multigame/continuous_solver.hpp"
#include "multigame/discrete_solver.hpp"
#include "multigame/game_io.hpp"
#include "multigame/oracle.hpp"

namespace py = pybind11;
using namespace multigame;

// mpq_class <-> fractions.Fraction. Python ints, strings ("3/7", "0.25") and Fractions are
// accepted on the way in; floats are refused so nothing inexact slips through.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (src.is_none() || PyFloat_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    try {
      if (PyUnicode_Check(src.ptr())) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      const object fraction = module_::import("fractions").attr("Fraction");
      if (!PyLong_Check(src.ptr()) && !isinstance(src, fraction)) return false;
      const object f = fraction(src);
      value = Rational(mpz_class(py::str(f.attr("numerator")).cast<std::string>(), 10),
                       mpz_class(py::str(f.attr("denominator")).cast<std::string>(), 10));
      value.canonicalize();
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static handle cast(const Rational& q, return_value_policy, handle) {
    const object fraction = module_::import("fractions").attr("Fraction");
    const object num = reinterpret_steal<object>(PyLong_FromString(q.get_num().get_str().c_str(), nullptr, 10));
    const object den = reinterpret_steal<object>(PyLong_FromString(q.get_den().get_str().c_str(), nullptr, 10));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

py::object threshold_value(const Extended<Rational>& t) {
  if (t.is_neg_inf()) return py::float_(-INFINITY);
  if (t.is_pos_inf()) return py::float_(INFINITY);
  return py::cast(t.value());
}

py::dict strategy_dict(const ExactStrategy& s) {
  py::dict d;
  d["threshold"] = threshold_value(s.threshold);
  d["orientation"] = to_string(s.orientation);
  d["alpha"] = py::cast(s.alpha);
  return d;
}

py::dict class_dict(const PureClass& c) {
  py::dict d;
  d["orientation"] = to_string(c.orientation);
  d["cut"] = c.cut;
  return d;
}

py::dict search_dict(const SearchReport& r) {
  py::list solutions;
  for (const EquilibriumResult& e : r.solutions) {
    py::dict s;
    s["agent1"] = strategy_dict(e.strategies.first);
    s["agent2"] = strategy_dict(e.strategies.second);
    s["classes"] = py::make_tuple(class_dict(e.classes[0]), class_dict(e.classes[1]));
    s["regret"] = e.regret ? py::cast(*e.regret) : py::none();
    solutions.append(s);
  }
  py::dict d;
  d["solutions"] = solutions;
  d["candidates"] = py::cast(r.candidates);
  d["iterations"] = r.iterations;
  return d;
}

Orientation orientation_of(const std::string& text) {
  if (text == "DC") return Orientation::DC;
  if (text == "CD") return Orientation::CD;
  throw InputError("orientation must be DC or CD");
}

ExactStrategy strategy_from(const py::object& threshold, const std::string& orientation, const Rational& alpha) {
  ExactStrategy s;
  s.orientation = orientation_of(orientation);
  s.alpha = alpha;
  if (PyFloat_Check(threshold.ptr())) {
    const double v = threshold.cast<double>();
    if (std::isinf(v)) {
      s.threshold = v < 0 ? Extended<Rational>::neg_inf() : Extended<Rational>::pos_inf();
      return s;
    }
    throw InputError("finite thresholds must be exact (int, str or Fraction)");
  }
  s.threshold = Extended<Rational>(threshold.cast<Rational>());
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pure threshold equilibria of two-agent Bayesian double games";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  py::class_<DgpdParams>(m, "DgpdParams")
      .def(py::init([](Rational t, Rational r, Rational y, Rational p, Rational s) { return DgpdParams{t, r, y, p, s}; }),
           py::arg("t"), py::arg("r"), py::arg("y"), py::arg("p"), py::arg("s"))
      .def_readwrite("t", &DgpdParams::t)
      .def_readwrite("r", &DgpdParams::r)
      .def_readwrite("y", &DgpdParams::y)
      .def_readwrite("p", &DgpdParams::p)
      .def_readwrite("s", &DgpdParams::s)
      .def("violations", [](const DgpdParams& p) { return validate_dgpd(p).violations; })
      .def("lambda_mu", [](const DgpdParams& p) {
        const LambdaMu lm = lambda_mu(p);
        return py::make_tuple(lm.lambda, lm.mu);
      })
      .def("threshold", [](const DgpdParams& p, const Rational& zeta_c) { return threshold_function_dgpd<Rational>(zeta_c, p); },
           py::arg("zeta_c"));

  py::class_<Multigame>(m, "Game")
      .def_static("from_file", [](const std::string& path) { return parse_game_file(path); })
      .def_static("from_json", [](const std::string& text) { return parse_game_text(text); })
      .def_static("from_dgpd_grid",
                  [](const DgpdParams& p, const std::vector<Rational>& pts1, const std::vector<Rational>& pts2) {
                    return Multigame::from_dgpd(p, DiscreteTypeSpace::uniform(pts1), DiscreteTypeSpace::uniform(pts2));
                  })
      .def("to_json", &serialize_game)
      .def_property_readonly("is_discrete", &Multigame::is_discrete)
      .def_property_readonly("dgpd", &Multigame::dgpd)
      .def("__eq__", [](const Multigame& a, const Multigame& b) { return a == b; });

  m.def(
      "dgpd_search", [](const Multigame& g, bool find_all) { return search_dict(dgpd_search(g, {.find_all = find_all})); },
      py::arg("game"), py::arg("find_all") = false);
  m.def(
      "general_search",
      [](const Multigame& g, bool find_all) { return search_dict(general_search(g, {.find_all = find_all})); },
      py::arg("game"), py::arg("find_all") = false);
  m.def(
      "brute_force",
      [](const Multigame& g, std::size_t cap) {
        py::list out;
        for (const OracleEquilibrium& e : brute_force_ne(g, cap)) {
          py::dict s;
          s["agent1"] = strategy_dict(e.strategies.first);
          s["agent2"] = strategy_dict(e.strategies.second);
          s["classes"] = py::make_tuple(class_dict(e.classes[0]), class_dict(e.classes[1]));
          out.append(s);
        }
        return out;
      },
      py::arg("game"), py::arg("cap") = kDefaultCandidateCap);
  m.def(
      "regret",
      [](const Multigame& g, const py::object& theta1, const py::object& theta2, const std::string& orient1,
         const std::string& orient2, const Rational& alpha1, const Rational& alpha2) {
        const StrategyPair<Rational> pair{strategy_from(theta1, orient1, alpha1), strategy_from(theta2, orient2, alpha2)};
        return verify_equilibrium(g, pair).regret();
      },
      py::arg("game"), py::arg("theta1"), py::arg("theta2"), py::arg("orient1") = "DC", py::arg("orient2") = "DC",
      py::arg("alpha1") = Rational(1), py::arg("alpha2") = Rational(1));
  m.def(
      "solve_continuous",
      [](const Multigame& g) {
        const ContinuousSolution s = solve_continuous(g);
        py::dict d;
        d["theta1"] = s.theta1;
        d["theta2"] = s.theta2;
        d["residual"] = s.residual;
        d["symmetric"] = s.symmetric;
        d["iterations"] = s.iterations;
        return d;
      },
      py::arg("game"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
