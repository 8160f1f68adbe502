#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qorbit/coadjoint.hpp"
#include "qorbit/dynamics.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/lie_group.hpp"
#include "qorbit/poisson.hpp"
#include "qorbit/quaternion.hpp"
#include "qorbit/run_config.hpp"
#include "qorbit/serialize.hpp"
#include "qorbit/symplectic.hpp"
#include "qorbit/verify.hpp"

namespace py = pybind11;
using namespace qorbit;

namespace {

template <typename T>
std::string repr(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Reports cross the boundary as JSON text and are decoded on the Python side.
std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_qorbit, m) {
  m.doc() = "Quaternionic coadjoint orbits, Lie-Poisson brackets and rigid-body flows";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<UnsupportedField>(m, "UnsupportedField", PyExc_TypeError);
  py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init(&Quaternion::checked), py::arg("w"), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("w", &Quaternion::w)
      .def_readwrite("x", &Quaternion::x)
      .def_readwrite("y", &Quaternion::y)
      .def_readwrite("z", &Quaternion::z)
      .def("to_list", [](const Quaternion& q) { return q.to_array(); })
      .def("__mul__", [](const Quaternion& a, const Quaternion& b) { return a * b; })
      .def("__add__", [](const Quaternion& a, const Quaternion& b) { return a + b; })
      .def("__sub__", [](const Quaternion& a, const Quaternion& b) { return a - b; })
      .def("__rmul__", [](const Quaternion& a, double k) { return k * a; })
      .def("__neg__", [](const Quaternion& a) { return -a; })
      .def("__repr__", &repr<Quaternion>);

  py::class_<PureQuaternion>(m, "PureQuaternion")
      .def(py::init<>())
      .def(py::init(&PureQuaternion::checked), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("x", &PureQuaternion::x)
      .def_readwrite("y", &PureQuaternion::y)
      .def_readwrite("z", &PureQuaternion::z)
      .def("to_list", [](const PureQuaternion& v) { return v.to_array(); })
      .def("__repr__", &repr<PureQuaternion>);

  py::class_<UnitQuaternion>(m, "UnitQuaternion")
      .def(py::init<const Quaternion&>())
      .def_static("renormalize", &UnitQuaternion::renormalize)
      .def("value", &UnitQuaternion::value)
      .def("inverse", &UnitQuaternion::inverse);

  m.def("conj", &conj);
  m.def("inner", py::overload_cast<const Quaternion&, const Quaternion&>(&inner));
  m.def("norm", py::overload_cast<const Quaternion&>(&norm));
  m.def("cross", &cross);
  m.def("inverse", &inverse);
  m.def("rotate", &rotate);

  py::class_<AlgebraElement>(m, "AlgebraElement")
      .def(py::init<>())
      .def(py::init<Quaternion, PureQuaternion>(), py::arg("nu"), py::arg("xi"))
      .def_readwrite("nu", &AlgebraElement::nu)
      .def_readwrite("xi", &AlgebraElement::xi)
      .def_static("basis", &AlgebraElement::basis)
      .def("to_list", [](const AlgebraElement& v) {
        const Vector7 c = to_vector(v);
        return std::vector<double>(c.data(), c.data() + 7);
      });

  py::class_<DualElement>(m, "DualElement")
      .def(py::init<>())
      .def(py::init<Quaternion, PureQuaternion>(), py::arg("pi"), py::arg("mu"))
      .def_readwrite("pi", &DualElement::pi)
      .def_readwrite("mu", &DualElement::mu)
      .def("to_list", [](const DualElement& x) {
        const Vector7 c = to_vector(x);
        return std::vector<double>(c.data(), c.data() + 7);
      });

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init<>())
      .def(py::init<Quaternion, UnitQuaternion>(), py::arg("q"), py::arg("s"))
      .def_readwrite("q", &GroupElement::q)
      .def_readwrite("s", &GroupElement::s)
      .def_static("identity", &GroupElement::identity);

  py::class_<DualTangent>(m, "DualTangent")
      .def_readonly("dpi", &DualTangent::dpi)
      .def_readonly("dmu", &DualTangent::dmu);

  m.def("bracket", &bracket);
  m.def("group_mul", &group_mul);
  m.def("group_inv", &group_inv);
  m.def("Ad", &Ad);
  m.def("exp_group", &exp_group);
  m.def("algebra_inner", &algebra_inner);
  m.def("structure_constants", [] { return dump(structure_constants_json()); });

  m.def("coad", &coad);
  m.def("pairing", &pairing);
  m.def("infinitesimal_generator", &infinitesimal_generator);
  m.def("casimir", &casimir);
  m.def("orbit_report", [](const DualElement& x) { return dump(orbit_report(x)); });
  m.def("normal_form", [](const DualElement& x) {
    const NormalForm nf = normal_form(x);
    return py::make_tuple(nf.reducer, nf.reduced);
  });
  m.def("orbit_point", &orbit_point);

  py::class_<FdOptions>(m, "FdOptions")
      .def(py::init<>())
      .def(py::init<double, bool>(), py::arg("step"), py::arg("richardson") = false)
      .def_readwrite("step", &FdOptions::step)
      .def_readwrite("richardson", &FdOptions::richardson);
  m.def("kks_form", &kks_form);
  m.def("theta", &theta);
  m.def("d_theta_numeric", &d_theta_numeric, py::arg("x"), py::arg("v"), py::arg("w"),
        py::arg("fd") = FdOptions{});
  m.def("phi", [](const DualElement& x) {
    const CotangentPoint c = phi(x);
    return py::make_tuple(c.base(), c.covec(), c.radius());
  });
  m.def("liouville_sign", &liouville_sign);
  m.def("liouville_pullback_residual", &liouville_pullback_residual, py::arg("x"),
        py::arg("v"), py::arg("fd") = FdOptions{});

  m.def("lie_poisson_bracket",
        py::overload_cast<const AlgebraElement&, const AlgebraElement&, const DualElement&>(
            &lie_poisson_bracket),
        py::arg("grad_f"), py::arg("grad_g"), py::arg("x"));
  m.def("bracket_table", [](const DualElement& x) {
    std::vector<py::tuple> rows;
    for (const BracketReport& r : base_bracket_table(x)) {
      rows.push_back(py::make_tuple(r.lhs, r.rhs, r.value, r.expected, r.residual));
    }
    return rows;
  });

  m.def(
      "verify",
      [](std::uint64_t seed, std::size_t trials, unsigned threads) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        opt.threads = threads;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = run_verification(opt);
        }
        return dump(verify_report_json(report));
      },
      py::arg("seed") = 42, py::arg("trials") = 1000, py::arg("threads") = 0);

  m.def(
      "simulate",
      [](const std::string& config_text) {
        std::istringstream in(config_text);
        const RunConfig cfg = parse_run_config(in);
        Json out;
        if (cfg.formulation == Formulation::Both) {
          const DivergenceReport d = compare_formulations(cfg);
          std::ostringstream a, b;
          write_trajectory_csv(a, d.canonical);
          write_trajectory_csv(b, d.lie_poisson);
          out["summary"] = simulation_summary(cfg, d.canonical, &d.lie_poisson, &d);
          out["csv"] = a.str();
          out["lie_poisson_csv"] = b.str();
        } else {
          const Trajectory t = integrate(cfg);
          std::ostringstream a;
          write_trajectory_csv(a, t);
          out["summary"] = simulation_summary(cfg, t, nullptr, nullptr);
          out["csv"] = a.str();
        }
        return dump(out);
      },
      py::arg("config_text"));
}
