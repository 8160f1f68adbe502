#include "qorbit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qorbit/coadjoint.hpp"
#include "qorbit/dynamics.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/lie_group.hpp"
#include "qorbit/poisson.hpp"
#include "qorbit/random.hpp"
#include "qorbit/symplectic.hpp"

namespace qorbit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFdStep = 1e-4;

// Shortfall of `value` below a lower bound; NaN maps to infinity.
double shortfall(double value, double bound) {
  if (std::isnan(value)) return kInf;
  return std::max(0.0, bound - value);
}

double max_nan_aware(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return kInf;
  return std::max(a, b);
}

// Evaluates fn(i) for i < n on a small pool, strided by worker. Results land
// in trial order, so every reduction is independent of scheduling. A trial
// that throws records NaN.
std::vector<double> parallel_map(std::size_t n, unsigned threads,
                                 const std::function<double(std::size_t)>& fn) {
  if (threads == 0) {
    threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  }
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<double> out(n, 0.0);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += threads) {
      try {
        out[i] = fn(i);
      } catch (const std::exception&) {
        out[i] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(work, w);
    }
  }
  return out;
}

double max_of(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = max_nan_aware(m, v);
  return m;
}

double min_of(const std::vector<double>& values) {
  double m = kInf;
  for (double v : values) m = std::isnan(v) ? -kInf : std::min(m, v);
  return m;
}

double dist(const Quaternion& a, const Quaternion& b) { return norm(a - b); }
double dist(const PureQuaternion& a, const PureQuaternion& b) { return norm(a - b); }
double dist(const AlgebraElement& a, const AlgebraElement& b) { return norm(a - b); }
double dist(const DualElement& a, const DualElement& b) { return norm(a - b); }
double dist(const GroupElement& a, const GroupElement& b) {
  return norm(a.q - b.q) + norm(a.s.value() - b.s.value());
}

Matrix7 random_matrix(Rng& rng) {
  Matrix7 m;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  return m;
}

Vector7 random_vector(Rng& rng) {
  Vector7 v;
  for (int i = 0; i < 7; ++i) v(i) = rng.uniform(-1.0, 1.0);
  return v;
}

ScalarField random_quadratic(Rng& rng, const char* name) {
  const Matrix7 a = random_matrix(rng);
  const Vector7 b = random_vector(rng);
  return ScalarField::quadratic(name, a, b, rng.uniform(-1.0, 1.0));
}

ScalarField random_linear(Rng& rng, const char* name) {
  const Vector7 b = random_vector(rng);
  return ScalarField::linear(name, b, rng.uniform(-1.0, 1.0));
}

struct Catalog {
  std::vector<std::pair<std::string, double>> entries{
      {"quat.associativity", 1e-14},
      {"quat.norm_multiplicativity", 1e-12},
      {"quat.inner_adjoint", 1e-12},
      {"quat.pure_product_split", 0.0},
      {"quat.rotation_composition", 1e-12},
      {"lie.structure_antisymmetry", 0.0},
      {"lie.structure_jacobi", 0.0},
      {"lie.bracket_matches_table", 0.0},
      {"lie.jacobi_random", 1e-12},
      {"lie.ad_homomorphism", 1e-12},
      {"lie.ad_derivative", 1e-6},
      {"lie.group_axioms", 1e-13},
      {"coad.duality", 1e-12},
      {"coad.action_law", 1e-12},
      {"coad.generator_fd", 1e-6},
      {"coad.casimir_invariance", 1e-12},
      {"coad.casimir_flow", 1e-10},
      {"coad.type1_invariance", 1e-12},
      {"coad.purity", 1e-12},
      {"coad.normal_form", 1e-10},
      {"coad.orbit_point_roundtrip", 1e-10},
      {"sym.kks_antisymmetry_bilinearity", 1e-12},
      {"sym.kks_kernel", 1e-12},
      {"sym.nondegeneracy", 0.0},
      {"sym.closedness", 1e-5},
      {"sym.exactness", 1e-6},
      {"sym.theta_well_defined", 0.0},
      {"sym.phi_pairing", 1e-12},
      {"sym.phi_injective", 0.0},
      {"sym.liouville_pullback", 1e-6},
      {"poisson.antisymmetry", 1e-12},
      {"poisson.bilinearity", 1e-12},
      {"poisson.leibniz", 1e-10},
      {"poisson.coincidence", 1e-12},
      {"poisson.casimir", 1e-12},
      {"poisson.jacobi", 1e-10},
      {"poisson.quaternionic_forms", 1e-12},
      {"dyn.vector_field_consistency", 1e-12},
      {"dyn.energy", 1e-8},
      {"dyn.momentum_norm", 1e-8},
      {"dyn.unit_norm_projected", 1e-12},
      {"dyn.unit_norm_raw", 1e-6},
      {"dyn.casimir_lie_poisson", 1e-12},
      {"dyn.formulation_equivalence", 1e-8},
      {"dyn.symmetric_closed_form", 1e-10},
      {"dyn.convergence_order", 0.0},
  };

  double tolerance(const std::string& name) const {
    for (const auto& [n, t] : entries) {
      if (n == name) return t;
    }
    throw std::logic_error("property missing from catalog: " + name);
  }
};

const Catalog& catalog() {
  static const Catalog c;
  return c;
}

class Runner {
 public:
  Runner(const VerifyOptions& opt) : opt_(opt) {}

  std::size_t trials() const { return opt_.trials; }

  // Trial i of property `name` draws from its own stream.
  std::vector<double> collect(const std::string& name, std::size_t n,
                              const std::function<double(Rng&)>& fn) const {
    const Rng root = Rng(opt_.seed).split(stream_id(name));
    return parallel_map(n, opt_.threads, [&](std::size_t i) {
      Rng rng = root.split(i);
      return fn(rng);
    });
  }

  double max_over(const std::string& name, std::size_t n,
                  const std::function<double(Rng&)>& fn) const {
    return max_of(collect(name, n, fn));
  }

  void add(const std::string& name, std::size_t trials, double residual,
           std::vector<std::pair<std::string, double>> details = {}) {
    PropertyResult r;
    r.name = name;
    r.trials = trials;
    r.max_residual = residual;
    r.tolerance = catalog().tolerance(name);
    r.details = std::move(details);
    results_.push_back(std::move(r));
  }

  // Random property with `trials()` trials.
  void add_random(const std::string& name, const std::function<double(Rng&)>& fn) {
    add(name, trials(), max_over(name, trials(), fn));
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  const VerifyOptions& opt_;
  std::vector<PropertyResult> results_;
};

void quaternion_properties(Runner& run) {
  run.add_random("quat.associativity", [](Rng& rng) {
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng),
                     c = random_quaternion(rng);
    return dist((a * b) * c, a * (b * c)) / (norm(a) * norm(b) * norm(c));
  });
  run.add_random("quat.norm_multiplicativity", [](Rng& rng) {
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    return std::abs(norm(a * b) - norm(a) * norm(b)) / (norm(a) * norm(b));
  });
  run.add_random("quat.inner_adjoint", [](Rng& rng) {
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng),
                     q = random_quaternion(rng);
    return std::max(std::abs(inner(a, q * b) - inner(conj(q) * a, b)),
                    std::abs(inner(a, b * q) - inner(a * conj(q), b)));
  });
  run.add_random("quat.pure_product_split", [](Rng& rng) {
    const PureQuaternion u = random_pure(rng), v = random_pure(rng);
    const Quaternion split = -inner(u, v) * e0 + embed(cross(u, v));
    const Quaternion d = (u * v) - split;
    return std::max({std::abs(d.w), std::abs(d.x), std::abs(d.y), std::abs(d.z)});
  });
  run.add_random("quat.rotation_composition", [](Rng& rng) {
    const UnitQuaternion s = random_unit(rng), t = random_unit(rng);
    const PureQuaternion v = random_pure(rng);
    return dist(rotate(s, rotate(t, v)), rotate(UnitQuaternion(s * t), v));
  });
}

void lie_properties(Runner& run) {
  const StructureConstants& c = structure_constants();

  int antisym = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) antisym = std::max(antisym, std::abs(c(i, j, k) + c(j, i, k)));
  run.add("lie.structure_antisymmetry", 49, antisym);

  // Integer Jacobi identity over the 35 triples i < j < k.
  int jacobi = 0;
  std::size_t triples = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        ++triples;
        for (int m = 0; m < 7; ++m) {
          int sum = 0;
          for (int l = 0; l < 7; ++l) {
            sum += c(j, k, l) * c(i, l, m) + c(k, i, l) * c(j, l, m) +
                   c(i, j, l) * c(k, l, m);
          }
          jacobi = std::max(jacobi, std::abs(sum));
        }
      }
  run.add("lie.structure_jacobi", triples, jacobi);

  double table = 0.0;
  std::size_t pairs = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      ++pairs;
      const Vector7 b = to_vector(bracket(AlgebraElement::basis(i), AlgebraElement::basis(j)));
      for (int k = 0; k < 7; ++k) table = std::max(table, std::abs(b(k) - c(i, j, k)));
    }
  run.add("lie.bracket_matches_table", pairs, table);

  run.add_random("lie.jacobi_random", [](Rng& rng) {
    const AlgebraElement u = random_algebra(rng), v = random_algebra(rng),
                         w = random_algebra(rng);
    return norm(bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) +
                bracket(w, bracket(u, v)));
  });
  run.add_random("lie.ad_homomorphism", [](Rng& rng) {
    const GroupElement g = random_group(rng), h = random_group(rng);
    const AlgebraElement v = random_algebra(rng);
    return dist(Ad(group_mul(g, h), v), Ad(g, Ad(h, v)));
  });
  run.add_random("lie.ad_derivative", [](Rng& rng) {
    const AlgebraElement v = random_algebra(rng), w = random_algebra(rng);
    const AlgebraElement fd =
        (1.0 / (2.0 * kFdStep)) *
        (Ad(exp_group(kFdStep * v), w) - Ad(exp_group(-kFdStep * v), w));
    return dist(fd, ad(v, w));
  });
  run.add_random("lie.group_axioms", [](Rng& rng) {
    const GroupElement g = random_group(rng), h = random_group(rng),
                       k = random_group(rng);
    const GroupElement id = GroupElement::identity();
    return std::max({dist(group_mul(group_mul(g, h), k), group_mul(g, group_mul(h, k))),
                     dist(group_mul(g, group_inv(g)), id),
                     dist(group_mul(group_inv(g), g), id),
                     dist(group_mul(id, g), g), dist(group_mul(g, id), g)});
  });
}

void coadjoint_properties(Runner& run) {
  run.add_random("coad.duality", [](Rng& rng) {
    const GroupElement g = random_group(rng);
    const DualElement x = random_dual(rng);
    const AlgebraElement v = random_algebra(rng);
    return std::abs(pairing(coad(g, x), Ad(g, v)) - pairing(x, v));
  });
  run.add_random("coad.action_law", [](Rng& rng) {
    const GroupElement g = random_group(rng), h = random_group(rng);
    const DualElement x = random_dual(rng);
    return dist(coad(group_mul(g, h), x), coad(g, coad(h, x)));
  });
  run.add_random("coad.generator_fd", [](Rng& rng) {
    const AlgebraElement v = random_algebra(rng);
    const DualElement x = random_dual(rng);
    const DualElement fd = (1.0 / (2.0 * kFdStep)) *
                           (coad(exp_group(kFdStep * v), x) - coad(exp_group(-kFdStep * v), x));
    const DualTangent t = infinitesimal_generator(v, x);
    return dist(fd, DualElement{t.dpi, t.dmu});
  });
  run.add_random("coad.casimir_invariance", [](Rng& rng) {
    const GroupElement g = random_group(rng);
    const DualElement x = random_type2(rng);
    return std::abs(casimir(coad(g, x)) - casimir(x));
  });
  run.add_random("coad.casimir_flow", [](Rng& rng) {
    const AlgebraElement v = random_algebra(rng);
    const DualElement x = random_type2(rng);
    return std::abs(2.0 * inner(x.pi, infinitesimal_generator(v, x).dpi));
  });
  run.add_random("coad.type1_invariance", [](Rng& rng) {
    const GroupElement g = random_group(rng);
    const DualElement x{{}, random_pure(rng)};
    const DualElement y = coad(g, x);
    return std::max(std::abs(norm(y.mu) - norm(x.mu)), norm(y.pi));
  });
  run.add_random("coad.purity", [](Rng& rng) {
    const GroupElement g = random_group(rng);
    const DualElement x = random_dual(rng);
    const Quaternion& s = g.s.value();
    const Quaternion m =
        s * (embed(x.mu) - conj(g.q) * x.pi) * conj(s) + inner(g.q, x.pi) * e0;
    return std::abs(m.w) / (1.0 + norm(x));
  });
  run.add_random("coad.normal_form", [](Rng& rng) {
    const DualElement x = random_type2(rng);
    const NormalForm nf = normal_form(x);
    return dist(nf.reduced, DualElement{norm(x.pi) * e0, {}}) / (1.0 + norm(x));
  });
  run.add_random("coad.orbit_point_roundtrip", [](Rng& rng) {
    const double rho = rng.uniform(0.1, 10.0);
    const PureQuaternion q = random_pure(rng);
    const UnitQuaternion s = random_unit(rng);
    const DualElement x = orbit_point(rho, q, s);
    const DualElement via_coad = coad(GroupElement{embed(q), s}, DualElement{rho * e0, {}});
    const NormalForm nf = normal_form(x);
    return std::max(dist(x, via_coad),
                    dist(nf.reduced, DualElement{rho * e0, {}}) / (1.0 + norm(x)));
  });
}

void symplectic_properties(Runner& run) {
  const FdOptions fd{kFdStep, false};

  run.add_random("sym.kks_antisymmetry_bilinearity", [](Rng& rng) {
    const DualElement x = random_type2(rng);
    const AlgebraElement u = random_algebra(rng), v = random_algebra(rng),
                         w = random_algebra(rng);
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    const double antisym = std::abs(kks_form(x, v, w) + kks_form(x, w, v));
    const double linear = std::abs(kks_form(x, a * u + b * v, w) -
                                   a * kks_form(x, u, w) - b * kks_form(x, v, w));
    return std::max(antisym, linear);
  });
  run.add_random("sym.kks_kernel", [](Rng& rng) {
    // (c pi, 0) generates the zero vector at x.
    const DualElement x = random_type2(rng);
    const AlgebraElement k{rng.uniform(-1.0, 1.0) * x.pi, {}};
    const AlgebraElement v = random_algebra(rng);
    const DualTangent t = infinitesimal_generator(k, x);
    return std::max({std::abs(kks_form(x, k, v)), norm(t.dpi), norm(t.dmu)});
  });


  {
    const std::size_t n = std::min<std::size_t>(100, run.trials());
    // -1 marks a point whose orbit dimension is not 6.
    const std::vector<double> sigmas = run.collect("sym.nondegeneracy", n, [](Rng& rng) {
      const OrbitTangentAnalysis a = analyze_orbit_tangent(random_type2(rng));
      return a.orbit_dimension == 6 ? a.gram_sigma_min : -1.0;
    });
    const double smallest = min_of(sigmas);
    run.add("sym.nondegeneracy", n, shortfall(smallest, 1e-8),
            {{"min_gram_sigma", smallest}, {"lower_bound", 1e-8}, {"orbit_dimension", 6}});
  }

  run.add_random("sym.closedness", [fd](Rng& rng) {
    const DualElement x = random_type2(rng);
    return std::abs(d_omega_numeric(x, random_algebra(rng), random_algebra(rng),
                                    random_algebra(rng), fd));
  });

  {
    // Also records how the alternative sign (nu xi' + nu' xi) fares.
    const std::vector<double> minus = run.collect("sym.exactness", run.trials(), [fd](Rng& rng) {
      const DualElement x = random_type2(rng);
      const AlgebraElement v = random_algebra(rng), w = random_algebra(rng);
      return std::abs(kks_form(x, v, w) + d_theta_numeric(x, v, w, fd));
    });
    const std::vector<double> plus = run.collect("sym.exactness", run.trials(), [fd](Rng& rng) {
      const DualElement x = random_type2(rng);
      const AlgebraElement v = random_algebra(rng), w = random_algebra(rng);
      const double omega_plus = -inner(x.pi, v.nu * w.xi + w.nu * v.xi) -
                                inner(x.mu, 2.0 * cross(v.xi, w.xi));
      return std::abs(omega_plus + d_theta_numeric(x, v, w, fd));
    });
    run.add("sym.exactness", run.trials(), max_of(minus),
            {{"fd_step", kFdStep}, {"alternative_plus_sign_max_residual", max_of(plus)}});
  }

  run.add_random("sym.theta_well_defined", [](Rng& rng) {
    const DualElement x = random_type2(rng);
    const AlgebraElement v = random_algebra(rng);
    const AlgebraElement k{rng.uniform(-1.0, 1.0) * x.pi, {}};
    return std::abs(theta(x, v + k) - theta(x, v));
  });
  run.add_random("sym.phi_pairing", [](Rng& rng) {
    const DualElement x = random_type2(rng);
    const PureQuaternion xi = random_pure(rng);
    const CotangentPoint c = phi(x);
    const double rho2 = c.radius() * c.radius();
    return std::abs(inner(rho2 * (-c.covec()), x.pi * xi) / rho2 - inner(x.mu, xi));
  });

  {
    const std::vector<double> gaps = run.collect("sym.phi_injective", run.trials(), [](Rng& rng) {
      const DualElement x = random_type2(rng);
      const AlgebraElement v = random_algebra(rng);
      const DualElement y = coad(exp_group(1e-5 * v), x);
      if (dist(x, y) < 1e-6) {
        return kInf;  // too close to count
      }
      const CotangentPoint a = phi(x), b = phi(y);
      return norm(a.base() - b.base()) + norm(a.covec() - b.covec());
    });
    const double smallest = min_of(gaps);
    run.add("sym.phi_injective", run.trials(), shortfall(smallest, 1e-9),
            {{"min_image_distance", smallest}, {"lower_bound", 1e-9}});
  }

  {
    const std::size_t n = std::min<std::size_t>(500, run.trials());
    const double r = run.max_over("sym.liouville_pullback", n, [fd](Rng& rng) {
      const DualElement x = random_type2(rng);
      return liouville_pullback_residual(x, random_algebra(rng), fd);
    });
    run.add("sym.liouville_pullback", n, r, {{"sign", liouville_sign()}});
  }
}

void poisson_properties(Runner& run) {
  run.add_random("poisson.antisymmetry", [](Rng& rng) {
    const ScalarField f = random_quadratic(rng, "F"), g = random_quadratic(rng, "G");
    const DualElement x = random_dual(rng);
    return std::abs(lie_poisson_bracket(f, g, x) + lie_poisson_bracket(g, f, x));
  });
  run.add_random("poisson.bilinearity", [](Rng& rng) {
    const ScalarField f = random_quadratic(rng, "F"), g = random_quadratic(rng, "G"),
                      h = random_quadratic(rng, "H");
    const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    const DualElement x = random_dual(rng);
    const ScalarField combo = ScalarField::combination(a, f, b, g);
    return std::abs(lie_poisson_bracket(combo, h, x) - a * lie_poisson_bracket(f, h, x) -
                    b * lie_poisson_bracket(g, h, x));
  });
  run.add_random("poisson.leibniz", [](Rng& rng) {
    const ScalarField f = random_quadratic(rng, "F"), g = random_linear(rng, "G"),
                      h = random_quadratic(rng, "H");
    const DualElement x = random_dual(rng);
    return std::abs(lie_poisson_bracket(f * g, h, x) - f(x) * lie_poisson_bracket(g, h, x) -
                    g(x) * lie_poisson_bracket(f, h, x));
  });
  run.add_random("poisson.coincidence", [](Rng& rng) {
    const DualElement x = random_dual(rng, -10.0, 10.0);
    double worst = 0.0;
    for (const BracketReport& r : base_bracket_table(x)) worst = max_nan_aware(worst, r.residual);
    return worst;
  });
  run.add_random("poisson.casimir", [](Rng& rng) {
    static const ScalarField c = ScalarField::casimir();
    const ScalarField f = (rng.unit() < 0.5) ? random_linear(rng, "F") : random_quadratic(rng, "F");
    const DualElement x = random_dual(rng);
    return std::abs(lie_poisson_bracket(c, f, x));
  });
  run.add_random("poisson.jacobi", [](Rng& rng) {
    const ScalarField f = random_quadratic(rng, "F"), g = random_quadratic(rng, "G"),
                      h = random_quadratic(rng, "H");
    return jacobi_residual(f, g, h, random_dual(rng));
  });
  run.add_random("poisson.quaternionic_forms", [](Rng& rng) {
    const DualElement x = random_dual(rng);
    const PureQuaternion xi = random_pure(rng);
    const Quaternion a = random_quaternion(rng), b = random_quaternion(rng);
    double worst = 0.0;
    for (const BracketReport& r : quaternionic_bracket_forms(x, xi, a, b)) {
      worst = max_nan_aware(worst, r.residual);
    }
    return worst;
  });
}

Quaternion symmetric_exact(double t) { return {std::cos(t), 0.0, 0.0, std::sin(t)}; }

RunConfig symmetric_body(double dt, double t_end) {
  RunConfig cfg{InertiaSpec(1.0, 1.0, 1.0), State{e0, {0.0, 0.0, 1.0}}, dt, t_end};
  return cfg;
}

void dynamics_properties(Runner& run, std::uint64_t seed) {
  run.add_random("dyn.vector_field_consistency", [](Rng& rng) {
    const DualElement x = random_type2(rng);
    const InertiaSpec inertia(rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0),
                              rng.uniform(0.5, 3.0));
    const DualTangent a = lie_poisson_vector_field(x, inertia);
    const DualTangent b = lie_poisson_vector_field_closed(x, inertia);
    return norm(a.dpi - b.dpi) + norm(a.dmu - b.dmu);
  });

  // Free asymmetric body, I = (1, 2, 3), dt = 1e-3, t_end = 10, |mu(0)| = 1.
  const std::size_t runs = std::min<std::size_t>(3, run.trials());
  const Rng root = Rng(seed).split(stream_id("dyn.free_body"));
  double energy = 0.0, momentum = 0.0, unit_projected = 0.0, unit_raw = 0.0,
         casimir_lp = 0.0, divergence = 0.0;
  for (std::size_t i = 0; i < runs; ++i) {
    Rng rng = root.split(i);
    const UnitQuaternion q0 = random_unit(rng);
    PureQuaternion mu0 = random_pure(rng);
    mu0 = mu0 / norm(mu0);
    RunConfig cfg{InertiaSpec(1.0, 2.0, 3.0), State{q0.value(), mu0}, 1e-3, 10.0};
    cfg.cadence = 10;

    const DivergenceReport cmp = compare_formulations(cfg);
    const DriftSummary can = drifts(cmp.canonical);
    energy = max_nan_aware(energy, can.energy_relative);
    momentum = max_nan_aware(momentum, can.munorm);
    for (const Sample& s : cmp.canonical.samples) {
      unit_projected = max_nan_aware(unit_projected, std::abs(s.qnorm - 1.0));
    }
    for (const Sample& s : cmp.lie_poisson.samples) {
      casimir_lp = max_nan_aware(casimir_lp, std::abs(s.qnorm - cmp.lie_poisson.samples[0].qnorm));
    }
    divergence = max_nan_aware(divergence, cmp.max_divergence);

    cfg.integrator = Integrator::RK4Raw;
    for (const Sample& s : integrate(cfg, Formulation::Canonical).samples) {
      unit_raw = max_nan_aware(unit_raw, std::abs(s.qnorm - 1.0));
    }
  }
  run.add("dyn.energy", runs, energy);
  run.add("dyn.momentum_norm", runs, momentum);
  run.add("dyn.unit_norm_projected", runs, unit_projected);
  run.add("dyn.unit_norm_raw", runs, unit_raw);
  run.add("dyn.casimir_lie_poisson", runs, casimir_lp);
  run.add("dyn.formulation_equivalence", runs, divergence);

  {
    const Trajectory traj = integrate(symmetric_body(1e-3, 1.0));
    const Sample& end = traj.samples.back();
    run.add("dyn.symmetric_closed_form", 1,
            dist(end.q, symmetric_exact(1.0)) + dist(end.mu, PureQuaternion{0.0, 0.0, 1.0}));
  }

  {
    const double t_end = 2.0;
    std::array<double, 3> errors{};
    const std::array<double, 3> steps{0.1, 0.05, 0.025};
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Trajectory traj = integrate(symmetric_body(steps[i], t_end));
      errors[i] = dist(traj.samples.back().q, symmetric_exact(t_end));
    }
    const double r1 = errors[0] / errors[1];
    const double r2 = errors[1] / errors[2];
    auto outside = [](double r) {
      if (std::isnan(r)) return kInf;
      return std::max({0.0, 14.0 - r, r - 18.0});
    };
    run.add("dyn.convergence_order", 3, std::max(outside(r1), outside(r2)),
            {{"ratio_dt_0.1_to_0.05", r1}, {"ratio_dt_0.05_to_0.025", r2},
             {"ratio_lower", 14.0}, {"ratio_upper", 18.0}});
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.pass; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const PropertyResult& p : properties) {
    if (!p.pass) out.push_back(p.name);
  }
  return out;
}

const std::vector<std::pair<std::string, double>>& property_catalog() {
  return catalog().entries;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.trials == 0) {
    throw ConfigError("trials must be a positive integer");
  }
  if (options.tolerance_all && !(*options.tolerance_all >= 0.0)) {
    throw ConfigError("tolerance must be non-negative");
  }
  for (const auto& [name, tol] : options.tolerance_overrides) {
    const auto& entries = catalog().entries;
    const bool known = std::any_of(entries.begin(), entries.end(),
                                   [&](const auto& e) { return e.first == name; });
    if (!known) {
      throw ConfigError("unknown property '" + name + "'");
    }
    if (!(tol >= 0.0)) {
      throw ConfigError("tolerance for '" + name + "' must be non-negative");
    }
  }

  Runner run(options);
  quaternion_properties(run);
  lie_properties(run);
  coadjoint_properties(run);
  symplectic_properties(run);
  poisson_properties(run);
  dynamics_properties(run, options.seed);

  VerifyReport report;
  report.seed = options.seed;
  report.trials = options.trials;
  report.liouville_sign = liouville_sign();
  report.properties = run.take();
  for (PropertyResult& p : report.properties) {
    if (options.tolerance_all) p.tolerance = *options.tolerance_all;
    if (auto it = options.tolerance_overrides.find(p.name);
        it != options.tolerance_overrides.end()) {
      p.tolerance = it->second;
    }
    p.pass = p.max_residual <= p.tolerance;
  }
  return report;
}

}  // namespace qorbit
