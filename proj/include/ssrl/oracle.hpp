#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ssrl/error.hpp"
#include "ssrl/rng.hpp"

namespace ssrl::oracle {

/// A value of one of the random variables. y and the outputs of f and g live
/// in R^M; x_J and x_Jc states may have any dimension.
using State = std::vector<double>;

/// Finite joint law p(y, x_J, x_Jc), stored densely as p[(iy * nJ + iJ) * nJc + iJc].
struct DiscreteJoint {
  std::vector<State> y, xj, xjc;
  std::vector<double> p;

  std::size_t ny() const { return y.size(); }
  std::size_t nj() const { return xj.size(); }
  std::size_t njc() const { return xjc.size(); }
  std::size_t dim() const { return y.empty() ? 0 : y.front().size(); }
  double prob(std::size_t iy, std::size_t ij, std::size_t ijc) const { return p[(iy * nj() + ij) * njc() + ijc]; }
  /// Throws PreconditionError when the table is not a valid instance.
  void validate() const;
};

/// Function tabulated on the states of its domain; values in R^M.
struct TabulatedFn {
  std::vector<State> values;
  const State& operator()(std::size_t i) const { return values.at(i); }
};

enum class Given { Y, XJ, XJc, X };

/// Index of the joint state x = (x_J, x_Jc).
inline std::size_t x_index(const DiscreteJoint& dj, std::size_t ij, std::size_t ijc) { return ij * dj.njc() + ijc; }

using Expression = std::function<State(std::size_t iy, std::size_t ij, std::size_t ijc)>;

/// E[expr | given] by enumeration, tabulated on the given variable's states.
/// Zero-mass conditioning states raise a PreconditionError.
TabulatedFn cond_expect(const DiscreteJoint& dj, const Expression& expr, Given given);

/// Raised when an instance does not satisfy a theorem's hypotheses, as
/// opposed to the theorem's conclusion failing.
class AssumptionViolation : public PreconditionError {
public:
  explicit AssumptionViolation(const std::string& what) : PreconditionError(what) {}
};

/// max over y states with mass of |p(x_J, x_Jc | y) - p(x_J | y) p(x_Jc | y)|.
double factorization_residual(const DiscreteJoint& dj);
/// max over y states of ||E[g(x_J) | y] - y||_inf.
double unbiasedness_residual(const DiscreteJoint& dj, const TabulatedFn& g);
void check_assumptions(const DiscreteJoint& dj, const TabulatedFn& g, double tol = 1e-12);

struct Thm1Report {
  TabulatedFn f_star;        // on x_Jc: E[g(x_J) | x_Jc]
  TabulatedFn f_bayes;       // on x_Jc: E[y | x_Jc]
  double optimality_gap = 0;  // min over perturbations of loss(f) - loss(f_star)
  double expansion_residual = 0;  // |loss(f) - loss(f_star) - E||f - f_star||^2| over the same perturbations
  double decomposition_residual = 0;  // error decomposition, max over x_Jc and over x states
  double total_error = 0;    // E||f_star(x_Jc) - y||^2
};

/// g is tabulated on x_J states. `perturbations` random tabulated offsets of
/// f_star are drawn from `rng` for the optimality check.
Thm1Report verify_thm1(const DiscreteJoint& dj, const TabulatedFn& g, RngStream& rng, std::size_t perturbations = 64);

/// Per-state conditional error terms at x_Jc state i: E[||f_star - y||^2 | x_Jc],
/// ||f_star - f_bayes||^2 and tr Var(y | x_Jc).
struct ErrorTerms {
  double error = 0, bias = 0, variance = 0;
};
ErrorTerms error_terms(const DiscreteJoint& dj, const Thm1Report& r, std::size_t ijc);

struct Prop1Report {
  TabulatedFn f_star;
  double residual = 0;  // max |E[g | x_Jc] - E[y | x_Jc]|
};

Prop1Report verify_prop1(const DiscreteJoint& dj, const TabulatedFn& g);

struct Prop2Report {
  double lhs = 0, rhs = 0, slack = 0;
  double sigma2 = 0;       // max_m max_y Var(g_m | y)
  double cross_term = 0;   // E<f(x_Jc) - y, g(x_J) - y>
};

/// f_x is tabulated on joint x states (x_index), f_jc on x_Jc states.
Prop2Report verify_prop2(const DiscreteJoint& dj, const TabulatedFn& g, const TabulatedFn& f_x, const TabulatedFn& f_jc);

/// max_m max_y Var(g(x_J)_m | y) and the per-(y, m) table.
std::vector<State> conditional_variance(const DiscreteJoint& dj, const TabulatedFn& g);

struct SigmaCaptureReport {
  std::vector<State> enumerated;  // Var(g_m | y) per y state
  State analytic;                 // per coordinate
  double max_residual = 0;
};

/// Additive construction: x_J = y + e1 with e1 independent of y and g the identity.
SigmaCaptureReport sigma_capture_additive(const std::vector<State>& y_states, const std::vector<double>& p_y,
                                          const std::vector<State>& e1_states, const std::vector<double>& p_e1);

/// Linear construction: x_J = s + e2 (e2 i.i.d. per coordinate with the
/// three-point law {-sqrt(3) s_e, 0, sqrt(3) s_e} of weights {1/6, 2/3, 1/6},
/// which has variance s_e^2), y = G s and g(x_J) = G x_J.
SigmaCaptureReport sigma_capture_linear(const std::vector<std::vector<double>>& G, const std::vector<State>& s_states,
                                        const std::vector<double>& p_s, double sigma_e);

// Random instance generators.
struct InstanceShape {
  std::size_t ny = 3, nj = 3, njc = 3, dim = 1;
};

InstanceShape random_shape(RngStream& rng, std::size_t max_states = 8, std::size_t max_dim = 2);
/// Unconstrained joint with random state values and probabilities.
DiscreteJoint random_joint(RngStream& rng, const InstanceShape& s);
/// Joint satisfying the factorization assumption, paired with a g that is
/// conditionally unbiased: y states are set to E[g(x_J) | y].
std::pair<DiscreteJoint, TabulatedFn> random_gated(RngStream& rng, const InstanceShape& s);
TabulatedFn random_fn(RngStream& rng, std::size_t states, std::size_t dim);

/// The binary symmetric channel example: y uniform on {0,1}, x_J and x_Jc
/// independent flips of y with probability `flip`.
DiscreteJoint bsc_joint(double flip = 0.25);

}  // namespace ssrl::oracle
