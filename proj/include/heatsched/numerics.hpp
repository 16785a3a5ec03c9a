#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace heatsched::numerics {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Twice-differentiable scalar function with analytic derivatives. When the
// hessian callback is empty the solver falls back to forward differences of
// the gradient.
struct SmoothFunction {
    std::function<double(const Vector&)> value;
    std::function<Vector(const Vector&)> gradient;
    std::function<Matrix(const Vector&)> hessian;
};

enum class Domain { Linear, Log };

// maximize objective(x)  s.t.  constraints[j](x) <= 0 for all j,
// with `start` strictly feasible.
struct ConvexProgram {
    SmoothFunction objective;
    std::vector<SmoothFunction> constraints;
    Domain domain = Domain::Linear;
    Vector start;
};

struct SolverConfig {
    double tol_kkt = 1e-8;
    double tol_step = 1e-10;
    int max_iter = 10000;
    double barrier_t0 = 1.0;
    double barrier_mult = 10.0;
    double backtrack_alpha = 0.25;
    double backtrack_beta = 0.5;
    double condensation_tol = 1e-9;
    int condensation_max_rounds = 500;
    double heuristic_alpha = 1.05;
    int heuristic_rounds = 20;

    void validate() const;
};

struct BarrierResult {
    Vector point;
    Vector multipliers;    // one per constraint, recovered from barrier gradients
    double kkt_residual;   // inf-norm of grad f - sum multiplier_j grad g_j
    double duality_gap;    // #constraints / t at the final center
    int iterations;        // total Newton steps
};

// Log-barrier interior-point method with Newton centering and backtracking
// line search. Throws NoStrictlyFeasiblePoint / IterationLimitExceeded.
BarrierResult barrier_maximize(const ConvexProgram& program, const SolverConfig& config);

// Bisection on [lo, hi]; requires f(lo) * f(hi) <= 0.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

struct FixedPointResult {
    std::vector<double> point;
    int iterations;
};

// Iterates point <- map(point) until the update moves less than tol in the
// inf norm. Throws IterationLimitExceeded.
FixedPointResult fixed_point_iterate(
    const std::function<std::vector<double>(const std::vector<double>&)>& map,
    std::vector<double> init, double tol, int max_iter);

}  // namespace heatsched::numerics
