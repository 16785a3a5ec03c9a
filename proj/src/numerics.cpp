#include "heatsched/numerics.hpp"

#include <cmath>
#include <limits>

#include "heatsched/errors.hpp"

namespace heatsched::numerics {

void SolverConfig::validate() const {
    if (!(tol_kkt > 0 && tol_step > 0 && condensation_tol > 0))
        throw ValidationError("SolverConfig: tolerances must be > 0");
    if (!(max_iter > 0 && condensation_max_rounds > 0 && heuristic_rounds > 0))
        throw ValidationError("SolverConfig: iteration caps must be > 0");
    if (!(barrier_t0 > 0 && barrier_mult > 1))
        throw ValidationError("SolverConfig: barrier schedule must grow");
    if (!(backtrack_alpha > 0 && backtrack_alpha < 0.5 && backtrack_beta > 0 &&
          backtrack_beta < 1))
        throw ValidationError("SolverConfig: invalid backtracking parameters");
    if (!(heuristic_alpha > 1))
        throw ValidationError("SolverConfig: heuristic_alpha must be > 1");
}

namespace {

Matrix finite_difference_hessian(const SmoothFunction& f, const Vector& x) {
    const int n = static_cast<int>(x.size());
    const double h = 1e-6;
    Matrix H(n, n);
    Vector xp = x;
    const Vector g0 = f.gradient(x);
    for (int j = 0; j < n; ++j) {
        xp(j) = x(j) + h;
        H.col(j) = (f.gradient(xp) - g0) / h;
        xp(j) = x(j);
    }
    return 0.5 * (H + H.transpose());
}

Matrix eval_hessian(const SmoothFunction& f, const Vector& x) {
    return f.hessian ? f.hessian(x) : finite_difference_hessian(f, x);
}

bool strictly_feasible(const ConvexProgram& p, const Vector& x) {
    for (const auto& g : p.constraints)
        if (!(g.value(x) < 0)) return false;
    return true;
}

}  // namespace

BarrierResult barrier_maximize(const ConvexProgram& program, const SolverConfig& config) {
    config.validate();
    const int n = static_cast<int>(program.start.size());
    const int m = static_cast<int>(program.constraints.size());
    if (n == 0) throw ValidationError("barrier_maximize: empty start point");
    if (!strictly_feasible(program, program.start))
        throw NoStrictlyFeasiblePoint("barrier_maximize: start point is not strictly "
                                      "feasible");

    // Barrier potential for maximization: Psi_t(x) = -t f(x) - sum ln(-g_j(x)).
    auto potential = [&](double t, const Vector& x) -> double {
        double v = -t * program.objective.value(x);
        if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
        for (const auto& g : program.constraints) {
            const double gj = g.value(x);
            if (!(gj < 0)) return std::numeric_limits<double>::infinity();
            v -= std::log(-gj);
        }
        return v;
    };

    Vector x = program.start;
    double t = config.barrier_t0;
    // Push the gap per constraint two orders below tol_kkt so active
    // constraints end up tight to ~1e-10 relative at the default tolerance.
    const double gap_target = config.tol_kkt * 1e-2;
    int newton_total = 0;
    const double centering_tol = 1e-12;

    while (true) {
        // Newton centering of Psi_t.
        for (;;) {
            if (++newton_total > config.max_iter)
                throw IterationLimitExceeded("barrier_maximize: Newton iteration cap");
            Vector grad = -t * program.objective.gradient(x);
            Matrix hess = -t * eval_hessian(program.objective, x);
            for (const auto& g : program.constraints) {
                const double gj = g.value(x);
                const Vector gg = g.gradient(x);
                grad += gg / (-gj);
                hess += gg * gg.transpose() / (gj * gj);
                hess += eval_hessian(g, x) / (-gj);
            }

            Vector step;
            double ridge = 0;
            for (;;) {
                Eigen::LDLT<Matrix> ldlt(hess + ridge * Matrix::Identity(n, n));
                step = ldlt.solve(-grad);
                if (ldlt.info() == Eigen::Success && step.allFinite() &&
                    grad.dot(step) <= 0)
                    break;
                ridge = ridge == 0 ? 1e-10 * (1.0 + hess.diagonal().cwiseAbs().maxCoeff())
                                   : ridge * 100;
                if (ridge > 1e30)
                    throw IterationLimitExceeded("barrier_maximize: singular Newton system");
            }

            const double decrement2 = -grad.dot(step);
            if (decrement2 * 0.5 <= centering_tol) break;

            const double f0 = potential(t, x);
            const double slope = grad.dot(step);
            double s = 1.0;
            bool stalled = false;
            while (potential(t, x + s * step) >
                   f0 + config.backtrack_alpha * s * slope) {
                s *= config.backtrack_beta;
                if (s < 1e-16) {
                    stalled = true;
                    break;
                }
            }
            if (stalled || s * step.cwiseAbs().maxCoeff() <= config.tol_step) {
                if (decrement2 * 0.5 <= 1e-6) break;  // centered to line-search precision
                throw IterationLimitExceeded("barrier_maximize: line search stalled");
            }
            x += s * step;
        }

        if (m == 0 || 1.0 / t <= gap_target) break;
        t *= config.barrier_mult;
    }

    BarrierResult result;
    result.point = x;
    result.multipliers.resize(m);
    Vector stationarity = program.objective.gradient(x);
    for (int j = 0; j < m; ++j) {
        const double gj = program.constraints[j].value(x);
        result.multipliers(j) = 1.0 / (t * (-gj));
        stationarity -= result.multipliers(j) * program.constraints[j].gradient(x);
    }
    result.kkt_residual = stationarity.cwiseAbs().maxCoeff();
    result.duality_gap = m / t;
    result.iterations = newton_total;
    return result;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
    if (!(tol > 0)) throw ValidationError("bisect_root: tol must be > 0");
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if (flo * fhi > 0)
        throw BracketInvalid("bisect_root: f(lo) and f(hi) have the same sign");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if (flo * fm < 0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

FixedPointResult fixed_point_iterate(
    const std::function<std::vector<double>(const std::vector<double>&)>& map,
    std::vector<double> init, double tol, int max_iter) {
    if (!(tol > 0)) throw ValidationError("fixed_point_iterate: tol must be > 0");
    std::vector<double> current = std::move(init);
    for (int iter = 1; iter <= max_iter; ++iter) {
        std::vector<double> next = map(current);
        if (next.size() != current.size())
            throw ValidationError("fixed_point_iterate: map changed dimension");
        double gap = 0;
        for (std::size_t i = 0; i < next.size(); ++i)
            gap = std::max(gap, std::abs(next[i] - current[i]));
        current = std::move(next);
        if (gap <= tol) return {current, iter};
    }
    throw IterationLimitExceeded("fixed_point_iterate: no fixed point within max_iter");
}

}  // namespace heatsched::numerics
