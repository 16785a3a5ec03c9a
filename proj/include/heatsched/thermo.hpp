#pragma once

#include <vector>

namespace heatsched {

// Relative feasibility tolerance used by check_feasible and the solvers.
inline constexpr double kFeasTol = 1e-9;
// Guard against kappa underflow when forming Gamma0.
inline constexpr double kNormGuard = 1e-300;

using PowerSchedule = std::vector<double>;

struct FilterCoefficients {
    double alpha;  // e^{-b*delta}, per-slot decay of the temperature filter
    double beta;   // (a/b)(1 - alpha), per-slot heating per power unit
    double gamma;  // T_e (1 - alpha), ambient drive term
};

// Filter coefficients of the slot-endpoint temperature recursion
//   T_i = alpha * T_{i-1} + beta * P_i + gamma.
// Throws ValidationError for b <= 0, delta <= 0 or a < 0.
FilterCoefficients derive_params(double a, double b, double delta, double T_e);

struct ThermalParams {
    // Physical constants.
    double a = 0;       // heating coefficient (temperature rate per power unit)
    double b = 0;       // cooling rate, > 0
    double delta = 0;   // slot duration, > 0
    double T_e = 0;     // environment temperature
    double T_c = 0;     // critical temperature (explicit/combined models)
    double sigma2 = 0;  // baseline noise power
    double c = 0;       // thermal-noise proportionality constant, >= 0

    // Derived filter coefficients.
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
    double kappa = 0;   // c * beta; the paper's normalization sets this to 1
    double Gamma0 = 0;  // (c*T_e + sigma2)/kappa when kappa > 0, else sigma2

    static ThermalParams create(double a, double b, double delta, double T_e,
                                double T_c, double sigma2, double c);

    // Convenience constructor from filter coefficients (delta fixed to 1).
    // Inverts alpha, beta back to (a, b); handy for tests and notebooks.
    static ThermalParams from_filter(double alpha, double beta, double T_e,
                                     double T_c, double sigma2, double c);

    // Noise level seen j slots ahead: Gamma_j = Gamma0 / alpha^j.
    double Gamma(int j) const;

    // (T_c - T_e)/beta, the filtered-power bound of the explicit constraint.
    double temperature_cap() const;
};

struct Scenario {
    ThermalParams params;
    // Per-slot harvested energy normalized by slot duration (power units).
    std::vector<double> energies;

    Scenario() = default;
    Scenario(ThermalParams p, std::vector<double> e);

    int horizon() const { return static_cast<int>(energies.size()); }
    double total_energy() const;
    // Sum of E_1..E_k (k is 1-based; k = 0 gives 0).
    double prefix_energy(int k) const;
};

// End-of-slot temperatures T_1..T_D via the recursion; agrees with the
// filter sum beta * sum alpha^{k-i} P_i + T_e to 1e-12 relative.
std::vector<double> temperature_trajectory(const ThermalParams& params,
                                           const PowerSchedule& powers);

// Direct filter-sum evaluation of the trajectory; independent route used to
// cross-check the recursion.
std::vector<double> temperature_trajectory_filter_sum(const ThermalParams& params,
                                                      const PowerSchedule& powers);

// beta * sum(E) + T_e: temperature reached by spending everything in slot D.
double max_temperature(const Scenario& scenario);

struct EnergyLimitedResult {
    std::vector<bool> per_slot;  // prefix_j(E) <= (T_c - T_e)/beta
    bool overall = false;        // flag at j = D: temperature cap removable
};
EnergyLimitedResult is_energy_limited(const Scenario& scenario);

// True iff (T_c - T_e)/beta < mean of every energy prefix (strict).
bool is_temperature_limited(const Scenario& scenario);

// SINR_i = P_i / (sum_{k<i} alpha^{i-1-k} P_k + Gamma0), the paper's form in
// kappa-normalized units. Requires kappa > 0.
std::vector<double> compute_sinr(const Scenario& scenario, const PowerSchedule& powers);

enum class ObjectiveKind {
    Explicit,  // sum 1/2 ln(1 + P_i/sigma2)
    General,   // sum 1/2 ln(1 + SINR_i)
    LowSinr,   // sum SINR_i
    HighSinr,  // sum 1/2 ln(SINR_i); -inf if any P_i = 0
};

// Throughput in nats for the given regime.
double objective(const Scenario& scenario, const PowerSchedule& powers, ObjectiveKind kind);

enum class ConstraintModel {
    Explicit,  // cumulative energy + filtered power
    Implicit,  // cumulative energy only
    Combined,  // both families
};

struct FeasibilityReport {
    std::vector<bool> energy_ok;
    std::vector<bool> temperature_ok;
    double max_violation = 0;  // largest relative violation, 0 when feasible

    bool feasible() const;
};

// Violations are reported, never raised.
FeasibilityReport check_feasible(const Scenario& scenario, const PowerSchedule& powers,
                                 ConstraintModel model);

}  // namespace heatsched
