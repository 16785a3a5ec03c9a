#include "heatsched/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "heatsched/errors.hpp"

namespace heatsched {

FilterCoefficients derive_params(double a, double b, double delta, double T_e) {
    if (!(b > 0)) throw ValidationError("derive_params: cooling rate b must be > 0");
    if (!(delta > 0)) throw ValidationError("derive_params: slot duration delta must be > 0");
    if (a < 0) throw ValidationError("derive_params: heating coefficient a must be >= 0");
    const double alpha = std::exp(-b * delta);
    const double beta = (a / b) * (1.0 - alpha);
    const double gamma = T_e * (1.0 - alpha);
    return {alpha, beta, gamma};
}

ThermalParams ThermalParams::create(double a, double b, double delta, double T_e,
                                    double T_c, double sigma2, double c) {
    if (c < 0) throw ValidationError("ThermalParams: c must be >= 0");
    if (sigma2 < 0) throw ValidationError("ThermalParams: sigma2 must be >= 0");
    const FilterCoefficients f = derive_params(a, b, delta, T_e);
    ThermalParams p;
    p.a = a;
    p.b = b;
    p.delta = delta;
    p.T_e = T_e;
    p.T_c = T_c;
    p.sigma2 = sigma2;
    p.c = c;
    p.alpha = f.alpha;
    p.beta = f.beta;
    p.gamma = f.gamma;
    p.kappa = c * p.beta;
    p.Gamma0 = p.kappa > 0 ? (c * T_e + sigma2) / std::max(p.kappa, kNormGuard) : sigma2;
    return p;
}

ThermalParams ThermalParams::from_filter(double alpha, double beta, double T_e,
                                         double T_c, double sigma2, double c) {
    if (!(alpha > 0 && alpha < 1))
        throw ValidationError("from_filter: alpha must lie in (0, 1)");
    if (beta < 0) throw ValidationError("from_filter: beta must be >= 0");
    const double b = -std::log(alpha);  // delta = 1
    const double a = beta * b / (1.0 - alpha);
    return create(a, b, 1.0, T_e, T_c, sigma2, c);
}

double ThermalParams::Gamma(int j) const {
    return Gamma0 / std::pow(alpha, j);
}

double ThermalParams::temperature_cap() const {
    if (!(beta > 0)) throw ValidationError("temperature_cap: beta must be > 0");
    return (T_c - T_e) / beta;
}

Scenario::Scenario(ThermalParams p, std::vector<double> e)
    : params(p), energies(std::move(e)) {
    for (double v : energies)
        if (v < 0) throw ValidationError("Scenario: energies must be >= 0");
    if (energies.empty()) throw ValidationError("Scenario: horizon must be >= 1");
}

double Scenario::total_energy() const {
    return std::accumulate(energies.begin(), energies.end(), 0.0);
}

double Scenario::prefix_energy(int k) const {
    double s = 0;
    for (int i = 0; i < k && i < horizon(); ++i) s += energies[i];
    return s;
}

std::vector<double> temperature_trajectory(const ThermalParams& params,
                                           const PowerSchedule& powers) {
    std::vector<double> temps(powers.size());
    double T = params.T_e;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (powers[i] < 0)
            throw ValidationError("temperature_trajectory: powers must be >= 0");
        T = params.alpha * T + params.beta * powers[i] + params.gamma;
        temps[i] = T;
    }
    return temps;
}

std::vector<double> temperature_trajectory_filter_sum(const ThermalParams& params,
                                                      const PowerSchedule& powers) {
    const int D = static_cast<int>(powers.size());
    std::vector<double> temps(D);
    for (int k = 0; k < D; ++k) {
        double s = 0;
        for (int i = 0; i <= k; ++i) s += std::pow(params.alpha, k - i) * powers[i];
        temps[k] = params.beta * s + params.T_e;
    }
    return temps;
}

double max_temperature(const Scenario& scenario) {
    return scenario.params.beta * scenario.total_energy() + scenario.params.T_e;
}

EnergyLimitedResult is_energy_limited(const Scenario& scenario) {
    const ThermalParams& p = scenario.params;
    if (!(p.T_c > p.T_e))
        throw ValidationError("is_energy_limited: requires T_c > T_e");
    const double cap = p.temperature_cap();
    EnergyLimitedResult r;
    r.per_slot.resize(scenario.horizon());
    double prefix = 0;
    for (int j = 0; j < scenario.horizon(); ++j) {
        prefix += scenario.energies[j];
        r.per_slot[j] = prefix <= cap;
    }
    r.overall = r.per_slot.back();
    return r;
}

bool is_temperature_limited(const Scenario& scenario) {
    const ThermalParams& p = scenario.params;
    if (!(p.T_c > p.T_e))
        throw ValidationError("is_temperature_limited: requires T_c > T_e");
    const double cap = p.temperature_cap();
    double prefix = 0;
    for (int k = 1; k <= scenario.horizon(); ++k) {
        prefix += scenario.energies[k - 1];
        if (!(cap < prefix / k)) return false;
    }
    return true;
}

std::vector<double> compute_sinr(const Scenario& scenario, const PowerSchedule& powers) {
    const ThermalParams& p = scenario.params;
    if (!(p.kappa > 0))
        throw ValidationError("compute_sinr: implicit model needs kappa = c*beta > 0");
    std::vector<double> sinr(powers.size());
    double interference = 0;  // sum_{k<i} alpha^{i-1-k} P_k
    for (std::size_t i = 0; i < powers.size(); ++i) {
        sinr[i] = powers[i] / (interference + p.Gamma0);
        interference = p.alpha * interference + powers[i];
    }
    return sinr;
}

double objective(const Scenario& scenario, const PowerSchedule& powers, ObjectiveKind kind) {
    const ThermalParams& p = scenario.params;
    if (kind == ObjectiveKind::Explicit) {
        if (!(p.sigma2 > 0))
            throw ValidationError("objective: explicit regime needs sigma2 > 0");
        double total = 0;
        for (double P : powers) total += 0.5 * std::log1p(P / p.sigma2);
        return total;
    }
    const std::vector<double> sinr = compute_sinr(scenario, powers);
    double total = 0;
    switch (kind) {
        case ObjectiveKind::General:
            for (double s : sinr) total += 0.5 * std::log1p(s);
            break;
        case ObjectiveKind::LowSinr:
            for (double s : sinr) total += s;
            break;
        case ObjectiveKind::HighSinr:
            for (double s : sinr) {
                if (s <= 0) return -std::numeric_limits<double>::infinity();
                total += 0.5 * std::log(s);
            }
            break;
        default:
            break;
    }
    return total;
}

namespace {

// Relative violation of lhs <= rhs, scaled so tolerances are unit-free.
double relative_violation(double lhs, double rhs) {
    return (lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace

bool FeasibilityReport::feasible() const {
    auto all = [](const std::vector<bool>& v) {
        return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return all(energy_ok) && all(temperature_ok);
}

FeasibilityReport check_feasible(const Scenario& scenario, const PowerSchedule& powers,
                                 ConstraintModel model) {
    const ThermalParams& p = scenario.params;
    const int D = scenario.horizon();
    FeasibilityReport report;
    report.energy_ok.assign(D, true);
    report.temperature_ok.assign(D, true);
    double worst = 0;

    double used = 0, avail = 0;
    for (int k = 0; k < D; ++k) {
        used += k < static_cast<int>(powers.size()) ? powers[k] : 0.0;
        avail += scenario.energies[k];
        const double v = relative_violation(used, avail);
        worst = std::max(worst, v);
        report.energy_ok[k] = v <= kFeasTol;
    }

    if (model != ConstraintModel::Implicit) {
        const double cap = p.temperature_cap();
        double filtered = 0;  // sum alpha^{k-i} P_i
        for (int k = 0; k < D; ++k) {
            filtered = p.alpha * filtered +
                       (k < static_cast<int>(powers.size()) ? powers[k] : 0.0);
            const double v = relative_violation(filtered, cap);
            worst = std::max(worst, v);
            report.temperature_ok[k] = v <= kFeasTol;
        }
    }

    report.max_violation = std::max(0.0, worst);
    return report;
}

}  // namespace heatsched
