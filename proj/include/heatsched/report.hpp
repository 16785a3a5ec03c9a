#pragma once

#include <string>
#include <vector>

#include "heatsched/thermo.hpp"

namespace heatsched {

// Lagrange multipliers in the paper's convention (unscaled log objective):
// lambda for the filtered-power constraints, mu for the cumulative-energy
// constraints. nu of the log-domain problem is identified with mu.
struct DualState {
    std::vector<double> lambda;
    std::vector<double> mu;
};

struct SolveReport {
    PowerSchedule powers;
    std::vector<double> temperatures;
    std::vector<double> sinrs;  // empty for the explicit-only model
    double objective = 0;       // nats, recomputed via heatsched::objective
    DualState duals;
    int iterations = 0;
    double kkt_residual = 0;
    std::string regime;       // tag of the solved regime
    bool local_only = false;  // true for signomial (locally optimal) solves
    std::vector<double> t0_history;  // heuristic bound per accepted round
};

}  // namespace heatsched
