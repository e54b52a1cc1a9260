#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcone/shots.hpp"

namespace lcone {

/// One sampled sub-task of the causal estimator.
struct ComponentEstimate {
    int term = 0;
    int component = 0;
    long shots = 0;
    double estimate = 0.0;  // mu~_{alpha,i}
    double exact = 0.0;     // oracle value the sampler drew from
};

struct EstimateReport {
    std::string method;  // "causal" | "algebraic" | "oracle"
    double estimate = 0.0;
    double imag_diagnostic = 0.0;  // algebraic only
    std::vector<double> term_estimates;
    long total_shots = 0;
    std::vector<ComponentEstimate> components;  // causal shot ledger
    double variance_bound = 0.0;
    std::optional<double> oracle;
    int max_device_qubits = 0;
    int circuit_depth = 0;
    int hadamard_depth = 0;  // 2T+1, recorded for the algebraic path
    double wall_seconds = 0.0;
    ShotPlan plan;
};

}  // namespace lcone
