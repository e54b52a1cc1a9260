#pragma once

#include <cstdint>

#include "lcone/oracle.hpp"
#include "lcone/report.hpp"

namespace lcone {

struct CausalConfig {
    OracleLimits limits;
    double delta = 1.0 / 3.0;
    bool compute_oracle = true;
};

/// Per-term light-cone factorization estimator: each connected component is
/// sampled independently and the term estimate is the product of component
/// means.
EstimateReport estimate_causal_decoupling(const ClusteredCircuit& circuit,
                                          const Observable& obs, double epsilon,
                                          uint64_t seed, const CausalConfig& cfg = {});

/// Sum-of-variances upper bound on Var(prod mu~_i) for independent +-1
/// sample means: sum (1 - mu_i^2) / K_i.
double variance_bound_product(const std::vector<double>& mus, const std::vector<long>& shots);

/// Exact product variance: prod(mu_i^2 + (1-mu_i^2)/K_i) - prod mu_i^2.
double exact_product_variance(const std::vector<double>& mus, const std::vector<long>& shots);

/// Qubit ceiling of the causal path on lattice layouts: s * d * (2R+1)^D.
long causal_qubit_ceiling(const ClusterLayout& layout, int s, int range);

}  // namespace lcone
