#pragma once

#include <cstdint>
#include <map>

#include "lcone/lightcone.hpp"
#include "lcone/report.hpp"
#include "lcone/sampling.hpp"

namespace lcone {

/// Exact expansion of a light-cone circuit into 2^Vol products of
/// intra-cluster gate sequences. Every inter gate exp(-i theta/2 P x Q)
/// splits into cos(theta/2) * I + (-i sin(theta/2)) * (P x Q); a branch is a
/// bitmask over the retained inter gates (bit set = Pauli factor chosen).
class LocalExpansion {
public:
    explicit LocalExpansion(const LightCone& cone);

    int volume() const { return volume_; }
    uint64_t num_branches() const { return uint64_t{1} << volume_; }
    double weight_norm() const { return weight_norm_; }  // sum_j |w_j|
    const std::set<int>& clusters() const { return clusters_; }

    cplx branch_weight(uint64_t mask) const;
    /// Gate sequence of one cluster under a branch, in circuit order.
    std::vector<IntraGate> branch_sequence(uint64_t mask, int cluster) const;

private:
    struct Slot {
        int gate_index;  // -1 for a fixed intra gate
        IntraGate gate;
    };
    int volume_ = 0;
    double weight_norm_ = 1.0;
    std::set<int> clusters_;
    std::vector<cplx> weight_id_;     // per inter gate, identity branch
    std::vector<cplx> weight_pauli_;  // per inter gate, Pauli branch
    std::map<int, std::vector<Slot>> timeline_;
};

LocalExpansion decompose_lightcone_circuit(const LightCone& cone);

struct AlgebraicConfig {
    OracleLimits limits;
    double delta = 1.0 / 3.0;
    double variance_constant = 2.0;  // C in the shot-allocation bound
    long task_budget = 10'000'000;
    HadamardMode hadamard_mode = HadamardMode::Shortcut;
    bool compute_oracle = true;
};

/// Gate-level quasi-probability estimator: expands each term's light-cone
/// circuit, estimates every cross term as a product of single-cluster
/// Hadamard-test amplitudes, and aggregates classically.
EstimateReport estimate_algebraic(const ClusteredCircuit& circuit, const Observable& obs,
                                  double epsilon, uint64_t seed,
                                  const AlgebraicConfig& cfg = {});

/// Second moment of one Hadamard-test estimate: |mu|^2 + 2(2 - |mu|^2)/K.
double hadamard_second_moment(cplx mu, long shots);

/// Product-variance bound (prod E|X_l|^2) * sum Var(X_l)/E|X_l|^2 with the
/// per-factor moments above.
double crossterm_variance_bound(const std::vector<cplx>& amplitudes,
                                const std::vector<long>& shots);

/// Exact product variance prod E|X_l|^2 - prod |mu_l|^2.
double crossterm_exact_variance(const std::vector<cplx>& amplitudes,
                                const std::vector<long>& shots);

}  // namespace lcone
