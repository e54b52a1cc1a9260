#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcone/circuit.hpp"
#include "lcone/pauli.hpp"

namespace lcone {

struct ConeExtremes {
    int size_max = 0;  // max clusters in any term's light cone
    int vol_max = 0;   // max retained inter gates
    int range = 0;     // max cone range over terms
};

/// Exact maxima over the observable's terms, from the light-cone sweep.
ConeExtremes measure_cone_extremes(const ClusteredCircuit& circuit, const Observable& obs);

/// Inter-cluster lattice edges times T: the cut count of per-cluster
/// fragmentation where every boundary gate instance is cut every layer.
long gate_cutting_cut_count(const ClusterLayout& layout, int depth);

struct ResourceRow {
    std::string method;  // gate_cutting | causal_decoupling | algebraic_decomposition
    long qubit_requirement = 0;
    int circuit_depth = 0;
    double sample_exponent = 0.0;   // log2 of the exponential factor
    double sample_prefactor = 0.0;  // polynomial factor incl. lambda_c^2/eps^2
    // echoed parameters
    int n = 0, num_clusters = 0, d = 0, dim = 0, depth = 0, range = 0, s = 0;
    double lambda_c = 0.0, epsilon = 0.0;
    std::optional<double> beta;
    std::optional<double> predicted_size;  // all-to-all: min{N, s beta^T}
    int size_max = 0, vol_max = 0;
};

/// Three-way comparison computed from measured cone properties.
/// `bits_per_cut` is the modeled sampling-overhead exponent per cut gate.
std::vector<ResourceRow> comparison_table(const ClusteredCircuit& circuit,
                                          const Observable& obs, double epsilon,
                                          std::optional<double> beta = std::nullopt,
                                          double bits_per_cut = 2.0);

std::string resource_rows_csv(const std::vector<ResourceRow>& rows);
std::string resource_rows_json(const std::vector<ResourceRow>& rows);

struct BranchingFit {
    double beta = 1.0;
    std::vector<double> residuals;  // measured - min{N, s beta^T}, per depth
};

/// Fits the support-growth model min{N, s beta^T} to measured cone sizes
/// indexed by depth T = 1..sizes.size().
BranchingFit fit_branching_factor(const std::vector<int>& sizes, int s, int num_clusters);

}  // namespace lcone
