#include "lcone/resources.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "lcone/errors.hpp"
#include "lcone/lightcone.hpp"

namespace lcone {

ConeExtremes measure_cone_extremes(const ClusteredCircuit& circuit, const Observable& obs) {
    ConeExtremes ex;
    for (const auto& term : obs.terms()) {
        LightCone cone = pauli_lightcone(circuit, term.pauli);
        if (cone.identity) continue;
        ex.size_max = std::max(ex.size_max, static_cast<int>(cone.cone_clusters.size()));
        ex.vol_max = std::max(ex.vol_max, cone.volume);
        ex.range = std::max(ex.range, cone.range);
    }
    return ex;
}

long gate_cutting_cut_count(const ClusterLayout& layout, int depth) {
    if (layout.kind() != LayoutKind::Lattice)
        throw ConfigError("gate-cutting cut counts are defined for lattice layouts only");
    if (depth < 0) throw ConfigError("depth must be non-negative");
    const auto& ext = layout.extents();
    long edges = 0;
    for (size_t k = 0; k < ext.size(); ++k) {
        long e = ext[k] - 1;
        for (size_t j = 0; j < ext.size(); ++j)
            if (j != k) e *= ext[j];
        edges += e;
    }
    return edges * depth;
}

std::vector<ResourceRow> comparison_table(const ClusteredCircuit& circuit,
                                          const Observable& obs, double epsilon,
                                          std::optional<double> beta, double bits_per_cut) {
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");
    const ClusterLayout& lay = circuit.layout();
    if (lay.kind() == LayoutKind::AllToAll && !beta)
        throw ConfigError("all-to-all comparisons need a branching factor beta");

    int T = circuit.depth();
    int N = lay.num_clusters();
    int d = lay.cluster_size();
    int s = obs.locality(lay);
    double lam = obs.one_norm();
    double eps2 = epsilon * epsilon;

    ConeExtremes ex = measure_cone_extremes(circuit, obs);

    // max component width actually needed by the causal path
    long causal_qubits = 0;
    for (const auto& term : obs.terms()) {
        LightCone cone = pauli_lightcone(circuit, term.pauli);
        for (const auto& comp : cone.components)
            causal_qubits = std::max(causal_qubits,
                                     static_cast<long>(comp.clusters.size()) * d);
    }

    ResourceRow base;
    base.n = lay.num_qubits();
    base.num_clusters = N;
    base.d = d;
    base.dim = lay.dim();
    base.depth = T;
    base.range = ex.range;
    base.s = s;
    base.lambda_c = lam;
    base.epsilon = epsilon;
    base.beta = beta;
    base.size_max = ex.size_max;
    base.vol_max = ex.vol_max;
    if (lay.kind() == LayoutKind::AllToAll)
        base.predicted_size = std::min<double>(N, s * std::pow(*beta, T));

    std::vector<ResourceRow> rows;

    ResourceRow gc = base;
    gc.method = "gate_cutting";
    gc.qubit_requirement = d;
    gc.circuit_depth = T;
    long cuts = lay.kind() == LayoutKind::Lattice
                    ? gate_cutting_cut_count(lay, T)
                    : static_cast<long>(N) * (N - 1) / 2 * T;
    gc.sample_exponent = bits_per_cut * static_cast<double>(cuts);
    gc.sample_prefactor = static_cast<double>(N) * N * lam * lam / eps2;
    rows.push_back(std::move(gc));

    ResourceRow ca = base;
    ca.method = "causal_decoupling";
    ca.qubit_requirement = causal_qubits;
    ca.circuit_depth = T;
    ca.sample_exponent = 0.0;
    ca.sample_prefactor = static_cast<double>(s) * s * lam * lam / eps2;
    rows.push_back(std::move(ca));

    ResourceRow al = base;
    al.method = "algebraic_decomposition";
    al.qubit_requirement = d + 1;
    al.circuit_depth = 2 * T + 1;
    al.sample_exponent = 4.0 * ex.vol_max;  // log2(N_max^4)
    al.sample_prefactor =
        lam * lam * static_cast<double>(ex.size_max) * ex.size_max / eps2;
    rows.push_back(std::move(al));

    return rows;
}

std::string resource_rows_csv(const std::vector<ResourceRow>& rows) {
    std::ostringstream out;
    out << "method,qubit_requirement,circuit_depth,sample_exponent_log2,sample_prefactor,"
           "n,num_clusters,d,dim,depth,range,s,lambda_c,epsilon,beta,predicted_size,"
           "size_max,vol_max\n";
    auto opt = [](const std::optional<double>& v) {
        if (!v) return std::string{};
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", *v);
        return std::string(buf);
    };
    for (const auto& r : rows) {
        char num[32];
        out << r.method << ',' << r.qubit_requirement << ',' << r.circuit_depth << ',';
        std::snprintf(num, sizeof num, "%.17g", r.sample_exponent);
        out << num << ',';
        std::snprintf(num, sizeof num, "%.17g", r.sample_prefactor);
        out << num << ',' << r.n << ',' << r.num_clusters << ',' << r.d << ',' << r.dim << ','
            << r.depth << ',' << r.range << ',' << r.s << ',';
        std::snprintf(num, sizeof num, "%.17g", r.lambda_c);
        out << num << ',';
        std::snprintf(num, sizeof num, "%.17g", r.epsilon);
        out << num << ',' << opt(r.beta) << ',' << opt(r.predicted_size) << ',' << r.size_max
            << ',' << r.vol_max << '\n';
    }
    return out.str();
}

std::string resource_rows_json(const std::vector<ResourceRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["method"] = r.method;
        j["qubit_requirement"] = r.qubit_requirement;
        j["circuit_depth"] = r.circuit_depth;
        j["sample_exponent_log2"] = r.sample_exponent;
        j["sample_prefactor"] = r.sample_prefactor;
        j["params"] = {{"n", r.n},       {"num_clusters", r.num_clusters},
                       {"d", r.d},       {"dim", r.dim},
                       {"depth", r.depth}, {"range", r.range},
                       {"s", r.s},       {"lambda_c", r.lambda_c},
                       {"epsilon", r.epsilon}};
        if (r.beta) j["params"]["beta"] = *r.beta;
        if (r.predicted_size) j["predicted_size"] = *r.predicted_size;
        j["size_max"] = r.size_max;
        j["vol_max"] = r.vol_max;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

BranchingFit fit_branching_factor(const std::vector<int>& sizes, int s, int num_clusters) {
    if (sizes.empty()) throw ConfigError("need at least one measured cone size");
    if (s < 1) throw ConfigError("observable locality must be positive");
    // Geometric-mean fit of log(size/s)/T over depths where the cone has not
    // yet saturated the whole layout.
    double acc = 0.0;
    int used = 0;
    for (size_t t = 0; t < sizes.size(); ++t) {
        if (sizes[t] >= num_clusters) continue;
        double ratio = static_cast<double>(std::max(sizes[t], 1)) / s;
        acc += std::log(ratio) / static_cast<double>(t + 1);
        ++used;
    }
    BranchingFit fit;
    fit.beta = used > 0 ? std::exp(acc / used) : 1.0;
    for (size_t t = 0; t < sizes.size(); ++t) {
        double model = std::min<double>(num_clusters, s * std::pow(fit.beta, t + 1));
        fit.residuals.push_back(sizes[t] - model);
    }
    return fit;
}

}  // namespace lcone
