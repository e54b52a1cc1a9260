#include "lcone/causal.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "lcone/errors.hpp"
#include "lcone/sampling.hpp"

namespace lcone {

double variance_bound_product(const std::vector<double>& mus, const std::vector<long>& shots) {
    if (mus.empty() || mus.size() != shots.size())
        throw std::domain_error("mu/shot lists must be non-empty and aligned");
    double bound = 0.0;
    for (size_t i = 0; i < mus.size(); ++i) {
        if (std::abs(mus[i]) > 1.0 + 1e-12) throw std::domain_error("|mu| must be <= 1");
        if (shots[i] < 1) throw std::domain_error("shots must be >= 1");
        bound += (1.0 - mus[i] * mus[i]) / shots[i];
    }
    return bound;
}

double exact_product_variance(const std::vector<double>& mus, const std::vector<long>& shots) {
    if (mus.empty() || mus.size() != shots.size())
        throw std::domain_error("mu/shot lists must be non-empty and aligned");
    double second = 1.0, first_sq = 1.0;
    for (size_t i = 0; i < mus.size(); ++i) {
        double a = mus[i] * mus[i];
        second *= a + (1.0 - a) / shots[i];
        first_sq *= a;
    }
    return second - first_sq;
}

long causal_qubit_ceiling(const ClusterLayout& layout, int s, int range) {
    if (layout.kind() == LayoutKind::AllToAll) return layout.num_qubits();
    long ball = 1;
    for (int k = 0; k < layout.dim(); ++k) ball *= 2L * range + 1;
    return static_cast<long>(s) * layout.cluster_size() * ball;
}

EstimateReport estimate_causal_decoupling(const ClusteredCircuit& circuit,
                                          const Observable& obs, double epsilon,
                                          uint64_t seed, const CausalConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");

    const ClusterLayout& lay = circuit.layout();
    size_t m = obs.terms().size();

    std::vector<LightCone> cones;
    cones.reserve(m);
    int max_range = 0;
    for (const auto& term : obs.terms()) {
        cones.push_back(pauli_lightcone(circuit, term.pauli));
        max_range = std::max(max_range, cones.back().range);
    }
    ShotPlan plan = plan_causal(obs, cones, epsilon, cfg.delta);

    int s = obs.locality(lay);
    long qubit_ceiling = causal_qubit_ceiling(lay, s, max_range);

    struct Task {
        int term;
        int component;
        long shots;
    };
    std::vector<Task> tasks;
    for (size_t a = 0; a < m; ++a) {
        if (cones[a].identity) continue;
        for (size_t i = 0; i < cones[a].components.size(); ++i) {
            const auto& comp = cones[a].components[i];
            long qubits = static_cast<long>(comp.clusters.size()) * lay.cluster_size();
            if (qubits > qubit_ceiling)
                throw std::logic_error("component qubit count exceeds the geometric ceiling");
            if (qubits > cfg.limits.statevector_qubits)
                throw CapacityError(
                    "term " + std::to_string(a) + " component " + std::to_string(i) + " needs " +
                    std::to_string(qubits) + " qubits, above the simulated-device budget of " +
                    std::to_string(cfg.limits.statevector_qubits));
            tasks.push_back({static_cast<int>(a), static_cast<int>(i), plan.shots_per_task[a]});
        }
    }

    std::vector<ComponentEstimate> results(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t t = 0; t < static_cast<int64_t>(tasks.size()); ++t) {
        const Task& task = tasks[t];
        const ConeComponent& comp = cones[task.term].components[task.component];
        double mu = exact_expectation_on(comp.circuit, comp.pauli, comp.clusters, cfg.limits);
        ShotStream stream(seed, ShotStream::stream_id(1, task.term, task.component, 0));
        SampleStats st = sample_pm(mu, task.shots, stream);
        results[t] = {task.term, task.component, task.shots, st.mean, mu};
    }

    EstimateReport rep;
    rep.method = "causal";
    rep.plan = plan;
    rep.circuit_depth = circuit.depth();
    rep.term_estimates.assign(m, 1.0);
    rep.max_device_qubits = 0;

    // fixed (term, component) reduction order
    for (const auto& r : results) rep.term_estimates[r.term] *= r.estimate;
    for (size_t a = 0; a < m; ++a) {
        rep.estimate += obs.terms()[a].coeff * rep.term_estimates[a];
        if (!cones[a].identity) {
            std::vector<double> mus;
            std::vector<long> ks;
            for (const auto& r : results)
                if (r.term == static_cast<int>(a)) {
                    mus.push_back(r.exact);
                    ks.push_back(r.shots);
                }
            double c = obs.terms()[a].coeff;
            rep.variance_bound += c * c * variance_bound_product(mus, ks);
            long q = 0;
            for (const auto& comp : cones[a].components)
                q = std::max(q, static_cast<long>(comp.clusters.size()) * lay.cluster_size());
            rep.max_device_qubits = std::max<int>(rep.max_device_qubits, static_cast<int>(q));
        }
    }
    rep.components = std::move(results);
    for (const auto& r : rep.components) rep.total_shots += r.shots;

    if (cfg.compute_oracle) {
        try {
            rep.oracle = exact_observable_expectation(circuit, obs, cfg.limits);
        } catch (const CapacityError&) {}
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace lcone
