#pragma once

#include <cstdint>
#include <set>

#include "lcone/circuit.hpp"
#include "lcone/oracle.hpp"

namespace lcone {

/// Counter-based random stream keyed by (seed, stream id). Identical keys
/// replay identical sequences regardless of thread scheduling; distinct
/// stream ids give independent streams.
class ShotStream {
public:
    ShotStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    static uint64_t stream_id(uint64_t a, uint64_t b = 0, uint64_t c = 0, uint64_t d = 0);

    uint64_t next_u64();
    /// Uniform in [0, 1).
    double next_unit();
    /// +-1 draw with P(+1) = (1 + mu)/2.
    int next_pm(double mu) { return next_unit() < (1.0 + mu) / 2.0 ? 1 : -1; }

    uint64_t counter() const { return counter_; }

private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t counter_ = 0;
};

struct SampleStats {
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance of the outcomes
    long shots = 0;
};

/// Empirical mean of `shots` +-1 draws with expectation `mu_exact`.
SampleStats sample_pm(double mu_exact, long shots, ShotStream& stream);

/// Simulated Pauli measurement: exact expectation from the oracle, then
/// +-1 sampling.
SampleStats sample_pauli_measurement(const ClusteredCircuit& circuit, const PauliString& pauli,
                                     const std::set<int>& clusters, long shots,
                                     ShotStream stream, const OracleLimits& limits = {});

enum class HadamardMode { Shortcut, Circuit };

/// Hadamard-test estimate of <psi_j|P|psi_k> on the cluster covered by
/// `map`, split into shots_real / shots_imag branches. Circuit mode runs the
/// full ancilla construction on map.size()+1 qubits; shortcut mode samples
/// from the oracle amplitude. Both have the same outcome distribution.
cplx hadamard_test(const std::vector<IntraGate>& prep_j, const std::vector<IntraGate>& prep_k,
                   const PauliString& pauli, const QubitMap& map, long shots_real,
                   long shots_imag, ShotStream stream, HadamardMode mode = HadamardMode::Shortcut);

/// The two branch means the test samples from (exposed for the
/// path-equivalence check).
cplx hadamard_branch_means(const std::vector<IntraGate>& prep_j,
                           const std::vector<IntraGate>& prep_k, const PauliString& pauli,
                           const QubitMap& map, HadamardMode mode);

}  // namespace lcone
