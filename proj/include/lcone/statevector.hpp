#pragma once

#include <cstdint>
#include <vector>

#include "lcone/matrix.hpp"

namespace lcone {

/// Dense statevector over a small set of simulated qubits. Qubit q of the
/// simulation addresses bit q of the amplitude index. Gate matrices follow
/// the kron convention: targets[0] is the most significant gate bit.
class StateVector {
public:
    explicit StateVector(int num_qubits);

    int num_qubits() const { return nq_; }
    size_t size() const { return amp_.size(); }
    const std::vector<cplx>& amplitudes() const { return amp_; }
    std::vector<cplx>& amplitudes() { return amp_; }

    /// Applies a k-qubit unitary; picks the OpenMP kernel for large states.
    /// control >= 0 restricts the update to amplitudes with that bit set.
    void apply(const CMatrix& u, const std::vector<int>& targets, int control = -1);

    /// Serial reference kernel, kept for kernel-equivalence tests.
    void apply_serial(const CMatrix& u, const std::vector<int>& targets, int control = -1);
    /// OpenMP kernel.
    void apply_parallel(const CMatrix& u, const std::vector<int>& targets, int control = -1);

    double norm() const;
    cplx inner(const StateVector& other) const;

    /// <Z> on one qubit: sum of |amp|^2 signed by the bit.
    double z_expectation(int qubit) const;

private:
    int nq_;
    std::vector<cplx> amp_;
};

}  // namespace lcone
