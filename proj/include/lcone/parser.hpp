#pragma once

#include <string>

#include "lcone/circuit.hpp"
#include "lcone/pauli.hpp"

namespace lcone {

/// Parses the line-oriented circuit format. CZ / CNOT shorthands are
/// canonicalized into Pauli-rotation inter gates plus single-qubit intra
/// gates; the resulting global phase is recorded on the circuit.
ClusteredCircuit parse_circuit(const std::string& text);

/// Parses observable files: one `term <coeff> <letter>q<idx> ...` per line.
Observable parse_observable(const std::string& text);

std::string serialize_circuit(const ClusteredCircuit& circuit);
std::string serialize_observable(const Observable& obs);

/// Accepts "1.5", "-2i", "0.7+0.7i", "i", "(re,im)".
cplx parse_complex(const std::string& token);
std::string format_complex(cplx z);

}  // namespace lcone
