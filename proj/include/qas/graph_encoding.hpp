#pragma once

#include <iosfwd>
#include <vector>

#include "qas/circuit.hpp"

namespace qas {

// Graph form of a circuit: node features X (type one-hot ++ qubit multi-hot)
// and the binary adjacency of the gate DAG with START/END terminals.
// Node 0 is START, node N-1 is END; gate nodes keep circuit order.
struct CircuitGraph {
    int num_nodes = 0;    // N = gate count + 2
    int feature_dim = 0;  // F = |gate_set| + 2 + n
    int type_dim = 0;     // |gate_set| + 2 (START, END occupy the last two slots)
    int num_qubits = 0;
    std::vector<double> x;        // N x F, row-major
    std::vector<double> adj;      // N x N, row-major, entries in {0,1}
    std::vector<int> type_index;  // per node: argmax of the type block (k_i)

    double x_at(int i, int j) const { return x[static_cast<std::size_t>(i) * feature_dim + j]; }
    double a_at(int i, int j) const { return adj[static_cast<std::size_t>(i) * num_nodes + j]; }
};

// Wire-traced DAG encoding: edge (v_i -> v_j) iff gate j immediately follows
// gate i on some qubit wire; START feeds each qubit's first gate, the last
// gate on each qubit feeds END. Parallel wires between the same node pair
// collapse to a single binary entry.
CircuitGraph encode(const Circuit& c, const TaskPreset& preset);

// A + A^T elementwise (directed graph made undirected for the encoder).
std::vector<double> symmetrize(const std::vector<double>& a, int n);
std::vector<double> symmetrize(const CircuitGraph& g);

// Debug dump of X and A with node/kind header rows.
void write_graph_csv(const CircuitGraph& g, const TaskPreset& preset, std::ostream& os);

}  // namespace qas
