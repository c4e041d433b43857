#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qas/rng.hpp"

namespace qas {

enum class GateType { H, Rx, Ry, Rz, XX, YY, ZZ, PSwap };

enum class Pauli { I, X, Y, Z };

// One term of a gate generator written as a Pauli string over the gate's
// local qubit slots. A parameterized gate acts as U(theta) = exp(-i*theta*G/2)
// with G = sum of coeff * kron(ops...).
struct GeneratorTerm {
    double coeff;
    std::vector<Pauli> ops;  // one entry per local qubit slot
};

struct GateKind {
    GateType type;
    std::string name;  // serialized identifier ("H", "Rx", ..., "pSWAP")
    int arity;         // 1 or 2
    bool parameterized;
    std::vector<GeneratorTerm> generator;  // empty for H
};

// Static registry lookup.
const GateKind& gate_kind(GateType type);
const GateKind& gate_kind_by_name(std::string_view name);  // throws on unknown name

struct Gate {
    GateType type;
    std::vector<int> qubits;  // size == arity, distinct, in [0, n)
    double theta = 0.0;       // radians; unused for H

    bool parameterized() const { return gate_kind(type).parameterized; }
};

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    int gate_count() const { return static_cast<int>(gates.size()); }
};

enum class Task { VqeTfim, VqcCe };

// Frozen description of a search space: qubit count, gate alphabet and the
// layerwise generation shape.
struct TaskPreset {
    Task task;
    std::string id;  // "vqe" | "vqc"
    int num_qubits;
    std::vector<GateType> gate_set;
    int total_gates;
    int generated_layers;
    bool start_with_hadamard_layer;

    int type_dim() const { return static_cast<int>(gate_set.size()) + 2; }  // kinds + START + END
    int feature_dim() const { return type_dim() + num_qubits; }
    int node_count() const { return total_gates + 2; }
    int gate_kind_index(GateType t) const;  // position in gate_set; throws if absent
};

TaskPreset task_preset(Task task);
TaskPreset task_preset(std::string_view id);  // "vqe" | "vqc"; throws on unknown id

// Checks per-gate arity, qubit range and distinctness; throws std::invalid_argument.
void validate_circuit(const Circuit& c);
// Additionally checks qubit count, gate membership and total gate count.
void validate_circuit(const Circuit& c, const TaskPreset& preset);

// Layerwise sampling of the preset's search space: an optional initial
// Hadamard layer, then `generated_layers` layers of n/2 gates of a single
// randomly chosen kind on all odd or all even qubits. Two-qubit layers use
// the fixed pairings (1,2),(3,4),...,(n-1,0) or (0,1),(2,3),...,(n-2,n-1).
// Pure function of (preset, rng state); angles are left at 0.
Circuit layerwise_generate(const TaskPreset& preset, Rng& rng);

// Length of the longest path in the qubit-wire dependency DAG; gates on
// disjoint qubits may share a depth slot.
int circuit_depth(const Circuit& c);

// Number of parameterized gates, i.e. the length of the circuit's angle vector.
int parameter_count(const Circuit& c);

// Collects/assigns angles of the parameterized gates in circuit order.
std::vector<double> gather_angles(const Circuit& c);
void scatter_angles(Circuit& c, const std::vector<double>& theta);

// JSONL record: {"n":6,"gates":[{"k":"H","q":[0]},{"k":"XX","q":[0,1],"theta":0.0},...]}
// Field order is fixed; "theta" is omitted for non-parameterized gates.
nlohmann::ordered_json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);
std::string circuit_to_jsonl(const Circuit& c);
Circuit circuit_from_jsonl(const std::string& line);

// FNV-1a over the canonical serialization; used for label caching and pool dedup.
std::uint64_t circuit_hash(const Circuit& c);

}  // namespace qas
