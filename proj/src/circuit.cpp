#include "qas/circuit.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace qas {

namespace {

const std::array<GateKind, 8>& registry() {
    static const std::array<GateKind, 8> kinds = {{
        {GateType::H, "H", 1, false, {}},
        {GateType::Rx, "Rx", 1, true, {{1.0, {Pauli::X}}}},
        {GateType::Ry, "Ry", 1, true, {{1.0, {Pauli::Y}}}},
        {GateType::Rz, "Rz", 1, true, {{1.0, {Pauli::Z}}}},
        {GateType::XX, "XX", 2, true, {{1.0, {Pauli::X, Pauli::X}}}},
        {GateType::YY, "YY", 2, true, {{1.0, {Pauli::Y, Pauli::Y}}}},
        {GateType::ZZ, "ZZ", 2, true, {{1.0, {Pauli::Z, Pauli::Z}}}},
        // pSWAP = exp(-i*theta*SWAP/2) with SWAP written as the full
        // sigma expansion I.I + X.X + Y.Y + Z.Z (twice the standard SWAP).
        {GateType::PSwap,
         "pSWAP",
         2,
         true,
         {{1.0, {Pauli::I, Pauli::I}},
          {1.0, {Pauli::X, Pauli::X}},
          {1.0, {Pauli::Y, Pauli::Y}},
          {1.0, {Pauli::Z, Pauli::Z}}}},
    }};
    return kinds;
}

}  // namespace

const GateKind& gate_kind(GateType type) {
    return registry()[static_cast<std::size_t>(type)];
}

const GateKind& gate_kind_by_name(std::string_view name) {
    for (const auto& k : registry()) {
        if (k.name == name) return k;
    }
    throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

int TaskPreset::gate_kind_index(GateType t) const {
    for (std::size_t i = 0; i < gate_set.size(); ++i) {
        if (gate_set[i] == t) return static_cast<int>(i);
    }
    throw std::invalid_argument("gate kind not in preset gate set: " + gate_kind(t).name);
}

TaskPreset task_preset(Task task) {
    TaskPreset p;
    switch (task) {
        case Task::VqeTfim:
            p = {Task::VqeTfim,
                 "vqe",
                 6,
                 {GateType::H, GateType::Rx, GateType::Ry, GateType::Rz, GateType::XX,
                  GateType::YY, GateType::ZZ},
                 36,
                 10,
                 true};
            break;
        case Task::VqcCe:
            p = {Task::VqcCe,
                 "vqc",
                 8,
                 {GateType::Rx, GateType::Ry, GateType::Rz, GateType::XX, GateType::YY,
                  GateType::ZZ, GateType::PSwap},
                 32,
                 8,
                 false};
            break;
        default:
            throw std::invalid_argument("unknown task");
    }
    const int start = p.start_with_hadamard_layer ? p.num_qubits : 0;
    if (start + p.generated_layers * (p.num_qubits / 2) != p.total_gates) {
        throw std::logic_error("preset gate count inconsistent with layer shape");
    }
    return p;
}

TaskPreset task_preset(std::string_view id) {
    if (id == "vqe") return task_preset(Task::VqeTfim);
    if (id == "vqc") return task_preset(Task::VqcCe);
    throw std::invalid_argument("unknown task id: " + std::string(id));
}

void validate_circuit(const Circuit& c) {
    if (c.num_qubits <= 0) throw std::invalid_argument("circuit must have at least 1 qubit");
    for (const auto& g : c.gates) {
        const auto& kind = gate_kind(g.type);
        if (static_cast<int>(g.qubits.size()) != kind.arity) {
            throw std::invalid_argument("gate " + kind.name + " expects " +
                                        std::to_string(kind.arity) + " qubits");
        }
        for (int q : g.qubits) {
            if (q < 0 || q >= c.num_qubits) {
                throw std::invalid_argument("gate qubit out of range: " + std::to_string(q));
            }
        }
        if (kind.arity == 2 && g.qubits[0] == g.qubits[1]) {
            throw std::invalid_argument("two-qubit gate with repeated qubit");
        }
    }
}

void validate_circuit(const Circuit& c, const TaskPreset& preset) {
    validate_circuit(c);
    if (c.num_qubits != preset.num_qubits) {
        throw std::invalid_argument("circuit qubit count does not match preset");
    }
    if (c.gate_count() != preset.total_gates) {
        throw std::invalid_argument("circuit gate count does not match preset");
    }
    for (const auto& g : c.gates) {
        preset.gate_kind_index(g.type);
    }
}

Circuit layerwise_generate(const TaskPreset& preset, Rng& rng) {
    const int n = preset.num_qubits;
    Circuit c;
    c.num_qubits = n;
    c.gates.reserve(static_cast<std::size_t>(preset.total_gates));

    if (preset.start_with_hadamard_layer) {
        for (int q = 0; q < n; ++q) {
            c.gates.push_back({GateType::H, {q}, 0.0});
        }
    }
    for (int layer = 0; layer < preset.generated_layers; ++layer) {
        const GateType t = preset.gate_set[rng.index(preset.gate_set.size())];
        const bool odd = rng.index(2) == 1;
        const int start = odd ? 1 : 0;
        if (gate_kind(t).arity == 1) {
            for (int k = 0; k < n / 2; ++k) {
                c.gates.push_back({t, {start + 2 * k}, 0.0});
            }
        } else {
            for (int k = 0; k < n / 2; ++k) {
                c.gates.push_back({t, {start + 2 * k, (start + 2 * k + 1) % n}, 0.0});
            }
        }
    }
    return c;
}

int circuit_depth(const Circuit& c) {
    std::vector<int> wire_depth(static_cast<std::size_t>(c.num_qubits), 0);
    int depth = 0;
    for (const auto& g : c.gates) {
        int d = 0;
        for (int q : g.qubits) d = std::max(d, wire_depth[static_cast<std::size_t>(q)]);
        ++d;
        for (int q : g.qubits) wire_depth[static_cast<std::size_t>(q)] = d;
        depth = std::max(depth, d);
    }
    return depth;
}

int parameter_count(const Circuit& c) {
    int p = 0;
    for (const auto& g : c.gates) {
        if (g.parameterized()) ++p;
    }
    return p;
}

std::vector<double> gather_angles(const Circuit& c) {
    std::vector<double> theta;
    theta.reserve(c.gates.size());
    for (const auto& g : c.gates) {
        if (g.parameterized()) theta.push_back(g.theta);
    }
    return theta;
}

void scatter_angles(Circuit& c, const std::vector<double>& theta) {
    std::size_t k = 0;
    for (auto& g : c.gates) {
        if (!g.parameterized()) continue;
        if (k >= theta.size()) throw std::invalid_argument("angle vector too short");
        g.theta = theta[k++];
    }
    if (k != theta.size()) throw std::invalid_argument("angle vector too long");
}

nlohmann::ordered_json circuit_to_json(const Circuit& c) {
    nlohmann::ordered_json j;
    j["n"] = c.num_qubits;
    auto gates = nlohmann::ordered_json::array();
    for (const auto& g : c.gates) {
        nlohmann::ordered_json jg;
        jg["k"] = gate_kind(g.type).name;
        jg["q"] = g.qubits;
        if (g.parameterized()) jg["theta"] = g.theta;
        gates.push_back(std::move(jg));
    }
    j["gates"] = std::move(gates);
    return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
    Circuit c;
    c.num_qubits = j.at("n").get<int>();
    for (const auto& jg : j.at("gates")) {
        Gate g;
        g.type = gate_kind_by_name(jg.at("k").get<std::string>()).type;
        g.qubits = jg.at("q").get<std::vector<int>>();
        if (gate_kind(g.type).parameterized) {
            g.theta = jg.value("theta", 0.0);
        } else if (jg.contains("theta")) {
            throw std::invalid_argument("theta given for non-parameterized gate");
        }
        c.gates.push_back(std::move(g));
    }
    validate_circuit(c);
    return c;
}

std::string circuit_to_jsonl(const Circuit& c) { return circuit_to_json(c).dump(); }

Circuit circuit_from_jsonl(const std::string& line) {
    return circuit_from_json(nlohmann::json::parse(line));
}

std::uint64_t circuit_hash(const Circuit& c) {
    const std::string s = circuit_to_jsonl(c);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace qas
