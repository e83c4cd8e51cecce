#include "retroknn/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "retroknn/error.hpp"

namespace retroknn {

void normalize_edges(ReactionRecord& r) {
    for (Edge& e : r.edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
}

void validate_record(const ReactionRecord& r, const Dataset& d, const std::string& context) {
    const int n = static_cast<int>(r.nodes.size());
    auto fail = [&](const std::string& what) {
        raise(ErrorCode::validation, context + ": " + what);
    };

    for (size_t i = 0; i < r.nodes.size(); ++i) {
        if (r.nodes[i] < 0 || r.nodes[i] >= d.node_vocab)
            fail("node " + std::to_string(i) + " feature " + std::to_string(r.nodes[i]) +
                 " outside vocab [0, " + std::to_string(d.node_vocab) + ")");
    }

    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < r.edges.size(); ++i) {
        const Edge& e = r.edges[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            fail("edge " + std::to_string(i) + " endpoint out of range (|nodes| = " +
                 std::to_string(n) + ")");
        if (e.u == e.v) fail("edge " + std::to_string(i) + " is a self-loop");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            fail("duplicate edge (" + std::to_string(key.first) + ", " +
                 std::to_string(key.second) + ")");
        if (e.feature < 0 || e.feature >= d.edge_vocab)
            fail("edge " + std::to_string(i) + " feature outside vocab");
    }

    if (r.atom_labels.size() != r.nodes.size())
        fail("atom_labels size " + std::to_string(r.atom_labels.size()) + " != |nodes| " +
             std::to_string(r.nodes.size()));
    if (r.bond_labels.size() != r.edges.size())
        fail("bond_labels size " + std::to_string(r.bond_labels.size()) + " != |edges| " +
             std::to_string(r.edges.size()));

    for (size_t i = 0; i < r.atom_labels.size(); ++i) {
        if (r.atom_labels[i] < 0 || r.atom_labels[i] > d.n_atom_templates)
            fail("atom label " + std::to_string(r.atom_labels[i]) + " at node " +
                 std::to_string(i) + " outside [0, " + std::to_string(d.n_atom_templates) + "]");
    }
    for (size_t i = 0; i < r.bond_labels.size(); ++i) {
        if (r.bond_labels[i] < 0 || r.bond_labels[i] > d.n_bond_templates)
            fail("bond label " + std::to_string(r.bond_labels[i]) + " at edge " +
                 std::to_string(i) + " outside [0, " + std::to_string(d.n_bond_templates) + "]");
    }

    if (r.reaction_class < 1 || r.reaction_class > 10)
        fail("reaction class " + std::to_string(r.reaction_class) + " outside [1, 10]");
}

void validate_dataset(const Dataset& d) {
    if (d.node_vocab <= 0 || d.edge_vocab <= 0)
        raise(ErrorCode::validation, "dataset vocab sizes must be positive");
    if (d.n_atom_templates < 0 || d.n_bond_templates < 0)
        raise(ErrorCode::validation, "dataset template counts must be non-negative");
    for (size_t i = 0; i < d.records.size(); ++i)
        validate_record(d.records[i], d, "record " + std::to_string(i));
}

std::vector<std::vector<std::pair<int, int>>> build_adjacency(const ReactionRecord& r) {
    std::vector<std::vector<std::pair<int, int>>> adj(r.nodes.size());
    for (size_t e = 0; e < r.edges.size(); ++e) {
        adj[r.edges[e].u].emplace_back(r.edges[e].v, static_cast<int>(e));
        adj[r.edges[e].v].emplace_back(r.edges[e].u, static_cast<int>(e));
    }
    return adj;
}

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::io: return "io";
        case ErrorCode::parse: return "parse";
        case ErrorCode::validation: return "validation";
        case ErrorCode::config: return "config";
        case ErrorCode::training: return "training";
        case ErrorCode::generation: return "generation";
        case ErrorCode::format: return "format";
        case ErrorCode::query: return "query";
        case ErrorCode::retrieval: return "retrieval";
    }
    return "unknown";
}

}  // namespace retroknn
