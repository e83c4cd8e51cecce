#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace retroknn {

struct Edge {
    int u = 0;  // endpoints kept normalized u < v
    int v = 0;
    int feature = 0;
};

// One labeled graph: categorical node/edge features plus a template id per
// site (0 = no template at that site).
struct ReactionRecord {
    std::vector<int> nodes;       // node feature ids
    std::vector<Edge> edges;
    std::vector<int> atom_labels;  // aligned with nodes
    std::vector<int> bond_labels;  // aligned with edges
    int reaction_class = 1;       // in [1, 10]

    size_t num_nodes() const { return nodes.size(); }
    size_t num_edges() const { return edges.size(); }
};

struct Dataset {
    std::vector<ReactionRecord> records;
    int n_atom_templates = 0;
    int n_bond_templates = 0;
    int node_vocab = 0;
    int edge_vocab = 0;
};

// Swaps edge endpoints into u < v order. Edge list order is preserved.
void normalize_edges(ReactionRecord& r);

// Checks the record invariants (endpoint bounds, no self-loops or duplicate
// edges, label alignment and ranges, feature vocab bounds). Throws
// ErrorCode::validation with `context` naming the offending record.
void validate_record(const ReactionRecord& r, const Dataset& d, const std::string& context);

void validate_dataset(const Dataset& d);

// Per-node incidence lists ordered by edge index; the fixed traversal order
// every reduction in the library relies on.
std::vector<std::vector<std::pair<int, int>>> build_adjacency(const ReactionRecord& r);

}  // namespace retroknn
