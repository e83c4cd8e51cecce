#pragma once

#include <filesystem>

#include "retroknn/graph.hpp"

namespace retroknn {

// JSONL dataset file. First line is a header object with the vocabulary and
// template-set sizes:
//   {"n_atom_templates": ..., "n_bond_templates": ..., "node_vocab": ..., "edge_vocab": ...}
// Every following line is one record:
//   {"nodes": [..], "edges": [[u, v, feat], ..], "atom_labels": [..], "bond_labels": [..], "class": c}
Dataset parse_dataset(const std::filesystem::path& path);

void save_dataset(const Dataset& d, const std::filesystem::path& path);

}  // namespace retroknn
