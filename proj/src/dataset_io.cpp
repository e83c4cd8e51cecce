#include "retroknn/dataset_io.hpp"

#include <fstream>
#include <string>

#include <json.hpp>

#include "retroknn/error.hpp"

namespace retroknn {

using nlohmann::json;

namespace {

int require_int(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer())
        raise(ErrorCode::parse, where + ": missing or non-integer key '" + key + "'");
    return it->get<int>();
}

std::vector<int> require_int_array(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_array())
        raise(ErrorCode::parse, where + ": missing or non-array key '" + key + "'");
    std::vector<int> out;
    out.reserve(it->size());
    for (const auto& v : *it) {
        if (!v.is_number_integer())
            raise(ErrorCode::parse, where + ": non-integer element in '" + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

Dataset parse_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::io, "cannot open dataset: " + path.string());

    Dataset d;
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    size_t record_idx = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string where = path.string() + ":" + std::to_string(line_no);

        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            raise(ErrorCode::parse, where + ": malformed JSON: " + e.what());
        }
        if (!obj.is_object()) raise(ErrorCode::parse, where + ": line is not a JSON object");

        if (!have_header) {
            d.n_atom_templates = require_int(obj, "n_atom_templates", where);
            d.n_bond_templates = require_int(obj, "n_bond_templates", where);
            d.node_vocab = require_int(obj, "node_vocab", where);
            d.edge_vocab = require_int(obj, "edge_vocab", where);
            have_header = true;
            continue;
        }

        ReactionRecord r;
        r.nodes = require_int_array(obj, "nodes", where);
        auto eit = obj.find("edges");
        if (eit == obj.end() || !eit->is_array())
            raise(ErrorCode::parse, where + ": missing or non-array key 'edges'");
        for (const auto& t : *eit) {
            if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
                !t[1].is_number_integer() || !t[2].is_number_integer())
                raise(ErrorCode::parse, where + ": edge entries must be [u, v, feat] int triples");
            r.edges.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
        }
        r.atom_labels = require_int_array(obj, "atom_labels", where);
        r.bond_labels = require_int_array(obj, "bond_labels", where);
        r.reaction_class = require_int(obj, "class", where);

        normalize_edges(r);
        validate_record(r, d, "record " + std::to_string(record_idx) + " (" + where + ")");
        d.records.push_back(std::move(r));
        ++record_idx;
    }

    if (!have_header && line_no > 0)
        raise(ErrorCode::parse, path.string() + ": missing header line");
    if (!have_header) {
        // Zero-line file: an empty dataset with empty vocabulary declarations
        // is not representable, so default to a 1-entry vocab.
        d.node_vocab = 1;
        d.edge_vocab = 1;
    }
    return d;
}

void save_dataset(const Dataset& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::io, "cannot open for writing: " + path.string());

    json header = {{"n_atom_templates", d.n_atom_templates},
                   {"n_bond_templates", d.n_bond_templates},
                   {"node_vocab", d.node_vocab},
                   {"edge_vocab", d.edge_vocab}};
    out << header.dump() << "\n";

    for (const ReactionRecord& r : d.records) {
        json edges = json::array();
        for (const Edge& e : r.edges) edges.push_back({e.u, e.v, e.feature});
        json obj = {{"nodes", r.nodes},
                    {"edges", std::move(edges)},
                    {"atom_labels", r.atom_labels},
                    {"bond_labels", r.bond_labels},
                    {"class", r.reaction_class}};
        out << obj.dump() << "\n";
    }
    out.flush();
    if (!out) raise(ErrorCode::io, "write failed: " + path.string());
}

}  // namespace retroknn
