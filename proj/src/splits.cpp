#include "retroknn/splits.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "retroknn/error.hpp"
#include "retroknn/rng.hpp"

namespace retroknn {

namespace {

void check_held_classes(const std::set<int>& held) {
    for (int c : held)
        if (c < 1 || c > 10)
            raise(ErrorCode::invalid_argument, "held class " + std::to_string(c) + " outside [1, 10]");
}

}  // namespace

Dataset build_zero_shot_split(const Dataset& d, const std::set<int>& held_classes) {
    check_held_classes(held_classes);
    Dataset out = d;
    out.records.clear();
    for (const ReactionRecord& r : d.records)
        if (!held_classes.contains(r.reaction_class)) out.records.push_back(r);
    return out;
}

Dataset build_few_shot_split(const Dataset& d, const std::set<int>& held_classes,
                             double keep_fraction, uint64_t seed) {
    check_held_classes(held_classes);
    if (keep_fraction < 0.0 || keep_fraction > 1.0)
        raise(ErrorCode::invalid_argument, "keep_fraction must lie in [0, 1]");

    std::map<int, std::vector<size_t>> by_class;
    for (size_t i = 0; i < d.records.size(); ++i) {
        int c = d.records[i].reaction_class;
        if (held_classes.contains(c)) by_class[c].push_back(i);
    }

    std::vector<bool> keep(d.records.size(), true);
    for (size_t i = 0; i < d.records.size(); ++i)
        if (held_classes.contains(d.records[i].reaction_class)) keep[i] = false;

    Rng rng(seed);
    for (auto& [cls, indices] : by_class) {
        Rng class_rng = rng.child(static_cast<uint64_t>(cls));
        class_rng.shuffle(indices);
        // floor() of the intended real product; the epsilon absorbs binary
        // representation error in fractions like 0.3.
        size_t n_keep = static_cast<size_t>(
            keep_fraction * static_cast<double>(indices.size()) + 1e-9);
        n_keep = std::min(n_keep, indices.size());
        for (size_t j = 0; j < n_keep; ++j) keep[indices[j]] = true;
    }

    Dataset out = d;
    out.records.clear();
    for (size_t i = 0; i < d.records.size(); ++i)
        if (keep[i]) out.records.push_back(d.records[i]);
    return out;
}

}  // namespace retroknn
