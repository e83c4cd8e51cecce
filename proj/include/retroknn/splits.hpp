#pragma once

#include <cstdint>
#include <set>

#include "retroknn/graph.hpp"

namespace retroknn {

// Drops every record whose reaction class is in held_classes. Order preserved.
Dataset build_zero_shot_split(const Dataset& d, const std::set<int>& held_classes);

// Keeps all records outside held_classes; inside, keeps exactly
// floor(keep_fraction * n_c) records per class c, chosen by a seeded per-class
// shuffle. Order preserved; bit-reproducible for a fixed seed.
Dataset build_few_shot_split(const Dataset& d, const std::set<int>& held_classes,
                             double keep_fraction, uint64_t seed);

}  // namespace retroknn
