#pragma once

#include <vector>

#include "fuzzy/chern.hpp"

namespace fuzzy {

/// Reports for every N in [n_from, n_to] and each requested sign, ordered by N then sign
/// (plus before minus). Cases run in parallel; the ordering does not depend on scheduling.
std::vector<ChernReport<double>> sweep(int n_from, int n_to, const std::vector<Sign>& signs,
                                       unsigned threads = 0);

}  // namespace fuzzy
