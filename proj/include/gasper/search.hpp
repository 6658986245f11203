#pragma once

#include <cstdint>
#include <vector>

#include "gasper/bounds.hpp"
#include "gasper/core.hpp"

namespace gasper {

enum class SearchMode { Exhaustive, Anneal };

struct SearchProblem {
    int n;
    std::vector<Rat> entries;  // multiset of n^2 values
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = 0;        // ANNEAL only
    std::uint64_t budget = 0;      // ANNEAL only
    int workers = 1;               // EXHAUSTIVE only; result is worker-count independent
};

struct SearchResult {
    Matrix best;
    Rat best_abs_det;
    double upper_bound;  // gasper bound of the multiset
    double ratio;
    std::uint64_t nodes_visited;
    bool exhaustive_certificate;
};

// Exact maximum of |det| over all arrangements of the multiset. Symmetry
// reduction pins the largest entry at (0,0); among optima the reported
// matrix is the lexicographically least row-major arrangement.
// Throws SearchSpaceTooLarge when the reduced space exceeds 1e8.
SearchResult exhaustive_max_det(const SearchProblem& problem);

// Simulated annealing over entry transpositions with geometric cooling.
// Deterministic for a fixed seed.
SearchResult anneal_max_det(const SearchProblem& problem);

struct RatioRow {
    int n;
    Rat best;
    double bound;  // progression_bound with (p, q) = (1, 1)
    double ratio;
    bool exact;    // exhaustive certificate
};

// One row per n in 2..n_max; exhaustive where the reduced space allows,
// annealed (flagged) otherwise.
std::vector<RatioRow> ratio_table(int n_max, ProgressionMode family, int workers = 1);

}  // namespace gasper
