#pragma once

// Exhaustive generation of small good-parity Arthur parameters.

#include <vector>

#include "aptrans/arthur.hpp"

namespace aptrans {

struct CorpusBounds {
    int max_nstar = 8;
    int max_twice_t = 7;  // t ≤ 7/2
    int max_a = 4;
};

/// Groups Sp, SOodd, SOeven of every rank with 1 ≤ n* ≤ max_nstar.
std::vector<ClassicalGroup> corpus_groups(const CorpusBounds& b = {});

/// Every good-parity block with t ≤ max_twice_t/2, a ≤ max_a, fitting in n*.
std::vector<Block> candidate_blocks(const ClassicalGroup& g, const CorpusBounds& b = {});

/// Every good-parity parameter for g built from candidate blocks, in a
/// deterministic order.
std::vector<ArthurParameter> parameters_for(const ClassicalGroup& g, const CorpusBounds& b = {});

/// parameters_for over corpus_groups.
std::vector<ArthurParameter> parameter_corpus(const CorpusBounds& b = {});

}  // namespace aptrans
