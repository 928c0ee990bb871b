#pragma once

#include <functional>
#include <vector>

#include "cores/bigint.hpp"
#include "cores/bitset.hpp"
#include "cores/partition.hpp"
#include "cores/poset.hpp"

namespace cores {

// Deliberately naive ground truth. Everything here works from first
// definitions (hook lengths, subset closure) and must not call into the
// sequence or extremal formulas it is used to check.

// Visits every core partition of every n <= n_max, generated by recursive
// descending-first-part partition enumeration and filtered with the
// hook-length membership test. No poset machinery involved.
void for_each_core_up_to(const CoreTuple& t, long long n_max,
                         const std::function<void(const Partition&)>& fn);

// Filters all 2^n subsets with the downward-closure predicate; independent
// of the branch-and-propagate enumeration. Refuses posets with more than
// 24 elements.
std::vector<Bitset> ideals_by_subset_scan(const CorePoset& p);

struct OracleSummary {
    CoreTuple tuple;
    Int count;
    Int total_size;
    Int max_size;
    std::vector<Partition> maximizers;  // in generation order
};

OracleSummary summarize(const CoreTuple& t, long long n_max);

}  // namespace cores
