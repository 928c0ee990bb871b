#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cores/bitset.hpp"
#include "cores/partition.hpp"

namespace cores {

// Finite poset of positive integers not representable as a nonnegative
// combination of the generators. The order is realized by its generating
// cover relation e -> e - a_i (both endpoints in the poset); order ideals
// are exactly the subsets closed under these edges. Immutable after
// construction, safe to share across threads.
class CorePoset {
public:
    CorePoset(CoreTuple generators, std::vector<long long> elements,
              std::vector<int> ranks, std::vector<std::vector<int>> down_edges);

    const CoreTuple& generators() const { return generators_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<long long>& elements() const { return elements_; }
    long long element(std::size_t i) const { return elements_[i]; }
    int rank_of(std::size_t i) const { return ranks_[i]; }

    // Largest rank; -1 for the empty poset.
    int length() const;

    const std::vector<int>& down_edges(std::size_t i) const { return down_[i]; }
    const std::vector<int>& up_edges(std::size_t i) const { return up_[i]; }

    std::optional<std::size_t> index_of(long long value) const;

private:
    CoreTuple generators_;
    std::vector<long long> elements_;        // sorted ascending
    std::vector<int> ranks_;                 // aligned with elements_
    std::vector<std::vector<int>> down_;     // covers below: e -> e - a_i
    std::vector<std::vector<int>> up_;       // inverse of down_
};

// Sieve construction for arbitrary generator tuples. Rejects tuples with
// gcd > 1 (the complement would be infinite) and tuples where one
// generator divides another.
CorePoset build_poset(const CoreTuple& t);

// Direct construction of the poset for consecutive generators
// (s, s+1, s+2) from its rank structure: rank k holds the interval
// [1 + k(s+2), (k+1)s - 1] and every element of rank k >= 1 covers exactly
// b-s, b-(s+1), b-(s+2). Degenerate cases: s <= 1 gives the empty poset,
// s = 2 gives the single element {1}. Agrees with build_poset for s >= 3.
CorePoset build_triple_poset(long long s);

// Downward-closure predicate over the cover edges.
bool is_order_ideal(const CorePoset& p, const Bitset& members);

// Visits every order ideal exactly once, in increasing order of the member
// bitset read as a binary number (equivalently: lexicographic over the
// sorted element list). Branches on the largest undecided element; an
// element is forced into the ideal as soon as one of its upper covers is.
void for_each_ideal(const CorePoset& p, const std::function<void(const Bitset&)>& fn);

std::vector<Bitset> all_ideals(const CorePoset& p);

// Splits the top include/exclude branch across two tasks; yields the same
// sequence of ideals as the sequential enumeration.
std::vector<Bitset> all_ideals_parallel(const CorePoset& p);

unsigned long long count_ideals(const CorePoset& p);

struct IdealStats {
    std::size_t cardinality = 0;
    long long element_sum = 0;
    long long rank_sum = 0;

    friend bool operator==(const IdealStats&, const IdealStats&) = default;
};

// Cardinality, element sum and rank sum of an ideal; rejects subsets that
// are not downward closed.
IdealStats ideal_stats(const CorePoset& p, const Bitset& members);

// Member values in decreasing order.
std::vector<long long> ideal_values_desc(const CorePoset& p, const Bitset& members);

// The partition whose beta-set is the ideal.
Partition partition_of_ideal(const CorePoset& p, const Bitset& members);

// Hasse diagram in DOT format: one node per integer, same-rank clusters,
// cover edges written lower -> upper and drawn upward.
std::string hasse_dot(const CorePoset& p);

}  // namespace cores
