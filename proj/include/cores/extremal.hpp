#pragma once

#include <vector>

#include "cores/bigint.hpp"
#include "cores/bitset.hpp"
#include "cores/partition.hpp"
#include "cores/poset.hpp"

namespace cores {

// Maximum-size (s, s+1, s+2)-core partitions and the two-parameter family
// of candidate ideals the classification runs over.

struct MaxSizeReport {
    long long s = 0;
    Int max_size;
    std::vector<Partition> witnesses;  // max core first, its conjugate second
    bool unique = false;
    bool self_conjugate = false;
};

// Index map embedding the poset for s' = s - i into the top of each rank
// of the poset for s: a value of rank k maps to a + i + i*k.
long long embedded_value(long long a, long long residue, long long rank);

// The candidate ideal with parameters (i, j) inside the given
// consecutive-triple poset: the embedded copy of the smaller poset sitting
// above [i+1, s-1], plus the j-element chain i, i+(s+2), ..., i+(j-1)(s+2).
// Requires 1 <= i <= s-1 and 0 <= j <= floor((s-i+1)/2).
Bitset candidate_ideal(const CorePoset& triple_poset, long long i, long long j);

// Size of the partition attached to candidate_ideal(s, i, j), by closed
// form; must equal the size computed through partition_of_ideal.
Int candidate_size(long long s, long long i, long long j);

// The partition whose beta-set is the whole consecutive-triple poset; a
// maximum-size (s, s+1, s+2)-core.
Partition max_core(long long s);

// Closed form for the maximum size: m C(m+1, 3) when s = 2m - 1, and
// (m+1) C(m+1, 3) + C(m+2, 3) when s = 2m. Valid for s >= 0.
Int max_size(long long s);

// Full classification for s >= 3: the maximizer set is {max_core(s)} when
// s is even (self-conjugate) and {max_core(s), conjugate} when s is odd.
MaxSizeReport max_size_report(long long s);

}  // namespace cores
