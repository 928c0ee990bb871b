#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cores/bigint.hpp"

namespace cores {

// Counting and summation sequences for (s, s+1, s+2)-core partitions.
// Every function is exact; memoized tables live behind a mutex and results
// are deterministic regardless of thread interleaving.

Int catalan(long long k);

// Binomial-Catalan sum: sum_k C(s, 2k) * catalan(k).
Int motzkin(long long s);

// Number of (s, s+1, s+2)-core partitions, by the ideal-decomposition
// recurrence r(s) = r(s-1) + sum_{i=2..s} r(i-2) r(s-i) with r(0) = r(1) = 1,
// r(2) = 2. Equals motzkin(s).
Int core_count(long long s);

// Sum of |I| over all order ideals I of the consecutive-triple poset.
Int ideal_cardinality_sum(long long s);

// Sum over all ideals of the rank sum of their members.
Int ideal_rank_sum(long long s);

// Total size of all (s, s+1, s+2)-core partitions, four independent ways.
Int core_size_sum(long long s);                  // convolution recurrence
Int core_size_sum_closed_binomial(long long s);  // sum of C(j+3,3) * (binomial-Catalan sum)
Int core_size_sum_closed_catalan(long long s);   // sum of (2i+3)!/(6 i! (i+1)!) * C(s+2, 2i+4)
Int core_size_sum_three_term(long long s);       // (s-2) h(s) = (2s-1) h(s-1) + (3s+3) h(s-2); s >= 3

// Sum over all ideals of their element sums. Enumerates the poset's ideals
// directly; exposed for invariant testing only.
Int ideal_element_sum(long long s);

// Reduced h(s) / r(s).
Rat average_size(long long s);

// Number of (s, t)-core partitions for coprime s, t: C(s+t, s) / (s+t).
Int pair_core_count(long long s, long long t);

// Maximum size of an (s, t)-core partition for coprime s, t:
// (s^2 - 1)(t^2 - 1) / 24.
Int pair_core_max_size(long long s, long long t);

enum class SeriesId { M, F, G, H };

SeriesId series_id_from_name(const std::string& name);
std::string series_name(SeriesId id);

struct SeriesTable {
    SeriesId id;
    std::vector<Int> coeffs;  // coeffs[s] = sequence value at s
};

// Exact power-series coefficients of the generating functions of motzkin,
// ideal_cardinality_sum, ideal_rank_sum and core_size_sum. Expanded with
// integer-only arithmetic: M and H through the holonomic recurrences their
// algebraic closed forms satisfy, F and G through the convolution
// identities F * (1 - 2x - 3x^2) = x^2 M^2 and G * (1 - x - 2x^2 M) = x^2 M F.
SeriesTable series(SeriesId id, std::size_t n_terms);

}  // namespace cores
