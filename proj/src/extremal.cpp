#include "cores/extremal.hpp"

#include <stdexcept>

namespace cores {

long long embedded_value(long long a, long long residue, long long rank) {
    return a + residue + residue * rank;
}

namespace {

long long triple_s_of(const CorePoset& poset) {
    return poset.generators().generators().front();
}

void check_candidate_range(long long s, long long i, long long j) {
    if (i < 1 || i > s - 1) {
        throw std::invalid_argument("candidate ideal requires 1 <= i <= s-1");
    }
    if (j < 0 || 2 * j > s - i + 1) {
        throw std::invalid_argument("candidate ideal requires 0 <= j <= floor((s-i+1)/2)");
    }
}

}  // namespace

Bitset candidate_ideal(const CorePoset& triple_poset, long long i, long long j) {
    const long long s = triple_s_of(triple_poset);
    check_candidate_range(s, i, j);

    Bitset members(triple_poset.size());
    auto include = [&](long long value) {
        auto idx = triple_poset.index_of(value);
        if (!idx) throw std::logic_error("candidate ideal value missing from poset");
        members.set(*idx);
    };

    // Copy of the poset for s - i, embedded at the top of each rank.
    const CorePoset inner = build_triple_poset(s - i);
    for (std::size_t a = 0; a < inner.size(); ++a) {
        include(embedded_value(inner.element(a), i, inner.rank_of(a)));
    }
    // Chain at residue i: one element per rank 0 .. j-1.
    for (long long p = 0; p < j; ++p) {
        include(i + p * (s + 2));
    }
    return members;
}

namespace {

// |T_u| and the sum of its elements, from the rank intervals
// [1 + k(u+2), (k+1)u - 1]; also the embedded element sum for residue i.
struct InnerPosetTotals {
    Int cardinality = 0;
    Int embedded_sum = 0;
};

InnerPosetTotals inner_totals(long long u, long long residue) {
    InnerPosetTotals totals;
    for (long long k = 0; k < u / 2; ++k) {
        const long long lo = 1 + k * (u + 2);
        const long long hi = (k + 1) * u - 1;
        const long long count = hi - lo + 1;
        const Int interval_sum = make_int(lo + hi) * make_int(count) / 2;
        totals.cardinality += make_int(count);
        totals.embedded_sum += interval_sum + make_int(residue) * make_int((k + 1) * count);
    }
    return totals;
}

Int choose2(const Int& n) {
    return n * (n - 1) / 2;
}

}  // namespace

Int candidate_size(long long s, long long i, long long j) {
    check_candidate_range(s, i, j);
    const auto totals = inner_totals(s - i, i);
    // Size of the (i, 0) candidate, then the chain correction.
    Int size = totals.embedded_sum - choose2(totals.cardinality);
    size += make_int(i * j);
    size += make_int(s + 1) * choose2(make_int(j));
    size -= totals.cardinality * make_int(j);
    return size;
}

Partition max_core(long long s) {
    const CorePoset poset = build_triple_poset(s);
    std::vector<long long> beta(poset.elements().rbegin(), poset.elements().rend());
    return partition_from_beta(BetaSet(std::move(beta)));
}

Int max_size(long long s) {
    if (s < 0) {
        throw std::invalid_argument("max_size requires s >= 0");
    }
    if (s % 2 == 1) {
        const unsigned long m = static_cast<unsigned long>((s + 1) / 2);
        return Int(m) * binomial(m + 1, 3);
    }
    const unsigned long m = static_cast<unsigned long>(s / 2);
    return Int(m + 1) * binomial(m + 1, 3) + binomial(m + 2, 3);
}

MaxSizeReport max_size_report(long long s) {
    if (s < 3) {
        throw std::invalid_argument("max_size_report requires s >= 3");
    }
    MaxSizeReport report;
    report.s = s;
    report.max_size = max_size(s);
    Partition kappa = max_core(s);
    Partition kappa_conj = conjugate(kappa);
    report.unique = (s % 2 == 0);
    report.self_conjugate = (s % 2 == 0);
    report.witnesses.push_back(std::move(kappa));
    if (!report.unique) {
        report.witnesses.push_back(std::move(kappa_conj));
    }
    return report;
}

}  // namespace cores
