#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cores/extremal.hpp"
#include "cores/poset.hpp"
#include "cores/sequences.hpp"

using namespace cores;

namespace {

std::vector<long long> sorted_values(const CorePoset& p, const Bitset& members) {
    std::vector<long long> values;
    members.for_each_set([&](std::size_t i) { values.push_back(p.element(i)); });
    return values;
}

long long max_j(long long s, long long i) { return (s - i + 1) / 2; }

}  // namespace

TEST_CASE("candidate ideal examples") {
    const CorePoset t3 = build_triple_poset(3);
    CHECK(sorted_values(t3, candidate_ideal(t3, 1, 0)) == std::vector<long long>{2});

    // Embedded copy of the 9-element poset for s = 6 plus the chain {4, 16}.
    const CorePoset t10 = build_triple_poset(10);
    CHECK(sorted_values(t10, candidate_ideal(t10, 4, 2)) ==
          std::vector<long long>{4, 5, 6, 7, 8, 9, 16, 17, 18, 19, 29});

    for (long long s = 2; s <= 12; ++s) {
        const CorePoset poset = build_triple_poset(s);
        Bitset full(poset.size());
        for (std::size_t i = 0; i < poset.size(); ++i) full.set(i);
        CHECK(candidate_ideal(poset, 1, max_j(s, 1)) == full);
    }
}

TEST_CASE("candidate ideal rejects out-of-range parameters") {
    const CorePoset t6 = build_triple_poset(6);
    CHECK_THROWS_AS(candidate_ideal(t6, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(candidate_ideal(t6, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(candidate_ideal(t6, 2, max_j(6, 2) + 1), std::invalid_argument);
    CHECK_THROWS_AS(candidate_ideal(t6, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(candidate_size(6, 0, 0), std::invalid_argument);
}

TEST_CASE("candidate ideals are downward closed and their sizes match the closed form") {
    for (long long s = 2; s <= 12; ++s) {
        const CorePoset poset = build_triple_poset(s);
        for (long long i = 1; i <= s - 1; ++i) {
            for (long long j = 0; j <= max_j(s, i); ++j) {
                const Bitset ideal = candidate_ideal(poset, i, j);
                REQUIRE(is_order_ideal(poset, ideal));
                CHECK(candidate_size(s, i, j) == partition_of_ideal(poset, ideal).size());
            }
        }
    }
}

TEST_CASE("candidate size examples") {
    CHECK(candidate_size(3, 1, 0) == 2);
    CHECK(candidate_size(4, 1, 2) == 7);
    const CorePoset t10 = build_triple_poset(10);
    CHECK(candidate_size(10, 4, 2) ==
          partition_of_ideal(t10, candidate_ideal(t10, 4, 2)).size());
}

TEST_CASE("the full chain is maximal among candidates with the stated equality cases") {
    for (long long s = 3; s <= 12; ++s) {
        for (long long i = 1; i <= s - 1; ++i) {
            const long long top = max_j(s, i);
            const Int best = candidate_size(s, i, top);
            for (long long j = 0; j <= top; ++j) {
                const Int value = candidate_size(s, i, j);
                CHECK(value <= best);
                const bool equality_case = (j == top) || (s % 2 == 1 && i == 1 && j == 0);
                CHECK((value == best) == equality_case);
            }
        }
    }
}

TEST_CASE("a full chain collapses to the next residue's base candidate") {
    for (long long s = 3; s <= 12; ++s) {
        const CorePoset poset = build_triple_poset(s);
        for (long long i = 2; i <= s - 1; ++i) {
            CHECK(candidate_ideal(poset, i, max_j(s, i)) == candidate_ideal(poset, i - 1, 0));
        }
    }
}

TEST_CASE("maximum core examples") {
    CHECK(max_core(4) == Partition({4, 1, 1, 1}));
    CHECK(conjugate(max_core(4)) == max_core(4));
    CHECK(max_core(3) == Partition({1, 1}));
    CHECK(conjugate(max_core(3)) == Partition({2}));
    CHECK(max_core(0) == Partition{});
    CHECK(max_core(1) == Partition{});
    CHECK(max_core(2) == Partition({1}));

    const Partition k5 = max_core(5);
    CHECK(k5.length() == 6);       // m^2 - m with m = 3
    CHECK(k5.parts()[0] == 4);     // m^2 - 2m + 1
}

TEST_CASE("maximum size closed form") {
    CHECK(max_size(3) == 2);
    CHECK(max_size(4) == 7);
    CHECK(max_size(6) == 26);
    CHECK_THROWS_AS(max_size(-1), std::invalid_argument);
}

TEST_CASE("maximum size matches the full-poset partition for s <= 30") {
    for (long long s = 0; s <= 30; ++s) {
        CHECK(max_core(s).size() == max_size(s));
    }
}

TEST_CASE("the maximum core is self-conjugate exactly for even s") {
    for (long long s = 3; s <= 12; ++s) {
        CHECK((conjugate(max_core(s)) == max_core(s)) == (s % 2 == 0));
    }
}

TEST_CASE("max size report") {
    const MaxSizeReport even = max_size_report(4);
    CHECK(even.unique);
    CHECK(even.self_conjugate);
    CHECK(even.max_size == 7);
    CHECK(even.witnesses == std::vector<Partition>{Partition({4, 1, 1, 1})});

    const MaxSizeReport odd = max_size_report(3);
    CHECK_FALSE(odd.unique);
    CHECK_FALSE(odd.self_conjugate);
    CHECK(odd.witnesses == std::vector<Partition>{Partition({1, 1}), Partition({2})});

    CHECK_THROWS_AS(max_size_report(2), std::invalid_argument);
}

TEST_CASE("report witnesses are exactly the argmax ideals for s <= 10") {
    for (long long s = 3; s <= 10; ++s) {
        const CorePoset poset = build_triple_poset(s);
        Int best = -1;
        std::set<Partition> argmax;
        for_each_ideal(poset, [&](const Bitset& members) {
            Partition p = partition_of_ideal(poset, members);
            const Int size = p.size();
            if (size > best) {
                best = size;
                argmax.clear();
            }
            if (size == best) argmax.insert(std::move(p));
        });
        const MaxSizeReport report = max_size_report(s);
        CHECK(best == report.max_size);
        CHECK(argmax == std::set<Partition>(report.witnesses.begin(), report.witnesses.end()));
    }
}

TEST_CASE("ideal counts split by smallest missing minimal element") {
    // Ideals whose smallest missing rank-0 element is i decompose into an
    // ideal of the poset for i-2 and one for s-i; the counts multiply.
    for (long long s = 3; s <= 9; ++s) {
        const CorePoset poset = build_triple_poset(s);
        std::map<long long, Int> by_missing;
        for_each_ideal(poset, [&](const Bitset& members) {
            long long missing = s;
            for (long long v = 1; v <= s - 1; ++v) {
                if (!members.test(static_cast<std::size_t>(*poset.index_of(v)))) {
                    missing = v;
                    break;
                }
            }
            by_missing[missing] += 1;
        });
        CHECK(by_missing[1] == motzkin(s - 1));
        for (long long i = 2; i <= s; ++i) {
            CHECK(by_missing[i] == motzkin(i - 2) * motzkin(s - i));
        }
    }
}
