// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 6 scans every partition with at most 70 boxes at its
// largest setting, which takes a few seconds in a release build.

#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cores/cli.hpp"
#include "cores/extremal.hpp"
#include "cores/oracle.hpp"
#include "cores/poset.hpp"
#include "cores/sequences.hpp"

using namespace cores;

namespace {

int failures = 0;
std::string detail;

void report(int criterion, const std::string& name, bool ok) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
    detail.clear();
}

bool fail_with(const std::string& message) {
    detail = message;
    return false;
}

Int ideal_partition_size(const CorePoset& poset, const Bitset& members) {
    long long card = 0, sum = 0;
    members.for_each_set([&](std::size_t i) {
        ++card;
        sum += poset.element(i);
    });
    return make_int(sum) - make_int(card * (card - 1) / 2);
}

// Criterion 1: ideal count = decomposition recurrence = binomial-Catalan
// sum, exactly, for s in [0, 14].
bool criterion_counts() {
    for (long long s = 0; s <= 14; ++s) {
        const Int enumerated = make_int(count_ideals(build_triple_poset(s)));
        if (enumerated != core_count(s) || enumerated != motzkin(s)) {
            return fail_with("count disagreement at s=" + std::to_string(s));
        }
    }
    return true;
}

// Criterion 2: exhaustive maximum over all cores matches the closed form,
// and the maximizer set matches the classification, for s in [3, 12].
bool criterion_max_size() {
    for (long long s = 3; s <= 12; ++s) {
        const CorePoset poset = build_triple_poset(s);
        Int best = -1;
        std::set<Partition> argmax;
        for_each_ideal(poset, [&](const Bitset& members) {
            const Int size = ideal_partition_size(poset, members);
            if (size > best) {
                best = size;
                argmax.clear();
            }
            if (size == best) argmax.insert(partition_of_ideal(poset, members));
        });
        if (best != max_size(s)) {
            return fail_with("maximum size mismatch at s=" + std::to_string(s));
        }
        const MaxSizeReport rep = max_size_report(s);
        const std::set<Partition> witnesses(rep.witnesses.begin(), rep.witnesses.end());
        if (witnesses != argmax) {
            return fail_with("maximizer set mismatch at s=" + std::to_string(s));
        }
        const std::size_t expected_count = (s % 2 == 0) ? 1 : 2;
        if (witnesses.size() != expected_count) {
            return fail_with("maximizer multiplicity mismatch at s=" + std::to_string(s));
        }
    }
    return true;
}

// Criterion 3: enumerated size totals match all five computation routes for
// s in [2, 12]; the formula-only routes agree through s = 200.
bool criterion_size_sum() {
    const SeriesTable h_series = series(SeriesId::H, 201);
    for (long long s = 2; s <= 12; ++s) {
        const CorePoset poset = build_triple_poset(s);
        Int total = 0;
        for_each_ideal(poset, [&](const Bitset& members) {
            total += ideal_partition_size(poset, members);
        });
        if (total != core_size_sum(s)) {
            return fail_with("enumerated total != recurrence at s=" + std::to_string(s));
        }
    }
    for (long long s = 0; s <= 200; ++s) {
        const Int h = core_size_sum(s);
        if (h != core_size_sum_closed_binomial(s)) {
            return fail_with("recurrence != binomial closed form at s=" + std::to_string(s));
        }
        if (h != core_size_sum_closed_catalan(s)) {
            return fail_with("recurrence != catalan closed form at s=" + std::to_string(s));
        }
        if (s >= 3 && h != core_size_sum_three_term(s)) {
            return fail_with("recurrence != three-term recurrence at s=" + std::to_string(s));
        }
        if (h != h_series.coeffs[static_cast<std::size_t>(s)]) {
            return fail_with("recurrence != series coefficient at s=" + std::to_string(s));
        }
    }
    return true;
}

// Criterion 4: the worked (3, 4) enumeration, exact and deterministic.
bool criterion_worked_example() {
    const std::string expected =
        "[] [] 0\n"
        "[1] [1] 1\n"
        "[2] [2] 2\n"
        "[2,1] [1,1] 2\n"
        "[5,2,1] [3,1,1] 5\n";
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::ostringstream out, err;
        const int status = run_cli({"enumerate", "--gens", "3,4"}, out, err);
        if (status != 0 || out.str() != expected) {
            return fail_with("enumerate --gens 3,4 deviated from the worked example");
        }
    }
    return true;
}

// Criterion 5: two-generator count and unique maximum size closed forms for
// all coprime pairs with s + t <= 16.
bool criterion_pair_formulas() {
    for (long long a = 2; a <= 16; ++a) {
        for (long long b = a + 1; a + b <= 16; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const CorePoset poset = build_poset(CoreTuple({a, b}));
            Int count = 0;
            Int best = -1;
            unsigned long ties = 0;
            for_each_ideal(poset, [&](const Bitset& members) {
                count += 1;
                const Int size = ideal_partition_size(poset, members);
                if (size > best) {
                    best = size;
                    ties = 0;
                }
                if (size == best) ++ties;
            });
            const std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            if (count != pair_core_count(a, b)) return fail_with("count mismatch at " + at);
            if (best != pair_core_max_size(a, b)) return fail_with("max size mismatch at " + at);
            if (ties != 1) return fail_with("maximum not unique at " + at);
        }
    }
    return true;
}

// Criterion 6: for s <= 8 the hook-length scan up to the maximum size finds
// exactly the ideal images (both directions of the bijection).
bool criterion_bijection() {
    for (long long s = 0; s <= 8; ++s) {
        const CorePoset poset = build_triple_poset(s);
        std::set<Partition> image;
        for_each_ideal(poset, [&](const Bitset& members) {
            image.insert(partition_of_ideal(poset, members));
        });
        std::set<Partition> scanned;
        for_each_core_up_to(poset.generators(), max_size(s).get_si(),
                            [&](const Partition& p) { scanned.insert(p); });
        if (scanned != image) {
            return fail_with("core set != ideal image at s=" + std::to_string(s));
        }
    }
    return true;
}

bool beta_round_trips() {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> len_dist(0, 20);
    std::uniform_int_distribution<long long> part_dist(1, 25);
    std::bernoulli_distribution pick(0.3);
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<long long> parts(static_cast<std::size_t>(len_dist(rng)));
        for (auto& p : parts) p = part_dist(rng);
        std::sort(parts.rbegin(), parts.rend());
        const Partition p(parts);
        if (partition_from_beta(beta_set(p)) != p) return false;

        std::vector<long long> elements;
        for (long long v = 40; v >= 1; --v) {
            if (pick(rng)) elements.push_back(v);
        }
        const BetaSet beta(elements);
        if (beta_set(partition_from_beta(beta)) != beta) return false;
    }
    return true;
}

bool conjugation_properties() {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> len_dist(0, 14);
    std::uniform_int_distribution<long long> part_dist(1, 14);
    const std::vector<CoreTuple> tuples = {CoreTuple({2, 3}), CoreTuple({3, 4, 5}),
                                           CoreTuple({5, 8}), CoreTuple({5, 6, 7})};
    for (int iter = 0; iter < 3000; ++iter) {
        std::vector<long long> parts(static_cast<std::size_t>(len_dist(rng)));
        for (auto& p : parts) p = part_dist(rng);
        std::sort(parts.rbegin(), parts.rend());
        const Partition p(parts);
        const Partition q = conjugate(p);
        if (conjugate(q) != p) return false;
        if (p.size() != q.size()) return false;
        for (const auto& t : tuples) {
            if (is_core(p, t) != is_core(q, t)) return false;
        }
    }
    return true;
}

bool closure_vs_enumerations() {
    auto check_poset = [](const CorePoset& poset) {
        const auto enumerated = all_ideals(poset);
        if (enumerated != ideals_by_subset_scan(poset)) return false;
        for (const auto& members : enumerated) {
            if (!is_order_ideal(poset, members)) return false;
        }
        return true;
    };
    for (long long s = 0; s <= 9; ++s) {
        if (!check_poset(build_triple_poset(s))) return false;
    }
    for (long long a = 2; a <= 13; ++a) {
        for (long long b = a + 1; a + b <= 13; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const CorePoset poset = build_poset(CoreTuple({a, b}));
            if (poset.size() > 20) continue;
            if (!check_poset(poset)) return false;
        }
    }
    return true;
}

bool candidate_inequality() {
    for (long long s = 3; s <= 12; ++s) {
        for (long long i = 1; i <= s - 1; ++i) {
            const long long top = (s - i + 1) / 2;
            const Int best = candidate_size(s, i, top);
            for (long long j = 0; j <= top; ++j) {
                const Int value = candidate_size(s, i, j);
                if (value > best) return false;
                const bool equality_case = (j == top) || (s % 2 == 1 && i == 1 && j == 0);
                if ((value == best) != equality_case) return false;
            }
        }
    }
    return true;
}

bool cardinality_closed_forms() {
    for (long long s = 0; s <= 30; ++s) {
        const long long m = (s + 1) / 2;
        const long long expected = (s % 2 == 1) ? m * m - m : m * m;
        if (static_cast<long long>(build_triple_poset(s).size()) != expected) return false;
    }
    return true;
}

// Criterion 7: the property bundle.
bool criterion_properties() {
    if (!beta_round_trips()) return fail_with("beta-set round trips");
    if (!conjugation_properties()) return fail_with("conjugation properties");
    if (!closure_vs_enumerations()) return fail_with("closure predicate vs enumerations");
    if (!candidate_inequality()) return fail_with("candidate size inequality");
    if (!cardinality_closed_forms()) return fail_with("poset cardinality closed forms");
    return true;
}

// Criterion 8: byte-identical repeated runs.
bool criterion_determinism() {
    auto run_once = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = run_cli(args, out, err);
        return std::make_pair(status, out.str());
    };
    const auto verify1 = run_once({"verify", "--s-max", "10"});
    const auto verify2 = run_once({"verify", "--s-max", "10"});
    if (verify1.first != 0 || verify1 != verify2) {
        return fail_with("verify --s-max 10 is not reproducible");
    }
    const auto table1 = run_once({"table", "--s-max", "14"});
    const auto table2 = run_once({"table", "--s-max", "14"});
    if (table1.first != 0 || table1 != table2) {
        return fail_with("table --s-max 14 is not reproducible");
    }
    return true;
}

}  // namespace

int main() {
    report(1, "ideal count = recurrence = binomial-Catalan sum, s in [0,14]", criterion_counts());
    report(2, "exhaustive maximum size and maximizers match the classification, s in [3,12]",
           criterion_max_size());
    report(3, "size totals agree across enumeration and all formula routes (to s=200)",
           criterion_size_sum());
    report(4, "enumerate --gens 3,4 reproduces the worked five-ideal list", criterion_worked_example());
    report(5, "two-generator count and unique maximum closed forms, s+t <= 16",
           criterion_pair_formulas());
    report(6, "hook-length scan equals ideal image for s <= 8", criterion_bijection());
    report(7, "property suites (round trips, conjugation, closure, inequality, cardinalities)",
           criterion_properties());
    report(8, "verify and table runs are byte-identical", criterion_determinism());

    if (failures == 0) {
        std::cout << "acceptance: all 8 criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed" << std::endl;
    return 1;
}
