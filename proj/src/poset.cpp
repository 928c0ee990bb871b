#include "cores/poset.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace cores {

CorePoset::CorePoset(CoreTuple generators, std::vector<long long> elements,
                     std::vector<int> ranks, std::vector<std::vector<int>> down_edges)
    : generators_(std::move(generators)),
      elements_(std::move(elements)),
      ranks_(std::move(ranks)),
      down_(std::move(down_edges)),
      up_(elements_.size()) {
    if (!std::is_sorted(elements_.begin(), elements_.end())) {
        throw std::invalid_argument("poset elements must be sorted ascending");
    }
    if (ranks_.size() != elements_.size() || down_.size() != elements_.size()) {
        throw std::invalid_argument("poset field sizes disagree");
    }
    for (std::size_t e = 0; e < down_.size(); ++e) {
        for (int d : down_[e]) {
            up_[static_cast<std::size_t>(d)].push_back(static_cast<int>(e));
        }
    }
}

int CorePoset::length() const {
    int len = -1;
    for (int r : ranks_) len = std::max(len, r);
    return len;
}

std::optional<std::size_t> CorePoset::index_of(long long value) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
    if (it == elements_.end() || *it != value) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

std::vector<std::vector<int>> edges_from_generators(const std::vector<long long>& elements,
                                                    const std::vector<long long>& gens) {
    std::vector<std::vector<int>> down(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
        for (long long g : gens) {
            long long target = elements[e] - g;
            if (target < 1) continue;
            auto it = std::lower_bound(elements.begin(), elements.end(), target);
            if (it != elements.end() && *it == target) {
                down[e].push_back(static_cast<int>(it - elements.begin()));
            }
        }
        std::sort(down[e].begin(), down[e].end());
    }
    return down;
}

// Longest down-chain length; down-neighbors always have smaller values, so
// a single ascending pass suffices.
std::vector<int> ranks_from_edges(const std::vector<std::vector<int>>& down) {
    std::vector<int> rank(down.size(), 0);
    for (std::size_t e = 0; e < down.size(); ++e) {
        for (int d : down[e]) {
            rank[e] = std::max(rank[e], rank[static_cast<std::size_t>(d)] + 1);
        }
    }
    return rank;
}

}  // namespace

CorePoset build_poset(const CoreTuple& t) {
    if (t.gcd() != 1) {
        throw std::invalid_argument("generators must have gcd 1; the complement is infinite otherwise");
    }
    if (t.has_divisible_pair()) {
        throw std::invalid_argument("no generator may divide another");
    }
    const auto& gens = t.generators();
    const long long a_min = gens.front();
    const long long a_max = gens.back();
    const long long cap = a_min * a_max + a_min;  // past any Frobenius number

    // Sieve representable integers; once a_min consecutive representable
    // values appear, everything above them is representable too.
    std::vector<char> representable{1};  // index 0
    std::vector<long long> elements;
    long long run = 0;
    for (long long n = 1; run < a_min; ++n) {
        if (n > cap) {
            throw std::logic_error("representability sieve exceeded its cap");
        }
        bool rep = false;
        for (long long g : gens) {
            if (g <= n && representable[static_cast<std::size_t>(n - g)]) {
                rep = true;
                break;
            }
        }
        representable.push_back(rep ? 1 : 0);
        if (rep) {
            ++run;
        } else {
            run = 0;
            elements.push_back(n);
        }
    }

    auto down = edges_from_generators(elements, gens);
    auto ranks = ranks_from_edges(down);
    return CorePoset(t, std::move(elements), std::move(ranks), std::move(down));
}

CorePoset build_triple_poset(long long s) {
    if (s < 0) {
        throw std::invalid_argument("triple poset requires s >= 0");
    }
    const long long base = std::max<long long>(s, 1);
    CoreTuple gens({base, base + 1, base + 2});

    std::vector<long long> elements;
    std::vector<int> ranks;
    const long long n_ranks = s / 2;  // top rank is floor(s/2) - 1
    for (long long k = 0; k < n_ranks; ++k) {
        for (long long b = 1 + k * (s + 2); b <= (k + 1) * s - 1; ++b) {
            elements.push_back(b);
            ranks.push_back(static_cast<int>(k));
        }
    }

    std::vector<std::vector<int>> down(elements.size());
    for (std::size_t e = 0; e < elements.size(); ++e) {
        if (ranks[e] == 0) continue;
        for (long long g : {s, s + 1, s + 2}) {
            const long long target = elements[e] - g;
            auto it = std::lower_bound(elements.begin(), elements.end(), target);
            if (it == elements.end() || *it != target) {
                throw std::logic_error("triple poset cover target missing");
            }
            down[e].push_back(static_cast<int>(it - elements.begin()));
        }
        std::sort(down[e].begin(), down[e].end());
    }
    return CorePoset(std::move(gens), std::move(elements), std::move(ranks), std::move(down));
}

bool is_order_ideal(const CorePoset& p, const Bitset& members) {
    if (members.size() != p.size()) return false;
    bool ok = true;
    members.for_each_set([&](std::size_t i) {
        for (int d : p.down_edges(i)) {
            if (!members.test(static_cast<std::size_t>(d))) ok = false;
        }
    });
    return ok;
}

namespace {

void enumerate_rec(const CorePoset& p, int i, Bitset& current,
                   const std::function<void(const Bitset&)>& fn) {
    if (i < 0) {
        fn(current);
        return;
    }
    const auto idx = static_cast<std::size_t>(i);
    bool forced = false;
    for (int u : p.up_edges(idx)) {
        if (current.test(static_cast<std::size_t>(u))) {
            forced = true;
            break;
        }
    }
    // Elements are decided from the largest value down, excluded branch
    // first, which yields ideals in increasing bitset order.
    if (!forced) enumerate_rec(p, i - 1, current, fn);
    current.set(idx);
    enumerate_rec(p, i - 1, current, fn);
    current.reset(idx);
}

}  // namespace

void for_each_ideal(const CorePoset& p, const std::function<void(const Bitset&)>& fn) {
    Bitset current(p.size());
    enumerate_rec(p, static_cast<int>(p.size()) - 1, current, fn);
}

std::vector<Bitset> all_ideals(const CorePoset& p) {
    std::vector<Bitset> out;
    for_each_ideal(p, [&](const Bitset& b) { out.push_back(b); });
    return out;
}

std::vector<Bitset> all_ideals_parallel(const CorePoset& p) {
    const auto n = p.size();
    if (n == 0) return {Bitset(0)};
    const int top = static_cast<int>(n) - 1;

    // The largest element is maximal, so both top-level branches are valid.
    auto run_branch = [&p, top, n](bool include_top) {
        std::vector<Bitset> out;
        Bitset current(n);
        if (include_top) current.set(static_cast<std::size_t>(top));
        enumerate_rec(p, top - 1, current, [&](const Bitset& b) { out.push_back(b); });
        return out;
    };

    auto excluded = std::async(std::launch::async, run_branch, false);
    auto included = std::async(std::launch::async, run_branch, true);
    std::vector<Bitset> result = excluded.get();
    std::vector<Bitset> upper = included.get();
    result.insert(result.end(), std::make_move_iterator(upper.begin()),
                  std::make_move_iterator(upper.end()));
    return result;
}

unsigned long long count_ideals(const CorePoset& p) {
    unsigned long long n = 0;
    for_each_ideal(p, [&](const Bitset&) { ++n; });
    return n;
}

IdealStats ideal_stats(const CorePoset& p, const Bitset& members) {
    if (!is_order_ideal(p, members)) {
        throw std::invalid_argument("subset is not an order ideal");
    }
    IdealStats stats;
    members.for_each_set([&](std::size_t i) {
        ++stats.cardinality;
        stats.element_sum += p.element(i);
        stats.rank_sum += p.rank_of(i);
    });
    return stats;
}

std::vector<long long> ideal_values_desc(const CorePoset& p, const Bitset& members) {
    std::vector<long long> values;
    members.for_each_set([&](std::size_t i) { values.push_back(p.element(i)); });
    std::reverse(values.begin(), values.end());
    return values;
}

Partition partition_of_ideal(const CorePoset& p, const Bitset& members) {
    return partition_from_beta(BetaSet(ideal_values_desc(p, members)));
}

std::string hasse_dot(const CorePoset& p) {
    std::ostringstream out;
    out << "digraph core_poset {\n";
    out << "  rankdir=BT;\n";
    const int len = p.length();
    for (int r = 0; r <= len; ++r) {
        out << "  { rank=same;";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.rank_of(i) == r) out << ' ' << p.element(i) << ';';
        }
        out << " }\n";
    }
    for (std::size_t e = 0; e < p.size(); ++e) {
        for (int d : p.down_edges(e)) {
            out << "  " << p.element(static_cast<std::size_t>(d)) << " -> " << p.element(e) << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace cores
