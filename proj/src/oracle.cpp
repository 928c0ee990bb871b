#include "cores/oracle.hpp"

#include <stdexcept>

namespace cores {

namespace {

// Shared scan state; conj holds running column counts for the current
// partition prefix so the hook check never rebuilds it.
struct CoreScan {
    const std::vector<long long>& gens;
    const std::function<void(const Partition&)>& fn;
    std::vector<long long> parts;
    std::vector<long long> conj;

    bool current_is_core() const {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (long long j = 0; j < parts[i]; ++j) {
                const long long hook = parts[i] - j + conj[static_cast<std::size_t>(j)] -
                                       static_cast<long long>(i) - 1;
                for (long long g : gens) {
                    if (hook % g == 0) return false;
                }
            }
        }
        return true;
    }

    void run(long long max_part, long long budget) {
        if (current_is_core()) fn(Partition(parts));
        for (long long p = std::min(max_part, budget); p >= 1; --p) {
            parts.push_back(p);
            if (conj.size() < static_cast<std::size_t>(p)) {
                conj.resize(static_cast<std::size_t>(p), 0);
            }
            for (long long j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
            run(p, budget - p);
            for (long long j = 0; j < p; ++j) --conj[static_cast<std::size_t>(j)];
            parts.pop_back();
        }
    }
};

}  // namespace

void for_each_core_up_to(const CoreTuple& t, long long n_max,
                         const std::function<void(const Partition&)>& fn) {
    if (n_max < 0) {
        throw std::invalid_argument("for_each_core_up_to requires n_max >= 0");
    }
    CoreScan scan{t.generators(), fn, {}, {}};
    scan.run(n_max, n_max);
}

std::vector<Bitset> ideals_by_subset_scan(const CorePoset& p) {
    const std::size_t n = p.size();
    if (n > 24) {
        throw std::invalid_argument("subset scan is capped at 24 elements");
    }
    std::vector<std::uint32_t> down_mask(n, 0);
    for (std::size_t e = 0; e < n; ++e) {
        for (int d : p.down_edges(e)) {
            down_mask[e] |= std::uint32_t{1} << d;
        }
    }

    std::vector<Bitset> ideals;
    const std::uint32_t limit = n == 0 ? 1 : (std::uint32_t{1} << n);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        bool closed = true;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const auto e = static_cast<std::size_t>(__builtin_ctz(rest));
            if ((mask & down_mask[e]) != down_mask[e]) {
                closed = false;
                break;
            }
        }
        if (!closed) continue;
        Bitset members(n);
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            members.set(static_cast<std::size_t>(__builtin_ctz(rest)));
        }
        ideals.push_back(std::move(members));
    }
    return ideals;
}

OracleSummary summarize(const CoreTuple& t, long long n_max) {
    OracleSummary summary{t, 0, 0, 0, {}};
    for_each_core_up_to(t, n_max, [&](const Partition& p) {
        const Int size = p.size();
        summary.count += 1;
        summary.total_size += size;
        if (size > summary.max_size) {
            summary.max_size = size;
            summary.maximizers.clear();
        }
        if (size == summary.max_size) {
            summary.maximizers.push_back(p);
        }
    });
    return summary;
}

}  // namespace cores
