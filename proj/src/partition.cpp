#include "cores/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cores {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Int Partition::size() const {
    Int total = 0;
    for (long long p : parts_) total += make_int(p);
    return total;
}

BetaSet::BetaSet(std::vector<long long> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1) {
            throw std::invalid_argument("beta-set elements must be positive");
        }
        if (i > 0 && elements_[i] >= elements_[i - 1]) {
            throw std::invalid_argument("beta-set elements must be strictly decreasing");
        }
    }
}

CoreTuple::CoreTuple(std::vector<long long> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw std::invalid_argument("generator tuple must not be empty");
    }
    std::sort(generators_.begin(), generators_.end());
    if (generators_.front() < 1) {
        throw std::invalid_argument("generators must be positive");
    }
    if (std::adjacent_find(generators_.begin(), generators_.end()) != generators_.end()) {
        throw std::invalid_argument("generators must be distinct");
    }
}

long long CoreTuple::gcd() const {
    long long g = 0;
    for (long long a : generators_) g = std::gcd(g, a);
    return g;
}

bool CoreTuple::has_divisible_pair() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (generators_[j] % generators_[i] == 0) return true;
        }
    }
    return false;
}

namespace {

// conj[j] = number of rows with at least j+1 boxes.
std::vector<long long> conjugate_counts(const std::vector<long long>& parts) {
    std::vector<long long> conj(parts.empty() ? 0 : static_cast<std::size_t>(parts[0]), 0);
    for (long long p : parts) {
        for (long long j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return conj;
}

}  // namespace

std::vector<std::vector<long long>> hook_lengths(const Partition& p) {
    const auto& parts = p.parts();
    const auto conj = conjugate_counts(parts);
    std::vector<std::vector<long long>> hooks(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        hooks[i].resize(static_cast<std::size_t>(parts[i]));
        for (long long j = 0; j < parts[i]; ++j) {
            // arm + leg + 1 for the box in row i+1, column j+1
            hooks[i][static_cast<std::size_t>(j)] =
                parts[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<long long>(i) - 1;
        }
    }
    return hooks;
}

BetaSet beta_set(const Partition& p) {
    const auto& parts = p.parts();
    const auto m = static_cast<long long>(parts.size());
    std::vector<long long> beta(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        beta[i] = parts[i] + m - static_cast<long long>(i) - 1;
    }
    return BetaSet(std::move(beta));
}

Partition partition_from_beta(const BetaSet& b) {
    const auto& h = b.elements();
    const auto m = static_cast<long long>(h.size());
    std::vector<long long> parts;
    parts.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        long long part = h[i] - (m - static_cast<long long>(i) - 1);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    return Partition(conjugate_counts(p.parts()));
}

bool is_core(const Partition& p, const CoreTuple& t) {
    const auto& parts = p.parts();
    const auto conj = conjugate_counts(parts);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (long long j = 0; j < parts[i]; ++j) {
            const long long hook =
                parts[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<long long>(i) - 1;
            for (long long g : t.generators()) {
                if (hook % g == 0) return false;
            }
        }
    }
    return true;
}

}  // namespace cores
