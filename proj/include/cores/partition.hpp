#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cores/bigint.hpp"

namespace cores {

// Integer partition: weakly decreasing positive part sizes. The empty
// partition is a valid value. Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // Number of boxes in the Young diagram.
    Int size() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<long long> parts_;
};

// Beta-set: the first-column hook lengths of a partition, strictly
// decreasing positive integers. Determines the partition uniquely.
class BetaSet {
public:
    BetaSet() = default;
    explicit BetaSet(std::vector<long long> elements);

    // Elements in decreasing order.
    const std::vector<long long>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<long long> elements_;
};

// A tuple of distinct positive generators (a1 < a2 < ... < ar) defining
// simultaneous core membership. Divisibility between generators and the
// overall gcd are checked where they matter: poset construction requires
// gcd 1 and no generator dividing another, while the plain hook-length
// membership test accepts any distinct tuple.
class CoreTuple {
public:
    explicit CoreTuple(std::vector<long long> generators);

    const std::vector<long long>& generators() const { return generators_; }
    long long gcd() const;
    bool has_divisible_pair() const;

    friend bool operator==(const CoreTuple&, const CoreTuple&) = default;

private:
    std::vector<long long> generators_;  // sorted ascending
};

// Hook length of every box, row by row; shape matches the Young diagram.
std::vector<std::vector<long long>> hook_lengths(const Partition& p);

// First column of the hook-length matrix, in decreasing order.
BetaSet beta_set(const Partition& p);

// Inverse of beta_set.
Partition partition_from_beta(const BetaSet& b);

// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

// True iff no hook length anywhere in the diagram is divisible by any
// generator. This is the independent membership oracle; it never consults
// the poset machinery.
bool is_core(const Partition& p, const CoreTuple& t);

}  // namespace cores
