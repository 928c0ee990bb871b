#include "cores/sequences.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cores/poset.hpp"

namespace cores {

namespace {

std::size_t checked_index(long long s, const char* what) {
    if (s < 0) {
        throw std::invalid_argument(std::string(what) + " requires s >= 0");
    }
    return static_cast<std::size_t>(s);
}

// Append-only memo table; deterministic regardless of thread interleaving.
class SequenceTable {
public:
    SequenceTable(std::vector<Int> base) : values_(std::move(base)) {}

    template <class Step>
    Int get(std::size_t s, Step step) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (values_.size() <= s) {
            values_.push_back(step(values_, values_.size()));
        }
        return values_[s];
    }

private:
    std::mutex mutex_;
    std::vector<Int> values_;
};

}  // namespace

Int catalan(long long k) {
    const auto n = checked_index(k, "catalan");
    return exact_div(binomial(2 * n, n), Int(n + 1), "catalan");
}

Int motzkin(long long s) {
    const auto n = checked_index(s, "motzkin");
    static SequenceTable table({});
    return table.get(n, [](const std::vector<Int>&, std::size_t v) {
        Int sum = 0;
        for (unsigned long k = 0; 2 * k <= v; ++k) {
            sum += binomial(v, 2 * k) * catalan(static_cast<long long>(k));
        }
        return sum;
    });
}

Int core_count(long long s) {
    const auto n = checked_index(s, "core_count");
    static SequenceTable table({Int(1), Int(1), Int(2)});
    return table.get(n, [](const std::vector<Int>& r, std::size_t v) {
        Int sum = r[v - 1];
        for (std::size_t i = 2; i <= v; ++i) {
            sum += r[i - 2] * r[v - i];
        }
        return sum;
    });
}

Int ideal_cardinality_sum(long long s) {
    const auto n = checked_index(s, "ideal_cardinality_sum");
    static SequenceTable table({Int(0), Int(0), Int(1)});
    return table.get(n, [](const std::vector<Int>& f, std::size_t v) {
        Int sum = f[v - 1];
        for (std::size_t i = 2; i <= v; ++i) {
            const Int m_tail = motzkin(static_cast<long long>(v - i));
            sum += 2 * m_tail * f[i - 2];
            sum += Int(i - 1) * m_tail * motzkin(static_cast<long long>(i - 2));
        }
        return sum;
    });
}

Int ideal_rank_sum(long long s) {
    const auto n = checked_index(s, "ideal_rank_sum");
    static SequenceTable table({Int(0), Int(0), Int(0)});
    return table.get(n, [](const std::vector<Int>& g, std::size_t v) {
        Int sum = g[v - 1];
        for (std::size_t i = 2; i <= v; ++i) {
            const Int m_tail = motzkin(static_cast<long long>(v - i));
            sum += m_tail * (2 * g[i - 2] + ideal_cardinality_sum(static_cast<long long>(i - 2)));
        }
        return sum;
    });
}

Int core_size_sum(long long s) {
    const auto n = checked_index(s, "core_size_sum");
    static SequenceTable table({Int(0), Int(0), Int(1)});
    return table.get(n, [](const std::vector<Int>& h, std::size_t v) {
        const auto sv = static_cast<long long>(v);
        Int sum = h[v - 1];
        sum += ideal_cardinality_sum(sv - 1);
        sum += ideal_rank_sum(sv - 1);
        for (std::size_t i = 2; i <= v; ++i) {
            const auto si = static_cast<long long>(i);
            const Int m_tail = motzkin(sv - si);
            const Int f_head = ideal_cardinality_sum(si - 2);
            sum += 2 * m_tail * h[i - 2];
            sum += make_int(sv + 4 - si) * m_tail * f_head;
            sum += 2 * make_int(sv - si + 2) * m_tail * ideal_rank_sum(si - 2);
            sum += make_int(si - 1) * m_tail * motzkin(si - 2);
            sum -= f_head * ideal_cardinality_sum(sv - si);
        }
        return sum;
    });
}

Int core_size_sum_closed_binomial(long long s) {
    checked_index(s, "core_size_sum_closed_binomial");
    Int total = 0;
    for (long long j = 0; j <= s - 2; ++j) {
        Int inner = 0;
        for (long long i = 0; 2 * i <= j; ++i) {
            inner += binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(2 * i)) *
                     catalan(i);
        }
        total += binomial(static_cast<unsigned long>(j + 3), 3) * inner;
    }
    return total;
}

Int core_size_sum_closed_catalan(long long s) {
    checked_index(s, "core_size_sum_closed_catalan");
    Int total = 0;
    for (long long i = 0; 2 * i + 4 <= s + 2; ++i) {
        const auto ui = static_cast<unsigned long>(i);
        const Int coeff = exact_div(factorial(2 * ui + 3), Int(6) * factorial(ui) * factorial(ui + 1),
                                    "core_size_sum_closed_catalan");
        total += coeff * binomial(static_cast<unsigned long>(s + 2),
                                  static_cast<unsigned long>(2 * i + 4));
    }
    return total;
}

Int core_size_sum_three_term(long long s) {
    if (s < 3) {
        throw std::invalid_argument(
            "three-term recurrence requires s >= 3 (the leading coefficient vanishes at s = 2)");
    }
    Int prev2 = 0;  // h(1)
    Int prev1 = 1;  // h(2)
    Int current = 0;
    for (long long k = 3; k <= s; ++k) {
        current = exact_div(make_int(2 * k - 1) * prev1 + make_int(3 * k + 3) * prev2, make_int(k - 2),
                            "core_size_sum_three_term");
        prev2 = prev1;
        prev1 = current;
    }
    return current;
}

Int ideal_element_sum(long long s) {
    checked_index(s, "ideal_element_sum");
    const CorePoset poset = build_triple_poset(s);
    Int total = 0;
    for_each_ideal(poset, [&](const Bitset& members) {
        long long sum = 0;
        members.for_each_set([&](std::size_t i) { sum += poset.element(i); });
        total += make_int(sum);
    });
    return total;
}

Rat average_size(long long s) {
    checked_index(s, "average_size");
    return make_rational(core_size_sum(s), core_count(s));
}

namespace {

void check_coprime_pair(long long s, long long t, const char* what) {
    if (s < 1 || t < 1) {
        throw std::invalid_argument(std::string(what) + " requires positive arguments");
    }
    if (s == t) {
        throw std::invalid_argument(std::string(what) + " requires distinct arguments");
    }
    if (std::gcd(s, t) != 1) {
        throw std::invalid_argument(std::string(what) + " requires coprime arguments");
    }
}

}  // namespace

Int pair_core_count(long long s, long long t) {
    check_coprime_pair(s, t, "pair_core_count");
    return exact_div(binomial(static_cast<unsigned long>(s + t), static_cast<unsigned long>(s)),
                     make_int(s + t), "pair_core_count");
}

Int pair_core_max_size(long long s, long long t) {
    check_coprime_pair(s, t, "pair_core_max_size");
    return exact_div(make_int(s * s - 1) * make_int(t * t - 1), Int(24), "pair_core_max_size");
}

SeriesId series_id_from_name(const std::string& name) {
    if (name == "M") return SeriesId::M;
    if (name == "F") return SeriesId::F;
    if (name == "G") return SeriesId::G;
    if (name == "H") return SeriesId::H;
    throw std::invalid_argument("unknown series name: " + name);
}

std::string series_name(SeriesId id) {
    switch (id) {
        case SeriesId::M: return "M";
        case SeriesId::F: return "F";
        case SeriesId::G: return "G";
        case SeriesId::H: return "H";
    }
    throw std::logic_error("bad series id");
}

namespace {

// (s+2) m_s = (2s+1) m_{s-1} + 3(s-1) m_{s-2}
std::vector<Int> motzkin_series(std::size_t n) {
    std::vector<Int> m;
    m.reserve(n);
    if (n > 0) m.push_back(1);
    if (n > 1) m.push_back(1);
    for (std::size_t k = 2; k < n; ++k) {
        m.push_back(exact_div(Int(2 * k + 1) * m[k - 1] + Int(3 * (k - 1)) * m[k - 2], Int(k + 2),
                              "motzkin_series"));
    }
    return m;
}

Int convolution_at(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t k) {
    Int sum = 0;
    for (std::size_t i = 0; i <= k; ++i) sum += a[i] * b[k - i];
    return sum;
}

// F (1 - 2x - 3x^2) = x^2 M^2
std::vector<Int> cardinality_series(const std::vector<Int>& m, std::size_t n) {
    std::vector<Int> f;
    f.reserve(n);
    if (n > 0) f.push_back(0);
    if (n > 1) f.push_back(0);
    for (std::size_t k = 2; k < n; ++k) {
        f.push_back(convolution_at(m, m, k - 2) + 2 * f[k - 1] + 3 * f[k - 2]);
    }
    return f;
}

// G (1 - x - 2x^2 M) = x^2 M F
std::vector<Int> rank_series(const std::vector<Int>& m, const std::vector<Int>& f, std::size_t n) {
    std::vector<Int> g;
    g.reserve(n);
    if (n > 0) g.push_back(0);
    if (n > 1) g.push_back(0);
    for (std::size_t k = 2; k < n; ++k) {
        Int value = convolution_at(m, f, k - 2) + g[k - 1];
        for (std::size_t t = 2; t <= k; ++t) {
            value += 2 * m[t - 2] * g[k - t];
        }
        g.push_back(value);
    }
    return g;
}

// H = x^2 A with (1 - 2x - 3x^2) A' = (5 + 15x) A, so
// k a_k = (2k+3) a_{k-1} + 3(k+3) a_{k-2}.
std::vector<Int> size_series(std::size_t n) {
    std::vector<Int> a;
    if (n > 2) {
        a.reserve(n - 2);
        a.push_back(1);
        if (n > 3) a.push_back(5);
        for (std::size_t k = 2; k + 2 < n; ++k) {
            a.push_back(exact_div(Int(2 * k + 3) * a[k - 1] + Int(3 * (k + 3)) * a[k - 2], Int(k),
                                  "size_series"));
        }
    }
    std::vector<Int> h;
    h.reserve(n);
    if (n > 0) h.push_back(0);
    if (n > 1) h.push_back(0);
    for (std::size_t k = 2; k < n; ++k) h.push_back(a[k - 2]);
    return h;
}

}  // namespace

SeriesTable series(SeriesId id, std::size_t n_terms) {
    if (n_terms < 1) {
        throw std::invalid_argument("series requires at least one term");
    }
    switch (id) {
        case SeriesId::M:
            return {id, motzkin_series(n_terms)};
        case SeriesId::F:
            return {id, cardinality_series(motzkin_series(n_terms), n_terms)};
        case SeriesId::G: {
            auto m = motzkin_series(n_terms);
            auto f = cardinality_series(m, n_terms);
            return {id, rank_series(m, f, n_terms)};
        }
        case SeriesId::H:
            return {id, size_series(n_terms)};
    }
    throw std::logic_error("bad series id");
}

}  // namespace cores
