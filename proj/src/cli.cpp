#include "cores/cli.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "cores/extremal.hpp"
#include "cores/oracle.hpp"
#include "cores/poset.hpp"
#include "cores/sequences.hpp"

namespace cores {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_list_json(const std::vector<long long>& values) {
    return ordered_json(values);
}

ordered_json partition_json(const Partition& p) {
    return int_list_json(p.parts());
}

std::string int_list_text(const std::vector<long long>& values) {
    std::string text = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) text += ',';
        text += std::to_string(values[i]);
    }
    text += ']';
    return text;
}

// Size of the core partition attached to an ideal, straight from the
// beta-set size identity: sum of members minus C(|I|, 2).
Int ideal_partition_size(const CorePoset& poset, const Bitset& members) {
    long long sum = 0;
    long long card = 0;
    members.for_each_set([&](std::size_t i) {
        sum += poset.element(i);
        ++card;
    });
    return make_int(sum) - make_int(card) * make_int(card - 1) / 2;
}

struct EnumerationStop {};

int cmd_count(long long s, const std::string& format, std::ostream& out) {
    const Int r = core_count(s);
    if (format == "json") {
        ordered_json row{{"s", s}, {"r", r.get_str()}};
        out << row.dump() << "\n";
    } else {
        out << r.get_str() << "\n";
    }
    return 0;
}

int cmd_max_size(long long s, std::ostream& out) {
    const MaxSizeReport report = max_size_report(s);
    ordered_json doc;
    doc["s"] = report.s;
    doc["max_size"] = report.max_size.get_str();
    doc["witnesses"] = ordered_json::array();
    for (const auto& w : report.witnesses) doc["witnesses"].push_back(partition_json(w));
    doc["unique"] = report.unique;
    doc["self_conjugate"] = report.self_conjugate;
    out << doc.dump() << "\n";
    return 0;
}

Int size_sum_by_method(long long s, const std::string& method) {
    if (method == "rec") return core_size_sum(s);
    if (method == "closed") return core_size_sum_closed_binomial(s);
    if (method == "series") return series(SeriesId::H, static_cast<std::size_t>(s) + 1).coeffs.back();
    if (method == "rec3") return core_size_sum_three_term(s);
    throw std::invalid_argument("unknown method: " + method);
}

int cmd_sum_sizes(long long s, const std::string& method, bool check, const std::string& format,
                  std::ostream& out, std::ostream& err) {
    if (check) {
        const Int rec = core_size_sum(s);
        std::vector<std::pair<const char*, Int>> others = {
            {"closed binomial form", core_size_sum_closed_binomial(s)},
            {"closed catalan form", core_size_sum_closed_catalan(s)},
            {"series coefficient", series(SeriesId::H, static_cast<std::size_t>(s) + 1).coeffs.back()},
        };
        if (s >= 3) {
            others.emplace_back("three-term recurrence", core_size_sum_three_term(s));
        }
        for (const auto& [name, value] : others) {
            if (value != rec) {
                err << "size-sum mismatch at s=" << s << ": recurrence gives " << rec.get_str()
                    << " but " << name << " gives " << value.get_str() << "\n";
                return 1;
            }
        }
    }
    const Int h = size_sum_by_method(s, method);
    if (format == "json") {
        ordered_json row{{"s", s}, {"method", method}, {"h", h.get_str()}};
        out << row.dump() << "\n";
    } else {
        out << h.get_str() << "\n";
    }
    return 0;
}

int cmd_avg_size(long long s, unsigned digits, const std::string& format, std::ostream& out) {
    const Rat avg = average_size(s);
    const std::string num = Int(avg.get_num()).get_str();
    const std::string den = Int(avg.get_den()).get_str();
    if (format == "json") {
        ordered_json row{{"s", s}, {"num", num}, {"den", den}};
        if (digits > 0) row["decimal"] = rational_decimal(avg, digits);
        out << row.dump() << "\n";
    } else {
        out << num << "/" << den;
        if (digits > 0) out << " " << rational_decimal(avg, digits);
        out << "\n";
    }
    return 0;
}

int cmd_enumerate(const std::vector<long long>& gens, long long limit, const std::string& format,
                  std::ostream& out) {
    const CorePoset poset = build_poset(CoreTuple(gens));
    long long emitted = 0;
    auto emit = [&](const Bitset& members) {
        if (limit >= 0 && emitted >= limit) throw EnumerationStop{};
        ++emitted;
        const auto values = ideal_values_desc(poset, members);
        const Partition p = partition_from_beta(BetaSet(values));
        if (format == "json") {
            ordered_json row{{"ideal", int_list_json(values)},
                             {"partition", partition_json(p)},
                             {"size", p.size().get_str()}};
            out << row.dump() << "\n";
        } else {
            out << int_list_text(values) << " " << int_list_text(p.parts()) << " "
                << p.size().get_str() << "\n";
        }
    };
    try {
        for_each_ideal(poset, emit);
    } catch (const EnumerationStop&) {
    }
    return 0;
}

int cmd_poset(const std::vector<long long>& gens, bool dot, std::ostream& out) {
    const CorePoset poset = build_poset(CoreTuple(gens));
    if (dot) {
        out << hasse_dot(poset);
        return 0;
    }
    out << "generators:";
    for (long long g : poset.generators().generators()) out << " " << g;
    out << "\n";
    out << "elements: " << poset.size() << "\n";
    out << "length: " << poset.length() << "\n";
    for (int r = 0; r <= poset.length(); ++r) {
        out << "rank " << r << ":";
        for (std::size_t i = 0; i < poset.size(); ++i) {
            if (poset.rank_of(i) == r) out << " " << poset.element(i);
        }
        out << "\n";
    }
    for (std::size_t e = 0; e < poset.size(); ++e) {
        if (poset.down_edges(e).empty()) continue;
        out << poset.element(e) << " covers";
        for (int d : poset.down_edges(e)) out << " " << poset.element(static_cast<std::size_t>(d));
        out << "\n";
    }
    return 0;
}

int cmd_table(long long s_max, const std::string& format, std::ostream& out) {
    if (s_max < 0) throw std::invalid_argument("table requires --s-max >= 0");
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (long long s = 0; s <= s_max; ++s) {
            const Rat avg = average_size(s);
            rows.push_back(ordered_json{{"s", s},
                                        {"r", core_count(s).get_str()},
                                        {"l", max_size(s).get_str()},
                                        {"h", core_size_sum(s).get_str()},
                                        {"avg_num", Int(avg.get_num()).get_str()},
                                        {"avg_den", Int(avg.get_den()).get_str()}});
        }
        out << rows.dump() << "\n";
    } else {
        out << "s,r,l,h,avg_num,avg_den\n";
        for (long long s = 0; s <= s_max; ++s) {
            const Rat avg = average_size(s);
            out << s << "," << core_count(s).get_str() << "," << max_size(s).get_str() << ","
                << core_size_sum(s).get_str() << "," << Int(avg.get_num()).get_str() << ","
                << Int(avg.get_den()).get_str() << "\n";
        }
    }
    return 0;
}

// One named check failed: print the first counterexample and stop.
struct Mismatch {
    std::string message;
};

void expect(bool ok, const std::string& message) {
    if (!ok) throw Mismatch{message};
}

void verify_triple(long long s, long long n_max, std::ostream& out) {
    const CorePoset poset = build_triple_poset(s);

    unsigned long long ideal_count = 0;
    Int cardinality_total = 0;
    Int rank_total = 0;
    Int size_total = 0;
    Int max_seen = -1;
    std::set<Partition> argmax;
    std::set<Partition> image;
    const bool collect_image = max_size(s) <= make_int(n_max);
    for_each_ideal(poset, [&](const Bitset& members) {
        ++ideal_count;
        long long card = 0;
        long long sum = 0;
        long long ranks = 0;
        members.for_each_set([&](std::size_t i) {
            ++card;
            sum += poset.element(i);
            ranks += poset.rank_of(i);
        });
        cardinality_total += make_int(card);
        rank_total += make_int(ranks);
        const Int size = make_int(sum) - make_int(card) * make_int(card - 1) / 2;
        size_total += size;
        if (size > max_seen) {
            max_seen = size;
            argmax.clear();
        }
        if (size == max_seen) {
            argmax.insert(partition_of_ideal(poset, members));
        }
        if (collect_image) {
            image.insert(partition_of_ideal(poset, members));
        }
    });

    const std::string at = "s=" + std::to_string(s);
    expect(make_int(ideal_count) == core_count(s), at + ": ideal count != recurrence count");
    expect(make_int(ideal_count) == motzkin(s), at + ": ideal count != binomial-catalan sum");
    expect(cardinality_total == ideal_cardinality_sum(s), at + ": cardinality sum mismatch");
    expect(rank_total == ideal_rank_sum(s), at + ": rank sum mismatch");
    const Int h = core_size_sum(s);
    expect(size_total == h, at + ": size sum != recurrence");
    expect(h == core_size_sum_closed_binomial(s), at + ": recurrence != closed binomial form");
    expect(h == core_size_sum_closed_catalan(s), at + ": recurrence != closed catalan form");
    expect(h == series(SeriesId::H, static_cast<std::size_t>(s) + 1).coeffs.back(),
           at + ": recurrence != series coefficient");
    if (s >= 3) {
        expect(h == core_size_sum_three_term(s), at + ": recurrence != three-term recurrence");
    }
    expect(max_seen == max_size(s), at + ": max ideal size != closed form");

    // Rank-size identity for the poset itself.
    const long long m = (s + 1) / 2;
    const long long expected_card = (s % 2 == 1) ? m * m - m : m * m;
    expect(static_cast<long long>(poset.size()) == expected_card, at + ": poset cardinality mismatch");

    if (s >= 3) {
        const MaxSizeReport report = max_size_report(s);
        std::set<Partition> witnesses(report.witnesses.begin(), report.witnesses.end());
        expect(witnesses == argmax, at + ": maximizer set != classified witnesses");
    }

    bool subset_checked = false;
    if (poset.size() <= 20) {
        const auto scanned = ideals_by_subset_scan(poset);
        const auto enumerated = all_ideals(poset);
        expect(scanned == enumerated, at + ": subset scan and enumeration disagree");
        subset_checked = true;
    }

    bool scan_checked = false;
    if (collect_image) {
        std::set<Partition> scanned;
        for_each_core_up_to(poset.generators(), n_max, [&](const Partition& p) {
            scanned.insert(p);
        });
        expect(scanned == image, at + ": hook-length scan and ideal image disagree");
        scan_checked = true;
    }

    out << "s=" << s << " ideals=" << ideal_count << " h=" << size_total.get_str()
        << " max=" << max_seen.get_str() << (subset_checked ? " subset" : "")
        << (scan_checked ? " scan" : "") << " ok\n";
}

void verify_pair(long long a, long long b, std::ostream& out) {
    const CorePoset poset = build_poset(CoreTuple({a, b}));
    const auto ideals = all_ideals(poset);
    const std::string at = "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
    expect(Int(static_cast<unsigned long>(ideals.size())) == pair_core_count(a, b),
           at + ": ideal count != binomial formula");

    Int max_seen = -1;
    unsigned long ties = 0;
    for (const auto& members : ideals) {
        const Int size = ideal_partition_size(poset, members);
        if (size > max_seen) {
            max_seen = size;
            ties = 0;
        }
        if (size == max_seen) ++ties;
    }
    expect(max_seen == pair_core_max_size(a, b), at + ": max size != closed form");
    expect(ties == 1, at + ": maximum size is not attained uniquely");

    if (poset.size() <= 20) {
        expect(ideals_by_subset_scan(poset) == ideals, at + ": subset scan disagrees");
    }
    out << "pair (" << a << "," << b << ") ideals=" << ideals.size()
        << " max=" << max_seen.get_str() << " ok\n";
}

int cmd_verify(long long s_max, long long n_max, std::ostream& out) {
    if (s_max < 0) throw std::invalid_argument("verify requires --s-max >= 0");
    if (n_max < 0) throw std::invalid_argument("verify requires --n-max >= 0");
    try {
        for (long long s = 0; s <= s_max; ++s) {
            verify_triple(s, n_max, out);
        }
        for (long long a = 2; a <= 13; ++a) {
            for (long long b = a + 1; a + b <= 13; ++b) {
                if (std::gcd(a, b) != 1) continue;
                verify_pair(a, b, out);
            }
        }
    } catch (const Mismatch& m) {
        out << "MISMATCH: " << m.message << "\n";
        return 1;
    }
    out << "verify: all checks passed (s-max=" << s_max << ", n-max=" << n_max << ")\n";
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact enumeration of simultaneous core partitions via poset order ideals"};
    app.require_subcommand(1);

    long long s = 0;
    std::vector<long long> gens;
    std::string format = "text";
    std::string method = "rec";
    bool check = false;
    bool dot = false;
    unsigned digits = 0;
    long long limit = -1;
    long long s_max = 0;
    long long n_max = 40;

    auto* count_cmd = app.add_subcommand("count", "number of (s, s+1, s+2)-core partitions");
    count_cmd->add_option("--s", s, "parameter s")->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* max_cmd = app.add_subcommand("max-size", "maximum core size with all maximizers (JSON)");
    max_cmd->add_option("--s", s, "parameter s (>= 3)")->required();

    auto* sum_cmd = app.add_subcommand("sum-sizes", "total size of all (s, s+1, s+2)-cores");
    sum_cmd->add_option("--s", s, "parameter s")->required()->check(CLI::NonNegativeNumber);
    sum_cmd->add_option("--method", method)->check(CLI::IsMember({"rec", "closed", "series", "rec3"}));
    sum_cmd->add_flag("--check", check, "assert that all computation paths agree");
    sum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* avg_cmd = app.add_subcommand("avg-size", "average core size as an exact rational");
    avg_cmd->add_option("--s", s, "parameter s")->required()->check(CLI::NonNegativeNumber);
    avg_cmd->add_option("--digits", digits, "also print a decimal rendering with this many digits");
    avg_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "stream (ideal, partition, size) records");
    enum_cmd->add_option("--gens", gens, "comma-separated generators, e.g. 3,4")
        ->required()
        ->delimiter(',');
    enum_cmd->add_option("--limit", limit, "stop after this many records");
    enum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* poset_cmd = app.add_subcommand("poset", "poset structure or Hasse diagram");
    poset_cmd->add_option("--gens", gens, "comma-separated generators")->required()->delimiter(',');
    poset_cmd->add_flag("--dot", dot, "emit the Hasse diagram in DOT format");

    auto* table_cmd = app.add_subcommand("table", "rows (s, r, l, h, avg) for s = 0..s-max");
    table_cmd->add_option("--s-max", s_max, "largest s")->required();
    std::string table_format = "csv";
    table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run the brute-force oracle suite");
    verify_cmd->add_option("--s-max", s_max, "largest s")->required();
    verify_cmd->add_option("--n-max", n_max,
                           "size bound for the hook-length scan (default 40)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (count_cmd->parsed()) return cmd_count(s, format, out);
        if (max_cmd->parsed()) return cmd_max_size(s, out);
        if (sum_cmd->parsed()) return cmd_sum_sizes(s, method, check, format, out, err);
        if (avg_cmd->parsed()) return cmd_avg_size(s, digits, format, out);
        if (enum_cmd->parsed()) return cmd_enumerate(gens, limit, format, out);
        if (poset_cmd->parsed()) return cmd_poset(gens, dot, out);
        if (table_cmd->parsed()) return cmd_table(s_max, table_format, out);
        if (verify_cmd->parsed()) return cmd_verify(s_max, n_max, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace cores
