#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cores/extremal.hpp"
#include "cores/oracle.hpp"
#include "cores/poset.hpp"
#include "cores/sequences.hpp"

namespace py = pybind11;
using namespace cores;

namespace {

py::object to_py_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_py_fraction(const Rat& q) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(Int(q.get_num())), to_py_int(Int(q.get_den())));
}

Bitset ideal_from_values(const CorePoset& p, const std::vector<long long>& values) {
    Bitset members(p.size());
    for (long long v : values) {
        auto idx = p.index_of(v);
        if (!idx) throw std::invalid_argument("value is not a poset element: " + std::to_string(v));
        members.set(*idx);
    }
    return members;
}

}  // namespace

PYBIND11_MODULE(_cores, m) {
    m.doc() = "Exact enumeration of simultaneous core partitions via poset order ideals";

    // partition operations
    m.def("hook_lengths",
          [](const std::vector<long long>& parts) { return hook_lengths(Partition(parts)); },
          py::arg("parts"), "Hook length of every box, row by row.");
    m.def("beta_set",
          [](const std::vector<long long>& parts) { return beta_set(Partition(parts)).elements(); },
          py::arg("parts"), "First-column hook lengths, decreasing.");
    m.def("partition_from_beta",
          [](const std::vector<long long>& beta) {
              return partition_from_beta(BetaSet(beta)).parts();
          },
          py::arg("beta"));
    m.def("conjugate",
          [](const std::vector<long long>& parts) { return conjugate(Partition(parts)).parts(); },
          py::arg("parts"));
    m.def("is_core",
          [](const std::vector<long long>& parts, const std::vector<long long>& gens) {
              return is_core(Partition(parts), CoreTuple(gens));
          },
          py::arg("parts"), py::arg("gens"),
          "True iff no hook length is divisible by any generator.");
    m.def("partition_size",
          [](const std::vector<long long>& parts) { return to_py_int(Partition(parts).size()); },
          py::arg("parts"));

    // counting and summation
    m.def("catalan", [](long long k) { return to_py_int(catalan(k)); }, py::arg("k"));
    m.def("motzkin", [](long long s) { return to_py_int(motzkin(s)); }, py::arg("s"));
    m.def("core_count", [](long long s) { return to_py_int(core_count(s)); }, py::arg("s"),
          "Number of (s, s+1, s+2)-core partitions.");
    m.def("ideal_cardinality_sum",
          [](long long s) { return to_py_int(ideal_cardinality_sum(s)); }, py::arg("s"));
    m.def("ideal_rank_sum", [](long long s) { return to_py_int(ideal_rank_sum(s)); }, py::arg("s"));
    m.def("core_size_sum",
          [](long long s, const std::string& method) {
              if (method == "rec") return to_py_int(core_size_sum(s));
              if (method == "closed") return to_py_int(core_size_sum_closed_binomial(s));
              if (method == "closed2") return to_py_int(core_size_sum_closed_catalan(s));
              if (method == "rec3") return to_py_int(core_size_sum_three_term(s));
              if (method == "series") {
                  return to_py_int(series(SeriesId::H, static_cast<std::size_t>(s) + 1).coeffs.back());
              }
              throw std::invalid_argument("unknown method: " + method);
          },
          py::arg("s"), py::arg("method") = "rec",
          "Total size of all (s, s+1, s+2)-cores; method in "
          "{'rec', 'closed', 'closed2', 'rec3', 'series'}.");
    m.def("average_size", [](long long s) { return to_py_fraction(average_size(s)); }, py::arg("s"),
          "Average core size as a fractions.Fraction.");
    m.def("pair_core_count",
          [](long long s, long long t) { return to_py_int(pair_core_count(s, t)); }, py::arg("s"),
          py::arg("t"));
    m.def("pair_core_max_size",
          [](long long s, long long t) { return to_py_int(pair_core_max_size(s, t)); }, py::arg("s"),
          py::arg("t"));
    m.def("series_coefficients",
          [](const std::string& name, std::size_t n_terms) {
              py::list out;
              for (const Int& c : series(series_id_from_name(name), n_terms).coeffs) {
                  out.append(to_py_int(c));
              }
              return out;
          },
          py::arg("name"), py::arg("n_terms"),
          "Exact power-series coefficients; name in {'M', 'F', 'G', 'H'}.");

    // extremal results
    m.def("max_size", [](long long s) { return to_py_int(max_size(s)); }, py::arg("s"));
    m.def("max_core", [](long long s) { return max_core(s).parts(); }, py::arg("s"));
    m.def("max_size_report",
          [](long long s) {
              const MaxSizeReport rep = max_size_report(s);
              py::dict out;
              out["s"] = rep.s;
              out["max_size"] = to_py_int(rep.max_size);
              py::list witnesses;
              for (const auto& w : rep.witnesses) witnesses.append(w.parts());
              out["witnesses"] = witnesses;
              out["unique"] = rep.unique;
              out["self_conjugate"] = rep.self_conjugate;
              return out;
          },
          py::arg("s"));

    // brute-force oracle
    m.def("cores_up_to",
          [](const std::vector<long long>& gens, long long n_max) {
              py::list out;
              for_each_core_up_to(CoreTuple(gens), n_max,
                                  [&](const Partition& p) { out.append(p.parts()); });
              return out;
          },
          py::arg("gens"), py::arg("n_max"),
          "Every core partition of size <= n_max, by hook-length filtering.");

    py::class_<CorePoset>(m, "Poset")
        .def(py::init([](const std::vector<long long>& gens) {
                 return build_poset(CoreTuple(gens));
             }),
             py::arg("gens"))
        .def_static("triple", &build_triple_poset, py::arg("s"),
                    "The poset for generators (s, s+1, s+2).")
        .def("__len__", &CorePoset::size)
        .def("elements", [](const CorePoset& p) { return p.elements(); })
        .def("ranks",
             [](const CorePoset& p) {
                 std::vector<int> ranks(p.size());
                 for (std::size_t i = 0; i < p.size(); ++i) ranks[i] = p.rank_of(i);
                 return ranks;
             })
        .def("length", &CorePoset::length)
        .def("ideal_count", [](const CorePoset& p) { return to_py_int(make_int(count_ideals(p))); })
        .def("ideals",
             [](const CorePoset& p, long long limit) {
                 py::list out;
                 long long emitted = 0;
                 struct Stop {};
                 try {
                     for_each_ideal(p, [&](const Bitset& members) {
                         if (limit >= 0 && emitted >= limit) throw Stop{};
                         ++emitted;
                         out.append(ideal_values_desc(p, members));
                     });
                 } catch (const Stop&) {
                 }
                 return out;
             },
             py::arg("limit") = -1, "Order ideals as decreasing value lists, in enumeration order.")
        .def("partition_of_ideal",
             [](const CorePoset& p, const std::vector<long long>& values) {
                 return partition_of_ideal(p, ideal_from_values(p, values)).parts();
             },
             py::arg("ideal"))
        .def("is_order_ideal",
             [](const CorePoset& p, const std::vector<long long>& values) {
                 return is_order_ideal(p, ideal_from_values(p, values));
             },
             py::arg("ideal"))
        .def("hasse_dot", &hasse_dot);
}
