#include "rcdim/agraph.hpp"
#include "rcdim/comb.hpp"
#include "rcdim/defaults.hpp"
#include "rcdim/hankel.hpp"
#include "rcdim/ledger.hpp"
#include "rcdim/strata.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

// cpp_int <-> python int, via decimal strings (exact at any size)
py::int_ to_py(const rcdim::Int& v) { return py::int_(py::str(v.str())); }

rcdim::Int to_int(const py::int_& v) {
    const py::str repr(static_cast<py::handle>(v));
    return rcdim::Int(static_cast<std::string>(repr));
}

py::object to_py(const rcdim::Rat& v) {
    const rcdim::Int num = boost::multiprecision::numerator(v);
    const rcdim::Int den = boost::multiprecision::denominator(v);
    if (den == 1) return to_py(num);
    return py::module_::import("fractions")
        .attr("Fraction")(to_py(num), to_py(den));
}

std::vector<rcdim::Int> to_int_vec(const std::vector<py::int_>& v) {
    std::vector<rcdim::Int> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_int(x));
    return out;
}

py::list to_py_vec(const std::vector<rcdim::Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(rcdim, m) {
    m.doc() = "exact dimension-count checks for rational curves on hypersurfaces";
    m.attr("DEFAULT_SEED") = py::int_(rcdim::default_seed);

    // ---- agraph -------------------------------------------------------
    auto ag = m.def_submodule("agraph", "stable A-graphs");
    using rcdim::agraph::AmbientContext;
    using rcdim::agraph::StableAGraph;

    py::class_<StableAGraph>(ag, "StableAGraph")
        .def(py::init([](std::vector<std::pair<int, int>> vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::vector<std::pair<int, int>> tails) {
                 StableAGraph g;
                 g.vertices = std::move(vertices);
                 g.edges = std::move(edges);
                 g.tails = std::move(tails);
                 return g;
             }),
             py::arg("vertices"), py::arg("edges") = std::vector<std::pair<int, int>>{},
             py::arg("tails") = std::vector<std::pair<int, int>>{})
        .def_readwrite("vertices", &StableAGraph::vertices)
        .def_readwrite("edges", &StableAGraph::edges)
        .def_readwrite("tails", &StableAGraph::tails)
        .def("beta_total", &StableAGraph::beta_total)
        .def("__eq__", [](const StableAGraph& a, const StableAGraph& b) { return a == b; })
        .def("__repr__", [](const StableAGraph& g) {
            return "StableAGraph(" + std::to_string(g.vertices.size()) + " vertices)";
        });

    py::class_<AmbientContext>(ag, "AmbientContext")
        .def(py::init<int, int>(), py::arg("n"), py::arg("d"))
        .def_readonly("n", &AmbientContext::n)
        .def_readonly("d", &AmbientContext::d)
        .def("dim_x", &AmbientContext::dim_x);

    ag.def("validate", [](const StableAGraph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : rcdim::agraph::validate(g).violations)
            out.emplace_back(v.name, v.detail);
        return out;
    });
    ag.def("expected_dim", &rcdim::agraph::expected_dim, py::arg("g"), py::arg("ctx"));
    ag.def("flag_count", &rcdim::agraph::flag_count);
    ag.def("is_basic", &rcdim::agraph::is_basic);
    ag.def("is_nondegenerate", &rcdim::agraph::is_nondegenerate);
    ag.def("enumerate_nondegenerate_basic", &rcdim::agraph::enumerate_nondegenerate_basic,
           py::arg("e"));
    ag.def("chain_to_comb", &rcdim::agraph::chain_to_comb);
    ag.def("make_single_vertex", &rcdim::agraph::make_single_vertex, py::arg("beta"),
           py::arg("tails"));
    ag.def("make_chain", &rcdim::agraph::make_chain, py::arg("e"));
    ag.def("make_comb", &rcdim::agraph::make_comb, py::arg("e"));
    ag.def("canonical_form", &rcdim::agraph::canonical_form);
    ag.def("to_record", &rcdim::agraph::to_record);
    ag.def("from_record", &rcdim::agraph::from_record);

    // ---- ledger -------------------------------------------------------
    auto lg = m.def_submodule("ledger", "codimension ledger");
    lg.def("expected_fiber_dim", [](int n, int d, int e) {
        return to_py(rcdim::ledger::expected_fiber_dim(n, d, e));
    });
    lg.def("codim_s1", [](int n) { return to_py(rcdim::ledger::codim_s1(n)); });
    lg.def("comparison_constants", [](int n, int d) {
        const auto c = rcdim::ledger::comparison_constants(n, d);
        return py::make_tuple(to_py(c.singular_line_codim), to_py(c.ss_codim));
    });
    lg.def("step_bound", [](int n, int d, int e) {
        return to_py(rcdim::ledger::step_bound(n, d, e));
    });
    lg.def("residual", [](int n, int e) { return to_py(rcdim::ledger::residual(n, e)); });
    lg.def("pgl_dim_floor", [](int n) { return to_py(rcdim::ledger::pgl_dim_floor(n)); });
    lg.def("bendbreak_threshold",
           [](int n) { return to_py(rcdim::ledger::bendbreak_threshold(n)); });

    py::class_<rcdim::ledger::BoundReport>(lg, "BoundReport")
        .def_readonly("n", &rcdim::ledger::BoundReport::n)
        .def_property_readonly("max_e_quadratic",
                               [](const rcdim::ledger::BoundReport& r) -> py::object {
                                   if (r.max_e_quadratic) return py::int_(*r.max_e_quadratic);
                                   return py::none();
                               })
        .def_property_readonly("max_e_closed_form",
                               [](const rcdim::ledger::BoundReport& r) -> py::object {
                                   using rcdim::ledger::ClosedFormKind;
                                   if (r.closed_form_kind == ClosedFormKind::value)
                                       return py::int_(r.max_e_closed_form);
                                   if (r.closed_form_kind == ClosedFormKind::ill_defined)
                                       return py::str("ill-defined");
                                   return py::none();
                               })
        .def_readonly("agreement", &rcdim::ledger::BoundReport::agreement)
        .def_readonly("note", &rcdim::ledger::BoundReport::note);
    lg.def("max_level_degree", &rcdim::ledger::max_level_degree, py::arg("n"));

    py::class_<rcdim::ledger::LedgerRow>(lg, "LedgerRow")
        .def_readonly("e", &rcdim::ledger::LedgerRow::e)
        .def_property_readonly("codim_lower_bound",
                               [](const rcdim::ledger::LedgerRow& r) {
                                   return to_py(r.codim_lower_bound);
                               })
        .def_property_readonly("step_bound_applied",
                               [](const rcdim::ledger::LedgerRow& r) {
                                   return to_py(r.step_bound_applied);
                               })
        .def_property_readonly("provenance",
                               [](const rcdim::ledger::LedgerRow& r) {
                                   return std::string(rcdim::ledger::provenance_name(r.provenance));
                               })
        .def_readonly("exhausted", &rcdim::ledger::LedgerRow::exhausted);

    py::class_<rcdim::ledger::CodimLedger>(lg, "CodimLedger")
        .def_readonly("n", &rcdim::ledger::CodimLedger::n)
        .def_readonly("d", &rcdim::ledger::CodimLedger::d)
        .def_readonly("rows", &rcdim::ledger::CodimLedger::rows);
    lg.def("compute_ledger", &rcdim::ledger::CodimLedger::compute, py::arg("n"), py::arg("d"),
           py::arg("e_max"));

    // ---- hankel -------------------------------------------------------
    auto hk = m.def_submodule("hankel", "catalecticant rank checks");
    using rcdim::hankel::HankelInstance;
    using rcdim::hankel::SecantPoint;

    py::class_<HankelInstance>(hk, "HankelInstance")
        .def(py::init([](int a, int b, const std::vector<py::int_>& c) {
                 return HankelInstance(a, b, to_int_vec(c));
             }),
             py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readonly("a", &HankelInstance::a)
        .def_readonly("b", &HankelInstance::b)
        .def_property_readonly("c", [](const HankelInstance& h) { return to_py_vec(h.c); });

    py::class_<SecantPoint>(hk, "SecantPoint")
        .def(py::init([](const std::vector<std::pair<py::int_, py::int_>>& points,
                         const std::vector<py::int_>& weights) {
                 std::vector<SecantPoint::P1> ps;
                 for (const auto& [s, t] : points) ps.push_back({to_int(s), to_int(t)});
                 return SecantPoint(std::move(ps), to_int_vec(weights));
             }),
             py::arg("points"), py::arg("weights"))
        .def_property_readonly("ell", &SecantPoint::ell);

    hk.def("hankel_matrix", [](const HankelInstance& h) {
        py::list rows;
        for (const auto& row : rcdim::hankel::hankel_matrix(h)) rows.append(to_py_vec(row));
        return rows;
    });
    hk.def("rank_exact", [](const std::vector<std::vector<py::int_>>& m) {
        rcdim::hankel::Matrix mm;
        for (const auto& row : m) mm.push_back(to_int_vec(row));
        return rcdim::hankel::rank_exact(mm);
    });
    hk.def("rnc_functional", [](int degree, const py::int_& s, const py::int_& t) {
        return to_py_vec(rcdim::hankel::rnc_functional(degree, to_int(s), to_int(t)));
    });
    hk.def("secant_sample", &rcdim::hankel::secant_sample, py::arg("a"), py::arg("b"),
           py::arg("sp"));
    hk.def("codim_dv", &rcdim::hankel::codim_dv);
    hk.def("dv_basis", [](const HankelInstance& h) {
        py::list out;
        for (const auto& f : rcdim::hankel::dv_basis(h)) out.append(to_py_vec(f));
        return out;
    });
    hk.def("multiplication_recheck",
           [](const HankelInstance& h, const std::vector<py::int_>& f) {
               return rcdim::hankel::multiplication_recheck(h, to_int_vec(f));
           });
    hk.def("sample_secant_point", &rcdim::hankel::sample_secant_point, py::arg("ell"),
           py::arg("seed"));

    py::class_<rcdim::hankel::VerifyReport>(hk, "VerifyReport")
        .def_readonly("a", &rcdim::hankel::VerifyReport::a)
        .def_readonly("b", &rcdim::hankel::VerifyReport::b)
        .def_readonly("ell", &rcdim::hankel::VerifyReport::ell)
        .def_readonly("trials", &rcdim::hankel::VerifyReport::trials)
        .def_readonly("seed", &rcdim::hankel::VerifyReport::seed)
        .def_readonly("observed_codims", &rcdim::hankel::VerifyReport::observed_codims)
        .def_readonly("formula_min_abl", &rcdim::hankel::VerifyReport::formula_min_abl)
        .def_readonly("formula_min_a1b1l", &rcdim::hankel::VerifyReport::formula_min_a1b1l)
        .def_readonly("matched_abl", &rcdim::hankel::VerifyReport::matched_abl)
        .def_readonly("matched_a1b1l", &rcdim::hankel::VerifyReport::matched_a1b1l)
        .def_readonly("kernel_recheck_ok", &rcdim::hankel::VerifyReport::kernel_recheck_ok)
        .def_property_readonly("degenerate_sample",
                               [](const rcdim::hankel::VerifyReport& r) -> py::object {
                                   if (r.degenerate_sample) return py::str(*r.degenerate_sample);
                                   return py::none();
                               });
    hk.def("verify_lemma", &rcdim::hankel::verify_lemma, py::arg("a"), py::arg("b"),
           py::arg("ell"), py::arg("trials"), py::arg("seed"));

    // ---- strata -------------------------------------------------------
    auto st = m.def_submodule("strata", "secant-stratum dimension audit");
    st.def("dim_w", &rcdim::strata::dim_w, py::arg("a"));
    st.def("stratum_dims", [](int d) {
        const auto s = rcdim::strata::stratum_dims(d);
        return py::make_tuple(s.s1, s.s2, s.s3_upper, s.ambient);
    });
    st.def("fiber_codim", &rcdim::strata::fiber_codim, py::arg("n"), py::arg("ell"));
    st.def("per_factor_codim_sum", &rcdim::strata::per_factor_codim_sum, py::arg("n"),
           py::arg("d"), py::arg("ell"));
    st.def("case_vacuous", &rcdim::strata::case_vacuous, py::arg("d"), py::arg("ell"));
    st.def("case_margins", [](int n, int d) {
        const auto mm = rcdim::strata::case_margins(n, d);
        return py::make_tuple(mm[0], mm[1], mm[2], mm[3]);
    });

    py::class_<rcdim::strata::CaseRecord>(st, "CaseRecord")
        .def_readonly("stratum_name", &rcdim::strata::CaseRecord::stratum_name)
        .def_readonly("stratum_dim", &rcdim::strata::CaseRecord::stratum_dim)
        .def_readonly("fiber_codim", &rcdim::strata::CaseRecord::fiber_codim)
        .def_readonly("margin", &rcdim::strata::CaseRecord::margin)
        .def_readonly("vacuous", &rcdim::strata::CaseRecord::vacuous);
    py::class_<rcdim::strata::StrataAudit>(st, "StrataAudit")
        .def_readonly("n", &rcdim::strata::StrataAudit::n)
        .def_readonly("d", &rcdim::strata::StrataAudit::d)
        .def_property_readonly("cases",
                               [](const rcdim::strata::StrataAudit& a) {
                                   return std::vector<rcdim::strata::CaseRecord>(
                                       a.cases.begin(), a.cases.end());
                               })
        .def_readonly("passed", &rcdim::strata::StrataAudit::pass)
        .def_readonly("tight_cases", &rcdim::strata::StrataAudit::tight_cases)
        .def_readonly("min_margin", &rcdim::strata::StrataAudit::min_margin)
        .def_readonly("note", &rcdim::strata::StrataAudit::note);
    st.def("audit", &rcdim::strata::audit, py::arg("n"), py::arg("d"));

    // ---- comb ---------------------------------------------------------
    auto cb = m.def_submodule("comb", "comb relabeling connectivity");
    using rcdim::comb::CombConfig;
    using rcdim::comb::Move;

    py::class_<CombConfig>(cb, "CombConfig")
        .def(py::init([](std::vector<int> labels) {
                 CombConfig c;
                 c.e = static_cast<int>(labels.size());
                 c.labels = std::move(labels);
                 return c;
             }),
             py::arg("labels"))
        .def_readonly("e", &CombConfig::e)
        .def_readonly("labels", &CombConfig::labels)
        .def("degenerate", &CombConfig::degenerate);

    py::class_<Move>(cb, "Move")
        .def(py::init([](std::vector<int> subset, std::vector<int> replacement) {
                 return Move{std::move(subset), std::move(replacement)};
             }),
             py::arg("subset"), py::arg("replacement"))
        .def_readonly("subset", &Move::subset)
        .def_readonly("replacement", &Move::replacement);

    cb.def("is_legal", &rcdim::comb::is_legal, py::arg("config"), py::arg("move"), py::arg("k"));
    cb.def("apply", &rcdim::comb::apply, py::arg("config"), py::arg("move"), py::arg("k"));
    cb.def("legal_moves", &rcdim::comb::legal_moves, py::arg("config"), py::arg("k"));

    py::class_<rcdim::comb::ConnectivityReport>(cb, "ConnectivityReport")
        .def_readonly("e", &rcdim::comb::ConnectivityReport::e)
        .def_readonly("k", &rcdim::comb::ConnectivityReport::k)
        .def_readonly("reduced", &rcdim::comb::ConnectivityReport::reduced)
        .def_readonly("state_count", &rcdim::comb::ConnectivityReport::state_count)
        .def_readonly("connected", &rcdim::comb::ConnectivityReport::connected)
        .def_readonly("component_count", &rcdim::comb::ConnectivityReport::component_count)
        .def_readonly("component_sizes", &rcdim::comb::ConnectivityReport::component_sizes)
        .def_readonly("diameter", &rcdim::comb::ConnectivityReport::diameter)
        .def_readonly("diameter_computed", &rcdim::comb::ConnectivityReport::diameter_computed)
        .def_readonly("multiset_invariant", &rcdim::comb::ConnectivityReport::multiset_invariant)
        .def_readonly("note", &rcdim::comb::ConnectivityReport::note);
    cb.def("connectivity", &rcdim::comb::connectivity, py::arg("e"), py::arg("k"));
    cb.def("symmetry_reduced_connectivity", &rcdim::comb::symmetry_reduced_connectivity,
           py::arg("e"), py::arg("k"));
}
