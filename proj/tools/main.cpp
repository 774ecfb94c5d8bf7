#include "rcdim/agraph.hpp"
#include "rcdim/claims.hpp"
#include "rcdim/comb.hpp"
#include "rcdim/defaults.hpp"
#include "rcdim/hankel.hpp"
#include "rcdim/ledger.hpp"
#include "rcdim/report.hpp"
#include "rcdim/strata.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using rcdim::Int;
using rcdim::report::Json;
using rcdim::report::Report;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RCDIM_SEED")) {
        return std::stoull(env);
    }
    return rcdim::default_seed;
}

std::string one_line(std::string record) {
    std::string out;
    for (char c : record) {
        if (c == '\n') {
            if (!out.empty() && out.back() != ';') out += "; ";
        } else {
            out += c;
        }
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

rcdim::agraph::StableAGraph load_graph(const std::string& inline_record,
                                       const std::string& path) {
    if (!inline_record.empty()) return rcdim::agraph::from_record(inline_record);
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return rcdim::agraph::from_record(buf.str());
    }
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return rcdim::agraph::from_record(buf.str());
}

std::vector<std::vector<Int>> parse_matrix(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::string prepared = text;
    for (char& c : prepared) {
        if (c == ',') c = ' ';
        if (c == ';') c = '\n';
    }
    std::istringstream is(prepared);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) row.emplace_back(tok);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    for (const auto& row : rows) {
        if (row.size() != rows.front().size())
            throw std::invalid_argument("ragged matrix input");
    }
    return rows;
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::string prepared = text;
    for (char& c : prepared) {
        if (c == ',') c = ' ';
    }
    std::istringstream is(prepared);
    std::vector<Int> out;
    std::string tok;
    while (is >> tok) out.emplace_back(tok);
    return out;
}

// ---------------------------------------------------------------------------
// report builders
// ---------------------------------------------------------------------------

Report agraph_enum_report(int e, std::optional<int> n, std::optional<int> d) {
    namespace ag = rcdim::agraph;
    Report rep;
    rep.command = "agraph enum";
    rep.params["e"] = e;
    const auto graphs = ag::enumerate_nondegenerate_basic(e);
    int index = 0;
    for (const auto& g : graphs) {
        Json row;
        row["index"] = index++;
        row["record"] = one_line(ag::to_record(g));
        row["canonical"] = ag::canonical_form(g);
        if (n && d) {
            row["expected_dim"] = ag::expected_dim(g, ag::AmbientContext(*n, *d));
        }
        rep.rows.push_back(std::move(row));
    }
    rep.notes.push_back("isomorphism classes: " + std::to_string(graphs.size()));
    rep.citations.push_back(rcdim::claims::dim_formula);
    return rep;
}

Report agraph_dim_report(const rcdim::agraph::StableAGraph& g, int n, int d) {
    namespace ag = rcdim::agraph;
    const ag::AmbientContext ctx(n, d);
    Report rep;
    rep.command = "agraph dim";
    rep.params["n"] = n;
    rep.params["d"] = d;
    Json row;
    row["beta"] = g.beta_total();
    row["vertices"] = g.num_vertices();
    row["edges"] = g.num_edges();
    row["tails"] = g.num_tails();
    row["flag_count"] = ag::flag_count(g);
    row["expected_dim"] = ag::expected_dim(g, ctx);
    row["basic"] = ag::is_basic(g);
    row["nondegenerate"] = ag::is_nondegenerate(g);
    rep.rows.push_back(std::move(row));
    rep.citations.push_back(rcdim::claims::dim_formula);
    rep.citations.push_back(rcdim::claims::flag_identity);
    return rep;
}

Report agraph_validate_report(const rcdim::agraph::StableAGraph& g) {
    Report rep;
    rep.command = "agraph validate";
    const auto result = rcdim::agraph::validate(g);
    if (result.ok()) {
        Json row;
        row["ok"] = true;
        rep.rows.push_back(std::move(row));
    } else {
        for (const auto& v : result.violations) {
            Json row;
            row["ok"] = false;
            row["violation"] = v.name;
            row["detail"] = v.detail;
            rep.rows.push_back(std::move(row));
        }
        rep.discrepancy = true;
    }
    rep.citations.push_back(rcdim::claims::agraph_invariants);
    return rep;
}

Report ledger_compute_report(int n, std::optional<int> d_flag, std::optional<int> emax_flag) {
    namespace lg = rcdim::ledger;
    const int d = d_flag.value_or(n - 1);
    Report rep;
    rep.command = "ledger compute";
    rep.params["n"] = n;
    rep.params["d"] = d;

    const int e_max = emax_flag.value_or(n);
    rep.params["emax"] = e_max;

    if (d != n - 1) {
        // No base row away from d = n-1; report the per-step data only.
        for (int e = 2; e <= e_max; ++e) {
            Json row;
            row["e"] = e;
            const Int a = lg::expected_fiber_dim(n, d, e);
            row["expected_fiber_dim"] = a.str();
            row["step_bound"] = lg::step_bound(n, d, e).str();
            rep.rows.push_back(std::move(row));
        }
        rep.notes.push_back("base row unavailable: the 1-level codimension requires d = n-1 >= 7");
        rep.citations.push_back(rcdim::claims::step_bound);
        rep.citations.push_back(rcdim::claims::fiber_dim);
        return rep;
    }

    const auto bounds = lg::max_level_degree(n);
    if (n >= 8) {
        const auto ledger = lg::CodimLedger::compute(n, d, e_max);
        for (const auto& row_in : ledger.rows) {
            Json row;
            row["e"] = row_in.e;
            const Int a = lg::expected_fiber_dim(n, d, row_in.e);
            row["expected_fiber_dim"] = a.str();
            row["step_bound"] = row_in.step_bound_applied.str();
            row["codim_lower_bound"] = row_in.codim_lower_bound.str();
            row["provenance"] = lg::provenance_name(row_in.provenance);
            row["status"] = row_in.exhausted ? "ledger exhausted" : "ok";
            // documented intermediate quantities of the layeredness step
            row["fiber_dim_threshold"] = (Int(n) + a - 2).str();
            row["image_dim_bound"] = (Int(n) - a + 1).str();
            rep.rows.push_back(std::move(row));
        }
    } else {
        rep.notes.push_back("ledger chain not run for n <= 7");
    }
    if (!bounds.note.empty()) rep.notes.push_back(bounds.note);
    rep.notes.push_back("max_e_quadratic=" + bounds.quadratic_str() +
                        " max_e_closed_form=" + bounds.closed_form_str() +
                        " agreement=" + (bounds.agreement ? std::string("true") : std::string("false")));
    const auto cc = lg::comparison_constants(n, d);
    rep.notes.push_back("singular_line_codim=" + cc.singular_line_codim.str() +
                        " ss_codim=" + cc.ss_codim.str());
    rep.notes.push_back("pgl_dim_floor=" + lg::pgl_dim_floor(n).str() +
                        " bendbreak_threshold=" + lg::bendbreak_threshold(n).str());
    rep.citations.push_back(rcdim::claims::s1_codim);
    rep.citations.push_back(rcdim::claims::step_bound);
    rep.citations.push_back(rcdim::claims::residual);
    rep.citations.push_back(rcdim::claims::closed_form_bound);
    rep.discrepancy = !bounds.agreement;
    return rep;
}

Report ledger_sweep_report(int n_from, int n_to) {
    namespace lg = rcdim::ledger;
    if (n_from > n_to) throw std::invalid_argument("ledger sweep requires n-from <= n-to");
    Report rep;
    rep.command = "ledger sweep";
    rep.params["n_from"] = n_from;
    rep.params["n_to"] = n_to;
    for (int n = n_from; n <= n_to; ++n) {
        const auto bounds = lg::max_level_degree(n);
        Json row;
        row["n"] = n;
        row["max_e_quadratic"] = bounds.quadratic_str();
        row["max_e_closed_form"] = bounds.closed_form_str();
        row["agreement"] = bounds.agreement;
        row["note"] = bounds.note;
        rep.rows.push_back(std::move(row));
        if (!bounds.agreement) rep.discrepancy = true;
    }
    rep.citations.push_back(rcdim::claims::residual);
    rep.citations.push_back(rcdim::claims::closed_form_bound);
    if (rep.discrepancy) {
        rep.notes.push_back(
            "the residual-scan bound and the closed-form bound disagree on some rows; "
            "both are reported, neither is assumed");
    }
    return rep;
}

Report hankel_verify_report(int a, int b, int ell, int trials, std::uint64_t seed) {
    namespace hk = rcdim::hankel;
    const auto v = hk::verify_lemma(a, b, ell, trials, seed);
    Report rep;
    rep.command = "hankel verify";
    rep.params["a"] = a;
    rep.params["b"] = b;
    rep.params["ell"] = ell;
    rep.params["trials"] = trials;
    rep.params["seed"] = seed;
    Json row;
    row["a"] = a;
    row["b"] = b;
    row["ell"] = ell;
    row["trials"] = trials;
    std::string observed;
    for (const auto& [codim, count] : v.observed_codims) {
        if (!observed.empty()) observed += " ";
        observed += std::to_string(codim) + "x" + std::to_string(count);
    }
    row["observed_codims"] = observed;
    row["formula_min_abl"] = v.formula_min_abl;
    row["formula_min_a1b1l"] = v.formula_min_a1b1l;
    row["matched_min_abl"] = v.matched_abl;
    row["matched_min_a1b1l"] = v.matched_a1b1l;
    row["kernel_recheck_ok"] = v.kernel_recheck_ok;
    rep.rows.push_back(std::move(row));

    rep.citations.push_back(rcdim::claims::determinantal);
    rep.citations.push_back(rcdim::claims::determinantal_alt);
    if (!v.matched_abl && v.matched_a1b1l) {
        rep.notes.push_back("observed codimensions contradict min{a,b,l} and match "
                            "min{a+1,b+1,l} on this instance");
    }
    if (v.degenerate_sample) {
        rep.notes.push_back("rank law violated by a non-generic sample: " + *v.degenerate_sample);
    }
    if (!v.kernel_recheck_ok) {
        rep.notes.push_back("kernel re-check FAILED: some basis vector does not multiply into V");
    }
    rep.discrepancy = !(v.matched_abl && v.matched_a1b1l) || !v.kernel_recheck_ok;
    return rep;
}

Report hankel_rank_report(const std::vector<std::vector<Int>>& m) {
    Report rep;
    rep.command = "hankel rank";
    Json row;
    row["rows"] = m.size();
    row["cols"] = m.empty() ? 0 : m.front().size();
    row["rank"] = rcdim::hankel::rank_exact(m);
    rep.rows.push_back(std::move(row));
    return rep;
}

Report hankel_instance_report(int a, int b, const std::vector<Int>& c) {
    namespace hk = rcdim::hankel;
    const hk::HankelInstance h(a, b, c);
    Report rep;
    rep.command = "hankel rank";
    rep.params["a"] = a;
    rep.params["b"] = b;
    Json row;
    row["rows"] = a + 1;
    row["cols"] = b + 1;
    const int codim = hk::codim_dv(h);
    row["rank"] = codim;
    row["codim_dv"] = codim;
    row["kernel_dim"] = b + 1 - codim;
    std::string basis;
    for (const auto& f : hk::dv_basis(h)) {
        if (!basis.empty()) basis += "; ";
        std::string vec;
        for (const auto& x : f) {
            if (!vec.empty()) vec += " ";
            vec += x.str();
        }
        basis += vec;
    }
    row["kernel_basis"] = basis;
    rep.rows.push_back(std::move(row));
    rep.citations.push_back(rcdim::claims::determinantal);
    return rep;
}

Report strata_audit_report(int n, int d) {
    namespace st = rcdim::strata;
    const auto a = st::audit(n, d);
    Report rep;
    rep.command = "strata audit";
    rep.params["n"] = n;
    rep.params["d"] = d;
    for (int i = 0; i < 4; ++i) {
        const auto& c = a.cases[i];
        Json row;
        row["case"] = i + 1;
        row["stratum"] = c.stratum_name;
        row["stratum_dim"] = c.stratum_dim;
        row["fiber_codim"] = c.fiber_codim;
        row["margin"] = c.margin;
        row["vacuous"] = c.vacuous;
        if (d >= 3) {
            const long long sum = st::per_factor_codim_sum(n, d, i + 1);
            row["per_factor_sum"] = sum;
            row["cross_check"] = c.vacuous          ? "vacuous"
                                 : sum == c.fiber_codim ? "ok"
                                                        : "mismatch";
        }
        rep.rows.push_back(std::move(row));
    }
    std::string tight;
    for (int idx : a.tight_cases) {
        if (!tight.empty()) tight += ",";
        tight += std::to_string(idx);
    }
    rep.notes.push_back("verdict: " + std::string(a.pass ? "pass" : "fail") +
                        "; min margin " + std::to_string(a.min_margin) +
                        " at case(s) " + tight);
    if (!a.note.empty()) rep.notes.push_back(a.note);
    rep.citations.push_back(rcdim::claims::multiplication);
    rep.citations.push_back(rcdim::claims::determinantal_alt);
    rep.discrepancy = !a.pass;
    return rep;
}

Report strata_sweep_report(int n_max) {
    namespace st = rcdim::strata;
    if (n_max < 4) throw std::invalid_argument("strata sweep requires n-max >= 4");
    Report rep;
    rep.command = "strata sweep";
    rep.params["n_max"] = n_max;
    for (int n = 4; n <= n_max; ++n) {
        for (int d = 2; d < n; ++d) {
            const auto a = st::audit(n, d);
            Json row;
            row["n"] = n;
            row["d"] = d;
            row["margin_1"] = a.cases[0].margin;
            row["margin_2"] = a.cases[1].margin;
            row["margin_3"] = a.cases[2].margin;
            row["margin_4"] = a.cases[3].margin;
            row["min_margin"] = a.min_margin;
            row["pass"] = a.pass;
            rep.rows.push_back(std::move(row));
            if (!a.pass) rep.discrepancy = true;
        }
    }
    rep.notes.push_back(rep.discrepancy
                            ? "some (n, d) fails the margin-2 audit"
                            : "all margins at least 2 over the sweep");
    rep.citations.push_back(rcdim::claims::multiplication);
    return rep;
}

Report comb_connect_report(int e, int k, bool reduced) {
    namespace cb = rcdim::comb;
    const auto census = reduced ? cb::symmetry_reduced_connectivity(e, k)
                                : cb::connectivity(e, k);
    Report rep;
    rep.command = "comb connect";
    rep.params["e"] = e;
    rep.params["k"] = k;
    rep.params["reduced"] = reduced;
    Json row;
    row["e"] = e;
    row["k"] = k;
    row["reduced"] = reduced;
    row["state_count"] = census.state_count;
    row["connected"] = census.connected;
    row["component_count"] = census.component_count;
    std::string sizes;
    const std::size_t cap = 12;
    for (std::size_t i = 0; i < census.component_sizes.size() && i < cap; ++i) {
        if (!sizes.empty()) sizes += " ";
        sizes += std::to_string(census.component_sizes[i]);
    }
    if (census.component_sizes.size() > cap) sizes += " ...";
    row["component_sizes"] = sizes;
    row["diameter"] = census.diameter;
    row["diameter_computed"] = census.diameter_computed;
    rep.rows.push_back(std::move(row));
    if (!census.note.empty()) rep.notes.push_back(census.note);
    rep.citations.push_back(rcdim::claims::comb_connectivity);
    rep.discrepancy = !census.connected;
    if (rep.discrepancy) {
        rep.notes.push_back("census is disconnected: a reportable finding, not a failure");
    }
    return rep;
}

void emit(const Report& rep, const std::string& format, const std::string& output) {
    const std::string text = rcdim::report::render(rep, rcdim::report::parse_format(format));
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file " + output);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimension-count checks for rational curves on hypersurfaces"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output;
    app.add_option("--format", format, "text|json|csv")->capture_default_str();
    app.add_option("-o,--output", output, "write the report to a file");

    std::optional<Report> result;

    // agraph ------------------------------------------------------------
    auto* agraph_cmd = app.add_subcommand("agraph", "stable A-graph operations");
    agraph_cmd->require_subcommand(1);

    {
        auto* enum_cmd = agraph_cmd->add_subcommand("enum", "enumerate nondegenerate basic graphs");
        auto e = std::make_shared<int>(1);
        auto n = std::make_shared<std::optional<int>>();
        auto d = std::make_shared<std::optional<int>>();
        enum_cmd->add_option("--e", *e, "number of beta-1 vertices")->required();
        enum_cmd->add_option("--n", *n, "ambient dimension (adds expected_dim)");
        enum_cmd->add_option("--d", *d, "hypersurface degree");
        enum_cmd->callback([&result, e, n, d] { result = agraph_enum_report(*e, *n, *d); });
    }
    {
        auto* dim_cmd = agraph_cmd->add_subcommand("dim", "expected dimension of a graph");
        auto n = std::make_shared<int>(0);
        auto d = std::make_shared<int>(0);
        auto graph = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        dim_cmd->add_option("--n", *n, "ambient dimension")->required();
        dim_cmd->add_option("--d", *d, "hypersurface degree")->required();
        dim_cmd->add_option("--graph", *graph, "inline record ('; ' separates lines)");
        dim_cmd->add_option("--file", *file, "record file (default: stdin)");
        dim_cmd->callback([&result, n, d, graph, file] {
            result = agraph_dim_report(load_graph(*graph, *file), *n, *d);
        });
    }
    {
        auto* val_cmd = agraph_cmd->add_subcommand("validate", "check graph invariants");
        auto graph = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        val_cmd->add_option("--graph", *graph, "inline record ('; ' separates lines)");
        val_cmd->add_option("--file", *file, "record file (default: stdin)");
        val_cmd->callback([&result, graph, file] {
            result = agraph_validate_report(load_graph(*graph, *file));
        });
    }

    // ledger ------------------------------------------------------------
    auto* ledger_cmd = app.add_subcommand("ledger", "codimension ledger");
    ledger_cmd->require_subcommand(1);
    {
        auto* compute_cmd = ledger_cmd->add_subcommand("compute", "ledger chain for one n");
        auto n = std::make_shared<int>(0);
        auto d = std::make_shared<std::optional<int>>();
        auto emax = std::make_shared<std::optional<int>>();
        compute_cmd->add_option("--n", *n, "ambient dimension")->required();
        compute_cmd->add_option("--d", *d, "hypersurface degree (default n-1)");
        compute_cmd->add_option("--emax", *emax, "last ledger row (default n)");
        compute_cmd->callback(
            [&result, n, d, emax] { result = ledger_compute_report(*n, *d, *emax); });
    }
    {
        auto* sweep_cmd = ledger_cmd->add_subcommand("sweep", "bound report per n");
        auto n_from = std::make_shared<int>(0);
        auto n_to = std::make_shared<int>(0);
        sweep_cmd->add_option("--n-from", *n_from, "first n")->required();
        sweep_cmd->add_option("--n-to", *n_to, "last n")->required();
        sweep_cmd->callback(
            [&result, n_from, n_to] { result = ledger_sweep_report(*n_from, *n_to); });
    }

    // hankel ------------------------------------------------------------
    auto* hankel_cmd = app.add_subcommand("hankel", "catalecticant rank checks");
    hankel_cmd->require_subcommand(1);
    {
        auto* verify_cmd = hankel_cmd->add_subcommand("verify", "seeded rank-law trials");
        auto a = std::make_shared<int>(0);
        auto b = std::make_shared<int>(0);
        auto ell = std::make_shared<int>(0);
        auto trials = std::make_shared<int>(100);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        verify_cmd->add_option("--a", *a, "left factor degree")->required();
        verify_cmd->add_option("--b", *b, "right factor degree")->required();
        verify_cmd->add_option("--ell", *ell, "secant stratum index")->required();
        verify_cmd->add_option("--trials", *trials, "number of samples")->capture_default_str();
        verify_cmd->add_option("--seed", *seed, "RNG seed (default: RCDIM_SEED or built-in)");
        verify_cmd->callback([&result, a, b, ell, trials, seed] {
            result = hankel_verify_report(*a, *b, *ell, *trials, resolve_seed(*seed));
        });
    }
    {
        auto* rank_cmd = hankel_cmd->add_subcommand("rank", "exact rank of a matrix");
        auto matrix = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        auto a = std::make_shared<std::optional<int>>();
        auto b = std::make_shared<std::optional<int>>();
        auto coeffs = std::make_shared<std::string>();
        rank_cmd->add_option("--matrix", *matrix, "rows split by ';', entries by space/comma");
        rank_cmd->add_option("--file", *file, "matrix file");
        rank_cmd->add_option("--a", *a, "Hankel shape a (with --b and --c)");
        rank_cmd->add_option("--b", *b, "Hankel shape b");
        rank_cmd->add_option("--c", *coeffs, "Hankel coefficients c_0..c_{a+b}");
        rank_cmd->callback([&result, matrix, file, a, b, coeffs] {
            if (*a && *b) {
                result = hankel_instance_report(**a, **b, parse_int_list(*coeffs));
                return;
            }
            std::string text = *matrix;
            if (text.empty() && !file->empty()) {
                std::ifstream in(*file);
                if (!in) throw std::invalid_argument("cannot open " + *file);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            if (text.empty()) throw std::invalid_argument("need --matrix, --file, or --a/--b/--c");
            result = hankel_rank_report(parse_matrix(text));
        });
    }

    // strata ------------------------------------------------------------
    auto* strata_cmd = app.add_subcommand("strata", "secant-stratum dimension audit");
    strata_cmd->require_subcommand(1);
    {
        auto* audit_cmd = strata_cmd->add_subcommand("audit", "four-case margins for (n, d)");
        auto n = std::make_shared<int>(0);
        auto d = std::make_shared<int>(0);
        audit_cmd->add_option("--n", *n, "ambient dimension")->required();
        audit_cmd->add_option("--d", *d, "hypersurface degree")->required();
        audit_cmd->callback([&result, n, d] { result = strata_audit_report(*n, *d); });
    }
    {
        auto* sweep_cmd = strata_cmd->add_subcommand("sweep", "audit all 4 <= n <= n-max, 2 <= d < n");
        auto n_max = std::make_shared<int>(0);
        sweep_cmd->add_option("--n-max", *n_max, "largest n")->required();
        sweep_cmd->callback([&result, n_max] { result = strata_sweep_report(*n_max); });
    }

    // comb --------------------------------------------------------------
    auto* comb_cmd = app.add_subcommand("comb", "comb relabeling connectivity");
    comb_cmd->require_subcommand(1);
    {
        auto* connect_cmd = comb_cmd->add_subcommand("connect", "component census");
        auto e = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto reduced = std::make_shared<bool>(false);
        connect_cmd->add_option("--e", *e, "number of teeth")->required();
        connect_cmd->add_option("--k", *k, "alphabet size (lines through the point)")->required();
        connect_cmd->add_flag("--reduced", *reduced, "census on tooth-permutation orbits");
        connect_cmd->callback(
            [&result, e, k, reduced] { result = comb_connect_report(*e, *k, *reduced); });
    }

    // --format / --output live on the root app; let them appear anywhere
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (auto* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (!result) {
        std::cerr << "error: no subcommand executed\n";
        return 1;
    }
    try {
        emit(*result, format, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return result->discrepancy ? 2 : 0;
}
