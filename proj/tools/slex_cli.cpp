// Command-line front end for the square-root-oscillator spectral library:
// single-point energies, rational resummation, the integration oracle,
// regeneration of the five published benchmark tables, and parameter sweeps.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "slex/report.hpp"
#include "slex/slex.hpp"

namespace {

using Real = long double;
using slex::report::ordered_json;

constexpr const char* k_schema = "slex/1";

struct cli_options {
    std::string format = "text";
    std::string out_path;
};

std::string num(Real v) { return slex::report::format_number(static_cast<double>(v)); }

std::string fixed(Real v, int decimals) {
    return slex::report::format_fixed(static_cast<double>(v), decimals);
}

std::string sci(Real v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2Le", v);
    return buf;
}

void write_output(const cli_options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw slex::error("output: cannot open " + opt.out_path);
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

// ---------------------------------------------------------------------------
// shared computation plumbing
// ---------------------------------------------------------------------------

struct point_spec {
    std::string label;
    Real alpha = 0;
    int l = 0;
};

struct point_data {
    point_spec spec;
    slex::expansion_context<Real> ctx;
    slex::energy_series<Real> es;
    bool has_dni = false;
    slex::oracle_result<Real> dni;
};

point_data compute_point(const point_spec& spec, int depth, bool with_dni, int mesh_n = 50000) {
    point_data d;
    d.spec = spec;
    d.ctx = slex::solve_context<Real>(spec.alpha, spec.l);
    d.es = slex::compute_energy_series<Real>(spec.alpha, spec.l, depth);
    if (with_dni) {
        slex::oracle_config<Real> cfg;
        cfg.alpha = spec.alpha;
        cfg.l = spec.l;
        cfg.mesh_n = mesh_n;
        if (spec.alpha > Real(0)) cfg.seed = d.es.partial_sum(4);
        d.dni = slex::solve_ground_state(cfg);
        d.has_dni = true;
    }
    return d;
}

// Independent points may be computed concurrently; results keep input order.
std::vector<point_data> compute_points(const std::vector<point_spec>& specs, int depth,
                                       bool with_dni, int mesh_n = 50000) {
    std::vector<std::future<point_data>> futures;
    futures.reserve(specs.size());
    for (const auto& s : specs)
        futures.push_back(std::async(std::launch::async, compute_point, s, depth, with_dni, mesh_n));
    std::vector<point_data> out;
    out.reserve(specs.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

ordered_json context_json(const point_data& d) {
    ordered_json j;
    j["alpha"] = static_cast<double>(d.spec.alpha);
    j["l"] = d.spec.l;
    j["q0"] = static_cast<double>(d.ctx.q0);
    j["omega"] = static_cast<double>(d.ctx.omega);
    j["beta"] = static_cast<double>(d.ctx.beta);
    j["lbar"] = static_cast<double>(d.ctx.lbar);
    j["Q"] = static_cast<double>(d.ctx.Q);
    j["eps_m2"] = static_cast<double>(d.es.eps_m2);
    j["normalization"] = static_cast<double>(d.es.normalization);
    ordered_json eps = ordered_json::array();
    for (const Real e : d.es.eps) eps.push_back(static_cast<double>(e));
    j["eps"] = std::move(eps);
    ordered_json ps = ordered_json::array();
    for (const Real p : d.es.partial_sums) ps.push_back(static_cast<double>(p));
    j["partial_sums"] = std::move(ps);
    return j;
}

ordered_json oracle_json(const slex::oracle_result<Real>& r) {
    ordered_json j;
    j["energy"] = static_cast<double>(r.energy);
    j["nodes"] = r.nodes;
    j["iterations"] = r.iterations;
    j["residual"] = static_cast<double>(r.residual);
    j["q_max"] = static_cast<double>(r.q_max);
    j["mesh_n"] = r.mesh_n;
    return j;
}

std::string render_kv_block(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::size_t w = 0;
    for (const auto& [k, v] : kv) w = std::max(w, k.size());
    std::string out;
    for (const auto& [k, v] : kv) {
        out += k;
        out.append(w - k.size() + 2, ' ');
        out += v;
        out += '\n';
    }
    return out;
}

std::string render_text_table(const std::string& title, const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());

    std::string out = title + "\n";
    const auto emit = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c > 0) out += "  ";
            if (c == 0) {  // label column, left-aligned
                out += r[c];
                out.append(w[c] - r[c].size(), ' ');
            } else {  // value columns, right-aligned
                out.append(w[c] - r[c].size(), ' ');
                out += r[c];
            }
        }
        // trim trailing padding
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
    return out;
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::string out = slex::report::csv_line(header);
    for (const auto& r : rows) out += slex::report::csv_line(r);
    return out;
}

// ---------------------------------------------------------------------------
// subcommand: energy
// ---------------------------------------------------------------------------

int run_energy(const cli_options& opt, Real alpha, int l, int terms) {
    const int depth = std::max(8, terms - 2);
    const auto d = compute_point({"", alpha, l}, depth, false);
    const Real value = d.es.partial_sum(terms);

    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = k_schema;
        j["command"] = "energy";
        j["params"]["alpha"] = static_cast<double>(alpha);
        j["params"]["l"] = l;
        j["params"]["terms"] = terms;
        j["context"] = context_json(d);
        j["value"] = static_cast<double>(value);
        write_output(opt, slex::report::canonical_dump(j));
    } else if (opt.format == "csv") {
        write_output(opt, render_csv({"alpha", "l", "terms", "q0", "omega", "beta", "lbar",
                                      "eps_m2", "energy"},
                                     {{num(alpha), std::to_string(l), std::to_string(terms),
                                       num(d.ctx.q0), num(d.ctx.omega), num(d.ctx.beta),
                                       num(d.ctx.lbar), num(d.es.eps_m2), num(value)}}));
    } else {
        write_output(opt, render_kv_block({{"alpha", num(alpha)},
                                           {"l", std::to_string(l)},
                                           {"terms", std::to_string(terms)},
                                           {"q0", num(d.ctx.q0)},
                                           {"omega", num(d.ctx.omega)},
                                           {"beta", num(d.ctx.beta)},
                                           {"lbar", num(d.ctx.lbar)},
                                           {"energy", num(value)}}));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: pade
// ---------------------------------------------------------------------------

int run_pade(const cli_options& opt, Real alpha, int l, int n, int m) {
    const int depth = std::max(8, n + m - 1);
    const auto d = compute_point({"", alpha, l}, depth, false);
    const Real value = slex::resummed_energy(d.ctx, d.es, n, m);
    const std::string label = "[" + std::to_string(n) + "," + std::to_string(m) + "]";

    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = k_schema;
        j["command"] = "pade";
        j["params"]["alpha"] = static_cast<double>(alpha);
        j["params"]["l"] = l;
        j["params"]["n"] = n;
        j["params"]["m"] = m;
        j["context"] = context_json(d);
        j["value"] = static_cast<double>(value);
        write_output(opt, slex::report::canonical_dump(j));
    } else if (opt.format == "csv") {
        write_output(opt, render_csv({"alpha", "l", "n", "m", "energy"},
                                     {{num(alpha), std::to_string(l), std::to_string(n),
                                       std::to_string(m), num(value)}}));
    } else {
        write_output(opt, render_kv_block({{"alpha", num(alpha)},
                                           {"l", std::to_string(l)},
                                           {"order", label},
                                           {"energy", num(value)}}));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: oracle
// ---------------------------------------------------------------------------

int run_oracle(const cli_options& opt, Real alpha, int l, int mesh_n, Real q_max) {
    slex::oracle_config<Real> cfg;
    cfg.alpha = alpha;
    cfg.l = l;
    cfg.mesh_n = mesh_n;
    cfg.q_max = q_max;
    if (alpha > Real(0))
        cfg.seed = slex::compute_energy_series<Real>(alpha, l, 8).partial_sum(4);
    const auto r = slex::solve_ground_state(cfg);

    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = k_schema;
        j["command"] = "oracle";
        j["params"]["alpha"] = static_cast<double>(alpha);
        j["params"]["l"] = l;
        j["params"]["mesh"] = mesh_n;
        j["params"]["qmax"] = static_cast<double>(q_max);
        j["seed"] = static_cast<double>(cfg.seed);
        j["result"] = oracle_json(r);
        write_output(opt, slex::report::canonical_dump(j));
    } else if (opt.format == "csv") {
        write_output(opt,
                     render_csv({"alpha", "l", "energy", "nodes", "iterations", "residual",
                                 "q_max", "mesh_n"},
                                {{num(alpha), std::to_string(l), num(r.energy),
                                  std::to_string(r.nodes), std::to_string(r.iterations),
                                  num(r.residual), num(r.q_max), std::to_string(r.mesh_n)}}));
    } else {
        write_output(opt, render_kv_block({{"alpha", num(alpha)},
                                           {"l", std::to_string(l)},
                                           {"energy", num(r.energy)},
                                           {"nodes", std::to_string(r.nodes)},
                                           {"iterations", std::to_string(r.iterations)},
                                           {"residual", sci(r.residual)},
                                           {"q_max", num(r.q_max)},
                                           {"mesh_n", std::to_string(r.mesh_n)}}));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: table
// ---------------------------------------------------------------------------

std::vector<point_spec> table_specs(const slex::benchmark::table_layout& lay) {
    std::vector<point_spec> specs;
    for (const int col : lay.columns) {
        if (lay.columns_are_l) {
            specs.push_back({"l=" + std::to_string(col), 0.5L, col});
        } else {
            const auto& c = slex::benchmark::couplings().at(static_cast<std::size_t>(col));
            specs.push_back({"alpha=" + c.label, Real(c.num) / Real(c.den), 0});
        }
    }
    return specs;
}

int run_table(const cli_options& opt, int id, bool with_oracle) {
    const auto& lay = slex::benchmark::layout(id);
    const bool needs_dni = lay.dni_row || lay.summary || with_oracle;
    const auto specs = table_specs(lay);
    const auto data = compute_points(specs, 8, needs_dni);
    const std::size_t ncol = data.size();

    // row assembly (shared by all output formats): label + one value per
    // point; a refused resummation (degenerate at the evaluation point)
    // yields an empty cell
    struct value_row {
        std::string label;
        std::vector<std::optional<Real>> values;
    };
    std::vector<value_row> rows;

    const auto try_resummed = [](const point_data& d, int n, int m) -> std::optional<Real> {
        try {
            return slex::resummed_energy(d.ctx, d.es, n, m);
        } catch (const slex::degeneracy_error&) {
            return std::nullopt;
        }
    };

    if (lay.summary) {
        // transposed layout: one row per coupling, columns K6 | [3,3] | DNI
        for (std::size_t i = 0; i < ncol; ++i) {
            const auto& d = data[i];
            const auto p33 = try_resummed(d, 3, 3);
            rows.push_back({d.spec.label, {d.es.partial_sum(6), p33, d.dni.energy}});
            if (with_oracle)
                rows.back().values.push_back(
                    p33 ? std::optional<Real>(std::abs(*p33 - d.dni.energy)) : std::nullopt);
        }
    } else if (lay.pade_rows) {
        for (const auto& [n, m] : slex::benchmark::pade_orders()) {
            value_row r;
            r.label = "[" + std::to_string(n) + "," + std::to_string(m) + "]";
            for (const auto& d : data) r.values.push_back(try_resummed(d, n, m));
            rows.push_back(std::move(r));
        }
    } else {
        for (int K = 1; K <= lay.terms; ++K) {
            value_row r;
            r.label = "K=" + std::to_string(K);
            for (const auto& d : data) r.values.push_back(d.es.partial_sum(K));
            rows.push_back(std::move(r));
        }
    }

    const bool dni_as_row = needs_dni && !lay.summary;
    if (dni_as_row) {
        value_row r{"DNI", {}};
        for (const auto& d : data) r.values.push_back(d.dni.energy);
        rows.push_back(std::move(r));
    }
    const bool defect_row = with_oracle && !lay.summary;
    if (defect_row) {
        // absolute gap between the last solver row and the integration oracle
        const auto& last = rows[rows.size() - 2];
        value_row r{"defect", {}};
        for (std::size_t i = 0; i < ncol; ++i)
            r.values.push_back(last.values[i]
                                   ? std::optional<Real>(std::abs(*last.values[i] -
                                                                  data[i].dni.energy))
                                   : std::nullopt);
        rows.push_back(std::move(r));
    }

    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = k_schema;
        j["command"] = "table";
        j["params"]["id"] = id;
        j["params"]["with_oracle"] = with_oracle;
        j["title"] = lay.title;
        ordered_json cols = ordered_json::array();
        for (const auto& d : data) {
            ordered_json c = context_json(d);
            ordered_json labeled;
            labeled["label"] = d.spec.label;
            labeled.update(c);
            if (d.has_dni) labeled["dni"] = oracle_json(d.dni);
            cols.push_back(std::move(labeled));
        }
        j["points"] = std::move(cols);
        ordered_json jr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["label"] = r.label;
            ordered_json vals = ordered_json::array();
            for (const auto& v : r.values)
                vals.push_back(v ? ordered_json(static_cast<double>(*v)) : ordered_json(nullptr));
            row["values"] = std::move(vals);
            jr.push_back(std::move(row));
        }
        j["rows"] = std::move(jr);
        write_output(opt, slex::report::canonical_dump(j));
        return 0;
    }

    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;
    if (lay.summary) {
        header = {"alpha", "K=6", "[3,3]", "DNI"};
        if (with_oracle) header.push_back("defect");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int dec = lay.decimals.at(i);
            const auto render = [&](const std::optional<Real>& v, int decimals,
                                    bool scientific) -> std::string {
                if (!v) return opt.format == "csv" ? "" : "pole";
                if (opt.format == "csv") return num(*v);
                return scientific ? sci(*v) : fixed(*v, decimals);
            };
            std::vector<std::string> line{rows[i].label};
            line.push_back(render(rows[i].values[0], dec, false));
            line.push_back(render(rows[i].values[1], dec, false));
            line.push_back(render(rows[i].values[2], 11, false));
            if (with_oracle) line.push_back(render(rows[i].values[3], 0, true));
            cells.push_back(std::move(line));
        }
    } else {
        header = {lay.pade_rows ? "order" : "K"};
        for (const auto& d : data) header.push_back(d.spec.label);
        for (const auto& r : rows) {
            std::vector<std::string> line{r.label};
            for (std::size_t c = 0; c < r.values.size(); ++c) {
                const auto& v = r.values[c];
                if (!v)
                    line.push_back(opt.format == "csv" ? "" : "pole");
                else if (opt.format == "csv")
                    line.push_back(num(*v));
                else if (r.label == "defect")
                    line.push_back(sci(*v));
                else
                    line.push_back(fixed(*v, lay.decimals.at(c)));
            }
            cells.push_back(std::move(line));
        }
    }

    if (opt.format == "csv")
        write_output(opt, render_csv(header, cells));
    else
        write_output(opt, render_text_table(lay.title, header, cells));
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: sweep
// ---------------------------------------------------------------------------

int run_sweep(const cli_options& opt, const std::vector<Real>& alphas, const std::vector<int>& ls,
              int terms, bool with_oracle) {
    const int depth = std::max(8, terms - 2);
    std::vector<point_spec> specs;
    for (const Real a : alphas)
        for (const int l : ls) specs.push_back({"", a, l});
    const auto data = compute_points(specs, depth, with_oracle);

    if (opt.format == "json") {
        ordered_json j;
        j["schema"] = k_schema;
        j["command"] = "sweep";
        ordered_json pa = ordered_json::array();
        for (const Real a : alphas) pa.push_back(static_cast<double>(a));
        j["params"]["alpha"] = std::move(pa);
        j["params"]["l"] = ls;
        j["params"]["terms"] = terms;
        j["params"]["with_oracle"] = with_oracle;
        ordered_json jr = ordered_json::array();
        for (const auto& d : data) {
            ordered_json row = context_json(d);
            row["value"] = static_cast<double>(d.es.partial_sum(terms));
            if (d.has_dni) {
                row["dni"] = oracle_json(d.dni);
                row["defect"] =
                    static_cast<double>(std::abs(d.es.partial_sum(terms) - d.dni.energy));
            }
            jr.push_back(std::move(row));
        }
        j["rows"] = std::move(jr);
        write_output(opt, slex::report::canonical_dump(j));
        return 0;
    }

    std::vector<std::string> header = {"alpha", "l", "q0", "lbar", "energy"};
    if (with_oracle) {
        header.push_back("oracle");
        header.push_back("defect");
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& d : data) {
        const Real e = d.es.partial_sum(terms);
        std::vector<std::string> line{num(d.spec.alpha), std::to_string(d.spec.l), num(d.ctx.q0),
                                      num(d.ctx.lbar), num(e)};
        if (with_oracle) {
            line.push_back(num(d.dni.energy));
            line.push_back(opt.format == "csv" ? num(std::abs(e - d.dni.energy))
                                               : sci(std::abs(e - d.dni.energy)));
        }
        cells.push_back(std::move(line));
    }
    if (opt.format == "csv")
        write_output(opt, render_csv(header, cells));
    else
        write_output(opt, render_text_table("parameter sweep", header, cells));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground-state spectra of the square-root oscillator"};
    app.require_subcommand(1);

    cli_options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "write output to FILE instead of stdout");

    Real alpha = 0;
    int l = 0;
    int terms = 10;
    int pade_n = 0, pade_m = 0;
    int table_id = 0;
    int mesh_n = 50000;
    Real q_max = 0;
    bool with_oracle = false;
    std::vector<Real> sweep_alphas;
    std::vector<int> sweep_ls;

    auto* energy = app.add_subcommand("energy", "partial sum of the eigenvalue expansion");
    energy->add_option("--alpha", alpha, "coupling (>= 0)")->required();
    energy->add_option("--l", l, "angular momentum")->check(CLI::NonNegativeNumber);
    energy->add_option("--terms", terms, "number of series terms K")
        ->check(CLI::Range(1, 24))
        ->capture_default_str();

    auto* pade = app.add_subcommand("pade", "rational resummation of the expansion");
    pade->add_option("--alpha", alpha, "coupling (>= 0)")->required();
    pade->add_option("--l", l, "angular momentum")->check(CLI::NonNegativeNumber);
    pade->add_option("--n", pade_n, "denominator order of the row label [N,M]")->required();
    pade->add_option("--m", pade_m, "numerator order of the row label [N,M]")->required();

    auto* oracle = app.add_subcommand("oracle", "direct numerical integration of the eigenproblem");
    oracle->add_option("--alpha", alpha, "coupling (>= 0)")->required();
    oracle->add_option("--l", l, "angular momentum")->check(CLI::NonNegativeNumber);
    oracle->add_option("--mesh", mesh_n, "mesh points")->capture_default_str();
    oracle->add_option("--qmax", q_max, "integration cutoff (0 = automatic)");

    auto* table = app.add_subcommand("table", "regenerate a published benchmark table");
    table->add_option("--id", table_id, "table number 1..5")->required()->check(CLI::Range(1, 5));
    table->add_flag("--with-oracle", with_oracle, "append integration-oracle comparison rows");

    auto* sweep = app.add_subcommand("sweep", "grid of (alpha, l) ground-state energies");
    sweep->add_option("--alpha", sweep_alphas, "coupling values")
        ->required()
        ->delimiter(',')
        ->expected(-1);
    sweep->add_option("--l", sweep_ls, "angular momenta")->required()->delimiter(',')->expected(-1);
    sweep->add_option("--terms", terms, "number of series terms K")
        ->check(CLI::Range(1, 24))
        ->capture_default_str();
    sweep->add_flag("--with-oracle", with_oracle, "also run the integration oracle per point");

    // let global options (--format, --out) appear after the subcommand name
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (energy->parsed()) return run_energy(opt, alpha, l, terms);
        if (pade->parsed()) return run_pade(opt, alpha, l, pade_n, pade_m);
        if (oracle->parsed()) return run_oracle(opt, alpha, l, mesh_n, q_max);
        if (table->parsed()) return run_table(opt, table_id, with_oracle);
        if (sweep->parsed()) return run_sweep(opt, sweep_alphas, sweep_ls, terms, with_oracle);
    } catch (const slex::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
