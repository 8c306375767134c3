// Batch CLI over the Fock-space verification engine. Subcommands run
// enumeration/verification sweeps and emit deterministic reports: given the
// same flags, the JSON and CSV payloads are byte-identical across runs
// (wall time appears in text output only).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fockbasis/affine.hpp"
#include "fockbasis/exact_matrix.hpp"
#include "fockbasis/fock.hpp"
#include "fockbasis/fsbasis.hpp"
#include "fockbasis/parallel.hpp"
#include "fockbasis/qseries.hpp"
#include "fockbasis/sweeps.hpp"

using namespace fockbasis;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "fock-basis/1";
constexpr const char* kVersion = "1.0.0";

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write the report to PATH instead of stdout");
}

void emit(const OutputOptions& out, const std::string& payload) {
    if (out.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw CLI::RuntimeError("cannot open output path: " + out.out_path, 2);
    f << payload;
}

ordered_json report_skeleton(const std::string& command, ordered_json config) {
    ordered_json j;
    j["schema"] = kSchema;
    j["tool_version"] = kVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    return j;
}

// The text renderer is the only place wall time is shown.
std::string render_text(const ordered_json& report, double wall_seconds) {
    std::ostringstream os;
    os << report["command"].get<std::string>() << "  (fock-basis " << kVersion << ")\n";
    os << "config: " << report["config"].dump() << "\n";
    for (const auto& check : report["checks"]) {
        os << "  [" << (check["pass"].get<bool>() ? "PASS" : "FAIL") << "] "
           << check["name"].get<std::string>();
        if (check.contains("detail")) os << "  " << check["detail"].dump();
        os << "\n";
    }
    os << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "  wall_time=" << wall_seconds
       << "s\n";
    return os.str();
}

std::string render_csv(const ordered_json& report) {
    std::ostringstream os;
    os << "check,pass\n";
    for (const auto& check : report["checks"])
        os << check["name"].get<std::string>() << ',' << (check["pass"].get<bool>() ? 1 : 0)
           << '\n';
    return os.str();
}

int finish(const ordered_json& report, const OutputOptions& out, double wall_seconds) {
    if (out.format == "json")
        emit(out, report.dump(2) + "\n");
    else if (out.format == "csv")
        emit(out, render_csv(report));
    else
        emit(out, render_text(report, wall_seconds));
    return report["pass"].get<bool>() ? 0 : 1;
}

std::vector<int> parse_monomial(const std::string& text) {
    std::vector<int> indices;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) indices.push_back(std::stoi(cur));
    std::sort(indices.begin(), indices.end());
    return indices;
}

struct ModeWindow {
    int lo = -4;
    int hi = 4;
};

ModeWindow parse_modes(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw CLI::ValidationError("--modes", "expected the form A..B");
    ModeWindow w;
    w.lo = std::stoi(text.substr(0, sep));
    w.hi = std::stoi(text.substr(sep + 2));
    if (w.lo > w.hi) throw CLI::ValidationError("--modes", "window is empty");
    return w;
}

int cmd_verify_relations(const RelationSweepConfig& cfg, int esq_modes, long long esq_energy,
                         Exec exec, const OutputOptions& out) {
    auto t0 = std::chrono::steady_clock::now();
    RelationSweepResult rel = relation_sweep(cfg, exec);
    EsqSweepResult esq = esq_sweep(esq_modes, esq_energy, exec);

    ordered_json config{{"mode_min", cfg.mode_min},     {"mode_max", cfg.mode_max},
                        {"charge_min", cfg.charge_min}, {"charge_max", cfg.charge_max},
                        {"max_energy", cfg.max_energy}, {"esq_modes", esq_modes},
                        {"esq_max_energy", esq_energy}, {"corrupt", cfg.corrupt_commutator}};
    ordered_json report = report_skeleton("verify-relations", config);
    ordered_json checks = ordered_json::array();

    ordered_json rel_check{
        {"name", "bracket_relations"},
        {"pass", rel.failures.empty()},
        {"detail", {{"pairs", rel.pairs}, {"vectors", rel.vectors}, {"checks", rel.checks}}}};
    ordered_json failures = ordered_json::array();
    for (std::size_t i = 0; i < rel.failures.size() && i < 20; ++i) {
        const RelationFailure& f = rel.failures[i];
        failures.push_back(ordered_json{{"a", f.a.str()},
                                        {"b", f.b.str()},
                                        {"vector", to_json(f.vector)},
                                        {"lhs_minus_rhs", to_json(f.diff)}});
    }
    if (!failures.empty()) rel_check["failures"] = failures;
    checks.push_back(rel_check);

    checks.push_back(ordered_json{{"name", "lambda_odd_identity"},
                                  {"pass", rel.identity_failures.empty()}});
    checks.push_back(ordered_json{
        {"name", "esq_mode_sums"}, {"pass", esq.pass()}, {"detail", {{"checks", esq.checks}}}});

    report["checks"] = checks;
    report["pass"] = rel.pass() && esq.pass();
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(report, out, wall);
}

int cmd_verify_basis(int sector, long long max_energy, long long q_max, Exec exec,
                     const OutputOptions& out) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json config{{"sector", sector}, {"max_energy", max_energy}, {"q_max", q_max}};
    ordered_json report = report_skeleton("verify-basis", config);
    ordered_json checks = ordered_json::array();
    bool all = true;

    // Basic-subspace cells: count == rank == character coefficient, plus
    // triangularity, for every bidegree with deg_q <= q_max (j = 0).
    {
        BivariateSeries w0 = ch_W(0, q_max, 0, static_cast<int>(q_max) + 1);
        bool pass = true;
        long long cells = 0;
        ordered_json cell_rows = ordered_json::array();
        for (int n = 0; static_cast<long long>(n) * n <= q_max; ++n) {
            for (long long m = min_degq(n, 0); m <= q_max; ++m) {
                IndependenceReport r = independence_check({n, m, 0}, exec);
                Int coeff = w0.coeff(n, m);
                bool ok = r.count == r.rank && to_int(r.count) == coeff && r.triangular;
                pass = pass && ok;
                ++cells;
                if (!ok)
                    cell_rows.push_back(ordered_json{{"length", n},
                                                     {"degq", m},
                                                     {"count", r.count},
                                                     {"rank", r.rank},
                                                     {"triangular", r.triangular},
                                                     {"character_coeff", to_string(coeff)}});
            }
        }
        ordered_json c{
            {"name", "basic_subspace_cells"}, {"pass", pass}, {"detail", {{"cells", cells}}}};
        if (!cell_rows.empty()) c["failures"] = cell_rows;
        checks.push_back(c);
        all = all && pass;
    }

    // Straightening surrogate: unrestricted rank == Fibonacci rank.
    {
        long long cap = std::min<long long>(q_max, 10);
        bool pass = true;
        long long cells = 0;
        for (long long m = 0; m <= cap; ++m)
            for (int n = 0; n <= m; ++n) {
                pass = pass && spanning_check(n, m, 0, exec);
                ++cells;
            }
        checks.push_back(ordered_json{
            {"name", "spanning_ranks"}, {"pass", pass}, {"detail", {{"cells", cells}}}});
        all = all && pass;
    }

    // The semi-infinite basis against the even-Lambda kernel.
    {
        GlobalBasisReport g = global_basis_check(max_energy, sector, exec);
        ordered_json cells = ordered_json::array();
        for (const CellReport& c : g.cells) cells.push_back(c.to_json());
        checks.push_back(ordered_json{{"name", "global_basis"},
                                      {"pass", g.pass},
                                      {"detail", {{"cells", g.cells.size()}}},
                                      {"cells", cells}});
        all = all && g.pass;
    }

    report["checks"] = checks;
    report["pass"] = all;
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(report, out, wall);
}

int cmd_characters(long long q_max, int z_min, int z_max, const OutputOptions& out) {
    auto t0 = std::chrono::steady_clock::now();
    ordered_json config{{"q_max", q_max}, {"z_min", z_min}, {"z_max", z_max}};
    ordered_json report = report_skeleton("characters", config);

    BivariateSeries l01 = ch_L01(q_max, z_min, z_max);
    BivariateSeries f = ch_F(q_max, z_min, z_max);
    ordered_json series;
    series["L01"] = l01.to_json();
    series["F"] = f.to_json();
    ordered_json ws;
    for (int j = std::max(z_min, -2); j <= std::min(z_max, 2); ++j)
        ws[std::to_string(j)] = ch_W(j, q_max, z_min, z_max).to_json();
    series["W"] = ws;
    report["series"] = series;

    // Weight-multiplicity table of L_(0,1): rows are q-powers, columns the
    // z-window.
    ordered_json table = ordered_json::array();
    for (long long d = 0; d <= q_max; ++d) {
        ordered_json row = ordered_json::array();
        for (int zp = z_min; zp <= z_max; ++zp) row.push_back(to_string(l01.coeff(zp, d)));
        table.push_back(row);
    }
    report["weight_multiplicity_table"] = table;
    report["checks"] = ordered_json::array();
    report["pass"] = true;

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.format == "csv") {
        std::ostringstream os;
        os << "series,z_power,q_power,coeff\n";
        auto dump = [&os](const std::string& name, const BivariateSeries& s) {
            for (const auto& [key, v] : s.coeffs())
                os << name << ',' << key.first << ',' << key.second << ',' << to_string(v)
                   << '\n';
        };
        dump("L01", l01);
        dump("F", f);
        for (int j = std::max(z_min, -2); j <= std::min(z_max, 2); ++j)
            dump("W" + std::to_string(j), ch_W(j, q_max, z_min, z_max));
        emit(out, os.str());
        return 0;
    }
    if (out.format == "json") {
        emit(out, report.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "characters  (fock-basis " << kVersion << ")\n";
    os << "config: " << report["config"].dump() << "\n";
    os << "weight multiplicity table of L(0,1)  (rows: q-power; cols: z = " << z_min << ".."
       << z_max << ")\n";
    for (long long d = 0; d <= q_max; ++d) {
        os << "  q^" << d << ":";
        for (int zp = z_min; zp <= z_max; ++zp) os << '\t' << to_string(l01.coeff(zp, d));
        os << '\n';
    }
    os << "ch W_0 rows (z^n : coefficients in q):\n";
    BivariateSeries w0 = ch_W(0, q_max, z_min, z_max);
    for (int zp = std::max(0, z_min); zp <= z_max; ++zp)
        os << "  z^" << zp << ": " << w0.z_row(zp).str() << '\n';
    os << "ch F rows:\n";
    for (int zp = z_min; zp <= z_max; ++zp)
        os << "  z^" << zp << ": " << f.z_row(zp).str() << '\n';
    os << "wall_time=" << wall << "s\n";
    emit(out, os.str());
    return 0;
}

int cmd_apply(const std::string& monomial_text, int sector, const OutputOptions& out) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> indices = parse_monomial(monomial_text);
    for (int i : indices)
        if (i > -1 - sector)
            throw CLI::ValidationError("--monomial", "index " + std::to_string(i) +
                                                         " does not act on the sector-" +
                                                         std::to_string(sector) + " vacuum");
    ordered_json config{{"monomial", monomial_text}, {"sector", sector}};
    ordered_json report = report_skeleton("apply", config);

    ElementaryVector vac = sector_vacuum(sector, 0);
    FockVector image = apply_index_list_on(indices, vac);

    bool fibonacci = true;
    for (std::size_t t = 1; t < indices.size(); ++t)
        if (indices[t] - indices[t - 1] < 2) fibonacci = false;
    std::optional<ElementaryVector> leading;
    if (fibonacci && sector == 0) leading = leading_vector(FibonacciMonomial{indices}, 0);

    ordered_json terms = ordered_json::array();
    for (const auto& [w, c] : image.terms())
        terms.push_back(ordered_json{{"term", to_json(w)},
                                     {"coeff", to_string(c)},
                                     {"leading", leading.has_value() && w == *leading}});
    report["terms"] = terms;
    report["term_count"] = image.size();
    report["checks"] = ordered_json::array();
    report["pass"] = true;

    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.format == "text") {
        std::ostringstream os;
        os << "apply " << (monomial_text.empty() ? "1" : monomial_text) << " to sector-" << sector
           << " vacuum: " << image.size() << " term(s)\n";
        for (const auto& [w, c] : image.terms()) {
            os << "  " << to_string(c) << " * " << w.str();
            if (leading.has_value() && w == *leading) os << "   <- leading Q-vector";
            os << '\n';
        }
        os << "wall_time=" << wall << "s\n";
        emit(out, os.str());
        return 0;
    }
    if (out.format == "csv") {
        std::ostringstream os;
        os << "charge,partition,coeff,leading\n";
        for (const auto& [w, c] : image.terms()) {
            os << w.charge() << ',';
            const auto& p = w.partition();
            for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
            os << ',' << to_string(c) << ','
               << ((leading.has_value() && w == *leading) ? 1 : 0) << '\n';
        }
        emit(out, os.str());
        return 0;
    }
    emit(out, report.dump(2) + "\n");
    return 0;
}

int cmd_qbinom_identity(int N, long long q_max, const OutputOptions& out) {
    auto t0 = std::chrono::steady_clock::now();
    if (q_max < 0) q_max = static_cast<long long>(N) * N / 4 + 2;  // covers every degree
    ordered_json config{{"N", N}, {"q_max", q_max}};
    ordered_json report = report_skeleton("qbinom-identity", config);
    bool ok = appendixA_identity_check(N, q_max);
    report["checks"] = ordered_json::array(
        {ordered_json{{"name", "appendix_identity"}, {"pass", ok}, {"detail", {{"N", N}}}}});
    report["pass"] = ok;
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return finish(report, out, wall);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for the fermionic Fock space and its "
                 "semi-infinite monomial bases"};
    app.require_subcommand(1);

    auto* rel = app.add_subcommand("verify-relations",
                                   "Check all bracket relations on a window of vectors");
    std::string modes_text = "-4..4";
    RelationSweepConfig rel_cfg;
    int rel_esq_modes = 8;
    bool rel_serial = false;
    OutputOptions rel_out;
    rel->add_option("--modes", modes_text, "Mode index window A..B")->capture_default_str();
    rel->add_option("--z-min", rel_cfg.charge_min, "Charge window lower bound")
        ->capture_default_str();
    rel->add_option("--z-max", rel_cfg.charge_max, "Charge window upper bound")
        ->capture_default_str();
    rel->add_option("--max-energy", rel_cfg.max_energy, "Energy bound for test vectors")
        ->capture_default_str();
    rel->add_flag("--serial", rel_serial, "Use the serial reference kernels");
    rel->add_flag("--self-test-corrupt", rel_cfg.corrupt_commutator,
                  "Test fixture: corrupt the commutator so the sweep must fail");
    add_output_flags(rel, rel_out);

    auto* bas = app.add_subcommand("verify-basis",
                                   "Check the semi-infinite monomial basis against the "
                                   "even-Lambda kernel and the characters");
    int bas_sector = 0;
    long long bas_energy = 10;
    long long bas_qmax = 14;
    bool bas_serial = false;
    OutputOptions bas_out;
    bas->add_option("--sector", bas_sector, "Module sector")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    bas->add_option("--max-energy", bas_energy, "Energy truncation")->capture_default_str();
    bas->add_option("--q-max", bas_qmax, "deg_q bound for the basic-subspace cell sweep")
        ->capture_default_str();
    bas->add_flag("--serial", bas_serial, "Use the serial reference kernels");
    add_output_flags(bas, bas_out);

    auto* chr = app.add_subcommand("characters", "Emit character tables");
    long long chr_qmax = 10;
    int chr_zmin = -3, chr_zmax = 3;
    OutputOptions chr_out;
    chr->add_option("--q-max", chr_qmax, "q truncation")->capture_default_str();
    chr->add_option("--z-min", chr_zmin, "z window lower bound")->capture_default_str();
    chr->add_option("--z-max", chr_zmax, "z window upper bound")->capture_default_str();
    add_output_flags(chr, chr_out);

    auto* app_cmd = app.add_subcommand("apply", "Expand an e-monomial applied to a vacuum");
    std::string monomial_text;
    int app_sector = 0;
    OutputOptions app_out;
    app_cmd->add_option("--monomial", monomial_text,
                        "Comma-separated mode indices, e.g. -5,-3,-1");
    app_cmd->add_option("--sector", app_sector, "Vacuum sector")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    add_output_flags(app_cmd, app_out);

    auto* qb = app.add_subcommand("qbinom-identity", "Check the q-binomial dissection identity");
    int qb_n = 1;
    long long qb_qmax = -1;
    OutputOptions qb_out;
    qb->add_option("--N", qb_n, "Number of generators e_{-1}..e_{-(N-1)}")->required();
    qb->add_option("--q-max", qb_qmax, "q truncation (default: full degree)");
    add_output_flags(qb, qb_out);

    try {
        app.parse(argc, argv);

        if (rel->parsed()) {
            ModeWindow w = parse_modes(modes_text);
            rel_cfg.mode_min = w.lo;
            rel_cfg.mode_max = w.hi;
            if (rel_cfg.charge_min > rel_cfg.charge_max || rel_cfg.max_energy < 0)
                throw CLI::ValidationError("verify-relations", "empty window");
            return cmd_verify_relations(rel_cfg, rel_esq_modes,
                                        std::min<long long>(rel_cfg.max_energy, 8),
                                        rel_serial ? Exec::Serial : Exec::Parallel, rel_out);
        }
        if (bas->parsed()) {
            if (bas_energy < 0 || bas_qmax < 0)
                throw CLI::ValidationError("verify-basis", "bounds must be nonnegative");
            return cmd_verify_basis(bas_sector, bas_energy, bas_qmax,
                                    bas_serial ? Exec::Serial : Exec::Parallel, bas_out);
        }
        if (chr->parsed()) {
            if (chr_zmin > chr_zmax || chr_qmax < 0)
                throw CLI::ValidationError("characters", "empty window");
            return cmd_characters(chr_qmax, chr_zmin, chr_zmax, chr_out);
        }
        if (app_cmd->parsed()) return cmd_apply(monomial_text, app_sector, app_out);
        if (qb->parsed()) {
            if (qb_n < 1) throw CLI::ValidationError("--N", "must be positive");
            return cmd_qbinom_identity(qb_n, qb_qmax, qb_out);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
