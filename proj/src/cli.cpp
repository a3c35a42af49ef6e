#include "trifree/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trifree/constructions.hpp"
#include "trifree/formulas.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/knapsack.hpp"
#include "trifree/oracle.hpp"
#include "trifree/verify.hpp"

namespace trifree::cli {

namespace {

constexpr int kHardVertexCap = 16;
constexpr int kDefaultBudget = 13;

const char* marker(formulas::Optimality s) {
    return s == formulas::Optimality::ConjecturedOptimal ? " [conjectured]" : "";
}

// Resolution order: explicit flag, then EXTREMAL_BUDGET, then the default
// (raised to the hard cap by --slow). Returns -1 on a cap violation.
int resolve_budget(int flag_value, bool slow, std::ostream& err) {
    int budget = slow ? kHardVertexCap : kDefaultBudget;
    if (const char* env = std::getenv("EXTREMAL_BUDGET")) {
        try {
            size_t used = 0;
            int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 1)
                throw std::invalid_argument("range");
            budget = v;
        } catch (const std::exception&) {
            err << "warning: ignoring malformed EXTREMAL_BUDGET value\n";
        }
    }
    if (flag_value >= 1) budget = flag_value;
    if (budget > kHardVertexCap) {
        err << "error: vertex budget " << budget << " exceeds the hard cap of "
            << kHardVertexCap << "\n";
        return -1;
    }
    return budget;
}

std::string format_value(const formulas::ExtremalValue& fv) {
    if (fv.is_interval())
        return "in [" + std::to_string(fv.value_lo) + ", " + std::to_string(fv.value_hi) + "]";
    return "= " + std::to_string(fv.value()) + marker(fv.status);
}

void print_zd_line(const formulas::ZdResolution& z, std::ostream& out) {
    using Kind = formulas::ZdResolution::Kind;
    out << "Z(" << z.d << ") ";
    if (z.kind == Kind::Interval)
        out << "in [" << z.lo << ", " << z.hi << "]";
    else
        out << "= " << z.value() << (z.kind == Kind::ConjecturedExact ? " [conjectured]" : "");
    out << "  (" << z.provenance << ")\n";
}

nlohmann::json extremal_to_json(long long d, long long m, const formulas::ExtremalValue& fv) {
    nlohmann::json j;
    j["d"] = d;
    j["m"] = m;
    j["value_lo"] = fv.value_lo;
    j["value_hi"] = fv.value_hi;
    j["status"] = formulas::to_string(fv.status);
    j["case"] = fv.case_tag;
    if (fv.has_decomposition) {
        j["k"] = fv.k;
        j["r"] = fv.r;
        j["z"] = fv.z_used;
    }
    return j;
}

int cmd_compute(long long d, long long m, bool assume, const std::string& format,
                std::ostream& out) {
    formulas::ExtremalValue fv = formulas::f_triangle(d, m, assume);
    formulas::ExtremalValue fg = formulas::f_gen(d, m);
    bool in_domain = formulas::in_proven_domain(d, m);

    if (format == "json") {
        nlohmann::json j = extremal_to_json(d, m, fv);
        j["f_gen"] = fg.value();
        if (in_domain) j["h"] = formulas::h_triangle(d, m);
        out << j.dump() << "\n";
        return 0;
    }

    out << "f_triangle(" << d << ", " << m << ") " << format_value(fv) << "\n";
    out << "status: " << formulas::to_string(fv.status) << "\n";
    out << "case: " << fv.case_tag << "\n";
    if (fv.has_decomposition)
        out << "decomposition: m = " << fv.k << " * Z(" << d << ") + " << fv.r
            << "  (Z(" << d << ") = " << fv.z_used << ")\n";
    if (d >= 2) print_zd_line(formulas::resolve_Zd(static_cast<int>(d), assume), out);
    out << "f_gen(" << d << ", " << m << ") = " << fg.value() << "\n";
    if (in_domain)
        out << "h_triangle(" << d << ", " << m << ") = " << formulas::h_triangle(d, m) << "\n";
    return 0;
}

void print_witness_summary(const constructions::WitnessReport& rep, std::ostream& out) {
    out << "witness(" << rep.d << ", " << rep.m << "): " << rep.claimed_edges << " edges\n";
    out << "status: " << constructions::to_string(rep.status)
        << (rep.status == constructions::WitnessStatus::ConjecturedOptimal ? " [conjectured]"
                                                                           : "")
        << "\n";
    out << "case: " << rep.case_tag << "\n";
    out << "vertices: " << rep.graph.order() << "\n";
    out << "graph6: " << graph6_encode(rep.graph) << "\n";
}

int cmd_witness(long long d, long long m, bool assume, bool general,
                const std::string& format, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
    constructions::WitnessReport rep =
        general ? constructions::assemble_general_witness(d, m)
                : constructions::assemble_triangle_free_witness(d, m, assume);

    MembershipReport mr =
        verify_membership(rep.graph, static_cast<int>(d), static_cast<int>(m));
    bool ok = general ? (mr.degree_ok && mr.matching_ok) : mr.pass();
    if (!ok || mr.edges != rep.claimed_edges) {
        err << "error: assembled witness failed self-verification\n";
        return 1;
    }

    std::string payload;
    if (format == "graph6")
        payload = graph6_encode(rep.graph) + "\n";
    else if (format == "dot")
        payload = to_dot(rep.graph);
    else if (format == "json")
        payload = constructions::to_json(rep) + "\n";

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
        if (format == "table") {
            std::ostringstream buf;
            print_witness_summary(rep, buf);
            file << buf.str();
        } else {
            file << payload;
        }
        print_witness_summary(rep, out);
        return 0;
    }

    if (format == "table")
        print_witness_summary(rep, out);
    else
        out << payload;
    if (format == "graph6" || format == "dot")
        if (rep.status == constructions::WitnessStatus::ConjecturedOptimal)
            err << "note: witness is conjectured-optimal [conjectured]\n";
    return 0;
}

int cmd_verify(const std::string& path, int d, int m, const std::string& format,
               std::ostream& out, std::ostream& err) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << file.rdbuf();
    std::string content = buf.str();

    size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        err << "error: " << path << " is empty\n";
        return 2;
    }

    Graph g;
    if (content[first] == '{') {
        try {
            g = from_json(content);
        } catch (const std::exception& e) {
            err << "error: JSON parse failed: " << e.what() << "\n";
            return 2;
        }
    } else {
        size_t last = content.find_first_of("\r\n", first);
        std::string line = content.substr(
            first, last == std::string::npos ? std::string::npos : last - first);
        g = graph6_decode(line);
    }

    MembershipReport mr = verify_membership(g, d, m);
    if (format == "json") {
        nlohmann::json j;
        j["d"] = mr.d;
        j["m"] = mr.m;
        j["vertices"] = g.order();
        j["edges"] = mr.edges;
        j["max_degree"] = mr.max_degree;
        j["matching_number"] = mr.matching_number;
        j["triangle_free"] = mr.triangle_free;
        j["degree_ok"] = mr.degree_ok;
        j["matching_ok"] = mr.matching_ok;
        j["vizing_bound"] = mr.vizing_bound;
        j["vizing_ok"] = mr.vizing_ok;
        j["pass"] = mr.pass();
        out << j.dump() << "\n";
    } else {
        out << "vertices: " << g.order() << "\n";
        out << "edges: " << mr.edges << "\n";
        out << "max_degree: " << mr.max_degree << " (limit " << d << "): "
            << (mr.degree_ok ? "ok" : "FAIL") << "\n";
        out << "matching_number: " << mr.matching_number << " (limit " << m << "): "
            << (mr.matching_ok ? "ok" : "FAIL") << "\n";
        out << "triangle_free: " << (mr.triangle_free ? "yes" : "no") << "\n";
        out << "vizing_bound: " << mr.edges << " <= " << mr.vizing_bound << ": "
            << (mr.vizing_ok ? "ok" : "FAIL") << "\n";
        out << "result: " << (mr.pass() ? "PASS" : "FAIL") << "\n";
    }
    return mr.pass() ? 0 : 1;
}

int cmd_table(long long d_max, long long m_max, bool assume, const std::string& format,
              std::ostream& out) {
    if (format == "json") {
        nlohmann::json cells = nlohmann::json::array();
        for (long long d = 1; d <= d_max; ++d)
            for (long long m = 1; m <= m_max; ++m) {
                formulas::ExtremalValue fv = formulas::f_triangle(d, m, assume);
                nlohmann::json j = extremal_to_json(d, m, fv);
                j["f_gen"] = formulas::f_gen(d, m).value();
                if (formulas::in_proven_domain(d, m))
                    j["h"] = formulas::h_triangle(d, m);
                cells.push_back(std::move(j));
            }
        nlohmann::json root;
        root["d_max"] = d_max;
        root["m_max"] = m_max;
        root["cells"] = std::move(cells);
        out << root.dump() << "\n";
        return 0;
    }

    std::vector<std::vector<std::string>> grid(static_cast<size_t>(d_max) + 1);
    grid[0].push_back("d\\m");
    for (long long m = 1; m <= m_max; ++m) grid[0].push_back(std::to_string(m));
    for (long long d = 1; d <= d_max; ++d) {
        auto& row = grid[static_cast<size_t>(d)];
        row.push_back(std::to_string(d));
        for (long long m = 1; m <= m_max; ++m) {
            formulas::ExtremalValue fv = formulas::f_triangle(d, m, assume);
            std::string cell;
            if (fv.is_interval())
                cell = std::to_string(fv.value_lo) + ".." + std::to_string(fv.value_hi);
            else
                cell = std::to_string(fv.value());
            cell += "/" + std::to_string(formulas::f_gen(d, m).value());
            cell += "/";
            cell += formulas::in_proven_domain(d, m)
                        ? std::to_string(formulas::h_triangle(d, m))
                        : "-";
            if (fv.status == formulas::Optimality::ConjecturedOptimal) cell += "*";
            if (fv.status == formulas::Optimality::Unknown) cell += "?";
            row.push_back(cell);
        }
    }
    std::vector<size_t> widths(grid[0].size(), 0);
    for (const auto& row : grid)
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    for (const auto& row : grid) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << std::string(widths[c] - row[c].size(), ' ') << row[c];
        }
        out << "\n";
    }
    out << "cell: f_triangle/f_gen/h  (* conjectured, ? open, - h outside proven domain)\n";
    return 0;
}

int cmd_oracle_zd(int d, int budget, const std::string& format, std::ostream& out,
                  std::ostream& err) {
    int nu_max = (budget - 1) / 2;
    formulas::ZdResolution found = oracle::search_Zd(d, nu_max, oracle::EnumBudget{budget});
    formulas::ZdResolution theory = formulas::resolve_Zd(d, false);

    if (format == "json") {
        using Kind = formulas::ZdResolution::Kind;
        auto kind_name = [](Kind k) {
            return k == Kind::Exact ? "exact" : k == Kind::Interval ? "interval" : "conjectured";
        };
        nlohmann::json j;
        j["d"] = d;
        j["oracle_kind"] = kind_name(found.kind);
        j["oracle_lo"] = found.lo;
        j["oracle_hi"] = found.hi;
        j["oracle_provenance"] = found.provenance;
        j["theory_kind"] = kind_name(theory.kind);
        j["theory_lo"] = theory.lo;
        j["theory_hi"] = theory.hi;
        out << j.dump() << "\n";
    } else {
        out << "oracle: ";
        print_zd_line(found, out);
        out << "closed form: ";
        print_zd_line(theory, out);
    }

    using Kind = formulas::ZdResolution::Kind;
    if (found.kind == Kind::Exact && theory.kind == Kind::Exact &&
        found.value() != theory.value()) {
        err << "MISMATCH: oracle Z(" << d << ") = " << found.value()
            << " disagrees with the closed form " << theory.value() << "\n";
        return 1;
    }
    if (found.kind == Kind::Exact &&
        (found.value() < theory.lo || found.value() > theory.hi)) {
        err << "MISMATCH: oracle Z(" << d << ") = " << found.value()
            << " falls outside the closed-form bracket\n";
        return 1;
    }
    return 0;
}

int cmd_oracle_value(int d, int m, bool assume, int budget, const std::string& format,
                     std::ostream& out, std::ostream& err) {
    long long full = 2LL * d * m;
    int cap = static_cast<int>(std::min<long long>(full, budget));
    oracle::OracleRecord rec = oracle::brute_force_f(d, m, cap, oracle::EnumBudget{budget});
    formulas::ExtremalValue fv = formulas::f_triangle(d, m, assume);

    if (format == "json") {
        nlohmann::json j = nlohmann::json::parse(oracle::to_json(rec));
        j["formula_lo"] = fv.value_lo;
        j["formula_hi"] = fv.value_hi;
        j["formula_status"] = formulas::to_string(fv.status);
        out << j.dump() << "\n";
    } else {
        out << "brute force best: " << rec.best_edges << " edges (searched up to "
            << rec.vertex_bound_used << " vertices, "
            << (rec.exhaustive ? "exhaustive" : "not exhaustive") << ")\n";
        out << "witness graph6: " << graph6_encode(rec.witness) << "\n";
        out << "formula: f_triangle(" << d << ", " << m << ") " << format_value(fv) << "\n";
    }

    bool proven = fv.status == formulas::Optimality::ProvenOptimal;
    if (!fv.is_interval()) {
        if (rec.exhaustive && rec.best_edges != fv.value()) {
            err << "MISMATCH: exhaustive search found " << rec.best_edges
                << ", formula claims " << fv.value() << "\n";
            return proven ? 1 : 0;
        }
        if (!rec.exhaustive && rec.best_edges > fv.value()) {
            err << "MISMATCH: search found " << rec.best_edges
                << " edges, above the formula value " << fv.value() << "\n";
            return proven ? 1 : 0;
        }
        if (format != "json")
            out << (rec.exhaustive ? "agreement: exhaustive search matches the formula"
                                   : "agreement: search stayed within the formula value")
                << "\n";
    } else if (format != "json") {
        out << "note: formula value is an open interval; search gives a lower bound\n";
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extremal edge counts of triangle-free graphs with bounded degree "
                 "and matching number"};
    app.require_subcommand(1);

    long long d = 0, m = 0;
    bool assume = false, general = false, zd_mode = false, slow = false;
    int budget_flag = -1;
    std::string format, out_path, verify_path;

    auto* compute = app.add_subcommand("compute", "evaluate the closed-form edge maximum");
    compute->add_option("--d", d, "max degree bound")->required();
    compute->add_option("--m", m, "matching number bound")->required();
    compute->add_flag("--assume-conjectures", assume, "use conjectured values of Z(d)");
    compute->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    auto* witness = app.add_subcommand("witness", "construct a certified extremal graph");
    witness->add_option("--d", d, "max degree bound")->required();
    witness->add_option("--m", m, "matching number bound")->required();
    witness->add_flag("--assume-conjectures", assume, "use conjectured values of Z(d)");
    witness->add_flag("--general", general, "drop the triangle-free restriction");
    witness->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "graph6", "dot"}));
    witness->add_option("-o,--output", out_path, "write the graph to a file");

    auto* verify = app.add_subcommand("verify", "check a graph file against class bounds");
    verify->add_option("path", verify_path, "graph6 or JSON graph file")->required();
    verify->add_option("--d", d, "max degree bound")->required();
    verify->add_option("--m", m, "matching number bound")->required();
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    auto* table = app.add_subcommand("table", "tabulate bounds over a parameter range");
    table->add_option("--d", d, "largest max-degree bound")->default_val(6);
    table->add_option("--m", m, "largest matching bound")->default_val(12);
    table->add_flag("--assume-conjectures", assume, "use conjectured values of Z(d)");
    table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search cross-check");
    oracle_cmd->add_option("--d", d, "max degree bound")->required();
    oracle_cmd->add_option("--m", m, "matching number bound");
    oracle_cmd->add_flag("--zd", zd_mode, "search for Z(d) instead of f(d, m)");
    oracle_cmd->add_flag("--assume-conjectures", assume, "use conjectured values of Z(d)");
    oracle_cmd->add_flag("--slow", slow, "raise the default vertex budget to the hard cap");
    oracle_cmd->add_option("--budget-vertices", budget_flag, "enumeration vertex budget");
    oracle_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    std::vector<const char*> argv;
    argv.push_back("trifree");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (format.empty()) format = witness->parsed() ? "graph6" : "table";

    try {
        if (compute->parsed()) return cmd_compute(d, m, assume, format, out);
        if (witness->parsed())
            return cmd_witness(d, m, assume, general, format, out_path, out, err);
        if (verify->parsed())
            return cmd_verify(verify_path, static_cast<int>(d), static_cast<int>(m), format,
                              out, err);
        if (table->parsed()) return cmd_table(d, m, assume, format, out);
        if (oracle_cmd->parsed()) {
            int budget = resolve_budget(budget_flag, slow, err);
            if (budget < 0) return 2;
            if (zd_mode)
                return cmd_oracle_zd(static_cast<int>(d), budget, format, out, err);
            if (!oracle_cmd->count("--m")) {
                err << "error: oracle requires --m unless --zd is given\n";
                return 2;
            }
            return cmd_oracle_value(static_cast<int>(d), static_cast<int>(m), assume, budget,
                                    format, out, err);
        }
    } catch (const oracle::BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Graph6Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace trifree::cli
