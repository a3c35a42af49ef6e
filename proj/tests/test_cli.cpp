#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "trifree/cli.hpp"
#include "trifree/constructions.hpp"
#include "trifree/graph.hpp"
#include "trifree/graph_io.hpp"

using namespace trifree;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Scopes an EXTREMAL_BUDGET override to one block.
struct EnvGuard {
    explicit EnvGuard(const char* value) { setenv("EXTREMAL_BUDGET", value, 1); }
    ~EnvGuard() { unsetenv("EXTREMAL_BUDGET"); }
};

}  // namespace

TEST_CASE("compute prints the closed form with context") {
    CliResult r = run({"compute", "--d", "4", "--m", "9"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "f_triangle(4, 9) = 39"));
    CHECK(contains(r.out, "status: proven"));
    CHECK(contains(r.out, "decomposition: m = 1 * Z(4) + 4  (Z(4) = 5)"));
    CHECK(contains(r.out, "f_gen(4, 9) = 44"));
    CHECK(contains(r.out, "h_triangle(4, 9) = 5"));
}

TEST_CASE("compute reports open intervals and conjectured values") {
    CliResult open_run = run({"compute", "--d", "9", "--m", "30"});
    CHECK(open_run.code == 0);
    CHECK(contains(open_run.out, "f_triangle(9, 30) in [278, 282]"));
    CHECK(contains(open_run.out, "Z(9) in [10, 12]"));

    CliResult conj = run({"compute", "--d", "9", "--m", "30", "--assume-conjectures"});
    CHECK(conj.code == 0);
    CHECK(contains(conj.out, "f_triangle(9, 30) = 278 [conjectured]"));
    CHECK(contains(conj.out, "Z(9) = 12 [conjectured]"));
}

TEST_CASE("compute emits json") {
    CliResult r = run({"compute", "--d", "4", "--m", "9", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 4);
    CHECK(j["m"] == 9);
    CHECK(j["value_lo"] == 39);
    CHECK(j["value_hi"] == 39);
    CHECK(j["status"] == "proven");
    CHECK(j["f_gen"] == 44);
    CHECK(j["h"] == 5);
    CHECK(j["k"] == 1);
    CHECK(j["r"] == 4);
    CHECK(j["z"] == 5);
}

TEST_CASE("witness defaults to graph6 output") {
    CliResult r = run({"witness", "--d", "3", "--m", "4"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    constructions::WitnessReport rep = constructions::assemble_triangle_free_witness(3, 4);
    CHECK(r.out == graph6_encode(rep.graph) + "\n");
}

TEST_CASE("witness table format shows the summary") {
    CliResult r = run({"witness", "--d", "3", "--m", "4", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "witness(3, 4): 13 edges"));
    CHECK(contains(r.out, "status: proven-optimal"));
    CHECK(contains(r.out, "graph6: "));
}

TEST_CASE("witness emits parseable json") {
    CliResult r = run({"witness", "--d", "2", "--m", "3", "--general", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 2);
    CHECK(j["m"] == 3);
    CHECK(j["edges"] == 9);
    CHECK(j["status"] == "proven-optimal");
    Graph g = graph6_decode(j["graph6"].get<std::string>());
    CHECK(g.size() == 9);
}

TEST_CASE("witness writes payload files") {
    std::filesystem::path path = temp_file("trifree_cli_witness.g6");
    CliResult r = run({"witness", "--d", "4", "--m", "5", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "witness(4, 5): 22 edges"));
    constructions::WitnessReport rep = constructions::assemble_triangle_free_witness(4, 5);
    CHECK(read_file(path) == graph6_encode(rep.graph) + "\n");
    std::filesystem::remove(path);
}

TEST_CASE("witness notes conjectured optimality on stderr") {
    CliResult conj = run({"witness", "--d", "9", "--m", "30", "--assume-conjectures"});
    CHECK(conj.code == 0);
    CHECK(contains(conj.err, "conjectured"));

    CliResult plain = run({"witness", "--d", "9", "--m", "30"});
    CHECK(plain.code == 0);
    CHECK(plain.err.empty());
}

TEST_CASE("verify accepts members and rejects violations") {
    std::filesystem::path path = temp_file("trifree_cli_verify.g6");
    {
        std::ofstream f(path);
        f << graph6_encode(constructions::assemble_triangle_free_witness(3, 4).graph) << "\n";
    }
    CliResult good = run({"verify", path.string(), "--d", "3", "--m", "4"});
    CHECK(good.code == 0);
    CHECK(contains(good.out, "result: PASS"));

    CliResult tight = run({"verify", path.string(), "--d", "3", "--m", "1"});
    CHECK(tight.code == 1);
    CHECK(contains(tight.out, "matching_number: 4 (limit 1): FAIL"));
    CHECK(contains(tight.out, "result: FAIL"));

    {
        std::ofstream f(path);
        f << "Bw\n";
    }
    CliResult triangle = run({"verify", path.string(), "--d", "2", "--m", "1"});
    CHECK(triangle.code == 1);
    CHECK(contains(triangle.out, "triangle_free: no"));
    std::filesystem::remove(path);
}

TEST_CASE("verify reads json graph files") {
    std::filesystem::path path = temp_file("trifree_cli_verify.json");
    {
        std::ofstream f(path);
        f << to_json(Graph::cycle(5));
    }
    CliResult r = run({"verify", path.string(), "--d", "2", "--m", "2", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["vertices"] == 5);
    CHECK(j["edges"] == 5);
    CHECK(j["matching_number"] == 2);
    std::filesystem::remove(path);
}

TEST_CASE("verify reports unreadable input") {
    CliResult r = run({"verify", "/nonexistent/graph.g6", "--d", "2", "--m", "2"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "cannot read"));

    std::filesystem::path path = temp_file("trifree_cli_verify_bad.g6");
    {
        std::ofstream f(path);
        f << "~~~~~not graph6\n";
    }
    CliResult bad = run({"verify", path.string(), "--d", "2", "--m", "2"});
    CHECK(bad.code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("table prints the grid with legend") {
    CliResult r = run({"table", "--d", "3", "--m", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "d\\m"));
    CHECK(contains(r.out, "5/6/1"));
    CHECK(contains(r.out, "7/9/2"));
    CHECK(contains(r.out, "13/14/1"));
    CHECK(contains(r.out, "cell: f_triangle/f_gen/h"));

    CliResult json_run = run({"table", "--d", "2", "--m", "2", "--format", "json"});
    CHECK(json_run.code == 0);
    nlohmann::json j = nlohmann::json::parse(json_run.out);
    CHECK(j["cells"].size() == 4);
    CHECK(j["cells"][3]["d"] == 2);
    CHECK(j["cells"][3]["m"] == 2);
    CHECK(j["cells"][3]["value_lo"] == 5);
}

TEST_CASE("table marks open cells") {
    CliResult r = run({"table", "--d", "9", "--m", "9", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "?"));
    CHECK(contains(r.out, "/-"));
}

TEST_CASE("oracle cross-checks the formula") {
    CliResult r = run({"oracle", "--d", "2", "--m", "2", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["best_edges"] == 5);
    CHECK(j["exhaustive"] == true);
    CHECK(j["vertex_bound_used"] == 8);
    CHECK(j["formula_lo"] == 5);
    CHECK(j["formula_status"] == "proven");

    CliResult text = run({"oracle", "--d", "1", "--m", "2"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "brute force best: 2 edges"));
    CHECK(contains(text.out, "agreement: exhaustive search matches the formula"));
}

TEST_CASE("oracle zd mode reports both sources") {
    CliResult r = run({"oracle", "--zd", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "oracle: Z(2) = 2"));
    CHECK(contains(r.out, "closed form: Z(2) = 2"));
}

TEST_CASE("oracle requires --m unless --zd is given") {
    CliResult r = run({"oracle", "--d", "2"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "--m"));
}

TEST_CASE("budget resolution honors flags, env and the hard cap") {
    CliResult flag = run({"oracle", "--d", "2", "--m", "2", "--budget-vertices", "17"});
    CHECK(flag.code == 2);
    CHECK(contains(flag.err, "hard cap"));

    {
        EnvGuard env("17");
        CliResult r = run({"oracle", "--d", "2", "--m", "2"});
        CHECK(r.code == 2);
        CHECK(contains(r.err, "hard cap"));
    }
    {
        EnvGuard env("6");
        CliResult r = run({"oracle", "--d", "2", "--m", "3"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "searched up to 6 vertices"));
        CHECK(contains(r.out, "not exhaustive"));
        CHECK(contains(r.out, "agreement: search stayed within the formula value"));
    }
    {
        EnvGuard env("not-a-number");
        CliResult r = run({"oracle", "--d", "2", "--m", "2"});
        CHECK(r.code == 0);
        CHECK(contains(r.err, "malformed EXTREMAL_BUDGET"));
    }
}

TEST_CASE("invalid invocations exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"compute", "--d", "4"}).code == 2);
    CHECK(run({"compute", "--d", "0", "--m", "1"}).code == 2);
    CHECK(run({"compute", "--d", "4", "--m", "9", "--format", "yaml"}).code == 2);
}

TEST_CASE("help exits zero and lists subcommands") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "compute"));
    CHECK(contains(r.out, "witness"));
    CHECK(contains(r.out, "verify"));
    CHECK(contains(r.out, "table"));
    CHECK(contains(r.out, "oracle"));
}

TEST_CASE("output is deterministic across runs") {
    CliResult a = run({"compute", "--d", "6", "--m", "13"});
    CliResult b = run({"compute", "--d", "6", "--m", "13"});
    CHECK(a.out == b.out);

    CliResult w1 = run({"witness", "--d", "5", "--m", "11"});
    CliResult w2 = run({"witness", "--d", "5", "--m", "11"});
    CHECK(w1.out == w2.out);

    CliResult t1 = run({"table", "--d", "6", "--m", "12"});
    CliResult t2 = run({"table", "--d", "6", "--m", "12"});
    CHECK(t1.out == t2.out);
}
