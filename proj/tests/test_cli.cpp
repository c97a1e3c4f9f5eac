#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "gallai/coloring.hpp"
#include "schema_check.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(GALLAI_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

fs::path temp_dir()
{
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path()
                     / ("gallai_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

json check_against(const char* schema_file, const std::string& text)
{
    json instance = json::parse(text);
    json schema = schema_check::load(std::string(GALLAI_SCHEMA_DIR) + "/" + schema_file);
    std::string error;
    bool ok = schema_check::validate(instance, schema, error);
    INFO(error);
    CHECK(ok);
    return instance;
}

} // namespace

TEST_CASE("construct then validate round trips with documented exit codes")
{
    fs::path file = temp_dir() / "klower.txt";

    auto built = run_cli("construct --kind k-lower -n 13 -m 1 -k 3 --out " + file.string());
    CHECK(built.exit_code == 0);
    std::string text = slurp(file);
    CHECK(text.rfind("gallai-coloring v1\n31 3\n", 0) == 0);
    check_against("certificate.schema.json", slurp(file.string() + ".cert.json"));

    auto ok = run_cli("validate " + file.string() + " -n 13 -m 1 --rainbow");
    CHECK(ok.exit_code == 0);

    // the same coloring contains S(2,1): exit 1 plus a witness record
    auto violated = run_cli("validate " + file.string() + " -n 2 -m 1");
    CHECK(violated.exit_code == 1);
    json w = check_against("double-star-witness.schema.json", violated.out);
    CHECK(w["type"] == "doubleStar");
}

TEST_CASE("construct kinds and parameter errors")
{
    fs::path k3 = temp_dir() / "k3lower.txt";
    auto b1 = run_cli("construct --kind k3-lower -n 4 -m 1 --out " + k3.string());
    CHECK(b1.exit_code == 0);
    CHECK(slurp(k3).rfind("gallai-coloring v1\n10 3\n", 0) == 0);

    fs::path rl = temp_dir() / "ramseylower.txt";
    auto b2 = run_cli("construct --kind ramsey-lower -n 1 -m 1 --out " + rl.string());
    CHECK(b2.exit_code == 0);
    CHECK(slurp(rl).rfind("gallai-coloring v1\n4 2\n", 0) == 0);

    auto bad = run_cli("construct --kind k-lower -n 1 -m 2 -k 3 --out " + rl.string());
    CHECK(bad.exit_code == 2);
    auto unknown = run_cli("construct --kind nonsense -n 1 -m 1 --out " + rl.string());
    CHECK(unknown.exit_code == 2);
    auto missing = run_cli("construct --kind k3-lower -n 4 --out x.txt");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("everything construct emits passes validate")
{
    int case_id = 0;
    auto pipeline = [&](const std::string& kind, int n, int m, int k) {
        fs::path file = temp_dir() / ("grid" + std::to_string(case_id++) + ".txt");
        std::string args = "construct --kind " + kind + " -n " + std::to_string(n) + " -m "
                           + std::to_string(m) + " -k " + std::to_string(k) + " --out "
                           + file.string();
        CHECK(run_cli(args).exit_code == 0);
        auto v = run_cli("validate " + file.string() + " -n " + std::to_string(n) + " -m "
                         + std::to_string(m) + " --rainbow");
        CHECK(v.exit_code == 0);
        check_against("certificate.schema.json", slurp(file.string() + ".cert.json"));
    };
    for (int n : {13, 14})
        for (int k : {3, 4})
            pipeline("k-lower", n, 1, k);
    for (int n : {4, 5, 9})
        pipeline("k3-lower", n, 1, 3);
    pipeline("ramsey-lower", 3, 1, 2);
    pipeline("ramsey-lower", 2, 2, 2);
    pipeline("ramsey-lower", 4, 2, 2);
}

TEST_CASE("validate flags parse errors as exit 2")
{
    fs::path bad = temp_dir() / "bad.txt";
    std::ofstream(bad) << "gallai-coloring v1\n3 2\n0\n2 0\n"; // color 2 with k=2
    auto r = run_cli("validate " + bad.string() + " -n 1 -m 1");
    CHECK(r.exit_code == 2);

    auto gone = run_cli("validate " + (temp_dir() / "nope.txt").string() + " -n 1 -m 1");
    CHECK(gone.exit_code == 2);
}

TEST_CASE("validate rejects an all-red complete graph")
{
    gallai::EdgeColoring g(5, 2, 0);
    fs::path file = temp_dir() / "allred.txt";
    gallai::save_coloring_file(g, file.string());
    auto r = run_cli("validate " + file.string() + " -n 3 -m 0");
    CHECK(r.exit_code == 1);
    check_against("double-star-witness.schema.json", r.out);
}

TEST_CASE("partition subcommand recovers blow-ups and reports rainbow inputs")
{
    fs::path file = temp_dir() / "blowup.txt";
    run_cli("construct --kind k3-lower -n 4 -m 1 --out " + file.string());

    auto parts = run_cli("partition " + file.string());
    CHECK(parts.exit_code == 0);
    std::string first_line = parts.out.substr(0, parts.out.find('\n'));
    json p = check_against("partition.schema.json", first_line);
    CHECK(p["parts"].size() == 5);
    // the reduced graph follows in coloring file format
    CHECK(parts.out.find("gallai-coloring v1\n5 3\n") != std::string::npos);

    fs::path rainbow = temp_dir() / "rainbow.txt";
    std::ofstream(rainbow) << "gallai-coloring v1\n3 3\n0\n1 2\n";
    auto r = run_cli("partition " + rainbow.string());
    CHECK(r.exit_code == 1);
    check_against("rainbow-witness.schema.json", r.out);

    auto j = run_cli("partition " + file.string() + " --json");
    CHECK(j.exit_code == 0);
    json combined = json::parse(j.out);
    CHECK(combined["reducedGraph"]["order"] == 5);

    // 2-colorings always partition (worst case: all singleton parts)
    fs::path two = temp_dir() / "two.txt";
    std::ofstream(two) << "gallai-coloring v1\n5 2\n0\n1 0\n1 1 0\n0 1 1 0\n";
    auto t = run_cli("partition " + two.string());
    CHECK(t.exit_code == 0);
    check_against("partition.schema.json", t.out.substr(0, t.out.find('\n')));
}

TEST_CASE("number prints plain values and honors bounded scans")
{
    auto five = run_cli("number --colors 2 -n 1 -m 1");
    CHECK(five.exit_code == 0);
    CHECK(five.out == "5\n");

    auto capped = run_cli("number --colors 3 -n 3 -m 1 --rainbow --max-order 6");
    CHECK(capped.exit_code == 1);

    auto as_json = run_cli("number --colors 2 -n 1 -m 1 --json");
    CHECK(as_json.exit_code == 0);
    json record = check_against("number-result.schema.json", as_json.out);
    CHECK(record["value"] == 5);
}

TEST_CASE("search emits a schema-conforming record and witness file")
{
    fs::path wit = temp_dir() / "witness.txt";
    auto found = run_cli("search --order 4 --colors 2 -n 1 -m 1 --out " + wit.string()
                         + " --json");
    CHECK(found.exit_code == 0);
    json record = check_against("search-result.schema.json", found.out);
    CHECK(record["status"] == "witness");
    auto revalidate = run_cli("validate " + wit.string() + " -n 1 -m 1");
    CHECK(revalidate.exit_code == 0);

    auto exhausted = run_cli("search --order 5 --colors 2 -n 1 -m 1 --json");
    CHECK(exhausted.exit_code == 0);
    CHECK(check_against("search-result.schema.json", exhausted.out)["status"] == "exhausted");

    auto capped = run_cli("search --order 7 --colors 2 -n 2 -m 2 --budget 10 --json");
    CHECK(capped.exit_code == 1);
    CHECK(check_against("search-result.schema.json", capped.out)["status"] == "inconclusive");

    auto threaded = run_cli("search --order 6 --colors 2 -n 1 -m 1 --threads 2 --prefix 4 --json");
    CHECK(threaded.exit_code == 0);
    json tr = check_against("search-result.schema.json", threaded.out);
    CHECK(tr["status"] == "exhausted");
    CHECK(tr["shardLayout"]["threads"] == 2);
}

TEST_CASE("formula output in both formats")
{
    auto text = run_cli("formula --which gr-exact -n 13 -m 1 -k 3");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("Exact 32") != std::string::npos);

    auto as_json = run_cli("formula --which gr-bounds -n 1 -m 1 -k 3 --json");
    CHECK(as_json.exit_code == 0);
    json r = check_against("bound-report.schema.json", as_json.out);
    CHECK(r["status"] == "Interval");
    CHECK(r["statedLower"] == 7);
    CHECK(r["provenLower"] == 6);

    auto ramsey = run_cli("formula --which ramsey -n 2 -m 2 --json");
    CHECK(check_against("bound-report.schema.json", ramsey.out)["status"] == "Exact");

    auto bad = run_cli("formula --which nope -n 1 -m 1");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("generate writes loadable colorings and a module tree")
{
    fs::path file = temp_dir() / "gen.txt";
    fs::path tree = temp_dir() / "gen.tree.json";
    auto r = run_cli("generate --order 20 --colors 3 --seed 7 --out " + file.string()
                     + " --tree " + tree.string());
    CHECK(r.exit_code == 0);
    gallai::EdgeColoring g = gallai::load_coloring_file(file.string());
    CHECK(g.order() == 20);
    json t = json::parse(slurp(tree));
    CHECK(t["lo"] == 0);
    CHECK(t["hi"] == 20);

    // determinism: same seed, same bytes
    fs::path file2 = temp_dir() / "gen2.txt";
    run_cli("generate --order 20 --colors 3 --seed 7 --out " + file2.string());
    CHECK(slurp(file) == slurp(file2));

    // always rainbow-triangle-free, whatever the seed
    auto v = run_cli("validate " + file.string() + " -n 19 -m 18 --rainbow");
    CHECK(v.exit_code == 0);
}
