#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polytrope/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace polytrope;

#ifndef POLYTROPE_CLI
#error "POLYTROPE_CLI must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("polytrope_cli_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str(const std::string& name = "") const { return (path / name).string(); }
};

int run(const std::string& args, const std::string& redirect = "/dev/null") {
    const std::string cmd = std::string(POLYTROPE_CLI) + " " + args + " > " + redirect + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("kleene round trips through the cli") {
    TempDir dir;
    write_file(dir.str("c.json"), R"({"n":3,"entries":[["0","1","1"],["1","0","1"],["1","1","0"]]})");
    CHECK(run("kleene --input " + dir.str("c.json") + " --json", dir.str("out.json")) == 0);
    const WeightMatrix out = WeightMatrix::from_json_text(read_file(dir.str("out.json")));
    CHECK(out == all_ones_matrix(3)); // interior points are their own closure
}

TEST_CASE("cli exit codes: usage 2, data errors 1") {
    CHECK(run("enumerate --n 4 --mode bogus --out /tmp/ignored") == 2);
    CHECK(run("nonsense") == 2);
    CHECK(run("binomials --n 4 --m 3") == 2); // BadBlockSize is a usage error
    CHECK(run("kleene --input /definitely/missing.json") == 1);
    TempDir dir;
    write_file(dir.str("neg.json"), R"({"n":2,"entries":[["0","1"],["-2","0"]]})");
    CHECK(run("kleene --input " + dir.str("neg.json")) == 1); // negative cycle
    CHECK(run("verify --n 4 --level quick") == 0);
}

TEST_CASE("enumerate writes a reproducible bundle; resume is a no-op when complete") {
    TempDir a, b;
    CHECK(run("enumerate --n 4 --mode maximal --out " + a.str() + " --seed 10") == 0);
    CHECK(run("enumerate --n 4 --mode maximal --out " + b.str() + " --seed 77") == 0);
    CHECK(read_file(a.str("records.jsonl")) == read_file(b.str("records.jsonl")));
    CHECK(read_file(a.str("summary.json")) == read_file(b.str("summary.json")));
    CHECK(read_file(a.str("table2.csv")) == read_file(b.str("table2.csv")));

    const auto records = read_records_file(a.str("records.jsonl"));
    CHECK(records.size() == 6);

    const RunManifest manifest = RunManifest::from_json(read_file(a.str("manifest.json")));
    CHECK(manifest.completed);
    CHECK(manifest.counts.at("classes") == 6);
    CHECK(manifest.output_hashes.at("records.jsonl") == file_hash(a.str("records.jsonl")));

    CHECK(run("resume " + a.str()) == 0); // no-op

    // tampering with an output is detected
    std::ofstream(a.str("records.jsonl"), std::ios::app) << "\n";
    CHECK(run("resume " + a.str()) == 2);
}

TEST_CASE("interrupted cli run resumes to the identical bundle") {
    TempDir clean, interrupted;
    CHECK(run("enumerate --n 4 --mode maximal --out " + clean.str() + " --seed 5") == 0);
    CHECK(run("enumerate --n 4 --mode maximal --out " + interrupted.str() +
              " --seed 5 --max-waves 1 --checkpoint-cadence 1") == 0);
    CHECK(file_exists(interrupted.str("checkpoint.json")));
    CHECK_FALSE(file_exists(interrupted.str("records.jsonl")));
    CHECK(run("resume " + interrupted.str()) == 0);
    CHECK(read_file(clean.str("records.jsonl")) == read_file(interrupted.str("records.jsonl")));
    CHECK(read_file(clean.str("summary.json")) == read_file(interrupted.str("summary.json")));
}

TEST_CASE("corrupted checkpoints abort the resume with exit 2") {
    TempDir dir;
    CHECK(run("enumerate --n 4 --mode maximal --out " + dir.str() +
              " --seed 5 --max-waves 1 --checkpoint-cadence 1") == 0);
    std::string text = read_file(dir.str("checkpoint.json"));
    const auto pos = text.find("expanded");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "expandex");
    write_file(dir.str("checkpoint.json"), text);
    CHECK(run("resume " + dir.str()) == 2);
}

TEST_CASE("classify emits the csv histogram and per-class json") {
    TempDir dir;
    CHECK(run("enumerate --n 4 --mode maximal --out " + dir.str()) == 0);
    CHECK(run("classify --n 4 --records " + dir.str("records.jsonl") + " --out " +
              dir.str("hist.csv")) == 0);
    const std::string csv = read_file(dir.str("hist.csv"));
    CHECK(csv == "vertices,classes\n20,6\n"); // all six classes are maximal
    CHECK(file_exists(dir.str("hist.csv.classes.json")));
}

TEST_CASE("thread count does not change outputs") {
    TempDir one, two;
    CHECK(run("enumerate --n 4 --mode all --filter-boundary --out " + one.str() + " --threads 1") == 0);
    CHECK(run("enumerate --n 4 --mode all --filter-boundary --out " + two.str() + " --threads 2") == 0);
    for (const char* name : {"records.jsonl", "summary.json", "kept.jsonl", "removed.jsonl", "table3.csv"})
        CHECK(read_file(one.str(name)) == read_file(two.str(name)));
}
