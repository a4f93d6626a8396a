#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "sparsecurves/document.hpp"

using namespace sparsecurves;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "sparsecurves");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path path = std::filesystem::temp_directory_path() / "sparsecurves_cli_test";
    TempDir() { std::filesystem::create_directories(path); }
    ~TempDir() { std::filesystem::remove_all(path); }
    [[nodiscard]] std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("construct") {
    TempDir dir;
    const auto path = dir.file("g16.json");
    auto r = run({"construct", "--g", "16", "--alpha", "0/1", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("curves: 32") != std::string::npos);
    CHECK(r.out.find("hPrime: 8") != std::string::npos);
    CHECK(r.out.find("baseGenus: 0") != std::string::npos);
    CHECK(parse_document(read_file(path)).curves.size() == 32);

    const auto again = dir.file("g16b.json");
    CHECK(run({"construct", "--g", "16", "--alpha", "0/1", "--out", again}).code == 0);
    CHECK(read_file(path) == read_file(again));

    r = run({"construct", "--g", "15", "--alpha", "0/1", "--out", dir.file("bad.json")});
    CHECK(r.code == cli::kDomainError);
    CHECK(r.err.find("g >= 16 required") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir.file("bad.json")));

    r = run({"construct", "--g", "64", "--alpha", "1/1", "--out", dir.file("a.json")});
    CHECK(r.code == cli::kDomainError);
    CHECK(r.err.find("--analytic") != std::string::npos);

    r = run({"construct", "--g", "64", "--alpha", "1/1", "--analytic", "--out", dir.file("a.json")});
    CHECK(r.code == 0);
    const auto doc = parse_document(read_file(dir.file("a.json")));
    CHECK(doc.mode == CountingMode::Analytic);
    CHECK(doc.curves.empty());

    CHECK(run({"construct", "--g", "16", "--alpha", "x", "--out", path}).code == cli::kDomainError);
    CHECK(run({"construct", "--alpha", "0/1"}).code == cli::kDomainError);
}

TEST_CASE("verify") {
    TempDir dir;
    const auto path = dir.file("g16.json");
    REQUIRE(run({"construct", "--g", "16", "--alpha", "0/1", "--out", path}).code == 0);

    auto r = run({"verify", "--in", path, "--f", "gpow", "--out", dir.file("report.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("sparse: yes") != std::string::npos);
    CHECK(r.out.find("distinct homology classes") != std::string::npos);
    CHECK(r.out.find("hp_inequality: not_applicable") != std::string::npos);
    const auto reported = parse_document(read_file(dir.file("report.json")));
    REQUIRE(reported.report.has_value());
    CHECK(reported.report->totalCrossings == 0);
    CHECK(reported.certificate->distinct);

    SUBCASE("duplicated curve") {
        auto doc = parse_document(read_file(path));
        doc.curves.push_back(doc.curves[3]);
        doc.curveCount += 1;
        write_atomically(dir.file("dup.json"), serialize(doc));
        r = run({"verify", "--in", dir.file("dup.json")});
        CHECK(r.code == cli::kCertificateFailure);
        CHECK(r.out.find("collision") != std::string::npos);
    }
    SUBCASE("singleton") {
        auto doc = parse_document(read_file(path));
        doc.curves.resize(1);
        doc.curveCount = 1;
        write_atomically(dir.file("one.json"), serialize(doc));
        r = run({"verify", "--in", dir.file("one.json")});
        CHECK(r.code == cli::kDomainError);
        CHECK(r.err.find("undefined average") != std::string::npos);
    }
    SUBCASE("not sparse") {
        REQUIRE(run({"construct", "--g", "36", "--out", dir.file("g36.json")}).code == 0);
        CHECK(run({"verify", "--in", dir.file("g36.json"), "--f", "1/100"}).code == cli::kNotSparse);
        CHECK(run({"verify", "--in", dir.file("g36.json"), "--f", "1"}).code == 0);
        CHECK(run({"verify", "--in", dir.file("g36.json"), "--f", "0"}).code == cli::kDomainError);
    }
    SUBCASE("analytic document") {
        REQUIRE(run({"construct", "--g", "64", "--alpha", "1/1", "--analytic", "--out", dir.file("a.json")}).code == 0);
        r = run({"verify", "--in", dir.file("a.json")});
        CHECK(r.code == 0);
        CHECK(r.out.find("structural") != std::string::npos);
    }
    SUBCASE("malformed input") {
        write_atomically(dir.file("broken.json"), "{\n \"schemaVersion\": 1,\n oops\n}");
        r = run({"verify", "--in", dir.file("broken.json")});
        CHECK(r.code == cli::kIoError);
        CHECK(r.err.find("line 3") != std::string::npos);
        CHECK(run({"verify", "--in", dir.file("missing.json")}).code == cli::kIoError);
    }
}

TEST_CASE("bounds") {
    TempDir dir;
    auto r = run({"bounds", "--g", "16,25,36,49,64", "--alpha", "0/1", "--format", "csv", "--out", dir.file("t.csv")});
    CHECK(r.code == 0);
    const auto csv = read_file(dir.file("t.csv"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(csv.find("false") == std::string::npos);

    r = run({"bounds", "--g", "16..20", "--alpha", "0/1,1/1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rows\"") != std::string::npos);

    r = run({"bounds", "--g", "16..1000000", "--log-points", "5", "--alpha", "1/2"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

    CHECK(run({"bounds", "--g", "16", "--format", "xml"}).code == cli::kDomainError);
}

TEST_CASE("oracle and config") {
    auto r = run({"oracle", "--pairs", "300", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("agreement: 300/300") != std::string::npos);

    TempDir dir;
    const auto cfg = dir.file("run.toml");
    write_atomically(cfg, "[construct]\ng = 36\nalpha = \"0/1\"\nout = \"" + dir.file("cfg.json") + "\"\n");
    r = run({"--config", cfg, "construct"});
    CHECK(r.code == 0);
    CHECK(r.out.find("curves: 192") != std::string::npos);

    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == cli::kDomainError);
}
