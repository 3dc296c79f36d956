#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "digitroot/cli.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"digitroot"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code =
        digitroot::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("root subcommands print the floor root") {
    auto r = run_cli({"cbrt", "34965783"});
    CHECK(r.code == 0);
    CHECK(r.out == "327\n");
    CHECK(r.err.empty());

    r = run_cli({"sqrt", "11943936"});
    CHECK(r.code == 0);
    CHECK(r.out == "3456\n");

    r = run_cli({"sqrt", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "3 r 1\n");

    r = run_cli({"sqrt", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("malformed numbers exit 2 with a diagnostic") {
    const auto r = run_cli({"sqrt", "12x4"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"quartic", "16"}).code == 1);
    CHECK(run_cli({"sqrt"}).code == 1);
    CHECK(run_cli({"verify", "--k", "4", "--max", "10"}).code == 1);
    CHECK(run_cli({"verify", "--k", "2"}).code == 1);
    CHECK(run_cli({"verify", "--k", "2", "--random", "5"}).code == 1); // needs --digits
    CHECK(run_cli({"verify", "--k", "2", "--random", "5", "--digits", "0"}).code == 1);
    CHECK(run_cli({"sqrt", "100", "--json", "--tableau"}).code == 1);
}

TEST_CASE("tableau and trace flags append their sections") {
    auto r = run_cli({"sqrt", "11943936", "--tableau"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3456\n") == 0);
    CHECK(r.out.find("Root result: 3456") != std::string::npos);

    r = run_cli({"cbrt", "34965783", "--trace"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mark-places @6") != std::string::npos);
    CHECK(r.out.find("seed @6 34 -> 3") != std::string::npos);
    CHECK(r.out.find("divide-estimate @5 79, 27 -> 2") != std::string::npos);

    r = run_cli({"cbrt", "34965783", "--count-ops"});
    CHECK(r.code == 0);
    CHECK(r.out.find("complexity (k=3, N=8)") != std::string::npos);
}

TEST_CASE("json envelope carries requested sections with fixed key order") {
    const auto r =
        run_cli({"sqrt", "11943936", "--json", "--trace", "--count-ops"});
    REQUIRE(r.code == 0);

    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["input"] == "11943936");
    CHECK(doc["k"] == 2);
    CHECK(doc["root"] == "3456");
    CHECK(doc["remainder"] == "0");
    CHECK(doc["iterations"] == 3);
    CHECK(doc["adjustments"] == 0);
    REQUIRE(doc.contains("trace"));
    CHECK(doc["trace"][0]["kind"] == "mark-places");
    CHECK(doc["trace"][2]["kind"] == "subtract");
    CHECK(doc["trace"][2]["operands"][1] == "9");
    CHECK(doc["counters"]["M"] == 12);
    CHECK(doc["counters"]["A"] == 9);
    CHECK(doc["counters"]["D"] == 3);
    CHECK(doc["counters"]["S"] == 6);
    CHECK(doc["counters"]["lookups"] == 1);
    CHECK(doc["predicted"]["M"] == 15);

    // key order is fixed by the schema
    const auto pos = [&](const char* key) { return r.out.find(std::string("\"") + key + "\""); };
    CHECK(pos("input") < pos("k"));
    CHECK(pos("k") < pos("root"));
    CHECK(pos("root") < pos("remainder"));
    CHECK(pos("remainder") < pos("iterations"));
    CHECK(pos("iterations") < pos("adjustments"));
    CHECK(pos("adjustments") < pos("trace"));
    CHECK(pos("trace") < pos("counters"));
    CHECK(pos("counters") < pos("predicted"));
}

TEST_CASE("json omits sections that were not requested") {
    const auto r = run_cli({"cbrt", "10", "--json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["root"] == "2");
    CHECK(doc["remainder"] == "2");
    CHECK_FALSE(doc.contains("trace"));
    CHECK_FALSE(doc.contains("counters"));
    CHECK_FALSE(doc.contains("predicted"));
}

TEST_CASE("json output is byte-identical across runs") {
    const auto a = run_cli({"cbrt", "34965783", "--json", "--trace", "--count-ops"});
    const auto b = run_cli({"cbrt", "34965783", "--json", "--trace", "--count-ops"});
    CHECK(a.out == b.out);
}

TEST_CASE("verify subcommand reports a summary") {
    auto r = run_cli({"verify", "--k", "2", "--max", "500"});
    CHECK(r.code == 0);
    CHECK(r.out == "ok: 501 values checked (k=2)\n");

    r = run_cli({"verify", "--k", "3", "--random", "25", "--digits", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "ok: 25 values checked (k=3)\n");

    r = run_cli({"verify", "--k", "3", "--max", "12y"});
    CHECK(r.code == 2);
}

TEST_CASE("help exits zero") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sqrt") != std::string::npos);
}
