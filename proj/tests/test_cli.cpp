#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "pade/cli.hpp"
#include "pade/series_io.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, const char* env_mode = nullptr) {
    std::ostringstream out, err;
    const int code = pade::cli::run(args, out, err, env_mode);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return std::string(PADE_FIXTURE_DIR) + "/" + name + ".json";
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

// Output without the header line.
std::vector<std::string> body(const std::string& s) {
    auto v = lines(s);
    v.erase(v.begin());
    return v;
}

}  // namespace

TEST_CASE("uni on the geometric series") {
    auto r = call({"uni", fixture("geometric"), "1"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(0) == "A: [0, 1]  B: [1, -1]");

    r = call({"uni", fixture("geometric"), "0"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(0) == "A: [0]  B: [1]");

    r = call({"uni", fixture("geometric"), "1", "--algo", "oracle"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(0) == "A: [0, 1]  B: [1, -1]");

    r = call({"uni", fixture("geometric"), "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("(6, 0)") != std::string::npos);
}

TEST_CASE("biv check and symmetry") {
    for (const char* side : {"left", "right"}) {
        for (const char* algo : {"recursion", "oracle"}) {
            const auto r = call({"biv", fixture("random"), "2", "2", "--side", side, "--algo", algo, "--check"});
            CHECK(r.code == 0);
            CHECK(r.out.find("check: recursion and oracle agree") != std::string::npos);
        }
    }
    const auto left = call({"biv", fixture("symmetric"), "2", "1"});
    const auto right = call({"biv", fixture("symmetric"), "1", "2", "--side", "right"});
    REQUIRE(left.code == 0);
    REQUIRE(right.code == 0);
    CHECK(lines(left.out).at(0).rfind("left-(2,1)", 0) == 0);
    CHECK(lines(right.out).at(0).rfind("right-(1,2)", 0) == 0);
    CHECK(body(left.out) == body(right.out));
}

TEST_CASE("biv exit codes") {
    auto r = call({"biv", fixture("degenerate"), "2", "1"});
    CHECK(r.code == 3);
    CHECK(r.err.find("degenerate") != std::string::npos);
    CHECK(r.err.find("n=2, m=1, p=0") != std::string::npos);

    r = call({"biv", fixture("near_degenerate"), "2", "1", "--mode", "float", "--check"});
    CHECK(r.code == 4);
    CHECK(r.err.find("check failed") != std::string::npos);

    r = call({"biv", fixture("near_degenerate"), "2", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("float mode") != std::string::npos);

    r = call({"biv", "/nonexistent.json", "1", "1"});
    CHECK(r.code == 2);
}

TEST_CASE("riccati parameters are validated") {
    auto r = call({"riccati", "--beta", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("beta must be non-integer") != std::string::npos);
    r = call({"riccati", "--alpha", "-1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("alpha must be positive") != std::string::npos);
}

TEST_CASE("riccati csv output") {
    const auto r = call({"riccati", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto v = lines(r.out);
    REQUIRE(v.size() == 11);
    CHECK(v[0] == "n,err_left,err_right,time_general_s,time_refined_s");
    CHECK(v[1].rfind("1,2.957797e+00,2.957797e+00,", 0) == 0);
    CHECK(v[10].rfind("10,1.958036e-41,1.958036e-41,", 0) == 0);
}

TEST_CASE("riccati json output") {
    const auto r = call({"riccati", "--nmax", "3", "--format", "json", "--jobs", "2"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["beta"] == "1/2");
    CHECK(doc["c01_exact"].get<std::string>().rfind("8.957797231718439", 0) == 0);
    REQUIRE(doc["rows"].size() == 3);
    std::vector<std::string> keys;
    for (const auto& [k, _] : doc["rows"][0].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"n", "err_left", "err_right", "time_general_s", "time_refined_s", "note"});
    CHECK(doc["rows"][2]["n"] == 3);
}

TEST_CASE("riccati timeout leaves a ? cell") {
    const auto r = call({"riccati", "--nmax", "2", "--timeout-secs", "0.000001", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto v = lines(r.out);
    REQUIRE(v.size() == 3);
    CHECK(v[2].find(",?,") != std::string::npos);
    CHECK(r.err.find("general timed out") != std::string::npos);
    CHECK(call({"riccati", "--timeout-secs", "0"}).code == 2);
}

TEST_CASE("mode selection") {
    const std::vector<std::string> args{"uni", fixture("geometric"), "1"};
    CHECK(call(args, "bogus").code == 2);
    CHECK(call(args, "float").code == 0);
    auto with_flag = args;
    with_flag.insert(with_flag.end(), {"--mode", "exact"});
    CHECK(call(with_flag, "bogus").code == 0);
    with_flag.back() = "fast";
    CHECK(call(with_flag).code == 2);
}

TEST_CASE("bench reports every variant") {
    const auto r = call({"bench", "--nmax", "2", "--repeats", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto v = lines(r.out);
    REQUIRE(v.size() == 8);
    CHECK(v[0] == "variant,n,repeats,median_s");
    int i = 1;
    for (const char* name : {"uni_general", "uni_explicit", "uni_ratios", "left_general", "left_refined",
                             "right_general", "right_refined"}) {
        CHECK(v[static_cast<std::size_t>(i++)].rfind(std::string(name) + ",2,1,", 0) == 0);
    }
}

TEST_CASE("series output parses back") {
    const auto r = call({"series", "--N", "4", "--M", "2", "--c01", "3/2"});
    REQUIRE(r.code == 0);
    const auto f = pade::parse_series_json<pade::Rational>(r.out);
    CHECK(f.series.x_order() == 4);
    CHECK(f.series.y_order() == 2);
    CHECK(f.series(0, 1) == pade::Rational(3, 2));
    CHECK(f.series(1, 0) == pade::Rational(-2));
}

TEST_CASE("unknown subcommands and options") {
    CHECK(call({"nope"}).code == 2);
    CHECK(call({"uni", fixture("geometric"), "1", "--bogus"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}
