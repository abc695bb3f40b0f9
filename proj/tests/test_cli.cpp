#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdsum/cli.hpp"

using json = nlohmann::json;

namespace {

struct result {
    int code;
    std::string out;
    std::string err;
};

result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = mdsum::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rsum prints the exact value") {
    auto r = run({"rsum", "3", "1", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "-2/9\n");
}

TEST_CASE("dsum and defect") {
    REQUIRE(run({"dsum", "3", "1"}).out == "1/18\n");
    REQUIRE(run({"dsum", "5", "2"}).out == "0\n");
    REQUIRE(run({"defect", "1", "2", "3"}).out == "0\n");
    REQUIRE(run({"defect", "2", "5", "29"}).out == "0\n");
}

TEST_CASE("value commands emit JSON on request") {
    auto r = run({"rsum", "3", "1", "2", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["value"] == "-2/9");
}

TEST_CASE("domain errors exit 1 and name the violated precondition") {
    auto r = run({"rsum", "4", "2", "1"});
    REQUIRE(r.code == 1);
    REQUIRE(r.out.empty());
    REQUIRE(r.err.find("gcd(4, 2)") != std::string::npos);

    REQUIRE(run({"dsum", "6", "3"}).code == 1);
    REQUIRE(run({"defect", "2", "4", "1"}).code == 1);
    REQUIRE(run({"oracle", "--f", "3", "--max", "501"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
    REQUIRE(run({}).code == 2);
    REQUIRE(run({"frobnicate"}).code == 2);
    REQUIRE(run({"dsum", "3"}).code == 2);
    REQUIRE(run({"dsum", "3", "1", "9"}).code == 2);
    REQUIRE(run({"dsum", "3", "x"}).code == 2);
    REQUIRE(run({"markov"}).code == 2);
    REQUIRE(run({"markov", "frob"}).code == 2);
    REQUIRE(run({"markov", "list"}).code == 2);           // missing --max
    REQUIRE(run({"verify", "--max", "5"}).code == 2);     // missing subcommand
    REQUIRE(run({"solve", "--max", "5"}).code == 2);      // missing --f
    REQUIRE(run({"rsum", "3", "1", "2", "--frob"}).code == 2);
}

TEST_CASE("polynomial syntax errors exit 2 with a position") {
    auto r = run({"solve", "--f", "2a", "--max", "5"});
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("position 1") != std::string::npos);

    r = run({"solve", "--f", "a^-1", "--max", "5"});
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("position") != std::string::npos);
}

TEST_CASE("markov list") {
    auto r = run({"markov", "list", "--max", "30"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out ==
            "[1, 1, 1]\n"
            "[1, 1, 2]\n"
            "[1, 2, 5]\n"
            "[1, 5, 13]\n"
            "[2, 5, 29]\n");

    json j = json::parse(run({"markov", "list", "--max", "30", "--json"}).out);
    REQUIRE(j["bound"] == 30);
    REQUIRE(j["count"] == 5);
    REQUIRE(j["triples"].size() == 5);
    REQUIRE(j["triples"][0] == json::array({1, 1, 1}));
}

TEST_CASE("markov check") {
    auto r = run({"markov", "check", "1", "2", "5"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out ==
            "triple: [1, 2, 5]\n"
            "is_markov: true\n"
            "condition: true\n"
            "pairwise_coprime: true\n");

    json j = json::parse(run({"markov", "check", "3", "3", "3", "--json"}).out);
    REQUIRE(j["is_markov"] == false);
    REQUIRE(j["condition"] == true);
    REQUIRE(j["pairwise_coprime"] == false);
}

TEST_CASE("verify equivalence JSON matches the documented schema") {
    auto r = run({"verify", "equivalence", "--max", "5", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["bound"] == 5);
    REQUIRE(j["counts"]["eq1"] == 3);
    REQUIRE(j["counts"]["cond2"] == 3);
    REQUIRE(j["counts"]["dzero"] == 3);
    REQUIRE(j["triples"] ==
            json::array({json::array({1, 1, 1}), json::array({1, 1, 2}),
                         json::array({1, 2, 5})}));
    REQUIRE(j["counterexamples"] == json::array());
    REQUIRE(j["passed"] == true);
}

TEST_CASE("verify equivalence text output") {
    auto r = run({"verify", "equivalence", "--max", "5", "--sample", "10"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("equivalence: HOLDS") != std::string::npos);
    REQUIRE(r.out.find("counterexamples: 0") != std::string::npos);
}

TEST_CASE("solve JSON matches the documented schema") {
    auto r = run({"solve", "--f", "3", "--max", "5", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["f"] == "3");
    REQUIRE(j["bound"] == 5);
    REQUIRE(j["verdict"] == "SolutionsAreMarkov");
    // permutations of (1,1,1), (1,1,2), (1,2,5)
    REQUIRE(j["solutions"].size() == 10);
    REQUIRE(j["branches"]["k1"].size() == 3);
    REQUIRE(j["branches"]["k3"] == json::array());

    json j4 = json::parse(run({"solve", "--f", "4", "--max", "10", "--json"}).out);
    REQUIRE(j4["verdict"] == "ProvablyEmpty");
    REQUIRE(j4["solutions"] == json::array());
}

TEST_CASE("oracle output") {
    auto r = run({"oracle", "--f", "1", "--max", "3"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "[3, 3, 3]\n");

    json j = json::parse(run({"oracle", "--f", "3", "--max", "5", "--json"}).out);
    REQUIRE(j["solutions"].size() == 10);
}

TEST_CASE("identical argv yields byte-identical output") {
    const std::vector<std::string> argv{"verify", "equivalence", "--max",
                                        "40",     "--sample",    "100", "--json"};
    auto r1 = run(argv);
    auto r2 = run(argv);
    REQUIRE(r1.code == 0);
    REQUIRE(r1.out == r2.out);

    auto s1 = run({"solve", "--f", "a+b+c", "--max", "60", "--json"});
    auto s2 = run({"solve", "--f", "a+b+c", "--max", "60", "--json"});
    REQUIRE(s1.out == s2.out);
}

TEST_CASE("help exits 0") {
    auto r = run({"help"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("usage:") != std::string::npos);
}
