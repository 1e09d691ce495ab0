#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include <wcqsym/cli.hpp>

using wcqsym::run_cli;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("renorm command")
{
    CHECK(run({"renorm", "0,0"}).out == "1/2*t^2 + t + 3/8\n");
    CHECK(run({"renorm", ""}).out == "1\n");
    CHECK(run({"renorm", "2,0"}).out == "-(t+3/2)*M[2] - M[0,2]\n");
    CHECK(run({"renorm", "0"}).out == "-t - 1/2\n");
    CHECK(run({"renorm", "1,0,0"}).out == "(1/2*t^2+2*t+15/8)*M[1] + (t+5/2)*M[0,1] + M[0,0,1]\n");
    CHECK(run({"renorm", "0,1"}).out == "M[0,1]\n");
    auto checked = run({"renorm", "0,2,0", "--check-delta", "--delta", "3"});
    CHECK(checked.code == 0);
    CHECK(checked.out == "-(t+5/2)*M[0,2] - 2*M[0,0,2]\n");
    CHECK(run({"renorm", "0,0", "--delta", "2", "--check-delta"}).code == 0);
}

TEST_CASE("renorm with a series expansion")
{
    auto r = run({"renorm", "2,0", "--expand", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "-(t+3/2)*M[2] - M[0,2]\n(-3/2 - t) * x_1^2 + (-5/2 - t) * x_2^2 + (-7/2 - t) * x_3^2\n");
}

TEST_CASE("product, coproduct and antipode commands")
{
    CHECK(run({"product", "1", "0"}).out == "M[1] + M[0,1] + M[1,0]\n");
    CHECK(run({"product", "1", "2"}).out == "M[3] + M[1,2] + M[2,1]\n");
    CHECK(run({"product", "0", "0"}).out == "M[0] + 2*M[0,0]\n");
    CHECK(run({"product", "1", "", "2"}).out == "M[3] + M[1,2] + M[2,1]\n");
    CHECK(run({"antipode", "3"}).out == "-M[3]\n");
    CHECK(run({"antipode", "1,0"}).out == "M[1] + M[0,1]\n");
    CHECK(run({"antipode", ""}).out == "M[]\n");
    auto cop = run({"coproduct", "1,2"});
    CHECK(cop.out == "M[] (x) M[1,2] + M[1] (x) M[2] + M[1,2] (x) M[]\n");
}

TEST_CASE("phi command")
{
    CHECK(run({"phi", "0", "1", "--window", "-1:1"}).out == "z^-1: -1; z^0: -t-1/2; z^1: -1/2*t^2-1/2*t-1/12\n");
    CHECK(run({"phi", "0", "1", "--window=-1:1"}).out == "z^-1: -1; z^0: -t-1/2; z^1: -1/2*t^2-1/2*t-1/12\n");
    auto pos = run({"phi", "2", "1"});
    CHECK(pos.code == 0);
    CHECK(pos.out.find("z^-") == std::string::npos);
    CHECK(pos.out.rfind("z^0: M[2];", 0) == 0);
    // default window is [-k, k]
    CHECK(run({"phi", "0", "2"}).out.find("z^2") == std::string::npos);
    CHECK(run({"phi", "0", "2"}).out.find("z^1") != std::string::npos);
    CHECK(run({"phi", "", ""}).out == "z^0: 1\n");
}

TEST_CASE("exit codes")
{
    CHECK(run({"phi", "0,1", "1"}).code == 2);
    CHECK(run({"phi", "0", "0"}).code == 2);
    CHECK(run({"phi", "0,0", "1,1", "--window", "-1:1"}).code == 1);
    CHECK(run({"phi", "0", "1", "--window", "1:-1"}).code == 1);
    CHECK(run({"phi", "0", "1", "--window", "abc"}).code == 2);
    CHECK(run({"renorm", "1,x"}).code == 2);
    CHECK(run({"renorm", "-1"}).code == 2);
    CHECK(run({"renorm", "1", "--delta", "0"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"product", "1"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"antipode", "1", "--window", "0:1"}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("renorm") != std::string::npos);
    auto bad = run({"renorm", "1,,2"});
    CHECK(bad.out.empty());
    CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("verify command")
{
    auto r = run({"verify", "paper-examples"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.substr(r.out.size() - 5) == "PASS\n");
    CHECK(run({"verify", "stirling"}).code == 0);
    CHECK(run({"verify", "quasi-shuffle", "--max-size", "4"}).code == 0);
    auto small = run({"verify", "hopf", "--max-size", "2"});
    CHECK(small.code == 0);
    CHECK(small.out.find("(max size 2)") != std::string::npos);
}

TEST_CASE("machine-readable output")
{
    const std::vector<std::vector<std::string>> commands{
        {"renorm", "2,0", "--json"},
        {"renorm", "0,0", "--json", "--expand", "2", "--check-delta"},
        {"product", "1", "0", "--json"},
        {"coproduct", "1,0", "--json"},
        {"antipode", "0,1", "--json"},
        {"phi", "1,0", "1,2", "--json"},
    };
    for (const auto &cmd : commands) {
        auto r = run(cmd);
        REQUIRE(r.code == 0);
        REQUIRE(r.out.back() == '\n');
        std::string body = r.out.substr(0, r.out.size() - 1);
        auto j = nlohmann::json::parse(body);
        CHECK(j.dump() == body);
        CHECK(j.contains("basis"));
        CHECK(j.contains("terms"));
        CHECK(j.contains("meta"));
        CHECK(j["meta"]["command"] == cmd[0]);
        CHECK(run(cmd).out == r.out);
    }
    auto j = nlohmann::json::parse(run({"renorm", "2,0", "--json"}).out);
    CHECK(j["basis"] == "M-lwc-tpoly");
    CHECK(j["meta"]["delta"] == 1);
    CHECK(j["terms"][0]["index"] == nlohmann::json::array({2}));
    CHECK(j["terms"][0]["coeff"] == nlohmann::json::array({"-3/2", "-1"}));
    CHECK(j["terms"][1]["index"] == nlohmann::json::array({0, 2}));
    CHECK(j["terms"][1]["coeff"] == nlohmann::json::array({"-1"}));
    auto p = nlohmann::json::parse(run({"product", "1", "0", "--json"}).out);
    CHECK(p["basis"] == "M-wc");
    CHECK(p["terms"].size() == 3);
    CHECK(p["terms"][0]["coeff"] == "1");
    auto c = nlohmann::json::parse(run({"coproduct", "1,0", "--json"}).out);
    CHECK(c["terms"][1]["index"] == nlohmann::json::parse("[[1],[0]]"));
    auto f = nlohmann::json::parse(run({"phi", "0", "1", "--json", "--window", "-1:0"}).out);
    CHECK(f["terms"].size() == 2);
    CHECK(f["terms"][0]["z"] == -1);
    CHECK(f["meta"]["window"] == nlohmann::json::array({-1, 0}));
    auto e = nlohmann::json::parse(run({"renorm", "1", "--json", "--expand", "2"}).out);
    CHECK(e["meta"]["expansion"]["basis"] == "series");
    CHECK(e["meta"]["expansion"]["n_vars"] == 2);
    CHECK(e["meta"]["expansion"]["terms"][0]["index"] == nlohmann::json::parse("[[1,1]]"));
}
