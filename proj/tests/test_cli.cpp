#include "soliton/cli/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using soliton::cli::RunOptions;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result invoke(std::vector<std::string> args, RunOptions opts = {}) {
    std::ostringstream out, err;
    const int code = soliton::cli::run(args, out, err, opts);
    return {code, out.str(), err.str()};
}

RunOptions json_format() {
    RunOptions o;
    o.report_format = "json";
    return o;
}

bool contains_float(const Json& j) {
    if (j.is_number_float()) return true;
    if (j.is_object() || j.is_array())
        for (const auto& v : j)
            if (contains_float(v)) return true;
    return false;
}

bool contains_number(const Json& j) {
    if (j.is_number()) return true;
    if (j.is_object() || j.is_array())
        for (const auto& v : j)
            if (contains_number(v)) return true;
    return false;
}

} // namespace

TEST_SUITE("reports") {
    TEST_CASE("obstruction example") {
        const Result r = invoke({"obstruction", "--n-dim", "4", "--b-factors", "2", "--json"});
        const Json j = r.json();
        CHECK(j["schema"] == "1");
        CHECK(j["command"] == "obstruction");
        const Json& o = j["results"]["obstruction"];
        CHECK(o["reference"]["Q4"]["value"] == "2959/1575");
        CHECK(o["reference"]["Q2"]["value"] == "-311/126");
        CHECK(o["verdicts"]["n4_sum_negative"] == true);
        CHECK_FALSE(j["discrepancies"].empty());
        CHECK(j["status"] == "mismatch");
        CHECK(r.code == 2);
    }

    TEST_CASE("fss example") {
        const Result r = invoke({"fss", "--symbolic", "--json"});
        const Json p = r.json()["results"]["f_ss"]["pipeline"];
        CHECK(p["v^2"]["expr"] == "-n/3");
        CHECK(p["S_v"]["expr"] == "(-n + 6)/60");
        CHECK(p["sigma_2"]["expr"] == "(-13n + 38)/60");
        CHECK(r.code == 0);
        CHECK(r.json()["status"] == "ok");
    }

    TEST_CASE("fss at a concrete dimension") {
        const Json j = invoke({"fss", "--n-dim", "4", "--json"}).json();
        const Json p = j["results"]["f_ss"]["pipeline"];
        CHECK(p["v^2"]["value"] == "-4/3");
        CHECK(p["S_v"]["value"] == "1/30");
        CHECK(p["sigma_2"]["value"] == "-7/30");
    }

    TEST_CASE("kernel example") {
        const Result r = invoke({"kernel", "--manifold", "smxsn", "--m", "3", "--n", "3", "--json"});
        const Json k = r.json()["results"]["kernel"];
        CHECK(k["dim_conformal_kernel"] == "0");
        CHECK(k["dim_tt_kernel"] == "0");
        CHECK(r.code == 0);
    }

    TEST_CASE("stage commands report their discrepancies") {
        CHECK(invoke({"utilde", "--json"}).code == 0);
        CHECK(invoke({"hb", "--json"}).code == 2);
        CHECK(invoke({"crossterms", "--json"}).code == 2);
        CHECK(invoke({"thirdvar", "--json"}).code == 2);
        const Json hb = invoke({"hb", "--json"}).json();
        REQUIRE(hb["discrepancies"].size() == 1);
        CHECK(hb["discrepancies"][0]["quantity"] == "h_b[sigma_2]");
    }

    TEST_CASE("spectra commands") {
        const Json s = invoke({"spectrum", "--operator", "functions", "--sphere-dim", "2", "--cutoff", "6", "--json"}).json();
        const Json& e = s["results"]["spectrum"]["entries"];
        REQUIRE(e.size() == 3);
        CHECK(e[1]["value"] == "2");
        CHECK(e[1]["multiplicity"] == "3");
        const Json p = invoke({"product-spectrum", "--operator", "einstein", "--m", "2", "--n", "2", "--json"}).json();
        CHECK(p["results"]["spectrum"]["entries"][0]["value"] == "-2");
    }

    TEST_CASE("no floating point and no bare numbers in JSON") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"obstruction", "--n-dim", "4", "--json"},
                 {"crossterms", "--n-dim", "5/2", "--json"},
                 {"oracle", "--alpha", "2,3", "--json"},
                 {"product-spectrum", "--operator", "functions", "--m", "2", "--n", "3", "--json"},
                 {"verify-all", "--skip-oracle", "--json"}}) {
            const Json j = invoke(args).json();
            CHECK_FALSE(contains_float(j));
            CHECK_FALSE(contains_number(j));
        }
    }
}

TEST_SUITE("exit codes and formats") {
    TEST_CASE("byte-stable output") {
        const std::vector<std::string> args{"obstruction", "--n-dim", "4", "--json"};
        CHECK(invoke(args).out == invoke(args).out);
        const std::vector<std::string> text{"crossterms", "--n-dim", "6"};
        CHECK(invoke(text).out == invoke(text).out);
    }

    TEST_CASE("timestamps only on request") {
        CHECK_FALSE(invoke({"fss", "--json"}).json().contains("generated_at"));
        CHECK(invoke({"fss", "--json", "--timestamps"}).json().contains("generated_at"));
    }

    TEST_CASE("environment selects the default format") {
        ::setenv("SOLITON_REPORT_FORMAT", "json", 1);
        CHECK(invoke({"fss"}).json()["schema"] == "1");
        ::setenv("SOLITON_REPORT_FORMAT", "text", 1);
        const Result t = invoke({"fss"});
        CHECK(t.out.rfind("schema: 1\n", 0) == 0);
        CHECK(invoke({"fss", "--json"}).json()["command"] == "fss");
        ::setenv("SOLITON_REPORT_FORMAT", "yaml", 1);
        CHECK(invoke({"fss"}).code == 1);
        ::unsetenv("SOLITON_REPORT_FORMAT");
        CHECK(invoke({"fss"}).out.rfind("schema: 1\n", 0) == 0);
    }

    TEST_CASE("explicit format override") {
        CHECK(invoke({"fss"}, json_format()).json()["status"] == "ok");
    }

    TEST_CASE("usage errors") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {},
                 {"frobnicate"},
                 {"fss", "--unknown-flag"},
                 {"spectrum", "--operator", "functions"},
                 {"spectrum", "--operator", "laplace", "--sphere-dim", "2"},
                 {"spectrum", "--operator", "functions", "--sphere-dim", "2.5"},
                 {"spectrum", "--operator", "functions", "--sphere-dim", "5/2"},
                 {"kernel", "--manifold", "torus"},
                 {"fss", "--n-dim", "four"},
                 {"oracle", "--alpha", "1,x"}}) {
            const Result r = invoke(args);
            CAPTURE(r.err);
            CHECK(r.code == 1);
            CHECK(r.out.empty());
            CHECK_FALSE(r.err.empty());
            CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
        }
    }

    TEST_CASE("engine errors produce an error report") {
        const Result pole = invoke({"fss", "--n-dim", "4/3", "--json"}, {});
        // f_ss has no pole at 4/3; u_tilde does.
        CHECK(pole.code == 0);
        const Result r = invoke({"utilde", "--n-dim", "4/3", "--json"});
        CHECK(r.code == 1);
        CHECK(r.json()["status"] == "error");
        CHECK(r.json()["error"]["kind"] == "PoleAtPoint");

        const Result k = invoke({"kernel", "--manifold", "s2xN", "--json"});
        CHECK(k.code == 1);
        CHECK(k.json()["error"]["kind"] == "AssumptionNotAsserted");
        CHECK(invoke({"kernel", "--manifold", "s2xN", "--dagger", "--json"}).code == 0);

        const Result b = invoke({"obstruction", "--b-factors", "3", "--json"});
        CHECK(b.code == 1);
        CHECK(b.json()["error"]["kind"] == "DomainError");
    }

    TEST_CASE("oracle command") {
        const Result ok = invoke({"oracle", "--alpha", "1,1", "--json"});
        CHECK(ok.code == 0);
        CHECK(ok.json()["results"]["oracle"]["failed"] == "0");
        CHECK(invoke({"oracle", "--seed", "7", "--json"}).code == 0);
        const Result b1 = invoke({"oracle", "--b-factors", "1", "--json"});
        CHECK(b1.code == 1);
        CHECK(b1.json()["error"]["kind"] == "ConfigError");
        const Result degenerate = invoke({"oracle", "--alpha", "0,0", "--json"});
        CHECK(degenerate.json()["results"]["oracle"]["degenerate"] == true);
    }
}

TEST_SUITE("verify-all") {
    TEST_CASE("skip-oracle marks the oracle section skipped") {
        const Json j = invoke({"verify-all", "--skip-oracle", "--json"}).json();
        CHECK(j["results"]["oracle_section"] == "skipped");
        const Json& checks = j["results"]["checks"];
        REQUIRE(checks.size() == 10);
        CHECK(checks[8]["status"] == "skipped");
        CHECK(checks[9]["status"] == "skipped");
        for (int i = 0; i < 8; ++i) CHECK(checks[i]["status"] != "skipped");
    }

    TEST_CASE("sigma_4 ledger is populated") {
        const Json j = invoke({"verify-all", "--skip-oracle", "--json"}).json();
        const Json& ledger = j["results"]["sigma4_ledger"];
        REQUIRE_FALSE(ledger.empty());
        CHECK(ledger[0]["topic"] == "sigma4.third_variation");
    }

    TEST_CASE("exit code follows status") {
        const Result r = invoke({"verify-all", "--json"});
        const Json j = r.json();
        const bool failed = !j["discrepancies"].empty();
        CHECK(j["status"] == (failed ? "mismatch" : "ok"));
        CHECK(r.code == (failed ? 2 : 0));
    }

    TEST_CASE("fault injection is detected") {
        RunOptions o = json_format();
        o.corrupt_laplacian = true;
        const Result r = invoke({"verify-all"}, o);
        CHECK(r.code == 2);
        const Json j = r.json();
        CHECK(j["status"] == "mismatch");
        CHECK(j["results"]["checks"][0]["status"] == "fail");
        CHECK(j["results"]["checks"][8]["status"] == "fail");
    }

}

TEST_SUITE("reference agreement") {
    TEST_CASE("full run on an unmodified build is ok") {
        const Result r = invoke({"verify-all", "--json"});
        CHECK(r.json()["status"] == "ok");
        CHECK(r.code == 0);
    }
}
