#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "nodal/cli.hpp"
#include "nodal/feasibility.hpp"
#include "nodal/json_io.hpp"
#include "nodal/moduli.hpp"
#include "nodal/stability.hpp"

using namespace nodal;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;

    json payload() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(NODAL_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("feasible example") {
    const auto o = run({"feasible", "--r", "2", "--k", "1", "--chi1", "2", "--chi2", "3"});
    REQUIRE(o.code == cli::kOk);
    const auto j = o.payload();
    CHECK(j["command"] == "feasible");
    CHECK(j["outputs"]["feasible"] == true);
    CHECK(j["outputs"]["interval"] == json::array({"1/3", "2/3"}));
    CHECK(j["inputs"]["chi1"] == "2");
    CHECK(j["warnings"].empty());

    const auto rep = j["outputs"].get<FeasibilityReport>();
    const auto direct = feasible_interval(2, 1, 2, 3);
    CHECK(rep.w1_interval == direct.w1_interval);
    CHECK(rep.sample->w1() == direct.sample->w1());
    CHECK(rep.chi == 3);

    const auto flagged = run({"feasible", "--r", "2", "--k", "1", "--chi1", "2", "--chi2", "3", "--json"});
    CHECK(flagged.payload()["outputs"] == j["outputs"]);
    CHECK(flagged.payload()["inputs"]["json"] == "true");
}

TEST_CASE("infeasible interval is null") {
    const auto o = run({"feasible", "--r", "2", "--k", "1", "--chi1", "2", "--chi2", "1"});
    REQUIRE(o.code == cli::kOk);
    CHECK(o.payload()["outputs"]["feasible"] == false);
    CHECK(o.payload()["outputs"]["interval"].is_null());
}

TEST_CASE("dims example") {
    const auto o = run({"dims", "--g1", "2", "--g2", "2", "--r", "2"});
    REQUIRE(o.code == cli::kOk);
    const auto out = o.payload()["outputs"];
    CHECK(out["component"] == 13);
    CHECK(out["pf_bundle"] == 13);
    CHECK(out["fixed_det_fiber"] == 9);
}

TEST_CASE("glue examples") {
    auto o = run({"glue", "--matrix", data("id2.json"), "--chi1", "1", "--chi2", "1"});
    REQUIRE(o.code == cli::kOk);
    auto out = o.payload()["outputs"];
    CHECK(out["chi"] == 0);
    CHECK(out["stalk"] == json::array({2, 0, 0}));
    CHECK(out["vector_bundle"] == true);
    const auto g = out.get<GluedClass>();
    CHECK(g.sheaf == SheafClass(2, 2, 0, 1, 1));

    o = run({"glue", "--matrix", data("rank2_3x3.json"), "--chi1", "4", "--chi2", "0"});
    REQUIRE(o.code == cli::kOk);
    out = o.payload()["outputs"];
    CHECK(out["k"] == 2);
    CHECK(out["chi"] == 1);
    CHECK(out["stalk"] == json::array({2, 1, 1}));
    CHECK(out["vector_bundle"] == false);
}

TEST_CASE("glue reports unreadable files as usage errors") {
    const auto o = run({"glue", "--matrix", data("does-not-exist.json"), "--chi1", "1", "--chi2", "1"});
    CHECK(o.code == cli::kUsageError);
    CHECK(o.err.find("does-not-exist.json") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with structured JSON") {
    const auto o = run({"feasible", "--r", "2", "--k", "3", "--chi1", "0", "--chi2", "0"});
    REQUIRE(o.code == cli::kDomainError);
    const auto j = o.payload();
    CHECK(j["error"]["kind"] == "invalid_argument");
    CHECK(j["command"] == "feasible");
    CHECK_FALSE(j["error"]["message"].get<std::string>().empty());

    const auto pre = run({"check-sufficiency", "--r", "2", "--k", "1", "--chi1", "2", "--chi2", "1", "--g1", "2",
                          "--g2", "2", "--w1", "1/2"});
    REQUIRE(pre.code == cli::kDomainError);
    CHECK(pre.payload()["error"]["kind"] == "precondition_failed");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"feasible", "--r", "2"}).code == cli::kUsageError);
    CHECK(run({"feasible", "--r", "two", "--k", "1", "--chi1", "0", "--chi2", "0"}).code == cli::kUsageError);

    const auto o = run({"components", "--g1", "2", "--g2", "2", "--r", "2", "--chi", "1", "--w1", "0.5"});
    CHECK(o.code == cli::kUsageError);
    CHECK(o.err.find("--w1") != std::string::npos);
    CHECK(o.out.empty());

    const auto bad_range = run({"region", "--r", "2", "--k", "1", "--chi1", "0..3", "--chi2", "0:1"});
    CHECK(bad_range.code == cli::kUsageError);
    CHECK(bad_range.err.find("--chi1") != std::string::npos);
}

TEST_CASE("region csv and json") {
    const std::vector<std::string> base{"region", "--r", "2", "--k", "1", "--chi1", "1:2", "--chi2", "1:2"};
    auto args = base;
    args.insert(args.end(), {"--format", "csv"});
    const auto csv = run(args);
    REQUIRE(csv.code == cli::kOk);
    CHECK(csv.out ==
          "chi1,chi2,feasible,w1_lo,w1_hi\n"
          "1,1,true,0,1\n"
          "1,2,true,0,1\n"
          "2,1,false,,\n"
          "2,2,true,1/2,1\n");

    const auto js = run(base);
    REQUIRE(js.code == cli::kOk);
    const auto rows = js.payload()["outputs"]["rows"];
    REQUIRE(rows.size() == 4);
    const auto direct = region_scan(2, 1, {1, 2}, {1, 2});
    for (std::size_t i = 0; i < direct.size(); ++i) {
        const auto row = rows[i].get<RegionRow>();
        CHECK(row.chi1 == direct[i].chi1);
        CHECK(row.chi2 == direct[i].chi2);
        CHECK(row.feasible == direct[i].feasible);
        CHECK(row.w1_interval == direct[i].w1_interval);
    }
}

TEST_CASE("region size cap") {
    ::setenv("NODAL_MODULI_MAX_CELLS", "10", 1);
    const auto over = run({"region", "--r", "2", "--k", "1", "--chi1", "0:3", "--chi2", "0:2"});
    const auto under = run({"region", "--r", "2", "--k", "1", "--chi1", "0:1", "--chi2", "0:4"});
    ::unsetenv("NODAL_MODULI_MAX_CELLS");
    CHECK(over.code == cli::kDomainError);
    CHECK(under.code == cli::kOk);
}

TEST_CASE("components json and csv") {
    const auto js = run({"components", "--g1", "2", "--g2", "2", "--r", "2", "--chi", "1", "--w1", "1/2"});
    REQUIRE(js.code == cli::kOk);
    const auto recs = js.payload()["outputs"]["components"].get<std::vector<ComponentRecord>>();
    CHECK(recs == enumerate_components(NodalCurve(2, 2), 2, 1, Polarization::from_w1(Rational(1, 2))).records);

    const auto csv =
        run({"components", "--g1", "1", "--g2", "1", "--r", "2", "--chi", "0", "--w1", "1/2", "--format", "csv"});
    REQUIRE(csv.code == cli::kOk);
    CHECK(csv.out == "chi1,chi2,d1,d2,dimension\n0,2,0,2,5\n1,1,1,1,5\n2,0,2,0,5\n");
    CHECK(csv.err.find("warning") != std::string::npos);
}

TEST_CASE("check-sufficiency output") {
    const auto o = run({"check-sufficiency", "--r", "2", "--k", "1", "--chi1", "1", "--chi2", "2", "--g1", "2",
                        "--g2", "2"});
    REQUIRE(o.code == cli::kOk);
    const auto j = o.payload();
    CHECK(j["warnings"].size() == 1);
    const auto res = j["outputs"].get<SufficiencyResult>();
    CHECK(res.holds);
    CHECK_FALSE(res.witness.has_value());
    CHECK(j["outputs"]["hypothesis"] == "semistable");
    CHECK(j["outputs"]["degrees"] == json::array({3, 4}));

    const auto strict = run({"check-sufficiency", "--r", "2", "--k", "1", "--chi1", "1", "--chi2", "2", "--g1", "2",
                             "--g2", "2", "--w1", "1/2", "--strict"});
    REQUIRE(strict.code == cli::kOk);
    CHECK(strict.payload()["outputs"]["hypothesis"] == "stable");
    CHECK(strict.payload()["inputs"]["strict"] == "true");
}

TEST_CASE("mk-test output") {
    auto o = run({"mk-test", "--sub-d", "1", "--sub-rk", "1", "--amb-d", "3", "--amb-rk", "2", "--m", "0", "--k", "1"});
    REQUIRE(o.code == cli::kOk);
    CHECK(o.payload()["outputs"]["holds"] == true);
    CHECK(o.payload()["outputs"]["rhs"] == "1");

    o = run({"mk-test", "--sub-d", "1", "--sub-rk", "1", "--amb-d", "3", "--amb-rk", "2", "--m", "0", "--k", "1",
             "--strict"});
    CHECK(o.payload()["outputs"]["holds"] == false);

    o = run({"mk-test", "--sub-d", "1", "--sub-rk", "0", "--amb-d", "3", "--amb-rk", "2", "--m", "0", "--k", "1"});
    CHECK(o.code == cli::kDomainError);
}

TEST_CASE("identical arguments give identical bytes") {
    const std::vector<std::vector<std::string>> cases{
        {"feasible", "--r", "3", "--k", "2", "--chi1", "-1", "--chi2", "4"},
        {"region", "--r", "3", "--k", "2", "--chi1", "-3:3", "--chi2", "-3:3"},
        {"region", "--r", "3", "--k", "2", "--chi1", "-3:3", "--chi2", "-3:3", "--format", "csv"},
        {"components", "--g1", "3", "--g2", "1", "--r", "3", "--chi", "-5", "--w1", "2/7"},
        {"check-sufficiency", "--r", "3", "--k", "2", "--chi1", "2", "--chi2", "4", "--g1", "5", "--g2", "5"},
        {"dims", "--g1", "3", "--g2", "4", "--r", "5"},
    };
    for (const auto& args : cases) {
        const auto a = run(args), b = run(args);
        REQUIRE(a.code == cli::kOk);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
