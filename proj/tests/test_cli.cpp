#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "ugit/json_io.hpp"

using ugit::Json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the tool through the shell; stderr is dropped (usage errors are
// checked by exit code only).
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(UGIT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult run_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " " + std::string(UGIT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_file(const std::string& name) {
    return std::string(UGIT_DATA_DIR) + "/" + name;
}

fs::path tmp_dir() {
    fs::path d = fs::temp_directory_path() / "ugit_cli_tests";
    fs::create_directories(d);
    return d;
}

std::string write_tmp(const std::string& name, const std::string& content) {
    fs::path p = tmp_dir() / name;
    std::ofstream out(p);
    out << content;
    out.close();
    return p.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

Json parse_report(const RunResult& r) {
    Json j = Json::parse(r.out);
    CHECK(j["tool"] == "ugit");
    CHECK(j["version"] == ugit::kToolVersion);
    return j;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("usage surface: help, version, bad invocations") {
    CHECK(run_cli("--help").exit_code == 0);
    RunResult v = run_cli("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find(ugit::kToolVersion) != std::string::npos);
    CHECK(run_cli("stability --help").exit_code == 0);

    CHECK(run_cli("").exit_code == 2);              // subcommand required
    CHECK(run_cli("frobnicate").exit_code == 2);    // unknown subcommand
    CHECK(run_cli("stability").exit_code == 2);     // missing --rep
    CHECK(run_cli("validate --rep a.json --bogus").exit_code == 2);
    CHECK(run_cli("table --rep " + data_file("j22.json") + " --symbolic-eps --chi 3 --c 2")
              .exit_code == 2);                     // excludes
    CHECK(run_cli("table --rep " + data_file("j22.json") + " --chi 3").exit_code == 2); // needs --c
    CHECK(run_cli("jets --n 2 --k 2").exit_code == 2); // missing sub-subcommand
}

TEST_CASE("domain errors: machine-readable object, exit 1") {
    RunResult r = run_cli("validate --rep /nonexistent/nowhere.json");
    CHECK(r.exit_code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["error"]["code"] == "IoError");

    std::string bad = write_tmp("bad.json", "{ not json");
    r = run_cli("validate --rep " + bad);
    CHECK(r.exit_code == 1);
    CHECK(Json::parse(r.out)["error"]["code"] == "BadInput");

    std::string unknown = write_tmp("unknown_key.json", R"({
        "version": 1,
        "rep": {"dim_v": 1, "torus_weights": [0], "lie_basis": []},
        "surprise": true
    })");
    r = run_cli("validate --rep " + unknown);
    CHECK(r.exit_code == 1);
    Json e = Json::parse(r.out);
    CHECK(e["error"]["code"] == "BadInput");
    CHECK(e["error"]["message"].get<std::string>().find("surprise") != std::string::npos);
}

TEST_CASE("validate: diagnostics are the payload, exit stays 0") {
    RunResult ok = run_cli("validate --rep " + data_file("j22.json"));
    CHECK(ok.exit_code == 0);
    Json j = parse_report(ok);
    CHECK(j["command"] == "validate");
    CHECK(j["result"]["valid"] == true);
    CHECK(j["result"]["diagnostics"].empty());

    // Weight shift broken: grade-1 generator inside a single weight level.
    std::string bad_rep = write_tmp("bad_rep.json", R"({
        "version": 1,
        "rep": {
            "dim_v": 2,
            "torus_weights": [0, 0],
            "lie_basis": [{"grade": 1, "op": [["0", "0"], ["1", "0"]]}]
        }
    })");
    RunResult bad = run_cli("validate --rep " + bad_rep);
    CHECK(bad.exit_code == 0);
    Json k = parse_report(bad);
    CHECK(k["result"]["valid"] == false);
    CHECK(!k["result"]["diagnostics"].empty());
}

TEST_CASE("profile and decompose: J22 and R1 shapes") {
    Json p = parse_report(run_cli("profile --rep " + data_file("j22.json")));
    CHECK(p["result"]["distinct"] == Json::array({1, 2}));
    CHECK(p["result"]["multiplicity"] == Json::array({2, 2}));
    CHECK(p["result"]["omega_min"] == 1);
    CHECK(p["result"]["v_min_indices"] == Json::array({0, 1}));
    CHECK(p["result"]["gaps"] == 1);

    Json d = parse_report(run_cli("decompose --rep " + data_file("j22.json")));
    const Json& dec = d["result"]["decomposition"];
    CHECK(dec["ell"] == 1);
    REQUIRE(dec["blocks"].size() == 2);
    CHECK(dec["blocks"][0]["a"] == 3);
    CHECK(dec["blocks"][0]["l"] == 1);
    CHECK(dec["blocks"][0]["chain_indices"] == Json::array({0, 1}));
    CHECK(d["result"]["exceptional_blocks"] == Json::array({0, 1}));
    CHECK(d["result"]["weight_step"] == "ell");

    // R1, grade 2: the one-step ladder differs from the measured weights.
    Json r_ell = parse_report(run_cli("decompose --rep " + data_file("r1.json")));
    CHECK(r_ell["result"]["chain_weights"][0]["measured_weights"] == Json::array({-1, 1}));
    CHECK(r_ell["result"]["chain_weights"][0]["predicted_weights"] == Json::array({"-1", "1"}));
    Json r_one =
        parse_report(run_cli("decompose --rep " + data_file("r1.json") + " --weight-step 1"));
    CHECK(r_one["result"]["chain_weights"][0]["predicted_weights"] == Json::array({"-1", "0"}));
}

TEST_CASE("ss-check: holds on J22, witness on a planted kernel") {
    Json ok = parse_report(run_cli("ss-check --rep " + data_file("j22.json")));
    CHECK(ok["result"]["dim1"]["holds"] == true);

    std::string planted = write_tmp("kernel_rep.json", R"({
        "version": 1,
        "rep": {
            "dim_v": 3,
            "torus_weights": [1, 1, 2],
            "lie_basis": [{"grade": 1, "op": [["0","0","0"],["0","0","0"],["1","0","0"]]}]
        }
    })");
    Json bad = parse_report(run_cli("ss-check --rep " + planted));
    CHECK(bad["result"]["dim1"]["holds"] == false);
    CHECK(bad["result"]["dim1"]["kernel_witness"] == Json::array({"0", "1", "0"}));
}

TEST_CASE("stability: verdicts with certificates, document points, determinism") {
    std::string args = "stability --rep " + data_file("j22.json") +
                       " --point 1,0,0,1 --point 0,0,1,1 --point 1,0,1,0 --point 1,1,0,0";
    RunResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    Json j = parse_report(r);
    const Json& v = j["result"]["verdicts"];
    REQUIRE(v.size() == 4);
    CHECK(v[0]["verdict"]["status"] == "Stable");
    CHECK(v[0]["verdict"]["certificate"] == "StableSweepGcd");
    CHECK(v[1]["verdict"]["status"] == "Unstable");
    CHECK(v[1]["verdict"]["certificate"] == "NotInX0min");
    CHECK(v[1]["verdict"]["lowest_weight"] == 2);
    CHECK(v[2]["verdict"]["certificate"] == "InUSweep");
    CHECK(v[2]["verdict"]["sweep"]["witness"] == "1");
    CHECK(v[3]["verdict"]["certificate"] == "InZmin");

    // Same bytes on a rerun.
    CHECK(run_cli(args).out == r.out);

    // Points can live in the document.
    Json doc = Json::parse(read_file(data_file("j22.json")));
    doc["points"] = Json::array({Json::array({"1", "0", "0", "1"})});
    std::string with_points = write_tmp("j22_points.json", doc.dump(2) + "\n");
    Json k = parse_report(run_cli("stability --rep " + with_points));
    REQUIRE(k["result"]["verdicts"].size() == 1);
    CHECK(k["result"]["verdicts"][0]["verdict"]["status"] == "Stable");

    // No points anywhere: domain error.
    RunResult none = run_cli("stability --rep " + data_file("j22.json"));
    CHECK(none.exit_code == 1);
    CHECK(Json::parse(none.out)["error"]["code"] == "BadInput");

    // Wrong arity.
    RunResult bad = run_cli("stability --rep " + data_file("j22.json") + " --point 1,2");
    CHECK(bad.exit_code == 1);
    CHECK(Json::parse(bad.out)["error"]["code"] == "BadPoint");
}

TEST_CASE("stability: UGIT_THREADS changes scheduling, not verdicts") {
    std::string args = "stability --rep " + data_file("j22.json") +
                       " --point 1,0,0,1 --point 0,0,1,1 --point 1,0,1,0 --point 1,1,0,0";
    Json serial = Json::parse(run_cli(args).out);
    Json parallel = Json::parse(run_env("UGIT_THREADS=4", args).out);
    CHECK(serial["result"] == parallel["result"]);
    CHECK(parallel["input"]["params"]["threads"] == 4);
}

TEST_CASE("table: symbolic CSV frozen for R1, exact twist on J22, guards") {
    RunResult r = run_cli("table --rep " + data_file("r1.json") + " --symbolic-eps -N 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "fixed_point,block,position,w1,w2\n"
          "P0,0,0,-1,2 - 2*eps\n"
          "P0,0,1,1,2 - 2*eps\n"
          "P1,0,0,9,-18 - 2*eps\n"
          "P1,0,1,11,-18 - 2*eps\n"
          "P2,0,0,-11,-18 - 2*eps\n"
          "P2,0,1,-9,-18 - 2*eps\n");

    RunResult exact = run_cli("table --rep " + data_file("j22.json") + " --chi 3 --c 2 -N 10");
    CHECK(exact.exit_code == 0);
    CHECK(exact.out.find("P0,0,0,-1,0\n") != std::string::npos);
    CHECK(count_occurrences(exact.out, "eps") == 0);

    // Default N: minimal valid for the rep; J22 needs N > 1.
    RunResult dflt = run_cli("table --rep " + data_file("j22.json") + " --symbolic-eps");
    CHECK(dflt.exit_code == 0);
    CHECK(dflt.out.find("P1,0,0,1,-1 - 2*eps\n") != std::string::npos);

    RunResult not_adapted = run_cli("table --rep " + data_file("j22.json") + " --chi 5 --c 2");
    CHECK(not_adapted.exit_code == 1);
    CHECK(Json::parse(not_adapted.out)["error"]["code"] == "NotAdapted");

    RunResult small = run_cli("table --rep " + data_file("j22.json") + " --symbolic-eps -N 1");
    CHECK(small.exit_code == 1);
    CHECK(Json::parse(small.out)["error"]["code"] == "NParamTooSmall");
}

TEST_CASE("plot: SVG file with clusters, deterministic bytes") {
    std::string svg_path = (tmp_dir() / "weights.svg").string();
    RunResult r = run_cli("plot --rep " + data_file("j22.json") + " -N 10 -o " + svg_path);
    CHECK(r.exit_code == 0);
    Json j = parse_report(r);
    CHECK(j["result"]["rows"] == 12);
    CHECK(j["result"]["n_param"] == 10);

    std::string svg = read_file(svg_path);
    CHECK(count_occurrences(svg, "<circle") == 12);
    CHECK(count_occurrences(svg, "cluster-P") == 3);
    CHECK(svg.find("0.15-unit offset") != std::string::npos);

    std::string svg_path2 = (tmp_dir() / "weights2.svg").string();
    run_cli("plot --rep " + data_file("j22.json") + " -N 10 -o " + svg_path2);
    CHECK(read_file(svg_path2) == svg);
}

TEST_CASE("invariants: hilbert function, generators, stabilization") {
    RunResult r =
        run_cli("invariants --rep " + data_file("j22.json") + " --chi 7 --c 6 --K 3");
    CHECK(r.exit_code == 0);
    Json j = parse_report(r);
    CHECK(j["result"]["hilbert_function"] ==
          Json::parse("[[1, 5], [2, 9], [3, 13]]"));
    REQUIRE(j["result"]["generators"].size() == 1);
    CHECK(j["result"]["generators"][0]["level"] == 1);
    CHECK(j["result"]["generators"][0]["degree"] == 6);
    CHECK(j["result"]["generators"][0]["polys"].size() == 5);
    CHECK(j["result"]["stabilization"]["last_new_level"] == 1);
    CHECK(run_cli("invariants --rep " + data_file("j22.json") + " --chi 7 --c 6 --K 3").out ==
          r.out);

    Json k = parse_report(
        run_cli("invariants --rep " + data_file("j22.json") + " --chi 3 --c 2 --K 3"));
    CHECK(k["result"]["hilbert_function"] == Json::parse("[[1, 1], [2, 1], [3, 1]]"));
    REQUIRE(k["result"]["generators"].size() == 1);
    const Json& poly = k["result"]["generators"][0]["polys"][0];
    CHECK(poly["terms"].size() == 2);
    CHECK(poly["terms"][0]["monomial"] == Json::array({1, 0, 0, 1}));

    RunResult no_twist = run_cli("invariants --rep " + data_file("j22.json") + " --K 2");
    CHECK(no_twist.exit_code == 1);
    CHECK(Json::parse(no_twist.out)["error"]["code"] == "BadTwist");

    RunResult symbolic =
        run_cli("invariants --rep " + data_file("j22.json") + " --symbolic-eps --K 2");
    CHECK(symbolic.exit_code == 1);
    CHECK(Json::parse(symbolic.out)["error"]["code"] == "BadTwist");
}

TEST_CASE("localize: generators over the inverted section") {
    Json j = parse_report(
        run_cli("localize --rep " + data_file("j22.json") + " --sigma x1 -D 4"));
    const Json& gens = j["result"]["generators"];
    REQUIRE(gens.size() == 2);
    CHECK(gens[0]["level"] == 1);
    CHECK(gens[0]["poly"]["terms"][0]["monomial"] == Json::array({0, 1, 0, 0}));
    CHECK(gens[1]["level"] == 2);
    CHECK(gens[1]["poly"]["terms"].size() == 2);

    Json empty = parse_report(
        run_cli("localize --rep " + data_file("r1.json") + " --sigma x2 -D 4"));
    CHECK(empty["result"]["generators"].empty());

    RunResult bad = run_cli("localize --rep " + data_file("r1.json") + " --sigma x1 -D 4");
    CHECK(bad.exit_code == 1);
    CHECK(Json::parse(bad.out)["error"]["code"] == "BadSectionWeight");
}

TEST_CASE("jets: emit-rep feeds back into the other subcommands") {
    std::string rep_path = (tmp_dir() / "jet22.json").string();
    RunResult emit = run_cli("jets --n 2 --k 2 emit-rep -o " + rep_path);
    CHECK(emit.exit_code == 0);

    Json ok = parse_report(run_cli("validate --rep " + rep_path));
    CHECK(ok["result"]["valid"] == true);

    Json s = parse_report(run_cli("stability --rep " + rep_path + " --point 1,0,0,1"));
    CHECK(s["result"]["verdicts"][0]["verdict"]["status"] == "Stable");

    RunResult bad = run_cli("jets --n 0 --k 2 emit-rep");
    CHECK(bad.exit_code == 1);
    CHECK(Json::parse(bad.out)["error"]["code"] == "BadJetSpec");
}

TEST_CASE("jets: ds-dims CSV frozen, trivial k=1, cap guard") {
    RunResult r = run_cli("jets --n 2 --k 2 ds-dims --m-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "m,dim\n1,2\n2,3\n3,5\n4,7\n5,9\n6,12\n");
    CHECK(run_env("UGIT_THREADS=3", "jets --n 2 --k 2 ds-dims --m-max 6").out == r.out);

    RunResult trivial = run_cli("jets --n 1 --k 1 ds-dims --m-max 3");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.out == "m,dim\n1,1\n2,1\n3,1\n");

    RunResult capped = run_cli("jets --n 2 --k 2 ds-dims --m-max 6 --monomial-cap 10");
    CHECK(capped.exit_code == 1);
    CHECK(Json::parse(capped.out)["error"]["code"] == "MonomialCapExceeded");
}

TEST_CASE("toric: reports, unbounded and malformed gradings") {
    Json j = parse_report(run_cli("toric --degrees \"1;1;2\""));
    CHECK(j["result"]["dim_u"] == 3);
    CHECK(j["result"]["weights"] == Json::array({1, 1, 1}));
    CHECK(j["result"]["reductive_dims"] == Json::array({2, 1}));
    REQUIRE(j["result"]["per_alpha"].size() == 2);
    CHECK(j["result"]["per_alpha"][0]["alpha"] == Json::array({1}));
    CHECK(j["result"]["per_alpha"][0]["sprime_dim"] == 2);
    CHECK(j["result"]["per_alpha"][0]["sdouble_dim"] == 0);
    CHECK(j["result"]["per_alpha"][1]["sdouble_dim"] == 3);
    CHECK(j["result"]["per_alpha"][1]["factor_histogram"] == Json::parse("[[2, 3]]"));

    Json p2 = parse_report(run_cli("toric --degrees \"1;1;1\""));
    CHECK(p2["result"]["dim_u"] == 0);
    CHECK(p2["result"]["weights"].empty());

    Json prod = parse_report(run_cli("toric --degrees \"1,0;1,0;1,1;0,1\""));
    CHECK(prod["result"]["dim_u"] == 2);
    CHECK(prod["result"]["weights"] == Json::array({1, 1}));

    RunResult unbounded = run_cli("toric --degrees \"1;-1\"");
    CHECK(unbounded.exit_code == 1);
    CHECK(Json::parse(unbounded.out)["error"]["code"] == "UnboundedDegree");

    RunResult malformed = run_cli("toric --degrees \"1;x\"");
    CHECK(malformed.exit_code == 1);

    RunResult fractional = run_cli("toric --degrees \"1/2;1\"");
    CHECK(fractional.exit_code == 1);
    CHECK(Json::parse(fractional.out)["error"]["code"] == "BadGrading");
}

TEST_CASE("cross-validate: stable point clean, unstable point witnessed") {
    Json stable = parse_report(run_cli("cross-validate --rep " + data_file("j22.json") +
                                       " --point 1,0,0,1 --samples 8 --seed 3"));
    CHECK(stable["result"]["verdict"]["status"] == "Stable");
    CHECK(stable["result"]["samples_checked"] == 8);
    CHECK(stable["result"]["stable_violations"].empty());
    CHECK(stable["result"]["destabilizer"].is_null());

    Json unstable = parse_report(run_cli("cross-validate --rep " + data_file("j22.json") +
                                         " --point 0,0,1,1 --samples 4 --seed 3"));
    CHECK(unstable["result"]["verdict"]["certificate"] == "NotInX0min");
    CHECK(unstable["result"]["identity_destabilizes"] == true);
    CHECK(unstable["result"]["destabilizer_found"] == true);
    CHECK(unstable["result"]["destabilizer"] == "identity");

    Json sweep = parse_report(run_cli("cross-validate --rep " + data_file("j22.json") +
                                      " --point 1,0,1,0 --samples 6 --seed 5"));
    CHECK(sweep["result"]["verdict"]["certificate"] == "InUSweep");
    CHECK(sweep["result"]["samples_checked"] == 6);
}

TEST_CASE("text rendering: same facts, human shape") {
    RunResult r = run_cli("profile --rep " + data_file("j22.json") + " --text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("tool: ugit") != std::string::npos);
    CHECK(r.out.find("omega_min: 1") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}
