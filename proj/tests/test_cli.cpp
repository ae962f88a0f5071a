#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "fano/cli.hpp"

using namespace fano;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("fano");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    RunResult res;
    res.status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    res.out = out.str();
    res.err = err.str();
    return res;
}

json run_json(std::vector<std::string> args) {
    RunResult res = run_cli(std::move(args));
    REQUIRE(res.status == 0);
    return json::parse(res.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("exit codes follow the contract") {
    CHECK(run_cli({"no-such-subcommand"}).status == 64);
    CHECK(run_cli({}).status == 64);
    CHECK(run_cli({"schubert", "no-such"}).status == 64);
    CHECK(run_cli({"bounds", "--r", "1", "--d", "3", "--bogus-flag", "7"}).status == 64);
    CHECK(run_cli({"bounds", "--d", "3"}).status == 64);  // missing required --r

    // domain errors -> 1 with a message on err
    RunResult bad = run_cli({"schubert", "count", "--r", "1", "--n", "5", "--d", "3"});
    CHECK(bad.status == 1);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("f_1") != std::string::npos);
    CHECK(run_cli({"bounds", "--r", "0", "--d", "3"}).status == 1);
    CHECK(run_cli({"construct", "waldron", "--r", "1", "--d", "2", "--n", "5"}).status == 1);
    CHECK(run_cli({"enumerate", "fano", "--q", "6", "--r", "1", "--poly", "nope"}).status == 1);
    CHECK(run_cli({"certify", "--poly", "does_not_exist.txt"}).status == 1);

    RunResult help = run_cli({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("bounds") != std::string::npos);
    RunResult sub_help = run_cli({"construct", "waldron", "--help"});
    CHECK(sub_help.status == 0);
    CHECK(sub_help.out.find("--seed") != std::string::npos);
}

TEST_CASE("bounds subcommand matches the report fields") {
    json j = run_json({"bounds", "--r", "1", "--d", "3", "--e", "1", "--n", "3"});
    CHECK(j.at("f_e_nrd") == 0);
    CHECK(j.at("N_1_waldron") == 3);
    CHECK(j.at("threshold_nonempty") == 3);
    CHECK(j.at("n1_prime_min") == 4);
    CHECK(j.at("n1_prime_max") == 4);
    CHECK_FALSE(j.contains("N_tilde"));

    // without --n the n-dependent keys disappear
    json partial = run_json({"bounds", "--r", "2", "--d", "4", "--e", "2"});
    CHECK_FALSE(partial.contains("n"));
    CHECK_FALSE(partial.contains("f_e_nr"));
    CHECK(partial.contains("N_tilde"));
    CHECK_FALSE(partial.contains("N_1_waldron"));
}

TEST_CASE("schubert subcommands serialize big integers as strings") {
    json j = run_json({"schubert", "count", "--r", "1", "--n", "4", "--d", "5"});
    CHECK(j.at("count") == "2875");
    CHECK(j.at("quotient") == "115");
    CHECK(j.at("d_power") == "25");
    CHECK(j.at("f1") == 0);

    json deg = run_json({"schubert", "degree", "--r", "1", "--n", "3", "--d", "3"});
    CHECK(deg.at("degree") == "27");

    json poly = run_json({"schubert", "poly", "--r", "1", "--d", "2"});
    CHECK(poly.at("terms").size() == 2);
    CHECK(poly.at("poly") == "4*u0*u1^2 + 4*u0^2*u1");
}

TEST_CASE("construct waldron emits a verified certificate") {
    json j = run_json({"construct", "waldron", "--r", "1", "--d", "3", "--n", "3",
                       "--seed", "5", "--field", "101"});
    CHECK(j.at("certificate").at("e_generating") == true);
    CHECK(j.at("tangent_dim") == j.at("expected_dim"));
    CHECK(j.at("degree") == 3);
    CHECK(j.at("frame").at("n") == 3);
    CHECK(j.at("field") == "101");
    CHECK(j.at("poly").is_string());
}

TEST_CASE("construct output is byte-identical for a fixed seed") {
    RunResult a = run_cli({"construct", "nenashev", "--r", "1", "--e", "2", "--d", "3",
                           "--n", "8", "--seed", "3", "--field", "101"});
    RunResult b = run_cli({"construct", "nenashev", "--r", "1", "--e", "2", "--d", "3",
                           "--n", "8", "--seed", "3", "--field", "101"});
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    RunResult c = run_cli({"construct", "nenashev", "--r", "1", "--e", "2", "--d", "3",
                           "--n", "8", "--seed", "4", "--field", "101"});
    REQUIRE(c.status == 0);
    CHECK(a.out != c.out);
    // --threads is plumbing only and must not perturb the bytes
    RunResult t = run_cli({"construct", "nenashev", "--r", "1", "--e", "2", "--d", "3",
                           "--n", "8", "--seed", "3", "--field", "101", "--threads", "4"});
    CHECK(a.out == t.out);
}

TEST_CASE("certify round-trips a construct artifact") {
    std::string path = "cli_test_roundtrip.json";
    RunResult made = run_cli({"construct", "waldron", "--r", "1", "--d", "4", "--n", "6",
                              "--seed", "2", "--field", "101", "--out", path});
    REQUIRE(made.status == 0);
    CHECK(made.out.empty());

    json cert = run_json({"certify", "--poly", path});
    CHECK(cert.at("e_generating") == true);
    json made_back = json::parse(std::ifstream(path), nullptr, true);
    CHECK(cert == made_back.at("certificate"));

    json tan = run_json({"tangent", "--poly", path});
    CHECK(tan.at("matches") == true);
    CHECK(tan.at("expected_dim") == tan.at("tangent_dim"));
    std::remove(path.c_str());
}

TEST_CASE("certify accepts bare text with an explicit frame") {
    std::string path = temp_file("bare.txt", "y0*x0^2 + y1*x1^2\n");
    json cert = run_json({"certify", "--poly", path, "--r", "1", "--e", "1", "--n", "3"});
    CHECK(cert.at("e_generating") == true);
    CHECK(cert.at("d") == 3);

    // same file without the frame is a domain error
    CHECK(run_cli({"certify", "--poly", path}).status == 1);
    std::remove(path.c_str());
}

TEST_CASE("enumerate fano counts the Fermat cubic over F_7") {
    std::string path = temp_file("fermat.txt", "x0^3 + x1^3 + x2^3 + x3^3");
    json j = run_json({"enumerate", "fano", "--q", "7", "--r", "1", "--poly", path});
    CHECK(j.at("count") == 27);
    CHECK(j.at("q") == 7);
    // explicit --n agrees with inference
    json k = run_json({"enumerate", "fano", "--q", "7", "--r", "1", "--poly", path, "--n", "3"});
    CHECK(k == j);
    std::remove(path.c_str());
}

TEST_CASE("enumerate planes cross-checks the Gaussian binomial") {
    json j = run_json({"enumerate", "planes", "--n", "3", "--r", "1", "--q", "3"});
    CHECK(j.at("count") == "130");
}

TEST_CASE("enumerate quadric-families reports sizes and checks") {
    json j = run_json({"enumerate", "quadric-families", "--r", "1", "--q", "3"});
    CHECK(j.at("family_sizes") == json::array({4, 4}));
    CHECK(j.at("checks").at("cross_intersection_ok") == true);
    CHECK(j.at("checks").at("pairwise_consistent") == true);
    CHECK(j.at("checks").at("lambda_same_family") == true);
    CHECK(j.at("checks").at("gamma_same_family") == false);
    CHECK(run_cli({"enumerate", "quadric-families", "--r", "1", "--q", "2"}).status == 1);
}

TEST_CASE("generators find honors seed and field flags") {
    json j = run_json({"generators", "find", "--r", "1", "--b", "2", "--m", "2", "--c", "1",
                       "--field", "Q", "--seed", "11"});
    CHECK(j.at("field") == "Q");
    CHECK(j.at("attempts_used").get<int>() >= 1);
    CHECK(j.at("system").at("members").size() == 2);
    CHECK(j.at("system").at("degree") == 2);

    json p = run_json({"generators", "find", "--r", "1", "--b", "2", "--m", "2", "--c", "1",
                       "--field", "13", "--seed", "1"});
    CHECK(p.at("field") == "13");
}

TEST_CASE("tsv format flattens with dotted keys") {
    RunResult res = run_cli({"schubert", "count", "--r", "1", "--n", "3", "--d", "3",
                             "--format", "tsv"});
    REQUIRE(res.status == 0);
    CHECK(res.out.find("count\t27\n") != std::string::npos);
    CHECK(res.out.find("quotient\t3\n") != std::string::npos);

    RunResult nested = run_cli({"construct", "waldron", "--r", "1", "--d", "3", "--n", "3",
                                "--seed", "5", "--field", "101", "--format", "tsv"});
    REQUIRE(nested.status == 0);
    CHECK(nested.out.find("certificate.e_generating\ttrue\n") != std::string::npos);
    CHECK(nested.out.find("frame.n\t3\n") != std::string::npos);
    CHECK(nested.out.find("certificate.ranks.0.rank\t") != std::string::npos);

    CHECK(run_cli({"schubert", "count", "--r", "1", "--n", "3", "--d", "3",
                   "--format", "xml"}).status == 64);
}
