#include "../tools/commands.hpp"
#include "slocc/errors.hpp"
#include "slocc/orbitgeom.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace slocc;
using slocc::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result in_process(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "slocc");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

// Runs a shell command line; stderr is folded into the output.
Result shell(const std::string& line)
{
    const std::string cmd = line + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

const std::string kTool = SLOCC_TOOL_PATH;

Result process(const std::string& args) { return shell(kTool + " " + args); }

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(SLOCC_DATA_DIR) + "/golden/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify GHZ")
{
    Result r = in_process({"classify", "--ket", "|000>+|111>"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["orbit"] == "O_VI");
    CHECK(j["variety"] == "P^7 (ambient)");
    CHECK(j["dim"] == 7);
    CHECK(j["nullity"]["slots"].size() == 5);
    CHECK(r.out == golden("classify_ghz.json"));
}

TEST_CASE("classify a 2x3x3 document from standard input")
{
    const std::string doc = state_to_json(parse_ket("|000>+|011>+|120>", Shape(2, 3, 3))).dump();
    Result r = in_process({"classify"}, doc);
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["orbit"] == "O_VII");
    CHECK(j["variety"] == "J(X, P^5×P^2)");
    CHECK(j["dim"] == 12);
    CHECK(r.out == golden("classify_233_vii.json"));
    CHECK(in_process({"classify", "-"}, "|000>+|011>+|120>").out == r.out);
}

TEST_CASE("classify reads files, and the 2x2x3 document carries v_A")
{
    const std::string path = "cli_test_state.json";
    {
        std::ofstream f(path);
        f << state_to_json(parse_ket("|000>+|011>+|101>", Shape(2, 2, 3))).dump();
    }
    Result r = in_process({"classify", path});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["orbit"] == "O_V");
    CHECK(j.contains("v_A"));
    std::remove(path.c_str());
    CHECK(in_process({"classify", "missing-file.json"}).code == cli::kParseError);
}

TEST_CASE("pretty output")
{
    Result r = in_process({"classify", "--pretty", "--ket", "|000>+|111>"});
    CHECK(r.out.find("orbit      O_VI") != std::string::npos);
    CHECK(r.out.find("<1,1,1,1,1>") != std::string::npos);
    CHECK(in_process({"--pretty", "normal-form", "--shape", "2x2x3", "--label", "V"}).out ==
          "|000> + |011> + |101>\n");
}

TEST_CASE("normal forms")
{
    Result v = in_process({"normal-form", "--shape", "2x2x3", "--label", "O_V"});
    CHECK(v.code == 0);
    CHECK(state_from_json(nlohmann::json::parse(v.out)) == parse_ket("|000>+|011>+|101>", Shape(2, 2, 3)));
    Result xii = in_process({"normal-form", "--shape", "2x3x3", "--label", "O_XII"});
    CHECK(state_from_json(nlohmann::json::parse(xii.out)) ==
          parse_ket("|000>+|011>+|101>+|112>", Shape(2, 3, 3)));
    CHECK(xii.out == golden("normal_form_233_xii.json"));
}

TEST_CASE("normal-form then classify is the identity on labels")
{
    for (const auto& s : {Shape(2, 2, 2), Shape(2, 2, 3), Shape(2, 3, 3)}) {
        for (const auto& rec : orbit_registry(s)) {
            Result nf = in_process({"normal-form", "--shape", s.str(), "--label", rec.label});
            REQUIRE(nf.code == 0);
            Result c = in_process({"classify"}, nf.out);
            REQUIRE(c.code == 0);
            CHECK(nlohmann::json::parse(c.out)["orbit"] == rec.label);
        }
    }
}

TEST_CASE("covariants, hasse, syzygy-check and hilbert match the frozen outputs")
{
    CHECK(in_process({"covariants", "--shape", "2x2x3", "--ket", "|000>+|011>+|101>"}).out ==
          golden("covariants_223_v.json"));
    CHECK(in_process({"hasse", "--shape", "2x3x3"}).out == golden("hasse_233.dot"));
    CHECK(in_process({"syzygy-check"}).out == golden("syzygy_check.json"));
    Result h = in_process({"hilbert", "--shape", "2x2x3"});
    CHECK(h.code == 0);
    CHECK(h.out == golden("hilbert_223.json"));
}

TEST_CASE("dims")
{
    Result r = in_process({"dims", "--n", "3"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 9);
    CHECK(in_process({"dims", "--shape", "2x3x3"}).code == 0);
    CHECK(in_process({"dims"}).code == cli::kUsage);
    CHECK(in_process({"dims", "--n", "2"}).code == cli::kUsage);
}

TEST_CASE("verify suites")
{
    Result tables = in_process({"verify", "tables"});
    CHECK(tables.code == 0);
    nlohmann::json j = nlohmann::json::parse(tables.out);
    unsigned reps = 0;
    for (const auto& c : j["checks"]) {
        const std::string name = c["check"];
        reps += name.find(" w_A O_") != std::string::npos || name.rfind("2x2x2 v_A", 0) == 0 ? 1 : 0;
    }
    CHECK(reps == 6 + 8 + 17);
    CHECK(in_process({"verify", "dims", "--n", "3"}).code == 0);
    CHECK(in_process({"verify", "syzygy"}).code == 0);
    CHECK(in_process({"verify", "hilbert"}).code == 0);
    CHECK(in_process({"verify", "nonsense"}).code == cli::kUsage);
}

TEST_CASE("fuzz output is canonical regardless of thread count")
{
    cli::VerifyOptions one{7, 10, std::nullopt, 1};
    cli::VerifyOptions three{7, 10, std::nullopt, 3};
    nlohmann::json a = cli::verify_suite("slocc-fuzz", one);
    CHECK(a["pass"] == true);
    CHECK(a.dump() == cli::verify_suite("slocc-fuzz", three).dump());
    cli::VerifyOptions other{8, 10, std::nullopt, 1};
    CHECK(cli::verify_suite("slocc-fuzz", other)["pass"] == true);
}

TEST_CASE("seeded fuzz through the binary is deterministic")
{
    Result a = process("verify slocc-fuzz --seed 7 --trials 100");
    CHECK(a.code == 0);
    Result b = process("verify slocc-fuzz --seed 7 --trials 100 --report cli_fuzz_report.json");
    CHECK(b.out == a.out);
    std::ifstream f("cli_fuzz_report.json");
    CHECK(f.good());
    std::remove("cli_fuzz_report.json");
}

TEST_CASE("exit codes of the binary")
{
    CHECK(process("--help").code == cli::kOk);
    CHECK(process("classify --ket '|000>+|111>'").code == cli::kOk);
    CHECK(process("hilbert --shape 2x2x3 --d0 4").code == cli::kVerifyFailed);
    CHECK(process("classify --ket '0|000>'").code == cli::kZeroState);

    Result shape = shell("echo '{\"shape\":[3,3,3],\"entries\":[]}' | " + kTool + " classify");
    CHECK(shape.code == cli::kUnsupported);
    CHECK(shape.out.find("2x2x2, 2x2x3, 2x3x3") != std::string::npos);

    CHECK(process("normal-form --shape 2x2x2 --label O_IX").code == cli::kUnsupported);
    CHECK(process("classify --ket '|00>'").code == cli::kParseError);
    CHECK(process("classify --ket '{not json'").code == cli::kParseError);
    CHECK(process("classify --bogus").code == cli::kUsage);
    CHECK(process("hilbert --shape 2x3x3 --d0 9").code == cli::kUsage);
}

TEST_CASE("every exception maps to its documented code")
{
    std::ostringstream err;
    CHECK(cli::report_exception(ZeroStateError("z"), err) == 2);
    CHECK(cli::report_exception(ShapeError("s"), err) == 3);
    CHECK(cli::report_exception(UnknownLabelError("l"), err) == 3);
    CHECK(cli::report_exception(ParseError("p"), err) == 4);
    CHECK(cli::report_exception(DimensionError("d"), err) == 4);
    CHECK(cli::report_exception(ResourceError("r"), err) == 5);
    CHECK(cli::report_exception(UnmatchedPatternError("u"), err) == 6);
    CHECK(cli::report_exception(std::runtime_error("x"), err) == 6);
    CHECK(err.str().find("internal error: u") != std::string::npos);
}

TEST_CASE("output is byte-deterministic")
{
    for (int i = 0; i < 3; ++i) {
        CHECK(in_process({"covariants", "--ket", "|000>+|011>+|101>+|122>", "--shape", "2x3x3"}).out ==
              in_process({"covariants", "--ket", "|000>+|011>+|101>+|122>", "--shape", "2x3x3"}).out);
    }
    CHECK(process("classify --ket '|000>+|111>'").out == golden("classify_ghz.json"));
}

TEST_CASE("thread count comes from the environment")
{
    CHECK(process("verify slocc-fuzz --trials 2").out ==
          process("verify slocc-fuzz --trials 2").out);
    Result a = process("verify slocc-fuzz --seed 3 --trials 5");
    Result b = shell("env SLOCC_THREADS=4 " + kTool + " verify slocc-fuzz --seed 3 --trials 5");
    CHECK(b.code == 0);
    CHECK(b.out == a.out);
}

}  // TEST_SUITE
