#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "expweyl/cli.hpp"
#include "expweyl/errors.hpp"

using namespace expweyl;

namespace
{

struct Outcome
{
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Replays one golden transcript in-process.
void expect_golden(const std::string &name)
{
    const std::string dir = EXPWEYL_GOLDEN_DIR;
    std::vector<std::string> args;
    std::istringstream lines(slurp(dir + "/" + name + ".args"));
    for (std::string line; std::getline(lines, line);)
    {
        for (std::size_t pos; (pos = line.find("@GOLDEN@")) != std::string::npos;)
            line.replace(pos, 8, dir);
        args.push_back(line);
    }
    std::ifstream code_file(dir + "/" + name + ".code");
    int expected_code = 0;
    if (code_file)
        code_file >> expected_code;
    const Outcome r = run(args);
    EXPECT_EQ(r.code, expected_code) << name;
    EXPECT_EQ(r.out, slurp(dir + "/" + name + ".out")) << name;
}

} // namespace

TEST(Cli, CanonicalCommutator)
{
    const Outcome r = run({"comm", "D_1", "x_1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, NoetherianWitness)
{
    const Outcome r = run({"noetherian", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(6, 0)\n");
}

TEST(Cli, ErrorExitCodes)
{
    const Outcome sig = run({"normalize", "x_3"});
    EXPECT_EQ(sig.code, 10 + static_cast<int>(ErrorCode::SignatureMismatch));
    EXPECT_TRUE(sig.out.empty());
    EXPECT_NE(sig.err.find("error: SignatureMismatch:"), std::string::npos);
    EXPECT_NE(sig.err.find("(at offset 0)"), std::string::npos);

    EXPECT_EQ(run({"tshift"}).code, 10 + static_cast<int>(ErrorCode::HbarModeOff));
    EXPECT_EQ(run({"normalize", "x_1 + * 2"}).code, 10 + static_cast<int>(ErrorCode::SyntaxError));
    EXPECT_EQ(run({"nosuchcommand"}).code, 2);
    // A missing operand is an InvalidArgument error, not a parser failure.
    EXPECT_EQ(run({"comm", "x_1"}).code, 10 + static_cast<int>(ErrorCode::InvalidArgument));
}

TEST(Cli, StructuredReport)
{
    const Outcome r = run({"--format", "structured", "mul", "D_1", "x_1"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_EQ(j["command"], "mul");
    EXPECT_EQ(j["status"], 0);
    EXPECT_EQ(j["result"]["text"], "x_1*D_1 + 1");
    EXPECT_EQ(j["result"]["terms"].size(), 2u);

    const Outcome e = run({"--format", "structured", "normalize", "x_3"});
    EXPECT_EQ(e.code, 13);
    const auto je = nlohmann::json::parse(e.out);
    EXPECT_EQ(je["error"]["name"], "SignatureMismatch");
    EXPECT_EQ(je["error"]["code"], 3);
}

TEST(Cli, SeededOutputIsDeterministic)
{
    const std::vector<std::string> args{"--seed", "5", "mc"};
    const Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SelftestIsGreen)
{
    const Outcome r = run({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, HbarOrderOption)
{
    const Outcome r = run({"--hbar-order", "1", "normalize", "(1 + hbar)*(1 - hbar)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, GoldenTranscripts)
{
    for (const char *name : {"comm_relation", "noetherian_three", "grdiag_exponential", "normalize_order",
                             "noetherian_structured", "error_signature"})
        expect_golden(name);
}
