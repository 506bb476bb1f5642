#include "ivp_atoms/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace ivp;

namespace {

const std::string kExample = "(x^3-19)*(x^2+9)*(x^2+1)*(x-5)/15";

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ivp-atoms");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(IVP_GOLDEN_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in.good()) << "missing golden " << name;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void expect_golden(const std::vector<std::string>& args, const std::string& golden) {
    const CliRun first = run_cli(args);
    ASSERT_EQ(first.code, cli::kExitOk) << first.err;
    EXPECT_EQ(first.out, read_golden(golden));
    EXPECT_EQ(run_cli(args).out, first.out);
}

} // namespace

TEST(CliGolden, AnalyzeText) { expect_golden({"analyze", kExample}, "example_analyze.txt"); }
TEST(CliGolden, AnalyzeJson) { expect_golden({"analyze", kExample, "--json"}, "example_analyze.json"); }
TEST(CliGolden, EssentialDot) {
    expect_golden({"graph", kExample, "--kind", "essential", "--format", "dot"}, "example_essential.dot");
}
TEST(CliGolden, QuintessentialDot) {
    expect_golden({"graph", kExample, "--kind", "quintessential", "--format", "dot"}, "example_quintessential.dot");
}
TEST(CliGolden, QuintessentialJson) {
    expect_golden({"graph", kExample, "--kind", "quintessential", "--format", "json"},
                  "example_quintessential.json");
}

TEST(Cli, ExitCodeMatrix) {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {{"analyze", kExample}, cli::kExitOk},
        {{"analyze", "(x^2+1)/2"}, cli::kExitOk},
        {{"analyze", "(x)^2*(x^2+3)/4", "--quiet"}, cli::kExitOk},
        {{"analyze", "7"}, cli::kExitOk},
        {{"analyze", "(x"}, cli::kExitInput},
        {{"analyze", "(y)"}, cli::kExitInput},
        {{"analyze", "(x)/0"}, cli::kExitInput},
        {{"analyze", kExample, "--oracle", "9"}, cli::kExitInput},
        {{"graph", "(x^2+1)/2"}, cli::kExitInput},
        {{"member", "(x^2+1)/2"}, cli::kExitOk},
        {{"fd", "x^3-x"}, cli::kExitOk},
        {{"fd", "0"}, cli::kExitInput},
        {{"oracle", "(x)*(x-1)/2", "--power", "2"}, cli::kExitOk},
        {{"oracle", "(x)*(x-1)/2", "--power", "7"}, cli::kExitInput},
        {{"nonsense"}, cli::kExitInput},
        {{"--batch", "/nonexistent/file"}, cli::kExitInput},
    };
    for (const auto& c : cases) {
        const CliRun r = run_cli(c.args);
        EXPECT_EQ(r.code, c.code) << c.args[0] << " " << (c.args.size() > 1 ? c.args[1] : "") << "\n" << r.err;
    }
}

TEST(Cli, GuardFromEnvironment) {
    ::setenv("IVP_ATOMS_GUARD", "10", 1);
    const CliRun r = run_cli({"oracle", kExample, "--power", "3"});
    ::unsetenv("IVP_ATOMS_GUARD");
    EXPECT_EQ(r.code, cli::kExitGuard);
    EXPECT_NE(r.err.find("guard"), std::string::npos);
    ::setenv("IVP_ATOMS_GUARD", "abc", 1);
    EXPECT_EQ(run_cli({"oracle", kExample, "--power", "1"}).code, cli::kExitInput);
    ::unsetenv("IVP_ATOMS_GUARD");
}

TEST(Cli, NonMemberReport) {
    const CliRun r = run_cli({"analyze", "(x^2+1)/2", "--json"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["membership"]["is_member"].get<bool>());
    EXPECT_TRUE(j["verdicts"].is_null());
}

TEST(Cli, BinomialBothProven) {
    const CliRun r = run_cli({"analyze", "(x)*(x-1)/2", "--json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdicts"]["irreducible"]["status"], "proven");
    EXPECT_EQ(j["verdicts"]["absolutely_irreducible"]["status"], "proven");
}

TEST(Cli, SingleFactorGraph) {
    const CliRun r = run_cli({"graph", "(x^2+x+2)/2", "--kind", "quintessential"});
    EXPECT_EQ(r.out, "graph quintessential {\n  1 [label=\"x^2+x+2\"];\n}\n");
}

TEST(Cli, FdCommand) {
    EXPECT_EQ(run_cli({"fd", "x^3-x"}).out, "fd(x^3-x) = 6 = 2 * 3\n");
}

TEST(Cli, BatchKeepsLineOrder) {
    const std::string path = ::testing::TempDir() + "ivp_batch.txt";
    {
        std::ofstream f(path);
        f << "# comment\n(x)*(x-1)/2\n\n(x\n" << kExample << "\n";
    }
    const CliRun r = run_cli({"--batch", path});
    EXPECT_EQ(r.code, cli::kExitInput);
    EXPECT_LT(r.out.find("== line 2 =="), r.out.find("== line 5 =="));
    EXPECT_NE(r.err.find("line 4:"), std::string::npos);
    const CliRun q = run_cli({"--batch", path, "--quiet"});
    EXPECT_EQ(q.out, "(x)*(x-1)/2\tproven\tproven\n" + kExample + "\tproven\tdisproven\n");
    const CliRun j = run_cli({"--batch", path, "--json"});
    std::istringstream lines(j.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        EXPECT_TRUE(nlohmann::json::accept(line)) << line;
        ++count;
    }
    EXPECT_EQ(count, 2);
}
