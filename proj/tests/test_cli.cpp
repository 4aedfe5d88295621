#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "hopfchrom/cli.hpp"
#include "hopfchrom/io.hpp"

using namespace hopfchrom;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("hopfchrom_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, VerifyBuiltins) {
  const Outcome r = run({"verify", "--builtin", "sweedler"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_TRUE(contains(r.out, "PASS H4"));
  EXPECT_EQ(run({"verify", "--builtin", "taft:3", "--field", "GF:7"}).code, exit_ok);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, exit_input_error);
  EXPECT_EQ(run({"frobnicate"}).code, exit_input_error);
  EXPECT_EQ(run({"verify", "--builtin", "taft:3"}).code, exit_input_error);  // no cube root of unity in Q
  EXPECT_EQ(run({"verify", "--builtin", "nonsense"}).code, exit_input_error);
  EXPECT_EQ(run({"verify", "/nonexistent/algebra.json"}).code, exit_input_error);
  EXPECT_EQ(run({"check", "--builtin", "group:Z2", "--side", "sideways"}).code, exit_input_error);
  EXPECT_EQ(run({"check", "--builtin", "group:Z2", "--expr", "ev(H) ; ev(H)"}).code, exit_input_error);
}

TEST(Cli, ExportAndReload) {
  TempDir dir;
  const std::string path = dir.file("h4.json");
  ASSERT_EQ(run({"export", "--builtin", "sweedler", "--out", path}).code, exit_ok);
  const Outcome r = run({"verify", path});
  EXPECT_EQ(r.code, exit_ok) << r.err;
  const Outcome i = run({"integrals", path, "--json"});
  ASSERT_EQ(i.code, exit_ok);
  const json j = json::parse(i.out);
  EXPECT_EQ(j["alpha"], json::parse(R"(["1", "-1", "0", "0"])"));
  EXPECT_EQ(j["unimodular"], false);
}

TEST(Cli, MutatedAntipodeIsNamed) {
  TempDir dir;
  const std::string path = dir.file("bad.json");
  ASSERT_EQ(run({"export", "--builtin", "sweedler", "--out", path}).code, exit_ok);
  json j = read_json_file(path);
  for (auto& e : j["antipode"])
    if (e[0] == 3 && e[1] == 2) e[2] = "1";
  write_text_file(path, j.dump());
  const Outcome r = run({"verify", path});
  EXPECT_EQ(r.code, exit_verification_failed);
  EXPECT_TRUE(contains(r.out + r.err, "antipode axiom")) << r.out << r.err;
}

TEST(Cli, DivisionByZeroLiteral) {
  TempDir dir;
  const std::string path = dir.file("zero.json");
  ASSERT_EQ(run({"export", "--builtin", "group:Z2", "--out", path}).code, exit_ok);
  json j = read_json_file(path);
  j["mult"][0][3] = "1/0";
  write_text_file(path, j.dump());
  const Outcome r = run({"verify", path});
  EXPECT_EQ(r.code, exit_input_error);
  EXPECT_TRUE(contains(r.err, "mult[0]")) << r.err;
}

TEST(Cli, IntegralsText) {
  const Outcome r = run({"integrals", "--builtin", "sweedler"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_TRUE(contains(r.out, "x + gx"));
  EXPECT_TRUE(contains(r.out, "unimodular       no"));
  const Outcome z = run({"integrals", "--builtin", "group:Z2"});
  EXPECT_TRUE(contains(z.out, "spherical        yes")) << z.out;
}

TEST(Cli, CheckGrid) {
  const Outcome r = run({"check", "--builtin", "sweedler", "--side", "right"});
  EXPECT_EQ(r.code, exit_ok) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "6/6 identities hold")) << r.out;
  const Outcome s = run({"check", "--builtin", "group:S3", "--side", "spherical", "--json"});
  EXPECT_EQ(s.code, exit_ok);
  EXPECT_EQ(json::parse(s.out)["all_equal"], true);
}

TEST(Cli, SphericalOnSweedlerFails) {
  const Outcome r = run({"check", "--builtin", "sweedler", "--side", "spherical"});
  EXPECT_EQ(r.code, exit_verification_failed);
  EXPECT_TRUE(contains(r.err, "not spherical"));
}

TEST(Cli, InjectedFaultIsLocated) {
  const Outcome r = run({"check", "--builtin", "group:Z2", "--inject-fault", "0,0", "--modules", "trivial"});
  EXPECT_EQ(r.code, exit_verification_failed);
  EXPECT_TRUE(contains(r.out, "NOT EQUAL at (0,0): expected 1, got 2")) << r.out;
  EXPECT_EQ(run({"check", "--builtin", "group:Z2", "--inject-fault", "9,9"}).code, exit_input_error);
}

TEST(Cli, ModuleFile) {
  TempDir dir;
  const std::string path = dir.file("sign.json");
  // the sign representation of Z2
  write_text_file(path, R"({"label": "sgn", "dim": 1, "action": [[[0, 0, "1"]], [[0, 0, "-1"]]]})");
  const Outcome r = run({"check", "--builtin", "group:Z2", "--modules", "file", "--module-file", path});
  EXPECT_EQ(r.code, exit_ok) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "X=sgn"));
  write_text_file(path, R"({"label": "bad", "dim": 1, "action": [[[0, 0, "1"]], [[0, 0, "2"]]]})");
  const Outcome bad = run({"check", "--builtin", "group:Z2", "--modules", "file", "--module-file", path});
  EXPECT_EQ(bad.code, exit_input_error);
  EXPECT_TRUE(contains(bad.err, "multiplicative")) << bad.err;
}

TEST(Cli, Expressions) {
  EXPECT_EQ(run({"check", "--builtin", "sweedler", "--expr", "coev(H) * id(H) ; id(H) * ev(H)"}).code, exit_ok);
  EXPECT_EQ(run({"check", "--builtin", "sweedler", "--expr", "lamL(H)", "--equals", "lamR(H)"}).code, exit_input_error);
  EXPECT_EQ(run({"check", "--builtin", "group:Z3", "--expr", "lamL(H) ; id(H)", "--equals", "lamL(H)"}).code, exit_ok);
  const Outcome bad = run({"check", "--builtin", "group:Z2", "--expr", "id(H) * id(H)", "--equals", "cSph"});
  EXPECT_EQ(bad.code, exit_verification_failed) << bad.out << bad.err;
}

TEST(Cli, ChromaticOutput) {
  TempDir dir;
  const std::string path = dir.file("c.json");
  ASSERT_EQ(run({"chromatic", "--builtin", "group:Z2", "--out", path}).code, exit_ok);
  const json j = read_json_file(path);
  EXPECT_EQ(j["rows"], 4);
  EXPECT_EQ(j["entries"].size(), 2u);
}
