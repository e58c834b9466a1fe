#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI through the shell with stdout/stderr captured to files.
CliResult run_cli(const std::string& args, const std::string& stdin_data = "",
                  const std::string& env = "") {
  static int counter = 0;
  const std::string tmp = std::string(GROUPDEF_TMP_DIR);
  const std::string base = tmp + "/cli_" + std::to_string(counter++);
  const std::string out_path = base + ".out", err_path = base + ".err",
                    in_path = base + ".in";
  {
    std::ofstream in(in_path, std::ios::binary);
    in << stdin_data;
  }
  std::string cmd = env + (env.empty() ? "" : " ") +
                    std::string(GROUPDEF_CLI_PATH) + " " + args + " < " +
                    in_path + " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

void check_golden(const std::string& args, const std::string& golden_name,
                  int expected_exit = 0) {
  CliResult result = run_cli(args);
  CHECK_MESSAGE(result.exit_code == expected_exit,
                args << " -> exit " << result.exit_code << ", stderr: "
                     << result.err);
  const std::string expected =
      slurp(std::string(GROUPDEF_GOLDEN_DIR) + "/" + golden_name);
  CHECK_MESSAGE(result.out == expected, "output of '" << args
                                                      << "' changed:\n"
                                                      << result.out);
}

std::string data(const std::string& name) {
  return std::string(GROUPDEF_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("golden: solve") { check_golden("solve -n 7", "solve_n7.txt"); }

TEST_CASE("golden: construct") {
  check_golden("construct -p 2 -n 5", "construct_p2_n5.txt");
  check_golden("construct -p 3 -n 0 --format gap", "construct_p3_n0_gap.txt");
  check_golden("construct -p 2 -n 7 --verify kunneth --json --no-timings",
               "construct_p2_n7_json.txt");
}

TEST_CASE("golden: order") {
  check_golden("order " + data("b2.gp"), "order_b2.txt");
}

TEST_CASE("golden: homology") {
  check_golden("homology --degree 1 " + data("b2.gp"), "homology1_b2.txt");
  check_golden("homology --degree 2 " + data("b2.gp"), "homology2_b2.txt");
}

TEST_CASE("golden: certify") {
  check_golden("certify " + data("b2.gp"), "certify_b2.txt");
}

TEST_CASE("golden: table") {
  check_golden("table -p 2 --max-n 7", "table_p2_n7.txt");
}

TEST_CASE("golden: gs-check") {
  check_golden("gs-check -d 4 --def 0", "gscheck_d4_def0.txt");
}

TEST_CASE("golden: parse") {
  check_golden("parse " + data("b2.gp") + " --format json", "parse_b2_json.txt");
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string args = "construct -p 2 -n 9 --verify kunneth --json --no-timings";
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("stdin input") {
  CliResult r = run_cli("order", "< a | a^5 >");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "order: 5\n");
}

TEST_CASE("order --emit-table serializes the group table") {
  CliResult r = run_cli("order --emit-table", "< a | a^3 >");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order: 3") != std::string::npos);
  CHECK(r.out.find("\"product\":[[0,1,2],[1,2,0],[2,0,1]]") != std::string::npos);
  // BFS representative words: a^-1 is the shortest word for the third coset
  CHECK(r.out.find("\"words\":[\"\",\"a\",\"a^-1\"]") != std::string::npos);
}

TEST_CASE("pedigree flows from construct into the kunneth pipeline") {
  CliResult cons = run_cli("construct -p 3 -n 4 --format json");
  REQUIRE(cons.exit_code == 0);
  // first text line is the presentation JSON with its pedigree
  CliResult hom = run_cli("homology --degree 2 --via kunneth", cons.out);
  CHECK(hom.exit_code == 0);
  // B_3 x C_3: (Z/3)^2 + 0 + ((Z/3)^2 (x) Z/3) = (Z/3)^4
  CHECK(hom.out == "H2: Z/3 + Z/3 + Z/3 + Z/3\n");
}

TEST_CASE("exit codes per error class") {
  // 2: presentation syntax error
  CliResult parse_err = run_cli("parse", "< a | b^2 >");
  CHECK(parse_err.exit_code == 2);
  CHECK(parse_err.err.find("parse error") != std::string::npos);

  // 3: coset limit
  CHECK(run_cli("order --max-cosets 500 " + data("infinite_dihedral.gp"))
            .exit_code == 3);

  // 4: H2 order ceiling
  CHECK(run_cli("certify --h2-ceiling 4 " + data("b2.gp")).exit_code == 4);
  CHECK(run_cli("homology --degree 2 --h2-ceiling 4 " + data("b2.gp"))
            .exit_code == 4);

  // 5: certification gap
  CliResult gap =
      run_cli("certify --max-cosets 500 " + data("infinite_dihedral.gp"));
  CHECK(gap.exit_code == 5);
  CHECK(gap.out.find("uncertified") != std::string::npos);

  // 64: usage errors
  CHECK(run_cli("solve --bogus-flag 1").exit_code == 64);
  CHECK(run_cli("no-such-command").exit_code == 64);
}

TEST_CASE("construct --verify gates the exit code") {
  CHECK(run_cli("construct -p 3 -n 6 --verify kunneth").exit_code == 0);
  CHECK(run_cli("construct -p 3 -n 2 --verify table").exit_code == 0);
}

TEST_CASE("GROUPDEF_MAX_COSETS provides the default limit") {
  CliResult r = run_cli("order " + data("infinite_dihedral.gp"), "",
                        "GROUPDEF_MAX_COSETS=400");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("400") != std::string::npos);
}

TEST_SUITE_END();
