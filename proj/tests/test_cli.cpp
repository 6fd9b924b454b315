#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "test_util.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    static int call = 0;
    const auto dir = lpga::test::scratch_dir("cli_io_" + std::to_string(call++));
    const auto out_file = dir / "stdout.txt";
    const auto err_file = dir / "stderr.txt";
    const std::string cmd = std::string("\"") + LPGA_CLI_PATH + "\" " + args + " > \"" +
                            out_file.string() + "\" 2> \"" + err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = lpga::test::read_text(out_file);
    result.err = lpga::test::read_text(err_file);
    return result;
}

std::string data_arg(const char* name) {
    return "\"" + (lpga::test::data_dir() / name).string() + "\"";
}

const std::string course13 = "--course " + data_arg("course13.csv") + " --rdm " + data_arg("rdm13.csv");
const std::string course8 = "--course " + data_arg("course8.csv") + " --rdm " + data_arg("rdm8.csv");

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("run --help").exit_code == 0);
}

TEST_CASE("missing required flags and unknown values are usage errors") {
    CHECK(run_cli("run").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("run " + course13 + " --selection ranked").exit_code == 2);
    CHECK(run_cli("run " + course13 + " --init greedy").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("out-of-range configuration values are usage errors") {
    CHECK(run_cli("run " + course13 + " --pop-size 0 --generations 2").exit_code == 2);
    CHECK(run_cli("run " + course13 + " --w 1.5 --generations 2").exit_code == 2);
    CHECK(run_cli("matrix " + course13 + " --repeats 0 --generations 2").exit_code == 2);
}

TEST_CASE("unreadable and malformed input files are data errors") {
    const auto dir = lpga::test::scratch_dir("cli_bad_input");
    CHECK(run_cli("run --course /nonexistent.csv --rdm " + data_arg("rdm13.csv")).exit_code == 1);
    const auto bad = lpga::test::write_text(dir / "bad.csv", "id,title\n0,a\n");
    CHECK(run_cli("run --course \"" + bad.string() + "\" --rdm " + data_arg("rdm13.csv"))
              .exit_code == 1);
}

TEST_CASE("run writes the result document and convergence series") {
    const auto dir = lpga::test::scratch_dir("cli_run");
    const auto out = dir / "result.json";
    const CliResult result = run_cli("run " + course13 +
                                     " --pop-size 20 --generations 5 --seed 3 --out \"" +
                                     out.string() + "\"");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("first fitness: ") != std::string::npos);
    CHECK(result.out.find("best path:     [") != std::string::npos);
    CHECK(std::filesystem::exists(out));
    CHECK(std::filesystem::exists(dir / "result.convergence.csv"));
    const std::string csv = lpga::test::read_text(dir / "result.convergence.csv");
    CHECK(csv.rfind("generation,best_fitness,mean_fitness\n", 0) == 0);
}

TEST_CASE("a one-generation run produces a single convergence data row") {
    const auto dir = lpga::test::scratch_dir("cli_run_one_gen");
    const auto out = dir / "result.json";
    const CliResult result = run_cli("run " + course8 +
                                     " --pop-size 10 --generations 1 --seed 7 --out \"" +
                                     out.string() + "\"");
    CHECK(result.exit_code == 0);
    const std::string csv = lpga::test::read_text(dir / "result.convergence.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
}

TEST_CASE("matrix runs are byte-identical for a fixed seed") {
    const auto dir = lpga::test::scratch_dir("cli_matrix");
    const std::string common = "matrix " + course8 +
                               " --pop-size 16 --generations 4 --seed 42 --repeats 2 --out ";
    const auto first = dir / "a.csv";
    const auto second = dir / "b.csv";
    CHECK(run_cli(common + "\"" + first.string() + "\"").exit_code == 0);
    CHECK(run_cli(common + "\"" + second.string() + "\"").exit_code == 0);
    const std::string a = lpga::test::read_text(first);
    CHECK(a == lpga::test::read_text(second));
    CHECK(a.rfind("selection,init,crossover,seed,first_fitness,last_fitness,best_path\n", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 25);
}

TEST_CASE("evaluate prints both objective forms for an explicit path") {
    const CliResult result =
        run_cli("evaluate " + course13 + " --path 0,1,2,3,4,5,6,7,8,9,10,11,12");
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("listing: ") != std::string::npos);
    CHECK(result.out.find("text:    ") != std::string::npos);
}

TEST_CASE("evaluate rejects paths that are not permutations of the course") {
    CHECK(run_cli("evaluate " + course13 + " --path 0,1,2").exit_code == 1);
    CHECK(run_cli("evaluate " + course13 + " --path 0,1,2,3,4,5,6,7,8,9,10,11,11").exit_code == 1);
    CHECK(run_cli("evaluate " + course13 + " --path zero,one").exit_code == 1);
}

TEST_CASE("oracle solves small courses and refuses large ones") {
    const CliResult small = run_cli("oracle " + course8);
    CHECK(small.exit_code == 0);
    CHECK(small.out.find("best path:    [") != std::string::npos);
    CHECK(small.out.find("evaluated:    40320 permutations") != std::string::npos);

    CHECK(run_cli("oracle " + course13).exit_code == 1);
}

TEST_CASE("a single-concept course scores zero and has a one-path oracle") {
    const auto dir = lpga::test::scratch_dir("cli_one_concept");
    lpga::test::write_text(dir / "course.csv",
                           "id,title,difficulty,granularity,rating\n0,Only Topic,1.5,4,6\n");
    lpga::test::write_text(dir / "rdm.csv", "0\n");
    const std::string course1 = "--course \"" + (dir / "course.csv").string() +
                                "\" --rdm \"" + (dir / "rdm.csv").string() + "\"";

    const CliResult scored = run_cli("evaluate " + course1 + " --path 0");
    CHECK(scored.exit_code == 0);
    CHECK(scored.out.find("listing: 0.00") != std::string::npos);
    CHECK(scored.out.find("text:    0.00") != std::string::npos);

    const CliResult solved = run_cli("oracle " + course1);
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("best path:    [0]") != std::string::npos);
    CHECK(solved.out.find("best fitness: 0.00") != std::string::npos);
    CHECK(solved.out.find("evaluated:    1 permutations") != std::string::npos);
}

TEST_CASE("asymmetric matrices load with a warning on stderr") {
    const auto dir = lpga::test::scratch_dir("cli_asym");
    const auto cfile = lpga::test::write_text(dir / "c.csv",
                                              "id,title,difficulty,granularity,rating\n"
                                              "0,a,1,2,3\n"
                                              "1,b,1,2,3\n");
    const auto mfile = lpga::test::write_text(dir / "m.csv", "0,0.25\n0.75,0\n");
    const CliResult result = run_cli("evaluate --course \"" + cfile.string() + "\" --rdm \"" +
                                     mfile.string() + "\" --path 0,1");
    CHECK(result.exit_code == 0);
    CHECK(result.err.find("asymmetric") != std::string::npos);
}

}  // TEST_SUITE
