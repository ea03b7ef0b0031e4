// End-to-end tests for the `cooc` binary. The test runner passes the
// binary's path as --cli=<path>; everything else goes to doctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "cooc/io.hpp"
#include "test_util.hpp"

namespace {

std::string g_cli;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const cooctest::TempDir& dir, const std::string& args) {
  const std::string out_path = (dir.path() / "_stdout").string();
  const std::string err_path = (dir.path() / "_stderr").string();
  const std::string cmd = g_cli + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = cooc::io::read_file(out_path);
  r.err = cooc::io::read_file(err_path);
  return r;
}

// One aligned block, u three times against v three times.
struct BlockFixture {
  cooctest::TempDir dir;
  std::string args;

  BlockFixture() {
    dir.write("t1.txt", "u u u\n");
    dir.write("t2.txt", "v v v\n");
    dir.write("al.tsv", "0\t0\n");
    args = "count --text1 " + (dir.path() / "t1.txt").string() +
           " --text2 " + (dir.path() / "t2.txt").string() +
           " --mode boundary --alignment " + (dir.path() / "al.tsv").string();
  }
};

}  // namespace

TEST_CASE("count on one aligned block") {
  BlockFixture fx;
  const CliResult naive = run_cli(fx.dir, fx.args);
  CHECK(naive.exit_code == 0);
  CHECK(naive.out == "u\tv\t9\n");
  CHECK(naive.err.find("tokens: 3 x 3") != std::string::npos);

  const CliResult amo = run_cli(fx.dir, fx.args + " --assumption at-most-one");
  CHECK(amo.exit_code == 0);
  CHECK(amo.out == "u\tv\t3\n");

  const CliResult alo = run_cli(fx.dir, fx.args + " --assumption at-least-one");
  CHECK(alo.exit_code == 0);
  CHECK(alo.out == "u\tv\t3\n");
}

TEST_CASE("configuration contradictions exit 2") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "a\n");
  dir.write("t2.txt", "x\n");
  dir.write("map.tsv", "");
  const std::string base = "count --text1 " + (dir.path() / "t1.txt").string() +
                           " --text2 " + (dir.path() / "t2.txt").string();

  CHECK(run_cli(dir, base + " --mode distance --map " +
                         (dir.path() / "map.tsv").string())
            .exit_code == 2);  // no --delta
  CHECK(run_cli(dir, base + " --mode distance --delta 5").exit_code == 2);  // no --map
  CHECK(run_cli(dir, base + " --mode boundary").exit_code == 2);  // no --alignment
  CHECK(run_cli(dir, base + " --mode boundary --alignment x --delta 5").exit_code == 2);
  CHECK(run_cli(dir, base + " --mode bogus").exit_code == 2);
  CHECK(run_cli(dir, base + " --mode distance --map m --delta -3").exit_code == 2);
  CHECK(run_cli(dir, "nonsense-subcommand").exit_code == 2);
  CHECK(run_cli(dir, base + " --mode boundary --alignment x --pos1 only-one").exit_code == 2);
  CHECK(run_cli(dir, base + " --mode boundary --alignment x --filter-order mrbd").exit_code == 2);
}

TEST_CASE("input format errors exit 1 and name the line") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "a a a a\n");
  dir.write("t2.txt", "x x x x\n");
  dir.write("bad_map.tsv", "2\t3\n4\t1\n");
  const CliResult r = run_cli(
      dir, "count --text1 " + (dir.path() / "t1.txt").string() + " --text2 " +
               (dir.path() / "t2.txt").string() +
               " --mode distance --delta 2 --map " +
               (dir.path() / "bad_map.tsv").string());
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("bad_map.tsv:2") != std::string::npos);
}

TEST_CASE("missing input file exits 1") {
  cooctest::TempDir dir;
  const CliResult r = run_cli(dir,
                              "count --text1 /nonexistent-1 --text2 /nonexistent-2 "
                              "--mode boundary --alignment /nonexistent-3");
  CHECK(r.exit_code == 1);
}

TEST_CASE("malformed UTF-8 exits 1 and names file and line") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "fine line\nbad \xff token\n");
  dir.write("t2.txt", "x\nx\n");
  dir.write("al.tsv", "0\t0\n");
  const CliResult r = run_cli(
      dir, "count --text1 " + (dir.path() / "t1.txt").string() + " --text2 " +
               (dir.path() / "t2.txt").string() + " --mode boundary --alignment " +
               (dir.path() / "al.tsv").string());
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("t1.txt:2") != std::string::npos);
}

TEST_CASE("count writes the output file atomically") {
  BlockFixture fx;
  const std::string out = (fx.dir.path() / "table.tsv").string();
  const CliResult r = run_cli(fx.dir, fx.args + " --output " + out);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  CHECK(cooc::io::read_file(out) == "u\tv\t9\n");
  CHECK(!std::filesystem::exists(out + ".tmp"));
}

TEST_CASE("failures leave no partial output file") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "a\n");
  dir.write("t2.txt", "x\n");
  dir.write("bad_al.tsv", "0\t-\n");
  const std::string out = (dir.path() / "table.tsv").string();
  const CliResult r = run_cli(
      dir, "count --text1 " + (dir.path() / "t1.txt").string() + " --text2 " +
               (dir.path() / "t2.txt").string() + " --mode boundary --alignment " +
               (dir.path() / "bad_al.tsv").string() + " --output " + out);
  CHECK(r.exit_code == 1);
  CHECK(!std::filesystem::exists(out));
}

TEST_CASE("byte-identical output across runs") {
  BlockFixture fx;
  const std::string o1 = (fx.dir.path() / "a.tsv").string();
  const std::string o2 = (fx.dir.path() / "b.tsv").string();
  CHECK(run_cli(fx.dir, fx.args + " --output " + o1).exit_code == 0);
  CHECK(run_cli(fx.dir, fx.args + " --output " + o2).exit_code == 0);
  CHECK(cooc::io::read_file(o1) == cooc::io::read_file(o2));
}

TEST_CASE("distance mode end to end") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "aa bb cc\n");
  dir.write("t2.txt", "xx yy zz\n");
  dir.write("map.tsv", "");  // diagonal via synthesized corners
  const CliResult r = run_cli(
      dir, "count --text1 " + (dir.path() / "t1.txt").string() + " --text2 " +
               (dir.path() / "t2.txt").string() + " --mode distance --delta 2 --map " +
               (dir.path() / "map.tsv").string());
  CHECK(r.exit_code == 0);
  // Tokens sit at mids 1, 4, 7 on both axes; only same-position pairs are
  // within 2 of the diagonal.
  CHECK(r.out == "aa\txx\t1\nbb\tyy\t1\ncc\tzz\t1\n");
}

TEST_CASE("empty bitext yields an empty table") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "");
  dir.write("t2.txt", "x\n");
  dir.write("al.tsv", "");
  const CliResult r = run_cli(
      dir, "count --text1 " + (dir.path() / "t1.txt").string() + " --text2 " +
               (dir.path() / "t2.txt").string() + " --mode boundary --alignment " +
               (dir.path() / "al.tsv").string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("fold-case merges types in the output") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "U u\n");
  dir.write("t2.txt", "V v\n");
  dir.write("al.tsv", "0\t0\n");
  const std::string base = "count --text1 " + (dir.path() / "t1.txt").string() +
                           " --text2 " + (dir.path() / "t2.txt").string() +
                           " --mode boundary --alignment " +
                           (dir.path() / "al.tsv").string();
  CHECK(run_cli(dir, base + " --fold-case").out == "u\tv\t4\n");
  CHECK(run_cli(dir, base).out.find("U\tV\t1") != std::string::npos);
}

TEST_CASE("MRBD filter consumes links end to end") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "cat dog\n");
  dir.write("t2.txt", "chat chien\n");
  dir.write("al.tsv", "0\t0\n");
  dir.write("dict.tsv", "cat\tchat\n");
  const CliResult r = run_cli(
      dir, "count --text1 " + (dir.path() / "t1.txt").string() + " --text2 " +
               (dir.path() / "t2.txt").string() + " --mode boundary --alignment " +
               (dir.path() / "al.tsv").string() + " --mrbd " +
               (dir.path() / "dict.tsv").string());
  CHECK(r.exit_code == 0);
  // (cat,chat) is consumed; dog keeps only its chien edge.
  CHECK(r.out == "cat\tchat\t1\ndog\tchien\t1\n");
  CHECK(r.err.find("consumed: 1") != std::string::npos);
}

TEST_CASE("token units switch coordinates and map bounds together") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "one two three four\n");
  dir.write("t2.txt", "uno dos tres cuatro\n");
  dir.write("map.tsv", "2\t2\n4\t4\n");
  const std::string base = "count --text1 " + (dir.path() / "t1.txt").string() +
                           " --text2 " + (dir.path() / "t2.txt").string() +
                           " --mode distance";

  // Tokens sit at k+0.5 on the diagonal; adjacent pairs are 1/sqrt(2) away,
  // so delta 0.5 admits only same-index pairs.
  const CliResult tokens = run_cli(dir, base + " --map " +
                                            (dir.path() / "map.tsv").string() +
                                            " --delta 0.5 --units tokens");
  CHECK(tokens.exit_code == 0);
  CHECK(tokens.out ==
        "four\tcuatro\t1\none\tuno\t1\nthree\ttres\t1\ntwo\tdos\t1\n");

  // An anchor scaled for characters is out of bounds in token units.
  dir.write("map_chars.tsv", "10\t10\n");
  const CliResult chars_ok = run_cli(dir, base + " --map " +
                                              (dir.path() / "map_chars.tsv").string() +
                                              " --delta 2");
  CHECK(chars_ok.exit_code == 0);
  const CliResult tokens_oob = run_cli(dir, base + " --map " +
                                                (dir.path() / "map_chars.tsv").string() +
                                                " --delta 2 --units tokens");
  CHECK(tokens_oob.exit_code == 1);
}

TEST_CASE("help exits zero") {
  cooctest::TempDir dir;
  CHECK(run_cli(dir, "--help").exit_code == 0);
  CHECK(run_cli(dir, "count --help").exit_code == 0);
}

TEST_CASE("check-map reports and validates") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "aaaa aaaa\n");  // 10 code points
  dir.write("t2.txt", "bbbb bbbb\n");
  const std::string base = "check-map --text1 " + (dir.path() / "t1.txt").string() +
                           " --text2 " + (dir.path() / "t2.txt").string();

  dir.write("ok.tsv", "5\t5\n");
  const CliResult ok = run_cli(dir, base + " --map " + (dir.path() / "ok.tsv").string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("anchors: 3") != std::string::npos);
  CHECK(ok.out.find("max-gap:") != std::string::npos);

  dir.write("bad.tsv", "2\t6\n5\t3\n");
  const CliResult bad = run_cli(dir, base + " --map " + (dir.path() / "bad.tsv").string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("bad.tsv:2") != std::string::npos);

  dir.write("oob.tsv", "5\t11\n");
  const CliResult oob = run_cli(dir, base + " --map " + (dir.path() / "oob.tsv").string());
  CHECK(oob.exit_code == 1);
  CHECK(oob.err.find("oob.tsv:1") != std::string::npos);
}

TEST_CASE("verify cross-checks production against the reference") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "aa bb aa cc\nbb aa\n");
  dir.write("t2.txt", "xx yy zz\nxx ww\n");
  dir.write("map.tsv", "");
  const std::string base = "verify --text1 " + (dir.path() / "t1.txt").string() +
                           " --text2 " + (dir.path() / "t2.txt").string() +
                           " --mode distance --delta 4 --map " +
                           (dir.path() / "map.tsv").string();

  const CliResult ok = run_cli(dir, base + " --assumption at-least-one");
  CHECK(ok.exit_code == 0);
  CHECK(ok.err.find("verified") != std::string::npos);

  const CliResult bad = run_cli(dir, base + " --inject-mismatch");
  CHECK(bad.exit_code == 4);
  CHECK(bad.err.find("mismatch") != std::string::npos);

  const CliResult oversize = run_cli(dir, base + " --max-tokens 3");
  CHECK(oversize.exit_code == 1);
}

TEST_CASE("verify covers the combined model with filters") {
  cooctest::TempDir dir;
  dir.write("t1.txt", "cat tree anna\ncat blue\n");
  dir.write("t2.txt", "chat arbre anna\nchat bleu\n");
  dir.write("map.tsv", "");
  dir.write("al.tsv", "0\t0\n1\t1\n");
  dir.write("dict.tsv", "cat\tchat\n");
  const CliResult r = run_cli(
      dir, "verify --text1 " + (dir.path() / "t1.txt").string() + " --text2 " +
               (dir.path() / "t2.txt").string() +
               " --mode combined --delta 6 --map " + (dir.path() / "map.tsv").string() +
               " --alignment " + (dir.path() / "al.tsv").string() + " --mrbd " +
               (dir.path() / "dict.tsv").string() +
               " --cognate --assumption at-least-one");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("verified") != std::string::npos);
}

int main(int argc, char** argv) {
  doctest::Context context;
  std::vector<char*> passthrough;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0) {
      g_cli = arg.substr(6);
    } else {
      passthrough.push_back(argv[i]);
    }
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: cooc_cli_tests --cli=<path-to-cooc>\n");
    return 1;
  }
  context.applyCommandLine(static_cast<int>(passthrough.size()), passthrough.data());
  return context.run();
}
