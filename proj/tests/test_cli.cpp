#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gem/colored_graph.hpp"
#include "gem/moves.hpp"
#include "support.hpp"

using namespace gem;
using namespace testsup;

TEST_CASE("validate reports defects and exits accordingly") {
  RunResult ok = run_cli({"validate", data_file("melon4.gem")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "rank 4  half 1  nodes 2  lines 5\nok\n");

  RunResult bad = run_cli({"validate", data_file("broken.gem")});
  CHECK(bad.code == 1);
  CHECK(bad.out == "rank 2  half 2  nodes 4  lines 6\ndefect matching-not-bijective: color 0\n");

  RunResult disc = run_cli({"validate", data_file("disconnected.gem")});
  CHECK(disc.code == 1);
  CHECK(disc.out.find("defect disconnected: full color set") != std::string::npos);
}

TEST_CASE("usage and io problems exit 2, domain problems exit 1") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"trisect", data_file("melon4.gem")}).code == 2);  // --color required

  RunResult missing = run_cli({"validate", "/no/such/file.gem"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  RunResult range = run_cli({"trisect", data_file("melon4.gem"), "--color", "9"});
  CHECK(range.code == 1);
  CHECK(range.err.find("special color 9 out of range") != std::string::npos);

  RunResult rank = run_cli({"trisect", data_file("n4.gem"), "--color", "0"});
  CHECK(rank.code == 1);
  CHECK(rank.err.find("rank-4") != std::string::npos);

  RunResult pairs = run_cli({"trisect", data_file("melon4.gem"), "--color", "0", "--pairs", "99"});
  CHECK(pairs.code == 1);

  RunResult broken = run_cli({"info", data_file("broken.gem")});
  CHECK(broken.code == 1);
  CHECK(broken.err.find("defect matching-not-bijective") != std::string::npos);
}

TEST_CASE("info prints the frozen melon tables") {
  RunResult r = run_cli({"info", data_file("melon4.gem")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "rank 4  half 1  colors 5  nodes 2  lines 5\n"
        "connected yes\n"
        "bicolored cycles\n"
        "  {0,1}  1\n"
        "  {0,2}  1\n"
        "  {0,3}  1\n"
        "  {0,4}  1\n"
        "  {1,2}  1\n"
        "  {1,3}  1\n"
        "  {1,4}  1\n"
        "  {2,3}  1\n"
        "  {2,4}  1\n"
        "  {3,4}  1\n"
        "bubbles\n"
        "  0-hat  1\n"
        "  1-hat  1\n"
        "  2-hat  1\n"
        "  3-hat  1\n"
        "  4-hat  1\n"
        "degree 0\n");
}

TEST_CASE("jackets lists the canonical orders with genera") {
  RunResult r = run_cli({"jackets", data_file("n4.gem")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "order  faces  genus\n"
        "(0,1,2,3)  6  0\n"
        "(0,1,3,2)  6  0\n"
        "(0,2,1,3)  4  1\n"
        "degree 1\n");
}

TEST_CASE("manifold prints verdict, bubble table and link screen") {
  RunResult good = run_cli({"manifold", data_file("melon4.gem")});
  CHECK(good.code == 0);
  CHECK(good.out.find("verdict certified-manifold") == 0);

  RunResult open = run_cli({"manifold", data_file("p_first.gem")});
  CHECK(open.code == 0);
  CHECK(open.out.find("verdict unknown") == 0);
  CHECK(open.out.find("0-hat #0  unknown (degree 1)") != std::string::npos);
  CHECK(open.out.find("3-hat #0  sphere (degree 0)") != std::string::npos);
  CHECK(open.out.find("noncertified 3") != std::string::npos);
  CHECK(open.out.find("0-hat #0  all-sphere-links yes") != std::string::npos);
}

TEST_CASE("heegaard prints one row per pair partition") {
  RunResult r = run_cli({"heegaard", data_file("n4.gem")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "pairs {0,1}{2,3}  jacket (0,2,1,3)  faces 4  genus 1  alpha 2  beta 2  skeleton 5  "
        "comparison -4\n"
        "pairs {0,2}{1,3}  jacket (0,1,2,3)  faces 6  genus 0  alpha 1  beta 1  skeleton 5  "
        "comparison -5\n"
        "pairs {0,3}{1,2}  jacket (0,1,3,2)  faces 6  genus 0  alpha 1  beta 1  skeleton 5  "
        "comparison -5\n");
}

TEST_CASE("trisect prints the frozen melon summary") {
  RunResult r = run_cli({"trisect", data_file("melon4.gem"), "--color", "0"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "genus 1; L=1; bubbles: 1 (g=0); status Trisection\n"
        "surface: V=12 E=24 F=12 chi=0\n"
        "alpha: 1/1 selected of 2 candidates\n"
        "beta: 1/1 selected of 2 candidates\n"
        "gamma: 1/1 selected of 4 candidates\n");
}

TEST_CASE("json and svg outputs are byte-identical to the goldens") {
  struct Case {
    const char* gemfile;
    const char* json;
    const char* svg;
  };
  for (const Case& c : {Case{"melon4.gem", "melon4_c0.json", "melon4_c0.svg"},
                        Case{"pillow1.gem", "pillow1_c0.json", "pillow1_c0.svg"}}) {
    RunResult j1 = run_cli({"trisect", data_file(c.gemfile), "--color", "0", "--json"});
    RunResult j2 = run_cli({"trisect", data_file(c.gemfile), "--color", "0", "--json"});
    CHECK(j1.code == 0);
    CHECK(j1.out == j2.out);
    CHECK(j1.out == read_file(golden_file(c.json)));

    std::string svg_path = "/tmp/gem_golden_check.svg";
    RunResult s = run_cli({"trisect", data_file(c.gemfile), "--color", "0", "--svg", svg_path});
    CHECK(s.code == 0);
    CHECK(read_file(svg_path) == read_file(golden_file(c.svg)));
  }
}

TEST_CASE("render rebuilds the golden svg from the golden json alone") {
  std::string out_path = "/tmp/gem_render_check.svg";
  RunResult r = run_cli({"render", golden_file("melon4_c0.json"), "--out", out_path});
  CHECK(r.code == 0);
  CHECK(read_file(out_path) == read_file(golden_file("melon4_c0.svg")));

  RunResult garbage = run_cli({"render", data_file("melon4.gem")});
  CHECK(garbage.code == 1);
  CHECK(garbage.err.find("error:") != std::string::npos);
}

TEST_CASE("trisect-all emits fifteen rows plus scope, and its json golden") {
  RunResult text = run_cli({"trisect-all", data_file("p_first.gem")});
  CHECK(text.code == 0);
  CHECK(text.out.find("special 0  pairs {1,2}{3,4}  genus 3  L 2  status Uncertified  "
                      "selected 3+3+3\n") == 0);
  CHECK(text.out.find("scope\n") != std::string::npos);
  CHECK(text.out.find("color 0: out-of-scope  0-hat #0 (degree 1)") != std::string::npos);

  RunResult json = run_cli({"trisect-all", data_file("p_first.gem"), "--json"});
  CHECK(json.code == 0);
  CHECK(json.out == read_file(golden_file("p_first_all.json")));
}

TEST_CASE("gen melon emits the canonical serialization") {
  RunResult r = run_cli({"gen", "melon", "--rank", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "gem 1\nrank 4\nhalf 1\n0 1 1\n1 1 1\n2 1 1\n3 1 1\n4 1 1\n");
  CHECK(run_cli({"gen", "melon", "--rank", "1"}).code == 1);
}

TEST_CASE("moves work through files and match the library") {
  RunResult dip = run_cli({"move", "dipole", data_file("melon4.gem"), "--line", "1:1"});
  CHECK(dip.code == 0);
  CHECK(parse_gem(dip.out) == pillow(1));

  std::string tmp = "/tmp/gem_move_check.gem";
  RunResult dip2 =
      run_cli({"move", "dipole", data_file("melon4.gem"), "--line", "1:1", "--out", tmp});
  CHECK(dip2.code == 0);
  RunResult con = run_cli({"move", "contract", tmp, "--pos", "2", "--neg", "2"});
  CHECK(con.code == 0);
  CHECK(parse_gem(con.out) == generate_melon(4));

  RunResult sum = run_cli({"move", "connsum", data_file("melon4.gem"), data_file("melon4.gem"),
                           "--line1", "0:1", "--line2", "0:1"});
  CHECK(sum.code == 0);
  CHECK(parse_gem(sum.out) == pillow(0));

  RunResult not_dip = run_cli({"move", "contract", data_file("pillow1.gem"), "--pos", "1",
                               "--neg", "2"});
  CHECK(not_dip.code == 1);
  CHECK(not_dip.err.find("error:") != std::string::npos);
}

TEST_CASE("plain output carries no ansi colors unless forced") {
  RunResult piped = run_cli({"validate", data_file("broken.gem")});
  CHECK(piped.out.find('\x1b') == std::string::npos);
  CHECK(piped.err.find('\x1b') == std::string::npos);

  RunResult forced = run_cli({"validate", data_file("broken.gem")}, "GEM_COLOR=always");
  CHECK(forced.out.find("\x1b[31m") != std::string::npos);

  RunResult off = run_cli({"validate", data_file("broken.gem")}, "GEM_COLOR=never");
  CHECK(off.out.find('\x1b') == std::string::npos);
}

TEST_CASE("dash reads stdin and writes stdout") {
  RunResult r = run_cli({"validate", "-"}, "", data_file("melon4.gem"));
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
}
