// End-to-end checks of the command line tool.  The binary path comes in
// through BEXT_CLI_PATH, defined by the build.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "bext/conv_iso.hpp"
#include "bext/element_io.hpp"
#include "bext/endomorphism.hpp"
#include "doctest.h"

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("'") + BEXT_CLI_PATH + "' " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 256> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int rc = pclose(pipe);
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return {WEXITSTATUS(rc), out};
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

// Writes a full table for the index shift by p on the rank-2 model, window w,
// optionally bending the image of Zero so the table stops being one.
std::filesystem::path write_shift_table(const char* name, std::uint64_t p,
                                        std::uint64_t w, bool corrupt_zero) {
  auto tab = bext::table_of(bext::ConvSemigroup{2},
                            bext::Endo<bext::ConvIso>::shift(p), w);
  auto path = temp_file(name);
  std::ofstream out(path);
  REQUIRE(out.good());
  for (const auto& [key, value] : tab.entries) {
    const bext::ConvIso& img =
        corrupt_zero && key.is_zero() ? bext::ConvIso{0, 0, 1} : value;
    out << bext::show(key) << " -> " << bext::show(img) << "\n";
  }
  return path;
}

}  // namespace

TEST_CASE("mul resolves the semigroup from its operands") {
  auto ext = run_cli("mul '(2,1,[0;1])' '(3,4,[0;2])' --n 2");
  CHECK(ext.status == 0);
  CHECK(ext.out == "0\n");

  auto conv = run_cli("mul 'conv(0,2,3)' 'conv(3,5,2)'");
  CHECK(conv.status == 0);
  CHECK(conv.out == "conv(1,5,2)\n");

  auto annihilated = run_cli("mul 'conv(0,0,1)' 'conv(5,5,1)'");
  CHECK(annihilated.status == 0);
  CHECK(annihilated.out == "0\n");

  auto unit = run_cli("mul 'mu(0,1)' 'mu(1,1)' --lambda 2");
  CHECK(unit.status == 0);
  CHECK(unit.out == "mu(0,1)\n");
}

TEST_CASE("mul usage errors") {
  CHECK(run_cli("mul 0 0 2>/dev/null").status == 2);
  auto forced = run_cli("mul 0 0 --semigroup conv");
  CHECK(forced.status == 0);
  CHECK(forced.out == "0\n");
  // operands from different grammars
  CHECK(run_cli("mul 'conv(0,2,3)' '(1,1,[0;1])' 2>/dev/null").status == 2);
  // extension elements with no ambient family
  CHECK(run_cli("mul '(1,1,[0;1])' '(2,2,[0;1])' 2>/dev/null").status == 2);
  // units without --lambda, and out of range for it
  CHECK(run_cli("mul 'mu(0,1)' 'mu(1,1)' 2>/dev/null").status == 2);
  CHECK(run_cli("mul 'mu(0,5)' 'mu(1,1)' --lambda 2 2>/dev/null").status == 2);
}

TEST_CASE("mul emits machine-readable output on request") {
  auto r = run_cli("mul '(0,2,[0;1])' '(3,5,[0;2])' --n 2 --json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j == nlohmann::json({{"i", 1}, {"j", 5}, {"F", {0}}}));
}

TEST_CASE("family-check") {
  auto good = run_cli("family-check '{[0;0],[0;1],{}}'");
  CHECK(good.status == 0);
  CHECK(good.out == "omega-closed\n");

  auto bad = run_cli("family-check '{[0;1]}'");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("not omega-closed") != std::string::npos);

  CHECK(run_cli("family-check '{'  2>/dev/null").status == 2);
}

TEST_CASE("iso-check walks a window") {
  auto r = run_cli("iso-check --n 2 --window 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("correspondence holds") != std::string::npos);
}

TEST_CASE("endo-verify reads table files") {
  auto good = write_shift_table("bext_cli_shift1.txt", 1, 2, false);
  auto r = run_cli("endo-verify --table '" + good.string() +
                   "' --n 2 --window 2");
  CHECK(r.status == 0);
  CHECK(r.out == "endomorphism: 196 pairs checked, 0 skipped\n");

  auto bad = write_shift_table("bext_cli_broken.txt", 1, 2, true);
  auto rb = run_cli("endo-verify --table '" + bad.string() +
                    "' --n 2 --window 2");
  CHECK(rb.status == 1);
  CHECK(rb.out.find("not an endomorphism: images disagree on") == 0);

  auto garbled = temp_file("bext_cli_garbled.txt");
  std::ofstream(garbled) << "conv(0,0,1) conv(1,1,1)\n";
  CHECK(run_cli("endo-verify --table '" + garbled.string() +
                "' --n 2 --window 2 2>/dev/null")
            .status == 2);
  CHECK(run_cli("endo-verify --table /nonexistent.txt --n 2 --window 2 "
                "2>/dev/null")
            .status == 2);
}

TEST_CASE("endo-classify recognizes shifts and violations") {
  auto shift2 = write_shift_table("bext_cli_shift2.txt", 2, 4, false);
  auto r = run_cli("endo-classify --table '" + shift2.string() + "' --n 2");
  CHECK(r.status == 0);
  CHECK(r.out == "shift by 2\n");

  auto rj = run_cli("endo-classify --table '" + shift2.string() +
                    "' --n 2 --json");
  CHECK(rj.status == 0);
  CHECK(rj.out == "{\"verdict\":\"shift\",\"i0\":2}\n");

  auto zero_bent = write_shift_table("bext_cli_bent.txt", 0, 4, true);
  auto rv = run_cli("endo-classify --table '" + zero_bent.string() + "' --n 2");
  CHECK(rv.status == 1);
  CHECK(rv.out.find("violation: zero-not-fixed") == 0);
}

TEST_CASE("chains come out one per line") {
  auto r = run_cli("chains --n 2 --window 2");
  CHECK(r.status == 0);
  std::size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 4);
  CHECK(r.out.find("0 < conv(") == 0);

  auto dot = temp_file("bext_cli_hasse.dot");
  auto rd = run_cli("chains --n 2 --window 2 --dot '" + dot.string() + "'");
  CHECK(rd.status == 0);
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("digraph") != std::string::npos);
}

TEST_CASE("matrix-endos") {
  auto r = run_cli("matrix-endos --lambda 2");
  CHECK(r.status == 0);
  CHECK(r.out == "5 endomorphisms (2 injective, 3 annihilating)\n");

  auto rep = run_cli("matrix-endos --lambda 3 --report");
  CHECK(rep.status == 0);
  CHECK(rep.out.find("NO") == std::string::npos);
  CHECK(rep.out.find("|Aut| = 6") != std::string::npos);

  CHECK(run_cli("matrix-endos --lambda 5 2>/dev/null").status == 2);
}

TEST_CASE("congruences") {
  auto r = run_cli("congruences --lambda 2");
  CHECK(r.status == 0);
  CHECK(r.out == "congruence-free (2 congruences)\n");
}

TEST_CASE("top-level usage") {
  CHECK(run_cli("frobnicate 2>/dev/null").status == 2);
  CHECK(run_cli("2>/dev/null").status == 2);
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("mul --help").status == 0);
}
