#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char c : arg) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with stderr discarded.
Run fpw(std::initializer_list<std::string> args) {
  std::string cmd = FPW_CLI_PATH;
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("documented examples") {
  Run r = fpw({"bs-triv", "-m", "2", "-n", "3", "s^-1 t^2 s t^-3"});
  CHECK(r.code == 0);
  CHECK(r.out == "trivial\n");
  r = fpw({"wfam", "-i", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "s^-1 t s t s^-1 t^-1 s t^-1\n");
  r = fpw({"demo", "recover-card", "--set", "4,7", "--kmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "|W| = 2\n");
}

TEST_CASE("word and BS subcommands") {
  CHECK(fpw({"reduce", "a b b^-1 c"}).out == "a c\n");
  CHECK(fpw({"reduce", "--compact", "x x x"}).out == "x^3\n");
  CHECK(fpw({"bs-triv", "s^-1 t s t s^-1 t^-1 s t^-1"}).out == "nontrivial\n");
  CHECK(fpw({"bs-triv", "-m", "1", "-n", "1", "s t s^-1 t^-1"}).out == "trivial\n");
  CHECK(fpw({"bs-equal", "s^-1 t^2 s", "t^3"}).out == "equal\n");
  CHECK(fpw({"bs-equal", "t", "t^2"}).out == "not equal\n");
  CHECK(fpw({"bs-reduce", "s t^3 s^-1"}).out == "t^2\n");
  CHECK(fpw({"apply-f", "-i", "2", "s t"}).out == "s t t t t\n");
  CHECK(fpw({"apply-f", "-i", "64", "--syllables", "t"}).out == "t^18446744073709551616\n");
  CHECK(fpw({"wfam", "-i", "2", "--compact"}).out == "s^-2 t s^2 t^-1 s^-1 t s^-1 t^-1 s^2 t s^-1 t^-1 s\n");
  Run k = fpw({"kernel-enum", "-i", "0", "--count", "3"});
  CHECK(k.code == 0);
  CHECK(k.out.substr(0, 1) == "\n");  // the identity comes first
}

TEST_CASE("presentations, certificates and abelianization") {
  Run e = fpw({"enum-trivial", "-p", "< x | x^2 >", "--count", "3"});
  CHECK(e.code == 0);
  CHECK(e.out == "\nx x\nx^-1 x^-1\n");
  Run j = fpw({"enum-trivial", "-p", "< x | x^2 >", "--count", "2", "--json"});
  CHECK(j.out.find("\"certificate\"") != std::string::npos);

  CHECK(fpw({"check-cert", "[{\"conj\":\"t\",\"rel\":0,\"sign\":1}]", "--word", "t s^-1 t^2 s t^-3 t^-1"}).code == 0);
  CHECK(fpw({"check-cert", "[{\"conj\":\"t\",\"rel\":0,\"sign\":1}]", "--word", "t"}).code == 1);
  CHECK(fpw({"check-cert", "[{\"rel\":0}]"}).code == 1);

  CHECK(fpw({"abelian"}).out == "Z\n");
  CHECK(fpw({"abelian", "--json"}).out == "{\"free_rank\":1,\"torsion\":[]}\n");
  CHECK(fpw({"abelian", "-p", "< a, b | a^2, b^3 >"}).out == "Z/6\n");
  CHECK(fpw({"abelian", "-p", "< x | x >"}).out == "1\n");
  CHECK(fpw({"perfect", "-p", "< x | x^2 >"}).out == "not perfect\n");
  CHECK(fpw({"perfect", "-p", "< x | x >"}).out == "perfect\n");

  // presentation files
  const char* path = "test_cli_z3.pres";
  std::ofstream(path) << "< y | y^3 >\n";
  CHECK(fpw({"abelian", "-p", path}).out == "Z/3\n");
  std::remove(path);
  CHECK(fpw({"abelian", "-p", "no_such_file.pres"}).code == 1);
  CHECK(fpw({"abelian", "-p", "< x | y >"}).code == 1);
}

TEST_CASE("searches") {
  Run h = fpw({"hom-check", "--map", "s=s,t=t^2"});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("homomorphism", 0) == 0);
  Run miss = fpw({"hom-check", "-p", "< x | x^2 >", "-q", "< y | y^3 >", "--map", "x=y", "--budget", "200"});
  CHECK(miss.code == 2);
  CHECK(miss.out == "exhausted after 200 steps\n");
  CHECK(fpw({"hom-decide", "--map", "s=s,t=t^2"}).out == "homomorphism\n");
  CHECK(fpw({"hom-decide", "--map", "s=t,t=s"}).out == "not a homomorphism\n");
  CHECK(fpw({"hom-decide", "-p", "< x | x^2 >", "-q", "< y | y^4 >", "--map", "x=y^2", "--oracle", "cyclic:4"}).out ==
        "homomorphism\n");

  Run iso = fpw({"iso-search", "-p", "< x | x^2 >", "-q", "< y | y^-2 >"});
  CHECK(iso.code == 0);
  CHECK(iso.out == "isomorphic (candidate 4, 50 steps)\nforward: x=y\nbackward: y=x\n");
  CHECK(fpw({"iso-search", "-p", "< x | x^2 >", "-q", "< y | y^3 >", "--budget", "1000"}).code == 2);

  Run sub = fpw({"subgrp-presentation", "--gens", "t", "-q", "< a | >"});
  CHECK(sub.code == 0);
  CHECK(sub.out.rfind("presentation: < W1 | >\n", 0) == 0);
  CHECK(fpw({"subgrp-presentation", "--gens", "t", "-q", "< a | a^2 >", "--budget", "1000"}).code == 2);
  CHECK(fpw({"subgrp-presentation", "--gens", "t", "-q", "< a | >", "--oracle", "nope"}).code == 64);
}

TEST_CASE("Tietze subcommands") {
  Run a = fpw({"tietze-apply", "-p", "< x | x^2 >", "--moves", R"([{"op":"add_gen","name":"y","def":"x"}])"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("< x, y | x x, y x^-1 >\n", 0) == 0);
  CHECK(fpw({"tietze-apply", "-p", "< x | x^2 >", "--moves", R"([{"op":"rem_gen","name":"x","rel":0}])"}).code == 1);

  CHECK(fpw({"tietze-check", "-p", "< x | x^2 >", "--move", R"({"op":"add_rel","word":"x^4"})"}).code == 0);
  Run bad = fpw({"tietze-check", "-p", "< x | x^2 >", "--move", R"({"op":"add_gen","name":"x","def":""})"});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("invalid", 0) == 0);
  Run unknown = fpw({"tietze-check", "-p", "< x | x^2 >", "--budget", "100", "--move", R"({"op":"add_rel","word":"x^3"})"});
  CHECK(unknown.code == 2);
  CHECK(unknown.out == "unverifiable\n");
}

TEST_CASE("plumbing and demos") {
  CHECK(fpw({"pair", "13", "13"}).out == "364\n");
  CHECK(fpw({"pair", "3", "1", "4"}).out == "124\n");  // <<3,1>,4> = <11,4>
  CHECK(fpw({"unpair", "364"}).out == "13 13\n");
  CHECK(fpw({"pair", "18446744073709551615", "1"}).code == 1);
  CHECK(fpw({"compress", "5", "3", "5", "9"}).out == "0 1 2\n");
  CHECK(fpw({"compress"}).out == "\n");
  CHECK(fpw({"demo", "recover-card", "--set", "", "--kmax", "4"}).out == "|W| = 0\n");
  CHECK(fpw({"demo", "recover-card", "--set", "0,1,2", "--json"}).out == "{\"cardinality\":3}\n");

  Run demo = fpw({"demo", "non-hopfian"});
  CHECK(demo.code == 0);
  CHECK(demo.out.find("[FAIL]") == std::string::npos);
  CHECK(demo.out.find("not Hopfian") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
  CHECK(fpw({}).code == 64);
  CHECK(fpw({"no-such-command"}).code == 64);
  CHECK(fpw({"wfam", "-i", "minus"}).code == 64);
  CHECK(fpw({"bs-equal", "t"}).code == 64);
  CHECK(fpw({"demo"}).code == 64);
  CHECK(fpw({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  for (auto args : {std::initializer_list<std::string>{"enum-trivial", "--count", "40", "--json"},
                    std::initializer_list<std::string>{"iso-search", "-p", "< x | x >", "-q", "< y | y >", "--json"},
                    std::initializer_list<std::string>{"demo", "non-hopfian"},
                    std::initializer_list<std::string>{"kernel-enum", "-i", "1", "--count", "50"}}) {
    Run a = fpw(args), b = fpw(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
