#include <doctest.h>

#include "cli_runner.hpp"

using lyntree::testing::run_cli;

namespace {

void expect(const std::string& args, int code, const std::string& out) {
  auto r = run_cli(args);
  CHECK_MESSAGE(r.exit_code == code, args);
  CHECK_MESSAGE(r.out == out, args);
}

}  // namespace

TEST_CASE("compare") {
  expect("compare aba ab", 0, "aba <ω ab, mismatch at 4\n");
  expect("compare b ba", 0, "b >ω ba, mismatch at 2\n");
  expect("compare ab abab", 0, "equal: powers of ab\n");
  expect("compare abaab abaababa", 0, "abaab >ω abaababa, mismatch at 12\n");
  expect("--alphabet ba compare aba ab", 0, "aba >ω ab, mismatch at 4\n");
  expect("compare aab ab --six", 0,
         "aab <ω ab, mismatch at 2\n"
         "(1) u^ω < v^ω: true\n"
         "(2) (uv)^ω < v^ω: true\n"
         "(3) u^ω < (vu)^ω: true\n"
         "(4) (uv)^ω < (vu)^ω: true\n"
         "(5) u^ω < (uv)^ω: true\n"
         "(6) (vu)^ω < v^ω: true\n");
  expect("--format structured compare ab abab", 0,
         "{\"common_root\":\"ab\",\"mismatch_position\":null,\"outcome\":\"equal\"}\n");
}

TEST_CASE("factorize") {
  expect("factorize ababaab", 0, "(ab)(ab)(aab)\nfirst: ab\nlast: aab\n");
  expect("factorize aabaacab", 0, "(aabaacab)\nfirst: aabaacab\nlast: aabaacab\n");
  expect("factorize bbb", 0, "(b)(b)(b)\nfirst: b\nlast: b\n");
  expect("--format json factorize ababaab", 0,
         "{\"factors\":[\"ab\",\"ab\",\"aab\"],\"first\":\"ab\",\"last\":\"aab\"}\n");
}

TEST_CASE("pstd") {
  expect("pstd aabaacab", 0, "21543768\ninverse: 21543768\n");
  expect("pstd a", 0, "1\ninverse: 1\n");
  expect("pstd ab", 0, "12\ninverse: 12\n");
  auto r = run_cli("pstd aaaaaaaaab");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find(',') != std::string::npos);
}

TEST_CASE("tree") {
  expect("tree aabaacab --kind left", 0,
         "(((a,(a,b)),(a,(a,c))),(a,b))\nleft and cartesian trees: equal\n");
  expect("tree aabaacab", 0, "(((a,(a,b)),(a,(a,c))),(a,b))\nleft and cartesian trees: equal\n");
  expect("tree ab --kind cartesian", 0, "(a,b)\nleft and cartesian trees: equal\n");
  expect("tree aabaacab --kind right", 0, "((a,(a,b)),((a,(a,c)),(a,b)))\n");
  expect("--format structured tree ab --kind right", 0, "{\"l\":{\"leaf\":\"a\"},\"r\":{\"leaf\":\"b\"}}\n");
  auto dot = run_cli("--format dot tree aabaacab");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph tree {\n", 0) == 0);
  CHECK(dot.out.find("  n12 [label=\"aabaaca\"];\n") != std::string::npos);

  auto bad = run_cli("tree ba --kind left", "err");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out == "not Lyndon: split b|a has u ≥ v\n");
}

TEST_CASE("verify") {
  auto r = run_cli("verify --alphabet ab --max-len 10 --jobs 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Lyndon words per length: 2,1,2,3,6,9,18,30,56,99\n") != std::string::npos);
  CHECK(r.out.find("all checks pass; 226 Lyndon words visited (2046 words)\n") != std::string::npos);

  auto unary = run_cli("verify --alphabet a --max-len 5");
  CHECK(unary.exit_code == 0);
  CHECK(unary.out.find("all checks pass; 1 Lyndon words visited (5 words)\n") != std::string::npos);

  CHECK(run_cli("verify --alphabet abc --max-len 6 --jobs 2").exit_code == 0);
  CHECK(run_cli("verify --max-len 4 --expect-counts 2,1,2,3").exit_code == 0);

  auto fail = run_cli("verify --max-len 3 --expect-counts 2,1,3", "err");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.rfind("FAILED: ", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("compare ab").exit_code == 2);
  CHECK(run_cli("compare ab ad --alphabet ab").exit_code == 2);
  CHECK(run_cli("--format dot pstd ab").exit_code == 2);
  CHECK(run_cli("--format xml pstd ab").exit_code == 2);
  CHECK(run_cli("tree ab --kind middle").exit_code == 2);
  CHECK(run_cli("verify --max-len 0").exit_code == 2);
  CHECK(run_cli("--alphabet aa factorize ab").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}
