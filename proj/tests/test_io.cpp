#include <random>

#include "cli_cases.hpp"
#include "doctest.h"
#include "higman_words.hpp"
#include "pc/error.hpp"
#include "pc/io.hpp"
#include "support.hpp"

using namespace pc;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_circuit(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for:\n" << text);
  return ErrorCode::ValidationError;
}

bool same_structure(const PowerCircuit& a, const PowerCircuit& b) {
  if (a.base() != b.base() || a.nodes() != b.nodes()) return false;
  for (NodeId u : a.nodes())
    if (!(a.successors(u) == b.successors(u))) return false;
  return true;
}

}  // namespace

TEST_CASE("circuit file: minimal and empty") {
  auto f = parse_circuit("pcq 1\nq 2\nnode 0\n");
  CHECK(f.pc.size() == 1);
  CHECK(f.pc.edge_count() == 0);
  CHECK(eval_node(f.pc, NodeId(0)) == 1);

  PowerCircuit empty(3);
  CHECK(serialize_circuit(empty, {}) == "pcq 1\nq 3\n");
  CHECK(parse_circuit("# nothing\npcq 1\n\nq 3   # base\n").pc.size() == 0);
}

TEST_CASE("circuit file: errors") {
  CHECK(code_of("pcq 1\nq 2\nnode 0\nnode 1\nedge 1 0 2\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nnode 1\nedge 1 0 -3\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nnode 1\nedge 1 0 0\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nnode 1\nedge 1 0 1\nedge 0 1 1\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nedge 0 0 1\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nnode 1\nedge 1 0 1\nedge 1 0 2\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nnode 0\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nedge 0 7 1\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nmark M 0:1 0:2\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nmark M 0:1\nmark M 0:2\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nmark M 0:3\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 1\nq 1\n") == ErrorCode::ValidationError);
  CHECK(code_of("pcq 2\nq 3\n") == ErrorCode::ParseError);
  CHECK(code_of("q 3\n") == ErrorCode::ParseError);
  CHECK(code_of("pcq 1\nnode 0\n") == ErrorCode::ParseError);
  CHECK(code_of("pcq 1\n") == ErrorCode::ParseError);
  CHECK(code_of("pcq 1\nq 3\nnodes 0\n") == ErrorCode::ParseError);
  CHECK(code_of("pcq 1\nq 3\nnode -1\n") == ErrorCode::ParseError);
  CHECK(code_of("pcq 1\nq 3\nnode 0\nmark M 0=1\n") == ErrorCode::ParseError);

  try {
    parse_circuit("pcq 1\nq 2\n\nnode 0\nedge 0 x 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("circuit file: golden figure") {
  const std::string golden = pctest::slurp(PC_FIXTURES "/value29.pcq");
  auto f = pctest::value29();
  CHECK(serialize_circuit(f.pc, f.m) == golden);

  auto g = parse_circuit(golden);
  CHECK(eval_marking(g.pc, g.marks.at("M")) == 29);
  CHECK(serialize_circuit(g.pc, g.marks) == golden);
}

TEST_CASE("circuit file: sparse ids survive") {
  auto f = parse_circuit("pcq 1\nq 2\nnode 3\nnode 10\nedge 10 3 1\nmark M 10:1 3:-1\n");
  CHECK(f.pc.nodes() == std::vector<NodeId>{NodeId(3), NodeId(10)});
  CHECK(eval_marking(f.pc, f.marks.at("M")) == 1);
  CHECK(serialize_circuit(f.pc, f.marks) == "pcq 1\nq 2\nnode 3\nnode 10\nedge 10 3 1\nmark M 3:-1 10:1\n");
}

TEST_CASE("circuit file: random round trips") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const int q = std::array{2, 3, 5}[round % 3];
    PowerCircuit pc = pctest::random_circuit(rng, q, 1 + static_cast<int>(rng() % 12), 30);
    // retire a few ids
    for (NodeId u : pc.nodes()) {
      bool referenced = false;
      for (NodeId v : pc.nodes()) referenced |= pc.successors(v).contains(u);
      if (!referenced && rng() % 4 == 0) pc.remove_node(u);
    }
    std::map<std::string, Marking> marks;
    const int nm = static_cast<int>(rng() % 4);
    for (int i = 0; i < nm; ++i) marks.emplace(std::string(1, static_cast<char>('Z' - i)), pctest::random_marking(rng, pc));

    const std::string text = serialize_circuit(pc, marks);
    auto back = parse_circuit(text);
    REQUIRE(same_structure(pc, back.pc));
    REQUIRE(back.marks.size() == marks.size());
    for (const auto& [name, m] : marks) {
      CHECK(back.marks.at(name) == m);
      CHECK(eval_marking(back.pc, back.marks.at(name)) == eval_marking(pc, m));
    }
    CHECK(serialize_circuit(back.pc, back.marks) == text);
  }
}

TEST_CASE("words: grammar") {
  CHECK(parse_word("a1", 4) == std::vector<HigLetter>{{1, 1}});
  CHECK(parse_word("A2 a1^-3", 4) == std::vector<HigLetter>{{2, -1}, {1, -3}});
  CHECK(parse_word("  a4^+2\n\ta3 ", 4) == std::vector<HigLetter>{{4, 2}, {3, 1}});
  CHECK(parse_word("", 4).empty());
  for (const char* bad : {"a5", "a0", "A2^2", "a1^0", "b1", "a", "a1^", "a1^x", "a-1", "a+1", "a1x", "aa1"})
    CHECK_THROWS_AS(parse_word(bad, 4), ParseError);

  CHECK(parse_bg_word("b a B A a^3 b^-2") ==
        std::vector<BgLetter>{{1, 1}, {0, 1}, {1, -1}, {0, -1}, {0, 3}, {1, -2}});
  CHECK(parse_bg_word("a2 A1 a1^4") == std::vector<BgLetter>{{1, 1}, {0, -1}, {0, 4}});
  for (const char* bad : {"c", "a3", "B^2", "a^0", "ab"}) CHECK_THROWS_AS(parse_bg_word(bad), ParseError);
}

TEST_CASE("words: random round trips") {
  std::mt19937 rng(11);
  for (int round = 0; round < 500; ++round) {
    const int f = 4 + round % 4;
    std::vector<HigLetter> w;
    const int len = static_cast<int>(rng() % 20);
    for (int i = 0; i < len; ++i) {
      long long e = static_cast<long long>(rng() % 9) - 4;
      if (e == 0) e = 7;
      w.push_back({1 + static_cast<int>(rng() % f), e});
    }
    CHECK(parse_word(format_word(w), f) == w);

    std::vector<BgLetter> b;
    for (int i = 0; i < len; ++i) {
      long long e = static_cast<long long>(rng() % 7) - 3;
      if (e == 0) e = -5;
      b.push_back({static_cast<int>(rng() % 2), e});
    }
    CHECK(parse_bg_word(format_bg_word(b)) == b);
  }
}

TEST_CASE("cli fixtures") {
  const auto results = pctest::run_cli_cases(PC_FIXTURES, PC_TOOL_PC, PC_TOOL_WP);
  CHECK(results.size() >= 40);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok);
  }
}
