#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pc/bg.hpp"
#include "pc/circuit.hpp"
#include "pc/higman.hpp"

namespace pc {

// Line-oriented text format:
//   pcq 1
//   q <q>
//   node <id>
//   edge <src> <dst> <label>
//   mark <name> <id>:<digit> ...
// '#' starts a comment. File ids are kept as circuit ids; gaps are retired.
struct CircuitFile {
  PowerCircuit pc;
  std::map<std::string, Marking> marks;
};

inline constexpr unsigned kMaxFileId = 1u << 24;

// Throws ParseError (with line) for syntax, ValidationError for labels
// outside D, unknown or duplicate ids, multi-edges and cycles.
CircuitFile parse_circuit(std::string_view text);
std::string serialize_circuit(const PowerCircuit& pc, const std::map<std::string, Marking>& marks);

// Whitespace-separated a<i>, a<i>^<e>, A<i>; 1 <= i <= f, e != 0.
std::vector<HigLetter> parse_word(std::string_view text, int f);
std::string format_word(const std::vector<HigLetter>& w);

// a, b, A, B with optional ^<e>; a1, a2 are accepted for a, b.
std::vector<BgLetter> parse_bg_word(std::string_view text);
std::string format_bg_word(const std::vector<BgLetter>& w);

}  // namespace pc
