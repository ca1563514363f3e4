// pc: inspect, reduce, evaluate and compare power circuit files.

#include <fstream>
#include <iostream>

#include "common.hpp"
#include "pc/io.hpp"
#include "pc/reduced.hpp"
#include "pc/treed.hpp"

namespace {

using pc::CircuitFile;
using pc::Error;
using pc::ErrorCode;
using pc::Marking;

std::vector<Marking*> mark_ptrs(CircuitFile& f) {
  std::vector<Marking*> out;
  for (auto& [name, m] : f.marks) out.push_back(&m);
  return out;
}

const Marking& find_mark(const CircuitFile& f, const std::string& name) {
  auto it = f.marks.find(name);
  if (it == f.marks.end()) throw Error(ErrorCode::ValidationError, "no marking named '" + name + "'");
  return it->second;
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw Error(ErrorCode::ValidationError, "cannot write '" + out + "'");
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power circuit files"};
  app.require_subcommand(1);

  std::string file, out, m_name, k_name;
  bool treed = false, simple = false;
  std::size_t max_bits = pc::kDefaultMaxBits;

  auto* check = app.add_subcommand("check", "Validate a circuit file");
  check->add_option("FILE", file, "circuit file, - for stdin")->required();

  auto* reduce = app.add_subcommand("reduce", "Reduce a circuit, keeping the values of its markings");
  reduce->add_option("FILE", file)->required();
  reduce->add_option("-o,--output", out, "output file (default stdout)");
  auto* ft = reduce->add_flag("--treed", treed, "compact markings on a treed circuit (default)");
  reduce->add_flag("--simple", simple, "plain reduction")->excludes(ft);

  auto* eval = app.add_subcommand("eval", "Evaluate a marking exactly");
  eval->add_option("FILE", file)->required();
  eval->add_option("MARK", m_name)->required();
  eval->add_option("--max-bits", max_bits, "bit budget for intermediate values")->capture_default_str();

  auto* cmp = app.add_subcommand("cmp", "Compare two markings");
  cmp->add_option("FILE", file)->required();
  cmp->add_option("M", m_name)->required();
  cmp->add_option("K", k_name)->required();

  return tool::run(app, argc, argv, [&]() -> int {
    CircuitFile f = pc::parse_circuit(tool::read_input(file));

    if (*check) {
      if (!pc::is_power_circuit(f.pc)) {
        std::cout << "not-a-power-circuit\n";
        return tool::kValue;
      }
      std::cout << "ok q=" << f.pc.base() << " nodes=" << f.pc.size() << " edges=" << f.pc.edge_count()
                << " marks=" << f.marks.size() << '\n';
      return tool::kOk;
    }

    if (*reduce) {
      auto ptrs = mark_ptrs(f);
      if (simple) {
        auto r = pc::reduce(std::move(f.pc), ptrs);
        write_output(pc::serialize_circuit(r.rc.circuit(), f.marks), out);
      } else {
        pc::TreedCircuit tc(std::move(f.pc));
        tc.extend_tree(tc.unreduced(), ptrs);
        for (auto* m : ptrs) *m = tc.compactify_marking(std::move(*m));
        write_output(pc::serialize_circuit(tc.circuit(), f.marks), out);
      }
      return tool::kOk;
    }

    if (*eval) {
      std::cout << pc::eval_marking(f.pc, find_mark(f, m_name), max_bits).str() << '\n';
      return tool::kOk;
    }

    // cmp
    find_mark(f, m_name), find_mark(f, k_name);
    auto ptrs = mark_ptrs(f);
    auto r = pc::reduce(std::move(f.pc), ptrs);
    const auto c = r.rc.compare(f.marks.at(m_name), f.marks.at(k_name));
    const char* rel = c.order < 0 ? "<" : c.order > 0 ? ">" : "=";
    std::cout << rel << " unit-diff=" << (c.unit_diff ? "true" : "false") << '\n';
    return tool::kOk;
  });
}
