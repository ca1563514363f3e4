// wp: word problems in the generalized Higman groups and the Baumslag-Gersten group.

#include <iostream>

#include "common.hpp"
#include "pc/bg.hpp"
#include "pc/higman.hpp"
#include "pc/io.hpp"

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem solvers"};
  app.require_subcommand(1);

  int q = 2, f = 4;
  bool simple = false;
  std::string file;
  std::vector<std::string> word;

  auto* hig = app.add_subcommand("higman", "Is WORD trivial in H_f(1,q)?");
  hig->add_option("-q", q, "base")->required();
  hig->add_option("-f", f, "number of generators")->required();

  auto* bg = app.add_subcommand("bg", "Is WORD trivial in the Baumslag-Gersten group over BS(1,q)?");
  bg->add_option("-q", q, "base")->required();

  for (auto* sub : {hig, bg}) {
    sub->add_option("WORD", word, "letters; read from --file or stdin when absent");
    sub->add_option("--file", file, "read the word from a file, - for stdin");
    sub->add_flag("--simple", simple, "use plain reduced circuits instead of treed ones");
  }

  return tool::run(app, argc, argv, [&]() -> int {
    const std::string text = !word.empty() ? join(word) : tool::read_input(file.empty() ? "-" : file);
    const auto mode = simple ? pc::Mode::Simple : pc::Mode::Treed;
    bool trivial;
    if (*hig) {
      if (f < 4) throw pc::Error(pc::ErrorCode::MalformedWord, "f must be at least 4");
      trivial = pc::higman_trivial(pc::parse_word(text, f), q, f, mode);
    } else {
      trivial = pc::bg_trivial(pc::parse_bg_word(text), q, mode);
    }
    std::cout << (trivial ? "trivial" : "nontrivial") << '\n';
    return tool::kOk;
  });
}
