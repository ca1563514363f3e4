#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pc/error.hpp"

namespace tool {

// 0 answer computed, 2 bad input, 3 not a power circuit / overflow.
enum Exit { kOk = 0, kInternal = 1, kInput = 2, kValue = 3 };

inline std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pc::Error(pc::ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline int exit_code(pc::ErrorCode c) {
  switch (c) {
    case pc::ErrorCode::NotAPowerCircuit:
    case pc::ErrorCode::Overflow:
      return kValue;
    case pc::ErrorCode::ParseError:
    case pc::ErrorCode::ValidationError:
    case pc::ErrorCode::MalformedWord:
    case pc::ErrorCode::InvalidBase:
    case pc::ErrorCode::UnknownNode:
      return kInput;
    default:
      return kInternal;
  }
}

template <class F>
int run(CLI::App& app, int argc, char** argv, F&& body) {
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }
  try {
    return body();
  } catch (const pc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace tool
