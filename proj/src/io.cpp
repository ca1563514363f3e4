#include "pc/io.hpp"

#include <charconv>
#include <sstream>

#include "pc/error.hpp"

namespace pc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool to_int(std::string_view s, T& out) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

[[noreturn]] void invalid(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ValidationError, "line " + std::to_string(line) + ": " + what);
}

struct EdgeRec {
  std::size_t line;
  unsigned src, dst;
  long long label;
};

struct MarkRec {
  std::size_t line;
  std::string name;
  std::vector<std::pair<unsigned, long long>> digits;
};

unsigned parse_id(std::string_view s, std::size_t line) {
  unsigned id = 0;
  if (!to_int(s, id)) throw ParseError(line, "bad node id '" + std::string(s) + "'");
  if (id >= kMaxFileId) throw ParseError(line, "node id too large");
  return id;
}

}  // namespace

CircuitFile parse_circuit(std::string_view text) {
  std::size_t lineno = 0;
  bool header = false;
  int q = 0;
  std::vector<std::pair<unsigned, std::size_t>> nodes;
  std::vector<EdgeRec> edges;
  std::vector<MarkRec> marks;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    const auto& kw = tok[0];
    if (!header) {
      if (kw != "pcq") throw ParseError(lineno, "expected 'pcq 1' header");
      if (tok.size() != 2 || tok[1] != "1") throw ParseError(lineno, "unsupported format version");
      header = true;
    } else if (kw == "q") {
      if (q) throw ParseError(lineno, "duplicate q record");
      if (tok.size() != 2 || !to_int(tok[1], q)) throw ParseError(lineno, "expected 'q <base>'");
      if (q < 2) invalid(lineno, "base must be at least 2");
    } else if (!q) {
      throw ParseError(lineno, "'q' record must precede '" + std::string(kw) + "'");
    } else if (kw == "node") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'node <id>'");
      nodes.emplace_back(parse_id(tok[1], lineno), lineno);
    } else if (kw == "edge") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <src> <dst> <label>'");
      EdgeRec e{lineno, parse_id(tok[1], lineno), parse_id(tok[2], lineno), 0};
      if (!to_int(tok[3], e.label)) throw ParseError(lineno, "bad label '" + std::string(tok[3]) + "'");
      edges.push_back(e);
    } else if (kw == "mark") {
      if (tok.size() < 2) throw ParseError(lineno, "expected 'mark <name> <id>:<digit> ...'");
      MarkRec m{lineno, std::string(tok[1]), {}};
      for (std::size_t i = 2; i < tok.size(); ++i) {
        const auto c = tok[i].find(':');
        if (c == std::string_view::npos) throw ParseError(lineno, "expected <id>:<digit>, got '" + std::string(tok[i]) + "'");
        long long d = 0;
        if (!to_int(tok[i].substr(c + 1), d)) throw ParseError(lineno, "bad digit in '" + std::string(tok[i]) + "'");
        m.digits.emplace_back(parse_id(tok[i].substr(0, c), lineno), d);
      }
      marks.push_back(std::move(m));
    } else {
      throw ParseError(lineno, "unknown record '" + std::string(kw) + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing 'pcq 1' header");
  if (!q) throw ParseError(lineno, "missing 'q' record");

  CircuitFile f{PowerCircuit(q), {}};
  std::vector<char> declared;
  for (auto [id, line] : nodes) {
    if (id >= declared.size()) declared.resize(id + 1, 0);
    if (declared[id]) invalid(line, "duplicate node " + std::to_string(id));
    declared[id] = 1;
  }
  for (std::size_t i = 0; i < declared.size(); ++i) f.pc.add_node();
  for (std::size_t i = 0; i < declared.size(); ++i)
    if (!declared[i]) f.pc.remove_node(NodeId(static_cast<std::uint32_t>(i)));

  auto known = [&](unsigned id, std::size_t line) {
    if (id >= declared.size() || !declared[id]) invalid(line, "unknown node " + std::to_string(id));
    return NodeId(id);
  };
  auto digit = [&](long long d, std::size_t line) {
    if (d == 0 || d <= -q || d >= q) invalid(line, "digit " + std::to_string(d) + " outside D\\{0}");
    return static_cast<int>(d);
  };

  for (const auto& e : edges) {
    const NodeId s = known(e.src, e.line), d = known(e.dst, e.line);
    const int l = digit(e.label, e.line);
    if (f.pc.successors(s).contains(d)) invalid(e.line, "multi-edge " + std::to_string(e.src) + " -> " + std::to_string(e.dst));
    f.pc.set_edge(s, d, l);
  }
  if (!f.pc.is_acyclic()) throw Error(ErrorCode::ValidationError, "graph has a cycle");

  for (const auto& m : marks) {
    if (f.marks.count(m.name)) invalid(m.line, "duplicate marking '" + m.name + "'");
    Marking mk(f.pc.id());
    for (auto [id, d] : m.digits) {
      const NodeId u = known(id, m.line);
      if (mk.contains(u)) invalid(m.line, "node " + std::to_string(id) + " marked twice");
      mk.set(u, digit(d, m.line));
    }
    f.marks.emplace(m.name, std::move(mk));
  }
  return f;
}

std::string serialize_circuit(const PowerCircuit& pc, const std::map<std::string, Marking>& marks) {
  std::ostringstream os;
  os << "pcq 1\nq " << pc.base() << '\n';
  const auto ns = pc.nodes();
  for (NodeId u : ns) os << "node " << index_of(u) << '\n';
  for (NodeId u : ns)
    for (const auto& e : pc.successors(u)) os << "edge " << index_of(u) << ' ' << index_of(e.node) << ' ' << e.digit << '\n';
  for (const auto& [name, m] : marks) {
    pc.check_marking(m);
    os << "mark " << name;
    for (const auto& e : m) os << ' ' << index_of(e.node) << ':' << e.digit;
    os << '\n';
  }
  return os.str();
}

std::vector<HigLetter> parse_word(std::string_view text, int f) {
  std::vector<HigLetter> w;
  for (auto tok : split_ws(text)) {
    const std::string t(tok);
    auto bad = [&](const std::string& why) -> ParseError { return ParseError(0, why + " in '" + t + "'"); };
    if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A')) throw bad("expected a<i> or A<i>");
    const bool inv = tok[0] == 'A';
    tok.remove_prefix(1);
    const auto caret = tok.find('^');
    HigLetter l;
    if (caret != std::string_view::npos) {
      if (inv) throw bad("A<i> takes no exponent");
      if (!to_int(tok.substr(caret + 1), l.exp)) throw bad("bad exponent");
      if (l.exp == 0) throw bad("zero exponent");
      tok = tok.substr(0, caret);
    } else {
      l.exp = inv ? -1 : 1;
    }
    if (!to_int(tok, l.gen) || tok[0] == '+') throw bad("bad index");
    if (l.gen < 1 || l.gen > f) throw bad("index outside 1.." + std::to_string(f));
    w.push_back(l);
  }
  return w;
}

std::string format_word(const std::vector<HigLetter>& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    if (l.exp == -1)
      s += "A" + std::to_string(l.gen);
    else if (l.exp == 1)
      s += "a" + std::to_string(l.gen);
    else
      s += "a" + std::to_string(l.gen) + "^" + std::to_string(l.exp);
  }
  return s;
}

std::vector<BgLetter> parse_bg_word(std::string_view text) {
  std::vector<BgLetter> w;
  for (auto tok : split_ws(text)) {
    const std::string t(tok);
    auto bad = [&](const std::string& why) -> ParseError { return ParseError(0, why + " in '" + t + "'"); };
    const auto caret = tok.find('^');
    std::string_view head = tok.substr(0, caret);
    BgLetter l;
    bool inv = false;
    if (head == "a" || head == "a1") {
      l.gen = 0;
    } else if (head == "b" || head == "a2") {
      l.gen = 1;
    } else if (head == "A" || head == "A1") {
      l.gen = 0, inv = true;
    } else if (head == "B" || head == "A2") {
      l.gen = 1, inv = true;
    } else {
      throw bad("expected a, b, A or B");
    }
    l.exp = inv ? -1 : 1;
    if (caret != std::string_view::npos) {
      if (inv) throw bad("inverse letters take no exponent");
      if (!to_int(tok.substr(caret + 1), l.exp)) throw bad("bad exponent");
      if (l.exp == 0) throw bad("zero exponent");
    }
    w.push_back(l);
  }
  return w;
}

std::string format_bg_word(const std::vector<BgLetter>& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    const char c = l.gen == 0 ? 'a' : 'b';
    if (l.exp == -1)
      s += static_cast<char>(c - 'a' + 'A');
    else if (l.exp == 1)
      s += c;
    else
      s += std::string(1, c) + "^" + std::to_string(l.exp);
  }
  return s;
}

}  // namespace pc
