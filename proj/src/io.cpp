#include "maxatom/io.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace maxatom {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_index(const Line& line, const std::string& tok, int nvars) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, "bad variable index '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line.number, "bad variable index '" + tok + "'");
  if (value < 1 || value > nvars)
    throw ParseError(line.number, "variable index " + tok + " outside 1.." + std::to_string(nvars));
  return value;
}

}  // namespace

AtomSystem parse_instance(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  std::size_t pos = 0;
  if (pos >= lines.size() || lines[pos].tokens != std::vector<std::string>{"maxatom", "1"})
    throw ParseError(pos < lines.size() ? lines[pos].number : 1, "expected header 'maxatom 1'");
  ++pos;
  if (pos >= lines.size() || lines[pos].tokens.size() != 2 || lines[pos].tokens[0] != "vars")
    throw ParseError(pos < lines.size() ? lines[pos].number : 2, "expected 'vars <n>'");
  int nvars = 0;
  try {
    nvars = std::stoi(lines[pos].tokens[1]);
  } catch (const std::exception&) {
    throw ParseError(lines[pos].number, "bad variable count '" + lines[pos].tokens[1] + "'");
  }
  if (nvars < 1) throw ParseError(lines[pos].number, "variable count must be at least 1");
  ++pos;

  AtomSystem system(nvars);
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    if (line.tokens[0] != "atom")
      throw ParseError(line.number, "expected 'atom <i> <j> <k> <r>', got '" + line.tokens[0] + "'");
    if (line.tokens.size() != 5) throw ParseError(line.number, "atom line needs exactly 4 fields");
    const int i = parse_index(line, line.tokens[1], nvars);
    const int j = parse_index(line, line.tokens[2], nvars);
    const int k = parse_index(line, line.tokens[3], nvars);
    const std::optional<Rat> r = Rat::parse(line.tokens[4]);
    if (!r) throw ParseError(line.number, "bad offset '" + line.tokens[4] + "'");
    system.add(MaxAtom(VarId(i), VarId(j), VarId(k), *r));
  }
  return system;
}

std::string emit_instance(const AtomSystem& system) {
  std::ostringstream out;
  out << "maxatom 1\n";
  out << "vars " << system.nvars() << "\n";
  for (const MaxAtom& a : system.atoms())
    out << "atom " << a.left1.index << " " << a.left2.index << " " << a.right.index << " " << a.offset.str() << "\n";
  return out.str();
}

Assignment parse_solution(const std::string& text, int nvars) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "status")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'status sat' or 'status trivial'");
  const std::string& status = lines[0].tokens[1];
  if (status == "trivial") return Assignment(nvars);
  if (status != "sat") throw ParseError(lines[0].number, "unknown status '" + status + "'");

  Assignment a(nvars);
  std::vector<char> seen(static_cast<std::size_t>(nvars) + 1, 0);
  for (std::size_t pos = 1; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    if (line.tokens.size() != 2 || line.tokens[0].size() < 2 || line.tokens[0][0] != 'x')
      throw ParseError(line.number, "expected 'x<i> <value>'");
    const int idx = parse_index(line, line.tokens[0].substr(1), nvars);
    if (seen[static_cast<std::size_t>(idx)]) throw ParseError(line.number, "duplicate value for x" + std::to_string(idx));
    seen[static_cast<std::size_t>(idx)] = 1;
    if (line.tokens[1] == "-inf") continue;  // already -inf
    const std::optional<Rat> r = Rat::parse(line.tokens[1]);
    if (!r) throw ParseError(line.number, "bad value '" + line.tokens[1] + "'");
    a[VarId(idx)] = ExtValue::finite(*r);
  }
  for (int i = 1; i <= nvars; ++i)
    if (!seen[static_cast<std::size_t>(i)]) throw ParseError(static_cast<int>(lines.size()), "missing value for x" + std::to_string(i));
  return a;
}

std::string emit_solution(bool sat, const Assignment& a) {
  std::ostringstream out;
  if (!sat) {
    out << "status trivial\n";
    return out.str();
  }
  out << "status sat\n";
  for (int i = 1; i <= a.size(); ++i) out << "x" << i << " " << a[VarId(i)].str() << "\n";
  return out.str();
}

}  // namespace maxatom
