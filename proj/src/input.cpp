#include "versal/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "versal/errors.hpp"

namespace versal {

namespace {

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
  std::size_t indent;
};

// Cursor over one line with column tracking for error reports.
class LineScanner {
 public:
  LineScanner(const Line& line, std::size_t start) : line_(line), pos_(start) {}

  void skipSpace() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_])))
      ++pos_;
  }
  bool done() {
    skipSpace();
    return pos_ >= line_.text.size();
  }
  char peek() {
    skipSpace();
    return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t column() const { return pos_ + 1; }

  std::string identifier() {
    skipSpace();
    if (pos_ >= line_.text.size() || !isIdentStart(line_.text[pos_])) fail("expected a variable name");
    std::size_t start = pos_;
    while (pos_ < line_.text.size() && isIdentChar(line_.text[pos_])) ++pos_;
    return line_.text.substr(start, pos_ - start);
  }

  int integer() {
    skipSpace();
    std::size_t start = pos_;
    if (pos_ < line_.text.size() && (line_.text[pos_] == '-' || line_.text[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < line_.text.size() && std::isdigit(static_cast<unsigned char>(line_.text[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 6) {
      pos_ = start;
      fail("degree out of range");
    }
    return std::stoi(line_.text.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_.number, pos_ + 1);
  }

 private:
  const Line& line_;
  std::size_t pos_;
};

std::vector<Line> splitLines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t indent = 0;
    while (indent < raw.size() && (raw[indent] == ' ' || raw[indent] == '\t')) ++indent;
    if (indent == raw.size()) continue;
    out.push_back({number, raw, indent});
  }
  return out;
}

}  // namespace

InputSystem parseInput(const std::string& text) {
  std::vector<Line> lines = splitLines(text);
  std::vector<std::string> vars;
  std::vector<Degree> degrees;
  bool haveRing = false, haveVars = false, haveDegrees = false;
  std::size_t varsLine = 0;
  std::size_t i = 0;
  InputSystem sys;

  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.indent != 0)
      throw ParseError("unexpected indented line", line.number, line.indent + 1);
    auto colon = line.text.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key:'", line.number, 1);
    std::string key = line.text.substr(0, colon);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    LineScanner sc(line, colon + 1);

    if (key == "ring") {
      if (haveRing) throw ParseError("duplicate 'ring:'", line.number, 1);
      std::size_t col = (sc.skipSpace(), sc.column());
      std::string name = sc.identifier();
      if (name != "QQ") throw ParseError("only the coefficient ring QQ is supported", line.number, col);
      if (!sc.done()) sc.fail("unexpected text after ring name");
      haveRing = true;
    } else if (key == "vars") {
      if (haveVars) throw ParseError("duplicate 'vars:'", line.number, 1);
      while (!sc.done()) {
        std::size_t col = sc.column();
        std::string v = sc.identifier();
        for (const auto& w : vars)
          if (w == v) throw ParseError("duplicate variable '" + v + "'", line.number, col);
        vars.push_back(v);
        if (sc.peek() == ',') sc.expect(',');
      }
      if (vars.empty()) sc.fail("expected at least one variable");
      haveVars = true;
      varsLine = line.number;
    } else if (key == "degrees") {
      if (haveDegrees) throw ParseError("duplicate 'degrees:'", line.number, 1);
      while (!sc.done()) {
        std::size_t col = sc.column();
        Degree d;
        if (sc.peek() == '(') {
          sc.expect('(');
          d.push_back(sc.integer());
          while (sc.peek() == ',') {
            sc.expect(',');
            d.push_back(sc.integer());
          }
          sc.expect(')');
        } else {
          d.push_back(sc.integer());
        }
        if (!degrees.empty() && degrees.front().size() != d.size())
          throw ParseError("degree has " + std::to_string(d.size()) + " components, expected " +
                               std::to_string(degrees.front().size()),
                           line.number, col);
        degrees.push_back(std::move(d));
        if (sc.peek() == ',') sc.expect(',');
      }
      haveDegrees = true;
      if (haveVars && degrees.size() != vars.size())
        throw ParseError("expected " + std::to_string(vars.size()) + " degrees, found " +
                             std::to_string(degrees.size()),
                         line.number, colon + 2);
    } else if (key == "generators") {
      if (!sc.done()) sc.fail("generators go on the following indented lines");
      ++i;
      break;
    } else {
      throw ParseError("unknown key '" + key + "'", line.number, 1);
    }
  }

  std::size_t endLine = lines.empty() ? 1 : lines.back().number;
  if (!haveRing) throw ParseError("missing 'ring:' line", endLine, 1);
  if (!haveVars) throw ParseError("missing 'vars:' line", endLine, 1);
  if (haveDegrees && degrees.size() != vars.size())
    throw ParseError("expected " + std::to_string(vars.size()) + " degrees, found " +
                         std::to_string(degrees.size()),
                     varsLine, 1);
  if (!haveDegrees) degrees.assign(vars.size(), Degree{1});
  try {
    sys.ring = Ring::create(vars, degrees);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), varsLine, 1);
  }
  sys.declaredDegrees = haveDegrees;

  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.indent == 0)
      throw ParseError("generator lines must be indented", line.number, 1);
    Polynomial p(sys.ring);
    try {
      p = parseExpr(std::string_view(line.text).substr(line.indent), sys.ring, line.number);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at line "));
      throw ParseError(msg, line.number, e.column() + line.indent);
    }
    if (p.isZero()) throw ParseError("generator is zero", line.number, line.indent + 1);
    if (haveDegrees && !p.isHomogeneous())
      throw ParseError("generator is not homogeneous for the declared degrees", line.number,
                       line.indent + 1);
    sys.generators.push_back(std::move(p));
  }
  if (sys.generators.empty()) throw ParseError("no generators given", endLine, 1);
  return sys;
}

InputSystem loadInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseInput(buf.str());
}

}  // namespace versal
