#include "collatz/map_model.hpp"

#include <cctype>
#include <sstream>

namespace collatz {

namespace {

BranchMap make_builtin(const Branch& even, const Branch& odd) {
  BranchMap m;
  m.modulus = 2;
  m.branches = {even, odd};
  return m;
}

}  // namespace

const BranchMap& collatz_t() {
  static const BranchMap m = make_builtin({1, 0, 2}, {3, 1, 2});
  return m;
}

const BranchMap& collatz_s() {
  static const BranchMap m = make_builtin({1, 0, 2}, {3, 1, 1});
  return m;
}

const BranchMap& collatz_3nm1() {
  static const BranchMap m = make_builtin({1, 0, 2}, {3, -1, 2});
  return m;
}

std::vector<MapViolation> validate(const BranchMap& map) {
  std::vector<MapViolation> out;
  if (map.modulus < 2) {
    out.push_back({0, "modulus must be >= 2"});
    return out;
  }
  if (map.branches.size() != map.modulus) {
    out.push_back({0, "branch table must cover every residue exactly once"});
    return out;
  }
  for (unsigned long r = 0; r < map.modulus; ++r) {
    const Branch& br = map.branches[r];
    if (br.a < 0) out.push_back({r, "slope a must be >= 0"});
    if (br.d < 1) out.push_back({r, "divisor d must be >= 1"});
    if (br.a < 0 || br.d < 1) continue;
    // well-definedness on the whole class: d | a*r + b and d | a*m
    if ((br.a * long(r) + br.b) % br.d != 0)
      out.push_back({r, "a*r + b not divisible by d"});
    if ((br.a * long(map.modulus)) % br.d != 0)
      out.push_back({r, "a*m not divisible by d"});
    // image positivity at the smallest class member (monotone in n for a >= 0)
    Int n0 = (r == 0) ? Int(long(map.modulus)) : Int(long(r));
    if (br.a == 0) {
      if (br.b < br.d) out.push_back({r, "constant branch value below 1"});
    } else if (br.a * n0 + br.b < br.d) {
      out.push_back({r, "branch maps smallest class member below 1"});
    }
  }
  return out;
}

namespace {

// Minimal cursor-based tokenizer with line/column tracking.
struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw MapSpecError(what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col),
                       line, col);
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
    if (pos == start) fail("expected integer");
    return Int(text.substr(start, pos - start));
  }
  void keyword(const std::string& kw) {
    skip_ws();
    if (text.compare(pos, kw.size(), kw) != 0) fail("expected '" + kw + "'");
    for (size_t i = 0; i < kw.size(); ++i) advance();
  }
};

}  // namespace

BranchMap parse_mapspec(const std::string& text) {
  Cursor cur{text};
  cur.keyword("mod");
  Int modulus = cur.integer();
  if (modulus < 2 || modulus > 1000000)
    cur.fail("modulus out of range [2, 10^6]");
  unsigned long m = modulus.get_ui();

  BranchMap map;
  map.modulus = m;
  map.branches.resize(m);
  std::vector<bool> seen(m, false);

  cur.expect('{');
  while (true) {
    if (cur.peek_is('}')) break;
    Int residue = cur.integer();
    if (residue >= modulus) cur.fail("residue exceeds modulus");
    unsigned long r = residue.get_ui();
    if (seen[r]) cur.fail("residue " + std::to_string(r) + " appears twice");
    seen[r] = true;
    cur.expect(':');
    cur.expect('(');
    Branch br;
    br.a = cur.integer();
    cur.keyword("n");
    cur.skip_ws();
    if (cur.pos >= text.size() || (text[cur.pos] != '+' && text[cur.pos] != '-'))
      cur.fail("expected '+' or '-'");
    bool neg = text[cur.pos] == '-';
    cur.advance();
    br.b = cur.integer();
    if (neg) br.b = -br.b;
    cur.expect(')');
    cur.expect('/');
    br.d = cur.integer();
    map.branches[r] = br;
    if (cur.peek_is(';')) {
      cur.expect(';');
      continue;
    }
    break;
  }
  cur.expect('}');
  if (!cur.eof()) cur.fail("trailing input after '}'");

  for (unsigned long r = 0; r < m; ++r)
    if (!seen[r])
      throw MapSpecError("missing residue " + std::to_string(r), cur.line, cur.col);

  auto violations = validate(map);
  if (!violations.empty()) {
    std::ostringstream oss;
    oss << "invalid map: residue " << violations.front().residue << ": "
        << violations.front().condition;
    throw MapSpecError(oss.str(), cur.line, cur.col);
  }
  return map;
}

std::string render_mapspec(const BranchMap& map) {
  std::ostringstream oss;
  oss << "mod " << map.modulus << " { ";
  for (unsigned long r = 0; r < map.modulus; ++r) {
    const Branch& br = map.branches[r];
    if (r) oss << "; ";
    oss << r << ": (" << br.a.get_str() << "n";
    oss << (br.b < 0 ? "-" : "+");
    Int abs_b = abs(br.b);
    oss << abs_b.get_str() << ")/" << br.d.get_str();
  }
  oss << " }";
  return oss.str();
}

}  // namespace collatz
