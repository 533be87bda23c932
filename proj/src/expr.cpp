#include "uqring/expr.hpp"

#include <cctype>
#include <fstream>

#include <json.hpp>

#include "uqring/errors.hpp"

namespace uqring {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RingExpr ring() {
    skip();
    RingExpr e;
    if (peek() == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')' && !std::isspace(uchar(s_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected a file path after '@'");
      e.head = "@";
      e.word = s_.substr(start, pos_ - start);
      return e;
    }
    const std::size_t at = pos_;
    e.head = identifier();
    if (e.head == "F2") return e;
    expect('(');
    if (e.head == "Zmod") {
      e.ints.push_back(integer());
    } else if (e.head == "M" || e.head == "T" || e.head == "C" || e.head == "U") {
      e.ints.push_back(integer());
      expect(',');
      e.rings.push_back(ring());
    } else if (e.head == "A" || e.head == "B" || e.head == "S" || e.head == "Tnm") {
      e.ints.push_back(integer());
      expect(',');
      e.ints.push_back(integer());
      expect(',');
      e.rings.push_back(ring());
    } else if (e.head == "product") {
      e.rings.push_back(ring());
      while (accept(',')) e.rings.push_back(ring());
    } else if (e.head == "trivext") {
      e.rings.push_back(ring());
    } else if (e.head == "polyq" || e.head == "corner") {
      e.rings.push_back(ring());
      expect(',');
      e.ints.push_back(integer());
    } else if (e.head == "groupring") {
      e.rings.push_back(ring());
      expect(',');
      e.groups.push_back(group());
    } else if (e.head == "quot") {
      e.rings.push_back(ring());
      expect(',');
      skip();
      const std::size_t word_at = pos_;
      if (identifier() != "ideal") throw ParseError(word_at, "expected 'ideal'");
      expect('(');
      e.ints.push_back(integer());
      while (accept(',')) e.ints.push_back(integer());
      expect(')');
    } else if (e.head == "formal") {
      e.rings.push_back(ring());
      expect(',');
      e.rings.push_back(ring());
      expect(',');
      skip();
      const std::size_t word_at = pos_;
      e.word = identifier();
      if (e.word != "regular" && e.word != "zero") throw ParseError(word_at, "expected 'regular' or 'zero'");
    } else {
      throw ParseError(at, "unknown ring constructor '" + e.head + "'");
    }
    expect(')');
    return e;
  }

  GroupExpr group() {
    skip();
    const std::size_t at = pos_;
    GroupExpr g;
    g.head = identifier();
    if (g.head == "D4" || g.head == "Q8") return g;
    if (g.head == "C") {
      expect('(');
      g.order = integer();
      expect(')');
    } else if (g.head == "prod") {
      expect('(');
      g.parts.push_back(group());
      expect(',');
      g.parts.push_back(group());
      expect(')');
    } else {
      throw ParseError(at, "unknown group constructor '" + g.head + "'");
    }
    return g;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

 private:
  static unsigned char uchar(char c) { return static_cast<unsigned char>(c); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(uchar(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(pos_, why); }

  void expect(char c) {
    skip();
    if (peek() != c) {
      if (pos_ == s_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(uchar(s_[pos_]))) ++pos_;
    if (pos_ == start || std::isdigit(uchar(s_[start]))) {
      pos_ = start;
      fail("expected a constructor name");
    }
    return s_.substr(start, pos_ - start);
  }

  std::size_t integer() {
    skip();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < s_.size() && std::isdigit(uchar(s_[pos_]))) {
      if (value > 100000000) throw ParseError(start, "integer too large");
      value = value * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string join_ints(const std::vector<std::size_t>& v, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i) out += (i > from ? ", " : "") + std::to_string(v[i]);
  return out;
}

std::vector<Index> json_table(const nlohmann::json& j, const char* key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != n)
    throw ImportError(std::string("'") + key + "' must be a " + std::to_string(n) + "x" + std::to_string(n) + " array");
  std::vector<Index> out;
  out.reserve(n * n);
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != n) throw ImportError(std::string("bad row in '") + key + "'");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n)
        throw ImportError(std::string("entry out of range in '") + key + "'");
      out.push_back(static_cast<Index>(v.get<std::size_t>()));
    }
  }
  return out;
}

}  // namespace

RingExpr parse_ring(const std::string& text) {
  Parser p(text);
  RingExpr e = p.ring();
  p.finish();
  return e;
}

GroupExpr parse_group(const std::string& text) {
  Parser p(text);
  GroupExpr g = p.group();
  p.finish();
  return g;
}

std::string print(const GroupExpr& g) {
  if (g.head == "C") return "C(" + std::to_string(g.order) + ")";
  if (g.head == "prod") return "prod(" + print(g.parts[0]) + ", " + print(g.parts[1]) + ")";
  return g.head;
}

std::string print(const RingExpr& e) {
  const std::string& h = e.head;
  if (h == "F2") return h;
  if (h == "@") return "@" + e.word;
  if (h == "Zmod") return "Zmod(" + std::to_string(e.ints[0]) + ")";
  if (h == "product") {
    std::string out = "product(";
    for (std::size_t i = 0; i < e.rings.size(); ++i) out += (i ? ", " : "") + print(e.rings[i]);
    return out + ")";
  }
  if (h == "trivext") return "trivext(" + print(e.rings[0]) + ")";
  if (h == "polyq" || h == "corner") return h + "(" + print(e.rings[0]) + ", " + std::to_string(e.ints[0]) + ")";
  if (h == "groupring") return "groupring(" + print(e.rings[0]) + ", " + print(e.groups[0]) + ")";
  if (h == "quot") return "quot(" + print(e.rings[0]) + ", ideal(" + join_ints(e.ints, 0) + "))";
  if (h == "formal") return "formal(" + print(e.rings[0]) + ", " + print(e.rings[1]) + ", " + e.word + ")";
  return h + "(" + join_ints(e.ints, 0) + ", " + print(e.rings[0]) + ")";
}

Group evaluate(const GroupExpr& g) {
  if (g.head == "C") {
    if (g.order == 0) throw InvalidArgument("C(0) is not a group");
    return cyclic(g.order);
  }
  if (g.head == "prod") return group_product(evaluate(g.parts[0]), evaluate(g.parts[1]));
  if (g.head == "D4") return dihedral(4);
  return quaternion8();
}

Ring evaluate(const RingExpr& e, const Caps& caps) {
  const std::string& h = e.head;
  if (h == "F2") return zmod(2, caps);
  if (h == "@") return load_ring_json(e.word, caps);
  if (h == "Zmod") return zmod(e.ints[0], caps);
  std::vector<Ring> rings;
  for (const auto& r : e.rings) rings.push_back(evaluate(r, caps));
  if (h == "M") return matrix_ring(e.ints[0], rings[0], caps);
  if (h == "T") return upper_triangular(e.ints[0], rings[0], caps);
  if (h == "product") return product(rings, caps);
  if (h == "trivext") return trivial_extension(rings[0], caps);
  if (h == "polyq") return poly_quotient(rings[0], e.ints[0], caps);
  if (h == "groupring") return group_ring(rings[0], evaluate(e.groups[0]), caps);
  if (h == "corner") {
    if (e.ints[0] >= rings[0]->size())
      throw InvalidArgument("idempotent index " + std::to_string(e.ints[0]) + " out of range");
    return corner(rings[0], static_cast<Index>(e.ints[0]), caps).ring;
  }
  if (h == "quot") {
    Subset seeds(rings[0]->size());
    for (std::size_t g : e.ints) {
      if (g >= rings[0]->size()) throw InvalidArgument("ideal generator " + std::to_string(g) + " out of range");
      seeds.insert(static_cast<Index>(g));
    }
    return quotient_ring(rings[0], ideal_generated(*rings[0], seeds), caps);
  }
  if (h == "formal") {
    auto module = e.word == "regular" ? Bimodule::regular(rings[0]) : Bimodule::zero(rings[0], rings[1]);
    if (e.word == "regular" && rings[0]->label() != rings[1]->label())
      throw InvalidArgument("the regular bimodule needs equal rings");
    return formal_triangular(rings[0], rings[1], module, caps);
  }
  if (h == "A") return a_ring(e.ints[0], e.ints[1], rings[0], caps);
  if (h == "B") return b_ring(e.ints[0], e.ints[1], rings[0], caps);
  if (h == "C") return c_ring(e.ints[0], rings[0], caps);
  if (h == "S") return s_ring(e.ints[0], e.ints[1], rings[0], caps);
  if (h == "Tnm") return t_ring(e.ints[0], e.ints[1], rings[0], caps);
  return u_ring(e.ints[0], rings[0], caps);
}

Ring evaluate(const std::string& text, const Caps& caps) { return evaluate(parse_ring(text), caps); }

Ring load_ring_json(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw ImportError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ImportError("'" + path + "': " + ex.what());
  }
  for (const char* key : {"size", "zero", "one"})
    if (!j.contains(key) || !j[key].is_number_unsigned()) throw ImportError(std::string("missing integer '") + key + "'");
  const std::size_t n = j["size"].get<std::size_t>();
  if (n == 0 || n > caps.table) throw SizeCapExceeded(n, caps.table);
  const std::size_t zero = j["zero"].get<std::size_t>(), one = j["one"].get<std::size_t>();
  if (zero >= n || one >= n) throw ImportError("'zero' and 'one' must be elements");
  return make_ring(n, json_table(j, "add", n), json_table(j, "mul", n), static_cast<Index>(zero),
                   static_cast<Index>(one), "@" + path, caps);
}

}  // namespace uqring
