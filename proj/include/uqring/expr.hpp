#pragma once

#include <string>
#include <vector>

#include "uqring/constructions.hpp"

namespace uqring {

/// group := "C(" int ")" | "prod(" group "," group ")" | "D4" | "Q8"
struct GroupExpr {
  std::string head;  // "C", "prod", "D4", "Q8"
  std::size_t order = 0;
  std::vector<GroupExpr> parts;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

/// ring := "Zmod(" int ")" | "F2" | "M(" int "," ring ")" | "T(" int "," ring ")"
///       | "product(" ring {"," ring} ")" | "trivext(" ring ")"
///       | "polyq(" ring "," int ")" | "groupring(" ring "," group ")"
///       | "corner(" ring "," int ")" | "quot(" ring "," "ideal(" int {"," int} ")" ")"
///       | "A(" int "," int "," ring ")" | "B(" int "," int "," ring ")"
///       | "C(" int "," ring ")" | "S(" int "," int "," ring ")"
///       | "Tnm(" int "," int "," ring ")" | "U(" int "," ring ")"
///       | "formal(" ring "," ring "," ("regular" | "zero") ")"
///       | "@" path                      (JSON table file)
struct RingExpr {
  std::string head;
  std::vector<std::size_t> ints;  // integer arguments in source order
  std::vector<RingExpr> rings;
  std::vector<GroupExpr> groups;
  std::string word;  // formal: bimodule name; "@": file path

  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

/// Throws ParseError with the offending position.
RingExpr parse_ring(const std::string& text);
GroupExpr parse_group(const std::string& text);

/// Canonical text; parse_ring(print(e)) == e.
std::string print(const RingExpr& e);
std::string print(const GroupExpr& e);

Group evaluate(const GroupExpr& e);
Ring evaluate(const RingExpr& e, const Caps& caps = {});
Ring evaluate(const std::string& text, const Caps& caps = {});

/// {size, add: [[...]], mul: [[...]], zero, one}; throws ImportError.
Ring load_ring_json(const std::string& path, const Caps& caps = {});

}  // namespace uqring
