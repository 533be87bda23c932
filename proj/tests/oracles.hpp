#pragma once

#include <vector>

#include "uqring/constructions.hpp"

namespace oracle {

using uqring::FiniteRing;
using uqring::Index;
using uqring::Subset;

/// a is a unit iff some b has ab = ba = 1.
inline Subset units(const FiniteRing& r) {
  Subset out(r.size());
  for (Index a = 0; a < r.size(); ++a)
    for (Index b = 0; b < r.size(); ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        out.insert(a);
        break;
      }
  return out;
}

inline Subset nilpotents(const FiniteRing& r) {
  Subset out(r.size());
  for (Index a = 0; a < r.size(); ++a) {
    Index p = a;
    for (std::size_t k = 0; k <= r.size() && p != r.zero(); ++k) p = r.mul(p, a);
    if (p == r.zero()) out.insert(a);
  }
  return out;
}

inline Subset quasinilpotents(const FiniteRing& r) {
  const Subset u = units(r);
  Subset out(r.size());
  for (Index a = 0; a < r.size(); ++a) {
    bool in = true;
    for (Index x = 0; x < r.size() && in; ++x)
      if (r.mul(a, x) == r.mul(x, a)) in = u.contains(r.sub(r.one(), r.mul(a, x)));
    if (in) out.insert(a);
  }
  return out;
}

/// Right quasi-regularity: 1 - ar is a unit for every r.
inline Subset jacobson(const FiniteRing& r) {
  const Subset u = units(r);
  Subset out(r.size());
  for (Index a = 0; a < r.size(); ++a) {
    bool in = true;
    for (Index x = 0; x < r.size() && in; ++x) in = u.contains(r.sub(r.one(), r.mul(a, x)));
    if (in) out.insert(a);
  }
  return out;
}

/// The element of a matrix-pattern ring with the given row-major entries.
inline Index matrix(const FiniteRing& r, const std::vector<Index>& entries) {
  const std::size_t d = uqring::matrix_dimension(r);
  for (Index a = 0; a < r.size(); ++a) {
    bool match = true;
    for (std::size_t i = 0; i < d && match; ++i)
      for (std::size_t j = 0; j < d && match; ++j) match = uqring::matrix_entry(r, a, i, j) == entries[i * d + j];
    if (match) return a;
  }
  return static_cast<Index>(r.size());
}

}  // namespace oracle
