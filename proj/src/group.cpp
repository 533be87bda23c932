#include "uqring/group.hpp"

#include "uqring/errors.hpp"

namespace uqring {

FiniteGroup::FiniteGroup(std::size_t size, std::vector<Index> op, std::string label)
    : size_(size), op_(std::move(op)), label_(std::move(label)) {
  if (size_ == 0) throw GroupViolation("empty group");
  if (op_.size() != size_ * size_) throw GroupViolation("Cayley table must have size*size entries");
  for (Index v : op_)
    if (v >= size_) throw GroupViolation("Cayley table entry out of range");

  bool found = false;
  for (Index e = 0; e < size_ && !found; ++e) {
    bool ok = true;
    for (Index a = 0; a < size_ && ok; ++a) ok = this->op(e, a) == a && this->op(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw GroupViolation("no identity");

  inverse_.assign(size_, 0);
  for (Index a = 0; a < size_; ++a) {
    bool has = false;
    for (Index b = 0; b < size_ && !has; ++b) {
      if (this->op(a, b) == identity_ && this->op(b, a) == identity_) {
        inverse_[a] = b;
        has = true;
      }
    }
    if (!has) throw GroupViolation("element " + std::to_string(a) + " has no inverse");
  }
  for (Index a = 0; a < size_; ++a)
    for (Index b = 0; b < size_; ++b)
      for (Index c = 0; c < size_; ++c)
        if (this->op(this->op(a, b), c) != this->op(a, this->op(b, c)))
          throw GroupViolation("not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                               std::to_string(c) + ")");
}

std::size_t FiniteGroup::order_of(Index a) const {
  std::size_t k = 1;
  for (Index p = a; p != identity_; p = op(p, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < size_; ++a)
    for (Index b = 0; b < size_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

bool FiniteGroup::is_2_group() const { return (size_ & (size_ - 1)) == 0; }

Group cyclic(std::size_t n) {
  if (n == 0) throw GroupViolation("cyclic group order must be positive");
  std::vector<Index> op(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) op[a * n + b] = static_cast<Index>((a + b) % n);
  return std::make_shared<FiniteGroup>(n, std::move(op), "C(" + std::to_string(n) + ")");
}

Group group_product(const Group& g, const Group& h) {
  const std::size_t n = g->size() * h->size();
  std::vector<Index> op(n * n);
  // (a, b) is encoded as a + |G| * b
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Index a = g->op(static_cast<Index>(x % g->size()), static_cast<Index>(y % g->size()));
      const Index b = h->op(static_cast<Index>(x / g->size()), static_cast<Index>(y / g->size()));
      op[x * n + y] = static_cast<Index>(a + g->size() * b);
    }
  }
  return std::make_shared<FiniteGroup>(n, std::move(op), "prod(" + g->label() + ", " + h->label() + ")");
}

Group dihedral(std::size_t n) {
  if (n == 0) throw GroupViolation("dihedral parameter must be positive");
  // r^k is k, s r^k is n + k; (s^i r^a)(s^j r^b) = s^(i+j) r^((-1)^j a + b)
  const std::size_t size = 2 * n;
  std::vector<Index> op(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      const std::size_t i = x / n, a = x % n, j = y / n, b = y % n;
      const std::size_t rot = ((j == 0 ? a : n - a) + b) % n;
      op[x * size + y] = static_cast<Index>(((i + j) % 2) * n + rot);
    }
  }
  std::string label = n == 4 ? "D4" : "dihedral(" + std::to_string(n) + ")";
  return std::make_shared<FiniteGroup>(size, std::move(op), std::move(label));
}

Group quaternion8() {
  // Elements i^a j^b with a in 0..3, b in 0..1, encoded a + 4b; relations
  // i^4 = 1, j^2 = i^2, j i = i^3 j.
  std::vector<Index> op(64);
  for (Index x = 0; x < 8; ++x) {
    for (Index y = 0; y < 8; ++y) {
      const Index a = x % 4, b = x / 4, c = y % 4, d = y / 4;
      // i^a j^b i^c j^d = i^(a + (-1)^b c) j^(b+d), and j^2 = i^2
      Index e = (a + (b ? 4 - c : c)) % 4;
      Index f = b + d;
      if (f == 2) {
        f = 0;
        e = (e + 2) % 4;
      }
      op[x * 8 + y] = e + 4 * f;
    }
  }
  return std::make_shared<FiniteGroup>(8, std::move(op), "Q8");
}

}  // namespace uqring
