#include "uqring/bimodule.hpp"

namespace uqring {

namespace {
[[noreturn]] void fail(const std::string& what) { throw BimoduleViolation(what); }
}  // namespace

Bimodule::Bimodule(Ring left, Ring right, std::size_t size, std::vector<Index> add, Index zero,
                   std::vector<Index> left_action, std::vector<Index> right_action, std::string label)
    : left_(materialize(left)), right_(materialize(right)), size_(size), add_(std::move(add)), zero_(zero),
      left_action_(std::move(left_action)), right_action_(std::move(right_action)), label_(std::move(label)) {
  if (size_ == 0) fail("empty module");
  if (add_.size() != size_ * size_) fail("add table must have size*size entries");
  if (left_action_.size() != left_->size() * size_) fail("left action table has the wrong shape");
  if (right_action_.size() != size_ * right_->size()) fail("right action table has the wrong shape");
  for (Index v : add_)
    if (v >= size_) fail("add table entry out of range");
  for (Index v : left_action_)
    if (v >= size_) fail("left action entry out of range");
  for (Index v : right_action_)
    if (v >= size_) fail("right action entry out of range");
  neg_.assign(size_, 0);
  for (Index m = 0; m < size_; ++m) {
    bool found = false;
    for (Index n = 0; n < size_ && !found; ++n) {
      if (this->add(m, n) == zero_) {
        neg_[m] = n;
        found = true;
      }
    }
    if (!found) fail("element " + std::to_string(m) + " has no additive inverse");
  }
  verify();
}

void Bimodule::verify() const {
  const FiniteRing& r = *left_;
  const FiniteRing& s = *right_;
  for (Index m = 0; m < size_; ++m) {
    if (add(m, zero_) != m) fail("zero is not an additive identity");
    if (act_left(r.one(), m) != m) fail("left action is not unital");
    if (act_right(m, s.one()) != m) fail("right action is not unital");
    for (Index n = 0; n < size_; ++n) {
      if (add(m, n) != add(n, m)) fail("addition is not commutative");
      for (Index k = 0; k < size_; ++k)
        if (add(add(m, n), k) != add(m, add(n, k))) fail("addition is not associative");
      for (Index a = 0; a < r.size(); ++a)
        if (act_left(a, add(m, n)) != add(act_left(a, m), act_left(a, n))) fail("left action is not additive");
      for (Index b = 0; b < s.size(); ++b)
        if (act_right(add(m, n), b) != add(act_right(m, b), act_right(n, b))) fail("right action is not additive");
    }
    for (Index a = 0; a < r.size(); ++a) {
      for (Index a2 = 0; a2 < r.size(); ++a2) {
        if (act_left(r.add(a, a2), m) != add(act_left(a, m), act_left(a2, m)))
          fail("left action is not additive in the ring");
        if (act_left(r.mul(a, a2), m) != act_left(a, act_left(a2, m))) fail("left action is not associative");
      }
      for (Index b = 0; b < s.size(); ++b)
        if (act_right(act_left(a, m), b) != act_left(a, act_right(m, b))) fail("actions are not compatible");
    }
    for (Index b = 0; b < s.size(); ++b) {
      for (Index b2 = 0; b2 < s.size(); ++b2) {
        if (act_right(m, s.add(b, b2)) != add(act_right(m, b), act_right(m, b2)))
          fail("right action is not additive in the ring");
        if (act_right(m, s.mul(b, b2)) != act_right(act_right(m, b), b2)) fail("right action is not associative");
      }
    }
  }
}

std::shared_ptr<const Bimodule> Bimodule::regular(const Ring& ring) {
  const Ring r = materialize(ring);
  const std::size_t n = r->size();
  std::vector<Index> add(n * n), mul(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a) * n + b] = r->add(a, b);
      mul[static_cast<std::size_t>(a) * n + b] = r->mul(a, b);
    }
  }
  return std::make_shared<Bimodule>(r, r, n, add, r->zero(), mul, mul, "regular");
}

std::shared_ptr<const Bimodule> Bimodule::zero(const Ring& left, const Ring& right) {
  return std::make_shared<Bimodule>(left, right, 1, std::vector<Index>{0}, 0, std::vector<Index>(left->size(), 0),
                                    std::vector<Index>(right->size(), 0), "zero");
}

}  // namespace uqring
