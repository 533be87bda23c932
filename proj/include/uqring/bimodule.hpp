#pragma once

#include <memory>
#include <string>
#include <vector>

#include "uqring/ring.hpp"

namespace uqring {

/// A finite (R, S)-bimodule: an abelian group with a left R-action and a
/// right S-action, all given by tables. Axioms are checked exhaustively on
/// construction (throws BimoduleViolation).
class Bimodule {
 public:
  Bimodule(Ring left, Ring right, std::size_t size, std::vector<Index> add, Index zero,
           std::vector<Index> left_action, std::vector<Index> right_action, std::string label);

  /// R as a bimodule over itself.
  static std::shared_ptr<const Bimodule> regular(const Ring& ring);
  /// The zero (R, S)-bimodule.
  static std::shared_ptr<const Bimodule> zero(const Ring& left, const Ring& right);

  std::size_t size() const noexcept { return size_; }
  Index zero_element() const noexcept { return zero_; }
  const Ring& left_ring() const noexcept { return left_; }
  const Ring& right_ring() const noexcept { return right_; }
  const std::string& label() const noexcept { return label_; }

  Index add(Index m, Index n) const { return add_[static_cast<std::size_t>(m) * size_ + n]; }
  Index neg(Index m) const { return neg_[m]; }
  /// r . m
  Index act_left(Index r, Index m) const { return left_action_[static_cast<std::size_t>(r) * size_ + m]; }
  /// m . s
  Index act_right(Index m, Index s) const {
    return right_action_[static_cast<std::size_t>(m) * right_->size() + s];
  }

 private:
  void verify() const;

  Ring left_;
  Ring right_;
  std::size_t size_;
  std::vector<Index> add_;
  Index zero_;
  std::vector<Index> neg_;
  std::vector<Index> left_action_;
  std::vector<Index> right_action_;
  std::string label_;
};

}  // namespace uqring
