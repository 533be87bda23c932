#pragma once

#include <memory>
#include <string>
#include <vector>

#include "uqring/subset.hpp"

namespace uqring {

/// A finite group given by its Cayley table, op[a * size + b] = ab.
/// Construction verifies the group axioms exhaustively.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t size, std::vector<Index> op, std::string label);

  std::size_t size() const noexcept { return size_; }
  Index identity() const noexcept { return identity_; }
  Index op(Index a, Index b) const { return op_[static_cast<std::size_t>(a) * size_ + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  const std::string& label() const noexcept { return label_; }

  std::size_t order_of(Index a) const;
  bool is_abelian() const;
  bool is_2_group() const;

 private:
  std::size_t size_;
  std::vector<Index> op_;
  Index identity_ = 0;
  std::vector<Index> inverse_;
  std::string label_;
};

using Group = std::shared_ptr<const FiniteGroup>;

Group cyclic(std::size_t n);
Group group_product(const Group& g, const Group& h);
/// Symmetries of the regular n-gon, order 2n (dihedral(4) is D4 of order 8).
Group dihedral(std::size_t n);
Group quaternion8();

}  // namespace uqring
