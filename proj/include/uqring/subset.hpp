#pragma once

#include <cstdint>
#include <vector>

namespace uqring {

using Index = std::uint32_t;

/// Membership mask over the element indices 0..universe-1 of one ring.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : mask_(universe, false) {}

  static Subset full(std::size_t universe) {
    Subset s(universe);
    s.mask_.assign(universe, true);
    s.count_ = universe;
    return s;
  }
  static Subset of(std::size_t universe, const std::vector<Index>& members) {
    Subset s(universe);
    for (Index m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const noexcept { return mask_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool contains(Index a) const { return mask_[a]; }

  void insert(Index a) {
    if (!mask_[a]) {
      mask_[a] = true;
      ++count_;
    }
  }
  void erase(Index a) {
    if (mask_[a]) {
      mask_[a] = false;
      --count_;
    }
  }

  std::vector<Index> members() const {
    std::vector<Index> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(static_cast<Index>(i));
    return out;
  }

  bool is_subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.mask_[i]) return false;
    return true;
  }

  /// First element in this set but not in `other`, or -1.
  long first_outside(const Subset& other) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.mask_[i]) return static_cast<long>(i);
    return -1;
  }

  Subset intersect(const Subset& other) const {
    Subset out(universe());
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && other.mask_[i]) out.insert(static_cast<Index>(i));
    return out;
  }
  Subset unite(const Subset& other) const {
    Subset out(*this);
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (other.mask_[i]) out.insert(static_cast<Index>(i));
    return out;
  }
  Subset minus(const Subset& other) const {
    Subset out(universe());
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.mask_[i]) out.insert(static_cast<Index>(i));
    return out;
  }

  friend bool operator==(const Subset& a, const Subset& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<bool> mask_;
  std::size_t count_ = 0;
};

}  // namespace uqring
