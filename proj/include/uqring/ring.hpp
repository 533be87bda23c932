#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uqring/errors.hpp"
#include "uqring/subset.hpp"

namespace uqring {

class FiniteRing;
class FiniteGroup;
class Bimodule;

using Ring = std::shared_ptr<const FiniteRing>;

/// Size limits and the fixed seed used by every randomized step.
struct Caps {
  std::size_t table = 4096;       // largest ring that gets dense operation tables
  std::size_t structure = 65536;  // largest ring any constructor will build
  std::size_t axiom = 256;        // exhaustive axiom check up to this size
  std::size_t axiom_samples = 100000;
  std::size_t nstar = 1024;  // lower nil-radical computed up to this size
  std::uint64_t seed = 1;
};

enum class Backend { Table, Structure };

enum class Construction {
  Raw,
  Zmod,
  Product,
  Matrix,
  UpperTriangular,
  TrivialExtension,
  FormalTriangular,
  PolyQuotient,
  GroupRing,
  Corner,
  Quotient,
  APresented,
  BPresented,
  CPresented,
  TMatrix,
  SMatrix,
  UMatrix,
};

/// How a ring was built. `parts` are the input rings (components, base ring,
/// ambient ring of a corner or quotient); `map` is the corner embedding into
/// parts[0] or the quotient projection from parts[0].
struct Provenance {
  Construction kind = Construction::Raw;
  std::vector<Ring> parts;
  std::vector<std::size_t> params;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Bimodule> bimodule;
  std::vector<Index> map;
};

/// Mixed-radix coordinates: index = d0 + r0*(d1 + r1*(d2 + ...)).
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::size_t> radices);

  std::size_t digits() const noexcept { return radices_.size(); }
  std::size_t radix(std::size_t i) const { return radices_[i]; }
  std::size_t total() const noexcept { return total_; }

  void decode(Index index, std::span<Index> out) const;
  std::vector<Index> decode(Index index) const;
  Index encode(std::span<const Index> digits) const;

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_ = 1;
};

/// Operations computed from a construction's encoding instead of tables.
class RingStructure {
 public:
  virtual ~RingStructure() = default;
  virtual std::size_t size() const = 0;
  virtual Index add(Index a, Index b) const = 0;
  virtual Index mul(Index a, Index b) const = 0;
  virtual Index neg(Index a) const = 0;
  virtual Index zero() const = 0;
  virtual Index one() const = 0;
  virtual const MixedRadix* coordinates() const { return nullptr; }
};

/// Record of the axiom verification run at construction time.
struct AxiomCheck {
  bool exhaustive = false;
  std::uint64_t triples = 0;
  std::uint64_t seed = 0;
};

/// A finite unital ring on the dense element indices 0..size()-1.
/// Immutable after construction and safe to share across threads.
class FiniteRing {
 public:
  struct Token {};  // restricts construction to the factory functions

  FiniteRing(Token, std::size_t size, Index zero, Index one, std::string label);
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const noexcept { return size_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }
  Backend backend() const noexcept { return tabled_ ? Backend::Table : Backend::Structure; }
  const std::string& label() const noexcept { return label_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  const AxiomCheck& axiom_check() const noexcept { return axioms_; }
  const std::shared_ptr<const RingStructure>& structure() const noexcept { return structure_; }

  Index add(Index a, Index b) const {
    return tabled_ ? add_[static_cast<std::size_t>(a) * size_ + b] : structure_->add(a, b);
  }
  Index mul(Index a, Index b) const {
    return tabled_ ? mul_[static_cast<std::size_t>(a) * size_ + b] : structure_->mul(a, b);
  }
  Index neg(Index a) const { return tabled_ ? neg_[a] : structure_->neg(a); }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index pow(Index a, std::uint64_t k) const;
  /// k-fold sum a + a + ... + a (k >= 0).
  Index times(Index a, std::uint64_t k) const;
  /// The image of the integer k under Z -> R.
  Index integer(long long k) const;

  /// Coordinates of structured rings (coefficient vectors, component tuples).
  const MixedRadix* coordinates() const noexcept { return radix_ ? &*radix_ : nullptr; }
  std::vector<Index> digits(Index a) const;
  Index encode(std::span<const Index> digits) const;

  /// A small set of elements generating the ring under + and *. Computed
  /// once on first request.
  const std::vector<Index>& generators() const;

 private:
  friend Ring make_ring(std::size_t, std::vector<Index>, std::vector<Index>, Index, Index, std::string,
                        const Caps&, Provenance);
  friend Ring make_structured_ring(std::shared_ptr<const RingStructure>, std::string, Provenance, const Caps&);
  friend Ring materialize(const Ring&, std::size_t);

  std::size_t size_;
  Index zero_;
  Index one_;
  std::string label_;
  bool tabled_ = false;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::shared_ptr<const RingStructure> structure_;
  std::optional<MixedRadix> radix_;
  Provenance provenance_;
  AxiomCheck axioms_;

  mutable std::once_flag generators_once_;
  mutable std::vector<Index> generators_;
};

/// Builds a table-backed ring from row-major operation tables and verifies
/// the ring axioms (exhaustively up to caps.axiom elements, by fixed-seed
/// random triples above). Throws ZeroRing for size 1, AxiomViolation on the
/// first violated law.
Ring make_ring(std::size_t size, std::vector<Index> add, std::vector<Index> mul, Index zero, Index one,
               std::string label, const Caps& caps = {}, Provenance provenance = {});

/// Wraps a structure-backed ring; same verification as make_ring.
Ring make_structured_ring(std::shared_ptr<const RingStructure> structure, std::string label,
                          Provenance provenance, const Caps& caps = {});

/// Returns a table-backed ring with identical operations (R itself if already
/// table-backed). Throws SizeCapExceeded above `cap`.
Ring materialize(const Ring& ring, std::size_t cap = Caps{}.table);

/// Runs the axiom check on any operation source; throws AxiomViolation.
AxiomCheck verify_axioms(const FiniteRing& ring, const Caps& caps);

/// An element bound to its ring. Arithmetic between elements of different
/// rings throws RingMismatch.
class Element {
 public:
  Element(Ring ring, Index index);

  const Ring& ring() const noexcept { return ring_; }
  Index index() const noexcept { return index_; }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend bool operator==(const Element& a, const Element& b) {
    return a.ring_ == b.ring_ && a.index_ == b.index_;
  }

 private:
  Ring ring_;
  Index index_;
};

Element pow(const Element& a, std::uint64_t k);

Subset center(const FiniteRing& ring);
Subset commutant(const FiniteRing& ring, Index a);

Index additive_order(const FiniteRing& ring, Index a);

/// Incrementally built additive subgroup. `join` adds the cyclic subgroup of
/// z and returns the elements that became members.
class AdditiveSpan {
 public:
  explicit AdditiveSpan(const FiniteRing& ring);
  std::vector<Index> join(Index z);
  const Subset& set() const noexcept { return set_; }
  const std::vector<Index>& members() const noexcept { return members_; }

 private:
  const FiniteRing* ring_;
  Subset set_;
  std::vector<Index> members_;
};

/// Subring generated by `gens` together with 1.
Subset subring_generated(const FiniteRing& ring, std::span<const Index> gens);
/// Two-sided ideal generated by `seeds`.
Subset ideal_closure(const FiniteRing& ring, std::span<const Index> seeds);
/// Greedy generating set of the additive subgroup `s`.
std::vector<Index> additive_generators(const FiniteRing& ring, const Subset& s);

}  // namespace uqring
