#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uqring/bimodule.hpp"
#include "uqring/group.hpp"
#include "uqring/ring.hpp"

namespace uqring {

/// An injective unital ring homomorphism sub -> sup, verified on creation.
struct RingEmbedding {
  Ring sub;
  Ring sup;
  std::vector<Index> map;
};

/// Checks injectivity, 1 -> 1, additivity and multiplicativity on all pairs;
/// throws NotAnEmbedding.
RingEmbedding make_embedding(Ring sub, Ring sup, std::vector<Index> map);

Ring zmod(std::size_t n, const Caps& caps = {});
Ring product(const std::vector<Ring>& factors, const Caps& caps = {});
Ring matrix_ring(std::size_t n, const Ring& base, const Caps& caps = {});
Ring upper_triangular(std::size_t n, const Ring& base, const Caps& caps = {});
Ring trivial_extension(const Ring& base, const Caps& caps = {});
Ring trivial_extension(const Ring& base, const std::shared_ptr<const Bimodule>& module, const Caps& caps = {});
Ring formal_triangular(const Ring& left, const Ring& right, const std::shared_ptr<const Bimodule>& module,
                       const Caps& caps = {});
Ring poly_quotient(const Ring& base, std::size_t n, const Caps& caps = {});
Ring group_ring(const Ring& base, const Group& group, const Caps& caps = {});

struct CornerRing {
  Ring ring;
  RingEmbedding embedding;
};
/// eRe with identity e; throws NotIdempotent / ZeroIdempotent.
CornerRing corner(const Ring& ring, Index e, const Caps& caps = {});

Subset ideal_generated(const FiniteRing& ring, const Subset& seeds);
/// R/I on coset representatives. The quotient's provenance map is the
/// projection R -> R/I. Throws NotAnIdeal.
Ring quotient_ring(const Ring& ring, const Subset& ideal, const Caps& caps = {});
/// Ideal generators found greedily in index order (used for labels).
std::vector<Index> ideal_generators(const FiniteRing& ring, const Subset& ideal);

// Presented rings over R. Basis layouts (digit order):
//   A(n,m): 1, x..x^(n-1), y..y^(m-1)
//   B(n,m): y^i x^j at digit i*n + j (i < m, j < n)
//   C(n):   empty word, then for k = 1..n-2 the alternating words of length
//           k starting with y and with x, then the y-initial word of length n-1
Ring a_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps = {});
Ring b_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps = {});
Ring c_ring(std::size_t n, const Ring& base, const Caps& caps = {});

// Matrix subrings parameterized by their free entries (digit order):
//   Tnm(n,m): a, b_1..b_(n-1), c_1..c_(m-1)   inside T_(n+m)
//   S(n,m):   grid (i, j) at digit i*n + j     inside T_(n+m-1); (i, 0) run
//             along the top-left m-block, (0, j) along the bottom-right
//             n-block, (i, j) at row m-1-i, column m-1+j
//   U(n):     a, b_1..b_(n-1), c_1..c_(n-2)   inside T_n; even rows carry b,
//             odd rows carry c
Ring t_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps = {});
Ring s_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps = {});
Ring u_ring(std::size_t n, const Ring& base, const Caps& caps = {});

/// Entry (row, col) of an element of M(n,R), T(n,R), Tnm, S or U, as an
/// index of the base ring.
Index matrix_entry(const FiniteRing& ring, Index element, std::size_t row, std::size_t col);
/// Side length of the matrices representing `ring` (n for M(n,R) etc.).
std::size_t matrix_dimension(const FiniteRing& ring);

enum class PresentedKind { AtoT, BtoS, CtoU };

struct VerifiedIsomorphism {
  Ring source;
  Ring target;
  std::vector<Index> map;
  bool exhaustive = false;
  std::uint64_t pairs = 0;
  std::uint64_t seed = 0;
};

/// The explicit coefficient maps A->Tnm, B->S, C->U, checked for
/// bijectivity, additivity, multiplicativity and 1 -> 1: exhaustively when
/// the source has at most 4096 elements, else on 10^5 seeded random pairs.
/// Throws VerificationFailed with the first bad pair. `m` is ignored for C->U.
VerifiedIsomorphism presented_iso(PresentedKind kind, std::size_t n, std::size_t m, const Ring& base,
                                const Caps& caps = {});

/// Checks that `map` is a ring isomorphism; throws VerificationFailed.
VerifiedIsomorphism verify_isomorphism(const Ring& source, const Ring& target, std::vector<Index> map,
                                       const Caps& caps = {});

/// Backtracking search for an isomorphism between rings of at most 16
/// elements. Returns the map (index in R -> index in S) or nullopt.
std::optional<std::vector<Index>> brute_force_isomorphic(const Ring& r, const Ring& s);

/// Per-element isomorphism invariants, sorted; unequal fingerprints prove
/// non-isomorphism.
std::vector<std::vector<std::size_t>> ring_fingerprint(const FiniteRing& ring);

/// U(S) == preimage of U(R) under the embedding.
bool is_good_subring(const RingEmbedding& embedding);

/// r -> r * 1 for rings built as R-algebras (matrix, triangular, polynomial,
/// group, presented and matrix-pattern rings) and r -> (r, 0) for trivial
/// extensions.
RingEmbedding scalar_embedding(const Ring& ring);

/// R[x]/(x^n) -> T_n(R), f -> banded Toeplitz matrix of its coefficients.
RingEmbedding banded_embedding(const Ring& poly_ring, const Caps& caps = {});

struct NamedEmbedding {
  std::string name;
  RingEmbedding embedding;
};
/// The subring inclusions registered for a construction (used by the
/// good-subring checks). Empty for rings without known subrings.
std::vector<NamedEmbedding> registered_embeddings(const Ring& ring, const Caps& caps = {});

}  // namespace uqring
