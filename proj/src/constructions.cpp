#include "uqring/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

#include "uqring/analysis.hpp"

namespace uqring {

namespace {

constexpr std::size_t kMaxDigits = 32;

std::string ring_name(const Ring& r) { return r->label(); }

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (total > cap / base + 1) throw SizeCapExceeded(cap + 1, cap);
    total *= base;
  }
  if (total > cap) throw SizeCapExceeded(total, cap);
  return total;
}

Ring small_base(const Ring& base, const Caps& caps) { return materialize(base, std::max(caps.table, base->size())); }

/// Free R-module on a monomial basis whose products are basis elements or 0;
/// coefficients commute with the basis.
class MonomialAlgebra final : public RingStructure {
 public:
  MonomialAlgebra(Ring base, std::size_t dim, std::vector<int> basis_mul, std::vector<std::size_t> unit_support)
      : base_(std::move(base)),
        dim_(dim),
        basis_mul_(std::move(basis_mul)),
        radix_(std::vector<std::size_t>(dim, base_->size())) {
    if (dim_ > kMaxDigits) throw InvalidArgument("too many basis elements");
    std::vector<Index> digits(dim_, base_->zero());
    zero_ = radix_.encode(digits);
    for (std::size_t u : unit_support) digits[u] = base_->one();
    one_ = radix_.encode(digits);
  }

  std::size_t size() const override { return radix_.total(); }
  Index zero() const override { return zero_; }
  Index one() const override { return one_; }
  const MixedRadix* coordinates() const override { return &radix_; }

  Index add(Index a, Index b) const override {
    std::array<Index, kMaxDigits> x{}, y{};
    radix_.decode(a, {x.data(), dim_});
    radix_.decode(b, {y.data(), dim_});
    for (std::size_t i = 0; i < dim_; ++i) x[i] = base_->add(x[i], y[i]);
    return radix_.encode({x.data(), dim_});
  }
  Index neg(Index a) const override {
    std::array<Index, kMaxDigits> x{};
    radix_.decode(a, {x.data(), dim_});
    for (std::size_t i = 0; i < dim_; ++i) x[i] = base_->neg(x[i]);
    return radix_.encode({x.data(), dim_});
  }
  Index mul(Index a, Index b) const override {
    std::array<Index, kMaxDigits> x{}, y{}, z{};
    radix_.decode(a, {x.data(), dim_});
    radix_.decode(b, {y.data(), dim_});
    const Index zero = base_->zero();
    for (std::size_t i = 0; i < dim_; ++i) z[i] = zero;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == zero) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == zero) continue;
        const int t = basis_mul_[i * dim_ + j];
        if (t >= 0) z[t] = base_->add(z[t], base_->mul(x[i], y[j]));
      }
    }
    return radix_.encode({z.data(), dim_});
  }

 private:
  Ring base_;
  std::size_t dim_;
  std::vector<int> basis_mul_;
  MixedRadix radix_;
  Index zero_ = 0;
  Index one_ = 0;
};

class ProductStructure final : public RingStructure {
 public:
  explicit ProductStructure(std::vector<Ring> parts) : parts_(std::move(parts)), radix_(radices(parts_)) {
    std::vector<Index> z(parts_.size()), o(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      z[i] = parts_[i]->zero();
      o[i] = parts_[i]->one();
    }
    zero_ = radix_.encode(z);
    one_ = radix_.encode(o);
  }
  std::size_t size() const override { return radix_.total(); }
  Index zero() const override { return zero_; }
  Index one() const override { return one_; }
  const MixedRadix* coordinates() const override { return &radix_; }
  Index add(Index a, Index b) const override {
    return apply(a, b, [](const FiniteRing& r, Index x, Index y) { return r.add(x, y); });
  }
  Index mul(Index a, Index b) const override {
    return apply(a, b, [](const FiniteRing& r, Index x, Index y) { return r.mul(x, y); });
  }
  Index neg(Index a) const override {
    return apply(a, a, [](const FiniteRing& r, Index x, Index) { return r.neg(x); });
  }

 private:
  static std::vector<std::size_t> radices(const std::vector<Ring>& parts) {
    std::vector<std::size_t> out;
    for (const auto& p : parts) out.push_back(p->size());
    return out;
  }
  template <typename F>
  Index apply(Index a, Index b, F f) const {
    const std::size_t k = parts_.size();
    std::array<Index, kMaxDigits> x{}, y{};
    radix_.decode(a, {x.data(), k});
    radix_.decode(b, {y.data(), k});
    for (std::size_t i = 0; i < k; ++i) x[i] = f(*parts_[i], x[i], y[i]);
    return radix_.encode({x.data(), k});
  }

  std::vector<Ring> parts_;
  MixedRadix radix_;
  Index zero_ = 0;
  Index one_ = 0;
};

/// (r, m, s) with (r, m, s)(r', m', s') = (rr', r m' + m s', ss'). The
/// trivial extension T(R, M) is the diagonal case s = r and is handled by
/// TrivialExtensionStructure below.
class FormalTriangularStructure final : public RingStructure {
 public:
  FormalTriangularStructure(Ring left, Ring right, std::shared_ptr<const Bimodule> module)
      : left_(std::move(left)),
        right_(std::move(right)),
        module_(std::move(module)),
        radix_({left_->size(), module_->size(), right_->size()}) {}
  std::size_t size() const override { return radix_.total(); }
  Index zero() const override { return enc(left_->zero(), module_->zero_element(), right_->zero()); }
  Index one() const override { return enc(left_->one(), module_->zero_element(), right_->one()); }
  const MixedRadix* coordinates() const override { return &radix_; }
  Index add(Index a, Index b) const override {
    const auto x = radix_.decode(a), y = radix_.decode(b);
    return enc(left_->add(x[0], y[0]), module_->add(x[1], y[1]), right_->add(x[2], y[2]));
  }
  Index neg(Index a) const override {
    const auto x = radix_.decode(a);
    return enc(left_->neg(x[0]), module_->neg(x[1]), right_->neg(x[2]));
  }
  Index mul(Index a, Index b) const override {
    const auto x = radix_.decode(a), y = radix_.decode(b);
    const Index m = module_->add(module_->act_left(x[0], y[1]), module_->act_right(x[1], y[2]));
    return enc(left_->mul(x[0], y[0]), m, right_->mul(x[2], y[2]));
  }

 private:
  Index enc(Index r, Index m, Index s) const {
    const std::array<Index, 3> d{r, m, s};
    return radix_.encode(d);
  }
  Ring left_;
  Ring right_;
  std::shared_ptr<const Bimodule> module_;
  MixedRadix radix_;
};

/// (r, m)(s, n) = (rs, r n + m s).
class TrivialExtensionStructure final : public RingStructure {
 public:
  TrivialExtensionStructure(Ring base, std::shared_ptr<const Bimodule> module)
      : base_(std::move(base)), module_(std::move(module)), radix_({base_->size(), module_->size()}) {}
  std::size_t size() const override { return radix_.total(); }
  Index zero() const override { return enc(base_->zero(), module_->zero_element()); }
  Index one() const override { return enc(base_->one(), module_->zero_element()); }
  const MixedRadix* coordinates() const override { return &radix_; }
  Index add(Index a, Index b) const override {
    const auto x = radix_.decode(a), y = radix_.decode(b);
    return enc(base_->add(x[0], y[0]), module_->add(x[1], y[1]));
  }
  Index neg(Index a) const override {
    const auto x = radix_.decode(a);
    return enc(base_->neg(x[0]), module_->neg(x[1]));
  }
  Index mul(Index a, Index b) const override {
    const auto x = radix_.decode(a), y = radix_.decode(b);
    return enc(base_->mul(x[0], y[0]), module_->add(module_->act_left(x[0], y[1]), module_->act_right(x[1], y[0])));
  }

 private:
  Index enc(Index r, Index m) const {
    const std::array<Index, 2> d{r, m};
    return radix_.encode(d);
  }
  Ring base_;
  std::shared_ptr<const Bimodule> module_;
  MixedRadix radix_;
};

struct Position {
  std::size_t row;
  std::size_t col;
};

/// Upper-triangular N x N matrices whose entries are tied to parameters:
/// every entry listed under parameter p equals p, all other entries are 0.
/// Multiplication is genuine matrix multiplication; a product that leaves
/// the pattern is a construction bug and throws std::logic_error.
class PatternMatrixStructure final : public RingStructure {
 public:
  PatternMatrixStructure(Ring base, std::size_t dim, std::vector<std::vector<Position>> params)
      : base_(std::move(base)),
        dim_(dim),
        params_(std::move(params)),
        radix_(std::vector<std::size_t>(params_.size(), base_->size())),
        owner_(dim * dim, -1) {
    for (std::size_t p = 0; p < params_.size(); ++p)
      for (const auto& pos : params_[p]) owner_[pos.row * dim_ + pos.col] = static_cast<int>(p);
    std::vector<Index> digits(params_.size(), base_->zero());
    zero_ = radix_.encode(digits);
    digits[0] = base_->one();
    one_ = radix_.encode(digits);
  }
  std::size_t size() const override { return radix_.total(); }
  Index zero() const override { return zero_; }
  Index one() const override { return one_; }
  const MixedRadix* coordinates() const override { return &radix_; }
  std::size_t dim() const noexcept { return dim_; }
  int owner(std::size_t row, std::size_t col) const { return owner_[row * dim_ + col]; }

  Index add(Index a, Index b) const override {
    auto x = radix_.decode(a);
    const auto y = radix_.decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base_->add(x[i], y[i]);
    return radix_.encode(x);
  }
  Index neg(Index a) const override {
    auto x = radix_.decode(a);
    for (auto& v : x) v = base_->neg(v);
    return radix_.encode(x);
  }
  Index mul(Index a, Index b) const override {
    const auto x = expand(a), y = expand(b);
    const Index zero = base_->zero();
    std::vector<Index> z(dim_ * dim_, zero);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = i; k < dim_; ++k) {
        const Index xik = x[i * dim_ + k];
        if (xik == zero) continue;
        for (std::size_t j = k; j < dim_; ++j)
          z[i * dim_ + j] = base_->add(z[i * dim_ + j], base_->mul(xik, y[k * dim_ + j]));
      }
    std::vector<Index> out(params_.size());
    for (std::size_t p = 0; p < params_.size(); ++p) out[p] = z[params_[p][0].row * dim_ + params_[p][0].col];
    for (std::size_t cell = 0; cell < dim_ * dim_; ++cell) {
      const int p = owner_[cell];
      const Index expected = p < 0 ? zero : out[static_cast<std::size_t>(p)];
      if (z[cell] != expected) throw std::logic_error("matrix pattern is not closed under multiplication");
    }
    return radix_.encode(out);
  }

  std::vector<Index> expand(Index a) const {
    const auto x = radix_.decode(a);
    std::vector<Index> m(dim_ * dim_, base_->zero());
    for (std::size_t p = 0; p < params_.size(); ++p)
      for (const auto& pos : params_[p]) m[pos.row * dim_ + pos.col] = x[p];
    return m;
  }

 private:
  Ring base_;
  std::size_t dim_;
  std::vector<std::vector<Position>> params_;
  MixedRadix radix_;
  std::vector<int> owner_;
  Index zero_ = 0;
  Index one_ = 0;
};

Ring monomial_ring(const Ring& base, std::size_t dim, std::vector<int> basis_mul, std::vector<std::size_t> unit_support,
                   std::string label, Provenance prov, const Caps& caps) {
  checked_power(base->size(), dim, caps.structure);
  auto structure = std::make_shared<MonomialAlgebra>(small_base(base, caps), dim, std::move(basis_mul),
                                                     std::move(unit_support));
  return make_structured_ring(std::move(structure), std::move(label), std::move(prov), caps);
}

Ring pattern_ring(const Ring& base, std::size_t dim, std::vector<std::vector<Position>> params, std::string label,
                  Provenance prov, const Caps& caps) {
  checked_power(base->size(), params.size(), caps.structure);
  auto structure = std::make_shared<PatternMatrixStructure>(small_base(base, caps), dim, std::move(params));
  return make_structured_ring(std::move(structure), std::move(label), std::move(prov), caps);
}

std::vector<Position> diagonal(std::size_t dim) {
  std::vector<Position> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back({i, i});
  return out;
}

// Basis index of E_ij in T(n, R): pairs i <= j in row-major order.
std::size_t triangular_slot(std::size_t n, std::size_t i, std::size_t j) { return i * n - i * (i - 1) / 2 + (j - i); }

std::string join_labels(const std::vector<Ring>& rings) {
  std::string out;
  for (std::size_t i = 0; i < rings.size(); ++i) out += (i ? ", " : "") + rings[i]->label();
  return out;
}

std::string n_str(std::size_t n) { return std::to_string(n); }

}  // namespace

RingEmbedding make_embedding(Ring sub, Ring sup, std::vector<Index> map) {
  const FiniteRing& s = *sub;
  const FiniteRing& r = *sup;
  if (map.size() != s.size()) throw NotAnEmbedding("map must cover the subring");
  std::vector<bool> hit(r.size(), false);
  for (Index v : map) {
    if (v >= r.size()) throw NotAnEmbedding("image out of range");
    if (hit[v]) throw NotAnEmbedding("map is not injective");
    hit[v] = true;
  }
  if (map[s.one()] != r.one()) throw NotAnEmbedding("map does not send 1 to 1");
  for (Index a = 0; a < s.size(); ++a)
    for (Index b = 0; b < s.size(); ++b) {
      if (map[s.add(a, b)] != r.add(map[a], map[b]))
        throw NotAnEmbedding("map is not additive at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      if (map[s.mul(a, b)] != r.mul(map[a], map[b]))
        throw NotAnEmbedding("map is not multiplicative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  return {std::move(sub), std::move(sup), std::move(map)};
}

Ring zmod(std::size_t n, const Caps& caps) {
  if (n == 1) throw ZeroRing();
  if (n == 0) throw InvalidArgument("zmod requires n >= 2");
  if (n > caps.table) throw SizeCapExceeded(n, caps.table);
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Index>((a + b) % n);
      mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  Provenance prov;
  prov.kind = Construction::Zmod;
  prov.params = {n};
  return make_ring(n, std::move(add), std::move(mul), 0, n == 1 ? 0 : 1, n == 2 ? "F2" : "Zmod(" + n_str(n) + ")",
                   caps, std::move(prov));
}

Ring product(const std::vector<Ring>& factors, const Caps& caps) {
  if (factors.empty()) throw InvalidArgument("product needs at least one factor");
  if (factors.size() > kMaxDigits) throw InvalidArgument("too many factors");
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (total > caps.structure / f->size()) throw SizeCapExceeded(caps.structure + 1, caps.structure);
    total *= f->size();
  }
  std::vector<Ring> parts;
  for (const auto& f : factors) parts.push_back(small_base(f, caps));
  Provenance prov;
  prov.kind = Construction::Product;
  prov.parts = factors;
  return make_structured_ring(std::make_shared<ProductStructure>(std::move(parts)),
                              "product(" + join_labels(factors) + ")", std::move(prov), caps);
}

Ring matrix_ring(std::size_t n, const Ring& base, const Caps& caps) {
  if (n < 1) throw InvalidArgument("matrix size must be >= 1");
  const std::size_t dim = n * n;
  std::vector<int> table(dim * dim, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) table[(i * n + j) * dim + (j * n + l)] = static_cast<int>(i * n + l);
  std::vector<std::size_t> unit;
  for (std::size_t i = 0; i < n; ++i) unit.push_back(i * n + i);
  Provenance prov;
  prov.kind = Construction::Matrix;
  prov.parts = {base};
  prov.params = {n};
  return monomial_ring(base, dim, std::move(table), std::move(unit), "M(" + n_str(n) + ", " + ring_name(base) + ")",
                       std::move(prov), caps);
}

Ring upper_triangular(std::size_t n, const Ring& base, const Caps& caps) {
  if (n < 1) throw InvalidArgument("matrix size must be >= 1");
  const std::size_t dim = n * (n + 1) / 2;
  std::vector<int> table(dim * dim, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t l = j; l < n; ++l)
        table[triangular_slot(n, i, j) * dim + triangular_slot(n, j, l)] = static_cast<int>(triangular_slot(n, i, l));
  std::vector<std::size_t> unit;
  for (std::size_t i = 0; i < n; ++i) unit.push_back(triangular_slot(n, i, i));
  Provenance prov;
  prov.kind = Construction::UpperTriangular;
  prov.parts = {base};
  prov.params = {n};
  return monomial_ring(base, dim, std::move(table), std::move(unit), "T(" + n_str(n) + ", " + ring_name(base) + ")",
                       std::move(prov), caps);
}

Ring trivial_extension(const Ring& base, const Caps& caps) {
  return trivial_extension(base, Bimodule::regular(small_base(base, caps)), caps);
}

Ring trivial_extension(const Ring& base, const std::shared_ptr<const Bimodule>& module, const Caps& caps) {
  if (module->left_ring()->label() != base->label() || module->right_ring()->label() != base->label())
    throw BimoduleViolation("trivial extension needs an (R, R)-bimodule");
  if (base->size() > caps.structure / module->size()) throw SizeCapExceeded(base->size() * module->size(), caps.structure);
  Provenance prov;
  prov.kind = Construction::TrivialExtension;
  prov.parts = {base};
  prov.bimodule = module;
  const std::string label = module->label() == "regular" ? "trivext(" + ring_name(base) + ")"
                                                          : "trivext(" + ring_name(base) + ", " + module->label() + ")";
  return make_structured_ring(std::make_shared<TrivialExtensionStructure>(small_base(base, caps), module), label,
                              std::move(prov), caps);
}

Ring formal_triangular(const Ring& left, const Ring& right, const std::shared_ptr<const Bimodule>& module,
                       const Caps& caps) {
  if (module->left_ring()->label() != left->label() || module->right_ring()->label() != right->label())
    throw BimoduleViolation("formal triangular ring needs an (R, S)-bimodule");
  const std::size_t total = left->size() * module->size();
  if (total > caps.structure / right->size()) throw SizeCapExceeded(total * right->size(), caps.structure);
  Provenance prov;
  prov.kind = Construction::FormalTriangular;
  prov.parts = {left, right};
  prov.bimodule = module;
  return make_structured_ring(
      std::make_shared<FormalTriangularStructure>(small_base(left, caps), small_base(right, caps), module),
      "formal(" + ring_name(left) + ", " + ring_name(right) + ", " + module->label() + ")", std::move(prov), caps);
}

Ring poly_quotient(const Ring& base, std::size_t n, const Caps& caps) {
  if (n < 1) throw InvalidArgument("polyq requires n >= 1");
  std::vector<int> table(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) table[i * n + j] = static_cast<int>(i + j);
  Provenance prov;
  prov.kind = Construction::PolyQuotient;
  prov.parts = {base};
  prov.params = {n};
  return monomial_ring(base, n, std::move(table), {0}, "polyq(" + ring_name(base) + ", " + n_str(n) + ")",
                       std::move(prov), caps);
}

Ring group_ring(const Ring& base, const Group& group, const Caps& caps) {
  const std::size_t k = group->size();
  std::vector<int> table(k * k);
  for (Index g = 0; g < k; ++g)
    for (Index h = 0; h < k; ++h) table[g * k + h] = static_cast<int>(group->op(g, h));
  Provenance prov;
  prov.kind = Construction::GroupRing;
  prov.parts = {base};
  prov.group = group;
  return monomial_ring(base, k, std::move(table), {group->identity()},
                       "groupring(" + ring_name(base) + ", " + group->label() + ")", std::move(prov), caps);
}

CornerRing corner(const Ring& ring, Index e, const Caps& caps) {
  const Ring r = ring->size() <= caps.table ? materialize(ring, caps.table) : ring;
  if (e >= r->size()) throw InvalidArgument("idempotent index out of range");
  if (r->mul(e, e) != e) throw NotIdempotent(e);
  if (e == r->zero()) throw ZeroIdempotent();
  Subset members(r->size());
  for (Index x = 0; x < r->size(); ++x) members.insert(r->mul(r->mul(e, x), e));
  const std::vector<Index> elems = members.members();
  const std::size_t n = elems.size();
  std::vector<Index> position(r->size(), 0);
  for (std::size_t i = 0; i < n; ++i) position[elems[i]] = static_cast<Index>(i);
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = position[r->add(elems[i], elems[j])];
      mul[i * n + j] = position[r->mul(elems[i], elems[j])];
    }
  Provenance prov;
  prov.kind = Construction::Corner;
  prov.parts = {ring};
  prov.params = {e};
  prov.map = elems;
  Ring sub = make_ring(n, std::move(add), std::move(mul), position[r->zero()], position[e],
                       "corner(" + ring_name(ring) + ", " + std::to_string(e) + ")", caps, std::move(prov));
  // e is the identity of eRe, so the inclusion is unital only for e = 1.
  RingEmbedding emb{sub, ring, elems};
  return {std::move(sub), std::move(emb)};
}

Subset ideal_generated(const FiniteRing& ring, const Subset& seeds) { return ideal_closure(ring, seeds.members()); }

std::vector<Index> ideal_generators(const FiniteRing& ring, const Subset& ideal) {
  std::vector<Index> gens;
  Subset covered(ring.size());
  covered.insert(ring.zero());
  for (Index a : ideal.members()) {
    if (covered.contains(a)) continue;
    gens.push_back(a);
    covered = ideal_closure(ring, gens);
  }
  return gens;
}

Ring quotient_ring(const Ring& ring, const Subset& ideal, const Caps& caps) {
  const Ring r = ring->size() <= caps.table ? materialize(ring, caps.table) : ring;
  const std::size_t n = r->size();
  if (ideal.universe() != n) throw NotAnIdeal("subset belongs to a different ring");
  if (!ideal.contains(r->zero())) throw NotAnIdeal("does not contain 0");
  const auto members = ideal.members();
  for (Index a : members) {
    if (!ideal.contains(r->neg(a))) throw NotAnIdeal("not closed under negation at " + std::to_string(a));
    for (Index b : members)
      if (!ideal.contains(r->add(a, b)))
        throw NotAnIdeal("not additively closed at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  for (Index g : r->generators())
    for (Index a : members)
      if (!ideal.contains(r->mul(g, a)) || !ideal.contains(r->mul(a, g)))
        throw NotAnIdeal("not absorbing at (" + std::to_string(g) + ", " + std::to_string(a) + ")");

  constexpr Index kUnassigned = static_cast<Index>(-1);
  std::vector<Index> projection(n, kUnassigned);
  std::vector<Index> reps;
  for (Index a = 0; a < n; ++a) {
    if (projection[a] != kUnassigned) continue;
    const Index c = static_cast<Index>(reps.size());
    reps.push_back(a);
    for (Index i : members) projection[r->add(a, i)] = c;
  }
  const std::size_t m = reps.size();
  if (m == 1) throw ZeroRing();
  std::vector<Index> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = projection[r->add(reps[i], reps[j])];
      mul[i * m + j] = projection[r->mul(reps[i], reps[j])];
    }
  std::string gens;
  for (Index g : ideal_generators(*r, ideal)) gens += (gens.empty() ? "" : ", ") + std::to_string(g);
  if (gens.empty()) gens = "0";
  Provenance prov;
  prov.kind = Construction::Quotient;
  prov.parts = {ring};
  prov.map = projection;
  return make_ring(m, std::move(add), std::move(mul), projection[r->zero()], projection[r->one()],
                   "quot(" + ring_name(ring) + ", ideal(" + gens + "))", caps, std::move(prov));
}

Ring a_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps) {
  if (n < 2 || m < 2) throw InvalidArgument("A(n, m) requires n, m >= 2");
  const std::size_t dim = n + m - 1;
  // digit 0 is 1, digit i is x^i (i < n), digit n - 1 + j is y^j (j < m)
  auto x_pow = [&](std::size_t i) { return i; };
  auto y_pow = [&](std::size_t j) { return j == 0 ? 0 : n - 1 + j; };
  std::vector<int> table(dim * dim, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; i + k < n; ++k) table[x_pow(i) * dim + x_pow(k)] = static_cast<int>(x_pow(i + k));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; j + l < m; ++l) table[y_pow(j) * dim + y_pow(l)] = static_cast<int>(y_pow(j + l));
  Provenance prov;
  prov.kind = Construction::APresented;
  prov.parts = {base};
  prov.params = {n, m};
  return monomial_ring(base, dim, std::move(table), {0},
                       "A(" + n_str(n) + ", " + n_str(m) + ", " + ring_name(base) + ")", std::move(prov), caps);
}

Ring b_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps) {
  if (n < 2 || m < 2) throw InvalidArgument("B(n, m) requires n, m >= 2");
  const std::size_t dim = n * m;
  std::vector<int> table(dim * dim, -1);
  // (y^i x^j)(y^k x^l) vanishes when j > 0 and k > 0 since xy = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (j > 0 && k > 0) continue;
          if (i + k >= m || j + l >= n) continue;
          table[(i * n + j) * dim + (k * n + l)] = static_cast<int>((i + k) * n + (j + l));
        }
  Provenance prov;
  prov.kind = Construction::BPresented;
  prov.parts = {base};
  prov.params = {n, m};
  return monomial_ring(base, dim, std::move(table), {0},
                       "B(" + n_str(n) + ", " + n_str(m) + ", " + ring_name(base) + ")", std::move(prov), caps);
}

namespace {

struct Word {
  char first;  // 'x', 'y', or 0 for the empty word
  std::size_t length;
};

std::vector<Word> c_basis(std::size_t n) {
  std::vector<Word> words{{0, 0}};
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    words.push_back({'y', k});
    words.push_back({'x', k});
  }
  words.push_back({'y', n - 1});
  return words;
}

char last_letter(const Word& w) {
  if (w.length % 2 == 1) return w.first;
  return w.first == 'x' ? 'y' : 'x';
}

}  // namespace

Ring c_ring(std::size_t n, const Ring& base, const Caps& caps) {
  if (n < 2) throw InvalidArgument("C(n) requires n >= 2");
  const auto words = c_basis(n);
  const std::size_t dim = words.size();
  auto find = [&](char first, std::size_t length) -> int {
    for (std::size_t i = 0; i < dim; ++i)
      if (words[i].first == first && words[i].length == length) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> table(dim * dim, -1);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Word& u = words[i];
      const Word& v = words[j];
      if (u.length == 0) {
        table[i * dim + j] = static_cast<int>(j);
      } else if (v.length == 0) {
        table[i * dim + j] = static_cast<int>(i);
      } else if (last_letter(u) != v.first) {
        // alternating concatenation; xx, yy and the killed x-initial word of
        // length n-1 (and everything longer) are absent from the basis
        table[i * dim + j] = find(u.first, u.length + v.length);
      }
    }
  Provenance prov;
  prov.kind = Construction::CPresented;
  prov.parts = {base};
  prov.params = {n};
  return monomial_ring(base, dim, std::move(table), {0}, "C(" + n_str(n) + ", " + ring_name(base) + ")",
                       std::move(prov), caps);
}

Ring t_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps) {
  if (n < 2 || m < 2) throw InvalidArgument("Tnm(n, m) requires n, m >= 2");
  const std::size_t dim = n + m;
  std::vector<std::vector<Position>> params{diagonal(dim)};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Position> p;
    for (std::size_t r = 0; r + k < n; ++r) p.push_back({r, r + k});
    params.push_back(std::move(p));
  }
  for (std::size_t k = 1; k < m; ++k) {
    std::vector<Position> p;
    for (std::size_t r = 0; r + k < m; ++r) p.push_back({n + r, n + r + k});
    params.push_back(std::move(p));
  }
  Provenance prov;
  prov.kind = Construction::TMatrix;
  prov.parts = {base};
  prov.params = {n, m};
  return pattern_ring(base, dim, std::move(params), "Tnm(" + n_str(n) + ", " + n_str(m) + ", " + ring_name(base) + ")",
                      std::move(prov), caps);
}

Ring s_ring(std::size_t n, std::size_t m, const Ring& base, const Caps& caps) {
  if (n < 2 || m < 2) throw InvalidArgument("S(n, m) requires n, m >= 2");
  const std::size_t dim = n + m - 1;
  const std::size_t pivot = m - 1;
  std::vector<std::vector<Position>> params(n * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& p = params[i * n + j];
      if (i == 0 && j == 0) {
        p = diagonal(dim);
      } else if (j == 0) {
        for (std::size_t r = 0; r + i <= pivot; ++r) p.push_back({r, r + i});
      } else if (i == 0) {
        for (std::size_t r = pivot; r + j < dim; ++r) p.push_back({r, r + j});
      } else {
        p.push_back({pivot - i, pivot + j});
      }
    }
  Provenance prov;
  prov.kind = Construction::SMatrix;
  prov.parts = {base};
  prov.params = {n, m};
  return pattern_ring(base, dim, std::move(params), "S(" + n_str(n) + ", " + n_str(m) + ", " + ring_name(base) + ")",
                      std::move(prov), caps);
}

Ring u_ring(std::size_t n, const Ring& base, const Caps& caps) {
  if (n < 2) throw InvalidArgument("U(n) requires n >= 2");
  std::vector<std::vector<Position>> params{diagonal(n)};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Position> p;
    for (std::size_t r = 0; r + k < n; r += 2) p.push_back({r, r + k});
    params.push_back(std::move(p));
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::vector<Position> p;
    for (std::size_t r = 1; r + k < n; r += 2) p.push_back({r, r + k});
    params.push_back(std::move(p));
  }
  Provenance prov;
  prov.kind = Construction::UMatrix;
  prov.parts = {base};
  prov.params = {n};
  return pattern_ring(base, n, std::move(params), "U(" + n_str(n) + ", " + ring_name(base) + ")", std::move(prov),
                      caps);
}

std::size_t matrix_dimension(const FiniteRing& ring) {
  const auto& prov = ring.provenance();
  switch (prov.kind) {
    case Construction::Matrix:
    case Construction::UpperTriangular:
      return prov.params[0];
    case Construction::TMatrix:
    case Construction::SMatrix:
    case Construction::UMatrix:
      return static_cast<const PatternMatrixStructure&>(*ring.structure()).dim();
    default:
      throw InvalidArgument("ring '" + ring.label() + "' is not a matrix ring");
  }
}

Index matrix_entry(const FiniteRing& ring, Index element, std::size_t row, std::size_t col) {
  const auto& prov = ring.provenance();
  const std::size_t n = matrix_dimension(ring);
  if (row >= n || col >= n) throw InvalidArgument("matrix position out of range");
  const auto digits = ring.digits(element);
  const Index zero = prov.parts[0]->zero();
  switch (prov.kind) {
    case Construction::Matrix:
      return digits[row * n + col];
    case Construction::UpperTriangular:
      return row <= col ? digits[triangular_slot(n, row, col)] : zero;
    default: {
      const int p = static_cast<const PatternMatrixStructure&>(*ring.structure()).owner(row, col);
      return p < 0 ? zero : digits[static_cast<std::size_t>(p)];
    }
  }
}

VerifiedIsomorphism verify_isomorphism(const Ring& source, const Ring& target, std::vector<Index> map,
                                       const Caps& caps) {
  const std::size_t n = source->size();
  if (target->size() != n || map.size() != n) throw VerificationFailed(0, 0, "sizes differ");
  std::vector<bool> hit(n, false);
  for (Index a = 0; a < n; ++a) {
    if (map[a] >= n || hit[map[a]]) throw VerificationFailed(a, a, "map is not bijective");
    hit[map[a]] = true;
  }
  if (map[source->one()] != target->one()) throw VerificationFailed(source->one(), source->one(), "1 is not mapped to 1");
  const Ring s = n <= caps.table ? materialize(source, caps.table) : source;
  const Ring t = n <= caps.table ? materialize(target, caps.table) : target;
  auto check = [&](Index a, Index b) {
    if (map[s->add(a, b)] != t->add(map[a], map[b])) throw VerificationFailed(a, b, "map is not additive");
    if (map[s->mul(a, b)] != t->mul(map[a], map[b])) throw VerificationFailed(a, b, "map is not multiplicative");
  };
  VerifiedIsomorphism out{source, target, {}, false, 0, caps.seed};
  if (n <= 4096) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) check(a, b);
    out.exhaustive = true;
    out.pairs = static_cast<std::uint64_t>(n) * n;
  } else {
    std::mt19937_64 rng(caps.seed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
    for (std::size_t i = 0; i < 100000; ++i) check(pick(rng), pick(rng));
    out.pairs = 100000;
  }
  out.map = std::move(map);
  return out;
}

VerifiedIsomorphism presented_iso(PresentedKind kind, std::size_t n, std::size_t m, const Ring& base, const Caps& caps) {
  Ring source, target;
  // digit_of[d] = source digit carried to target digit d
  std::vector<std::size_t> digit_of;
  switch (kind) {
    case PresentedKind::AtoT: {
      source = a_ring(n, m, base, caps);
      target = t_ring(n, m, base, caps);
      // a -> a, x^i -> b_i, y^j -> c_j
      digit_of.push_back(0);
      for (std::size_t i = 1; i < n; ++i) digit_of.push_back(i);
      for (std::size_t j = 1; j < m; ++j) digit_of.push_back(n - 1 + j);
      break;
    }
    case PresentedKind::BtoS: {
      source = b_ring(n, m, base, caps);
      target = s_ring(n, m, base, caps);
      // a_{ij} (coefficient of y^i x^j) -> the (i, j) entry of the grid
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) digit_of.push_back(i * n + j);
      break;
    }
    case PresentedKind::CtoU: {
      source = c_ring(n, base, caps);
      target = u_ring(n, base, caps);
      const auto words = c_basis(n);
      auto find = [&](char first, std::size_t length) {
        for (std::size_t i = 0; i < words.size(); ++i)
          if (words[i].first == first && words[i].length == length) return i;
        throw std::logic_error("missing basis word");
      };
      // empty word -> a, y-initial words -> b_k (even rows), x-initial -> c_k
      digit_of.push_back(0);
      for (std::size_t k = 1; k < n; ++k) digit_of.push_back(find('y', k));
      for (std::size_t k = 1; k + 1 < n; ++k) digit_of.push_back(find('x', k));
      break;
    }
  }
  const std::size_t size = source->size();
  std::vector<Index> map(size);
  for (Index f = 0; f < size; ++f) {
    const auto d = source->digits(f);
    std::vector<Index> img(digit_of.size());
    for (std::size_t t = 0; t < digit_of.size(); ++t) img[t] = d[digit_of[t]];
    map[f] = target->encode(img);
  }
  return verify_isomorphism(source, target, std::move(map), caps);
}

std::vector<std::vector<std::size_t>> ring_fingerprint(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  std::vector<std::vector<std::size_t>> out;
  for (Index a = 0; a < n; ++a) {
    // tail length and period of a, a^2, a^3, ...
    std::map<Index, std::size_t> seen;
    Index p = a;
    std::size_t k = 1;
    while (!seen.count(p)) {
      seen[p] = k++;
      p = ring.mul(p, a);
    }
    std::size_t centralizer = 0;
    for (Index x = 0; x < n; ++x) centralizer += ring.mul(a, x) == ring.mul(x, a);
    std::size_t left_annihilator = 0;
    for (Index x = 0; x < n; ++x) left_annihilator += ring.mul(x, a) == ring.zero();
    out.push_back({additive_order(ring, a), seen[p], k - seen[p], centralizer, left_annihilator,
                   static_cast<std::size_t>(p == ring.zero())});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Index>> brute_force_isomorphic(const Ring& r_in, const Ring& s_in) {
  if (r_in->size() > 16 || s_in->size() > 16) throw SizeCapExceeded(std::max(r_in->size(), s_in->size()), 16);
  if (r_in->size() != s_in->size()) return std::nullopt;
  const Ring r = materialize(r_in, 16);
  const Ring s = materialize(s_in, 16);
  const std::size_t n = r->size();
  if (ring_fingerprint(*r) != ring_fingerprint(*s)) return std::nullopt;

  auto invariant = [](const FiniteRing& ring, Index a) {
    std::vector<std::size_t> v{additive_order(ring, a)};
    Index p = a;
    for (int i = 0; i < 4; ++i) {
      p = ring.mul(p, a);
      v.push_back(p == a);
      v.push_back(p == ring.zero());
    }
    return v;
  };
  const std::vector<Index> gens = r->generators();
  constexpr Index kNone = static_cast<Index>(-1);

  // Extend a partial map by closing under + and *; false on conflict.
  auto close = [&](std::vector<Index>& map, std::vector<Index>& inverse) {
    bool grown = true;
    while (grown) {
      grown = false;
      for (Index a = 0; a < n; ++a) {
        if (map[a] == kNone) continue;
        for (Index b = 0; b < n; ++b) {
          if (map[b] == kNone) continue;
          const std::array<std::pair<Index, Index>, 2> derived{
              std::pair{r->add(a, b), s->add(map[a], map[b])}, std::pair{r->mul(a, b), s->mul(map[a], map[b])}};
          for (auto [x, y] : derived) {
            if (map[x] == kNone) {
              if (inverse[y] != kNone) return false;
              map[x] = y;
              inverse[y] = x;
              grown = true;
            } else if (map[x] != y) {
              return false;
            }
          }
        }
      }
    }
    return true;
  };

  std::optional<std::vector<Index>> found;
  std::vector<Index> image(gens.size());
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == gens.size()) {
      std::vector<Index> map(n, kNone), inverse(n, kNone);
      map[r->zero()] = s->zero();
      inverse[s->zero()] = r->zero();
      if (map[r->one()] != kNone && map[r->one()] != s->one()) return;
      map[r->one()] = s->one();
      inverse[s->one()] = r->one();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (map[gens[i]] == kNone && inverse[image[i]] == kNone) {
          map[gens[i]] = image[i];
          inverse[image[i]] = gens[i];
        } else if (map[gens[i]] != image[i]) {
          return;
        }
      }
      if (!close(map, inverse)) return;
      if (std::find(map.begin(), map.end(), kNone) != map.end()) return;
      found = map;
      return;
    }
    const auto want = invariant(*r, gens[depth]);
    for (Index c = 0; c < n && !found; ++c) {
      if (invariant(*s, c) != want) continue;
      image[depth] = c;
      self(self, depth + 1);
    }
  };
  search(search, 0);
  if (found) verify_isomorphism(r, s, *found);
  return found;
}

bool is_good_subring(const RingEmbedding& embedding) {
  const Subset sub_units = units(*embedding.sub).set;
  const Subset sup_units = units(*embedding.sup).set;
  for (Index a = 0; a < embedding.sub->size(); ++a)
    if (sub_units.contains(a) != sup_units.contains(embedding.map[a])) return false;
  return true;
}

RingEmbedding scalar_embedding(const Ring& ring) {
  const auto& prov = ring->provenance();
  if (prov.parts.empty()) throw InvalidArgument("ring '" + ring->label() + "' has no base ring");
  const Ring& base = prov.parts[0];
  std::vector<Index> map(base->size());
  switch (prov.kind) {
    case Construction::TrivialExtension: {
      for (Index r = 0; r < base->size(); ++r) {
        const std::array<Index, 2> d{r, prov.bimodule->zero_element()};
        map[r] = ring->encode(d);
      }
      break;
    }
    case Construction::Matrix:
    case Construction::UpperTriangular:
    case Construction::PolyQuotient:
    case Construction::GroupRing:
    case Construction::APresented:
    case Construction::BPresented:
    case Construction::CPresented:
    case Construction::TMatrix:
    case Construction::SMatrix:
    case Construction::UMatrix: {
      // 1 has coefficient 1 exactly on its support; scale that support by r
      const auto one = ring->digits(ring->one());
      for (Index r = 0; r < base->size(); ++r) {
        std::vector<Index> d(one.size(), base->zero());
        for (std::size_t i = 0; i < one.size(); ++i)
          if (one[i] == base->one()) d[i] = r;
        map[r] = ring->encode(d);
      }
      break;
    }
    default:
      throw InvalidArgument("ring '" + ring->label() + "' has no scalar embedding");
  }
  return make_embedding(base, ring, std::move(map));
}

RingEmbedding banded_embedding(const Ring& poly_ring, const Caps& caps) {
  const auto& prov = poly_ring->provenance();
  if (prov.kind != Construction::PolyQuotient) throw InvalidArgument("not a truncated polynomial ring");
  const Ring& base = prov.parts[0];
  const std::size_t n = prov.params[0];
  const Ring target = upper_triangular(n, base, caps);
  std::vector<Index> map(poly_ring->size());
  for (Index f = 0; f < poly_ring->size(); ++f) {
    const auto c = poly_ring->digits(f);
    std::vector<Index> d(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) d[triangular_slot(n, i, j)] = c[j - i];
    map[f] = target->encode(d);
  }
  return make_embedding(poly_ring, target, std::move(map));
}

std::vector<NamedEmbedding> registered_embeddings(const Ring& ring, const Caps& caps) {
  std::vector<NamedEmbedding> out;
  const auto& prov = ring->provenance();
  switch (prov.kind) {
    case Construction::Matrix:
    case Construction::UpperTriangular:
    case Construction::GroupRing:
    case Construction::TrivialExtension:
    case Construction::APresented:
    case Construction::BPresented:
    case Construction::CPresented:
    case Construction::TMatrix:
    case Construction::SMatrix:
    case Construction::UMatrix:
      out.push_back({"scalars", scalar_embedding(ring)});
      break;
    case Construction::PolyQuotient: {
      out.push_back({"constants", scalar_embedding(ring)});
      const Ring& base = prov.parts[0];
      const std::size_t n = prov.params[0];
      std::size_t tri = 1;
      bool fits = true;
      for (std::size_t i = 0; i < n * (n + 1) / 2 && fits; ++i) {
        tri *= base->size();
        fits = tri <= caps.table;
      }
      if (fits) out.push_back({"banded", banded_embedding(ring, caps)});
      break;
    }
    case Construction::FormalTriangular: {
      const Ring diag = product({prov.parts[0], prov.parts[1]}, caps);
      std::vector<Index> map(diag->size());
      for (Index x = 0; x < diag->size(); ++x) {
        const auto rs = diag->digits(x);
        const std::array<Index, 3> d{rs[0], prov.bimodule->zero_element(), rs[1]};
        map[x] = ring->encode(d);
      }
      out.push_back({"diagonal", make_embedding(diag, ring, std::move(map))});
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace uqring
