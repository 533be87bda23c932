#include "uqring/ring.hpp"

#include <deque>
#include <random>

namespace uqring {

MixedRadix::MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  total_ = 1;
  for (std::size_t r : radices_) total_ *= r;
}

void MixedRadix::decode(Index index, std::span<Index> out) const {
  std::size_t rest = index;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    out[i] = static_cast<Index>(rest % radices_[i]);
    rest /= radices_[i];
  }
}

std::vector<Index> MixedRadix::decode(Index index) const {
  std::vector<Index> out(radices_.size());
  decode(index, out);
  return out;
}

Index MixedRadix::encode(std::span<const Index> digits) const {
  std::size_t index = 0;
  for (std::size_t i = radices_.size(); i-- > 0;) index = index * radices_[i] + digits[i];
  return static_cast<Index>(index);
}

FiniteRing::FiniteRing(Token, std::size_t size, Index zero, Index one, std::string label)
    : size_(size), zero_(zero), one_(one), label_(std::move(label)) {}

Index FiniteRing::pow(Index a, std::uint64_t k) const {
  Index result = one_;
  Index base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Index FiniteRing::times(Index a, std::uint64_t k) const {
  Index result = zero_;
  Index base = a;
  while (k > 0) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

Index FiniteRing::integer(long long k) const {
  Index v = times(one_, static_cast<std::uint64_t>(k < 0 ? -k : k));
  return k < 0 ? neg(v) : v;
}

std::vector<Index> FiniteRing::digits(Index a) const {
  if (!radix_) throw InvalidArgument("ring '" + label_ + "' has no coordinates");
  return radix_->decode(a);
}

Index FiniteRing::encode(std::span<const Index> digits) const {
  if (!radix_) throw InvalidArgument("ring '" + label_ + "' has no coordinates");
  return radix_->encode(digits);
}

const std::vector<Index>& FiniteRing::generators() const {
  std::call_once(generators_once_, [this] {
    std::vector<Index> gens;
    Subset covered = subring_generated(*this, gens);
    for (Index a = 0; a < size_; ++a) {
      if (covered.contains(a)) continue;
      gens.push_back(a);
      covered = subring_generated(*this, gens);
    }
    generators_ = std::move(gens);
  });
  return generators_;
}

namespace {

void check_table(std::size_t size, const std::vector<Index>& table, const char* name) {
  if (table.size() != size * size)
    throw InvalidArgument(std::string(name) + " table must have size*size entries");
  for (Index v : table)
    if (v >= size) throw InvalidArgument(std::string(name) + " table has an entry out of range");
}

[[noreturn]] void violation(const char* axiom, std::size_t a, std::size_t b, std::size_t c) {
  throw AxiomViolation(axiom, {a, b, c},
                       std::string(axiom) + " fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                           std::to_string(c) + ")");
}

// Per-element laws: identities, inverses, commutativity of +.
void check_unary_laws(const FiniteRing& r) {
  const std::size_t n = r.size();
  for (Index a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a || r.add(r.zero(), a) != a) violation("additive-identity", a, 0, 0);
    if (r.add(a, r.neg(a)) != r.zero()) violation("additive-inverse", a, 0, 0);
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) violation("multiplicative-identity", a, 0, 0);
  }
}

void check_triple(const FiniteRing& r, Index a, Index b, Index c) {
  const Index ab = r.mul(a, b);
  const Index apb = r.add(a, b);
  if (r.add(apb, c) != r.add(a, r.add(b, c))) violation("additive-associativity", a, b, c);
  if (r.mul(ab, c) != r.mul(a, r.mul(b, c))) violation("associativity", a, b, c);
  if (r.mul(a, r.add(b, c)) != r.add(ab, r.mul(a, c))) violation("left-distributivity", a, b, c);
  if (r.mul(apb, c) != r.add(r.mul(a, c), r.mul(b, c))) violation("right-distributivity", a, b, c);
}

// Exhaustive triple scan over dense tables; fast path for table rings.
void check_all_triples(std::size_t n, const std::vector<std::uint16_t>& add, const std::vector<std::uint16_t>& mul) {
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint16_t* add_a = &add[a * n];
    const std::uint16_t* mul_a = &mul[a * n];
    for (std::size_t b = 0; b < n; ++b) {
      if (add_a[b] != add[b * n + a]) violation("additive-commutativity", a, b, 0);
      const std::uint16_t* add_ab = &add[static_cast<std::size_t>(add_a[b]) * n];
      const std::uint16_t* mul_ab = &mul[static_cast<std::size_t>(mul_a[b]) * n];
      const std::uint16_t* add_b = &add[b * n];
      const std::uint16_t* mul_b = &mul[b * n];
      for (std::size_t c = 0; c < n; ++c) {
        if (add_ab[c] != add_a[add_b[c]]) violation("additive-associativity", a, b, c);
        if (mul_ab[c] != mul_a[mul_b[c]]) violation("associativity", a, b, c);
        if (mul_a[add_b[c]] != add[static_cast<std::size_t>(mul_a[b]) * n + mul_a[c]])
          violation("left-distributivity", a, b, c);
        if (mul[static_cast<std::size_t>(add_a[b]) * n + c] != add[static_cast<std::size_t>(mul_a[c]) * n + mul_b[c]])
          violation("right-distributivity", a, b, c);
      }
    }
  }
}

void build_tables(const FiniteRing& r, std::vector<std::uint16_t>& add, std::vector<std::uint16_t>& mul,
                  std::vector<std::uint16_t>& neg) {
  const std::size_t n = r.size();
  add.resize(n * n);
  mul.resize(n * n);
  neg.resize(n);
  for (Index a = 0; a < n; ++a) {
    neg[a] = static_cast<std::uint16_t>(r.neg(a));
    for (Index b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(r.add(a, b));
      mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(r.mul(a, b));
    }
  }
}

}  // namespace

AxiomCheck verify_axioms(const FiniteRing& ring, const Caps& caps) {
  const std::size_t n = ring.size();
  check_unary_laws(ring);
  AxiomCheck report;
  report.seed = caps.seed;
  if (n <= caps.axiom) {
    std::vector<std::uint16_t> add, mul, neg;
    build_tables(ring, add, mul, neg);
    check_all_triples(n, add, mul);
    report.exhaustive = true;
    report.triples = static_cast<std::uint64_t>(n) * n * n;
    return report;
  }
  std::mt19937_64 rng(caps.seed);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  for (std::size_t i = 0; i < caps.axiom_samples; ++i) {
    const Index a = pick(rng), b = pick(rng), c = pick(rng);
    if (ring.add(a, b) != ring.add(b, a)) violation("additive-commutativity", a, b, 0);
    check_triple(ring, a, b, c);
  }
  report.triples = caps.axiom_samples;
  return report;
}

Ring make_ring(std::size_t size, std::vector<Index> add, std::vector<Index> mul, Index zero, Index one,
               std::string label, const Caps& caps, Provenance provenance) {
  if (size == 0) throw InvalidArgument("ring size must be positive");
  if (size == 1) throw ZeroRing();
  if (size > 65536) throw SizeCapExceeded(size, 65536);
  check_table(size, add, "add");
  check_table(size, mul, "mul");
  if (zero >= size || one >= size) throw InvalidArgument("zero/one index out of range");

  auto ring = std::make_shared<FiniteRing>(FiniteRing::Token{}, size, zero, one, std::move(label));
  ring->tabled_ = true;
  ring->add_.assign(add.begin(), add.end());
  ring->mul_.assign(mul.begin(), mul.end());
  ring->neg_.assign(size, 0);
  for (Index a = 0; a < size; ++a) {
    bool found = false;
    for (Index b = 0; b < size; ++b) {
      if (add[static_cast<std::size_t>(a) * size + b] == zero) {
        ring->neg_[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    }
    if (!found) violation("additive-inverse", a, 0, 0);
  }
  ring->provenance_ = std::move(provenance);
  check_unary_laws(*ring);
  if (size <= caps.axiom) {
    check_all_triples(size, ring->add_, ring->mul_);
    ring->axioms_ = {true, static_cast<std::uint64_t>(size) * size * size, caps.seed};
  } else {
    ring->axioms_ = verify_axioms(*ring, caps);
  }
  return ring;
}

Ring make_structured_ring(std::shared_ptr<const RingStructure> structure, std::string label, Provenance provenance,
                          const Caps& caps) {
  const std::size_t size = structure->size();
  if (size == 1) throw ZeroRing();
  if (size > caps.structure || size > 65536) throw SizeCapExceeded(size, std::min<std::size_t>(caps.structure, 65536));
  auto ring = std::make_shared<FiniteRing>(FiniteRing::Token{}, size, structure->zero(), structure->one(),
                                           std::move(label));
  if (const MixedRadix* radix = structure->coordinates()) ring->radix_ = *radix;
  ring->structure_ = std::move(structure);
  ring->provenance_ = std::move(provenance);
  ring->axioms_ = verify_axioms(*ring, caps);
  return ring;
}

Ring materialize(const Ring& ring, std::size_t cap) {
  if (ring->backend() == Backend::Table) return ring;
  if (ring->size() > cap) throw SizeCapExceeded(ring->size(), cap);
  auto out = std::make_shared<FiniteRing>(FiniteRing::Token{}, ring->size(), ring->zero(), ring->one(), ring->label());
  build_tables(*ring, out->add_, out->mul_, out->neg_);
  out->tabled_ = true;
  out->structure_ = ring->structure_;
  out->radix_ = ring->radix_;
  out->provenance_ = ring->provenance_;
  out->axioms_ = ring->axioms_;
  return out;
}

Element::Element(Ring ring, Index index) : ring_(std::move(ring)), index_(index) {
  if (index_ >= ring_->size()) throw InvalidArgument("element index out of range");
}

namespace {
const FiniteRing& common(const Element& a, const Element& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
  return *a.ring();
}
}  // namespace

Element operator+(const Element& a, const Element& b) { return {a.ring_, common(a, b).add(a.index_, b.index_)}; }
Element operator-(const Element& a, const Element& b) { return {a.ring_, common(a, b).sub(a.index_, b.index_)}; }
Element operator*(const Element& a, const Element& b) { return {a.ring_, common(a, b).mul(a.index_, b.index_)}; }
Element operator-(const Element& a) { return {a.ring_, a.ring_->neg(a.index_)}; }

Element pow(const Element& a, std::uint64_t k) { return {a.ring(), a.ring()->pow(a.index(), k)}; }

Subset center(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  Subset out(n);
  for (Index a = 0; a < n; ++a) {
    bool central = true;
    for (Index x = 0; x < n && central; ++x) central = ring.mul(a, x) == ring.mul(x, a);
    if (central) out.insert(a);
  }
  return out;
}

Subset commutant(const FiniteRing& ring, Index a) {
  const std::size_t n = ring.size();
  Subset out(n);
  for (Index x = 0; x < n; ++x)
    if (ring.mul(a, x) == ring.mul(x, a)) out.insert(x);
  return out;
}

Index additive_order(const FiniteRing& ring, Index a) {
  Index k = 1;
  for (Index m = a; m != ring.zero(); m = ring.add(m, a)) ++k;
  return k;
}

AdditiveSpan::AdditiveSpan(const FiniteRing& ring) : ring_(&ring), set_(ring.size()) {
  set_.insert(ring.zero());
  members_.push_back(ring.zero());
}

std::vector<Index> AdditiveSpan::join(Index z) {
  std::vector<Index> added;
  if (set_.contains(z)) return added;
  std::vector<Index> multiples;
  for (Index m = z; !set_.contains(m); m = ring_->add(m, z)) multiples.push_back(m);
  const std::size_t existing = members_.size();
  for (Index m : multiples) {
    for (std::size_t i = 0; i < existing; ++i) {
      const Index s = ring_->add(members_[i], m);
      if (!set_.contains(s)) {
        set_.insert(s);
        members_.push_back(s);
        added.push_back(s);
      }
    }
  }
  return added;
}

Subset subring_generated(const FiniteRing& ring, std::span<const Index> gens) {
  AdditiveSpan span(ring);
  std::deque<Index> queue;
  auto push = [&](Index z) {
    for (Index a : span.join(z)) queue.push_back(a);
  };
  push(ring.one());
  for (Index g : gens) push(g);
  while (!queue.empty()) {
    const Index s = queue.front();
    queue.pop_front();
    for (Index g : gens) push(ring.mul(s, g));
  }
  return span.set();
}

Subset ideal_closure(const FiniteRing& ring, std::span<const Index> seeds) {
  const auto& gens = ring.generators();
  AdditiveSpan span(ring);
  std::deque<Index> queue;
  auto push = [&](Index z) {
    for (Index a : span.join(z)) queue.push_back(a);
  };
  for (Index s : seeds) push(s);
  while (!queue.empty()) {
    const Index s = queue.front();
    queue.pop_front();
    for (Index g : gens) {
      push(ring.mul(s, g));
      push(ring.mul(g, s));
    }
  }
  return span.set();
}

std::vector<Index> additive_generators(const FiniteRing& ring, const Subset& s) {
  AdditiveSpan span(ring);
  std::vector<Index> gens;
  for (Index a : s.members()) {
    if (span.set().contains(a)) continue;
    gens.push_back(a);
    span.join(a);
  }
  return gens;
}

}  // namespace uqring
