#include "charforge/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "charforge/error.hpp"
#include "charforge/numeric.hpp"

namespace charforge {

namespace {

std::uint64_t hash_points(std::span<const Point> images) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : images) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

std::vector<Point>& scratch(std::size_t degree) {
  thread_local std::vector<Point> buffer;
  buffer.resize(degree);
  return buffer;
}

}  // namespace

GroupPtr FiniteGroup::generate(std::size_t degree, std::vector<Permutation> generators,
                               std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidPermutation("generator " + g.to_cycle_string() + " has degree " +
                               std::to_string(g.degree()) + ", expected " +
                               std::to_string(degree));
    }
  }
  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  FiniteGroup& G = *group;
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  std::size_t slots = 64;
  auto rehash = [&G](std::size_t new_slots) {
    G.hash_slots_.assign(new_slots, 0);
    for (std::size_t e = 0; e < G.order_; ++e) {
      std::size_t s = G.slot_for(G.images(static_cast<ElementIndex>(e)));
      G.hash_slots_[s] = static_cast<ElementIndex>(e + 1);
    }
  };
  G.hash_slots_.assign(slots, 0);

  auto insert = [&](std::span<const Point> images, ElementIndex parent,
                    std::uint32_t gen) -> ElementIndex {
    std::size_t s = G.slot_for(images);
    if (G.hash_slots_[s] != 0) return G.hash_slots_[s] - 1;
    if (G.order_ >= cap) throw ClosureTooLarge(cap);
    G.points_.insert(G.points_.end(), images.begin(), images.end());
    auto e = static_cast<ElementIndex>(G.order_++);
    G.bfs_parent_.push_back(parent);
    G.bfs_generator_.push_back(gen);
    if (2 * G.order_ > G.hash_slots_.size()) {
      rehash(G.hash_slots_.size() * 2);
    } else {
      G.hash_slots_[s] = e + 1;
    }
    return e;
  };

  {
    auto id = Permutation::identity(degree);
    insert(id.images(), 0, 0);
  }
  std::vector<Point> next(degree);
  for (std::size_t e = 0; e < G.order_; ++e) {
    for (std::uint32_t j = 0; j < G.generators_.size(); ++j) {
      auto src = G.images(static_cast<ElementIndex>(e));
      const auto gen = G.generators_[j].images();
      for (std::size_t x = 0; x < degree; ++x) next[x] = gen[src[x]];
      insert(next, static_cast<ElementIndex>(e), j);
    }
  }

  for (const auto& g : G.generators_) G.generator_indices_.push_back(*G.find(g.images()));

  G.inverse_.resize(G.order_);
  G.orders_.resize(G.order_);
  for (std::size_t e = 0; e < G.order_; ++e) {
    auto src = G.images(static_cast<ElementIndex>(e));
    for (std::size_t x = 0; x < degree; ++x) next[src[x]] = static_cast<Point>(x);
    G.inverse_[e] = *G.find(next);
    G.orders_[e] = static_cast<std::uint32_t>(G.element(static_cast<ElementIndex>(e)).order());
  }

  if (G.order_ <= kCayleyTableLimit) {
    G.table_.resize(G.order_ * G.order_);
    for (std::size_t a = 0; a < G.order_; ++a) {
      for (std::size_t b = 0; b < G.order_; ++b) {
        G.table_[a * G.order_ + b] = static_cast<std::uint16_t>(
            G.compose_lookup(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)));
      }
    }
  }
  G.build_classes();
  return group;
}

std::size_t FiniteGroup::slot_for(std::span<const Point> images) const {
  const std::size_t mask = hash_slots_.size() - 1;
  std::size_t s = hash_points(images) & mask;
  while (true) {
    ElementIndex v = hash_slots_[s];
    if (v == 0) return s;
    auto stored = this->images(v - 1);
    if (std::equal(stored.begin(), stored.end(), images.begin(), images.end())) return s;
    s = (s + 1) & mask;
  }
}

std::optional<ElementIndex> FiniteGroup::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  ElementIndex v = hash_slots_[slot_for(images)];
  if (v == 0) return std::nullopt;
  return v - 1;
}

Permutation FiniteGroup::element(ElementIndex e) const {
  auto im = images(e);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

ElementIndex FiniteGroup::compose_lookup(ElementIndex a, ElementIndex b) const {
  auto& buf = scratch(degree_);
  auto ia = images(a);
  auto ib = images(b);
  for (std::size_t x = 0; x < degree_; ++x) buf[x] = ib[ia[x]];
  return hash_slots_[slot_for(buf)] - 1;
}

ElementIndex FiniteGroup::mult(ElementIndex a, ElementIndex b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  return compose_lookup(a, b);
}

ElementIndex FiniteGroup::power(ElementIndex a, std::uint64_t k) const {
  ElementIndex result = 0;
  ElementIndex base = a;
  while (k > 0) {
    if (k & 1) result = mult(result, base);
    base = mult(base, base);
    k >>= 1;
  }
  return result;
}

void FiniteGroup::build_classes() {
  ConjugacyClassSet& cc = classes_;
  constexpr ClassIndex kUnassigned = ~ClassIndex{0};
  cc.class_of.assign(order_, kUnassigned);
  std::vector<ElementIndex> orbit;
  for (std::size_t start = 0; start < order_; ++start) {
    if (cc.class_of[start] != kUnassigned) continue;
    auto c = static_cast<ClassIndex>(cc.representatives.size());
    orbit.assign(1, static_cast<ElementIndex>(start));
    cc.class_of[start] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElementIndex g : generator_indices_) {
        ElementIndex y = conjugate(orbit[i], g);
        if (cc.class_of[y] == kUnassigned) {
          cc.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.representatives.push_back(static_cast<ElementIndex>(start));
    cc.sizes.push_back(orbit.size());
    cc.rep_orders.push_back(orders_[start]);
    cc.members.push_back(orbit);
  }
  cc.inverse_class.resize(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) {
    cc.inverse_class[c] = cc.class_of[inverse_[cc.representatives[c]]];
  }
}

// ---------------------------------------------------------------------------
// Subgroup

struct Subgroup::Structure {
  std::once_flag once;
  std::vector<ElementIndex> generators;
  GroupPtr group;
  std::vector<ElementIndex> to_parent;
  std::vector<ElementIndex> to_local;
};

namespace {

/// Closure of `seed` under right multiplication by `gens`, extending `in_set`.
void extend_closure(const FiniteGroup& g, std::vector<ElementIndex>& elements,
                    std::vector<bool>& in_set, std::span<const ElementIndex> gens) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (ElementIndex t : gens) {
      ElementIndex y = g.mult(elements[i], t);
      if (!in_set[y]) {
        in_set[y] = true;
        elements.push_back(y);
      }
    }
  }
}

/// Greedy generating set: members are scanned in order and kept when they
/// are not yet in the closure of the earlier picks.
std::vector<ElementIndex> greedy_generators(const FiniteGroup& g,
                                            std::span<const ElementIndex> candidates,
                                            std::vector<ElementIndex>* closure_out) {
  std::vector<bool> in_set(g.order(), false);
  std::vector<ElementIndex> closure{0};
  in_set[0] = true;
  std::vector<ElementIndex> gens;
  for (ElementIndex c : candidates) {
    if (in_set[c]) continue;
    gens.push_back(c);
    extend_closure(g, closure, in_set, gens);
  }
  if (closure_out) *closure_out = std::move(closure);
  return gens;
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementIndex> members)
    : parent_(std::move(parent)), members_(std::move(members)),
      structure_(std::make_shared<Structure>()) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != 0) {
    throw UsageError("subgroup member list must contain the identity");
  }
  if (members_.back() >= parent_->order()) throw UsageError("subgroup member index out of range");
  std::vector<ElementIndex> closure;
  structure_->generators = greedy_generators(*parent_, members_, &closure);
  if (closure.size() != members_.size()) {
    throw UsageError("element set is not closed under multiplication");
  }
  in_subgroup_.assign(parent_->order(), false);
  for (ElementIndex e : members_) in_subgroup_[e] = true;
}

const GroupPtr& Subgroup::as_group() const {
  std::call_once(structure_->once, [this] {
    std::vector<Permutation> perms;
    for (ElementIndex e : structure_->generators) perms.push_back(parent_->element(e));
    auto local = FiniteGroup::generate(parent_->degree(), std::move(perms),
                                       std::max(members_.size(), kDefaultClosureCap));
    structure_->to_parent.resize(local->order());
    structure_->to_local.assign(parent_->order(), ~ElementIndex{0});
    for (std::size_t e = 0; e < local->order(); ++e) {
      ElementIndex p = *parent_->find(local->images(static_cast<ElementIndex>(e)));
      structure_->to_parent[e] = p;
      structure_->to_local[p] = static_cast<ElementIndex>(e);
    }
    structure_->group = std::move(local);
  });
  return structure_->group;
}

ElementIndex Subgroup::to_parent(ElementIndex local) const {
  as_group();
  return structure_->to_parent[local];
}

ElementIndex Subgroup::to_local(ElementIndex parent_element) const {
  as_group();
  ElementIndex v = structure_->to_local[parent_element];
  if (v == ~ElementIndex{0}) throw SubgroupMismatch("element is not a member of the subgroup");
  return v;
}

// ---------------------------------------------------------------------------
// Structural queries

const ConjugacyClassSet& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<ElementIndex> all(g->order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const ElementIndex> elements) {
  std::vector<ElementIndex> closure;
  std::vector<ElementIndex> sorted(elements.begin(), elements.end());
  for (ElementIndex e : sorted) {
    if (e >= g->order()) throw UsageError("element index out of range");
  }
  greedy_generators(*g, sorted, &closure);
  return Subgroup(g, std::move(closure));
}

Subgroup center(const GroupPtr& g) {
  std::vector<ElementIndex> members;
  for (std::size_t e = 0; e < g->order(); ++e) {
    auto x = static_cast<ElementIndex>(e);
    bool central = std::all_of(g->generator_indices().begin(), g->generator_indices().end(),
                               [&](ElementIndex t) { return g->mult(x, t) == g->mult(t, x); });
    if (central) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

Subgroup normal_closure(const GroupPtr& g, std::span<const ElementIndex> elements) {
  std::vector<ElementIndex> gens(elements.begin(), elements.end());
  while (true) {
    Subgroup h = subgroup_generated(g, gens);
    std::vector<ElementIndex> missing;
    for (ElementIndex t : gens) {
      for (ElementIndex s : g->generator_indices()) {
        ElementIndex y = g->conjugate(t, s);
        if (!h.contains(y)) missing.push_back(y);
      }
    }
    if (missing.empty()) return h;
    gens.insert(gens.end(), missing.begin(), missing.end());
  }
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<ElementIndex> commutators;
  auto gens = g->generator_indices();
  for (ElementIndex a : gens) {
    for (ElementIndex b : gens) {
      ElementIndex c = g->mult(g->mult(g->inverse(a), g->inverse(b)), g->mult(a, b));
      if (c != 0) commutators.push_back(c);
    }
  }
  return normal_closure(g, commutators);
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementIndex t : h.members()) {
    for (ElementIndex s : g.generator_indices()) {
      if (!h.contains(g.conjugate(t, s))) return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> p_group_prime(const FiniteGroup& g) {
  auto f = factorize(g.order());
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

std::vector<Subgroup> maximal_subgroups_index_p(const GroupPtr& g) {
  if (g->order() == 1) return {};
  auto prime = p_group_prime(*g);
  if (!prime) throw NotPGroup("group of order " + std::to_string(g->order()) + " is not a p-group");
  const std::uint64_t p = *prime;
  const std::size_t k = g->generators().size();

  std::vector<Subgroup> result;
  std::vector<std::uint64_t> images(k, 0);
  std::vector<std::uint64_t> value(g->order());
  // Enumerate generator images in (Z/p)^k with the leading nonzero entry
  // equal to 1; each surviving assignment is one homomorphism onto C_p up to
  // automorphisms of C_p, hence one kernel.
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      images[i] = c % p;
      c /= p;
    }
    auto lead = std::find_if(images.begin(), images.end(), [](auto v) { return v != 0; });
    if (*lead != 1) continue;
    value[0] = 0;
    for (std::size_t e = 1; e < g->order(); ++e) {
      auto x = static_cast<ElementIndex>(e);
      value[e] = (value[g->bfs_parent(x)] + images[g->bfs_generator(x)]) % p;
    }
    bool homomorphism = true;
    for (std::size_t e = 0; e < g->order() && homomorphism; ++e) {
      for (std::size_t j = 0; j < k; ++j) {
        ElementIndex y = g->mult(static_cast<ElementIndex>(e), g->generator_indices()[j]);
        if (value[y] != (value[e] + images[j]) % p) {
          homomorphism = false;
          break;
        }
      }
    }
    if (!homomorphism) continue;
    std::vector<ElementIndex> kernel;
    for (std::size_t e = 0; e < g->order(); ++e) {
      if (value[e] == 0) kernel.push_back(static_cast<ElementIndex>(e));
    }
    result.emplace_back(g, std::move(kernel));
  }
  std::sort(result.begin(), result.end());
  return result;
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g) throw SubgroupMismatch("normal subgroup belongs to a different group");
  if (!is_normal(*g, n)) throw NotNormal("subgroup is not normal");
  constexpr ElementIndex kUnassigned = ~ElementIndex{0};
  std::vector<ElementIndex> coset_of(g->order(), kUnassigned);
  std::vector<ElementIndex> coset_rep;
  for (std::size_t e = 0; e < g->order(); ++e) {
    if (coset_of[e] != kUnassigned) continue;
    auto id = static_cast<ElementIndex>(coset_rep.size());
    coset_rep.push_back(static_cast<ElementIndex>(e));
    for (ElementIndex m : n.members()) coset_of[g->mult(m, static_cast<ElementIndex>(e))] = id;
  }
  const std::size_t index = coset_rep.size();
  std::vector<Permutation> qgens;
  for (ElementIndex s : g->generator_indices()) {
    std::vector<Point> im(index);
    for (std::size_t c = 0; c < index; ++c) im[c] = coset_of[g->mult(coset_rep[c], s)];
    qgens.emplace_back(std::move(im));
  }
  Quotient q;
  q.source = g;
  q.group = FiniteGroup::generate(index, std::move(qgens), std::max(index, kDefaultClosureCap));
  q.projection.assign(g->order(), 0);
  for (std::size_t e = 1; e < g->order(); ++e) {
    auto x = static_cast<ElementIndex>(e);
    q.projection[e] = q.group->mult(q.projection[g->bfs_parent(x)],
                                    q.group->generator_indices()[g->bfs_generator(x)]);
  }
  return q;
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t result = 1;
  for (std::size_t e = 0; e < g.order(); ++e) {
    result = std::lcm(result, std::uint64_t{g.element_order(static_cast<ElementIndex>(e))});
  }
  return result;
}

std::uint32_t element_order(const FiniteGroup& g, ElementIndex e) { return g.element_order(e); }

std::vector<SylowFactor> sylow_decomposition(const GroupPtr& g) {
  std::vector<SylowFactor> factors;
  for (auto [q, a] : factorize(g->order())) {
    std::uint64_t q_part = 1;
    for (unsigned i = 0; i < a; ++i) q_part *= q;
    std::vector<ElementIndex> q_elements;
    for (std::size_t e = 0; e < g->order(); ++e) {
      std::uint64_t o = g->element_order(static_cast<ElementIndex>(e));
      while (o % q == 0) o /= q;
      if (o == 1) q_elements.push_back(static_cast<ElementIndex>(e));
    }
    if (q_elements.size() != q_part) {
      throw NotNilpotent("elements of " + std::to_string(q) + "-power order number " +
                         std::to_string(q_elements.size()) + ", not " + std::to_string(q_part));
    }
    Subgroup s = subgroup_generated(g, q_elements);
    if (s.order() != q_part) {
      throw NotNilpotent("elements of " + std::to_string(q) + "-power order do not form a subgroup");
    }
    factors.push_back({q, std::move(s)});
  }
  return factors;
}

bool is_nilpotent(const GroupPtr& g) {
  try {
    sylow_decomposition(g);
    return true;
  } catch (const NotNilpotent&) {
    return false;
  }
}

}  // namespace charforge
