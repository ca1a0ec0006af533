#include "charforge/charops.hpp"

#include <algorithm>

#include "charforge/error.hpp"

namespace charforge {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->classes().count()) {
    throw UsageError("class function has " + std::to_string(values_.size()) + " values for " +
                     std::to_string(group_->classes().count()) + " classes");
  }
}

ClassFunction ClassFunction::from_row(const CharacterTable& table, std::size_t row) {
  if (row >= table.size()) {
    throw RowOutOfRange("row " + std::to_string(row) + " outside table of " +
                        std::to_string(table.size()) + " rows");
  }
  auto r = table.row(row);
  return ClassFunction(table.group(), std::vector<Cyclotomic>(r.begin(), r.end()));
}

ClassFunction ClassFunction::trivial(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Cyclotomic>(group->classes().count(), Cyclotomic(1)));
}

std::uint64_t ClassFunction::degree() const {
  Rational d;
  try {
    d = values_[0].as_rational();
  } catch (const NotRational&) {
    throw NotACharacter("value at the identity is not rational");
  }
  if (d <= 0 || d.get_den() != 1) throw NotACharacter("value at the identity is not a positive integer");
  return d.get_num().get_ui();
}

namespace {

void require_same_group(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group()) throw GroupMismatch("class functions live on different groups");
}

/// |G| <f, g> as a cyclotomic, using conj(g(c)) only.
Cyclotomic weighted_sum(const ClassFunction& f, std::span<const Cyclotomic> g_conj_by_class) {
  const auto& cc = f.group()->classes();
  Cyclotomic acc;
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const auto& a = f[static_cast<ClassIndex>(c)];
    const auto& b = g_conj_by_class[c];
    if (a.is_zero() || b.is_zero()) continue;
    acc += (a * b) * Rational(static_cast<long>(cc.sizes[c]));
  }
  return acc;
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> v(a.values_.size());
  for (std::size_t c = 0; c < v.size(); ++c) v[c] = a.values_[c] + b.values_[c];
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction operator*(const ClassFunction& a, const Rational& s) {
  std::vector<Cyclotomic> v = a.values_;
  for (auto& x : v) x *= s;
  return ClassFunction(a.group_, std::move(v));
}

ClassFunction product(const ClassFunction& f, const ClassFunction& g) {
  require_same_group(f, g);
  std::vector<Cyclotomic> v(f.values().size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    const auto& a = f.values()[c];
    const auto& b = g.values()[c];
    if (!a.is_zero() && !b.is_zero()) v[c] = a * b;
  }
  return ClassFunction(f.group(), std::move(v));
}

ClassFunction conjugate_char(const ClassFunction& f) {
  std::vector<Cyclotomic> v;
  v.reserve(f.values().size());
  for (const auto& x : f.values()) v.push_back(x.conjugate());
  return ClassFunction(f.group(), std::move(v));
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_same_group(f, g);
  std::vector<Cyclotomic> conj;
  conj.reserve(g.values().size());
  for (const auto& x : g.values()) conj.push_back(x.conjugate());
  Cyclotomic total = weighted_sum(f, conj);
  return total.as_rational() / Rational(static_cast<long>(f.group()->order()));
}

Decomposition decompose(const ClassFunction& f, const CharacterTable& table) {
  if (f.group() != table.group()) throw GroupMismatch("class function and table belong to different groups");
  const auto& cc = table.classes();
  const Rational order(static_cast<long>(table.group()->order()));
  Decomposition d;
  std::vector<Cyclotomic> conj(cc.count());
  Rational degree_check = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    // conj(theta(c)) = theta(c^-1) for a character theta.
    for (std::size_t c = 0; c < cc.count(); ++c) conj[c] = table.value(i, cc.inverse_class[c]);
    Cyclotomic total = weighted_sum(f, conj);
    if (!total.is_rational()) {
      throw NotACharacter("inner product with row " + std::to_string(i) + " is not rational");
    }
    Rational m = total.as_rational() / order;
    if (m < 0 || m.get_den() != 1) {
      throw NotACharacter("multiplicity of row " + std::to_string(i) + " is " + m.get_str());
    }
    if (m != 0) {
      d.constituents.push_back({i, m.get_num().get_ui()});
      degree_check += m * Rational(static_cast<long>(table.degree(i)));
    }
  }
  if (Cyclotomic(degree_check) != f[0]) {
    throw NotACharacter("constituent degrees do not add up to the value at the identity");
  }
  return d;
}

ClassFunction recompose(const Decomposition& d, const CharacterTable& table) {
  std::vector<Cyclotomic> v(table.classes().count());
  for (const auto& c : d.constituents) {
    const Rational m(static_cast<long>(c.multiplicity));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += table.value(c.row, k) * m;
  }
  return ClassFunction(table.group(), std::move(v));
}

ClassFunction induce(const GroupPtr& g, const Subgroup& h, const ClassFunction& f) {
  if (h.parent() != g) throw SubgroupMismatch("subgroup does not belong to the group");
  const GroupPtr& local = h.as_group();
  if (f.group() != local) throw SubgroupMismatch("class function does not live on the subgroup");
  const auto& cc = g->classes();
  const auto& lc = local->classes();
  std::vector<Cyclotomic> v(cc.count());
  // f^G(x) = |C_G(x)| / |H| * sum of f over C_G(x) meet H.
  for (std::size_t c = 0; c < cc.count(); ++c) {
    Cyclotomic acc;
    for (ElementIndex y : cc.members[c]) {
      if (!h.contains(y)) continue;
      acc += f[lc.class_of[h.to_local(y)]];
    }
    if (acc.is_zero()) continue;
    Rational scale(static_cast<long>(g->order()),
                   static_cast<long>(h.order() * cc.sizes[c]));
    scale.canonicalize();
    v[c] = acc * scale;
  }
  return ClassFunction(g, std::move(v));
}

ClassFunction restrict(const ClassFunction& f, const Subgroup& h) {
  if (h.parent() != f.group()) throw SubgroupMismatch("subgroup does not belong to the function's group");
  const GroupPtr& local = h.as_group();
  const auto& lc = local->classes();
  std::vector<Cyclotomic> v(lc.count());
  for (std::size_t d = 0; d < lc.count(); ++d) v[d] = f.at_element(h.to_parent(lc.representatives[d]));
  return ClassFunction(local, std::move(v));
}

Subgroup kernel(const ClassFunction& f) {
  const auto& G = *f.group();
  std::vector<ElementIndex> members;
  for (std::size_t e = 0; e < G.order(); ++e) {
    if (f.at_element(static_cast<ElementIndex>(e)) == f[0]) members.push_back(static_cast<ElementIndex>(e));
  }
  return Subgroup(f.group(), std::move(members));
}

Subgroup character_center(const ClassFunction& f) {
  const auto& G = *f.group();
  const auto& cc = G.classes();
  const Cyclotomic target = f[0] * f[0];
  std::vector<bool> central_class(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) {
    central_class[c] = f[static_cast<ClassIndex>(c)] * f[static_cast<ClassIndex>(c)].conjugate() == target;
  }
  std::vector<ElementIndex> members;
  for (std::size_t e = 0; e < G.order(); ++e) {
    if (central_class[cc.class_of[e]]) members.push_back(static_cast<ElementIndex>(e));
  }
  return Subgroup(f.group(), std::move(members));
}

bool is_faithful(const ClassFunction& f) { return kernel(f).is_trivial(); }

ClassFunction lift_character(const Quotient& q, const ClassFunction& theta) {
  if (theta.group() != q.group) throw GroupMismatch("character does not live on the quotient");
  const auto& cc = q.source->classes();
  std::vector<Cyclotomic> v(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) v[c] = theta.at_element(q.projection[cc.representatives[c]]);
  return ClassFunction(q.source, std::move(v));
}

std::vector<ClassFunction> linear_characters(const GroupPtr& g) {
  Quotient q = quotient_group(g, derived_subgroup(g));
  CharacterTable t = character_table(q.group);
  std::vector<ClassFunction> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(lift_character(q, ClassFunction::from_row(t, i)));
  return out;
}

MonomialSourceFinder::MonomialSourceFinder(GroupPtr g) : group_(std::move(g)) {
  auto p = p_group_prime(*group_);
  if (!p) throw HypothesisViolation("monomial sources are searched in p-groups only");
  prime_ = *p;
  for (auto& h : maximal_subgroups_index_p(group_)) {
    auto lin = linear_characters(h.as_group());
    candidates_.push_back({std::move(h), std::move(lin)});
  }
}

MonomialSource MonomialSourceFinder::find(const ClassFunction& chi) const {
  if (chi.group() != group_) throw GroupMismatch("character lives on a different group");
  if (chi.degree() != prime_) {
    throw HypothesisViolation("monomial source search needs a character of degree " +
                              std::to_string(prime_));
  }
  for (const auto& cand : candidates_) {
    ClassFunction restricted = restrict(chi, cand.subgroup);
    for (const auto& xi : cand.linear) {
      // <chi_H, xi> > 0 and xi^G(1) = chi(1) force xi^G = chi.
      if (inner_product(restricted, xi) == 0) continue;
      ClassFunction induced = induce(group_, cand.subgroup, xi);
      if (induced == chi) return {cand.subgroup, xi};
    }
  }
  throw NoSourceFound("no index-" + std::to_string(prime_) + " subgroup induces the character");
}

MonomialSource monomial_source(const GroupPtr& g, const ClassFunction& chi) {
  return MonomialSourceFinder(g).find(chi);
}

Subgroup inertia_group(const GroupPtr& g, const Subgroup& h, const ClassFunction& lambda) {
  if (h.parent() != g) throw SubgroupMismatch("subgroup does not belong to the group");
  if (!is_normal(*g, h)) throw NotNormal("inertia groups need a normal subgroup");
  if (lambda.group() != h.as_group()) throw SubgroupMismatch("character does not live on the subgroup");
  const auto& local_gens = h.as_group()->generator_indices();
  std::vector<ElementIndex> members;
  for (std::size_t e = 0; e < g->order(); ++e) {
    auto x = static_cast<ElementIndex>(e);
    bool fixes = std::all_of(local_gens.begin(), local_gens.end(), [&](ElementIndex t) {
      ElementIndex parent_t = h.to_parent(t);
      ElementIndex moved = g->conjugate(parent_t, x);
      return lambda.at_element(h.to_local(moved)) == lambda.at_element(t);
    });
    if (fixes) members.push_back(x);
  }
  return Subgroup(g, std::move(members));
}

}  // namespace charforge
