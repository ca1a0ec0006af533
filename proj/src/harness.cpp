#include "charforge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "charforge/constructions.hpp"
#include "charforge/error.hpp"
#include "charforge/modular.hpp"
#include "charforge/numeric.hpp"

namespace charforge {

std::string_view case_name(TheoremCase c) {
  switch (c) {
    case TheoremCase::SumOfLinears: return "SumOfLinears";
    case TheoremCase::MixedLinearAndDegreeP: return "MixedLinearAndDegreeP";
    case TheoremCase::AllDegreeP: return "AllDegreeP";
    case TheoremCase::Irreducible: return "Irreducible";
  }
  return "?";
}

std::string_view case_label(TheoremCase c) {
  switch (c) {
    case TheoremCase::SumOfLinears: return "i";
    case TheoremCase::MixedLinearAndDegreeP: return "ii";
    case TheoremCase::AllDegreeP: return "iii";
    case TheoremCase::Irreducible: return "iv";
  }
  return "?";
}

std::string_view shape_name(SelfProductShape s) {
  return s == SelfProductShape::AllLinear ? "i" : "ii";
}

namespace {

/// Runs fn(i) for i in [0, n) on up to `jobs` threads; the first exception
/// thrown by any task is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned count = std::min<std::size_t>(jobs, n);
  for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Cyclotomic> row_product(const CharacterTable& t, std::size_t a, std::size_t b) {
  std::vector<Cyclotomic> v(t.classes().count());
  for (std::size_t c = 0; c < v.size(); ++c) {
    const auto& x = t.value(a, static_cast<ClassIndex>(c));
    const auto& y = t.value(b, static_cast<ClassIndex>(c));
    if (!x.is_zero() && !y.is_zero()) v[c] = x * y;
  }
  return v;
}

std::size_t conjugate_row(const CharacterTable& t, std::size_t i) {
  std::vector<Cyclotomic> v;
  v.reserve(t.classes().count());
  for (const auto& x : t.row(i)) v.push_back(x.conjugate());
  auto r = t.find_row(v);
  if (!r) throw VerificationError("conjugate of row " + std::to_string(i) + " is not a row");
  return *r;
}

void require_row(const CharacterTable& t, std::size_t i) {
  if (i >= t.size()) {
    throw RowOutOfRange("row " + std::to_string(i) + " outside table of " + std::to_string(t.size()) +
                        " rows");
  }
}

std::string describe(const Decomposition& d, const CharacterTable& t) {
  std::ostringstream out;
  out << "eta=" << d.eta() << " [";
  for (std::size_t k = 0; k < d.constituents.size(); ++k) {
    const auto& c = d.constituents[k];
    if (k) out << ' ';
    out << c.row << ':' << t.degree(c.row) << 'x' << c.multiplicity;
  }
  out << ']';
  return out.str();
}

std::optional<TheoremCase> match_case(const Decomposition& d, const CharacterTable& t,
                                      std::uint64_t p, std::uint64_t product_degree) {
  std::size_t linear = 0, degree_p = 0, other = 0;
  bool simple = true;
  for (const auto& c : d.constituents) {
    auto deg = t.degree(c.row);
    if (deg == 1) ++linear;
    else if (deg == p) ++degree_p;
    else ++other;
    if (c.multiplicity != 1) simple = false;
  }
  const std::size_t eta = d.eta();
  if (eta == 1 && simple && t.degree(d.constituents[0].row) == product_degree) {
    return TheoremCase::Irreducible;
  }
  if (simple && other == 0 && degree_p == 0 && eta == p * p) return TheoremCase::SumOfLinears;
  if (simple && other == 0 && linear == p && degree_p == p - 1) {
    return TheoremCase::MixedLinearAndDegreeP;
  }
  if (other == 0 && linear == 0 && (eta == 1 || (2 * eta >= p + 1 && eta <= p))) {
    return TheoremCase::AllDegreeP;
  }
  return std::nullopt;
}

}  // namespace

ProductContext::ProductContext(const CharacterTable& table, Route route)
    : table_(&table),
      nilpotent_(is_nilpotent(table.group())),
      prime_(charforge::p_group_prime(*table.group())) {
  const std::size_t r = table.classes().count();
  use_modular_ = route == Route::Modular || (route == Route::Automatic && r > kModularThreshold);
  if (!use_modular_) return;
  const auto& mod = table.modular();
  const auto& cc = table.classes();
  weights_.resize(table.size() * r);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t c = 0; c < r; ++c) {
      std::uint64_t v = mod.values[i * r + cc.inverse_class[c]];
      weights_[i * r + c] = static_cast<std::uint32_t>(v * (cc.sizes[c] % mod.ell) % mod.ell);
    }
  }
}

Decomposition ProductContext::decompose_product(std::size_t chi, std::size_t psi) const {
  require_row(*table_, chi);
  require_row(*table_, psi);
  const auto bound = table_->degree(chi) * table_->degree(psi);
  if (use_modular_ && bound < table_->modular().ell) return decompose_modular(chi, psi);
  ClassFunction f(table_->group(), row_product(*table_, chi, psi));
  return decompose(f, *table_);
}

Decomposition ProductContext::decompose_modular(std::size_t chi, std::size_t psi) const {
  const auto& t = *table_;
  const auto& mod = t.modular();
  const std::uint64_t ell = mod.ell;
  const std::size_t r = t.classes().count();
  std::vector<std::uint64_t> prod(r);
  for (std::size_t c = 0; c < r; ++c) {
    prod[c] = std::uint64_t{mod.values[chi * r + c]} * mod.values[psi * r + c] % ell;
  }
  const std::uint64_t inv_order = modular::inv_mod(t.group()->order() % ell, ell);
  Decomposition d;
  std::uint64_t degree_sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::uint32_t* w = &weights_[i * r];
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < r; ++c) acc = (acc + prod[c] * w[c]) % ell;
    std::uint64_t m = acc * inv_order % ell;
    if (m != 0) {
      d.constituents.push_back({i, m});
      degree_sum += m * t.degree(i);
    }
  }
  // Each multiplicity is below ell, so the residues are the multiplicities;
  // the degree count guards against a table whose reduction is inconsistent.
  if (degree_sum != t.degree(chi) * t.degree(psi)) {
    throw VerificationError("modular decomposition of rows " + std::to_string(chi) + ", " +
                            std::to_string(psi) + " does not match the product degree");
  }
  return d;
}

TheoremACase classify_product(const ProductContext& ctx, std::size_t chi, std::size_t psi,
                              std::uint64_t p) {
  const auto& t = ctx.table();
  require_row(t, chi);
  require_row(t, psi);
  if (!is_prime(p) || t.degree(chi) != p) {
    throw HypothesisViolation("chi(1) = " + std::to_string(t.degree(chi)) + " is not the prime " +
                              std::to_string(p));
  }
  if (!is_prime(t.degree(psi))) {
    throw HypothesisViolation("psi(1) = " + std::to_string(t.degree(psi)) + " is not prime");
  }
  if (!ctx.nilpotent()) throw HypothesisViolation("group is not nilpotent");
  Decomposition d = ctx.decompose_product(chi, psi);
  auto tag = match_case(d, t, p, t.degree(chi) * t.degree(psi));
  if (!tag) {
    throw TheoremViolation("rows " + std::to_string(chi) + ", " + std::to_string(psi) +
                           " give no permitted shape: " + describe(d, t));
  }
  TheoremACase out{*tag, d.eta(), std::move(d), {}};
  for (const auto& c : out.constituents.constituents) ++out.degree_histogram[t.degree(c.row)];
  return out;
}

TheoremACase classify_product(const CharacterTable& table, std::size_t chi, std::size_t psi,
                              std::uint64_t p) {
  return classify_product(ProductContext(table), chi, psi, p);
}

VerificationReport verify_theorem_A(const ProductContext& ctx, std::uint64_t p,
                                    std::string group_label, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  const auto& t = ctx.table();
  if (!is_prime(p)) throw HypothesisViolation(std::to_string(p) + " is not prime");
  if (!ctx.nilpotent()) throw HypothesisViolation("group is not nilpotent");

  VerificationReport report;
  report.group = std::move(group_label);
  report.prime = p;
  report.group_order = t.group()->order();

  std::vector<std::size_t> chis, psis;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) == p) chis.push_back(i);
    if (is_prime(t.degree(i))) psis.push_back(i);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ordered;
  for (auto a : chis) {
    for (auto b : psis) ++ordered[{std::min(a, b), std::max(a, b)}];
  }
  report.ordered_pairs = chis.size() * psis.size();
  for (const auto& [key, count] : ordered) {
    report.pairs.push_back({key.first, key.second, count, std::nullopt, {}});
  }

  parallel_for(report.pairs.size(), jobs, [&](std::size_t k) {
    auto& pr = report.pairs[k];
    // Orient the pair so that the first entry has degree p.
    const bool swap = t.degree(pr.chi) != p;
    const std::size_t a = swap ? pr.psi : pr.chi;
    const std::size_t b = swap ? pr.chi : pr.psi;
    try {
      pr.result = classify_product(ctx, a, b, p);
    } catch (const TheoremViolation& e) {
      pr.violation = e.what();
    }
  });
  for (const auto& pr : report.pairs) {
    if (!pr.violation.empty()) report.violations.push_back(pr.violation);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SelfProductShape verify_self_product_lemma(const ProductContext& ctx, std::size_t chi) {
  const auto& t = ctx.table();
  require_row(t, chi);
  const std::uint64_t p = t.degree(chi);
  if (!is_prime(p)) throw HypothesisViolation("chi(1) = " + std::to_string(p) + " is not prime");
  if (!ctx.nilpotent()) throw HypothesisViolation("group is not nilpotent");
  Decomposition d = ctx.decompose_product(chi, conjugate_row(t, chi));
  std::size_t linear = 0, degree_p = 0;
  bool simple = true;
  for (const auto& c : d.constituents) {
    if (t.degree(c.row) == 1) ++linear;
    else if (t.degree(c.row) == p) ++degree_p;
    if (c.multiplicity != 1) simple = false;
  }
  if (simple && linear + degree_p == d.eta()) {
    if (degree_p == 0 && linear == p * p) return SelfProductShape::AllLinear;
    if (linear == p && degree_p == p - 1) return SelfProductShape::LinearAndDegreeP;
  }
  throw TheoremViolation("chi * conj(chi) for row " + std::to_string(chi) +
                         " has neither shape: " + describe(d, t));
}

LinearShiftResult verify_linear_shift_lemma(const ProductContext& ctx, std::size_t chi,
                                            std::size_t psi) {
  const auto& t = ctx.table();
  require_row(t, chi);
  require_row(t, psi);
  LinearShiftResult out;
  Decomposition d = ctx.decompose_product(chi, psi);
  std::vector<std::size_t> alphas;
  for (const auto& c : d.constituents) {
    if (t.degree(c.row) == 1) alphas.push_back(c.row);
  }
  out.linear_constituents = alphas.size();
  if (alphas.empty()) {
    out.witness = "no linear constituent";
    return out;
  }
  const std::size_t chi_bar = conjugate_row(t, chi);
  Decomposition self = ctx.decompose_product(chi, chi_bar);
  for (auto alpha : alphas) {
    const std::size_t alpha_bar = conjugate_row(t, alpha);
    auto shifted = row_product(t, psi, alpha_bar);
    auto target = t.row(chi_bar);
    if (!std::equal(shifted.begin(), shifted.end(), target.begin(), target.end())) {
      out.pass = false;
      out.witness = "psi * conj(alpha) != conj(chi) for alpha = row " + std::to_string(alpha);
      return out;
    }
    Decomposition moved;
    for (const auto& c : d.constituents) {
      auto r = t.find_row(row_product(t, c.row, alpha_bar));
      if (!r) {
        out.pass = false;
        out.witness = "row " + std::to_string(c.row) + " times conj(alpha) is not irreducible";
        return out;
      }
      moved.constituents.push_back({*r, c.multiplicity});
    }
    std::sort(moved.constituents.begin(), moved.constituents.end(),
              [](const Constituent& x, const Constituent& y) { return x.row < y.row; });
    if (moved != self) {
      out.pass = false;
      out.witness = "constituents of chi*psi shifted by conj(alpha = row " + std::to_string(alpha) +
                    ") differ from chi*conj(chi)";
      return out;
    }
  }
  out.witness = "alpha = row " + std::to_string(alphas.front());
  return out;
}

std::map<std::size_t, EtaWitness> eta_spectrum(const ProductContext& ctx, std::uint64_t p) {
  const auto& t = ctx.table();
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) == p) rows.push_back(i);
  }
  std::map<std::size_t, EtaWitness> out;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a; b < rows.size(); ++b) {
      const std::size_t eta = ctx.decompose_product(rows[a], rows[b]).eta();
      const std::size_t count = a == b ? 1 : 2;
      auto [it, fresh] = out.try_emplace(eta, EtaWitness{rows[a], rows[b], 0});
      it->second.ordered_pairs += count;
    }
  }
  return out;
}

bool ExamplesReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.pass; });
}

namespace {

std::vector<std::size_t> rows_of_degree(const CharacterTable& t, std::uint64_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) == d) out.push_back(i);
  }
  return out;
}

std::string extraspecial_text(std::uint64_t p) {
  return "extraspecial:p=" + std::to_string(p) + ",exp=p";
}

ExampleCheck example_sum_of_linears(const CharacterTable& t, std::uint64_t p) {
  ExampleCheck check{"i", extraspecial_text(p),
                     "phi * conj(phi) is the sum of all " + std::to_string(p * p) +
                         " linear characters",
                     true, {}};
  ProductContext ctx(t);
  auto linear = rows_of_degree(t, 1);
  for (auto phi : rows_of_degree(t, p)) {
    Decomposition d = ctx.decompose_product(phi, conjugate_row(t, phi));
    std::vector<std::size_t> got;
    bool simple = true;
    for (const auto& c : d.constituents) {
      got.push_back(c.row);
      simple = simple && c.multiplicity == 1;
    }
    const bool ok = simple && got == linear && d.eta() == p * p;
    check.pass = check.pass && ok;
    check.evidence.push_back("phi = row " + std::to_string(phi) + ": " + describe(d, t) +
                             (ok ? "" : " (mismatch)"));
  }
  return check;
}

ExampleCheck example_multiple_of_irreducible(const CharacterTable& t, std::uint64_t p) {
  ExampleCheck check{"iii-a", extraspecial_text(p),
                     "phi * phi = " + std::to_string(p) +
                         " * theta with theta the degree-p character of central character "
                         "omega^2",
                     true, {}};
  ProductContext ctx(t);
  const auto& G = *t.group();
  Subgroup z = center(t.group());
  if (z.order() != p) {
    check.pass = false;
    check.evidence.push_back("center has order " + std::to_string(z.order()));
    return check;
  }
  const ClassIndex zc = G.classes().class_of[z.members()[1]];
  auto degree_p = rows_of_degree(t, p);
  for (auto phi : degree_p) {
    const Cyclotomic target = t.value(phi, zc) * t.value(phi, zc);
    std::optional<std::size_t> theta;
    for (auto r : degree_p) {
      if (t.value(r, zc) * Rational(static_cast<long>(p)) == target) theta = r;
    }
    Decomposition d = ctx.decompose_product(phi, phi);
    const bool ok = theta && d.constituents.size() == 1 && d.constituents[0].row == *theta &&
                    d.constituents[0].multiplicity == p;
    check.pass = check.pass && ok;
    std::string line = "phi = row " + std::to_string(phi) + ": " + describe(d, t);
    if (theta) {
      line += ", central match theta = row " + std::to_string(*theta);
      if (*theta == conjugate_row(t, phi)) line += " = conj(phi)";
    } else {
      line += ", no central match";
    }
    check.evidence.push_back(line);
  }
  return check;
}

/// lambda(n) = zeta_p^k where n moves point 0 to point k.
ClassFunction coordinate_character(const Subgroup& base, std::uint64_t p) {
  const GroupPtr& local = base.as_group();
  const auto& lc = local->classes();
  std::vector<Cyclotomic> v(lc.count());
  for (std::size_t c = 0; c < lc.count(); ++c) {
    auto k = local->images(lc.representatives[c])[0];
    v[c] = Cyclotomic::root_of_unity(static_cast<std::uint32_t>(p), k);
  }
  return ClassFunction(local, std::move(v));
}

/// f^g(n) = f(g^-1 n g) for f on the normal subgroup `base`.
ClassFunction conjugate_by(const Subgroup& base, const ClassFunction& f, ElementIndex g) {
  const GroupPtr& parent = base.parent();
  const GroupPtr& local = base.as_group();
  const auto& lc = local->classes();
  std::vector<Cyclotomic> v(lc.count());
  for (std::size_t c = 0; c < lc.count(); ++c) {
    ElementIndex n = base.to_parent(lc.representatives[c]);
    v[c] = f.at_element(base.to_local(parent->conjugate(n, g)));
  }
  return ClassFunction(local, std::move(v));
}

struct InducedPairOutcome {
  bool irreducible_factors = false;
  bool claim = false;
  std::size_t eta = 0;
  std::string summary;
};

/// Checks lambda^G, (lambda^2)^G and their product against the table.
InducedPairOutcome induced_pair_with_table(const GroupPtr& g, const Subgroup& base,
                                           const ClassFunction& lambda, const CharacterTable& t,
                                           std::uint64_t p) {
  InducedPairOutcome out;
  ClassFunction chi = induce(g, base, lambda);
  ClassFunction psi = induce(g, base, product(lambda, lambda));
  auto rc = t.find_row(chi.values());
  auto rp = t.find_row(psi.values());
  if (!rc || !rp || t.degree(*rc) != p || t.degree(*rp) != p) {
    out.summary = "induced characters are not irreducible of degree p";
    return out;
  }
  out.irreducible_factors = true;
  Decomposition d = decompose(product(chi, psi), t);
  out.eta = d.eta();
  out.claim = d.eta() == p && std::all_of(d.constituents.begin(), d.constituents.end(),
                                          [&](const Constituent& c) {
                                            return c.multiplicity == 1 && t.degree(c.row) == p;
                                          });
  out.summary = "chi = row " + std::to_string(*rc) + ", psi = row " + std::to_string(*rp) +
                ", chi*psi: " + describe(d, t);
  return out;
}

/// Table-free check: chi*psi = sum_i (lambda (lambda^2)^{t^i})^G with the
/// summands irreducible and pairwise orthogonal.
InducedPairOutcome induced_pair_by_clifford(const GroupPtr& g, const Subgroup& base,
                                            const ClassFunction& lambda, ElementIndex top,
                                            std::uint64_t p) {
  InducedPairOutcome out;
  ClassFunction lambda2 = product(lambda, lambda);
  ClassFunction chi = induce(g, base, lambda);
  ClassFunction psi = induce(g, base, lambda2);
  out.irreducible_factors = inner_product(chi, chi) == 1 && inner_product(psi, psi) == 1 &&
                            chi.degree() == p && psi.degree() == p;
  if (!out.irreducible_factors) {
    out.summary = "induced characters are not irreducible of degree p";
    return out;
  }
  std::vector<ClassFunction> parts;
  ElementIndex shift = 0;
  for (std::uint64_t i = 0; i < p; ++i) {
    parts.push_back(induce(g, base, product(lambda, conjugate_by(base, lambda2, shift))));
    shift = g->mult(shift, top);
  }
  ClassFunction sum = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) sum = sum + parts[i];
  bool ok = sum == product(chi, psi);
  std::size_t irreducible = 0;
  for (std::size_t i = 0; i < parts.size() && ok; ++i) {
    if (inner_product(parts[i], parts[i]) == 1 && parts[i].degree() == p) ++irreducible;
    for (std::size_t j = i + 1; j < parts.size() && ok; ++j) {
      ok = inner_product(parts[i], parts[j]) == 0;
    }
  }
  out.claim = ok && irreducible == p;
  out.summary = "chi*psi = sum of " + std::to_string(p) + " induced summands, " +
                std::to_string(irreducible) + " irreducible" + (ok ? ", pairwise distinct" : "");
  return out;
}

ExampleCheck example_induced_pair(std::uint64_t p, bool stretch) {
  ExampleCheck check{"iii-b", "wreath:p=" + std::to_string(p),
                     "lambda^G and (lambda^2)^G are irreducible of degree p and their product "
                     "is a sum of p distinct degree-p irreducibles",
                     false, {}};
  WreathGroup w = wreath_cyclic(p, stretch, std::max<std::size_t>(kDefaultClosureCap, 15625));
  const GroupPtr& g = w.group;
  ElementIndex top = 0;
  for (auto gen : g->generator_indices()) {
    if (!w.base.contains(gen)) {
      top = gen;
      break;
    }
  }
  ClassFunction lambda = coordinate_character(w.base, p);
  constexpr std::size_t kTableOrderLimit = 729;
  if (g->order() <= kTableOrderLimit) {
    CharacterTable t = character_table(g);
    auto canonical = induced_pair_with_table(g, w.base, lambda, t, p);
    check.pass = canonical.irreducible_factors && canonical.claim;
    check.evidence.push_back("coordinate lambda: " + canonical.summary);
    std::size_t eligible = 0, satisfied = 0;
    std::map<std::size_t, std::size_t> profile;
    for (const auto& mu : linear_characters(w.base.as_group())) {
      auto outcome = induced_pair_with_table(g, w.base, mu, t, p);
      if (!outcome.irreducible_factors) continue;
      ++eligible;
      ++profile[outcome.eta];
      if (outcome.claim) ++satisfied;
    }
    std::string line = "all lambda with irreducible lambda^G: " + std::to_string(eligible) +
                       ", satisfying the claim: " + std::to_string(satisfied) + ", eta profile {";
    bool first = true;
    for (auto [eta, n] : profile) {
      line += (first ? "" : ", ") + std::to_string(eta) + ": " + std::to_string(n);
      first = false;
    }
    check.evidence.push_back(line + "}");
    ProductContext ctx(t);
    auto degree_p = rows_of_degree(t, p);
    std::size_t realized = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_pair;
    for (auto a : degree_p) {
      for (auto b : degree_p) {
        Decomposition d = ctx.decompose_product(a, b);
        bool shape = d.eta() == p;
        for (const auto& c : d.constituents) {
          shape = shape && c.multiplicity == 1 && t.degree(c.row) == p;
        }
        if (!shape) continue;
        ++realized;
        if (!first_pair) first_pair = {a, b};
      }
    }
    line = "ordered degree-p pairs whose product is p distinct degree-p irreducibles: " +
           std::to_string(realized);
    if (first_pair) {
      line += ", first (" + std::to_string(first_pair->first) + ", " +
              std::to_string(first_pair->second) + ")";
    }
    check.evidence.push_back(line);
  }
  auto clifford = induced_pair_by_clifford(g, w.base, lambda, top, p);
  check.evidence.push_back("coordinate lambda, Clifford check: " + clifford.summary);
  if (g->order() > kTableOrderLimit) check.pass = clifford.irreducible_factors && clifford.claim;
  return check;
}

ExampleCheck example_factor_product(std::uint64_t p, bool stretch) {
  const std::string q = extraspecial_text(p);
  ExampleCheck check{"iv", q + "*" + q,
                     "chi = kappa x 1, psi = 1 x kappa and chi*psi are irreducible", false, {}};
  BuildOptions options;
  options.stretch = stretch;
  options.cap = std::max<std::size_t>(options.cap, 15625);
  BuiltGroup built = build_group(check.group, options);
  CharacterTable t = character_table(built);
  CharacterTable qt = character_table(*built.left);
  const auto& factors = *t.factor_rows();
  const std::size_t kappa = rows_of_degree(qt, p).front();
  auto row_with = [&](std::size_t l, std::size_t r) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].left == l && factors[i].right == r) return i;
    }
    throw VerificationError("tensor table lacks a factor pair");
  };
  const std::size_t chi = row_with(kappa, 0);
  const std::size_t psi = row_with(0, kappa);
  const std::size_t target = row_with(kappa, kappa);
  ClassFunction fc = ClassFunction::from_row(t, chi);
  ClassFunction fp = ClassFunction::from_row(t, psi);
  const bool irreducible = inner_product(fc, fc) == 1 && inner_product(fp, fp) == 1;
  ProductContext ctx(t);
  Decomposition d = ctx.decompose_product(chi, psi);
  check.pass = irreducible && d.constituents.size() == 1 && d.constituents[0].row == target &&
               d.constituents[0].multiplicity == 1;
  check.evidence.push_back("kappa = row " + std::to_string(kappa) + " of Q, chi = row " +
                           std::to_string(chi) + ", psi = row " + std::to_string(psi) +
                           ", chi*psi: " + describe(d, t) + ", kappa x kappa = row " +
                           std::to_string(target));
  return check;
}

}  // namespace

ExamplesReport reproduce_examples(std::uint64_t p, bool stretch) {
  if (p != 3 && p != 5) throw UnsupportedPrime("examples are reproduced for p = 3 and p = 5");
  if (p == 5 && !stretch) throw UnsupportedPrime("p = 5 examples need the stretch flag");
  ExamplesReport report;
  report.prime = p;
  CharacterTable e = character_table(extraspecial(p, ExtraspecialKind::ExponentP));
  report.checks.push_back(example_sum_of_linears(e, p));
  report.checks.push_back(example_multiple_of_irreducible(e, p));
  report.checks.push_back(example_induced_pair(p, stretch));
  report.checks.push_back(example_factor_product(p, stretch));
  return report;
}

}  // namespace charforge
