#include "charforge/chartable.hpp"

#include <algorithm>
#include <numeric>

#include "charforge/error.hpp"
#include "charforge/modular.hpp"
#include "charforge/numeric.hpp"

namespace charforge {

namespace md = modular;

namespace {

bool is_trivial_row(std::span<const Cyclotomic> row) {
  return std::all_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, std::uint32_t conductor,
                               std::vector<std::vector<Cyclotomic>> rows,
                               std::optional<std::vector<FactorRows>> factors)
    : group_(std::move(group)), conductor_(conductor) {
  const auto& cc = group_->classes();
  if (rows.size() != cc.count()) {
    throw VerificationError("table has " + std::to_string(rows.size()) + " rows for " +
                            std::to_string(cc.count()) + " classes");
  }
  struct Keyed {
    std::uint64_t degree;
    bool trivial;
    std::vector<Cyclotomic> values;
    std::optional<FactorRows> factor;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cc.count()) throw VerificationError("table row has wrong length");
    Rational d = rows[i][0].as_rational();
    if (d <= 0 || d.get_den() != 1) throw VerificationError("character degree is not a positive integer");
    bool trivial = is_trivial_row(rows[i]);
    std::optional<FactorRows> f;
    if (factors) f = (*factors)[i];
    keyed.push_back({d.get_num().get_ui(), trivial, std::move(rows[i]), f});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.trivial != b.trivial) return a.trivial;
    return std::lexicographical_compare_three_way(a.values.begin(), a.values.end(),
                                                  b.values.begin(), b.values.end()) < 0;
  });
  std::uint64_t square_sum = 0;
  if (factors) factors_.emplace();
  for (auto& k : keyed) {
    degrees_.push_back(k.degree);
    square_sum += k.degree * k.degree;
    rows_.push_back(std::move(k.values));
    if (factors) factors_->push_back(*k.factor);
  }
  if (square_sum != group_->order()) {
    throw VerificationError("sum of squared degrees " + std::to_string(square_sum) +
                            " differs from the group order " + std::to_string(group_->order()));
  }
  if (!keyed.empty() && !keyed.front().trivial) {
    throw VerificationError("table lacks the trivial character");
  }

  const std::uint64_t e = exponent(*group_);
  if (e % conductor_ != 0 && conductor_ % e != 0) {
    throw VerificationError("conductor is incompatible with the group exponent");
  }
  modular_.ell = choose_dixon_prime(*group_);
  const std::uint32_t root_order = std::lcm(conductor_, static_cast<std::uint32_t>(e));
  if ((modular_.ell - 1) % root_order != 0) {
    throw VerificationError("table conductor does not divide ell - 1");
  }
  modular_.omega = md::smallest_primitive_root_of_unity(root_order, modular_.ell);
  modular_.values.resize(rows_.size() * cc.count());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t c = 0; c < cc.count(); ++c) {
      modular_.values[i * cc.count() + c] = static_cast<std::uint32_t>(
          rows_[i][c].modular_image(modular_.ell, modular_.omega, root_order));
    }
  }
}

std::optional<std::size_t> CharacterTable::find_row(std::span<const Cyclotomic> values) const {
  if (values.size() != classes().count()) return std::nullopt;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (std::equal(values.begin(), values.end(), rows_[i].begin())) return i;
  }
  return std::nullopt;
}

IntMatrix class_matrix(const FiniteGroup& g, const ConjugacyClassSet& classes, ClassIndex i) {
  const std::size_t r = classes.count();
  IntMatrix m{r, r, std::vector<std::uint64_t>(r * r, 0)};
  for (std::size_t k = 0; k < r; ++k) {
    const ElementIndex z = classes.representatives[k];
    for (ElementIndex x : classes.members[i]) {
      ElementIndex y = g.mult(g.inverse(x), z);
      m.data[classes.class_of[y] * r + k] += 1;
    }
  }
  return m;
}

std::uint64_t choose_dixon_prime(const FiniteGroup& g) {
  const std::uint64_t e = exponent(g);
  const std::uint64_t four_order = 4 * g.order();
  for (std::uint64_t ell = e + 1;; ell += e) {
    if (ell * ell > four_order && is_prime(ell)) return ell;
  }
}

namespace {

struct Subspace {
  md::Matrix basis;  // rows in reduced echelon form
  std::vector<std::size_t> pivots;
  ClassIndex next_matrix;
};

/// Common eigenvectors of all class matrices, each normalized so that its
/// identity-class coordinate is 1.
std::vector<std::vector<std::uint64_t>> central_characters(const FiniteGroup& g,
                                                           std::uint64_t ell) {
  const auto& cc = g.classes();
  const std::size_t r = cc.count();
  std::vector<std::optional<md::Matrix>> class_matrices(r);
  auto matrix_for = [&](ClassIndex i) -> const md::Matrix& {
    if (!class_matrices[i]) {
      IntMatrix m = class_matrix(g, cc, i);
      md::Matrix mm(r, r);
      for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) mm(a, b) = m(a, b) % ell;
      }
      class_matrices[i] = std::move(mm);
    }
    return *class_matrices[i];
  };

  std::vector<std::vector<std::uint64_t>> found;
  std::vector<Subspace> pending;
  {
    Subspace all{md::Matrix::identity(r), {}, 1};
    all.pivots.resize(r);
    std::iota(all.pivots.begin(), all.pivots.end(), std::size_t{0});
    pending.push_back(std::move(all));
  }
  while (!pending.empty()) {
    Subspace s = std::move(pending.back());
    pending.pop_back();
    const std::size_t d = s.basis.rows();
    if (d == 1) {
      auto row = s.basis.row(0);
      found.emplace_back(row.begin(), row.end());
      continue;
    }
    bool split = false;
    for (ClassIndex i = s.next_matrix; i < r && !split; ++i) {
      const md::Matrix& m = matrix_for(i);
      // Action of M on the span: A(a, c) = (M b_c)[pivot_a].
      md::Matrix a(d, d);
      for (std::size_t p = 0; p < d; ++p) {
        auto mrow = m.row(s.pivots[p]);
        for (std::size_t c = 0; c < d; ++c) {
          auto b = s.basis.row(c);
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) {
            if (b[k] != 0 && mrow[k] != 0) acc = (acc + mrow[k] * b[k]) % ell;
          }
          a(p, c) = acc;
        }
      }
      bool scalar = true;
      for (std::size_t p = 0; p < d && scalar; ++p) {
        for (std::size_t c = 0; c < d; ++c) {
          if (a(p, c) != (p == c ? a(0, 0) : 0)) {
            scalar = false;
            break;
          }
        }
      }
      if (scalar) continue;
      auto eigenvalues = md::roots(md::characteristic_polynomial(a, ell), ell);
      std::size_t total = 0;
      for (std::uint64_t lambda : eigenvalues) {
        md::Matrix shifted = a;
        for (std::size_t p = 0; p < d; ++p) shifted(p, p) = (shifted(p, p) + ell - lambda) % ell;
        md::Matrix coords = md::nullspace(shifted, ell);
        md::Matrix vectors(coords.rows(), r);
        for (std::size_t v = 0; v < coords.rows(); ++v) {
          for (std::size_t c = 0; c < d; ++c) {
            const std::uint64_t x = coords(v, c);
            if (x == 0) continue;
            auto b = s.basis.row(c);
            auto out = vectors.row(v);
            for (std::size_t k = 0; k < r; ++k) out[k] = (out[k] + x * b[k]) % ell;
          }
        }
        auto pivots = md::rref(vectors, ell);
        total += vectors.rows();
        pending.push_back({std::move(vectors), std::move(pivots), static_cast<ClassIndex>(i + 1)});
      }
      if (total != d) {
        throw VerificationError("class matrix is not diagonalizable over F_" + std::to_string(ell));
      }
      split = true;
    }
    if (!split) {
      throw VerificationError("common eigenspace of dimension " + std::to_string(d) +
                              " did not split");
    }
  }
  return found;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g) {
  const auto& cc = g->classes();
  const std::size_t r = cc.count();
  const auto m = static_cast<std::uint32_t>(exponent(*g));
  const std::uint64_t ell = choose_dixon_prime(*g);
  const std::uint64_t omega = md::smallest_primitive_root_of_unity(m, ell);
  const std::uint64_t order_mod = g->order() % ell;

  auto omegas = central_characters(*g, ell);

  // Power maps: classes of g^j for each representative g.
  std::vector<std::vector<ClassIndex>> power_classes(r);
  for (std::size_t k = 0; k < r; ++k) {
    const ElementIndex rep = cc.representatives[k];
    ElementIndex x = 0;
    for (std::uint32_t j = 0; j < cc.rep_orders[k]; ++j) {
      power_classes[k].push_back(cc.class_of[x]);
      x = g->mult(x, rep);
    }
  }
  std::vector<std::uint64_t> inv_sizes(r);
  for (std::size_t k = 0; k < r; ++k) inv_sizes[k] = md::inv_mod(cc.sizes[k] % ell, ell);

  const std::uint64_t max_degree = integer_sqrt(g->order());
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& w : omegas) {
    if (w[0] != 1) throw VerificationError("central character not normalized");
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = (s + w[k] * w[cc.inverse_class[k]] % ell * inv_sizes[k]) % ell;
    }
    const std::uint64_t target = order_mod * md::inv_mod(s, ell) % ell;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
      if (g->order() % d == 0 && d * d % ell == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw VerificationError("could not recover a character degree");

    std::vector<std::uint64_t> values(r);
    for (std::size_t k = 0; k < r; ++k) values[k] = w[k] * degree % ell * inv_sizes[k] % ell;

    std::vector<Cyclotomic> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint32_t n = cc.rep_orders[k];
      const std::uint64_t root = md::pow_mod(omega, m / n, ell);
      const std::uint64_t inv_root = md::inv_mod(root, ell);
      const std::uint64_t inv_n = md::inv_mod(n, ell);
      std::vector<Rational> powers(m);
      std::uint64_t multiplicity_sum = 0;
      for (std::uint32_t t = 0; t < n; ++t) {
        // Multiplicity of eigenvalue zeta_n^t of the representing matrix.
        const std::uint64_t step = md::pow_mod(inv_root, t, ell);
        std::uint64_t acc = 0;
        std::uint64_t factor = 1;
        for (std::uint32_t j = 0; j < n; ++j) {
          acc = (acc + values[power_classes[k][j]] * factor) % ell;
          factor = factor * step % ell;
        }
        const std::uint64_t a = acc * inv_n % ell;
        if (a > degree) throw VerificationError("eigenvalue multiplicity out of range");
        multiplicity_sum += a;
        powers[static_cast<std::size_t>(t) * (m / n)] = static_cast<long>(a);
      }
      if (multiplicity_sum != degree) throw VerificationError("eigenvalue multiplicities do not sum to the degree");
      row[k] = Cyclotomic::from_powers(m, std::move(powers));
    }
    rows.push_back(std::move(row));
  }
  return CharacterTable(g, m, std::move(rows));
}

CharacterTable tensor_table_of_product(const CharacterTable& left, const CharacterTable& right,
                                       const DirectProduct& product) {
  if (left.group() != product.left || right.group() != product.right) {
    throw GroupMismatch("factor tables do not belong to the product's factors");
  }
  const auto& cc = product.group->classes();
  const auto& lc = left.classes();
  const auto& rc = right.classes();
  const std::size_t r = cc.count();
  std::vector<std::pair<ClassIndex, ClassIndex>> split(r);
  for (std::size_t k = 0; k < r; ++k) {
    const ElementIndex rep = cc.representatives[k];
    split[k] = {lc.class_of[product.left_component[rep]], rc.class_of[product.right_component[rep]]};
  }
  const std::uint32_t m = std::lcm(left.conductor(), right.conductor());
  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<CharacterTable::FactorRows> factors;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      std::vector<Cyclotomic> row(r);
      for (std::size_t k = 0; k < r; ++k) {
        row[k] = (left.value(i, split[k].first) * right.value(j, split[k].second)).lifted(m);
      }
      rows.push_back(std::move(row));
      factors.push_back({i, j});
    }
  }
  return CharacterTable(product.group, m, std::move(rows), std::move(factors));
}

CharacterTable character_table(const BuiltGroup& built) {
  if (built.product) {
    return tensor_table_of_product(character_table(*built.left), character_table(*built.right),
                                   *built.product);
  }
  return character_table(built.group);
}

OrthogonalityReport check_orthogonality(const CharacterTable& table) {
  OrthogonalityReport report;
  const auto& cc = table.classes();
  const std::size_t r = cc.count();
  const std::size_t n = table.size();
  const Rational order(static_cast<long>(table.group()->order()));

  std::uint64_t square_sum = 0;
  for (auto d : table.degrees()) square_sum += d * d;
  report.degree_sum = square_sum == table.group()->order();

  std::vector<std::vector<Cyclotomic>> conj(n, std::vector<Cyclotomic>(r));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < r; ++c) conj[i][c] = table.value(i, c).conjugate();
  }

  report.first = true;
  for (std::size_t i = 0; i < n && report.first; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Cyclotomic acc;
      for (std::size_t c = 0; c < r; ++c) {
        const auto& a = table.value(i, c);
        if (a.is_zero() || conj[j][c].is_zero()) continue;
        acc += (a * conj[j][c]) * Rational(static_cast<long>(cc.sizes[c]));
      }
      if (acc != Cyclotomic(i == j ? order : Rational(0))) {
        report.first = false;
        break;
      }
    }
  }

  report.second = true;
  for (std::size_t c = 0; c < r && report.second; ++c) {
    for (std::size_t d = c; d < r; ++d) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = table.value(i, c);
        if (a.is_zero() || conj[i][d].is_zero()) continue;
        acc += a * conj[i][d];
      }
      Rational expected = c == d ? Rational(static_cast<long>(table.group()->order() / cc.sizes[c]))
                                 : Rational(0);
      if (acc != Cyclotomic(expected)) {
        report.second = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace charforge
