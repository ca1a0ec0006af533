#include "charforge/constructions.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "charforge/error.hpp"
#include "charforge/numeric.hpp"

namespace charforge {

GroupPtr cyclic(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw UsageError("cyclic group order must be positive");
  if (n > cap) throw ClosureTooLarge(cap);
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<Point> im(n);
    for (std::uint64_t i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup::generate(n, std::move(gens), cap);
}

GroupPtr abelian(const std::vector<std::uint64_t>& factors, std::size_t cap) {
  if (factors.empty()) throw UsageError("abelian group needs at least one factor");
  std::uint64_t degree = 0;
  std::uint64_t order = 1;
  for (auto n : factors) {
    if (n == 0) throw UsageError("abelian factor orders must be positive");
    degree += n;
    order *= n;
    if (order > cap) throw ClosureTooLarge(cap);
  }
  std::vector<Permutation> gens;
  std::uint64_t offset = 0;
  for (auto n : factors) {
    if (n > 1) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::uint64_t i = 0; i < n; ++i) images[offset + i] = static_cast<Point>(offset + (i + 1) % n);
      gens.emplace_back(std::move(images));
    }
    offset += n;
  }
  return FiniteGroup::generate(degree, std::move(gens), cap);
}

GroupPtr extraspecial(std::uint64_t p, ExtraspecialKind kind, std::size_t cap) {
  if (!is_prime(p) || p == 2 || p > kMaxExtraspecialPrime) {
    throw UnsupportedPrime("extraspecial groups are built for odd primes up to " +
                           std::to_string(kMaxExtraspecialPrime) + ", got " + std::to_string(p));
  }
  const std::uint64_t n = p * p;
  std::vector<Point> a(n);
  std::vector<Point> b(n);
  if (kind == ExtraspecialKind::ExponentP) {
    // Maps (x, y) -> (x + s, y + t x + u) on F_p^2, point x*p + y.
    for (std::uint64_t x = 0; x < p; ++x) {
      for (std::uint64_t y = 0; y < p; ++y) {
        a[x * p + y] = static_cast<Point>(((x + 1) % p) * p + y);
        b[x * p + y] = static_cast<Point>(x * p + (y + x) % p);
      }
    }
  } else {
    // Maps i -> (1 + kp) i + s on Z/p^2.
    for (std::uint64_t i = 0; i < n; ++i) {
      a[i] = static_cast<Point>((i + 1) % n);
      b[i] = static_cast<Point>(((1 + p) * i) % n);
    }
  }
  return FiniteGroup::generate(n, {Permutation(std::move(a)), Permutation(std::move(b))}, cap);
}

WreathGroup wreath_cyclic(std::uint64_t p, bool stretch, std::size_t cap) {
  if (!is_prime(p) || p > 5) {
    throw UnsupportedPrime("wreath products are built for primes up to 5, got " + std::to_string(p));
  }
  if (p == 5 && !stretch) {
    throw UnsupportedPrime("wreath:p=5 is a stretch target; enable the stretch flag");
  }
  const std::uint64_t n = p * p;
  std::vector<Point> base(n);
  std::vector<Point> top(n);
  for (std::uint64_t block = 0; block < p; ++block) {
    for (std::uint64_t j = 0; j < p; ++j) {
      base[block * p + j] = static_cast<Point>(block == 0 ? (j + 1) % p : block * p + j);
      top[block * p + j] = static_cast<Point>(((block + 1) % p) * p + j);
    }
  }
  auto g = FiniteGroup::generate(n, {Permutation(std::move(base)), Permutation(std::move(top))},
                                 cap);
  std::vector<ElementIndex> members;
  for (std::size_t e = 0; e < g->order(); ++e) {
    auto im = g->images(static_cast<ElementIndex>(e));
    bool fixes_blocks = true;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (im[x] / p != x / p) {
        fixes_blocks = false;
        break;
      }
    }
    if (fixes_blocks) members.push_back(static_cast<ElementIndex>(e));
  }
  return WreathGroup{g, Subgroup(g, std::move(members))};
}

DirectProduct direct_product(const GroupPtr& left, const GroupPtr& right, std::size_t cap) {
  if (left->order() * right->order() > cap) throw ClosureTooLarge(cap);
  const std::size_t d1 = left->degree();
  const std::size_t d2 = right->degree();
  std::vector<Permutation> gens;
  std::vector<Point> im(d1 + d2);
  for (const auto& g : left->generators()) {
    for (std::size_t x = 0; x < d1; ++x) im[x] = g(static_cast<Point>(x));
    for (std::size_t x = 0; x < d2; ++x) im[d1 + x] = static_cast<Point>(d1 + x);
    gens.emplace_back(im);
  }
  for (const auto& g : right->generators()) {
    for (std::size_t x = 0; x < d1; ++x) im[x] = static_cast<Point>(x);
    for (std::size_t x = 0; x < d2; ++x) im[d1 + x] = static_cast<Point>(d1 + g(static_cast<Point>(x)));
    gens.emplace_back(im);
  }
  DirectProduct dp;
  dp.left = left;
  dp.right = right;
  dp.group = FiniteGroup::generate(d1 + d2, std::move(gens), cap);
  const auto& G = *dp.group;

  dp.left_component.resize(G.order());
  dp.right_component.resize(G.order());
  std::vector<Point> part;
  for (std::size_t e = 0; e < G.order(); ++e) {
    auto full = G.images(static_cast<ElementIndex>(e));
    dp.left_component[e] = *left->find(full.subspan(0, d1));
    part.assign(full.begin() + static_cast<std::ptrdiff_t>(d1), full.end());
    for (auto& x : part) x -= static_cast<Point>(d1);
    dp.right_component[e] = *right->find(part);
  }
  dp.embed_left.resize(left->order());
  dp.embed_right.resize(right->order());
  for (std::size_t e = 0; e < G.order(); ++e) {
    if (dp.right_component[e] == 0) dp.embed_left[dp.left_component[e]] = static_cast<ElementIndex>(e);
    if (dp.left_component[e] == 0) dp.embed_right[dp.right_component[e]] = static_cast<ElementIndex>(e);
  }
  return dp;
}

// ---------------------------------------------------------------------------
// Spec text

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    skip_ws();
    GroupSpec spec = parse_term();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      GroupSpec rhs = parse_term();
      skip_ws();
      spec = GroupSpec{GroupSpec::Product{std::make_shared<const GroupSpec>(std::move(spec)),
                                          std::make_shared<const GroupSpec>(std::move(rhs))}};
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) == literal) {
      pos_ += literal.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view literal) {
    if (!accept(literal)) fail("expected '" + std::string(literal) + "'");
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  GroupSpec parse_term() {
    if (accept("cyclic:")) {
      return GroupSpec{GroupSpec::Cyclic{positive()}};
    }
    if (accept("abelian:")) {
      GroupSpec::Abelian a;
      a.factors.push_back(positive());
      while (accept("x")) a.factors.push_back(positive());
      return GroupSpec{a};
    }
    if (accept("extraspecial:")) {
      expect("p=");
      std::uint64_t p = number();
      expect(",");
      expect("exp=");
      ExtraspecialKind kind;
      if (accept("p2")) {
        kind = ExtraspecialKind::ExponentP2;
      } else if (accept("p")) {
        kind = ExtraspecialKind::ExponentP;
      } else {
        fail("expected exp=p or exp=p2");
      }
      return GroupSpec{GroupSpec::Extraspecial{p, kind}};
    }
    if (accept("wreath:")) {
      expect("p=");
      return GroupSpec{GroupSpec::Wreath{number()}};
    }
    if (accept("perm:")) return parse_perm();
    fail("unknown group family");
  }

  std::uint64_t positive() {
    std::size_t at = pos_;
    std::uint64_t n = number();
    if (n == 0) throw ParseError("order must be positive", at);
    return n;
  }

  GroupSpec parse_perm() {
    expect("degree=");
    std::size_t at = pos_;
    std::uint64_t degree = positive();
    if (degree > 65535) throw ParseError("degree too large", at);
    expect(";");
    expect("gens=");
    GroupSpec::Perm perm;
    perm.degree = degree;
    while (true) {
      perm.generators.push_back(parse_cycles(degree));
      if (!accept(";")) break;
    }
    return GroupSpec{perm};
  }

  Permutation parse_cycles(std::size_t degree) {
    std::vector<std::vector<Point>> cycles;
    const std::size_t start = pos_;
    skip_ws();
    while (peek() == '(') {
      ++pos_;
      std::vector<Point> cycle;
      skip_ws();
      while (peek() != ')') {
        std::size_t at = pos_;
        std::uint64_t x = number();
        if (x >= degree) throw ParseError("point " + std::to_string(x) + " outside degree", at);
        cycle.push_back(static_cast<Point>(x));
        skip_ws();
      }
      ++pos_;
      cycles.push_back(std::move(cycle));
      skip_ws();
    }
    try {
      return Permutation::from_cycles(degree, cycles);
    } catch (const InvalidPermutation& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string GroupSpec::to_string() const {
  struct Printer {
    std::string operator()(const Cyclic& c) const { return "cyclic:" + std::to_string(c.n); }
    std::string operator()(const Abelian& a) const {
      std::string s = "abelian:";
      for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(a.factors[i]);
      }
      return s;
    }
    std::string operator()(const Extraspecial& e) const {
      return "extraspecial:p=" + std::to_string(e.p) +
             (e.kind == ExtraspecialKind::ExponentP ? ",exp=p" : ",exp=p2");
    }
    std::string operator()(const Wreath& w) const { return "wreath:p=" + std::to_string(w.p); }
    std::string operator()(const Perm& p) const {
      std::string s = "perm:degree=" + std::to_string(p.degree) + ";gens=";
      for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) s += ';';
        s += p.generators[i].to_cycle_string();
      }
      return s;
    }
    std::string operator()(const Product& p) const {
      return p.left->to_string() + "*" + p.right->to_string();
    }
  };
  return std::visit(Printer{}, kind);
}

BuiltGroup build_group(const GroupSpec& spec, const BuildOptions& options) {
  BuiltGroup built;
  built.spec = spec;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, GroupSpec::Cyclic>) {
          built.group = cyclic(k.n, options.cap);
        } else if constexpr (std::is_same_v<K, GroupSpec::Abelian>) {
          built.group = abelian(k.factors, options.cap);
        } else if constexpr (std::is_same_v<K, GroupSpec::Extraspecial>) {
          built.group = extraspecial(k.p, k.kind, options.cap);
        } else if constexpr (std::is_same_v<K, GroupSpec::Wreath>) {
          auto w = wreath_cyclic(k.p, options.stretch, options.cap);
          built.group = w.group;
          built.wreath_base = std::move(w.base);
        } else if constexpr (std::is_same_v<K, GroupSpec::Perm>) {
          built.group = FiniteGroup::generate(k.degree, k.generators, options.cap);
        } else {
          built.left = std::make_shared<const BuiltGroup>(build_group(*k.left, options));
          built.right = std::make_shared<const BuiltGroup>(build_group(*k.right, options));
          auto dp = std::make_shared<DirectProduct>(
              direct_product(built.left->group, built.right->group, options.cap));
          built.group = dp->group;
          built.product = std::move(dp);
        }
      },
      spec.kind);
  return built;
}

BuiltGroup build_group(std::string_view text, const BuildOptions& options) {
  return build_group(parse_group_spec(text), options);
}

}  // namespace charforge
