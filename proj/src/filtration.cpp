#include "asymprime/filtration.hpp"

#include <algorithm>

#include "asymprime/newton.hpp"

namespace asymprime {

bool MultiIndex::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e == 0; });
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (dim() != other.dim()) throw DimensionError("multi-indices have different lengths");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

bool MultiIndex::strictly_below(const MultiIndex& other) const {
  if (dim() != other.dim()) throw DimensionError("multi-indices have different lengths");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (entries_[i] >= other.entries_[i]) return false;
  }
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionError("multi-indices have different lengths");
  std::vector<MultiIndex::Entry> e(a.dim());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &e[i])) throw OverflowError("multi-index overflow");
  }
  return MultiIndex(std::move(e));
}

std::string to_string(const MultiIndex& n) {
  if (n.dim() == 1) return std::to_string(n[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < n.dim(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(n[i]);
  }
  return out + ")";
}

std::vector<MultiIndex> grid_points(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  const std::size_t d = bound.dim();
  std::vector<MultiIndex::Entry> a(d, 0);
  for (;;) {
    out.emplace_back(a);
    std::size_t i = d;
    while (i > 0 && a[i - 1] == bound[i - 1]) a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------

IdealFamily::IdealFamily(std::vector<MonomialIdeal> ideals)
    : ideals_(std::move(ideals)), cache_(std::make_shared<Cache>()) {
  if (ideals_.empty()) throw SpecError("an ideal family needs at least one ideal");
  for (const auto& j : ideals_) {
    if (j.nvars() != ideals_.front().nvars()) {
      throw DimensionError("family ideals live in different rings");
    }
    if (j.is_zero() || j.is_unit()) {
      throw SpecError("family ideals must be nonzero and proper");
    }
  }
}

MonomialIdeal IdealFamily::axis_power(std::size_t i, std::uint32_t e) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->axis_powers.find({i, e});
    if (it != cache_->axis_powers.end()) return it->second;
  }
  MonomialIdeal value = e == 0 ? MonomialIdeal::unit(nvars())
                               : asymprime::product(axis_power(i, e - 1), ideals_[i]);
  std::lock_guard lock(cache_->mutex);
  return cache_->axis_powers.emplace(std::pair{i, e}, std::move(value)).first->second;
}

MonomialIdeal IdealFamily::power(const MultiIndex& n) const {
  if (n.dim() != dim()) {
    throw DimensionError("multi-index of length " + std::to_string(n.dim()) +
                         " for a family of " + std::to_string(dim()) + " ideals");
  }
  MonomialIdeal out = MonomialIdeal::unit(nvars());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (n[i] > 0) out = asymprime::product(out, axis_power(i, n[i]));
  }
  return out;
}

MonomialIdeal IdealFamily::product_ideal() const {
  return power(MultiIndex::diagonal(dim(), 1));
}

MonomialIdeal IdealFamily::colon_power(const MonomialIdeal& x, const MultiIndex& r) const {
  if (r.dim() != dim()) throw DimensionError("multi-index length does not match the family");
  MonomialIdeal out = x;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::uint32_t t = 0; t < r[i]; ++t) {
      MonomialIdeal next = colon(out, ideals_[i]);
      if (next.is_unit()) return next;
      out = std::move(next);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Filtration::Node {
  Kind kind;
  std::size_t nvars = 0;
  std::size_t d = 0;
  std::optional<IdealFamily> family;
  std::vector<MonomialIdeal> ideals;  // K for saturation, base for closure, ...
  std::optional<MonomialIdeal> modulus;
  std::vector<Filtration> factors;
  std::string name;
  std::function<MonomialIdeal(const MultiIndex&)> fn;

  mutable std::mutex mutex;
  mutable std::map<MultiIndex, MonomialIdeal> memo;

  MonomialIdeal compute(const MultiIndex& n) const {
    switch (kind) {
      case Kind::powers:
        return family->power(n);
      case Kind::trivial:
        return MonomialIdeal::unit(nvars);
      case Kind::saturation: {
        MonomialIdeal base = family->power(n);
        if (modulus) base = sum(base, *modulus);
        return saturate(base, ideals.front());
      }
      case Kind::closure:
        return closure_of_power(ideals.front(), n[0]);
      case Kind::intersection_powers: {
        MonomialIdeal out = MonomialIdeal::unit(nvars);
        for (const auto& i : ideals) out = intersect(out, power(i, n[0]));
        return out;
      }
      case Kind::axis_product: {
        MonomialIdeal out = MonomialIdeal::unit(nvars);
        for (std::size_t i = 0; i < factors.size(); ++i) {
          out = product(out, factors[i].eval(MultiIndex{n[i]}));
        }
        return out;
      }
      case Kind::rule: {
        MonomialIdeal out = fn(n);
        if (out.nvars() != nvars) throw DimensionError("filtration rule returned a foreign ideal");
        return out;
      }
    }
    throw InvariantError("unknown filtration kind");
  }
};

Filtration::Filtration(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Filtration Filtration::powers(IdealFamily family) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::powers;
  node->nvars = family.nvars();
  node->d = family.dim();
  node->family = std::move(family);
  return Filtration(std::move(node));
}

Filtration Filtration::trivial(std::size_t nvars, std::size_t d) {
  if (d == 0) throw SpecError("filtration dimension must be at least 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::trivial;
  node->nvars = nvars;
  node->d = d;
  return Filtration(std::move(node));
}

Filtration Filtration::saturation(IdealFamily family, MonomialIdeal k,
                                  std::optional<MonomialIdeal> modulus) {
  if (k.nvars() != family.nvars()) throw DimensionError("K lives in a different ring");
  if (k.is_zero()) throw SpecError("saturation by the zero ideal is undefined");
  if (modulus && modulus->nvars() != family.nvars()) {
    throw DimensionError("modulus lives in a different ring");
  }
  if (modulus && modulus->is_zero()) modulus.reset();
  auto node = std::make_shared<Node>();
  node->kind = Kind::saturation;
  node->nvars = family.nvars();
  node->d = family.dim();
  node->family = std::move(family);
  node->ideals = {std::move(k)};
  node->modulus = std::move(modulus);
  return Filtration(std::move(node));
}

Filtration Filtration::closure(MonomialIdeal base) {
  if (base.is_zero()) throw SpecError("closure filtration needs a nonzero ideal");
  auto node = std::make_shared<Node>();
  node->kind = Kind::closure;
  node->nvars = base.nvars();
  node->d = 1;
  node->ideals = {std::move(base)};
  return Filtration(std::move(node));
}

Filtration Filtration::intersection_powers(std::vector<MonomialIdeal> ideals) {
  if (ideals.empty()) throw SpecError("intersection of powers needs at least one ideal");
  for (const auto& i : ideals) {
    if (i.nvars() != ideals.front().nvars()) throw DimensionError("ideals live in different rings");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::intersection_powers;
  node->nvars = ideals.front().nvars();
  node->d = 1;
  node->ideals = std::move(ideals);
  return Filtration(std::move(node));
}

Filtration Filtration::axis_product(std::vector<Filtration> factors) {
  if (factors.empty()) throw SpecError("axis product needs at least one factor");
  for (const auto& f : factors) {
    if (f.dim() != 1) throw DimensionError("axis product factors must be one-dimensional");
    if (f.nvars() != factors.front().nvars()) {
      throw DimensionError("axis product factors live in different rings");
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::axis_product;
  node->nvars = factors.front().nvars();
  node->d = factors.size();
  node->factors = std::move(factors);
  return Filtration(std::move(node));
}

Filtration Filtration::rule(std::size_t nvars, std::size_t d, std::string name,
                            std::function<MonomialIdeal(const MultiIndex&)> fn) {
  if (d == 0) throw SpecError("filtration dimension must be at least 1");
  auto node = std::make_shared<Node>();
  node->kind = Kind::rule;
  node->nvars = nvars;
  node->d = d;
  node->name = std::move(name);
  node->fn = std::move(fn);
  return Filtration(std::move(node));
}

Filtration::Kind Filtration::kind() const noexcept { return node_->kind; }
std::size_t Filtration::dim() const noexcept { return node_->d; }
std::size_t Filtration::nvars() const noexcept { return node_->nvars; }

MonomialIdeal Filtration::eval(const MultiIndex& n) const {
  if (n.dim() != node_->d) {
    throw DimensionError("multi-index of length " + std::to_string(n.dim()) +
                         " for a filtration of dimension " + std::to_string(node_->d));
  }
  {
    std::lock_guard lock(node_->mutex);
    auto it = node_->memo.find(n);
    if (it != node_->memo.end()) return it->second;
  }
  MonomialIdeal value = node_->compute(n);
  std::lock_guard lock(node_->mutex);
  return node_->memo.emplace(n, std::move(value)).first->second;
}

std::string Filtration::describe(const RingContext& ring) const {
  const Node& n = *node_;
  auto ideal_list = [&](const std::vector<MonomialIdeal>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ", ";
      s += to_string(v[i], ring);
    }
    return s;
  };
  switch (n.kind) {
    case Kind::powers:
      return "powers(" + ideal_list(n.family->ideals()) + ")";
    case Kind::trivial:
      return "trivial";
    case Kind::saturation: {
      std::string s = "saturation(" + ideal_list(n.family->ideals()) + "; " +
                      to_string(n.ideals.front(), ring) + ")";
      if (n.modulus) s += " mod " + to_string(*n.modulus, ring);
      return s;
    }
    case Kind::closure:
      return "closure(" + to_string(n.ideals.front(), ring) + ")";
    case Kind::intersection_powers:
      return "intersect_powers(" + ideal_list(n.ideals) + ")";
    case Kind::axis_product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < n.factors.size(); ++i) {
        if (i > 0) s += ", ";
        s += n.factors[i].describe(ring);
      }
      return s + ")";
    }
    case Kind::rule:
      return n.name;
  }
  return "?";
}

Filtration Filtration::with_modulus(const MonomialIdeal& modulus) const {
  switch (node_->kind) {
    case Kind::saturation:
      return saturation(*node_->family, node_->ideals.front(), modulus);
    case Kind::axis_product: {
      std::vector<Filtration> fs;
      for (const auto& f : node_->factors) fs.push_back(f.with_modulus(modulus));
      return axis_product(std::move(fs));
    }
    default:
      return *this;
  }
}

// ---------------------------------------------------------------------------

ValidationReport validate_multifiltration(const Filtration& f, const IdealFamily& family,
                                          const MultiIndex& grid) {
  if (f.dim() != family.dim() || grid.dim() != family.dim()) {
    throw DimensionError("filtration, family and grid dimensions disagree");
  }
  if (f.nvars() != family.nvars()) throw DimensionError("filtration and family rings differ");

  ValidationReport report;
  report.grid = grid;
  auto fail = [&](int axiom, MultiIndex n, std::optional<MultiIndex> other, std::string detail) {
    report.passed = false;
    report.violation = AxiomViolation{axiom, std::move(n), std::move(other), std::move(detail)};
    return report;
  };

  const std::size_t d = family.dim();
  const auto zero = MultiIndex::zero(d);
  ++report.checks;
  if (!f.eval(zero).is_unit()) return fail(1, zero, std::nullopt, "I_0 is not the unit ideal");

  const auto points = grid_points(grid);
  for (const auto& n : points) {
    ++report.checks;
    if (!is_subset(family.power(n), f.eval(n))) {
      return fail(2, n, std::nullopt, "J^n is not contained in I_n");
    }
  }
  // Checking immediate predecessors covers every pair m <= n by transitivity.
  for (const auto& n : points) {
    for (std::size_t i = 0; i < d; ++i) {
      if (n[i] == 0) continue;
      auto e = n.entries();
      --e[i];
      MultiIndex m(std::move(e));
      ++report.checks;
      if (!is_subset(f.eval(n), f.eval(m))) {
        return fail(3, n, m, "I_n is not contained in I_m for m <= n");
      }
    }
  }
  for (const auto& n : points) {
    if (n.is_zero()) continue;
    const MonomialIdeal jn = family.power(n);
    for (const auto& h : points) {
      ++report.checks;
      if (!is_subset(product(jn, f.eval(h)), f.eval(n + h))) {
        return fail(4, n, h, "J^n * I_h is not contained in I_{n+h}");
      }
    }
  }
  return report;
}

}  // namespace asymprime
