#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "asymprime/ideal.hpp"

namespace asymprime {

/// A point of N_0^d under the componentwise partial order.
class MultiIndex {
 public:
  using Entry = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<Entry> entries) : entries_(entries) {}

  static MultiIndex zero(std::size_t d) { return MultiIndex(std::vector<Entry>(d, 0)); }
  /// (c, ..., c).
  static MultiIndex diagonal(std::size_t d, Entry c) {
    return MultiIndex(std::vector<Entry>(d, c));
  }

  std::size_t dim() const noexcept { return entries_.size(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  /// Componentwise <=.
  bool leq(const MultiIndex& other) const;
  /// Componentwise <; every entry strictly smaller.
  bool strictly_below(const MultiIndex& other) const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

  /// Lexicographic, used only for deterministic ordering and tie-breaks.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<Entry> entries_;
};

/// `3` for d = 1, `(2,3)` otherwise.
std::string to_string(const MultiIndex& n);

/// Every n with 0 <= n <= bound, in lexicographic order.
std::vector<MultiIndex> grid_points(const MultiIndex& bound);

/// The ideals J_1, ..., J_d. Each is nonzero and proper. J^n is memoized and
/// the cache is safe to share between threads.
class IdealFamily {
 public:
  explicit IdealFamily(std::vector<MonomialIdeal> ideals);

  std::size_t dim() const noexcept { return ideals_.size(); }
  std::size_t nvars() const noexcept { return ideals_.front().nvars(); }
  const MonomialIdeal& operator[](std::size_t i) const { return ideals_.at(i); }
  const std::vector<MonomialIdeal>& ideals() const noexcept { return ideals_; }

  /// J_1^{n_1} ... J_d^{n_d}.
  MonomialIdeal power(const MultiIndex& n) const;
  /// J_1 ... J_d, the degree-(1,...,1) generators of R_+.
  MonomialIdeal product_ideal() const;
  /// (x : J^r), computed one factor at a time.
  MonomialIdeal colon_power(const MonomialIdeal& x, const MultiIndex& r) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<std::size_t, std::uint32_t>, MonomialIdeal> axis_powers;
  };
  MonomialIdeal axis_power(std::size_t i, std::uint32_t e) const;

  std::vector<MonomialIdeal> ideals_;
  std::shared_ptr<Cache> cache_;
};

/// A closed-form multi-filtration n -> I_n. Values are immutable and cheap
/// to copy; evaluations are memoized per multi-index in a thread-safe cache
/// shared by all copies.
class Filtration {
 public:
  enum class Kind { powers, trivial, saturation, closure, intersection_powers, axis_product, rule };

  /// I_n = J^n.
  static Filtration powers(IdealFamily family);
  /// I_n = A for all n, in dimension d.
  static Filtration trivial(std::size_t nvars, std::size_t d);
  /// I_n = (J^n + modulus) : K^oo. A nonzero modulus N evaluates the
  /// saturation in A/N and pulls it back to A.
  static Filtration saturation(IdealFamily family, MonomialIdeal k,
                               std::optional<MonomialIdeal> modulus = std::nullopt);
  /// I_n = integral closure of I^n (d = 1).
  static Filtration closure(MonomialIdeal base);
  /// I_n = I_1^n ∩ ... ∩ I_r^n (d = 1).
  static Filtration intersection_powers(std::vector<MonomialIdeal> ideals);
  /// I_n = F_1(n_1) ... F_d(n_d) for one-dimensional factors.
  static Filtration axis_product(std::vector<Filtration> factors);
  /// Arbitrary rule, for experiments and tests. `name` is echoed in reports.
  static Filtration rule(std::size_t nvars, std::size_t d, std::string name,
                         std::function<MonomialIdeal(const MultiIndex&)> fn);

  Kind kind() const noexcept;
  std::size_t dim() const noexcept;
  std::size_t nvars() const noexcept;

  /// The ideal I_n. Throws DimensionError if n has the wrong length.
  MonomialIdeal eval(const MultiIndex& n) const;

  /// Normalized one-line description, e.g. `saturation((x^2, x*y), (x, y))`.
  std::string describe(const RingContext& ring) const;

  /// Same filtration with the saturation modulus replaced (other kinds are
  /// returned unchanged; axis products recurse).
  Filtration with_modulus(const MonomialIdeal& modulus) const;

 private:
  struct Node;
  explicit Filtration(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// First failing instance of a multi-filtration axiom.
struct AxiomViolation {
  int axiom = 0;  // 1..4
  MultiIndex n;
  std::optional<MultiIndex> other;  // m for axiom (iii), h for axiom (iv)
  std::string detail;
};

/// Result of a finite-grid axiom check. `passed` means "verified on grid".
struct ValidationReport {
  bool passed = true;
  MultiIndex grid;
  std::size_t checks = 0;
  std::optional<AxiomViolation> violation;
};

/// Checks, over every n, m, h in the grid: (i) I_0 = A, (ii) J^n ⊆ I_n,
/// (iii) m <= n implies I_n ⊆ I_m, (iv) J^n I_h ⊆ I_{n+h}.
ValidationReport validate_multifiltration(const Filtration& f, const IdealFamily& family,
                                          const MultiIndex& grid);

}  // namespace asymprime
