#ifndef NERALIGN_MONOID_HPP
#define NERALIGN_MONOID_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neralign/errors.hpp"

namespace neralign {

/// Monomial in the free commutative monoid on named generators. Models a
/// principal ideal of a regular local ring up to units: exponents are the
/// orders along the height-1 primes named by the generators.
///
/// Invariant: stored exponents are >= 1; the empty map is the identity.
class Label {
 public:
  Label() = default;
  explicit Label(std::map<std::string, int> exponents);

  static Label generator(const std::string& name, int exponent = 1);

  const std::map<std::string, int>& exponents() const { return exponents_; }
  bool is_identity() const { return exponents_.empty(); }
  int exponent_of(const std::string& name) const;
  /// Sum of all exponents (the chain length used by regularisation).
  int total_degree() const;

  Label times(const Label& other) const;
  Label pow(int k) const;

  /// Splits into (primitive direction, multiple): *this == primitive^multiple
  /// with the primitive's exponents coprime. Identity maps to (identity, 0).
  std::pair<Label, int> primitive_decomposition() const;

  bool operator==(const Label& other) const = default;
  auto operator<=>(const Label& other) const = default;

  std::string to_string() const;

 private:
  std::map<std::string, int> exponents_;
};

Label label_mul(const Label& a, const Label& b);

struct ProportionalityWitness {
  // Minimal positive coprime pair with a^n == b^n_prime.
  int n = 0;
  int n_prime = 0;
  bool operator==(const ProportionalityWitness&) const = default;
};

/// Decides whether a^n = b^n' holds for some positive n, n', i.e. whether the
/// exponent vectors are parallel. Returns the minimal coprime witness, or
/// nothing when no relation exists. Identity inputs are rejected: edge labels
/// are never units where this relation is consulted.
std::optional<ProportionalityWitness> proportional(const Label& a,
                                                   const Label& b);

/// Cyclic submonoid { k*(m,n) : k >= 0 } of N0 x N0, given by its generator.
/// The zero monoid is generator (0,0).
struct CyclicMonoidN2 {
  std::int64_t m = 0;
  std::int64_t n = 0;

  bool is_zero() const { return m == 0 && n == 0; }
  bool contains(std::int64_t a, std::int64_t b) const;
  bool operator==(const CyclicMonoidN2&) const = default;
};

/// Replaces the generator by its primitive part (divide by the gcd of the
/// coordinates). Idempotent; the zero monoid is fixed.
CyclicMonoidN2 saturation(const CyclicMonoidN2& monoid);

/// Smallest non-zero element common to all the monoids, which exists exactly
/// when their saturations agree. Empty input is an error; inputs containing
/// the zero monoid yield nothing (the zero monoid has no non-zero element).
std::optional<std::pair<std::int64_t, std::int64_t>> common_relation(
    const std::vector<CyclicMonoidN2>& monoids);

/// Assignment of a nonnegative vanishing order to each generator; models a
/// non-degenerate test trait through the base point.
class TraitSpec {
 public:
  TraitSpec() = default;
  explicit TraitSpec(std::map<std::string, int> orders);

  const std::map<std::string, int>& orders() const { return orders_; }
  /// Order of the named generator; generators never mentioned get order 0.
  int order_of(const std::string& name) const;
  /// Order of a monomial label: sum of exponent * generator order.
  long long order_of_label(const Label& label) const;

  bool operator==(const TraitSpec&) const = default;

 private:
  std::map<std::string, int> orders_;
};

}  // namespace neralign

#endif  // NERALIGN_MONOID_HPP
