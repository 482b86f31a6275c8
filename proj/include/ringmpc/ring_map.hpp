#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringmpc/limits.hpp"
#include "ringmpc/ring.hpp"

namespace ringmpc {

enum class MapRole { Endomorphism, Derivation };

/// A validated ring endomorphism sigma (sigma(1) = 1) or a sigma-derivation
/// delta (delta(ab) = sigma(a) delta(b) + delta(a) b). Stored as a full value
/// table; every axiom is checked over all pairs of the ring at construction,
/// and a violation throws AxiomViolation naming the failing pair.
class RingMap {
 public:
  // Endomorphisms.
  static RingMap identity(const Ring& ring);
  /// x -> x^(p^power) on a Galois field.
  static RingMap frobenius(const Ring& ring, unsigned power = 1);
  /// sigma(x)_i = x_{perm[i]} on a product ring whose permuted factors agree.
  static RingMap permute_components(const Ring& ring, std::vector<std::size_t> perm);
  static RingMap endomorphism_from_table(const Ring& ring, std::vector<Elem> values,
                                         std::string description = "table");

  // Derivations attached to a validated endomorphism.
  static RingMap zero_derivation(const RingMap& sigma);
  /// a -> beta (sigma(a) - a).
  static RingMap inner_derivation(const RingMap& sigma, Elem beta);
  static RingMap derivation_from_table(const RingMap& sigma, std::vector<Elem> values,
                                       std::string description = "table");

  Elem operator()(Elem a) const { return (*table_)[a]; }
  Word apply(std::span<const Elem> v) const;

  MapRole role() const { return role_; }
  const Ring& ring() const { return ring_; }
  const std::string& description() const { return description_; }
  std::span<const Elem> table() const { return *table_; }
  /// The endomorphism a derivation is attached to.
  const RingMap& sigma() const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_bijective() const;

  /// (this o other)(a) = this(other(a)); endomorphisms only.
  RingMap compose(const RingMap& other) const;
  RingMap power(unsigned k) const;
  /// Inverse automorphism when the endomorphism is bijective.
  std::optional<RingMap> inverse() const;

  bool operator==(const RingMap& o) const;

 private:
  RingMap(Ring ring, MapRole role, std::vector<Elem> values, std::string description,
          std::shared_ptr<const RingMap> sigma);
  void validate() const;

  Ring ring_;
  MapRole role_;
  std::shared_ptr<const std::vector<Elem>> table_;
  std::string description_;
  std::shared_ptr<const RingMap> sigma_;
};

}  // namespace ringmpc
