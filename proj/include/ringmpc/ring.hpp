#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringmpc {

/// Index of an element inside its ring. Indices are canonical, so two
/// elements of the same ring are equal iff their indices are equal; 0 is
/// always the zero element.
///
///   integers-mod-m : the residue in [0, m)
///   galois-field   : sum of c_i p^i over the coefficient vector (c_0..c_{k-1})
///                    in the basis 1, alpha, ..., alpha^{k-1}
///   product        : mixed radix over the factors, first factor most
///                    significant, so enumeration is lexicographic
using Elem = std::uint32_t;

/// A word over a ring: vector, codeword, matrix row.
using Word = std::vector<Elem>;

enum class RingKind { IntegersMod, GaloisField, Product };

namespace detail {
struct RingData;
}

/// A finite commutative ring with identity. Cheap to copy; immutable.
class Ring {
 public:
  /// Z/mZ, m >= 2.
  static Ring integers_mod(std::uint32_t m);
  /// GF(p^k) with the given monic modulus (ascending coefficients, length
  /// k+1). An empty modulus picks the first monic irreducible polynomial of
  /// degree k in enumeration order. The modulus is checked for
  /// irreducibility by exhaustive trial division.
  static Ring galois_field(std::uint32_t p, unsigned k,
                           std::vector<std::uint32_t> modulus = {});
  /// Direct product of at least two rings.
  static Ring product(std::vector<Ring> factors);

  RingKind kind() const;
  std::size_t size() const;
  /// Short human-readable name, e.g. "Z4", "GF(4)", "Z3xZ3".
  const std::string& name() const;
  std::uint32_t characteristic() const;

  Elem zero() const { return 0; }
  Elem one() const;
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Multiplicative inverse when a is a unit.
  std::optional<Elem> inverse(Elem a) const;
  bool is_unit(Elem a) const { return inverse(a).has_value(); }

  /// All elements in index order 0, 1, ..., size()-1.
  std::vector<Elem> elements() const;

  std::string format(Elem a) const;
  /// Parses an element literal or a ring expression such as
  /// "alpha^2+1", "(2,2)", "-1", "3*alpha". Names not known to the ring are
  /// looked up through `names`.
  Elem parse(std::string_view text,
             const std::function<std::optional<Elem>(std::string_view)>& names = {}) const;

  // Galois-field structure.
  std::uint32_t prime() const;
  unsigned degree() const;
  const std::vector<std::uint32_t>& modulus() const;
  /// The class of X modulo the modulus, printed as "alpha".
  Elem generator() const;
  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;

  // Product structure.
  const std::vector<Ring>& factors() const;
  Word components(Elem a) const;
  Elem from_components(std::span<const Elem> comps) const;

  // Decomposition into local rings (Z/p^e Z or a Galois field). Every
  // implemented ring is isomorphic to the product of its local factors;
  // to_local/from_local are the two halves of that isomorphism.
  std::vector<Ring> local_factors() const;
  Word to_local(Elem a) const;
  Elem from_local(std::span<const Elem> parts) const;

  // Chain-ring structure, valid only when is_local(). The maximal ideal is
  // generated by the uniformizer pi (p for Z/p^e Z, 0 for a field) and
  // pi^nilpotency() = 0.
  bool is_local() const;
  unsigned nilpotency() const;
  /// Largest t with a in pi^t R; nilpotency() for a == 0.
  unsigned valuation(Elem a) const;
  Elem uniformizer_power(unsigned t) const;
  /// Size of the residue field R / (pi).
  std::size_t residue_size() const;
  /// Some c with a * c == b; requires valuation(a) <= valuation(b).
  Elem divide(Elem b, Elem a) const;

  /// Structural equality (same construction parameters).
  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::RingData> d_;
};

/// An element bundled with its ring; arithmetic between elements of
/// different rings throws RingMismatch.
class RingElement {
 public:
  RingElement(Ring ring, Elem value);

  const Ring& ring() const { return ring_; }
  Elem value() const { return value_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  bool operator==(const RingElement& o) const;

  std::optional<RingElement> inverse() const;
  std::string to_string() const { return ring_.format(value_); }

 private:
  Ring ring_;
  Elem value_;
};

/// Throws RingMismatch unless both rings are equal.
void require_same_ring(const Ring& a, const Ring& b, std::string_view what);

std::size_t hamming_weight(std::span<const Elem> v);
std::string format_word(const Ring& ring, std::span<const Elem> v);

}  // namespace ringmpc
