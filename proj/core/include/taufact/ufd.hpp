#pragma once

// Elements of the two supported UFDs (Z and Z[x]), their units, canonical
// associates, prime verification and factored representations.

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taufact/exact_arith.hpp"

namespace taufact {

enum class RingTag { IntegerRing, IntPolyRing };

std::string_view to_string(RingTag ring);

/// An element of Z or Z[x]. Integers are stored as constant polynomials so
/// both rings share one arithmetic path; the tag keeps them apart.
class Element {
 public:
  Element() = default;
  Element(RingTag ring, Poly value);

  static Element integer(const Integer& n) { return Element(RingTag::IntegerRing, Poly::constant(n)); }
  static Element poly(Poly p) { return Element(RingTag::IntPolyRing, std::move(p)); }
  static Element one(RingTag ring) { return Element(ring, Poly::constant(1)); }

  RingTag ring() const noexcept { return ring_; }
  const Poly& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  RingTag ring_ = RingTag::IntegerRing;
  Poly value_;
};

/// Throws Error(RingMismatch) if the tags differ.
void require_same_ring(RingTag a, RingTag b);

Element operator*(const Element& a, const Element& b);
Element operator-(const Element& a);

std::string to_string(const Element& e);

/// Parses an element in the shared text syntax; a nonconstant polynomial in
/// the integer ring is a ParseError.
Element parse_element(RingTag ring, std::string_view text);

using Sign = int;  // +1 or -1

/// The unit group, {+1, -1} for both rings. The engine iterates this list
/// rather than assuming its shape.
std::vector<Element> units(RingTag ring);

bool is_unit(const Element& e);

struct Associate {
  Sign unit;
  Element canonical;
};

/// canonical = unit * e with positive value / leading coefficient.
/// Throws Error(ZeroElement).
Associate canonical_associate(const Element& e);

/// Polynomials accepted as prime without verification.
class TrustedRegistry {
 public:
  TrustedRegistry() = default;

  /// One polynomial per line in the shared syntax; blank lines and lines
  /// starting with '#' are skipped. Entries are stored canonicalized.
  static TrustedRegistry load(const std::filesystem::path& path);
  static TrustedRegistry from_lines(std::string_view text);

  void add(const Poly& p);
  bool contains(const Poly& p) const { return entries_.count(p) != 0; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::set<Poly, PolyLess> entries_;
};

/// Primality in Z or Z[x] for a nonzero nonunit in canonical form.
/// Z: trial division. Z[x]: constants by integer primality; otherwise content
/// must be 1, degree 1 is prime, degrees 2-3 are decided by the rational-root
/// test. Degree >= 4 primitive polynomials throw Error(UnsupportedDegree).
bool verify_prime(const Element& e);

/// Integer primality by trial division (|n| is tested).
bool is_prime_integer(const Integer& n);

struct PrimePower {
  Element prime;
  unsigned exponent = 1;
  bool trusted = false;  // accepted from the registry, not verified

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.prime == b.prime && a.exponent == b.exponent;
  }
};

/// unit * prod prime^exponent with canonical, pairwise non-associate primes
/// sorted by poly_less.
class FactoredElement {
 public:
  FactoredElement(RingTag ring, Sign unit, std::vector<PrimePower> factors);

  RingTag ring() const noexcept { return ring_; }
  Sign unit() const noexcept { return unit_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }

  /// Total prime multiplicity.
  unsigned length() const noexcept;

  FactoredElement negated() const { return FactoredElement(ring_, -unit_, factors_); }

  friend bool operator==(const FactoredElement& a, const FactoredElement& b) {
    return a.ring_ == b.ring_ && a.unit_ == b.unit_ && a.factors_ == b.factors_;
  }

 private:
  RingTag ring_;
  Sign unit_;
  std::vector<PrimePower> factors_;
};

/// Canonicalizes every part (signs fold into the unit), verifies primality
/// (or consults the registry), merges equal primes and sorts. Throws
/// Error(NotPrime), Error(UnsupportedDegree), Error(ZeroOrUnitInput).
FactoredElement build_factored(RingTag ring, Sign unit, const std::vector<std::pair<Element, unsigned>>& parts,
                               const TrustedRegistry* registry = nullptr);

Element expand(const FactoredElement& fe);

/// Renders like `-1 * 2^2 * 7`; the unit is omitted when +1.
std::string to_string(const FactoredElement& fe);

}  // namespace taufact
