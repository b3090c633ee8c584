#pragma once

// Ideals (m) and (m, g) with g monic, canonical residues, finite quotients,
// Cayley tables, order-4 classification and witness searches.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taufact/exact_arith.hpp"
#include "taufact/ufd.hpp"

namespace taufact {

class Ideal {
 public:
  /// (m) in Z or Z[x].
  Ideal(RingTag ring, Integer modulus);
  /// (m, g) in Z[x]; g must be monic of degree >= 1 (Error(NonMonicGenerator)).
  Ideal(RingTag ring, Integer modulus, Poly generator);

  RingTag ring() const noexcept { return ring_; }
  const Integer& modulus() const noexcept { return modulus_; }
  const std::optional<Poly>& generator() const noexcept { return generator_; }

  /// m >= 1 and, in Z[x], a generator present.
  bool is_finite() const;
  /// |R/I|; Error(InfiniteQuotient) unless finite.
  std::size_t quotient_size() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.modulus_ == b.modulus_ && a.generator_ == b.generator_;
  }

 private:
  RingTag ring_;
  Integer modulus_;
  std::optional<Poly> generator_;
};

/// Ideal text: "m" or "m, g", e.g. "2, x^2+x".
Ideal parse_ideal(RingTag ring, std::string_view text);
std::string to_string(const Ideal& ideal);

/// Canonical representative of e + I: remainder mod g, then coefficients
/// into [0, m). For m = 0 the representative is the element itself
/// (reduced mod g when present).
struct Residue {
  Poly rep;

  friend bool operator==(const Residue& a, const Residue& b) { return a.rep == b.rep; }
  friend bool operator<(const Residue& a, const Residue& b) { return poly_less(a.rep, b.rep); }
};

std::string to_string(const Residue& r);

Residue reduce(const Element& e, const Ideal& ideal);
/// Reduction of a bare polynomial already known to live in ideal.ring().
Residue reduce(const Poly& p, const Ideal& ideal);

bool congruent(const Element& a, const Element& b, const Ideal& ideal);

/// All residues in ascending poly_less order. Error(InfiniteQuotient).
std::vector<Residue> enumerate_residues(const Ideal& ideal);

class CayleyTable {
 public:
  explicit CayleyTable(const Ideal& ideal);

  const Ideal& ideal() const noexcept { return ideal_; }
  const std::vector<Residue>& residues() const noexcept { return residues_; }
  std::size_t size() const noexcept { return residues_.size(); }

  std::size_t product(std::size_t i, std::size_t j) const { return product_[i * size() + j]; }
  std::size_t sum(std::size_t i, std::size_t j) const { return sum_[i * size() + j]; }

  /// Index of a residue; Error(InternalCheckFailed) if absent.
  std::size_t index_of(const Residue& r) const;
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }

 private:
  Ideal ideal_;
  std::vector<Residue> residues_;
  std::vector<std::size_t> product_;
  std::vector<std::size_t> sum_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
};

CayleyTable cayley_table(const Ideal& ideal);

struct QuotientFingerprint {
  std::size_t size = 0;
  std::size_t characteristic = 0;
  std::size_t nilpotent_count = 0;   // t^2 = 0
  std::size_t idempotent_count = 0;  // t^2 = t
  std::size_t unit_count = 0;
};

QuotientFingerprint fingerprint(const CayleyTable& table);

enum class IsoClass { Z4, Z2X_X2P1, F4, Z2X_X2PX, Other };

std::string_view to_string(IsoClass c);

/// Classifies any finite quotient from its fingerprint; quotients not of
/// order four are Other.
IsoClass classify(const QuotientFingerprint& fp);

/// Error(NotOrderFour) unless |R/I| = 4.
IsoClass classify_order4(const Ideal& ideal);

/// Residues of the units +1 and -1, deduplicated and sorted.
std::vector<Residue> unit_classes(const Ideal& ideal);

/// Canonical-form prime candidates in the deterministic search order:
/// Z: 2, 3, 5, ... up to `bound`. Z[x]: constant primes up to `bound`, then
/// monic polynomials of degree 1..3 with lower coefficients in
/// [-bound, bound], ordered by height, then by (|c|, sign) from the top
/// coefficient down.
std::vector<Element> prime_candidates(RingTag ring, unsigned bound);

/// First verified prime p with reduce(p) == target, or nullopt.
std::optional<Element> find_prime_in_class(const Ideal& ideal, const Residue& target, unsigned bound);

/// Up to `count` distinct primes in the class, in search order.
std::vector<Element> primes_in_class(const Ideal& ideal, const Residue& target, std::size_t count, unsigned bound);

}  // namespace taufact
