#pragma once

// Closed-form atomicity and length predictions for quotients of order four,
// driven by how an element's primes distribute over the residue classes.

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "taufact/quotient.hpp"
#include "taufact/ratio.hpp"
#include "taufact/ufd.hpp"

namespace taufact {

/// Element of a model ring: 0, 1, 2, 3 in Z/4Z, or 0, 1, x, x+1 in
/// Z[x]/(2, g).
enum class Role { Zero, One, Two, Three, X, XPlus1 };

std::string_view to_string(Role r);

/// Isomorphism from the model ring of `iso_class` onto R/I, stored as the role
/// of each residue of R/I.
struct IsoMap {
  IsoClass iso_class = IsoClass::Other;
  std::vector<Residue> residues;  // enumerate_residues(I)
  std::vector<Role> roles;        // roles[i] is the model element sent to residues[i]

  Role role_of(const Residue& r) const;
  const Residue& residue_of(Role role) const;
};

/// Error(NotOrderFour) for quotients of other sizes; Error(InternalCheckFailed)
/// if the chosen map does not carry the model tables onto the quotient's.
IsoMap build_iso_map(const Ideal& ideal);

/// The model ring's own ideal: (4) in Z, or (2, x^2+1), (2, x^2+x+1),
/// (2, x^2+x) in Z[x].
Ideal model_ideal(IsoClass cls);

/// Prime multiplicities per role. Which role each letter counts depends on the
/// class:
///   Z4:                 k = 1, l = 2, m = 3, n = 0
///   Z2X_X2P1, Z2X_X2PX: k = 1, l = x, m = x+1, n = 0
///   F4:                 k = 0, l = 1, m = x, n = x+1
struct Census {
  IsoClass convention = IsoClass::Other;
  unsigned k = 0, l = 0, m = 0, n = 0;

  unsigned total() const noexcept { return k + l + m + n; }
  friend bool operator==(const Census&, const Census&) = default;
};

/// Roles counted by k, l, m, n for the given class.
std::array<Role, 4> census_roles(IsoClass cls);

Census class_census(const FactoredElement& fe, const Ideal& ideal, const IsoMap& iso);

enum class Atomicity { Atomic, NotAtomic, NoClosedForm };

std::string_view to_string(Atomicity a);

struct PredictedProfile {
  Atomicity atomicity = Atomicity::NoClosedForm;
  std::set<std::size_t> lengths;    // nonempty iff Atomic
  std::optional<Ratio> elasticity;  // max/min of lengths iff Atomic
  /// The outcome rests on a derived rule rather than an explicit length
  /// claim; such outcomes are only ever checked against the oracle.
  bool derived = false;

  friend bool operator==(const PredictedProfile&, const PredictedProfile&) = default;
};

/// Z/4Z. `a_class` is the role of the element itself.
PredictedProfile predict_z4(const Census& c, Role a_class);
/// Z[x]/(2, x^2+1).
PredictedProfile predict_zx_x2p1(const Census& c, bool unit_in_x_class);
/// F4 = Z[x]/(2, x^2+x+1). `unit_classes_count` counts nonzero classes that
/// contain a unit (1 or 3).
PredictedProfile predict_f4(const Census& c, unsigned unit_classes_count, bool primes_in_both_xr_classes);
/// Z[x]/(2, x^2+x).
PredictedProfile predict_zx_x2px(const Census& c);

/// Facts about R and I the predictors consume, computed by bounded search.
struct QuotientFacts {
  Ideal ideal;
  IsoMap iso;
  std::vector<Role> unit_roles;  // roles containing a unit of R
  bool primes_in_both_xr_classes = false;
};

QuotientFacts quotient_facts(const Ideal& ideal, unsigned search_bound = 10);

/// Dispatches to the predictor for facts.iso.iso_class.
PredictedProfile predict(const FactoredElement& fe, const QuotientFacts& facts);

/// x^i (x+1)^i in Z[x].
FactoredElement sequence_element(unsigned i);

/// Predicted profile of sequence_element(i) under (2, x^2+x).
PredictedProfile sequence_profile(unsigned i);

}  // namespace taufact
