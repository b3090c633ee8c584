#include "taufact/lemma_predictors.hpp"

#include <algorithm>

#include "taufact/error.hpp"

namespace taufact {

std::string_view to_string(Role r) {
  switch (r) {
    case Role::Zero: return "0";
    case Role::One: return "1";
    case Role::Two: return "2";
    case Role::Three: return "3";
    case Role::X: return "x";
    case Role::XPlus1: return "x+1";
  }
  return "?";
}

std::string_view to_string(Atomicity a) {
  switch (a) {
    case Atomicity::Atomic: return "Atomic";
    case Atomicity::NotAtomic: return "NotAtomic";
    case Atomicity::NoClosedForm: return "NoClosedForm";
  }
  return "?";
}

Role IsoMap::role_of(const Residue& r) const {
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] == r) return roles[i];
  }
  throw Error(ErrorCode::InternalCheckFailed, "residue " + to_string(r) + " not in the iso map");
}

const Residue& IsoMap::residue_of(Role role) const {
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == role) return residues[i];
  }
  throw Error(ErrorCode::InternalCheckFailed, "role " + std::string(to_string(role)) + " not in the iso map");
}

Ideal model_ideal(IsoClass cls) {
  switch (cls) {
    case IsoClass::Z4: return Ideal(RingTag::IntegerRing, 4);
    case IsoClass::Z2X_X2P1: return Ideal(RingTag::IntPolyRing, 2, Poly{1, 0, 1});
    case IsoClass::F4: return Ideal(RingTag::IntPolyRing, 2, Poly{1, 1, 1});
    case IsoClass::Z2X_X2PX: return Ideal(RingTag::IntPolyRing, 2, Poly{0, 1, 1});
    case IsoClass::Other: break;
  }
  throw Error(ErrorCode::WrongIsoClass, "no model ring for class Other");
}

namespace {

Role model_role(IsoClass cls, const Residue& r) {
  if (cls == IsoClass::Z4) {
    static constexpr Role z4[] = {Role::Zero, Role::One, Role::Two, Role::Three};
    return z4[r.rep.constant_term().get_ui()];
  }
  if (r.rep.is_zero()) return Role::Zero;
  if (r.rep == Poly{1}) return Role::One;
  if (r.rep == Poly{0, 1}) return Role::X;
  return Role::XPlus1;
}

// The quotient residue playing the role of the model's x.
std::size_t choose_x_image(IsoClass cls, const CayleyTable& t) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t sq = t.product(i, i);
    switch (cls) {
      case IsoClass::Z2X_X2P1:
        if (sq == t.one() && i != t.one()) hits.push_back(i);
        break;
      case IsoClass::F4:
        if (sq == t.sum(i, t.one())) hits.push_back(i);
        break;
      case IsoClass::Z2X_X2PX:
        if (sq == i && i != t.zero() && i != t.one()) hits.push_back(i);
        break;
      default:
        break;
    }
  }
  if (hits.empty()) throw Error(ErrorCode::InternalCheckFailed, "no image for x");
  // Residues are stored in ascending order, so the first hit is the
  // lexicographically smallest representative.
  return hits.front();
}

}  // namespace

IsoMap build_iso_map(const Ideal& ideal) {
  const IsoClass cls = classify_order4(ideal);
  if (cls == IsoClass::Other) throw Error(ErrorCode::NotOrderFour, "unclassified quotient of order four");
  const CayleyTable table(ideal);
  const Ideal model = model_ideal(cls);
  const CayleyTable model_table(model);

  // image[j] = quotient index of model residue j.
  std::vector<std::size_t> image(model_table.size());
  std::optional<Poly> x_rep;
  if (cls != IsoClass::Z4) x_rep = table.residues()[choose_x_image(cls, table)].rep;
  for (std::size_t j = 0; j < model_table.size(); ++j) {
    const Poly& mrep = model_table.residues()[j].rep;
    const Poly lifted = x_rep ? compose(mrep, *x_rep) : mrep;
    image[j] = table.index_of(reduce(lifted, ideal));
  }

  std::vector<bool> seen(table.size(), false);
  for (std::size_t j : image) seen[j] = true;
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw Error(ErrorCode::InternalCheckFailed, "map onto R/" + to_string(ideal) + " is not bijective");
  }
  for (std::size_t a = 0; a < model_table.size(); ++a) {
    for (std::size_t b = 0; b < model_table.size(); ++b) {
      if (image[model_table.product(a, b)] != table.product(image[a], image[b]) ||
          image[model_table.sum(a, b)] != table.sum(image[a], image[b])) {
        throw Error(ErrorCode::InternalCheckFailed, "map onto R/" + to_string(ideal) + " is not a ring map");
      }
    }
  }

  IsoMap iso;
  iso.iso_class = cls;
  iso.residues = table.residues();
  iso.roles.resize(table.size());
  for (std::size_t j = 0; j < model_table.size(); ++j) {
    iso.roles[image[j]] = model_role(cls, model_table.residues()[j]);
  }
  return iso;
}

std::array<Role, 4> census_roles(IsoClass cls) {
  switch (cls) {
    case IsoClass::Z4: return {Role::One, Role::Two, Role::Three, Role::Zero};
    case IsoClass::Z2X_X2P1:
    case IsoClass::Z2X_X2PX: return {Role::One, Role::X, Role::XPlus1, Role::Zero};
    case IsoClass::F4: return {Role::Zero, Role::One, Role::X, Role::XPlus1};
    case IsoClass::Other: break;
  }
  throw Error(ErrorCode::WrongIsoClass, "no census convention for class Other");
}

Census class_census(const FactoredElement& fe, const Ideal& ideal, const IsoMap& iso) {
  require_same_ring(fe.ring(), ideal.ring());
  const auto roles = census_roles(iso.iso_class);
  Census c;
  c.convention = iso.iso_class;
  unsigned* slots[] = {&c.k, &c.l, &c.m, &c.n};
  for (const auto& f : fe.factors()) {
    const Role r = iso.role_of(reduce(f.prime, ideal));
    const auto pos = std::find(roles.begin(), roles.end(), r) - roles.begin();
    *slots[pos] += f.exponent;
  }
  return c;
}

namespace {

void require_class(const Census& c, IsoClass expected) {
  if (c.convention != expected) {
    throw Error(ErrorCode::WrongIsoClass, "census for " + std::string(to_string(c.convention)) + " given to the " +
                                              std::string(to_string(expected)) + " predictor");
  }
  if (c.total() == 0) throw Error(ErrorCode::ZeroOrUnitInput, "empty census describes a unit");
}

PredictedProfile atomic(std::set<std::size_t> lengths, bool derived = false) {
  PredictedProfile p;
  p.atomicity = Atomicity::Atomic;
  p.elasticity = Ratio(*lengths.rbegin(), *lengths.begin());
  p.lengths = std::move(lengths);
  p.derived = derived;
  return p;
}

PredictedProfile not_atomic(bool derived) {
  PredictedProfile p;
  p.atomicity = Atomicity::NotAtomic;
  p.derived = derived;
  return p;
}

}  // namespace

PredictedProfile predict_z4(const Census& c, Role a_class) {
  require_class(c, IsoClass::Z4);
  const bool in_ideal = c.n >= 1 || c.l >= 2;
  const bool consistent = in_ideal ? a_class == Role::Zero
                          : c.l == 1 ? a_class == Role::Two
                                     : (a_class == Role::One || a_class == Role::Three);
  if (!consistent) {
    throw Error(ErrorCode::InconsistentCensus,
                "element class " + std::string(to_string(a_class)) + " does not match its census");
  }
  switch (a_class) {
    case Role::Two: return atomic({1});
    case Role::One:
    case Role::Three: return atomic({c.k + c.m});
    default: break;
  }
  // a in I. With a prime in I every atom holds exactly one such prime and at
  // most one prime of class 2.
  if (c.n >= 1) return c.l <= c.n ? atomic({c.n}, true) : not_atomic(true);
  return atomic({c.l});
}

PredictedProfile predict_zx_x2p1(const Census& c, bool unit_in_x_class) {
  require_class(c, IsoClass::Z2X_X2P1);
  // x+1 is the nilpotent class and plays the part of 2 in Z/4Z.
  if (c.n >= 1) return c.m <= c.n ? atomic({c.n}, true) : not_atomic(true);
  if (c.m >= 1) return atomic({c.m});
  if (unit_in_x_class) return atomic({c.k + c.l});
  return atomic({c.l >= 1 ? c.l : c.k});
}

PredictedProfile predict_f4(const Census& c, unsigned unit_classes_count, bool primes_in_both_xr_classes) {
  require_class(c, IsoClass::F4);
  // Every atom of an element in I holds exactly one prime of I.
  if (c.k >= 1) return atomic({c.k});
  // Units in every class: each prime can be moved into any one class.
  if (unit_classes_count >= 3) return atomic({c.l + c.m + c.n});
  if (c.m == 0 || c.n == 0) {
    if (c.m >= 1) return atomic({c.m});
    if (c.n >= 1) return atomic({c.n});
    return atomic({c.l});
  }
  if (!primes_in_both_xr_classes) {
    throw Error(ErrorCode::InconsistentCensus, "census has primes in both x and x+1 classes");
  }
  // Atoms are single 1-class primes and x * (x+1) pairs.
  if (c.m == c.n) return atomic({c.m + c.l});
  return not_atomic(false);
}

PredictedProfile predict_zx_x2px(const Census& c) {
  require_class(c, IsoClass::Z2X_X2PX);
  if (c.n >= 1) return PredictedProfile{};
  if (c.l == 0 || c.m == 0) {
    if (c.l >= 1) return atomic({c.l});
    if (c.m >= 1) return atomic({c.m});
    return atomic({c.k});
  }
  const std::size_t shortest_long = std::min(c.l, c.m);
  if (shortest_long == 1) return atomic({1});
  std::set<std::size_t> lengths;
  for (std::size_t len = 2; len <= shortest_long; ++len) lengths.insert(len);
  // Only the endpoints 2 and min(l, m) are claimed outright; the interval
  // between them is derived.
  return atomic(std::move(lengths), shortest_long > 3);
}

QuotientFacts quotient_facts(const Ideal& ideal, unsigned search_bound) {
  QuotientFacts facts{ideal, build_iso_map(ideal), {}, false};
  for (const auto& r : unit_classes(ideal)) facts.unit_roles.push_back(facts.iso.role_of(r));
  if (facts.iso.iso_class != IsoClass::Z4) {
    const bool x = find_prime_in_class(ideal, facts.iso.residue_of(Role::X), search_bound).has_value();
    const bool x1 = find_prime_in_class(ideal, facts.iso.residue_of(Role::XPlus1), search_bound).has_value();
    facts.primes_in_both_xr_classes = x && x1;
  }
  return facts;
}

PredictedProfile predict(const FactoredElement& fe, const QuotientFacts& facts) {
  const Census c = class_census(fe, facts.ideal, facts.iso);
  const auto has_unit = [&](Role r) {
    return std::find(facts.unit_roles.begin(), facts.unit_roles.end(), r) != facts.unit_roles.end();
  };
  switch (facts.iso.iso_class) {
    case IsoClass::Z4: return predict_z4(c, facts.iso.role_of(reduce(expand(fe), facts.ideal)));
    case IsoClass::Z2X_X2P1: return predict_zx_x2p1(c, has_unit(Role::X));
    case IsoClass::F4:
      return predict_f4(c, static_cast<unsigned>(facts.unit_roles.size()), facts.primes_in_both_xr_classes);
    case IsoClass::Z2X_X2PX: return predict_zx_x2px(c);
    case IsoClass::Other: break;
  }
  throw Error(ErrorCode::WrongIsoClass, "no predictor for class Other");
}

FactoredElement sequence_element(unsigned i) {
  if (i == 0) throw Error(ErrorCode::ZeroOrUnitInput, "sequence index starts at 1");
  return build_factored(RingTag::IntPolyRing, 1, {{Element::poly(Poly{0, 1}), i}, {Element::poly(Poly{1, 1}), i}});
}

PredictedProfile sequence_profile(unsigned i) {
  Census c{IsoClass::Z2X_X2PX, 0, i, i, 0};
  return predict_zx_x2px(c);
}

}  // namespace taufact
