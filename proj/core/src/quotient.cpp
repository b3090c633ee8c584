#include "taufact/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "taufact/error.hpp"

namespace taufact {

Ideal::Ideal(RingTag ring, Integer modulus) : ring_(ring), modulus_(std::move(modulus)) {
  if (modulus_ < 0) modulus_ = -modulus_;
}

Ideal::Ideal(RingTag ring, Integer modulus, Poly generator) : Ideal(ring, std::move(modulus)) {
  if (ring_ != RingTag::IntPolyRing) {
    throw Error(ErrorCode::RingMismatch, "ideals of Z carry no polynomial generator");
  }
  if (generator.degree() < 1 || generator.leading() != 1) {
    throw Error(ErrorCode::NonMonicGenerator, "generator " + to_string(generator) + " must be monic of degree >= 1");
  }
  generator_ = std::move(generator);
}

bool Ideal::is_finite() const {
  if (modulus_ < 1) return false;
  return ring_ == RingTag::IntegerRing || generator_.has_value();
}

std::size_t Ideal::quotient_size() const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteQuotient, "R/" + to_string(*this) + " is infinite");
  Integer size = modulus_;
  if (generator_) mpz_pow_ui(size.get_mpz_t(), modulus_.get_mpz_t(), static_cast<unsigned long>(generator_->degree()));
  if (!size.fits_ulong_p() || size > 1'000'000) {
    throw Error(ErrorCode::InfiniteQuotient, "R/" + to_string(*this) + " is too large to enumerate");
  }
  return size.get_ui();
}

Ideal parse_ideal(RingTag ring, std::string_view text) {
  const auto comma = text.find(',');
  Integer m = parse_integer(text.substr(0, comma));
  if (m < 0) throw Error(ErrorCode::ParseError, "ideal modulus must be nonnegative");
  if (comma == std::string_view::npos) return Ideal(ring, m);
  if (ring != RingTag::IntPolyRing) {
    throw Error(ErrorCode::ParseError, "ideal '" + std::string(text) + "' has a generator but the ring is Z");
  }
  return Ideal(ring, m, parse_poly(text.substr(comma + 1)));
}

std::string to_string(const Ideal& ideal) {
  std::string out = ideal.modulus().get_str();
  if (ideal.generator()) out += ", " + to_string(*ideal.generator());
  return out;
}

std::string to_string(const Residue& r) { return to_string(r.rep); }

Residue reduce(const Poly& p, const Ideal& ideal) {
  Poly rem = ideal.generator() ? poly_divmod_monic(p, *ideal.generator()).remainder : p;
  if (ideal.modulus() == 0) return {std::move(rem)};
  std::vector<Integer> coeffs = rem.coeffs();
  for (auto& c : coeffs) c = mod_nonneg(c, ideal.modulus());
  return {Poly(std::move(coeffs))};
}

Residue reduce(const Element& e, const Ideal& ideal) {
  require_same_ring(e.ring(), ideal.ring());
  return reduce(e.value(), ideal);
}

bool congruent(const Element& a, const Element& b, const Ideal& ideal) {
  require_same_ring(a.ring(), b.ring());
  return reduce(a, ideal) == reduce(b, ideal);
}

std::vector<Residue> enumerate_residues(const Ideal& ideal) {
  const std::size_t size = ideal.quotient_size();
  const std::size_t m = ideal.modulus().get_ui();
  const std::size_t width = ideal.generator() ? static_cast<std::size_t>(ideal.generator()->degree()) : 1;
  std::vector<Residue> out;
  out.reserve(size);
  // Counting in base m with the top coefficient most significant gives
  // ascending poly_less order.
  std::vector<std::size_t> digits(width, 0);
  for (std::size_t n = 0; n < size; ++n) {
    std::size_t v = n;
    for (std::size_t i = 0; i < width; ++i) {
      digits[i] = v % m;
      v /= m;
    }
    std::vector<Integer> coeffs(width);
    for (std::size_t i = 0; i < width; ++i) coeffs[i] = static_cast<unsigned long>(digits[i]);
    out.push_back({Poly(std::move(coeffs))});
  }
  std::sort(out.begin(), out.end());
  return out;
}

CayleyTable::CayleyTable(const Ideal& ideal) : ideal_(ideal), residues_(enumerate_residues(ideal)) {
  const std::size_t n = residues_.size();
  product_.resize(n * n);
  sum_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      product_[i * n + j] = index_of(reduce(residues_[i].rep * residues_[j].rep, ideal_));
      sum_[i * n + j] = index_of(reduce(residues_[i].rep + residues_[j].rep, ideal_));
    }
  }
  zero_ = index_of(reduce(Poly{}, ideal_));
  one_ = index_of(reduce(Poly::constant(1), ideal_));
}

std::size_t CayleyTable::index_of(const Residue& r) const {
  auto it = std::lower_bound(residues_.begin(), residues_.end(), r);
  if (it == residues_.end() || !(*it == r)) {
    throw Error(ErrorCode::InternalCheckFailed, "residue " + to_string(r) + " not in table");
  }
  return static_cast<std::size_t>(it - residues_.begin());
}

CayleyTable cayley_table(const Ideal& ideal) { return CayleyTable(ideal); }

QuotientFingerprint fingerprint(const CayleyTable& t) {
  QuotientFingerprint fp;
  fp.size = t.size();
  std::size_t acc = t.one();
  fp.characteristic = 1;
  while (acc != t.zero()) {
    acc = t.sum(acc, t.one());
    ++fp.characteristic;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t sq = t.product(i, i);
    if (sq == t.zero()) ++fp.nilpotent_count;
    if (sq == i) ++fp.idempotent_count;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t.product(i, j) == t.one()) {
        ++fp.unit_count;
        break;
      }
    }
  }
  return fp;
}

std::string_view to_string(IsoClass c) {
  switch (c) {
    case IsoClass::Z4: return "Z4";
    case IsoClass::Z2X_X2P1: return "Z2X_X2P1";
    case IsoClass::F4: return "F4";
    case IsoClass::Z2X_X2PX: return "Z2X_X2PX";
    case IsoClass::Other: return "Other";
  }
  return "Other";
}

IsoClass classify(const QuotientFingerprint& fp) {
  if (fp.size != 4) return IsoClass::Other;
  if (fp.characteristic == 4) return IsoClass::Z4;
  if (fp.unit_count == 3) return IsoClass::F4;
  if (fp.characteristic == 2 && fp.nilpotent_count == 2) return IsoClass::Z2X_X2P1;
  if (fp.characteristic == 2 && fp.idempotent_count == 4) return IsoClass::Z2X_X2PX;
  return IsoClass::Other;
}

IsoClass classify_order4(const Ideal& ideal) {
  if (!ideal.is_finite() || ideal.quotient_size() != 4) {
    throw Error(ErrorCode::NotOrderFour, "R/" + to_string(ideal) + " does not have order four");
  }
  return classify(fingerprint(cayley_table(ideal)));
}

std::vector<Residue> unit_classes(const Ideal& ideal) {
  if (!ideal.is_finite()) throw Error(ErrorCode::InfiniteQuotient, "R/" + to_string(ideal) + " is infinite");
  std::vector<Residue> out;
  for (const auto& u : units(ideal.ring())) {
    Residue r = reduce(u, ideal);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Visits candidates in search order until `visit` returns true.
void for_each_prime_candidate(RingTag ring, unsigned bound, const std::function<bool(const Element&)>& visit) {
  for (unsigned n = 2; n <= bound; ++n) {
    if (!is_prime_integer(n)) continue;
    if (visit(Element(ring, Poly::constant(n)))) return;
  }
  if (ring != RingTag::IntPolyRing) return;

  const int b = static_cast<int>(bound);
  // Coefficient values ordered 0, 1, -1, 2, -2, ...
  std::vector<int> values{0};
  for (int v = 1; v <= b; ++v) {
    values.push_back(v);
    values.push_back(-v);
  }
  auto rank = [](int v) { return v > 0 ? 2 * v - 1 : -2 * v; };

  for (int degree = 1; degree <= 3; ++degree) {
    // Lower coefficients c_{degree-1} .. c_0.
    std::vector<std::vector<int>> tuples{{}};
    for (int pos = 0; pos < degree; ++pos) {
      std::vector<std::vector<int>> next;
      for (const auto& t : tuples) {
        for (int v : values) {
          auto u = t;
          u.push_back(v);
          next.push_back(std::move(u));
        }
      }
      tuples = std::move(next);
    }
    std::stable_sort(tuples.begin(), tuples.end(), [&](const auto& x, const auto& y) {
      int hx = 0, hy = 0;
      for (int v : x) hx = std::max(hx, std::abs(v));
      for (int v : y) hy = std::max(hy, std::abs(v));
      if (hx != hy) return hx < hy;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return rank(x[i]) < rank(y[i]);
      }
      return false;
    });
    for (const auto& t : tuples) {
      std::vector<Integer> coeffs(static_cast<std::size_t>(degree) + 1);
      coeffs[static_cast<std::size_t>(degree)] = 1;
      for (int pos = 0; pos < degree; ++pos) coeffs[static_cast<std::size_t>(degree - 1 - pos)] = t[static_cast<std::size_t>(pos)];
      Element cand(ring, Poly(std::move(coeffs)));
      if (!verify_prime(cand)) continue;
      if (visit(cand)) return;
    }
  }
}

}  // namespace

std::vector<Element> prime_candidates(RingTag ring, unsigned bound) {
  std::vector<Element> out;
  for_each_prime_candidate(ring, bound, [&](const Element& e) {
    out.push_back(e);
    return false;
  });
  return out;
}

std::vector<Element> primes_in_class(const Ideal& ideal, const Residue& target, std::size_t count, unsigned bound) {
  if (!ideal.is_finite()) throw Error(ErrorCode::InfiniteQuotient, "R/" + to_string(ideal) + " is infinite");
  std::vector<Element> out;
  if (count == 0) return out;
  for_each_prime_candidate(ideal.ring(), bound, [&](const Element& p) {
    if (reduce(p, ideal) == target) out.push_back(p);
    return out.size() >= count;
  });
  return out;
}

std::optional<Element> find_prime_in_class(const Ideal& ideal, const Residue& target, unsigned bound) {
  auto found = primes_in_class(ideal, target, 1, bound);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace taufact
