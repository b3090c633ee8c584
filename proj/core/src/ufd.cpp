#include "taufact/ufd.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "taufact/error.hpp"

namespace taufact {

std::string_view to_string(RingTag ring) {
  return ring == RingTag::IntegerRing ? "z" : "zx";
}

Element::Element(RingTag ring, Poly value) : ring_(ring), value_(std::move(value)) {
  if (ring_ == RingTag::IntegerRing && value_.degree() > 0) {
    throw Error(ErrorCode::RingMismatch, "nonconstant polynomial " + to_string(value_) + " in Z");
  }
}

void require_same_ring(RingTag a, RingTag b) {
  if (a != b) {
    throw Error(ErrorCode::RingMismatch,
                "operands live in " + std::string(to_string(a)) + " and " + std::string(to_string(b)));
  }
}

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a.ring(), b.ring());
  return Element(a.ring(), a.value() * b.value());
}

Element operator-(const Element& a) { return Element(a.ring(), -a.value()); }

std::string to_string(const Element& e) { return to_string(e.value()); }

Element parse_element(RingTag ring, std::string_view text) {
  Poly p = parse_poly(text);
  if (ring == RingTag::IntegerRing && p.degree() > 0) {
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not an integer");
  }
  return Element(ring, std::move(p));
}

std::vector<Element> units(RingTag ring) {
  return {Element(ring, Poly::constant(1)), Element(ring, Poly::constant(-1))};
}

bool is_unit(const Element& e) {
  const Poly& v = e.value();
  return v.degree() == 0 && (v.leading() == 1 || v.leading() == -1);
}

Associate canonical_associate(const Element& e) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroElement, "zero has no canonical associate");
  if (e.value().leading() < 0) return {-1, -e};
  return {1, e};
}

TrustedRegistry TrustedRegistry::from_lines(std::string_view text) {
  TrustedRegistry reg;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    reg.add(parse_poly(line));
  }
  return reg;
}

TrustedRegistry TrustedRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open registry file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_lines(buf.str());
}

void TrustedRegistry::add(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroElement, "registry entry is zero");
  entries_.insert(p.leading() < 0 ? -p : p);
}

bool is_prime_integer(const Integer& n) {
  Integer a = abs(n);
  if (a < 2) return false;
  if (a < 4) return true;
  if (a % 2 == 0) return false;
  for (Integer d = 3; d * d <= a; d += 2) {
    if (a % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
  Integer a = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// p(num/den) == 0, evaluated as the homogenized sum to stay in Z.
bool has_root(const Poly& p, const Integer& num, const Integer& den) {
  const int n = p.degree();
  Integer sum = 0;
  Integer num_pow = 1;
  for (int i = 0; i <= n; ++i) {
    Integer den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n - i));
    sum += p.coeffs()[static_cast<std::size_t>(i)] * num_pow * den_pow;
    num_pow *= num;
  }
  return sum == 0;
}

bool has_rational_root(const Poly& p) {
  if (p.constant_term() == 0) return true;
  for (const auto& d : positive_divisors(p.constant_term())) {
    for (const auto& e : positive_divisors(p.leading())) {
      if (has_root(p, d, e) || has_root(p, Integer(-d), e)) return true;
    }
  }
  return false;
}

}  // namespace

bool verify_prime(const Element& e) {
  if (e.is_zero() || is_unit(e)) {
    throw Error(ErrorCode::ZeroOrUnitInput, to_string(e) + " is zero or a unit");
  }
  const Poly p = canonical_associate(e).canonical.value();
  if (p.degree() == 0) return is_prime_integer(p.leading());
  if (content(p) != 1) return false;
  if (p.degree() == 1) return true;
  if (p.degree() <= 3) return !has_rational_root(p);
  throw Error(ErrorCode::UnsupportedDegree,
              "primitive polynomial " + to_string(p) + " of degree " + std::to_string(p.degree()) +
                  " needs a trusted-registry entry");
}

FactoredElement::FactoredElement(RingTag ring, Sign unit, std::vector<PrimePower> factors)
    : ring_(ring), unit_(unit), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const PrimePower& a, const PrimePower& b) { return poly_less(a.prime.value(), b.prime.value()); });
}

unsigned FactoredElement::length() const noexcept {
  unsigned n = 0;
  for (const auto& f : factors_) n += f.exponent;
  return n;
}

FactoredElement build_factored(RingTag ring, Sign unit, const std::vector<std::pair<Element, unsigned>>& parts,
                               const TrustedRegistry* registry) {
  std::map<Poly, PrimePower, PolyLess> merged;
  for (const auto& [raw, exponent] : parts) {
    require_same_ring(ring, raw.ring());
    if (raw.is_zero() || is_unit(raw)) {
      throw Error(ErrorCode::ZeroOrUnitInput, to_string(raw) + " is zero or a unit");
    }
    if (exponent == 0) throw Error(ErrorCode::ParseError, "exponent of " + to_string(raw) + " must be positive");
    auto [sign, canon] = canonical_associate(raw);
    if (exponent % 2 == 1) unit *= sign;
    bool trusted = false;
    if (registry != nullptr && registry->contains(canon.value())) {
      trusted = true;
    } else if (!verify_prime(canon)) {
      throw Error(ErrorCode::NotPrime, to_string(raw) + " is not prime");
    }
    auto [it, fresh] = merged.try_emplace(canon.value(), PrimePower{canon, 0, trusted});
    it->second.exponent += exponent;
  }
  std::vector<PrimePower> factors;
  factors.reserve(merged.size());
  for (auto& [key, pp] : merged) factors.push_back(std::move(pp));
  return FactoredElement(ring, unit, std::move(factors));
}

Element expand(const FactoredElement& fe) {
  Poly acc = Poly::constant(fe.unit());
  for (const auto& f : fe.factors()) {
    for (unsigned i = 0; i < f.exponent; ++i) acc = acc * f.prime.value();
  }
  return Element(fe.ring(), std::move(acc));
}

std::string to_string(const FactoredElement& fe) {
  std::string out;
  if (fe.unit() < 0) out = "-1";
  for (const auto& f : fe.factors()) {
    if (!out.empty()) out += " * ";
    std::string base = to_string(f.prime);
    if (fe.ring() == RingTag::IntPolyRing && f.prime.value().degree() > 0 &&
        base.find_first_of("+-", 1) != std::string::npos) {
      base = "(" + base + ")";
    }
    out += base;
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out.empty() ? "1" : out;
}

}  // namespace taufact
