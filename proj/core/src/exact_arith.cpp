#include "taufact/exact_arith.hpp"

#include <algorithm>
#include <cctype>

#include "taufact/error.hpp"

namespace taufact {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroOrUnitInput: return "ZeroOrUnitInput";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NonMonicGenerator: return "NonMonicGenerator";
    case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorCode::NotOrderFour: return "NotOrderFour";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WrongIsoClass: return "WrongIsoClass";
    case ErrorCode::InconsistentCensus: return "InconsistentCensus";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

Integer Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Poly::leading() const {
  static const Integer zero = 0;
  return coeffs_.empty() ? zero : coeffs_.back();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Integer> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < x.size()) out[i] += x[i];
    if (i < y.size()) out[i] += y[i];
  }
  return Poly(std::move(out));
}

Poly poly_neg(const Poly& a) {
  std::vector<Integer> out = a.coeffs();
  for (auto& c : out) c = -c;
  return Poly(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Integer> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return Poly(std::move(out));
}

Poly poly_scale(const Poly& a, const Integer& c) {
  std::vector<Integer> out = a.coeffs();
  for (auto& v : out) v *= c;
  return Poly(std::move(out));
}

DivMod poly_divmod_monic(const Poly& a, const Poly& g) {
  if (g.is_zero() || g.leading() != 1) {
    throw Error(ErrorCode::NonMonicDivisor, "divisor " + to_string(g) + " is not monic");
  }
  std::vector<Integer> rem = a.coeffs();
  const int dg = g.degree();
  if (a.degree() < dg) return {Poly{}, a};
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - dg + 1), 0);
  const auto& gc = g.coeffs();
  for (int i = a.degree(); i >= dg; --i) {
    const Integer c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(i - dg);
    quot[shift] = c;
    for (std::size_t j = 0; j < gc.size(); ++j) rem[shift + j] -= c * gc[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Integer content(const Poly& a) {
  Integer g = 0;
  for (const auto& c : a.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Poly compose(const Poly& p, const Poly& at) {
  Poly out;
  for (int i = p.degree(); i >= 0; --i) {
    out = poly_add(poly_mul(out, at), Poly::constant(p.coeffs()[static_cast<std::size_t>(i)]));
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs()[static_cast<std::size_t>(i)];
    const auto& y = b.coeffs()[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    bool gap = false;
    for (char ch : text) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        gap = !text_.empty();
        continue;
      }
      if (gap && std::isdigit(static_cast<unsigned char>(ch)) && std::isdigit(static_cast<unsigned char>(text_.back()))) {
        throw Error(ErrorCode::ParseError, "cannot parse polynomial '" + std::string(text) + "': stray whitespace");
      }
      gap = false;
      text_ += ch;
    }
  }

  Poly parse() {
    if (text_.empty()) fail("empty polynomial");
    std::vector<Integer> acc;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, degree] = term();
      if (acc.size() <= degree) acc.resize(degree + 1, 0);
      acc[degree] += sign * coef;
    }
    return Poly(std::move(acc));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "cannot parse polynomial '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += take();
    return d;
  }

  std::pair<Integer, std::size_t> term() {
    Integer coef = 1;
    std::string d = digits();
    if (!d.empty()) {
      coef = Integer(d);
      if (peek() == '*') {
        take();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
      if (peek() != 'x') return {coef, 0};
    }
    if (peek() != 'x') fail("expected a term");
    take();
    std::size_t degree = 1;
    if (peek() == '^') {
      take();
      std::string e = digits();
      if (e.empty() || e.size() > 6) fail("bad exponent");
      degree = static_cast<std::size_t>(std::stoul(e));
    }
    return {coef, degree};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Integer parse_integer(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (start == t.size() ||
      !std::all_of(t.begin() + static_cast<long>(start), t.end(),
                   [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; })) {
    throw Error(ErrorCode::ParseError, "cannot parse integer '" + std::string(text) + "'");
  }
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t);
}

}  // namespace taufact
