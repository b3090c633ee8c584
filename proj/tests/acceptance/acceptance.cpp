// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/naive_oracle.hpp"
#include "taufact/error.hpp"
#include "taufact/lemma_predictors.hpp"
#include "taufact/quotient.hpp"
#include "taufact/tau_engine.hpp"
#include "taufact/verify_suites.hpp"

using namespace taufact;
using taufact::testing::CanonicalFactorization;
using taufact::testing::NaiveOracle;

namespace {

const RingTag Z = RingTag::IntegerRing;
const RingTag ZX = RingTag::IntPolyRing;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

FactoredElement integer_element(std::vector<std::pair<long, unsigned>> parts) {
  std::vector<std::pair<Element, unsigned>> v;
  for (auto [p, e] : parts) v.emplace_back(Element::integer(p), e);
  return build_factored(Z, 1, v);
}

std::set<CanonicalFactorization> canonical(const std::vector<TauFactorization>& fs) {
  std::set<CanonicalFactorization> out;
  for (const auto& f : fs) {
    CanonicalFactorization c;
    for (const auto& b : f.blocks) c.push_back(to_string(expand(b)));
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

std::string suite_detail(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << " " << r.passed() << "/" << r.cases.size();
  for (const auto& c : r.cases) {
    if (!c.pass) {
      os << " first failure: " << c.label << " " << c.detail;
      break;
    }
  }
  return os.str();
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Ideal I = parse_ideal(ZX, "2, x^2+x");
  const TauEngine engine;
  std::ostringstream d;
  for (unsigned i = 2; i <= 5; ++i) {
    const ElasticityReport r = engine.elasticity(sequence_element(i), I);
    const bool ok = r.is_atomic && r.elasticity == Ratio(i, 2) && r.min_len == 2u && r.max_len == i;
    o.require(ok, "i=" + std::to_string(i) + " wrong");
    d << "i=" << i << ":" << (r.elasticity ? r.elasticity->str() : "none") << " ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 60.0, "slower than one minute");
  if (o.pass) o.detail = d.str() + "(" + std::to_string(static_cast<int>(secs * 1000)) + " ms)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Ideal I(Z, 3);
  const TauEngine engine;

  const auto twenty = integer_element({{2, 2}, {5, 1}});
  const auto atomic20 = engine.atomic_factorizations(twenty, I);
  const auto r20 = engine.elasticity(twenty, I);
  o.require(atomic20.size() == 1 && atomic20[0].length() == 3, "20 does not have a unique atomic factorization of length 3");
  o.require(r20.elasticity == Ratio(1, 1), "elasticity of 20 is not 1");

  const auto twenty_eight = integer_element({{2, 2}, {7, 1}});
  const auto fs = engine.factorizations(twenty_eight, I);
  const std::set<CanonicalFactorization> expected = {{"28"}, {"4", "7"}, {"14", "2"}, {"2", "2", "7"}};
  o.require(canonical(fs) == expected, "factorization multisets of 28 differ");
  std::size_t atomic = 0;
  for (const auto& f : fs) {
    if (!f.is_atomic()) continue;
    ++atomic;
    o.require(f.length() == 3, "a non-{2,2,7} factorization of 28 is atomic");
    o.require(f.lambda == -1 && f.sign_witness == std::vector<Sign>{1, 1, -1}, "28 = 2*2*7 witness is not lambda=-1, (+,+,-)");
  }
  o.require(atomic == 1, "28 should have exactly one atomic factorization");
  if (o.pass) o.detail = "20: one atomic factorization of length 3; 28: 4 factorizations, {2,2,7} atomic with lambda=-1 (+,+,-)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Expected {
    const char* ideal;
    // Rows and columns 1, x, x+1.
    const char* cells[3][3];
  };
  const Expected expected_tables[] = {
      {"2, x^2+1", {{"1", "x", "x+1"}, {"x", "1", "x+1"}, {"x+1", "x+1", "0"}}},
      {"2, x^2+x+1", {{"1", "x", "x+1"}, {"x", "x+1", "1"}, {"x+1", "1", "x"}}},
      {"2, x^2+x", {{"1", "x", "x+1"}, {"x", "x", "0"}, {"x+1", "0", "x+1"}}},
  };
  const char* labels[] = {"1", "x", "x+1"};
  for (const auto& p : expected_tables) {
    const CayleyTable t(parse_ideal(ZX, p.ideal));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const std::size_t a = t.index_of({parse_poly(labels[i])});
        const std::size_t b = t.index_of({parse_poly(labels[j])});
        const std::string got = to_string(t.residues()[t.product(a, b)]);
        o.require(got == p.cells[i][j], std::string("(") + p.ideal + ") " + labels[i] + "*" + labels[j] + " = " + got);
      }
    }
  }
  const std::vector<Ideal> canonical_ideals = {Ideal(Z, 4), parse_ideal(ZX, "4, x"), parse_ideal(ZX, "2, x^2+1"),
                                               parse_ideal(ZX, "2, x^2+x+1"), parse_ideal(ZX, "2, x^2+x")};
  std::vector<IsoClass> got;
  for (const auto& I : canonical_ideals) got.push_back(classify_order4(I));
  o.require(got[0] == IsoClass::Z4 && got[1] == IsoClass::Z4, "(4) or (4, x) not classified Z4");
  const std::set<IsoClass> distinct(got.begin() + 1, got.end());
  o.require(distinct.size() == 4 && !distinct.count(IsoClass::Other), "classes of the four canonical ideals are not distinct");
  o.require(got[2] == IsoClass::Z2X_X2P1 && got[3] == IsoClass::F4 && got[4] == IsoClass::Z2X_X2PX, "class names differ");
  if (o.pass) o.detail = "27 cells match; (4), (4, x) -> Z4, then Z2X_X2P1, F4, Z2X_X2PX";
  return o;
}

Outcome criterion4() {
  Outcome o;
  SuiteOptions opts;
  opts.samples = 200;
  opts.seed = 7;
  opts.max_census_primes = 8;
  std::string d;
  for (IsoClass cls : {IsoClass::Z4, IsoClass::Z2X_X2P1, IsoClass::F4}) {
    const SuiteReport r = run_lemma_suite(cls, opts);
    std::size_t skipped = 0;
    for (const auto& c : r.cases) skipped += c.detail.rfind("skipped", 0) == 0;
    o.require(r.ok(), suite_detail(r));
    o.require(skipped == 0, r.suite + ": " + std::to_string(skipped) + " cases over budget");
    d += r.suite + " " + std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " ";
  }
  if (o.pass) o.detail = d + "(seed 7, <= 8 primes)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Ideal I = parse_ideal(ZX, "4, x");
  const FactoredElement fe = build_factored(ZX, 1,
                                            {{parse_element(ZX, "2"), 1}, {parse_element(ZX, "x+2"), 1}, {parse_element(ZX, "x"), 1}});
  const ElasticityReport r = TauEngine().elasticity(fe, I);
  o.require(!r.is_atomic, "2*(x+2)*x is atomic under (4, x)");
  if (o.pass) o.detail = "2*(x+2)*x under (4, x): is_atomic=false";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SuiteReport r = run_hfd_z_small(SuiteOptions{});
  o.require(r.ok(), suite_detail(r));
  for (const auto& c : r.cases) o.detail += (o.detail.empty() ? "" : " | ") + c.label.substr(c.label.find("n=")) + " " + c.detail.substr(c.detail.find("max_elasticity"));
  return o;
}

// Every multiset of at most five primes drawn from a pool covering all four
// classes, with both units, over each order-4 setup.
Outcome criterion7() {
  Outcome o;
  std::size_t elements = 0, factorizations = 0;
  for (IsoClass cls : {IsoClass::Z4, IsoClass::Z2X_X2P1, IsoClass::F4, IsoClass::Z2X_X2PX}) {
    const Ideal I = setup_ideal(cls);
    std::vector<Element> pool;
    for (const auto& r : enumerate_residues(I)) {
      for (const auto& p : primes_in_class(I, r, 2, 10)) pool.push_back(p);
    }
    const TauEngine engine;
    std::vector<std::size_t> idx;
    const std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (!idx.empty()) {
        std::vector<std::pair<Element, unsigned>> parts;
        for (std::size_t i : idx) parts.emplace_back(pool[i], 1);
        for (Sign unit : {1, -1}) {
          const FactoredElement fe = build_factored(ZX, unit, parts);
          const std::string where = to_string(fe) + " mod (" + to_string(I) + ")";
          ++elements;
          const auto fs = engine.factorizations(fe, I);
          factorizations += fs.size();
          for (const auto& f : fs) {
            if (!recheck(f, fe, I)) {
              o.require(false, "recheck failed for " + where);
              return;
            }
          }
          const NaiveOracle naive(fe, I);
          o.require(canonical(fs) == naive.factorizations(), "factorizations differ from naive for " + where);
          o.require(canonical(engine.atomic_factorizations(fe, I)) == naive.atomic_factorizations(),
                    "atomic factorizations differ from naive for " + where);
          const bool atom = engine.is_atom(fe, I);
          o.require(atom == naive.is_atom(), "atomhood differs from naive for " + where);
          o.require(atom == engine.is_atom(fe.negated(), I), "atomhood not associate-invariant for " + where);
          if (!o.pass) return;
        }
      }
      if (idx.size() == 5) return;
      for (std::size_t i = start; i < pool.size() && o.pass; ++i) {
        idx.push_back(i);
        rec(i);
        idx.pop_back();
      }
    };
    rec(0);
    if (!o.pass) break;
  }
  if (o.pass) {
    o.detail = std::to_string(elements) + " elements, " + std::to_string(factorizations) +
               " factorizations re-verified and matched against the naive oracle";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7},
  };
  bool all = true;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const Error& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
