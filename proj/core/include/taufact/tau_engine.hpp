#pragma once

// Exhaustive tau_I-factorization oracle.
//
// A tau_I-factorization of a is a = lambda * b_1 * ... * b_k with lambda a
// unit, every b_i a nonunit, and the b_i pairwise congruent mod I. Over a UFD
// every such factorization comes from a partition of a's prime multiset into
// blocks together with one unit per block, so enumeration runs over multiset
// partitions and, per partition, asks whether some choice of unit multiples
// puts all blocks in one residue class.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taufact/quotient.hpp"
#include "taufact/ratio.hpp"
#include "taufact/ufd.hpp"

namespace taufact {

struct EnumerationBudget {
  unsigned max_primes = 14;                  // total prime multiplicity
  std::uint64_t max_partitions = 50'000'000;  // per call, atom checks included
};

struct TauFactorization {
  Sign lambda = 1;
  /// Canonical blocks (unit +1), sorted by expanded value.
  std::vector<FactoredElement> blocks;
  /// sign_witness[i] * blocks[i] are pairwise congruent mod I, and
  /// lambda * prod(sign_witness[i] * blocks[i]) is the input element.
  std::vector<Sign> sign_witness;
  /// Per-block atom flags, aligned with `blocks`.
  std::vector<bool> atom_blocks;

  std::size_t length() const noexcept { return blocks.size(); }
  bool is_atomic() const;
};

struct ElasticityReport {
  bool is_atomic = false;
  std::set<std::size_t> atomic_lengths;
  std::optional<std::size_t> min_len;
  std::optional<std::size_t> max_len;
  std::optional<Ratio> elasticity;
  std::uint64_t factorization_count = 0;
  std::uint64_t atomic_count = 0;

  friend bool operator==(const ElasticityReport&, const ElasticityReport&) = default;
};

/// Thread-safe atom memo keyed on (ideal, canonical associate of the element).
class AtomMemo {
 public:
  std::optional<bool> find(const std::string& ideal_key, const Poly& canonical) const;
  void insert(const std::string& ideal_key, const Poly& canonical, bool atom);
  std::size_t size() const;
  void clear();

 private:
  struct KeyLess {
    bool operator()(const std::pair<std::string, Poly>& a, const std::pair<std::string, Poly>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return poly_less(a.second, b.second);
    }
  };
  mutable std::mutex mu_;
  std::map<std::pair<std::string, Poly>, bool, KeyLess> table_;
};

class TauEngine {
 public:
  explicit TauEngine(EnumerationBudget budget = {}, std::shared_ptr<AtomMemo> memo = std::make_shared<AtomMemo>());

  const EnumerationBudget& budget() const noexcept { return budget_; }

  /// Every tau_I-factorization up to block order and associates, the trivial
  /// one included, sorted by length then blocks. Throws Error(BudgetExceeded),
  /// Error(ZeroOrUnitInput), Error(RingMismatch).
  std::vector<TauFactorization> factorizations(const FactoredElement& fe, const Ideal& ideal) const;

  /// True iff no factorization has two or more blocks.
  bool is_atom(const FactoredElement& fe, const Ideal& ideal) const;

  /// The factorizations whose blocks are all atoms.
  std::vector<TauFactorization> atomic_factorizations(const FactoredElement& fe, const Ideal& ideal) const;

  ElasticityReport elasticity(const FactoredElement& fe, const Ideal& ideal) const;

 private:
  EnumerationBudget budget_;
  std::shared_ptr<AtomMemo> memo_;
};

std::vector<TauFactorization> enumerate_tau_factorizations(const FactoredElement& fe, const Ideal& ideal,
                                                           const EnumerationBudget& budget = {});
/// Memoized in a process-wide AtomMemo.
bool is_tau_atom(const FactoredElement& fe, const Ideal& ideal);
std::vector<TauFactorization> atomic_tau_factorizations(const FactoredElement& fe, const Ideal& ideal,
                                                        const EnumerationBudget& budget = {});
ElasticityReport elasticity(const FactoredElement& fe, const Ideal& ideal, const EnumerationBudget& budget = {});

/// Independent re-check of a factorization against the input: exact
/// re-multiplication, nonunit blocks, and pairwise congruence of the signed
/// blocks. Used by tests and the CLI's verify suites.
bool recheck(const TauFactorization& f, const FactoredElement& fe, const Ideal& ideal);

}  // namespace taufact
