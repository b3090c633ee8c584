#include "taufact/tau_engine.hpp"

#include <algorithm>

#include "taufact/error.hpp"
#include "taufact/multiset_partition.hpp"

namespace taufact {

bool TauFactorization::is_atomic() const {
  return std::all_of(atom_blocks.begin(), atom_blocks.end(), [](bool b) { return b; });
}

std::optional<bool> AtomMemo::find(const std::string& ideal_key, const Poly& canonical) const {
  std::lock_guard lock(mu_);
  auto it = table_.find({ideal_key, canonical});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void AtomMemo::insert(const std::string& ideal_key, const Poly& canonical, bool atom) {
  std::lock_guard lock(mu_);
  table_.emplace(std::make_pair(ideal_key, canonical), atom);
}

std::size_t AtomMemo::size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

void AtomMemo::clear() {
  std::lock_guard lock(mu_);
  table_.clear();
}

namespace {

// Per-call state. Sub-multisets of the input's primes are addressed by a
// mixed-radix index (digit i = multiplicity of the i-th distinct prime), so
// residue classes, exact products and atom flags are cached per index.
class Workspace {
 public:
  Workspace(const FactoredElement& fe, const Ideal& ideal, const EnumerationBudget& budget, AtomMemo& memo)
      : fe_(fe), ideal_(ideal), budget_(budget), memo_(memo), units_(units(fe.ring())) {
    require_same_ring(fe.ring(), ideal.ring());
    if (fe.factors().empty()) {
      throw Error(ErrorCode::ZeroOrUnitInput, "the input " + to_string(fe) + " is a unit");
    }
    if (fe.length() > budget.max_primes) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(fe.length()) + " primes exceed the cap of " +
                                                 std::to_string(budget.max_primes));
    }
    ideal_key_ = std::string(to_string(ideal.ring())) + "|" + to_string(ideal);

    std::size_t size = 1;
    for (const auto& f : fe.factors()) {
      stride_.push_back(size);
      exponent_.push_back(f.exponent);
      size *= f.exponent + 1;
    }
    subset_count_ = size;

    std::vector<Poly> reps(size);
    reps[0] = reduce(Poly::constant(1), ideal_).rep;
    for (std::size_t idx = 1; idx < size; ++idx) {
      const std::size_t i = lowest_digit(idx);
      reps[idx] = reduce(reps[idx - stride_[i]] * fe.factors()[i].prime.value(), ideal_).rep;
    }
    cls_.resize(size * units_.size());
    std::map<Poly, std::uint32_t, PolyLess> ids;
    for (std::size_t idx = 0; idx < size; ++idx) {
      for (std::size_t u = 0; u < units_.size(); ++u) {
        Poly r = reduce(units_[u].value() * reps[idx], ideal_).rep;
        auto [it, fresh] = ids.try_emplace(std::move(r), static_cast<std::uint32_t>(ids.size()));
        cls_[idx * units_.size() + u] = it->second;
      }
    }
    atom_.assign(size, -1);
    product_.resize(size);
  }

  std::size_t full_index() const { return subset_count_ - 1; }

  std::size_t index_of(const Block& digits) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) idx += digits[i] * stride_[i];
    return idx;
  }

  Block digits_of(std::size_t idx) const {
    Block out(stride_.size());
    for (std::size_t i = 0; i < stride_.size(); ++i) out[i] = (idx / stride_[i]) % (exponent_[i] + 1);
    return out;
  }

  unsigned prime_count(std::size_t idx) const {
    unsigned n = 0;
    for (unsigned d : digits_of(idx)) n += d;
    return n;
  }

  // Unit index per block putting every block in one residue class, trying
  // units in order on the first block; nullopt if none exists.
  std::optional<std::vector<std::size_t>> witness(const std::vector<std::size_t>& blocks) const {
    const std::size_t nu = units_.size();
    std::vector<std::size_t> choice(blocks.size(), 0);
    for (std::size_t u0 = 0; u0 < nu; ++u0) {
      const std::uint32_t target = cls_[blocks[0] * nu + u0];
      choice[0] = u0;
      bool ok = true;
      for (std::size_t b = 1; b < blocks.size() && ok; ++b) {
        ok = false;
        for (std::size_t u = 0; u < nu; ++u) {
          if (cls_[blocks[b] * nu + u] == target) {
            choice[b] = u;
            ok = true;
            break;
          }
        }
      }
      if (ok) return choice;
    }
    return std::nullopt;
  }

  bool has_witness(const std::vector<std::size_t>& blocks) const { return witness(blocks).has_value(); }

  const Poly& product(std::size_t idx) {
    if (!product_[idx]) {
      Poly acc = Poly::constant(1);
      const Block d = digits_of(idx);
      for (std::size_t i = 0; i < d.size(); ++i) {
        for (unsigned k = 0; k < d[i]; ++k) acc = acc * fe_.factors()[i].prime.value();
      }
      product_[idx] = std::move(acc);
    }
    return *product_[idx];
  }

  FactoredElement block_element(std::size_t idx) const {
    const Block d = digits_of(idx);
    std::vector<PrimePower> parts;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      PrimePower pp = fe_.factors()[i];
      pp.exponent = d[i];
      parts.push_back(std::move(pp));
    }
    return FactoredElement(fe_.ring(), 1, std::move(parts));
  }

  void charge_partition() {
    if (++visited_ > budget_.max_partitions) {
      throw Error(ErrorCode::BudgetExceeded,
                  "more than " + std::to_string(budget_.max_partitions) + " partitions explored");
    }
  }

  bool is_atom(std::size_t idx) {
    if (atom_[idx] >= 0) return atom_[idx] == 1;
    bool atom = true;
    if (prime_count(idx) >= 2) {
      const Poly& key = product(idx);
      if (auto hit = memo_.find(ideal_key_, key)) {
        atom = *hit;
      } else {
        atom = !has_proper_factorization(idx);
        memo_.insert(ideal_key_, key, atom);
      }
    }
    atom_[idx] = atom ? 1 : 0;
    return atom;
  }

  // Calls visit(block indices, unit choice) for every partition of the full
  // multiset that admits a congruent sign choice.
  template <typename Visit>
  void walk(Visit&& visit) {
    MultisetPartitions gen(exponent_);
    std::vector<std::size_t> blocks;
    Block scratch;
    while (gen.next()) {
      charge_partition();
      blocks.clear();
      for (std::size_t b = 0; b < gen.block_count(); ++b) {
        gen.block(b, scratch);
        blocks.push_back(index_of(scratch));
      }
      if (auto w = witness(blocks)) visit(blocks, *w);
    }
  }

  Sign unit_sign(std::size_t u) const { return units_[u].value().leading() < 0 ? -1 : 1; }

  TauFactorization materialize(std::vector<std::size_t> blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [&](std::size_t a, std::size_t b) { return poly_less(product(a), product(b)); });
    const auto w = witness(blocks);
    if (!w) throw Error(ErrorCode::InternalCheckFailed, "witness lost after reordering");
    TauFactorization out;
    out.lambda = fe_.unit();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Sign s = unit_sign((*w)[b]);
      out.lambda *= s;
      out.sign_witness.push_back(s);
      out.blocks.push_back(block_element(blocks[b]));
      out.atom_blocks.push_back(is_atom(blocks[b]));
    }
    return out;
  }

 private:
  std::size_t lowest_digit(std::size_t idx) const {
    for (std::size_t i = 0; i < stride_.size(); ++i) {
      if ((idx / stride_[i]) % (exponent_[i] + 1) != 0) return i;
    }
    return 0;
  }

  bool has_proper_factorization(std::size_t idx) {
    MultisetPartitions gen(digits_of(idx));
    std::vector<std::size_t> blocks;
    Block scratch;
    while (gen.next()) {
      charge_partition();
      if (gen.block_count() < 2) continue;
      blocks.clear();
      for (std::size_t b = 0; b < gen.block_count(); ++b) {
        gen.block(b, scratch);
        blocks.push_back(index_of(scratch));
      }
      if (has_witness(blocks)) return true;
    }
    return false;
  }

  const FactoredElement& fe_;
  const Ideal& ideal_;
  const EnumerationBudget& budget_;
  AtomMemo& memo_;
  std::vector<Element> units_;
  std::string ideal_key_;
  std::vector<std::size_t> stride_;
  std::vector<unsigned> exponent_;
  std::size_t subset_count_ = 0;
  std::vector<std::uint32_t> cls_;
  std::vector<signed char> atom_;
  std::vector<std::optional<Poly>> product_;
  std::uint64_t visited_ = 0;
};

bool factorization_less(const TauFactorization& a, const TauFactorization& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    const Poly pa = expand(a.blocks[i]).value();
    const Poly pb = expand(b.blocks[i]).value();
    if (poly_less(pa, pb)) return true;
    if (poly_less(pb, pa)) return false;
  }
  return false;
}

}  // namespace

TauEngine::TauEngine(EnumerationBudget budget, std::shared_ptr<AtomMemo> memo)
    : budget_(budget), memo_(std::move(memo)) {}

std::vector<TauFactorization> TauEngine::factorizations(const FactoredElement& fe, const Ideal& ideal) const {
  Workspace ws(fe, ideal, budget_, *memo_);
  std::vector<std::vector<std::size_t>> found;
  ws.walk([&](const std::vector<std::size_t>& blocks, const std::vector<std::size_t>&) { found.push_back(blocks); });
  std::vector<TauFactorization> out;
  out.reserve(found.size());
  for (auto& blocks : found) out.push_back(ws.materialize(std::move(blocks)));
  std::sort(out.begin(), out.end(), factorization_less);
  return out;
}

bool TauEngine::is_atom(const FactoredElement& fe, const Ideal& ideal) const {
  Workspace ws(fe, ideal, budget_, *memo_);
  return ws.is_atom(ws.full_index());
}

std::vector<TauFactorization> TauEngine::atomic_factorizations(const FactoredElement& fe, const Ideal& ideal) const {
  Workspace ws(fe, ideal, budget_, *memo_);
  std::vector<std::vector<std::size_t>> found;
  ws.walk([&](const std::vector<std::size_t>& blocks, const std::vector<std::size_t>&) {
    if (std::all_of(blocks.begin(), blocks.end(), [&](std::size_t b) { return ws.is_atom(b); })) {
      found.push_back(blocks);
    }
  });
  std::vector<TauFactorization> out;
  out.reserve(found.size());
  for (auto& blocks : found) out.push_back(ws.materialize(std::move(blocks)));
  std::sort(out.begin(), out.end(), factorization_less);
  return out;
}

ElasticityReport TauEngine::elasticity(const FactoredElement& fe, const Ideal& ideal) const {
  Workspace ws(fe, ideal, budget_, *memo_);
  ElasticityReport report;
  ws.walk([&](const std::vector<std::size_t>& blocks, const std::vector<std::size_t>&) {
    ++report.factorization_count;
    if (std::all_of(blocks.begin(), blocks.end(), [&](std::size_t b) { return ws.is_atom(b); })) {
      ++report.atomic_count;
      report.atomic_lengths.insert(blocks.size());
    }
  });
  report.is_atomic = !report.atomic_lengths.empty();
  if (report.is_atomic) {
    report.min_len = *report.atomic_lengths.begin();
    report.max_len = *report.atomic_lengths.rbegin();
    report.elasticity = Ratio(*report.max_len, *report.min_len);
  }
  return report;
}

namespace {

TauEngine default_engine(const EnumerationBudget& budget) {
  static const auto memo = std::make_shared<AtomMemo>();
  return TauEngine(budget, memo);
}

}  // namespace

std::vector<TauFactorization> enumerate_tau_factorizations(const FactoredElement& fe, const Ideal& ideal,
                                                           const EnumerationBudget& budget) {
  return default_engine(budget).factorizations(fe, ideal);
}

bool is_tau_atom(const FactoredElement& fe, const Ideal& ideal) { return default_engine({}).is_atom(fe, ideal); }

std::vector<TauFactorization> atomic_tau_factorizations(const FactoredElement& fe, const Ideal& ideal,
                                                        const EnumerationBudget& budget) {
  return default_engine(budget).atomic_factorizations(fe, ideal);
}

ElasticityReport elasticity(const FactoredElement& fe, const Ideal& ideal, const EnumerationBudget& budget) {
  return default_engine(budget).elasticity(fe, ideal);
}

bool recheck(const TauFactorization& f, const FactoredElement& fe, const Ideal& ideal) {
  if (f.blocks.empty() || f.blocks.size() != f.sign_witness.size()) return false;
  if (f.lambda != 1 && f.lambda != -1) return false;
  Poly total = Poly::constant(f.lambda);
  std::optional<Residue> cls;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    const Element b = expand(f.blocks[i]);
    if (b.is_zero() || is_unit(b)) return false;
    const Element signed_block = f.sign_witness[i] < 0 ? -b : b;
    total = total * signed_block.value();
    Residue r = reduce(signed_block, ideal);
    if (cls && !(*cls == r)) return false;
    cls = std::move(r);
  }
  return total == expand(fe).value();
}

}  // namespace taufact
