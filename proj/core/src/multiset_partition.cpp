#include "taufact/multiset_partition.hpp"

#include <algorithm>
#include <numeric>

#include "taufact/error.hpp"

namespace taufact {

MultisetPartitions::MultisetPartitions(std::vector<unsigned> multiplicities) : mult_(std::move(multiplicities)) {
  width_ = mult_.size();
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] != 0) origin_.push_back(i);
  }
  mult_.erase(std::remove(mult_.begin(), mult_.end(), 0u), mult_.end());
  if (mult_.empty()) {
    done_ = true;
    return;
  }
  const std::size_t m = mult_.size();
  const std::size_t n = std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
  c_.assign(n * m + 1, 0);
  u_.assign(n * m + 1, 0);
  v_.assign(n * m + 1, 0);
  f_.assign(n + 2, 0);
  for (std::size_t j = 0; j < m; ++j) {
    c_[j] = j;
    u_[j] = v_[j] = mult_[j];
  }
  f_[0] = 0;
  a_ = 0;
  lpart_ = 0;
  f_[1] = m;
  b_ = m;
}

bool MultisetPartitions::advance_to_visit() {
  for (;;) {
    // M2: subtract v from u.
    std::size_t j = a_;
    std::size_t k = b_;
    bool changed = false;
    while (j < b_) {
      u_[k] = u_[j] - v_[j];
      if (u_[k] == 0) {
        changed = true;
      } else if (!changed) {
        c_[k] = c_[j];
        v_[k] = std::min(v_[j], u_[k]);
        changed = u_[k] < v_[j];
        ++k;
      } else {
        c_[k] = c_[j];
        v_[k] = u_[k];
        ++k;
      }
      ++j;
    }
    // M3: push if nonzero.
    if (k > b_) {
      a_ = b_;
      b_ = k;
      ++lpart_;
      f_[static_cast<std::size_t>(lpart_) + 1] = b_;
    } else {
      return true;
    }
  }
}

bool MultisetPartitions::decrease() {
  for (;;) {
    // M5: decrease v.
    std::size_t j = b_ - 1;
    while (v_[j] == 0) --j;
    if (j == a_ && v_[j] == 1) {
      // M6: backtrack.
      if (lpart_ == 0) return false;
      --lpart_;
      b_ = a_;
      a_ = f_[static_cast<std::size_t>(lpart_)];
      continue;
    }
    --v_[j];
    for (std::size_t k = j + 1; k < b_; ++k) v_[k] = u_[k];
    return true;
  }
}

bool MultisetPartitions::next() {
  if (done_) return false;
  if (started_ && !decrease()) {
    done_ = true;
    return false;
  }
  started_ = true;
  return advance_to_visit();
}

void MultisetPartitions::block(std::size_t b, Block& out) const {
  out.assign(width_, 0);
  for (std::size_t ps = f_[b]; ps < f_[b + 1]; ++ps) out[origin_[c_[ps]]] += v_[ps];
}

MultisetPartition MultisetPartitions::current() const {
  MultisetPartition out(block_count());
  for (std::size_t b = 0; b < out.size(); ++b) block(b, out[b]);
  return out;
}

std::vector<MultisetPartition> multiset_partitions(const std::vector<unsigned>& multiplicities, std::size_t min_blocks,
                                                   std::uint64_t max_partitions) {
  std::vector<MultisetPartition> out;
  MultisetPartitions gen(multiplicities);
  std::uint64_t visited = 0;
  while (gen.next()) {
    if (++visited > max_partitions) {
      throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(max_partitions) + " partitions");
    }
    if (gen.block_count() >= min_blocks) out.push_back(gen.current());
  }
  return out;
}

}  // namespace taufact
