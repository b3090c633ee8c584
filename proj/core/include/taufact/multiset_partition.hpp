#pragma once

// Multiset partitions without duplicates (Knuth, TAOCP 7.2.1.5, Algorithm M).

#include <cstddef>
#include <cstdint>
#include <vector>

namespace taufact {

/// One block of a partition: multiplicity of each component of the multiset.
using Block = std::vector<unsigned>;
using MultisetPartition = std::vector<Block>;

/// Lazily walks every partition of the multiset with the given component
/// multiplicities into unordered nonempty blocks, each exactly once. The
/// first partition visited is the single whole block. Zero multiplicities are
/// allowed; blocks are always reported at the caller's full width.
///
///   MultisetPartitions gen({2, 1});
///   while (gen.next()) use(gen.current());
class MultisetPartitions {
 public:
  explicit MultisetPartitions(std::vector<unsigned> multiplicities);

  /// Advances to the next partition; false once exhausted.
  bool next();

  /// Current partition, blocks in generation order.
  MultisetPartition current() const;

  std::size_t block_count() const noexcept { return static_cast<std::size_t>(lpart_) + 1; }

  /// Multiplicity vector of block `b` without materializing the partition.
  void block(std::size_t b, Block& out) const;

 private:
  bool advance_to_visit();  // M2-M3
  bool decrease();          // M5-M6

  std::vector<unsigned> mult_;      // nonzero multiplicities only
  std::vector<std::size_t> origin_;  // compact component -> caller's index
  std::size_t width_ = 0;
  std::vector<std::size_t> c_;
  std::vector<unsigned> u_, v_;
  std::vector<std::size_t> f_;
  std::size_t a_ = 0, b_ = 0;
  long lpart_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Every partition with at least `min_blocks` blocks. Throws
/// Error(BudgetExceeded) once more than `max_partitions` partitions have been
/// visited.
std::vector<MultisetPartition> multiset_partitions(const std::vector<unsigned>& multiplicities, std::size_t min_blocks,
                                                   std::uint64_t max_partitions = UINT64_MAX);

}  // namespace taufact
