#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "taufact/error.hpp"
#include "taufact/multiset_partition.hpp"

using namespace taufact;

namespace {

// Independent count: set partitions of the expanded list, deduplicated as
// sorted lists of blocks.
std::size_t brute_count(const std::vector<unsigned>& mult) {
  std::vector<unsigned> flat;
  for (unsigned c = 0; c < mult.size(); ++c)
    for (unsigned i = 0; i < mult[c]; ++i) flat.push_back(c);
  std::set<std::vector<std::vector<unsigned>>> seen;
  std::vector<std::size_t> label(flat.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == flat.size()) {
      std::vector<std::vector<unsigned>> parts(blocks, std::vector<unsigned>(mult.size(), 0));
      for (std::size_t j = 0; j < flat.size(); ++j) ++parts[label[j]][flat[j]];
      std::sort(parts.begin(), parts.end());
      seen.insert(parts);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return seen.size();
}

}  // namespace

TEST_CASE("{a, a, b}") {
  auto parts = multiset_partitions({2, 1}, 1);
  REQUIRE(parts.size() == 4);
  CHECK(parts[0] == MultisetPartition{{2, 1}});
  std::set<std::multiset<std::vector<unsigned>>> as_sets;
  for (const auto& p : parts) as_sets.insert(std::multiset<std::vector<unsigned>>(p.begin(), p.end()));
  CHECK(as_sets.size() == 4);
  CHECK(as_sets.count({{2, 1}}));
  CHECK(as_sets.count({{2, 0}, {0, 1}}));
  CHECK(as_sets.count({{1, 1}, {1, 0}}));
  CHECK(as_sets.count({{1, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("small cases") {
  CHECK(multiset_partitions({1}, 1).size() == 1);
  auto two = multiset_partitions({1, 1}, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].size() == 2);
  CHECK(multiset_partitions({}, 1).empty());
  // Zero multiplicities keep their slot in the reported blocks.
  auto padded = multiset_partitions({0, 1, 0}, 1);
  REQUIRE(padded.size() == 1);
  CHECK(padded[0][0] == Block{0, 1, 0});
}

TEST_CASE("counts match brute force and known sequences") {
  // Bell numbers for distinct elements.
  CHECK(multiset_partitions({1, 1, 1, 1, 1}, 1).size() == 52);
  CHECK(multiset_partitions({1, 1, 1, 1, 1, 1, 1, 1}, 1).size() == 4140);
  // Integer partitions for a single repeated element.
  CHECK(multiset_partitions({10}, 1).size() == 42);
  for (const auto& m : std::vector<std::vector<unsigned>>{{2, 2}, {3, 1, 1}, {2, 2, 2}, {4, 3}, {1, 2, 3}, {3, 3}}) {
    CAPTURE(m.size());
    CHECK(multiset_partitions(m, 1).size() == brute_count(m));
  }
}

TEST_CASE("every partition covers the multiset exactly with nonempty blocks, no duplicates") {
  const std::vector<unsigned> mult{3, 2, 1};
  auto parts = multiset_partitions(mult, 1);
  std::set<std::multiset<std::vector<unsigned>>> unique;
  for (const auto& p : parts) {
    std::vector<unsigned> sum(mult.size(), 0);
    for (const auto& b : p) {
      CHECK(std::accumulate(b.begin(), b.end(), 0u) > 0);
      for (std::size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
    }
    CHECK(sum == mult);
    unique.insert(std::multiset<std::vector<unsigned>>(p.begin(), p.end()));
  }
  CHECK(unique.size() == parts.size());
}

TEST_CASE("min_blocks filters and the budget is enforced") {
  const auto all = multiset_partitions({2, 2}, 1);
  const auto many = multiset_partitions({2, 2}, 3);
  std::size_t expected = 0;
  for (const auto& p : all) expected += p.size() >= 3;
  CHECK(many.size() == expected);
  CHECK_THROWS_AS(multiset_partitions({1, 1, 1, 1, 1}, 1, 10), Error);
  CHECK(multiset_partitions({1, 1, 1, 1, 1}, 1, 52).size() == 52);
}

TEST_CASE("lazy generator is deterministic") {
  MultisetPartitions a({2, 1, 1}), b({2, 1, 1});
  while (a.next()) {
    REQUIRE(b.next());
    CHECK(a.current() == b.current());
  }
  CHECK_FALSE(b.next());
}
