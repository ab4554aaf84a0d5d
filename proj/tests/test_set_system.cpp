#include "hcsp/error.hpp"
#include "hcsp/set_system.hpp"

#include "naive.hpp"

#include <doctest.h>

using namespace hcsp;

namespace {

SetSystem a6() { return SetSystem::make(5, {{1, 2, 3}, {1, 4, 5}, {2, 4}, {3, 5}}); }
SetSystem a7() { return SetSystem::make(6, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}); }

} // namespace

TEST_CASE("Bitset ordering is numeric across words") {
  Bitset lo(130), hi(130);
  lo.set(0);
  lo.set(64);
  hi.set(129);
  CHECK(lo < hi);
  CHECK(hi.single() == std::size_t{129});
  CHECK_FALSE(lo.single().has_value());
  CHECK(lo.count() == 2);
  CHECK(hi.complemented().count() == 129);
  CHECK(intersection_count(lo, lo | hi) == 2);
}

TEST_CASE("make") {
  auto p1 = SetSystem::make(3, {{1}, {2}, {3}});
  CHECK(p1 == all_k_subsets(3, 1));
  CHECK_FALSE(p1.collapsed_duplicates());

  auto dup = SetSystem::make(2, {{1}, {1}});
  CHECK(dup.size() == 1);
  CHECK(dup.collapsed_duplicates());

  auto empty_block = SetSystem::make(1, {{}});
  CHECK(empty_block.size() == 1);
  CHECK(empty_block.block(0).none());

  CHECK(SetSystem::make(3, {{3}, {1, 2}}) == SetSystem::make(3, {{2, 1}, {3}}));
  CHECK_THROWS_AS(SetSystem::make(0, {}), InvalidArgument);
  CHECK_THROWS_AS(SetSystem::make(3, {{4}}), InvalidArgument);
  CHECK_THROWS_AS(SetSystem::make(3, {{0}}), InvalidArgument);
}

TEST_CASE("blocks are kept in bit-vector order") {
  auto sys = SetSystem::make(4, {{4}, {1, 2}, {1}, {2, 3}});
  for (std::size_t i = 1; i < sys.size(); ++i)
    CHECK(sys.block(i - 1) < sys.block(i));
  CHECK(sys.block_lists() == std::vector<ElementList>{{1}, {1, 2}, {2, 3}, {4}});
}

TEST_CASE("restrict") {
  CHECK(restrict_to(a7(), {1, 2, 3, 4, 5}) == a6());
  CHECK(restrict_to(a7(), {1, 2, 3, 4, 5, 6}) == a7());

  auto two = SetSystem::make(3, {{1, 2}, {1, 3}});
  auto r = restrict_to(two, {1});
  CHECK(r.ground_size() == 1);
  CHECK(r.size() == 1);
  CHECK(r == SetSystem::make(1, {{1}}));

  // Relabelling is order preserving: {2,4,6} -> {1,2,3}.
  CHECK(restrict_to(a7(), {2, 4, 6}) ==
        SetSystem::make(3, {{1}, {2}, {1, 2, 3}, {3}}));

  CHECK_THROWS_AS(restrict_to(a7(), {}), InvalidArgument);
  CHECK_THROWS_AS(restrict_to(a7(), {7}), InvalidArgument);
}

TEST_CASE("restrict is idempotent under the full restriction") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t s = 1 + rng() % 9;
    auto sys = naive::random_system(s, 10, rng);
    ElementList r;
    for (std::size_t e = 1; e <= s; ++e)
      if (rng() % 2)
        r.push_back(e);
    if (r.empty())
      r.push_back(1);
    auto once = restrict_to(sys, r);
    ElementList full(once.ground_size());
    std::iota(full.begin(), full.end(), std::size_t{1});
    REQUIRE(restrict_to(once, full) == once);
  }
}

TEST_CASE("complement_system") {
  CHECK(complement_system(all_k_subsets(3, 1)) == all_k_subsets(3, 2));
  CHECK(complement_system(all_k_subsets(4, 1)) == all_k_subsets(4, 3));
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    auto sys = naive::random_system(1 + rng() % 70, 12, rng);
    auto c = complement_system(sys);
    REQUIRE(c.size() == sys.size());
    REQUIRE(complement_system(c) == sys);
  }
}

TEST_CASE("disjoint_union") {
  std::vector<SetSystem> singletons{all_k_subsets(2, 1), all_k_subsets(3, 1)};
  CHECK(disjoint_union(singletons) == all_k_subsets(5, 1));

  std::vector<SetSystem> twice{a7(), a7()};
  auto u = disjoint_union(twice);
  CHECK(u.ground_size() == 12);
  CHECK(u.size() == 8);

  std::vector<SetSystem> one{a6()};
  CHECK(disjoint_union(one) == a6());

  CHECK_THROWS_AS(disjoint_union(std::vector<SetSystem>{}), InvalidArgument);
  std::vector<SetSystem> with_empty{a6(), SetSystem::make(2, {{}, {1}})};
  CHECK_THROWS_AS(disjoint_union(with_empty), InvalidArgument);
}

TEST_CASE("product") {
  std::vector<SetSystem> singles{all_k_subsets(2, 1), all_k_subsets(2, 1)};
  CHECK(product(singles) == all_k_subsets(4, 1));

  std::vector<SetSystem> squares{a7(), a7()};
  auto p = product(squares);
  CHECK(p.ground_size() == 36);
  CHECK(p.size() == 16);
  for (const auto &b : p.blocks())
    CHECK(b.count() == 9);

  std::vector<SetSystem> one{a6()};
  CHECK(product(one) == a6());

  // Mixed radix: (a1, a2) -> 1 + (a1-1)*s2 + (a2-1).
  std::vector<SetSystem> mixed{SetSystem::make(2, {{2}}), SetSystem::make(3, {{1, 3}})};
  CHECK(product(mixed) == SetSystem::make(6, {{4, 6}}));

  CHECK_THROWS_AS(product(std::vector<SetSystem>{}), InvalidArgument);
  std::vector<SetSystem> no_blocks{a6(), SetSystem::make(2, {})};
  CHECK_THROWS_AS(product(no_blocks), InvalidArgument);
  std::vector<SetSystem> with_empty{a6(), SetSystem::make(2, {{}})};
  CHECK_THROWS_AS(product(with_empty), InvalidArgument);
}

TEST_CASE("size additivity and multiplicativity on random parts") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = 1 + rng() % 3;
    std::vector<SetSystem> parts;
    std::size_t sum = 0, prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t s = 1 + rng() % 4;
      std::vector<Bitset> blocks;
      std::size_t m = 1 + rng() % 4;
      for (std::size_t j = 0; j < m; ++j) {
        auto b = naive::random_block(s, rng);
        if (b.none())
          b.set(0);
        blocks.push_back(b);
      }
      parts.push_back(SetSystem::from_bitsets(s, blocks));
      sum += parts.back().size();
      prod *= parts.back().size();
    }
    REQUIRE(disjoint_union(parts).size() == sum);
    REQUIRE(product(parts).size() == prod);
  }
}

TEST_CASE("p_k") {
  CHECK(all_k_subsets(3, 1) == SetSystem::make(3, {{1}, {2}, {3}}));
  CHECK(all_k_subsets(4, 3).size() == 4);
  auto zero = all_k_subsets(5, 0);
  CHECK(zero.size() == 1);
  CHECK(zero.block(0).none());
  CHECK(all_k_subsets(10, 5).size() == 252);
  CHECK_THROWS_AS(all_k_subsets(3, 4), InvalidArgument);
}

TEST_CASE("relabel") {
  auto sys = SetSystem::make(3, {{1, 2}, {3}});
  CHECK(relabel(sys, {3, 1, 2}) == SetSystem::make(3, {{3, 1}, {2}}));
  CHECK_THROWS_AS(relabel(sys, {1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(relabel(sys, {1, 2}), InvalidArgument);
}
