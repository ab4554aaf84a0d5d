#include "hcsp/error.hpp"
#include "hcsp/numerics.hpp"
#include "hcsp/verify.hpp"

#include "naive.hpp"

#include <doctest.h>

using namespace hcsp;

namespace {

SetSystem a6() { return SetSystem::make(5, {{1, 2, 3}, {1, 4, 5}, {2, 4}, {3, 5}}); }
SetSystem a7() { return SetSystem::make(6, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}); }

SetSystem inclusion_minimal_five() {
  return SetSystem::make(5, {{1, 2, 3}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}});
}

} // namespace

TEST_CASE("is_separating") {
  CHECK(is_separating(all_k_subsets(2, 1)).holds);
  auto whole = SetSystem::make(2, {{1, 2}});
  auto v = is_separating(whole);
  CHECK_FALSE(v.holds);
  CHECK(v.counterexample == ElementPair{1, 2});
  CHECK(is_separating(a7()).holds);
  CHECK(is_separating(SetSystem::make(1, {})).holds);

  // Least unsplit pair: 2,3,4 share incidence, 1 stands alone.
  auto twins = SetSystem::make(4, {{1}, {2, 3, 4}});
  CHECK(is_separating(twins).counterexample == ElementPair{2, 3});
}

TEST_CASE("is_completely_separating") {
  CHECK(is_completely_separating(all_k_subsets(3, 1)).holds);
  auto chain = SetSystem::make(2, {{1}, {1, 2}});
  auto v = is_completely_separating(chain);
  CHECK_FALSE(v.holds);
  CHECK(v.counterexample == ElementPair{1, 2});
  CHECK(is_completely_separating(a6()).holds);
}

TEST_CASE("is_hcsp") {
  CHECK(is_hcsp(a7()).holds);
  auto p3 = all_k_subsets(4, 3);
  auto v = is_hcsp(p3);
  CHECK_FALSE(v.holds);
  CHECK(v.unwitnessed == std::size_t{1});

  auto one = is_hcsp(SetSystem::make(1, {{1}}), true);
  CHECK(one.holds);
  REQUIRE(one.witnesses.has_value());
  CHECK(one.witnesses->at(1) == std::vector<BlockPair>{{0, 0}});

  CHECK(is_hcsp(all_k_subsets(3, 2)).holds);
  CHECK_FALSE(is_hcsp(all_k_subsets(2, 2)).holds);
  CHECK_FALSE(is_hcsp(SetSystem::make(3, {})).holds);
}

TEST_CASE("witness map lists every pair, self pairs only for singletons") {
  auto sys = SetSystem::make(3, {{1}, {1, 2}, {2, 3}});
  WitnessMap w = witness_map(sys);
  // blocks in order: {1}=0, {1,2}=1, {2,3}=2
  CHECK(w.at(1) == std::vector<BlockPair>{{0, 0}, {0, 1}});
  CHECK(w.at(2) == std::vector<BlockPair>{{1, 2}});
  CHECK(w.at(3).empty());

  auto full = witness_map(a7());
  for (std::size_t a = 1; a <= 6; ++a) {
    REQUIRE(full.at(a).size() == 1);
    auto [i, j] = full.at(a).front();
    auto meet = a7().block(i) & a7().block(j);
    CHECK(meet.single() == a - 1);
  }
}

TEST_CASE("short-circuit and full modes agree") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    auto sys = naive::random_system(1 + rng() % 9, 9, rng);
    auto quick = is_hcsp(sys);
    auto full = is_hcsp(sys, true);
    REQUIRE(quick.holds == full.holds);
    REQUIRE(quick.unwitnessed == full.unwitnessed);
  }
}

TEST_CASE("predicates agree with the definitions") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 2000; ++iter) {
    std::size_t s = 1 + rng() % 7;
    auto sys = naive::random_system(s, 8, rng);
    auto fam = naive::family(sys);
    REQUIRE(is_separating(sys).holds == naive::separating(s, fam));
    REQUIRE(is_completely_separating(sys).holds == naive::completely_separating(s, fam));
    REQUIRE(is_hcsp(sys).holds == naive::hcsp(s, fam));
  }
}

TEST_CASE("implication chain on random systems") {
  std::mt19937_64 rng(23);
  for (std::size_t s = 1; s <= 8; ++s)
    for (int iter = 0; iter < 1000; ++iter) {
      auto sys = naive::random_system(s, 2 * s + 2, rng);
      bool h = is_hcsp(sys).holds;
      bool c = is_completely_separating(sys).holds;
      bool p = is_separating(sys).holds;
      REQUIRE((!h || c));
      REQUIRE((!c || p));
      if (h) {
        Bitset all(s), common = Bitset(s).complemented();
        for (const auto &b : sys.blocks()) {
          all |= b;
          common &= b;
        }
        REQUIRE(all.count() == s);
        if (s >= 2)
          REQUIRE(common.none());
        if (s >= 3)
          REQUIRE(sys.size() >= tau(s));
      }
    }
}

TEST_CASE("is_inclusion_minimal_hcsp") {
  CHECK(is_inclusion_minimal_hcsp(all_k_subsets(5, 1)).holds);
  CHECK(is_inclusion_minimal_hcsp(inclusion_minimal_five()).holds);

  auto extra = SetSystem::make(6, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}, {1, 2}});
  auto v = is_inclusion_minimal_hcsp(extra);
  CHECK_FALSE(v.holds);
  REQUIRE(v.removable_block.has_value());
  CHECK(to_elements(extra.block(*v.removable_block)) == ElementList{1, 2});

  auto not_hcsp = is_inclusion_minimal_hcsp(all_k_subsets(4, 3));
  CHECK_FALSE(not_hcsp.holds);
  CHECK_FALSE(not_hcsp.removable_block.has_value());
}

TEST_CASE("inclusion minimality agrees with exhaustive sub-family removal") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t s = 1 + rng() % 5;
    auto sys = naive::random_hcsp(s, rng);
    if (sys.size() > 10)
      continue;
    bool some_proper_subfamily_hcsp = false;
    std::size_t m = sys.size();
    for (std::uint32_t mask = 0; mask + 1 < (1U << m); ++mask) {
      std::vector<Bitset> sub;
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1U)
          sub.push_back(sys.block(i));
      auto fam = naive::family(SetSystem::from_bitsets(s, sub));
      if (naive::hcsp(s, fam))
        some_proper_subfamily_hcsp = true;
    }
    REQUIRE(is_inclusion_minimal_hcsp(sys).holds == !some_proper_subfamily_hcsp);
  }
}

TEST_CASE("is_size_minimal") {
  CHECK(is_size_minimal(a6()));
  CHECK(is_size_minimal(a7()));
  CHECK_FALSE(is_size_minimal(all_k_subsets(5, 1)));
  CHECK_FALSE(is_size_minimal(inclusion_minimal_five()));
  CHECK(is_size_minimal(SetSystem::make(1, {{1}})));
  CHECK(is_size_minimal(all_k_subsets(2, 1)));
  for (std::size_t s = 1; s <= 4; ++s)
    CHECK(is_size_minimal(all_k_subsets(s, 1)));
}

TEST_CASE("classify certificates and invariants") {
  auto c = classify(all_k_subsets(4, 3));
  CHECK(c.separating);
  CHECK(c.completely_separating);
  CHECK_FALSE(c.hcsp);
  REQUIRE(c.failing_certificate.has_value());
  CHECK(std::get<std::size_t>(*c.failing_certificate) == 1);

  auto chain = classify(SetSystem::make(2, {{1}, {1, 2}}));
  CHECK(chain.separating);
  CHECK_FALSE(chain.completely_separating);
  CHECK(std::get<ElementPair>(*chain.failing_certificate) == ElementPair{1, 2});

  auto good = classify(a7());
  CHECK(good.hcsp);
  CHECK(good.size_minimal);
  CHECK(good.inclusion_minimal_hcsp);
  CHECK_FALSE(good.failing_certificate.has_value());

  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 500; ++iter) {
    auto sys = naive::random_system(1 + rng() % 7, 8, rng);
    auto k = classify(sys);
    REQUIRE((!k.hcsp || k.completely_separating));
    REQUIRE((!k.completely_separating || k.separating));
    REQUIRE((!k.size_minimal || k.inclusion_minimal_hcsp));
    REQUIRE(k.failing_certificate.has_value() == !k.hcsp);
  }
}

TEST_CASE("check_extremal_triangular") {
  auto r = check_extremal_triangular(a7());
  CHECK(r.k == 3);
  CHECK(r.all_pass());

  auto broken = SetSystem::make(6, {{1, 2}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
  auto b = check_extremal_triangular(broken);
  CHECK_FALSE(b.block_size_k);
  CHECK_FALSE(b.all_pass());

  CHECK_THROWS_AS(check_extremal_triangular(a6()), PreconditionError);
  CHECK_THROWS_AS(check_extremal_triangular(all_k_subsets(3, 1)), PreconditionError);
  CHECK_THROWS_AS(check_extremal_triangular(SetSystem::make(6, {{1, 2, 3}})), PreconditionError);
  try {
    check_extremal_triangular(SetSystem::make(6, {{1, 2, 3}}));
  } catch (const PreconditionError &e) {
    CHECK(std::string(e.what()).find("|blocks|") != std::string::npos);
  }
  try {
    check_extremal_triangular(a6());
  } catch (const PreconditionError &e) {
    CHECK(std::string(e.what()).find("s = 5") != std::string::npos);
  }
}

TEST_CASE("P_k criterion and the complement of P_1") {
  for (std::size_t s = 1; s <= 10; ++s)
    for (std::size_t k = 0; k <= s; ++k)
      REQUIRE(is_hcsp(all_k_subsets(s, k)).holds == (k >= 1 && 2 * k <= s + 1));
  // s = 1 gives {∅}, which is not HCSP; from s = 2 on the rule is s <= 3.
  CHECK_FALSE(is_hcsp(complement_system(all_k_subsets(1, 1))).holds);
  for (std::size_t s = 2; s <= 10; ++s)
    CHECK(is_hcsp(complement_system(all_k_subsets(s, 1))).holds == (s <= 3));
}

TEST_CASE("HCSP is closed under supersets and restriction") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 500; ++iter) {
    std::size_t s = 1 + rng() % 7;
    auto sys = naive::random_hcsp(s, rng);
    REQUIRE(is_hcsp(sys).holds);

    std::vector<Bitset> more = sys.blocks();
    more.push_back(naive::random_block(s, rng));
    REQUIRE(is_hcsp(SetSystem::from_bitsets(s, more)).holds);

    ElementList r;
    for (std::size_t e = 1; e <= s; ++e)
      if (rng() % 2)
        r.push_back(e);
    if (r.empty())
      r.push_back(s);
    REQUIRE(is_hcsp(restrict_to(sys, r)).holds);
  }
}
