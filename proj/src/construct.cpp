#include "hcsp/construct.hpp"

#include "hcsp/error.hpp"
#include "hcsp/numerics.hpp"
#include "hcsp/verify.hpp"

#include <numeric>

namespace hcsp {

namespace {

SetSystem extremal_six() {
  return SetSystem::make(6, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
}

// No checks: the caller guarantees k+1 blocks on alpha(k) points.
SetSystem extend_unchecked(const SetSystem &sys, std::size_t k) {
  std::size_t s = sys.ground_size();
  std::size_t s_plus = s + k + 1;
  std::vector<Bitset> out;
  out.reserve(k + 2);
  Bitset extra(s_plus);
  for (std::size_t l = 0; l < sys.size(); ++l) {
    Bitset b(s_plus);
    sys.block(l).for_each([&](std::size_t e) { b.set(e); });
    b.set(s + l);
    extra.set(s + l);
    out.push_back(std::move(b));
  }
  out.push_back(std::move(extra));
  return SetSystem::from_bitsets(s_plus, std::move(out));
}

} // namespace

CatalogEntry base_catalog(std::size_t s) {
  CatalogEntry e;
  e.s = s;
  switch (s) {
  case 1:
    e.representatives = {SetSystem::make(1, {{1}})};
    e.names = {"P1(S1)"};
    break;
  case 2:
    e.representatives = {SetSystem::make(2, {{1}, {2}})};
    e.names = {"P1(S2)"};
    e.complement_partners = {{0, 0}};
    break;
  case 3:
    e.representatives = {all_k_subsets(3, 1), all_k_subsets(3, 2)};
    e.names = {"P1(S3)", "P2(S3)"};
    e.complement_partners = {{0, 1}, {1, 0}};
    break;
  case 4:
    e.representatives = {
        SetSystem::make(4, {{1}, {2}, {3}, {4}}),
        SetSystem::make(4, {{1}, {2, 3}, {2, 4}, {3, 4}}),
        SetSystem::make(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}),
        SetSystem::make(4, {{1}, {2, 3}, {3, 4}, {1, 2, 4}}),
        SetSystem::make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}}),
    };
    e.names = {"A1", "A2", "A3", "A4", "A5"};
    e.complement_partners = {{1, 4}, {2, 2}, {3, 3}, {4, 1}};
    break;
  case 5:
    e.representatives = {SetSystem::make(5, {{1, 2, 3}, {1, 4, 5}, {2, 4}, {3, 5}})};
    e.names = {"A6"};
    e.complement_partners = {{0, 0}};
    break;
  case 6:
    e.representatives = {extremal_six()};
    e.names = {"A7"};
    e.complement_partners = {{0, 0}};
    break;
  default:
    throw InvalidArgument("base_catalog: s must lie in 1..6");
  }
  return e;
}

SetSystem extend_triangular(const SetSystem &sys) {
  std::size_t s = sys.ground_size();
  auto k = is_triangular(s);
  if (!k || *k < 3)
    throw PreconditionError("extend_triangular: s = " + std::to_string(s) +
                            " is not alpha(k) for any k >= 3");
  if (sys.size() != *k + 1)
    throw PreconditionError("extend_triangular: expected k+1 = " + std::to_string(*k + 1) +
                            " blocks, got " + std::to_string(sys.size()));
  ExtremalReport report = check_extremal_triangular(sys);
  if (!report.unique_witness_pairs)
    throw PreconditionError("extend_triangular: some element lacks a unique witness pair");
  if (!report.pairwise_intersections_one)
    throw PreconditionError("extend_triangular: two blocks do not meet in exactly one element");
  if (!report.block_size_k)
    throw PreconditionError("extend_triangular: a block does not have size k");
  return extend_unchecked(sys, *k);
}

SetSystem pair_system(std::size_t m) {
  if (m < 4)
    throw InvalidArgument("pair_system: m must be >= 4");
  std::size_t n = m * (m - 1) / 2;
  std::vector<Bitset> blocks(m, Bitset(n));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j, ++idx) {
      blocks[i].set(idx);
      blocks[j].set(idx);
    }
  return SetSystem::from_bitsets(n, std::move(blocks));
}

SetSystem construct_min(std::size_t s) {
  if (s == 0)
    throw InvalidArgument("construct_min: s must be >= 1");
  if (s <= 6)
    return base_catalog(s).representatives.front();

  // alpha(k-1) < s <= alpha(k)
  std::size_t k = tau(s) - 1;
  SetSystem sys = extremal_six();
  for (std::size_t j = 3; j < k; ++j)
    sys = extend_unchecked(sys, j);
  if (sys.ground_size() == s)
    return sys;
  ElementList keep(s);
  std::iota(keep.begin(), keep.end(), std::size_t{1});
  return restrict_to(sys, keep);
}

} // namespace hcsp
