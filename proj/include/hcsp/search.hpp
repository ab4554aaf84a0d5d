#ifndef HCSP_SEARCH_HPP
#define HCSP_SEARCH_HPP

#include "hcsp/set_system.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hcsp {

/// Limits for the exhaustive searches. Exceeding one throws BudgetExceeded.
struct SearchBudget {
  std::size_t max_ground_size = 7;
  std::uint64_t max_candidates = 2'000'000'000;
  std::size_t parallel_chunks = 1;

  static SearchBudget oracle() { return {}; }
  static SearchBudget isomorphism() { return {8, 2'000'000'000, 1}; }
};

/**
 * Isomorphism-invariant form of a system on at most 64 points: the blocks
 * as bit-vector integers, ascending, under the least relabelling among
 * those that respect the (degree, incident block sizes) refinement.
 */
struct CanonicalForm {
  std::size_t s = 0;
  std::vector<std::uint64_t> blocks;

  SetSystem to_system() const;

  friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

/// Least m such that some m non-empty subsets of {1..s} form an HCSP system.
std::size_t min_hcsp_size_oracle(std::size_t s, const SearchBudget &budget = SearchBudget::oracle());

/// Canonical forms of all HCSP systems with min_size(s) blocks, one per class, sorted.
std::vector<CanonicalForm> enumerate_min_classes(std::size_t s,
                                                 const SearchBudget &budget = SearchBudget::oracle());

/// Throws BudgetExceeded when s exceeds budget.max_ground_size.
CanonicalForm canonical_form(const SetSystem &sys,
                             const SearchBudget &budget = SearchBudget::isomorphism());

/// A bijection sigma (sigma[e-1] is the image of e, 1-based) carrying a's blocks onto b's,
/// or nothing. Systems of different ground size or block count are never isomorphic.
std::optional<std::vector<std::size_t>>
are_isomorphic(const SetSystem &a, const SetSystem &b,
               const SearchBudget &budget = SearchBudget::isomorphism());

} // namespace hcsp

#endif
