#ifndef HCSP_VERIFY_HPP
#define HCSP_VERIFY_HPP

#include "hcsp/set_system.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace hcsp {

/// Unordered pair of block indices, stored with first <= second.
using BlockPair = std::pair<std::size_t, std::size_t>;

/// Two distinct 1-based ground elements, first < second.
using ElementPair = std::pair<std::size_t, std::size_t>;

/**
 * For each ground element a (0-based index a-1), every unordered pair of
 * block indices (i, j) with blocks[i] ∩ blocks[j] = {a}. The self pair
 * (i, i) appears only when blocks[i] = {a}. Pairs are listed in
 * lexicographic order; elements without a witness have an empty list.
 */
struct WitnessMap {
  std::vector<std::vector<BlockPair>> pairs;

  bool witnessed(std::size_t element) const { return !pairs[element - 1].empty(); }
  const std::vector<BlockPair> &at(std::size_t element) const { return pairs[element - 1]; }
};

template <class Certificate> struct Verdict {
  bool holds = false;
  std::optional<Certificate> counterexample;

  explicit operator bool() const { return holds; }
};

/// Least unsplit 2-subset on failure.
Verdict<ElementPair> is_separating(const SetSystem &sys);

/// Least 2-subset {a,b} lacking a block that contains one and misses the other.
Verdict<ElementPair> is_completely_separating(const SetSystem &sys);

struct HcspVerdict {
  bool holds = false;
  std::optional<std::size_t> unwitnessed; ///< least 1-based element without a witness
  std::optional<WitnessMap> witnesses;    ///< filled in full mode only

  explicit operator bool() const { return holds; }
};

/// Short-circuit mode stops as soon as every element is witnessed; full mode
/// always computes the whole WitnessMap.
HcspVerdict is_hcsp(const SetSystem &sys, bool full = false);

/// Complete witness map, regardless of whether the system is HCSP.
WitnessMap witness_map(const SetSystem &sys);

/// Verdict plus the least-index block whose removal keeps the system HCSP.
struct InclusionVerdict {
  bool holds = false;
  std::optional<std::size_t> removable_block;

  explicit operator bool() const { return holds; }
};

/// HCSP is upward closed, so checking single-block removals is complete.
InclusionVerdict is_inclusion_minimal_hcsp(const SetSystem &sys);

bool is_size_minimal(const SetSystem &sys);

/// Failure evidence: either a 2-subset or a single element.
using FailingCertificate = std::variant<ElementPair, std::size_t>;

struct SystemClassification {
  bool separating = false;
  bool completely_separating = false;
  bool hcsp = false;
  bool inclusion_minimal_hcsp = false;
  bool size_minimal = false;
  WitnessMap witnesses;
  std::optional<FailingCertificate> failing_certificate;
};

/// Runs every predicate; the certificate comes from the first property that fails.
SystemClassification classify(const SetSystem &sys);

struct ExtremalReport {
  std::size_t k = 0;
  bool unique_witness_pairs = false;
  bool pairwise_intersections_one = false;
  bool block_size_k = false;
  bool union_is_ground = false;
  bool intersection_empty = false;

  bool all_pass() const {
    return unique_witness_pairs && pairwise_intersections_one && block_size_k &&
           union_is_ground && intersection_empty;
  }
};

/// Structure checks for a system with k+1 blocks on alpha(k) points, k >= 3.
/// Throws PreconditionError naming the violated requirement otherwise.
ExtremalReport check_extremal_triangular(const SetSystem &sys);

} // namespace hcsp

#endif
