#ifndef HCSP_SET_SYSTEM_HPP
#define HCSP_SET_SYSTEM_HPP

#include "hcsp/bitset.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hcsp {

/// A subset given as a list of 1-based ground elements.
using ElementList = std::vector<std::size_t>;

/**
 * A duplicate-free family of subsets of the ground set {1, ..., s}.
 *
 * Externally elements are 1-based; block bit i stands for element i+1.
 * Blocks are held sorted by their numeric bit-vector value, so two systems
 * with the same ground size and the same blocks compare equal regardless
 * of the order the blocks were supplied in. Values are immutable.
 */
class SetSystem {
public:
  SetSystem() = default;

  /// Builds a system from 1-based element lists, collapsing duplicate blocks.
  /// Throws InvalidArgument for s == 0 or elements outside 1..s.
  static SetSystem make(std::size_t s, const std::vector<ElementList> &blocks);

  /// Same as make() but from bit vectors of width s.
  static SetSystem from_bitsets(std::size_t s, std::vector<Bitset> blocks);

  std::size_t ground_size() const { return s_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  const std::vector<Bitset> &blocks() const { return blocks_; }
  const Bitset &block(std::size_t i) const { return blocks_[i]; }

  /// True when make() dropped at least one duplicate block.
  bool collapsed_duplicates() const { return collapsed_; }

  /// Blocks as sorted 1-based element lists, in internal block order.
  std::vector<ElementList> block_lists() const;

  bool contains(const Bitset &b) const;

  /// Structural equality; the duplicate flag does not participate.
  friend bool operator==(const SetSystem &a, const SetSystem &b) {
    return a.s_ == b.s_ && a.blocks_ == b.blocks_;
  }

private:
  std::size_t s_ = 0;
  std::vector<Bitset> blocks_;
  bool collapsed_ = false;
};

/// 1-based element list to a bit vector of width s (range-checked).
Bitset to_bitset(std::size_t s, const ElementList &elements);

/// Bit vector to a sorted 1-based element list.
ElementList to_elements(const Bitset &b);

/// Traces {A ∩ R} relabelled onto {1, ..., |R|} in increasing order of R.
SetSystem restrict_to(const SetSystem &sys, const ElementList &r);

/// {S \ A : A in sys}.
SetSystem complement_system(const SetSystem &sys);

/// Ground sets placed side by side; part i is shifted by the sizes of parts before it.
/// Rejects an empty list and parts containing the empty block.
SetSystem disjoint_union(std::span<const SetSystem> parts);

/// All products A_1 x ... x A_k on the mixed-radix flattened product ground set.
/// A tuple (a_1, ..., a_k) becomes 1 + sum (a_i - 1) * prod_{j>i} s_j.
SetSystem product(std::span<const SetSystem> parts);

/// P_k(S): every k-element subset of {1, ..., s}.
SetSystem all_k_subsets(std::size_t s, std::size_t k);

/// Image of sys under the ground permutation e -> perm[e-1] (1-based values).
SetSystem relabel(const SetSystem &sys, const std::vector<std::size_t> &perm);

} // namespace hcsp

#endif
