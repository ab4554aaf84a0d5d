#ifndef HCSP_CONSTRUCT_HPP
#define HCSP_CONSTRUCT_HPP

#include "hcsp/set_system.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hcsp {

struct CatalogEntry {
  std::size_t s = 0;
  /// One representative per isomorphism class of size-minimal HCSP systems.
  std::vector<SetSystem> representatives;
  std::vector<std::string> names;
  /// (i, j): the complement system of representative i is isomorphic to representative j.
  /// Representatives whose complement is not size-minimal HCSP have no entry.
  std::vector<std::pair<std::size_t, std::size_t>> complement_partners;
};

/// Classes of size-minimal HCSP systems for 1 <= s <= 6.
CatalogEntry base_catalog(std::size_t s);

/// One inductive step: k+1 blocks on alpha(k) points to k+2 blocks on alpha(k+1).
/// Block i gains the new point s+i; the extra block is {s+1, ..., s+k+1}.
SetSystem extend_triangular(const SetSystem &sys);

/// Stars of the complete graph K_m: ground set is the C(m,2) edges in
/// lexicographic order, block i holds every edge incident to vertex i.
SetSystem pair_system(std::size_t m);

/// A size-minimal HCSP system on {1, ..., s}.
SetSystem construct_min(std::size_t s);

} // namespace hcsp

#endif
