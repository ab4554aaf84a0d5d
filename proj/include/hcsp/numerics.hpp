#ifndef HCSP_NUMERICS_HPP
#define HCSP_NUMERICS_HPP

#include <cstdint>
#include <optional>
#include <vector>

// Exact integer arithmetic around triangular numbers. Nothing here touches
// floating point; every overflow raises hcsp::OverflowError.

namespace hcsp {

using Count = std::uint64_t;

/// Largest r with r*r <= n.
Count isqrt(Count n);

/// Smallest r with r*r >= n.
Count ceil_sqrt(Count n);

/// k-th triangular number k(k+1)/2.
Count alpha(Count k);

/// Smallest positive t with t >= (1 + sqrt(8k+1)) / 2, equivalently t(t-1) >= 2k.
Count tau(Count k);

/// Cardinality of every size-minimal HCSP system on s points (1, 2, then tau(s)).
Count min_size(Count s);

/// k with alpha(k) == s, if s is triangular.
std::optional<Count> is_triangular(Count s);

/// All k in [1, limit] with tau(k) == ceil(sqrt(2k)), ascending.
std::vector<Count> scholium_sequence(Count limit);

/// A triangular number together with its index and threshold.
struct TriangularIndex {
  Count k = 0;
  Count alpha_k = 0;
  Count tau_alpha_k = 1;

  static TriangularIndex of(Count k);
  /// Throws InvalidArgument when s is not triangular.
  static TriangularIndex from_size(Count s);

  friend bool operator==(const TriangularIndex &, const TriangularIndex &) = default;
};

} // namespace hcsp

#endif
