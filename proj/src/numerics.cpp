#include "hcsp/numerics.hpp"

#include "hcsp/error.hpp"

#include <limits>
#include <string>

namespace hcsp {

namespace {

constexpr Count kMax = std::numeric_limits<Count>::max();

Count checked_mul(Count a, Count b, const char *what) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError(std::string(what) + ": integer overflow");
  return r;
}

Count checked_add(Count a, Count b, const char *what) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError(std::string(what) + ": integer overflow");
  return r;
}

} // namespace

Count isqrt(Count n) {
  if (n < 2)
    return n;
  // Bitwise digit-by-digit root; exact for the whole 64-bit range.
  Count rem = n;
  Count root = 0;
  Count bit = Count{1} << 62;
  while (bit > rem)
    bit >>= 2;
  while (bit != 0) {
    if (rem >= root + bit) {
      rem -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return root;
}

Count ceil_sqrt(Count n) {
  Count r = isqrt(n);
  return r * r == n ? r : r + 1;
}

Count alpha(Count k) {
  // Halve the even factor first so the product only overflows when the result does.
  Count a = k;
  Count b = checked_add(k, 1, "alpha");
  if (a % 2 == 0)
    a /= 2;
  else
    b /= 2;
  return checked_mul(a, b, "alpha");
}

Count tau(Count k) {
  Count disc = checked_add(checked_mul(k, 8, "tau"), 1, "tau");
  Count r = isqrt(disc);
  Count t = 0;
  if (r * r == disc)
    t = (r + 1) / 2; // disc is odd, so r is odd
  else
    t = r % 2 == 1 ? (r + 3) / 2 : (r + 2) / 2;
  // t(t-1) >= 2k characterises the ceiling; t is at most 2^31 here, no overflow.
  while (t > 1 && (t - 1) * (t - 2) >= 2 * k)
    --t;
  while (t * (t - 1) < 2 * k)
    ++t;
  return t;
}

Count min_size(Count s) {
  if (s == 0)
    throw InvalidArgument("min_size: ground set must be non-empty (s >= 1)");
  if (s <= 2)
    return s;
  return tau(s);
}

std::optional<Count> is_triangular(Count s) {
  if (s > (kMax - 1) / 8)
    throw OverflowError("is_triangular: integer overflow");
  Count disc = 8 * s + 1;
  Count r = isqrt(disc);
  if (r * r != disc)
    return std::nullopt;
  return (r - 1) / 2;
}

std::vector<Count> scholium_sequence(Count limit) {
  if (limit == 0)
    throw InvalidArgument("scholium_sequence: limit must be >= 1");
  std::vector<Count> out;
  for (Count k = 1; k <= limit; ++k)
    if (tau(k) == ceil_sqrt(checked_mul(k, 2, "scholium_sequence")))
      out.push_back(k);
  return out;
}

TriangularIndex TriangularIndex::of(Count k) {
  return TriangularIndex{k, alpha(k), checked_add(k, 1, "TriangularIndex")};
}

TriangularIndex TriangularIndex::from_size(Count s) {
  auto k = is_triangular(s);
  if (!k)
    throw InvalidArgument(std::to_string(s) + " is not a triangular number");
  return of(*k);
}

} // namespace hcsp
