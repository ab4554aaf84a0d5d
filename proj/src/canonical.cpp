#include "hcsp/error.hpp"
#include "hcsp/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace hcsp {

namespace {

using Mask = std::uint64_t;

// Elements are first split into cells by an isomorphism-invariant key;
// only relabellings that send each cell onto its own block of positions are
// tried. The set of such relabellings moves with the system under any
// permutation, so the minimum over it is still a complete invariant.
struct ElementKey {
  std::size_t degree = 0;
  std::vector<std::size_t> incident_sizes;

  friend auto operator<=>(const ElementKey &, const ElementKey &) = default;
};

} // namespace

CanonicalForm canonical_form(const SetSystem &sys, const SearchBudget &budget) {
  std::size_t s = sys.ground_size();
  if (s > budget.max_ground_size || s > 64)
    throw BudgetExceeded("canonical_form: s = " + std::to_string(s) +
                         " exceeds max ground size " + std::to_string(budget.max_ground_size));

  std::vector<Mask> masks;
  masks.reserve(sys.size());
  for (const auto &b : sys.blocks())
    masks.push_back(b.word_count() ? b.word(0) : 0);

  std::vector<ElementKey> keys(s);
  for (const auto &b : sys.blocks()) {
    std::size_t size = b.count();
    b.for_each([&](std::size_t e) {
      ++keys[e].degree;
      keys[e].incident_sizes.push_back(size);
    });
  }
  for (auto &k : keys)
    std::sort(k.incident_sizes.begin(), k.incident_sizes.end());

  // order[p] = element placed at position p; cells are maximal runs of equal keys.
  std::vector<std::size_t> order(s);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t p = 0; p < s;) {
    std::size_t q = p + 1;
    while (q < s && keys[order[q]] == keys[order[p]])
      ++q;
    cells.emplace_back(p, q);
    p = q;
  }

  std::uint64_t arrangements = 1;
  for (auto [lo, hi] : cells)
    for (std::size_t f = 2; f <= hi - lo; ++f)
      if (__builtin_mul_overflow(arrangements, f, &arrangements) ||
          arrangements > budget.max_candidates)
        throw BudgetExceeded("canonical_form: too many relabellings");

  CanonicalForm best{s, {}};
  std::vector<Mask> image(masks.size());
  std::vector<std::size_t> pos(s);
  bool first = true;
  for (;;) {
    for (std::size_t p = 0; p < s; ++p)
      pos[order[p]] = p;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      Mask img = 0;
      for (Mask m = masks[i]; m != 0; m &= m - 1)
        img |= Mask{1} << pos[static_cast<std::size_t>(std::countr_zero(m))];
      image[i] = img;
    }
    std::sort(image.begin(), image.end());
    if (first || image < best.blocks) {
      best.blocks = image;
      first = false;
    }

    // Odometer over the cells; next_permutation resets a cell to sorted when it wraps.
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [lo, hi] = cells[c];
      if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                order.begin() + static_cast<std::ptrdiff_t>(hi)))
        break;
    }
    if (c == cells.size())
      break;
  }
  return best;
}

namespace {

/**
 * Backtracking isomorphism search on an incidence structure.
 *
 * Rows are matched one at a time. Columns carry a class id that records
 * their membership in every row matched so far; a partial matching is
 * viable only while both sides have the same number of columns in every
 * class. Once every row is matched, columns of equal class are paired in
 * index order, which yields a column bijection consistent with all rows.
 */
class IncidenceMatcher {
public:
  IncidenceMatcher(std::vector<Bitset> rows_a, std::vector<Bitset> rows_b, std::size_t ncols,
                   std::uint64_t limit)
      : a_(std::move(rows_a)), b_(std::move(rows_b)), ncols_(ncols), limit_(limit),
        row_map_(a_.size()), used_(b_.size(), false) {}

  bool solve() {
    std::vector<std::size_t> ca(ncols_, 0);
    std::vector<std::size_t> cb(ncols_, 0);
    return descend(0, ca, cb);
  }

  const std::vector<std::size_t> &row_map() const { return row_map_; }
  const std::vector<std::size_t> &col_map() const { return col_map_; }

private:
  bool refine(const Bitset &ra, const Bitset &rb, std::vector<std::size_t> &ca,
              std::vector<std::size_t> &cb) const {
    std::vector<std::size_t> next_id(2 * ncols_, kNone);
    std::vector<std::size_t> count;
    std::size_t ids = 0;
    for (std::size_t c = 0; c < ncols_; ++c) {
      std::size_t key = 2 * ca[c] + (ra.test(c) ? 1 : 0);
      if (next_id[key] == kNone) {
        next_id[key] = ids++;
        count.push_back(0);
      }
      ca[c] = next_id[key];
      ++count[ca[c]];
    }
    for (std::size_t c = 0; c < ncols_; ++c) {
      std::size_t key = 2 * cb[c] + (rb.test(c) ? 1 : 0);
      std::size_t id = next_id[key];
      if (id == kNone || count[id] == 0)
        return false;
      --count[id];
      cb[c] = id;
    }
    return true;
  }

  bool descend(std::size_t depth, const std::vector<std::size_t> &ca,
               const std::vector<std::size_t> &cb) {
    if (depth == a_.size()) {
      finish(ca, cb);
      return true;
    }
    const Bitset &ra = a_[depth];
    std::size_t degree = ra.count();
    for (std::size_t j = 0; j < b_.size(); ++j) {
      if (used_[j] || b_[j].count() != degree)
        continue;
      if (++nodes_ > limit_)
        throw BudgetExceeded("are_isomorphic: search examined more than " +
                             std::to_string(limit_) + " candidates");
      std::vector<std::size_t> na = ca;
      std::vector<std::size_t> nb = cb;
      if (!refine(ra, b_[j], na, nb))
        continue;
      used_[j] = true;
      row_map_[depth] = j;
      if (descend(depth + 1, na, nb))
        return true;
      used_[j] = false;
    }
    return false;
  }

  void finish(const std::vector<std::size_t> &ca, const std::vector<std::size_t> &cb) {
    std::map<std::size_t, std::vector<std::size_t>> pending;
    for (std::size_t c = 0; c < ncols_; ++c)
      pending[cb[c]].push_back(c);
    for (auto &[id, cols] : pending)
      std::reverse(cols.begin(), cols.end());
    col_map_.assign(ncols_, 0);
    for (std::size_t c = 0; c < ncols_; ++c) {
      auto &cols = pending[ca[c]];
      col_map_[c] = cols.back();
      cols.pop_back();
    }
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Bitset> a_;
  std::vector<Bitset> b_;
  std::size_t ncols_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> row_map_;
  std::vector<std::size_t> col_map_;
  std::vector<bool> used_;
};

std::vector<Bitset> point_rows(const SetSystem &sys) {
  std::vector<Bitset> rows(sys.ground_size(), Bitset(sys.size()));
  for (std::size_t i = 0; i < sys.size(); ++i)
    sys.block(i).for_each([&](std::size_t p) { rows[p].set(i); });
  return rows;
}

std::vector<std::size_t> sorted_counts(const std::vector<Bitset> &rows) {
  std::vector<std::size_t> out;
  out.reserve(rows.size());
  for (const auto &r : rows)
    out.push_back(r.count());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::optional<std::vector<std::size_t>> are_isomorphic(const SetSystem &a, const SetSystem &b,
                                                        const SearchBudget &budget) {
  if (a.ground_size() != b.ground_size() || a.size() != b.size())
    return std::nullopt;
  std::vector<Bitset> pa = point_rows(a);
  std::vector<Bitset> pb = point_rows(b);
  if (sorted_counts(a.blocks()) != sorted_counts(b.blocks()) || sorted_counts(pa) != sorted_counts(pb))
    return std::nullopt;

  // Branch on whichever side is smaller.
  bool on_blocks = a.size() < a.ground_size();
  std::vector<std::size_t> sigma(a.ground_size());
  if (on_blocks) {
    IncidenceMatcher m(a.blocks(), b.blocks(), a.ground_size(), budget.max_candidates);
    if (!m.solve())
      return std::nullopt;
    for (std::size_t p = 0; p < sigma.size(); ++p)
      sigma[p] = m.col_map()[p] + 1;
  } else {
    IncidenceMatcher m(std::move(pa), std::move(pb), a.size(), budget.max_candidates);
    if (!m.solve())
      return std::nullopt;
    for (std::size_t p = 0; p < sigma.size(); ++p)
      sigma[p] = m.row_map()[p] + 1;
  }
  if (!(relabel(a, sigma) == b))
    throw Error("are_isomorphic: internal error, bijection does not verify");
  return sigma;
}

} // namespace hcsp
