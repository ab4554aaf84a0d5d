#include "hcsp/verify.hpp"

#include "hcsp/error.hpp"
#include "hcsp/numerics.hpp"

#include <string>
#include <unordered_map>

namespace hcsp {

namespace {

/// Point-by-block incidence: row p holds the indices of blocks containing p+1.
std::vector<Bitset> incidence(const SetSystem &sys) {
  std::vector<Bitset> rows(sys.ground_size(), Bitset(sys.size()));
  for (std::size_t i = 0; i < sys.size(); ++i)
    sys.block(i).for_each([&](std::size_t p) { rows[p].set(i); });
  return rows;
}

/// 0-based element e when a ∩ b = {e}.
std::optional<std::size_t> single_intersection(const Bitset &a, const Bitset &b) {
  std::optional<std::size_t> found;
  for (std::size_t w = 0; w < a.word_count(); ++w) {
    Bitset::Word x = a.word(w) & b.word(w);
    if (x == 0)
      continue;
    if (found || (x & (x - 1)) != 0)
      return std::nullopt;
    found = w * Bitset::bits_per_word + static_cast<std::size_t>(std::countr_zero(x));
  }
  return found;
}

} // namespace

Verdict<ElementPair> is_separating(const SetSystem &sys) {
  // {a,b} is split exactly when a and b lie in different sets of blocks.
  std::vector<Bitset> rows = incidence(sys);
  std::unordered_map<Bitset, std::size_t> first_with;
  std::optional<ElementPair> least;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    auto [it, inserted] = first_with.emplace(rows[p], p);
    if (!inserted) {
      ElementPair cand{it->second + 1, p + 1};
      if (!least || cand < *least)
        least = cand;
    }
  }
  return {!least.has_value(), least};
}

Verdict<ElementPair> is_completely_separating(const SetSystem &sys) {
  std::vector<Bitset> rows = incidence(sys);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (rows[a].is_subset_of(rows[b]) || rows[b].is_subset_of(rows[a]))
        return {false, ElementPair{a + 1, b + 1}};
  return {true, std::nullopt};
}

WitnessMap witness_map(const SetSystem &sys) {
  WitnessMap map;
  map.pairs.resize(sys.ground_size());
  const auto &blocks = sys.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (auto e = blocks[i].single())
      map.pairs[*e].emplace_back(i, i);
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (auto e = single_intersection(blocks[i], blocks[j]))
        map.pairs[*e].emplace_back(i, j);
  }
  return map;
}

HcspVerdict is_hcsp(const SetSystem &sys, bool full) {
  HcspVerdict v;
  std::size_t s = sys.ground_size();
  if (full) {
    WitnessMap map = witness_map(sys);
    for (std::size_t a = 1; a <= s; ++a)
      if (!map.witnessed(a)) {
        v.unwitnessed = a;
        break;
      }
    v.holds = !v.unwitnessed;
    v.witnesses = std::move(map);
    return v;
  }

  Bitset covered(s);
  std::size_t remaining = s;
  auto mark = [&](std::size_t e) {
    if (!covered.test(e)) {
      covered.set(e);
      --remaining;
    }
  };
  const auto &blocks = sys.blocks();
  for (std::size_t i = 0; i < blocks.size() && remaining > 0; ++i) {
    if (auto e = blocks[i].single())
      mark(*e);
    for (std::size_t j = i + 1; j < blocks.size() && remaining > 0; ++j)
      if (auto e = single_intersection(blocks[i], blocks[j]))
        mark(*e);
  }
  v.holds = remaining == 0;
  if (!v.holds)
    v.unwitnessed = covered.complemented().first().value() + 1;
  return v;
}

InclusionVerdict is_inclusion_minimal_hcsp(const SetSystem &sys) {
  WitnessMap map = witness_map(sys);
  for (const auto &list : map.pairs)
    if (list.empty())
      return {false, std::nullopt};
  for (std::size_t i = 0; i < sys.size(); ++i) {
    bool removable = true;
    for (const auto &list : map.pairs) {
      bool survives = false;
      for (const auto &[x, y] : list)
        if (x != i && y != i) {
          survives = true;
          break;
        }
      if (!survives) {
        removable = false;
        break;
      }
    }
    if (removable)
      return {false, i};
  }
  return {true, std::nullopt};
}

bool is_size_minimal(const SetSystem &sys) {
  return sys.size() == min_size(sys.ground_size()) && is_hcsp(sys).holds;
}

SystemClassification classify(const SetSystem &sys) {
  SystemClassification c;
  auto sep = is_separating(sys);
  auto csep = is_completely_separating(sys);
  auto h = is_hcsp(sys, true);
  c.separating = sep.holds;
  c.completely_separating = csep.holds;
  c.hcsp = h.holds;
  c.witnesses = std::move(*h.witnesses);
  c.inclusion_minimal_hcsp = is_inclusion_minimal_hcsp(sys).holds;
  c.size_minimal = c.hcsp && sys.size() == min_size(sys.ground_size());
  if (sep.counterexample)
    c.failing_certificate = *sep.counterexample;
  else if (csep.counterexample)
    c.failing_certificate = *csep.counterexample;
  else if (h.unwitnessed)
    c.failing_certificate = *h.unwitnessed;
  return c;
}

ExtremalReport check_extremal_triangular(const SetSystem &sys) {
  std::size_t s = sys.ground_size();
  auto k = is_triangular(s);
  if (!k || *k < 3)
    throw PreconditionError("check_extremal_triangular: s = " + std::to_string(s) +
                            " is not alpha(k) for any k >= 3");
  if (sys.size() != *k + 1)
    throw PreconditionError("check_extremal_triangular: |blocks| = " +
                            std::to_string(sys.size()) + ", expected k+1 = " +
                            std::to_string(*k + 1));
  ExtremalReport r;
  r.k = *k;

  WitnessMap map = witness_map(sys);
  r.unique_witness_pairs = true;
  for (const auto &list : map.pairs)
    if (list.size() != 1)
      r.unique_witness_pairs = false;

  const auto &blocks = sys.blocks();
  r.pairwise_intersections_one = true;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (intersection_count(blocks[i], blocks[j]) != 1)
        r.pairwise_intersections_one = false;

  r.block_size_k = true;
  Bitset all(s);
  Bitset common = Bitset(s).complemented();
  for (const auto &b : blocks) {
    if (b.count() != *k)
      r.block_size_k = false;
    all |= b;
    common &= b;
  }
  r.union_is_ground = all.count() == s;
  r.intersection_empty = common.none();
  return r;
}

} // namespace hcsp
