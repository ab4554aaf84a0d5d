#include "hcsp/set_system.hpp"

#include "hcsp/error.hpp"

#include <algorithm>
#include <string>

namespace hcsp {

namespace {

void require_ground(std::size_t s, const char *what) {
  if (s == 0)
    throw InvalidArgument(std::string(what) + ": ground set size must be >= 1");
}

} // namespace

Bitset to_bitset(std::size_t s, const ElementList &elements) {
  Bitset b(s);
  for (std::size_t e : elements) {
    if (e < 1 || e > s)
      throw InvalidArgument("element " + std::to_string(e) + " outside 1.." + std::to_string(s));
    b.set(e - 1);
  }
  return b;
}

ElementList to_elements(const Bitset &b) {
  ElementList out;
  b.for_each([&](std::size_t i) { out.push_back(i + 1); });
  return out;
}

SetSystem SetSystem::make(std::size_t s, const std::vector<ElementList> &blocks) {
  require_ground(s, "make");
  std::vector<Bitset> bits;
  bits.reserve(blocks.size());
  for (const auto &b : blocks)
    bits.push_back(to_bitset(s, b));
  return from_bitsets(s, std::move(bits));
}

SetSystem SetSystem::from_bitsets(std::size_t s, std::vector<Bitset> blocks) {
  require_ground(s, "make");
  for (const auto &b : blocks)
    if (b.width() != s)
      throw InvalidArgument("make: block width does not match ground size");
  std::sort(blocks.begin(), blocks.end());
  auto last = std::unique(blocks.begin(), blocks.end());
  SetSystem sys;
  sys.s_ = s;
  sys.collapsed_ = last != blocks.end();
  blocks.erase(last, blocks.end());
  sys.blocks_ = std::move(blocks);
  return sys;
}

std::vector<ElementList> SetSystem::block_lists() const {
  std::vector<ElementList> out;
  out.reserve(blocks_.size());
  for (const auto &b : blocks_)
    out.push_back(to_elements(b));
  return out;
}

bool SetSystem::contains(const Bitset &b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b);
}

SetSystem restrict_to(const SetSystem &sys, const ElementList &r) {
  if (r.empty())
    throw InvalidArgument("restrict: R must be non-empty");
  Bitset mask = to_bitset(sys.ground_size(), r);
  std::vector<std::size_t> kept = mask.elements();
  std::vector<Bitset> traces;
  traces.reserve(sys.size());
  for (const auto &b : sys.blocks()) {
    Bitset t(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (b.test(kept[j]))
        t.set(j);
    traces.push_back(std::move(t));
  }
  return SetSystem::from_bitsets(kept.size(), std::move(traces));
}

SetSystem complement_system(const SetSystem &sys) {
  std::vector<Bitset> out;
  out.reserve(sys.size());
  for (const auto &b : sys.blocks())
    out.push_back(b.complemented());
  return SetSystem::from_bitsets(sys.ground_size(), std::move(out));
}

SetSystem disjoint_union(std::span<const SetSystem> parts) {
  if (parts.empty())
    throw InvalidArgument("disjoint_union: part list must be non-empty");
  std::size_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto &b : parts[i].blocks())
      if (b.none())
        throw InvalidArgument("disjoint_union: part " + std::to_string(i + 1) +
                              " contains the empty block");
    total += parts[i].ground_size();
  }
  std::vector<Bitset> out;
  std::size_t offset = 0;
  for (const auto &p : parts) {
    for (const auto &b : p.blocks()) {
      Bitset shifted(total);
      b.for_each([&](std::size_t e) { shifted.set(offset + e); });
      out.push_back(std::move(shifted));
    }
    offset += p.ground_size();
  }
  return SetSystem::from_bitsets(total, std::move(out));
}

SetSystem product(std::span<const SetSystem> parts) {
  if (parts.empty())
    throw InvalidArgument("product: part list must be non-empty");
  std::size_t total = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty())
      throw InvalidArgument("product: part " + std::to_string(i + 1) + " has no blocks");
    for (const auto &b : parts[i].blocks())
      if (b.none())
        throw InvalidArgument("product: part " + std::to_string(i + 1) +
                              " contains the empty block");
    total *= parts[i].ground_size();
  }

  // stride[i] = prod_{j>i} s_j
  std::vector<std::size_t> stride(parts.size(), 1);
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    stride[i] = stride[i + 1] * parts[i + 1].ground_size();

  std::vector<std::size_t> choice(parts.size(), 0);
  std::vector<Bitset> out;
  for (;;) {
    // Flattened codes of every tuple in the chosen product of blocks.
    std::vector<std::size_t> codes{0};
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<std::size_t> next;
      parts[i].block(choice[i]).for_each([&](std::size_t e) {
        for (std::size_t c : codes)
          next.push_back(c + e * stride[i]);
      });
      codes = std::move(next);
    }
    Bitset b(total);
    for (std::size_t c : codes)
      b.set(c);
    out.push_back(std::move(b));

    std::size_t i = parts.size();
    while (i-- > 0) {
      if (++choice[i] < parts[i].size())
        break;
      choice[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1))
      break;
  }
  return SetSystem::from_bitsets(total, std::move(out));
}

SetSystem all_k_subsets(std::size_t s, std::size_t k) {
  require_ground(s, "p_k");
  if (k > s)
    throw InvalidArgument("p_k: k must lie in 0.." + std::to_string(s));
  std::vector<Bitset> out;
  std::vector<bool> pick(s, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Bitset b(s);
    for (std::size_t i = 0; i < s; ++i)
      if (pick[i])
        b.set(i);
    out.push_back(std::move(b));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return SetSystem::from_bitsets(s, std::move(out));
}

SetSystem relabel(const SetSystem &sys, const std::vector<std::size_t> &perm) {
  std::size_t s = sys.ground_size();
  if (perm.size() != s)
    throw InvalidArgument("relabel: permutation length does not match ground size");
  std::vector<bool> seen(s, false);
  for (std::size_t v : perm) {
    if (v < 1 || v > s || seen[v - 1])
      throw InvalidArgument("relabel: not a permutation of 1..s");
    seen[v - 1] = true;
  }
  std::vector<Bitset> out;
  out.reserve(sys.size());
  for (const auto &b : sys.blocks()) {
    Bitset img(s);
    b.for_each([&](std::size_t e) { img.set(perm[e] - 1); });
    out.push_back(std::move(img));
  }
  return SetSystem::from_bitsets(s, std::move(out));
}

} // namespace hcsp
