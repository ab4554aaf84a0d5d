#include "hcsp/search.hpp"

#include "hcsp/error.hpp"
#include "hcsp/numerics.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <set>
#include <string>
#include <thread>

// Exhaustive search over families of non-empty subsets of {1..s}, s small.
//
// Candidate blocks never include the empty set: ∅ ∩ B = ∅ for every B, so
// ∅ cannot appear in a witness pair and dropping it from an HCSP family
// leaves the family HCSP. Every minimum-size HCSP family is therefore free
// of ∅ and nothing is lost by excluding it.
//
// Pruning: with j blocks chosen and r = m - j still to pick, each new block
// can witness an element through a pair with one of the j chosen blocks
// (j*r pairs), a pair among the new blocks (C(r,2) pairs), or by being a
// singleton itself (r cases). A witness pair certifies one element, so if
// more than j*r + C(r,2) + r elements are still unwitnessed the branch
// cannot succeed.

namespace hcsp {

namespace {

using Mask = std::uint64_t;

// 2^s candidate masks are materialised; keep that bounded whatever the budget says.
constexpr std::size_t kHardGroundLimit = 20;

void check_ground(std::size_t s, const SearchBudget &budget, const char *what) {
  if (s == 0)
    throw InvalidArgument(std::string(what) + ": s must be >= 1");
  if (s > budget.max_ground_size)
    throw BudgetExceeded(std::string(what) + ": s = " + std::to_string(s) +
                         " exceeds max ground size " + std::to_string(budget.max_ground_size));
  if (s > kHardGroundLimit)
    throw BudgetExceeded(std::string(what) + ": s = " + std::to_string(s) +
                         " exceeds the hard limit " + std::to_string(kHardGroundLimit));
}

[[noreturn]] void over_budget(std::uint64_t limit) {
  throw BudgetExceeded("search examined more than " + std::to_string(limit) + " candidates");
}

bool is_single(Mask x) { return x != 0 && (x & (x - 1)) == 0; }

/// Depth-first scan of m-combinations of the candidate masks, in lexicographic order.
class CombinationScan {
public:
  CombinationScan(std::size_t s, std::size_t m, std::uint64_t limit)
      : s_(s), m_(m), full_((Mask{1} << s) - 1), limit_(limit), chosen_(m) {
    for (Mask c = 1; c <= full_; ++c)
      cand_.push_back(c);
  }

  std::size_t candidate_count() const { return cand_.size(); }
  std::uint64_t nodes() const { return nodes_; }

  /// Visits every HCSP leaf whose first block index lies in [first_lo, first_hi).
  /// The visitor returns false to stop the scan.
  template <class Visit> bool run(std::size_t first_lo, std::size_t first_hi, Visit &&visit) {
    return descend(0, first_lo, first_hi, 0, visit);
  }

  const std::vector<Mask> &chosen() const { return chosen_; }

private:
  template <class Visit>
  bool descend(std::size_t j, std::size_t lo, std::size_t hi, Mask witnessed, Visit &visit) {
    if (j == m_)
      return witnessed == full_ ? visit(chosen_) : true;
    std::size_t r = m_ - j;
    std::size_t missing = s_ - static_cast<std::size_t>(std::popcount(witnessed));
    if (missing > j * r + r * (r - 1) / 2 + r)
      return true;
    std::size_t end = std::min(hi, cand_.size() - (r - 1));
    for (std::size_t idx = lo; idx < end; ++idx) {
      if (++nodes_ > limit_)
        over_budget(limit_);
      Mask c = cand_[idx];
      Mask w = witnessed;
      if (is_single(c))
        w |= c;
      for (std::size_t i = 0; i < j; ++i) {
        Mask x = c & chosen_[i];
        if (is_single(x))
          w |= x;
      }
      chosen_[j] = c;
      if (!descend(j + 1, idx + 1, cand_.size(), w, visit))
        return false;
    }
    return true;
  }

  std::size_t s_;
  std::size_t m_;
  Mask full_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> cand_;
  std::vector<Mask> chosen_;
};

SetSystem from_masks(std::size_t s, const std::vector<Mask> &masks) {
  std::vector<Bitset> blocks;
  blocks.reserve(masks.size());
  for (Mask m : masks) {
    Bitset b(s);
    for (std::size_t i = 0; i < s; ++i)
      if ((m >> i) & 1U)
        b.set(i);
    blocks.push_back(std::move(b));
  }
  return SetSystem::from_bitsets(s, std::move(blocks));
}

} // namespace

SetSystem CanonicalForm::to_system() const { return from_masks(s, blocks); }

std::size_t min_hcsp_size_oracle(std::size_t s, const SearchBudget &budget) {
  check_ground(s, budget, "min_hcsp_size_oracle");
  std::uint64_t spent = 0;
  // P_1(S) is always HCSP, so the loop ends by m = s.
  for (std::size_t m = 1; m <= s; ++m) {
    CombinationScan scan(s, m, budget.max_candidates - spent);
    bool found = !scan.run(0, scan.candidate_count(), [](const std::vector<Mask> &) { return false; });
    spent += scan.nodes();
    if (found)
      return m;
  }
  throw Error("min_hcsp_size_oracle: no HCSP system found (unreachable)");
}

std::vector<CanonicalForm> enumerate_min_classes(std::size_t s, const SearchBudget &budget) {
  check_ground(s, budget, "enumerate_min_classes");
  std::size_t m = min_size(s);
  std::size_t n_cand = (std::size_t{1} << s) - 1;
  if (m > n_cand)
    return {};
  std::size_t first_end = n_cand - m + 1; // valid first-block indices
  std::size_t chunks = std::clamp<std::size_t>(budget.parallel_chunks, 1, first_end);

  SearchBudget canon_budget = budget;
  canon_budget.max_ground_size = std::max(budget.max_ground_size, s);

  struct Worker {
    std::set<CanonicalForm> classes;
    std::uint64_t nodes = 0;
    std::exception_ptr error;
  };
  std::vector<Worker> workers(chunks);

  auto work = [&](std::size_t w) {
    try {
      std::size_t lo = first_end * w / chunks;
      std::size_t hi = first_end * (w + 1) / chunks;
      CombinationScan scan(s, m, budget.max_candidates);
      scan.run(lo, hi, [&](const std::vector<Mask> &chosen) {
        workers[w].classes.insert(canonical_form(from_masks(s, chosen), canon_budget));
        return true;
      });
      workers[w].nodes = scan.nodes();
    } catch (...) {
      workers[w].error = std::current_exception();
    }
  };

  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::size_t w = 0; w < chunks; ++w)
      threads.emplace_back(work, w);
    for (auto &t : threads)
      t.join();
  }

  std::set<CanonicalForm> merged;
  std::uint64_t total = 0;
  for (auto &w : workers) {
    if (w.error)
      std::rethrow_exception(w.error);
    total += w.nodes;
    merged.insert(w.classes.begin(), w.classes.end());
  }
  // The node total is independent of the chunking, so this check is too.
  if (total > budget.max_candidates)
    over_budget(budget.max_candidates);
  return {merged.begin(), merged.end()};
}

} // namespace hcsp
