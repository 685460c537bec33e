#include "afscope/explain.hpp"

#include <algorithm>
#include <string>

#include "afscope/error.hpp"

namespace afscope {
namespace {

// Enumerates k-subsets of {0..n-1} in lexicographic order.
class Combinations {
 public:
  Combinations(std::size_t n, std::size_t k) : n_(n), k_(k), pick_(k) {
    for (std::size_t i = 0; i < k; ++i) pick_[i] = i;
    done_ = k > n;
  }

  bool done() const { return done_; }
  const std::vector<std::size_t>& current() const { return pick_; }

  void next() {
    std::size_t i = k_;
    while (i > 0) {
      --i;
      if (pick_[i] < n_ - k_ + i) {
        ++pick_[i];
        for (std::size_t j = i + 1; j < k_; ++j) pick_[j] = pick_[j - 1] + 1;
        return;
      }
    }
    done_ = true;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::size_t> pick_;
  bool done_;
};

bool covers_found(const std::vector<std::vector<std::size_t>>& found,
                  const std::vector<char>& chosen) {
  for (const auto& set : found) {
    if (std::all_of(set.begin(), set.end(), [&](std::size_t p) { return chosen[p] != 0; }))
      return true;
  }
  return false;
}

}  // namespace

Overlay build_overlay(const GroundedResult& base, const Labelling& target) {
  if (target.size() != base.labelling.size())
    throw InvalidInput("target labelling does not match the base size");
  if (!target.is_total()) throw InvalidInput("target labelling is not 2-valued");
  for (ArgIndex x = 0; x < target.size(); ++x) {
    Label b = base.labelling[x];
    if (b != Label::kUndec && b != target[x])
      throw InvalidInput("target changes the grounded label of argument #" + std::to_string(x));
  }
  Overlay overlay{base, target, base.undec_set, target};
  return overlay;
}

std::string_view to_string(CandidateMode mode) noexcept {
  return mode == CandidateMode::kFailing ? "failing" : "all-undec";
}

std::optional<CandidateMode> candidate_mode_from_string(std::string_view text) noexcept {
  if (text == "failing") return CandidateMode::kFailing;
  if (text == "all-undec") return CandidateMode::kAllUndec;
  return std::nullopt;
}

std::vector<AttackIndex> candidate_attacks(const Framework& framework, const GroundedResult& base,
                                           const Labelling& target, CandidateMode mode) {
  std::vector<AttackIndex> out;
  const auto& attacks = framework.attacks();
  for (AttackIndex a = 0; a < attacks.size(); ++a) {
    auto [x, y] = attacks[a];
    if (base.labelling[x] != Label::kUndec || base.labelling[y] != Label::kUndec) continue;
    if (mode == CandidateMode::kFailing &&
        (target[x] != Label::kOut || target[y] != Label::kIn))
      continue;
    out.push_back(a);
  }
  return out;
}

CriticalSearch critical_attack_sets(const Framework& framework, const GroundedResult& base,
                                    const Labelling& target, const SearchBounds& bounds,
                                    CandidateMode mode, const CancelCheck& cancelled) {
  if (target.size() != framework.size() || base.labelling.size() != framework.size())
    throw InvalidInput("labelling does not match the framework size");
  if (!target.is_total() || !is_complete_labelling(framework, target))
    throw InvalidInput("target is not a stable labelling of the framework");
  if (base.labelling != grounded_labelling(framework))
    throw InvalidInput("base is not the grounded result of the framework");

  const auto candidates = candidate_attacks(framework, base, target, mode);
  const std::size_t n = candidates.size();
  const std::size_t top = std::min(bounds.max_cardinality, n);

  CriticalSearch out;
  std::vector<std::vector<std::size_t>> found;  // positions into `candidates`
  std::vector<char> chosen(n, 0);
  std::vector<bool> active(framework.attacks().size(), true);

  auto mark = [&](const std::vector<std::size_t>& pick, bool on) {
    for (std::size_t p : pick) {
      chosen[p] = on ? 1 : 0;
      active[candidates[p]] = !on;
    }
  };

  for (std::size_t k = 0; k <= top; ++k) {
    for (Combinations combo(n, k); !combo.done(); combo.next()) {
      const auto& pick = combo.current();
      mark(pick, true);
      bool skip = covers_found(found, chosen);
      bool hit = false;
      if (!skip) {
        if (out.tests >= bounds.max_tests) {
          out.truncated = true;
          return out;
        }
        if (cancelled && cancelled()) throw Cancelled();
        ++out.tests;
        hit = grounded_labelling(framework, active) == target;
      }
      mark(pick, false);
      if (!hit) continue;
      if (out.sets.size() >= bounds.max_results) {
        out.truncated = true;
        return out;
      }
      CriticalAttackSet set;
      for (std::size_t p : pick) set.edges.push_back(candidates[p]);
      set.resolution = grounded_after_suspension(framework, set.edges);
      out.sets.push_back(std::move(set));
      found.push_back(pick);
    }
  }

  // Larger subsets were never tried; the search is complete only if every
  // one of them already contains a found set.
  if (top < n) {
    std::size_t scanned = 0;
    for (Combinations combo(n, top + 1); !combo.done(); combo.next()) {
      if (++scanned > bounds.max_tests) {
        out.truncated = true;
        break;
      }
      mark(combo.current(), true);
      bool covered = covers_found(found, chosen);
      mark(combo.current(), false);
      if (!covered) {
        out.truncated = true;
        break;
      }
    }
  }
  return out;
}

Explanation explain(const Framework& framework, std::size_t index, const ExplainOptions& options,
                    const CancelCheck& cancelled) {
  auto target = solution(framework, options.semantics, index, options.limits);
  if (!target.is_total())
    throw InvalidInput("solution " + std::to_string(index) + " under " +
                       std::string(to_string(options.semantics)) +
                       " is not 2-valued; only stable solutions can be explained");
  auto base = grounded(framework);
  Explanation out;
  out.solution_index = index;
  out.overlay = build_overlay(base, target);
  auto search =
      critical_attack_sets(framework, base, target, options.bounds, options.candidates, cancelled);
  out.critical_sets = std::move(search.sets);
  out.truncated = search.truncated;
  return out;
}

WhatIf what_if(const Framework& framework, std::span<const AttackIndex> suspended) {
  WhatIf out;
  out.suspended.assign(suspended.begin(), suspended.end());
  std::sort(out.suspended.begin(), out.suspended.end());
  out.suspended.erase(std::unique(out.suspended.begin(), out.suspended.end()),
                      out.suspended.end());
  out.result = grounded_after_suspension(framework, out.suspended);
  out.classification =
      classify_edges(framework, out.result.labelling, out.result.lengths, out.suspended);
  return out;
}

std::optional<Overlay> what_if_overlay(const GroundedResult& base, const WhatIf& what_if) {
  const Labelling& after = what_if.result.labelling;
  if (after.size() != base.labelling.size())
    throw InvalidInput("what-if result does not match the base size");
  Overlay overlay{base, after, {}, after};
  for (ArgIndex x = 0; x < after.size(); ++x) {
    Label b = base.labelling[x];
    if (b == Label::kUndec) {
      if (after[x] != Label::kUndec) overlay.resolved.push_back(x);
    } else if (b != after[x]) {
      return std::nullopt;
    }
  }
  return overlay;
}

}  // namespace afscope
