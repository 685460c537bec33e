#include "afscope/semantics.hpp"

#include <algorithm>
#include <string>

#include "afscope/error.hpp"
#include "afscope/grounded.hpp"

namespace afscope {
namespace {

// Label slot during search; kUnset marks a not-yet-branched argument.
enum Slot : std::uint8_t { kIn, kOut, kUndec, kUnset };

class CompleteSearch {
 public:
  CompleteSearch(const Framework& framework, bool allow_undec, std::size_t cap)
      : fw_(framework), allow_undec_(allow_undec), cap_(cap) {
    auto base = grounded_labelling(framework);
    slots_.resize(framework.size());
    for (ArgIndex x = 0; x < framework.size(); ++x) {
      switch (base[x]) {
        case Label::kIn:
          slots_[x] = kIn;
          break;
        case Label::kOut:
          slots_[x] = kOut;
          break;
        case Label::kUndec:
          slots_[x] = kUnset;
          open_.push_back(x);
          break;
      }
    }
  }

  void run() { branch(0); }

  std::vector<Labelling>& found() { return found_; }
  bool truncated() const { return truncated_; }

 private:
  // Partial legality of an assigned argument given its attackers so far.
  bool consistent(ArgIndex x) const {
    std::size_t in = 0, undec = 0, unset = 0;
    for (AttackIndex a : fw_.attackers_of(x)) {
      switch (slots_[fw_.attacks()[a].source]) {
        case kIn:
          ++in;
          break;
        case kUndec:
          ++undec;
          break;
        case kUnset:
          ++unset;
          break;
        default:
          break;
      }
    }
    switch (slots_[x]) {
      case kIn:
        return in == 0 && undec == 0;
      case kOut:
        return in > 0 || unset > 0;
      case kUndec:
        return in == 0 && (undec > 0 || unset > 0);
      default:
        return true;
    }
  }

  bool consistent_after(ArgIndex x) const {
    if (!consistent(x)) return false;
    for (AttackIndex a : fw_.attacks_from(x)) {
      ArgIndex z = fw_.attacks()[a].target;
      if (slots_[z] != kUnset && !consistent(z)) return false;
    }
    return true;
  }

  void branch(std::size_t depth) {
    if (truncated_) return;
    if (depth == open_.size()) {
      if (found_.size() >= cap_) {
        truncated_ = true;
        return;
      }
      std::vector<Label> labels(slots_.size());
      for (std::size_t i = 0; i < slots_.size(); ++i) labels[i] = static_cast<Label>(slots_[i]);
      found_.emplace_back(std::move(labels));
      return;
    }
    ArgIndex x = open_[depth];
    for (Slot choice : {kIn, kOut, kUndec}) {
      if (choice == kUndec && !allow_undec_) break;
      slots_[x] = choice;
      if (consistent_after(x)) branch(depth + 1);
      if (truncated_) break;
    }
    slots_[x] = kUnset;
  }

  const Framework& fw_;
  bool allow_undec_;
  std::size_t cap_;
  std::vector<std::uint8_t> slots_;
  std::vector<ArgIndex> open_;
  std::vector<Labelling> found_;
  bool truncated_ = false;
};

bool in_subset(const Labelling& a, const Labelling& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == Label::kIn && b[i] != Label::kIn) return false;
  return true;
}

}  // namespace

std::string_view to_string(Semantics semantics) noexcept {
  switch (semantics) {
    case Semantics::kGrounded:
      return "grounded";
    case Semantics::kComplete:
      return "complete";
    case Semantics::kStable:
      return "stable";
    case Semantics::kPreferred:
      return "preferred";
  }
  return "grounded";
}

std::optional<Semantics> semantics_from_string(std::string_view text) noexcept {
  if (text == "grounded") return Semantics::kGrounded;
  if (text == "complete") return Semantics::kComplete;
  if (text == "stable") return Semantics::kStable;
  if (text == "preferred") return Semantics::kPreferred;
  return std::nullopt;
}

bool in_set_less(const Labelling& a, const Labelling& b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    bool ai = a[i] == Label::kIn;
    bool bi = b[i] == Label::kIn;
    if (ai != bi) return ai;
  }
  return a.labels() < b.labels();
}

SolutionSet enumerate(const Framework& framework, Semantics semantics,
                      EnumerationLimits limits) {
  SolutionSet result;
  result.semantics = semantics;
  if (semantics == Semantics::kGrounded) {
    result.solutions.push_back(grounded_labelling(framework));
    return result;
  }

  CompleteSearch search(framework, semantics != Semantics::kStable, limits.max_solutions);
  search.run();
  result.truncated = search.truncated();
  auto& found = search.found();

  if (semantics == Semantics::kPreferred) {
    std::vector<Labelling> maximal;
    for (std::size_t i = 0; i < found.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < found.size() && !dominated; ++j)
        dominated = i != j && in_subset(found[i], found[j]) && !in_subset(found[j], found[i]);
      if (!dominated) maximal.push_back(found[i]);
    }
    found = std::move(maximal);
  }
  std::sort(found.begin(), found.end(), in_set_less);
  result.solutions = std::move(found);
  return result;
}

Labelling solution(const Framework& framework, Semantics semantics, std::size_t index,
                   EnumerationLimits limits) {
  auto set = enumerate(framework, semantics, limits);
  if (index >= set.solutions.size())
    throw OutOfRange("solution index " + std::to_string(index) + " out of range (" +
                     std::string(to_string(semantics)) + " has " +
                     std::to_string(set.solutions.size()) + " solutions)");
  return std::move(set.solutions[index]);
}

}  // namespace afscope
