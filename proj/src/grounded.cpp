#include "afscope/grounded.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "afscope/error.hpp"

namespace afscope {
namespace {

bool is_active(const std::vector<bool>& active, AttackIndex a) {
  return active.empty() || active[a];
}

// Relaxation shared by lengths() and the grounded entry points; assumes
// `labelling` is grounded for the active attacks.
LengthMap relax_lengths(const Framework& framework, const Labelling& labelling,
                        const std::vector<bool>& active) {
  const auto& attacks = framework.attacks();
  const auto n = static_cast<ArgIndex>(framework.size());
  LengthMap len(n, Length::infinite());

  auto candidate = [&](ArgIndex x) -> Length {
    if (labelling[x] == Label::kOut) {
      Length best = Length::infinite();
      for (AttackIndex a : framework.attackers_of(x)) {
        if (!is_active(active, a)) continue;
        ArgIndex y = attacks[a].source;
        if (labelling[y] == Label::kIn && len[y].is_finite())
          best = std::min(best, Length(len[y].value() + 1));
      }
      return best;
    }
    std::uint32_t worst = 0;
    bool any = false;
    for (AttackIndex a : framework.attackers_of(x)) {
      if (!is_active(active, a)) continue;
      Length ly = len[attacks[a].source];
      if (!ly.is_finite()) return Length::infinite();
      worst = std::max(worst, ly.value());
      any = true;
    }
    return any ? Length(worst + 1) : Length(0);
  };

  std::deque<ArgIndex> queue;
  std::vector<bool> queued(n, false);
  for (ArgIndex x = 0; x < n; ++x) {
    if (labelling[x] == Label::kUndec) continue;
    queue.push_back(x);
    queued[x] = true;
  }
  while (!queue.empty()) {
    ArgIndex x = queue.front();
    queue.pop_front();
    queued[x] = false;
    Length c = candidate(x);
    if (!(c < len[x])) continue;
    len[x] = c;
    for (AttackIndex a : framework.attacks_from(x)) {
      if (!is_active(active, a)) continue;
      ArgIndex z = attacks[a].target;
      if (labelling[z] != Label::kUndec && !queued[z]) {
        queued[z] = true;
        queue.push_back(z);
      }
    }
  }
  return len;
}

GroundedResult assemble(const Framework& framework, Labelling labelling,
                        const std::vector<bool>& active) {
  GroundedResult result;
  result.lengths = relax_lengths(framework, labelling, active);
  result.undec_set = labelling.undec_set();
  result.labelling = std::move(labelling);
  return result;
}

}  // namespace

Labelling grounded_labelling(const Framework& framework, const std::vector<bool>& active) {
  const auto& attacks = framework.attacks();
  const auto n = static_cast<ArgIndex>(framework.size());
  Labelling labels(n, Label::kUndec);
  // Number of active attackers not yet known to be OUT.
  std::vector<std::uint32_t> pending(n, 0);
  for (AttackIndex a = 0; a < attacks.size(); ++a)
    if (is_active(active, a)) ++pending[attacks[a].target];

  std::vector<ArgIndex> work;
  work.reserve(n);
  for (ArgIndex x = 0; x < n; ++x) {
    if (pending[x] == 0) {
      labels[x] = Label::kIn;
      work.push_back(x);
    }
  }
  // Worklist closure of the characteristic operator; each argument is
  // labelled at most once.
  for (std::size_t head = 0; head < work.size(); ++head) {
    ArgIndex x = work[head];
    for (AttackIndex a : framework.attacks_from(x)) {
      if (!is_active(active, a)) continue;
      ArgIndex y = attacks[a].target;
      if (labels[x] == Label::kIn) {
        if (labels[y] == Label::kUndec) {
          labels[y] = Label::kOut;
          work.push_back(y);
        }
      } else if (--pending[y] == 0 && labels[y] == Label::kUndec) {
        labels[y] = Label::kIn;
        work.push_back(y);
      }
    }
  }
  return labels;
}

GroundedResult grounded(const Framework& framework) {
  return assemble(framework, grounded_labelling(framework), {});
}

LengthMap lengths(const Framework& framework, const Labelling& labelling) {
  if (labelling.size() != framework.size())
    throw InvalidInput("labelling covers " + std::to_string(labelling.size()) +
                       " arguments, framework has " + std::to_string(framework.size()));
  if (labelling != grounded_labelling(framework))
    throw InvalidInput("labelling is not the grounded labelling of the framework");
  return relax_lengths(framework, labelling, {});
}

std::vector<bool> active_mask(const Framework& framework, std::span<const AttackIndex> suspended) {
  std::vector<bool> active(framework.attacks().size(), true);
  for (AttackIndex a : suspended) {
    if (a >= active.size())
      throw InvalidInput("attack #" + std::to_string(a) + " is not in the framework");
    active[a] = false;
  }
  return active;
}

GroundedResult grounded_after_suspension(const Framework& framework,
                                         std::span<const AttackIndex> suspended) {
  auto active = active_mask(framework, suspended);
  return assemble(framework, grounded_labelling(framework, active), active);
}

}  // namespace afscope
