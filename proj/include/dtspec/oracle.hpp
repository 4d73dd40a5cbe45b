#pragma once

// Cross-checks of the computed hierarchy against term semantics and the
// phantom encodings.

#include "dtspec/model.hpp"
#include "dtspec/terms.hpp"

#include <utility>
#include <vector>

namespace dtspec {

using SpecPair = std::pair<SpecId, SpecId>;

struct Separation {
  SpecId sub;
  SpecId super;
  TermPtr witness; // member of `sub`, not of `super`
};

struct OracleReport {
  // a <= b, yet some term of depth <= d is in a and not in b.
  std::vector<Separation> inclusion_violations;
  // a and b distinct with a not <= b, but no term of depth <= d separates them.
  std::vector<SpecPair> missing_witnesses;
  // unify(conc a, abst b) disagrees with a <= b.
  std::vector<SpecPair> encoding_mismatches;

  bool ok() const {
    return inclusion_violations.empty() && encoding_mismatches.empty();
  }
};

// Uses the membership-profile classes of enumerate_classes, so the cost is
// independent of how many terms exist at `depth`.
OracleReport cross_check(const SpecSet &set, const Hierarchy &h, int depth);

} // namespace dtspec
