#include "dtspec/oracle.hpp"

#include "dtspec/encoding.hpp"

namespace dtspec {

OracleReport cross_check(const SpecSet &set, const Hierarchy &h, int depth) {
  OracleReport report;
  const std::size_t n = set.size();

  for (SpecId a = 0; a < n; ++a)
    for (SpecId b = 0; b < n; ++b) {
      bool unifies = static_cast<bool>(
          unify(encode_concrete(set, h, a), encode_abstract(set, h, b)));
      if (unifies != h.leq(a, b))
        report.encoding_mismatches.emplace_back(a, b);
    }

  if (depth <= 0)
    return report;
  auto classes = enumerate_classes(set, depth);
  for (SpecId a = 0; a < n; ++a)
    for (SpecId b = 0; b < n; ++b) {
      if (a == b)
        continue;
      const TermClass *sep = nullptr;
      for (const auto &c : classes)
        if (c.profile[a] && !c.profile[b] &&
            (!sep || c.witness->depth() < sep->witness->depth()))
          sep = &c;
      if (h.leq(a, b) && sep)
        report.inclusion_violations.push_back({a, b, sep->witness});
      else if (!h.leq(a, b) && !sep)
        report.missing_witnesses.emplace_back(a, b);
    }
  return report;
}

} // namespace dtspec
