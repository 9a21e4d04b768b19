#pragma once

// Helpers shared by the unit tests: contexts with default labels and
// conversions from the reference model back into library values.

#include <cstddef>
#include <vector>

#include "oracle.hpp"
#include "softtop/context.hpp"
#include "softtop/miner.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace testing_support {

inline softtop::ContextPtr context(std::size_t n, std::size_t m) {
  return softtop::Context::make(softtop::default_point_labels(n),
                                softtop::default_parameter_labels(m));
}

inline oracle::Space space(std::size_t n, std::size_t m) {
  return {static_cast<int>(n), static_cast<int>(m)};
}

inline softtop::SoftSet to_lib(const softtop::ContextPtr& ctx, const oracle::Set& f) {
  std::vector<softtop::Fiber> fibers;
  for (const auto& fiber : f) {
    softtop::Fiber bits = 0;
    for (int p : fiber) bits |= softtop::Fiber{1} << p;
    fibers.push_back(bits);
  }
  return softtop::SoftSet(ctx, fibers);
}

inline std::vector<softtop::SoftSet> to_lib(const softtop::ContextPtr& ctx,
                                            const oracle::Family& fam) {
  std::vector<softtop::SoftSet> out;
  for (const auto& f : fam) out.push_back(to_lib(ctx, f));
  return out;
}

inline softtop::EnumerationCaps roomy() {
  softtop::EnumerationCaps caps;
  caps.max_domain = 512;
  caps.max_family = 64;
  return caps;
}

/// Every family over `domain` that contains Φ~ and X~ and passes `valid`,
/// found by trying every subfamily.
template <typename Valid>
std::vector<oracle::Family> brute_force_topologies(const oracle::Space& s,
                                                   const oracle::Family& domain, Valid valid) {
  oracle::Family inner;
  for (const auto& f : domain) {
    if (f != oracle::null_set(s) && f != oracle::full_set(s)) inner.push_back(f);
  }
  std::vector<oracle::Family> out;
  oracle::for_each_subfamily(inner, [&](const oracle::Family& sub) {
    oracle::Family fam = sub;
    fam.push_back(oracle::null_set(s));
    fam.push_back(oracle::full_set(s));
    if (valid(fam)) out.push_back(oracle::sorted(fam));
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oracle::Family> cs_topologies(const oracle::Space& s) {
  return brute_force_topologies(s, oracle::all_sets(s, true), [&](const oracle::Family& fam) {
    return oracle::cs_topology(s, fam);
  });
}

}  // namespace testing_support
