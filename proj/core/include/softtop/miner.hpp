#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "softtop/instance.hpp"
#include "softtop/topology.hpp"

namespace softtop {

/// Bounds on exhaustive enumeration. `max_domain` limits the number of soft
/// sets a search draws family members from; `max_family` limits family size.
struct EnumerationCaps {
  std::size_t max_domain = 64;
  std::size_t max_family = 8;
  std::size_t max_functions = std::size_t{1} << 20;

  /// Defaults overridden by SOFTTOP_CAP="<domain>" or "<domain>,<family>".
  /// Throws Error(kInvalidArgument) on a malformed value.
  static EnumerationCaps from_env();
};

/// Members of S(X~) in canonical order: Φ~ first, then ∏(2^n − 1) PROPER sets.
/// Throws CapExceeded when the PROPER count exceeds caps.max_domain.
std::vector<SoftSet> enumerate_soft_sets(const ContextPtr& ctx, const EnumerationCaps& caps);
std::vector<SoftSet> enumerate_soft_sets(const ContextPtr& ctx);

/// Every soft set, MIXED included, in canonical order. Throws CapExceeded when
/// the count exceeds caps.max_domain.
std::vector<SoftSet> enumerate_all_soft_sets(const ContextPtr& ctx,
                                             const EnumerationCaps& caps);

/// Visits every family of size ≤ max_size that contains Φ~ and X~ and passes
/// validate(flavor), ordered by size and then lexicographically by members.
/// Members are drawn from S(X~) for kCS and from all soft sets otherwise.
/// `fn` returns false to stop early. Throws CapExceeded past the caps.
void for_each_topology(const ContextPtr& ctx, Flavor flavor, std::size_t max_size,
                       const EnumerationCaps& caps,
                       const std::function<bool(const std::vector<SoftSet>&)>& fn);

std::vector<SoftTopology> enumerate_topologies(const ContextPtr& ctx, Flavor flavor,
                                               std::size_t max_size,
                                               const EnumerationCaps& caps);

/// Registry of searchable properties.
///   family   predicates judge a candidate family τ;
///   base     predicates judge a CS topology τ with a subfamily B ∋ Φ~;
///   map      predicates judge f : (X~, τ_src) -> (X~, τ_tgt).
/// Topological family predicates are false on families that are not CS-valid.
enum class Predicate {
  kCsValid,
  kSnValid,
  kHazraValid,
  kRegular,
  kNormal,
  kT0,
  kT1,
  kT2,
  kCond68,
  kCond611,
  kClosedUnionClosed,
  kClosureUnionEquality,
  kDistributivity,
  kIsBase,
  kBase43Condition,
  kBase45Conditions,
  kContPointwise,
  kContPreimageOpen,
  kContClosedPreimage,
};

enum class PredicateKind { kFamily, kBase, kMap };

std::string_view predicate_name(Predicate p);
std::optional<Predicate> parse_predicate(std::string_view name);
PredicateKind predicate_kind(Predicate p);
/// All registry entries in declaration order.
const std::vector<Predicate>& all_predicates();

/// Evaluates a family predicate. Throws Error(kInvalidArgument) for base or
/// map predicates.
bool evaluate_family_predicate(Predicate p, const ContextPtr& ctx,
                               const std::vector<SoftSet>& family);

struct MinerGoal {
  Predicate positive = Predicate::kCsValid;
  Predicate negative = Predicate::kSnValid;
  std::size_t n = 2;
  std::size_t m = 2;
  /// Defaults to caps.max_family.
  std::optional<std::size_t> max_family_size;
  /// Skip families that are not lexicographically least under relabelings of X.
  bool isomorph_rejection = false;
  /// Worker count for family and base goals; 0 picks the hardware count.
  std::size_t threads = 0;
};

struct SearchResult {
  bool found = false;
  /// Complete instance holding the witness: soft sets S1..Sk, and
  ///   family goals: topology "tau";
  ///   base goals:   topologies "tau" and "B";
  ///   map goals:    topologies "tau_src", "tau_tgt" and function "f".
  std::optional<InstanceFile> witness;
};

/// First candidate in canonical order satisfying positive ∧ ¬negative. A
/// result with found == false is an exhaustion claim within the bounds.
/// Throws Error(kInvalidArgument) for malformed goals and CapExceeded past caps.
SearchResult search(const MinerGoal& goal, const EnumerationCaps& caps);
SearchResult search(const MinerGoal& goal);

}  // namespace softtop
