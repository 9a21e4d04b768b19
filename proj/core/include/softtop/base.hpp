#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

/// Verdict of a base-style check. On failure `element`/`set` name the first
/// offending soft element and soft set in canonical order; which of them is
/// set depends on `failure`.
struct BaseCheck {
  enum class Failure {
    kNone,
    kNotSubfamily,  // `set` is a candidate member that is not open
    kMissingNull,   // the null soft set is not a candidate member
    kNotRefined,    // `element` lies in open `set` but no member fits between
    kNotCovered,    // open `set` is not an elementary union of members
  };
  bool holds = true;
  Failure failure = Failure::kNone;
  std::optional<SoftElement> element;
  std::optional<SoftSet> set;
};

std::string_view base_failure_name(BaseCheck::Failure f);

/// b ⊆ τ, Φ~ ∈ b, and every soft element of every open F lies in some member
/// G of b with G ⊆ F.
BaseCheck is_open_base(const SoftTopology& t, std::span<const SoftSet> b);

/// Every open set is the elementary union of the members of b it contains.
BaseCheck covers_by_unions(const SoftTopology& t, std::span<const SoftSet> b);

/// The three necessary conditions a base satisfies, each with its own witness.
struct BaseAxiomsReport {
  bool has_null = true;
  bool covers_absolute = true;
  bool refines_intersections = true;
  /// First pair (F1, F2) and soft element x in F1 ⋒ F2 with no member F3 such
  /// that x ∈ F3 ⊆ F1 ⋒ F2.
  std::optional<SoftSet> first;
  std::optional<SoftSet> second;
  std::optional<SoftElement> element;

  bool all_hold() const { return has_null && covers_absolute && refines_intersections; }
};

BaseAxiomsReport base_axioms(const ContextPtr& ctx, std::span<const SoftSet> b);

/// Elementary intersections of every finite subfamily of `s` (the empty one
/// giving X~), together with Φ~, in canonical order.
std::vector<SoftSet> intersection_closure(const ContextPtr& ctx,
                                          std::span<const SoftSet> s);

/// s ⊆ τ and intersection_closure(s) is an open base of τ.
bool is_subbase(const SoftTopology& t, std::span<const SoftSet> s);

/// A family that passed is_subbase for a specific topology.
class Subbase {
 public:
  /// Throws Error(kInvalidSubbase) unless is_subbase(t, members).
  static Subbase make(const SoftTopology& t, std::vector<SoftSet> members);

  const SoftTopology& topology() const noexcept { return topology_; }
  const std::vector<SoftSet>& members() const noexcept { return members_; }

 private:
  Subbase(SoftTopology t, std::vector<SoftSet> members)
      : topology_(std::move(t)), members_(std::move(members)) {}

  SoftTopology topology_;
  std::vector<SoftSet> members_;  // sorted, duplicate-free
};

}  // namespace softtop
