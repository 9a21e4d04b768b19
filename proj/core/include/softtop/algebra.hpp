#pragma once

#include <functional>
#include <optional>
#include <span>

#include "softtop/soft_set.hpp"

namespace softtop {

// Elementary soft-set algebra. Operations documented as admissible-only throw
// DomainError when handed a MIXED soft set, and ContextMismatch when operands
// come from different contexts.

SoftSetClass classify(const SoftSet& s) noexcept;

/// SE(F,A): every choice function through the fibers. NULL gives the empty
/// collection; MIXED is rejected.
SoftElementSet soft_elements(const SoftSet& s);

/// SS(B): fiber at each parameter is the set of choices made there.
SoftSet generate(const SoftElementSet& b);

bool is_soft_subset(const SoftSet& f, const SoftSet& g);

enum class PointwiseOp { kUnion, kIntersection, kComplement };

/// Fiberwise set operation; may produce MIXED results. COMPLEMENT ignores `g`.
SoftSet pointwise(PointwiseOp op, const SoftSet& f,
                  const std::optional<SoftSet>& g = std::nullopt);
SoftSet pointwise_union(const SoftSet& f, const SoftSet& g);
SoftSet pointwise_intersection(const SoftSet& f, const SoftSet& g);
SoftSet pointwise_complement(const SoftSet& f);

/// Elementary union of a family; the empty family gives the null soft set.
SoftSet elementary_union(const ContextPtr& ctx, std::span<const SoftSet> fs);
SoftSet elementary_union(const SoftSet& f, const SoftSet& g);

/// Elementary intersection: the soft set generated by the common soft
/// elements. Equals the pointwise intersection when that is PROPER and the
/// null soft set otherwise. The empty family gives the absolute soft set.
SoftSet elementary_intersection(const ContextPtr& ctx, std::span<const SoftSet> fs);
SoftSet elementary_intersection(const SoftSet& f, const SoftSet& g);

/// Soft set generated by the soft elements of the pointwise complement.
SoftSet elementary_complement(const SoftSet& f);

/// Throws DomainError if `s` is MIXED. `what` names the caller in the message.
void require_admissible(const SoftSet& s, const char* what);

/// Visits every member of S(X~) (null first, then PROPER sets) in canonical
/// order. The caller is responsible for bounding the context size.
void for_each_admissible(const ContextPtr& ctx,
                         const std::function<void(const SoftSet&)>& fn);

/// Visits every soft set over the context, MIXED included, in canonical order.
void for_each_soft_set(const ContextPtr& ctx,
                       const std::function<void(const SoftSet&)>& fn);

}  // namespace softtop
