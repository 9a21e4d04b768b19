#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "softtop/topology.hpp"

namespace softtop {

/// x and y choose different points at every parameter.
bool totally_distinct(const SoftElement& x, const SoftElement& y);

/// The soft set whose only soft element is x.
SoftSet singleton(const SoftElement& x);

enum class SeparationLevel { kT0, kT1, kT2 };

std::string_view separation_level_name(SeparationLevel level);

struct SeparationCheck {
  bool holds = true;
  /// First totally distinct pair (canonical order, x < y) that is not separated.
  std::optional<std::pair<SoftElement, SoftElement>> witness;
};

/// Quantifies over totally distinct pairs (x, y).
///   T0: some open F has x(a) ∈ F(a), y(a) ∉ F(a) at every parameter a, or the
///       same with x and y exchanged.
///   T1: both directions, possibly by different opens.
///   T2: opens F ∋ x, G ∋ y whose pointwise intersection is Φ~.
SeparationCheck separation_axiom(const SoftTopology& t, SeparationLevel level);

struct RegularityCheck {
  bool holds = true;
  /// First closed K (canonical order) and soft element x avoiding K at every
  /// parameter that cannot be separated.
  std::optional<SoftSet> closed;
  std::optional<SoftElement> element;
};

/// For closed K and x with x(a) ∉ K(a) for every a there are opens G ⊇ K and
/// H ∋ x with G ⋒ H = Φ~.
RegularityCheck is_regular(const SoftTopology& t);
bool is_T3(const SoftTopology& t);

struct NormalityCheck {
  bool holds = true;
  /// First pair of closed sets with pointwise intersection Φ~ that cannot be
  /// separated.
  std::optional<std::pair<SoftSet, SoftSet>> witness;
};

/// For closed F, G with pointwise F ∩ G = Φ~ there are opens U ⊇ F, V ⊇ G
/// with U ⋒ V = Φ~.
NormalityCheck is_normal(const SoftTopology& t);
bool is_T4(const SoftTopology& t);

enum class InterpolationKind {
  kRegularity,  // x ∈ U open  ⇒  ∃ open V: x ∈ V ⊆ cl V ⊆ U
  kNormality,   // K ⊆ U, K closed, U open  ⇒  ∃ open V: K ⊆ V ⊆ cl V ⊆ U
};

std::string_view interpolation_kind_name(InterpolationKind k);

struct InterpolationCheck {
  bool holds = true;
  std::optional<SoftElement> element;  // kRegularity witness
  std::optional<SoftSet> closed;       // kNormality witness
  std::optional<SoftSet> open;         // the open U with no interpolating V
};

InterpolationCheck interpolation_condition(const SoftTopology& t, InterpolationKind kind);

}  // namespace softtop
