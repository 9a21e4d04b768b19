#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/base.hpp"
#include "softtop/topology.hpp"

namespace softtop {

/// A family {f_a : X -> Y} indexed by the shared parameter set, acting on soft
/// elements by f(x)(a) = f_a(x(a)).
class SoftFunction {
 public:
  /// `tables[a][p]` is the target point index of source point p under f_a.
  /// Throws Error(kInvalidArgument) when the parameter labels differ, a table
  /// has the wrong length, or a value leaves the target universe.
  static SoftFunction make(ContextPtr source, ContextPtr target,
                           std::vector<std::vector<std::size_t>> tables);
  static SoftFunction identity(const ContextPtr& ctx);
  static SoftFunction constant(const ContextPtr& source, const ContextPtr& target,
                               std::size_t point);

  const ContextPtr& source() const noexcept { return source_; }
  const ContextPtr& target() const noexcept { return target_; }
  std::size_t at(std::size_t param, std::size_t point) const {
    return tables_.at(param).at(point);
  }
  const std::vector<std::vector<std::size_t>>& tables() const noexcept { return tables_; }

  /// The per-parameter inverse family; empty unless every f_a is bijective.
  std::optional<SoftFunction> inverse() const;

  friend bool operator==(const SoftFunction& a, const SoftFunction& b) {
    return same_context(a.source_, b.source_) && same_context(a.target_, b.target_) &&
           a.tables_ == b.tables_;
  }

 private:
  SoftFunction(ContextPtr s, ContextPtr t, std::vector<std::vector<std::size_t>> tables)
      : source_(std::move(s)), target_(std::move(t)), tables_(std::move(tables)) {}

  ContextPtr source_;
  ContextPtr target_;
  std::vector<std::vector<std::size_t>> tables_;
};

SoftElement apply(const SoftFunction& f, const SoftElement& x);

/// Fiberwise forward image. MIXED input is rejected.
SoftSet image(const SoftFunction& f, const SoftSet& s);

/// Soft set generated by the soft elements mapped into `s`: the fiberwise
/// preimage when every fiber preimage is non-empty, Φ~ otherwise. MIXED input
/// is rejected.
SoftSet preimage(const SoftFunction& f, const SoftSet& s);

struct MapClassification {
  bool injective = false;   // on soft elements, checked literally
  bool surjective = false;  // image of the absolute soft set is absolute
  bool bijective = false;
  bool components_injective = false;   // every f_a injective
  bool components_surjective = false;  // every f_a surjective
  /// Two distinct soft elements with the same image, when not injective.
  std::optional<std::pair<SoftElement, SoftElement>> collision;
};

MapClassification classify_map(const SoftFunction& f);

/// For every open V containing f(x0) some open U contains x0 with f[U] ⊆ V.
bool continuous_at(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt, const SoftElement& x0);

enum class ContinuityCriterion {
  kPointwise,       // continuous at every soft element
  kPreimageOpen,    // preimage of every open is open
  kSubbase,         // preimage of every sub-base member is open
  kClosedPreimage,  // preimage of every closed set is closed
};

std::string_view criterion_name(ContinuityCriterion c);
std::optional<ContinuityCriterion> parse_criterion(std::string_view name);

/// kSubbase uses the whole target topology as its own sub-base.
bool is_continuous(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt, ContinuityCriterion criterion);
/// Sub-base criterion; throws Error(kInvalidSubbase) if `s` was validated for a
/// topology other than `tgt`.
bool is_continuous(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt, const Subbase& s);

bool is_open_map(const SoftFunction& f, const SoftTopology& src, const SoftTopology& tgt);
bool is_closed_map(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt);

struct HomeomorphismCheck {
  enum class Reason { kHomeomorphism, kNotBijective, kNotContinuous, kInverseNotContinuous };
  bool holds = false;
  Reason reason = Reason::kNotBijective;
};

std::string_view homeomorphism_reason_name(HomeomorphismCheck::Reason r);

HomeomorphismCheck is_homeomorphism(const SoftFunction& f, const SoftTopology& src,
                                    const SoftTopology& tgt);

}  // namespace softtop
