#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "softtop/error.hpp"
#include "softtop/soft_set.hpp"

namespace softtop {

/// Which closure axioms a family is checked against.
///   kCS         elementary union / elementary intersection, admissible members only
///   kShabirNaz  pointwise union / intersection, any soft sets
///   kHazra      every per-parameter fiber family is a crisp topology
enum class Flavor { kCS, kShabirNaz, kHazra };

std::string_view flavor_name(Flavor f);

struct Violation {
  enum class Kind {
    kMissingNull,
    kMissingAbsolute,
    kMixedMember,
    kUnionNotClosed,
    kIntersectionNotClosed,
    kFiberNotTopology,
  };
  Kind kind;
  std::vector<SoftSet> members;
  std::optional<SoftSet> missing;
  // kFiberNotTopology only
  std::optional<std::size_t> parameter;
  std::optional<Fiber> missing_fiber;
};

std::string_view violation_kind_name(Violation::Kind k);

struct ValidationReport {
  bool valid = true;
  Flavor flavor = Flavor::kCS;
  std::vector<Violation> violations;  // first `max_violations`, canonical order
  std::size_t total_violations = 0;
};

inline constexpr std::size_t kDefaultMaxViolations = 10;

ValidationReport validate(const ContextPtr& ctx, std::span<const SoftSet> family,
                          Flavor flavor,
                          std::size_t max_violations = kDefaultMaxViolations);

/// A finite family of soft sets that passed validation under `flavor`.
class SoftTopology {
 public:
  /// Throws Error(kInvalidTopology) when validation fails.
  static SoftTopology make(ContextPtr ctx, std::vector<SoftSet> opens,
                           Flavor flavor = Flavor::kCS);

  const ContextPtr& context() const noexcept { return ctx_; }
  Flavor flavor() const noexcept { return flavor_; }
  const std::vector<SoftSet>& opens() const noexcept { return opens_; }
  std::size_t size() const noexcept { return opens_.size(); }
  bool is_open(const SoftSet& s) const;

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    return a.opens_ == b.opens_ && a.flavor_ == b.flavor_;
  }

 private:
  SoftTopology(ContextPtr ctx, std::vector<SoftSet> opens, Flavor flavor)
      : ctx_(std::move(ctx)), opens_(std::move(opens)), flavor_(flavor) {}

  ContextPtr ctx_;
  std::vector<SoftSet> opens_;  // sorted, duplicate-free
  Flavor flavor_;
};

/// {Φ~, X~}.
SoftTopology indiscrete(const ContextPtr& ctx);

bool is_crisp_topology(std::span<const Fiber> family, Fiber full);

struct FiberFamily {
  std::size_t parameter;
  std::vector<Fiber> subsets;  // sorted, duplicate-free
  bool is_topology;
};

std::vector<FiberFamily> fiber_topologies(const ContextPtr& ctx,
                                          std::span<const SoftSet> family);
std::vector<FiberFamily> fiber_topologies(const SoftTopology& t);

/// All admissible soft sets whose every fiber is open in the matching crisp
/// topology. Throws Error(kInvalidArgument) if some family is not a topology.
SoftTopology from_crisp(const ContextPtr& ctx,
                        std::span<const std::vector<Fiber>> per_parameter);

/// Member-wise intersection of two CS topologies on one context.
SoftTopology intersect(const SoftTopology& t1, const SoftTopology& t2);

// --- closed sets and closure (CS topologies) -------------------------------

bool is_soft_closed(const SoftTopology& t, const SoftSet& f);
std::vector<SoftSet> closed_family(const SoftTopology& t);
/// Elementary intersection of all closed supersets of `f`.
SoftSet closure(const SoftTopology& t, const SoftSet& f);

// --- interior ----------------------------------------------------------------

/// Soft elements x of `f` lying in some open G with G ⊆ f.
SoftElementSet interior_elements(const SoftTopology& t, const SoftSet& f);
/// Soft set generated by interior_elements.
SoftSet interior(const SoftTopology& t, const SoftSet& f);

// --- limiting elements ------------------------------------------------------

/// x is limiting for f iff for every open G and parameter a with x(a) in G(a),
/// f(a) meets G(a) \ {x(a)}.
bool is_limiting_element(const SoftTopology& t, const SoftSet& f,
                         const SoftElement& x);
SoftElementSet limiting_elements(const SoftTopology& t, const SoftSet& f);
SoftSet derived_set(const SoftTopology& t, const SoftSet& f);
SoftSet weak_closure(const SoftTopology& t, const SoftSet& f);

// --- neighbourhoods ---------------------------------------------------------

/// f is a neighbourhood of x: f PROPER and x ∈ G ⊆ f for some open G.
bool is_nbd(const SoftTopology& t, const SoftSet& f, const SoftElement& x);
/// Materializes every neighbourhood of x; exponential in |X|·|A|.
std::vector<SoftSet> neighborhoods(const SoftTopology& t, const SoftElement& x);

/// Assignment soft element -> family of admissible soft sets, total on SE(X~).
class NbdOperator {
 public:
  /// Throws Error(kInvalidArgument) if the assignment is not total or holds a
  /// MIXED set or a foreign context.
  static NbdOperator make(ContextPtr ctx,
                          std::map<SoftElement, std::vector<SoftSet>> assignment);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<SoftSet>& at(const SoftElement& x) const;
  bool assigns(const SoftElement& x, const SoftSet& f) const;
  const std::map<SoftElement, std::vector<SoftSet>>& assignment() const noexcept {
    return assignment_;
  }

 private:
  NbdOperator(ContextPtr ctx, std::map<SoftElement, std::vector<SoftSet>> a)
      : ctx_(std::move(ctx)), assignment_(std::move(a)) {}

  ContextPtr ctx_;
  std::map<SoftElement, std::vector<SoftSet>> assignment_;  // families sorted
};

/// x -> neighborhoods(t, x).
NbdOperator neighborhood_operator(const SoftTopology& t);

struct NbdAxiomCheck {
  bool holds = true;
  std::optional<SoftElement> element;  // first failing element
  std::vector<SoftSet> sets;           // sets involved in the failure
};

struct NbdAxiomReport {
  std::array<NbdAxiomCheck, 5> axioms;  // N1..N5
  bool all_hold() const;
};

NbdAxiomReport check_nbd_operator(const NbdOperator& op);

/// Throws Error(kInvalidArgument) unless `t` was validated as CS.
void require_cs(const SoftTopology& t, const char* what);

}  // namespace softtop
