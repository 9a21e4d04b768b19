#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/error.hpp"
#include "softtop/map.hpp"
#include "softtop/topology.hpp"

namespace softtop {

/// Names that always denote the null and the absolute soft set.
inline constexpr std::string_view kNullName = "PHI";
inline constexpr std::string_view kAbsoluteName = "FULL";

/// In-memory form of the JSON instance format. Sections keep file order;
/// fibers and function tables are canonical (see parse_instance).
struct InstanceFile {
  struct NamedSoftSet {
    std::string name;
    std::vector<std::vector<std::string>> fibers;  // one per parameter, in parameter order
    friend bool operator==(const NamedSoftSet&, const NamedSoftSet&) = default;
  };
  struct NamedFamily {
    std::string name;
    std::vector<std::string> members;
    friend bool operator==(const NamedFamily&, const NamedFamily&) = default;
  };
  struct NamedFunction {
    std::string name;
    /// tables[a][p] = image label of universe[p] under the map at parameter a.
    std::vector<std::vector<std::string>> tables;
    friend bool operator==(const NamedFunction&, const NamedFunction&) = default;
  };

  std::vector<std::string> universe;
  std::vector<std::string> parameters;
  std::optional<std::vector<std::string>> target_universe;
  std::vector<NamedSoftSet> soft_sets;
  std::vector<NamedFamily> topologies;
  std::vector<NamedFunction> functions;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

enum class IssueCode {
  kSyntax,
  kSchema,
  kReservedName,
  kUnknownLabel,
  kUnknownName,
  kDuplicateName,
  kDuplicateLabel,
  kNonTotalFunction,
  kUnknownParameter,
  kMissingFiber,
};

std::string_view issue_code_name(IssueCode code);

struct InstanceIssue {
  IssueCode code;
  std::string message;
  std::size_t line = 0;  // 1-based; 0 when unknown
};

class InstanceError : public Error {
 public:
  explicit InstanceError(std::vector<InstanceIssue> issues);
  const std::vector<InstanceIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<InstanceIssue> issues_;
};

/// Parses and validates UTF-8 JSON text. Throws InstanceError listing every
/// problem found. Fiber label lists are sorted into universe order, then any
/// target-universe-only labels in target order.
InstanceFile parse_instance(std::string_view text);
/// Reads a file and parses it; I/O failures surface as a kSyntax issue.
InstanceFile load_instance(const std::string& path);

/// Canonical JSON text (two-space indent, trailing newline). parse_instance
/// of the result compares equal to `instance` when `instance` is canonical.
std::string emit_instance(const InstanceFile& instance);

/// Resolves names of an InstanceFile into library values.
class ResolvedInstance {
 public:
  /// Throws InstanceError for label or name problems not caught by parsing.
  explicit ResolvedInstance(InstanceFile file);

  const InstanceFile& file() const noexcept { return file_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  /// Context over target_universe, or context() when absent.
  const ContextPtr& target_context() const noexcept { return target_ctx_; }

  bool has_set(std::string_view name) const;
  bool has_family(std::string_view name) const;
  bool has_function(std::string_view name) const;

  /// Named soft set over context(); PHI and FULL always resolve. Throws
  /// InstanceError(kUnknownName / kUnknownLabel).
  SoftSet set(std::string_view name) const { return set_in(name, ctx_); }
  SoftSet set_in(std::string_view name, const ContextPtr& ctx) const;
  std::vector<SoftSet> family(std::string_view name) const { return family_in(name, ctx_); }
  std::vector<SoftSet> family_in(std::string_view name, const ContextPtr& ctx) const;
  /// Throws Error(kInvalidTopology) when the family fails validation.
  SoftTopology topology(std::string_view name, Flavor flavor = Flavor::kCS) const;
  SoftTopology topology_in(std::string_view name, const ContextPtr& ctx) const;
  SoftFunction function(std::string_view name) const;

  /// Name of a matching named set (PHI, FULL first, then file order) or the
  /// ⟨{..}|{..}⟩ notation.
  std::string display(const SoftSet& s) const;

 private:
  InstanceFile file_;
  ContextPtr ctx_;
  ContextPtr target_ctx_;
};

/// ⟨{x}|{y,z}⟩ notation, fibers in parameter order, points in universe order.
std::string notation(const SoftSet& s);
/// (x,y) notation.
std::string notation(const SoftElement& x);

}  // namespace softtop
