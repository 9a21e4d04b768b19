#include "softtop/base.hpp"

#include <algorithm>
#include <set>

#include "softtop/algebra.hpp"

namespace softtop {

namespace {

std::vector<SoftSet> sorted_family(const ContextPtr& ctx, std::span<const SoftSet> b) {
  std::vector<SoftSet> out(b.begin(), b.end());
  for (const auto& s : out) require_same_context(ctx, s.context());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BaseCheck failure(BaseCheck::Failure kind, std::optional<SoftElement> x,
                  std::optional<SoftSet> s) {
  return BaseCheck{false, kind, std::move(x), std::move(s)};
}

// Shared precondition: every member open.
std::optional<BaseCheck> check_subfamily(const SoftTopology& t,
                                         const std::vector<SoftSet>& b) {
  for (const auto& g : b) {
    if (!t.is_open(g)) return failure(BaseCheck::Failure::kNotSubfamily, {}, g);
  }
  return std::nullopt;
}

}  // namespace

std::string_view base_failure_name(BaseCheck::Failure f) {
  switch (f) {
    case BaseCheck::Failure::kNone: return "none";
    case BaseCheck::Failure::kNotSubfamily: return "not_subfamily";
    case BaseCheck::Failure::kMissingNull: return "missing_null";
    case BaseCheck::Failure::kNotRefined: return "not_refined";
    case BaseCheck::Failure::kNotCovered: return "not_covered";
  }
  return "?";
}

BaseCheck is_open_base(const SoftTopology& t, std::span<const SoftSet> candidate) {
  require_cs(t, "is_open_base");
  const auto b = sorted_family(t.context(), candidate);
  if (auto bad = check_subfamily(t, b)) return *bad;
  if (!std::binary_search(b.begin(), b.end(), SoftSet::null(t.context()))) {
    return failure(BaseCheck::Failure::kMissingNull, {}, SoftSet::null(t.context()));
  }
  std::optional<BaseCheck> result;
  for_each_soft_element(t.context(), [&](const SoftElement& x) {
    if (result) return;
    for (const auto& f : t.opens()) {
      if (!f.contains(x)) continue;
      const bool refined = std::any_of(b.begin(), b.end(), [&](const SoftSet& g) {
        return g.contains(x) && is_soft_subset(g, f);
      });
      if (!refined) {
        result = failure(BaseCheck::Failure::kNotRefined, x, f);
        return;
      }
    }
  });
  return result.value_or(BaseCheck{});
}

BaseCheck covers_by_unions(const SoftTopology& t, std::span<const SoftSet> candidate) {
  require_cs(t, "covers_by_unions");
  const auto b = sorted_family(t.context(), candidate);
  if (auto bad = check_subfamily(t, b)) return *bad;
  // The largest union of members inside F is the union of all members inside
  // F; F is a union of members iff that one equals F.
  for (const auto& f : t.opens()) {
    std::vector<SoftSet> inside;
    for (const auto& g : b) {
      if (is_soft_subset(g, f)) inside.push_back(g);
    }
    if (elementary_union(t.context(), inside) != f) {
      return failure(BaseCheck::Failure::kNotCovered, {}, f);
    }
  }
  return BaseCheck{};
}

BaseAxiomsReport base_axioms(const ContextPtr& ctx, std::span<const SoftSet> candidate) {
  const auto b = sorted_family(ctx, candidate);
  for (const auto& g : b) require_admissible(g, "base_axioms");

  BaseAxiomsReport report;
  report.has_null = std::binary_search(b.begin(), b.end(), SoftSet::null(ctx));
  report.covers_absolute = elementary_union(ctx, b).is_absolute();

  for (std::size_t i = 0; i < b.size() && report.refines_intersections; ++i) {
    for (std::size_t j = i + 1; j < b.size() && report.refines_intersections; ++j) {
      const SoftSet meet = elementary_intersection(b[i], b[j]);
      for (const auto& x : soft_elements(meet)) {
        const bool refined = std::any_of(b.begin(), b.end(), [&](const SoftSet& g) {
          return g.contains(x) && is_soft_subset(g, meet);
        });
        if (!refined) {
          report.refines_intersections = false;
          report.first = b[i];
          report.second = b[j];
          report.element = x;
          break;
        }
      }
    }
  }
  return report;
}

std::vector<SoftSet> intersection_closure(const ContextPtr& ctx,
                                          std::span<const SoftSet> s) {
  // ⋒ of a finite family equals the binary fold, so a pairwise fixpoint
  // reaches every finite intersection.
  std::set<SoftSet> closure{SoftSet::null(ctx), SoftSet::absolute(ctx)};
  for (const auto& g : s) {
    require_same_context(ctx, g.context());
    require_admissible(g, "intersection_closure");
    closure.insert(g);
  }
  std::vector<SoftSet> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<SoftSet> next;
    const std::vector<SoftSet> current(closure.begin(), closure.end());
    for (const auto& a : frontier) {
      for (const auto& c : current) {
        SoftSet meet = elementary_intersection(a, c);
        if (closure.insert(meet).second) next.push_back(meet);
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

bool is_subbase(const SoftTopology& t, std::span<const SoftSet> s) {
  require_cs(t, "is_subbase");
  for (const auto& g : s) {
    require_same_context(t.context(), g.context());
    if (!t.is_open(g)) return false;
  }
  const auto family = intersection_closure(t.context(), s);
  return is_open_base(t, family).holds;
}

Subbase Subbase::make(const SoftTopology& t, std::vector<SoftSet> members) {
  if (!is_subbase(t, members)) {
    throw Error(ErrorCode::kInvalidSubbase, "family is not a sub-base of the topology");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subbase(t, std::move(members));
}

}  // namespace softtop
