#include "softtop/separation.hpp"

#include <algorithm>
#include <vector>

#include "softtop/algebra.hpp"

namespace softtop {

namespace {

// x(a) ∈ F(a) and y(a) ∉ F(a) at every parameter.
bool separates(const SoftSet& f, const SoftElement& x, const SoftElement& y) {
  for (std::size_t a = 0; a < f.parameters(); ++a) {
    if ((f.fiber(a) >> x.choice(a) & 1U) == 0) return false;
    if ((f.fiber(a) >> y.choice(a) & 1U) != 0) return false;
  }
  return true;
}

bool pointwise_disjoint(const SoftSet& f, const SoftSet& g) {
  return pointwise_intersection(f, g).is_null();
}

bool pair_separated(const SoftTopology& t, SeparationLevel level, const SoftElement& x,
                    const SoftElement& y) {
  const auto& opens = t.opens();
  auto some = [&](auto pred) { return std::any_of(opens.begin(), opens.end(), pred); };
  switch (level) {
    case SeparationLevel::kT0:
      return some([&](const SoftSet& f) { return separates(f, x, y) || separates(f, y, x); });
    case SeparationLevel::kT1:
      return some([&](const SoftSet& f) { return separates(f, x, y); }) &&
             some([&](const SoftSet& g) { return separates(g, y, x); });
    case SeparationLevel::kT2:
      for (const auto& f : opens) {
        if (!f.contains(x)) continue;
        for (const auto& g : opens) {
          if (g.contains(y) && pointwise_disjoint(f, g)) return true;
        }
      }
      return false;
  }
  return false;
}

bool avoids_everywhere(const SoftElement& x, const SoftSet& k) {
  for (std::size_t a = 0; a < k.parameters(); ++a) {
    if (k.fiber(a) >> x.choice(a) & 1U) return false;
  }
  return true;
}

std::vector<SoftElement> all_elements(const ContextPtr& ctx) {
  std::vector<SoftElement> out;
  for_each_soft_element(ctx, [&](const SoftElement& x) { out.push_back(x); });
  return out;
}

// Some open V with lower ⊆ V (or x ∈ V), cl V ⊆ U.
template <typename Inside>
bool interpolates(const SoftTopology& t, const SoftSet& u, Inside inside) {
  return std::any_of(t.opens().begin(), t.opens().end(), [&](const SoftSet& v) {
    return inside(v) && is_soft_subset(v, u) && is_soft_subset(closure(t, v), u);
  });
}

}  // namespace

bool totally_distinct(const SoftElement& x, const SoftElement& y) {
  require_same_context(x.context(), y.context());
  for (std::size_t a = 0; a < x.parameters(); ++a) {
    if (x.choice(a) == y.choice(a)) return false;
  }
  return true;
}

SoftSet singleton(const SoftElement& x) {
  std::vector<Fiber> fibers(x.parameters());
  for (std::size_t a = 0; a < fibers.size(); ++a) fibers[a] = Fiber{1} << x.choice(a);
  return SoftSet(x.context(), fibers);
}

std::string_view separation_level_name(SeparationLevel level) {
  switch (level) {
    case SeparationLevel::kT0: return "T0";
    case SeparationLevel::kT1: return "T1";
    case SeparationLevel::kT2: return "T2";
  }
  return "?";
}

SeparationCheck separation_axiom(const SoftTopology& t, SeparationLevel level) {
  require_cs(t, "separation_axiom");
  const auto elements = all_elements(t.context());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const auto& x = elements[i];
      const auto& y = elements[j];
      if (!totally_distinct(x, y)) continue;
      if (!pair_separated(t, level, x, y)) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

RegularityCheck is_regular(const SoftTopology& t) {
  require_cs(t, "is_regular");
  const auto elements = all_elements(t.context());
  const auto& opens = t.opens();
  for (const auto& k : closed_family(t)) {
    for (const auto& x : elements) {
      if (!avoids_everywhere(x, k)) continue;
      bool separated = false;
      for (const auto& g : opens) {
        if (!is_soft_subset(k, g)) continue;
        separated = std::any_of(opens.begin(), opens.end(), [&](const SoftSet& h) {
          return h.contains(x) && elementary_intersection(g, h).is_null();
        });
        if (separated) break;
      }
      if (!separated) return {false, k, x};
    }
  }
  return {};
}

bool is_T3(const SoftTopology& t) {
  return is_regular(t).holds && separation_axiom(t, SeparationLevel::kT1).holds;
}

NormalityCheck is_normal(const SoftTopology& t) {
  require_cs(t, "is_normal");
  const auto closed = closed_family(t);
  const auto& opens = t.opens();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::size_t j = i; j < closed.size(); ++j) {
      const auto& f = closed[i];
      const auto& g = closed[j];
      if (!pointwise_disjoint(f, g)) continue;
      bool separated = false;
      for (const auto& u : opens) {
        if (!is_soft_subset(f, u)) continue;
        separated = std::any_of(opens.begin(), opens.end(), [&](const SoftSet& v) {
          return is_soft_subset(g, v) && elementary_intersection(u, v).is_null();
        });
        if (separated) break;
      }
      if (!separated) return {false, std::make_pair(f, g)};
    }
  }
  return {};
}

bool is_T4(const SoftTopology& t) {
  return is_normal(t).holds && separation_axiom(t, SeparationLevel::kT1).holds;
}

std::string_view interpolation_kind_name(InterpolationKind k) {
  switch (k) {
    case InterpolationKind::kRegularity: return "regularity";
    case InterpolationKind::kNormality: return "normality";
  }
  return "?";
}

InterpolationCheck interpolation_condition(const SoftTopology& t, InterpolationKind kind) {
  require_cs(t, "interpolation_condition");
  InterpolationCheck check;
  if (kind == InterpolationKind::kRegularity) {
    for (const auto& x : all_elements(t.context())) {
      for (const auto& u : t.opens()) {
        if (!u.contains(x)) continue;
        if (!interpolates(t, u, [&](const SoftSet& v) { return v.contains(x); })) {
          check.holds = false;
          check.element = x;
          check.open = u;
          return check;
        }
      }
    }
    return check;
  }
  for (const auto& k : closed_family(t)) {
    for (const auto& u : t.opens()) {
      if (!is_soft_subset(k, u)) continue;
      if (!interpolates(t, u, [&](const SoftSet& v) { return is_soft_subset(k, v); })) {
        check.holds = false;
        check.closed = k;
        check.open = u;
        return check;
      }
    }
  }
  return check;
}

}  // namespace softtop
