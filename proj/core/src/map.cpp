#include "softtop/map.hpp"

#include <algorithm>
#include <map>

#include "softtop/algebra.hpp"

namespace softtop {

namespace {

void require_contexts(const SoftFunction& f, const SoftTopology& src,
                      const SoftTopology& tgt) {
  require_cs(src, "soft function source");
  require_cs(tgt, "soft function target");
  require_same_context(f.source(), src.context());
  require_same_context(f.target(), tgt.context());
}

bool preimages_open(const SoftFunction& f, const SoftTopology& src,
                    const std::vector<SoftSet>& sets) {
  return std::all_of(sets.begin(), sets.end(),
                     [&](const SoftSet& v) { return src.is_open(preimage(f, v)); });
}

}  // namespace

SoftFunction SoftFunction::make(ContextPtr source, ContextPtr target,
                                std::vector<std::vector<std::size_t>> tables) {
  if (!source || !target) {
    throw Error(ErrorCode::kInvalidArgument, "soft function without context");
  }
  if (source->parameter_labels() != target->parameter_labels()) {
    throw Error(ErrorCode::kInvalidArgument,
                "source and target of a soft function must share the parameter set");
  }
  if (tables.size() != source->parameters()) {
    throw Error(ErrorCode::kInvalidArgument, "soft function needs one table per parameter");
  }
  for (const auto& table : tables) {
    if (table.size() != source->points()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "soft function table must be total on the source universe");
    }
    for (std::size_t v : table) {
      if (v >= target->points()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "soft function value leaves the target universe");
      }
    }
  }
  return SoftFunction(std::move(source), std::move(target), std::move(tables));
}

SoftFunction SoftFunction::identity(const ContextPtr& ctx) {
  std::vector<std::size_t> id(ctx->points());
  for (std::size_t p = 0; p < id.size(); ++p) id[p] = p;
  return make(ctx, ctx, std::vector<std::vector<std::size_t>>(ctx->parameters(), id));
}

SoftFunction SoftFunction::constant(const ContextPtr& source, const ContextPtr& target,
                                    std::size_t point) {
  return make(source, target,
              std::vector<std::vector<std::size_t>>(
                  source->parameters(), std::vector<std::size_t>(source->points(), point)));
}

std::optional<SoftFunction> SoftFunction::inverse() const {
  if (source_->points() != target_->points()) return std::nullopt;
  std::vector<std::vector<std::size_t>> inv(tables_.size(),
                                            std::vector<std::size_t>(target_->points()));
  for (std::size_t a = 0; a < tables_.size(); ++a) {
    std::vector<bool> hit(target_->points(), false);
    for (std::size_t p = 0; p < tables_[a].size(); ++p) {
      const std::size_t v = tables_[a][p];
      if (hit[v]) return std::nullopt;
      hit[v] = true;
      inv[a][v] = p;
    }
  }
  return SoftFunction(target_, source_, std::move(inv));
}

SoftElement apply(const SoftFunction& f, const SoftElement& x) {
  require_same_context(f.source(), x.context());
  std::vector<std::size_t> out(x.parameters());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = f.at(a, x.choice(a));
  return SoftElement(f.target(), out);
}

SoftSet image(const SoftFunction& f, const SoftSet& s) {
  require_same_context(f.source(), s.context());
  require_admissible(s, "image");
  std::vector<Fiber> fibers(s.parameters(), 0);
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    for (std::size_t p = 0; p < f.source()->points(); ++p) {
      if (s.fiber(a) >> p & 1U) fibers[a] |= Fiber{1} << f.at(a, p);
    }
  }
  return SoftSet(f.target(), fibers);
}

SoftSet preimage(const SoftFunction& f, const SoftSet& s) {
  require_same_context(f.target(), s.context());
  require_admissible(s, "preimage");
  std::vector<Fiber> fibers(s.parameters(), 0);
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    for (std::size_t p = 0; p < f.source()->points(); ++p) {
      if (s.fiber(a) >> f.at(a, p) & 1U) fibers[a] |= Fiber{1} << p;
    }
  }
  SoftSet pre(f.source(), fibers);
  return pre.is_proper() ? pre : SoftSet::null(f.source());
}

MapClassification classify_map(const SoftFunction& f) {
  MapClassification c;
  std::map<SoftElement, SoftElement> seen;
  c.injective = true;
  for_each_soft_element(f.source(), [&](const SoftElement& x) {
    if (!c.injective) return;
    SoftElement y = apply(f, x);
    auto [it, fresh] = seen.emplace(y, x);
    if (!fresh) {
      c.injective = false;
      c.collision = std::make_pair(it->second, x);
    }
  });
  c.surjective = image(f, SoftSet::absolute(f.source())).is_absolute();
  c.bijective = c.injective && c.surjective;

  c.components_injective = true;
  c.components_surjective = true;
  for (const auto& table : f.tables()) {
    std::vector<std::size_t> sorted = table;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      c.components_injective = false;
    }
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != f.target()->points()) c.components_surjective = false;
  }
  return c;
}

bool continuous_at(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt, const SoftElement& x0) {
  require_contexts(f, src, tgt);
  const SoftElement y0 = apply(f, x0);
  for (const auto& v : tgt.opens()) {
    if (!v.contains(y0)) continue;
    const bool found = std::any_of(src.opens().begin(), src.opens().end(),
                                   [&](const SoftSet& u) {
                                     return u.contains(x0) && is_soft_subset(image(f, u), v);
                                   });
    if (!found) return false;
  }
  return true;
}

std::string_view criterion_name(ContinuityCriterion c) {
  switch (c) {
    case ContinuityCriterion::kPointwise: return "pointwise";
    case ContinuityCriterion::kPreimageOpen: return "preimage-open";
    case ContinuityCriterion::kSubbase: return "subbase";
    case ContinuityCriterion::kClosedPreimage: return "closed-preimage";
  }
  return "?";
}

std::optional<ContinuityCriterion> parse_criterion(std::string_view name) {
  for (auto c : {ContinuityCriterion::kPointwise, ContinuityCriterion::kPreimageOpen,
                 ContinuityCriterion::kSubbase, ContinuityCriterion::kClosedPreimage}) {
    if (criterion_name(c) == name) return c;
  }
  return std::nullopt;
}

bool is_continuous(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt, ContinuityCriterion criterion) {
  require_contexts(f, src, tgt);
  switch (criterion) {
    case ContinuityCriterion::kPointwise: {
      bool all = true;
      for_each_soft_element(f.source(), [&](const SoftElement& x) {
        if (all && !continuous_at(f, src, tgt, x)) all = false;
      });
      return all;
    }
    case ContinuityCriterion::kPreimageOpen:
    case ContinuityCriterion::kSubbase:
      return preimages_open(f, src, tgt.opens());
    case ContinuityCriterion::kClosedPreimage: {
      const auto closed = closed_family(tgt);
      return std::all_of(closed.begin(), closed.end(), [&](const SoftSet& k) {
        return is_soft_closed(src, preimage(f, k));
      });
    }
  }
  return false;
}

bool is_continuous(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt, const Subbase& s) {
  require_contexts(f, src, tgt);
  if (!(s.topology() == tgt)) {
    throw Error(ErrorCode::kInvalidSubbase,
                "sub-base was validated for a different target topology");
  }
  return preimages_open(f, src, s.members());
}

bool is_open_map(const SoftFunction& f, const SoftTopology& src,
                 const SoftTopology& tgt) {
  require_contexts(f, src, tgt);
  return std::all_of(src.opens().begin(), src.opens().end(),
                     [&](const SoftSet& u) { return tgt.is_open(image(f, u)); });
}

bool is_closed_map(const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt) {
  require_contexts(f, src, tgt);
  const auto closed = closed_family(src);
  return std::all_of(closed.begin(), closed.end(), [&](const SoftSet& k) {
    return is_soft_closed(tgt, image(f, k));
  });
}

std::string_view homeomorphism_reason_name(HomeomorphismCheck::Reason r) {
  switch (r) {
    case HomeomorphismCheck::Reason::kHomeomorphism: return "homeomorphism";
    case HomeomorphismCheck::Reason::kNotBijective: return "not_bijective";
    case HomeomorphismCheck::Reason::kNotContinuous: return "not_continuous";
    case HomeomorphismCheck::Reason::kInverseNotContinuous: return "inverse_not_continuous";
  }
  return "?";
}

HomeomorphismCheck is_homeomorphism(const SoftFunction& f, const SoftTopology& src,
                                    const SoftTopology& tgt) {
  require_contexts(f, src, tgt);
  using Reason = HomeomorphismCheck::Reason;
  if (!classify_map(f).bijective) return {false, Reason::kNotBijective};
  const auto inv = f.inverse();
  if (!inv) return {false, Reason::kNotBijective};
  if (!is_continuous(f, src, tgt, ContinuityCriterion::kPointwise)) {
    return {false, Reason::kNotContinuous};
  }
  if (!is_continuous(*inv, tgt, src, ContinuityCriterion::kPointwise)) {
    return {false, Reason::kInverseNotContinuous};
  }
  return {true, Reason::kHomeomorphism};
}

}  // namespace softtop
