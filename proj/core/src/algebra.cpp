#include "softtop/algebra.hpp"

#include <string>
#include <vector>

#include "softtop/error.hpp"

namespace softtop {

namespace {

std::vector<Fiber> fibers_of(const SoftSet& s) {
  return {s.fibers().begin(), s.fibers().end()};
}

// Odometer over per-parameter fiber values in [lo, hi], first parameter most
// significant, which is canonical soft-set order.
void odometer(const ContextPtr& ctx, Fiber lo,
              const std::function<void(const SoftSet&)>& fn) {
  const std::size_t m = ctx->parameters();
  const Fiber hi = ctx->full_fiber();
  std::vector<Fiber> fibers(m, lo);
  while (true) {
    fn(SoftSet(ctx, fibers));
    std::size_t i = m;
    while (true) {
      if (i == 0) return;
      --i;
      if (fibers[i] < hi) {
        ++fibers[i];
        break;
      }
      fibers[i] = lo;
    }
  }
}

}  // namespace

SoftSetClass classify(const SoftSet& s) noexcept { return s.classify(); }

void require_admissible(const SoftSet& s, const char* what) {
  if (s.classify() == SoftSetClass::kMixed) {
    throw DomainError(std::string(what) +
                      ": soft set has both empty and non-empty fibers");
  }
}

SoftElementSet soft_elements(const SoftSet& s) {
  require_admissible(s, "soft_elements");
  const ContextPtr& ctx = s.context();
  if (s.is_null()) return SoftElementSet(ctx);

  const std::size_t m = ctx->parameters();
  std::vector<std::vector<std::size_t>> options(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t p = 0; p < ctx->points(); ++p) {
      if (s.fiber(a) >> p & 1U) options[a].push_back(p);
    }
  }
  std::vector<SoftElement> out;
  std::vector<std::size_t> pos(m, 0);
  std::vector<std::size_t> choice(m);
  while (true) {
    for (std::size_t a = 0; a < m; ++a) choice[a] = options[a][pos[a]];
    out.emplace_back(ctx, choice);
    std::size_t i = m;
    while (true) {
      if (i == 0) return SoftElementSet(ctx, std::move(out));
      --i;
      if (++pos[i] < options[i].size()) break;
      pos[i] = 0;
    }
  }
}

SoftSet generate(const SoftElementSet& b) {
  const ContextPtr& ctx = b.context();
  std::vector<Fiber> fibers(ctx->parameters(), 0);
  for (const auto& x : b) {
    for (std::size_t a = 0; a < fibers.size(); ++a) {
      fibers[a] |= Fiber{1} << x.choice(a);
    }
  }
  return SoftSet(ctx, fibers);
}

bool is_soft_subset(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.context(), g.context());
  for (std::size_t a = 0; a < f.parameters(); ++a) {
    if ((f.fiber(a) & ~g.fiber(a)) != 0) return false;
  }
  return true;
}

SoftSet pointwise_union(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.context(), g.context());
  auto fibers = fibers_of(f);
  for (std::size_t a = 0; a < fibers.size(); ++a) fibers[a] |= g.fiber(a);
  return SoftSet(f.context(), fibers);
}

SoftSet pointwise_intersection(const SoftSet& f, const SoftSet& g) {
  require_same_context(f.context(), g.context());
  auto fibers = fibers_of(f);
  for (std::size_t a = 0; a < fibers.size(); ++a) fibers[a] &= g.fiber(a);
  return SoftSet(f.context(), fibers);
}

SoftSet pointwise_complement(const SoftSet& f) {
  auto fibers = fibers_of(f);
  for (auto& fiber : fibers) fiber = ~fiber & f.context()->full_fiber();
  return SoftSet(f.context(), fibers);
}

SoftSet pointwise(PointwiseOp op, const SoftSet& f, const std::optional<SoftSet>& g) {
  switch (op) {
    case PointwiseOp::kComplement:
      return pointwise_complement(f);
    case PointwiseOp::kUnion:
    case PointwiseOp::kIntersection:
      if (!g) {
        throw Error(ErrorCode::kInvalidArgument, "binary pointwise operation needs two operands");
      }
      return op == PointwiseOp::kUnion ? pointwise_union(f, *g)
                                       : pointwise_intersection(f, *g);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown pointwise operation");
}

SoftSet elementary_union(const ContextPtr& ctx, std::span<const SoftSet> fs) {
  std::vector<Fiber> fibers(ctx->parameters(), 0);
  for (const auto& f : fs) {
    require_same_context(ctx, f.context());
    require_admissible(f, "elementary_union");
    for (std::size_t a = 0; a < fibers.size(); ++a) fibers[a] |= f.fiber(a);
  }
  return SoftSet(ctx, fibers);
}

SoftSet elementary_union(const SoftSet& f, const SoftSet& g) {
  const SoftSet pair[] = {f, g};
  return elementary_union(f.context(), pair);
}

SoftSet elementary_intersection(const ContextPtr& ctx, std::span<const SoftSet> fs) {
  std::vector<Fiber> fibers(ctx->parameters(), ctx->full_fiber());
  for (const auto& f : fs) {
    require_same_context(ctx, f.context());
    require_admissible(f, "elementary_intersection");
    for (std::size_t a = 0; a < fibers.size(); ++a) fibers[a] &= f.fiber(a);
  }
  SoftSet meet(ctx, fibers);
  // no common soft element unless every fiber survives
  return meet.is_proper() ? meet : SoftSet::null(ctx);
}

SoftSet elementary_intersection(const SoftSet& f, const SoftSet& g) {
  const SoftSet pair[] = {f, g};
  return elementary_intersection(f.context(), pair);
}

SoftSet elementary_complement(const SoftSet& f) {
  require_admissible(f, "elementary_complement");
  SoftSet c = pointwise_complement(f);
  return c.is_proper() ? c : SoftSet::null(f.context());
}

void for_each_admissible(const ContextPtr& ctx,
                         const std::function<void(const SoftSet&)>& fn) {
  fn(SoftSet::null(ctx));
  odometer(ctx, 1, fn);
}

void for_each_soft_set(const ContextPtr& ctx,
                       const std::function<void(const SoftSet&)>& fn) {
  odometer(ctx, 0, fn);
}

}  // namespace softtop
