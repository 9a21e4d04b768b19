#include "softtop/topology.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "softtop/algebra.hpp"

namespace softtop {

namespace {

std::vector<SoftSet> canonical_family(const ContextPtr& ctx,
                                      std::span<const SoftSet> family) {
  std::vector<SoftSet> out(family.begin(), family.end());
  for (const auto& s : out) require_same_context(ctx, s.context());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has(const std::vector<SoftSet>& sorted, const SoftSet& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

class ViolationSink {
 public:
  ViolationSink(ValidationReport& report, std::size_t cap)
      : report_(report), cap_(cap) {}

  void add(Violation v) {
    report_.valid = false;
    ++report_.total_violations;
    if (report_.violations.size() < cap_) report_.violations.push_back(std::move(v));
  }

 private:
  ValidationReport& report_;
  std::size_t cap_;
};

void check_pairs(const std::vector<SoftSet>& family, ViolationSink& sink,
                 SoftSet (*join)(const SoftSet&, const SoftSet&),
                 SoftSet (*meet)(const SoftSet&, const SoftSet&)) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const SoftSet& f = family[i];
      const SoftSet& g = family[j];
      SoftSet u = join(f, g);
      if (!has(family, u)) {
        sink.add({Violation::Kind::kUnionNotClosed, {f, g}, u, {}, {}});
      }
      SoftSet n = meet(f, g);
      if (!has(family, n)) {
        sink.add({Violation::Kind::kIntersectionNotClosed, {f, g}, n, {}, {}});
      }
    }
  }
}

SoftSet cs_join(const SoftSet& f, const SoftSet& g) { return elementary_union(f, g); }
SoftSet cs_meet(const SoftSet& f, const SoftSet& g) {
  return elementary_intersection(f, g);
}

}  // namespace

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::kCS: return "cs";
    case Flavor::kShabirNaz: return "sn";
    case Flavor::kHazra: return "hazra";
  }
  return "?";
}

std::string_view violation_kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::kMissingNull: return "missing_null";
    case Violation::Kind::kMissingAbsolute: return "missing_absolute";
    case Violation::Kind::kMixedMember: return "mixed_member";
    case Violation::Kind::kUnionNotClosed: return "union_not_closed";
    case Violation::Kind::kIntersectionNotClosed: return "intersection_not_closed";
    case Violation::Kind::kFiberNotTopology: return "fiber_not_topology";
  }
  return "?";
}

void require_cs(const SoftTopology& t, const char* what) {
  if (t.flavor() != Flavor::kCS) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " requires a topology validated as cs");
  }
}

ValidationReport validate(const ContextPtr& ctx, std::span<const SoftSet> family,
                          Flavor flavor, std::size_t max_violations) {
  const auto members = canonical_family(ctx, family);
  ValidationReport report;
  report.flavor = flavor;
  ViolationSink sink(report, max_violations);

  if (!has(members, SoftSet::null(ctx))) {
    sink.add({Violation::Kind::kMissingNull, {}, SoftSet::null(ctx), {}, {}});
  }
  if (!has(members, SoftSet::absolute(ctx))) {
    sink.add({Violation::Kind::kMissingAbsolute, {}, SoftSet::absolute(ctx), {}, {}});
  }

  switch (flavor) {
    case Flavor::kCS: {
      std::vector<SoftSet> admissible;
      for (const auto& s : members) {
        if (s.is_admissible()) {
          admissible.push_back(s);
        } else {
          sink.add({Violation::Kind::kMixedMember, {s}, {}, {}, {}});
        }
      }
      check_pairs(admissible, sink, cs_join, cs_meet);
      break;
    }
    case Flavor::kShabirNaz:
      check_pairs(members, sink, pointwise_union, pointwise_intersection);
      break;
    case Flavor::kHazra: {
      const Fiber full = ctx->full_fiber();
      for (const auto& fam : fiber_topologies(ctx, members)) {
        if (fam.is_topology) continue;
        auto present = [&](Fiber f) {
          return std::binary_search(fam.subsets.begin(), fam.subsets.end(), f);
        };
        auto flag = [&](Fiber missing) {
          sink.add({Violation::Kind::kFiberNotTopology, {}, {}, fam.parameter, missing});
        };
        if (!present(0)) flag(0);
        if (!present(full)) flag(full);
        for (std::size_t i = 0; i < fam.subsets.size(); ++i) {
          for (std::size_t j = i + 1; j < fam.subsets.size(); ++j) {
            Fiber u = fam.subsets[i] | fam.subsets[j];
            Fiber n = fam.subsets[i] & fam.subsets[j];
            if (!present(u)) flag(u);
            if (!present(n)) flag(n);
          }
        }
      }
      break;
    }
  }
  return report;
}

SoftTopology SoftTopology::make(ContextPtr ctx, std::vector<SoftSet> opens,
                                Flavor flavor) {
  auto members = canonical_family(ctx, opens);
  auto report = validate(ctx, members, flavor, 1);
  if (!report.valid) {
    throw Error(ErrorCode::kInvalidTopology,
                "family is not a " + std::string(flavor_name(flavor)) +
                    " soft topology (" +
                    std::string(violation_kind_name(report.violations.front().kind)) +
                    ")");
  }
  return SoftTopology(std::move(ctx), std::move(members), flavor);
}

bool SoftTopology::is_open(const SoftSet& s) const {
  require_same_context(ctx_, s.context());
  return has(opens_, s);
}

SoftTopology indiscrete(const ContextPtr& ctx) {
  return SoftTopology::make(ctx, {SoftSet::null(ctx), SoftSet::absolute(ctx)});
}

bool is_crisp_topology(std::span<const Fiber> family, Fiber full) {
  auto has_fiber = [&](Fiber f) {
    return std::find(family.begin(), family.end(), f) != family.end();
  };
  if (!has_fiber(0) || !has_fiber(full)) return false;
  for (Fiber a : family) {
    for (Fiber b : family) {
      if (!has_fiber(a | b) || !has_fiber(a & b)) return false;
    }
  }
  return true;
}

std::vector<FiberFamily> fiber_topologies(const ContextPtr& ctx,
                                          std::span<const SoftSet> family) {
  std::vector<FiberFamily> out;
  for (std::size_t a = 0; a < ctx->parameters(); ++a) {
    FiberFamily fam{a, {}, false};
    for (const auto& s : family) {
      require_same_context(ctx, s.context());
      fam.subsets.push_back(s.fiber(a));
    }
    std::sort(fam.subsets.begin(), fam.subsets.end());
    fam.subsets.erase(std::unique(fam.subsets.begin(), fam.subsets.end()),
                      fam.subsets.end());
    fam.is_topology = is_crisp_topology(fam.subsets, ctx->full_fiber());
    out.push_back(std::move(fam));
  }
  return out;
}

std::vector<FiberFamily> fiber_topologies(const SoftTopology& t) {
  return fiber_topologies(t.context(), t.opens());
}

SoftTopology from_crisp(const ContextPtr& ctx,
                        std::span<const std::vector<Fiber>> per_parameter) {
  const std::size_t m = ctx->parameters();
  if (per_parameter.size() != m) {
    throw Error(ErrorCode::kInvalidArgument, "need one crisp topology per parameter");
  }
  std::vector<std::vector<Fiber>> nonempty(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (!is_crisp_topology(per_parameter[a], ctx->full_fiber())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fiber family for parameter '" + ctx->parameter_label(a) +
                      "' is not a crisp topology");
    }
    for (Fiber f : per_parameter[a]) {
      if (f != 0) nonempty[a].push_back(f);
    }
    std::sort(nonempty[a].begin(), nonempty[a].end());
    nonempty[a].erase(std::unique(nonempty[a].begin(), nonempty[a].end()),
                      nonempty[a].end());
  }
  std::vector<SoftSet> opens{SoftSet::null(ctx)};
  std::vector<std::size_t> pos(m, 0);
  std::vector<Fiber> fibers(m);
  while (true) {
    for (std::size_t a = 0; a < m; ++a) fibers[a] = nonempty[a][pos[a]];
    opens.emplace_back(ctx, fibers);
    std::size_t i = m;
    bool done = false;
    while (true) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (++pos[i] < nonempty[i].size()) break;
      pos[i] = 0;
    }
    if (done) break;
  }
  return SoftTopology::make(ctx, std::move(opens));
}

SoftTopology intersect(const SoftTopology& t1, const SoftTopology& t2) {
  require_cs(t1, "intersect");
  require_cs(t2, "intersect");
  require_same_context(t1.context(), t2.context());
  std::vector<SoftSet> common;
  std::set_intersection(t1.opens().begin(), t1.opens().end(), t2.opens().begin(),
                        t2.opens().end(), std::back_inserter(common));
  return SoftTopology::make(t1.context(), std::move(common));
}

bool is_soft_closed(const SoftTopology& t, const SoftSet& f) {
  require_cs(t, "is_soft_closed");
  require_same_context(t.context(), f.context());
  require_admissible(f, "is_soft_closed");
  return pointwise_complement(f).is_admissible() &&
         t.is_open(elementary_complement(f));
}

std::vector<SoftSet> closed_family(const SoftTopology& t) {
  require_cs(t, "closed_family");
  // K is closed iff K^C is admissible and open, because then K's elementary
  // complement is K^C itself (or Φ~ when K = X~).
  std::vector<SoftSet> out;
  for (const auto& u : t.opens()) {
    SoftSet k = pointwise_complement(u);
    if (k.is_admissible()) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SoftSet closure(const SoftTopology& t, const SoftSet& f) {
  require_cs(t, "closure");
  require_same_context(t.context(), f.context());
  require_admissible(f, "closure");
  if (f.is_null()) return f;
  std::vector<Fiber> fibers(f.parameters(), t.context()->full_fiber());
  for (const auto& k : closed_family(t)) {
    if (!is_soft_subset(f, k)) continue;
    for (std::size_t a = 0; a < fibers.size(); ++a) fibers[a] &= k.fiber(a);
  }
  SoftSet cl(t.context(), fibers);
  if (!cl.is_proper()) {
    throw Error(ErrorCode::kInvalidArgument, "closure: closed supersets lost a fiber");
  }
  return cl;
}

SoftElementSet interior_elements(const SoftTopology& t, const SoftSet& f) {
  require_cs(t, "interior_elements");
  require_same_context(t.context(), f.context());
  std::vector<SoftElement> out;
  for (const auto& x : soft_elements(f)) {
    for (const auto& g : t.opens()) {
      if (g.contains(x) && is_soft_subset(g, f)) {
        out.push_back(x);
        break;
      }
    }
  }
  return SoftElementSet(t.context(), std::move(out));
}

SoftSet interior(const SoftTopology& t, const SoftSet& f) {
  return generate(interior_elements(t, f));
}

bool is_limiting_element(const SoftTopology& t, const SoftSet& f,
                         const SoftElement& x) {
  require_cs(t, "is_limiting_element");
  require_same_context(t.context(), f.context());
  require_admissible(f, "is_limiting_element");
  for (const auto& g : t.opens()) {
    for (std::size_t a = 0; a < f.parameters(); ++a) {
      const Fiber point = Fiber{1} << x.choice(a);
      if ((g.fiber(a) & point) == 0) continue;
      if ((f.fiber(a) & g.fiber(a) & ~point) == 0) return false;
    }
  }
  return true;
}

SoftElementSet limiting_elements(const SoftTopology& t, const SoftSet& f) {
  require_cs(t, "limiting_elements");
  require_same_context(t.context(), f.context());
  require_admissible(f, "limiting_elements");
  // The condition is independent per parameter, so the limiting elements form
  // a product of per-parameter point sets.
  const ContextPtr& ctx = t.context();
  std::vector<Fiber> allowed(ctx->parameters(), 0);
  for (std::size_t a = 0; a < ctx->parameters(); ++a) {
    for (std::size_t p = 0; p < ctx->points(); ++p) {
      const Fiber point = Fiber{1} << p;
      bool ok = true;
      for (const auto& g : t.opens()) {
        if ((g.fiber(a) & point) != 0 && (f.fiber(a) & g.fiber(a) & ~point) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) allowed[a] |= point;
    }
  }
  SoftSet product(ctx, allowed);
  if (!product.is_proper()) return SoftElementSet(ctx);
  return soft_elements(product);
}

SoftSet derived_set(const SoftTopology& t, const SoftSet& f) {
  return generate(limiting_elements(t, f));
}

SoftSet weak_closure(const SoftTopology& t, const SoftSet& f) {
  return elementary_union(f, derived_set(t, f));
}

bool is_nbd(const SoftTopology& t, const SoftSet& f, const SoftElement& x) {
  require_cs(t, "is_nbd");
  require_same_context(t.context(), f.context());
  if (!f.is_proper()) return false;
  for (const auto& g : t.opens()) {
    if (g.contains(x) && is_soft_subset(g, f)) return true;
  }
  return false;
}

std::vector<SoftSet> neighborhoods(const SoftTopology& t, const SoftElement& x) {
  std::vector<SoftSet> out;
  for_each_admissible(t.context(), [&](const SoftSet& f) {
    if (is_nbd(t, f, x)) out.push_back(f);
  });
  return out;
}

NbdOperator NbdOperator::make(ContextPtr ctx,
                              std::map<SoftElement, std::vector<SoftSet>> assignment) {
  for (auto& [x, family] : assignment) {
    require_same_context(ctx, x.context());
    for (const auto& f : family) {
      require_same_context(ctx, f.context());
      if (!f.is_admissible()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "neighbourhood operator assigns a MIXED soft set");
      }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
  }
  std::size_t expected = 0;
  bool total = true;
  for_each_soft_element(ctx, [&](const SoftElement& x) {
    ++expected;
    if (!assignment.count(x)) total = false;
  });
  if (!total || assignment.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                "neighbourhood operator is not total on the soft elements");
  }
  return NbdOperator(std::move(ctx), std::move(assignment));
}

const std::vector<SoftSet>& NbdOperator::at(const SoftElement& x) const {
  return assignment_.at(x);
}

bool NbdOperator::assigns(const SoftElement& x, const SoftSet& f) const {
  const auto& fam = at(x);
  return std::binary_search(fam.begin(), fam.end(), f);
}

NbdOperator neighborhood_operator(const SoftTopology& t) {
  std::map<SoftElement, std::vector<SoftSet>> a;
  for_each_soft_element(t.context(), [&](const SoftElement& x) {
    a.emplace(x, neighborhoods(t, x));
  });
  return NbdOperator::make(t.context(), std::move(a));
}

bool NbdAxiomReport::all_hold() const {
  return std::all_of(axioms.begin(), axioms.end(),
                     [](const NbdAxiomCheck& c) { return c.holds; });
}

NbdAxiomReport check_nbd_operator(const NbdOperator& op) {
  const ContextPtr& ctx = op.context();
  std::vector<SoftSet> admissible;
  for_each_admissible(ctx, [&](const SoftSet& s) { admissible.push_back(s); });

  NbdAxiomReport report;
  auto fail = [](NbdAxiomCheck& check, const SoftElement& x,
                 std::vector<SoftSet> sets) {
    if (!check.holds) return;
    check.holds = false;
    check.element = x;
    check.sets = std::move(sets);
  };

  for (const auto& [x, family] : op.assignment()) {
    auto& [n1, n2, n3, n4, n5] = report.axioms;
    if (family.empty()) fail(n1, x, {});
    for (const auto& f : family) {
      if (!f.contains(x)) fail(n2, x, {f});
      for (const auto& g : admissible) {
        if (is_soft_subset(f, g) && !op.assigns(x, g)) fail(n3, x, {f, g});
      }
      for (const auto& g : family) {
        SoftSet meet = elementary_intersection(f, g);
        if (!op.assigns(x, meet)) fail(n4, x, {f, g, meet});
      }
      bool refined = false;
      for (const auto& g : family) {
        if (!is_soft_subset(g, f)) continue;
        bool everywhere = true;
        for (const auto& y : soft_elements(g)) {
          if (!op.assigns(y, g)) {
            everywhere = false;
            break;
          }
        }
        if (everywhere) {
          refined = true;
          break;
        }
      }
      if (!refined) fail(n5, x, {f});
    }
  }
  return report;
}

}  // namespace softtop
