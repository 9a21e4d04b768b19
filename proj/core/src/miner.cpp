#include "softtop/miner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "softtop/algebra.hpp"
#include "softtop/base.hpp"
#include "softtop/map.hpp"
#include "softtop/separation.hpp"

namespace softtop {

namespace {

// Pair tables grow quadratically in the domain; beyond this the search is no
// longer "desk scale" whatever SOFTTOP_CAP says.
constexpr std::size_t kHardDomainLimit = 512;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// base^exp, or nullopt once it passes `limit`.
std::optional<std::size_t> bounded_pow(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

std::size_t parse_cap(const std::string& text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v == 0) {
    throw Error(ErrorCode::kInvalidArgument, "SOFTTOP_CAP: '" + text + "' is not a positive integer");
  }
  return static_cast<std::size_t>(v);
}

// Advances `c` (strictly increasing indices in [lo, hi)) to the next
// combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t lo, std::size_t hi) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < hi - (k - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  (void)lo;
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k, std::size_t lo) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), lo);
  return c;
}

// The soft sets a search draws from, with precomputed pair tables. Index 0 is
// Φ~ and the last index is X~ for both supported domains.
class FamilySpace {
 public:
  FamilySpace(ContextPtr ctx, std::vector<SoftSet> domain)
      : ctx_(std::move(ctx)), domain_(std::move(domain)), d_(domain_.size()) {
    if (d_ > kHardDomainLimit) {
      throw CapExceeded("domain of " + std::to_string(d_) + " soft sets exceeds the hard limit of " +
                        std::to_string(kHardDomainLimit));
    }
    admissible_.resize(d_);
    for (std::size_t i = 0; i < d_; ++i) admissible_[i] = domain_[i].is_admissible();
    join_.assign(d_ * d_, kNone);
    meet_cs_.assign(d_ * d_, kNone);
    meet_pw_.assign(d_ * d_, kNone);
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t j = i; j < d_; ++j) {
        const SoftSet& a = domain_[i];
        const SoftSet& b = domain_[j];
        auto put = [&](std::vector<std::size_t>& table, std::size_t v) {
          table[i * d_ + j] = v;
          table[j * d_ + i] = v;
        };
        put(join_, index_of(pointwise_union(a, b)));
        put(meet_pw_, index_of(pointwise_intersection(a, b)));
        if (admissible_[i] && admissible_[j]) {
          put(meet_cs_, index_of(elementary_intersection(a, b)));
        }
      }
    }
  }

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return d_; }
  const SoftSet& at(std::size_t i) const { return domain_[i]; }

  std::size_t index_of(const SoftSet& s) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), s);
    if (it == domain_.end() || *it != s) return kNone;
    return static_cast<std::size_t>(it - domain_.begin());
  }

  /// Family indices: Φ~, the chosen inner members, X~.
  std::vector<std::size_t> with_trivials(const std::vector<std::size_t>& inner) const {
    std::vector<std::size_t> idx;
    idx.reserve(inner.size() + 2);
    idx.push_back(0);
    idx.insert(idx.end(), inner.begin(), inner.end());
    idx.push_back(d_ - 1);
    return idx;
  }

  std::vector<SoftSet> family(const std::vector<std::size_t>& idx) const {
    std::vector<SoftSet> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(domain_[i]);
    return out;
  }

  bool cs_valid(const std::vector<std::size_t>& idx) const {
    for (std::size_t i : idx) {
      if (!admissible_[i]) return false;
    }
    return closed_under(idx, join_, meet_cs_);
  }

  bool sn_valid(const std::vector<std::size_t>& idx) const {
    return closed_under(idx, join_, meet_pw_);
  }

 private:
  bool closed_under(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& op1,
                    const std::vector<std::size_t>& op2) const {
    // idx is sorted, so membership is a binary search.
    auto has = [&](std::size_t v) {
      return v != kNone && std::binary_search(idx.begin(), idx.end(), v);
    };
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const std::size_t cell = idx[a] * d_ + idx[b];
        if (!has(op1[cell]) || !has(op2[cell])) return false;
      }
    }
    return true;
  }

  ContextPtr ctx_;
  std::vector<SoftSet> domain_;
  std::size_t d_;
  std::vector<bool> admissible_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_cs_;
  std::vector<std::size_t> meet_pw_;
};

bool family_valid(const FamilySpace& space, Flavor flavor, const std::vector<std::size_t>& idx) {
  switch (flavor) {
    case Flavor::kCS: return space.cs_valid(idx);
    case Flavor::kShabirNaz: return space.sn_valid(idx);
    case Flavor::kHazra: return validate(space.context(), space.family(idx), flavor, 1).valid;
  }
  return false;
}

// Relabelings of X acting on domain indices; rejects a family unless it is
// lexicographically least in its orbit.
class IsomorphFilter {
 public:
  IsomorphFilter(const FamilySpace& space) {
    const ContextPtr& ctx = space.context();
    const std::size_t n = ctx->points();
    if (n > 6) {
      throw Error(ErrorCode::kInvalidArgument, "isomorph rejection supports at most 6 points");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<std::size_t> image(space.size());
      for (std::size_t i = 0; i < space.size(); ++i) {
        const SoftSet& s = space.at(i);
        std::vector<Fiber> fibers(s.parameters(), 0);
        for (std::size_t a = 0; a < fibers.size(); ++a) {
          for (std::size_t p = 0; p < n; ++p) {
            if (s.fiber(a) >> p & 1U) fibers[a] |= Fiber{1} << perm[p];
          }
        }
        image[i] = space.index_of(SoftSet(ctx, fibers));
      }
      maps_.push_back(std::move(image));
    }
  }

  bool is_least(const std::vector<std::size_t>& inner) const {
    std::vector<std::size_t> moved(inner.size());
    for (const auto& map : maps_) {
      for (std::size_t i = 0; i < inner.size(); ++i) moved[i] = map[inner[i]];
      std::sort(moved.begin(), moved.end());
      if (moved < inner) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<std::size_t>> maps_;
};

bool family_predicate(Predicate p, const ContextPtr& ctx, const std::vector<SoftSet>& family,
                      const std::vector<SoftSet>& admissible_sets);

bool topological(Predicate p, const SoftTopology& t, const std::vector<SoftSet>& admissible_sets) {
  switch (p) {
    case Predicate::kRegular: return is_regular(t).holds;
    case Predicate::kNormal: return is_normal(t).holds;
    case Predicate::kT0: return separation_axiom(t, SeparationLevel::kT0).holds;
    case Predicate::kT1: return separation_axiom(t, SeparationLevel::kT1).holds;
    case Predicate::kT2: return separation_axiom(t, SeparationLevel::kT2).holds;
    case Predicate::kCond68:
      return interpolation_condition(t, InterpolationKind::kRegularity).holds;
    case Predicate::kCond611:
      return interpolation_condition(t, InterpolationKind::kNormality).holds;
    case Predicate::kClosedUnionClosed: {
      const auto closed = closed_family(t);
      for (std::size_t i = 0; i < closed.size(); ++i) {
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
          if (!is_soft_closed(t, elementary_union(closed[i], closed[j]))) return false;
        }
      }
      return true;
    }
    case Predicate::kClosureUnionEquality: {
      std::vector<SoftSet> cl;
      cl.reserve(admissible_sets.size());
      for (const auto& f : admissible_sets) cl.push_back(closure(t, f));
      auto closure_of = [&](const SoftSet& s) {
        auto it = std::lower_bound(admissible_sets.begin(), admissible_sets.end(), s);
        return cl[static_cast<std::size_t>(it - admissible_sets.begin())];
      };
      for (std::size_t i = 0; i < admissible_sets.size(); ++i) {
        for (std::size_t j = i + 1; j < admissible_sets.size(); ++j) {
          const SoftSet joined = elementary_union(admissible_sets[i], admissible_sets[j]);
          if (elementary_union(cl[i], cl[j]) != closure_of(joined)) return false;
        }
      }
      return true;
    }
    default:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "not a topological predicate");
}

bool is_topological(Predicate p) {
  switch (p) {
    case Predicate::kRegular:
    case Predicate::kNormal:
    case Predicate::kT0:
    case Predicate::kT1:
    case Predicate::kT2:
    case Predicate::kCond68:
    case Predicate::kCond611:
    case Predicate::kClosedUnionClosed:
    case Predicate::kClosureUnionEquality:
      return true;
    default:
      return false;
  }
}

bool distributive(const std::vector<SoftSet>& family) {
  for (const auto& s : family) {
    if (!s.is_admissible()) return false;
  }
  for (const auto& f : family) {
    for (const auto& g : family) {
      for (const auto& h : family) {
        const SoftSet lhs1 = elementary_intersection(elementary_union(f, g), h);
        const SoftSet rhs1 =
            elementary_union(elementary_intersection(f, h), elementary_intersection(g, h));
        if (lhs1 != rhs1) return false;
        const SoftSet lhs2 = elementary_union(elementary_intersection(f, h), g);
        const SoftSet rhs2 =
            elementary_intersection(elementary_union(f, g), elementary_union(h, g));
        if (lhs2 != rhs2) return false;
      }
    }
  }
  return true;
}

bool family_predicate(Predicate p, const ContextPtr& ctx, const std::vector<SoftSet>& family,
                      const std::vector<SoftSet>& admissible_sets) {
  switch (p) {
    case Predicate::kCsValid: return validate(ctx, family, Flavor::kCS, 1).valid;
    case Predicate::kSnValid: return validate(ctx, family, Flavor::kShabirNaz, 1).valid;
    case Predicate::kHazraValid: return validate(ctx, family, Flavor::kHazra, 1).valid;
    case Predicate::kDistributivity: return distributive(family);
    default:
      break;
  }
  if (is_topological(p)) {
    if (!validate(ctx, family, Flavor::kCS, 1).valid) return false;
    return topological(p, SoftTopology::make(ctx, family), admissible_sets);
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(predicate_name(p)) + " is not a family predicate");
}

std::vector<SoftSet> admissible_list(const ContextPtr& ctx) {
  std::vector<SoftSet> out;
  for_each_admissible(ctx, [&](const SoftSet& s) { out.push_back(s); });
  return out;
}

bool base_predicate(Predicate p, const SoftTopology& t, const std::vector<SoftSet>& b) {
  switch (p) {
    case Predicate::kIsBase: return is_open_base(t, b).holds;
    case Predicate::kBase43Condition: return covers_by_unions(t, b).holds;
    case Predicate::kBase45Conditions: return base_axioms(t.context(), b).all_hold();
    default:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "not a base predicate");
}

bool map_predicate(Predicate p, const SoftFunction& f, const SoftTopology& src,
                   const SoftTopology& tgt) {
  switch (p) {
    case Predicate::kContPointwise:
      return is_continuous(f, src, tgt, ContinuityCriterion::kPointwise);
    case Predicate::kContPreimageOpen:
      return is_continuous(f, src, tgt, ContinuityCriterion::kPreimageOpen);
    case Predicate::kContClosedPreimage:
      return is_continuous(f, src, tgt, ContinuityCriterion::kClosedPreimage);
    default:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "not a map predicate");
}

// Builds the witness document: distinct non-trivial sets named S1..Sk in
// canonical order, families listing member names in canonical order.
InstanceFile make_instance(const ContextPtr& ctx,
                           const std::vector<std::pair<std::string, std::vector<SoftSet>>>& families,
                           const std::optional<SoftFunction>& fn) {
  InstanceFile out;
  out.universe = ctx->universe();
  out.parameters = ctx->parameter_labels();

  std::vector<SoftSet> named;
  for (const auto& [name, family] : families) {
    for (const auto& s : family) {
      if (!s.is_null() && !s.is_absolute()) named.push_back(s);
    }
  }
  std::sort(named.begin(), named.end());
  named.erase(std::unique(named.begin(), named.end()), named.end());

  auto name_of = [&](const SoftSet& s) -> std::string {
    if (s.is_null()) return std::string(kNullName);
    if (s.is_absolute()) return std::string(kAbsoluteName);
    auto it = std::lower_bound(named.begin(), named.end(), s);
    return "S" + std::to_string(it - named.begin() + 1);
  };

  for (const auto& s : named) {
    InstanceFile::NamedSoftSet entry{name_of(s), {}};
    for (std::size_t a = 0; a < s.parameters(); ++a) {
      std::vector<std::string> fiber;
      for (std::size_t p = 0; p < ctx->points(); ++p) {
        if (s.fiber(a) >> p & 1U) fiber.push_back(ctx->point_label(p));
      }
      entry.fibers.push_back(std::move(fiber));
    }
    out.soft_sets.push_back(std::move(entry));
  }
  for (const auto& [name, family] : families) {
    std::vector<SoftSet> sorted = family;
    std::sort(sorted.begin(), sorted.end());
    InstanceFile::NamedFamily entry{name, {}};
    for (const auto& s : sorted) entry.members.push_back(name_of(s));
    out.topologies.push_back(std::move(entry));
  }
  if (fn) {
    InstanceFile::NamedFunction entry{"f", {}};
    for (const auto& table : fn->tables()) {
      std::vector<std::string> row;
      for (std::size_t v : table) row.push_back(fn->target()->point_label(v));
      entry.tables.push_back(std::move(row));
    }
    out.functions.push_back(std::move(entry));
  }
  return out;
}

std::size_t worker_count(std::size_t requested, std::size_t partitions) {
  std::size_t hw = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::max<std::size_t>(1, std::min(hw, partitions));
}

class Searcher {
 public:
  Searcher(const MinerGoal& goal, const EnumerationCaps& caps, std::size_t max_size)
      : goal_(goal), caps_(caps), max_size_(max_size),
        ctx_(Context::make(default_point_labels(goal.n), default_parameter_labels(goal.m))),
        admissible_(admissible_list_if_needed()) {}

  SearchResult run() {
    const bool map_mode = predicate_kind(goal_.positive) == PredicateKind::kMap;
    if (map_mode) return search_maps();
    return search_families();
  }

 private:
  std::vector<SoftSet> admissible_list_if_needed() const {
    for (auto p : {goal_.positive, goal_.negative}) {
      if (p == Predicate::kClosureUnionEquality) return admissible_list(ctx_);
    }
    return {};
  }

  bool base_mode() const {
    return predicate_kind(goal_.positive) == PredicateKind::kBase ||
           predicate_kind(goal_.negative) == PredicateKind::kBase;
  }

  bool holds_on_family(Predicate p, const FamilySpace& space,
                       const std::vector<std::size_t>& idx) const {
    switch (p) {
      case Predicate::kCsValid: return space.cs_valid(idx);
      case Predicate::kSnValid: return space.sn_valid(idx);
      default:
        break;
    }
    if (is_topological(p)) {
      if (!space.cs_valid(idx)) return false;
      return topological(p, SoftTopology::make(ctx_, space.family(idx)), admissible_);
    }
    return family_predicate(p, ctx_, space.family(idx), admissible_);
  }

  std::optional<InstanceFile> evaluate(const FamilySpace& space,
                                       const std::vector<std::size_t>& inner) const {
    const auto idx = space.with_trivials(inner);
    if (!base_mode()) {
      if (!holds_on_family(goal_.positive, space, idx)) return std::nullopt;
      if (holds_on_family(goal_.negative, space, idx)) return std::nullopt;
      return make_instance(ctx_, {{"tau", space.family(idx)}}, std::nullopt);
    }

    if (!space.cs_valid(idx)) return std::nullopt;
    const SoftTopology t = SoftTopology::make(ctx_, space.family(idx));
    // Family predicates do not depend on B; settle them once.
    std::optional<bool> pos_fixed;
    std::optional<bool> neg_fixed;
    if (predicate_kind(goal_.positive) == PredicateKind::kFamily) {
      pos_fixed = holds_on_family(goal_.positive, space, idx);
      if (!*pos_fixed) return std::nullopt;
    }
    if (predicate_kind(goal_.negative) == PredicateKind::kFamily) {
      neg_fixed = holds_on_family(goal_.negative, space, idx);
      if (*neg_fixed) return std::nullopt;
    }
    // B = {Φ~} ∪ chosen, chosen ⊆ τ \ {Φ~}, by size then lexicographically.
    const std::vector<SoftSet> others(t.opens().begin() + 1, t.opens().end());
    for (std::size_t k = 0; k <= others.size(); ++k) {
      auto c = first_combination(k, 0);
      do {
        std::vector<SoftSet> b{SoftSet::null(ctx_)};
        for (std::size_t i : c) b.push_back(others[i]);
        const bool pos = pos_fixed ? *pos_fixed : base_predicate(goal_.positive, t, b);
        if (!pos) continue;
        const bool neg = neg_fixed ? *neg_fixed : base_predicate(goal_.negative, t, b);
        if (neg) continue;
        return make_instance(ctx_, {{"tau", t.opens()}, {"B", b}}, std::nullopt);
      } while (next_combination(c, 0, others.size()));
    }
    return std::nullopt;
  }

  SearchResult search_families() {
    const bool all_sets = predicate_kind(goal_.positive) == PredicateKind::kFamily &&
                          (goal_.positive == Predicate::kSnValid ||
                           goal_.positive == Predicate::kHazraValid);
    FamilySpace space(ctx_, all_sets ? enumerate_all_soft_sets(ctx_, caps_)
                                     : enumerate_soft_sets(ctx_, caps_));
    std::optional<IsomorphFilter> iso;
    if (goal_.isomorph_rejection) iso.emplace(space);

    const std::size_t inner_count = space.size() >= 2 ? space.size() - 2 : 0;
    for (std::size_t k = 0; k + 2 <= max_size_ && k <= inner_count; ++k) {
      if (k == 0) {
        if (auto w = evaluate(space, {})) return {true, std::move(w)};
        continue;
      }
      // Partition by the first chosen member; the least partition holding a
      // witness contains the lexicographically first witness of this size.
      const std::size_t partitions = inner_count - k + 1;
      std::vector<std::optional<InstanceFile>> found(partitions);
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> best{kNone};
      auto worker = [&] {
        while (true) {
          const std::size_t part = next.fetch_add(1);
          if (part >= partitions || part > best.load()) return;
          std::vector<std::size_t> c = first_combination(k, 1 + part);
          const std::size_t hi = 1 + inner_count;
          do {
            if (c.front() != 1 + part) break;
            if (best.load() < part) break;
            if (iso && !iso->is_least(c)) continue;
            if (auto w = evaluate(space, c)) {
              found[part] = std::move(w);
              std::size_t cur = best.load();
              while (part < cur && !best.compare_exchange_weak(cur, part)) {
              }
              break;
            }
          } while (next_combination(c, 1, hi));
        }
      };
      const std::size_t workers = worker_count(goal_.threads, partitions);
      if (workers == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
      }
      if (best.load() != kNone) return {true, std::move(found[best.load()])};
    }
    return {};
  }

  SearchResult search_maps() {
    const std::size_t n = ctx_->points();
    const std::size_t m = ctx_->parameters();
    const auto per_param = bounded_pow(n, n, caps_.max_functions);
    const auto total = per_param ? bounded_pow(*per_param, m, caps_.max_functions) : std::nullopt;
    if (!total) {
      throw CapExceeded("soft function count (n^n)^m exceeds the cap of " +
                        std::to_string(caps_.max_functions));
    }
    std::vector<SoftFunction> functions;
    functions.reserve(*total);
    std::vector<std::size_t> digits(n * m, 0);
    while (true) {
      std::vector<std::vector<std::size_t>> tables(m, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t p = 0; p < n; ++p) tables[a][p] = digits[a * n + p];
      }
      functions.push_back(SoftFunction::make(ctx_, ctx_, std::move(tables)));
      std::size_t i = digits.size();
      bool done = true;
      while (i-- > 0) {
        if (++digits[i] < n) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
      if (done) break;
    }

    std::vector<SoftTopology> seen;
    SearchResult result;
    auto try_pair = [&](const SoftTopology& src, const SoftTopology& tgt) {
      for (const auto& f : functions) {
        if (!map_predicate(goal_.positive, f, src, tgt)) continue;
        if (map_predicate(goal_.negative, f, src, tgt)) continue;
        result.found = true;
        result.witness = make_instance(
            ctx_, {{"tau_src", src.opens()}, {"tau_tgt", tgt.opens()}}, f);
        return true;
      }
      return false;
    };
    // Pairs are ordered by the later-enumerated topology, then the earlier
    // one, with the earlier topology as source first.
    for_each_topology(ctx_, Flavor::kCS, max_size_, caps_, [&](const std::vector<SoftSet>& fam) {
      seen.push_back(SoftTopology::make(ctx_, fam));
      const std::size_t j = seen.size() - 1;
      for (std::size_t i = 0; i <= j; ++i) {
        if (try_pair(seen[i], seen[j])) return false;
        if (i != j && try_pair(seen[j], seen[i])) return false;
      }
      return true;
    });
    return result;
  }

  MinerGoal goal_;
  EnumerationCaps caps_;
  std::size_t max_size_;
  ContextPtr ctx_;
  std::vector<SoftSet> admissible_;
};

}  // namespace

EnumerationCaps EnumerationCaps::from_env() {
  EnumerationCaps caps;
  const char* raw = std::getenv("SOFTTOP_CAP");
  if (raw == nullptr || *raw == '\0') return caps;
  const std::string text(raw);
  const auto comma = text.find(',');
  caps.max_domain = parse_cap(text.substr(0, comma));
  if (comma != std::string::npos) caps.max_family = parse_cap(text.substr(comma + 1));
  return caps;
}

std::vector<SoftSet> enumerate_soft_sets(const ContextPtr& ctx, const EnumerationCaps& caps) {
  const std::size_t per_fiber =
      ctx->points() >= 63 ? kNone : (std::size_t{1} << ctx->points()) - 1;
  if (per_fiber == kNone || !bounded_pow(per_fiber, ctx->parameters(), caps.max_domain)) {
    throw CapExceeded("(2^n - 1)^m exceeds the enumeration cap of " +
                      std::to_string(caps.max_domain));
  }
  std::vector<SoftSet> out;
  for_each_admissible(ctx, [&](const SoftSet& s) { out.push_back(s); });
  return out;
}

std::vector<SoftSet> enumerate_soft_sets(const ContextPtr& ctx) {
  return enumerate_soft_sets(ctx, EnumerationCaps::from_env());
}

std::vector<SoftSet> enumerate_all_soft_sets(const ContextPtr& ctx,
                                             const EnumerationCaps& caps) {
  const std::size_t bits = ctx->points() * ctx->parameters();
  if (bits >= 63 || (std::size_t{1} << bits) > caps.max_domain) {
    throw CapExceeded("2^(n*m) exceeds the enumeration cap of " +
                      std::to_string(caps.max_domain));
  }
  std::vector<SoftSet> out;
  for_each_soft_set(ctx, [&](const SoftSet& s) { out.push_back(s); });
  return out;
}

void for_each_topology(const ContextPtr& ctx, Flavor flavor, std::size_t max_size,
                       const EnumerationCaps& caps,
                       const std::function<bool(const std::vector<SoftSet>&)>& fn) {
  if (max_size > caps.max_family) {
    throw CapExceeded("family size " + std::to_string(max_size) + " exceeds the cap of " +
                      std::to_string(caps.max_family));
  }
  FamilySpace space(ctx, flavor == Flavor::kCS ? enumerate_soft_sets(ctx, caps)
                                               : enumerate_all_soft_sets(ctx, caps));
  const std::size_t inner_count = space.size() >= 2 ? space.size() - 2 : 0;
  for (std::size_t k = 0; k + 2 <= max_size && k <= inner_count; ++k) {
    auto c = first_combination(k, 1);
    do {
      const auto idx = space.with_trivials(c);
      if (family_valid(space, flavor, idx) && !fn(space.family(idx))) return;
    } while (next_combination(c, 1, 1 + inner_count));
  }
}

std::vector<SoftTopology> enumerate_topologies(const ContextPtr& ctx, Flavor flavor,
                                               std::size_t max_size,
                                               const EnumerationCaps& caps) {
  std::vector<SoftTopology> out;
  for_each_topology(ctx, flavor, max_size, caps, [&](const std::vector<SoftSet>& fam) {
    out.push_back(SoftTopology::make(ctx, fam, flavor));
    return true;
  });
  return out;
}

std::string_view predicate_name(Predicate p) {
  switch (p) {
    case Predicate::kCsValid: return "CS_VALID";
    case Predicate::kSnValid: return "SN_VALID";
    case Predicate::kHazraValid: return "HAZRA_VALID";
    case Predicate::kRegular: return "REGULAR";
    case Predicate::kNormal: return "NORMAL";
    case Predicate::kT0: return "T0";
    case Predicate::kT1: return "T1";
    case Predicate::kT2: return "T2";
    case Predicate::kCond68: return "COND_68";
    case Predicate::kCond611: return "COND_611";
    case Predicate::kClosedUnionClosed: return "CLOSED_UNION_CLOSED";
    case Predicate::kClosureUnionEquality: return "CLOSURE_UNION_EQUALITY";
    case Predicate::kDistributivity: return "DISTRIBUTIVITY";
    case Predicate::kIsBase: return "IS_BASE";
    case Predicate::kBase43Condition: return "BASE_43_CONDITION";
    case Predicate::kBase45Conditions: return "BASE_45_CONDITIONS";
    case Predicate::kContPointwise: return "CONT_POINTWISE";
    case Predicate::kContPreimageOpen: return "CONT_PREIMAGE_OPEN";
    case Predicate::kContClosedPreimage: return "CONT_CLOSED_PREIMAGE";
  }
  return "?";
}

const std::vector<Predicate>& all_predicates() {
  static const std::vector<Predicate> all = {
      Predicate::kCsValid,           Predicate::kSnValid,
      Predicate::kHazraValid,        Predicate::kRegular,
      Predicate::kNormal,            Predicate::kT0,
      Predicate::kT1,                Predicate::kT2,
      Predicate::kCond68,            Predicate::kCond611,
      Predicate::kClosedUnionClosed, Predicate::kClosureUnionEquality,
      Predicate::kDistributivity,    Predicate::kIsBase,
      Predicate::kBase43Condition,   Predicate::kBase45Conditions,
      Predicate::kContPointwise,     Predicate::kContPreimageOpen,
      Predicate::kContClosedPreimage,
  };
  return all;
}

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (auto p : all_predicates()) {
    if (predicate_name(p) == name) return p;
  }
  return std::nullopt;
}

PredicateKind predicate_kind(Predicate p) {
  switch (p) {
    case Predicate::kIsBase:
    case Predicate::kBase43Condition:
    case Predicate::kBase45Conditions:
      return PredicateKind::kBase;
    case Predicate::kContPointwise:
    case Predicate::kContPreimageOpen:
    case Predicate::kContClosedPreimage:
      return PredicateKind::kMap;
    default:
      return PredicateKind::kFamily;
  }
}

bool evaluate_family_predicate(Predicate p, const ContextPtr& ctx,
                               const std::vector<SoftSet>& family) {
  const auto admissible =
      p == Predicate::kClosureUnionEquality ? admissible_list(ctx) : std::vector<SoftSet>{};
  return family_predicate(p, ctx, family, admissible);
}

SearchResult search(const MinerGoal& goal, const EnumerationCaps& caps) {
  if (goal.positive == goal.negative) {
    throw Error(ErrorCode::kInvalidArgument, "positive and negative predicates must differ");
  }
  const auto pk = predicate_kind(goal.positive);
  const auto nk = predicate_kind(goal.negative);
  if ((pk == PredicateKind::kMap) != (nk == PredicateKind::kMap)) {
    throw Error(ErrorCode::kInvalidArgument,
                "map predicates can only be paired with other map predicates");
  }
  if (goal.n == 0 || goal.n > kMaxPoints || goal.m == 0 || goal.m > kMaxParameters) {
    throw Error(ErrorCode::kInvalidArgument, "bounds need 1 <= n <= 64 and 1 <= m <= 8");
  }
  const std::size_t max_size = goal.max_family_size.value_or(caps.max_family);
  if (max_size < 2) {
    throw Error(ErrorCode::kInvalidArgument, "families hold at least the two trivial sets");
  }
  if (max_size > caps.max_family) {
    throw CapExceeded("family size " + std::to_string(max_size) + " exceeds the cap of " +
                      std::to_string(caps.max_family));
  }
  return Searcher(goal, caps, max_size).run();
}

SearchResult search(const MinerGoal& goal) {
  return search(goal, EnumerationCaps::from_env());
}

}  // namespace softtop
