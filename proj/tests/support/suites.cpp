#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>

#include "softtop/algebra.hpp"
#include "softtop/base.hpp"
#include "softtop/instance.hpp"
#include "softtop/map.hpp"
#include "softtop/miner.hpp"
#include "softtop/separation.hpp"

namespace suites {

using namespace softtop;

std::size_t SuiteResult::violations() const {
  std::size_t total = 0;
  for (const auto& law : laws) total += law.violations;
  return total;
}

const LawResult* SuiteResult::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result), start_(Clock::now()) {}
  ~Recorder() {
    result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
  }

  template <typename Describe>
  void check(const std::string& law, bool ok, Describe describe) {
    LawResult& l = get(law);
    ++l.cases;
    if (!ok && l.violations++ == 0) l.counterexample = describe();
  }

  void note(std::string text) { result_.notes.push_back(std::move(text)); }

 private:
  using Clock = std::chrono::steady_clock;

  LawResult& get(const std::string& law) {
    auto it = index_.find(law);
    if (it == index_.end()) {
      it = index_.emplace(law, result_.laws.size()).first;
      result_.laws.push_back({law, 0, 0, {}});
    }
    return result_.laws[it->second];
  }

  SuiteResult& result_;
  std::map<std::string, std::size_t> index_;
  Clock::time_point start_;
};

EnumerationCaps roomy(std::size_t max_family) {
  EnumerationCaps caps;
  caps.max_domain = 1 << 12;
  caps.max_family = max_family;
  return caps;
}

ContextPtr make_context(std::size_t n, std::size_t m) {
  return Context::make(default_point_labels(n), default_parameter_labels(m));
}

std::string show(const SoftSet& s) { return notation(s); }
std::string show(const std::vector<SoftSet>& fam) {
  std::string out = "{";
  for (const auto& s : fam) out += (out.size() > 1 ? ", " : "") + notation(s);
  return out + "}";
}

SoftSet complement(const SoftSet& f) { return elementary_complement(f); }

bool admissible(const SoftSet& s) { return s.is_admissible(); }

// Every sub-collection of SE(f) that generates f.
std::vector<SoftElementSet> generating_collections(const SoftSet& f) {
  const auto all = soft_elements(f);
  const auto& xs = all.elements();
  std::vector<SoftElementSet> out;
  for (std::uint32_t mask = 0; mask < (1U << xs.size()); ++mask) {
    std::vector<SoftElement> pick;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask >> i & 1U) pick.push_back(xs[i]);
    }
    SoftElementSet b(f.context(), std::move(pick));
    if (generate(b) == f) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

SuiteResult algebra_laws(std::size_t n, std::size_t m) {
  SuiteResult result;
  result.name = "algebra of S(X~), n=" + std::to_string(n) + " m=" + std::to_string(m);
  Recorder r(result);
  const auto ctx = make_context(n, m);
  const auto sets = enumerate_soft_sets(ctx, roomy(8));
  const SoftSet null = SoftSet::null(ctx);
  const SoftSet full = SoftSet::absolute(ctx);
  r.note(std::to_string(sets.size()) + " admissible soft sets");

  for (const auto& f : sets) {
    const SoftSet fc = complement(f);
    const SoftSet rel = pointwise_complement(f);
    auto d = [&] { return show(f); };
    r.check("elementary complement lies inside the relative complement",
            is_soft_subset(fc, rel), d);
    r.check("elementary complement equals the relative complement when non-null",
            fc.is_null() || fc == rel, d);
    r.check("F ⋒ ℂF is null", elementary_intersection(f, fc).is_null(), d);
    const SoftSet u = elementary_union(f, fc);
    r.check("F ⋓ ℂF lies inside X~", is_soft_subset(u, full), d);
    r.check("F ⋓ ℂF is X~ when ℂF is non-null", fc.is_null() || u == full, d);
    r.check("admissible relative complement is the elementary complement, and ℂℂF = F",
            !admissible(rel) || (rel == fc && complement(fc) == f), d);
  }

  const bool small = soft_elements(full).size() <= 4;
  for (const auto& f : sets) {
    for (const auto& g : sets) {
      auto d = [&] { return show(f) + ", " + show(g); };
      const SoftSet join = elementary_union(f, g);
      const SoftSet meet = elementary_intersection(f, g);
      const SoftSet pw_meet = pointwise_intersection(f, g);
      r.check("⋓ equals pointwise union", join == pointwise_union(f, g), d);
      r.check("⋒ equals pointwise intersection when non-null",
              meet.is_null() || meet == pw_meet, d);
      r.check("⋒ equals pointwise intersection iff the latter is admissible",
              (meet == pw_meet) == admissible(pw_meet), d);
      const auto se_f = soft_elements(f);
      const auto se_g = soft_elements(g);
      r.check("SE(F ⋒ G) = SE(F) ∩ SE(G)", soft_elements(meet) == set_intersection(se_f, se_g), d);
      r.check("SE(F ⋓ G) contains SE(F) ∪ SE(G)", soft_elements(join).includes(set_union(se_f, se_g)),
              d);
      r.check("⋓ of generated sets is generated by the union of the generators",
              join == generate(set_union(se_f, se_g)), d);
      r.check("⋒ of generated sets contains what the common generators generate",
              is_soft_subset(generate(set_intersection(se_f, se_g)), meet), d);
      if (small && !f.is_null() && !g.is_null()) {
        for (const auto& bf : generating_collections(f)) {
          for (const auto& bg : generating_collections(g)) {
            r.check("⋒ of generated sets contains what the common generators generate "
                    "(every generating collection)",
                    is_soft_subset(generate(set_intersection(bf, bg)), meet), d);
            r.check("⋓ of generated sets is generated by the union of the generators "
                    "(every generating collection)",
                    join == generate(set_union(bf, bg)), d);
          }
        }
      }
      r.check("complement of ⋓ is ⋒ of complements",
              complement(join) == elementary_intersection(complement(f), complement(g)), d);
      r.check("complement of ⋒ is ⋓ of complements",
              complement(meet) == elementary_union(complement(f), complement(g)), d);
    }
  }

  for (const auto& f : sets) {
    for (const auto& g : sets) {
      for (const auto& h : sets) {
        auto d = [&] { return show(f) + ", " + show(g) + ", " + show(h); };
        const std::vector<SoftSet> three{f, g, h};
        const SoftSet meet = elementary_intersection(ctx, three);
        const SoftSet join = elementary_union(ctx, three);
        r.check("pairwise ⋒ folding agrees with n-ary ⋒",
                elementary_intersection(elementary_intersection(f, g), h) == meet &&
                    elementary_intersection(f, elementary_intersection(g, h)) == meet,
                d);
        r.check("pairwise ⋓ folding agrees with n-ary ⋓",
                elementary_union(elementary_union(f, g), h) == join, d);
        const SoftSet pw = pointwise_intersection(pointwise_intersection(f, g), h);
        r.check("n-ary ⋒ equals pointwise intersection iff the latter is admissible",
                (meet == pw) == admissible(pw), d);
        r.check("n-ary ⋒ of generated sets contains what the common generators generate",
                is_soft_subset(generate(set_intersection(
                                   set_intersection(soft_elements(f), soft_elements(g)),
                                   soft_elements(h))),
                               meet),
                d);
        const std::vector<SoftSet> comps{complement(f), complement(g), complement(h)};
        r.check("complement of n-ary ⋓ is ⋒ of complements",
                complement(join) == elementary_intersection(ctx, comps), d);
        r.check("complement of n-ary ⋒ is ⋓ of complements",
                complement(meet) == elementary_union(ctx, comps), d);
      }
    }
  }
  return result;
}

SuiteResult topology_laws(std::size_t n, std::size_t m, std::size_t max_size) {
  SuiteResult result;
  result.name = "topology operators, n=" + std::to_string(n) + " m=" + std::to_string(m) +
                " families of size <= " + std::to_string(max_size);
  Recorder r(result);
  const auto ctx = make_context(n, m);
  const auto caps = roomy(max_size);
  const auto sets = enumerate_soft_sets(ctx, caps);
  const auto topologies = enumerate_topologies(ctx, Flavor::kCS, max_size, caps);
  const SoftSet null = SoftSet::null(ctx);
  const SoftSet full = SoftSet::absolute(ctx);
  r.note(std::to_string(topologies.size()) + " CS topologies");

  for (const auto& t : topologies) {
    auto dt = [&] { return "tau=" + show(t.opens()); };
    const auto closed = closed_family(t);
    r.check("Φ~ and X~ are closed", is_soft_closed(t, null) && is_soft_closed(t, full), dt);
    for (std::uint32_t mask = 1; mask < (1U << closed.size()); ++mask) {
      std::vector<SoftSet> pick;
      for (std::size_t i = 0; i < closed.size(); ++i) {
        if (mask >> i & 1U) pick.push_back(closed[i]);
      }
      const SoftSet meet = elementary_intersection(ctx, pick);
      r.check("any ⋒ of closed sets is closed", is_soft_closed(t, meet),
              [&] { return dt() + " closed=" + show(pick); });
    }
    r.check("closure of Φ~ is Φ~ and closure of X~ is X~",
            closure(t, null) == null && closure(t, full) == full, dt);

    std::vector<SoftSet> cl;
    std::vector<SoftSet> in;
    std::vector<SoftElementSet> in_elems;
    for (const auto& f : sets) {
      cl.push_back(closure(t, f));
      in.push_back(interior(t, f));
      in_elems.push_back(interior_elements(t, f));
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const SoftSet& f = sets[i];
      auto d = [&] { return dt() + " F=" + show(f); };
      r.check("F ⊆ cl F", is_soft_subset(f, cl[i]), d);
      r.check("F is closed iff F = cl F", is_soft_closed(t, f) == (f == cl[i]), d);
      r.check("cl cl F = cl F", closure(t, cl[i]) == cl[i], d);
      r.check("interior of F lies in F", is_soft_subset(in[i], f), d);
      const auto se = soft_elements(f);
      if (!f.is_null()) {
        r.check("non-null F is open iff every element of F is interior",
                t.is_open(f) == (in_elems[i] == se), d);
        bool nbd_of_all = true;
        for (const auto& x : se) nbd_of_all = nbd_of_all && is_nbd(t, f, x);
        r.check("non-null F is open iff F is a neighbourhood of each of its elements",
                t.is_open(f) == nbd_of_all, d);
      }
      std::vector<SoftSet> inside;
      for (const auto& g : t.opens()) {
        if (is_soft_subset(g, f)) inside.push_back(g);
      }
      r.check("interior is the ⋓ of the opens inside F, and is open",
              in[i] == elementary_union(ctx, inside) && t.is_open(in[i]), d);
      if (is_soft_closed(t, f)) {
        const auto limits = limiting_elements(t, f);
        r.check("closed sets contain their limiting elements",
                std::all_of(limits.begin(), limits.end(),
                            [&](const SoftElement& x) { return f.contains(x); }),
                d);
      }
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        const SoftSet& f = sets[i];
        const SoftSet& g = sets[j];
        auto d = [&] { return dt() + " F=" + show(f) + " G=" + show(g); };
        if (is_soft_subset(f, g)) {
          r.check("closure is monotone", is_soft_subset(cl[i], cl[j]), d);
          r.check("interior is monotone", is_soft_subset(in[i], in[j]), d);
        }
        const SoftSet join = elementary_union(f, g);
        const SoftSet meet = elementary_intersection(f, g);
        const SoftSet cl_join = closure(t, join);
        const SoftSet joined_cl = elementary_union(cl[i], cl[j]);
        r.check("cl F ⋓ cl G ⊆ cl(F ⋓ G)", is_soft_subset(joined_cl, cl_join), d);
        if (admissible(pointwise_complement(joined_cl))) {
          r.check("cl F ⋓ cl G = cl(F ⋓ G) when its relative complement is admissible",
                  joined_cl == cl_join, d);
        }
        r.check("cl(F ⋒ G) ⊆ cl F ⋒ cl G",
                is_soft_subset(closure(t, meet), elementary_intersection(cl[i], cl[j])), d);
        r.check("interior elements of F ⋓ G include those of F and of G",
                interior_elements(t, join).includes(set_union(in_elems[i], in_elems[j])), d);
        r.check("interior of F ⋓ G contains the ⋓ of the interiors",
                is_soft_subset(elementary_union(in[i], in[j]), interior(t, join)), d);
        r.check("interior elements of F ⋒ G include the common interior elements",
                interior_elements(t, meet).includes(set_intersection(in_elems[i], in_elems[j])),
                d);
      }
    }

    const auto report = check_nbd_operator(neighborhood_operator(t));
    static const char* kAxiom[] = {
        "neighbourhood systems are non-empty",
        "elements lie in each of their neighbourhoods",
        "supersets of neighbourhoods are neighbourhoods",
        "⋒ of two neighbourhoods is a neighbourhood",
        "each neighbourhood contains a neighbourhood of all its elements",
    };
    for (std::size_t k = 0; k < 5; ++k) r.check(kAxiom[k], report.axioms[k].holds, dt);

    bool pointwise_meets_admissible = true;
    for (const auto& f : t.opens()) {
      for (const auto& g : t.opens()) {
        pointwise_meets_admissible =
            pointwise_meets_admissible && admissible(pointwise_intersection(f, g));
      }
    }
    if (pointwise_meets_admissible) {
      r.check("CS topology with admissible pointwise meets is a per-parameter topology",
              validate(ctx, t.opens(), Flavor::kHazra).valid, dt);
    }
  }

  if (topologies.size() <= 400) {
    for (const auto& t1 : topologies) {
      for (const auto& t2 : topologies) {
        bool ok = true;
        try {
          intersect(t1, t2);
        } catch (const Error&) {
          ok = false;
        }
        r.check("intersection of two CS topologies is a CS topology", ok,
                [&] { return show(t1.opens()) + " ∩ " + show(t2.opens()); });
      }
    }
  }

  // Per-parameter topologies lift to CS topologies; enumerated over all soft
  // sets, so only where that domain stays small.
  if (n * m <= 4) {
    const std::size_t all = std::size_t{1} << (n * m);
    const auto hazra = enumerate_topologies(ctx, Flavor::kHazra, all, roomy(all));
    r.note(std::to_string(hazra.size()) + " per-parameter topologies");
    for (const auto& h : hazra) {
      std::vector<std::vector<Fiber>> per;
      for (const auto& fam : fiber_topologies(h)) per.push_back(fam.subsets);
      bool ok = true;
      try {
        const auto lifted = from_crisp(ctx, per);
        ok = validate(ctx, lifted.opens(), Flavor::kCS).valid;
      } catch (const Error&) {
        ok = false;
      }
      r.check("the admissible sets with open fibers form a CS topology", ok,
              [&] { return show(h.opens()); });
    }
  }
  return result;
}

SuiteResult continuity_laws(std::size_t n, std::size_t m, std::size_t max_size) {
  SuiteResult result;
  result.name = "soft functions, n=" + std::to_string(n) + " m=" + std::to_string(m);
  Recorder r(result);
  const auto ctx = make_context(n, m);
  const auto caps = roomy(max_size);
  const auto sets = enumerate_soft_sets(ctx, caps);
  const auto topologies = enumerate_topologies(ctx, Flavor::kCS, max_size, caps);

  std::vector<SoftFunction> functions;
  {
    std::vector<std::size_t> digits(n * m, 0);
    while (true) {
      std::vector<std::vector<std::size_t>> tables(m, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t p = 0; p < n; ++p) tables[a][p] = digits[a * n + p];
      }
      functions.push_back(SoftFunction::make(ctx, ctx, tables));
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  r.note(std::to_string(functions.size()) + " soft functions, " +
         std::to_string(topologies.size()) + " CS topologies");

  auto show_fn = [](const SoftFunction& f) {
    std::string out = "f=";
    for (const auto& row : f.tables()) {
      out += "[";
      for (std::size_t v : row) out += f.target()->point_label(v);
      out += "]";
    }
    return out;
  };

  for (const auto& f : functions) {
    const bool injective = classify_map(f).injective;
    for (const auto& a : sets) {
      auto d = [&] { return show_fn(f) + " F=" + show(a); };
      r.check("f f⁻¹(F) ⊆ F", is_soft_subset(image(f, preimage(f, a)), a), d);
      r.check("F ⊆ f⁻¹ f(F)", is_soft_subset(a, preimage(f, image(f, a))), d);
      for (const auto& b : sets) {
        auto d2 = [&] { return show_fn(f) + " F1=" + show(a) + " F2=" + show(b); };
        if (is_soft_subset(a, b)) {
          r.check("image is monotone", is_soft_subset(image(f, a), image(f, b)), d2);
          r.check("preimage is monotone", is_soft_subset(preimage(f, a), preimage(f, b)), d2);
        }
        const SoftSet join = elementary_union(a, b);
        const SoftSet meet = elementary_intersection(a, b);
        r.check("image of ⋓ is ⋓ of images",
                image(f, join) == elementary_union(image(f, a), image(f, b)), d2);
        r.check("image of ⋒ lies in ⋒ of images",
                is_soft_subset(image(f, meet), elementary_intersection(image(f, a), image(f, b))),
                d2);
        if (injective) {
          r.check("image of ⋒ is ⋒ of images for one-one f",
                  image(f, meet) == elementary_intersection(image(f, a), image(f, b)), d2);
        }
        const SoftSet pre_join = elementary_union(preimage(f, a), preimage(f, b));
        r.check("preimage of ⋓ is ⋓ of preimages", preimage(f, join) == pre_join, d2);
        r.check("preimage of ⋓ contains ⋓ of preimages",
                is_soft_subset(pre_join, preimage(f, join)), d2);
        r.check("preimage of ⋒ is ⋒ of preimages",
                preimage(f, meet) == elementary_intersection(preimage(f, a), preimage(f, b)), d2);
      }
    }
  }

  // Sub-bases of each topology as bitmasks over its open sets.
  std::vector<std::vector<std::uint32_t>> subbases(topologies.size());
  for (std::size_t k = 0; k < topologies.size(); ++k) {
    const auto& opens = topologies[k].opens();
    for (std::uint32_t mask = 0; mask < (1U << opens.size()); ++mask) {
      std::vector<SoftSet> pick;
      for (std::size_t i = 0; i < opens.size(); ++i) {
        if (mask >> i & 1U) pick.push_back(opens[i]);
      }
      if (is_subbase(topologies[k], pick)) subbases[k].push_back(mask);
    }
  }

  std::size_t closed_not_continuous = 0;
  std::size_t subbase_not_open = 0;
  for (const auto& f : functions) {
    const auto inv = f.inverse();
    const bool bijective = classify_map(f).bijective;
    for (std::size_t si = 0; si < topologies.size(); ++si) {
      const auto& src = topologies[si];
      for (std::size_t ti = 0; ti < topologies.size(); ++ti) {
        const auto& tgt = topologies[ti];
        auto d = [&] { return show_fn(f) + " src=" + show(src.opens()) + " tgt=" + show(tgt.opens()); };
        const bool pointwise = is_continuous(f, src, tgt, ContinuityCriterion::kPointwise);
        const bool open_pre = is_continuous(f, src, tgt, ContinuityCriterion::kPreimageOpen);
        const bool closed_pre = is_continuous(f, src, tgt, ContinuityCriterion::kClosedPreimage);
        std::uint32_t good = 0;
        for (std::size_t i = 0; i < tgt.opens().size(); ++i) {
          if (src.is_open(preimage(f, tgt.opens()[i]))) good |= 1U << i;
        }
        const bool via_subbase =
            std::any_of(subbases[ti].begin(), subbases[ti].end(),
                        [&](std::uint32_t s) { return (s & ~good) == 0; });
        r.check("pointwise continuity iff open preimages of opens", pointwise == open_pre, d);
        r.check("open preimages of opens iff some sub-base has open preimages",
                open_pre == via_subbase, d);
        r.check("open preimages of opens imply closed preimages of closed sets",
                !open_pre || closed_pre, d);
        if (closed_pre && !pointwise) ++closed_not_continuous;
        if (via_subbase && !open_pre) ++subbase_not_open;

        const auto homeo = is_homeomorphism(f, src, tgt);
        const bool cont = pointwise;
        const bool inv_cont =
            inv && is_continuous(*inv, tgt, src, ContinuityCriterion::kPointwise);
        const bool ii = bijective && cont && inv_cont;
        const bool iii = bijective && is_open_map(f, src, tgt) && cont;
        const bool iv = inv && is_homeomorphism(*inv, tgt, src).holds;
        r.check("homeomorphism iff bijective with f and f⁻¹ continuous", homeo.holds == ii, d);
        r.check("homeomorphism iff bijective, open and continuous", homeo.holds == iii, d);
        r.check("homeomorphism iff the inverse is a homeomorphism", homeo.holds == iv, d);
      }
    }
  }
  r.note(std::to_string(closed_not_continuous) +
         " instances with closed preimages of closed sets but not continuous");
  r.note(std::to_string(subbase_not_open) +
         " instances where a sub-base has open preimages but some open does not");
  r.check("some instance has closed preimages of closed sets without continuity",
          closed_not_continuous > 0, [] { return std::string("none found"); });
  return result;
}

SuiteResult separation_laws(std::size_t n, std::size_t m) {
  SuiteResult result;
  result.name = "separation, n=" + std::to_string(n) + " m=" + std::to_string(m);
  Recorder r(result);
  const auto ctx = make_context(n, m);
  const std::size_t domain = enumerate_soft_sets(ctx, roomy(8)).size();
  const auto topologies = enumerate_topologies(ctx, Flavor::kCS, domain, roomy(domain));
  r.note(std::to_string(topologies.size()) + " CS topologies");

  std::vector<SoftElement> elements;
  for_each_soft_element(ctx, [&](const SoftElement& x) { elements.push_back(x); });
  std::size_t regular_count = 0;
  std::size_t normal_count = 0;
  for (const auto& t : topologies) {
    auto d = [&] { return "tau=" + show(t.opens()); };
    const bool t0 = separation_axiom(t, SeparationLevel::kT0).holds;
    const bool t1 = separation_axiom(t, SeparationLevel::kT1).holds;
    const bool t2 = separation_axiom(t, SeparationLevel::kT2).holds;
    const bool regular = is_regular(t).holds;
    const bool normal = is_normal(t).holds;
    regular_count += regular;
    normal_count += normal;
    r.check("T2 implies T1", !t2 || t1, d);
    r.check("T1 implies T0", !t1 || t0, d);
    if (t1) {
      for (const auto& x : elements) {
        r.check("in a T1 space every singleton is closed", is_soft_closed(t, singleton(x)),
                [&] { return d() + " x=" + notation(x); });
      }
    }
    r.check("the regularity interpolation condition implies regular",
            !interpolation_condition(t, InterpolationKind::kRegularity).holds || regular, d);
    r.check("the normality interpolation condition implies normal",
            !interpolation_condition(t, InterpolationKind::kNormality).holds || normal, d);
  }
  r.note(std::to_string(regular_count) + " regular, " + std::to_string(normal_count) +
         " normal");

  const std::pair<Predicate, Predicate> converses[] = {
      {Predicate::kRegular, Predicate::kCond68},
      {Predicate::kNormal, Predicate::kCond611},
  };
  for (const auto& [pos, neg] : converses) {
    MinerGoal goal;
    goal.positive = pos;
    goal.negative = neg;
    goal.n = n;
    goal.m = m;
    const auto found = search(goal, EnumerationCaps{});
    bool verified = false;
    std::string witness = "none";
    if (found.found) {
      const ResolvedInstance ri(*found.witness);
      const auto fam = ri.family("tau");
      verified = evaluate_family_predicate(pos, ri.context(), fam) &&
                 !evaluate_family_predicate(neg, ri.context(), fam);
      witness = show(fam);
    }
    r.check("miner finds " + std::string(predicate_name(pos)) + " without " +
                std::string(predicate_name(neg)),
            verified, [&] { return witness; });
    if (verified) r.note(std::string(predicate_name(pos)) + " ∧ ¬" +
                         std::string(predicate_name(neg)) + " witness " + witness);
  }
  return result;
}

SuiteResult miner_laws(std::size_t max_n, std::size_t max_m) {
  SuiteResult result;
  result.name = "miner counts and determinism";
  Recorder r(result);
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t m = 1; m <= max_m; ++m) {
      const auto ctx = make_context(n, m);
      std::size_t expected = 1;
      for (std::size_t a = 0; a < m; ++a) expected *= (std::size_t{1} << n) - 1;
      ++expected;
      const std::size_t got = enumerate_soft_sets(ctx, roomy(8)).size();
      r.check("enumerate_soft_sets yields (2^n - 1)^m + 1 sets", got == expected, [&] {
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
               std::to_string(got) + " vs " + std::to_string(expected);
      });
    }
  }

  struct Goal {
    Predicate pos;
    Predicate neg;
    std::size_t n;
    std::size_t m;
  };
  const Goal goals[] = {
      {Predicate::kCsValid, Predicate::kSnValid, 3, 2},
      {Predicate::kSnValid, Predicate::kCsValid, 3, 2},
      {Predicate::kCsValid, Predicate::kHazraValid, 3, 2},
      {Predicate::kBase43Condition, Predicate::kIsBase, 2, 2},
      {Predicate::kBase45Conditions, Predicate::kIsBase, 2, 2},
      {Predicate::kRegular, Predicate::kCond68, 2, 2},
      {Predicate::kNormal, Predicate::kCond611, 2, 2},
      {Predicate::kContClosedPreimage, Predicate::kContPointwise, 2, 2},
      {Predicate::kT1, Predicate::kT2, 1, 1},
      {Predicate::kT0, Predicate::kT1, 2, 2},
  };
  for (const auto& g : goals) {
    std::vector<std::string> runs;
    for (std::size_t threads : {1, 1, 4}) {
      MinerGoal goal;
      goal.positive = g.pos;
      goal.negative = g.neg;
      goal.n = g.n;
      goal.m = g.m;
      goal.threads = threads;
      const auto found = search(goal, EnumerationCaps{});
      runs.push_back(found.found ? emit_instance(*found.witness) : std::string("NOT_FOUND"));
    }
    const std::string label = std::string(predicate_name(g.pos)) + " ∧ ¬" +
                              std::string(predicate_name(g.neg)) + " n=" + std::to_string(g.n) +
                              " m=" + std::to_string(g.m);
    r.check("identical goal and bounds give byte-identical witness files",
            runs[0] == runs[1] && runs[1] == runs[2], [&] { return label; });
    r.note(label + ": " + (runs[0] == "NOT_FOUND" ? "NOT_FOUND" : "witness found"));
  }
  return result;
}

}  // namespace suites
