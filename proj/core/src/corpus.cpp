#include "softtop/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>

#include "softtop/algebra.hpp"
#include "softtop/base.hpp"
#include "softtop/map.hpp"
#include "softtop/separation.hpp"

namespace softtop {

namespace {

namespace fs = std::filesystem;

// "FIX-3.12" -> {3, 12}; anything else sorts last by name.
std::pair<int, int> fixture_number(const std::string& name) {
  int major = 0;
  int minor = 0;
  if (std::sscanf(name.c_str(), "FIX-%d.%d", &major, &minor) == 2) return {major, minor};
  return {1 << 30, 0};
}

class Checks {
 public:
  explicit Checks(std::vector<CorpusCheck>& out) : out_(out) {}

  void expect(std::string description, bool passed, std::string detail = {}) {
    out_.push_back({std::move(description), passed, std::move(detail)});
  }

 private:
  std::vector<CorpusCheck>& out_;
};

// Soft set from per-parameter label lists.
SoftSet literal(const ContextPtr& ctx, const std::vector<std::vector<std::string>>& fibers) {
  std::vector<Fiber> bits(ctx->parameters(), 0);
  for (std::size_t a = 0; a < fibers.size() && a < bits.size(); ++a) {
    for (const auto& label : fibers[a]) {
      auto p = ctx->point_index(label);
      if (!p) throw Error(ErrorCode::kInvalidArgument, "fixture lacks point '" + label + "'");
      bits[a] |= Fiber{1} << *p;
    }
  }
  return SoftSet(ctx, bits);
}

SoftElement element(const ContextPtr& ctx, const std::vector<std::string>& labels) {
  std::vector<std::size_t> choices;
  for (const auto& label : labels) {
    auto p = ctx->point_index(label);
    if (!p) throw Error(ErrorCode::kInvalidArgument, "fixture lacks point '" + label + "'");
    choices.push_back(*p);
  }
  return SoftElement(ctx, choices);
}

// Element collections are stored as families of singleton soft sets.
SoftElementSet elements_of(const ResolvedInstance& ri, std::string_view family) {
  std::vector<SoftElement> out;
  for (const auto& s : ri.family(family)) {
    std::vector<std::size_t> choices;
    for (std::size_t a = 0; a < s.parameters(); ++a) {
      const Fiber f = s.fiber(a);
      if (f == 0 || (f & (f - 1)) != 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "family '" + std::string(family) + "' holds a non-singleton soft set");
      }
      choices.push_back(static_cast<std::size_t>(__builtin_ctzll(f)));
    }
    out.emplace_back(ri.context(), choices);
  }
  return SoftElementSet(ri.context(), std::move(out));
}

std::string show(const SoftElementSet& xs) {
  std::string out = "{";
  for (const auto& x : xs) {
    if (out.size() > 1) out += ", ";
    out += notation(x);
  }
  return out + "}";
}

std::string show(const std::vector<SoftSet>& family) {
  std::string out = "{";
  for (const auto& s : family) {
    if (out.size() > 1) out += ", ";
    out += notation(s);
  }
  return out + "}";
}

bool cs_valid(const ResolvedInstance& ri, std::string_view name) {
  return validate(ri.context(), ri.family(name), Flavor::kCS).valid;
}

using FixtureFn = std::function<void(const ResolvedInstance&, Checks&)>;

void fix_2_18(const ResolvedInstance& ri, Checks& c) {
  const auto b1 = elements_of(ri, "B1");
  const auto b2 = elements_of(ri, "B2");
  const SoftSet y1 = generate(b1);
  const SoftSet y2 = generate(b2);
  const SoftSet ss_meet = generate(set_intersection(b1, b2));
  c.expect("SS(B1 ∩ B2) is the null soft set", ss_meet.is_null(), notation(ss_meet));
  const SoftSet meet = elementary_intersection(y1, y2);
  c.expect("Y1 ⋒ Y2 = Y2", meet == y2, notation(meet) + " vs " + notation(y2));
  c.expect("Y1 ⋒ Y2 differs from SS(B1 ∩ B2)", meet != ss_meet);
}

void fix_2_20(const ResolvedInstance& ri, Checks& c) {
  const SoftSet y = ri.set("Y");
  const SoftSet z = ri.set("Z");
  const auto joined = soft_elements(elementary_union(y, z));
  const auto separate = set_union(soft_elements(y), soft_elements(z));
  c.expect("SE(Y ⋓ Z) has 4 soft elements", joined.size() == 4, show(joined));
  c.expect("SE(Y) ∪ SE(Z) has 2 soft elements", separate.size() == 2, show(separate));
  c.expect("SE(Y ⋓ Z) is exactly {x1, x2, x3, x4}", joined == elements_of(ri, "E_join"),
           show(joined));
  c.expect("SE(Y) ∪ SE(Z) is exactly {x1, x2}", separate == elements_of(ri, "E_union"),
           show(separate));
}

void fix_2_22(const ResolvedInstance& ri, Checks& c) {
  const SoftSet f = ri.set("F");
  const SoftSet g = ri.set("G");
  const SoftSet h = ri.set("H");
  const auto& ctx = ri.context();

  const SoftSet lhs1 = elementary_intersection(elementary_union(f, g), h);
  const SoftSet rhs1 =
      elementary_union(elementary_intersection(f, h), elementary_intersection(g, h));
  c.expect("(F ⋓ G) ⋒ H = H", lhs1 == h, notation(lhs1));
  c.expect("(F ⋒ H) ⋓ (G ⋒ H) = Φ~", rhs1.is_null(), notation(rhs1));
  c.expect("first distributive law fails", lhs1 != rhs1);

  const SoftSet lhs2 = elementary_union(elementary_intersection(f, h), g);
  const SoftSet rhs2 =
      elementary_intersection(elementary_union(f, g), elementary_union(h, g));
  const SoftSet expected = literal(ctx, {{"y"}, {"y", "z"}});
  c.expect("(F ⋒ H) ⋓ G = G", lhs2 == g, notation(lhs2));
  c.expect("(F ⋓ G) ⋒ (H ⋓ G) = ⟨{y}|{y,z}⟩", rhs2 == expected, notation(rhs2));
  c.expect("second distributive law fails", lhs2 != rhs2);
}

void fix_3_6(const ResolvedInstance& ri, Checks& c) {
  const auto t = ri.topology("tau");
  const SoftSet fc = elementary_complement(ri.set("F"));
  const SoftSet gc = elementary_complement(ri.set("G"));
  const auto closed = closed_family(t);
  const std::vector<SoftSet> expected = [&] {
    std::vector<SoftSet> v{SoftSet::null(ri.context()), SoftSet::absolute(ri.context()), fc, gc};
    std::sort(v.begin(), v.end());
    return v;
  }();
  c.expect("closed sets are Φ~, X~, Fᶜ, Gᶜ", closed == expected, show(closed));
  const SoftSet joined = elementary_union(fc, gc);
  c.expect("Fᶜ ⋓ Gᶜ is not soft closed", !is_soft_closed(t, joined), notation(joined));
}

void fix_3_8(const ResolvedInstance& ri, Checks& c) {
  const auto& ctx = ri.context();
  const auto tau = ri.family("tau");
  const auto tau_prime = ri.family("tauPrime");
  c.expect("tau is CS-valid", validate(ctx, tau, Flavor::kCS).valid);
  const auto sn = validate(ctx, tau, Flavor::kShabirNaz);
  const SoftSet witness = literal(ctx, {{}, {"z"}});
  const bool has_witness = std::any_of(sn.violations.begin(), sn.violations.end(),
                                       [&](const Violation& v) {
                                         return v.kind == Violation::Kind::kIntersectionNotClosed &&
                                                v.missing == witness;
                                       });
  c.expect("tau is SN-invalid", !sn.valid);
  c.expect("SN violation is the missing pointwise intersection ⟨∅|{z}⟩", has_witness);
  c.expect("tauPrime is SN-valid", validate(ctx, tau_prime, Flavor::kShabirNaz).valid);
  c.expect("tauPrime is CS-invalid", !validate(ctx, tau_prime, Flavor::kCS).valid);
  c.expect("tau is Hazra-invalid", !validate(ctx, tau, Flavor::kHazra).valid);
}

void fix_3_12(const ResolvedInstance& ri, Checks& c) {
  const auto& ctx = ri.context();
  c.expect("tau1 is CS-valid", cs_valid(ri, "tau1"));
  c.expect("tau2 is CS-valid", cs_valid(ri, "tau2"));
  std::vector<SoftSet> joined = ri.family("tau1");
  const auto second = ri.family("tau2");
  joined.insert(joined.end(), second.begin(), second.end());
  const auto report = validate(ctx, joined, Flavor::kCS, 64);
  const SoftSet h = literal(ctx, {{"x", "y"}, {"x", "y", "z"}});
  const bool has_h = std::any_of(report.violations.begin(), report.violations.end(),
                                 [&](const Violation& v) {
                                   return v.kind == Violation::Kind::kUnionNotClosed &&
                                          v.missing == h;
                                 });
  c.expect("tau1 ∪ tau2 is CS-invalid", !report.valid);
  c.expect("F1 ⋓ F2 = ⟨{x,y}|{x,y,z}⟩ is a missing union",
           has_h && elementary_union(ri.set("F1"), ri.set("F2")) == h);
}

void fix_3_15(const ResolvedInstance& ri, Checks& c) {
  const auto t = ri.topology("tau");
  const SoftSet p = ri.set("P");
  const SoftSet q = ri.set("Q");
  c.expect("P is soft closed", closure(t, p) == p, notation(closure(t, p)));
  c.expect("Q is soft closed", closure(t, q) == q, notation(closure(t, q)));
  const SoftSet v = elementary_union(closure(t, p), closure(t, q));
  const SoftSet w = closure(t, ri.set("PuQ"));
  c.expect("PuQ = P ⋓ Q", ri.set("PuQ") == elementary_union(p, q));
  c.expect("cl P ⋓ cl Q = ⟨{x,y,z}|{x,y}⟩",
           v == literal(ri.context(), {{"x", "y", "z"}, {"x", "y"}}), notation(v));
  c.expect("cl(P ⋓ Q) = X~", w.is_absolute(), notation(w));
}

void fix_3_18(const ResolvedInstance& ri, Checks& c) {
  const auto t = ri.topology("tau");
  const SoftSet cset = ri.set("C");
  const auto& ctx = ri.context();
  const auto limits = limiting_elements(t, cset);
  const SoftElementSet expected(ctx, {element(ctx, {"x", "y"}), element(ctx, {"x", "z"})});
  c.expect("limiting elements of C are exactly {(x,y), (x,z)}", limits == expected,
           show(limits));
  c.expect("C contains its limiting elements",
           std::all_of(limits.begin(), limits.end(),
                       [&](const SoftElement& x) { return cset.contains(x); }));
  c.expect("C is not soft closed", !is_soft_closed(t, cset));
}

void fix_4_2(const ResolvedInstance& ri, Checks& c) {
  const auto t = ri.topology("tau");
  const auto good = ri.family("B_good");
  const auto bad = ri.family("B_bad");
  c.expect("B_good is an open base", is_open_base(t, good).holds);
  c.expect("B_bad expresses every open as a union of members", covers_by_unions(t, bad).holds);
  c.expect("B_bad satisfies the three necessary base conditions",
           base_axioms(ri.context(), bad).all_hold());
  const auto check = is_open_base(t, bad);
  const SoftElement xbar = SoftElement::constant(ri.context(), 0);
  c.expect("B_bad is not an open base", !check.holds);
  c.expect("failure witness is x̄ inside F6",
           check.element == xbar && check.set == ri.set("F6"),
           (check.element ? notation(*check.element) : std::string("-")) + " in " +
               (check.set ? notation(*check.set) : std::string("-")));
}

void fix_5_9(const ResolvedInstance& ri, Checks& c) {
  const auto src = ri.topology("tau2");
  const auto tgt = ri.topology("tau1");
  const auto fn = ri.function("i");
  c.expect("closed-preimage criterion holds",
           is_continuous(fn, src, tgt, ContinuityCriterion::kClosedPreimage));
  c.expect("pointwise continuity fails",
           !is_continuous(fn, src, tgt, ContinuityCriterion::kPointwise));
  c.expect("preimage of F is not open", !src.is_open(preimage(fn, ri.set("F"))));
}

void fix_6_7(const ResolvedInstance& ri, Checks& c) {
  c.expect("tau is soft regular", is_regular(ri.topology("tau")).holds);
}

void fix_6_9(const ResolvedInstance& ri, Checks& c) {
  const auto t = ri.topology("tau");
  c.expect("tau is soft regular", is_regular(t).holds);
  const auto check = interpolation_condition(t, InterpolationKind::kRegularity);
  const SoftElement xbar = SoftElement::constant(ri.context(), 0);
  c.expect("regularity interpolation condition fails", !check.holds);
  c.expect("failure witness is (x̄, F1)",
           check.element == xbar && check.open == ri.set("F1"),
           (check.element ? notation(*check.element) : std::string("-")) + ", " +
               (check.open ? notation(*check.open) : std::string("-")));
}

void fix_6_12(const ResolvedInstance& ri, Checks& c) {
  const auto t = ri.topology("tau");
  c.expect("tau is soft normal", is_normal(t).holds);
  const auto check = interpolation_condition(t, InterpolationKind::kNormality);
  c.expect("normality interpolation condition fails", !check.holds);
  c.expect("failure witness is (F3, F1)",
           check.closed == ri.set("F3") && check.open == ri.set("F1"),
           (check.closed ? notation(*check.closed) : std::string("-")) + ", " +
               (check.open ? notation(*check.open) : std::string("-")));
}

const std::map<std::string, FixtureFn>& registry() {
  static const std::map<std::string, FixtureFn> fixtures = {
      {"FIX-2.18", fix_2_18}, {"FIX-2.20", fix_2_20}, {"FIX-2.22", fix_2_22},
      {"FIX-3.6", fix_3_6},   {"FIX-3.8", fix_3_8},   {"FIX-3.12", fix_3_12},
      {"FIX-3.15", fix_3_15}, {"FIX-3.18", fix_3_18}, {"FIX-4.2", fix_4_2},
      {"FIX-5.9", fix_5_9},   {"FIX-6.7", fix_6_7},   {"FIX-6.9", fix_6_9},
      {"FIX-6.12", fix_6_12},
  };
  return fixtures;
}

}  // namespace

bool FixtureResult::passed() const {
  return error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CorpusCheck& c) { return c.passed; });
}

bool CorpusReport::all_passed() const {
  return std::all_of(fixtures.begin(), fixtures.end(),
                     [](const FixtureResult& f) { return f.passed(); });
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kInvalidArgument, "fixture directory '" + dir + "' not found");
  }
  std::vector<CatalogEntry> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto path = entry.path();
    const std::string stem = path.stem().string();
    if (path.extension() != ".json" || stem.rfind("FIX-", 0) != 0) continue;
    out.push_back({stem, load_instance(path.string())});
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::make_pair(fixture_number(a.name), a.name) <
           std::make_pair(fixture_number(b.name), b.name);
  });
  return out;
}

CorpusReport verify_corpus(const std::vector<CatalogEntry>& catalog) {
  CorpusReport report;
  for (const auto& entry : catalog) {
    FixtureResult result;
    result.name = entry.name;
    auto it = registry().find(entry.name);
    if (it == registry().end()) {
      result.error = "no checks registered";
    } else {
      try {
        const ResolvedInstance ri(entry.file);
        Checks checks(result.checks);
        it->second(ri, checks);
      } catch (const std::exception& e) {
        result.error = e.what();
      }
    }
    report.fixtures.push_back(std::move(result));
  }
  return report;
}

}  // namespace softtop
