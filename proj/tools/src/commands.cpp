#include "commands.hpp"

#include <sstream>

#include "softtop/algebra.hpp"
#include "softtop/base.hpp"
#include "softtop/corpus.hpp"
#include "softtop/separation.hpp"

namespace softtop::cli {

namespace {

using json = nlohmann::ordered_json;

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string fiber_notation(const ContextPtr& ctx, Fiber f) {
  std::string out = "{";
  for (std::size_t p = 0; p < ctx->points(); ++p) {
    if ((f >> p & 1U) == 0) continue;
    if (out.size() > 1) out += ",";
    out += ctx->point_label(p);
  }
  return out + "}";
}

json names(const ResolvedInstance& ri, const std::vector<SoftSet>& family) {
  json out = json::array();
  for (const auto& s : family) out.push_back(ri.display(s));
  return out;
}

std::string joined(const json& list) {
  std::string out;
  for (const auto& item : list) {
    if (!out.empty()) out += ", ";
    out += item.get<std::string>();
  }
  return "[" + out + "]";
}

json optional_set(const ResolvedInstance& ri, const std::optional<SoftSet>& s) {
  return s ? json(ri.display(*s)) : json(nullptr);
}

json optional_element(const std::optional<SoftElement>& x) {
  return x ? json(notation(*x)) : json(nullptr);
}

std::string text_of(const json& v) { return v.is_null() ? "-" : v.get<std::string>(); }

}  // namespace

Flavor parse_flavor(const std::string& name) {
  for (auto f : {Flavor::kCS, Flavor::kShabirNaz, Flavor::kHazra}) {
    if (flavor_name(f) == name) return f;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown definition '" + name + "' (cs|sn|hazra)");
}

Report validate_command(const ResolvedInstance& ri, const std::string& topology, Flavor flavor) {
  const auto& ctx = ri.context();
  const auto report = validate(ctx, ri.family(topology), flavor);
  Report out;
  out.json["valid"] = report.valid;
  out.json["flavor"] = std::string(flavor_name(flavor));
  out.json["violations"] = json::array();
  std::ostringstream text;
  text << "topology: " << topology << "\n";
  text << "flavor: " << flavor_name(flavor) << "\n";
  text << "valid: " << yes_no(report.valid) << "\n";
  for (const auto& v : report.violations) {
    json entry;
    entry["kind"] = std::string(violation_kind_name(v.kind));
    entry["members"] = names(ri, v.members);
    if (v.missing) {
      entry["missing"] = ri.display(*v.missing);
    } else if (v.missing_fiber) {
      entry["missing"] = fiber_notation(ctx, *v.missing_fiber) + "@" +
                         ctx->parameter_label(v.parameter.value_or(0));
    } else {
      entry["missing"] = nullptr;
    }
    text << "violation: " << entry["kind"].get<std::string>()
         << " members=" << joined(entry["members"])
         << " missing=" << text_of(entry["missing"]) << "\n";
    out.json["violations"].push_back(std::move(entry));
  }
  if (report.total_violations > report.violations.size()) {
    text << "(" << report.total_violations - report.violations.size()
         << " further violations not shown)\n";
  }
  out.text = text.str();
  return out;
}

Report closed_command(const ResolvedInstance& ri, const std::string& topology) {
  const auto t = ri.topology(topology);
  const auto closed = closed_family(t);
  Report out;
  out.json["topology"] = topology;
  out.json["closed"] = json::array();
  std::ostringstream text;
  for (const auto& k : closed) {
    out.json["closed"].push_back({{"name", ri.display(k)}, {"set", notation(k)}});
    text << "closed: " << ri.display(k);
    if (ri.display(k) != notation(k)) text << " = " << notation(k);
    text << "\n";
  }
  out.text = text.str();
  return out;
}

Report set_operator_command(const ResolvedInstance& ri, const std::string& topology,
                            const std::string& set, SetOperator op) {
  const auto t = ri.topology(topology);
  const SoftSet f = ri.set(set);
  require_admissible(f, "set operator");
  SoftSet result = f;
  const char* name = "";
  switch (op) {
    case SetOperator::kClosure:
      result = closure(t, f);
      name = "closure";
      break;
    case SetOperator::kInterior:
      result = interior(t, f);
      name = "interior";
      break;
    case SetOperator::kDerived:
      result = derived_set(t, f);
      name = "derived";
      break;
  }
  Report out;
  out.json["operator"] = name;
  out.json["set"] = set;
  out.json["result"] = ri.display(result);
  out.json["notation"] = notation(result);
  out.text = ri.display(result) + "\n";
  if (op == SetOperator::kDerived) {
    json elements = json::array();
    for (const auto& x : limiting_elements(t, f)) elements.push_back(notation(x));
    out.json["limiting_elements"] = elements;
    std::string list;
    for (const auto& e : elements) list += (list.empty() ? "" : ", ") + e.get<std::string>();
    out.text += "limiting elements: {" + list + "}\n";
  }
  return out;
}

Report base_command(const ResolvedInstance& ri, const std::string& topology,
                    const std::string& candidate) {
  const auto t = ri.topology(topology);
  const auto b = ri.family(candidate);
  const auto base = is_open_base(t, b);
  const auto covers = covers_by_unions(t, b);
  const auto axioms = base_axioms(ri.context(), b);
  Report out;
  out.json["open_base"] = base.holds;
  out.json["failure"] = std::string(base_failure_name(base.failure));
  out.json["element"] = optional_element(base.element);
  out.json["set"] = optional_set(ri, base.set);
  out.json["covers_by_unions"] = covers.holds;
  out.json["has_null"] = axioms.has_null;
  out.json["covers_absolute"] = axioms.covers_absolute;
  out.json["refines_intersections"] = axioms.refines_intersections;
  std::ostringstream text;
  text << "open_base: " << yes_no(base.holds) << "\n";
  if (!base.holds) {
    text << "failure: " << base_failure_name(base.failure) << " element="
         << text_of(out.json["element"]) << " set=" << text_of(out.json["set"]) << "\n";
  }
  text << "covers_by_unions: " << yes_no(covers.holds) << "\n";
  text << "has_null: " << yes_no(axioms.has_null) << "\n";
  text << "covers_absolute: " << yes_no(axioms.covers_absolute) << "\n";
  text << "refines_intersections: " << yes_no(axioms.refines_intersections) << "\n";
  out.text = text.str();
  return out;
}

Report subbase_command(const ResolvedInstance& ri, const std::string& topology,
                       const std::string& candidate) {
  const auto t = ri.topology(topology);
  const auto s = ri.family(candidate);
  const bool holds = is_subbase(t, s);
  const auto generated = intersection_closure(ri.context(), s);
  Report out;
  out.json["subbase"] = holds;
  out.json["intersections"] = names(ri, generated);
  out.text = "subbase: " + yes_no(holds) + "\nintersections: " +
             joined(out.json["intersections"]) + "\n";
  return out;
}

Report axioms_command(const ResolvedInstance& ri, const std::string& topology) {
  const auto t = ri.topology(topology);
  const auto t0 = separation_axiom(t, SeparationLevel::kT0);
  const auto t1 = separation_axiom(t, SeparationLevel::kT1);
  const auto t2 = separation_axiom(t, SeparationLevel::kT2);
  const auto regular = is_regular(t);
  const auto normal = is_normal(t);
  const auto cond_regular = interpolation_condition(t, InterpolationKind::kRegularity);
  const auto cond_normal = interpolation_condition(t, InterpolationKind::kNormality);

  const std::vector<std::pair<std::string, bool>> verdicts = {
      {"T0", t0.holds},
      {"T1", t1.holds},
      {"T2", t2.holds},
      {"regular", regular.holds},
      {"T3", regular.holds && t1.holds},
      {"normal", normal.holds},
      {"T4", normal.holds && t1.holds},
      {"COND_68", cond_regular.holds},
      {"COND_611", cond_normal.holds},
  };
  Report out;
  std::ostringstream text;
  for (const auto& [name, holds] : verdicts) {
    out.json[name] = holds;
    text << name << ": " << yes_no(holds) << "\n";
  }
  json witnesses;
  if (!cond_regular.holds) {
    witnesses["COND_68"] = {{"element", optional_element(cond_regular.element)},
                            {"open", optional_set(ri, cond_regular.open)}};
    text << "COND_68 witness: " << notation(*cond_regular.element) << " in "
         << ri.display(*cond_regular.open) << "\n";
  }
  if (!cond_normal.holds) {
    witnesses["COND_611"] = {{"closed", optional_set(ri, cond_normal.closed)},
                             {"open", optional_set(ri, cond_normal.open)}};
    text << "COND_611 witness: " << ri.display(*cond_normal.closed) << " inside "
         << ri.display(*cond_normal.open) << "\n";
  }
  if (!witnesses.is_null()) out.json["witnesses"] = witnesses;
  const std::string note =
      "COND_68 (an open V with x in V and cl V inside U, for every open U containing x) "
      "implies regular; COND_611 (the same with a closed set in place of x) implies "
      "normal. Neither converse holds in general.";
  out.json["note"] = note;
  text << "note: " << note << "\n";
  out.text = text.str();
  return out;
}

Report continuity_command(const ResolvedInstance& ri, const std::string& fn,
                          const std::string& from, const std::string& to,
                          std::optional<ContinuityCriterion> criterion) {
  const auto f = ri.function(fn);
  const auto src = ri.topology_in(from, f.source());
  const auto tgt = ri.topology_in(to, f.target());
  std::vector<ContinuityCriterion> criteria;
  if (criterion) {
    criteria.push_back(*criterion);
  } else {
    criteria = {ContinuityCriterion::kPointwise, ContinuityCriterion::kPreimageOpen,
                ContinuityCriterion::kSubbase, ContinuityCriterion::kClosedPreimage};
  }
  Report out;
  std::ostringstream text;
  for (auto c : criteria) {
    const bool holds = is_continuous(f, src, tgt, c);
    out.json[std::string(criterion_name(c))] = holds;
    text << criterion_name(c) << ": " << yes_no(holds) << "\n";
  }
  out.text = text.str();
  return out;
}

Report mine_command(const MinerGoal& goal, const EnumerationCaps& caps) {
  const auto result = search(goal, caps);
  Report out;
  if (result.found) {
    const std::string doc = emit_instance(*result.witness);
    out.json = json::parse(doc);
    out.text = "found: true\n" + doc;
  } else {
    out.json["found"] = false;
    out.text = "found: false\n";
  }
  return out;
}

Report corpus_command(const std::string& dir) {
  const auto report = verify_corpus(load_catalog(dir));
  Report out;
  out.json["passed"] = report.all_passed();
  out.json["fixtures"] = json::array();
  std::ostringstream text;
  std::size_t passed = 0;
  for (const auto& fixture : report.fixtures) {
    json entry;
    entry["name"] = fixture.name;
    entry["passed"] = fixture.passed();
    if (!fixture.error.empty()) entry["error"] = fixture.error;
    entry["checks"] = json::array();
    text << fixture.name << ": " << (fixture.passed() ? "PASS" : "FAIL") << "\n";
    if (!fixture.error.empty()) text << "  error: " << fixture.error << "\n";
    for (const auto& check : fixture.checks) {
      entry["checks"].push_back(
          {{"description", check.description}, {"passed", check.passed}, {"detail", check.detail}});
      text << "  [" << (check.passed ? "ok" : "FAILED") << "] " << check.description;
      if (!check.passed && !check.detail.empty()) text << " (observed " << check.detail << ")";
      text << "\n";
    }
    if (fixture.passed()) ++passed;
    out.json["fixtures"].push_back(std::move(entry));
  }
  text << passed << "/" << report.fixtures.size() << " fixtures passed\n";
  out.text = text.str();
  return out;
}

}  // namespace softtop::cli
