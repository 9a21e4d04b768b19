#include "softtop/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace softtop {

namespace {

// ordered_json keeps object members in file order, which fixes the order of
// named soft sets, families and functions.
using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kSections[] = {"universe",   "parameters", "target_universe",
                                     "soft_sets",  "topologies", "functions"};

bool is_reserved(std::string_view name) {
  return name == kNullName || name == kAbsoluteName;
}

std::size_t line_at(std::string_view text, std::size_t pos) {
  pos = std::min(pos, text.size());
  return static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n')) + 1;
}

// Best-effort line lookup: finds each quoted path segment in turn, starting
// after the previous hit. `occurrence` selects a repeated final segment.
std::size_t locate(std::string_view text, const std::vector<std::string>& path,
                   std::size_t occurrence = 1) {
  std::size_t pos = 0;
  std::size_t found = std::string_view::npos;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const std::string needle = "\"" + path[i] + "\"";
    const std::size_t repeats = i + 1 == path.size() ? occurrence : 1;
    for (std::size_t r = 0; r < repeats; ++r) {
      const std::size_t hit = text.find(needle, pos);
      if (hit == std::string_view::npos) return found == std::string_view::npos ? 0 : line_at(text, found);
      found = hit;
      pos = hit + needle.size();
    }
  }
  return found == std::string_view::npos ? 0 : line_at(text, found);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  InstanceFile run() {
    json root = parse_json();
    if (!issues_.empty()) throw InstanceError(issues_);
    if (!root.is_object()) {
      add(IssueCode::kSchema, "instance must be a JSON object", 1);
      throw InstanceError(issues_);
    }
    for (const auto& [key, value] : root.items()) {
      if (std::find_if(std::begin(kSections), std::end(kSections),
                       [&](const char* s) { return key == s; }) == std::end(kSections)) {
        add(IssueCode::kSchema, "unknown field '" + key + "'", locate(text_, {key}));
      }
    }

    InstanceFile out;
    out.universe = label_list(root, "universe", true);
    out.parameters = label_list(root, "parameters", true);
    if (root.contains("target_universe")) {
      out.target_universe = label_list(root, "target_universe", true);
    }
    if (!issues_.empty()) throw InstanceError(issues_);

    build_label_order(out);
    read_soft_sets(root, out);
    read_topologies(root, out);
    read_functions(root, out);
    if (!issues_.empty()) throw InstanceError(issues_);
    return out;
  }

 private:
  void add(IssueCode code, std::string message, std::size_t line) {
    issues_.push_back({code, std::move(message), line});
  }

  json parse_json() {
    std::string section;
    std::map<std::string, std::set<std::string>> seen;
    std::map<std::string, std::size_t> top_seen;
    json::parser_callback_t cb = [&](int depth, json::parse_event_t event, json& parsed) {
      if (event != json::parse_event_t::key) return true;
      const std::string key = parsed.get<std::string>();
      if (depth == 1) {
        section = key;
        if (++top_seen[key] > 1) {
          add(IssueCode::kDuplicateName, "field '" + key + "' appears more than once",
              locate(text_, {key}, top_seen[key]));
        }
      } else if (depth == 2 &&
                 (section == "soft_sets" || section == "topologies" || section == "functions")) {
        if (!seen[section].insert(key).second) {
          add(IssueCode::kDuplicateName,
              "name '" + key + "' is defined more than once in " + section,
              locate(text_, {section, key}, 2));
        }
      }
      return true;
    };
    try {
      return json::parse(text_.begin(), text_.end(), cb);
    } catch (const json::parse_error& e) {
      add(IssueCode::kSyntax, e.what(), line_at(text_, e.byte == 0 ? 0 : e.byte - 1));
      return json();
    }
  }

  std::vector<std::string> label_list(const json& root, const std::string& field,
                                      bool required) {
    std::vector<std::string> labels;
    if (!root.contains(field)) {
      if (required) add(IssueCode::kSchema, "missing field '" + field + "'", 0);
      return labels;
    }
    const json& value = root.at(field);
    const std::size_t line = locate(text_, {field});
    if (!value.is_array() || value.empty()) {
      add(IssueCode::kSchema, "'" + field + "' must be a non-empty list of labels", line);
      return labels;
    }
    for (const auto& v : value) {
      if (!v.is_string()) {
        add(IssueCode::kSchema, "'" + field + "' entries must be strings", line);
        continue;
      }
      const std::string label = v.get<std::string>();
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
        add(IssueCode::kDuplicateLabel, "label '" + label + "' repeated in " + field,
            locate(text_, {field, label}, 2));
        continue;
      }
      labels.push_back(label);
    }
    const std::size_t limit = field == "parameters" ? kMaxParameters : kMaxPoints;
    if (labels.size() > limit) {
      add(IssueCode::kSchema,
          "'" + field + "' has more than " + std::to_string(limit) + " labels", line);
    }
    return labels;
  }

  void build_label_order(const InstanceFile& out) {
    for (const auto& l : out.universe) rank_.emplace(l, rank_.size());
    if (out.target_universe) {
      for (const auto& l : *out.target_universe) rank_.emplace(l, rank_.size());
    }
  }

  std::optional<std::size_t> parameter_index(const InstanceFile& out, const std::string& p) {
    auto it = std::find(out.parameters.begin(), out.parameters.end(), p);
    if (it == out.parameters.end()) return std::nullopt;
    return static_cast<std::size_t>(it - out.parameters.begin());
  }

  void read_soft_sets(const json& root, InstanceFile& out) {
    if (!root.contains("soft_sets")) return;
    const json& section = root.at("soft_sets");
    if (!section.is_object()) {
      add(IssueCode::kSchema, "'soft_sets' must be an object", locate(text_, {"soft_sets"}));
      return;
    }
    for (const auto& [name, body] : section.items()) {
      const std::size_t line = locate(text_, {"soft_sets", name});
      if (is_reserved(name)) {
        add(IssueCode::kReservedName, "'" + name + "' is reserved and cannot be redefined",
            line);
        continue;
      }
      if (!body.is_object()) {
        add(IssueCode::kSchema, "soft set '" + name + "' must map parameters to label lists",
            line);
        continue;
      }
      InstanceFile::NamedSoftSet set{name, std::vector<std::vector<std::string>>(
                                               out.parameters.size())};
      std::vector<bool> present(out.parameters.size(), false);
      for (const auto& [param, labels] : body.items()) {
        const auto a = parameter_index(out, param);
        if (!a) {
          add(IssueCode::kUnknownParameter,
              "soft set '" + name + "' uses unknown parameter '" + param + "'",
              locate(text_, {"soft_sets", name, param}));
          continue;
        }
        present[*a] = true;
        if (!labels.is_array()) {
          add(IssueCode::kSchema,
              "fiber '" + param + "' of soft set '" + name + "' must be a list of labels",
              locate(text_, {"soft_sets", name, param}));
          continue;
        }
        std::vector<std::string> fiber;
        for (const auto& l : labels) {
          if (!l.is_string()) {
            add(IssueCode::kSchema, "fiber labels must be strings",
                locate(text_, {"soft_sets", name, param}));
            continue;
          }
          const std::string label = l.get<std::string>();
          if (!rank_.count(label)) {
            add(IssueCode::kUnknownLabel,
                "soft set '" + name + "' uses label '" + label + "' outside the universe",
                locate(text_, {"soft_sets", name, param, label}));
            continue;
          }
          fiber.push_back(label);
        }
        std::sort(fiber.begin(), fiber.end(), [&](const std::string& l, const std::string& r) {
          return rank_.at(l) < rank_.at(r);
        });
        fiber.erase(std::unique(fiber.begin(), fiber.end()), fiber.end());
        set.fibers[*a] = std::move(fiber);
      }
      for (std::size_t a = 0; a < present.size(); ++a) {
        if (!present[a]) {
          add(IssueCode::kMissingFiber,
              "soft set '" + name + "' has no fiber for parameter '" + out.parameters[a] + "'",
              line);
        }
      }
      out.soft_sets.push_back(std::move(set));
    }
  }

  void read_topologies(const json& root, InstanceFile& out) {
    if (!root.contains("topologies")) return;
    const json& section = root.at("topologies");
    if (!section.is_object()) {
      add(IssueCode::kSchema, "'topologies' must be an object", locate(text_, {"topologies"}));
      return;
    }
    for (const auto& [name, members] : section.items()) {
      const std::size_t line = locate(text_, {"topologies", name});
      if (is_reserved(name)) {
        add(IssueCode::kReservedName, "'" + name + "' is reserved and cannot be redefined",
            line);
        continue;
      }
      if (!members.is_array()) {
        add(IssueCode::kSchema, "family '" + name + "' must be a list of soft-set names", line);
        continue;
      }
      InstanceFile::NamedFamily family{name, {}};
      for (const auto& m : members) {
        if (!m.is_string()) {
          add(IssueCode::kSchema, "family members must be soft-set names", line);
          continue;
        }
        const std::string member = m.get<std::string>();
        const bool known =
            is_reserved(member) ||
            std::any_of(out.soft_sets.begin(), out.soft_sets.end(),
                        [&](const InstanceFile::NamedSoftSet& s) { return s.name == member; });
        if (!known) {
          add(IssueCode::kUnknownName,
              "family '" + name + "' refers to unknown soft set '" + member + "'",
              locate(text_, {"topologies", name, member}));
          continue;
        }
        family.members.push_back(member);
      }
      out.topologies.push_back(std::move(family));
    }
  }

  void read_functions(const json& root, InstanceFile& out) {
    if (!root.contains("functions")) return;
    const json& section = root.at("functions");
    if (!section.is_object()) {
      add(IssueCode::kSchema, "'functions' must be an object", locate(text_, {"functions"}));
      return;
    }
    const auto& target = out.target_universe ? *out.target_universe : out.universe;
    for (const auto& [name, body] : section.items()) {
      const std::size_t line = locate(text_, {"functions", name});
      if (is_reserved(name)) {
        add(IssueCode::kReservedName, "'" + name + "' is reserved and cannot be redefined",
            line);
        continue;
      }
      if (!body.is_object()) {
        add(IssueCode::kSchema, "function '" + name + "' must map parameters to tables", line);
        continue;
      }
      InstanceFile::NamedFunction fn{
          name, std::vector<std::vector<std::string>>(out.parameters.size())};
      std::vector<bool> present(out.parameters.size(), false);
      for (const auto& [param, table] : body.items()) {
        const std::size_t pline = locate(text_, {"functions", name, param});
        const auto a = parameter_index(out, param);
        if (!a) {
          add(IssueCode::kUnknownParameter,
              "function '" + name + "' uses unknown parameter '" + param + "'", pline);
          continue;
        }
        present[*a] = true;
        if (!table.is_object()) {
          add(IssueCode::kSchema,
              "table '" + param + "' of function '" + name + "' must map labels to labels",
              pline);
          continue;
        }
        std::map<std::string, std::string> values;
        for (const auto& [from, to] : table.items()) {
          if (std::find(out.universe.begin(), out.universe.end(), from) == out.universe.end()) {
            add(IssueCode::kUnknownLabel,
                "function '" + name + "' maps label '" + from + "' outside the universe",
                locate(text_, {"functions", name, param, from}));
            continue;
          }
          if (!to.is_string() ||
              std::find(target.begin(), target.end(), to.get<std::string>()) == target.end()) {
            add(IssueCode::kUnknownLabel,
                "function '" + name + "' sends '" + from + "' outside the target universe",
                locate(text_, {"functions", name, param, from}));
            continue;
          }
          values[from] = to.get<std::string>();
        }
        std::vector<std::string> row;
        for (const auto& p : out.universe) {
          auto it = values.find(p);
          if (it == values.end()) {
            add(IssueCode::kNonTotalFunction,
                "function '" + name + "' has no value for '" + p + "' at parameter '" +
                    param + "'",
                pline);
            continue;
          }
          row.push_back(it->second);
        }
        fn.tables[*a] = std::move(row);
      }
      for (std::size_t a = 0; a < present.size(); ++a) {
        if (!present[a]) {
          add(IssueCode::kNonTotalFunction,
              "function '" + name + "' has no table for parameter '" + out.parameters[a] + "'",
              line);
        }
      }
      out.functions.push_back(std::move(fn));
    }
  }

  std::string_view text_;
  std::vector<InstanceIssue> issues_;
  std::map<std::string, std::size_t> rank_;
};

std::string summarize(const std::vector<InstanceIssue>& issues) {
  std::ostringstream out;
  out << "invalid instance";
  for (const auto& issue : issues) {
    out << "\n  " << issue_code_name(issue.code);
    if (issue.line != 0) out << " (line " << issue.line << ")";
    out << ": " << issue.message;
  }
  return out.str();
}

[[noreturn]] void fail(IssueCode code, std::string message) {
  throw InstanceError({{code, std::move(message), 0}});
}

}  // namespace

std::string_view issue_code_name(IssueCode code) {
  switch (code) {
    case IssueCode::kSyntax: return "SYNTAX";
    case IssueCode::kSchema: return "SCHEMA";
    case IssueCode::kReservedName: return "RESERVED_NAME";
    case IssueCode::kUnknownLabel: return "UNKNOWN_LABEL";
    case IssueCode::kUnknownName: return "UNKNOWN_NAME";
    case IssueCode::kDuplicateName: return "DUPLICATE_NAME";
    case IssueCode::kDuplicateLabel: return "DUPLICATE_LABEL";
    case IssueCode::kNonTotalFunction: return "NON_TOTAL_FUNCTION";
    case IssueCode::kUnknownParameter: return "UNKNOWN_PARAMETER";
    case IssueCode::kMissingFiber: return "MISSING_FIBER";
  }
  return "?";
}

InstanceError::InstanceError(std::vector<InstanceIssue> issues)
    : Error(ErrorCode::kInstance, summarize(issues)), issues_(std::move(issues)) {}

InstanceFile parse_instance(std::string_view text) { return Parser(text).run(); }

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(IssueCode::kSyntax, "cannot read instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string emit_instance(const InstanceFile& instance) {
  ordered_json root;
  root["universe"] = instance.universe;
  root["parameters"] = instance.parameters;
  if (instance.target_universe) root["target_universe"] = *instance.target_universe;

  ordered_json sets = ordered_json::object();
  for (const auto& s : instance.soft_sets) {
    ordered_json body = ordered_json::object();
    for (std::size_t a = 0; a < instance.parameters.size(); ++a) {
      body[instance.parameters[a]] = s.fibers.at(a);
    }
    sets[s.name] = std::move(body);
  }
  root["soft_sets"] = std::move(sets);

  ordered_json families = ordered_json::object();
  for (const auto& f : instance.topologies) families[f.name] = f.members;
  root["topologies"] = std::move(families);

  ordered_json functions = ordered_json::object();
  for (const auto& fn : instance.functions) {
    ordered_json body = ordered_json::object();
    for (std::size_t a = 0; a < instance.parameters.size(); ++a) {
      ordered_json table = ordered_json::object();
      for (std::size_t p = 0; p < instance.universe.size(); ++p) {
        table[instance.universe[p]] = fn.tables.at(a).at(p);
      }
      body[instance.parameters[a]] = std::move(table);
    }
    functions[fn.name] = std::move(body);
  }
  root["functions"] = std::move(functions);
  return root.dump(2) + "\n";
}

ResolvedInstance::ResolvedInstance(InstanceFile file) : file_(std::move(file)) {
  try {
    ctx_ = Context::make(file_.universe, file_.parameters);
    target_ctx_ =
        file_.target_universe ? Context::make(*file_.target_universe, file_.parameters) : ctx_;
  } catch (const Error& e) {
    fail(IssueCode::kSchema, e.what());
  }
}

bool ResolvedInstance::has_set(std::string_view name) const {
  return is_reserved(name) ||
         std::any_of(file_.soft_sets.begin(), file_.soft_sets.end(),
                     [&](const auto& s) { return s.name == name; });
}

bool ResolvedInstance::has_family(std::string_view name) const {
  return std::any_of(file_.topologies.begin(), file_.topologies.end(),
                     [&](const auto& f) { return f.name == name; });
}

bool ResolvedInstance::has_function(std::string_view name) const {
  return std::any_of(file_.functions.begin(), file_.functions.end(),
                     [&](const auto& f) { return f.name == name; });
}

SoftSet ResolvedInstance::set_in(std::string_view name, const ContextPtr& ctx) const {
  if (name == kNullName) return SoftSet::null(ctx);
  if (name == kAbsoluteName) return SoftSet::absolute(ctx);
  auto it = std::find_if(file_.soft_sets.begin(), file_.soft_sets.end(),
                         [&](const auto& s) { return s.name == name; });
  if (it == file_.soft_sets.end()) {
    fail(IssueCode::kUnknownName, "unknown soft set '" + std::string(name) + "'");
  }
  std::vector<Fiber> fibers(ctx->parameters(), 0);
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    for (const auto& label : it->fibers.at(a)) {
      const auto p = ctx->point_index(label);
      if (!p) {
        fail(IssueCode::kUnknownLabel, "soft set '" + std::string(name) + "' uses label '" +
                                           label + "' outside the universe it is used over");
      }
      fibers[a] |= Fiber{1} << *p;
    }
  }
  return SoftSet(ctx, fibers);
}

std::vector<SoftSet> ResolvedInstance::family_in(std::string_view name,
                                                 const ContextPtr& ctx) const {
  auto it = std::find_if(file_.topologies.begin(), file_.topologies.end(),
                         [&](const auto& f) { return f.name == name; });
  if (it == file_.topologies.end()) {
    fail(IssueCode::kUnknownName, "unknown topology '" + std::string(name) + "'");
  }
  std::vector<SoftSet> out;
  for (const auto& member : it->members) out.push_back(set_in(member, ctx));
  return out;
}

SoftTopology ResolvedInstance::topology(std::string_view name, Flavor flavor) const {
  return SoftTopology::make(ctx_, family(name), flavor);
}

SoftTopology ResolvedInstance::topology_in(std::string_view name,
                                           const ContextPtr& ctx) const {
  return SoftTopology::make(ctx, family_in(name, ctx));
}

SoftFunction ResolvedInstance::function(std::string_view name) const {
  auto it = std::find_if(file_.functions.begin(), file_.functions.end(),
                         [&](const auto& f) { return f.name == name; });
  if (it == file_.functions.end()) {
    fail(IssueCode::kUnknownName, "unknown function '" + std::string(name) + "'");
  }
  std::vector<std::vector<std::size_t>> tables;
  for (const auto& row : it->tables) {
    std::vector<std::size_t> t;
    for (const auto& label : row) t.push_back(*target_ctx_->point_index(label));
    tables.push_back(std::move(t));
  }
  return SoftFunction::make(ctx_, target_ctx_, std::move(tables));
}

std::string ResolvedInstance::display(const SoftSet& s) const {
  if (s.is_null()) return std::string(kNullName);
  if (s.is_absolute()) return std::string(kAbsoluteName);
  for (const auto& named : file_.soft_sets) {
    try {
      if (set_in(named.name, s.context()) == s) return named.name;
    } catch (const InstanceError&) {
      // labels outside this context: cannot match
    }
  }
  return notation(s);
}

std::string notation(const SoftSet& s) {
  const auto& ctx = *s.context();
  std::string out = "⟨";
  for (std::size_t a = 0; a < s.parameters(); ++a) {
    if (a > 0) out += "|";
    if (s.fiber(a) == 0) {
      out += "∅";
      continue;
    }
    out += "{";
    bool first = true;
    for (std::size_t p = 0; p < ctx.points(); ++p) {
      if ((s.fiber(a) >> p & 1U) == 0) continue;
      if (!first) out += ",";
      out += ctx.point_label(p);
      first = false;
    }
    out += "}";
  }
  return out + "⟩";
}

std::string notation(const SoftElement& x) {
  std::string out = "(";
  for (std::size_t a = 0; a < x.parameters(); ++a) {
    if (a > 0) out += ",";
    out += x.context()->point_label(x.choice(a));
  }
  return out + ")";
}

}  // namespace softtop
