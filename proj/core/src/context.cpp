#include "softtop/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "softtop/error.hpp"

namespace softtop {

namespace {

void check_labels(const std::vector<std::string>& labels, std::string_view what,
                  std::size_t limit) {
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidContext, std::string(what) + " is empty");
  }
  if (labels.size() > limit) {
    throw Error(ErrorCode::kInvalidContext,
                std::string(what) + " has " + std::to_string(labels.size()) +
                    " labels; at most " + std::to_string(limit) + " supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kInvalidContext,
                  std::string(what) + " repeats label '" + label + "'");
    }
  }
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels,
                                      std::string_view label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

Context::Context(Passkey, std::vector<std::string> universe,
                 std::vector<std::string> parameters)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  full_ = universe_.size() == 64 ? ~Fiber{0} : ((Fiber{1} << universe_.size()) - 1);
}

ContextPtr Context::make(std::vector<std::string> universe,
                         std::vector<std::string> parameters) {
  check_labels(universe, "universe", kMaxPoints);
  check_labels(parameters, "parameter set", kMaxParameters);
  return std::make_shared<const Context>(Passkey{}, std::move(universe),
                                         std::move(parameters));
}

std::optional<std::size_t> Context::point_index(std::string_view label) const {
  return find_label(universe_, label);
}

std::optional<std::size_t> Context::parameter_index(std::string_view label) const {
  return find_label(parameters_, label);
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) {
    throw ContextMismatch("operands belong to different contexts");
  }
}

std::vector<std::string> default_point_labels(std::size_t n) {
  static const char* const kNames[] = {"x", "y", "z", "t", "u", "v", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < std::size(kNames) ? kNames[i] : "p" + std::to_string(i));
  }
  return out;
}

std::vector<std::string> default_parameter_labels(std::size_t m) {
  static const char* const kNames[] = {"alpha", "beta", "gamma", "delta"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(i < std::size(kNames) ? kNames[i] : "a" + std::to_string(i));
  }
  return out;
}

}  // namespace softtop
