#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

/// A subset of the universe, one bit per point in universe order.
using Fiber = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;
inline constexpr std::size_t kMaxParameters = 8;

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/// The finite universe X and parameter set A shared by every soft set built
/// over it. Label order is significant: it fixes bit positions and the
/// canonical enumeration order.
class Context {
  struct Passkey {};

 public:
  Context(Passkey, std::vector<std::string> universe,
          std::vector<std::string> parameters);

  /// Throws Error(kInvalidContext) on empty, duplicate or oversized label lists.
  static ContextPtr make(std::vector<std::string> universe,
                         std::vector<std::string> parameters);

  std::size_t points() const noexcept { return universe_.size(); }
  std::size_t parameters() const noexcept { return parameters_.size(); }

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& parameter_labels() const noexcept {
    return parameters_;
  }

  const std::string& point_label(std::size_t i) const { return universe_.at(i); }
  const std::string& parameter_label(std::size_t i) const {
    return parameters_.at(i);
  }

  std::optional<std::size_t> point_index(std::string_view label) const;
  std::optional<std::size_t> parameter_index(std::string_view label) const;

  Fiber full_fiber() const noexcept { return full_; }

  bool operator==(const Context& other) const {
    return universe_ == other.universe_ && parameters_ == other.parameters_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  Fiber full_ = 0;
};

/// Pointer identity first, then label equality.
bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Throws ContextMismatch unless same_context(a, b).
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// Default point labels x, y, z, t, u, v, w, then p7, p8, ...
std::vector<std::string> default_point_labels(std::size_t n);
/// Default parameter labels alpha, beta, gamma, delta, then a4, a5, ...
std::vector<std::string> default_parameter_labels(std::size_t m);

}  // namespace softtop
