#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "softtop/context.hpp"

namespace softtop {

enum class SoftSetClass { kNull, kProper, kMixed };

class SoftElement;

/// A mapping parameter -> subset of the universe. Fibers are bitmasks over the
/// context's universe; equality is fiberwise.
class SoftSet {
 public:
  /// Throws Error(kInvalidArgument) if the fiber count differs from the
  /// parameter count or a fiber leaves the universe.
  SoftSet(ContextPtr ctx, std::span<const Fiber> fibers);
  SoftSet(ContextPtr ctx, std::initializer_list<Fiber> fibers)
      : SoftSet(std::move(ctx), std::span<const Fiber>(fibers.begin(), fibers.size())) {}

  static SoftSet null(ContextPtr ctx);
  static SoftSet absolute(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t parameters() const noexcept { return count_; }
  Fiber fiber(std::size_t param) const { return fibers_.at(param); }
  std::span<const Fiber> fibers() const noexcept { return {fibers_.data(), count_}; }

  SoftSetClass classify() const noexcept;
  bool is_null() const noexcept { return classify() == SoftSetClass::kNull; }
  bool is_proper() const noexcept { return classify() == SoftSetClass::kProper; }
  /// NULL or PROPER: membership in the admissible collection S(X~).
  bool is_admissible() const noexcept { return classify() != SoftSetClass::kMixed; }
  bool is_absolute() const noexcept;

  bool contains(const SoftElement& x) const;

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return a.fibers_ == b.fibers_ && a.count_ == b.count_ &&
           same_context(a.ctx_, b.ctx_);
  }
  /// Canonical order: lexicographic over fiber bitmasks, first parameter most
  /// significant. Context is not compared.
  friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) {
    return a.fibers_ <=> b.fibers_;
  }

 private:
  ContextPtr ctx_;
  std::size_t count_ = 0;
  std::array<Fiber, kMaxParameters> fibers_{};
};

/// A choice function A -> X.
class SoftElement {
 public:
  SoftElement(ContextPtr ctx, std::span<const std::size_t> choices);
  SoftElement(ContextPtr ctx, std::initializer_list<std::size_t> choices)
      : SoftElement(std::move(ctx),
                    std::span<const std::size_t>(choices.begin(), choices.size())) {}

  /// The element choosing `point` at every parameter.
  static SoftElement constant(ContextPtr ctx, std::size_t point);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t parameters() const noexcept { return count_; }
  std::size_t choice(std::size_t param) const { return choices_.at(param); }

  friend bool operator==(const SoftElement& a, const SoftElement& b) {
    return a.choices_ == b.choices_ && a.count_ == b.count_ &&
           same_context(a.ctx_, b.ctx_);
  }
  friend std::strong_ordering operator<=>(const SoftElement& a,
                                          const SoftElement& b) {
    return a.choices_ <=> b.choices_;
  }

 private:
  ContextPtr ctx_;
  std::size_t count_ = 0;
  std::array<std::uint8_t, kMaxParameters> choices_{};
};

/// Duplicate-free, canonically ordered collection of soft elements over one
/// context.
class SoftElementSet {
 public:
  explicit SoftElementSet(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  SoftElementSet(ContextPtr ctx, std::vector<SoftElement> elements);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const SoftElement& x) const;
  /// True iff every element of `other` is in this set.
  bool includes(const SoftElementSet& other) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const std::vector<SoftElement>& elements() const noexcept { return elements_; }

  friend SoftElementSet set_union(const SoftElementSet& a, const SoftElementSet& b);
  friend SoftElementSet set_intersection(const SoftElementSet& a,
                                         const SoftElementSet& b);

  friend bool operator==(const SoftElementSet& a, const SoftElementSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  ContextPtr ctx_;
  std::vector<SoftElement> elements_;
};

/// Calls `fn` for every choice function A -> X in canonical order.
void for_each_soft_element(const ContextPtr& ctx,
                           const std::function<void(const SoftElement&)>& fn);

}  // namespace softtop
