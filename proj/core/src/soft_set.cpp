#include "softtop/soft_set.hpp"

#include <algorithm>
#include <iterator>

#include "softtop/error.hpp"

namespace softtop {

SoftSet::SoftSet(ContextPtr ctx, std::span<const Fiber> fibers)
    : ctx_(std::move(ctx)), count_(fibers.size()) {
  if (!ctx_) throw Error(ErrorCode::kInvalidArgument, "soft set without context");
  if (fibers.size() != ctx_->parameters()) {
    throw Error(ErrorCode::kInvalidArgument,
                "soft set needs exactly one fiber per parameter");
  }
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if ((fibers[i] & ~ctx_->full_fiber()) != 0) {
      throw Error(ErrorCode::kInvalidArgument, "fiber leaves the universe");
    }
    fibers_[i] = fibers[i];
  }
}

SoftSet SoftSet::null(ContextPtr ctx) {
  std::vector<Fiber> fibers(ctx->parameters(), 0);
  return SoftSet(std::move(ctx), fibers);
}

SoftSet SoftSet::absolute(ContextPtr ctx) {
  std::vector<Fiber> fibers(ctx->parameters(), ctx->full_fiber());
  return SoftSet(std::move(ctx), fibers);
}

SoftSetClass SoftSet::classify() const noexcept {
  std::size_t empty = 0;
  for (std::size_t i = 0; i < count_; ++i) {
    if (fibers_[i] == 0) ++empty;
  }
  if (empty == count_) return SoftSetClass::kNull;
  if (empty == 0) return SoftSetClass::kProper;
  return SoftSetClass::kMixed;
}

bool SoftSet::is_absolute() const noexcept {
  for (std::size_t i = 0; i < count_; ++i) {
    if (fibers_[i] != ctx_->full_fiber()) return false;
  }
  return true;
}

bool SoftSet::contains(const SoftElement& x) const {
  require_same_context(ctx_, x.context());
  for (std::size_t i = 0; i < count_; ++i) {
    if ((fibers_[i] >> x.choice(i) & 1U) == 0) return false;
  }
  return true;
}

SoftElement::SoftElement(ContextPtr ctx, std::span<const std::size_t> choices)
    : ctx_(std::move(ctx)), count_(choices.size()) {
  if (!ctx_) throw Error(ErrorCode::kInvalidArgument, "soft element without context");
  if (choices.size() != ctx_->parameters()) {
    throw Error(ErrorCode::kInvalidArgument,
                "soft element needs exactly one point per parameter");
  }
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (choices[i] >= ctx_->points()) {
      throw Error(ErrorCode::kInvalidArgument, "soft element leaves the universe");
    }
    choices_[i] = static_cast<std::uint8_t>(choices[i]);
  }
}

SoftElement SoftElement::constant(ContextPtr ctx, std::size_t point) {
  std::vector<std::size_t> choices(ctx->parameters(), point);
  return SoftElement(std::move(ctx), choices);
}

SoftElementSet::SoftElementSet(ContextPtr ctx, std::vector<SoftElement> elements)
    : ctx_(std::move(ctx)), elements_(std::move(elements)) {
  for (const auto& e : elements_) require_same_context(ctx_, e.context());
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SoftElementSet::contains(const SoftElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool SoftElementSet::includes(const SoftElementSet& other) const {
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(),
                       other.elements_.end());
}

SoftElementSet set_union(const SoftElementSet& a, const SoftElementSet& b) {
  require_same_context(a.ctx_, b.ctx_);
  SoftElementSet out(a.ctx_);
  std::set_union(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                 b.elements_.end(), std::back_inserter(out.elements_));
  return out;
}

SoftElementSet set_intersection(const SoftElementSet& a, const SoftElementSet& b) {
  require_same_context(a.ctx_, b.ctx_);
  SoftElementSet out(a.ctx_);
  std::set_intersection(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                        b.elements_.end(), std::back_inserter(out.elements_));
  return out;
}

void for_each_soft_element(const ContextPtr& ctx,
                           const std::function<void(const SoftElement&)>& fn) {
  const std::size_t m = ctx->parameters();
  const std::size_t n = ctx->points();
  std::vector<std::size_t> choice(m, 0);
  while (true) {
    fn(SoftElement(ctx, choice));
    // odometer, last parameter fastest
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++choice[i] < n) break;
      choice[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace softtop
