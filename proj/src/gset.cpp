#include "stabreg/gset.hpp"

namespace stabreg {

GSet::GSet(Group group) : group_(std::move(group)), words_((group_.order() + 63) / 64, 0) {}

GSet GSet::full(const Group& group) {
  GSet s(group);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.clear_tail();
  s.size_ = group.order();
  return s;
}

GSet GSet::from_ranks(const Group& group, std::span<const Rank> ranks) {
  GSet s(group);
  for (Rank r : ranks) {
    if (r >= group.order()) throw Error("rank out of range in set");
    s.insert(r);
  }
  return s;
}

GSet GSet::from_elements(const Group& group, std::span<const Element> elements) {
  GSet s(group);
  for (const auto& e : elements) s.insert(group.rank(e));
  return s;
}

GSet GSet::from_predicate(const Group& group, const std::function<bool(Rank)>& pred) {
  GSet s(group);
  for (std::size_t r = 0; r < group.order(); ++r)
    if (pred(static_cast<Rank>(r))) s.insert(static_cast<Rank>(r));
  return s;
}

void GSet::insert(Rank r) {
  auto& w = words_[r >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void GSet::erase(Rank r) {
  auto& w = words_[r >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (r & 63);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

void GSet::clear_tail() {
  const std::size_t tail = group_.order() % 64;
  if (tail) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

void GSet::recount() {
  size_ = 0;
  for (auto w : words_) size_ += static_cast<std::size_t>(std::popcount(w));
}

void GSet::check_same(const GSet& o) const {
  if (!(group_ == o.group_)) throw Error("set operation across different groups");
}

GSet GSet::complement() const {
  GSet out(*this);
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  out.size_ = universe() - size_;
  return out;
}

GSet GSet::translate(Rank c) const {
  if (c == 0) return *this;
  GSet out(group_);
  for_each([&](Rank a) { out.insert(group_.add(a, c)); });
  return out;
}

GSet GSet::negate() const {
  GSet out(group_);
  for_each([&](Rank a) { out.insert(group_.neg(a)); });
  return out;
}

GSet& GSet::operator&=(const GSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  recount();
  return *this;
}

GSet& GSet::operator|=(const GSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  recount();
  return *this;
}

GSet& GSet::operator-=(const GSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  recount();
  return *this;
}

std::size_t GSet::intersection_size(const GSet& o) const {
  check_same(o);
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  return n;
}

bool GSet::subset_of(const GSet& o) const {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool GSet::intersects(const GSet& o) const {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

Rank GSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Rank>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  throw Error("first() on empty set");
}

std::vector<Rank> GSet::members() const {
  std::vector<Rank> out;
  out.reserve(size_);
  for_each([&](Rank r) { out.push_back(r); });
  return out;
}

bool GSet::bitmap_less(const GSet& a, const GSet& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) == 0;
    }
  }
  return false;
}

std::size_t GSetHash::operator()(const GSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace stabreg
