#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stabreg/group.hpp"

namespace stabreg {

/// Subset of a group stored as a membership bitmap indexed by rank.
class GSet {
 public:
  explicit GSet(Group group);
  static GSet full(const Group& group);
  static GSet from_ranks(const Group& group, std::span<const Rank> ranks);
  static GSet from_elements(const Group& group, std::span<const Element> elements);
  static GSet from_predicate(const Group& group, const std::function<bool(Rank)>& pred);

  const Group& group() const { return group_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t universe() const { return group_.order(); }

  bool contains(Rank r) const { return (words_[r >> 6] >> (r & 63)) & 1U; }
  void insert(Rank r);
  void erase(Rank r);

  GSet complement() const;
  /// {a + c : a in A}.
  GSet translate(Rank c) const;
  /// {-a : a in A}.
  GSet negate() const;

  GSet& operator&=(const GSet& o);
  GSet& operator|=(const GSet& o);
  GSet& operator-=(const GSet& o);
  friend GSet operator&(GSet a, const GSet& b) { return a &= b; }
  friend GSet operator|(GSet a, const GSet& b) { return a |= b; }
  friend GSet operator-(GSet a, const GSet& b) { return a -= b; }

  std::size_t intersection_size(const GSet& o) const;
  bool subset_of(const GSet& o) const;
  bool intersects(const GSet& o) const;

  /// Least member; undefined on the empty set.
  Rank first() const;
  std::vector<Rank> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Rank>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  /// Lexicographic order on the bitmap read as a 0/1 string from rank 0.
  static bool bitmap_less(const GSet& a, const GSet& b);

  friend bool operator==(const GSet& a, const GSet& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }

 private:
  void check_same(const GSet& o) const;
  void recount();
  void clear_tail();

  Group group_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

struct GSetHash {
  std::size_t operator()(const GSet& s) const noexcept;
};

}  // namespace stabreg
