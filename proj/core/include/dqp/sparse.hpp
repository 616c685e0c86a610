#ifndef DQP_SPARSE_HPP
#define DQP_SPARSE_HPP

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "dqp/rational.hpp"

namespace dqp {

/// Sparse coefficient vector over a basis, sorted by index. Zero entries are
/// never stored, so equality of values is equality of representations.
class SparseVec {
 public:
  using Entry = std::pair<int, Rational>;

  SparseVec() = default;
  SparseVec(std::initializer_list<Entry> init) {
    for (const auto& [k, v] : init) add(k, v);
  }

  static SparseVec basis(int index) { return SparseVec{{index, Rational(1)}}; }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Rational coeff(int index) const {
    auto it = find(index);
    return it != entries_.end() && it->first == index ? it->second : Rational(0);
  }

  void add(int index, const Rational& value) {
    if (value == 0) return;
    auto it = lower_bound(index);
    if (it != entries_.end() && it->first == index) {
      it->second += value;
      if (it->second == 0) entries_.erase(it);
    } else {
      entries_.insert(it, {index, value});
    }
  }

  void add_scaled(const SparseVec& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [k, v] : other.entries_) add(k, v * scale);
  }

  SparseVec& operator+=(const SparseVec& other) {
    for (const auto& [k, v] : other.entries_) add(k, v);
    return *this;
  }

  SparseVec& operator*=(const Rational& s) {
    if (s == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [k, v] : entries_) v *= s;
    return *this;
  }

  SparseVec operator-() const {
    SparseVec out = *this;
    for (auto& [k, v] : out.entries_) v = -v;
    return out;
  }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator*(SparseVec a, const Rational& s) { return a *= s; }
  friend SparseVec operator*(const Rational& s, SparseVec a) { return a *= s; }

  bool operator==(const SparseVec& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Entry>::const_iterator find(int index) const { return lower_bound(index); }
  std::vector<Entry>::const_iterator lower_bound(int index) const {
    return std::lower_bound(entries_.begin(), entries_.end(), index,
                            [](const Entry& e, int i) { return e.first < i; });
  }
  std::vector<Entry>::iterator lower_bound(int index) {
    return std::lower_bound(entries_.begin(), entries_.end(), index,
                            [](const Entry& e, int i) { return e.first < i; });
  }

  std::vector<Entry> entries_;
};

}  // namespace dqp

#endif
