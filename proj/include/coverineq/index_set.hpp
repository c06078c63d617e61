#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverineq {

// Subset of the coordinate axes {0, ..., n-1} of an n-dimensional ambient
// space, stored as a bit mask.  Axes are 0-based in code; the JSON wire
// format and the mathematical notation [n] = {1, ..., n} are 1-based.
class IndexSet {
public:
  static constexpr int kMaxGround = 64;

  IndexSet() : n_(0), bits_(0) {}
  IndexSet(int n, uint64_t bits) : n_(n), bits_(bits) { check(); }

  static IndexSet empty(int n) { return IndexSet(n, 0); }
  static IndexSet full(int n) {
    if (n < 0 || n > kMaxGround) throw std::invalid_argument("IndexSet: ground set size out of range");
    return IndexSet(n, n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
  }
  static IndexSet of(int n, std::initializer_list<int> axes) {
    uint64_t b = 0;
    for (int a : axes) {
      if (a < 0 || a >= n) throw std::invalid_argument("IndexSet: axis out of range");
      b |= uint64_t{1} << a;
    }
    return IndexSet(n, b);
  }
  static IndexSet of(int n, const std::vector<int>& axes) {
    uint64_t b = 0;
    for (int a : axes) {
      if (a < 0 || a >= n) throw std::invalid_argument("IndexSet: axis out of range");
      b |= uint64_t{1} << a;
    }
    return IndexSet(n, b);
  }

  int ground() const { return n_; }
  uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty_set() const { return bits_ == 0; }
  bool contains(int axis) const { return axis >= 0 && axis < n_ && (bits_ >> axis) & 1; }

  bool subset_of(const IndexSet& o) const { return (bits_ & ~o.bits_) == 0; }

  IndexSet unite(const IndexSet& o) const { return IndexSet(n_, bits_ | o.bits_); }
  IndexSet intersect(const IndexSet& o) const { return IndexSet(n_, bits_ & o.bits_); }
  IndexSet minus(const IndexSet& o) const { return IndexSet(n_, bits_ & ~o.bits_); }
  IndexSet complement() const { return full(n_).minus(*this); }

  std::vector<int> axes() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  int smallest() const {
    if (bits_ == 0) throw std::logic_error("IndexSet: smallest of empty set");
    return std::countr_zero(bits_);
  }

  bool operator==(const IndexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }
  bool operator<(const IndexSet& o) const { return n_ != o.n_ ? n_ < o.n_ : bits_ < o.bits_; }

  // 1-based rendering, e.g. "{1,3}".
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int a : axes()) {
      if (!first) s += ",";
      s += std::to_string(a + 1);
      first = false;
    }
    return s + "}";
  }

private:
  void check() const {
    if (n_ < 0 || n_ > kMaxGround) throw std::invalid_argument("IndexSet: ground set size out of range");
    if (n_ < 64 && (bits_ >> n_) != 0) throw std::invalid_argument("IndexSet: member index outside ground set");
  }
  int n_;
  uint64_t bits_;
};

}  // namespace coverineq
