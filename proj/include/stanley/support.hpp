#ifndef STANLEY_SUPPORT_HPP
#define STANLEY_SUPPORT_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stanley {

// Raw bit-vector over variable indices. Index i corresponds to bit (1 << i).
using Mask = std::uint64_t;

// Everything in this toolkit lives in rings with at most 64 variables.
inline constexpr int kMaxVars = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline Mask full_mask(int width) {
  if (width < 0 || width > kMaxVars)
    throw std::invalid_argument("full_mask: width out of range");
  return width == kMaxVars ? ~Mask{0} : (Mask{1} << width) - 1;
}

// Order on equal-cardinality masks that matches lexicographic order on the
// sorted index lists: the lowest differing bit decides, and it belongs to
// the smaller set.
inline bool lex_mask_less(Mask a, Mask b) {
  Mask d = a ^ b;
  if (d == 0) return false;
  Mask low = d & (~d + 1);
  return (a & low) != 0;
}

// Normal order used for generator lists: cardinality first, then lex.
inline bool normal_mask_less(Mask a, Mask b) {
  int ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  return lex_mask_less(a, b);
}

// Squarefree monomial support: a set of variable indices inside a ring of
// `width` variables. The empty support stands for the monomial 1.
class Support {
 public:
  Support() : bits_(0), width_(0) {}
  Support(Mask bits, int width) : bits_(bits), width_(width) {
    if (width < 0 || width > kMaxVars)
      throw std::invalid_argument("Support: width out of range");
    if (width < kMaxVars && (bits >> width) != 0)
      throw std::invalid_argument("Support: bits exceed width");
  }

  static Support empty(int width) { return Support(0, width); }

  static Support singleton(int v, int width) {
    if (v < 0 || v >= width) throw std::invalid_argument("Support: index out of range");
    return Support(bit(v), width);
  }

  static Support of(const std::vector<int>& indices, int width) {
    Mask m = 0;
    for (int v : indices) {
      if (v < 0 || v >= width) throw std::invalid_argument("Support: index out of range");
      m |= bit(v);
    }
    return Support(m, width);
  }

  Mask bits() const { return bits_; }
  int width() const { return width_; }
  int count() const { return popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool test(int v) const { return v >= 0 && v < width_ && (bits_ & bit(v)); }

  bool subset_of(const Support& o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(const Support& o) const { return (bits_ & o.bits_) != 0; }

  Support unite(const Support& o) const { return Support(bits_ | o.bits_, check(o)); }
  Support intersect(const Support& o) const { return Support(bits_ & o.bits_, check(o)); }
  Support minus(const Support& o) const { return Support(bits_ & ~o.bits_, check(o)); }
  Support complement() const { return Support(full_mask(width_) & ~bits_, width_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend bool operator==(const Support& a, const Support& b) {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Support& a, const Support& b) { return !(a == b); }

  // Cardinality-then-lex normal order.
  friend bool normal_less(const Support& a, const Support& b) {
    return normal_mask_less(a.bits_, b.bits_);
  }

 private:
  int check(const Support& o) const {
    if (width_ != o.width_) throw std::invalid_argument("Support: width mismatch");
    return width_;
  }

  Mask bits_;
  int width_;
};

// Visits every submask of `m`, including m itself and 0, in decreasing
// numeric order.
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace stanley

#endif
