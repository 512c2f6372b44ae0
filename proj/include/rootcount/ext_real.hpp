#ifndef ROOTCOUNT_EXT_REAL_HPP
#define ROOTCOUNT_EXT_REAL_HPP

#include <ostream>
#include <utility>

#include "rootcount/rat.hpp"

namespace rootcount {

/// Extended real line: -inf < Finite(q) < +inf.
class ExtReal {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtReal(Rat q) : kind_(Kind::Finite), value_(std::move(q)) {}  // NOLINT: implicit
  ExtReal(int n) : ExtReal(Rat(n)) {}                            // NOLINT: implicit
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }
  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Rat& value() const { return value_; }  // only meaningful when finite

  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ == Kind::Finite && b.kind_ == Kind::Finite) return a.value_ < b.value_;
    return rank(a.kind_) < rank(b.kind_);
  }
  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::Finite || a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& x) {
    switch (x.kind_) {
      case Kind::NegInf: return os << "-inf";
      case Kind::PosInf: return os << "+inf";
      default: return os << rat_str(x.value_);
    }
  }

 private:
  explicit ExtReal(Kind k) : kind_(k), value_(0) {}
  static int rank(Kind k) {
    return k == Kind::NegInf ? -1 : (k == Kind::PosInf ? 1 : 0);
  }

  Kind kind_;
  Rat value_;
};

}  // namespace rootcount

#endif
