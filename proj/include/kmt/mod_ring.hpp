#pragma once

#include <numeric>
#include <string>

#include "kmt/error.hpp"

namespace kmt {

/// Z/q with residues kept in [0, q).
class ModRing {
 public:
  explicit ModRing(int q) : q_(q) {
    if (q < 2) throw InputError("modulus must be >= 2, got " + std::to_string(q));
  }

  int modulus() const noexcept { return q_; }

  int norm(long long x) const noexcept {
    const long long r = x % q_;
    return static_cast<int>(r < 0 ? r + q_ : r);
  }
  int add(int a, int b) const noexcept { return norm(static_cast<long long>(a) + b); }
  int sub(int a, int b) const noexcept { return norm(static_cast<long long>(a) - b); }
  int neg(int a) const noexcept { return norm(-static_cast<long long>(a)); }
  int mul(int a, int b) const noexcept { return norm(static_cast<long long>(a) * b); }

  int pow(int a, int e) const noexcept {
    int r = norm(1);
    for (int k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

  bool is_unit(long long a) const noexcept { return std::gcd(norm(a), q_) == 1; }

  friend bool operator==(const ModRing&, const ModRing&) = default;

 private:
  int q_;
};

}  // namespace kmt
