#pragma once

// The map pi from the root subgroups of the affine type A~_{d-1} into
// SL_d(Z/q[t, 1/t]), on Laurent polynomials kept inside a degree window.

#include <string>
#include <vector>

#include "kmt/error.hpp"
#include "kmt/mod_ring.hpp"
#include "kmt/report.hpp"

namespace kmt {

class WindowBreach : public Error {
 public:
  WindowBreach(int degree, int window)
      : Error("degree " + std::to_string(degree) + " left the window [-" + std::to_string(window) +
              ", " + std::to_string(window) + "]") {}
};

/// Laurent polynomial over Z/q with exponents in [-window, window].
class LaurentPoly {
 public:
  LaurentPoly(int window, int q) : w_(window), ring_(q), c_(2 * static_cast<std::size_t>(window) + 1, 0) {
    if (window < 0) throw InputError("window must be >= 0");
  }

  static LaurentPoly monomial(int window, int q, long long coeff, int degree) {
    LaurentPoly p(window, q);
    p.set(degree, coeff);
    return p;
  }

  int window() const noexcept { return w_; }
  int modulus() const noexcept { return ring_.modulus(); }
  int coeff(int degree) const { return (degree < -w_ || degree > w_) ? 0 : c_[degree + w_]; }

  void set(int degree, long long v) {
    if (degree < -w_ || degree > w_) {
      if (ring_.norm(v) != 0) throw WindowBreach(degree, w_);
      return;
    }
    c_[degree + w_] = ring_.norm(v);
  }

  bool is_zero() const {
    for (int x : c_)
      if (x) return false;
    return true;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (int e = -w_; e <= w_; ++e) r.c_[e + w_] = ring_.add(coeff(e), o.coeff(e));
    return r;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r(w_, ring_.modulus());
    for (int a = -w_; a <= w_; ++a) {
      if (coeff(a) == 0) continue;
      for (int b = -w_; b <= w_; ++b) {
        if (o.coeff(b) == 0) continue;
        const int e = a + b;
        if (e < -w_ || e > w_) throw WindowBreach(e, w_);
        r.c_[e + w_] = ring_.add(r.c_[e + w_], ring_.mul(coeff(a), o.coeff(b)));
      }
    }
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.w_ == b.w_ && a.ring_ == b.ring_ && a.c_ == b.c_;
  }

  std::string str() const {
    std::string s;
    for (int e = w_; e >= -w_; --e) {
      if (coeff(e) == 0) continue;
      if (!s.empty()) s += " + ";
      s += std::to_string(coeff(e)) + (e == 0 ? "" : "t^" + std::to_string(e));
    }
    return s.empty() ? "0" : s;
  }

 private:
  int w_;
  ModRing ring_;
  std::vector<int> c_;
};

class LaurentMatrix {
 public:
  LaurentMatrix(int n, int window, int q)
      : n_(n), a_(static_cast<std::size_t>(n) * n, LaurentPoly(window, q)) {
    if (n < 1) throw InputError("matrix size must be >= 1");
  }

  static LaurentMatrix identity(int n, int window, int q) {
    LaurentMatrix m(n, window, q);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::monomial(window, q, 1, 0);
    return m;
  }

  /// I + f E_ij (0-based, i != j).
  static LaurentMatrix elementary(int n, int i, int j, const LaurentPoly& f) {
    if (i == j) throw InputError("elementary matrix needs i != j");
    LaurentMatrix m = identity(n, f.window(), f.modulus());
    m.at(i, j) = f;
    return m;
  }

  int size() const noexcept { return n_; }
  LaurentPoly& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const LaurentPoly& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  LaurentMatrix operator*(const LaurentMatrix& o) const {
    const LaurentPoly& z = a_.front();
    LaurentMatrix r(n_, z.window(), z.modulus());
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < n_; ++j)
          if (!o.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  int n_;
  std::vector<LaurentPoly> a_;
};

/// Position and t-degree of the elementary matrix carrying a +-simple root
/// of A~_{d-1}. Simple roots are 0-based; root d-1 is the affine one.
struct AffineSlot {
  int row;
  int col;
  int degree;
};

inline AffineSlot affine_slot(int d, int root, bool negative) {
  if (root < 0 || root >= d) throw InputError("affine root index out of range");
  if (root < d - 1) return negative ? AffineSlot{root + 1, root, 0} : AffineSlot{root, root + 1, 0};
  return negative ? AffineSlot{0, d - 1, -1} : AffineSlot{d - 1, 0, 1};
}

/// pi(x_{+-alpha_root}(r))
inline LaurentMatrix affine_pi(int d, int root, bool negative, int q, int window, long long r) {
  const AffineSlot s = affine_slot(d, root, negative);
  return LaurentMatrix::elementary(d, s.row, s.col, LaurentPoly::monomial(window, q, r, s.degree));
}

/// Additivity of every image exhaustively in (r, s), and the commutator of
/// every non-opposite pair of images against the elementary-matrix rules
///   [E_ij(f), E_jl(g)] = E_il(fg),  [E_ij(f), E_ki(g)] = E_kj(-gf),
/// and trivial when neither index meets.
inline Report affine_pi_check(int d, int q, int window) {
  if (d < 3) throw InputError("affine check needs d >= 3");
  if (window < 4) throw InputError("affine check needs window >= 4");
  const ModRing ring(q);
  Report rep;

  Check r1 = make_check("affine/R1-additivity");
  for (int root = 0; root < d; ++root)
    for (bool neg : {false, true})
      for (int r = 0; r < q; ++r)
        for (int s = 0; s < q; ++s)
          r1.record(affine_pi(d, root, neg, q, window, r) * affine_pi(d, root, neg, q, window, s) ==
                        affine_pi(d, root, neg, q, window, r + s),
                    "root " + std::to_string(root + 1) + (neg ? "-" : "+") + " r=" + std::to_string(r) +
                        " s=" + std::to_string(s));
  rep.checks.push_back(std::move(r1));

  Check r2 = make_check("affine/R2-commutators");
  for (int a = 0; a < 2 * d; ++a)
    for (int b = 0; b < 2 * d; ++b) {
      const int ra = a % d, rb = b % d;
      const bool na = a >= d, nb = b >= d;
      if (ra == rb) continue;  // same root, or an opposite pair
      const AffineSlot x = affine_slot(d, ra, na), y = affine_slot(d, rb, nb);
      for (int r = 0; r < q; ++r)
        for (int s = 0; s < q; ++s) {
          const LaurentMatrix lhs = affine_pi(d, ra, na, q, window, -r) *
                                    affine_pi(d, rb, nb, q, window, -s) *
                                    affine_pi(d, ra, na, q, window, r) * affine_pi(d, rb, nb, q, window, s);
          LaurentMatrix expect = LaurentMatrix::identity(d, window, q);
          const int deg = x.degree + y.degree;
          if (x.col == y.row)
            expect = LaurentMatrix::elementary(
                d, x.row, y.col, LaurentPoly::monomial(window, q, ring.mul(r, s), deg));
          else if (y.col == x.row)
            expect = LaurentMatrix::elementary(
                d, y.row, x.col, LaurentPoly::monomial(window, q, ring.neg(ring.mul(r, s)), deg));
          r2.record(lhs == expect, "pair (" + std::to_string(ra + 1) + (na ? "-" : "+") + ", " +
                                       std::to_string(rb + 1) + (nb ? "-" : "+") + ") r=" +
                                       std::to_string(r) + " s=" + std::to_string(s));
        }
    }
  rep.checks.push_back(std::move(r2));
  return rep;
}

}  // namespace kmt
