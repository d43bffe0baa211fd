#pragma once

// Generalized Cartan matrices: validation, Dynkin diagrams, finite/affine/
// indefinite classification by exact principal minors, and the ideal-index
// threshold n(A).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kmt/error.hpp"

namespace kmt {

using BigInt = boost::multiprecision::cpp_int;

class AxiomViolation : public InputError {
 public:
  enum class Axiom { Diagonal, OffDiagonalSign, ZeroPattern };

  AxiomViolation(int i, int j, Axiom axiom)
      : InputError(describe(i, j, axiom)), i_(i), j_(j), axiom_(axiom) {}

  int row() const noexcept { return i_; }
  int col() const noexcept { return j_; }
  Axiom axiom() const noexcept { return axiom_; }

  /// Letter of the failed condition: (b) a_ii = 2, (c) a_ij <= 0, (d) zero pattern.
  char letter() const noexcept {
    switch (axiom_) {
      case Axiom::Diagonal: return 'b';
      case Axiom::OffDiagonalSign: return 'c';
      case Axiom::ZeroPattern: return 'd';
    }
    return '?';
  }

 private:
  static std::string describe(int i, int j, Axiom a) {
    std::string pos = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    switch (a) {
      case Axiom::Diagonal: return "GCM axiom (b) violated at " + pos + ": diagonal entry must be 2";
      case Axiom::OffDiagonalSign:
        return "GCM axiom (c) violated at " + pos + ": off-diagonal entry must be <= 0";
      case Axiom::ZeroPattern:
        return "GCM axiom (d) violated at " + pos + ": a_ij = 0 must hold iff a_ji = 0";
    }
    return "GCM axiom violated";
  }

  int i_, j_;
  Axiom axiom_;
};

class EmptyIndexSet : public InputError {
 public:
  EmptyIndexSet() : InputError("index set must be nonempty") {}
};

class KOutOfRange : public InputError {
 public:
  KOutOfRange(int k, int d)
      : InputError("k = " + std::to_string(k) + " outside [2, " + std::to_string(d) + "]") {}
};

/// A validated generalized Cartan matrix. Indices are 0-based throughout the
/// library; user-facing output (JSON, CLI) is 1-based.
class Gcm {
 public:
  /// Checks (b) a_ii = 2, (c) a_ij <= 0 off the diagonal, (d) a_ij = 0 <=> a_ji = 0,
  /// in row-major order, and throws on the first failing entry.
  static Gcm validate(const std::vector<std::vector<int>>& rows) {
    const int d = static_cast<int>(rows.size());
    if (d < 1) throw InputError("GCM must have size d >= 1");
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != d) throw InputError("GCM must be square");
    }
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const int a = rows[i][j];
        if (i == j) {
          if (a != 2) throw AxiomViolation(i, j, AxiomViolation::Axiom::Diagonal);
        } else {
          if (a > 0) throw AxiomViolation(i, j, AxiomViolation::Axiom::OffDiagonalSign);
          if ((a == 0) != (rows[j][i] == 0))
            throw AxiomViolation(i, j, AxiomViolation::Axiom::ZeroPattern);
        }
      }
    }
    Gcm g;
    g.d_ = d;
    g.a_.reserve(static_cast<std::size_t>(d) * d);
    for (const auto& r : rows) g.a_.insert(g.a_.end(), r.begin(), r.end());
    return g;
  }

  int size() const noexcept { return d_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * d_ + j]; }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(d_, std::vector<int>(d_));
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  /// A_I for a nonempty index subset (taken in ascending order, duplicates dropped).
  Gcm submatrix(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.empty()) throw EmptyIndexSet();
    for (int i : idx) {
      if (i < 0 || i >= d_) throw InputError("index " + std::to_string(i + 1) + " out of range");
    }
    std::vector<std::vector<int>> sub(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub[r][c] = (*this)(idx[r], idx[c]);
    return validate(sub);
  }

  /// Largest |a_ij| off the diagonal (0 when d = 1).
  int max_off_diagonal() const {
    int m = 0;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (i != j) m = std::max(m, -(*this)(i, j));
    return m;
  }

  friend bool operator==(const Gcm&, const Gcm&) = default;

 private:
  Gcm() = default;
  int d_ = 0;
  std::vector<int> a_;
};

/// Graph on the simple roots with a_ij * a_ji edges between i != j.
class DynkinDiagram {
 public:
  explicit DynkinDiagram(const Gcm& a) : d_(a.size()), m_(static_cast<std::size_t>(d_) * d_, 0) {
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (i != j) m_[static_cast<std::size_t>(i) * d_ + j] = a(i, j) * a(j, i);
  }

  int vertex_count() const noexcept { return d_; }
  int multiplicity(int i, int j) const { return m_[static_cast<std::size_t>(i) * d_ + j]; }
  bool adjacent(int i, int j) const { return i != j && multiplicity(i, j) > 0; }

  bool has_isolated_vertex() const {
    for (int i = 0; i < d_; ++i) {
      bool any = false;
      for (int j = 0; j < d_; ++j) any = any || adjacent(i, j);
      if (!any) return true;
    }
    return false;
  }

  /// Connected components, each sorted ascending, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(d_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < d_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> members{s};
      comp[s] = static_cast<int>(out.size());
      for (std::size_t k = 0; k < members.size(); ++k) {
        for (int j = 0; j < d_; ++j) {
          if (comp[j] < 0 && adjacent(members[k], j)) {
            comp[j] = comp[s];
            members.push_back(j);
          }
        }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

 private:
  int d_;
  std::vector<int> m_;
};

/// a_ij * a_ji <= 3 for all i != j.
inline bool is_two_spherical(const Gcm& a) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a(i, j) * a(j, i) > 3) return false;
  return true;
}

namespace detail {

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

/// det(A_I) for an index subset.
inline BigInt principal_minor(const Gcm& a, const std::vector<int>& idx) {
  std::vector<std::vector<BigInt>> m(idx.size(), std::vector<BigInt>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m[r][c] = a(idx[r], idx[c]);
  return detail::bareiss_det(std::move(m));
}

enum class GcmKind { Spherical, Affine, Indefinite };

inline const char* to_string(GcmKind k) {
  switch (k) {
    case GcmKind::Spherical: return "Spherical";
    case GcmKind::Affine: return "Affine";
    case GcmKind::Indefinite: return "Indefinite";
  }
  return "?";
}

struct GcmClassification {
  GcmKind kind = GcmKind::Indefinite;
  bool indecomposable = false;
  bool two_spherical = false;
  bool simply_laced = false;
  int M = 0;
  std::optional<BigInt> nA;  ///< set only for indecomposable 2-spherical input of rank >= 2
  std::string note;          ///< "decomposable" when a decomposable matrix is not spherical
};

/// n(A) = (2d-2)^2, 3(2d-2)^4 or 188(2d-2)^16 for M = 1, 2, 3.
inline std::optional<BigInt> ideal_index_threshold(int d, int M) {
  if (d < 2 || M < 1 || M > 3) return std::nullopt;
  const BigInt base = 2 * d - 2;
  switch (M) {
    case 1: return BigInt(boost::multiprecision::pow(base, 2));
    case 2: return BigInt(3 * boost::multiprecision::pow(base, 4));
    default: return BigInt(188 * boost::multiprecision::pow(base, 16));
  }
}

namespace detail {

enum class MinorSigns { AllPositive, ProperPositiveDetZero, Other };

/// Principal-minor sign pattern of A_S for a vertex set S.
inline MinorSigns minor_signs(const Gcm& a, const std::vector<int>& s) {
  const std::size_t n = s.size();
  const std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1u);
  bool proper_positive = true;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<int> idx;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (1u << b)) idx.push_back(s[b]);
    if (principal_minor(a, idx) <= 0) {
      proper_positive = false;
      break;
    }
  }
  const BigInt det = principal_minor(a, s);
  if (proper_positive && det > 0) return MinorSigns::AllPositive;
  if (proper_positive && det == 0) return MinorSigns::ProperPositiveDetZero;
  return MinorSigns::Other;
}

}  // namespace detail

inline GcmClassification classify(const Gcm& a) {
  GcmClassification out;
  const int d = a.size();
  const DynkinDiagram dyn(a);
  const auto comps = dyn.components();
  out.indecomposable = comps.size() == 1;
  out.M = a.max_off_diagonal();

  out.two_spherical = true;
  out.simply_laced = true;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (dyn.multiplicity(i, j) > 3) out.two_spherical = false;
      if (dyn.multiplicity(i, j) > 1) out.simply_laced = false;
    }
  }

  bool all_spherical = true;
  for (const auto& c : comps) {
    if (detail::minor_signs(a, c) != detail::MinorSigns::AllPositive) all_spherical = false;
  }
  if (all_spherical) {
    out.kind = GcmKind::Spherical;
  } else if (out.indecomposable &&
             detail::minor_signs(a, comps.front()) == detail::MinorSigns::ProperPositiveDetZero) {
    out.kind = GcmKind::Affine;
  } else {
    out.kind = GcmKind::Indefinite;
    if (!out.indecomposable) out.note = "decomposable";
  }

  if (out.two_spherical && out.indecomposable && d >= 2 && out.M <= 3)
    out.nA = ideal_index_threshold(d, out.M);
  return out;
}

/// True iff every size-k principal submatrix is spherical.
inline bool is_k_spherical(const Gcm& a, int k) {
  const int d = a.size();
  if (k < 2 || k > d) throw KOutOfRange(k, d);
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    if (classify(a.submatrix(pick)).kind != GcmKind::Spherical) return false;
    int p = k - 1;
    while (p >= 0 && pick[p] == d - k + p) --p;
    if (p < 0) break;
    ++pick[p];
    for (int q = p + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
  }
  return true;
}

/// Reads "d" followed by d rows of d integers. Errors name 1-based line/column.
inline Gcm parse_gcm(std::istream& in) {
  struct Token {
    std::string text;
    int line, col;
  };
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      if (p >= line.size()) break;
      std::size_t q = p;
      while (q < line.size() && !std::isspace(static_cast<unsigned char>(line[q]))) ++q;
      tokens.push_back({line.substr(p, q - p), lineno, static_cast<int>(p) + 1});
      p = q;
    }
  }
  auto to_int = [](const Token& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t.text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.text.size() || t.text.empty())
      throw ParseError(t.line, t.col, "expected an integer, got '" + t.text + "'");
    return v;
  };
  if (tokens.empty()) throw ParseError(1, 1, "empty GCM file: expected size d");
  const int d = to_int(tokens[0]);
  if (d < 1) throw ParseError(tokens[0].line, tokens[0].col, "size d must be >= 1");
  const std::size_t need = 1 + static_cast<std::size_t>(d) * d;
  if (tokens.size() < need) {
    const Token& last = tokens.back();
    throw ParseError(last.line, last.col + static_cast<int>(last.text.size()),
                     "expected " + std::to_string(d * d) + " matrix entries, found " +
                         std::to_string(tokens.size() - 1));
  }
  if (tokens.size() > need)
    throw ParseError(tokens[need].line, tokens[need].col, "unexpected trailing token");
  std::vector<std::vector<int>> rows(d, std::vector<int>(d));
  int prev_line = tokens[0].line;
  for (int i = 0; i < d; ++i) {
    const Token& first = tokens[1 + static_cast<std::size_t>(i) * d];
    const int row_line = first.line;
    if (row_line == prev_line)
      throw ParseError(first.line, first.col, "row " + std::to_string(i + 1) + " must start on a new line");
    prev_line = row_line;
    for (int j = 0; j < d; ++j) {
      const Token& t = tokens[1 + static_cast<std::size_t>(i) * d + j];
      if (t.line != row_line)
        throw ParseError(t.line, t.col, "row " + std::to_string(i + 1) + " must fit on one line");
      rows[i][j] = to_int(t);
    }
  }
  return Gcm::validate(rows);
}

inline Gcm parse_gcm(const std::string& text) {
  std::istringstream in(text);
  return parse_gcm(in);
}

}  // namespace kmt
