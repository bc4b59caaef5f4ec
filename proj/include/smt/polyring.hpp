#pragma once

// Exact sparse polynomials in u_ij (m x n) and xi_kl (n x q).
//
// Variable order: all u's row-major, then all xi's row-major. Terms are kept
// in degree-lexicographic order over that sequence, largest first.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smt/error.hpp"
#include "smt/index_tuple.hpp"
#include "smt/linalg.hpp"
#include "smt/rational.hpp"
#include "smt/shape.hpp"

namespace smt {

enum class VarKind : std::uint8_t { U, Xi };

/// u[row,col] with row in [1,m], col in [1,n]; xi[row,col] with row in [1,n], col in [1,q].
struct Variable {
  VarKind kind;
  int row;
  int col;

  std::size_t index(const Shape& s) const {
    if (kind == VarKind::U) {
      if (row < 1 || row > s.m || col < 1 || col > s.n) throw ParameterError("u variable out of range: " + to_string());
      return static_cast<std::size_t>((row - 1) * s.n + (col - 1));
    }
    if (row < 1 || row > s.n || col < 1 || col > s.q) throw ParameterError("xi variable out of range: " + to_string());
    return static_cast<std::size_t>(s.m * s.n + (row - 1) * s.q + (col - 1));
  }

  static Variable from_index(std::size_t idx, const Shape& s) {
    const auto mn = static_cast<std::size_t>(s.m * s.n);
    if (idx < mn) return {VarKind::U, static_cast<int>(idx) / s.n + 1, static_cast<int>(idx) % s.n + 1};
    idx -= mn;
    return {VarKind::Xi, static_cast<int>(idx) / s.q + 1, static_cast<int>(idx) % s.q + 1};
  }

  std::string to_string() const {
    return std::string(kind == VarKind::U ? "u[" : "xi[") + std::to_string(row) + "," + std::to_string(col) + "]";
  }

  friend bool operator==(const Variable&, const Variable&) = default;
};

inline std::size_t variable_count(const Shape& s) { return static_cast<std::size_t>(s.m * s.n + s.n * s.q); }

using Exponents = std::vector<std::uint8_t>;

inline unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Total degree first, then lexicographic on the exponent vector; larger terms first.
struct DegLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

struct Bidegree {
  int u = 0;
  int xi = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Rational, DegLexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(const Shape& s) : shape_(s) {}

  static SparsePoly constant(const Shape& s, const Rational& c) {
    SparsePoly p(s);
    if (sgn(c) != 0) p.terms_.emplace(Exponents(variable_count(s), 0), c);
    return p;
  }
  static SparsePoly one(const Shape& s) { return constant(s, 1); }
  static SparsePoly var(const Shape& s, Variable v) {
    SparsePoly p(s);
    Exponents e(variable_count(s), 0);
    e[v.index(s)] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
  }
  static SparsePoly u(const Shape& s, int i, int j) { return var(s, {VarKind::U, i, j}); }
  static SparsePoly xi(const Shape& s, int k, int l) { return var(s, {VarKind::Xi, k, l}); }

  const Shape& shape() const noexcept { return shape_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, Rational c) {
    if (sgn(c) == 0) return;
    c.canonicalize();  // mpq_class(3, 3) is not reduced on construction
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& g) {
    check_same(g);
    for (auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& g) {
    check_same(g);
    for (auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(Rational c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    c.canonicalize();
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly f, const SparsePoly& g) { return f += g; }
  friend SparsePoly operator-(SparsePoly f, const SparsePoly& g) { return f -= g; }
  friend SparsePoly operator-(SparsePoly f) { return f *= Rational(-1); }
  friend SparsePoly operator*(const Rational& c, SparsePoly f) { return f *= c; }

  friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
    f.check_same(g);
    SparsePoly out(f.shape_);
    Exponents e(variable_count(f.shape_));
    for (auto& [ea, ca] : f.terms_)
      for (auto& [eb, cb] : g.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) {
          unsigned v = unsigned(ea[k]) + eb[k];
          if (v > 255) throw ResourceError("exponent overflow in polynomial product");
          e[k] = static_cast<std::uint8_t>(v);
        }
        out.add_term(e, ca * cb);
      }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& g) { return *this = *this * g; }

  friend bool operator==(const SparsePoly& f, const SparsePoly& g) { return f.shape_ == g.shape_ && f.terms_ == g.terms_; }

  /// (u-degree, xi-degree) if every term agrees; nullopt for inhomogeneous input.
  /// The zero polynomial reports (0,0).
  std::optional<Bidegree> bidegree() const {
    const auto mn = static_cast<std::size_t>(shape_.m * shape_.n);
    std::optional<Bidegree> out;
    for (auto& [e, c] : terms_) {
      Bidegree d;
      for (std::size_t k = 0; k < e.size(); ++k) (k < mn ? d.u : d.xi) += e[k];
      if (out && *out != d) return std::nullopt;
      out = d;
    }
    return out ? out : Bidegree{};
  }

  /// Partial derivative in the variable with the given global index.
  SparsePoly derivative(std::size_t var) const {
    SparsePoly out(shape_);
    for (auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  /// "c * u[i,j]^e * xi[k,l]^e" terms joined by " + " / " - "; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
      Rational mag = abs(c);
      if (first)
        out += sgn(c) < 0 ? "-" : "";
      else
        out += sgn(c) < 0 ? " - " : " + ";
      first = false;
      out += to_short_string(mag);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        out += " * " + Variable::from_index(k, shape_).to_string();
        if (e[k] > 1) out += "^" + std::to_string(e[k]);
      }
    }
    return out;
  }

  static SparsePoly parse(const Shape& s, std::string_view text);

 private:
  void check_same(const SparsePoly& g) const {
    if (!(shape_ == g.shape_)) throw ParameterError("polynomials over different shapes " + shape_.to_string() + " vs " + g.shape_.to_string());
  }

  Shape shape_;
  TermMap terms_;
};

namespace detail {
class PolyParser {
 public:
  PolyParser(const Shape& s, std::string_view t) : shape_(s), text_(t) {}

  SparsePoly run() {
    SparsePoly out(shape_);
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      out.add_term(e, sign * c);
      skip();
    }
    return out;
  }

 private:
  std::pair<Exponents, Rational> term() {
    Exponents e(variable_count(shape_), 0);
    Rational c = 1;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= number();
      } else if (peek() == 'u' || peek() == 'x') {
        auto [idx, pw] = power();
        unsigned v = unsigned(e[idx]) + pw;
        if (v > 255) fail("exponent too large");
        e[idx] = static_cast<std::uint8_t>(v);
      } else {
        fail("expected a coefficient or variable");
      }
      skip();
      if (peek() != '*') break;
      get();
    }
    return {e, c};
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') get();
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::pair<std::size_t, unsigned> power() {
    VarKind kind;
    if (text_.substr(pos_, 3) == "xi[") {
      kind = VarKind::Xi;
      pos_ += 3;
    } else if (text_.substr(pos_, 2) == "u[") {
      kind = VarKind::U;
      pos_ += 2;
    } else {
      fail("unknown variable");
    }
    int row = integer();
    expect(',');
    int col = integer();
    expect(']');
    unsigned pw = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      pw = static_cast<unsigned>(integer());
    }
    try {
      return {Variable{kind, row, col}.index(shape_), pw};
    } catch (const ParameterError& err) {
      throw ParseError(err.what());
    }
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_ || pos_ - start > 6) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  Shape shape_;
  std::string_view text_;
  std::size_t pos_ = 0;
};
}  // namespace detail

inline SparsePoly SparsePoly::parse(const Shape& s, std::string_view text) { return detail::PolyParser(s, text).run(); }

/// Determinant of a square matrix of polynomials, by signed permutation expansion.
inline SparsePoly determinant(const std::vector<std::vector<SparsePoly>>& a, const Shape& s) {
  const std::size_t r = a.size();
  if (r == 0) return SparsePoly::one(s);
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  SparsePoly out(s);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inversions;
    SparsePoly prod = a[0][perm[0]];
    for (std::size_t i = 1; i < r && !prod.is_zero(); ++i) prod = prod * a[i][perm[i]];
    if (inversions % 2) out -= prod;
    else out += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// φ_ij = Σ_s u_is ξ_sj.
inline SparsePoly phi(const Shape& s, int i, int j) {
  if (i < 1 || i > s.m || j < 1 || j > s.q) throw ParameterError("phi index out of range");
  SparsePoly out(s);
  for (int k = 1; k <= s.n; ++k) out += SparsePoly::u(s, i, k) * SparsePoly::xi(s, k, j);
  return out;
}

/// Minor of the m x q matrix (φ_ij) on raw row/column lists; repeats allowed.
inline SparsePoly phi_minor(const Shape& s, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw ParameterError("minor needs as many rows as columns");
  std::vector<std::vector<SparsePoly>> a(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c : cols) a[i].push_back(phi(s, rows[i], c));
  return determinant(a, s);
}

/// p(A, B): the #A-minor of (φ_ij) on rows A and columns B. p(∅, ∅) = 1.
inline SparsePoly eval_p(const Shape& s, const IndexTuple& rows, const IndexTuple& cols) {
  if (rows.size() != cols.size()) throw ParameterError("p(A,B) needs #A == #B");
  if (static_cast<int>(rows.size()) > s.n) throw ParameterError("p(A,B) needs #A <= n");
  rows.check_bound(s.m);
  cols.check_bound(s.q);
  return phi_minor(s, rows.entries(), cols.entries());
}

/// u(I): the n-minor of U on rows I.
inline SparsePoly eval_u(const Shape& s, const IndexTuple& rows) {
  if (static_cast<int>(rows.size()) != s.n) throw ParameterError("u(I) needs #I == n");
  rows.check_bound(s.m);
  std::vector<std::vector<SparsePoly>> a(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int k = 1; k <= s.n; ++k) a[i].push_back(SparsePoly::u(s, rows[i], k));
  return determinant(a, s);
}

/// ξ(J): the n-minor of W on columns J.
inline SparsePoly eval_xi(const Shape& s, const IndexTuple& cols) {
  if (static_cast<int>(cols.size()) != s.n) throw ParameterError("xi(J) needs #J == n");
  cols.check_bound(s.q);
  std::vector<std::vector<SparsePoly>> a(static_cast<std::size_t>(s.n));
  for (int k = 1; k <= s.n; ++k)
    for (int c : cols) a[static_cast<std::size_t>(k - 1)].push_back(SparsePoly::xi(s, k, c));
  return determinant(a, s);
}

/// Derivation induced by X in gl_n under A.(U, W) = (UA, A^{-1}W):
///   X.f = Σ (XW)_kl ∂f/∂ξ_kl - Σ (UX)_ij ∂f/∂u_ij.
inline SparsePoly lie_derive(const RationalMatrix& X, const SparsePoly& f) {
  const Shape& s = f.shape();
  if (X.rows() != static_cast<std::size_t>(s.n) || X.cols() != static_cast<std::size_t>(s.n))
    throw ParameterError("lie_derive needs an n x n matrix");
  SparsePoly out(s);
  const int mn = s.m * s.n;
  for (auto& [e, c] : f.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      const Rational base = c * e[v];
      Exponents d = e;
      --d[v];
      if (static_cast<int>(v) < mn) {
        // u_ij, (UX)_ij = Σ_t u_it X_tj
        const int i = static_cast<int>(v) / s.n, j = static_cast<int>(v) % s.n;
        for (int t = 0; t < s.n; ++t) {
          const Rational& x = X(static_cast<std::size_t>(t), static_cast<std::size_t>(j));
          if (sgn(x) == 0) continue;
          Exponents g = d;
          ++g[static_cast<std::size_t>(i * s.n + t)];
          out.add_term(g, -base * x);
        }
      } else {
        // ξ_kl, (XW)_kl = Σ_t X_kt ξ_tl
        const int w = static_cast<int>(v) - mn, k = w / s.q, l = w % s.q;
        for (int t = 0; t < s.n; ++t) {
          const Rational& x = X(static_cast<std::size_t>(k), static_cast<std::size_t>(t));
          if (sgn(x) == 0) continue;
          Exponents g = d;
          ++g[static_cast<std::size_t>(mn + t * s.q + l)];
          out.add_term(g, base * x);
        }
      }
    }
  }
  return out;
}

}  // namespace smt
