#pragma once

// Independent ground truth: invariant dimensions from Lie algebra kernels, exact ranks.

#include <map>
#include <string>
#include <vector>

#include "smt/error.hpp"
#include "smt/linalg.hpp"
#include "smt/parallel.hpp"
#include "smt/polyring.hpp"

namespace smt {

enum class Group { SL, GL };

inline std::string to_string(Group g) { return g == Group::SL ? "SL" : "GL"; }

/// Basis of sl_n (E_ij for i != j and E_ii - E_{i+1,i+1}) or of gl_n (all E_ij).
inline std::vector<RationalMatrix> lie_basis(int n, Group g) {
  std::vector<RationalMatrix> out;
  const auto N = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j || g == Group::GL) out.push_back(RationalMatrix::unit(N, i, j));
  if (g == Group::SL)
    for (std::size_t i = 0; i + 1 < N; ++i) {
      RationalMatrix h(N, N);
      h(i, i) = 1;
      h(i + 1, i + 1) = -1;
      out.push_back(std::move(h));
    }
  return out;
}

/// Exact rank of a list of polynomials over Q.
inline std::size_t rank_of(const std::vector<SparsePoly>& polys) {
  std::map<Exponents, std::size_t, DegLexGreater> col_of;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (auto& f : polys) {
    std::vector<std::pair<std::size_t, Rational>> row;
    for (auto& [e, c] : f.terms()) row.emplace_back(col_of.try_emplace(e, col_of.size()).first->second, c);
    std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  std::vector<IntRow> irows;
  irows.reserve(rows.size());
  for (auto& r : rows) irows.push_back(integer_row(r));
  return bareiss_rank(std::move(irows), col_of.size());
}

namespace detail {
// All exponent vectors of total degree `deg` over `count` variables, written at offset `off`.
inline void compositions(std::size_t off, std::size_t count, int deg, Exponents& cur, std::vector<Exponents>& out,
                         std::size_t k = 0) {
  if (k + 1 == count) {
    cur[off + k] = static_cast<std::uint8_t>(deg);
    out.push_back(cur);
    cur[off + k] = 0;
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[off + k] = static_cast<std::uint8_t>(e);
    compositions(off, count, deg - e, cur, out, k + 1);
  }
  cur[off + k] = 0;
}

// Row indices of u's and column indices of ξ's, with multiplicity. Preserved by gl_n.
inline std::vector<int> torus_content(const Exponents& e, const Shape& s) {
  std::vector<int> c(static_cast<std::size_t>(s.m + s.q), 0);
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.n; ++j) c[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i * s.n + j)];
  const int mn = s.m * s.n;
  for (int k = 0; k < s.n; ++k)
    for (int l = 0; l < s.q; ++l) c[static_cast<std::size_t>(s.m + l)] += e[static_cast<std::size_t>(mn + k * s.q + l)];
  return c;
}
}  // namespace detail

/// All monomials of bidegree (a, b), as exponent vectors.
inline std::vector<Exponents> monomial_basis(const Shape& s, Bidegree deg) {
  const auto mn = static_cast<std::size_t>(s.m * s.n), nq = static_cast<std::size_t>(s.n * s.q);
  std::vector<Exponents> us, xs, out;
  Exponents cur(mn + nq, 0);
  detail::compositions(0, mn, deg.u, cur, us);
  detail::compositions(mn, nq, deg.xi, cur, xs);
  out.reserve(us.size() * xs.size());
  for (auto& a : us)
    for (auto& b : xs) {
      Exponents e = a;
      for (std::size_t k = mn; k < e.size(); ++k) e[k] = b[k];
      out.push_back(std::move(e));
    }
  return out;
}

/// Dimension of the G-invariants of bidegree (a, b) in characteristic zero: the joint
/// kernel of the Lie algebra action on the monomial space. The action preserves the
/// row content of U and column content of W, so the matrix is solved block by block.
inline std::size_t invariant_dimension(const Shape& s, Bidegree deg, Group g, std::size_t cap = 5000) {
  if (deg.u < 0 || deg.xi < 0) throw ParameterError("bidegree must be non-negative");
  const auto mn = static_cast<long>(s.m * s.n), nq = static_cast<long>(s.n * s.q);
  const Integer size = binomial(mn + deg.u - 1, deg.u) * binomial(nq + deg.xi - 1, deg.xi);
  if (size > cap)
    throw ResourceError("monomial space of bidegree (" + std::to_string(deg.u) + "," + std::to_string(deg.xi) + ") has " +
                        size.get_str() + " elements, cap is " + std::to_string(cap));
  std::map<std::vector<int>, std::vector<Exponents>> blocks;
  for (auto& e : monomial_basis(s, deg)) blocks[detail::torus_content(e, s)].push_back(std::move(e));
  std::vector<const std::pair<const std::vector<int>, std::vector<Exponents>>*> list;
  for (auto& b : blocks) list.push_back(&b);

  const auto basis = lie_basis(s.n, g);
  std::vector<std::size_t> kernel(list.size());
  parallel_for(list.size(), [&](std::size_t k) {
    const auto& [key, monos] = *list[k];
    std::map<std::pair<std::size_t, Exponents>, std::size_t> col_of;
    std::vector<IntRow> rows;
    for (auto& e : monos) {
      SparsePoly f(s);
      f.add_term(e, 1);
      std::vector<std::pair<std::size_t, Rational>> row;
      for (std::size_t x = 0; x < basis.size(); ++x) {
        const SparsePoly image = lie_derive(basis[x], f);
        for (auto& [img, c] : image.terms()) {
          if (detail::torus_content(img, s) != key) throw InvariantError("Lie action left its content block");
          row.emplace_back(col_of.try_emplace({x, img}, col_of.size()).first->second, c);
        }
      }
      std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
      rows.push_back(integer_row(row));
    }
    kernel[k] = monos.size() - bareiss_rank(std::move(rows), col_of.size());
  });
  std::size_t total = 0;
  for (auto v : kernel) total += v;
  return total;
}

/// Dimension of the degree-k part of K[φ_ij], the algebra generated by the pairings.
/// When m = q = n+1 the only relation is det(φ) and the count is the coefficient of
/// t^k in (1 - t^{n+1}) / (1 - t)^{mq}; otherwise it is the exact rank of the
/// evaluated degree-k monomials in the φ_ij.
inline Integer gl_hilbert_oracle(int m, int q, int n, int k, std::size_t cap = 5000) {
  if (k < 0) throw ParameterError("degree must be non-negative");
  const long mq = static_cast<long>(m) * q;
  if (m == q && m == n + 1) return binomial(mq + k - 1, k) - binomial(mq + k - 1 - (n + 1), k - (n + 1));
  Shape s(n, m, q);
  const Integer size = binomial(mq + k - 1, k);
  if (size > cap) throw ResourceError("degree-" + std::to_string(k) + " monomials in the pairings exceed the cap");
  // Monomials of degree k in the mq pairings, grouped by the same content blocks.
  std::vector<Exponents> phis;
  Exponents cur(static_cast<std::size_t>(mq), 0);
  detail::compositions(0, static_cast<std::size_t>(mq), k, cur, phis);
  std::vector<SparsePoly> pairing;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= q; ++j) pairing.push_back(phi(s, i, j));
  std::map<std::vector<int>, std::vector<SparsePoly>> blocks;
  for (auto& e : phis) {
    SparsePoly f = SparsePoly::one(s);
    std::vector<int> key(static_cast<std::size_t>(m + q), 0);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int r = 0; r < e[v]; ++r) {
        f = f * pairing[v];
        ++key[v / static_cast<std::size_t>(q)];
        ++key[static_cast<std::size_t>(m) + v % static_cast<std::size_t>(q)];
      }
    blocks[key].push_back(std::move(f));
  }
  Integer total = 0;
  for (auto& [key, polys] : blocks) total += rank_of(polys);
  return total;
}

}  // namespace smt
