#pragma once

#include <string>

#include "smt/error.hpp"

namespace smt {

/// Ambient sizes: V = K^n, m copies of V and q copies of V*.
struct Shape {
  int n = 2;
  int m = 3;
  int q = 3;

  Shape() = default;
  Shape(int n_, int m_, int q_) : n(n_), m(m_), q(q_) {
    if (n < 1) throw ParameterError("n must be positive");
    if (m <= n || q <= n)
      throw ParameterError("need m, q > n; got (n,m,q)=" + to_string());
  }

  int max_mq() const noexcept { return m > q ? m : q; }
  /// Number of entries of a lattice coordinate vector.
  int chain_length() const noexcept { return 2 * n + 2; }
  /// Rank d of H; maximal chains of H have d+1 elements, of D d+3.
  int h_rank() const noexcept { return (m + q) * n - n * n; }

  std::string to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(q) + ")";
  }

  friend bool operator==(const Shape&, const Shape&) = default;
};

}  // namespace smt
