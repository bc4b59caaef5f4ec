#pragma once

// Generator poset H = H_u ⊔ H_ξ ⊔ H_p and the lattice D = H ∪ {TOP, BOT}.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smt/error.hpp"
#include "smt/index_tuple.hpp"
#include "smt/shape.hpp"

namespace smt {

enum class Kind : std::uint8_t { Bottom, U, Xi, P, Top };

/// One element of D. u(I) keeps I in `a`, ξ(J) keeps J in `b`,
/// p(A, B) keeps both; TOP and BOT carry no tuples.
struct DElement {
  Kind kind = Kind::Bottom;
  IndexTuple a;
  IndexTuple b;

  static DElement u(IndexTuple rows) { return {Kind::U, std::move(rows), {}}; }
  static DElement xi(IndexTuple cols) { return {Kind::Xi, {}, std::move(cols)}; }
  static DElement p(IndexTuple rows, IndexTuple cols) {
    if (rows.size() != cols.size() || rows.empty())
      throw ParameterError("p(A,B) needs #A == #B >= 1, got p[" + rows.to_string() + "|" + cols.to_string() + "]");
    return {Kind::P, std::move(rows), std::move(cols)};
  }
  static DElement top() { return {Kind::Top, {}, {}}; }
  static DElement bottom() { return {Kind::Bottom, {}, {}}; }

  bool is_u() const noexcept { return kind == Kind::U; }
  bool is_xi() const noexcept { return kind == Kind::Xi; }
  bool is_p() const noexcept { return kind == Kind::P; }
  bool is_top() const noexcept { return kind == Kind::Top; }
  bool is_bottom() const noexcept { return kind == Kind::Bottom; }
  bool in_h() const noexcept { return kind == Kind::U || kind == Kind::Xi || kind == Kind::P; }

  /// Throws unless this is a valid element of D for the given shape.
  void validate(const Shape& s) const {
    switch (kind) {
      case Kind::U:
        if (static_cast<int>(a.size()) != s.n || !b.empty()) throw ParameterError("u[] needs exactly n rows: " + to_string());
        a.check_bound(s.m);
        break;
      case Kind::Xi:
        if (static_cast<int>(b.size()) != s.n || !a.empty()) throw ParameterError("xi[] needs exactly n columns: " + to_string());
        b.check_bound(s.q);
        break;
      case Kind::P:
        if (a.size() != b.size() || a.empty() || static_cast<int>(a.size()) > s.n)
          throw ParameterError("p[] needs 1 <= #A == #B <= n: " + to_string());
        a.check_bound(s.m);
        b.check_bound(s.q);
        break;
      case Kind::Top:
      case Kind::Bottom:
        break;
    }
  }

  /// Compact text form: u[1,2], xi[1,3], p[1,2|1,3], TOP, BOT.
  std::string to_string() const {
    switch (kind) {
      case Kind::U: return "u[" + a.to_string() + "]";
      case Kind::Xi: return "xi[" + b.to_string() + "]";
      case Kind::P: return "p[" + a.to_string() + "|" + b.to_string() + "]";
      case Kind::Top: return "TOP";
      case Kind::Bottom: return "BOT";
    }
    return "?";
  }

  friend bool operator==(const DElement&, const DElement&) = default;
  friend auto operator<=>(const DElement&, const DElement&) = default;
};

namespace detail {
inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  std::string t = trim(s);
  if (t.empty()) return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string item = trim(std::string_view(t).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad index list in '" + std::string(context) + "'");
    out.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}
}  // namespace detail

/// Inverse of DElement::to_string. Validates against the shape when given.
inline DElement parse_element(std::string_view text) {
  std::string t = detail::trim(text);
  if (t == "TOP") return DElement::top();
  if (t == "BOT") return DElement::bottom();
  auto open = t.find('[');
  if (open == std::string::npos || t.back() != ']') throw ParseError("not an element: '" + t + "'");
  std::string head = t.substr(0, open);
  std::string body = t.substr(open + 1, t.size() - open - 2);
  try {
    if (head == "u") return DElement::u(IndexTuple(detail::parse_int_list(body, t)));
    if (head == "xi") return DElement::xi(IndexTuple(detail::parse_int_list(body, t)));
    if (head == "p") {
      auto bar = body.find('|');
      if (bar == std::string::npos) throw ParseError("p[] needs '|': '" + t + "'");
      return DElement::p(IndexTuple(detail::parse_int_list(body.substr(0, bar), t)),
                         IndexTuple(detail::parse_int_list(body.substr(bar + 1), t)));
    }
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown generator '" + head + "' in '" + t + "'");
}

inline DElement parse_element(std::string_view text, const Shape& s) {
  DElement x = parse_element(text);
  try {
    x.validate(s);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  return x;
}

/// The partial order on D:
///  - on H_p the determinantal order (shorter minors are larger);
///  - on H_u and H_ξ the componentwise order;
///  - u's and ξ's are incomparable and never above a p;
///  - u(I) <= p(A,B) iff I <= A, ξ(J) <= p(A,B) iff J <= B;
///  - TOP above and BOT below everything.
inline bool leq_H(const DElement& x, const DElement& y) {
  if (x == y) return true;
  if (x.is_bottom() || y.is_top()) return true;
  if (x.is_top() || y.is_bottom()) return false;
  switch (x.kind) {
    case Kind::P:
      return y.is_p() && leq_tuple(x.a, y.a) && leq_tuple(x.b, y.b);
    case Kind::U:
      if (y.is_u()) return grassmann_leq(x.a, y.a);
      return y.is_p() && leq_tuple(x.a, y.a);
    case Kind::Xi:
      if (y.is_xi()) return grassmann_leq(x.b, y.b);
      return y.is_p() && leq_tuple(x.b, y.b);
    default:
      return false;
  }
}

inline bool less_H(const DElement& x, const DElement& y) { return x != y && leq_H(x, y); }
inline bool comparable(const DElement& x, const DElement& y) { return leq_H(x, y) || leq_H(y, x); }

/// Point of the chain lattice C(m,...,m, q,...,q) (n+1 copies each).
struct ChainVector {
  std::vector<int> entries;

  /// "[1,2,1,1,1,1]"
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(entries[k]);
    }
    return out + "]";
  }

  friend bool operator==(const ChainVector&, const ChainVector&) = default;
  friend auto operator<=>(const ChainVector&, const ChainVector&) = default;
};

inline bool chain_leq(const ChainVector& x, const ChainVector& y) {
  for (std::size_t k = 0; k < x.entries.size(); ++k)
    if (x.entries[k] > y.entries[k]) return false;
  return true;
}

inline ChainVector chain_join(const ChainVector& x, const ChainVector& y) {
  ChainVector out = x;
  for (std::size_t k = 0; k < out.entries.size(); ++k) out.entries[k] = std::max(out.entries[k], y.entries[k]);
  return out;
}

inline ChainVector chain_meet(const ChainVector& x, const ChainVector& y) {
  ChainVector out = x;
  for (std::size_t k = 0; k < out.entries.size(); ++k) out.entries[k] = std::min(out.entries[k], y.entries[k]);
  return out;
}

namespace detail {
// Fills positions [0, n) of one half with the tuple, padded, then the trailing entry.
inline void put_half(std::vector<int>& out, const IndexTuple& t, int pad, int n, int trailing) {
  for (std::size_t k = 0; k < t.size(); ++k) out.push_back(t[k]);
  for (int k = static_cast<int>(t.size()); k < n; ++k) out.push_back(pad);
  out.push_back(trailing);
}

inline void put_const_half(std::vector<int>& out, int value, int n, int trailing) {
  for (int k = 0; k < n; ++k) out.push_back(value);
  out.push_back(trailing);
}
}  // namespace detail

/// The (2n+2)-tuple of the classical embedding of D into C(m^{n+1}, q^{n+1}):
/// p(A,B) -> (A,m..m,1, B,q..q,1), u(I) -> (I,1, 1..1), ξ(J) -> (1..1, J,1),
/// TOP -> (m..m, q..q), BOT -> (1..1).
///
/// This map preserves order, joins and meets, but it is not injective:
/// p(A,B) and p(A+{m}, B+{q}) land on the same vector. Use lattice_coords
/// when an order embedding is needed.
inline ChainVector embed_chain(const DElement& x, const Shape& s) {
  ChainVector v;
  auto& e = v.entries;
  e.reserve(static_cast<std::size_t>(s.chain_length()));
  switch (x.kind) {
    case Kind::P:
      detail::put_half(e, x.a, s.m, s.n, 1);
      detail::put_half(e, x.b, s.q, s.n, 1);
      break;
    case Kind::U:
      detail::put_half(e, x.a, s.m, s.n, 1);
      detail::put_const_half(e, 1, s.n, 1);
      break;
    case Kind::Xi:
      detail::put_const_half(e, 1, s.n, 1);
      detail::put_half(e, x.b, s.q, s.n, 1);
      break;
    case Kind::Top:
      detail::put_const_half(e, s.m, s.n, s.m);
      detail::put_const_half(e, s.q, s.n, s.q);
      break;
    case Kind::Bottom:
      detail::put_const_half(e, 1, s.n, 1);
      detail::put_const_half(e, 1, s.n, 1);
      break;
  }
  return v;
}

/// Floor value of the lattice coordinates: the entry used for "nothing on this side".
/// For n >= 2 it coincides with 1, which no p-generator reaches on both of its
/// first two positions; for n = 1 a separate 0 is needed.
inline int lattice_floor(const Shape& s) noexcept { return s.n >= 2 ? 1 : 0; }

/// Order embedding of D into a product of chains. Same layout as embed_chain
/// except that minors are padded with m+1 (resp. q+1), which keeps p(A,B) and
/// p(A+{m}, B+{q}) apart, and TOP is (m+1.., 2, q+1.., 2).
/// x <= y in D iff lattice_coords(x) <= lattice_coords(y) componentwise, and the
/// image is closed under componentwise max and min.
inline ChainVector lattice_coords(const DElement& x, const Shape& s) {
  const int f = lattice_floor(s);
  const int pad_u = s.m + 1, pad_xi = s.q + 1;
  ChainVector v;
  auto& e = v.entries;
  e.reserve(static_cast<std::size_t>(s.chain_length()));
  switch (x.kind) {
    case Kind::P:
      detail::put_half(e, x.a, pad_u, s.n, 1);
      detail::put_half(e, x.b, pad_xi, s.n, 1);
      break;
    case Kind::U:
      detail::put_half(e, x.a, pad_u, s.n, 1);
      detail::put_const_half(e, f, s.n, 1);
      break;
    case Kind::Xi:
      detail::put_const_half(e, f, s.n, 1);
      detail::put_half(e, x.b, pad_xi, s.n, 1);
      break;
    case Kind::Top:
      detail::put_const_half(e, s.n >= 2 ? pad_u : s.m, s.n, 2);
      detail::put_const_half(e, s.n >= 2 ? pad_xi : s.q, s.n, 2);
      break;
    case Kind::Bottom:
      detail::put_const_half(e, f, s.n, 1);
      detail::put_const_half(e, f, s.n, 1);
      break;
  }
  return v;
}

namespace detail {
// Reads the tuple part of one half: entries before the first pad value.
// Returns false when the half is not of the form (t_1 < ... < t_r, pad, ..., pad, 1).
inline bool read_half(std::span<const int> half, int n, int bound, int pad, std::vector<int>& out) {
  out.clear();
  int k = 0;
  for (; k < n && half[static_cast<std::size_t>(k)] != pad; ++k) {
    int v = half[static_cast<std::size_t>(k)];
    if (v < 1 || v > bound || (!out.empty() && v <= out.back())) return false;
    out.push_back(v);
  }
  for (; k < n; ++k)
    if (half[static_cast<std::size_t>(k)] != pad) return false;
  return half[static_cast<std::size_t>(n)] == 1;
}
}  // namespace detail

/// Preimage of a lattice coordinate vector. Throws InvariantError when there is none.
inline DElement decode_lattice_coords(const ChainVector& v, const Shape& s) {
  if (static_cast<int>(v.entries.size()) != s.chain_length())
    throw InvariantError("lattice coordinate vector has wrong length: " + v.to_string());
  if (v == lattice_coords(DElement::top(), s)) return DElement::top();
  if (v == lattice_coords(DElement::bottom(), s)) return DElement::bottom();

  const auto n = static_cast<std::size_t>(s.n);
  std::span<const int> uh(v.entries.data(), n + 1), xh(v.entries.data() + n + 1, n + 1);
  const int f = lattice_floor(s);
  auto is_floor = [&](std::span<const int> h) {
    for (std::size_t k = 0; k < n; ++k)
      if (h[k] != f) return false;
    return h[n] == 1;
  };
  std::vector<int> rows, cols;
  if (is_floor(xh) && detail::read_half(uh, s.n, s.m, s.m + 1, rows) && static_cast<int>(rows.size()) == s.n)
    return DElement::u(IndexTuple(rows));
  if (is_floor(uh) && detail::read_half(xh, s.n, s.q, s.q + 1, cols) && static_cast<int>(cols.size()) == s.n)
    return DElement::xi(IndexTuple(cols));
  if (detail::read_half(uh, s.n, s.m, s.m + 1, rows) && detail::read_half(xh, s.n, s.q, s.q + 1, cols) &&
      rows.size() == cols.size() && !rows.empty())
    return DElement::p(IndexTuple(rows), IndexTuple(cols));
  throw InvariantError("vector " + v.to_string() + " has no preimage in D" + s.to_string());
}

/// Least upper bound in D, computed through the lattice coordinates.
inline DElement join_D(const DElement& x, const DElement& y, const Shape& s) {
  return decode_lattice_coords(chain_join(lattice_coords(x, s), lattice_coords(y, s)), s);
}

/// Greatest lower bound in D.
inline DElement meet_D(const DElement& x, const DElement& y, const Shape& s) {
  return decode_lattice_coords(chain_meet(lattice_coords(x, s), lattice_coords(y, s)), s);
}

/// Descending order by lattice coordinates, a linear extension of D read top-down.
inline bool coords_greater(const DElement& x, const DElement& y, const Shape& s) {
  return lattice_coords(x, s) > lattice_coords(y, s);
}

/// H_u, then H_ξ, then H_p by minor size, rows, columns. All lexicographic.
inline std::vector<DElement> h_elements(const Shape& s) {
  std::vector<DElement> out;
  for (auto& t : enumerate_tuples(s.n, s.m)) out.push_back(DElement::u(t));
  for (auto& t : enumerate_tuples(s.n, s.q)) out.push_back(DElement::xi(t));
  for (int r = 1; r <= s.n; ++r)
    for (auto& rows : enumerate_tuples(r, s.m))
      for (auto& cols : enumerate_tuples(r, s.q)) out.push_back(DElement::p(rows, cols));
  return out;
}

/// BOT, the elements of H, TOP.
inline std::vector<DElement> d_elements(const Shape& s) {
  std::vector<DElement> out{DElement::bottom()};
  for (auto& x : h_elements(s)) out.push_back(std::move(x));
  out.push_back(DElement::top());
  return out;
}

}  // namespace smt
