#pragma once

// Monomials in the generators, their content, standardness and enumeration.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "smt/error.hpp"
#include "smt/polyring.hpp"
#include "smt/poset.hpp"

namespace smt {

/// S: the algebra generated by u(I), ξ(J), p(A,B). RD: the same with TOP and BOT adjoined.
enum class Mode { S, RD };

inline std::string to_string(Mode m) { return m == Mode::S ? "S" : "RD"; }

/// Row indices consumed on the u side and column indices on the ξ side, as count vectors.
struct Content {
  std::vector<int> u;   // length m, u[i-1] = multiplicity of row i
  std::vector<int> xi;  // length q

  Content() = default;
  explicit Content(const Shape& s) : u(static_cast<std::size_t>(s.m), 0), xi(static_cast<std::size_t>(s.q), 0) {}

  Content& operator+=(const Content& o) {
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += o.u[k];
    for (std::size_t k = 0; k < xi.size(); ++k) xi[k] += o.xi[k];
    return *this;
  }
  friend Content operator+(Content a, const Content& b) { return a += b; }

  /// True iff o can be taken away without going negative.
  bool contains(const Content& o) const {
    for (std::size_t k = 0; k < u.size(); ++k)
      if (o.u[k] > u[k]) return false;
    for (std::size_t k = 0; k < xi.size(); ++k)
      if (o.xi[k] > xi[k]) return false;
    return true;
  }
  Content& operator-=(const Content& o) {
    for (std::size_t k = 0; k < u.size(); ++k) u[k] -= o.u[k];
    for (std::size_t k = 0; k < xi.size(); ++k) xi[k] -= o.xi[k];
    return *this;
  }

  bool empty() const {
    return std::all_of(u.begin(), u.end(), [](int c) { return c == 0; }) &&
           std::all_of(xi.begin(), xi.end(), [](int c) { return c == 0; });
  }
  Bidegree bidegree() const {
    Bidegree d;
    for (int c : u) d.u += c;
    for (int c : xi) d.xi += c;
    return d;
  }

  /// "{1,1,2|3}": the u multiset, then the ξ multiset.
  std::string to_string() const {
    auto side = [](const std::vector<int>& cnt) {
      std::string out;
      for (std::size_t k = 0; k < cnt.size(); ++k)
        for (int r = 0; r < cnt[k]; ++r) {
          if (!out.empty()) out += ',';
          out += std::to_string(k + 1);
        }
      return out;
    };
    return "{" + side(u) + "|" + side(xi) + "}";
  }

  friend bool operator==(const Content&, const Content&) = default;
  friend auto operator<=>(const Content&, const Content&) = default;
};

/// Content of one generator. TOP and BOT consume nothing: TOP stands for the empty minor.
inline Content content(const DElement& x, const Shape& s) {
  Content c(s);
  for (int i : x.a) ++c.u[static_cast<std::size_t>(i - 1)];
  for (int j : x.b) ++c.xi[static_cast<std::size_t>(j - 1)];
  return c;
}

inline Bidegree generator_bidegree(const DElement& x) {
  return {static_cast<int>(x.a.size()), static_cast<int>(x.b.size())};
}

/// Multiset of generators, kept sorted from the top down (lattice coordinates, descending).
class GenMonomial {
 public:
  GenMonomial() = default;
  GenMonomial(const Shape& s, Mode mode, std::vector<DElement> factors) : shape_(s), mode_(mode), factors_(std::move(factors)) {
    for (auto& x : factors_) {
      x.validate(s);
      if (mode == Mode::S && !x.in_h()) throw ParameterError("TOP/BOT are not allowed in S mode: " + x.to_string());
    }
    canonicalize();
  }

  const Shape& shape() const noexcept { return shape_; }
  Mode mode() const noexcept { return mode_; }
  const std::vector<DElement>& factors() const noexcept { return factors_; }
  std::size_t degree() const noexcept { return factors_.size(); }
  const DElement& operator[](std::size_t k) const { return factors_[k]; }
  /// Concatenated lattice coordinates of the factors; defines the monomial order.
  const std::vector<int>& key() const noexcept { return key_; }

  Content content() const {
    Content c(shape_);
    for (auto& x : factors_) c += smt::content(x, shape_);
    return c;
  }
  Bidegree bidegree() const { return content().bidegree(); }

  /// Product with another monomial.
  GenMonomial operator*(const GenMonomial& o) const {
    auto f = factors_;
    f.insert(f.end(), o.factors_.begin(), o.factors_.end());
    return GenMonomial(shape_, mode_ == Mode::RD || o.mode_ == Mode::RD ? Mode::RD : Mode::S, std::move(f));
  }

  /// Drops factors at positions i and j and appends `extra`.
  GenMonomial replace_pair(std::size_t i, std::size_t j, const std::vector<DElement>& extra) const {
    std::vector<DElement> f;
    f.reserve(factors_.size() + extra.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
      if (k != i && k != j) f.push_back(factors_[k]);
    f.insert(f.end(), extra.begin(), extra.end());
    return GenMonomial(shape_, mode_, std::move(f));
  }

  /// S-mode image: TOP and BOT evaluate to 1.
  GenMonomial strip() const {
    std::vector<DElement> f;
    for (auto& x : factors_)
      if (x.in_h()) f.push_back(x);
    return GenMonomial(shape_, Mode::S, std::move(f));
  }

  /// "*"-joined factors from the top down; "1" for the empty monomial.
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (k) out += '*';
      out += factors_[k].to_string();
    }
    return out;
  }

  static GenMonomial parse(const Shape& s, std::string_view text, Mode mode) {
    std::string t = detail::trim(text);
    std::vector<DElement> f;
    if (t != "1") {
      std::size_t pos = 0;
      while (true) {
        auto star = t.find('*', pos);
        f.push_back(parse_element(std::string_view(t).substr(pos, star == std::string::npos ? std::string::npos : star - pos), s));
        if (star == std::string::npos) break;
        pos = star + 1;
      }
    }
    for (auto& x : f)
      if (!x.in_h() && mode == Mode::S) throw ParseError("TOP/BOT need RD mode: '" + t + "'");
    return GenMonomial(s, mode, std::move(f));
  }

  /// RD unless the text mentions TOP or BOT.
  static GenMonomial parse(const Shape& s, std::string_view text) {
    bool rd = text.find("TOP") != std::string_view::npos || text.find("BOT") != std::string_view::npos;
    return parse(s, text, rd ? Mode::RD : Mode::S);
  }

  friend bool operator==(const GenMonomial& a, const GenMonomial& b) { return a.mode_ == b.mode_ && a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const GenMonomial& a, const GenMonomial& b) {
    if (auto c = a.key_ <=> b.key_; c != 0) return c;
    return a.mode_ <=> b.mode_;
  }

 private:
  void canonicalize() {
    std::vector<std::pair<ChainVector, DElement>> tagged;
    tagged.reserve(factors_.size());
    for (auto& x : factors_) tagged.emplace_back(lattice_coords(x, shape_), x);
    std::sort(tagged.begin(), tagged.end(), [](auto& l, auto& r) { return l.first > r.first; });
    key_.clear();
    for (std::size_t k = 0; k < tagged.size(); ++k) {
      factors_[k] = tagged[k].second;
      key_.insert(key_.end(), tagged[k].first.entries.begin(), tagged[k].first.entries.end());
    }
  }

  Shape shape_;
  Mode mode_ = Mode::S;
  std::vector<DElement> factors_;
  std::vector<int> key_;
};

/// Positions (i < j) of factor pairs that block standardness: incomparable pairs,
/// which includes every u/ξ pair.
inline std::vector<std::pair<std::size_t, std::size_t>> violating_pairs(const GenMonomial& M) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < M.degree(); ++i)
    for (std::size_t j = i + 1; j < M.degree(); ++j)
      if (!comparable(M[i], M[j])) out.emplace_back(i, j);
  return out;
}

/// Standard iff no u meets a ξ and the factors form a multichain.
inline bool is_standard(const GenMonomial& M) {
  bool has_u = false, has_xi = false;
  for (auto& x : M.factors()) {
    has_u |= x.is_u();
    has_xi |= x.is_xi();
  }
  if (has_u && has_xi) return false;
  // Factors are sorted along a linear extension, so consecutive comparability suffices.
  for (std::size_t k = 1; k < M.degree(); ++k)
    if (!leq_H(M[k], M[k - 1])) return false;
  return true;
}

namespace detail {
// Elements sorted from the top down by lattice coordinates.
inline std::vector<DElement> sorted_desc(std::vector<DElement> elems, const Shape& s) {
  std::vector<std::pair<ChainVector, DElement>> tagged;
  for (auto& x : elems) tagged.emplace_back(lattice_coords(x, s), x);
  std::sort(tagged.begin(), tagged.end(), [](auto& l, auto& r) { return l.first > r.first; });
  for (std::size_t k = 0; k < tagged.size(); ++k) elems[k] = tagged[k].second;
  return elems;
}

// Walks weakly decreasing chains x_1 >= x_2 >= ... drawn from `pool` (sorted top-down).
// `accept(x)` decides if x still fits the budget, `take`/`give` update it, `done()` says
// the current chain is complete. Chains are reported through `emit`.
struct ChainWalker {
  const std::vector<DElement>& pool;
  std::function<bool(const DElement&)> accept;
  std::function<void(const DElement&)> take;
  std::function<void(const DElement&)> give;
  std::function<bool()> done;
  std::function<void(const std::vector<DElement>&)> emit;
  std::vector<DElement> chain;

  void run(std::size_t from) {
    if (done()) {
      emit(chain);
      return;
    }
    for (std::size_t k = from; k < pool.size(); ++k) {
      const DElement& x = pool[k];
      if (!chain.empty() && !leq_H(x, chain.back())) continue;
      if (!accept(x)) continue;
      take(x);
      chain.push_back(x);
      run(k);
      chain.pop_back();
      give(x);
    }
  }
};
}  // namespace detail

inline std::vector<GenMonomial> sort_canonical(std::vector<GenMonomial> v) {
  std::sort(v.begin(), v.end(), [](const GenMonomial& a, const GenMonomial& b) { return a > b; });
  return v;
}

/// Standard monomials of S with the given bidegree, in canonical (descending) order.
inline std::vector<GenMonomial> enumerate_standard(const Shape& s, Bidegree deg) {
  if (deg.u < 0 || deg.xi < 0) throw ParameterError("bidegree must be non-negative");
  // Multichains in H never mix u and ξ since those are incomparable.
  auto pool = detail::sorted_desc(h_elements(s), s);
  Bidegree left = deg;
  std::vector<GenMonomial> out;
  detail::ChainWalker w{pool,
                        [&](const DElement& x) {
                          auto d = generator_bidegree(x);
                          return d.u <= left.u && d.xi <= left.xi;
                        },
                        [&](const DElement& x) {
                          auto d = generator_bidegree(x);
                          left.u -= d.u;
                          left.xi -= d.xi;
                        },
                        [&](const DElement& x) {
                          auto d = generator_bidegree(x);
                          left.u += d.u;
                          left.xi += d.xi;
                        },
                        [&] { return left.u == 0 && left.xi == 0; },
                        [&](const std::vector<DElement>& c) { out.emplace_back(s, Mode::S, c); },
                        {}};
  w.run(0);
  return sort_canonical(std::move(out));
}

/// Standard monomials of S built from p-generators only, with the given total minor size.
inline std::vector<GenMonomial> enumerate_standard_p_only(const Shape& s, int size) {
  std::vector<GenMonomial> out;
  for (auto& M : enumerate_standard(s, {size, size}))
    if (std::all_of(M.factors().begin(), M.factors().end(), [](const DElement& x) { return x.is_p(); })) out.push_back(M);
  return out;
}

/// Standard monomials of R(D) of degree k: the k-element multichains of D.
inline std::vector<GenMonomial> enumerate_standard_rd(const Shape& s, int k) {
  if (k < 0) throw ParameterError("degree must be non-negative");
  auto pool = detail::sorted_desc(d_elements(s), s);
  int left = k;
  std::vector<GenMonomial> out;
  detail::ChainWalker w{pool,
                        [&](const DElement&) { return left > 0; },
                        [&](const DElement&) { --left; },
                        [&](const DElement&) { ++left; },
                        [&] { return left == 0; },
                        [&](const std::vector<DElement>& c) { out.emplace_back(s, Mode::RD, c); },
                        {}};
  w.run(0);
  return sort_canonical(std::move(out));
}

/// Standard monomials of S whose content is exactly `target`.
inline std::vector<GenMonomial> standard_with_content(const Shape& s, const Content& target) {
  auto pool = detail::sorted_desc(h_elements(s), s);
  std::vector<Content> contents;
  Content left = target;
  std::vector<GenMonomial> out;
  detail::ChainWalker w{pool,
                        [&](const DElement& x) { return left.contains(content(x, s)); },
                        [&](const DElement& x) { left -= content(x, s); },
                        [&](const DElement& x) { left += content(x, s); },
                        [&] { return left.empty(); },
                        [&](const std::vector<DElement>& c) { out.emplace_back(s, Mode::S, c); },
                        {}};
  w.run(0);
  return sort_canonical(std::move(out));
}

/// Polynomial values of the generators for one shape, computed once.
/// Immutable after construction, so it can be shared between threads.
class Evaluator {
 public:
  explicit Evaluator(const Shape& s) : shape_(s) {
    for (auto& x : d_elements(s)) cache_.emplace(x, compute(x));
  }

  const Shape& shape() const noexcept { return shape_; }

  const SparsePoly& operator()(const DElement& x) const {
    auto it = cache_.find(x);
    if (it == cache_.end()) throw ParameterError("element not in D" + shape_.to_string() + ": " + x.to_string());
    return it->second;
  }

  SparsePoly operator()(const GenMonomial& M) const {
    SparsePoly out = SparsePoly::one(shape_);
    for (auto& x : M.factors())
      if (x.in_h()) out = out * (*this)(x);
    return out;
  }

 private:
  SparsePoly compute(const DElement& x) const {
    switch (x.kind) {
      case Kind::U: return eval_u(shape_, x.a);
      case Kind::Xi: return eval_xi(shape_, x.b);
      case Kind::P: return eval_p(shape_, x.a, x.b);
      default: return SparsePoly::one(shape_);
    }
  }

  Shape shape_;
  std::map<DElement, SparsePoly> cache_;
};

}  // namespace smt
