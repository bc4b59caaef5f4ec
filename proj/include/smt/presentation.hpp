#pragma once

// Compares the kernel of K[H] -> S with the ideal spanned by the degree-2 relations,
// degree by degree (degree = number of factors, all lower degrees included).

#include <array>
#include <map>
#include <string>
#include <vector>

#include "smt/generators.hpp"
#include "smt/oracle.hpp"
#include "smt/parallel.hpp"
#include "smt/straighten.hpp"

namespace smt {

struct PresentationDegree {
  int degree = 0;
  std::size_t monomials = 0;      // free monomials of degree <= d
  std::size_t kernel = 0;         // dim of the kernel of evaluation on them
  std::size_t relation_span = 0;  // dim of the span of (monomial * relation) of degree <= d
  bool pass() const noexcept { return kernel == relation_span; }
};

struct PresentationReport {
  Shape shape;
  std::size_t relations = 0;
  std::map<int, std::size_t> family_counts;
  std::vector<PresentationDegree> degrees;
  bool pass() const {
    for (auto& d : degrees)
      if (!d.pass()) return false;
    return true;
  }
};

namespace detail {
// Free monomial on H: sorted element indices.
using FreeMono = std::vector<std::size_t>;

inline void free_monomials(std::size_t count, int deg, std::size_t from, FreeMono& cur, std::vector<FreeMono>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == deg) return;
  for (std::size_t k = from; k < count; ++k) {
    cur.push_back(k);
    free_monomials(count, deg, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// Works in S: TOP and BOT are dropped from the relations.
inline PresentationReport presentation_check(const Straightener& st, int max_degree, std::size_t cap = 50000) {
  using detail::FreeMono;
  const Shape& s = st.shape();
  const Evaluator& ev = st.evaluator();
  const auto H = h_elements(s);
  std::map<DElement, std::size_t> index_of;
  for (std::size_t k = 0; k < H.size(); ++k) index_of[H[k]] = k;

  PresentationReport rep;
  rep.shape = s;

  // Relations as vectors over free monomials: x*y - Σ c * term.
  struct FreeRelation {
    Content content;
    std::vector<std::pair<FreeMono, Rational>> terms;
  };
  std::vector<FreeRelation> rels;
  auto to_free = [&](const GenMonomial& M) {
    FreeMono f;
    for (auto& x : M.factors()) f.push_back(index_of.at(x));
    std::sort(f.begin(), f.end());
    return f;
  };
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j) {
      if (comparable(H[i], H[j])) continue;
      const Relation& r = st.relation(H[i], H[j]);
      ++rep.family_counts[r.family];
      FreeRelation fr{content(H[i], s) + content(H[j], s), {{FreeMono{i, j}, Rational(1)}}};
      for (auto& t : r.rhs_in(Mode::S)) fr.terms.emplace_back(to_free(t.monomial), -t.coeff);
      rels.push_back(std::move(fr));
    }
  rep.relations = rels.size();

  std::vector<FreeMono> all;
  FreeMono cur;
  detail::free_monomials(H.size(), max_degree, 0, cur, all);
  if (all.size() > cap)
    throw ResourceError("presentation check needs " + std::to_string(all.size()) + " free monomials, cap is " + std::to_string(cap));
  auto content_of = [&](const FreeMono& f) {
    Content c(s);
    for (auto k : f) c += content(H[k], s);
    return c;
  };
  std::map<Content, std::vector<FreeMono>> blocks;
  for (auto& f : all) blocks[content_of(f)].push_back(f);
  std::vector<const std::pair<const Content, std::vector<FreeMono>>*> list;
  for (auto& b : blocks) list.push_back(&b);

  const auto D = static_cast<std::size_t>(max_degree + 1);
  // Per block, per degree bound d: (monomials, kernel, relation span).
  std::vector<std::vector<std::array<std::size_t, 3>>> per_block(list.size(), std::vector<std::array<std::size_t, 3>>(D));
  parallel_for(list.size(), [&](std::size_t b) {
    const auto& [key, monos] = *list[b];
    std::map<FreeMono, std::size_t> pos;
    for (std::size_t k = 0; k < monos.size(); ++k) pos[monos[k]] = k;
    std::vector<SparsePoly> values;
    for (auto& f : monos) {
      SparsePoly v = SparsePoly::one(s);
      for (auto k : f) v = v * ev(H[k]);
      values.push_back(std::move(v));
    }
    // Relation multiples that land in this block, tagged with their degree.
    std::vector<std::pair<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> multiples;
    for (auto& r : rels) {
      if (!key.contains(r.content)) continue;
      Content rest = key;
      rest -= r.content;
      auto it = blocks.find(rest);
      if (it == blocks.end()) continue;
      for (auto& mu : it->second) {
        if (static_cast<int>(mu.size()) + 2 > max_degree) continue;
        std::vector<std::pair<std::size_t, Rational>> row;
        for (auto& [mono, c] : r.terms) {
          FreeMono prod = mu;
          prod.insert(prod.end(), mono.begin(), mono.end());
          std::sort(prod.begin(), prod.end());
          row.emplace_back(pos.at(prod), c);
        }
        std::sort(row.begin(), row.end(), [](auto& l, auto& r) { return l.first < r.first; });
        multiples.emplace_back(mu.size() + 2, std::move(row));
      }
    }
    for (std::size_t d = 0; d < D; ++d) {
      std::vector<SparsePoly> vals;
      std::size_t count = 0;
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (monos[k].size() <= d) {
          vals.push_back(values[k]);
          ++count;
        }
      std::vector<IntRow> rows;
      for (auto& [deg, row] : multiples) {
        if (deg > d) continue;
        // Merge duplicate columns before scaling.
        std::map<std::size_t, Rational> merged;
        for (auto& [c, v] : row) merged[c] += v;
        std::vector<std::pair<std::size_t, Rational>> clean(merged.begin(), merged.end());
        rows.push_back(integer_row(clean));
      }
      per_block[b][d] = {count, count - rank_of(vals), bareiss_rank(std::move(rows), monos.size())};
    }
  });
  for (std::size_t d = 1; d < D; ++d) {
    PresentationDegree pd;
    pd.degree = static_cast<int>(d);
    for (auto& blk : per_block) {
      pd.monomials += blk[d][0];
      pd.kernel += blk[d][1];
      pd.relation_span += blk[d][2];
    }
    rep.degrees.push_back(pd);
  }
  return rep;
}

/// Free polynomial ring on the 1x1 pairings φ_ij, degree n+1: the kernel of evaluation
/// is spanned by the (n+1)-minors of (φ_ij).
struct GlPresentation {
  int degree = 0;
  std::size_t monomials = 0;
  std::size_t kernel = 0;
  std::size_t minors = 0;        // number of (n+1)-minors
  std::size_t minors_rank = 0;   // rank of those minors as elements of the free ring
  bool minors_vanish = true;     // every (n+1)-minor evaluates to 0
  bool pass() const noexcept { return minors_vanish && kernel == minors_rank; }
};

inline GlPresentation gl_presentation_check(const Shape& s, std::size_t cap = 50000) {
  GlPresentation out;
  out.degree = s.n + 1;
  const auto mq = static_cast<std::size_t>(s.m * s.q);
  // The free ring on the pairings is modelled by a shape whose "u" variables are the φ's:
  // n' = 1 makes u[k,1] a plain variable for k = 1..mq.
  const Shape free_shape(1, static_cast<int>(mq) + 1, 2);
  std::vector<Exponents> monos;
  Exponents cur(mq, 0);
  detail::compositions(0, mq, out.degree, cur, monos);
  if (monos.size() > cap) throw ResourceError("too many monomials in the pairings");
  out.monomials = monos.size();

  std::vector<SparsePoly> pairing;
  for (int i = 1; i <= s.m; ++i)
    for (int j = 1; j <= s.q; ++j) pairing.push_back(phi(s, i, j));
  // Values only mix within a block of equal row and column content.
  std::map<std::vector<int>, std::vector<Exponents>> blocks;
  for (auto& e : monos) {
    std::vector<int> key(static_cast<std::size_t>(s.m + s.q), 0);
    for (std::size_t v = 0; v < mq; ++v) {
      key[v / static_cast<std::size_t>(s.q)] += e[v];
      key[static_cast<std::size_t>(s.m) + v % static_cast<std::size_t>(s.q)] += e[v];
    }
    blocks[key].push_back(e);
  }
  std::vector<const std::vector<Exponents>*> list;
  for (auto& [key, b] : blocks) list.push_back(&b);
  std::vector<std::size_t> kernel(list.size());
  parallel_for(list.size(), [&](std::size_t b) {
    std::vector<SparsePoly> values;
    for (auto& e : *list[b]) {
      SparsePoly f = SparsePoly::one(s);
      for (std::size_t v = 0; v < e.size(); ++v)
        for (int r = 0; r < e[v]; ++r) f = f * pairing[v];
      values.push_back(std::move(f));
    }
    kernel[b] = values.size() - rank_of(values);
  });
  for (auto k : kernel) out.kernel += k;

  auto free_var = [&](int i, int j) {
    return SparsePoly::u(free_shape, (i - 1) * s.q + j, 1);
  };
  std::vector<SparsePoly> free_minors;
  const auto k = static_cast<int>(out.degree);
  for (auto& rows : enumerate_tuples(k, s.m))
    for (auto& cols : enumerate_tuples(k, s.q)) {
      std::vector<std::vector<SparsePoly>> a(rows.size()), fa(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c : cols) {
          a[r].push_back(pairing[static_cast<std::size_t>((rows[r] - 1) * s.q + (c - 1))]);
          fa[r].push_back(free_var(rows[r], c));
        }
      if (!determinant(a, s).is_zero()) out.minors_vanish = false;
      free_minors.push_back(determinant(fa, free_shape));
    }
  out.minors = free_minors.size();
  out.minors_rank = rank_of(free_minors);
  return out;
}

}  // namespace smt
