#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schub/laurent.hpp"

namespace schub {

// The four polynomial families, built top-down from dominant permutations.
// Results are stable under trailing fixed points, so cache keys are trimmed
// one-line words.

namespace detail {

inline bool is_dominant(const std::vector<int>& code) {
  return std::is_sorted(code.rbegin(), code.rend());
}

inline int first_ascent(const Perm& w) {
  for (int i = 1; i < w.size(); i++)
    if (w(i) < w(i + 1)) return i;
  return 0;
}

inline Perm swap_positions(const Perm& w, int i) {
  auto v = w.one_line();
  std::swap(v[i - 1], v[i]);
  return Perm(std::move(v));
}

// A dominant permutation's polynomial is the product over the cells (i, j),
// j <= code_i, of its staircase diagram; this grounds the recursion far below
// the longest element.
template <bool Groth, bool Double>
inline LaurentPoly dominant_poly(const std::vector<int>& code) {
  LaurentPoly f(1);
  for (int i = 1; i <= (int)code.size(); i++) {
    if constexpr (!Double) {
      if constexpr (Groth) {
        LaurentPoly b = LaurentPoly(1) - LaurentPoly::x(i);
        for (int e = 0; e < code[i - 1]; e++) f *= b;
      } else if (code[i - 1] > 0) {
        f *= LaurentPoly::x(i, code[i - 1]);
      }
    } else {
      for (int j = 1; j <= code[i - 1]; j++) {
        if constexpr (Groth)
          f *= LaurentPoly(1) - LaurentPoly::x(i) * LaurentPoly::y(j, -1);
        else
          f *= LaurentPoly::x(i) - LaurentPoly::y(j);
      }
    }
  }
  return f;
}

template <bool Groth, bool Double>
inline const LaurentPoly& family_poly(const Perm& w_in) {
  static std::map<std::vector<int>, LaurentPoly> cache;
  Perm w = w_in.trim();
  auto it = cache.find(w.one_line());
  if (it != cache.end()) return it->second;
  LaurentPoly f;
  if (auto code = w.code(); is_dominant(code)) {
    f = dominant_poly<Groth, Double>(code);
  } else {
    int i = first_ascent(w);
    const LaurentPoly& up = family_poly<Groth, Double>(swap_positions(w, i));
    f = Groth ? up.demazure(i) : up.divided_difference(i);
  }
  return cache.emplace(w.one_line(), std::move(f)).first->second;
}

// Substitute x_i -> 1 - x_i for every i. Defined for ordinary polynomials
// in x only (no q, no y, no negative exponents).
inline LaurentPoly subs_one_minus_x(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  int m = 0;
  for (auto& [mono, c] : f.terms()) {
    if (mono.q != 0 || !mono.y.empty())
      throw std::invalid_argument("substitution expects a pure x polynomial");
    for (int e : mono.x)
      if (e < 0) throw std::invalid_argument("substitution expects ordinary exponents");
    m = std::max<int>(m, mono.x.size());
  }
  LaurentPoly g = f;
  for (int i = 1; i <= m; i++) {
    std::map<int, LaurentPoly> slices;
    for (auto& [mono, c] : g.terms()) {
      int a = i - 1 < (int)mono.x.size() ? mono.x[i - 1] : 0;
      Mono rest = mono;
      if (i - 1 < (int)rest.x.size()) rest.x[i - 1] = 0;
      rest.canon();
      slices[a] += LaurentPoly::monomial(rest, c);
    }
    LaurentPoly lin = LaurentPoly(1) - LaurentPoly::x(i);
    LaurentPoly acc;
    int cur = slices.rbegin()->first;
    for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
      for (; cur > it->first; cur--) acc *= lin;
      acc += it->second;
    }
    for (; cur > 0; cur--) acc *= lin;
    g = std::move(acc);
  }
  return g;
}

}  // namespace detail

inline const LaurentPoly& schubert_poly(const Perm& w) {
  return detail::family_poly<false, false>(w);
}
inline const LaurentPoly& schubert_double(const Perm& w) {
  return detail::family_poly<false, true>(w);
}
inline const LaurentPoly& grothendieck_poly(const Perm& w) {
  return detail::family_poly<true, false>(w);
}
inline const LaurentPoly& grothendieck_double(const Perm& w) {
  return detail::family_poly<true, true>(w);
}

// The same one-variable-set class written after x_i -> 1 - x_i. In these
// variables the lowest-degree homogeneous part is the Schubert polynomial,
// which is what the greedy expansion below keys on. Basis coefficients are
// unchanged by the substitution.
inline const LaurentPoly& grothendieck_poly_x(const Perm& w_in) {
  static std::map<std::vector<int>, LaurentPoly> cache;
  Perm w = w_in.trim();
  auto it = cache.find(w.one_line());
  if (it != cache.end()) return it->second;
  LaurentPoly g = detail::subs_one_minus_x(grothendieck_poly(w));
  return cache.emplace(w.one_line(), std::move(g)).first->second;
}

// Greedy expansions in the corresponding basis. All are exact and verified by
// a zero final remainder; supports are not restricted here.

inline std::map<Perm, LaurentPoly> expand_schubert(LaurentPoly f, bool dbl) {
  std::map<Perm, LaurentPoly> out;
  size_t guard = 0;
  while (!f.is_zero()) {
    if (++guard > 100000) throw std::runtime_error("expansion does not terminate");
    auto xs = *f.lead_x_lex();
    Perm sigma = Perm::from_code(xs);
    LaurentPoly c = f.coeff_of_x(xs);
    if (!dbl && !c.as_int()) throw std::runtime_error("nonconstant coefficient");
    f -= c * (dbl ? schubert_double(sigma) : schubert_poly(sigma));
    if (!out.emplace(std::move(sigma), std::move(c)).second)
      throw std::runtime_error("expansion revisited a basis element");
  }
  return out;
}

// Input must be written in the substituted variables of grothendieck_poly_x,
// so that minimal-degree parts are Schubert polynomials.
inline std::map<Perm, LaurentPoly> expand_grothendieck(LaurentPoly f) {
  std::map<Perm, LaurentPoly> out;
  size_t guard = 0;
  while (!f.is_zero()) {
    if (++guard > 100000) throw std::runtime_error("expansion does not terminate");
    auto xs = *f.lead_x_mindeg();
    Perm sigma = Perm::from_code(xs);
    LaurentPoly c = f.coeff_of_x(xs);
    if (!c.as_int()) throw std::runtime_error("nonconstant coefficient");
    f -= c * grothendieck_poly_x(sigma);
    if (!out.emplace(std::move(sigma), std::move(c)).second)
      throw std::runtime_error("expansion revisited a basis element");
  }
  return out;
}

// Equivariant K: solve against the fixed-point restrictions G^sigma(y_w; y),
// lower-triangular in Bruhat order with nonzero diagonal. Works entirely
// inside S_n, which is also what the puzzle side computes.
inline std::map<Perm, LaurentPoly> expand_grothendieck_double(const LaurentPoly& f, int n) {
  std::vector<Perm> order;
  {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do order.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    std::stable_sort(order.begin(), order.end(),
                     [](const Perm& a, const Perm& b) { return a.length() < b.length(); });
  }
  std::map<Perm, LaurentPoly> out;
  for (const Perm& w : order) {
    LaurentPoly r = f.restrict_x(w);
    for (auto& [sigma, c] : out) r -= c * grothendieck_double(sigma).restrict_x(w);
    if (r.is_zero()) continue;
    LaurentPoly diag = grothendieck_double(w).restrict_x(w);
    out.emplace(w, exact_div(std::move(r), diag));
  }
  return out;
}

enum class Theory { H, K, HT, KT };

inline const char* theory_name(Theory t) {
  switch (t) {
    case Theory::H: return "H";
    case Theory::K: return "K";
    case Theory::HT: return "HT";
    default: return "KT";
  }
}

// Structure constants of the product, restricted to S_n (stability makes the
// polynomial expansion independent of the ambient group; terms outside S_n
// are dropped, matching what size-n puzzles see).
inline std::map<Perm, LaurentPoly> oracle_constants(const Perm& pi_in, const Perm& rho_in,
                                                    int n, Theory th) {
  Perm pi = pi_in.trim(), rho = rho_in.trim();
  std::map<Perm, LaurentPoly> raw;
  switch (th) {
    case Theory::H:
      raw = expand_schubert(schubert_poly(pi) * schubert_poly(rho), false);
      break;
    case Theory::HT:
      raw = expand_schubert(schubert_double(pi) * schubert_double(rho), true);
      break;
    case Theory::K:
      raw = expand_grothendieck(grothendieck_poly_x(pi) * grothendieck_poly_x(rho));
      break;
    case Theory::KT:
      raw = expand_grothendieck_double(grothendieck_double(pi) * grothendieck_double(rho), n);
      break;
  }
  std::map<Perm, LaurentPoly> out;
  for (auto& [sigma, c] : raw) {
    if (sigma.support() > n) continue;
    out.emplace(sigma.pad(n), std::move(c));
  }
  return out;
}

}  // namespace schub
