#pragma once

// Generic-parameter layer. A single-alphabet R-matrix evaluated at exact
// rational points, matrix elements of its braided products along reduced
// words, a randomized check of the product identity satisfied by generic
// puzzles, and Euler characteristics of generically translated triple
// intersections, counted by untwisted puzzles at q = -1.

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog_almostsep.hpp"
#include "catalog_sepdesc.hpp"
#include "constants.hpp"
#include "encoding.hpp"
#include "grid.hpp"
#include "perm.hpp"

namespace schub {

// Entry <out (i,j)|, R(z', z'') |in (m,l)> of the normalized single-alphabet
// R-matrix. Labels are compared in their alphabet's order; the entry vanishes
// unless {i,j} = {m,l} as multisets. The table is symmetric in in/out.
inline mpq_class typeA_rmatrix_entry(int i, int j, int m, int l, const mpq_class& zp,
                                     const mpq_class& zpp, const mpq_class& q) {
  if (zp == 0) throw sepdesc::PoleHit();
  mpq_class zeta = zpp / zp;
  mpq_class den = 1 - q * q * zeta;
  if (den == 0) throw sepdesc::PoleHit();
  if (i == j && j == m && m == l) return mpq_class(1);
  if (i == l && j == m && i != j) return q * (1 - zeta) / den;
  if (i == m && j == l && i < j) return (1 - q * q) / den;
  if (i == m && j == l && i > j) return (1 - q * q) * zeta / den;
  return mpq_class(0);
}

namespace detail {

// Applies the R-matrix product along `word` (rightmost letter first, each
// factor taking the spectral parameters currently sitting on the positions it
// acts on) to e_ranks and extracts the coefficient of the sorted string.
inline mpq_class segre_word(const std::vector<int>& ranks, const std::vector<int>& word,
                            const mpq_class& q, const std::vector<mpq_class>& z) {
  int n = (int)ranks.size();
  if ((int)z.size() != n) throw std::invalid_argument("need one spectral parameter per position");
  for (int i : word)
    if (i < 1 || i + 1 > n) throw std::invalid_argument("word letter acts outside the string");
  std::map<std::vector<int>, mpq_class> state{{ranks, mpq_class(1)}};
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 0);
  for (int t = (int)word.size() - 1; t >= 0; t--) {
    int i = word[t] - 1;
    const mpq_class& zp = z[line[i]];
    const mpq_class& zpp = z[line[i + 1]];
    if (zp == 0) throw sepdesc::PoleHit();
    mpq_class zeta = zpp / zp;
    mpq_class den = 1 - q * q * zeta;
    if (den == 0) throw sepdesc::PoleHit();
    mpq_class cross = q * (1 - zeta) / den;
    mpq_class stay_lt = (1 - q * q) / den;
    mpq_class stay_gt = stay_lt * zeta;
    std::map<std::vector<int>, mpq_class> next;
    for (auto& [s, c] : state) {
      if (s[i] == s[i + 1]) {
        next[s] += c;
        continue;
      }
      next[s] += c * (s[i] < s[i + 1] ? stay_lt : stay_gt);
      std::vector<int> sw = s;
      std::swap(sw[i], sw[i + 1]);
      next[std::move(sw)] += c * cross;
    }
    state = std::move(next);
    std::swap(line[i], line[i + 1]);
  }
  std::vector<int> omega = ranks;
  std::sort(omega.begin(), omega.end());
  auto it = state.find(omega);
  return it == state.end() ? mpq_class(0) : it->second;
}

}  // namespace detail

// Matrix element <e_{sort(ranks)}^*, R_sigma e_ranks> of the braided product
// of single-alphabet R-matrices along a reduced word of sigma. Independent of
// the chosen word by the Yang-Baxter equation.
inline mpq_class segre_restriction(const std::vector<int>& ranks, const Perm& sigma,
                                   const mpq_class& q, const std::vector<mpq_class>& z) {
  return detail::segre_word(ranks, reduced_word(sigma), q, z);
}

// Comparison ranks of a diagonal string in its own alphabet: the NW alphabet
// reads blank < k+1 < ... < d, the NE alphabet reads 0 < ... < k < blank.
inline std::vector<int> sep_a1_ranks(const std::vector<int>& s, int k) {
  std::vector<int> r(s.size());
  for (size_t i = 0; i < s.size(); i++) r[i] = s[i] == BLANK ? 0 : s[i] - k;
  return r;
}
inline std::vector<int> sep_a2_ranks(const std::vector<int>& s, int k) {
  std::vector<int> r(s.size());
  for (size_t i = 0; i < s.size(); i++) r[i] = s[i] == BLANK ? k + 1 : s[i];
  return r;
}

inline mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(1, 40);
  mpq_class r(pick(rng), pick(rng));
  r.canonicalize();
  return r;
}

// Checks, at `trials` independently drawn rational points, that the generic
// equivariant puzzle coefficients of (lambda, mu) pair against the bottom
// restriction operators to give the product of the side restrictions:
//   sum_nu puzzle(lambda, mu, nu) S^nu_3|sigma = S^lambda_1|sigma S^mu_2|sigma.
// Points hitting a pole of any R-matrix factor are redrawn.
inline bool verify_puzzle_identity(const std::vector<int>& lambda, const std::vector<int>& mu,
                                   int k, int d, const Perm& sigma, int trials,
                                   std::mt19937_64& rng) {
  int n = (int)lambda.size();
  if ((int)mu.size() != n) throw std::invalid_argument("side lengths differ");
  std::vector<int> nw(n), ne(n);
  for (int i = 0; i < n; i++) {
    nw[i] = sep_global_rank(lambda[n - 1 - i], k);
    ne[i] = sep_global_rank(mu[i], k);
  }
  std::vector<int> l1 = sep_a1_ranks(lambda, k);
  std::vector<int> m2 = sep_a2_ranks(mu, k);
  for (int t = 0; t < trials; t++) {
    for (int tries = 0;; tries++) {
      if (tries >= 64) throw std::runtime_error("could not find a pole-free random point");
      mpq_class q = random_rational(rng);
      if (q == 1) continue;
      std::vector<mpq_class> z;
      int draws = 0;
      while ((int)z.size() < n && draws++ < 1024) {
        mpq_class cand = random_rational(rng);
        if (std::find(z.begin(), z.end(), cand) == z.end()) z.push_back(cand);
      }
      if ((int)z.size() < n) continue;
      try {
        sepdesc::GenericEq cat({k, d}, n, q, z);
        std::map<std::vector<int>, mpq_class> bottoms;
        enumerate_puzzles(cat, n, nw, ne,
                          [&](const Puzzle<mpq_class>& puz) { bottoms[puz.nu] += puz.fug; });
        mpq_class lhs(0);
        for (auto& [nu, c] : bottoms) {
          if (c == 0) continue;
          lhs += c * segre_restriction(nu, sigma, q, z);
        }
        mpq_class rhs =
            segre_restriction(l1, sigma, q, z) * segre_restriction(m2, sigma, q, z);
        if (lhs != rhs) return false;
      } catch (const sepdesc::PoleHit&) {
        continue;
      }
      break;
    }
  }
  return true;
}

// chi = (-1)^{dim Y} * (number of untwisted puzzles at q = -1 whose drawn
// bottom matches), where Y is the triple intersection of generic translates
// of the two pulled-back cells and the cell of the reversed bottom string.
struct EulerResult {
  long puzzles = 0;
  long dim_y = 0;
  long chi = 0;
};

namespace detail {

inline long dim_refined_flag(const std::vector<int>& bottom_ranks) {
  std::map<int, long> mult;
  for (int r : bottom_ranks) mult[r]++;
  long n = (long)bottom_ranks.size(), sq = 0;
  for (auto& [r, p] : mult) sq += p * p;
  return (n * n - sq) / 2;
}

inline long euler_sign_exponent(long dim_f3, const Perm& f_lambda, const Perm& f_mu,
                                const Perm& f_rev_nu) {
  return dim_f3 - f_lambda.length() - f_mu.length() - f_rev_nu.length();
}

template <typename Cat>
inline long count_bottom(const Cat& cat, int n, const std::vector<int>& nw,
                         const std::vector<int>& ne, const std::vector<int>& target) {
  long count = 0;
  enumerate_puzzles(cat, n, nw, ne, [&](const Puzzle<mpz_class>& puz) {
    if (puz.fug != 1)
      throw std::logic_error("untwisted fugacity differs from 1 at the Euler point");
    if (puz.nu == target) count++;
  });
  return count;
}

inline long chi_of(long count, long dim_y) {
  return ((dim_y % 2) + 2) % 2 == 0 ? count : -count;
}

}  // namespace detail

inline EulerResult euler_characteristic_sepdesc(const std::vector<int>& lambda,
                                                const std::vector<int>& mu,
                                                const std::vector<int>& nu, int k, int d) {
  int n = (int)lambda.size();
  if ((int)mu.size() != n || (int)nu.size() != n)
    throw std::invalid_argument("side lengths differ");
  std::vector<int> nw(n), ne(n), target(n);
  for (int i = 0; i < n; i++) {
    nw[i] = sep_global_rank(lambda[n - 1 - i], k);
    ne[i] = sep_global_rank(mu[i], k);
    if (nu[i] == BLANK) throw std::invalid_argument("blank in bottom string");
    target[i] = sep_global_rank(nu[i], k);
  }
  EulerResult res;
  res.puzzles = detail::count_bottom(sepdesc::EulerQm1(k, d), n, nw, ne, target);
  std::vector<int> rev(nu.rbegin(), nu.rend());
  res.dim_y = detail::euler_sign_exponent(
      detail::dim_refined_flag(nu), standardize(sep_a1_ranks(lambda, k)),
      standardize(sep_a2_ranks(mu, k)), standardize(rev));
  res.chi = detail::chi_of(res.puzzles, res.dim_y);
  return res;
}

inline EulerResult euler_characteristic_almostsep(const std::vector<int>& lambda,
                                                  const std::vector<int>& mu,
                                                  const std::vector<NuTok>& nu, int k, int d) {
  int n = (int)lambda.size();
  if ((int)mu.size() != n || (int)nu.size() != n)
    throw std::invalid_argument("side lengths differ");
  std::vector<int> nw(n), ne(n), target(n), ranks(n), rev_ranks(n);
  for (int i = 0; i < n; i++) {
    nw[i] = almostsep::mask_of_letter(lambda[n - 1 - i]);
    ne[i] = almostsep::mask_of_letter(mu[i]);
    target[i] = almostsep::tok_code(nu[i]);
    ranks[i] = asep_nu_rank(nu[i], k);
    rev_ranks[i] = asep_nu_rank(nu[n - 1 - i], k);
  }
  std::vector<int> l1(n), m2(n);
  for (int i = 0; i < n; i++) {
    l1[i] = lambda[i] == BLANK ? k + 1 : lambda[i];
    m2[i] = mu[i] == BLANK ? 0 : mu[i] - k + 1;
  }
  EulerResult res;
  res.puzzles = detail::count_bottom(almostsep::EulerQm1(k, d), n, nw, ne, target);
  res.dim_y = detail::euler_sign_exponent(detail::dim_refined_flag(ranks), standardize(l1),
                                          standardize(m2), standardize(rev_ranks));
  res.chi = detail::chi_of(res.puzzles, res.dim_y);
  return res;
}

// String front end; the alphabet bounds are inferred from the letters present.
inline EulerResult euler_characteristic(const std::string& lambda, const std::string& mu,
                                        const std::string& nu, Rule rule) {
  auto max_letter = [](const std::vector<int>& s) {
    int m = -1;
    for (int x : s)
      if (x != BLANK) m = std::max(m, x);
    return m;
  };
  std::vector<int> l = parse_letter_string(lambda);
  std::vector<int> m = parse_letter_string(mu);
  if (rule == Rule::SepDesc) {
    std::vector<int> v = parse_letter_string(nu);
    int k = max_letter(m);
    if (k < 0) throw std::invalid_argument("cannot infer the alphabet split from a letterless NE side");
    int d = std::max({k + 1, max_letter(l), max_letter(v)});
    for (int x : l)
      if (x != BLANK && x <= k) throw std::invalid_argument("NW letter on the NE side of the split");
    return euler_characteristic_sepdesc(l, m, v, k, d);
  }
  if (rule == Rule::AlmostSep) {
    std::vector<NuTok> v = parse_nu_tokens(nu);
    int lo = std::max(0, max_letter(l));
    int hi = std::numeric_limits<int>::max();
    for (int x : m)
      if (x != BLANK) hi = std::min(hi, x);
    for (const NuTok& t : v) {
      if (t.kind == NuTok::Down) lo = std::max(lo, t.letter + 1);
      if (t.kind == NuTok::Up) hi = std::min(hi, t.letter - 1);
      if (t.kind == NuTok::Even)
        throw std::invalid_argument("parity label 'even' cannot sit on the bottom side");
    }
    if (hi == std::numeric_limits<int>::max()) hi = lo;
    if (lo > hi) throw std::invalid_argument("sides do not admit a common alphabet split");
    int k = lo;
    int d = k;
    d = std::max(d, max_letter(m));
    for (const NuTok& t : v)
      if (t.kind != NuTok::Odd) d = std::max(d, t.letter);
    return euler_characteristic_almostsep(l, m, v, k, d);
  }
  throw std::invalid_argument("Euler characteristics need an explicit rule");
}

}  // namespace schub
