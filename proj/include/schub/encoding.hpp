#pragma once

#include <optional>
#include <set>

#include "schub/perm.hpp"

namespace schub {

struct NotSeparated : std::runtime_error {
  NotSeparated() : std::runtime_error("pair does not satisfy the separated-descent condition") {}
};
struct NotAlmostSeparated : std::runtime_error {
  NotAlmostSeparated() : std::runtime_error("pair does not satisfy the almost-separated-descent condition") {}
};
struct BoundaryMismatch : std::runtime_error {
  explicit BoundaryMismatch(const std::string& m) : std::runtime_error(m) {}
};

// Boundary strings over a finite alphabet of letters 0..d plus blank.
constexpr int BLANK = -1;

inline std::vector<int> parse_letter_string(const std::string& s) {
  std::vector<int> v;
  for (char c : s) {
    if (c == '_')
      v.push_back(BLANK);
    else if (c >= '0' && c <= '9')
      v.push_back(c - '0');
    else
      throw std::invalid_argument("bad letter string");
  }
  return v;
}

inline std::string print_letter_string(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += x == BLANK ? '_' : char('0' + x);
  return s;
}

inline int count_blanks(const std::vector<int>& v) {
  int c = 0;
  for (int x : v) c += x == BLANK;
  return c;
}

// Bottom labels for the almost-separated rule: a down letter, an up letter,
// or one of the two parity labels.
struct NuTok {
  enum Kind { Down = 0, Odd = 1, Up = 2, Even = 3 };
  Kind kind;
  int letter;  // unused for Odd/Even

  bool operator==(const NuTok& o) const {
    return kind == o.kind && (kind == Odd || kind == Even || letter == o.letter);
  }
  bool operator<(const NuTok& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Odd || kind == Even) return false;
    return letter < o.letter;
  }
};

inline std::vector<NuTok> parse_nu_tokens(const std::string& s) {
  std::vector<NuTok> v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok == "odd")
      v.push_back({NuTok::Odd, 0});
    else if (tok == "even")
      v.push_back({NuTok::Even, 0});
    else if (tok.size() >= 2 && tok[0] == 'v')
      v.push_back({NuTok::Down, std::stoi(tok.substr(1))});
    else if (tok.size() >= 2 && tok[0] == '^')
      v.push_back({NuTok::Up, std::stoi(tok.substr(1))});
    else
      throw std::invalid_argument("bad bottom token: " + tok);
  }
  return v;
}

inline std::string print_nu_tokens(const std::vector<NuTok>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); i++) {
    if (i) s += ',';
    switch (v[i].kind) {
      case NuTok::Down: s += 'v' + std::to_string(v[i].letter); break;
      case NuTok::Up: s += '^' + std::to_string(v[i].letter); break;
      case NuTok::Odd: s += "odd"; break;
      case NuTok::Even: s += "even"; break;
    }
  }
  return s;
}

// Descent overlap: the number of descents of either permutation lying in
// [min D(pi), max D(rho)]; zero when either descent set is empty or the
// interval is. Drives rule selection: <=1 separated, ==2 almost-separated.
// The endpoints need not be adjacent: D(pi)={1,4}, D(rho)={3} overlaps in
// exactly {1,3}.
inline int overlap(const Perm& pi, const Perm& rho) {
  auto dp = pi.descents();
  auto dr = rho.descents();
  if (dp.empty() || dr.empty()) return 0;
  int lo = dp.front(), hi = dr.back();
  std::set<int> u(dp.begin(), dp.end());
  u.insert(dr.begin(), dr.end());
  int c = 0;
  for (int x : u) c += lo <= x && x <= hi;
  return c;
}

struct SepEncoding {
  int n = 0, k = 0, d = 0, g = 0;
  std::vector<int> lambda, mu;  // NW side from pi, NE side from rho
};

inline std::vector<int> sepdesc_valid_g(const Perm& pi, const Perm& rho, int n) {
  auto dp = pi.pad(n).descents();
  auto dr = rho.pad(n).descents();
  int lo = dr.empty() ? 1 : dr.back();
  int hi = dp.empty() ? n : dp.front();
  std::vector<int> gs;
  for (int g = lo; g <= hi && g <= n; g++) gs.push_back(g);
  return gs;
}

inline SepEncoding sepdesc_encode(const Perm& pi_in, const Perm& rho_in, int n,
                                  std::optional<int> g_opt = std::nullopt) {
  Perm pi = pi_in.pad(n), rho = rho_in.pad(n);
  auto gs = sepdesc_valid_g(pi, rho, n);
  if (gs.empty()) throw NotSeparated();
  int g = g_opt.value_or(gs.front());
  if (std::find(gs.begin(), gs.end(), g) == gs.end())
    throw std::invalid_argument("invalid gratuitous nondescent");

  std::set<int> Npi_s, Nrho_s;
  for (int x : pi.descents()) Npi_s.insert(x);
  for (int x : rho.descents()) Nrho_s.insert(x);
  Npi_s.insert(g);
  Nrho_s.insert(g);
  std::vector<int> Npi(Npi_s.begin(), Npi_s.end()), Nrho(Nrho_s.begin(), Nrho_s.end());

  SepEncoding e;
  e.n = n;
  e.g = g;
  e.k = (int)Nrho.size() - 1;
  e.d = (int)(Npi.size() + Nrho.size()) - 1;

  auto lam = string_of_perm(pi, Npi);
  auto mu = string_of_perm(rho, Nrho);
  e.lambda.resize(n);
  e.mu.resize(n);
  for (int i = 0; i < n; i++) {
    e.lambda[i] = lam[i] == 0 ? BLANK : e.k + lam[i];
    e.mu[i] = mu[i] == e.k + 1 ? BLANK : mu[i];
  }
  return e;
}

struct AsepEncoding {
  int n = 0, k = 0, d = 0, m = 0, r = 0, s = 0;
  std::vector<int> lambda, mu;  // NW side from rho, NE side from pi
};

inline AsepEncoding almostsep_encode(const Perm& pi_in, const Perm& rho_in, int n) {
  Perm pi = pi_in.pad(n), rho = rho_in.pad(n);
  int over = overlap(pi, rho);
  if (over > 2) throw NotAlmostSeparated();

  AsepEncoding e;
  e.n = n;
  if (over == 2) {
    auto dp = pi.descents();
    auto dr = rho.descents();
    e.r = dp.front();
    e.s = dr.back();
    e.m = e.s - e.r;
    std::set<int> N_s(dp.begin(), dp.end()), Np_s(dr.begin(), dr.end());
    N_s.insert(e.s);
    Np_s.insert(e.r);
    std::vector<int> N(N_s.begin(), N_s.end()), Np(Np_s.begin(), Np_s.end());
    e.k = (int)Np.size() - 1;
    e.d = (int)(N.size() + Np.size()) - 2;
    auto lam = string_of_perm(rho, Np);
    auto mu = string_of_perm(pi, N);
    e.lambda.resize(n);
    e.mu.resize(n);
    for (int i = 0; i < n; i++) {
      e.lambda[i] = lam[i] == e.k + 1 ? BLANK : lam[i];
      e.mu[i] = mu[i] == 0 ? BLANK : e.k + mu[i] - 1;
    }
  } else {
    // Gratuitous overlap: embed the separated encoding, leaving the middle
    // letter k unused on both sides.
    SepEncoding s = sepdesc_encode(pi, rho, n);
    e.r = e.s = s.g;
    e.m = 0;
    e.k = s.k + 1;
    e.d = s.d + 1;
    e.lambda = s.mu;
    e.mu.resize(n);
    for (int i = 0; i < n; i++) e.mu[i] = s.lambda[i] == BLANK ? BLANK : s.lambda[i] + 1;
  }
  return e;
}

// Letter orders on the three boundary alphabets, as rank maps used by
// standardization.

// Separated rule: NW has blank smallest, letters k+1..d; NE has letters 0..k
// then blank; bottom letters 0..d in natural order.
inline Perm sep_lambda_perm(const SepEncoding& e) {
  std::vector<int> r(e.n);
  for (int i = 0; i < e.n; i++) r[i] = e.lambda[i] == BLANK ? 0 : e.lambda[i] - e.k;
  return standardize(r);
}
inline Perm sep_mu_perm(const SepEncoding& e) {
  std::vector<int> r(e.n);
  for (int i = 0; i < e.n; i++) r[i] = e.mu[i] == BLANK ? e.k + 1 : e.mu[i];
  return standardize(r);
}
inline Perm sigma_of_nu_sep(const std::vector<int>& nu) {
  for (int x : nu)
    if (x == BLANK) throw std::invalid_argument("blank in bottom string");
  return standardize(nu);
}

// Almost-separated rule: NW has letters 0..k then blank; NE has blank then
// letters k..d; bottom is ordered v0 < ... < v(k-1) < odd < ^(k+1) < ... < ^d.
inline Perm asep_lambda_perm(const AsepEncoding& e) {
  std::vector<int> r(e.n);
  for (int i = 0; i < e.n; i++) r[i] = e.lambda[i] == BLANK ? e.k + 1 : e.lambda[i];
  return standardize(r);
}
inline Perm asep_mu_perm(const AsepEncoding& e) {
  std::vector<int> r(e.n);
  for (int i = 0; i < e.n; i++) r[i] = e.mu[i] == BLANK ? 0 : e.mu[i] - e.k + 1;
  return standardize(r);
}
inline int asep_nu_rank(const NuTok& t, int k) {
  switch (t.kind) {
    case NuTok::Down:
      if (t.letter >= k) throw std::invalid_argument("down letter must be below k");
      return t.letter;
    case NuTok::Odd: return k;
    case NuTok::Up:
      if (t.letter <= k) throw std::invalid_argument("up letter must exceed k");
      return t.letter;
    default: throw std::invalid_argument("parity label 'even' has no bottom rank");
  }
}
inline Perm sigma_of_nu_asep(const std::vector<NuTok>& nu, int k) {
  std::vector<int> r(nu.size());
  for (size_t i = 0; i < nu.size(); i++) r[i] = asep_nu_rank(nu[i], k);
  return standardize(r);
}

// Global order on the separated diagonal alphabet: 0<...<k < blank < k+1<...<d.
inline int sep_global_rank(int letter, int k) {
  if (letter == BLANK) return k + 1;
  return letter <= k ? letter : letter + 1;
}
inline int sep_letter_of_rank(int rank, int k) {
  if (rank == k + 1) return BLANK;
  return rank <= k ? rank : rank - 1;
}

}  // namespace schub
