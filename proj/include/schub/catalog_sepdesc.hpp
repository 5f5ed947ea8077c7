#pragma once

#include <gmpxx.h>

#include <stdexcept>

#include "schub/encoding.hpp"
#include "schub/laurent.hpp"

// Tile catalogs for the separated-descent rule. Edge labels are the global
// ranks 0..d+1 of the diagonal alphabet (the blank sits at rank k+1), so a
// single integer order covers letters and blank uniformly.
namespace schub::sepdesc {

struct Alphabet {
  int k = 0, d = 0;
  int beta() const { return k + 1; }
  int labels() const { return d + 2; }
};

inline int pair_code(int lo, int hi) { return lo * 256 + hi; }
inline int pair_lo(int code) { return code / 256; }
inline int pair_hi(int code) { return code % 256; }

// Up-triangle with NW=nw, NE=ne (horizontal label {nw, ne}). Returns the
// fugacity sign, 0 when the piece is absent; charge counts the K-specific
// pieces.
inline int up_piece(const Alphabet& al, bool withK, int nw, int ne, int& charge) {
  charge = 0;
  int beta = al.beta();
  if (nw == ne) return 0;
  if (nw > ne || nw == beta || ne == beta) return 1;
  if (withK && nw <= al.k && ne >= al.k + 2) {
    charge = 1;
    return -1;
  }
  return 0;
}

// Moves (sw, se, fug, charge) out of the horizontal pair {lo, hi}, lo < hi.
template <typename F>
inline void down_moves(const Alphabet& al, bool withK, int lo, int hi, F&& f) {
  int beta = al.beta();
  f(lo, hi, 1, 0);
  if (lo == beta || hi == beta) f(hi, lo, 1, 0);
  if (withK && (hi <= al.k || lo >= al.k + 2)) f(hi, lo, -1, 1);
}

// Cohomology (withK = false) and K-theory (withK = true) catalogs.
class HK {
 public:
  using Fug = mpz_class;
  Alphabet al;
  bool withK;
  HK(int k, int d, bool withK_) : al{k, d}, withK(withK_) {}

  template <typename E>
  void rhombus(int, int, int, int nw, int ne, E&& emit) const {
    int chU;
    int fu = up_piece(al, withK, nw, ne, chU);
    if (!fu) return;
    int lo = std::min(nw, ne), hi = std::max(nw, ne);
    down_moves(al, withK, lo, hi, [&](int sw, int se, int fd, int chD) {
      emit(sw, se, pair_code(lo, hi), Fug(fu * fd), chU + chD);
    });
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    int chU;
    int fu = up_piece(al, withK, nw, ne, chU);
    if (!fu) return;
    if (nw != al.beta() && ne != al.beta()) return;
    emit(nw == al.beta() ? ne : nw, Fug(fu), chU);
  }
};

// Equivariant cohomology: the cohomology catalog plus an unbisected all-blank
// rhombus of weight y_{n+1-p} - y_q.
class HT {
 public:
  using Fug = LaurentPoly;
  Alphabet al;
  explicit HT(int k, int d) : al{k, d} {}

  template <typename E>
  void rhombus(int n, int p, int q, int nw, int ne, E&& emit) const {
    int beta = al.beta();
    if (nw == beta && ne == beta) {
      emit(beta, beta, -1, LaurentPoly::y(n + 1 - p) - LaurentPoly::y(q), 0);
      return;
    }
    int chU;
    int fu = up_piece(al, false, nw, ne, chU);
    if (!fu) return;
    int lo = std::min(nw, ne), hi = std::max(nw, ne);
    down_moves(al, false, lo, hi, [&](int sw, int se, int fd, int) {
      emit(sw, se, pair_code(lo, hi), LaurentPoly(long(fu * fd)), 0);
    });
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    int chU;
    int fu = up_piece(al, false, nw, ne, chU);
    if (!fu) return;
    if (nw != al.beta() && ne != al.beta()) return;
    emit(nw == al.beta() ? ne : nw, LaurentPoly(long(fu)), 0);
  }
};

// Equivariant K-theory. States live on whole rhombi: labels either cross or
// bounce, with fugacities in z = y_{n+1-p}/y_q.
class KT {
 public:
  using Fug = LaurentPoly;
  Alphabet al;
  explicit KT(int k, int d) : al{k, d} {}

  template <typename E>
  void rhombus(int n, int p, int q, int nw, int ne, E&& emit) const {
    int beta = al.beta();
    LaurentPoly z = LaurentPoly::y(n + 1 - p) * LaurentPoly::y(q, -1);
    if (nw == beta && ne == beta) {
      emit(beta, beta, -1, LaurentPoly(1) - z, 0);
      return;
    }
    if (nw == ne) return;
    int m = nw, l = ne;
    if (l < m || l == beta || m == beta) emit(l, m, -1, LaurentPoly(1), 0);
    int i = m, j = l;
    if (i < beta && beta < j)
      emit(m, l, -1, -z, 0);
    else if ((j < i && i < beta) || (beta < j && j < i))
      emit(m, l, -1, LaurentPoly(-1), 0);
    else if ((i == beta && beta < j) || (i < j && j == beta))
      emit(m, l, -1, z, 0);
    else if ((j == beta && beta < i) || (j < i && i == beta))
      emit(m, l, -1, LaurentPoly(1), 0);
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    int chU;
    int fu = up_piece(al, true, nw, ne, chU);
    if (!fu) return;
    if (nw != al.beta() && ne != al.beta()) return;
    emit(nw == al.beta() ? ne : nw, LaurentPoly(long(fu)), chU);
  }
};

// Generic (R-matrix) entries, one per crossing orientation; the horizontal
// label of a bisected rhombus is forced to equal the multiset of labels
// passing through.
inline LaurentPoly untwisted_up(int i, int j) {
  if (i == j) return LaurentPoly();
  return i > j ? LaurentPoly(1) : -LaurentPoly::q();
}
inline LaurentPoly untwisted_down(int i, int j) {
  if (i == j) return LaurentPoly();
  return i < j ? LaurentPoly(1) : -LaurentPoly::q(-1);
}

// Twisted variant whose q -> 0 limit is the K-theory catalog.
inline LaurentPoly twisted_up(const Alphabet& al, int i, int j) {
  int beta = al.beta();
  if (i == j) return LaurentPoly();
  if (i > j || i == beta || j == beta) return LaurentPoly(1);
  if (i < beta && beta < j) return LaurentPoly(-1);
  return -LaurentPoly::q(2);
}
inline LaurentPoly twisted_down(const Alphabet& al, int i, int j) {
  int beta = al.beta();
  if (i == j) return LaurentPoly();
  if (i < j || i == beta || j == beta) return LaurentPoly(1);
  if (j > beta || i < beta) return LaurentPoly(-1);
  return -LaurentPoly::q(2);
}

// Untwisted catalog at q = -1, where every generic fugacity equals 1; used
// for Euler characteristic counts.
class EulerQm1 {
 public:
  using Fug = mpz_class;
  Alphabet al;
  explicit EulerQm1(int k, int d) : al{k, d} {}

  template <typename E>
  void rhombus(int, int, int, int nw, int ne, E&& emit) const {
    if (nw == ne) return;
    int lo = std::min(nw, ne), hi = std::max(nw, ne);
    emit(lo, hi, pair_code(lo, hi), Fug(1), 0);
    emit(hi, lo, pair_code(lo, hi), Fug(1), 0);
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    if (nw == ne) return;
    if (nw != al.beta() && ne != al.beta()) return;
    emit(nw == al.beta() ? ne : nw, Fug(1), 0);
  }
};

struct PoleHit : std::runtime_error {
  PoleHit() : std::runtime_error("parameter choice hits a pole of the generic catalog") {}
};

// Generic equivariant catalog at a numeric point: spectral parameter z_q on
// the q-th NE line, z_{n+1-p} on the p-th NW line, quantum parameter qv.
class GenericEq {
 public:
  using Fug = mpq_class;
  Alphabet al;
  int n;
  mpq_class qv;
  std::vector<mpq_class> z;

  GenericEq(const Alphabet& al_, int n_, const mpq_class& qv_, std::vector<mpq_class> z_)
      : al(al_), n(n_), qv(qv_), z(std::move(z_)) {
    if ((int)z.size() != n) throw std::invalid_argument("need one spectral parameter per line");
    if (qv == 0) throw PoleHit();
    for (auto& zi : z)
      if (zi == 0) throw PoleHit();
    for (int p = 1; p < n; p++)
      for (int q = 1; p + q <= n; q++)
        if (1 - qv * qv * ratio(p, q) == 0) throw PoleHit();
  }

  // Table argument of the crossing at (p, q): the NW line's parameter over the
  // NE line's, the same ratio whose K-theory shadow is y_{n+1-p}/y_q.
  mpq_class ratio(int p, int q) const { return z[n - p] / z[q - 1]; }

  template <typename E>
  void rhombus(int, int p, int q, int nw, int ne, E&& emit) const {
    mpq_class zr = ratio(p, q);
    mpq_class den = 1 - qv * qv * zr;
    int m = nw, l = ne;
    if (m == l) {
      emit(m, l, -1, mpq_class(qv * (1 - zr) / den), 0);
      return;
    }
    emit(l, m, -1, mpq_class(1), 0);
    if (m < l)
      emit(m, l, -1, mpq_class(-qv * (1 - qv * qv) * zr / den), 0);
    else
      emit(m, l, -1, mpq_class(-(1 - qv * qv) / (qv * den)), 0);
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    if (nw == ne) return;
    if (nw != al.beta() && ne != al.beta()) return;
    emit(nw == al.beta() ? ne : nw, nw > ne ? mpq_class(1) : mpq_class(-qv), 0);
  }
};

}  // namespace schub::sepdesc
