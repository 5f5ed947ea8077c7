#pragma once

#include <gmpxx.h>

#include <bit>
#include <stdexcept>

#include "schub/encoding.hpp"
#include "schub/laurent.hpp"

// Tile catalogs for the almost-separated-descent rule. Diagonal edges carry
// subsets of {0..d} stored as bitmasks (boundary letters are singletons, the
// blank is the empty set). Horizontal edges carry arrow/parity tokens: a down
// or up arrow for every letter, plus "odd" and "even". Only a subset of the
// tokens may reach the bottom boundary; interior edges use them all.
namespace schub::almostsep {

struct Alphabet {
  int k = 0, d = 0;
  int full() const { return (1 << (d + 1)) - 1; }
};

inline int tok_code(NuTok t) { return (t.letter << 2) | int(t.kind); }
inline NuTok tok_decode(int code) { return NuTok{NuTok::Kind(code & 3), code >> 2}; }

inline int mask_of_letter(int letter) { return letter == BLANK ? 0 : 1 << letter; }

inline int lowbits(int c) { return c <= 0 ? 0 : (1 << c) - 1; }
inline int count_below(int X, int i) { return std::popcount(unsigned(X & lowbits(i))); }
inline int count_above(int X, int j) { return std::popcount(unsigned(X) >> (j + 1)); }

// The up triangle (NW, NE) supports at most one token: a down arrow when NW
// loses a letter going to NE, an up arrow when it gains one, a parity token
// when the sets agree. Returns -1 when the labels differ by two or more.
inline int up_token(int nw, int ne) {
  int diff = nw ^ ne;
  if (diff == 0)
    return tok_code({std::popcount(unsigned(nw)) % 2 ? NuTok::Odd : NuTok::Even, 0});
  if (std::popcount(unsigned(diff)) != 1) return -1;
  int letter = std::countr_zero(unsigned(diff));
  return tok_code({(nw & diff) ? NuTok::Down : NuTok::Up, letter});
}

// Cohomology and K-theory tile gates. For each piece the K gate is tested
// first; the piece's sign is (-1)^charge, and the cohomology catalog keeps
// exactly the charge-free pieces.
class HK {
 public:
  using Fug = mpz_class;
  Alphabet al;
  bool withK;
  HK(int k, int d, bool withK_) : al{k, d}, withK(withK_) {}

  // X is the smaller diagonal label of the up triangle (equal one for parity
  // tokens). Returns presence; charge out-param.
  bool up_gate(NuTok t, int X, int& charge) const {
    switch (t.kind) {
      case NuTok::Down:
        charge = count_below(X, t.letter);
        if (withK) return (X & lowbits(t.letter + 1) & ~lowbits(al.k)) == 0;
        return (X & lowbits(t.letter + 1)) == 0;
      case NuTok::Up:
        charge = count_above(X, t.letter);
        if (withK) return t.letter >= al.k || (X >> t.letter) == 0;
        return (X >> t.letter) == 0;
      case NuTok::Even:
        charge = std::popcount(unsigned(X)) / 2;
        return withK ? true : X == 0;
      case NuTok::Odd:
        charge = std::popcount(unsigned(X)) / 2;
        return withK ? true : std::popcount(unsigned(X)) == 1;
    }
    return false;
  }

  bool down_gate(NuTok t, int X, int& charge) const {
    switch (t.kind) {
      case NuTok::Down:
        charge = count_below(X, t.letter);
        if (withK) return (X & lowbits(std::min(t.letter, al.k))) == 0;
        return (X & lowbits(t.letter + 1)) == 0;
      case NuTok::Up:
        charge = count_above(X, t.letter);
        if (withK) return t.letter < al.k || (X >> t.letter) == 0;
        return (X >> t.letter) == 0;
      case NuTok::Even:
        charge = 0;
        return X == 0;
      case NuTok::Odd:
        charge = 0;
        return std::popcount(unsigned(X)) == 1;
    }
    return false;
  }

  template <typename E>
  void rhombus(int, int, int, int nw, int ne, E&& emit) const {
    int code = up_token(nw, ne);
    if (code < 0) return;
    NuTok t = tok_decode(code);
    int chU;
    if (!up_gate(t, t.kind == NuTok::Down ? ne : nw, chU)) return;
    int fu = chU % 2 ? -1 : 1;
    auto put = [&](int sw, int se, int chD) {
      emit(sw, se, code, Fug(fu * (chD % 2 ? -1 : 1)), chU + chD);
    };
    int chD;
    switch (t.kind) {
      case NuTok::Down:
        for (int X = 0; X <= al.full(); X++)
          if (!(X >> t.letter & 1) && down_gate(t, X, chD)) put(X, X | 1 << t.letter, chD);
        break;
      case NuTok::Up:
        for (int X = 0; X <= al.full(); X++)
          if (!(X >> t.letter & 1) && down_gate(t, X, chD)) put(X | 1 << t.letter, X, chD);
        break;
      case NuTok::Even:
        put(0, 0, 0);
        break;
      case NuTok::Odd:
        for (int i = 0; i <= al.d; i++) put(1 << i, 1 << i, 0);
        break;
    }
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    int code = up_token(nw, ne);
    if (code < 0) return;
    NuTok t = tok_decode(code);
    int chU;
    if (!up_gate(t, t.kind == NuTok::Down ? ne : nw, chU)) return;
    emit(code, Fug(chU % 2 ? -1 : 1), chU);
  }
};

// Generic-limit tables for the twisted vertex weights, kept textually
// separate from the gates above so the q -> 0 comparison is meaningful.
// Entries are single monomials sign * (-q)^e in the quantum parameter.
inline LaurentPoly neg_q_pow(int inv, int e) {
  LaurentPoly m = LaurentPoly::q(e);
  if ((inv + e) % 2) m = -m;
  return m;
}

inline LaurentPoly twisted_up(const Alphabet& al, NuTok t, int X) {
  switch (t.kind) {
    case NuTok::Down: {
      if (X >> t.letter & 1) return LaurentPoly();
      int inv = count_below(X, t.letter);
      int e = std::popcount(unsigned(X & ~lowbits(al.k) & lowbits(t.letter)));
      return neg_q_pow(inv, 2 * e);
    }
    case NuTok::Up: {
      if (X >> t.letter & 1) return LaurentPoly();
      int inv = count_above(X, t.letter);
      int e = t.letter < al.k ? count_above(X, t.letter) : 0;
      return neg_q_pow(inv, 2 * e);
    }
    case NuTok::Even:
      if (std::popcount(unsigned(X)) % 2) return LaurentPoly();
      return neg_q_pow(std::popcount(unsigned(X)) / 2, 0);
    case NuTok::Odd:
      if (std::popcount(unsigned(X)) % 2 == 0) return LaurentPoly();
      return neg_q_pow(std::popcount(unsigned(X)) / 2, 0);
  }
  return LaurentPoly();
}

inline LaurentPoly twisted_down(const Alphabet& al, NuTok t, int X) {
  switch (t.kind) {
    case NuTok::Down: {
      if (X >> t.letter & 1) return LaurentPoly();
      int inv = count_below(X, t.letter);
      int e = std::popcount(unsigned(X & lowbits(std::min(t.letter, al.k))));
      return neg_q_pow(inv, 2 * e);
    }
    case NuTok::Up: {
      if (X >> t.letter & 1) return LaurentPoly();
      int inv = count_above(X, t.letter);
      int e = t.letter >= al.k ? count_above(X, t.letter) : 0;
      return neg_q_pow(inv, 2 * e);
    }
    case NuTok::Even: {
      int c = std::popcount(unsigned(X));
      if (c % 2) return LaurentPoly();
      return neg_q_pow(c / 2, c);
    }
    case NuTok::Odd: {
      int c = std::popcount(unsigned(X));
      if (c % 2 == 0) return LaurentPoly();
      return neg_q_pow(c / 2, c - 1);
    }
  }
  return LaurentPoly();
}

// Untwisted catalog at q = -1: every weight-allowed piece has fugacity 1.
// Used for Euler characteristic counts.
class EulerQm1 {
 public:
  using Fug = mpz_class;
  Alphabet al;
  EulerQm1(int k, int d) : al{k, d} {}

  template <typename E>
  void rhombus(int, int, int, int nw, int ne, E&& emit) const {
    int code = up_token(nw, ne);
    if (code < 0) return;
    NuTok t = tok_decode(code);
    switch (t.kind) {
      case NuTok::Down:
        for (int X = 0; X <= al.full(); X++)
          if (!(X >> t.letter & 1)) emit(X, X | 1 << t.letter, code, Fug(1), 0);
        break;
      case NuTok::Up:
        for (int X = 0; X <= al.full(); X++)
          if (!(X >> t.letter & 1)) emit(X | 1 << t.letter, X, code, Fug(1), 0);
        break;
      case NuTok::Even:
        for (int X = 0; X <= al.full(); X++)
          if (std::popcount(unsigned(X)) % 2 == 0) emit(X, X, code, Fug(1), 0);
        break;
      case NuTok::Odd:
        for (int X = 0; X <= al.full(); X++)
          if (std::popcount(unsigned(X)) % 2 == 1) emit(X, X, code, Fug(1), 0);
        break;
    }
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    int code = up_token(nw, ne);
    if (code >= 0) emit(code, Fug(1), 0);
  }
};

}  // namespace schub::almostsep
