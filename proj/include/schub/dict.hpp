#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/catalog_almostsep.hpp"
#include "schub/catalog_sepdesc.hpp"
#include "schub/encoding.hpp"
#include "schub/laurent.hpp"
#include "schub/schubert.hpp"

// Classical puzzle catalogs over composite edge labels: the three
// single-descent (Grassmannian) labels 0, 1, 10 and the eight 2-step labels.
// Each edge direction carries its own dictionary into the rank/subset labels
// of the descent-based catalogs. The Grassmannian tables below are frozen
// piece lists, independent of those dictionaries, so translating the
// descent-based catalogs and comparing exercises both directions; the 2-step
// catalog is produced by relabeling the subset/arrow catalog at split (1, 2).
namespace schub::dict {

// ---------------------------------------------------------------------------
// Single-descent world: labels interned as 0 = "0", 1 = "1", 2 = "10".
// The matching rank alphabet has split k = 0, d = 1 (letter ranks 0 and 2,
// blank rank 1).

inline const std::array<const char*, 3>& grass_names() {
  static const std::array<const char*, 3> names = {"0", "1", "10"};
  return names;
}

inline int grass_of_name(const std::string& s) {
  for (int i = 0; i < 3; i++)
    if (s == grass_names()[i]) return i;
  throw std::invalid_argument("unknown single-descent label: " + s);
}

// NW-parallel edges ("/" direction, including the NW boundary side).
inline int grass_nw_rank(int lab) {
  static constexpr int rank[3] = {1, 2, 0};
  if (lab < 0 || lab > 2) throw std::invalid_argument("bad single-descent label");
  return rank[lab];
}

// NE-parallel edges ("\" direction, including the NE boundary side).
inline int grass_ne_rank(int lab) {
  static constexpr int rank[3] = {0, 1, 2};
  if (lab < 0 || lab > 2) throw std::invalid_argument("bad single-descent label");
  return rank[lab];
}

// Horizontal edges carry unordered rank pairs, coded as in the rank catalog.
inline int grass_horiz_code(int lab) {
  static const int code[3] = {sepdesc::pair_code(0, 1), sepdesc::pair_code(1, 2),
                              sepdesc::pair_code(0, 2)};
  if (lab < 0 || lab > 2) throw std::invalid_argument("bad single-descent label");
  return code[lab];
}

inline int grass_of_nw_rank(int rank) {
  for (int lab = 0; lab < 3; lab++)
    if (grass_nw_rank(lab) == rank) return lab;
  throw std::invalid_argument("rank without a single-descent NW label");
}

inline int grass_of_ne_rank(int rank) {
  for (int lab = 0; lab < 3; lab++)
    if (grass_ne_rank(lab) == rank) return lab;
  throw std::invalid_argument("rank without a single-descent NE label");
}

inline int grass_of_horiz_code(int code) {
  for (int lab = 0; lab < 3; lab++)
    if (grass_horiz_code(lab) == code) return lab;
  throw std::invalid_argument("rank pair without a single-descent label");
}

// Classical Grassmannian triangle catalog, frozen as it is usually drawn:
// up triangles are read (NW, S, NE), down triangles (SW, N, SE). Cohomology
// keeps the five sign-free up triangles and their five down companions;
// K-theory adds the 10-10-10 up triangle with fugacity -1 (it never sits on
// the bottom row, where edge labels stay 0/1); equivariant cohomology instead
// adds the unbisected 0/1 rhombus of weight y_{n+1-p} - y_q.
class GrassmannianCatalog {
 public:
  using Fug = LaurentPoly;

  struct UpPiece {
    int nw, south, ne;
    int fug;
    int charge;
    bool k_only;
  };
  struct DownPiece {
    int sw, north, se;
  };

  static const std::vector<UpPiece>& ups() {
    static const std::vector<UpPiece> table = {
        {0, 0, 0, 1, 0, false}, {1, 1, 1, 1, 0, false},  {1, 2, 0, 1, 0, false},
        {2, 0, 1, 1, 0, false}, {0, 1, 2, 1, 0, false},  {2, 2, 2, -1, 1, true},
    };
    return table;
  }

  static const std::vector<DownPiece>& downs() {
    static const std::vector<DownPiece> table = {
        {0, 0, 0}, {1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0},
    };
    return table;
  }

  explicit GrassmannianCatalog(Theory th) : theory_(th) {
    if (th != Theory::H && th != Theory::K && th != Theory::HT)
      throw std::invalid_argument("the classical Grassmannian catalog covers H, K, HT");
  }

  template <typename E>
  void rhombus(int n, int p, int q, int nw, int ne, E&& emit) const {
    for (const UpPiece& u : ups()) {
      if (u.nw != nw || u.ne != ne) continue;
      if (u.k_only && theory_ != Theory::K) continue;
      for (const DownPiece& dn : downs())
        if (dn.north == u.south) emit(dn.sw, dn.se, u.south, Fug(long(u.fug)), u.charge);
    }
    if (theory_ == Theory::HT && nw == 0 && ne == 1)
      emit(1, 0, -1, LaurentPoly::y(n + 1 - p) - LaurentPoly::y(q), 0);
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    for (const UpPiece& u : ups()) {
      if (u.nw != nw || u.ne != ne) continue;
      if (u.k_only && theory_ != Theory::K) continue;
      if (u.south != 0 && u.south != 1) continue;
      emit(u.south, Fug(long(u.fug)), u.charge);
    }
  }

 private:
  Theory theory_;
};

// ---------------------------------------------------------------------------
// 2-step world: eight labels over the digits 0, 1, 2. The matching
// subset/arrow alphabet has split k = 1, d = 2, and every one of the eight
// subsets and eight arrow/parity tokens occurs in the dictionary, so the
// relabeling is a bijection on all three edge directions.

inline const std::array<const char*, 8>& twostep_names() {
  static const std::array<const char*, 8> names = {"0",  "1",  "2",     "10",
                                                   "20", "21", "2(10)", "(21)0"};
  return names;
}

inline int twostep_of_name(const std::string& s) {
  for (int i = 0; i < 8; i++)
    if (s == twostep_names()[i]) return i;
  throw std::invalid_argument("unknown 2-step label: " + s);
}

// NW-parallel edges carry subsets of {0, 1, 2} as bit masks.
inline int twostep_nw_mask(int lab) {
  static constexpr int mask[8] = {0b001, 0b010, 0b000, 0b011, 0b101, 0b100, 0b110, 0b111};
  if (lab < 0 || lab > 7) throw std::invalid_argument("bad 2-step label");
  return mask[lab];
}

// NE-parallel edges.
inline int twostep_ne_mask(int lab) {
  static constexpr int mask[8] = {0b000, 0b010, 0b100, 0b001, 0b101, 0b110, 0b111, 0b011};
  if (lab < 0 || lab > 7) throw std::invalid_argument("bad 2-step label");
  return mask[lab];
}

// Horizontal edges carry arrow or parity tokens.
inline NuTok twostep_horiz_tok(int lab) {
  static const NuTok tok[8] = {
      {NuTok::Down, 0}, {NuTok::Odd, 0},  {NuTok::Up, 2},   {NuTok::Down, 1},
      {NuTok::Even, 0}, {NuTok::Up, 1},   {NuTok::Up, 0},   {NuTok::Down, 2},
  };
  if (lab < 0 || lab > 7) throw std::invalid_argument("bad 2-step label");
  return tok[lab];
}

inline int twostep_of_nw_mask(int mask) {
  for (int lab = 0; lab < 8; lab++)
    if (twostep_nw_mask(lab) == mask) return lab;
  throw std::invalid_argument("subset without a 2-step NW label");
}

inline int twostep_of_ne_mask(int mask) {
  for (int lab = 0; lab < 8; lab++)
    if (twostep_ne_mask(lab) == mask) return lab;
  throw std::invalid_argument("subset without a 2-step NE label");
}

inline int twostep_of_horiz(NuTok t) {
  for (int lab = 0; lab < 8; lab++)
    if (twostep_horiz_tok(lab) == t) return lab;
  throw std::invalid_argument("token without a 2-step label");
}

// Classical 2-step catalog, built at construction by relabeling every
// emission of the subset/arrow catalog at split (1, 2) through the inverse
// dictionaries. Bottom labels outside the digit alphabet {0, 1, 2} are
// emitted as-is; consumers drop them exactly as the native pipeline does.
class TwoStepCatalog {
 public:
  using Fug = mpz_class;

  explicit TwoStepCatalog(Theory th) {
    if (th != Theory::H && th != Theory::K)
      throw std::invalid_argument("the classical 2-step catalog covers H and K");
    almostsep::HK native(1, 2, th == Theory::K);
    for (int m1 = 0; m1 <= 7; m1++) {
      for (int m2 = 0; m2 <= 7; m2++) {
        int nw = twostep_of_nw_mask(m1), ne = twostep_of_ne_mask(m2);
        native.rhombus(0, 0, 0, m1, m2,
                       [&](int sw, int se, int code, const mpz_class& f, int ch) {
                         rh_[nw * 8 + ne].push_back(
                             {twostep_of_ne_mask(sw), twostep_of_nw_mask(se),
                              twostep_of_horiz(almostsep::tok_decode(code)), f, ch});
                       });
        native.bottom(0, 0, m1, m2, [&](int code, const mpz_class& f, int ch) {
          bot_[nw * 8 + ne].push_back({twostep_of_horiz(almostsep::tok_decode(code)), f, ch});
        });
      }
    }
  }

  template <typename E>
  void rhombus(int, int, int, int nw, int ne, E&& emit) const {
    for (const Rhombus& r : rh_[nw * 8 + ne]) emit(r.sw, r.se, r.south, r.fug, r.charge);
  }

  template <typename E>
  void bottom(int, int, int nw, int ne, E&& emit) const {
    for (const Bottom& b : bot_[nw * 8 + ne]) emit(b.label, b.fug, b.charge);
  }

 private:
  struct Rhombus {
    int sw, se, south;
    mpz_class fug;
    int charge;
  };
  struct Bottom {
    int label;
    mpz_class fug;
    int charge;
  };
  std::array<std::vector<Rhombus>, 64> rh_;
  std::array<std::vector<Bottom>, 64> bot_;
};

}  // namespace schub::dict
