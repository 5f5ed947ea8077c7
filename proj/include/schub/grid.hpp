#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace schub {

// One filled cell of the triangular grid. Rhombi are crossings (p, q) of the
// p-th NW line with the q-th NE line (p + q <= n); `horiz` is the catalog's
// label for the bisecting horizontal edge, -1 when the rhombus is unbisected.
// The n bottom cells are stored with p = n+1-c, q = c, sw = se = -1 and the
// bottom label in `horiz`.
struct PuzzleCell {
  int p, q;
  int nw, ne, sw, se, horiz;
};

template <typename FugT>
struct Puzzle {
  std::vector<int> nu;
  FugT fug;
  long charge = 0;
  std::vector<PuzzleCell> cells;
};

// Depth-first enumeration over a catalog, which provides
//   cat.rhombus(n, p, q, nw, ne, emit(sw, se, horiz, fug, charge))
//   cat.bottom(n, c, nw, ne, emit(label, fug, charge))
// Rows run top to bottom; row r holds the rhombi (r,1),(r-1,2),...,(1,r) in
// left-to-right order, so cell i inherits its NW edge from cell i-1 of the
// row above (or the side boundary) and its NE edge from cell i of the row
// above. Sides are label vectors indexed from the top.
template <typename Cat, typename CB>
void enumerate_puzzles(const Cat& cat, int n, const std::vector<int>& nw_side,
                       const std::vector<int>& ne_side, CB&& cb) {
  using FugT = typename Cat::Fug;
  if ((int)nw_side.size() != n || (int)ne_side.size() != n)
    throw std::invalid_argument("side length must match the puzzle size");

  std::vector<std::vector<int>> SW(n), SE(n);
  for (int r = 1; r < n; r++) {
    SW[r].resize(r);
    SE[r].resize(r);
  }
  Puzzle<FugT> puz;
  std::vector<FugT> fs{FugT(1)};

  auto rec = [&](auto&& rec, int r, int i) -> void {
    if (r == n) {
      if (i > n) {
        puz.fug = fs.back();
        cb(puz);
        return;
      }
      int nw = i == 1 ? nw_side[n - 1] : SE[n - 1][i - 2];
      int ne = i == n ? ne_side[n - 1] : SW[n - 1][i - 1];
      cat.bottom(n, i, nw, ne, [&](int lab, const FugT& f, int ch) {
        puz.nu.push_back(lab);
        puz.cells.push_back({n + 1 - i, i, nw, ne, -1, -1, lab});
        fs.push_back(fs.back() * f);
        puz.charge += ch;
        rec(rec, r, i + 1);
        puz.charge -= ch;
        fs.pop_back();
        puz.cells.pop_back();
        puz.nu.pop_back();
      });
      return;
    }
    if (i > r) {
      rec(rec, r + 1, 1);
      return;
    }
    int nw = i == 1 ? nw_side[r - 1] : SE[r - 1][i - 2];
    int ne = i == r ? ne_side[r - 1] : SW[r - 1][i - 1];
    cat.rhombus(n, r + 1 - i, i, nw, ne, [&](int sw, int se, int horiz, const FugT& f, int ch) {
      SW[r][i - 1] = sw;
      SE[r][i - 1] = se;
      puz.cells.push_back({r + 1 - i, i, nw, ne, sw, se, horiz});
      fs.push_back(fs.back() * f);
      puz.charge += ch;
      rec(rec, r, i + 1);
      puz.charge -= ch;
      fs.pop_back();
      puz.cells.pop_back();
    });
  };
  rec(rec, n == 1 ? n : 1, 1);
}

// Fugacity sums per bottom string, computed by merging frontier states row by
// row instead of walking complete puzzles; serves as an independent check of
// the depth-first enumeration.
template <typename Cat>
std::map<std::vector<int>, typename Cat::Fug> frontier_sums(const Cat& cat, int n,
                                                            const std::vector<int>& nw_side,
                                                            const std::vector<int>& ne_side) {
  using FugT = typename Cat::Fug;
  if ((int)nw_side.size() != n || (int)ne_side.size() != n)
    throw std::invalid_argument("side length must match the puzzle size");

  std::map<std::vector<int>, FugT> states;
  states[{}] = FugT(1);
  for (int r = 1; r < n; r++) {
    std::map<std::vector<int>, FugT> next;
    for (auto& [key, acc] : states) {
      const int* pSW = key.data();
      const int* pSE = key.data() + (r - 1);
      std::vector<int> cur(2 * r);
      auto cell = [&](auto&& cell, int i, const FugT& f) -> void {
        if (i > r) {
          next[cur] += acc * f;
          return;
        }
        int nw = i == 1 ? nw_side[r - 1] : pSE[i - 2];
        int ne = i == r ? ne_side[r - 1] : pSW[i - 1];
        cat.rhombus(n, r + 1 - i, i, nw, ne,
                    [&](int sw, int se, int, const FugT& ff, int) {
                      cur[i - 1] = sw;
                      cur[r + i - 1] = se;
                      cell(cell, i + 1, f * ff);
                    });
      };
      cell(cell, 1, FugT(1));
    }
    states = std::move(next);
  }

  std::map<std::vector<int>, FugT> out;
  for (auto& [key, acc] : states) {
    const int* pSW = key.data();
    const int* pSE = key.data() + (n - 1);
    std::vector<int> nu(n);
    auto cell = [&](auto&& cell, int c, const FugT& f) -> void {
      if (c > n) {
        out[nu] += acc * f;
        return;
      }
      int nw = c == 1 ? nw_side[n - 1] : pSE[c - 2];
      int ne = c == n ? ne_side[n - 1] : pSW[c - 1];
      cat.bottom(n, c, nw, ne, [&](int lab, const FugT& ff, int) {
        nu[c - 1] = lab;
        cell(cell, c + 1, f * ff);
      });
    };
    cell(cell, 1, FugT(1));
  }
  return out;
}

}  // namespace schub
