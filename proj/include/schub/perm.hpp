#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

// Permutations in one-line notation, 1-based values.
class Perm {
  std::vector<int> w_;

public:
  Perm() = default;

  explicit Perm(std::vector<int> w) : w_(std::move(w)) {
    std::vector<char> seen(w_.size(), 0);
    for (int v : w_) {
      if (v < 1 || v > (int)w_.size() || seen[v - 1])
        throw std::invalid_argument("not a permutation");
      seen[v - 1] = 1;
    }
  }

  static Perm identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
  }

  int size() const { return (int)w_.size(); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  bool operator==(const Perm& o) const { return w_ == o.w_; }
  bool operator<(const Perm& o) const { return w_ < o.w_; }

  Perm inverse() const {
    std::vector<int> v(w_.size());
    for (int i = 1; i <= size(); i++) v[w_[i - 1] - 1] = i;
    return Perm(std::move(v));
  }

  // (a*b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(a.size());
    for (int i = 1; i <= a.size(); i++) v[i - 1] = a(b(i));
    return Perm(std::move(v));
  }

  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); i++)
      for (int j = i + 1; j < size(); j++)
        if (w_[i] > w_[j]) inv++;
    return inv;
  }

  // Positions i in [1, n-1] with w(i) > w(i+1).
  std::vector<int> descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); i++)
      if (w_[i - 1] > w_[i]) d.push_back(i);
    return d;
  }

  // code()[i-1] = #{j > i : w(j) < w(i)}
  std::vector<int> code() const {
    std::vector<int> c(size());
    for (int i = 0; i < size(); i++) {
      int cnt = 0;
      for (int j = i + 1; j < size(); j++)
        if (w_[j] < w_[i]) cnt++;
      c[i] = cnt;
    }
    return c;
  }

  static Perm from_code(const std::vector<int>& code) {
    int n = std::max<int>(1, code.size());
    for (int i = 0; i < (int)code.size(); i++)
      n = std::max(n, i + 1 + code[i]);
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    for (int i = 0; i < (int)code.size(); i++) {
      w.push_back(avail[code[i]]);
      avail.erase(avail.begin() + code[i]);
    }
    for (int v : avail) w.push_back(v);
    return Perm(std::move(w));
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); i++)
      if (w_[i - 1] != i) return false;
    return true;
  }

  // Smallest n with w in S_n (at least 1).
  int support() const {
    int n = size();
    while (n > 1 && w_[n - 1] == n) n--;
    return n;
  }

  Perm pad(int n) const {
    if (n < support()) throw std::invalid_argument("pad below support");
    std::vector<int> v(w_.begin(), w_.begin() + std::min(size(), n));
    for (int i = size(); i < n; i++) v.push_back(i + 1);
    return Perm(std::move(v));
  }

  Perm trim() const { return pad(support()); }

  // Block-diagonal concatenation: a acting on 1..|a|, b shifted up.
  friend Perm direct_sum(const Perm& a, const Perm& b) {
    std::vector<int> v(a.one_line());
    for (int x : b.one_line()) v.push_back(x + a.size());
    return Perm(std::move(v));
  }

  std::string to_string() const {
    bool digits = size() <= 9;
    std::ostringstream os;
    for (int i = 0; i < size(); i++) {
      if (i && !digits) os << ',';
      os << w_[i];
    }
    return os.str();
  }

  // Accepts "2431" (all values single digit) or "2,4,3,1".
  static Perm parse(const std::string& s) {
    std::vector<int> v;
    if (s.find(',') != std::string::npos) {
      std::istringstream is(s);
      std::string tok;
      while (std::getline(is, tok, ',')) v.push_back(std::stoi(tok));
    } else {
      for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad permutation string");
        v.push_back(c - '0');
      }
    }
    return Perm(std::move(v));
  }
};

// Standardization inverse: for a string of letter ranks, f is the unique
// permutation sending the stable sort order back to positions; equal letters
// keep their left-to-right order.
inline Perm standardize(const std::vector<int>& ranks) {
  int n = (int)ranks.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ranks[a] < ranks[b]; });
  std::vector<int> f(n);
  for (int idx = 0; idx < n; idx++) f[idx] = order[idx] + 1;
  return Perm(std::move(f));
}

// A reduced word for w: w = s_{word[0]} * ... * s_{word.back()}, built by
// stripping descents from the right.
inline std::vector<int> reduced_word(const Perm& w) {
  std::vector<int> v = w.one_line();
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < (int)v.size(); i++) {
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        word.push_back(i + 1);
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// Coarsen p to a string of block labels (0-based) for the composition cut at
// the boundary set N (subset of [1,n], n itself allowed). The label at
// position j is the block containing p^{-1}(j). Requires descents(p) within N.
inline std::vector<int> string_of_perm(const Perm& p, const std::vector<int>& N) {
  int n = p.size();
  for (int b : N)
    if (b < 1 || b > n) throw std::invalid_argument("boundary out of range");
  for (int d : p.descents())
    if (std::find(N.begin(), N.end(), d) == N.end())
      throw std::invalid_argument("descent outside boundary set");
  std::vector<int> omega(n);
  for (int i = 1; i <= n; i++) {
    int blk = 0;
    for (int b : N)
      if (b < i) blk++;
    omega[i - 1] = blk;
  }
  Perm pinv = p.inverse();
  std::vector<int> out(n);
  for (int j = 1; j <= n; j++) out[j - 1] = omega[pinv(j) - 1];
  return out;
}

}  // namespace schub
