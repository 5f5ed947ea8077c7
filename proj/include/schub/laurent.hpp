#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schub/perm.hpp"

namespace schub {

// Exponent vector for q, x1..xm, y1..ym with trailing zeros trimmed.
// y exponents (and q) may be negative.
struct Mono {
  int q = 0;
  std::vector<int> x, y;

  static void trim(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  void canon() {
    trim(x);
    trim(y);
  }

  static int cmp_vec(const std::vector<int>& a, const std::vector<int>& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; i++) {
      int ai = i < a.size() ? a[i] : 0, bi = i < b.size() ? b[i] : 0;
      if (ai != bi) return ai < bi ? -1 : 1;
    }
    return 0;
  }

  // Lex with the last variable dominant. Schubert polynomials lead with
  // x^{code} in this order, which drives the greedy expansions.
  static int cmp_vec_rev(const std::vector<int>& a, const std::vector<int>& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = n; i-- > 0;) {
      int ai = i < a.size() ? a[i] : 0, bi = i < b.size() ? b[i] : 0;
      if (ai != bi) return ai < bi ? -1 : 1;
    }
    return 0;
  }

  bool operator<(const Mono& o) const {
    if (q != o.q) return q < o.q;
    if (int c = cmp_vec(x, o.x)) return c < 0;
    return cmp_vec(y, o.y) < 0;
  }
  bool operator==(const Mono& o) const { return q == o.q && x == o.x && y == o.y; }

  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono m;
    m.q = a.q + b.q;
    m.x.resize(std::max(a.x.size(), b.x.size()), 0);
    m.y.resize(std::max(a.y.size(), b.y.size()), 0);
    for (size_t i = 0; i < m.x.size(); i++)
      m.x[i] = (i < a.x.size() ? a.x[i] : 0) + (i < b.x.size() ? b.x[i] : 0);
    for (size_t i = 0; i < m.y.size(); i++)
      m.y[i] = (i < a.y.size() ? a.y[i] : 0) + (i < b.y.size() ? b.y[i] : 0);
    m.canon();
    return m;
  }

  int xdeg() const {
    int s = 0;
    for (int e : x) s += e;
    return s;
  }

  // Total positive degree across q, x, y; orders terms for printing.
  int degplus() const {
    int s = q > 0 ? q : 0;
    for (int e : x) s += e > 0 ? e : 0;
    for (int e : y) s += e > 0 ? e : 0;
    return s;
  }
};

class LaurentPoly {
  std::map<Mono, mpz_class> t_;

  void add_term(Mono m, mpz_class c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

public:
  LaurentPoly() = default;
  explicit LaurentPoly(const mpz_class& c) {
    if (c != 0) t_[Mono{}] = c;
  }
  explicit LaurentPoly(long c) : LaurentPoly(mpz_class(c)) {}

  static LaurentPoly monomial(Mono m, mpz_class c = 1) {
    LaurentPoly p;
    m.canon();
    p.add_term(std::move(m), std::move(c));
    return p;
  }
  static LaurentPoly x(int i, int e = 1) {
    Mono m;
    m.x.resize(i, 0);
    m.x[i - 1] = e;
    return monomial(m);
  }
  static LaurentPoly y(int i, int e = 1) {
    Mono m;
    m.y.resize(i, 0);
    m.y[i - 1] = e;
    return monomial(m);
  }
  static LaurentPoly q(int e = 1) {
    Mono m;
    m.q = e;
    return monomial(m);
  }

  const std::map<Mono, mpz_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

  std::optional<mpz_class> as_int() const {
    if (t_.empty()) return mpz_class(0);
    if (t_.size() == 1 && t_.begin()->first == Mono{}) return t_.begin()->second;
    return std::nullopt;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly p;
    for (auto& [m, c] : t_) p.t_[m] = -c;
    return p;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    const LaurentPoly &s = a.size() <= b.size() ? a : b, &l = a.size() <= b.size() ? b : a;
    for (auto& [ms, cs] : s.t_)
      for (auto& [ml, cl] : l.t_) p.add_term(ms * ml, cs * cl);
    return p;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const mpz_class& c) {
    if (c == 0) {
      t_.clear();
      return *this;
    }
    for (auto& [m, v] : t_) v *= c;
    return *this;
  }

  // Exchange the exponents of x_i and x_{i+1}.
  LaurentPoly swap_x(int i) const {
    LaurentPoly p;
    for (auto& [m, c] : t_) {
      Mono n = m;
      if ((int)n.x.size() < i + 1) n.x.resize(i + 1, 0);
      std::swap(n.x[i - 1], n.x[i]);
      n.canon();
      p.add_term(std::move(n), c);
    }
    return p;
  }

  // Newton divided difference in (x_i, x_{i+1}): f -> (f - s_i f)/(x_i - x_{i+1}).
  LaurentPoly divided_difference(int i) const {
    LaurentPoly p;
    for (auto& [m, c] : t_) {
      int a = i - 1 < (int)m.x.size() ? m.x[i - 1] : 0;
      int b = i < (int)m.x.size() ? m.x[i] : 0;
      if (a == b) continue;
      Mono base = m;
      if ((int)base.x.size() < i + 1) base.x.resize(i + 1, 0);
      int lo = std::min(a, b), hi = std::max(a, b);
      mpz_class cc = a > b ? c : -c;
      for (int t = lo; t <= hi - 1; t++) {
        Mono n = base;
        n.x[i - 1] = t;
        n.x[i] = a + b - 1 - t;
        n.canon();
        p.add_term(std::move(n), cc);
      }
    }
    return p;
  }

  // Demazure-type lowering operator in (x_i, x_{i+1}):
  // f -> (x_{i+1} f - x_i s_i f)/(x_{i+1} - x_i).
  LaurentPoly demazure(int i) const {
    LaurentPoly p;
    for (auto& [m, c] : t_) {
      int a = i - 1 < (int)m.x.size() ? m.x[i - 1] : 0;
      int b = i < (int)m.x.size() ? m.x[i] : 0;
      if (a == b + 1) continue;
      Mono base = m;
      if ((int)base.x.size() < i + 1) base.x.resize(i + 1, 0);
      if (a <= b) {
        for (int t = 0; t <= b - a; t++) {
          Mono n = base;
          n.x[i - 1] = a + t;
          n.x[i] = b - t;
          n.canon();
          p.add_term(std::move(n), c);
        }
      } else {
        for (int t = b + 1; t <= a - 1; t++) {
          Mono n = base;
          n.x[i - 1] = t;
          n.x[i] = a + b - t;
          n.canon();
          p.add_term(std::move(n), -c);
        }
      }
    }
    return p;
  }

  // Algebra map deleting x_j: x_i -> x_i (i<j), x_j -> 0, x_i -> x_{i-1} (i>j).
  LaurentPoly psi(int j) const {
    LaurentPoly p;
    for (auto& [m, c] : t_) {
      if (j - 1 < (int)m.x.size() && m.x[j - 1] != 0) continue;
      Mono n = m;
      if (j - 1 < (int)n.x.size()) n.x.erase(n.x.begin() + (j - 1));
      n.canon();
      p.add_term(std::move(n), c);
    }
    return p;
  }

  // x_i -> y_{w(i)} for all i.
  LaurentPoly restrict_x(const Perm& w) const {
    LaurentPoly p;
    for (auto& [m, c] : t_) {
      Mono n;
      n.q = m.q;
      n.y = m.y;
      for (int i = 0; i < (int)m.x.size(); i++) {
        if (m.x[i] == 0) continue;
        int yi = w(i + 1);
        if ((int)n.y.size() < yi) n.y.resize(yi, 0);
        n.y[yi - 1] += m.x[i];
      }
      n.canon();
      p.add_term(std::move(n), c);
    }
    return p;
  }

  // Largest x exponent vector, x_n-dominant lex; empty poly -> none.
  std::optional<std::vector<int>> lead_x_lex() const {
    std::optional<std::vector<int>> best;
    for (auto& [m, c] : t_)
      if (!best || Mono::cmp_vec_rev(*best, m.x) < 0) best = m.x;
    return best;
  }

  // Among terms of minimal total x degree, the largest x vector as above.
  std::optional<std::vector<int>> lead_x_mindeg() const {
    std::optional<std::vector<int>> best;
    int bestdeg = 0;
    for (auto& [m, c] : t_) {
      int deg = m.xdeg();
      if (!best || deg < bestdeg || (deg == bestdeg && Mono::cmp_vec_rev(*best, m.x) < 0)) {
        best = m.x;
        bestdeg = deg;
      }
    }
    return best;
  }

  // Sum of terms whose x part equals xs, with the x part removed.
  LaurentPoly coeff_of_x(const std::vector<int>& xs) const {
    std::vector<int> key = xs;
    Mono::trim(key);
    LaurentPoly p;
    for (auto& [m, c] : t_)
      if (m.x == key) {
        Mono n = m;
        n.x.clear();
        p.add_term(std::move(n), c);
      }
    return p;
  }

  // Exact division; throws if the division does not come out exact.
  friend LaurentPoly exact_div(LaurentPoly f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly quot;
    size_t guard = 0;
    while (!f.is_zero()) {
      if (++guard > 2000000) throw std::domain_error("division does not terminate");
      auto& [fm, fc] = *f.t_.rbegin();
      auto& [gm, gc] = *g.t_.rbegin();
      if (fc % gc != 0) throw std::domain_error("inexact coefficient division");
      Mono d;
      d.q = fm.q - gm.q;
      d.x.resize(std::max(fm.x.size(), gm.x.size()), 0);
      d.y.resize(std::max(fm.y.size(), gm.y.size()), 0);
      for (size_t i = 0; i < d.x.size(); i++)
        d.x[i] = (i < fm.x.size() ? fm.x[i] : 0) - (i < gm.x.size() ? gm.x[i] : 0);
      for (size_t i = 0; i < d.y.size(); i++)
        d.y[i] = (i < fm.y.size() ? fm.y[i] : 0) - (i < gm.y.size() ? gm.y[i] : 0);
      d.canon();
      LaurentPoly term = monomial(d, fc / gc);
      quot += term;
      f -= term * g;
    }
    return quot;
  }

  mpq_class eval(const mpq_class& qv, const std::vector<mpq_class>& xv,
                 const std::vector<mpq_class>& yv) const {
    auto power = [](const mpq_class& b, int e) {
      if (e == 0) return mpq_class(1);
      if (b == 0) throw std::domain_error("zero base with negative exponent");
      mpq_class r(1), bb = b;
      int ee = e < 0 ? -e : e;
      for (int i = 0; i < ee; i++) r *= bb;
      if (e < 0) r = 1 / r;
      return r;
    };
    mpq_class s(0);
    for (auto& [m, c] : t_) {
      mpq_class v(c);
      if (m.q) v *= power(qv, m.q);
      for (size_t i = 0; i < m.x.size(); i++)
        if (m.x[i]) v *= power(xv.at(i), m.x[i]);
      for (size_t i = 0; i < m.y.size(); i++)
        if (m.y[i]) v *= power(yv.at(i), m.y[i]);
      s += v;
    }
    return s;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::vector<const std::pair<const Mono, mpz_class>*> order;
    for (auto& term : t_) order.push_back(&term);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
      int da = a->first.degplus(), db = b->first.degplus();
      if (da != db) return da < db;
      return b->first < a->first;
    });
    std::string s;
    for (auto* term : order) {
      const auto& [m, c] = *term;
      mpz_class a = c < 0 ? mpz_class(-c) : c;
      if (s.empty())
        s += c < 0 ? "-" : "";
      else
        s += c < 0 ? " - " : " + ";
      std::string vars;
      auto app = [&](const std::string& name, int e) {
        if (!e) return;
        if (!vars.empty()) vars += "*";
        vars += name;
        if (e != 1) vars += "^" + std::to_string(e);
      };
      app("q", m.q);
      for (size_t i = 0; i < m.x.size(); i++)
        if (m.x[i] > 0) app("x" + std::to_string(i + 1), m.x[i]);
      for (size_t i = 0; i < m.x.size(); i++)
        if (m.x[i] < 0) app("x" + std::to_string(i + 1), m.x[i]);
      for (size_t i = 0; i < m.y.size(); i++)
        if (m.y[i] > 0) app("y" + std::to_string(i + 1), m.y[i]);
      for (size_t i = 0; i < m.y.size(); i++)
        if (m.y[i] < 0) app("y" + std::to_string(i + 1), m.y[i]);
      if (vars.empty())
        s += a.get_str();
      else {
        if (a != 1) s += a.get_str() + "*";
        s += vars;
      }
    }
    return s;
  }
};

}  // namespace schub
