// Command line front end: structure constants, puzzle enumeration, boundary
// encodings, Euler characteristics and randomized cross-checks.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "schub/constants.hpp"
#include "schub/encoding.hpp"
#include "schub/motivic.hpp"
#include "schub/perm.hpp"
#include "schub/render.hpp"
#include "schub/schubert.hpp"
#include "schub/version.hpp"

using nlohmann::ordered_json;
using namespace schub;

namespace {

Theory theory_of(const std::string& s) {
  if (s == "H") return Theory::H;
  if (s == "K") return Theory::K;
  if (s == "HT") return Theory::HT;
  if (s == "KT") return Theory::KT;
  throw std::invalid_argument("unknown theory '" + s + "'");
}

Rule rule_of(const std::string& s) {
  if (s == "auto") return Rule::Auto;
  if (s == "sepdesc") return Rule::SepDesc;
  if (s == "almostsep") return Rule::AlmostSep;
  throw std::invalid_argument("unknown rule '" + s + "'");
}

std::map<Perm, LaurentPoly> nonzero_coeffs(const std::map<Perm, ConstantEntry>& m) {
  std::map<Perm, LaurentPoly> out;
  for (auto& [sigma, e] : m)
    if (!e.coeff.is_zero()) out[sigma] = e.coeff;
  return out;
}

std::map<Perm, LaurentPoly> nonzero_poly(const std::map<Perm, LaurentPoly>& m) {
  std::map<Perm, LaurentPoly> out;
  for (auto& [sigma, c] : m)
    if (!c.is_zero()) out[sigma] = c;
  return out;
}

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w;
  for (auto& r : rows) {
    if (w.size() < r.size()) w.resize(r.size(), 0);
    for (size_t c = 0; c < r.size(); c++) w[c] = std::max(w[c], r[c].size());
  }
  for (auto& r : rows) {
    for (size_t c = 0; c < r.size(); c++) {
      if (c + 1 == r.size())
        os << r[c];
      else
        os << std::left << std::setw(int(w[c]) + 2) << r[c];
    }
    os << "\n";
  }
}

void print_coeff_map(std::ostream& os, const std::map<Perm, LaurentPoly>& m) {
  std::vector<std::vector<std::string>> rows{{"sigma", "coefficient"}};
  for (auto& [sigma, c] : m) rows.push_back({sigma.to_string(), c.to_string()});
  print_table(os, rows);
}

void print_disagreement(std::ostream& os, const std::map<Perm, LaurentPoly>& puz,
                        const std::map<Perm, LaurentPoly>& orc) {
  std::set<Perm> keys;
  for (auto& [s, c] : puz) keys.insert(s);
  for (auto& [s, c] : orc) keys.insert(s);
  std::vector<std::vector<std::string>> rows{{"sigma", "puzzle", "oracle"}};
  for (const Perm& s : keys) {
    auto a = puz.find(s), b = orc.find(s);
    std::string as = a == puz.end() ? "0" : a->second.to_string();
    std::string bs = b == orc.end() ? "0" : b->second.to_string();
    if (as != bs) rows.push_back({s.to_string(), as, bs});
  }
  print_table(os, rows);
}

std::string sep_alphabet_a1(int k, int d) {
  std::string s = "_";
  for (int l = k + 1; l <= d; l++) s += " < " + std::to_string(l);
  return s;
}
std::string sep_alphabet_a2(int k) {
  std::string s = "0";
  for (int l = 1; l <= k; l++) s += " < " + std::to_string(l);
  return s + " < _";
}
std::string asep_alphabet_a1(int k) {
  std::string s = "0";
  for (int l = 1; l <= k; l++) s += " < " + std::to_string(l);
  return s + " < _";
}
std::string asep_alphabet_a2(int k, int d) {
  std::string s = "_";
  for (int l = k; l <= d; l++) s += " < " + std::to_string(l);
  return s;
}

// ---------------------------------------------------------------- multiply

struct MultiplyOpts {
  std::string pi, rho, theory = "H", rule = "auto", method = "puzzle";
  int n = 0, g = 0, pad = 0;
  bool json = false;
};

std::map<Perm, LaurentPoly> trimmed_nonzero(const PuzzleConstants& pc) {
  std::map<Perm, LaurentPoly> out;
  for (auto& [sigma, e] : pc.constants)
    if (!e.coeff.is_zero()) out[sigma.trim()] = e.coeff;
  return out;
}

int run_multiply(const MultiplyOpts& o) {
  Perm pi = Perm::parse(o.pi), rho = Perm::parse(o.rho);
  Theory th = theory_of(o.theory);
  Rule rule = rule_of(o.rule);
  int n = o.n > 0 ? o.n : std::max({pi.size(), rho.size(), 1});
  std::optional<int> g;
  if (o.g > 0) g = o.g;
  bool wantPuzzle = o.method != "oracle";
  bool wantOracle = o.method != "puzzle";

  PuzzleConstants pc;
  std::map<Perm, LaurentPoly> oc;
  if (wantPuzzle) pc = puzzle_constants(pi, rho, n, th, rule, g);
  if (wantOracle) oc = oracle_constants(pi, rho, n, th);

  if (wantPuzzle && wantOracle) {
    auto a = nonzero_coeffs(pc.constants);
    auto b = nonzero_poly(oc);
    if (a != b) {
      std::cerr << "puzzle and oracle computations disagree for pi=" << pi.to_string()
                << " rho=" << rho.to_string() << " n=" << n << " theory=" << o.theory << "\n";
      print_disagreement(std::cerr, a, b);
      return 3;
    }
  }

  bool stable = true;
  PuzzleConstants pc2;
  if (o.pad > 0) {
    if (!wantPuzzle) throw std::invalid_argument("--pad needs a puzzle computation");
    if (o.pad <= n) throw std::invalid_argument("--pad must exceed the base size");
    pc2 = puzzle_constants(pi, rho, o.pad, th, rule);
    auto padded = trimmed_nonzero(pc2);
    std::erase_if(padded, [&](const auto& kv) { return kv.first.size() > n; });
    stable = trimmed_nonzero(pc) == padded;
  }

  if (o.json) {
    ordered_json resp;
    resp["request"] = {{"command", "multiply"}, {"pi", pi.to_string()},
                       {"rho", rho.to_string()}, {"n", n},
                       {"theory", theory_name(th)},
                       {"rule", wantPuzzle ? pc.rule : rule_name(rule)},
                       {"method", o.method}};
    if (g) resp["request"]["g"] = *g;
    resp["version"] = library_version;
    ordered_json arr = ordered_json::array();
    if (wantPuzzle) {
      for (auto& [sigma, e] : pc.constants) {
        if (e.coeff.is_zero()) continue;
        arr.push_back({{"sigma", sigma.to_string()}, {"nu", e.nu},
                       {"coefficient", e.coeff.to_string()},
                       {"puzzle_count", e.puzzle_count}});
      }
    } else {
      for (auto& [sigma, c] : nonzero_poly(oc))
        arr.push_back({{"sigma", sigma.to_string()}, {"nu", ""},
                       {"coefficient", c.to_string()}, {"puzzle_count", 0}});
    }
    resp["constants"] = arr;
    resp["residual"] = wantPuzzle && pc.dropped != 0;
    if (o.pad > 0) resp["pad"] = {{"n", o.pad}, {"stable", stable}};
    std::cout << resp.dump(2) << "\n";
    return 0;
  }

  if (wantPuzzle) {
    std::cout << "rule = " << pc.rule << "  theory = " << theory_name(th) << "  n = " << pc.n
              << "  k = " << pc.k << "  d = " << pc.d;
    if (pc.g >= 0) std::cout << "  g = " << pc.g;
    if (pc.m >= 0) std::cout << "  m = " << pc.m;
    std::cout << "\nlambda = " << print_letter_string(pc.lambda)
              << "  mu = " << print_letter_string(pc.mu) << "\n";
    std::vector<std::vector<std::string>> rows{{"sigma", "coefficient", "puzzles", "nu"}};
    long terms = 0;
    for (auto& [sigma, e] : pc.constants) {
      if (e.coeff.is_zero()) continue;
      terms++;
      rows.push_back({sigma.to_string(), e.coeff.to_string(), std::to_string(e.puzzle_count),
                      e.nu});
    }
    print_table(std::cout, rows);
    std::cout << terms << " terms, " << pc.total_puzzles << " puzzles, " << pc.dropped
              << " dropped\n";
  } else {
    std::cout << "theory = " << theory_name(th) << "  n = " << n << "  method = oracle\n";
    print_coeff_map(std::cout, nonzero_poly(oc));
  }
  if (wantPuzzle && wantOracle) std::cout << "puzzle and oracle computations agree\n";
  if (o.pad > 0)
    std::cout << "padding to n = " << o.pad
              << (stable ? ": constants stable" : ": constants CHANGED") << "\n";
  return stable ? 0 : 1;
}

// ----------------------------------------------------------------- puzzles

struct PuzzlesOpts {
  std::string lambda, mu, nu, rule, theory = "H", render;
  int k = -1, d = -1;
  bool json = false;
};

int max_letter_of(const std::vector<int>& v) {
  int m = -1;
  for (int x : v)
    if (x != BLANK) m = std::max(m, x);
  return m;
}

template <typename Cat, typename Sink>
void collect_puzzles(const Cat& cat, int n, const std::vector<int>& nw,
                     const std::vector<int>& ne, Sink&& sink) {
  enumerate_puzzles(cat, n, nw, ne, [&](const Puzzle<typename Cat::Fug>& p) {
    sink(Puzzle<LaurentPoly>{p.nu, LaurentPoly(detail::to_fug_poly(p.fug)), p.charge, p.cells});
  });
}

int run_puzzles(const PuzzlesOpts& o) {
  Rule rule = rule_of(o.rule);
  if (rule == Rule::Auto)
    throw std::invalid_argument(
        "boundary strings are rule-specific; pick --rule sepdesc or --rule almostsep");
  Theory th = theory_of(o.theory);
  std::vector<int> lam = parse_letter_string(o.lambda);
  std::vector<int> mus = parse_letter_string(o.mu);
  int n = (int)lam.size();
  if ((int)mus.size() != n) throw BoundaryMismatch("lambda and mu must have the same length");
  if (n == 0) throw BoundaryMismatch("empty boundary");

  bool haveNu = !o.nu.empty();
  std::vector<int> nuLetters;
  std::vector<NuTok> nuToks;

  int k = o.k, d = o.d;
  if (rule == Rule::SepDesc) {
    if (haveNu) {
      nuLetters = parse_letter_string(o.nu);
      if ((int)nuLetters.size() != n) throw BoundaryMismatch("nu length differs from the sides");
    }
    if (k < 0) k = max_letter_of(mus);
    if (k < 0) throw BoundaryMismatch("cannot infer the alphabet split from a letterless NE side");
    if (d < 0) d = std::max({k + 1, max_letter_of(lam), max_letter_of(nuLetters)});
    for (int x : mus)
      if (x != BLANK && x > k) throw BoundaryMismatch("NE letter above the alphabet split");
    for (int x : lam)
      if (x != BLANK && (x <= k || x > d))
        throw BoundaryMismatch("NW letter outside the upper alphabet");
  } else {
    if (haveNu) {
      nuToks = parse_nu_tokens(o.nu);
      if ((int)nuToks.size() != n) throw BoundaryMismatch("nu length differs from the sides");
    }
    if (k < 0) {
      int lo = std::max(0, max_letter_of(lam));
      int hi = std::numeric_limits<int>::max();
      for (int x : mus)
        if (x != BLANK) hi = std::min(hi, x);
      for (const NuTok& t : nuToks) {
        if (t.kind == NuTok::Down) lo = std::max(lo, t.letter + 1);
        if (t.kind == NuTok::Up) hi = std::min(hi, t.letter - 1);
      }
      if (hi == std::numeric_limits<int>::max()) hi = lo;
      if (lo > hi) throw BoundaryMismatch("sides do not admit a common alphabet split");
      k = lo;
    }
    if (d < 0) {
      d = std::max(k, max_letter_of(mus));
      for (const NuTok& t : nuToks)
        if (t.kind != NuTok::Odd) d = std::max(d, t.letter);
    }
    for (int x : lam)
      if (x != BLANK && x > k) throw BoundaryMismatch("NW letter above the alphabet split");
    for (int x : mus)
      if (x != BLANK && (x < k || x > d))
        throw BoundaryMismatch("NE letter outside the upper alphabet");
  }

  std::vector<int> nw(n), ne(n), target;
  if (rule == Rule::SepDesc) {
    for (int i = 0; i < n; i++) {
      nw[i] = sep_global_rank(lam[n - 1 - i], k);
      ne[i] = sep_global_rank(mus[i], k);
    }
    if (haveNu)
      for (int x : nuLetters) target.push_back(sep_global_rank(x, k));
  } else {
    for (int i = 0; i < n; i++) {
      nw[i] = almostsep::mask_of_letter(lam[n - 1 - i]);
      ne[i] = almostsep::mask_of_letter(mus[i]);
    }
    if (haveNu)
      for (const NuTok& t : nuToks) target.push_back(almostsep::tok_code(t));
  }

  bool keepCells = o.json || !o.render.empty();
  std::vector<Puzzle<LaurentPoly>> kept;
  struct Group {
    long count = 0;
    LaurentPoly sum;
    std::string sigma;
    bool dropped = false;
  };
  std::map<std::string, Group> groups;
  long total = 0;

  auto sink = [&](const Puzzle<LaurentPoly>& p) {
    if (haveNu && p.nu != target) return;
    total++;
    std::string nus, sig;
    bool drop = false;
    if (rule == Rule::SepDesc) {
      std::vector<int> letters(n);
      for (int c = 0; c < n; c++) letters[c] = sep_letter_of_rank(p.nu[c], k);
      nus = print_letter_string(letters);
      sig = sigma_of_nu_sep(letters).to_string();
    } else {
      std::vector<NuTok> toks(n);
      for (int c = 0; c < n; c++) toks[c] = almostsep::tok_decode(p.nu[c]);
      nus = print_nu_tokens(toks);
      try {
        sig = sigma_of_nu_asep(toks, k).to_string();
      } catch (const std::invalid_argument&) {
        drop = true;
      }
    }
    Group& grp = groups[nus];
    grp.count++;
    grp.sum += p.fug;
    grp.sigma = sig;
    grp.dropped = drop;
    if (keepCells) kept.push_back(p);
  };

  if (rule == Rule::SepDesc) {
    switch (th) {
      case Theory::H: collect_puzzles(sepdesc::HK(k, d, false), n, nw, ne, sink); break;
      case Theory::K: collect_puzzles(sepdesc::HK(k, d, true), n, nw, ne, sink); break;
      case Theory::HT: collect_puzzles(sepdesc::HT(k, d), n, nw, ne, sink); break;
      case Theory::KT: collect_puzzles(sepdesc::KT(k, d), n, nw, ne, sink); break;
    }
  } else {
    if (th != Theory::H && th != Theory::K)
      throw std::invalid_argument("almost-separated puzzles support H and K only");
    collect_puzzles(almostsep::HK(k, d, th == Theory::K), n, nw, ne, sink);
  }

  RenderContext ctx{rule, th, k, d, n};
  bool residual = false;
  for (auto& [nus, grp] : groups) residual = residual || grp.dropped;

  if (!o.render.empty()) {
    std::vector<std::string> captions;
    for (const auto& p : kept) {
      std::string nus;
      if (rule == Rule::SepDesc) {
        std::vector<int> letters(n);
        for (int c = 0; c < n; c++) letters[c] = sep_letter_of_rank(p.nu[c], k);
        nus = print_letter_string(letters);
      } else {
        std::vector<NuTok> toks(n);
        for (int c = 0; c < n; c++) toks[c] = almostsep::tok_decode(p.nu[c]);
        nus = print_nu_tokens(toks);
      }
      std::string cap = "nu=" + nus;
      if (!(p.fug == LaurentPoly(1))) cap += "  fug=" + p.fug.to_string();
      if (p.charge) cap += "  charge=" + std::to_string(p.charge);
      captions.push_back(cap);
    }
    std::string out;
    if (o.render.size() >= 4 && o.render.substr(o.render.size() - 4) == ".svg") {
      out = svg_of_puzzles(kept, ctx, captions);
    } else if ((o.render.size() >= 4 && o.render.substr(o.render.size() - 4) == ".tex") ||
               (o.render.size() >= 5 && o.render.substr(o.render.size() - 5) == ".tikz")) {
      out = tikz_of_puzzles(kept, ctx, captions);
    } else if (o.render.size() >= 5 && o.render.substr(o.render.size() - 5) == ".json") {
      ordered_json arr = ordered_json::array();
      for (const auto& p : kept) arr.push_back(puzzle_json(p, ctx));
      out = arr.dump(2) + "\n";
    } else {
      throw std::invalid_argument("render target must end in .svg, .tex, .tikz or .json");
    }
    std::ofstream f(o.render, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + o.render + "' for writing");
    f << out;
  }

  if (o.json) {
    ordered_json resp;
    resp["request"] = {{"command", "puzzles"}, {"lambda", o.lambda}, {"mu", o.mu},
                       {"rule", rule_name(rule)}, {"theory", theory_name(th)},
                       {"n", n}, {"k", k}, {"d", d}};
    if (haveNu) resp["request"]["nu"] = o.nu;
    resp["version"] = library_version;
    ordered_json arr = ordered_json::array();
    for (auto& [nus, grp] : groups)
      arr.push_back({{"sigma", grp.dropped ? "" : grp.sigma}, {"nu", nus},
                     {"coefficient", grp.sum.to_string()}, {"puzzle_count", grp.count}});
    resp["constants"] = arr;
    resp["residual"] = residual;
    ordered_json parr = ordered_json::array();
    for (const auto& p : kept) parr.push_back(puzzle_json(p, ctx));
    resp["puzzles"] = parr;
    std::cout << resp.dump(2) << "\n";
    return 0;
  }

  std::cout << "rule = " << rule_name(rule) << "  theory = " << theory_name(th)
            << "  n = " << n << "  k = " << k << "  d = " << d << "\n";
  std::cout << "lambda = " << o.lambda << "  mu = " << o.mu << "\n";
  std::vector<std::vector<std::string>> rows{{"nu", "sigma", "puzzles", "fugacity sum"}};
  for (auto& [nus, grp] : groups)
    rows.push_back({nus, grp.dropped ? "(no class)" : grp.sigma, std::to_string(grp.count),
                    grp.sum.to_string()});
  print_table(std::cout, rows);
  if (!o.render.empty()) std::cout << "wrote " << o.render << "\n";
  std::cout << total << " puzzles\n";
  return 0;
}

// ------------------------------------------------------------------ encode

struct EncodeOpts {
  std::string pi, rho, rule = "auto";
  int n = 0;
  bool json = false;
};

int run_encode(const EncodeOpts& o) {
  Perm pi = Perm::parse(o.pi), rho = Perm::parse(o.rho);
  Rule rule = rule_of(o.rule);
  int n = o.n > 0 ? o.n : std::max({pi.size(), rho.size(), 1});
  int over = overlap(pi.pad(n), rho.pad(n));

  ordered_json encs = ordered_json::array();
  std::ostringstream text;
  text << "pi = " << pi.to_string() << "  rho = " << rho.to_string() << "  n = " << n
       << "  overlap = " << over << "\n";
  bool any = false;

  if (rule != Rule::AlmostSep) {
    auto gs = sepdesc_valid_g(pi.pad(n), rho.pad(n), n);
    if (!gs.empty()) {
      any = true;
      text << "separated-descent encodings (one per gratuitous nondescent g):\n";
      for (int g : gs) {
        SepEncoding e = sepdesc_encode(pi, rho, n, g);
        text << "  g = " << g << ":  k = " << e.k << "  d = " << e.d
             << "  lambda = " << print_letter_string(e.lambda)
             << "  mu = " << print_letter_string(e.mu)
             << "  A1 = [" << sep_alphabet_a1(e.k, e.d) << "]  A2 = ["
             << sep_alphabet_a2(e.k) << "]\n";
        encs.push_back({{"rule", "sepdesc"}, {"g", g}, {"k", e.k}, {"d", e.d},
                        {"lambda", print_letter_string(e.lambda)},
                        {"mu", print_letter_string(e.mu)}});
      }
    } else if (rule == Rule::SepDesc) {
      throw NotSeparated();
    }
  }
  if (rule != Rule::SepDesc) {
    try {
      AsepEncoding e = almostsep_encode(pi, rho, n);
      any = true;
      text << "almost-separated encoding:\n";
      text << "  m = " << e.m << "  k = " << e.k << "  d = " << e.d
           << "  lambda = " << print_letter_string(e.lambda)
           << "  mu = " << print_letter_string(e.mu) << "  A1 = [" << asep_alphabet_a1(e.k)
           << "]  A2 = [" << asep_alphabet_a2(e.k, e.d) << "]\n";
      encs.push_back({{"rule", "almostsep"}, {"m", e.m}, {"k", e.k}, {"d", e.d},
                      {"lambda", print_letter_string(e.lambda)},
                      {"mu", print_letter_string(e.mu)}});
    } catch (const NotAlmostSeparated&) {
      if (rule == Rule::AlmostSep) throw;
    }
  }
  if (!any) {
    std::cerr << "pair is neither separated nor almost-separated (overlap = " << over << ")\n";
    return 2;
  }

  if (o.json) {
    ordered_json resp;
    resp["request"] = {{"command", "encode"}, {"pi", pi.to_string()},
                       {"rho", rho.to_string()}, {"n", n}, {"rule", rule_name(rule)}};
    resp["version"] = library_version;
    resp["overlap"] = over;
    resp["encodings"] = encs;
    std::cout << resp.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return 0;
}

// ------------------------------------------------------------------- euler

struct EulerOpts {
  std::string lambda, mu, nu, rule;
  bool json = false;
};

int run_euler(const EulerOpts& o) {
  Rule rule = rule_of(o.rule);
  if (rule == Rule::Auto)
    throw std::invalid_argument(
        "boundary strings are rule-specific; pick --rule sepdesc or --rule almostsep");
  EulerResult res = euler_characteristic(o.lambda, o.mu, o.nu, rule);
  if (o.json) {
    ordered_json resp;
    resp["request"] = {{"command", "euler"}, {"lambda", o.lambda}, {"mu", o.mu},
                       {"nu", o.nu}, {"rule", rule_name(rule)}};
    resp["version"] = library_version;
    resp["puzzles"] = res.puzzles;
    resp["dim_y"] = res.dim_y;
    resp["chi"] = res.chi;
    std::cout << resp.dump(2) << "\n";
  } else {
    std::cout << "rule = " << rule_name(rule) << "  lambda = " << o.lambda
              << "  mu = " << o.mu << "  nu = " << o.nu << "\n";
    std::cout << "puzzles = " << res.puzzles << "  dim Y = " << res.dim_y
              << "  chi = " << res.chi << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyOpts {
  std::string samples = "100", rule = "auto", theory = "H";
  int n = 4;
  unsigned long long seed = 20260816ULL;
  bool json = false;
};

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int run_verify(const VerifyOpts& o) {
  Theory th = theory_of(o.theory);
  Rule rule = rule_of(o.rule);
  int n = o.n;
  if (n < 1 || n > 9) throw std::invalid_argument("--n must lie in 1..9");
  bool exhaustive = o.samples == "all";
  long want = 0;
  if (!exhaustive) {
    want = std::stol(o.samples);
    if (want < 1) throw std::invalid_argument("--samples must be positive or 'all'");
  }
  std::mt19937_64 rng(o.seed);

  auto admissible = [&](const Perm& pi, const Perm& rho) {
    int over = overlap(pi, rho);
    Rule r = rule == Rule::Auto ? (over <= 1 ? Rule::SepDesc : Rule::AlmostSep) : rule;
    if (r == Rule::SepDesc && over > 1) return false;
    if (r == Rule::AlmostSep && over > 2) return false;
    if (r == Rule::AlmostSep && th != Theory::H && th != Theory::K) return false;
    return true;
  };
  auto fails = [&](const Perm& pi, const Perm& rho, int nn, std::string& diff) {
    auto a = nonzero_coeffs(puzzle_constants(pi, rho, nn, th, rule).constants);
    auto b = nonzero_poly(oracle_constants(pi, rho, nn, th));
    if (a == b) return false;
    std::ostringstream os;
    print_disagreement(os, a, b);
    diff = os.str();
    return true;
  };
  auto report_failure = [&](Perm pi, Perm rho, std::string diff) {
    Perm tp = pi.trim(), tr = rho.trim();
    int tn = std::max({tp.size(), tr.size(), 1});
    int rn = n;
    std::string tdiff;
    if (tn < n && admissible(tp, tr) && fails(tp, tr, tn, tdiff)) {
      pi = tp;
      rho = tr;
      rn = tn;
      diff = tdiff;
    }
    std::cerr << "MISMATCH pi=" << pi.to_string() << " rho=" << rho.to_string() << " n=" << rn
              << " theory=" << theory_name(th) << " rule=" << rule_name(rule) << "\n"
              << diff << "reproduce: schubcalc multiply --pi " << pi.to_string() << " --rho "
              << rho.to_string() << " --n " << rn << " --theory " << theory_name(th)
              << " --rule " << rule_name(rule) << " --method both\n";
  };

  long checked = 0, skipped = 0;
  std::string diff;
  if (exhaustive || n <= 6) {
    if (exhaustive && n > 6)
      throw std::invalid_argument("exhaustive verification is limited to n <= 6");
    std::vector<Perm> perms = all_perms(n);
    std::vector<std::pair<int, int>> pool;
    for (int i = 0; i < (int)perms.size(); i++)
      for (int j = 0; j < (int)perms.size(); j++) {
        if (admissible(perms[i], perms[j]))
          pool.push_back({i, j});
        else
          skipped++;
      }
    if (pool.empty()) throw std::invalid_argument("no admissible pairs for these options");
    long count = exhaustive ? (long)pool.size() : want;
    for (long t = 0; t < count; t++) {
      auto [i, j] = exhaustive ? pool[t] : pool[rng() % pool.size()];
      checked++;
      if (fails(perms[i], perms[j], n, diff)) {
        report_failure(perms[i], perms[j], diff);
        return 1;
      }
    }
  } else {
    auto rand_perm = [&]() {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 1);
      for (int i = n - 1; i > 0; i--) std::swap(v[i], v[rng() % (i + 1)]);
      return Perm(v);
    };
    long attempts = 0;
    while (checked < want) {
      if (++attempts > want * 200000L)
        throw std::invalid_argument("could not sample enough admissible pairs");
      Perm pi = rand_perm(), rho = rand_perm();
      if (!admissible(pi, rho)) {
        skipped++;
        continue;
      }
      checked++;
      if (fails(pi, rho, n, diff)) {
        report_failure(pi, rho, diff);
        return 1;
      }
    }
  }

  if (o.json) {
    ordered_json resp;
    resp["request"] = {{"command", "verify"}, {"n", n}, {"samples", o.samples},
                       {"rule", rule_name(rule)}, {"theory", theory_name(th)}};
    resp["version"] = library_version;
    resp["seed"] = o.seed;
    resp["checked"] = checked;
    resp["skipped"] = skipped;
    resp["agree"] = true;
    std::cout << resp.dump(2) << "\n";
  } else {
    std::cout << "checked " << checked << " pairs at n = " << n << " (rule = "
              << rule_name(rule) << ", theory = " << theory_name(th) << ", seed = " << o.seed
              << "): puzzle and oracle agree\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert and Grothendieck structure constants from puzzle rules"};
  app.set_version_flag("--version", std::string(library_version));
  app.require_subcommand(1);

  MultiplyOpts mo;
  CLI::App* mul = app.add_subcommand(
      "multiply", "Expand a product of Schubert or Grothendieck classes");
  mul->add_option("--pi", mo.pi, "first permutation, one-line (e.g. 2431 or 2,4,3,1)")
      ->required();
  mul->add_option("--rho", mo.rho, "second permutation, one-line")->required();
  mul->add_option("--n", mo.n, "ambient size (default: max over the inputs)");
  mul->add_option("--theory", mo.theory, "H, K, HT or KT (default H)")
      ->check(CLI::IsMember({"H", "K", "HT", "KT"}));
  mul->add_option("--rule", mo.rule, "auto, sepdesc or almostsep (default auto)")
      ->check(CLI::IsMember({"auto", "sepdesc", "almostsep"}));
  mul->add_option("--method", mo.method, "puzzle, oracle or both (default puzzle)")
      ->check(CLI::IsMember({"puzzle", "oracle", "both"}));
  mul->add_option("--g", mo.g, "gratuitous nondescent for the separated-descent encoding");
  mul->add_option("--pad", mo.pad, "re-run at a larger ambient size and report stabilization");
  mul->add_flag("--json", mo.json, "emit a JSON response");

  PuzzlesOpts po;
  CLI::App* puz = app.add_subcommand("puzzles", "Enumerate puzzles for explicit boundaries");
  puz->add_option("--lambda", po.lambda, "NW boundary string, west to east")->required();
  puz->add_option("--mu", po.mu, "NE boundary string, west to east")->required();
  puz->add_option("--nu", po.nu, "bottom filter (letter string, or tokens like ^3,^4,v1,odd,v0)");
  puz->add_option("--rule", po.rule, "sepdesc or almostsep")
      ->required()
      ->check(CLI::IsMember({"sepdesc", "almostsep"}));
  puz->add_option("--theory", po.theory, "H, K, HT or KT (default H)")
      ->check(CLI::IsMember({"H", "K", "HT", "KT"}));
  puz->add_option("--k", po.k, "alphabet split (default: inferred from the boundary)");
  puz->add_option("--d", po.d, "largest letter (default: inferred from the boundary)");
  puz->add_option("--render", po.render, "write pictures to this .svg, .tex/.tikz or .json file");
  puz->add_flag("--json", po.json, "emit a JSON response with the filled puzzles");

  EncodeOpts eo;
  CLI::App* enc = app.add_subcommand("encode", "Show the boundary encodings of a pair");
  enc->add_option("--pi", eo.pi, "first permutation, one-line")->required();
  enc->add_option("--rho", eo.rho, "second permutation, one-line")->required();
  enc->add_option("--n", eo.n, "ambient size (default: max over the inputs)");
  enc->add_option("--rule", eo.rule, "auto, sepdesc or almostsep (default auto)")
      ->check(CLI::IsMember({"auto", "sepdesc", "almostsep"}));
  enc->add_flag("--json", eo.json, "emit a JSON response");

  EulerOpts uo;
  CLI::App* eul = app.add_subcommand(
      "euler", "Signed puzzle count and sheaf Euler characteristic for a boundary triple");
  eul->add_option("--lambda", uo.lambda, "NW boundary string")->required();
  eul->add_option("--mu", uo.mu, "NE boundary string")->required();
  eul->add_option("--nu", uo.nu, "bottom string (letters, or tokens for almostsep)")->required();
  eul->add_option("--rule", uo.rule, "sepdesc or almostsep")
      ->required()
      ->check(CLI::IsMember({"sepdesc", "almostsep"}));
  eul->add_flag("--json", uo.json, "emit a JSON response");

  VerifyOpts vo;
  CLI::App* ver = app.add_subcommand(
      "verify", "Cross-check puzzle constants against the polynomial oracle");
  ver->add_option("--n", vo.n, "ambient size (default 4)");
  ver->add_option("--samples", vo.samples, "number of sampled pairs, or 'all' (default 100)");
  ver->add_option("--rule", vo.rule, "auto, sepdesc or almostsep (default auto)")
      ->check(CLI::IsMember({"auto", "sepdesc", "almostsep"}));
  ver->add_option("--theory", vo.theory, "H, K, HT or KT (default H)")
      ->check(CLI::IsMember({"H", "K", "HT", "KT"}));
  ver->add_option("--seed", vo.seed, "random seed (default 20260816)");
  ver->add_flag("--json", vo.json, "emit a JSON response");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mul->parsed()) return run_multiply(mo);
    if (puz->parsed()) return run_puzzles(po);
    if (enc->parsed()) return run_encode(eo);
    if (eul->parsed()) return run_euler(uo);
    if (ver->parsed()) return run_verify(vo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
