#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/catalog_almostsep.hpp"
#include "schub/catalog_sepdesc.hpp"
#include "schub/encoding.hpp"
#include "schub/grid.hpp"
#include "schub/schubert.hpp"

// Structure constants from puzzle enumeration. The boundary strings read
// west to east, so the NW side is fed to the grid bottom-up (reversed) and
// the NE side top-down; the bottom string comes out left to right.
namespace schub {

enum class Rule { Auto, SepDesc, AlmostSep };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Auto: return "auto";
    case Rule::SepDesc: return "sepdesc";
    case Rule::AlmostSep: return "almostsep";
  }
  return "?";
}

struct ConstantEntry {
  LaurentPoly coeff;
  long puzzle_count = 0;
  std::string nu;
};

struct PuzzleConstants {
  std::string rule;
  Theory theory{};
  int n = 0, k = 0, d = 0, g = -1, m = -1;
  std::vector<int> lambda, mu;
  std::map<Perm, ConstantEntry> constants;
  long total_puzzles = 0;
  long dropped = 0;
};

namespace detail {

inline LaurentPoly to_fug_poly(const mpz_class& v) { return LaurentPoly(v); }
inline const LaurentPoly& to_fug_poly(const LaurentPoly& v) { return v; }

template <typename Cat>
void run_sepdesc(const Cat& cat, const SepEncoding& e, long lpirho, bool check_charge,
                 PuzzleConstants& out) {
  int n = e.n;
  std::vector<int> nw(n), ne(n);
  for (int i = 0; i < n; i++) {
    nw[i] = sep_global_rank(e.lambda[n - 1 - i], e.k);
    ne[i] = sep_global_rank(e.mu[i], e.k);
  }
  enumerate_puzzles(cat, n, nw, ne, [&](const auto& puz) {
    std::vector<int> letters(n);
    for (int c = 0; c < n; c++) letters[c] = sep_letter_of_rank(puz.nu[c], e.k);
    Perm sigma = sigma_of_nu_sep(letters);
    if (check_charge && puz.charge != long(sigma.length()) - lpirho)
      throw std::logic_error("puzzle charge disagrees with the length excess");
    auto& entry = out.constants[sigma];
    std::string nus = print_letter_string(letters);
    if (entry.puzzle_count && entry.nu != nus)
      throw std::logic_error("two bottom strings standardize to one permutation");
    entry.nu = nus;
    entry.coeff += to_fug_poly(puz.fug);
    entry.puzzle_count++;
    out.total_puzzles++;
  });
}

}  // namespace detail

inline PuzzleConstants sepdesc_constants(const Perm& pi, const Perm& rho, int n, Theory theory,
                                         std::optional<int> g = std::nullopt) {
  SepEncoding e = sepdesc_encode(pi, rho, n, g);
  PuzzleConstants out;
  out.rule = "sepdesc";
  out.theory = theory;
  out.n = e.n;
  out.k = e.k;
  out.d = e.d;
  out.g = e.g;
  out.lambda = e.lambda;
  out.mu = e.mu;
  long lpirho = long(pi.length()) + long(rho.length());
  switch (theory) {
    case Theory::H:
      detail::run_sepdesc(sepdesc::HK(e.k, e.d, false), e, lpirho, true, out);
      break;
    case Theory::K:
      detail::run_sepdesc(sepdesc::HK(e.k, e.d, true), e, lpirho, true, out);
      break;
    case Theory::HT:
      detail::run_sepdesc(sepdesc::HT(e.k, e.d), e, lpirho, false, out);
      break;
    case Theory::KT:
      detail::run_sepdesc(sepdesc::KT(e.k, e.d), e, lpirho, false, out);
      break;
  }
  return out;
}

inline PuzzleConstants almostsep_constants(const Perm& pi, const Perm& rho, int n, Theory theory) {
  if (theory != Theory::H && theory != Theory::K)
    throw std::invalid_argument("almost-separated puzzles support H and K only");
  AsepEncoding e = almostsep_encode(pi, rho, n);
  PuzzleConstants out;
  out.rule = "almostsep";
  out.theory = theory;
  out.n = e.n;
  out.k = e.k;
  out.d = e.d;
  out.m = e.m;
  out.lambda = e.lambda;
  out.mu = e.mu;
  long lpirho = long(pi.length()) + long(rho.length());
  almostsep::HK cat(e.k, e.d, theory == Theory::K);
  std::vector<int> nw(e.n), ne(e.n);
  for (int i = 0; i < e.n; i++) {
    nw[i] = almostsep::mask_of_letter(e.lambda[e.n - 1 - i]);
    ne[i] = almostsep::mask_of_letter(e.mu[i]);
  }
  enumerate_puzzles(cat, e.n, nw, ne, [&](const auto& puz) {
    std::vector<NuTok> toks(e.n);
    for (int c = 0; c < e.n; c++) toks[c] = almostsep::tok_decode(puz.nu[c]);
    Perm sigma;
    try {
      sigma = sigma_of_nu_asep(toks, e.k);
    } catch (const std::invalid_argument&) {
      out.dropped++;
      return;
    }
    if (puz.charge != long(sigma.length()) - lpirho)
      throw std::logic_error("puzzle charge disagrees with the length excess");
    auto& entry = out.constants[sigma];
    std::string nus = print_nu_tokens(toks);
    if (entry.puzzle_count && entry.nu != nus)
      throw std::logic_error("two bottom strings standardize to one permutation");
    entry.nu = nus;
    entry.coeff += detail::to_fug_poly(puz.fug);
    entry.puzzle_count++;
    out.total_puzzles++;
  });
  return out;
}

inline Rule resolve_rule(const Perm& pi, const Perm& rho, Rule rule) {
  if (rule != Rule::Auto) return rule;
  return overlap(pi, rho) <= 1 ? Rule::SepDesc : Rule::AlmostSep;
}

inline PuzzleConstants puzzle_constants(const Perm& pi, const Perm& rho, int n, Theory theory,
                                        Rule rule = Rule::Auto,
                                        std::optional<int> g = std::nullopt) {
  switch (resolve_rule(pi, rho, rule)) {
    case Rule::AlmostSep:
      return almostsep_constants(pi, rho, n, theory);
    default:
      return sepdesc_constants(pi, rho, n, theory, g);
  }
}

}  // namespace schub
