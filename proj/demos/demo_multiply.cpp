// Minimal library tour: expand two products through puzzles, cross-check one
// of them against the divided-difference recursion, and write a picture.

#include <fstream>
#include <iostream>

#include "schub/constants.hpp"
#include "schub/render.hpp"
#include "schub/schubert.hpp"

using namespace schub;

static void show(const PuzzleConstants& pc) {
  std::cout << "rule=" << pc.rule << " theory=" << theory_name(pc.theory) << " n=" << pc.n
            << " lambda=" << print_letter_string(pc.lambda)
            << " mu=" << print_letter_string(pc.mu) << "\n";
  for (const auto& [sigma, e] : pc.constants) {
    if (e.coeff.is_zero()) continue;
    std::cout << "  c[" << sigma.to_string() << "] = " << e.coeff.to_string() << "   ("
              << e.puzzle_count << " puzzle" << (e.puzzle_count == 1 ? "" : "s") << ", nu="
              << e.nu << ")\n";
  }
}

int main() {
  // A separated-descent product in cohomology.
  Perm pi = Perm::parse("1362547"), rho = Perm::parse("7321456");
  PuzzleConstants coh = puzzle_constants(pi, rho, 7, Theory::H);
  show(coh);

  // The same pair through the polynomial oracle.
  auto oracle = oracle_constants(pi, rho, 7, Theory::H);
  bool agree = true;
  for (const auto& [sigma, e] : coh.constants)
    agree = agree && oracle.count(sigma) && oracle.at(sigma) == e.coeff;
  std::cout << (agree ? "oracle agrees" : "oracle DISAGREES") << "\n\n";

  // An almost-separated product in K-theory, signs included.
  PuzzleConstants kth = puzzle_constants(Perm::parse("2543167"), Perm::parse("4132567"), 7,
                                         Theory::K);
  show(kth);

  // Draw the cohomology puzzles for a small two-step boundary.
  SepEncoding e = sepdesc_encode(Perm::parse("2431"), Perm::parse("2134"), 4, 2);
  std::vector<int> nw(e.n), ne(e.n);
  for (int i = 0; i < e.n; i++) {
    nw[i] = sep_global_rank(e.lambda[e.n - 1 - i], e.k);
    ne[i] = sep_global_rank(e.mu[i], e.k);
  }
  std::vector<Puzzle<LaurentPoly>> puzzles;
  std::vector<std::string> captions;
  enumerate_puzzles(sepdesc::HK(e.k, e.d, false), e.n, nw, ne,
                    [&](const Puzzle<mpz_class>& p) {
                      std::vector<int> letters(e.n);
                      for (int c = 0; c < e.n; c++)
                        letters[c] = sep_letter_of_rank(p.nu[c], e.k);
                      captions.push_back("nu=" + print_letter_string(letters));
                      puzzles.push_back({p.nu, LaurentPoly(p.fug), p.charge, p.cells});
                    });
  RenderContext ctx{Rule::SepDesc, Theory::H, e.k, e.d, e.n};
  std::ofstream("demo_puzzles.svg") << svg_of_puzzles(puzzles, ctx, captions);
  std::cout << "\nwrote demo_puzzles.svg (" << puzzles.size() << " puzzles)\n";
  return 0;
}
