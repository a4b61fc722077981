#pragma once

#include "torelli/lattice.hpp"
#include "torelli/word.hpp"

#include <functional>

namespace torelli {

struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// pi_1 of a genus-g surface with 0 or 1 boundary components.
struct SurfaceGroup {
  int genus = 1;
  int boundary_count = 1;
  AlphabetPtr alphabet;

  static SurfaceGroup make(int genus, int boundary_count);
  bool operator==(const SurfaceGroup &o) const {
    return genus == o.genus && boundary_count == o.boundary_count &&
           same_alphabet(alphabet, o.alphabet);
  }
  bool operator!=(const SurfaceGroup &o) const { return !(*this == o); }

  Word identity() const { return Word(alphabet); }
  Word alpha(int i) const;
  Word beta(int i) const;
  Word parse(std::string_view text) const { return Word::parse(alphabet, text); }
};

using HomologyClass = IntVec; // basis a1 b1 ... ag bg

Word boundary_word(const SurfaceGroup &G);
Word handle_commutator(const SurfaceGroup &G, int i); // [alpha_i, beta_i]
Word eta(const SurfaceGroup &G, int i);
Word gamma(const SurfaceGroup &G, int i);

HomologyClass abelianize(const SurfaceGroup &G, const Word &w);

// standard symplectic pairing, i(a_i,b_i) = 1
Int alg_int(const HomologyClass &u, const HomologyClass &v);

// Closed surfaces only: Dehn's algorithm for g >= 2, abelianization for g = 1.
bool is_identity_closed(const SurfaceGroup &G, const Word &w);
// Result of greedy Dehn reduction (exposed for tests and the CLI).
Word dehn_reduce(const SurfaceGroup &G, const Word &w);

// x -> gamma^-1 x gamma
std::function<Word(const Word &)> push(const SurfaceGroup &G, const Word &gamma_word);

} // namespace torelli
