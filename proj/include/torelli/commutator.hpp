#pragma once

#include "torelli/surface.hpp"

#include <random>
#include <utility>

namespace torelli {

bool verify_witt_hall(const Word &g1, const Word &g2, const Word &g3);
bool verify_commutator_shuffle(const Word &g1, const Word &g2, const Word &g3);
bool verify_aux_identities(const Word &g1, const Word &g2);

struct NotInCommutatorSubgroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [x_x, x_y]^(z1^d1 ... zk^dk), generators as 1-based alphabet indices.
struct TomaszewskiBasisElement {
  int x = 1, y = 2;
  std::vector<std::pair<int, long>> tail;

  bool valid() const;
  Word expand(const AlphabetPtr &alpha) const;
  std::string str(const Alphabet &alpha) const;
  auto operator<=>(const TomaszewskiBasisElement &) const = default;
};

struct BasisFactor {
  TomaszewskiBasisElement elem;
  int exponent = 1;
  bool operator==(const BasisFactor &) const = default;
};

using BasisWord = std::vector<BasisFactor>;

BasisWord tomaszewski_rewrite(const AlphabetPtr &alpha, const Word &w);
BasisWord tomaszewski_rewrite(const SurfaceGroup &G, const Word &w);
Word expand(const AlphabetPtr &alpha, const BasisWord &bw);
BasisWord inverse(const BasisWord &bw);
void reduce_basis_word(BasisWord &bw);

// Random words for fuzzing.
Word random_word(const AlphabetPtr &alpha, std::mt19937_64 &rng, int max_len);
// Product of conjugated commutators, reduced; resampled until 0 < |w| <= max_len.
Word random_commutator_word(const AlphabetPtr &alpha, std::mt19937_64 &rng, int max_len);

} // namespace torelli
