#include "torelli/surface.hpp"

namespace torelli {

SurfaceGroup SurfaceGroup::make(int genus, int boundary_count) {
  if (genus < 1)
    throw ContractError("genus must be >= 1");
  if (boundary_count != 0 && boundary_count != 1)
    throw ContractError("boundary count must be 0 or 1");
  return SurfaceGroup{genus, boundary_count, Alphabet::surface(genus)};
}

static void check_handle(const SurfaceGroup &G, int i, int hi) {
  if (i < 1 || i > hi)
    throw std::out_of_range("handle index " + std::to_string(i) + " out of range");
  (void)G;
}

Word SurfaceGroup::alpha(int i) const {
  check_handle(*this, i, genus);
  return Word::generator(alphabet, 2 * i - 1);
}

Word SurfaceGroup::beta(int i) const {
  check_handle(*this, i, genus);
  return Word::generator(alphabet, 2 * i);
}

Word handle_commutator(const SurfaceGroup &G, int i) {
  return commutator(G.alpha(i), G.beta(i));
}

Word boundary_word(const SurfaceGroup &G) {
  Word r = G.identity();
  for (int i = 1; i <= G.genus; ++i)
    r = r * handle_commutator(G, i);
  return r;
}

Word eta(const SurfaceGroup &G, int i) {
  check_handle(G, i, G.genus - 1);
  return conjugate(G.beta(i + 1), G.alpha(i + 1));
}

Word gamma(const SurfaceGroup &G, int i) { return eta(G, i) * G.beta(i).inverse(); }

HomologyClass abelianize(const SurfaceGroup &G, const Word &w) {
  if (!same_alphabet(G.alphabet, w.alphabet()))
    throw AlphabetError("alphabet mismatch in abelianize");
  HomologyClass v = HomologyClass::Zero(2 * G.genus);
  for (int x : w.letters())
    v(std::abs(x) - 1) += x > 0 ? 1 : -1;
  return v;
}

Int alg_int(const HomologyClass &u, const HomologyClass &v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw std::invalid_argument("alg_int: length mismatch");
  Int s = 0;
  for (Eigen::Index i = 0; i < u.size(); i += 2)
    s += u(i) * v(i + 1) - u(i + 1) * v(i);
  return s;
}

namespace {

// Cyclic relator words starting at each letter: r and r^-1 each contain every
// letter exactly once, so there are two candidates per starting letter.
struct RelatorTable {
  int len = 0;
  std::vector<std::vector<std::vector<int>>> by_letter; // index x + rank

  explicit RelatorTable(const SurfaceGroup &G) {
    std::vector<int> r = boundary_word(G).letters();
    std::vector<int> ri(r.rbegin(), r.rend());
    for (int &x : ri)
      x = -x;
    len = static_cast<int>(r.size());
    int n = G.alphabet->rank();
    by_letter.assign(2 * n + 1, {});
    for (const auto *rel : {&r, &ri})
      for (int s = 0; s < len; ++s) {
        std::vector<int> rot(len);
        for (int k = 0; k < len; ++k)
          rot[k] = (*rel)[(s + k) % len];
        by_letter[rot[0] + n].push_back(std::move(rot));
      }
  }
};

} // namespace

Word dehn_reduce(const SurfaceGroup &G, const Word &w) {
  if (!same_alphabet(G.alphabet, w.alphabet()))
    throw AlphabetError("alphabet mismatch in dehn_reduce");
  RelatorTable tab(G);
  const int n = G.alphabet->rank();
  const int half = tab.len / 2;
  std::vector<int> cur = w.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (const auto &rot : tab.by_letter[cur[i] + n]) {
        int m = 0;
        while (m < tab.len && i + m < cur.size() && cur[i + m] == rot[m])
          ++m;
        if (m > half) {
          // rot = s t with s matched, s = t^-1
          std::vector<int> repl;
          for (int k = tab.len - 1; k >= m; --k)
            repl.push_back(-rot[k]);
          std::vector<int> next(cur.begin(), cur.begin() + i);
          next.insert(next.end(), repl.begin(), repl.end());
          next.insert(next.end(), cur.begin() + i + m, cur.end());
          reduce_in_place(next);
          cur.swap(next);
          changed = true;
          break;
        }
      }
    }
  }
  return Word(G.alphabet, cur);
}

bool is_identity_closed(const SurfaceGroup &G, const Word &w) {
  if (G.boundary_count != 0)
    throw ContractError("is_identity_closed needs a closed surface; use emptiness for free groups");
  if (G.genus == 1)
    return abelianize(G, w).isZero();
  return dehn_reduce(G, w).is_identity();
}

std::function<Word(const Word &)> push(const SurfaceGroup &G, const Word &gamma_word) {
  if (!same_alphabet(G.alphabet, gamma_word.alphabet()))
    throw AlphabetError("alphabet mismatch in push");
  Word g = gamma_word;
  return [g](const Word &x) { return conjugate(x, g); };
}

} // namespace torelli
