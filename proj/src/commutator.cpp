#include "torelli/commutator.hpp"

#include <map>

namespace torelli {

bool verify_witt_hall(const Word &g1, const Word &g2, const Word &g3) {
  Word lhs = commutator(g1 * g2, g3);
  Word rhs = conjugate(commutator(g1, g3), g2) * commutator(g2, g3);
  return lhs == rhs;
}

bool verify_commutator_shuffle(const Word &g1, const Word &g2, const Word &g3) {
  Word lhs = conjugate(commutator(g1, g2), g3);
  Word rhs = commutator(g3, g1) * conjugate(commutator(g3, g2), g1) * commutator(g1, g2) *
             conjugate(commutator(g1, g3), g2) * commutator(g2, g3);
  return lhs == rhs;
}

bool verify_aux_identities(const Word &g1, const Word &g2) {
  Word i1 = g1.inverse(), i2 = g2.inverse();
  bool a = commutator(i1, g2) == conjugate(commutator(g2, g1), i1);
  bool b = commutator(i1, g2) == commutator(g1 * g2 * i1, g1);
  bool c = commutator(i2 * i1, i2) == commutator(i1, i2);
  return a && b && c;
}

bool TomaszewskiBasisElement::valid() const {
  if (!(x < y))
    return false;
  int prev = 0;
  for (std::size_t k = 0; k < tail.size(); ++k) {
    auto [z, d] = tail[k];
    if (d == 0)
      return false;
    if (k == 0 ? z < x : z <= prev)
      return false;
    prev = z;
  }
  return true;
}

Word TomaszewskiBasisElement::expand(const AlphabetPtr &alpha) const {
  Word c = commutator(Word::generator(alpha, x), Word::generator(alpha, y));
  Word m(alpha);
  for (auto [z, d] : tail)
    m = m * Word::generator(alpha, z).power(d);
  return conjugate(c, m);
}

std::string TomaszewskiBasisElement::str(const Alphabet &alpha) const {
  std::string s = "[" + alpha.name(x) + "," + alpha.name(y) + "]";
  if (tail.empty())
    return s;
  s += "^(";
  for (std::size_t k = 0; k < tail.size(); ++k) {
    if (k)
      s += ' ';
    s += alpha.name(tail[k].first);
    if (tail[k].second != 1)
      s += "^" + std::to_string(tail[k].second);
  }
  return s + ")";
}

namespace {

// Schreier generator for letter x_j at suffix exponent vector t, written in the
// basis: [x_j, x_1^t1 ... x_{j-1}^t_{j-1}] conjugated by x_j^tj ... x_n^tn.
std::vector<BasisFactor> schreier_terms(int j, const std::vector<long> &t, int n) {
  std::vector<BasisFactor> out;
  // [x_j, x_i^d y] = [x_j, y] [x_j, x_i^d]^y, unwound from the innermost i
  for (int i = j - 1; i >= 1; --i) {
    long d = t[i];
    if (d == 0)
      continue;
    std::vector<BasisFactor> terms;
    if (d > 0) {
      // [x_j, x_i^d] = prod_{k<d} ([x_i,x_j]^{x_i^k})^-1
      for (long k = 0; k < d; ++k) {
        BasisFactor f;
        f.elem.x = i;
        f.elem.y = j;
        if (k)
          f.elem.tail.push_back({i, k});
        f.exponent = -1;
        terms.push_back(f);
      }
    } else {
      // [x_j, x_i^-d] = prod_{k=1..d} [x_i,x_j]^{x_i^-k}
      for (long k = 1; k <= -d; ++k) {
        BasisFactor f;
        f.elem.x = i;
        f.elem.y = j;
        f.elem.tail.push_back({i, -k});
        f.exponent = 1;
        terms.push_back(f);
      }
    }
    for (auto &f : terms) {
      for (int l = i + 1; l <= n; ++l)
        if (t[l] != 0)
          f.elem.tail.push_back({l, t[l]});
      out.push_back(std::move(f));
    }
  }
  return out;
}

} // namespace

void reduce_basis_word(BasisWord &bw) {
  BasisWord out;
  for (auto &f : bw) {
    if (!out.empty() && out.back().elem == f.elem && out.back().exponent == -f.exponent)
      out.pop_back();
    else
      out.push_back(std::move(f));
  }
  bw.swap(out);
}

BasisWord tomaszewski_rewrite(const AlphabetPtr &alpha, const Word &w) {
  if (!same_alphabet(alpha, w.alphabet()))
    throw AlphabetError("alphabet mismatch in tomaszewski_rewrite");
  const int n = alpha->rank();
  std::vector<long> ab(n + 1, 0);
  for (int x : w.letters())
    ab[std::abs(x)] += x > 0 ? 1 : -1;
  for (int k = 1; k <= n; ++k)
    if (ab[k] != 0)
      throw NotInCommutatorSubgroup("word has nonzero exponent sum in " + alpha->name(k));

  // right to left, t = exponents of the suffix read so far
  std::vector<long> t(n + 1, 0);
  std::vector<BasisWord> pieces;
  const auto &L = w.letters();
  for (auto it = L.rbegin(); it != L.rend(); ++it) {
    int g = std::abs(*it);
    if (*it > 0) {
      pieces.push_back(schreier_terms(g, t, n));
      t[g] += 1;
    } else {
      t[g] -= 1;
      BasisWord terms = schreier_terms(g, t, n);
      BasisWord invt;
      for (auto r = terms.rbegin(); r != terms.rend(); ++r)
        invt.push_back({r->elem, -r->exponent});
      pieces.push_back(std::move(invt));
    }
  }
  BasisWord bw;
  for (auto p = pieces.rbegin(); p != pieces.rend(); ++p)
    bw.insert(bw.end(), p->begin(), p->end());
  reduce_basis_word(bw);
  return bw;
}

BasisWord tomaszewski_rewrite(const SurfaceGroup &G, const Word &w) {
  if (G.boundary_count != 1)
    throw ContractError("tomaszewski_rewrite needs the free (bordered) surface group");
  return tomaszewski_rewrite(G.alphabet, w);
}

Word expand(const AlphabetPtr &alpha, const BasisWord &bw) {
  Word w(alpha);
  for (const auto &f : bw) {
    Word e = f.elem.expand(alpha);
    w = w * (f.exponent > 0 ? e : e.inverse());
  }
  return w;
}

BasisWord inverse(const BasisWord &bw) {
  BasisWord r;
  for (auto it = bw.rbegin(); it != bw.rend(); ++it)
    r.push_back({it->elem, -it->exponent});
  return r;
}

Word random_word(const AlphabetPtr &alpha, std::mt19937_64 &rng, int max_len) {
  const int n = alpha->rank();
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n), sgn(0, 1);
  int L = len(rng);
  std::vector<int> seq;
  while (static_cast<int>(seq.size()) < L) {
    int x = gen(rng) * (sgn(rng) ? 1 : -1);
    if (!seq.empty() && seq.back() == -x)
      continue;
    seq.push_back(x);
  }
  return Word(alpha, seq);
}

Word random_commutator_word(const AlphabetPtr &alpha, std::mt19937_64 &rng, int max_len) {
  std::uniform_int_distribution<int> nfac(1, 4), conj(0, 6);
  for (;;) {
    Word w(alpha);
    int k = nfac(rng);
    for (int i = 0; i < k; ++i) {
      Word a = random_word(alpha, rng, 5);
      Word b = random_word(alpha, rng, 5);
      Word c = random_word(alpha, rng, conj(rng));
      w = w * conjugate(commutator(a, b), c);
    }
    // empty words are legal but make poor samples
    if (!w.is_identity() && static_cast<int>(w.size()) <= max_len)
      return w;
  }
}

} // namespace torelli
