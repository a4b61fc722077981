#include "torelli/word.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace torelli {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw AlphabetError("duplicate generator name " + names_[i]);
}

int Alphabet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return static_cast<int>(i) + 1;
  return 0;
}

AlphabetPtr Alphabet::surface(int genus) {
  static std::mutex mu;
  static std::map<int, AlphabetPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(genus);
  if (it != cache.end())
    return it->second;
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  auto p = std::make_shared<const Alphabet>(std::move(names));
  cache[genus] = p;
  return p;
}

bool same_alphabet(const AlphabetPtr &a, const AlphabetPtr &b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

void reduce_in_place(std::vector<int> &seq) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int x = seq[i];
    if (top > 0 && seq[top - 1] == -x)
      --top;
    else
      seq[top++] = x;
  }
  seq.resize(top);
}

Word reduce(const AlphabetPtr &alpha, const std::vector<int> &seq) {
  return Word(alpha, seq);
}

Word::Word(AlphabetPtr alpha, const std::vector<int> &letters)
    : alpha_(std::move(alpha)), letters_(letters) {
  if (!alpha_)
    throw AlphabetError("word without alphabet");
  int n = alpha_->rank();
  for (int x : letters_)
    if (x == 0 || x > n || x < -n)
      throw AlphabetError("letter " + std::to_string(x) + " outside alphabet of rank " +
                          std::to_string(n));
  reduce_in_place(letters_);
}

Word Word::generator(AlphabetPtr alpha, int k) { return Word(std::move(alpha), {k}); }

Word Word::parse(AlphabetPtr alpha, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<int> seq;
  while (in >> tok) {
    if (tok == "1")
      continue;
    long e = 1;
    std::string sym = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      sym = tok.substr(0, caret);
      std::string ex = tok.substr(caret + 1);
      if (!ex.empty() && ex.front() == '(' && ex.back() == ')')
        ex = ex.substr(1, ex.size() - 2);
      try {
        std::size_t used = 0;
        e = std::stol(ex, &used);
        if (used != ex.size())
          throw std::invalid_argument(ex);
      } catch (const std::exception &) {
        throw AlphabetError("bad exponent in token '" + tok + "'");
      }
    }
    int k = alpha->index(sym);
    if (k == 0)
      throw AlphabetError("unknown symbol '" + sym + "'");
    for (long i = 0; i < (e < 0 ? -e : e); ++i)
      seq.push_back(e < 0 ? -k : k);
  }
  return Word(std::move(alpha), seq);
}

Word Word::inverse() const {
  Word r(alpha_);
  r.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int &x : r.letters_)
    x = -x;
  return r;
}

Word Word::power(long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word r(alpha_);
  for (long i = 0; i < (n < 0 ? -n : n); ++i)
    r = r * base;
  return r;
}

std::string Word::str() const {
  if (letters_.empty())
    return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i])
      ++j;
    long e = static_cast<long>(j - i) * (letters_[i] > 0 ? 1 : -1);
    if (!out.empty())
      out += ' ';
    out += alpha_->name(letters_[i] > 0 ? letters_[i] : -letters_[i]);
    if (e != 1)
      out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Word operator*(const Word &u, const Word &v) {
  if (!same_alphabet(u.alpha_, v.alpha_))
    throw AlphabetError("alphabet mismatch in multiply");
  Word r(u.alpha_);
  r.letters_.reserve(u.letters_.size() + v.letters_.size());
  r.letters_ = u.letters_;
  for (int x : v.letters_) {
    if (!r.letters_.empty() && r.letters_.back() == -x)
      r.letters_.pop_back();
    else
      r.letters_.push_back(x);
  }
  return r;
}

bool Word::operator==(const Word &o) const {
  if (!same_alphabet(alpha_, o.alpha_))
    throw AlphabetError("alphabet mismatch in comparison");
  return letters_ == o.letters_;
}

Word multiply(const Word &u, const Word &v) { return u * v; }
Word invert(const Word &w) { return w.inverse(); }

Word commutator(const Word &g1, const Word &g2) {
  return g1.inverse() * g2.inverse() * g1 * g2;
}

Word conjugate(const Word &g, const Word &h) { return h.inverse() * g * h; }

bool is_completely_distinct(const Word &x, const Word &y) {
  return x != y && x != y.inverse();
}

} // namespace torelli
