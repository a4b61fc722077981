#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torelli {

struct AlphabetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite ordered generator set. Letter k > 0 is generator k, -k its inverse.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string &name(int k) const { return names_.at(k - 1); }
  int index(std::string_view name) const; // 0 when absent
  bool operator==(const Alphabet &o) const { return names_ == o.names_; }

  // a1 b1 a2 b2 ... ag bg, shared per genus
  static std::shared_ptr<const Alphabet> surface(int genus);

private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr &a, const AlphabetPtr &b);

// Always freely reduced.
class Word {
public:
  Word() = default;
  explicit Word(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  Word(AlphabetPtr alpha, const std::vector<int> &letters);

  static Word generator(AlphabetPtr alpha, int k); // k may be negative
  static Word parse(AlphabetPtr alpha, std::string_view text);

  const AlphabetPtr &alphabet() const { return alpha_; }
  const std::vector<int> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word inverse() const;
  Word power(long n) const;
  std::string str() const;

  friend Word operator*(const Word &u, const Word &v);
  bool operator==(const Word &o) const;
  bool operator!=(const Word &o) const { return !(*this == o); }
  bool operator<(const Word &o) const { return letters_ < o.letters_; }

private:
  AlphabetPtr alpha_;
  std::vector<int> letters_;
};

// Stack reduction; exposed for hot loops that build raw letter sequences.
void reduce_in_place(std::vector<int> &seq);
Word reduce(const AlphabetPtr &alpha, const std::vector<int> &seq);

Word multiply(const Word &u, const Word &v);
Word invert(const Word &w);
Word commutator(const Word &g1, const Word &g2); // g1^-1 g2^-1 g1 g2
Word conjugate(const Word &g, const Word &h);    // h^-1 g h
bool is_completely_distinct(const Word &x, const Word &y);

} // namespace torelli
