#include "torelli/mcg.hpp"

#include <charconv>

namespace torelli {

namespace {

void append_image(std::vector<int> &out, const std::vector<Word> &img, int x) {
  if (x > 0) {
    const auto &w = img[x - 1].letters();
    for (int y : w) {
      if (!out.empty() && out.back() == -y)
        out.pop_back();
      else
        out.push_back(y);
    }
  } else {
    const auto &w = img[-x - 1].letters();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      int y = -*it;
      if (!out.empty() && out.back() == -y)
        out.pop_back();
      else
        out.push_back(y);
    }
  }
}

Word apply_images(const SurfaceGroup &G, const std::vector<Word> &img, const Word &w) {
  std::vector<int> out;
  for (int x : w.letters())
    append_image(out, img, x);
  return Word(G.alphabet, out);
}

void check_same_group(const FreeAut &f, const FreeAut &h) {
  if (f.group() != h.group())
    throw AlphabetError("automorphisms over different groups");
}

} // namespace

FreeAut FreeAut::identity(const SurfaceGroup &G) {
  if (G.boundary_count != 1)
    throw ContractError("FreeAut models bordered surfaces only");
  FreeAut f;
  f.G_ = G;
  for (int k = 1; k <= G.alphabet->rank(); ++k)
    f.img_.push_back(Word::generator(G.alphabet, k));
  f.inv_ = f.img_;
  return f;
}

FreeAut FreeAut::from_images(const SurfaceGroup &G, std::vector<Word> images,
                             std::vector<Word> inverse_images) {
  if (G.boundary_count != 1)
    throw ContractError("FreeAut models bordered surfaces only");
  const int n = G.alphabet->rank();
  if (static_cast<int>(images.size()) != n || static_cast<int>(inverse_images.size()) != n)
    throw ContractError("automorphism needs one image per generator");
  FreeAut f;
  f.G_ = G;
  f.img_ = std::move(images);
  f.inv_ = std::move(inverse_images);
  for (int k = 1; k <= n; ++k) {
    Word gk = Word::generator(G.alphabet, k);
    if (apply_images(G, f.img_, f.inv_[k - 1]) != gk || apply_images(G, f.inv_, f.img_[k - 1]) != gk)
      throw ContractError("inverse witness does not invert generator " + G.alphabet->name(k));
  }
  Word bd = boundary_word(G);
  if (f.apply(bd) != bd)
    throw ContractError("automorphism does not fix the boundary word");
  return f;
}

Word FreeAut::apply(const Word &w) const {
  if (!same_alphabet(G_.alphabet, w.alphabet()))
    throw AlphabetError("alphabet mismatch in apply");
  return apply_images(G_, img_, w);
}

FreeAut FreeAut::inverse() const {
  FreeAut r;
  r.G_ = G_;
  r.img_ = inv_;
  r.inv_ = img_;
  return r;
}

FreeAut FreeAut::power(long n) const {
  FreeAut r = identity(G_);
  FreeAut base = n < 0 ? inverse() : *this;
  for (long i = 0; i < (n < 0 ? -n : n); ++i)
    r = compose(r, base);
  return r;
}

bool FreeAut::is_identity() const {
  for (std::size_t k = 0; k < img_.size(); ++k)
    if (img_[k].size() != 1 || img_[k].letters()[0] != static_cast<int>(k) + 1)
      return false;
  return true;
}

FreeAut compose(const FreeAut &f, const FreeAut &h) {
  check_same_group(f, h);
  FreeAut r;
  r.G_ = f.G_;
  r.img_.reserve(f.img_.size());
  r.inv_.reserve(f.img_.size());
  for (std::size_t k = 0; k < f.img_.size(); ++k) {
    r.img_.push_back(apply_images(f.G_, f.img_, h.img_[k]));
    r.inv_.push_back(apply_images(f.G_, h.inv_, f.inv_[k]));
  }
  Word bd = boundary_word(r.G_);
  if (r.apply(bd) != bd)
    throw ContractError("composition does not fix the boundary word");
  return r;
}

bool equal(const FreeAut &f, const FreeAut &h) { return first_difference(f, h) == 0; }

int first_difference(const FreeAut &f, const FreeAut &h) {
  check_same_group(f, h);
  for (std::size_t k = 0; k < f.img_.size(); ++k)
    if (f.img_[k].letters() != h.img_[k].letters())
      return static_cast<int>(k) + 1;
  return 0;
}

FreeAut conjugate_by(const FreeAut &f, const FreeAut &t) { return f * t * f.inverse(); }

FreeAut aut_commutator(const FreeAut &f, const FreeAut &h) {
  return f.inverse() * h.inverse() * f * h;
}

FreeAut inner_automorphism(const SurfaceGroup &G, const Word &w) {
  std::vector<Word> img, inv;
  for (int k = 1; k <= G.alphabet->rank(); ++k) {
    Word x = Word::generator(G.alphabet, k);
    img.push_back(conjugate(x, w));
    inv.push_back(conjugate(x, w.inverse()));
  }
  return FreeAut::from_images(G, std::move(img), std::move(inv));
}

CurveLabel CurveLabel::parse(std::string_view s) {
  if (s.size() < 2 || std::string_view("abcde").find(s[0]) == std::string_view::npos)
    throw std::invalid_argument("bad curve label '" + std::string(s) + "'");
  CurveLabel c;
  c.kind = s[0];
  auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), c.index);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad curve label '" + std::string(s) + "'");
  return c;
}

void check_label(const SurfaceGroup &G, const CurveLabel &c) {
  int hi = G.genus;
  if (c.kind == 'c')
    hi = G.genus - 1;
  if (c.index < 1 || c.index > hi)
    throw std::out_of_range("curve label " + c.str() + " out of range for genus " +
                            std::to_string(G.genus));
}

namespace {

std::vector<Word> twist_images(const SurfaceGroup &G, const CurveLabel &c, int s) {
  std::vector<Word> im;
  for (int k = 1; k <= G.alphabet->rank(); ++k)
    im.push_back(Word::generator(G.alphabet, k));
  const int i = c.index;
  auto A = [&](int j) { return G.alpha(j); };
  auto B = [&](int j) { return G.beta(j); };
  switch (c.kind) {
  case 'a':
    im[2 * i - 1] = A(i).power(s) * B(i);
    break;
  case 'b':
    im[2 * i - 2] = B(i).power(-s) * A(i);
    break;
  case 'c': {
    Word g = gamma(G, i).power(s);
    im[2 * i - 2] = g * A(i);
    im[2 * i - 1] = g * B(i) * g.inverse();
    im[2 * i] = A(i + 1) * g.inverse();
    break;
  }
  case 'd':
  case 'e': {
    int lo = c.kind == 'd' ? 1 : i, hi = c.kind == 'd' ? i : G.genus;
    Word Q = G.identity();
    for (int j = lo; j <= hi; ++j)
      Q = Q * handle_commutator(G, j);
    Q = Q.power(s);
    for (int j = lo; j <= hi; ++j) {
      im[2 * j - 2] = conjugate(A(j), Q);
      im[2 * j - 1] = conjugate(B(j), Q);
    }
    break;
  }
  default:
    throw std::invalid_argument("unknown curve kind");
  }
  return im;
}

} // namespace

FreeAut twist(const SurfaceGroup &G, const CurveLabel &label, int sign) {
  check_label(G, label);
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("twist sign must be +1 or -1");
  return FreeAut::from_images(G, twist_images(G, label, sign), twist_images(G, label, -sign));
}

FreeAut twist(const SurfaceGroup &G, std::string_view label, int sign) {
  return twist(G, CurveLabel::parse(label), sign);
}

FreeAut boundary_twist(const SurfaceGroup &G) { return inner_automorphism(G, boundary_word(G)); }

HomologyClass label_class(const SurfaceGroup &G, const CurveLabel &c) {
  check_label(G, c);
  HomologyClass v = HomologyClass::Zero(2 * G.genus);
  switch (c.kind) {
  case 'a':
    v(2 * c.index - 2) = 1;
    break;
  case 'b':
    v(2 * c.index - 1) = 1;
    break;
  case 'c':
    v = abelianize(G, gamma(G, c.index));
    break;
  default:
    break;
  }
  return v;
}

IntMat homology_action(const FreeAut &f) {
  const SurfaceGroup &G = f.group();
  const int n = 2 * G.genus;
  IntMat M(n, n);
  for (int j = 0; j < n; ++j)
    M.col(j) = abelianize(G, f.images()[j]);
  return M;
}

IntMat symplectic_form(int genus) {
  IntMat J = IntMat::Zero(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    J(2 * i, 2 * i + 1) = 1;
    J(2 * i + 1, 2 * i) = -1;
  }
  return J;
}

bool is_symplectic(const IntMat &M) {
  IntMat J = symplectic_form(static_cast<int>(M.rows() / 2));
  return M.transpose() * J * M == J;
}

bool is_torelli(const FreeAut &f) {
  IntMat M = homology_action(f);
  return M == IntMat::Identity(M.rows(), M.cols());
}

CurveSpec CurveSpec::standard(const SurfaceGroup &G, const CurveLabel &base) {
  check_label(G, base);
  return CurveSpec{base, FreeAut::identity(G)};
}

CurveSpec CurveSpec::transported(const FreeAut &f) const { return CurveSpec{base, f * transport}; }

HomologyClass curve_class(const CurveSpec &c) {
  return homology_action(c.transport) * label_class(c.transport.group(), c.base);
}

FreeAut twist_about(const CurveSpec &c, int sign) {
  FreeAut t = twist(c.transport.group(), c.base, sign);
  if (c.transport.is_identity())
    return t;
  return conjugate_by(c.transport, t);
}

FreeAut bp_map(const CurveSpec &c1, const CurveSpec &c2) {
  HomologyClass u = curve_class(c1), v = curve_class(c2);
  if (u != v && u != -v)
    throw HomologicalConditionError("bounding pair: classes differ (" + c1.base.str() + ", " +
                                    c2.base.str() + ")");
  FreeAut f = twist_about(c1, 1) * twist_about(c2, -1);
  if (!is_torelli(f))
    throw HomologicalConditionError("bounding pair map not in Torelli");
  return f;
}

FreeAut sip_comm(const CurveSpec &c1, const CurveSpec &c2) {
  if (alg_int(curve_class(c1), curve_class(c2)) != 0)
    throw HomologicalConditionError("simply intersecting pair: algebraic intersection nonzero");
  FreeAut f = aut_commutator(twist_about(c1, 1), twist_about(c2, 1));
  if (!is_torelli(f))
    throw HomologicalConditionError("simply intersecting pair commutator not in Torelli");
  return f;
}

FreeAut sep_twist(const CurveSpec &c) {
  if (!curve_class(c).isZero())
    throw HomologicalConditionError("separating twist: curve " + c.base.str() +
                                    " is not null-homologous");
  return twist_about(c, 1);
}

} // namespace torelli
