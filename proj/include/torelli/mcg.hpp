#pragma once

#include "torelli/surface.hpp"

namespace torelli {

struct HomologicalConditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Automorphism of the free group pi_1(Sigma_{g,1}) fixing the boundary word,
// with the inverse carried along as a witness.
class FreeAut {
public:
  FreeAut() = default;
  static FreeAut identity(const SurfaceGroup &G);
  // Checks the witness and boundary invariance.
  static FreeAut from_images(const SurfaceGroup &G, std::vector<Word> images,
                             std::vector<Word> inverse_images);

  const SurfaceGroup &group() const { return G_; }
  const std::vector<Word> &images() const { return img_; }
  const std::vector<Word> &inverse_images() const { return inv_; }

  Word apply(const Word &w) const;
  FreeAut inverse() const;
  FreeAut power(long n) const;
  bool is_identity() const;

  friend FreeAut compose(const FreeAut &f, const FreeAut &h); // f o h
  friend bool equal(const FreeAut &f, const FreeAut &h);
  // first generator (1-based) whose images differ, 0 if none
  friend int first_difference(const FreeAut &f, const FreeAut &h);

private:
  SurfaceGroup G_;
  std::vector<Word> img_, inv_;
};

FreeAut compose(const FreeAut &f, const FreeAut &h);
bool equal(const FreeAut &f, const FreeAut &h);
int first_difference(const FreeAut &f, const FreeAut &h);
inline FreeAut operator*(const FreeAut &f, const FreeAut &h) { return compose(f, h); }
FreeAut conjugate_by(const FreeAut &f, const FreeAut &t); // f t f^-1
FreeAut aut_commutator(const FreeAut &f, const FreeAut &h); // f^-1 h^-1 f h

// x -> w^-1 x w
FreeAut inner_automorphism(const SurfaceGroup &G, const Word &w);

// a_i, b_i, c_i from the twist table; d_h (handles 1..h) and e_h (handles h..g)
// are separating curves.
struct CurveLabel {
  char kind = 'a';
  int index = 1;

  static CurveLabel parse(std::string_view s);
  std::string str() const { return std::string(1, kind) + std::to_string(index); }
  bool operator==(const CurveLabel &o) const { return kind == o.kind && index == o.index; }
};

void check_label(const SurfaceGroup &G, const CurveLabel &c);
FreeAut twist(const SurfaceGroup &G, const CurveLabel &label, int sign);
FreeAut twist(const SurfaceGroup &G, std::string_view label, int sign = 1);
FreeAut boundary_twist(const SurfaceGroup &G);
HomologyClass label_class(const SurfaceGroup &G, const CurveLabel &c);

IntMat homology_action(const FreeAut &f);
IntMat symplectic_form(int genus);
bool is_symplectic(const IntMat &M);
bool is_torelli(const FreeAut &f);

// transport(base curve)
struct CurveSpec {
  CurveLabel base;
  FreeAut transport;

  static CurveSpec standard(const SurfaceGroup &G, const CurveLabel &base);
  CurveSpec transported(const FreeAut &f) const; // f(this)
};

HomologyClass curve_class(const CurveSpec &c);
FreeAut twist_about(const CurveSpec &c, int sign = 1);
FreeAut bp_map(const CurveSpec &c1, const CurveSpec &c2);
FreeAut sip_comm(const CurveSpec &c1, const CurveSpec &c2);
FreeAut sep_twist(const CurveSpec &c);

} // namespace torelli
