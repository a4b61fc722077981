#pragma once

#include "torelli/simplicial.hpp"
#include "torelli/surface.hpp"

#include <array>
#include <optional>

namespace torelli {

using SympVec = IntVec; // basis a1 b1 ... ag bg

SympVec parse_symp_vec(std::string_view text); // "3,5,1,0"
std::string format_symp_vec(const SympVec &v);
SympVec basis_vector(int genus, std::string_view label); // "a1", "b2"

// Primitive, first nonzero coordinate positive.
class Line {
public:
  Line() = default;
  static Line from(const SympVec &v); // throws unless primitive
  const SympVec &rep() const { return rep_; }
  int genus() const { return static_cast<int>(rep_.size() / 2); }
  bool operator==(const Line &o) const { return rep_ == o.rep_; }
  bool operator<(const Line &o) const;
  std::string str() const { return "<" + format_symp_vec(rep_) + ">"; }

private:
  SympVec rep_;
};

bool is_primitive(const SympVec &v);
bool is_isotropic_summand(const std::vector<SympVec> &vectors);

struct LinesSubcomplexSpec {
  int g = 1;
  std::vector<Line> delta_prefix;
  bool restrict_to_W = false; // W: coordinate b_g vanishes
  bool allow_sigma = true;
  bool allow_delta = true;
};

enum class SimplexType { Standard, Sigma, Delta, NonSimplex };

struct SimplexClass {
  SimplexType type = SimplexType::NonSimplex;
  int delta_variant = 0; // 1 or 2 for Delta, by how many related vertices sit in the prefix
  bool operator==(const SimplexClass &) const = default;
};

std::string to_string(SimplexType t);

// Plain definitions in Lines(g), no prefix or flags.
bool is_standard_set(const std::vector<SympVec> &v);
bool is_sigma_set(const std::vector<SympVec> &v);
// index triple (i,j,k) with v_k = +-v_i +-v_j and the rest standard without k
std::optional<std::array<int, 3>> delta_triple(const std::vector<SympVec> &v);

SimplexClass classify_simplex(const std::vector<Line> &lines, const LinesSubcomplexSpec &spec);
bool is_admitted(const SimplexClass &c, const LinesSubcomplexSpec &spec);

Int rho_rank(const Line &L, std::string_view rho);

// (a'1, b'1, ..., a'g, b'g) with the input as the leading a'-vectors.
std::vector<SympVec> complete_symplectic_basis(const std::vector<SympVec> &partial, int genus);
IntMat gram_matrix(const std::vector<SympVec> &basis);

struct TruncatedLines {
  std::vector<Line> vertices; // vertex id = index
  SimplicialComplex complex;
};

TruncatedLines enumerate_truncated(const LinesSubcomplexSpec &spec, Int H,
                                   std::size_t vertex_cap = 20000, int max_simplex_size = -1);

struct NoPathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Line base_vertex(const LinesSubcomplexSpec &spec);
std::vector<Line> path_to_base(const Line &L, const LinesSubcomplexSpec &spec);
// documented bound: g * (2 log_phi(H+1) + 4) + 2, H = max |coord|
std::size_t path_length_bound(const Line &L);
bool validate_path(const std::vector<Line> &path, const LinesSubcomplexSpec &spec);

} // namespace torelli
