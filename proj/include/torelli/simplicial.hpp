#pragma once

#include "torelli/lattice.hpp"

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace torelli {

using Vertex = long;
using Simplex = std::vector<Vertex>; // sorted, duplicate free

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stored through its maximal simplices; faces are implicit.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  // Any family of simplices; closure and maximality are computed.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
  // Family already closed under faces (as produced by enumerators): cheaper.
  static SimplicialComplex from_closed_family(const std::vector<Simplex> &simplices);

  const std::set<Vertex> &vertices() const { return vertices_; }
  const std::vector<Simplex> &maximal_simplices() const { return maximal_; }
  int dimension() const;
  bool empty() const { return vertices_.empty(); }
  bool contains(Simplex s) const;
  // all simplices of one dimension, sorted
  std::vector<Simplex> faces(int dim) const;
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  bool operator==(const SimplicialComplex &o) const;

  // one maximal simplex per line
  static SimplicialComplex read(std::istream &in);
  void write(std::ostream &out) const;

private:
  std::set<Vertex> vertices_;
  std::vector<Simplex> maximal_;
};

Simplex make_simplex(std::vector<Vertex> v);
SimplicialComplex simplex_complex(const Simplex &s); // the full simplex

SimplicialComplex star(const SimplicialComplex &X, const Simplex &delta);
SimplicialComplex link(const SimplicialComplex &X, const Simplex &delta);
SimplicialComplex join(const SimplicialComplex &X, const SimplicialComplex &Y);
SimplicialComplex cross_complex(int n);

struct HomologyGroup {
  long betti = 0;
  std::vector<Int> torsion;
  bool operator==(const HomologyGroup &) const = default;
};

struct HomologyOptions {
  int max_dim = -1;           // -1: up to the dimension of X
  long max_matrix_cells = 40'000'000;
};

std::vector<HomologyGroup> homology(const SimplicialComplex &X, HomologyOptions opt = {});
std::string format_homology(const std::vector<HomologyGroup> &H);

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex &X);

struct UnsupportedDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};
bool is_combinatorial_manifold(const SimplicialComplex &X, int n);

} // namespace torelli
