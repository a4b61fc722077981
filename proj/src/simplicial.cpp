#include "torelli/simplicial.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace torelli {

Simplex make_simplex(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

namespace {

void subsets_of_size(const Simplex &s, std::size_t k, std::set<Simplex> &out) {
  if (k > s.size())
    return;
  std::vector<bool> pick(s.size(), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Simplex f;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (pick[i])
        f.push_back(s[i]);
    out.insert(std::move(f));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

} // namespace

SimplicialComplex SimplicialComplex::from_closed_family(const std::vector<Simplex> &simplices) {
  SimplicialComplex X;
  std::set<Simplex> non_maximal;
  for (const auto &s : simplices) {
    if (s.empty())
      continue;
    for (Vertex v : s)
      X.vertices_.insert(v);
    for (std::size_t i = 0; i < s.size() && s.size() > 1; ++i) {
      Simplex f = s;
      f.erase(f.begin() + i);
      non_maximal.insert(std::move(f));
    }
  }
  std::set<Simplex> seen;
  for (const auto &s : simplices)
    if (!s.empty() && !non_maximal.count(s) && seen.insert(s).second)
      X.maximal_.push_back(s);
  std::sort(X.maximal_.begin(), X.maximal_.end());
  return X;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::vector<Simplex> cleaned;
  for (auto &s : simplices) {
    s = make_simplex(std::move(s));
    if (!s.empty())
      cleaned.push_back(s);
  }
  // keep only simplices not strictly contained in another
  std::sort(cleaned.begin(), cleaned.end(),
            [](const Simplex &a, const Simplex &b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
  SimplicialComplex X;
  for (const auto &s : cleaned) {
    bool inside = false;
    for (const auto &m : X.maximal_)
      if (m.size() > s.size() && std::includes(m.begin(), m.end(), s.begin(), s.end())) {
        inside = true;
        break;
      }
    if (!inside)
      X.maximal_.push_back(s);
    for (Vertex v : s)
      X.vertices_.insert(v);
  }
  std::sort(X.maximal_.begin(), X.maximal_.end());
  return X;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto &m : maximal_)
    d = std::max(d, static_cast<int>(m.size()) - 1);
  return d;
}

bool SimplicialComplex::contains(Simplex s) const {
  s = make_simplex(std::move(s));
  if (s.empty())
    return true;
  for (const auto &m : maximal_)
    if (std::includes(m.begin(), m.end(), s.begin(), s.end()))
      return true;
  return false;
}

std::vector<Simplex> SimplicialComplex::faces(int dim) const {
  std::set<Simplex> out;
  if (dim < 0)
    return {};
  for (const auto &m : maximal_)
    subsets_of_size(m, static_cast<std::size_t>(dim) + 1, out);
  return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int d = 0; d <= dimension(); ++d)
    f.push_back(faces(d).size());
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  auto f = f_vector();
  for (std::size_t d = 0; d < f.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(f[d]);
  return chi;
}

bool SimplicialComplex::operator==(const SimplicialComplex &o) const {
  return vertices_ == o.vertices_ && maximal_ == o.maximal_;
}

SimplicialComplex SimplicialComplex::read(std::istream &in) {
  std::vector<Simplex> s;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    Simplex cur;
    Vertex v;
    while (ls >> v)
      cur.push_back(v);
    if (!ls.eof())
      throw std::runtime_error("bad vertex id in complex file: " + line);
    if (!cur.empty())
      s.push_back(std::move(cur));
  }
  return from_simplices(std::move(s));
}

void SimplicialComplex::write(std::ostream &out) const {
  for (const auto &m : maximal_) {
    for (std::size_t i = 0; i < m.size(); ++i)
      out << (i ? " " : "") << m[i];
    out << '\n';
  }
}

SimplicialComplex simplex_complex(const Simplex &s) {
  return SimplicialComplex::from_simplices({s});
}

SimplicialComplex star(const SimplicialComplex &X, const Simplex &delta) {
  Simplex d = make_simplex(delta);
  if (d.empty())
    return X;
  if (!X.contains(d))
    throw std::invalid_argument("star: not a simplex of the complex");
  std::vector<Simplex> keep;
  for (const auto &m : X.maximal_simplices())
    if (std::includes(m.begin(), m.end(), d.begin(), d.end()))
      keep.push_back(m);
  return SimplicialComplex::from_simplices(std::move(keep));
}

SimplicialComplex link(const SimplicialComplex &X, const Simplex &delta) {
  Simplex d = make_simplex(delta);
  if (d.empty())
    return X;
  if (!X.contains(d))
    throw std::invalid_argument("link: not a simplex of the complex");
  std::vector<Simplex> keep;
  for (const auto &m : X.maximal_simplices())
    if (std::includes(m.begin(), m.end(), d.begin(), d.end())) {
      Simplex r;
      std::set_difference(m.begin(), m.end(), d.begin(), d.end(), std::back_inserter(r));
      if (!r.empty())
        keep.push_back(std::move(r));
    }
  return SimplicialComplex::from_simplices(std::move(keep));
}

SimplicialComplex join(const SimplicialComplex &X, const SimplicialComplex &Y) {
  if (X.empty())
    return Y;
  if (Y.empty())
    return X;
  for (Vertex v : X.vertices())
    if (Y.vertices().count(v))
      throw std::invalid_argument("join: vertex sets overlap");
  std::vector<Simplex> out;
  for (const auto &a : X.maximal_simplices())
    for (const auto &b : Y.maximal_simplices()) {
      Simplex s = a;
      s.insert(s.end(), b.begin(), b.end());
      out.push_back(make_simplex(std::move(s)));
    }
  return SimplicialComplex::from_closed_family(out);
}

SimplicialComplex cross_complex(int n) {
  if (n < 1)
    throw std::invalid_argument("cross complex needs n >= 1");
  SimplicialComplex C = simplex_complex({2 * n - 2, 2 * n - 1});
  for (int i = 0; i < n - 1; ++i) {
    SimplicialComplex s0 = SimplicialComplex::from_simplices({{2 * i}, {2 * i + 1}});
    C = join(s0, C);
  }
  return C;
}

std::vector<HomologyGroup> homology(const SimplicialComplex &X, HomologyOptions opt) {
  const int dim = X.dimension();
  const int top = opt.max_dim < 0 ? dim : std::min(dim, opt.max_dim);
  std::vector<HomologyGroup> H;
  if (dim < 0)
    return H;
  std::vector<std::vector<Simplex>> C(top + 2);
  for (int k = 0; k <= std::min(top + 1, dim); ++k)
    C[k] = X.faces(k);
  // rank and torsion of d_k : C_k -> C_{k-1}, k >= 1
  std::vector<long> rank(top + 3, 0);
  std::vector<std::vector<Int>> tors(top + 3);
  for (int k = 1; k <= top + 1; ++k) {
    if (C[k].empty() || C[k - 1].empty())
      continue;
    const long rows = static_cast<long>(C[k - 1].size()), cols = static_cast<long>(C[k].size());
    if (rows * cols > opt.max_matrix_cells)
      throw ResourceLimitError("boundary matrix " + std::to_string(rows) + "x" +
                               std::to_string(cols) + " exceeds the configured cap");
    std::map<Simplex, Eigen::Index> idx;
    for (std::size_t i = 0; i < C[k - 1].size(); ++i)
      idx[C[k - 1][i]] = static_cast<Eigen::Index>(i);
    IntMat D = IntMat::Zero(rows, cols);
    for (std::size_t j = 0; j < C[k].size(); ++j) {
      const Simplex &s = C[k][j];
      for (std::size_t p = 0; p < s.size(); ++p) {
        Simplex f = s;
        f.erase(f.begin() + p);
        D(idx.at(f), static_cast<Eigen::Index>(j)) = (p % 2 == 0) ? 1 : -1;
      }
    }
    auto inv = invariant_factors(D);
    rank[k] = static_cast<long>(inv.size());
    for (Int d : inv)
      if (d > 1)
        tors[k].push_back(d);
  }
  for (int k = 0; k <= top; ++k) {
    HomologyGroup h;
    h.betti = static_cast<long>(C[k].size()) - rank[k] - rank[k + 1];
    h.torsion = tors[k + 1];
    H.push_back(h);
  }
  return H;
}

std::string format_homology(const std::vector<HomologyGroup> &H) {
  std::ostringstream out;
  for (std::size_t k = 0; k < H.size(); ++k) {
    out << "H_" << k << " = ";
    bool any = false;
    if (H[k].betti > 0) {
      out << "Z";
      if (H[k].betti > 1)
        out << "^" << H[k].betti;
      any = true;
    }
    for (Int t : H[k].torsion) {
      out << (any ? " + " : "") << "Z/" << t;
      any = true;
    }
    if (!any)
      out << "0";
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex &X) {
  std::map<Vertex, Vertex> parent;
  for (Vertex v : X.vertices())
    parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto &m : X.maximal_simplices())
    for (std::size_t i = 1; i < m.size(); ++i) {
      Vertex a = find(m[0]), b = find(m[i]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<Vertex, std::vector<Vertex>> groups;
  for (Vertex v : X.vertices())
    groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto &[r, vs] : groups)
    out.push_back(std::move(vs));
  return out;
}

namespace {

bool pure_of_dim(const SimplicialComplex &X, int d) {
  for (const auto &m : X.maximal_simplices())
    if (static_cast<int>(m.size()) != d + 1)
      return false;
  return true;
}

std::map<Vertex, int> degrees(const SimplicialComplex &X) {
  std::map<Vertex, int> deg;
  for (Vertex v : X.vertices())
    deg[v] = 0;
  for (const auto &m : X.maximal_simplices())
    for (Vertex v : m)
      ++deg[v];
  return deg;
}

// dimension 0 or 1 only
bool is_sphere_or_ball(const SimplicialComplex &X, int d) {
  if (d == -1)
    return X.empty();
  if (X.empty() || !pure_of_dim(X, d))
    return false;
  if (d == 0)
    return X.vertices().size() == 1 || X.vertices().size() == 2;
  if (connected_components(X).size() != 1)
    return false;
  auto deg = degrees(X);
  int ones = 0;
  for (auto &[v, k] : deg) {
    if (k > 2)
      return false;
    if (k == 1)
      ++ones;
  }
  // cycle: all degree 2; path: two endpoints
  return ones == 0 ? X.vertices().size() >= 3 : ones == 2;
}

} // namespace

bool is_combinatorial_manifold(const SimplicialComplex &X, int n) {
  if (n < 0 || n > 2)
    throw UnsupportedDimension("combinatorial manifold check supports n <= 2");
  if (X.empty() || !pure_of_dim(X, n))
    return false;
  for (int d = 0; d < n; ++d)
    for (const auto &s : X.faces(d))
      if (!is_sphere_or_ball(link(X, s), n - d - 1))
        return false;
  return true;
}

} // namespace torelli
