#include "torelli/lines.hpp"
#include "torelli/mcg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace torelli {

SympVec parse_symp_vec(std::string_view text) {
  std::vector<Int> xs;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  Int x;
  while (in >> x)
    xs.push_back(x);
  if (!in.eof())
    throw std::invalid_argument("bad vector '" + std::string(text) + "'");
  if (xs.empty() || xs.size() % 2 != 0)
    throw std::invalid_argument("vector needs an even, nonzero number of coordinates");
  return Eigen::Map<SympVec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::string format_symp_vec(const SympVec &v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v(i));
  return s;
}

SympVec basis_vector(int genus, std::string_view label) {
  if (label.size() < 2 || (label[0] != 'a' && label[0] != 'b'))
    throw std::invalid_argument("basis label must be a<i> or b<i>");
  int i = std::stoi(std::string(label.substr(1)));
  if (i < 1 || i > genus)
    throw std::out_of_range("basis label out of range");
  SympVec v = SympVec::Zero(2 * genus);
  v(2 * i - (label[0] == 'a' ? 2 : 1)) = 1;
  return v;
}

bool is_primitive(const SympVec &v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = std::gcd(g, v(i));
  return g == 1;
}

Line Line::from(const SympVec &v) {
  if (v.size() == 0 || v.size() % 2 != 0)
    throw std::invalid_argument("line needs an even number of coordinates");
  if (!is_primitive(v))
    throw std::invalid_argument("vector " + format_symp_vec(v) + " is not primitive");
  Line L;
  L.rep_ = v;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) {
      if (v(i) < 0)
        L.rep_ = -v;
      break;
    }
  return L;
}

bool Line::operator<(const Line &o) const {
  if (rep_.size() != o.rep_.size())
    return rep_.size() < o.rep_.size();
  return std::lexicographical_compare(rep_.data(), rep_.data() + rep_.size(), o.rep_.data(),
                                      o.rep_.data() + o.rep_.size());
}

std::string to_string(SimplexType t) {
  switch (t) {
  case SimplexType::Standard:
    return "standard";
  case SimplexType::Sigma:
    return "sigma";
  case SimplexType::Delta:
    return "delta";
  default:
    return "none";
  }
}

namespace {

IntMat rows_of(const std::vector<SympVec> &v) {
  IntMat M(static_cast<Eigen::Index>(v.size()), v.empty() ? 0 : v[0].size());
  for (std::size_t i = 0; i < v.size(); ++i)
    M.row(static_cast<Eigen::Index>(i)) = v[i].transpose();
  return M;
}

bool spans_summand(const std::vector<SympVec> &v) {
  if (v.empty())
    return true;
  return rows_span_summand(rows_of(v));
}

} // namespace

bool is_isotropic_summand(const std::vector<SympVec> &vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (alg_int(vectors[i], vectors[j]) != 0)
        return false;
  return spans_summand(vectors);
}

bool is_standard_set(const std::vector<SympVec> &v) { return is_isotropic_summand(v); }

bool is_sigma_set(const std::vector<SympVec> &v) {
  int pairs = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Int w = alg_int(v[i], v[j]);
      if (w == 1 || w == -1)
        ++pairs;
      else if (w != 0)
        return false;
    }
  return pairs == 1 && spans_summand(v);
}

std::optional<std::array<int, 3>> delta_triple(const std::vector<SympVec> &v) {
  const int n = static_cast<int>(v.size());
  if (n < 3)
    return std::nullopt;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (i == k || j == k)
          continue;
        bool rel = false;
        for (int si : {1, -1})
          for (int sj : {1, -1})
            if (v[k] == si * v[i] + sj * v[j])
              rel = true;
        if (!rel)
          continue;
        std::vector<SympVec> rest;
        for (int t = 0; t < n; ++t)
          if (t != k)
            rest.push_back(v[t]);
        if (is_standard_set(rest))
          return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

SimplexClass classify_simplex(const std::vector<Line> &lines, const LinesSubcomplexSpec &spec) {
  if (lines.empty())
    throw std::invalid_argument("classify_simplex: empty vertex set");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].genus() != spec.g)
      throw std::invalid_argument("classify_simplex: genus mismatch");
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j])
        throw std::invalid_argument("classify_simplex: repeated vertex " + lines[i].str());
    for (const auto &p : spec.delta_prefix)
      if (p == lines[i])
        throw std::invalid_argument("classify_simplex: vertex " + p.str() + " lies in the prefix");
  }
  if (spec.restrict_to_W)
    for (const auto &L : lines)
      if (L.rep()(2 * spec.g - 1) != 0)
        return {};
  std::vector<SympVec> U, D;
  for (const auto &p : spec.delta_prefix)
    U.push_back(p.rep());
  for (const auto &L : lines) {
    U.push_back(L.rep());
    D.push_back(L.rep());
  }
  if (is_standard_set(U))
    return {SimplexType::Standard, 0};
  if (spec.allow_sigma && is_sigma_set(D) && is_sigma_set(U))
    return {SimplexType::Sigma, 0};
  if (spec.allow_delta) {
    if (auto t = delta_triple(U)) {
      const int k = static_cast<int>(spec.delta_prefix.size());
      int in_prefix = 0;
      for (int idx : *t)
        in_prefix += idx < k;
      if (in_prefix == 0)
        return {SimplexType::Delta, 1};
      if (in_prefix == 1)
        return {SimplexType::Delta, 2};
    }
  }
  return {};
}

bool is_admitted(const SimplexClass &c, const LinesSubcomplexSpec &spec) {
  switch (c.type) {
  case SimplexType::Standard:
    return true;
  case SimplexType::Sigma:
    return spec.allow_sigma;
  case SimplexType::Delta:
    return spec.allow_delta;
  default:
    return false;
  }
}

Int rho_rank(const Line &L, std::string_view rho) {
  SympVec e = basis_vector(L.genus(), rho);
  Eigen::Index k;
  e.maxCoeff(&k);
  return std::abs(L.rep()(k));
}

IntMat gram_matrix(const std::vector<SympVec> &basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  IntMat G(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      G(i, j) = alg_int(basis[i], basis[j]);
  return G;
}

namespace {

// x with M x = rhs, for M whose rows span a summand (full row rank, unit invariant factors).
SympVec solve_unimodular_rows(IntMat M, const IntVec &rhs) {
  const Eigen::Index k = M.rows(), n = M.cols();
  IntMat V = IntMat::Identity(n, n);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (;;) {
      Eigen::Index piv = -1;
      for (Eigen::Index c = r; c < n; ++c)
        if (M(r, c) != 0 && (piv < 0 || std::abs(M(r, c)) < std::abs(M(r, piv))))
          piv = c;
      if (piv < 0)
        throw HomologicalConditionError("rows do not span a summand");
      M.col(r).swap(M.col(piv));
      V.col(r).swap(V.col(piv));
      bool done = true;
      for (Eigen::Index c = r + 1; c < n; ++c) {
        if (M(r, c) == 0)
          continue;
        Int q = detail::floor_div(M(r, c), M(r, r));
        M.col(c) -= q * M.col(r);
        V.col(c) -= q * V.col(r);
        if (M(r, c) != 0)
          done = false;
      }
      if (done)
        break;
    }
  }
  IntVec y = IntVec::Zero(n);
  for (Eigen::Index r = 0; r < k; ++r) {
    Int s = rhs(r);
    for (Eigen::Index j = 0; j < r; ++j)
      s -= M(r, j) * y(j);
    if (M(r, r) == 0 || s % M(r, r) != 0)
      throw HomologicalConditionError("rows do not span a summand");
    y(r) = s / M(r, r);
  }
  return V * y;
}

// p(x) = x - i(x,b) a + i(x,a) b removes the (a,b) hyperbolic component
SympVec split_off(const SympVec &x, const SympVec &a, const SympVec &b) {
  return x - alg_int(x, b) * a + alg_int(x, a) * b;
}

} // namespace

std::vector<SympVec> complete_symplectic_basis(const std::vector<SympVec> &partial, int genus) {
  const int n = 2 * genus;
  for (const auto &v : partial)
    if (v.size() != n)
      throw std::invalid_argument("complete_symplectic_basis: length mismatch");
  if (static_cast<int>(partial.size()) > genus || !is_isotropic_summand(partial))
    throw HomologicalConditionError("partial basis is not an isotropic summand");
  const int k = static_cast<int>(partial.size());
  IntMat J = symplectic_form(genus);
  std::vector<SympVec> A = partial, B;
  if (k > 0) {
    IntMat M = rows_of(A) * J; // (M x)_j = i(a_j, x)
    for (int i = 0; i < k; ++i)
      B.push_back(solve_unimodular_rows(M, IntVec::Unit(k, i)));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < i; ++l)
        B[i] -= alg_int(B[i], B[l]) * A[l];
  }
  std::vector<SympVec> span;
  for (int j = 0; j < n; ++j) {
    SympVec x = SympVec::Unit(n, j);
    for (int i = 0; i < k; ++i)
      x = split_off(x, A[i], B[i]);
    span.push_back(x);
  }
  for (int p = k; p < genus; ++p) {
    IntMat basis = lattice_basis(rows_of(span));
    if (basis.rows() == 0)
      throw HomologicalConditionError("complement collapsed while completing basis");
    SympVec e = basis.row(0).transpose();
    std::vector<Int> r(basis.rows()), coef;
    for (Eigen::Index j = 0; j < basis.rows(); ++j)
      r[j] = alg_int(e, basis.row(j).transpose());
    if (extended_gcd(r, coef) != 1)
      throw HomologicalConditionError("complement is not unimodular");
    SympVec f = SympVec::Zero(n);
    for (Eigen::Index j = 0; j < basis.rows(); ++j)
      f += coef[j] * basis.row(j).transpose();
    A.push_back(e);
    B.push_back(f);
    span.clear();
    for (Eigen::Index j = 0; j < basis.rows(); ++j)
      span.push_back(split_off(basis.row(j).transpose(), e, f));
  }
  std::vector<SympVec> out;
  for (int i = 0; i < genus; ++i) {
    out.push_back(A[i]);
    out.push_back(B[i]);
  }
  return out;
}

TruncatedLines enumerate_truncated(const LinesSubcomplexSpec &spec, Int H, std::size_t vertex_cap,
                                   int max_simplex_size) {
  if (H < 1)
    throw std::invalid_argument("height bound must be >= 1");
  const int n = 2 * spec.g;
  if (max_simplex_size < 0)
    max_simplex_size = 2 * spec.g + 1;
  TruncatedLines out;
  std::vector<Int> c(n, -H);
  for (;;) {
    SympVec v = Eigen::Map<SympVec>(c.data(), n);
    bool lead_positive = false;
    for (int i = 0; i < n; ++i)
      if (v(i) != 0) {
        lead_positive = v(i) > 0;
        break;
      }
    if (lead_positive && is_primitive(v)) {
      Line L = Line::from(v);
      bool in_prefix = std::find(spec.delta_prefix.begin(), spec.delta_prefix.end(), L) !=
                       spec.delta_prefix.end();
      if (!in_prefix && classify_simplex({L}, spec).type != SimplexType::NonSimplex) {
        out.vertices.push_back(L);
        if (out.vertices.size() > vertex_cap)
          throw ResourceLimitError("truncated Lines complex exceeds the vertex cap");
      }
    }
    int i = n - 1;
    while (i >= 0 && c[i] == H)
      c[i--] = -H;
    if (i < 0)
      break;
    ++c[i];
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  const long N = static_cast<long>(out.vertices.size());
  // adjacency first; every face of a simplex here is again a simplex
  std::vector<std::vector<char>> adj(N, std::vector<char>(N, 0));
  std::vector<Simplex> all;
  for (long i = 0; i < N; ++i)
    all.push_back({i});
  std::vector<Simplex> level;
  for (long i = 0; i < N; ++i)
    for (long j = i + 1; j < N; ++j)
      if (classify_simplex({out.vertices[i], out.vertices[j]}, spec).type != SimplexType::NonSimplex) {
        adj[i][j] = adj[j][i] = 1;
        level.push_back({i, j});
      }
  for (int size = 2; size <= max_simplex_size && !level.empty(); ++size) {
    all.insert(all.end(), level.begin(), level.end());
    if (size == max_simplex_size)
      break;
    std::vector<Simplex> next;
    for (const auto &s : level)
      for (long u = s.back() + 1; u < N; ++u) {
        bool ok = true;
        for (Vertex v : s)
          if (!adj[v][u]) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        std::vector<Line> ls;
        for (Vertex v : s)
          ls.push_back(out.vertices[v]);
        ls.push_back(out.vertices[u]);
        if (classify_simplex(ls, spec).type != SimplexType::NonSimplex) {
          Simplex t = s;
          t.push_back(u);
          next.push_back(std::move(t));
        }
      }
    level.swap(next);
  }
  out.complex = SimplicialComplex::from_closed_family(all);
  return out;
}

namespace {

// Convergents of d/c (d >= 0, c >= 1, coprime), last first, then (1,0).
std::vector<std::pair<Int, Int>> farey_walk(Int d, Int c) {
  std::vector<Int> q;
  Int a = d, b = c;
  while (b != 0) {
    q.push_back(a / b);
    Int t = a % b;
    a = b;
    b = t;
  }
  std::vector<std::pair<Int, Int>> conv;
  Int p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  for (Int x : q) {
    Int p = x * p1 + p2, qq = x * q1 + q2;
    conv.push_back({p, qq});
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = qq;
  }
  std::reverse(conv.begin(), conv.end());
  conv.push_back({1, 0});
  return conv;
}

SympVec handle_part(const SympVec &v, int i) {
  SympVec h = SympVec::Zero(v.size());
  h.segment(2 * i - 2, 2) = v.segment(2 * i - 2, 2);
  return h;
}

Int content(const SympVec &v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = std::gcd(g, v(i));
  return g;
}

void push_vertex(std::vector<SympVec> &path, const SympVec &v) {
  if (!path.empty() && (path.back() == v || path.back() == -v))
    return;
  path.push_back(v);
}

// Standard edges only; v supported on handles lo..hi, hi >= lo, and handle lo+1 <= g exists.
void standard_walk(SympVec v, int lo, int hi, std::vector<SympVec> &path) {
  const int n = static_cast<int>(v.size());
  SympVec alo = SympVec::Unit(n, 2 * lo - 2);
  for (;;) {
    if (hi == lo) {
      push_vertex(path, v);
      if (v != alo && v != -alo)
        push_vertex(path, SympVec::Unit(n, 2 * lo));
      push_vertex(path, alo);
      return;
    }
    SympVec h = handle_part(v, hi);
    SympVec rest = v - h;
    if (h.isZero()) {
      --hi;
      continue;
    }
    if (rest.isZero()) {
      push_vertex(path, v);
      push_vertex(path, alo);
      return;
    }
    Int d = content(rest), c = content(h);
    SympVec u = rest / d, hp = h / c;
    for (auto [m, k] : farey_walk(d, c))
      push_vertex(path, m * u + k * hp);
    v = u;
    --hi;
  }
}

std::vector<SympVec> standard_path(const std::vector<Line> &prefix, const SympVec &v0,
                                   const LinesSubcomplexSpec &spec) {
  const int g = spec.g, k = static_cast<int>(prefix.size()), n = 2 * g;
  std::vector<SympVec> path;
  if (k >= g)
    throw NoPathError("prefix is a maximal standard simplex; its link has no vertices");
  // v0 = c-part on a_1..a_k plus v'' on handles k+1..g
  SympVec cpart = SympVec::Zero(n), rest = v0;
  for (int i = 1; i <= k; ++i) {
    if (v0(2 * i - 1) != 0)
      throw NoPathError("vertex not in the link of the prefix");
    cpart(2 * i - 2) = v0(2 * i - 2);
    rest(2 * i - 2) = 0;
  }
  if (!is_primitive(rest))
    throw NoPathError("vertex not in the link of the prefix");
  const SympVec base = SympVec::Unit(n, 2 * k);
  if (g - k >= 2) {
    std::vector<SympVec> sub;
    standard_walk(rest, k + 1, g, sub);
    for (const auto &w : sub)
      push_vertex(path, cpart + w);
    if (!cpart.isZero()) {
      push_vertex(path, SympVec::Unit(n, 2 * k + 2));
      push_vertex(path, base);
    }
    return path;
  }
  // one free handle left: sigma edges on the handle, then delta_2 steps on the c-part
  SympVec h = rest;
  if (h(n - 2) < 0 || (h(n - 2) == 0 && h(n - 1) < 0)) {
    h = -h;
    cpart = -cpart;
  }
  if (h != base) {
    if (g == k + 1 && spec.restrict_to_W)
      throw NoPathError("vertex outside W");
    if (!spec.allow_sigma)
      throw NoPathError("sigma edges are needed to reach the base vertex");
    Int d = h(n - 2), c = std::abs(h(n - 1));
    SympVec V = SympVec::Unit(n, n - 1) * (h(n - 1) < 0 ? -1 : 1);
    for (auto [m, q] : farey_walk(d, c))
      push_vertex(path, cpart + m * base + q * V);
  } else {
    push_vertex(path, cpart + base);
  }
  if (!cpart.isZero() && !spec.allow_delta)
    throw NoPathError("delta edges are needed to clear the prefix coordinates");
  for (int i = 1; i <= k; ++i)
    while (cpart(2 * i - 2) != 0) {
      cpart(2 * i - 2) += cpart(2 * i - 2) > 0 ? -1 : 1;
      push_vertex(path, cpart + base);
    }
  return path;
}

bool is_standard_prefix(const LinesSubcomplexSpec &spec) {
  for (std::size_t i = 0; i < spec.delta_prefix.size(); ++i) {
    Line ai = Line::from(SympVec::Unit(2 * spec.g, 2 * static_cast<Eigen::Index>(i)));
    if (std::find(spec.delta_prefix.begin(), spec.delta_prefix.end(), ai) == spec.delta_prefix.end())
      return false;
  }
  return true;
}

} // namespace

Line base_vertex(const LinesSubcomplexSpec &spec) {
  const int k = static_cast<int>(spec.delta_prefix.size());
  if (k >= spec.g)
    throw NoPathError("prefix is a maximal standard simplex; its link has no vertices");
  if (is_standard_prefix(spec))
    return Line::from(SympVec::Unit(2 * spec.g, 2 * k));
  std::vector<SympVec> partial;
  for (const auto &p : spec.delta_prefix)
    partial.push_back(p.rep());
  return Line::from(complete_symplectic_basis(partial, spec.g)[2 * k]);
}

std::vector<Line> path_to_base(const Line &L, const LinesSubcomplexSpec &spec) {
  if (L.genus() != spec.g)
    throw std::invalid_argument("path_to_base: genus mismatch");
  const int g = spec.g, k = static_cast<int>(spec.delta_prefix.size());
  if (!spec.delta_prefix.empty()) {
    std::vector<SympVec> pre;
    for (const auto &p : spec.delta_prefix)
      pre.push_back(p.rep());
    if (!is_isotropic_summand(pre))
      throw std::invalid_argument("prefix is not a standard simplex");
  }
  if (classify_simplex({L}, spec).type == SimplexType::NonSimplex)
    throw NoPathError("vertex " + L.str() + " is not in the specified complex");
  std::vector<SympVec> raw;
  if (k == 0 && g == 1) {
    if (L.rep()(1) == 0) {
      raw.push_back(L.rep());
    } else {
      if (!spec.allow_sigma)
        throw NoPathError("genus 1 has no standard edges; sigma edges required");
      SympVec v = L.rep();
      Int d = v(0), c = std::abs(v(1));
      SympVec U = SympVec::Unit(2, 0), V = SympVec::Unit(2, 1) * (v(1) < 0 ? -1 : 1);
      for (auto [m, q] : farey_walk(d, c))
        push_vertex(raw, m * U + q * V);
    }
  } else if (is_standard_prefix(spec)) {
    raw = standard_path(spec.delta_prefix, L.rep(), spec);
  } else {
    if (spec.restrict_to_W)
      throw NoPathError("W-restricted paths need the prefix a_1..a_k");
    // move to a symplectic basis whose first a-vectors are the prefix
    std::vector<SympVec> pre;
    for (const auto &p : spec.delta_prefix)
      pre.push_back(p.rep());
    auto basis = complete_symplectic_basis(pre, g);
    SympVec w(2 * g);
    for (int j = 0; j < g; ++j) {
      w(2 * j) = alg_int(L.rep(), basis[2 * j + 1]);
      w(2 * j + 1) = -alg_int(L.rep(), basis[2 * j]);
    }
    LinesSubcomplexSpec local = spec;
    local.delta_prefix.clear();
    for (int j = 0; j < k; ++j)
      local.delta_prefix.push_back(Line::from(SympVec::Unit(2 * g, 2 * j)));
    for (const auto &x : standard_path(local.delta_prefix, w, local)) {
      SympVec y = SympVec::Zero(2 * g);
      for (int j = 0; j < 2 * g; ++j)
        y += x(j) * basis[j];
      raw.push_back(y);
    }
  }
  std::vector<Line> out;
  for (const auto &v : raw) {
    Line x = Line::from(v);
    if (out.empty() || !(out.back() == x))
      out.push_back(x);
  }
  return out;
}

std::size_t path_length_bound(const Line &L) {
  Int H = L.rep().cwiseAbs().maxCoeff();
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double per = 2.0 * std::log(static_cast<double>(H) + 1.0) / std::log(phi) + 4.0;
  return static_cast<std::size_t>(L.genus() * per) + 2;
}

bool validate_path(const std::vector<Line> &path, const LinesSubcomplexSpec &spec) {
  if (path.empty())
    return false;
  for (const auto &x : path)
    if (classify_simplex({x}, spec).type == SimplexType::NonSimplex)
      return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == path[i + 1])
      return false;
    auto c = classify_simplex({path[i], path[i + 1]}, spec);
    if (!is_admitted(c, spec))
      return false;
  }
  return path.back() == base_vertex(spec);
}

} // namespace torelli
