// Acceptance driver: one PASS/FAIL line per criterion, exact checks, wall-clock limits.
// usage: acceptance <corpus-dir>

#include "torelli/commutator.hpp"
#include "torelli/lines.hpp"
#include "torelli/mcg.hpp"
#include "torelli/relations.hpp"
#include "torelli/simplicial.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

using namespace torelli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string &why) {
    if (pass)
      note = why;
    pass = false;
  }
};

int failures = 0;

void run(int id, const std::string &title, double limit_s, const std::function<Outcome()> &body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= limit_s)
    o.fail("over time limit");
  failures += !o.pass;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << " (" << s << " s, limit "
       << limit_s << " s)";
  if (!o.note.empty())
    line << ": " << o.note;
  std::cout << line.str() << std::endl;
}

AlphabetPtr free_alphabet(int rank) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i)
    names.push_back("x" + std::to_string(i));
  return std::make_shared<const Alphabet>(names);
}

// 1
Outcome identity_fuzz() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  for (int rank : {4, 6}) {
    auto alpha = free_alphabet(rank);
    int wh = 0, cs = 0, aux = 0;
    for (int i = 0; i < 1000; ++i) {
      Word a = random_word(alpha, rng, 20), b = random_word(alpha, rng, 20),
           c = random_word(alpha, rng, 20);
      if (a.size() > 20 || b.size() > 20 || c.size() > 20)
        o.fail("generated word longer than 20");
      wh += verify_witt_hall(a, b, c);
      cs += verify_commutator_shuffle(a, b, c);
      aux += verify_aux_identities(a, b);
    }
    std::ostringstream s;
    s << "rank " << rank << ": " << wh << "/" << cs << "/" << aux << " of 1000";
    o.note += (o.note.empty() ? "" : "; ") + s.str();
    if (wh != 1000 || cs != 1000 || aux != 1000)
      o.pass = false;
  }
  return o;
}

// 2
Outcome tomaszewski_round_trip() {
  Outcome o;
  auto alpha = free_alphabet(4);
  std::mt19937_64 rng(77);
  std::size_t factors = 0;
  for (int i = 0; i < 500; ++i) {
    Word w = random_commutator_word(alpha, rng, 40);
    if (w.size() > 40) {
      o.fail("word longer than 40");
      continue;
    }
    BasisWord bw = tomaszewski_rewrite(alpha, w);
    factors += bw.size();
    for (const auto &f : bw) {
      if (!f.elem.valid() || (f.exponent != 1 && f.exponent != -1))
        o.fail("factor violates the basis ordering: " + f.elem.str(*alpha));
    }
    if (expand(alpha, bw) != w)
      o.fail("round trip mismatch on " + w.str());
  }
  if (o.pass)
    o.note = "500 words, " + std::to_string(factors) + " basis factors";
  return o;
}

// chain b1 - a1 - c1 - a2 - c2 - ... - a_g, plus b_i - a_i
bool chain_adjacent(const std::string &x, const std::string &y) {
  auto adj = [](const std::string &p, const std::string &q) {
    char kp = p[0], kq = q[0];
    int ip = std::stoi(p.substr(1)), iq = std::stoi(q.substr(1));
    if (kp == 'b' && kq == 'a')
      return ip == iq;
    if (kp == 'c' && kq == 'a')
      return iq == ip || iq == ip + 1;
    return false;
  };
  return adj(x, y) || adj(y, x);
}

// 3
Outcome table_consistency() {
  Outcome o;
  int braids = 0, commuting = 0, autos = 0;
  for (int g : {2, 3}) {
    SurfaceGroup G = SurfaceGroup::make(g, 1);
    Word bd = boundary_word(G);
    std::vector<std::string> labels;
    for (int i = 1; i <= g; ++i) {
      labels.push_back("a" + std::to_string(i));
      labels.push_back("b" + std::to_string(i));
      if (i < g)
        labels.push_back("c" + std::to_string(i));
    }
    IntMat J = IntMat::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
      J(2 * i, 2 * i + 1) = 1;
      J(2 * i + 1, 2 * i) = -1;
    }
    for (const auto &l : labels)
      for (int s : {1, -1}) {
        FreeAut T = twist(G, l, s);
        ++autos;
        if (T.apply(bd) != bd)
          o.fail("T[" + l + "] moves the boundary word");
        IntMat M = homology_action(T);
        if (M.transpose() * J * M != J)
          o.fail("T[" + l + "] not symplectic");
      }
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        FreeAut x = twist(G, labels[i]), y = twist(G, labels[j]);
        if (chain_adjacent(labels[i], labels[j])) {
          ++braids;
          if (!equal(x * y * x, y * x * y))
            o.fail("braid relation fails for " + labels[i] + "," + labels[j]);
          if (equal(x * y, y * x))
            o.fail("intersecting twists commute: " + labels[i] + "," + labels[j]);
        } else {
          ++commuting;
          if (!equal(x * y, y * x))
            o.fail("disjoint twists do not commute: " + labels[i] + "," + labels[j]);
        }
      }
  }
  if (autos != 2 * (3 * 2 - 1) + 2 * (3 * 3 - 1))
    o.fail("unexpected twist count " + std::to_string(autos));
  if (o.pass)
    o.note = std::to_string(autos) + " twists, " + std::to_string(commuting) + " commuting pairs, " +
             std::to_string(braids) + " braid pairs";
  return o;
}

std::vector<fs::path> corpus_files(const fs::path &dir) {
  std::vector<fs::path> out;
  for (const auto &e : fs::directory_iterator(dir))
    if (e.path().extension() == ".rel")
      out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

// 4
Outcome relation_corpus(const fs::path &dir) {
  Outcome o;
  std::set<std::string> schemas;
  std::size_t instances = 0, mutants = 0;
  bool example_wh = false;
  for (const auto &f : corpus_files(dir)) {
    Workspace ws = Workspace::parse_file(f.string());
    CorpusSummary s = run_corpus(ws);
    for (const auto &r : s.reports) {
      ++instances;
      schemas.insert(schema_name(r.schema));
      if (!r.ok())
        o.fail(f.filename().string() + ":" + r.id + " does not verify");
      if (r.schema == Schema::L && r.boundary_exponent != 1L)
        o.fail(r.id + ": lantern exponent is not 1");
      if (r.schema == Schema::CL && r.boundary_exponent != 0L)
        o.fail(r.id + ": crossed lantern exponent is not 0");
      if (r.schema == Schema::WH && ws.group().genus == 3)
        example_wh = true;
    }
    CorpusSummary m = run_mutations(ws);
    for (const auto &r : m.reports) {
      ++mutants;
      if (r.ok() || !r.identity || *r.identity || r.witness.empty())
        o.fail("mutant of " + r.id + " not rejected with a witness");
    }
  }
  for (const char *want :
       {"F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "L", "CL", "WH", "CS", "OL", "OCL"})
    if (!schemas.count(want))
      o.fail(std::string("no instance of schema ") + want);
  if (!example_wh)
    o.fail("missing the genus-3 WH configuration");
  if (o.pass)
    o.note = std::to_string(instances) + " instances, " + std::to_string(mutants) +
             " mutants rejected";
  return o;
}

void torelli_generators(Workspace &ws, const Expr &e, std::vector<FreeAut> &out) {
  switch (e.kind) {
  case Expr::Kind::BP:
    out.push_back(ws.eval_generator({GeneratorSym::Kind::BP, e.a, e.b}));
    break;
  case Expr::Kind::SIP:
    out.push_back(ws.eval_generator({GeneratorSym::Kind::SIP, e.a, e.b}));
    break;
  case Expr::Kind::SEP:
    out.push_back(ws.eval_generator({GeneratorSym::Kind::SepTwist, e.a, ""}));
    break;
  case Expr::Kind::Name:
    if (auto g = ws.generator_def(e.a))
      out.push_back(ws.eval_generator(*g));
    break;
  case Expr::Kind::Product:
    for (const auto &f : e.factors)
      torelli_generators(ws, f, out);
    break;
  default:
    break;
  }
}

// 5
Outcome torelli_membership(const fs::path &dir) {
  Outcome o;
  std::size_t gens = 0, words = 0;
  for (const auto &f : corpus_files(dir)) {
    Workspace ws = Workspace::parse_file(f.string());
    for (const auto &r : ws.relations()) {
      if (is_closed_schema(r.schema)) {
        SurfaceGroup Gc = ws.closed_group();
        Word w = ws.eval_word(r.lhs) * ws.eval_word(r.rhs).inverse();
        HomologyClass h = HomologyClass::Zero(2 * Gc.genus);
        for (int l : w.letters())
          h(std::abs(l) - 1) += l > 0 ? 1 : -1;
        ++words;
        if (!h.isZero())
          o.fail(r.id + ": closed relation word is not null-homologous");
        continue;
      }
      std::vector<FreeAut> gs;
      torelli_generators(ws, r.lhs, gs);
      torelli_generators(ws, r.rhs, gs);
      IntMat I = IntMat::Identity(2 * ws.group().genus, 2 * ws.group().genus);
      for (const auto &g : gs) {
        ++gens;
        if (homology_action(g) != I)
          o.fail(r.id + ": a generator acts nontrivially on homology");
      }
      ++words;
      if (homology_action(ws.eval(r.lhs) * ws.eval(r.rhs).inverse()) != I)
        o.fail(r.id + ": relation word acts nontrivially on homology");
    }
  }
  SurfaceGroup G = SurfaceGroup::make(2, 1);
  FreeAut x = (twist(G, "a1") * twist(G, "b1")).power(6);
  if (homology_action(x) != IntMat::Identity(4, 4) || !is_torelli(x))
    o.fail("(T[a1] T[b1])^6 is not Torelli");
  int singles = 0;
  for (int g : {2, 3}) {
    SurfaceGroup H = SurfaceGroup::make(g, 1);
    for (int i = 1; i <= g; ++i)
      for (char k : {'a', 'b', 'c'}) {
        if (k == 'c' && i == g)
          continue;
        ++singles;
        if (is_torelli(twist(H, std::string(1, k) + std::to_string(i))))
          o.fail(std::string("single twist is Torelli: ") + k + std::to_string(i));
      }
  }
  if (o.pass)
    o.note = std::to_string(gens) + " generator occurrences, " + std::to_string(words) +
             " relation words, " + std::to_string(singles) + " single twists rejected";
  return o;
}

// ---- independent lines oracle: plain definitions, brute force over orderings and signs

using V4 = std::vector<long long>;

long long iform(const V4 &u, const V4 &v) {
  long long s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2)
    s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

long long small_det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 1)
    return m[0][0];
  long long d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c)
          row.push_back(m[r][j]);
      sub.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * small_det(sub);
  }
  return d;
}

// summand of rank k iff the k x k minors have gcd 1
bool summand(const std::vector<V4> &vs) {
  const std::size_t k = vs.size(), n = vs[0].size();
  long long g = 0;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<std::vector<long long>> m(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < n; ++r)
        if (pick[r])
          m[i].push_back(vs[i][r]);
    g = std::gcd(g, small_det(m));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return g == 1;
}

bool brute_standard(const std::vector<V4> &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (iform(vs[i], vs[j]) != 0)
        return false;
  return summand(vs);
}

SimplexType brute_classify(const std::vector<V4> &vs) {
  if (brute_standard(vs))
    return SimplexType::Standard;
  const std::size_t k = vs.size();
  int unit = 0, other = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      long long x = iform(vs[i], vs[j]);
      if (x == 1 || x == -1)
        ++unit;
      else if (x != 0)
        ++other;
    }
  if (unit == 1 && other == 0 && summand(vs))
    return SimplexType::Sigma;
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (i == l || j == l)
          continue;
        bool rel = false;
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) {
            bool eq = true;
            for (std::size_t t = 0; t < vs[l].size(); ++t)
              eq = eq && vs[l][t] == s1 * vs[i][t] + s2 * vs[j][t];
            rel = rel || eq;
          }
        if (!rel)
          continue;
        std::vector<V4> rest;
        for (std::size_t t = 0; t < k; ++t)
          if (t != l)
            rest.push_back(vs[t]);
        if (brute_standard(rest))
          return SimplexType::Delta;
      }
  return SimplexType::NonSimplex;
}

// 6
Outcome lines_engine() {
  Outcome o;
  std::vector<V4> verts;
  for (int code = 0; code < 81; ++code) {
    V4 v(4);
    int c = code;
    for (int t = 0; t < 4; ++t, c /= 3)
      v[t] = c % 3 - 1;
    auto nz = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (nz != v.end() && *nz > 0)
      verts.push_back(v);
  }
  if (verts.size() != 40)
    o.fail("height-1 vertex count " + std::to_string(verts.size()));
  LinesSubcomplexSpec spec;
  spec.g = 2;
  auto to_line = [](const V4 &v) {
    SympVec s(static_cast<Eigen::Index>(v.size()));
    for (std::size_t t = 0; t < v.size(); ++t)
      s(static_cast<Eigen::Index>(t)) = v[t];
    return Line::from(s);
  };
  std::vector<Line> lines;
  for (const auto &v : verts)
    lines.push_back(to_line(v));
  std::array<std::size_t, 4> tally{};
  std::size_t subsets = 0;
  const std::size_t n = verts.size();
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!idx.empty()) {
      std::vector<V4> vs;
      std::vector<Line> ls;
      for (auto i : idx) {
        vs.push_back(verts[i]);
        ls.push_back(lines[i]);
      }
      SimplexType want = brute_classify(vs);
      SimplexType got = classify_simplex(ls, spec).type;
      ++subsets;
      ++tally[static_cast<std::size_t>(want)];
      if (want != got) {
        std::string d;
        for (const auto &l : ls)
          d += l.str();
        o.fail("classification mismatch on " + d + ": " + to_string(got) + " vs " + to_string(want));
      }
    }
    if (idx.size() == 4)
      return;
    for (std::size_t i = from; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);

  std::mt19937_64 rng(4242);
  std::size_t paths = 0, longest = 0;
  for (int g : {2, 3}) {
    LinesSubcomplexSpec ps;
    ps.g = g;
    std::uniform_int_distribution<long long> d(-100, 100);
    int made = 0;
    while (made < 200) {
      V4 v(2 * g);
      for (auto &x : v)
        x = d(rng);
      long long gg = 0;
      for (auto x : v)
        gg = std::gcd(gg, x);
      if (gg != 1)
        continue;
      ++made;
      Line L = to_line(v);
      auto path = path_to_base(L, ps);
      ++paths;
      longest = std::max(longest, path.size() - 1);
      if (!(path.front() == L) || !(path.back() == Line::from(basis_vector(g, "a1"))))
        o.fail("path endpoints wrong for " + L.str());
      if (!validate_path(path, ps))
        o.fail("path does not validate for " + L.str());
      if (path.size() - 1 > path_length_bound(L))
        o.fail("path longer than the documented bound for " + L.str());
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        std::vector<V4> e;
        for (const Line *p : {&path[i], &path[i + 1]}) {
          V4 w(p->rep().data(), p->rep().data() + p->rep().size());
          e.push_back(w);
        }
        if (path[i] == path[i + 1] || brute_classify(e) == SimplexType::NonSimplex)
          o.fail("edge rejected by the brute-force oracle: " + path[i].str() + path[i + 1].str());
      }
    }
  }
  if (o.pass)
    o.note = std::to_string(subsets) + " subsets (" + std::to_string(tally[0]) + " standard, " +
             std::to_string(tally[1]) + " sigma, " + std::to_string(tally[2]) + " delta); " +
             std::to_string(paths) + " paths, longest " + std::to_string(longest);
  return o;
}

// link by definition, from the face list
SimplicialComplex brute_link(const SimplicialComplex &X, const Simplex &d) {
  std::vector<Simplex> out;
  for (int k = 0; k <= X.dimension(); ++k)
    for (const auto &t : X.faces(k)) {
      bool disjoint = std::none_of(t.begin(), t.end(), [&](Vertex v) {
        return std::find(d.begin(), d.end(), v) != d.end();
      });
      std::vector<Vertex> u = t;
      u.insert(u.end(), d.begin(), d.end());
      if (disjoint && X.contains(make_simplex(u)))
        out.push_back(t);
    }
  return SimplicialComplex::from_simplices(out);
}

// 7
Outcome homology_oracles() {
  Outcome o;
  using HG = HomologyGroup;
  auto boundary_of = [](int n) {
    std::vector<Simplex> s;
    for (int skip = 0; skip <= n; ++skip) {
      Simplex f;
      for (int v = 0; v <= n; ++v)
        if (v != skip)
          f.push_back(v);
      s.push_back(f);
    }
    return SimplicialComplex::from_simplices(s);
  };
  SimplicialComplex tri = boundary_of(2), tet = boundary_of(3);
  if (homology(tri) != std::vector<HG>{{1, {}}, {1, {}}})
    o.fail("triangle boundary: " + format_homology(homology(tri)));
  if (homology(tet) != std::vector<HG>{{1, {}}, {0, {}}, {1, {}}})
    o.fail("tetrahedron boundary: " + format_homology(homology(tet)));
  std::vector<SimplicialComplex> tests{tri, tet};
  for (int n = 1; n <= 4; ++n) {
    SimplicialComplex C = cross_complex(n);
    tests.push_back(C);
    auto H = homology(C);
    if (H.empty() || H[0] != HG{1, {}})
      o.fail("cross complex " + std::to_string(n) + " not connected");
    for (std::size_t k = 1; k < H.size(); ++k)
      if (H[k] != HG{})
        o.fail("cross complex " + std::to_string(n) + " has H_" + std::to_string(k));
    if (C.euler_characteristic() != 1)
      o.fail("cross complex " + std::to_string(n) + " has chi != 1");
    if (C.vertices().size() != static_cast<std::size_t>(2 * n))
      o.fail("cross complex " + std::to_string(n) + " vertex count");
  }
  // six-vertex projective plane and a random flag-free complex
  tests.push_back(SimplicialComplex::from_simplices({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 0},
                                                     {2, 0, 3}, {3, 4, 5}, {0, 4, 5}, {0, 1, 5},
                                                     {1, 2, 5}, {2, 3, 5}}));
  std::mt19937_64 rng(99);
  std::vector<Simplex> rnd;
  std::uniform_int_distribution<int> vd(0, 8);
  for (int i = 0; i < 14; ++i) {
    std::vector<Vertex> s;
    for (int j = 0; j < 4; ++j)
      s.push_back(vd(rng));
    rnd.push_back(make_simplex(s));
  }
  tests.push_back(SimplicialComplex::from_simplices(rnd));
  std::size_t checked = 0;
  for (const auto &X : tests)
    for (int k = 0; k <= X.dimension(); ++k)
      for (const auto &d : X.faces(k)) {
        ++checked;
        SimplicialComplex Lk = link(X, d);
        if (!(Lk == brute_link(X, d)))
          o.fail("link disagrees with its definition");
        if (!(star(X, d) == join(simplex_complex(d), Lk)))
          o.fail("Star != simplex * Link");
      }
  if (o.pass)
    o.note = std::to_string(checked) + " simplices checked across " + std::to_string(tests.size()) +
             " complexes";
  return o;
}

// 8
Outcome connectivity_probe() {
  Outcome o;
  std::string note;
  for (int g : {1, 2}) {
    LinesSubcomplexSpec spec;
    spec.g = g;
    auto T = enumerate_truncated(spec, 2, 200000);
    auto comps = connected_components(T.complex).size();
    note += (note.empty() ? "" : "; ") + std::string("g=") + std::to_string(g) + ": " +
            std::to_string(T.vertices.size()) + " vertices, " + std::to_string(comps) +
            " component(s)";
    if (comps != 1)
      o.fail("g=" + std::to_string(g) + " truncation has " + std::to_string(comps) + " components");
  }
  if (o.pass)
    o.note = note;
  return o;
}

// 9
std::vector<std::vector<int>> relator_rotations(const Word &r) {
  std::vector<std::vector<int>> out;
  for (const Word &w : {r, r.inverse()}) {
    const auto &l = w.letters();
    for (std::size_t s = 0; s < l.size(); ++s) {
      std::vector<int> rot(l.begin() + static_cast<long>(s), l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + static_cast<long>(s));
      out.push_back(rot);
    }
  }
  return out;
}

// cyclically reduced, nonempty, and no cyclic subword of length 2g+1 shared with a relator
// rotation: nontrivial by Dehn's theorem
bool dehn_irreducible(const std::vector<int> &w, const std::vector<std::vector<int>> &rots, int g) {
  if (w.empty() || w.front() == -w.back())
    return false;
  const std::size_t m = static_cast<std::size_t>(2 * g + 1);
  std::set<std::vector<int>> pieces;
  for (const auto &r : rots)
    for (std::size_t s = 0; s + m <= r.size(); ++s)
      pieces.emplace(r.begin() + static_cast<long>(s), r.begin() + static_cast<long>(s + m));
  for (std::size_t s = 0; s < w.size(); ++s) {
    std::vector<int> sub;
    for (std::size_t t = 0; t < m; ++t)
      sub.push_back(w[(s + t) % w.size()]);
    if (pieces.count(sub))
      return false;
  }
  return true;
}

std::uint64_t encode(const std::vector<int> &w) {
  std::uint64_t k = w.size();
  for (int l : w)
    k = (k << 4) | static_cast<std::uint64_t>(l > 0 ? l : 8 - l);
  return k;
}

Outcome closed_word_problem() {
  Outcome o;
  std::mt19937_64 rng(31337);
  int accepted = 0, rejected = 0;
  for (int g : {2, 3}) {
    SurfaceGroup G = SurfaceGroup::make(g, 0);
    Word r = boundary_word(G);
    if (r.size() != static_cast<std::size_t>(4 * g) || !is_identity_closed(G, r))
      o.fail("relator not recognised in genus " + std::to_string(g));
    std::uniform_int_distribution<int> pieces(1, 3), sgn(0, 1);
    for (int i = 0; i < 100; ++i) {
      Word w = G.identity();
      int n = i < 30 ? 1 : pieces(rng);
      for (int j = 0; j < n; ++j) {
        Word u = random_word(G.alphabet, rng, 12);
        w = w * conjugate(sgn(rng) ? r : r.inverse(), u);
      }
      ++accepted;
      if (!is_identity_closed(G, w))
        o.fail("product of relator conjugates rejected: " + w.str());
    }
    auto rots = relator_rotations(r);
    int abel = 0, irred = 0;
    for (int attempts = 0; (abel < 50 || irred < 50) && attempts < 200000; ++attempts) {
      Word w = random_word(G.alphabet, rng, 30);
      std::vector<long> sums(2 * g, 0);
      for (int l : w.letters())
        sums[std::abs(l) - 1] += l > 0 ? 1 : -1;
      bool nonzero = std::any_of(sums.begin(), sums.end(), [](long x) { return x != 0; });
      if (nonzero && abel < 50) {
        ++abel;
      } else if (!nonzero && irred < 50) {
        if (!dehn_irreducible(w.letters(), rots, g))
          continue;
        ++irred;
      } else {
        continue;
      }
      ++rejected;
      if (is_identity_closed(G, w))
        o.fail("nontrivial word accepted: " + w.str());
    }
    if (abel < 50 || irred < 50)
      o.fail("could not sample 100 nontrivial words in genus " + std::to_string(g));
  }

  // bounded search, genus 2: trivial words reachable from the empty word by relator
  // substitutions that never exceed length 8
  SurfaceGroup G2 = SurfaceGroup::make(2, 0);
  auto rots = relator_rotations(boundary_word(G2));
  std::unordered_set<std::uint64_t> trivial{encode({})};
  std::vector<std::vector<int>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto &w : frontier)
      for (std::size_t i = 0; i <= w.size(); ++i)
        for (std::size_t len = 0; i + len <= w.size() && len <= 8; ++len)
          for (const auto &s : rots) {
            if (!std::equal(w.begin() + static_cast<long>(i),
                            w.begin() + static_cast<long>(i + len), s.begin()))
              continue;
            std::vector<int> nw(w.begin(), w.begin() + static_cast<long>(i));
            for (std::size_t t = s.size(); t > len; --t)
              nw.push_back(-s[t - 1]);
            nw.insert(nw.end(), w.begin() + static_cast<long>(i + len), w.end());
            reduce_in_place(nw);
            if (nw.size() <= 8 && trivial.insert(encode(nw)).second)
              next.push_back(nw);
          }
    frontier = std::move(next);
  }
  std::size_t enumerated = 0, dehn_trivial = 0;
  std::vector<int> w;
  std::function<void()> rec = [&]() {
    ++enumerated;
    bool dehn = is_identity_closed(G2, Word(G2.alphabet, w));
    dehn_trivial += dehn;
    if (dehn != (trivial.count(encode(w)) > 0))
      o.fail("Dehn and bounded search disagree on " + Word(G2.alphabet, w).str());
    if (w.size() == 8)
      return;
    for (int l : {1, 2, 3, 4, -1, -2, -3, -4}) {
      if (!w.empty() && w.back() == -l)
        continue;
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
  if (dehn_trivial != trivial.size())
    o.fail("trivial-set sizes differ");
  if (o.pass)
    o.note = std::to_string(accepted) + " relator products accepted, " + std::to_string(rejected) +
             " nontrivial words rejected; " + std::to_string(enumerated) +
             " genus-2 words of length <= 8 agree with bounded search (" +
             std::to_string(trivial.size()) + " trivial)";
  return o;
}

} // namespace

int main(int argc, char **argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <corpus-dir>\n";
    return 2;
  }
  fs::path corpus = argv[1];
  run(1, "identity fuzz (rank 4 and 6)", 60, identity_fuzz);
  run(2, "Tomaszewski round trip", 120, tomaszewski_round_trip);
  run(3, "twist table consistency (g = 2, 3)", 10, table_consistency);
  run(4, "relation corpus and mutation harness", 60, [&] { return relation_corpus(corpus); });
  run(5, "Torelli membership", 5, [&] { return torelli_membership(corpus); });
  run(6, "lines engine", 120, lines_engine);
  run(7, "homology engine oracles", 30, homology_oracles);
  run(8, "connectivity probe at height 2", 60, connectivity_probe);
  run(9, "closed-surface word problem", 60, closed_word_problem);
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria pass")
            << std::endl;
  return failures ? 1 : 0;
}
