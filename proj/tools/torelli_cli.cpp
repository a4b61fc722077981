#include "torelli/commutator.hpp"
#include "torelli/lines.hpp"
#include "torelli/relations.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace torelli;

namespace {

int cmd_verify(const std::string &file, const std::string &report, bool mutate) {
  Workspace ws = Workspace::parse_file(file);
  CorpusSummary s = mutate ? run_mutations(ws) : run_corpus(ws);
  if (report == "json") {
    std::cout << s.to_json().dump(2) << "\n";
  } else {
    for (const auto &r : s.reports) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.id << " [" << schema_name(r.schema)
                << "] line " << r.line;
      if (r.boundary_exponent)
        std::cout << "  k=" << *r.boundary_exponent;
      std::cout << "\n";
      auto dump = [](const char *tag, const std::vector<CheckResult> &v) {
        for (const auto &c : v)
          if (!c.pass)
            std::cout << "    " << tag << " failed: " << c.name
                      << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
      };
      dump("side condition", r.side_conditions);
      if (r.identity && !*r.identity)
        std::cout << "    identity fails: " << r.witness << "\n";
      dump("homology", r.homology);
      dump("check", r.extra);
    }
    std::size_t pass = 0;
    for (const auto &r : s.reports)
      pass += r.ok();
    std::cout << pass << "/" << s.reports.size() << " instances verified\n";
  }
  if (mutate) {
    for (const auto &r : s.reports)
      if (r.ok())
        return 1;
    return 0;
  }
  return s.all_pass() ? 0 : 1;
}

int cmd_fuzz(int count, int rank, std::uint64_t seed, int max_len) {
  std::vector<std::string> names;
  for (int i = 1; i <= rank; ++i)
    names.push_back("x" + std::to_string(i));
  auto alpha = std::make_shared<const Alphabet>(names);
  std::mt19937_64 rng(seed);
  int wh = 0, cs = 0, aux = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < count; ++i) {
    Word a = random_word(alpha, rng, max_len), b = random_word(alpha, rng, max_len),
         c = random_word(alpha, rng, max_len);
    wh += verify_witt_hall(a, b, c);
    cs += verify_commutator_shuffle(a, b, c);
    aux += verify_aux_identities(a, b);
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "witt-hall " << wh << "/" << count << "\n"
            << "commutator-shuffle " << cs << "/" << count << "\n"
            << "auxiliary " << aux << "/" << count << "\n"
            << "time " << ms << " ms\n";
  return (wh == count && cs == count && aux == count) ? 0 : 1;
}

int cmd_aut_eval(int genus, const std::string &expr, const std::string &apply) {
  std::string text = "surface g=" + std::to_string(genus) + " n=1\nmap F = " + expr + "\n";
  Workspace ws = Workspace::parse_string(text);
  FreeAut f = ws.named("F");
  const auto &G = ws.group();
  if (!apply.empty()) {
    std::cout << f.apply(G.parse(apply)).str() << "\n";
    return 0;
  }
  for (int k = 1; k <= G.alphabet->rank(); ++k)
    std::cout << G.alphabet->name(k) << " -> " << f.images()[k - 1].str() << "\n";
  std::cout << "homology action:\n" << homology_action(f) << "\n";
  std::cout << "torelli: " << (is_torelli(f) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_rewrite(const std::string &word, int genus) {
  AlphabetPtr alpha;
  std::vector<std::string> names;
  // surface alphabet when the letters fit, otherwise x1..xn
  int need = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] == 'x')
      need = 1;
  if (need) {
    for (int i = 1; i <= 12; ++i)
      names.push_back("x" + std::to_string(i));
    alpha = std::make_shared<const Alphabet>(names);
  } else {
    alpha = Alphabet::surface(genus);
  }
  Word w = Word::parse(alpha, word);
  BasisWord bw = tomaszewski_rewrite(alpha, w);
  for (const auto &f : bw)
    std::cout << f.elem.str(*alpha) << "  " << (f.exponent > 0 ? "+1" : "-1") << "\n";
  if (expand(alpha, bw) != w) {
    std::cerr << "round trip mismatch\n";
    return 1;
  }
  return 0;
}

LinesSubcomplexSpec make_spec(int g, bool sigma, bool delta, bool w, const std::vector<std::string> &prefix) {
  LinesSubcomplexSpec spec;
  spec.g = g;
  spec.allow_sigma = sigma;
  spec.allow_delta = delta;
  spec.restrict_to_W = w;
  for (const auto &p : prefix)
    spec.delta_prefix.push_back(Line::from(parse_symp_vec(p)));
  return spec;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"torelli: mapping class and Torelli group workbench"};
  app.require_subcommand(1);

  auto *rel = app.add_subcommand("relations", "relation-instance files");
  rel->require_subcommand(1);
  auto *verify = rel->add_subcommand("verify", "verify every instance in a file");
  std::string rel_file, report = "text";
  bool mutate = false;
  verify->add_option("file", rel_file)->required()->check(CLI::ExistingFile);
  verify->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--mutate", mutate, "flip the first exponent of every instance; pass if all mutants fail");

  auto *ids = app.add_subcommand("identities", "commutator identities");
  ids->require_subcommand(1);
  auto *fuzz = ids->add_subcommand("fuzz", "random free-group checks");
  int count = 1000, rank = 4, max_len = 20;
  std::uint64_t seed = 1;
  fuzz->add_option("--count", count);
  fuzz->add_option("--rank", rank)->check(CLI::Range(1, 64));
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--max-len", max_len);

  auto *aut = app.add_subcommand("aut", "free-group automorphisms");
  aut->require_subcommand(1);
  auto *aeval = aut->add_subcommand("eval", "evaluate a product of twists");
  int genus = 2;
  std::string aword, apply;
  aeval->add_option("--genus", genus)->check(CLI::Range(1, 32));
  aeval->add_option("--word", aword, "e.g. \"T[a1] T[b1]^-1\"")->required();
  aeval->add_option("--apply", apply, "print the image of this pi_1 word only");

  auto *tom = app.add_subcommand("tomaszewski", "commutator subgroup basis");
  tom->require_subcommand(1);
  auto *rw = tom->add_subcommand("rewrite", "rewrite a commutator-subgroup word");
  std::string tword;
  int tgenus = 3;
  rw->add_option("word", tword)->required();
  rw->add_option("--genus", tgenus, "surface alphabet size");

  auto *lines = app.add_subcommand("lines", "complex of unimodular isotropic lines");
  lines->require_subcommand(1);
  int lg = 2;
  long height = 1;
  bool sigma = false, delta = false, inW = false;
  std::vector<std::string> prefix;
  std::size_t cap = 20000;
  std::string vec, out_file;
  auto common = [&](CLI::App *c) {
    c->add_option("--g", lg)->check(CLI::Range(1, 16));
    c->add_flag("--sigma", sigma);
    c->add_flag("--delta", delta);
    c->add_flag("--W", inW, "restrict to b_g = 0");
    c->add_option("--prefix", prefix, "prefix lines, comma-separated vectors");
  };
  auto *lenum = lines->add_subcommand("enumerate", "enumerate a height truncation");
  common(lenum);
  lenum->add_option("--height", height)->check(CLI::PositiveNumber);
  lenum->add_option("--cap", cap);
  lenum->add_option("--out", out_file, "write maximal simplices here");
  auto *lpath = lines->add_subcommand("path", "edge path to the base vertex");
  bool no_sigma = false, no_delta = false;
  lpath->add_option("--g", lg)->check(CLI::Range(1, 16));
  lpath->add_flag("--no-sigma", no_sigma);
  lpath->add_flag("--no-delta", no_delta);
  lpath->add_flag("--W", inW, "restrict to b_g = 0");
  lpath->add_option("--prefix", prefix, "prefix lines, comma-separated vectors");
  lpath->add_option("--vector", vec)->required();
  auto *lhom = lines->add_subcommand("homology", "homology of a truncation or complex file");
  common(lhom);
  std::string cfile;
  lhom->add_option("--height", height)->check(CLI::PositiveNumber);
  lhom->add_option("--complex", cfile, "read maximal simplices from a file instead")->check(CLI::ExistingFile);
  lhom->add_option("--cap", cap);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return cmd_verify(rel_file, report, mutate);
    if (fuzz->parsed())
      return cmd_fuzz(count, rank, seed, max_len);
    if (aeval->parsed())
      return cmd_aut_eval(genus, aword, apply);
    if (rw->parsed())
      return cmd_rewrite(tword, tgenus);
    if (lenum->parsed()) {
      auto spec = make_spec(lg, sigma, delta, inW, prefix);
      auto T = enumerate_truncated(spec, height, cap);
      std::cout << "vertices " << T.vertices.size() << "\n";
      auto f = T.complex.f_vector();
      std::cout << "f-vector";
      for (auto n : f)
        std::cout << " " << n;
      std::cout << "\ncomponents " << connected_components(T.complex).size() << "\n";
      if (!out_file.empty()) {
        std::ofstream os(out_file);
        T.complex.write(os);
        std::ofstream vs(out_file + ".vertices");
        for (std::size_t i = 0; i < T.vertices.size(); ++i)
          vs << i << " " << format_symp_vec(T.vertices[i].rep()) << "\n";
      }
      return 0;
    }
    if (lpath->parsed()) {
      auto spec = make_spec(lg, !no_sigma, !no_delta, inW, prefix);
      auto path = path_to_base(Line::from(parse_symp_vec(vec)), spec);
      for (const auto &L : path)
        std::cout << format_symp_vec(L.rep()) << "\n";
      std::cout << "length " << path.size() - 1 << " (bound " << path_length_bound(path.front())
                << ")\n";
      return validate_path(path, spec) ? 0 : 1;
    }
    if (lhom->parsed()) {
      SimplicialComplex X;
      if (!cfile.empty()) {
        std::ifstream in(cfile);
        X = SimplicialComplex::read(in);
      } else {
        auto spec = make_spec(lg, sigma, delta, inW, prefix);
        X = enumerate_truncated(spec, height, cap).complex;
      }
      std::cout << format_homology(homology(X)) << "\n";
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
