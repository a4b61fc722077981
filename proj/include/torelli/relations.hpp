#pragma once

#include "torelli/mcg.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>

namespace torelli {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string &msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expression tree for products of mapping classes or pi_1 words.
struct Expr {
  enum class Kind { Identity, Twist, Name, BP, SEP, SIP, Product };
  Kind kind = Kind::Identity;
  std::string a, b;          // twist target / name / curve arguments
  std::vector<Expr> factors; // Product
  long power = 1;

  std::string str() const;
};

Expr parse_expr(std::string_view text, int line = 0);

enum class Schema { F1, F2, F3, F4, F5, F6, F7, F8, L, CL, WH, CS, OL, OCL };
std::string schema_name(Schema s);
std::optional<Schema> parse_schema(std::string_view s);
bool is_closed_schema(Schema s);

struct GeneratorSym {
  enum class Kind { SepTwist, BP, SIP } kind = Kind::SepTwist;
  std::string c1, c2;
  std::string str() const;
};

struct CurveDef {
  std::optional<Expr> transport; // none: standard curve
  std::string target;            // label or another curve
};

struct RelationInstance {
  std::string id;
  Schema schema = Schema::F1;
  std::vector<std::string> params;
  Expr lhs, rhs;
  int line = 0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string id;
  Schema schema = Schema::F1;
  int line = 0;
  std::vector<CheckResult> side_conditions;
  std::optional<bool> identity; // absent when a side condition failed
  std::string witness;
  std::vector<CheckResult> homology;
  std::vector<CheckResult> extra;
  std::optional<long> boundary_exponent;

  bool ok() const;
  nlohmann::json to_json() const;
};

// Parsed relation file plus lazy, memoized evaluation of its bindings.
class Workspace {
public:
  static Workspace parse(std::istream &in);
  static Workspace parse_file(const std::string &path);
  static Workspace parse_string(const std::string &text);

  const SurfaceGroup &group() const { return G_; }
  SurfaceGroup closed_group() const { return SurfaceGroup::make(G_.genus, 0); }
  const std::vector<RelationInstance> &relations() const { return relations_; }
  bool has_surface() const { return have_surface_; }

  FreeAut eval(const Expr &e);
  FreeAut eval_generator(const GeneratorSym &g);
  FreeAut named(const std::string &name); // gen or map
  CurveSpec curve(const std::string &name_or_label);
  Word word(const std::string &name);
  Word eval_word(const Expr &e); // products of word names, closed alphabet
  std::optional<GeneratorSym> generator_def(const std::string &name) const;

  VerificationReport verify(const RelationInstance &r);
  // flips the exponent of the first left-hand factor
  static RelationInstance mutate(const RelationInstance &r);

private:
  void define(const std::string &name, int line);
  void check_generator(const GeneratorSym &g, std::vector<CheckResult> &out);
  void collect_generators(const Expr &e, std::vector<GeneratorSym> &out,
                          std::vector<std::string> &names);
  void verify_closed(const RelationInstance &r, VerificationReport &rep);

  SurfaceGroup G_;
  bool have_surface_ = false;
  std::map<std::string, Expr> maps_;
  std::map<std::string, CurveDef> curves_;
  std::map<std::string, GeneratorSym> gens_;
  std::map<std::string, std::string> words_;
  std::vector<RelationInstance> relations_;
  std::set<std::string> names_;

  std::map<std::string, FreeAut> aut_cache_;
  std::map<std::string, CurveSpec> curve_cache_;
  std::set<std::string> in_progress_;
};

struct CorpusSummary {
  std::vector<VerificationReport> reports;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

CorpusSummary run_corpus(const std::string &path);
CorpusSummary run_corpus(Workspace &ws);
// Verifies every mutated instance; returns reports of the mutants.
CorpusSummary run_mutations(Workspace &ws);

} // namespace torelli
