#include "torelli/relations.hpp"

#include "torelli/commutator.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace torelli {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool valid_name(const std::string &s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!ident_char(c))
      return false;
  return true;
}

struct Token {
  enum Type { Ident, Number, Sym, End } type = End;
  std::string text;
};

class Lexer {
public:
  Lexer(std::string_view s, int line) : s_(s), line_(line) { advance(); }
  const Token &peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }
  bool accept(const std::string &sym) {
    if (cur_.type == Token::Sym && cur_.text == sym) {
      advance();
      return true;
    }
    return false;
  }
  void expect(const std::string &sym) {
    if (!accept(sym))
      fail("expected '" + sym + "' near '" + cur_.text + "'");
  }
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(line_, msg); }

private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ >= s_.size()) {
      cur_ = {Token::End, ""};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      cur_ = {Token::Number, std::string(s_.substr(b, pos_ - b))};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_]))
        ++pos_;
      cur_ = {Token::Ident, std::string(s_.substr(b, pos_ - b))};
    } else {
      ++pos_;
      cur_ = {Token::Sym, std::string(1, c)};
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  Token cur_;
};

Expr parse_product(Lexer &lx);

long parse_power(Lexer &lx) {
  bool paren = lx.accept("(");
  long sign = 1;
  if (lx.accept("-"))
    sign = -1;
  else
    lx.accept("+");
  if (lx.peek().type != Token::Number)
    lx.fail("expected an integer exponent");
  long v = std::stol(lx.take().text);
  if (paren)
    lx.expect(")");
  return sign * v;
}

Expr parse_atom(Lexer &lx) {
  Expr e;
  const Token &t = lx.peek();
  if (t.type == Token::Number) {
    if (t.text != "1")
      lx.fail("only 1 may appear as a numeric factor");
    lx.take();
    e.kind = Expr::Kind::Identity;
    return e;
  }
  if (lx.accept("(")) {
    e = parse_product(lx);
    lx.expect(")");
    if (e.kind != Expr::Kind::Product) {
      Expr wrap;
      wrap.kind = Expr::Kind::Product;
      wrap.factors.push_back(e);
      e = wrap;
    }
    return e;
  }
  if (t.type != Token::Ident)
    lx.fail("unexpected '" + t.text + "'");
  std::string id = lx.take().text;
  auto name_arg = [&]() {
    if (lx.peek().type != Token::Ident)
      lx.fail("expected a curve name");
    return lx.take().text;
  };
  if (id == "T" && lx.accept("[")) {
    e.kind = Expr::Kind::Twist;
    e.a = name_arg();
    lx.expect("]");
  } else if ((id == "BP" || id == "SIP") && lx.accept("(")) {
    e.kind = id == "BP" ? Expr::Kind::BP : Expr::Kind::SIP;
    e.a = name_arg();
    lx.expect(",");
    e.b = name_arg();
    lx.expect(")");
  } else if (id == "SEP" && lx.accept("(")) {
    e.kind = Expr::Kind::SEP;
    e.a = name_arg();
    lx.expect(")");
  } else {
    e.kind = Expr::Kind::Name;
    e.a = id;
  }
  return e;
}

Expr parse_term(Lexer &lx) {
  Expr e = parse_atom(lx);
  while (lx.accept("^"))
    e.power *= parse_power(lx);
  return e;
}

bool starts_term(const Token &t) {
  return t.type == Token::Ident || t.type == Token::Number || (t.type == Token::Sym && t.text == "(");
}

Expr parse_product(Lexer &lx) {
  std::vector<Expr> fs;
  fs.push_back(parse_term(lx));
  for (;;) {
    if (lx.accept("*")) {
      fs.push_back(parse_term(lx));
      continue;
    }
    if (starts_term(lx.peek())) {
      fs.push_back(parse_term(lx));
      continue;
    }
    break;
  }
  if (fs.size() == 1)
    return fs[0];
  Expr e;
  e.kind = Expr::Kind::Product;
  e.factors = std::move(fs);
  return e;
}

std::string short_word(const Word &w, std::size_t limit = 160) {
  std::string s = w.str();
  if (s.size() > limit)
    s = s.substr(0, limit) + " ... (" + std::to_string(w.size()) + " letters)";
  return s;
}

} // namespace

std::string Expr::str() const {
  std::string s;
  switch (kind) {
  case Kind::Identity:
    s = "1";
    break;
  case Kind::Twist:
    s = "T[" + a + "]";
    break;
  case Kind::Name:
    s = a;
    break;
  case Kind::BP:
    s = "BP(" + a + ", " + b + ")";
    break;
  case Kind::SIP:
    s = "SIP(" + a + ", " + b + ")";
    break;
  case Kind::SEP:
    s = "SEP(" + a + ")";
    break;
  case Kind::Product:
    for (std::size_t i = 0; i < factors.size(); ++i)
      s += (i ? " * " : "") + factors[i].str();
    if (power != 1)
      s = "(" + s + ")";
    break;
  }
  if (power != 1)
    s += "^" + std::to_string(power);
  return s;
}

Expr parse_expr(std::string_view text, int line) {
  Lexer lx(text, line);
  if (lx.peek().type == Token::End)
    throw ParseError(line, "empty expression");
  Expr e = parse_product(lx);
  if (lx.peek().type != Token::End)
    lx.fail("trailing input near '" + lx.peek().text + "'");
  return e;
}

std::string schema_name(Schema s) {
  static const char *names[] = {"F1", "F2", "F3", "F4", "F5", "F6", "F7",
                                "F8", "L",  "CL", "WH", "CS", "OL", "OCL"};
  return names[static_cast<int>(s)];
}

std::optional<Schema> parse_schema(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Schema::OCL); ++i)
    if (schema_name(static_cast<Schema>(i)) == s)
      return static_cast<Schema>(i);
  return std::nullopt;
}

bool is_closed_schema(Schema s) { return s == Schema::OL || s == Schema::OCL; }

std::string GeneratorSym::str() const {
  switch (kind) {
  case Kind::SepTwist:
    return "SEP(" + c1 + ")";
  case Kind::BP:
    return "BP(" + c1 + ", " + c2 + ")";
  default:
    return "SIP(" + c1 + ", " + c2 + ")";
  }
}

bool VerificationReport::ok() const {
  for (const auto &c : side_conditions)
    if (!c.pass)
      return false;
  if (!identity || !*identity)
    return false;
  for (const auto &c : homology)
    if (!c.pass)
      return false;
  for (const auto &c : extra)
    if (!c.pass)
      return false;
  return true;
}

namespace {
nlohmann::json checks_json(const std::vector<CheckResult> &v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto &c : v) {
    nlohmann::json o{{"check", c.name}, {"pass", c.pass}};
    if (!c.detail.empty())
      o["detail"] = c.detail;
    a.push_back(o);
  }
  return a;
}
} // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["schema"] = schema_name(schema);
  j["line"] = line;
  j["side_conditions"] = checks_json(side_conditions);
  j["identity"] = identity ? nlohmann::json(*identity ? "holds" : "fails") : nlohmann::json(nullptr);
  if (!witness.empty())
    j["witness"] = witness;
  j["homology"] = checks_json(homology);
  if (!extra.empty())
    j["extra"] = checks_json(extra);
  if (boundary_exponent)
    j["boundary_exponent"] = *boundary_exponent;
  j["ok"] = ok();
  return j;
}

// ---------------------------------------------------------------- parsing

void Workspace::define(const std::string &name, int line) {
  if (!valid_name(name))
    throw ParseError(line, "bad name '" + name + "'");
  if (name == "T" || name == "BP" || name == "SIP" || name == "SEP")
    throw ParseError(line, "reserved name '" + name + "'");
  if (!names_.insert(name).second)
    throw ParseError(line, "duplicate definition of '" + name + "'");
}

Workspace Workspace::parse(std::istream &in) {
  Workspace ws;
  std::string raw, line;
  int line_no = 0, start = 0;
  std::map<Schema, int> counters;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos)
      raw.resize(hash);
    std::string part = trim(raw);
    if (line.empty())
      start = line_no;
    if (!part.empty() && part.back() == '\\') {
      line += part.substr(0, part.size() - 1) + " ";
      continue;
    }
    line += part;
    std::string text = trim(line);
    line.clear();
    if (text.empty())
      continue;
    std::istringstream ls(text);
    std::string kw;
    ls >> kw;
    std::string rest = trim(text.substr(kw.size()));
    auto split_eq = [&](const std::string &s) {
      auto eq = s.find('=');
      if (eq == std::string::npos)
        throw ParseError(start, "expected '='");
      return std::pair{trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
    };
    if (kw == "surface") {
      if (ws.have_surface_)
        throw ParseError(start, "surface declared twice");
      int g = -1, n = -1;
      std::istringstream rs(rest);
      std::string tok;
      while (rs >> tok) {
        if (tok.rfind("g=", 0) == 0)
          g = std::stoi(tok.substr(2));
        else if (tok.rfind("n=", 0) == 0)
          n = std::stoi(tok.substr(2));
        else
          throw ParseError(start, "unknown surface field '" + tok + "'");
      }
      if (g < 1 || (n != 0 && n != 1))
        throw ParseError(start, "surface needs g>=1 and n in {0,1}");
      ws.G_ = SurfaceGroup::make(g, n);
      ws.have_surface_ = true;
    } else if (kw == "map") {
      auto [name, body] = split_eq(rest);
      ws.define(name, start);
      ws.maps_[name] = parse_expr(body, start);
    } else if (kw == "curve") {
      auto [name, body] = split_eq(rest);
      ws.define(name, start);
      CurveDef def;
      if (body.rfind("base ", 0) == 0) {
        def.target = trim(body.substr(5));
      } else if (body.rfind("apply ", 0) == 0) {
        auto to = body.rfind(" to ");
        if (to == std::string::npos)
          throw ParseError(start, "expected 'apply <expr> to <curve>'");
        def.transport = parse_expr(body.substr(6, to - 6), start);
        def.target = trim(body.substr(to + 4));
      } else {
        throw ParseError(start, "curve needs 'base <label>' or 'apply <expr> to <curve>'");
      }
      if (!valid_name(def.target))
        throw ParseError(start, "bad curve target '" + def.target + "'");
      ws.curves_[name] = def;
    } else if (kw == "gen") {
      auto [name, body] = split_eq(rest);
      ws.define(name, start);
      Expr e = parse_expr(body, start);
      GeneratorSym g;
      if (e.power != 1)
        throw ParseError(start, "generator definitions take no exponent");
      if (e.kind == Expr::Kind::BP)
        g = {GeneratorSym::Kind::BP, e.a, e.b};
      else if (e.kind == Expr::Kind::SIP)
        g = {GeneratorSym::Kind::SIP, e.a, e.b};
      else if (e.kind == Expr::Kind::SEP)
        g = {GeneratorSym::Kind::SepTwist, e.a, ""};
      else
        throw ParseError(start, "generator must be BP(..), SEP(..) or SIP(..)");
      ws.gens_[name] = g;
    } else if (kw == "word") {
      auto [name, body] = split_eq(rest);
      ws.define(name, start);
      ws.words_[name] = body;
    } else if (kw == "relation") {
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw ParseError(start, "relation needs ':'");
      std::string head = trim(rest.substr(0, colon)), body = trim(rest.substr(colon + 1));
      RelationInstance r;
      r.line = start;
      std::string sch = head, label;
      auto paren = head.find('(');
      std::string after;
      if (paren != std::string::npos) {
        auto close = head.find(')', paren);
        if (close == std::string::npos)
          throw ParseError(start, "unclosed parameter list");
        sch = trim(head.substr(0, paren));
        std::string plist = head.substr(paren + 1, close - paren - 1);
        std::replace(plist.begin(), plist.end(), ',', ' ');
        std::istringstream ps(plist);
        std::string p;
        while (ps >> p)
          r.params.push_back(p);
        after = trim(head.substr(close + 1));
      } else {
        std::istringstream hs(head);
        hs >> sch;
        std::getline(hs, after);
        after = trim(after);
      }
      auto s = parse_schema(sch);
      if (!s)
        throw ParseError(start, "unknown schema '" + sch + "'");
      r.schema = *s;
      int idx = ++counters[*s];
      r.id = after.empty() ? schema_name(*s) + "#" + std::to_string(idx) : after;
      auto eq = body.find("==");
      if (eq == std::string::npos)
        throw ParseError(start, "relation needs '=='");
      r.lhs = parse_expr(body.substr(0, eq), start);
      r.rhs = parse_expr(body.substr(eq + 2), start);
      ws.relations_.push_back(std::move(r));
    } else {
      throw ParseError(start, "unknown directive '" + kw + "'");
    }
  }
  if (!line.empty())
    throw ParseError(start, "dangling line continuation");
  if (!ws.relations_.empty() && !ws.have_surface_)
    throw ParseError(1, "missing 'surface' declaration");
  return ws;
}

Workspace Workspace::parse_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return parse(in);
}

Workspace Workspace::parse_string(const std::string &text) {
  std::istringstream in(text);
  return parse(in);
}

// ------------------------------------------------------------- evaluation

CurveSpec Workspace::curve(const std::string &name) {
  if (auto it = curve_cache_.find(name); it != curve_cache_.end())
    return it->second;
  auto def = curves_.find(name);
  if (def == curves_.end()) {
    if (names_.count(name))
      throw EvalError("'" + name + "' is not a curve");
    CurveLabel lab;
    try {
      lab = CurveLabel::parse(name);
      check_label(G_, lab);
    } catch (const std::exception &) {
      throw EvalError("unbound curve '" + name + "'");
    }
    return CurveSpec::standard(G_, lab);
  }
  if (!in_progress_.insert("curve:" + name).second)
    throw EvalError("cyclic definition through curve '" + name + "'");
  CurveSpec c;
  try {
    CurveSpec base = curve(def->second.target);
    c = def->second.transport ? base.transported(eval(*def->second.transport)) : base;
  } catch (...) {
    in_progress_.erase("curve:" + name);
    throw;
  }
  in_progress_.erase("curve:" + name);
  curve_cache_[name] = c;
  return c;
}

FreeAut Workspace::eval_generator(const GeneratorSym &g) {
  switch (g.kind) {
  case GeneratorSym::Kind::SepTwist:
    return sep_twist(curve(g.c1));
  case GeneratorSym::Kind::BP:
    return bp_map(curve(g.c1), curve(g.c2));
  default:
    return sip_comm(curve(g.c1), curve(g.c2));
  }
}

std::optional<GeneratorSym> Workspace::generator_def(const std::string &name) const {
  auto it = gens_.find(name);
  if (it == gens_.end())
    return std::nullopt;
  return it->second;
}

FreeAut Workspace::named(const std::string &name) {
  if (auto it = aut_cache_.find(name); it != aut_cache_.end())
    return it->second;
  if (!gens_.count(name) && !maps_.count(name)) {
    if (curves_.count(name))
      throw EvalError("'" + name + "' is a curve; use T[" + name + "] for its twist");
    throw EvalError("unbound name '" + name + "'");
  }
  if (!in_progress_.insert(name).second)
    throw EvalError("cyclic definition through '" + name + "'");
  FreeAut f;
  try {
    f = gens_.count(name) ? eval_generator(gens_.at(name)) : eval(maps_.at(name));
  } catch (...) {
    in_progress_.erase(name);
    throw;
  }
  in_progress_.erase(name);
  aut_cache_[name] = f;
  return f;
}

FreeAut Workspace::eval(const Expr &e) {
  if (!have_surface_ || G_.boundary_count != 1)
    throw EvalError("mapping classes need a 'surface g=<g> n=1' declaration");
  FreeAut f;
  switch (e.kind) {
  case Expr::Kind::Identity:
    f = FreeAut::identity(G_);
    break;
  case Expr::Kind::Twist:
    f = twist_about(curve(e.a), 1);
    break;
  case Expr::Kind::Name:
    f = named(e.a);
    break;
  case Expr::Kind::BP:
    f = eval_generator({GeneratorSym::Kind::BP, e.a, e.b});
    break;
  case Expr::Kind::SIP:
    f = eval_generator({GeneratorSym::Kind::SIP, e.a, e.b});
    break;
  case Expr::Kind::SEP:
    f = eval_generator({GeneratorSym::Kind::SepTwist, e.a, ""});
    break;
  case Expr::Kind::Product:
    f = FreeAut::identity(G_);
    for (const auto &x : e.factors)
      f = f * eval(x);
    break;
  }
  return e.power == 1 ? f : f.power(e.power);
}

Word Workspace::word(const std::string &name) {
  auto it = words_.find(name);
  if (it == words_.end())
    throw EvalError("unbound word '" + name + "'");
  try {
    return Word::parse(G_.alphabet, it->second);
  } catch (const AlphabetError &err) {
    throw EvalError("word '" + name + "': " + err.what());
  }
}

Word Workspace::eval_word(const Expr &e) {
  Word w(G_.alphabet);
  switch (e.kind) {
  case Expr::Kind::Identity:
    break;
  case Expr::Kind::Name:
    w = word(e.a);
    break;
  case Expr::Kind::Product:
    for (const auto &x : e.factors)
      w = w * eval_word(x);
    break;
  default:
    throw EvalError("only word names may appear in surface-group relations");
  }
  return w.power(e.power);
}

// ------------------------------------------------------------ verification

void Workspace::collect_generators(const Expr &e, std::vector<GeneratorSym> &out,
                                   std::vector<std::string> &names) {
  switch (e.kind) {
  case Expr::Kind::BP:
    out.push_back({GeneratorSym::Kind::BP, e.a, e.b});
    names.push_back(out.back().str());
    break;
  case Expr::Kind::SIP:
    out.push_back({GeneratorSym::Kind::SIP, e.a, e.b});
    names.push_back(out.back().str());
    break;
  case Expr::Kind::SEP:
    out.push_back({GeneratorSym::Kind::SepTwist, e.a, ""});
    names.push_back(out.back().str());
    break;
  case Expr::Kind::Name:
    if (auto g = generator_def(e.a)) {
      out.push_back(*g);
      names.push_back(e.a);
    } else if (!maps_.count(e.a)) {
      throw EvalError("unbound name '" + e.a + "'");
    }
    break;
  case Expr::Kind::Product:
    for (const auto &x : e.factors)
      collect_generators(x, out, names);
    break;
  default:
    break;
  }
}

void Workspace::check_generator(const GeneratorSym &g, std::vector<CheckResult> &out) {
  switch (g.kind) {
  case GeneratorSym::Kind::SepTwist: {
    HomologyClass v = curve_class(curve(g.c1));
    out.push_back({g.str() + ": curve null-homologous", v.isZero(), ""});
    break;
  }
  case GeneratorSym::Kind::BP: {
    HomologyClass u = curve_class(curve(g.c1)), v = curve_class(curve(g.c2));
    out.push_back({g.str() + ": classes agree up to sign", u == v || u == -v, ""});
    break;
  }
  default: {
    Int w = alg_int(curve_class(curve(g.c1)), curve_class(curve(g.c2)));
    out.push_back({g.str() + ": algebraic intersection 0", w == 0,
                   w == 0 ? "" : "i = " + std::to_string(w)});
    break;
  }
  }
}

namespace {

std::size_t top_factor_count(const Expr &e) {
  if (e.kind == Expr::Kind::Product && e.power == 1)
    return e.factors.size();
  return e.kind == Expr::Kind::Identity ? 0 : 1;
}

std::size_t expected_params(Schema s) {
  switch (s) {
  case Schema::CL:
    return 4;
  case Schema::WH:
  case Schema::CS:
    return 3;
  default:
    return 0;
  }
}

} // namespace

void Workspace::verify_closed(const RelationInstance &r, VerificationReport &rep) {
  SurfaceGroup Gc = closed_group();
  std::size_t nl = top_factor_count(r.lhs), nr = top_factor_count(r.rhs);
  bool shape = r.schema == Schema::OL ? (nl == 3 && nr == 0) : (nl == 2 && nr == 1);
  rep.side_conditions.push_back(
      {"shape", shape, r.schema == Schema::OL ? "expects x * y * z == 1" : "expects x * y == z"});
  if (!r.params.empty())
    rep.side_conditions.push_back({"arity", false, "no parameters expected"});
  std::vector<Expr> parts;
  for (const Expr *side : {&r.lhs, &r.rhs}) {
    if (side->kind == Expr::Kind::Product && side->power == 1)
      parts.insert(parts.end(), side->factors.begin(), side->factors.end());
    else if (side->kind != Expr::Kind::Identity)
      parts.push_back(*side);
  }
  try {
    for (const auto &p : parts) {
      Word w = eval_word(p);
      rep.side_conditions.push_back({p.str() + ": nontrivial in the closed group",
                                     !is_identity_closed(Gc, w), ""});
    }
  } catch (const std::exception &err) {
    rep.side_conditions.push_back({"bindings", false, err.what()});
  }
  for (const auto &c : rep.side_conditions)
    if (!c.pass)
      return;
  Word rel = eval_word(r.lhs) * eval_word(r.rhs).inverse();
  rep.homology.push_back({"relation word abelianizes to 0", abelianize(Gc, rel).isZero(), ""});
  bool holds = is_identity_closed(Gc, rel);
  rep.identity = holds;
  if (!holds)
    rep.witness = "relation word reduces to " + short_word(dehn_reduce(Gc, rel));
}

VerificationReport Workspace::verify(const RelationInstance &r) {
  VerificationReport rep;
  rep.id = r.id;
  rep.schema = r.schema;
  rep.line = r.line;
  if (is_closed_schema(r.schema)) {
    verify_closed(r, rep);
    return rep;
  }
  if (r.params.size() != expected_params(r.schema)) {
    rep.side_conditions.push_back({"arity", false,
                                   "expected " + std::to_string(expected_params(r.schema)) +
                                       " parameters"});
    return rep;
  }
  std::vector<GeneratorSym> gens;
  std::vector<std::string> labels;
  try {
    if (!have_surface_ || G_.boundary_count != 1)
      throw EvalError("mapping-class relations need 'surface g=<g> n=1'");
    collect_generators(r.lhs, gens, labels);
    collect_generators(r.rhs, gens, labels);
    for (const auto &g : gens)
      check_generator(g, rep.side_conditions);
  } catch (const std::exception &err) {
    rep.side_conditions.push_back({"bindings", false, err.what()});
  }
  for (const auto &c : rep.side_conditions)
    if (!c.pass)
      return rep;

  FreeAut L, R;
  try {
    L = eval(r.lhs);
    R = eval(r.rhs);
  } catch (const std::exception &err) {
    rep.side_conditions.push_back({"evaluation", false, err.what()});
    return rep;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    rep.homology.push_back({labels[i] + " in Torelli", is_torelli(eval_generator(gens[i])), ""});
  FreeAut relword = L * R.inverse();
  rep.homology.push_back({"relation word acts trivially on homology", is_torelli(relword), ""});

  int d = first_difference(L, R);
  rep.identity = d == 0;
  if (d != 0) {
    const auto &alpha = *G_.alphabet;
    rep.witness = "generator " + alpha.name(d) + ": lhs -> " + short_word(L.images()[d - 1]) +
                  " ; rhs -> " + short_word(R.images()[d - 1]);
  }

  try {
    switch (r.schema) {
    case Schema::CL: {
      FreeAut y = bp_map(curve(r.params[0]), curve(r.params[1]));
      FreeAut lhs = conjugate_by(y, twist_about(curve(r.params[2])));
      FreeAut rhs = twist_about(curve(r.params[3]));
      rep.extra.push_back({"alternate derivation: BP(y1,y2) T[x1] BP(y1,y2)^-1 == T[x2]",
                           equal(lhs, rhs), ""});
      FreeAut Tb = boundary_twist(G_);
      for (long k = -4; k <= 4; ++k)
        if (equal(L, R * Tb.power(k))) {
          rep.boundary_exponent = k;
          break;
        }
      rep.extra.push_back({"boundary exponent k = 0", rep.boundary_exponent == 0L, ""});
      break;
    }
    case Schema::L: {
      if (top_factor_count(r.rhs) != 1 || r.rhs.kind == Expr::Kind::Product) {
        rep.extra.push_back({"right side is a single boundary twist", false, ""});
        break;
      }
      Expr one = r.rhs;
      one.power = 1;
      FreeAut Tb = eval(one);
      for (long k = -4; k <= 4; ++k)
        if (equal(L, Tb.power(k))) {
          rep.boundary_exponent = k;
          break;
        }
      rep.extra.push_back({"boundary exponent k = 1", rep.boundary_exponent == 1L, ""});
      break;
    }
    case Schema::WH:
    case Schema::CS: {
      Word x = word(r.params[0]), y = word(r.params[1]), z = word(r.params[2]);
      bool ok = r.schema == Schema::WH ? verify_witt_hall(x, y, z)
                                       : verify_commutator_shuffle(x, y, z);
      rep.extra.push_back({"free-group identity on the bound words", ok, ""});
      break;
    }
    default:
      break;
    }
  } catch (const std::exception &err) {
    rep.extra.push_back({"schema check", false, err.what()});
  }
  return rep;
}

RelationInstance Workspace::mutate(const RelationInstance &r) {
  RelationInstance m = r;
  m.id = r.id + "~mut";
  if (m.lhs.kind == Expr::Kind::Product && m.lhs.power == 1)
    m.lhs.factors[0].power = -m.lhs.factors[0].power;
  else
    m.lhs.power = -m.lhs.power;
  return m;
}

bool CorpusSummary::all_pass() const {
  for (const auto &r : reports)
    if (!r.ok())
      return false;
  return true;
}

nlohmann::json CorpusSummary::to_json() const {
  nlohmann::json j;
  j["instances"] = nlohmann::json::array();
  std::size_t pass = 0;
  for (const auto &r : reports) {
    j["instances"].push_back(r.to_json());
    pass += r.ok();
  }
  j["total"] = reports.size();
  j["passed"] = pass;
  j["ok"] = all_pass();
  return j;
}

CorpusSummary run_corpus(Workspace &ws) {
  CorpusSummary s;
  for (const auto &r : ws.relations())
    s.reports.push_back(ws.verify(r));
  return s;
}

CorpusSummary run_corpus(const std::string &path) {
  Workspace ws = Workspace::parse_file(path);
  return run_corpus(ws);
}

CorpusSummary run_mutations(Workspace &ws) {
  CorpusSummary s;
  for (const auto &r : ws.relations())
    s.reports.push_back(ws.verify(Workspace::mutate(r)));
  return s;
}

} // namespace torelli
