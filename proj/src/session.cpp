#include "nakayama/session.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>

#include "nakayama/frobenius.hpp"
#include "nakayama/hopf_io.hpp"
#include "nakayama/manin.hpp"

namespace nakayama {

using linalg::Matrix;

const AlgebraDecl* Session::algebra(const std::string& name) const {
  for (const auto& a : algebras)
    if (a.name == name) return &a;
  return nullptr;
}
const HopfDecl* Session::hopf(const std::string& name) const {
  for (const auto& h : hopfs)
    if (h.name == name) return &h;
  return nullptr;
}
const CoactionDecl* Session::coaction(const std::string& name) const {
  for (const auto& c : coactions)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

enum class Kind { Algebra, Hopf, Coaction };

struct CommandSpec {
  Kind kind;
  std::set<std::string> flags;     // accepted, besides `out`
  std::set<std::string> required;
  std::set<std::string> switches;  // flags without a value
};

const std::map<std::string, CommandSpec>& specs() {
  static const std::map<std::string, CommandSpec> table = {
      {"dual", {Kind::Algebra, {}, {}, {}}},
      {"hilbert", {Kind::Algebra, {"max-deg"}, {}, {}}},
      {"koszul-check", {Kind::Algebra, {"max-deg"}, {}, {}}},
      {"nakayama-ext", {Kind::Algebra, {}, {}, {}}},
      {"nakayama-alg", {Kind::Algebra, {"d"}, {}, {}}},
      {"is-r-nakayama", {Kind::Algebra, {"d"}, {}, {}}},
      {"qij", {Kind::Algebra, {}, {}, {}}},
      {"hopf-verify", {Kind::Hopf, {}, {}, {}}},
      {"grouplikes", {Kind::Hopf, {}, {}, {}}},
      {"s2-order", {Kind::Hopf, {}, {}, {}}},
      {"conj", {Kind::Hopf, {"element"}, {"element"}, {}}},
      {"save-hopf", {Kind::Hopf, {"path"}, {"path"}, {}}},
      {"verify-coaction", {Kind::Coaction, {}, {}, {}}},
      {"hcodet", {Kind::Coaction, {}, {}, {}}},
      {"lemma31", {Kind::Coaction, {}, {}, {}}},
      {"check-main-theorem", {Kind::Coaction, {"d"}, {}, {}}},
      {"inner-faithful", {Kind::Coaction, {}, {}, {}}},
      {"solve-coactions", {Kind::Algebra, {"by", "cap"}, {"by"}, {}}},
      {"manin", {Kind::Algebra, {}, {}, {}}},
      {"sl-relations", {Kind::Algebra, {}, {}, {}}},
      {"consequence", {Kind::Algebra, {"target", "sl", "max-deg"}, {"target"}, {"sl"}}},
  };
  return table;
}

// --- scanner ----------------------------------------------------------------

class Scanner {
 public:
  explicit Scanner(std::string_view text) : s_(text) {}

  struct Pos {
    std::size_t off;
    int line, col;
  };

  Pos pos() const { return {i_, line_, col_}; }
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[i_]; }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  // Skips blanks and comments; newlines too unless `stop_at_newline`.
  void skip(bool stop_at_newline = false) {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '\n' && !stop_at_newline) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg, Pos p) const { throw ParseError(msg, p.line, p.col); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos()); }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
  }

  // Identifier-like word (letters, digits, _, -, ').
  std::string word(const char* what) {
    skip();
    Pos p = pos();
    std::string out;
    while (!at_end() && word_char(peek())) {
      out += peek();
      advance();
    }
    if (out.empty()) fail(std::string("expected ") + what, p);
    return out;
  }

  // A keyword, optionally followed by ':' with no blank in between.
  void keyword(const std::string& kw) {
    skip();
    Pos p = pos();
    std::string got;
    while (!at_end() && (word_char(peek()) || peek() == ':')) {
      got += peek();
      advance();
      if (got.back() == ':') break;
    }
    if (got != kw) fail("expected '" + kw + "'" + (got.empty() ? "" : ", found '" + got + "'"), p);
  }

  void punct(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_punct(char c) {
    skip();
    if (peek() != c) return false;
    advance();
    return true;
  }

  long integer(const char* what) {
    skip();
    Pos p = pos();
    std::string digits;
    if (peek() == '-') {
      digits += '-';
      advance();
    }
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    if (digits.empty() || digits == "-") fail(std::string("expected ") + what, p);
    try {
      return std::stol(digits);
    } catch (const std::out_of_range&) {
      fail("integer out of range", p);
    }
  }

  std::string quoted() {
    skip(true);
    Pos p = pos();
    if (peek() != '"') fail("expected a quoted string", p);
    advance();
    std::string out;
    while (!at_end() && peek() != '"' && peek() != '\n') {
      out += peek();
      advance();
    }
    if (peek() != '"') fail("unterminated string", p);
    advance();
    return out;
  }

  // Non-blank run on the current line.
  std::string token_on_line(const char* what) {
    skip(true);
    Pos p = pos();
    std::string out;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '#') {
      out += peek();
      advance();
    }
    if (out.empty()) fail(std::string("expected ") + what, p);
    return out;
  }

  // Raw text up to (not including) one of `stops` at parenthesis depth 0.
  std::pair<std::string, Pos> raw_until(std::string_view stops) {
    skip();
    Pos start = pos();
    std::string out;
    int depth = 0;
    while (!at_end()) {
      char c = peek();
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      if (c == '(') ++depth;
      if (c == ')') --depth;
      out += c;
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return {out, start};
  }

  bool at_line_end() {
    skip(true);
    return at_end() || peek() == '\n';
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

// Re-anchors a ParseError raised on a substring starting at `p`.
[[noreturn]] void relocate(const ParseError& e, Scanner::Pos p) {
  std::string msg = e.what();
  auto cut = msg.find(": ");
  if (cut != std::string::npos) msg = msg.substr(cut + 2);
  if (e.line() == 1) throw ParseError(msg, p.line, p.col + e.column() - 1);
  throw ParseError(msg, p.line + e.line() - 1, e.column());
}

template <class F>
auto at(Scanner::Pos p, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    relocate(e, p);
  } catch (const AlgebraError& e) {
    throw ParseError(e.what(), p.line, p.col);
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::filesystem::path base) : sc_(text) { s_.base_dir = std::move(base); }

  Session run() {
    bool seen_other = false;
    while (true) {
      sc_.skip();
      if (sc_.at_end()) break;
      auto p = sc_.pos();
      std::string kw = sc_.word("a declaration or 'run'");
      if (kw == "field") {
        if (seen_other || field_set_) sc_.fail("'field' must come first and only once", p);
        parse_field();
      } else if (kw == "algebra") {
        parse_algebra();
      } else if (kw == "hopf") {
        parse_hopf();
      } else if (kw == "coaction") {
        parse_coaction();
      } else if (kw == "run") {
        parse_run(p);
      } else {
        sc_.fail("unknown keyword '" + kw + "'", p);
      }
      if (kw != "field") seen_other = true;
    }
    return std::move(s_);
  }

 private:
  void parse_field() {
    auto p = sc_.pos();
    std::string f = sc_.word("a field name");
    if (f == "Q") s_.field = Field::rationals();
    else if (f == "Qt") s_.field = Field::rational_functions();
    else if (f == "cyclotomic" || f == "cyclotomic_t") {
      auto np = sc_.pos();
      long n = sc_.integer("cyclotomic order");
      if (n < 1 || n > 1000) sc_.fail("cyclotomic order out of range", np);
      s_.field = f == "cyclotomic" ? Field::cyclotomic(static_cast<int>(n))
                                   : Field::rational_functions_cyclotomic(static_cast<int>(n));
    } else {
      sc_.fail("unknown field '" + f + "' (expected Q, Qt, cyclotomic N or cyclotomic_t N)", p);
    }
    field_set_ = true;
  }

  std::string fresh_name() {
    auto p = sc_.pos();
    std::string name = sc_.word("a name");
    if (!std::isalpha(static_cast<unsigned char>(name[0])) ||
        name.find_first_of("-'") != std::string::npos)
      sc_.fail("invalid name '" + name + "'", p);
    if (names_.count(name)) sc_.fail("name '" + name + "' is already declared", p);
    names_.insert(name);
    return name;
  }

  void parse_algebra() {
    auto decl = sc_.pos();
    std::string name = fresh_name();
    if (sc_.try_punct('=')) {
      parse_skew(name, decl);
      return;
    }
    sc_.punct('{');
    sc_.keyword("generators:");
    std::vector<std::string> gens;
    do {
      auto p = sc_.pos();
      std::string g = sc_.word("a generator name");
      if (std::find(gens.begin(), gens.end(), g) != gens.end()) sc_.fail("duplicate generator '" + g + "'", p);
      gens.push_back(g);
    } while (sc_.try_punct(','));
    sc_.keyword("relations:");
    std::vector<NCPoly> rels;
    while (true) {
      auto [text, p] = sc_.raw_until(";}");
      if (!text.empty())
        rels.push_back(at(p, [&, &text = text] { return parse_ncpoly(text, gens, s_.field); }));
      if (sc_.try_punct(';')) continue;
      break;
    }
    sc_.punct('}');
    GradedPresentation P = at(decl, [&] { return GradedPresentation(gens, rels, s_.field); });
    s_.algebras.push_back(AlgebraDecl{name, std::move(P), std::nullopt});
  }

  void parse_skew(const std::string& name, Scanner::Pos decl) {
    sc_.keyword("skew");
    auto np = sc_.pos();
    long n = sc_.integer("the number of generators");
    if (n < 1 || n > 9) sc_.fail("skew rings take 1 to 9 generators", np);
    const auto un = static_cast<std::size_t>(n);
    Matrix p(un, un, Scalar::one(s_.field));
    sc_.punct('{');
    while (!sc_.try_punct('}')) {
      auto kp = sc_.pos();
      std::string key = sc_.word("an entry like p12");
      if (key.size() != 3 || key[0] != 'p' || !std::isdigit(static_cast<unsigned char>(key[1])) ||
          !std::isdigit(static_cast<unsigned char>(key[2])))
        sc_.fail("expected an entry like p12, found '" + key + "'", kp);
      std::size_t i = static_cast<std::size_t>(key[1] - '1'), j = static_cast<std::size_t>(key[2] - '1');
      if (i >= un || j >= un || i >= j) sc_.fail("entry " + key + " needs 1 <= i < j <= " + std::to_string(n), kp);
      sc_.punct(':');
      auto [text, vp] = sc_.raw_until(";}");
      Scalar v = at(vp, [&, &text = text] { return Scalar::parse(text, s_.field); });
      if (v.is_zero()) sc_.fail("p_ij must be nonzero", vp);
      p(i, j) = v;
      p(j, i) = v.inverse();
      sc_.try_punct(';');
    }
    SkewData sd = at(decl, [&] { return skew_tools(p, s_.field); });
    s_.algebras.push_back(AlgebraDecl{name, std::move(sd.presentation), p});
  }

  void parse_hopf() {
    std::string name = fresh_name();
    sc_.punct('=');
    auto p = sc_.pos();
    std::string kind = sc_.word("a Hopf algebra constructor");
    const Field& f = s_.field;
    auto small = [&](const char* what) {
      auto ip = sc_.pos();
      long v = sc_.integer(what);
      if (v < 1 || v > 64) sc_.fail(std::string(what) + " out of range", ip);
      return static_cast<int>(v);
    };
    std::optional<HopfAlgebra> K;
    if (kind == "group_cyclic") {
      int n = small("group order");
      K = group_cyclic(f, n);
    } else if (kind == "group_abelian") {
      std::vector<int> orders{small("factor order")};
      while (!sc_.at_line_end()) orders.push_back(small("factor order"));
      K = at(p, [&] { return group_abelian(f, orders); });
    } else if (kind == "dual_group") {
      int n = small("group order");
      K = dual_group(f, n);
    } else if (kind == "taft") {
      int n = small("taft order");
      auto qp = sc_.pos();
      std::string q = sc_.token_on_line("a root of unity");
      Scalar qs = at(qp, [&] { return Scalar::parse(q, f); });
      K = at(qp, [&] { return taft(f, n, qs); });
    } else if (kind == "sweedler") {
      K = at(p, [&] { return sweedler(f); });
    } else if (kind == "from_file") {
      auto fp = sc_.pos();
      std::string path = sc_.quoted();
      std::filesystem::path full = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path) : s_.base_dir / path;
      K = at(fp, [&] { return load_hopf(full, f); });
    } else {
      sc_.fail("unknown Hopf algebra constructor '" + kind + "'", p);
    }
    s_.hopfs.push_back(HopfDecl{name, std::move(*K)});
  }

  void parse_coaction() {
    std::string name = fresh_name();
    sc_.keyword("on");
    auto ap = sc_.pos();
    std::string alg = sc_.word("an algebra name");
    const AlgebraDecl* A = s_.algebra(alg);
    if (!A) sc_.fail("undeclared algebra '" + alg + "'", ap);
    sc_.keyword("by");
    auto hp = sc_.pos();
    std::string hop = sc_.word("a Hopf algebra name");
    const HopfDecl* H = s_.hopf(hop);
    if (!H) sc_.fail("undeclared Hopf algebra '" + hop + "'", hp);
    sc_.punct('{');
    sc_.keyword("y:");
    auto mp = sc_.pos();
    sc_.punct('[');
    HMatrix Y;
    do {
      sc_.punct('[');
      Y.emplace_back();
      do {
        auto [text, p] = sc_.raw_until(",]");
        if (text.empty()) sc_.fail("empty matrix entry", p);
        Y.back().push_back(at(p, [&, &text = text] { return H->K.parse_element(text); }));
      } while (sc_.try_punct(','));
      sc_.punct(']');
    } while (sc_.try_punct(','));
    sc_.punct(']');
    sc_.punct('}');
    const auto n = static_cast<std::size_t>(A->P.generators());
    if (Y.size() != n) sc_.fail("coaction matrix must be " + std::to_string(n) + "x" + std::to_string(n), mp);
    for (const auto& row : Y)
      if (row.size() != n) sc_.fail("coaction matrix must be " + std::to_string(n) + "x" + std::to_string(n), mp);
    s_.coactions.push_back(CoactionDecl{name, alg, hop, std::move(Y)});
  }

  void parse_run(Scanner::Pos start) {
    auto cp = sc_.pos();
    std::string cmd = sc_.word("a command name");
    auto it = specs().find(cmd);
    if (it == specs().end()) sc_.fail("unknown command '" + cmd + "'", cp);
    const CommandSpec& spec = it->second;
    auto tp = sc_.pos();
    std::string target = sc_.word("a target name");
    bool ok = (spec.kind == Kind::Algebra && s_.algebra(target)) || (spec.kind == Kind::Hopf && s_.hopf(target)) ||
              (spec.kind == Kind::Coaction && s_.coaction(target));
    if (!ok) {
      const char* what = spec.kind == Kind::Algebra ? "algebra" : spec.kind == Kind::Hopf ? "Hopf algebra" : "coaction";
      sc_.fail("'" + cmd + "' needs a declared " + std::string(what) + ", '" + target + "' is not one", tp);
    }
    CommandDecl c{cmd, target, {}, start.line, start.col};
    while (!sc_.at_line_end()) {
      auto fp = sc_.pos();
      std::string flag = sc_.token_on_line("a flag");
      if (flag.rfind("--", 0) != 0) sc_.fail("expected a --flag, found '" + flag + "'", fp);
      flag = flag.substr(2);
      if (flag != "out" && !spec.flags.count(flag)) sc_.fail("'" + cmd + "' does not take --" + flag, fp);
      if (c.flags.count(flag)) sc_.fail("--" + flag + " given twice", fp);
      std::string value = "true";
      if (!spec.switches.count(flag)) {
        sc_.skip(true);
        if (sc_.at_line_end()) sc_.fail("--" + flag + " needs a value", fp);
        value = sc_.peek() == '"' ? sc_.quoted() : sc_.token_on_line("a flag value");
      }
      c.flags[flag] = value;
    }
    for (const auto& r : spec.required)
      if (!c.flags.count(r)) sc_.fail("'" + cmd + "' needs --" + r, cp);
    if (c.flags.count("by") && !s_.hopf(c.flags["by"])) sc_.fail("undeclared Hopf algebra '" + c.flags["by"] + "'", cp);
    s_.commands.push_back(std::move(c));
  }

  Scanner sc_;
  Session s_;
  bool field_set_ = false;
  std::set<std::string> names_;
};

// --- command implementations -------------------------------------------------

Json poly_list(const GradedPresentation& P, const std::vector<NCPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(P.to_string(p));
  return out;
}

Json hm_json(const HopfAlgebra& K, const HMatrix& Y) { return Json(hm_strings(K, Y)); }

int flag_int(const CommandDecl& c, const std::string& key, int fallback) {
  auto it = c.flags.find(key);
  if (it == c.flags.end()) return fallback;
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw ParseError("--" + key + " expects an integer", c.line, c.column);
  }
}

Json frobenius_json(const FDAlgebra& E, const FrobeniusCheck& fc) {
  Json j;
  j["top_degree"] = E.top_degree();
  j["dims"] = E.dims();
  Json ranks = Json::array();
  for (const auto& d : fc.degrees) ranks.push_back(d.rank);
  j["pairing_ranks"] = ranks;
  return j;
}

void add_frobenius_checks(Report& r, const FrobeniusCheck& fc) {
  r.add(Check{"frobenius.top_dim", fc.top_dim == 1, std::to_string(fc.top_dim), "1", ""});
  for (const auto& d : fc.degrees) {
    std::string w;
    for (const auto& s : d.witness) w += (w.empty() ? "" : ", ") + s.to_string();
    r.add(Check{"frobenius.degree_" + std::to_string(d.degree), d.pass,
                std::to_string(d.rows) + "x" + std::to_string(d.cols) + " rank " + std::to_string(d.rank), "",
                w.empty() ? "" : "kernel [" + w + "]"});
  }
}

// Coaction commands other than verify-coaction first need a verified Y.
bool require_verified(Report& r, const AlgebraDecl& A, const HopfDecl& H, const CoactionDecl& C) {
  CheckList v = verify_comodule_algebra(A.P, H.K, C.Y);
  if (v.pass()) return true;
  r.add(v);
  return false;
}

void run_algebra(Report& r, const Session& s, const CommandDecl& c, const RunOptions& opt) {
  const AlgebraDecl& A = *s.algebra(c.target);
  const GradedPresentation& P = A.P;
  const std::string& cmd = c.name;
  const int default_deg = opt.max_deg.value_or(kDefaultDegreeCap);

  if (cmd == "dual") {
    GradedPresentation D = koszul_dual(P);
    GradedPresentation DD = koszul_dual(D);
    r.result["generators"] = D.names();
    r.result["relations"] = poly_list(D, D.relations());
    r.add(Check{"dual.double_dual", relation_span_equal(DD, P), "", "", ""});
  } else if (cmd == "hilbert") {
    int d = flag_int(c, "max-deg", default_deg);
    GradedPresentation Q = d > P.degree_cap() ? P.with_degree_cap(d) : P;
    r.result["max_deg"] = d;
    r.result["hilbert"] = hilbert_series(Q, d);
  } else if (cmd == "koszul-check") {
    int d = flag_int(c, "max-deg", default_deg);
    GradedPresentation Q = d > P.degree_cap() ? P.with_degree_cap(d) : P;
    KoszulNumericResult k = koszul_numeric_check(Q, d);
    Check ch{"koszul.numeric", k.pass, "", "", ""};
    if (!k.pass) ch.witness = "degree " + std::to_string(*k.first_failing_degree);
    r.add(ch);
    r.result["max_deg"] = d;
    r.result["hilbert"] = k.hilbert_a;
    r.result["hilbert_dual"] = k.hilbert_dual;
    r.result["product"] = k.product;
    r.result["first_failing_degree"] = k.first_failing_degree ? Json(*k.first_failing_degree) : Json(nullptr);
  } else if (cmd == "nakayama-ext" || cmd == "nakayama-alg" || cmd == "is-r-nakayama") {
    GradedPresentation Ed = koszul_dual(P);
    FDAlgebra E = finite_dim_algebra(Ed, Ed.degree_cap());
    FrobeniusCheck fc = frobenius_check(E);
    add_frobenius_checks(r, fc);
    r.result = frobenius_json(E, fc);
    if (!fc.pass) return;
    FrobeniusData F = dual_bases_and_nakayama(E);
    r.result["top_word"] = word_to_string(F.top_word, Ed.names());
    r.result["alpha"] = matrix_json(F.alpha);
    if (cmd == "nakayama-ext") return;
    int d = flag_int(c, "d", E.top_degree());
    Matrix M = nakayama_of_A(F.alpha, d);
    r.result["d"] = d;
    r.result["mu_A"] = matrix_json(M);
    auto rn = is_r_nakayama(M);
    r.result["r_nakayama"] = rn ? Json(rn->to_string()) : Json(nullptr);
    if (cmd == "is-r-nakayama")
      r.add(Check{"r_nakayama", rn.has_value(), rn ? rn->to_string() : "none", "", ""});
  } else if (cmd == "qij") {
    if (!A.skew_p) throw Unsupported("qij needs an algebra declared with 'skew'");
    SkewData sd = skew_tools(*A.skew_p, s.field);
    r.result["p"] = matrix_json(*A.skew_p);
    r.result["q"] = matrix_json(sd.q);
    Json orders = Json::array();
    for (const auto& row : sd.orders) {
      Json jr = Json::array();
      for (const auto& o : row) jr.push_back(o ? Json(*o) : Json("infinite"));
      orders.push_back(jr);
    }
    r.result["orders"] = orders;
  } else if (cmd == "solve-coactions") {
    const HopfDecl& H = *s.hopf(c.flags.at("by"));
    int cap = flag_int(c, "cap", static_cast<int>(kDefaultPatternCap));
    if (cap < 1) throw InvalidArgument("--cap must be positive");
    SolveResult sr = solve_coactions(P, H.K, static_cast<std::size_t>(cap));
    Json list = Json::array();
    for (std::size_t i = 0; i < sr.coactions.size(); ++i) {
      list.push_back(hm_json(H.K, sr.coactions[i]));
      r.add(Check{"solve.verified_" + std::to_string(i + 1), verify_comodule_algebra(P, H.K, sr.coactions[i]).pass(),
                  "", "", ""});
    }
    r.result["hopf"] = H.name;
    r.result["patterns"] = sr.patterns;
    r.result["partial"] = sr.partial;
    r.result["notes"] = sr.notes;
    r.result["coactions"] = list;
  } else if (cmd == "manin" || cmd == "sl-relations") {
    MatrixBialgebraPresentation M = cmd == "manin" ? manin_matrix_relations(P) : sl_relation_set(P);
    r.result["generators"] = M.names;
    Json rels = Json::array();
    for (const auto& p : M.relations) rels.push_back(M.to_string(p));
    r.result["relations"] = rels;
    r.result["raw_count"] = M.raw_count;
    r.result["codeterminant"] = M.codeterminant ? Json(M.to_string(*M.codeterminant)) : Json(nullptr);
    if (M.inhomogeneous) r.result["inhomogeneous"] = M.to_string(*M.inhomogeneous);
    r.result["comult"] = "matrix";
    r.result["counit"] = "kronecker";
  } else if (cmd == "consequence") {
    bool sl = c.flags.count("sl") > 0;
    MatrixBialgebraPresentation M = sl ? sl_relation_set(P) : manin_matrix_relations(P);
    NCPoly target = [&] {
      try {
        return M.parse(c.flags.at("target"));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in --target: ") + e.what(), c.line, c.column);
      }
    }();
    int cap = flag_int(c, "max-deg", default_deg);
    bool ok = consequence_check(M, target, cap);
    r.add(Check{sl ? "consequence.sl" : "consequence.manin", ok, M.to_string(target), "", ""});
  }
}

void run_hopf(Report& r, const Session& s, const CommandDecl& c) {
  const HopfAlgebra& K = s.hopf(c.target)->K;
  const std::string& cmd = c.name;
  r.result["dim"] = K.dim();
  if (cmd == "hopf-verify") {
    r.add(hopf_verify(K));
    auto inv = K.antipode_matrix().try_inverse();
    r.add(Check{"hopf.antipode_invertible", inv.has_value(), "", "", ""});
  } else if (cmd == "grouplikes") {
    GrouplikeResult g = grouplikes(K);
    Json list = Json::array();
    const auto dim = static_cast<long>(K.dim());
    for (const auto& x : g.grouplikes) {
      Json e;
      e["element"] = K.to_string(x.element);
      e["order"] = x.order ? Json(*x.order) : Json(nullptr);
      list.push_back(e);
      r.add(Check{"grouplike.order_divides_dim", x.order && dim % *x.order == 0, K.to_string(x.element),
                  x.order ? std::to_string(*x.order) : "none", ""});
    }
    r.result["grouplikes"] = list;
    r.result["complete"] = g.complete;
    r.result["method"] = g.method;
  } else if (cmd == "s2-order") {
    SquaredAntipode sq = s_squared(K);
    r.result["order"] = sq.order ? Json(*sq.order) : Json(nullptr);
    r.result["map"] = matrix_json(sq.map);
    const auto bound = 2 * static_cast<long>(K.dim());
    r.add(Check{"s2.order_divides_2dim", sq.order && bound % *sq.order == 0,
                sq.order ? std::to_string(*sq.order) : "none", std::to_string(bound), ""});
  } else if (cmd == "conj") {
    HopfElement g = [&] {
      try {
        return K.parse_element(c.flags.at("element"));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in --element: ") + e.what(), c.line, c.column);
      }
    }();
    ConjugationAutomorphism ca = conj_auto(K, g);
    r.add(ca.checks);
    r.result["element"] = K.to_string(g);
    Json images = Json::array();
    for (std::size_t j = 0; j < K.dim(); ++j) images.push_back(K.to_string(K.apply(ca.map, K.basis(j))));
    r.result["images"] = images;
  } else if (cmd == "save-hopf") {
    std::filesystem::path p = c.flags.at("path");
    if (p.is_relative()) p = s.base_dir / p;
    save_hopf(K, p);
    r.result["path"] = c.flags.at("path");
  }
}

void run_coaction(Report& r, const Session& s, const CommandDecl& c) {
  const CoactionDecl& C = *s.coaction(c.target);
  const AlgebraDecl& A = *s.algebra(C.algebra);
  const HopfDecl& H = *s.hopf(C.hopf);
  const HopfAlgebra& K = H.K;
  const std::string& cmd = c.name;
  r.result["algebra"] = A.name;
  r.result["hopf"] = H.name;
  r.result["y"] = hm_json(K, C.Y);
  if (cmd == "verify-coaction") {
    r.add(verify_comodule_algebra(A.P, K, C.Y));
    return;
  }
  if (!require_verified(r, A, H, C)) return;
  if (cmd == "hcodet" || cmd == "lemma31") {
    DualCoaction d = induced_dual_coaction(A.P, K, C.Y);
    r.result["D"] = K.to_string(d.D);
    r.add(hcodet_checks(K, d.D));
    if (cmd == "lemma31") {
      r.result["F"] = hm_json(K, d.F);
      r.result["G"] = hm_json(K, d.G);
      r.result["alpha"] = matrix_json(d.frob.alpha);
      r.add(lemma31_report(K, d));
    }
  } else if (cmd == "check-main-theorem") {
    DualCoaction d = induced_dual_coaction(A.P, K, C.Y);
    std::optional<int> deg;
    if (c.flags.count("d")) deg = flag_int(c, "d", 0);
    Matrix M = nakayama_of_A(d.frob.alpha, deg.value_or(d.E.top_degree()));
    r.result["D"] = K.to_string(d.D);
    r.result["d"] = deg.value_or(d.E.top_degree());
    r.result["M"] = matrix_json(M);
    r.add(check_main_theorem(A.P, K, C.Y, deg));
  } else if (cmd == "inner-faithful") {
    InnerFaithfulResult f = inner_faithful(K, C.Y);
    r.result["closure_dim"] = f.closure.dim;
    r.add(Check{"inner_faithful", f.inner_faithful, std::to_string(f.closure.dim), std::to_string(K.dim()), ""});
  }
}

}  // namespace

Session parse_session(std::string_view text, const std::filesystem::path& base_dir) {
  return Parser(text, base_dir).run();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : specs()) out.push_back(k);
    return out;
  }();
  return names;
}

int combine_exit(int a, int b) {
  auto rank = [](int c) {
    switch (c) {
      case kExitInternal: return 4;
      case kExitParse: return 3;
      case kExitUnsupported: return 2;
      case kExitFail: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

Report run_command(const Session& s, const CommandDecl& c, const RunOptions& opt) {
  Report r;
  r.command = c.name;
  r.target = c.target;
  auto t0 = std::chrono::steady_clock::now();
  auto error = [&](int code, const std::string& msg) {
    r.status = Status::Error;
    r.exit_code = code;
    r.error = msg;
    r.details.clear();
  };
  try {
    const auto& spec = specs().at(c.name);
    switch (spec.kind) {
      case Kind::Algebra: run_algebra(r, s, c, opt); break;
      case Kind::Hopf: run_hopf(r, s, c); break;
      case Kind::Coaction: run_coaction(r, s, c); break;
    }
    r.settle();
    if (auto it = c.flags.find("out"); it != c.flags.end()) {
      std::filesystem::path p = it->second;
      if (p.is_relative()) p = s.base_dir / p;
      std::ofstream out(p);
      if (!out) throw InvalidArgument("cannot write " + p.string());
      out << r.to_json().dump(2) << "\n";
    }
  } catch (const ParseError& e) {
    error(kExitParse, e.what());
  } catch (const InternalAssertion& e) {
    error(kExitInternal, std::string("internal assertion: ") + e.what());
  } catch (const Unsupported& e) {
    std::string m = e.what();
    error(kExitUnsupported, m.rfind("unsupported", 0) == 0 ? m : "unsupported: " + m);
  } catch (const AlgebraError& e) {
    error(kExitUnsupported, e.what());
  } catch (const std::exception& e) {
    error(kExitInternal, std::string("internal error: ") + e.what());
  }
  if (opt.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SessionResult run_session(const Session& s, const RunOptions& opt) {
  SessionResult out;
  for (const auto& c : s.commands) {
    out.reports.push_back(run_command(s, c, opt));
    out.exit_code = combine_exit(out.exit_code, out.reports.back().exit_code);
  }
  return out;
}

}  // namespace nakayama
