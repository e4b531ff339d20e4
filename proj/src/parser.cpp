// Copyright 2026 The ogk Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <charconv>

#include "ogk/surface.hpp"

namespace ogk::surface {

namespace {

// Thrown after a diagnostic is recorded; unwinds to the declaration loop.
struct Abort {};

const char* const kHeads[] = {"Gen",           "Obj", "Mor",      "BinFn", "Domain",
                              "SupportsQuant", "Set", "Coherent", "Eq",    "Section"};

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::string file)
      : toks_(tokens), file_(std::move(file)) {}

  std::vector<Diagnostic>& diagnostics() { return diags_; }

  std::vector<Decl> file() {
    std::vector<Decl> out;
    while (cur().kind != Token::Kind::End) {
      try {
        out.push_back(decl());
      } catch (const Abort&) {
        sync();
      }
    }
    return out;
  }

  const Token& cur() const { return toks_[i_]; }
  bool at_end() const { return cur().kind == Token::Kind::End; }

  void expect_end() {
    if (!at_end()) error("E0002", "unexpected " + describe(cur()) + " after the end of the term");
  }

  Judgment judgment() {
    const Token& head = cur();
    if (head.kind != Token::Kind::Ident) error("E0002", "expected a judgment, found " + describe(head));
    std::string h = head.text;
    bool known = false;
    for (const char* k : kHeads) known = known || h == k;
    if (!known) error("E0004", "unknown judgment form '" + h + "'");
    ++i_;
    const Token& open = expect_sym("(");
    Judgment j = judgment_args(h);
    expect_close(")", open);
    return j;
  }

  GenExpr gen_expr() {
    GenExpr g = gen_atom();
    while (is_sym("*")) {
      ++i_;
      g = GenExpr::product(g, gen_atom());
    }
    return g;
  }

  FnExpr fn_expr() {
    if (is_kw("table")) {
      ++i_;
      GenExpr dom = gen_expr();
      expect_sym("->");
      GenExpr cod = gen_expr();
      return FnExpr::table(dom, cod, table_rows());
    }
    if (is_kw("rule")) {
      ++i_;
      return builtin();
    }
    if (cur().kind == Token::Kind::Ident) return FnExpr::ref(ident());
    error("E0002", "expected a function expression, found " + describe(cur()));
  }

 private:
  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::End: return "end of input";
      case Token::Kind::String: return "string \"" + t.text + "\"";
      case Token::Kind::Bitlist: return "'0b" + t.text + "'";
      default: return "'" + t.text + "'";
    }
  }

  [[noreturn]] void error(const std::string& code, const std::string& msg,
                          std::optional<Span> span = std::nullopt,
                          std::optional<std::string> note = std::nullopt) {
    // The lexer has already reported illegal input.
    if (cur().kind != Token::Kind::Error)
      diags_.push_back({Severity::Error, code, msg, span.value_or(cur().span), note, file_});
    throw Abort{};
  }

  void sync() {
    while (!at_end() && !is_sym(";")) ++i_;
    if (is_sym(";")) ++i_;
  }

  bool is_sym(const char* s) const { return cur().kind == Token::Kind::Symbol && cur().text == s; }
  bool is_kw(const char* s) const { return cur().kind == Token::Kind::Keyword && cur().text == s; }

  const Token& expect_sym(const char* s) {
    if (!is_sym(s)) error("E0002", std::string("expected '") + s + "', found " + describe(cur()));
    return toks_[i_++];
  }

  void expect_kw(const char* s) {
    if (!is_kw(s)) error("E0002", std::string("expected '") + s + "', found " + describe(cur()));
    ++i_;
  }

  void expect_close(const char* closer, const Token& opener) {
    if (is_sym(closer)) {
      ++i_;
      return;
    }
    error("E0003", "unclosed '" + opener.text + "'", opener.span,
          std::string("expected '") + closer + "' before " + describe(cur()));
  }

  Ident ident() {
    if (cur().kind != Token::Kind::Ident)
      error("E0002", "expected a name, found " + describe(cur()));
    if (cur().text == "P") error("E0002", "'P' is reserved for powersets");
    Ident id(cur().text, cur().span);
    ++i_;
    return id;
  }

  std::uint64_t integer() {
    if (cur().kind != Token::Kind::Integer)
      error("E0002", "expected an integer, found " + describe(cur()));
    std::uint64_t v = 0;
    const std::string& s = cur().text;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      error("E0002", "integer literal " + s + " is out of range");
    ++i_;
    return v;
  }

  std::string stream() {
    if (cur().kind == Token::Kind::String) return toks_[i_++].text;
    if (cur().kind == Token::Kind::Bitlist) return "finite:" + toks_[i_++].text;
    error("E0002", "expected a stream description, found " + describe(cur()));
  }

  std::string string_lit() {
    if (cur().kind != Token::Kind::String)
      error("E0002", "expected a string, found " + describe(cur()));
    return toks_[i_++].text;
  }

  GenExpr gen_atom() {
    if (is_kw("Two")) {
      ++i_;
      return GenExpr::two();
    }
    if (is_kw("Nat")) {
      ++i_;
      return GenExpr::nat();
    }
    if (cur().kind == Token::Kind::Ident && cur().text == "P") {
      ++i_;
      const Token& open = expect_sym("[");
      GenExpr base = gen_expr();
      expect_close("]", open);
      return GenExpr::powerset(base);
    }
    if (cur().kind == Token::Kind::Ident) return GenExpr::named(ident());
    if (is_sym("(")) {
      const Token& open = toks_[i_++];
      GenExpr g = gen_expr();
      expect_close(")", open);
      return g;
    }
    error("E0002", "expected a generator expression, found " + describe(cur()));
  }

  ObjLit object() {
    if (is_sym("(")) {
      const Token& open = toks_[i_++];
      ObjLit a = object();
      expect_sym(",");
      ObjLit b = object();
      expect_close(")", open);
      return ObjLit::pair(a, b);
    }
    if (is_kw("limit")) {
      ++i_;
      const Token& open = expect_sym("(");
      FamilySpec f = family();
      expect_close(")", open);
      return ObjLit::limit(f);
    }
    if (cur().kind == Token::Kind::Ident) {
      std::string carrier = cur().text;
      ++i_;
      expect_sym(".");
      if (cur().kind != Token::Kind::Ident && cur().kind != Token::Kind::Integer)
        error("E0002", "expected an object tag, found " + describe(cur()));
      return ObjLit::atom(carrier, toks_[i_++].text);
    }
    error("E0002", "expected an object, found " + describe(cur()));
  }

  FamilySpec family() {
    FamilySpec f;
    f.name = ident();
    if (is_sym("{")) {
      const Token& open = toks_[i_++];
      f.stream = stream();
      if (is_kw("flip")) {
        ++i_;
        std::uint64_t stage = integer();
        std::uint64_t bit = integer();
        f.flip = std::make_pair(stage, bit);
      }
      expect_close("}", open);
    }
    return f;
  }

  std::vector<FnExpr::Row> table_rows() {
    const Token& open = expect_sym("{");
    std::vector<FnExpr::Row> rows;
    if (!is_sym("}")) {
      while (true) {
        ObjLit x = object();
        expect_sym("->");
        ObjLit y = object();
        rows.emplace_back(x, y);
        if (!is_sym(",")) break;
        ++i_;
      }
    }
    expect_close("}", open);
    return rows;
  }

  FnExpr builtin() {
    const Token& name = cur();
    if (name.kind != Token::Kind::Ident && !(name.kind == Token::Kind::Keyword && name.text == "restrict"))
      error("E0002", "expected a builtin name, found " + describe(name));
    auto id = builtin_from_name(name.text);
    if (!id) error("E0004", "unknown builtin '" + name.text + "'");
    ++i_;
    std::vector<BuiltinArg> args;
    if (is_sym("(")) {
      const Token& open = toks_[i_++];
      switch (*id) {
        case BuiltinId::EqOf:
        case BuiltinId::EmptyDetectorOf: args.push_back(gen_expr()); break;
        case BuiltinId::IndicatorStream: args.push_back(StreamArg{stream()}); break;
        case BuiltinId::Restrict:
          args.push_back(StreamArg{stream()});
          expect_sym(",");
          args.push_back(integer());
          break;
        case BuiltinId::UnionOfFamily: args.push_back(family()); break;
      }
      expect_close(")", open);
    }
    return FnExpr::builtin(*id, std::move(args));
  }

  Judgment judgment_args(const std::string& h) {
    auto comma = [&] { expect_sym(","); };
    if (h == "Gen") return IsGen{gen_expr()};
    if (h == "SupportsQuant") return SupportsQuant{gen_expr()};
    if (h == "Set") return IsSet{gen_expr()};
    if (h == "Coherent") return IsCoherentFamily{family()};
    if (h == "Obj") {
      ObjLit o = object();
      comma();
      return IsObj{o, gen_expr()};
    }
    if (h == "Mor" || h == "Section") {
      FnExpr f = fn_expr();
      comma();
      GenExpr d = gen_expr();
      comma();
      GenExpr c = gen_expr();
      if (h == "Mor") return IsMor{f, d, c};
      return HasSection{f, d, c};
    }
    if (h == "BinFn") {
      FnExpr f = fn_expr();
      comma();
      return IsBinFn{f, gen_expr()};
    }
    if (h == "Domain") {
      GenExpr g = gen_expr();
      comma();
      return IsDomain{g, fn_expr()};
    }
    // Eq
    ObjLit a = object();
    comma();
    ObjLit b = object();
    std::optional<GenExpr> g;
    if (is_sym(",")) {
      ++i_;
      g = gen_expr();
    }
    return IsEq{a, b, g};
  }

  Proof proof() {
    Proof p;
    p.span = cur().span;
    if (is_kw("axiom")) {
      ++i_;
      p.kind = Proof::Kind::Axiom;
      p.name = ident().text();
      return p;
    }
    if (is_kw("rule")) {
      ++i_;
      p.kind = Proof::Kind::Rule;
      p.name = ident().text();
      if (is_kw("from")) {
        ++i_;
        p.premises.push_back(proof());
        while (is_sym(",")) {
          ++i_;
          p.premises.push_back(proof());
        }
      }
      return p;
    }
    if (is_sym("(")) {
      const Token& open = toks_[i_++];
      Proof inner = proof();
      expect_close(")", open);
      return inner;
    }
    if (cur().kind == Token::Kind::Ident) {
      p.kind = Proof::Kind::Ref;
      p.name = ident().text();
      return p;
    }
    error("E0002", "expected a proof, found " + describe(cur()));
  }

  Decl decl() {
    Decl d;
    Span start = cur().span;
    if (is_kw("generator")) {
      ++i_;
      GeneratorDecl g;
      g.name = ident();
      if (is_kw("primitive")) {
        ++i_;
        if (is_sym("{")) {
          const Token& open = toks_[i_++];
          std::vector<std::string> objs;
          while (true) {
            if (cur().kind != Token::Kind::Ident && cur().kind != Token::Kind::Integer)
              error("E0002", "expected an object tag, found " + describe(cur()));
            objs.push_back(toks_[i_++].text);
            if (!is_sym(",")) break;
            ++i_;
          }
          expect_close("}", open);
          g.objects = std::move(objs);
        }
      } else if (is_sym(":=")) {
        ++i_;
        g.definition = gen_expr();
      } else {
        error("E0002", "expected 'primitive' or ':=', found " + describe(cur()));
      }
      d.node = std::move(g);
    } else if (is_kw("morphism")) {
      ++i_;
      MorphismDecl m;
      m.name = ident();
      expect_sym(":");
      m.dom = gen_expr();
      expect_sym("->");
      m.cod = gen_expr();
      expect_sym(":=");
      if (is_kw("table")) {
        ++i_;
        m.body = FnExpr::table(m.dom, m.cod, table_rows());
      } else if (is_kw("rule")) {
        ++i_;
        m.body = builtin();
      } else {
        error("E0002", "expected 'table' or 'rule', found " + describe(cur()));
      }
      d.node = std::move(m);
    } else if (is_kw("family")) {
      ++i_;
      FamilyDecl f;
      f.family.name = ident();
      expect_sym(":=");
      expect_kw("restrict");
      f.family.stream = stream();
      if (is_kw("flip")) {
        ++i_;
        std::uint64_t stage = integer();
        std::uint64_t bit = integer();
        f.family.flip = std::make_pair(stage, bit);
      }
      d.node = std::move(f);
    } else if (is_kw("assert")) {
      ++i_;
      AssertDecl a;
      if (cur().kind == Token::Kind::Ident && toks_[i_ + 1].kind == Token::Kind::Symbol &&
          toks_[i_ + 1].text == ":") {
        a.label = ident();
        ++i_;
      }
      a.goal = judgment();
      expect_kw("by");
      a.proof = proof();
      d.node = std::move(a);
    } else if (is_kw("model")) {
      ++i_;
      expect_kw("check");
      ModelCheckDecl m;
      m.judgment = judgment();
      expect_kw("upto");
      m.bound = integer();
      d.node = std::move(m);
    } else if (is_kw("include")) {
      ++i_;
      d.node = IncludeDecl{string_lit()};
    } else {
      error("E0002", "expected a declaration, found " + describe(cur()));
    }
    const Token& semi = expect_sym(";");
    d.span = start;
    d.span.end = semi.span.end;
    return d;
  }

  const std::vector<Token>& toks_;
  std::size_t i_ = 0;
  std::string file_;
  std::vector<Diagnostic> diags_;
};

template <class T>
T parse_term(std::string_view text, T (Parser::*entry)()) {
  LexResult lr = lex(text);
  if (!lr.diagnostics.empty()) throw ParseFailure(lr.diagnostics);
  Parser p(lr.tokens, "");
  try {
    T out = (p.*entry)();
    p.expect_end();
    return out;
  } catch (const Abort&) {
    throw ParseFailure(p.diagnostics());
  }
}

std::string join_premise(const Proof& p) {
  std::string s = render(p);
  if (p.kind == Proof::Kind::Rule && !p.premises.empty()) return "(" + s + ")";
  return s;
}

std::string rows_text(const FnExpr& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.rows().size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += render(f.rows()[i].first) + " -> " + render(f.rows()[i].second);
  }
  return out + " }";
}

}  // namespace

ParseFailure::ParseFailure(std::vector<Diagnostic> diags)
    : std::runtime_error(diags.empty() ? "parse failure" : format(diags.front())),
      diags_(std::move(diags)) {}

ParseResult parse(const std::vector<Token>& tokens, const std::string& file) {
  Parser p(tokens, file);
  ParseResult r;
  r.decls = p.file();
  r.diagnostics = std::move(p.diagnostics());
  return r;
}

ParseResult parse_source(std::string_view source, const std::string& file) {
  std::string_view first = source.substr(0, source.find('\n'));
  constexpr std::string_view kHeader = "-- og-syntax";
  if (first.substr(0, kHeader.size()) == kHeader) {
    std::string_view rest = first.substr(kHeader.size());
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\r')) rest.remove_suffix(1);
    int v = -1;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || p != rest.data() + rest.size() || v != kSyntaxVersion) {
      ParseResult r;
      r.diagnostics.push_back({Severity::Error, "E0007",
                               "unsupported syntax version '" + std::string(rest) + "'",
                               Span{1, 1, 0, first.size()},
                               "this tool reads og-syntax " + std::to_string(kSyntaxVersion), file});
      return r;
    }
  }
  LexResult lr = lex(source, file);
  ParseResult r = parse(lr.tokens, file);
  r.diagnostics.insert(r.diagnostics.begin(), lr.diagnostics.begin(), lr.diagnostics.end());
  std::stable_sort(r.diagnostics.begin(), r.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.span.begin < b.span.begin; });
  return r;
}

Judgment parse_judgment(std::string_view text) { return parse_term(text, &Parser::judgment); }
GenExpr parse_gen_expr(std::string_view text) { return parse_term(text, &Parser::gen_expr); }
FnExpr parse_fn_expr(std::string_view text) { return parse_term(text, &Parser::fn_expr); }

std::string render(const Proof& p) {
  switch (p.kind) {
    case Proof::Kind::Axiom: return "axiom " + p.name;
    case Proof::Kind::Ref: return p.name;
    case Proof::Kind::Rule: {
      std::string s = "rule " + p.name;
      for (std::size_t i = 0; i < p.premises.size(); ++i)
        s += (i ? ", " : " from ") + join_premise(p.premises[i]);
      return s;
    }
  }
  return {};
}

std::string render(const Decl& d) {
  struct V {
    std::string operator()(const GeneratorDecl& g) const {
      std::string s = "generator " + g.name.text();
      if (g.definition) return s + " := " + ogk::render(*g.definition) + ";";
      s += " primitive";
      if (g.objects) {
        s += " {";
        for (std::size_t i = 0; i < g.objects->size(); ++i) s += (i ? ", " : " ") + (*g.objects)[i];
        s += " }";
      }
      return s + ";";
    }
    std::string operator()(const MorphismDecl& m) const {
      std::string s = "morphism " + m.name.text() + " : " + ogk::render(m.dom) + " -> " +
                      ogk::render(m.cod) + " := ";
      if (m.body.kind() == FnExpr::Kind::Table) return s + "table " + rows_text(m.body) + ";";
      return s + ogk::render(m.body) + ";";
    }
    std::string operator()(const FamilyDecl& f) const {
      std::string s = "family " + f.family.name.text() + " := restrict \"" +
                      f.family.stream.value_or("") + "\"";
      if (f.family.flip)
        s += " flip " + std::to_string(f.family.flip->first) + " " +
             std::to_string(f.family.flip->second);
      return s + ";";
    }
    std::string operator()(const AssertDecl& a) const {
      std::string s = "assert ";
      if (a.label) s += a.label->text() + " : ";
      return s + ogk::render(a.goal) + " by " + render(a.proof) + ";";
    }
    std::string operator()(const ModelCheckDecl& m) const {
      return "model check " + ogk::render(m.judgment) + " upto " + std::to_string(m.bound) + ";";
    }
    std::string operator()(const IncludeDecl& i) const { return "include \"" + i.path + "\";"; }
  };
  return std::visit(V{}, d.node);
}

std::string render_file(const std::vector<Decl>& decls) {
  std::string out = "-- og-syntax " + std::to_string(kSyntaxVersion) + "\n";
  for (const auto& d : decls) out += render(d) + "\n";
  return out;
}

}  // namespace ogk::surface
