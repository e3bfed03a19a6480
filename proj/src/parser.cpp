#include "ildtt/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ildtt {

ParseError::ParseError(std::string file_, std::size_t line_, std::size_t column_, std::string message_,
                       std::vector<std::string> expected_)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << file_ << ":" << line_ << ":" << column_ << ": " << message_;
        if (!expected_.empty()) {
          os << " (expected ";
          for (std::size_t i = 0; i < expected_.size(); ++i) os << (i ? ", " : "") << expected_[i];
          os << ")";
        }
        return os.str();
      }()),
      file(std::move(file_)),
      line(line_),
      column(column_),
      message(std::move(message_)),
      expected(std::move(expected_)) {}

const TypeFamilyDecl* Signature::find_type(const std::string& name) const {
  for (const auto& d : types)
    if (d.name == name) return &d;
  return nullptr;
}

const ConstDecl* Signature::find_const(const std::string& name) const {
  for (const auto& d : consts)
    if (d.name == name) return &d;
  return nullptr;
}

const ModelBinding* Signature::find_model(const std::string& name) const {
  for (const auto& d : models)
    if (d.name == name) return &d;
  return nullptr;
}

const Definition* Module::find_def(const std::string& name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;
};

const std::set<std::string> kKeywords = {
    "type", "const", "model", "def",  "pointed", "family", "let",  "be",   "in",   "lam",  "bang",
    "refl", "case",  "of",    "inl",  "inr",     "if",     "then", "else", "fst",  "snd",  "star",
    "unit", "false", "tt",    "ff",   "Sig",     "Pi",     "Id",   "Top",  "I"};

// Longest punctuation first.
const std::vector<std::string> kPunct = {"(*)", ":=", "-o", "->", "||", "=>", "(", ")", "[", "]", "{", "}",
                                         "<",   ">",  ",",  ".",  ":",  "*",  "!", "+", "&"};

class Lexer {
 public:
  Lexer(const std::string& text, const std::string& file) : text_(text), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.begin = pos_;
      if (pos_ >= text_.size()) {
        t.kind = Tok::End;
        t.end = pos_;
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_' || text_[pos_] == '\''))
          ++pos_;
        t.kind = Tok::Ident;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        t.kind = Tok::Number;
      } else if (c == '"') {
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') ++pos_;
        if (pos_ >= text_.size() || text_[pos_] != '"') fail(t.begin, "unterminated string literal");
        ++pos_;
        t.kind = Tok::String;
        t.text = text_.substr(t.begin + 1, pos_ - t.begin - 2);
        t.end = pos_;
        out.push_back(t);
        continue;
      } else {
        bool matched = false;
        for (const auto& p : kPunct) {
          if (text_.compare(pos_, p.size(), p) == 0) {
            pos_ += p.size();
            matched = true;
            break;
          }
        }
        if (!matched) fail(pos_, std::string("unexpected character '") + c + "'");
        t.kind = Tok::Punct;
      }
      t.end = pos_;
      t.text = text_.substr(t.begin, t.end - t.begin);
      out.push_back(t);
    }
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    auto [line, col] = position(text_, offset);
    throw ParseError(file_, line, col, msg);
  }

  static std::pair<std::size_t, std::size_t> position(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

 private:
  void skip_space() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (text_.compare(pos_, 2, "--") == 0) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }

  const std::string& text_;
  const std::string& file_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, const std::string& file)
      : text_(text), file_(file), toks_(Lexer(text, file).run()) {}

  Module module() {
    Module m;
    m.file = file_;
    sig_ = &m.sig;
    defs_ = &m.defs;
    while (!at_end()) declaration(m);
    return m;
  }

  TermPtr standalone_term(const Signature& sig, const std::vector<Binding>& scope) {
    sig_ = const_cast<Signature*>(&sig);
    scope_ = scope;
    auto t = term();
    expect_end();
    return t;
  }

  TypePtr standalone_type(const Signature& sig, const std::vector<Binding>& scope) {
    sig_ = const_cast<Signature*>(&sig);
    scope_ = scope;
    auto a = type();
    expect_end();
    return a;
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is(const std::string& s, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return (t.kind == Tok::Punct || t.kind == Tok::Ident) && t.text == s;
  }
  bool accept(const std::string& s) {
    if (!is(s)) return false;
    ++i_;
    return true;
  }
  Token next() { return toks_[std::min(i_++, toks_.size() - 1)]; }

  [[noreturn]] void fail_here(const std::string& msg, std::vector<std::string> expected = {}) const {
    const auto& t = peek();
    auto [line, col] = Lexer::position(text_, t.begin);
    std::string what = msg;
    if (t.kind == Tok::End)
      what += " at end of input";
    else
      what += " at '" + t.text + "'";
    throw ParseError(file_, line, col, what, std::move(expected));
  }

  void expect(const std::string& s) {
    if (!accept(s)) fail_here("syntax error", {"'" + s + "'"});
  }

  void expect_end() {
    if (!at_end()) fail_here("unexpected trailing input", {"end of input"});
  }

  std::string ident() {
    const auto& t = peek();
    if (t.kind != Tok::Ident || kKeywords.count(t.text)) fail_here("syntax error", {"identifier"});
    ++i_;
    return t.text;
  }

  std::string label() {
    const auto& t = peek();
    if (t.kind == Tok::Ident || t.kind == Tok::Number || t.kind == Tok::String) {
      ++i_;
      return t.text;
    }
    fail_here("syntax error", {"label"});
  }

  SourceSpan span_from(std::size_t begin) const {
    std::size_t end = i_ > 0 ? toks_[i_ - 1].end : begin;
    return SourceSpan{file_, begin, std::max(begin, end)};
  }

  TermPtr at(TermPtr t, std::size_t begin) const {
    auto copy = std::make_shared<Term>(*t);
    copy->span = span_from(begin);
    return copy;
  }

  TypePtr at(TypePtr a, std::size_t begin) const {
    auto copy = std::make_shared<Type>(*a);
    copy->span = span_from(begin);
    return copy;
  }

  // ---- scope ---------------------------------------------------------------

  struct ScopeGuard {
    std::vector<Binding>& scope;
    std::size_t n;
    ~ScopeGuard() { scope.resize(scope.size() - n); }
  };

  ScopeGuard bind(std::vector<Binding> bs) {
    for (auto& b : bs) scope_.push_back(b);
    return ScopeGuard{scope_, bs.size()};
  }

  const Binding* lookup(const std::string& x) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == x) return &*it;
    return nullptr;
  }

  // ---- declarations --------------------------------------------------------

  void declaration(Module& m) {
    std::size_t begin = peek().begin;
    if (accept("type")) {
      TypeFamilyDecl d;
      d.name = fresh_decl_name();
      d.params = params();
      expect(".");
      d.span = span_from(begin);
      m.sig.types.push_back(std::move(d));
    } else if (accept("const")) {
      ConstDecl d;
      d.name = fresh_decl_name();
      d.params = params();
      {
        std::vector<Binding> bs;
        for (const auto& p : d.params) bs.push_back({p.name, false});
        auto guard = bind(bs);
        expect(":");
        d.type = type();
      }
      expect(".");
      d.span = span_from(begin);
      m.sig.consts.push_back(std::move(d));
    } else if (accept("model")) {
      m.sig.models.push_back(model_binding(begin));
    } else if (accept("def")) {
      Definition d;
      d.name = fresh_decl_name();
      if (accept(":")) d.type = type();
      expect(":=");
      d.term = term();
      expect(".");
      d.span = span_from(begin);
      m.defs.push_back(std::move(d));
    } else {
      fail_here("syntax error", {"'type'", "'const'", "'model'", "'def'"});
    }
  }

  std::string fresh_decl_name() {
    std::size_t at_tok = i_;
    std::string name = ident();
    if (sig_->find_type(name) || sig_->find_const(name) || find_def(name)) {
      i_ = at_tok;
      fail_here("duplicate declaration of '" + name + "'");
    }
    return name;
  }

  const Definition* find_def(const std::string& name) const {
    if (!defs_) return nullptr;
    for (const auto& d : *defs_)
      if (d.name == name) return &d;
    return nullptr;
  }

  std::vector<Param> params() {
    std::vector<Param> ps;
    std::vector<Binding> bs;
    while (is("(")) {
      next();
      for (;;) {
        accept("!");
        Param p;
        p.name = ident();
        expect(":");
        accept("!");
        {
          auto guard = bind(bs);
          p.type = type();
        }
        bs.push_back({p.name, false});
        ps.push_back(std::move(p));
        if (!accept(",")) break;
      }
      expect(")");
    }
    return ps;
  }

  ModelBinding model_binding(std::size_t begin) {
    ModelBinding mb;
    mb.name = ident();
    const auto* tdecl = sig_->find_type(mb.name);
    const auto* cdecl = sig_->find_const(mb.name);
    if (!tdecl && !cdecl) {
      --i_;
      fail_here("model binding for undeclared name '" + mb.name + "'");
    }
    if (sig_->find_model(mb.name)) {
      --i_;
      fail_here("duplicate model binding for '" + mb.name + "'");
    }
    mb.is_type = tdecl != nullptr;
    expect(":=");
    if (accept("family")) {
      expect("{");
      if (!is("}")) {
        for (;;) {
          ModelEntry e;
          if (accept("(")) {
            if (!is(")")) {
              e.key.push_back(label());
              while (accept(",")) e.key.push_back(label());
            }
            expect(")");
          } else {
            e.key.push_back(label());
          }
          expect("=>");
          model_value(mb.is_type, e);
          mb.entries.push_back(std::move(e));
          if (!accept(",")) break;
        }
      }
      expect("}");
    } else {
      ModelEntry e;
      model_value(mb.is_type, e);
      mb.entries.push_back(std::move(e));
    }
    expect(".");
    mb.span = span_from(begin);
    return mb;
  }

  void model_value(bool is_type, ModelEntry& e) {
    if (is_type) {
      expect("pointed");
      expect("{");
      bool have_base = false;
      for (;;) {
        std::string l = label();
        for (const auto& seen : e.set.labels)
          if (seen == l) {
            --i_;
            fail_here("duplicate label '" + l + "'");
          }
        if (accept("*")) {
          if (have_base) {
            --i_;
            fail_here("second basepoint marker");
          }
          have_base = true;
          e.set.base = e.set.labels.size();
        }
        e.set.labels.push_back(l);
        if (!accept(",")) break;
      }
      expect("}");
      if (!have_base) fail_here("pointed set without a basepoint marker");
    } else {
      e.element = label();
    }
  }

  // ---- types ---------------------------------------------------------------

  TypePtr type() {
    std::size_t begin = peek().begin;
    if (is("Sig") || is("Pi")) {
      bool sigma = next().text == "Sig";
      expect("(");
      expect("!");
      std::string x = ident();
      expect(":");
      expect("!");
      auto dom = type();
      expect(")");
      auto guard = bind({{x, false}});
      auto body = type();
      return at(sigma ? ty::sigma(x, dom, body) : ty::pi(x, dom, body), begin);
    }
    auto lhs = plus_type();
    if (accept("-o")) return at(ty::lolli(lhs, type()), begin);
    return lhs;
  }

  TypePtr plus_type() {
    std::size_t begin = peek().begin;
    auto lhs = with_type();
    if (accept("+")) return at(ty::plus(lhs, plus_type()), begin);
    return lhs;
  }

  TypePtr with_type() {
    std::size_t begin = peek().begin;
    auto lhs = tensor_type();
    if (accept("&")) return at(ty::with(lhs, with_type()), begin);
    return lhs;
  }

  TypePtr tensor_type() {
    std::size_t begin = peek().begin;
    auto lhs = prefix_type();
    if (accept("*")) return at(ty::tensor(lhs, tensor_type()), begin);
    return lhs;
  }

  TypePtr prefix_type() {
    std::size_t begin = peek().begin;
    if (accept("!")) return at(ty::bang(prefix_type()), begin);
    return atom_type();
  }

  TypePtr atom_type() {
    std::size_t begin = peek().begin;
    const auto& t = peek();
    if (accept("I")) return at(ty::unit(), begin);
    if (accept("Top")) return at(ty::top(), begin);
    if (t.kind == Tok::Number && (t.text == "0" || t.text == "2")) {
      bool zero = next().text == "0";
      return at(zero ? ty::zero() : ty::two(), begin);
    }
    if (is("Sig") || is("Pi")) return type();
    if (accept("Id")) {
      expect("!");
      auto dom = prefix_type();
      expect("(");
      auto a = term();
      expect(",");
      auto b = term();
      expect(")");
      return at(ty::id(dom, a, b), begin);
    }
    if (accept("(")) {
      auto a = type();
      expect(")");
      return a;
    }
    if (t.kind == Tok::Ident && !kKeywords.count(t.text)) {
      std::string name = next().text;
      const auto* decl = sig_->find_type(name);
      if (!decl) {
        --i_;
        fail_here("unknown type '" + name + "'");
      }
      std::vector<TermPtr> args;
      if (!decl->params.empty()) {
        expect("(");
        args.push_back(term());
        while (accept(",")) args.push_back(term());
        expect(")");
        if (args.size() != decl->params.size())
          fail_here("type family '" + name + "' expects " + std::to_string(decl->params.size()) + " arguments");
      }
      return at(ty::base(name, std::move(args)), begin);
    }
    fail_here("syntax error", {"type"});
  }

  // ---- terms ---------------------------------------------------------------

  TermPtr term() {
    std::size_t begin = peek().begin;
    if (is("let")) return let_form();
    if (is("lam")) return lambda();
    if (is("case")) return case_form();
    if (is("if")) return if_form();
    auto lhs = app();
    if (accept("(*)")) return at(tm::tensor(lhs, term()), begin);
    return lhs;
  }

  TermPtr lambda() {
    std::size_t begin = peek().begin;
    expect("lam");
    expect("(");
    bool pi = accept("!");
    std::string x = ident();
    expect(":");
    if (pi) expect("!");
    auto dom = type();
    expect(")");
    auto guard = bind({{x, !pi}});
    auto body = term();
    return at(pi ? tm::pi_lam(x, dom, body) : tm::lam(x, dom, body), begin);
  }

  TermPtr case_form() {
    std::size_t begin = peek().begin;
    expect("case");
    auto t = term();
    expect("of");
    expect("inl");
    std::string x = ident();
    expect("->");
    TermPtr c;
    {
      auto guard = bind({{x, true}});
      c = term();
    }
    expect("||");
    expect("inr");
    std::string y = ident();
    expect("->");
    auto guard = bind({{y, true}});
    auto d = term();
    return at(tm::case_of(t, x, c, y, d), begin);
  }

  TermPtr if_form() {
    std::size_t begin = peek().begin;
    expect("if");
    std::string x = "_";
    TypePtr motive;
    if (accept("[")) {
      x = ident();
      expect(".");
      auto guard = bind({{x, false}});
      motive = type();
      expect("]");
    }
    auto t = term();
    expect("then");
    auto a = term();
    expect("else");
    auto b = term();
    return at(tm::if_then(x, motive, t, a, b), begin);
  }

  TermPtr let_form() {
    std::size_t begin = peek().begin;
    expect("let");
    // `let (a, a', p) be (z, z, refl !z) in [x x'. D] d`
    if (is("(")) {
      std::size_t save = i_;
      next();
      auto first = term();
      if (accept(",")) return let_id(begin, first);
      i_ = save;
    }
    auto t = term();
    expect("be");
    if (accept("star")) {
      expect("in");
      return at(tm::let_star(t, term()), begin);
    }
    if (accept("!")) {
      std::string x = ident();
      if (accept("(*)")) {
        std::string y = ident();
        expect("in");
        auto guard = bind({{x, false}, {y, true}});
        return at(tm::let_sigma(t, x, y, term()), begin);
      }
      expect("in");
      auto guard = bind({{x, false}});
      return at(tm::let_bang(t, x, term()), begin);
    }
    std::string x = ident();
    expect("(*)");
    std::string y = ident();
    expect("in");
    auto guard = bind({{x, true}, {y, true}});
    return at(tm::let_tensor(t, x, y, term()), begin);
  }

  TermPtr let_id(std::size_t begin, TermPtr a) {
    auto a2 = term();
    expect(",");
    auto p = term();
    expect(")");
    expect("be");
    expect("(");
    std::size_t ztok = i_;
    std::string z = ident();
    expect(",");
    std::string z2 = ident();
    expect(",");
    expect("refl");
    expect("!");
    std::string z3 = ident();
    expect(")");
    if (z2 != z || z3 != z) {
      i_ = ztok;
      fail_here("identity pattern must repeat one variable");
    }
    expect("in");
    expect("[");
    std::string mx = ident();
    std::string mx2 = ident();
    expect(".");
    TypePtr motive;
    {
      auto guard = bind({{mx, false}, {mx2, false}});
      motive = type();
    }
    expect("]");
    auto guard = bind({{z, false}});
    auto d = term();
    return at(tm::let_id(a, a2, p, z, mx, mx2, motive, d), begin);
  }

  bool starts_argument() const {
    const auto& t = peek();
    if (t.kind == Tok::Ident) {
      if (!kKeywords.count(t.text)) return true;
      static const std::set<std::string> starters = {"bang", "refl", "inl", "inr", "fst", "snd",
                                                     "star", "unit", "false", "tt", "ff"};
      return starters.count(t.text) > 0;
    }
    if (t.kind == Tok::Punct) return t.text == "(" || t.text == "<" || t.text == "!";
    return false;
  }

  TermPtr app() {
    std::size_t begin = peek().begin;
    auto f = prefix();
    while (starts_argument()) f = at(tm::app(f, prefix()), begin);
    return f;
  }

  TermPtr prefix() {
    std::size_t begin = peek().begin;
    if (accept("bang") || accept("!")) return at(tm::bang(prefix()), begin);
    if (accept("fst")) return at(tm::fst(prefix()), begin);
    if (accept("snd")) return at(tm::snd(prefix()), begin);
    if (accept("inl")) return at(tm::inl(prefix()), begin);
    if (accept("inr")) return at(tm::inr(prefix()), begin);
    if (accept("false")) return at(tm::absurd(prefix()), begin);
    if (accept("refl")) {
      expect("!");
      return at(tm::refl(prefix()), begin);
    }
    return atom();
  }

  TermPtr atom() {
    std::size_t begin = peek().begin;
    if (accept("star")) return at(tm::star(), begin);
    if (accept("unit")) return at(tm::unit(), begin);
    if (accept("tt")) return at(tm::tt(), begin);
    if (accept("ff")) return at(tm::ff(), begin);
    if (accept("(")) {
      auto t = term();
      expect(")");
      return t;
    }
    if (accept("<")) {
      auto a = term();
      expect(",");
      auto b = term();
      expect(">");
      return at(tm::with(a, b), begin);
    }
    if (is("let") || is("lam") || is("case") || is("if")) return term();
    const auto& t = peek();
    if (t.kind == Tok::Ident && !kKeywords.count(t.text)) {
      std::string name = next().text;
      if (const auto* b = lookup(name)) return at(b->linear ? tm::lvar(name) : tm::ivar(name), begin);
      if (const auto* d = find_def(name)) return d->type ? with_elab(d->term, d->type) : d->term;
      if (const auto* c = sig_->find_const(name)) {
        std::vector<TermPtr> args;
        if (!c->params.empty()) {
          expect("(");
          args.push_back(term());
          while (accept(",")) args.push_back(term());
          expect(")");
          if (args.size() != c->params.size())
            fail_here("constant '" + name + "' expects " + std::to_string(c->params.size()) + " arguments");
        }
        return at(tm::constant(name, std::move(args)), begin);
      }
      --i_;
      fail_here("unbound identifier '" + name + "'");
    }
    fail_here("syntax error", {"term"});
  }

  const std::string& text_;
  std::string file_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Signature* sig_ = nullptr;
  std::vector<Definition>* defs_ = nullptr;
  std::vector<Binding> scope_;
};

}  // namespace

Module parse_module(const std::string& text, const std::string& file) {
  Parser p(text, file);
  return p.module();
}

TermPtr parse_term(const std::string& text, const Signature& sig, const std::vector<Binding>& scope) {
  Parser p(text, "<term>");
  return p.standalone_term(sig, scope);
}

TypePtr parse_type(const std::string& text, const Signature& sig, const std::vector<Binding>& scope) {
  Parser p(text, "<type>");
  return p.standalone_type(sig, scope);
}

}  // namespace ildtt
