#include "aspectke/parser.hpp"

#include <cctype>
#include <map>
#include <set>

#include "aspectke/validate.hpp"
#include "lexer.hpp"

namespace aspectke {

namespace {

using detail::Tok;
using detail::Token;
using Scope = std::set<std::string>;

constexpr int kMaxDepth = 500;

std::optional<AnalysisFunction> analysis_name(const std::string& text,
                                              std::optional<Capability>& cap) {
  cap.reset();
  if (text == "Act") return AnalysisFunction::Act;
  if (text == "FV") return AnalysisFunction::FV;
  if (text == "LC") return AnalysisFunction::LC;
  auto split = text.find('_');
  if (split == std::string::npos) return std::nullopt;
  std::string head = text.substr(0, split);
  auto c = capability_from_string(text.substr(split + 1));
  if (!c) return std::nullopt;
  std::optional<AnalysisFunction> f;
  if (head == "Loc") f = AnalysisFunction::Loc;
  if (head == "LCc") f = AnalysisFunction::LCc;
  if (head == "FVc") f = AnalysisFunction::FVc;
  if (f) cap = c;
  return f;
}

class Parser {
 public:
  Parser(std::string_view text, std::string file)
      : file_(std::move(file)), toks_(detail::tokenize(text, file_)) {}

  SystemState system() {
    SystemState state;
    expect_keyword("let");
    while (!at_keyword("in")) declaration_or_aspect(state.aspects);
    advance();
    if (!at(Tok::End)) net(state.net);
    expect(Tok::End);
    return state;
  }

  std::vector<Aspect> aspect_file() {
    std::vector<Aspect> out;
    while (!at(Tok::End)) declaration_or_aspect(out);
    return out;
  }

  Process process_file() {
    Scope scope;
    if (at_keyword("free")) {
      advance();
      do {
        scope.insert(expect(Tok::Ident).text);
      } while (accept(Tok::Comma));
      expect(Tok::Semi);
    }
    Process p = par(scope);
    expect(Tok::End);
    return p;
  }

  const std::vector<SourceSpan>& item_spans() const { return item_spans_; }

 private:
  // ------------------------------------------------------------ tokens

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == kw;
  }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    advance();
    return true;
  }
  SourceSpan span() const { return {file_, peek().line, peek().column}; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(span(), std::move(expected), found);
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail({detail::describe(k)});
    return advance();
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail({"'" + std::string(kw) + "'"});
    advance();
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail({"shallower nesting"});
    }
    ~DepthGuard() { --p.depth_; }
  };

  // --------------------------------------------------------- processes

  static Location resolve(const std::string& name, const Scope& scope) {
    return scope.count(name) ? Location::variable(name) : Location::constant(name);
  }

  Location field(const Scope& scope) {
    if (accept(Tok::Bang)) return Location::binder(expect(Tok::Ident).text);
    if (accept(Tok::Wild)) return Location::dont_care();
    if (at(Tok::Ident)) return resolve(advance().text, scope);
    fail({"'!'", "'_'", "identifier"});
  }

  Location target(const Scope& scope) {
    expect(Tok::At);
    return field(scope);
  }

  bool at_action() const {
    return peek().kind == Tok::Ident && capability_from_string(peek().text) &&
           peek(1).kind == Tok::LParen;
  }

  Action action(const Scope& scope) {
    Capability cap = *capability_from_string(advance().text);
    expect(Tok::LParen);
    Action a;
    a.capability = cap;
    switch (cap) {
      case Capability::Eval:
        a.spawned = par(scope);
        expect(Tok::RParen);
        a.target = target(scope);
        break;
      case Capability::Newloc:
        expect(Tok::Bang);
        a.fields.push_back(Location::binder(expect(Tok::Ident).text));
        expect(Tok::RParen);
        break;
      default:
        do {
          a.fields.push_back(field(scope));
        } while (accept(Tok::Comma));
        expect(Tok::RParen);
        a.target = target(scope);
    }
    return a;
  }

  Branch branch(const Scope& scope) {
    Action a = action(scope);
    Scope inner = scope;
    for (const Location& f : a.fields) {
      if (f.is_binder()) inner.insert(f.name());
    }
    Process cont;
    if (accept(Tok::Dot)) cont = unary(inner);
    return Branch{std::move(a), std::move(cont)};
  }

  Process unary(const Scope& scope) {
    DepthGuard guard(*this);
    if (at_keyword("0")) {
      advance();
      return Process::nil();
    }
    if (accept(Tok::Star)) return Process::replicate(unary(scope));
    if (accept(Tok::LParen)) {
      Process p = par(scope);
      expect(Tok::RParen);
      return p;
    }
    if (at_action()) {
      std::vector<Branch> b;
      b.push_back(branch(scope));
      return Process::sum(std::move(b));
    }
    fail({"'0'", "'*'", "'('", "action"});
  }

  Process sum(const Scope& scope) {
    SourceSpan start = span();
    Process first = unary(scope);
    if (!at(Tok::Plus)) return first;
    std::vector<Branch> branches;
    auto absorb = [&](const Process& p, const SourceSpan& where) {
      if (p.kind() != Process::Kind::Sum) {
        throw ParseError(where, {"guarded sum operand"}, "non-sum process");
      }
      branches.insert(branches.end(), p.branches().begin(), p.branches().end());
    };
    absorb(first, start);
    while (accept(Tok::Plus)) {
      SourceSpan where = span();
      absorb(unary(scope), where);
    }
    return Process::sum(std::move(branches));
  }

  Process par(const Scope& scope) {
    Process p = sum(scope);
    while (accept(Tok::Bar)) p = Process::parallel(p, sum(scope));
    return p;
  }

  void net(Net& n) {
    do {
      item_spans_.push_back(span());
      std::string node = expect(Tok::Ident).text;
      expect(Tok::ColonColon);
      if (accept(Tok::Lt)) {
        Tuple t;
        do {
          t.fields.push_back(expect(Tok::Ident).text);
        } while (accept(Tok::Comma));
        expect(Tok::Gt);
        n.items.push_back(LocatedItem::tuple(std::move(node), std::move(t)));
      } else {
        n.items.push_back(LocatedItem::process(std::move(node), par({})));
      }
    } while (accept(Tok::BarBar));
  }

  // ----------------------------------------------------------- aspects

  void declaration_or_aspect(std::vector<Aspect>& out) {
    if (at_keyword("set") && peek(1).kind == Tok::Ident) {
      advance();
      SourceSpan where = span();
      std::string name = expect(Tok::Ident).text;
      expect(Tok::Eq);
      SetExpr s = set_atom({});
      if (s.kind() != SetExpr::Kind::Literal) {
        throw ParseError(where, {"set literal"}, "computed set");
      }
      named_sets_[name] = s.items();
      return;
    }
    out.push_back(aspect());
  }

  static Location cut_name(const std::string& name) {
    if (std::islower(static_cast<unsigned char>(name.front()))) {
      return Location::variable(name);
    }
    return Location::constant(name);
  }

  Location cut_field() {
    if (accept(Tok::Bang)) return Location::binder(expect(Tok::Ident).text);
    if (accept(Tok::Wild)) return Location::dont_care();
    if (at(Tok::Ident)) return cut_name(advance().text);
    fail({"'!'", "'_'", "identifier"});
  }

  Cut cut() {
    Cut c;
    c.source = cut_field();
    expect(Tok::ColonColon);
    if (!at_action()) fail({"action"});
    c.capability = *capability_from_string(advance().text);
    expect(Tok::LParen);
    switch (c.capability) {
      case Capability::Eval:
        c.spawned_var = expect(Tok::Ident).text;
        expect(Tok::RParen);
        expect(Tok::At);
        c.target = cut_field();
        break;
      case Capability::Newloc:
        c.fields.push_back(cut_field());
        expect(Tok::RParen);
        break;
      default:
        do {
          c.fields.push_back(cut_field());
        } while (accept(Tok::Comma));
        expect(Tok::RParen);
        expect(Tok::At);
        c.target = cut_field();
    }
    if (accept(Tok::Dot)) c.continuation_var = expect(Tok::Ident).text;
    return c;
  }

  Suggestion suggestion() {
    if (at_keyword("break")) {
      advance();
      return Suggestion::Break;
    }
    if (at_keyword("proceed")) {
      advance();
      return Suggestion::Proceed;
    }
    fail({"'break'", "'proceed'"});
  }

  Aspect aspect() {
    Aspect a;
    a.span = span();
    a.name = expect(Tok::Ident).text;
    expect(Tok::LBracket);
    a.cut = cut();
    expect(Tok::RBracket);
    expect(Tok::Eq);
    Scope bound;
    for (const std::string& v : cut_variables(a.cut)) bound.insert(v);
    while (at_keyword("case")) {
      advance();
      expect(Tok::LParen);
      Condition c = cond(bound);
      expect(Tok::RParen);
      Suggestion s = suggestion();
      expect(Tok::Semi);
      a.body.cases.push_back({std::move(c), s});
    }
    a.body.fallback = suggestion();
    return a;
  }

  // -------------------------------------------------------- conditions

  Location cond_loc(const Scope& bound) {
    if (accept(Tok::Wild)) return Location::dont_care();
    if (accept(Tok::Bang)) return Location::binder(expect(Tok::Ident).text);
    if (at(Tok::Ident)) return resolve(advance().text, bound);
    fail({"'_'", "identifier"});
  }

  Condition cond(const Scope& bound) {
    DepthGuard guard(*this);
    Condition c = conjunction(bound);
    while (accept(Tok::Vee)) c = Condition::disj(c, conjunction(bound));
    return c;
  }

  Condition conjunction(const Scope& bound) {
    Condition c = cond_unary(bound);
    while (accept(Tok::Wedge)) c = Condition::conj(c, cond_unary(bound));
    return c;
  }

  Condition cond_unary(const Scope& bound) {
    DepthGuard guard(*this);
    if (accept(Tok::Tilde)) return Condition::negate(cond_unary(bound));
    if (at_keyword("exists") || at_keyword("forall")) {
      bool exists = advance().text == "exists";
      std::string var = expect(Tok::Ident).text;
      expect_keyword("in");
      SetExpr domain = set_union(bound);
      expect(Tok::Colon);
      Scope inner = bound;
      inner.insert(var);
      Condition body = cond(inner);
      return exists ? Condition::exists(var, domain, body)
                    : Condition::forall(var, domain, body);
    }
    return atom(bound);
  }

  // Index of the token after the `)` matching the `(` at the cursor.
  std::size_t after_group() const {
    int level = 0;
    for (std::size_t k = pos_; k < toks_.size(); ++k) {
      if (toks_[k].kind == Tok::LParen) ++level;
      if (toks_[k].kind == Tok::RParen && --level == 0) return k + 1;
    }
    return toks_.size() - 1;
  }

  bool at_set_start() const {
    if (at(Tok::LBrace)) return true;
    if (!at(Tok::Ident)) return false;
    const std::string& t = peek().text;
    if (named_sets_.count(t)) return true;
    if (t == "LVar" && peek(1).kind == Tok::Star) return true;
    std::optional<Capability> cap;
    return analysis_name(t, cap) && peek(1).kind == Tok::LParen;
  }

  Condition atom(const Scope& bound) {
    if (at(Tok::LParen)) {
      Tok follow = toks_[after_group()].kind;
      if (follow == Tok::Eq || follow == Tok::Amp ||
          (toks_[after_group()].kind == Tok::Ident && toks_[after_group()].text == "U")) {
        return emptiness(bound);
      }
      advance();
      Condition c = cond(bound);
      expect(Tok::RParen);
      return c;
    }
    if (at_keyword("test") && peek(1).kind == Tok::LParen) {
      advance();
      advance();
      std::vector<Location> fields;
      do {
        fields.push_back(cond_loc(bound));
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
      expect(Tok::At);
      return Condition::test(std::move(fields), cond_loc(bound));
    }
    if (at_set_start()) return emptiness(bound);
    if (!at(Tok::Ident) && !at(Tok::Wild) && !at(Tok::Bang)) {
      fail({"condition"});
    }
    std::string text = peek().text;
    Location lhs = cond_loc(bound);
    if (accept(Tok::Eq)) return Condition::equal(lhs, cond_loc(bound));
    if (at_keyword("in")) {
      advance();
      SetExpr s = set_union(bound);
      auto cap = capability_from_string(text);
      if (cap && lhs.is_constant()) return Condition::cap_in(*cap, s);
      return Condition::loc_in(lhs, s);
    }
    fail({"'='", "'in'"});
  }

  Condition emptiness(const Scope& bound) {
    SetExpr s = set_union(bound);
    expect(Tok::Eq);
    expect_keyword("empty");
    return Condition::is_empty(s);
  }

  // -------------------------------------------------------------- sets

  SetExpr set_union(const Scope& bound) {
    SetExpr s = set_inter(bound);
    while (at_keyword("U")) {
      advance();
      s = SetExpr::unite(s, set_inter(bound));
    }
    return s;
  }

  SetExpr set_inter(const Scope& bound) {
    SetExpr s = set_atom(bound);
    while (accept(Tok::Amp)) s = SetExpr::intersect(s, set_atom(bound));
    return s;
  }

  SetItem set_item(const Scope& bound) {
    std::string name = expect(Tok::Ident).text;
    if (bound.count(name)) return SetItem::variable(name);
    if (auto cap = capability_from_string(name)) return SetItem::capability(*cap);
    return SetItem::constant(name);
  }

  SetExpr set_atom(const Scope& bound) {
    DepthGuard guard(*this);
    if (accept(Tok::LBrace)) {
      std::vector<SetItem> items;
      if (!at(Tok::RBrace)) {
        do {
          items.push_back(set_item(bound));
        } while (accept(Tok::Comma));
      }
      expect(Tok::RBrace);
      return SetExpr::literal(std::move(items));
    }
    if (accept(Tok::LParen)) {
      SetExpr s = set_union(bound);
      expect(Tok::RParen);
      return s;
    }
    if (at(Tok::Ident)) {
      const std::string& t = peek().text;
      if (t == "LVar" && peek(1).kind == Tok::Star) {
        advance();
        advance();
        return SetExpr::all_variables();
      }
      std::optional<Capability> cap;
      if (auto f = analysis_name(t, cap); f && peek(1).kind == Tok::LParen) {
        advance();
        advance();
        std::string var = expect(Tok::Ident).text;
        expect(Tok::RParen);
        return SetExpr::analysis(*f, cap, var);
      }
      if (auto it = named_sets_.find(t); it != named_sets_.end()) {
        advance();
        return SetExpr::literal(it->second);
      }
      throw ParseError(span(), {"set"}, "unknown set '" + t + "'");
    }
    fail({"'{'", "'('", "set"});
  }

  std::string file_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::map<std::string, std::vector<SetItem>> named_sets_;
  std::vector<SourceSpan> item_spans_;
};

std::vector<Violation> check_aspects(const std::vector<Aspect>& aspects) {
  std::vector<Violation> out;
  for (const Aspect& a : aspects) {
    auto v = validate_aspect(a);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace

SystemState parse_system_unchecked(std::string_view text, const std::string& file) {
  return Parser(text, file).system();
}

SystemState parse_system(std::string_view text, const std::string& file) {
  Parser p(text, file);
  SystemState state = p.system();
  std::vector<Violation> violations = check_aspects(state.aspects);
  for (std::size_t i = 0; i < state.net.items.size(); ++i) {
    Net single{{state.net.items[i]}};
    for (Violation& v : validate_net(single)) {
      v.span = p.item_spans()[i];
      violations.push_back(std::move(v));
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return state;
}

std::vector<Aspect> parse_aspect_file_unchecked(std::string_view text, const std::string& file) {
  return Parser(text, file).aspect_file();
}

std::vector<Aspect> parse_aspect_file(std::string_view text, const std::string& file) {
  std::vector<Aspect> aspects = Parser(text, file).aspect_file();
  std::vector<Violation> violations = check_aspects(aspects);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return aspects;
}

Process parse_process(std::string_view text, const std::string& file) {
  return Parser(text, file).process_file();
}

}  // namespace aspectke
