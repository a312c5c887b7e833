/*
 * Copyright (c) 2026, the dvl project authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#ifndef DVL_PARSER_HPP_
#define DVL_PARSER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dvl/diag.hpp"
#include "dvl/lexer.hpp"
#include "dvl/source_model.hpp"

namespace dvl {

struct ParseResult {
  std::optional<SourceModel> model;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

namespace detail {

struct ParseError {
  Diagnostic diag;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  ParseResult run() {
    ParseResult result;
    SourceModel model;
    while (!at(Tok::Eof)) {
      try {
        if (at_kw("chan")) {
          model.channels.push_back(parse_channel());
        } else if (at_kw("node")) {
          model.nodes.push_back(parse_node());
        } else if (at_kw("invariant")) {
          model.invariants.push_back(parse_invariant());
        } else if (at_kw("outline")) {
          model.outlines.push_back(parse_outline());
        } else {
          fail("EXPECTED_DECLARATION",
               "expected 'chan', 'node', 'invariant' or 'outline'");
        }
      } catch (const ParseError& e) {
        result.diagnostics.push_back(e.diag);
        synchronize();
      }
    }
    if (!has_errors(result.diagnostics)) result.model = std::move(model);
    return result;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(std::size_t k = 1) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_kw(std::string_view kw) const {
    return cur().kind == Tok::Ident && cur().text == kw;
  }
  Token advance() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(std::string code, std::string msg) const {
    throw ParseError{Diagnostic::error(std::move(code), cur().span, std::move(msg))};
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail("EXPECTED_TOKEN", std::string("expected ") + what);
    return advance();
  }

  Token expect_kw(std::string_view kw) {
    if (!at_kw(kw)) fail("EXPECTED_KEYWORD", "expected '" + std::string(kw) + "'");
    return advance();
  }

  std::string expect_ident(const char* what) {
    if (!at(Tok::Ident)) fail("EXPECTED_IDENT", std::string("expected ") + what);
    return advance().text;
  }

  // Skip to the next plausible top-level declaration start.
  void synchronize() {
    int depth = 0;
    while (!at(Tok::Eof)) {
      if (at(Tok::LBrace)) ++depth;
      if (at(Tok::RBrace)) { if (depth > 0) --depth; advance(); continue; }
      if (depth == 0 &&
          (at_kw("chan") || at_kw("node") || at_kw("invariant") || at_kw("outline")))
        return;
      advance();
    }
  }

  // -- declarations ---------------------------------------------------------

  ChannelDecl parse_channel() {
    ChannelDecl decl;
    decl.span = cur().span;
    expect_kw("chan");
    decl.name = expect_ident("channel name");
    expect_kw("cap");
    decl.capacity = expect(Tok::Int, "channel capacity").value;
    expect_kw("dom");
    decl.domain = parse_domain();
    return decl;
  }

  DomainSyntax parse_domain() {
    DomainSyntax d;
    if (at(Tok::LBrace)) {
      advance();
      d.kind = DomainSyntaxKind::Enum;
      d.members.push_back(expect_ident("enum member"));
      while (at(Tok::Comma)) { advance(); d.members.push_back(expect_ident("enum member")); }
      expect(Tok::RBrace, "'}'");
      return d;
    }
    if (at(Tok::Int) || at(Tok::Minus)) {
      d.kind = DomainSyntaxKind::Range;
      d.lo = parse_signed_int();
      expect(Tok::DotDot, "'..'");
      d.hi = parse_signed_int();
      return d;
    }
    d.kind = DomainSyntaxKind::Named;
    d.name = expect_ident("domain");
    return d;
  }

  Value parse_signed_int() {
    bool neg = false;
    if (at(Tok::Minus)) { advance(); neg = true; }
    Value v = expect(Tok::Int, "integer").value;
    return neg ? -v : v;
  }

  NodeDecl parse_node() {
    NodeDecl decl;
    decl.span = cur().span;
    expect_kw("node");
    decl.name = expect_ident("node name");
    expect(Tok::LBrace, "'{'");
    while (!at(Tok::RBrace)) {
      if (at(Tok::Eof)) fail("UNTERMINATED_BLOCK", "unterminated node block");
      decl.programs.push_back(parse_program());
    }
    expect(Tok::RBrace, "'}'");
    return decl;
  }

  ProgramDecl parse_program() {
    ProgramDecl decl;
    decl.span = cur().span;
    expect_kw("program");
    decl.name = expect_ident("program name");
    expect(Tok::LBrace, "'{'");
    while (!at(Tok::RBrace)) {
      if (at(Tok::Eof)) fail("UNTERMINATED_BLOCK", "unterminated program block");
      if (at_kw("var")) {
        advance();
        VarDecl v;
        v.span = cur().span;
        v.name = expect_ident("variable name");
        expect(Tok::Colon, "':'");
        v.domain = parse_domain();
        decl.vars.push_back(std::move(v));
      } else if (at_kw("init")) {
        advance();
        decl.init_guard = parse_expr();
      } else if (at_kw("start")) {
        advance();
        decl.start_locs.push_back(expect_ident("location name"));
        while (at(Tok::Comma)) { advance(); decl.start_locs.push_back(expect_ident("location name")); }
      } else if (at_kw("final")) {
        advance();
        decl.final_locs.push_back(expect_ident("location name"));
        while (at(Tok::Comma)) { advance(); decl.final_locs.push_back(expect_ident("location name")); }
      } else if (at_kw("loc")) {
        decl.locs.push_back(parse_loc());
      } else {
        fail("EXPECTED_PROGRAM_ITEM", "expected 'var', 'init', 'start', 'final' or 'loc'");
      }
    }
    expect(Tok::RBrace, "'}'");
    return decl;
  }

  LocDecl parse_loc() {
    LocDecl decl;
    decl.span = cur().span;
    expect_kw("loc");
    decl.name = expect_ident("location name");
    if (at(Tok::Colon)) {
      advance();
      while (at_kw("when")) decl.edges.push_back(parse_edge());
    }
    return decl;
  }

  EdgeSyntax parse_edge() {
    EdgeSyntax e;
    e.span = cur().span;
    expect_kw("when");
    e.guard = parse_expr();
    expect_kw("do");
    e.action = parse_action();
    expect_kw("goto");
    e.target = expect_ident("target location");
    return e;
  }

  // Actions: c!e | c?v | x := e | name | name(e) | acquire r | release r,
  // optionally followed by an effect block `{ x := e ; ... }`.
  ActionSyntax parse_action() {
    ActionSyntax act;
    act.ref = parse_action_ref();
    if (act.ref.kind == ActionKind::Assign) {
      act.effects.emplace_back(act.ref.target, *act.ref.payload);
    }
    if (at(Tok::LBrace)) {
      if (act.ref.kind != ActionKind::Label)
        fail("EFFECT_BLOCK_ON_NONLABEL", "effect blocks are only allowed on named actions");
      advance();
      while (!at(Tok::RBrace)) {
        if (at(Tok::Eof)) fail("UNTERMINATED_BLOCK", "unterminated effect block");
        std::string target = expect_ident("variable");
        expect(Tok::Assign, "':='");
        act.effects.emplace_back(std::move(target), parse_expr());
        if (at(Tok::Semi)) advance();
      }
      expect(Tok::RBrace, "'}'");
    }
    return act;
  }

  ActionRef parse_action_ref() {
    ActionRef ref;
    if (at_kw("acquire") || at_kw("release")) {
      ref.kind = at_kw("acquire") ? ActionKind::Acquire : ActionKind::Release;
      advance();
      ref.name = expect_ident("resource name");
      return ref;
    }
    if (at_kw("dispose")) {
      advance();
      ref.kind = ActionKind::Dispose;
      expect(Tok::LParen, "'('");
      ref.address = parse_expr();
      expect(Tok::RParen, "')'");
      return ref;
    }
    if (at(Tok::LBracket)) {  // [e] := e'
      advance();
      ref.kind = ActionKind::HeapWrite;
      ref.address = parse_expr();
      expect(Tok::RBracket, "']'");
      expect(Tok::Assign, "':='");
      ref.payload = parse_expr();
      return ref;
    }
    std::string head = expect_ident("action");
    if (at(Tok::Bang)) {
      advance();
      ref.kind = ActionKind::Send;
      ref.channel = std::move(head);
      ref.payload = parse_expr();
      return ref;
    }
    if (at(Tok::Question)) {
      advance();
      ref.kind = ActionKind::Receive;
      ref.channel = std::move(head);
      ref.target = expect_ident("receive target variable");
      return ref;
    }
    if (at(Tok::Assign)) {
      advance();
      if (at_kw("alloc")) {  // x := alloc(e)
        advance();
        ref.kind = ActionKind::Alloc;
        ref.target = std::move(head);
        expect(Tok::LParen, "'('");
        ref.payload = parse_expr();
        expect(Tok::RParen, "')'");
        return ref;
      }
      if (at(Tok::LBracket)) {  // x := [e]
        advance();
        ref.kind = ActionKind::Load;
        ref.target = std::move(head);
        ref.address = parse_expr();
        expect(Tok::RBracket, "']'");
        return ref;
      }
      ref.kind = ActionKind::Assign;
      ref.target = std::move(head);
      ref.payload = parse_expr();
      return ref;
    }
    if (at(Tok::LParen)) {
      advance();
      ref.kind = ActionKind::Label;
      ref.name = std::move(head);
      ref.payload = parse_expr();
      expect(Tok::RParen, "')'");
      return ref;
    }
    ref.kind = ActionKind::Label;
    ref.name = std::move(head);
    return ref;
  }

  // -- expressions ----------------------------------------------------------
  // precedence: || < && < comparison < + - < unary < primary

  Expr parse_expr() { return parse_or(); }

  Expr parse_or() {
    Expr lhs = parse_and();
    while (at(Tok::OrOr)) {
      advance();
      lhs = Expr::binary(ExprKind::Or, std::move(lhs), parse_and());
    }
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_cmp();
    while (at(Tok::AndAnd)) {
      advance();
      lhs = Expr::binary(ExprKind::And, std::move(lhs), parse_cmp());
    }
    return lhs;
  }

  Expr parse_cmp() {
    Expr lhs = parse_additive();
    CmpOp op;
    switch (cur().kind) {
      case Tok::EqEq: op = CmpOp::Eq; break;
      case Tok::Neq: op = CmpOp::Ne; break;
      case Tok::Lt: op = CmpOp::Lt; break;
      case Tok::Le: op = CmpOp::Le; break;
      case Tok::Gt: op = CmpOp::Gt; break;
      case Tok::Ge: op = CmpOp::Ge; break;
      default: return lhs;
    }
    advance();
    return Expr::cmp(op, std::move(lhs), parse_additive());
  }

  Expr parse_additive() {
    Expr lhs = parse_unary();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      ExprKind k = at(Tok::Plus) ? ExprKind::Add : ExprKind::Sub;
      advance();
      lhs = Expr::binary(k, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (at(Tok::Minus)) {
      advance();
      return Expr::unary(ExprKind::Neg, parse_unary());
    }
    if (at(Tok::Bang)) {
      advance();
      return Expr::unary(ExprKind::Not, parse_unary());
    }
    return parse_primary();
  }

  Expr parse_primary() {
    if (at(Tok::Int)) return Expr::integer(advance().value);
    if (at(Tok::LParen)) {
      advance();
      Expr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Ident)) {
      const std::string& t = cur().text;
      if (t == "top" || t == "true") { advance(); return Expr::boolean(true); }
      if (t == "false") { advance(); return Expr::boolean(false); }
      return Expr::var(advance().text);
    }
    fail("EXPECTED_EXPRESSION", "expected expression");
  }

  // -- invariants -----------------------------------------------------------

  InvariantDecl parse_invariant() {
    InvariantDecl decl;
    decl.span = cur().span;
    expect_kw("invariant");
    decl.name = expect_ident("resource name");
    expect_kw("on");
    decl.vars.push_back(expect_ident("governed variable"));
    while (at(Tok::Comma)) { advance(); decl.vars.push_back(expect_ident("governed variable")); }
    expect(Tok::Colon, "':'");
    decl.assertion = parse_spatial_conjuncts();
    return decl;
  }

  // -- assertions -----------------------------------------------------------

  // An assertion pair: { <env factor> | <native conjunction> }
  AssertionPair parse_pair() {
    AssertionPair pair;
    expect(Tok::LBrace, "'{'");
    pair.foreign = parse_env_expr();
    expect(Tok::Pipe, "'|'");
    parse_native(pair);
    expect(Tok::RBrace, "'}'");
    return pair;
  }

  EnvExpr parse_env_expr() {
    std::vector<EnvExpr> conj;
    conj.push_back(parse_env_term());
    while (at(Tok::Wedge)) { advance(); conj.push_back(parse_env_term()); }
    std::vector<EnvExpr> keep;
    for (auto& c : conj)
      if (!c.is_top()) keep.push_back(std::move(c));
    return EnvExpr::conj(std::move(keep));
  }

  EnvExpr parse_env_term() {
    if (at(Tok::Diamond)) {
      advance();
      return EnvExpr::eventually(parse_env_term());
    }
    if (at(Tok::LParen)) {
      advance();
      EnvExpr e = parse_env_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at_kw("top")) { advance(); return EnvExpr::top(); }
    std::vector<EnvAtom> chain;
    chain.push_back(parse_env_atom());
    while (at(Tok::Prec)) { advance(); chain.push_back(parse_env_atom()); }
    if (chain.size() == 1) return EnvExpr::atom(std::move(chain[0]));
    return EnvExpr::path(std::move(chain));
  }

  EnvAtom parse_env_atom() {
    EnvAtom atom;
    atom.action = parse_action_ref();
    if (atom.action.kind == ActionKind::Assign)
      fail("BAD_ENV_ATOM", "assignment actions cannot be used as environment atoms");
    if (at(Tok::At)) {
      advance();
      atom.node = expect_ident("node qualifier");
    }
    return atom;
  }

  // Native side: conjuncts separated by /\, each either a temporal atom
  // (goes to the native environment factor) or a spatial/pure term.
  void parse_native(AssertionPair& pair) {
    std::vector<EnvExpr> env_parts;
    std::vector<Spatial> spatial_parts;
    bool saw_explicit_top = false;
    for (;;) {
      if (next_conjunct_is_temporal()) {
        env_parts.push_back(parse_env_term());
      } else {
        Spatial s = parse_spatial_term();
        if (s.kind == SpatialKind::True) saw_explicit_top = true;
        spatial_parts.push_back(std::move(s));
      }
      if (at(Tok::Wedge)) { advance(); continue; }
      break;
    }
    std::vector<EnvExpr> env_keep;
    for (auto& e : env_parts)
      if (!e.is_top()) env_keep.push_back(std::move(e));
    pair.native_env = EnvExpr::conj(std::move(env_keep));

    std::vector<Spatial> keep;
    for (auto& s : spatial_parts)
      if (s.kind != SpatialKind::True) keep.push_back(std::move(s));
    if (keep.empty()) {
      pair.native_spatial = Spatial::truth();
      (void)saw_explicit_top;
    } else if (keep.size() == 1) {
      pair.native_spatial = std::move(keep[0]);
    } else {
      // Multiple non-star conjuncts combine classically; well-formedness
      // enforces the at-most-one-heap-shape rule later.
      Spatial acc = std::move(keep.back());
      for (std::size_t i = keep.size() - 1; i-- > 0;)
        acc = Spatial::join(SpatialKind::And, std::move(keep[i]), std::move(acc));
      pair.native_spatial = std::move(acc);
    }
  }

  // Lookahead classification of the next conjunct.
  bool next_conjunct_is_temporal() const {
    if (at(Tok::Diamond)) return true;
    if (!at(Tok::Ident)) return false;
    const std::string& t = cur().text;
    if (t == "top" || t == "true" || t == "false" || t == "emp") return false;
    if (t == "acquire" || t == "release") return true;
    switch (peek().kind) {
      case Tok::Bang:
      case Tok::Question:
      case Tok::LParen:
      case Tok::At:
      case Tok::Prec:
        return true;
      case Tok::Wedge:
      case Tok::RBrace:
      case Tok::Pipe:
        return true;  // bare identifier conjunct: occurred-action atom
      default:
        return false;
    }
  }

  // Spatial term: a *-chain of atoms, or \/ of two terms (kept for the
  // out-of-fragment boundary), where an atom is emp | top | e |-> e' |
  // e |-> - | pure boolean expression. * and \/ right-associate.
  Spatial parse_spatial_term() {
    Spatial lhs = parse_star_chain();
    if (at(Tok::Vee)) {
      advance();
      return Spatial::join(SpatialKind::Or, std::move(lhs), parse_spatial_term());
    }
    return lhs;
  }

  Spatial parse_spatial_conjuncts() {
    std::vector<Spatial> parts;
    parts.push_back(parse_spatial_term());
    while (at(Tok::Wedge)) { advance(); parts.push_back(parse_spatial_term()); }
    Spatial acc = std::move(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;)
      acc = Spatial::join(SpatialKind::And, std::move(parts[i]), std::move(acc));
    return acc;
  }

  Spatial parse_star_chain() {
    Spatial lhs = parse_spatial_atom();
    if (at(Tok::Star)) {
      advance();
      return star(std::move(lhs), parse_star_chain());
    }
    return lhs;
  }

  Spatial parse_spatial_atom() {
    if (at_kw("emp")) { advance(); return Spatial::emp(); }
    // `top` is the True assertion when standalone; otherwise it is the
    // boolean literal inside a larger pure expression.
    if (at_kw("top")) {
      switch (peek().kind) {
        case Tok::Wedge:
        case Tok::Vee:
        case Tok::Star:
        case Tok::RBrace:
        case Tok::RParen:
        case Tok::Pipe:
        case Tok::Eof:
          advance();
          return Spatial::truth();
        default:
          break;
      }
    }
    if (at(Tok::LParen)) {
      // Either a parenthesized pure expression (possibly continuing with
      // a comparison) or a parenthesized spatial formula. Try the pure
      // expression route first and fall back.
      const std::size_t saved = pos_;
      try {
        Expr e = parse_expr();
        if (at(Tok::MapsTo)) {
          advance();
          return parse_points_to_rhs(std::move(e));
        }
        return Spatial::pure_of(std::move(e));
      } catch (const ParseError&) {
        pos_ = saved;
      }
      expect(Tok::LParen, "'('");
      Spatial inner = parse_spatial_conjuncts();
      expect(Tok::RParen, "')'");
      return inner;
    }
    Expr e = parse_expr();
    if (at(Tok::MapsTo)) {
      advance();
      return parse_points_to_rhs(std::move(e));
    }
    return Spatial::pure_of(std::move(e));
  }

  Spatial parse_points_to_rhs(Expr addr) {
    if (at(Tok::Minus) && peek().kind != Tok::Int && peek().kind != Tok::Ident &&
        peek().kind != Tok::LParen) {
      advance();
      return Spatial::points_to(std::move(addr), std::nullopt);
    }
    return Spatial::points_to(std::move(addr), parse_expr());
  }

  // -- outlines -------------------------------------------------------------

  OutlineDecl parse_outline() {
    OutlineDecl decl;
    decl.span = cur().span;
    expect_kw("outline");
    decl.name = expect_ident("outline name");
    expect(Tok::LBrace, "'{'");
    decl.root = parse_outline_node();
    expect(Tok::RBrace, "'}'");
    return decl;
  }

  OutlineNode parse_outline_node() {
    OutlineNode node;
    expect_kw("triple");
    node.triple = parse_triple_body();
    expect_kw("by");
    node.step = parse_step();
    return node;
  }

  TripleSyntax parse_triple_body() {
    TripleSyntax t;
    expect(Tok::LBrace, "'{'");
    expect_kw("pre");
    t.pre = parse_pair();
    expect_kw("code");
    expect(Tok::LBrace, "'{'");
    t.code = parse_code();
    expect(Tok::RBrace, "'}'");
    expect_kw("post");
    t.post = parse_pair();
    expect(Tok::RBrace, "'}'");
    return t;
  }

  CodeNode parse_code() {
    CodeNode node;
    if (at_kw("act")) {
      advance();
      node.kind = CodeKind::Act;
      node.action = parse_action_ref();
      return node;
    }
    if (at_kw("prog")) {
      advance();
      node.kind = CodeKind::Prog;
      node.program = expect_ident("program name");
      return node;
    }
    if (at_kw("par") || at_kw("parN")) {
      node.kind = at_kw("par") ? CodeKind::Par : CodeKind::ParN;
      advance();
      expect(Tok::LParen, "'('");
      node.children.push_back(parse_code());
      while (at(Tok::Comma)) { advance(); node.children.push_back(parse_code()); }
      expect(Tok::RParen, "')'");
      return node;
    }
    fail("EXPECTED_CODE", "expected 'act', 'prog', 'par' or 'parN'");
  }

  StepSyntax parse_step() {
    StepSyntax step;
    std::string rule = expect_ident("rule name");
    if (rule == "comm_axiom") step.rule = RuleKind::CommAxiom;
    else if (rule == "effect_axiom") step.rule = RuleKind::EffectAxiom;
    else if (rule == "consequence") step.rule = RuleKind::Consequence;
    else if (rule == "frame") step.rule = RuleKind::Frame;
    else if (rule == "seq") step.rule = RuleKind::Seq;
    else if (rule == "env_compose") step.rule = RuleKind::EnvCompose;
    else if (rule == "node_env_compose") step.rule = RuleKind::NodeEnvCompose;
    else if (rule == "node_compose") step.rule = RuleKind::NodeCompose;
    else if (rule == "resource_use") step.rule = RuleKind::ResourceUse;
    else fail("UNKNOWN_RULE", "unknown proof rule '" + rule + "'");

    const bool leaf = step.rule == RuleKind::CommAxiom ||
                      step.rule == RuleKind::EffectAxiom ||
                      step.rule == RuleKind::ResourceUse;
    if (leaf && !at(Tok::LBrace)) return step;

    expect(Tok::LBrace, "'{'");
    while (!at(Tok::RBrace)) {
      if (at(Tok::Eof)) fail("UNTERMINATED_BLOCK", "unterminated rule block");
      if (at_kw("premise")) {
        advance();
        expect(Tok::LBrace, "'{'");
        step.premises.push_back(parse_outline_node());
        expect(Tok::RBrace, "'}'");
      } else if (at_kw("at")) {
        advance();
        LocAnnotation ann;
        ann.program = expect_ident("program name");
        expect(Tok::Dot, "'.'");
        ann.location = expect_ident("location name");
        ann.assertion = parse_pair();
        step.annotations.push_back(std::move(ann));
      } else if (at_kw("frame")) {
        advance();
        expect(Tok::LBrace, "'{'");
        step.frame = parse_spatial_conjuncts();
        expect(Tok::RBrace, "'}'");
      } else {
        fail("EXPECTED_STEP_ITEM", "expected 'premise', 'at' or 'frame'");
      }
    }
    expect(Tok::RBrace, "'}'");
    return step;
  }
};

}  // namespace detail

/// Parses a model file. On any syntax error the model is absent and at
/// least one error diagnostic explains why.
inline ParseResult parse(std::string_view source) {
  detail::Parser p(source);
  return p.run();
}

}  // namespace dvl

#endif  // DVL_PARSER_HPP_
