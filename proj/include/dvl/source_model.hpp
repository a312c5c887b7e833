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

#ifndef DVL_SOURCE_MODEL_HPP_
#define DVL_SOURCE_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dvl/diag.hpp"
#include "dvl/value.hpp"

namespace dvl {

// ---------------------------------------------------------------------------
// Expressions (guards, payloads, pure assertion atoms)
// ---------------------------------------------------------------------------

enum class ExprKind { IntLit, BoolLit, Var, Add, Sub, Neg, Not, And, Or, Cmp };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct Expr {
  ExprKind kind = ExprKind::BoolLit;
  Value literal = 1;          // IntLit / BoolLit
  std::string name;           // Var
  CmpOp op = CmpOp::Eq;       // Cmp
  std::vector<Expr> args;     // operands

  bool operator==(const Expr&) const = default;

  static Expr top() { return Expr{ExprKind::BoolLit, 1, "", CmpOp::Eq, {}}; }
  static Expr boolean(bool b) { return Expr{ExprKind::BoolLit, b ? 1 : 0, "", CmpOp::Eq, {}}; }
  static Expr integer(Value v) { return Expr{ExprKind::IntLit, v, "", CmpOp::Eq, {}}; }
  static Expr var(std::string n) { return Expr{ExprKind::Var, 0, std::move(n), CmpOp::Eq, {}}; }
  static Expr unary(ExprKind k, Expr a) {
    if (k == ExprKind::Neg && a.kind == ExprKind::IntLit)
      return integer(-a.literal);  // canonical: negative literals fold
    Expr e{k, 0, "", CmpOp::Eq, {}};
    e.args.push_back(std::move(a));
    return e;
  }
  static Expr binary(ExprKind k, Expr a, Expr b) {
    Expr e{k, 0, "", CmpOp::Eq, {}};
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }
  static Expr cmp(CmpOp op, Expr a, Expr b) {
    Expr e{ExprKind::Cmp, 0, "", op, {}};
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  bool is_true_literal() const { return kind == ExprKind::BoolLit && literal == 1; }
};

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

enum class ActionKind {
  Send, Receive, Assign, Label, Acquire, Release,
  Alloc,      // x := alloc(e)
  Load,       // x := [e]
  HeapWrite,  // [e] := e'
  Dispose,    // dispose(e)
};

/// The identity of an action as written: `c!e`, `c?v`, `x := e`, `name`,
/// `name(e)`, `acquire r`, `release r`, plus the heap primitives.
struct ActionRef {
  ActionKind kind = ActionKind::Label;
  std::string channel;              // Send / Receive
  std::string name;                 // Label: action name; Acquire/Release: resource
  std::optional<Expr> payload;      // Send/Assign/Alloc/HeapWrite: value expr
  std::optional<Expr> address;      // Load/HeapWrite/Dispose: address expr
  std::string target;               // Receive/Assign/Alloc/Load: assigned variable

  bool operator==(const ActionRef&) const = default;
};

/// An edge action: its reference identity plus any state effects
/// (assignments executed atomically with the step).
struct ActionSyntax {
  ActionRef ref;
  std::vector<std::pair<std::string, Expr>> effects;

  bool operator==(const ActionSyntax&) const = default;
};

// ---------------------------------------------------------------------------
// Spatial assertions (CSL fragment)
// ---------------------------------------------------------------------------

enum class SpatialKind { True, Emp, PointsTo, Star, Pure, And, Or, Not };

/// Spatial formulas: emp, e |-> e', e |-> -, P * Q, pure boolean
/// expressions, and classical connectives restricted to pure operands.
/// `True` is the pure unit (no heap constraint); `Emp` pins the empty heap.
struct Spatial {
  SpatialKind kind = SpatialKind::True;
  Expr addr;                         // PointsTo
  std::optional<Expr> value;         // PointsTo: nullopt encodes |-> -
  Expr pure;                         // Pure
  std::vector<Spatial> args;         // Star / And / Or / Not

  bool operator==(const Spatial&) const = default;

  static Spatial truth() { return Spatial{}; }
  static Spatial emp() { return Spatial{SpatialKind::Emp, {}, {}, {}, {}}; }
  static Spatial points_to(Expr addr, std::optional<Expr> value) {
    return Spatial{SpatialKind::PointsTo, std::move(addr), std::move(value), {}, {}};
  }
  static Spatial pure_of(Expr e) {
    return Spatial{SpatialKind::Pure, {}, {}, std::move(e), {}};
  }
  static Spatial join(SpatialKind k, Spatial a, Spatial b) {
    Spatial s{k, {}, {}, {}, {}};
    s.args.push_back(std::move(a));
    s.args.push_back(std::move(b));
    return s;
  }
};

/// Separating conjunction constructor (syntactic).
inline Spatial star(Spatial a, Spatial b) {
  return Spatial::join(SpatialKind::Star, std::move(a), std::move(b));
}

/// Iterated separating conjunction; right-associates. The empty
/// iteration is True and a singleton is the operand itself.
inline Spatial star_all(std::vector<Spatial> parts) {
  if (parts.empty()) return Spatial::truth();
  Spatial acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    acc = star(parts[i], std::move(acc));
  return acc;
}

// ---------------------------------------------------------------------------
// Environment factors (temporal conditions over action histories)
// ---------------------------------------------------------------------------

enum class EnvKind { Top, Atom, Path, Eventually, And };

/// An occurred-action descriptor, optionally node-qualified: c!s@N'.
struct EnvAtom {
  ActionRef action;
  std::string node;  // empty = unqualified

  bool operator==(const EnvAtom&) const = default;
};

/// Environment factor syntax: ⊤, occurred atoms, precedence chains
/// a0 -< a1 -< ... (length 2 is a plain ◁ atom), ◇φ, φ ∧ ψ.
struct EnvExpr {
  EnvKind kind = EnvKind::Top;
  std::vector<EnvAtom> atoms;       // Atom: one entry; Path: the chain
  std::vector<EnvExpr> args;        // Eventually / And

  bool operator==(const EnvExpr&) const = default;

  static EnvExpr top() { return EnvExpr{}; }
  static EnvExpr atom(EnvAtom a) {
    EnvExpr e{EnvKind::Atom, {}, {}};
    e.atoms.push_back(std::move(a));
    return e;
  }
  static EnvExpr path(std::vector<EnvAtom> chain) {
    EnvExpr e{EnvKind::Path, std::move(chain), {}};
    return e;
  }
  static EnvExpr eventually(EnvExpr inner) {
    EnvExpr e{EnvKind::Eventually, {}, {}};
    e.args.push_back(std::move(inner));
    return e;
  }
  static EnvExpr conj(std::vector<EnvExpr> parts) {
    std::vector<EnvExpr> keep;
    for (auto& p : parts)
      if (!p.is_top()) keep.push_back(std::move(p));
    if (keep.empty()) return top();
    if (keep.size() == 1) return keep[0];
    EnvExpr e{EnvKind::And, {}, {}};
    e.args = std::move(keep);
    return e;
  }
  bool is_top() const { return kind == EnvKind::Top; }
};

/// {Γ | γ ∧ P}: a foreign environment factor plus the native pair.
struct AssertionPair {
  EnvExpr foreign;
  EnvExpr native_env;
  Spatial native_spatial;

  bool operator==(const AssertionPair&) const = default;
};

// ---------------------------------------------------------------------------
// Proof outline syntax
// ---------------------------------------------------------------------------

enum class CodeKind { Act, Prog, Par, ParN };

/// Code trees for triples: a single action, a program reference, or
/// program-level / node-level parallel composition.
struct CodeNode {
  CodeKind kind = CodeKind::Act;
  ActionRef action;                 // Act
  std::string program;              // Prog
  std::vector<CodeNode> children;   // Par / ParN

  bool operator==(const CodeNode&) const = default;
};

struct TripleSyntax {
  AssertionPair pre;
  CodeNode code;
  AssertionPair post;

  bool operator==(const TripleSyntax&) const = default;
};

enum class RuleKind {
  CommAxiom,
  EffectAxiom,
  Consequence,
  Frame,
  Seq,
  EnvCompose,
  NodeEnvCompose,
  NodeCompose,
  ResourceUse,
};

struct LocAnnotation {
  std::string program;
  std::string location;
  AssertionPair assertion;

  bool operator==(const LocAnnotation&) const = default;
};

struct OutlineNode;

struct StepSyntax {
  RuleKind rule = RuleKind::EffectAxiom;
  std::vector<OutlineNode> premises;        // compositions, consequence, frame
  std::vector<LocAnnotation> annotations;   // seq
  std::optional<Spatial> frame;             // frame

  bool operator==(const StepSyntax&) const;
};

/// One node of the rule tree: the triple it concludes plus the rule
/// application that justifies it.
struct OutlineNode {
  TripleSyntax triple;
  StepSyntax step;

  bool operator==(const OutlineNode&) const = default;
};

inline bool StepSyntax::operator==(const StepSyntax& o) const {
  return rule == o.rule && premises == o.premises &&
         annotations == o.annotations && frame == o.frame;
}

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

enum class DomainSyntaxKind { Named, Range, Enum };

struct DomainSyntax {
  DomainSyntaxKind kind = DomainSyntaxKind::Named;
  std::string name;                     // Named: bool / int
  Value lo = 0, hi = 0;                 // Range
  std::vector<std::string> members;     // Enum

  bool operator==(const DomainSyntax&) const = default;
};

struct ChannelDecl {
  std::string name;
  Value capacity = 1;
  DomainSyntax domain;
  Span span;

  bool operator==(const ChannelDecl& o) const {
    return name == o.name && capacity == o.capacity && domain == o.domain;
  }
};

struct VarDecl {
  std::string name;
  DomainSyntax domain;
  Span span;

  bool operator==(const VarDecl& o) const {
    return name == o.name && domain == o.domain;
  }
};

struct EdgeSyntax {
  Expr guard;
  ActionSyntax action;
  std::string target;
  Span span;

  bool operator==(const EdgeSyntax& o) const {
    return guard == o.guard && action == o.action && target == o.target;
  }
};

struct LocDecl {
  std::string name;
  std::vector<EdgeSyntax> edges;
  Span span;

  bool operator==(const LocDecl& o) const {
    return name == o.name && edges == o.edges;
  }
};

struct ProgramDecl {
  std::string name;
  std::vector<VarDecl> vars;
  std::vector<LocDecl> locs;
  std::optional<Expr> init_guard;
  std::vector<std::string> start_locs;   // empty: first declared location
  std::vector<std::string> final_locs;   // sinks are always final
  Span span;

  bool operator==(const ProgramDecl& o) const {
    return name == o.name && vars == o.vars && locs == o.locs &&
           init_guard == o.init_guard && start_locs == o.start_locs &&
           final_locs == o.final_locs;
  }
};

struct NodeDecl {
  std::string name;
  std::vector<ProgramDecl> programs;
  Span span;

  bool operator==(const NodeDecl& o) const {
    return name == o.name && programs == o.programs;
  }
};

/// Resource invariant declaration: a named resource, the variables it
/// governs, and the invariant assertion.
struct InvariantDecl {
  std::string name;
  std::vector<std::string> vars;
  Spatial assertion;
  Span span;

  bool operator==(const InvariantDecl& o) const {
    return name == o.name && vars == o.vars && assertion == o.assertion;
  }
};

struct OutlineDecl {
  std::string name;
  OutlineNode root;
  Span span;

  bool operator==(const OutlineDecl& o) const {
    return name == o.name && root == o.root;
  }
};

/// A parsed model file: channels, nodes (housing programs), resource
/// invariants, and proof outlines.
struct SourceModel {
  std::vector<ChannelDecl> channels;
  std::vector<NodeDecl> nodes;
  std::vector<InvariantDecl> invariants;
  std::vector<OutlineDecl> outlines;

  bool operator==(const SourceModel&) const = default;

  bool empty() const {
    return channels.empty() && nodes.empty() && invariants.empty() &&
           outlines.empty();
  }
};

}  // namespace dvl

#endif  // DVL_SOURCE_MODEL_HPP_
