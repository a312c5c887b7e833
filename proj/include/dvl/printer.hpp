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

#ifndef DVL_PRINTER_HPP_
#define DVL_PRINTER_HPP_

#include <sstream>
#include <string>

#include "dvl/source_model.hpp"

namespace dvl {

namespace detail {

// Precedence levels for expression printing; higher binds tighter.
inline int expr_prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Or: return 1;
    case ExprKind::And: return 2;
    case ExprKind::Cmp: return 3;
    case ExprKind::Add:
    case ExprKind::Sub: return 4;
    case ExprKind::Neg:
    case ExprKind::Not: return 5;
    default: return 6;
  }
}

inline void print_expr(std::ostream& os, const Expr& e, int min_prec = 0) {
  const int p = expr_prec(e);
  const bool paren = p < min_prec;
  if (paren) os << "(";
  switch (e.kind) {
    case ExprKind::IntLit: os << e.literal; break;
    case ExprKind::BoolLit: os << (e.literal ? "true" : "false"); break;
    case ExprKind::Var: os << e.name; break;
    case ExprKind::Neg:
      os << "-";
      print_expr(os, e.args[0], p + 1);
      break;
    case ExprKind::Not:
      os << "!";
      print_expr(os, e.args[0], p + 1);
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
      print_expr(os, e.args[0], p);
      os << (e.kind == ExprKind::Add ? " + " : " - ");
      print_expr(os, e.args[1], p + 1);
      break;
    case ExprKind::And:
    case ExprKind::Or:
      print_expr(os, e.args[0], p);
      os << (e.kind == ExprKind::And ? " && " : " || ");
      print_expr(os, e.args[1], p + 1);
      break;
    case ExprKind::Cmp: {
      print_expr(os, e.args[0], p + 1);
      const char* op = "==";
      switch (e.op) {
        case CmpOp::Eq: op = "=="; break;
        case CmpOp::Ne: op = "!="; break;
        case CmpOp::Lt: op = "<"; break;
        case CmpOp::Le: op = "<="; break;
        case CmpOp::Gt: op = ">"; break;
        case CmpOp::Ge: op = ">="; break;
      }
      os << " " << op << " ";
      print_expr(os, e.args[1], p + 1);
      break;
    }
  }
  if (paren) os << ")";
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
  std::ostringstream os;
  detail::print_expr(os, e);
  return os.str();
}

/// Canonical textual identity of an action; occurred-action atoms match
/// against this rendering.
inline std::string to_string(const ActionRef& a) {
  std::ostringstream os;
  switch (a.kind) {
    case ActionKind::Send:
      os << a.channel << "!";
      detail::print_expr(os, *a.payload, 5);
      break;
    case ActionKind::Receive:
      os << a.channel << "?" << a.target;
      break;
    case ActionKind::Assign:
      os << a.target << " := " << to_string(*a.payload);
      break;
    case ActionKind::Label:
      os << a.name;
      if (a.payload) os << "(" << to_string(*a.payload) << ")";
      break;
    case ActionKind::Acquire: os << "acquire " << a.name; break;
    case ActionKind::Release: os << "release " << a.name; break;
    case ActionKind::Alloc:
      os << a.target << " := alloc(" << to_string(*a.payload) << ")";
      break;
    case ActionKind::Load:
      os << a.target << " := [" << to_string(*a.address) << "]";
      break;
    case ActionKind::HeapWrite:
      os << "[" << to_string(*a.address) << "] := " << to_string(*a.payload);
      break;
    case ActionKind::Dispose:
      os << "dispose(" << to_string(*a.address) << ")";
      break;
  }
  return os.str();
}

inline std::string to_string(const ActionSyntax& a) {
  std::ostringstream os;
  os << to_string(a.ref);
  if (a.ref.kind == ActionKind::Label && !a.effects.empty()) {
    os << " { ";
    for (std::size_t i = 0; i < a.effects.size(); ++i) {
      if (i) os << "; ";
      os << a.effects[i].first << " := " << to_string(a.effects[i].second);
    }
    os << " }";
  }
  return os.str();
}

inline std::string to_string(const EnvAtom& a) {
  std::string s = to_string(a.action);
  if (!a.node.empty()) s += "@" + a.node;
  return s;
}

inline std::string to_string(const EnvExpr& e) {
  switch (e.kind) {
    case EnvKind::Top: return "top";
    case EnvKind::Atom: return to_string(e.atoms[0]);
    case EnvKind::Path: {
      std::string s;
      for (std::size_t i = 0; i < e.atoms.size(); ++i) {
        if (i) s += " -< ";
        s += to_string(e.atoms[i]);
      }
      return s;
    }
    case EnvKind::Eventually: {
      const EnvExpr& inner = e.args[0];
      if (inner.kind == EnvKind::And || inner.kind == EnvKind::Path)
        return "<> (" + to_string(inner) + ")";
      return "<> " + to_string(inner);
    }
    case EnvKind::And: {
      std::string s;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += " /\\ ";
        const EnvExpr& c = e.args[i];
        if (c.kind == EnvKind::And) s += "(" + to_string(c) + ")";
        else s += to_string(c);
      }
      return s;
    }
  }
  return "top";
}

namespace detail {

// Spatial printing: /\ (loosest) < \/ < * < atom.
inline void print_spatial(std::ostream& os, const Spatial& s, int min_prec) {
  auto prec = [](const Spatial& x) {
    switch (x.kind) {
      case SpatialKind::And: return 1;
      case SpatialKind::Or: return 2;
      case SpatialKind::Star: return 3;
      default: return 4;
    }
  };
  const int p = prec(s);
  const bool paren = p < min_prec;
  if (paren) os << "(";
  switch (s.kind) {
    case SpatialKind::True: os << "top"; break;
    case SpatialKind::Emp: os << "emp"; break;
    case SpatialKind::Pure: print_expr(os, s.pure); break;
    case SpatialKind::PointsTo:
      print_expr(os, s.addr, 4);
      os << " |-> ";
      if (s.value) print_expr(os, *s.value, 4);
      else os << "-";
      break;
    case SpatialKind::Star:
      print_spatial(os, s.args[0], p + 1);
      os << " * ";
      print_spatial(os, s.args[1], p);  // right-associative
      break;
    case SpatialKind::Or:
      print_spatial(os, s.args[0], p + 1);
      os << " \\/ ";
      print_spatial(os, s.args[1], p);
      break;
    case SpatialKind::And:
      print_spatial(os, s.args[0], p + 1);
      os << " /\\ ";
      print_spatial(os, s.args[1], p);
      break;
    case SpatialKind::Not:
      os << "!";
      print_spatial(os, s.args[0], 4);
      break;
  }
  if (paren) os << ")";
}

}  // namespace detail

inline std::string to_string(const Spatial& s) {
  std::ostringstream os;
  detail::print_spatial(os, s, 0);
  return os.str();
}

namespace detail {

// A bare identifier conjunct would be reparsed as an occurred-action atom;
// parenthesize lone variable conjuncts to keep them spatial.
inline void append_spatial_conjuncts(const Spatial& s, std::string& out) {
  if (s.kind == SpatialKind::And) {
    append_spatial_conjuncts(s.args[0], out);
    out += " /\\ ";
    append_spatial_conjuncts(s.args[1], out);
    return;
  }
  if (s.kind == SpatialKind::Pure && s.pure.kind == ExprKind::Var) {
    out += "(" + to_string(s.pure) + ")";
    return;
  }
  out += to_string(s);
}

}  // namespace detail

/// { Γ | γ ∧ P } in the DSL's ASCII operator syntax.
inline std::string to_string(const AssertionPair& pair) {
  std::string native;
  if (!pair.native_env.is_top()) native = to_string(pair.native_env);
  if (!(pair.native_spatial.kind == SpatialKind::True)) {
    if (!native.empty()) native += " /\\ ";
    detail::append_spatial_conjuncts(pair.native_spatial, native);
  }
  if (native.empty()) native = "top";
  return "{ " + to_string(pair.foreign) + " | " + native + " }";
}

inline std::string to_string(const CodeNode& c) {
  switch (c.kind) {
    case CodeKind::Act: return "act " + to_string(c.action);
    case CodeKind::Prog: return "prog " + c.program;
    case CodeKind::Par:
    case CodeKind::ParN: {
      std::string s = c.kind == CodeKind::Par ? "par(" : "parN(";
      for (std::size_t i = 0; i < c.children.size(); ++i) {
        if (i) s += ", ";
        s += to_string(c.children[i]);
      }
      return s + ")";
    }
  }
  return "";
}

namespace detail {

inline const char* rule_name(RuleKind r) {
  switch (r) {
    case RuleKind::CommAxiom: return "comm_axiom";
    case RuleKind::EffectAxiom: return "effect_axiom";
    case RuleKind::Consequence: return "consequence";
    case RuleKind::Frame: return "frame";
    case RuleKind::Seq: return "seq";
    case RuleKind::EnvCompose: return "env_compose";
    case RuleKind::NodeEnvCompose: return "node_env_compose";
    case RuleKind::NodeCompose: return "node_compose";
    case RuleKind::ResourceUse: return "resource_use";
  }
  return "?";
}

inline void print_domain(std::ostream& os, const DomainSyntax& d) {
  switch (d.kind) {
    case DomainSyntaxKind::Named: os << d.name; break;
    case DomainSyntaxKind::Range: os << d.lo << ".." << d.hi; break;
    case DomainSyntaxKind::Enum: {
      os << "{";
      for (std::size_t i = 0; i < d.members.size(); ++i) {
        if (i) os << ", ";
        os << d.members[i];
      }
      os << "}";
      break;
    }
  }
}

inline void print_triple(std::ostream& os, const TripleSyntax& t, int indent);

inline void indent_to(std::ostream& os, int n) {
  for (int i = 0; i < n; ++i) os << ' ';
}

inline void print_outline_node(std::ostream& os, const OutlineNode& node, int indent) {
  indent_to(os, indent);
  os << "triple {\n";
  print_triple(os, node.triple, indent + 2);
  indent_to(os, indent);
  os << "}\n";
  indent_to(os, indent);
  os << "by " << rule_name(node.step.rule);
  const StepSyntax& step = node.step;
  if (step.premises.empty() && step.annotations.empty() && !step.frame) {
    os << "\n";
    return;
  }
  os << " {\n";
  if (step.frame) {
    indent_to(os, indent + 2);
    os << "frame { " << to_string(*step.frame) << " }\n";
  }
  for (const auto& ann : step.annotations) {
    indent_to(os, indent + 2);
    os << "at " << ann.program << "." << ann.location << " "
       << to_string(ann.assertion) << "\n";
  }
  for (const auto& premise : step.premises) {
    indent_to(os, indent + 2);
    os << "premise {\n";
    print_outline_node(os, premise, indent + 4);
    indent_to(os, indent + 2);
    os << "}\n";
  }
  indent_to(os, indent);
  os << "}\n";
}

inline void print_triple(std::ostream& os, const TripleSyntax& t, int indent) {
  indent_to(os, indent);
  os << "pre " << to_string(t.pre) << "\n";
  indent_to(os, indent);
  os << "code { " << to_string(t.code) << " }\n";
  indent_to(os, indent);
  os << "post " << to_string(t.post) << "\n";
}

}  // namespace detail

/// Canonical rendering; parse(pretty_print(m)) reproduces m and a second
/// print round is byte-identical.
inline std::string pretty_print(const SourceModel& model) {
  std::ostringstream os;
  bool first_block = true;
  auto block_gap = [&] {
    if (!first_block) os << "\n";
    first_block = false;
  };

  for (const auto& c : model.channels) {
    first_block = false;
    os << "chan " << c.name << " cap " << c.capacity << " dom ";
    detail::print_domain(os, c.domain);
    os << "\n";
  }
  for (const auto& inv : model.invariants) {
    block_gap();
    os << "invariant " << inv.name << " on ";
    for (std::size_t i = 0; i < inv.vars.size(); ++i) {
      if (i) os << ", ";
      os << inv.vars[i];
    }
    os << " : " << to_string(inv.assertion) << "\n";
  }
  for (const auto& node : model.nodes) {
    block_gap();
    os << "node " << node.name << " {\n";
    for (std::size_t pi = 0; pi < node.programs.size(); ++pi) {
      const auto& prog = node.programs[pi];
      if (pi) os << "\n";
      os << "  program " << prog.name << " {\n";
      for (const auto& v : prog.vars) {
        os << "    var " << v.name << " : ";
        detail::print_domain(os, v.domain);
        os << "\n";
      }
      if (prog.init_guard) os << "    init " << to_string(*prog.init_guard) << "\n";
      if (!prog.start_locs.empty()) {
        os << "    start ";
        for (std::size_t i = 0; i < prog.start_locs.size(); ++i) {
          if (i) os << ", ";
          os << prog.start_locs[i];
        }
        os << "\n";
      }
      if (!prog.final_locs.empty()) {
        os << "    final ";
        for (std::size_t i = 0; i < prog.final_locs.size(); ++i) {
          if (i) os << ", ";
          os << prog.final_locs[i];
        }
        os << "\n";
      }
      for (const auto& loc : prog.locs) {
        os << "    loc " << loc.name;
        if (loc.edges.size() == 1) {
          const auto& e = loc.edges[0];
          os << ": when " << to_string(e.guard) << " do " << to_string(e.action)
             << " goto " << e.target;
        } else if (loc.edges.size() > 1) {
          os << ":";
          for (const auto& e : loc.edges) {
            os << "\n      when " << to_string(e.guard) << " do "
               << to_string(e.action) << " goto " << e.target;
          }
        }
        os << "\n";
      }
      os << "  }\n";
    }
    os << "}\n";
  }
  for (const auto& outline : model.outlines) {
    block_gap();
    os << "outline " << outline.name << " {\n";
    detail::print_outline_node(os, outline.root, 2);
    os << "}\n";
  }
  return os.str();
}

}  // namespace dvl

#endif  // DVL_PRINTER_HPP_
