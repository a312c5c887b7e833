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

#ifndef DVL_LOWER_HPP_
#define DVL_LOWER_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dvl/diag.hpp"
#include "dvl/printer.hpp"
#include "dvl/source_model.hpp"
#include "dvl/value.hpp"

namespace dvl {

// ---------------------------------------------------------------------------
// Typed core model
// ---------------------------------------------------------------------------

struct VarInfo {
  std::string name;
  Domain domain;
  int owner_program = -1;
};

struct ChannelInfo {
  std::string name;
  Value capacity = 1;
  Domain domain;
};

/// One conditional transition l -[g:alpha]-> l'.
struct EdgeInfo {
  int source = 0;
  int target = 0;
  Expr guard;
  ActionSyntax action;
  std::string label;      // canonical action text; atom matching key
  int channel = -1;       // Send / Receive
  int resource = -1;      // Acquire / Release
  int index = 0;          // declaration order within the program
};

/// The minimal program unit: locations, guarded action edges, the effect
/// function (carried on edges), initial locations and initial condition.
struct ProgramUnit {
  std::string name;
  int id = -1;
  int node = -1;  // owning node index
  std::vector<std::string> locations;
  std::map<std::string, int> loc_ids;
  std::vector<std::vector<int>> out_edges;  // per source location, edge ids
  std::vector<EdgeInfo> edges;              // by declaration order
  std::vector<int> start_locs;
  Expr init_guard = Expr::top();
  std::vector<bool> final_locs;             // sinks plus explicit finals
  std::set<int> written_vars;

  int initial_location() const { return start_locs.empty() ? 0 : start_locs[0]; }
  bool is_final(int loc) const { return final_locs[static_cast<std::size_t>(loc)]; }
};

struct ResourceInfo {
  std::string name;
  std::vector<int> vars;
  Spatial invariant;
};

/// Fully resolved model: the (Var, Ch) signature, the node set, program
/// units with @-ownership, resource invariants, and the outlines to check.
struct LoweredModel {
  std::vector<VarInfo> vars;
  std::map<std::string, int> var_ids;
  std::vector<ChannelInfo> channels;
  std::map<std::string, int> chan_ids;
  std::map<std::string, Value> enum_members;
  std::vector<std::string> nodes;
  std::map<std::string, int> node_ids;
  std::vector<ProgramUnit> units;
  std::map<std::string, int> unit_ids;
  std::vector<ResourceInfo> resources;
  std::map<std::string, int> resource_ids;
  std::vector<OutlineDecl> outlines;

  int var_id(const std::string& name) const {
    auto it = var_ids.find(name);
    return it == var_ids.end() ? -1 : it->second;
  }
  int chan_id(const std::string& name) const {
    auto it = chan_ids.find(name);
    return it == chan_ids.end() ? -1 : it->second;
  }
  int unit_id(const std::string& name) const {
    auto it = unit_ids.find(name);
    return it == unit_ids.end() ? -1 : it->second;
  }
  int node_id(const std::string& name) const {
    auto it = node_ids.find(name);
    return it == node_ids.end() ? -1 : it->second;
  }
  int resource_id(const std::string& name) const {
    auto it = resource_ids.find(name);
    return it == resource_ids.end() ? -1 : it->second;
  }

  /// The @ relation: owning node of an action's program.
  int owner_node(int program) const { return units[static_cast<std::size_t>(program)].node; }

  bool var_is_resource_governed(int var) const {
    for (const auto& r : resources)
      for (int v : r.vars)
        if (v == var) return true;
    return false;
  }
};

struct LowerResult {
  std::optional<LoweredModel> model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

// ---------------------------------------------------------------------------
// Expression evaluation
// ---------------------------------------------------------------------------

/// Variable evaluation eta: one value per declared variable.
using Store = std::vector<Value>;

inline Value eval_expr(const Expr& e, const Store& store, const LoweredModel& m) {
  switch (e.kind) {
    case ExprKind::IntLit:
    case ExprKind::BoolLit:
      return e.literal;
    case ExprKind::Var: {
      int id = m.var_id(e.name);
      if (id >= 0) return store[static_cast<std::size_t>(id)];
      auto it = m.enum_members.find(e.name);
      if (it != m.enum_members.end()) return it->second;
      throw std::logic_error("unresolved identifier in expression: " + e.name);
    }
    case ExprKind::Add:
      return eval_expr(e.args[0], store, m) + eval_expr(e.args[1], store, m);
    case ExprKind::Sub:
      return eval_expr(e.args[0], store, m) - eval_expr(e.args[1], store, m);
    case ExprKind::Neg:
      return -eval_expr(e.args[0], store, m);
    case ExprKind::Not:
      return eval_expr(e.args[0], store, m) == 0 ? 1 : 0;
    case ExprKind::And:
      return (eval_expr(e.args[0], store, m) != 0 && eval_expr(e.args[1], store, m) != 0) ? 1 : 0;
    case ExprKind::Or:
      return (eval_expr(e.args[0], store, m) != 0 || eval_expr(e.args[1], store, m) != 0) ? 1 : 0;
    case ExprKind::Cmp: {
      Value a = eval_expr(e.args[0], store, m);
      Value b = eval_expr(e.args[1], store, m);
      switch (e.op) {
        case CmpOp::Eq: return a == b;
        case CmpOp::Ne: return a != b;
        case CmpOp::Lt: return a < b;
        case CmpOp::Le: return a <= b;
        case CmpOp::Gt: return a > b;
        case CmpOp::Ge: return a >= b;
      }
      return 0;
    }
  }
  return 0;
}

inline bool eval_guard(const Expr& e, const Store& store, const LoweredModel& m) {
  return eval_expr(e, store, m) != 0;
}

/// Collects variable names referenced by an expression (excluding enum
/// member constants, which the caller resolves against the model).
inline void collect_vars(const Expr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::Var) out.insert(e.name);
  for (const auto& a : e.args) collect_vars(a, out);
}

// ---------------------------------------------------------------------------
// Lowering / well-formedness
// ---------------------------------------------------------------------------

namespace detail {

class Lowering {
 public:
  explicit Lowering(const SourceModel& src) : src_(src) {}

  LowerResult run() {
    collect_channels();
    collect_programs();
    collect_resources();
    lower_units();
    check_outline_references();
    LowerResult result;
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) result.model = std::move(model_);
    return result;
  }

 private:
  const SourceModel& src_;
  LoweredModel model_;
  std::vector<Diagnostic> diags_;

  void error(std::string code, Span span, std::string msg) {
    diags_.push_back(Diagnostic::error(std::move(code), span, std::move(msg)));
  }

  std::optional<Domain> resolve_domain(const DomainSyntax& d, Span span) {
    switch (d.kind) {
      case DomainSyntaxKind::Named:
        if (d.name == "bool") return Domain::boolean();
        // `int` is the default desk-scale integer range.
        if (d.name == "int") return Domain::int_range(0, 3);
        error("UNKNOWN_DOMAIN", span, "unknown domain '" + d.name + "' (use bool, int, lo..hi or an enum)");
        return std::nullopt;
      case DomainSyntaxKind::Range:
        if (d.lo > d.hi) {
          error("EMPTY_DOMAIN", span, "empty integer range domain");
          return std::nullopt;
        }
        return Domain::int_range(d.lo, d.hi);
      case DomainSyntaxKind::Enum: {
        for (const auto& member : d.members) {
          Value idx = static_cast<Value>(&member - d.members.data());
          auto [it, inserted] = model_.enum_members.emplace(member, idx);
          if (!inserted && it->second != idx) {
            error("DUPLICATE_ID", span,
                  "enum member '" + member + "' already declared with a different value");
            return std::nullopt;
          }
        }
        return Domain::enumeration(d.members);
      }
    }
    return std::nullopt;
  }

  void collect_channels() {
    for (const auto& c : src_.channels) {
      if (model_.chan_ids.count(c.name)) {
        error("DUPLICATE_ID", c.span, "duplicate channel '" + c.name + "'");
        continue;
      }
      if (c.capacity < 1) {
        error("BAD_CAPACITY", c.span, "channel capacity must be positive");
        continue;
      }
      auto dom = resolve_domain(c.domain, c.span);
      if (!dom) continue;
      model_.chan_ids[c.name] = static_cast<int>(model_.channels.size());
      model_.channels.push_back(ChannelInfo{c.name, c.capacity, *dom});
    }
  }

  void collect_programs() {
    for (const auto& node : src_.nodes) {
      if (model_.node_ids.count(node.name)) {
        error("DUPLICATE_ID", node.span, "duplicate node '" + node.name + "'");
        continue;
      }
      model_.node_ids[node.name] = static_cast<int>(model_.nodes.size());
      model_.nodes.push_back(node.name);
      for (const auto& prog : node.programs) {
        if (model_.unit_ids.count(prog.name)) {
          error("DUPLICATE_ID", prog.span,
                "program '" + prog.name + "' claimed by two declarations");
          continue;
        }
        int pid = static_cast<int>(model_.units.size());
        model_.unit_ids[prog.name] = pid;
        ProgramUnit unit;
        unit.name = prog.name;
        unit.id = pid;
        unit.node = model_.node_ids[node.name];
        model_.units.push_back(std::move(unit));
        for (const auto& v : prog.vars) {
          if (model_.var_ids.count(v.name) || model_.enum_members.count(v.name)) {
            error("DUPLICATE_ID", v.span, "duplicate variable '" + v.name + "'");
            continue;
          }
          auto dom = resolve_domain(v.domain, v.span);
          if (!dom) continue;
          model_.var_ids[v.name] = static_cast<int>(model_.vars.size());
          model_.vars.push_back(VarInfo{v.name, *dom, pid});
        }
      }
    }
  }

  void collect_resources() {
    for (const auto& inv : src_.invariants) {
      if (model_.resource_ids.count(inv.name)) {
        error("DUPLICATE_ID", inv.span, "duplicate resource invariant '" + inv.name + "'");
        continue;
      }
      ResourceInfo r;
      r.name = inv.name;
      for (const auto& v : inv.vars) {
        int id = model_.var_id(v);
        if (id < 0) {
          error("UNDECLARED_VAR", inv.span, "resource variable '" + v + "' is not declared");
          continue;
        }
        r.vars.push_back(id);
      }
      r.invariant = inv.assertion;
      check_assertion_vars(inv.assertion, inv.span);
      if (!precise_shape(inv.assertion))
        error("IMPRECISE_INVARIANT", inv.span,
              "resource invariant must have exactly-one-heap-shape form");
      model_.resource_ids[inv.name] = static_cast<int>(model_.resources.size());
      model_.resources.push_back(std::move(r));
    }
  }

  // Syntactic precision: the spatial skeleton is a *-conjunction of
  // points-to atoms with pairwise distinct address expressions (or pure
  // only); no disjunction or negation over heap shapes.
  bool precise_shape(const Spatial& s) {
    std::vector<std::string> addrs;
    return precise_walk(s, addrs);
  }

  bool precise_walk(const Spatial& s, std::vector<std::string>& addrs) {
    switch (s.kind) {
      case SpatialKind::True:
      case SpatialKind::Emp:
      case SpatialKind::Pure:
        return true;
      case SpatialKind::PointsTo: {
        std::string key = to_string(s.addr);
        for (const auto& a : addrs)
          if (a == key) return false;
        addrs.push_back(key);
        return true;
      }
      case SpatialKind::Star:
      case SpatialKind::And:
        return precise_walk(s.args[0], addrs) && precise_walk(s.args[1], addrs);
      case SpatialKind::Or:
      case SpatialKind::Not:
        return !contains_heap(s);
    }
    return false;
  }

  static bool contains_heap(const Spatial& s) {
    if (s.kind == SpatialKind::PointsTo || s.kind == SpatialKind::Emp) return true;
    for (const auto& a : s.args)
      if (contains_heap(a)) return true;
    return false;
  }

  void check_expr_vars(const Expr& e, Span span) {
    std::set<std::string> names;
    collect_vars(e, names);
    for (const auto& n : names) {
      if (model_.var_id(n) < 0 && !model_.enum_members.count(n))
        error("UNDECLARED_VAR", span, "undeclared identifier '" + n + "'");
    }
  }

  void check_assertion_vars(const Spatial& s, Span span) {
    switch (s.kind) {
      case SpatialKind::PointsTo:
        check_expr_vars(s.addr, span);
        if (s.value) check_expr_vars(*s.value, span);
        break;
      case SpatialKind::Pure:
        check_expr_vars(s.pure, span);
        break;
      default:
        break;
    }
    for (const auto& a : s.args) check_assertion_vars(a, span);
  }

  void lower_units() {
    for (const auto& node : src_.nodes) {
      for (const auto& prog : node.programs) {
        int pid = model_.unit_id(prog.name);
        if (pid < 0) continue;
        ProgramUnit& unit = model_.units[static_cast<std::size_t>(pid)];

        for (const auto& loc : prog.locs) {
          if (unit.loc_ids.count(loc.name)) {
            error("DUPLICATE_ID", loc.span,
                  "duplicate location '" + loc.name + "' in program " + prog.name);
            continue;
          }
          unit.loc_ids[loc.name] = static_cast<int>(unit.locations.size());
          unit.locations.push_back(loc.name);
        }
        if (unit.locations.empty()) {
          error("EMPTY_PROGRAM", prog.span,
                "program '" + prog.name + "' declares no locations");
          continue;
        }
        unit.out_edges.assign(unit.locations.size(), {});

        for (const auto& loc : prog.locs) {
          auto src_it = unit.loc_ids.find(loc.name);
          if (src_it == unit.loc_ids.end()) continue;
          for (const auto& edge : loc.edges) {
            EdgeInfo info;
            info.source = src_it->second;
            info.guard = edge.guard;
            info.action = edge.action;
            info.label = to_string(edge.action.ref);
            info.index = static_cast<int>(unit.edges.size());
            auto tgt_it = unit.loc_ids.find(edge.target);
            if (tgt_it == unit.loc_ids.end()) {
              error("UNKNOWN_LOCATION", edge.span,
                    "edge target '" + edge.target + "' does not exist in program " + prog.name);
              continue;
            }
            info.target = tgt_it->second;
            check_expr_vars(edge.guard, edge.span);
            if (!boolean_shaped(edge.guard))
              error("TYPE_MISMATCH", edge.span, "edge guard must be a boolean condition");
            if (!lower_action(info, edge, unit)) continue;
            unit.out_edges[static_cast<std::size_t>(info.source)].push_back(info.index);
            unit.edges.push_back(std::move(info));
          }
        }

        if (prog.start_locs.empty()) {
          unit.start_locs.push_back(0);
        } else {
          for (const auto& s : prog.start_locs) {
            auto it = unit.loc_ids.find(s);
            if (it == unit.loc_ids.end())
              error("UNKNOWN_LOCATION", prog.span, "unknown start location '" + s + "'");
            else
              unit.start_locs.push_back(it->second);
          }
        }
        unit.init_guard = prog.init_guard ? *prog.init_guard : Expr::top();
        if (prog.init_guard) check_expr_vars(*prog.init_guard, prog.span);

        unit.final_locs.assign(unit.locations.size(), false);
        for (std::size_t l = 0; l < unit.locations.size(); ++l)
          if (unit.out_edges[l].empty()) unit.final_locs[l] = true;  // sinks
        for (const auto& f : prog.final_locs) {
          auto it = unit.loc_ids.find(f);
          if (it == unit.loc_ids.end())
            error("UNKNOWN_LOCATION", prog.span, "unknown final location '" + f + "'");
          else
            unit.final_locs[static_cast<std::size_t>(it->second)] = true;
        }
      }
    }
  }

  static bool boolean_shaped(const Expr& e) {
    switch (e.kind) {
      case ExprKind::BoolLit:
      case ExprKind::Cmp:
      case ExprKind::Not:
      case ExprKind::And:
      case ExprKind::Or:
        return true;
      case ExprKind::Var:
        return true;  // boolean variables; domain check is dynamic
      default:
        return false;
    }
  }

  bool lower_action(EdgeInfo& info, const EdgeSyntax& edge, ProgramUnit& unit) {
    const ActionRef& ref = edge.action.ref;
    switch (ref.kind) {
      case ActionKind::Send: {
        int cid = model_.chan_id(ref.channel);
        if (cid < 0) {
          error("UNDECLARED_CHANNEL", edge.span,
                "send on undeclared channel '" + ref.channel + "'");
          return false;
        }
        info.channel = cid;
        check_expr_vars(*ref.payload, edge.span);
        const ChannelInfo& ch = model_.channels[static_cast<std::size_t>(cid)];
        if (ref.payload->kind == ExprKind::IntLit && !ch.domain.contains(ref.payload->literal))
          error("TYPE_MISMATCH", edge.span, "sent literal outside Dom(" + ch.name + ")");
        if (ref.payload->kind == ExprKind::Var) {
          int vid = model_.var_id(ref.payload->name);
          if (vid >= 0 &&
              !ch.domain.covers(model_.vars[static_cast<std::size_t>(vid)].domain) &&
              !model_.vars[static_cast<std::size_t>(vid)].domain.covers(ch.domain))
            error("TYPE_MISMATCH", edge.span,
                  "payload variable domain incompatible with Dom(" + ch.name + ")");
        }
        break;
      }
      case ActionKind::Receive: {
        int cid = model_.chan_id(ref.channel);
        if (cid < 0) {
          error("UNDECLARED_CHANNEL", edge.span,
                "receive on undeclared channel '" + ref.channel + "'");
          return false;
        }
        info.channel = cid;
        int vid = model_.var_id(ref.target);
        if (vid < 0) {
          error("UNDECLARED_VAR", edge.span,
                "receive target '" + ref.target + "' is not declared");
          return false;
        }
        // Dom(v) must cover Dom(c).
        if (!model_.vars[static_cast<std::size_t>(vid)].domain.covers(
                model_.channels[static_cast<std::size_t>(cid)].domain))
          error("TYPE_MISMATCH", edge.span,
                "Dom(" + ref.target + ") does not cover Dom(" + ref.channel + ")");
        unit.written_vars.insert(vid);
        break;
      }
      case ActionKind::Assign:
      case ActionKind::Label: {
        if (ref.kind == ActionKind::Label && ref.payload)
          check_expr_vars(*ref.payload, edge.span);
        for (const auto& [target, rhs] : edge.action.effects) {
          int vid = model_.var_id(target);
          if (vid < 0) {
            error("UNDECLARED_VAR", edge.span,
                  "assignment to undeclared variable '" + target + "'");
            continue;
          }
          check_expr_vars(rhs, edge.span);
          unit.written_vars.insert(vid);
        }
        break;
      }
      case ActionKind::Acquire:
      case ActionKind::Release: {
        int rid = model_.resource_id(ref.name);
        if (rid < 0) {
          error("UNDECLARED_RESOURCE", edge.span,
                "unknown resource '" + ref.name + "'");
          return false;
        }
        info.resource = rid;
        break;
      }
      case ActionKind::Alloc:
      case ActionKind::Load: {
        int vid = model_.var_id(ref.target);
        if (vid < 0) {
          error("UNDECLARED_VAR", edge.span,
                "assignment to undeclared variable '" + ref.target + "'");
          return false;
        }
        unit.written_vars.insert(vid);
        if (ref.payload) check_expr_vars(*ref.payload, edge.span);
        if (ref.address) check_expr_vars(*ref.address, edge.span);
        break;
      }
      case ActionKind::HeapWrite:
      case ActionKind::Dispose:
        if (ref.payload) check_expr_vars(*ref.payload, edge.span);
        if (ref.address) check_expr_vars(*ref.address, edge.span);
        break;
    }
    return true;
  }

  // Outline references: programs, actions, locations and node qualifiers
  // must resolve. Rule-shape validation is the checker's job.
  void check_outline_references() {
    for (const auto& outline : src_.outlines) {
      check_outline_node(outline.root, outline.span);
      model_.outlines.push_back(outline);
    }
  }

  void check_outline_node(const OutlineNode& node, Span span) {
    check_code(node.triple.code, span);
    check_pair(node.triple.pre, span);
    check_pair(node.triple.post, span);
    for (const auto& ann : node.step.annotations) {
      int pid = model_.unit_id(ann.program);
      if (pid < 0) {
        error("UNKNOWN_PROGRAM", span,
              "annotation references unknown program '" + ann.program + "'");
      } else if (!model_.units[static_cast<std::size_t>(pid)].loc_ids.count(ann.location)) {
        error("UNKNOWN_LOCATION", span,
              "annotation references unknown location '" + ann.program + "." + ann.location + "'");
      }
      check_pair(ann.assertion, span);
    }
    if (node.step.frame) check_assertion_vars(*node.step.frame, span);
    for (const auto& premise : node.step.premises) check_outline_node(premise, span);
  }

  void check_code(const CodeNode& code, Span span) {
    switch (code.kind) {
      case CodeKind::Act: {
        if (resolve_action(code.action) == nullptr)
          error("UNKNOWN_ACTION", span,
                "code references action '" + to_string(code.action) +
                    "' not present in any program");
        break;
      }
      case CodeKind::Prog:
        if (model_.unit_id(code.program) < 0)
          error("UNKNOWN_PROGRAM", span,
                "code references unknown program '" + code.program + "'");
        break;
      case CodeKind::Par:
      case CodeKind::ParN:
        for (const auto& child : code.children) check_code(child, span);
        break;
    }
  }

  const EdgeInfo* resolve_action(const ActionRef& ref) {
    std::string label = to_string(ref);
    for (const auto& unit : model_.units)
      for (const auto& edge : unit.edges)
        if (edge.label == label) return &edge;
    return nullptr;
  }

  void check_pair(const AssertionPair& pair, Span span) {
    check_env(pair.foreign, span);
    check_env(pair.native_env, span);
    check_assertion_vars(pair.native_spatial, span);
  }

  void check_env(const EnvExpr& e, Span span) {
    for (const auto& atom : e.atoms) {
      if (!atom.node.empty() && model_.node_id(atom.node) < 0)
        error("UNKNOWN_NODE", span,
              "atom qualifier references unknown node '" + atom.node + "'");
      if (atom.action.kind == ActionKind::Send && atom.action.payload)
        check_expr_vars(*atom.action.payload, span);
      if (atom.action.kind == ActionKind::Label && atom.action.payload)
        check_expr_vars(*atom.action.payload, span);
    }
    for (const auto& a : e.args) check_env(a, span);
  }
};

}  // namespace detail

/// Lowers a parsed model into the typed core, performing all
/// well-formedness checks. Errors yield diagnostics and no model.
inline LowerResult lower(const SourceModel& source) {
  detail::Lowering pass(source);
  return pass.run();
}

}  // namespace dvl

#endif  // DVL_LOWER_HPP_
