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

#ifndef DVL_PROGRAM_MODEL_HPP_
#define DVL_PROGRAM_MODEL_HPP_

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dvl/lower.hpp"

namespace dvl {

// ---------------------------------------------------------------------------
// Occurred actions and histories
// ---------------------------------------------------------------------------

/// One occurred action: identity, owner, and the value it moved (sent,
/// received, or a named action's evaluated payload).
struct Occurrence {
  int program = -1;
  int edge = -1;
  std::string label;
  int node = -1;
  std::optional<Value> payload;
};

/// The partially ordered set of occurred actions along one trace. The
/// sequence index order is a linear extension of the happens-before
/// relation; precedes() is strict and transitive by construction.
struct ActionHistory {
  std::vector<Occurrence> occurred;

  /// a ◁ b over occurrence indices.
  bool precedes(std::size_t a, std::size_t b) const {
    return a < b && b < occurred.size();
  }
  std::size_t size() const { return occurred.size(); }
};

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

/// Mutable-state portion of a configuration; histories ride separately so
/// state deduplication can ignore them.
struct CoreState {
  std::vector<int> locations;                    // per composed program
  Store store;                                   // per declared variable
  std::vector<std::pair<Value, Value>> heap;     // sorted (address, value)
  std::vector<std::vector<Value>> buffers;       // per channel, FIFO front=0
  std::vector<int> held;                         // per resource: program or -1
  Value next_addr = 1;

  bool operator==(const CoreState&) const = default;

  std::optional<Value> heap_lookup(Value addr) const {
    auto it = std::lower_bound(heap.begin(), heap.end(), addr,
                               [](const auto& p, Value a) { return p.first < a; });
    if (it != heap.end() && it->first == addr) return it->second;
    return std::nullopt;
  }

  void heap_write(Value addr, Value v) {
    auto it = std::lower_bound(heap.begin(), heap.end(), addr,
                               [](const auto& p, Value a) { return p.first < a; });
    if (it != heap.end() && it->first == addr) it->second = v;
    else heap.insert(it, {addr, v});
  }

  bool heap_erase(Value addr) {
    auto it = std::lower_bound(heap.begin(), heap.end(), addr,
                               [](const auto& p, Value a) { return p.first < a; });
    if (it == heap.end() || it->first != addr) return false;
    heap.erase(it);
    return true;
  }
};

/// Global runtime state: per-program location, store, heap, channel
/// buffers, resource ownership, plus the action history of the trace
/// that produced it.
struct Configuration {
  CoreState core;
  ActionHistory history;
};

/// FNV-1a 64 digest of the dedup-relevant state.
inline std::uint64_t digest(const CoreState& s) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(s.locations.size());
  for (int l : s.locations) mix(static_cast<std::uint64_t>(l));
  for (Value v : s.store) mix(static_cast<std::uint64_t>(v));
  mix(0xfeedu);
  for (const auto& [a, v] : s.heap) {
    mix(static_cast<std::uint64_t>(a));
    mix(static_cast<std::uint64_t>(v));
  }
  for (const auto& buf : s.buffers) {
    mix(0xbeefu);
    for (Value v : buf) mix(static_cast<std::uint64_t>(v));
  }
  for (int r : s.held) mix(static_cast<std::uint64_t>(r + 1));
  return h;
}

// ---------------------------------------------------------------------------
// Composed systems
// ---------------------------------------------------------------------------

/// A parallel system over shared channels: an ordered selection of program
/// units from one lowered model. Node structure is retained through each
/// unit's owning node.
struct System {
  std::shared_ptr<const LoweredModel> model;
  std::vector<int> programs;  // unit ids, composition order

  const ProgramUnit& unit(int slot) const {
    return model->units[static_cast<std::size_t>(programs[static_cast<std::size_t>(slot)])];
  }
  int slot_count() const { return static_cast<int>(programs.size()); }
};

struct ComposeResult {
  std::optional<System> system;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return system.has_value(); }
};

/// Program-level parallel composition. Plain shared variables must be
/// write-disjoint across the composed units; variables governed by a
/// declared resource invariant are exempt.
inline ComposeResult compose_parallel(std::shared_ptr<const LoweredModel> model,
                                      std::vector<int> programs) {
  ComposeResult result;
  for (std::size_t i = 0; i < programs.size(); ++i) {
    for (std::size_t j = i + 1; j < programs.size(); ++j) {
      if (programs[i] == programs[j]) {
        result.diagnostics.push_back(Diagnostic::error(
            "DUPLICATE_PROGRAM", Span{},
            "program '" + model->units[static_cast<std::size_t>(programs[i])].name +
                "' composed twice"));
        continue;
      }
      const auto& a = model->units[static_cast<std::size_t>(programs[i])];
      const auto& b = model->units[static_cast<std::size_t>(programs[j])];
      for (int v : a.written_vars) {
        if (b.written_vars.count(v) && !model->var_is_resource_governed(v)) {
          result.diagnostics.push_back(Diagnostic::error(
              "WRITE_OVERLAP", Span{},
              "programs '" + a.name + "' and '" + b.name +
                  "' both write plain variable '" +
                  model->vars[static_cast<std::size_t>(v)].name + "'"));
        }
      }
    }
  }
  if (!has_errors(result.diagnostics))
    result.system = System{std::move(model), std::move(programs)};
  return result;
}

/// Node-level composition ∥_N: concatenates the per-node program lists.
/// Every occurred action keeps its owning node for @-qualified conditions.
inline ComposeResult compose_nodes(std::shared_ptr<const LoweredModel> model,
                                   std::vector<int> nodes) {
  ComposeResult result;
  std::vector<int> seen;
  std::vector<int> programs;
  for (int n : nodes) {
    if (std::find(seen.begin(), seen.end(), n) != seen.end()) {
      result.diagnostics.push_back(Diagnostic::error(
          "DUPLICATE_NODE", Span{},
          "node '" + model->nodes[static_cast<std::size_t>(n)] + "' composed twice"));
      continue;
    }
    seen.push_back(n);
    for (const auto& unit : model->units)
      if (unit.node == n) programs.push_back(unit.id);
  }
  if (has_errors(result.diagnostics)) return result;
  return compose_parallel(std::move(model), std::move(programs));
}

/// Composes every program in the model, in node order.
inline ComposeResult compose_all(std::shared_ptr<const LoweredModel> model) {
  std::vector<int> nodes(model->nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = static_cast<int>(i);
  return compose_nodes(std::move(model), std::move(nodes));
}

// ---------------------------------------------------------------------------
// Enabledness and stepping
// ---------------------------------------------------------------------------

struct Choice {
  int slot = 0;  // index into system.programs
  int edge = 0;  // edge id within that unit
};

namespace detail {

inline bool action_feasible(const System& sys, const CoreState& core,
                            int slot, const EdgeInfo& edge) {
  const LoweredModel& m = *sys.model;
  switch (edge.action.ref.kind) {
    case ActionKind::Send: {
      const auto& buf = core.buffers[static_cast<std::size_t>(edge.channel)];
      return static_cast<Value>(buf.size()) <
             m.channels[static_cast<std::size_t>(edge.channel)].capacity;
    }
    case ActionKind::Receive:
      return !core.buffers[static_cast<std::size_t>(edge.channel)].empty();
    case ActionKind::Acquire:
      return core.held[static_cast<std::size_t>(edge.resource)] == -1;
    case ActionKind::Release:
      return core.held[static_cast<std::size_t>(edge.resource)] ==
             sys.programs[static_cast<std::size_t>(slot)];
    case ActionKind::Load:
    case ActionKind::HeapWrite:
    case ActionKind::Dispose:
      // Heap accesses to absent cells are memory faults; the action stays
      // disabled so the fault shows up as a blocked configuration.
      return core.heap_lookup(eval_expr(*edge.action.ref.address, core.store, m))
          .has_value();
    default:
      return true;
  }
}

}  // namespace detail

/// Exactly the (slot, edge) pairs executable now: location matches, the
/// guard holds under the store, and the communication is feasible
/// (sends need buffer room, receives need a buffered value). Deterministic
/// order: slot index, then edge declaration index.
inline std::vector<Choice> enabled(const System& sys, const CoreState& core) {
  std::vector<Choice> out;
  const LoweredModel& m = *sys.model;
  for (int slot = 0; slot < sys.slot_count(); ++slot) {
    const ProgramUnit& unit = sys.unit(slot);
    int loc = core.locations[static_cast<std::size_t>(slot)];
    for (int eid : unit.out_edges[static_cast<std::size_t>(loc)]) {
      const EdgeInfo& edge = unit.edges[static_cast<std::size_t>(eid)];
      if (!eval_guard(edge.guard, core.store, m)) continue;
      if (!detail::action_feasible(sys, core, slot, edge)) continue;
      out.push_back(Choice{slot, eid});
    }
  }
  return out;
}

/// Applies one enabled edge. Returns the successor state and describes the
/// occurred action. Caller-contract violation (choice not enabled) throws.
inline CoreState core_step(const System& sys, const CoreState& core, Choice choice,
                           Occurrence* occurrence = nullptr) {
  const LoweredModel& m = *sys.model;
  const ProgramUnit& unit = sys.unit(choice.slot);
  const EdgeInfo& edge = unit.edges[static_cast<std::size_t>(choice.edge)];
  if (core.locations[static_cast<std::size_t>(choice.slot)] != edge.source ||
      !eval_guard(edge.guard, core.store, m) ||
      !detail::action_feasible(sys, core, choice.slot, edge))
    throw std::logic_error("step: choice is not enabled (caller bug)");

  CoreState next = core;
  next.locations[static_cast<std::size_t>(choice.slot)] = edge.target;
  std::optional<Value> payload;

  switch (edge.action.ref.kind) {
    case ActionKind::Send: {
      Value v = eval_expr(*edge.action.ref.payload, core.store, m);
      const ChannelInfo& ch = m.channels[static_cast<std::size_t>(edge.channel)];
      if (!ch.domain.contains(v))
        throw std::logic_error("send: value outside Dom(" + ch.name + ")");
      next.buffers[static_cast<std::size_t>(edge.channel)].push_back(v);
      payload = v;
      break;
    }
    case ActionKind::Receive: {
      auto& buf = next.buffers[static_cast<std::size_t>(edge.channel)];
      Value v = buf.front();
      buf.erase(buf.begin());
      int vid = m.var_id(edge.action.ref.target);
      next.store[static_cast<std::size_t>(vid)] = v;
      payload = v;
      break;
    }
    case ActionKind::Assign:
    case ActionKind::Label: {
      if (edge.action.ref.kind == ActionKind::Label && edge.action.ref.payload)
        payload = eval_expr(*edge.action.ref.payload, core.store, m);
      // Effects read the pre-state store (simultaneous assignment).
      Store updated = next.store;
      for (const auto& [target, rhs] : edge.action.effects) {
        int vid = m.var_id(target);
        Value v = eval_expr(rhs, core.store, m);
        const Domain& dom = m.vars[static_cast<std::size_t>(vid)].domain;
        if (!dom.contains(v))
          throw std::logic_error("assignment drives '" + target + "' outside its domain");
        updated[static_cast<std::size_t>(vid)] = v;
      }
      next.store = std::move(updated);
      break;
    }
    case ActionKind::Acquire:
      next.held[static_cast<std::size_t>(edge.resource)] =
          sys.programs[static_cast<std::size_t>(choice.slot)];
      break;
    case ActionKind::Release:
      next.held[static_cast<std::size_t>(edge.resource)] = -1;
      break;
    case ActionKind::Alloc: {
      Value addr = next.next_addr++;
      Value v = eval_expr(*edge.action.ref.payload, core.store, m);
      next.heap_write(addr, v);
      int vid = m.var_id(edge.action.ref.target);
      const Domain& dom = m.vars[static_cast<std::size_t>(vid)].domain;
      if (!dom.contains(addr))
        throw std::logic_error("alloc address outside the domain of '" +
                               edge.action.ref.target + "'");
      next.store[static_cast<std::size_t>(vid)] = addr;
      payload = addr;
      break;
    }
    case ActionKind::Load: {
      Value addr = eval_expr(*edge.action.ref.address, core.store, m);
      Value v = *core.heap_lookup(addr);
      int vid = m.var_id(edge.action.ref.target);
      const Domain& dom = m.vars[static_cast<std::size_t>(vid)].domain;
      if (!dom.contains(v))
        throw std::logic_error("load drives '" + edge.action.ref.target +
                               "' outside its domain");
      next.store[static_cast<std::size_t>(vid)] = v;
      payload = v;
      break;
    }
    case ActionKind::HeapWrite: {
      Value addr = eval_expr(*edge.action.ref.address, core.store, m);
      Value v = eval_expr(*edge.action.ref.payload, core.store, m);
      next.heap_write(addr, v);
      payload = v;
      break;
    }
    case ActionKind::Dispose: {
      Value addr = eval_expr(*edge.action.ref.address, core.store, m);
      next.heap_erase(addr);
      break;
    }
  }

  if (occurrence) {
    occurrence->program = sys.programs[static_cast<std::size_t>(choice.slot)];
    occurrence->edge = choice.edge;
    occurrence->label = edge.label;
    occurrence->node = unit.node;
    occurrence->payload = payload;
  }
  return next;
}

/// Full-configuration step: advances state and extends the history; the
/// new occurrence happens-after every previously occurred action.
inline Configuration step(const System& sys, const Configuration& config, Choice choice) {
  Configuration next;
  Occurrence occ;
  next.core = core_step(sys, config.core, choice, &occ);
  next.history = config.history;
  next.history.occurred.push_back(std::move(occ));
  return next;
}

enum class TerminalKind { Running, Terminated, Blocked };

/// Distinguishes normal completion (every program at a final location)
/// from deadlock when nothing is enabled.
inline TerminalKind classify(const System& sys, const CoreState& core) {
  if (!enabled(sys, core).empty()) return TerminalKind::Running;
  for (int slot = 0; slot < sys.slot_count(); ++slot) {
    const ProgramUnit& unit = sys.unit(slot);
    if (!unit.is_final(core.locations[static_cast<std::size_t>(slot)]))
      return TerminalKind::Blocked;
  }
  return TerminalKind::Terminated;
}

/// A fresh configuration at the initial locations with the given store.
inline CoreState initial_core(const System& sys, Store store) {
  CoreState core;
  core.locations.resize(static_cast<std::size_t>(sys.slot_count()));
  for (int slot = 0; slot < sys.slot_count(); ++slot)
    core.locations[static_cast<std::size_t>(slot)] = sys.unit(slot).initial_location();
  core.store = std::move(store);
  core.buffers.resize(sys.model->channels.size());
  core.held.assign(sys.model->resources.size(), -1);
  return core;
}

}  // namespace dvl

#endif  // DVL_PROGRAM_MODEL_HPP_
