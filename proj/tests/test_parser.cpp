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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dvl/parser.hpp"
#include "dvl/printer.hpp"

using namespace dvl;

TEST_CASE("channel declaration parses to its fields") {
  auto result = parse("chan c cap 1 dom int");
  REQUIRE(result.ok());
  REQUIRE(result.model->channels.size() == 1);
  const ChannelDecl& c = result.model->channels[0];
  CHECK(c.name == "c");
  CHECK(c.capacity == 1);
  CHECK(c.domain.kind == DomainSyntaxKind::Named);
  CHECK(c.domain.name == "int");
}

TEST_CASE("empty input yields an empty model") {
  auto result = parse("");
  REQUIRE(result.ok());
  CHECK(result.model->empty());
}

TEST_CASE("comments and whitespace are ignored") {
  auto result = parse("# a comment\n  chan c cap 2 dom 0..5  # trailing\n");
  REQUIRE(result.ok());
  REQUIRE(result.model->channels.size() == 1);
  CHECK(result.model->channels[0].capacity == 2);
  CHECK(result.model->channels[0].domain.lo == 0);
  CHECK(result.model->channels[0].domain.hi == 5);
}

TEST_CASE("program block with edges") {
  const char* src =
      "chan c cap 1 dom 0..1\n"
      "node N0 {\n"
      "  program sender {\n"
      "    var s : 0..1\n"
      "    loc l0: when top do c!s goto l1\n"
      "    loc l1\n"
      "  }\n"
      "}\n";
  auto result = parse(src);
  REQUIRE(result.ok());
  REQUIRE(result.model->nodes.size() == 1);
  const NodeDecl& node = result.model->nodes[0];
  REQUIRE(node.programs.size() == 1);
  const ProgramDecl& prog = node.programs[0];
  CHECK(prog.vars.size() == 1);
  REQUIRE(prog.locs.size() == 2);
  REQUIRE(prog.locs[0].edges.size() == 1);
  const EdgeSyntax& e = prog.locs[0].edges[0];
  CHECK(e.guard.is_true_literal());
  CHECK(e.action.ref.kind == ActionKind::Send);
  CHECK(e.action.ref.channel == "c");
  CHECK(e.target == "l1");
}

TEST_CASE("syntax errors produce spanned diagnostics, never silence") {
  auto result = parse("chan chan chan");
  REQUIRE_FALSE(result.ok());
  REQUIRE_FALSE(result.diagnostics.empty());
  CHECK(result.diagnostics[0].severity == Severity::Error);
  CHECK(result.diagnostics[0].span.line >= 1);
}

TEST_CASE("assertion pairs classify temporal and spatial conjuncts") {
  const char* src =
      "chan c cap 1 dom 0..1\n"
      "node N { program p { var v : 0..1 var s : 0..1 loc l0 } }\n"
      "outline o {\n"
      "  triple {\n"
      "    pre { c!s | v |-> - }\n"
      "    code { act c?v }\n"
      "    post { c!s | c?v /\\ v == s }\n"
      "  }\n"
      "  by comm_axiom\n"
      "}\n";
  auto result = parse(src);
  REQUIRE(result.ok());
  const OutlineDecl& o = result.model->outlines[0];
  CHECK(o.root.triple.pre.foreign.kind == EnvKind::Atom);
  CHECK(o.root.triple.pre.native_spatial.kind == SpatialKind::PointsTo);
  CHECK_FALSE(o.root.triple.pre.native_spatial.value.has_value());
  CHECK(o.root.triple.post.native_env.kind == EnvKind::Atom);
  CHECK(o.root.triple.post.native_spatial.kind == SpatialKind::Pure);
}

TEST_CASE("precedence chains become path atoms") {
  const char* src =
      "chan c cap 1 dom 0..1\n"
      "node N { program p { var v : 0..1 loc l0 } }\n"
      "outline o {\n"
      "  triple {\n"
      "    pre { c!1@N -< c?v@N | top }\n"
      "    code { prog p }\n"
      "    post { top | top }\n"
      "  }\n"
      "  by seq { at p.l0 { top | top } }\n"
      "}\n";
  auto result = parse(src);
  REQUIRE(result.ok());
  const EnvExpr& foreign = result.model->outlines[0].root.triple.pre.foreign;
  REQUIRE(foreign.kind == EnvKind::Path);
  REQUIRE(foreign.atoms.size() == 2);
  CHECK(foreign.atoms[0].node == "N");
  CHECK(foreign.atoms[0].action.kind == ActionKind::Send);
  CHECK(foreign.atoms[1].action.kind == ActionKind::Receive);
}

TEST_CASE("heap primitive actions parse") {
  const char* src =
      "node N { program p {\n"
      "  var x : 0..9\n"
      "  loc l0: when top do x := alloc(3) goto l1\n"
      "  loc l1: when top do x := [x] goto l2\n"
      "  loc l2: when top do [x] := 7 goto l3\n"
      "  loc l3: when top do dispose(x) goto l4\n"
      "  loc l4\n"
      "} }\n";
  auto result = parse(src);
  REQUIRE(result.ok());
  const auto& locs = result.model->nodes[0].programs[0].locs;
  CHECK(locs[0].edges[0].action.ref.kind == ActionKind::Alloc);
  CHECK(locs[1].edges[0].action.ref.kind == ActionKind::Load);
  CHECK(locs[2].edges[0].action.ref.kind == ActionKind::HeapWrite);
  CHECK(locs[3].edges[0].action.ref.kind == ActionKind::Dispose);
}

// ---------------------------------------------------------------------------
// Round-trip properties
// ---------------------------------------------------------------------------

namespace {

// Random well-formed models for the parse/print round-trip property.
struct ModelGen {
  std::mt19937 rng;

  explicit ModelGen(unsigned seed) : rng(seed) {}

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

  std::string ident(const char* stem, int i) {
    return std::string(stem) + std::to_string(i);
  }

  DomainSyntax gen_domain() {
    DomainSyntax d;
    switch (pick(0, 2)) {
      case 0:
        d.kind = DomainSyntaxKind::Named;
        d.name = pick(0, 1) ? "bool" : "int";
        break;
      case 1: {
        d.kind = DomainSyntaxKind::Range;
        d.lo = pick(-3, 1);
        d.hi = d.lo + pick(0, 4);
        break;
      }
      default:
        d.kind = DomainSyntaxKind::Enum;
        for (int i = 0, n = pick(1, 3); i < n; ++i)
          d.members.push_back(ident("m", pick(0, 99)) + "_" + std::to_string(i));
        break;
    }
    return d;
  }

  Expr gen_expr(const std::vector<std::string>& vars, int depth) {
    if (depth <= 0 || pick(0, 2) == 0) {
      switch (pick(0, 2)) {
        case 0: return Expr::integer(pick(-4, 9));
        case 1: return Expr::boolean(pick(0, 1) == 1);
        default:
          if (vars.empty()) return Expr::integer(pick(0, 3));
          return Expr::var(vars[static_cast<std::size_t>(pick(0, static_cast<int>(vars.size()) - 1))]);
      }
    }
    switch (pick(0, 5)) {
      case 0: return Expr::binary(ExprKind::Add, gen_expr(vars, depth - 1), gen_expr(vars, depth - 1));
      case 1: return Expr::binary(ExprKind::Sub, gen_expr(vars, depth - 1), gen_expr(vars, depth - 1));
      case 2: return Expr::unary(ExprKind::Neg, gen_expr(vars, depth - 1));
      case 3: return Expr::binary(ExprKind::And, gen_expr(vars, depth - 1), gen_expr(vars, depth - 1));
      case 4: return Expr::unary(ExprKind::Not, gen_expr(vars, depth - 1));
      default:
        return Expr::cmp(static_cast<CmpOp>(pick(0, 5)), gen_expr(vars, depth - 1),
                         gen_expr(vars, depth - 1));
    }
  }

  Spatial gen_spatial(const std::vector<std::string>& vars, int depth) {
    if (depth <= 0 || pick(0, 2) == 0) {
      switch (pick(0, 3)) {
        case 0: return Spatial::emp();
        case 1:
          if (!vars.empty() && pick(0, 1))
            return Spatial::points_to(Expr::var(vars[0]),
                                      pick(0, 1) ? std::optional<Expr>(Expr::integer(pick(0, 5)))
                                                 : std::nullopt);
          return Spatial::points_to(Expr::integer(pick(0, 5)), std::nullopt);
        default: return Spatial::pure_of(gen_expr(vars, 1));
      }
    }
    return star(gen_spatial(vars, depth - 1), gen_spatial(vars, depth - 1));
  }

  EnvExpr gen_env(const std::vector<std::string>& chans,
                  const std::vector<std::string>& vars,
                  const std::vector<std::string>& nodes, int depth) {
    if (chans.empty()) return EnvExpr::top();
    auto atom = [&] {
      EnvAtom a;
      a.action.kind = pick(0, 1) ? ActionKind::Send : ActionKind::Receive;
      a.action.channel = chans[static_cast<std::size_t>(pick(0, static_cast<int>(chans.size()) - 1))];
      if (a.action.kind == ActionKind::Send) a.action.payload = Expr::integer(pick(0, 3));
      else a.action.target = vars.empty() ? "x0" : vars[0];
      if (!nodes.empty() && pick(0, 1))
        a.node = nodes[static_cast<std::size_t>(pick(0, static_cast<int>(nodes.size()) - 1))];
      return a;
    };
    switch (depth <= 0 ? 0 : pick(0, 3)) {
      case 0: return EnvExpr::atom(atom());
      case 1: {
        std::vector<EnvAtom> chain;
        for (int i = 0, n = pick(2, 3); i < n; ++i) chain.push_back(atom());
        return EnvExpr::path(std::move(chain));
      }
      case 2: return EnvExpr::eventually(gen_env(chans, vars, nodes, depth - 1));
      default: {
        std::vector<EnvExpr> parts;
        for (int i = 0, n = pick(2, 3); i < n; ++i)
          parts.push_back(gen_env(chans, vars, nodes, 0));
        return EnvExpr::conj(std::move(parts));
      }
    }
  }

  SourceModel gen_model() {
    SourceModel model;
    std::vector<std::string> chans, vars, nodes;
    for (int i = 0, n = pick(0, 3); i < n; ++i) {
      ChannelDecl c;
      c.name = ident("c", i);
      c.capacity = pick(1, 3);
      c.domain = gen_domain();
      chans.push_back(c.name);
      model.channels.push_back(std::move(c));
    }
    for (int ni = 0, nn = pick(1, 2); ni < nn; ++ni) {
      NodeDecl node;
      node.name = ident("N", ni);
      nodes.push_back(node.name);
      for (int pi = 0, np = pick(0, 2); pi < np; ++pi) {
        ProgramDecl prog;
        prog.name = ident("p", ni * 10 + pi);
        for (int vi = 0, nv = pick(0, 2); vi < nv; ++vi) {
          VarDecl v;
          v.name = ident("x", ni * 100 + pi * 10 + vi);
          v.domain = gen_domain();
          vars.push_back(v.name);
          prog.vars.push_back(std::move(v));
        }
        int nl = pick(1, 3);
        for (int li = 0; li < nl; ++li) {
          LocDecl loc;
          loc.name = ident("l", li);
          prog.locs.push_back(std::move(loc));
        }
        for (int li = 0; li + 1 < nl; ++li) {
          for (int ei = 0, ne = pick(0, 2); ei < ne; ++ei) {
            EdgeSyntax e;
            e.guard = gen_expr(vars, 1);
            if (!chans.empty() && pick(0, 1)) {
              e.action.ref.kind = pick(0, 1) ? ActionKind::Send : ActionKind::Receive;
              e.action.ref.channel = chans[static_cast<std::size_t>(pick(0, static_cast<int>(chans.size()) - 1))];
              if (e.action.ref.kind == ActionKind::Send)
                e.action.ref.payload = gen_expr(vars, 1);
              else
                e.action.ref.target = vars.empty() ? "v" : vars[0];
            } else if (!vars.empty()) {
              e.action.ref.kind = ActionKind::Assign;
              e.action.ref.target = vars[0];
              e.action.ref.payload = gen_expr(vars, 1);
            } else {
              e.action.ref.kind = ActionKind::Label;
              e.action.ref.name = ident("a", ei);
            }
            if (e.action.ref.kind == ActionKind::Assign)
              e.action.effects.emplace_back(e.action.ref.target, *e.action.ref.payload);
            e.target = ident("l", pick(li + 1, nl - 1));
            prog.locs[static_cast<std::size_t>(li)].edges.push_back(std::move(e));
          }
        }
        if (pick(0, 1)) prog.init_guard = gen_expr(vars, 1);
        if (pick(0, 1)) prog.start_locs.push_back("l0");
        node.programs.push_back(std::move(prog));
      }
      model.nodes.push_back(std::move(node));
    }
    if (pick(0, 1) && !vars.empty()) {
      InvariantDecl inv;
      inv.name = "RI0";
      inv.vars.push_back(vars[0]);
      inv.assertion = Spatial::pure_of(
          Expr::cmp(CmpOp::Ge, Expr::var(vars[0]), Expr::integer(0)));
      model.invariants.push_back(std::move(inv));
    }
    if (pick(0, 1)) {
      OutlineDecl o;
      o.name = "o0";
      o.root.triple.pre.foreign = gen_env(chans, vars, nodes, 2);
      o.root.triple.pre.native_env = gen_env(chans, vars, nodes, 1);
      o.root.triple.pre.native_spatial = gen_spatial(vars, 2);
      o.root.triple.code.kind = CodeKind::Prog;
      o.root.triple.code.program =
          model.nodes[0].programs.empty() ? "p0" : model.nodes[0].programs[0].name;
      o.root.triple.post.native_spatial = gen_spatial(vars, 2);
      o.root.step.rule = RuleKind::EffectAxiom;
      model.outlines.push_back(std::move(o));
    }
    return model;
  }
};

}  // namespace

TEST_CASE("round-trip: parse(pretty_print(m)) is structurally equal to m") {
  for (unsigned seed = 0; seed < 200; ++seed) {
    ModelGen gen(seed);
    SourceModel model = gen.gen_model();
    std::string printed = pretty_print(model);
    INFO("seed " << seed << "\n" << printed);
    auto reparsed = parse(printed);
    REQUIRE(reparsed.ok());
    CHECK(*reparsed.model == model);
  }
}

TEST_CASE("pretty-printing is idempotent after one normalization pass") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    ModelGen gen(seed + 1000);
    SourceModel model = gen.gen_model();
    std::string once = pretty_print(model);
    auto r1 = parse(once);
    REQUIRE(r1.ok());
    std::string twice = pretty_print(*r1.model);
    CHECK(once == twice);
  }
}

TEST_CASE("diagnostics totality: random byte soup never crashes the parser") {
  std::mt19937 rng(42);
  const std::string alphabet =
      "chan node loc when do goto {}()[]!?@|<>-=:*+/\\ \n\t0123456789abc'\"#";
  for (int round = 0; round < 300; ++round) {
    std::string input;
    int len = std::uniform_int_distribution<int>(0, 120)(rng);
    for (int i = 0; i < len; ++i)
      input += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    auto result = parse(input);
    if (!result.ok()) {
      CHECK_FALSE(result.diagnostics.empty());
    }
  }
}

TEST_CASE("pretty printer emits one node block per declared node") {
  SourceModel model;
  NodeDecl node;
  node.name = "N0";
  model.nodes.push_back(node);
  std::string text = pretty_print(model);
  CHECK(text.find("node N0 {") != std::string::npos);
  auto reparsed = parse(text);
  REQUIRE(reparsed.ok());
  CHECK(reparsed.model->nodes.size() == 1);
}
