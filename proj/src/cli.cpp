//  Copyright 2026 the mpcalc authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "mpcalc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "mpcalc/acceptance.hpp"
#include "mpcalc/gen.hpp"
#include "mpcalc/grothendieck.hpp"
#include "mpcalc/homology.hpp"
#include "mpcalc/semantics.hpp"

namespace mpcalc {

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

Caps caps_from_env() {
  Caps caps;
  if (const char* v = std::getenv("MPCALC_EVAL_CAP")) caps.eval_cap = std::strtoull(v, nullptr, 10);
  if (const char* v = std::getenv("MPCALC_MAX_Q")) caps.max_q = std::strtoul(v, nullptr, 10);
  if (const char* v = std::getenv("MPCALC_MAX_ARITY")) caps.max_arity = std::strtoul(v, nullptr, 10);
  return caps;
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  Caps caps;
  std::string format = "human";
  int exit_code = kExitTrue;

  bool structured() const { return format == "structured"; }
  void kv(const std::string& key, const std::string& value) {
    if (structured()) {
      out << key << "=" << value << "\n";
    } else {
      out << key << ": " << value << "\n";
    }
  }
};

std::string human_pair(const MatrixPair& p) {
  if (p.is_system()) return "[ | " + p.a().to_text() + "]";
  return "[" + p.b().to_text() + " | " + p.a().to_text() + "]";
}

void print_pair(Ctx& ctx, const std::string& key, const MatrixPair& p) {
  if (ctx.structured()) {
    ctx.out << key << "=" << p.to_text() << "\n";
  } else {
    ctx.out << key << ": " << human_pair(p) << "\n";
  }
}

unsigned long parse_field_flag(const std::string& text) {
  Ring r = Ring::parse(text);
  if (r.kind() != RingKind::PrimeField) {
    throw Error("expected a prime field F<q>, got " + text);
  }
  return r.modulus();
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact matrix-pair calculus over Q, Z, F_p, and Z/n"};
  app.require_subcommand(1);
  Ctx ctx{out, err, caps_from_env()};
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();

  std::string ring_text, to_ring_text, pair_text, pair2_text, cert_text, matrix_text;
  std::string module_spec, field_text, sum_file;
  unsigned long dim = 0;
  bool emit_boundary = false;

  // Every handler parses its inputs inside the run so ring capability and
  // format errors all funnel through one place.
  std::function<void()> action;

  auto* normalize = app.add_subcommand("normalize", "canonical system form over a field");
  normalize->add_option("--ring", ring_text)->required();
  normalize->add_option("pair", pair_text)->required();
  normalize->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      MatrixPair p = MatrixPair::parse(ring, pair_text);
      Matrix c = canonical_form(p);
      ctx.kv("canonical", c.to_text());
      print_pair(ctx, "pair", MatrixPair::system(c));
    };
  });

  auto* leq = app.add_subcommand("leq", "decide [p] <= [q]");
  leq->add_option("--ring", ring_text)->required();
  leq->add_option("p", pair_text)->required();
  leq->add_option("q", pair2_text)->required();
  leq->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      MatrixPair p = MatrixPair::parse(ring, pair_text);
      MatrixPair q = MatrixPair::parse(ring, pair2_text);
      LeqResult r = decide_leq(p, q);
      switch (r.status) {
        case LeqStatus::Proved:
          ctx.kv("status", "Proved");
          ctx.kv("cert", r.cert->to_text());
          ctx.exit_code = kExitTrue;
          break;
        case LeqStatus::Disproved:
          ctx.kv("status", "Disproved");
          ctx.exit_code = kExitFalse;
          break;
        case LeqStatus::Unknown:
          ctx.kv("status", "Unknown");
          ctx.exit_code = kExitUnknown;
          break;
      }
    };
  });

  auto* vc = app.add_subcommand("verify-cert", "check a certificate between two pairs");
  vc->add_option("--ring", ring_text)->required();
  vc->add_option("src", pair_text)->required();
  vc->add_option("dst", pair2_text)->required();
  vc->add_option("cert", cert_text)->required();
  vc->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      MatrixPair src = MatrixPair::parse(ring, pair_text);
      MatrixPair dst = MatrixPair::parse(ring, pair2_text);
      Certificate cert = Certificate::parse(ring, cert_text);
      bool ok = verify(cert, src, dst);
      ctx.kv("verified", ok ? "true" : "false");
      ctx.exit_code = ok ? kExitTrue : kExitFalse;
    };
  });

  auto* meet_cmd = app.add_subcommand("meet", "infimum of two pairs");
  meet_cmd->add_option("--ring", ring_text)->required();
  meet_cmd->add_option("p", pair_text)->required();
  meet_cmd->add_option("q", pair2_text)->required();
  meet_cmd->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      MeetResult r = meet(MatrixPair::parse(ring, pair_text), MatrixPair::parse(ring, pair2_text));
      print_pair(ctx, "pair", r.pair);
      ctx.kv("cert-left", r.below_left.cert.to_text());
      ctx.kv("cert-right", r.below_right.cert.to_text());
    };
  });

  auto* join_cmd = app.add_subcommand("join", "supremum of two pairs");
  join_cmd->add_option("--ring", ring_text)->required();
  join_cmd->add_option("p", pair_text)->required();
  join_cmd->add_option("q", pair2_text)->required();
  join_cmd->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      print_pair(ctx, "pair",
                 join(MatrixPair::parse(ring, pair_text), MatrixPair::parse(ring, pair2_text)));
    };
  });

  auto* dual_cmd = app.add_subcommand("dual", "anti-isomorphic dual pair");
  dual_cmd->add_option("--ring", ring_text)->required();
  dual_cmd->add_option("pair", pair_text)->required();
  dual_cmd->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      print_pair(ctx, "pair", dual(MatrixPair::parse(ring, pair_text)));
    };
  });

  auto* is_top_cmd = app.add_subcommand("is-top", "witness W with BW = A, if any");
  is_top_cmd->add_option("--ring", ring_text)->required();
  is_top_cmd->add_option("pair", pair_text)->required();
  is_top_cmd->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      auto w = is_top(MatrixPair::parse(ring, pair_text));
      if (w) {
        ctx.kv("W", w->to_text());
        ctx.exit_code = kExitTrue;
      } else {
        ctx.kv("W", "absent");
        ctx.exit_code = kExitFalse;
      }
    };
  });

  auto* is_bottom_cmd = app.add_subcommand("is-bottom", "witness U with UB = 0, UA = I, if any");
  is_bottom_cmd->add_option("--ring", ring_text)->required();
  is_bottom_cmd->add_option("pair", pair_text)->required();
  is_bottom_cmd->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      auto u = is_bottom(MatrixPair::parse(ring, pair_text));
      if (u) {
        ctx.kv("U", u->to_text());
        ctx.exit_code = kExitTrue;
      } else {
        ctx.kv("U", "absent");
        ctx.exit_code = kExitFalse;
      }
    };
  });

  auto* tosys = app.add_subcommand("to-system", "certified system form over a field");
  tosys->add_option("--ring", ring_text)->required();
  tosys->add_option("pair", pair_text)->required();
  tosys->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      SystemForm f = to_system(MatrixPair::parse(ring, pair_text));
      ctx.kv("system", f.coeffs.to_text());
      ctx.kv("cert-into", f.into_system.cert.to_text());
      ctx.kv("cert-from", f.from_system.cert.to_text());
    };
  });

  auto* pid = app.add_subcommand("pid-reduce", "scalar-pair decomposition over a Euclidean ring");
  pid->add_option("--ring", ring_text)->required();
  pid->add_option("pair", pair_text)->required();
  pid->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      for (const auto& [d, row] : pid_reduce(MatrixPair::parse(ring, pair_text))) {
        ctx.out << "d=" << scalar_to_string(d) << " row=" << row.to_text() << "\n";
      }
    };
  });

  auto* map_cmd = app.add_subcommand("map", "apply a ring morphism to a pair");
  map_cmd->add_option("--ring", ring_text, "source ring")->required();
  map_cmd->add_option("--to", to_ring_text, "target ring")->required();
  map_cmd->add_option("pair", pair_text)->required();
  map_cmd->callback([&] {
    action = [&] {
      RingHom f = RingHom::make(Ring::parse(ring_text), Ring::parse(to_ring_text));
      print_pair(ctx, "pair", map_pair(f, MatrixPair::parse(f.from(), pair_text)));
    };
  });

  auto* k0 = app.add_subcommand("k0", "Grothendieck-group computations");
  k0->require_subcommand(1);

  auto* k0_inv = k0->add_subcommand("invariant", "module invariant of a presentation");
  k0_inv->add_option("--ring", ring_text)->required();
  k0_inv->add_option("matrix", matrix_text)->required();
  k0_inv->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      ModuleInvariant inv = module_invariant(Matrix::parse(ring, matrix_text));
      ctx.kv("invariant", inv.to_string());
    };
  });

  auto* k0_gamma = k0->add_subcommand("gamma", "triangle edge on a pair");
  k0_gamma->add_option("--ring", ring_text)->required();
  k0_gamma->add_option("pair", pair_text)->required();
  k0_gamma->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      ctx.out << gamma(MatrixPair::parse(ring, pair_text)).to_text();
    };
  });

  auto* k0_kappa = k0->add_subcommand("kappa", "prefix-column pair sum of a matrix");
  k0_kappa->add_option("--ring", ring_text)->required();
  k0_kappa->add_option("matrix", matrix_text)->required();
  k0_kappa->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      ctx.out << kappa(Matrix::parse(ring, matrix_text)).to_text();
    };
  });

  auto* k0_tri = k0->add_subcommand("triangle-check", "round-trip identity on a class");
  k0_tri->add_option("--ring", ring_text)->required();
  k0_tri->add_option("matrix", matrix_text)->required();
  k0_tri->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      bool ok = triangle_check(Matrix::parse(ring, matrix_text));
      ctx.kv("triangle", ok ? "true" : "false");
      ctx.exit_code = ok ? kExitTrue : kExitFalse;
    };
  });

  auto* k0_char = k0->add_subcommand("character", "dimension character of a formal sum file");
  k0_char->add_option("file", sum_file)->required();
  k0_char->callback([&] {
    action = [&] {
      std::ifstream in(sum_file);
      if (!in) throw Error("cannot open " + sum_file);
      std::stringstream buf;
      buf << in.rdbuf();
      ctx.kv("character", std::to_string(dim_character(FormalSum::parse(buf.str()))));
    };
  });

  auto* hom = app.add_subcommand("homology", "nondegenerate-complex homology of a prime field");
  hom->add_option("--field", field_text)->required();
  hom->add_option("--dim", dim)->required();
  hom->add_flag("--emit-boundary", emit_boundary);
  hom->callback([&] {
    action = [&] {
      unsigned long q = parse_field_flag(field_text);
      ctx.out << homology(q, dim, ctx.caps).to_string() << "\n";
      if (emit_boundary) {
        ctx.kv("boundary" + std::to_string(dim), boundary_matrix(q, dim, ctx.caps).to_text());
        ctx.kv("boundary" + std::to_string(dim + 1),
               boundary_matrix(q, dim + 1, ctx.caps).to_text());
      }
    };
  });

  auto* eval_cmd = app.add_subcommand("eval", "pp-definable subgroup on a finite module");
  eval_cmd->add_option("--ring", ring_text)->required();
  eval_cmd->add_option("--module", module_spec, "comma-separated cyclic orders")->required();
  eval_cmd->add_option("--pair", pair_text)->required();
  eval_cmd->callback([&] {
    action = [&] {
      Ring ring = Ring::parse(ring_text);
      FiniteModule m = FiniteModule::parse(ring, module_spec);
      SubgroupOfPower s = eval_pair(MatrixPair::parse(ring, pair_text), m, ctx.caps);
      ctx.kv("module", m.to_string());
      ctx.kv("order", std::to_string(s.order()));
      for (const auto& e : s.elements) {
        std::ostringstream line;
        std::size_t t = m.components();
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (i > 0) line << (i % t == 0 ? ";" : ",");
          line << e[i];
        }
        ctx.kv("element", line.str());
      }
    };
  });

  auto* suite = app.add_subcommand("suite", "reproducibility batteries");
  auto* suite_run = suite->add_subcommand("run", "run the acceptance battery");
  bool quick = false;
  std::uint64_t seed = Gen::kDefaultSeed;
  suite_run->add_flag("--quick", quick, "smaller randomized samples");
  suite_run->add_option("--seed", seed, "deterministic seed")->capture_default_str();
  suite_run->callback([&] {
    action = [&] {
      bool ok = acceptance::report(acceptance::run_battery(seed, quick), ctx.out);
      ctx.exit_code = ok ? kExitTrue : kExitFalse;
    };
  });

  // Let --format sit before or after the subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, ctx.out, msg);
    if (!msg.str().empty()) err << msg.str();
    return code == 0 ? kExitTrue : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return ctx.exit_code;
}

}  // namespace mpcalc
