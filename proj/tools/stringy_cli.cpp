/*
  Copyright 2026 The stringy-hd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stringy/stringy.h"

using nlohmann::json;

namespace {

struct Failure {
  std::string message;
};

// A file path, or inline JSON when the argument starts with '{' or '['.
std::string load(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw Failure{"cannot read " + arg};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(stringy_status st) {
  if (st != STRINGY_OK)
    throw Failure{std::string(stringy_status_name(st)) + ": " + stringy_last_error()};
}

struct StackHandle {
  stringy_stack* s = nullptr;
  explicit StackHandle(const std::string& arg) { check(stringy_stack_from_json(load(arg).c_str(), &s)); }
  ~StackHandle() { stringy_stack_free(s); }
};

// Plain-text rendering: one "key: value" line per scalar, nested by indentation.
// Exact values print as their "text" form.
void render(const json& j, int depth, std::ostream& os) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() && v.contains("text") && v.contains("value")) {
        os << pad << k << ": " << v["text"].get<std::string>() << "\n";
      } else if (k == "arc" || (v.is_array() && (v.empty() || !v[0].is_structured()))) {
        os << pad << k << ": " << v.dump() << "\n";
      } else if (v.is_structured()) {
        os << pad << k << ":\n";
        render(v, depth + 1, os);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_structured()) {
        os << pad << "- [" << i << "]\n";
        render(j[i], depth + 1, os);
      } else {
        os << pad << "- " << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump()) << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stringy Hodge-Deligne invariants of cyclic quotient singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, pretty = false;
  app.add_flag("--json", as_json, "Compact JSON output");
  app.add_flag("--pretty", pretty, "Indented JSON output");

  std::string stack_arg, resolution_arg, matrix_arg, constraints_arg, identity = "height-weight";
  std::vector<long> qs;
  std::vector<int> vanish, sector;
  int level = -1, e_max = 3, ell = 0, max_ell = 6, samples = 100, precision = 24;
  long p = 7;
  unsigned long long seed = 1;
  bool certified = false;

  auto add_stack = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("--stack", stack_arg, "Stack JSON file (or inline JSON)");
    if (required) o->required();
  };
  auto add_q = [&](CLI::App* c) { c->add_option("--q", qs, "Comma-separated field sizes")->delimiter(','); };

  auto* sectors = app.add_subcommand("sectors", "List twisted sectors");
  add_stack(sectors, true);
  sectors->add_option("--ell", ell, "Only this ell (0: every ell dividing N)");

  auto* wt = app.add_subcommand("wt", "Weight table");
  add_stack(wt, true);
  wt->add_option("--max-ell", max_ell, "Largest ell listed for G_m quotients");

  auto* integrate = app.add_subcommand("integrate", "Weighted motivic integral over twisted arcs");
  add_stack(integrate, true);
  add_q(integrate);
  integrate->add_option("--level", level, "Jet level for count checks (default 1), or n_max with --vanish");
  integrate->add_option("--vanish", vanish, "Thin-set table for the subspace where these coordinates vanish")
      ->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "Groupoid count of a twisted-jet cylinder");
  add_stack(oracle, true);
  add_q(oracle);
  oracle->add_option("--sector", sector, "ell,a")->delimiter(',')->required()->expected(2);
  oracle->add_option("--n,--level", level, "Jet level")->required();
  oracle->add_option("--constraints", constraints_arg, "Coefficient constraints JSON");

  auto* batyrev = app.add_subcommand("batyrev", "Batyrev formula from a resolution");
  add_stack(batyrev, false);
  batyrev->add_option("--resolution", resolution_arg, "Resolution JSON file");

  auto* gor = app.add_subcommand("gorenstein-oracle", "Jet-count estimate of the Gorenstein measure");
  add_stack(gor, true);
  add_q(gor);
  gor->add_option("--level", level, "n_max (default 3)");
  gor->add_option("--e-max", e_max, "Largest Jacobian order summed");

  auto* compare = app.add_subcommand("compare", "Three-way comparison");
  add_stack(compare, true);
  add_q(compare);
  compare->add_option("--resolution", resolution_arg, "Resolution JSON file (default: built-in)");
  compare->add_option("--level", level, "n_max for the point-count oracle (default 3)");
  compare->add_option("--e-max", e_max, "e_max for the point-count oracle");

  auto* gsnf = app.add_subcommand("gsnf", "Graded Smith normal form");
  gsnf->add_option("matrix", matrix_arg, "Matrix JSON file")->required();
  gsnf->add_flag("--certified", certified, "Fail unless the form is certified at this precision");

  auto* verify = app.add_subcommand("verify", "Check identities on random twisted arcs");
  add_stack(verify, true);
  verify->add_option("--identity", identity, "height-weight | crepancy | weight-constancy");
  verify->add_option("--samples", samples, "Arcs per sector");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--precision", precision, "s-adic precision");
  verify->add_option("--p", p, "Prime field size");

  CLI11_PARSE(app, argc, argv);

  stringy_result* result = nullptr;
  try {
    auto with_level = [&](int fallback) { return level < 0 ? fallback : level; };
    if (*sectors) {
      StackHandle s(stack_arg);
      check(stringy_sectors(s.s, ell, &result));
    } else if (*wt) {
      StackHandle s(stack_arg);
      check(stringy_weights(s.s, max_ell, &result));
    } else if (*integrate) {
      StackHandle s(stack_arg);
      if (vanish.empty())
        check(stringy_integrate(s.s, qs.data(), qs.size(), with_level(1), &result));
      else
        check(stringy_thin_set(s.s, vanish.data(), vanish.size(), with_level(5), qs.data(), qs.size(), &result));
    } else if (*oracle) {
      StackHandle s(stack_arg);
      const std::string cons = constraints_arg.empty() ? "" : load(constraints_arg);
      check(stringy_oracle(s.s, sector[0], sector[1], level, cons.empty() ? nullptr : cons.c_str(), qs.data(),
                           qs.size(), &result));
    } else if (*batyrev) {
      if (stack_arg.empty() && resolution_arg.empty()) throw Failure{"batyrev needs --stack or --resolution"};
      const std::string res = resolution_arg.empty() ? "" : load(resolution_arg);
      if (stack_arg.empty()) {
        check(stringy_batyrev(nullptr, res.c_str(), &result));
      } else {
        StackHandle s(stack_arg);
        check(stringy_batyrev(s.s, res.empty() ? nullptr : res.c_str(), &result));
      }
    } else if (*gor) {
      StackHandle s(stack_arg);
      check(stringy_gorenstein_oracle(s.s, qs.data(), qs.size(), with_level(3), e_max, &result));
    } else if (*compare) {
      StackHandle s(stack_arg);
      const std::string res = resolution_arg.empty() ? "" : load(resolution_arg);
      check(stringy_compare(s.s, res.empty() ? nullptr : res.c_str(), qs.data(), qs.size(), with_level(3), e_max,
                            &result));
    } else if (*gsnf) {
      check(stringy_gsnf(load(matrix_arg).c_str(), certified ? 1 : 0, &result));
    } else if (*verify) {
      StackHandle s(stack_arg);
      check(stringy_verify(s.s, identity.c_str(), samples, seed, precision, p, &result));
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return 2;
  }

  const json doc = json::parse(stringy_result_json(result));
  const bool ok = stringy_result_ok(result) == 1;
  stringy_result_free(result);
  if (pretty)
    std::cout << doc.dump(2) << "\n";
  else if (as_json)
    std::cout << doc.dump() << "\n";
  else {
    render(doc, 0, std::cout);
    std::cout << (ok ? "all checks passed" : "CHECK FAILED") << "\n";
  }
  return ok ? 0 : 1;
}
