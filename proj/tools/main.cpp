// centrekit: symmetric tensor products on equivariant vector bundles over
// finite groups, with a verification suite for the underlying identities.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "centrekit/centre.hpp"
#include "centrekit/io.hpp"
#include "centrekit/verify.hpp"

namespace {

using namespace centrekit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int group_cap() {
  if (const char* env = std::getenv("CENTREKIT_CAP")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 1024;
}

struct CommonOpts {
  std::string group;
  std::string omega = "none";
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string out;
  std::string format = "text";
};

GroupPtr load_group(const std::string& source) {
  return std::make_shared<const FiniteGroup>(resolve_group_source(source, group_cap()));
}

int resolve_omega(GroupPtr g, const std::string& omega) {
  if (omega == "none") return FiniteGroup::kIdentity;
  if (omega == "auto") {
    const auto invs = central_involutions(*g);
    if (invs.size() != 1) {
      throw Error(ErrorCode::UnsupportedParams,
                  "omega=auto needs exactly one central involution, found " +
                      std::to_string(invs.size()));
    }
    return invs.front();
  }
  const int w = std::stoi(omega);
  make_super_group(g, w);  // validates
  return w;
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(opts.out, text);
  }
}

int cmd_chartable(const CommonOpts& opts) {
  GroupPtr g;
  int omega = 0;
  try {
    g = load_group(opts.group);
    omega = resolve_omega(g, opts.omega);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    auto table = character_table(*g, omega, Seed{opts.seed}, Tolerance{opts.tol});
    if (opts.format == "json") {
      emit(opts, character_table_to_json(table).dump(2) + "\n");
    } else {
      emit(opts, character_table_to_text(table, opts.tol));
    }
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_tensor(const CommonOpts& opts, const std::string& kind, const std::string& a_path,
               const std::string& b_path) {
  EquivariantBundle a, b;
  int omega = 0;
  try {
    a = read_bundle_file(a_path);
    b = read_bundle_file(b_path, a.group);
    require_same_group(a, b);
    if (kind == "super" && opts.omega == "none") {
      throw Error(ErrorCode::UnsupportedParams, "super tensor needs --omega");
    }
    omega = resolve_omega(a.group, opts.omega);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string out_path = opts.out.empty() ? "tensor_out.json" : opts.out;
  try {
    if (kind == "conv") {
      write_bundle_file(out_path, convolution_tensor(a, b));
    } else if (kind == "fib") {
      write_bundle_file(out_path, fibrewise_tensor(a, b));
    } else if (kind == "super") {
      SuperGroup sg = make_super_group(a.group, omega);
      write_bundle_file(out_path, fibrewise_super_tensor(sg, a, b));
    } else if (kind == "sym") {
      auto ctx = make_context(a.group, omega, Seed{opts.seed}, Tolerance{opts.tol});
      auto sym = symmetric_tensor(ctx, a, b);  // asserts agreement internally
      write_bundle_file(out_path, sym.bundle, &sym.splitting.grading);
    } else {
      std::cerr << "unknown tensor kind '" << kind << "'\n";
      return kExitUsage;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::GroupMismatch || e.code() == ErrorCode::BadFormat) {
      std::cerr << "input error: " << e.what() << "\n";
      return kExitUsage;
    }
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::string& checks, int scale) {
  ModelSpec model;
  std::vector<std::string> selected;
  try {
    model.group = load_group(opts.group);
    model.omega = resolve_omega(model.group, opts.omega);
    model.name = opts.group;
    if (checks == "all") {
      selected = check_names();
    } else {
      std::string cur;
      for (char c : checks + ",") {
        if (c == ',') {
          if (!cur.empty()) selected.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      for (const auto& name : selected) {
        if (!is_known_check(name)) {
          throw Error(ErrorCode::UnknownCheck, "no check named '" + name + "'");
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<CheckReport> reports;
  const bool is_super = model.omega != FiniteGroup::kIdentity;
  for (const auto& name : selected) {
    if (!check_applicable(name, is_super)) continue;
    reports.push_back(run_check(name, model, Seed{opts.seed}, Tolerance{opts.tol}, scale));
  }
  const std::string text =
      opts.format == "json" ? reports_to_json(reports).dump(2) + "\n" : reports_to_text(reports);
  emit(opts, text);
  return all_passed(reports) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant vector bundles over finite groups: character tables, symmetric "
               "tensor products and identity checks"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string tensor_kind, a_path, b_path, checks = "all";
  int scale = 5;

  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    auto* g = cmd->add_option("--group", opts.group, "builtin name or group file");
    if (needs_group) g->required();
    cmd->add_option("--omega", opts.omega, "central involution: index, 'auto' or 'none'");
    cmd->add_option("--seed", opts.seed, "random seed");
    cmd->add_option("--tol", opts.tol, "absolute tolerance");
    cmd->add_option("--out", opts.out, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "text or json");
  };

  auto* chartable = app.add_subcommand("chartable", "print the character table");
  add_common(chartable, true);

  auto* tensor = app.add_subcommand("tensor", "tensor two bundle files");
  add_common(tensor, false);
  tensor->add_option("kind", tensor_kind, "conv | fib | super | sym")->required();
  tensor->add_option("a", a_path, "first bundle JSON")->required();
  tensor->add_option("b", b_path, "second bundle JSON")->required();

  auto* verify = app.add_subcommand("verify", "run named identity checks");
  add_common(verify, true);
  verify->add_option("--checks", checks, "'all' or a comma-separated list");
  verify->add_option("--scale", scale, "random instances per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (chartable->parsed()) return cmd_chartable(opts);
  if (tensor->parsed()) return cmd_tensor(opts, tensor_kind, a_path, b_path);
  if (verify->parsed()) return cmd_verify(opts, checks, scale);
  return kExitUsage;
}
