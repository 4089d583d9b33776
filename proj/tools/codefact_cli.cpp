// Batch command-line front end: every subcommand reads/writes canonical JSON
// and uses exact arithmetic only. Exit codes: 0 success/verified, 1 a
// verification failed (diagnostic JSON on stdout), 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codefact/codefact.hpp"
#include "codefact/fixtures.hpp"
#include "codefact/io.hpp"

namespace {

using namespace codefact;
using nlohmann::json;

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

IndexSet parse_list(const std::string& text) {
  IndexSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in integer list");
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer in list: " + item);
    out.push_back(static_cast<uint32_t>(v));
  }
  return normalized_set(std::move(out));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

int run_verify_code(const std::string& path) {
  const CodeSpec code = io::code_from_json(read_json_file(path));
  const CodeCheck check = sardinas_patterson(code);
  json out = io::code_check_to_json(check);
  out["kraft_sum"] = io::rat_to_string(kraft_sum(code));
  out["is_maximal"] = is_maximal_code(code);
  emit(out);
  return check.is_code ? 0 : 1;
}

int run_verify_factorization(const std::string& pair_path, const std::string& code_path) {
  const FactorizationPair f = io::pair_from_json(read_json_file(pair_path));
  if (!code_path.empty()) {
    const CodeSpec code = io::code_from_json(read_json_file(code_path));
    const bool ok = verify_factorization(code, f);
    emit(json{{"verified", ok}});
    return ok ? 0 : 1;
  }
  const CodeSpec code = code_from_factorization(f.P, f.S);
  emit(json{{"verified", true},
            {"code", io::code_to_json(code)},
            {"is_positive", is_positive(f)},
            {"is_maximal", is_maximal_code(code)}});
  return 0;
}

int run_layers(const std::string& pair_path) {
  const FactorizationPair f = io::pair_from_json(read_json_file(pair_path));
  json layers = json::array();
  for (const NcPoly& c : layer_decompose(f)) layers.push_back(io::ncpoly_to_json(c));
  emit(json{{"layers", std::move(layers)}});
  return 0;
}

int run_classify(const std::string& pair_path) {
  const FactorizationPair f = io::pair_from_json(read_json_file(pair_path));
  emit(io::classify_report_to_json(classify_4code(f)));
  return 0;
}

int run_krasner_enum(uint32_t n, uint32_t bound) {
  json pairs = json::array();
  for (const auto& k : enumerate_krasner(n, bound ? bound : limits::krasner_enum_bound)) {
    pairs.push_back(io::krasner_to_json(k));
  }
  emit(json{{"n", n}, {"pairs", std::move(pairs)}});
  return 0;
}

int run_krasner_verify(const IndexSet& I, const IndexSet& J, uint32_t n) {
  const bool ok = verify_krasner(I, J, n);
  emit(json{{"I", io::set_to_json(I)},
            {"J", io::set_to_json(J)},
            {"n", n},
            {"valid", ok}});
  return ok ? 0 : 1;
}

int run_hajos_check(const IndexSet& T, const IndexSet& R, uint32_t n, uint32_t bound) {
  json out{{"T", io::set_to_json(T)}, {"R", io::set_to_json(R)}, {"n", n}};
  if (!is_factorization(T, R, n)) {
    out["factorization"] = false;
    out["hajos"] = false;
    emit(out);
    return 1;
  }
  out["factorization"] = true;
  const auto w = hajos_witness(T, R, n, bound);
  if (!w) {
    out["hajos"] = false;
    out["note"] = "no witness within bound " + std::to_string(bound ? bound : 2 * n);
    emit(out);
    return 1;
  }
  out["hajos"] = true;
  out["witness"] = io::hajos_witness_to_json(*w);
  out["strong"] = is_strong_hajos(w->M, w->L);
  emit(out);
  return 0;
}

json pair_report(const FactorizationPair& f) {
  const CodeSpec code = code_from_factorization(f.P, f.S);
  return json{{"P", io::ncpoly_to_json(f.P)},
              {"S", io::ncpoly_to_json(f.S)},
              {"code", io::code_to_json(code)},
              {"code_size", code.size()},
              {"top_layer", layer_decompose(f).size() - 1}};
}

int run_construct(const std::string& kind, const std::string& spec_path) {
  const json spec = read_json_file(spec_path);
  FactorizationPair f;
  if (kind == "three-code") {
    f = check_3code(io::three_code_spec_from_json(spec));
  } else if (kind == "tower") {
    if (!spec.contains("krasner")) throw std::invalid_argument("tower: expected {krasner, levels}");
    f = build_tower(io::krasner_from_json(spec["krasner"]),
                    io::tower_levels_from_json(spec.value("levels", json::array())));
  } else if (kind == "teoc-extend") {
    f = teoc_extend(io::teoc_extension_from_json(spec));
  } else if (kind == "teoc-peel") {
    if (!spec.contains("pair") || !spec.contains("r")) {
      throw std::invalid_argument("teoc-peel: expected {pair, r}");
    }
    f = teoc_peel(io::pair_from_json(spec["pair"]), spec["r"].get<uint32_t>());
  } else if (kind == "four-code") {
    f = check_4code_item3(io::four_code_spec_from_json(spec));
  } else {
    throw std::invalid_argument("unknown construct kind: " + kind);
  }
  emit(pair_report(f));
  return 0;
}

int run_fixtures(const std::string& name, bool all) {
  if (all) {
    bool ok = true;
    json reports = json::array();
    for (const auto& fx : fixtures::fixture_names()) {
      auto res = fixtures::run_fixture(fx);
      ok = ok && res.ok;
      reports.push_back(std::move(res.report));
    }
    emit(json{{"ok", ok}, {"fixtures", std::move(reports)}});
    return ok ? 0 : 1;
  }
  auto res = fixtures::run_fixture(name);
  emit(res.report);
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification and construction of factorizations of finite maximal codes "
               "over {a,b} and of the cyclic-group factorizations behind them"};
  app.require_subcommand(1);

  std::string code_path, pair_path, opt_code_path, spec_path, kind, fixture_name;
  std::string list_i, list_j, list_t, list_r;
  uint32_t n = 0, bound = 0;
  bool all_fixtures = false;

  auto* verify_code = app.add_subcommand("verify-code", "decide code-hood and maximality");
  verify_code->add_option("code", code_path, "code JSON file")->required();

  auto* verify_fact =
      app.add_subcommand("verify-factorization", "check C = P(A-1)S + 1 for a pair");
  verify_fact->add_option("pair", pair_path, "factorization pair JSON file")->required();
  verify_fact->add_option("--code", opt_code_path, "explicit code JSON to verify against");

  auto* layers = app.add_subcommand("layers", "b-layer decomposition of P(A-1)S + 1");
  layers->add_option("pair", pair_path, "factorization pair JSON file")->required();

  auto* classify = app.add_subcommand("classify", "structural classification of a 4-code pair");
  classify->add_option("pair", pair_path, "factorization pair JSON file")->required();

  auto* krasner = app.add_subcommand("krasner", "Krasner factorizations of Z_n");
  krasner->require_subcommand(1);
  auto* kenum = krasner->add_subcommand("enum", "enumerate all pairs");
  kenum->add_option("n", n, "group order")->required();
  kenum->add_option("--bound", bound, "enumeration bound override");
  auto* kverify = krasner->add_subcommand("verify", "check a^I a^J = 1 + ... + a^(n-1)");
  kverify->add_option("--I", list_i, "comma-separated I")->required();
  kverify->add_option("--J", list_j, "comma-separated J")->required();
  kverify->add_option("--n", n, "group order")->required();

  auto* hajos = app.add_subcommand("hajos", "Hajos factorizations of Z_n");
  hajos->require_subcommand(1);
  auto* hcheck = hajos->add_subcommand("check", "search for a Hajos witness of (T,R)");
  hcheck->add_option("--T", list_t, "comma-separated T")->required();
  hcheck->add_option("--R", list_r, "comma-separated R")->required();
  hcheck->add_option("--n", n, "group order")->required();
  hcheck->add_option("--bound", bound, "max element of M and L (default 2n)");

  auto* construct = app.add_subcommand("construct", "build a factorization from a spec file");
  construct
      ->add_option("kind", kind, "three-code | tower | teoc-extend | teoc-peel | four-code")
      ->required();
  construct->add_option("spec", spec_path, "spec JSON file")->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "replay the embedded worked examples");
  auto* frun = fixtures_cmd->add_subcommand("run", "run one fixture or all of them");
  frun->add_option("name", fixture_name, "ex1 | sic | noc1 | hajos24 | remark");
  frun->add_flag("--all", all_fixtures, "run every fixture");
  fixtures_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (verify_code->parsed()) return run_verify_code(code_path);
    if (verify_fact->parsed()) return run_verify_factorization(pair_path, opt_code_path);
    if (layers->parsed()) return run_layers(pair_path);
    if (classify->parsed()) return run_classify(pair_path);
    if (kenum->parsed()) return run_krasner_enum(n, bound);
    if (kverify->parsed()) return run_krasner_verify(parse_list(list_i), parse_list(list_j), n);
    if (hcheck->parsed()) return run_hajos_check(parse_list(list_t), parse_list(list_r), n, bound);
    if (construct->parsed()) return run_construct(kind, spec_path);
    if (frun->parsed()) {
      if (!all_fixtures && fixture_name.empty()) {
        throw std::invalid_argument("fixtures run: give a fixture name or --all");
      }
      return run_fixtures(fixture_name, all_fixtures);
    }
    std::cerr << app.help() << std::flush;
    return 2;
  } catch (const verify_error& e) {
    emit(io::error_to_json(e));
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
