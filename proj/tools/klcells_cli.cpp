// Command-line surface for the tableau / KL-cell / GK-dimension machinery.
//
// Subcommands: tableau, gkdim, variety, cells, klpoly, verify, cache.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "klcells/klcells.hpp"
#include "klcells/verify.hpp"

using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;

void emit(const json& j, const std::string& text) {
  if (g_json) std::cout << j.dump() << "\n";
  else std::cout << text;
}

json tableau_json(const klc::YoungTableau& T) {
  json rows = json::array();
  for (const auto& r : T.rows) {
    json row = json::array();
    for (const auto& x : r) row.push_back(klc::to_string(x));
    rows.push_back(row);
  }
  return rows;
}

klc::WeightVector parse_weight_or_throw(const std::string& s) {
  auto t = klc::parse_weight(s);
  if (!t || t->empty()) throw UsageError("cannot parse weight '" + s + "'");
  return *t;
}

klc::Permutation parse_perm_or_throw(const std::string& s) {
  auto w = klc::parse_permutation(s);
  if (!w || w->n() == 0) throw UsageError("cannot parse permutation '" + s + "'");
  return *w;
}

void print_tableau_info(const klc::YoungTableau& T) {
  json j;
  j["tableau"] = tableau_json(T);
  j["shape"] = shape(T);
  j["columns"] = column_lengths(T);
  j["a"] = a_value(T);
  std::string text;
  text += "tableau: " + klc::format_tableau(T) + "\n";
  text += "shape: " + klc::format_partition(shape(T)) + "\n";
  text += "columns: " + klc::format_partition(column_lengths(T)) + "\n";
  text += "a: " + std::to_string(a_value(T)) + "\n";
  emit(j, text);
}

int run_tableau(const std::string& weight, const std::string& perm) {
  if (weight.empty() == perm.empty())
    throw UsageError("tableau: exactly one of --weight / --perm is required");
  klc::YoungTableau T;
  if (!weight.empty()) {
    const auto t = parse_weight_or_throw(weight);
    if (!klc::is_integral(t)) throw UsageError("tableau: weight is not integral");
    T = klc::tableau_of_weight(t);
  } else {
    T = klc::tableau_of_permutation(parse_perm_or_throw(perm));
  }
  print_tableau_info(T);
  return 0;
}

int run_gkdim(const std::string& weight, const std::string& perm) {
  if (weight.empty() == perm.empty())
    throw UsageError("gkdim: exactly one of --weight / --perm is required");
  json j;
  std::string text;
  if (!weight.empty()) {
    const auto t = parse_weight_or_throw(weight);
    if (!klc::is_integral(t)) throw UsageError("gkdim: weight is not integral");
    const klc::GKReport rep = klc::gkdim_weight(t);
    j["weight"] = klc::format_weight(rep.weight);
    j["columns"] = rep.columns;
    j["a"] = rep.a;
    j["gkdim"] = rep.gkdim;
    text += "weight: " + klc::format_weight(rep.weight) + "\n";
    text += "columns: " + klc::format_partition(rep.columns) + "\n";
    text += "a: " + std::to_string(rep.a) + "\n";
    text += "gkdim: " + std::to_string(rep.gkdim) + "\n";
  } else {
    const auto w = parse_perm_or_throw(perm);
    const long long gk = klc::gkdim_of_w(w);
    j["perm"] = klc::format_permutation(w);
    j["gkdim"] = gk;
    text += "perm: " + klc::format_permutation(w) + "\n";
    text += "gkdim: " + std::to_string(gk) + "\n";
  }
  emit(j, text);
  return 0;
}

int run_variety(const std::string& weight, const std::string& perm) {
  if (weight.empty() == perm.empty())
    throw UsageError("variety: exactly one of --weight / --perm is required");
  klc::VarietyLabel lab;
  if (!weight.empty()) {
    const auto t = parse_weight_or_throw(weight);
    if (!klc::is_integral(t)) throw UsageError("variety: weight is not integral");
    if (klc::is_minimal_gkdim(t)) lab = klc::minimal_variety_of_weight(t);
    else lab = klc::orbital_variety_label(klc::weight_to_permutation(t));
  } else {
    lab = klc::orbital_variety_label(parse_perm_or_throw(perm));
  }
  json j;
  j["label"] = lab.str();
  emit(j, "label: " + lab.str() + "\n");
  return 0;
}

std::unique_ptr<klc::CoxeterModel> make_model(int n, int dihedral) {
  if ((n > 0) == (dihedral > 0))
    throw UsageError("exactly one of --n / --dihedral is required");
  if (n > 0) {
    if (n < 2 || n > 7) throw UsageError("--n must be in 2..7");
    return std::make_unique<klc::SymmetricGroupModel>(n);
  }
  if (dihedral < 3 || dihedral > 64) throw UsageError("--dihedral must be in 3..64");
  return std::make_unique<klc::DihedralModel>(dihedral);
}

void maybe_load_cache(klc::KLTable& table, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open cache file '" + path + "'");
  table.load(in);
}

klc::CellSide parse_side(const std::string& s) {
  if (s == "left") return klc::CellSide::Left;
  if (s == "right") return klc::CellSide::Right;
  if (s == "two-sided") return klc::CellSide::TwoSided;
  throw UsageError("unknown side '" + s + "'");
}

int run_cells(int n, int dihedral, const std::string& side_str, const std::string& method,
              const std::string& cache) {
  const klc::CellSide side = parse_side(side_str);
  auto model = make_model(n, dihedral);
  klc::CellPartition part;
  if (method == "kl") {
    klc::KLTable table(*model);
    maybe_load_cache(table, cache);
    table.compute_all();
    part = klc::cells(table, side);
  } else if (method == "rs") {
    auto* sn = dynamic_cast<klc::SymmetricGroupModel*>(model.get());
    if (!sn) throw UsageError("--method rs requires a symmetric group model");
    part = klc::rs_cells(*sn, side);
  } else {
    throw UsageError("unknown method '" + method + "'");
  }

  json j;
  j["model"] = model->id();
  j["side"] = side_str;
  j["method"] = method;
  j["cells"] = json::array();
  std::string text;
  text += "model: " + model->id() + "\n";
  text += "side: " + side_str + "\n";
  text += "method: " + method + "\n";
  text += "cells: " + std::to_string(part.num_cells()) + "\n";
  for (std::size_t c = 0; c < part.members.size(); ++c) {
    json cell = json::array();
    text += "cell " + std::to_string(c) + " (size " + std::to_string(part.members[c].size()) + "):";
    for (std::size_t w : part.members[c]) {
      cell.push_back(model->element_repr(w));
      text += " " + model->element_repr(w);
    }
    text += "\n";
    j["cells"].push_back(cell);
  }
  emit(j, text);
  return 0;
}

int run_klpoly(int n, int dihedral, const std::string& xs, const std::string& ws,
               const std::string& cache) {
  auto model = make_model(n, dihedral);
  auto x = model->parse_element(xs);
  auto w = model->parse_element(ws);
  if (!x) throw UsageError("cannot parse element '" + xs + "'");
  if (!w) throw UsageError("cannot parse element '" + ws + "'");
  klc::KLTable table(*model);
  maybe_load_cache(table, cache);
  if (!table.leq(*x, *w)) throw UsageError("x is not <= w in the Bruhat order");
  const klc::PolynomialQ& p = table.polynomial(*x, *w);
  json j;
  j["x"] = xs;
  j["w"] = ws;
  j["polynomial"] = p.str();
  j["mu"] = table.mu(*x, *w);
  emit(j, "P = " + p.str() + "\nmu = " + std::to_string(table.mu(*x, *w)) + "\n");
  return 0;
}

void print_report(const klc::VerifyReport& rep) {
  json j;
  j["target"] = rep.target;
  j["range"] = rep.range;
  j["checked"] = rep.checked;
  j["failures"] = rep.failures;
  j["elapsed_seconds"] = rep.elapsed_seconds;
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.2f", rep.elapsed_seconds);
  std::string text = "verify " + rep.target + ": " + rep.range +
                     " checked=" + std::to_string(rep.checked) +
                     " failures=" + std::to_string(rep.failures.size()) + " elapsed=" + elapsed +
                     "s\n";
  for (const auto& f : rep.failures) text += "  FAIL " + f + "\n";
  emit(j, text);
}

int run_verify(const std::string& target, int n, bool big, int samples, std::uint64_t seed) {
  std::vector<klc::VerifyReport> reports;
  if (target == "engine" || target == "thm1") {
    const int limit = big ? 6 : 5;
    const int nn = (n > 0) ? n : 5;
    if (nn < 2 || nn > limit)
      throw UsageError("verify " + target + ": n must be in 2.." + std::to_string(limit) +
                       (big ? "" : " (use --big for n=6)"));
    reports.push_back(klc::verify_engine(nn));
    if (target == "thm1") reports.push_back(klc::verify_thm1(nn));
  } else if (target == "thm2") {
    const int nn = (n > 0) ? n : 7;
    if (nn < 2 || nn > 7) throw UsageError("verify thm2: n must be in 2..7");
    reports.push_back(klc::verify_thm2_perm(nn));
    reports.push_back(klc::verify_thm2_weight(nn, samples, seed));
  } else if (target == "thm3") {
    const int nn = (n > 0) ? n : 8;
    if (nn < 2 || nn > 8) throw UsageError("verify thm3: n must be in 2..8");
    reports.push_back(klc::verify_thm3(nn, /*with_kl=*/nn <= 5));
  } else if (target == "corollaries") {
    const int nn = (n > 0) ? n : 8;
    if (nn < 2 || nn > 8) throw UsageError("verify corollaries: n must be in 2..8");
    for (int k = 2; k <= nn; ++k) reports.push_back(klc::verify_thm2_weight(k, samples, seed));
    reports.push_back(klc::verify_sec3(std::min(nn, 5)));
  } else {
    throw UsageError("unknown verify target '" + target + "'");
  }
  bool ok = true;
  for (const auto& rep : reports) {
    print_report(rep);
    ok = ok && rep.ok();
  }
  return ok ? 0 : 1;
}

int run_cache_build(int n, int dihedral, const std::string& path) {
  auto model = make_model(n, dihedral);
  klc::KLTable table(*model);
  table.compute_all();
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write cache file '" + path + "'");
  table.save(out);
  json j;
  j["model"] = model->id();
  j["records"] = table.entries();
  j["path"] = path;
  emit(j, "model: " + model->id() + "\nrecords: " + std::to_string(table.entries()) + "\npath: " +
              path + "\n");
  return 0;
}

int run_cache_inspect(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open cache file '" + path + "'");
  std::string header;
  if (!std::getline(in, header) || header.rfind("KLCACHE 1 ", 0) != 0)
    throw UsageError("not a KLCACHE version 1 file: '" + path + "'");
  const std::string model_id = header.substr(10);
  std::size_t records = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++records;
  json j;
  j["model"] = model_id;
  j["records"] = records;
  emit(j, "model: " + model_id + "\nrecords: " + std::to_string(records) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig cells, tableaux and associated-variety labels for sl(n)"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string weight, perm, side = "right", method = "kl", cache, xs, ws, target, path;
  int n = 0, dihedral = 0, samples = 10000;
  bool big = false;
  std::uint64_t seed = 12345;

  auto* c_tab = app.add_subcommand("tableau", "Insertion tableau of a weight or permutation");
  c_tab->add_option("--weight", weight);
  c_tab->add_option("--perm", perm);

  auto* c_gk = app.add_subcommand("gkdim", "Gelfand-Kirillov dimension");
  c_gk->add_option("--weight", weight);
  c_gk->add_option("--perm", perm);

  auto* c_var = app.add_subcommand("variety", "Associated-variety label");
  c_var->add_option("--weight", weight);
  c_var->add_option("--perm", perm);

  auto* c_cells = app.add_subcommand("cells", "Kazhdan-Lusztig / RS cell partition");
  c_cells->add_option("--n", n, "Symmetric group rank");
  c_cells->add_option("--dihedral", dihedral, "Dihedral group I2(m)");
  c_cells->add_option("--side", side)->check(CLI::IsMember({"left", "right", "two-sided"}));
  c_cells->add_option("--method", method)->check(CLI::IsMember({"kl", "rs"}));
  c_cells->add_option("--cache", cache, "KL cache file");

  auto* c_poly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{x,w}");
  c_poly->add_option("--n", n, "Symmetric group rank");
  c_poly->add_option("--dihedral", dihedral, "Dihedral group I2(m)");
  c_poly->add_option("--x", xs)->required();
  c_poly->add_option("--w", ws)->required();
  c_poly->add_option("--cache", cache, "KL cache file");

  auto* c_ver = app.add_subcommand("verify", "Batch verification at desk scale");
  c_ver->add_option("target", target, "thm1|thm2|thm3|corollaries|engine")->required();
  c_ver->add_option("--n", n, "Upper rank (target-specific default)");
  c_ver->add_flag("--big", big, "Allow n=6 for engine/thm1");
  c_ver->add_option("--samples", samples, "Sample count for weight-side suites");
  c_ver->add_option("--seed", seed, "RNG seed for sampled suites");

  auto* c_cache = app.add_subcommand("cache", "KL table cache management");
  auto* c_build = c_cache->add_subcommand("build", "Compute and save a full KL table");
  c_build->add_option("--n", n, "Symmetric group rank");
  c_build->add_option("--dihedral", dihedral, "Dihedral group I2(m)");
  c_build->add_option("--path", path)->required();
  auto* c_inspect = c_cache->add_subcommand("inspect", "Show cache header and record count");
  c_inspect->add_option("--path", path)->required();
  c_cache->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  g_json = (format == "json");

  try {
    if (c_tab->parsed()) return run_tableau(weight, perm);
    if (c_gk->parsed()) return run_gkdim(weight, perm);
    if (c_var->parsed()) return run_variety(weight, perm);
    if (c_cells->parsed()) return run_cells(n, dihedral, side, method, cache);
    if (c_poly->parsed()) return run_klpoly(n, dihedral, xs, ws, cache);
    if (c_ver->parsed()) return run_verify(target, n, big, samples, seed);
    if (c_build->parsed()) return run_cache_build(n, dihedral, path);
    if (c_inspect->parsed()) return run_cache_inspect(path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
