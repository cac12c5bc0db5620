#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sdw/bridge.hpp"
#include "sdw/catalog.hpp"
#include "sdw/code.hpp"
#include "sdw/coset.hpp"
#include "sdw/gleason.hpp"
#include "sdw/shadow.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  sdw::Budget budget;
  std::string format = "text";
  std::string out_dir;
};

int exit_code_for(sdw::errc c) {
  switch (c) {
    case sdw::errc::parse_error:
    case sdw::errc::invalid_argument:
      return 2;
    case sdw::errc::budget_exceeded:
      return 3;
    default:
      return 1;
  }
}

// Key/value report rendered as text, a JSON object, or CSV rows. Values
// stay strings so all three renderings are byte-deterministic.
struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
  }
  void print(const std::string& format) const {
    if (format == "json") {
      ordered_json j;
      for (const auto& [k, v] : fields) j[k] = v;
      std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
      for (const auto& [k, v] : fields) std::cout << k << "," << v << "\n";
    } else {
      for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
    }
  }
};

std::string enum_pairs(const sdw::WeightEnum& we) {
  std::string out;
  for (int i = 0; i <= we.n; ++i) {
    const mpz_class& c = we.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
    out += ':';
    out += c.get_str();
  }
  return out;
}

ordered_json enum_json(const sdw::WeightEnum& we) {
  ordered_json j = ordered_json::object();
  for (int i = 0; i <= we.n; ++i) {
    const mpz_class& c = we.coeffs[static_cast<std::size_t>(i)];
    if (c != 0) j[std::to_string(i)] = c.get_str();
  }
  return j;
}

ordered_json enum_json(const std::vector<mpq_class>& by_weight) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < by_weight.size(); ++i) {
    const mpq_class& q = by_weight[i];
    if (q != 0) j[std::to_string(i)] = q.get_str();
  }
  return j;
}

bool fits_enum_budget(int log2_count, const sdw::Budget& b) {
  return log2_count >= 0 && log2_count < 63 &&
         (std::uint64_t{1} << log2_count) <= b.enum_visits;
}

mpz_class sphere_size(int n, int radius) {
  mpz_class total = 0;
  mpz_class term;
  for (int w = 0; w <= radius; ++w) {
    mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(w));
    total += term;
  }
  return total;
}

bool covering_feasible(int n, int k, int radius_bound, const sdw::Budget& b) {
  const int r = n - k;
  if (r >= 63 || (std::uint64_t{1} << r) > b.synd_entries) return false;
  return sphere_size(n, radius_bound) <= mpz_class(static_cast<unsigned long>(b.enum_visits));
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

fs::path ensure_out_dir(const GlobalOpts& g) {
  fs::path dir(g.out_dir);
  fs::create_directories(dir);
  return dir;
}

void write_text_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) sdw::fail(sdw::errc::parse_error, "cannot write " + p.string());
  out << text;
  if (!out) sdw::fail(sdw::errc::parse_error, "write failed for " + p.string());
}

int cmd_analyze(const GlobalOpts& g, const std::string& path) {
  sdw::LinearCode c = sdw::load_code_file(path);
  const int n = c.length();
  const int k = c.dim();
  Report rep;
  rep.add("input", path);
  rep.add("n", std::to_string(n));
  rep.add("k", std::to_string(k));
  if (k == 0) {
    rep.add("note", "zero code, nothing further to report");
    rep.print(g.format);
    return 0;
  }

  const bool sd = sdw::is_self_dual(c);
  rep.add("self_dual", sd ? "yes" : "no");

  std::optional<sdw::ParityClass> parity;
  try {
    parity = sdw::parity_class(c);
    rep.add("parity", sdw::parity_name(*parity));
  } catch (const sdw::error&) {
    rep.add("parity", "not self-orthogonal");
  }

  sdw::BzResult bz = sdw::min_weight_bz(c);
  rep.add("min_weight", std::to_string(bz.weight));
  rep.add("min_weight_method", "revolving-door information sets");
  if (sd) rep.add("extremal", bz.weight == sdw::rains_bound(n) ? "yes" : "no");

  std::optional<sdw::WeightEnum> we;
  if (fits_enum_budget(k, g.budget)) we = sdw::weight_enumerator(c, g.budget);

  int bound = -1;
  if (sd) {
    bound = we ? sdw::delsarte_bound(*we)
               : sdw::delsarte_bound_from_min_weight(n, bz.weight, *parity);
    rep.add("delsarte_bound", std::to_string(bound));
  } else if (fits_enum_budget(n - k, g.budget)) {
    sdw::LinearCode dual(sdw::kernel(c.generator()));
    bound = sdw::delsarte_bound(sdw::weight_enumerator(dual, g.budget));
    rep.add("delsarte_bound", std::to_string(bound));
  }

  if (covering_feasible(n, k, bound >= 0 ? bound : n - k, g.budget)) {
    sdw::SyndromeTable t = sdw::build_syndrome_table(c, g.budget);
    rep.add("covering_radius", std::to_string(sdw::covering_radius(t)));
  } else {
    rep.add("covering_radius", "not computed (budget)");
  }

  if (we) rep.add("weight_enumerator", enum_pairs(*we));
  rep.print(g.format);
  return 0;
}

int cmd_parse(const GlobalOpts& g, const std::string& path, int n_opt) {
  Report rep;
  rep.add("input", path);
  if (fs::path(path).extension() == ".sup") {
    std::ifstream in(path, std::ios::binary);
    if (!in) sdw::fail(sdw::errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    int n = n_opt;
    if (n <= 0) {
      // Default the ambient length to the largest listed coordinate.
      long best = 0;
      for (std::size_t i = 0; i < text.size();) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
          std::size_t e = i;
          while (e < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[e])))
            ++e;
          best = std::max(best, std::stol(text.substr(i, e - i)));
          i = e;
        } else {
          ++i;
        }
      }
      n = static_cast<int>(best);
    }
    sdw::BitVec v = sdw::parse_support(text, n);
    rep.add("format", "support list");
    rep.add("n", std::to_string(n));
    rep.add("weight", std::to_string(v.weight()));
  } else {
    sdw::LinearCode c = sdw::load_code_file(path);
    rep.add("format", "generator matrix");
    rep.add("n", std::to_string(c.length()));
    rep.add("k", std::to_string(c.dim()));
  }
  rep.add("valid", "yes");
  rep.print(g.format);
  return 0;
}

int cmd_covering(const GlobalOpts& g, const std::string& path,
                 const std::string& coset_file, const std::string& dump_path) {
  sdw::LinearCode c = sdw::load_code_file(path);
  const int n = c.length();
  const int k = c.dim();
  Report rep;
  rep.add("input", path);
  rep.add("n", std::to_string(n));
  rep.add("k", std::to_string(k));

  sdw::BzResult bz = sdw::min_weight_bz(c);
  rep.add("min_weight", std::to_string(bz.weight));

  int bound = -1;
  if (sdw::is_self_dual(c)) {
    bound = fits_enum_budget(k, g.budget)
                ? sdw::delsarte_bound(sdw::weight_enumerator(c, g.budget))
                : sdw::delsarte_bound_from_min_weight(n, bz.weight,
                                                      sdw::parity_class(c));
  } else if (fits_enum_budget(n - k, g.budget)) {
    sdw::LinearCode dual(sdw::kernel(c.generator()));
    bound = sdw::delsarte_bound(sdw::weight_enumerator(dual, g.budget));
  }
  if (bound >= 0) rep.add("delsarte_bound", std::to_string(bound));

  std::optional<sdw::SyndromeTable> table;
  if (covering_feasible(n, k, bound >= 0 ? bound : n - k, g.budget)) {
    table = sdw::build_syndrome_table(c, g.budget, false);
    const int radius = sdw::covering_radius(*table);
    rep.add("covering_radius", std::to_string(radius));
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(radius) + 1, 0);
    for (std::uint8_t w : table->leader_weights()) ++hist[w];
    for (int w = 0; w <= radius; ++w)
      rep.add("cosets_with_leader_weight_" + std::to_string(w),
              std::to_string(hist[static_cast<std::size_t>(w)]));
  } else {
    rep.add("covering_radius", "bounds only");
    rep.add("covering_radius_lower", std::to_string((bz.weight - 1) / 2));
    if (bound >= 0) rep.add("covering_radius_upper", std::to_string(bound));
  }

  if (!coset_file.empty()) {
    sdw::BitVec v = sdw::load_support_file(coset_file, n);
    rep.add("coset_rep", sdw::render_support(v));
    if (table) {
      rep.add("coset_min_weight",
              std::to_string(sdw::coset_min_weight(*table, v)));
    } else {
      sdw::CosetBound cb = sdw::coset_min_weight(c, v, g.budget);
      rep.add("coset_min_weight",
              cb.exact ? std::to_string(cb.weight)
                       : "<= " + std::to_string(cb.weight) +
                             " (unverified exact)");
    }
  }

  if (!dump_path.empty()) {
    if (!table)
      sdw::fail(sdw::errc::budget_exceeded,
                "syndrome table was not built, nothing to dump");
    std::ofstream out(dump_path, std::ios::binary | std::ios::trunc);
    if (!out) sdw::fail(sdw::errc::parse_error, "cannot write " + dump_path);
    sdw::save_syndrome_weights(*table, out);
    rep.add("table_dump", dump_path);
  }

  rep.print(g.format);
  return 0;
}

void add_bridge_checks(Report& rep, const sdw::BridgeReport& br) {
  rep.add("direction", br.direction);
  for (const sdw::BridgeCheck& ch : br.checks)
    rep.add(ch.what, ch.value + (ch.verified ? "" : " (unverified: budget)"));
}

int cmd_bridge(const GlobalOpts& g, const std::string& path,
               const std::string& v_text, const std::string& v_file,
               bool census, bool reverse) {
  sdw::LinearCode c = sdw::load_code_file(path);
  sdw::BridgeOptions opt;
  opt.budget = g.budget;
  Report rep;
  rep.add("input", path);

  if (reverse) {
    sdw::BridgeReport br;
    sdw::ToDoublyEven td = sdw::to_doubly_even(c, opt, &br);
    add_bridge_checks(rep, br);
    rep.add("coset_leader_weight", std::to_string(td.coset_leader_weight));
    if (!g.out_dir.empty()) {
      fs::path dir = ensure_out_dir(g);
      std::string stem = stem_of(path);
      sdw::save_code_file((dir / (stem + "_n1.gen")).string(), td.n1);
      sdw::save_code_file((dir / (stem + "_n3.gen")).string(), td.n3);
      rep.add("written", stem + "_n1.gen " + stem + "_n3.gen");
    }
    rep.print(g.format);
    return 0;
  }

  if (census) {
    sdw::BridgeReport br;
    std::vector<sdw::LinearCode> codes = sdw::census_from_cosets(c, opt, &br);
    add_bridge_checks(rep, br);
    rep.add("census", std::to_string(codes.size()));
    std::size_t ok = 0;
    const int kf = sdw::family_index(c.length());
    for (const sdw::LinearCode& s : codes) {
      sdw::SExtremal se = sdw::s_extremal_check(s, g.budget);
      if (se.is_s_extremal && se.d_code == 4 * kf + 2) ++ok;
    }
    rep.add("s_extremal_outputs",
            std::to_string(ok) + "/" + std::to_string(codes.size()));
    if (!g.out_dir.empty()) {
      fs::path dir = ensure_out_dir(g);
      for (std::size_t i = 0; i < codes.size(); ++i) {
        std::ostringstream name;
        name << "bridge_" << std::setfill('0') << std::setw(5) << i << ".gen";
        sdw::save_code_file((dir / name.str()).string(), codes[i]);
      }
      rep.add("written", std::to_string(codes.size()) + " files");
    }
    rep.print(g.format);
    return ok == codes.size() ? 0 : 1;
  }

  if (v_text.empty() && v_file.empty())
    sdw::fail(sdw::errc::invalid_argument,
              "forward direction needs --v, --v-file, or --census");
  sdw::BitVec v = v_file.empty()
                      ? sdw::parse_support(v_text, c.length())
                      : sdw::load_support_file(v_file, c.length());
  sdw::BridgeReport br;
  sdw::LinearCode s = sdw::from_doubly_even(c, v, opt, &br);
  add_bridge_checks(rep, br);
  if (!g.out_dir.empty()) {
    fs::path dir = ensure_out_dir(g);
    std::string name = stem_of(path) + "_s.gen";
    sdw::save_code_file((dir / name).string(), s);
    rep.add("written", name);
  }
  rep.print(g.format);
  return 0;
}

std::pair<int, int> parse_k_range(const std::string& range) {
  std::size_t dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      int k = std::stoi(range);
      return {k, k};
    }
    int a = std::stoi(range.substr(0, dots));
    int b = std::stoi(range.substr(dots + 2));
    if (a < 1 || b < a) throw std::invalid_argument("order");
    return {a, b};
  } catch (const std::exception&) {
    sdw::fail(sdw::errc::invalid_argument,
              "--k wants N or A..B, got \"" + range + "\"");
  }
}

int cmd_gleason(const GlobalOpts& g, int family, const std::string& k_arg) {
  if (family != 8 && family != 16)
    sdw::fail(sdw::errc::invalid_argument, "--family must be 8 or 16");
  const sdw::Family fam =
      family == 8 ? sdw::Family::n24k8 : sdw::Family::n24k16;
  auto [k_from, k_to] = parse_k_range(k_arg);

  std::vector<sdw::ScanRow> rows =
      sdw::scan_family(fam, k_from, k_to, g.budget.workers);

  if (g.format == "json") {
    ordered_json out = ordered_json::array();
    for (const sdw::ScanRow& r : rows) {
      ordered_json j;
      j["k"] = r.k;
      j["n"] = r.n;
      j["unique"] = r.unique;
      j["code_min_sign"] = r.code_min_sign;
      j["shadow_min_sign"] = r.shadow_min_sign;
      if (r.first_negative_weight >= 0)
        j["first_negative_weight"] = r.first_negative_weight;
      j["wall_time"] = r.wall_seconds;
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "k,n,unique,code_min_sign,shadow_min_sign,"
                 "first_negative_weight,wall_time\n";
    for (const sdw::ScanRow& r : rows) {
      std::cout << r.k << "," << r.n << "," << (r.unique ? "true" : "false")
                << "," << r.code_min_sign << "," << r.shadow_min_sign << ",";
      if (r.first_negative_weight >= 0) std::cout << r.first_negative_weight;
      std::cout << "," << std::fixed << std::setprecision(3) << r.wall_seconds
                << "\n";
      std::cout.unsetf(std::ios::fixed);
    }
  }

  if (k_from != k_to) return 0;

  sdw::GleasonSolution gs = sdw::solve_s_extremal(fam, k_from);
  ordered_json doc;
  doc["family"] = family;
  doc["k"] = gs.k;
  doc["n"] = gs.n;
  doc["unique"] = gs.unique;
  doc["code"] = enum_json(gs.code_we);
  doc["shadow"] = enum_json(gs.shadow_we);
  if (fam == sdw::Family::n24k8) {
    doc["coset"] = enum_json(sdw::coset_weight_enumerator(gs));
    doc["neighbor"] = enum_json(sdw::neighbor_weight_enum(gs));
  }

  if (g.format == "text") {
    std::cout << "code: " << doc["code"].dump() << "\n";
    std::cout << "shadow: " << doc["shadow"].dump() << "\n";
  }
  if (!g.out_dir.empty()) {
    fs::path dir = ensure_out_dir(g);
    std::ostringstream name;
    name << "gleason_f" << family << "_k" << k_from << ".json";
    write_text_file(dir / name.str(), doc.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for binary self-dual codes and their shadows"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--budget-enum", g.budget.enum_visits,
                 "max codewords visited by enumerations")
      ->envname("SDW_BUDGET_ENUM");
  app.add_option("--budget-synd", g.budget.synd_entries,
                 "max syndrome table entries");
  app.add_option("--workers", g.budget.workers, "worker thread count")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out-dir", g.out_dir, "directory for produced files");

  std::string an_path;
  CLI::App* an = app.add_subcommand("analyze", "report code parameters");
  an->add_option("path", an_path, "code file (.gen or .oct)")->required();

  std::string pa_path;
  int pa_n = 0;
  CLI::App* pa = app.add_subcommand("parse", "validate an input file");
  pa->add_option("path", pa_path, "file to validate")->required();
  pa->add_option("--n", pa_n, "ambient length for support lists");

  std::string cv_path, cv_coset, cv_dump;
  CLI::App* cv =
      app.add_subcommand("covering", "covering radius and coset census");
  cv->add_option("path", cv_path, "code file")->required();
  cv->add_option("--coset", cv_coset, "support file of a coset representative");
  cv->add_option("--dump-table", cv_dump, "write the leader-weight table");

  std::string br_path, br_v, br_vfile;
  bool br_census = false, br_reverse = false;
  CLI::App* br = app.add_subcommand(
      "bridge", "pass between doubly even and singly even mates");
  br->add_option("path", br_path, "code file")->required();
  br->add_option("--v", br_v, "parity functional as a support list");
  br->add_option("--v-file", br_vfile, "support file for --v");
  br->add_flag("--census", br_census, "one output per minimum-weight coset");
  br->add_flag("--reverse", br_reverse, "singly even input, emit neighbors");

  int gl_family = 0;
  std::string gl_k;
  CLI::App* gl =
      app.add_subcommand("gleason", "exact enumerator solver and scans");
  gl->add_option("--family", gl_family, "length family, 8 or 16")->required();
  gl->add_option("--k", gl_k, "index N or range A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*an) return cmd_analyze(g, an_path);
    if (*pa) return cmd_parse(g, pa_path, pa_n);
    if (*cv) return cmd_covering(g, cv_path, cv_coset, cv_dump);
    if (*br) return cmd_bridge(g, br_path, br_v, br_vfile, br_census, br_reverse);
    if (*gl) return cmd_gleason(g, gl_family, gl_k);
  } catch (const sdw::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
