#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sextic/acceptance.hpp"
#include "sextic/classify.hpp"
#include "sextic/vankampen.hpp"

#ifndef SEXTIC_VERSION
#define SEXTIC_VERSION "dev"
#endif

using namespace sextic;
namespace vk = sextic::vankampen;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

// Exit code 2: a bad selector or filter (as opposed to a failed check).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::size_t limit = fpgroup::kDefaultCosetLimit;
  std::string format;  // empty: the command's default
  std::string cache;
  std::uint64_t seed = 1;
  bool quiet = false;

  std::string format_or(const std::string& fallback) const { return format.empty() ? fallback : format; }
};

std::string cache_dir(const RunConfig& cfg) {
  if (const char* env = std::getenv("SEXTIC_CACHE_DIR"); env && *env) return env;
  return cfg.cache;
}

// Plain-file cache of command output, keyed by command, arguments and version.
std::string cached(const RunConfig& cfg, const std::string& command, const std::vector<std::string>& args,
                   const std::function<std::string()>& produce) {
  const auto dir = cache_dir(cfg);
  if (dir.empty()) return produce();
  ordered_json key{{"command", command},         {"args", args},       {"version", SEXTIC_VERSION},
                   {"limit", cfg.limit},         {"seed", cfg.seed},   {"format", cfg.format}};
  const auto text = key.dump();
  std::ostringstream name;
  name << command << '-' << std::hex << std::hash<std::string>{}(text) << ".json";
  const auto path = std::filesystem::path(dir) / name.str();
  if (std::ifstream in(path); in) {
    try {
      const auto entry = json::parse(in);
      if (entry.at("key") == json::parse(text)) return entry.at("output").get<std::string>();
    } catch (const std::exception&) {
      // unreadable entry: recompute and overwrite
    }
  }
  auto out = produce();
  std::filesystem::create_directories(dir);
  std::ofstream(path) << ordered_json{{"schema", kSchema}, {"key", json::parse(text)}, {"output", out}}.dump(1);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// skeletons -------------------------------------------------------------------

std::string shape_name(const cmap::Skeleton& s, const std::string& profile) {
  if (s.map.is_circle()) return "circle";
  static const std::map<std::string, std::string> names{
      {"1,1", "loop"}, {"2,2,2", "theta"}, {"4,1,1", "dumbbell"}, {"3,3,3,3", "tetrahedron"}};
  auto it = names.find(profile);
  return it == names.end() ? "" : it->second;
}

std::string cmd_skeletons(const RunConfig& cfg, const std::string& filter) {
  std::vector<cmap::Skeleton> census;
  const bool e8 = filter == "e8-perturbations";
  if (filter == "sigma2") census = classify::sigma2_census();
  else if (e8) census = classify::e8_perturbation_census();
  else throw UsageError("unknown skeleton filter '" + filter + "' (expected sigma2 or e8-perturbations)");

  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < census.size(); ++i) {
    const auto& s = census[i];
    const auto c = s.map.vertex_counts();
    const auto profile = s.map.is_circle() ? std::string("circle") : classify::face_profile(s.map);
    ordered_json e{{"index", i + 1},
                   {"code", s.map.is_circle() ? std::string("circle") : cmap::canonical_code(s)},
                   {"name", shape_name(s, profile)},
                   {"vertices", {{"mono", c.mono}, {"bi", c.bi}, {"tri", c.tri}, {"white", c.white}}},
                   {"faces", profile},
                   {"markings", classify::splitting_markings(s).size()}};
    if (e8) {
      std::vector<std::string> sets;
      for (const auto& set : classify::e8_perturbation_sets({s})) sets.push_back(set.str());
      e["sets"] = sets;
    }
    entries.push_back(e);
  }

  const auto fmt = cfg.format_or("text");
  std::ostringstream os;
  if (fmt == "json") {
    os << ordered_json{{"schema", kSchema}, {"filter", filter}, {"count", census.size()}, {"skeletons", entries}}.dump(2)
       << '\n';
  } else if (fmt == "csv") {
    os << "index,name,mono,bi,tri,white,faces,markings,code" << (e8 ? ",sets" : "") << '\n';
    for (const auto& e : entries) {
      os << e["index"].get<int>() << ',' << e["name"].get<std::string>() << ',' << e["vertices"]["mono"].get<int>()
         << ',' << e["vertices"]["bi"].get<int>() << ',' << e["vertices"]["tri"].get<int>() << ','
         << e["vertices"]["white"].get<int>() << ',' << csv_field(e["faces"].get<std::string>()) << ','
         << e["markings"].get<std::size_t>() << ',' << e["code"].get<std::string>();
      if (e8) {
        std::string sets;
        for (const auto& s : e["sets"]) sets += (sets.empty() ? "" : " ") + s.get<std::string>();
        os << ',' << sets;
      }
      os << '\n';
    }
  } else {
    for (const auto& e : entries) {
      os << e["index"].get<int>() << ". faces " << e["faces"].get<std::string>();
      if (!e["name"].get<std::string>().empty()) os << " (" << e["name"].get<std::string>() << ")";
      os << ", markings " << e["markings"].get<std::size_t>();
      if (e8) {
        os << ", sets";
        for (const auto& s : e["sets"]) os << ' ' << s.get<std::string>();
      }
      os << "\n   " << e["code"].get<std::string>() << '\n';
    }
    os << census.size() << " skeletons\n";
  }
  return os.str();
}

// classify --------------------------------------------------------------------

classify::Kind parse_kind(const std::string& s) {
  if (s == "irreducible") return classify::Kind::Irreducible;
  if (s == "reducible") return classify::Kind::Reducible;
  throw UsageError("unknown kind '" + s + "' (expected irreducible or reducible)");
}

std::string cmd_classify(const RunConfig& cfg, const std::string& kind_text) {
  const auto kind = parse_kind(kind_text);
  const auto rows = classify::classify(kind);
  const auto t = classify::totals(rows);
  ordered_json table = ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    ordered_json row{{"index", i + 1}, {"set", r.set.str()}, {"fragment", r.fragment},
                     {"n_r", r.n_r},   {"n_c", r.n_c},       {"reducible", r.reducible}};
    if (r.shape == classify::Shape::General) {
      const auto lmn = vk::lmn_of(r);
      row["l"] = lmn.l;
      row["m"] = lmn.m;
      row["n"] = lmn.n;
      row["lmn"] = lmn.str();
    } else {
      row["l"] = row["m"] = row["n"] = nullptr;
      row["lmn"] = "";
    }
    table.push_back(row);
  }
  // omitted relations (0) and rows without a reading print as empty fields
  auto num = [](const ordered_json& v) {
    return v.is_null() || v.get<int>() == 0 ? std::string() : std::to_string(v.get<int>());
  };

  const auto fmt = cfg.format_or("text");
  std::ostringstream os;
  if (fmt == "json") {
    os << ordered_json{{"schema", kSchema},
                       {"kind", kind_text},
                       {"rows", table},
                       {"totals", {{"classes", t.classes}, {"sets", t.sets}, {"n_r", t.real}, {"n_c", t.pairs}}}}
              .dump(2)
       << '\n';
  } else if (fmt == "csv") {
    os << "index,set,fragment,n_r,n_c,l,m,n,reducible\n";
    for (const auto& r : table)
      os << r["index"].get<int>() << ',' << r["set"].get<std::string>() << ',' << r["fragment"].get<std::string>()
         << ',' << r["n_r"].get<int>() << ',' << r["n_c"].get<int>() << ',' << num(r["l"]) << ',' << num(r["m"])
         << ',' << num(r["n"]) << ',' << (r["reducible"].get<bool>() ? 1 : 0) << '\n';
    os << "# totals," << t.classes << ',' << t.sets << ',' << t.real << ',' << t.pairs << '\n';
  } else {
    for (const auto& r : table) {
      os << std::setw(3) << r["index"].get<int>() << "  " << std::left << std::setw(18) << r["set"].get<std::string>()
         << std::setw(12) << r["fragment"].get<std::string>() << "(" << r["n_r"].get<int>() << ","
         << r["n_c"].get<int>() << ")  " << r["lmn"].get<std::string>() << std::right << '\n';
    }
    os << "totals: " << t.classes << " classes, " << t.sets << " sets, " << t.real << " real, " << t.pairs
       << " pairs\n";
  }
  return os.str();
}

// group -----------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

int parse_param(const std::string& s) {
  if (s == "-" || s.empty()) return 0;
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad parameter '" + s + "'");
  }
}

std::string cmd_group(const RunConfig& cfg, const std::string& selector, const std::string& central_text) {
  std::optional<fpgroup::Word> central;
  if (!central_text.empty()) central = fpgroup::Word::parse(central_text);
  ordered_json out{{"schema", kSchema}, {"selector", selector}};
  const bool explicit_params = !selector.empty() && (std::isdigit(static_cast<unsigned char>(selector[0])) ||
                                                     selector[0] == '-' || selector[0] == '(');
  if (explicit_params) {
    std::string s = selector;
    if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    const auto parts = split(s, ',');
    if (parts.size() < 3) throw UsageError("expected l,m,n[,word...]");
    vk::SexticGroupSpec spec{parse_param(parts[0]), parse_param(parts[1]), parse_param(parts[2]), {}, {}, false};
    for (std::size_t i = 3; i < parts.size(); ++i) spec.extra.push_back(fpgroup::Word::parse(parts[i]));
    const auto pres = vk::standard_group(spec);
    out["presentation"] = pres.to_text();
    out["report"] = vk::analyze(pres, central, cfg.limit).to_json();
  } else {
    ade::SingularitySet set;
    try {
      set = ade::SingularitySet::parse(selector);
    } catch (const std::exception&) {
      throw UsageError("not a singularity set or l,m,n: " + selector);
    }
    ordered_json rows = ordered_json::array();
    for (auto kind : {classify::Kind::Irreducible, classify::Kind::Reducible}) {
      for (const auto& row : classify::classify(kind)) {
        if (!(row.set == set)) continue;
        const auto rc = vk::check_row(row, cfg.limit);
        auto pres = rc.pres;
        std::optional<fpgroup::Word> c = central;
        if (rc.quotient && !c) {
          // analyze the group itself modulo the central power
          pres = pres.without(pres.relators().size() - 1);
          c = vk::alpha(2).pow(3);
        }
        rows.push_back(ordered_json{{"set", row.set.str()},
                                    {"fragment", row.fragment},
                                    {"n_r", row.n_r},
                                    {"n_c", row.n_c},
                                    {"reducible", row.reducible},
                                    {"method", rc.method},
                                    {"lmn", rc.lmn.str()},
                                    {"presentation", pres.to_text()},
                                    {"report", ordered_json(vk::analyze(pres, c, cfg.limit).to_json())}});
      }
    }
    if (rows.empty()) throw UsageError("no classified row with set " + set.str());
    out["rows"] = rows;
  }
  return out.dump(2) + '\n';
}

// perturb ---------------------------------------------------------------------

std::string cmd_perturb(const RunConfig& cfg, const std::string& base_text, const std::string& what) {
  vk::Base base;
  try {
    base = vk::parse_base(base_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  vk::GlobalResult r;
  const bool params = what.find(',') != std::string::npos;
  if (params) {
    const auto parts = split(what.front() == '(' ? what.substr(1, what.size() - 2) : what, ',');
    if (parts.size() != 3) throw UsageError("expected l,m,n");
    r = vk::global_perturbation(base, parse_param(parts[0]), parse_param(parts[1]), parse_param(parts[2]), cfg.limit);
  } else {
    vk::E8Kind kind;
    try {
      kind = vk::parse_e8_kind(what);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    r = vk::global_perturbation(base, kind, cfg.limit);
  }
  std::string verdict;
  if (r.isomorphism) verdict = "isomorphism (order preserved: " + std::to_string(r.order) + ")";
  else
    verdict = std::string(r.abelian ? "abelian" : "nonabelian") + " (order " + std::to_string(r.order) +
              ", base order " + std::to_string(r.base_order) + ")";
  if (!r.central.empty()) verdict += " modulo " + r.central;

  if (cfg.format_or("text") == "json") {
    ordered_json j{{"schema", kSchema},
                   {"base", vk::to_string(base)},
                   {"perturbation", what},
                   {"presentation", r.pres.to_text()},
                   {"central", r.central},
                   {"order", r.order},
                   {"base_order", r.base_order},
                   {"invariants", r.invariants},
                   {"abelian", r.abelian},
                   {"isomorphism", r.isomorphism},
                   {"verdict", verdict}};
    if (base == vk::Base::Ginf) j["alt_order_a1_cubed"] = r.alt_order;
    return j.dump(2) + '\n';
  }
  return verdict + '\n';
}

// verify ----------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg) {
  acceptance::Config ac;
  ac.limit = cfg.limit;
  ac.seed = cfg.seed;
  const bool as_json = cfg.format_or("text") == "json";
  bool overflow = false;
  const auto results = acceptance::run_all(ac, [&](const acceptance::Outcome& o) {
    overflow = overflow || o.overflow;
    if (as_json) return;
    std::cout << (o.pass ? "PASS " : "FAIL ") << o.id << "  " << o.title;
    if (o.overflow) std::cout << "  [coset overflow]";
    std::cout << '\n';
    if (!cfg.quiet)
      for (const auto& d : o.details) std::cout << "      " << d << '\n';
  });
  bool all = true;
  for (const auto& o : results) all = all && o.pass;
  if (as_json) {
    ordered_json j{{"schema", kSchema}, {"pass", all}, {"overflow", overflow}, {"criteria", ordered_json::array()}};
    for (const auto& o : results) j["criteria"].push_back(ordered_json(o.to_json()));
    std::cout << j.dump(2) << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane sextics with an E8 point: skeleton classification and fundamental groups"};
  app.set_version_flag("--version", SEXTIC_VERSION);
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--limit", cfg.limit, "coset enumeration limit")->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 40));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache", cfg.cache, "cache directory (SEXTIC_CACHE_DIR overrides)");
  app.add_option("--seed", cfg.seed, "seed for randomized property checks");
  app.add_flag("--quiet", cfg.quiet, "PASS/FAIL lines only");

  std::string filter, kind = "irreducible", selector, central, base, what;
  auto* sk = app.add_subcommand("skeletons", "skeleton censuses: sigma2 | e8-perturbations");
  sk->add_option("filter", filter)->required();
  auto* cl = app.add_subcommand("classify", "table of deformation classes");
  cl->add_option("kind", kind, "irreducible | reducible");
  auto* gr = app.add_subcommand("group", "fundamental group report for a set or for l,m,n[,word...]");
  gr->add_option("selector", selector)->required();
  gr->add_option("--central", central, "central word to factor out, e.g. \"a2^3\"");
  auto* pe = app.add_subcommand("perturb", "global perturbation of G6 or Ginf");
  pe->add_option("base", base)->required();
  pe->add_option("perturbation", what, "E8 perturbation (A4+A3, ...) or l,m,n")->required();
  auto* ve = app.add_subcommand("verify", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string output;
    if (*sk) output = cached(cfg, "skeletons", {filter}, [&] { return cmd_skeletons(cfg, filter); });
    else if (*cl) output = cached(cfg, "classify", {kind}, [&] { return cmd_classify(cfg, kind); });
    else if (*gr) output = cached(cfg, "group", {selector, central}, [&] { return cmd_group(cfg, selector, central); });
    else if (*pe) output = cached(cfg, "perturb", {base, what}, [&] { return cmd_perturb(cfg, base, what); });
    else if (*ve) return cmd_verify(cfg);
    std::cout << output;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fpgroup::Overflow& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
