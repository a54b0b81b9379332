#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "permdeg/cache.hpp"
#include "permdeg/group_ops.hpp"
#include "permdeg/mindeg.hpp"
#include "permdeg/pipeline.hpp"
#include "permdeg/stab_chain.hpp"

namespace permdeg::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "(1 2), (3,4,5)" at the commas between cycles, not inside them.
std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  for (const auto& g : out)
    if (g.empty()) throw UsageError("empty generator in list '" + text + "'");
  return out;
}

PermGroup read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read group file " + path);
  std::optional<int> degree;
  std::vector<std::string> gens;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw UsageError("group file line lacks ':': " + line);
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "degree") {
      try {
        degree = std::stoi(value);
      } catch (const std::exception&) {
        throw UsageError("bad degree '" + value + "'");
      }
    } else if (key == "gens") {
      for (auto& g : split_generators(value)) gens.push_back(g);
    } else {
      throw UsageError("unknown key '" + key + "' in group file");
    }
  }
  if (!degree) throw UsageError("group file lacks 'degree:'");
  return parse_group(*degree, gens);
}

std::string format_multiset(const std::map<std::uint64_t, std::uint64_t>& m) {
  std::string s = "{";
  for (const auto& [k, v] : m) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s + "}";
}

std::string comp_list(const DegreeReport& r) {
  std::string s = "[";
  for (const auto& e : r.classes) {
    if (!e.comp_witness) continue;
    if (s.size() > 1) s += ", ";
    s += std::to_string(e.subgroup.class_id);
  }
  return s + "]";
}

ordered_json report_json(const DegreeReport& r) {
  ordered_json j;
  j["degree"] = r.degree;
  j["total_classes"] = r.total_classes;
  j["minemb_count"] = r.classes.size();
  ordered_json classes = ordered_json::array();
  for (const auto& e : r.classes) {
    ordered_json c;
    c["class_id"] = e.subgroup.class_id;
    c["order"] = e.subgroup.order;
    c["class_size"] = e.subgroup.class_size;
    c["generators"] = format_generators(e.subgroup.representative);
    c["fingerprint"] = e.subgroup.fingerprint.to_string();
    c["centralizer_order"] = e.centralizer_order;
    c["ind"] = e.ind;
    c["comp_witness"] = e.comp_witness ? ordered_json(format_perm(*e.comp_witness)) : ordered_json(nullptr);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  ordered_json ind = ordered_json::object();
  for (const auto& [k, v] : r.ind_multiset) ind[std::to_string(k)] = v;
  j["ind_multiset"] = std::move(ind);
  j["comp_nonempty"] = r.comp_nonempty;
  return j;
}

void print_report_table(const DegreeReport& r, std::ostream& out) {
  out << "Sym(" << r.degree << "): " << r.total_classes << " subgroup classes, " << r.classes.size()
      << " minimally embedded\n";
  out << std::setw(8) << "class_id" << std::setw(10) << "order" << std::setw(6) << "ind" << "  comp\n";
  for (const auto& e : r.classes) {
    out << std::setw(8) << e.subgroup.class_id << std::setw(10) << e.subgroup.order << std::setw(6) << e.ind << "  "
        << (e.comp_witness ? format_perm(*e.comp_witness) : "-") << '\n';
  }
  out << "Ind multiset: " << format_multiset(r.ind_multiset) << '\n';
  out << "Comp: " << comp_list(r) << '\n';
}

void print_report_summary(const DegreeReport& r, std::ostream& out) {
  out << "m=" << r.degree << ": " << r.total_classes << " classes, " << r.classes.size()
      << " minimally embedded, Ind " << format_multiset(r.ind_multiset) << ", Comp " << comp_list(r) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal faithful permutation degree surveys"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir;
  if (const char* env = std::getenv("PERMDEG_CACHE")) cache_dir = env;
  int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  double budget_seconds = 6 * 3600;
  std::size_t max_classes = 100000;
  app.add_option("--cache", cache_dir, "Cache directory (default: $PERMDEG_CACHE)");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", budget_seconds, "Time budget per enumeration (0: none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-classes", max_classes, "Class budget per enumeration")->check(CLI::PositiveNumber);

  int degree = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Subgroup classes of Sym(m)");
  enumerate->add_option("-m", degree, "Degree")->required()->check(CLI::Range(1, 9));

  bool json = false;
  auto* survey = app.add_subcommand("survey", "Minimally embedded classes of Sym(m) with Ind and Comp");
  survey->add_option("-m", degree, "Degree")->required()->check(CLI::Range(2, 9));
  survey->add_flag("--json", json, "Print the report as JSON");

  int max_degree = 0;
  bool skip9 = false;
  auto* verify = app.add_subcommand("verify", "Survey every degree from 2 up to --max");
  verify->add_option("--max", max_degree, "Largest degree")->required()->check(CLI::Range(2, 9));
  verify->add_flag("--skip-9", skip9, "Stop at degree 8 even when --max is 9");

  auto* witness = app.add_subcommand("witness", "Degree-10 certificate for G(2,2,5)");

  std::string file;
  std::string gens;
  int mu_degree = 0;
  auto* mu_cmd = app.add_subcommand("mu", "Minimal faithful degree of a group");
  auto* file_opt = mu_cmd->add_option("--file", file, "Group file with 'degree:' and 'gens:' lines");
  auto* gens_opt = mu_cmd->add_option("--gens", gens, "Comma-separated generators in cycle notation");
  auto* deg_opt = mu_cmd->add_option("--degree", mu_degree, "Degree for --gens")->check(CLI::Range(1, kMaxDegree));
  file_opt->excludes(gens_opt);
  gens_opt->needs(deg_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  SurveyOptions options;
  options.cache_dir = cache_dir;
  options.enumeration.threads = threads;
  options.enumeration.time_limit_seconds = budget_seconds;
  options.enumeration.max_classes = max_classes;

  try {
    if (*enumerate) {
      const auto classes = symmetric_classes(degree, options);
      std::uint64_t total = 0;
      out << std::setw(8) << "class_id" << std::setw(10) << "order" << std::setw(12) << "class_size"
          << "  generators\n";
      for (const auto& c : classes) {
        total += c.class_size;
        std::string g;
        for (const auto& s : format_generators(c.representative)) g += (g.empty() ? "" : ", ") + s;
        out << std::setw(8) << c.class_id << std::setw(10) << c.order << std::setw(12) << c.class_size << "  "
            << (g.empty() ? "()" : g) << '\n';
      }
      out << "Sym(" << degree << "): " << classes.size() << " classes, " << total << " subgroups\n";
      return kOk;
    }
    if (*survey) {
      const DegreeReport r = survey_degree(degree, options);
      if (json)
        out << report_json(r).dump(2) << '\n';
      else
        print_report_table(r, out);
      if (r.comp_nonempty) {
        err << "contradiction: a minimally embedded class has a complement in its centralizer\n";
        return kContradiction;
      }
      return kOk;
    }
    if (*verify) {
      const int top = skip9 ? std::min(max_degree, 8) : max_degree;
      const Verdict v = verify_up_to(top, options);
      for (const auto& r : v.reports) print_report_summary(r, out);
      out << "verdict: " << (v.holds ? "no complement up to degree " : "complement found up to degree ") << top
          << '\n';
      return v.holds ? kOk : kContradiction;
    }
    if (*witness) {
      MuOptions mo;
      mo.enumeration = options.enumeration;
      const WitnessReport w = witness_degree_10(mo);
      out << "G = G(2,2,5) on 10 points, generators " << [&] {
        std::string g;
        for (const auto& s : format_generators(w.group)) g += (g.empty() ? "" : ", ") + s;
        return g;
      }() << '\n';
      out << "|G| = " << w.group_order << '\n';
      out << "mu(G) = " << w.mu_value << " (subgroup indices";
      for (auto d : w.mu_detail.degrees) out << ' ' << d;
      out << ")\n";
      out << "|C| = " << w.centralizer_order << '\n';
      if (w.witness_element) {
        out << "z = " << format_perm(*w.witness_element) << " has order 2, centralizes G, lies outside G\n";
        out << "|<G, z>| = " << w.join_order << " = 2|G|, so <G, z> = G x C2\n";
        out << "mu(G x C2) = " << w.product_mu << '\n';
        out << w.product_mu << (w.product_mu < w.mu_value + w.mu_c2 ? " < " : " >= ") << w.mu_value + w.mu_c2
            << " = mu(G) + mu(C2)\n";
      } else {
        out << "no order-2 element of C outside G\n";
      }
      out << (w.certified ? "certified\n" : "NOT certified\n");
      return w.certified ? kOk : kContradiction;
    }
    if (*mu_cmd) {
      PermGroup g;
      if (!file.empty()) {
        g = read_spec_file(file);
      } else if (!gens.empty()) {
        g = parse_group(mu_degree, split_generators(gens));
      } else {
        throw UsageError("mu needs --file or --gens with --degree");
      }
      MuOptions mo;
      mo.enumeration = options.enumeration;
      out << mu(g, mo).value << '\n';
      return kOk;
    }
  } catch (const ResourceLimitExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const OrderCapExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace permdeg::cli
