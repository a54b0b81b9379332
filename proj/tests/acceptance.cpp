// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "permdeg/group_ops.hpp"
#include "permdeg/iso.hpp"
#include "permdeg/mindeg.hpp"
#include "permdeg/pipeline.hpp"
#include "permdeg/stab_chain.hpp"
#include "permdeg/subgroup_enum.hpp"
#include "temp_dir.hpp"

using namespace permdeg;
using Multiset = std::map<std::uint64_t, std::uint64_t>;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Collects the reasons a criterion failed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  bool ok() const { return problems_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& p : problems_) s += (s.empty() ? "" : "; ") + p;
    return s;
  }

 private:
  std::vector<std::string> problems_;
};

Multiset multiset_of(const nlohmann::json& j) {
  Multiset m;
  for (const auto& [k, v] : j.items()) m[std::stoull(k)] = v.get<std::uint64_t>();
  return m;
}

std::string show(const Multiset& m) {
  std::string s = "{";
  for (const auto& [k, v] : m) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(v);
  return s + "}";
}

void check_survey(Check& c, const std::string& cache, int m, std::size_t classes, const Multiset& ind) {
  const CliResult r = run_cli({"--cache", cache, "survey", "-m", std::to_string(m), "--json"});
  c.expect(r.code == cli::kOk, "survey -m " + std::to_string(m) + " exit " + std::to_string(r.code) + " " + r.err);
  if (r.code != cli::kOk) return;
  const auto j = nlohmann::json::parse(r.out);
  const std::size_t got = j["minemb_count"].get<std::size_t>();
  c.expect(got == classes, "m=" + std::to_string(m) + " classes " + std::to_string(got));
  const Multiset got_ind = multiset_of(j["ind_multiset"]);
  c.expect(got_ind == ind, "m=" + std::to_string(m) + " ind " + show(got_ind));
  c.expect(!j["comp_nonempty"].get<bool>(), "m=" + std::to_string(m) + " comp nonempty");
}

void criterion_1(Check& c, const std::string& cache) {
  const auto start = std::chrono::steady_clock::now();
  const CliResult r = run_cli({"--cache", cache, "verify", "--max", "7"});
  const double elapsed = seconds_since(start);
  c.expect(r.code == cli::kOk, "exit " + std::to_string(r.code));
  for (const char* line : {"m=5: 19 classes, 7 minimally embedded, Ind {1:7}, Comp []",
                           "m=6: 56 classes, 18 minimally embedded, Ind {1:18}, Comp []",
                           "m=7: 96 classes, 29 minimally embedded, Ind {1:28, 2:1}, Comp []"})
    c.expect(r.out.find(line) != std::string::npos, std::string("missing '") + line + "'");
  for (int m = 2; m <= 4; ++m)
    c.expect(r.out.find("m=" + std::to_string(m) + ": ") != std::string::npos, "no report for m=" + std::to_string(m));
  c.expect(r.out.find("verdict: no complement up to degree 7") != std::string::npos, "verdict line");
  c.expect(elapsed < 300, "took " + std::to_string(elapsed) + " s");
}

void criterion_4(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const CliResult r = run_cli({"witness"});
  const double elapsed = seconds_since(start);
  c.expect(r.code == cli::kOk, "exit " + std::to_string(r.code));
  for (const char* s : {"|G| = 1920\n", "mu(G) = 10 ", "has order 2, centralizes G, lies outside G",
                        "10 < 12 = mu(G) + mu(C2)", "\ncertified\n"})
    c.expect(r.out.find(s) != std::string::npos, std::string("missing '") + s + "'");
  // independent of the report: recheck the claims directly
  const WitnessReport w = witness_degree_10();
  c.expect(group_order(make_gppq(2, 5)) == 1920, "order");
  if (w.witness_element) {
    const Permutation& z = *w.witness_element;
    bool central = true;
    for (const auto& s : w.group.generators()) central = central && compose(s, z) == compose(z, s);
    c.expect(central && element_order(z) == 2 && !StabChain(w.group).contains(z), "witness element");
  } else {
    c.expect(false, "no witness element");
  }
  c.expect(w.mu_value == 10 && w.product_mu == 10 && w.mu_c2 == 2, "mu values");
  c.expect(elapsed < 60, "took " + std::to_string(elapsed) + " s");
}

void criterion_5(Check& c) {
  // class and subgroup counts against brute force
  const std::size_t classes[] = {4, 11, 19, 56};
  const std::uint64_t totals[] = {6, 30, 156, 1455};
  for (int m = 3; m <= 6; ++m) {
    const auto found = subgroup_classes(symmetric_group(m));
    std::uint64_t total = 0;
    for (const auto& k : found) total += k.class_size;
    const std::uint64_t brute = m <= 5 ? oracle::all_subgroups(oracle::closure(symmetric_group(m))).size()
                                       : brute_force_subgroups(symmetric_group(m)).size();
    c.expect(found.size() == classes[m - 3], "S" + std::to_string(m) + " classes " + std::to_string(found.size()));
    c.expect(total == totals[m - 3] && total == brute, "S" + std::to_string(m) + " subgroups " +
                                                           std::to_string(total) + " brute " + std::to_string(brute));
  }

  // centralizers
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(1, 6);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const PermGroup g = oracle::random_subgroup(rng, deg(rng), 2);
    if (oracle::closure(centralizer_in_sym(g)) != oracle::centralizer(g)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " centralizer mismatches");

  // mu against the exhaustive oracle
  const auto s6 = subgroup_classes(symmetric_group(6));
  bad = 0;
  for (const auto& k : s6)
    if (k.order <= 100 && mu(k.representative).value != oracle::mu(k.representative)) ++bad;
  c.expect(bad == 0, std::to_string(bad) + " mu mismatches");

  // the two minimal-embedding tests
  bad = 0;
  for (int m = 5; m <= 6; ++m) {
    MinEmbFilter filter(m, subgroup_classes(symmetric_group(m - 1)));
    for (const auto& k : subgroup_classes(symmetric_group(m)))
      if (filter.minimally_embedded(k.representative) !=
          is_minimally_embedded(k.representative, MinEmbMethod::direct_mu))
        ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " minimal-embedding disagreements");

  // isomorphism against bijection search
  std::vector<PermGroup> small;
  for (int m = 4; m <= 6; ++m)
    for (const auto& k : subgroup_classes(symmetric_group(m)))
      if (k.order <= 24) small.push_back(k.representative);
  bad = 0;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j)
      if (group_order(small[i]) == group_order(small[j]) &&
          is_isomorphic(small[i], small[j]) != oracle::isomorphic(small[i], small[j]))
        ++bad;
  c.expect(bad == 0, std::to_string(bad) + " isomorphism mismatches");
}

void criterion_6(Check& c, const std::string& cache) {
  SurveyOptions options;
  options.cache_dir = cache;
  std::size_t seen = 0;
  for (int m = 2; m <= 9; ++m)
    for (const auto& e : survey_degree(m, options).classes) {
      ++seen;
      c.expect(e.ind == 1 || e.ind % 2 == 0, "m=" + std::to_string(m) + " ind " + std::to_string(e.ind));
    }
  c.expect(seen > 0, "no classes surveyed");
}

void criterion_7(Check& c) {
  TempDir dir;
  const CliResult a = run_cli({"--cache", dir.str(), "survey", "-m", "6", "--json"});
  const CliResult b = run_cli({"--cache", dir.str(), "survey", "-m", "6", "--json"});
  c.expect(a.code == cli::kOk && b.code == cli::kOk, "exit codes");
  c.expect(!a.out.empty() && a.out == b.out, "JSON differs between runs");
}

}  // namespace

int main() {
  TempDir cache;
  bool all = true;
  auto report = [&](int id, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    all = all && c.ok();
    std::ostringstream line;
    line << (c.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed
         << std::setprecision(1) << elapsed << " s)";
    if (!c.ok()) line << " -- " << c.summary();
    std::cout << line.str() << std::endl;
  };

  report(1, "verify --max 7 gives 7/18/29 classes, one ind 2 at m=7, comp empty",
         [&](Check& c) { criterion_1(c, cache.str()); });
  report(2, "survey -m 8 gives 107 classes, ind {1:102, 2:4, 4:1}, comp empty",
         [&](Check& c) { check_survey(c, cache.str(), 8, 107, {{1, 102}, {2, 4}, {4, 1}}); });
  report(3, "survey -m 9 gives 129 classes, ind {1:126, 2:3}, comp empty",
         [&](Check& c) { check_survey(c, cache.str(), 9, 129, {{1, 126}, {2, 3}}); });
  report(4, "witness certifies |G(2,2,5)| = 1920, mu = 10, 10 < 12", criterion_4);
  report(5, "brute-force oracle suites", criterion_5);
  report(6, "every ind for m <= 9 is 1 or even", [&](Check& c) { criterion_6(c, cache.str()); });
  report(7, "survey -m 6 JSON is byte-identical across runs", criterion_7);
  return all ? 0 : 1;
}
