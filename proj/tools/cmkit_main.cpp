#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmkit/cayley_io.hpp"
#include "cmkit/constructions.hpp"
#include "cmkit/families.hpp"
#include "cmkit/fixture_store.hpp"
#include "cmkit/latin.hpp"
#include "cmkit/mappings.hpp"
#include "cmkit/permgroup.hpp"
#include "cmkit/search.hpp"

using nlohmann::json;
using namespace cmkit;

namespace {

constexpr const char* kVersion = "1.0.0";

struct GlobalConfig {
  std::string format = "text";
  std::string fixtures_path;
  std::uint64_t seed = 1;
  bool seed_given = false;
  bool ci = false;
};

void require_seed(const GlobalConfig& cfg) {
  if (cfg.ci && !cfg.seed_given)
    throw CLI::ValidationError("--seed must be given explicitly in --ci mode");
}

std::optional<FixtureStore> load_store(const GlobalConfig& cfg) {
  std::string path = cfg.fixtures_path;
  if (path.empty()) {
    if (const char* env = std::getenv("CMKIT_FIXTURES")) path = env;
  }
  if (path.empty()) return std::nullopt;
  return FixtureStore::load_file(path);
}

// --family selectors: cyclic:N, field:Q, elem:P:D, 2group:{AC,D,Q,SD,M}:N,
// small16:I, sd32:{i2,i6}, modular16k:K, q8
FiniteGroup group_from_family(const std::string& spec) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    return parts;
  };
  auto parts = split(spec);
  const std::string& kind = parts.at(0);
  if (kind == "cyclic") return mk_cyclic(std::stoi(parts.at(1)));
  if (kind == "elem") return mk_elementary_abelian(std::stoi(parts.at(1)), std::stoi(parts.at(2)));
  if (kind == "field") {
    int q = std::stoi(parts.at(1));
    auto pp = prime_power(q);
    if (!pp) throw CLI::ValidationError("field:" + parts.at(1) + " is not a prime power");
    return pp->second == 1 ? mk_cyclic(q) : mk_elementary_abelian(pp->first, pp->second);
  }
  if (kind == "2group") {
    static const std::map<std::string, TwoGenKind> kinds = {{"AC", TwoGenKind::AC},
                                                            {"D", TwoGenKind::D},
                                                            {"Q", TwoGenKind::Q},
                                                            {"SD", TwoGenKind::SD},
                                                            {"M", TwoGenKind::M}};
    return mk_two_generated_2group(kinds.at(parts.at(1)), std::stoi(parts.at(2)));
  }
  if (kind == "small16") return mk_small16(std::stoi(parts.at(1)));
  if (kind == "sd32")
    return mk_semidirect_32(parts.at(1) == "i2" ? Sd32Variant::i2 : Sd32Variant::i6);
  if (kind == "modular16k") return mk_modular_16k(std::stoi(parts.at(1)));
  if (kind == "q8") return mk_q8();
  throw CLI::ValidationError("unknown family selector: " + spec);
}

FiniteGroup resolve_group(const std::string& family, const std::string& cayley_path) {
  if (!family.empty() && !cayley_path.empty())
    throw CLI::ValidationError("give exactly one of --family and --cayley");
  if (!family.empty()) return group_from_family(family);
  if (!cayley_path.empty()) return read_cayley_table_file(cayley_path);
  throw CLI::ValidationError("a group selector (--family or --cayley) is required");
}

void emit(const GlobalConfig& cfg, const json& payload, const std::string& text) {
  if (cfg.format == "json") {
    json out = payload;
    out["version"] = kVersion;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text;
  }
}

// ---------------------------------------------------------------------------

struct TableExpectation {
  const char* classification;
  const char* comp_order;
  const char* orth_order;
};

const std::map<int, TableExpectation>& table_expectations() {
  static const std::map<int, TableExpectation> t = {
      {2, {"trivial", "1", "1"}},
      {3, {"alt/sym", "3", "6"}},
      {4, {"alternating", "12", "12"}},
      {5, {"affine", "20", "20"}},
      {7, {"symmetric", "5040", "5040"}},
      {8, {"affine", "1344", "1344"}},
      {9, {"symmetric", "362880", "362880"}},
      {11, {"symmetric", "39916800", "39916800"}},
      {16, {"symmetric", "20922789888000", "20922789888000"}},
  };
  return t;
}

int cmd_verify_table(const GlobalConfig& cfg, const std::vector<int>& qs) {
  int failures = 0;
  json lines = json::array();
  std::ostringstream text;
  for (int q : qs) {
    auto it = table_expectations().find(q);
    if (it == table_expectations().end())
      throw CLI::ValidationError("unsupported q=" + std::to_string(q));
    auto pp = prime_power(q);
    FiniteGroup G = pp->second == 1 ? mk_cyclic(q)
                                    : mk_elementary_abelian(pp->first, pp->second);
    PGroupOptions opt;
    if (q == 16) {
      opt.mode = PMode::sampled;
      opt.budget.seed = cfg.seed;
      opt.seeds = {field_fixture(FieldFixtureId::f16).perm, singer_even_cm(4)};
    }
    auto comp = p_comp(G, opt);
    auto orth = p_orth(G, opt);
    auto ccomp = classify(comp);
    auto corth = classify(orth);
    bool ok = comp.order().to_string() == it->second.comp_order &&
              orth.order().to_string() == it->second.orth_order;
    if (q >= 3) ok = ok && comp.is_primitive() && orth.is_primitive();
    failures += !ok;
    text << (ok ? "PASS" : "FAIL") << " q=" << q << ": P_comp " << ccomp.describe()
         << " order " << comp.order().to_string() << ", P_orth " << corth.describe()
         << " order " << orth.order().to_string() << "\n";
    lines.push_back({{"q", q},
                     {"p_comp", {{"order", comp.order().to_string()},
                                 {"classification", ccomp.describe()},
                                 {"transitive", comp.is_transitive()},
                                 {"primitive", comp.is_primitive()},
                                 {"generator_count", comp.generator_count()}}},
                     {"p_orth", {{"order", orth.order().to_string()},
                                 {"classification", corth.describe()},
                                 {"transitive", orth.is_transitive()},
                                 {"primitive", orth.is_primitive()},
                                 {"generator_count", orth.generator_count()}}},
                     {"pass", ok}});
  }
  emit(cfg, {{"command", "verify-table"}, {"seed", cfg.seed}, {"results", lines}},
       text.str());
  return failures;
}

int cmd_appendix_check(const GlobalConfig& cfg, const std::string& which, int lo, int hi) {
  int failures = 0;
  json lines = json::array();
  std::ostringstream text;
  auto record = [&](const std::string& label, bool ok, const json& extra) {
    failures += !ok;
    text << (ok ? "PASS " : "FAIL ") << label << "\n";
    json j = extra;
    j["label"] = label;
    j["pass"] = ok;
    lines.push_back(j);
  };

  if (which == "A") {
    if (lo < 4) lo = 4;
    for (int n = lo; n <= hi; ++n) {
      long long k = 1ll << (n - 3);
      FiniteGroup G = mk_two_generated_2group(TwoGenKind::SD, n);
      Perm g = sd_orthomorphism(n);
      long long inv = inversion_count(g, sd_exponent_order(n));
      long long expect = 29 * k * k / 2 - 2 * k;
      bool ok = is_orthomorphism(G, g) && parity_by_cycles(g) == Parity::even &&
                inv == expect;
      record("A n=" + std::to_string(n) + " inversions=" + std::to_string(inv) +
                 " expected=" + std::to_string(expect),
             ok, {{"n", n}, {"inversions", inv}, {"expected", expect}});
    }
  } else if (which == "B") {
    if (lo < 4) lo = 4;
    for (int n = lo; n <= hi; ++n) {
      FiniteGroup G = mk_two_generated_2group(TwoGenKind::M, n);
      auto hr = modular_harmonious(n);
      auto type = cycle_type(hr.perm);
      bool ok = is_complete_mapping(G, hr.perm) && type.size() == 1 &&
                type[0] == G.order() && is_harmonious_ordering(G, hr.ordering);
      record("B n=" + std::to_string(n) + " single " + std::to_string(G.order()) + "-cycle",
             ok, {{"n", n}});
    }
  } else if (which == "C") {
    if (lo < 2) lo = 2;
    for (int k = lo + (lo % 2); k <= hi; k += 2) {
      FiniteGroup G = mk_modular_16k(k);
      Perm f = modular_even_cm_16k(k);
      long long inv = inversion_count(f, TotalOrder::by_index(G.order()));
      long long expect = 59ll * k * k + 19 * k - 6;
      bool ok = is_complete_mapping(G, f) && inv == expect &&
                parity_by_cycles(f) == Parity::even && case_table_inputs_partition(k) &&
                case_table_outputs_partition(k) && case_table_assoc_partition(k);
      record("C k=" + std::to_string(k) + " inversions=" + std::to_string(inv) +
                 " expected=" + std::to_string(expect),
             ok, {{"k", k}, {"inversions", inv}, {"expected", expect}});
    }
  } else if (which == "D") {
    for (auto [id, par] : order16_fixture_ids()) {
      bool ok = true;
      std::string cycles;
      try {
        auto fx = order16_fixture(id, par);
        cycles = to_cycle_string(fx.perm);
        ok = is_complete_mapping(fx.group, fx.perm) && parity_by_cycles(fx.perm) == par;
      } catch (const std::exception&) {
        ok = false;
      }
      record("D small16:" + std::to_string(id) + " " + to_string(par) + " " + cycles, ok,
             {{"id", id}, {"parity", to_string(par)}});
    }
  } else {
    throw CLI::ValidationError("appendix must be one of A, B, C, D");
  }
  emit(cfg, {{"command", "appendix-check"}, {"which", which}, {"results", lines}},
       text.str());
  return failures;
}

int cmd_count(const GlobalConfig& cfg, const FiniteGroup& G, bool override_guard) {
  auto census = count_by_parity(G, override_guard);
  std::ostringstream text;
  text << G.name() << ": " << (census.even + census.odd) << " complete mappings ("
       << census.even << " even, " << census.odd << " odd)\n";
  emit(cfg,
       {{"command", "count"},
        {"group", G.name()},
        {"total", census.even + census.odd},
        {"even", census.even},
        {"odd", census.odd}},
       text.str());
  return 0;
}

int cmd_search(const GlobalConfig& cfg, const FiniteGroup& G, const std::string& parity,
               bool ncycle, long long nodes, int restarts, const std::string& save_path) {
  require_seed(cfg);
  PermPredicate pred;
  if (!parity.empty() && ncycle) {
    Parity want = parity == "odd" ? Parity::odd : Parity::even;
    int n = G.order();
    pred = [want, n](const Perm& p) {
      auto t = cycle_type(p);
      return parity_by_cycles(p) == want && t.size() == 1 && t[0] == n;
    };
  } else if (!parity.empty()) {
    Parity want = parity == "odd" ? Parity::odd : Parity::even;
    pred = [want](const Perm& p) { return parity_by_cycles(p) == want; };
  } else if (ncycle) {
    int n = G.order();
    pred = [n](const Perm& p) {
      auto t = cycle_type(p);
      return t.size() == 1 && t[0] == n;
    };
  }
  SearchBudget budget;
  budget.seed = cfg.seed;
  if (nodes > 0) budget.nodes_per_restart = nodes;
  if (restarts > 0) budget.restarts = restarts;
  auto res = random_cm(G, pred, budget);

  json j = {{"group", G.name()},
            {"method", "random"},
            {"nodes", res.nodes},
            {"seed", res.seed}};
  std::ostringstream text;
  if (res.witness) {
    j["parity"] = to_string(parity_by_cycles(*res.witness));
    j["cycles"] = to_cycle_string(*res.witness);
    text << G.name() << ": found " << to_string(parity_by_cycles(*res.witness))
         << " complete mapping " << to_cycle_string(*res.witness) << " (nodes "
         << res.nodes << ", seed " << res.seed << ")\n";
    if (!save_path.empty()) {
      FixtureRecord rec{G.name(), parity_by_cycles(*res.witness),
                        to_cycle_string(*res.witness),
                        "search(seed=" + std::to_string(res.seed) + ")"};
      FixtureStore().append_to_file(save_path, rec);
      text << "appended to " << save_path << "\n";
    }
  } else {
    j["parity"] = nullptr;
    text << G.name() << ": no witness within budget (nodes " << res.nodes << ", seed "
         << res.seed << ")\n";
  }
  emit(cfg, j, text.str());
  return res.witness ? 0 : 1;
}

int cmd_property_p(const GlobalConfig& cfg, const FiniteGroup& G) {
  require_seed(cfg);
  PropertyPOptions opt;
  opt.budget.seed = cfg.seed;
  auto store = load_store(cfg);
  if (store) opt.store = &*store;
  auto rep = property_p_report(G, opt);
  std::ostringstream text;
  text << G.name() << ": property (P) " << to_string(rep.verdict) << "\n";
  for (const auto& t : rep.trace) text << "  " << t << "\n";
  if (rep.even_witness) text << "  even: " << to_cycle_string(*rep.even_witness) << "\n";
  if (rep.odd_witness) text << "  odd:  " << to_cycle_string(*rep.odd_witness) << "\n";
  json j = {{"command", "property-p"},
            {"group", G.name()},
            {"verdict", to_string(rep.verdict)},
            {"trace", rep.trace},
            {"seed", cfg.seed}};
  if (rep.even_witness) j["even"] = to_cycle_string(*rep.even_witness);
  if (rep.odd_witness) j["odd"] = to_cycle_string(*rep.odd_witness);
  emit(cfg, j, text.str());
  return rep.verdict == PropertyPVerdict::unknown ? 1 : 0;
}

int cmd_latin(const GlobalConfig& cfg, const FiniteGroup& G, const std::string& h_source,
              int count, const std::string& square_path) {
  require_seed(cfg);
  std::ostringstream text;
  json lines = json::array();
  std::ostringstream csv;
  csv << "group,h_parity,pi_r,pi_c,pi_s,k,m\n";

  auto analyze = [&](const LatinSquare& L, const std::string& h_desc, Parity h_parity) {
    FHWType t = parities(L);
    KType kt = kotlar_type(L);
    text << G.name() << " h=" << h_desc << ": FHW " << to_string(t) << ", Kotlar ("
         << kt.k << "," << kt.m << ")\n";
    csv << G.name() << "," << to_string(h_parity) << "," << static_cast<int>(t.rows)
        << "," << static_cast<int>(t.cols) << "," << static_cast<int>(t.symbols) << ","
        << kt.k << "," << kt.m << "\n";
    lines.push_back({{"h", h_desc},
                     {"h_parity", to_string(h_parity)},
                     {"fhw", to_string(t)},
                     {"kotlar", {kt.k, kt.m}}});
  };

  if (!square_path.empty()) {
    std::ifstream in(square_path);
    if (!in) throw CLI::ValidationError("cannot open " + square_path);
    LatinSquare L = read_latin_square(in);
    FHWType t = parities(L);
    KType kt = kotlar_type(L);
    text << square_path << ": FHW " << to_string(t) << ", Kotlar (" << kt.k << "," << kt.m
         << ")\n";
    lines.push_back({{"square", square_path}, {"fhw", to_string(t)}, {"kotlar", {kt.k, kt.m}}});
  } else if (h_source == "identity") {
    analyze(cayley_square(G), "identity", Parity::even);
  } else if (h_source == "cm") {
    auto store = load_store(cfg);
    std::optional<Perm> f;
    if (store) {
      for (const auto& rec : store->for_group(G.name())) {
        Perm p = parse_perm(rec.cycles, G.order());
        if (is_complete_mapping(G, p)) {
          f = p;
          break;
        }
      }
    }
    if (!f) {
      for (auto& [p, par] : builtin_fixtures(G))
        if (is_complete_mapping(G, p)) {
          f = p;
          break;
        }
    }
    if (!f) {
      SearchBudget b;
      b.seed = cfg.seed;
      f = random_cm(G, nullptr, b).witness;
    }
    if (!f) throw CLI::ValidationError("no complete mapping available for " + G.name());
    analyze(l_h_square(G, *f), "complete mapping (C_f)", parity_by_cycles(*f));
    Perm assoc = associated_orthomorphism(G, *f);
    analyze(l_h_square(G, assoc), "associated orthomorphism (B_f)",
            parity_by_cycles(assoc));
  } else {  // random h
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < count; ++i) {
      std::vector<int> img(G.order());
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      Perm h(std::move(img));
      analyze(l_h_square(G, h), "random#" + std::to_string(i), parity_by_cycles(h));
    }
  }
  if (cfg.format == "csv") {
    std::cout << csv.str();
    return 0;
  }
  emit(cfg, {{"command", "latin"},
             {"group", square_path.empty() ? G.name() : square_path},
             {"seed", cfg.seed},
             {"results", lines}},
       text.str());
  return 0;
}

int cmd_fixtures(const GlobalConfig& cfg, bool verify) {
  auto store = load_store(cfg);
  if (!store) throw CLI::ValidationError("no fixture store (--fixtures or CMKIT_FIXTURES)");
  std::ostringstream text;
  json lines = json::array();
  int failures = 0;
  for (const auto& rec : store->records()) {
    bool ok = true;
    if (verify) {
      try {
        FiniteGroup G = group_from_family(rec.group);
        Perm p = parse_perm(rec.cycles, G.order());
        ok = is_complete_mapping(G, p) && parity_by_cycles(p) == rec.parity;
      } catch (const std::exception&) {
        ok = false;
      }
      failures += !ok;
    }
    text << (verify ? (ok ? "PASS " : "FAIL ") : "") << rec.group << " "
         << to_string(rec.parity) << " " << rec.cycles << " " << rec.provenance << "\n";
    lines.push_back({{"group", rec.group},
                     {"parity", to_string(rec.parity)},
                     {"cycles", rec.cycles},
                     {"provenance", rec.provenance},
                     {"pass", ok}});
  }
  emit(cfg, {{"command", "fixtures"}, {"records", lines}}, text.str());
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complete mappings, orthomorphisms and Latin-square parities"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--fixtures", cfg.fixtures_path,
                 "fixture store path (default: $CMKIT_FIXTURES)");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "seed for randomized paths");
  app.add_flag("--ci", cfg.ci, "require explicit --seed on randomized paths");

  // verify-table
  auto* vt = app.add_subcommand("verify-table", "field compositions against the known table");
  vt->fallthrough();
  std::vector<int> qs = {2, 3, 4, 5, 7, 8, 9, 11, 16};
  vt->add_option("--q", qs, "field sizes to check")->delimiter(',');

  // appendix-check
  auto* ac = app.add_subcommand("appendix-check", "verify a construction sweep");
  ac->fallthrough();
  std::string which;
  int lo = 0, hi = 0;
  ac->add_option("which", which, "A|B|C|D")->required();
  ac->add_option("--min", lo, "low end of the parameter range");
  ac->add_option("--max", hi, "high end of the parameter range");

  // shared group selector options
  std::string family, cayley_path;
  auto add_selector = [&](CLI::App* sub) {
    sub->add_option("--family", family,
                    "cyclic:N | field:Q | elem:P:D | 2group:K:N | small16:I | sd32:V | "
                    "modular16k:K | q8");
    sub->add_option("--cayley", cayley_path, "path to a Cayley table file");
  };

  auto* cnt = app.add_subcommand("count", "exact complete-mapping census by parity");
  cnt->fallthrough();
  add_selector(cnt);
  bool override_guard = false;
  cnt->add_flag("--force", override_guard, "override the order-16 enumeration guard");

  auto* se = app.add_subcommand("search", "seeded randomized search for a complete mapping");
  se->fallthrough();
  add_selector(se);
  std::string parity;
  bool ncycle = false;
  long long nodes = 0;
  int restarts = 0;
  std::string save_path;
  se->add_option("--parity", parity, "even|odd")->check(CLI::IsMember({"even", "odd", ""}));
  se->add_flag("--ncycle", ncycle, "require a single n-cycle (harmonious)");
  se->add_option("--nodes", nodes, "node budget per restart");
  se->add_option("--restarts", restarts, "number of restarts");
  se->add_option("--save", save_path, "append found witness to this fixture store");

  auto* pp = app.add_subcommand("property-p", "complete mappings of both parities?");
  pp->fallthrough();
  add_selector(pp);

  auto* la = app.add_subcommand("latin", "parity types of L_h squares");
  la->fallthrough();
  add_selector(la);
  std::string h_source = "identity";
  int h_count = 1;
  std::string square_path;
  la->add_option("--h-source", h_source, "identity | random | cm")
      ->check(CLI::IsMember({"identity", "random", "cm"}));
  la->add_option("--count", h_count, "number of random h to draw");
  la->add_option("--square", square_path, "analyze an external Latin square file");

  auto* fx = app.add_subcommand("fixtures", "list or verify the fixture store");
  fx->fallthrough();
  bool fx_verify = false;
  fx->add_flag("--verify", fx_verify, "verify each record against its group");

  CLI11_PARSE(app, argc, argv);
  cfg.seed_given = seed_opt->count() > 0;

  try {
    if (vt->parsed()) return cmd_verify_table(cfg, qs) ? 1 : 0;
    if (ac->parsed()) {
      if (hi == 0) hi = which == "A" ? 10 : which == "B" ? 12 : which == "C" ? 18 : 0;
      return cmd_appendix_check(cfg, which, lo, hi) ? 1 : 0;
    }
    if (cnt->parsed()) return cmd_count(cfg, resolve_group(family, cayley_path), override_guard);
    if (se->parsed())
      return cmd_search(cfg, resolve_group(family, cayley_path), parity, ncycle, nodes,
                        restarts, save_path);
    if (pp->parsed()) return cmd_property_p(cfg, resolve_group(family, cayley_path));
    if (la->parsed())
      return cmd_latin(cfg, square_path.empty() ? resolve_group(family, cayley_path)
                                                : mk_cyclic(1),
                       h_source, h_count, square_path);
    if (fx->parsed()) return cmd_fixtures(cfg, fx_verify) ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
