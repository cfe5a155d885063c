#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sprouts/api_server.hpp"
#include "sprouts/bs2.hpp"
#include "sprouts/formulas.hpp"
#include "sprouts/notation.hpp"
#include "sprouts/planar.hpp"
#include "sprouts/session.hpp"
#include "sprouts/table_cache.hpp"

namespace sprouts::cli {

using json = nlohmann::json;

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count ? count : 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) fn(k);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::string join_set(const formulas::MoveCountSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string describe_move(const json& m) {
  const std::string type = m["type"];
  if (type == "forced") return "forced opening x1-y1";
  if (type == "reply") {
    return "reply x" + std::to_string(m["i"].get<int>()) + "-y" + std::to_string(m["j"].get<int>());
  }
  std::ostringstream os;
  os << "component " << m["component"].get<int>() << ", join spots " << m["i"].get<int>()
     << " and " << m["j"].get<int>() << ", split (" << m["a"].get<int>() << ","
     << m["b"].get<int>() << ")";
  return os.str();
}

struct CacheScope {
  std::string path;
  GrundyTable& table;

  CacheScope(std::string p, GrundyTable& t) : path(std::move(p)), table(t) {
    if (!path.empty()) load_table(path, table);
  }
  void save() const {
    if (!path.empty()) save_table(path, table);
  }
};

int cmd_nimber(const std::string& state, bool as_json, const std::string& cache,
               std::ostream& out, std::ostream& err) {
  GrundyTable table;
  CacheScope scope(cache, table);
  json a;
  try {
    a = api::analyze(state, table);
  } catch (const api::ApiError& e) {
    err << e.what() << '\n';
    const json b = e.body();
    if (b.contains("column")) {
      err << "  " << state << '\n'
          << "  " << std::string(b["column"].get<std::size_t>() - 1, ' ') << "^\n";
    }
    return kUsage;
  }
  scope.save();
  if (as_json) {
    out << a.dump() << '\n';
    return kOk;
  }
  const Nimber n = a["nimber"];
  out << "state:       " << a["state"].get<std::string>() << '\n';
  out << "nimber:      " << n << '\n';
  out << "winner:      " << (n != 0 ? "first player wins" : "second player wins") << '\n';
  out << "terminal:    " << (a["terminal"].get<bool>() ? "yes" : "no") << '\n';
  out << "play length: " << a["play_length"]["min"] << ".." << a["play_length"]["max"] << '\n';
  if (a.contains("after_forced_move_nimber")) {
    out << "after forced opening: nimber " << a["after_forced_move_nimber"] << '\n';
  }
  if (n != 0 && !a["best_move"].is_null()) {
    out << "best move:   " << describe_move(a["best_move"]) << '\n';
  }
  return kOk;
}

int cmd_verify_closed_form(std::int64_t max_q, unsigned threads, bool as_json,
                           const std::string& cache, std::ostream& out, std::ostream& err) {
  GrundyTable table;
  CacheScope scope(cache, table);
  const SweepReport r = verify_closed_form(max_q, threads, table);
  scope.save();
  err << "swept " << r.cells.size() << " cells in " << std::fixed << std::setprecision(3)
      << r.seconds << " s\n";
  if (as_json) {
    json cells = json::array();
    for (const auto& c : r.cells) {
      cells.push_back({{"p", c.p}, {"q", c.q}, {"formula", c.formula}, {"oracle", c.oracle},
                       {"match", c.match}});
    }
    out << json{{"max_q", r.max_q}, {"pass", r.pass}, {"cells", cells}}.dump() << '\n';
  } else {
    out << "   p    q  formula  search  match\n";
    for (const auto& c : r.cells) {
      out << std::setw(4) << c.p << ' ' << std::setw(4) << c.q << ' ' << std::setw(8)
          << c.formula << ' ' << std::setw(7) << c.oracle << "  " << (c.match ? "yes" : "NO")
          << '\n';
    }
    out << (r.pass ? "PASS" : "FAIL") << ": " << r.cells.size() << " cells, max_q = " << r.max_q
        << '\n';
  }
  return r.pass ? kOk : kMismatch;
}

int cmd_verify_bs2(std::int64_t max_q, bool as_json, const std::string& cache, std::ostream& out) {
  GrundyTable table;
  CacheScope scope(cache, table);
  json rows = json::array();
  bool pass = true;
  if (!as_json) out << "   p    q  nimber  after-open  min  max  length-check\n";
  for (std::int64_t q = 3; q <= max_q; ++q) {
    for (std::int64_t p = 3; p <= q; ++p) {
      const Nimber root = bs2_nimber(p, q, table);
      const Nimber inner = bs2_after_forced_move_nimber(p, q, table);
      const PlayLength len = bs2_play_length_bounds(p, q, table);
      const bool covered = q <= 2 * p;
      const bool len_ok = !covered || (len.min == 6 && len.max == p + q);
      const bool ok = root == 0 && inner >= 1 && len_ok;
      pass = pass && ok;
      rows.push_back({{"p", p}, {"q", q}, {"nimber", root}, {"after_forced_move_nimber", inner},
                      {"min_length", len.min}, {"max_length", len.max}, {"ok", ok}});
      if (!as_json) {
        out << std::setw(4) << p << ' ' << std::setw(4) << q << ' ' << std::setw(7) << root
            << ' ' << std::setw(11) << inner << ' ' << std::setw(4) << len.min << ' '
            << std::setw(4) << len.max << "  "
            << (covered ? (len_ok ? "(6,p+q)" : "MISMATCH") : "n/a") << '\n';
      }
    }
  }
  scope.save();
  if (as_json) {
    out << json{{"max_q", max_q}, {"pass", pass}, {"cells", rows}}.dump() << '\n';
  } else {
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kMismatch;
}

int cmd_playout(std::optional<std::int64_t> n, const std::vector<std::int64_t>& raw_tips,
                std::int64_t trials, std::uint64_t seed, bool as_json, bool records,
                std::ostream& out, std::ostream& err) {
  if (trials < 1) {
    err << "--trials must be at least 1\n";
    return kUsage;
  }
  if (n && *n != static_cast<std::int64_t>(raw_tips.size())) {
    err << "-n " << *n << " does not match " << raw_tips.size() << " tip counts\n";
    return kUsage;
  }
  std::vector<std::uint32_t> tips;
  for (auto t : raw_tips) {
    if (t < 0) {
      err << "tip counts must be non-negative\n";
      return kUsage;
    }
    tips.push_back(static_cast<std::uint32_t>(t));
  }

  std::map<std::uint64_t, std::int64_t> histogram;
  std::int64_t euler_ok = 0;
  for (std::int64_t k = 0; k < trials; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    const auto r = planar::random_playout(tips, s);
    const bool ok = planar::euler_check(r.final_state, tips, r.move_count);
    ++histogram[r.move_count];
    euler_ok += ok ? 1 : 0;
    if (records) {
      out << json{{"seed", s},
                  {"tips", tips},
                  {"move_count", r.move_count},
                  {"region_count", r.final_state.regions.size()},
                  {"euler_ok", ok}}
                 .dump()
          << '\n';
    }
  }

  std::int64_t total = 0;
  for (auto t : tips) total += t;
  const std::int64_t predicted = static_cast<std::int64_t>(tips.size()) - 2 + total;
  const bool constant = histogram.size() == 1;
  const bool matches = constant && static_cast<std::int64_t>(histogram.begin()->first) == predicted;
  const bool pass = matches && euler_ok == trials;
  const double rate = static_cast<double>(euler_ok) / static_cast<double>(trials);

  if (as_json) {
    json hist = json::object();
    for (const auto& [count, freq] : histogram) hist[std::to_string(count)] = freq;
    out << json{{"tips", tips}, {"trials", trials}, {"seed", seed}, {"predicted", predicted},
                {"histogram", hist}, {"euler_pass_rate", rate}, {"pass", pass}}
               .dump()
        << '\n';
  } else if (!records) {
    out << "trials:     " << trials << " (seeds " << seed << ".." << seed + trials - 1 << ")\n";
    out << "predicted:  " << predicted << " moves\n";
    out << "histogram:\n";
    for (const auto& [count, freq] : histogram) out << "  " << count << " moves: " << freq << '\n';
    out << "euler pass: " << euler_ok << "/" << trials << '\n';
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kMismatch;
}

struct FormulaArgs {
  std::int64_t n = 0;
  std::vector<std::int64_t> tips;
  std::int64_t k = 0;
  std::int64_t g = 4;
  std::vector<std::int64_t> cs4;
  bool orientable = false, nonorientable = false, bounds = false, winner = false,
       forest = false, girth_tree = false;
};

int cmd_formulas(const FormulaArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
  formulas::GameSpec spec{a.n, a.tips, a.k, a.g};
  if (spec.n == 0) spec.n = static_cast<std::int64_t>(spec.tips.size());
  const bool all = !(a.orientable || a.nonorientable || a.bounds || a.winner || a.forest ||
                     a.girth_tree || !a.cs4.empty());
  json result = json::object();
  int code = kOk;

  auto attempt = [&](bool wanted, const char* key, const char* label, auto&& fn) {
    if (!wanted && !all) return;
    try {
      auto [value, text] = fn();
      result[key] = value;
      if (!as_json) out << std::left << std::setw(22) << label << text << '\n';
    } catch (const std::invalid_argument& e) {
      result[key] = {{"error", e.what()}};
      if (!as_json) out << std::left << std::setw(22) << label << "n/a: " << e.what() << '\n';
      if (wanted) code = kUsage;
    }
  };

  attempt(a.forest, "forest_moves", "forest moves:", [&] {
    const auto v = formulas::forest_moves(spec);
    return std::pair{json(v), std::to_string(v)};
  });
  attempt(a.orientable, "orientable_moves", "orientable moves:", [&] {
    const auto v = formulas::orientable_moves(spec);
    return std::pair{json(v), join_set(v)};
  });
  attempt(a.nonorientable, "nonorientable_moves", "non-orientable moves:", [&] {
    const auto v = formulas::nonorientable_moves(spec);
    return std::pair{json(v), join_set(v)};
  });
  attempt(a.winner, "first_player_wins", "planar winner:", [&] {
    const bool v = formulas::first_player_wins_planar(spec);
    return std::pair{json(v), std::string(v ? "first player" : "second player")};
  });
  attempt(a.girth_tree, "girth_forces_tree", "girth forces tree:", [&] {
    const bool v = formulas::girth_forces_tree(spec);
    return std::pair{json(v), std::string(v ? "yes" : "no")};
  });
  attempt(a.bounds, "bs_p4_move_bounds", "triangle-free bounds:", [&] {
    const auto [lo, hi] = formulas::bs_p4_move_bounds(spec);
    return std::pair{json::array({lo, hi}),
                     "(" + std::to_string(lo) + "," + std::to_string(hi) + ")"};
  });
  if (!a.cs4.empty()) {
    attempt(true, "cs4_nimber", "CS[p,1,q,1] nimber:", [&] {
      if (a.cs4.size() != 2) throw std::invalid_argument("--cs4 expects p,q");
      const auto v = formulas::cs4_nimber_formula(a.cs4[0], a.cs4[1]);
      return std::pair{json(v), std::to_string(v)};
    });
  }
  if (as_json) out << result.dump() << '\n';
  if (code != kOk) err << "some requested formulas do not apply to this game\n";
  return code;
}

}  // namespace

SweepReport verify_closed_form(std::int64_t max_q, unsigned threads, GrundyTable& table) {
  const auto t0 = std::chrono::steady_clock::now();
  SweepReport report;
  report.max_q = max_q;
  for (std::int64_t q = 0; q <= max_q; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) report.cells.push_back({p, q, 0, 0, false});
  }
  parallel_for(report.cells.size(), threads, [&](std::size_t k) {
    SweepCell& c = report.cells[k];
    c.formula = formulas::cs4_nimber_formula(c.p, c.q);
    c.oracle = grundy(CircularState{static_cast<TipCount>(c.p), 1, static_cast<TipCount>(c.q), 1},
                      table);
    c.match = c.formula == c.oracle;
  });
  report.pass = std::all_of(report.cells.begin(), report.cells.end(),
                            [](const SweepCell& c) { return c.match; });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sprague-Grundy engine for Brussels and circular sprouts"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string cache;

  auto* nim = app.add_subcommand("nimber", "Nimber, winner and best move of a position");
  std::string state;
  nim->add_option("state", state, "CS[..], CS[..]+CS[..] or BS2[p,q]")->required();
  nim->add_flag("--json", as_json, "Machine-readable output");
  nim->add_option("--cache", cache, "Memo table file to load and update");

  auto* verify = app.add_subcommand("verify-closed-form",
                                    "Compare search against the closed form for CS[p,1,q,1]");
  std::int64_t max_q = 14;
  unsigned threads = 1;
  verify->add_option("--max-q", max_q, "Largest q swept (p <= q)")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "Machine-readable output");
  verify->add_option("--cache", cache, "Memo table file to load and update");

  auto* vbs2 = app.add_subcommand("verify-bs2",
                                  "Check BS2[p,q] nimber 0 and play lengths for 3 <= p <= q");
  std::int64_t bs2_max = 12;
  vbs2->add_option("--max-q", bs2_max, "Largest q swept")->check(CLI::Range(3, 255));
  vbs2->add_flag("--json", as_json, "Machine-readable output");
  vbs2->add_option("--cache", cache, "Memo table file to load and update");

  auto* play = app.add_subcommand("playout", "Random planar playouts on the sphere");
  std::optional<std::int64_t> n;
  std::vector<std::int64_t> tips;
  std::int64_t trials = 1000;
  std::uint64_t seed = 1;
  bool records = false;
  play->add_option("-n", n, "Number of spots (defaults to the tip list length)");
  play->add_option("-t,--tips", tips, "Tip counts, comma separated")->delimiter(',')->required();
  play->add_option("--trials", trials, "Number of playouts");
  play->add_option("--seed", seed, "Seed of the first playout; trial k uses seed + k");
  play->add_flag("--json", as_json, "Machine-readable summary");
  play->add_flag("--records", records, "One JSON line per playout");

  auto* form = app.add_subcommand("formulas", "Closed-form move counts and winners");
  FormulaArgs fa;
  form->add_option("-n", fa.n, "Number of spots (defaults to the tip list length)");
  form->add_option("-t,--tips", fa.tips, "Tip counts, comma separated")->delimiter(',');
  form->add_option("-k,--genus", fa.k, "Genus of the surface");
  form->add_option("-g,--girth", fa.g, "Girth bound");
  form->add_option("--cs4", fa.cs4, "p,q for the CS[p,1,q,1] closed form")->delimiter(',');
  form->add_flag("--orientable", fa.orientable, "Move counts on an orientable surface");
  form->add_flag("--nonorientable", fa.nonorientable, "Move counts on a non-orientable surface");
  form->add_flag("--bounds-p4", fa.bounds, "Triangle-free planar move bounds");
  form->add_flag("--winner", fa.winner, "Planar winner by parity");
  form->add_flag("--forest", fa.forest, "Move count when the drawing must stay a forest");
  form->add_flag("--girth-tree", fa.girth_tree, "Whether the girth bound forces a forest");
  form->add_flag("--json", as_json, "Machine-readable output");

  auto* serve = app.add_subcommand("serve", "Run the HTTP play service");
  int port = 8080;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "Port to listen on")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--cache", cache, "Memo table file to preload");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nim) return cmd_nimber(state, as_json, cache, out, err);
    if (*verify) return cmd_verify_closed_form(max_q, threads, as_json, cache, out, err);
    if (*vbs2) return cmd_verify_bs2(bs2_max, as_json, cache, out);
    if (*play) return cmd_playout(n, tips, trials, seed, as_json, records, out, err);
    if (*form) return cmd_formulas(fa, as_json, out, err);
    if (*serve) {
      GrundyTable table;
      if (!cache.empty()) load_table(cache, table);
      err << "listening on http://" << host << ":" << port << '\n';
      return api::serve(host, port, table) ? kOk : kMismatch;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sprouts::cli
