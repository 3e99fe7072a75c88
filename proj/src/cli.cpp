#include "addcollatz/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "addcollatz/claims.hpp"
#include "addcollatz/counting.hpp"
#include "addcollatz/errors.hpp"
#include "addcollatz/generalized.hpp"
#include "addcollatz/orbits.hpp"
#include "addcollatz/serialize.hpp"
#include "addcollatz/trajectory.hpp"

using nlohmann::json;

namespace addcollatz::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

u64 parse_number(const std::string& text, const std::string& name) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError(name + " must be a non-negative integer, got '" + text + "'");
  }
  const std::string trimmed = text.substr(std::min(text.find_first_not_of('0'), text.size() - 1));
  const std::string limit = std::to_string(kMaxValue);
  if (trimmed.size() > limit.size() || (trimmed.size() == limit.size() && trimmed > limit)) {
    throw DomainError(name + " = " + text + " exceeds the supported width 2^63-1");
  }
  return std::stoull(trimmed);
}

u64 parse_positive(const std::string& text, const std::string& name) {
  const u64 v = parse_number(text, name);
  if (v == 0) throw DomainError(name + " must be >= 1");
  return v;
}

std::pair<u64, u64> parse_interval(const std::string& text, const std::string& name) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const u64 v = parse_positive(text, name);
    return {v, v};
  }
  const u64 lo = parse_positive(text.substr(0, dots), name + " lower bound");
  const u64 hi = parse_positive(text.substr(dots + 2), name + " upper bound");
  if (lo > hi) throw DomainError(name + " interval is empty: " + text);
  return {lo, hi};
}

// ---- scan -------------------------------------------------------------------

struct ScanRow {
  u64 a = 0, d = 0, delta = 0;
  bool coprime = false;
  u64 xi = 0, orbit_count = 0, burnside = 0, loop_count = 0;
  bool has_loops = false;
  bool agree = false;
};

ScanRow scan_one(u64 a, u64 d) {
  ScanRow row{a, d, gcd(a, d)};
  row.coprime = row.delta == 1;
  if (!row.coprime) return row;
  row.xi = xi_formula(a, d).total;
  row.orbit_count = permutation_cycles(a, d).orbits.size();
  row.burnside = burnside_count(a, d);
  row.agree = row.xi == row.orbit_count && row.xi == row.burnside;
  if (d >= 2) {
    row.has_loops = true;
    row.loop_count = loop_inventory(Params(a, d)).size();
    row.agree = row.agree && row.loop_count == row.xi;
  }
  return row;
}

std::vector<ScanRow> scan_grid(std::pair<u64, u64> as, std::pair<u64, u64> ds, bool coprime_only,
                               unsigned jobs) {
  std::vector<std::pair<u64, u64>> grid;
  for (u64 a = as.first; a <= as.second; ++a) {
    for (u64 d = ds.first; d <= ds.second; ++d) {
      if (!coprime_only || std::gcd(a, d) == 1) grid.emplace_back(a, d);
    }
  }
  std::vector<ScanRow> rows(grid.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1))));
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < grid.size(); i += jobs) rows[i] = scan_one(grid[i].first, grid[i].second);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void write_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  out << "a,d,delta,coprime,xi_formula,orbit_count,burnside,loop_count,agree\n";
  for (const auto& r : rows) {
    out << r.a << ',' << r.d << ',' << r.delta << ',' << (r.coprime ? "true" : "false") << ',';
    if (r.coprime) {
      out << r.xi << ',' << r.orbit_count << ',' << r.burnside << ',';
      if (r.has_loops) out << r.loop_count;
      out << ',' << (r.agree ? "true" : "false");
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

json rows_to_json(const std::vector<ScanRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = {{"a", r.a}, {"d", r.d}, {"delta", r.delta}, {"coprime", r.coprime}};
    auto opt = [&](bool present, u64 v) { return present ? json(v) : json(nullptr); };
    row["xi_formula"] = opt(r.coprime, r.xi);
    row["orbit_count"] = opt(r.coprime, r.orbit_count);
    row["burnside"] = opt(r.coprime, r.burnside);
    row["loop_count"] = opt(r.has_loops, r.loop_count);
    row["agree"] = r.coprime ? json(r.agree) : json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

// ---- table rendering ----------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_record_array(const json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

void render_records(const json& rows, std::ostream& out, const std::string& indent);

// Nested record lists are summarised as a count in the cell and expanded
// below the table, labelled by the row's first column.
std::string cell_text(const json& v) {
  if (is_record_array(v)) return "(" + std::to_string(v.size()) + ")";
  return scalar_text(v);
}

void render_records(const json& rows, std::ostream& out, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::stable_partition(columns.begin(), columns.end(), [](const std::string& c) {
    return c.size() > 3 && c.ends_with("_id");
  });
  std::vector<std::size_t> width(columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? cell_text(row[columns[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << indent;
    for (std::size_t c = 0; c + 1 < line.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c]) + 2) << line[c];
    }
    if (!line.empty()) out << line.back();
    out << '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [key, child] : rows[r].items()) {
      if (!is_record_array(child)) continue;
      out << indent << cells[r].front() << ' ' << key << ":\n";
      render_records(child, out, indent + "  ");
    }
  }
}

void render_value(const std::string& key, const json& v, std::ostream& out,
                  const std::string& indent, std::size_t key_width) {
  if (v.is_object()) {
    out << indent << key << ":\n";
    std::size_t w = 0;
    for (const auto& [k, _] : v.items()) w = std::max(w, k.size());
    for (const auto& [k, child] : v.items()) render_value(k, child, out, indent + "  ", w);
  } else if (is_record_array(v)) {
    out << indent << key << ":\n";
    render_records(v, out, indent + "  ");
  } else {
    out << indent << std::left << std::setw(static_cast<int>(key_width) + 2) << key
        << scalar_text(v) << '\n';
  }
}

// ---- commands -----------------------------------------------------------------

struct Invocation {
  std::string command;
  json parameters = json::object();
  json result = json::object();
  int exit_code = kExitOk;
};

struct Inputs {
  std::vector<std::string> pos;
  std::string steps = "10", cap, count = "10", method = "formula", format = "json";
  std::string scan_format = "csv";
  std::string claim, a_max, d_max, x_max, m_max, limit, jobs = "1";
  std::string a_range, d_range, out_path;
  bool coprime_only = false;
};

Invocation cmd_traj(const Inputs& in) {
  const Params p(parse_positive(in.pos[0], "a"), parse_positive(in.pos[1], "d"));
  const u64 x = parse_positive(in.pos[2], "x");
  const u64 steps = parse_number(in.steps, "--steps");
  Invocation inv{"traj", {{"a", p.a()}, {"d", p.d()}, {"x", x}, {"steps", steps}}};
  inv.result = {{"sequence", iterate(p, x, steps)}};
  return inv;
}

Invocation cmd_classify(const Inputs& in) {
  const Params p(parse_positive(in.pos[0], "a"), parse_positive(in.pos[1], "d"));
  const u64 x = parse_positive(in.pos[2], "x");
  const u64 cap = in.cap.empty() ? default_cap_from_env() : parse_positive(in.cap, "--cap");
  Invocation inv{"classify",
                 {{"a", p.a()}, {"d", p.d()}, {"delta", p.delta()}, {"x", x}, {"cap", cap}}};
  inv.result = json(classify(p, x, cap));
  return inv;
}

Invocation cmd_subtraj(const Inputs& in) {
  const Params p(parse_positive(in.pos[0], "a"), parse_positive(in.pos[1], "d"));
  const u64 x = parse_positive(in.pos[2], "x");
  const u64 count = parse_positive(in.count, "--count");
  Invocation inv{"subtraj", {{"a", p.a()}, {"d", p.d()}, {"x", x}, {"count", count}}};
  const auto sub = sub_trajectory(p, x, count);
  inv.result = {{"records", sub.records}, {"first_descent", first_descent(p, x)},
                {"descent_bound", descent_bound(p, x)}};
  return inv;
}

Invocation cmd_orbits(const Inputs& in) {
  const u64 a = parse_positive(in.pos[0], "a"), d = parse_positive(in.pos[1], "d");
  Invocation inv{"orbits", {{"a", a}, {"d", d}}};
  const auto part = permutation_cycles(a, d);
  inv.result = part;
  inv.result["orbit_count"] = part.orbits.size();
  return inv;
}

Invocation cmd_count(const Inputs& in) {
  const u64 a = parse_positive(in.pos[0], "a"), d = parse_positive(in.pos[1], "d");
  const std::string& method = in.method;
  Invocation inv{"count", {{"a", a}, {"d", d}, {"method", method}}};
  inv.result = json::object();
  std::vector<u64> values;
  if (method == "formula" || method == "all") {
    const auto xi = xi_formula(a, d);
    inv.result["formula"] = xi.total;
    inv.result["breakdown"] = xi.terms;
    values.push_back(xi.total);
  }
  if (method == "burnside" || method == "all") {
    values.push_back(burnside_count(a, d));
    inv.result["burnside"] = values.back();
  }
  if (method == "brute" || method == "all") {
    values.push_back(permutation_cycles(a, d).orbits.size());
    inv.result["brute"] = values.back();
  }
  if (values.empty()) throw DomainError("--method must be formula, burnside, brute or all");
  const bool agree = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
  if (method == "all") inv.result["agree"] = agree;
  if (!agree) inv.exit_code = kExitInternal;
  return inv;
}

Invocation cmd_bounds(const Inputs& in) {
  const u64 a = parse_positive(in.pos[0], "a");
  Invocation inv{"bounds", {{"a", a}}};
  const auto witness = strong_bound_witness(a);
  inv.result = {{"lower", xi_lower_bound(a)},
                {"upper", a},
                {"witness_found", witness.has_value()},
                {"witness", witness ? json(*witness) : json(nullptr)}};
  return inv;
}

Invocation cmd_pq(const Inputs& in) {
  const u64 p = parse_positive(in.pos[0], "p"), q = parse_positive(in.pos[1], "q");
  const u64 d = parse_positive(in.pos[2], "d");
  Invocation inv{"pq", {{"p", p}, {"q", q}, {"d", d}}};
  const u64 closed = xi_pq(p, q, d);
  const u64 general = xi_formula(checked_mul(p, q), d).total;
  inv.result = {{"closed_form", closed}, {"divisor_sum", general}, {"agree", closed == general}};
  if (closed != general) inv.exit_code = kExitInternal;
  return inv;
}

GenParams gen_params(const Inputs& in) {
  return {parse_positive(in.pos[0], "a"), parse_positive(in.pos[1], "d"),
          parse_positive(in.pos[2], "m")};
}

Invocation cmd_gen(const Inputs& in) {
  const GenParams gp = gen_params(in);
  const u64 x = parse_positive(in.pos[3], "x");
  const u64 cap = in.cap.empty() ? kDefaultGenCap : parse_positive(in.cap, "--cap");
  Invocation inv{"gen", {{"a", gp.a()}, {"d", gp.d()}, {"m", gp.m()}, {"x", x}, {"cap", cap}}};
  inv.result = json(gen_classify(gp, x, cap));
  return inv;
}

Invocation cmd_gen_subtraj(const Inputs& in) {
  const GenParams gp = gen_params(in);
  const u64 x = parse_positive(in.pos[3], "x");
  const u64 count = parse_positive(in.count, "--count");
  Invocation inv{"gen-subtraj",
                 {{"a", gp.a()}, {"d", gp.d()}, {"m", gp.m()}, {"x", x}, {"count", count}}};
  inv.result = {{"records", gen_sub_trajectory(gp, x, count)}};
  return inv;
}

Invocation cmd_gen_reach(const Inputs& in) {
  const GenParams gp = gen_params(in);
  const u64 x = parse_positive(in.pos[3], "x");
  Invocation inv{"gen-reach", {{"a", gp.a()}, {"d", gp.d()}, {"m", gp.m()}, {"x", x}}};
  const auto r = divisibility_reachable(gp, x);
  inv.result = {{"reachable", r.has_value()}, {"r", r ? json(*r) : json(nullptr)}};
  return inv;
}

Invocation cmd_claims(const Inputs& in) {
  ClaimRanges ranges;
  if (!in.a_max.empty()) ranges.a_hi = parse_number(in.a_max, "--a-max");
  if (!in.d_max.empty()) ranges.d_hi = parse_number(in.d_max, "--d-max");
  if (!in.x_max.empty()) ranges.x_hi = parse_number(in.x_max, "--x-max");
  if (!in.m_max.empty()) ranges.m_hi = parse_number(in.m_max, "--m-max");
  if (!in.limit.empty()) ranges.counterexample_limit = parse_number(in.limit, "--limit");
  const unsigned jobs = static_cast<unsigned>(std::min<u64>(parse_positive(in.jobs, "--jobs"), 256));

  Invocation inv{"claims",
                 {{"a_max", ranges.a_hi}, {"d_max", ranges.d_hi}, {"x_max", ranges.x_hi},
                  {"m_max", ranges.m_hi}, {"limit", ranges.counterexample_limit}, {"jobs", jobs}}};
  std::vector<ClaimReport> reports;
  if (!in.claim.empty()) {
    inv.parameters["claim"] = in.claim;
    reports.push_back(run_claim(in.claim, ranges));
  } else {
    reports = run_all(ranges, jobs);
  }
  for (const auto& r : reports) {
    const auto& reg = claim_registry();
    const auto info = std::find_if(reg.begin(), reg.end(), [&](const ClaimInfo& c) { return c.id == r.claim_id; });
    if (info->expected == Verdict::Pass && r.verdict == Verdict::Counterexamples) {
      inv.exit_code = kExitUnexpectedCounterexample;
    }
  }
  inv.result = {{"reports", reports}};
  return inv;
}

Invocation cmd_scan(const Inputs& in) {
  const auto as = parse_interval(in.a_range, "--a");
  const auto ds = parse_interval(in.d_range, "--d");
  if (in.scan_format != "csv" && in.scan_format != "json") {
    throw DomainError("scan --format must be csv or json");
  }
  const unsigned jobs = static_cast<unsigned>(std::min<u64>(parse_positive(in.jobs, "--jobs"), 256));
  const auto rows = scan_grid(as, ds, in.coprime_only, jobs);
  std::ofstream file(in.out_path);
  if (!file) throw DomainError("cannot open '" + in.out_path + "' for writing");
  if (in.scan_format == "csv") {
    write_csv(rows, file);
  } else {
    file << rows_to_json(rows).dump(2) << '\n';
  }
  u64 disagreements = 0;
  for (const auto& r : rows) disagreements += r.coprime && !r.agree;
  Invocation inv{"scan",
                 {{"a", {as.first, as.second}}, {"d", {ds.first, ds.second}},
                  {"coprime_only", in.coprime_only}, {"out", in.out_path}, {"format", in.scan_format},
                  {"jobs", jobs}}};
  inv.result = {{"rows", rows.size()}, {"disagreements", disagreements}};
  if (disagreements > 0) inv.exit_code = kExitInternal;
  return inv;
}

}  // namespace

void render_table(const json& envelope, std::ostream& out) {
  out << envelope.value("command", "") << "  (schema " << envelope.value("schema_version", "")
      << ", " << std::fixed << std::setprecision(3) << envelope.value("elapsed_ms", 0.0)
      << " ms)\n";
  std::size_t w = 0;
  for (const auto& key : {"parameters", "result"}) w = std::max(w, std::string(key).size());
  render_value("parameters", envelope.at("parameters"), out, "", w);
  render_value("result", envelope.at("result"), out, "", w);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive Collatz trajectories: classification, loop counting and claim checks",
               "addcollatz"};
  app.require_subcommand(1);
  Inputs in;
  in.pos.resize(4);  // options bind by reference; never resized afterwards

  using Handler = std::function<Invocation(const Inputs&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help,
                 std::vector<std::string> positionals, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (std::size_t i = 0; i < positionals.size(); ++i) {
      sub->add_option(positionals[i], in.pos[i], positionals[i])->required();
    }
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", in.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    return sub;
  };

  with_format(add("traj", "iterate x -> x/d if d | x else x + a", {"a", "d", "x"}, cmd_traj))
      ->add_option("--steps", in.steps, "number of steps (default 10)");
  with_format(add("classify",
                  "loop with canonical cycle, or divergence certificate (d = 1 makes every x a "
                  "fixed point; loop-count commands need d >= 2)",
                  {"a", "d", "x"}, cmd_classify))
      ->add_option("--cap", in.cap, "step cap (default 10^7 or $ADDCOLLATZ_CAP)");
  with_format(add("subtraj", "division outputs (z_i, n_i, y_i); needs gcd(a,d) = 1, d >= 2",
                  {"a", "d", "x"}, cmd_subtraj))
      ->add_option("--count", in.count, "number of divisions (default 10)");
  with_format(add("orbits", "orbits of multiplication by d on Z/aZ", {"a", "d"}, cmd_orbits));
  with_format(add("count", "number of loops for coprime (a, d)", {"a", "d"}, cmd_count))
      ->add_option("--method", in.method, "formula, burnside, brute or all")
      ->check(CLI::IsMember({"formula", "burnside", "brute", "all"}));
  with_format(add("bounds", "lower bound, upper bound and a d attaining the lower bound", {"a"},
                  cmd_bounds));
  with_format(add("pq", "two-prime closed form with divisor-sum cross-check", {"p", "q", "d"},
                  cmd_pq));
  with_format(add("gen", "classify x under x -> x/d if d | x else m x + a", {"a", "d", "m", "x"},
                  cmd_gen))
      ->add_option("--cap", in.cap, "step cap (default 10^5)");
  with_format(add("gen-subtraj", "division outputs of the generalized map with run lengths",
                  {"a", "d", "m", "x"}, cmd_gen_subtraj))
      ->add_option("--count", in.count, "number of divisions (default 10)");
  with_format(add("gen-reach", "least r making the (r+1)-th non-division iterate divisible by d",
                  {"a", "d", "m", "x"}, cmd_gen_reach));

  CLI::App* claims = with_format(add("claims", "run the claims harness", {}, cmd_claims));
  claims->add_option("--claim", in.claim, "run a single claim by id");
  claims->add_option("--a-max", in.a_max, "upper bound on a (default 12)");
  claims->add_option("--d-max", in.d_max, "upper bound on d (default 12)");
  claims->add_option("--x-max", in.x_max, "upper bound on x (default 50)");
  claims->add_option("--m-max", in.m_max, "upper bound on m (default 10)");
  claims->add_option("--limit", in.limit, "counterexamples kept per claim (default 10)");
  claims->add_option("--jobs", in.jobs, "worker threads");

  CLI::App* scan = add("scan", "sweep an (a, d) grid into a CSV or JSON file", {}, cmd_scan);
  scan->add_option("--a", in.a_range, "lo..hi")->required();
  scan->add_option("--d", in.d_range, "lo..hi")->required();
  scan->add_flag("--coprime-only", in.coprime_only, "skip pairs with gcd(a, d) > 1");
  scan->add_option("--out", in.out_path, "output path")->required();
  scan->add_option("--format", in.scan_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--jobs", in.jobs, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const auto started = std::chrono::steady_clock::now();
    try {
      Invocation inv = handler(in);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - started;
      const json envelope = {{"schema_version", kSchemaVersion},
                             {"command", inv.command},
                             {"parameters", inv.parameters},
                             {"result", inv.result},
                             {"elapsed_ms", elapsed.count()}};
      if (in.format == "table") {
        render_table(envelope, out);
      } else {
        out << envelope.dump(2) << '\n';
      }
      if (inv.exit_code == kExitInternal) err << "error: methods disagree\n";
      return inv.exit_code;
    } catch (const InvariantViolation& e) {
      err << "internal error: " << e.what() << '\n';
      return kExitInternal;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const OverflowError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const CapExceededError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return kExitInternal;
    }
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace addcollatz::cli
