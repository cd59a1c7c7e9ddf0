#include "hookforest/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace hookforest {

const std::vector<std::string>& VerifySweepConfig::all_checks() {
  static const std::vector<std::string> names{"cpf",  "hookp", "hookp2", "ccf",       "propcf",
                                              "cfs",  "psi",   "codes",  "postnikov", "lascoux"};
  return names;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.ok(); });
}

json VerifyReport::to_json() const {
  json out = json::object();
  json cfg = json::object();
  cfg["max_total_vertices"] = config.max_total_vertices;
  cfg["max_degree"] = config.max_degree;
  cfg["k_values"] = config.k_values;
  cfg["max_n"] = config.max_n;
  cfg["checks"] = config.checks.empty() ? VerifySweepConfig::all_checks() : config.checks;
  out["config"] = std::move(cfg);
  json checks_json = json::array();
  for (const CheckOutcome& check : checks) {
    json c = json::object();
    c["name"] = check.name;
    c["cells"] = check.cells;
    c["failures"] = check.failures;
    if (!check.values.is_null()) c["values"] = check.values;
    checks_json.push_back(std::move(c));
  }
  out["checks"] = std::move(checks_json);
  out["ok"] = ok();
  return out;
}

std::vector<DegreeSequence> degree_sequence_universe(long long max_total_vertices,
                                                     long long max_degree) {
  std::vector<DegreeSequence> out;
  std::vector<long long> counts(static_cast<std::size_t>(max_degree) + 1, 0);

  auto rec = [&](auto&& self, std::size_t pos, long long left) -> void {
    if (pos == counts.size()) {
      if (DegreeSequence::counts_valid(counts)) out.push_back(DegreeSequence::from_counts(counts));
      return;
    }
    for (long long c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
    counts[pos] = 0;
  };
  rec(rec, 0, max_total_vertices);
  return out;
}

namespace {

long long worker_cap() {
  if (const char* env = std::getenv("HOOKFOREST_THREADS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<long long>(hw);
}

// Index-striped parallel loop with deterministic result slots.
void for_cells(long long count, const std::function<void(long long)>& fn) {
  long long workers = std::min<long long>(worker_cap(), count);
  if (workers <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (long long w = 0; w < workers; ++w) {
    threads.emplace_back([&, w]() {
      try {
        for (long long i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

json failure_entry(const DegreeSequence& r, const char* what, const std::string& lhs,
                   const std::string& rhs) {
  json f = json::object();
  f["r"] = degree_sequence_to_json(r);
  f["what"] = what;
  f["lhs"] = lhs;
  f["rhs"] = rhs;
  return f;
}

struct SweepContext {
  const VerifySweepConfig& config;
  std::vector<DegreeSequence> universe;
};

CheckOutcome check_cpf(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "cpf";
  out.cells = static_cast<long long>(ctx.universe.size());
  std::vector<json> cell_failures(ctx.universe.size(), json::array());
  for_cells(out.cells, [&](long long i) {
    const DegreeSequence& r = ctx.universe[static_cast<std::size_t>(i)];
    Int enumerated = make_int(static_cast<long long>(enumerate_forests(r).size()));
    Int counted = count_forests(r);
    if (enumerated != counted)
      cell_failures[static_cast<std::size_t>(i)].push_back(failure_entry(
          r, "forest count", int_to_string(enumerated), int_to_string(counted)));
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

CheckOutcome check_hookp(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "hookp";
  out.cells = static_cast<long long>(ctx.universe.size());
  std::vector<json> cell_failures(ctx.universe.size(), json::array());
  for_cells(out.cells, [&](long long i) {
    const DegreeSequence& r = ctx.universe[static_cast<std::size_t>(i)];
    HookReport report = verify_hookp(r);
    if (!report.equal)
      cell_failures[static_cast<std::size_t>(i)].push_back(
          failure_entry(r, "hook polynomial", polynomial_to_json(report.brute).dump(),
                        polynomial_to_json(report.closed).dump()));
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

CheckOutcome check_hookp2(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "hookp2";
  std::vector<const DegreeSequence*> cells;
  for (const DegreeSequence& r : ctx.universe)
    if (r.internal_count() >= 1) cells.push_back(&r);
  out.cells = static_cast<long long>(cells.size());
  std::vector<json> cell_failures(cells.size(), json::array());
  for_cells(out.cells, [&](long long i) {
    const DegreeSequence& r = *cells[static_cast<std::size_t>(i)];
    json& failures = cell_failures[static_cast<std::size_t>(i)];
    Polynomial brute2 = brute_hookp2(r);
    Polynomial closed2 = closed_hookp2(r);
    if (brute2 != closed2)
      failures.push_back(failure_entry(r, "companion hook polynomial",
                                       polynomial_to_json(brute2).dump(),
                                       polynomial_to_json(closed2).dump()));
    // substitution bridge back to the primary form
    Polynomial brute1 = brute_hookp(r);
    const long long n = r.internal_count();
    for (const Rat& t : {Rat(0), Rat(1), Rat(2), make_rat(1, 2)}) {
      Rat lhs = brute2.eval(t);
      Rat factor = rat_pow(Rat(-1) * (Rat(1) + t), n);
      Rat rhs = factor * brute1.eval(Rat(-1) / (Rat(1) + t));
      if (lhs != rhs)
        failures.push_back(failure_entry(r, ("transformation at t=" + rat_to_string(t)).c_str(),
                                         rat_to_string(lhs), rat_to_string(rhs)));
    }
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

struct ColoredCell {
  const DegreeSequence* r;
  long long k;
};

std::vector<ColoredCell> colored_cells(const SweepContext& ctx, bool require_internal) {
  std::vector<ColoredCell> cells;
  for (const DegreeSequence& r : ctx.universe) {
    if (require_internal && r.internal_count() < 1) continue;
    for (long long k : ctx.config.k_values) cells.push_back({&r, k});
  }
  return cells;
}

json colored_failure(const DegreeSequence& r, long long k, const char* what,
                     const std::string& lhs, const std::string& rhs) {
  json f = failure_entry(r, what, lhs, rhs);
  f["k"] = k;
  return f;
}

CheckOutcome check_ccf(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "ccf";
  std::vector<ColoredCell> cells = colored_cells(ctx, false);
  out.cells = static_cast<long long>(cells.size());
  std::vector<json> cell_failures(cells.size(), json::array());
  for_cells(out.cells, [&](long long i) {
    const auto& [r, k] = cells[static_cast<std::size_t>(i)];
    json& failures = cell_failures[static_cast<std::size_t>(i)];
    Rat lhs = lemma_ccf_lhs(*r, k);
    if (!rat_is_integer(lhs)) {
      failures.push_back(colored_failure(*r, k, "ccf lhs not integral", rat_to_string(lhs), "-"));
      return;
    }
    Int exhaustive = count_colored(*r, k);
    if (lhs.get_num() != exhaustive)
      failures.push_back(colored_failure(*r, k, "ccf count", rat_to_string(lhs),
                                         int_to_string(exhaustive)));
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

CheckOutcome check_propcf(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "propcf";
  std::vector<ColoredCell> cells = colored_cells(ctx, true);
  out.cells = static_cast<long long>(cells.size());
  std::vector<json> cell_failures(cells.size(), json::array());
  for_cells(out.cells, [&](long long i) {
    const auto& [r, k] = cells[static_cast<std::size_t>(i)];
    json& failures = cell_failures[static_cast<std::size_t>(i)];
    Int expected = prop_cf_count(*r, k);
    Int exhaustive = count_colored(*r, k);
    if (exhaustive != expected)
      failures.push_back(colored_failure(*r, k, "colored forest count",
                                         int_to_string(exhaustive), int_to_string(expected)));
    Rat lhs = lemma_ccf_lhs(*r, k);
    if (!rat_is_integer(lhs) || lhs.get_num() != expected)
      failures.push_back(colored_failure(*r, k, "ccf lhs vs product form", rat_to_string(lhs),
                                         int_to_string(expected)));
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

CheckOutcome check_cfs(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "cfs";
  std::vector<ColoredCell> cells = colored_cells(ctx, true);
  out.cells = static_cast<long long>(cells.size());
  std::vector<json> cell_failures(cells.size(), json::array());
  for_cells(out.cells, [&](long long i) {
    const auto& [r, k] = cells[static_cast<std::size_t>(i)];
    json& failures = cell_failures[static_cast<std::size_t>(i)];
    Int expected = thm_cfs_count(*r, k);
    Int ell = make_int(r->num_trees());
    for (const PartitionS& s : partitions(*r)) {
      Int per_partition = count_colored(*r, k, s);
      if (per_partition != expected) {
        json f = colored_failure(*r, k, "per-partition count", int_to_string(per_partition),
                                 int_to_string(expected));
        f["S"] = partition_to_json(s);
        failures.push_back(std::move(f));
      }
      Int first_tree = count_colored(*r, k, s, /*first_tree_min=*/true);
      if (per_partition != ell * first_tree) {
        json f = colored_failure(*r, k, "tree-count factorization", int_to_string(per_partition),
                                 int_to_string(ell * first_tree));
        f["S"] = partition_to_json(s);
        failures.push_back(std::move(f));
      }
    }
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

CheckOutcome check_psi(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "psi";
  std::vector<ColoredCell> cells = colored_cells(ctx, true);
  out.cells = static_cast<long long>(cells.size());
  std::vector<json> cell_failures(cells.size(), json::array());
  std::vector<std::map<std::string, long long>> cell_cases(cells.size());
  for_cells(out.cells, [&](long long i) {
    const auto& [r, k] = cells[static_cast<std::size_t>(i)];
    json& failures = cell_failures[static_cast<std::size_t>(i)];
    auto& case_tally = cell_cases[static_cast<std::size_t>(i)];
    std::vector<PartitionS> parts = partitions(*r);

    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        if (a == b || !adjacent(parts[a], parts[b])) continue;
        std::vector<ColoredLabelledForest> domain = enumerate_colored(*r, k, parts[a]);
        std::set<std::string> target;
        for (const ColoredLabelledForest& f : enumerate_colored(*r, k, parts[b]))
          target.insert(colored_key(f));
        std::set<std::string> seen;
        bool cell_ok = true;
        for (const ColoredLabelledForest& f : domain) {
          PsiResult mapped = psi(f, parts[a], parts[b]);
          ++case_tally[psi_case_name(mapped.applied)];
          std::string key = colored_key(mapped.forest);
          if (!target.count(key) || !seen.insert(key).second) {
            json fail = colored_failure(*r, k,
                                        target.count(key) ? "psi output collision"
                                                          : "psi output outside target set",
                                        colored_key(f), key);
            fail["S1"] = partition_to_json(parts[a]);
            fail["S2"] = partition_to_json(parts[b]);
            failures.push_back(std::move(fail));
            cell_ok = false;
          }
        }
        if (cell_ok && seen.size() != target.size()) {
          json fail = colored_failure(*r, k, "psi image size", std::to_string(seen.size()),
                                      std::to_string(target.size()));
          fail["S1"] = partition_to_json(parts[a]);
          fail["S2"] = partition_to_json(parts[b]);
          failures.push_back(std::move(fail));
        }
      }
    }
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  std::map<std::string, long long> tally;
  for (const auto& part : cell_cases)
    for (const auto& [name, count] : part) tally[name] += count;
  json values = json::object();
  for (const auto& [name, count] : tally) values[name] = count;
  out.values = std::move(values);
  return out;
}

CheckOutcome check_codes(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "codes";
  std::vector<ColoredCell> cells = colored_cells(ctx, true);
  out.cells = static_cast<long long>(cells.size());
  std::vector<json> cell_failures(cells.size(), json::array());
  for_cells(out.cells, [&](long long i) {
    const auto& [r, k] = cells[static_cast<std::size_t>(i)];
    json& failures = cell_failures[static_cast<std::size_t>(i)];
    const long long ell = r->num_trees();
    const long long n = r->internal_count();
    const long long r0 = r->leaf_count();
    Int box_expected;
    {
      Int thm = thm_cfs_count(*r, k);
      Int quot, rem;
      Int den = make_int(ell);
      mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), thm.get_mpz_t(), den.get_mpz_t());
      if (rem != 0) throw error("cfs count not divisible by the tree count (internal error)");
      box_expected = quot;
    }

    for (const PartitionS& s : partitions(*r)) {
      std::vector<ColoredLabelledForest> members =
          enumerate_colored(*r, k, s, /*first_tree_min=*/true);
      // decode(encode(F)) == F
      for (const ColoredLabelledForest& f : members) {
        CodeSequence codes = encode(f, s);
        ColoredLabelledForest back = decode(s, k, ell, codes);
        if (colored_key(back) != colored_key(f)) {
          json fail = colored_failure(*r, k, "decode(encode(F)) != F", colored_key(f),
                                      colored_key(back));
          fail["S"] = partition_to_json(s);
          failures.push_back(std::move(fail));
        }
      }
      // encode(decode(codes)) == codes over the whole box
      long long box_size = 0;
      std::set<std::string> outputs;
      std::vector<int> g_digit(static_cast<std::size_t>(n), 1);
      std::vector<int> f_digit(static_cast<std::size_t>(n - 1), 1);
      bool done = false;
      while (!done) {
        CodeSequence codes;
        codes.k = k;
        for (int label = 1; label <= n; ++label)
          codes.g[label] = g_digit[static_cast<std::size_t>(label - 1)];
        for (int j = 1; j <= n - 1; ++j) codes.f[j] = f_digit[static_cast<std::size_t>(j - 1)];
        ++box_size;
        ColoredLabelledForest forest = decode(s, k, ell, codes);
        outputs.insert(colored_key(forest));
        CodeSequence back = encode(forest, s);
        if (!(back == codes)) {
          json fail = colored_failure(*r, k, "encode(decode(codes)) != codes",
                                      codes_to_json(codes).dump(), codes_to_json(back).dump());
          fail["S"] = partition_to_json(s);
          failures.push_back(std::move(fail));
        }
        // advance the (g, f) odometer
        done = true;
        for (int label = 1; label <= n && done; ++label) {
          auto& digit = g_digit[static_cast<std::size_t>(label - 1)];
          if (digit < s.degree_of_label(label)) {
            ++digit;
            done = false;
          } else {
            digit = 1;
          }
        }
        for (int j = 1; j <= n - 1 && done; ++j) {
          auto& digit = f_digit[static_cast<std::size_t>(j - 1)];
          if (digit < r0 + j * (1 + k)) {
            ++digit;
            done = false;
          } else {
            digit = 1;
          }
        }
      }
      if (make_int(box_size) != box_expected ||
          make_int(static_cast<long long>(members.size())) != box_expected ||
          outputs.size() != members.size()) {
        json fail = colored_failure(*r, k, "code box size",
                                    std::to_string(box_size) + "/" +
                                        std::to_string(outputs.size()) + "/" +
                                        std::to_string(members.size()),
                                    int_to_string(box_expected));
        fail["S"] = partition_to_json(s);
        failures.push_back(std::move(fail));
      }
    }
  });
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

CheckOutcome check_postnikov(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "postnikov";
  out.cells = ctx.config.max_n;
  std::vector<json> cell_values(static_cast<std::size_t>(ctx.config.max_n));
  std::vector<json> cell_failures(static_cast<std::size_t>(ctx.config.max_n), json::array());
  for_cells(out.cells, [&](long long i) {
    long long n = i + 1;
    PostnikovResult result = postnikov_check(n);
    json v = json::object();
    v["n"] = n;
    v["lhs"] = rat_to_string(result.lhs);
    v["rhs"] = int_to_string(result.rhs);
    v["equal"] = result.equal;
    cell_values[static_cast<std::size_t>(i)] = std::move(v);
    if (!result.equal) {
      json f = json::object();
      f["n"] = n;
      f["what"] = "binary-tree hook identity";
      f["lhs"] = rat_to_string(result.lhs);
      f["rhs"] = int_to_string(result.rhs);
      cell_failures[static_cast<std::size_t>(i)].push_back(std::move(f));
    }
  });
  out.values = json::array();
  for (json& v : cell_values) out.values.push_back(std::move(v));
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

CheckOutcome check_lascoux(const SweepContext& ctx) {
  CheckOutcome out;
  out.name = "lascoux";
  out.cells = ctx.config.max_n;
  std::vector<json> cell_values(static_cast<std::size_t>(ctx.config.max_n));
  std::vector<json> cell_failures(static_cast<std::size_t>(ctx.config.max_n), json::array());
  for_cells(out.cells, [&](long long i) {
    long long n = i + 1;
    LascouxResult result = lascoux_check(n);
    json v = json::object();
    v["n"] = n;
    v["lhs"] = polynomial_to_json(result.lhs);
    v["rhs"] = polynomial_to_json(result.rhs);
    v["equal"] = result.equal;
    cell_values[static_cast<std::size_t>(i)] = std::move(v);
    if (!result.equal) {
      json f = json::object();
      f["n"] = n;
      f["what"] = "binary-tree hook polynomial identity";
      f["lhs"] = polynomial_to_json(result.lhs);
      f["rhs"] = polynomial_to_json(result.rhs);
      cell_failures[static_cast<std::size_t>(i)].push_back(std::move(f));
    }
  });
  out.values = json::array();
  for (json& v : cell_values) out.values.push_back(std::move(v));
  for (const json& f : cell_failures)
    for (const json& item : f) out.failures.push_back(item);
  return out;
}

}  // namespace

VerifyReport run_verify(const VerifySweepConfig& config) {
  std::vector<std::string> selected = config.checks.empty() ? VerifySweepConfig::all_checks()
                                                            : config.checks;
  if (selected.empty()) throw error("verify: no checks selected");
  for (const std::string& name : selected) {
    const auto& all = VerifySweepConfig::all_checks();
    if (std::find(all.begin(), all.end(), name) == all.end())
      throw error("verify: unknown check \"" + name + "\"");
  }
  if (config.max_total_vertices < 1 || config.max_degree < 1 || config.max_n < 1)
    throw error("verify: bounds must be positive");
  for (long long k : config.k_values)
    if (k < 0) throw error("verify: k values must be nonnegative");

  SweepContext ctx{config, degree_sequence_universe(config.max_total_vertices, config.max_degree)};

  VerifyReport report;
  report.config = config;
  report.config.checks = selected;
  for (const std::string& name : selected) {
    if (name == "cpf") report.checks.push_back(check_cpf(ctx));
    else if (name == "hookp") report.checks.push_back(check_hookp(ctx));
    else if (name == "hookp2") report.checks.push_back(check_hookp2(ctx));
    else if (name == "ccf") report.checks.push_back(check_ccf(ctx));
    else if (name == "propcf") report.checks.push_back(check_propcf(ctx));
    else if (name == "cfs") report.checks.push_back(check_cfs(ctx));
    else if (name == "psi") report.checks.push_back(check_psi(ctx));
    else if (name == "codes") report.checks.push_back(check_codes(ctx));
    else if (name == "postnikov") report.checks.push_back(check_postnikov(ctx));
    else if (name == "lascoux") report.checks.push_back(check_lascoux(ctx));
  }
  return report;
}

}  // namespace hookforest
