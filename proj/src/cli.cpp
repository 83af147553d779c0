#include "knotslice/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <sstream>
#include <thread>

#include "knotslice/errors.hpp"
#include "knotslice/version.hpp"

namespace knotslice::cli {

namespace {

constexpr int kErrorExit = 3;

struct CommonArgs {
  std::string knots_path;
  std::string knot_spec;
  std::string manifold_spec;
  std::string class_spec;
  std::string format = "table";
  unsigned max_bits = kDefaultMaxBits;
};

void add_format_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--max-bits", args.max_bits,
                  "Precision cap (bits) for certified signatures")
      ->envname("SLICE_ENGINE_MAX_BITS")
      ->check(CLI::Range(2u, 1u << 24))
      ->capture_default_str();
}

void add_query_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--knots", args.knots_path, "Knot table (JSON array of records)");
  cmd->add_option("--knot", args.knot_spec, "Knot name from the table, or inline JSON matrix")
      ->required();
  cmd->add_option("--manifold", args.manifold_spec,
                  "Manifold descriptor: preset name or JSON")
      ->required();
  cmd->add_option("--class", args.class_spec, "Class vector, comma-separated integers")
      ->required();
  add_format_options(cmd, args);
}

std::vector<KnotRecord> load_table_if_given(const std::string& path) {
  if (path.empty()) return {};
  return load_knot_table(path);
}

void emit(const ordered_json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_table(report);
}

SliceQuery build_query(const CommonArgs& args) {
  const auto table = load_table_if_given(args.knots_path);
  return SliceQuery(parse_manifold(args.manifold_spec), parse_class(args.class_spec),
                    resolve_knot(args.knot_spec, table));
}

QueryEcho echo_of(const CommonArgs& args) {
  return QueryEcho{args.manifold_spec, args.class_spec, args.knot_spec};
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Yes: return 0;
    case Verdict::No: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return kErrorExit;
}

// Compact one-line payload for a batch pair.
ordered_json batch_pair_json(const std::string& knot_name, const std::string& class_spec,
                             const IntersectionForm& manifold, const SeifertMatrix& knot,
                             unsigned max_bits) {
  const SliceQuery query(manifold, parse_class(class_spec), knot);
  const QueryAnalysis analysis = analyze(query, EngineOptions{max_bits});
  ordered_json j;
  j["knot"] = knot_name;
  j["class"] = class_spec;
  j["d"] = analysis.d;
  j["simple"] = to_string(decide_simple_slice(analysis).answer);
  j["stable"] = to_string(decide_stably_slice(analysis).answer);
  j["sn"] = stabilizing_json(stabilizing_number(analysis));
  j["genus_bound"] = genus_bound_json(genus_lower_bound(analysis));
  j["h1_order"] = int_to_json(analysis.h1_order);
  j["max_signature_bound"] = int_to_json(analysis.max_abs_sigma_j);
  j["precision_bits_used"] = analysis.bits_used;
  return j;
}

std::string batch_line_table(const ordered_json& j) {
  std::ostringstream out;
  if (j.contains("error")) {
    out << j["knot"].get<std::string>() << "  error: " << j["error"].get<std::string>();
    return out.str();
  }
  out << j["knot"].get<std::string>() << "  class=" << j["class"].get<std::string>()
      << "  d=" << j["d"] << "  simple=" << j["simple"].get<std::string>()
      << "  stable=" << j["stable"].get<std::string>() << "  sn=";
  if (!j["sn"]["finite"].get<bool>())
    out << "infinite";
  else if (j["sn"]["value"].is_null())
    out << ">=" << j["sn"]["lower_bound"].dump();
  else
    out << j["sn"]["value"].dump();
  out << "  h1=" << j["h1_order"].dump();
  return out.str();
}

}  // namespace

SeifertMatrix resolve_knot(const std::string& spec, const std::vector<KnotRecord>& table) {
  if (!spec.empty() && spec.front() == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("inline matrix is not valid JSON: ") + e.what());
    }
    return SeifertMatrix(parse_int_matrix(doc));
  }
  for (const auto& rec : table) {
    if (rec.name != spec) continue;
    if (!rec.matrix.has_value())
      throw ParseError("knot '" + spec + "' is invalid in the table: " + rec.error);
    return *rec.matrix;
  }
  throw ParseError("knot '" + spec + "' not found (use --knots FILE or an inline matrix)");
}

std::vector<std::string> run_batch(const std::vector<KnotRecord>& knots,
                                   const IntersectionForm& manifold,
                                   const std::vector<std::string>& class_specs,
                                   unsigned max_bits, unsigned jobs, bool as_table) {
  struct Unit {
    const KnotRecord* knot;
    const std::string* class_spec;  // null for a knot-level error line
  };
  std::vector<Unit> units;
  for (const auto& rec : knots) {
    if (!rec.matrix.has_value()) {
      units.push_back({&rec, nullptr});
      continue;
    }
    for (const auto& spec : class_specs) units.push_back({&rec, &spec});
  }

  std::vector<std::string> lines(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= units.size()) return;
      const Unit& u = units[i];
      ordered_json j;
      if (u.class_spec == nullptr) {
        j["knot"] = u.knot->name;
        j["error"] = u.knot->error;
      } else {
        try {
          j = batch_pair_json(u.knot->name, *u.class_spec, manifold, *u.knot->matrix, max_bits);
        } catch (const std::exception& e) {
          j = ordered_json();
          j["knot"] = u.knot->name;
          j["class"] = *u.class_spec;
          j["error"] = e.what();
        }
      }
      lines[i] = as_table ? batch_line_table(j) : j.dump();
    }
  };

  unsigned n_workers = jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, 8);
  if (units.size() < n_workers) n_workers = units.empty() ? 1 : static_cast<unsigned>(units.size());
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return lines;
}

int run(int argc, const char* const* argv) {
  CLI::App app{std::string(kEngineName) +
               ": knot invariants and slice-disc decisions in 4-manifolds with S^3 boundary"};
  app.set_version_flag("--version", std::string(kEngineName) + " " + kEngineVersion);
  app.require_subcommand(1);

  CommonArgs inv_args;
  long cover_degree = 1;
  auto* inv = app.add_subcommand("invariants",
                                 "Alexander polynomial, determinant, Arf, branched-cover "
                                 "homology and the signature table at d-th roots of unity");
  inv->add_option("--knots", inv_args.knots_path, "Knot table (JSON array of records)");
  inv->add_option("--knot", inv_args.knot_spec, "Knot name or inline JSON matrix")->required();
  inv->add_option("-d,--cover-degree", cover_degree, "Branched cover degree")
      ->required()
      ->check(CLI::Range(1l, kMaxCoverDegree));
  add_format_options(inv, inv_args);

  CommonArgs simple_args;
  auto* simple = app.add_subcommand("decide-simple",
                                    "Decide whether the knot bounds a simple disc in the "
                                    "manifold representing the class");
  add_query_options(simple, simple_args);

  CommonArgs stable_args;
  long genus = 0;
  auto* stable = app.add_subcommand("decide-stable",
                                    "Decide stable sliceness (or stable genus-g "
                                    "representability with --genus)");
  add_query_options(stable, stable_args);
  stable->add_option("--genus", genus, "Surface genus (0 = disc)")->check(CLI::Range(0l, 1l << 40));

  CommonArgs sn_args;
  auto* sn = app.add_subcommand("sn", "Stabilizing number for the class");
  add_query_options(sn, sn_args);

  CommonArgs genus_args;
  auto* genus_bound_cmd = app.add_subcommand("genus-bound",
                                             "Lower bound for the genus of a simple surface "
                                             "in the class");
  add_query_options(genus_bound_cmd, genus_args);

  CommonArgs batch_args;
  std::vector<std::string> batch_classes;
  unsigned batch_jobs = 0;
  auto* batch = app.add_subcommand("batch", "Sweep a knot file against a list of classes");
  batch->add_option("--knots", batch_args.knots_path, "Knot table (JSON array of records)")
      ->required();
  batch->add_option("--manifold", batch_args.manifold_spec, "Manifold descriptor")->required();
  batch->add_option("--class", batch_classes, "Class vector; repeat for several classes")
      ->required();
  batch->add_option("--jobs", batch_jobs, "Worker threads (0 = auto)");
  add_format_options(batch, batch_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (inv->parsed()) {
      const auto table = load_table_if_given(inv_args.knots_path);
      const SeifertMatrix v = resolve_knot(inv_args.knot_spec, table);
      emit(invariants_report(inv_args.knot_spec, v, cover_degree, inv_args.max_bits),
           inv_args.format);
      return 0;
    }
    if (simple->parsed()) {
      const SliceQuery query = build_query(simple_args);
      const QueryAnalysis analysis = analyze(query, EngineOptions{simple_args.max_bits});
      const SliceVerdict verdict = decide_simple_slice(analysis);
      emit(query_report("decide-simple", echo_of(simple_args), query, analysis,
                        verdict_json(verdict)),
           simple_args.format);
      return verdict_exit(verdict.answer);
    }
    if (stable->parsed()) {
      const SliceQuery query = build_query(stable_args);
      const QueryAnalysis analysis = analyze(query, EngineOptions{stable_args.max_bits});
      const SliceVerdict verdict = stable_genus_representable(analysis, genus);
      ordered_json result = verdict_json(verdict);
      result["genus"] = genus;
      emit(query_report("decide-stable", echo_of(stable_args), query, analysis,
                        std::move(result)),
           stable_args.format);
      return verdict_exit(verdict.answer);
    }
    if (sn->parsed()) {
      const SliceQuery query = build_query(sn_args);
      const QueryAnalysis analysis = analyze(query, EngineOptions{sn_args.max_bits});
      emit(query_report("sn", echo_of(sn_args), query, analysis,
                        stabilizing_json(stabilizing_number(analysis))),
           sn_args.format);
      return 0;
    }
    if (genus_bound_cmd->parsed()) {
      const SliceQuery query = build_query(genus_args);
      const QueryAnalysis analysis = analyze(query, EngineOptions{genus_args.max_bits});
      emit(query_report("genus-bound", echo_of(genus_args), query, analysis,
                        genus_bound_json(genus_lower_bound(analysis))),
           genus_args.format);
      return 0;
    }
    if (batch->parsed()) {
      const auto table = load_knot_table(batch_args.knots_path);
      const IntersectionForm manifold = parse_manifold(batch_args.manifold_spec);
      const auto lines = run_batch(table, manifold, batch_classes, batch_args.max_bits,
                                   batch_jobs, batch_args.format == "table");
      for (const auto& line : lines) std::cout << line << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErrorExit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kErrorExit + 1;
  }
  return kErrorExit;
}

}  // namespace knotslice::cli
