#include "cli.hpp"

#include "cartan/cdga_io.hpp"
#include "cartan/detail/expression.hpp"
#include "cartan/errors.hpp"
#include "cartan/groebner.hpp"
#include "cartan/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <future>
#include <iomanip>
#include <ostream>

namespace cartan::cli {
namespace {

struct IdealFile {
  ContextPtr ring;
  std::vector<std::string> names;
  std::vector<Polynomial> generators;
};

// [ring]
// variables = x2, x3
// degrees = 2, 2        # optional, default 2 each
// [ideal]
// g4 = 2*x2^2 + 2*x2*x3 + 2*x3^2
IdealFile read_ideal(const std::string& path) {
  const auto doc = read_text_document(path);
  const auto* ring = doc.first("ring");
  if (ring == nullptr) throw InputError(path, 0, "", "missing [ring] section");
  const auto& vars = ring->require("variables", path);
  IdealFile out;
  auto names = split_list(vars.value);
  std::vector<unsigned> degrees(names.size(), 2);
  if (const auto* d = ring->find("degrees")) {
    const auto items = split_list(d->value);
    if (items.size() != names.size()) throw InputError(path, d->line, d->value, "one degree per variable expected");
    for (std::size_t i = 0; i < items.size(); ++i) degrees[i] = static_cast<unsigned>(parse_natural(items[i], path, d->line));
  }
  try {
    out.ring = VariableContext::make(std::move(names), std::move(degrees));
  } catch (const std::invalid_argument& e) {
    throw InputError(path, vars.line, vars.value, e.what());
  }
  for (const auto* s : doc.all("ideal")) {
    for (const auto& e : s->entries) {
      try {
        out.generators.push_back(parse_polynomial(e.value, out.ring));
      } catch (const ParseError& ex) {
        throw InputError(path, e.line, ex.token(), std::string("bad polynomial: ") + ex.what());
      }
      out.names.push_back(e.key);
    }
  }
  return out;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::filesystem::path catalog_path(const std::string& flag) {
  return flag.empty() ? default_catalog_path() : std::filesystem::path(flag);
}

std::string join(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

struct Options {
  std::string format = "text";
  std::optional<unsigned> cutoff;
  std::string checks;
  std::string catalog;
  bool timestamp = false;
  std::vector<std::string> files;
  std::string file;
  std::string order = "grevlex";
  std::string polynomial;
};

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.files.empty()) {
    err << "check: no case files given\n";
    return input_error;
  }
  RunOptions run;
  run.cutoff = o.cutoff;
  if (!o.checks.empty()) {
    run.checks.clear();
    for (const auto& item : split_list(o.checks)) run.checks.insert(parse_check_kind(item));
  }
  const Catalog catalog = load_validated_catalog(catalog_path(o.catalog));
  std::vector<CaseSpec> cases;
  for (const auto& f : o.files) cases.push_back(read_case(f, catalog));

  std::vector<std::future<ObstructionReport>> jobs;
  for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, [&c, &run] { return run_case(c, run); }));
  std::vector<ObstructionReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  if (o.format == "json") {
    out << report_json(reports);
  } else {
    if (o.timestamp) out << "# " << timestamp() << "\n";
    for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "\n" : "") << report_text(reports[i]);
  }
  const bool any_open = std::any_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.verdict == Verdict::inconclusive; });
  return any_open ? inconclusive : ok;
}

int cmd_cohomology(const Options& o, std::ostream& out, std::ostream& err) {
  const auto file = read_cdga(o.file);
  const auto cutoff = o.cutoff ? o.cutoff : file.dimension;
  if (!cutoff) {
    err << "cohomology: " << o.file << " has no dimension; pass --cutoff\n";
    return input_error;
  }
  const auto summary = cochain_summary(file.algebra, *cutoff);
  std::vector<long long> coeffs(summary.cohomology_dims.begin(), summary.cohomology_dims.end());
  const PoincareSeries p(std::move(coeffs));
  if (o.format == "json") {
    Json j{{"name", file.name}, {"cutoff", *cutoff}, {"cohomology", summary.cohomology_dims},
           {"poincare", p.to_string()}};
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "# " << file.name << ", degrees 0.." << *cutoff << "\n";
  for (std::size_t k = 0; k < summary.cohomology_dims.size(); ++k) {
    out << "deg " << k << ": " << summary.cohomology_dims[k] << "\n";
  }
  out << "P(t) = " << p.to_string() << "\n";
  return ok;
}

int cmd_groebner(const Options& o, std::ostream& out) {
  const auto ideal = read_ideal(o.file);
  const auto order = MonomialOrder::for_context(parse_order_kind(o.order), *ideal.ring);
  const auto gb = buchberger(ideal.ring, ideal.generators, order, o.cutoff);
  std::vector<std::string> lines;
  for (const auto& g : gb.generators()) lines.push_back(to_string(g));
  if (o.format == "json") {
    Json j{{"order", to_string(order.kind())}, {"basis", lines}};
    if (o.cutoff) j["truncation"] = *o.cutoff;
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "# order " << to_string(order.kind());
  if (o.cutoff) out << ", complete up to degree " << *o.cutoff;
  out << "\n";
  for (const auto& l : lines) out << l << "\n";
  return ok;
}

int cmd_member(const Options& o, std::ostream& out) {
  const auto ideal = read_ideal(o.file);
  Polynomial f(ideal.ring);
  try {
    f = parse_polynomial(o.polynomial, ideal.ring);
  } catch (const ParseError& ex) {
    throw InputError("<argument>", 0, ex.token(), std::string("bad polynomial: ") + ex.what());
  }
  const auto order = MonomialOrder::for_context(OrderKind::grevlex, *ideal.ring);
  const bool homogeneous = f.is_homogeneous() && std::all_of(ideal.generators.begin(), ideal.generators.end(),
                                                             [](const Polynomial& g) { return g.is_homogeneous(); });
  std::optional<unsigned> cutoff;
  if (homogeneous) cutoff = f.degree().value_or(0);
  const auto gb = buchberger(ideal.ring, ideal.generators, order, cutoff);
  const auto nf = normal_form(f, gb);
  if (o.format == "json") {
    out << Json{{"member", nf.is_zero()}, {"normal_form", to_string(nf)}}.dump(2) << "\n";
  } else {
    out << "member: " << (nf.is_zero() ? "true" : "false") << ", normal form: " << to_string(nf) << "\n";
  }
  return ok;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const auto load = load_catalog_file(catalog_path(o.catalog));
  auto status = [&](const std::string& record) {
    std::string s;
    for (const auto& i : load.issues) {
      if (i.record == record) s += (s.empty() ? "" : "; ") + i.message;
    }
    return s.empty() ? std::string("ok") : "invalid: " + s;
  };
  const auto& cat = load.catalog;
  if (o.format == "json") {
    Json groups = Json::array();
    for (const auto* g : cat.groups()) {
      groups.push_back({{"name", g->name}, {"dimension", g->dimension}, {"rank", g->rank},
                        {"weyl_order", g->weyl_order}, {"primitive_degrees", g->primitive_degrees},
                        {"invariant_degrees", g->invariant_degrees}, {"status", status(g->name)}});
    }
    Json forms = Json::array();
    for (const auto* r : cat.real_forms()) {
      forms.push_back({{"name", r->name}, {"compact_dual", r->compact_dual}, {"dimension", r->dimension},
                       {"d_value", r->d_value}, {"maximal_compact", r->maximal_compact}, {"status", status(r->name)}});
    }
    Json embeddings = Json::array();
    for (const auto* e : cat.embeddings()) {
      embeddings.push_back({{"name", e->name}, {"ambient", e->ambient}, {"subgroup", e->subgroup},
                            {"status", status(e->name)}});
    }
    out << Json{{"groups", groups}, {"real_forms", forms}, {"embeddings", embeddings}, {"valid", load.ok()}}.dump(2)
        << "\n";
    return load.ok() ? ok : input_error;
  }
  out << std::left;
  out << std::setw(14) << "group" << std::setw(6) << "dim" << std::setw(6) << "rank" << std::setw(8) << "|W|"
      << std::setw(14) << "primitive" << std::setw(14) << "invariant" << "status\n";
  for (const auto* g : cat.groups()) {
    out << std::setw(14) << g->name << std::setw(6) << g->dimension << std::setw(6) << g->rank << std::setw(8)
        << g->weyl_order << std::setw(14) << join(g->primitive_degrees) << std::setw(14)
        << join(g->invariant_degrees) << status(g->name) << "\n";
  }
  out << "\n" << std::setw(14) << "real form" << std::setw(10) << "dual" << std::setw(6) << "dim" << std::setw(6)
      << "d" << std::setw(14) << "max compact" << "status\n";
  for (const auto* r : cat.real_forms()) {
    out << std::setw(14) << r->name << std::setw(10) << r->compact_dual << std::setw(6) << r->dimension
        << std::setw(6) << r->d_value << std::setw(14) << r->maximal_compact << status(r->name) << "\n";
  }
  out << "\n" << std::setw(24) << "embedding" << std::setw(10) << "ambient" << std::setw(14) << "subgroup"
      << "status\n";
  for (const auto* e : cat.embeddings()) {
    out << std::setw(24) << e->name << std::setw(10) << e->ambient << std::setw(14) << e->subgroup
        << status(e->name) << "\n";
  }
  return load.ok() ? ok : input_error;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Obstructions to compact Clifford-Klein forms and the supporting algebra", "cartan"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_catalog = [&](CLI::App* sub) {
    sub->add_option("--catalog", o.catalog, "catalog file (default: $CARTAN_CATALOG or the bundled one)");
  };

  auto* check = app.add_subcommand("check", "run the obstruction checks on case files");
  check->add_option("cases", o.files, "case files");
  check->add_option("--cutoff", o.cutoff, "top degree for the Cartan-algebra cohomology");
  check->add_option("--checks", o.checks, "subset of rank,dimension,primitive,tncz");
  check->add_flag("--timestamp", o.timestamp, "timestamp header in text output");
  add_format(check);
  add_catalog(check);

  auto* cohomology = app.add_subcommand("cohomology", "cohomology dimensions of a CDGA file");
  cohomology->add_option("file", o.file, "CDGA file")->required();
  cohomology->add_option("--cutoff", o.cutoff, "top degree (default: the file's dimension)");
  add_format(cohomology);

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of an ideal file");
  groebner->add_option("file", o.file, "ideal file")->required();
  groebner->add_option("--order", o.order, "grevlex, lex or deglex");
  groebner->add_option("--cutoff", o.cutoff, "stop at this degree (homogeneous input only)");
  add_format(groebner);

  auto* member = app.add_subcommand("member", "ideal membership and normal form");
  member->add_option("file", o.file, "ideal file")->required();
  member->add_option("polynomial", o.polynomial, "polynomial in the ideal's ring")->required();
  add_format(member);

  auto* catalog = app.add_subcommand("catalog", "print the catalog with validation status");
  add_format(catalog);
  add_catalog(catalog);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (check->parsed()) return cmd_check(o, out, err);
    if (cohomology->parsed()) return cmd_cohomology(o, out, err);
    if (groebner->parsed()) return cmd_groebner(o, out);
    if (member->parsed()) return cmd_member(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace cartan::cli
