#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "hocolim/category.hpp"
#include "hocolim/constructions.hpp"
#include "hocolim/dsl.hpp"
#include "hocolim/homology.hpp"
#include "hocolim/mobius.hpp"
#include "hocolim/oracles.hpp"
#include "hocolim/random.hpp"
#include "hocolim/simplicial_map.hpp"

namespace hocolim::cli {

namespace {

using Json = nlohmann::ordered_json;

enum Exit { ok = 0, parse_error = 2, semantic_error = 3, disagreement = 4, usage_error = 5 };

struct Failure {
  int code;
  std::string message;
};

struct Output {
  Json result = Json::object();
  std::string text;
  int code = Exit::ok;
};

struct Options {
  std::string format = "text";
  std::string file;
  std::string sset;
  std::string sset_b;
  std::string weights;
  std::string category;
  std::string diagram;
  std::string map_f;
  std::string map_g;
  std::string classes;
  std::string partition;
  std::string output;
  std::string name;
  std::string kind;
  bool peeling = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> count;
};

std::string slurp(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return slurp(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{usage_error, "cannot read '" + path + "'"};
  return slurp(f);
}

dsl::Document load(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  try {
    return dsl::parse(text);
  } catch (const dsl::ParseError& e) {
    throw Failure{parse_error, path + ":" + e.what()};
  } catch (const dsl::SemanticError& e) {
    std::string message;
    for (const dsl::Diagnostic& d : e.diagnostics) {
      if (!message.empty()) message += "\n";
      message += path + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
    }
    throw Failure{semantic_error, message};
  }
}

std::string str(const Integer& v) { return v.str(); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }

template <typename Range>
Json strings(const Range& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(str(v));
  return a;
}

template <typename Range>
std::string spaced(const Range& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + str(v);
  return out;
}

std::string violations_text(const ValidationReport& r, const SimplicialSet& K) {
  std::string out;
  for (const Violation& v : r.violations) {
    if (!out.empty()) out += "\n";
    out += "  " + (K.contains(v.generator) ? K.name(v.generator) : std::string("?")) + ": " + v.message;
  }
  return out;
}

std::shared_ptr<const SimplicialSet> valid_sset(const dsl::Document& doc, const std::string& name) {
  auto K = doc.sset(name);
  if (!K) throw Failure{usage_error, "no sset named '" + name + "'"};
  const ValidationReport r = validate(*K);
  if (!r.ok()) throw Failure{semantic_error, "sset '" + name + "' is not valid:\n" + violations_text(r, *K)};
  return K;
}

const dsl::MapDecl& valid_map(const dsl::Document& doc, const std::string& name) {
  const dsl::MapDecl* m = doc.map(name);
  if (!m) throw Failure{usage_error, "no map named '" + name + "'"};
  valid_sset(doc, m->source);
  valid_sset(doc, m->target);
  const ValidationReport r = validate(m->map);
  if (!r.ok()) {
    throw Failure{semantic_error, "map '" + name + "' does not commute with faces:\n" +
                                      violations_text(r, m->map.source())};
  }
  return *m;
}

Json counts_json(const SimplicialSet& K) { return strings(counts_by_dimension(K)); }

// Writes `document` to -o when given, otherwise returns it as the text output.
void emit_document(Output& o, const Options& opt, const std::string& name, const std::string& document) {
  o.result["name"] = name;
  if (opt.output.empty()) {
    o.text = document;
    o.result["document"] = document;
    return;
  }
  std::ofstream f(opt.output, std::ios::binary);
  if (!f || !(f << document)) throw Failure{usage_error, "cannot write '" + opt.output + "'"};
  o.text = "wrote " + name + " to " + opt.output + "\n";
  o.result["output"] = opt.output;
}

void emit_sset(Output& o, const Options& opt, const std::string& name, const SimplicialSet& K) {
  o.result["counts"] = counts_json(K);
  o.result["euler"] = str(euler_char_combinatorial(K));
  emit_document(o, opt, name, dsl::serialize_sset(name, K));
}

std::string chosen_name(const Options& opt, const std::string& fallback) {
  const std::string name = opt.name.empty() ? fallback : opt.name;
  if (!is_valid_name(name)) throw Failure{usage_error, "invalid output name '" + name + "'"};
  return name;
}

// -------------------------------------------------------------------------

Output cmd_validate(const Options& opt, std::istream& in) {
  const dsl::Document doc = load(opt.file, in);
  Output o;
  Json decls = Json::array();
  bool all_ok = true;
  for (const dsl::Declaration& d : doc.declarations()) {
    Json entry;
    entry["name"] = d.name;
    std::string kind;
    std::string problems;
    std::string note;
    if (const auto* K = std::get_if<std::shared_ptr<const SimplicialSet>>(&d.entity)) {
      kind = "sset";
      problems = violations_text(validate(**K), **K);
    } else if (const auto* m = std::get_if<dsl::MapDecl>(&d.entity)) {
      kind = "map";
      problems = violations_text(validate(m->map), m->map.source());
    } else if (const auto* C = std::get_if<FiniteCategory>(&d.entity)) {
      kind = "category";
      if (auto w = C->nerve_finiteness_witness()) note = "nerve not finite: " + *w;
    } else if (std::holds_alternative<Poset>(d.entity)) {
      kind = "poset";
    } else if (std::holds_alternative<dsl::DiagramDecl>(d.entity)) {
      kind = "diagram";
    } else {
      kind = "weights";
    }
    const bool ok = problems.empty();
    all_ok = all_ok && ok;
    entry["kind"] = kind;
    entry["ok"] = ok;
    if (!note.empty()) entry["note"] = note;
    o.text += kind + " " + d.name + ": " + (ok ? "ok" : "invalid");
    if (!note.empty()) o.text += " (" + note + ")";
    o.text += "\n";
    if (!ok) o.text += problems + "\n";
    decls.push_back(entry);
  }
  o.result["declarations"] = decls;
  o.result["ok"] = all_ok;
  if (!all_ok) o.code = semantic_error;
  return o;
}

Output cmd_euler(const Options& opt, std::istream& in) {
  const dsl::Document doc = load(opt.file, in);
  const auto K = valid_sset(doc, opt.sset);
  const BettiProfile betti = betti_numbers(*K);
  const std::int64_t by_count = euler_char_combinatorial(*K);
  const std::int64_t by_homology = betti.euler();
  Output o;
  o.result["counts"] = counts_json(*K);
  o.result["euler_count"] = str(by_count);
  o.result["euler_homology"] = str(by_homology);
  o.result["betti"] = strings(betti.betti);
  o.text = "counts: " + spaced(counts_by_dimension(*K)) + "\nchi (count): " + str(by_count) +
           "\nchi (homology): " + str(by_homology) + "\nbetti: " + spaced(betti.betti) + "\n";
  return o;
}

ClassPartition read_partition(const std::string& path, const SimplicialSet& K, std::istream& in) {
  std::istringstream text(read_input(path, in));
  ClassPartition P;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(text, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::size_t> block;
    std::string word;
    while (words >> word) {
      const auto id = K.find(word);
      if (!id || id->dim != 0) {
        throw Failure{semantic_error, path + ":" + std::to_string(line_no) + ": '" + word + "' is not a vertex"};
      }
      block.push_back(id->index);
    }
    if (!block.empty()) P.blocks.push_back(std::move(block));
  }
  try {
    check_partition(K, P);
  } catch (const PartitionMismatch& e) {
    throw Failure{semantic_error, path + ": " + e.what()};
  }
  return P;
}

Output cmd_mobius(const Options& opt, std::istream& in) {
  const dsl::Document doc = load(opt.file, in);
  const auto K = valid_sset(doc, opt.sset);
  Output o;
  if (!opt.classes.empty() || !opt.partition.empty()) {
    const ClassPartition P = opt.classes.empty() ? read_partition(opt.partition, *K, in) : component_partition(*K);
    const auto values = class_mobius(*K, P);
    Json classes = Json::array();
    std::int64_t total = 0;
    for (std::size_t b = 0; b < P.blocks.size(); ++b) {
      std::vector<std::string> names;
      for (std::size_t v : P.blocks[b]) names.push_back(K->name({0, v}));
      Json entry;
      entry["vertices"] = names;
      entry["mu"] = str(values[b]);
      classes.push_back(entry);
      std::string joined;
      for (const auto& n : names) joined += (joined.empty() ? "" : " ") + n;
      o.text += "{" + joined + "}: " + str(values[b]) + "\n";
      total += values[b];
    }
    o.result["classes"] = classes;
    o.result["total"] = str(total);
    o.text += "total: " + str(total) + "\n";
    return o;
  }
  const MobiusTable mu = opt.peeling ? mobius_by_peeling(*K) : mobius_function(*K);
  Json table = Json::object();
  for (std::size_t v = 0; v < mu.size(); ++v) {
    table[mu.name(v)] = str(mu[v]);
    o.text += mu.name(v) + ": " + str(mu[v]) + "\n";
  }
  o.result["mu"] = table;
  o.result["total"] = str(mu.total());
  o.text += "total: " + str(mu.total()) + "\n";
  return o;
}

Output cmd_hocolim_chi(const Options& opt, std::istream& in) {
  const dsl::Document doc = load(opt.file, in);
  const auto K = valid_sset(doc, opt.sset);
  const dsl::WeightsDecl* w = doc.weights(opt.weights);
  if (!w) throw Failure{usage_error, "no weights named '" + opt.weights + "'"};
  if (w->over != opt.sset) {
    throw Failure{semantic_error, "weights '" + opt.weights + "' are over '" + w->over + "', not '" + opt.sset + "'"};
  }
  const auto chi = hocolim_chi(*K, w->weights);
  Output o;
  o.result["chi"] = strings(chi);
  o.text = "chi: " + spaced(chi) + "\n";
  return o;
}

Output cmd_nerve(const Options& opt, std::istream& in) {
  const dsl::Document doc = load(opt.file, in);
  const FiniteCategory* C = doc.category(opt.category);
  if (!C) throw Failure{usage_error, "no category named '" + opt.category + "'"};
  const std::string name = chosen_name(opt, "N" + opt.category);
  try {
    Output o;
    emit_sset(o, opt, name, nerve(*C));
    return o;
  } catch (const NotNerveFinite& e) {
    throw Failure{semantic_error, "category '" + opt.category + "': " + e.what()};
  }
}

Output cmd_grothendieck(const Options& opt, std::istream& in) {
  const dsl::Document doc = load(opt.file, in);
  const dsl::DiagramDecl* D = doc.diagram(opt.diagram);
  if (!D) throw Failure{usage_error, "no diagram named '" + opt.diagram + "'"};
  const std::string name = chosen_name(opt, "G" + opt.diagram);
  const FiniteCategory G = grothendieck(D->diagram);
  Output o;
  o.result["objects"] = str(G.object_count());
  o.result["morphisms"] = str(G.morphism_count());
  emit_document(o, opt, name, dsl::serialize_category(name, G));
  return o;
}

Output cmd_product(const Options& opt, std::istream& in, bool cylinder_only) {
  const dsl::Document doc = load(opt.file, in);
  const auto A = valid_sset(doc, opt.sset);
  Output o;
  if (cylinder_only) {
    emit_sset(o, opt, chosen_name(opt, "Cyl" + opt.sset), cylinder(*A));
  } else {
    if (opt.sset_b.empty()) throw Failure{usage_error, "product needs --sset-b"};
    const auto B = valid_sset(doc, opt.sset_b);
    emit_sset(o, opt, chosen_name(opt, opt.sset + "x" + opt.sset_b), product(*A, *B));
  }
  return o;
}

Output cmd_pushout(const Options& opt, std::istream& in) {
  const dsl::Document doc = load(opt.file, in);
  const dsl::MapDecl& f = valid_map(doc, opt.map_f);
  const dsl::MapDecl& g = valid_map(doc, opt.map_g);
  if (f.source != g.source) {
    throw Failure{semantic_error, "maps '" + opt.map_f + "' and '" + opt.map_g + "' have different sources"};
  }
  Output o;
  emit_sset(o, opt, chosen_name(opt, "P" + opt.map_f + "_" + opt.map_g), double_mapping_cylinder(f.map, g.map));
  return o;
}

void record(Output& o, Json& reports, const std::string& label, const OracleReport& r,
            std::vector<OracleReport>& batch) {
  Json entry;
  entry["instance"] = label;
  entry["witness"] = r.witness;
  entry["formula"] = str(r.formula_value);
  entry["construction"] = str(r.construction_value);
  entry["homology"] = str(r.homology_value);
  entry["agree"] = r.agree;
  entry["consistent"] = r.consistent();
  reports.push_back(entry);
  o.text += label + ": formula " + str(r.formula_value) + ", construction " + str(r.construction_value) +
            ", homology " + str(r.homology_value) + (r.consistent() ? ", agree" : ", DISAGREE") + "\n";
  batch.push_back(r);
  batch.back().witness = label + " (" + r.witness + ")";
}

Output cmd_oracle(const Options& opt, std::istream& in, std::ostream& err) {
  const dsl::Document doc = load(opt.file, in);
  Output o;
  Json reports = Json::array();
  std::vector<OracleReport> batch;
  const auto& decls = doc.declarations();
  if (opt.kind == "pushout") {
    for (std::size_t i = 0; i < decls.size(); ++i) {
      for (std::size_t j = i; j < decls.size(); ++j) {
        const auto* f = std::get_if<dsl::MapDecl>(&decls[i].entity);
        const auto* g = std::get_if<dsl::MapDecl>(&decls[j].entity);
        if (!f || !g || f->source != g->source) continue;
        valid_map(doc, decls[i].name);
        valid_map(doc, decls[j].name);
        record(o, reports, decls[i].name + "," + decls[j].name, oracle_pushout(f->map, g->map), batch);
      }
    }
  } else if (opt.kind == "grothendieck") {
    for (const dsl::Declaration& d : decls) {
      if (const auto* D = std::get_if<dsl::DiagramDecl>(&d.entity)) {
        record(o, reports, d.name, oracle_grothendieck(D->diagram), batch);
      }
    }
  } else {
    for (const dsl::Declaration& fd : decls) {
      if (!std::holds_alternative<std::shared_ptr<const SimplicialSet>>(fd.entity)) continue;
      for (const dsl::Declaration& bd : decls) {
        if (!std::holds_alternative<std::shared_ptr<const SimplicialSet>>(bd.entity)) continue;
        const auto F = valid_sset(doc, fd.name);
        const auto B = valid_sset(doc, bd.name);
        if (B->count(0) == 0 || component_partition(*B).blocks.size() != 1) continue;
        record(o, reports, fd.name + "," + bd.name, oracle_trivial_bundle(*F, *B), batch);
      }
    }
  }
  const std::uint64_t seed = opt.seed.value_or(1);
  const std::uint64_t count = opt.count.value_or(opt.seed ? 1 : 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t s = seed + k;
    const std::string label = "seed " + std::to_string(s);
    if (opt.kind == "pushout") record(o, reports, label, random_pushout_instance(s), batch);
    else if (opt.kind == "grothendieck") record(o, reports, label, random_grothendieck_instance(s), batch);
    else record(o, reports, label, random_bundle_instance(s), batch);
  }
  o.code = oracle_status(batch, err);
  std::size_t agreeing = 0;
  for (const Json& r : reports) agreeing += r["consistent"].get<bool>() ? 1 : 0;
  o.result["kind"] = opt.kind;
  o.result["reports"] = reports;
  o.result["instances"] = str(reports.size());
  o.result["agreeing"] = str(agreeing);
  o.text += str(agreeing) + "/" + str(reports.size()) + " instances agree\n";
  return o;
}

std::string diagram_document(const DiagramOfPosets& D) {
  dsl::Document doc;
  doc.add_category("I", D.index());
  std::vector<std::string> fibers;
  for (std::size_t c = 0; c < D.index().object_count(); ++c) {
    fibers.push_back("P" + std::to_string(c));
    doc.add_poset(fibers.back(), D.fiber(c));
  }
  doc.add_diagram("D", "I", fibers, D);
  return dsl::serialize(doc);
}

Output cmd_gen(const Options& opt) {
  const std::uint64_t seed = *opt.seed;
  Output o;
  o.result["kind"] = opt.kind;
  o.result["seed"] = std::to_string(seed);
  if (opt.kind == "poset") {
    emit_document(o, opt, "P", dsl::serialize_poset("P", random_poset(seed, DiagramBounds{}.max_fiber)));
  } else if (opt.kind == "sset") {
    emit_document(o, opt, "K", dsl::serialize_sset("K", random_sset(seed)));
  } else {
    emit_document(o, opt, "D", diagram_document(random_diagram(seed)));
  }
  return o;
}

}  // namespace

int oracle_status(std::span<const OracleReport> reports, std::ostream& err) {
  int code = Exit::ok;
  for (const OracleReport& r : reports) {
    if (r.consistent()) continue;
    code = Exit::disagreement;
    err << "disagreement on " << r.witness << ": formula " << r.formula_value.str() << ", construction "
        << r.construction_value.str() << ", homology " << r.homology_value.str() << "\ninstance:\n"
        << r.instance;
  }
  return code;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler characteristics of finite homotopy colimits", "hocolim"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto file = [&](CLI::App* sub) { sub->add_option("file", opt.file, "Input document, - for stdin")->required(); };
  auto out_opts = [&](CLI::App* sub) {
    sub->add_option("-o,--output", opt.output, "Write the result document here");
    sub->add_option("--name", opt.name, "Name of the result declaration");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check every declaration");
  file(validate_cmd);

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic and Betti numbers");
  file(euler_cmd);
  euler_cmd->add_option("--sset", opt.sset)->required();

  auto* mobius_cmd = app.add_subcommand("mobius", "Mobius function of a simplicial set");
  file(mobius_cmd);
  mobius_cmd->add_option("--sset", opt.sset)->required();
  auto* classes = mobius_cmd->add_option("--classes", opt.classes, "Sum over connected components")
                      ->check(CLI::IsMember({"components"}));
  auto* partition = mobius_cmd->add_option("--partition", opt.partition, "Partition file, one class per line");
  classes->excludes(partition);
  mobius_cmd->add_flag("--peeling", opt.peeling, "Compute by peeling top simplices");

  auto* chi_cmd = app.add_subcommand("hocolim-chi", "Mobius-weighted sum of vertex weights");
  file(chi_cmd);
  chi_cmd->add_option("--sset", opt.sset)->required();
  chi_cmd->add_option("--weights", opt.weights)->required();

  auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a finite category");
  file(nerve_cmd);
  nerve_cmd->add_option("--category", opt.category)->required();
  out_opts(nerve_cmd);

  auto* groth_cmd = app.add_subcommand("grothendieck", "Total category of a diagram of posets");
  file(groth_cmd);
  groth_cmd->add_option("--diagram", opt.diagram)->required();
  out_opts(groth_cmd);

  auto* product_cmd = app.add_subcommand("product", "Cartesian product of two simplicial sets");
  file(product_cmd);
  product_cmd->add_option("--sset", opt.sset)->required();
  product_cmd->add_option("--sset-b", opt.sset_b)->required();
  out_opts(product_cmd);

  auto* cylinder_cmd = app.add_subcommand("cylinder", "Product with the 1-simplex");
  file(cylinder_cmd);
  cylinder_cmd->add_option("--sset", opt.sset)->required();
  out_opts(cylinder_cmd);

  auto* pushout_cmd = app.add_subcommand("pushout", "Double mapping cylinder of two maps");
  file(pushout_cmd);
  pushout_cmd->add_option("--map", opt.map_f)->required();
  pushout_cmd->add_option("--map-g", opt.map_g)->required();
  out_opts(pushout_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the formula with explicit models");
  file(oracle_cmd);
  oracle_cmd->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"pushout", "grothendieck", "bundle"}));
  oracle_cmd->add_option("--seed", opt.seed, "First seed for random instances");
  oracle_cmd->add_option("--count", opt.count, "Number of random instances");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", opt.kind)->required()->check(CLI::IsMember({"poset", "sset", "diagram"}));
  gen_cmd->add_option("--seed", opt.seed)->required();
  out_opts(gen_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage_error;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Output o;
  try {
    if (sub == validate_cmd) o = cmd_validate(opt, in);
    else if (sub == euler_cmd) o = cmd_euler(opt, in);
    else if (sub == mobius_cmd) o = cmd_mobius(opt, in);
    else if (sub == chi_cmd) o = cmd_hocolim_chi(opt, in);
    else if (sub == nerve_cmd) o = cmd_nerve(opt, in);
    else if (sub == groth_cmd) o = cmd_grothendieck(opt, in);
    else if (sub == product_cmd) o = cmd_product(opt, in, false);
    else if (sub == cylinder_cmd) o = cmd_product(opt, in, true);
    else if (sub == pushout_cmd) o = cmd_pushout(opt, in);
    else if (sub == oracle_cmd) o = cmd_oracle(opt, in, err);
    else o = cmd_gen(opt);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::semantic_error;
  }

  if (opt.format == "json") {
    Json inputs = Json::object();
    for (const CLI::Option* option : sub->get_options()) {
      if (option->count() == 0 || option->get_name() == "--help") continue;
      const std::string& key = option->get_single_name();
      inputs[key] = option->get_type_size_max() == 0 ? Json(true) : Json(option->as<std::string>());
    }
    Json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = o.result;
    out << doc.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace hocolim::cli
