// cthh: quiver tools and Hochschild cohomology checks for cluster-tilted
// algebras of Dynkin type.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cthh/algebra.hpp"
#include "cthh/classifier.hpp"
#include "cthh/error.hpp"
#include "cthh/io.hpp"
#include "cthh/oracle.hpp"
#include "cthh/quiver.hpp"
#include "cthh/relations.hpp"
#include "cthh/series.hpp"
#include "cthh/verify.hpp"
#include "table.hpp"

namespace {

using namespace cthh;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string quiver_summary(const Quiver& q) {
  std::string s;
  for (const auto& a : q.arrows()) s += (s.empty() ? "" : " ") + std::to_string(a.source) + ">" + std::to_string(a.target);
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// Exit codes 1 for errors that mean a mathematical check failed, 2 otherwise.
int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InternalInconsistency:
    case Errc::NonIntegralN:
    case Errc::NotInTable:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

void cmd_validate(const std::string& file, bool as_json) {
  const auto q = load_quiver(file);
  const auto hex = canonical_hex(canonical_form(q));
  if (as_json) {
    emit({{"valid", true}, {"vertices", q.vertex_count()}, {"arrows", q.arrow_count()}, {"canonical", hex}});
    return;
  }
  cli::print_pairs(std::cout, {{"valid", "yes"},
                               {"vertices", std::to_string(q.vertex_count())},
                               {"arrows", std::to_string(q.arrow_count())},
                               {"canonical", hex}});
}

void cmd_mutate(const std::string& file, int k, bool as_json) {
  const auto q = mutate(load_quiver(file), k);
  if (as_json) {
    emit(quiver_to_json(q));
  } else {
    std::cout << serialize_quiver(q) << '\n';
  }
}

void cmd_class(const std::string& seed, std::size_t cap, bool as_json) {
  const auto type = parse_dynkin(seed);
  const auto members = enumerate_class(standard_seed(type), cap);
  if (as_json) {
    json list = json::array();
    for (const auto& m : members) {
      list.push_back({{"canonical", canonical_hex(m.canonical)},
                      {"quiver", quiver_to_json(m.quiver)},
                      {"oriented_3_cycles", count_oriented_triangles(m.quiver)}});
    }
    emit({{"type", to_string(type)}, {"size", members.size()}, {"members", list}});
    return;
  }
  cli::Table t({"#", "canonical", "3-cycles", "arrows"});
  for (std::size_t i = 0; i < members.size(); ++i) {
    t.add({std::to_string(i + 1), canonical_hex(members[i].canonical),
           std::to_string(count_oriented_triangles(members[i].quiver)), quiver_summary(members[i].quiver)});
  }
  t.print(std::cout);
  std::cout << to_string(type) << ": " << members.size() << " quivers up to isomorphism\n";
}

void cmd_relations(const std::string& file, bool as_json) {
  const auto q = load_quiver(file);
  const auto rels = generate_relations(q);
  if (as_json) {
    emit(to_json(q, rels));
    return;
  }
  cli::Table t({"arrow", "kind", "relation"});
  for (const auto& r : rels.relations) {
    const auto& a = q.arrows()[r.arrow];
    t.add({std::to_string(a.source) + ">" + std::to_string(a.target), r.is_zero_relation() ? "zero" : "commutativity",
           format_relation(q, r)});
  }
  t.print(std::cout);
  std::cout << rels.zero_relations() << " zero, " << rels.commutativity_relations() << " commutativity\n";
}

void cmd_cartan(const std::string& file, bool as_json) {
  const auto q = load_quiver(file);
  const auto a = cluster_tilted_algebra(q);
  const auto c = cartan(a);
  if (as_json) {
    auto j = to_json(c);
    j["dimension"] = a.dimension();
    j["degree_dims"] = a.degree_dims();
    emit(j);
    return;
  }
  std::vector<std::string> header{"C"};
  for (int j = 1; j <= q.vertex_count(); ++j) header.push_back(std::to_string(j));
  cli::Table t(header);
  for (int i = 0; i < q.vertex_count(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    for (auto v : c.matrix[static_cast<std::size_t>(i)]) row.push_back(std::to_string(v));
    t.add(row);
  }
  t.print(std::cout);
  cli::print_pairs(std::cout, {{"dimension", std::to_string(a.dimension())},
                               {"degree dims", join(a.degree_dims())},
                               {"det C", to_decimal(c.det)},
                               {"det(xC - C^T)", c.assoc_poly.to_string()}});
}

void cmd_hh(const std::string& file, const std::string& char_text, std::size_t max_i, const std::string& method,
            bool as_json) {
  const auto q = load_quiver(file);
  const auto field = parse_field(char_text);
  const auto type = detect_dynkin(q);
  HSeries h;
  std::string used;
  std::optional<DTypeParams> params;
  if (method == "typed") {
    auto cf = hh_closed_form(q, type);
    h = cf.h;
    used = cf.method;
    params = cf.d_params;
  } else {
    const auto a = cluster_tilted_algebra(q);
    h = hh_universal(hh1_dim(a, a.field()), cartan(a).det);
    used = "universal";
  }
  const auto dims = hh_dims_from_series(h, max_i, field);
  if (as_json) {
    json j{{"type", to_string(type)}, {"h", format_h(h)}, {"method", used}, {"field", field.name()}, {"dims", dims}};
    if (params) j["d_params"] = to_json(*params);
    emit(j);
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows{{"type", to_string(type)}, {"h", format_h(h)}, {"method", used}};
  if (params) rows.emplace_back("D parameters", format_params(*params));
  rows.emplace_back("field", field.name());
  rows.emplace_back("dim HH^0.." + std::to_string(max_i), join(dims));
  cli::print_pairs(std::cout, rows);
}

void cmd_hh_oracle(const std::string& file, const std::string& char_text, std::size_t max_i, std::size_t budget,
                   bool as_json) {
  const auto q = load_quiver(file);
  const auto field = parse_field(char_text);
  const auto a = cluster_tilted_algebra(q, field);
  OracleOptions opts;
  opts.budget = budget;
  const auto report = hochschild_report(a, field, max_i, opts);
  if (as_json) {
    json steps = json::array();
    for (const auto& s : report.steps) {
      json summands = json::array();
      for (const auto& [x, y] : s.summands) summands.push_back({x, y});
      steps.push_back({{"summands", summands}, {"dimension", s.dimension},
                       {"composition_zero", s.composition_zero}, {"exact", s.exact}});
    }
    emit({{"field", field.name()}, {"max_i", max_i}, {"dims", report.hh.dims}, {"steps", steps}});
    return;
  }
  cli::Table t({"i", "dim HH^i", "summands of P_i", "dim P_i"});
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const auto& s = report.steps[i];
    t.add({std::to_string(i), i < report.hh.dims.size() ? std::to_string(report.hh.dims[i]) : "",
           std::to_string(s.summands.size()), std::to_string(s.dimension)});
  }
  t.print(std::cout);
  std::cout << "field " << field.name() << ", dims " << join(report.hh.dims) << '\n';
}

void cmd_verify(const std::string& seed, const std::string& chars, std::size_t max_i, const std::string& sample,
                bool as_json) {
  VerifyOptions opts;
  opts.type = parse_dynkin(seed);
  opts.fields = parse_field_list(chars);
  opts.max_i = max_i;
  if (sample.empty()) {
    if (opts.type.family == DynkinFamily::E && opts.type.rank >= 7) opts.sample = 50;
  } else if (sample != "all") {
    try {
      opts.sample = static_cast<std::size_t>(std::stoul(sample));
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "--sample expects a count or \"all\"");
    }
  }
  const auto report = verify_suite(opts);
  if (as_json) {
    emit(to_json(report));
  } else {
    std::vector<std::string> header{"canonical", "rel z/c", "det C", "assoc poly", "h", "method"};
    for (const auto& f : opts.fields) header.push_back(f.name());
    header.push_back("result");
    cli::Table t(header);
    for (const auto& r : report.records) {
      std::vector<std::string> row{r.canonical,
                                   std::to_string(r.zero_relations) + "/" + std::to_string(r.commutativity_relations),
                                   to_decimal(r.cartan_det), r.assoc_poly.to_string(),
                                   r.closed_form ? format_h(*r.closed_form) : "?", r.method};
      for (const auto& fd : r.dims) row.push_back(join(fd.oracle));
      row.resize(header.size() - 1);
      row.push_back(r.pass() ? "pass" : "FAIL");
      t.add(row);
    }
    t.print(std::cout);
    for (const auto& r : report.records) {
      for (const auto& f : r.failures) std::cout << r.canonical << ": " << f << '\n';
    }
    std::cout << report.summary() << '\n';
  }
  if (!report.pass()) throw VerificationFailed(report.summary());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of cluster-tilted algebras of Dynkin type"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, seed, char_text = "0", chars = "2,3,0", method = "typed", sample;
  int at = 0;
  std::size_t cap = kDefaultClassCap, max_i = 8, budget = OracleOptions{}.budget;

  auto* quiver = app.add_subcommand("quiver", "Quiver document utilities");
  quiver->require_subcommand(1);
  auto* validate_cmd = quiver->add_subcommand("validate", "Check a quiver document");
  validate_cmd->add_option("FILE", file)->required();

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at a vertex and print the result");
  mutate_cmd->add_option("FILE", file)->required();
  mutate_cmd->add_option("--at", at, "Vertex (1-based)")->required();

  auto* class_cmd = app.add_subcommand("class", "Enumerate a mutation class up to isomorphism");
  class_cmd->add_option("--seed", seed, "Dynkin type such as A5, D6, E7")->required();
  class_cmd->add_option("--cap", cap, "Maximum class size");

  auto* relations_cmd = app.add_subcommand("relations", "Relations from the potential");
  relations_cmd->add_option("FILE", file)->required();

  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix, determinant and associated polynomial");
  cartan_cmd->add_option("FILE", file)->required();

  auto* hh_cmd = app.add_subcommand("hh", "Closed-form Hochschild series");
  hh_cmd->add_option("FILE", file)->required();
  hh_cmd->add_option("--char", char_text, "Characteristic: a prime, or 0 for the rationals");
  hh_cmd->add_option("--max-i", max_i, "Largest degree");
  hh_cmd->add_option("--method", method, "typed or universal")->check(CLI::IsMember({"typed", "universal"}));

  auto* oracle_cmd = app.add_subcommand("hh-oracle", "Hochschild dimensions from a bimodule resolution");
  oracle_cmd->add_option("FILE", file)->required();
  oracle_cmd->add_option("--char", char_text, "Characteristic: a prime, or 0 for the rationals")->required();
  oracle_cmd->add_option("--max-i", max_i, "Largest degree")->required();
  oracle_cmd->add_option("--budget", budget, "Largest allowed projective dimension");

  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the oracle over a mutation class");
  verify_cmd->add_option("--seed", seed, "Dynkin type such as A5, D6, E7")->required();
  verify_cmd->add_option("--chars", chars, "Comma-separated characteristics (0 = rationals)");
  verify_cmd->add_option("--max-i", max_i, "Largest degree");
  verify_cmd->add_option("--sample", sample, "Number of quivers, or all (E7/E8 default to 50)");

  for (auto* sub : {validate_cmd, mutate_cmd, class_cmd, relations_cmd, cartan_cmd, hh_cmd, oracle_cmd, verify_cmd}) {
    sub->add_flag("--json", as_json, "Machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate_cmd) cmd_validate(file, as_json);
    else if (*mutate_cmd) cmd_mutate(file, at, as_json);
    else if (*class_cmd) cmd_class(seed, cap, as_json);
    else if (*relations_cmd) cmd_relations(file, as_json);
    else if (*cartan_cmd) cmd_cartan(file, as_json);
    else if (*hh_cmd) cmd_hh(file, char_text, max_i, method, as_json);
    else if (*oracle_cmd) cmd_hh_oracle(file, char_text, max_i, budget, as_json);
    else if (*verify_cmd) cmd_verify(seed, chars, max_i, sample, as_json);
  } catch (const VerificationFailed&) {
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
