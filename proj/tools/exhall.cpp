// Command-line front end: quiver reports, Hall products, K-theory, cones,
// degenerations, valuation classification, and the named verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "exhall/cones.hpp"
#include "exhall/degen.hpp"
#include "exhall/exact.hpp"
#include "exhall/format.hpp"
#include "exhall/hall.hpp"
#include "exhall/quiver.hpp"
#include "exhall/verify.hpp"

namespace {

using namespace exhall;

struct Options {
  std::string quiver_path;
  int q = 2;
  std::string structure = "max";
  std::string from;
  std::string to;
  unsigned long long budget = 1;
  std::string w_path;
  std::string format = "table";
  unsigned seed = 0;
  std::string a;
  std::string c;
  std::string suite;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Catalog load_catalog(const Options& opt) {
  if (opt.quiver_path.empty()) throw InputError("--quiver FILE is required");
  Limits limits;
  limits.scale(opt.budget);
  return build_catalog(parse_quiver(slurp(opt.quiver_path)), opt.seed, limits);
}

bool records(const Options& opt) {
  if (opt.format != "table" && opt.format != "records")
    throw InputError("--format must be 'table' or 'records'");
  return opt.format == "records";
}

void require_prime(int q) {
  if (!fq::is_supported_prime(q))
    throw InputError("--q must be one of 2, 3, 5, 7, 11, 13");
}

std::string alias_of(const Catalog& cat, int id) {
  const std::string label = dim_label(cat.ar.ind[id].dim);
  for (const auto& [name, dim] : cat.q.aliases)
    if (dim == label) return name;
  return "";
}

std::string display_label(const Catalog& cat, int id) {
  const std::string alias = alias_of(cat, id);
  const std::string label = dim_label(cat.ar.ind[id].dim);
  return alias.empty() ? label : label + " (" + alias + ")";
}

int cmd_info(const Options& opt) {
  const Catalog cat = load_catalog(opt);
  const auto components = validate_dynkin(cat.q);
  std::string type;
  for (const auto& comp : components) {
    if (!type.empty()) type += " + ";
    type += std::string(1, comp.family) + std::to_string(comp.rank);
  }
  if (records(opt)) {
    OrderedJson rec;
    rec["vertices"] = cat.q.vertex_count();
    rec["arrows"] = cat.q.arrows.size();
    rec["type"] = type;
    rec["indecomposables"] = cat.n;
    rec["meshes"] = cat.ar.meshes.size();
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "vertices:          " << cat.q.vertex_count() << "\n"
            << "arrows:            " << cat.q.arrows.size() << "\n"
            << "type:              " << type << "\n"
            << "indecomposables:   " << cat.n << "\n"
            << "meshes:            " << cat.ar.meshes.size() << "\n"
            << "exact structures:  2^" << cat.ar.meshes.size() << "\n";
  return 0;
}

int cmd_indecs(const Options& opt) {
  const Catalog cat = load_catalog(opt);
  for (int i = 0; i < cat.n; ++i) {
    const Indec& ind = cat.ar.ind[i];
    if (records(opt)) {
      OrderedJson rec;
      rec["index"] = i + 1;
      rec["label"] = dim_label(ind.dim);
      const std::string alias = alias_of(cat, i);
      if (!alias.empty()) rec["alias"] = alias;
      rec["dim"] = OrderedJson(ind.dim);
      rec["projective"] = ind.projective;
      rec["injective"] = ind.injective;
      std::cout << rec.dump() << "\n";
      continue;
    }
    std::cout << "M" << (i + 1) << ": " << display_label(cat, i)
              << (ind.projective ? " projective" : "") << (ind.injective ? " injective" : "")
              << "\n";
  }
  return 0;
}

int cmd_ar(const Options& opt) {
  const Catalog cat = load_catalog(opt);
  for (size_t u = 0; u < cat.ar.meshes.size(); ++u) {
    const Mesh& mesh = cat.ar.meshes[u];
    if (records(opt)) {
      OrderedJson rec;
      rec["mesh"] = u + 1;
      rec["tau_end"] = dim_label(cat.ar.ind[mesh.tau_end].dim);
      OrderedJson mid = OrderedJson::array();
      for (const auto& [id, mult] : mesh.middle) {
        OrderedJson m;
        m["label"] = dim_label(cat.ar.ind[id].dim);
        m["mult"] = mult;
        mid.push_back(std::move(m));
      }
      rec["middle"] = std::move(mid);
      rec["end"] = dim_label(cat.ar.ind[mesh.end].dim);
      std::cout << rec.dump() << "\n";
      continue;
    }
    std::string middle;
    for (const auto& [id, mult] : mesh.middle) {
      if (!middle.empty()) middle += " + ";
      middle += display_label(cat, id);
      if (mult > 1) middle += "^" + std::to_string(mult);
    }
    std::cout << "mesh " << (u + 1) << ": " << display_label(cat, mesh.tau_end) << " >-> "
              << middle << " ->> " << display_label(cat, mesh.end) << "\n";
  }
  return 0;
}

int cmd_structures(const Options& opt) {
  const Catalog cat = load_catalog(opt);
  for (const ExactStructure& e : enumerate_structures(cat.ar)) {
    if (records(opt)) {
      OrderedJson rec;
      rec["structure"] = structure_name(e);
      OrderedJson proj = OrderedJson::array(), inj = OrderedJson::array();
      for (int i : projectives(cat, e)) proj.push_back(dim_label(cat.ar.ind[i].dim));
      for (int i : injectives(cat, e)) inj.push_back(dim_label(cat.ar.ind[i].dim));
      rec["projectives"] = std::move(proj);
      rec["injectives"] = std::move(inj);
      std::cout << rec.dump() << "\n";
      continue;
    }
    std::string proj;
    for (int i : projectives(cat, e)) {
      if (!proj.empty()) proj += ", ";
      proj += display_label(cat, i);
    }
    std::cout << structure_name(e) << ": projectives {" << proj << "}\n";
  }
  return 0;
}

int cmd_hall(const Options& opt) {
  require_prime(opt.q);
  const Catalog cat = load_catalog(opt);
  const ExactStructure e = parse_structure(cat.ar, opt.structure);
  const ObjClass a = parse_class(cat, opt.a);
  const ObjClass c = parse_class(cat, opt.c);
  const QElt prod = multiply(cat, e, a, c, opt.q);
  if (records(opt)) {
    std::cout << product_json(cat, e, a, c, opt.q, prod).dump() << "\n";
    return 0;
  }
  std::cout << "[" << class_label(cat, a) << "] * [" << class_label(cat, c) << "] = "
            << hall_str(cat, prod) << "   (structure " << structure_name(e)
            << ", q=" << opt.q << ")\n";
  return 0;
}

int cmd_k0(const Options& opt) {
  const Catalog cat = load_catalog(opt);
  const ExactStructure e = parse_structure(cat.ar, opt.structure);
  const K0Presentation pres = k0_quotient(cat, e);
  if (records(opt)) {
    OrderedJson rec;
    rec["structure"] = structure_name(e);
    rec["ambient_rank"] = pres.ambient_rank;
    OrderedJson rels = OrderedJson::array();
    for (const KClass& rel : pres.relations) rels.push_back(kclass_json(rel));
    rec["relations"] = std::move(rels);
    rec["invariant_factors"] = OrderedJson(pres.invariant_factors);
    rec["rank"] = pres.rank;
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "K0(structure " << structure_name(e) << ") = Z^" << pres.ambient_rank;
  for (const KClass& rel : pres.relations) {
    std::string row;
    for (int i = 0; i < pres.ambient_rank; ++i) {
      if (rel[i] == 0) continue;
      const std::string term = "x" + std::to_string(i + 1);
      if (rel[i] == 1)
        row += row.empty() ? term : ("+" + term);
      else if (rel[i] == -1)
        row += "-" + term;
      else
        row += (rel[i] > 0 && !row.empty() ? "+" : "") + std::to_string(rel[i]) + term;
    }
    std::cout << " / (" << row << ")";
  }
  std::cout << "\nfree rank " << pres.rank;
  if (!pres.invariant_factors.empty()) {
    std::cout << ", invariant factors";
    for (long long f : pres.invariant_factors) std::cout << " " << f;
  }
  std::cout << "\n";
  return 0;
}

int cmd_cones(const Options& opt) {
  const Catalog cat = load_catalog(opt);
  if (opt.from.empty() || opt.to.empty())
    throw InputError("cones requires --from and --to structure selectors");
  const ExactStructure e = parse_structure(cat.ar, opt.from);
  const ExactStructure eprime = parse_structure(cat.ar, opt.to);
  const ConeC c = cone_C(cat, e, eprime);
  const ConeD d = cone_D(cat, e, eprime);
  const int closure = closure_dimension(cat, e, eprime);
  const int lin = linearity_dimension(cat, e, eprime);

  bool member = false;
  bool have_w = !opt.w_path.empty();
  if (have_w) {
    const Valuation w = valuation_from_text(cat, slurp(opt.w_path));
    member = membership(valuation_vector(w), d);
  }

  if (records(opt)) {
    OrderedJson rec;
    rec["from"] = structure_name(e);
    rec["to"] = structure_name(eprime);
    OrderedJson gens = OrderedJson::array();
    for (const KClass& g : c.generators) gens.push_back(kclass_json(g));
    rec["cone_C"] = std::move(gens);
    OrderedJson strict = OrderedJson::array(), zero = OrderedJson::array();
    for (const KClass& s : d.strict) strict.push_back(kclass_json(s));
    for (const KClass& z : d.zero) zero.push_back(kclass_json(z));
    rec["cone_D_strict"] = std::move(strict);
    rec["cone_D_zero"] = std::move(zero);
    rec["closure_dim"] = closure;
    rec["linearity_dim"] = lin;
    if (have_w) rec["w_member"] = member;
    std::cout << rec.dump() << "\n";
    return 0;
  }
  std::cout << "C generators (coordinates x1..x" << cat.n << "):\n";
  for (const KClass& g : c.generators) std::cout << "  " << kclass_json(g).dump() << "\n";
  std::cout << "D strict rows (g.d > 0):\n";
  for (const KClass& s : d.strict) std::cout << "  " << kclass_json(s).dump() << "\n";
  std::cout << "D equality rows (g.d = 0):\n";
  for (const KClass& z : d.zero) std::cout << "  " << kclass_json(z).dump() << "\n";
  std::cout << "closure dimension:   " << closure << "\n"
            << "linearity dimension: " << lin << "\n";
  if (have_w) std::cout << "valuation in D:      " << (member ? "yes" : "no") << "\n";
  return 0;
}

int cmd_degen(const Options& opt) {
  require_prime(opt.q);
  const Catalog cat = load_catalog(opt);
  if (opt.from.empty() || opt.to.empty())
    throw InputError("degen requires --from and --to structure selectors");
  const ExactStructure e = parse_structure(cat.ar, opt.from);
  const ExactStructure eprime = parse_structure(cat.ar, opt.to);
  const Valuation w = weight_function(cat, e, eprime);
  const int bound = 4;
  const TableReport report = verify_degeneration(cat, e, eprime, opt.q, bound);

  if (records(opt)) {
    OrderedJson rec;
    rec["from"] = structure_name(e);
    rec["to"] = structure_name(eprime);
    rec["q"] = opt.q;
    rec["weight"] = OrderedJson(w.w);
    rec["pairs"] = report.pairs;
    rec["mismatches"] = OrderedJson(report.mismatches);
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "weight function:";
    for (int i = 0; i < cat.n; ++i)
      if (w.w[i]) std::cout << " " << dim_label(cat.ar.ind[i].dim) << ":" << w.w[i];
    if (w.value(ObjClass(std::vector<int>(cat.n, 1))) == 0) std::cout << " (zero)";
    std::cout << "\n"
              << "graded table of " << structure_name(e) << " vs table of "
              << structure_name(eprime) << " on " << report.pairs
              << " pairs (total dim <= " << bound << ", q=" << opt.q << "): "
              << (report.ok() ? "equal" : "MISMATCH") << "\n";
    for (const std::string& m : report.mismatches) std::cout << "  " << m << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_classify(const Options& opt) {
  const Catalog cat = load_catalog(opt);
  if (opt.w_path.empty()) throw InputError("classify requires --w FILE");
  const ExactStructure e = parse_structure(cat.ar, opt.structure);
  const Valuation w = valuation_from_text(cat, slurp(opt.w_path));
  const ValuationClass cls = classify_valuation(cat, w, e);
  if (records(opt)) {
    OrderedJson rec;
    rec["structure"] = structure_name(e);
    rec["kind"] = cls.kind == ValuationKind::Valuation ? "valuation" : "not-quasi";
    if (cls.kind == ValuationKind::Valuation)
      rec["characteristic_for"] = structure_name(cls.characteristic_for);
    else
      rec["negative_mesh"] = cls.negative_mesh + 1;
    std::cout << rec.dump() << "\n";
    return 0;
  }
  if (cls.kind == ValuationKind::Valuation)
    std::cout << "valuation for structure " << structure_name(e) << ", characteristic for "
              << structure_name(cls.characteristic_for) << "\n";
  else
    std::cout << "not a quasi-valuation for structure " << structure_name(e)
              << " (negative on mesh " << (cls.negative_mesh + 1) << ")\n";
  return 0;
}

int cmd_verify(const Options& opt) {
  const VerifyContext ctx = VerifyContext::make(opt.seed);
  bool all_pass = true;
  for (const CheckResult& res : run_suite(ctx, opt.suite)) {
    std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name;
    if (!res.pass) std::cout << "  " << res.detail;
    std::cout << "\n";
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras of exact structures on Dynkin quiver representations"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_structure) {
    sub->add_option("--quiver", opt.quiver_path, "quiver description file");
    sub->add_option("--seed", opt.seed, "seed for representative sampling");
    sub->add_option("--budget", opt.budget, "enumeration budget multiplier (>= 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "output format: table or records");
    if (with_structure)
      sub->add_option("--structure", opt.structure,
                      "exact structure: comma-separated mesh ids, 'max', or 'add'");
  };

  CLI::App* info = app.add_subcommand("info", "quiver and category summary");
  add_common(info, false);
  CLI::App* indecs = app.add_subcommand("indecs", "list the indecomposables");
  add_common(indecs, false);
  CLI::App* ar = app.add_subcommand("ar", "list the almost-split conflations");
  add_common(ar, false);
  CLI::App* structures = app.add_subcommand("structures", "enumerate the exact structures");
  add_common(structures, false);

  CLI::App* hall = app.add_subcommand("hall", "multiply two classes in the Hall algebra");
  add_common(hall, true);
  hall->add_option("--a", opt.a, "left factor (labels joined by +, or 0)")->required();
  hall->add_option("--c", opt.c, "right factor")->required();
  hall->add_option("--q", opt.q, "field size (prime)");

  CLI::App* k0 = app.add_subcommand("k0", "Grothendieck group presentation");
  add_common(k0, true);

  CLI::App* cones = app.add_subcommand("cones", "conflation cone and its dual");
  add_common(cones, false);
  cones->add_option("--from", opt.from, "the larger structure");
  cones->add_option("--to", opt.to, "the smaller structure");
  cones->add_option("--w", opt.w_path, "valuation file to test for membership");

  CLI::App* degen = app.add_subcommand("degen", "compare the graded table to the target table");
  add_common(degen, false);
  degen->add_option("--from", opt.from, "the larger structure");
  degen->add_option("--to", opt.to, "the smaller structure");
  degen->add_option("--q", opt.q, "field size (prime)");

  CLI::App* classify = app.add_subcommand("classify", "classify a valuation file");
  add_common(classify, true);
  classify->add_option("--w", opt.w_path, "valuation file");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", opt.suite,
                     "one of: a2, a3, disjoint-a2, lattice, cones, degen, all")
      ->required();
  verify->add_option("--seed", opt.seed, "seed for representative sampling");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(info)) return cmd_info(opt);
    if (app.got_subcommand(indecs)) return cmd_indecs(opt);
    if (app.got_subcommand(ar)) return cmd_ar(opt);
    if (app.got_subcommand(structures)) return cmd_structures(opt);
    if (app.got_subcommand(hall)) return cmd_hall(opt);
    if (app.got_subcommand(k0)) return cmd_k0(opt);
    if (app.got_subcommand(cones)) return cmd_cones(opt);
    if (app.got_subcommand(degen)) return cmd_degen(opt);
    if (app.got_subcommand(classify)) return cmd_classify(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (try a larger --budget)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
