#include "g2rs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "g2rs/json_io.hpp"
#include "g2rs/parse.hpp"

namespace g2rs {

namespace {

struct Options {
  bool json = false;
  std::string eval;  // "r=Q,s=Q"
  unsigned long seed = 1;
  int threads = 1;
};

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + s);
  return Rational(num) / Rational(den);
}

std::optional<RationalPoint> eval_point(const Options& opt) {
  if (opt.eval.empty()) return std::nullopt;
  RationalPoint pt;
  std::stringstream ss(opt.eval);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--eval expects var=value pairs");
    std::string name = item.substr(0, eq);
    Rational v = parse_rational(item.substr(eq + 1));
    if (v == 0) throw std::invalid_argument("--eval values must be nonzero");
    bool found = false;
    for (int i = 0; i < kVarCount; ++i) {
      if (name == kVarNames[i]) {
        pt.values[static_cast<std::size_t>(i)] = v;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown variable " + name);
  }
  return pt;
}

void print_element(const AlgebraElement& x, const Options& opt,
                   std::ostream& out) {
  auto pt = eval_point(opt);
  if (pt) {
    RationalElement sx = specialize(x, *pt);
    if (opt.json) {
      Json arr = Json::array();
      for (const auto& [m, c] : sx) {
        Json t;
        t["monomial"] = to_json(m);
        t["text"] = m.str();
        std::ostringstream cs;
        cs << c;
        t["value"] = cs.str();
        arr.push_back(t);
      }
      out << arr.dump(2) << "\n";
    } else {
      out << rational_element_str(sx) << "\n";
    }
    return;
  }
  if (opt.json)
    out << to_json(x).dump(2) << "\n";
  else
    out << x.str() << "\n";
}

void print_tensor(const TensorElement& t, const Options& opt,
                  std::ostream& out) {
  auto pt = eval_point(opt);
  if (pt) {
    Json arr = Json::array();
    std::ostringstream text;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
      Rational v = c.evaluate(*pt);
      if (v == 0) continue;
      if (opt.json) {
        Json e;
        e["left"] = to_json(k.first);
        e["right"] = to_json(k.second);
        std::ostringstream cs;
        cs << v;
        e["value"] = cs.str();
        arr.push_back(e);
      } else {
        if (!first) text << " + ";
        first = false;
        text << v << "*" << k.first.str() << " (x) " << k.second.str();
      }
    }
    if (opt.json)
      out << arr.dump(2) << "\n";
    else
      out << (first ? "0" : text.str()) << "\n";
    return;
  }
  if (opt.json)
    out << to_json(t).dump(2) << "\n";
  else
    out << t.str() << "\n";
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact kernel for the two-parameter quantized enveloping "
               "algebra of type G2 (nonnegative part)"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit machine-readable JSON");
  app.add_option("--eval", opt.eval,
                 "evaluate outputs at a rational point, e.g. r=2,s=3");
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_option("--threads", opt.threads, "worker threads for box scans");

  std::string expr1, expr2, file1, file2, matrix_text;
  int max_degree = 2;
  int box = 2;
  int max_n = 8;

  auto* normalize = app.add_subcommand("normalize", "normalize an element");
  normalize->add_option("expr", expr1)->required();
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  mul->add_option("lhs", expr1)->required();
  mul->add_option("rhs", expr2)->required();
  auto* comm = app.add_subcommand("comm-table", "print the straightening table");
  auto* delta = app.add_subcommand("delta", "coproduct of an element");
  delta->add_option("expr", expr1)->required();
  auto* antip = app.add_subcommand("antipode", "antipode of an element");
  antip->add_option("expr", expr1)->required();
  auto* couni = app.add_subcommand("counit", "counit of an element");
  couni->add_option("expr", expr1)->required();
  auto* axioms =
      app.add_subcommand("check-hopf-axioms", "verify the Hopf axioms");
  axioms->add_option("--max-degree", max_degree, "e-degree bound (<= 4)");
  auto* endo = app.add_subcommand(
      "check-endo", "check an endomorphism against the defining relations");
  endo->add_option("params", file1, "parameter JSON file")->required();
  auto* solve = app.add_subcommand("solve-constraints",
                                   "derive the k-exponent constraint lattice");
  auto* hopfaut = app.add_subcommand(
      "check-hopf-aut", "check an endomorphism for Hopf compatibility");
  hopfaut->add_option("params", file1)->required();
  auto* lemmas = app.add_subcommand(
      "verify-lemmas", "audit catalogued reordering identities");
  lemmas->add_option("--box", box, "exponent box half-width");
  auto* confl =
      app.add_subcommand("confluence", "check the rewriting system");
  auto* dims = app.add_subcommand("dims", "graded dimensions 0..N");
  dims->add_option("--max", max_n, "largest degree");
  auto* glperm = app.add_subcommand(
      "gl-perm-check", "test a matrix for nonnegative unimodularity");
  glperm->add_option("matrix", matrix_text, "JSON rows, e.g. [[0,1],[1,0]]")
      ->required();
  auto* comp = app.add_subcommand("compose", "compose two endomorphisms");
  comp->add_option("p", file1)->required();
  comp->add_option("q", file2)->required();
  auto* inv = app.add_subcommand("invert", "invert an endomorphism");
  inv->add_option("p", file1)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*normalize) {
      print_element(parse_element(expr1), opt, out);
      return 0;
    }
    if (*mul) {
      print_element(multiply(parse_element(expr1), parse_element(expr2)), opt,
                    out);
      return 0;
    }
    if (*comm) {
      if (opt.json) {
        Json arr = Json::array();
        for (int i = 1; i <= 6; ++i) {
          for (int j = i + 1; j <= 6; ++j) {
            Json e;
            e["i"] = i;
            e["j"] = j;
            e["product"] = "X" + std::to_string(j) + "*X" + std::to_string(i);
            e["pbw"] = to_json(straighten_pair(i, j));
            arr.push_back(e);
          }
        }
        out << arr.dump(2) << "\n";
      } else {
        for (int i = 1; i <= 6; ++i)
          for (int j = i + 1; j <= 6; ++j)
            out << "X" << j << "*X" << i << " = " << straighten_pair(i, j).str()
                << "\n";
      }
      return 0;
    }
    if (*delta) {
      print_tensor(coproduct(parse_element(expr1)), opt, out);
      return 0;
    }
    if (*antip) {
      print_element(antipode(parse_element(expr1)), opt, out);
      return 0;
    }
    if (*couni) {
      RatFunc c = counit(parse_element(expr1));
      auto pt = eval_point(opt);
      if (pt)
        out << c.evaluate(*pt) << "\n";
      else
        out << c.str() << "\n";
      return 0;
    }
    if (*axioms) {
      HopfAxiomReport rep = check_hopf_axioms(max_degree, opt.seed);
      if (opt.json)
        out << to_json(rep).dump(2) << "\n";
      else {
        out << "monomials checked: " << rep.monomials_checked << "\n"
            << "coassociativity:   " << (rep.coassoc_ok ? "ok" : "FAIL") << "\n"
            << "counit laws:       " << (rep.counit_ok ? "ok" : "FAIL") << "\n"
            << "antipode identity: " << (rep.antipode_ok ? "ok" : "FAIL") << "\n"
            << "hom/antihom:       " << (rep.hom_ok ? "ok" : "FAIL") << "\n";
        for (const auto& v : rep.antipode_variants)
          out << "catalogued S(" << v.generator << ") = " << v.claimed
              << (v.claimed_satisfies_axiom ? " satisfies" : " VIOLATES")
              << " the axiom; derived value " << v.derived << "\n";
      }
      return rep.all_axioms_ok() ? 0 : 1;
    }
    if (*endo) {
      EndoParams p = endo_from_json(load_json_file(file1));
      RelationReport rep = check_relations(p);
      if (opt.json)
        out << to_json(rep).dump(2) << "\n";
      else
        for (const auto& e : rep.entries)
          out << e.relation << ": " << (e.holds ? "holds" : "FAILS") << "\n";
      return rep.all_hold ? 0 : 1;
    }
    if (*solve) {
      ConstraintLattice lat = derive_exponent_constraints();
      if (opt.json)
        out << to_json(lat).dump(2) << "\n";
      else {
        out << "lattice rank " << lat.rank() << ", basis:";
        for (const auto& v : lat.basis)
          out << " (" << v[0] << "," << v[1] << "," << v[2] << "," << v[3]
              << ")";
        out << "\n";
      }
      return 0;
    }
    if (*hopfaut) {
      EndoParams p = endo_from_json(load_json_file(file1));
      RelationReport rel = check_relations(p);
      HopfCompatReport rep = check_hopf_compat(p);
      if (opt.json) {
        Json j;
        j["relations"] = to_json(rel);
        j["hopf_compat"] = to_json(rep);
        out << j.dump(2) << "\n";
      } else {
        out << "relations: " << (rel.all_hold ? "hold" : "FAIL") << "\n";
        for (const auto& e : rep.entries)
          out << "Delta compatibility on " << e.generator << ": "
              << (e.holds ? "ok" : "FAIL") << "\n";
      }
      return (rel.all_hold && rep.all_hold) ? 0 : 1;
    }
    if (*lemmas) {
      ReorderAuditReport rep = verify_commutation_lemmas(box, opt.threads);
      bool internal_ok = true;
      for (const auto& id : rep.identities)
        if (id.interpretable && !id.kernel_walk_agree) internal_ok = false;
      if (opt.json)
        out << to_json(rep).dump(2) << "\n";
      else
        for (const auto& id : rep.identities) {
          out << id.id << ": " << id.verdict;
          if (!id.reason.empty()) out << " (" << id.reason << ")";
          if (!id.detail.empty()) out << " [" << id.detail << "]";
          out << "\n";
        }
      return internal_ok ? 0 : 1;
    }
    if (*confl) {
      ConfluenceReport rep = check_confluence(default_system(), &default_reducer());
      if (opt.json)
        out << to_json(rep).dump(2) << "\n";
      else {
        out << "rules: " << default_system().size()
            << ", critical pairs: " << rep.pairs.size() << ", confluent: "
            << (rep.confluent ? "yes" : "NO") << "\n";
      }
      return rep.confluent ? 0 : 1;
    }
    if (*dims) {
      for (int n = 0; n <= max_n; ++n) {
        if (n) out << " ";
        out << graded_dimension(n);
      }
      out << "\n";
      return 0;
    }
    if (*glperm) {
      PermCheckResult res = gl_nonneg_permutation(
          int_matrix_from_json(Json::parse(matrix_text)));
      if (opt.json)
        out << to_json(res).dump(2) << "\n";
      else if (res.accepted)
        out << "permutation: " << res.perm_str() << "\n";
      else
        out << "rejected: " << res.reason << "\n";
      return res.accepted ? 0 : 1;
    }
    if (*comp) {
      EndoParams p = endo_from_json(load_json_file(file1));
      EndoParams q = endo_from_json(load_json_file(file2));
      for (const auto* c : {&p, &q}) {
        RelationReport rel = check_relations(*c);
        if (!rel.all_hold) {
          err << "parameters do not define an endomorphism\n";
          return 1;
        }
      }
      out << to_json(compose(p, q)).dump(2) << "\n";
      return 0;
    }
    if (*inv) {
      EndoParams p = endo_from_json(load_json_file(file1));
      RelationReport rel = check_relations(p);
      if (!rel.all_hold) {
        err << "parameters do not define an endomorphism\n";
        return 1;
      }
      out << to_json(invert(p)).dump(2) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace g2rs
