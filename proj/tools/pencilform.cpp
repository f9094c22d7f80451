// Command-line front end. Every subcommand reads JSON (a file path or an
// inline document), prints one JSON document and exits with
//   0 success, 1 internal consistency failure, 2 invalid input,
//   3 unsupported instance or exhausted budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pencilform/json_io.hpp"
#include "pencilform/oracle.hpp"
#include "pencilform/slorbit.hpp"
#include "pencilform/symclass.hpp"

using namespace pencilform;
using json_io::json;

namespace {

struct Options {
  std::string field = "q";
  std::string input, input2, output;
  std::uint64_t seed = 0;
  bool general = false;
  std::string disc_spec, segre_spec, type_spec;
  bool normalize = false;
  unsigned bound = 3;
  std::string u = "1", alpha = "[1]";
  unsigned n = 1;
  std::string group = "GL";
  std::uint64_t budget = kDefaultOracleBudget;
  bool jsonl = false;
};

json load(const std::string& src, const char* what) {
  if (src.empty()) fail(ErrorKind::InvalidInput, std::string("missing ") + what);
  std::string text = src;
  std::error_code ec;
  if (std::filesystem::is_regular_file(src, ec)) {
    std::ifstream in(src);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("could not parse ") + what + ": " + e.what());
  }
}

/// A scalar flag: JSON when it parses, otherwise the raw string.
json scalar(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception&) {
    return s;
  }
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Unsupported:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::InstanceTooLarge:
    case ErrorKind::CharTwo:
      return 3;
    case ErrorKind::ConventionFailure:
      return 1;
    default:
      return 2;
  }
}

/// The discriminant argument: a form, or a pencil whose discriminant is used.
template <Field F>
BinaryForm<F> form_arg(const F& f, const json& j) {
  if (j.is_object() && j.contains("M0")) return nonzero_disc(f, json_io::pencil_from_json(f, j));
  auto b = json_io::form_from_json(f, j);
  if (b.is_zero(f)) fail(ErrorKind::ZeroForm, "the form is zero");
  return b;
}

template <Field F>
SegreSpec<F> segre_spec_from_json(const F& f, const json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "a Segre specification is an array of {point, partition}");
  SegreSpec<F> s;
  for (const auto& e : j)
    s.push_back({json_io::point_from_json(f, e.at("point")), e.at("partition").get<std::vector<unsigned>>()});
  return s;
}

GroupKind group_of(const std::string& g) {
  if (g == "GL") return GroupKind::GL;
  if (g == "SL") return GroupKind::SL;
  fail(ErrorKind::InvalidInput, "group must be GL or SL");
}

template <Field F>
json run(const std::string& cmd, const F& f, const Options& o, std::ostream& out) {
  using namespace json_io;
  if (cmd == "disc") {
    auto m = pencil_from_json(f, load(o.input, "pencil"));
    return {{"disc", form_to_json(f, disc(f, m))}};
  }
  if (cmd == "scheme") {
    auto b = form_arg(f, load(o.input, "form or pencil"));
    return {{"scheme", scheme_to_json(f, scheme_of(f, b))}};
  }
  if (cmd == "module-type") {
    auto m = pencil_from_json(f, load(o.input, "pencil"));
    return {{"module_type", module_type_to_json(f, module_type(f, m))}, {"free", is_free(f, m)}};
  }
  if (cmd == "segre") {
    auto m = pencil_from_json(f, load(o.input, "pencil"));
    return {{"segre", segre_to_json(segre_symbol(f, m))}};
  }
  if (cmd == "invariant") {
    auto m = pencil_from_json(f, load(o.input, "pencil"));
    return {{"invariant", invariant_to_json(f, sym_invariant(f, m))}};
  }
  if (cmd == "equiv") {
    auto a = pencil_from_json(f, load(o.input, "first pencil"));
    auto b = pencil_from_json(f, load(o.input2, "second pencil"));
    if (o.general || !a.symmetric || !b.symmetric) {
      auto r = nonsym_equivalent(f, a, b, o.budget);
      return {{"equivalent", r.equivalent}, {"method", r.method}};
    }
    if constexpr (F::is_finite_field) {
      if (f.characteristic() == 2) {
        if (a.size() != b.size() || !equal(f, module_type(f, a), module_type(f, b)))
          return {{"equivalent", false}, {"method", "invariant"}};
        try {
          return {{"equivalent", brute_equivalent(f, a, b, GroupKind::GL, o.budget)}, {"method", "oracle"}};
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::BudgetExceeded)
            fail(ErrorKind::InstanceTooLarge, "characteristic two needs brute force and the pair is too large");
          throw;
        }
      }
    }
    return {{"equivalent", sym_equivalent(f, a, b)}, {"method", "invariant"}};
  }
  if (cmd == "construct") {
    const int given = !o.disc_spec.empty() + !o.segre_spec.empty() + !o.type_spec.empty();
    if (given != 1) fail(ErrorKind::InvalidInput, "construct needs exactly one of --disc, --segre, --type");
    Pencil<F> m;
    if (!o.disc_spec.empty()) {
      auto b = form_arg(f, load(o.disc_spec, "form"));
      if (o.normalize) {
        auto c = form::split(f, b).c_f;
        b = form::scale(f, b, f.div(hankel_sign(f, static_cast<long>(b.degree)), c));
      }
      m = lemma_a2_pair(f, b);
    } else if (!o.segre_spec.empty()) {
      m = segre_pair(f, segre_spec_from_json(f, load(o.segre_spec, "Segre specification")));
    } else {
      m = realize_pair(f, module_type_from_json(f, load(o.type_spec, "module type")));
    }
    return {{"pencil", pencil_to_json(f, m)}};
  }
  if (cmd == "sl-exists") {
    auto b = form_arg(f, load(o.input, "form or pencil"));
    auto s = scheme_of(f, b);
    auto r = existence_search(f, s, b, o.bound);
    json w = nullptr;
    if (r.witness) {
      auto l = algebra_of(f, s);
      w = {{"u", elem_to_json(f, r.witness->u)}, {"alpha", algebra_elem_to_json(l, r.witness->alpha)}};
    }
    json res = {{"found", r.found}, {"decided", r.decided}, {"witness", w}};
    if (!r.decided) res["note"] = "no witness within bound";
    return res;
  }
  if (cmd == "gs-act") {
    auto m = pencil_from_json(f, load(o.input, "pencil"));
    auto u = elem_from_json(f, scalar(o.u));
    auto a = poly_from_json(f, load(o.alpha, "alpha"));
    auto r = gs_act(f, m, u, a);
    return {{"pencil", pencil_to_json(f, r.pencil)}, {"chart", chart_to_json(f, r.chart)}};
  }
  if constexpr (!F::is_finite_field) {
    fail(ErrorKind::Unsupported, cmd + " needs a finite field");
  } else {
    if (cmd == "sl-count") {
      auto b = form_arg(f, load(o.input, "form or pencil"));
      auto s = scheme_of(f, b);
      auto r = sl_orbit_count(f, s, b);
      auto l = algebra_of(f, s);
      json labels = json::array();
      for (const auto& c : r.labels)
        labels.push_back({{"u", elem_to_json(f, c.u)}, {"alpha", algebra_elem_to_json(l, c.alpha)}});
      return {{"count", r.count}, {"predicted", r.predicted}, {"stabilizer", stabilizer_size(l)}, {"labels", labels}};
    }
    if (cmd == "sl-stabilizer") {
      auto b = form_arg(f, load(o.input, "form or pencil"));
      auto l = algebra_of(f, scheme_of(f, b));
      json elems = json::array();
      for (const auto& a : stabilizer_elements(l)) elems.push_back(algebra_elem_to_json(l, a));
      return {{"size", stabilizer_size(l)}, {"elements", elems}};
    }
    if (cmd == "oracle") {
      if (o.n < 1) fail(ErrorKind::InvalidInput, "--n must be at least 1");
      Oracle<F> orc(f, o.n + 1, !o.general, o.budget);
      auto t = orc.enumerate(group_of(o.group));
      json orbits = json::array();
      for (const auto& x : t.orbits) {
        json line = {{"code", x.code},
                     {"size", x.size},
                     {"stabilizer", x.stabilizer},
                     {"pencil", pencil_to_json(f, x.rep)},
                     {"segre", segre_to_json(segre_symbol(f, x.rep)).at("symbol")}};
        if (o.jsonl)
          out << line.dump() << "\n";
        else
          orbits.push_back(std::move(line));
      }
      if (o.jsonl) return nullptr;
      return {{"field", describe(f)},
              {"n", o.n},
              {"group", to_string(t.group)},
              {"symmetric", t.symmetric},
              {"group_order", t.group_order},
              {"pencil_count", t.pencil_count()},
              {"orbits", orbits}};
    }
  }
  fail(ErrorKind::InvalidInput, "unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of matrix pencils under congruence"};
  app.require_subcommand(1, 1);
  Options o;
  auto common = [&](CLI::App* s, bool two_inputs = false) {
    s->add_option("-f,--field", o.field, "field descriptor: q, fp:<p>, fq:<p>:<d>[:<c0,...,1>]")->capture_default_str();
    s->add_option("-i,--input", o.input, "input JSON (path or inline)");
    if (two_inputs) s->add_option("-j,--input2", o.input2, "second input JSON (path or inline)");
    s->add_option("-o,--output", o.output, "write the result here instead of standard output");
    s->add_option("--seed", o.seed, "seed for randomized factoring")->capture_default_str();
  };
  common(app.add_subcommand("disc", "discriminant det(X0 M0 + X1 M1) of a pencil"));
  common(app.add_subcommand("scheme", "closed points and multiplicities of a form (or of a pencil's discriminant)"));
  common(app.add_subcommand("module-type", "module type of the cokernel of a pencil"));
  common(app.add_subcommand("segre", "Segre symbol of a pencil"));
  common(app.add_subcommand("invariant", "complete GL-invariant of a symmetric pencil over a finite field of odd characteristic"));
  auto* eq = app.add_subcommand("equiv", "decide congruence of two pencils");
  common(eq, true);
  eq->add_flag("--general", o.general, "decide for arbitrary (not necessarily symmetric) pairs");
  eq->add_option("--budget", o.budget, "work budget for brute-force fallbacks")->capture_default_str();
  auto* cons = app.add_subcommand("construct", "build a symmetric pencil");
  common(cons);
  cons->add_option("--disc", o.disc_spec, "form with X0-leading coefficient (-1)^((r-1)r/2) after removing X1 powers");
  cons->add_flag("--normalize", o.normalize, "rescale the --disc form to meet the leading-coefficient convention");
  cons->add_option("--segre", o.segre_spec, "array of {point, partition} with rational points");
  cons->add_option("--type", o.type_spec, "module type: array of {point, partition}");
  common(app.add_subcommand("sl-count", "number of SL-orbits of free symmetric pencils with the given discriminant"));
  auto* ex = app.add_subcommand("sl-exists", "search for a free symmetric pencil with the given discriminant");
  common(ex);
  ex->add_option("--bound", o.bound, "coefficient bound for the search over the rationals")->capture_default_str();
  common(app.add_subcommand("sl-stabilizer", "elements of L^x with N(a) = 1 acting trivially"));
  auto* gs = app.add_subcommand("gs-act", "act by (u, alpha) on a free symmetric pencil");
  common(gs);
  gs->add_option("--u", o.u, "nonzero scalar u")->capture_default_str();
  gs->add_option("--alpha", o.alpha, "alpha as coefficients in the chart coordinate, constant first")->capture_default_str();
  auto* orc = app.add_subcommand("oracle", "brute-force orbit table over a small finite field");
  common(orc);
  orc->add_option("--n", o.n, "pencils of size n + 1")->capture_default_str();
  orc->add_option("--group", o.group, "GL or SL")->capture_default_str();
  orc->add_flag("--general", o.general, "all pairs rather than symmetric ones");
  orc->add_option("--budget", o.budget, "work budget")->capture_default_str();
  orc->add_flag("--jsonl", o.jsonl, "one JSON line per orbit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json_io::error_json("InvalidInput", e.what()).dump(2) << "\n";
    return 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      std::cout << json_io::error_json("InvalidInput", "cannot open " + o.output).dump(2) << "\n";
      return 2;
    }
  }
  std::ostream& out = o.output.empty() ? std::cout : file;
  try {
    factor_seed() = o.seed;
    auto field = parse_field(o.field);
    json r = std::visit([&](const auto& f) { return run(cmd, f, o, out); }, field);
    if (!r.is_null()) out << r.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    out << json_io::error_json(std::string(to_string(e.kind())), e.what()).dump(2) << "\n";
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    out << json_io::error_json("InvalidInput", e.what()).dump(2) << "\n";
    return 2;
  }
}
