#include "affalg/commands.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "affalg/fixtures.hpp"
#include "affalg/io.hpp"

namespace affalg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot write file '" + path + "'");
  f << content;
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("Fp:", 0) == 0)
    return Field::prime(static_cast<std::uint32_t>(
        std::stoul(text.substr(3))));
  throw FieldError("--field expects Q or Fp:<p>, got '" + text + "'");
}

Vector parse_point(const std::string& text, Field f) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("--at point: " + std::string(e.what()));
  }
  if (!j.is_array()) throw SchemaError("--at expects a JSON array or 'auto'");
  Vector v(f, j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string())
      v[i] = Scalar::parse(f, j[i].get<std::string>());
    else if (j[i].is_number_integer())
      v[i] = Scalar(f, j[i].get<long>());
    else
      throw SchemaError("--at entries must be integers or rational strings");
  }
  return v;
}

struct CommonOpts {
  std::string json_report;
  std::string field_text = "Q";
  std::uint64_t seed = 0;
};

/// Named verdict lines for an affgebra-data file.
std::vector<Verdict> check_data_lines(const AffgebraData& d) {
  std::vector<Verdict> out;
  Verdict lv = check_homlie_algebra(d.L);
  lv.check = "underlying_homlie_algebra";
  out.push_back(std::move(lv));
  out.push_back(commute(d.kappa, d.L.alpha)
                    ? Verdict::passed("kappa_alpha_commute")
                    : Verdict::failed("kappa_alpha_commute", {},
                                      (d.kappa * d.L.alpha -
                                       d.L.alpha * d.kappa).str()));
  out.push_back(commute(d.lambda, d.L.alpha)
                    ? Verdict::passed("lambda_alpha_commute")
                    : Verdict::failed("lambda_alpha_commute", {},
                                      (d.lambda * d.L.alpha -
                                       d.L.alpha * d.lambda).str()));
  Verdict compat = Verdict::passed("pair_compatibility");
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n && compat.pass; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector res = data_identity_residual(d.L, d.kappa, d.lambda, i, j);
      if (!res.is_zero()) {
        compat = Verdict::failed(
            "pair_compatibility",
            {Vector::unit(d.field(), n, i), Vector::unit(d.field(), n, j)},
            res.str());
        break;
      }
    }
  out.push_back(std::move(compat));
  return out;
}

std::vector<Verdict> run_checks_for(const StructureFile& sf) {
  std::vector<Verdict> verdicts;
  std::visit(
      [&verdicts](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HomLieAffgebra> ||
                      std::is_same_v<T, HomAssocAffgebra> ||
                      std::is_same_v<T, HomPreLieAffgebra> ||
                      std::is_same_v<T, HomLieAlgebra>) {
          verdicts = check_all(s);
        } else if constexpr (std::is_same_v<T, AffgebraData>) {
          verdicts = check_data_lines(s);
        } else if constexpr (std::is_same_v<T, DataHom>) {
          verdicts = check_data_hom_detail(s);
        }
      },
      sf.payload);
  return verdicts;
}

int report(const std::vector<Verdict>& verdicts, const CommonOpts& opts,
           std::ostream& out) {
  for (const Verdict& v : verdicts) out << v.line() << "\n";
  if (!opts.json_report.empty())
    write_output(opts.json_report, verdicts_to_json(verdicts), out);
  return all_pass(verdicts) ? kExitPass : kExitViolation;
}

StructureFile load_structure_or_fixture(const std::string& file,
                                        const std::string& fixture,
                                        const std::string& alpha_name,
                                        const Field& field) {
  if (!fixture.empty()) {
    Matrix alpha = fixture_alpha(fixture, alpha_name, field);
    return wrap(classical_homlie(fixture, alpha));
  }
  return parse_structure(read_file(file));
}

Vector resolve_at(const std::string& at_text, const AffineMap& alpha,
                  std::ostream& err, bool& ok) {
  ok = true;
  if (at_text == "auto") {
    SolutionSpace fixed = alpha_fixed_points(alpha);
    if (!fixed.consistent()) {
      err << "alpha has no fixed point: the solution set of alpha(x) = x is "
             "empty\n";
      ok = false;
      return Vector(alpha.field(), alpha.dim());
    }
    return *fixed.particular;
  }
  return parse_point(at_text, alpha.field());
}

int dispatch(const std::string& command, const std::string& file,
             const std::string& out_path, const std::string& at_text,
             const std::string& alpha_file, const std::string& space,
             bool print_basis, const std::string& fixture,
             const std::string& alpha_name, const CommonOpts& opts,
             std::ostream& out, std::ostream& err) {
  const Field field = parse_field_flag(opts.field_text);

  if (command == "check") {
    StructureFile sf =
        load_structure_or_fixture(file, fixture, alpha_name, field);
    return report(run_checks_for(sf), opts, out);
  }

  if (command == "build") {
    StructureFile sf = parse_structure(read_file(file));
    const auto* d = std::get_if<AffgebraData>(&sf.payload);
    if (!d) throw SchemaError("build expects an affgebra_data file");
    HomLieAffgebra s = build_from_data(*d);
    write_output(out_path, serialize(wrap(s)), out);
    return kExitPass;
  }

  if (command == "fiber" || command == "extract") {
    StructureFile sf = parse_structure(read_file(file));
    if (const auto* s = std::get_if<HomLieAffgebra>(&sf.payload)) {
      bool ok;
      Vector o = resolve_at(at_text, s->alpha, err, ok);
      if (!ok) return kExitViolation;
      if (command == "fiber") {
        FiberLieResult r = fiber_lie(*s, o);
        write_output(out_path, fiber_lie_to_json(r), out);
      } else {
        AffgebraData d = extract_data(*s, o);
        write_output(out_path, serialize(wrap(d)), out);
      }
      return kExitPass;
    }
    if (const auto* s = std::get_if<HomAssocAffgebra>(&sf.payload)) {
      if (command == "extract")
        throw SchemaError("extract expects a hom_lie_affgebra file");
      bool ok;
      Vector o = resolve_at(at_text, s->alpha, err, ok);
      if (!ok) return kExitViolation;
      FiberAssocResult r = fiber_assoc(*s, o);
      write_output(out_path, fiber_assoc_to_json(r), out);
      return kExitPass;
    }
    throw SchemaError(command + " expects an affgebra file");
  }

  if (command == "twist") {
    StructureFile sf = parse_structure(read_file(file));
    AffineMap alpha = parse_affine_map(read_file(alpha_file));
    if (const auto* s = std::get_if<HomLieAffgebra>(&sf.payload)) {
      write_output(out_path, serialize(wrap(yau_twist_lie(*s, alpha))), out);
      return kExitPass;
    }
    if (const auto* s = std::get_if<HomAssocAffgebra>(&sf.payload)) {
      write_output(out_path, serialize(wrap(yau_twist_assoc(*s, alpha))), out);
      return kExitPass;
    }
    if (const auto* s = std::get_if<HomPreLieAffgebra>(&sf.payload)) {
      write_output(out_path, serialize(wrap(yau_twist_prelie(*s, alpha))),
                   out);
      return kExitPass;
    }
    throw SchemaError("twist expects an affgebra file");
  }

  if (command == "derive") {
    StructureFile sf =
        load_structure_or_fixture(file, fixture, alpha_name, field);
    const auto* L = std::get_if<HomLieAlgebra>(&sf.payload);
    if (!L) throw SchemaError("derive expects a hom_lie_algebra file");
    SolutionSpace s;
    if (space == "delta") s = delta_space(*L);
    else if (space == "qc") s = qc_space(*L);
    else if (space == "centroid") s = centroid_space(*L);
    else if (space == "alphader") s = alpha_derivation_space(*L);
    else if (space == "pair17") s = pair_space(*L);
    else throw SchemaError("--space must be one of delta, qc, centroid, "
                           "alphader, pair17");
    out << space << " dim " << s.dim() << "\n";
    if (print_basis)
      for (const Vector& b : s.basis) out << b.str() << "\n";
    if (!opts.json_report.empty())
      write_output(opts.json_report, solution_space_to_json(s), out);
    return kExitPass;
  }

  if (command == "homcheck") {
    StructureFile sf = parse_structure(read_file(file));
    const auto* h = std::get_if<DataHom>(&sf.payload);
    if (!h) throw SchemaError("homcheck expects a data_hom file");
    return report(check_data_hom_detail(*h), opts, out);
  }

  if (command == "roundtrip") {
    AffgebraData d = [&]() {
      if (!fixture.empty()) {
        Matrix alpha = fixture_alpha(fixture, alpha_name, field);
        return sample_valid_data(classical_homlie(fixture, alpha), opts.seed);
      }
      StructureFile sf = parse_structure(read_file(file));
      const auto* dp = std::get_if<AffgebraData>(&sf.payload);
      if (!dp) throw SchemaError("roundtrip expects an affgebra_data file");
      return *dp;
    }();
    HomLieAffgebra s = build_from_data(d);
    AffgebraData back = extract_data(s, Vector(d.field(), d.dim()));
    const bool ok = back == d;
    out << "roundtrip: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitPass : kExitViolation;
  }

  throw SchemaError("unknown command '" + command + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computer algebra for affine Hom-Lie structures"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--json-report", opts.json_report,
                 "Write a JSON report to this path ('-' for stdout)");
  app.add_option("--field", opts.field_text,
                 "Field for --fixture construction: Q or Fp:<p>");
  app.add_option("--seed", opts.seed, "Seed for sampled fixtures");

  std::string file, out_path, at_text = "auto", alpha_file, space = "delta";
  std::string fixture, alpha_name = "id";
  bool print_basis = false;

  auto add_fixture_opts = [&](CLI::App* cmd) {
    cmd->add_option("--fixture", fixture,
                    "Named fixture algebra instead of a file");
    cmd->add_option("--alpha", alpha_name, "Fixture twisting map: id|nonid");
  };

  CLI::App* check = app.add_subcommand("check", "Verify the axioms of a structure file");
  check->add_option("file", file);
  add_fixture_opts(check);

  CLI::App* build = app.add_subcommand("build", "Affgebra from (L; alpha, kappa, lambda, r) data");
  build->add_option("file", file)->required();
  build->add_option("-o,--out", out_path);

  CLI::App* fiber = app.add_subcommand("fiber", "Tangent algebra at a fixed point of alpha");
  fiber->add_option("file", file)->required();
  fiber->add_option("--at", at_text, "Fixed point as JSON array, or 'auto'");
  fiber->add_option("-o,--out", out_path);

  CLI::App* extract = app.add_subcommand("extract", "Recover (L; alpha, kappa, lambda, r) at a fixed point");
  extract->add_option("file", file)->required();
  extract->add_option("--at", at_text);
  extract->add_option("-o,--out", out_path);

  CLI::App* twist = app.add_subcommand("twist", "Yau twist by an endomorphism");
  twist->add_option("file", file)->required();
  twist->add_option("--alpha-file", alpha_file)->required();
  twist->add_option("-o,--out", out_path);

  CLI::App* derive = app.add_subcommand("derive", "Generalized-derivation solution spaces");
  derive->add_option("file", file);
  derive->add_option("--space", space, "delta|qc|centroid|alphader|pair17");
  derive->add_flag("--basis", print_basis, "Print a basis");
  add_fixture_opts(derive);

  CLI::App* homcheck = app.add_subcommand("homcheck", "Verify a data-level homomorphism line by line");
  homcheck->add_option("file", file)->required();

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "extract(build(d), 0) == d");
  roundtrip->add_option("file", file);
  add_fixture_opts(roundtrip);

  for (CLI::App* sub : app.get_subcommands(std::function<bool(CLI::App*)>(
           [](CLI::App*) { return true; })))
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("affalg");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return kExitPass;
    }
    err << e.what() << "\n";
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (file.empty() && fixture.empty() &&
      (command == "check" || command == "derive" || command == "roundtrip")) {
    err << command << ": provide a file or --fixture\n";
    return kExitInputError;
  }

  try {
    return dispatch(command, file, out_path, at_text, alpha_file, space,
                    print_basis, fixture, alpha_name, opts, out, err);
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  } catch (const SchemaError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  } catch (const FieldError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitViolation;
  }
}

} // namespace affalg
