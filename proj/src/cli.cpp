#include "liebra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liebra/catalog.hpp"
#include "liebra/dercalc.hpp"
#include "liebra/freenilp.hpp"
#include "liebra/json_io.hpp"
#include "liebra/sl2rep.hpp"

namespace liebra::cli {

namespace {

std::map<std::string, Rational> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, Rational> m;
  for (const auto& kv : kvs) {
    const auto pos = kv.find('=');
    if (pos == std::string::npos || pos == 0)
      throw std::invalid_argument("--param expects name=value, got '" + kv + "'");
    m[kv.substr(0, pos)] = Rational::parse(kv.substr(pos + 1));
  }
  return m;
}

void emit(const std::string& text, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_file);
  if (!f) throw std::invalid_argument("cannot open '" + out_file + "' for writing");
  f << text;
}

// Renders a coordinate vector as a combination of basis labels.
std::string combo(const LieAlgebra& a, const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != Rational(1)) s += v[i].str() + "*";
    s += a.label(i);
  }
  return s.empty() ? "0" : s;
}

std::string dims_str(const std::vector<Subspace>& series) {
  std::string s;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) s += " > ";
    s += std::to_string(series[i].dim());
  }
  return s;
}

std::string weights_str(const std::vector<Rational>& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += w[i].str();
  }
  return s + "}";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for two-generator nilpotent Lie algebras, their "
               "derivations, and the solvable and Levi extensions built on them",
               "liebra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "liebra 1.0.0");
  int rc = 0;

  // ---- build ----
  auto* c_build = app.add_subcommand("build", "construct an algebra and print it as JSON");
  std::size_t free_t = 0;
  std::string cat_name, cat_dir, out_file;
  std::vector<std::string> param_kv;
  c_build->add_option("--free-nilpotent", free_t,
                      "degree cap t of the free nilpotent algebra on two generators (1..8)")
      ->check(CLI::Range(std::size_t(1), std::size_t(8)));
  c_build->add_option("--catalog", cat_name, "catalog entry name (see `liebra list`)");
  c_build->add_option("--param", param_kv, "entry parameter, name=rational (repeatable)");
  c_build->add_option("--dir", cat_dir, "catalog directory (default: built-in data)");
  c_build->add_option("--out", out_file, "write to a file instead of stdout");
  c_build->callback([&] {
    const bool have_free = free_t > 0, have_cat = !cat_name.empty();
    if (have_free == have_cat)
      throw std::invalid_argument("build needs exactly one of --free-nilpotent or --catalog");
    if (have_free) {
      emit(write_algebra_json(build_free_nilpotent(free_t).alg()) + "\n", out_file, out);
      return;
    }
    const Catalog c = Catalog::load(cat_dir);
    const CatalogEntry& e = c.entry(cat_name);
    if (e.negative_control)
      err << "warning: '" << e.name
          << "' is a negative control; its table is deliberately defective\n";
    emit(write_algebra_json(e.build(parse_params(param_kv)).alg) + "\n", out_file, out);
  });

  // ---- list ----
  auto* c_list = app.add_subcommand("list", "list the catalog entries");
  std::string list_dir;
  c_list->add_option("--dir", list_dir, "catalog directory (default: built-in data)");
  c_list->callback([&] {
    const Catalog c = Catalog::load(list_dir);
    for (const auto& e : c.entries()) {
      out << e.name << "  dim=" << e.claims.dim;
      if (!e.params.empty()) {
        out << "  params=";
        for (std::size_t i = 0; i < e.params.size(); ++i) out << (i ? "," : "") << e.params[i];
      }
      if (e.negative_control) out << "  [negative control]";
      out << "\n";
    }
    out << c.entries().size() << " entries in " << c.dir() << "\n";
  });

  // ---- check ----
  auto* c_check = app.add_subcommand("check", "verify antisymmetry and the Jacobi identity");
  std::string check_file;
  c_check->add_option("file", check_file, "algebra JSON file")->required();
  c_check->callback([&] {
    const LieAlgebra a = read_algebra_file(check_file);
    const auto defects = jacobi_defect(a);
    if (defects.empty()) {
      out << "ok: dim " << a.dim() << ", the Jacobi identity holds\n";
      return;
    }
    out << "the Jacobi identity fails at " << defects.size() << " triple(s):\n";
    for (const auto& d : defects)
      out << "  J(" << a.label(d.i) << ", " << a.label(d.j) << ", " << a.label(d.k)
          << ") = " << combo(a, d.residual) << "\n";
    rc = 1;
  });

  // ---- derivations ----
  auto* c_der = app.add_subcommand("derivations", "compute a basis of the derivation algebra");
  std::string der_file;
  bool der_serial = false, der_dim_only = false;
  c_der->add_option("file", der_file, "algebra JSON file")->required();
  c_der->add_flag("--serial", der_serial, "force the serial reference kernels");
  c_der->add_flag("--dim-only", der_dim_only, "print only the dimension");
  c_der->callback([&] {
    const LieAlgebra a = read_algebra_file(der_file);
    const DerivationSpace ds = derivation_space(a, der_serial ? Exec::serial : Exec::automatic);
    out << "dim " << ds.dim() << "\n";
    if (der_dim_only) return;
    for (std::size_t i = 0; i < ds.dim(); ++i) out << "\n" << ds.basis_matrix(i).str();
  });

  // ---- series ----
  auto* c_series = app.add_subcommand("series", "lower central and derived series");
  std::string series_file;
  c_series->add_option("file", series_file, "algebra JSON file")->required();
  c_series->callback([&] {
    const LieAlgebra a = read_algebra_file(series_file);
    out << "lower central: " << dims_str(lower_central_series(a)) << "\n";
    out << "derived:       " << dims_str(derived_series(a)) << "\n";
    if (is_nilpotent(a))
      out << "nilpotent of nilindex " << nilindex(a) << ", type " << type_of(a) << "\n";
    else
      out << "not nilpotent; " << (is_solvable(a) ? "solvable" : "not solvable") << "\n";
  });

  // ---- center ----
  auto* c_center = app.add_subcommand("center", "compute the center");
  std::string center_file;
  c_center->add_option("file", center_file, "algebra JSON file")->required();
  c_center->callback([&] {
    const LieAlgebra a = read_algebra_file(center_file);
    const Subspace z = center(a);
    out << "dim " << z.dim() << "\n";
    for (std::size_t i = 0; i < z.dim(); ++i) out << "  " << combo(a, z.basis().row(i)) << "\n";
  });

  // ---- quotient ----
  auto* c_quot = app.add_subcommand("quotient", "quotient by an ideal");
  std::string quot_file, quot_ideal, quot_out;
  c_quot->add_option("file", quot_file, "algebra JSON file")->required();
  c_quot->add_option("--ideal", quot_ideal, "matrix JSON file whose rows span the ideal")
      ->required();
  c_quot->add_option("--out", quot_out, "write to a file instead of stdout");
  c_quot->callback([&] {
    const LieAlgebra a = read_algebra_file(quot_file);
    const Subspace ideal = Subspace::span(read_matrix_file(quot_ideal));
    emit(write_algebra_json(quotient(a, ideal)) + "\n", quot_out, out);
  });

  // ---- extend ----
  auto* c_ext = app.add_subcommand(
      "extend", "adjoin commuting derivations (optionally with generator brackets)");
  std::string ext_file, ext_tau, ext_out;
  std::vector<std::string> ext_ders, ext_labels;
  c_ext->add_option("file", ext_file, "algebra JSON file")->required();
  c_ext->add_option("--der", ext_ders, "matrix JSON file of an adjoined derivation (repeatable)")
      ->required();
  c_ext->add_option("--label", ext_labels, "label for each adjoined generator (repeatable)");
  c_ext->add_option("--tau", ext_tau,
                    "JSON file with generator brackets: [{\"s\":0,\"t\":1,\"value\":[...]}]");
  c_ext->add_option("--out", ext_out, "write to a file instead of stdout");
  c_ext->callback([&] {
    const LieAlgebra a = read_algebra_file(ext_file);
    std::vector<Matrix> ders;
    for (const auto& f : ext_ders) ders.push_back(read_matrix_file(f));
    std::vector<ExtensionBracket> tau;
    if (!ext_tau.empty()) {
      const auto j = nlohmann::json::parse(read_text_file(ext_tau));
      for (const auto& row : j) {
        ExtensionBracket b;
        b.s = row.at("s").get<std::size_t>();
        b.t = row.at("t").get<std::size_t>();
        for (const auto& v : row.at("value")) b.value.push_back(Rational::parse(v.get<std::string>()));
        tau.push_back(std::move(b));
      }
    }
    std::vector<std::string> labels = ext_labels;
    if (labels.empty()) {
      const char* defaults[] = {"x", "y", "u", "s"};
      for (std::size_t i = 0; i < ders.size(); ++i)
        labels.push_back(i < 4 ? defaults[i] : "g" + std::to_string(i));
    }
    emit(write_algebra_json(extend(a, ders, tau, labels)) + "\n", ext_out, out);
  });

  // ---- conjugate ----
  auto* c_conj = app.add_subcommand("conjugate",
                                    "transport a derivation along an automorphism (phi^-1 d phi)");
  std::string conj_file, conj_phi, conj_der, conj_out;
  c_conj->add_option("file", conj_file, "algebra JSON file")->required();
  c_conj->add_option("--phi", conj_phi, "matrix JSON file, an automorphism")->required();
  c_conj->add_option("--der", conj_der, "matrix JSON file, a derivation")->required();
  c_conj->add_option("--out", conj_out, "write to a file instead of stdout");
  c_conj->callback([&] {
    const LieAlgebra a = read_algebra_file(conj_file);
    const Matrix phi = read_matrix_file(conj_phi);
    const Matrix d = read_matrix_file(conj_der);
    emit(write_matrix_json(conjugate(a, phi, d)) + "\n", conj_out, out);
  });

  // ---- sl2-decompose ----
  auto* c_sl2 = app.add_subcommand(
      "sl2-decompose", "decompose a diagonalizable weight action into irreducible strings");
  std::string sl2_matrix;
  c_sl2->add_option("--matrix", sl2_matrix, "matrix JSON file of the weight action")->required();
  c_sl2->callback([&] {
    const Matrix h = read_matrix_file(sl2_matrix);
    const auto weights = weight_multiset(h);
    out << "weights " << weights_str(weights) << "\n";
    const ModuleDecomposition dec = highest_weight_decomposition(weights);
    out << "decomposition " << dec.str() << "\n";
  });

  // ---- pencil-test ----
  auto* c_pencil = app.add_subcommand(
      "pencil-test", "decide whether some nonzero combination of one or two actions is nilpotent");
  std::vector<std::string> pencil_files;
  c_pencil->add_option("files", pencil_files, "one or two matrix JSON files")
      ->expected(1, 2)
      ->required();
  c_pencil->callback([&] {
    std::vector<Matrix> mats;
    for (const auto& f : pencil_files) mats.push_back(read_matrix_file(f));
    out << "nilpotent combination exists: " << (pencil_has_nilpotent(mats) ? "yes" : "no") << "\n";
  });

  // ---- fingerprint ----
  auto* c_fp = app.add_subcommand("fingerprint", "isomorphism-invariant summary of an algebra");
  std::string fp_file, fp_nil;
  c_fp->add_option("file", fp_file, "algebra JSON file")->required();
  c_fp->add_option("--nilradical", fp_nil, "matrix JSON file whose rows span the nilradical");
  c_fp->callback([&] {
    const LieAlgebra a = read_algebra_file(fp_file);
    std::optional<Subspace> nil;
    if (!fp_nil.empty()) nil = Subspace::span(read_matrix_file(fp_nil));
    out << invariant_fingerprint(a, nil).str() << "\n";
  });

  // ---- audit ----
  auto* c_audit = app.add_subcommand(
      "audit", "re-verify the bundled classification data against independent construction");
  std::string audit_dir, audit_out;
  bool audit_neg = false, audit_serial = false;
  c_audit->add_option("--dir", audit_dir, "catalog directory (default: built-in data)");
  c_audit->add_option("--out", audit_out, "write the report to a file as well");
  c_audit->add_flag("--negative-controls", audit_neg,
                    "run only the misprint witnesses (defects that must reproduce)");
  c_audit->add_flag("--serial", audit_serial, "force the serial reference kernels");
  c_audit->callback([&] {
    const Catalog c = Catalog::load(audit_dir);
    const AuditReport r = audit_neg
                              ? misprint_witnesses(c)
                              : audit_all(c, audit_serial ? Exec::serial : Exec::automatic);
    out << r.text();
    if (!audit_out.empty()) emit(r.text(), audit_out, out);
    if (!r.all_ok()) rc = 1;
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    // unreadable files and other IO-level problems are input errors
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

} // namespace liebra::cli
