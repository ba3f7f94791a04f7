// fano4: enumerate, inspect, verify and export the Fano 4-folds X^i_{a,d}.
//
// Exit codes: 0 success, 1 verification mismatch, 2 internal consistency or
// integrity error, 3 invalid arguments.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fano4/fano4.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInternal = 2;
constexpr int kExitBadArgs = 3;

void print_cones(std::ostream& os, const fano4::FamilyParams& p) {
  using namespace fano4;
  const auto k = anticanonical(p);
  const auto ne = ne_generator_kinds(p);
  const auto rays = nef_rays(p);

  os << "Basis of N^1(X): phi*H, G^, E\n";
  os << "-K_X = " << to_string(k) << "\n\n";

  os << "NE(X) generators:";
  for (auto g : ne) os << ' ' << to_string(g);
  os << "\n\nNef cone rays:\n";
  for (const auto& r : rays) {
    os << "  " << to_string(r.label) << " = [" << r.name << "] = " << to_string(r.generator)
       << "\n     face:";
    for (auto g : r.vanishing_face) os << ' ' << to_string(g) << "^perp";
    os << "  contraction: " << to_string(r.contraction) << '\n';
  }

  os << "\nPairings with NE generators:\n" << std::setw(10) << "";
  for (auto g : ne) os << std::setw(8) << to_string(g);
  os << '\n';
  const auto row = [&](const std::string& name, const DivisorClass& D) {
    os << std::setw(10) << name;
    for (auto g : ne) os << std::setw(8) << to_string(pairing(D, g));
    os << '\n';
  };
  row("-K_X", k);
  for (const auto& r : rays) row(to_string(r.label), r.generator);
}

void print_pairing_matrix(std::ostream& os, const fano4::FamilyParams& p) {
  using namespace fano4;
  const auto m = pairing_matrix(p);
  const char* rows[] = {"phi*H", "G^", "E"};
  os << std::setw(8) << "";
  for (auto g : kCurveGenerators) os << std::setw(8) << to_string(g);
  os << '\n';
  for (std::size_t r = 0; r < 3; ++r) {
    os << std::setw(8) << rows[r];
    for (std::size_t c = 0; c < 4; ++c) os << std::setw(8) << to_string(m[r][c]);
    os << '\n';
  }
}

void print_info(std::ostream& os, const fano4::FamilyRecord& r) {
  using namespace fano4;
  const auto& t = r.tangent;
  os << r.label << "  (Z_" << r.params.z_id << ": " << r.params.z().description << ")\n"
     << "  K_X^4             " << r.K4 << '\n'
     << "  K_X^2.c2(X)       " << r.K2c2 << '\n'
     << "  h^0(-K_X)         " << r.h0_antiK << '\n'
     << "  h^{1,2} h^{1,3} h^{2,2}  " << r.h12 << ' ' << r.h13 << ' ' << r.h22 << '\n'
     << "  Bs|-K_X|          " << base_locus_table_text(r.base_locus.kind)
     << " (general member smooth: " << (r.base_locus.general_member_smooth ? "yes" : "no")
     << ")\n"
     << "  rationality       " << to_string(r.rationality);
  if (r.toric_label) os << " (" << to_string(*r.toric_label) << ")";
  os << '\n'
     << "  fibre-like        " << to_string(r.fibre_like) << '\n'
     << "  chi(T_X)          " << t.chi << '\n'
     << "  h^1(T_X)          " << (t.h1_exact ? std::to_string(*t.h1_exact)
                                               : "<= " + std::to_string(t.h1_upper))
     << "  (deformation bound " << t.h1_deformation_bound << ")\n"
     << "  h^0(T_X)          " << (t.h0_exact ? std::to_string(*t.h0_exact)
                                               : "<= " + std::to_string(t.h0_upper))
     << '\n'
     << "  NE generators     " << r.ne_generator_count << '\n'
     << "  nef rays          " << r.nef_ray_count << "\n\n";
  print_cones(os, r.params);
  os << "\nPairing matrix:\n";
  print_pairing_matrix(os, r.params);
}

fano4::FamilyParams admissible_params(int i, int a, int d) {
  const fano4::FamilyParams p{i, a, d};
  fano4::require_admissible(p);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth Fano 4-folds of Picard number 3 with a prime divisor of Picard number 1"};
  app.set_version_flag("--version", fano4::kVersion);
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress informational output");

  auto* list = app.add_subcommand("list", "List the 28 families");

  int zi = 0, a = 0, d = 0;
  auto* info = app.add_subcommand("info", "Full record for one family");
  info->add_option("i", zi, "Index of Z_i (1..7)")->required();
  info->add_option("a", a, "a >= 0")->required();
  info->add_option("d", d, "d >= 1")->required();

  auto* cones = app.add_subcommand("cones", "Cone of curves, nef cone and pairings");
  cones->add_option("i", zi, "Index of Z_i (1..7)")->required();
  cones->add_option("a", a, "a >= 0")->required();
  cones->add_option("d", d, "d >= 1")->required();

  auto* verify = app.add_subcommand("verify", "Check every family against the reference tables");

  std::string format;
  std::string out_path;
  auto* exp = app.add_subcommand("export", "Write all records");
  exp->add_option("--format", format, "json, csv or markdown")->required();
  exp->add_option("--out", out_path, "Output file (default: standard output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& p : fano4::enumerate_families()) {
        std::cout << std::left << std::setw(12) << fano4::family_label(p) << " i=" << p.z_id
                  << " a=" << p.a << " d=" << p.d << '\n';
      }
      if (!quiet) std::cout << fano4::enumerate_families().size() << " families\n";
      return 0;
    }

    if (info->parsed()) {
      print_info(std::cout, fano4::build_record(admissible_params(zi, a, d)));
      return 0;
    }

    if (cones->parsed()) {
      print_cones(std::cout, admissible_params(zi, a, d));
      return 0;
    }

    if (verify->parsed()) {
      const auto report = fano4::verify_all();
      if (!quiet) {
        for (const auto& m : report.mismatches) {
          std::cout << "MISMATCH " << m.family << " " << m.field << ": expected " << m.expected
                    << ", computed " << m.computed << '\n';
        }
        std::cout << report.rows_passed << "/" << report.rows_checked << " families pass, "
                  << report.mismatches.size() << " mismatches\n";
      }
      return report.all_pass() ? 0 : kExitMismatch;
    }

    if (exp->parsed()) {
      const auto fmt = fano4::parse_export_format(format);
      const auto text = fano4::export_records(fano4::build_all_records(), fmt);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
          std::cerr << "cannot open " << out_path << '\n';
          return kExitBadArgs;
        }
        f << text;
      }
      return 0;
    }
  } catch (const fano4::ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const fano4::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const fano4::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
  return 0;
}
