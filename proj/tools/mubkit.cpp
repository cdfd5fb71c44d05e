// mubkit command-line interface: poly search | gen | verify | rep | field.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubkit/construct.hpp"
#include "mubkit/error.hpp"
#include "mubkit/field.hpp"
#include "mubkit/mubfile.hpp"
#include "mubkit/primitive.hpp"
#include "mubkit/rep.hpp"
#include "mubkit/verify.hpp"

namespace {

using namespace mubkit;

enum ExitCode { kPass = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

constexpr std::uint64_t kDefaultVerifyCap = 125;

std::uint64_t size_cap(std::uint64_t fallback) {
  const char* env = std::getenv("MUBKIT_MAX_N");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw StructuralError(std::string("MUBKIT_MAX_N='") + env + "' is not an integer");
  }
}

std::vector<std::uint32_t> parse_coeff_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw StructuralError("bad coefficient '" + item + "' in --poly");
    }
  }
  if (out.empty()) throw StructuralError("--poly needs coefficients c0,c1,...,cr");
  return out;
}

// Field selection shared by gen, rep and field.
struct FieldArgs {
  std::uint64_t p = 0;
  unsigned r = 1;
  std::string poly;
  std::uint32_t generator = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "prime characteristic")->required();
    cmd->add_option("--r", r, "extension degree")->check(CLI::PositiveNumber);
    cmd->add_option("--poly", poly, "modulus coefficients c0,c1,...,cr (constant term first)");
    cmd->add_option("--generator", generator, "primitive root used as x when r = 1");
  }

  FieldCtx resolve(std::uint64_t cap) const {
    const Prime prime(p);
    if (!poly.empty() && generator != 0) throw StructuralError("--poly and --generator are exclusive");
    if (!poly.empty()) {
      const auto coeffs = parse_coeff_list(poly);
      if (coeffs.size() != r + 1) {
        throw StructuralError("--poly lists " + std::to_string(coeffs.size()) + " coefficients, degree " +
                              std::to_string(r) + " needs " + std::to_string(r + 1));
      }
      const ModPolynomial f(prime, coeffs);
      if (!f.is_monic()) throw StructuralError("modulus " + f.to_string() + " is not monic");
      if (ipow(p, r) > cap) throw CapacityError("p^r exceeds cap " + std::to_string(cap));
      if (const auto factor = find_factor(f)) {
        throw DomainError("modulus " + f.to_string() + " is reducible: divisible by " + factor->to_string());
      }
      return FieldCtx(f);
    }
    if (generator != 0) {
      if (r != 1) throw StructuralError("--generator applies to r = 1 only");
      if (generator >= prime.value() || order_mod(generator, prime) != prime.value() - 1) {
        throw DomainError(std::to_string(generator) + " is not a primitive root mod " + std::to_string(p));
      }
      return FieldCtx::with_generator(prime, generator);
    }
    return FieldCtx(search_primitive_poly(prime, r, cap));
  }
};

std::string label_string(std::span<const std::uint32_t> label) {
  if (label.size() == 1) return std::to_string(label[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(label[i]);
  }
  return out + ")";
}

std::string element_string(const FieldElement& e) {
  return e.size() == 1 ? std::to_string(e[0]) : e.to_tuple_string();
}

int cmd_poly_search(std::uint64_t p, unsigned r, bool irreducible_only) {
  const Prime prime(p);
  const auto cap = size_cap(kDefaultMaxFieldSize);
  const auto f = irreducible_only ? search_irreducible_poly(prime, r, cap) : search_primitive_poly(prime, r, cap);
  std::cout << f.to_string() << "\n";
  if (r == 1 && !irreducible_only) {
    std::cerr << "note: x = " << (p - f.coeff(0)) % p
              << " (least primitive root); pass --generator to other commands to pick another\n";
  }
  return kPass;
}

int cmd_gen(const FieldArgs& fa, const std::string& route_name, const std::string& out_path,
            const std::string& format, bool print_labels) {
  const auto ctx = fa.resolve(size_cap(kDefaultMaxFieldSize));
  Route route = ctx.prime().is_odd() ? Route::q : Route::char2;
  if (!route_name.empty()) route = parse_route(route_name);
  const auto set = build_mub_set(ctx, route);

  std::string text = format == "csv" ? write_mub_csv(set) : write_mub_file(set);
  if (out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open '" + out_path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    std::cout << "wrote " << out_path << ": p=" << ctx.characteristic() << " r=" << ctx.degree()
              << " N=" << ctx.size() << " modulus=" << ctx.modulus().to_string() << " route=" << to_string(route)
              << " bases=" << set.basis_count() << (format == "csv" ? " (csv, lossy)" : "") << "\n";
  }
  if (print_labels) {
    const auto& em = set.exponents();
    for (std::uint32_t l = 0; l < em.dimension(); ++l) {
      const auto labels = decode_tensor_labels(em, l);
      std::cout << "row " << element_string(ctx.element(l)) << ": ";
      if (!labels) {
        std::cout << "not a character tensor\n";
        continue;
      }
      for (std::size_t j = 0; j < labels->size(); ++j) std::cout << (j ? " x " : "") << "chi" << (*labels)[j];
      std::cout << "\n";
    }
  }
  return kPass;
}

int cmd_verify(const std::string& path, const std::string& mode_name, double tol, const std::string& report_path,
               bool timing) {
  const auto mode = parse_verify_mode(mode_name);
  std::optional<MubSet> set;
  try {
    set = load_mub_file(path);
  } catch (const CapacityError&) {
    throw;
  } catch (const Error& e) {
    std::cerr << "verify: cannot read " << path << ": " << e.what() << "\n";
    return kVerifyFailed;
  }
  const auto cap = size_cap(kDefaultVerifyCap);
  if (set->dimension() > cap) {
    throw CapacityError("N = " + std::to_string(set->dimension()) + " exceeds verification cap " +
                        std::to_string(cap));
  }
  const auto report = verify_mub(*set, mode, tol);

  std::cout << "verify " << path << ": N=" << report.dimension << " bases=" << report.basis_count
            << " mode=" << to_string(mode);
  if (mode == VerifyMode::numeric) std::cout << " tol=" << tol;
  std::cout << "\n";
  for (auto cls : {PairClass::same_vector, PairClass::same_basis, PairClass::cross_basis}) {
    const auto& s = report.summary(cls);
    std::cout << "  " << to_string(cls) << ": checked=" << s.checked << " failed=" << s.failed
              << " worst_deviation=" << s.worst_deviation << "\n";
  }
  for (const auto& f : report.failures) {
    std::cout << "  FAIL basis " << f.a.basis << " vector " << f.a.index << " vs basis " << f.b.basis << " vector "
              << f.b.index << " [" << to_string(f.cls) << "]: " << f.detail << "\n";
  }
  if (report.failure_count > report.failures.size()) {
    std::cout << "  ... " << report.failure_count - report.failures.size() << " more failures\n";
  }
  if (timing) {
    std::cout << "  elapsed_ms=" << std::chrono::duration<double, std::milli>(report.elapsed).count() << "\n";
  }
  std::cout << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";

  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw Error("cannot open '" + report_path + "' for writing");
    out << report_to_json(report, timing);
  }
  return report.pass ? kPass : kVerifyFailed;
}

void print_table(const char* name, const MultiplicityTable& t, bool occurring_only) {
  std::cout << name << ": {";
  bool first = true;
  for (std::size_t i = 0; i < t.label_count(); ++i) {
    if (occurring_only && t.at(i) == 0) continue;
    auto label = t.label(i);
    std::string text;
    if (occurring_only) {
      const auto half = label.size() / 2;
      const std::span<const std::uint32_t> all(label);
      text = "(" + label_string(all.first(half)) + "," + label_string(all.subspan(half)) + ")";
    } else {
      text = label_string(label);
    }
    std::cout << (first ? "" : ", ") << text << ":" << t.at(i);
    first = false;
  }
  std::cout << "}\n";
}

int cmd_rep(const FieldArgs& fa) {
  const auto ctx = fa.resolve(size_cap(kDefaultMaxFieldSize));
  const auto n = ctx.size();
  std::cout << "GF(" << ctx.characteristic() << "^" << ctx.degree() << ") modulus " << ctx.modulus().to_string()
            << "\n";
  if (ctx.prime().is_odd()) {
    const auto omega = rep_multiplicities_omega(ctx);
    print_table("Omega", omega, false);
    std::cout << "  trivial x" << omega.at(0) << ", " << omega.labels_with(2) << " labels x2, "
              << omega.labels_with(0) << " labels x0 (expected " << (n - 1) / 2 << " x2)\n";
  } else {
    std::cout << "Omega: suppressed (the multiplicity claim concerns odd p)\n";
  }
  const auto reg = rep_multiplicities_R(ctx);
  print_table("R", reg, false);
  std::cout << "  " << reg.labels_with(1) << " of " << reg.label_count() << " labels x1\n";
  if (ctx.prime().is_odd()) {
    const auto joint = rep_multiplicities_joint(ctx);
    print_table("joint", joint, true);
    std::cout << "  " << joint.labels_with(1) << " labels x1, " << joint.labels_with(0) << " labels x0, max "
              << (joint.labels_with(1) + joint.labels_with(0) == joint.label_count() ? 1 : 2) << "\n";
  } else {
    std::cout << "joint: suppressed (the multiplicity claim concerns odd p)\n";
  }
  return kPass;
}

std::string matrix_string(const BetaTables& beta, unsigned i) {
  std::string out = "[";
  for (unsigned a = 0; a < beta.degree(); ++a) {
    out += a ? ",[" : "[";
    for (unsigned b = 0; b < beta.degree(); ++b) {
      if (b) out += ',';
      out += std::to_string(beta(i, a, b));
    }
    out += "]";
  }
  return out + "]";
}

int cmd_field(const FieldArgs& fa) {
  const auto ctx = fa.resolve(size_cap(kDefaultMaxFieldSize));
  const bool r1 = ctx.degree() == 1;
  const auto gen = ctx.x();
  std::cout << "GF(" << ctx.characteristic() << "^" << ctx.degree() << ") modulus " << ctx.modulus().to_string()
            << "\n";
  std::cout << "x is primitive: " << (ctx.x_is_primitive() ? "yes" : "no") << "\n";
  const std::string base = r1 ? std::to_string(gen[0]) : "x";

  // Powers until the walk returns to 1.
  std::vector<FieldElement> powers;
  auto cur = ctx.one();
  for (std::uint32_t j = 1; j < ctx.size(); ++j) {
    cur = ctx.mul(cur, gen);
    powers.push_back(cur);
    if (cur == ctx.one()) break;
  }
  std::cout << "powers:\n";
  for (std::size_t j = 0; j < powers.size(); ++j) {
    std::cout << base << "^" << j + 1 << " = ";
    if (r1) {
      std::cout << powers[j][0] << "\n";
    } else {
      std::cout << powers[j].to_tuple_string() << " = " << powers[j].to_poly_string() << "\n";
    }
  }
  std::cout << "q mapping (l -> l^2):\n";
  const auto squares = q_table(ctx);
  if (ctx.x_is_primitive()) {
    for (const auto& l : powers) {
      std::cout << element_string(l) << " -> " << element_string(ctx.element(squares[ctx.index_of(l)])) << "\n";
    }
  } else {
    for (std::uint32_t i = 1; i < ctx.size(); ++i) {
      std::cout << element_string(ctx.element(i)) << " -> " << element_string(ctx.element(squares[i])) << "\n";
    }
  }
  for (unsigned i = 0; i < ctx.degree(); ++i) {
    std::cout << "beta_" << i << " = " << matrix_string(ctx.beta(), i) << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mubkit: complete sets of mutually unbiased bases in prime-power dimensions"};
  app.require_subcommand(1);

  auto* poly = app.add_subcommand("poly", "polynomial utilities");
  poly->require_subcommand(1);
  auto* search = poly->add_subcommand("search", "lex-least primitive modulus of degree r");
  std::uint64_t search_p = 0;
  unsigned search_r = 1;
  bool require_primitive = true;
  bool irreducible_only = false;
  search->add_option("--p", search_p, "prime characteristic")->required();
  search->add_option("--r", search_r, "degree")->check(CLI::PositiveNumber);
  search->add_flag("--require-primitive", require_primitive, "require x to be primitive (default)");
  search->add_flag("--irreducible", irreducible_only, "accept any irreducible modulus");

  auto* gen = app.add_subcommand("gen", "construct a MUB set and write it");
  FieldArgs gen_field;
  gen_field.attach(gen);
  std::string route_name, out_path, format = "json";
  bool print_labels = false;
  gen->add_option("--route", route_name, "trace | q | tensor | char2 (default q, char2 for p = 2)");
  gen->add_option("--out", out_path, "output path, '-' for stdout")->required();
  gen->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  gen->add_flag("--print-labels", print_labels, "print the character labels of every row");

  auto* verify = app.add_subcommand("verify", "certify a MUB file");
  std::string verify_path, mode_name = "numeric", report_path;
  double tol = kDefaultTolerance;
  bool timing = false;
  verify->add_option("path", verify_path, "MUB file")->required();
  verify->add_option("--mode", mode_name, "numeric | exact")->check(CLI::IsMember({"numeric", "exact"}));
  verify->add_option("--tol", tol, "numeric tolerance");
  verify->add_option("--report", report_path, "write a JSON report");
  verify->add_flag("--timing", timing, "include elapsed time in the output");

  auto* rep = app.add_subcommand("rep", "multiplicity tables of the Omega, R and joint families");
  FieldArgs rep_field;
  rep_field.attach(rep);

  auto* field = app.add_subcommand("field", "power table of x and beta matrices");
  FieldArgs field_field;
  field_field.attach(field);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*search) return cmd_poly_search(search_p, search_r, irreducible_only && !search->count("--require-primitive"));
    if (*gen) return cmd_gen(gen_field, route_name, out_path, format, print_labels);
    if (*verify) return cmd_verify(verify_path, mode_name, tol, report_path, timing);
    if (*rep) return cmd_rep(rep_field);
    if (*field) return cmd_field(field_field);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
