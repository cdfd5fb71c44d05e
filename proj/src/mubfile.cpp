#include "mubkit/mubfile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mubkit/cyclotomic.hpp"
#include "mubkit/error.hpp"

namespace mubkit {

namespace {

using nlohmann::json;

constexpr const char* kRowOrder = "lex-l";
constexpr const char* kColumnOrder = "lex-mk";

ParseError located_error(std::string_view text, std::size_t offset, const std::string& what) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return ParseError(what, line, column, offset);
}

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw StructuralError(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t unsigned_field(const json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_number_unsigned()) throw StructuralError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::string string_field(const json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_string()) throw StructuralError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string format_complex(std::complex<double> z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace

std::string write_mub_file(const MubSet& set) {
  const auto& em = set.exponents();
  const auto& prov = set.provenance();
  std::string out;
  out.reserve(em.data().size() * 2 + 512);
  out += "{\n";
  out += "  \"format_version\": " + std::to_string(kMubFileVersion) + ",\n";
  out += "  \"p\": " + std::to_string(prov.p) + ",\n";
  out += "  \"r\": " + std::to_string(prov.r) + ",\n";
  out += "  \"modulus\": [";
  for (std::size_t i = 0; i < prov.modulus.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(prov.modulus[i]);
  }
  out += "],\n";
  out += std::string("  \"row_order\": \"") + kRowOrder + "\",\n";
  out += std::string("  \"column_order\": \"") + kColumnOrder + "\",\n";
  out += "  \"route\": \"" + std::string(to_string(prov.route)) + "\",\n";
  out += "  \"base\": \"" + std::string(to_string(em.base())) + "\",\n";
  out += std::string("  \"includes_standard\": ") + (set.includes_standard() ? "true" : "false") + ",\n";
  out += "  \"exponents\": [\n";
  for (std::uint32_t l = 0; l < em.dimension(); ++l) {
    out += "    [";
    const auto row = em.row(l);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += std::to_string(row[c]);
    }
    out += l + 1 < em.dimension() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

MubSet read_mub_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the failure point
    throw located_error(text, e.byte > 0 ? e.byte - 1 : 0, "malformed MUB file");
  }
  if (!doc.is_object()) throw StructuralError("MUB file must be a JSON object");

  static const char* const kKeys[] = {"format_version", "p", "r", "modulus", "row_order", "column_order",
                                      "route", "base", "includes_standard", "exponents"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw StructuralError("unknown field '" + key + "'");
    }
  }
  if (unsigned_field(doc, "format_version") != kMubFileVersion) {
    throw StructuralError("unsupported format_version");
  }
  if (string_field(doc, "row_order") != kRowOrder || string_field(doc, "column_order") != kColumnOrder) {
    throw StructuralError("unsupported row/column ordering tags");
  }

  const Prime p(unsigned_field(doc, "p"));
  const auto r64 = unsigned_field(doc, "r");
  if (r64 < 1 || r64 > 64) throw StructuralError("field 'r' out of range");
  const auto r = static_cast<unsigned>(r64);

  const auto& mod = field(doc, "modulus");
  if (!mod.is_array() || mod.size() != r + 1) throw StructuralError("modulus must list r+1 coefficients");
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : mod) {
    if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= p.value()) {
      throw StructuralError("modulus coefficient must be an integer in [0, p)");
    }
    coeffs.push_back(c.get<std::uint32_t>());
  }
  [[maybe_unused]] const FieldCtx ctx{ModPolynomial(p, coeffs)};  // re-validates irreducibility

  const auto route = parse_route(string_field(doc, "route"));
  const auto base = parse_root_base(string_field(doc, "base"));
  const bool char2 = !p.is_odd();
  if ((route == Route::char2) != char2 || (base == RootBase::i) != char2) {
    throw StructuralError("route/base tags '" + std::string(to_string(route)) + "'/'" +
                          std::string(to_string(base)) + "' do not match p = " + std::to_string(p.value()));
  }
  const auto& std_flag = field(doc, "includes_standard");
  if (!std_flag.is_boolean()) throw StructuralError("field 'includes_standard' must be a boolean");

  ExponentMatrix em(p, r, base);
  const auto& rows = field(doc, "exponents");
  if (!rows.is_array() || rows.size() != em.dimension()) throw StructuralError("exponents must have N rows");
  const auto order = em.root_order();
  for (std::uint32_t l = 0; l < em.dimension(); ++l) {
    const auto& row = rows[l];
    if (!row.is_array() || row.size() != em.columns()) {
      throw StructuralError("exponent row " + std::to_string(l) + " must have N^2 entries");
    }
    auto dst = em.row(l);
    for (std::uint32_t c = 0; c < em.columns(); ++c) {
      const auto& v = row[c];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= order) {
        throw StructuralError("exponent at row " + std::to_string(l) + ", column " + std::to_string(c) +
                              " is not an integer in [0, " + std::to_string(order) + ")");
      }
      dst[c] = v.get<std::uint16_t>();
    }
  }

  Provenance prov;
  prov.p = p.value();
  prov.r = r;
  prov.modulus = std::move(coeffs);
  prov.route = route;
  return MubSet(std::move(em), std_flag.get<bool>(), std::move(prov));
}

void save_mub_file(const MubSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  const auto text = write_mub_file(set);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

MubSet load_mub_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_mub_file(buf.str());
}

std::string write_mub_csv(const MubSet& set) {
  const auto& em = set.exponents();
  const auto roots = root_table(em.root_order());
  const double scale = 1.0 / std::sqrt(static_cast<double>(em.dimension()));
  std::string out = "# lossy: matrix e, rows l (lex), columns (m,k) m-major, entries scaled by 1/sqrt(N)\n";
  for (std::uint32_t l = 0; l < em.dimension(); ++l) {
    const auto row = em.row(l);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_complex(roots[row[c]] * scale);
    }
    out += '\n';
  }
  return out;
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
  json doc = json::object();
  doc["mode"] = std::string(to_string(report.mode));
  doc["dimension"] = report.dimension;
  doc["basis_count"] = report.basis_count;
  doc["tolerance"] = report.tolerance;
  doc["pass"] = report.pass;
  doc["failure_count"] = report.failure_count;
  json classes = json::object();
  for (auto cls : {PairClass::same_vector, PairClass::same_basis, PairClass::cross_basis}) {
    const auto& s = report.summary(cls);
    classes[std::string(to_string(cls))] = {
        {"checked", s.checked}, {"failed", s.failed}, {"worst_deviation", s.worst_deviation}};
  }
  doc["classes"] = classes;
  json failures = json::array();
  for (const auto& f : report.failures) {
    json item = {{"a", {f.a.basis, f.a.index}},
                 {"b", {f.b.basis, f.b.index}},
                 {"class", std::string(to_string(f.cls))},
                 {"detail", f.detail}};
    item["deviation"] = std::isnan(f.deviation) ? json(nullptr) : json(f.deviation);
    failures.push_back(item);
  }
  doc["failures"] = failures;
  if (include_timing) {
    doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return doc.dump(2) + "\n";
}

}  // namespace mubkit
