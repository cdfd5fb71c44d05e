#include <gtest/gtest.h>

#include <json.hpp>

#include "mubkit/error.hpp"
#include "mubkit/mubfile.hpp"
#include "mubkit/primitive.hpp"

using namespace mubkit;

namespace {

MubSet make_set(unsigned p, unsigned r, Route route) {
  return build_mub_set(FieldCtx(search_primitive_poly(Prime(p), r)), route);
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST(MubFile, RoundTripIsLossless) {
  for (auto [p, r, route] : std::vector<std::tuple<unsigned, unsigned, Route>>{
           {3, 2, Route::tensor}, {5, 1, Route::trace}, {2, 3, Route::char2}, {7, 1, Route::q}}) {
    const auto set = make_set(p, r, route);
    const auto text = write_mub_file(set);
    const auto back = read_mub_file(text);
    EXPECT_EQ(back, set);
    EXPECT_EQ(write_mub_file(back), text);
  }
}

TEST(MubFile, PinnedLayout) {
  const auto text = write_mub_file(build_mub_set(FieldCtx::with_generator(Prime(3), 2), Route::q));
  const std::string expected =
      "{\n"
      "  \"format_version\": 1,\n"
      "  \"p\": 3,\n"
      "  \"r\": 1,\n"
      "  \"modulus\": [1,1],\n"
      "  \"row_order\": \"lex-l\",\n"
      "  \"column_order\": \"lex-mk\",\n"
      "  \"route\": \"q\",\n"
      "  \"base\": \"omega-p\",\n"
      "  \"includes_standard\": true,\n"
      "  \"exponents\": [\n"
      "    [0,0,0,0,0,0,0,0,0],\n"
      "    [0,1,2,1,2,0,2,0,1],\n"
      "    [0,2,1,1,0,2,2,1,0]\n"
      "  ]\n"
      "}\n";
  EXPECT_EQ(text, expected);
  EXPECT_NO_THROW((void)nlohmann::json::parse(text));
  EXPECT_EQ(text.find('.'), std::string::npos);
}

TEST(MubFile, RejectsMixedBaseTags) {
  const auto text = write_mub_file(make_set(3, 1, Route::q));
  EXPECT_THROW(read_mub_file(replace_once(text, "\"omega-p\"", "\"i\"")), StructuralError);
  EXPECT_THROW(read_mub_file(replace_once(text, "\"route\": \"q\"", "\"route\": \"char2\"")), StructuralError);
  const auto two = write_mub_file(make_set(2, 1, Route::char2));
  EXPECT_THROW(read_mub_file(replace_once(two, "\"base\": \"i\"", "\"base\": \"omega-p\"")), StructuralError);
}

TEST(MubFile, RejectsReducibleModulus) {
  const auto text = write_mub_file(make_set(3, 2, Route::q));
  EXPECT_THROW(read_mub_file(replace_once(text, "\"modulus\": [2,1,1]", "\"modulus\": [0,0,1]")), DomainError);
}

TEST(MubFile, ParseErrorCarriesLocation) {
  auto text = write_mub_file(make_set(3, 1, Route::q));
  text = replace_once(text, "[0,1,2,1,2,0,2,0,1]", "[0,1,2,1,2,0,2,0,1}");
  try {
    (void)read_mub_file(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 13u);
    EXPECT_EQ(e.column(), 23u);
    EXPECT_GT(e.offset(), 0u);
    EXPECT_NE(std::string(e.what()).find("line 13"), std::string::npos);
  }
}

TEST(MubFile, RejectsSchemaViolations) {
  const auto text = write_mub_file(make_set(3, 1, Route::q));
  EXPECT_THROW(read_mub_file(replace_once(text, "[0,1,2,1,2,0,2,0,1]", "[0,1,2,1,2,0,2,0,3]")), StructuralError);
  EXPECT_THROW(read_mub_file(replace_once(text, "[0,1,2,1,2,0,2,0,1]", "[0,1,2,1,2,0,2,0]")), StructuralError);
  EXPECT_THROW(read_mub_file(replace_once(text, "\"lex-mk\"", "\"lex-km\"")), StructuralError);
  EXPECT_THROW(read_mub_file(replace_once(text, "\"format_version\": 1", "\"format_version\": 2")), StructuralError);
  EXPECT_THROW(read_mub_file(replace_once(text, "\"p\": 3", "\"p\": 4")), DomainError);
  EXPECT_THROW(read_mub_file(replace_once(text, "\"r\": 1,", "\"r\": 1, \"extra\": 0,")), StructuralError);
  EXPECT_THROW(read_mub_file("[]"), StructuralError);
}

TEST(MubFile, CsvExport) {
  const auto csv = write_mub_csv(make_set(2, 1, Route::char2));
  const auto first_nl = csv.find('\n');
  EXPECT_EQ(csv.substr(0, 8), "# lossy:");
  const auto body = csv.substr(first_nl + 1);
  // row l=1 of the 2x4 matrix: 1, -1, i, -i (scaled by 1/sqrt 2)
  const auto row1 = body.substr(body.find('\n') + 1);
  EXPECT_EQ(row1.substr(0, row1.find(',')), "0.70710678118654746+0i");
  EXPECT_NE(row1.find("-0.70710678118654746+0i"), std::string::npos);
  EXPECT_NE(row1.find("0+0.70710678118654746i"), std::string::npos);
  EXPECT_NE(row1.find("0-0.70710678118654746i"), std::string::npos);
}

TEST(MubFile, ReportJson) {
  auto rep = verify_mub(make_set(3, 1, Route::q), VerifyMode::exact);
  const auto doc = nlohmann::json::parse(report_to_json(rep));
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["mode"], "exact");
  EXPECT_EQ(doc["classes"]["cross-basis"]["checked"], 54);
  EXPECT_FALSE(doc.contains("elapsed_ms"));
  EXPECT_TRUE(nlohmann::json::parse(report_to_json(rep, true)).contains("elapsed_ms"));
}
