#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtm/errors.hpp"
#include "qtm/tables.hpp"

using namespace qtm;

TEST_CASE("format names parse") {
  CHECK(parse_format("text") == OutputFormat::Text);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
}

TEST_CASE("text tables carry the column order of the source tables") {
  std::vector<DistRow> rows{{0, 1, 1, 1}, {8, 240, 5, 3}};
  std::string text = format_rows(rows, OutputFormat::Text, true);
  CHECK(text ==
        "Dist\tPositions\tUnique wrt M\tUnique wrt M+inv\n"
        "0q\t1\t1\t1\n"
        "8q\t240\t5\t3\n");
  std::string plain = format_rows(rows, OutputFormat::Text, false);
  CHECK(plain.find("0q") == std::string::npos);
}

TEST_CASE("csv and json mirror the text fields") {
  std::vector<DistRow> rows{{5, 89392, 1886, 986}};
  CHECK(format_rows(rows, OutputFormat::Csv, false) ==
        "dist,positions,unique_wrt_m,unique_wrt_m_inv\n"
        "5,89392,1886,986\n");
  std::string json = format_rows(rows, OutputFormat::Json, false);
  CHECK(json.find("\"dist\": 5") != std::string::npos);
  CHECK(json.find("\"positions\": 89392") != std::string::npos);
  CHECK(json.find("\"unique_wrt_m\": 1886") != std::string::npos);
  CHECK(json.find("\"unique_wrt_m_inv\": 986") != std::string::npos);
}
