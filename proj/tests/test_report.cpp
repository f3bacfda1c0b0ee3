#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "slex/report.hpp"

using slex::report::ordered_json;

TEST_CASE("numbers are printed with 15 significant digits", "[report]") {
    CHECK(slex::report::format_number(2.80978632134) == "2.80978632134");
    CHECK(slex::report::format_number(0.5) == "0.5");
    CHECK(slex::report::format_number(17.0) == "17");
    CHECK(slex::report::format_number(-1.5e-30) == "-1.5e-30");
    CHECK(slex::report::format_number(2.99766244643916) == "2.99766244643916");
    CHECK(slex::report::format_number(1.0 / 3.0) == "0.333333333333333");
}

TEST_CASE("fixed-point formatting honours the decimal count", "[report]") {
    CHECK(slex::report::format_fixed(2.8097863213407, 6) == "2.809786");
    CHECK(slex::report::format_fixed(29.949881340559, 12) == "29.949881340559");
    CHECK(slex::report::format_fixed(1.9315, 4) == "1.9315");
}

TEST_CASE("canonical JSON survives a parse and re-emit byte-identically", "[report]") {
    ordered_json doc;
    doc["schema"] = "slex/1";
    doc["command"] = "energy";
    doc["params"]["alpha"] = 0.5;
    doc["params"]["l"] = 0;
    doc["result"]["value"] = 2.80977853236172;
    doc["result"]["eps"] = {1.0 / 3.0, -1.5e-30, 12345.6789012345, 0.0};
    doc["result"]["converged"] = true;
    doc["note"] = "quotes \" and \\ backslashes";

    const std::string first = slex::report::canonical_dump(doc);
    const auto reparsed = ordered_json::parse(first);
    const std::string second = slex::report::canonical_dump(reparsed);
    CHECK(first == second);
    CHECK(first.back() == '\n');
}

TEST_CASE("field order is preserved in canonical output", "[report]") {
    ordered_json doc;
    doc["zebra"] = 1;
    doc["alpha"] = 2;
    const std::string s = slex::report::canonical_dump(doc);
    CHECK(s == "{\"zebra\":1,\"alpha\":2}\n");
}

TEST_CASE("csv records are CRLF-terminated and quoted per RFC 4180", "[report]") {
    CHECK(slex::report::csv_line({"a", "b", "c"}) == "a,b,c\r\n");
    CHECK(slex::report::csv_line({"a", "b,c"}) == "a,\"b,c\"\r\n");
    CHECK(slex::report::csv_line({"say \"hi\""}) == "\"say \"\"hi\"\"\"\r\n");
    CHECK(slex::report::csv_line({"2.99766244643916", "0"}) == "2.99766244643916,0\r\n");
}
