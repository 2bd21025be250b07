#include <doctest.h>

#include <cstdlib>
#include <string>

#include "hyperlat/hyperlat.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    hl_string_free(s);
    return out;
}

} // namespace

TEST_CASE("c api: enum")
{
    char* out = nullptr;
    REQUIRE(hl_enum_table("G", 0, 0, 0, 0, "csv", 1, &out) == HL_OK);
    const auto csv = take(out);
    CHECK(csv.rfind("problem,m1,n1,n2,k1,k2,k3", 0) == 0);
    REQUIRE(hl_enum_table("Eprime", -1, 0, 0, 5, "csv", 4, &out) == HL_OK);
    const auto starred = take(out);
    std::size_t lines = 0;
    for (char c : starred) lines += c == '\n';
    CHECK(lines == 23);

    CHECK(hl_enum_table("X", 0, 0, 0, 0, "csv", 1, &out) == HL_PARSE_ERROR);
    CHECK(std::string(hl_last_error()).find("X") != std::string::npos);
    CHECK(hl_enum_table("G", 0, 0, 0, 0, "pdf", 1, &out) == HL_PARSE_ERROR);
    CHECK(hl_enum_table("E", 0, 0, 1, 0, "csv", 1, &out) == HL_DOMAIN_ERROR);
    CHECK(hl_enum_table(nullptr, 0, 0, 0, 0, "csv", 1, &out) == HL_INVALID_ARGUMENT);
    CHECK(hl_enum_table("G", 0, 0, 0, 0, "csv", 1, nullptr) == HL_INVALID_ARGUMENT);

    int clean = -1;
    REQUIRE(hl_enum_check("G", "m1,n1,k1,k2,k3\n0,0,2,1,0\n", &out, &clean) == HL_OK);
    CHECK(clean == 0);
    CHECK(take(out).find("enumerated solutions absent from reference: 9") != std::string::npos);
}

TEST_CASE("c api: maps")
{
    hl_map* tet = nullptr;
    REQUIRE(hl_build("eis-deg3", "2+0d;0+2d", 1, &tet) == HL_OK);
    CHECK(hl_map_darts(tet) == 12);
    CHECK(hl_map_face_size(tet) == 3);
    size_t v = 0, e = 0, f = 0;
    CHECK(hl_map_counts(tet, &v, &e, &f) == HL_OK);
    CHECK(v == 4);
    CHECK(e == 6);
    CHECK(f == 4);

    char* json = nullptr;
    REQUIRE(hl_map_to_json(tet, &json) == HL_OK);
    const std::string text = take(json);
    CHECK(text.find(R"("meta":{"family":"eis-deg3","point":"2+0d;0+2d","subdivide":1,"cells":4})") != std::string::npos);

    hl_map* back = nullptr;
    REQUIRE(hl_map_from_json(text.c_str(), &back) == HL_OK);
    int iso = 0;
    CHECK(hl_map_isomorphic(tet, back, &iso) == HL_OK);
    CHECK(iso == 1);

    hl_map* fine = nullptr;
    REQUIRE(hl_map_subdivide(tet, 2, &fine) == HL_OK);
    CHECK(hl_map_darts(fine) == 48);
    hl_map* built = nullptr;
    REQUIRE(hl_build("eis-deg3", "4+0d;0+4d", 1, &built) == HL_OK);
    CHECK(hl_map_isomorphic(fine, built, &iso) == HL_OK);
    CHECK(iso == 1);
    CHECK(hl_map_subdivide(tet, 0, &fine) == HL_DOMAIN_ERROR);

    char* report = nullptr;
    int ok = 0;
    REQUIRE(hl_map_verify(fine, 0, &report, &ok) == HL_OK);
    CHECK(ok == 1);
    CHECK(take(report).find("status: OK") != std::string::npos);
    REQUIRE(hl_map_verify(fine, 1, &report, &ok) == HL_OK);
    CHECK(take(report).find("\"ok\": true") != std::string::npos);

    char* dot = nullptr;
    REQUIRE(hl_map_dual_dot(tet, &dot) == HL_OK);
    CHECK(take(dot).find("b3 [shape=point]") != std::string::npos);

    hl_map* pil = nullptr;
    REQUIRE(hl_build("gauss-deg2", "2+0i;0+2i", 1, &pil) == HL_OK);
    CHECK(hl_map_dual_dot(pil, &dot) == HL_DOMAIN_ERROR);
    CHECK(hl_map_isomorphic(tet, pil, &iso) == HL_OK);
    CHECK(iso == 0);

    hl_map* bad = nullptr;
    CHECK(hl_build("eis-deg3", "0+2d;2+0d", 1, &bad) == HL_DOMAIN_ERROR);
    CHECK(bad == nullptr);
    CHECK(hl_build("eis-deg3", "oops", 1, &bad) == HL_PARSE_ERROR);
    CHECK(hl_build("eis-deg3", "2+0d;0+2d", 0, &bad) == HL_DOMAIN_ERROR);
    CHECK(hl_map_from_json("{", &bad) == HL_PARSE_ERROR);
    CHECK(std::string(hl_last_error()).find("line 1") != std::string::npos);
    CHECK(hl_build("eis-deg3", "4000000000+0d;0+4000000000d", 1, &bad) == HL_OVERFLOW);

    hl_map_free(tet);
    hl_map_free(back);
    hl_map_free(fine);
    hl_map_free(built);
    hl_map_free(pil);
    hl_map_free(nullptr);
    CHECK(hl_map_darts(nullptr) == 0);
}

TEST_CASE("c api: reduce and count")
{
    char* out = nullptr;
    REQUIRE(hl_reduce("eis-deg3", "2+0d;2+2d", 0, &out) == HL_OK);
    const auto text = take(out);
    CHECK(text.find("canonical: 2+0d;0+2d") != std::string::npos);
    CHECK(text.find("cells: 4") != std::string::npos);
    REQUIRE(hl_reduce("eis-deg3", "2+0d;0+2d", 1, &out) == HL_OK);
    const auto js = take(out);
    CHECK(js.find("\"matrix\": \"[[1,0],[0,1]]\"") != std::string::npos);
    CHECK(js.find("\"unit\": \"1\"") != std::string::npos);
    CHECK(js.find("\"already_canonical\": true") != std::string::npos);
    REQUIRE(hl_reduce("eis-deg2", "0+1d", 0, &out) == HL_OK);
    CHECK(take(out).find("canonical: 1+0d") != std::string::npos);
    CHECK(hl_reduce("gauss-deg2", "0+2i;2+0i", 0, &out) == HL_DOMAIN_ERROR);

    int agree = 0;
    REQUIRE(hl_count_series("eis-deg2", 8, 1, 2, &out, &agree) == HL_OK);
    CHECK(agree == 1);
    CHECK(take(out).find("8,1,1,pass") != std::string::npos);
    CHECK(hl_count_series("eis-deg2", 1000, 0, 1, &out, nullptr) == HL_BUDGET_EXCEEDED);
    CHECK(hl_count_series("eis-deg2", -1, 0, 1, &out, nullptr) == HL_INVALID_ARGUMENT);
    CHECK(hl_count_budget() == 96);
    CHECK(std::string(hl_status_name(HL_BUDGET_EXCEEDED)) == "budget exceeded");
    CHECK(std::string(hl_version()).size() > 0);
}
