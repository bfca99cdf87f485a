#include <gtest/gtest.h>

#include "p2omega/p2omega.hpp"

using namespace p2omega;

TEST(IO, BundledGVFileMatchesBuiltInTable) {
    EXPECT_EQ(io::load_gv(std::string(P2OMEGA_DATA_DIR) + "/gv_p2.json"), GVTable::p2_bundled());
}

TEST(IO, GVRoundTrip) {
    const GVTable gv = GVTable::p2_bundled();
    EXPECT_EQ(io::parse_gv(io::gv_to_json(gv).dump()), gv);
}

TEST(IO, BigIntegersSurviveAsStrings) {
    GVTable gv;
    gv.set(0, 1, mpz_class("123456789012345678901234567890"));
    const std::string text = io::gv_to_json(gv).dump();
    EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
    EXPECT_EQ(io::parse_gv(text).get(0, 1), mpz_class("123456789012345678901234567890"));
}

TEST(IO, ParseErrorReportsLine) {
    const std::string text = "{\n \"surface\": \"P2\",\n \"entries\": [\n  {\"d\": 1, \"g\": 0, \"n\": \"3\"},,\n ]\n}";
    try {
        io::parse_gv(text);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}

TEST(IO, SemanticErrors) {
    EXPECT_THROW(io::parse_gv("{\"surface\": \"P1xP1\", \"entries\": []}"), InputError);
    EXPECT_THROW(io::parse_gv("{\"entries\": [{\"d\": 1, \"n\": \"3\"}]}"), InputError);
    EXPECT_THROW(io::parse_gv("{\"entries\": [{\"d\": 1, \"g\": 0, \"n\": \"x3\"}]}"), InputError);
    EXPECT_THROW(io::parse_gv("{\"entries\": [{\"d\": 1, \"g\": 2, \"n\": \"3\"}]}"), InputError);
    EXPECT_THROW(io::parse_golden("[]"), InputError);
    EXPECT_THROW(io::parse_golden("[{\"d\": 2, \"coeffs\": [\"1\"]}]"), InputError);
    EXPECT_THROW(io::parse_golden("[{\"d\": 1, \"coeffs\": [\"1\"]}, {\"d\": 1, \"coeffs\": [\"1\"]}]"), InputError);
    EXPECT_THROW(io::parse_refined("[{\"d\": 1, \"terms\": [{\"q\": -1, \"t\": 0, \"c\": \"1\"}]}]"), InputError);
    EXPECT_THROW(io::load_gv("/nonexistent/gv.json"), InputError);
}

TEST(IO, GoldenRoundTrip) {
    auto hats = io::load_golden(std::string(P2OMEGA_DATA_DIR) + "/omega_hat_golden.json");
    ASSERT_EQ(hats.size(), 10u);
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < hats.size(); ++i) arr.push_back(io::hat_to_json(static_cast<int>(i) + 1, hats[i]));
    EXPECT_EQ(io::parse_golden(arr.dump()), hats);
}

TEST(IO, RefinedSampleFile) {
    PoincareTable r = io::load_refined(std::string(P2OMEGA_DATA_DIR) + "/refined_sample.json");
    EXPECT_EQ(r.nvars(), 2);
    EXPECT_TRUE(r.has(1));
    EXPECT_TRUE(r.has(2));
    EXPECT_EQ(r.poly(1).at({0, 4}), 1);
}

TEST(IO, RenderingIsDeterministic) {
    auto recs = solve_omegas(GVTable::p2_bundled(), 4);
    for (auto f : {io::Format::Json, io::Format::Csv, io::Format::Text})
        EXPECT_EQ(io::render_records(recs, f), io::render_records(solve_omegas(GVTable::p2_bundled(), 4), f));
}

TEST(IO, CsvMirrorsJson) {
    auto recs = solve_omegas(GVTable::p2_bundled(), 3);
    auto j = nlohmann::json::parse(io::render_records(recs, io::Format::Json));
    const std::string csv = io::render_records(recs, io::Format::Csv);
    for (const auto& row : j)
        for (const auto& term : row["omega"]) {
            const std::string line = std::to_string(row["d"].get<int>()) + ",omega_half," +
                                     std::to_string(term["e2"].get<int>()) + "," + term["c"].get<std::string>();
            EXPECT_NE(csv.find(line), std::string::npos) << line;
        }
}

TEST(IO, ReportsInAllFormats) {
    TruncatedCheckReport ok = leading_check(6, solve_omegas(GVTable::p2_bundled(), 6).back().omega_hat);
    auto j = nlohmann::json::parse(io::render_reports({ok}, io::Format::Json));
    EXPECT_TRUE(j[0]["pass"].get<bool>());
    EXPECT_EQ(io::render_reports({ok}, io::Format::Text), ok.summary() + "\n");
    EXPECT_NE(io::render_reports({ok}, io::Format::Csv).find("\"leading Betti\",6,"), std::string::npos);
    EXPECT_THROW(io::parse_format("xml"), InputError);
}
