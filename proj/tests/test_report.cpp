#include "solvknot/solvknot.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace solvknot;
using namespace solvknot::report;

namespace {

RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

RunConfig small_config(std::uint64_t seed = 7) {
    RunConfig c;
    c.gammaParams = {{0, -1}, {2, 1}};
    c.searchRadius = 2;
    c.randomSeed = seed;
    return c;
}

// Built once: the small report is shared by several tests.
const Report& small_report() {
    static const Report R = verify_all(small_config());
    return R;
}

}  // namespace

TEST(Config, DefaultsAndKeys) {
    RunConfig d;
    EXPECT_EQ(d.gammaParams.size(), 6u);
    EXPECT_EQ(d.searchRadius, 6);
    auto c = parse("# comment\ngammaParams = (0,-1), (2,1)\nsearchRadius = 3\nrandomSeed = 5\noutputFormat = md\n");
    EXPECT_EQ(c.gammaParams, (std::vector<std::pair<long long, int>>{{0, -1}, {2, 1}}));
    EXPECT_EQ(c.searchRadius, 3);
    EXPECT_EQ(c.randomSeed, 5u);
    EXPECT_EQ(c.outputFormat, OutputFormat::Markdown);
    EXPECT_EQ(parse("").gammaParams, d.gammaParams);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(parse("colour = red\n"), ConfigError);
    EXPECT_THROW(parse("searchRadius\n"), ConfigError);
    EXPECT_THROW(parse("searchRadius = many\n"), ConfigError);
    EXPECT_THROW(parse("searchRadius = 0\n"), ConfigError);
    EXPECT_THROW(parse("gammaParams = (1,1)\n"), ConfigError);
    EXPECT_THROW(parse("gammaParams = (0,-1) (0,-1)\n"), ConfigError);
    EXPECT_THROW(parse("gammaParams = (0 -1)\n"), ConfigError);
    EXPECT_THROW(parse("outputFormat = xml\n"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/solvknot.cfg"), ConfigError);
}

TEST(Config, Formats) {
    EXPECT_EQ(parse_format("json"), OutputFormat::Json);
    EXPECT_EQ(parse_format("markdown"), OutputFormat::Markdown);
    EXPECT_THROW(parse_format("JSON"), ConfigError);
}

TEST(ReportRecords, DuplicateIdsAreRejected) {
    Report R;
    R.add("a.b", "here", true, "fine");
    EXPECT_THROW(R.add("a.b", "there", false, "again"), std::logic_error);
    EXPECT_EQ(R.exit_code(), 0);
    R.add("a.c", "here", false, "broken");
    EXPECT_EQ(R.exit_code(), 1);
    EXPECT_EQ(R.counts()["total"], 2);
    EXPECT_THROW(R.at("missing"), std::out_of_range);
}

TEST(ReportRecords, StatusNames) {
    EXPECT_EQ(status_name(Status::Bounded, 6), "bounded(6)");
    EXPECT_EQ(status_name(Status::External, 0), "external");
}

TEST(ReportJson, Structure) {
    auto doc = Json::parse(to_json_text(small_report()));
    EXPECT_EQ(doc["schema"], "solvknot-report/1");
    ASSERT_TRUE(doc["claims"].is_array());
    EXPECT_EQ(doc["counts"]["total"], doc["claims"].size());
    for (const auto& c : doc["claims"]) {
        for (const char* k : {"claimId", "location", "status", "summary", "payload"}) EXPECT_TRUE(c.contains(k)) << k;
        const std::string s = c["status"];
        EXPECT_TRUE(s == "pass" || s == "fail" || s == "external" || s.rfind("bounded(", 0) == 0) << s;
    }
    EXPECT_EQ(doc["config"]["searchRadius"], 2);
}

TEST(ReportJson, Deterministic) {
    EXPECT_EQ(to_json_text(small_report()), to_json_text(verify_all(small_config())));
}

TEST(ReportJson, StatusesDoNotDependOnTheSeed) {
    const Report other = verify_all(small_config(99));
    const auto& a = small_report().records();
    const auto& b = other.records();
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].claimId, b[i].claimId);
        EXPECT_EQ(a[i].status_text(), b[i].status_text()) << a[i].claimId;
    }
}

TEST(ReportMarkdown, ListsEveryClaim) {
    const std::string md = to_markdown(small_report());
    for (const auto& r : small_report().records()) EXPECT_NE(md.find(r.claimId), std::string::npos) << r.claimId;
}

TEST(Query, Answers) {
    EXPECT_EQ(query::orbit("g+", "x^2y^2z^-2")["n"], 3);
    EXPECT_EQ(query::g6_order("j")["order"], 6);
    EXPECT_EQ(query::g6_order("d^2 jb")["order"], "infinite");
    EXPECT_EQ(query::doubly_slice("pi(0,-1)")["doublySlice"], true);
    EXPECT_EQ(query::doubly_slice("G(+)")["doublySlice"], false);
    EXPECT_EQ(query::g6_meridianal("ja")["class"], "[ja]");
    EXPECT_THROW(query::g6_centralizer("x"), std::invalid_argument);
    std::istringstream in("e = 2\neta = -1\n");
    auto G = query::parse_gamma_group_config(in);
    EXPECT_EQ(G.q(), 5);
    std::istringstream bad("e = 1\neta = 1\n");
    EXPECT_THROW(query::parse_gamma_group_config(bad), ConfigError);
}
