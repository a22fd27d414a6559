#include "newtonfan/report.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace nf;
using oracle::P;
using oracle::Q;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(NF_TEST_DATA) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string error_of(const std::string& text) {
    try {
        parse_input(text, "doc.json");
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Input, SupportDocument) {
    auto d = parse_input(R"({"variables":["x","y"],"support":[[2,0],[0,2],["3/4","1"]]})");
    ASSERT_TRUE(d.support);
    EXPECT_EQ(to_support(d).points, (std::vector<Point>{P({0, 2}), Q({"3/4", "1"}), P({2, 0})}));
    EXPECT_THROW(to_family(d), InputError);
}

TEST(Input, TermsDocumentWithParameters) {
    auto d = parse_input(slurp("bs_family.json"), "bs_family.json");
    auto D = to_family(d);
    EXPECT_EQ(D.n, 3);
    EXPECT_EQ(D.m, 1);
    EXPECT_EQ(generic_support(D).points.size(), 5u);
    EXPECT_EQ(to_support(d).points.size(), 4u);  // base support
    EXPECT_THROW(to_polynomial(d), InputError);
}

TEST(Input, PlainCoefficients) {
    auto d = parse_input(R"({"variables":["x","y"],"terms":[{"exponent":[2,0],"coefficient":"-3/2"},
                                                           {"exponent":[0,3],"coefficient":1}]})");
    EXPECT_EQ(to_polynomial(d), Poly::from_terms(2, {{{2, 0}, Rat(-3, 2)}, {{0, 3}, 1}}));
}

TEST(Input, RoundTripIsIdentity) {
    for (const char* f : {"bs_family.json", "edge2d_a12.json", "degenerate_family.json", "x3_y3_sxy.json", "square.json"}) {
        auto d = parse_input(slurp(f), f);
        auto again = parse_input(serialize(d), "again");
        EXPECT_EQ(again, d) << f;
        EXPECT_EQ(serialize(again), serialize(d)) << f;
    }
}

TEST(Input, SyntaxErrorsCarryLineAndColumn) {
    std::string e = error_of("{\n  \"variables\": [\"x\",\n  ]\n}");
    EXPECT_NE(e.find("doc.json:3:"), std::string::npos) << e;
    try {
        parse_input(slurp("malformed.json"), "malformed.json");
        FAIL();
    } catch (const InputError& ex) {
        EXPECT_NE(std::string(ex.what()).find("malformed.json:4:26"), std::string::npos) << ex.what();
    }
}

TEST(Input, SemanticErrorsCarryPointer) {
    EXPECT_NE(error_of(R"({"variables":["x","x"],"support":[[1,0]]})").find("/variables/1"), std::string::npos);
    EXPECT_NE(error_of(R"({"variables":["x","y"],"support":[[1,0],[1,0]]})").find("/support/1"), std::string::npos);
    EXPECT_NE(error_of(R"({"variables":["x","y"],"support":[[1.5,0]]})").find("/support/0/0"), std::string::npos);
    EXPECT_NE(error_of(R"({"variables":["x","y"],"support":[[-1,2]]})").find("/support/0"), std::string::npos);
    EXPECT_NE(error_of(R"({"variables":["x","y"]})").find("exactly one"), std::string::npos);
    EXPECT_NE(error_of(R"({"variables":["x"],"support":[[1]],"terms":[]})").find("exactly one"), std::string::npos);
    EXPECT_NE(error_of(R"({"variables":["a","b","c","d","e","f","g","h","i"],"support":[]})").find("/variables"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"schema_version":2,"variables":["x"],"support":[[1]]})").find("/schema_version"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"variables":["x"],"terms":[{"exponent":[1],"coefficient":"1/0"}]})").find("/terms/0/coefficient"),
              std::string::npos);
}

TEST(Input, Arcs) {
    auto arcs = parse_arcs(parse_json(slurp("arcs_grid3.json")), 3, 1);
    EXPECT_EQ(arcs.size(), 27u);
    auto one = parse_arcs(parse_json(slurp("arcs_r11.json")), 2, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].r, (std::vector<long>{1, 1}));
    EXPECT_THROW(parse_arcs(parse_json(R"({"arcs":[{"x_orders":[0,1],"s_orders":[1]}]})"), 2, 1), InputError);
}

TEST(Input, FanDocument) {
    auto F = parse_fan(parse_json(slurp("fan_12_21.json")));
    EXPECT_EQ(F.ambient, 2);
    ASSERT_EQ(F.cones.size(), 1u);
    EXPECT_EQ(F.cones[0].gens, (std::vector<Point>{P({1, 2}), P({2, 1})}));
}

TEST(Report, ExitCodes) {
    EXPECT_EQ(exit_code_for(InputError("x")), 2);
    EXPECT_EQ(exit_code_for(PreconditionError("x")), 3);
    EXPECT_EQ(exit_code_for(BudgetExceeded("x")), 4);
    EXPECT_EQ(exit_code_for(InternalError("x")), 1);
    auto e = error_report("nu", PreconditionError("bad"));
    EXPECT_EQ(e["error"]["exit_code"], 3);
}

TEST(Report, NuReportIsDeterministic) {
    CommandOptions a, b;
    b.threads = 4;
    auto d = parse_input(slurp("edge2d_a12.json"));
    EXPECT_EQ(render(cmd_nu(d, a), false), render(cmd_nu(d, b), false));
    auto r = cmd_nu(d, a);
    EXPECT_EQ(r["results"]["nu"], "1/2");
    EXPECT_EQ(digest("abc"), digest("abc"));
    EXPECT_NE(digest("abc"), digest("abd"));
}
