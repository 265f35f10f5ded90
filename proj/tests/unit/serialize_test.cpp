#include <zfcube/errors.hpp>
#include <zfcube/serialize.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace zfcube;

namespace {
    auto count(const std::string & text, const std::regex & re) -> std::size_t
    {
        return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
    }

    auto random_document(std::mt19937_64 & rng) -> GraphDocument
    {
        std::bernoulli_distribution coin(0.5);
        GraphPtr g = coin(rng)
            ? share(build_twisted(oracle::random_twist_spec(static_cast<int>(rng() % 6), rng)))
            : share(oracle::random_graph(1 + rng() % 10, 0.4, rng));
        auto doc = make_document(g);
        if (coin(rng)) {
            doc.arcs = oracle::random_dipath_forest(g, rng);
            if (! doc.arcs->empty() && coin(rng))
                doc.bridge_arc = doc.arcs->arcs()[rng() % doc.arcs->size()];
        }
        if (coin(rng))
            doc.set = oracle::random_subset(g->order(), rng);
        return doc;
    }
}

TEST(Json, HypercubeLayout)
{
    auto text = to_json(make_document(share(build_hypercube(1))));
    EXPECT_EQ(text, R"({"dimension":1,"vertices":["0","1"],"edges":[["0","1"]],"twisted_edges":[]})"
                    "\n");
}

TEST(Json, GeneralGraphHasNullDimension)
{
    auto text = to_json(make_document(share(make_path(2))));
    EXPECT_EQ(text, R"({"dimension":null,"vertices":["0","1"],"edges":[["0","1"]]})"
                    "\n");
}

TEST(Json, MinorityDocumentRoundTrip)
{
    auto doc = make_document(build_minority_recursive(4));
    auto text = to_json(doc);
    auto back = parse_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(to_json(back), text);
    EXPECT_NE(text.find(R"("bridge_arc":["0110","0111"])"), std::string::npos);
    EXPECT_NE(text.find(R"("twisted_edges":[["0100","1011"],["0101","1010"]])"), std::string::npos);
}

TEST(Json, RandomRoundTrip)
{
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 100; ++trial) {
        auto doc = random_document(rng);
        auto text = to_json(doc);
        auto back = parse_document(text);
        EXPECT_EQ(back, doc);
        EXPECT_EQ(to_json(back), text);
    }
}

TEST(Json, ParseErrors)
{
    auto text = to_json(make_document(share(build_hypercube(2))));
    for (std::size_t cut = 0; cut + 1 < text.size(); cut += 3)
        EXPECT_THROW(parse_document(text.substr(0, cut)), ParseError) << cut;

    try {
        parse_document(R"({"dimension":2,"vertices":["00","01","10","1x"],"edges":[]})");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.location(), "/vertices/3");
    }
    try {
        parse_document(R"({"dimension":null,"vertices":["a","b"],"edges":[["a","c"]]})");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.location(), "/edges/0/1");
    }
    EXPECT_THROW(parse_document(R"({"dimension":1,"vertices":["0","1"],"edges":[["0","1"]],"twisted_edges":[["0","1"]]})"), ParseError);
    EXPECT_THROW(parse_document("[]"), ParseError);
    EXPECT_THROW(parse_document(R"({"vertices":["a"]})"), ParseError);
}

TEST(Dot, MinorityFour)
{
    auto dot = to_dot(make_document(build_minority_recursive(4)));
    EXPECT_EQ(dot.rfind("digraph", 0), 0U);
    EXPECT_EQ(count(dot, std::regex("color=red")), 2U);
    EXPECT_EQ(count(dot, std::regex("->")), 32U);
    EXPECT_EQ(count(dot, std::regex("dir=none")), 32U - 9U);
    EXPECT_EQ(count(dot, std::regex("label=\"bridge\"")), 1U);
    EXPECT_NE(dot.find(R"("0110" -> "0111")"), std::string::npos);
}

TEST(Dot, ArcsPointFromTailToHead)
{
    auto g = share(make_path(2));
    auto doc = make_document(g);
    doc.arcs = ArcSet(g, {{1, 0}});
    auto dot = to_dot(doc);
    EXPECT_NE(dot.find(R"("1" -> "0" [penwidth=2, color=blue])"), std::string::npos);
}

TEST(TwistSpecJson, Levels)
{
    auto spec = parse_twist_spec(R"({"levels":[[""],["0","1"],["01","00","10","11"]]})");
    auto g = build_twisted(spec);
    EXPECT_EQ(g.order(), 8U);
    EXPECT_EQ(twisted_edges(g).size(), 2U);

    auto same = parse_twist_spec(R"({"levels":[[0],[0,1],[1,0,2,3]]})");
    EXPECT_EQ(build_twisted(same), g);
}

TEST(TwistSpecJson, Recursive)
{
    auto spec = parse_twist_spec(R"({"left":{"left":{},"right":{},"matching":["" ]},"right":{"left":{},"right":{},"matching":[""]},"matching":["1","0"]})");
    auto g = build_twisted(spec);
    EXPECT_EQ(g.order(), 4U);
    EXPECT_EQ(g.size(), 4U);
    EXPECT_EQ(twisted_edges(g).size(), 2U);
}

TEST(TwistSpecJson, Errors)
{
    try {
        parse_twist_spec(R"({"levels":[[0],[0,0]]})");
        FAIL();
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.location(), "/levels");
    }
    EXPECT_THROW(parse_twist_spec(R"({"levels":[[0],["0"]]})"), ParseError);
    EXPECT_THROW(parse_twist_spec(R"({"levels":[[0],["0","2"]]})"), ParseError);
    EXPECT_THROW(parse_twist_spec(R"({"left":{}})"), ParseError);
    EXPECT_THROW(parse_twist_spec("{"), ParseError);
}

TEST(TraceJson, Pairs)
{
    auto p = make_path(3);
    ForcingTrace t{{0}, {{0, 1}, {1, 2}}};
    EXPECT_EQ(trace_to_json(p, t), R"([["0","1"],["1","2"]])");
}
