#include "movdom/error.hpp"
#include "movdom/graph_io.hpp"
#include "movdom/solver.hpp"
#include "oracles/brute.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace movdom;

namespace {

bool matches(const Graph& g, const oracle::Matrix& m)
{
    if (m.size() != g.order())
        return false;
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = 0; v < g.order(); ++v)
            if (m[u][v] != g.adjacent(u, v))
                return false;
    return true;
}

} // namespace

TEST(Graph6, HandDecodedStrings)
{
    auto k2 = parse_graph6("A_");
    EXPECT_EQ(k2, family(Family::complete, 2));

    auto e2 = parse_graph6("A?");
    EXPECT_EQ(e2, family(Family::empty, 2));

    // 'D' -> n = 5; "?{" -> 000000 111100: bits 6..9 set, i.e. x(0,4), x(1,4), x(2,4), x(3,4).
    auto star = parse_graph6("D?{");
    EXPECT_EQ(star, make_graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    EXPECT_TRUE(matches(star, oracle::decode_graph6("D?{")));
}

TEST(Graph6, WriteExamples)
{
    EXPECT_EQ(write_graph6(family(Family::complete, 2)), "A_");
    EXPECT_EQ(write_graph6(family(Family::empty, 2)), "A?");
    EXPECT_EQ(write_graph6(family(Family::complete, 1)), "@");
    EXPECT_EQ(write_graph6(make_graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})), "D?{");
    EXPECT_EQ(write_graph6(family(Family::complete, 4)), "C~");
}

TEST(Graph6, HeaderAndWhitespace)
{
    EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), family(Family::complete, 2));
    EXPECT_EQ(parse_graph6("A_\r\n"), family(Family::complete, 2));
}

TEST(Graph6, Errors)
{
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("D?"), ParseError);       // 10 bits need 2 bytes
    EXPECT_THROW(parse_graph6("A_??"), ParseError);     // trailing data
    EXPECT_THROW(parse_graph6("A\x7f"), ParseError);    // byte 127
    EXPECT_THROW(parse_graph6("A>"), ParseError);       // byte 62
    EXPECT_THROW(parse_graph6("~?@?"), ParseError);     // long form
    EXPECT_THROW(write_graph6(make_graph(63, {})), LimitError);
}

TEST(Graph6, NonzeroPaddingWarns)
{
    std::vector<std::string> warnings;
    // n = 2 uses one bit; 'A' + 0b100001 sets a pad bit.
    auto g = parse_graph6(std::string("A") + static_cast<char>(63 + 0b100001), &warnings);
    EXPECT_EQ(g, family(Family::complete, 2));
    ASSERT_EQ(warnings.size(), 1U);
    warnings.clear();
    (void)parse_graph6("A_", &warnings);
    EXPECT_TRUE(warnings.empty());
}

TEST(Graph6, RoundTripRandom)
{
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 1000; ++i) {
        const auto n = static_cast<VertexId>(1 + rng() % 62);
        const double p = static_cast<double>(rng() % 1000 + 1) / 1000.0;
        auto g = random_graph(n, p, rng());
        const auto text = write_graph6(g);
        ASSERT_EQ(parse_graph6(text), g) << text;
        ASSERT_TRUE(matches(g, oracle::decode_graph6(text))) << text;
    }
}

TEST(Graph6, ColumnOrderLaw)
{
    // Flipping edge (i, j) flips exactly bit j(j-1)/2 + i of the stream.
    const VertexId n = 9;
    auto base = random_graph(n, 0.5, 5);
    auto stream = [](const std::string& s) {
        std::vector<int> bits;
        for (std::size_t k = 1; k < s.size(); ++k)
            for (int b = 5; b >= 0; --b)
                bits.push_back(((s[k] - 63) >> b) & 1);
        return bits;
    };
    const auto before = stream(write_graph6(base));
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) {
            auto edges = base.edges();
            auto it = std::find(edges.begin(), edges.end(), Edge{i, j});
            if (it == edges.end())
                edges.emplace_back(i, j);
            else
                edges.erase(it);
            const auto after = stream(write_graph6(make_graph(n, edges)));
            ASSERT_EQ(after.size(), before.size());
            for (std::size_t k = 0; k < before.size(); ++k)
                ASSERT_EQ(before[k] != after[k], k == j * (j - 1) / 2 + i) << i << "," << j << " bit " << k;
        }
}

TEST(EdgeList, Examples)
{
    EXPECT_EQ(parse_edgelist("2 1\n0 1"), family(Family::complete, 2));
    EXPECT_EQ(parse_edgelist("4 4\n0 1\n1 2\n2 3\n3 0"), family(Family::cycle, 4));
    EXPECT_THROW(parse_edgelist("3 1\n0 3"), ParseError);
}

TEST(EdgeList, CommentsAndWarnings)
{
    std::vector<std::string> warnings;
    auto g = parse_edgelist("# a path\n\n3 3  # header\n0 1\n1 2 # tail\n2 1\n", &warnings);
    EXPECT_EQ(g, family(Family::path, 3));
    EXPECT_EQ(warnings.size(), 1U);
}

TEST(EdgeList, Malformed)
{
    EXPECT_THROW(parse_edgelist(""), ParseError);
    EXPECT_THROW(parse_edgelist("3\n"), ParseError);
    EXPECT_THROW(parse_edgelist("3 1\n0 x\n"), ParseError);
    EXPECT_THROW(parse_edgelist("3 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_edgelist("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse_edgelist("3 1\n0 1 2\n"), ParseError);
    EXPECT_THROW(parse_edgelist("3 1\n-1 2\n"), ParseError);
}

TEST(EdgeList, WriteReadBack)
{
    auto g = random_graph(12, 0.4, 3);
    EXPECT_EQ(parse_edgelist(write_edgelist(g)), g);
}

TEST(Certificate, MovableWitnessForK4)
{
    auto k4 = family(Family::complete, 4);
    auto result = solve(k4, InvariantKind::gamma_mt2);
    const auto& c = result.certificate;
    EXPECT_EQ(c.graph6, "C~");
    EXPECT_EQ(c.witness, (std::vector<VertexId>{0, 1}));
    ASSERT_EQ(c.moves.size(), 1U);
    EXPECT_EQ(c.moves[0], (MoveWitness{0, 1, MoveAction::replace, 2, 3}));

    const auto text = emit_certificate(c);
    EXPECT_EQ(text, emit_certificate(parse_certificate(text)));
    EXPECT_EQ(parse_certificate(text), c);
    EXPECT_NE(text.find("\"action\": \"replace\""), std::string::npos);
    EXPECT_TRUE(recheck_certificate(parse_certificate(text)));
}

TEST(Certificate, NonexistenceForP4)
{
    auto result = solve(family(Family::path, 4), InvariantKind::gamma_mt2);
    const auto& c = result.certificate;
    EXPECT_TRUE(c.nonexistent);
    EXPECT_FALSE(c.value);
    EXPECT_TRUE(c.witness.empty());
    const auto text = emit_certificate(c, false);
    EXPECT_EQ(text, R"({"graph6":"Ch","kind":"gamma_mt2","moves":[],"nonexistent":true,"value":null,"witness":[]})");
    EXPECT_EQ(parse_certificate(text), c);
    EXPECT_TRUE(recheck_certificate(c));
}

TEST(Certificate, NoMovesForTotalDomination)
{
    auto result = solve(family(Family::cycle, 6), InvariantKind::gamma_t);
    EXPECT_TRUE(result.certificate.moves.empty());
    EXPECT_EQ(parse_certificate(emit_certificate(result.certificate)), result.certificate);
}

TEST(Certificate, SchemaErrors)
{
    EXPECT_THROW(parse_certificate("not json"), ParseError);
    EXPECT_THROW(parse_certificate("[]"), ParseError);
    EXPECT_THROW(parse_certificate(R"({"kind":"gamma_x","graph6":"A_","value":null,"nonexistent":true,"witness":[],"moves":[]})"),
                 ParseError);
    EXPECT_THROW(parse_certificate(R"({"kind":"gamma","graph6":"A_","value":1,"nonexistent":true,"witness":[0],"moves":[]})"),
                 ParseError);
    EXPECT_THROW(parse_certificate(R"({"kind":"gamma","graph6":"A_","value":1,"nonexistent":false,"witness":[0]})"), ParseError);
}

TEST(Certificate, TamperedCertificatesFailRecheck)
{
    auto c = solve(family(Family::complete, 4), InvariantKind::gamma_mt2).certificate;
    auto bad = c;
    bad.moves[0].u = 1; // u inside T
    EXPECT_FALSE(recheck_certificate(bad));
    bad = c;
    bad.moves.push_back(bad.moves[0]); // pair covered twice
    EXPECT_FALSE(recheck_certificate(bad));
    bad = c;
    bad.witness = {0}; // cardinality mismatch
    EXPECT_FALSE(recheck_certificate(bad));
    bad = c;
    bad.nonexistent = true;
    bad.value.reset();
    bad.witness.clear();
    bad.moves.clear();
    EXPECT_FALSE(recheck_certificate(bad)); // K4 does have a set
}
