#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "mptg/builder.hpp"
#include "mptg/errors.hpp"
#include "mptg/families.hpp"
#include "mptg/graph.hpp"
#include "mptg/orderings.hpp"
#include "mptg/recognition.hpp"
#include "mptg/verify.hpp"
#include "test_util.hpp"

using namespace mptg;

namespace {

Graph edges_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

AugmentedMatrix figure5_matrix() {
    return AugmentedMatrix(fixture("figure5").graph, VertexOrdering::identity(7));
}

}  // namespace

TEST_CASE("endpoint relations on the worked example") {
    const AugmentedMatrix m = figure5_matrix();
    CHECK(relation_R1(m, 0, 1));         // k2 = 3 separates rows 1 and 0
    CHECK_FALSE(relation_R1(m, 4, 5));   // no qualifying column right of 5
    CHECK_FALSE(relation_R2(m, 4, 5));
    CHECK_FALSE(relation_R2(m, 0, 3));   // nothing left of position 0

    // crafted: a(0,1) = 0, a(0,2) = 1 makes R2 fire for the pair (1,2)
    const AugmentedMatrix crafted(edges_graph(3, {{0, 2}, {1, 2}}),
                                  VertexOrdering::identity(3));
    CHECK(relation_R2(crafted, 1, 2));
}

TEST_CASE("endpoint relations validate their arguments") {
    const AugmentedMatrix m = figure5_matrix();
    CHECK_THROWS_AS(relation_R1(m, 3, 3), ContractError);
    CHECK_THROWS_AS(relation_R1(m, 5, 2), ContractError);
    CHECK_THROWS_AS(relation_R2(m, -1, 2), ContractError);
    CHECK_THROWS_AS(relation_R2(m, 0, 7), ContractError);
    // 2K_2 under identity is not an MPTG ordering
    const AugmentedMatrix bad(edges_graph(4, {{0, 2}, {1, 3}}), VertexOrdering::identity(4));
    CHECK_THROWS_AS(relation_R1(bad, 0, 1), ContractError);
    CHECK_THROWS_AS(precedes(bad), ContractError);
}

TEST_CASE("precedence relation on the worked example") {
    const PrecedenceRelation prec = precedes(figure5_matrix());
    CHECK(prec.b_order() == std::vector<int>{1, 0, 4, 5, 3, 2, 6});
    CHECK(prec.b_precedes(1, 0));
    CHECK(prec.b_precedes(5, 3));
    CHECK_FALSE(prec.b_precedes(3, 5));

    // the pair (2,5) is reversed only through the composite clause via k = 3
    const PairDerivation d = prec.derivation(2, 5);
    CHECK_FALSE(d.r1);
    CHECK_FALSE(d.r2);
    CHECK(d.composite);
    CHECK(d.reversed());
    CHECK(prec.b_precedes(5, 2));

    CHECK_THROWS_AS(prec.derivation(5, 2), ContractError);
    CHECK_THROWS_AS(prec.derivation(2, 2), ContractError);
}

TEST_CASE("complete graphs keep the default order") {
    const AugmentedMatrix m(make_complete(5), VertexOrdering::identity(5));
    const PrecedenceRelation prec = precedes(m);
    CHECK(prec.b_order() == std::vector<int>{0, 1, 2, 3, 4});
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) CHECK_FALSE(prec.derivation(i, j).reversed());
}

TEST_CASE("a reversed zero trips the sanity check") {
    // edge 0-2 only: R1 puts b_1 before b_0, but a(0,1) = 0 demands the default
    const AugmentedMatrix m(edges_graph(3, {{0, 2}}), VertexOrdering::identity(3));
    try {
        precedes(m);
        FAIL("expected PrecedenceInconsistency");
    } catch (const PrecedenceInconsistency& e) {
        CHECK(e.positions[0] == 0);
        CHECK(e.positions[1] == 1);
        CHECK(e.positions[2] == -1);
    }
}

TEST_CASE("canonical sequence of the worked example matches the frozen form") {
    const Figure5Expected& exp = figure5_expected();
    const AugmentedMatrix m = figure5_matrix();
    const CanonicalSequence seq = canonical_sequence(m, precedes(m));
    CHECK(seq.entries == exp.sequence.entries);
    CHECK(seq.to_string() ==
          "a2 a1 a5 a6 a4 p1 a3 p2 p3 b2 a7 p4 b1 p5 b5 p6 b6 p7 b4 b3 b7");
    CHECK(seq.position_of(TagKind::A, 1) == 0);
    CHECK(seq.position_of(TagKind::P, 0) == 5);
    CHECK(seq.position_of(TagKind::B, 6) == 20);
    CHECK_THROWS_AS(seq.position_of(TagKind::A, 7), ContractError);
}

TEST_CASE("canonical sequence of tiny graphs") {
    const AugmentedMatrix k2(make_complete(2), VertexOrdering::identity(2));
    const CanonicalSequence seq = canonical_sequence(k2, precedes(k2));
    CHECK(seq.to_string() == "a1 a2 p1 p2 b1 b2");

    const AugmentedMatrix k2bar(Graph(2), VertexOrdering::identity(2));
    const CanonicalSequence disj = canonical_sequence(k2bar, precedes(k2bar));
    CHECK(disj.to_string() == "a1 p1 b1 a2 p2 b2");

    const AugmentedMatrix k1(Graph(1), VertexOrdering::identity(1));
    CHECK(canonical_sequence(k1, precedes(k1)).to_string() == "a1 p1 b1");
}

TEST_CASE("integer realization") {
    const Figure5Expected& exp = figure5_expected();
    const AugmentedMatrix m = figure5_matrix();
    const IntervalPointRep rep = realize_integer(canonical_sequence(m, precedes(m)));
    CHECK(rep == exp.integer_rep);
    CHECK(rep.vertices[0].a == 2);
    CHECK(rep.vertices[0].b == 13);
    CHECK(rep.vertices[0].p == 6);
    CHECK(rep.vertices[6].b == 21);
    CHECK(certify(rep, fixture("figure5").graph).empty());
    CHECK_FALSE(is_proper(rep));

    const AugmentedMatrix k2(make_complete(2), VertexOrdering::identity(2));
    const IntervalPointRep r2 = realize_integer(canonical_sequence(k2, precedes(k2)));
    CHECK(r2.vertices[0] == RepVertex{1, 5, 3});
    CHECK(r2.vertices[1] == RepVertex{2, 6, 4});

    const AugmentedMatrix k1(Graph(1), VertexOrdering::identity(1));
    const IntervalPointRep r1 = realize_integer(canonical_sequence(k1, precedes(k1)));
    CHECK(r1.vertices[0] == RepVertex{1, 3, 2});
}

TEST_CASE("unit realization") {
    const Graph g = fixture("figure5").graph;
    const AugmentedMatrix m = figure5_matrix();
    const CanonicalSequence seq = canonical_sequence(m, precedes(m));

    const IntervalPointRep unit = realize_unit(seq);
    CHECK(certify(unit, g).empty());
    CHECK_FALSE(is_unit(unit).has_value());
    CHECK_FALSE(is_proper(unit).has_value());
    for (const RepVertex& v : unit.vertices) CHECK(v.b - v.a == 1);

    const IntervalPointRep five = realize_unit(seq, 5);
    CHECK(certify(five, g).empty());
    for (const RepVertex& v : five.vertices) CHECK(v.b - v.a == 5);

    const AugmentedMatrix k1(Graph(1), VertexOrdering::identity(1));
    const IntervalPointRep r1 = realize_unit(canonical_sequence(k1, precedes(k1)));
    CHECK(r1.vertices[0] == RepVertex{0, 1, Rat(1, 2)});

    CHECK_THROWS_AS(realize_unit(seq, 0), ContractError);
    CHECK_THROWS_AS(realize_unit(seq, -1), ContractError);
}

TEST_CASE("unit realization endpoint order follows the sequence") {
    const AugmentedMatrix m = figure5_matrix();
    const CanonicalSequence seq = canonical_sequence(m, precedes(m));
    const IntervalPointRep unit = realize_unit(seq);
    auto value_of = [&](const EndpointTag& t) {
        const RepVertex& v = unit.vertices[static_cast<std::size_t>(t.vertex)];
        return t.kind == TagKind::A ? v.a : t.kind == TagKind::B ? v.b : v.p;
    };
    for (std::size_t i = 1; i < seq.entries.size(); ++i)
        CHECK(value_of(seq.entries[i - 1]) < value_of(seq.entries[i]));
}

TEST_CASE("apply_ordering relabels a position rep to vertex ids") {
    const Graph w4 = fixture("w4_proper_mptg").graph;
    const RecognitionResult r = find_proper_mptg_ordering(w4);
    REQUIRE(r.member);
    const AugmentedMatrix m(w4, *r.ordering);
    const IntervalPointRep positioned = realize_integer(canonical_sequence(m, precedes(m)));
    const IntervalPointRep rep = apply_ordering(positioned, *r.ordering);
    CHECK(certify(rep, w4).empty());
    CHECK_FALSE(is_proper(rep));

    VertexOrdering bad;
    bad.perm = {0, 1};
    CHECK_THROWS_AS(apply_ordering(positioned, bad), ContractError);
}

TEST_CASE("validate rejects out-of-order representation values") {
    IntervalPointRep rep;
    rep.vertices = {{0, 2, 1}, {3, 2, 3}};
    CHECK_THROWS_AS(rep.validate(), ContractError);
    rep.vertices = {{0, 2, 3}};
    CHECK_THROWS_AS(rep.validate(), ContractError);
    rep.vertices = {{0, 0, 0}};
    rep.validate();
}

TEST_CASE("normalize spreads a shared point value") {
    IntervalPointRep rep;
    rep.vertices = {{0, 2, 1}, {1, 3, 1}};
    const Graph before = induced_mptg(rep);
    const IntervalPointRep out = normalize_distinct_points(rep);
    CHECK(out.vertices[0].p == Rat(7, 6));
    CHECK(out.vertices[1].p == Rat(5, 4));
    CHECK(out.vertices[0].a == 0);
    CHECK(out.vertices[1].b == 3);
    CHECK(induced_mptg(out) == before);
    CHECK(normalize_distinct_points(out) == out);
}

TEST_CASE("normalize moves right endpoints sitting on the shared value") {
    IntervalPointRep rep;
    rep.vertices = {{0, 1, 1}, {0, 3, 1}};
    const IntervalPointRep out = normalize_distinct_points(rep);
    CHECK(out.vertices[0].b == 2);  // epsilon = 1: half the gap to 3
    CHECK(out.vertices[0].p == Rat(4, 3));
    CHECK(out.vertices[1].p == Rat(3, 2));
    CHECK(induced_mptg(out) == induced_mptg(rep));
}

TEST_CASE("normalize with no landmark to the right uses a unit step") {
    IntervalPointRep rep;
    rep.vertices = {{0, 1, 1}, {1, 1, 1}};
    const IntervalPointRep out = normalize_distinct_points(rep);
    CHECK(out.vertices[0].b == 2);
    CHECK(out.vertices[1].b == 2);
    CHECK(out.vertices[0].p == Rat(4, 3));
    CHECK(out.vertices[1].p == Rat(3, 2));
    out.validate();
    CHECK(induced_mptg(out) == induced_mptg(rep));
}

TEST_CASE("normalize leaves distinct points alone") {
    const IntervalPointRep& rep = figure5_expected().integer_rep;
    CHECK(normalize_distinct_points(rep) == rep);
}

TEST_CASE("normalize chains across several groups and stays proper") {
    IntervalPointRep rep;  // three shared values, proper intervals
    rep.vertices = {{0, 10, 5}, {1, 11, 5}, {2, 12, 5}, {3, 13, 9}, {4, 14, 9}};
    const Graph before = induced_mptg(rep);
    const IntervalPointRep out = normalize_distinct_points(rep);
    for (std::size_t u = 0; u < out.vertices.size(); ++u)
        for (std::size_t v = u + 1; v < out.vertices.size(); ++v)
            CHECK(out.vertices[u].p != out.vertices[v].p);
    CHECK(induced_mptg(out) == before);
    CHECK_FALSE(is_proper(out));
    CHECK(normalize_distinct_points(out) == out);
}

TEST_CASE("every proper ordering realizes; every MPTG ordering realizes or reports") {
    int proper_seen = 0, mptg_only_ok = 0, mptg_only_rejected = 0;
    for (int n = 1; n <= 4; ++n) {
        testutil::all_graphs(n, [&](const Graph& g) {
            testutil::for_each_ordering(n, [&](const VertexOrdering& sigma) {
                const AugmentedMatrix m(g, sigma);
                if (!is_mptg_ordering(m)) return;
                const bool proper = is_proper_mptg_ordering(m);
                try {
                    const PrecedenceRelation prec = precedes(m);
                    const CanonicalSequence seq = canonical_sequence(m, prec);
                    const IntervalPointRep rep =
                        apply_ordering(realize_integer(seq), sigma);
                    const bool ok = certify(rep, g).empty();
                    if (proper) {
                        ++proper_seen;
                        if (!ok) {
                            CAPTURE(format_graph(g));
                            FAIL_CHECK("proper ordering failed to certify");
                        }
                        if (is_proper(rep)) FAIL_CHECK("integer rep not proper");
                        const IntervalPointRep unit =
                            apply_ordering(realize_unit(seq), sigma);
                        if (!certify(unit, g).empty())
                            FAIL_CHECK("unit rep failed to certify");
                        if (is_unit(unit)) FAIL_CHECK("unit rep lengths differ");
                    } else if (ok) {
                        ++mptg_only_ok;
                    } else {
                        FAIL_CHECK("chain completed with a non-certifying rep");
                    }
                } catch (const PrecedenceInconsistency&) {
                    if (proper) FAIL_CHECK("proper ordering hit an inconsistency");
                    ++mptg_only_rejected;
                } catch (const ContractError&) {
                    if (proper) FAIL_CHECK("proper ordering hit a contract error");
                    ++mptg_only_rejected;
                }
            });
        });
    }
    CHECK(proper_seen == 959);  // proper (graph, ordering) pairs with n <= 4
    CHECK(mptg_only_ok + mptg_only_rejected > 0);
}
