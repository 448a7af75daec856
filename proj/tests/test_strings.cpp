#include <doctest.h>

#include "sga/oracle.hpp"
#include "sga/strings.hpp"
#include "test_util.hpp"

using namespace sga;
using namespace sga::test;

TEST_CASE("parsing classifies and renders canonically") {
    const GeneString u = GS(kRunningU);
    CHECK(u.size() == 12);
    CHECK(u.is_extended_legal());
    CHECK(u.str() == kRunningU);

    CHECK(GS("b e").is_extended_legal());
    CHECK(GS("b e").domain() == std::vector<Identity>{M()});

    const GeneString bad = GS("2 3 2");
    CHECK(bad.validity() == Validity::invalid);
    CHECK(bad.invalid_reason() == "pointer identity 3 occurs 1 time (expected exactly 2)");

    CHECK(GS("").is_legal());
    CHECK(GS("2 2").is_legal());
    CHECK(GS("b 2 2").validity() == Validity::invalid);
    CHECK(GS("b b").validity() == Validity::invalid);
    CHECK(GS("b e e").invalid_reason() == "marker e occurs 2 times (expected exactly 1)");
    CHECK(GS("-b -e").is_extended_legal());
}

TEST_CASE("parsing accepts unicode bars and minus signs") {
    // combining macron, combining overline, U+2212 minus
    CHECK(GS("5 2̄ 4 4 5̄ 3 6̄ 2 6 b 3 ē") == GS(kRunningU));
    CHECK(GS("2̅") == GS("-2"));
    CHECK(GS("−4 2 3 −2 4 −e −3 b") == GS(kRunningV));
}

TEST_CASE("malformed tokens report a position") {
    CHECK_THROWS_AS(GS("1"), parse_error);
    CHECK_THROWS_AS(GS("0 2"), parse_error);
    CHECK_THROWS_AS(GS("2 x"), parse_error);
    CHECK_THROWS_AS(GS("2 2x"), parse_error);
    CHECK_THROWS_AS(GS("-"), parse_error);
    CHECK_THROWS_AS(GS("--2"), parse_error);
    CHECK_THROWS_WITH(GS("2 q 2"), doctest::Contains("token 2"));
}

TEST_CASE("inversion reverses and toggles bars") {
    CHECK(GS("-4 2 3").inverted() == GS("-3 -2 4"));
    CHECK(GS("").inverted() == GS(""));
    const GeneString u = GS(kRunningU);
    CHECK(u.inverted().inverted() == u);
}

TEST_CASE("marker removal keeps pointers in order") {
    CHECK(GS("2 4 b 4 -e -2").without_markers() == GS("2 4 4 -2"));
    CHECK(GS("b e").without_markers() == GS(""));
    CHECK(GS("3 3").without_markers() == GS("3 3"));
}

TEST_CASE("pointer profiles report sign, span and interval") {
    const GeneString example1 = GS("2 4 b 4 -e -2");
    CHECK(example1.profile(P(4)).sign == Sign::negative);
    CHECK(example1.profile(M()).sign == Sign::positive);
    CHECK(example1.profile(P(2)).sign == Sign::positive);

    const PointerProfile three = GS(kRunningU).profile(P(3));
    CHECK(three.sign == Sign::negative);
    CHECK(three.first_pos == 6);
    CHECK(three.second_pos == 11);
    CHECK(three.interior == GS("-6 2 6 b"));
    CHECK(three.interval == GS("3 -6 2 6 b 3"));

    CHECK_THROWS_AS(GS(kRunningU).profile(P(9)), unknown_identity_error);
    CHECK_THROWS_AS(GS("2 3 2").profile(P(2)), validity_error);
}

TEST_CASE("domain is sorted with m last") {
    CHECK(GS(kRunningU).domain() ==
          std::vector<Identity>{P(2), P(3), P(4), P(5), P(6), M()});
    CHECK(GS("4 4 2 2").domain() == std::vector<Identity>{P(2), P(4)});
}

TEST_CASE("MDS descriptors convert to extended legal strings") {
    const MdsDescriptor actin = MdsDescriptor::parse("[M3 M4 M6 M5 M7 M9 -M2 M1 M8]");
    CHECK(actin.kappa() == 9);
    CHECK(actin.to_gene_string() == GS("3 4 4 5 6 7 5 6 7 8 9 e -3 -2 b 2 8 9"));

    CHECK(MdsDescriptor::parse("M1 M2").to_gene_string() == GS("b 2 2 e"));
    CHECK(MdsDescriptor::parse("M2 M1").to_gene_string() == GS("2 e b 2"));
    CHECK(MdsDescriptor::parse("−M2 M1").to_gene_string() ==
          MdsDescriptor::parse("-m2 m1").to_gene_string());

    CHECK_THROWS_AS(MdsDescriptor::parse("M1 M1"), parse_error);
    CHECK_THROWS_AS(MdsDescriptor::parse("M1 M3"), parse_error);
    CHECK_THROWS_AS(MdsDescriptor::parse("M1"), parse_error);
    CHECK_THROWS_AS(MdsDescriptor::parse("M1 Mx"), parse_error);
}

TEST_CASE("every well-formed descriptor yields an extended legal string") {
    std::vector<MdsEntry> entries{{1, false}, {2, true}, {3, false}, {4, true}, {5, false}};
    do {
        for (int flips = 0; flips < (1 << 5); ++flips) {
            std::vector<MdsEntry> variant = entries;
            for (int i = 0; i < 5; ++i) variant[i].inverted = (flips >> i) & 1;
            CHECK(MdsDescriptor(variant).to_gene_string().is_extended_legal());
        }
    } while (std::next_permutation(entries.begin(), entries.end(),
                                   [](const MdsEntry& a, const MdsEntry& b) {
                                       return a.index < b.index;
                                   }));
}

TEST_CASE("token round-trip over the k=1 instance space") {
    for (const GeneString& s : enumerate_extended_legal_strings(1)) {
        CHECK(GeneString::parse(s.str()) == s);
        CHECK(s.is_extended_legal());
        CHECK(s.contains(M()));
        auto [i, j] = s.occurrence_positions(P(2));
        CHECK(i < j);
    }
}

TEST_CASE("JSON form round-trips") {
    const GeneString u = GS(kRunningU);
    nlohmann::json j = u;
    CHECK(j.is_array());
    CHECK(j.size() == 12);
    CHECK(j[0] == nlohmann::json{{"kind", "pointer"}, {"value", 5}, {"barred", false}});
    CHECK(j[11] == nlohmann::json{{"kind", "marker"}, {"value", "e"}, {"barred", true}});
    GeneString back;
    from_json(j, back);
    CHECK(back == u);

    CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"([{"kind":"pointer","value":1,"barred":false}])"), back),
                    parse_error);
}
