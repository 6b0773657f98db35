#include <doctest.h>

#include "latfact/errors.hpp"
#include "latfact/monoid.hpp"

#include "support/fixtures.hpp"

using namespace latfact;
using fixtures::iv;
using fixtures::seq;

TEST_SUITE("monoid")
{

TEST_CASE("sequence members evaluate the quadratic coefficient vectors")
{
    AtomSequence s = seq(iv({1, 0}), iv({2, 1}), iv({0, 0}));
    CHECK(s.member(Int(1)).c == std::vector<Int>{3, 1});
    CHECK(s.member(Int(5)).c == std::vector<Int>{11, 5});
    CHECK(s.degree() == 1);

    AtomSequence q = seq(iv({0, 0}), iv({1, 0}), iv({1, 1}));
    CHECK(q.member(Int(3)).c == std::vector<Int>{12, 9});   // (n^2+n, n^2)
    CHECK(q.degree() == 2);
}

TEST_CASE("spec parsing accepts the documented shapes")
{
    Json j = Json::parse(R"({"dim": 2, "kind": "finite", "generators": [[1,2],[2,1]]})");
    MonoidSpec s = parse_spec(j);
    CHECK(s.dim == 2);
    CHECK(s.kind == SpecKind::Finite);
    REQUIRE(s.generators.size() == 2);

    Json f = Json::parse(R"({"dim": 2, "kind": "family", "finite_atoms": [],
        "sequences": [{"c0": [1,0], "c1": [2,1], "c2": [0,0], "n_start": 1}]})");
    MonoidSpec fs = parse_spec(f);
    CHECK(fs.kind == SpecKind::Family);
    REQUIRE(fs.sequences.size() == 1);
    CHECK(fs.sequences[0].member(Int(2)).c == std::vector<Int>{5, 2});
}

TEST_CASE("spec parsing rejects malformed documents")
{
    CHECK_THROWS_AS(parse_spec(Json::parse(R"({"dim": 2})")), ContractError);
    CHECK_THROWS_AS(parse_spec(Json::parse(R"({"dim": 2, "kind": "finite",
        "generators": [[1,2]], "extra": 1})")), ContractError);
    CHECK_THROWS_AS(parse_spec(Json::parse(R"({"dim": 0, "kind": "finite",
        "generators": [[1]]})")), ContractError);
    CHECK_THROWS_AS(parse_spec(Json::parse(R"({"dim": 2, "kind": "finite",
        "generators": [[1,2,3]]})")), ContractError);
    CHECK_THROWS_AS(parse_spec(Json::parse(R"({"dim": 2, "kind": "family",
        "finite_atoms": [], "sequences": []})")), ContractError);
}

TEST_CASE("spec json roundtrips")
{
    MonoidSpec f = fixtures::weight_13_family();
    MonoidSpec back = parse_spec(spec_to_json(f));
    CHECK(back.dim == f.dim);
    CHECK(back.kind == f.kind);
    REQUIRE(back.sequences.size() == 1);
    CHECK(back.sequences[0].n_start == 4);
    CHECK(back.finite_atoms[0].c == f.finite_atoms[0].c);
}

TEST_CASE("atoms_of strips reducible generators")
{
    AtomList a = atoms_of({iv({2}), iv({3}), iv({4})});
    REQUIRE(a.atoms.size() == 2);
    CHECK(a.atoms[0].c == std::vector<Int>{2});
    CHECK(a.atoms[1].c == std::vector<Int>{3});

    AtomList b = atoms_of({iv({1, 2}), iv({2, 1}), iv({3, 3})});
    REQUIRE(b.atoms.size() == 2);

    AtomList c = atoms_of({iv({1, 2}), iv({2, 1}), iv({1, 1})});
    REQUIRE(c.atoms.size() == 3);
    CHECK(c.atoms[0].c == std::vector<Int>{1, 1});   // canonical: norm, then lex
    CHECK(c.atoms[1].c == std::vector<Int>{1, 2});
    CHECK(c.atoms[2].c == std::vector<Int>{2, 1});
}

TEST_CASE("family membership and truncation")
{
    MonoidSpec f = fixtures::two_limit_family();
    std::vector<IntVec> wide = family_members_up_to(f, Int(100));
    auto contains = [&](const IntVec& v) {
        for (const IntVec& m : wide)
            if (m.c == v.c)
                return true;
        return false;
    };
    CHECK(contains(iv({3, 1})));
    CHECK(contains(iv({9, 4})));
    CHECK_FALSE(contains(iv({4, 2})));

    std::vector<IntVec> ms = family_members_up_to(f, Int(50));
    REQUIRE(ms.size() == 4);
    CHECK(ms[0].c == std::vector<Int>{1, 3});
    CHECK(ms[1].c == std::vector<Int>{3, 1});
    CHECK(ms[2].c == std::vector<Int>{2, 5});
    CHECK(ms[3].c == std::vector<Int>{5, 2});

    MonoidSpec t = truncate(f, Int(50));
    CHECK(t.kind == SpecKind::Finite);
    REQUIRE(t.generators.size() == 4);
    CHECK_THROWS_AS(truncate(f, Int(1)), ContractError);
}

TEST_CASE("truncate is the identity on finite specs")
{
    MonoidSpec s;
    s.dim = 1;
    s.kind = SpecKind::Finite;
    s.generators = {iv({3}), iv({2}), iv({3}), iv({4})};
    MonoidSpec t = truncate(s, Int(1000));
    REQUIRE(t.generators.size() == 3);   // deduplicated, canonically ordered
    CHECK(t.generators[0].c == std::vector<Int>{2});
    CHECK(t.generators[1].c == std::vector<Int>{3});
    CHECK(t.generators[2].c == std::vector<Int>{4});   // 4 = 2+2 stays: no reduction
}

TEST_CASE("family atom validation flags declared atoms that decompose")
{
    CHECK(validate_family_atoms(fixtures::two_limit_family(), 12).ok);
    CHECK(validate_family_atoms(fixtures::interior_atom_family(), 12).ok);

    MonoidSpec bad;
    bad.dim = 2;
    bad.kind = SpecKind::Family;
    bad.finite_atoms = {iv({2, 4})};
    bad.sequences = {seq(iv({0, 1}), iv({1, 1}), iv({0, 0}))};
    ValidationReport rep = validate_family_atoms(bad, 12);
    REQUIRE_FALSE(rep.ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].member.c == std::vector<Int>{2, 4});
    REQUIRE(rep.violations[0].decomposition.size() == 1);
    CHECK(rep.violations[0].decomposition[0].first.c == std::vector<Int>{1, 2});
    CHECK(rep.violations[0].decomposition[0].second == 2);
}

TEST_CASE("sequence validation rejects non-member data")
{
    MonoidSpec f;
    f.dim = 2;
    f.kind = SpecKind::Family;
    f.sequences = {seq(iv({0, 0}), iv({0, 0}), iv({0, 0}))};   // identically zero
    CHECK_THROWS_AS(f.validate(), ContractError);

    MonoidSpec neg;
    neg.dim = 2;
    neg.kind = SpecKind::Family;
    neg.sequences = {seq(iv({5, 0}), iv({-3, 1}), iv({0, 0}))};   // dips negative
    CHECK_THROWS_AS(neg.validate(), ContractError);
}

}
