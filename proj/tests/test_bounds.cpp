#include "doctest.h"

#include "tcbound/bounds.hpp"
#include "tcbound/error.hpp"
#include "tcbound/io.hpp"
#include "tcbound/padic.hpp"

#include <algorithm>

using namespace tcb;
using namespace tcb::bounds;
using tcb::io::json;

namespace {

SpaceDescriptor space(unsigned dim, Pi1 pi1)
{
    SpaceDescriptor s;
    s.name = "test";
    s.dim = dim;
    s.pi1 = pi1;
    return s;
}

Pi1 cyclic(std::uint32_t m)
{
    return {Pi1Kind::Cyclic, m, 0, std::nullopt};
}

Pi1 cd(std::uint32_t c)
{
    return {Pi1Kind::CdBounded, 1, c, std::nullopt};
}

const FiredRule* rule(const BoundReport& r, const std::string& id)
{
    const auto it = std::find_if(r.rules.begin(), r.rules.end(), [&](const auto& f) { return f.id == id; });
    return it == r.rules.end() ? nullptr : &*it;
}

SpaceDescriptor builtin(const std::string& name)
{
    const auto* j = io::find_builtin(name);
    REQUIRE(j != nullptr);
    return io::parse_descriptor(*j);
}

} // namespace

TEST_CASE("generic and simply connected bounds")
{
    const auto r = evaluate(space(3, {}));
    CHECK(r.upper == 4);
    CHECK(r.upper_rule == "simply_connected");
    REQUIRE(rule(r, "dimension"));
    CHECK(rule(r, "dimension")->value == 7);
    CHECK(r.lower == 1);
    CHECK(r.lower_rule == "unreduced_minimum");

    const auto other = evaluate(space(3, {Pi1Kind::Other, 1, 0, std::nullopt}));
    CHECK(other.upper == 7);
    CHECK(other.upper_rule == "dimension");

    const auto pt = evaluate(space(0, {}));
    CHECK(pt.lower == 1);
    CHECK(pt.upper == 1);
}

TEST_CASE("Z_2 fundamental group")
{
    for (unsigned n = 2; n <= 40; ++n) {
        const auto r = evaluate(space(n, cyclic(2)));
        CHECK(r.upper <= 2 * static_cast<std::int64_t>(n));
        REQUIRE(rule(r, "z2_canonical_class"));
        CHECK(rule(r, "z2_canonical_class")->value == 2 * n);

        auto m = space(n, cyclic(2));
        m.manifold = ManifoldInfo{true, true};
        const auto rm = evaluate(m);
        CHECK(rm.upper == 2 * static_cast<std::int64_t>(n) - 1);
        CHECK(rm.upper_rule == "cat_to_tc");
        REQUIRE(rule(rm, "berstein_cat"));
        CHECK(rule(rm, "berstein_cat")->direction == Direction::CatUpper);

        // Not closed: no Berstein rule.
        m.manifold = ManifoldInfo{false, true};
        CHECK_FALSE(rule(evaluate(m), "berstein_cat"));
    }
}

TEST_CASE("Z_3 fundamental group")
{
    const auto r4 = evaluate(space(4, cyclic(3)));
    CHECK(r4.upper == 8);
    CHECK(r4.upper_rule == "z3_canonical_class");
    const auto r2 = evaluate(space(2, cyclic(3)));
    CHECK(r2.upper == 5);
    CHECK_FALSE(rule(r2, "z3_canonical_class"));
    CHECK_FALSE(r2.notes.empty());
    CHECK(evaluate(space(7, cyclic(3))).upper == 14);

    CHECK_FALSE(evaluate(space(4, cyclic(5))).notes.empty());
    CHECK_THROWS_AS(evaluate(space(1, cyclic(3))), SchemaError);
}

TEST_CASE("cohomological dimension bounds")
{
    const auto r = evaluate(space(5, cd(2)));
    REQUIRE(rule(r, "cd_dimension"));
    CHECK(rule(r, "cd_dimension")->value == 9);
    CHECK(r.upper == 9);
    CHECK(rule(r, "dranishnikov_cat")->value == 5);
    CHECK(rule(r, "cat_to_tc")->value == 9);
    CHECK_FALSE(r.notes.empty());

    for (unsigned dim = 2; dim <= 10; ++dim)
        for (unsigned c = 0; c <= 2; ++c) {
            const auto rr = evaluate(space(dim, cd(c)));
            const auto expected = dim + 2 * c + (dim % 2 == 0 ? 1 : 0);
            REQUIRE(rule(rr, "cd_dimension"));
            CHECK(rule(rr, "cd_dimension")->value == expected);
            CHECK(rr.upper <= expected);
            // ceil((dim - 1)/2) + cd + 1, computed with the ceiling.
            CHECK(rule(rr, "dranishnikov_cat")->value == (dim - 1 + 1) / 2 + c + 1);
        }
    CHECK_FALSE(rule(evaluate(space(5, cd(3))), "cd_dimension"));

    // A declared cat sharper than Dranishnikov's wins.
    auto s = space(5, cd(2));
    s.cat = 2;
    const auto rc = evaluate(s);
    CHECK(rc.upper == 3);
    CHECK(rule(rc, "cat_to_tc")->inputs.find("declared_cat") != std::string::npos);
}

TEST_CASE("lens skeleton pipeline")
{
    const auto r1 = evaluate(builtin("lens_skeleton_n1"));
    CHECK(r1.lower == 5);
    CHECK(r1.upper == 5);
    CHECK(r1.lower_rule == "weighted_cuplength");
    CHECK(r1.upper_rule == "dimension");
    REQUIRE(r1.aspherical_annotation.has_value());
    CHECK(r1.aspherical_annotation->find(">= 5") != std::string::npos);
    REQUIRE(r1.registry.has_value());
    CHECK(r1.registry->value == 5);

    for (unsigned n : {3u, 4u}) {
        const auto r = evaluate(builtin("lens_skeleton_n" + std::to_string(n)));
        CHECK(r.lower == 4 * n + 1);
        CHECK(r.upper == 4 * n + 1);
    }
    for (unsigned n : {2u, 5u, 6u}) {
        const auto r = evaluate(builtin("lens_skeleton_n" + std::to_string(n)));
        CHECK(r.upper == 4 * n);
        CHECK(r.lower <= 4 * n);
        CHECK_FALSE(r.aspherical_annotation.has_value());
    }
}

TEST_CASE("registry")
{
    CHECK(registry_lookup(builtin("rp4"))->value == 8);
    CHECK_FALSE(registry_lookup(builtin("rp3")).has_value());
    CHECK(registry_lookup(builtin("torus_skeleton_mu6_d2"))->value == 5);
    CHECK(registry_lookup(builtin("lens_skeleton_n3"))->value == 13);
    CHECK_FALSE(registry_lookup(builtin("lens_skeleton_n2")).has_value());
    CHECK(registry_lookup(builtin("lens_space_n1"))->value == 6);
    CHECK_FALSE(registry_lookup(builtin("cp2")).has_value());
}

TEST_CASE("real projective spaces")
{
    const auto r2 = evaluate(builtin("rp2"));
    CHECK(r2.lower == 4);
    CHECK(r2.upper == 4);
    const auto r3 = evaluate(builtin("rp3"));
    CHECK(r3.lower == 4);
    CHECK(r3.upper == 6);
    const auto r4 = evaluate(builtin("rp4"));
    CHECK(r4.lower <= 8);
    CHECK(r4.upper >= 8);
}

TEST_CASE("every built-in interval contains its registry value")
{
    for (const auto& [name, j] : io::builtin_descriptors()) {
        const auto s = io::parse_descriptor(j);
        const auto r = evaluate(s);
        CHECK(r.lower <= r.upper);
        if (const auto reg = registry_lookup(s)) {
            CHECK(r.lower <= reg->value);
            CHECK(reg->value <= r.upper);
        }
        // Every endpoint traces to a fired rule.
        CHECK(rule(r, r.lower_rule)->value == r.lower);
        CHECK(rule(r, r.upper_rule)->value == r.upper);
    }
}

TEST_CASE("inconsistent data names both rules")
{
    auto s = builtin("rp2");
    s.known_tc = KnownTc{7, "made up"};
    try {
        evaluate(s);
        FAIL("expected an inconsistency");
    } catch (const InconsistencyError& e) {
        CHECK(e.upper_rule() == "z2_canonical_class");
        CHECK(e.lower_rule() == "known_tc");
    }

    auto lo = builtin("rp2");
    lo.cat = 1;  // TC <= 1 clashes with the cup-length bound 4
    try {
        evaluate(lo);
        FAIL("expected an inconsistency");
    } catch (const InconsistencyError& e) {
        CHECK(e.lower_rule() == "zero_divisor_cuplength");
        CHECK(e.upper_rule() == "cat_to_tc");
    }

    auto fine = builtin("rp2");
    fine.known_tc = KnownTc{4, "cup-length and dimension"};
    CHECK(evaluate(fine).known_tc->value == 4);
}

TEST_CASE("aspherical annotation")
{
    CHECK_FALSE(aspherical_inference(space(3, cyclic(2)), 6).has_value());
    CHECK_FALSE(aspherical_inference(space(3, cyclic(2)), std::nullopt).has_value());
    auto circle = space(1, cd(1));
    circle.aspherical_target = true;
    const auto a = aspherical_inference(circle, 3);
    REQUIRE(a.has_value());
    CHECK(a->find("restates") != std::string::npos);
    // The circle has TC = 2 < 2 dim + 1; the figure eight reaches 3.
    CHECK_FALSE(evaluate(builtin("rp1")).aspherical_annotation.has_value());
    const auto fig8 = evaluate(builtin("figure_eight"));
    CHECK(fig8.lower == 3);
    CHECK(fig8.upper == 3);
    REQUIRE(fig8.aspherical_annotation.has_value());
    CHECK(fig8.aspherical_annotation->find("restates") != std::string::npos);
    CHECK_FALSE(evaluate(builtin("rp3")).aspherical_annotation.has_value());
}

TEST_CASE("supplying the ring never widens the interval")
{
    for (const auto& [name, j] : io::builtin_descriptors()) {
        const auto full = io::parse_descriptor(j);
        auto bare = full;
        bare.cohomology = nullptr;
        bare.weights.clear();
        const auto rf = evaluate(full);
        const auto rb = evaluate(bare);
        CHECK(rf.lower >= rb.lower);
        CHECK(rf.upper <= rb.upper);
    }
}

TEST_CASE("evaluation is deterministic")
{
    const auto s = builtin("lens_skeleton_n4");
    CHECK(evaluate(s) == evaluate(s));
}

TEST_CASE("display convention")
{
    const auto r = evaluate(builtin("rp2"));
    const auto red = with_convention(r, true);
    CHECK(red.reduced);
    CHECK(red.lower == 3);
    CHECK(red.upper == 3);
    CHECK(with_convention(red, false) == r);
}

TEST_CASE("descriptor consistency checks")
{
    auto s = builtin("rp3");
    s.dim = 4;
    CHECK_THROWS_AS(evaluate(s), SchemaError);
    auto w = space(4, cyclic(3));
    w.weights.push_back({"bar(y)", 2, ""});
    CHECK_THROWS_AS(evaluate(w), SchemaError);
}
