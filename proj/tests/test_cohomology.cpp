#include "doctest.h"
#include "oracles.hpp"

#include "tcbound/cohomology.hpp"
#include "tcbound/error.hpp"

#include <utility>

using namespace tcb;
using namespace tcb::cohomology;

namespace {

AlgebraElement el(const AlgebraPtr& a, const std::string& label, std::int64_t c = 1)
{
    const auto i = a->index_of(label);
    REQUIRE(i.has_value());
    return AlgebraElement::basis(a, *i, c);
}

std::uint32_t idx(const AlgebraPtr& a, const std::string& label)
{
    const auto i = a->index_of(label);
    REQUIRE(i.has_value());
    return *i;
}

// Signed-permutation oracle for a word of factors u_1 ... u_k, each on the
// left (u (x) 1) or right (1 (x) u) of A (x) A: move every left factor in
// front of every right factor preceding it, collecting (-1)^{|u||v|}.
AlgebraElement word_oracle(const ProductAlgebra& sq, const std::vector<std::pair<bool, std::uint32_t>>& word)
{
    const auto& a = sq.left;
    int sign = 1;
    auto left = AlgebraElement::unit(a);
    auto right = AlgebraElement::unit(a);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const auto [is_left, g] = word[i];
        if (is_left) {
            for (std::size_t j = 0; j < i; ++j)
                if (!word[j].first && (a->degree(word[j].second) * a->degree(g)) % 2)
                    sign = -sign;
            left = left * AlgebraElement::basis(a, g);
        } else {
            right = right * AlgebraElement::basis(a, g);
        }
    }
    auto out = AlgebraElement(sq.product);
    for (std::uint32_t i = 0; i < a->dimension(); ++i)
        for (std::uint32_t j = 0; j < a->dimension(); ++j) {
            const auto c = left.coefficient(i) * right.coefficient(j) * sign;
            if (c)
                out = out + sq.tensor(i, j, c);
        }
    return out;
}

} // namespace

TEST_CASE("real projective presets")
{
    const auto rp2 = preset_rp(2);
    CHECK(rp2->modulus() == 2);
    CHECK(rp2->dimension() == 3);
    CHECK(el(rp2, "w") * el(rp2, "w") == el(rp2, "w^2"));
    CHECK((el(rp2, "w^2") * el(rp2, "w")).is_zero());
    CHECK(preset_rp(3)->dimension() == 4);
    const auto rp1 = preset_rp(1);
    CHECK((el(rp1, "w") * el(rp1, "w")).is_zero());
    CHECK(validate(*preset_rp(4)).empty());
}

TEST_CASE("lens presets")
{
    const auto l1 = preset_lens_skeleton(1);
    CHECK(l1->modulus() == 3);
    CHECK(l1->dimension() == 3);
    CHECK(l1->top_degree() == 2);
    CHECK((el(l1, "x") * el(l1, "x")).is_zero());
    CHECK((el(l1, "x") * el(l1, "y")).is_zero());
    CHECK((el(l1, "y") * el(l1, "y")).is_zero());
    CHECK(validate(*l1).empty());

    const auto l2 = preset_lens_skeleton(2);
    CHECK(el(l2, "y") * el(l2, "y") == el(l2, "y^2"));
    CHECK((el(l2, "y") * el(l2, "y^2")).is_zero());
    CHECK((el(l2, "x") * el(l2, "y^2")).is_zero());
    CHECK(el(l2, "x") * el(l2, "y") == el(l2, "xy"));
    CHECK(el(l2, "y") * el(l2, "x") == el(l2, "xy"));

    for (int n = 1; n <= 12; ++n) {
        CHECK(preset_lens_skeleton(n)->dimension() == static_cast<std::uint32_t>(2 * n + 1));
        CHECK(preset_lens_space(n)->dimension() == static_cast<std::uint32_t>(2 * n + 2));
    }
    // The full lens space keeps x y^n.
    const auto s2 = preset_lens_space(2);
    CHECK_FALSE((el(s2, "x") * el(s2, "y^2")).is_zero());
}

TEST_CASE("every preset validates")
{
    for (int n = 1; n <= 12; ++n) {
        CHECK(validate(*preset_rp(n)).empty());
        CHECK(validate(*preset_lens_skeleton(n)).empty());
        CHECK(validate(*preset_lens_space(n)).empty());
        CHECK(validate(*preset_cp(n)).empty());
    }
    for (int mu = 1; mu <= 7; ++mu)
        for (int d = 1; d <= mu; ++d)
            CHECK(validate(*preset_torus_skeleton(mu, d)).empty());
    CHECK(validate(*preset_point()).empty());
    CHECK_THROWS(preset_rp(0));
}

TEST_CASE("validation reports an injected sign fault")
{
    auto broken = std::make_shared<GradedAlgebra>(*preset_lens_skeleton(2));
    // x y = xy but y x should be (+1) xy; make it -xy.
    broken->set_product(idx(broken, "y"), idx(broken, "x"), {{idx(broken, "xy"), 2}});
    const auto v = validate(*broken);
    CHECK_FALSE(v.empty());

    auto odd = std::make_shared<GradedAlgebra>(*preset_torus_skeleton(2, 2));
    // e1 e2 = -e2 e1 is required; force e2 e1 = e1e2.
    odd->set_product(idx(odd, "e2"), idx(odd, "e1"), {{idx(odd, "e1e2"), 1}});
    CHECK_FALSE(validate(*odd).empty());
}

TEST_CASE("Künneth signs")
{
    const auto l1 = preset_lens_skeleton(1);
    const auto sq = kunneth(l1, l1);
    CHECK(sq.product->dimension() == 9);
    const auto x = el(l1, "x");
    const auto x1 = sq.left_embed(x);
    const auto _1x = sq.right_embed(x);
    const auto xx = sq.tensor(idx(l1, "x"), idx(l1, "x"));
    CHECK(x1 * _1x == xx);
    CHECK(_1x * x1 == xx.scaled(-1));
    CHECK(_1x * x1 == xx.scaled(2));
    CHECK(AlgebraElement::unit(sq.product) * xx == xx);
    CHECK(validate(*sq.product).empty());

    const auto rp2 = preset_rp(2);
    const auto sq2 = kunneth(rp2, rp2);
    const auto w = el(rp2, "w");
    CHECK(sq2.right_embed(w) * sq2.left_embed(w) == sq2.left_embed(w) * sq2.right_embed(w));

    CHECK_THROWS_AS(kunneth(preset_rp(2), preset_lens_skeleton(1)), ValidationError);
}

TEST_CASE("Künneth products agree with the signed-permutation oracle")
{
    for (const auto& a : {preset_lens_skeleton(3), preset_torus_skeleton(4, 3), preset_lens_space(2)}) {
        const auto sq = kunneth(a, a);
        std::vector<std::uint32_t> gens;
        for (std::uint32_t i = 1; i < a->dimension(); ++i)
            gens.push_back(i);
        // Every word of length <= 3 in basis factors on either side.
        std::vector<std::vector<std::pair<bool, std::uint32_t>>> words{{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<std::vector<std::pair<bool, std::uint32_t>>> next;
            for (const auto& w : words)
                for (bool side : {true, false})
                    for (auto g : gens) {
                        auto v = w;
                        v.emplace_back(side, g);
                        next.push_back(std::move(v));
                    }
            for (const auto& w : next) {
                auto got = AlgebraElement::unit(sq.product);
                for (const auto& [side, g] : w) {
                    const auto b = AlgebraElement::basis(a, g);
                    got = got * (side ? sq.left_embed(b) : sq.right_embed(b));
                }
                REQUIRE(got == word_oracle(sq, w));
            }
            words = std::move(next);
            if (words.size() > 4000)
                break;
        }
    }
}

TEST_CASE("bar and zero-divisors")
{
    const auto l1 = preset_lens_skeleton(1);
    const auto sq = kunneth(l1, l1);
    const auto bx = bar(sq, el(l1, "x"));
    CHECK(bx == sq.tensor(idx(l1, "x"), 0) + sq.tensor(0, idx(l1, "x"), 2));
    CHECK(bar(sq, AlgebraElement::unit(l1)).is_zero());
    const auto by = bar(sq, el(l1, "y"));
    CHECK(multiply_factors(sq, by).is_zero());
    CHECK(is_zero_divisor(sq, by));
    CHECK_FALSE(is_zero_divisor(sq, sq.left_embed(el(l1, "y"))));
    CHECK_THROWS_AS(bar(sq, el(l1, "x") + el(l1, "y")), ValidationError);
}

TEST_CASE("powers of bar classes")
{
    const auto l1 = preset_lens_skeleton(1);
    const auto sq1 = kunneth(l1, l1);
    const auto y = idx(l1, "y");
    CHECK(power(bar(sq1, el(l1, "y")), 2) == sq1.tensor(y, y, 1));

    const auto rp2 = preset_rp(2);
    const auto sq = kunneth(rp2, rp2);
    const auto bw = bar(sq, el(rp2, "w"));
    CHECK(power(bw, 3) == sq.tensor(1, 2) + sq.tensor(2, 1));
    CHECK(power(bw, 4).is_zero());
    CHECK(power(bw, 0) == AlgebraElement::unit(sq.product));

    // (bar y)^k against the binomial expansion, mod 3, for lens skeleta.
    for (int n = 1; n <= 10; ++n) {
        const auto a = preset_lens_skeleton(n);
        const auto s = kunneth(a, a);
        const auto by = bar(s, el(a, "y"));
        auto p = AlgebraElement::unit(s.product);
        for (unsigned k = 1; k <= static_cast<unsigned>(2 * n); ++k) {
            p = p * by;
            auto expected = AlgebraElement(s.product);
            for (unsigned i = 0; i <= k; ++i) {
                if (i > static_cast<unsigned>(n) || k - i > static_cast<unsigned>(n))
                    continue;
                const auto c = oracle::mod(oracle::bar_power_coefficient(k, i), 3);
                const auto yi = i ? idx(a, i == 1 ? "y" : "y^" + std::to_string(i)) : 0u;
                const auto yj = k - i ? idx(a, k - i == 1 ? "y" : "y^" + std::to_string(k - i)) : 0u;
                if (c)
                    expected = expected + s.tensor(yi, yj, static_cast<std::int64_t>(c));
            }
            REQUIRE(p == expected);
        }
        CHECK(power(by, 2 * n) == p);
    }
}

TEST_CASE("integer coefficients and additive orders")
{
    const auto cp2 = preset_cp(2);
    CHECK(cp2->modulus() == 0);
    const auto x = el(cp2, "x");
    CHECK(x * x == el(cp2, "x^2"));
    const auto sq = kunneth(cp2, cp2);
    const auto bx = bar(sq, x);
    // (x(x)1 - 1(x)x)^4 = 6 x^2 (x) x^2 over Z.
    CHECK(power(bx, 4) == sq.tensor(idx(cp2, "x^2"), idx(cp2, "x^2"), 6));
    CHECK(power(bx, 5).is_zero());

    auto torsion = std::make_shared<GradedAlgebra>(0, 2, std::vector<BasisElement>{{"1", 0}, {"u", 2}});
    torsion->set_additive_order(1, 2);
    CHECK(AlgebraElement::basis(torsion, 1, 2).is_zero());
    CHECK(AlgebraElement::basis(torsion, 1, 3) == AlgebraElement::basis(torsion, 1, 1));
}

TEST_CASE("expression parser")
{
    const auto l2 = preset_lens_skeleton(2);
    const auto sq = kunneth(l2, l2);
    const auto by = bar(sq, el(l2, "y"));
    const auto bx = bar(sq, el(l2, "x"));
    CHECK(parse_element(sq, "bar(y)") == by);
    CHECK(parse_element(sq, "bar(y)^2") == by * by);
    CHECK(parse_element(sq, "bar(x)*bar(y) - 2*bar(y)") == bx * by - by.scaled(2));
    CHECK(parse_element(sq, "left(y) - right(y)") == by);
    CHECK(parse_element(sq, "-(bar(x))") == bx.scaled(-1));
    CHECK_THROWS_AS(parse_element(sq, "bar(z)"), ValidationError);
    CHECK_THROWS_AS(parse_element(sq, "bar(y"), ValidationError);
    CHECK_THROWS_AS(parse_element(sq, "bar(y) +"), ValidationError);
    CHECK_THROWS_AS(parse_element(sq, ""), ValidationError);
}
