#include "tcbound/selfcheck.hpp"

#include "tcbound/bounds.hpp"
#include "tcbound/error.hpp"
#include "tcbound/groupring.hpp"
#include "tcbound/io.hpp"
#include "tcbound/padic.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

namespace tcb::selfcheck {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

struct Entry {
    const char* name;
    Check check;
};

std::string lucas_agreement()
{
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t n = 0; n <= 300; ++n) {
            padic::BigInt row = 1;  // C(n, 0)
            for (std::uint64_t k = 0; k <= n; ++k) {
                const padic::BigInt expected = padic::binom_exact(n, k) % static_cast<unsigned long>(p);
                if (padic::binom_mod_p(n, k, p) != expected.get_ui())
                    return "mismatch at C(" + std::to_string(n) + "," + std::to_string(k) + ") mod " +
                           std::to_string(p);
            }
        }
    }
    return {};
}

std::string digit_two()
{
    for (std::uint64_t m = 1; m <= 2000; ++m) {
        const bool div3 = mpz_divisible_ui_p(padic::binom_exact(2 * m, m).get_mpz_t(), 3) != 0;
        if (div3 != padic::has_digit_two_base3(m))
            return "mismatch at m = " + std::to_string(m);
    }
    return {};
}

std::string central_parity()
{
    for (std::uint64_t n = 2; n <= 2000; n += 2)
        if (mpz_even_p(padic::binom_exact(n, n / 2).get_mpz_t()) == 0)
            return "C(" + std::to_string(n) + "," + std::to_string(n / 2) + ") is odd";
    return {};
}

std::string kummer()
{
    for (std::uint64_t p : {2, 3})
        for (std::uint64_t m = 0; m <= 200; ++m)
            for (std::uint64_t k = 0; k <= m; ++k) {
                padic::BigInt c = padic::binom_exact(m, k);
                const auto v = mpz_remove(c.get_mpz_t(), c.get_mpz_t(), padic::BigInt(static_cast<unsigned long>(p)).get_mpz_t());
                if (v != padic::kummer_carries(m, k, p))
                    return "carries differ from valuation at (" + std::to_string(m) + "," +
                           std::to_string(k) + "," + std::to_string(p) + ")";
            }
    return {};
}

std::string crossed_identity()
{
    for (std::uint32_t m = 1; m <= 12; ++m) {
        const auto f = groupring::canonical_crossed_hom(groupring::CyclicGroup(m));
        if (auto bad = f.crossed_identity_violations())
            return std::to_string(bad) + " violations for Z_" + std::to_string(m);
        if (auto bad = f.diagonal_violations())
            return std::to_string(bad) + " nonzero diagonal values for Z_" + std::to_string(m);
    }
    return {};
}

std::string canonical_order()
{
    for (std::uint32_t m = 1; m <= 12; ++m) {
        const groupring::CyclicGroup g(m);
        if (!groupring::invariants(groupring::augmentation_ideal(g)).empty())
            return "augmentation ideal of Z_" + std::to_string(m) + " has invariants";
        if (groupring::order_of_canonical_class(g) != m)
            return "order of the canonical class differs from " + std::to_string(m);
    }
    return {};
}

std::string z3_module_algebra()
{
    const auto ws = groupring::wedge_and_symmetric(groupring::augmentation_ideal_z3_alpha_beta().module);
    if (!(ws.swap * ws.square.act_left == ws.square.act_left * ws.swap) ||
        !(ws.swap * ws.square.act_right == ws.square.act_right * ws.swap))
        return "T is not equivariant";
    if (!(ws.wedge.act_left == IntMatrix{{1}}) || !(ws.wedge.act_right == IntMatrix{{1}}))
        return "I ^ I is not trivial";
    if (!(ws.projection * ws.inclusion).is_zero() || !(ws.projection * ws.section == IntMatrix::identity(3)))
        return "0 -> I^I -> I(x)I -> S(I) -> 0 is not exact";
    if (!(ws.antisymmetrizer * ws.inclusion == IntMatrix{{2}}))
        return "A o i is not multiplication by 2";
    return {};
}

std::string presets(bool inject_fault)
{
    for (int n = 1; n <= 12; ++n) {
        std::vector<cohomology::AlgebraPtr> algs{cohomology::preset_rp(n), cohomology::preset_lens_skeleton(n),
                                                 cohomology::preset_lens_space(n), cohomology::preset_cp(n)};
        if (n <= 6)
            algs.push_back(cohomology::preset_torus_skeleton(n + 2, n));
        if (inject_fault && n == 1) {
            auto broken = std::make_shared<cohomology::GradedAlgebra>(*cohomology::preset_lens_skeleton(2));
            broken->set_product(*broken->index_of("x"), *broken->index_of("y"), {});  // y x stays xy
            algs.push_back(broken);
        }
        for (const auto& a : algs) {
            const auto v = cohomology::validate(*a);
            if (!v.empty())
                return "preset violation: " + v.front();
        }
    }
    return {};
}

std::string lens_power_formula()
{
    for (int n = 1; n <= 6; ++n) {
        const auto a = cohomology::preset_lens_skeleton(n);
        const auto sq = cohomology::kunneth(a, a);
        const auto y = cohomology::AlgebraElement::basis(a, *a->index_of("y"));
        const auto p = cohomology::power(cohomology::bar(sq, y), static_cast<unsigned>(2 * n));
        const auto yn = *a->index_of(n == 1 ? "y" : "y^" + std::to_string(n));
        const std::int64_t sign = n % 2 ? -1 : 1;
        const std::int64_t c = sign * static_cast<std::int64_t>(padic::binom_mod_p(2 * n, n, 3));
        if (!(p == sq.tensor(yn, yn, c)))
            return "bar(y)^" + std::to_string(2 * n) + " differs from (-1)^n C(2n,n) y^n x y^n";
    }
    return {};
}

std::string vclass_z2()
{
    for (unsigned n = 2; n <= 100; ++n)
        if (vclass::z2_vanishes(n).status != vclass::Status::Vanishes)
            return "z2 verdict undecided at dim " + std::to_string(n);
    return {};
}

std::string vclass_z3()
{
    for (unsigned n = 2; n <= 200; ++n) {
        const bool expect = n % 2 == 1 || padic::has_digit_two_base3(n / 2);
        if ((vclass::z3_vanishes(n).status == vclass::Status::Vanishes) != expect)
            return "z3 verdict disagrees with the digit predicate at dim " + std::to_string(n);
    }
    return {};
}

std::string builtin_registry()
{
    for (const auto& [name, j] : io::builtin_descriptors()) {
        try {
            const auto r = bounds::evaluate(io::parse_descriptor(j));
            if (r.lower > r.upper)
                return name + ": empty interval";
        } catch (const Error& e) {
            return name + ": " + e.what();
        }
    }
    return {};
}

const std::vector<Entry>& entries(bool inject_fault)
{
    static const std::vector<Entry> normal = {
        {"padic.lucas", lucas_agreement},
        {"padic.digit_two", digit_two},
        {"padic.central_parity", central_parity},
        {"padic.kummer", kummer},
        {"groupring.crossed_identity", crossed_identity},
        {"groupring.canonical_order", canonical_order},
        {"groupring.z3_module_algebra", z3_module_algebra},
        {"cohomology.presets", [] { return presets(false); }},
        {"cohomology.lens_power_formula", lens_power_formula},
        {"vclass.z2", vclass_z2},
        {"vclass.z3", vclass_z3},
        {"bounds.builtins", builtin_registry},
    };
    static const std::vector<Entry> faulty = [] {
        auto v = normal;
        for (auto& e : v)
            if (std::string(e.name) == "cohomology.presets")
                e.check = [] { return presets(true); };
        return v;
    }();
    return inject_fault ? faulty : normal;
}

bool selected(const std::string& name, const std::string& only)
{
    if (only.empty() || name == only)
        return true;
    return name.rfind(only + ".", 0) == 0;
}

} // namespace

std::vector<std::string> check_names()
{
    std::vector<std::string> out;
    for (const auto& e : entries(false))
        out.emplace_back(e.name);
    return out;
}

std::vector<CheckResult> run(const Options& opts)
{
    std::vector<CheckResult> results;
    for (const auto& e : entries(opts.inject_fault)) {
        if (!selected(e.name, opts.only))
            continue;
        CheckResult r{e.name, false, {}};
        try {
            r.detail = e.check();
            r.passed = r.detail.empty();
        } catch (const std::exception& ex) {
            r.detail = std::string("exception: ") + ex.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string render_table(const std::vector<CheckResult>& results)
{
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(32) << r.name;
        if (!r.passed)
            os << r.detail;
        os << "\n";
    }
    return os.str();
}

} // namespace tcb::selfcheck
