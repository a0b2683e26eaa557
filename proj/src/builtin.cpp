#include "tcbound/io.hpp"

#include "tcbound/padic.hpp"

namespace tcb::io {

namespace {

json rp(unsigned n)
{
    json j = {{"name", "rp" + std::to_string(n)},
              {"dim", n},
              {"manifold", {{"closed", true}, {"wn_vanishes", false}}},
              {"cohomology", {{"preset", "rp"}, {"n", n}}},
              {"family", {{"kind", "rp"}, {"n", n}}}};
    // RP^1 is the circle.
    j["pi1"] = n == 1 ? json{{"type", "cd"}, {"cd", 1}} : json{{"type", "cyclic"}, {"order", 2}};
    if (n == 1)
        j["aspherical_target"] = true;
    return j;
}

json lens_weights()
{
    return json::array(
        {{{"class", "bar(x)"}, {"weight", 1}, {"provenance", "zero-divisor"}},
         {{"class", "bar(y)"},
          {"weight", 2},
          {"provenance", "bar(y) is the Bockstein image of bar(x) for Z_3 -> Z_9 -> Z_3"}}});
}

json lens_skeleton(unsigned n)
{
    return {{"name", "lens_skeleton_n" + std::to_string(n)},
            {"dim", 2 * n},
            {"pi1", {{"type", "cyclic"}, {"order", 3}}},
            {"cohomology", {{"preset", "lens_skeleton"}, {"n", n}}},
            {"weights", lens_weights()},
            {"family", {{"kind", "lens_skeleton"}, {"n", n}}}};
}

json lens_space(unsigned n)
{
    return {{"name", "lens_space_n" + std::to_string(n)},
            {"dim", 2 * n + 1},
            {"pi1", {{"type", "cyclic"}, {"order", 3}}},
            {"manifold", {{"closed", true}}},
            {"cohomology", {{"preset", "lens_space"}, {"n", n}}},
            {"weights", lens_weights()},
            {"family", {{"kind", "lens_space"}, {"n", n}}}};
}

json torus_skeleton(unsigned mu, unsigned d, bool with_ring)
{
    json j = {{"name", "torus_skeleton_mu" + std::to_string(mu) + "_d" + std::to_string(d)},
              {"dim", d},
              {"pi1", {{"type", "free_abelian"}, {"rank", mu}}},
              {"family", {{"kind", "torus_skeleton"}, {"mu", mu}, {"d", d}}}};
    if (with_ring)
        j["cohomology"] = {{"preset", "torus_skeleton"}, {"mu", mu}, {"n", d}};
    return j;
}

json cp2()
{
    return {{"name", "cp2"},
            {"dim", 4},
            {"pi1", {{"type", "trivial"}}},
            {"manifold", {{"closed", true}}},
            {"cohomology", {{"preset", "cp"}, {"n", 2}}}};
}

json surface_genus2()
{
    // H*(closed orientable genus-2 surface; Z): a_i b_i = u = -b_i a_i.
    json basis = json::array({{{"label", "1"}, {"degree", 0}},
                              {{"label", "a1"}, {"degree", 1}},
                              {{"label", "b1"}, {"degree", 1}},
                              {{"label", "a2"}, {"degree", 1}},
                              {{"label", "b2"}, {"degree", 1}},
                              {{"label", "u"}, {"degree", 2}}});
    json products = json::array({{{"left", "a1"}, {"right", "b1"}, {"result", {{"u", 1}}}},
                                 {{"left", "a2"}, {"right", "b2"}, {"result", {{"u", 1}}}}});
    return {{"name", "surface_genus2"},
            {"dim", 2},
            {"pi1", {{"type", "cd"}, {"cd", 2}}},
            {"manifold", {{"closed", true}}},
            {"aspherical_target", true},
            {"cohomology",
             {{"p", 0}, {"basis", basis}, {"products", products}, {"generators", {"a1", "b1", "a2", "b2"}}}}};
}

json figure_eight()
{
    // Wedge of two circles: all products of positive-degree classes vanish.
    json basis = json::array({{{"label", "1"}, {"degree", 0}},
                              {{"label", "a"}, {"degree", 1}},
                              {{"label", "b"}, {"degree", 1}}});
    return {{"name", "figure_eight"},
            {"dim", 1},
            {"pi1", {{"type", "cd"}, {"cd", 1}}},
            {"aspherical_target", true},
            {"cohomology", {{"p", 0}, {"basis", basis}, {"products", json::array()}, {"generators", {"a", "b"}}}}};
}

json torus2_times_s3()
{
    json basis = json::array({{{"label", "1"}, {"degree", 0}},
                              {{"label", "a"}, {"degree", 1}},
                              {{"label", "b"}, {"degree", 1}},
                              {{"label", "ab"}, {"degree", 2}},
                              {{"label", "s"}, {"degree", 3}},
                              {{"label", "as"}, {"degree", 4}},
                              {{"label", "bs"}, {"degree", 4}},
                              {{"label", "abs"}, {"degree", 5}}});
    json products = json::array({{{"left", "a"}, {"right", "b"}, {"result", {{"ab", 1}}}},
                                 {{"left", "a"}, {"right", "s"}, {"result", {{"as", 1}}}},
                                 {{"left", "b"}, {"right", "s"}, {"result", {{"bs", 1}}}},
                                 {{"left", "a"}, {"right", "bs"}, {"result", {{"abs", 1}}}},
                                 {{"left", "b"}, {"right", "as"}, {"result", {{"abs", -1}}}},
                                 {{"left", "ab"}, {"right", "s"}, {"result", {{"abs", 1}}}}});
    return {{"name", "torus2_times_s3"},
            {"dim", 5},
            {"pi1", {{"type", "cd"}, {"cd", 2}}},
            {"manifold", {{"closed", true}}},
            {"cohomology",
             {{"p", 0}, {"basis", basis}, {"products", products}, {"generators", {"a", "b", "s"}}}}};
}

std::vector<std::pair<std::string, json>> make_builtins()
{
    std::vector<std::pair<std::string, json>> out;
    const auto add = [&](json j) { out.emplace_back(j.at("name").get<std::string>(), std::move(j)); };
    for (unsigned n = 1; n <= 16; ++n)
        add(rp(n));
    for (unsigned n = 1; n <= 10; ++n)
        add(lens_skeleton(n));
    for (unsigned n = 1; n <= 10; ++n)
        add(lens_space(n));
    add(torus_skeleton(4, 2, true));
    add(torus_skeleton(6, 2, true));
    add(torus_skeleton(6, 3, true));
    add(torus_skeleton(8, 4, false));
    add(torus_skeleton(10, 5, false));
    add(cp2());
    add(surface_genus2());
    add(figure_eight());
    add(torus2_times_s3());
    return out;
}

} // namespace

const std::vector<std::pair<std::string, json>>& builtin_descriptors()
{
    static const auto builtins = make_builtins();
    return builtins;
}

const json* find_builtin(std::string_view name)
{
    for (const auto& [n, j] : builtin_descriptors())
        if (n == name)
            return &j;
    return nullptr;
}

} // namespace tcb::io
