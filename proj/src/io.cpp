#include "tcbound/io.hpp"

#include "tcbound/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <initializer_list>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace tcb::io {

namespace {

using bounds::Direction;
using bounds::Family;
using bounds::Pi1Kind;

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg)
{
    throw SchemaError(path + ": " + msg);
}

void require_object(const json& j, const std::string& path)
{
    if (!j.is_object())
        schema_fail(path, "expected an object");
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed)
{
    require_object(j, path);
    for (const auto& [k, v] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
            schema_fail(path + "." + k, "unknown key");
    }
}

std::optional<std::int64_t> get_int(const json& j, const char* key, const std::string& path,
                                    bool required, std::int64_t min = 0)
{
    const std::string p = path + "." + key;
    if (!j.contains(key)) {
        if (required)
            schema_fail(p, "missing required integer");
        return std::nullopt;
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        schema_fail(p, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < min)
        schema_fail(p, "must be >= " + std::to_string(min));
    if (x > 1'000'000'000)
        schema_fail(p, "value too large");
    return x;
}

std::optional<std::string> get_string(const json& j, const char* key, const std::string& path,
                                      bool required)
{
    const std::string p = path + "." + key;
    if (!j.contains(key)) {
        if (required)
            schema_fail(p, "missing required string");
        return std::nullopt;
    }
    if (!j.at(key).is_string())
        schema_fail(p, "expected a string");
    return j.at(key).get<std::string>();
}

std::optional<bool> get_bool(const json& j, const char* key, const std::string& path)
{
    if (!j.contains(key))
        return std::nullopt;
    if (!j.at(key).is_boolean())
        schema_fail(path + "." + key, "expected a boolean");
    return j.at(key).get<bool>();
}

bounds::Pi1 parse_pi1(const json& j)
{
    const std::string path = "pi1";
    check_keys(j, path, {"type", "order", "cd", "rank"});
    const auto type = *get_string(j, "type", path, true);
    bounds::Pi1 p;
    const auto forbid = [&](const char* key) {
        if (j.contains(key))
            schema_fail(path + "." + key, "not allowed for type '" + type + "'");
    };
    if (type == "trivial") {
        forbid("order"), forbid("cd"), forbid("rank");
        p.kind = Pi1Kind::Trivial;
    } else if (type == "cyclic") {
        forbid("cd"), forbid("rank");
        p.kind = Pi1Kind::Cyclic;
        p.order = static_cast<std::uint32_t>(*get_int(j, "order", path, true, 1));
    } else if (type == "cd") {
        forbid("order"), forbid("rank");
        p.kind = Pi1Kind::CdBounded;
        p.cd = static_cast<std::uint32_t>(*get_int(j, "cd", path, true, 0));
    } else if (type == "free_abelian") {
        forbid("order"), forbid("cd");
        p.kind = Pi1Kind::FreeAbelian;
        if (auto r = get_int(j, "rank", path, false, 0)) {
            p.rank = static_cast<std::uint32_t>(*r);
            p.cd = *p.rank;
        }
    } else if (type == "other") {
        forbid("order"), forbid("cd"), forbid("rank");
        p.kind = Pi1Kind::Other;
    } else {
        schema_fail(path + ".type", "must be one of trivial, cyclic, cd, free_abelian, other (got '" +
                                        type + "')");
    }
    return p;
}

Family parse_family(const json& j)
{
    const std::string path = "family";
    check_keys(j, path, {"kind", "n", "mu", "d"});
    const auto kind = *get_string(j, "kind", path, true);
    Family f;
    if (kind == "rp" || kind == "lens_skeleton" || kind == "lens_space") {
        if (j.contains("mu") || j.contains("d"))
            schema_fail(path, "'mu' and 'd' are only used by torus_skeleton");
        f.kind = kind == "rp" ? Family::Kind::RealProjective
                 : kind == "lens_skeleton" ? Family::Kind::LensSkeleton
                                           : Family::Kind::LensSpace;
        f.n = static_cast<unsigned>(*get_int(j, "n", path, true, 1));
    } else if (kind == "torus_skeleton") {
        if (j.contains("n"))
            schema_fail(path + ".n", "torus_skeleton uses 'mu' and 'd'");
        f.kind = Family::Kind::TorusSkeleton;
        f.mu = static_cast<unsigned>(*get_int(j, "mu", path, true, 1));
        f.d = static_cast<unsigned>(*get_int(j, "d", path, true, 0));
    } else {
        schema_fail(path + ".kind", "must be one of rp, lens_skeleton, lens_space, torus_skeleton");
    }
    return f;
}

cohomology::AlgebraPtr parse_preset(const json& j, const std::string& path)
{
    check_keys(j, path, {"preset", "n", "mu"});
    const auto name = *get_string(j, "preset", path, true);
    if (name == "point") {
        if (j.contains("n") || j.contains("mu"))
            schema_fail(path, "preset 'point' takes no parameters");
        return cohomology::preset_point();
    }
    if (name == "torus_skeleton") {
        const auto mu = *get_int(j, "mu", path, true, 1);
        const auto d = *get_int(j, "n", path, true, 0);
        if (mu > 20 || d > mu)
            schema_fail(path, "torus_skeleton needs n <= mu <= 20");
        return cohomology::preset_torus_skeleton(static_cast<int>(mu), static_cast<int>(d));
    }
    if (j.contains("mu"))
        schema_fail(path + ".mu", "only used by preset torus_skeleton");
    const auto n = *get_int(j, "n", path, true, 1);
    if (n > 512)
        schema_fail(path + ".n", "preset parameter too large");
    const int ni = static_cast<int>(n);
    if (name == "rp")
        return cohomology::preset_rp(ni);
    if (name == "lens_skeleton")
        return cohomology::preset_lens_skeleton(ni);
    if (name == "lens_space")
        return cohomology::preset_lens_space(ni);
    if (name == "cp")
        return cohomology::preset_cp(ni);
    schema_fail(path + ".preset",
                "unknown preset '" + name + "' (rp, lens_skeleton, lens_space, cp, torus_skeleton, point)");
}

cohomology::AlgebraPtr parse_explicit(const json& j, const std::string& path)
{
    check_keys(j, path, {"p", "top_degree", "basis", "products", "generators", "orders"});
    const auto p = *get_int(j, "p", path, true, 0);
    if (p == 1)
        schema_fail(path + ".p", "must be 0 (integers) or >= 2");
    if (!j.contains("basis") || !j.at("basis").is_array() || j.at("basis").empty())
        schema_fail(path + ".basis", "expected a nonempty array");

    std::vector<cohomology::BasisElement> basis;
    std::map<std::string, std::uint32_t> index;
    int max_degree = 0;
    for (std::size_t i = 0; i < j.at("basis").size(); ++i) {
        const auto& b = j.at("basis")[i];
        const std::string bp = path + ".basis[" + std::to_string(i) + "]";
        check_keys(b, bp, {"label", "degree"});
        const auto label = *get_string(b, "label", bp, true);
        const auto degree = static_cast<int>(*get_int(b, "degree", bp, true, 0));
        if (label.empty() || label.find_first_of("()") != std::string::npos)
            schema_fail(bp + ".label", "labels must be nonempty and contain no parentheses");
        if (!index.emplace(label, static_cast<std::uint32_t>(i)).second)
            schema_fail(bp + ".label", "duplicate label '" + label + "'");
        if (i == 0 && degree != 0)
            schema_fail(bp, "the first basis element is the unit and must have degree 0");
        if (i > 0 && degree == 0)
            schema_fail(bp, "only the unit may have degree 0");
        max_degree = std::max(max_degree, degree);
        basis.push_back({label, degree});
    }
    const int top = static_cast<int>(get_int(j, "top_degree", path, false, 0).value_or(max_degree));
    if (top < max_degree)
        schema_fail(path + ".top_degree", "smaller than the largest basis degree");

    auto alg = std::make_shared<cohomology::GradedAlgebra>(p, top, basis);
    const auto lookup = [&](const std::string& label, const std::string& where) {
        const auto it = index.find(label);
        if (it == index.end())
            schema_fail(where, "unknown basis label '" + label + "'");
        return it->second;
    };

    if (j.contains("orders")) {
        if (p != 0)
            schema_fail(path + ".orders", "additive orders are only allowed when p = 0");
        const auto& o = j.at("orders");
        require_object(o, path + ".orders");
        for (const auto& [label, v] : o.items()) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                schema_fail(path + ".orders." + label, "expected a nonnegative integer");
            alg->set_additive_order(lookup(label, path + ".orders." + label), v.get<std::int64_t>());
        }
    }

    std::set<std::pair<std::uint32_t, std::uint32_t>> given;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, cohomology::SparseVector>> entries;
    if (j.contains("products")) {
        if (!j.at("products").is_array())
            schema_fail(path + ".products", "expected an array");
        for (std::size_t i = 0; i < j.at("products").size(); ++i) {
            const auto& e = j.at("products")[i];
            const std::string ep = path + ".products[" + std::to_string(i) + "]";
            check_keys(e, ep, {"left", "right", "result"});
            const auto l = lookup(*get_string(e, "left", ep, true), ep + ".left");
            const auto r = lookup(*get_string(e, "right", ep, true), ep + ".right");
            if (l == 0 || r == 0)
                schema_fail(ep, "products with the unit are implied");
            if (!given.emplace(l, r).second)
                schema_fail(ep, "duplicate product entry");
            if (!e.contains("result"))
                schema_fail(ep + ".result", "missing");
            const auto& res = e.at("result");
            require_object(res, ep + ".result");
            cohomology::SparseVector v;
            for (const auto& [label, c] : res.items()) {
                if (!c.is_number_integer())
                    schema_fail(ep + ".result." + label, "expected an integer coefficient");
                v.emplace_back(lookup(label, ep + ".result." + label), c.get<std::int64_t>());
            }
            entries.emplace_back(l, r, std::move(v));
        }
    }
    for (auto& [l, r, v] : entries) {
        // Reverse order by graded commutativity unless given explicitly.
        if (!given.contains({r, l})) {
            const int sign = (alg->degree(l) % 2 && alg->degree(r) % 2) ? -1 : 1;
            cohomology::SparseVector rv;
            for (auto [k, c] : v)
                rv.emplace_back(k, sign * c);
            alg->set_product(r, l, std::move(rv));
        }
        alg->set_product(l, r, v);
    }
    // Unlisted products of non-unit elements are zero.
    for (std::uint32_t a = 1; a < alg->dimension(); ++a)
        for (std::uint32_t b = 1; b < alg->dimension(); ++b)
            if (!given.contains({a, b}) && !given.contains({b, a}))
                alg->set_product(a, b, {});

    if (j.contains("generators")) {
        if (!j.at("generators").is_array())
            schema_fail(path + ".generators", "expected an array of labels");
        std::vector<std::uint32_t> gens;
        for (const auto& g : j.at("generators")) {
            if (!g.is_string())
                schema_fail(path + ".generators", "expected labels");
            gens.push_back(lookup(g.get<std::string>(), path + ".generators"));
        }
        alg->set_generators(std::move(gens));
    }

    const auto violations = cohomology::validate(*alg);
    if (!violations.empty()) {
        std::string msg = "algebra is not graded-commutative and associative: " + violations.front();
        if (violations.size() > 1)
            msg += " (and " + std::to_string(violations.size() - 1) + " more)";
        schema_fail(path, msg);
    }
    return alg;
}

std::string direction_name(Direction d)
{
    return bounds::to_string(d);
}

Direction parse_direction(const std::string& s)
{
    if (s == "lower")
        return Direction::Lower;
    if (s == "upper")
        return Direction::Upper;
    if (s == "cat_upper")
        return Direction::CatUpper;
    throw SchemaError("report: unknown rule direction '" + s + "'");
}

} // namespace

cohomology::AlgebraPtr parse_cohomology(const json& j, const std::string& path)
{
    require_object(j, path);
    try {
        if (j.contains("preset"))
            return parse_preset(j, path);
        return parse_explicit(j, path);
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

bounds::SpaceDescriptor parse_descriptor(const json& j)
{
    check_keys(j, "descriptor",
               {"name", "dim", "pi1", "manifold", "cat", "cohomology", "weights", "known_tc",
                "aspherical_target", "family"});
    bounds::SpaceDescriptor s;
    s.name = *get_string(j, "name", "descriptor", true);
    s.dim = static_cast<unsigned>(*get_int(j, "dim", "descriptor", true, 0));
    if (s.dim > 4096)
        schema_fail("descriptor.dim", "dimension too large");
    if (!j.contains("pi1"))
        schema_fail("descriptor.pi1", "missing");
    s.pi1 = parse_pi1(j.at("pi1"));
    if (s.pi1.kind == Pi1Kind::Cyclic && s.pi1.order == 1)
        s.pi1 = bounds::Pi1{};

    if (j.contains("manifold")) {
        const auto& m = j.at("manifold");
        check_keys(m, "manifold", {"closed", "wn_vanishes"});
        bounds::ManifoldInfo info;
        const auto closed = get_bool(m, "closed", "manifold");
        if (!closed)
            schema_fail("manifold.closed", "missing required boolean");
        info.closed = *closed;
        info.wn_vanishes = get_bool(m, "wn_vanishes", "manifold");
        s.manifold = info;
    }
    if (auto c = get_int(j, "cat", "descriptor", false, 1))
        s.cat = static_cast<unsigned>(*c);
    if (j.contains("cohomology"))
        s.cohomology = parse_cohomology(j.at("cohomology"));
    if (j.contains("weights")) {
        const auto& ws = j.at("weights");
        if (!ws.is_array())
            schema_fail("weights", "expected an array");
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const std::string wp = "weights[" + std::to_string(i) + "]";
            check_keys(ws[i], wp, {"class", "weight", "provenance"});
            s.weights.push_back({*get_string(ws[i], "class", wp, true),
                                 static_cast<unsigned>(*get_int(ws[i], "weight", wp, true, 1)),
                                 *get_string(ws[i], "provenance", wp, true)});
        }
    }
    if (j.contains("known_tc")) {
        const auto& k = j.at("known_tc");
        check_keys(k, "known_tc", {"value", "cite"});
        s.known_tc = bounds::KnownTc{static_cast<unsigned>(*get_int(k, "value", "known_tc", true, 1)),
                                     *get_string(k, "cite", "known_tc", true)};
    }
    s.aspherical_target = get_bool(j, "aspherical_target", "descriptor").value_or(false);
    if (j.contains("family"))
        s.family = parse_family(j.at("family"));

    bounds::check_descriptor(s);
    if (s.cohomology && !s.weights.empty()) {
        // Surface expression errors as schema errors at load time.
        const auto square = cohomology::kunneth(s.cohomology, s.cohomology);
        for (std::size_t i = 0; i < s.weights.size(); ++i) {
            try {
                const auto e = cohomology::parse_element(square, s.weights[i].expression);
                if (!cohomology::is_zero_divisor(square, e))
                    schema_fail("weights[" + std::to_string(i) + "].class",
                                "'" + s.weights[i].expression + "' is not a zero-divisor");
            } catch (const ValidationError& e) {
                schema_fail("weights[" + std::to_string(i) + "].class", e.what());
            }
        }
    }
    return s;
}

bounds::SpaceDescriptor parse_descriptor_text(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("descriptor: invalid JSON: ") + e.what());
    }
    return parse_descriptor(j);
}

std::string input_hash(const json& descriptor)
{
    const std::string canonical = descriptor.dump();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(canonical.data(), canonical.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return "sha256:" + os.str();
}

json report_to_json(const bounds::BoundReport& r, const std::string& hash)
{
    json rules = json::array();
    for (const auto& rule : r.rules)
        rules.push_back({{"id", rule.id},
                         {"direction", direction_name(rule.direction)},
                         {"value", rule.value},
                         {"citation", rule.citation},
                         {"inputs", rule.inputs}});
    json j = {{"tool", kToolName},
              {"version", kToolVersion},
              {"input_hash", hash},
              {"name", r.name},
              {"convention", r.reduced ? "reduced" : "unreduced"},
              {"lower", r.lower},
              {"upper", r.upper},
              {"lower_rule", r.lower_rule},
              {"upper_rule", r.upper_rule},
              {"rules", rules},
              {"assumptions", r.assumptions},
              {"notes", r.notes},
              {"registry", nullptr},
              {"known_tc", nullptr},
              {"aspherical_annotation", nullptr}};
    if (r.registry)
        j["registry"] = {{"family", r.registry->family},
                         {"value", r.registry->value},
                         {"citation", r.registry->citation}};
    if (r.known_tc)
        j["known_tc"] = {{"value", r.known_tc->value}, {"cite", r.known_tc->cite}};
    if (r.aspherical_annotation)
        j["aspherical_annotation"] = *r.aspherical_annotation;
    return j;
}

bounds::BoundReport report_from_json(const json& j)
{
    try {
        bounds::BoundReport r;
        r.name = j.at("name").get<std::string>();
        const auto conv = j.at("convention").get<std::string>();
        if (conv != "reduced" && conv != "unreduced")
            throw SchemaError("report.convention must be 'reduced' or 'unreduced'");
        r.reduced = conv == "reduced";
        r.lower = j.at("lower").get<std::int64_t>();
        r.upper = j.at("upper").get<std::int64_t>();
        r.lower_rule = j.at("lower_rule").get<std::string>();
        r.upper_rule = j.at("upper_rule").get<std::string>();
        for (const auto& rule : j.at("rules"))
            r.rules.push_back({rule.at("id").get<std::string>(),
                               parse_direction(rule.at("direction").get<std::string>()),
                               rule.at("value").get<std::int64_t>(), rule.at("citation").get<std::string>(),
                               rule.at("inputs").get<std::string>()});
        r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        if (!j.at("registry").is_null()) {
            const auto& g = j.at("registry");
            r.registry = bounds::RegistryEntry{g.at("family").get<std::string>(), g.at("value").get<unsigned>(),
                                               g.at("citation").get<std::string>()};
        }
        if (!j.at("known_tc").is_null())
            r.known_tc = bounds::KnownTc{j.at("known_tc").at("value").get<unsigned>(),
                                         j.at("known_tc").at("cite").get<std::string>()};
        if (!j.at("aspherical_annotation").is_null())
            r.aspherical_annotation = j.at("aspherical_annotation").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("report: ") + e.what());
    }
}

std::string render_text(const bounds::BoundReport& r)
{
    std::ostringstream os;
    os << r.name << ": TC in [" << r.lower << ", " << r.upper << "] ("
       << (r.reduced ? "reduced" : "unreduced") << " convention)\n";
    os << "  binding: lower from " << r.lower_rule << ", upper from " << r.upper_rule << "\n";
    os << "  rules fired:\n";
    for (const auto& rule : r.rules) {
        os << "    " << std::left << std::setw(9) << direction_name(rule.direction) << std::right
           << std::setw(4) << rule.value << "  " << std::left << std::setw(24) << rule.id << std::right
           << rule.citation;
        if (!rule.inputs.empty())
            os << " [" << rule.inputs << "]";
        os << "\n";
    }
    if (r.registry)
        os << "  registry: TC(" << r.registry->family << ") = " << r.registry->value << " -- "
           << r.registry->citation << "\n";
    if (r.known_tc)
        os << "  declared: TC = " << r.known_tc->value << " -- " << r.known_tc->cite << "\n";
    if (r.aspherical_annotation)
        os << "  inference: " << *r.aspherical_annotation << "\n";
    for (const auto& a : r.assumptions)
        os << "  assumption: " << a << "\n";
    for (const auto& n : r.notes)
        os << "  note: " << n << "\n";
    return os.str();
}

} // namespace tcb::io
