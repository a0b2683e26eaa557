#pragma once

#include "tcbound/cohomology.hpp"
#include "tcbound/tclower.hpp"
#include "tcbound/vclass.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcb::bounds {

enum class Pi1Kind { Trivial, Cyclic, CdBounded, FreeAbelian, Other };

struct Pi1 {
    Pi1Kind kind = Pi1Kind::Trivial;
    std::uint32_t order = 1;  // Cyclic
    std::uint32_t cd = 0;     // CdBounded; also set for FreeAbelian when the rank is known
    std::optional<std::uint32_t> rank;  // FreeAbelian

    bool operator==(const Pi1&) const = default;
};

struct ManifoldInfo {
    bool closed = false;
    std::optional<bool> wn_vanishes;

    bool operator==(const ManifoldInfo&) const = default;
};

struct KnownTc {
    unsigned value = 0;
    std::string cite;

    bool operator==(const KnownTc&) const = default;
};

// Registry family a descriptor claims to belong to.
struct Family {
    enum class Kind { RealProjective, LensSkeleton, LensSpace, TorusSkeleton };
    Kind kind = Kind::RealProjective;
    unsigned n = 0;   // RP^n, lens parameter n
    unsigned mu = 0;  // torus dimension
    unsigned d = 0;   // skeleton dimension

    bool operator==(const Family&) const = default;
};

struct WeightSpec {
    std::string expression;
    unsigned weight = 1;
    std::string provenance;
};

struct SpaceDescriptor {
    std::string name;
    unsigned dim = 0;
    Pi1 pi1;
    std::optional<ManifoldInfo> manifold;
    std::optional<unsigned> cat;
    cohomology::AlgebraPtr cohomology;
    std::vector<WeightSpec> weights;
    std::optional<KnownTc> known_tc;
    bool aspherical_target = false;
    std::optional<Family> family;
};

enum class Direction { Lower, Upper, CatUpper };

struct FiredRule {
    std::string id;
    Direction direction = Direction::Upper;
    std::int64_t value = 0;
    std::string citation;
    std::string inputs;

    bool operator==(const FiredRule&) const = default;
};

struct RegistryEntry {
    std::string family;
    unsigned value = 0;
    std::string citation;

    bool operator==(const RegistryEntry&) const = default;
};

struct BoundReport {
    std::string name;
    bool reduced = false;  // display convention; evaluate() always produces unreduced
    std::int64_t lower = 1;
    std::int64_t upper = 1;
    std::string lower_rule;
    std::string upper_rule;
    std::vector<FiredRule> rules;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
    std::optional<RegistryEntry> registry;
    std::optional<KnownTc> known_tc;
    std::optional<std::string> aspherical_annotation;

    bool operator==(const BoundReport&) const = default;
};

struct EvaluateOptions {
    unsigned max_depth = 0;  // 0 selects 2 dim
    bool exhaustive = false;
    std::size_t frontier_cap = 200000;
};

// Throws SchemaError when a descriptor is internally inconsistent (e.g. a
// family that does not match dim or pi1).
void check_descriptor(const SpaceDescriptor& s);

std::optional<RegistryEntry> registry_lookup(const SpaceDescriptor& s);

// Annotation TC(K(pi_1, 1)) >= 2 dim + 1 when TC(X) = 2 dim + 1 is certified
// by `certified_tc`.
std::optional<std::string> aspherical_inference(const SpaceDescriptor& s,
                                                std::optional<unsigned> certified_tc);

// Fires every applicable rule; throws InconsistencyError naming the two rules
// when lower > upper or a declared value falls outside the interval.
BoundReport evaluate(const SpaceDescriptor& s, const EvaluateOptions& opts = {});

// Shifts every TC value by -1 (reduced) or +1 (back to unreduced).
BoundReport with_convention(BoundReport r, bool reduced);

const char* to_string(Direction d);
const char* to_string(Pi1Kind k);

} // namespace tcb::bounds
