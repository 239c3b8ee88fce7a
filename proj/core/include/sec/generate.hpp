#pragma once

#include "sec/instance.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace sec {

enum class Family : std::uint8_t { SparseMad3, PlanarGirth7, Cycle, Tree, C5Blowup };

std::string_view family_name(Family f);
/// Accepts "SPARSE_MAD3", "sparse_mad3", "planar-girth7", ...
std::optional<Family> parse_family(std::string_view name);

struct GenSpec {
    Family family = Family::Cycle;
    std::uint32_t vertices = 7;   ///< target vertex count (Cycle, Tree, SparseMad3, PlanarGirth7)
    std::uint32_t max_degree = 4; ///< Δ for C5Blowup (even), degree cap for Tree / SparseMad3
    std::uint32_t delta_cap = 4;  ///< degree cap for PlanarGirth7
    std::uint64_t seed = 0;
};

/// Deterministic: the same spec always yields the same instance. Throws
/// InputError for unsatisfiable specs.
Instance generate(const GenSpec& spec);

/// 64-bit Mersenne Twister with a portable bounded draw, so sequences do not
/// depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

} // namespace sec
