#pragma once

// The inversive generator x -> a*x^-1 + b over Z/(p^e) (x -> b on the ideal
// (p)), its associated second-order recurrence, and the brute-force
// eventual-period oracle.

#include <cstdint>
#include <vector>

#include "iprng/ring_zpe.hpp"

namespace iprng {

struct GeneratorParams {
    Residue a;
    Residue b;
    Residue x0;

    friend auto operator<=>(const GeneratorParams&, const GeneratorParams&) = default;
};

/// Transient length, cycle length, and the first state on the cycle.
struct OrbitResult {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 1;
    Residue cycle_representative;

    friend bool operator==(const OrbitResult&, const OrbitResult&) = default;
};

inline Residue step(const RingContext& ring, Residue x, Residue a, Residue b) {
    if (!ring.is_unit(x)) return b;
    return ring.add(ring.mul(a, ring.inverse(x)), b);
}

/// x_0 .. x_n.
inline std::vector<Residue> orbit(const RingContext& ring, const GeneratorParams& params, std::uint64_t n) {
    std::vector<Residue> out;
    out.reserve(n + 1);
    out.push_back(params.x0);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(step(ring, out.back(), params.a, params.b));
    return out;
}

/// Reusable first-visit table for eventual_period. Entries are reset after
/// each call so one instance can serve a whole sweep.
class OrbitScratch {
public:
    explicit OrbitScratch(std::uint64_t modulus) : first_visit_(modulus, kUnvisited) {}

    std::uint64_t size() const noexcept { return first_visit_.size(); }

private:
    static constexpr std::uint32_t kUnvisited = 0xFFFFFFFFU;

    std::vector<std::uint32_t> first_visit_;
    std::vector<std::uint64_t> touched_;

    friend OrbitResult eventual_period(const RingContext&, const GeneratorParams&, OrbitScratch&);
};

/// Iterates from x0 until a state repeats; the first revisited state starts
/// the cycle. Terminates within p^e + 1 steps.
inline OrbitResult eventual_period(const RingContext& ring, const GeneratorParams& params, OrbitScratch& scratch) {
    auto& seen = scratch.first_visit_;
    auto& touched = scratch.touched_;
    Residue x = params.x0;
    std::uint32_t index = 0;
    while (seen[x.value] == OrbitScratch::kUnvisited) {
        seen[x.value] = index++;
        touched.push_back(x.value);
        x = step(ring, x, params.a, params.b);
    }
    OrbitResult out{seen[x.value], index - seen[x.value], x};
    for (std::uint64_t v : touched) seen[v] = OrbitScratch::kUnvisited;
    touched.clear();
    return out;
}

inline OrbitResult eventual_period(const RingContext& ring, const GeneratorParams& params) {
    OrbitScratch scratch(ring.modulus());
    return eventual_period(ring, params, scratch);
}

/// y_0 .. y_n of y_{k+2} = b*y_{k+1} + a*y_k with y_0 = 1, y_1 = x0.
inline std::vector<Residue> lfsr_sequence(const RingContext& ring, Residue a, Residue b, Residue x0, std::uint64_t n) {
    std::vector<Residue> y;
    y.reserve(n + 1);
    y.push_back(ring.one());
    if (n >= 1) y.push_back(x0);
    for (std::uint64_t k = 2; k <= n; ++k) {
        y.push_back(ring.add(ring.mul(b, y[k - 1]), ring.mul(a, y[k - 2])));
    }
    return y;
}

/// True iff x_n = y_{n+1} / y_n for every n <= m such that y_0 .. y_n are
/// all units.
inline bool check_lemma4(const RingContext& ring, Residue a, Residue b, Residue x0, std::uint64_t m) {
    const auto y = lfsr_sequence(ring, a, b, x0, m + 1);
    const auto x = orbit(ring, GeneratorParams{a, b, x0}, m);
    for (std::uint64_t n = 0; n <= m; ++n) {
        if (!ring.is_unit(y[n])) return true;
        if (x[n] != ring.mul(y[n + 1], ring.inverse(y[n]))) return false;
    }
    return true;
}

}  // namespace iprng
