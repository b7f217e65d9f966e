#pragma once

#include <cstdint>
#include <random>

#include "skeinkit/diagram.hpp"

namespace skeinkit {

// Deterministic pseudo-random diagrams for property tests: the same seed
// yields the same sequence on every platform, because draws go through an
// explicit rejection loop on the mt19937 word stream instead of the
// implementation-defined distribution classes.
class DiagramSampler {
public:
    explicit DiagramSampler(std::uint32_t seed) : rng_(seed) {}

    // Uniform integer in [0, n); n >= 1.
    int below(int n);

    // A valid diagram with at most max_crossings crossings: one of the
    // constructor families, pushed through a few random surgeries and
    // symmetries that respect the crossing cap.
    Diagram sample(int max_crossings = 8);

private:
    std::mt19937 rng_;

    Diagram seed_diagram(int max_crossings);
};

}  // namespace skeinkit
