#include "skeinkit/sampler.hpp"

#include <stdexcept>
#include <vector>

#include "skeinkit/constructors.hpp"

namespace skeinkit {

int DiagramSampler::below(int n) {
    if (n < 1) throw std::invalid_argument("sampler: bound must be positive");
    auto bound = static_cast<std::uint32_t>(n);
    std::uint32_t limit = 0xffffffffu - 0xffffffffu % bound;
    std::uint32_t draw;
    do {
        draw = rng_();
    } while (draw >= limit);
    return static_cast<int>(draw % bound);
}

Diagram DiagramSampler::seed_diagram(int max_crossings) {
    static const std::vector<std::vector<int>> pretzel_words = {
        {1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {2, 3}, {2, 2}, {-1, -1, -1}, {1, 1, 1, 1, 1}, {3, -1, 2},
    };
    static const std::vector<std::vector<int>> plat_words = {
        {1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {3, 1, 1}, {1, 1, 1, 1, 1}, {2, 2, 1},
    };
    for (;;) {
        Diagram d;
        switch (below(4)) {
            case 0:
                d = Diagram::unlink(1 + below(2));
                break;
            case 1:
                d = torus2(2 + below(5));
                break;
            case 2:
                d = pretzel(pretzel_words[below(static_cast<int>(pretzel_words.size()))]);
                break;
            default:
                d = four_plat(plat_words[below(static_cast<int>(plat_words.size()))]);
                break;
        }
        if (static_cast<int>(d.crossings.size()) <= max_crossings) return d;
    }
}

Diagram DiagramSampler::sample(int max_crossings) {
    Diagram d = seed_diagram(max_crossings);
    int mutations = below(3);
    for (int step = 0; step < mutations; ++step) {
        int c = static_cast<int>(d.crossings.size());
        switch (below(6)) {
            case 0:
                if (c >= 1 && c + 2 <= max_crossings) d = twist_replace(d, below(c));
                break;
            case 1:
                if (c >= 1 && c + 1 <= max_crossings) d = half_to_full(d, below(c));
                break;
            case 2:
                if (c >= 1) d = switch_crossing(d, below(c));
                break;
            case 3:
                d = mirror(d);
                break;
            case 4:
                d = reverse_all(d);
                break;
            default:
                if (static_cast<int>(d.components.size()) < 4)
                    d = disjoint_union(d, Diagram::unknot());
                break;
        }
    }
    return d;
}

}  // namespace skeinkit
