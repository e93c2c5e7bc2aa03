#include "fragqsp/fragment.hpp"

#include "fragqsp/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fragqsp {

std::int32_t FragmentBasis::index_of(const FockState& s) const {
    auto it = index.find(s.bits);
    if (it == index.end())
        throw std::invalid_argument("state not in fragment");
    return it->second;
}

FragmentBasis build_fragment(const FockState& seed, std::size_t capacity) {
    FragmentBasis basis;
    basis.length = seed.length;
    basis.seed_charges = charges(seed);

    std::unordered_map<std::uint64_t, std::int32_t> seen;
    seen.reserve(1024);
    std::deque<FockState> frontier;
    seen.emplace(seed.bits, 0);
    frontier.push_back(seed);

    while (!frontier.empty()) {
        const FockState s = frontier.front();
        frontier.pop_front();
        for (int j = 1; j <= s.length - 3; ++j) {
            const std::uint64_t window = (s.bits >> (j - 1)) & 0xF;
            if (window != 0b0110 && window != 0b1001) continue;
            const std::uint64_t next = s.bits ^ (std::uint64_t{0xF} << (j - 1));
            if (seen.emplace(next, 0).second) {
                if (seen.size() > capacity)
                    throw CapacityError("fragment exceeds state budget of " +
                                        std::to_string(capacity) + " states");
                frontier.push_back(FockState{next, s.length});
            }
        }
    }

    basis.states.reserve(seen.size());
    for (const auto& [bits, _] : seen)
        basis.states.push_back(FockState{bits, seed.length});
    std::sort(basis.states.begin(), basis.states.end(),
              [](const FockState& a, const FockState& b) { return a.bits < b.bits; });
    basis.index.reserve(basis.states.size());
    for (std::size_t k = 0; k < basis.states.size(); ++k)
        basis.index.emplace(basis.states[k].bits, static_cast<std::int32_t>(k));
    return basis;
}

FragmentBasis build_fragment(const PseudospinString& seed, std::size_t capacity) {
    return build_fragment(encode(seed), capacity);
}

std::vector<Region> partition_regions(const PseudospinString& text) {
    if (text.empty())
        throw std::invalid_argument("empty pseudospin string");
    for (char c : text)
        if (c != 'u' && c != 'd' && c != '+' && c != '-')
            throw std::invalid_argument("pseudospin characters are u, d, +, -");

    const int n = static_cast<int>(text.size());
    const auto is_fracton = [&](int m) { return text[m] == '+' || text[m] == '-'; };

    // Walls: maximal fracton stretches that are uniform and of length >= 2.
    // A mixed stretch like "-++-" can be broken by adjacent spins, so it
    // stays part of an active region.
    std::vector<Region> walls;
    int m = 0;
    while (m < n) {
        if (!is_fracton(m)) { ++m; continue; }
        int e = m;
        while (e + 1 < n && is_fracton(e + 1)) ++e;
        bool uniform = true;
        for (int k = m + 1; k <= e; ++k)
            if (text[k] != text[m]) { uniform = false; break; }
        if (uniform && e > m)
            walls.push_back({m + 1, e + 1, RegionKind::FrozenWall});
        m = e + 1;
    }

    std::vector<Region> regions;
    const auto classify = [&](int first, int last) {
        bool pure = true;
        for (int k = first; k <= last; ++k)
            if (is_fracton(k - 1)) { pure = false; break; }
        regions.push_back({first, last,
                           pure ? RegionKind::Integrable : RegionKind::Nonintegrable});
    };

    int cursor = 1;
    for (const Region& w : walls) {
        if (w.first > cursor) classify(cursor, w.first - 1);
        regions.push_back(w);
        cursor = w.last + 1;
    }
    if (cursor <= n) classify(cursor, n);
    return regions;
}

bool verify_factorization(const PseudospinString& text, std::size_t capacity) {
    const auto regions = partition_regions(text);
    std::size_t active = 0;
    for (const Region& r : regions)
        if (r.kind != RegionKind::FrozenWall) ++active;
    if (active < 2)
        throw std::invalid_argument("factorization check needs at least two active regions");

    const std::size_t full = build_fragment(text, capacity).dim();
    std::size_t product = 1;
    for (const Region& r : regions) {
        if (r.kind == RegionKind::FrozenWall) continue;
        const PseudospinString part = text.substr(r.first - 1, r.size());
        product *= build_fragment(part, capacity).dim();
    }
    return full == product;
}

} // namespace fragqsp
