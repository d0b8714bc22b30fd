#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

// Brute-force reference for the chromatic extrema. Shares nothing with the
// search engine: chi is found by trying k = 1, 2, ... over all k^n
// assignments, and the indices are evaluated from their defining sums (M1 in
// its color-class form). Meant for order <= 8.

namespace czi::oracle {

struct Extreme {
    std::int64_t min = 0;
    std::vector<std::uint32_t> min_witness;
    std::int64_t max = 0;
    std::vector<std::uint32_t> max_witness;
};

struct Result {
    std::size_t chi = 0;
    std::uint64_t proper_surjective = 0;
    std::array<Extreme, 3> index; // M1, M2, M3
};

namespace detail {

/// Calls fn(assignment) for every vector in {1..k}^n in lexicographic order.
template <class Fn>
void odometer(std::size_t n, std::size_t k, Fn&& fn)
{
    std::vector<std::uint32_t> a(n, 1);
    while (true) {
        fn(a);
        std::size_t i = n;
        while (i > 0 && a[i - 1] == k) {
            a[i - 1] = 1;
            --i;
        }
        if (i == 0)
            return;
        ++a[i - 1];
    }
}

inline bool proper(const Graph& g, const std::vector<std::uint32_t>& a)
{
    for (const auto& [u, v] : g.edges())
        if (a[u] == a[v])
            return false;
    return true;
}

} // namespace detail

inline std::size_t naive_chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        throw std::invalid_argument("empty graph");
    if (g.order() > 10)
        throw std::invalid_argument("naive oracle is limited to order <= 10");
    for (std::size_t k = 1;; ++k) {
        bool found = false;
        detail::odometer(g.order(), k, [&](const auto& a) {
            if (!found && detail::proper(g, a))
                found = true;
        });
        if (found)
            return k;
    }
}

/// Min and max of M1, M2, M3 over every proper assignment V -> {1..chi}
/// that uses all chi colors. Witnesses are the lexicographically least.
inline Result naive_extrema(const Graph& g)
{
    Result r;
    r.chi = naive_chromatic_number(g);
    const auto n = g.order();
    const auto k = r.chi;
    bool first = true;
    std::vector<std::int64_t> theta(k + 1);
    detail::odometer(n, k, [&](const std::vector<std::uint32_t>& a) {
        if (!detail::proper(g, a))
            return;
        std::fill(theta.begin(), theta.end(), 0);
        for (auto c : a)
            ++theta[c];
        for (std::size_t j = 1; j <= k; ++j)
            if (theta[j] == 0)
                return;
        ++r.proper_surjective;

        std::int64_t vals[3] = {0, 0, 0};
        for (std::size_t j = 1; j <= k; ++j)
            vals[0] += theta[j] * static_cast<std::int64_t>(j * j);
        for (const auto& [u, v] : g.edges()) {
            std::int64_t s = a[u], t = a[v];
            vals[1] += s * t;
            vals[2] += s > t ? s - t : t - s;
        }
        for (int i = 0; i < 3; ++i) {
            auto& e = r.index[i];
            if (first || vals[i] < e.min) {
                e.min = vals[i];
                e.min_witness = a;
            }
            if (first || vals[i] > e.max) {
                e.max = vals[i];
                e.max_witness = a;
            }
        }
        first = false;
    });
    return r;
}

} // namespace czi::oracle
