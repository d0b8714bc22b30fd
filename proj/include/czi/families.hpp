#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"
#include "coloring.hpp"
#include "indices.hpp"

// Closed-form evaluators for graph families. Nothing here enumerates
// colorings; every value is plain integer arithmetic so that it can be
// checked against the enumeration engine.

namespace czi {

/// as_printed evaluates the published expressions literally; corrected
/// applies the label-reversal consistently where the printed form cannot
/// match enumeration.
enum class FormulaVariant { as_printed, corrected };

inline const char* to_string(FormulaVariant v) { return v == FormulaVariant::as_printed ? "as_printed" : "corrected"; }

struct CompleteGraphForms {
    Value cm1, cm2, cm3, m1, m2, m3;
};

inline CompleteGraphForms complete_graph_forms(Value n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph order must be >= 1");
    CompleteGraphForms f{};
    f.cm1 = checked_mul(checked_mul(n, n + 1), 2 * n + 1) / 6;
    // sum_{i<j} i*j = ((sum i)^2 - sum i^2) / 2
    Value s = n * (n + 1) / 2;
    f.cm2 = (checked_mul(s, s) - f.cm1) / 2;
    Value l = n - 1;
    f.cm3 = checked_mul(l, checked_add(checked_mul(l, l), 3 * l + 2)) / 6;
    f.m1 = checked_mul(n, checked_mul(n - 1, n - 1));
    f.m2 = checked_mul(n, checked_mul(checked_mul(n - 1, n - 1), n - 1)) / 2;
    f.m3 = 0;
    return f;
}

struct TreeForms {
    Value cm1_lo, cm1_hi, cm2, cm3;
};

inline TreeForms tree_forms(Value n)
{
    if (n < 4)
        throw std::invalid_argument("tree bounds are stated for order >= 4");
    return {n + 3, 4 * n - 3, 2 * (n - 1), n - 1};
}

struct MultipartiteForms {
    Value cm1_min, cm1_max, cm2_min, cm2_max, cm3;
};

/// Part sizes must be ascending; part i (1-based) is weighted by color i for
/// the maximum forms.
inline MultipartiteForms multipartite_forms(const std::vector<std::size_t>& sizes, FormulaVariant variant)
{
    const auto r = static_cast<Value>(sizes.size());
    if (r < 2)
        throw std::invalid_argument("need at least two parts");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("part sizes must be sorted ascending");
    if (sizes.front() < 1)
        throw std::invalid_argument("part sizes must be >= 1");

    auto part = [&](Value i) { return static_cast<Value>(sizes[static_cast<std::size_t>(i - 1)]); };

    MultipartiteForms f{};
    for (Value i = 1; i <= r; ++i)
        f.cm1_max = checked_add(f.cm1_max, checked_mul(part(i), i * i));
    for (Value i = 0; i <= r - 1; ++i)
        f.cm1_min = checked_add(f.cm1_min, checked_mul(part(i + 1), (r - i) * (r - i)));

    const Value shift = variant == FormulaVariant::as_printed ? r : r + 1;
    for (Value i = 1; i <= r - 1; ++i)
        for (Value j = i + 1; j <= r; ++j) {
            Value w = checked_mul(part(i), part(j));
            f.cm2_max = checked_add(f.cm2_max, checked_mul(w, i * j));
            f.cm2_min = checked_add(f.cm2_min, checked_mul(w, (shift - i) * (shift - j)));
            f.cm3 = checked_add(f.cm3, checked_mul(w, j - i));
        }
    return f;
}

struct EqualMultipartiteForms {
    Value cm1, cm2, cm3_printed, cm3_pairsum;
};

/// r parts of n vertices each.
inline EqualMultipartiteForms equal_multipartite_forms(Value n, Value r)
{
    if (n < 1 || r < 2)
        throw std::invalid_argument("need n >= 1 and r >= 2");
    EqualMultipartiteForms f{};
    f.cm1 = checked_mul(n, checked_mul(checked_mul(r, r + 1), 2 * r + 1) / 6);
    Value s = 0;
    for (Value i = 2; i <= r; ++i)
        s = checked_add(s, checked_mul(i * i, i - 1));
    // i^2 (i-1) is always even
    f.cm2 = checked_mul(checked_mul(n, n), s / 2);
    Value printed = 0;
    for (Value i = 1; i <= r - 1; ++i)
        printed = checked_add(printed, i * (r - 1));
    f.cm3_printed = checked_mul(checked_mul(n, n), printed);
    Value pairs = 0;
    for (Value i = 1; i <= r - 1; ++i)
        for (Value j = i + 1; j <= r; ++j)
            pairs += j - i;
    f.cm3_pairsum = checked_mul(checked_mul(n, n), pairs);
    return f;
}

// ---------------------------------------------------------------------------
// Uniform thorn graphs: every base vertex receives m pendant vertices.

struct ThornInputs {
    // extrema of the base graph
    Value cm1_min = 0, cm1_max = 0, cm2_min = 0, cm2_max = 0, cm3_min = 0, cm3_max = 0;
    Value m = 0;
    Value n = 0;   // base order
    Value ell = 0; // base chromatic number
    StrengthVector theta;  // coloring attaining the M1 minimum, sorted descending
    StrengthVector theta2; // ... the M2 minimum
    StrengthVector theta3; // ... the M3 minimum
};

struct ThornForms {
    Value cm1_min, cm1_max, cm2_min, cm2_max, cm3_min, cm3_max;
};

/// The six thorn-graph formulas. as_printed takes them literally: the M2
/// minimum sums the M1 strengths and the M3 maximum increment carries no
/// factor m. corrected uses the M2 strengths and scales that increment by m.
inline ThornForms thorn_forms(const ThornInputs& in, FormulaVariant variant)
{
    const Value ell = in.ell;
    const Value m = in.m;
    const Value n = in.n;
    if (ell < 2)
        throw std::invalid_argument("thorn formulas need at least two colors");
    if (m < 0)
        throw std::invalid_argument("pendant count must be >= 0");
    for (const auto* th : {&in.theta, &in.theta2, &in.theta3}) {
        if (static_cast<Value>(th->size()) != ell)
            throw std::invalid_argument("strength vector length must equal the number of colors");
        if (static_cast<Value>(std::accumulate(th->begin(), th->end(), std::size_t{0})) != n)
            throw std::invalid_argument("strength vector does not sum to the base order");
        if (!std::is_sorted(th->begin(), th->end(), std::greater<>()))
            throw std::invalid_argument("strength vector must be sorted descending");
    }
    auto t = [](const StrengthVector& v, Value i) { return static_cast<Value>(v.at(static_cast<std::size_t>(i - 1))); };

    ThornForms f{};
    const Value t1 = t(in.theta, 1);

    f.cm1_min = in.cm1_min + 4 * m * t1 + m * (n - t1);
    f.cm1_max = in.cm1_max + m * (ell - 1) * (ell - 1) * t1 + m * ell * ell * (n - t1);

    const auto& tail_theta = variant == FormulaVariant::as_printed ? in.theta : in.theta2;
    f.cm2_min = in.cm2_min + 2 * m * t(in.theta2, 1);
    for (Value i = 2; i <= ell; ++i)
        f.cm2_min += m * i * t(tail_theta, i);

    f.cm2_max = in.cm2_max + m * ell * (ell - 1) * t(in.theta2, 1);
    for (Value i = 2; i <= ell; ++i)
        f.cm2_max += m * ell * (ell + 1 - i) * t(in.theta2, i);

    f.cm3_min = in.cm3_min + m * n;

    Value inc = 0;
    const Value half = ell / 2;
    if (ell % 2 == 1) {
        const Value mid = (ell + 1) / 2;
        inc += half * t(in.theta3, mid);
        for (Value i = 1; i <= half; ++i)
            inc += (ell - i) * t(in.theta3, i);
        for (Value i = mid; i <= ell - 1; ++i)
            inc += i * t(in.theta3, i + 1);
    }
    else {
        for (Value i = 1; i <= half; ++i)
            inc += (ell - i) * t(in.theta3, i);
        for (Value i = half; i <= ell - 1; ++i)
            inc += i * t(in.theta3, i + 1);
    }
    f.cm3_max = in.cm3_max + (variant == FormulaVariant::as_printed ? inc : m * inc);
    return f;
}

/// Sorted-descending strength vector of a coloring.
inline StrengthVector sorted_strengths(const Coloring& c)
{
    auto th = strengths(c);
    std::sort(th.begin(), th.end(), std::greater<>());
    return th;
}

/// Thorn inputs taken from a base-graph report: the theta vectors come from
/// the minimum witnesses of M1, M2 and M3.
inline ThornInputs thorn_inputs(const IndexReport& base, Value m)
{
    ThornInputs in;
    in.cm1_min = base.cm_min(1);
    in.cm1_max = base.cm_max(1);
    in.cm2_min = base.cm_min(2);
    in.cm2_max = base.cm_max(2);
    in.cm3_min = base.cm_min(3);
    in.cm3_max = base.cm_max(3);
    in.m = m;
    in.n = static_cast<Value>(base.order);
    in.ell = static_cast<Value>(base.chi);
    in.theta = sorted_strengths(base.extrema[1].min_witness);
    in.theta2 = sorted_strengths(base.extrema[2].min_witness);
    in.theta3 = sorted_strengths(base.extrema[3].min_witness);
    return in;
}

} // namespace czi
