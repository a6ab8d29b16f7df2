#include "diorec/bound.hpp"

#include <stdexcept>
#include <utility>

namespace diorec {

namespace {

// k^3 * m <= 1, decided exactly
bool cube_fits(const Int& k, const AlgebraicNumber& m) {
    if (k == 0) return true;
    Rat bar(Int(1), int_pow(k, 3));
    bar.canonicalize();
    return m.compare(bar) != Order::greater;
}

}  // namespace

BoundReport search_bound(std::vector<MinReport> reports) {
    bool ok = !reports.empty();
    for (const auto& r : reports) ok = ok && r.positive;
    if (!ok) return BoundReport{std::move(reports), Int(1), false};

    // binding minimum: the smallest one (x -> x^(-1/3) is decreasing)
    const AlgebraicNumber* m = &reports.front().minimum;
    for (const auto& r : reports)
        if (r.minimum.compare(*m) == Order::less) m = &r.minimum;

    // largest k with k^3 * m <= 1: grow, then bisect
    Int lo(0), hi(1);
    while (cube_fits(hi, *m)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        (cube_fits(mid, *m) ? lo : hi) = mid;
    }
    Int limit = lo + 1;
    if (!cube_fits(Int(limit - 1), *m) || cube_fits(limit, *m))
        throw std::logic_error("search bound sandwich failed");
    return BoundReport{std::move(reports), limit, true};
}

Rat asymptotic_limit(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::invalid_argument("asymptotic_limit needs a, b >= 1");
    Rat main(Int(a * a));
    Rat lin(Int(b * b * a), Int(12));
    lin.canonicalize();
    Rat half(Int(3 * b), Int(2));
    half.canonicalize();
    Rat quart(Int(b * b * b * b), Int(72));
    quart.canonicalize();
    return Rat(main + lin + half + quart);
}

}  // namespace diorec
