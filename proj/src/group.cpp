#include "zpgabor/group.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <stdexcept>

#include "zpgabor/numutil.hpp"

namespace zpgabor {

GroupParams::GroupParams(std::uint32_t p_, std::uint32_t d_, bool allow_large) : p(p_), d(d_) {
    if (!is_prime(p)) throw std::domain_error("GroupParams: p must be prime");
    if (d < 1 || d > 4) throw std::domain_error("GroupParams: 1 <= d <= 4");
    size = checked_pow(p, d, std::int64_t(1) << 40);
    if (size > kDefaultCap) {
        if (!allow_large) {
            throw std::domain_error("GroupParams: p^d exceeds the enumeration cap (use allow_large)");
        }
        std::fprintf(stderr, "warning: p^d = %lld exceeds the %lld-point enumeration cap\n",
                     static_cast<long long>(size), static_cast<long long>(kDefaultCap));
    }
}

std::int64_t point_to_index(const GroupParams& g, const Point& x) {
    if (x.coords.size() != g.d) throw std::invalid_argument("point_to_index: dimension mismatch");
    std::int64_t idx = 0;
    for (std::uint32_t i = 0; i < g.d; ++i) {
        idx = idx * g.p + x.coords[i];
    }
    return idx;
}

Point index_to_point(const GroupParams& g, std::int64_t idx) {
    Point x;
    x.coords.assign(g.d, 0);
    for (std::uint32_t i = g.d; i-- > 0;) {
        x.coords[i] = static_cast<std::int32_t>(idx % g.p);
        idx /= g.p;
    }
    return x;
}

Point make_point(const GroupParams& g, std::vector<std::int64_t> coords) {
    if (coords.size() != g.d) throw std::invalid_argument("make_point: dimension mismatch");
    Point x;
    x.coords.reserve(g.d);
    for (std::int64_t c : coords) x.coords.push_back(static_cast<std::int32_t>(pos_mod(c, g.p)));
    return x;
}

std::int64_t index_add(const GroupParams& g, std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    std::int64_t mul = 1;
    for (std::uint32_t i = 0; i < g.d; ++i) {
        const std::int64_t da = a % g.p, db = b % g.p;
        out += ((da + db) % g.p) * mul;
        a /= g.p;
        b /= g.p;
        mul *= g.p;
    }
    return out;
}

std::int64_t index_sub(const GroupParams& g, std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    std::int64_t mul = 1;
    for (std::uint32_t i = 0; i < g.d; ++i) {
        const std::int64_t da = a % g.p, db = b % g.p;
        out += pos_mod(da - db, g.p) * mul;
        a /= g.p;
        b /= g.p;
        mul *= g.p;
    }
    return out;
}

std::int64_t index_neg(const GroupParams& g, std::int64_t a) { return index_sub(g, 0, a); }

std::uint32_t dot(const GroupParams& g, const Point& x, const Point& y) {
    if (x.coords.size() != g.d || y.coords.size() != g.d) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < g.d; ++i) {
        acc += static_cast<std::uint64_t>(x.coords[i]) * static_cast<std::uint64_t>(y.coords[i]);
    }
    return static_cast<std::uint32_t>(acc % g.p);
}

std::uint32_t dot_index(const GroupParams& g, std::int64_t xi, std::int64_t yi) {
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < g.d; ++i) {
        acc += static_cast<std::uint64_t>(xi % g.p) * static_cast<std::uint64_t>(yi % g.p);
        xi /= g.p;
        yi /= g.p;
    }
    return static_cast<std::uint32_t>(acc % g.p);
}

CycNum character(const GroupParams& g, const Point& x, const Point& m) {
    return CycNum::root_power(g.p, dot(g, x, m));
}

PointSet::PointSet(const GroupParams& g) : params_(g) {
    bits_.assign(static_cast<std::size_t>((g.size + 63) / 64), 0);
}

PointSet PointSet::full(const GroupParams& g) {
    PointSet s(g);
    for (std::int64_t i = 0; i < g.size; ++i) s.insert(i);
    return s;
}

PointSet PointSet::from_indices(const GroupParams& g, const std::vector<std::int64_t>& idx) {
    PointSet s(g);
    for (std::int64_t i : idx) s.insert(i);
    return s;
}

PointSet PointSet::from_points(const GroupParams& g, const std::vector<Point>& pts) {
    PointSet s(g);
    for (const Point& x : pts) s.insert(point_to_index(g, x));
    return s;
}

PointSet PointSet::singleton(const GroupParams& g, const Point& x) {
    PointSet s(g);
    s.insert(point_to_index(g, x));
    return s;
}

PointSet PointSet::from_mask64(const GroupParams& g, std::uint64_t mask) {
    if (g.size > 64) throw std::invalid_argument("from_mask64: group larger than 64 points");
    PointSet s(g);
    while (mask) {
        const int i = std::countr_zero(mask);
        if (i >= g.size) throw std::invalid_argument("from_mask64: bit beyond group size");
        s.insert(i);
        mask &= mask - 1;
    }
    return s;
}

void PointSet::insert(std::int64_t idx) {
    if (idx < 0 || idx >= params_.size) throw std::out_of_range("PointSet::insert");
    bits_[static_cast<std::size_t>(idx >> 6)] |= (std::uint64_t(1) << (idx & 63));
}

void PointSet::erase(std::int64_t idx) {
    if (idx < 0 || idx >= params_.size) throw std::out_of_range("PointSet::erase");
    bits_[static_cast<std::size_t>(idx >> 6)] &= ~(std::uint64_t(1) << (idx & 63));
}

std::int64_t PointSet::size() const {
    std::int64_t n = 0;
    for (std::uint64_t w : bits_) n += std::popcount(w);
    return n;
}

std::vector<std::int64_t> PointSet::indices() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_index([&](std::int64_t i) { out.push_back(i); });
    return out;
}

std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each_index([&](std::int64_t i) { out.push_back(index_to_point(params_, i)); });
    return out;
}

void PointSet::for_each_index(const std::function<void(std::int64_t)>& fn) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            const int b = std::countr_zero(word);
            fn(static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(b)));
            word &= word - 1;
        }
    }
}

PointSet PointSet::translate(const Point& a) const { return translate_index(point_to_index(params_, a)); }

PointSet PointSet::translate_index(std::int64_t a_idx) const {
    PointSet out(params_);
    for_each_index([&](std::int64_t i) { out.insert(index_add(params_, i, a_idx)); });
    return out;
}

PointSet PointSet::negate() const {
    PointSet out(params_);
    for_each_index([&](std::int64_t i) { out.insert(index_neg(params_, i)); });
    return out;
}

std::uint64_t PointSet::mask64() const {
    if (params_.size > 64) throw std::invalid_argument("mask64: group larger than 64 points");
    return bits_.empty() ? 0 : bits_[0];
}

int PointSet::lex_compare(const PointSet& o) const {
    if (params_ != o.params_) throw std::invalid_argument("lex_compare: parameter mismatch");
    const auto a = indices();
    const auto b = o.indices();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

PointSet translate_set(const PointSet& e, const Point& a) { return e.translate(a); }

Verdict is_graph(const PointSet& e) {
    const GroupParams& g = e.params();
    if (g.d != 2) throw std::invalid_argument("is_graph: requires d = 2");
    std::vector<std::int32_t> count(g.p, 0);
    e.for_each_index([&](std::int64_t i) { count[static_cast<std::size_t>(i / g.p)] += 1; });
    for (std::uint32_t x = 0; x < g.p; ++x) {
        if (count[x] != 1) {
            return Verdict::failure(
                count[x] == 0 ? "abscissa missing" : "abscissa repeated",
                {{"abscissa", x}, {"occurrences", count[x]}});
        }
    }
    return Verdict::ok("graph of a function", {{"size", e.size()}});
}

std::pair<PointSet, PointSet> subgroup_and_complement(const GroupParams& g, std::uint32_t k) {
    if (k < 1 || k >= g.d) throw std::invalid_argument("subgroup_and_complement: 1 <= k < d");
    PointSet a(g);
    PointSet b(g);
    for (std::int64_t i = 0; i < g.size; ++i) {
        const Point x = index_to_point(g, i);
        bool tail_zero = true;
        for (std::uint32_t j = k; j < g.d; ++j) tail_zero &= (x.coords[j] == 0);
        bool head_zero = true;
        for (std::uint32_t j = 0; j < k; ++j) head_zero &= (x.coords[j] == 0);
        if (tail_zero) a.insert(i);
        if (head_zero) b.insert(i);
    }
    return {a, b};
}

}  // namespace zpgabor
