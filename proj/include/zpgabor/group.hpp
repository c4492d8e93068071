#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "zpgabor/cyclotomic.hpp"
#include "zpgabor/verdict.hpp"

namespace zpgabor {

/// Parameters of the ambient group Z_p^d. The p^d enumeration cap keeps the
/// O(p^{2d}) kernels at desk scale; construction with allow_large lifts it.
struct GroupParams {
    static constexpr std::int64_t kDefaultCap = 30000;

    GroupParams(std::uint32_t p_, std::uint32_t d_, bool allow_large = false);

    std::uint32_t p = 2;
    std::uint32_t d = 1;
    std::int64_t size = 2;  // p^d

    friend bool operator==(const GroupParams& a, const GroupParams& b) {
        return a.p == b.p && a.d == b.d;
    }
    friend bool operator!=(const GroupParams& a, const GroupParams& b) { return !(a == b); }
};

/// Element of Z_p^d, componentwise reduced.
struct Point {
    std::vector<std::int32_t> coords;

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// Canonical enumeration: lexicographic on coords, i.e. the mixed-radix integer
/// with the first coordinate most significant.
std::int64_t point_to_index(const GroupParams& g, const Point& x);
Point index_to_point(const GroupParams& g, std::int64_t idx);

Point make_point(const GroupParams& g, std::vector<std::int64_t> coords);

std::int64_t index_add(const GroupParams& g, std::int64_t a, std::int64_t b);
std::int64_t index_sub(const GroupParams& g, std::int64_t a, std::int64_t b);
std::int64_t index_neg(const GroupParams& g, std::int64_t a);

/// sum x_i * y_i mod p.
std::uint32_t dot(const GroupParams& g, const Point& x, const Point& y);
std::uint32_t dot_index(const GroupParams& g, std::int64_t xi, std::int64_t yi);

/// zeta^{x . m} as an exact cyclotomic number.
CycNum character(const GroupParams& g, const Point& x, const Point& m);

/// Subset of Z_p^d as a dense bitset over the canonical enumeration.
class PointSet {
public:
    explicit PointSet(const GroupParams& g);

    static PointSet empty(const GroupParams& g) { return PointSet(g); }
    static PointSet full(const GroupParams& g);
    static PointSet from_indices(const GroupParams& g, const std::vector<std::int64_t>& idx);
    static PointSet from_points(const GroupParams& g, const std::vector<Point>& pts);
    static PointSet singleton(const GroupParams& g, const Point& x);
    /// Bit i of mask = membership of index i; group size must be <= 64.
    static PointSet from_mask64(const GroupParams& g, std::uint64_t mask);

    const GroupParams& params() const { return params_; }

    bool contains(std::int64_t idx) const {
        return (bits_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
    }
    void insert(std::int64_t idx);
    void erase(std::int64_t idx);

    std::int64_t size() const;
    bool is_empty() const { return size() == 0; }

    /// Member indices in ascending order.
    std::vector<std::int64_t> indices() const;
    std::vector<Point> points() const;

    void for_each_index(const std::function<void(std::int64_t)>& fn) const;

    PointSet translate(const Point& a) const;
    PointSet translate_index(std::int64_t a_idx) const;
    PointSet negate() const;

    std::uint64_t mask64() const;

    /// Lexicographic comparison of the ascending index sequences
    /// (a proper prefix sorts first). Total order used by the searches.
    int lex_compare(const PointSet& o) const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.params_ == b.params_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

private:
    GroupParams params_;
    std::vector<std::uint64_t> bits_;
};

/// {e + a : e in E}; alias of PointSet::translate for the free-function surface.
PointSet translate_set(const PointSet& e, const Point& a);

/// d = 2 only: true iff E = {(x, u(x))} for some u : Z_p -> Z_p,
/// i.e. every abscissa occurs exactly once.
Verdict is_graph(const PointSet& e);

/// A = Z_p^k x {0}, B = {0} x Z_p^{d-k}; |A| * |B| = p^d.
std::pair<PointSet, PointSet> subgroup_and_complement(const GroupParams& g, std::uint32_t k);

}  // namespace zpgabor
