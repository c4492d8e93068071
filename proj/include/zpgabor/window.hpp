#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zpgabor/cyclotomic.hpp"
#include "zpgabor/group.hpp"

namespace zpgabor {

inline bool scalar_is_zero(const CycNum& v) { return v.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& v) { return v == std::complex<double>(0.0, 0.0); }

inline CycNum scalar_conj(const CycNum& v) { return v.conj(); }
inline std::complex<double> scalar_conj(const std::complex<double>& v) { return std::conj(v); }

/// Function Z_p^d -> scalars, indexed in canonical point order, with the
/// support tracked at construction. Immutable; the two instantiations are the
/// exact backend (CycNum) and its floating shadow (complex<double>).
template <typename S>
class WindowT {
public:
    WindowT(const GroupParams& g, std::vector<S> values)
        : params_(g), values_(std::move(values)), support_(g) {
        if (static_cast<std::int64_t>(values_.size()) != g.size) {
            throw std::invalid_argument("Window: value count must equal p^d");
        }
        for (std::int64_t i = 0; i < g.size; ++i) {
            if (!scalar_is_zero(values_[static_cast<std::size_t>(i)])) support_.insert(i);
        }
    }

    const GroupParams& params() const { return params_; }
    const std::vector<S>& values() const { return values_; }
    const S& value(std::int64_t idx) const { return values_[static_cast<std::size_t>(idx)]; }
    const S& operator[](std::int64_t idx) const { return value(idx); }
    const PointSet& support() const { return support_; }

private:
    GroupParams params_;
    std::vector<S> values_;
    PointSet support_;
};

using Window = WindowT<CycNum>;
using FloatWindow = WindowT<std::complex<double>>;

/// 1_E as an exact window.
Window indicator_window(const PointSet& e);

/// Constant window g = c on the whole group.
Window make_constant_window(const GroupParams& g, const Rational& c);

Window window_from_rationals(const GroupParams& g, const std::vector<Rational>& values);

/// Numerical embedding of the exact window (zeta -> e^{2 pi i / p}).
FloatWindow to_float(const Window& w);

/// Nonnegative rational weight w : Z_p^d -> [0, inf). Wraps an exact window
/// whose values are all rational and >= 0; records the total mass.
class WeightFn {
public:
    explicit WeightFn(Window w);

    static WeightFn from_rationals(const GroupParams& g, const std::vector<Rational>& values);

    const Window& window() const { return w_; }
    const GroupParams& params() const { return w_.params(); }
    const PointSet& support() const { return w_.support(); }
    const Rational& mass() const { return mass_; }
    const Rational& value(std::int64_t idx) const { return rvalues_[static_cast<std::size_t>(idx)]; }
    const std::vector<Rational>& rational_values() const { return rvalues_; }

    /// Copy rescaled to total mass 1. Requires nonzero mass.
    WeightFn normalized() const;

private:
    Window w_;
    std::vector<Rational> rvalues_;
    Rational mass_;
};

}  // namespace zpgabor
