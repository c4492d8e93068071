#include "zpgabor/window.hpp"

namespace zpgabor {

Window indicator_window(const PointSet& e) {
    const GroupParams& g = e.params();
    std::vector<CycNum> values(static_cast<std::size_t>(g.size), CycNum::zero(g.p));
    e.for_each_index([&](std::int64_t i) { values[static_cast<std::size_t>(i)] = CycNum::one(g.p); });
    return Window(g, std::move(values));
}

Window make_constant_window(const GroupParams& g, const Rational& c) {
    std::vector<CycNum> values(static_cast<std::size_t>(g.size), CycNum::from_rational(g.p, c));
    return Window(g, std::move(values));
}

Window window_from_rationals(const GroupParams& g, const std::vector<Rational>& values) {
    if (static_cast<std::int64_t>(values.size()) != g.size) {
        throw std::invalid_argument("window_from_rationals: value count must equal p^d");
    }
    std::vector<CycNum> cv;
    cv.reserve(values.size());
    for (const Rational& q : values) cv.push_back(CycNum::from_rational(g.p, q));
    return Window(g, std::move(cv));
}

FloatWindow to_float(const Window& w) {
    std::vector<std::complex<double>> values;
    values.reserve(w.values().size());
    for (const CycNum& v : w.values()) values.push_back(v.to_complex());
    return FloatWindow(w.params(), std::move(values));
}

WeightFn::WeightFn(Window w) : w_(std::move(w)) {
    rvalues_.reserve(w_.values().size());
    for (const CycNum& v : w_.values()) {
        auto q = v.as_rational();
        if (!q) throw std::invalid_argument("WeightFn: values must be rational");
        if (!q->is_nonnegative()) throw std::invalid_argument("WeightFn: values must be >= 0");
        mass_ += *q;
        rvalues_.push_back(std::move(*q));
    }
}

WeightFn WeightFn::from_rationals(const GroupParams& g, const std::vector<Rational>& values) {
    return WeightFn(window_from_rationals(g, values));
}

WeightFn WeightFn::normalized() const {
    if (mass_.is_zero()) throw std::invalid_argument("WeightFn::normalized: zero mass");
    std::vector<Rational> scaled;
    scaled.reserve(rvalues_.size());
    for (const Rational& q : rvalues_) scaled.push_back(q / mass_);
    return WeightFn::from_rationals(w_.params(), scaled);
}

}  // namespace zpgabor
