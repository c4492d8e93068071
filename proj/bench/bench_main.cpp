// Compares the OpenMP kernels against their serial references and reports
// wall times plus a result-equality check for each pair.

#include <chrono>
#include <cstdio>
#include <random>

#include "zpgabor/fourier.hpp"
#include "zpgabor/gabor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zpgabor;

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

Window random_int_window(const GroupParams& g, std::mt19937& rng) {
    std::uniform_int_distribution<long long> v(-9, 9);
    std::vector<Rational> values(static_cast<std::size_t>(g.size));
    for (auto& q : values) q = Rational(v(rng));
    return window_from_rationals(g, values);
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.2f ms %10.2f ms   x%.2f   results %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "equal" : "DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

    std::mt19937 rng(1);

    {  // exact transform, p = 13, d = 2
        const GroupParams g(13, 2);
        const Window w = random_int_window(g, rng);
        auto t0 = clock_type::now();
        const Window a = dft_serial(w);
        const double ts = ms_since(t0);
        t0 = clock_type::now();
        const Window b = dft(w);
        const double tp = ms_since(t0);
        row("exact dft (p=13, d=2)", ts, tp, a.values() == b.values());
    }

    {  // float transform, p = 53, d = 2
        const GroupParams g(53, 2);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<std::complex<double>> values(static_cast<std::size_t>(g.size));
        for (auto& v : values) v = {u(rng), u(rng)};
        const FloatWindow w(g, std::move(values));
        auto t0 = clock_type::now();
        const FloatWindow a = dft_serial(w);
        const double ts = ms_since(t0);
        t0 = clock_type::now();
        const FloatWindow b = dft(w);
        const double tp = ms_since(t0);
        bool equal = true;
        for (std::int64_t i = 0; i < g.size; ++i) equal &= (a.value(i) == b.value(i));
        row("float dft (p=53, d=2)", ts, tp, equal);
    }

    {  // naive pairwise reference vs the difference-factorized kernel, p = 7
        const Window f = make_gauss_window(7);
        std::vector<Rational> ones(7, Rational(1));
        ones[6] = Rational(-1);
        const Window h = window_from_rationals(GroupParams(7, 1), ones);
        const GaborSystem sys(make_product_window(f, h),
                              subgroup_and_complement(GroupParams(7, 2), 1).first,
                              subgroup_and_complement(GroupParams(7, 2), 1).second);
        auto t0 = clock_type::now();
        const Verdict vs = is_orthonormal_basis_serial(sys);
        const double ts = ms_since(t0);
        t0 = clock_type::now();
        const Verdict vp = is_orthonormal_basis(sys);
        const double tp = ms_since(t0);
        row("gram: naive vs kernel (p=7, d=2)", ts, tp, vs.passed() == vp.passed() && vs.passed());
    }

#ifdef _OPENMP
    {  // the same kernel, one thread vs all threads, p = 13
        const Window f = make_gauss_window(13);
        std::vector<Rational> ones(13, Rational(1));
        ones[12] = Rational(-1);
        const Window h = window_from_rationals(GroupParams(13, 1), ones);
        const GaborSystem sys(make_product_window(f, h),
                              subgroup_and_complement(GroupParams(13, 2), 1).first,
                              subgroup_and_complement(GroupParams(13, 2), 1).second);
        const int threads = omp_get_max_threads();
        omp_set_num_threads(1);
        auto t0 = clock_type::now();
        const Verdict v1 = is_orthonormal_basis(sys);
        const double ts = ms_since(t0);
        omp_set_num_threads(threads);
        t0 = clock_type::now();
        const Verdict vn = is_orthonormal_basis(sys);
        const double tp = ms_since(t0);
        row("gram kernel 1 vs N threads (p=13)", ts, tp, v1.passed() == vn.passed() && v1.passed());
    }
#endif

    return 0;
}
