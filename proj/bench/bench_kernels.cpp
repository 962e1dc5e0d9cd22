// Compares the serial reference kernels against the OpenMP variants at the
// layer shapes the experiments actually run, and verifies on the way that
// both produce bit-identical outputs.
//
//   ./bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "numerics/kernels.hpp"
#include "numerics/rng.hpp"

using namespace dvfl;

namespace {

struct Shape {
    const char* name;
    uint32_t batch, in, out;
};

double time_ms(int repeats, const auto& fn) {
    fn();  // warm up
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) fn();
    std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    return d.count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 50;
    const Shape shapes[] = {
        {"mnist layer0 (64x784 -> 10)", 64, 784, 10},
        {"hidden (64x10 -> 10)", 64, 10, 10},
        {"eval batch (10000x784 -> 10)", 10000, 784, 10},
        {"wide (256x1024 -> 256)", 256, 1024, 256},
    };

    std::printf("%-32s %12s %12s %8s %s\n", "shape", "serial ms", "openmp ms", "speedup",
                "bit-identical");
    bool all_equal = true;
    for (const Shape& s : shapes) {
        Rng rng(7);
        Matrix x(s.batch, s.in), w(s.out, s.in), dy(s.batch, s.out);
        std::vector<float> b(s.out);
        for (auto& v : x.data) v = rng.uniform(-1, 1);
        for (auto& v : w.data) v = rng.uniform(-1, 1);
        for (auto& v : dy.data) v = rng.uniform(-1, 1);
        for (auto& v : b) v = rng.uniform(-1, 1);

        Matrix ys(s.batch, s.out), yo(s.batch, s.out);
        Matrix dxs(s.batch, s.in), dxo(s.batch, s.in);
        Matrix dws(s.out, s.in), dwo(s.out, s.in);

        double serial = time_ms(repeats, [&] {
            linear_forward_serial(x, w, b, ys);
            linear_backward_input_serial(dy, w, dxs);
            linear_backward_weight_serial(dy, x, dws);
        });
        double omp = time_ms(repeats, [&] {
            linear_forward_omp(x, w, b, yo);
            linear_backward_input_omp(dy, w, dxo);
            linear_backward_weight_omp(dy, x, dwo);
        });
        bool equal = ys.bit_equal(yo) && dxs.bit_equal(dxo) && dws.bit_equal(dwo);
        all_equal = all_equal && equal;
        std::printf("%-32s %12.3f %12.3f %7.2fx %s\n", s.name, serial, omp, serial / omp,
                    equal ? "yes" : "NO");
    }
    if (!all_equal) {
        std::fprintf(stderr, "kernel outputs diverged\n");
        return 1;
    }
    return 0;
}
