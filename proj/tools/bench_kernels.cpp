#include "holosim/causal.hpp"
#include "holosim/cuts.hpp"
#include "holosim/network.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    int radius = argc > 1 ? std::atoi(argv[1]) : 4;
    int regions = argc > 2 ? std::atoi(argv[2]) : 400;
    if (radius < 1 || radius > 8 || regions < 1) {
        std::fprintf(stderr, "usage: bench_kernels [radius 1..8] [regions >= 1]\n");
        return 2;
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif

    holosim::TessellationSpec spec;
    spec.R = radius;
    auto net = holosim::build_tessellation(spec);
    std::printf("network {%d,%d} R=%d: %d tensors, %zu boundary legs\n", spec.p, spec.q, spec.R,
                net.tensor_count(), net.boundary_legs.size());

    auto schedule = holosim::uniform_schedule(spec.R);
    auto t0 = std::chrono::steady_clock::now();
    auto serial = holosim::butterfly_profile_serial(net, schedule);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = holosim::butterfly_profile(net, schedule);
    auto t2 = std::chrono::steady_clock::now();
    bool same = serial.need == parallel.need;
    std::printf("cone profile: serial %.3fs, parallel %.3fs, speedup %.2fx, identical: %s\n",
                seconds(t0, t1), seconds(t1, t2), seconds(t0, t1) / seconds(t1, t2),
                same ? "yes" : "NO");

    std::mt19937 rng(1234);
    int nb = static_cast<int>(net.boundary_walk.size());
    std::uniform_int_distribution<int> start(0, nb - 1);
    std::uniform_int_distribution<int> len(1, nb / 4);
    std::vector<holosim::RegionSpec> batch;
    for (int i = 0; i < regions; ++i) {
        int s = start(rng), l = len(rng);
        holosim::RegionSpec r;
        for (int j = 0; j < l; ++j) r.push_back(net.boundary_walk[(s + j) % nb]);
        batch.push_back(std::move(r));
    }
    t0 = std::chrono::steady_clock::now();
    auto caps_serial = holosim::batch_min_cut_capacities_serial(net, batch);
    t1 = std::chrono::steady_clock::now();
    auto caps_parallel = holosim::batch_min_cut_capacities(net, batch);
    t2 = std::chrono::steady_clock::now();
    std::printf("batch min-cut (%d regions): serial %.3fs, parallel %.3fs, speedup %.2fx, "
                "identical: %s\n",
                regions, seconds(t0, t1), seconds(t1, t2), seconds(t0, t1) / seconds(t1, t2),
                caps_serial == caps_parallel ? "yes" : "NO");
    return (same && caps_serial == caps_parallel) ? 0 : 1;
}
