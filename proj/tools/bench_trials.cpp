// Benchmark: OpenMP trial loop vs. the single-threaded reference path, with a
// bit-exactness check between the two.

#include "crmcast/csv.hpp"
#include "crmcast/simulator.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    crmcast::NetworkParams params;
    params.num_trials = argc > 1 ? std::atoi(argv[1]) : 500;
    const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
    omp_set_num_threads(threads);

    const crmcast::SimConfig config{crmcast::Scheme::Pos, crmcast::TreeKind::Spt,
                                    crmcast::MetricKind::Etx};

    using clock = std::chrono::steady_clock;

    const auto t0 = clock::now();
    const auto serial = crmcast::run_trials(params, config, false);
    const auto t1 = clock::now();
    const auto parallel = crmcast::run_trials(params, config, true);
    const auto t2 = clock::now();

    const double serial_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double parallel_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
        identical = serial[i].throughput == parallel[i].throughput &&
                    serial[i].pdr == parallel[i].pdr;
    }

    const auto summary = crmcast::summarize(parallel);
    std::printf("trials            %d\n", params.num_trials);
    std::printf("threads           %d\n", threads);
    std::printf("serial            %.1f ms\n", serial_ms);
    std::printf("parallel          %.1f ms\n", parallel_ms);
    std::printf("speedup           %.2fx\n", serial_ms / parallel_ms);
    std::printf("bit-identical     %s\n", identical ? "yes" : "NO");
    std::printf("throughput        %s bits/s\n", crmcast::format_full(summary.throughput).c_str());
    std::printf("pdr               %s\n", crmcast::format_full(summary.pdr).c_str());
    return identical ? 0 : 1;
}
