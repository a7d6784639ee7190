// Timing harness for the enumeration kernels: the partitioned (OpenMP) class
// walk against the serial reference walk, on identical queries.  Both must
// produce the same histogram; the point of the serial path is exactly this
// comparison, so the benchmark re-checks equality on every run.

#include "rsweight/counting.hpp"
#include "rsweight/oracle.hpp"

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}   // namespace

int main(int argc, char** argv) {
    using namespace rsw;

    std::uint32_t p = 3, a = 2;
    std::int64_t k = 6;
    int rounds = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        std::string value = argv[i + 1];
        if (flag == "--p") p = static_cast<std::uint32_t>(std::stoul(value));
        else if (flag == "--a") a = static_cast<std::uint32_t>(std::stoul(value));
        else if (flag == "--k") k = std::stoll(value);
        else if (flag == "--rounds") rounds = std::stoi(value);
        else {
            std::cerr << "usage: rsweight_bench [--p P] [--a A] [--k K] [--rounds N]\n";
            return 1;
        }
    }

    Field field(p, a);
    CountQuery query{&field, domain_full(field), k, {0, 0}, 0};
    Budget budget;
    budget.max_steps = ~0ull;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif
    std::cout << "query: q=" << field.q() << " k=" << k << " ell=2, "
              << "class walk of q^k = " << pow_big(BigInt(field.q()), static_cast<std::uint64_t>(k))
              << " members\n";

    double best_serial = 1e300, best_parallel = 1e300;
    for (int round = 0; round < rounds; ++round) {
        auto t0 = Clock::now();
        DistanceHistogram serial = distance_distribution_serial(query, budget);
        double dt_serial = seconds_since(t0);

        t0 = Clock::now();
        DistanceHistogram parallel = distance_distribution(query, budget);
        double dt_parallel = seconds_since(t0);

        if (!(serial.counts == parallel.counts && serial.total == parallel.total)) {
            std::cerr << "kernel mismatch: serial and partitioned histograms differ\n";
            return 1;
        }
        best_serial = std::min(best_serial, dt_serial);
        best_parallel = std::min(best_parallel, dt_parallel);
        std::cout << "round " << round + 1 << ": serial " << dt_serial << "s, partitioned "
                  << dt_parallel << "s\n";
    }
    std::cout << "best: serial " << best_serial << "s, partitioned " << best_parallel
              << "s, speedup x" << best_serial / best_parallel << "\n";
    std::cout << "histograms identical across kernels\n";
    return 0;
}
