// Compares the OpenMP Monte-Carlo kernel against the serial reference and
// checks that both produce bit-identical estimates.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "pinchlink/montecarlo.hpp"

using namespace pinchlink;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    SystemConfig cfg;
    cfg.constants.c = 3.0e8;
    McOptions opts;
    opts.trials = 200000;
    opts.seed = 42;
    if (argc > 1) opts.trials = std::atoll(argv[1]);

    std::printf("%-8s %12s %12s %9s %10s\n", "scheme", "serial (s)", "parallel (s)",
                "speedup", "identical");
    bool all_identical = true;
    for (Scheme s : kAllSchemes) {
        auto t0 = std::chrono::steady_clock::now();
        const McEstimate serial = estimate_snr_serial(s, cfg, opts);
        const double t_serial = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const McEstimate parallel = estimate_snr(s, cfg, opts);
        const double t_parallel = seconds_since(t0);

        const bool identical =
            std::memcmp(&serial.mean_snr_linear, &parallel.mean_snr_linear,
                        sizeof(double)) == 0 &&
            std::memcmp(&serial.std_error, &parallel.std_error, sizeof(double)) == 0;
        all_identical = all_identical && identical;
        std::printf("%-8s %12.3f %12.3f %8.2fx %10s\n",
                    std::string(scheme_name(s)).c_str(), t_serial, t_parallel,
                    t_serial / t_parallel, identical ? "yes" : "NO");
    }
    return all_identical ? 0 : 1;
}
