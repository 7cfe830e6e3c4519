// Serial reference vs OpenMP kernels: momentum scans and termwise field operators.
//
//   bench_kernels [points] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dtte/dirac_solver.hpp"
#include "dtte/random.hpp"

using namespace dtte;

namespace {

double time_ms(int repeats, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) body();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / repeats;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int points = argc > 1 ? std::atoi(argv[1]) : 20000;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel path runs serially\n");
#endif

  const auto& rep = standard_representation();
  Rng rng(1);
  std::vector<Covector> momenta;
  for (int j = 0; j < points; ++j) momenta.push_back(random_covector(rng));
  const Potential a(random_covector(rng));

  std::size_t sink = 0;
  const double scan_serial = time_ms(repeats, [&] {
    sink += dispersion_scan(1.0, a, momenta, rep, Exec::serial).size();
  });
  const double scan_parallel = time_ms(repeats, [&] {
    sink += dispersion_scan(1.0, a, momenta, rep, Exec::parallel).size();
  });
  report("dispersion_scan", scan_serial, scan_parallel);

  const auto field = random_field(rng, points);
  const double res_serial = time_ms(repeats, [&] { sink += dtte_residual(field, a, 1.0, Exec::serial).terms().size(); });
  const double res_parallel =
      time_ms(repeats, [&] { sink += dtte_residual(field, a, 1.0, Exec::parallel).terms().size(); });
  report("dtte_residual (termwise)", res_serial, res_parallel);

  const double cod_serial = time_ms(repeats, [&] { sink += codifferential(field, Exec::serial).terms().size(); });
  const double cod_parallel = time_ms(repeats, [&] { sink += codifferential(field, Exec::parallel).terms().size(); });
  report("codifferential (termwise)", cod_serial, cod_parallel);

  return sink == 0 ? 1 : 0;
}
