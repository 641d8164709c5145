// Times the OpenMP entry-assembly kernels against their serial reference
// implementations and checks that both produce identical exact output.

#include <chrono>
#include <cstring>
#include <iostream>

#include "nfourier/corpus.hpp"
#include "nfourier/fourier.hpp"
#include "nfourier/graded.hpp"

using namespace nfourier;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_fourier(const std::string& name) {
  GroupPtr g = named_group(name);
  MSet m(g);

  auto t0 = Clock::now();
  CycloMat serial = fourier_entries_serial(m);
  double ts = seconds_since(t0);

  auto t1 = Clock::now();
  CycloMat parallel = fourier_entries_parallel(m);
  double tp = seconds_since(t1);

  bool equal = serial == parallel;
  std::cout << "fourier " << name << "  |M|=" << m.size() << "  serial " << ts << "s  parallel "
            << tp << "s  speedup " << (tp > 0 ? ts / tp : 0.0)
            << (equal ? "" : "  MISMATCH") << "\n";
  if (!equal) std::exit(1);
}

void bench_hat(const std::string& label, const ZGradedGroup& d) {
  QuotientContext q(d, canonical_xi(d, 1));
  MiEta m0(q, 0), m1(q, 1);

  auto t0 = Clock::now();
  CycloMat serial = hat_matrix_serial(q, m0, m1);
  double ts = seconds_since(t0);

  auto t1 = Clock::now();
  CycloMat parallel = hat_matrix(q, m0, m1, true);
  double tp = seconds_since(t1);

  bool equal = serial == parallel;
  std::cout << "hat " << label << "  " << m0.size() << "x" << m1.size() << "  serial " << ts
            << "s  parallel " << tp << "s  speedup " << (tp > 0 ? ts / tp : 0.0)
            << (equal ? "" : "  MISMATCH") << "\n";
  if (!equal) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  bool with_s5 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--s5") == 0) with_s5 = true;

  bench_fourier("S4");
  bench_fourier("Zn:8");
  bench_fourier("A4");
  if (with_s5) bench_fourier("S5");

  bench_hat("(Z6,id)", graded_identity(cyclic_group(6)));
  bench_hat("(S3,inner)", graded_inner(named_group("S3"), named_group("S3")->class_rep(1)));
  return 0;
}
