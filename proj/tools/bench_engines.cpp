// Timing harness comparing the serial and OpenMP execution of the three
// data-parallel workloads: the exact coefficient grid, a batch of direct
// star oracles, and a batch of shell expansions. Results must match
// bit-for-bit between the two runs; any mismatch aborts the benchmark.

#include <omp.h>

#include <cstdio>
#include <string>
#include <vector>

#include <tstar/finite.hpp>
#include <tstar/parallel.hpp>
#include <tstar/series.hpp>

using namespace tstar;

namespace {

struct Workload {
  std::string name;
  long items;
  std::vector<std::string> (*run)(bool parallel);
};

std::vector<std::string> coefficient_grid(bool parallel) {
  struct Job {
    long n;
    BlockForm b;
  };
  std::vector<Job> jobs;
  for (long n = 1; n <= 5; ++n)
    for (int c1 : {1, 3, 4, 5})
      for (int a0 = 0; a0 <= 2; ++a0)
        for (int a1 = 0; a1 <= 2; ++a1)
          for (int c2 : {1, 3, 4, 5})
            for (int a2 = 0; a2 <= 1; ++a2)
              jobs.push_back({n, BlockForm({a0, a1, a2}, {c1, c2})});
  return par::map_indexed<std::string>(static_cast<long>(jobs.size()), parallel, [&](long i) {
    const Job& j = jobs[static_cast<std::size_t>(i)];
    Rat closed = finite::gn_coefficient_closed(j.n, j.b);
    Rat brute = finite::t_harmonic_star(j.n, expand_blocks(j.b));
    if (closed != brute) throw std::logic_error("coefficient grid mismatch");
    return rat_str(closed);
  });
}

std::vector<std::string> kernel_identity_grid(bool parallel) {
  struct Job {
    long n, l, c;
  };
  std::vector<Job> jobs;
  for (long n = 1; n <= 36; ++n)
    for (long l = 1; l <= n; ++l)
      for (long c = 0; c <= 4; ++c) jobs.push_back({n, l, c});
  return par::map_indexed<std::string>(static_cast<long>(jobs.size()), parallel, [&](long i) {
    const Job& j = jobs[static_cast<std::size_t>(i)];
    auto [lhs, rhs] = finite::identity_vsharp_binomial(j.n, j.l, j.c);
    if (lhs != rhs) throw std::logic_error("kernel identity mismatch");
    return rat_str(lhs);
  });
}

std::vector<std::string> oracle_batch(bool parallel) {
  const std::vector<std::vector<int>> indices = {{2}, {3}, {2, 2}, {2, 3},    {3, 1},   {2, 1, 2},
                                                 {4}, {5}, {3, 3}, {2, 1, 1}, {2, 2, 2}, {3, 1, 3}};
  return par::map_indexed<std::string>(static_cast<long>(indices.size()), parallel, [&](long i) {
    TruncatedValue tv = series::t_star_direct(Index(indices[static_cast<std::size_t>(i)]), 200000, 25);
    return tv.estimate.str(25);
  });
}

std::vector<std::string> shell_batch(bool parallel) {
  struct Job {
    std::vector<int> a, c;
  };
  const std::vector<Job> jobs = {{{1}, {}},     {{2}, {}},          {{1, 0}, {3}},
                                 {{0, 1}, {3}}, {{0, 0}, {4}},      {{1, 1}, {3}},
                                 {{1, 0}, {5}}, {{0, 0, 0}, {3, 1}}, {{0, 1, 0}, {3, 3}}};
  return par::map_indexed<std::string>(static_cast<long>(jobs.size()), parallel, [&](long i) {
    const Job& j = jobs[static_cast<std::size_t>(i)];
    TruncatedValue tv = series::t_star_closed_blocks(BlockForm(j.a, j.c), 6000, 25);
    return tv.estimate.str(25);
  });
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", par::thread_count());
  std::printf("%-22s %10s %12s %12s %9s %7s\n", "workload", "items", "serial [s]", "openmp [s]",
              "speedup", "match");

  struct Entry {
    const char* name;
    std::vector<std::string> (*fn)(bool);
  };
  const Entry entries[] = {{"coefficient grid", coefficient_grid},
                           {"kernel identity grid", kernel_identity_grid},
                           {"direct star batch", oracle_batch},
                           {"shell expansion batch", shell_batch}};

  bool all_match = true;
  for (const Entry& e : entries) {
    double t0 = omp_get_wtime();
    std::vector<std::string> serial = e.fn(false);
    double t1 = omp_get_wtime();
    std::vector<std::string> parallel = e.fn(true);
    double t2 = omp_get_wtime();
    bool match = serial == parallel;
    all_match = all_match && match;
    std::printf("%-22s %10zu %12.3f %12.3f %8.2fx %7s\n", e.name, serial.size(), t1 - t0, t2 - t1,
                (t1 - t0) / (t2 - t1), match ? "yes" : "NO");
  }
  return all_match ? 0 : 1;
}
