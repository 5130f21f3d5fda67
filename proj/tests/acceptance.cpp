// Acceptance gate: every shipped criterion runs here at its stated
// tolerance, one summary line per criterion, nonzero exit on any failure.

#include <omp.h>

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <tstar/verify.hpp>

using tstar::verify::CheckRecord;
using tstar::verify::VerifyConfig;

namespace {

struct Outcome {
  bool pass;
  std::size_t checks;
  std::size_t failed;
  double seconds;
  std::string first_failure;
};

Outcome run(const std::function<std::vector<CheckRecord>()>& fn) {
  double t0 = omp_get_wtime();
  std::vector<CheckRecord> records = fn();
  double t1 = omp_get_wtime();
  Outcome o{true, records.size(), 0, t1 - t0, ""};
  for (const CheckRecord& r : records) {
    if (!r.pass) {
      ++o.failed;
      if (o.first_failure.empty())
        o.first_failure = r.id + " |err| " + r.abs_error + " bound " + r.bound;
    }
  }
  o.pass = o.failed == 0;
  return o;
}

}  // namespace

int main() {
  VerifyConfig base;        // exact grids
  VerifyConfig deep = base; // deep oracle grids at the stated tolerances
  deep.extended = true;

  struct Criterion {
    const char* label;
    std::function<std::vector<CheckRecord>()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"1 coefficient closed form exact on the n<=6 grid",
       [&] { return tstar::verify::records_coefficient_grid(base); }},
      {"2 finite generating function: series within the geometric certificate",
       [&] { return tstar::verify::records_gn_agreement(base); }},
      {"3 finite generating function recursion, exact rationals",
       [&] { return tstar::verify::suite_recurrence(base); }},
      {"4 binomial/V# summation lemmas, exact rationals",
       [&] { return tstar::verify::suite_lemmas(base); }},
      {"5 runs of twos vs Euler line and direct oracle at K=10^6",
       [&] { return tstar::verify::records_classical_rows(base); }},
      {"6 two-block lines pairwise 1e-10 and oracle 1e-6",
       [&] { return tstar::verify::records_two_block(base); }},
      {"7 deep evaluation grids vs direct oracles at 1e-5",
       [&] { return tstar::verify::records_deep_grid(deep); }},
      {"8 infinite closed forms vs series counterparts and secant product",
       [&] { return tstar::verify::records_infinite_consistency(deep); }},
      {"9 double-factorial chain and product tail bounds",
       [&] { return tstar::verify::suite_bounds(base); }},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o = run(c.fn);
    all = all && o.pass;
    std::printf("criterion %-66s %s  (%zu checks, %.1f s)\n", c.label, o.pass ? "PASS" : "FAIL",
                o.checks, o.seconds);
    if (!o.pass) std::printf("   first failure: %s  (%zu failed)\n", o.first_failure.c_str(), o.failed);
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
  return all ? 0 : 1;
}
