// Benchmark comparing the OpenMP radical-congruence kernel against the
// single-thread run and the serial definitional oracle, plus the two
// Green's relations routes.  Build target: semicat-bench.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semicat/ggm.hpp"
#include "semicat/greens.hpp"
#include "semicat/group.hpp"
#include "semicat/monoid.hpp"
#include "semicat/pvar.hpp"
#include "semicat/rees.hpp"
#include "semicat/zoo.hpp"

using namespace semicat;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

int threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

FiniteMonoid full_transformation_monoid(int degree) {
  std::vector<std::vector<int>> gens;
  std::vector<int> cycle(degree), swap(degree), collapse(degree);
  for (int i = 0; i < degree; ++i) {
    cycle[i] = (i + 1) % degree;
    swap[i] = i;
    collapse[i] = i;
  }
  std::swap(swap[0], swap[1]);
  collapse[1] = 0;
  gens = {cycle, swap, collapse};
  return monoid_from_generators(gens, degree <= 4 ? 300 : 4000);
}

struct JPick {
  int jclass;
  size_t members;
};

JPick largest_regular_j(const FiniteMonoid& m, const GreensData& g) {
  JPick pick{-1, 0};
  for (int j = 0; j < g.num_j; ++j)
    if (g.j_regular[j] && g.j_members[j].size() > pick.members &&
        g.j_members[j].size() < static_cast<size_t>(m.size))
      pick = {j, g.j_members[j].size()};
  if (pick.jclass < 0) pick = {g.j_class[m.identity], g.j_members[0].size()};
  return pick;
}

void bench_monoid(const std::string& name, const FiniteMonoid& m,
                  bool run_oracle) {
  std::printf("== %s (%d elements)\n", name.c_str(), m.size);

  double t0 = now();
  GreensData g = greens(m);
  double t_greens = now() - t0;
  std::printf("   greens (scc)            %8.3f ms   (%d J-classes)\n",
              1e3 * t_greens, g.num_j);
  if (run_oracle) {
    t0 = now();
    GreensData ref = greens_by_ideals(m);
    double t_ref = now() - t0;
    std::printf("   greens (ideal oracle)   %8.3f ms   match=%s\n",
                1e3 * t_ref, greens_equal(g, ref) ? "yes" : "NO");
  }

  JPick pick = largest_regular_j(m, g);
  ReesRepresentation rep = rees_representation(m, g, pick.jclass);
  Subgroup rad = h_radical_set(rep.group, pvar_solvable());
  std::printf("   J-class %d: %zu elements, |G|=%d, radical %zu\n",
              pick.jclass, pick.members, rep.group.size(), rad.size());

  t0 = now();
  Congruence serial = ggm_congruence_serial(m, g, rep, rad);
  double t_serial = now() - t0;
  t0 = now();
  Congruence parallel = ggm_congruence(m, g, rep, rad);
  double t_parallel = now() - t0;
  std::printf(
      "   radcong serial          %8.3f ms\n"
      "   radcong %2d threads      %8.3f ms   speedup %.2fx  equal=%s\n",
      1e3 * t_serial, threads(), 1e3 * t_parallel, t_serial / t_parallel,
      serial == parallel ? "yes" : "NO");
  if (run_oracle) {
    t0 = now();
    Congruence unrestricted = ggm_congruence_unrestricted(m, g, rep, rad);
    double t_unr = now() - t0;
    std::printf("   radcong def. oracle     %8.3f ms   equal=%s\n",
                1e3 * t_unr, unrestricted == parallel ? "yes" : "NO");
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool big = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--big") == 0) big = true;

  std::printf("semicat benchmark, %d threads\n", threads());
  bench_monoid("T3", full_transformation_monoid(3), true);
  bench_monoid("T4", full_transformation_monoid(4), true);
  if (big) {
    bench_monoid("T5", full_transformation_monoid(5), false);
  } else {
    std::printf("(pass --big for the 3125-element T5 run)\n");
  }
  return 0;
}
