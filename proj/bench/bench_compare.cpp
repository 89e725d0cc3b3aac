// Serial-vs-OpenMP comparison for the data-parallel kernels: lattice-point
// scans, vertex batches, Schubitope enumeration, and a small sweep.
#include <chrono>
#include <cstdio>
#include <functional>

#include "snp/families.hpp"
#include "snp/polytope.hpp"
#include "snp/schubitope.hpp"
#include "snp/verify.hpp"

using namespace snp;

namespace {

double time_of(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "omp", "speedup");

    {
        auto P = permutahedron(Partition({4, 3, 2, 1}), 4);
        auto P2 = scale(P, 2);
        double s = time_of([&] { lattice_points_serial(P2); });
        double p = time_of([&] { lattice_points(P2); });
        row("lattice_points 2*P_(4,3,2,1)", s, p);
    }
    {
        auto f = product_family(ProductFamilyKind::discriminant, {.n = 4});
        auto Q = newton_polytope(f);
        double s = time_of([&] { lattice_points_serial(Q); });
        double p = time_of([&] { lattice_points(Q); });
        row("lattice_points Newton(Delta_4)", s, p);
    }
    {
        auto P = permutahedron(Partition({3, 2, 1, 1}), 5);
        double s = time_of([&] { vertices_serial(P); });
        double p = time_of([&] { vertices(P); });
        row("vertices P_(3,2,1,1) in R^5", s, p);
    }
    {
        auto D = rothe_diagram(Permutation::parse("361524"));
        double s = time_of([&] { schubitope_lattice_points_serial(D); });
        double p = time_of([&] { schubitope_lattice_points(D); });
        row("schubitope points D_361524", s, p);
    }
    {
        SweepSpec spec;
        spec.target = "main1";
        spec.sn = 5;
        run_sweep(spec); // warm the family memo so both runs see the same state
        spec.jobs = 1;
        double s = time_of([&] { run_sweep(spec); });
        spec.jobs = 0;
        double p = time_of([&] { run_sweep(spec); });
        row("sweep main1 over S_5", s, p);
    }
    return 0;
}
