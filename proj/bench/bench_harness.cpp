#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "indep/core/axioms.hpp"
#include "indep/pseudoplane/kernel.hpp"
#include "indep/theories/dcfp.hpp"

using namespace indep;

namespace {

double seconds(const std::function<void()>& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& what, double fast, double slow, bool agree)
{
    std::printf("%-44s %10.3f %10.3f %8.2fx  %s\n", what.c_str(), fast, slow, slow / fast, agree ? "agree" : "DISAGREE");
}

bool same(const AxiomReport& a, const AxiomReport& b)
{
    return a.instances_checked == b.instances_checked && a.violations == b.violations &&
           a.inconclusive == b.inconclusive;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parallel harness and bitmask kernel against their serial references"};
    int vertices = 5;
    int ref_vertices = 4;
    bool skip_bm = false;
    app.add_option("--vertices", vertices, "forest size for the harness comparison")->capture_default_str();
    app.add_option("--ref-vertices", ref_vertices, "forest size for the reference-relation comparison")
        ->capture_default_str();
    app.add_flag("--skip-bm", skip_bm, "skip the differential-field pool comparison");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-44s %10s %10s %9s\n", "comparison", "fast [s]", "ref [s]", "speedup");

    const auto fam = pseudoplane::forest_family(vertices, true);
    for (Axiom a : all_axioms()) {
        AxiomReport par, ser;
        const double tp = seconds([&] { par = verify_axiom(a, fam); });
        const double ts = seconds([&] { ser = verify_axiom_serial(a, fam); });
        row(std::string(to_string(a)) + " parallel/serial, n<=" + std::to_string(vertices), tp, ts, same(par, ser));
    }

    const auto kfam = pseudoplane::forest_family(ref_vertices, false);
    const auto rfam = pseudoplane::forest_family(ref_vertices, false, true);
    for (Axiom a : {Axiom::symmetry, Axiom::transitivity}) {
        AxiomReport k, r;
        const double tk = seconds([&] { k = verify_axiom_serial(a, kfam); });
        const double tr = seconds([&] { r = verify_axiom_serial(a, rfam); });
        row(std::string(to_string(a)) + " kernel/reference, n<=" + std::to_string(ref_vertices), tk, tr, same(k, r));
    }

    if (!skip_bm) {
        AxiomReport par, ser;
        const double tp = seconds([&] { par = theories::bm_search(theories::linear_chain_family()); });
        const double ts = seconds([&] {
            ser = verify_axiom_serial(Axiom::base_monotonicity, theories::as_family(theories::linear_chain_family()));
        });
        row("BaseMonotonicity dcfp pools parallel/serial", tp, ts, same(par, ser));
    }
    return 0;
}
