// Compares the parallel kernels against their serial counterparts on orbit
// expansions of the bundled case 145.  The workload grows with --radius: the
// gamma-orbit adds two curves per step and the configuration/clique
// instances grow accordingly.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#include "enriques/data_io.hpp"
#include "enriques/reference.hpp"

using namespace enriques;

namespace {

template <typename F>
double time_ms(int repeat, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel comparison"};
    int radius = 20;
    int repeat = 3;
    std::string case_path = "data/cases/145.json";
    app.add_option("--case", case_path, "case snapshot");
    app.add_option("--radius", radius, "orbit expansion radius");
    app.add_option("--repeat", repeat, "repetitions (best time is reported)");
    CLI11_PARSE(app, argc, argv);

    CaseData data = load_case(case_path);
    CurveSystem system = expand_orbit(data.system, data.gens, radius);
    std::printf("system: %d curves after radius-%d expansion\n", system.size(), radius);

    std::vector<EllipticConfiguration> serial_cfgs, parallel_cfgs;
    double t_enum_serial = time_ms(repeat, [&] {
        serial_cfgs = enumerate_configurations(system, {.max_support = 10, .prune = true, .parallel = false});
    });
    double t_enum_parallel = time_ms(repeat, [&] {
        parallel_cfgs = enumerate_configurations(system, {.max_support = 10, .prune = true, .parallel = true});
    });
    bool enum_match = serial_cfgs.size() == parallel_cfgs.size();
    for (size_t i = 0; enum_match && i < serial_cfgs.size(); ++i)
        enum_match = serial_cfgs[i].support == parallel_cfgs[i].support;
    std::printf("enumerate_configurations: %zu configurations\n", serial_cfgs.size());
    std::printf("  serial    %10.2f ms\n", t_enum_serial);
    std::printf("  parallel  %10.2f ms   (x%.2f, results %s)\n", t_enum_parallel,
                t_enum_parallel > 0 ? t_enum_serial / t_enum_parallel : 0.0,
                enum_match ? "identical" : "DIFFER");

    auto hf = hf_from_configurations(serial_cfgs);
    auto adj = compatibility_graph(hf);
    std::printf("clique instance: %zu half-fiber classes\n", hf.size());

    int m_serial = 0, m_parallel = 0;
    double t_clique_serial = time_ms(repeat, [&] { m_serial = max_clique(adj, 10, false); });
    double t_clique_parallel = time_ms(repeat, [&] { m_parallel = max_clique(adj, 10, true); });
    std::printf("max clique (branch and bound): m = %d\n", m_serial);
    std::printf("  serial    %10.2f ms\n", t_clique_serial);
    std::printf("  parallel  %10.2f ms   (x%.2f, results %s)\n", t_clique_parallel,
                t_clique_parallel > 0 ? t_clique_serial / t_clique_parallel : 0.0,
                m_serial == m_parallel ? "identical" : "DIFFER");

    if (hf.size() <= 200) {
        int m_ref = 0;
        double t_ref = time_ms(1, [&] { m_ref = max_clique_reference(adj); });
        std::printf("  reference %10.2f ms   (plain recursion, m = %d, %s)\n", t_ref, m_ref,
                    m_ref == m_serial ? "agrees" : "DISAGREES");
    }

    return 0;
}
