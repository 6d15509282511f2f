// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "movdom/graph_io.hpp"
#include "movdom/harness.hpp"
#include "oracles/brute.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace movdom;

namespace {

struct Line {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Line()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Line line;
    try {
        line = body();
    } catch (const std::exception& e) {
        line = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    if (!line.ok)
        ++failures;
    std::printf("[%s] %d %s: %s (%.2fs)\n", line.ok ? "PASS" : "FAIL", id, name, line.detail.c_str(), secs.count());
    std::fflush(stdout);
}

std::string counts(const TheoremReport& r)
{
    std::ostringstream out;
    out << r.instances_checked << "/" << r.instances_total << " checked, " << r.counterexamples.size()
        << " counterexamples";
    return out.str();
}

oracle::Matrix to_matrix(const Graph& g)
{
    oracle::Matrix m(g.order(), std::vector<bool>(g.order(), false));
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId v = 0; v < g.order(); ++v)
            m[u][v] = g.adjacent(u, v);
    return m;
}

std::optional<unsigned> brute_min(const Graph& g, bool total, bool movable)
{
    const auto m = to_matrix(g);
    for (unsigned k = 1; k <= g.order(); ++k)
        for (const auto& s : oracle::subsets_of_size(g.order(), k)) {
            const bool ok = movable ? oracle::movable(m, s, total)
                                    : (total ? oracle::total_dominating(m, s) : oracle::dominating(m, s));
            if (ok)
                return k;
        }
    return std::nullopt;
}

FamilySpec orders(VertexId lo, VertexId hi)
{
    FamilySpec f;
    f.min_order = lo;
    f.max_order = hi;
    return f;
}

FamilySpec corona_orders(VertexId pg, VertexId ph)
{
    FamilySpec f;
    f.g_order = pg;
    f.h_order = ph;
    return f;
}

} // namespace

int main()
{
    const unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    const SweepOptions opts{{}, jobs};

    run(1, "oracle equivalence", [&] {
        auto exhaustive = sweep(Theorem::oracle, orders(1, 6), opts);
        auto random_family = orders(7, 8);
        random_family.random = RandomFamily{500, 0.5, 1};
        auto sampled = sweep(Theorem::oracle, random_family, opts);
        const bool ok = exhaustive.ok() && sampled.ok() && exhaustive.instances_checked == 27476 &&
                        sampled.instances_checked == 500;
        return Line{ok, "p<=6 " + counts(exhaustive) + "; random p in {7,8} " + counts(sampled)};
    });

    run(2, "movable bound", [&] {
        auto r = sweep(Theorem::movable_bound, orders(1, 6), opts);
        std::ostringstream d;
        d << counts(r) << ", " << r.instances_vacuous << " vacuous";
        return Line{r.ok() && r.instances_checked == 27476, d.str()};
    });

    run(3, "lower bound 2", [&] {
        auto r = sweep(Theorem::lower_bound, orders(1, 6), opts);
        return Line{r.ok() && r.instances_checked == 27476, counts(r)};
    });

    run(4, "join value 2", [&] {
        auto r = sweep(Theorem::join, orders(2, 4), opts);
        std::ostringstream d;
        d << counts(r) << ", exhibited witness " << r.proof_witness_checked - r.proof_witness_failures << "/"
          << r.proof_witness_checked;
        const bool ok = r.ok() && r.instances_checked == 1849 && r.proof_witness_checked == 1849 &&
                        r.proof_witness_failures == 0;
        return Line{ok, d.str()};
    });

    run(5, "join with K1", [&] {
        auto r = sweep(Theorem::join_k1, orders(3, 5), opts);
        auto extended = sweep(Theorem::join_k1, orders(6, 6), opts);
        std::ostringstream d;
        d << "p 3..5 " << counts(r) << "; p=6 (non-gating) " << counts(extended);
        return Line{r.ok() && r.instances_checked == 770, d.str()};
    });

    run(6, "corona product", [&] {
        auto small = sweep(Theorem::corona, corona_orders(3, 3), opts);
        auto large = sweep(Theorem::corona, corona_orders(4, 3), opts);
        SweepOptions statement = opts;
        statement.check.mode = HypothesisMode::statement;
        auto st_small = sweep(Theorem::corona, corona_orders(3, 3), statement);
        auto st_large = sweep(Theorem::corona, corona_orders(4, 3), statement);
        auto st_k2 = sweep(Theorem::corona, corona_orders(3, 2), statement);
        std::ostringstream d;
        d << "(3,3) " << counts(small) << "; (4,3) " << counts(large) << "; statement mode (non-gating) "
          << st_small.counterexamples.size() + st_large.counterexamples.size() << " counterexamples, "
          << st_small.discrepancies.size() + st_large.discrepancies.size() << " discrepancies; statement mode (3,2) "
          << st_k2.counterexamples.size() << " counterexamples, " << st_k2.discrepancies.size() << " discrepancies";
        const bool ok = small.ok() && large.ok() && small.instances_checked == 16 && large.instances_checked == 152;
        return Line{ok, d.str()};
    });

    run(7, "corona projections", [&] {
        const Graph c3 = family(Family::cycle, 3);
        const Graph p3 = family(Family::path, 3);
        std::uint64_t checks = 0;
        bool ok = true;
        for (const auto& g : {c3, p3})
            for (auto which : {Theorem::projection_in, Theorem::projection_out}) {
                auto v = check_corona_projection(g, p3, which);
                ok = ok && v.outcome == Outcome::pass;
                checks += v.sub_checks;
            }
        return Line{ok && checks > 0, std::to_string(checks) + " (set, centre) checks"};
    });

    run(8, "known values", [&] {
        const Graph p4 = family(Family::path, 4);
        const Graph k2 = family(Family::complete, 2);
        const Graph k4 = family(Family::complete, 4);
        const Graph c5 = family(Family::cycle, 5);
        const Graph c6 = family(Family::cycle, 6);
        const Graph c3 = family(Family::cycle, 3);
        const Graph p3 = family(Family::path, 3);
        std::string bad;
        auto expect = [&](const char* what, std::optional<VertexId> got, std::optional<unsigned> want) {
            if (got != want)
                bad += std::string(" ") + what;
        };
        expect("P4 mt2 solver", solve(p4, InvariantKind::gamma_mt2).value, std::nullopt);
        expect("P4 mt2 brute", brute_min(p4, true, true), std::nullopt);
        expect("C6 t solver", solve(c6, InvariantKind::gamma_t).value, 4U);
        expect("C6 t brute", brute_min(c6, true, false), 4U);
        expect("C5 t solver", solve(c5, InvariantKind::gamma_t).value, 3U);
        expect("C5 t brute", brute_min(c5, true, false), 3U);
        // K4 = K2 + K2, so the join formula predicts 2.
        expect("K4 mt2", solve(k4, InvariantKind::gamma_mt2).value, 2U);
        expect("K4 = K2+K2", join(k2, k2) == k4 ? std::optional<VertexId>(2) : std::nullopt, 2U);
        // |V(C3)| * γ_t(P3) = 3 * 2.
        const auto gt_p3 = solve(p3, InvariantKind::gamma_t).value;
        expect("C3oP3 mt2", solve(corona(c3, p3).graph, InvariantKind::gamma_mt2).value,
               gt_p3 ? std::optional<unsigned>(3 * *gt_p3) : std::nullopt);
        return Line{bad.empty(), bad.empty() ? "5 values match" : "mismatch:" + bad};
    });

    run(9, "graph6 round trip", [&] {
        std::mt19937_64 rng(20240611);
        int mismatches = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto n = static_cast<VertexId>(1 + rng() % 62);
            const double p = static_cast<double>(rng() % 1000 + 1) / 1000.0;
            const auto g = random_graph(n, p, rng());
            const auto text = write_graph6(g);
            const auto back = parse_graph6(text);
            if (!(back == g) || write_graph6(back) != text || oracle::decode_graph6(text) != to_matrix(g))
                ++mismatches;
        }
        bool hand = parse_graph6("D?{") == make_graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}) &&
                    oracle::decode_graph6("D?{") == to_matrix(parse_graph6("D?{")) &&
                    parse_graph6("A_") == family(Family::complete, 2) && parse_graph6("A?") == family(Family::empty, 2);
        return Line{mismatches == 0 && hand,
                    std::to_string(1000 - mismatches) + "/1000 round trips, hand-decoded " + (hand ? "ok" : "wrong")};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
