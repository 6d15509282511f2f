#include "movdom/harness.hpp"

#include "movdom/error.hpp"
#include "movdom/graph_io.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace movdom {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::string_view, 8> kTheoremNames = {"movable-bound",  "lower-bound",    "join",   "join-k1",
                                                           "projection-in", "projection-out", "corona", "oracle"};
constexpr std::array<std::string_view, 3> kModeNames = {"statement", "proof", "both"};

std::string encode(const Graph& g)
{
    return g.order() <= kMaxGraph6Order ? write_graph6(g) : std::string{};
}

Verdict skipped(std::vector<std::string> operands, std::string note)
{
    Verdict v;
    v.outcome = Outcome::skipped;
    v.operands = std::move(operands);
    v.note = std::move(note);
    return v;
}

std::string value_text(const std::optional<VertexId>& v)
{
    return v ? std::to_string(*v) : std::string("nonexistent");
}

// Relabels the members of t lying in H^a to positions 0..h_order-1.
VertexSet project_to_copy(const CoronaLayout& layout, const VertexSet& t, VertexId a)
{
    const auto base = layout.copy_vertex(a, 0);
    return VertexSet::from_bits(layout.h_order(), (t & layout.copy_vertices(a)).bits() >> base);
}

void check_corona_operands(const Graph& gh, const CoronaLayout& layout, VertexId a)
{
    if (gh.order() != layout.total_order())
        throw PreconditionError("graph order does not match the corona layout");
    if (!layout.is_center(a))
        throw PreconditionError("vertex " + std::to_string(a) + " is not a centre of the corona");
}

} // namespace

std::string_view to_string(Theorem t)
{
    return kTheoremNames[static_cast<std::size_t>(t)];
}

std::optional<Theorem> parse_theorem(std::string_view name)
{
    for (std::size_t i = 0; i < kTheoremNames.size(); ++i)
        if (kTheoremNames[i] == name)
            return static_cast<Theorem>(i);
    return std::nullopt;
}

std::string_view to_string(HypothesisMode m)
{
    return kModeNames[static_cast<std::size_t>(m)];
}

std::optional<HypothesisMode> parse_mode(std::string_view name)
{
    for (std::size_t i = 0; i < kModeNames.size(); ++i)
        if (kModeNames[i] == name)
            return static_cast<HypothesisMode>(i);
    return std::nullopt;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Verdict check_thm_monotone(const Graph& g, CheckOptions options)
{
    if (!is_connected(g))
        return skipped({encode(g)}, "graph is not connected");
    const SolveOptions solve_options{options.allow_equal_replacements};
    Verdict v;
    v.operands = {encode(g)};
    auto mt2 = solve(g, InvariantKind::gamma_mt2, solve_options);
    if (!mt2.exists()) {
        v.outcome = Outcome::pass;
        v.vacuous = true;
        v.note = "no 2-movable total dominating set";
        return v;
    }
    auto m2 = solve(g, InvariantKind::gamma_m2, solve_options);
    v.expected = mt2.value;
    v.got = m2.value;
    if (!m2.exists() || *m2.value > *mt2.value) {
        v.outcome = Outcome::fail;
        v.note = "gamma_m2 = " + value_text(m2.value) + " exceeds gamma_mt2 = " + value_text(mt2.value);
        v.certificate = mt2.certificate;
        return v;
    }
    if (g.order() <= kMaxAllMinimumOrder) {
        for (const auto& t : all_minimum_sets(g, InvariantKind::gamma_mt2, solve_options)) {
            ++v.sub_checks;
            if (!is_2movable_set(g, t, MoveOptions{false, options.allow_equal_replacements})) {
                v.outcome = Outcome::fail;
                v.note = "minimum 2-movable TDS " + t.to_string() + " is not a 2-movable dominating set";
                v.certificate = make_certificate(g, InvariantKind::gamma_mt2, t, solve_options);
                return v;
            }
        }
    }
    v.outcome = Outcome::pass;
    return v;
}

Verdict check_lower_bound(const Graph& g, CheckOptions options)
{
    if (!is_connected(g))
        return skipped({encode(g)}, "graph is not connected");
    Verdict v;
    v.operands = {encode(g)};
    auto mt2 = solve(g, InvariantKind::gamma_mt2, SolveOptions{options.allow_equal_replacements});
    v.got = mt2.value;
    if (!mt2.exists()) {
        v.outcome = Outcome::pass;
        v.vacuous = true;
        return v;
    }
    v.expected = 2;
    v.outcome = *mt2.value >= 2 ? Outcome::pass : Outcome::fail;
    if (v.outcome == Outcome::fail) {
        v.note = "gamma_mt2 below 2";
        v.certificate = mt2.certificate;
    }
    return v;
}

Verdict check_thm_join(const Graph& g, const Graph& h, CheckOptions options)
{
    std::vector<std::string> operands{encode(g), encode(h)};
    if (g.order() < 2 || h.order() < 2)
        return skipped(std::move(operands), "operand order below 2");
    const SolveOptions solve_options{options.allow_equal_replacements};
    const auto gh = join(g, h);
    Verdict v;
    v.operands = std::move(operands);
    auto mt2 = solve(gh, InvariantKind::gamma_mt2, solve_options);
    v.expected = 2;
    v.got = mt2.value;

    // The two-vertex set {u, v}, u ∈ V(G), v ∈ V(H), with least indices.
    const VertexSet exhibited(gh.order(), {0, g.order()});
    v.proof_witness_ok = is_2movable_set(gh, exhibited, MoveOptions{true, options.allow_equal_replacements});

    if (mt2.value != std::optional<VertexId>{2}) {
        v.outcome = Outcome::fail;
        v.note = "gamma_mt2(G+H) = " + value_text(mt2.value);
        v.certificate = mt2.certificate;
        return v;
    }
    v.outcome = Outcome::pass;
    if (!*v.proof_witness_ok)
        v.note = "exhibited set " + exhibited.to_string() + " is not 2-movable";
    return v;
}

Verdict check_thm_join_k1(const Graph& g, CheckOptions options)
{
    std::vector<std::string> operands{encode(g)};
    if (g.order() < 3)
        return skipped(std::move(operands), "order below 3");
    if (!is_connected(g))
        return skipped(std::move(operands), "graph is not connected");
    const SolveOptions solve_options{options.allow_equal_replacements};
    auto gt = solve(g, InvariantKind::gamma_t, solve_options);
    if (!gt.exists())
        return skipped(std::move(operands), "gamma_t(G) does not exist");

    Verdict v;
    v.operands = std::move(operands);
    auto mt2 = solve(join(g, family(Family::complete, 1)), InvariantKind::gamma_mt2, solve_options);
    v.expected = gt.value;
    v.got = mt2.value;

    // The argument asserts every γ_t-set of G meets the pair-move disjunction in G.
    // Recorded as data only.
    if (g.order() <= kMaxAllMinimumOrder) {
        bool all_movable = true;
        for (const auto& s : all_minimum_sets(g, InvariantKind::gamma_t, solve_options))
            if (!is_2movable_set(g, s, MoveOptions{true, options.allow_equal_replacements})) {
                all_movable = false;
                break;
            }
        v.proof_claim_ok = all_movable;
    }

    if (mt2.value != gt.value) {
        v.outcome = Outcome::fail;
        v.note = "gamma_mt2(G+K1) = " + value_text(mt2.value) + ", gamma_t(G) = " + value_text(gt.value);
        v.certificate = mt2.certificate;
        return v;
    }
    v.outcome = Outcome::pass;
    return v;
}

Verdict check_thm_corona(const Graph& g, const Graph& h, CheckOptions options)
{
    std::vector<std::string> operands{encode(g), encode(h)};
    if (!is_connected(g) || !is_connected(h))
        return skipped(std::move(operands), "operand is not connected");
    if (g.order() * (1 + h.order()) < 3)
        return skipped(std::move(operands), "corona has fewer than 3 vertices");
    const SolveOptions solve_options{options.allow_equal_replacements};
    auto gt = solve(h, InvariantKind::gamma_t, solve_options);
    if (!gt.exists())
        return skipped(std::move(operands), "gamma_t(H) does not exist");

    const VertexId gamma_t_h = *gt.value;
    const bool statement_holds = gamma_t_h < g.order();
    const bool proof_holds = gamma_t_h < h.order();
    bool admitted = false;
    switch (options.mode) {
    case HypothesisMode::statement:
        admitted = statement_holds;
        break;
    case HypothesisMode::proof:
        admitted = proof_holds;
        break;
    case HypothesisMode::both:
        admitted = statement_holds && proof_holds;
        break;
    }
    if (!admitted && statement_holds == proof_holds)
        return skipped(std::move(operands), "hypothesis not met");

    const auto product = corona(g, h);
    auto mt2 = solve(product.graph, InvariantKind::gamma_mt2, solve_options);
    const VertexId expected = g.order() * gamma_t_h;

    Verdict v;
    v.operands = operands;
    v.expected = expected;
    v.got = mt2.value;
    if (statement_holds != proof_holds)
        v.discrepancy = Discrepancy{operands,        gamma_t_h, statement_holds, proof_holds, expected,
                                    mt2.value,       mt2.value == std::optional<VertexId>{expected}};
    if (!admitted) {
        v.outcome = Outcome::skipped;
        v.note = "hypothesis not met under mode " + std::string(to_string(options.mode));
        return v;
    }
    if (mt2.value != std::optional<VertexId>{expected}) {
        v.outcome = Outcome::fail;
        v.note = "gamma_mt2(G o H) = " + value_text(mt2.value) + ", |V(G)| * gamma_t(H) = " + std::to_string(expected);
        v.certificate = mt2.certificate;
        return v;
    }
    v.outcome = Outcome::pass;
    return v;
}

Verdict check_oracle(const Graph& g, CheckOptions options)
{
    Verdict v;
    v.operands = {encode(g)};
    const SolveOptions solve_options{options.allow_equal_replacements};
    for (auto kind : kAllKinds) {
        auto fast = solve(g, kind, solve_options);
        auto slow = solve_naive(g, kind, solve_options);
        ++v.sub_checks;
        if (fast.certificate != slow.certificate) {
            v.outcome = Outcome::fail;
            v.expected = slow.value;
            v.got = fast.value;
            v.note = std::string(to_string(kind)) + ": solve gives " + value_text(fast.value) + " "
                     + VertexSet(g.order(), fast.certificate.witness).to_string() + ", solve_naive gives "
                     + value_text(slow.value) + " " + VertexSet(g.order(), slow.certificate.witness).to_string();
            v.certificate = fast.certificate;
            return v;
        }
    }
    v.outcome = Outcome::pass;
    return v;
}

bool check_lemma_projection_in(const Graph& gh, const CoronaLayout& layout, const VertexSet& t, VertexId a,
                               CheckOptions options)
{
    check_corona_operands(gh, layout, a);
    if (!t.contains(a))
        throw PreconditionError("centre " + std::to_string(a) + " is not in " + t.to_string());
    if (!is_2movable_set(gh, t, MoveOptions{true, options.allow_equal_replacements}))
        throw PreconditionError(t.to_string() + " is not a 2-movable total dominating set");

    const auto copy = gh.induced(layout.copy_vertices(a));
    const auto t_a = project_to_copy(layout, t, a);
    for (auto u : t_a) {
        auto rest = t_a;
        rest.erase(u);
        if (is_total_dominating(copy, rest))
            continue;
        bool moved = false;
        for (VertexId xa = 0; xa < copy.order() && !moved; ++xa)
            for (auto xu : copy.neighbors(u)) {
                if (xa == xu && !options.allow_equal_replacements)
                    continue;
                auto candidate = rest;
                candidate.insert(xa);
                candidate.insert(xu);
                if (is_total_dominating(copy, candidate)) {
                    moved = true;
                    break;
                }
            }
        if (!moved)
            return false;
    }
    return true;
}

bool check_lemma_projection_out(const Graph& gh, const CoronaLayout& layout, const VertexSet& t, VertexId a)
{
    check_corona_operands(gh, layout, a);
    if (t.contains(a))
        throw PreconditionError("centre " + std::to_string(a) + " is in " + t.to_string());
    if (!is_total_dominating(gh, t))
        throw PreconditionError(t.to_string() + " is not a total dominating set");
    return is_total_dominating(gh.induced(layout.copy_vertices(a)), project_to_copy(layout, t, a));
}

Verdict check_corona_projection(const Graph& g, const Graph& h, Theorem which, CheckOptions options)
{
    if (which != Theorem::projection_in && which != Theorem::projection_out)
        throw PreconditionError("check_corona_projection handles the projection claims only");
    const auto product = corona(g, h);
    Verdict v;
    v.operands = {encode(g), encode(h)};
    const SolveOptions solve_options{options.allow_equal_replacements};
    const auto sets = all_minimum_sets(product.graph, InvariantKind::gamma_mt2, solve_options);
    if (sets.empty()) {
        v.outcome = Outcome::pass;
        v.vacuous = true;
        v.note = "no 2-movable total dominating set";
        return v;
    }
    v.got = sets.front().size();
    for (const auto& t : sets)
        for (auto a : product.layout.centers()) {
            const bool inside = t.contains(a);
            if (inside != (which == Theorem::projection_in))
                continue;
            ++v.sub_checks;
            const bool ok = inside ? check_lemma_projection_in(product.graph, product.layout, t, a, options)
                                   : check_lemma_projection_out(product.graph, product.layout, t, a);
            if (!ok) {
                v.outcome = Outcome::fail;
                v.note = "projection fails for T = " + t.to_string() + ", centre " + std::to_string(a);
                v.certificate = make_certificate(product.graph, InvariantKind::gamma_mt2, t, solve_options);
                return v;
            }
        }
    if (v.sub_checks == 0)
        v.vacuous = true;
    v.outcome = Outcome::pass;
    return v;
}

void record(TheoremReport& report, const Verdict& v)
{
    ++report.instances_total;
    if (v.discrepancy)
        report.discrepancies.push_back(*v.discrepancy);
    if (v.outcome == Outcome::skipped) {
        ++report.instances_skipped;
        return;
    }
    ++report.instances_checked;
    if (v.vacuous)
        ++report.instances_vacuous;
    report.sub_checks += v.sub_checks;
    if (v.proof_witness_ok) {
        ++report.proof_witness_checked;
        if (!*v.proof_witness_ok)
            ++report.proof_witness_failures;
    }
    if (v.proof_claim_ok) {
        ++report.proof_claim_checked;
        if (!*v.proof_claim_ok)
            ++report.proof_claim_failures;
    }
    if (v.outcome == Outcome::fail)
        report.counterexamples.push_back(Counterexample{v.operands, v.expected, v.got, v.note, v.certificate});
}

namespace {

using Instance = std::vector<Graph>;

bool single_operand(Theorem t)
{
    return t == Theorem::movable_bound || t == Theorem::lower_bound || t == Theorem::join_k1 || t == Theorem::oracle;
}

bool corona_family(Theorem t)
{
    return t == Theorem::corona || t == Theorem::projection_in || t == Theorem::projection_out;
}

std::vector<Graph> enumerate_order(VertexId n, bool connected_only)
{
    std::vector<Graph> out;
    auto push = [&](const Graph& g) {
        out.push_back(g);
        return true;
    };
    if (connected_only)
        for_each_connected(n, push);
    else
        for_each_labeled(n, push);
    return out;
}

Graph random_operand(VertexId n, const RandomFamily& r, bool connected_only, std::uint64_t index)
{
    const auto seed = splitmix64(r.seed + index);
    return connected_only ? random_connected(n, r.edge_prob, seed) : random_graph(n, r.edge_prob, seed);
}

void validate(Theorem theorem, const FamilySpec& f)
{
    if (corona_family(theorem)) {
        if (f.g_order == 0 || f.h_order == 0)
            throw PreconditionError("corona operands need at least one vertex");
        const auto total = f.g_order * (1 + f.h_order);
        if (total > kMaxProductOrder)
            throw LimitError("corona order " + std::to_string(total) + " exceeds the sweep limit of "
                             + std::to_string(kMaxProductOrder));
        if (!f.random && std::max(f.g_order, f.h_order) > kMaxEnumerationOrder)
            throw LimitError("enumeration is limited to operand order 7");
        return;
    }
    if (f.min_order == 0 || f.min_order > f.max_order)
        throw PreconditionError("order range must satisfy 1 <= min <= max");
    if (theorem == Theorem::join && f.max_order > kMaxJoinOperandOrder)
        throw LimitError("join operands are limited to order " + std::to_string(kMaxJoinOperandOrder) + "; requested "
                         + std::to_string(f.max_order));
    if (f.random && f.max_order > kMaxRandomOrder)
        throw LimitError("random operands are limited to order " + std::to_string(kMaxRandomOrder));
    if (!f.random && f.max_order > kMaxEnumerationOrder)
        throw LimitError("enumeration is limited to order " + std::to_string(kMaxEnumerationOrder) + "; requested "
                         + std::to_string(f.max_order));
}

std::vector<Instance> build_instances(Theorem theorem, const FamilySpec& f)
{
    std::vector<Instance> out;
    if (f.random) {
        const auto& r = *f.random;
        const VertexId span = f.max_order - f.min_order + 1;
        for (std::uint64_t i = 0; i < r.count; ++i) {
            if (corona_family(theorem)) {
                out.push_back({random_operand(f.g_order, r, f.connected_only, 2 * i),
                               random_operand(f.h_order, r, f.connected_only, 2 * i + 1)});
            } else if (single_operand(theorem)) {
                out.push_back({random_operand(f.min_order + static_cast<VertexId>(i % span), r, f.connected_only, 2 * i)});
            } else {
                out.push_back({random_operand(f.min_order + static_cast<VertexId>(i % span), r, f.connected_only, 2 * i),
                               random_operand(f.min_order + static_cast<VertexId>((i / span) % span), r, f.connected_only,
                                              2 * i + 1)});
            }
        }
        return out;
    }

    if (corona_family(theorem)) {
        const auto gs = enumerate_order(f.g_order, f.connected_only);
        const auto hs = enumerate_order(f.h_order, f.connected_only);
        for (const auto& g : gs)
            for (const auto& h : hs)
                out.push_back({g, h});
        return out;
    }
    std::vector<Graph> operands;
    for (VertexId n = f.min_order; n <= f.max_order; ++n) {
        auto batch = enumerate_order(n, f.connected_only);
        operands.insert(operands.end(), batch.begin(), batch.end());
    }
    if (single_operand(theorem)) {
        for (auto& g : operands)
            out.push_back({std::move(g)});
        return out;
    }
    for (const auto& g : operands)
        for (const auto& h : operands)
            out.push_back({g, h});
    return out;
}

Verdict run_check(Theorem theorem, const Instance& inst, const CheckOptions& options)
{
    switch (theorem) {
    case Theorem::movable_bound:
        return check_thm_monotone(inst[0], options);
    case Theorem::lower_bound:
        return check_lower_bound(inst[0], options);
    case Theorem::join:
        return check_thm_join(inst[0], inst[1], options);
    case Theorem::join_k1:
        return check_thm_join_k1(inst[0], options);
    case Theorem::corona:
        return check_thm_corona(inst[0], inst[1], options);
    case Theorem::projection_in:
    case Theorem::projection_out:
        return check_corona_projection(inst[0], inst[1], theorem, options);
    case Theorem::oracle:
        return check_oracle(inst[0], options);
    }
    throw PreconditionError("unknown theorem");
}

std::string describe(Theorem theorem, const FamilySpec& f)
{
    std::ostringstream os;
    if (f.random)
        os << "random " << (f.connected_only ? "connected" : "labeled") << " x" << f.random->count << " (p="
           << f.random->edge_prob << ", seed=" << f.random->seed << ")";
    else
        os << (f.connected_only ? "connected labeled" : "all labeled");
    if (corona_family(theorem))
        os << ", |V(G)|=" << f.g_order << ", |V(H)|=" << f.h_order;
    else
        os << ", orders " << f.min_order << ".." << f.max_order << (single_operand(theorem) ? "" : ", ordered pairs");
    return os.str();
}

} // namespace

TheoremReport sweep(Theorem theorem, const FamilySpec& family, const SweepOptions& options)
{
    validate(theorem, family);
    const auto start = Clock::now();
    const auto instances = build_instances(theorem, family);

    std::vector<Verdict> verdicts(instances.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(instances.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (auto i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1)) {
            try {
                verdicts[i] = run_check(theorem, instances[i], options.check);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = instances.size();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);

    TheoremReport report;
    report.theorem = theorem;
    report.mode = options.check.mode;
    report.allow_equal_replacements = options.check.allow_equal_replacements;
    report.connected_only = family.connected_only;
    report.family = describe(theorem, family);
    for (const auto& v : verdicts)
        record(report, v);
    report.elapsed = Clock::now() - start;
    return report;
}

} // namespace movdom
