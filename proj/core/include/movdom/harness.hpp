#pragma once

#include "movdom/certificate.hpp"
#include "movdom/graph.hpp"
#include "movdom/solver.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace movdom {

/// Claims the harness can sweep.
enum class Theorem {
    movable_bound,  ///< γ_m²(G) ≤ γ_mt²(G); every minimum 2-movable TDS is 2-movable dominating
    lower_bound,    ///< γ_mt²(G) ≥ 2 whenever it exists
    join,           ///< γ_mt²(G+H) = 2 for operands of order ≥ 2
    join_k1,        ///< γ_mt²(G+K1) = γ_t(G) for connected G of order ≥ 3
    projection_in,  ///< corona centre a ∈ T: T ∩ V(H^a) satisfies the pair-move disjunction in H^a
    projection_out, ///< corona centre a ∉ T: T ∩ V(H^a) totally dominates H^a
    corona,         ///< γ_mt²(G∘H) = |V(G)|·γ_t(H)
    oracle,         ///< solve and solve_naive agree on all four invariants
};

std::string_view to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

/// Which hypothesis gates the corona equality: γ_t(H) < |V(G)| as stated,
/// γ_t(H) < |V(H)| as used by the argument, or both.
enum class HypothesisMode { statement, proof, both };

std::string_view to_string(HypothesisMode m);
std::optional<HypothesisMode> parse_mode(std::string_view name);

enum class Outcome { pass, fail, skipped };

/// Corona instance on which the statement and proof hypotheses disagree.
struct Discrepancy {
    std::vector<std::string> operands;
    VertexId gamma_t_h = 0;
    bool statement_holds = false;
    bool proof_holds = false;
    std::optional<VertexId> expected;
    std::optional<VertexId> got;
    bool equality_holds = false;

    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

/// Outcome of one instance.
///
/// expected/got hold invariant values; nullopt means "nonexistent" (or not
/// applicable, see note).
struct Verdict {
    Outcome outcome = Outcome::skipped;
    std::vector<std::string> operands;
    std::optional<VertexId> expected;
    std::optional<VertexId> got;
    std::string note;
    std::optional<Certificate> certificate;
    bool vacuous = false;

    std::optional<bool> proof_witness_ok;
    std::optional<bool> proof_claim_ok;
    std::optional<Discrepancy> discrepancy;
    std::uint64_t sub_checks = 0;
};

struct CheckOptions {
    bool allow_equal_replacements = false;
    HypothesisMode mode = HypothesisMode::both;
};

Verdict check_thm_monotone(const Graph& g, CheckOptions options = {});
Verdict check_lower_bound(const Graph& g, CheckOptions options = {});
Verdict check_thm_join(const Graph& g, const Graph& h, CheckOptions options = {});
Verdict check_thm_join_k1(const Graph& g, CheckOptions options = {});
Verdict check_thm_corona(const Graph& g, const Graph& h, CheckOptions options = {});
Verdict check_oracle(const Graph& g, CheckOptions options = {});

/// Projection property for a centre inside T.
///
/// With T_a = t ∩ V(H^a) and every u ∈ T_a, one of:
///  (i)  T_a \ {u} totally dominates H^a, or
///  (ii) some x_a, x_u ∈ V(H^a) with x_u adjacent to u make (T_a \ {u}) ∪ {x_a, x_u}
///       a total dominating set of H^a (x_a ≠ x_u unless equal replacements are allowed).
/// Every copy vertex is adjacent to a, so x_a ranges over the whole copy. The
/// centre itself never lies in H^a; removing it from T_a is a no-op.
/// Throws PreconditionError unless t is a 2-movable TDS of gh and a ∈ t is a centre.
bool check_lemma_projection_in(const Graph& gh, const CoronaLayout& layout, const VertexSet& t, VertexId a,
                               CheckOptions options = {});

/// Projection property for a centre outside T: t ∩ V(H^a) totally dominates H^a.
/// Throws PreconditionError unless t is a TDS of gh and a ∉ t is a centre.
bool check_lemma_projection_out(const Graph& gh, const CoronaLayout& layout, const VertexSet& t, VertexId a);

/// Runs the applicable projection check for every minimum 2-movable TDS of
/// G∘H and every centre (in-check for Theorem::projection_in, out-check for
/// Theorem::projection_out).
Verdict check_corona_projection(const Graph& g, const Graph& h, Theorem which, CheckOptions options = {});

struct RandomFamily {
    std::uint64_t count = 0;
    double edge_prob = 0.5;
    std::uint64_t seed = 0;
};

/// Operand source for a sweep.
///
/// Single-operand claims and joins draw operands with min_order ≤ p ≤ max_order;
/// corona claims use g_order and h_order. Enumeration is labelled and in
/// edge-mask order; join pairs are ordered. With `random` set, instance i
/// draws operands from random_connected (or random_graph when connected_only
/// is false) seeded by splitmix64(seed + 2i) and splitmix64(seed + 2i + 1),
/// with orders cycling through the allowed range.
struct FamilySpec {
    VertexId min_order = 1;
    VertexId max_order = 4;
    VertexId g_order = 3;
    VertexId h_order = 3;
    bool connected_only = true;
    std::optional<RandomFamily> random;
};

struct SweepOptions {
    CheckOptions check;
    unsigned jobs = 1;
};

inline constexpr VertexId kMaxJoinOperandOrder = 6;
inline constexpr VertexId kMaxProductOrder = 16;
inline constexpr VertexId kMaxRandomOrder = 16;

struct Counterexample {
    std::vector<std::string> operands;
    std::optional<VertexId> expected;
    std::optional<VertexId> got;
    std::string note;
    std::optional<Certificate> certificate;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct TheoremReport {
    Theorem theorem = Theorem::oracle;
    HypothesisMode mode = HypothesisMode::both;
    bool allow_equal_replacements = false;
    bool connected_only = true;
    std::string family;

    std::uint64_t instances_total = 0;
    std::uint64_t instances_checked = 0;
    std::uint64_t instances_skipped = 0;
    std::uint64_t instances_vacuous = 0;
    std::uint64_t sub_checks = 0;

    /// join: the two-vertex set exhibited by the argument, re-checked per instance.
    std::uint64_t proof_witness_checked = 0;
    std::uint64_t proof_witness_failures = 0;
    /// join_k1: instances where some γ_t-set of G is not 2-movable in G (data only).
    std::uint64_t proof_claim_checked = 0;
    std::uint64_t proof_claim_failures = 0;

    std::vector<Counterexample> counterexamples;
    std::vector<Discrepancy> discrepancies;
    std::chrono::nanoseconds elapsed{0};

    [[nodiscard]] bool ok() const { return counterexamples.empty(); }
};

/// Checks `theorem` on every instance of `family` and aggregates the verdicts
/// in enumeration order, independent of `jobs`. Throws LimitError when the
/// family exceeds the sweep bounds.
TheoremReport sweep(Theorem theorem, const FamilySpec& family, const SweepOptions& options = {});

/// Folds a verdict into a report; exposed for callers that drive their own instance lists.
void record(TheoremReport& report, const Verdict& v);

/// Report document: {theorem, instances_total, instances_checked, counterexamples, elapsed, ...}.
std::string emit_report(const TheoremReport& r, bool pretty = true);
TheoremReport parse_report(const std::string& text);

std::uint64_t splitmix64(std::uint64_t x);

} // namespace movdom
