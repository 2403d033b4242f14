#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecclab/enumeration.hpp"
#include "ecclab/graph.hpp"
#include "ecclab/rational.hpp"

namespace ecclab {

/// A value that is exact when both ingredients are rational and a double
/// otherwise. `approx` is always populated.
struct Quantity {
    std::optional<Rational> exact;
    double approx = 0.0;

    static Quantity of(Rational r) { return {r, r.to_double()}; }
    static Quantity real(double d) { return {std::nullopt, d}; }
    bool is_exact() const { return exact.has_value(); }
    std::string str() const;
};

enum class Combiner { sum, product, ratio };
enum class Partner { independence, randic, spectral, clique, chromatic, min_degree, domination };
enum class Direction { upper, lower, extremal_family };
enum class Checkable { closed_bound, extremal_family_only };
/// What the source literature says about the statement.
enum class Standing { proved, refuted, open };

struct ConjectureSpec {
    std::string id;
    std::string paper_label;
    Combiner combiner = Combiner::sum;
    Partner partner = Partner::independence;
    Direction direction = Direction::upper;
    Checkable checkable = Checkable::closed_bound;
    Standing standing = Standing::open;
    std::string statement;
    std::string claimed_extremal;
    /// Closed bound as a function of n; nullopt where the statement is not
    /// evaluated (odd n for A.100-U).
    std::function<std::optional<Quantity>(int n)> bound;
    /// Extremal-family-only: every family member on n vertices.
    std::function<std::vector<Graph>(int n)> family;
};

const std::vector<ConjectureSpec>& registry();
/// Throws InvalidArgument for an unknown id.
const ConjectureSpec& find_conjecture(std::string_view id);

std::string_view to_string(Combiner c);
std::string_view to_string(Partner p);
std::string_view to_string(Direction d);
std::string_view to_string(Standing s);

enum class Status { satisfied, equality, near_equality, violated, indeterminate };
std::string_view to_string(Status s);

struct Tolerances {
    double absolute = 1e-9;  // floating comparisons; exact ones use zero
    double near = 1e-6;      // |slack| within this band is flagged near-equality
};

struct ConjectureEvaluation {
    int n = 0;
    std::string graph6;
    Quantity value;
    std::optional<Quantity> bound;
    std::optional<Quantity> slack;  // bound - value (upper) or value - bound (lower)
    Status status = Status::indeterminate;
};

/// ecc combined with the partner invariant, e.g. alpha + ecc.
Quantity combined_value(const ConjectureSpec& spec, const Graph& g);

/// Requires a connected graph on at least 4 vertices and a closed-bound spec.
ConjectureEvaluation evaluate(const ConjectureSpec& spec, const Graph& g, const Tolerances& tol = {});

struct Witness {
    int n = 0;
    std::string graph6;
    std::string certificate;
    Quantity value;
    std::optional<Quantity> bound;
    std::optional<Quantity> slack;
    Status status = Status::satisfied;
};

struct OrderSummary {
    int n = 0;
    std::size_t scanned = 0;
    std::size_t violations = 0;
    std::size_t equalities = 0;
    std::size_t near_equalities = 0;
    std::size_t indeterminate = 0;
    /// Max value (upper bounds and extremal-family statements) or min value
    /// (lower bounds) over the class at this order.
    std::optional<Quantity> extremal_value;
    std::vector<Witness> extremal_graphs;
    /// Extremal-family-only: whether some maximizer belongs to the family.
    std::optional<bool> family_member;
};

struct ScanReport {
    std::string id;
    std::string paper_label;
    std::string graph_class;
    int n_min = 0;
    int n_max = 0;
    std::size_t scanned = 0;
    std::vector<Witness> violations;
    std::vector<Witness> equality_graphs;
    std::vector<Witness> near_equality_graphs;
    std::vector<OrderSummary> per_n;

    Standing standing = Standing::open;
};

struct ScanOptions {
    bool parallel = true;  // false runs the serial reference loop
    int threads = 0;       // 0 = OpenMP default
    Tolerances tolerances;
    EnumerationLimits limits;
    std::optional<int> max_degree;
    bool chemical = false;
};

/// Scans every graph of `graph_class` with n_min <= n <= n_max.
ScanReport scan(const ConjectureSpec& spec, GraphClass graph_class, int n_min, int n_max, const ScanOptions& options = {});

/// Scans an arbitrary catalogue (e.g. read from graph6), grouped by order.
ScanReport scan_catalog(const ConjectureSpec& spec, std::span<const Graph> graphs, std::string label,
                        const ScanOptions& options = {});

struct A100Row {
    int k = 0;
    int delta = 0;
    int n = 0;
    Rational ecc_closed_form;
    Rational ecc_bfs;
    int min_degree = 0;
    Rational product;           // delta * ecc
    Rational bound;             // 2n - 2
    Rational margin;            // product - bound
    long long criterion = 0;    // k(delta - 8) - 2 delta
    bool forms_agree = false;
    bool violated = false;
};

/// Evaluates the almost-path-clique counterexample family on the grid.
/// Odd k is rejected since the closed form is stated for even k.
std::vector<A100Row> refute_a100(std::span<const int> ks, std::span<const int> deltas);

}  // namespace ecclab
