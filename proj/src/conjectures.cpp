#include "ecclab/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "ecclab/canonical.hpp"
#include "ecclab/error.hpp"
#include "ecclab/families.hpp"
#include "ecclab/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ecclab {

std::string Quantity::str() const {
    if (exact) return exact->str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", approx);
    return buf;
}

namespace {

using R = Rational;

std::int64_t path_ecc_sum(std::int64_t len) { return (3 * len * len - 2 * len) / 4; }
double ra_path(int n) { return (n - 3 + 2 * std::sqrt(2.0)) / 2.0; }
R ecc_path(int n) { return R(path_ecc_sum(n), n); }
double star_ecc(int n) { return 2.0 - 1.0 / n; }

std::vector<Graph> lollipops(int n) {
    std::vector<Graph> out;
    for (int k = 2; k <= n; ++k) out.push_back(families::lollipop(n, k));
    return out;
}

std::vector<Graph> dumbbells(int n) {
    std::vector<Graph> out;
    for (int k1 = 1; k1 <= n; ++k1)
        for (int k2 = 1; k2 <= k1 && k1 + k2 <= n; ++k2) out.push_back(families::dumbbell(k1, k2, n - k1 - k2));
    return out;
}

std::vector<ConjectureSpec> build_registry() {
    std::vector<ConjectureSpec> r;

    {
        ConjectureSpec s;
        s.id = "A.478-U";
        s.paper_label = "A.478-U";
        s.combiner = Combiner::sum;
        s.partner = Partner::independence;
        s.direction = Direction::upper;
        s.standing = Standing::proved;
        s.statement = "alpha + ecc <= (3n^2-2n-1)/4n + (n+1)/2 (n odd), (3n^2-4n-4)/4n + (n+2)/2 (n even)";
        s.claimed_extremal = "P_n for odd n, B(n,3) for even n";
        s.bound = [](int n) -> std::optional<Quantity> {
            const std::int64_t nn = n;
            if (n % 2 == 1) return Quantity::of(R(3 * nn * nn - 2 * nn - 1, 4 * nn) + R(nn + 1, 2));
            return Quantity::of(R(3 * nn * nn - 4 * nn - 4, 4 * nn) + R(nn + 2, 2));
        };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.462-U";
        s.paper_label = "A.462-U";
        s.combiner = Combiner::sum;
        s.partner = Partner::randic;
        s.direction = Direction::upper;
        s.standing = Standing::proved;
        s.statement = "Ra + ecc <= Ra(P_n) + ecc(P_n)";
        s.claimed_extremal = "P_n";
        s.bound = [](int n) -> std::optional<Quantity> {
            double e = n % 2 == 1 ? (3.0 * n + 1) / 4.0 * (n - 1.0) / n : (3.0 * n - 2) / 4.0;
            return Quantity::real(ra_path(n) + e);
        };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.464-U";
        s.paper_label = "A.464-U";
        s.combiner = Combiner::product;
        s.partner = Partner::randic;
        s.direction = Direction::upper;
        s.standing = Standing::proved;
        s.statement = "Ra * ecc <= Ra(P_n) * ecc(P_n)";
        s.claimed_extremal = "P_n";
        s.bound = [](int n) -> std::optional<Quantity> {
            double e = n % 2 == 1 ? (3.0 * n + 1) / 4.0 * (n - 1.0) / n : (3.0 * n - 2) / 4.0;
            return Quantity::real(ra_path(n) * e);
        };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.462-L";
        s.paper_label = "A.462-L";
        s.combiner = Combiner::sum;
        s.partner = Partner::randic;
        s.direction = Direction::lower;
        s.standing = Standing::open;
        s.statement = "Ra + ecc >= sqrt(n-1) + 2 - 1/n";
        s.claimed_extremal = "S_n";
        s.bound = [](int n) -> std::optional<Quantity> { return Quantity::real(std::sqrt(n - 1.0) + star_ecc(n)); };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.464-L-randic";
        s.paper_label = "A.464-L";
        s.combiner = Combiner::product;
        s.partner = Partner::randic;
        s.direction = Direction::lower;
        s.standing = Standing::open;
        s.statement = "Ra * ecc >= n/2 (n <= 13), sqrt(n-1) * (2 - 1/n) (n > 13)";
        s.claimed_extremal = "K_n for n <= 13, S_n for n > 13";
        s.bound = [](int n) -> std::optional<Quantity> {
            if (n <= 13) return Quantity::of(R(n, 2));
            return Quantity::real(std::sqrt(n - 1.0) * star_ecc(n));
        };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.458-L";
        s.paper_label = "A.458-L";
        s.combiner = Combiner::sum;
        s.partner = Partner::spectral;
        s.direction = Direction::lower;
        s.standing = Standing::open;
        s.statement = "lambda + ecc >= sqrt(n-1) + 2 - 1/n";
        s.claimed_extremal = "S_n";
        s.bound = [](int n) -> std::optional<Quantity> { return Quantity::real(std::sqrt(n - 1.0) + star_ecc(n)); };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.460-L";
        s.paper_label = "A.460-L";
        s.combiner = Combiner::product;
        s.partner = Partner::spectral;
        s.direction = Direction::lower;
        s.standing = Standing::open;
        s.statement = "lambda * ecc >= sqrt(n-1) * (2 - 1/n)";
        s.claimed_extremal = "S_n";
        s.bound = [](int n) -> std::optional<Quantity> { return Quantity::real(std::sqrt(n - 1.0) * star_ecc(n)); };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.488-U";
        s.paper_label = "A.488-U";
        s.combiner = Combiner::product;
        s.partner = Partner::clique;
        s.direction = Direction::extremal_family;
        s.checkable = Checkable::extremal_family_only;
        s.standing = Standing::proved;
        s.statement = "max ecc * omega is attained by a lollipop";
        s.claimed_extremal = "LP(n,k)";
        s.family = lollipops;
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.479-U";
        s.paper_label = "A.479-U";
        s.combiner = Combiner::ratio;
        s.partner = Partner::independence;
        s.direction = Direction::extremal_family;
        s.checkable = Checkable::extremal_family_only;
        s.standing = Standing::open;
        s.statement = "max ecc / alpha is attained by two cliques linked by a path";
        s.claimed_extremal = "dumbbell";
        s.family = dumbbells;
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.492-U";
        s.paper_label = "A.492-U";
        s.combiner = Combiner::product;
        s.partner = Partner::chromatic;
        s.direction = Direction::extremal_family;
        s.checkable = Checkable::extremal_family_only;
        s.standing = Standing::open;
        s.statement = "max ecc * chi is attained by a lollipop";
        s.claimed_extremal = "LP(n,k)";
        s.family = lollipops;
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.100-U";
        s.paper_label = "A.100-U";
        s.combiner = Combiner::product;
        s.partner = Partner::min_degree;
        s.direction = Direction::upper;
        s.standing = Standing::refuted;
        s.statement = "delta * ecc <= 2n - 2 (n even); odd n not evaluated";
        s.claimed_extremal = "K_n minus a perfect matching";
        s.bound = [](int n) -> std::optional<Quantity> {
            if (n % 2 == 1) return std::nullopt;
            return Quantity::of(R(2 * static_cast<std::int64_t>(n) - 2));
        };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.464-L-domination-original";
        s.paper_label = "A.464-L";
        s.combiner = Combiner::sum;
        s.partner = Partner::domination;
        s.direction = Direction::upper;
        s.standing = Standing::refuted;
        s.statement = "gamma + ecc <= four-case bound in n mod 2 and n mod 3 (original form; printed with >=, read as <=)";
        s.claimed_extremal = "P_n for n != 1 mod 3; trees with diameter n-2 otherwise";
        s.bound = [](int n) -> std::optional<Quantity> {
            const std::int64_t nn = n;
            const bool odd = n % 2 == 1;
            if (n % 3 != 1) {
                R base((nn + 1) / 3);
                if (odd) return Quantity::of(base + R((3 * nn + 1) * nn, 4 * (nn - 1)));
                return Quantity::of(base + R(3 * nn - 2, 4));
            }
            if (odd) return Quantity::of(R(13 * nn - 16, 12) - R(3, 4 * nn));
            return Quantity::of(R(13 * nn - 16, 12) - R(1, nn));
        };
        r.push_back(s);
    }
    {
        ConjectureSpec s;
        s.id = "A.464-L-domination-corrected";
        s.paper_label = "A.464-L";
        s.combiner = Combiner::sum;
        s.partner = Partner::domination;
        s.direction = Direction::upper;
        s.standing = Standing::open;
        s.statement = "gamma + ecc <= ceil(n/3) + ecc(P_n) (n != 0 mod 3), n/3 + 2 - 3/n + ecc-sum(P_{n-1})/n (n = 0 mod 3); printed with >=, read as <=";
        s.claimed_extremal = "P_n for n != 0 mod 3, D_n for n = 0 mod 3";
        s.bound = [](int n) -> std::optional<Quantity> {
            const std::int64_t nn = n;
            if (n % 3 != 0) return Quantity::of(R((nn + 2) / 3) + ecc_path(n));
            return Quantity::of(R(nn, 3) + R(2) - R(3, nn) + R(path_ecc_sum(nn - 1), nn));
        };
        r.push_back(s);
    }
    return r;
}

Quantity partner_value(Partner p, const Graph& g) {
    switch (p) {
        case Partner::independence: return Quantity::of(independence_number(g));
        case Partner::clique: return Quantity::of(clique_number(g));
        case Partner::chromatic: return Quantity::of(chromatic_number(g));
        case Partner::min_degree: return Quantity::of(g.min_degree());
        case Partner::domination: return Quantity::of(domination_number(g));
        case Partner::randic: return Quantity::real(randic_index(g));
        case Partner::spectral: return Quantity::real(spectral_radius(g));
    }
    throw InvalidArgument("unknown partner invariant");
}

Quantity combine(Combiner c, const Rational& ecc, const Quantity& partner) {
    if (partner.exact) {
        switch (c) {
            case Combiner::sum: return Quantity::of(ecc + *partner.exact);
            case Combiner::product: return Quantity::of(ecc * *partner.exact);
            case Combiner::ratio: return Quantity::of(ecc / *partner.exact);
        }
    }
    const double e = ecc.to_double();
    switch (c) {
        case Combiner::sum: return Quantity::real(e + partner.approx);
        case Combiner::product: return Quantity::real(e * partner.approx);
        case Combiner::ratio: return Quantity::real(e / partner.approx);
    }
    throw InvalidArgument("unknown combiner");
}

Quantity difference(const Quantity& a, const Quantity& b) {
    if (a.exact && b.exact) return Quantity::of(*a.exact - *b.exact);
    return Quantity::real(a.approx - b.approx);
}

Status classify(const Quantity& slack, const Tolerances& tol) {
    if (slack.exact) {
        if (*slack.exact < R(0)) return Status::violated;
        if (*slack.exact == R(0)) return Status::equality;
        return Status::satisfied;
    }
    if (slack.approx < -tol.absolute) return Status::violated;
    if (std::abs(slack.approx) <= tol.absolute) return Status::equality;
    if (std::abs(slack.approx) <= tol.near) return Status::near_equality;
    return Status::satisfied;
}

// Sign of a - b, exact where possible, else within the absolute tolerance.
int compare(const Quantity& a, const Quantity& b, const Tolerances& tol) {
    if (a.exact && b.exact) {
        if (*a.exact < *b.exact) return -1;
        return *a.exact == *b.exact ? 0 : 1;
    }
    double d = a.approx - b.approx;
    if (std::abs(d) <= tol.absolute) return 0;
    return d < 0 ? -1 : 1;
}

void check_evaluable(const Graph& g) {
    if (!g.connected()) throw DisconnectedGraph("conjectures are stated for connected graphs");
    if (g.order() < 4) throw InvalidArgument("conjectures are stated for n >= 4");
}

ConjectureEvaluation evaluate_unchecked(const ConjectureSpec& spec, const Graph& g, const Tolerances& tol) {
    ConjectureEvaluation ev;
    ev.n = g.order();
    ev.graph6 = encode_graph6(g);
    ev.value = combined_value(spec, g);
    if (spec.checkable == Checkable::extremal_family_only) return ev;
    ev.bound = spec.bound(g.order());
    if (!ev.bound) {
        ev.status = Status::indeterminate;
        return ev;
    }
    ev.slack = spec.direction == Direction::upper ? difference(*ev.bound, ev.value) : difference(ev.value, *ev.bound);
    ev.status = classify(*ev.slack, tol);
    return ev;
}

std::vector<ConjectureEvaluation> evaluate_block(const ConjectureSpec& spec, std::span<const Graph> graphs,
                                                 const ScanOptions& options) {
    std::vector<ConjectureEvaluation> out(graphs.size());
    if (!options.parallel) {
        for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = evaluate_unchecked(spec, graphs[i], options.tolerances);
        return out;
    }
#ifdef _OPENMP
    const int workers = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
#endif
    for (long i = 0; i < static_cast<long>(graphs.size()); ++i)
        out[i] = evaluate_unchecked(spec, graphs[i], options.tolerances);
    return out;
}

Witness to_witness(const ConjectureEvaluation& ev, const Graph& g) {
    return Witness{ev.n, ev.graph6, canonical_certificate(g), ev.value, ev.bound, ev.slack, ev.status};
}

bool witness_order(const Witness& a, const Witness& b) {
    return std::tie(a.n, a.certificate) < std::tie(b.n, b.certificate);
}

void scan_order(const ConjectureSpec& spec, int n, std::span<const Graph> graphs, const ScanOptions& options, ScanReport& report) {
    auto evals = evaluate_block(spec, graphs, options);
    OrderSummary summary;
    summary.n = n;
    summary.scanned = graphs.size();
    const bool maximize = spec.direction != Direction::lower;
    std::vector<std::size_t> best;
    for (std::size_t i = 0; i < evals.size(); ++i) {
        const auto& ev = evals[i];
        switch (ev.status) {
            case Status::violated:
                ++summary.violations;
                report.violations.push_back(to_witness(ev, graphs[i]));
                break;
            case Status::equality:
                ++summary.equalities;
                report.equality_graphs.push_back(to_witness(ev, graphs[i]));
                break;
            case Status::near_equality:
                ++summary.near_equalities;
                report.near_equality_graphs.push_back(to_witness(ev, graphs[i]));
                break;
            case Status::indeterminate:
                if (spec.checkable == Checkable::closed_bound) ++summary.indeterminate;
                break;
            case Status::satisfied: break;
        }
        if (best.empty()) {
            best = {i};
            continue;
        }
        int c = compare(ev.value, evals[best.front()].value, options.tolerances);
        if (!maximize) c = -c;
        if (c > 0)
            best = {i};
        else if (c == 0)
            best.push_back(i);
    }
    if (!best.empty()) {
        summary.extremal_value = evals[best.front()].value;
        for (auto i : best) summary.extremal_graphs.push_back(to_witness(evals[i], graphs[i]));
        std::sort(summary.extremal_graphs.begin(), summary.extremal_graphs.end(), witness_order);
    }
    if (spec.checkable == Checkable::extremal_family_only && !best.empty()) {
        std::set<std::string> members;
        for (const Graph& f : spec.family(n)) members.insert(canonical_certificate(f));
        bool any = false;
        for (const auto& w : summary.extremal_graphs) any = any || members.count(w.certificate) > 0;
        summary.family_member = any;
        if (!any) {
            summary.violations = summary.extremal_graphs.size();
            for (auto w : summary.extremal_graphs) {
                w.status = Status::violated;
                report.violations.push_back(std::move(w));
            }
        }
    }
    report.scanned += graphs.size();
    report.per_n.push_back(std::move(summary));
}

ScanReport blank_report(const ConjectureSpec& spec, std::string label) {
    ScanReport report;
    report.id = spec.id;
    report.paper_label = spec.paper_label;
    report.graph_class = std::move(label);
    report.standing = spec.standing;
    return report;
}

void finish(ScanReport& report) {
    std::stable_sort(report.violations.begin(), report.violations.end(), witness_order);
    std::stable_sort(report.equality_graphs.begin(), report.equality_graphs.end(), witness_order);
    std::stable_sort(report.near_equality_graphs.begin(), report.near_equality_graphs.end(), witness_order);
}

}  // namespace

const std::vector<ConjectureSpec>& registry() {
    static const std::vector<ConjectureSpec> specs = build_registry();
    return specs;
}

const ConjectureSpec& find_conjecture(std::string_view id) {
    for (const auto& s : registry())
        if (s.id == id) return s;
    throw InvalidArgument("unknown conjecture '" + std::string(id) + "'");
}

std::string_view to_string(Combiner c) {
    switch (c) {
        case Combiner::sum: return "sum";
        case Combiner::product: return "product";
        case Combiner::ratio: return "ratio";
    }
    return "?";
}

std::string_view to_string(Partner p) {
    switch (p) {
        case Partner::independence: return "independence";
        case Partner::randic: return "randic";
        case Partner::spectral: return "spectral_radius";
        case Partner::clique: return "clique";
        case Partner::chromatic: return "chromatic";
        case Partner::min_degree: return "min_degree";
        case Partner::domination: return "domination";
    }
    return "?";
}

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::upper: return "upper";
        case Direction::lower: return "lower";
        case Direction::extremal_family: return "extremal-family";
    }
    return "?";
}

std::string_view to_string(Standing s) {
    switch (s) {
        case Standing::proved: return "proved";
        case Standing::refuted: return "refuted";
        case Standing::open: return "open";
    }
    return "?";
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::satisfied: return "satisfied";
        case Status::equality: return "equality";
        case Status::near_equality: return "near-equality";
        case Status::violated: return "violated";
        case Status::indeterminate: return "indeterminate";
    }
    return "?";
}

Quantity combined_value(const ConjectureSpec& spec, const Graph& g) {
    return combine(spec.combiner, average_eccentricity(g), partner_value(spec.partner, g));
}

ConjectureEvaluation evaluate(const ConjectureSpec& spec, const Graph& g, const Tolerances& tol) {
    if (spec.checkable != Checkable::closed_bound)
        throw InvalidArgument(spec.id + " has no closed bound; use scan to test the extremal family");
    check_evaluable(g);
    return evaluate_unchecked(spec, g, tol);
}

ScanReport scan(const ConjectureSpec& spec, GraphClass graph_class, int n_min, int n_max, const ScanOptions& options) {
    if (n_min < 4) throw InvalidArgument("conjectures are stated for n >= 4");
    if (n_max < n_min) throw InvalidArgument("empty order range");
    ScanReport report = blank_report(spec, std::string(class_name(graph_class)));
    report.n_min = n_min;
    report.n_max = n_max;
    for (int n = n_min; n <= n_max; ++n) {
        EnumerationQuery q{graph_class, n, options.max_degree, options.chemical, std::nullopt, options.threads};
        auto graphs = enumerate(q, options.limits);
        scan_order(spec, n, graphs, options, report);
    }
    finish(report);
    return report;
}

ScanReport scan_catalog(const ConjectureSpec& spec, std::span<const Graph> graphs, std::string label, const ScanOptions& options) {
    std::map<int, std::vector<Graph>> by_order;
    for (const Graph& g : graphs) {
        check_evaluable(g);
        by_order[g.order()].push_back(g);
    }
    ScanReport report = blank_report(spec, std::move(label));
    if (!by_order.empty()) {
        report.n_min = by_order.begin()->first;
        report.n_max = by_order.rbegin()->first;
    }
    for (auto& [n, block] : by_order) scan_order(spec, n, block, options, report);
    finish(report);
    return report;
}

std::vector<A100Row> refute_a100(std::span<const int> ks, std::span<const int> deltas) {
    std::vector<A100Row> rows;
    for (int k : ks) {
        if (k % 2 != 0) throw InvalidArgument("refute_a100: k must be even (closed form scope), got " + std::to_string(k));
        for (int delta : deltas) {
            if (delta < 2 || k < 2) throw InvalidArgument("refute_a100: requires k >= 2 and delta >= 2");
            FamilySpec spec{FamilyKind::pc_graph, {k, delta}};
            Graph g = make(spec);
            A100Row row;
            row.k = k;
            row.delta = delta;
            row.n = g.order();
            row.ecc_closed_form = closed_form_ecc(spec);
            row.ecc_bfs = average_eccentricity(g);
            row.forms_agree = row.ecc_closed_form == row.ecc_bfs;
            row.min_degree = g.min_degree();
            row.product = R(row.min_degree) * row.ecc_bfs;
            row.bound = R(2 * static_cast<std::int64_t>(row.n) - 2);
            row.margin = row.product - row.bound;
            row.criterion = static_cast<long long>(k) * (delta - 8) - 2LL * delta;
            row.violated = row.margin > R(0);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace ecclab
