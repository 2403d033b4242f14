#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecclab/graph.hpp"
#include "ecclab/rational.hpp"

namespace ecclab {

enum class FamilyKind {
    path,
    cycle,
    star,
    complete,
    complete_bipartite,
    hypercube,
    broom,
    starlike,
    balanced_starlike,
    double_broom,
    lollipop,
    star_plus_edge,
    dn_tree,
    complete_minus_matching,
    pc_graph,
    dumbbell,
};

/// A named family member. Parameter meaning per kind:
///
///   path n | cycle n | star n | complete n | star_plus_edge n | dn_tree n
///   complete_minus_matching n | hypercube d | complete_bipartite a b
///   broom n delta            center 0, star leaves 1..delta-1, path delta..n-1
///   starlike n1 .. nk        branch vertex 0, arms laid out in order
///   balanced_starlike n k
///   double_broom d a b       path 0..d, a extra leaves on 1, b on d-1
///   lollipop n k             clique 0..k-1, path hangs off k-1
///   pc_graph k delta         block-major; in each block local 0 = v_i, local 1 = u_i
///   dumbbell n k1 k2 len     K_k1, len path vertices, K_k2
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    std::vector<int> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(FamilyKind kind);

/// Parses "broom n=11 delta=6", "pc k=5 delta=4", "starlike arms=3,2,1".
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

/// Throws InvalidArgument with a kind-specific message.
void validate(const FamilySpec& spec);

Graph make(const FamilySpec& spec);

bool has_closed_form(const FamilySpec& spec);

/// Closed-form average eccentricity. Throws InvalidArgument for kinds
/// without one and for pc_graph with odd k.
Rational closed_form_ecc(const FamilySpec& spec);

/// Broom value of ecc + alpha from the two-case parity display.
/// Requires 2 <= delta <= n-1.
Rational broom_alpha_plus_ecc(int n, int delta);

/// k/n * floor((-k^2 - 2k(n-1) + n(2+3n)) / 4), i.e. ecc(LP(n,k)) * k.
/// Requires 2 <= k <= n-1.
Rational lollipop_product(int n, int k);

struct LollipopOptimum {
    double k_star = 0.0;          // larger critical point of the cubic
    std::vector<int> argmax;      // integer maximizers of lollipop_product over 2..n-1
    Rational best;
};

/// Requires n >= 4.
LollipopOptimum lollipop_kstar(int n);

// Convenience constructors.
namespace families {
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int d);
Graph broom(int n, int delta);
Graph starlike(std::vector<int> arms);
Graph balanced_starlike(int n, int k);
Graph double_broom(int d, int a, int b);
Graph lollipop(int n, int k);
Graph star_plus_edge(int n);
Graph dn_tree(int n);
Graph complete_minus_matching(int n);
Graph pc_graph(int k, int delta);
Graph dumbbell(int k1, int k2, int len);

/// Nearly equal parts of total into k pieces, largest first.
std::vector<int> balanced_parts(int total, int k);
}  // namespace families

}  // namespace ecclab
