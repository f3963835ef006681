#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectree/graph.hpp"
#include "spectree/report.hpp"
#include "spectree/spectra.hpp"

namespace spectree {

inline constexpr double kCheckTol = 1e-8;
inline constexpr double kTableTol = 0.01;

/// (s, t) with s >= t if the tree is T(1, s, t): exactly two non-pendant
/// vertices, adjacent to each other.
std::optional<std::pair<std::size_t, std::size_t>> classify_double_star(const Graph& tree);

/// Whether L(tree) x K_m is connected: L(tree) is bipartite only for paths,
/// and K_m only for m = 2.
bool beta_connected(const Graph& tree, std::size_t m);

/// Over all free trees with 3 <= n <= max_n: a(beta_m) = m-1 exactly for
/// T(1,s,t) with s,t >= 2. Stars and disconnected products are informational.
VerificationReport check_double_star_characterization(std::size_t max_n, std::size_t m, double tol = kCheckTol,
                                                      const NumericOptions& opt = {});

/// s = 1 instances: the P_3 cubic roots, and for T(1,1,t) with t >= 2 both
/// q_min < m-1 and the principal-submatrix bound.
VerificationReport check_pendant_case_bounds(std::size_t max_t, std::size_t max_m, double tol = kCheckTol,
                                             const NumericOptions& opt = {});

/// Closed-form integrality decision of L(T(1,s,t)) x K_m against the
/// eigensolved spectrum, plus the cubic roots and the line-graph eigenvalues.
VerificationReport check_beta_integrality(std::size_t max_st, std::size_t max_m, double tol = kCheckTol,
                                          const NumericOptions& opt = {});

/// a(X x K_m) = m-1 for windmills (delta >= 2, star block structure) and
/// a(X x K_m) < m-1 for restricted windmill variants carrying a pendant vertex.
VerificationReport check_restricted_star_blocks(std::size_t max_eta, std::size_t max_mu, std::size_t max_m,
                                                double tol = kCheckTol, const NumericOptions& opt = {});

struct SharedNeighborhoodInstance {
    std::string name;
    Graph base;
    std::vector<Vertex> group;
    std::vector<Edge> added;
};

/// Adding edges inside a group of vertices with a common neighbourhood of
/// size p replaces k-1 copies of p in the Laplacian spectrum by p + lambda_i,
/// lambda_i the nonzero-index eigenvalues of the added subgraph's Laplacian.
/// Throws std::invalid_argument when the group does not share a neighbourhood
/// or an added edge leaves the group.
VerificationReport check_common_neighborhood_shift(const SharedNeighborhoodInstance& instance,
                                                   double tol = kCheckTol, const NumericOptions& opt = {});

std::vector<SharedNeighborhoodInstance> shared_neighborhood_instances();

/// Tree containing a vertex with at least two neighbours that each carry
/// exactly mu >= 2 pendant children: a(beta_m) <= (m-1) lambda_1 with
/// lambda_1 the smaller root of x^2 - (mu+1+eta) x + eta, eta = deg of that
/// vertex. When `root` is given, the reading with eta = child count is
/// reported informationally, as is the unscaled reading.
/// Throws std::invalid_argument if the pattern is absent.
VerificationReport check_repeated_branch_bound(const Graph& tree, std::size_t m,
                                               std::optional<Vertex> root = std::nullopt,
                                               std::string name = "tree", double tol = kCheckTol,
                                               const NumericOptions& opt = {});

struct ReferenceRow {
    std::string name;
    std::size_t order;
    /// 1-based endpoints as drawn.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    double a;
    /// beta_2 .. beta_7.
    std::vector<double> beta;
    /// Row excluded from the verdict.
    bool informational = false;
    std::string note{};

    Graph graph() const;
};

const std::vector<ReferenceRow>& reference_table();

/// Recomputes a(X) and a(beta_m), m = 2..7, for each reference row.
VerificationReport reproduce_reference_table(double tol = kTableTol, const NumericOptions& opt = {});

VerificationReport check_star_products(std::size_t max_n, std::size_t max_m, double tol = kCheckTol,
                                       const NumericOptions& opt = {});
VerificationReport check_windmill_products(std::size_t max_eta, std::size_t max_mu, std::size_t max_m,
                                           double tol = kCheckTol, const NumericOptions& opt = {});
VerificationReport check_wprime_connectivity(std::size_t max_eta, std::size_t max_mu, std::size_t max_m,
                                             double tol = kCheckTol, const NumericOptions& opt = {});
VerificationReport check_book_line_graphs(std::size_t max_k, std::size_t max_m, double tol = kCheckTol,
                                          const NumericOptions& opt = {});

struct ClaimParams {
    std::size_t max_n = 8;
    std::size_t m = 2;
    double tol = kCheckTol;
    NumericOptions numeric;
};

/// Claim ids: ex-1, thm-2.1, thm-2.1-cases, cor-2.1, thm-2.3, thm-das,
/// cor-3.1, table-2, thm-3.1, thm-3.2, thm-3.3.
const std::vector<std::string>& claim_ids();

/// Throws std::invalid_argument for an unknown id.
VerificationReport run_claim(std::string_view id, const ClaimParams& params = {});

}  // namespace spectree
