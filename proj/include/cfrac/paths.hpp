#ifndef CFRAC_PATHS_HPP
#define CFRAC_PATHS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cfrac/expand.hpp"
#include "cfrac/series.hpp"

namespace cfrac {

// Step weights for lattice-path enumeration. Indexing follows the usual
// convention: beta_i weights a Motzkin fall from height i, gamma_i a level
// step at height i, alpha_i a Dyck fall from height i. Rises carry weight 1
// unless `rises` is supplied (rises[i] weighs a rise starting at height i).
struct PathWeights {
    Domain domain;
    std::vector<Value> alphas; // alpha_1, alpha_2, ...
    std::vector<Value> betas;  // beta_1, beta_2, ...
    std::vector<Value> gammas; // gamma_0, gamma_1, ...
    std::vector<Value> rises;  // rise weight at height 0, 1, ...; empty = all 1

    const Value& alpha(int i) const;
    const Value& beta(int i) const;
    const Value& gamma(int i) const;
    Value rise(int i) const;
};

enum class TableKind { J, S, Sprime };

// Lower-triangular array T_{n,k}, 0 <= k <= n <= size().
struct TriangularTable {
    TableKind kind;
    Domain domain;
    std::vector<std::vector<Value>> rows;

    int size() const { return static_cast<int>(rows.size()) - 1; }
    const Value& at(int n, int k) const;
};

// J_{n+1,k} = J_{n,k-1} + gamma_k J_{n,k} + beta_{k+1} J_{n,k+1}, J_{0,k} = [k=0].
TriangularTable jacobi_rogers_table(const PathWeights& w, int n);

// Joint recurrence S'_{n,k} = S_{n,k} + alpha_{2k+2} S_{n,k+1},
// S_{n+1,k} = S'_{n,k-1} + alpha_{2k+1} S'_{n,k}; needs alphas through 2n.
std::pair<TriangularTable, TriangularTable> stieltjes_tables(const Domain& d,
                                                             const std::vector<Value>& alphas,
                                                             int n);

enum class PathMode { Motzkin, Dyck };
enum class Step { Rise, Level, Fall };

// Weight of one explicit path (product over steps).
Value weight_of_path(const PathWeights& w, int start_height, const std::vector<Step>& steps,
                     PathMode mode);

// Exhaustive sum of path weights over all length-n paths from start_height to
// end_height that stay at height >= min(start, end). Oracle use only; capped
// at n <= 14.
Value enumerate_weighted_paths(const PathWeights& w, int n, int start_height, int end_height,
                               PathMode mode);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// Three-way agreement for n = 0..order between the enumeration oracle, column
// zero of the Jacobi-Rogers table, and the evaluated J-fraction; plus the
// product decomposition of paths ending at heights 1..3.
CheckReport flajolet_check(const PathWeights& w, int order);
CheckReport flajolet_check_against(const PathWeights& w, const TriangularTable& table,
                                   int order);

enum class HankelForm { J, S, Sprime };

// Exact block factorization of the Hankel matrix of `a`:
//   J form:  (a_{i+j})   = J diag(1, b1, b1 b2, ...) J^T
//   S form:  (a_{i+j})   = S diag(1, a1 a2, a1 a2 a3 a4, ...) S^T
//   S'form:  (a_{i+j+1}) = S' diag(a1, a1 a2 a3, ...) S'^T
// on the (n+1) x (n+1) leading block; `a` must reach index 2n (2n+1 for S').
CheckReport hankel_factorization_check(const std::vector<Value>& a, const PathWeights& w,
                                       int n, HankelForm form);

// Expands the fraction built from the weights (g_{-1} = 1) and checks the
// index correspondences between the g-table and the triangular tables:
// S case: g_{2j,n} = S_{n+j,j} and g_{2j+1,n} = S'_{n+j,j};
// J case: g_{k,n} = J_{n+k,k}; every index within budget is checked.
CheckReport g_table_correspondence_check(const PathWeights& w, int order, TableKind which);

} // namespace cfrac

#endif
