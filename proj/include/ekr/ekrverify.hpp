#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekr/cliques.hpp"
#include "ekr/matrix.hpp"
#include "ekr/parallel.hpp"
#include "ekr/permgroup.hpp"
#include "ekr/polynomial.hpp"
#include "ekr/report.hpp"
#include "ekr/scheme.hpp"

namespace ekr {

// ---------------------------------------------------------------------------
// The pair graph X and its clique cover
// ---------------------------------------------------------------------------

/// Vertices: ordered pairs (i,j), i != j, i,j in [n-1]. Adjacency (matching
/// the Gram-matrix case analysis): disjoint pairs, or the two chain patterns
/// k->i->j (i = l, j != k) and i->j->l (j = k, i != l). Same-source,
/// same-target and swapped pairs are non-adjacent.
class PairGraph {
  public:
    explicit PairGraph(int n) : n_(n) {
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n - 1; ++j)
                if (i != j) pairs_.emplace_back(i, j);
        const int N = static_cast<int>(pairs_.size());
        adj_ = IntMatrix(N, N);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (a != b && adjacent_rule(pairs_[static_cast<std::size_t>(a)], pairs_[static_cast<std::size_t>(b)]))
                    adj_(a, b) = 1;
    }

    static bool adjacent_rule(std::pair<int, int> p, std::pair<int, int> q) {
        const auto [i, j] = p;
        const auto [k, l] = q;
        const bool share_i = i == k || i == l;
        const bool share_j = j == k || j == l;
        if (!share_i && !share_j) return true;   // disjoint
        if (i == l && j != k) return true;       // chain k -> i -> j
        if (j == k && i != l) return true;       // chain i -> j -> l
        return false;
    }

    /// Names the combinatorial case of a vertex pair, for mismatch reports.
    static const char* case_name(std::pair<int, int> p, std::pair<int, int> q) {
        const auto [i, j] = p;
        const auto [k, l] = q;
        if (i == k && j == l) return "diagonal";
        if (i == l && j == k) return "swap";
        if (i == k) return "same-source";
        if (j == l) return "same-target";
        if (j == k) return "chain i->j->l";
        if (i == l) return "chain k->i->j";
        return "disjoint";
    }

    int n() const { return n_; }
    int vertex_count() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const IntMatrix& adjacency() const { return adj_; }

    int index_of(int i, int j) const {
        for (std::size_t a = 0; a < pairs_.size(); ++a)
            if (pairs_[a] == std::make_pair(i, j)) return static_cast<int>(a);
        throw std::invalid_argument("pair not a vertex");
    }

    /// The clique C_alpha of each cyclic order alpha of [n-1]: consecutive
    /// pairs around the cycle. (n-2)! cliques of size n-1.
    std::vector<std::vector<int>> cyclic_clique_cover() const {
        std::vector<std::vector<int>> cover;
        std::vector<int> rest;
        for (int v = 2; v <= n_ - 1; ++v) rest.push_back(v);
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> cyc{1};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            std::vector<int> clique;
            for (std::size_t t = 0; t < cyc.size(); ++t)
                clique.push_back(index_of(cyc[t], cyc[(t + 1) % cyc.size()]));
            cover.push_back(std::move(clique));
        } while (std::next_permutation(rest.begin(), rest.end()));
        return cover;
    }

  private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    IntMatrix adj_;
};

/// Least-eigenvalue bound for X: valency, clique cover with edge
/// multiplicity (n-4)!, PSD certificate for A(X) + (n-3)I, and an exact
/// least-root computation of the characteristic polynomial for comparison.
inline CheckReport verify_X_bound(int n) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "x-bound";
    rep.n = n;
    rep.anchor = "sec6:least-eigenvalue-X";
    if (n < 5 || n > 8) throw std::invalid_argument("verify_X_bound: need 5 <= n <= 8");

    const PairGraph x(n);
    const int N = x.vertex_count();
    rep.witnesses["vertices"] = N;
    if (N != (n - 1) * (n - 2)) rep.fail("vertex_count", json{{"expected", (n - 1) * (n - 2)}});

    const int k = (n - 2) * (n - 3);
    for (int v = 0; v < N; ++v) {
        int deg = 0;
        for (int u = 0; u < N; ++u)
            if (x.adjacency()(v, u) == 1) ++deg;
        if (deg != k) {
            rep.fail("valency", json{{"vertex", v}, {"degree", deg}, {"expected", k}});
            break;
        }
    }
    rep.witnesses["valency"] = k;

    const auto cover = x.cyclic_clique_cover();
    rep.witnesses["cover_size"] = cover.size();
    const auto bound = clique_cover_eigen_bound(x.adjacency(), cover);
    if (!bound.valid) {
        rep.pass = false;
        rep.witnesses["cover_failure"] = bound.report.witnesses;
        rep.ms = sw.ms();
        return rep;
    }
    const Int want_y = factorial(n - 4);
    if (bound.edge_count_y != want_y)
        rep.fail("edge_multiplicity", json{{"got", bound.edge_count_y.str()}, {"expected", want_y.str()}});
    if (bound.bound != Rat(-(n - 3)))
        rep.fail("bound_value", json{{"got", bound.bound.str()}, {"expected", -(n - 3)}});
    rep.witnesses["edge_multiplicity"] = bound.edge_count_y.str();
    rep.witnesses["certified_bound"] = bound.bound.str();

    // Exact least eigenvalue for comparison.
    const Poly p = charpoly(x.adjacency().cast<Rat>());
    if (distinct_roots_below(p, Rat(-(n - 3))) != 0)
        rep.fail("root_below_bound", "characteristic polynomial has a root below -(n-3)");
    const LeastRoot lr = least_real_root(p);
    if (lr.exists) {
        if (lr.exact) rep.witnesses["least_eigenvalue"] = lr.exact->str();
        else rep.witnesses["least_eigenvalue_interval"] = json{lr.lo.str(), lr.hi.str()};
    }
    rep.witnesses["bound_tight"] = p.eval(Rat(-(n - 3))) == 0;
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Coset characteristic vectors, H, A, Abar, and the block system
// ---------------------------------------------------------------------------

/// 0/1 column of the coset S_{i,j} over the given element order.
inline void fill_coset_column(const GroupTable& g, const std::vector<int>& row_order, int i, int j,
                              IntMatrix& m, int col) {
    for (std::size_t r = 0; r < row_order.size(); ++r)
        if (g.element(row_order[r])(i - 1) == j - 1) m(static_cast<int>(r), col) = 1;
}

/// H: columns v_{i,j} for i,j in [n-1] (lex order), rows in plain group
/// element order.
inline IntMatrix standard_basis_matrix(const GroupTable& g) {
    const int n = g.n();
    std::vector<int> rows(static_cast<std::size_t>(g.order()));
    for (int r = 0; r < g.order(); ++r) rows[static_cast<std::size_t>(r)] = r;
    IntMatrix h(g.order(), (n - 1) * (n - 1));
    int col = 0;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) fill_coset_column(g, rows, i, j, h, col++);
    return h;
}

/// H^T H identity, rank, and the least-eigenvalue certificate for the basis
/// of the standard module.
inline CheckReport verify_standard_basis(int n) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "standard-basis";
    rep.n = n;
    rep.anchor = "sec5:basis-lemma";
    if (n < 4 || n > 7) throw std::invalid_argument("verify_standard_basis: need 4 <= n <= 7");

    const auto g = make_group(n, GroupKind::Alt);
    const IntMatrix h = standard_basis_matrix(*g);
    const IntMatrix gram = h.transpose() * h;

    // Target: (n-1)!/2 I + (n-2)!/2 (A(K_{n-1}) (x) A(K_{n-1})).
    const int m = n - 1;
    const Int a = factorial(n - 1) / 2, b = factorial(n - 2) / 2;
    bool entry_ok = true;
    for (int p = 0; p < m * m && entry_ok; ++p)
        for (int q = 0; q < m * m; ++q) {
            const int i = p / m, jj = p % m, kk = q / m, l = q % m;
            const Int expect = (p == q) ? a : ((i != kk && jj != l) ? b : Int(0));
            if (gram(p, q) != expect) {
                rep.fail("gram_entry", json{{"row_pair", {i + 1, jj + 1}},
                                            {"col_pair", {kk + 1, l + 1}},
                                            {"got", gram(p, q).str()},
                                            {"expected", expect.str()}});
                entry_ok = false;
                break;
            }
        }
    rep.witnesses["gram_identity"] = entry_ok;

    // Kronecker spectrum route: A(K_m)^2 = (m-2) A(K_m) + (m-1) I pins the
    // complete-graph eigenvalues {m-1, -1}, so A(K_m) (x) A(K_m) has
    // eigenvalues {(m-1)^2, 1, -(m-1)} = {(n-2)^2, 1, -(n-2)} and the least
    // eigenvalue of H^T H is a - b(n-2) = (n-2)!/2.
    IntMatrix km(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) km(i, j) = i == j ? 0 : 1;
    const IntMatrix km2 = km * km;
    IntMatrix expect_km2(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) expect_km2(i, j) = i == j ? Int(m - 1) : Int(m - 2);
    if (!(km2 == expect_km2)) rep.fail("complete_graph_square", "A(K_{n-1})^2 identity failed");
    const Int least = a - b * (n - 2);
    if (least != factorial(n - 2) / 2)
        rep.fail("least_eigenvalue_arithmetic", json{{"got", least.str()}});
    rep.witnesses["least_eigenvalue"] = least.str();

    // Certificate route: H^T H - least I is PSD and singular.
    RatMatrix shifted = gram.cast<Rat>();
    for (int i = 0; i < m * m; ++i) shifted(i, i) -= Rat(least);
    const PsdCertificate cert = ldlt_psd_certificate(shifted);
    if (!cert.psd) rep.fail("psd_certificate", cert.reason);
    IntMatrix shifted_int = gram;
    for (int i = 0; i < m * m; ++i) shifted_int(i, i) -= least;
    if (bareiss_det(shifted_int) != 0)
        rep.fail("tightness", "H^T H - (n-2)!/2 I should be singular");

    const int rank = bareiss_rank(h);
    rep.witnesses["rank_H"] = rank;
    if (rank != m * m) rep.fail("rank", json{{"got", rank}, {"expected", m * m}});

    // Column sums: each v_{i,j} has (n-1)!/2 ones.
    for (int c = 0; c < m * m; ++c) {
        Int s = 0;
        for (int r = 0; r < g->order(); ++r) s += h(r, c);
        if (s != a) { rep.fail("column_sum", json{{"column", c}}); break; }
    }
    rep.ms = sw.ms();
    return rep;
}

/// Rows reordered as [identity, derangements..., rest...]; columns of Abar
/// are the n diagonal pairs then the off-diagonal pairs over [n-1], so the
/// block shape [[1 0][0 M][B C]] falls out directly.
struct BlockSystem {
    GroupTablePtr group;
    std::vector<int> row_order;
    int derangement_count = 0;
    std::vector<std::pair<int, int>> diag_cols;     // (1,1)..(n,n)
    std::vector<std::pair<int, int>> offdiag_cols;  // (i,j), i != j, i,j in [n-1], lex
    IntMatrix abar;
    IntMatrix m_block;  // derangement rows x offdiag cols
};

inline BlockSystem build_block_system(GroupTablePtr group) {
    BlockSystem bs;
    bs.group = group;
    const GroupTable& g = *group;
    const int n = g.n();
    const int id = g.identity_index();
    const auto der = g.derangement_indices();
    bs.derangement_count = static_cast<int>(der.size());
    bs.row_order.push_back(id);
    bs.row_order.insert(bs.row_order.end(), der.begin(), der.end());
    for (int v = 0; v < g.order(); ++v)
        if (v != id && !g.element(v).is_derangement()) bs.row_order.push_back(v);

    for (int i = 1; i <= n; ++i) bs.diag_cols.emplace_back(i, i);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            if (i != j) bs.offdiag_cols.emplace_back(i, j);

    bs.abar = IntMatrix(g.order(), n + static_cast<int>(bs.offdiag_cols.size()));
    int col = 0;
    for (const auto& [i, j] : bs.diag_cols) fill_coset_column(g, bs.row_order, i, j, bs.abar, col++);
    for (const auto& [i, j] : bs.offdiag_cols) fill_coset_column(g, bs.row_order, i, j, bs.abar, col++);

    bs.m_block = IntMatrix(bs.derangement_count, static_cast<int>(bs.offdiag_cols.size()));
    for (int r = 0; r < bs.derangement_count; ++r)
        for (int c = 0; c < static_cast<int>(bs.offdiag_cols.size()); ++c)
            bs.m_block(r, c) = bs.abar(1 + r, n + c);
    return bs;
}

/// The column-space reduction: the displayed entry tables for v and w, the
/// identity (n-2) A_{1,n} = v - w, and rank(A) = rank(Abar) = (n-1)^2 + 1.
inline CheckReport verify_abar_reduction(int n) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "abar-reduction";
    rep.n = n;
    rep.anchor = "sec6:column-space";
    if (n < 4 || n > 7) throw std::invalid_argument("verify_abar_reduction: need 4 <= n <= 7");

    const auto group = make_group(n, GroupKind::Alt);
    const GroupTable& g = *group;

    // v := sum over i != 1,n and j != n of A_{i,j};
    // w := (n-3) * sum over j != n of A_{1,j} + A_{n,n}.
    for (int e = 0; e < g.order(); ++e) {
        const Permutation& pi = g.element(e);
        int v_entry = 0;
        for (int i = 2; i <= n - 1; ++i)
            if (pi(i - 1) != n - 1) ++v_entry;
        int w_entry = (pi(0) != n - 1 ? n - 3 : 0) + (pi(n - 1) == n - 1 ? 1 : 0);

        const int expect_v = (pi(0) == n - 1 || pi(n - 1) == n - 1) ? n - 2 : n - 3;
        const int expect_w = pi(0) == n - 1 ? 0 : (pi(n - 1) == n - 1 ? n - 2 : n - 3);
        const int expect_diff = pi(0) == n - 1 ? n - 2 : 0;
        if (v_entry != expect_v || w_entry != expect_w || v_entry - w_entry != expect_diff) {
            rep.fail("case_table", json{{"element", pi.cycle_string()},
                                        {"v", v_entry},
                                        {"w", w_entry},
                                        {"expected_v", expect_v},
                                        {"expected_w", expect_w}});
            break;
        }
    }
    rep.witnesses["case_table"] = rep.pass;

    // Full matrix A (all n^2 coset columns) and Abar; exact rank comparison.
    std::vector<int> rows(static_cast<std::size_t>(g.order()));
    for (int r = 0; r < g.order(); ++r) rows[static_cast<std::size_t>(r)] = r;
    IntMatrix a(g.order(), n * n);
    int col = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) fill_coset_column(g, rows, i, j, a, col++);
    const BlockSystem bs = build_block_system(group);
    const int rank_a = bareiss_rank(a);
    const int rank_abar = bareiss_rank(bs.abar);
    rep.witnesses["rank_A"] = rank_a;
    rep.witnesses["rank_Abar"] = rank_abar;
    const int expected_rank = (n - 1) * (n - 1) + 1;
    if (rank_a != expected_rank || rank_abar != expected_rank)
        rep.fail("rank", json{{"expected", expected_rank}});
    rep.ms = sw.ms();
    return rep;
}

/// Full rank of M, certified three ways: direct elimination, and the exact
/// Gram identities over the n-cycle rows (odd n) or the (n/2,n/2) rows
/// (even n) combined with the X eigenvalue bound.
inline CheckReport verify_M_fullrank(int n) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "rank-M";
    rep.n = n;
    rep.anchor = "sec6:rank-M";
    if (n < 5 || n > 7) throw std::invalid_argument("verify_M_fullrank: need 5 <= n <= 7");

    const auto group = make_group(n, GroupKind::Alt);
    const BlockSystem bs = build_block_system(group);
    const int target = (n - 1) * (n - 2);

    const int direct_rank = bareiss_rank(bs.m_block);
    rep.witnesses["rank_M"] = direct_rank;
    rep.witnesses["rows_M"] = bs.derangement_count;
    if (direct_rank != target) rep.fail("direct_rank", json{{"expected", target}});

    // Select the Gram rows: n-cycles for odd n, (n/2,n/2) for even n.
    const Partition want_type = n % 2 == 1 ? Partition{n} : Partition{n / 2, n / 2};
    std::vector<int> gram_rows;
    for (int r = 0; r < bs.derangement_count; ++r) {
        const Permutation& p = group->element(bs.row_order[static_cast<std::size_t>(1 + r)]);
        if (p.cycle_type() == want_type) gram_rows.push_back(r);
    }
    IntMatrix m1(static_cast<int>(gram_rows.size()), bs.m_block.cols());
    for (std::size_t r = 0; r < gram_rows.size(); ++r)
        for (int c = 0; c < bs.m_block.cols(); ++c)
            m1(static_cast<int>(r), c) = bs.m_block(gram_rows[r], c);
    const IntMatrix gram = m1.transpose() * m1;

    // Expected: diag tI + s A(X), with t = (n-2)! and s = (n-3)! for odd n,
    // t = 2(n-2)!/n and s = 2(n-3)!/n for even n.
    const Int t_coef = n % 2 == 1 ? factorial(n - 2) : Int(2) * factorial(n - 2) / n;
    const Int s_coef = n % 2 == 1 ? factorial(n - 3) : Int(2) * factorial(n - 3) / n;
    const PairGraph x(n);
    bool entry_ok = true;
    for (int p = 0; p < gram.rows() && entry_ok; ++p)
        for (int q = 0; q < gram.cols(); ++q) {
            const Int expect = p == q ? t_coef : (x.adjacency()(p, q) == 1 ? s_coef : Int(0));
            if (gram(p, q) != expect) {
                rep.fail("gram_entry",
                         json{{"row_pair", {bs.offdiag_cols[static_cast<std::size_t>(p)].first,
                                            bs.offdiag_cols[static_cast<std::size_t>(p)].second}},
                              {"col_pair", {bs.offdiag_cols[static_cast<std::size_t>(q)].first,
                                            bs.offdiag_cols[static_cast<std::size_t>(q)].second}},
                              {"case", PairGraph::case_name(bs.offdiag_cols[static_cast<std::size_t>(p)],
                                                            bs.offdiag_cols[static_cast<std::size_t>(q)])},
                              {"got", gram(p, q).str()},
                              {"expected", expect.str()}});
                entry_ok = false;
                break;
            }
        }
    rep.witnesses["gram_identity"] = entry_ok;
    rep.witnesses["gram_diag"] = t_coef.str();
    rep.witnesses["gram_offdiag"] = s_coef.str();

    // Least eigenvalue of the Gram matrix is at least t - s(n-3) > 0: the X
    // bound gives it, and an independent LDL^T certificate confirms it.
    const Int floor_val = t_coef - s_coef * (n - 3);
    rep.witnesses["gram_floor"] = floor_val.str();
    if (!(floor_val > 0)) rep.fail("gram_floor_positive", floor_val.str());
    RatMatrix shifted = gram.cast<Rat>();
    for (int i = 0; i < shifted.rows(); ++i) shifted(i, i) -= Rat(floor_val);
    const PsdCertificate cert = ldlt_psd_certificate(shifted);
    if (!cert.psd) rep.fail("gram_psd", cert.reason);
    // Nonsingular Gram => full column rank via the quadratic-form route.
    if (bareiss_det(gram) == 0) rep.fail("gram_singular", "T/U should be nonsingular");
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Reconstruction of maximum independent sets from the block system
// ---------------------------------------------------------------------------

struct ReconstructionResult {
    CheckReport report;
    int coset_i = 0, coset_j = 0;  // 1-based; S = { pi : pi(i) = j }
};

/// Mirrors the closing argument: solve Abar [v; w] = v_S exactly, then check
/// 1^T v = 1, w = 0 (M is full rank), exhibit the g_x rows that restrict B
/// to an identity block, conclude v is 0/1 with a single 1, and name the
/// coset. Requires identity in S.
inline ReconstructionResult reconstruct_from_blocks(GroupTablePtr group, const std::vector<int>& set) {
    ReconstructionResult out;
    CheckReport& rep = out.report;
    Stopwatch sw;
    const GroupTable& g = *group;
    const int n = g.n();
    rep.check = "reconstruct";
    rep.n = n;
    rep.anchor = "sec6:reconstruction";
    if (n > 6) throw resource_error("reconstruct_from_blocks: supported for n <= 6");

    const Int target = factorial(n - 1) / 2;
    if (Int(set.size()) != target) {
        rep.fail("size", json{{"got", set.size()}, {"expected", target.str()}});
        rep.ms = sw.ms();
        return out;
    }
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!is_intersecting(g.element(set[a]), g.element(set[b]))) {
                rep.fail("not_independent", json{{"pair", {g.element(set[a]).cycle_string(),
                                                           g.element(set[b]).cycle_string()}}});
                rep.ms = sw.ms();
                return out;
            }
    const int id = g.identity_index();
    if (std::find(set.begin(), set.end(), id) == set.end()) {
        rep.fail("identity_missing", "set must contain the identity");
        rep.ms = sw.ms();
        return out;
    }

    const BlockSystem bs = build_block_system(group);
    std::vector<Int> vs(static_cast<std::size_t>(g.order()), Int(0));
    {
        std::vector<char> inset(static_cast<std::size_t>(g.order()), 0);
        for (int e : set) inset[static_cast<std::size_t>(e)] = 1;
        for (std::size_t r = 0; r < bs.row_order.size(); ++r)
            vs[r] = inset[static_cast<std::size_t>(bs.row_order[r])] ? 1 : 0;
    }

    const auto solution = solve_full_column_rank(bs.abar, vs);
    if (!solution) {
        rep.fail("solve_inconsistent",
                 "v_S is not in the column space of Abar; S is not an independent set of the claimed kind");
        rep.ms = sw.ms();
        return out;
    }
    const auto& z = *solution;
    Rat ones = 0;
    for (int i = 0; i < n; ++i) ones += z[static_cast<std::size_t>(i)];
    if (ones != 1) rep.fail("ones_sum", ones.str());
    for (std::size_t c = static_cast<std::size_t>(n); c < z.size(); ++c)
        if (z[c] != 0) {
            rep.fail("w_nonzero", json{{"column", {bs.offdiag_cols[c - static_cast<std::size_t>(n)].first,
                                                   bs.offdiag_cols[c - static_cast<std::size_t>(n)].second}},
                                       {"value", z[c].str()}});
            break;
        }

    // g_x rows: for each x, a permutation whose only fixed point is x;
    // selecting those rows of B yields an identity block.
    json gx_list = json::array();
    for (int xpt = 1; xpt <= n; ++xpt) {
        int found = -1;
        for (int e = 0; e < g.order() && found < 0; ++e) {
            const Permutation& p = g.element(e);
            if (p.fixed_points() == 1 && p(xpt - 1) == xpt - 1) found = e;
        }
        if (found < 0) {
            rep.fail("gx_missing", json{{"x", xpt}});
            break;
        }
        gx_list.push_back(g.element(found).cycle_string());
    }
    rep.witnesses["g_x"] = gx_list;

    int hot = -1;
    for (int i = 0; i < n; ++i) {
        const Rat& vi = z[static_cast<std::size_t>(i)];
        if (vi == 0) continue;
        if (vi == 1 && hot < 0) { hot = i; continue; }
        rep.fail("not_characteristic", json{{"entry", i + 1}, {"value", vi.str()}});
        break;
    }
    if (hot < 0) rep.fail("no_unit_entry", "v has no entry equal to 1");
    if (rep.pass) {
        out.coset_i = hot + 1;
        out.coset_j = hot + 1;
        const auto expect = g.coset_indices(out.coset_i, out.coset_j);
        std::vector<int> sorted_set = set;
        std::sort(sorted_set.begin(), sorted_set.end());
        if (sorted_set != expect)
            rep.fail("coset_mismatch", json{{"claimed", {out.coset_i, out.coset_j}}});
        rep.witnesses["coset"] = {out.coset_i, out.coset_j};
    }
    rep.ms = sw.ms();
    return out;
}

/// Translates an arbitrary maximum independent set to contain the identity,
/// reconstructs, and maps the verdict back: S = sigma S_{x,x} = S_{x, sigma(x)}.
inline ReconstructionResult reconstruct_any(GroupTablePtr group, const std::vector<int>& set) {
    const GroupTable& g = *group;
    const int id = g.identity_index();
    if (std::find(set.begin(), set.end(), id) != set.end()) return reconstruct_from_blocks(group, set);
    if (set.empty()) throw std::invalid_argument("empty set");
    const Permutation sigma = g.element(set.front());
    const Permutation inv = sigma.inverse();
    std::vector<int> translated;
    for (int e : set) translated.push_back(g.index_of(inv * g.element(e)));
    std::sort(translated.begin(), translated.end());
    ReconstructionResult res = reconstruct_from_blocks(group, translated);
    if (res.report.pass) {
        res.report.witnesses["translated_by"] = sigma.cycle_string();
        res.coset_j = sigma(res.coset_i - 1) + 1;
        res.report.witnesses["coset"] = {res.coset_i, res.coset_j};
    }
    return res;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of maximum independent sets (branch and bound)
// ---------------------------------------------------------------------------

namespace detail {

class BitsetBnB {
  public:
    explicit BitsetBnB(const DerangementGraph& g)
        : N_(g.vertex_count()), words_((static_cast<std::size_t>(N_) + 63) / 64) {
        // Rows of the NON-adjacency (candidate compatibility) matrix:
        // vertices that can still join an independent set containing u.
        compat_.assign(static_cast<std::size_t>(N_) * words_, ~std::uint64_t{0});
        for (int u = 0; u < N_; ++u) {
            for (int v = 0; v < N_; ++v)
                if (v == u || g.adjacent(u, v)) clear_bit(&compat_[static_cast<std::size_t>(u) * words_], v);
        }
    }

    /// Size of the largest independent set.
    int maximum_size() {
        best_ = 0;
        enumerate_ = false;
        std::vector<std::uint64_t> all(words_, ~std::uint64_t{0});
        trim(all);
        std::vector<int> stack;
        recurse(all, stack);
        return best_;
    }

    /// All independent sets of exactly the given size (which must be the
    /// maximum; asserted during the search).
    std::vector<std::vector<int>> all_of_size(int size) {
        best_ = size;
        enumerate_ = true;
        found_.clear();
        std::vector<std::uint64_t> all(words_, ~std::uint64_t{0});
        trim(all);
        std::vector<int> stack;
        recurse(all, stack);
        return found_;
    }

  private:
    void clear_bit(std::uint64_t* row, int v) const {
        row[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
    }
    void trim(std::vector<std::uint64_t>& mask) const {
        const int extra = static_cast<int>(words_ * 64) - N_;
        if (extra > 0) mask[words_ - 1] &= (~std::uint64_t{0}) >> extra;
    }
    static int popcount(const std::vector<std::uint64_t>& m) {
        int c = 0;
        for (auto w : m) c += __builtin_popcountll(w);
        return c;
    }

    void recurse(std::vector<std::uint64_t> cand, std::vector<int>& chosen) {
        const int have = static_cast<int>(chosen.size());
        int avail = popcount(cand);
        if (!enumerate_) {
            if (have > best_) best_ = have;
        } else if (have == best_) {
            if (avail != 0) throw std::logic_error("independent set extends past the proven maximum");
            found_.push_back(chosen);
            return;
        }
        while (avail > 0) {
            if (have + avail < best_ || (!enumerate_ && have + avail <= best_)) return;
            // lowest remaining candidate
            int v = -1;
            for (std::size_t w = 0; w < words_; ++w)
                if (cand[w]) { v = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(cand[w]))); break; }
            if (v < 0) return;
            std::vector<std::uint64_t> next(words_);
            for (std::size_t w = 0; w < words_; ++w)
                next[w] = cand[w] & compat_[static_cast<std::size_t>(v) * words_ + w];
            chosen.push_back(v);
            recurse(std::move(next), chosen);
            chosen.pop_back();
            clear_bit(cand.data(), v);
            --avail;
        }
    }

    int N_;
    std::size_t words_;
    std::vector<std::uint64_t> compat_;
    int best_ = 0;
    bool enumerate_ = false;
    std::vector<std::vector<int>> found_;
};

}  // namespace detail

struct EnumerationResult {
    CheckReport report;
    int maximum = 0;
    std::vector<std::vector<int>> sets;
};

/// Exhaustive branch-and-bound over the derangement graph: finds the exact
/// independence number, enumerates every maximum set, and checks the result
/// is exactly the coset family {S_{i,j}}.
inline EnumerationResult enumerate_max_independent_sets(GroupTablePtr group) {
    EnumerationResult out;
    CheckReport& rep = out.report;
    Stopwatch sw;
    const GroupTable& g = *group;
    const int n = g.n();
    rep.check = "enumerate-max-independent";
    rep.n = n;
    rep.anchor = "sec1:strict-ekr";

    const DerangementGraph graph = build_derangement_graph(group);
    detail::BitsetBnB bnb(graph);
    out.maximum = bnb.maximum_size();
    rep.witnesses["independence_number"] = out.maximum;
    const Int expect_alpha =
        g.kind() == GroupKind::Alt ? factorial(n - 1) / 2 : factorial(n - 1);
    if (Int(out.maximum) != expect_alpha)
        rep.fail("alpha", json{{"got", out.maximum}, {"expected", expect_alpha.str()}});

    out.sets = bnb.all_of_size(out.maximum);
    rep.witnesses["maximum_set_count"] = out.sets.size();

    // Every maximum set must be one of the n^2 cosets S_{i,j}, and all of
    // them must appear.
    std::map<std::vector<int>, std::pair<int, int>> cosets;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) cosets.emplace(g.coset_indices(i, j), std::make_pair(i, j));
    if (out.sets.size() != cosets.size())
        rep.fail("count", json{{"got", out.sets.size()}, {"expected", cosets.size()}});
    for (auto s : out.sets) {
        std::sort(s.begin(), s.end());
        if (cosets.find(s) == cosets.end()) {
            rep.fail("not_a_coset", json{{"size", s.size()}});
            break;
        }
    }

    // Independence re-verified pairwise from the intersection predicate.
    for (const auto& s : out.sets)
        for (std::size_t a = 0; a < s.size() && rep.pass; ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (!is_intersecting(g.element(s[a]), g.element(s[b]))) {
                    rep.fail("reverify_independence", json{{"set_size", s.size()}});
                    break;
                }
    rep.ms = sw.ms();
    return out;
}

// ---------------------------------------------------------------------------
// Transfer to the symmetric group
// ---------------------------------------------------------------------------

/// The 2-transitive counting identity |G_beta meet H_alpha pi^-1| =
/// |H|/(n(n-1)) with H = Alt(n) inside G = Sym(n), the strict union bound
/// (n-2)|H|/(n(n-1)) < |H|/n, and the brute-force strict-EKR confirmation
/// for Sym(5).
inline CheckReport transfer_strict_ekr_check(int n, bool exhaustive_pi = true) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "transfer";
    rep.n = n;
    rep.anchor = "sec7:transfer";
    if (n < 5 || n > 7) throw std::invalid_argument("transfer_strict_ekr_check: need 5 <= n <= 7");

    const auto alt = make_group(n, GroupKind::Alt);
    const auto sym = make_group(n, GroupKind::Sym);
    const Int expect = (factorial(n) / 2) / (Int(n) * Int(n - 1));
    rep.witnesses["expected_intersection"] = expect.str();

    const int alpha = 1;
    int tested = 0;
    const int stride = exhaustive_pi || n <= 6 ? 1 : 17;  // sample for n = 7
    for (int pe = 0; pe < alt->order() && rep.pass; pe += stride) {
        const Permutation& pi = alt->element(pe);
        if (pi(alpha - 1) == alpha - 1) continue;
        ++tested;
        const Permutation pinv = pi.inverse();
        for (int beta = 1; beta <= n; ++beta) {
            if (beta == alpha || beta == pi(alpha - 1) + 1) continue;
            Int count = 0;
            for (int ge = 0; ge < sym->order(); ++ge) {
                const Permutation& gp = sym->element(ge);
                if (gp(beta - 1) != beta - 1) continue;
                const Permutation h = gp * pi;
                if (h.is_even() && h(alpha - 1) == alpha - 1) count += 1;
            }
            if (count != expect) {
                rep.fail("counting_identity", json{{"pi", pi.cycle_string()},
                                                   {"beta", beta},
                                                   {"count", count.str()},
                                                   {"expected", expect.str()}});
                break;
            }
        }
    }
    rep.witnesses["pi_tested"] = tested;

    const Rat union_bound = Rat(n - 2) * Rat(factorial(n) / 2) / (Rat(n) * Rat(n - 1));
    const Rat stabilizer = Rat(factorial(n) / 2) / Rat(n);
    rep.witnesses["union_bound"] = union_bound.str();
    rep.witnesses["stabilizer_size"] = stabilizer.str();
    if (!(union_bound < stabilizer)) rep.fail("union_bound", "strict inequality failed");

    if (n == 5) {
        const EnumerationResult sym_enum = enumerate_max_independent_sets(sym);
        rep.witnesses["sym5_maximum"] = sym_enum.maximum;
        rep.witnesses["sym5_families"] = sym_enum.sets.size();
        if (!sym_enum.report.pass) rep.fail("sym5_strict_ekr", sym_enum.report.witnesses);
    }
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Standard-module membership of maximum independent sets
// ---------------------------------------------------------------------------

/// E_chi (v_S - (1/n) 1) = 0 for every character besides the trivial and the
/// standard one, plus an exact expansion of v_S - (1/n) 1 in the coset basis.
inline CheckReport verify_standard_module_membership(GroupTablePtr group, const std::vector<int>& set) {
    Stopwatch sw;
    CheckReport rep;
    const GroupTable& g = *group;
    const int n = g.n();
    rep.check = "standard-module-membership";
    rep.n = n;
    rep.anchor = "sec5:module-membership";
    if (n > 6) throw resource_error("verify_standard_module_membership: supported for n <= 6");

    const Int target = factorial(n - 1) / 2;
    if (Int(set.size()) != target) {
        rep.fail("size", json{{"got", set.size()}, {"expected", target.str()}});
        rep.ms = sw.ms();
        return rep;
    }
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!is_intersecting(g.element(set[a]), g.element(set[b]))) {
                rep.fail("not_independent", json{{"pair", {g.element(set[a]).cycle_string(),
                                                           g.element(set[b]).cycle_string()}}});
                rep.ms = sw.ms();
                return rep;
            }

    std::vector<Rat> centered(static_cast<std::size_t>(g.order()), Rat(-1, n));
    for (int e : set) centered[static_cast<std::size_t>(e)] += 1;

    const CharacterTable table = alt_character_table(n);
    const AltCharLabel trivial = AltCharLabel::restricted(Partition{n});
    const AltCharLabel standard = AltCharLabel::restricted(Partition{n - 1, 1});
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r] == trivial || table.rows[r] == standard) continue;
        const auto proj = idempotent_project(g, table, r, centered);
        for (const auto& entry : proj)
            if (!entry.is_zero()) {
                rep.fail("projection_nonzero", json{{"character", table.rows[r].str()}});
                break;
            }
        if (!rep.pass) break;
    }

    // Exact expansion in the basis {v_{i,j} - 1/n : i,j in [n-1]}.
    const IntMatrix h = standard_basis_matrix(g);
    RatMatrix basis = h.cast<Rat>();
    for (int r = 0; r < basis.rows(); ++r)
        for (int c = 0; c < basis.cols(); ++c) basis(r, c) -= Rat(1, n);
    const auto coords = solve_full_column_rank(basis, centered);
    if (!coords) rep.fail("basis_expansion", "centered vector not in the span of the basis");
    else {
        json nonzero = json::array();
        const int m = n - 1;
        for (std::size_t c = 0; c < coords->size(); ++c)
            if ((*coords)[c] != 0)
                nonzero.push_back({{"pair", {static_cast<int>(c) / m + 1, static_cast<int>(c) % m + 1}},
                                   {"coef", (*coords)[c].str()}});
        rep.witnesses["basis_coordinates"] = nonzero;
    }
    rep.ms = sw.ms();
    return rep;
}

}  // namespace ekr
