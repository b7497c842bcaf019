#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "ekr/characters.hpp"
#include "ekr/matrix.hpp"
#include "ekr/parallel.hpp"
#include "ekr/permgroup.hpp"
#include "ekr/polynomial.hpp"
#include "ekr/report.hpp"

namespace ekr {

/// Cayley graph of Alt(n) on the derangements: pi ~ sigma iff pi sigma^-1 is
/// fixed-point-free, i.e. exactly when pi and sigma do NOT intersect.
/// Vertices follow the group table's lexicographic element order.
class DerangementGraph {
  public:
    DerangementGraph(GroupTablePtr group, std::vector<std::uint64_t> bits, int valency)
        : group_(std::move(group)),
          words_((static_cast<std::size_t>(group_->order()) + 63) / 64),
          bits_(std::move(bits)),
          valency_(valency) {}

    const GroupTable& group() const { return *group_; }
    GroupTablePtr group_ptr() const { return group_; }
    int n() const { return group_->n(); }
    int vertex_count() const { return group_->order(); }
    int valency() const { return valency_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (static_cast<std::size_t>(v) % 64)) & 1u;
    }

    int degree(int u) const {
        int d = 0;
        for (std::size_t w = 0; w < words_; ++w)
            d += __builtin_popcountll(bits_[static_cast<std::size_t>(u) * words_ + w]);
        return d;
    }

    std::vector<int> neighbors(int u) const {
        std::vector<int> out;
        for (int v = 0; v < vertex_count(); ++v)
            if (adjacent(u, v)) out.push_back(v);
        return out;
    }

    /// Test hook: flips one (symmetric) adjacency bit so verification
    /// routines can demonstrate failure reporting on a corrupted graph.
    void flip_edge(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] ^=
            (std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
        bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] ^=
            (std::uint64_t{1} << (static_cast<std::size_t>(u) % 64));
    }

    const std::vector<std::uint64_t>& raw_bits() const { return bits_; }
    std::size_t words_per_row() const { return words_; }

  private:
    GroupTablePtr group_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
    int valency_;
};

inline DerangementGraph build_derangement_graph(GroupTablePtr group) {
    const int N = group->order();
    if (group->n() < 4 || group->n() > 8)
        throw resource_error("build_derangement_graph: supported for 4 <= n <= 8");
    const auto der = group->derangement_indices();
    const std::size_t words = (static_cast<std::size_t>(N) + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(N) * words, 0);
    // Row u holds the bit of every d*g_u, d running over the derangements;
    // the connection set is inverse-closed so the matrix comes out symmetric.
    parallel_for(N, [&](int u) {
        const Permutation& gu = group->element(u);
        for (int di : der) {
            const int v = group->index_of(group->element(di) * gu);
            bits[static_cast<std::size_t>(u) * words + static_cast<std::size_t>(v) / 64] |=
                (std::uint64_t{1} << (static_cast<std::size_t>(v) % 64));
        }
    });
    return DerangementGraph(std::move(group), std::move(bits), static_cast<int>(der.size()));
}

inline DerangementGraph build_derangement_graph(int n, GroupKind kind = GroupKind::Alt) {
    return build_derangement_graph(make_group(n, kind));
}

// ---------------------------------------------------------------------------
// Graph file exports
// ---------------------------------------------------------------------------

inline void write_dot(std::ostream& os, const DerangementGraph& g) {
    os << "graph derangement_alt_" << g.n() << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << g.group().element(v).cycle_string() << "\"];\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v)) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
}

/// Compact bitset format: 16-byte header {magic "EKRG", version u16, n u16,
/// vertex count u64}, then vertex-count rows of ceil(N/64) little-endian
/// 64-bit words.
inline void write_graph_binary(std::ostream& os, const DerangementGraph& g) {
    os.write("EKRG", 4);
    const std::uint16_t version = 1;
    const std::uint16_t n16 = static_cast<std::uint16_t>(g.n());
    const std::uint64_t count = static_cast<std::uint64_t>(g.vertex_count());
    os.write(reinterpret_cast<const char*>(&version), 2);
    os.write(reinterpret_cast<const char*>(&n16), 2);
    os.write(reinterpret_cast<const char*>(&count), 8);
    os.write(reinterpret_cast<const char*>(g.raw_bits().data()),
             static_cast<std::streamsize>(g.raw_bits().size() * 8));
}

struct GraphBinaryHeader {
    std::uint16_t version = 0;
    std::uint16_t n = 0;
    std::uint64_t vertex_count = 0;
};

inline GraphBinaryHeader read_graph_binary_header(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "EKRG", 4) != 0)
        throw std::invalid_argument("not an EKRG graph file");
    GraphBinaryHeader h;
    is.read(reinterpret_cast<char*>(&h.version), 2);
    is.read(reinterpret_cast<char*>(&h.n), 2);
    is.read(reinterpret_cast<char*>(&h.vertex_count), 8);
    if (!is) throw std::invalid_argument("truncated EKRG header");
    return h;
}

// ---------------------------------------------------------------------------
// Spectrum via characters, certified against the adjacency matrix
// ---------------------------------------------------------------------------

struct SpectrumLine {
    Rat eigenvalue;
    Int multiplicity;
};

struct Spectrum {
    int n = 0;
    std::vector<SpectrumLine> lines;                      // distinct eigenvalues, ascending
    std::vector<std::pair<AltCharLabel, Rat>> by_char;    // eigenvalue of each character
    Rat least() const { return lines.front().eigenvalue; }
    Rat valency() const { return lines.back().eigenvalue; }
};

/// Eigenvalue attached to chi: (1/chi(1)) * sum over derangement classes of
/// |c| chi(c), with multiplicity chi(1)^2. The class sums are Galois-stable
/// (derangements are closed under Sym(n)-conjugation), so every eigenvalue
/// must come out rational; this is asserted, not assumed.
inline Spectrum graph_spectrum(int n) {
    if (n < 4 || n > 9) throw std::invalid_argument("graph_spectrum: need 4 <= n <= 9");
    const CharacterTable t = alt_character_table(n);
    Spectrum sp;
    sp.n = n;
    std::map<Rat, Int> merged;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        RadicalSum acc;
        for (std::size_t c = 0; c < t.cols.size(); ++c) {
            if (t.cols[c].cycle_type.fixed_points() != 0) continue;
            acc.add(t.at(r, c) * QuadraticNumber(Rat(t.cols[c].size)));
        }
        if (!acc.is_rational())
            throw std::logic_error("graph_spectrum: irrational class sum over derangements");
        const Int dim = alt_character_dimension(t.rows[r]);
        const Rat ev = acc.rational_part() / Rat(dim);
        sp.by_char.emplace_back(t.rows[r], ev);
        merged[ev] += dim * dim;
    }
    for (const auto& [ev, mult] : merged) sp.lines.push_back({ev, mult});
    return sp;
}

namespace detail {

/// B := A * B for the 0/1 adjacency of g, using row accumulation
/// (A symmetric: row i of A*B is the sum of B's rows over i's neighbors).
inline IntMatrix adjacency_times(const DerangementGraph& g, const IntMatrix& b) {
    const int N = g.vertex_count();
    IntMatrix r(N, b.cols());
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(N));
    for (int u = 0; u < N; ++u) nbr[static_cast<std::size_t>(u)] = g.neighbors(u);
    parallel_for(N, [&](int i) {
        for (int v : nbr[static_cast<std::size_t>(i)])
            for (int j = 0; j < b.cols(); ++j) r(i, j) += b(v, j);
    });
    return r;
}

}  // namespace detail

/// Certifies that the character-derived spectrum is exactly the spectrum of
/// the explicit adjacency matrix:
///  (1) the product of (den*A - num*I) over the distinct eigenvalues
///      annihilates A, so A is diagonalizable with eigenvalues among them;
///  (2) the traces of A^j (j < #distinct) pin the multiplicities through a
///      Vandermonde system, which must reproduce the character counts.
/// Together these determine the characteristic polynomial as
/// prod (x - ev)^mult.
inline CheckReport certify_spectrum(const DerangementGraph& g, const Spectrum& sp) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "spectrum-certification";
    rep.n = g.n();
    rep.anchor = "sec2:idempotents";
    const int N = g.vertex_count();
    const int d = static_cast<int>(sp.lines.size());

    IntMatrix prod = IntMatrix::identity(N);
    for (const auto& line : sp.lines) {
        const Int num = boost::multiprecision::numerator(line.eigenvalue);
        const Int den = boost::multiprecision::denominator(line.eigenvalue);
        IntMatrix shifted = detail::adjacency_times(g, prod);
        if (den != 1) shifted.scale(den);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) shifted(i, j) -= num * prod(i, j);
        prod = std::move(shifted);
    }
    if (!prod.is_zero()) {
        rep.fail("annihilation", "product over (A - ev I) is nonzero");
        rep.ms = sw.ms();
        return rep;
    }

    // Traces of A^j, j = 0..d-1.
    std::vector<Rat> traces;
    IntMatrix power = IntMatrix::identity(N);
    for (int j = 0; j < d; ++j) {
        if (j > 0) power = detail::adjacency_times(g, power);
        Int tr = 0;
        for (int i = 0; i < N; ++i) tr += power(i, i);
        traces.push_back(Rat(tr));
    }
    RatMatrix vand(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            Rat p = 1;
            for (int k = 0; k < j; ++k) p *= sp.lines[static_cast<std::size_t>(i)].eigenvalue;
            vand(j, i) = p;
        }
    const auto mults = solve_square(vand, traces);
    if (!mults) {
        rep.fail("vandermonde", "degenerate eigenvalue list");
        rep.ms = sw.ms();
        return rep;
    }
    for (int i = 0; i < d; ++i) {
        if ((*mults)[static_cast<std::size_t>(i)] != Rat(sp.lines[static_cast<std::size_t>(i)].multiplicity)) {
            rep.fail("multiplicity",
                     json{{"eigenvalue", sp.lines[static_cast<std::size_t>(i)].eigenvalue.str()},
                          {"character_mult", sp.lines[static_cast<std::size_t>(i)].multiplicity.str()},
                          {"adjacency_mult", (*mults)[static_cast<std::size_t>(i)].str()}});
        }
    }
    json lines = json::array();
    for (const auto& l : sp.lines)
        lines.push_back({{"eigenvalue", l.eigenvalue.str()}, {"multiplicity", l.multiplicity.str()}});
    rep.witnesses["spectrum"] = lines;
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Idempotent projections (E_chi is never materialized)
// ---------------------------------------------------------------------------

/// E_chi v, computed row by row: (E_chi v)_pi = (chi(1)/|G|) * sum over
/// classes of chi(c) * (sum of v_sigma with pi^-1 sigma in c).
inline std::vector<QuadraticNumber> idempotent_project(const GroupTable& group,
                                                       const CharacterTable& table,
                                                       std::size_t row,
                                                       const std::vector<Rat>& v) {
    const int N = group.order();
    if (group.n() > 7) throw resource_error("idempotent_project: supported for n <= 7");
    if (static_cast<int>(v.size()) != N) throw std::invalid_argument("vector length mismatch");
    const Int dim = alt_character_dimension(table.rows[row]);
    const Rat scale = Rat(dim) / Rat(factorial(group.n()) / 2);
    std::vector<QuadraticNumber> out(static_cast<std::size_t>(N));
    parallel_for(N, [&](int pi) {
        const Permutation inv = group.element(pi).inverse();
        std::vector<Rat> bucket(table.cols.size(), Rat(0));
        for (int sigma = 0; sigma < N; ++sigma) {
            if (v[static_cast<std::size_t>(sigma)] == 0) continue;
            const int q = group.index_of(inv * group.element(sigma));
            bucket[static_cast<std::size_t>(group.class_index(q))] += v[static_cast<std::size_t>(sigma)];
        }
        QuadraticNumber acc;
        for (std::size_t c = 0; c < table.cols.size(); ++c)
            if (bucket[c] != 0) acc += table.at(row, c) * QuadraticNumber(bucket[c]);
        out[static_cast<std::size_t>(pi)] = acc * QuadraticNumber(scale);
    });
    return out;
}

/// v^T E_chi v for the 0/1 characteristic vector of `set`, via class-bucketed
/// quotient counts: (chi(1)/|G|) * sum over ordered pairs chi(x^-1 y).
/// Symmetric and PSD, so the value is zero exactly when E_chi v = 0.
class QuotientProfile {
  public:
    QuotientProfile(const GroupTable& group, const std::vector<int>& set) : group_(group) {
        counts_.assign(group.classes().size(), Int(0));
        const int m = static_cast<int>(set.size());
        std::vector<Int> partial;
        std::mutex mx;
        parallel_for(m, [&](int a) {
            std::vector<Int> local(counts_.size(), Int(0));
            const Permutation inv = group.element(set[static_cast<std::size_t>(a)]).inverse();
            for (int b = 0; b < m; ++b) {
                const int q = group.index_of(inv * group.element(set[static_cast<std::size_t>(b)]));
                local[static_cast<std::size_t>(group.class_index(q))] += 1;
            }
            std::lock_guard<std::mutex> lock(mx);
            for (std::size_t c = 0; c < counts_.size(); ++c) counts_[c] += local[c];
        });
    }

    QuadraticNumber quadratic_form(const CharacterTable& table, std::size_t row) const {
        QuadraticNumber acc;
        for (std::size_t c = 0; c < counts_.size(); ++c)
            if (counts_[c] != 0)
                acc += table.at(row, c) * QuadraticNumber(Rat(counts_[c]));
        const Int dim = alt_character_dimension(table.rows[row]);
        return acc * QuadraticNumber(Rat(dim) / Rat(factorial(group_.n()) / 2));
    }

  private:
    const GroupTable& group_;
    std::vector<Int> counts_;
};

// ---------------------------------------------------------------------------
// Clique-coclique machinery
// ---------------------------------------------------------------------------

/// Verifies C is a clique and S an independent set of the derangement graph
/// (directly from the intersection predicate, no adjacency matrix needed),
/// checks |C||S| <= |G|, and on equality checks the idempotent orthogonality:
/// for every non-trivial character, (v_C^T E v_C)(v_S^T E v_S) = 0, i.e. at
/// most one of the projections is nonzero.
inline CheckReport clique_coclique_check(const GroupTable& group, const std::vector<int>& clique,
                                         const std::vector<int>& indep) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "clique-coclique";
    rep.n = group.n();
    rep.anchor = "sec2:clique-coclique";

    for (std::size_t a = 0; a < clique.size() && rep.pass; ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
            if (is_intersecting(group.element(clique[a]), group.element(clique[b]))) {
                rep.fail("not_a_clique", json{{"pair", {group.element(clique[a]).cycle_string(),
                                                        group.element(clique[b]).cycle_string()}}});
                break;
            }
    if (!rep.pass) { rep.ms = sw.ms(); return rep; }

    {
        std::vector<char> bad(indep.size(), 0);
        parallel_for(static_cast<int>(indep.size()), [&](int a) {
            for (std::size_t b = static_cast<std::size_t>(a) + 1; b < indep.size(); ++b)
                if (!is_intersecting(group.element(indep[static_cast<std::size_t>(a)]),
                                     group.element(indep[b]))) {
                    bad[static_cast<std::size_t>(a)] = 1;
                    return;
                }
        });
        for (std::size_t a = 0; a < indep.size(); ++a)
            if (bad[a]) {
                rep.fail("not_independent", json{{"member", group.element(indep[a]).cycle_string()}});
                rep.ms = sw.ms();
                return rep;
            }
    }

    const Int order = Int(group.order());
    const Int product = Int(clique.size()) * Int(indep.size());
    rep.witnesses["clique_size"] = clique.size();
    rep.witnesses["independent_size"] = indep.size();
    rep.witnesses["group_order"] = group.order();
    if (product > order) {
        rep.fail("bound_violated", json{{"product", product.str()}});
        rep.ms = sw.ms();
        return rep;
    }
    const bool equality = product == order;
    rep.witnesses["equality"] = equality;
    if (!equality) { rep.ms = sw.ms(); return rep; }

    const CharacterTable table = alt_character_table(group.n());
    const QuotientProfile qc(group, clique);
    const QuotientProfile qs(group, indep);
    json per_char = json::array();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (table.rows[r].kind == AltCharKind::Restricted && table.rows[r].lambda.rows() == 1)
            continue;  // trivial character
        const QuadraticNumber a = qc.quadratic_form(table, r);
        const QuadraticNumber b = qs.quadratic_form(table, r);
        const bool both = !a.is_zero() && !b.is_zero();
        per_char.push_back({{"character", table.rows[r].str()},
                            {"clique_form", a.str()},
                            {"indep_form", b.str()},
                            {"orthogonal", !both}});
        if (!(a * b).is_zero() || both)
            rep.fail("idempotent_overlap", json{{"character", table.rows[r].str()}});
    }
    rep.witnesses["characters"] = per_char;
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Clique-cover eigenvalue bound (for explicit small graphs)
// ---------------------------------------------------------------------------

struct CliqueCoverBound {
    bool valid = false;
    Rat bound;           // -k/(w-1)
    Int edge_count_y;    // cliques through each edge
    Rat vertex_count;    // cliques through each vertex, y*k/(w-1)
    CheckReport report;
};

/// Checks the hypotheses exactly (k-regular, constant clique size, every
/// edge in the same number y of cover cliques, every vertex in y*k/(w-1)),
/// then certifies A + (k/(w-1)) I positive semidefinite by rational LDL^T.
inline CliqueCoverBound clique_cover_eigen_bound(const IntMatrix& adj,
                                                 const std::vector<std::vector<int>>& cover) {
    CliqueCoverBound out;
    CheckReport& rep = out.report;
    Stopwatch sw;
    rep.check = "clique-cover-bound";
    rep.anchor = "sec2:edge-uniform-cover";
    const int N = adj.rows();

    int k = -1;
    for (int i = 0; i < N; ++i) {
        int deg = 0;
        for (int j = 0; j < N; ++j) {
            if (adj(i, j) != 0 && adj(i, j) != 1) { rep.fail("not_01", json{{"row", i}, {"col", j}}); }
            if (adj(i, j) == 1) ++deg;
        }
        if (k < 0) k = deg;
        else if (deg != k) rep.fail("not_regular", json{{"vertex", i}, {"degree", deg}, {"expected", k}});
    }
    if (!rep.pass) { rep.ms = sw.ms(); return out; }

    const int w = cover.empty() ? 0 : static_cast<int>(cover.front().size());
    if (w < 2) { rep.fail("cover_degenerate", "need cliques of size >= 2"); rep.ms = sw.ms(); return out; }
    std::vector<long long> edge_count(static_cast<std::size_t>(N) * N, 0);
    std::vector<long long> vertex_count(static_cast<std::size_t>(N), 0);
    for (const auto& cl : cover) {
        if (static_cast<int>(cl.size()) != w) {
            rep.fail("uneven_clique_size", json{{"got", cl.size()}, {"expected", w}});
            rep.ms = sw.ms();
            return out;
        }
        for (std::size_t a = 0; a < cl.size(); ++a) {
            vertex_count[static_cast<std::size_t>(cl[a])]++;
            for (std::size_t b = a + 1; b < cl.size(); ++b) {
                if (adj(cl[a], cl[b]) != 1) {
                    rep.fail("cover_member_not_clique", json{{"u", cl[a]}, {"v", cl[b]}});
                    rep.ms = sw.ms();
                    return out;
                }
                edge_count[static_cast<std::size_t>(cl[a]) * N + cl[b]]++;
                edge_count[static_cast<std::size_t>(cl[b]) * N + cl[a]]++;
            }
        }
    }
    long long y = -1;
    for (int i = 0; i < N && rep.pass; ++i)
        for (int j = 0; j < N; ++j) {
            if (adj(i, j) != 1) continue;
            const long long c = edge_count[static_cast<std::size_t>(i) * N + j];
            if (y < 0) y = c;
            else if (c != y) {
                rep.fail("edge_not_uniform", json{{"edge", {i, j}}, {"count", c}, {"expected", y}});
                rep.ms = sw.ms();
                return out;
            }
        }
    const Rat per_vertex = Rat(y) * Rat(k) / Rat(w - 1);
    for (int i = 0; i < N; ++i)
        if (Rat(vertex_count[static_cast<std::size_t>(i)]) != per_vertex) {
            rep.fail("vertex_not_uniform",
                     json{{"vertex", i}, {"count", vertex_count[static_cast<std::size_t>(i)]},
                          {"expected", per_vertex.str()}});
            rep.ms = sw.ms();
            return out;
        }

    const Rat shift = Rat(k) / Rat(w - 1);
    RatMatrix m = adj.cast<Rat>();
    for (int i = 0; i < N; ++i) m(i, i) += shift;
    const PsdCertificate cert = ldlt_psd_certificate(std::move(m));
    if (!cert.psd) {
        rep.fail("psd_certificate", json{{"reason", cert.reason},
                                         {"row", cert.witness_row},
                                         {"col", cert.witness_col}});
        rep.ms = sw.ms();
        return out;
    }
    out.valid = true;
    out.bound = -shift;
    out.edge_count_y = Int(y);
    out.vertex_count = per_vertex;
    rep.witnesses["bound"] = out.bound.str();
    rep.witnesses["edge_multiplicity"] = y;
    rep.witnesses["cover_size"] = cover.size();
    rep.witnesses["ldlt_pivots"] = cert.pivots.size();
    rep.ms = sw.ms();
    return out;
}

}  // namespace ekr
