#pragma once

#include <algorithm>
#include <bitset>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekr/characters.hpp"
#include "ekr/permgroup.hpp"
#include "ekr/report.hpp"

namespace ekr {

enum class CliqueKind { OddCycles, EvenPairs };
enum class Provenance { Constructed, Searched, Cached };

inline const char* to_string(CliqueKind k) { return k == CliqueKind::OddCycles ? "OddCycles" : "EvenPairs"; }
inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Constructed: return "constructed";
        case Provenance::Searched: return "searched";
        default: return "cached";
    }
}

/// A size-n clique of the derangement graph: the identity plus n-1 pairwise
/// non-intersecting permutations whose arc sets partition the arcs of the
/// complete digraph on n points. Odd n: directed Hamiltonian cycles; even n:
/// pairs of disjoint n/2-cycles.
///
/// n = 6 is special: the complete digraph on six points has no decomposition
/// into directed 3-cycles at all (the classical Mendelsohn exception), so no
/// clique with all members of type (3,3) exists. The witness there mixes
/// types (3,3) and (4,2) and is required to contain at least one (3,3)
/// element, which is what keeps every non-standard character sum nonzero.
struct CliqueWitness {
    int n = 0;
    CliqueKind kind = CliqueKind::OddCycles;
    Provenance provenance = Provenance::Constructed;
    std::vector<Permutation> members;  // identity first, rest sorted by image array

    void canonicalize() {
        const Permutation id = Permutation::identity(n);
        std::vector<Permutation> rest;
        for (const auto& p : members)
            if (!(p == id)) rest.push_back(p);
        std::sort(rest.begin(), rest.end());
        members.clear();
        members.push_back(id);
        members.insert(members.end(), rest.begin(), rest.end());
    }
};

/// Full revalidation from scratch; every witness passes through here no
/// matter where it came from.
inline CheckReport validate_clique_witness(const CliqueWitness& w) {
    CheckReport rep;
    Stopwatch sw;
    rep.check = "clique-witness";
    rep.n = w.n;
    rep.anchor = w.kind == CliqueKind::OddCycles ? "sec5.1:odd-clique" : "sec5.2:even-clique";

    if (static_cast<int>(w.members.size()) != w.n)
        rep.fail("size", json{{"got", w.members.size()}, {"expected", w.n}});
    if (w.members.empty() || !(w.members.front() == Permutation::identity(w.n)))
        rep.fail("identity", "first member must be the identity");

    // Membership in Alt(n) and the stated cycle types.
    int half_pair_count = 0;
    for (std::size_t i = 1; i < w.members.size(); ++i) {
        const auto& p = w.members[i];
        if (p.degree() != w.n || !p.is_even()) {
            rep.fail("not_in_group", json{{"member", p.cycle_string()}});
            continue;
        }
        const Partition type = p.cycle_type();
        if (type == Partition{w.n / 2, w.n / 2}) ++half_pair_count;
        bool ok;
        if (w.kind == CliqueKind::OddCycles) ok = type == Partition{w.n};
        else if (w.n == 6) ok = type == Partition{3, 3} || type == Partition{4, 2};
        else ok = type == Partition{w.n / 2, w.n / 2};
        if (!ok) rep.fail("cycle_type", json{{"member", p.cycle_string()}, {"type", type.str()}});
    }
    if (w.kind == CliqueKind::EvenPairs && w.n == 6 && half_pair_count == 0)
        rep.fail("missing_half_pair", "n = 6 witness needs at least one (3,3) member");

    // Pairwise non-intersecting = clique in the derangement graph.
    for (std::size_t a = 0; a < w.members.size() && rep.pass; ++a)
        for (std::size_t b = a + 1; b < w.members.size(); ++b)
            if (is_intersecting(w.members[a], w.members[b])) {
                rep.fail("intersecting_pair",
                         json{{"pair", {w.members[a].cycle_string(), w.members[b].cycle_string()}}});
                break;
            }

    // The n-1 non-identity members must hit every arc i->j (i != j) once.
    if (rep.pass) {
        std::vector<int> count(static_cast<std::size_t>(w.n) * w.n, 0);
        for (std::size_t i = 1; i < w.members.size(); ++i)
            for (int x = 0; x < w.n; ++x)
                count[static_cast<std::size_t>(x) * w.n + w.members[i](x)]++;
        for (int x = 0; x < w.n && rep.pass; ++x)
            for (int y = 0; y < w.n; ++y) {
                const int expect = x == y ? 0 : 1;
                if (count[static_cast<std::size_t>(x) * w.n + y] != expect) {
                    rep.fail("arc_partition", json{{"arc", {x + 1, y + 1}},
                                                   {"count", count[static_cast<std::size_t>(x) * w.n + y]}});
                    break;
                }
            }
    }
    rep.ms = sw.ms();
    return rep;
}

namespace detail {

/// Rotational (zigzag) Hamiltonian decomposition of the complete graph on an
/// odd number of points: vertices Z_{n-1} plus an apex, cycles
/// apex, k, k+1, k-1, k+2, k-2, ... for k = 0..(n-3)/2; both orientations of
/// each cycle give the n-1 arc-disjoint directed Hamiltonian cycles.
inline std::vector<Permutation> odd_rotational_members(int n) {
    const int m2 = n - 1;  // even number of non-apex points
    std::vector<Permutation> members;
    for (int k = 0; k < m2 / 2; ++k) {
        std::vector<int> seq;
        seq.push_back(n - 1);  // apex
        for (int i = 0; i < m2; ++i) {
            // offsets 0, +1, -1, +2, -2, ... from k
            const int off = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
            seq.push_back((((k + off) % m2) + m2) % m2);
        }
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            img[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] =
                seq[static_cast<std::size_t>((i + 1) % n)];
        Permutation fwd = Permutation::from_images(std::move(img));
        members.push_back(fwd.inverse());
        members.push_back(std::move(fwd));
    }
    return members;
}

/// All permutations with two cycles of length n/2, as image arrays.
inline std::vector<Permutation> half_cycle_pair_candidates(int n) {
    const int h = n / 2;
    std::vector<Permutation> out;
    std::vector<int> pool(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) pool[static_cast<std::size_t>(i - 1)] = i;
    std::vector<int> pick(static_cast<std::size_t>(h - 1));
    // Block A always contains point 0; choose its other h-1 points, then all
    // cyclic orders of both blocks (first point of each block pinned).
    auto emit = [&](const std::vector<int>& blockA, const std::vector<int>& blockB) {
        std::vector<int> restA(blockA.begin() + 1, blockA.end());
        std::vector<int> restB(blockB.begin() + 1, blockB.end());
        std::sort(restA.begin(), restA.end());
        std::sort(restB.begin(), restB.end());
        do {
            do {
                std::vector<int> img(static_cast<std::size_t>(n));
                img[static_cast<std::size_t>(blockA[0])] = restA.empty() ? blockA[0] : restA[0];
                for (std::size_t i = 0; i + 1 < restA.size(); ++i)
                    img[static_cast<std::size_t>(restA[i])] = restA[i + 1];
                if (!restA.empty()) img[static_cast<std::size_t>(restA.back())] = blockA[0];
                img[static_cast<std::size_t>(blockB[0])] = restB.empty() ? blockB[0] : restB[0];
                for (std::size_t i = 0; i + 1 < restB.size(); ++i)
                    img[static_cast<std::size_t>(restB[i])] = restB[i + 1];
                if (!restB.empty()) img[static_cast<std::size_t>(restB.back())] = blockB[0];
                out.push_back(Permutation::from_images(std::move(img)));
            } while (std::next_permutation(restB.begin(), restB.end()));
        } while (std::next_permutation(restA.begin(), restA.end()));
    };
    // Choose h-1 of the n-1 remaining points for block A.
    std::vector<int> idx(static_cast<std::size_t>(h - 1));
    auto choose = [&](auto&& self, int start, int depth) -> void {
        if (depth == h - 1) {
            std::vector<int> blockA{0};
            std::vector<char> used(static_cast<std::size_t>(n), 0);
            used[0] = 1;
            for (int t = 0; t < h - 1; ++t) {
                blockA.push_back(pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])]);
                used[static_cast<std::size_t>(blockA.back())] = 1;
            }
            std::vector<int> blockB;
            for (int v = 0; v < n; ++v)
                if (!used[static_cast<std::size_t>(v)]) blockB.push_back(v);
            emit(blockA, blockB);
            return;
        }
        for (int i = start; i < n - 1; ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    choose(choose, 0, 0);
    return out;
}

constexpr int kMaxArcBits = 128;
using ArcMask = std::bitset<kMaxArcBits>;

inline ArcMask arc_mask_of(const Permutation& p) {
    ArcMask m;
    for (int x = 0; x < p.degree(); ++x)
        if (p(x) != x) m.set(static_cast<std::size_t>(x) * p.degree() + p(x));
    return m;
}

/// Exact-cover search: partition all n(n-1) arcs into n-1 candidate arc
/// sets. Branches on the lowest uncovered arc; the first member can be
/// pinned to a canonical candidate (relabeling symmetry).
inline std::optional<std::vector<Permutation>> arc_partition_search(
    int n, const std::vector<Permutation>& candidates, const Permutation* pinned_first) {
    ArcMask full;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) full.set(static_cast<std::size_t>(x) * n + y);

    std::vector<ArcMask> masks;
    masks.reserve(candidates.size());
    for (const auto& c : candidates) masks.push_back(arc_mask_of(c));

    std::vector<std::vector<int>> by_arc(static_cast<std::size_t>(n) * n);
    for (std::size_t ci = 0; ci < candidates.size(); ++ci)
        for (std::size_t a = 0; a < static_cast<std::size_t>(n) * n; ++a)
            if (masks[ci].test(a)) by_arc[a].push_back(static_cast<int>(ci));

    std::vector<int> chosen;
    ArcMask used;
    if (pinned_first) {
        used = arc_mask_of(*pinned_first);
        chosen.push_back(-1);
    }

    std::vector<Permutation> result;
    auto dfs = [&](auto&& self) -> bool {
        if (used == full) return true;
        std::size_t arc = 0;
        while (used.test(arc) || arc % (static_cast<std::size_t>(n) + 1) == 0) {
            ++arc;  // skip covered arcs and the diagonal
            if (arc >= static_cast<std::size_t>(n) * n) return used == full;
        }
        for (int ci : by_arc[arc]) {
            if ((masks[static_cast<std::size_t>(ci)] & used).any()) continue;
            used |= masks[static_cast<std::size_t>(ci)];
            chosen.push_back(ci);
            if (self(self)) return true;
            chosen.pop_back();
            used &= ~masks[static_cast<std::size_t>(ci)];
        }
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;

    if (pinned_first) result.push_back(*pinned_first);
    for (int ci : chosen)
        if (ci >= 0) result.push_back(candidates[static_cast<std::size_t>(ci)]);
    return result;
}

}  // namespace detail

/// Odd n: the rotational construction, revalidated from scratch; if the
/// scheme ever failed validation the exact search over n-cycles would take
/// over (it has not been needed for any supported n).
inline CliqueWitness odd_clique(int n) {
    if (n % 2 == 0 || n < 5 || n > 11) throw std::invalid_argument("odd_clique: need odd n in [5,11]");
    CliqueWitness w;
    w.n = n;
    w.kind = CliqueKind::OddCycles;
    w.provenance = Provenance::Constructed;
    w.members = detail::odd_rotational_members(n);
    w.members.push_back(Permutation::identity(n));
    w.canonicalize();
    if (validate_clique_witness(w).pass) return w;

    // Fallback: exact cover over all n-cycles (n <= 7 only; beyond that the
    // candidate list is large and the rotational scheme is known to work).
    if (n > 7) throw std::runtime_error("odd_clique: rotational construction failed validation");
    std::vector<Permutation> candidates;
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(i);
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> img(static_cast<std::size_t>(n));
        int prev = 0;
        for (int v : rest) { img[static_cast<std::size_t>(prev)] = v; prev = v; }
        img[static_cast<std::size_t>(prev)] = 0;
        candidates.push_back(Permutation::from_images(std::move(img)));
    } while (std::next_permutation(rest.begin(), rest.end()));
    auto found = detail::arc_partition_search(n, candidates, nullptr);
    if (!found) throw std::runtime_error("odd_clique: exhaustive search found no witness");
    w.members = std::move(*found);
    w.members.push_back(Permutation::identity(n));
    w.provenance = Provenance::Searched;
    w.canonicalize();
    if (!validate_clique_witness(w).pass) throw std::logic_error("odd_clique: searched witness invalid");
    return w;
}

inline json witness_to_json(const CliqueWitness& w) {
    json members = json::array();
    for (const auto& p : w.members) {
        json img = json::array();
        for (int x = 0; x < w.n; ++x) img.push_back(p(x) + 1);
        members.push_back(img);
    }
    return json{{"n", w.n}, {"kind", to_string(w.kind)}, {"members", members}};
}

inline CliqueWitness witness_from_json(const json& j) {
    CliqueWitness w;
    w.n = j.at("n").get<int>();
    w.kind = j.at("kind").get<std::string>() == "OddCycles" ? CliqueKind::OddCycles : CliqueKind::EvenPairs;
    for (const auto& arr : j.at("members")) {
        std::vector<int> img;
        for (const auto& v : arr) img.push_back(v.get<int>() - 1);
        w.members.push_back(Permutation::from_images(std::move(img)));
    }
    w.provenance = Provenance::Cached;
    return w;
}

/// Even n: exact-cover search over all (n/2, n/2)-permutations, first member
/// pinned to the canonical one. At n = 6 no such decomposition exists (the
/// Mendelsohn exception), so the candidate pool widens to all even
/// derangements while keeping the pinned (3,3) member. Results are cached as
/// JSON keyed by n; the cache is advisory and every load is revalidated.
inline CliqueWitness even_clique(int n, const std::filesystem::path& cache_dir = {}) {
    if (n % 2 != 0 || n < 6 || n > 10) throw std::invalid_argument("even_clique: need even n in [6,10]");
    const std::filesystem::path cache_file =
        cache_dir.empty() ? std::filesystem::path{}
                          : cache_dir / ("clique-even-n" + std::to_string(n) + ".json");
    if (!cache_file.empty() && std::filesystem::exists(cache_file)) {
        std::ifstream in(cache_file);
        try {
            CliqueWitness w = witness_from_json(json::parse(in));
            if (w.n == n && w.kind == CliqueKind::EvenPairs && validate_clique_witness(w).pass)
                return w;
        } catch (const std::exception&) {
            // fall through to a fresh search; the cache is not authoritative
        }
    }

    std::vector<Permutation> candidates;
    if (n == 6) {
        std::vector<int> img{0, 1, 2, 3, 4, 5};
        do {
            Permutation p = Permutation::from_images(img);
            if (p.is_even() && p.is_derangement()) candidates.push_back(std::move(p));
        } while (std::next_permutation(img.begin(), img.end()));
    } else {
        candidates = detail::half_cycle_pair_candidates(n);
    }
    const Permutation pinned = natural_representative(CycleType{Partition{n / 2, n / 2}});
    auto found = detail::arc_partition_search(n, candidates, &pinned);
    if (!found) throw std::runtime_error("even_clique: exact cover found no decomposition");
    CliqueWitness w;
    w.n = n;
    w.kind = CliqueKind::EvenPairs;
    w.provenance = Provenance::Searched;
    w.members = std::move(*found);
    w.members.push_back(Permutation::identity(n));
    w.canonicalize();
    if (!validate_clique_witness(w).pass) throw std::logic_error("even_clique: searched witness invalid");

    if (!cache_file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_file.parent_path(), ec);
        std::ofstream out(cache_file);
        if (out) out << witness_to_json(w).dump(2) << '\n';
    }
    return w;
}

/// Builds the clique for either parity of n.
inline CliqueWitness maximum_clique(int n, const std::filesystem::path& cache_dir = {}) {
    return n % 2 == 1 ? odd_clique(n) : even_clique(n, cache_dir);
}

/// chi(C) for every irreducible character: nonzero except for the standard
/// character, whose (recorded) sum vanishes on these cliques.
inline CheckReport verify_clique_character_nonvanishing(const CliqueWitness& w) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "clique-character-nonvanishing";
    rep.n = w.n;
    rep.anchor = w.n % 2 == 1 ? "sec5.1:chi-C-nonzero" : "sec5.2:chi-C-nonzero";

    const auto classes = conjugacy_classes(w.n, GroupKind::Alt);
    const auto labels = alt_character_labels(w.n);
    const AltCharLabel standard = AltCharLabel::restricted(Partition{w.n - 1, 1});

    // Split tallies r' + r'' = n-1 of the non-identity members.
    Int rp = 0, rpp = 0;
    for (std::size_t i = 1; i < w.members.size(); ++i) {
        const CycleType t{w.members[i].cycle_type()};
        if (is_split(t)) {
            if (split_half_of(w.members[i]) == SplitTag::Prime) rp += 1;
            else rpp += 1;
        }
    }
    rep.witnesses["r_prime"] = rp.str();
    rep.witnesses["r_double_prime"] = rpp.str();

    json values = json::array();
    for (const auto& chi : labels) {
        const QuadraticNumber sum = character_sum_over_set(chi, w.members, classes);
        const bool is_standard = chi == standard;
        values.push_back({{"character", chi.str()}, {"sum", sum.str()}, {"standard", is_standard}});
        if (is_standard) {
            rep.witnesses["standard_sum"] = sum.str();
        } else if (sum.is_zero()) {
            rep.fail("vanishing_nonstandard", json{{"character", chi.str()}});
        }
    }
    rep.witnesses["values"] = values;
    if (w.n % 2 == 0)
        rep.witnesses["note"] =
            "split characters occur only for symmetric shapes; the non-symmetric split case is vacuous";
    rep.ms = sw.ms();
    return rep;
}

/// The dimension identity and impossibility inequalities used for the split
/// hook character at odd n: dim = 2^(n-1)(n-2)!!/(n-1)!! exactly; no tally
/// split r' + r'' = n-1 can null the clique sum; and the closing inequality
/// of the argument, 4^(n-1) >= n^5 for n >= 9, holds as stated.
inline CheckReport hook_split_inequality_check(int n) {
    Stopwatch sw;
    CheckReport rep;
    rep.check = "hook-split-inequality";
    rep.n = n;
    rep.anchor = "sec5.1:hook-dimension";
    if (n % 2 == 0 || n < 5 || n > 31) throw std::invalid_argument("hook_split_inequality_check: need odd n in [5,31]");

    std::vector<int> parts{(n + 1) / 2};
    for (int i = 0; i < (n - 1) / 2; ++i) parts.push_back(1);
    const Partition hook{std::move(parts)};
    const Int dim = specht_dimension(hook);
    const Int formula = int_pow(Int(2), static_cast<unsigned>(n - 1)) * double_factorial(n - 2) / double_factorial(n - 1);
    rep.witnesses["dimension"] = dim.str();
    if (dim != formula)
        rep.fail("dimension_formula", json{{"hook_length_route", dim.str()}, {"double_factorial_route", formula.str()}});

    // x, y on the split pair of n-cycles; the half-dimension plus any tally
    // combination r'x + r''y must be nonzero.
    const int m = (n - 1) / 2;
    const int sgn = m % 2 == 0 ? 1 : -1;
    const QuadraticNumber x = QuadraticNumber::with_radicand(Rat(sgn, 2), Rat(1, 2), sgn * n);
    const QuadraticNumber y = QuadraticNumber::with_radicand(Rat(sgn, 2), Rat(-1, 2), sgn * n);
    for (int rprime = 0; rprime <= n - 1; ++rprime) {
        const QuadraticNumber total = QuadraticNumber(Rat(dim, 2)) +
                                      x * QuadraticNumber(Rat(rprime)) +
                                      y * QuadraticNumber(Rat(n - 1 - rprime));
        if (total.is_zero())
            rep.fail("vanishing_tally", json{{"r_prime", rprime}});
    }
    rep.witnesses["branch"] = (n - 1) % 4 == 0 ? "4 divides n-1" : "4 does not divide n-1";

    if (n >= 9) {
        const bool holds = int_pow(Int(4), static_cast<unsigned>(n - 1)) >= int_pow(Int(n), 5);
        rep.witnesses["power_inequality"] = holds;
        if (!holds) rep.fail("power_inequality_fails", json{{"n", n}});
    } else {
        rep.witnesses["power_inequality"] = "direct contradiction branch (n = 5 or 7)";
    }
    rep.ms = sw.ms();
    return rep;
}

}  // namespace ekr
