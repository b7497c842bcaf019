#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ekr/numeric.hpp"
#include "ekr/partition.hpp"
#include "ekr/permutation.hpp"

namespace ekr {

enum class GroupKind { Sym, Alt };
enum class SplitTag { NonSplit, Prime, DoublePrime };

inline const char* to_string(SplitTag t) {
    switch (t) {
        case SplitTag::Prime: return "prime";
        case SplitTag::DoublePrime: return "double_prime";
        default: return "nonsplit";
    }
}

/// Cycle type of a permutation: the multiset of cycle lengths (fixed points
/// included as 1s), as a partition of n.
struct CycleType {
    Partition lengths;

    int n() const { return lengths.weight(); }
    int fixed_points() const {
        int f = 0;
        for (int l : lengths.parts())
            if (l == 1) ++f;
        return f;
    }
    int sign() const {
        int s = lengths.weight() - lengths.rows();
        return (s % 2 == 0) ? 1 : -1;
    }
    bool all_odd_distinct() const {
        const auto& v = lengths.parts();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] % 2 == 0) return false;
            if (i > 0 && v[i] == v[i - 1]) return false;
        }
        return true;
    }
    /// Number of cycles when all lengths are odd and distinct.
    int r() const { return lengths.rows(); }
    /// m = (n - r)/2, defined for the all-odd case.
    int m() const { return (n() - r()) / 2; }

    bool operator==(const CycleType& o) const { return lengths == o.lengths; }
    bool operator<(const CycleType& o) const { return lengths < o.lengths; }
};

/// A class of Alt(n) splits off its Sym(n) class exactly when the cycle
/// lengths are odd and pairwise distinct.
inline bool is_split(const CycleType& t) {
    if (t.sign() != 1) throw std::domain_error("is_split: odd permutations have no Alt(n) class");
    return t.all_odd_distinct();
}

/// Centralizer-order class size in Sym(n): n! / prod(l^m * m!).
inline Int sym_class_size(const CycleType& t) {
    Int z = 1;
    const auto& v = t.lengths.parts();
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        const auto mult = static_cast<int>(j - i);
        z *= int_pow(Int(v[i]), static_cast<unsigned>(mult)) * factorial(mult);
        i = j;
    }
    return factorial(t.n()) / z;
}

/// The symmetric partition matched to a split cycle type by the principal
/// hook rule q_i = 2*lambda_i - (2i - 1).
inline Partition split_class_partition(const CycleType& t) {
    if (!is_split(t)) throw std::domain_error("split_class_partition: type is not split");
    const auto& q = t.lengths.parts();
    const int r = static_cast<int>(q.size());
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) parts.push_back((q[static_cast<std::size_t>(i)] - 1) / 2 + i + 1);
    // Rows past the diagonal square are forced by symmetry: row i is the
    // number of diagonal rows whose length reaches column i.
    for (int i = r + 1;; ++i) {
        int len = 0;
        for (int j = 0; j < r; ++j)
            if (parts[static_cast<std::size_t>(j)] >= i) ++len;
        if (len == 0) break;
        parts.push_back(len);
    }
    Partition lambda{std::vector<int>(parts)};
    if (!is_symmetric(lambda) || lambda.weight() != t.n())
        throw std::logic_error("split_class_partition: correspondence failed");
    return lambda;
}

/// Inverse map: principal hook lengths q_i = 2(lambda_i - i) + 1 of a
/// symmetric partition.
inline CycleType symmetric_partition_class(const Partition& lambda) {
    if (!is_symmetric(lambda)) throw std::domain_error("symmetric_partition_class: partition not symmetric");
    std::vector<int> q;
    for (int i = 1; i <= lambda.rows(); ++i) {
        if (lambda.part(i) < i) break;
        q.push_back(2 * (lambda.part(i) - i) + 1);
    }
    return CycleType{Partition(std::move(q))};
}

/// The natural representative: cycles of decreasing length on consecutive
/// points, e.g. type (3,2) -> (1 2 3)(4 5). For a split type this is the
/// lexicographically least element of the split pair in canonical cycle
/// form, which is what tags its class Prime.
inline Permutation natural_representative(const CycleType& t) {
    std::vector<int> img(static_cast<std::size_t>(t.n()));
    int base = 0;
    for (int len : t.lengths.parts()) {
        for (int k = 0; k < len; ++k) img[static_cast<std::size_t>(base + k)] = base + (k + 1) % len;
        base += len;
    }
    return Permutation::from_images(std::move(img));
}

/// The twin of the natural representative under conjugation by the
/// transposition of the last two points of the largest cycle (an odd
/// element), landing in the DoublePrime class of a split pair.
inline Permutation twin_representative(const CycleType& t) {
    const int q1 = t.lengths[0];
    if (q1 < 3) throw std::domain_error("twin_representative: largest cycle too short to twist");
    const Permutation rep = natural_representative(t);
    std::vector<int> timg(static_cast<std::size_t>(t.n()));
    for (int x = 0; x < t.n(); ++x) timg[static_cast<std::size_t>(x)] = x;
    std::swap(timg[static_cast<std::size_t>(q1 - 2)], timg[static_cast<std::size_t>(q1 - 1)]);
    const Permutation tr = Permutation::from_images(std::move(timg));
    return tr * rep * tr.inverse();
}

struct ConjugacyClass {
    GroupKind group = GroupKind::Alt;
    CycleType cycle_type;
    SplitTag split_tag = SplitTag::NonSplit;
    Int size;
    Permutation representative;

    int n() const { return cycle_type.n(); }
    bool is_identity() const { return cycle_type.fixed_points() == cycle_type.n(); }
};

/// Locates the Prime/DoublePrime half containing g by the parity of a
/// conjugator onto the natural representative. For split types the
/// centralizer is generated by the (odd-length) cycles themselves, all even,
/// so the parity does not depend on the conjugator chosen.
inline SplitTag split_half_of(const Permutation& g) {
    const CycleType t{g.cycle_type()};
    if (!is_split(t)) return SplitTag::NonSplit;
    const Permutation rep = natural_representative(t);
    const auto rc = rep.cycles();
    const auto gc = g.cycles();
    std::vector<int> conj(static_cast<std::size_t>(g.degree()));
    for (std::size_t c = 0; c < rc.size(); ++c)
        for (std::size_t k = 0; k < rc[c].size(); ++k)
            conj[static_cast<std::size_t>(rc[c][k])] = gc[c][k];
    const Permutation h = Permutation::from_images(std::move(conj));
    return h.is_even() ? SplitTag::Prime : SplitTag::DoublePrime;
}

/// Complete class list with exact sizes. Classes are ordered by decreasing
/// fixed-point count, then by cycle type; a split pair sits adjacently as
/// Prime then DoublePrime.
inline std::vector<ConjugacyClass> conjugacy_classes(int n, GroupKind group) {
    if (group == GroupKind::Sym && n < 2) throw std::invalid_argument("conjugacy_classes: need n >= 2");
    if (group == GroupKind::Alt && n < 3) throw std::invalid_argument("conjugacy_classes: need n >= 3 for Alt");
    std::vector<CycleType> types;
    for (const auto& p : partitions_of(n)) {
        CycleType t{p};
        if (group == GroupKind::Alt && t.sign() != 1) continue;
        types.push_back(std::move(t));
    }
    std::sort(types.begin(), types.end(), [](const CycleType& a, const CycleType& b) {
        if (a.fixed_points() != b.fixed_points()) return a.fixed_points() > b.fixed_points();
        return b.lengths < a.lengths;
    });
    std::vector<ConjugacyClass> out;
    for (auto& t : types) {
        const Int full = sym_class_size(t);
        if (group == GroupKind::Alt && is_split(t)) {
            ConjugacyClass prime{group, t, SplitTag::Prime, full / 2, natural_representative(t)};
            ConjugacyClass dbl{group, t, SplitTag::DoublePrime, full / 2, twin_representative(t)};
            out.push_back(std::move(prime));
            out.push_back(std::move(dbl));
        } else {
            out.push_back(ConjugacyClass{group, t, SplitTag::NonSplit, full, natural_representative(t)});
        }
    }
    return out;
}

/// Fully enumerated Sym(n) or Alt(n) with a stable vertex order: elements
/// listed in lexicographic image order and indexed from 0. Everything
/// downstream (vectors, matrices, graph files) uses this order.
class GroupTable {
  public:
    GroupTable(int n, GroupKind kind) : n_(n), kind_(kind) {
        if (n < 1 || n > 9) throw resource_error("GroupTable: n out of the enumerable range");
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        do {
            Permutation p = Permutation::from_images(img);
            if (kind == GroupKind::Alt && !p.is_even()) continue;
            index_.emplace(p.pack(), static_cast<int>(elems_.size()));
            elems_.push_back(std::move(p));
        } while (std::next_permutation(img.begin(), img.end()));
        classes_ = conjugacy_classes(n, kind);
        class_of_.resize(elems_.size());
        for (std::size_t i = 0; i < elems_.size(); ++i)
            class_of_[i] = locate_class(elems_[i]);
    }

    int n() const { return n_; }
    GroupKind kind() const { return kind_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<Permutation>& elements() const { return elems_; }
    const Permutation& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }

    int index_of(const Permutation& p) const {
        const auto it = index_.find(p.pack());
        if (it == index_.end()) throw std::invalid_argument("element not in group");
        return it->second;
    }

    bool contains(const Permutation& p) const {
        return p.degree() == n_ && index_.find(p.pack()) != index_.end();
    }

    int class_index(int element_index) const { return class_of_[static_cast<std::size_t>(element_index)]; }

    int class_index_of(const Permutation& p) const { return locate_class(p); }

    int identity_index() const { return index_of(Permutation::identity(n_)); }

    /// Indices of all fixed-point-free elements, ascending.
    std::vector<int> derangement_indices() const {
        std::vector<int> d;
        for (int i = 0; i < order(); ++i)
            if (elems_[static_cast<std::size_t>(i)].is_derangement()) d.push_back(i);
        return d;
    }

    /// The coset S_{i,j} = { pi : pi(i) = j } as sorted element indices
    /// (i, j are 1-based points).
    std::vector<int> coset_indices(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::invalid_argument("coset point out of range");
        std::vector<int> s;
        for (int v = 0; v < order(); ++v)
            if (elems_[static_cast<std::size_t>(v)](i - 1) == j - 1) s.push_back(v);
        return s;
    }

  private:
    int locate_class(const Permutation& p) const {
        const CycleType t{p.cycle_type()};
        const SplitTag tag = (kind_ == GroupKind::Alt && is_split(t)) ? split_half_of(p) : SplitTag::NonSplit;
        for (std::size_t c = 0; c < classes_.size(); ++c)
            if (classes_[c].cycle_type == t && classes_[c].split_tag == tag) return static_cast<int>(c);
        throw std::logic_error("class lookup failed");
    }

    int n_;
    GroupKind kind_;
    std::vector<Permutation> elems_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_;
};

using GroupTablePtr = std::shared_ptr<const GroupTable>;

inline GroupTablePtr make_group(int n, GroupKind kind) {
    return std::make_shared<const GroupTable>(n, kind);
}

/// Deterministic representative of one half of a split pair; Prime gets the
/// natural representative, DoublePrime its odd-conjugate twin.
inline Permutation canonical_split_representative(const ConjugacyClass& c) {
    if (c.split_tag == SplitTag::NonSplit)
        throw std::domain_error("canonical_split_representative: class is not split");
    return c.split_tag == SplitTag::Prime ? natural_representative(c.cycle_type)
                                          : twin_representative(c.cycle_type);
}

}  // namespace ekr
