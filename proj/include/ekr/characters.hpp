#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ekr/numeric.hpp"
#include "ekr/partition.hpp"
#include "ekr/permgroup.hpp"
#include "ekr/quadratic.hpp"

namespace ekr {

namespace detail {

inline std::string mn_key(const Partition& shape, const std::vector<int>& cycles, std::size_t from) {
    std::string k;
    k.reserve(shape.rows() + (cycles.size() - from) + 1);
    for (int v : shape.parts()) k.push_back(static_cast<char>(v));
    k.push_back('\x7f');
    for (std::size_t i = from; i < cycles.size(); ++i) k.push_back(static_cast<char>(cycles[i]));
    return k;
}

/// Memo shared across calls; concurrent readers, idempotent insertions.
class MnMemo {
  public:
    bool lookup(const std::string& k, Int& out) const {
        std::shared_lock lock(mx_);
        const auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& k, const Int& v) {
        std::unique_lock lock(mx_);
        map_.emplace(k, v);
    }
    static MnMemo& instance() {
        static MnMemo memo;
        return memo;
    }

  private:
    mutable std::shared_mutex mx_;
    std::unordered_map<std::string, Int> map_;
};

inline Int mn_recurse(const Partition& shape, const std::vector<int>& cycles, std::size_t from) {
    if (from == cycles.size()) return shape.empty() ? Int(1) : Int(0);
    const std::string key = mn_key(shape, cycles, from);
    Int cached;
    if (MnMemo::instance().lookup(key, cached)) return cached;
    const int m = cycles[from];
    Int total = 0;
    for (const auto& hook : skew_hooks(shape, m)) {
        const Int sub = mn_recurse(hook.remainder, cycles, from + 1);
        total += (hook.r() % 2 == 0) ? sub : -sub;
    }
    MnMemo::instance().store(key, total);
    return total;
}

}  // namespace detail

/// Exact character value of Sym(n): recursive skew-hook stripping, consuming
/// cycles in decreasing length order (any order is valid; fixing one makes
/// the memo effective and results reproducible).
inline Int mn_character(const Partition& shape, const CycleType& type) {
    if (shape.weight() != type.n())
        throw std::invalid_argument("mn_character: partition and cycle type have different weights");
    std::vector<int> cycles = type.lengths.parts();  // already descending
    return detail::mn_recurse(shape, cycles, 0);
}

inline Int mn_character(const Partition& shape, const Partition& type) {
    return mn_character(shape, CycleType{type});
}

// ---------------------------------------------------------------------------
// Irreducible characters of Alt(n)
// ---------------------------------------------------------------------------

enum class AltCharKind { Restricted, SplitPlus, SplitMinus };

inline const char* to_string(AltCharKind k) {
    switch (k) {
        case AltCharKind::Restricted: return "restricted";
        case AltCharKind::SplitPlus: return "split_plus";
        default: return "split_minus";
    }
}

/// Label of an irreducible character of Alt(n). Restricted labels carry the
/// lexicographically larger of {lambda, lambda'} (both restrict to the same
/// character); split labels require lambda symmetric.
struct AltCharLabel {
    AltCharKind kind = AltCharKind::Restricted;
    Partition lambda;

    static AltCharLabel restricted(const Partition& p) {
        const Partition q = conjugate(p);
        if (p == q) throw std::invalid_argument("restricted label needs a non-symmetric partition");
        return {AltCharKind::Restricted, q < p ? p : q};
    }
    static AltCharLabel split_plus(const Partition& p) {
        if (!is_symmetric(p)) throw std::invalid_argument("split label needs a symmetric partition");
        return {AltCharKind::SplitPlus, p};
    }
    static AltCharLabel split_minus(const Partition& p) {
        if (!is_symmetric(p)) throw std::invalid_argument("split label needs a symmetric partition");
        return {AltCharKind::SplitMinus, p};
    }

    bool operator==(const AltCharLabel& o) const { return kind == o.kind && lambda == o.lambda; }

    std::string str() const {
        switch (kind) {
            case AltCharKind::Restricted: return "[" + lambda.str() + "]";
            case AltCharKind::SplitPlus: return "[" + lambda.str() + "]+";
            default: return "[" + lambda.str() + "]-";
        }
    }
};

/// All irreducible character labels of Alt(n), trivial first.
inline std::vector<AltCharLabel> alt_character_labels(int n) {
    std::vector<AltCharLabel> labels;
    for (const auto& p : partitions_of(n)) {
        const Partition q = conjugate(p);
        if (q < p) labels.push_back(AltCharLabel::restricted(p));
        else if (p == q) {
            labels.push_back(AltCharLabel::split_plus(p));
            labels.push_back(AltCharLabel::split_minus(p));
        }
    }
    return labels;
}

/// Character value on a class, implementing every branch of the split-value
/// theorem. A split character takes half the Sym(n) value everywhere except
/// on the split pair matched to its own partition, where the pair of values
/// is x, y = ((-1)^m +- sqrt((-1)^m q_1...q_r)) / 2; SplitPlus takes x on
/// the Prime class.
inline QuadraticNumber alt_character_value(const AltCharLabel& chi, const ConjugacyClass& c) {
    if (chi.lambda.weight() != c.n())
        throw std::invalid_argument("alt_character_value: weight mismatch");
    if (chi.kind == AltCharKind::Restricted)
        return QuadraticNumber(Rat(mn_character(chi.lambda, c.cycle_type)));

    const bool corresponding =
        c.split_tag != SplitTag::NonSplit && split_class_partition(c.cycle_type) == chi.lambda;
    if (!corresponding)
        return QuadraticNumber(Rat(mn_character(chi.lambda, c.cycle_type), 2));

    const int m = c.cycle_type.m();
    const int sgn = (m % 2 == 0) ? 1 : -1;
    std::int64_t prod = 1;
    for (int q : c.cycle_type.lengths.parts()) prod *= q;
    const bool plus_root =
        (chi.kind == AltCharKind::SplitPlus) == (c.split_tag == SplitTag::Prime);
    return QuadraticNumber::with_radicand(Rat(sgn, 2), Rat(plus_root ? 1 : -1, 2), sgn * prod);
}

inline Int alt_character_dimension(const AltCharLabel& chi) {
    const Int full = specht_dimension(chi.lambda);
    return chi.kind == AltCharKind::Restricted ? full : full / 2;
}

struct CharacterTable {
    int n = 0;
    std::vector<AltCharLabel> rows;
    std::vector<ConjugacyClass> cols;
    std::vector<std::vector<QuadraticNumber>> values;  // rows x cols

    const QuadraticNumber& at(std::size_t r, std::size_t c) const { return values[r][c]; }
};

inline CharacterTable alt_character_table(int n) {
    if (n < 3 || n > 12) throw std::invalid_argument("alt_character_table: need 3 <= n <= 12");
    CharacterTable t;
    t.n = n;
    t.rows = alt_character_labels(n);
    t.cols = conjugacy_classes(n, GroupKind::Alt);
    t.values.resize(t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        t.values[r].reserve(t.cols.size());
        for (const auto& c : t.cols) t.values[r].push_back(alt_character_value(t.rows[r], c));
    }
    return t;
}

/// Exact row orthogonality: sum_c |c| chi(c) conj(psi(c)) = |G| [chi == psi].
inline bool check_row_orthogonality(const CharacterTable& t) {
    const Int order = factorial(t.n) / 2;
    for (std::size_t r1 = 0; r1 < t.rows.size(); ++r1)
        for (std::size_t r2 = r1; r2 < t.rows.size(); ++r2) {
            RadicalSum acc;
            for (std::size_t c = 0; c < t.cols.size(); ++c) {
                const QuadraticNumber term =
                    t.at(r1, c) * t.at(r2, c).complex_conjugate() * QuadraticNumber(Rat(t.cols[c].size));
                acc.add(term);
            }
            const Rat expect = (r1 == r2) ? Rat(order) : Rat(0);
            if (!acc.equals_rational(expect)) return false;
        }
    return true;
}

/// Exact column orthogonality: sum_chi chi(c) conj(chi(c')) = delta |G|/|c|.
inline bool check_column_orthogonality(const CharacterTable& t) {
    const Int order = factorial(t.n) / 2;
    for (std::size_t c1 = 0; c1 < t.cols.size(); ++c1)
        for (std::size_t c2 = c1; c2 < t.cols.size(); ++c2) {
            RadicalSum acc;
            for (std::size_t r = 0; r < t.rows.size(); ++r)
                acc.add(t.at(r, c1) * t.at(r, c2).complex_conjugate());
            const Rat expect = (c1 == c2) ? Rat(order) / Rat(t.cols[c1].size) : Rat(0);
            if (!acc.equals_rational(expect)) return false;
        }
    return true;
}

/// chi(S) = sum over S of chi, computed by bucketing members into classes.
inline QuadraticNumber character_sum_over_set(const AltCharLabel& chi,
                                              const std::vector<Permutation>& members,
                                              const std::vector<ConjugacyClass>& classes) {
    std::vector<Int> bucket(classes.size(), Int(0));
    for (const auto& p : members) {
        const CycleType tp{p.cycle_type()};
        const SplitTag tag = is_split(tp) ? split_half_of(p) : SplitTag::NonSplit;
        bool found = false;
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (classes[c].cycle_type == tp && classes[c].split_tag == tag) {
                bucket[c] += 1;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("character_sum_over_set: member outside the group");
    }
    QuadraticNumber total;
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (bucket[c] != 0) total += alt_character_value(chi, classes[c]) * QuadraticNumber(Rat(bucket[c]));
    return total;
}

/// One row of the exhaustive even-n scan: value of the two-(n/2)-cycle class
/// on lambda, with the shape classification for the -2 cases.
struct TwoLayerScanRow {
    Partition lambda;
    Int value;
    ShapeClass shape = ShapeClass::Other;
    bool symmetric = false;
    Int dimension;
};

struct TwoLayerScanReport {
    int n = 0;
    std::vector<TwoLayerScanRow> rows;
    std::vector<Partition> value_violations;      // value outside {0,+-1,+-2}
    std::vector<Partition> shape_violations;      // -2 but not two-layer / symmetric near hook
    std::vector<Partition> dimension_violations;  // -2 case with dimension <= 2n-2
    bool pass() const {
        return value_violations.empty() && shape_violations.empty() && dimension_violations.empty();
    }
};

/// Verifies, over every partition of even n, that the character value on the
/// class of two disjoint n/2-cycles lies in {0,+-1,+-2}, and that each -2
/// case is a two-layer hook or a symmetric near hook with dimension > 2n-2.
inline TwoLayerScanReport two_layer_minus_two_classification(int n) {
    if (n % 2 != 0 || n < 8 || n > 14)
        throw std::invalid_argument("two_layer_minus_two_classification: need even n in [8,14]");
    TwoLayerScanReport rep;
    rep.n = n;
    const Partition sigma{n / 2, n / 2};
    for (const auto& lam : partitions_of(n)) {
        TwoLayerScanRow row;
        row.lambda = lam;
        row.value = mn_character(lam, sigma);
        row.shape = classify_shape(lam);
        row.symmetric = is_symmetric(lam);
        row.dimension = specht_dimension(lam);
        if (row.value < -2 || row.value > 2) rep.value_violations.push_back(lam);
        if (row.value == -2) {
            const bool ok = row.shape == ShapeClass::TwoLayerHook ||
                            (row.shape == ShapeClass::NearHook && row.symmetric);
            if (!ok) rep.shape_violations.push_back(lam);
            if (!(row.dimension > 2 * n - 2)) rep.dimension_violations.push_back(lam);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace ekr
