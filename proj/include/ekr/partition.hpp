#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekr/numeric.hpp"

namespace ekr {

enum class ShapeClass { Hook, NearHook, TwoLayerHook, Other };

inline const char* to_string(ShapeClass s) {
    switch (s) {
        case ShapeClass::Hook: return "Hook";
        case ShapeClass::NearHook: return "NearHook";
        case ShapeClass::TwoLayerHook: return "TwoLayerHook";
        default: return "Other";
    }
}

/// Weakly decreasing positive parts, stored without trailing zeros.
/// The empty partition (of 0) is valid; it terminates the character recursion.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    /// Part with 1-based index, 0 beyond the last row. Matches the usual
    /// convention where lambda_i = 0 for i > k.
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

  private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram: result[j] = #{i : parts[i] >= j+1}.
inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p[i]; ++j) cols[static_cast<std::size_t>(j)]++;
    return Partition(std::move(cols));
}

inline bool is_symmetric(const Partition& p) { return p == conjugate(p); }

/// Hook = [a,1,...]; near hook = [a,2,1,...] with a > 1; two-layer hook per
/// the four-condition test (k >= 3, l2 + l2' >= 5, l3 <= 2, equal positive
/// overhangs of first row and first column). The three classes are mutually
/// exclusive: a near hook has l2 + l2' = 4 and so never tests two-layer.
inline ShapeClass classify_shape(const Partition& p) {
    if (p.empty()) return ShapeClass::Other;
    const int k = p.rows();
    bool hook = true;
    for (int i = 1; i < k; ++i)
        if (p[i] != 1) { hook = false; break; }
    if (hook) return ShapeClass::Hook;
    if (k >= 2 && p[0] > 1 && p[1] == 2) {
        bool near = true;
        for (int i = 2; i < k; ++i)
            if (p[i] != 1) { near = false; break; }
        if (near) return ShapeClass::NearHook;
    }
    if (k >= 3) {
        const Partition q = conjugate(p);
        const int s = p[0] - p[1];
        const int t = q[0] - q[1];
        if (p[1] + q[1] >= 5 && p[2] <= 2 && s == t && s > 0) return ShapeClass::TwoLayerHook;
    }
    return ShapeClass::Other;
}

/// One hook length per cell, row-major. Product is hl(p).
inline std::vector<int> hook_lengths(const Partition& p) {
    std::vector<int> out;
    const Partition q = conjugate(p);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            const int arm = p[i] - (j + 1);
            const int leg = q[j] - (i + 1);
            out.push_back(arm + leg + 1);
        }
    return out;
}

inline Int hook_length_product(const Partition& p) {
    Int prod = 1;
    for (int h : hook_lengths(p)) prod *= h;
    return prod;
}

/// n!/hl(p): dimension of the irreducible of Sym(n) labeled by p.
inline Int specht_dimension(const Partition& p) {
    if (p.empty()) return 1;
    return factorial(p.weight()) / hook_length_product(p);
}

/// Edgewise-connected strip of the diagram boundary whose removal leaves a
/// valid partition. cells run from the top-right end toward the bottom-left.
struct SkewHook {
    std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
    Partition remainder;
    int rows_spanned = 0;

    int length() const { return static_cast<int>(cells.size()); }
    int r() const { return rows_spanned - 1; }  // height minus one; drives the MN sign
};

/// The boundary path: start at the last cell of row 0, step down when the
/// cell below exists, otherwise step left, ending at the last cell of
/// column 0. Consecutive path cells share an edge.
inline std::vector<std::pair<int, int>> boundary_path(const Partition& p) {
    std::vector<std::pair<int, int>> path;
    if (p.empty()) return path;
    int i = 0, j = p[0] - 1;
    path.emplace_back(i, j);
    while (i + 1 < p.rows() || j > 0) {
        if (i + 1 < p.rows() && p[i + 1] >= j + 1) ++i;
        else --j;
        path.emplace_back(i, j);
    }
    return path;
}

/// All skew hooks of length exactly m: slide a window of m cells along the
/// boundary and keep the positions where removal leaves weakly decreasing,
/// left-justified rows.
inline std::vector<SkewHook> skew_hooks(const Partition& p, int m) {
    std::vector<SkewHook> hooks;
    if (m < 1 || m > p.weight()) return hooks;
    const auto path = boundary_path(p);
    const int L = static_cast<int>(path.size());
    for (int s = 0; s + m <= L; ++s) {
        // Cells removed per row: a window is a valid removal iff in every row
        // it removes a suffix of that row and the new lengths still decrease.
        std::vector<int> len(p.parts().begin(), p.parts().end());
        bool ok = true;
        int rlo = path[static_cast<std::size_t>(s)].first;
        int rhi = rlo;
        for (int t = s; t < s + m; ++t) {
            const auto [r, c] = path[static_cast<std::size_t>(t)];
            rlo = std::min(rlo, r);
            rhi = std::max(rhi, r);
            if (len[static_cast<std::size_t>(r)] != c + 1) { ok = false; break; }
            len[static_cast<std::size_t>(r)] = c;
        }
        if (!ok) continue;
        for (std::size_t i = 0; i + 1 < len.size(); ++i)
            if (len[i] < len[i + 1]) { ok = false; break; }
        if (!ok) continue;
        while (!len.empty() && len.back() == 0) len.pop_back();
        // A row of zero length strictly above a nonzero row was already
        // rejected by the weakly-decreasing scan.
        SkewHook h;
        h.cells.assign(path.begin() + s, path.begin() + s + m);
        h.remainder = Partition(std::move(len));
        h.rows_spanned = rhi - rlo + 1;
        hooks.push_back(std::move(h));
    }
    return hooks;
}

/// Proof obligation from the dimension lemmas: on two-layer hooks and
/// symmetric near hooks (n >= 8) the Specht dimension exceeds 2n-2.
inline bool dimension_bound_check(const Partition& p) {
    const ShapeClass c = classify_shape(p);
    const bool near_sym = c == ShapeClass::NearHook && is_symmetric(p) && p.weight() >= 8;
    if (c != ShapeClass::TwoLayerHook && !near_sym)
        throw std::domain_error("dimension_bound_check: shape is neither a two-layer hook nor a symmetric near hook of weight >= 8");
    return specht_dimension(p) > 2 * p.weight() - 2;
}

/// All partitions of n, descending lexicographic ([n] first, [1^n] last).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    if (n == 0) { out.emplace_back(); return out; }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) { out.push_back(Partition(cur)); return; }
        for (int v = std::min(rest, maxpart); v >= 1; --v) {
            cur.push_back(v);
            self(self, rest - v, v);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Text form "5,3,3,2,1,1"; exponent shorthand "4,2^2,1^2" accepted on input.
inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty partition component");
        const auto caret = tok.find('^');
        int value = 0, mult = 1;
        try {
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                mult = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition component '" + tok + "'");
        }
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        for (int i = 0; i < mult; ++i) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

}  // namespace ekr
