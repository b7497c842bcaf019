#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekr/partition.hpp"

namespace ekr {

/// Bijection of {0..n-1} stored as a dense image array. All external text
/// and JSON forms are 1-based; the internal points are 0-based.
class Permutation {
  public:
    Permutation() = default;

    static Permutation identity(int n) {
        Permutation p;
        p.img_.resize(static_cast<std::size_t>(n));
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    static Permutation from_images(std::vector<int> images) {
        Permutation p;
        p.img_ = std::move(images);
        std::vector<char> seen(p.img_.size(), 0);
        for (int v : p.img_) {
            if (v < 0 || v >= p.degree() || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("image array is not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// (a*b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
        Permutation c;
        c.img_.resize(a.img_.size());
        for (int x = 0; x < a.degree(); ++x) c.img_[static_cast<std::size_t>(x)] = a(b(x));
        return c;
    }

    Permutation inverse() const {
        Permutation c;
        c.img_.resize(img_.size());
        for (int x = 0; x < degree(); ++x) c.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(x)])] = x;
        return c;
    }

    int fixed_points() const {
        int f = 0;
        for (int x = 0; x < degree(); ++x)
            if ((*this)(x) == x) ++f;
        return f;
    }

    bool is_derangement() const { return fixed_points() == 0; }

    /// Cycles written with each cycle starting at its minimum point, sorted
    /// by length descending then by minimum. Fixed points are kept.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> cyc;
        std::vector<char> seen(img_.size(), 0);
        for (int x = 0; x < degree(); ++x) {
            if (seen[static_cast<std::size_t>(x)]) continue;
            std::vector<int> c;
            int y = x;
            do {
                seen[static_cast<std::size_t>(y)] = 1;
                c.push_back(y);
                y = (*this)(y);
            } while (y != x);
            cyc.push_back(std::move(c));
        }
        std::sort(cyc.begin(), cyc.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a[0] < b[0];
        });
        return cyc;
    }

    Partition cycle_type() const {
        std::vector<int> lengths;
        for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
        return Partition(std::move(lengths));
    }

    /// +1 for even, -1 for odd: (-1)^(n - #cycles).
    int sign() const {
        const int ncyc = static_cast<int>(cycles().size());
        return ((degree() - ncyc) % 2 == 0) ? 1 : -1;
    }

    bool is_even() const { return sign() == 1; }

    /// 4 bits per point; enough for the n <= 12 this library works at.
    std::uint64_t pack() const {
        std::uint64_t k = 0;
        for (int x = degree() - 1; x >= 0; --x) k = (k << 4) | static_cast<std::uint64_t>((*this)(x));
        return k;
    }

    /// Cycle notation, 1-based, fixed points omitted; identity prints "()".
    std::string cycle_string() const {
        std::ostringstream os;
        bool any = false;
        for (const auto& c : cycles()) {
            if (c.size() == 1) continue;
            any = true;
            os << '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) os << ' ';
                os << c[i] + 1;
            }
            os << ')';
        }
        if (!any) return "()";
        return os.str();
    }

  private:
    std::vector<int> img_;
};

/// Parses 1-based cycle notation like "(1 2 3)(4 5)"; degree must be given
/// since fixed points are omitted from the text.
inline Permutation parse_cycles(const std::string& text, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        const auto close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced cycle notation");
        std::istringstream is(text.substr(pos + 1, close - pos - 1));
        std::vector<int> pts;
        int v;
        while (is >> v) {
            if (v < 1 || v > n) throw std::invalid_argument("cycle point out of range");
            pts.push_back(v - 1);
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const int from = pts[i];
            const int to = pts[(i + 1) % pts.size()];
            img[static_cast<std::size_t>(from)] = to;
        }
        pos = close + 1;
    }
    return Permutation::from_images(std::move(img));
}

/// True iff pi and sigma agree somewhere, i.e. pi sigma^-1 has a fixed point.
inline bool is_intersecting(const Permutation& pi, const Permutation& sigma) {
    if (pi.degree() != sigma.degree()) throw std::invalid_argument("degree mismatch");
    for (int x = 0; x < pi.degree(); ++x)
        if (pi(x) == sigma(x)) return true;
    return false;
}

}  // namespace ekr
