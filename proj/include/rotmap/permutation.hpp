#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rotmap/errors.hpp"

namespace rotmap {

// Exact bijection on the points 1..N.
//
// Convention (used throughout): permutations act on the right and compose
// left-to-right, i.e. compose(a, b) maps i to b(a(i)) -- "apply a first".
// Conjugation x^y means y^-1 * x * y.
class Permutation {
public:
    Permutation() = default;

    // Identity on n points.
    explicit Permutation(int n) : img_(static_cast<std::size_t>(n) + 1) {
        if (n < 0) throw ParameterError("permutation degree must be >= 0");
        std::iota(img_.begin(), img_.end(), 0);
    }

    static Permutation identity(int n) { return Permutation(n); }

    // images[k] is the image of point k+1 (values in 1..N).
    static Permutation from_images(const std::vector<int>& images) {
        const int n = static_cast<int>(images.size());
        Permutation p(n);
        std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
        for (int i = 1; i <= n; ++i) {
            const int v = images[static_cast<std::size_t>(i) - 1];
            if (v < 1 || v > n || hit[static_cast<std::size_t>(v)])
                throw ParameterError("image table is not a bijection of 1..N");
            hit[static_cast<std::size_t>(v)] = true;
            p.img_[static_cast<std::size_t>(i)] = v;
        }
        return p;
    }

    // Cycle notation constructor; points absent from every cycle are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p(n);
        for (const auto& cyc : cycles) {
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                const int a = cyc[k];
                const int b = cyc[(k + 1) % cyc.size()];
                if (a < 1 || a > n || b < 1 || b > n)
                    throw ParameterError("cycle entry out of range");
                p.img_[static_cast<std::size_t>(a)] = b;
            }
        }
        // reject overlapping cycles / repeated points
        std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
        for (int i = 1; i <= n; ++i) {
            const int v = p.img_[static_cast<std::size_t>(i)];
            if (hit[static_cast<std::size_t>(v)])
                throw ParameterError("cycles overlap");
            hit[static_cast<std::size_t>(v)] = true;
        }
        return p;
    }

    int degree() const { return static_cast<int>(img_.size()) - 1; }

    // Image of a point (1-based).
    int operator()(int point) const { return img_[static_cast<std::size_t>(point)]; }

    bool is_identity() const {
        for (int i = 1; i <= degree(); ++i)
            if (img_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation r(degree());
        for (int i = 1; i <= degree(); ++i)
            r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
        return r;
    }

    // Least k >= 1 with p^k = identity: lcm of the cycle lengths.
    long long order() const {
        const int n = degree();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        long long ord = 1;
        for (int i = 1; i <= n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            long long len = 0;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    Permutation pow(long long k) const;

    // Nontrivial cycles, each rotated to start at its least point.
    std::vector<std::vector<int>> cycles() const {
        const int n = degree();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        std::vector<std::vector<int>> out;
        for (int i = 1; i <= n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                cyc.push_back(j);
            }
            if (cyc.size() > 1) out.push_back(std::move(cyc));
        }
        return out;
    }

    std::string to_string() const {
        const auto cyc = cycles();
        if (cyc.empty()) return "()";
        std::ostringstream os;
        for (const auto& c : cyc) {
            os << '(';
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (k) os << ' ';
                os << c[k];
            }
            os << ')';
        }
        return os.str();
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    // compose(a, b): i -> b(a(i)).
    friend Permutation compose(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree())
            throw DegreeMismatch("compose: degree mismatch");
        Permutation r(a.degree());
        for (int i = 1; i <= a.degree(); ++i)
            r.img_[static_cast<std::size_t>(i)] =
                b.img_[static_cast<std::size_t>(a.img_[static_cast<std::size_t>(i)])];
        return r;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int v : img_) {
            h ^= static_cast<std::size_t>(v);
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    std::vector<int> img_;  // img_[0] unused, img_[i] = image of i
};

inline Permutation Permutation::pow(long long k) const {
    Permutation base = k >= 0 ? *this : inverse();
    if (k < 0) k = -k;
    Permutation acc(degree());
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

inline long long order_of(const Permutation& p) { return p.order(); }

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace rotmap
