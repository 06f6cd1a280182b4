#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rotmap/errors.hpp"
#include "rotmap/indexing.hpp"
#include "rotmap/permutation.hpp"

namespace rotmap {

// Element of the dihedral group D_n in the canonical form r^k z^e with
// 0 <= k < n and e in {0,1}, where r is the n-cycle (1 2 ... n) and z is
// the reflection fixing 1 and swapping j <-> n-j+2. Normalisation uses
// z r = r^-1 z, so equality and hashing are structural.
class DihedralPart {
public:
    DihedralPart(int n, int rotation, bool reflected)
        : n_(n), rot_(0), refl_(reflected) {
        if (n < 3) throw ParameterError("dihedral degree must be >= 3");
        rot_ = ((rotation % n) + n) % n;
    }

    static DihedralPart identity(int n) { return DihedralPart(n, 0, false); }
    static DihedralPart rotation(int n, int k = 1) { return DihedralPart(n, k, false); }
    static DihedralPart reflection(int n) { return DihedralPart(n, 0, true); }

    int n() const { return n_; }
    int rot() const { return rot_; }
    bool reflected() const { return refl_; }
    bool is_identity() const { return rot_ == 0 && !refl_; }

    // Image of a point in 1..n: apply r^k first, then z^e.
    int apply(int point) const {
        int q = mod1(point + rot_, n_);
        if (refl_) q = (q == 1) ? 1 : n_ - q + 2;
        return q;
    }

    // (r^k1 z^e1)(r^k2 z^e2) = r^(k1 + (-1)^e1 k2) z^(e1 xor e2)
    friend DihedralPart compose(const DihedralPart& a, const DihedralPart& b) {
        if (a.n_ != b.n_) throw DegreeMismatch("dihedral compose: degree mismatch");
        const int k = a.refl_ ? a.rot_ - b.rot_ : a.rot_ + b.rot_;
        return DihedralPart(a.n_, k, a.refl_ != b.refl_);
    }

    DihedralPart inverse() const {
        // reflections are involutions; rotations invert the exponent
        return refl_ ? *this : DihedralPart(n_, -rot_, false);
    }

    Permutation to_permutation() const {
        std::vector<int> img(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i) img[static_cast<std::size_t>(i) - 1] = apply(i);
        return Permutation::from_images(img);
    }

    friend bool operator==(const DihedralPart& a, const DihedralPart& b) {
        return a.n_ == b.n_ && a.rot_ == b.rot_ && a.refl_ == b.refl_;
    }
    friend bool operator!=(const DihedralPart& a, const DihedralPart& b) { return !(a == b); }

private:
    int n_;
    int rot_;
    bool refl_;
};

// Element (alpha_1, ..., alpha_n) x of S_m wr D_n, with alpha_i in S_m and
// x in D_n. The action on the mn vertices is (i,j) -> (i x, j alpha_i);
// products follow by pushing the dihedral part across the alpha vector:
//   (alpha) x (beta) y = (gamma) xy   with gamma_i = alpha_i * beta_{i x}.
class WreathElement {
public:
    WreathElement(std::vector<Permutation> alphas, DihedralPart dih)
        : alphas_(std::move(alphas)), dih_(dih) {
        if (static_cast<int>(alphas_.size()) != dih_.n())
            throw ParameterError("alpha vector length must equal n");
        if (alphas_.empty()) throw ParameterError("empty alpha vector");
        m_ = alphas_.front().degree();
        for (const auto& a : alphas_)
            if (a.degree() != m_) throw DegreeMismatch("alpha degrees differ");
    }

    static WreathElement identity(int m, int n) {
        return WreathElement(std::vector<Permutation>(static_cast<std::size_t>(n), Permutation::identity(m)),
                             DihedralPart::identity(n));
    }

    int m() const { return m_; }
    int n() const { return dih_.n(); }
    const DihedralPart& dih() const { return dih_; }
    const std::vector<Permutation>& alphas() const { return alphas_; }

    // 1-based coordinate access.
    const Permutation& alpha(int i) const { return alphas_[static_cast<std::size_t>(i) - 1]; }

    bool is_identity() const {
        if (!dih_.is_identity()) return false;
        for (const auto& a : alphas_)
            if (!a.is_identity()) return false;
        return true;
    }

    friend WreathElement wr_mul(const WreathElement& a, const WreathElement& b) {
        if (a.m_ != b.m_ || a.n() != b.n())
            throw DegreeMismatch("wr_mul: parameter mismatch");
        const int n = a.n();
        std::vector<Permutation> gamma;
        gamma.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            gamma.push_back(compose(a.alpha(i), b.alpha(a.dih_.apply(i))));
        return WreathElement(std::move(gamma), compose(a.dih_, b.dih_));
    }

    // ((alpha) x)^-1 = (beta) x^-1 with beta_i = alpha_{i x^-1}^-1.
    WreathElement inverse() const {
        const DihedralPart xi = dih_.inverse();
        std::vector<Permutation> beta;
        beta.reserve(alphas_.size());
        for (int i = 1; i <= n(); ++i) beta.push_back(alpha(xi.apply(i)).inverse());
        return WreathElement(std::move(beta), xi);
    }

    WreathElement pow(long long k) const {
        WreathElement base = k >= 0 ? *this : inverse();
        if (k < 0) k = -k;
        WreathElement acc = identity(m_, n());
        while (k > 0) {
            if (k & 1) acc = wr_mul(acc, base);
            base = wr_mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    // Permutation of the mn vertices under the fixed packing of
    // indexing.hpp; this is an injective homomorphism.
    Permutation to_vertex_perm() const {
        const int mm = m_, nn = n();
        std::vector<int> img(static_cast<std::size_t>(mm) * static_cast<std::size_t>(nn));
        for (int i = 1; i <= nn; ++i) {
            const int ix = dih_.apply(i);
            const Permutation& ai = alpha(i);
            for (int j = 1; j <= mm; ++j)
                img[static_cast<std::size_t>(vertex_id(i, j, mm)) - 1] = vertex_id(ix, ai(j), mm);
        }
        return Permutation::from_images(img);
    }

    long long order() const { return to_vertex_perm().order(); }

    friend bool operator==(const WreathElement& a, const WreathElement& b) {
        return a.m_ == b.m_ && a.dih_ == b.dih_ && a.alphas_ == b.alphas_;
    }
    friend bool operator!=(const WreathElement& a, const WreathElement& b) { return !(a == b); }

private:
    int m_ = 0;
    std::vector<Permutation> alphas_;
    DihedralPart dih_;
};

struct StandardGenerators {
    Permutation c;   // m-cycle (1 2 ... m)
    Permutation t;   // fixes 1, swaps j <-> m-j+2
    DihedralPart r;  // n-cycle in D_n
    DihedralPart z;  // reflection fixing 1
};

inline StandardGenerators standard_generators(int m, int n) {
    if (m < 3 || m % 2 == 0) throw ParameterError("m must be an odd integer >= 3");
    if (n < 3) throw ParameterError("n must be >= 3");
    std::vector<int> cimg(static_cast<std::size_t>(m)), timg(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        cimg[static_cast<std::size_t>(j) - 1] = mod1(j + 1, m);
        timg[static_cast<std::size_t>(j) - 1] = (j == 1) ? 1 : m - j + 2;
    }
    return StandardGenerators{Permutation::from_images(cimg), Permutation::from_images(timg),
                              DihedralPart::rotation(n), DihedralPart::reflection(n)};
}

// ell_i = 1 + 1 + 2 + ... + (i-2) = 1 + (i-2)(i-1)/2, reduced mod m.
inline int ell(long long i, int modulus) {
    if (i < 2) throw ParameterError("ell is defined for i >= 2");
    if (modulus < 1) throw ParameterError("ell modulus must be positive");
    const long long v = 1 + (i - 2) * (i - 1) / 2;
    return static_cast<int>(v % modulus);
}

}  // namespace rotmap
