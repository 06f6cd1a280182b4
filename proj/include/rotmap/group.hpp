#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rotmap/errors.hpp"
#include "rotmap/permutation.hpp"

namespace rotmap {

// Default ceiling for brute-force closure. Generous for the desk-scale
// groups handled here (largest verified instance has 500 elements).
inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

// A finitely generated permutation group, enumerated by breadth-first
// closure of the generators under composition. No Schreier-Sims machinery:
// at these sizes the exact element set doubles as the oracle for every
// order claim.
class GeneratedGroup {
public:
    GeneratedGroup(int degree, std::vector<Permutation> generators)
        : degree_(degree), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (g.degree() != degree_)
                throw DegreeMismatch("generator degree does not match group degree");
    }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    bool enumerated() const { return enumerated_; }

    // BFS closure; the final element set is sorted so that iteration order
    // is deterministic regardless of generator order.
    void enumerate(std::size_t cap = kDefaultEnumerationCap) {
        if (enumerated_) return;
        if (cap < 1) throw ParameterError("enumeration cap must be >= 1");
        std::unordered_set<Permutation, PermutationHash> seen;
        std::vector<Permutation> frontier;
        seen.insert(Permutation::identity(degree_));
        frontier.push_back(Permutation::identity(degree_));
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& x : frontier) {
                for (const auto& g : generators_) {
                    Permutation y = compose(x, g);
                    if (seen.insert(y).second) {
                        if (seen.size() > cap)
                            throw CapExceeded("group closure exceeded cap of " + std::to_string(cap));
                        next.push_back(std::move(y));
                    }
                }
            }
            frontier = std::move(next);
        }
        elements_.assign(seen.begin(), seen.end());
        std::sort(elements_.begin(), elements_.end());
        enumerated_ = true;
    }

    const std::vector<Permutation>& elements() const {
        require_enumerated();
        return elements_;
    }

    std::size_t order() const {
        require_enumerated();
        return elements_.size();
    }

    bool contains(const Permutation& p) const {
        require_enumerated();
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

    // All elements fixing both endpoints of the arc from -> to.
    std::vector<Permutation> stabilizer_of_arc(int from, int to) const {
        require_enumerated();
        std::vector<Permutation> stab;
        for (const auto& g : elements_)
            if (g(from) == from && g(to) == to) stab.push_back(g);
        return stab;
    }

private:
    void require_enumerated() const {
        if (!enumerated_) throw NotEnumerated("group has not been enumerated");
    }

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    bool enumerated_ = false;
};

// True iff r^-1 * x * r = x^-1, i.e. conjugation by r inverts x.
inline bool is_inverted_by(const Permutation& x, const Permutation& r) {
    if (x.degree() != r.degree())
        throw DegreeMismatch("is_inverted_by: degree mismatch");
    return compose(compose(r.inverse(), x), r) == x.inverse();
}

}  // namespace rotmap
