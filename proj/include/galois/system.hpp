#pragma once

#include <map>
#include <optional>
#include <vector>

#include "galois/group.hpp"

namespace galois {

// An element of S(G): a coset at one level (= one normal subgroup).
struct SystemElement {
    int level = -1;
    int coset = -1;

    bool operator==(const SystemElement& o) const = default;
    auto operator<=>(const SystemElement& o) const = default;
};

// The finite-level complete system of a finite group: one level per normal
// subgroup N, carrying the quotient G/N, with the relations <=, C, P and
// per-element sorts. Immutable after build; queries are pure.
class CompleteSystem {
public:
    static CompleteSystem build(const FiniteGroup& g, const Caps& caps = {});

    const FiniteGroup& source() const { return source_; }
    int level_count() const { return static_cast<int>(kernels_.size()); }
    const NormalSubgroup& kernel(int level) const { return kernels_[level]; }
    const FiniteGroup& level_group(int level) const { return quotients_[level]; }
    const GroupHom& projection(int level) const { return projections_[level]; }
    int level_of_kernel(const NormalSubgroup& n) const;  // -1 if absent

    int size() const { return total_; }  // number of elements of S(G)
    std::vector<SystemElement> elements() const;  // canonical order
    bool valid(const SystemElement& x) const;
    SystemElement one() const { return SystemElement{top_level_, 0}; }

    // Minimal sort of an element (= order of its level's quotient); the
    // element belongs to every sort n with sort(x) <= n.
    int sort(const SystemElement& x) const;
    bool has_sort(const SystemElement& x, int n) const { return sort(x) <= n; }

    bool leq(const SystemElement& x, const SystemElement& y) const;
    bool rel_c(const SystemElement& x, const SystemElement& y) const;
    bool rel_p(const SystemElement& x, const SystemElement& y, const SystemElement& z) const;

    // Kernel inclusion and coset restriction between levels.
    bool level_leq(int fine, int coarse) const { return leq_[fine][coarse]; }
    int restrict_coset(int fine, int coarse, int coset) const;
    SystemElement restrict_to(const SystemElement& x, int coarse) const;

    // The ~-class of x: the quotient group at x's level plus x's position.
    std::pair<FiniteGroup, int> sim_class(const SystemElement& x) const;

    SystemElement join(const SystemElement& x, const SystemElement& y) const;
    SystemElement meet(const SystemElement& x, const SystemElement& y) const;
    int join_level(int a, int b) const;  // level of N_a N_b
    int meet_level(int a, int b) const;  // level of N_a /\ N_b

    SystemElement conjugation_act(int g, const SystemElement& x) const;

    // Index set I(tau) = { j : C(class_elements[j], tau) } for an enumeration
    // of one full ~-class and tau >= class_elements[0].
    std::vector<int> unique_index_set(const std::vector<SystemElement>& class_elements,
                                      const SystemElement& tau) const;

private:
    FiniteGroup source_;
    std::vector<NormalSubgroup> kernels_;
    std::vector<FiniteGroup> quotients_;
    std::vector<GroupHom> projections_;
    std::vector<std::vector<char>> leq_;
    // restrict_[fine][coarse]: coset map, empty unless leq_[fine][coarse]
    std::vector<std::vector<std::vector<int>>> restrict_;
    std::map<std::vector<int>, int> level_index_;
    int top_level_ = -1;  // level of N = G (the constant 1)
    int total_ = 0;
};

// A subsystem: upward-closed, downward-directed set of levels. In the finite
// case this is exactly the upward closure of a unique minimal level.
struct Subsystem {
    const CompleteSystem* parent = nullptr;
    std::vector<int> levels;  // sorted level ids
    int min_level = -1;

    bool contains_level(int level) const;
    std::vector<SystemElement> elements() const;
};

Subsystem full_subsystem(const CompleteSystem& s);
Subsystem trivial_subsystem(const CompleteSystem& s);
Subsystem generated_subsystem(const CompleteSystem& s, const std::vector<SystemElement>& a);

SystemElement join_with_subsystem(const CompleteSystem& s, const SystemElement& alpha,
                                  const Subsystem& a);

// The dual group of a subsystem: G/N0 for the minimal level N0, plus the
// natural projection from the source group.
std::pair<FiniteGroup, GroupHom> dual_group(const Subsystem& s);

// The embedding S(H) -> S(G) dual to an epimorphism pi: G -> H. Preserves
// sorts, 1, <=, C, P; its image is the subsystem of levels containing ker pi.
struct DualEmbedding {
    CompleteSystem domain;  // S(H)
    const CompleteSystem* target = nullptr;
    std::vector<int> level_map;                // S(H) level -> S(G) level
    std::vector<std::vector<int>> coset_map;   // per S(H) level

    SystemElement apply(const SystemElement& x) const {
        return SystemElement{level_map[x.level], coset_map[x.level][x.coset]};
    }
    Subsystem image() const;
};

DualEmbedding dual_embedding(const CompleteSystem& target, const GroupHom& pi,
                             const Caps& caps = {});

// Type-equality criterion for tuples in a single ~-class each, over a
// subsystem S, for systems of groups with the embedding property: checks
// gamma v S = beta v S =: delta and searches an isomorphism f with
// f(beta)=gamma that induces the identity on [delta].
struct TypesEqualResult {
    bool equal = false;
    // witness: images of the class group of beta into the class group of
    // gamma (element map), when equal
    std::vector<int> witness;
};

TypesEqualResult types_equal(const CompleteSystem& s, const std::vector<SystemElement>& beta,
                             const std::vector<SystemElement>& gamma, const Subsystem& sub);

}  // namespace galois
