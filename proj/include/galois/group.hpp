#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois/errors.hpp"

namespace galois {

// A finite group as a closed multiplication table on {0..order-1}.
// Immutable after construction; handles are cheap to copy and safe to share
// between threads.
class FiniteGroup {
public:
    FiniteGroup() = default;

    // Builds from a full Cayley table; verifies closure, associativity,
    // identity and inverses exhaustively.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::string name = "");

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    // Direct product of cyclic groups of the given orders.
    static FiniteGroup abelian(const std::vector<int>& orders);
    static FiniteGroup dihedral(int n);   // order 2n, n >= 1
    static FiniteGroup symmetric(int n);  // order n!, n <= 6
    static FiniteGroup quaternion8();
    static FiniteGroup dicyclic(int n);  // order 4n (n=2 gives Q8)
    // Group generated by permutations of {0..degree-1}; expands to a table.
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         std::string name = "");
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return d_ ? static_cast<int>(d_->n) : 0; }
    int mul(int a, int b) const { return d_->mul[static_cast<size_t>(a) * d_->n + b]; }
    int inv(int a) const { return d_->inv[a]; }
    int identity() const { return d_->id; }
    int conj(int g, int x) const { return mul(mul(inv(g), x), g); }
    int element_order(int a) const;
    const std::string& name() const { return d_->name; }

    bool same_object(const FiniteGroup& o) const { return d_ == o.d_; }
    // Structural equality of tables (not isomorphism).
    bool same_table(const FiniteGroup& o) const;

    bool valid() const { return static_cast<bool>(d_); }

    // Deterministic small generating set (greedy, smallest indices first).
    std::vector<int> generating_set() const;

    // Relabels elements by perm (new index = perm[old index]); used by the
    // isomorphism-invariance property tests.
    FiniteGroup relabeled(const std::vector<int>& perm, std::string name = "") const;

private:
    struct Data {
        size_t n = 0;
        std::vector<uint16_t> mul;
        std::vector<uint16_t> inv;
        int id = 0;
        std::string name;
    };
    std::shared_ptr<const Data> d_;
    static FiniteGroup wrap(Data d);
};

// A subgroup handle; `elements` is sorted. Normality relative to the parent
// is checked where the operations require it.
struct NormalSubgroup {
    std::vector<int> elements;

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
    bool operator==(const NormalSubgroup& o) const { return elements == o.elements; }
    bool operator<(const NormalSubgroup& o) const;  // (size, lexicographic)
};

// A homomorphism given by its total image map.
struct GroupHom {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<int> images;  // size = |domain|

    int apply(int g) const { return images[g]; }
    bool is_hom() const;
    bool is_surjective() const;
    bool is_injective() const;
    NormalSubgroup kernel() const;
    std::vector<int> image_set() const;  // sorted

    static GroupHom identity(const FiniteGroup& g);
    // this \circ inner (apply inner first).
    GroupHom compose_after(const GroupHom& inner) const;
    bool operator==(const GroupHom& o) const { return images == o.images; }
};

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);
bool is_normal(const FiniteGroup& g, const NormalSubgroup& n);
NormalSubgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed);
NormalSubgroup normal_closure(const FiniteGroup& g, const std::vector<int>& seed);

// All normal subgroups, each once, sorted by (size, elements).
std::vector<NormalSubgroup> normal_subgroups(const FiniteGroup& g, const Caps& caps = {});

// All subgroups (used as a test oracle and by the subgroup lattice).
std::vector<NormalSubgroup> all_subgroups(const FiniteGroup& g, const Caps& caps = {});

// Quotient G/N with canonical coset labels (cosets ordered by their smallest
// member) and the natural projection, verified to be an epimorphism.
std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const NormalSubgroup& n);

// Complete, duplicate-free, canonically ordered list of homomorphisms G -> H.
// Enumerates generator images with order/consistency pruning; the OpenMP
// kernel splits on the first generator's candidate images.
std::vector<GroupHom> homomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                    bool surjective_only, const Caps& caps = {});

std::vector<GroupHom> automorphisms(const FiniteGroup& g, const Caps& caps = {});

// Witness for a failed embedding-property check: f:G->A and g:B->A with no
// epimorphism h:G->B satisfying f = g.h.
struct EmbeddingCounterexample {
    GroupHom f;
    GroupHom g;
};

struct EmbeddingReport {
    bool has_property = false;
    std::optional<EmbeddingCounterexample> counterexample;
};

// Finite-group embedding property: for all epimorphisms f:G->A, g:B->A with
// A, B quotients of G there is an epimorphism h:G->B with f = g.h.
EmbeddingReport has_embedding_property(const FiniteGroup& g, const Caps& caps = {});
// Serial reference implementation (same result, no parallel kernel).
EmbeddingReport has_embedding_property_serial(const FiniteGroup& g, const Caps& caps = {});

}  // namespace galois
