#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "galois/group.hpp"
#include "galois/parallel.hpp"

using namespace galois;

namespace {

// Oracle: all subgroups by exhaustive subset scan (orders <= 16 or so).
std::vector<std::vector<int>> subgroups_by_subset_scan(const FiniteGroup& g) {
    const int n = g.order();
    REQUIRE(n <= 16);
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        if (!(mask & (1ul << g.identity()))) continue;
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) elems.push_back(i);
        if (is_subgroup(g, elems)) out.push_back(elems);
    }
    return out;
}

// Oracle: all homomorphisms by scanning every function G -> H.
std::vector<std::vector<int>> homs_by_function_scan(const FiniteGroup& g, const FiniteGroup& h,
                                                    bool surjective_only) {
    const int n = g.order(), m = h.order();
    REQUIRE(n * m <= 64);
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, 0);
    while (true) {
        GroupHom hom{g, h, f};
        if (hom.is_hom() && (!surjective_only || hom.is_surjective())) out.push_back(f);
        int i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Oracle: embedding property by direct triple enumeration over the hom lists.
bool embedding_property_oracle(const FiniteGroup& g) {
    const auto normals = normal_subgroups(g);
    std::vector<FiniteGroup> quots;
    for (const auto& n : normals) quots.push_back(quotient(g, n).first);
    for (const auto& a : quots)
        for (const auto& b : quots) {
            auto fs = homomorphisms(g, a, true);
            auto gs = homomorphisms(b, a, true);
            auto hs = homomorphisms(g, b, true);
            for (const auto& f : fs)
                for (const auto& g0 : gs) {
                    bool found = false;
                    for (const auto& h0 : hs)
                        if (g0.compose_after(h0).images == f.images) {
                            found = true;
                            break;
                        }
                    if (!found) return false;
                }
        }
    return true;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("table constructors verify group laws") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvariantError);
    CHECK(FiniteGroup::cyclic(1).order() == 1);
    CHECK(FiniteGroup::symmetric(3).order() == 6);
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK(FiniteGroup::quaternion8().order() == 8);
    CHECK(FiniteGroup::dicyclic(3).order() == 12);
    CHECK(FiniteGroup::abelian({2, 4}).order() == 8);
}

TEST_CASE("normal subgroups: trivial group") {
    auto ns = normal_subgroups(FiniteGroup::trivial());
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].size() == 1);
}

TEST_CASE("normal subgroups: C4 has 3, sizes 1,2,4") {
    auto ns = normal_subgroups(FiniteGroup::cyclic(4));
    REQUIRE(ns.size() == 3);
    CHECK(ns[0].size() == 1);
    CHECK(ns[1].size() == 2);
    CHECK(ns[2].size() == 4);
}

TEST_CASE("normal subgroups: S3 = {1, A3, S3}") {
    auto g = FiniteGroup::symmetric(3);
    auto ns = normal_subgroups(g);
    REQUIRE(ns.size() == 3);
    CHECK(ns[0].size() == 1);
    CHECK(ns[1].size() == 3);
    CHECK(ns[2].size() == 6);
}

TEST_CASE("normal subgroups agree with subset-scan oracle") {
    for (const auto& g : {FiniteGroup::cyclic(8), FiniteGroup::symmetric(3),
                          FiniteGroup::dihedral(4), FiniteGroup::abelian({2, 2, 2}),
                          FiniteGroup::quaternion8(), FiniteGroup::dicyclic(3)}) {
        auto oracle_subs = subgroups_by_subset_scan(g);
        std::vector<std::vector<int>> oracle_normals;
        for (const auto& s : oracle_subs)
            if (is_normal(g, NormalSubgroup{s})) oracle_normals.push_back(s);
        std::sort(oracle_normals.begin(), oracle_normals.end(),
                  [](const auto& a, const auto& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a < b;
                  });
        auto got = normal_subgroups(g);
        REQUIRE(got.size() == oracle_normals.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].elements == oracle_normals[i]);

        auto all = all_subgroups(g);
        CHECK(all.size() == oracle_subs.size());
    }
}

TEST_CASE("quotient identity cases") {
    auto g = FiniteGroup::symmetric(3);
    auto ns = normal_subgroups(g);
    auto [q1, p1] = quotient(g, ns[0]);  // by {1}
    CHECK(q1.order() == g.order());
    CHECK(p1.is_injective());
    auto [qg, pg] = quotient(g, ns.back());  // by G
    CHECK(qg.order() == 1);
}

TEST_CASE("quotient C4 by order-2 subgroup is C2") {
    auto g = FiniteGroup::cyclic(4);
    auto ns = normal_subgroups(g);
    REQUIRE(ns[1].size() == 2);
    auto [q, p] = quotient(g, ns[1]);
    CHECK(q.order() == 2);
    CHECK(p.is_hom());
    CHECK(p.is_surjective());
    CHECK(p.kernel().elements == ns[1].elements);
}

TEST_CASE("quotient rejects non-normal subgroup") {
    auto g = FiniteGroup::symmetric(3);
    // a transposition generates a non-normal order-2 subgroup
    NormalSubgroup h;
    for (int x = 0; x < 6; ++x)
        if (x != g.identity() && g.mul(x, x) == g.identity()) {
            h.elements = {g.identity(), x};
            break;
        }
    CHECK_THROWS_AS(quotient(g, h), InvariantError);
}

TEST_CASE("homomorphism counts: spec examples") {
    auto c4 = FiniteGroup::cyclic(4);
    auto c2 = FiniteGroup::cyclic(2);
    auto v4 = FiniteGroup::abelian({2, 2});
    CHECK(homomorphisms(c4, c2, true).size() == 1);
    CHECK(homomorphisms(c2, c4, true).empty());
    CHECK(homomorphisms(v4, c2, true).size() == 3);
}

TEST_CASE("homomorphisms agree with the full-function oracle") {
    const std::vector<std::pair<FiniteGroup, FiniteGroup>> pairs = {
        {FiniteGroup::cyclic(4), FiniteGroup::cyclic(4)},
        {FiniteGroup::cyclic(6), FiniteGroup::symmetric(3)},
        {FiniteGroup::symmetric(3), FiniteGroup::symmetric(3)},
        {FiniteGroup::abelian({2, 2}), FiniteGroup::abelian({2, 2})},
        {FiniteGroup::dihedral(4), FiniteGroup::cyclic(2)},
        {FiniteGroup::cyclic(8), FiniteGroup::abelian({2, 4})},
    };
    for (const auto& [g, h] : pairs) {
        for (bool surj : {false, true}) {
            auto got = homomorphisms(g, h, surj);
            std::vector<std::vector<int>> got_imgs;
            for (const auto& hom : got) {
                CHECK(hom.is_hom());
                got_imgs.push_back(hom.images);
            }
            auto want = homs_by_function_scan(g, h, surj);
            CHECK(got_imgs == want);
        }
    }
}

TEST_CASE("parallel and serial hom enumeration agree") {
    auto g = FiniteGroup::dihedral(6);
    auto h = FiniteGroup::symmetric(3);
    par::set_enabled(false);
    auto serial = homomorphisms(g, h, false);
    par::set_enabled(true);
    auto parallel = homomorphisms(g, h, false);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].images == parallel[i].images);
}

TEST_CASE("embedding property: trivial and cyclic groups are true") {
    CHECK(has_embedding_property(FiniteGroup::trivial()).has_property);
    CHECK(has_embedding_property(FiniteGroup::cyclic(4)).has_property);
    for (int n = 1; n <= 24; ++n)
        CHECK(has_embedding_property(FiniteGroup::cyclic(n)).has_property);
}

TEST_CASE("embedding property: C2xC4 fails with verified witness") {
    auto g = FiniteGroup::abelian({2, 4});
    auto rep = has_embedding_property(g);
    REQUIRE_FALSE(rep.has_property);
    REQUIRE(rep.counterexample.has_value());
    const auto& [f, g0] = *rep.counterexample;
    CHECK(f.is_hom());
    CHECK(f.is_surjective());
    CHECK(g0.is_hom());
    CHECK(g0.is_surjective());
    // the witness really has no h: exhaust all epimorphisms G -> B
    auto hs = homomorphisms(g, g0.domain, true);
    for (const auto& h : hs) CHECK(g0.compose_after(h).images != f.images);
}

TEST_CASE("embedding property agrees with the exhaustive oracle") {
    for (const auto& g : {FiniteGroup::cyclic(6), FiniteGroup::symmetric(3),
                          FiniteGroup::abelian({2, 4}), FiniteGroup::abelian({2, 2}),
                          FiniteGroup::quaternion8(), FiniteGroup::dihedral(4)}) {
        CHECK(has_embedding_property(g).has_property == embedding_property_oracle(g));
        CHECK(has_embedding_property_serial(g).has_property ==
              has_embedding_property(g).has_property);
    }
}

TEST_CASE("embedding property is isomorphism-invariant") {
    std::mt19937_64 rng(20240817);
    for (const auto& g : {FiniteGroup::abelian({2, 4}), FiniteGroup::symmetric(3),
                          FiniteGroup::cyclic(12), FiniteGroup::dihedral(4)}) {
        const bool want = has_embedding_property(g).has_property;
        for (int t = 0; t < 3; ++t) {
            auto copy = g.relabeled(random_permutation(g.order(), rng));
            CHECK(has_embedding_property(copy).has_property == want);
        }
    }
}

TEST_CASE("caps produce resource errors") {
    Caps caps;
    caps.max_group_order = 4;
    CHECK_THROWS_AS(normal_subgroups(FiniteGroup::cyclic(8), caps), ResourceError);
    caps.max_ep_order = 4;
    CHECK_THROWS_AS(has_embedding_property(FiniteGroup::cyclic(8), caps), ResourceError);
}
