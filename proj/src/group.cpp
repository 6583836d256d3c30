#include "galois/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "galois/parallel.hpp"

namespace galois {

namespace {

void verify_table(const FiniteGroup& g) {
    const int n = g.order();
    // identity and inverses are computed during wrap(); here we check the
    // group laws exhaustively since orders stay desk-scale.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = g.mul(a, b);
            if (ab < 0 || ab >= n) throw InvariantError("multiplication table not closed");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw InvariantError("multiplication table not associative");
}

int find_identity(const std::vector<uint16_t>& mul, size_t n) {
    for (size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (size_t a = 0; a < n && ok; ++a)
            ok = mul[e * n + a] == a && mul[a * n + e] == a;
        if (ok) return static_cast<int>(e);
    }
    throw InvariantError("no identity element");
}

}  // namespace

FiniteGroup FiniteGroup::wrap(Data d) {
    d.id = find_identity(d.mul, d.n);
    d.inv.assign(d.n, 0);
    for (size_t a = 0; a < d.n; ++a) {
        bool found = false;
        for (size_t b = 0; b < d.n; ++b)
            if (d.mul[a * d.n + b] == static_cast<uint16_t>(d.id) &&
                d.mul[b * d.n + a] == static_cast<uint16_t>(d.id)) {
                d.inv[a] = static_cast<uint16_t>(b);
                found = true;
                break;
            }
        if (!found) throw InvariantError("element without two-sided inverse");
    }
    FiniteGroup g;
    g.d_ = std::make_shared<const Data>(std::move(d));
    verify_table(g);
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::string name) {
    const size_t n = table.size();
    if (n == 0 || n > 1024) throw UsageError("group order must be in 1..1024");
    Data d;
    d.n = n;
    d.name = std::move(name);
    d.mul.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw UsageError("multiplication table not square");
        for (size_t j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= static_cast<int>(n))
                throw UsageError("table entry out of range");
            d.mul[i * n + j] = static_cast<uint16_t>(table[i][j]);
        }
    }
    return wrap(std::move(d));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw UsageError("cyclic group order must be positive");
    Data d;
    d.n = static_cast<size_t>(n);
    d.name = "C" + std::to_string(n);
    d.mul.assign(d.n * d.n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d.mul[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>((a + b) % n);
    return wrap(std::move(d));
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& orders) {
    if (orders.empty()) return trivial();
    FiniteGroup g = cyclic(orders[0]);
    for (size_t i = 1; i < orders.size(); ++i) g = direct_product(g, cyclic(orders[i]));
    std::string nm = "C" + std::to_string(orders[0]);
    for (size_t i = 1; i < orders.size(); ++i) nm += "xC" + std::to_string(orders[i]);
    Data d;
    d.n = static_cast<size_t>(g.order());
    d.name = nm;
    d.mul.assign(d.n * d.n, 0);
    for (size_t a = 0; a < d.n; ++a)
        for (size_t b = 0; b < d.n; ++b) d.mul[a * d.n + b] = static_cast<uint16_t>(g.mul(static_cast<int>(a), static_cast<int>(b)));
    return wrap(std::move(d));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order();
    if (static_cast<long>(na) * nb > 1024) throw ResourceError("direct product exceeds order cap 1024");
    Data d;
    d.n = static_cast<size_t>(na) * nb;
    d.name = a.name() + "x" + b.name();
    d.mul.assign(d.n * d.n, 0);
    auto idx = [nb](int x, int y) { return x * nb + y; };
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    d.mul[static_cast<size_t>(idx(x1, y1)) * d.n + idx(x2, y2)] =
                        static_cast<uint16_t>(idx(a.mul(x1, x2), b.mul(y1, y2)));
    return wrap(std::move(d));
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& generators,
                                           std::string name) {
    if (degree < 1 || degree > 16) throw UsageError("permutation degree must be in 1..16");
    using Perm = std::vector<int>;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree) throw UsageError("generator length != degree");
        Perm s = p;
        std::sort(s.begin(), s.end());
        if (s != id) throw UsageError("generator is not a permutation of 0..degree-1");
    }
    // Expand to the full element list by closure.
    std::set<Perm> seen{id};
    std::vector<Perm> elems{id};
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : generators) {
            Perm prod(degree);
            for (int k = 0; k < degree; ++k) prod[k] = elems[i][gen[k]];
            if (seen.insert(prod).second) {
                if (elems.size() >= 1024) throw ResourceError("permutation group exceeds order cap 1024");
                elems.push_back(prod);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    Data d;
    d.n = elems.size();
    d.name = std::move(name);
    d.mul.assign(d.n * d.n, 0);
    for (size_t i = 0; i < d.n; ++i)
        for (size_t j = 0; j < d.n; ++j) {
            Perm prod(degree);
            for (int k = 0; k < degree; ++k) prod[k] = elems[i][elems[j][k]];
            d.mul[i * d.n + j] = static_cast<uint16_t>(index.at(prod));
        }
    return wrap(std::move(d));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw UsageError("dihedral parameter must be positive");
    if (n == 1) return cyclic(2);
    if (n == 2) return abelian({2, 2});
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return from_permutations(n, {rot, refl}, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 6) throw UsageError("symmetric group degree must be in 1..6");
    if (n == 1) return trivial();
    std::vector<int> cyc(n), swp(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    std::iota(swp.begin(), swp.end(), 0);
    std::swap(swp[0], swp[1]);
    return from_permutations(n, {cyc, swp}, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::dicyclic(int n) {
    if (n < 2) throw UsageError("dicyclic parameter must be >= 2");
    // Presentation a^{2n}=1, b^2=a^n, b^-1 a b = a^-1, elements a^i b^j.
    const int order = 4 * n;
    auto idx = [n](int i, int j) { return j * 2 * n + i; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i1 = 0; i1 < 2 * n; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 2 * n; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (a^i1 b^j1)(a^i2 b^j2): move b^j1 past a^i2.
                    int i = j1 ? (i1 - i2 + 2 * n) % (2 * n) : (i1 + i2) % (2 * n);
                    int j = j1 + j2;
                    if (j == 2) {
                        i = (i + n) % (2 * n);
                        j = 0;
                    }
                    table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
    return from_table(table, "Dic" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion8() {
    FiniteGroup g = dicyclic(2);
    std::vector<int> id(g.order());
    std::iota(id.begin(), id.end(), 0);
    return g.relabeled(id, "Q8");
}

FiniteGroup FiniteGroup::relabeled(const std::vector<int>& perm, std::string name) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n) throw UsageError("relabeling size mismatch");
    Data d;
    d.n = static_cast<size_t>(n);
    d.name = name.empty() ? this->name() : std::move(name);
    d.mul.assign(d.n * d.n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d.mul[static_cast<size_t>(perm[a]) * n + perm[b]] = static_cast<uint16_t>(perm[mul(a, b)]);
    return wrap(std::move(d));
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != identity()) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::same_table(const FiniteGroup& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    return d_->n == o.d_->n && d_->mul == o.d_->mul;
}

std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> gens;
    NormalSubgroup cur = subgroup_closure(*this, {});
    while (cur.size() < order()) {
        int next = -1;
        for (int g = 0; g < order(); ++g)
            if (!cur.contains(g)) {
                next = g;
                break;
            }
        gens.push_back(next);
        std::vector<int> seed = cur.elements;
        seed.push_back(next);
        cur = subgroup_closure(*this, seed);
    }
    return gens;
}

bool NormalSubgroup::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

bool NormalSubgroup::operator<(const NormalSubgroup& o) const {
    if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
    return elements < o.elements;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
    if (elements.empty()) return false;
    std::vector<char> in(g.order(), 0);
    for (int e : elements) {
        if (e < 0 || e >= g.order()) return false;
        in[e] = 1;
    }
    if (!in[g.identity()]) return false;
    for (int a : elements) {
        if (!in[g.inv(a)]) return false;
        for (int b : elements)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& g, const NormalSubgroup& n) {
    if (!is_subgroup(g, n.elements)) return false;
    for (int x : n.elements)
        for (int h = 0; h < g.order(); ++h)
            if (!n.contains(g.conj(h, x))) return false;
    return true;
}

NormalSubgroup subgroup_closure(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> work{g.identity()};
    in[g.identity()] = 1;
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            work.push_back(s);
        }
    for (size_t i = 0; i < work.size(); ++i) {
        const int a = work[i];
        int ia = g.inv(a);
        if (!in[ia]) {
            in[ia] = 1;
            work.push_back(ia);
        }
        for (size_t j = 0; j < work.size(); ++j) {
            for (int prod : {g.mul(a, work[j]), g.mul(work[j], a)})
                if (!in[prod]) {
                    in[prod] = 1;
                    work.push_back(prod);
                }
        }
    }
    NormalSubgroup out;
    for (int e = 0; e < g.order(); ++e)
        if (in[e]) out.elements.push_back(e);
    return out;
}

NormalSubgroup normal_closure(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<int> cur = seed;
    while (true) {
        NormalSubgroup h = subgroup_closure(g, cur);
        std::vector<int> extra;
        for (int x : h.elements)
            for (int t = 0; t < g.order(); ++t) {
                int c = g.conj(t, x);
                if (!h.contains(c)) extra.push_back(c);
            }
        if (extra.empty()) return h;
        cur = h.elements;
        cur.insert(cur.end(), extra.begin(), extra.end());
    }
}

std::vector<NormalSubgroup> normal_subgroups(const FiniteGroup& g, const Caps& caps) {
    if (g.order() > caps.max_group_order)
        throw ResourceError("group order " + std::to_string(g.order()) +
                            " exceeds max_group_order cap " + std::to_string(caps.max_group_order));
    // Every normal subgroup is a join of normal closures of the conjugacy
    // classes it contains, so closing the class closures under join is
    // exhaustive.
    const int n = g.order();
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int t = 0; t < n; ++t) cls[g.conj(t, x)] = c;
    }
    std::vector<NormalSubgroup> atoms;
    for (int rep : reps) atoms.push_back(normal_closure(g, {rep}));

    std::set<std::vector<int>> found;
    found.insert(subgroup_closure(g, {}).elements);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (const auto& base : snapshot)
            for (const auto& atom : atoms) {
                std::vector<int> seed = base;
                seed.insert(seed.end(), atom.elements.begin(), atom.elements.end());
                auto joined = subgroup_closure(g, seed).elements;
                if (found.insert(joined).second) grew = true;
            }
    }
    std::vector<NormalSubgroup> out;
    for (const auto& e : found) out.push_back(NormalSubgroup{e});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NormalSubgroup> all_subgroups(const FiniteGroup& g, const Caps& caps) {
    if (g.order() > caps.max_group_order)
        throw ResourceError("group order exceeds max_group_order cap " +
                            std::to_string(caps.max_group_order));
    std::set<std::vector<int>> found;
    found.insert(subgroup_closure(g, {}).elements);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (const auto& base : snapshot)
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(base.begin(), base.end(), x)) continue;
                std::vector<int> seed = base;
                seed.push_back(x);
                if (found.insert(subgroup_closure(g, seed).elements).second) grew = true;
            }
    }
    std::vector<NormalSubgroup> out;
    for (const auto& e : found) out.push_back(NormalSubgroup{e});
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<FiniteGroup, GroupHom> quotient(const FiniteGroup& g, const NormalSubgroup& n) {
    if (!is_normal(g, n)) throw InvariantError("subgroup is not normal in parent");
    const int order = g.order();
    std::vector<int> coset_of(order, -1);
    std::vector<int> rep;  // canonical representative = smallest member
    for (int x = 0; x < order; ++x) {
        if (coset_of[x] >= 0) continue;
        const int c = static_cast<int>(rep.size());
        rep.push_back(x);
        for (int h : n.elements) coset_of[g.mul(x, h)] = c;
    }
    const int q = static_cast<int>(rep.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a][b] = coset_of[g.mul(rep[a], rep[b])];
    FiniteGroup quo = FiniteGroup::from_table(table, g.name().empty() ? "" : g.name() + "/N");
    GroupHom proj{g, quo, coset_of};
    if (!proj.is_hom() || !proj.is_surjective())
        throw InvariantError("quotient projection failed verification");
    return {quo, proj};
}

bool GroupHom::is_hom() const {
    if (static_cast<int>(images.size()) != domain.order()) return false;
    for (int v : images)
        if (v < 0 || v >= codomain.order()) return false;
    if (images[domain.identity()] != codomain.identity()) return false;
    for (int a = 0; a < domain.order(); ++a)
        for (int b = 0; b < domain.order(); ++b)
            if (images[domain.mul(a, b)] != codomain.mul(images[a], images[b])) return false;
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<char> hit(codomain.order(), 0);
    int cnt = 0;
    for (int v : images)
        if (!hit[v]) {
            hit[v] = 1;
            ++cnt;
        }
    return cnt == codomain.order();
}

bool GroupHom::is_injective() const {
    return kernel().size() == 1;
}

NormalSubgroup GroupHom::kernel() const {
    NormalSubgroup k;
    for (int a = 0; a < domain.order(); ++a)
        if (images[a] == codomain.identity()) k.elements.push_back(a);
    return k;
}

std::vector<int> GroupHom::image_set() const {
    std::vector<int> v = images;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
    std::vector<int> img(g.order());
    std::iota(img.begin(), img.end(), 0);
    return GroupHom{g, g, img};
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
    if (!inner.codomain.same_table(domain)) throw UsageError("hom composition domain mismatch");
    std::vector<int> img(inner.domain.order());
    for (int a = 0; a < inner.domain.order(); ++a) img[a] = images[inner.images[a]];
    return GroupHom{inner.domain, codomain, img};
}

namespace {

// Propagates a partial map fixed on gens[0..count) across products until
// stable. Returns false on inconsistency; `total` reports whether the map
// became everywhere defined.
bool close_partial(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                   const std::vector<int>& gimgs, size_t count, std::vector<int>& img,
                   bool& total) {
    img.assign(g.order(), -1);
    img[g.identity()] = h.identity();
    for (size_t i = 0; i < count; ++i) {
        if (img[gens[i]] >= 0 && img[gens[i]] != gimgs[i]) return false;
        img[gens[i]] = gimgs[i];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < g.order(); ++a) {
            if (img[a] < 0) continue;
            for (int b = 0; b < g.order(); ++b) {
                if (img[b] < 0) continue;
                const int ab = g.mul(a, b);
                const int t = h.mul(img[a], img[b]);
                if (img[ab] < 0) {
                    img[ab] = t;
                    changed = true;
                } else if (img[ab] != t) {
                    return false;
                }
            }
        }
    }
    total = std::count(img.begin(), img.end(), -1) == 0;
    return true;
}

void enumerate_from(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
                    const std::vector<std::vector<int>>& candidates, size_t pos,
                    std::vector<int>& gimgs, std::vector<GroupHom>& out, bool surjective_only) {
    if (pos == gens.size()) {
        std::vector<int> img;
        bool total = false;
        if (!close_partial(g, h, gens, gimgs, gens.size(), img, total) || !total) return;
        GroupHom hom{g, h, std::move(img)};
        if (surjective_only && !hom.is_surjective()) return;
        out.push_back(std::move(hom));
        return;
    }
    for (int cand : candidates[pos]) {
        gimgs[pos] = cand;
        std::vector<int> img;
        bool total = false;
        if (close_partial(g, h, gens, gimgs, pos + 1, img, total))
            enumerate_from(g, h, gens, candidates, pos + 1, gimgs, out, surjective_only);
    }
}

}  // namespace

std::vector<GroupHom> homomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                    bool surjective_only, const Caps& caps) {
    if (g.order() > caps.max_group_order || h.order() > caps.max_group_order)
        throw ResourceError("homomorphism enumeration exceeds max_group_order cap " +
                            std::to_string(caps.max_group_order));
    const std::vector<int> gens = g.generating_set();
    if (gens.empty()) {
        GroupHom hom{g, h, std::vector<int>{h.identity()}};
        if (surjective_only && !hom.is_surjective()) return {};
        return {hom};
    }
    // candidate images filtered by element-order divisibility
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        const int og = g.element_order(gens[i]);
        for (int y = 0; y < h.order(); ++y)
            if (og % h.element_order(y) == 0) candidates[i].push_back(y);
    }
    // The first generator's candidates split the search for the parallel
    // kernel; per-slot outputs are concatenated in candidate order.
    std::vector<std::vector<GroupHom>> slots(candidates[0].size());
    par::for_index(candidates[0].size(), [&](size_t i) {
        std::vector<int> gimgs(gens.size(), -1);
        gimgs[0] = candidates[0][i];
        std::vector<std::vector<int>> cand2 = candidates;
        cand2[0] = {candidates[0][i]};
        enumerate_from(g, h, gens, cand2, 1, gimgs, slots[i], surjective_only);
    });
    std::vector<GroupHom> out;
    for (auto& s : slots)
        for (auto& hom : s) out.push_back(std::move(hom));
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
    return out;
}

std::vector<GroupHom> automorphisms(const FiniteGroup& g, const Caps& caps) {
    std::vector<GroupHom> epis = homomorphisms(g, g, true, caps);
    return epis;  // surjective endomorphisms of a finite group are bijective
}

namespace {

EmbeddingReport embedding_property_impl(const FiniteGroup& g, const Caps& caps, bool parallel) {
    if (g.order() > caps.max_ep_order)
        throw ResourceError("embedding-property check exceeds max_ep_order cap " +
                            std::to_string(caps.max_ep_order));
    EmbeddingReport rep;
    const auto normals = normal_subgroups(g, caps);
    std::vector<FiniteGroup> quots;
    quots.reserve(normals.size());
    for (const auto& n : normals) quots.push_back(quotient(g, n).first);

    for (size_t i = 0; i < normals.size(); ++i) {
        const FiniteGroup& a = quots[i];
        std::vector<GroupHom> fs = homomorphisms(g, a, true, caps);
        for (size_t j = 0; j < normals.size(); ++j) {
            const FiniteGroup& b = quots[j];
            if (b.order() % a.order() != 0) continue;  // no epimorphism B -> A possible
            std::vector<GroupHom> gs = homomorphisms(b, a, true, caps);
            if (gs.empty()) continue;
            std::vector<GroupHom> hs = homomorphisms(g, b, true, caps);
            // For each g0, the set { g0 . h : h } must cover every f.
            std::vector<int> bad_pair(gs.size(), -1);  // index of first uncovered f
            auto check_g = [&](size_t gi) {
                std::set<std::vector<int>> covered;
                for (const auto& hh : hs) covered.insert(gs[gi].compose_after(hh).images);
                for (size_t fi = 0; fi < fs.size(); ++fi)
                    if (!covered.count(fs[fi].images)) {
                        bad_pair[gi] = static_cast<int>(fi);
                        return;
                    }
            };
            if (parallel)
                par::for_index(gs.size(), [&](size_t gi) { check_g(gi); });
            else
                par::for_index_serial(gs.size(), [&](size_t gi) { check_g(gi); });
            for (size_t gi = 0; gi < gs.size(); ++gi)
                if (bad_pair[gi] >= 0) {
                    rep.has_property = false;
                    rep.counterexample = EmbeddingCounterexample{fs[bad_pair[gi]], gs[gi]};
                    return rep;
                }
        }
    }
    rep.has_property = true;
    return rep;
}

}  // namespace

EmbeddingReport has_embedding_property(const FiniteGroup& g, const Caps& caps) {
    return embedding_property_impl(g, caps, true);
}

EmbeddingReport has_embedding_property_serial(const FiniteGroup& g, const Caps& caps) {
    return embedding_property_impl(g, caps, false);
}

}  // namespace galois
