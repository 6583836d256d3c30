#include "galois/system.hpp"

#include <algorithm>
#include <set>

namespace galois {

CompleteSystem CompleteSystem::build(const FiniteGroup& g, const Caps& caps) {
    CompleteSystem s;
    s.source_ = g;
    s.kernels_ = normal_subgroups(g, caps);
    const int L = static_cast<int>(s.kernels_.size());
    s.quotients_.reserve(L);
    s.projections_.reserve(L);
    s.total_ = 0;
    for (int i = 0; i < L; ++i) {
        auto [q, p] = quotient(g, s.kernels_[i]);
        s.total_ += q.order();
        s.quotients_.push_back(std::move(q));
        s.projections_.push_back(std::move(p));
        s.level_index_[s.kernels_[i].elements] = i;
        if (s.kernels_[i].size() == g.order()) s.top_level_ = i;
    }
    if (s.total_ > caps.max_system_size)
        throw ResourceError("complete system size " + std::to_string(s.total_) +
                            " exceeds max_system_size cap " +
                            std::to_string(caps.max_system_size));
    s.leq_.assign(L, std::vector<char>(L, 0));
    s.restrict_.assign(L, std::vector<std::vector<int>>(L));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            const bool incl = std::includes(s.kernels_[j].elements.begin(),
                                            s.kernels_[j].elements.end(),
                                            s.kernels_[i].elements.begin(),
                                            s.kernels_[i].elements.end());
            s.leq_[i][j] = incl ? 1 : 0;
            if (incl) {
                std::vector<int> m(s.quotients_[i].order());
                for (int g0 = 0; g0 < g.order(); ++g0)
                    m[s.projections_[i].apply(g0)] = s.projections_[j].apply(g0);
                s.restrict_[i][j] = std::move(m);
            }
        }
    return s;
}

int CompleteSystem::level_of_kernel(const NormalSubgroup& n) const {
    auto it = level_index_.find(n.elements);
    return it == level_index_.end() ? -1 : it->second;
}

std::vector<SystemElement> CompleteSystem::elements() const {
    std::vector<SystemElement> out;
    out.reserve(total_);
    for (int l = 0; l < level_count(); ++l)
        for (int c = 0; c < quotients_[l].order(); ++c) out.push_back(SystemElement{l, c});
    return out;
}

bool CompleteSystem::valid(const SystemElement& x) const {
    return x.level >= 0 && x.level < level_count() && x.coset >= 0 &&
           x.coset < quotients_[x.level].order();
}

int CompleteSystem::sort(const SystemElement& x) const {
    if (!valid(x)) throw UsageError("system element out of range");
    return quotients_[x.level].order();
}

bool CompleteSystem::leq(const SystemElement& x, const SystemElement& y) const {
    if (!valid(x) || !valid(y)) throw UsageError("system element out of range");
    return leq_[x.level][y.level];
}

int CompleteSystem::restrict_coset(int fine, int coarse, int coset) const {
    if (!leq_[fine][coarse]) throw UsageError("restriction requires kernel inclusion");
    return restrict_[fine][coarse][coset];
}

SystemElement CompleteSystem::restrict_to(const SystemElement& x, int coarse) const {
    return SystemElement{coarse, restrict_coset(x.level, coarse, x.coset)};
}

bool CompleteSystem::rel_c(const SystemElement& x, const SystemElement& y) const {
    if (!valid(x) || !valid(y)) throw UsageError("system element out of range");
    if (!leq_[x.level][y.level]) return false;
    return restrict_[x.level][y.level][x.coset] == y.coset;
}

bool CompleteSystem::rel_p(const SystemElement& x, const SystemElement& y,
                           const SystemElement& z) const {
    if (!valid(x) || !valid(y) || !valid(z)) throw UsageError("system element out of range");
    if (x.level != y.level || y.level != z.level) return false;
    return quotients_[x.level].mul(x.coset, y.coset) == z.coset;
}

std::pair<FiniteGroup, int> CompleteSystem::sim_class(const SystemElement& x) const {
    if (!valid(x)) throw UsageError("system element out of range");
    return {quotients_[x.level], x.coset};
}

int CompleteSystem::join_level(int a, int b) const {
    std::vector<int> seed = kernels_[a].elements;
    seed.insert(seed.end(), kernels_[b].elements.begin(), kernels_[b].elements.end());
    auto prod = subgroup_closure(source_, seed);
    auto it = level_index_.find(prod.elements);
    if (it == level_index_.end()) throw InvariantError("join level missing from system");
    return it->second;
}

int CompleteSystem::meet_level(int a, int b) const {
    std::vector<int> inter;
    std::set_intersection(kernels_[a].elements.begin(), kernels_[a].elements.end(),
                          kernels_[b].elements.begin(), kernels_[b].elements.end(),
                          std::back_inserter(inter));
    auto it = level_index_.find(inter);
    if (it == level_index_.end()) throw InvariantError("meet level missing from system");
    return it->second;
}

SystemElement CompleteSystem::join(const SystemElement& x, const SystemElement& y) const {
    if (!valid(x) || !valid(y)) throw UsageError("system element out of range");
    const int l = join_level(x.level, y.level);
    return SystemElement{l, quotients_[l].identity()};
}

SystemElement CompleteSystem::meet(const SystemElement& x, const SystemElement& y) const {
    if (!valid(x) || !valid(y)) throw UsageError("system element out of range");
    const int l = meet_level(x.level, y.level);
    return SystemElement{l, quotients_[l].identity()};
}

SystemElement CompleteSystem::conjugation_act(int g, const SystemElement& x) const {
    if (g < 0 || g >= source_.order()) throw UsageError("group element out of range");
    if (!valid(x)) throw UsageError("system element out of range");
    const int gq = projections_[x.level].apply(g);
    const FiniteGroup& q = quotients_[x.level];
    return SystemElement{x.level, q.mul(q.mul(q.inv(gq), x.coset), gq)};
}

std::vector<int> CompleteSystem::unique_index_set(
    const std::vector<SystemElement>& class_elements, const SystemElement& tau) const {
    if (class_elements.empty()) throw UsageError("class enumeration is empty");
    const int level = class_elements[0].level;
    std::vector<char> seen(quotients_[level].order(), 0);
    for (const auto& e : class_elements) {
        if (!valid(e) || e.level != level)
            throw UsageError("class enumeration spans several levels");
        seen[e.coset] = 1;
    }
    if (std::count(seen.begin(), seen.end(), char(1)) != quotients_[level].order())
        throw UsageError("enumeration does not cover the whole ~-class");
    if (!leq(class_elements[0], tau)) throw UsageError("tau must lie above the class");
    std::vector<int> idx;
    for (size_t j = 0; j < class_elements.size(); ++j)
        if (rel_c(class_elements[j], tau)) idx.push_back(static_cast<int>(j));
    return idx;
}

bool Subsystem::contains_level(int level) const {
    return std::binary_search(levels.begin(), levels.end(), level);
}

std::vector<SystemElement> Subsystem::elements() const {
    std::vector<SystemElement> out;
    for (int l : levels)
        for (int c = 0; c < parent->level_group(l).order(); ++c)
            out.push_back(SystemElement{l, c});
    return out;
}

Subsystem full_subsystem(const CompleteSystem& s) {
    Subsystem sub;
    sub.parent = &s;
    sub.levels.resize(s.level_count());
    for (int i = 0; i < s.level_count(); ++i) sub.levels[i] = i;
    for (int i = 0; i < s.level_count(); ++i)
        if (s.kernel(i).size() == 1) sub.min_level = i;
    return sub;
}

Subsystem trivial_subsystem(const CompleteSystem& s) {
    Subsystem sub;
    sub.parent = &s;
    sub.min_level = s.one().level;
    sub.levels = {sub.min_level};
    return sub;
}

Subsystem generated_subsystem(const CompleteSystem& s, const std::vector<SystemElement>& a) {
    std::vector<int> inter;
    for (int g = 0; g < s.source().order(); ++g) inter.push_back(g);
    for (const auto& e : a) {
        if (!s.valid(e)) throw UsageError("system element out of range");
        std::vector<int> next;
        std::set_intersection(inter.begin(), inter.end(), s.kernel(e.level).elements.begin(),
                              s.kernel(e.level).elements.end(), std::back_inserter(next));
        inter = std::move(next);
    }
    const int min_level = s.level_of_kernel(NormalSubgroup{inter});
    if (min_level < 0) throw InvariantError("generated level missing from system");
    Subsystem sub;
    sub.parent = &s;
    sub.min_level = min_level;
    for (int l = 0; l < s.level_count(); ++l)
        if (s.level_leq(min_level, l)) sub.levels.push_back(l);
    return sub;
}

SystemElement join_with_subsystem(const CompleteSystem& s, const SystemElement& alpha,
                                  const Subsystem& a) {
    if (a.parent != &s) throw UsageError("subsystem belongs to a different system");
    if (!s.valid(alpha)) throw UsageError("system element out of range");
    const int l = s.join_level(alpha.level, a.min_level);
    return SystemElement{l, s.level_group(l).identity()};
}

std::pair<FiniteGroup, GroupHom> dual_group(const Subsystem& s) {
    if (!s.parent) throw UsageError("subsystem has no parent system");
    return quotient(s.parent->source(), s.parent->kernel(s.min_level));
}

Subsystem DualEmbedding::image() const {
    Subsystem sub;
    sub.parent = target;
    sub.levels = level_map;
    std::sort(sub.levels.begin(), sub.levels.end());
    for (int cand : sub.levels) {
        bool minimal = true;
        for (int other : sub.levels)
            if (!target->level_leq(cand, other)) {
                minimal = false;
                break;
            }
        if (minimal) {
            sub.min_level = cand;
            break;
        }
    }
    return sub;
}

DualEmbedding dual_embedding(const CompleteSystem& target, const GroupHom& pi,
                             const Caps& caps) {
    if (!pi.is_surjective()) throw UsageError("dual embedding requires an epimorphism");
    if (!pi.domain.same_table(target.source()))
        throw UsageError("epimorphism domain differs from the system's source group");
    DualEmbedding emb;
    emb.target = &target;
    emb.domain = CompleteSystem::build(pi.codomain, caps);
    emb.level_map.resize(emb.domain.level_count());
    emb.coset_map.resize(emb.domain.level_count());
    const FiniteGroup& g = target.source();
    for (int l = 0; l < emb.domain.level_count(); ++l) {
        const NormalSubgroup& m = emb.domain.kernel(l);
        NormalSubgroup pre;
        for (int x = 0; x < g.order(); ++x)
            if (m.contains(pi.apply(x))) pre.elements.push_back(x);
        const int tl = target.level_of_kernel(pre);
        if (tl < 0) throw InvariantError("preimage level missing from target system");
        emb.level_map[l] = tl;
        std::vector<int> cm(emb.domain.level_group(l).order(), -1);
        for (int x = 0; x < g.order(); ++x) {
            const int hc = emb.domain.projection(l).apply(pi.apply(x));
            cm[hc] = target.projection(tl).apply(x);
        }
        emb.coset_map[l] = std::move(cm);
    }
    return emb;
}

namespace {

// Backtracking search for an isomorphism between two level groups, pinned on
// given pairs and commuting with the restrictions onto delta's level.
// Canonical first solution (smallest images in element order) is returned.
struct IsoSearch {
    const CompleteSystem& s;
    int level_b, level_g, level_d;
    const FiniteGroup& gb;
    const FiniteGroup& gg;

    bool propagate(std::vector<int>& img, std::vector<char>& used) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < gb.order(); ++a) {
                if (img[a] < 0) continue;
                for (int b = 0; b < gb.order(); ++b) {
                    if (img[b] < 0) continue;
                    const int ab = gb.mul(a, b);
                    const int t = gg.mul(img[a], img[b]);
                    if (img[ab] < 0) {
                        if (used[t]) return false;
                        img[ab] = t;
                        used[t] = 1;
                        changed = true;
                    } else if (img[ab] != t) {
                        return false;
                    }
                }
            }
        }
        for (int a = 0; a < gb.order(); ++a)
            if (img[a] >= 0 && s.restrict_coset(level_b, level_d, a) !=
                                   s.restrict_coset(level_g, level_d, img[a]))
                return false;
        return true;
    }

    bool search(std::vector<int>& img, std::vector<char>& used) const {
        int next = -1;
        for (int a = 0; a < gb.order(); ++a)
            if (img[a] < 0) {
                next = a;
                break;
            }
        if (next < 0) return true;
        for (int y = 0; y < gg.order(); ++y) {
            if (used[y]) continue;
            std::vector<int> img2 = img;
            std::vector<char> used2 = used;
            img2[next] = y;
            used2[y] = 1;
            if (propagate(img2, used2) && search(img2, used2)) {
                img = std::move(img2);
                return true;
            }
        }
        return false;
    }
};

}  // namespace

TypesEqualResult types_equal(const CompleteSystem& s, const std::vector<SystemElement>& beta,
                             const std::vector<SystemElement>& gamma, const Subsystem& sub) {
    if (sub.parent != &s) throw UsageError("subsystem belongs to a different system");
    if (beta.empty() || gamma.empty() || beta.size() != gamma.size())
        throw UsageError("tuples must be nonempty and of equal length");
    const int lb = beta[0].level, lg = gamma[0].level;
    for (const auto& e : beta)
        if (!s.valid(e) || e.level != lb) throw UsageError("beta is not within a single ~-class");
    for (const auto& e : gamma)
        if (!s.valid(e) || e.level != lg) throw UsageError("gamma is not within a single ~-class");

    TypesEqualResult res;
    const int ldb = s.join_level(lb, sub.min_level);
    const int ldg = s.join_level(lg, sub.min_level);
    if (ldb != ldg) return res;  // beta v S != gamma v S
    if (s.level_group(lb).order() != s.level_group(lg).order()) return res;

    IsoSearch search{s, lb, lg, ldb, s.level_group(lb), s.level_group(lg)};
    std::vector<int> img(search.gb.order(), -1);
    std::vector<char> used(search.gg.order(), 0);
    img[search.gb.identity()] = search.gg.identity();
    used[search.gg.identity()] = 1;
    for (size_t i = 0; i < beta.size(); ++i) {
        const int x = beta[i].coset, y = gamma[i].coset;
        if (img[x] >= 0) {
            if (img[x] != y) return res;
            continue;
        }
        if (used[y]) return res;
        img[x] = y;
        used[y] = 1;
    }
    if (!search.propagate(img, used)) return res;
    if (!search.search(img, used)) return res;
    res.equal = true;
    res.witness = std::move(img);
    return res;
}

}  // namespace galois
