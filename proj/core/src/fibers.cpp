#include "k3fib/fibers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "k3fib/nishiyama.hpp"
#include "k3fib/normal_form.hpp"
#include "k3fib/reduction.hpp"

namespace k3fib {

void match_induced(const IntMatrix& pattern, const CurveConfig& c, const std::vector<int>& pool,
                   const std::function<bool(const std::vector<int>&)>& visit) {
    const int m = static_cast<int>(pattern.rows());
    if (m == 0) return;
    std::vector<int> order{0}, seen(m, 0), parent(m, -1);
    seen[0] = 1;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int v = 0; v < m; ++v)
            if (!seen[v] && pattern(order[h], v) > 0) {
                seen[v] = 1;
                order.push_back(v);
            }
    if (static_cast<int>(order.size()) != m) throw DomainError("fibre pattern is not connected");
    for (int p = 1; p < m; ++p)
        for (int q = 0; q < p && parent[p] < 0; ++q)
            if (pattern(order[p], order[q]) > 0) parent[p] = q;
    std::vector<char> in_pool(c.size(), 0);
    for (int i : pool) in_pool[i] = 1;
    std::vector<std::vector<int>> nbrs(c.size());
    for (int i : pool)
        for (int j : pool)
            if (i != j && c.pairing(i, j) > 0) nbrs[i].push_back(j);
    std::vector<int> img(m, -1);
    std::vector<char> used(c.size(), 0);
    bool stop = false;
    std::function<void(int)> dfs = [&](int p) {
        if (stop) return;
        if (p == m) {
            if (!visit(img)) stop = true;
            return;
        }
        const int node = order[p];
        const std::vector<int>& cand = p == 0 ? pool : nbrs[img[order[parent[p]]]];
        for (int x : cand) {
            if (used[x] || c.pairing(x, x) != pattern(node, node)) continue;
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) ok = c.pairing(x, img[order[q]]) == pattern(node, order[q]);
            if (!ok) continue;
            img[node] = x;
            used[x] = 1;
            dfs(p + 1);
            used[x] = 0;
            img[node] = -1;
            if (stop) return;
        }
    };
    dfs(0);
}

namespace {

std::vector<int> minus_two_curves(const CurveConfig& c) {
    std::vector<int> out;
    for (int i = 0; i < c.size(); ++i)
        if (c.curves[i].self == -2) out.push_back(i);
    return out;
}

std::vector<KodairaType> affine_types_of_size(int m) {
    std::vector<KodairaType> out;
    if (m >= 2) out.push_back({KodairaFamily::In, m});
    if (m >= 5) out.push_back({KodairaFamily::InStar, m - 5});
    if (m == 7) out.push_back({KodairaFamily::IVStar, 0});
    if (m == 8) out.push_back({KodairaFamily::IIIStar, 0});
    if (m == 9) out.push_back({KodairaFamily::IIStar, 0});
    return out;
}

IntMatrix drop_first(const IntMatrix& g) {
    const std::size_t m = g.rows();
    IntMatrix out(m - 1, m - 1);
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 1; j < m; ++j) out(i - 1, j - 1) = g(i, j);
    return out;
}

const Permutation& single_generator(const CurveConfig& c, const std::string& name) {
    const auto& a = c.action(name);
    if (a.generators.size() != 1)
        throw DomainError("action '" + name + "' must consist of a single involution");
    return a.generators.front();
}

}  // namespace

std::vector<FiberCandidate> find_fibers(const CurveConfig& c, const KodairaType& k) {
    AffineDiagram a = affine_data(k);
    std::vector<FiberCandidate> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    match_induced(a.gram, c, minus_two_curves(c), [&](const std::vector<int>& img) {
        std::vector<std::pair<int, int>> key;
        for (std::size_t i = 0; i < img.size(); ++i) key.emplace_back(img[i], a.marks[i]);
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return true;
        IntVec d(c.size());
        for (std::size_t i = 0; i < img.size(); ++i) d[img[i]] += a.marks[i];
        if (c.pair(d, d) != 0) throw DomainError("internal: fibre candidate is not isotropic");
        FiberSupport s{img, a.marks};
        IntVec ck = c.class_key(d);
        for (auto& f : out)
            if (c.class_key(f.fiber) == ck) {
                f.supports.push_back(s);
                return true;
            }
        out.push_back(FiberCandidate{k, d, {s}});
        return true;
    });
    return out;
}

IntVec fiber_class_of(const CurveConfig& c, const std::vector<int>& support) {
    const std::size_t k = support.size();
    IntMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g(i, j) = c.pairing(support[i], support[j]);
    IntMatrix ker = integer_kernel(g);
    if (ker.rows() != 1) throw DomainError("support is not a fibre configuration");
    IntVec v = ker.row(0);
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    IntVec out(c.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (v[i] <= 0) throw DomainError("support is not a fibre configuration");
        out[support[i]] = v[i];
    }
    return out;
}

IntVec reference_fiber_class(const CurveConfig& c) {
    if (!c.reference || c.reference->fibers.empty())
        throw DomainError("configuration has no reference fibration");
    std::vector<int> support;
    for (const auto& n : c.reference->fibers.front().second) support.push_back(c.index(n));
    return fiber_class_of(c, support);
}

std::string ReducibleFiber::type_str() const { return render_candidates(candidates); }

std::vector<ReducibleFiber> fiber_decomposition(const CurveConfig& c, const IntVec& fiber) {
    if (c.pair(fiber, fiber) != 0) throw DomainError("fibre class is not isotropic");
    IntVec key = c.class_key(fiber);
    std::vector<int> orth;
    for (int i : minus_two_curves(c))
        if (key[i] == 0) orth.push_back(i);
    std::vector<int> comp(c.size(), -1);
    std::vector<std::vector<int>> parts;
    for (int s : orth) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(parts.size());
        for (std::size_t h = 0; h < members.size(); ++h)
            for (int j : orth)
                if (comp[j] < 0 && c.pairing(members[h], j) > 0) {
                    comp[j] = comp[s];
                    members.push_back(j);
                }
        std::sort(members.begin(), members.end());
        parts.push_back(members);
    }
    std::vector<ReducibleFiber> out;
    int budget = 0;
    for (const auto& s : parts) {
        const int m = static_cast<int>(s.size());
        IntMatrix neg(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) neg(i, j) = -c.pairing(s[i], s[j]);
        ReducibleFiber rf;
        rf.curves = s;
        bool matched = false;
        if (is_positive_definite(neg)) {
            std::vector<std::vector<int>> adj(m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (i != j && neg(i, j) != 0) adj[i].push_back(j);
            std::vector<int> order;
            rf.root = identify_dynkin(adj, order);
            rf.candidates = kodaira_candidates(rf.root);
            rf.partial = true;
            AffineDiagram a = affine_data(rf.candidates.front());
            match_induced(drop_first(a.gram), c, s, [&](const std::vector<int>& img) {
                rf.curves = img;
                for (int i = 0; i < m; ++i) {
                    rf.nodes.push_back(i + 1);
                    rf.marks.push_back(a.marks[i + 1]);
                }
                matched = true;
                return false;
            });
            budget += m;
        } else {
            for (const auto& k : affine_types_of_size(m)) {
                AffineDiagram a = affine_data(k);
                match_induced(a.gram, c, s, [&](const std::vector<int>& img) {
                    rf.curves = img;
                    for (int i = 0; i < m; ++i) {
                        rf.nodes.push_back(i);
                        rf.marks.push_back(a.marks[i]);
                    }
                    matched = true;
                    return false;
                });
                if (matched) {
                    rf.root = root_type_of(k);
                    rf.candidates = kodaira_candidates(rf.root);
                    break;
                }
            }
            budget += m - 1;
        }
        if (!matched) {
            std::string names;
            for (int i : s) names += " " + c.curves[i].name;
            throw DomainError("curves orthogonal to the fibre do not form a fibre:" + names);
        }
        out.push_back(rf);
    }
    const int limit = c.surface == SurfaceKind::K3 ? 16 : 8;
    if (budget > limit)
        throw DomainError("reducible fibres have total rank " + std::to_string(budget) + " > " +
                          std::to_string(limit));
    std::stable_sort(out.begin(), out.end(), [](const ReducibleFiber& a, const ReducibleFiber& b) {
        if (a.partial != b.partial) return !a.partial;
        if (a.root == b.root) return false;
        return canonical_less(a.root, b.root);
    });
    return out;
}

std::vector<std::string> sections_of(const CurveConfig& c, const IntVec& fiber) {
    IntVec key = c.class_key(fiber);
    const int self = c.surface == SurfaceKind::K3 ? -2 : -1;
    std::vector<std::string> out;
    for (int i = 0; i < c.size(); ++i)
        if (key[i] == 1 && c.curves[i].self == self) out.push_back(c.curves[i].name);
    return out;
}

namespace {

int node_met(const CurveConfig& c, const ReducibleFiber& f, int section) {
    int node = -1;
    for (std::size_t i = 0; i < f.curves.size(); ++i) {
        const Int& v = c.pairing(section, f.curves[i]);
        if (v == 0) continue;
        if (node >= 0 || v != 1 || f.marks[i] != 1)
            throw DomainError(c.curves[section].name + " does not meet the " + f.type_str() +
                              " fibre in a single simple component");
        node = f.nodes[i];
    }
    if (node < 0) {
        if (!f.partial)
            throw DomainError(c.curves[section].name + " misses the " + f.type_str() + " fibre");
        node = 0;
    }
    return node;
}

}  // namespace

HeightReport height(const CurveConfig& c, const IntVec& fiber, const std::string& zero,
                    const std::string& section) {
    const int o = c.index(zero), p = c.index(section);
    IntVec key = c.class_key(fiber);
    if (key[o] != 1) throw DomainError(zero + " is not a section of this fibration");
    if (key[p] != 1) throw DomainError(section + " is not a section of this fibration");
    HeightReport h;
    h.constant = c.surface == SurfaceKind::K3 ? 4 : 2;
    h.twice_po = 2 * c.pairing(p, o);
    h.value = Rat(h.constant) + Rat(h.twice_po);
    for (const auto& f : fiber_decomposition(c, fiber)) {
        int zn = node_met(c, f, o), pn = node_met(c, f, p);
        Rat v = contribution_between(f.candidates.front(), zn, pn);
        h.terms.push_back(HeightTerm{f.type_str(), zn, pn, v});
        h.value -= v;
    }
    return h;
}

bool is_torsion_section(const HeightReport& h) { return h.value == 0; }

Int index_in_ns(const CurveConfig& c, const std::vector<IntVec>& classes) {
    NsLattice ns = ns_lattice(c);
    const std::size_t k = classes.size();
    IntMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g(i, j) = c.pair(classes[i], classes[j]);
    if (static_cast<int>(k) != ns.lattice.rank() || rank(to_rat(g)) != static_cast<int>(k))
        throw DomainError("classes do not span a finite-index sublattice (rank " +
                          std::to_string(rank(to_rat(g))) + ", NS rank " +
                          std::to_string(ns.lattice.rank()) + ")");
    Int ds = determinant(g), dn = determinant(ns.lattice);
    if (ds % dn != 0) throw DomainError("classes are not contained in NS");
    Int q = ds / dn;
    Int r = isqrt(q);
    if (q < 0 || r * r != q) throw DomainError("determinant ratio " + to_string(q) + " is not a square");
    return r;
}

int fibration_type(const CurveConfig& c, const IntVec& fiber, const std::string& tau,
                   const IntVec& induced) {
    if (!c.smooth_branch)
        throw DomainError("fibration types need a double cover with smooth branch locus");
    const Permutation& g = single_generator(c, tau);
    if (!c.same_class(c.apply(g, fiber), fiber)) return 3;
    return c.same_class(fiber, induced) ? 2 : 1;
}

ImageClassification classify_image(const CurveConfig& c, const std::string& curve,
                                   const std::string& tau) {
    const Permutation& g = single_generator(c, tau);
    IntVec v = c.curve_vector(c.index(curve));
    IntVec tv = c.apply(g, v);
    if (c.same_class(v, tv)) return {ImageKind::Section, 1};
    Int m = c.pair(v, tv);
    if (m == 0) return {ImageKind::FiberComponent, 0};
    return {ImageKind::MultiSection, static_cast<int>(to_long(m))};
}

FieldDegreeReport field_degree_bounds(const CurveConfig& c, const FibrationRecord& r,
                                      const std::string& action) {
    const auto& a = c.action(action);
    auto rep = validate_config(c);
    if (!rep.ok()) throw DomainError("action does not preserve the configuration: " + rep.issues.front());
    auto elems = group_elements(c, a);
    FieldDegreeReport out;
    out.group_order = static_cast<int>(elems.size());
    auto fixes = [&](const Permutation& g, const IntVec& v) { return c.same_class(c.apply(g, v), v); };
    std::vector<IntVec> secs;
    for (const auto& s : r.sections) secs.push_back(c.curve_vector(c.index(s)));
    IntVec zero = r.zero.empty() ? IntVec(c.size()) : c.curve_vector(c.index(r.zero));
    auto fixes_sections = [&](const Permutation& g) {
        for (const auto& s : secs)
            if (!fixes(g, s)) return false;
        return true;
    };
    int fstab = 0, mstab = 0;
    for (const auto& g : elems) {
        if (fixes(g, r.fiber) && fixes(g, zero)) ++fstab;
        if (fixes_sections(g)) ++mstab;
    }
    out.fibration_bound = r.tau_type == 2 ? 1 : out.group_order / fstab;
    out.mw_bound = out.group_order / mstab;
    for (std::size_t k = 0; k < a.generators.size(); ++k) {
        GroupAction sub{a.name, {a.generators[k]}};
        auto cyc = group_elements(c, sub);
        int st = 0;
        for (const auto& g : cyc) st += fixes_sections(g);
        out.stabilizer_indices.emplace_back("<" + a.name + "." + std::to_string(k + 1) + ">",
                                            static_cast<int>(cyc.size()) / st);
    }
    return out;
}

std::string FibrationRecord::root_part() const {
    std::vector<RootType> t;
    for (const auto& f : fibers) t.push_back(f.root);
    return render_root_part(t);
}

std::string FibrationRecord::fiber_types() const {
    std::vector<std::vector<KodairaType>> t;
    for (const auto& f : fibers) t.push_back(f.candidates);
    return render_fibers(t);
}

FibrationRecord make_record(const CurveConfig& c, const std::string& id, const IntVec& fiber,
                            const std::string& zero) {
    FibrationRecord r;
    r.id = id;
    r.fiber = fiber;
    r.fibers = fiber_decomposition(c, fiber);
    r.sections = sections_of(c, fiber);
    r.zero = zero.empty() ? (r.sections.empty() ? "" : r.sections.front()) : zero;
    if (!r.zero.empty() && std::find(r.sections.begin(), r.sections.end(), r.zero) == r.sections.end())
        throw DomainError(r.zero + " is not a section of " + id);
    auto has_action = [&](const std::string& n) {
        for (const auto& a : c.actions)
            if (a.name == n) return true;
        return false;
    };
    if (c.smooth_branch && c.reference && has_action("tau"))
        r.tau_type = fibration_type(c, fiber, "tau", reference_fiber_class(c));
    if (has_action("galois")) r.bounds = field_degree_bounds(c, r, "galois");
    else if (has_action("tau")) r.bounds = field_degree_bounds(c, r, "tau");
    return r;
}

FibrationRecord make_record(const CurveConfig& c, const DivisorRecord& d) {
    return make_record(c, d.id, c.divisor(d.terms), d.zero);
}

}  // namespace k3fib
