#include "k3fib/nishiyama.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <tuple>

namespace k3fib {

std::vector<Target> admissible_targets(const RootType& t0) {
    auto admits = [&](const RootType& c) {
        if (t0 == make_root_type('A', 8))
            return (c.family == 'A' && c.rank >= 8) || (c.family == 'D' && c.rank >= 9);
        if (t0 == make_root_type('D', 8)) return c.family == 'D' && c.rank >= 8;
        if (t0 == make_root_type('E', 8)) return c == t0;
        throw DomainError("unsupported T0 " + t0.str() + "; supported: A8, D8, E8");
    };
    std::vector<Target> out;
    const auto& cat = catalog();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& comps = cat[i].components;
        for (std::size_t j = 0; j < comps.size(); ++j) {
            bool seen = false;
            for (std::size_t k = 0; k < j; ++k) seen |= comps[k] == comps[j];
            if (!seen && admits(comps[j]))
                out.push_back(Target{static_cast<int>(i) + 1, static_cast<int>(j), comps[j]});
        }
    }
    return out;
}

namespace {

using Key = std::tuple<std::string, std::vector<Int>, Int>;

Key frame_key(const Frame& f) { return {f.root_part.str(), f.mw_torsion, f.det}; }

// Depth-first search for root tuples with the Cartan inner products of t0.
class EmbeddingSearcher {
public:
    EmbeddingSearcher(const RealizedNiemeier& n, const RootType& t0, int component)
        : n_(n), t0_(t0), component_(component) {
        const auto& local = n.component_roots_local(component);
        IntMatrix c = cartan_gram(n.spec.components.at(component));
        const std::size_t m = local.size(), r = c.rows();
        std::vector<std::vector<long>> ly(m, std::vector<long>(r)), lp(m, std::vector<long>(r));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t i = 0; i < r; ++i) ly[a][i] = to_long(local[a][i]);
            for (std::size_t j = 0; j < r; ++j) {
                long s = 0;
                for (std::size_t i = 0; i < r; ++i) s += ly[a][i] * to_long(c(i, j));
                lp[a][j] = s;
            }
        }
        ip_.assign(m * m, 0);
        neighbours_.assign(m, {});
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                long s = 0;
                for (std::size_t i = 0; i < r; ++i) s += lp[a][i] * ly[b][i];
                ip_[a * m + b] = static_cast<int>(s);
                if (s == -1) neighbours_[a].push_back(static_cast<int>(b));
            }
        m_ = m;
        // pattern nodes in breadth-first order from node 0
        IntMatrix tc = cartan_gram(t0);
        const int k = t0.rank;
        std::vector<int> seen(k, 0);
        order_ = {0};
        seen[0] = 1;
        for (std::size_t h = 0; h < order_.size(); ++h)
            for (int v = 0; v < k; ++v)
                if (!seen[v] && tc(order_[h], v) == -1) {
                    seen[v] = 1;
                    order_.push_back(v);
                }
        parent_.assign(k, -1);
        want_.assign(k, std::vector<int>(k, 0));
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < p; ++q) {
                want_[p][q] = to_long(tc(order_[p], order_[q]));
                if (want_[p][q] == -1 && parent_[p] < 0) parent_[p] = q;
            }
    }

    // First primitive embedding found with the given candidate rotation.
    bool run(int rotation, EmbeddingSpec& out) {
        rotation_ = rotation;
        chosen_.assign(t0_.rank, -1);
        chosen_[0] = 0;
        found_ = false;
        dfs(1, out);
        return found_;
    }

private:
    void dfs(int p, EmbeddingSpec& out) {
        if (found_) return;
        const int k = t0_.rank;
        if (p == k) {
            check(out);
            return;
        }
        const auto& cand = neighbours_[chosen_[parent_[p]]];
        const std::size_t sz = cand.size();
        const std::size_t start = sz ? (static_cast<std::size_t>(rotation_) * 7919u * (p + 1)) % sz : 0;
        for (std::size_t s = 0; s < sz && !found_; ++s) {
            int b = cand[(start + s) % sz];
            bool ok = true;
            for (int q = 0; q < p && ok; ++q)
                if (chosen_[q] == b || ip_[chosen_[q] * m_ + b] != want_[p][q]) ok = false;
            if (!ok) continue;
            chosen_[p] = b;
            dfs(p + 1, out);
        }
        chosen_[p] = -1;
    }

    void check(EmbeddingSpec& out) {
        const auto& roots = n_.component_roots(component_);
        IntMatrix images(t0_.rank, n_.lattice.rank());
        for (int p = 0; p < t0_.rank; ++p) images.set_row(order_[p], roots[chosen_[p]]);
        Sublattice s = make_sublattice(n_.lattice, images);
        if (!is_primitive(n_.lattice, s)) return;
        out.t0 = t0_;
        out.root_images = images;
        found_ = true;
    }

    const RealizedNiemeier& n_;
    RootType t0_;
    int component_;
    std::size_t m_ = 0;
    std::vector<int> ip_;
    std::vector<std::vector<int>> neighbours_;
    std::vector<int> order_, parent_, chosen_;
    std::vector<std::vector<int>> want_;
    int rotation_ = 0;
    bool found_ = false;
};

}  // namespace

Frame frame(const RealizedNiemeier& n, const EmbeddingSpec& e) {
    const auto& l = n.lattice;
    Sublattice s = make_sublattice(l, e.root_images);
    Frame f{orthogonal_complement(l, s), {}, {}, 0, {}, 0};
    IntMatrix p = e.root_images * l.gram();
    std::vector<IntVec> roots;
    for (const auto& r : n.all_roots()) {
        bool orth = true;
        for (std::size_t i = 0; i < p.rows() && orth; ++i) orth = dot(p.row(i), r) == 0;
        if (orth) roots.push_back(r);
    }
    f.root_part = ade_decompose_roots(l.gram(), roots);
    for (const auto& c : f.root_part.components) f.fibers.push_back(kodaira_candidates(c.type));
    f.mw_rank = f.w.rank() - f.root_part.rank();
    if (f.root_part.rank() > 0) {
        Sublattice span = make_sublattice(l, f.root_part.simple_root_matrix());
        f.mw_torsion = quotient_group(saturation(l, span), span);
    }
    f.det = abs(determinant(f.w.induced_gram()));
    return f;
}

EmbeddingSearch find_embedding(const RealizedNiemeier& n, const RootType& t0, int component,
                               int sample) {
    EmbeddingSearch out;
    EmbeddingSearcher searcher(n, t0, component);
    std::vector<Key> keys;
    for (int s = 0; s < std::max(sample, 1); ++s) {
        EmbeddingSpec e;
        if (!searcher.run(s, e)) break;
        e.target = Target{catalog_index(n.spec), component, n.spec.components.at(component)};
        Frame f = frame(n, e);
        Key k = frame_key(f);
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            keys.push_back(k);
            out.frames.push_back(f);
        }
        out.embeddings.push_back(std::move(e));
    }
    if (out.embeddings.empty())
        throw DomainError("no primitive embedding of " + t0.str() + " into " +
                          n.spec.components.at(component).str() + " of " + n.spec.name);
    if (out.frames.size() > 1) {
        out.uniqueness_violation = true;
        out.diagnostic = std::to_string(out.frames.size()) +
                         " non-isometric complements for " + t0.str() + " in " +
                         n.spec.components.at(component).str();
    }
    return out;
}

std::string render_group(const std::vector<Int>& torsion, int free_rank) {
    std::string s;
    for (const auto& d : torsion) s += (s.empty() ? "" : "+") + ("Z/" + d.get_str() + "Z");
    if (free_rank > 0) {
        s += s.empty() ? "" : "+";
        s += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    }
    return s.empty() ? "0" : s;
}

std::string render_fibers(const std::vector<std::vector<KodairaType>>& fibers) {
    std::string s;
    for (std::size_t i = 0; i < fibers.size();) {
        std::size_t j = i;
        while (j < fibers.size() && fibers[j] == fibers[i]) ++j;
        std::string item = render_candidates(fibers[i]);
        if (j - i > 1) item = std::to_string(j - i) + (fibers[i].size() > 1 ? "(" + item + ")" : item);
        s += (s.empty() ? "" : "+") + item;
        i = j;
    }
    return s.empty() ? "-" : s;
}

std::vector<ClassifyRow> classify(const RootType& t0) {
    auto targets = admissible_targets(t0);
    std::vector<std::future<std::vector<ClassifyRow>>> jobs;
    for (const auto& t : targets)
        jobs.push_back(std::async(std::launch::async, [t, t0]() {
            const auto& spec = catalog().at(t.catalog_index - 1);
            RealizedNiemeier n = realize(spec);
            EmbeddingSearch es = find_embedding(n, t0, t.component);
            std::vector<ClassifyRow> rows;
            for (const auto& f : es.frames) {
                ClassifyRow r;
                r.catalog_index = t.catalog_index;
                r.niemeier = spec.name;
                r.embedding = t0.str() + " in " + t.type.str();
                r.roots = f.root_part.str();
                if (r.roots.empty()) r.roots = "-";
                r.fibers = render_fibers(f.fibers);
                r.mw_rank = f.mw_rank;
                r.torsion = f.mw_torsion;
                r.det = f.det;
                r.mw = render_group(f.mw_torsion, f.mw_rank);
                r.diagnostic = es.diagnostic;
                rows.push_back(r);
            }
            return rows;
        }));
    std::vector<ClassifyRow> out;
    std::vector<Key> seen;
    for (auto& j : jobs)
        for (auto& r : j.get()) {
            Key k{r.niemeier + "/" + r.roots, r.torsion, r.det};
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
            seen.push_back(k);
            out.push_back(std::move(r));
        }
    std::stable_sort(out.begin(), out.end(), [](const ClassifyRow& a, const ClassifyRow& b) {
        return a.catalog_index < b.catalog_index;
    });
    return out;
}

}  // namespace k3fib
