#include "k3fib/niemeier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "k3fib/normal_form.hpp"
#include "k3fib/reduction.hpp"

namespace k3fib {

int NiemeierSpec::total_rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
}

long NiemeierSpec::root_count() const {
    long r = 0;
    for (const auto& c : components) r += c.root_count();
    return r;
}

std::vector<RootType> parse_root_part(const std::string& s) {
    std::vector<RootType> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) {
        int mult = 1;
        auto caret = part.find('^');
        std::string base = part.substr(0, caret);
        if (caret != std::string::npos) {
            try {
                mult = std::stoi(part.substr(caret + 1));
            } catch (const std::exception&) {
                throw DomainError("cannot parse root part '" + s + "'");
            }
        }
        auto t = parse_root_type(base);
        for (int i = 0; i < mult; ++i) out.push_back(t);
    }
    sort_canonical(out);
    return out;
}

namespace {

std::vector<GlueWord> cyclic(int head, const std::vector<int>& tail) {
    std::vector<GlueWord> words;
    const std::size_t m = tail.size();
    for (std::size_t s = 0; s < m; ++s) {
        GlueWord w{head};
        for (std::size_t i = 0; i < m; ++i) w.push_back(tail[(i + m - s) % m]);
        words.push_back(w);
    }
    return words;
}

std::vector<GlueWord> even_permutations(std::vector<int> v) {
    std::vector<GlueWord> out;
    std::vector<int> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] > idx[j]) ++inv;
        if (inv % 2 == 0) {
            GlueWord w;
            for (int i : idx) w.push_back(v[i]);
            out.push_back(w);
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

const std::vector<int> golay_tail = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1,
                                     0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1};

NiemeierSpec entry(const std::string& root_part, std::vector<GlueWord> glue) {
    NiemeierSpec s;
    s.components = parse_root_part(root_part);
    s.name = render_root_part(s.components);
    s.glue_words = std::move(glue);
    return s;
}

std::vector<NiemeierSpec> build_catalog() {
    std::vector<NiemeierSpec> c;
    c.push_back(entry("E8^3", {}));
    c.push_back(entry("A8^3", {{1, 1, 4}, {1, 4, 1}, {4, 1, 1}}));
    c.push_back(entry("E8+D16", {{0, 1}}));
    c.push_back(entry("E7^2+D10", {{1, 0, 1}, {0, 1, 3}}));
    c.push_back(entry("E7+A17", {{1, 3}}));
    c.push_back(entry("D24", {{1}}));
    c.push_back(entry("D12^2", {{1, 2}, {2, 1}}));
    c.push_back(entry("D8^3", {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}}));
    c.push_back(entry("D9+A15", {{1, 2}}));
    c.push_back(entry("E6+D7+A11", {{1, 1, 1}}));
    c.push_back(entry("D6+A9^2", {{0, 2, 4}, {1, 5, 0}, {3, 0, 5}}));
    c.push_back(entry("A24", {{5}}));
    c.push_back(entry("A12^2", {{1, 5}}));
    c.push_back(entry("E6^4", cyclic(1, {0, 1, 2})));
    c.push_back(entry("D6^4", even_permutations({0, 1, 2, 3})));
    c.push_back(entry("D5^2+A7^2", {{1, 2, 1, 1}, {2, 1, 1, 7}}));
    c.push_back(entry("A6^4", cyclic(1, {2, 1, 6})));
    c.push_back(entry("D4+A5^4", {{0, 2, 0, 2, 4},
                                  {0, 2, 4, 0, 2},
                                  {0, 2, 2, 4, 0},
                                  {1, 3, 3, 0, 0},
                                  {2, 3, 0, 3, 0},
                                  {3, 3, 0, 0, 3}}));
    {
        auto w = cyclic(0, {0, 2, 3, 3, 2});
        w.insert(w.begin(), {{1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2}});
        c.push_back(entry("D4^6", w));
    }
    c.push_back(entry("A4^6", cyclic(1, {0, 1, 4, 4, 1})));
    c.push_back(entry("A3^8", cyclic(3, {2, 0, 0, 1, 0, 1, 1})));
    c.push_back(entry("A2^12", cyclic(2, {1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2})));
    c.push_back(entry("A1^24", cyclic(1, golay_tail)));
    NiemeierSpec leech;
    leech.name = "Leech";
    c.push_back(leech);
    return c;
}

std::string word_str(const GlueWord& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "]";
}

RatVec word_vector(const NiemeierSpec& spec, const GlueWord& w) {
    if (w.size() != spec.components.size())
        throw DomainError("glue word " + word_str(w) + " of " + spec.name + " has wrong length");
    RatVec v;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto part = glue_representative(spec.components[i], w[i]);
        v.insert(v.end(), part.begin(), part.end());
    }
    return v;
}

IntMatrix root_part_gram(const NiemeierSpec& spec) {
    IntMatrix g(0, 0);
    for (const auto& t : spec.components) g = block_diagonal(g, cartan_gram(t));
    return g;
}

RealizedNiemeier realize_leech() {
    // Z^24 scaled by 1/sqrt 8: 2c for Golay words c, 4(e_i +- e_j) and (-3, 1^23)
    IntMatrix gens;
    auto words = cyclic(1, golay_tail);
    for (const auto& w : words) {
        IntVec v(24);
        for (int i = 0; i < 24; ++i) v[i] = 2 * w[i];
        gens.append_row(v);
    }
    for (int i = 0; i < 24; ++i)
        for (int j = i + 1; j < 24; ++j)
            for (int s : {1, -1}) {
                IntVec v(24);
                v[i] = 4;
                v[j] = 4 * s;
                gens.append_row(v);
            }
    IntVec special(24, Int(1));
    special[0] = -3;
    gens.append_row(special);
    IntMatrix b = hermite_normal_form(gens);
    IntMatrix prod = b * b.transpose();
    IntMatrix gram(24, 24);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            if (prod(i, j) % 8 != 0) throw DomainError("Leech construction is not integral");
            gram(i, j) = prod(i, j) / 8;
        }
    auto red = lll_reduce(gram);
    RealizedNiemeier r{catalog().back(), IntLattice::from_gram(red.gram, "Leech"),
                       to_rat(red.transform * b), IntMatrix(0, 24), {}, nullptr};
    return r;
}

}  // namespace

const std::vector<NiemeierSpec>& catalog() {
    static const std::vector<NiemeierSpec> c = build_catalog();
    return c;
}

const NiemeierSpec& catalog_entry(const std::string& name) {
    if (name == "Leech" || name == "leech") return catalog().back();
    std::vector<RootType> want;
    try {
        want = parse_root_part(name);
    } catch (const DomainError&) {
        throw DomainError("unknown Niemeier lattice '" + name + "'");
    }
    for (const auto& e : catalog())
        if (e.components == want) return e;
    throw DomainError("unknown Niemeier lattice '" + name + "'");
}

int catalog_index(const NiemeierSpec& spec) {
    const auto& c = catalog();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].name == spec.name) return static_cast<int>(i) + 1;
    return 0;
}

int glue_class_count(const RootType& t) {
    switch (t.family) {
        case 'A': return t.rank + 1;
        case 'D': return 4;
        default: return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    }
}

RatVec glue_representative(const RootType& t, int cls) {
    if (cls < 0 || cls >= glue_class_count(t))
        throw DomainError("glue class " + std::to_string(cls) + " out of range for " + t.str());
    RatVec zero(t.rank, Rat(0));
    if (cls == 0) return zero;
    int node = 0;
    switch (t.family) {
        case 'A': node = cls - 1; break;
        case 'D': node = cls == 1 ? t.rank - 1 : cls == 2 ? 0 : t.rank - 2; break;
        default: node = t.rank == 6 ? (cls == 1 ? 0 : 4) : 5; break;
    }
    RatMatrix inv = inverse(to_rat(cartan_gram(t)));
    return inv.row(node);
}

struct RealizedNiemeier::Cache {
    std::mutex mu;
    std::map<int, std::vector<IntVec>> local;
    std::map<int, std::vector<IntVec>> global;
};

const std::vector<IntVec>& RealizedNiemeier::component_roots_local(int i) const {
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->local.find(i);
    if (it != cache->local.end()) return it->second;
    const auto& t = spec.components.at(i);
    auto roots = enumerate_roots(IntLattice::from_gram(cartan_gram(t)));
    return cache->local.emplace(i, std::move(roots)).first->second;
}

const std::vector<IntVec>& RealizedNiemeier::component_roots(int i) const {
    const auto& local = component_roots_local(i);
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->global.find(i);
    if (it != cache->global.end()) return it->second;
    IntMatrix simple = component_simple_roots(i);
    std::vector<IntVec> out;
    out.reserve(local.size());
    for (const auto& y : local) out.push_back(row_times(y, simple));
    return cache->global.emplace(i, std::move(out)).first->second;
}

IntMatrix RealizedNiemeier::component_simple_roots(int i) const {
    const int r = spec.components.at(i).rank;
    IntMatrix out(0, roots_to_basis.cols());
    for (int k = 0; k < r; ++k) out.append_row(roots_to_basis.row(offsets.at(i) + k));
    return out;
}

std::vector<IntVec> RealizedNiemeier::all_roots() const {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto& r = component_roots(static_cast<int>(i));
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

Int RealizedNiemeier::glue_order() const {
    if (spec.rootless()) return 1;
    Int d = abs(determinant(roots_to_basis));
    return d;
}

std::vector<Int> RealizedNiemeier::glue_invariants() const {
    if (spec.rootless()) return {};
    return nontrivial_invariants(smith_normal_form(roots_to_basis));
}

RealizedNiemeier realize(const NiemeierSpec& spec) {
    if (spec.rootless()) {
        RealizedNiemeier r = realize_leech();
        r.cache = std::make_shared<RealizedNiemeier::Cache>();
        return r;
    }
    const int n = spec.total_rank();
    IntMatrix c = root_part_gram(spec);
    RatMatrix cq = to_rat(c);
    std::vector<RatVec> words;
    for (const auto& w : spec.glue_words) words.push_back(word_vector(spec, w));
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a; b < words.size(); ++b) {
            Rat ip = bilinear(cq, words[a], words[b]);
            bool bad = !is_integer(ip) || (a == b && ip.get_num() % 2 != 0);
            if (bad)
                throw DomainError("glue word " + word_str(spec.glue_words[a]) + " of " +
                                  spec.name + (a == b ? " has norm " : " pairs to ") +
                                  to_string(ip));
        }
    Int den = 1;
    for (const auto& w : words)
        for (const auto& x : w) den = lcm(den, Int(x.get_den()));
    IntMatrix gens(0, n);
    for (int i = 0; i < n; ++i) {
        IntVec e(n);
        e[i] = den;
        gens.append_row(e);
    }
    for (const auto& w : words) {
        IntVec v(n);
        for (int i = 0; i < n; ++i) v[i] = Int(w[i] * den);
        gens.append_row(v);
    }
    IntMatrix bint = hermite_normal_form(gens);
    RatMatrix basis = to_rat(bint);
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j) basis(i, j) /= den;
    IntMatrix gram = to_int(basis * cq * basis.transpose());
    RealizedNiemeier r{spec, IntLattice::from_gram(gram, spec.name), basis,
                       to_int(inverse(basis)), {}, std::make_shared<RealizedNiemeier::Cache>()};
    int off = 0;
    for (const auto& t : spec.components) {
        r.offsets.push_back(off);
        off += t.rank;
    }
    return r;
}

NiemeierReport verify(const NiemeierSpec& spec) {
    NiemeierReport rep;
    rep.name = spec.name;
    RealizedNiemeier r;
    try {
        r = realize(spec);
    } catch (const DomainError& e) {
        rep.failures.push_back(e.what());
        return rep;
    }
    const auto& l = r.lattice;
    rep.even = l.is_even();
    if (!rep.even) rep.failures.push_back("lattice is not even");
    if (l.rank() != 24) rep.failures.push_back("rank " + std::to_string(l.rank()) + " != 24");
    Int det = determinant(l);
    rep.unimodular = det == 1;
    if (!rep.unimodular) rep.failures.push_back("determinant " + to_string(det));
    rep.definite = is_positive_definite(l.gram());
    if (!rep.definite) rep.failures.push_back("signature is not (24,0)");
    if (!rep.definite) return rep;
    auto roots = enumerate_roots(l);
    rep.root_count = static_cast<long>(roots.size());
    rep.roots_match = rep.root_count == spec.root_count();
    if (!rep.roots_match)
        rep.failures.push_back("root count " + std::to_string(rep.root_count) + " != " +
                               std::to_string(spec.root_count()));
    rep.glue_order = r.glue_order();
    Int prod = 1;
    for (const auto& t : spec.components) prod *= determinant(cartan_gram(t));
    rep.glue_identity = rep.glue_order * rep.glue_order == prod;
    if (!rep.glue_identity)
        rep.failures.push_back("glue order " + to_string(rep.glue_order) + " squared != " +
                               to_string(prod));
    return rep;
}

}  // namespace k3fib
