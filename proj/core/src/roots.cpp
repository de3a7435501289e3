#include "k3fib/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "k3fib/reduction.hpp"

namespace k3fib {

RootType make_root_type(char family, int rank) {
    bool ok = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4) ||
              (family == 'E' && rank >= 6 && rank <= 8);
    if (!ok) throw DomainError(std::string("not an ADE type: ") + family + std::to_string(rank));
    return RootType{family, rank};
}

std::string RootType::str() const { return std::string(1, family) + std::to_string(rank); }

long RootType::root_count() const {
    const long n = rank;
    switch (family) {
        case 'A': return n * (n + 1);
        case 'D': return 2 * n * (n - 1);
        default: return n == 6 ? 72 : n == 7 ? 126 : 240;
    }
}

RootType parse_root_type(const std::string& s) {
    static const std::regex re("([ADE])([0-9]+)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw DomainError("cannot parse root type '" + s + "'");
    return make_root_type(m[1].str()[0], std::stoi(m[2].str()));
}

namespace {
int family_rank(char f) { return f == 'E' ? 0 : f == 'D' ? 1 : 2; }
}  // namespace

bool canonical_less(const RootType& a, const RootType& b) {
    if (a.family != b.family) return family_rank(a.family) < family_rank(b.family);
    return a.rank > b.rank;
}

void sort_canonical(std::vector<RootType>& v) {
    std::stable_sort(v.begin(), v.end(), canonical_less);
}

std::string render_root_part(std::vector<RootType> parts) {
    sort_canonical(parts);
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += "+";
        out += parts[i].str();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

IntMatrix cartan_gram(const RootType& t) {
    make_root_type(t.family, t.rank);
    const int n = t.rank;
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    auto edge = [&](int a, int b) {
        c(a, b) = -1;
        c(b, a) = -1;
    };
    switch (t.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'D':
            for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
            edge(n - 1, n - 3);
            break;
        default:
            for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
            edge(n - 1, 2);
            break;
    }
    return c;
}

std::vector<IntVec> enumerate_roots(const IntLattice& l) {
    auto sig = signature(l);
    if (sig.second == 0) return short_vectors(l.gram(), Int(2), true);
    if (sig.first == 0) return short_vectors(-l.gram(), Int(2), true);
    throw DomainError("root enumeration needs a definite lattice, signature (" +
                      std::to_string(sig.first) + "," + std::to_string(sig.second) + ")");
}

int RootDecomposition::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.type.rank;
    return r;
}

std::vector<RootType> RootDecomposition::types() const {
    std::vector<RootType> t;
    for (const auto& c : components) t.push_back(c.type);
    return t;
}

IntMatrix RootDecomposition::simple_root_matrix() const {
    IntMatrix m;
    for (const auto& c : components)
        for (const auto& r : c.simple_roots) m.append_row(r);
    return m;
}

RootType identify_dynkin(const std::vector<std::vector<int>>& adj, std::vector<int>& order) {
    const int n = static_cast<int>(adj.size());
    order.clear();
    if (n == 0) throw DomainError("empty Dynkin diagram");
    int edges = 0, branch = -1, branches = 0;
    for (int v = 0; v < n; ++v) {
        edges += static_cast<int>(adj[v].size());
        if (adj[v].size() > 3) throw DomainError("node of degree > 3 in Dynkin diagram");
        if (adj[v].size() == 3) {
            branch = v;
            ++branches;
        }
    }
    edges /= 2;
    if (edges != n - 1 || branches > 1) throw DomainError("diagram is not of ADE type");
    if (n == 1) {
        order = {0};
        return make_root_type('A', 1);
    }
    auto walk = [&](int from, int start) {
        std::vector<int> path;
        int prev = from, cur = start;
        for (;;) {
            path.push_back(cur);
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        return path;
    };
    if (branch < 0) {
        int end = 0;
        while (adj[end].size() != 1) ++end;
        order = walk(-1, end);
        return make_root_type('A', n);
    }
    std::vector<std::vector<int>> arms;
    for (int w : adj[branch]) arms.push_back(walk(branch, w));
    std::stable_sort(arms.begin(), arms.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const std::size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();
    if (a1 == 1 && a2 == 1) {
        // D_n: long arm (far end first), branch, the two short arms
        std::vector<int> longarm = arms[2];
        std::reverse(longarm.begin(), longarm.end());
        order = longarm;
        order.push_back(branch);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
        return make_root_type('D', n);
    }
    if (a1 == 1 && a2 == 2 && a3 >= 2 && a3 <= 4) {
        // E_n: length-2 arm far end first, branch, long arm, single node
        order = {arms[1][1], arms[1][0], branch};
        for (int v : arms[2]) order.push_back(v);
        order.push_back(arms[0][0]);
        return make_root_type('E', n);
    }
    throw DomainError("diagram is not of ADE type");
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<long>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

RootDecomposition ade_decompose_roots(const IntMatrix& gram, const std::vector<IntVec>& roots) {
    RootDecomposition out;
    if (roots.empty()) return out;
    const std::size_t n = roots.front().size();
    Int maxc = 0;
    for (const auto& r : roots)
        for (const auto& c : r)
            if (abs(c) > maxc) maxc = abs(c);
    // generic functional with weights 1, N, N^2, ...; no root lies in its kernel
    const Int base = 2 * maxc + 1;
    std::vector<Int> weight(n);
    {
        Int p = 1;
        for (std::size_t i = 0; i < n; ++i) {
            weight[i] = p;
            p *= base;
        }
    }
    std::vector<IntVec> pos;
    for (const auto& r : roots) {
        Int f = 0;
        for (std::size_t i = 0; i < n; ++i) f += weight[i] * r[i];
        if (f > 0) pos.push_back(r);
    }
    auto key = [](const IntVec& v) {
        std::vector<long> k(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) k[i] = to_long(v[i]);
        return k;
    };
    std::vector<std::vector<long>> pk;
    std::set<std::vector<long>> pset;
    for (const auto& p : pos) {
        pk.push_back(key(p));
        pset.insert(pk.back());
    }
    std::vector<IntVec> simple;
    std::vector<long> diff(n);
    for (std::size_t a = 0; a < pos.size(); ++a) {
        bool decomposable = false;
        for (std::size_t b = 0; b < pos.size() && !decomposable; ++b) {
            if (a == b) continue;
            for (std::size_t i = 0; i < n; ++i) diff[i] = pk[a][i] - pk[b][i];
            if (pset.count(diff)) decomposable = true;
        }
        if (!decomposable) simple.push_back(pos[a]);
    }
    const int k = static_cast<int>(simple.size());
    std::vector<std::vector<int>> adj(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            Int ip = bilinear(gram, simple[a], simple[b]);
            Int na = bilinear(gram, simple[a], simple[a]);
            if (na < 0) ip = -ip;  // negative definite convention
            if (ip == -1) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            } else if (ip != 0) {
                throw DomainError("simple roots with inner product " + ip.get_str());
            }
        }
    std::vector<int> comp(k, -1);
    int nc = 0;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        std::vector<std::vector<int>> sub(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int w : adj[members[i]])
                sub[i].push_back(static_cast<int>(
                    std::lower_bound(members.begin(), members.end(), w) - members.begin()));
        std::vector<int> order;
        RootComponent rc;
        rc.type = identify_dynkin(sub, order);
        for (int o : order) rc.simple_roots.push_back(simple[members[o]]);
        out.components.push_back(std::move(rc));
        ++nc;
    }
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const RootComponent& a, const RootComponent& b) {
                         if (a.type == b.type) return a.simple_roots.front() < b.simple_roots.front();
                         return canonical_less(a.type, b.type);
                     });
    return out;
}

RootDecomposition ade_decompose(const IntLattice& l) {
    return ade_decompose_roots(l.gram(), enumerate_roots(l));
}

std::string KodairaType::str() const {
    switch (family) {
        case KodairaFamily::In: return "I" + std::to_string(n);
        case KodairaFamily::InStar: return "I" + std::to_string(n) + "*";
        case KodairaFamily::II: return "II";
        case KodairaFamily::III: return "III";
        case KodairaFamily::IV: return "IV";
        case KodairaFamily::IVStar: return "IV*";
        case KodairaFamily::IIIStar: return "III*";
        case KodairaFamily::IIStar: return "II*";
    }
    return "?";
}

int KodairaType::components() const {
    switch (family) {
        case KodairaFamily::In: return n;
        case KodairaFamily::InStar: return n + 5;
        case KodairaFamily::II: return 1;
        case KodairaFamily::III: return 2;
        case KodairaFamily::IV: return 3;
        case KodairaFamily::IVStar: return 7;
        case KodairaFamily::IIIStar: return 8;
        case KodairaFamily::IIStar: return 9;
    }
    return 0;
}

KodairaType parse_kodaira(const std::string& s) {
    static const std::map<std::string, KodairaFamily> roman = {
        {"II", KodairaFamily::II},        {"III", KodairaFamily::III},
        {"IV", KodairaFamily::IV},        {"IV*", KodairaFamily::IVStar},
        {"III*", KodairaFamily::IIIStar}, {"II*", KodairaFamily::IIStar}};
    auto it = roman.find(s);
    if (it != roman.end()) return KodairaType{it->second, 0};
    static const std::regex re("I([0-9]+)(\\*?)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw DomainError("cannot parse Kodaira type '" + s + "'");
    int n = std::stoi(m[1].str());
    if (m[2].str() == "*") return KodairaType{KodairaFamily::InStar, n};
    return KodairaType{KodairaFamily::In, n};
}

std::vector<KodairaType> kodaira_candidates(const RootType& t) {
    make_root_type(t.family, t.rank);
    switch (t.family) {
        case 'A':
            if (t.rank == 1) return {{KodairaFamily::In, 2}, {KodairaFamily::III, 0}};
            if (t.rank == 2) return {{KodairaFamily::In, 3}, {KodairaFamily::IV, 0}};
            return {{KodairaFamily::In, t.rank + 1}};
        case 'D': return {{KodairaFamily::InStar, t.rank - 4}};
        default:
            if (t.rank == 6) return {{KodairaFamily::IVStar, 0}};
            if (t.rank == 7) return {{KodairaFamily::IIIStar, 0}};
            return {{KodairaFamily::IIStar, 0}};
    }
}

RootType root_type_of(const KodairaType& k) {
    switch (k.family) {
        case KodairaFamily::In:
            if (k.n < 2) throw DomainError(k.str() + " is irreducible");
            return make_root_type('A', k.n - 1);
        case KodairaFamily::InStar: return make_root_type('D', k.n + 4);
        case KodairaFamily::II: throw DomainError("II is irreducible");
        case KodairaFamily::III: return make_root_type('A', 1);
        case KodairaFamily::IV: return make_root_type('A', 2);
        case KodairaFamily::IVStar: return make_root_type('E', 6);
        case KodairaFamily::IIIStar: return make_root_type('E', 7);
        case KodairaFamily::IIStar: return make_root_type('E', 8);
    }
    throw DomainError("unknown Kodaira type");
}

std::string render_candidates(const std::vector<KodairaType>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += "|";
        s += c[i].str();
    }
    return s;
}

AffineDiagram affine_data(const KodairaType& k) {
    if ((k.family == KodairaFamily::In && k.n < 2) || k.family == KodairaFamily::II)
        throw DomainError("irreducible fibre " + k.str() + " has no affine diagram");
    const int m = k.components();
    AffineDiagram a{IntMatrix(m, m), std::vector<int>(m, 1)};
    for (int i = 0; i < m; ++i) a.gram(i, i) = -2;
    auto edge = [&](int x, int y) {
        a.gram(x, y) += 1;
        a.gram(y, x) += 1;
    };
    auto path = [&](int from, int to) {
        for (int i = from; i < to; ++i) edge(i, i + 1);
    };
    switch (k.family) {
        case KodairaFamily::In:
        case KodairaFamily::III:
        case KodairaFamily::IV:
            path(0, m - 1);
            edge(m - 1, 0);
            break;
        case KodairaFamily::InStar: {
            const int n = k.n;
            edge(0, 2);
            edge(1, 2);
            path(2, n + 2);
            edge(n + 3, n + 2);
            edge(n + 4, n + 2);
            for (int i = 2; i <= n + 2; ++i) a.marks[i] = 2;
            break;
        }
        case KodairaFamily::IVStar:
            path(0, 4);
            edge(2, 5);
            edge(5, 6);
            a.marks = {1, 2, 3, 2, 1, 2, 1};
            break;
        case KodairaFamily::IIIStar:
            path(0, 6);
            edge(3, 7);
            a.marks = {1, 2, 3, 4, 3, 2, 1, 2};
            break;
        case KodairaFamily::IIStar:
            path(0, 7);
            edge(5, 8);
            a.marks = {1, 2, 3, 4, 5, 6, 4, 2, 3};
            break;
        default: break;
    }
    return a;
}

Rat contribution(const KodairaType& k, int i) {
    const int m = k.components();
    if (i < 0 || i >= m)
        throw DomainError("component index " + std::to_string(i) + " out of range for " + k.str());
    if (i == 0) return 0;
    auto not_simple = [&]() {
        return DomainError("component " + std::to_string(i) + " is not a simple component of " +
                           k.str());
    };
    switch (k.family) {
        case KodairaFamily::In:
        case KodairaFamily::III:
        case KodairaFamily::IV: return make_rat(i * (m - i), m);
        case KodairaFamily::InStar:
            if (i == 1) return 1;
            if (i == k.n + 3 || i == k.n + 4) return 1 + make_rat(k.n, 4);
            throw not_simple();
        case KodairaFamily::IVStar:
            if (i == 4 || i == 6) return make_rat(4, 3);
            throw not_simple();
        case KodairaFamily::IIIStar:
            if (i == 6) return make_rat(3, 2);
            throw not_simple();
        default: throw not_simple();
    }
}

Rat contribution_between(const KodairaType& k, int z, int c) {
    AffineDiagram a = affine_data(k);
    const int m = static_cast<int>(a.marks.size());
    if (z < 0 || z >= m || c < 0 || c >= m) throw DomainError("component index out of range");
    if (a.marks[z] != 1) throw DomainError("zero section must meet a simple component");
    // diagram automorphism sending z to 0
    std::vector<int> phi(m, -1), used(m, 0);
    phi[z] = 0;
    used[0] = 1;
    std::function<bool(int)> extend = [&](int v) -> bool {
        if (v == m) return true;
        if (phi[v] >= 0) return extend(v + 1);
        for (int t = 0; t < m; ++t) {
            if (used[t] || a.marks[t] != a.marks[v]) continue;
            bool ok = true;
            for (int u = 0; u < m && ok; ++u)
                if (phi[u] >= 0 && a.gram(v, u) != a.gram(t, phi[u])) ok = false;
            if (!ok) continue;
            phi[v] = t;
            used[t] = 1;
            if (extend(v + 1)) return true;
            phi[v] = -1;
            used[t] = 0;
        }
        return false;
    };
    if (!extend(0)) throw DomainError("no diagram automorphism moves the zero component");
    return contribution(k, phi[c]);
}

}  // namespace k3fib
