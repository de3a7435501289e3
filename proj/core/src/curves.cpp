#include "k3fib/curves.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include "k3fib/normal_form.hpp"

namespace k3fib {

int Permutation::order() const {
    Permutation p = *this;
    Permutation id;
    for (std::size_t i = 0; i < image.size(); ++i) id.image.push_back(static_cast<int>(i));
    int k = 1;
    while (!(p == id)) {
        p = compose(*this, p);
        ++k;
    }
    return k;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out;
    out.image.resize(b.image.size());
    for (std::size_t i = 0; i < b.image.size(); ++i) out.image[i] = a.image[b.image[i]];
    return out;
}

std::optional<int> CurveConfig::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (curves[i].name == name) return i;
    return std::nullopt;
}

int CurveConfig::index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw DomainError("unknown curve '" + name + "'");
    return *i;
}

const GroupAction& CurveConfig::action(const std::string& name) const {
    for (const auto& a : actions)
        if (a.name == name) return a;
    std::string known;
    for (const auto& a : actions) known += " " + a.name;
    throw DomainError("unknown action '" + name + "'; known:" + (known.empty() ? " none" : known));
}

const DivisorRecord& CurveConfig::record(const std::string& id) const {
    for (const auto& r : records)
        if (r.id == id) return r;
    std::string known;
    for (const auto& r : records) known += " " + r.id;
    throw DomainError("unknown record '" + id + "'; known:" + (known.empty() ? " none" : known));
}

IntVec CurveConfig::divisor(const std::vector<std::pair<int, std::string>>& terms) const {
    IntVec v(size());
    for (const auto& [k, name] : terms) v[index(name)] += k;
    return v;
}

IntVec CurveConfig::curve_vector(int i) const {
    IntVec v(size());
    v.at(i) = 1;
    return v;
}

IntVec CurveConfig::expand(const IntVec& coeffs) const {
    IntVec out = coeffs;
    for (std::size_t d = 0; d < derived.size(); ++d) {
        const int i = base_size() + static_cast<int>(d);
        if (out[i] == 0) continue;
        Int k = out[i];
        out[i] = 0;
        for (const auto& [c, name] : derived[d].terms) out[index(name)] += k * c;
    }
    return out;
}

Int CurveConfig::pair(const IntVec& a, const IntVec& b) const { return bilinear(pairing, a, b); }

IntVec CurveConfig::class_key(const IntVec& coeffs) const { return row_times(coeffs, pairing); }

bool CurveConfig::same_class(const IntVec& a, const IntVec& b) const {
    return class_key(a) == class_key(b);
}

IntVec CurveConfig::apply(const Permutation& g, const IntVec& coeffs) const {
    IntVec x = expand(coeffs);
    IntVec out(size());
    for (int i = 0; i < base_size(); ++i) out[g.image[i]] += x[i];
    return out;
}

std::string CurveConfig::render_divisor(const IntVec& coeffs) const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        const Int& k = coeffs[i];
        if (k == 0) continue;
        if (k < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (abs(k) != 1) s += Int(abs(k)).get_str();
        s += curves[i].name;
    }
    return s.empty() ? "0" : s;
}

void add_derived_curve(CurveConfig& c, const DerivedCurve& d) {
    if (c.find(d.name)) throw DomainError("duplicate curve '" + d.name + "'");
    IntVec def(c.size());
    for (const auto& [k, name] : d.terms) {
        int i = c.index(name);
        if (c.is_derived(i)) throw DomainError("derived curve '" + d.name + "' refers to derived curve '" + name + "'");
        def[i] += k;
    }
    IntVec row = c.class_key(def);
    Int self = c.pair(def, def);
    const int n = c.size();
    IntMatrix p(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = c.pairing(i, j);
    for (int i = 0; i < n; ++i) {
        p(i, n) = row[i];
        p(n, i) = row[i];
    }
    p(n, n) = self;
    c.pairing = p;
    c.curves.push_back(Curve{d.name, static_cast<int>(to_long(self))});
    c.derived.push_back(d);
}

ValidationReport validate_config(const CurveConfig& c) {
    ValidationReport rep;
    auto issue = [&](const std::string& s) { rep.issues.push_back(s); };
    const int n = c.size();
    if (static_cast<int>(c.pairing.rows()) != n || static_cast<int>(c.pairing.cols()) != n) {
        issue("pairing matrix has the wrong size");
        return rep;
    }
    std::set<std::string> names;
    for (const auto& cv : c.curves)
        if (!names.insert(cv.name).second) issue("duplicate curve '" + cv.name + "'");
    for (int i = 0; i < n; ++i) {
        if (c.pairing(i, i) != c.curves[i].self)
            issue("self-intersection of " + c.curves[i].name + " disagrees with its pairing");
        for (int j = i + 1; j < n; ++j) {
            if (c.pairing(i, j) != c.pairing(j, i))
                issue("asymmetric pairing " + c.curves[i].name + "." + c.curves[j].name + ": " +
                      to_string(c.pairing(i, j)) + " vs " + to_string(c.pairing(j, i)));
            if (c.pairing(i, j) < 0)
                issue("negative intersection " + c.curves[i].name + "." + c.curves[j].name);
        }
    }
    std::set<std::string> sections;
    if (c.reference) {
        for (const auto& s : c.reference->sections) {
            sections.insert(s);
            if (!c.find(s)) issue("unknown section '" + s + "'");
        }
        if (!c.reference->zero.empty() && !sections.count(c.reference->zero))
            issue("zero section '" + c.reference->zero + "' is not a listed section");
        for (const auto& [id, members] : c.reference->fibers)
            for (const auto& m : members)
                if (!c.find(m)) issue("unknown curve '" + m + "' in fibre " + id);
    }
    for (const auto& cv : c.curves) {
        if (c.surface == SurfaceKind::K3 && cv.self != -2)
            issue("curve " + cv.name + " on a K3 surface must have self-intersection -2");
        if (c.surface == SurfaceKind::RationalElliptic) {
            int want = sections.count(cv.name) ? -1 : -2;
            if (cv.self != want)
                issue("curve " + cv.name + " must have self-intersection " + std::to_string(want));
        }
    }
    const int b = c.base_size();
    for (const auto& a : c.actions)
        for (std::size_t g = 0; g < a.generators.size(); ++g) {
            const auto& img = a.generators[g].image;
            std::vector<int> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            bool perm = static_cast<int>(img.size()) == b;
            for (int i = 0; perm && i < b; ++i) perm = sorted[i] == i;
            if (!perm) {
                issue("action " + a.name + " generator " + std::to_string(g + 1) + " is not a permutation");
                continue;
            }
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < b; ++j)
                    if (c.pairing(img[i], img[j]) != c.pairing(i, j)) {
                        issue("action " + a.name + " generator " + std::to_string(g + 1) +
                              " does not preserve " + c.curves[i].name + "." + c.curves[j].name);
                        i = j = b;
                    }
        }
    for (const auto& r : c.records)
        for (const auto& t : r.terms)
            if (!c.find(t.second)) issue("unknown curve '" + t.second + "' in record " + r.id);
    return rep;
}

void require_valid(const CurveConfig& c) {
    auto rep = validate_config(c);
    if (rep.ok()) return;
    std::string s = "invalid configuration:";
    for (const auto& i : rep.issues) s += "\n  " + i;
    throw DomainError(s);
}

std::vector<Permutation> group_elements(const CurveConfig& c, const GroupAction& a) {
    Permutation id;
    for (int i = 0; i < c.base_size(); ++i) id.image.push_back(i);
    std::set<Permutation> seen{id};
    std::vector<Permutation> out{id};
    for (std::size_t h = 0; h < out.size(); ++h)
        for (const auto& g : a.generators) {
            Permutation p = compose(g, out[h]);
            if (seen.insert(p).second) {
                out.push_back(p);
                if (out.size() > 100000) throw DomainError("action " + a.name + " generates too large a group");
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string lift_name(const CurveConfig& r, const std::string& name, int copy) {
    auto it = r.lifts.find(name);
    std::string base;
    if (it != r.lifts.end()) {
        base = it->second;
    } else {
        static const std::regex comp("C([0-9]+)");
        std::smatch m;
        base = std::regex_match(name, m, comp) ? "Th" + m[1].str() : name;
    }
    return base + "_" + std::to_string(copy);
}

std::string section_lift(const std::string& name) {
    std::string s = name;
    if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
}

}  // namespace

CurveConfig double_cover_config(const CurveConfig& r) {
    if (!r.reference) throw DomainError("double cover needs a reference fibration");
    if (r.surface != SurfaceKind::RationalElliptic)
        throw DomainError("double cover needs a rational elliptic surface configuration");
    if (!r.derived.empty()) throw DomainError("double cover of derived curves is not supported");
    require_valid(r);
    std::vector<int> secs, comps;
    std::set<std::string> sset(r.reference->sections.begin(), r.reference->sections.end());
    for (int i = 0; i < r.size(); ++i) (sset.count(r.curves[i].name) ? secs : comps).push_back(i);
    // new index of (curve, copy); sections have a single lift
    std::vector<int> lift1(r.size()), lift2(r.size());
    CurveConfig x;
    x.surface = SurfaceKind::K3;
    x.smooth_branch = true;
    for (int s : secs) {
        lift1[s] = lift2[s] = x.size();
        x.curves.push_back(Curve{section_lift(r.curves[s].name), -2});
    }
    for (int copy = 1; copy <= 2; ++copy)
        for (int c : comps) {
            (copy == 1 ? lift1 : lift2)[c] = x.size();
            x.curves.push_back(Curve{lift_name(r, r.curves[c].name, copy), -2});
        }
    const int n = x.size();
    x.pairing = IntMatrix(n, n);
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b) {
            const Int& v = r.pairing(a, b);
            bool sa = sset.count(r.curves[a].name), sb = sset.count(r.curves[b].name);
            if (sa && sb) {
                x.pairing(lift1[a], lift1[b]) = 2 * v;
            } else {
                x.pairing(lift1[a], lift1[b]) = v;
                x.pairing(lift2[a], lift2[b]) = v;
            }
        }
    Permutation tau;
    tau.image.resize(n);
    for (int s : secs) tau.image[lift1[s]] = lift1[s];
    for (int c : comps) {
        tau.image[lift1[c]] = lift2[c];
        tau.image[lift2[c]] = lift1[c];
    }
    x.actions.push_back(GroupAction{"tau", {tau}});
    GroupAction galois{"galois", {tau}};
    for (const auto& a : r.actions) {
        GroupAction la{a.name, {}};
        for (const auto& g : a.generators) {
            Permutation p;
            p.image.resize(n);
            for (int i = 0; i < r.size(); ++i) {
                p.image[lift1[i]] = lift1[g.image[i]];
                p.image[lift2[i]] = lift2[g.image[i]];
            }
            la.generators.push_back(p);
            galois.generators.push_back(p);
        }
        x.actions.push_back(la);
    }
    x.actions.push_back(galois);
    ReferenceFibration ref;
    for (const auto& [id, members] : r.reference->fibers)
        for (int copy = 1; copy <= 2; ++copy) {
            std::vector<std::string> lifted;
            for (const auto& m : members) {
                int i = r.index(m);
                lifted.push_back(x.curves[(copy == 1 ? lift1 : lift2)[i]].name);
            }
            ref.fibers.emplace_back(id + "_" + std::to_string(copy), lifted);
        }
    for (const auto& s : r.reference->sections) ref.sections.push_back(section_lift(s));
    ref.zero = section_lift(r.reference->zero);
    x.reference = ref;
    return x;
}

NsLattice ns_lattice(const CurveConfig& c) {
    const int n = c.size();
    // greedy choice of curves with independent pairing rows
    IntMatrix rows(0, n);
    std::vector<int> chosen;
    int r = 0;
    for (int i = 0; i < n; ++i) {
        IntMatrix trial = rows;
        trial.append_row(c.pairing.row(i));
        int tr = rank(to_rat(trial));
        if (tr > r) {
            rows = trial;
            chosen.push_back(i);
            r = tr;
        }
    }
    NsLattice out{IntLattice::from_gram(IntMatrix(0, 0)), {}, IntMatrix(0, n)};
    bool spans = true;
    try {
        solve_in_basis(rows, c.pairing);
    } catch (const DomainError&) {
        spans = false;
    }
    if (spans) {
        for (int i : chosen) {
            out.basis.append_row(c.curve_vector(i));
            out.basis_names.push_back(c.curves[i].name);
        }
    } else {
        // complement of the numerically trivial combinations
        IntMatrix ker = integer_kernel(c.pairing);
        if (ker.rows() == 0) {
            out.basis = IntMatrix::identity(n);
        } else {
            SmithForm s = smith_normal_form(ker);
            for (std::size_t i = ker.rows(); i < static_cast<std::size_t>(n); ++i)
                out.basis.append_row(s.V_inv.row(i));
        }
    }
    out.lattice = IntLattice::from_gram(gram_of(out.basis, c.pairing), "NS");
    return out;
}

}  // namespace k3fib
