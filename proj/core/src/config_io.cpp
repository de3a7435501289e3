#include "k3fib/config_io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace k3fib {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::string rest;  // text after the first two tokens, for actions
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw DomainError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(int line, const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + s + "'");
    }
}

std::pair<int, std::string> parse_term(int line, const std::string& tok) {
    auto star = tok.find('*');
    if (star == std::string::npos) {
        if (!tok.empty() && tok[0] == '-') return {-1, tok.substr(1)};
        return {1, tok};
    }
    return {parse_int(line, tok.substr(0, star)), tok.substr(star + 1)};
}

bool parse_bool(int line, const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    fail(line, "expected true or false, got '" + s + "'");
}

}  // namespace

CurveConfig parse_config(const std::string& text) {
    std::vector<Line> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            std::istringstream ls(raw);
            Line l{number, {}, ""};
            std::string tok;
            while (ls >> tok) l.tokens.push_back(tok);
            if (l.tokens.empty()) continue;
            if (l.tokens[0] == "action" && l.tokens.size() >= 2) {
                auto p = raw.find(l.tokens[1], raw.find("action") + 6);
                l.rest = raw.substr(p + l.tokens[1].size());
            }
            lines.push_back(std::move(l));
        }
    }
    CurveConfig c;
    bool have_surface = false;
    std::vector<std::pair<std::string, int>> base;
    for (const auto& l : lines) {
        const auto& t = l.tokens;
        const std::string& kw = t[0];
        if (kw == "surface") {
            if (t.size() != 2) fail(l.number, "usage: surface k3|res");
            if (t[1] == "k3") c.surface = SurfaceKind::K3;
            else if (t[1] == "res") c.surface = SurfaceKind::RationalElliptic;
            else fail(l.number, "unknown surface kind '" + t[1] + "'");
            have_surface = true;
        } else if (kw == "smoothbranch") {
            if (t.size() != 2) fail(l.number, "usage: smoothbranch true|false");
            c.smooth_branch = parse_bool(l.number, t[1]);
        } else if (kw == "curve") {
            if (t.size() != 3) fail(l.number, "usage: curve <name> <self-intersection>");
            for (const auto& b : base)
                if (b.first == t[1]) fail(l.number, "duplicate curve '" + t[1] + "'");
            base.emplace_back(t[1], parse_int(l.number, t[2]));
        } else if (kw != "meet" && kw != "derived" && kw != "lift" && kw != "fibration" &&
                   kw != "action" && kw != "record") {
            fail(l.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_surface) throw DomainError("configuration lacks a 'surface' line");
    const int n = static_cast<int>(base.size());
    c.pairing = IntMatrix(n, n);
    for (int i = 0; i < n; ++i) {
        c.curves.push_back(Curve{base[i].first, base[i].second});
        c.pairing(i, i) = base[i].second;
    }
    auto idx = [&](const Line& l, const std::string& name) {
        auto i = c.find(name);
        if (!i) fail(l.number, "unknown curve '" + name + "'");
        return *i;
    };
    std::vector<const Line*> derived_meets;
    std::set<std::string> derived_names;
    for (const auto& l : lines)
        if (l.tokens[0] == "derived" && l.tokens.size() >= 2) derived_names.insert(l.tokens[1]);
    for (const auto& l : lines) {
        const auto& t = l.tokens;
        if (t[0] != "meet") continue;
        if (t.size() != 4) fail(l.number, "usage: meet <name> <name> <int>");
        if (derived_names.count(t[1]) || derived_names.count(t[2])) {
            derived_meets.push_back(&l);
            continue;
        }
        int a = idx(l, t[1]), b = idx(l, t[2]);
        if (a == b) fail(l.number, "use the curve line for self-intersections");
        int v = parse_int(l.number, t[3]);
        c.pairing(a, b) = v;
        c.pairing(b, a) = v;
    }
    for (const auto& l : lines) {
        const auto& t = l.tokens;
        if (t[0] != "derived") continue;
        if (t.size() < 3) fail(l.number, "usage: derived <name> <k>*<curve>...");
        DerivedCurve d{t[1], {}};
        for (std::size_t i = 2; i < t.size(); ++i) d.terms.push_back(parse_term(l.number, t[i]));
        try {
            add_derived_curve(c, d);
        } catch (const DomainError& e) {
            fail(l.number, e.what());
        }
    }
    for (const Line* l : derived_meets) {
        const auto& t = l->tokens;
        int a = idx(*l, t[1]), b = idx(*l, t[2]);
        int v = parse_int(l->number, t[3]);
        if (c.pairing(a, b) != v)
            fail(l->number, "stated intersection " + t[1] + "." + t[2] + " = " + t[3] +
                                " but the derived class gives " + to_string(c.pairing(a, b)));
    }
    static const std::regex cycle_re("\\(([^)]*)\\)");
    for (const auto& l : lines) {
        const auto& t = l.tokens;
        if (t[0] == "lift") {
            if (t.size() != 3) fail(l.number, "usage: lift <curve> <name>");
            idx(l, t[1]);
            c.lifts[t[1]] = t[2];
        } else if (t[0] == "fibration") {
            if (t.size() < 3) fail(l.number, "usage: fibration fiber|section|zero ...");
            if (!c.reference) c.reference = ReferenceFibration{};
            if (t[1] == "fiber") {
                if (t.size() < 4) fail(l.number, "usage: fibration fiber <id> <name>...");
                std::vector<std::string> members;
                for (std::size_t i = 3; i < t.size(); ++i) {
                    idx(l, t[i]);
                    members.push_back(t[i]);
                }
                bool merged = false;
                for (auto& f : c.reference->fibers)
                    if (f.first == t[2]) {
                        f.second.insert(f.second.end(), members.begin(), members.end());
                        merged = true;
                    }
                if (!merged) c.reference->fibers.emplace_back(t[2], members);
            } else if (t[1] == "section") {
                for (std::size_t i = 2; i < t.size(); ++i) {
                    idx(l, t[i]);
                    c.reference->sections.push_back(t[i]);
                }
            } else if (t[1] == "zero") {
                if (t.size() != 3) fail(l.number, "usage: fibration zero <name>");
                idx(l, t[2]);
                c.reference->zero = t[2];
            } else {
                fail(l.number, "unknown fibration field '" + t[1] + "'");
            }
        } else if (t[0] == "action") {
            if (t.size() < 2) fail(l.number, "usage: action <name> (a b)... fix ...");
            Permutation p;
            const int b = c.base_size();
            for (int i = 0; i < b; ++i) p.image.push_back(i);
            std::string rest = l.rest;
            std::string fixpart;
            auto fixpos = rest.find("fix");
            if (fixpos != std::string::npos) {
                fixpart = rest.substr(fixpos + 3);
                rest = rest.substr(0, fixpos);
            }
            std::set<int> moved;
            for (auto it = std::sregex_iterator(rest.begin(), rest.end(), cycle_re);
                 it != std::sregex_iterator(); ++it) {
                std::istringstream cs((*it)[1].str());
                std::vector<int> cyc;
                std::string name;
                while (cs >> name) {
                    int i = idx(l, name);
                    if (c.is_derived(i)) fail(l.number, "actions permute non-derived curves only");
                    if (!moved.insert(i).second) fail(l.number, "curve '" + name + "' appears twice");
                    cyc.push_back(i);
                }
                for (std::size_t k = 0; k < cyc.size(); ++k) p.image[cyc[k]] = cyc[(k + 1) % cyc.size()];
            }
            std::string stripped = std::regex_replace(rest, cycle_re, "");
            if (stripped.find_first_not_of(" \t") != std::string::npos)
                fail(l.number, "unexpected text in action: '" + stripped + "'");
            std::istringstream fs(fixpart);
            std::string name;
            while (fs >> name)
                if (moved.count(idx(l, name))) fail(l.number, "curve '" + name + "' is listed as fixed but moved");
            bool added = false;
            for (auto& a : c.actions)
                if (a.name == t[1]) {
                    a.generators.push_back(p);
                    added = true;
                }
            if (!added) c.actions.push_back(GroupAction{t[1], {p}});
        } else if (t[0] == "record") {
            if (t.size() < 3) fail(l.number, "usage: record <id> <terms>...");
            DivisorRecord* rec = nullptr;
            for (auto& r : c.records)
                if (r.id == t[1]) rec = &r;
            if (!rec) {
                c.records.push_back(DivisorRecord{t[1], {}, ""});
                rec = &c.records.back();
            }
            if (t[2] == "zero") {
                if (t.size() != 4) fail(l.number, "usage: record <id> zero <name>");
                idx(l, t[3]);
                rec->zero = t[3];
            } else {
                for (std::size_t i = 2; i < t.size(); ++i) {
                    auto term = parse_term(l.number, t[i]);
                    idx(l, term.second);
                    rec->terms.push_back(term);
                }
            }
        }
    }
    return c;
}

CurveConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read configuration file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const CurveConfig& c) {
    std::ostringstream out;
    out << "surface " << (c.surface == SurfaceKind::K3 ? "k3" : "res") << "\n";
    out << "smoothbranch " << (c.smooth_branch ? "true" : "false") << "\n";
    const int b = c.base_size();
    for (int i = 0; i < b; ++i) out << "curve " << c.curves[i].name << " " << c.curves[i].self << "\n";
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            if (c.pairing(i, j) != 0)
                out << "meet " << c.curves[i].name << " " << c.curves[j].name << " "
                    << c.pairing(i, j).get_str() << "\n";
    for (const auto& d : c.derived) {
        out << "derived " << d.name;
        for (const auto& [k, name] : d.terms) out << " " << k << "*" << name;
        out << "\n";
        const int di = c.index(d.name);
        for (int j = 0; j < c.size(); ++j)
            if (j != di && c.pairing(di, j) != 0)
                out << "meet " << d.name << " " << c.curves[j].name << " "
                    << c.pairing(di, j).get_str() << "\n";
    }
    for (const auto& [curve, base] : c.lifts) out << "lift " << curve << " " << base << "\n";
    if (c.reference) {
        for (const auto& [id, members] : c.reference->fibers) {
            out << "fibration fiber " << id;
            for (const auto& m : members) out << " " << m;
            out << "\n";
        }
        if (!c.reference->sections.empty()) {
            out << "fibration section";
            for (const auto& s : c.reference->sections) out << " " << s;
            out << "\n";
        }
        if (!c.reference->zero.empty()) out << "fibration zero " << c.reference->zero << "\n";
    }
    for (const auto& a : c.actions)
        for (const auto& g : a.generators) {
            out << "action " << a.name;
            std::vector<int> done(b, 0);
            std::string fixed;
            for (int i = 0; i < b; ++i) {
                if (done[i]) continue;
                if (g.image[i] == i) {
                    fixed += " " + c.curves[i].name;
                    done[i] = 1;
                    continue;
                }
                out << " (";
                int j = i;
                bool first = true;
                while (!done[j]) {
                    done[j] = 1;
                    out << (first ? "" : " ") << c.curves[j].name;
                    first = false;
                    j = g.image[j];
                }
                out << ")";
            }
            if (!fixed.empty()) out << " fix" << fixed;
            out << "\n";
        }
    for (const auto& r : c.records) {
        out << "record " << r.id;
        for (const auto& [k, name] : r.terms) out << " " << (k == 1 ? "" : std::to_string(k) + "*") << name;
        out << "\n";
        if (!r.zero.empty()) out << "record " << r.id << " zero " << r.zero << "\n";
    }
    return out.str();
}

}  // namespace k3fib
