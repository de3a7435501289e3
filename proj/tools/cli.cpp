#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

#include "k3fib/config_io.hpp"
#include "k3fib/contract.hpp"
#include "k3fib/datasets.hpp"
#include "k3fib/fibers.hpp"
#include "k3fib/niemeier.hpp"
#include "k3fib/nishiyama.hpp"
#include "k3fib/render.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

namespace {

class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string bound_str(int b) { return b == 1 ? "1" : "<=" + std::to_string(b); }

// "2*O Th0_1 -1*Th1_1" (commas also accepted as separators)
std::vector<std::pair<int, std::string>> parse_terms(std::string s) {
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<std::pair<int, std::string>> out;
    std::string tok;
    while (in >> tok) {
        int k = 1;
        if (auto star = tok.find('*'); star != std::string::npos) {
            try {
                k = std::stoi(tok.substr(0, star));
            } catch (const std::exception&) {
                throw DomainError("bad coefficient in '" + tok + "'");
            }
            tok = tok.substr(star + 1);
        }
        out.emplace_back(k, tok);
    }
    if (out.empty()) throw DomainError("empty divisor");
    return out;
}

struct Options {
    std::string format;
    std::string t0;
    std::string name;
    std::string config;
    std::string record;
    std::string fiber;
    std::string zero;
    std::string section;
    std::string kodaira;
    std::string action;
    std::string curve;
    std::string a4, a6, x, y, dataset;
    long sqrt_d = 1;
    int bound = 12;
    bool details = false;
};

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    Format format() const { return o.format.empty() ? default_format() : parse_format(o.format); }

    void emit(const Table& t) { out_ << render_table(t, format()); }

    void classify() {
        auto rows = k3fib::classify(parse_root_type(o.t0));
        Table t{{"n", "Niemeier", "embedding", "roots orth.", "reducible fibers", "MW"}, {}};
        bool bad = false;
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            t.rows.push_back({std::to_string(i + 1), r.niemeier, r.embedding,
                              r.roots.empty() ? "0" : r.roots, r.fibers.empty() ? "-" : r.fibers, r.mw});
            if (!r.diagnostic.empty()) {
                err_ << "row " << i + 1 << " (" << r.niemeier << "): " << r.diagnostic << "\n";
                bad = true;
            }
        }
        emit(t);
        if (bad) throw InternalError("embedding uniqueness violated");
    }

    void niemeier_list() {
        Table t{{"n", "lattice", "components", "roots", "glue order"}, {}};
        for (const auto& s : catalog()) {
            Int det = 1;
            for (const auto& c : s.components) det *= determinant(cartan_gram(c));
            std::string glue = s.rootless() ? "-" : isqrt(det).get_str();
            t.rows.push_back({std::to_string(catalog_index(s)), s.name, std::to_string(s.components.size()),
                              std::to_string(s.root_count()), glue});
        }
        emit(t);
    }

    void niemeier_verify() {
        int ok = 0;
        for (const auto& s : catalog()) {
            auto r = verify(s);
            if (r.ok()) ++ok;
            for (const auto& f : r.failures) out_ << s.name << ": " << f << "\n";
        }
        out_ << ok << "/" << catalog().size() << " ok\n";
        if (ok != static_cast<int>(catalog().size())) throw DomainError("catalog verification failed");
    }

    void niemeier_dump() {
        auto n = realize(catalog_entry(o.name));
        out_ << "# " << n.spec.name << ", Gram matrix on an integral basis\n";
        const auto& g = n.lattice.gram();
        for (size_t i = 0; i < g.rows(); ++i) {
            for (size_t j = 0; j < g.cols(); ++j) out_ << (j ? " " : "") << g(i, j).get_str();
            out_ << "\n";
        }
    }

    CurveConfig config() const {
        if (o.config.empty()) throw DomainError("--config is required");
        return resolve_config(o.config);
    }

    IntVec fiber_of(const CurveConfig& c, std::string* zero) const {
        if (!o.record.empty() && !o.fiber.empty()) throw DomainError("give either --record or --fiber");
        if (!o.record.empty()) {
            const auto& r = c.record(o.record);
            if (zero && zero->empty()) *zero = r.zero;
            return c.divisor(r.terms);
        }
        if (!o.fiber.empty()) return c.divisor(parse_terms(o.fiber));
        throw DomainError("--record or --fiber is required");
    }

    void graph_ns() {
        CurveConfig c = config();
        NsLattice ns = ns_lattice(c);
        const auto& l = ns.lattice;
        auto [pos, neg] = signature(l);
        auto dg = discriminant_group(l);
        Table t{{"property", "value"}, {}};
        t.rows.push_back({"curves", std::to_string(c.base_size())});
        if (!c.derived.empty()) t.rows.push_back({"derived curves", std::to_string(c.derived.size())});
        t.rows.push_back({"rank", std::to_string(l.rank())});
        t.rows.push_back({"det", determinant(l).get_str()});
        t.rows.push_back({"signature", "(" + std::to_string(pos) + ", " + std::to_string(neg) + ")"});
        t.rows.push_back({"even", l.is_even() ? "yes" : "no"});
        t.rows.push_back({"discriminant group", render_group(dg.invariants, 0)});
        if (l.is_even() && !dg.trivial()) {
            auto f = discriminant_form(l);
            std::vector<std::string> qs;
            for (const auto& q : f.q) qs.push_back(to_string(q));
            t.rows.push_back({"q on generators (mod 2)", join(qs, " ")});
            bool two = std::all_of(dg.invariants.begin(), dg.invariants.end(), [](const Int& d) { return d == 2; });
            if (two) {
                auto te = two_elementary_invariants(l);
                t.rows.push_back({"2-elementary (a, delta)",
                                  "(" + std::to_string(te.a) + ", " + std::to_string(te.delta) + ")"});
            }
        }
        t.rows.push_back({"basis", ns.basis_names.empty() ? "(no curve basis)" : join(ns.basis_names, " ")});
        emit(t);
    }

    void graph_fibers() {
        CurveConfig c = config();
        if (o.kodaira.empty()) throw DomainError("--kodaira is required");
        auto found = find_fibers(c, parse_kodaira(o.kodaira));
        Table t{{"n", "fiber", "supports", "reducible fibers", "sections"}, {}};
        for (size_t i = 0; i < found.size(); ++i) {
            auto rec = make_record(c, std::to_string(i + 1), found[i].fiber);
            t.rows.push_back({std::to_string(i + 1), c.render_divisor(found[i].fiber),
                              std::to_string(found[i].supports.size()), rec.fiber_types(),
                              join(rec.sections, " ")});
        }
        emit(t);
    }

    std::vector<std::string> record_row(const FibrationRecord& r) const {
        return {r.id,
                r.root_part().empty() ? "0" : r.root_part(),
                r.fiber_types(),
                r.tau_type ? std::to_string(r.tau_type) : "-",
                join(r.sections, " "),
                r.zero.empty() ? "-" : r.zero,
                bound_str(r.bounds.fibration_bound),
                bound_str(r.bounds.mw_bound)};
    }

    void graph_type() {
        CurveConfig c = config();
        if (!o.curve.empty()) {
            auto ic = classify_image(c, o.curve, o.action.empty() ? "tau" : o.action);
            switch (ic.kind) {
                case ImageKind::FiberComponent: out_ << "fiber component\n"; break;
                case ImageKind::Section: out_ << "section\n"; break;
                case ImageKind::MultiSection: out_ << ic.m << "-section\n"; break;
            }
            return;
        }
        Table t{{"id", "roots orth.", "reducible fibers", "type", "sections", "zero", "[k_eta:k]", "[k_eta,MW:k]"},
                {}};
        if (o.record.empty() && o.fiber.empty()) {
            if (c.records.empty()) throw DomainError("configuration has no records; give --fiber");
            for (const auto& r : c.records) t.rows.push_back(record_row(make_record(c, r)));
        } else {
            std::string zero = o.zero;
            IntVec f = fiber_of(c, &zero);
            t.rows.push_back(record_row(make_record(c, o.record.empty() ? "fiber" : o.record, f, zero)));
        }
        emit(t);
    }

    void graph_height() {
        CurveConfig c = config();
        std::string zero = o.zero;
        IntVec f = fiber_of(c, &zero);
        if (zero.empty()) throw DomainError("--zero is required");
        if (o.section.empty()) throw DomainError("--section is required");
        auto h = height(c, f, zero, o.section);
        out_ << to_string(h.value) << "\n";
        if (!o.details) return;
        out_ << "torsion: " << (is_torsion_section(h) ? "yes" : "no") << "\n";
        out_ << "2chi = " << h.constant << ", 2(P.O) = " << h.twice_po.get_str() << "\n";
        for (const auto& term : h.terms)
            out_ << term.fiber << ": zero at node " << term.zero_node << ", section at node "
                 << term.section_node << ", contribution " << to_string(term.value) << "\n";
    }

    void graph_contract() {
        CurveConfig c = config();
        auto results = contract_to_minimal(c, o.action);
        Table t{{"terminal", "contracted", "sequence"}, {}};
        for (const auto& r : results) {
            std::vector<std::string> orbits;
            for (const auto& orb : r.log) orbits.push_back("{" + join(orb, " ") + "}");
            t.rows.push_back({r.terminal, std::to_string(r.contracted), join(orbits, " ")});
        }
        emit(t);
    }

    WeierstrassExample explicit_example() const {
        if (!o.dataset.empty()) return weierstrass_example(o.dataset);
        if (o.a4.empty() || o.a6.empty()) throw DomainError("--a4 and --a6 (or --dataset) are required");
        WeierstrassExample ex;
        ex.name = "input";
        ex.sqrt_d = o.sqrt_d;
        ex.a4 = o.a4;
        ex.a6 = o.a6;
        if (o.x.empty() != o.y.empty()) throw DomainError("give both --x and --y");
        if (!o.x.empty()) ex.points.push_back({"P", o.x, o.y, std::nullopt});
        return ex;
    }

    void weierstrass(bool torsion) {
        auto ex = explicit_example();
        FFCurve e = ex.curve();
        if (o.dataset.empty() && !ex.points.empty()) {
            FFPoint p = ex.point(ex.points.front());
            bool on = e.on_curve(p);
            if (!torsion) {
                out_ << (on ? "on curve" : "not on curve") << "\n";
                return;
            }
            if (!on) throw DomainError("point is not on the curve");
            auto n = e.torsion_order(p, o.bound);
            out_ << (n ? std::to_string(*n) : "exceeds " + std::to_string(o.bound)) << "\n";
            return;
        }
        Table t{{"point", "x", "y", "on curve", torsion ? "order" : "expected"}, {}};
        if (ex.points.empty()) {
            out_ << "discriminant: " << e.discriminant().str() << "\n";
            return;
        }
        for (const auto& wp : ex.points) {
            FFPoint p = ex.point(wp);
            bool on = e.on_curve(p);
            std::string last;
            if (torsion) {
                auto n = on ? e.torsion_order(p, o.bound) : std::nullopt;
                last = !on ? "-" : n ? std::to_string(*n) : "exceeds " + std::to_string(o.bound);
            } else {
                last = wp.order ? "order " + std::to_string(*wp.order) : "off curve";
            }
            t.rows.push_back({wp.name, wp.x, wp.y, on ? "yes" : "no", last});
        }
        emit(t);
    }

    void datasets_list() {
        for (const auto& n : dataset_names()) out_ << n << "\n";
    }

    void datasets_dump() { out_ << dump_dataset(o.name); }

    Options o;

private:
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Cli cli(out, err);
    Options& o = cli.o;
    std::function<void()> action;

    CLI::App app{"Niemeier frames, curve configurations and elliptic fibrations", "k3fib"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format (md or csv; default from K3FIB_FORMAT, else md)")
        ->check(CLI::IsMember({"md", "csv"}));

    auto* classify = app.add_subcommand("classify", "Frames of primitive embeddings of T0 into Niemeier lattices");
    classify->add_option("--t0", o.t0, "A8, D8 or E8")->required()->check(CLI::IsMember({"A8", "D8", "E8"}));
    classify->callback([&] { action = [&] { cli.classify(); }; });

    auto* niemeier = app.add_subcommand("niemeier", "Niemeier lattice catalog");
    niemeier->require_subcommand(1);
    niemeier->add_subcommand("list", "List the catalog")->callback([&] { action = [&] { cli.niemeier_list(); }; });
    niemeier->add_subcommand("verify", "Verify every catalog entry")->callback([&] {
        action = [&] { cli.niemeier_verify(); };
    });
    auto* ndump = niemeier->add_subcommand("dump", "Print a Gram matrix");
    ndump->add_option("name", o.name, "Root part, e.g. A8^3, or Leech")->required();
    ndump->callback([&] { action = [&] { cli.niemeier_dump(); }; });

    auto* graph = app.add_subcommand("graph", "Curve configurations on K3 and rational elliptic surfaces");
    graph->require_subcommand(1);
    auto config_opts = [&](CLI::App* s) {
        s->add_option("--config", o.config, "Dataset name or config file")->required();
    };
    auto divisor_opts = [&](CLI::App* s) {
        s->add_option("--record", o.record, "Named divisor of the config");
        s->add_option("--fiber", o.fiber, "Divisor as '2*O Th0_1 ...'");
    };
    auto* ns = graph->add_subcommand("ns", "Neron-Severi lattice spanned by the curves");
    config_opts(ns);
    ns->callback([&] { action = [&] { cli.graph_ns(); }; });
    auto* fibers = graph->add_subcommand("fibers", "Fibre classes of a Kodaira type");
    config_opts(fibers);
    fibers->add_option("--kodaira", o.kodaira, "Kodaira type, e.g. I16 or III*")->required();
    fibers->callback([&] { action = [&] { cli.graph_fibers(); }; });
    auto* type = graph->add_subcommand("type", "Fibration type and degree bounds");
    config_opts(type);
    divisor_opts(type);
    type->add_option("--zero", o.zero, "Zero section");
    type->add_option("--curve", o.curve, "Classify the image of a curve instead");
    type->add_option("--action", o.action, "Involution used with --curve (default tau)");
    type->callback([&] { action = [&] { cli.graph_type(); }; });
    auto* height = graph->add_subcommand("height", "Height of a section");
    config_opts(height);
    divisor_opts(height);
    height->add_option("--zero", o.zero, "Zero section (default: the record's)");
    height->add_option("--section", o.section, "Section")->required();
    height->add_flag("--details", o.details, "Show the height terms");
    height->callback([&] { action = [&] { cli.graph_height(); }; });
    auto* contract = graph->add_subcommand("contract", "Equivariant contractions to minimal models");
    config_opts(contract);
    contract->add_option("--action", o.action, "Group action (default trivial)");
    contract->callback([&] { action = [&] { cli.graph_contract(); }; });

    auto* weier = app.add_subcommand("weierstrass", "Sections of y^2 = x^3 + a4 x + a6 over K(t)");
    weier->require_subcommand(1);
    auto curve_opts = [&](CLI::App* s) {
        s->add_option("--a4", o.a4, "Polynomial in t (r = sqrt D)");
        s->add_option("--a6", o.a6, "Polynomial in t (r = sqrt D)");
        s->add_option("--x", o.x, "x-coordinate");
        s->add_option("--y", o.y, "y-coordinate");
        s->add_option("--sqrt", o.sqrt_d, "Square-free D adjoined as r");
        s->add_option("--dataset", o.dataset, "Embedded weierstrass-* example");
    };
    auto* check = weier->add_subcommand("check", "Test whether points lie on the curve");
    curve_opts(check);
    check->callback([&] { action = [&] { cli.weierstrass(false); }; });
    auto* torsion = weier->add_subcommand("torsion", "Torsion order of points");
    curve_opts(torsion);
    torsion->add_option("--bound", o.bound, "Largest order tried")->check(CLI::Range(1, 1000));
    torsion->callback([&] { action = [&] { cli.weierstrass(true); }; });

    auto* datasets = app.add_subcommand("datasets", "Embedded datasets");
    datasets->require_subcommand(1);
    datasets->add_subcommand("list", "List dataset names")->callback([&] { action = [&] { cli.datasets_list(); }; });
    auto* dump = datasets->add_subcommand("dump", "Print a dataset");
    dump->add_option("name", o.name, "Dataset name")->required();
    dump->callback([&] { action = [&] { cli.datasets_dump(); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        if (action) action();
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace k3fib
