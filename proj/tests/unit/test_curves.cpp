#include <gtest/gtest.h>

#include "k3fib/config_io.hpp"
#include "k3fib/curves.hpp"
#include "k3fib/datasets.hpp"
#include "k3fib/lattice.hpp"

using namespace k3fib;

namespace {

const char* kChain = R"(surface res
smoothbranch false
curve O -1
curve A -2
curve B -2
meet O A 1
meet A B 2   # an I2 pair
fibration fiber i2 A B
fibration section O
fibration zero O
action flip fix O A B
record f A B
)";

}  // namespace

TEST(ConfigIo, ParseBasics) {
    CurveConfig c = parse_config(kChain);
    EXPECT_EQ(c.surface, SurfaceKind::RationalElliptic);
    EXPECT_EQ(c.size(), 3);
    EXPECT_EQ(c.pairing(1, 2), Int(2));
    EXPECT_EQ(c.pairing(0, 0), Int(-1));
    ASSERT_TRUE(c.reference.has_value());
    EXPECT_EQ(c.reference->zero, "O");
    EXPECT_EQ(c.action("flip").generators.front().image, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(c.record("f").terms.size(), 2u);
    EXPECT_TRUE(validate_config(c).ok());
}

TEST(ConfigIo, RoundTripEveryDataset) {
    for (const auto& name : dataset_names()) {
        if (is_weierstrass_dataset(name)) continue;
        CurveConfig c = load_dataset(name);
        std::string text = serialize_config(c);
        CurveConfig d = parse_config(text);
        EXPECT_EQ(serialize_config(d), text) << name;
        EXPECT_EQ(d.pairing, c.pairing) << name;
        EXPECT_EQ(d.actions.size(), c.actions.size()) << name;
        EXPECT_EQ(d.records.size(), c.records.size()) << name;
    }
}

TEST(ConfigIo, Errors) {
    EXPECT_THROW(parse_config("curve O -1\n"), DomainError);
    EXPECT_THROW(parse_config("surface res\nbogus x\n"), DomainError);
    EXPECT_THROW(parse_config("surface res\ncurve O -1\ncurve O -1\n"), DomainError);
    EXPECT_THROW(parse_config("surface res\ncurve O -1\nmeet O X 1\n"), DomainError);
    EXPECT_THROW(parse_config("surface res\ncurve O -1\nmeet O O 1\n"), DomainError);
    EXPECT_THROW(parse_config("surface res\ncurve O x\n"), DomainError);
    EXPECT_THROW(parse_config("surface sphere\n"), DomainError);
    EXPECT_THROW(load_config_file("/nonexistent/config.txt"), DomainError);
}

TEST(Validation, ReportsBadConfigs) {
    CurveConfig c = parse_config(kChain);
    c.pairing(0, 1) = 2;
    EXPECT_FALSE(validate_config(c).ok());
    EXPECT_THROW(require_valid(c), DomainError);

    CurveConfig k3 = parse_config("surface k3\ncurve A -1\n");
    EXPECT_FALSE(validate_config(k3).ok());

    // an action that does not preserve intersections
    CurveConfig bad = parse_config("surface res\ncurve O -1\ncurve A -2\ncurve B -2\nmeet O A 1\n"
                                   "action swap (A B) fix O\n");
    EXPECT_FALSE(validate_config(bad).ok());
}

TEST(Curves, ClassesAndActions) {
    CurveConfig c = parse_config(kChain);
    IntVec f = c.divisor({{1, "A"}, {1, "B"}});
    EXPECT_EQ(c.pair(f, f), Int(0));
    IntVec g = c.apply(c.action("flip").generators.front(), f);
    EXPECT_EQ(g, f);
    CurveConfig sym = parse_config("surface res\ncurve A -2\ncurve B -2\nmeet A B 2\naction swap (A B)\n");
    EXPECT_TRUE(validate_config(sym).ok());
    IntVec a = sym.divisor({{1, "A"}});
    EXPECT_FALSE(sym.same_class(a, sym.apply(sym.action("swap").generators.front(), a)));
    EXPECT_TRUE(sym.same_class(sym.divisor({{1, "A"}, {1, "B"}}),
                               sym.apply(sym.action("swap").generators.front(), sym.divisor({{1, "A"}, {1, "B"}}))));
    EXPECT_EQ(c.render_divisor(c.divisor({{2, "A"}, {1, "O"}})), "O+2A");
    EXPECT_THROW(c.index("Z"), DomainError);
    EXPECT_FALSE(c.find("Z").has_value());
}

TEST(Curves, GroupElementsAndComposition) {
    CurveConfig x9 = load_dataset("x9");
    EXPECT_EQ(group_elements(x9, x9.action("tau")).size(), 2u);
    EXPECT_EQ(group_elements(x9, x9.action("iota")).size(), 2u);
    EXPECT_EQ(group_elements(x9, x9.action("galois")).size(), 4u);
    const auto& tau = x9.action("tau").generators.front();
    const auto& iota = x9.action("iota").generators.front();
    EXPECT_EQ(compose(tau, iota), compose(iota, tau));
    EXPECT_EQ(compose(tau, tau).order(), 1);
    EXPECT_EQ(tau.order(), 2);
}

TEST(Curves, DerivedCurveM) {
    CurveConfig x9 = load_dataset("x9");
    ASSERT_EQ(x9.derived.size(), 1u);
    const int m = x9.index("M");
    EXPECT_TRUE(x9.is_derived(m));
    EXPECT_EQ(x9.pairing(m, m), Int(-2));
    for (const char* n : {"Th1_1", "Th2_1", "Th7_2", "Th5_2"}) EXPECT_EQ(x9.pairing(m, x9.index(n)), Int(1)) << n;
    // M = F - Th1_1 - Th2_1 with F the IV* fibre class
    IntVec f = x9.divisor(x9.record("iv*-i3*-i3").terms);
    EXPECT_EQ(x9.pair(f, f), Int(0));
    IntVec rhs = f;
    rhs[x9.index("Th1_1")] -= 1;
    rhs[x9.index("Th2_1")] -= 1;
    EXPECT_TRUE(x9.same_class(x9.curve_vector(m), rhs));
    IntVec e = x9.expand(x9.curve_vector(m));
    EXPECT_EQ(e[m], Int(0));
    EXPECT_EQ(e[x9.index("T2")], Int(2));
}

TEST(Curves, DerivedMeetsAreChecked) {
    std::string text = dump_dataset("x9");
    std::string wrong = text + "meet M O 5\n";
    EXPECT_THROW(parse_config(wrong), DomainError);
}

TEST(DoubleCover, LiftsOfR9) {
    CurveConfig x = double_cover_config(load_dataset("r9"));
    EXPECT_EQ(x.surface, SurfaceKind::K3);
    EXPECT_EQ(x.size(), 21);
    EXPECT_TRUE(x.find("Th0_1") && x.find("Th8_2") && x.find("T1"));
    // sections stay sections meeting both copies; fibre components split
    EXPECT_EQ(x.pairing(x.index("O"), x.index("Th0_1")), Int(1));
    EXPECT_EQ(x.pairing(x.index("O"), x.index("Th0_2")), Int(1));
    EXPECT_EQ(x.pairing(x.index("Th0_1"), x.index("Th0_2")), Int(0));
    EXPECT_EQ(x.pairing(x.index("O"), x.index("O")), Int(-2));
    EXPECT_TRUE(validate_config(x).ok());
    EXPECT_THROW(double_cover_config(x), DomainError);
}

TEST(NsLattice, InvariantsOfTheFourSurfaces) {
    struct Want {
        const char* name;
        long det;
        std::vector<Int> group;
    };
    for (const auto& w : std::vector<Want>{{"x9", -9, {9}}, {"x4", -4, {2, 2}}, {"x3", -4, {2, 2}}, {"x2", -1, {}}}) {
        NsLattice ns = ns_lattice(load_dataset(w.name));
        EXPECT_EQ(ns.lattice.rank(), 18) << w.name;
        EXPECT_EQ(determinant(ns.lattice), Int(w.det)) << w.name;
        EXPECT_EQ(signature(ns.lattice), std::make_pair(1, 17)) << w.name;
        EXPECT_TRUE(ns.lattice.is_even()) << w.name;
        EXPECT_EQ(discriminant_group(ns.lattice).invariants, w.group) << w.name;
    }
    auto x4 = two_elementary_invariants(ns_lattice(load_dataset("x4")).lattice);
    EXPECT_EQ(x4.a, 2);
    EXPECT_EQ(x4.delta, 0);
    auto x3 = two_elementary_invariants(ns_lattice(load_dataset("x3")).lattice);
    EXPECT_EQ(x3.a, 2);
    EXPECT_EQ(x3.delta, 0);
    EXPECT_EQ(discriminant_form(ns_lattice(load_dataset("x9")).lattice).q, (std::vector<Rat>{make_rat(8, 9)}));
}

TEST(NsLattice, RationalSurfacesAreUnimodular) {
    for (const char* n : {"r9", "r4", "r3", "r2"}) {
        NsLattice ns = ns_lattice(load_dataset(n));
        EXPECT_EQ(ns.lattice.rank(), 10) << n;
        EXPECT_EQ(determinant(ns.lattice), Int(-1)) << n;
        EXPECT_EQ(signature(ns.lattice), std::make_pair(1, 9)) << n;
    }
}
