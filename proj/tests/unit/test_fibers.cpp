#include <gtest/gtest.h>

#include <random>

#include "k3fib/datasets.hpp"
#include "k3fib/fibers.hpp"
#include "test_support.hpp"

using namespace k3fib;

namespace {

struct Expected {
    const char* surface;
    const char* id;
    const char* roots;
    const char* fibers;
    int type;
    const char* sections;
    const char* zero;
    int fibration_bound;
    int mw_bound;
};

// Table rows as reproduced by the fibration records; bounds are upper bounds on field degrees.
const std::vector<Expected> kRows = {
    {"x9", "2i9", "A8^2", "2I9", 2, "O T1 T2", "O", 1, 2},
    {"x9", "ii*-i3*", "E8+D7", "II*+I3*", 3, "T2 Th5_2", "T2", 4, 4},
    {"x9", "2iii*", "E7^2", "2III*", 3, "T1 Th4_1 Th2_2", "T1", 4, 4},
    {"x9", "iii*-i9", "E7+A8", "III*+I9", 3, "O T1 Th1_1 Th2_1", "O", 4, 4},
    {"x9", "i11*", "D15", "I11*", 3, "Th2_2 Th3_2", "Th2_2", 4, 4},
    {"x9", "i8*-i4", "D12+A3", "I8*+I4", 3, "Th2_2 Th3_2 Th7_2 M", "Th7_2", 4, 4},
    {"x9", "i16-tt", "A15", "I16", 1, "Th4_1 Th5_1 Th4_2 Th5_2", "Th4_1", 4, 4},
    {"x9", "i5*-i7", "D9+A6", "I5*+I7", 3, "Th4_1 Th2_2 Th6_2 Th7_2", "Th4_1", 4, 4},
    {"x9", "iv*-i3*-i3", "E6+D7+A2", "IV*+I3*+I3|IV", 3, "Th0_1 Th3_1 Th5_2 Th7_2", "Th0_1", 4, 4},
    {"x9", "i2*-i10", "D6+A9", "I2*+I10", 1, "Th2_1 Th7_1 Th2_2 Th7_2 M", "Th7_1", 4, 4},
    {"x9", "i16-a24", "A15", "I16", 3, "T2 Th6_2 Th7_2 Th8_2", "T2", 4, 4},
    {"x9", "i13-i4", "A12+A3", "I13+I4", 3, "O Th2_1 Th7_1 Th4_2 Th5_2 M", "O", 2, 4},
    {"x4", "ii*-i4*", "E8+D8", "II*+I4*", 3, "O", "O", 2, 1},
    {"x4", "2iii*-2i2", "E7^2+A1^2", "2III*+2(I2|III)", 3, "Th2_1 Th6_2", "Th2_1", 2, 2},
    {"x4", "i12*", "D16", "I12*", 1, "", "", 1, 1},
    {"x4", "i8*-i0*", "D12+D4", "I8*+I0*", 3, "T1 Th4_2", "T1", 2, 2},
    {"x4", "2i4*", "D8^2", "2I4*", 2, "O T1", "O", 1, 1},
    {"x4", "i16", "A15", "I16", 1, "Th1_1 Th7_1 Th1_2 Th7_2", "Th1_1", 2, 2},
    {"x3", "ii*-i4*", "E8+D8", "II*+I4*", 3, "Th1_2", "Th1_2", 2, 2},
    {"x3", "2iii*-2i2", "E7^2+A1^2", "2III*+2(I2|III)", 2, "O T1", "O", 1, 1},
    {"x3", "i12*", "D16", "I12*", 3, "Th1_2", "Th1_2", 2, 2},
    {"x3", "i8*-i0*", "D12+D4", "I8*+I0*", 1, "Th1_1 Th1_2", "Th1_2", 2, 2},
    {"x3", "2i4*", "D8^2", "2I4*", 3, "Th5_1 Th1_2", "Th5_1", 2, 2},
    {"x3", "i16", "A15", "I16", 1, "Th7_1 Ph1_1 Ph2_1 Th7_2 Ph1_2 Ph2_2", "Th7_1", 2, 2},
    {"x2", "2ii*", "E8^2", "2II*", 2, "O", "O", 1, 1},
    {"x2", "i12*", "D16", "I12*", 1, "Th7_1 Th7_2", "Th7_1", 2, 2},
};

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
}

}  // namespace

TEST(Records, ReproduceTables) {
    for (const auto& e : kRows) {
        CurveConfig c = load_dataset(e.surface);
        FibrationRecord r = make_record(c, c.record(e.id));
        SCOPED_TRACE(std::string(e.surface) + " " + e.id);
        EXPECT_EQ(r.root_part(), e.roots);
        EXPECT_EQ(r.fiber_types(), e.fibers);
        EXPECT_EQ(r.tau_type, e.type);
        EXPECT_EQ(join(r.sections), e.sections);
        EXPECT_EQ(r.zero, e.zero);
        EXPECT_EQ(r.bounds.fibration_bound, e.fibration_bound);
        EXPECT_EQ(r.bounds.mw_bound, e.mw_bound);
    }
}

TEST(Records, RecordCounts) {
    EXPECT_EQ(load_dataset("x9").records.size(), 12u);
    EXPECT_EQ(load_dataset("x4").records.size(), 6u);
    EXPECT_EQ(load_dataset("x3").records.size(), 6u);
    EXPECT_EQ(load_dataset("x2").records.size(), 2u);
}

TEST(FindFibers, EveryResultIsAnIsotropicFibre) {
    for (const char* s : {"x9", "x4", "x3", "x2", "r9", "r2"}) {
        CurveConfig c = load_dataset(s);
        for (const char* k : {"I9", "I16", "I3*", "I4*", "I12*", "II*", "III*", "IV*", "I2", "I4"}) {
            for (const auto& cand : find_fibers(c, parse_kodaira(k))) {
                EXPECT_EQ(c.pair(cand.fiber, cand.fiber), Int(0)) << s << " " << k;
                for (const auto& sup : cand.supports) {
                    IntVec d(c.size());
                    for (std::size_t i = 0; i < sup.curves.size(); ++i) d[sup.curves[i]] += sup.marks[i];
                    EXPECT_TRUE(c.same_class(d, cand.fiber));
                    for (int curve : sup.curves)
                        EXPECT_EQ(c.pair(d, c.curve_vector(curve)), Int(0)) << s << " " << k;
                }
            }
        }
    }
}

TEST(FindFibers, KnownCounts) {
    CurveConfig r9 = load_dataset("r9");
    EXPECT_EQ(find_fibers(r9, parse_kodaira("I9")).size(), 1u);
    EXPECT_TRUE(find_fibers(r9, parse_kodaira("II*")).empty());
    CurveConfig x2 = load_dataset("x2");
    EXPECT_EQ(find_fibers(x2, parse_kodaira("II*")).size(), 1u);
    EXPECT_EQ(find_fibers(x2, parse_kodaira("II*")).front().supports.size(), 2u);
    EXPECT_EQ(find_fibers(x2, parse_kodaira("I12*")).size(), 1u);
}

TEST(FindFibers, I8StarIsNotI11Star) {
    // the 13-component listing equals the support of an I8*, not of an I11*
    CurveConfig x9 = load_dataset("x9");
    IntVec listing = x9.divisor(x9.record("i8*-i4").terms);
    EXPECT_TRUE(k3fib::testing::listing_found(x9, listing));
    for (const auto& cand : find_fibers(x9, parse_kodaira("I11*")))
        for (const auto& s : cand.supports) EXPECT_EQ(s.curves.size(), 16u);
}

TEST(Decomposition, PartialFibresUseNodeZero) {
    CurveConfig x9 = load_dataset("x9");
    FibrationRecord r = make_record(x9, x9.record("ii*-i3*"));
    ASSERT_EQ(r.fibers.size(), 2u);
    EXPECT_FALSE(r.fibers[0].partial);
    EXPECT_TRUE(r.fibers[1].partial);
    EXPECT_EQ(r.fibers[1].root.str(), "D7");
}

TEST(Decomposition, RejectsNonFibres) {
    CurveConfig x9 = load_dataset("x9");
    IntVec bad = x9.divisor({{1, "O"}});
    EXPECT_THROW(fiber_decomposition(x9, bad), DomainError);
}

TEST(Height, KnownValues) {
    CurveConfig x9 = load_dataset("x9");
    auto f = [&](const char* id) { return x9.divisor(x9.record(id).terms); };
    HeightReport h = height(x9, f("i16-a24"), "T2", "Th7_2");
    EXPECT_EQ(h.value, make_rat(9, 16));
    EXPECT_FALSE(is_torsion_section(h));
    ASSERT_EQ(h.terms.size(), 1u);
    EXPECT_EQ(h.terms[0].value, make_rat(55, 16));
    EXPECT_EQ(height(x9, f("i16-tt"), "Th4_1", "Th5_2").value, Rat(0));
    EXPECT_EQ(height(x9, f("i8*-i4"), "Th7_2", "Th3_2").value, Rat(0));
    EXPECT_THROW(height(x9, f("i16-a24"), "T2", "Th0_1"), DomainError);
}

TEST(Height, RationalEllipticTorsion) {
    // t1, t2 are 3-torsion on the rational surface with an I9 fibre
    CurveConfig r9 = load_dataset("r9");
    IntVec f = r9.divisor({{1, "C0"}, {1, "C1"}, {1, "C2"}, {1, "C3"}, {1, "C4"}, {1, "C5"}, {1, "C6"}, {1, "C7"}, {1, "C8"}});
    EXPECT_EQ(height(r9, f, "O", "t1").value, Rat(0));
    EXPECT_EQ(height(r9, f, "O", "t2").value, Rat(0));
}

TEST(HeightProperty, OrientationAndLabelingInvariance) {
    std::mt19937 rng(7);
    CurveConfig x9 = load_dataset("x9");
    const std::vector<std::tuple<const char*, const char*, const char*>> cases{
        {"i16-a24", "T2", "Th7_2"}, {"i16-a24", "T2", "Th6_2"}, {"i16-tt", "Th4_1", "Th5_2"},
        {"i13-i4", "O", "Th2_1"},   {"i5*-i7", "Th4_1", "Th6_2"}, {"iii*-i9", "O", "Th2_1"}};
    std::vector<Rat> base;
    for (const auto& [id, z, s] : cases) base.push_back(height(x9, x9.divisor(x9.record(id).terms), z, s).value);
    for (int trial = 0; trial < 8; ++trial) {
        CurveConfig p = k3fib::testing::permute_config(x9, k3fib::testing::random_order(x9.base_size(), rng));
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto& [id, z, s] = cases[i];
            EXPECT_EQ(height(p, p.divisor(p.record(id).terms), z, s).value, base[i]) << id;
        }
    }
    // the iota image reverses every cycle
    const auto& iota = x9.action("iota").generators.front();
    IntVec f = x9.apply(iota, x9.divisor(x9.record("i16-a24").terms));
    EXPECT_EQ(height(x9, f, "T1", "Th2_2").value, make_rat(9, 16));
}

TEST(TypeProperty, BasisIndependence) {
    std::mt19937 rng(11);
    for (const char* s : {"x9", "x4", "x3", "x2"}) {
        CurveConfig c = load_dataset(s);
        std::vector<FibrationRecord> base;
        for (const auto& r : c.records) base.push_back(make_record(c, r));
        for (int trial = 0; trial < 4; ++trial) {
            CurveConfig p = k3fib::testing::permute_config(c, k3fib::testing::random_order(c.base_size(), rng));
            for (std::size_t i = 0; i < c.records.size(); ++i) {
                FibrationRecord r = make_record(p, p.records[i]);
                EXPECT_EQ(r.tau_type, base[i].tau_type) << s << " " << r.id;
                EXPECT_EQ(r.bounds.fibration_bound, base[i].bounds.fibration_bound) << s << " " << r.id;
                EXPECT_EQ(r.bounds.mw_bound, base[i].bounds.mw_bound) << s << " " << r.id;
                EXPECT_EQ(r.fiber_types(), base[i].fiber_types()) << s << " " << r.id;
                EXPECT_EQ(r.sections.size(), base[i].sections.size()) << s << " " << r.id;
            }
        }
    }
}

TEST(Type, RequiresSmoothBranch) {
    CurveConfig x9 = load_dataset("x9");
    x9.smooth_branch = false;
    IntVec f = x9.divisor(x9.record("2i9").terms);
    EXPECT_THROW(fibration_type(x9, f, "tau", reference_fiber_class(x9)), DomainError);
}

TEST(Type, ImageOfCurves) {
    CurveConfig x9 = load_dataset("x9");
    EXPECT_EQ(classify_image(x9, "O", "tau").kind, ImageKind::Section);
    EXPECT_EQ(classify_image(x9, "Th0_1", "tau").kind, ImageKind::FiberComponent);
    CurveConfig x3 = load_dataset("x3");
    EXPECT_EQ(classify_image(x3, "T1", "tau").kind, ImageKind::Section);
}

TEST(IndexInNs, CurvesSpanNs) {
    CurveConfig x9 = load_dataset("x9");
    NsLattice ns = ns_lattice(x9);
    ASSERT_FALSE(ns.basis_names.empty());
    std::vector<IntVec> classes;
    for (const auto& n : ns.basis_names) classes.push_back(x9.curve_vector(x9.index(n)));
    EXPECT_EQ(index_in_ns(x9, classes), Int(1));
    for (auto& v : classes[0]) v *= 2;
    EXPECT_EQ(index_in_ns(x9, classes), Int(2));
    classes.pop_back();
    EXPECT_THROW(index_in_ns(x9, classes), DomainError);
}
