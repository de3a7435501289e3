#include <gtest/gtest.h>

#include <tuple>

#include "k3fib/lattice.hpp"
#include "k3fib/niemeier.hpp"
#include "k3fib/nishiyama.hpp"

using namespace k3fib;

namespace {

using Row = std::tuple<std::string, std::string, std::string, std::string, std::string>;

std::vector<Row> rows_of(const RootType& t0) {
    std::vector<Row> out;
    for (const auto& r : classify(t0)) out.emplace_back(r.niemeier, r.embedding, r.roots, r.fibers, r.mw);
    return out;
}

}  // namespace

TEST(Targets, AdmissibleCounts) {
    EXPECT_EQ(admissible_targets(make_root_type('A', 8)).size(), 12u);
    EXPECT_EQ(admissible_targets(make_root_type('D', 8)).size(), 6u);
    EXPECT_EQ(admissible_targets(make_root_type('E', 8)).size(), 2u);
    EXPECT_THROW(admissible_targets(make_root_type('A', 7)), DomainError);
}

TEST(Classify, A8Table) {
    const std::vector<Row> want{
        {"A8^3", "A8 in A8", "A8^2", "2I9", "Z/3Z"},
        {"E8+D16", "A8 in D16", "E8+D7", "II*+I3*", "Z"},
        {"E7^2+D10", "A8 in D10", "E7^2", "2III*", "Z^2"},
        {"E7+A17", "A8 in A17", "E7+A8", "III*+I9", "Z"},
        {"D24", "A8 in D24", "D15", "I11*", "Z"},
        {"D12^2", "A8 in D12", "D12+A3", "I8*+I4", "Z/2Z+Z"},
        {"D9+A15", "A8 in D9", "A15", "I16", "Z/2Z+Z"},
        {"D9+A15", "A8 in A15", "D9+A6", "I5*+I7", "Z"},
        {"E6+D7+A11", "A8 in A11", "E6+D7+A2", "IV*+I3*+I3|IV", "Z"},
        {"D6+A9^2", "A8 in A9", "D6+A9", "I2*+I10", "Z/2Z+Z"},
        {"A24", "A8 in A24", "A15", "I16", "Z"},
        {"A12^2", "A8 in A12", "A12+A3", "I13+I4", "Z"},
    };
    EXPECT_EQ(rows_of(make_root_type('A', 8)), want);
}

TEST(Classify, D8Table) {
    const std::vector<Row> want{
        {"E8+D16", "D8 in D16", "E8+D8", "II*+I4*", "0"},
        {"E7^2+D10", "D8 in D10", "E7^2+A1^2", "2III*+2(I2|III)", "Z/2Z"},
        {"D24", "D8 in D24", "D16", "I12*", "0"},
        {"D12^2", "D8 in D12", "D12+D4", "I8*+I0*", "Z/2Z"},
        {"D8^3", "D8 in D8", "D8^2", "2I4*", "Z/2Z"},
        {"D9+A15", "D8 in D9", "A15", "I16", "Z/2Z+Z"},
    };
    EXPECT_EQ(rows_of(make_root_type('D', 8)), want);
}

TEST(Classify, E8Table) {
    const std::vector<Row> want{
        {"E8^3", "E8 in E8", "E8^2", "2II*", "0"},
        {"E8+D16", "E8 in E8", "D16", "I12*", "Z/2Z"},
    };
    EXPECT_EQ(rows_of(make_root_type('E', 8)), want);
}

TEST(Classify, RowsAreConsistent) {
    for (auto t0 : {make_root_type('A', 8), make_root_type('D', 8), make_root_type('E', 8)}) {
        for (const auto& r : classify(t0)) {
            EXPECT_TRUE(r.diagnostic.empty()) << r.niemeier << ": " << r.diagnostic;
            int root_rank = 0;
            for (const auto& part : parse_root_part(r.roots == "-" ? "" : r.roots)) root_rank += part.rank;
            EXPECT_EQ(r.mw_rank, 16 - root_rank) << r.niemeier;
        }
    }
}

TEST(FrameProperty, DeterminantIdentityForEveryFrame) {
    const std::vector<std::pair<RootType, long>> cases{
        {make_root_type('A', 8), 9}, {make_root_type('D', 8), 4}, {make_root_type('E', 8), 1}};
    for (const auto& [t0, det] : cases) {
        for (const auto& t : admissible_targets(t0)) {
            RealizedNiemeier n = realize(catalog().at(t.catalog_index - 1));
            EmbeddingSearch es = find_embedding(n, t0, t.component, 8);
            ASSERT_FALSE(es.embeddings.empty()) << n.spec.name;
            EXPECT_FALSE(es.uniqueness_violation) << n.spec.name << ": " << es.diagnostic;
            for (const auto& e : es.embeddings) {
                Frame f = frame(n, e);
                Int d = determinant(f.w.induced_gram());
                EXPECT_EQ(d < 0 ? Int(-d) : d, Int(det)) << t0.str() << " in " << n.spec.name;
                EXPECT_EQ(f.w.rank(), 16);
                EXPECT_EQ(f.det < 0 ? Int(-f.det) : f.det, Int(det));
                // W is the orthogonal complement of T0: every image root is orthogonal to W
                IntMatrix cross = e.root_images * n.lattice.gram() * f.w.basis.transpose();
                for (const auto& v : cross.data()) ASSERT_EQ(v, Int(0));
                EXPECT_EQ(gram_of(e.root_images, n.lattice.gram()), cartan_gram(t0));
            }
        }
    }
}

TEST(FrameProperty, DiscriminantGroupMatchesT0) {
    RealizedNiemeier n = realize(catalog_entry("D12^2"));
    EmbeddingSearch es = find_embedding(n, make_root_type('A', 8), 0);
    ASSERT_FALSE(es.embeddings.empty());
    Frame f = frame(n, es.embeddings.front());
    auto w = IntLattice::from_gram(f.w.induced_gram());
    EXPECT_EQ(discriminant_group(w).invariants, (std::vector<Int>{9}));
    auto qw = discriminant_form(w);
    auto qt = discriminant_form(IntLattice::from_gram(cartan_gram(make_root_type('A', 8))));
    // q_W = -q_T0 on corresponding generators: the values q_W(g) range over -8k^2/9
    bool negated = false;
    for (int k = 1; k < 9; ++k)
        if (mod2(-qt.q[0] * k * k) == qw.q[0]) negated = true;
    EXPECT_TRUE(negated);
}

TEST(Rendering, GroupsAndFibres) {
    EXPECT_EQ(render_group({}, 0), "0");
    EXPECT_EQ(render_group({Int(2)}, 1), "Z/2Z+Z");
    EXPECT_EQ(render_group({}, 2), "Z^2");
    EXPECT_EQ(render_group({Int(3)}, 0), "Z/3Z");
    KodairaType i9{KodairaFamily::In, 9};
    EXPECT_EQ(render_fibers({{i9}, {i9}}), "2I9");
}
