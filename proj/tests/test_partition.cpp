#include "hpi/partition.hpp"

#include "hpi/errors.hpp"
#include "test_util.hpp"

using namespace hpi;

int main() {
    // conjugation
    CHECK_EQ(Partition{}.conjugate(), Partition{});
    CHECK_EQ((Partition{2, 1}).conjugate(), (Partition{2, 1}));
    CHECK_EQ((Partition{3, 1}).conjugate(), (Partition{2, 1, 1}));
    for (int k = 0; k <= 12; ++k)
        for (const Partition& p : partitions_of(k))
            CHECK_EQ(p.conjugate().conjugate(), p);

    // Frobenius notation
    {
        auto [a0, b0] = Partition{}.frobenius();
        CHECK(a0.empty() && b0.empty());
        auto [a1, b1] = Partition{2, 1}.frobenius();
        CHECK_EQ(a1, (std::vector<int>{1}));
        CHECK_EQ(b1, (std::vector<int>{1}));
        auto [a2, b2] = Partition{3, 3, 1}.frobenius();
        CHECK_EQ(a2, (std::vector<int>{2, 1}));
        CHECK_EQ(b2, (std::vector<int>{2, 0}));
        for (int k = 0; k <= 10; ++k)
            for (const Partition& p : partitions_of(k)) {
                auto [a, b] = p.frobenius();
                CHECK_EQ(Partition::from_frobenius(a, b), p);
            }
    }

    // GL dimensions
    CHECK_EQ((Partition{2, 1}).dim_gl(4), 20);
    CHECK_EQ((Partition{1, 1, 1, 1, 1}).dim_gl(4), 0);
    CHECK_EQ((Partition{3}).dim_gl(4), 20);
    CHECK_EQ(Partition{}.dim_gl(3), 1);

    // enumeration
    CHECK_EQ(partitions_of(0).size(), 1u);
    {
        auto p3 = partitions_of(3);
        CHECK_EQ(p3.size(), 3u);
        CHECK_EQ(p3[0], (Partition{3}));
        CHECK_EQ(p3[1], (Partition{2, 1}));
        CHECK_EQ(p3[2], (Partition{1, 1, 1}));
        auto p42 = partitions_of(4, {.max_length = 2, .max_part = {}});
        CHECK_EQ(p42.size(), 3u);
        CHECK_EQ(p42[0], (Partition{4}));
        CHECK_EQ(p42[1], (Partition{3, 1}));
        CHECK_EQ(p42[2], (Partition{2, 2}));
        auto pmax = partitions_of(4, {.max_length = {}, .max_part = 2});
        CHECK_EQ(pmax.size(), 3u);
    }
    {
        const int expect[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42,
                              56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
        for (int k = 0; k <= 20; ++k)
            CHECK_EQ(static_cast<int>(partitions_of(k).size()), expect[k]);
    }

    // text forms
    CHECK_EQ(Partition::parse("[3,2,1]").to_bracket(), "[3,2,1]");
    CHECK_EQ(Partition::parse("[2^3]"), (Partition{2, 2, 2}));
    CHECK_EQ(Partition::parse("[]"), Partition{});
    CHECK_EQ(Partition::parse("0"), Partition{});
    CHECK_EQ(Partition::parse("[2,1,0,0]"), (Partition{2, 1}));
    CHECK_EQ((Partition{2, 1, 1, 1, 1}).run_string(), "2,1^4");
    CHECK_EQ((Partition{3, 1}).run_string(), "3,1");
    CHECK_EQ(Partition{}.run_string(), "0");
    CHECK_EQ((Partition{2, 2, 1, 1}).paper_label(), "2211");
    CHECK_EQ((Partition{1, 1, 1, 1}).paper_label(), "1^4");
    CHECK_EQ((Partition{2, 1, 1, 1, 1}).paper_label(), "21^4");
    for (int k = 0; k <= 8; ++k)
        for (const Partition& p : partitions_of(k))
            CHECK_EQ(Partition::parse(p.to_bracket()), p);
    bool threw = false;
    try {
        Partition::parse("[1,2]");
    } catch (const parse_error&) {
        threw = true;
    }
    CHECK(threw);

    // canonical order: weight first, reverse-lexicographic inside a weight
    CHECK(canonical_less(Partition{3}, Partition{2, 2}));
    CHECK(canonical_less(Partition{2, 2}, Partition{2, 1, 1}));
    CHECK(canonical_less(Partition{1, 1, 1}, Partition{4}));

    // z_rho
    CHECK_EQ(z_of(Partition{}), 1);
    CHECK_EQ(z_of(Partition{1, 1, 1}), 6);
    CHECK_EQ(z_of(Partition{2, 1}), 2);
    CHECK_EQ(z_of(Partition{3}), 3);
    CHECK_EQ(z_of(Partition{2, 2}), 8);

    return testutil::finish("test_partition");
}
