#include "hpi/modify.hpp"

#include "hpi/errors.hpp"
#include "test_util.hpp"

using namespace hpi;

namespace {

const Partition pi13{1, 1, 1};

FormalCharacter single(const Partition& mu, std::optional<int> n, int eps = 0) {
    FormalCharacter f(pi13, n);
    f.add(mu, 1, eps);
    return f;
}

} // namespace

int main() {
    // column reduction
    {
        auto r = gl_column_reduce(Partition{2, 2, 1, 1}, 4);
        CHECK(r.has_value());
        CHECK_EQ(r->first, 1);
        CHECK_EQ(r->second, (Partition{1, 1}));
        auto r2 = gl_column_reduce(Partition{3}, 4);
        CHECK(r2.has_value());
        CHECK_EQ(r2->first, 0);
        CHECK_EQ(r2->second, (Partition{3}));
        CHECK(!gl_column_reduce(Partition{1, 1, 1, 1, 1}, 4));
        // dim is preserved: eps carries dimension 1
        for (int n = 1; n <= 5; ++n)
            for (int w = 0; w <= 8; ++w)
                for (const Partition& lam : partitions_of(w)) {
                    if (lam.length() > n) continue;
                    auto red = gl_column_reduce(lam, n);
                    CHECK(red.has_value());
                    CHECK_EQ(red->second.dim_gl(n), lam.dim_gl(n));
                }
    }

    // SL(3) rules
    CHECK(sl3_modify(single(Partition{1, 1, 1}, 3)).is_zero());
    CHECK(sl3_modify(single(Partition{2, 2, 1}, 3)).is_zero());
    CHECK(sl3_modify(single(Partition{2, 2, 2, 1}, 3)).is_zero());
    CHECK(sl3_modify(single(Partition{2, 2, 2, 2}, 3))
              .same_terms(single(Partition{1, 1}, 3)));
    CHECK(sl3_modify(single(Partition{4, 3}, 3)).same_terms(single(Partition{4, 3}, 3)));
    {
        FormalCharacter f = sl3_modify(single(Partition{1, 1, 1, 1}, 3));
        FormalCharacter expect(pi13, 3);
        expect.add(Partition{1}, -1);
        CHECK(f.same_terms(expect));
        FormalCharacter g = sl3_modify(single(Partition{2, 1, 1, 1}, 3));
        FormalCharacter expect2(pi13, 3);
        expect2.add(Partition{2}, -1);
        expect2.add(Partition{1, 1}, -1);
        CHECK(g.same_terms(expect2));
        FormalCharacter h = sl3_modify(single(Partition{2, 2, 1, 1}, 3));
        FormalCharacter expect3(pi13, 3);
        expect3.add(Partition{2, 1}, -1);
        CHECK(h.same_terms(expect3));
        FormalCharacter k = sl3_modify(single(Partition{3, 1, 1, 1}, 3));
        FormalCharacter expect4(pi13, 3);
        expect4.add(Partition{3}, -1);
        expect4.add(Partition{2, 1}, -1);
        CHECK(k.same_terms(expect4));
        bool threw = false;
        try {
            sl3_modify(single(Partition{2, 1, 1, 1, 1}, 3));
        } catch (const unsupported_length&) {
            threw = true;
        }
        CHECK(threw);
    }

    // H_{1^3}(4) rules
    {
        FormalCharacter f = h13_4_modify(single(Partition{1, 1, 1, 1}, 4));
        FormalCharacter expect(pi13, 4);
        expect.add(Partition{}, 1, 1);
        expect.add(Partition{1}, -1);
        CHECK(f.same_terms(expect));

        FormalCharacter g = h13_4_modify(single(Partition{2, 2, 2, 2}, 4));
        FormalCharacter expect2(pi13, 4);
        expect2.add(Partition{}, 1, 2);
        expect2.add(Partition{1}, -1, 1);
        expect2.add(Partition{1, 1}, 1);
        CHECK(g.same_terms(expect2));

        CHECK(h13_4_modify(single(Partition{2, 1}, 4))
                  .same_terms(single(Partition{2, 1}, 4)));

        bool threw = false;
        try {
            h13_4_modify(single(Partition{3, 2, 1, 1}, 4));
        } catch (const no_known_rule&) {
            threw = true;
        }
        CHECK(threw);
    }

    // dimensions of formal characters
    CHECK_EQ(dim_formal(Partition{1, 1, 1, 1}, pi13, 4), -3);
    CHECK_EQ(dim_formal(Partition{}, Partition{3}, 4), 1);
    CHECK_EQ(dim_formal(Partition{2, 1}, Partition{2, 1}, 4), 19);
    CHECK_EQ(dim_formal(Partition{2, 1, 1, 1}, pi13, 4), -12);
    CHECK_EQ(dim_formal(Partition{2, 2, 1, 1}, pi13, 4), -17);
    CHECK_EQ(dim_formal(Partition{3, 1, 1, 1}, pi13, 4), -30);
    CHECK_EQ(dim_formal(Partition{3, 1}, Partition{2, 1}, 4), 41);

    // every modification identity preserves dimensions
    {
        struct Rule {
            Partition lhs;
            std::vector<std::tuple<int, Partition, Int>> rhs; // eps, mu, coeff
        };
        const std::vector<Rule> rules = {
            {Partition{1, 1, 1, 1}, {{1, {}, 1}, {0, Partition{1}, -1}}},
            {Partition{2, 1, 1, 1},
             {{1, Partition{1}, 1}, {0, Partition{2}, -1}, {0, Partition{1, 1}, -1}}},
            {Partition{2, 2, 1, 1},
             {{1, Partition{1, 1}, 1},
              {0, Partition{2, 1}, -1},
              {0, Partition{1, 1, 1}, -1}}},
            {Partition{2, 2, 2, 1},
             {{1, Partition{1, 1, 1}, 1}, {0, Partition{2, 1, 1}, -1}}},
            {Partition{2, 2, 2, 2},
             {{2, {}, 1}, {1, Partition{1}, -1}, {0, Partition{1, 1}, 1}}},
            {Partition{3, 1, 1, 1},
             {{1, Partition{2}, 1}, {0, Partition{3}, -1}, {0, Partition{2, 1}, -1}}},
        };
        for (const auto& rule : rules) {
            Int lhs = dim_formal(rule.lhs, pi13, 4);
            Int rhs = 0;
            for (const auto& [eps, mu, c] : rule.rhs) rhs += c * dim_formal(mu, pi13, 4);
            CHECK_EQ(lhs, rhs);
        }
    }

    // SL(3) modified product against the GL(3) column-discard route
    {
        FormalCharacter p = modified_product_sl3(Partition{2, 2}, Partition{2, 1});
        FormalCharacter expect(pi13, 3);
        expect.add(Partition{4, 3}, 1);
        expect.add(Partition{3, 1}, 1);
        expect.add(Partition{2, 2}, 1);
        expect.add(Partition{1}, 1);
        CHECK(p.same_terms(expect));
        CHECK_EQ(p.str(true), "((43))_24 + ((31))_15 + ((22))_6 + ((1))_3");
    }
    CHECK(modified_product_sl3(Partition{1}, Partition{})
              .same_terms(single(Partition{1}, 3)));
    {
        FormalCharacter p = modified_product_sl3(Partition{1}, Partition{1});
        FormalCharacter expect(pi13, 3);
        expect.add(Partition{2}, 1);
        expect.add(Partition{1, 1}, 1);
        CHECK(p.same_terms(expect));
    }
    for (int a = 0; a <= 4; ++a)
        for (const Partition& mu : partitions_of(a, {.max_length = 2, .max_part = {}}))
            for (int b = 0; a + b <= 8 && b <= 4; ++b)
                for (const Partition& nu :
                     partitions_of(b, {.max_length = 2, .max_part = {}}))
                    CHECK(modified_product_sl3(mu, nu).same_terms(
                        modified_product_sl3_gl_route(mu, nu)));

    // worked H_{1^3}(4) product: ((2)).((111)) = ((311)) + e((1))
    {
        FormalCharacter raw = product_hpi(Partition{2}, Partition{1, 1, 1}, pi13, 4);
        FormalCharacter expect_raw(pi13, 4);
        expect_raw.add(Partition{3, 1, 1}, 1);
        expect_raw.add(Partition{2, 1, 1, 1}, 1);
        expect_raw.add(Partition{2}, 1);
        expect_raw.add(Partition{1, 1}, 1);
        CHECK(raw.same_terms(expect_raw));
        FormalCharacter mod = h13_4_modify(raw);
        FormalCharacter expect(pi13, 4);
        expect.add(Partition{3, 1, 1}, 1);
        expect.add(Partition{1}, 1, 1);
        CHECK(mod.same_terms(expect));
        CHECK_EQ(mod.str(true), "((311))_26 + e((1))_4");
    }

    return testutil::finish("test_modify");
}
