#include <gtest/gtest.h>

#include "ncalg/expr.hpp"
#include "ncalg/freealg.hpp"

using namespace ncalg;

namespace {
AlphabetPtr xy() { return make_alphabet({"x", "y"}); }
}

TEST(FreeAlgebra, DegLexOrder) {
    auto a = xy();
    DegLex lt{a.get()};
    EXPECT_TRUE(lt(Word{}, Word{0}));
    EXPECT_TRUE(lt(Word{0}, Word{1}));
    EXPECT_TRUE(lt(Word{1}, Word{0, 0}));
    EXPECT_TRUE(lt(Word{0, 1}, Word{1, 0}));
}

TEST(FreeAlgebra, WeightedOrder) {
    auto a = make_alphabet({"i", "j", "k"}, {1, 1, 2});
    DegLex lt{a.get()};
    EXPECT_TRUE(lt(Word{0, 1}, Word{2}));
    EXPECT_TRUE(lt(Word{2}, Word{0, 0, 0}));
}

TEST(FreeAlgebra, ProductIsConcatenation) {
    auto a = xy();
    const Field f = Field::Q();
    NcPoly x = NcPoly::generator(a, f, "x"), y = NcPoly::generator(a, f, "y");
    NcPoly p = (x + y) * (x - y);
    EXPECT_EQ(to_string(p), "-y^2 + y*x - x*y + x^2");
    EXPECT_NE(x * y, y * x);
}

TEST(FreeAlgebra, Printing) {
    auto a = xy();
    NcPoly p = parse_expression("x*y*y + 2*y", a, Field::Q());
    EXPECT_EQ(to_string(p), "x*y^2 + 2*y");
    EXPECT_EQ(to_string(parse_expression("x y - x y", a, Field::Q())), "0");
    NcPoly r = parse_expression("y*x - q*x*y - 1", a, Field::Qq());
    EXPECT_EQ(to_string(r), "y*x - q*x*y - 1");
    NcPoly s = parse_expression("(q+1)*x", a, Field::Qq());
    EXPECT_EQ(to_string(s), "(q + 1)*x");
}

TEST(FreeAlgebra, ParseRoundTrip) {
    auto a = xy();
    for (const char* s : {"x*y^2 + 2*y", "y*x - q*x*y - 1", "(q^2 + 1)/(q - 1)*x*y - q^-1*y + 3/5"}) {
        NcPoly p = parse_expression(s, a, Field::Qq());
        EXPECT_EQ(parse_expression(to_string(p), a, Field::Qq()), p) << to_string(p);
    }
}

TEST(FreeAlgebra, ParseErrors) {
    auto a = xy();
    EXPECT_THROW(parse_expression("x + w", a, Field::Q()), parse_error);
    EXPECT_THROW(parse_expression("x / y", a, Field::Q()), parse_error);
    EXPECT_THROW(parse_expression("(x + y", a, Field::Q()), parse_error);
    try {
        parse_expression("x + * y", a, Field::Q());
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line, 1);
        EXPECT_EQ(e.column, 5);
    }
}

TEST(FreeAlgebra, EvaluateOnMatrices) {
    auto a = xy();
    const Field f = Field::Q();
    ScalarMatrix X = matrix_from_rows({{0, 1}, {0, 0}}, f);
    ScalarMatrix Y = matrix_from_rows({{0, 0}, {1, 0}}, f);
    NcPoly p = parse_expression("x*y - y*x", a, f);
    EXPECT_EQ(evaluate_on_matrices(p, {X, Y}), matrix_from_rows({{1, 0}, {0, -1}}, f));
    EXPECT_THROW(evaluate_on_matrices(p, {X}), size_mismatch);
}
