#include <gtest/gtest.h>

#include "ncalg/ncalg.hpp"

using namespace ncalg;

namespace {

const char* quat_text = R"(# Hamilton quaternions over Q
name: QUAT
field: Q
gens: i j k
weights: 1 1 2
i^2 + 1
j^2 + 1
i*j - k
j*i + k
)";

const char* hq_text = R"(name: HQ
field: Qq
gens: g ginv h
relations:
g*ginv - 1
ginv*g - 1
g*h - q^2*h*g
h*ginv - q^2*ginv*h
coproduct:
g = g (x) g
ginv = ginv (x) ginv
h = 1 (x) h + h (x) g
counit:
g = 1
ginv = 1
h = 0
antipode:
g = ginv
ginv = g
h = -h*ginv
module-gens: x y
module-relations:
y*x - q*x*y
action:
g(x) = q*x
g(y) = q^-1*y
ginv(x) = q^-1*x
ginv(y) = q*y
h(x) = 0
h(y) = x
)";

}  // namespace

TEST(Io, PresentationRoundTrip) {
    const std::vector<Presentation> ps{preset_weyl(1), preset_weyl(2), preset_kq_poly(Field::Qq().generator()), preset_hq(Field::Qq().generator()),
                                       preset_quat(Scalar(-1), Scalar(3)), preset_qweyl1(Field::cyclo(3).generator()),
                                       preset_kq_poly(Scalar(-1)), preset_laurent()};
    for (const auto& p : ps) {
        const std::string text = presentation_to_text(p);
        const Presentation back = parse_presentation(text);
        EXPECT_EQ(back.name, p.name);
        EXPECT_EQ(back.field, p.field);
        EXPECT_EQ(*back.alphabet, *p.alphabet);
        ASSERT_EQ(back.relations.size(), p.relations.size()) << text;
        for (std::size_t i = 0; i < p.relations.size(); ++i) EXPECT_EQ(to_string(back.relations[i]), to_string(p.relations[i]));
        EXPECT_EQ(presentation_to_text(back), text);
    }
}

TEST(Io, QuaternionFileBasis) {
    const Presentation p = parse_presentation(quat_text);
    const RewriteSystem rs = orient(p);
    const auto b = basis_up_to_degree(rs, 2).words;
    std::vector<std::string> names;
    for (const auto& w : b) names.push_back(word_to_string(*p.alphabet, w));
    EXPECT_EQ(names, (std::vector<std::string>{"1", "i", "j", "i*j"}));
}

TEST(Io, QBindingInFile) {
    const Presentation p = parse_presentation("field: cyclo 3\nq: z^2\ngens: x y\ny*x - q*x*y - 1\n");
    const Scalar z = Field::cyclo(3).generator();
    EXPECT_EQ(p.relations[0], p.gen("y") * p.gen("x") - (p.gen("x") * p.gen("y")).scaled(z * z) - p.one());
    EXPECT_EQ(parse_presentation(presentation_to_text(p)).relations[0], p.relations[0]);
}

TEST(Io, ParseErrorsCarryLine) {
    try {
        parse_presentation("field: Q\ngens: x y\nx + * y\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line, 3);
    }
    EXPECT_THROW(parse_presentation("field: F7\ngens: x\n"), parse_error);
    EXPECT_THROW(parse_presentation("field: Q\nx*x\n"), parse_error);
    EXPECT_THROW(parse_presentation("gens: x y\nweights: 1\n"), parse_error);
    EXPECT_THROW(parse_presentation("gens: x\nbogus: 1\n"), parse_error);
    EXPECT_THROW(parse_presentation("gens: x\nx*z\n"), parse_error);
}

TEST(Io, HopfFileMatchesPreset) {
    const HopfFile f = parse_hopf(hq_text);
    const HopfPtr preset = hopf_hq(Field::Qq().generator());
    for (std::size_t g = 0; g < 3; ++g) {
        EXPECT_EQ(f.hopf->coproduct()[g], preset->coproduct()[g]);
        EXPECT_EQ(f.hopf->counit()[g], preset->counit()[g]);
        EXPECT_EQ((*f.hopf->antipode())[g], (*preset->antipode())[g]);
    }
    EXPECT_TRUE(check_hopf(*f.hopf, 4).ok());
    ASSERT_TRUE(f.action.has_value());
    EXPECT_TRUE(check_module_algebra(*f.action, 4).ok);
    const auto& A = f.action->target();
    EXPECT_EQ(act(*f.action, f.hopf->presentation().parse("h"), A.parse("x*y^2")), A.parse("(q + q^-1)*x^2*y"));

    const HopfFile back = parse_hopf(hopf_to_text(*f.hopf));
    EXPECT_FALSE(back.action.has_value());
    for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(back.hopf->coproduct()[g], preset->coproduct()[g]);
    EXPECT_EQ(hopf_to_text(*back.hopf), hopf_to_text(*f.hopf));
}

TEST(Io, HopfClosedFormDirective) {
    std::string text = hq_text;
    text += "closed-form: hq\n";
    const HopfFile f = parse_hopf(text);
    const auto& A = f.action->target();
    EXPECT_EQ(act(*f.action, f.hopf->presentation().parse("h"), A.parse("x*y^3")), A.parse("(q^2 + 1 + q^-2)*x^2*y^2"));
}

TEST(Io, TensorParsing) {
    auto pres = std::make_shared<const Presentation>(preset_hq(Field::Qq().generator()));
    auto rs = std::make_shared<const RewriteSystem>(orient(*pres));
    const Tensor t = parse_tensor("-h (x) g + (q+1)*g (x) (h - 1) - 2*1 (x) 1", *pres, rs, 2);
    Tensor expect = Tensor::pure(rs, {pres->parse("-h"), pres->parse("g")}) +
                    Tensor::pure(rs, {pres->parse("(q+1)*g"), pres->parse("h - 1")}) - Tensor::pure(rs, {pres->parse("2"), pres->one()});
    EXPECT_EQ(t, expect);
    EXPECT_EQ(parse_tensor(to_string(t), *pres, rs, 2), t);
    EXPECT_THROW(parse_tensor("g + h (x) g", *pres, rs, 2), parse_error);
    EXPECT_THROW(parse_tensor("g (x) (h", *pres, rs, 2), parse_error);
}

TEST(Io, HopfFileErrors) {
    EXPECT_THROW(parse_hopf("gens: h\nh^2\ncoproduct:\nh = h (x) h\n"), parse_error);  // no counit
    EXPECT_THROW(parse_hopf("gens: h\ncoproduct:\ncounit:\nh = 1\n"), parse_error);     // missing entry
    EXPECT_THROW(parse_hopf("gens: h\ncoproduct:\nk = h (x) h\ncounit:\nh = 1\n"), parse_error);
}

TEST(Io, MatrixJson) {
    const Field c5 = Field::cyclo(5);
    ScalarMatrix m = identity(2, c5);
    m(0, 1) = c5.generator() + c5.from_rational(mpq_class(1, 3));
    const json j = matrix_to_json(m);
    EXPECT_EQ(matrix_from_json(j), m);
    EXPECT_EQ(matrix_from_json(json::parse(j.dump())), m);
    EXPECT_EQ(matrix_from_json(json::parse(R"([[1, "1/2"], [0, -3]])")),
              matrix_from_rows({{Scalar(1), Scalar::rational(1, 2)}, {Scalar(0), Scalar(-3)}}, Field::Q()));
    EXPECT_EQ(field_of(matrix_from_json(json::parse(R"([["q", 1], [0, 1]])"))), Field::Qq());
    EXPECT_THROW(matrix_from_json(json::parse(R"([[1, 2], [3]])")), parse_error);
    EXPECT_THROW(matrix_from_json(json::parse(R"([["z @ cyclo 3", "z @ cyclo 4"]])")), variant_mismatch);

    ScalarMatrix r = identity(1, Field::approx());
    r(0, 0) = Scalar::approx(0.1);
    EXPECT_EQ(matrix_to_json(r)[0][0], "0.10000000000000001");
    EXPECT_EQ(matrix_from_json(matrix_to_json(r))(0, 0).as_double(), 0.1);
}

TEST(Io, RepJsonRoundTrip) {
    auto pres = std::make_shared<const Presentation>(preset_kq_poly(Scalar(-1)));
    const MatRep r(pres, {matrix_from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}}, Field::Q()),
                          matrix_from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}, Field::Q())});
    const json j = rep_to_json(r);
    EXPECT_EQ(j["schema_version"], schema_version);
    const MatRep back = rep_from_json(j, pres);
    EXPECT_EQ(back.matrices(), r.matrices());
    const MatRep arr = rep_from_json(json::parse(R"({"matrices": [[[1,0],[0,-1]], [[0,1],[1,0]]]})"), pres);
    EXPECT_EQ(arr.matrices(), r.matrices());
    EXPECT_THROW(rep_from_json(json::parse(R"({"matrices": {"x": [[1]]}})"), pres), parse_error);
}

TEST(Io, ClassificationReportJson) {
    const ClassificationReport r = classify_a1q_irreducibles(2);
    const json j = classification_to_json(r);
    EXPECT_EQ(j["schema_version"], schema_version);
    EXPECT_EQ(j["order"], 2);
    EXPECT_EQ(j["representatives"].size(), r.representatives.size());
    for (const auto& rep : j["representatives"]) {
        EXPECT_TRUE(rep["verified"].get<bool>());
        EXPECT_EQ(rep["commutant_dim"], 1);
    }
    EXPECT_EQ(j.dump(), classification_to_json(classify_a1q_irreducibles(2)).dump());
}
