#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "traceforge/io.hpp"

using namespace traceforge;

namespace {

using IdealQ = FractionalIdeal<Rational>;
using IdealP = FractionalIdeal<Residue>;
using PolyQ = LaurentPoly<Rational>;
using PolyP = LaurentPoly<Residue>;

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

NumericalSemigroup sg(std::vector<long> g) { return NumericalSemigroup::from_generators(std::move(g)); }

PolyQ q(const std::string& s) { return PolyQ::parse(s, Q); }

std::vector<int> pivots_of(const IdealQ& i) { return i.pivots(); }

// Small semigroups for randomized ideal tests: every H of genus <= 5.
std::vector<NumericalSemigroup> small_semigroups() { return enumerate_semigroups(5); }

struct RandomIdeal {
    std::vector<PolyP> gens;
    bool with_conductor;
    IdealP ideal;
};

RandomIdeal random_ideal(std::mt19937& rng, const NumericalSemigroup& h, int shift_lo, int shift_hi) {
    const int c = h.conductor();
    std::uniform_int_distribution<int> count(1, 2), terms(1, 3), shift(shift_lo, shift_hi), coin(0, 1);
    std::vector<PolyP> gens;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        const int s = shift(rng);
        gens.push_back(oracle::random_poly(rng, F2, s, s + c + 2, terms(rng)));
    }
    bool with_c = coin(rng) == 1;
    if (std::all_of(gens.begin(), gens.end(), [](const PolyP& g) { return g.is_zero(); })) with_c = true;
    auto ideal = IdealP::from_generators(F2, h, gens, with_c);
    return {gens, with_c, ideal};
}

} // namespace

// ---- construction -------------------------------------------------------------

TEST(SeriesIdeal, UnitExamples) {
    const auto r = IdealQ::unit(Q, sg({4, 5, 11}));
    EXPECT_EQ(pivots_of(r), (std::vector<int>{0, 4, 5}));
    EXPECT_EQ(r.tail(), 8);
    EXPECT_EQ(r.lo(), 0);

    const auto dvr = IdealQ::unit(Q, NumericalSemigroup::natural());
    EXPECT_EQ(dvr.basis_size(), 0u);
    EXPECT_EQ(dvr.tail(), 0);

    const auto cusp = IdealQ::unit(Q, sg({2, 3}));
    EXPECT_EQ(pivots_of(cusp), std::vector<int>{0});
    EXPECT_EQ(cusp.tail(), 2);
}

TEST(SeriesIdeal, ConductorExamples) {
    for (auto [gens, tail] : std::vector<std::pair<std::vector<long>, int>>{{{4, 5, 11}, 8}, {{1}, 0}, {{2, 3}, 2}}) {
        const auto h = sg(gens);
        const auto c = IdealQ::conductor(Q, h);
        EXPECT_EQ(c.basis_size(), 0u);
        EXPECT_EQ(c.tail(), tail);
        EXPECT_EQ(c, IdealQ::unit(Q, h).colon(IdealQ::integral_closure(Q, h)));
    }
}

TEST(SeriesIdeal, FromGeneratorsExamples) {
    const auto h = sg({4, 5, 11});
    const auto i = IdealQ::from_generators(Q, h, {q("t^4 + t^5")}, true);
    EXPECT_EQ(pivots_of(i), std::vector<int>{4});
    EXPECT_EQ(i.basis_element(0), q("t^4 + t^5"));
    EXPECT_EQ(i.tail(), 8);

    EXPECT_EQ(IdealQ::from_generators(Q, h, {q("1")}, false), IdealQ::unit(Q, h));

    const auto m = IdealQ::from_generators(Q, h, {q("t^4"), q("t^5")}, true);
    EXPECT_EQ(m, IdealQ::maximal(Q, h));
    EXPECT_EQ(pivots_of(m), (std::vector<int>{4, 5}));
    EXPECT_EQ(m.tail(), 8);

    try {
        (void)IdealQ::from_generators(Q, h, {PolyQ(Q)}, false);
        FAIL() << "expected ZeroIdeal";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroIdeal);
    }
}

TEST(SeriesIdeal, ArithmeticExamples) {
    const auto h = sg({4, 5, 11});
    const auto c = IdealQ::conductor(Q, h), m = IdealQ::maximal(Q, h), r = IdealQ::unit(Q, h);
    const auto i = IdealQ::from_generators(Q, h, {q("t^4 + t^5")}, true);
    EXPECT_EQ(c + m, m);
    EXPECT_EQ(i + m, m + i);
    EXPECT_EQ(r * i, i);
    EXPECT_EQ(r * m, m);

    // m of <3,7,8> divided by t^3 is the ring <3,4,5>
    const auto h378 = sg({3, 7, 8});
    const auto b = IdealQ::maximal(Q, h378).shifted(-3);
    EXPECT_EQ(b.value_set().small_elements(), IdealQ::unit(Q, sg({3, 4, 5})).value_set().small_elements());
    EXPECT_EQ(b.tail(), IdealQ::unit(Q, sg({3, 4, 5})).tail());
    EXPECT_EQ(b.over_ring(sg({3, 4, 5})), IdealQ::unit(Q, sg({3, 4, 5})));

    try {
        (void)(m + IdealQ::maximal(Q, h378));
        FAIL() << "expected FieldMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
    const auto mf2 = IdealP::maximal(F2, h);
    EXPECT_THROW((void)(mf2 + IdealP::maximal(FieldSpec::prime(3), h)), Error);
}

TEST(SeriesIdeal, ColonWorkedExample) {
    const auto h = sg({4, 5, 11});
    const auto r = IdealQ::unit(Q, h);
    const auto i = IdealQ::from_generators(Q, h, {q("t^4 + t^5")}, true);
    const auto ri = r.colon(i);
    // listed generators 1, t - t^2 + t^3, t^4 .. t^7
    const auto expected =
        IdealQ::from_generators(Q, h, {q("1"), q("t - t^2 + t^3"), q("t^4"), q("t^5"), q("t^6"), q("t^7")}, false);
    EXPECT_EQ(ri, expected);
    for (const char* g : {"1", "t - t^2 + t^3", "t^4", "t^5", "t^6", "t^7"}) EXPECT_TRUE(ri.contains(q(g))) << g;
    EXPECT_FALSE(ri.contains(q("t")));
    EXPECT_FALSE(ri.contains(q("t^2")));
    EXPECT_FALSE(ri.contains(q("t - t^2")));
    EXPECT_TRUE(ri.contains(q("t^8")));
    // canonical form keeps only what the tail does not already cover
    EXPECT_EQ(pivots_of(ri), (std::vector<int>{0, 1}));
    EXPECT_EQ(ri.basis_element(1), q("t - t^2 + t^3"));
    EXPECT_EQ(ri.tail(), 4);
    // the product is the trace, which swallows t^4 and t^5
    EXPECT_EQ(ri * i, IdealQ::maximal(Q, h));

    EXPECT_EQ(r.colon(r), r);
    const auto c = IdealQ::conductor(Q, h);
    const auto cc = c.colon(c);
    EXPECT_TRUE(cc.value_set().small_elements().empty());
    EXPECT_EQ(cc.value_set().min(), 0);
    EXPECT_EQ(cc.tail(), 0);
    EXPECT_EQ(cc, IdealQ::integral_closure(Q, h));
}

TEST(SeriesIdeal, ColonWithGeneralB) {
    const auto h = sg({4, 5, 11});
    for (long b : {2L, -3L, 7L}) {
        const Rational bq(b);
        PolyQ gen(Q);
        gen.add_term(4, Rational(1));
        gen.add_term(5, bq);
        const auto i = IdealQ::from_generators(Q, h, {gen}, true);
        PolyQ alpha(Q);
        alpha.add_term(1, Rational(1));
        alpha.add_term(2, -bq);
        alpha.add_term(3, bq * bq);
        const auto ri = IdealQ::unit(Q, h).colon(i);
        EXPECT_TRUE(ri.contains(alpha));
        EXPECT_EQ(ri * i, IdealQ::maximal(Q, h));
    }
}

TEST(SeriesIdeal, ContainsExamples) {
    const auto h = sg({4, 5, 11});
    EXPECT_TRUE(IdealQ::maximal(Q, h).contains(q("t^4 + 7*t^9")));
    EXPECT_FALSE(IdealQ::conductor(Q, h).contains(q("t^5")));
    EXPECT_FALSE(IdealQ::maximal(Q, h).contains(q("1")));
    EXPECT_TRUE(IdealQ::maximal(Q, h).contains(PolyQ(Q)));
    EXPECT_FALSE(IdealQ::unit(Q, h).contains(q("t^-1")));
}

TEST(SeriesIdeal, ValueSetExamples) {
    const auto h = sg({4, 5, 11});
    EXPECT_EQ(IdealQ::unit(Q, h).value_set().small_elements(), (std::vector<int>{0, 4, 5}));
    const auto vs = IdealQ::from_generators(Q, h, {q("t^4 + t^5")}, true).value_set();
    EXPECT_EQ(vs.small_elements(), std::vector<int>{4});
    EXPECT_EQ(vs.stable_bound(), 8);
    const auto k = canonical_ideal<Rational>(Q, h).value_set();
    const auto kh = canonical_value_set(h);
    EXPECT_EQ(k.small_elements(), kh.small_elements());
    EXPECT_EQ(k.stable_bound(), kh.stable_bound());
}

TEST(SeriesIdeal, CanonicalFractionalIdeal) {
    const auto a = canonical_fractional_ideal<Rational>(Q, sg({4, 5, 11}));
    EXPECT_EQ(a.ideal.value_set().minimal_generators(), (std::vector<int>{0, 1}));
    EXPECT_LE(a.reduction_exponent, 3);
    EXPECT_GE(a.reduction_exponent, 1);

    const auto c = canonical_fractional_ideal<Rational>(Q, sg({4, 5, 7}));
    EXPECT_EQ(c.ideal.value_set().minimal_generators(), (std::vector<int>{0, 3}));

    for (const auto& h : enumerate_semigroups(7)) {
        const auto w = canonical_fractional_ideal<Residue>(F2, h);
        // reduction exponent is least: W^n stable, W^(n-1) not
        auto pow = IdealP::unit(F2, h);
        for (int k = 0; k < w.reduction_exponent; ++k) pow = pow * w.ideal;
        EXPECT_EQ(pow * w.ideal, pow);
        if (is_symmetric(h)) {
            EXPECT_EQ(w.reduction_exponent, 0) << h.pretty();
            EXPECT_EQ(w.ideal, IdealP::unit(F2, h));
        } else {
            EXPECT_GE(w.reduction_exponent, 1) << h.pretty();
        }
    }
}

TEST(SeriesIdeal, AdjoinExamples) {
    const auto h = sg({4, 5, 11});
    const auto t = adjoin(Q, h, q("t"));
    EXPECT_EQ(t, IdealQ::integral_closure(Q, h));
    EXPECT_EQ(adjoin(Q, h, q("1")), IdealQ::unit(Q, h));

    const auto h456 = sg({4, 5, 6});
    for (long k : {0L, 1L, 5L}) {
        PolyQ g(Q);
        g.add_term(2, Rational(1));
        g.add_term(3, Rational(k));
        const auto rg = adjoin(Q, h456, g);
        const auto r = IdealQ::unit(Q, h456);
        EXPECT_EQ(rg, r + IdealQ::from_generators(Q, h456, {g}, false));
        EXPECT_EQ(rg * rg, rg);
    }

    try {
        (void)adjoin(Q, h, q("t^-1"));
        FAIL() << "expected NotIntegral";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotIntegral);
    }
}

TEST(SeriesIdeal, EndomorphismRingExamples) {
    const auto h = sg({4, 5, 11});
    EXPECT_EQ(endomorphism_ring(IdealQ::unit(Q, h)), IdealQ::unit(Q, h));
    EXPECT_EQ(endomorphism_ring(IdealQ::conductor(Q, h)), IdealQ::integral_closure(Q, h));
    const auto h378 = sg({3, 7, 8});
    const auto b = endomorphism_ring(IdealQ::maximal(Q, h378));
    EXPECT_EQ(b.value_set().small_elements(), IdealQ::unit(Q, sg({3, 4, 5})).value_set().small_elements());
    EXPECT_EQ(b.tail(), 3);
}

TEST(SeriesIdeal, LaurentText) {
    EXPECT_EQ(q("t - t^2 + t^3").to_string(), "t - t^2 + t^3");
    EXPECT_EQ(q("t^4 + 3*t^5"), q("3*t^5 + t^4"));
    EXPECT_EQ((q("1 + t") * q("1 - t")).to_string(), "1 - t^2");
    EXPECT_EQ(PolyP::parse("t^4 + 3*t^5", F2).to_string(), "t^4 + t^5");
    EXPECT_THROW((void)PolyQ::parse("t^^2", Q), Error);
}

// ---- properties over F_2 ------------------------------------------------------------

TEST(SeriesIdeal, ColonMatchesBruteForce) {
    std::mt19937 rng(20240611);
    const auto semigroups = small_semigroups();
    std::uniform_int_distribution<std::size_t> pick(0, semigroups.size() - 1);
    int pairs = 0;
    while (pairs < 200) {
        const auto& h = semigroups[pick(rng)];
        const auto i = random_ideal(rng, h, 0, 3);
        const auto j = random_ideal(rng, h, -1, 2);
        const oracle::RawF2Ideal ri(h, i.gens, i.with_conductor), rj(h, j.gens, j.with_conductor);
        const int a = ri.lo() - rj.lo();
        const int b = ri.tail_bound() - rj.lo();
        if (b - a > 14) continue;
        ++pairs;
        const auto col = i.ideal.colon(j.ideal);
        // nothing below a, everything from b on
        EXPECT_GE(col.lo(), a);
        EXPECT_LE(col.tail(), b);
        // spanning set of J: generators, plus t^k for k >= c when the conductor is in J
        std::vector<PolyP> span = j.gens;
        if (j.with_conductor)
            for (int k = h.conductor(); k <= ri.tail_bound() - a; ++k) span.push_back(PolyP::monomial(F2, k));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (b - a)); ++mask) {
            const auto alpha = oracle::f2_poly(mask, a);
            bool in = true;
            for (const auto& g : span)
                if (!ri.contains(alpha * g)) {
                    in = false;
                    break;
                }
            ASSERT_EQ(col.contains(alpha), in) << h.pretty() << " alpha=" << alpha.to_string();
        }
    }
}

TEST(SeriesIdeal, CanonicalFormIsSound) {
    std::mt19937 rng(7);
    const auto semigroups = enumerate_semigroups(6);
    std::uniform_int_distribution<std::size_t> pick(0, semigroups.size() - 1);
    for (int t = 0; t < 300; ++t) {
        const auto& h = semigroups[pick(rng)];
        const auto i = random_ideal(rng, h, 0, 2);
        const auto j = random_ideal(rng, h, 0, 2);
        const oracle::RawF2Ideal ri(h, i.gens, i.with_conductor), rj(h, j.gens, j.with_conductor);
        // membership agrees with the raw span on every subset of a window
        const int lo = std::min(ri.lo(), rj.lo()) - 1;
        const int hi = std::max(ri.tail_bound(), rj.tail_bound()) + 5;
        bool agree = true;
        std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << (hi - lo)) - 1);
        for (int probe = 0; probe < 400; ++probe) {
            const auto f = probe < hi - lo ? PolyP::monomial(F2, lo + probe) : oracle::f2_poly(bits(rng), lo);
            EXPECT_EQ(i.ideal.contains(f), ri.contains(f)) << h.pretty();
            if (i.ideal.contains(f) != j.ideal.contains(f)) agree = false;
        }
        for (const auto& b : i.ideal.basis())
            if (!j.ideal.contains(b)) agree = false;
        for (const auto& b : j.ideal.basis())
            if (!i.ideal.contains(b)) agree = false;
        if (i.ideal.tail() != j.ideal.tail()) {
            const int k = std::min(i.ideal.tail(), j.ideal.tail());
            if (!(i.ideal.contains(PolyP::monomial(F2, k)) && j.ideal.contains(PolyP::monomial(F2, k)))) agree = false;
        }
        EXPECT_EQ(i.ideal == j.ideal, agree) << h.pretty();
        // tail is minimal, pivots inside the window
        EXPECT_FALSE(i.ideal.contains(PolyP::monomial(F2, i.ideal.tail() - 1)));
        EXPECT_TRUE(i.ideal.is_closed_under(h));
        for (int p : i.ideal.pivots()) {
            EXPECT_GE(p, i.ideal.lo());
            EXPECT_LT(p, i.ideal.tail());
        }
    }
}

TEST(SeriesIdeal, ColonProductAndDuality) {
    std::mt19937 rng(11);
    const auto semigroups = enumerate_semigroups(6);
    std::uniform_int_distribution<std::size_t> pick(0, semigroups.size() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto& h = semigroups[pick(rng)];
        const auto i = random_ideal(rng, h, 0, 3).ideal;
        const auto j = random_ideal(rng, h, -1, 2).ideal;
        const auto r = IdealP::unit(F2, h);
        const auto ij = i.colon(j);
        EXPECT_TRUE(i.contains(ij * j)) << h.pretty();
        EXPECT_TRUE(i.colon(r).contains(i));
        EXPECT_EQ(i.colon(r), i);
        EXPECT_EQ(i.colon(i.colon(ij)), ij) << h.pretty();
        EXPECT_EQ(i + j, j + i);
        EXPECT_EQ(i * j, j * i);
        EXPECT_TRUE((i + j).contains(i));
    }
}

TEST(SeriesIdeal, ProductValueSets) {
    std::mt19937 rng(13);
    const auto semigroups = enumerate_semigroups(6);
    std::uniform_int_distribution<std::size_t> pick(0, semigroups.size() - 1);
    std::uniform_int_distribution<int> shift(0, 4);
    for (int t = 0; t < 200; ++t) {
        const auto& h = semigroups[pick(rng)];
        const auto i = random_ideal(rng, h, 0, 3).ideal;
        const auto j = random_ideal(rng, h, 0, 3).ideal;
        const auto vij = (i * j).value_set();
        const auto vi = i.value_set(), vj = j.value_set();
        const int top = vi.stable_bound() + vj.stable_bound() + 2;
        for (int x = vi.min(); x <= top; ++x)
            for (int y = vj.min(); x + y <= top; ++y)
                if (vi.contains(x) && vj.contains(y)) EXPECT_TRUE(vij.contains(x + y));
        // monomial ideals: equality
        const auto a = IdealP::principal_monomial(F2, h, shift(rng)) + IdealP::principal_monomial(F2, h, shift(rng));
        const auto b = IdealP::principal_monomial(F2, h, shift(rng)) + IdealP::conductor(F2, h);
        ASSERT_TRUE(a.is_monomial());
        const auto vab = (a * b).value_set(), va = a.value_set(), vb = b.value_set();
        for (int z = 0; z <= vab.stable_bound() + 2; ++z) {
            bool sum = false;
            for (int x = va.min(); x <= z && !sum; ++x)
                if (va.contains(x) && vb.contains(z - x)) sum = true;
            EXPECT_EQ(vab.contains(z), sum) << h.pretty() << " z=" << z;
        }
    }
}

TEST(SeriesIdeal, EndomorphismRingsLieBetweenRAndClosure) {
    std::mt19937 rng(17);
    const auto semigroups = enumerate_semigroups(6);
    std::uniform_int_distribution<std::size_t> pick(0, semigroups.size() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto& h = semigroups[pick(rng)];
        const auto i = random_ideal(rng, h, -1, 3).ideal;
        const auto e = endomorphism_ring(i);
        EXPECT_TRUE(e.contains(IdealP::unit(F2, h)));
        EXPECT_TRUE(IdealP::integral_closure(F2, h).contains(e));
        EXPECT_EQ(e * e, e);
    }
}

TEST(SeriesIdeal, AdjoinIsRing) {
    std::mt19937 rng(19);
    const auto semigroups = enumerate_semigroups(6);
    std::uniform_int_distribution<std::size_t> pick(0, semigroups.size() - 1);
    for (int t = 0; t < 100; ++t) {
        const auto& h = semigroups[pick(rng)];
        const auto g = oracle::random_poly(rng, F2, 0, h.conductor() + 2, 2);
        const auto rg = adjoin(F2, h, g);
        EXPECT_EQ(rg * rg, rg);
        EXPECT_TRUE(rg.contains(IdealP::unit(F2, h)));
        if (!g.is_zero()) EXPECT_TRUE(rg.contains(g));
    }
}

TEST(SeriesIdeal, NaturalNumbersDegenerateCase) {
    const auto n0 = NumericalSemigroup::natural();
    const auto r = IdealP::unit(F2, n0);
    EXPECT_EQ(r, IdealP::conductor(F2, n0));
    EXPECT_EQ(r.colon(r), r);
    const auto t3 = r.shifted(3);
    EXPECT_EQ(t3.tail(), 3);
    EXPECT_EQ(r.colon(t3), r.shifted(-3));
    EXPECT_EQ(t3 * t3, r.shifted(6));
    EXPECT_EQ(adjoin(F2, n0, PolyP::monomial(F2, 1)), r);
}

TEST(SeriesIdeal, JsonRoundTrip) {
    std::mt19937 rng(23);
    const auto semigroups = enumerate_semigroups(6);
    std::uniform_int_distribution<std::size_t> pick(0, semigroups.size() - 1);
    for (int t = 0; t < 50; ++t) {
        const auto& h = semigroups[pick(rng)];
        const auto i = random_ideal(rng, h, -1, 3).ideal;
        const auto j = ideal_to_json(i);
        EXPECT_EQ(ideal_from_json<Residue>(json::parse(j.dump()), F2, h), i);
    }
    const auto h = sg({4, 5, 11});
    const auto ri = IdealQ::unit(Q, h).colon(IdealQ::from_generators(Q, h, {q("t^4 + t^5")}, true));
    EXPECT_EQ(ideal_from_json<Rational>(ideal_to_json(ri), Q, h), ri);
    // a non-module is rejected
    const json bad = json::parse(R"({"lo": 1, "tail": 8, "basis": [[[1, 1]]]})");
    try {
        (void)ideal_from_json<Rational>(bad, Q, h);
        FAIL() << "expected NotClosed";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotClosed);
    }
}
