#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

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

template <class E>
FractionalIdeal<E> c_plus(const FieldSpec& f, const NumericalSemigroup& h, std::vector<int> monomials) {
    std::vector<LaurentPoly<E>> gens;
    for (int k : monomials) gens.push_back(LaurentPoly<E>::monomial(f, k));
    return FractionalIdeal<E>::from_generators(f, h, gens, true);
}

bool listed(const TraceEnumeration& tr, const IdealP& i) {
    return std::any_of(tr.ideals.begin(), tr.ideals.end(), [&](const TraceIdealRecord& r) { return r.ideal == i; });
}

template <class E>
void expect_code(ErrorCode code, E&& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

} // namespace

TEST(Trace, Examples) {
    const auto h = sg({4, 5, 11});
    const auto i = IdealQ::from_generators(Q, h, {q("t^4 + t^5")}, true);
    EXPECT_EQ(trace(i), IdealQ::maximal(Q, h));
    EXPECT_FALSE(is_trace_ideal(i));
    EXPECT_EQ(trace(IdealQ::unit(Q, h)), IdealQ::unit(Q, h));

    const auto n0 = NumericalSemigroup::natural();
    EXPECT_EQ(trace(IdealQ::unit(Q, n0).shifted(1)), IdealQ::unit(Q, n0));
    EXPECT_FALSE(is_trace_ideal(IdealQ::maximal(Q, n0)));

    EXPECT_TRUE(is_trace_ideal(IdealQ::conductor(Q, h)));
    EXPECT_TRUE(is_trace_ideal(c_plus<Rational>(Q, h, {5})));
    EXPECT_FALSE(is_trace_ideal(c_plus<Rational>(Q, h, {4})));

    EXPECT_TRUE(has_free_summand(IdealQ::principal_monomial(Q, h, 4)));
    EXPECT_FALSE(has_free_summand(IdealQ::maximal(Q, h)));
    EXPECT_TRUE(has_free_summand(IdealQ::unit(Q, h)));

    EXPECT_EQ(minimal_generator_count(IdealQ::maximal(Q, h)), 3);
    EXPECT_EQ(minimal_generator_count(IdealQ::unit(Q, h)), 1);
}

TEST(Trace, EnumerationsFromTheExamples) {
    struct Case {
        std::vector<long> gens;
        int extra; // the monomial with c + (t^extra) a trace ideal
    };
    for (const auto& [gens, extra] : std::vector<Case>{{{4, 5, 11}, 5}, {{4, 6, 9, 11}, 6}, {{4, 5, 7}, 5}}) {
        const auto h = sg(gens);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const FieldSpec f = FieldSpec::prime(p);
            const auto tr = enumerate_trace_ideals(h, p);
            EXPECT_TRUE(tr.zero_ideal);
            ASSERT_EQ(tr.ideals.size(), 4u) << h.pretty() << " p=" << p;
            EXPECT_EQ(tr.total_count(), 5u);
            EXPECT_TRUE(listed(tr, IdealP::conductor(f, h)));
            EXPECT_TRUE(listed(tr, c_plus<Residue>(f, h, {extra})));
            EXPECT_TRUE(listed(tr, IdealP::maximal(f, h)));
            EXPECT_TRUE(listed(tr, IdealP::unit(f, h)));
            EXPECT_TRUE(verify_smallest_regular_trace(tr));
            EXPECT_TRUE(verify_normalization_union(tr));
            EXPECT_TRUE(minimal_trace_consistent(tr));
        }
    }
}

TEST(Trace, EnumerationSmallCases) {
    const auto n0 = enumerate_trace_ideals(NumericalSemigroup::natural(), 3);
    ASSERT_EQ(n0.ideals.size(), 1u);
    EXPECT_TRUE(n0.ideals[0].is_unit_ideal);
    EXPECT_TRUE(n0.ideals[0].is_conductor);
    EXPECT_EQ(n0.total_count(), 2u);

    const auto h345 = enumerate_trace_ideals(sg({3, 4, 5}), 2);
    ASSERT_EQ(h345.ideals.size(), 2u);
    EXPECT_TRUE(listed(h345, IdealP::maximal(F2, sg({3, 4, 5}))));
    EXPECT_TRUE(listed(h345, IdealP::unit(F2, sg({3, 4, 5}))));

    // census of R / c for <4,5,11>: dim 3, ideals are 0, (t^5), (t^4), (t^4+a t^5) .., m, R
    const auto cand = enumerate_conductor_ideals(sg({4, 5, 11}), 2);
    EXPECT_EQ(cand.census.quotient_dimension, 3);
    EXPECT_EQ(cand.ideals.size(), 6u); // c, three lines in m/c over F2, m, R

    EXPECT_TRUE(verify_smallest_regular_trace(sg({4, 5, 11}), 2));
    EXPECT_TRUE(verify_smallest_regular_trace(sg({4, 6, 9, 11}), 2));
    EXPECT_TRUE(verify_smallest_regular_trace(NumericalSemigroup::natural(), 2));
    EXPECT_TRUE(verify_normalization_union(sg({4, 5, 11}), 2));
    EXPECT_TRUE(verify_normalization_union(NumericalSemigroup::natural(), 2));
    EXPECT_TRUE(verify_normalization_union(sg({2, 3}), 2));
}

TEST(Trace, EnumerationErrors) {
    // <2,27>: R/c spanned by 1, t^2, ..., t^24, dimension 13
    expect_code(ErrorCode::WorkloadExceeded, [] { (void)enumerate_trace_ideals(sg({2, 27}), 2); });
    expect_code(ErrorCode::InvalidArgument, [] { (void)enumerate_trace_ideals(sg({2, 3}), 4); });
}

TEST(Trace, CandidateCountMatchesSubspaceCount) {
    // Over F_p the ideals between c and R for H = {0} u [e, inf) are all
    // subspaces of m / c (dimension 0) plus R.
    for (std::uint32_t p : {2u, 3u}) {
        const auto cand = enumerate_conductor_ideals(sg({3, 4, 5}), p);
        EXPECT_EQ(cand.ideals.size(), 2u);
    }
    // <2,5>: R/c has basis 1, t^2; ideals: c, c + (t^2), R
    EXPECT_EQ(enumerate_conductor_ideals(sg({2, 5}), 2).ideals.size(), 3u);
    // <3,5,7>: R/c basis 1, t^3; m/c one-dimensional
    EXPECT_EQ(enumerate_conductor_ideals(sg({3, 5, 7}), 5).ideals.size(), 3u);
}

TEST(Trace, Bijection) {
    const auto r = verify_bijection(sg({3, 7, 8}), 2);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.left_count, r.right_count);
    EXPECT_EQ(r.blowup_semigroup, sg({3, 4, 5}));

    const auto cusp = verify_bijection(sg({2, 3}), 2);
    EXPECT_TRUE(cusp.ok) << cusp.detail;
    EXPECT_EQ(cusp.left_count, 1u);
    EXPECT_EQ(cusp.right_count, 1u);
    EXPECT_TRUE(cusp.blowup_semigroup.is_natural());

    expect_code(ErrorCode::IsDVR, [] { (void)verify_bijection(NumericalSemigroup::natural(), 2); });
    expect_code(ErrorCode::NotMinimalMultiplicity, [] { (void)verify_bijection(sg({4, 5, 11}), 2); });
}

TEST(Trace, BijectionOnMinimalMultiplicitySemigroups) {
    for (const auto& h : enumerate_semigroups(6)) {
        if (h.is_natural() || !h.has_minimal_multiplicity()) continue;
        for (std::uint32_t p : {2u, 3u}) {
            const auto r = verify_bijection(h, p);
            EXPECT_TRUE(r.ok) << h.pretty() << " p=" << p << ": " << r.detail;
        }
    }
}

TEST(Trace, FamilyProbe) {
    std::vector<Rational> samples{Rational(0), Rational(1), Rational(2), Rational(3), Rational(5)};
    const auto rep = family_probe(sg({4, 5, 6}), 2, samples);
    EXPECT_EQ(rep.distinct_results, 5u);
    EXPECT_TRUE(rep.infinite_family_witness());
    EXPECT_EQ(rep.verdict(), "InfiniteFamilyWitness");
    EXPECT_TRUE(rep.all_trace);

    expect_code(ErrorCode::PreconditionViolated, [&] { (void)family_probe(sg({4, 5, 11}), 2, samples); });
    expect_code(ErrorCode::InvalidArgument,
                [&] { (void)family_probe(sg({4, 5, 6}), 2, std::vector<Rational>{Rational(1), Rational(1)}); });

    const auto single = family_probe(sg({4, 5, 6}), 2, std::vector<Rational>{Rational(7)});
    EXPECT_FALSE(single.infinite_family_witness());
    EXPECT_EQ(single.verdict(), "NoSeparation");

    // the same over a prime field with enough elements
    const FieldSpec f7 = FieldSpec::prime(7);
    std::vector<Residue> res;
    for (long k = 0; k < 7; ++k) res.push_back(Residue::from_int(f7, k));
    EXPECT_TRUE(family_probe(sg({4, 5, 6}), 2, res).infinite_family_witness());
}

TEST(Trace, FamilyProbeWhereverItApplies) {
    const std::vector<Rational> samples{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
    int applied = 0;
    for (const auto& h : enumerate_semigroups(6)) {
        for (int n = 2; n < h.conductor() + 2; ++n) {
            if (!family_probe_applies(h, n)) continue;
            const auto rep = family_probe(h, n, samples);
            EXPECT_TRUE(rep.infinite_family_witness()) << h.pretty() << " n=" << n;
            ++applied;
            break;
        }
    }
    EXPECT_GT(applied, 10);
}

TEST(Trace, MinimalTraceClassification) {
    EXPECT_EQ(minimal_trace_classification(sg({3, 4, 5})), MinimalTraceClass::MinimalTraceSet);
    EXPECT_EQ(minimal_trace_classification(sg({4, 5, 11})), MinimalTraceClass::Larger);
    EXPECT_EQ(minimal_trace_classification(NumericalSemigroup::natural()), MinimalTraceClass::MinimalTraceSet);
    for (const auto& h : enumerate_semigroups(6)) {
        const auto tr = enumerate_trace_ideals(h, 2);
        EXPECT_TRUE(minimal_trace_consistent(tr)) << h.pretty();
    }
}

TEST(Trace, MaximalIdealIsTraceUnlessDVR) {
    for (const auto& h : enumerate_semigroups(8)) {
        const auto m = IdealP::maximal(F2, h);
        EXPECT_EQ(is_trace_ideal(m), !h.is_natural()) << h.pretty();
    }
}

TEST(Trace, HullPropertiesOnCandidates) {
    for (const auto& h : enumerate_semigroups(5)) {
        for (std::uint32_t p : {2u, 3u}) {
            const auto cand = enumerate_conductor_ideals(h, p);
            for (const auto& i : cand.ideals) {
                const auto t = trace(i);
                EXPECT_TRUE(t.contains(i));
                EXPECT_TRUE(FractionalIdeal<Residue>::unit(i.field(), h).contains(t));
                EXPECT_EQ(trace(t), t);
                for (int k : {1, 3}) EXPECT_EQ(trace(i.shifted(k)), t) << "scaling by t^" << k;
                // a regular ideal has a free summand exactly when it is principal
                EXPECT_EQ(has_free_summand(i), minimal_generator_count(i) == 1);
            }
        }
    }
}

TEST(Trace, RandomIdealsAwayFromTheConductor) {
    std::mt19937 rng(29);
    const auto semigroups = enumerate_semigroups(6);
    std::uniform_int_distribution<std::size_t> pick(1, semigroups.size() - 1);
    std::uniform_int_distribution<int> shift(1, 4);
    for (int t = 0; t < 50; ++t) {
        const auto& h = semigroups[pick(rng)];
        // a principal-plus ideal shifted so that it misses the conductor
        const auto g = oracle::random_poly(rng, F2, 0, h.conductor(), 2);
        if (g.is_zero()) continue;
        const auto i = IdealP::from_generators(F2, h, {g}, true).shifted(h.conductor() + shift(rng));
        ASSERT_FALSE(i.contains(IdealP::conductor(F2, h)));
        const auto tr = trace(i);
        EXPECT_TRUE(tr.contains(IdealP::conductor(F2, h))) << h.pretty();
        EXPECT_TRUE(is_trace_ideal(tr));
    }
}
