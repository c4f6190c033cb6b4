#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "traceforge/fractional_ideal.hpp"
#include "traceforge/subspace.hpp"

namespace traceforge {

/// tr(I) = (R : I) I.
template <ExactScalar E>
FractionalIdeal<E> trace(const FractionalIdeal<E>& i) {
    const auto r = FractionalIdeal<E>::unit(i.field(), i.ring());
    return r.colon(i) * i;
}

/// I is a trace ideal iff I = tr(I).
template <ExactScalar E>
bool is_trace_ideal(const FractionalIdeal<E>& i) {
    return trace(i) == i;
}

/// tr(I) = R, i.e. I has a free summand.
template <ExactScalar E>
bool has_free_summand(const FractionalIdeal<E>& i) {
    return trace(i) == FractionalIdeal<E>::unit(i.field(), i.ring());
}

/// dim_K(I / mI).
template <ExactScalar E>
int minimal_generator_count(const FractionalIdeal<E>& i) {
    const auto m = FractionalIdeal<E>::maximal(i.field(), i.ring());
    return i.colength(m * i);
}

// ---------------------------------------------------------------------------
// Exhaustive Tr(R) over a finite field.

inline constexpr int kMaxQuotientDimension = 12;

struct TraceIdealRecord {
    FractionalIdeal<Residue> ideal;
    bool is_conductor = false;
    bool is_maximal_ideal = false;
    bool is_unit_ideal = false;
    bool is_monomial = false;
};

struct TraceCensus {
    int quotient_dimension = 0;          // dim_K R / c
    std::size_t candidate_ideals = 0;    // ideals between c and R
    std::size_t cyclic_modules = 0;
    std::size_t vectors_scanned = 0;
    std::size_t sums_formed = 0;
};

struct TraceEnumeration {
    FieldSpec field;
    NumericalSemigroup semigroup;
    bool zero_ideal = true; // 0 is always a trace ideal; reported as a flag
    std::vector<TraceIdealRecord> ideals; // nonzero trace ideals
    TraceCensus census;

    std::size_t total_count() const { return ideals.size() + (zero_ideal ? 1 : 0); }
};

/// Multiplication by t^g on R / c in the monomial basis t^h (h in H, h < c).
inline std::vector<Matrix<Residue>> quotient_operators(const FieldSpec& field, const NumericalSemigroup& h) {
    const auto& basis = h.small_elements();
    const std::size_t dim = basis.size();
    std::vector<Matrix<Residue>> ops;
    for (int g : h.minimal_generators()) {
        if (g >= h.conductor()) continue;
        Matrix<Residue> op(field, dim, dim);
        for (std::size_t col = 0; col < dim; ++col) {
            const int target = basis[col] + g;
            if (target >= h.conductor()) continue;
            const auto row = std::lower_bound(basis.begin(), basis.end(), target) - basis.begin();
            op(static_cast<std::size_t>(row), col) = Residue::one(field);
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

struct CandidateIdeals {
    std::vector<FractionalIdeal<Residue>> ideals; // every ideal with c inside I inside R
    TraceCensus census;
};

/// All ideals between the conductor and R over F_p, lifted from R / c.
inline CandidateIdeals enumerate_conductor_ideals(const NumericalSemigroup& h, std::uint32_t p) {
    const FieldSpec field = FieldSpec::prime(p);
    const auto& basis = h.small_elements();
    const int dim = static_cast<int>(basis.size());
    require(dim <= kMaxQuotientDimension, ErrorCode::WorkloadExceeded,
            "dim R/c = " + std::to_string(dim) + " exceeds " + std::to_string(kMaxQuotientDimension));
    auto subspaces = enumerate_invariant_subspaces(field, basis.size(), quotient_operators(field, h));

    CandidateIdeals out;
    out.census.quotient_dimension = dim;
    out.census.candidate_ideals = subspaces.subspaces.size();
    out.census.cyclic_modules = subspaces.census.cyclic_modules;
    out.census.vectors_scanned = subspaces.census.vectors_scanned;
    out.census.sums_formed = subspaces.census.sums_formed;
    const int c = h.conductor();
    for (const auto& s : subspaces.subspaces) {
        std::vector<std::vector<Residue>> rows;
        for (std::size_t r = 0; r < s.rows(); ++r) {
            std::vector<Residue> v(static_cast<std::size_t>(c), Residue::zero(field));
            for (std::size_t k = 0; k < basis.size(); ++k) v[static_cast<std::size_t>(basis[k])] = s(r, k);
            rows.push_back(std::move(v));
        }
        out.ideals.push_back(FractionalIdeal<Residue>::from_span(field, h, 0, c, rows));
    }
    return out;
}

/// Every trace ideal of F_p[[H]]. Complete because nonzero trace ideals
/// contain the conductor.
inline TraceEnumeration enumerate_trace_ideals(const NumericalSemigroup& h, std::uint32_t p) {
    const FieldSpec field = FieldSpec::prime(p);
    auto candidates = enumerate_conductor_ideals(h, p);
    const auto unit = FractionalIdeal<Residue>::unit(field, h);
    const auto cond = FractionalIdeal<Residue>::conductor(field, h);
    const auto max = FractionalIdeal<Residue>::maximal(field, h);
    TraceEnumeration out{field, h, true, {}, candidates.census};
    for (auto& i : candidates.ideals) {
        if (!is_trace_ideal(i)) continue;
        TraceIdealRecord rec{i, i == cond, i == max, i == unit, i.is_monomial()};
        out.ideals.push_back(std::move(rec));
    }
    return out;
}

/// Every nonzero trace ideal contains the conductor, and the conductor is one of them.
inline bool verify_smallest_regular_trace(const TraceEnumeration& tr) {
    const auto cond = FractionalIdeal<Residue>::conductor(tr.field, tr.semigroup);
    bool conductor_listed = false;
    for (const auto& rec : tr.ideals) {
        if (!rec.ideal.contains(cond)) return false;
        conductor_listed = conductor_listed || rec.ideal == cond;
    }
    return conductor_listed;
}

inline bool verify_smallest_regular_trace(const NumericalSemigroup& h, std::uint32_t p) {
    return verify_smallest_regular_trace(enumerate_trace_ideals(h, p));
}

/// The sum of I : I over the nonzero trace ideals is K[[t]].
inline bool verify_normalization_union(const TraceEnumeration& tr) {
    auto acc = FractionalIdeal<Residue>::unit(tr.field, tr.semigroup);
    for (const auto& rec : tr.ideals) acc = acc + endomorphism_ring(rec.ideal);
    return acc == FractionalIdeal<Residue>::integral_closure(tr.field, tr.semigroup);
}

inline bool verify_normalization_union(const NumericalSemigroup& h, std::uint32_t p) {
    return verify_normalization_union(enumerate_trace_ideals(h, p));
}

struct BijectionReport {
    bool ok = false;
    std::size_t left_count = 0;  // nonzero members of Tr(R) \ {R}
    std::size_t right_count = 0; // nonzero members of Tr(B)
    bool zero_to_zero = true;
    NumericalSemigroup blowup_semigroup;
    std::string detail;
};

/// For R of minimal multiplicity e (not a DVR), I -> I / t^e maps
/// Tr(R) \ {R} bijectively onto Tr(m : m).
inline BijectionReport verify_bijection(const NumericalSemigroup& h, std::uint32_t p) {
    require(!h.is_natural(), ErrorCode::IsDVR, "K[[t]] is a discrete valuation ring");
    require(h.has_minimal_multiplicity(), ErrorCode::NotMinimalMultiplicity,
            h.pretty() + " does not have minimal multiplicity");
    const FieldSpec field = FieldSpec::prime(p);
    const int e = h.multiplicity();
    const auto lh = blowup(h);
    BijectionReport rep{false, 0, 0, true, lh, ""};

    // B = m : m = m / t^e = K[[L(H)]].
    const auto m = FractionalIdeal<Residue>::maximal(field, h);
    const auto b_from_colon = endomorphism_ring(m);
    const auto b_unit = FractionalIdeal<Residue>::unit(field, lh);
    if (!b_from_colon.same_module(b_unit) || !m.shifted(-e).same_module(b_unit)) {
        rep.detail = "m:m differs from the unit ideal of " + lh.pretty();
        return rep;
    }

    const auto left = enumerate_trace_ideals(h, p);
    const auto right = enumerate_trace_ideals(lh, p);
    std::vector<FractionalIdeal<Residue>> image;
    for (const auto& rec : left.ideals) {
        if (rec.is_unit_ideal) continue;
        const auto shifted = rec.ideal.shifted(-e);
        if (!shifted.is_closed_under(lh)) {
            rep.detail = "image of an ideal is not a B-module";
            return rep;
        }
        image.push_back(shifted.over_ring(lh));
    }
    rep.left_count = image.size();
    rep.right_count = right.ideals.size();
    auto listed = [&](const FractionalIdeal<Residue>& x) {
        return std::any_of(right.ideals.begin(), right.ideals.end(),
                           [&](const TraceIdealRecord& r) { return r.ideal == x; });
    };
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (!listed(image[i])) {
            rep.detail = "an image is not a trace ideal of B";
            return rep;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (image[i] == image[j]) {
                rep.detail = "two trace ideals share an image";
                return rep;
            }
    }
    rep.ok = rep.left_count == rep.right_count && left.zero_ideal && right.zero_ideal;
    if (!rep.ok) rep.detail = "image does not exhaust Tr(B)";
    return rep;
}

// ---------------------------------------------------------------------------
// Separation of one-parameter families R : R[t^n + k t^(n+1)].

template <ExactScalar E>
struct FamilyProbeReport {
    NumericalSemigroup semigroup;
    int n = 0;
    std::vector<E> samples;
    std::vector<FractionalIdeal<E>> colons;
    std::size_t distinct_results = 0;
    bool all_trace = true;

    bool infinite_family_witness() const { return samples.size() > 1 && distinct_results == samples.size(); }
    std::string verdict() const { return infinite_family_witness() ? "InfiniteFamilyWitness" : "NoSeparation"; }
};

/// True when 1, n, n+1 all miss the canonical value set.
inline bool family_probe_applies(const NumericalSemigroup& h, int n) {
    const auto k = canonical_value_set(h);
    return n >= 2 && !k.contains(1) && !k.contains(n) && !k.contains(n + 1);
}

template <ExactScalar E>
FamilyProbeReport<E> family_probe(const NumericalSemigroup& h, int n, const std::vector<E>& samples) {
    require(family_probe_applies(h, n), ErrorCode::PreconditionViolated,
            "1, " + std::to_string(n) + ", " + std::to_string(n + 1) + " are not all outside K(H)");
    require(!samples.empty(), ErrorCode::InvalidArgument, "no samples");
    const FieldSpec field = samples.front().field();
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            require(!(samples[i] == samples[j]), ErrorCode::InvalidArgument, "samples must be distinct");

    FamilyProbeReport<E> rep{h, n, samples, {}, 0, true};
    const auto r = FractionalIdeal<E>::unit(field, h);
    for (const auto& k : samples) {
        LaurentPoly<E> g = LaurentPoly<E>::monomial(field, n);
        g.add_term(n + 1, k);
        auto c = r.colon(adjoin(field, h, g));
        rep.all_trace = rep.all_trace && is_trace_ideal(c);
        const bool fresh = std::none_of(rep.colons.begin(), rep.colons.end(),
                                        [&](const FractionalIdeal<E>& x) { return x == c; });
        if (fresh) ++rep.distinct_results;
        rep.colons.push_back(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------------

enum class MinimalTraceClass { MinimalTraceSet, Larger };

inline std::string to_string(MinimalTraceClass c) {
    return c == MinimalTraceClass::MinimalTraceSet ? "MinimalTraceSet" : "Larger";
}

/// Tr(R) inside {0, m, R} exactly when m lies in the conductor, i.e.
/// H = {0} u [e, inf), or R is a DVR.
inline MinimalTraceClass minimal_trace_classification(const NumericalSemigroup& h) {
    if (h.is_natural() || h.multiplicity() == h.conductor()) return MinimalTraceClass::MinimalTraceSet;
    return MinimalTraceClass::Larger;
}

/// Cross-check of the classification against an enumeration.
inline bool minimal_trace_consistent(const TraceEnumeration& tr) {
    const bool small = std::all_of(tr.ideals.begin(), tr.ideals.end(), [](const TraceIdealRecord& r) {
        return r.is_maximal_ideal || r.is_unit_ideal;
    });
    return small == (minimal_trace_classification(tr.semigroup) == MinimalTraceClass::MinimalTraceSet);
}

} // namespace traceforge
