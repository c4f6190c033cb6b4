#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "traceforge/laurent.hpp"
#include "traceforge/matrix.hpp"
#include "traceforge/semigroup.hpp"

namespace traceforge {

/// A fractional ideal of R = K[[H]] inside K((t)).
///
/// Stored canonically as t^tail K[[t]] plus the span of finitely many Laurent
/// polynomials supported on [lo, tail), kept in reduced echelon form ordered
/// by valuation (pivot = lowest exponent, pivot coefficient 1, pivot columns
/// cleared in every other row). The tail is minimal, so two ideals are equal
/// as sets exactly when their canonical forms agree.
template <ExactScalar E>
class FractionalIdeal {
public:
    using Poly = LaurentPoly<E>;

    // ---- constructors -------------------------------------------------

    /// R itself: monomials t^h, h in H below the conductor, tail c(H).
    static FractionalIdeal unit(FieldSpec field, const NumericalSemigroup& h) {
        return from_generators(field, h, {Poly::constant(field, 1)}, false);
    }

    /// The conductor R : K[[t]] = t^c K[[t]].
    static FractionalIdeal conductor(FieldSpec field, const NumericalSemigroup& h) {
        return from_generators(field, h, {}, true);
    }

    /// K[[t]] regarded as a fractional R-ideal.
    static FractionalIdeal integral_closure(FieldSpec field, const NumericalSemigroup& h) {
        return FractionalIdeal(field, h, 0, 0, Matrix<E>(field, 0, 0), {});
    }

    static FractionalIdeal maximal(FieldSpec field, const NumericalSemigroup& h) {
        std::vector<Poly> gens;
        for (int g : h.minimal_generators()) gens.push_back(Poly::monomial(field, g));
        return from_generators(field, h, gens, false);
    }

    /// t^k R.
    static FractionalIdeal principal_monomial(FieldSpec field, const NumericalSemigroup& h, int k) {
        return unit(field, h).shifted(k);
    }

    /// The R-module generated by gens, plus the conductor when with_conductor.
    static FractionalIdeal from_generators(FieldSpec field, const NumericalSemigroup& h,
                                           const std::vector<Poly>& gens, bool with_conductor) {
        std::vector<const Poly*> nonzero;
        for (const auto& g : gens) {
            require(g.field() == field, ErrorCode::FieldMismatch, "generator over another field");
            if (!g.is_zero()) nonzero.push_back(&g);
        }
        require(!nonzero.empty() || with_conductor, ErrorCode::ZeroIdeal, "no nonzero generators");
        const int c = h.conductor();
        // f has valuation v, so f K[[t]] = t^v K[[t]] and f R contains t^(v+c) K[[t]].
        int tail = with_conductor ? c : std::numeric_limits<int>::max();
        for (const Poly* g : nonzero) tail = std::min(tail, *g->valuation() + c);
        int lo = tail;
        for (const Poly* g : nonzero) lo = std::min(lo, *g->valuation());

        std::vector<std::vector<E>> rows;
        for (const Poly* g : nonzero) {
            const int v = *g->valuation();
            for (int s = 0; v + s < tail; ++s) {
                if (!h.contains(s)) continue;
                rows.push_back(to_window(g->shifted(s), lo, tail, field));
            }
        }
        return canonical(field, h, lo, tail, rows);
    }

    /// Builds the ideal spanned over K by the given vectors (over [lo, tail))
    /// plus t^tail K[[t]]; the caller guarantees R-closure.
    static FractionalIdeal from_span(FieldSpec field, const NumericalSemigroup& h, int lo, int tail,
                                     const std::vector<std::vector<E>>& rows) {
        return canonical(field, h, lo, tail, rows);
    }

    // ---- accessors ----------------------------------------------------

    const FieldSpec& field() const noexcept { return field_; }
    const NumericalSemigroup& ring() const noexcept { return ring_; }
    /// Least valuation of a nonzero element.
    int lo() const noexcept { return lo_; }
    /// Minimal N with t^N K[[t]] inside the ideal.
    int tail() const noexcept { return tail_; }
    const std::vector<int>& pivots() const noexcept { return pivots_; }
    std::size_t basis_size() const noexcept { return pivots_.size(); }

    /// Basis element i as a polynomial supported on [lo, tail).
    Poly basis_element(std::size_t i) const {
        Poly p(field_);
        for (std::size_t k = 0; k < rows_.cols(); ++k) p.add_term(lo_ + static_cast<int>(k), rows_(i, k));
        return p;
    }
    std::vector<Poly> basis() const {
        std::vector<Poly> out;
        for (std::size_t i = 0; i < basis_size(); ++i) out.push_back(basis_element(i));
        return out;
    }

    bool is_monomial() const {
        for (std::size_t i = 0; i < rows_.rows(); ++i) {
            int nz = 0;
            for (const auto& x : rows_.row(i)) nz += x.is_zero() ? 0 : 1;
            if (nz != 1) return false;
        }
        return true;
    }

    /// Valuations of all nonzero elements: the pivots together with [tail, inf).
    SemigroupIdeal value_set() const {
        std::vector<char> bits(static_cast<std::size_t>(tail_ - lo_), 0);
        for (int p : pivots_) bits[p - lo_] = 1;
        return SemigroupIdeal::from_membership(ring_, lo_, tail_, bits);
    }

    // ---- membership and comparison ------------------------------------

    bool contains(const Poly& f) const {
        require(f.field() == field_, ErrorCode::FieldMismatch, "membership across fields");
        const Poly cut = f.truncated(tail_);
        if (cut.is_zero()) return true;
        if (*cut.valuation() < lo_) return false;
        auto v = to_window(cut, lo_, tail_, field_);
        reduce_against(v, rows_, pivot_columns());
        return is_zero_vector<E>(v);
    }

    /// Set inclusion: every element of other lies in this ideal.
    bool contains(const FractionalIdeal& other) const {
        check_compatible(other);
        if (other.tail_ < tail_) return false;
        for (std::size_t i = 0; i < other.basis_size(); ++i)
            if (!contains(other.basis_element(i))) return false;
        return true;
    }

    /// Equality of the underlying K-subspaces of K((t)), regardless of ring.
    bool same_module(const FractionalIdeal& o) const {
        require(field_ == o.field_, ErrorCode::FieldMismatch, "comparison across fields");
        return lo_ == o.lo_ && tail_ == o.tail_ && rows_ == o.rows_;
    }

    friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
        a.check_compatible(b);
        return a.same_module(b);
    }

    /// dim_K(this / sub) for sub contained in this.
    int colength(const FractionalIdeal& sub) const {
        require(contains(sub), ErrorCode::InvalidArgument, "colength of a non-submodule");
        const auto big = value_set(), small = sub.value_set();
        int n = 0;
        for (int x = big.min(); x < std::max(big.stable_bound(), small.stable_bound()); ++x)
            if (big.contains(x) && !small.contains(x)) ++n;
        return n;
    }

    /// True when t^g * b stays inside for every basis element b and generator g.
    bool is_closed_under(const NumericalSemigroup& h) const {
        for (std::size_t i = 0; i < basis_size(); ++i) {
            const Poly b = basis_element(i);
            for (int g : h.minimal_generators())
                if (!contains(b.shifted(g))) return false;
        }
        return true;
    }

    /// The same module viewed as a fractional ideal of K[[other]].
    FractionalIdeal over_ring(const NumericalSemigroup& other) const {
        require(is_closed_under(other), ErrorCode::NotClosed,
                "module is not closed under " + other.pretty());
        FractionalIdeal out = *this;
        out.ring_ = other;
        return out;
    }

    // ---- arithmetic ---------------------------------------------------

    /// Multiplication by t^k.
    FractionalIdeal shifted(int k) const {
        FractionalIdeal out = *this;
        out.lo_ += k;
        out.tail_ += k;
        for (auto& p : out.pivots_) p += k;
        return out;
    }

    friend FractionalIdeal operator+(const FractionalIdeal& a, const FractionalIdeal& b) {
        a.check_compatible(b);
        const int tail = std::min(a.tail_, b.tail_);
        const int lo = std::min({a.lo_, b.lo_, tail});
        auto rows = a.rows_in_window(lo, tail);
        for (auto& r : b.rows_in_window(lo, tail)) rows.push_back(std::move(r));
        return canonical(a.field_, a.ring_, lo, tail, rows);
    }

    friend FractionalIdeal operator*(const FractionalIdeal& a, const FractionalIdeal& b) {
        a.check_compatible(b);
        const int tail = std::min(a.tail_ + b.lo_, b.tail_ + a.lo_);
        const int lo = std::min(a.lo_ + b.lo_, tail);
        const auto ba = a.basis(), bb = b.basis();
        std::vector<std::vector<E>> rows;
        for (const auto& x : ba)
            for (const auto& y : bb) rows.push_back(to_window(x.multiply_truncated(y, tail), lo, tail, a.field_));
        // basis elements against the other factor's tail monomials
        auto with_tail = [&](const std::vector<Poly>& polys, int other_tail) {
            for (const auto& x : polys)
                for (int k = other_tail; *x.valuation() + k < tail; ++k)
                    rows.push_back(to_window(x.shifted(k).truncated(tail), lo, tail, a.field_));
        };
        with_tail(ba, b.tail_);
        with_tail(bb, a.tail_);
        return canonical(a.field_, a.ring_, lo, tail, rows);
    }

    /// this : other = { x : x * other inside this }.
    ///
    /// x * other lies in t^tail K[[t]] once v(x) >= tail - lo(other), and
    /// v(x) >= lo - lo(other) for every member, so x is pinned down by its
    /// coefficients on [lo - lo(other), tail - lo(other)). Those coefficients
    /// solve one homogeneous system: for each spanning element y of other and
    /// each unknown exponent j, the residue of t^j y modulo this must cancel.
    FractionalIdeal colon(const FractionalIdeal& other) const {
        check_compatible(other);
        const int L = lo_ - other.lo_;
        const int M = tail_ - other.lo_;
        const int width = tail_ - lo_;
        const int unknowns = M - L;
        if (unknowns <= 0) return canonical(field_, ring_, M, M, {});

        std::vector<Poly> spanning = other.basis();
        for (int k = other.tail_; k < tail_ - L; ++k) spanning.push_back(Poly::monomial(field_, k));

        const auto pcols = pivot_columns();
        Matrix<E> system(field_, spanning.size() * static_cast<std::size_t>(width),
                         static_cast<std::size_t>(unknowns));
        for (std::size_t s = 0; s < spanning.size(); ++s) {
            const Poly y = spanning[s].truncated(tail_ - L);
            for (int j = 0; j < unknowns; ++j) {
                auto r = to_window(y.shifted(L + j).truncated(tail_), lo_, tail_, field_);
                reduce_against(r, rows_, pcols);
                for (int e = 0; e < width; ++e)
                    system(s * static_cast<std::size_t>(width) + static_cast<std::size_t>(e),
                           static_cast<std::size_t>(j)) = r[static_cast<std::size_t>(e)];
            }
        }
        return canonical(field_, ring_, L, M, solve_homogeneous(system));
    }

private:
    FractionalIdeal(FieldSpec field, NumericalSemigroup h, int lo, int tail, Matrix<E> rows,
                    std::vector<int> pivots)
        : field_(field), ring_(std::move(h)), lo_(lo), tail_(tail), rows_(std::move(rows)),
          pivots_(std::move(pivots)) {}

    void check_compatible(const FractionalIdeal& o) const {
        require(field_ == o.field_, ErrorCode::FieldMismatch,
                field_.to_string() + " vs " + o.field_.to_string());
        require(ring_ == o.ring_, ErrorCode::FieldMismatch,
                "ideals of " + ring_.pretty() + " and " + o.ring_.pretty());
    }

    std::vector<std::size_t> pivot_columns() const {
        std::vector<std::size_t> out;
        for (int p : pivots_) out.push_back(static_cast<std::size_t>(p - lo_));
        return out;
    }

    static std::vector<E> to_window(const Poly& f, int lo, int hi, const FieldSpec& field) {
        std::vector<E> v(static_cast<std::size_t>(std::max(hi - lo, 0)), E::zero(field));
        for (const auto& [e, c] : f.terms()) {
            if (e >= hi) continue;
            require(e >= lo, ErrorCode::InvalidArgument, "term below window");
            v[static_cast<std::size_t>(e - lo)] = c;
        }
        return v;
    }

    std::vector<std::vector<E>> rows_in_window(int lo, int hi) const {
        std::vector<std::vector<E>> out;
        for (std::size_t i = 0; i < basis_size(); ++i) out.push_back(to_window(basis_element(i), lo, hi, field_));
        return out;
    }

    static FractionalIdeal canonical(FieldSpec field, const NumericalSemigroup& h, int lo, int tail,
                                     const std::vector<std::vector<E>>& rows) {
        const std::size_t width = static_cast<std::size_t>(std::max(tail - lo, 0));
        auto red = rref(Matrix<E>::from_rows(field, rows, width));
        Matrix<E> m = std::move(red.matrix);
        std::vector<std::size_t> piv = std::move(red.pivots);
        std::size_t cols = width;
        // Shrink the tail while t^(tail-1) itself is a basis row.
        while (!piv.empty() && piv.back() + 1 == cols) {
            piv.pop_back();
            --cols;
            --tail;
        }
        const std::size_t first = piv.empty() ? cols : piv.front();
        Matrix<E> trimmed(field, piv.size(), cols - first);
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t k = first; k < cols; ++k) trimmed(i, k - first) = m(i, k);
        std::vector<int> pivots;
        for (auto p : piv) pivots.push_back(lo + static_cast<int>(p));
        const int new_lo = lo + static_cast<int>(first);
        return FractionalIdeal(field, h, new_lo, tail, std::move(trimmed), std::move(pivots));
    }

    FieldSpec field_;
    NumericalSemigroup ring_;
    int lo_;
    int tail_;
    Matrix<E> rows_;
    std::vector<int> pivots_;
};

template <ExactScalar E>
FractionalIdeal<E> colon(const FractionalIdeal<E>& i, const FractionalIdeal<E>& j) {
    return i.colon(j);
}

/// I : I, a ring between R and K[[t]].
template <ExactScalar E>
FractionalIdeal<E> endomorphism_ring(const FractionalIdeal<E>& i) {
    return i.colon(i);
}

/// The normalized canonical ideal omega/a: monomials t^x for x in K(H).
template <ExactScalar E>
FractionalIdeal<E> canonical_ideal(FieldSpec field, const NumericalSemigroup& h) {
    const auto k = canonical_value_set(h);
    const int tail = k.stable_bound();
    std::vector<std::vector<E>> rows;
    for (int x : k.small_elements()) {
        std::vector<E> v(static_cast<std::size_t>(tail), E::zero(field));
        v[static_cast<std::size_t>(x)] = E::one(field);
        rows.push_back(std::move(v));
    }
    return FractionalIdeal<E>::from_span(field, h, 0, tail, rows);
}

template <ExactScalar E>
struct CanonicalIdealData {
    FractionalIdeal<E> ideal;
    int reduction_exponent; // least n with W^(n+1) = W^n
};

/// omega/a together with its reduction exponent, found by powering.
template <ExactScalar E>
CanonicalIdealData<E> canonical_fractional_ideal(FieldSpec field, const NumericalSemigroup& h) {
    const auto w = canonical_ideal<E>(field, h);
    auto power = FractionalIdeal<E>::unit(field, h);
    for (int n = 0; n <= h.conductor() + 1; ++n) {
        auto next = power * w;
        if (next == power) return {w, n};
        power = std::move(next);
    }
    fail(ErrorCode::InvalidArgument, "canonical ideal powers did not stabilize");
}

/// R[g] = R + Rg + Rg^2 + ... as an R-module, for g in K[[t]].
template <ExactScalar E>
FractionalIdeal<E> adjoin(FieldSpec field, const NumericalSemigroup& h, const LaurentPoly<E>& g) {
    auto ring = FractionalIdeal<E>::unit(field, h);
    if (g.is_zero()) return ring;
    require(*g.valuation() >= 0, ErrorCode::NotIntegral, "element " + g.to_string() + " is not in K[[t]]");
    const auto gen = FractionalIdeal<E>::from_generators(field, h, {g}, false);
    // Each proper step adds a dimension inside K[[t]] / t^c K[[t]].
    for (int step = 0; step <= h.conductor(); ++step) {
        auto next = ring + ring * gen;
        if (next == ring) {
            require(ring * ring == ring, ErrorCode::InvalidArgument, "adjoin result is not a ring");
            return ring;
        }
        ring = std::move(next);
    }
    fail(ErrorCode::InvalidArgument, "adjoin iteration exceeded the conductor bound");
}

} // namespace traceforge
