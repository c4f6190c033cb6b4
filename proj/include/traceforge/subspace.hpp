#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "traceforge/matrix.hpp"

namespace traceforge {

namespace detail {

using Word = std::uint32_t;
using Vec = std::vector<Word>;

/// Row-reduced subspace of F_p^dim kept as flattened RREF rows.
class ModpSubspace {
public:
    ModpSubspace(Word p, std::size_t dim) : p_(p), dim_(dim) {}

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }

    /// Reduces v in place against the rows; returns true when v ends up zero.
    bool reduce(Vec& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Word f = v[pivots_[i]];
            if (!f) continue;
            const Word neg = p_ - f;
            const Vec& r = rows_[i];
            for (std::size_t k = pivots_[i]; k < dim_; ++k)
                if (r[k]) v[k] = static_cast<Word>((v[k] + std::uint64_t{neg} * r[k]) % p_);
        }
        return std::all_of(v.begin(), v.end(), [](Word x) { return x == 0; });
    }

    bool contains(Vec v) const { return reduce(v); }

    /// Adds v (any vector); returns false when it was already inside.
    bool insert(Vec v) {
        if (reduce(v)) return false;
        std::size_t piv = 0;
        while (!v[piv]) ++piv;
        const Word inv = inverse(v[piv]);
        for (auto& x : v) x = static_cast<Word>(std::uint64_t{x} * inv % p_);
        // clear the new pivot column from existing rows
        for (auto& r : rows_) {
            const Word f = r[piv];
            if (!f) continue;
            const Word neg = p_ - f;
            for (std::size_t k = 0; k < dim_; ++k)
                if (v[k]) r[k] = static_cast<Word>((r[k] + std::uint64_t{neg} * v[k]) % p_);
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, piv);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    /// Flattened RREF: equal keys iff equal subspaces.
    Vec key() const {
        Vec k;
        k.reserve(rows_.size() * dim_);
        for (const auto& r : rows_) k.insert(k.end(), r.begin(), r.end());
        return k;
    }

    Word inverse(Word a) const {
        std::uint64_t base = a, e = p_ - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<Word>(acc);
    }

private:
    Word p_;
    std::size_t dim_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec> rows_;
};

inline Vec apply(const std::vector<Vec>& op, const Vec& v, Word p) {
    Vec out(op.size(), 0);
    for (std::size_t r = 0; r < op.size(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < v.size(); ++c) acc += std::uint64_t{op[r][c]} * v[c];
        out[r] = static_cast<Word>(acc % p);
    }
    return out;
}

} // namespace detail

struct SubspaceCensus {
    std::size_t vectors_scanned = 0;  // projective representatives visited
    std::size_t cyclic_modules = 0;   // distinct cyclic invariant subspaces
    std::size_t sums_formed = 0;      // I + C evaluations during sum closure
    std::size_t invariant_subspaces = 0;
};

struct SubspaceEnumeration {
    std::vector<Matrix<Residue>> subspaces; // RREF bases, sorted by (dim, entries)
    SubspaceCensus census;
};

/// Default cap on p^dim for exhaustive enumeration.
inline constexpr std::uint64_t kMaxEnumerationVectors = 10'000'000;

/// Every subspace of F_p^dim invariant under the given operators (square
/// matrices acting on column vectors).
///
/// All cyclic invariant subspaces are generated first, one per projective
/// point; every invariant subspace is a finite sum of cyclic ones, so closing
/// {0} under "add one cyclic subspace" reaches all of them.
inline SubspaceEnumeration enumerate_invariant_subspaces(const FieldSpec& field, std::size_t dim,
                                                         const std::vector<Matrix<Residue>>& operators,
                                                         std::uint64_t max_vectors = kMaxEnumerationVectors) {
    using namespace detail;
    require(field.is_finite(), ErrorCode::InfiniteField, "subspace enumeration needs a finite field");
    const Word p = field.characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= p;
        require(total <= max_vectors, ErrorCode::WorkloadExceeded,
                "F" + std::to_string(p) + "^" + std::to_string(dim) + " is too large to enumerate");
    }
    std::vector<std::vector<Vec>> ops;
    for (const auto& m : operators) {
        require(m.rows() == dim && m.cols() == dim, ErrorCode::InvalidArgument, "operator shape");
        std::vector<Vec> op(dim, Vec(dim, 0));
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) op[r][c] = m(r, c).value();
        ops.push_back(std::move(op));
    }

    SubspaceEnumeration out;
    struct Cyclic {
        Vec generator;
        ModpSubspace span;
    };
    std::vector<Cyclic> cyclics;
    std::set<Vec> cyclic_keys;

    Vec v(dim, 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = static_cast<Word>(x % p);
            x /= p;
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](Word w) { return w != 0; });
        if (*lead != 1) continue;
        ++out.census.vectors_scanned;
        ModpSubspace span(p, dim);
        std::deque<Vec> queue{v};
        span.insert(v);
        while (!queue.empty()) {
            Vec u = std::move(queue.front());
            queue.pop_front();
            for (const auto& op : ops) {
                Vec w = apply(op, u, p);
                if (span.insert(w)) queue.push_back(std::move(w));
            }
        }
        if (cyclic_keys.insert(span.key()).second) cyclics.push_back({v, std::move(span)});
    }
    out.census.cyclic_modules = cyclics.size();

    std::set<Vec> seen{Vec{}};
    std::vector<ModpSubspace> found{ModpSubspace(p, dim)};
    for (std::size_t idx = 0; idx < found.size(); ++idx) {
        for (const auto& c : cyclics) {
            if (found[idx].contains(c.generator)) continue;
            ModpSubspace sum = found[idx];
            for (const auto& r : c.span.rows()) sum.insert(r);
            ++out.census.sums_formed;
            if (seen.insert(sum.key()).second) found.push_back(std::move(sum));
        }
    }

    std::sort(found.begin(), found.end(), [](const ModpSubspace& a, const ModpSubspace& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.key() < b.key();
    });
    for (const auto& s : found) {
        Matrix<Residue> m(field, 0, dim);
        for (const auto& r : s.rows()) {
            std::vector<Residue> row;
            for (Word w : r) row.emplace_back(w, p);
            m.append_row(row);
        }
        out.subspaces.push_back(std::move(m));
    }
    out.census.invariant_subspaces = out.subspaces.size();
    return out;
}

} // namespace traceforge
