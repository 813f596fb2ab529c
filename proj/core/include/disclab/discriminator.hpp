#pragma once

// Discriminators: D(n) is the least m >= 1 such that the first n terms are
// pairwise incongruent modulo m.

#include "disclab/arith.hpp"
#include "disclab/quad_seq.hpp"
#include "disclab/residue_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace disclab {

/// A list of pairwise distinct integers. Distinctness is established once,
/// on construction, by sorting a copy.
class Terms {
public:
    /// Throws DuplicateTerm(i, j) with i < j the first colliding indices.
    explicit Terms(std::vector<wide_int> values);

    static Terms prefix(const QuadSeq& q, std::int64_t n);

    std::span<const wide_int> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// max - min + 1; always discriminates.
    wide_int spread_bound() const noexcept { return max_ - min_ + 1; }

private:
    std::vector<wide_int> values_;
    wide_int min_ = 0;
    wide_int max_ = 0;
};

bool discriminates(const Terms& terms, std::int64_t m);

/// Validates distinctness first; throws DuplicateTerm.
bool discriminates(std::span<const wide_int> values, std::int64_t m);

/// Least m >= 1 that discriminates, by ascending scan from 1.
std::int64_t discriminator_oracle(const Terms& terms);

/// Computes D(1), D(2), ... one term at a time. The candidate modulus never
/// decreases, and a candidate stays valid until a new term collides with an
/// earlier residue, at which point the scan resumes from the next modulus.
class DiscriminatorEngine {
public:
    DiscriminatorEngine() = default;

    /// Appends a term and returns D(size()). Throws DuplicateTerm when the
    /// term equals an earlier one; the engine is unchanged in that case.
    std::int64_t push(wide_int value);

    std::size_t size() const noexcept { return values_.size(); }
    std::int64_t current() const noexcept { return modulus_; }

private:
    bool rebuild(std::int64_t modulus);

    std::vector<wide_int> values_;
    std::int64_t modulus_ = 1;
    ResidueSet residues_;
};

struct TableEntry {
    std::int64_t n;
    std::int64_t d;

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

enum class TableMethod { oracle, incremental };

struct DiscriminatorTable {
    std::variant<QuadSeq, std::vector<wide_int>> source;
    std::vector<TableEntry> entries;
    TableMethod method;

    std::int64_t at(std::int64_t n) const { return entries.at(static_cast<std::size_t>(n - 1)).d; }
};

/// D(n) for n = 1..count via DiscriminatorEngine. Throws DuplicateTerm.
DiscriminatorTable discriminator_table(const QuadSeq& q, std::int64_t count);
DiscriminatorTable discriminator_table(std::vector<wide_int> values);

/// Same result as discriminator_table, computed with one oracle call per
/// prefix. Quadratic in the table length; meant for cross-checking.
DiscriminatorTable oracle_table(const QuadSeq& q, std::int64_t count);

/// Bound on the indices of a PairWitness: j <= limit or j < limit.
struct IndexBound {
    std::int64_t limit;
    bool inclusive;

    bool admits(std::int64_t j) const noexcept { return inclusive ? j <= limit : j < limit; }
    std::string describe() const;

    friend bool operator==(const IndexBound&, const IndexBound&) = default;
};

/// Certifies that m divides q(j) - q(i) with 0 <= i < j inside the bound,
/// i.e. m does not discriminate the terms up to index j.
struct PairWitness {
    std::int64_t m;
    std::int64_t i;
    std::int64_t j;
    IndexBound bound;

    friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

/// Range and divisibility check, evaluating both terms directly.
bool verify(const QuadSeq& q, const PairWitness& w);

/// Some 0 <= i < j < n with m | q(j) - q(i) (smallest j, then smallest i),
/// or nullopt when m discriminates the first n terms. Requires n >= 2.
std::optional<PairWitness> failure_witness(const QuadSeq& q, std::int64_t n, std::int64_t m);

/// Outcome of comparing D(n) against p^ceil(log_p n) for n = 1..horizon.
struct PowerComparison {
    enum class Status { matches, diverges, duplicate };

    Status status;
    std::int64_t horizon;
    std::int64_t n = 0;       // first divergence, or the later duplicate index
    std::int64_t d = 0;       // D(n) at the divergence
    std::int64_t target = 0;  // p^ceil(log_p n) at the divergence
    std::int64_t duplicate_of = 0;
};

/// Stops at the first n with D(n) != p^ceil(log_p n).
PowerComparison compare_with_prime_power(const QuadSeq& q, std::int64_t p, std::int64_t horizon);

} // namespace disclab
