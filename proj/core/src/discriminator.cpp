#include "disclab/discriminator.hpp"

#include "disclab/error.hpp"

#include <algorithm>
#include <numeric>

namespace disclab {

Terms::Terms(std::vector<wide_int> values) : values_(std::move(values)) {
    require(!values_.empty(), "term list must be nonempty");
    require(values_.size() < (std::size_t{1} << 32), "term list too long");

    std::vector<std::uint32_t> order(values_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return values_[a] < values_[b]; });

    std::optional<std::pair<std::uint32_t, std::uint32_t>> clash;
    std::size_t group_start = 0;
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (values_[order[k]] != values_[order[group_start]]) {
            group_start = k;
            continue;
        }
        if (k == group_start + 1 && (!clash || order[k] < clash->second))
            clash = std::pair{order[group_start], order[k]};
    }
    if (clash) throw DuplicateTerm(clash->first, clash->second);

    min_ = values_[order.front()];
    max_ = values_[order.back()];
}

Terms Terms::prefix(const QuadSeq& q, std::int64_t n) {
    require(n >= 1 && n <= kIndexLimit, "prefix length must lie in [1, 2^31]");
    std::vector<wide_int> values;
    values.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) values.push_back(eval(q, i));
    return Terms(std::move(values));
}

namespace {

bool discriminates_with(ResidueSet& set, std::span<const wide_int> values, std::int64_t m) {
    set.reset(static_cast<std::uint64_t>(m));
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (set.insert(static_cast<std::uint64_t>(mod(values[k], m)),
                       static_cast<std::uint32_t>(k)))
            return false;
    }
    return true;
}

} // namespace

bool discriminates(const Terms& terms, std::int64_t m) {
    require(m >= 1, "modulus must be positive");
    if (static_cast<std::uint64_t>(m) < terms.size()) return false;
    ResidueSet set;
    return discriminates_with(set, terms.values(), m);
}

bool discriminates(std::span<const wide_int> values, std::int64_t m) {
    return discriminates(Terms(std::vector<wide_int>(values.begin(), values.end())), m);
}

std::int64_t discriminator_oracle(const Terms& terms) {
    ResidueSet set;
    const std::int64_t bound = narrow(terms.spread_bound());
    for (std::int64_t m = 1;; ++m) {
        if (discriminates_with(set, terms.values(), m)) return m;
        if (m >= bound)
            fail(ErrorCode::internal_contradiction,
                 "oracle passed the max - min + 1 bound without discriminating");
    }
}

std::int64_t DiscriminatorEngine::push(wide_int value) {
    const auto index = static_cast<std::uint32_t>(values_.size());
    if (values_.empty()) {
        values_.push_back(value);
        modulus_ = 1;
        residues_.reset(1);
        residues_.insert(0, 0);
        return modulus_;
    }
    const auto owner = residues_.insert(static_cast<std::uint64_t>(mod(value, modulus_)), index);
    if (!owner) {
        values_.push_back(value);
        return modulus_;
    }
    if (values_[*owner] == value) throw DuplicateTerm(*owner, index);

    values_.push_back(value);
    std::int64_t m = modulus_;
    do {
        m = checked_add(m, std::int64_t{1});
    } while (!rebuild(m));
    modulus_ = m;
    return modulus_;
}

bool DiscriminatorEngine::rebuild(std::int64_t modulus) {
    if (static_cast<std::uint64_t>(modulus) < values_.size()) return false;
    return discriminates_with(residues_, values_, modulus);
}

DiscriminatorTable discriminator_table(const QuadSeq& q, std::int64_t count) {
    require(count >= 1 && count <= kIndexLimit, "table length must lie in [1, 2^31]");
    DiscriminatorTable table{q, {}, TableMethod::incremental};
    table.entries.reserve(static_cast<std::size_t>(count));
    DiscriminatorEngine engine;
    for (std::int64_t n = 1; n <= count; ++n)
        table.entries.push_back({n, engine.push(eval(q, n - 1))});
    return table;
}

DiscriminatorTable discriminator_table(std::vector<wide_int> values) {
    require(!values.empty(), "table needs at least one term");
    DiscriminatorEngine engine;
    std::vector<TableEntry> entries;
    entries.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        entries.push_back({static_cast<std::int64_t>(k + 1), engine.push(values[k])});
    return {std::move(values), std::move(entries), TableMethod::incremental};
}

DiscriminatorTable oracle_table(const QuadSeq& q, std::int64_t count) {
    require(count >= 1 && count <= kIndexLimit, "table length must lie in [1, 2^31]");
    DiscriminatorTable table{q, {}, TableMethod::oracle};
    const Terms all = Terms::prefix(q, count);
    for (std::int64_t n = 1; n <= count; ++n) {
        auto head = all.values().first(static_cast<std::size_t>(n));
        Terms prefix(std::vector<wide_int>(head.begin(), head.end()));
        table.entries.push_back({n, discriminator_oracle(prefix)});
    }
    return table;
}

std::string IndexBound::describe() const {
    return std::string(inclusive ? "j<=" : "j<") + std::to_string(limit);
}

bool verify(const QuadSeq& q, const PairWitness& w) {
    if (w.m < 1 || w.i < 0 || w.i >= w.j || !w.bound.admits(w.j)) return false;
    if (w.j >= kIndexLimit) return false;
    const wide_int diff = checked_sub(eval(q, w.j), eval(q, w.i));
    return diff % w.m == 0;
}

std::optional<PairWitness> failure_witness(const QuadSeq& q, std::int64_t n, std::int64_t m) {
    require(n >= 2, "failure_witness needs n >= 2");
    require(m >= 1, "modulus must be positive");
    ResidueSet set;
    set.reset(static_cast<std::uint64_t>(m));
    for (std::int64_t j = 0; j < n; ++j) {
        const auto owner = set.insert(static_cast<std::uint64_t>(mod(eval(q, j), m)),
                                      static_cast<std::uint32_t>(j));
        if (owner) return PairWitness{m, static_cast<std::int64_t>(*owner), j, {n, false}};
    }
    return std::nullopt;
}

PowerComparison compare_with_prime_power(const QuadSeq& q, std::int64_t p, std::int64_t horizon) {
    require(horizon >= 1 && horizon <= kIndexLimit, "horizon must lie in [1, 2^31]");
    require(p >= 2, "base must be >= 2");
    DiscriminatorEngine engine;
    for (std::int64_t n = 1; n <= horizon; ++n) {
        std::int64_t d;
        try {
            d = engine.push(eval(q, n - 1));
        } catch (const DuplicateTerm& dup) {
            PowerComparison out{PowerComparison::Status::duplicate, horizon};
            out.n = dup.second();
            out.duplicate_of = dup.first();
            return out;
        }
        const std::int64_t target = ceil_power(p, n);
        if (d != target) {
            PowerComparison out{PowerComparison::Status::diverges, horizon};
            out.n = n;
            out.d = d;
            out.target = target;
            return out;
        }
    }
    return {PowerComparison::Status::matches, horizon};
}

} // namespace disclab
