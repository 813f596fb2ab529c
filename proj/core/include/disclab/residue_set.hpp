#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace disclab {

/// Set of residues modulo m, each tagged with the index of the term that
/// occupies it. Small moduli use an epoch-stamped dense table so reset() is
/// O(1); moduli above kDenseLimit fall back to a hash map.
class ResidueSet {
public:
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

    void reset(std::uint64_t modulus);

    /// Inserts residue -> index. If the residue is already taken, leaves the
    /// set unchanged and returns the occupying index.
    std::optional<std::uint32_t> insert(std::uint64_t residue, std::uint32_t index);

    std::uint64_t modulus() const noexcept { return modulus_; }

private:
    std::uint64_t modulus_ = 0;
    bool dense_ = true;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> owner_;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

} // namespace disclab
