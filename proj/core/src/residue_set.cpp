#include "disclab/residue_set.hpp"

#include <algorithm>

namespace disclab {

void ResidueSet::reset(std::uint64_t modulus) {
    modulus_ = modulus;
    dense_ = modulus <= kDenseLimit;
    if (!dense_) {
        sparse_.clear();
        return;
    }
    if (stamp_.size() < modulus) {
        stamp_.resize(modulus, 0);
        owner_.resize(modulus, 0);
    }
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
}

std::optional<std::uint32_t> ResidueSet::insert(std::uint64_t residue, std::uint32_t index) {
    if (!dense_) {
        auto [it, inserted] = sparse_.try_emplace(residue, index);
        if (inserted) return std::nullopt;
        return it->second;
    }
    if (stamp_[residue] == epoch_) return owner_[residue];
    stamp_[residue] = epoch_;
    owner_[residue] = index;
    return std::nullopt;
}

} // namespace disclab
