#pragma once

#include "blockdim/block_counts.hpp"
#include "blockdim/word.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace blockdim {

// Binary sum of two equal-length prefixes read as fixed-point fractions
// 0.b0 b1 b2 ...; carry-in at the truncation boundary is 0 and overflow out
// of position 0 is reported, so the sum stays in the same sample space.
// The trailing run of 1s marks every position an unseen carry from beyond
// the prefix could still flip.
struct SumResult {
    Word sum;
    int overflow = 0;
    std::size_t carry_uncertainty_span = 0;
};

SumResult add_prefixes(const Word& u, const Word& v);

// Joint law over sliding windows of (sum block, x block, y block, carry
// into the window's low end). The sum block is determined by the other
// three, which the entropy identities below exploit. ell <= 20 so a tuple
// packs into 64 bits.
class CarryJointDistribution {
public:
    static constexpr unsigned kMaxEll = 20;

    CarryJointDistribution(unsigned ell, std::size_t n);

    unsigned ell() const noexcept { return ell_; }
    std::size_t prefix_length() const noexcept { return n_; }
    std::uint64_t window_total() const noexcept { return total_; }

    void record(std::uint64_t z, std::uint64_t x, std::uint64_t y, unsigned carry);

    struct Entry {
        std::uint64_t z, x, y;
        unsigned carry;
        std::uint64_t count;
    };
    std::vector<Entry> entries() const;  // deterministic order

    double entropy_sum_blocks() const;    // H(Z)
    double entropy_x_blocks() const;      // H(X)
    double entropy_y_blocks() const;      // H(Y)
    double entropy_carry() const;         // H(C)
    double entropy_all() const;           // H(Z, X, Y, C)
    double entropy_inputs_carry() const;  // H(X, Y, C)

    // Marginal over the sum blocks; equals block_counts of the sum prefix.
    BlockCounts sum_block_marginal() const;
    BlockCounts x_block_marginal() const;
    BlockCounts y_block_marginal() const;

private:
    unsigned ell_;
    std::size_t n_;
    std::uint64_t total_ = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;  // packed key

    template <class KeyOf>
    double entropy_by(KeyOf&& key) const;
};

// Scans all n-ell windows of the full-prefix addition x+y.
CarryJointDistribution carry_joint(const Word& x, const Word& y, unsigned ell);

struct SubadditivityRow {
    unsigned ell = 0;
    double h_x = 0;
    double h_y = 0;
    double h_sum = 0;
    double slack = 0;       // h_x + h_y - h_sum
    double carry_rate = 0;  // H(C) / (ell+1)
};

std::vector<SubadditivityRow> subadditivity_report(const Word& x, const Word& y,
                                                   const std::vector<unsigned>& ells);

}  // namespace blockdim
