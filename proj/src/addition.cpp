#include "blockdim/addition.hpp"

#include "blockdim/entropy.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace blockdim {
namespace {

struct FullAddition {
    Word sum;
    std::vector<std::uint8_t> carry_in;  // carry entering position i
    int overflow;
};

// Grade-school addition from the rightmost position, carry-in 0 at the
// truncation boundary.
FullAddition add_full(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("addition needs equal-length prefixes");
    const std::size_t n = u.size();
    FullAddition out;
    out.carry_in.assign(n, 0);
    std::vector<std::uint8_t> digits(n, 0);
    int carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        out.carry_in[i] = static_cast<std::uint8_t>(carry);
        const int s = u[i] + v[i] + carry;
        digits[i] = static_cast<std::uint8_t>(s & 1);
        carry = s >> 1;
    }
    out.overflow = carry;
    for (std::size_t i = 0; i < n; ++i) out.sum.push_back(digits[i]);
    return out;
}

double entropy_of_groups(const std::map<std::uint64_t, std::uint64_t>& groups,
                         std::uint64_t total) {
    const double t = static_cast<double>(total);
    double acc = 0.0;
    for (const auto& [key, cnt] : groups) {
        const double p = static_cast<double>(cnt) / t;
        acc -= p * std::log2(p);
    }
    return acc;
}

}  // namespace

SumResult add_prefixes(const Word& u, const Word& v) {
    auto full = add_full(u, v);
    SumResult r;
    r.overflow = full.overflow;
    std::size_t span = 0;
    for (std::size_t i = full.sum.size(); i-- > 0 && full.sum[i] == 1;) ++span;
    r.carry_uncertainty_span = span;
    r.sum = std::move(full.sum);
    return r;
}

CarryJointDistribution::CarryJointDistribution(unsigned ell, std::size_t n)
    : ell_(ell), n_(n) {
    if (ell < 1 || ell > kMaxEll)
        throw std::invalid_argument("carry joint needs 1 <= ell <= 20");
}

void CarryJointDistribution::record(std::uint64_t z, std::uint64_t x,
                                    std::uint64_t y, unsigned carry) {
    const unsigned width = ell_ + 1;
    const std::uint64_t key = z | (x << width) | (y << (2 * width)) |
                              (static_cast<std::uint64_t>(carry) << (3 * width));
    ++counts_[key];
    ++total_;
}

std::vector<CarryJointDistribution::Entry> CarryJointDistribution::entries() const {
    const unsigned width = ell_ + 1;
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    std::map<std::uint64_t, std::uint64_t> ordered(counts_.begin(), counts_.end());
    std::vector<Entry> out;
    out.reserve(ordered.size());
    for (const auto& [key, cnt] : ordered)
        out.push_back({key & mask, (key >> width) & mask, (key >> (2 * width)) & mask,
                       static_cast<unsigned>(key >> (3 * width)), cnt});
    return out;
}

template <class KeyOf>
double CarryJointDistribution::entropy_by(KeyOf&& key) const {
    const unsigned width = ell_ + 1;
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    std::map<std::uint64_t, std::uint64_t> groups;
    for (const auto& [packed, cnt] : counts_) {
        const std::uint64_t z = packed & mask;
        const std::uint64_t x = (packed >> width) & mask;
        const std::uint64_t y = (packed >> (2 * width)) & mask;
        const std::uint64_t d = packed >> (3 * width);
        groups[key(z, x, y, d)] += cnt;
    }
    return entropy_of_groups(groups, total_);
}

double CarryJointDistribution::entropy_sum_blocks() const {
    return entropy_by([](std::uint64_t z, std::uint64_t, std::uint64_t,
                         std::uint64_t) { return z; });
}

double CarryJointDistribution::entropy_x_blocks() const {
    return entropy_by([](std::uint64_t, std::uint64_t x, std::uint64_t,
                         std::uint64_t) { return x; });
}

double CarryJointDistribution::entropy_y_blocks() const {
    return entropy_by([](std::uint64_t, std::uint64_t, std::uint64_t y,
                         std::uint64_t) { return y; });
}

double CarryJointDistribution::entropy_carry() const {
    return entropy_by([](std::uint64_t, std::uint64_t, std::uint64_t,
                         std::uint64_t d) { return d; });
}

double CarryJointDistribution::entropy_all() const {
    const unsigned width = ell_ + 1;
    return entropy_by([width](std::uint64_t z, std::uint64_t x, std::uint64_t y,
                              std::uint64_t d) {
        return z | (x << width) | (y << (2 * width)) | (d << (3 * width));
    });
}

double CarryJointDistribution::entropy_inputs_carry() const {
    const unsigned width = ell_ + 1;
    return entropy_by([width](std::uint64_t, std::uint64_t x, std::uint64_t y,
                              std::uint64_t d) {
        return x | (y << width) | (d << (2 * width));
    });
}

BlockCounts CarryJointDistribution::sum_block_marginal() const {
    BlockCounts out(ell_ + 1);
    for (const auto& e : entries()) out.add(e.z, e.count);
    return out;
}

BlockCounts CarryJointDistribution::x_block_marginal() const {
    BlockCounts out(ell_ + 1);
    for (const auto& e : entries()) out.add(e.x, e.count);
    return out;
}

BlockCounts CarryJointDistribution::y_block_marginal() const {
    BlockCounts out(ell_ + 1);
    for (const auto& e : entries()) out.add(e.y, e.count);
    return out;
}

CarryJointDistribution carry_joint(const Word& x, const Word& y, unsigned ell) {
    if (x.size() != y.size())
        throw std::invalid_argument("addition needs equal-length prefixes");
    const std::size_t n = x.size();
    if (n < static_cast<std::size_t>(ell) + 1)
        throw std::invalid_argument("need ell+1 <= prefix length");

    const auto full = add_full(x, y);
    const Word& z = full.sum;
    const unsigned width = ell + 1;

    CarryJointDistribution joint(ell, n);
    std::uint64_t zc = z.window(0, width);
    std::uint64_t xc = x.window(0, width);
    std::uint64_t yc = y.window(0, width);
    joint.record(zc, xc, yc, full.carry_in[ell]);
    for (std::size_t i = 1; i + ell < n; ++i) {
        const unsigned top = width - 1;
        zc = (zc >> 1) | (static_cast<std::uint64_t>(z[i + top]) << top);
        xc = (xc >> 1) | (static_cast<std::uint64_t>(x[i + top]) << top);
        yc = (yc >> 1) | (static_cast<std::uint64_t>(y[i + top]) << top);
        joint.record(zc, xc, yc, full.carry_in[i + ell]);
    }
    return joint;
}

std::vector<SubadditivityRow> subadditivity_report(const Word& x, const Word& y,
                                                   const std::vector<unsigned>& ells) {
    if (x.size() != y.size())
        throw std::invalid_argument("addition needs equal-length prefixes");
    const auto full = add_full(x, y);
    const std::size_t n = x.size();

    std::vector<SubadditivityRow> rows;
    rows.reserve(ells.size());
    for (unsigned ell : ells) {
        if (n < static_cast<std::size_t>(ell) + 1)
            throw std::invalid_argument("need ell+1 <= prefix length");
        SubadditivityRow row;
        row.ell = ell;
        row.h_x = block_entropy_h(x, ell);
        row.h_y = block_entropy_h(y, ell);
        row.h_sum = block_entropy_h(full.sum, ell);
        row.slack = row.h_x + row.h_y - row.h_sum;
        std::uint64_t carry_ones = 0;
        for (std::size_t j = ell; j < n; ++j) carry_ones += full.carry_in[j];
        row.carry_rate =
            binary_entropy(static_cast<double>(carry_ones) / static_cast<double>(n - ell)) /
            (ell + 1);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace blockdim
