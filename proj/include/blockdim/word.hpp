#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace blockdim {

// A finite binary word, bit-packed 64 symbols per limb. Positions are
// 0-based; w[i] lives at bit (i % 64) of limb (i / 64). Unused high bits
// of the last limb are kept zero so equality is limb-wise.
class Word {
public:
    Word() = default;

    static Word from_string(std::string_view text);
    // ASCII stream of '0'/'1' with one optional trailing newline; any
    // other byte is rejected.
    static Word load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    std::string str() const;

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    int operator[](std::size_t i) const noexcept {
        return static_cast<int>((limbs_[i >> 6] >> (i & 63)) & 1u);
    }

    void push_back(int bit);
    void append(const Word& other);

    // [first, last), bounds-checked.
    Word slice(std::size_t first, std::size_t last) const;
    Word reversed() const;

    // Integer code of w[pos : pos+len), bit j = w[pos+j]. len <= 64.
    std::uint64_t window(std::size_t pos, unsigned len) const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.size_ == b.size_ && a.limbs_ == b.limbs_;
    }

private:
    std::vector<std::uint64_t> limbs_;
    std::size_t size_ = 0;
};

// Fixed-width block key: bijection between {0,1}^len and [0, 2^len) with
// bit j of the code equal to the symbol at position j. len <= 63.
std::uint64_t encode_block(const Word& u);
Word decode_block(std::uint64_t code, unsigned length);

}  // namespace blockdim
