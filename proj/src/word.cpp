#include "blockdim/word.hpp"

#include <fstream>
#include <stdexcept>

namespace blockdim {

Word Word::from_string(std::string_view text) {
    Word w;
    w.limbs_.reserve(text.size() / 64 + 1);
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word: symbol outside {0,1}");
        w.push_back(c - '0');
    }
    return w;
}

Word Word::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (!data.empty() && data.back() == '\n') data.pop_back();
    for (char c : data)
        if (c != '0' && c != '1')
            throw std::runtime_error(path.string() + ": invalid byte in bit stream");
    return from_string(data);
}

void Word::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << str() << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string Word::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

void Word::push_back(int bit) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("word: symbol outside {0,1}");
    if ((size_ & 63) == 0) limbs_.push_back(0);
    limbs_.back() |= static_cast<std::uint64_t>(bit) << (size_ & 63);
    ++size_;
}

void Word::append(const Word& other) {
    for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

Word Word::slice(std::size_t first, std::size_t last) const {
    if (first > last || last > size_)
        throw std::out_of_range("word slice out of bounds");
    Word w;
    w.limbs_.reserve((last - first) / 64 + 1);
    std::size_t i = first;
    while (i < last) {
        unsigned len = static_cast<unsigned>(std::min<std::size_t>(64, last - i));
        std::uint64_t chunk = window(i, len);
        for (unsigned j = 0; j < len; ++j)
            w.push_back(static_cast<int>((chunk >> j) & 1u));
        i += len;
    }
    return w;
}

Word Word::reversed() const {
    Word w;
    w.limbs_.reserve(limbs_.size());
    for (std::size_t i = size_; i-- > 0;) w.push_back((*this)[i]);
    return w;
}

std::uint64_t Word::window(std::size_t pos, unsigned len) const {
    if (len > 64 || pos + len > size_)
        throw std::out_of_range("word window out of bounds");
    if (len == 0) return 0;
    const std::size_t limb = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t bits = limbs_[limb] >> off;
    if (off != 0 && off + len > 64) bits |= limbs_[limb + 1] << (64 - off);
    if (len == 64) return bits;
    return bits & ((std::uint64_t{1} << len) - 1);
}

std::uint64_t encode_block(const Word& u) {
    if (u.size() > 63) throw std::invalid_argument("block longer than 63 symbols");
    return u.empty() ? 0 : u.window(0, static_cast<unsigned>(u.size()));
}

Word decode_block(std::uint64_t code, unsigned length) {
    if (length > 63) throw std::invalid_argument("block longer than 63 symbols");
    if (length < 64 && (code >> length) != 0)
        throw std::invalid_argument("block code wider than stated length");
    Word u;
    for (unsigned j = 0; j < length; ++j)
        u.push_back(static_cast<int>((code >> j) & 1u));
    return u;
}

}  // namespace blockdim
