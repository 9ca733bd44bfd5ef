// Copyright 2026 The rtdkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtdkit {

/// Fixed-length bit vector with 64-bit word storage.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparison and hashing are exact.
class BitVector
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;

    explicit BitVector(std::size_t size, bool value = false)
      : _size(size), _words(word_count(size), value ? ~Word{0} : Word{0})
    {
        trim();
    }

    /// Parses a string of '0'/'1' characters; index 0 is the first character.
    static BitVector from_string(std::string_view bits)
    {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                v.set(i);
            else if (bits[i] != '0')
                throw std::invalid_argument("bit string may only contain 0 and 1");
        }
        return v;
    }

    static BitVector ones(std::size_t size) { return BitVector(size, true); }

    std::size_t size() const noexcept { return _size; }

    bool test(std::size_t i) const
    {
        return (_words[i / word_bits] >> (i % word_bits)) & 1u;
    }

    bool operator[](std::size_t i) const { return test(i); }

    BitVector& set(std::size_t i, bool value = true)
    {
        Word mask = Word{1} << (i % word_bits);
        if (value)
            _words[i / word_bits] |= mask;
        else
            _words[i / word_bits] &= ~mask;
        return *this;
    }

    BitVector& reset(std::size_t i) { return set(i, false); }

    std::size_t count() const noexcept
    {
        std::size_t n = 0;
        for (Word w : _words)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool any() const noexcept
    {
        return std::any_of(_words.begin(), _words.end(),
                           [](Word w) { return w != 0; });
    }

    bool none() const noexcept { return !any(); }

    bool all() const noexcept { return count() == _size; }

    /// True iff `*this & other` has a set bit.
    bool intersects(const BitVector& other) const
    {
        std::size_t n = std::min(_words.size(), other._words.size());
        for (std::size_t i = 0; i < n; ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    /// Index of the highest set bit, if any.
    std::optional<std::size_t> highest() const noexcept
    {
        for (std::size_t i = _words.size(); i-- > 0;)
            if (_words[i])
                return i * word_bits + (word_bits - 1 -
                                        static_cast<std::size_t>(std::countl_zero(_words[i])));
        return std::nullopt;
    }

    /// Calls `f(index)` for every set bit in increasing order.
    template <class F>
    void for_each_set(F&& f) const
    {
        for (std::size_t wi = 0; wi < _words.size(); ++wi) {
            Word w = _words[wi];
            while (w) {
                std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
                f(wi * word_bits + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for_each_set([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    BitVector& operator^=(const BitVector& o)
    {
        check_same_size(o);
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] ^= o._words[i];
        return *this;
    }

    BitVector& operator&=(const BitVector& o)
    {
        check_same_size(o);
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= o._words[i];
        return *this;
    }

    BitVector& operator|=(const BitVector& o)
    {
        check_same_size(o);
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= o._words[i];
        return *this;
    }

    BitVector& flip()
    {
        for (Word& w : _words)
            w = ~w;
        trim();
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

    friend bool operator==(const BitVector& a, const BitVector& b) = default;

    std::string to_string() const
    {
        std::string s(_size, '0');
        for_each_set([&](std::size_t i) { s[i] = '1'; });
        return s;
    }

    std::size_t hash() const noexcept
    {
        std::size_t h = std::hash<std::size_t>{}(_size);
        for (Word w : _words)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    const std::vector<Word>& words() const noexcept { return _words; }

private:
    static std::size_t word_count(std::size_t bits)
    {
        return (bits + word_bits - 1) / word_bits;
    }

    void trim()
    {
        if (_size % word_bits && !_words.empty())
            _words.back() &= (Word{1} << (_size % word_bits)) - 1;
    }

    void check_same_size(const BitVector& o) const
    {
        if (o._size != _size)
            throw std::invalid_argument("bit vector size mismatch");
    }

    std::size_t _size = 0;
    std::vector<Word> _words;
};

struct BitVectorHash
{
    std::size_t operator()(const BitVector& v) const noexcept { return v.hash(); }
};

} // namespace rtdkit
