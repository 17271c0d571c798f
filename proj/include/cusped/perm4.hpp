#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cusped {

// A permutation of {0,1,2,3}, stored by its image tuple.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<uint8_t>(a), static_cast<uint8_t>(b), static_cast<uint8_t>(c), static_cast<uint8_t>(d)} {}

    constexpr int operator[](int i) const { return img_[i]; }

    constexpr int pre_image_of(int v) const {
        for (int i = 0; i < 4; ++i)
            if (img_[i] == v) return i;
        return -1;
    }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
        return r;
    }

    // (*this) after `other`: (a.then_after(b))[i] = a[b[i]].
    constexpr Perm4 compose(const Perm4& other) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[i] = img_[other.img_[i]];
        return r;
    }

    constexpr bool is_identity() const {
        return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3;
    }

    constexpr int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    constexpr bool valid() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (img_[i] > 3) return false;
            seen |= 1 << img_[i];
        }
        return seen == 0xF;
    }

    // Index in the lexicographic ordering of all 24 image tuples.
    int lex_index() const;
    static Perm4 from_lex_index(int idx);

    bool operator==(const Perm4&) const = default;
    auto operator<=>(const Perm4&) const = default;

    std::string str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

private:
    std::array<uint8_t, 4> img_;
};

inline Perm4 operator*(const Perm4& a, const Perm4& b) { return a.compose(b); }

// All 24 permutations in lexicographic order of image tuples.
const std::array<Perm4, 24>& all_perm4_lex();

// The transposition (a b).
Perm4 transposition(int a, int b);

}  // namespace cusped
