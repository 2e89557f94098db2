#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hatg {

/// Unsigned big integer over base-1e9 limbs. Just enough arithmetic for
/// exact counting and decimal rendering of quantities like refused family
/// sizes; not a general bignum.
class BigUint {
public:
    BigUint() : limbs_{0} {}

    BigUint(std::uint64_t v) { // NOLINT: implicit by design
        limbs_.clear();
        do {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        } while (v != 0);
    }

    static BigUint pow(std::uint64_t base, std::uint64_t exp) {
        BigUint r{1};
        BigUint b{base};
        while (exp > 0) {
            if (exp & 1) r = r * b;
            b = b * b;
            exp >>= 1;
        }
        return r;
    }

    BigUint operator*(const BigUint& o) const {
        std::vector<std::uint64_t> acc(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                const std::uint64_t cur =
                    acc[i + j] + carry +
                    static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
                acc[i + j] = cur % kBase;
                carry = cur / kBase;
            }
            std::size_t k = i + o.limbs_.size();
            while (carry != 0) {
                const std::uint64_t cur = acc[k] + carry;
                acc[k] = cur % kBase;
                carry = cur / kBase;
                ++k;
            }
        }
        BigUint r;
        r.limbs_.assign(acc.begin(), acc.end());
        r.trim();
        return r;
    }

    BigUint operator+(const BigUint& o) const {
        BigUint r;
        r.limbs_.assign(std::max(limbs_.size(), o.limbs_.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < limbs_.size()) cur += limbs_[i];
            if (i < o.limbs_.size()) cur += o.limbs_[i];
            r.limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        r.trim();
        return r;
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }

    bool operator<(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
        }
        return false;
    }
    bool operator<=(const BigUint& o) const { return !(o < *this); }
    bool operator>(const BigUint& o) const { return o < *this; }
    bool operator>=(const BigUint& o) const { return !(*this < o); }

    bool fits_u64() const {
        return *this <= BigUint{UINT64_MAX};
    }

    std::uint64_t to_u64() const {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return v;
    }

    std::string to_string() const {
        std::string s = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr std::uint64_t kBase = 1000000000ULL;

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

} // namespace hatg
