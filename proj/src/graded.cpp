#include "homnov/graded.hpp"

#include "homnov/errors.hpp"

namespace homnov {

GradedSpace::GradedSpace(std::vector<Parity> parities)
    : parities_(std::move(parities)) {
    bool seen_odd = false;
    for (std::size_t i = 0; i < parities_.size(); ++i) {
        Parity p = parities_[i];
        if (p != 0 && p != 1)
            throw InputError("parity[" + std::to_string(i) +
                             "]: must be 0 or 1");
        if (p == 0) {
            if (seen_odd)
                throw InputError(
                    "parity[" + std::to_string(i) +
                    "]: basis is not in canonical order; reorder the basis so "
                    "that all even (parity 0) vectors come before all odd "
                    "(parity 1) vectors");
            ++even_dim_;
        } else {
            seen_odd = true;
        }
    }
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

bool is_zero(const Vec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    add_in_place(r, b);
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    sub_in_place(r, b);
    return r;
}

Vec scale(const Rat& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void add_in_place(Vec& acc, const Vec& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

void sub_in_place(Vec& acc, const Vec& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= v[i];
}

void add_scaled_in_place(Vec& acc, const Rat& c, const Vec& v) {
    if (c == 0) return;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

std::optional<Parity> homogeneous_parity(const GradedSpace& space,
                                         const Vec& v) {
    bool even = false, odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        (space.parity(i) == 0 ? even : odd) = true;
    }
    if (even && odd) return std::nullopt;
    return odd ? 1 : 0;
}

} // namespace homnov
