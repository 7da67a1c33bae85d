#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homnov/rational.hpp"

namespace homnov {

// Parity of a homogeneous vector: 0 = even, 1 = odd.  Addition is mod 2.
using Parity = int;

inline Parity parity_add(Parity a, Parity b) { return (a + b) & 1; }

// Sign picked up when two homogeneous symbols of these parities are swapped:
// -1 iff both are odd.
inline int koszul_sign(Parity a, Parity b) { return (a & b & 1) ? -1 : 1; }

// Z2-graded coordinate space.  The basis order is canonical: every even
// basis vector precedes every odd one.
class GradedSpace {
public:
    GradedSpace() = default;
    // Validates that all parities are 0/1 and in canonical order.
    explicit GradedSpace(std::vector<Parity> parities);

    std::size_t dim() const { return parities_.size(); }
    Parity parity(std::size_t i) const { return parities_[i]; }
    const std::vector<Parity>& parities() const { return parities_; }
    std::size_t even_dim() const { return even_dim_; }
    std::size_t odd_dim() const { return parities_.size() - even_dim_; }

    bool operator==(const GradedSpace&) const = default;

private:
    std::vector<Parity> parities_;
    std::size_t even_dim_ = 0;
};

// Coordinate vector over a fixed basis.
using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
void add_in_place(Vec& acc, const Vec& v);
void sub_in_place(Vec& acc, const Vec& v);
void add_scaled_in_place(Vec& acc, const Rat& c, const Vec& v);

// The parity of a nonzero homogeneous vector; parity 0 for the zero vector;
// nullopt when the support meets both parity blocks.
std::optional<Parity> homogeneous_parity(const GradedSpace& space, const Vec& v);

} // namespace homnov
