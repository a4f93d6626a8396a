#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sparsecurves/fraction.hpp"

namespace sparsecurves {

/// One of the four disjoint arcs crossing a twice-holed torus piece.
class ArcId {
public:
    static constexpr int kCount = 4;

    explicit ArcId(int value);

    [[nodiscard]] int value() const { return value_; }
    friend auto operator<=>(const ArcId&, const ArcId&) = default;

private:
    std::uint8_t value_;
};

struct NecklacePiece {
    std::uint64_t index;
};

/// Annulus i glues the right boundary of piece `from` to the left boundary of piece `to`.
struct NecklaceAnnulus {
    std::uint64_t index;
    std::uint64_t from;
    std::uint64_t to;
};

/// Closed genus-h surface made of h-1 twice-holed tori joined in a cycle by h-1 annuli.
class NecklaceSurface {
public:
    [[nodiscard]] std::uint64_t genus() const { return genus_; }
    [[nodiscard]] std::uint64_t piece_count() const { return pieces_.size(); }
    [[nodiscard]] const std::vector<NecklacePiece>& pieces() const { return pieces_; }
    [[nodiscard]] const std::vector<NecklaceAnnulus>& annuli() const { return annuli_; }

    /// Piece reached from piece i through annulus i.
    [[nodiscard]] std::uint64_t next_piece(std::uint64_t i) const { return annuli_[i].to; }

    /// Sum over pieces (-2 each) and annuli (0 each).
    [[nodiscard]] std::int64_t euler_characteristic() const;
    [[nodiscard]] std::uint64_t genus_from_euler() const;
    /// True when following annuli from piece 0 visits every piece once and returns.
    [[nodiscard]] bool is_single_cycle() const;

    friend NecklaceSurface build_necklace(std::uint64_t h);

private:
    std::uint64_t genus_ = 0;
    std::vector<NecklacePiece> pieces_;
    std::vector<NecklaceAnnulus> annuli_;
};

/// Throws DomainError for h < 2.
NecklaceSurface build_necklace(std::uint64_t h);

/// Genus-g surface seen as hPrime necklaces of genus h attached to a base of genus baseGenus.
struct CompositeSurface {
    std::uint64_t g = 0;
    Fraction alpha;
    std::uint64_t h = 0;
    std::uint64_t hPrime = 0;
    std::uint64_t baseGenus = 0;

    [[nodiscard]] std::uint64_t piece_count() const { return h - 1; }
    friend bool operator==(const CompositeSurface&, const CompositeSurface&) = default;
};

/// Exact test of g >= 4^(2/(1+alpha)), i.e. g^(1+alpha) >= 16.
bool genus_admissible(std::uint64_t g, const Fraction& alpha);

/// Smallest admissible genus for alpha (may exceed 64 bits for alpha close to -1).
mpz_class minimal_admissible_genus(const Fraction& alpha);

/// Throws DomainError for alpha outside (-1, 1] or g below the admissible threshold.
void check_domain(std::uint64_t g, const Fraction& alpha);

/// h = floor(g^((1+alpha)/2) / 2), hPrime = floor(2 g^((1-alpha)/2)).
CompositeSurface plan_composite(std::uint64_t g, const Fraction& alpha);

}  // namespace sparsecurves
