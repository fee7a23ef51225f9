// hilbert.hpp -- hard-core boson Fock bases within particle-number sectors.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fluxed/lattice.hpp"

namespace fluxed {

struct Sector {
    bool split = false;
    int N = 0;            // total-N sector
    int Na = 0, Nb = 0;   // split sector

    static Sector total(int n) { Sector s; s.split = false; s.N = n; return s; }
    static Sector split_ab(int na, int nb) { Sector s; s.split = true; s.Na = na; s.Nb = nb; return s; }
};

// Bit-encoded occupation states (bit i = site i), sorted ascending.
struct FockBasis {
    int nsites = 0;
    Sector sector;
    std::vector<std::uint64_t> states;

    std::int64_t dim() const { return static_cast<std::int64_t>(states.size()); }

    // exact inverse of enumeration; -1 if the mask is not in the sector
    std::int64_t index_of(std::uint64_t mask) const;

    bool occupied(std::int64_t ord, int site) const {
        return (states[ord] >> site) & 1ull;
    }
};

FockBasis build_basis(const LatticeSpec& spec, const Sector& sector);

// Standalone total-N basis over n sites (no lattice needed).
FockBasis build_basis_total(int nsites, int N);

// Hard-core hop a_to^dag a_from on basis state `ord`; amplitude 0 when the
// source is empty or the target occupied, otherwise 1 (bosons carry no sign).
struct HopResult {
    std::int64_t ordinal;
    int amplitude;   // 0 or 1
};
HopResult apply_hop(const FockBasis& basis, std::int64_t ord, int from_site, int to_site);

std::uint64_t binomial(int n, int k);

}  // namespace fluxed
