// lattice.hpp -- finite square / honeycomb clusters with sublattice structure,
// bond and loop catalogs, and gauge-field assignment (Landau gauge, staggered
// NNN flux, striped potential, boundary twists).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fluxed/util.hpp"

namespace fluxed {

enum class LatticeKind { Square, Honeycomb };
enum class Boundary { Open, Periodic };
enum class Sublattice { A, B };

// Bond classes double as theta-scheme classes. Square: Horizontal,
// VerticalAUp (bottom end on sublattice A), VerticalBUp. Honeycomb: E1..E3.
enum class BondClass { Horizontal, VerticalAUp, VerticalBUp, E1, E2, E3 };

struct SiteInfo {
    int index;
    double x, y;          // position in the plane
    Sublattice subl;
    int cx, cy;           // cell coordinates
};

struct Bond {
    int from, to;         // canonical construction direction; stored phase is for hop from->to
    BondClass cls;
    int wx, wy;           // image shift of `to` (in lattice periods) for the geometric segment
};

// Effective next-nearest-neighbor path: hop between i and j through the
// intervening site k, realized by the two NN bonds bond_ik and bond_jk.
// i == j is possible on doubled-bond tori and contributes a correlated
// density term.
struct NnnPath {
    int i, k, j;
    int bond_ik, bond_jk;
    bool vertical;        // both legs vertical-class (alpha carrier on the square lattice)
};

struct Triangle {
    // three-site NNN loop; sites listed in counterclockwise order, and each
    // leg resolved to a specific path record (leg t runs site[t] -> site[t+1])
    std::array<int, 3> sites;
    std::array<int, 3> path;        // NnnPath indices
    std::array<bool, 3> forward;    // leg runs path.j -> path.i? false: i -> j
    char orientation;               // '+' apex toward +x / hexagon-centered, '-' otherwise
    Sublattice subl;
};

struct LatticeSpec {
    LatticeKind kind;
    int Lx, Ly;                       // sites per axis (square) / unit cells (honeycomb)
    Boundary boundary_x, boundary_y;
    std::vector<SiteInfo> sites;
    std::vector<Bond> nn_bonds;
    std::vector<NnnPath> nnn_paths;
    std::vector<std::vector<int>> plaquettes;   // elementary NN loops (site lists, CCW)
    std::vector<Triangle> triangles;
    double ax1[2], ax2[2];            // lattice vectors spanning one period in x / y

    int nsites() const { return static_cast<int>(sites.size()); }
    bool is_A(int s) const { return sites[s].subl == Sublattice::A; }
    int num_A() const;
    int num_B() const;
};

enum class ThetaScheme { SquareRedBonds, HoneycombThreePhase };

struct GaugeParams {
    double phi = 0.0;      // background flux per plaquette (square) / per NNN triangle (honeycomb)
    double alpha = 0.0;    // staggered NNN flux (square only)
    double mu = 0.0;       // striped potential amplitude
    ThetaScheme theta_scheme = ThetaScheme::SquareRedBonds;
    double twist_x = 0.0, twist_y = 0.0;   // boundary twist phases
    bool flip_alpha = false;               // swap which triangle orientation gains +alpha
};

struct GaugeField {
    GaugeParams params;
    std::vector<double> B;          // per bond, hop from->to
    std::vector<double> theta;      // per bond drive phase
    std::vector<double> stripe_mu;  // per site
    std::vector<double> nnn_phase;  // per NnnPath: B_ij = B_ik + B_kj (+ alpha carrier), hop j->i
    bool flux_quantized = false;    // total flux an integer multiple of 2*pi
};

LatticeSpec build_lattice(LatticeKind kind, int Lx, int Ly, Boundary bx, Boundary by);

// Single vertical chain of `cells` unit cells (2*cells sites, A on even rungs).
// Used by the decoupled-chain oracle; build_lattice itself requires Lx,Ly >= 2.
LatticeSpec build_chain(int cells, Boundary by);

GaugeField assign_gauge(const LatticeSpec& spec, const GaugeParams& p);

enum class PhaseSource { NN, NNN };

// Oriented phase sum around the loop, folded to [0, 2*pi). NN source walks
// nearest-neighbor bonds; NNN source walks effective hops (the full directed
// effective phase: path B-field + pi/2 + sign of the sin(theta) factor + alpha).
double loop_flux(const LatticeSpec& spec, const GaugeField& g,
                 const std::vector<int>& loop, PhaseSource source);

// Flux of a cataloged triangle from its explicit path records (CCW).
double triangle_flux(const LatticeSpec& spec, const GaugeField& g, const Triangle& t);

// Directed phase for hopping bond.from -> bond.to (reverse = negated).
double bond_phase(const GaugeField& g, int bond_idx, bool forward);

// Directed effective phase of a path record for the hop j -> i (forward=true)
// including the bare pi/2, the sin-sign of the theta factor, and alpha.
// Throws if the path's sin(theta) factor vanishes (no effective hop).
double effective_phase(const LatticeSpec& spec, const GaugeField& g, int path_idx, bool forward);

// |sin(theta_jk - theta_ik)| == 0 -> the path carries no effective hop
bool path_active(const LatticeSpec& spec, const GaugeField& g, int path_idx);

std::string lattice_json(const LatticeSpec& spec, const GaugeParams& p);

}  // namespace fluxed
