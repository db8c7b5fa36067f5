#pragma once

#include "rgbt/kempe.hpp"
#include "rgbt/region.hpp"
#include "rgbt/tiling.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace rgbt {

enum class SymmetryKind : std::uint8_t { none, cyclic, dihedral, klein4 };

std::string symmetry_name(SymmetryKind k);
SymmetryKind parse_symmetry(const std::string& s);  // throws InputError

using PositionMap = std::vector<int>;  // position i goes to map[i]

/// Permutations of n cycle positions. klein4 is {id, i -> -i, i -> n/2 - i,
/// i -> i + n/2} and needs an even n. Throws InputError for n < 3.
std::vector<PositionMap> symmetry_group(int n, SymmetryKind k);

/// Equal-parity test on a boundary word.
bool equal_parity_word(const std::vector<Color>& word);

/// Per color, whether its two occurrences are adjacent; sorted so N comes
/// first ("NNY"). Empty unless every color occurs exactly twice.
std::string adjacency_signature(const std::vector<Color>& word);

struct BoundaryClass {
    std::string representative;          // smallest word in the orbit
    std::array<int, 3> counts{};         // sorted ascending
    std::string signature;               // adjacency signature, (2,2,2) only
    std::vector<std::string> members;
};

struct BoundaryEnumeration {
    int n = 0;
    SymmetryKind symmetry = SymmetryKind::none;
    std::map<std::array<int, 3>, int> raw_counts;   // equal-parity words by sorted counts
    std::vector<BoundaryClass> classes;
};

/// Orbits of equal-parity words under color synonyms times `sym`.
BoundaryEnumeration enumerate_boundary_classes(int n, SymmetryKind sym);

/// Canonical word under synonyms times the given position maps.
std::string canonical_word(const std::vector<Color>& word, const std::vector<PositionMap>& group);

enum class Provenance : std::uint8_t { primary, four, secondary, tertiary };

std::string provenance_name(Provenance p);
Provenance parse_provenance(const std::string& s);  // primary | 4 | secondary | tertiary

struct AtlasEntry {
    std::string boundary;                 // canonical boundary word
    std::array<int, 3> counts{};
    std::string signature;
    std::vector<std::string> abandoned;   // local names, e.g. "t0-t1", "o2-t0"
    std::vector<std::string> kinds;       // diamond class per abandoned edge
    std::string interior;                 // inner sigma colors in canonical order
    std::vector<std::string> constraints; // verified chains, e.g. "r:o1-o4"
    Provenance provenance = Provenance::primary;
    std::string key;
    std::string label;
    std::vector<std::string> derivation;  // primary label, then one step per move
    std::vector<Color> witness;           // colors of one realizing tiling on the host
};

struct AtlasOptions {
    Provenance provenance = Provenance::primary;
    SymmetryKind symmetry = SymmetryKind::dihedral;
    std::size_t max_tilings = 200000;     // per enumeration
    std::size_t max_states = 4000;        // ECS closure for secondary and tertiary
    int max_abandoned = 2;                // tertiary subsets
};

struct Atlas {
    int omega_size = 0;
    int td_size = 0;
    SymmetryKind symmetry = SymmetryKind::none;
    std::vector<PositionMap> group;       // position maps that extend to sigma
    Provenance provenance = Provenance::primary;
    std::vector<AtlasEntry> entries;
    std::size_t uncertified = 0;          // tertiary tilings with no derivation
};

/// Throws InputError for an empty sigma and OperationError when a cap is
/// exceeded.
Atlas build_atlas(const Embedding& host, const RegionSpec& region, const AtlasOptions& opt);

/// Names known catalog shapes: T_alpha and T_beta on a TD55 region.
std::string catalog_label(const AtlasEntry& e, int omega_size, int td_size);

struct AtlasMatch {
    int a = 0, b = 0;
};

struct AtlasIntersection {
    std::vector<AtlasMatch> boundary;     // level 1
    std::vector<AtlasMatch> full;         // level 2
};

/// Throws InputError when the atlases come from different region shapes or
/// symmetry.
AtlasIntersection intersect_atlases(const Atlas& a, const Atlas& b);

std::string render_atlas_table(const Atlas& a);
std::string render_atlas_dot(const Atlas& a);

} // namespace rgbt
