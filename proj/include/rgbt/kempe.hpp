#pragma once

#include "rgbt/dual.hpp"
#include "rgbt/region.hpp"
#include "rgbt/templates.hpp"
#include "rgbt/tiling.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rgbt {

enum class DiamondClass : std::uint8_t { TypeA, TypeB2, TypeB3, TypeC };

std::string diamond_class_name(DiamondClass k);

/// Abandoned edge e = uv with apexes x, y. Quad edges run u-x, x-v, v-y, y-u.
struct DiamondType {
    EdgeId edge = kNoEdge;
    Vertex u = -1, v = -1, x = -1, y = -1;
    std::array<EdgeId, 4> quad_edges{};
    std::array<Color, 4> quad{};
    DiamondClass kind = DiamondClass::TypeB3;
    std::vector<Color> chains;        // colors c for which e := c leaves one c per diamond triangle
    std::optional<Color> completion;  // TypeC only
};

/// Throws OperationError when e is not abandoned or lies on an outer facet.
/// Chain claims are re-checked on the single(c) view; a failed check throws
/// EngineError.
DiamondType classify_diamond(const Tiling& t, EdgeId e);

/// Single(c) view of a partial tiling with e set to c. Other abandoned edges
/// become black.
Tiling chain_view(const Tiling& t, EdgeId e, Color c);

/// Tries the single-color views of an rgb (or abandoned-free partial) tiling
/// in r, g, b order and returns the first verified proper 4-coloring.
std::optional<FourColoring> coloring_from_tiling(const Tiling& t);

/// Candidate chain between two border portals. Constraints on the same
/// abandoned edge and color form one group; a group holds when any member
/// does.
struct KempeConstraint {
    Color color = Color::red;
    EdgeId source = kNoEdge;          // the abandoned edge
    Vertex from = -1, to = -1;        // portals on omega, from < to
    int group = 0;
    bool verified = false;            // from, to are c-connected in sigma'
    std::vector<Vertex> witness;      // that path
};

struct ChainGroup {
    EdgeId source = kNoEdge;
    Color color = Color::red;
    bool internal = false;            // endpoints c-connected inside sigma already
    bool satisfied = false;
    bool refutable = false;           // e := c leaves no c odd cycle (single abandoned edge only)
    std::vector<int> members;
};

struct ChainReport {
    std::vector<DiamondType> diamonds;
    std::vector<KempeConstraint> constraints;
    std::vector<ChainGroup> groups;
    std::optional<FourColoring> escape;   // from a refutable chain or a TypeC completion
};

ChainReport chain_constraints(const Tiling& t, const RegionSpec& region);

enum class Crossing : std::uint8_t { normal, generalized };

/// Closed dual walk of color c. Normal crossings swap the two non-c colors,
/// generalized crossings toggle c and abandoned.
struct GeneralizedRing {
    Color color = Color::red;
    DualWalk walk;
    std::vector<Crossing> crossings;   // per link

    std::vector<EdgeId> generalized_edges() const;
};

struct RingQuery {
    Color color = Color::red;
    EdgeId exit = kNoEdge;             // must be crossed; also the first link
    EdgeId through = kNoEdge;          // must be crossed
    std::optional<std::set<EdgeId>> permit;  // default_permit when empty
    bool inside_sigma = false;         // only inner sigma edges
    int max_length = 80;
    std::size_t limit = 64;
};

/// Abandoned edges plus c edges incident to td.
std::set<EdgeId> default_permit(const Tiling& t, const RegionSpec& region, Color c);

/// Throws InputError when a permitted edge lies outside sigma or is neither c
/// nor abandoned.
std::optional<GeneralizedRing> find_generalized_ring(const Tiling& t, const RegionSpec& region, Color c,
                                                     EdgeId exit, const std::set<EdgeId>& permit);
std::vector<GeneralizedRing> enumerate_generalized_rings(const Tiling& t, const RegionSpec& region,
                                                         const RingQuery& q);

/// Throws OperationError for a stale ring and EngineError when the result
/// fails partial-mode validation.
Tiling ecs_generalized(const Tiling& t, const GeneralizedRing& ring);

struct State {
    Tiling tiling;
    std::vector<EdgeId> abandoned;
    std::vector<Color> omega_colors;   // Co(omega), in omega order
    std::string label;
    std::string key;                   // synonym-canonical tiling key
};

State make_state(const Tiling& t, const RegionSpec& region, std::string label = {});

/// Co(omega) up to synonyms plus the satisfied chain groups, in a canonical
/// color naming. Equal signatures mean equivalent states.
std::string equivalence_signature(const Tiling& t, const RegionSpec& region);
bool equivalent(const Tiling& a, const Tiling& b, const RegionSpec& region);
/// Two rings are conjugate when their ECS results are equivalent.
bool conjugate(const Tiling& t, const GeneralizedRing& a, const GeneralizedRing& b, const RegionSpec& region);
/// Rings whose ECS changes the satisfied chain groups.
bool is_major(const Tiling& t, const GeneralizedRing& r, const RegionSpec& region);

struct SigmaAdjustment {
    Tiling tiling;
    std::optional<GeneralizedRing> ring;          // method 1
    std::vector<EdgeId> abandoned;                // method 2: edges left uncolored
    bool omega_unchanged = true;
    std::optional<std::vector<Vertex>> odd_cycle; // in the adjusted color
    ChainReport chains;
};

/// Method 1: ECS on the first color-c ring lying wholly inside sigma. Throws
/// OperationError when none exists.
SigmaAdjustment sigma_adjust_ring(const Tiling& t, const RegionSpec& region, Color c);

/// Method 2: makes exactly `c_edges` the c-colored inner edges of sigma,
/// keeps Co(omega) and sigma', and 2-colors the rest of sigma, abandoning a
/// smallest set of inner edges (at most `max_abandoned`) when that fails.
/// Throws OperationError when a sigma triangle would not hold exactly one c
/// edge, when an assigned edge is not inner, or when no abandoned set works.
SigmaAdjustment sigma_adjust_retile(const Tiling& t, const RegionSpec& region, Color c,
                                    const std::vector<EdgeId>& c_edges, int max_abandoned = 3);

enum class RotationOutcome : std::uint8_t { closed, escaped, no_ring, open };

std::string rotation_outcome_name(RotationOutcome o);

struct RotationRun {
    std::vector<State> states;           // S0 first
    std::vector<GeneralizedRing> rings;  // ring used for each step
    std::vector<Color> schedule;
    RotationOutcome outcome = RotationOutcome::closed;
    std::optional<FourColoring> coloring; // verified, when escaped
    std::string note;
};

/// Supported kinds: Ptg (td one vertex, five border vertices, abandoned edge
/// a spoke) and TD55 (td two vertices, six border vertices, abandoned edge
/// ab). An empty schedule means the default alternating one: 5 steps for
/// Ptg, 10 for TD55, starting with the smaller chain color. Throws
/// OperationError for other kinds or when the start is not TypeA.
RotationRun rotate_td(const Tiling& t, const RegionSpec& region, Template kind,
                      std::optional<std::vector<Color>> schedule = std::nullopt);

std::vector<Color> default_schedule(const Tiling& t, Template kind);

enum class Move : std::uint8_t { canal_ecs, generalized_ecs, sigma_adjust };

struct ExploreEdge {
    int from = 0, to = 0;
    std::string move;
};

struct StateGraph {
    std::vector<State> states;
    std::vector<ExploreEdge> edges;
    std::vector<int> component;          // per state
    int components = 0;
    bool truncated = false;
};

StateGraph congruence_explore(const Tiling& t0, const RegionSpec& region, const std::set<Move>& moves,
                              std::size_t max_states = 2000);

} // namespace rgbt
