#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qgt/gf.hpp"

namespace qgt::pg {

struct PgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SpaceTooLarge : PgError { using PgError::PgError; };
struct SearchSpaceTooLarge : PgError { using PgError::PgError; };
struct NotAnArc : PgError { using PgError::PgError; };
struct NotAPlane : PgError { using PgError::PgError; };

/// PG(delta, q): points are canonical representatives of 1-dimensional
/// subspaces (first nonzero coordinate 1), lines are 2-dimensional
/// subspaces as sorted point-index sets.
class ProjectiveSpace {
public:
    ProjectiveSpace(int delta, const gf::Field& field);

    int delta() const { return delta_; }
    const gf::Field& field() const { return *field_; }
    int num_points() const { return static_cast<int>(points_.size()); }
    int num_lines() const { return static_cast<int>(lines_.size()); }
    const std::vector<std::vector<int>>& points() const { return points_; }
    const std::vector<std::vector<int>>& lines() const { return lines_; }

    /// Index of the line through two distinct points.
    int line_through(int p1, int p2) const;
    bool collinear(int p1, int p2, int p3) const;
    /// All lines through a given point.
    const std::vector<int>& lines_through(int p) const { return point_lines_[p]; }

private:
    int delta_;
    const gf::Field* field_;
    std::vector<std::vector<int>> points_;           // coordinate vectors
    std::vector<std::vector<int>> lines_;            // sorted point indices
    std::vector<std::vector<int>> pair_line_;        // point pair -> line index
    std::vector<std::vector<int>> point_lines_;
};

struct ArcCertificate {
    bool ok = false;
    std::vector<int> violation;  // first collinear triple / dependent quadruple
};

/// Planar case: no three collinear.  For delta = 3 this is the cap
/// condition; pass check_basis to additionally require every 4 points
/// linearly independent (the full arc condition).
ArcCertificate is_arc(const ProjectiveSpace& space, const std::vector<int>& set,
                      bool check_basis = false);

enum class SearchMode { exhaustive, greedy };

struct ArcSearchResult {
    std::vector<int> points;
    int size = 0;
    bool certified_maximum = false;
};

/// Maximum arc (delta = 2) or cap (delta = 3) search.  Exhaustive mode uses
/// lexicographic DFS with a collinearity-closure pruning table and returns
/// the lexicographically smallest maximum-size set.
ArcSearchResult arc_search(const ProjectiveSpace& space, SearchMode mode);

/// Number of tangent lines to the set at a member point.
int tangent_count(const ProjectiveSpace& space, const std::vector<int>& set, int point);

struct TangentProfile {
    std::vector<int> counts;  // per point of the set
    bool is_oval = false;      // exactly one tangent everywhere
    bool is_hyperoval = false; // no tangents anywhere
};
TangentProfile tangent_profile(const ProjectiveSpace& space, const std::vector<int>& set);

/// Bruck-Ryser exclusion: q = 1 or 2 (mod 4) and q not a sum of two squares.
bool bruck_ryser_excluded(int q);

/// Lines-by-points 0/1 incidence matrix (delta = 2 only).
std::vector<std::vector<int>> incidence_matrix(const ProjectiveSpace& space);

/// Row/column permutation equivalence of two 0/1 matrices, by backtracking
/// over row assignments with column-signature pruning.
bool permutation_equivalent(const std::vector<std::vector<int>>& a,
                            const std::vector<std::vector<int>>& b);

}  // namespace qgt::pg
