#include "qgt/pg.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qgt::pg {

namespace {

// rank of a list of coordinate vectors over the field
int rank_of(const gf::Field& f, std::vector<std::vector<int>> rows) {
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = f.inv(rows[rank][c]);
        for (int j = 0; j < cols; ++j) rows[rank][j] = f.mul(rows[rank][j], inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            int factor = rows[r][c];
            for (int j = 0; j < cols; ++j)
                rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

ProjectiveSpace::ProjectiveSpace(int delta, const gf::Field& field)
    : delta_(delta), field_(&field) {
    if (delta < 2 || delta > 3) throw PgError("only PG(2,q) and PG(3,q) are supported");
    const int q = field.q();
    double total = std::pow(static_cast<double>(q), delta + 1);
    if (total > static_cast<double>(1 << 20)) throw SpaceTooLarge("q^(delta+1) exceeds 2^20");

    const int dim = delta + 1;
    // canonical representatives: first nonzero coordinate is 1
    std::map<std::vector<int>, int> index_of;
    for (int lead = 0; lead < dim; ++lead) {
        std::vector<int> v(dim, 0);
        v[lead] = 1;
        // free coordinates after the leading one
        int free = dim - lead - 1;
        long long count = 1;
        for (int i = 0; i < free; ++i) count *= q;
        for (long long enc = 0; enc < count; ++enc) {
            std::vector<int> pt = v;
            long long e = enc;
            for (int i = lead + 1; i < dim; ++i) { pt[i] = static_cast<int>(e % q); e /= q; }
            index_of[pt] = static_cast<int>(points_.size());
            points_.push_back(pt);
        }
    }

    auto normalize = [&](std::vector<int> v) -> std::optional<int> {
        int lead = -1;
        for (int i = 0; i < dim; ++i)
            if (v[i] != 0) { lead = i; break; }
        if (lead < 0) return std::nullopt;
        int inv = field.inv(v[lead]);
        for (int i = 0; i < dim; ++i) v[i] = field.mul(v[i], inv);
        return index_of.at(v);
    };

    const int np = num_points();
    pair_line_.assign(np, std::vector<int>(np, -1));
    std::map<std::vector<int>, int> line_index;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            if (pair_line_[i][j] >= 0) continue;
            // span of points i and j
            std::vector<int> line{j};
            for (int t = 0; t < q; ++t) {
                std::vector<int> v(dim);
                for (int c = 0; c < dim; ++c)
                    v[c] = field.add(points_[i][c], field.mul(t, points_[j][c]));
                line.push_back(*normalize(v));
            }
            std::sort(line.begin(), line.end());
            line.erase(std::unique(line.begin(), line.end()), line.end());
            auto [it, inserted] = line_index.try_emplace(line, static_cast<int>(lines_.size()));
            if (inserted) lines_.push_back(line);
            int li = it->second;
            for (std::size_t a = 0; a < line.size(); ++a)
                for (std::size_t b = a + 1; b < line.size(); ++b)
                    pair_line_[line[a]][line[b]] = pair_line_[line[b]][line[a]] = li;
        }

    point_lines_.assign(np, {});
    for (int li = 0; li < num_lines(); ++li)
        for (int p : lines_[li]) point_lines_[p].push_back(li);
}

int ProjectiveSpace::line_through(int p1, int p2) const {
    if (p1 == p2) throw PgError("line_through needs distinct points");
    return pair_line_[p1][p2];
}

bool ProjectiveSpace::collinear(int p1, int p2, int p3) const {
    if (p1 == p2 || p1 == p3 || p2 == p3) return true;
    const auto& line = lines_[pair_line_[p1][p2]];
    return std::binary_search(line.begin(), line.end(), p3);
}

ArcCertificate is_arc(const ProjectiveSpace& space, const std::vector<int>& set,
                      bool check_basis) {
    ArcCertificate cert;
    const int n = static_cast<int>(set.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (space.collinear(set[i], set[j], set[k])) {
                    cert.violation = {set[i], set[j], set[k]};
                    return cert;
                }
    if (check_basis && space.delta() == 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        std::vector<std::vector<int>> rows{
                            space.points()[set[i]], space.points()[set[j]],
                            space.points()[set[k]], space.points()[set[l]]};
                        if (rank_of(space.field(), rows) < 4) {
                            cert.violation = {set[i], set[j], set[k], set[l]};
                            return cert;
                        }
                    }
    }
    cert.ok = true;
    return cert;
}

namespace {

struct DfsState {
    const ProjectiveSpace* space;
    std::vector<int> current;
    std::vector<int> excluded;  // exclusion depth marker, -1 = free
    std::vector<int> best;
};

void dfs(DfsState& st, int next) {
    const int np = st.space->num_points();
    if (static_cast<int>(st.current.size()) > static_cast<int>(st.best.size()))
        st.best = st.current;
    for (int p = next; p < np; ++p) {
        if (st.excluded[p] >= 0) continue;
        // bound: remaining free points cannot beat the best
        int avail = 0;
        for (int r = p; r < np; ++r) avail += st.excluded[r] < 0;
        if (static_cast<int>(st.current.size()) + avail <= static_cast<int>(st.best.size()))
            return;
        // exclude every point collinear with p and a current member
        const int depth = static_cast<int>(st.current.size());
        std::vector<int> marked;
        for (int s : st.current) {
            const auto& line = st.space->lines()[st.space->line_through(s, p)];
            for (int r : line)
                if (st.excluded[r] < 0 && r != p && r != s) {
                    st.excluded[r] = depth;
                    marked.push_back(r);
                }
        }
        st.current.push_back(p);
        dfs(st, p + 1);
        st.current.pop_back();
        for (int r : marked) st.excluded[r] = -1;
    }
}

}  // namespace

ArcSearchResult arc_search(const ProjectiveSpace& space, SearchMode mode) {
    ArcSearchResult res;
    if (mode == SearchMode::exhaustive) {
        if (space.num_points() > 21)
            throw SearchSpaceTooLarge("exhaustive search limited to 21 points");
        DfsState st;
        st.space = &space;
        st.excluded.assign(space.num_points(), -1);
        dfs(st, 0);
        res.points = st.best;
        res.certified_maximum = true;
    } else {
        std::vector<int> set;
        for (int p = 0; p < space.num_points(); ++p) {
            bool ok = true;
            for (std::size_t i = 0; i < set.size() && ok; ++i)
                for (std::size_t j = i + 1; j < set.size() && ok; ++j)
                    if (space.collinear(set[i], set[j], p)) ok = false;
            if (ok) set.push_back(p);
        }
        res.points = set;
    }
    res.size = static_cast<int>(res.points.size());
    return res;
}

int tangent_count(const ProjectiveSpace& space, const std::vector<int>& set, int point) {
    if (std::find(set.begin(), set.end(), point) == set.end())
        throw NotAnArc("tangent point must belong to the set");
    int count = 0;
    for (int li : space.lines_through(point)) {
        int hits = 0;
        for (int p : space.lines()[li])
            if (std::find(set.begin(), set.end(), p) != set.end()) ++hits;
        if (hits == 1) ++count;
    }
    return count;
}

TangentProfile tangent_profile(const ProjectiveSpace& space, const std::vector<int>& set) {
    if (!is_arc(space, set).ok) throw NotAnArc("tangent profile requires an arc");
    TangentProfile prof;
    for (int p : set) prof.counts.push_back(tangent_count(space, set, p));
    prof.is_oval = std::all_of(prof.counts.begin(), prof.counts.end(),
                               [](int c) { return c == 1; });
    prof.is_hyperoval = std::all_of(prof.counts.begin(), prof.counts.end(),
                                    [](int c) { return c == 0; });
    return prof;
}

bool bruck_ryser_excluded(int q) {
    if (q < 2) throw PgError("order must be >= 2");
    int r = q % 4;
    if (r != 1 && r != 2) return false;
    for (int a = 0; a * a <= q; ++a) {
        int rest = q - a * a;
        int b = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rest))));
        for (int bb = std::max(0, b - 1); bb <= b + 1; ++bb)
            if (bb * bb == rest) return false;
    }
    return true;
}

std::vector<std::vector<int>> incidence_matrix(const ProjectiveSpace& space) {
    if (space.delta() != 2) throw NotAPlane("incidence matrix requires delta = 2");
    std::vector<std::vector<int>> mat(space.num_lines(),
                                      std::vector<int>(space.num_points(), 0));
    for (int li = 0; li < space.num_lines(); ++li)
        for (int p : space.lines()[li]) mat[li][p] = 1;
    return mat;
}

namespace {

bool match_rows(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                std::vector<int>& perm, std::vector<bool>& used, std::size_t depth) {
    const std::size_t n = a.size();
    if (depth == n) {
        // columns of A under the row permutation must be a permutation of B's
        std::vector<std::vector<int>> ca(n), cb(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                ca[j].push_back(a[perm[i]][j]);
                cb[j].push_back(b[i][j]);
            }
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        return ca == cb;
    }
    auto row_sum = [](const std::vector<int>& r) {
        int s = 0;
        for (int v : r) s += v != 0;
        return s;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i] || row_sum(a[i]) != row_sum(b[depth])) continue;
        perm[depth] = static_cast<int>(i);
        used[i] = true;
        // prune: column prefix multisets must agree
        std::vector<std::vector<int>> ca(n), cb(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t d = 0; d <= depth; ++d) {
                ca[j].push_back(a[perm[d]][j]);
                cb[j].push_back(b[d][j]);
            }
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca == cb && match_rows(a, b, perm, used, depth + 1)) return true;
        used[i] = false;
    }
    return false;
}

}  // namespace

bool permutation_equivalent(const std::vector<std::vector<int>>& a,
                            const std::vector<std::vector<int>>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    if (a[0].size() != b[0].size()) return false;
    std::vector<int> perm(a.size(), -1);
    std::vector<bool> used(a.size(), false);
    return match_rows(a, b, perm, used, 0);
}

}  // namespace qgt::pg
