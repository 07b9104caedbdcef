#include "indep/core/point_set.hpp"

#include <algorithm>

namespace indep {

std::vector<PointSet> subsets_by_size(PointSet universe, int max_size)
{
    const std::vector<int> pts = universe.points();
    std::vector<PointSet> out;
    std::vector<int> pick;
    // Combinations of each size in lexicographic order of index tuples.
    for (int k = 0; k <= std::min<int>(max_size, static_cast<int>(pts.size())); ++k) {
        pick.assign(k, 0);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            PointSet s;
            for (int i : pick) s.insert(pts[i]);
            out.push_back(s);
            int i = k - 1;
            while (i >= 0 && pick[i] == static_cast<int>(pts.size()) - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

std::vector<PointSet> all_subsets(PointSet s)
{
    std::vector<PointSet> out;
    const std::uint64_t bits = s.bits();
    std::uint64_t sub = 0;
    while (true) {
        out.emplace_back(sub);
        if (sub == bits) break;
        sub = (sub - bits) & bits;
    }
    return out;
}

}  // namespace indep
