#include <algorithm>
#include <cstdlib>
#include <map>

#include "weave/clusterkit.hpp"

namespace weave {

Quiver quiver_from_brick(const BraidWord& w) {
    struct Brick {
        int row, s, t;
    };
    std::vector<Brick> bricks;
    std::map<int, int> last;
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
        int g = w.letters[p];
        if (auto it = last.find(g); it != last.end()) bricks.push_back({g, it->second, p});
        last[g] = p;
    }
    std::stable_sort(bricks.begin(), bricks.end(),
                     [](const Brick& x, const Brick& y) { return x.row != y.row ? x.row < y.row : x.s < y.s; });
    const int m = static_cast<int>(bricks.size());
    Quiver q(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const Brick &x = bricks[i], &y = bricks[j];
            if (x.row == y.row && x.t == y.s) q.add_arrows(i, j);
            if (std::abs(x.row - y.row) == 1 && y.s < x.s && x.s < y.t && y.t < x.t) q.add_arrows(i, j);
        }
    return q;
}

}  // namespace weave
