#include "k3fib/contract.hpp"

#include <map>
#include <set>

namespace k3fib {

namespace {

using State = std::vector<std::vector<long>>;

struct Search {
    const CurveConfig& c;
    std::vector<Permutation> group;
    std::set<std::vector<char>> visited;
    std::map<std::string, ContractionResult> found;
    std::vector<std::vector<std::string>> log;
    int total = 0;

    std::string terminal(const std::vector<char>& alive, const State& m, int contracted) const {
        const int rank = 10 - contracted;
        if (rank == 1) return "P2";
        if (rank == 2) {
            for (int i = 0; i < total; ++i)
                if (alive[i] && m[i][i] == -2) return "F2";
            return "P1xP1";
        }
        return "rank " + std::to_string(rank);
    }

    void run(const std::vector<char>& alive, const State& m, int contracted) {
        if (!visited.insert(alive).second) return;
        bool any = false;
        std::vector<char> done(total, 0);
        for (int e = 0; e < total; ++e) {
            if (!alive[e] || done[e] || m[e][e] != -1) continue;
            std::set<int> orbit;
            for (const auto& g : group) orbit.insert(g.image[e]);
            for (int o : orbit) done[o] = 1;
            bool ok = true;
            for (int a : orbit) {
                if (!alive[a] || m[a][a] != -1) ok = false;
                for (int b : orbit)
                    if (a != b && m[a][b] != 0) ok = false;
            }
            if (!ok) continue;
            any = true;
            State next = m;
            std::vector<char> na = alive;
            for (int x : orbit) na[x] = 0;
            for (int i = 0; i < total; ++i) {
                if (!na[i]) continue;
                for (int j = 0; j < total; ++j) {
                    if (!na[j]) continue;
                    long add = 0;
                    for (int x : orbit) add += m[i][x] * m[j][x];
                    next[i][j] += add;
                }
            }
            std::vector<std::string> names;
            for (int x : orbit) names.push_back(c.curves[x].name);
            log.push_back(names);
            run(na, next, contracted + static_cast<int>(orbit.size()));
            log.pop_back();
        }
        if (!any) {
            std::string t = terminal(alive, m, contracted);
            if (!found.count(t)) found[t] = ContractionResult{t, contracted, log};
        }
    }
};

}  // namespace

std::vector<ContractionResult> contract_to_minimal(const CurveConfig& c, const std::string& action) {
    if (c.surface != SurfaceKind::RationalElliptic)
        throw DomainError("contractions need a rational elliptic surface configuration");
    if (!c.derived.empty()) throw DomainError("contractions do not support derived curves");
    require_valid(c);
    Search s{c, {}, {}, {}, {}, c.size()};
    if (action.empty()) {
        Permutation id;
        for (int i = 0; i < c.size(); ++i) id.image.push_back(i);
        s.group = {id};
    } else {
        s.group = group_elements(c, c.action(action));
    }
    State m(c.size(), std::vector<long>(c.size()));
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j) m[i][j] = to_long(c.pairing(i, j));
    s.run(std::vector<char>(c.size(), 1), m, 0);
    std::vector<ContractionResult> out;
    for (auto& [k, v] : s.found) out.push_back(v);
    return out;
}

}  // namespace k3fib
