#include <kdom/partition.hh>
#include <kdom/solver.hh>

#include <algorithm>

using std::size_t;
using std::string;
using std::vector;

namespace kdom
{
    using std::to_string;

    auto build_k_partition(const Graph & graph, Count k, const vector<Id> & anchors) -> KPartition
    {
        auto anchor_set = Multiset::from_elements(anchors);
        if (! anchor_set.empty() && anchor_set.max_element() >= graph.order())
            throw PartitionError("anchor outside the graph");
        if (anchor_set.max_multiplicity() > k)
            throw PartitionError("an anchor repeats more than k times");
        if (! is_k_dominating(graph, k, anchor_set))
            throw PartitionError("anchors are not {" + to_string(k) + "}-dominating");

        auto n = graph.order();
        KPartition result;
        result.k = k;
        result.anchors = anchors;
        result.blocks.assign(anchors.size(), {});
        result.membership.assign(n, {});

        for (Id v = 0 ; v < n ; ++v) {
            auto & chosen = result.membership[v];
            for (size_t i = 0 ; i < anchors.size() ; ++i)
                if (anchors[i] == v) {
                    chosen.push_back(i);
                    result.blocks[i].push_back(v);
                }

            while (chosen.size() < k) {
                size_t best = anchors.size();
                for (size_t i = 0 ; i < anchors.size() ; ++i) {
                    if (anchors[i] == v || ! graph.adjacent(v, anchors[i]))
                        continue;
                    if (std::find(chosen.begin(), chosen.end(), i) != chosen.end())
                        continue;
                    if (best == anchors.size() || result.blocks[i].size() < result.blocks[best].size())
                        best = i;
                }
                // Unreachable when the anchors are {k}-dominating.
                if (best == anchors.size())
                    throw PartitionError("vertex " + to_string(v) + " has fewer than k dominating anchor positions");
                chosen.push_back(best);
                result.blocks[best].push_back(v);
            }

            std::sort(chosen.begin(), chosen.end());
        }

        for (auto & block : result.blocks)
            std::sort(block.begin(), block.end());
        return result;
    }

    auto membership_from_blocks(size_t order, const vector<vector<Id>> & blocks) -> vector<vector<size_t>>
    {
        vector<vector<size_t>> result(order);
        for (size_t i = 0 ; i < blocks.size() ; ++i)
            for (auto v : blocks[i])
                if (v < order)
                    result[v].push_back(i);
        return result;
    }

    auto validate_k_partition(const Graph & graph, const KPartition & partition) -> vector<PartitionViolation>
    {
        vector<PartitionViolation> violations;
        auto n = graph.order();
        auto t = partition.anchors.size();

        if (partition.blocks.size() != t) {
            violations.push_back({PartitionRule::shape, 0, 0,
                    to_string(partition.blocks.size()) + " blocks for " + to_string(t) + " anchors"});
            return violations;
        }

        for (size_t i = 0 ; i < t ; ++i) {
            auto u = partition.anchors[i];
            auto & block = partition.blocks[i];
            if (u >= n) {
                violations.push_back({PartitionRule::shape, u, i, "anchor u_" + to_string(i) + " = " + to_string(u) + " is not a vertex"});
                continue;
            }
            if (std::find(block.begin(), block.end(), u) == block.end())
                violations.push_back({PartitionRule::anchor_in_block, u, i, "u_" + to_string(i) + " = " + to_string(u) + " not in P_" + to_string(i)});

            vector<Id> seen;
            for (auto v : block) {
                if (v >= n) {
                    violations.push_back({PartitionRule::shape, v, i, "P_" + to_string(i) + " contains non-vertex " + to_string(v)});
                    continue;
                }
                if (std::find(seen.begin(), seen.end(), v) != seen.end())
                    violations.push_back({PartitionRule::shape, v, i, "P_" + to_string(i) + " lists " + to_string(v) + " twice"});
                seen.push_back(v);
                if (v != u && ! graph.adjacent(u, v))
                    violations.push_back({PartitionRule::block_in_neighbourhood, v, i,
                            "P_" + to_string(i) + " not inside N[u_" + to_string(i) + "]: contains " + to_string(v)});
            }
        }

        // A vertex already reported with the wrong block count is not reported
        // again for its stale membership list.
        auto derived = membership_from_blocks(n, partition.blocks);
        vector<char> miscounted(n, 0);
        for (Id v = 0 ; v < n ; ++v) {
            auto unique = derived[v];
            unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
            if (unique.size() != partition.k) {
                miscounted[v] = 1;
                violations.push_back({PartitionRule::membership_count, v, 0,
                        "vertex " + to_string(v) + " appears in " + to_string(unique.size()) + " blocks, expected " + to_string(partition.k)});
            }
        }

        if (partition.membership.size() != n)
            violations.push_back({PartitionRule::membership_mismatch, 0, 0, "membership lists cover " + to_string(partition.membership.size()) + " vertices, graph has " + to_string(n)});
        else
            for (Id v = 0 ; v < n ; ++v)
                if (! miscounted[v] && partition.membership[v] != derived[v])
                    violations.push_back({PartitionRule::membership_mismatch, v, 0, "membership list of vertex " + to_string(v) + " disagrees with blocks"});

        return violations;
    }

    auto block_index(const KPartition & partition, Id v, size_t s) -> size_t
    {
        if (v >= partition.membership.size() || s >= partition.membership[v].size())
            throw PartitionError("f_" + to_string(v) + "(" + to_string(s) + ") is undefined");
        return partition.membership[v][s];
    }

    auto inverse_block(const KPartition & partition, Id v, size_t block) -> size_t
    {
        if (v < partition.membership.size()) {
            auto & list = partition.membership[v];
            auto it = std::lower_bound(list.begin(), list.end(), block);
            if (it != list.end() && *it == block)
                return static_cast<size_t>(it - list.begin());
        }
        throw PartitionError("vertex " + to_string(v) + " is not in block " + to_string(block));
    }
}
