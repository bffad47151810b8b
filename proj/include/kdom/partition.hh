#ifndef KDOM_PARTITION_HH
#define KDOM_PARTITION_HH

#include <kdom/graph.hh>
#include <kdom/multiset.hh>

#include <string>
#include <vector>

namespace kdom
{
    /// A k-partition of V(G) anchored on an ordered {k}-dominating sequence
    /// u_0..u_{t-1}: block i contains u_i and lies inside N[u_i], and every vertex
    /// belongs to exactly k blocks. Block indices are 0-based.
    struct KPartition
    {
        Count k = 1;
        std::vector<Id> anchors;
        std::vector<std::vector<Id>> blocks;

        /// membership[v] is the sorted list of the k blocks containing v.
        std::vector<std::vector<std::size_t>> membership;

        auto operator== (const KPartition &) const -> bool = default;
    };

    class PartitionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    enum class PartitionRule
    {
        shape,
        membership_count,
        anchor_in_block,
        block_in_neighbourhood,
        membership_mismatch
    };

    struct PartitionViolation
    {
        PartitionRule rule;
        std::size_t vertex = 0;
        std::size_t block = 0;
        std::string message;
    };

    /// Throws PartitionError if the anchors are not {k}-dominating or some anchor
    /// repeats more than k times.
    auto build_k_partition(const Graph & graph, Count k, const std::vector<Id> & anchors) -> KPartition;

    /// Rebuilds membership lists from the blocks.
    auto membership_from_blocks(std::size_t order, const std::vector<std::vector<Id>> & blocks) -> std::vector<std::vector<std::size_t>>;

    /// Empty iff the partition is valid for the graph.
    auto validate_k_partition(const Graph & graph, const KPartition & partition) -> std::vector<PartitionViolation>;

    /// f_v(s): the s-th block (0-based, ascending) containing v.
    auto block_index(const KPartition & partition, Id v, std::size_t s) -> std::size_t;

    /// The s with f_v(s) = block; throws PartitionError if v is not in that block.
    auto inverse_block(const KPartition & partition, Id v, std::size_t block) -> std::size_t;
}

#endif
