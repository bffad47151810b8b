#ifndef KDOM_CERTIFICATE_HH
#define KDOM_CERTIFICATE_HH

#include <kdom/graph.hh>
#include <kdom/multiset.hh>
#include <kdom/partition.hh>
#include <kdom/product.hh>
#include <kdom/solver.hh>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdom
{
    class CertificateError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A certificate file that is not well-formed JSON or does not follow the
    /// schema. Distinct from a certificate that parses but fails verification.
    class SchemaError : public std::runtime_error
    {
        private:
            std::string _path;

        public:
            SchemaError(std::string path, const std::string & message);

            [[nodiscard]] auto path() const -> const std::string & { return _path; }
    };

    /// For every product vertex, k dominators d_0..d_{k-1} taken from D_k ∩ N[gh]
    /// (repetition allowed, never more copies than D_k holds).
    struct DominatorAssignment
    {
        std::vector<std::vector<Id>> dominators;

        auto operator== (const DominatorAssignment &) const -> bool = default;
    };

    struct Classification
    {
        bool a = false;   // every column holds a 1
        bool b = false;   // every row holds a 0

        [[nodiscard]] auto empty() const -> bool { return ! a && ! b; }

        auto operator== (const Classification &) const -> bool = default;
    };

    using BinaryMatrix = std::vector<std::vector<std::uint8_t>>;

    /// F_ij over P^G_i x P^H_j. Rows follow P^G_i in ascending vertex order,
    /// columns follow P^H_j likewise. An entry is 0 exactly when the copy's
    /// dominator reaches it through a G-edge.
    struct BlockMatrix
    {
        std::size_t i = 0, j = 0;
        BinaryMatrix entries;
        Classification classification;

        auto operator== (const BlockMatrix &) const -> bool = default;
    };

    struct Chain
    {
        Count lhs = 0;      // gamma(G) * gamma(H)
        Count sum_n = 0;    // sum |N_i| + sum |N̄_j|
        Count sum_s = 0;    // sum |S_i| + sum |S̄_j|
        Count rhs = 0;      // 2k * gamma(G□H)

        auto operator== (const Chain &) const -> bool = default;
    };

    struct Certificate
    {
        Count k = 1;
        Graph g, h;
        Count gamma_g = 0, gamma_h = 0, gamma_gh = 0;
        Multiset witness_g, witness_h, d_k;
        KPartition partition_g, partition_h;
        DominatorAssignment assignment;
        std::vector<BlockMatrix> blocks;

        // Indexed by G-block i (n, y, s, z) or H-block j (the _bar variants).
        // n_sets and y_sets hold H vertices, n_bar_sets and y_bar_sets G vertices,
        // s and z sets product vertices.
        std::vector<Multiset> n_sets, n_bar_sets, y_sets, y_bar_sets;
        std::vector<Multiset> s_sets, s_bar_sets;
        std::vector<Count> s_sizes, s_bar_sizes;
        std::optional<std::vector<Multiset>> z_sets, z_bar_sets;

        Chain chain;

        auto operator== (const Certificate &) const -> bool = default;
    };

    /// First k entries of D_k ∩ N[gh], expanded by multiplicity in ascending id order.
    auto assign_dominators(const ProductGraph & pg, Count k, const Multiset & d_k) -> DominatorAssignment;

    /// d_{(s + r) mod k} for copy (s, r) of product vertex v.
    auto dominator_of_copy(const DominatorAssignment & assignment, Id v, std::size_t s, std::size_t r) -> Id;

    /// Throws CertificateError on an empty matrix.
    auto classify_matrix(const BinaryMatrix & matrix) -> Classification;

    auto build_f_matrix(const ProductGraph & pg, const KPartition & partition_g, const KPartition & partition_h,
            const DominatorAssignment & assignment, std::size_t i, std::size_t j) -> BlockMatrix;

    /// D_k ∩ ⊎^k (P^G_i x V(H)).
    auto strip_multiset_g(const ProductGraph & pg, const Multiset & d_k, const std::vector<Id> & block_g, Count k) -> Multiset;

    /// D_k ∩ ⊎^k (V(G) x P^H_j).
    auto strip_multiset_h(const ProductGraph & pg, const Multiset & d_k, const std::vector<Id> & block_h, Count k) -> Multiset;

    struct BuildOptions
    {
        bool include_z = false;
    };

    /// Anchors are the witnesses sorted by vertex id.
    auto build_certificate(const Graph & g, const Graph & h, Count k,
            const SolveResult & solve_g, const SolveResult & solve_h, const SolveResult & solve_gh,
            const BuildOptions & options = {}) -> Certificate;

    struct CheckResult
    {
        int number = 0;
        std::string name;
        bool passed = true;
        std::vector<std::string> details;
    };

    struct VerificationReport
    {
        std::vector<CheckResult> checks;

        [[nodiscard]] auto all_passed() const -> bool;
        [[nodiscard]] auto failed_checks() const -> std::vector<int>;
        [[nodiscard]] auto passed(int number) const -> bool;
    };

    /// Runs the nine checks in order. Uses only the certificate contents.
    auto verify_certificate(const Certificate & cert) -> VerificationReport;

    auto serialize_certificate(const Certificate & cert) -> std::string;

    /// Throws SchemaError with a JSON path on malformed input.
    auto parse_certificate(const std::string & text) -> Certificate;
}

#endif
