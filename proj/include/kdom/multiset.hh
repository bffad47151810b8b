#ifndef KDOM_MULTISET_HH
#define KDOM_MULTISET_HH

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kdom
{
    using Id = std::size_t;
    using Count = std::size_t;

    /// A finite multiset over nonnegative integer ids. Zero multiplicities are
    /// never stored, and iteration is in ascending id order.
    class Multiset
    {
        private:
            std::map<Id, Count> _counts;
            Count _size = 0;

        public:
            using const_iterator = std::map<Id, Count>::const_iterator;

            Multiset() = default;

            /// Every listed element contributes one copy, so {1, 2, 2} has |A|_2 = 2.
            Multiset(std::initializer_list<Id> elements);

            static auto from_elements(std::span<const Id> elements) -> Multiset;
            static auto from_counts(std::span<const std::pair<Id, Count>> counts) -> Multiset;

            auto add(Id x, Count copies = 1) -> void;

            /// Removes up to `copies` copies of x; returns how many were removed.
            auto remove(Id x, Count copies = 1) -> Count;

            [[nodiscard]] auto count(Id x) const -> Count;
            [[nodiscard]] auto count_over(std::span<const Id> set) const -> Count;
            [[nodiscard]] auto cardinality() const -> Count { return _size; }
            [[nodiscard]] auto empty() const -> bool { return _size == 0; }
            [[nodiscard]] auto distinct() const -> std::size_t { return _counts.size(); }

            /// Largest id present; requires a nonempty multiset.
            [[nodiscard]] auto max_element() const -> Id;
            [[nodiscard]] auto max_multiplicity() const -> Count;

            /// Sorted, multiplicity-expanded element list.
            [[nodiscard]] auto elements() const -> std::vector<Id>;
            [[nodiscard]] auto counts() const -> std::vector<std::pair<Id, Count>>;

            [[nodiscard]] auto begin() const -> const_iterator { return _counts.begin(); }
            [[nodiscard]] auto end() const -> const_iterator { return _counts.end(); }

            auto operator== (const Multiset &) const -> bool = default;
    };

    auto multiset_union(const Multiset & a, const Multiset & b) -> Multiset;

    /// The t-fold union of a with itself. Throws std::invalid_argument for t = 0.
    auto power_union(const Multiset & a, Count t) -> Multiset;

    auto intersect(const Multiset & a, const Multiset & b) -> Multiset;

    /// True iff |sub|_x <= |super|_x for every x.
    auto is_submultiset(const Multiset & sub, const Multiset & super) -> bool;

    /// Renders as "{1,2,2}".
    auto to_string(const Multiset & a) -> std::string;
}

#endif
