#include <kdom/multiset.hh>

#include <algorithm>
#include <stdexcept>

using std::invalid_argument;
using std::pair;
using std::span;
using std::string;
using std::vector;

namespace kdom
{
    using std::to_string;

    Multiset::Multiset(std::initializer_list<Id> elements)
    {
        for (auto x : elements)
            add(x);
    }

    auto Multiset::from_elements(span<const Id> elements) -> Multiset
    {
        Multiset result;
        for (auto x : elements)
            result.add(x);
        return result;
    }

    auto Multiset::from_counts(span<const pair<Id, Count>> counts) -> Multiset
    {
        Multiset result;
        for (auto & [x, c] : counts)
            result.add(x, c);
        return result;
    }

    auto Multiset::add(Id x, Count copies) -> void
    {
        if (copies == 0)
            return;
        _counts[x] += copies;
        _size += copies;
    }

    auto Multiset::remove(Id x, Count copies) -> Count
    {
        auto it = _counts.find(x);
        if (it == _counts.end())
            return 0;
        auto removed = std::min(copies, it->second);
        it->second -= removed;
        _size -= removed;
        if (it->second == 0)
            _counts.erase(it);
        return removed;
    }

    auto Multiset::count(Id x) const -> Count
    {
        auto it = _counts.find(x);
        return it == _counts.end() ? 0 : it->second;
    }

    auto Multiset::count_over(span<const Id> set) const -> Count
    {
        Count total = 0;
        for (auto b : set)
            total += count(b);
        return total;
    }

    auto Multiset::max_element() const -> Id
    {
        if (_counts.empty())
            throw invalid_argument("max_element of an empty multiset");
        return _counts.rbegin()->first;
    }

    auto Multiset::max_multiplicity() const -> Count
    {
        Count best = 0;
        for (auto & [_, c] : _counts)
            best = std::max(best, c);
        return best;
    }

    auto Multiset::elements() const -> vector<Id>
    {
        vector<Id> result;
        result.reserve(_size);
        for (auto & [x, c] : _counts)
            result.insert(result.end(), c, x);
        return result;
    }

    auto Multiset::counts() const -> vector<pair<Id, Count>>
    {
        return {_counts.begin(), _counts.end()};
    }

    auto multiset_union(const Multiset & a, const Multiset & b) -> Multiset
    {
        Multiset result = a;
        for (auto & [x, c] : b)
            result.add(x, c);
        return result;
    }

    auto power_union(const Multiset & a, Count t) -> Multiset
    {
        if (t == 0)
            throw invalid_argument("power_union requires t >= 1");
        Multiset result;
        for (auto & [x, c] : a)
            result.add(x, c * t);
        return result;
    }

    auto intersect(const Multiset & a, const Multiset & b) -> Multiset
    {
        Multiset result;
        for (auto & [x, c] : a)
            result.add(x, std::min(c, b.count(x)));
        return result;
    }

    auto is_submultiset(const Multiset & sub, const Multiset & super) -> bool
    {
        return std::all_of(sub.begin(), sub.end(), [&] (const auto & e) { return e.second <= super.count(e.first); });
    }

    auto to_string(const Multiset & a) -> string
    {
        string result = "{";
        bool first = true;
        for (auto x : a.elements()) {
            if (! first)
                result += ",";
            first = false;
            result += std::to_string(x);
        }
        return result + "}";
    }
}
