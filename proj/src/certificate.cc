#include <kdom/certificate.hh>

#include <algorithm>
#include <functional>
#include <map>

using std::size_t;
using std::string;
using std::vector;

namespace kdom
{
    using std::to_string;

    SchemaError::SchemaError(string path, const string & message) :
        std::runtime_error(path + ": " + message),
        _path(std::move(path))
    {
    }

    auto assign_dominators(const ProductGraph & pg, Count k, const Multiset & d_k) -> DominatorAssignment
    {
        auto & graph = pg.graph();
        DominatorAssignment result;
        result.dominators.resize(graph.order());
        for (Id v = 0 ; v < graph.order() ; ++v) {
            auto & list = result.dominators[v];
            for (auto u : graph.closed_neighbourhood(v)) {
                auto copies = std::min<Count>(d_k.count(u), k - list.size());
                list.insert(list.end(), copies, u);
                if (list.size() == k)
                    break;
            }
            if (list.size() < k)
                throw CertificateError("product vertex " + pg.render(v) + " has only " + to_string(list.size()) + " dominators, needs " + to_string(k));
        }
        return result;
    }

    auto dominator_of_copy(const DominatorAssignment & assignment, Id v, size_t s, size_t r) -> Id
    {
        auto & list = assignment.dominators.at(v);
        if (list.empty())
            throw CertificateError("vertex " + to_string(v) + " has no dominators");
        return list[(s + r) % list.size()];
    }

    auto classify_matrix(const BinaryMatrix & matrix) -> Classification
    {
        if (matrix.empty() || matrix.front().empty())
            throw CertificateError("cannot classify an empty matrix");

        auto rows = matrix.size(), cols = matrix.front().size();
        Classification result;

        result.a = true;
        for (size_t c = 0 ; c < cols && result.a ; ++c) {
            bool has_one = false;
            for (size_t r = 0 ; r < rows && ! has_one ; ++r)
                has_one = matrix[r].at(c) == 1;
            result.a = has_one;
        }

        result.b = std::all_of(matrix.begin(), matrix.end(), [] (const auto & row) {
            return std::find(row.begin(), row.end(), 0) != row.end();
        });
        return result;
    }

    namespace
    {
        // Entry for copy (s, r) of vertex gh: 0 iff its dominator differs from gh
        // in the G coordinate only and is a G-neighbour.
        auto f_entry(const ProductGraph & pg, const DominatorAssignment & assignment, Id gh, size_t s, size_t r) -> std::uint8_t
        {
            auto d = dominator_of_copy(assignment, gh, s, r);
            auto via_g = pg.h_of(d) == pg.h_of(gh) && pg.g().adjacent(pg.g_of(d), pg.g_of(gh));
            return via_g ? 0 : 1;
        }
    }

    auto build_f_matrix(const ProductGraph & pg, const KPartition & partition_g, const KPartition & partition_h,
            const DominatorAssignment & assignment, size_t i, size_t j) -> BlockMatrix
    {
        BlockMatrix result;
        result.i = i;
        result.j = j;
        for (auto g : partition_g.blocks.at(i)) {
            auto s = inverse_block(partition_g, g, i);
            auto & row = result.entries.emplace_back();
            for (auto h : partition_h.blocks.at(j)) {
                auto r = inverse_block(partition_h, h, j);
                row.push_back(f_entry(pg, assignment, pg.index(g, h), s, r));
            }
        }
        result.classification = classify_matrix(result.entries);
        return result;
    }

    auto strip_multiset_g(const ProductGraph & pg, const Multiset & d_k, const vector<Id> & block_g, Count k) -> Multiset
    {
        Multiset strip;
        for (auto g : block_g)
            for (Id h = 0 ; h < pg.h().order() ; ++h)
                strip.add(pg.index(g, h));
        return intersect(d_k, power_union(strip, k));
    }

    auto strip_multiset_h(const ProductGraph & pg, const Multiset & d_k, const vector<Id> & block_h, Count k) -> Multiset
    {
        Multiset strip;
        for (Id g = 0 ; g < pg.g().order() ; ++g)
            for (auto h : block_h)
                strip.add(pg.index(g, h));
        return intersect(d_k, power_union(strip, k));
    }

    namespace
    {
        auto block_product(const ProductGraph & pg, const vector<Id> & block_g, const vector<Id> & block_h) -> Multiset
        {
            Multiset result;
            for (auto g : block_g)
                for (auto h : block_h)
                    result.add(pg.index(g, h));
            return result;
        }

        auto sum_cardinalities(const vector<Multiset> & sets) -> Count
        {
            Count total = 0;
            for (auto & s : sets)
                total += s.cardinality();
            return total;
        }
    }

    auto build_certificate(const Graph & g, const Graph & h, Count k,
            const SolveResult & solve_g, const SolveResult & solve_h, const SolveResult & solve_gh,
            const BuildOptions & options) -> Certificate
    {
        if (! solve_g.optimal || ! solve_h.optimal || ! solve_gh.optimal)
            throw CertificateError("certificates need optimal solves");

        ProductGraph pg{g, h};
        Certificate cert;
        cert.k = k;
        cert.g = g;
        cert.h = h;
        cert.gamma_g = solve_g.gamma;
        cert.gamma_h = solve_h.gamma;
        cert.gamma_gh = solve_gh.gamma;
        cert.witness_g = solve_g.witness;
        cert.witness_h = solve_h.witness;
        cert.d_k = solve_gh.witness;

        cert.partition_g = build_k_partition(g, k, solve_g.witness.elements());
        cert.partition_h = build_k_partition(h, k, solve_h.witness.elements());
        cert.assignment = assign_dominators(pg, k, cert.d_k);

        auto & pgp = cert.partition_g, & php = cert.partition_h;
        auto t_g = pgp.anchors.size(), t_h = php.anchors.size();

        cert.n_sets.assign(t_g, {});
        cert.y_sets.assign(t_g, {});
        cert.n_bar_sets.assign(t_h, {});
        cert.y_bar_sets.assign(t_h, {});
        if (options.include_z) {
            cert.z_sets.emplace(t_g);
            cert.z_bar_sets.emplace(t_h);
        }

        for (size_t i = 0 ; i < t_g ; ++i)
            for (size_t j = 0 ; j < t_h ; ++j) {
                auto & block = cert.blocks.emplace_back(build_f_matrix(pg, pgp, php, cert.assignment, i, j));
                if (block.classification.a) {
                    cert.n_sets[i].add(php.anchors[j]);
                    for (auto y : php.blocks[j])
                        cert.y_sets[i].add(y);
                    if (options.include_z)
                        (*cert.z_sets)[i] = multiset_union((*cert.z_sets)[i], block_product(pg, pgp.blocks[i], php.blocks[j]));
                }
                if (block.classification.b) {
                    cert.n_bar_sets[j].add(pgp.anchors[i]);
                    for (auto y : pgp.blocks[i])
                        cert.y_bar_sets[j].add(y);
                    if (options.include_z)
                        (*cert.z_bar_sets)[j] = multiset_union((*cert.z_bar_sets)[j], block_product(pg, pgp.blocks[i], php.blocks[j]));
                }
            }

        for (size_t i = 0 ; i < t_g ; ++i) {
            cert.s_sets.push_back(strip_multiset_g(pg, cert.d_k, pgp.blocks[i], k));
            cert.s_sizes.push_back(cert.s_sets.back().cardinality());
        }
        for (size_t j = 0 ; j < t_h ; ++j) {
            cert.s_bar_sets.push_back(strip_multiset_h(pg, cert.d_k, php.blocks[j], k));
            cert.s_bar_sizes.push_back(cert.s_bar_sets.back().cardinality());
        }

        cert.chain.lhs = cert.gamma_g * cert.gamma_h;
        cert.chain.sum_n = sum_cardinalities(cert.n_sets) + sum_cardinalities(cert.n_bar_sets);
        cert.chain.sum_s = sum_cardinalities(cert.s_sets) + sum_cardinalities(cert.s_bar_sets);
        cert.chain.rhs = 2 * k * cert.gamma_gh;
        return cert;
    }

    auto VerificationReport::all_passed() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [] (const CheckResult & c) { return c.passed; });
    }

    auto VerificationReport::failed_checks() const -> vector<int>
    {
        vector<int> result;
        for (auto & c : checks)
            if (! c.passed)
                result.push_back(c.number);
        return result;
    }

    auto VerificationReport::passed(int number) const -> bool
    {
        for (auto & c : checks)
            if (c.number == number)
                return c.passed;
        return false;
    }

    namespace
    {
        class Verifier
        {
            private:
                const Certificate & _cert;
                ProductGraph _pg;
                CheckResult * _current = nullptr;

                auto fail(const string & detail) -> void
                {
                    _current->passed = false;
                    _current->details.push_back(detail);
                }

                auto expect(bool condition, const string & detail) -> void
                {
                    if (! condition)
                        fail(detail);
                }

                auto t_g() const -> size_t { return _cert.partition_g.anchors.size(); }
                auto t_h() const -> size_t { return _cert.partition_h.anchors.size(); }

                auto check_witness(const string & label, const Graph & graph, const Multiset & witness, Count gamma) -> void
                {
                    expect(witness.cardinality() == gamma, label + " has size " + to_string(witness.cardinality()) + " but gamma is " + to_string(gamma));
                    expect(is_k_dominating(graph, _cert.k, witness), label + " is not {" + to_string(_cert.k) + "}-dominating");
                    expect(witness.max_multiplicity() <= _cert.k, label + " places more than k copies on one vertex");
                }

                auto check_witnesses() -> void
                {
                    check_witness("witness_g", _cert.g, _cert.witness_g, _cert.gamma_g);
                    check_witness("witness_h", _cert.h, _cert.witness_h, _cert.gamma_h);
                    check_witness("d_k", _pg.graph(), _cert.d_k, _cert.gamma_gh);
                }

                auto check_partition(const string & label, const Graph & graph, const KPartition & partition, const Multiset & witness) -> void
                {
                    expect(partition.k == _cert.k, label + " has k = " + to_string(partition.k));
                    expect(Multiset::from_elements(partition.anchors) == witness, label + " anchors differ from the witness");
                    for (auto & v : validate_k_partition(graph, partition))
                        fail(label + ": " + v.message);
                }

                auto check_partitions() -> void
                {
                    check_partition("partition_g", _cert.g, _cert.partition_g, _cert.witness_g);
                    check_partition("partition_h", _cert.h, _cert.partition_h, _cert.witness_h);
                    if (! _current->passed)
                        return;

                    // P^G x P^H must cover every product vertex exactly k^2 times.
                    vector<Count> cover(_pg.graph().order(), 0);
                    for (auto & bg : _cert.partition_g.blocks)
                        for (auto & bh : _cert.partition_h.blocks)
                            for (auto g : bg)
                                for (auto h : bh)
                                    ++cover[_pg.index(g, h)];
                    for (Id v = 0 ; v < cover.size() ; ++v)
                        expect(cover[v] == _cert.k * _cert.k, "block products cover " + _pg.render(v) + " " + to_string(cover[v]) + " times");
                }

                auto check_assignment() -> void
                {
                    auto & lists = _cert.assignment.dominators;
                    if (lists.size() != _pg.graph().order()) {
                        fail("assignment covers " + to_string(lists.size()) + " vertices, product has " + to_string(_pg.graph().order()));
                        return;
                    }
                    for (Id v = 0 ; v < lists.size() ; ++v) {
                        auto & list = lists[v];
                        if (list.size() != _cert.k) {
                            fail(_pg.render(v) + " has " + to_string(list.size()) + " dominators, expected " + to_string(_cert.k));
                            continue;
                        }
                        for (auto d : list)
                            expect(d == v || _pg.graph().adjacent(v, d), "dominator " + (d < lists.size() ? _pg.render(d) : to_string(d)) + " of " + _pg.render(v) + " is outside its closed neighbourhood");
                        expect(is_submultiset(Multiset::from_elements(list), _cert.d_k), "dominators of " + _pg.render(v) + " use more copies than D_k holds");
                    }
                }

                auto check_matrices() -> void
                {
                    std::map<std::pair<size_t, size_t>, const BlockMatrix *> by_index;
                    for (auto & block : _cert.blocks) {
                        if (block.i >= t_g() || block.j >= t_h()) {
                            fail("block (" + to_string(block.i) + "," + to_string(block.j) + ") is out of range");
                            continue;
                        }
                        if (! by_index.emplace(std::pair{block.i, block.j}, &block).second)
                            fail("block (" + to_string(block.i) + "," + to_string(block.j) + ") appears twice");
                    }

                    auto & pgp = _cert.partition_g, & php = _cert.partition_h;
                    for (size_t i = 0 ; i < t_g() ; ++i)
                        for (size_t j = 0 ; j < t_h() ; ++j) {
                            auto name = "F_" + to_string(i) + "," + to_string(j);
                            auto it = by_index.find({i, j});
                            if (it == by_index.end()) {
                                fail(name + " is missing");
                                continue;
                            }
                            auto & block = *it->second;
                            auto & rows = pgp.blocks.at(i);
                            auto & cols = php.blocks.at(j);
                            if (block.entries.size() != rows.size() || std::any_of(block.entries.begin(), block.entries.end(),
                                        [&] (const auto & row) { return row.size() != cols.size(); })) {
                                fail(name + " does not have shape " + to_string(rows.size()) + "x" + to_string(cols.size()));
                                continue;
                            }

                            for (size_t r = 0 ; r < rows.size() ; ++r)
                                for (size_t c = 0 ; c < cols.size() ; ++c) {
                                    auto g = rows[r], h = cols[c];
                                    auto expected = f_entry(_pg, _cert.assignment, _pg.index(g, h),
                                            inverse_block(pgp, g, i), inverse_block(php, h, j));
                                    expect(block.entries[r][c] == expected, name + " cell (" + to_string(g) + "," + to_string(h) + ") is "
                                            + to_string(block.entries[r][c]) + ", recomputed " + to_string(expected));
                                }

                            expect(! block.classification.empty(), name + " has an empty classification");
                            auto actual = classify_matrix(block.entries);
                            expect(actual.a == block.classification.a, name + (actual.a ? " satisfies (a) but is not classified a" : " is classified a but some column has no 1"));
                            expect(actual.b == block.classification.b, name + (actual.b ? " satisfies (b) but is not classified b" : " is classified b but some row has no 0"));
                        }
                }

                auto classified(size_t i, size_t j, bool want_a) const -> bool
                {
                    for (auto & block : _cert.blocks)
                        if (block.i == i && block.j == j)
                            return want_a ? block.classification.a : block.classification.b;
                    return false;
                }

                auto check_sizes(const string & label, size_t actual, size_t expected) -> bool
                {
                    if (actual != expected)
                        fail(label + " has " + to_string(actual) + " entries, expected " + to_string(expected));
                    return actual == expected;
                }

                auto check_block_count() -> void
                {
                    bool shaped = check_sizes("n_sets", _cert.n_sets.size(), t_g());
                    shaped = check_sizes("n_bar_sets", _cert.n_bar_sets.size(), t_h()) && shaped;
                    if (! shaped)
                        return;

                    Count total = 0;
                    for (size_t i = 0 ; i < t_g() ; ++i) {
                        Multiset expected;
                        for (size_t j = 0 ; j < t_h() ; ++j)
                            if (classified(i, j, true))
                                expected.add(_cert.partition_h.anchors.at(j));
                        expect(_cert.n_sets[i] == expected, "N_" + to_string(i) + " = " + to_string(_cert.n_sets[i]) + ", recomputed " + to_string(expected));
                        total += _cert.n_sets[i].cardinality();
                    }
                    for (size_t j = 0 ; j < t_h() ; ++j) {
                        Multiset expected;
                        for (size_t i = 0 ; i < t_g() ; ++i)
                            if (classified(i, j, false))
                                expected.add(_cert.partition_g.anchors.at(i));
                        expect(_cert.n_bar_sets[j] == expected, "N̄_" + to_string(j) + " = " + to_string(_cert.n_bar_sets[j]) + ", recomputed " + to_string(expected));
                        total += _cert.n_bar_sets[j].cardinality();
                    }

                    auto lhs = _cert.gamma_g * _cert.gamma_h;
                    expect(_cert.chain.lhs == lhs, "chain.lhs = " + to_string(_cert.chain.lhs) + ", recomputed " + to_string(lhs));
                    expect(_cert.chain.sum_n == total, "chain.sum_n = " + to_string(_cert.chain.sum_n) + ", recomputed " + to_string(total));
                    expect(lhs <= total, to_string(lhs) + " > sum of |N| = " + to_string(total));
                }

                auto check_claim(bool g_side) -> void
                {
                    auto & ys = g_side ? _cert.y_sets : _cert.y_bar_sets;
                    auto & ss = g_side ? _cert.s_sets : _cert.s_bar_sets;
                    auto & zs = g_side ? _cert.z_sets : _cert.z_bar_sets;
                    auto t = g_side ? t_g() : t_h();
                    auto other_t = g_side ? t_h() : t_g();
                    string y_name = g_side ? "Y_" : "Ȳ_", s_name = g_side ? "S_" : "S̄_";
                    auto & other = g_side ? _cert.partition_h : _cert.partition_g;
                    auto & own = g_side ? _cert.partition_g : _cert.partition_h;
                    auto & target = g_side ? _cert.h : _cert.g;
                    auto projection_side = g_side ? Side::onto_h : Side::onto_g;

                    bool shaped = check_sizes(g_side ? "y_sets" : "y_bar_sets", ys.size(), t);
                    shaped = check_sizes(g_side ? "s_sets" : "s_bar_sets", ss.size(), t) && shaped;
                    if (zs)
                        shaped = check_sizes(g_side ? "z_sets" : "z_bar_sets", zs->size(), t) && shaped;
                    if (! shaped)
                        return;

                    for (size_t x = 0 ; x < t ; ++x) {
                        Multiset expected_y, expected_z;
                        for (size_t o = 0 ; o < other_t ; ++o) {
                            auto i = g_side ? x : o, j = g_side ? o : x;
                            if (! classified(i, j, g_side))
                                continue;
                            for (auto y : other.blocks.at(o))
                                expected_y.add(y);
                            if (zs)
                                expected_z = multiset_union(expected_z, block_product(_pg, _cert.partition_g.blocks.at(i), _cert.partition_h.blocks.at(j)));
                        }
                        auto label = to_string(x);
                        expect(ys[x] == expected_y, y_name + label + " = " + to_string(ys[x]) + ", recomputed " + to_string(expected_y));
                        if (zs) {
                            expect((*zs)[x] == expected_z, (g_side ? "Z_" : "Z̄_") + label + " differs from its recomputation");
                            expect(phi_projection(_pg, (*zs)[x], projection_side) == ys[x], y_name + label + " is not the Φ-projection of its Z set");
                        }

                        auto strip = g_side ? strip_multiset_g(_pg, _cert.d_k, own.blocks.at(x), _cert.k)
                            : strip_multiset_h(_pg, _cert.d_k, own.blocks.at(x), _cert.k);
                        expect(is_submultiset(ss[x], strip), s_name + label + " is not contained in D_k restricted to its strip");

                        auto projected = psi_projection(_pg, ss[x], projection_side);
                        expect(dominates(target, projected, ys[x]), "Ψ(" + s_name + label + ") = " + to_string(projected)
                                + " does not dominate " + y_name + label + " = " + to_string(ys[x]));
                    }
                }

                auto check_claims() -> void
                {
                    check_claim(true);
                    check_claim(false);
                }

                auto check_strip_bounds() -> void
                {
                    auto side = [&] (const vector<Multiset> & ss, const vector<Count> & sizes, const vector<Multiset> & ns, const string & s_name, const string & n_name) {
                        if (! check_sizes(s_name + " sizes", sizes.size(), ss.size()) || ! check_sizes(n_name + " sets", ns.size(), ss.size()))
                            return;
                        for (size_t x = 0 ; x < ss.size() ; ++x) {
                            auto label = to_string(x);
                            expect(sizes[x] == ss[x].cardinality(), "|" + s_name + label + "| stored as " + to_string(sizes[x]) + " but the set has " + to_string(ss[x].cardinality()));
                            expect(sizes[x] >= ns[x].cardinality(), "|" + s_name + label + "| = " + to_string(sizes[x]) + " < |" + n_name + label + "| = " + to_string(ns[x].cardinality()));
                        }
                    };
                    side(_cert.s_sets, _cert.s_sizes, _cert.n_sets, "S_", "N_");
                    side(_cert.s_bar_sets, _cert.s_bar_sizes, _cert.n_bar_sets, "S̄_", "N̄_");
                }

                auto check_strip_sums() -> void
                {
                    auto expected = _cert.k * _cert.d_k.cardinality();
                    auto sum_s = sum_cardinalities(_cert.s_sets), sum_s_bar = sum_cardinalities(_cert.s_bar_sets);
                    expect(sum_s == expected, "sum |S_i| = " + to_string(sum_s) + ", k|D_k| = " + to_string(expected));
                    expect(sum_s_bar == expected, "sum |S̄_j| = " + to_string(sum_s_bar) + ", k|D_k| = " + to_string(expected));
                    expect(_cert.chain.sum_s == sum_s + sum_s_bar, "chain.sum_s = " + to_string(_cert.chain.sum_s) + ", recomputed " + to_string(sum_s + sum_s_bar));
                    auto rhs = 2 * _cert.k * _cert.gamma_gh;
                    expect(_cert.chain.rhs == rhs, "chain.rhs = " + to_string(_cert.chain.rhs) + ", recomputed " + to_string(rhs));
                    expect(sum_s + sum_s_bar == rhs, "sum of strips " + to_string(sum_s + sum_s_bar) + " differs from 2k·gamma = " + to_string(rhs));
                }

                auto check_final() -> void
                {
                    auto & c = _cert.chain;
                    expect(c.lhs == _cert.gamma_g * _cert.gamma_h, "chain.lhs does not equal gamma_g * gamma_h");
                    expect(c.rhs == 2 * _cert.k * _cert.gamma_gh, "chain.rhs does not equal 2k * gamma_gh");
                    expect(c.lhs <= c.sum_n, "chain.lhs > chain.sum_n");
                    expect(c.sum_n <= c.sum_s, "chain.sum_n > chain.sum_s");
                    expect(c.sum_s == c.rhs, "chain.sum_s != chain.rhs");
                    expect(c.lhs <= c.rhs, to_string(c.lhs) + " > " + to_string(c.rhs));
                }

            public:
                explicit Verifier(const Certificate & cert) :
                    _cert(cert),
                    _pg(cert.g, cert.h)
                {
                }

                auto run() -> VerificationReport
                {
                    using Step = std::pair<const char *, void (Verifier::*)()>;
                    const Step steps[] = {
                        {"witnesses are {k}-dominating with stated sizes", &Verifier::check_witnesses},
                        {"partitions are valid k-partitions", &Verifier::check_partitions},
                        {"dominator assignment is drawn from D_k ∩ N[gh]", &Verifier::check_assignment},
                        {"block matrices and classifications recompute", &Verifier::check_matrices},
                        {"gamma(G)·gamma(H) <= sum |N_i| + sum |N̄_j|", &Verifier::check_block_count},
                        {"Ψ-projections of strips dominate Y_i and Ȳ_j", &Verifier::check_claims},
                        {"|S_i| >= |N_i| and |S̄_j| >= |N̄_j|", &Verifier::check_strip_bounds},
                        {"sum |S_i| = k|D_k| = sum |S̄_j|", &Verifier::check_strip_sums},
                        {"gamma(G)·gamma(H) <= 2k·gamma(G□H)", &Verifier::check_final},
                    };

                    VerificationReport report;
                    int number = 0;
                    for (auto & [name, step] : steps) {
                        auto & check = report.checks.emplace_back();
                        check.number = ++number;
                        check.name = name;
                        _current = &check;
                        try {
                            (this->*step)();
                        }
                        catch (const std::exception & e) {
                            fail(string("malformed data: ") + e.what());
                        }
                    }
                    return report;
                }
        };
    }

    auto verify_certificate(const Certificate & cert) -> VerificationReport
    {
        return Verifier{cert}.run();
    }
}
