#include <kdom/certificate.hh>

#include <json.hpp>

using std::size_t;
using std::string;
using std::vector;

using Json = nlohmann::ordered_json;

namespace kdom
{
    using std::to_string;

    namespace
    {
        auto graph_to_json(const Graph & graph) -> Json
        {
            Json edges = Json::array();
            for (auto & [u, v] : graph.edges())
                edges.push_back({u, v});
            return {{"n", graph.order()}, {"edges", edges}};
        }

        auto multiset_to_json(const Multiset & m) -> Json
        {
            Json result = Json::array();
            for (auto & [x, c] : m)
                result.push_back({x, c});
            return result;
        }

        auto pair_json(const ProductGraph & pg, Id v) -> Json
        {
            return {pg.g_of(v), pg.h_of(v)};
        }

        auto product_multiset_to_json(const ProductGraph & pg, const Multiset & m) -> Json
        {
            Json result = Json::array();
            for (auto & [x, c] : m)
                result.push_back({pair_json(pg, x), c});
            return result;
        }

        auto partition_to_json(const KPartition & p) -> Json
        {
            return {{"anchors", p.anchors}, {"blocks", p.blocks}, {"membership", p.membership}};
        }

        auto sets_to_json(const vector<Multiset> & sets) -> Json
        {
            Json result = Json::array();
            for (auto & s : sets)
                result.push_back(multiset_to_json(s));
            return result;
        }

        auto product_sets_to_json(const ProductGraph & pg, const vector<Multiset> & sets) -> Json
        {
            Json result = Json::array();
            for (auto & s : sets)
                result.push_back(product_multiset_to_json(pg, s));
            return result;
        }
    }

    auto serialize_certificate(const Certificate & cert) -> string
    {
        ProductGraph pg{cert.g, cert.h};
        Json j;
        j["version"] = 1;
        j["k"] = cert.k;
        j["g"] = graph_to_json(cert.g);
        j["h"] = graph_to_json(cert.h);
        j["gamma_g"] = cert.gamma_g;
        j["gamma_h"] = cert.gamma_h;
        j["gamma_gh"] = cert.gamma_gh;
        j["witness_g"] = multiset_to_json(cert.witness_g);
        j["witness_h"] = multiset_to_json(cert.witness_h);
        j["d_k"] = product_multiset_to_json(pg, cert.d_k);
        j["partition_g"] = partition_to_json(cert.partition_g);
        j["partition_h"] = partition_to_json(cert.partition_h);

        Json assignment = Json::array();
        for (Id v = 0 ; v < cert.assignment.dominators.size() ; ++v) {
            Json list = Json::array();
            for (auto d : cert.assignment.dominators[v])
                list.push_back(pair_json(pg, d));
            assignment.push_back({pair_json(pg, v), list});
        }
        j["assignment"] = assignment;

        Json blocks = Json::array();
        for (auto & block : cert.blocks) {
            Json rows = Json::array();
            for (auto & row : block.entries) {
                string text;
                for (auto e : row)
                    text += e ? '1' : '0';
                rows.push_back(text);
            }
            Json cls = Json::array();
            if (block.classification.a)
                cls.push_back("a");
            if (block.classification.b)
                cls.push_back("b");
            blocks.push_back({{"i", block.i}, {"j", block.j}, {"rows", rows}, {"class", cls}});
        }
        j["blocks"] = blocks;

        j["n_sets"] = sets_to_json(cert.n_sets);
        j["n_bar_sets"] = sets_to_json(cert.n_bar_sets);
        j["y_sets"] = sets_to_json(cert.y_sets);
        j["y_bar_sets"] = sets_to_json(cert.y_bar_sets);
        j["s_sizes"] = cert.s_sizes;
        j["s_bar_sizes"] = cert.s_bar_sizes;
        j["s_sets"] = product_sets_to_json(pg, cert.s_sets);
        j["s_bar_sets"] = product_sets_to_json(pg, cert.s_bar_sets);
        if (cert.z_sets)
            j["z_sets"] = product_sets_to_json(pg, *cert.z_sets);
        if (cert.z_bar_sets)
            j["z_bar_sets"] = product_sets_to_json(pg, *cert.z_bar_sets);
        j["chain"] = {{"lhs", cert.chain.lhs}, {"sum_n", cert.chain.sum_n}, {"sum_s", cert.chain.sum_s}, {"rhs", cert.chain.rhs}};
        return j.dump() + "\n";
    }

    namespace
    {
        class Reader
        {
            private:
                const Json & _root;

            public:
                explicit Reader(const Json & root) :
                    _root(root)
                {
                }

                static auto child_path(const string & path, const string & key) -> string
                {
                    return path + "." + key;
                }

                static auto index_path(const string & path, size_t i) -> string
                {
                    return path + "[" + to_string(i) + "]";
                }

                static auto field(const Json & object, const string & path, const string & key) -> const Json &
                {
                    if (! object.is_object())
                        throw SchemaError(path, "expected an object");
                    auto it = object.find(key);
                    if (it == object.end())
                        throw SchemaError(child_path(path, key), "missing field");
                    return *it;
                }

                static auto array(const Json & value, const string & path) -> const Json &
                {
                    if (! value.is_array())
                        throw SchemaError(path, "expected an array");
                    return value;
                }

                static auto number(const Json & value, const string & path) -> Count
                {
                    if (! value.is_number_unsigned())
                        throw SchemaError(path, "expected a nonnegative integer");
                    return value.get<Count>();
                }

                static auto id(const Json & value, const string & path, size_t limit) -> Id
                {
                    auto result = number(value, path);
                    if (result >= limit)
                        throw SchemaError(path, "vertex " + to_string(result) + " out of range (order " + to_string(limit) + ")");
                    return result;
                }

                static auto graph(const Json & value, const string & path) -> Graph
                {
                    auto n = number(field(value, path, "n"), child_path(path, "n"));
                    auto edges_path = child_path(path, "edges");
                    auto & edges = array(field(value, path, "edges"), edges_path);
                    Graph result(n);
                    for (size_t e = 0 ; e < edges.size() ; ++e) {
                        auto p = index_path(edges_path, e);
                        auto & edge = array(edges[e], p);
                        if (edge.size() != 2)
                            throw SchemaError(p, "expected [u, v]");
                        try {
                            result.add_edge(id(edge[0], index_path(p, 0), n), id(edge[1], index_path(p, 1), n));
                        }
                        catch (const GraphError & err) {
                            throw SchemaError(p, err.what());
                        }
                    }
                    return result;
                }

                template <typename ElementReader_>
                static auto counted(const Json & value, const string & path, ElementReader_ element) -> Multiset
                {
                    Multiset result;
                    auto & entries = array(value, path);
                    for (size_t e = 0 ; e < entries.size() ; ++e) {
                        auto p = index_path(path, e);
                        auto & entry = array(entries[e], p);
                        if (entry.size() != 2)
                            throw SchemaError(p, "expected [element, multiplicity]");
                        auto x = element(entry[0], index_path(p, 0));
                        auto c = number(entry[1], index_path(p, 1));
                        if (c == 0)
                            throw SchemaError(index_path(p, 1), "multiplicity must be positive");
                        if (result.count(x) != 0)
                            throw SchemaError(index_path(p, 0), "element listed twice");
                        result.add(x, c);
                    }
                    return result;
                }

                static auto multiset(const Json & value, const string & path, size_t order) -> Multiset
                {
                    return counted(value, path, [&] (const Json & v, const string & p) { return id(v, p, order); });
                }

                static auto product_vertex(const ProductGraph & pg, const Json & value, const string & path) -> Id
                {
                    auto & pair = array(value, path);
                    if (pair.size() != 2)
                        throw SchemaError(path, "expected [g, h]");
                    return pg.index(id(pair[0], index_path(path, 0), pg.g().order()), id(pair[1], index_path(path, 1), pg.h().order()));
                }

                static auto product_multiset(const ProductGraph & pg, const Json & value, const string & path) -> Multiset
                {
                    return counted(value, path, [&] (const Json & v, const string & p) { return product_vertex(pg, v, p); });
                }

                static auto id_list(const Json & value, const string & path, size_t limit) -> vector<Id>
                {
                    vector<Id> result;
                    auto & entries = array(value, path);
                    for (size_t e = 0 ; e < entries.size() ; ++e)
                        result.push_back(id(entries[e], index_path(path, e), limit));
                    return result;
                }

                static auto partition(const Json & value, const string & path, const Graph & graph, Count k) -> KPartition
                {
                    KPartition result;
                    result.k = k;
                    result.anchors = id_list(field(value, path, "anchors"), child_path(path, "anchors"), graph.order());
                    auto blocks_path = child_path(path, "blocks");
                    auto & blocks = array(field(value, path, "blocks"), blocks_path);
                    for (size_t b = 0 ; b < blocks.size() ; ++b)
                        result.blocks.push_back(id_list(blocks[b], index_path(blocks_path, b), graph.order()));

                    if (value.contains("membership")) {
                        auto m_path = child_path(path, "membership");
                        auto & lists = array(value["membership"], m_path);
                        for (size_t v = 0 ; v < lists.size() ; ++v)
                            result.membership.push_back(id_list(lists[v], index_path(m_path, v), result.blocks.size()));
                    }
                    else
                        result.membership = membership_from_blocks(graph.order(), result.blocks);
                    return result;
                }

                static auto set_list(const Json & value, const string & path, size_t order) -> vector<Multiset>
                {
                    vector<Multiset> result;
                    auto & entries = array(value, path);
                    for (size_t e = 0 ; e < entries.size() ; ++e)
                        result.push_back(multiset(entries[e], index_path(path, e), order));
                    return result;
                }

                static auto product_set_list(const ProductGraph & pg, const Json & value, const string & path) -> vector<Multiset>
                {
                    vector<Multiset> result;
                    auto & entries = array(value, path);
                    for (size_t e = 0 ; e < entries.size() ; ++e)
                        result.push_back(product_multiset(pg, entries[e], index_path(path, e)));
                    return result;
                }

                static auto counts(const Json & value, const string & path) -> vector<Count>
                {
                    vector<Count> result;
                    auto & entries = array(value, path);
                    for (size_t e = 0 ; e < entries.size() ; ++e)
                        result.push_back(number(entries[e], index_path(path, e)));
                    return result;
                }

                auto read() -> Certificate
                {
                    const string root = "$";
                    auto get = [&] (const string & key) -> const Json & { return field(_root, root, key); };
                    auto path = [&] (const string & key) { return child_path(root, key); };

                    if (number(get("version"), path("version")) != 1)
                        throw SchemaError(path("version"), "unsupported version");

                    Certificate cert;
                    cert.k = number(get("k"), path("k"));
                    if (cert.k == 0)
                        throw SchemaError(path("k"), "k must be positive");
                    cert.g = graph(get("g"), path("g"));
                    cert.h = graph(get("h"), path("h"));
                    ProductGraph pg{cert.g, cert.h};
                    auto n_gh = pg.graph().order();

                    cert.gamma_g = number(get("gamma_g"), path("gamma_g"));
                    cert.gamma_h = number(get("gamma_h"), path("gamma_h"));
                    cert.gamma_gh = number(get("gamma_gh"), path("gamma_gh"));
                    cert.witness_g = multiset(get("witness_g"), path("witness_g"), cert.g.order());
                    cert.witness_h = multiset(get("witness_h"), path("witness_h"), cert.h.order());
                    cert.d_k = product_multiset(pg, get("d_k"), path("d_k"));
                    cert.partition_g = partition(get("partition_g"), path("partition_g"), cert.g, cert.k);
                    cert.partition_h = partition(get("partition_h"), path("partition_h"), cert.h, cert.k);

                    auto & assignment = array(get("assignment"), path("assignment"));
                    cert.assignment.dominators.assign(n_gh, {});
                    vector<char> seen(n_gh, 0);
                    for (size_t e = 0 ; e < assignment.size() ; ++e) {
                        auto p = index_path(path("assignment"), e);
                        auto & entry = array(assignment[e], p);
                        if (entry.size() != 2)
                            throw SchemaError(p, "expected [[g,h], [dominators]]");
                        auto v = product_vertex(pg, entry[0], index_path(p, 0));
                        if (seen[v])
                            throw SchemaError(index_path(p, 0), "vertex listed twice");
                        seen[v] = 1;
                        auto list_path = index_path(p, 1);
                        auto & list = array(entry[1], list_path);
                        for (size_t d = 0 ; d < list.size() ; ++d)
                            cert.assignment.dominators[v].push_back(product_vertex(pg, list[d], index_path(list_path, d)));
                    }

                    auto & blocks = array(get("blocks"), path("blocks"));
                    for (size_t b = 0 ; b < blocks.size() ; ++b) {
                        auto p = index_path(path("blocks"), b);
                        auto & entry = blocks[b];
                        BlockMatrix block;
                        block.i = id(field(entry, p, "i"), child_path(p, "i"), cert.partition_g.blocks.size());
                        block.j = id(field(entry, p, "j"), child_path(p, "j"), cert.partition_h.blocks.size());
                        auto rows_path = child_path(p, "rows");
                        auto & rows = array(field(entry, p, "rows"), rows_path);
                        for (size_t r = 0 ; r < rows.size() ; ++r) {
                            auto rp = index_path(rows_path, r);
                            if (! rows[r].is_string())
                                throw SchemaError(rp, "expected a 0/1 string");
                            auto & row = block.entries.emplace_back();
                            for (char c : rows[r].get<string>()) {
                                if (c != '0' && c != '1')
                                    throw SchemaError(rp, "expected only '0' and '1'");
                                row.push_back(c == '1' ? 1 : 0);
                            }
                        }
                        auto class_path = child_path(p, "class");
                        auto & cls = array(field(entry, p, "class"), class_path);
                        for (size_t c = 0 ; c < cls.size() ; ++c) {
                            auto cp = index_path(class_path, c);
                            if (cls[c] == "a")
                                block.classification.a = true;
                            else if (cls[c] == "b")
                                block.classification.b = true;
                            else
                                throw SchemaError(cp, "expected \"a\" or \"b\"");
                        }
                        cert.blocks.push_back(std::move(block));
                    }

                    cert.n_sets = set_list(get("n_sets"), path("n_sets"), cert.h.order());
                    cert.n_bar_sets = set_list(get("n_bar_sets"), path("n_bar_sets"), cert.g.order());
                    cert.y_sets = set_list(get("y_sets"), path("y_sets"), cert.h.order());
                    cert.y_bar_sets = set_list(get("y_bar_sets"), path("y_bar_sets"), cert.g.order());
                    cert.s_sizes = counts(get("s_sizes"), path("s_sizes"));
                    cert.s_bar_sizes = counts(get("s_bar_sizes"), path("s_bar_sizes"));

                    // Strip multisets are optional; when absent they are rebuilt from D_k
                    // and the partitions, and s_sizes is still checked against them.
                    if (_root.contains("s_sets"))
                        cert.s_sets = product_set_list(pg, _root["s_sets"], path("s_sets"));
                    else
                        for (auto & block : cert.partition_g.blocks)
                            cert.s_sets.push_back(strip_multiset_g(pg, cert.d_k, block, cert.k));
                    if (_root.contains("s_bar_sets"))
                        cert.s_bar_sets = product_set_list(pg, _root["s_bar_sets"], path("s_bar_sets"));
                    else
                        for (auto & block : cert.partition_h.blocks)
                            cert.s_bar_sets.push_back(strip_multiset_h(pg, cert.d_k, block, cert.k));

                    if (_root.contains("z_sets"))
                        cert.z_sets = product_set_list(pg, _root["z_sets"], path("z_sets"));
                    if (_root.contains("z_bar_sets"))
                        cert.z_bar_sets = product_set_list(pg, _root["z_bar_sets"], path("z_bar_sets"));

                    auto & chain = get("chain");
                    auto chain_path = path("chain");
                    cert.chain.lhs = number(field(chain, chain_path, "lhs"), child_path(chain_path, "lhs"));
                    cert.chain.sum_n = number(field(chain, chain_path, "sum_n"), child_path(chain_path, "sum_n"));
                    cert.chain.sum_s = number(field(chain, chain_path, "sum_s"), child_path(chain_path, "sum_s"));
                    cert.chain.rhs = number(field(chain, chain_path, "rhs"), child_path(chain_path, "rhs"));
                    return cert;
                }
        };
    }

    auto parse_certificate(const string & text) -> Certificate
    {
        Json root;
        try {
            root = Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw SchemaError("$", string("invalid JSON: ") + e.what());
        }
        return Reader{root}.read();
    }
}
