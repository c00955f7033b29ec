/* vim: set sw=4 sts=4 et : */

#include <loose3/canon.hpp>

#include <algorithm>
#include <array>
#include <set>

namespace loose3
{
    namespace
    {
        using Colouring = std::array<int, max_vertices>;

        struct Structure
        {
            int n;
            std::vector<VertexMask> masks;
            std::array<std::vector<std::pair<int, int>>, max_vertices> links;
            std::vector<int> twin;

            explicit Structure(const Hypergraph3 & h) :
                n(h.n()),
                masks(h.edge_masks()),
                twin(twin_classes(h))
            {
                for (auto m : masks) {
                    auto e = Edge::from_mask(m);
                    links[e.v[0]].emplace_back(e.v[1], e.v[2]);
                    links[e.v[1]].emplace_back(e.v[0], e.v[2]);
                    links[e.v[2]].emplace_back(e.v[0], e.v[1]);
                }
            }
        };

        auto count_colours(const Colouring & c, int n) -> int
        {
            int k = 0;
            for (int v = 0 ; v < n ; ++v)
                k = std::max(k, c[v] + 1);
            return k;
        }

        // Equitable-style refinement: a vertex's new colour is its old colour
        // followed by the histogram of colour pairs over its link.
        auto refine(const Structure & s, Colouring & colours) -> void
        {
            int n = s.n;
            int k = count_colours(colours, n);
            std::array<std::vector<int>, max_vertices> signature;

            while (k < n) {
                for (int v = 0 ; v < n ; ++v) {
                    auto & sig = signature[v];
                    sig.assign(static_cast<std::size_t>(k * k) + 1, 0);
                    sig[0] = colours[v];
                    for (auto & [a, b] : s.links[v]) {
                        int ca = colours[a], cb = colours[b];
                        if (ca > cb)
                            std::swap(ca, cb);
                        ++sig[1 + ca * k + cb];
                    }
                }

                std::array<int, max_vertices> order{};
                for (int v = 0 ; v < n ; ++v)
                    order[v] = v;
                std::sort(order.begin(), order.begin() + n, [&] (int a, int b) {
                        return signature[a] < signature[b];
                        });

                int next = 0;
                for (int i = 0 ; i < n ; ++i) {
                    if (i > 0 && signature[order[i]] != signature[order[i - 1]])
                        ++next;
                    colours[order[i]] = next;
                }

                int new_k = next + 1;
                if (new_k == k)
                    break;
                k = new_k;
            }
        }

        auto relabelled_bits(const Structure & s, const Colouring & perm) -> EdgeSet
        {
            EdgeSet result;
            for (auto m : s.masks) {
                std::array<int, 3> v{};
                int i = 0;
                for (auto w = m ; w ; w &= w - 1)
                    v[i++] = perm[std::countr_zero(w)];
                if (v[0] > v[1]) std::swap(v[0], v[1]);
                if (v[1] > v[2]) std::swap(v[1], v[2]);
                if (v[0] > v[1]) std::swap(v[0], v[1]);
                result.set(triple_rank(v[0], v[1], v[2]));
            }
            return result;
        }

        struct Search
        {
            const Structure & s;
            bool have_best = false;
            EdgeSet best;
            Colouring best_perm{};

            auto leaf(const Colouring & colours) -> void
            {
                auto bits = relabelled_bits(s, colours);
                if (! have_best || bits < best) {
                    have_best = true;
                    best = bits;
                    best_perm = colours;
                }
            }

            auto descend(Colouring colours) -> void
            {
                refine(s, colours);
                int n = s.n;

                int k = count_colours(colours, n);
                if (k == n) {
                    leaf(colours);
                    return;
                }

                // first non-singleton cell
                std::array<int, max_vertices> size{};
                for (int v = 0 ; v < n ; ++v)
                    ++size[colours[v]];
                int target = 0;
                while (size[target] == 1)
                    ++target;

                std::array<bool, max_vertices> twin_seen{};
                for (int u = 0 ; u < n ; ++u) {
                    if (colours[u] != target)
                        continue;
                    // twins in one cell give identical subtrees
                    if (twin_seen[s.twin[u]])
                        continue;
                    twin_seen[s.twin[u]] = true;

                    auto child = colours;
                    for (int w = 0 ; w < n ; ++w)
                        if (child[w] > target || (child[w] == target && w != u))
                            ++child[w];
                    descend(child);
                }
            }
        };

        auto hex_digits(int n) -> int
        {
            return std::max(1, (slot_count(n) + 3) / 4);
        }
    }

    auto twin_classes(const Hypergraph3 & h) -> std::vector<int>
    {
        int n = h.n();
        // link of each vertex as a bitset over the C(n, 2) pair slots
        std::vector<std::array<std::uint64_t, 2>> link(n, { 0, 0 });
        auto pair_index = [] (int a, int b) { if (a > b) std::swap(a, b); return b * (b - 1) / 2 + a; };
        for (auto & e : h.edges()) {
            auto put = [&] (int v, int a, int b) {
                int p = pair_index(a, b);
                link[v][p >> 6] |= std::uint64_t{1} << (p & 63);
            };
            put(e.v[0], e.v[1], e.v[2]);
            put(e.v[1], e.v[0], e.v[2]);
            put(e.v[2], e.v[0], e.v[1]);
        }

        std::vector<std::array<std::uint64_t, 2>> touching(n, { 0, 0 });
        for (int v = 0 ; v < n ; ++v)
            for (int w = 0 ; w < n ; ++w)
                if (w != v) {
                    int p = pair_index(v, w);
                    touching[v][p >> 6] |= std::uint64_t{1} << (p & 63);
                }

        std::vector<int> cls(n, -1);
        int next = 0;
        for (int u = 0 ; u < n ; ++u) {
            if (cls[u] >= 0)
                continue;
            cls[u] = next;
            for (int v = u + 1 ; v < n ; ++v) {
                if (cls[v] >= 0)
                    continue;
                bool same = true;
                for (int i = 0 ; i < 2 && same ; ++i) {
                    auto mask = ~(touching[u][i] | touching[v][i]);
                    same = (link[u][i] & mask) == (link[v][i] & mask);
                }
                if (same)
                    cls[v] = next;
            }
            ++next;
        }
        return cls;
    }

    auto canonical_labeling(const Hypergraph3 & h) -> std::vector<int>
    {
        Structure s(h);
        Search search{ s, false, {}, {} };
        Colouring initial{};
        search.descend(initial);
        return std::vector<int>(search.best_perm.begin(), search.best_perm.begin() + h.n());
    }

    auto canonical_form(const Hypergraph3 & h) -> Hypergraph3
    {
        Structure s(h);
        Search search{ s, false, {}, {} };
        Colouring initial{};
        search.descend(initial);
        return Hypergraph3(h.n(), search.best);
    }

    auto canonical_key(const Hypergraph3 & h) -> CanonicalKey
    {
        return CanonicalKey{ h.n(), canonical_form(h).bits() };
    }

    auto are_isomorphic(const Hypergraph3 & a, const Hypergraph3 & b) -> bool
    {
        if (a.n() != b.n())
            throw GraphError("isomorphism test needs equal vertex counts");
        if (a.size() != b.size())
            return false;
        auto da = a.degrees(), db = b.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;
        return canonical_key(a) == canonical_key(b);
    }

    auto dedupe(std::span<const Hypergraph3> graphs) -> std::vector<Hypergraph3>
    {
        std::set<CanonicalKey> seen;
        std::vector<Hypergraph3> result;
        for (auto & g : graphs)
            if (seen.insert(canonical_key(g)).second)
                result.push_back(g);
        return result;
    }

    auto CanonicalKey::to_string() const -> std::string
    {
        static const char digits[] = "0123456789abcdef";
        int width = hex_digits(n);
        std::string hex(width, '0');
        for (int d = 0 ; d < width ; ++d) {
            int nibble = 0;
            for (int b = 0 ; b < 4 ; ++b) {
                int slot = d * 4 + b;
                if (slot < max_slots && bits.test(slot))
                    nibble |= 1 << b;
            }
            hex[width - 1 - d] = digits[nibble];
        }
        return std::to_string(n) + ":" + hex;
    }

    auto CanonicalKey::from_string(const std::string & s) -> CanonicalKey
    {
        auto colon = s.find(':');
        if (colon == std::string::npos || colon == 0)
            throw GraphError("canonical key must look like n:hex");
        CanonicalKey key;
        try {
            key.n = std::stoi(s.substr(0, colon));
        }
        catch (const std::exception &) {
            throw GraphError("canonical key has a bad vertex count");
        }
        if (key.n < 1 || key.n > max_vertices)
            throw GraphError("canonical key vertex count out of range");
        auto hex = s.substr(colon + 1);
        if (static_cast<int>(hex.size()) != hex_digits(key.n))
            throw GraphError("canonical key has the wrong hex width");
        int limit = slot_count(key.n);
        for (int d = 0 ; d < static_cast<int>(hex.size()) ; ++d) {
            char c = hex[hex.size() - 1 - d];
            int nibble;
            if (c >= '0' && c <= '9')
                nibble = c - '0';
            else if (c >= 'a' && c <= 'f')
                nibble = c - 'a' + 10;
            else
                throw GraphError("canonical key has a non-hex digit");
            for (int b = 0 ; b < 4 ; ++b)
                if (nibble & (1 << b)) {
                    int slot = d * 4 + b;
                    if (slot >= limit)
                        throw GraphError("canonical key sets a slot beyond C(n, 3)");
                    key.bits.set(slot);
                }
        }
        return key;
    }
}
