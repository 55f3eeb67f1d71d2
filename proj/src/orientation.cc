#include <wordrep/errors.hh>
#include <wordrep/orientation.hh>

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

using std::nullopt;
using std::optional;
using std::size_t;
using std::uint64_t;
using std::vector;

using namespace wordrep;

PartialOrientation::PartialOrientation(const LabeledGraph & g) :
    _graph(&g),
    _states(g.edge_count(), EdgeState::Unset)
{
}

auto PartialOrientation::direction(VertexId a, VertexId b) const -> int
{
    auto e = _graph->edge_index(a, b);
    if (! e)
        throw std::invalid_argument("not an edge: " + _graph->label(a) + "-" + _graph->label(b));
    auto s = static_cast<int>(_states[*e]);
    return a < b ? s : -s;
}

auto PartialOrientation::has_arc(VertexId a, VertexId b) const -> bool
{
    return _graph->adjacent(a, b) && direction(a, b) == 1;
}

auto PartialOrientation::set(Arc arc) -> void
{
    auto e = _graph->edge_index(arc.tail, arc.head);
    if (! e)
        throw std::invalid_argument("not an edge: " + _graph->label(arc.tail) + "-" + _graph->label(arc.head));
    auto wanted = arc.tail < arc.head ? EdgeState::AsStored : EdgeState::Reversed;
    if (_states[*e] != EdgeState::Unset && _states[*e] != wanted)
        throw OrientationConflict("arc " + _graph->label(arc.tail) + "->" + _graph->label(arc.head) + " conflicts with existing orientation");
    _states[*e] = wanted;
}

auto PartialOrientation::is_complete() const -> bool
{
    return std::none_of(_states.begin(), _states.end(), [](EdgeState s) { return s == EdgeState::Unset; });
}

auto PartialOrientation::unset_count() const -> size_t
{
    return std::count(_states.begin(), _states.end(), EdgeState::Unset);
}

auto PartialOrientation::arcs() const -> vector<Arc>
{
    vector<Arc> result;
    for (size_t i = 0; i < _states.size(); ++i) {
        auto & e = _graph->edges()[i];
        if (_states[i] == EdgeState::AsStored)
            result.push_back(Arc{e.u, e.v});
        else if (_states[i] == EdgeState::Reversed)
            result.push_back(Arc{e.v, e.u});
    }
    return result;
}

Orientation::Orientation(const LabeledGraph & g, vector<bool> reversed) :
    _graph(&g),
    _reversed(std::move(reversed))
{
    if (_reversed.size() != g.edge_count())
        throw std::invalid_argument("orientation size does not match edge count");
}

auto Orientation::from_arcs(const LabeledGraph & g, const vector<Arc> & arcs) -> Orientation
{
    PartialOrientation po(g);
    for (auto & a : arcs)
        po.set(a);
    return from_partial(po);
}

auto Orientation::from_partial(const PartialOrientation & po) -> Orientation
{
    vector<bool> reversed;
    for (auto s : po.states()) {
        if (s == EdgeState::Unset)
            throw std::invalid_argument("orientation leaves an edge unset");
        reversed.push_back(s == EdgeState::Reversed);
    }
    return Orientation(po.graph(), std::move(reversed));
}

auto Orientation::has_arc(VertexId a, VertexId b) const -> bool
{
    auto e = _graph->edge_index(a, b);
    if (! e)
        return false;
    return (a < b) != _reversed[*e];
}

auto Orientation::arcs() const -> vector<Arc>
{
    vector<Arc> result;
    for (size_t i = 0; i < _reversed.size(); ++i) {
        auto & e = _graph->edges()[i];
        result.push_back(_reversed[i] ? Arc{e.v, e.u} : Arc{e.u, e.v});
    }
    return result;
}

auto Orientation::reverse() const -> Orientation
{
    vector<bool> flipped(_reversed.size());
    for (size_t i = 0; i < flipped.size(); ++i)
        flipped[i] = ! _reversed[i];
    return Orientation(*_graph, std::move(flipped));
}

auto Orientation::out_neighbours() const -> vector<VertexSet>
{
    auto n = _graph->size();
    vector<VertexSet> out(n, VertexSet(n));
    for (auto & a : arcs())
        out[a.tail].set(a.head);
    return out;
}

namespace
{
    auto acyclic(const vector<VertexSet> & out) -> bool
    {
        auto n = out.size();
        vector<size_t> indegree(n, 0);
        for (auto & o : out)
            o.for_each([&](size_t w) { ++indegree[w]; });

        vector<size_t> ready;
        for (size_t v = 0; v < n; ++v)
            if (indegree[v] == 0)
                ready.push_back(v);

        size_t removed = 0;
        while (! ready.empty()) {
            auto v = ready.back();
            ready.pop_back();
            ++removed;
            out[v].for_each([&](size_t w) {
                if (--indegree[w] == 0)
                    ready.push_back(w);
            });
        }
        return removed == n;
    }

    // Breadth-first directed path from `from` to `to` over `out`; assumes one exists.
    auto directed_path(const vector<VertexSet> & out, size_t from, size_t to) -> vector<VertexId>
    {
        auto n = out.size();
        vector<long> parent(n, -1);
        vector<size_t> queue{from};
        parent[from] = static_cast<long>(from);
        for (size_t head = 0; head < queue.size() && parent[to] < 0; ++head) {
            auto x = queue[head];
            out[x].for_each([&](size_t w) {
                if (parent[w] < 0) {
                    parent[w] = static_cast<long>(x);
                    queue.push_back(w);
                }
            });
        }
        vector<VertexId> path;
        for (auto x = to; x != from; x = static_cast<size_t>(parent[x]))
            path.push_back(static_cast<VertexId>(x));
        path.push_back(static_cast<VertexId>(from));
        std::reverse(path.begin(), path.end());
        return path;
    }

    // Reports the defect with the largest j, then the smallest i.
    auto report_latest_pair(const vector<VertexSet> & out, ShortcutWitness & w) -> void
    {
        auto & p = w.path;
        auto k = p.size() - 1;
        for (size_t j = k; j >= 2; --j)
            for (size_t i = 0; i + 1 < j; ++i) {
                if (i == 0 && j == k)
                    continue;
                if (! out[p[i]].test(p[j])) {
                    w.i = i;
                    w.j = j;
                    w.backward = out[p[j]].test(p[i]);
                    return;
                }
            }
    }

    // For each arc u -> v, walks simple directed u ~> v paths depth first, checking every new
    // vertex against the path so far; the first chord that is not a forward arc is a shortcut.
    auto shortcut(const vector<VertexSet> & out) -> optional<ShortcutWitness>
    {
        auto n = out.size();
        vector<VertexSet> in(n, VertexSet(n));
        for (size_t v = 0; v < n; ++v)
            out[v].for_each([&](size_t w) { in[w].set(v); });

        optional<ShortcutWitness> found;
        VertexSet reaches_target(n);
        vector<VertexId> path;
        vector<size_t> stack;

        for (size_t u = 0; u < n && ! found; ++u) {
            for (size_t v = out[u].first(); v != VertexSet::npos && ! found; v = out[u].next(v)) {
                reaches_target.clear();
                reaches_target.set(v);
                stack.assign(1, v);
                while (! stack.empty()) {
                    auto x = stack.back();
                    stack.pop_back();
                    in[x].for_each([&](size_t y) {
                        if (! reaches_target.test(y)) {
                            reaches_target.set(y);
                            stack.push_back(y);
                        }
                    });
                }

                path.assign(1, static_cast<VertexId>(u));
                std::function<bool(size_t)> explore = [&](size_t x) -> bool {
                    for (size_t w = out[x].first(); w != VertexSet::npos; w = out[x].next(w)) {
                        if (! reaches_target.test(w))
                            continue;
                        if (x == u && w == v)
                            continue;
                        for (size_t i = 0; i + 1 < path.size(); ++i) {
                            if (i == 0 && w == v)
                                continue;
                            if (! out[path[i]].test(w)) {
                                ShortcutWitness witness;
                                witness.path = path;
                                witness.i = i;
                                witness.j = path.size();
                                witness.backward = out[w].test(path[i]);
                                auto tail = directed_path(out, w, v);
                                witness.path.insert(witness.path.end(), tail.begin(), tail.end());
                                report_latest_pair(out, witness);
                                found = std::move(witness);
                                return true;
                            }
                        }
                        if (w == v)
                            continue;
                        path.push_back(static_cast<VertexId>(w));
                        if (explore(w))
                            return true;
                        path.pop_back();
                    }
                    return false;
                };
                explore(u);
            }
        }
        return found;
    }

    auto out_from_counter(const LabeledGraph & g, uint64_t counter, vector<VertexSet> & out) -> void
    {
        for (auto & o : out)
            o.clear();
        auto & edges = g.edges();
        for (size_t i = 0; i < edges.size(); ++i) {
            if ((counter >> i) & 1)
                out[edges[i].v].set(edges[i].u);
            else
                out[edges[i].u].set(edges[i].v);
        }
    }
}

auto wordrep::is_acyclic(const Orientation & o) -> bool
{
    return acyclic(o.out_neighbours());
}

auto wordrep::find_shortcut(const Orientation & o) -> optional<ShortcutWitness>
{
    auto out = o.out_neighbours();
    if (! acyclic(out))
        throw CyclicInput();
    return shortcut(out);
}

auto wordrep::is_semitransitive(const Orientation & o) -> bool
{
    auto out = o.out_neighbours();
    return acyclic(out) && ! shortcut(out);
}

auto wordrep::witness_replays(const Orientation & o, const ShortcutWitness & w) -> bool
{
    auto & p = w.path;
    if (p.size() < 3 || w.i >= w.j || w.j >= p.size() || (w.i == 0 && w.j == p.size() - 1))
        return false;
    for (size_t k = 0; k + 1 < p.size(); ++k)
        if (! o.has_arc(p[k], p[k + 1]))
            return false;
    if (! o.has_arc(p.front(), p.back()))
        return false;
    auto & g = o.graph();
    if (w.backward)
        return o.has_arc(p[w.j], p[w.i]);
    return ! g.adjacent(p[w.i], p[w.j]);
}

auto wordrep::brute_force_semitransitive(const LabeledGraph & g, uint64_t budget, unsigned jobs) -> OracleVerdict
{
    auto m = g.edge_count();
    if (m >= 63 || (uint64_t{1} << m) > budget)
        return OracleVerdict{OracleOutcome::BudgetExceeded, nullopt, 0};

    uint64_t total = uint64_t{1} << m;
    constexpr uint64_t chunk = uint64_t{1} << 14;
    std::atomic<uint64_t> next_chunk{0};
    std::atomic<uint64_t> best{std::numeric_limits<uint64_t>::max()};
    std::atomic<uint64_t> examined{0};

    auto worker = [&]() {
        vector<VertexSet> out(g.size(), VertexSet(g.size()));
        while (true) {
            auto start = next_chunk.fetch_add(chunk);
            if (start >= total || start > best.load())
                return;
            auto end = std::min(total, start + chunk);
            uint64_t local = 0;
            for (auto c = start; c < end; ++c) {
                ++local;
                out_from_counter(g, c, out);
                if (acyclic(out) && ! shortcut(out)) {
                    auto prev = best.load();
                    while (c < prev && ! best.compare_exchange_weak(prev, c)) {
                    }
                    break;
                }
            }
            examined += local;
        }
    };

    jobs = std::max(1u, jobs);
    if (jobs == 1)
        worker();
    else {
        vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }

    if (best.load() == std::numeric_limits<uint64_t>::max())
        return OracleVerdict{OracleOutcome::NotExists, nullopt, examined.load()};

    vector<bool> reversed(m);
    for (size_t i = 0; i < m; ++i)
        reversed[i] = (best.load() >> i) & 1;
    return OracleVerdict{OracleOutcome::Exists, Orientation(g, std::move(reversed)), examined.load()};
}
