#include <wordrep/errors.hh>
#include <wordrep/solver.hh>
#include <wordrep/words.hh>

#include <algorithm>
#include <deque>
#include <map>

using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

using namespace wordrep;

namespace
{
    struct CycleInfo
    {
        vector<VertexId> vertices;
        vector<std::uint32_t> edges;
        vector<std::int8_t> sign; ///< +1 if vertices[i] -> vertices[i+1] is the stored direction of edge i
    };

    auto is_clique(const LabeledGraph & g, const vector<VertexId> & vs) -> bool
    {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (! g.adjacent(vs[i], vs[j]))
                    return false;
        return true;
    }

    /// Non-clique cycles of length 4..max_length, each once.
    auto enumerate_cycles(const LabeledGraph & g, unsigned max_length) -> vector<CycleInfo>
    {
        vector<CycleInfo> result;
        vector<VertexId> path;
        vector<bool> on_path(g.size(), false);

        auto record = [&]() {
            if (is_clique(g, path))
                return;
            CycleInfo c;
            c.vertices = path;
            for (size_t i = 0; i < path.size(); ++i) {
                auto a = path[i], b = path[(i + 1) % path.size()];
                c.edges.push_back(static_cast<std::uint32_t>(*g.edge_index(a, b)));
                c.sign.push_back(a < b ? 1 : -1);
            }
            result.push_back(std::move(c));
        };

        auto dfs = [&](auto & self, VertexId start) -> void {
            auto v = path.back();
            g.neighbours(v).for_each([&](size_t wi) {
                auto w = static_cast<VertexId>(wi);
                if (w <= start || on_path[w])
                    return;
                path.push_back(w);
                on_path[w] = true;
                if (path.size() >= 4 && g.adjacent(w, start) && path[1] < w)
                    record();
                if (path.size() < max_length)
                    self(self, start);
                on_path[w] = false;
                path.pop_back();
            });
        };

        for (VertexId s = 0; s < g.size(); ++s) {
            path = {s};
            on_path[s] = true;
            dfs(dfs, s);
            on_path[s] = false;
        }
        return result;
    }

    /// Oriented arcs with their transitive closure.
    struct State
    {
        vector<std::int8_t> dir;
        vector<VertexSet> out, desc, anc;
    };

    struct Event
    {
        vector<Arc> arcs;
        Justification why;
    };

    class Engine
    {
    private:
        const LabeledGraph & _g;
        vector<CycleInfo> _cycles;
        vector<vector<std::uint32_t>> _cycles_of_edge;
        std::deque<std::uint32_t> _dirty;
        vector<bool> _queued;

    public:
        State st;
        optional<vector<VertexId>> shortcut; ///< path v0 .. vk with closing arc v0 -> vk
        optional<vector<VertexId>> cycle;
        vector<Event> * log = nullptr;

        Engine(const LabeledGraph & g, unsigned cycle_length) :
            _g(g),
            _cycles(enumerate_cycles(g, cycle_length)),
            _cycles_of_edge(g.edge_count()),
            _queued(_cycles.size(), false)
        {
            for (std::uint32_t c = 0; c < _cycles.size(); ++c)
                for (auto e : _cycles[c].edges)
                    _cycles_of_edge[e].push_back(c);
            st.dir.assign(g.edge_count(), 0);
            st.out.assign(g.size(), VertexSet(g.size()));
            st.desc = st.out;
            st.anc = st.out;
        }

        auto graph() const -> const LabeledGraph & { return _g; }

        auto direction(VertexId a, VertexId b) const -> int
        {
            auto s = st.dir[*_g.edge_index(a, b)];
            return a < b ? s : -s;
        }

        auto complete() const -> bool
        {
            return std::find(st.dir.begin(), st.dir.end(), 0) == st.dir.end();
        }

        auto restore(const State & s) -> void
        {
            st = s;
            shortcut = nullopt;
            cycle = nullopt;
            for (auto c : _dirty)
                _queued[c] = false;
            _dirty.clear();
        }

        auto path(VertexId from, VertexId to) const -> vector<VertexId>
        {
            vector<VertexId> parent(_g.size(), static_cast<VertexId>(-1));
            std::deque<VertexId> queue{from};
            parent[from] = from;
            while (! queue.empty() && parent[to] == static_cast<VertexId>(-1)) {
                auto v = queue.front();
                queue.pop_front();
                st.out[v].for_each([&](size_t w) {
                    if (parent[w] == static_cast<VertexId>(-1)) {
                        parent[w] = v;
                        queue.push_back(static_cast<VertexId>(w));
                    }
                });
            }
            vector<VertexId> result{to};
            while (result.back() != from)
                result.push_back(parent[result.back()]);
            std::reverse(result.begin(), result.end());
            return result;
        }

        auto shortcut_through(VertexId u, VertexId v) const -> optional<vector<VertexId>>
        {
            auto inner = st.desc[u] & st.anc[v];
            auto w1s = inner;
            w1s.set(u);
            auto w2s = inner;
            w2s.set(v);
            optional<vector<VertexId>> result;
            w1s.for_each([&](size_t w1) {
                if (result)
                    return;
                auto w2 = st.desc[w1].first_in_and_not(w2s, _g.neighbours(w1));
                if (w2 == VertexSet::npos)
                    return;
                auto p = path(u, w1);
                auto q = path(w1, w2);
                auto r = path(w2, v);
                p.insert(p.end(), q.begin() + 1, q.end());
                p.insert(p.end(), r.begin() + 1, r.end());
                result = std::move(p);
            });
            return result;
        }

        auto set_arc(Arc a) -> void
        {
            auto [t, h] = a;
            if (t == h || st.desc[h].test(t)) {
                if (! cycle) {
                    cycle = path(h, t);
                }
                return;
            }
            auto e = *_g.edge_index(t, h);
            st.dir[e] = t < h ? 1 : -1;
            st.out[t].set(h);

            auto up = st.anc[t];
            up.set(t);
            auto down = st.desc[h];
            down.set(h);
            up.for_each([&](size_t x) { st.desc[x] |= down; });
            down.for_each([&](size_t y) { st.anc[y] |= up; });

            for (auto c : _cycles_of_edge[e])
                if (! _queued[c]) {
                    _queued[c] = true;
                    _dirty.push_back(c);
                }

            // Only arcs u -> v with u above t and v below h can gain a new shortcut.
            if (! shortcut)
                up.for_each([&](size_t u) {
                    if (shortcut)
                        return;
                    (st.out[u] & down).for_each([&](size_t v) {
                        if (! shortcut)
                            shortcut = shortcut_through(static_cast<VertexId>(u), static_cast<VertexId>(v));
                    });
                });
        }

        auto contradiction() const -> bool { return shortcut || cycle; }

        auto note(vector<Arc> arcs, JustificationKind kind, vector<VertexId> cycle_vertices) -> void
        {
            if (log)
                log->push_back(Event{std::move(arcs), Justification{kind, std::move(cycle_vertices)}});
        }

        auto path_rule() -> bool
        {
            auto & edges = _g.edges();
            for (size_t e = 0; e < edges.size(); ++e) {
                if (st.dir[e] != 0)
                    continue;
                auto [u, v] = edges[e];
                if (st.desc[v].test(u))
                    std::swap(u, v);
                else if (! st.desc[u].test(v))
                    continue;
                auto p = path(u, v);
                set_arc(Arc{u, v});
                auto kind = p.size() == 3 ? JustificationKind::TriangleRule : JustificationKind::PathRule;
                note({Arc{u, v}}, kind, std::move(p));
                return true;
            }
            return false;
        }

        auto cycle_rule(std::uint32_t ci) -> bool
        {
            auto & c = _cycles[ci];
            auto m = c.vertices.size();
            for (int d : {1, -1}) {
                size_t along = 0;
                vector<size_t> open;
                bool against = false;
                for (size_t i = 0; i < m; ++i) {
                    auto s = c.sign[i] * st.dir[c.edges[i]] * d;
                    if (s > 0)
                        ++along;
                    else if (s == 0)
                        open.push_back(i);
                    else
                        against = true;
                }
                if (along != m - 2 || open.empty() || (open.size() == 1 && ! against))
                    continue;

                auto against_arc = [&](size_t i) {
                    auto a = c.vertices[i], b = c.vertices[(i + 1) % m];
                    return d > 0 ? Arc{b, a} : Arc{a, b};
                };
                auto first = against_arc(open[0]);
                set_arc(first);
                if (open.size() == 2 && ! shortcut) {
                    auto second = against_arc(open[1]);
                    if (! st.desc[second.head].test(second.tail)) {
                        set_arc(second);
                        note({first, second}, JustificationKind::CycleRule, c.vertices);
                        return true;
                    }
                }
                note({first}, JustificationKind::CycleRule, c.vertices);
                return true;
            }
            return false;
        }

        /// False on contradiction.
        auto propagate() -> bool
        {
            while (! contradiction()) {
                if (path_rule())
                    continue;
                bool forced = false;
                while (! forced && ! _dirty.empty()) {
                    auto c = _dirty.front();
                    _dirty.pop_front();
                    _queued[c] = false;
                    forced = cycle_rule(c);
                }
                if (! forced)
                    return true;
            }
            return false;
        }

        /// Unset edge in the most non-clique cycles with exactly three open edges whose oriented
        /// edges all agree; ties to the smallest edge.
        auto branch_edge() const -> size_t
        {
            vector<size_t> score(_g.edge_count(), 0);
            for (auto & c : _cycles) {
                size_t open = 0;
                int seen = 0;
                bool consistent = true;
                for (size_t i = 0; i < c.edges.size(); ++i) {
                    auto s = c.sign[i] * st.dir[c.edges[i]];
                    if (s == 0)
                        ++open;
                    else if (seen == 0)
                        seen = s;
                    else if (seen != s)
                        consistent = false;
                }
                if (open != 3 || ! consistent)
                    continue;
                for (auto e : c.edges)
                    if (st.dir[e] == 0)
                        ++score[e];
            }
            size_t best = VertexSet::npos;
            for (size_t e = 0; e < score.size(); ++e)
                if (st.dir[e] == 0 && (best == VertexSet::npos || score[e] > score[best]))
                    best = e;
            return best;
        }

        auto to_partial() const -> PartialOrientation
        {
            PartialOrientation po(_g);
            auto & edges = _g.edges();
            for (size_t e = 0; e < edges.size(); ++e)
                if (st.dir[e] != 0)
                    po.set(st.dir[e] > 0 ? Arc{edges[e].u, edges[e].v} : Arc{edges[e].v, edges[e].u});
            return po;
        }
    };

    auto witness_from_path(const LabeledGraph & g, const PartialOrientation & po, vector<VertexId> path) -> ShortcutWitness
    {
        auto k = path.size() - 1;
        for (size_t i = 0; i < path.size(); ++i)
            for (size_t j = i + 1; j < path.size(); ++j) {
                if (i == 0 && j == k)
                    continue;
                if (! g.adjacent(path[i], path[j]))
                    return ShortcutWitness{path, i, j, false};
                if (po.has_arc(path[j], path[i]))
                    return ShortcutWitness{path, i, j, true};
            }
        throw std::logic_error("shortcut path without a defect");
    }

    auto to_trace_arc(const LabeledGraph & g, Arc a) -> TraceArc
    {
        return TraceArc{g.label(a.tail), g.label(a.head)};
    }

    auto to_labels(const LabeledGraph & g, const vector<VertexId> & vs) -> vector<string>
    {
        vector<string> result;
        for (auto v : vs)
            result.push_back(g.label(v));
        return result;
    }

    struct ComponentResult
    {
        VerdictKind kind;
        vector<pair<string, string>> arcs;
        optional<ProofTrace> trace;
        uint64_t nodes = 0;
    };

    auto solve_connected(const LabeledGraph & h, VertexId source, const SolverConfig & config) -> ComponentResult
    {
        Engine engine(h, config.cycle_length);
        vector<Event> events;
        if (config.trace)
            engine.log = &events;

        ProofTrace trace;
        trace.preamble.source = h.label(source);
        TraceLine line;
        line.line_number = 1;
        line.opener = RootOpener{};

        auto flush_events = [&]() {
            for (auto & ev : events) {
                OrientStep step;
                for (auto a : ev.arcs)
                    step.arcs.push_back(to_trace_arc(h, a));
                step.cycle = to_labels(h, ev.why.cycle);
                line.steps.push_back(std::move(step));
            }
            events.clear();
        };

        struct Copy
        {
            State snapshot;
            Arc deferred;
            long id;
        };
        vector<Copy> copies;
        long next_copy = 2;
        bool at_root = true;
        uint64_t nodes = 0;

        h.neighbours(source).for_each([&](size_t w) { engine.set_arc(Arc{source, static_cast<VertexId>(w)}); });

        while (true) {
            bool ok = engine.propagate();
            if (config.trace)
                flush_events();

            if (ok) {
                if (engine.complete()) {
                    auto o = Orientation::from_partial(engine.to_partial());
                    if (! is_semitransitive(o))
                        throw std::logic_error("solver produced an orientation that is not semi-transitive");
                    ComponentResult r{VerdictKind::SemiTransitive, {}, nullopt, nodes};
                    for (auto a : o.arcs())
                        r.arcs.emplace_back(h.label(a.tail), h.label(a.head));
                    return r;
                }

                auto e = engine.branch_edge();
                Arc a{h.edges()[e].u, h.edges()[e].v};
                if (at_root && config.wlog) {
                    at_root = false;
                    trace.preamble.wlog_arc = to_trace_arc(h, a);
                    engine.set_arc(a);
                    continue;
                }
                at_root = false;
                if (++nodes > config.budget)
                    return ComponentResult{VerdictKind::BudgetExceeded, {}, nullopt, nodes};
                copies.push_back(Copy{engine.st, a.reversed(), next_copy});
                if (config.trace)
                    line.steps.push_back(BranchStep{to_trace_arc(h, a), next_copy});
                ++next_copy;
                engine.set_arc(a);
                continue;
            }

            if (! engine.shortcut)
                throw std::logic_error("solver reached a directed cycle without a shortcut");
            if (config.trace) {
                line.shortcut = to_labels(h, *engine.shortcut);
                trace.lines.push_back(std::move(line));
            }
            if (copies.empty()) {
                ComponentResult r{VerdictKind::NonSemiTransitive, {}, nullopt, nodes};
                if (config.trace)
                    r.trace = std::move(trace);
                return r;
            }
            if (++nodes > config.budget)
                return ComponentResult{VerdictKind::BudgetExceeded, {}, nullopt, nodes};

            auto copy = std::move(copies.back());
            copies.pop_back();
            line = TraceLine{};
            line.line_number = trace.lines.size() + 1;
            line.opener = MoveCopy{copy.id, to_trace_arc(h, copy.deferred)};
            engine.restore(copy.snapshot);
            engine.set_arc(copy.deferred);
        }
    }
}

auto wordrep::fix_source(const PartialOrientation & po, VertexId v) -> PartialOrientation
{
    auto result = po;
    auto & g = po.graph();
    g.neighbours(v).for_each([&](size_t w) { result.set(Arc{v, static_cast<VertexId>(w)}); });
    return result;
}

auto wordrep::propagate(const PartialOrientation & po, unsigned cycle_length) -> PropagationResult
{
    auto & g = po.graph();
    Engine engine(g, cycle_length);
    for (auto a : po.arcs())
        engine.set_arc(a);

    vector<Event> events;
    engine.log = &events;
    bool ok = ! engine.contradiction() && engine.propagate();

    PropagationResult result{PropagationOutcome::Fixpoint, {}, nullopt, nullopt, PartialOrientation(g)};
    for (auto & ev : events)
        for (auto a : ev.arcs)
            result.forced.push_back(ForcedArc{a, ev.why});

    if (engine.cycle) {
        result.outcome = PropagationOutcome::Contradiction;
        result.cycle = engine.cycle;
        result.state = po;
        return result;
    }
    result.state = engine.to_partial();
    if (! ok) {
        result.outcome = PropagationOutcome::Contradiction;
        result.shortcut = witness_from_path(g, result.state, *engine.shortcut);
    }
    else if (! result.forced.empty())
        result.outcome = PropagationOutcome::Forced;
    return result;
}

auto wordrep::solve(const LabeledGraph & g, const SolverConfig & config) -> Verdict
{
    if (config.budget == 0)
        throw std::invalid_argument("solver budget must be positive");
    optional<VertexId> explicit_source;
    if (config.source)
        explicit_source = g.vertex(*config.source);

    Verdict verdict{VerdictKind::SemiTransitive, nullopt, nullopt, 0};
    vector<Arc> arcs;
    bool exhausted = false;

    for (auto & component : connected_components(g)) {
        if (component.size() < 2)
            continue;
        auto h = induced_subgraph(g, component);
        VertexId source = max_degree_vertex(h);
        if (explicit_source && std::binary_search(component.begin(), component.end(), *explicit_source))
            source = h.vertex(g.label(*explicit_source));

        auto r = solve_connected(h, source, config);
        verdict.nodes += r.nodes;
        if (r.kind == VerdictKind::NonSemiTransitive) {
            verdict.kind = VerdictKind::NonSemiTransitive;
            verdict.trace = std::move(r.trace);
            return verdict;
        }
        if (r.kind == VerdictKind::BudgetExceeded)
            exhausted = true;
        for (auto & [t, hd] : r.arcs)
            arcs.push_back(Arc{g.vertex(t), g.vertex(hd)});
    }

    if (exhausted) {
        verdict.kind = VerdictKind::BudgetExceeded;
        return verdict;
    }
    verdict.orientation = Orientation::from_arcs(g, arcs);
    return verdict;
}

auto wordrep::check_theorem1_consistency(const LabeledGraph & g) -> bool
{
    SolverConfig config;
    config.trace = false;
    auto verdict = solve(g, config);
    if (verdict.kind == VerdictKind::BudgetExceeded)
        throw BudgetExceeded("solver budget exceeded");
    auto oracle = brute_force_semitransitive(g);
    if (oracle.outcome == OracleOutcome::BudgetExceeded)
        throw BudgetExceeded("oracle budget exceeded");

    bool solver_yes = verdict.kind == VerdictKind::SemiTransitive;
    if (solver_yes != (oracle.outcome == OracleOutcome::Exists))
        return false;
    if (find_uniform_representant(g, 2) && ! solver_yes)
        return false;
    return true;
}
