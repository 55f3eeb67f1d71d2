#include <wordrep/errors.hh>
#include <wordrep/orientation.hh>
#include <wordrep/trace.hh>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <wordrep/paper_trace_data.hh>

using std::map;
using std::nullopt;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

using namespace wordrep;

namespace
{
    const string arrow_glyph = "\xe2\x86\x92";

    auto is_label_char(char c) -> bool
    {
        if (std::isspace(static_cast<unsigned char>(c)))
            return false;
        switch (c) {
        case '-': case '>': case '(': case ')': case ':': case '#':
            return false;
        }
        return c != arrow_glyph[0];
    }

    class LineParser
    {
    private:
        string_view _text;
        size_t _pos = 0;
        size_t _line;

    public:
        LineParser(string_view text, size_t line) :
            _text(text),
            _line(line)
        {
        }

        [[noreturn]] auto fail(const string & what) const -> void
        {
            throw TraceSyntaxError(_line, _pos + 1, what);
        }

        auto skip_space() -> void
        {
            while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
        }

        auto at_end() -> bool
        {
            skip_space();
            return _pos == _text.size();
        }

        auto peek(string_view s) -> bool
        {
            skip_space();
            return _text.substr(_pos, s.size()) == s;
        }

        auto accept(string_view s) -> bool
        {
            if (! peek(s))
                return false;
            _pos += s.size();
            return true;
        }

        auto expect(string_view s) -> void
        {
            if (! accept(s))
                fail("expected '" + string{s} + "'");
        }

        auto label() -> string
        {
            skip_space();
            auto start = _pos;
            while (_pos < _text.size() && is_label_char(_text[_pos]))
                ++_pos;
            if (start == _pos)
                fail("expected a vertex label");
            return string{_text.substr(start, _pos - start)};
        }

        auto integer() -> long
        {
            skip_space();
            auto start = _pos;
            while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
            if (start == _pos)
                fail("expected a number");
            return std::stol(string{_text.substr(start, _pos - start)});
        }

        auto arc() -> TraceArc
        {
            auto tail = label();
            if (! accept("->") && ! accept(arrow_glyph))
                fail("expected '->'");
            auto head = label();
            return TraceArc{tail, head};
        }

        auto dashed_labels() -> vector<string>
        {
            vector<string> result{label()};
            while (accept("-"))
                result.push_back(label());
            if (result.size() < 2)
                fail("expected at least two dash-separated labels");
            return result;
        }

        /// Optional "N." line-number prefix.
        auto line_number() -> optional<size_t>
        {
            skip_space();
            auto start = _pos;
            while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
                ++_pos;
            if (start != _pos && _pos < _text.size() && _text[_pos] == '.') {
                auto n = std::stoul(string{_text.substr(start, _pos - start)});
                ++_pos;
                return n;
            }
            _pos = start;
            return nullopt;
        }
    };

    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    auto format_arc(const TraceArc & a) -> string
    {
        return a.tail + "->" + a.head;
    }

    auto join(const vector<string> & labels) -> string
    {
        string result;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i != 0)
                result += '-';
            result += labels[i];
        }
        return result;
    }
}

auto wordrep::parse_trace(const string & text) -> ProofTrace
{
    ProofTrace trace;
    set<long> created;
    std::istringstream in(text);
    string raw;
    size_t physical = 0;

    while (std::getline(in, raw)) {
        ++physical;
        auto line = trim(raw);
        if (line.empty())
            continue;

        if (line.front() == '#') {
            auto body = trim(line.substr(1));
            LineParser p(body, physical);
            if (body.rfind("source:", 0) == 0) {
                p.expect("source:");
                trace.preamble.source = p.label();
                if (! p.at_end())
                    p.fail("trailing text after source label");
            }
            else if (body.rfind("wlog:", 0) == 0) {
                p.expect("wlog:");
                trace.preamble.wlog_arc = p.arc();
                if (! p.at_end())
                    p.fail("trailing text after W.L.O.G. arc");
            }
            continue;
        }

        LineParser p(line, physical);
        TraceLine tl;
        auto number = p.line_number();
        tl.line_number = number ? *number : trace.lines.size() + 1;

        if (p.accept("MC")) {
            auto id = p.integer();
            auto a = p.arc();
            if (! created.contains(id))
                throw UnknownCopyReference(physical, id);
            tl.opener = MoveCopy{id, a};
        }
        else {
            if (! trace.lines.empty())
                p.fail("only the first line may start without an MC opener");
            tl.opener = RootOpener{};
        }

        bool terminated = false;
        while (! p.at_end()) {
            if (p.accept("S:")) {
                tl.shortcut = p.dashed_labels();
                terminated = true;
                if (! p.at_end())
                    p.fail("text after the terminal shortcut");
                break;
            }
            else if (p.accept("B")) {
                auto a = p.arc();
                p.expect("(");
                p.expect("Copy");
                auto id = p.integer();
                p.expect(")");
                created.insert(id);
                tl.steps.push_back(BranchStep{a, id});
            }
            else if (p.accept("O")) {
                OrientStep step;
                step.arcs.push_back(p.arc());
                if (p.accept("O"))
                    step.arcs.push_back(p.arc());
                p.expect("(");
                p.expect("C");
                step.cycle = p.dashed_labels();
                p.expect(")");
                tl.steps.push_back(std::move(step));
            }
            else
                p.fail("expected 'B', 'O' or 'S:'");
        }
        if (! terminated)
            p.fail("line has no terminal 'S:' shortcut");
        trace.lines.push_back(std::move(tl));
    }
    return trace;
}

auto wordrep::emit_trace(const ProofTrace & trace) -> string
{
    string out;
    if (trace.preamble.source)
        out += "# source: " + *trace.preamble.source + "\n";
    if (trace.preamble.wlog_arc)
        out += "# wlog: " + format_arc(*trace.preamble.wlog_arc) + "\n";

    for (auto & line : trace.lines) {
        out += std::to_string(line.line_number) + ".";
        if (auto mc = std::get_if<MoveCopy>(&line.opener))
            out += " MC" + std::to_string(mc->copy_id) + " " + format_arc(mc->arc);
        for (auto & step : line.steps) {
            if (auto b = std::get_if<BranchStep>(&step))
                out += " B" + format_arc(b->arc) + " (Copy " + std::to_string(b->copy_id) + ")";
            else {
                auto & o = std::get<OrientStep>(step);
                for (auto & a : o.arcs)
                    out += " O" + format_arc(a);
                out += " (C" + join(o.cycle) + ")";
            }
        }
        out += " S:" + join(line.shortcut) + "\n";
    }
    return out;
}

auto wordrep::preprocess_latex(const string & latex) -> string
{
    string text = latex;
    auto replace_all = [&](const string & from, const string & to) {
        for (size_t at = text.find(from); at != string::npos; at = text.find(from, at + to.size()))
            text.replace(at, from.size(), to);
    };
    replace_all("$\\rightarrow$", "->");
    replace_all("\\rightarrow", "->");
    replace_all("\\noindent", " ");
    replace_all("\\\\", " ");
    replace_all("\\begin{tiny}", " ");
    replace_all("\\end{tiny}", " ");
    replace_all("$", " ");

    // "{\bf N.}" starts a proof line.
    string out;
    size_t pos = 0;
    const string marker = "{\\bf";
    string current;
    auto flush = [&]() {
        std::istringstream words(current);
        string w, line;
        while (words >> w)
            line += (line.empty() ? "" : " ") + w;
        if (! line.empty())
            out += line + "\n";
        current.clear();
    };
    while (pos < text.size()) {
        auto at = text.find(marker, pos);
        if (at == string::npos) {
            current += text.substr(pos);
            break;
        }
        current += text.substr(pos, at - pos);
        auto close = text.find('}', at);
        if (close == string::npos) {
            current += text.substr(at);
            break;
        }
        flush();
        current = string{trim(string_view{text}.substr(at + marker.size(), close - at - marker.size()))} + " ";
        pos = close + 1;
    }
    flush();
    return out;
}

auto wordrep::extract_graph(const ProofTrace & trace) -> LabeledGraph
{
    set<string> labels;
    set<pair<string, string>> edges;
    auto pair_of = [&](const string & a, const string & b) {
        labels.insert(a);
        labels.insert(b);
        if (a != b)
            edges.insert(a < b ? pair{a, b} : pair{b, a});
    };

    if (trace.preamble.source)
        labels.insert(*trace.preamble.source);
    if (trace.preamble.wlog_arc)
        pair_of(trace.preamble.wlog_arc->tail, trace.preamble.wlog_arc->head);

    for (auto & line : trace.lines) {
        if (auto mc = std::get_if<MoveCopy>(&line.opener))
            pair_of(mc->arc.tail, mc->arc.head);
        for (auto & step : line.steps) {
            if (auto b = std::get_if<BranchStep>(&step))
                pair_of(b->arc.tail, b->arc.head);
            else {
                auto & o = std::get<OrientStep>(step);
                for (auto & a : o.arcs)
                    pair_of(a.tail, a.head);
                for (size_t i = 0; i < o.cycle.size(); ++i)
                    pair_of(o.cycle[i], o.cycle[(i + 1) % o.cycle.size()]);
            }
        }
        for (size_t i = 0; i + 1 < line.shortcut.size(); ++i)
            pair_of(line.shortcut[i], line.shortcut[i + 1]);
        if (line.shortcut.size() >= 2)
            pair_of(line.shortcut.front(), line.shortcut.back());
    }

    return build_graph(vector<string>(labels.begin(), labels.end()), vector<pair<string, string>>(edges.begin(), edges.end()));
}

auto VerificationReport::accepted_lines() const -> size_t
{
    return std::count_if(lines.begin(), lines.end(), [](const LineReport & r) { return r.accepted; });
}

auto VerificationReport::first_failure() const -> const LineReport *
{
    for (auto & r : lines)
        if (! r.accepted)
            return &r;
    return nullptr;
}

namespace
{
    struct StepFailure
    {
        string reason;
    };

    struct Replay
    {
        const LabeledGraph & g;

        auto vertex(const string & label) const -> VertexId
        {
            auto v = g.find(label);
            if (! v)
                throw StepFailure{"unknown vertex '" + label + "'"};
            return *v;
        }

        auto arc(const TraceArc & a) const -> Arc
        {
            auto t = vertex(a.tail), h = vertex(a.head);
            if (t == h || ! g.adjacent(t, h))
                throw StepFailure{"'" + format_arc(a) + "' is not an edge"};
            return Arc{t, h};
        }

        auto apply(PartialOrientation & po, Arc a) const -> void
        {
            if (po.has_arc(a.head, a.tail))
                throw StepFailure{"'" + g.label(a.tail) + "->" + g.label(a.head) + "' conflicts with the opposite arc"};
            po.set(a);
        }

        auto is_clique(const vector<VertexId> & vs) const -> bool
        {
            for (size_t i = 0; i < vs.size(); ++i)
                for (size_t j = i + 1; j < vs.size(); ++j)
                    if (! g.adjacent(vs[i], vs[j]))
                        return false;
            return true;
        }

        auto check_orient(const PartialOrientation & po, const OrientStep & step) const -> vector<Arc>
        {
            auto m = step.cycle.size();
            if (m < 3)
                throw StepFailure{"justification cycle has fewer than three vertices"};
            vector<VertexId> cycle;
            for (auto & l : step.cycle)
                cycle.push_back(vertex(l));
            if (set<VertexId>(cycle.begin(), cycle.end()).size() != m)
                throw StepFailure{"justification cycle repeats a vertex"};
            for (size_t i = 0; i < m; ++i)
                if (! g.adjacent(cycle[i], cycle[(i + 1) % m]))
                    throw StepFailure{"justification cycle uses non-edge " + g.label(cycle[i]) + "-" + g.label(cycle[(i + 1) % m])};

            // forward[i]: arc along cycle edge i in traversal order, +1 if cycle[i] -> cycle[i+1]
            vector<Arc> arcs;
            vector<size_t> forced_edges;
            vector<int> forced_dir;
            for (auto & ta : step.arcs) {
                auto a = arc(ta);
                if (po.has_arc(a.head, a.tail))
                    throw StepFailure{"'" + format_arc(ta) + "' conflicts with the opposite arc"};
                optional<size_t> at;
                for (size_t i = 0; i < m; ++i) {
                    if (Arc{cycle[i], cycle[(i + 1) % m]} == a) {
                        at = i;
                        forced_dir.push_back(1);
                    }
                    else if (Arc{cycle[(i + 1) % m], cycle[i]} == a) {
                        at = i;
                        forced_dir.push_back(-1);
                    }
                }
                if (! at)
                    throw StepFailure{"'" + format_arc(ta) + "' is not an edge of its justification cycle"};
                if (std::find(forced_edges.begin(), forced_edges.end(), *at) != forced_edges.end())
                    throw StepFailure{"both arcs orient the same edge"};
                forced_edges.push_back(*at);
                arcs.push_back(a);
            }

            auto dir = [&](size_t i) { return po.direction(cycle[i], cycle[(i + 1) % m]); };
            auto is_forced = [&](size_t i) { return std::find(forced_edges.begin(), forced_edges.end(), i) != forced_edges.end(); };

            if (m == 3) {
                if (arcs.size() != 1)
                    throw StepFailure{"a triangle justifies exactly one arc"};
                for (int d : {1, -1}) {
                    if (forced_dir[0] != -d)
                        continue;
                    bool ok = true;
                    for (size_t i = 0; i < m; ++i)
                        if (! is_forced(i) && dir(i) != d)
                            ok = false;
                    if (ok)
                        return arcs;
                }
                throw StepFailure{"triangle does not force the arc: the other two edges are not a directed path"};
            }

            bool clique = is_clique(cycle);
            for (int d : {1, -1}) {
                if (std::any_of(forced_dir.begin(), forced_dir.end(), [&](int f) { return f != -d; }))
                    continue;
                size_t along = 0, against = 0, unset = 0;
                for (size_t i = 0; i < m; ++i) {
                    if (is_forced(i))
                        continue;
                    auto s = dir(i) * d;
                    (s > 0 ? along : s < 0 ? against : unset) += 1;
                }
                if (arcs.size() == 1) {
                    // Cycle lemma with the other remaining edge against or still open.
                    if (! clique && along == m - 2)
                        return arcs;
                    // The other m - 1 edges form a directed path from the arc's head around to its tail.
                    if (along == m - 1)
                        return arcs;
                }
                else if (! clique && along == m - 2)
                    return arcs;
            }
            if (clique)
                throw StepFailure{"justification cycle induces a clique"};
            throw StepFailure{"cycle does not force the stated orientation"};
        }

        auto check_shortcut(const PartialOrientation & po, const vector<string> & labels) const -> void
        {
            if (labels.size() < 3)
                throw StepFailure{"shortcut path needs at least three vertices"};
            vector<VertexId> path;
            for (auto & l : labels)
                path.push_back(vertex(l));
            if (set<VertexId>(path.begin(), path.end()).size() != path.size())
                throw StepFailure{"shortcut path repeats a vertex"};
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (! g.adjacent(path[i], path[i + 1]) || ! po.has_arc(path[i], path[i + 1]))
                    throw StepFailure{"shortcut path is not directed at " + labels[i] + "-" + labels[i + 1]};
            if (! g.adjacent(path.front(), path.back()) || ! po.has_arc(path.front(), path.back()))
                throw StepFailure{"closing arc " + labels.front() + "->" + labels.back() + " is not present"};
            auto k = path.size() - 1;
            for (size_t i = 0; i < path.size(); ++i)
                for (size_t j = i + 1; j < path.size(); ++j) {
                    if (i == 0 && j == k)
                        continue;
                    if (! g.adjacent(path[i], path[j]) || po.has_arc(path[j], path[i]))
                        return;
                }
            throw StepFailure{"every chord of the shortcut path is a forward arc"};
        }
    };

    auto replay(const LabeledGraph & g, const ProofTrace & trace, bool impose_wlog) -> VerificationReport
    {
        VerificationReport report;
        report.wlog_imposed = impose_wlog && trace.preamble.wlog_arc.has_value();
        Replay r{g};

        struct Copy
        {
            PartialOrientation snapshot;
            Arc deferred;
            size_t created_at;
            optional<size_t> consumed_at;
        };
        map<long, Copy> copies;
        map<long, CopyRecord> ledger;
        bool ledger_ok = true;

        for (auto & line : trace.lines) {
            LineReport lr;
            lr.line_number = line.line_number;
            PartialOrientation po(g);
            size_t step_index = 0;
            try {
                if (auto mc = std::get_if<MoveCopy>(&line.opener)) {
                    ledger[mc->copy_id].copy_id = mc->copy_id;
                    auto it = copies.find(mc->copy_id);
                    if (it == copies.end())
                        throw StepFailure{"copy " + std::to_string(mc->copy_id) + " was never created"};
                    if (it->second.consumed_at) {
                        ledger_ok = false;
                        throw StepFailure{"copy " + std::to_string(mc->copy_id) + " was already consumed"};
                    }
                    it->second.consumed_at = line.line_number;
                    ledger[mc->copy_id].consumed_at = line.line_number;
                    if (r.arc(mc->arc) != it->second.deferred)
                        throw StepFailure{"resumed arc does not match the arc deferred by copy " + std::to_string(mc->copy_id)};
                    po = it->second.snapshot;
                    r.apply(po, it->second.deferred);
                }
                else {
                    if (trace.preamble.source) {
                        auto s = r.vertex(*trace.preamble.source);
                        g.neighbours(s).for_each([&](size_t w) { r.apply(po, Arc{s, static_cast<VertexId>(w)}); });
                    }
                    if (report.wlog_imposed)
                        r.apply(po, r.arc(*trace.preamble.wlog_arc));
                }

                for (; step_index < line.steps.size(); ++step_index) {
                    auto & step = line.steps[step_index];
                    if (auto b = std::get_if<BranchStep>(&step)) {
                        auto a = r.arc(b->arc);
                        if (po.direction(a.tail, a.head) != 0)
                            throw StepFailure{"branch on an already oriented edge"};
                        if (ledger.contains(b->copy_id) && ledger[b->copy_id].created_at) {
                            ledger_ok = false;
                            throw StepFailure{"copy " + std::to_string(b->copy_id) + " created twice"};
                        }
                        copies.emplace(b->copy_id, Copy{po, a.reversed(), line.line_number, nullopt});
                        ledger[b->copy_id].copy_id = b->copy_id;
                        ledger[b->copy_id].created_at = line.line_number;
                        r.apply(po, a);
                    }
                    else {
                        for (auto a : r.check_orient(po, std::get<OrientStep>(step)))
                            r.apply(po, a);
                    }
                }
                r.check_shortcut(po, line.shortcut);
                lr.accepted = true;
            }
            catch (const StepFailure & f) {
                lr.failing_step = step_index;
                lr.reason = f.reason;
            }
            report.lines.push_back(std::move(lr));
        }

        for (auto & [id, rec] : ledger) {
            if (! rec.created_at || ! rec.consumed_at)
                ledger_ok = false;
            report.ledger.push_back(rec);
        }
        report.ledger_balanced = ledger_ok;
        report.accepted = ledger_ok && ! report.lines.empty() && report.accepted_lines() == report.lines.size();
        return report;
    }
}

auto wordrep::verify_trace(const LabeledGraph & g, const ProofTrace & trace, const VerifyOptions & options) -> VerificationReport
{
    auto report = replay(g, trace, true);
    if (report.accepted || options.strict_wlog || ! trace.preamble.wlog_arc)
        return report;
    auto weaker = replay(g, trace, false);
    return weaker.accepted || weaker.accepted_lines() > report.accepted_lines() ? weaker : report;
}

auto wordrep::paper_trace_text() -> const string &
{
    static const string text = string{"# source: 13\n# wlog: 15->17\n"} + paper_trace_data;
    return text;
}

auto wordrep::paper_trace() -> ProofTrace
{
    return parse_trace(paper_trace_text());
}
