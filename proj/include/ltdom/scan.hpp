#pragma once

#include <atomic>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ltdom/constructive.hpp"
#include "ltdom/domination.hpp"
#include "ltdom/errors.hpp"
#include "ltdom/families.hpp"
#include "ltdom/graph6.hpp"
#include "ltdom/solvers.hpp"

namespace ltdom {

struct ScanFilters {
    bool twin_free = false;
    bool connected = false;
    bool no_isolated = false;
    bool c4_free = false;
    std::optional<int> min_degree; // keep graphs with minimum degree >= N
};

struct CheckSet {
    bool conj1 = true; // gamma_t^L <= 2n/3 for twin-free graphs (open conjecture)
    bool thm3 = true;  // three-quarters construction stays within 3n/4
    bool thm8 = true;  // 2n/3 bound and extremal characterization on C4-free graphs
    bool obs5 = true;  // gamma_t^L <= gamma_L + gamma_t
    bool q1 = true;    // gamma_t^L <= 3n/5 at minimum degree 2 (open question)
};

struct GraphRecord {
    std::size_t line = 0; // 1-based input line
    std::string g6;
    int n = 0;
    // flags
    bool connected = false;
    bool twin_free = false;
    bool has_isolated = false;
    bool c4_free = false;
    bool is_cycle6 = false;
    bool two_corona = false;
    int min_degree = 0;
    // numbers
    std::optional<int> gamma_t, gamma_l, gamma_tl;
    std::optional<int> construct34_size;
    std::optional<int> construct_tree_size;
    // verdicts (absent when the graph is outside the check's hypothesis class
    // or the needed number is unavailable)
    std::optional<bool> conj1_ok, thm3_ok, thm8_ok, thm8_equality_ok, obs5_ok, q1_ok;
    std::optional<std::string> error; // solver capability errors and the like
};

struct Violation {
    std::string g6;
    std::string check;
};

struct ScanSummary {
    std::size_t lines_read = 0;
    std::size_t parse_errors = 0;
    std::size_t filtered_out = 0;
    std::size_t evaluated = 0;
    std::size_t errors = 0;
    std::size_t max_n_seen = 0;
    std::vector<Violation> theorem_violations;    // proved results failing: a bug
    std::vector<Violation> conjecture_violations; // open statements failing: a discovery
    std::vector<std::string> extremal;            // twin-free graphs with gamma_t^L = 2n/3 exactly
    std::vector<std::string> parse_messages;
};

struct ScanReport {
    std::vector<GraphRecord> records;
    ScanSummary summary;
};

struct ScanOptions {
    ScanFilters filters;
    CheckSet checks;
    int jobs = 1;
    int solver_cap = kDefaultSolverMaxN;
    bool skip_parse_errors = false;
};

// Exit codes: 0 all checks pass, 2 a proved theorem failed (release-blocking
// bug), 3 a conjecture/question violated (a discovery, rendered prominently).
inline constexpr int kExitOk = 0;
inline constexpr int kExitOperational = 1;
inline constexpr int kExitTheoremViolation = 2;
inline constexpr int kExitConjectureViolation = 3;

namespace scan_detail {

struct InputLine {
    std::size_t number; // 1-based
    std::string text;
};

} // namespace scan_detail

// Reads newline-delimited graph6 input; an optional ">>graph6<<" header is
// tolerated and skipped, as are blank lines. Windows line endings are
// stripped.
inline std::vector<scan_detail::InputLine> read_graph6_lines(std::istream& in) {
    std::vector<scan_detail::InputLine> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        out.push_back({number, line});
    }
    return out;
}

namespace scan_detail {

inline bool passes_filters(const Graph& g, const GraphRecord& rec, const ScanFilters& f) {
    if (f.twin_free && !rec.twin_free) return false;
    if (f.connected && !rec.connected) return false;
    if (f.no_isolated && rec.has_isolated) return false;
    if (f.c4_free && !rec.c4_free) return false;
    if (f.min_degree && (g.order() == 0 || rec.min_degree < *f.min_degree)) return false;
    return true;
}

inline void derive_verdicts(GraphRecord& rec, const CheckSet& checks) {
    const int n = rec.n;
    const bool eligible = rec.twin_free && !rec.has_isolated && n > 0;
    if (checks.conj1 && eligible && rec.gamma_tl)
        rec.conj1_ok = 3 * *rec.gamma_tl <= 2 * n;
    if (checks.thm3 && eligible && rec.construct34_size) {
        bool ok = 4 * *rec.construct34_size <= 3 * n;
        if (rec.gamma_tl) ok = ok && *rec.construct34_size >= *rec.gamma_tl;
        rec.thm3_ok = ok;
    }
    if (checks.thm8 && eligible && rec.c4_free && rec.gamma_tl) {
        rec.thm8_ok = 3 * *rec.gamma_tl <= 2 * n;
        rec.thm8_equality_ok = (3 * *rec.gamma_tl == 2 * n) == (rec.is_cycle6 || rec.two_corona);
    }
    if (checks.obs5 && !rec.has_isolated && n > 0 && rec.gamma_tl && rec.gamma_l && rec.gamma_t)
        rec.obs5_ok = *rec.gamma_tl <= *rec.gamma_l + *rec.gamma_t;
    if (checks.q1 && eligible && rec.min_degree >= 2 && rec.gamma_tl)
        rec.q1_ok = 5 * *rec.gamma_tl <= 3 * n;
}

inline GraphRecord evaluate_graph(const std::string& g6, std::size_t line, const Graph& g,
                                  const CheckSet& checks, int solver_cap) {
    GraphRecord rec;
    rec.line = line;
    rec.g6 = g6;
    rec.n = g.order();
    rec.connected = g.is_connected();
    rec.twin_free = is_twin_free(g);
    rec.has_isolated = g.has_isolated_vertex();
    rec.c4_free = !g.contains_c4();
    rec.is_cycle6 = is_cycle(g) == std::optional<int>(6);
    rec.two_corona = is_two_corona(g).has_value();
    rec.min_degree = g.order() > 0 ? g.min_degree() : 0;

    const bool eligible = rec.twin_free && !rec.has_isolated && rec.n > 0;
    const bool want_tl = checks.conj1 || checks.thm3 || checks.thm8 || checks.obs5 || checks.q1;
    try {
        if (want_tl && !rec.has_isolated && rec.n > 0) {
            rec.gamma_tl = min_ltd(g, solver_cap).value;
            if (checks.obs5) {
                rec.gamma_t = min_td(g, solver_cap).value;
                rec.gamma_l = min_ld(g, solver_cap).value;
            }
        }
        if (checks.thm3 && eligible) rec.construct34_size = construct_ltd_three_quarters(g).set.count();
        if (eligible && g.is_tree()) rec.construct_tree_size = construct_ltd_tree(g).set.count();
    } catch (const capability_error& e) {
        rec.error = e.what();
    } catch (const infeasible_error& e) {
        rec.error = e.what();
    } catch (const std::logic_error& e) {
        // An internal verification tripped: surface it and fail the scan.
        rec.error = std::string("invariant violation: ") + e.what();
        rec.thm3_ok = false;
        return rec;
    }
    derive_verdicts(rec, checks);
    return rec;
}

} // namespace scan_detail

// Pure per-graph evaluation, exposed so reports can be re-derived in tests.
inline GraphRecord evaluate_graph_record(const std::string& g6, const Graph& g, const CheckSet& checks,
                                         int solver_cap = kDefaultSolverMaxN) {
    return scan_detail::evaluate_graph(g6, 0, g, checks, solver_cap);
}

// Scans a stream of graph6 lines: parse, filter, evaluate the requested
// checks per graph, and aggregate. Work is split across `jobs` workers;
// output order always follows input order, so reports are deterministic.
inline ScanReport scan_lines(const std::vector<scan_detail::InputLine>& lines, const ScanOptions& opt) {
    ScanReport report;
    report.summary.lines_read = lines.size();

    struct Slot {
        bool parse_failed = false;
        bool filtered = false;
        std::string parse_message;
        GraphRecord record;
    };
    std::vector<Slot> slots(lines.size());

    const int jobs = std::max(1, opt.jobs);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= lines.size()) return;
            Slot& slot = slots[i];
            Graph g;
            try {
                g = from_graph6(lines[i].text);
            } catch (const std::exception& e) {
                slot.parse_failed = true;
                slot.parse_message =
                    "line " + std::to_string(lines[i].number) + ": " + e.what();
                continue;
            }
            GraphRecord probe;
            probe.n = g.order();
            probe.connected = g.is_connected();
            probe.twin_free = is_twin_free(g);
            probe.has_isolated = g.has_isolated_vertex();
            probe.c4_free = !g.contains_c4();
            probe.min_degree = g.order() > 0 ? g.min_degree() : 0;
            if (!scan_detail::passes_filters(g, probe, opt.filters)) {
                slot.filtered = true;
                continue;
            }
            slot.record = scan_detail::evaluate_graph(lines[i].text, lines[i].number, g, opt.checks,
                                                      opt.solver_cap);
        }
    };
    if (jobs == 1 || lines.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < slots.size(); ++i) {
        Slot& slot = slots[i];
        if (slot.parse_failed) {
            ++report.summary.parse_errors;
            report.summary.parse_messages.push_back(slot.parse_message);
            if (!opt.skip_parse_errors) throw parse_error(slot.parse_message, 0);
            continue;
        }
        if (slot.filtered) {
            ++report.summary.filtered_out;
            continue;
        }
        GraphRecord& rec = slot.record;
        ++report.summary.evaluated;
        report.summary.max_n_seen = std::max(report.summary.max_n_seen, static_cast<std::size_t>(rec.n));
        if (rec.error) ++report.summary.errors;
        auto flag = [&](const std::optional<bool>& verdict, const char* name, bool theorem) {
            if (verdict && !*verdict) {
                if (theorem)
                    report.summary.theorem_violations.push_back({rec.g6, name});
                else
                    report.summary.conjecture_violations.push_back({rec.g6, name});
            }
        };
        flag(rec.thm3_ok, "thm3", true);
        flag(rec.thm8_ok, "thm8", true);
        flag(rec.thm8_equality_ok, "thm8-equality", true);
        flag(rec.obs5_ok, "obs5", true);
        flag(rec.conj1_ok, "conj1", false);
        flag(rec.q1_ok, "q1", false);
        if (rec.twin_free && !rec.has_isolated && rec.gamma_tl && 3 * *rec.gamma_tl == 2 * rec.n)
            report.summary.extremal.push_back(rec.g6);
        report.records.push_back(std::move(rec));
    }
    return report;
}

inline int exit_code_for(const ScanReport& report) {
    if (!report.summary.theorem_violations.empty()) return kExitTheoremViolation;
    if (!report.summary.conjecture_violations.empty()) return kExitConjectureViolation;
    return kExitOk;
}

namespace scan_detail {

inline std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
inline std::string opt_bool(const std::optional<bool>& v) { return v ? (*v ? "y" : "N") : "-"; }
inline std::string flag(bool b) { return b ? "y" : "n"; }

} // namespace scan_detail

inline void render_summary(const ScanReport& report, std::ostream& out) {
    const auto& s = report.summary;
    out << "# lines " << s.lines_read << ", parse errors " << s.parse_errors << ", filtered out "
        << s.filtered_out << ", evaluated " << s.evaluated << ", solver errors " << s.errors << "\n";
    if (!s.extremal.empty()) {
        out << "# extremal (gamma_tL = 2n/3):";
        for (const auto& g6 : s.extremal) out << " " << g6;
        out << "\n";
    }
    for (const auto& v : s.theorem_violations)
        out << "# THEOREM VIOLATION (bug): " << v.check << " fails on " << v.g6 << "\n";
    for (const auto& v : s.conjecture_violations)
        out << "# CONJECTURE COUNTEREXAMPLE CANDIDATE: " << v.check << " fails on " << v.g6 << "\n";
    if (s.theorem_violations.empty() && s.conjecture_violations.empty())
        out << "# all checks pass; no counterexample among the " << s.evaluated
            << " scanned graphs (order up to " << s.max_n_seen << ") -- a bounded-range check, not a proof\n";
}

inline void render_table(const ScanReport& report, std::ostream& out) {
    out << std::left << std::setw(24) << "graph6" << std::right << std::setw(4) << "n" << std::setw(5)
        << "conn" << std::setw(4) << "tf" << std::setw(4) << "iso" << std::setw(4) << "c4f" << std::setw(5)
        << "cyc6" << std::setw(5) << "2cor" << std::setw(5) << "mind" << std::setw(5) << "g_t"
        << std::setw(5) << "g_L" << std::setw(5) << "g_tL" << std::setw(5) << "c34" << std::setw(5)
        << "tree" << std::setw(6) << "conj1" << std::setw(6) << "thm3" << std::setw(6) << "thm8"
        << std::setw(7) << "thm8eq" << std::setw(6) << "obs5" << std::setw(5) << "q1"
        << "  error\n";
    using namespace scan_detail;
    for (const auto& r : report.records) {
        out << std::left << std::setw(24) << r.g6 << std::right << std::setw(4) << r.n << std::setw(5)
            << flag(r.connected) << std::setw(4) << flag(r.twin_free) << std::setw(4)
            << flag(r.has_isolated) << std::setw(4) << flag(r.c4_free) << std::setw(5) << flag(r.is_cycle6)
            << std::setw(5) << flag(r.two_corona) << std::setw(5) << r.min_degree << std::setw(5)
            << opt_int(r.gamma_t) << std::setw(5) << opt_int(r.gamma_l) << std::setw(5)
            << opt_int(r.gamma_tl) << std::setw(5) << opt_int(r.construct34_size) << std::setw(5)
            << opt_int(r.construct_tree_size) << std::setw(6) << opt_bool(r.conj1_ok) << std::setw(6)
            << opt_bool(r.thm3_ok) << std::setw(6) << opt_bool(r.thm8_ok) << std::setw(7)
            << opt_bool(r.thm8_equality_ok) << std::setw(6) << opt_bool(r.obs5_ok) << std::setw(5)
            << opt_bool(r.q1_ok) << "  " << (r.error ? *r.error : "") << "\n";
    }
    render_summary(report, out);
}

inline void render_csv(const ScanReport& report, std::ostream& out) {
    out << "graph6,n,connected,twin_free,has_isolated,c4_free,is_cycle6,is_two_corona,min_degree,"
           "gamma_t,gamma_L,gamma_tL,construct34_size,construct_tree_size,"
           "conj1_ok,thm3_ok,thm8_ok,thm8_equality_ok,obs5_ok,q1_ok,error\n";
    auto cell_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
    auto cell_bool = [](const std::optional<bool>& v) {
        return v ? std::string(*v ? "true" : "false") : std::string();
    };
    for (const auto& r : report.records) {
        out << r.g6 << "," << r.n << "," << (r.connected ? "true" : "false") << ","
            << (r.twin_free ? "true" : "false") << "," << (r.has_isolated ? "true" : "false") << ","
            << (r.c4_free ? "true" : "false") << "," << (r.is_cycle6 ? "true" : "false") << ","
            << (r.two_corona ? "true" : "false") << "," << r.min_degree << "," << cell_int(r.gamma_t)
            << "," << cell_int(r.gamma_l) << "," << cell_int(r.gamma_tl) << ","
            << cell_int(r.construct34_size) << "," << cell_int(r.construct_tree_size) << ","
            << cell_bool(r.conj1_ok) << "," << cell_bool(r.thm3_ok) << "," << cell_bool(r.thm8_ok) << ","
            << cell_bool(r.thm8_equality_ok) << "," << cell_bool(r.obs5_ok) << "," << cell_bool(r.q1_ok)
            << "," << (r.error ? *r.error : "") << "\n";
    }
}

inline nlohmann::json record_to_json(const GraphRecord& r) {
    nlohmann::json j;
    j["graph6"] = r.g6;
    j["n"] = r.n;
    j["connected"] = r.connected;
    j["twin_free"] = r.twin_free;
    j["has_isolated"] = r.has_isolated;
    j["c4_free"] = r.c4_free;
    j["is_cycle6"] = r.is_cycle6;
    j["is_two_corona"] = r.two_corona;
    j["min_degree"] = r.min_degree;
    auto put_int = [&](const char* key, const std::optional<int>& v) {
        j[key] = v ? nlohmann::json(*v) : nlohmann::json();
    };
    auto put_bool = [&](const char* key, const std::optional<bool>& v) {
        j[key] = v ? nlohmann::json(*v) : nlohmann::json();
    };
    put_int("gamma_t", r.gamma_t);
    put_int("gamma_L", r.gamma_l);
    put_int("gamma_tL", r.gamma_tl);
    put_int("construct34_size", r.construct34_size);
    put_int("construct_tree_size", r.construct_tree_size);
    put_bool("conj1_ok", r.conj1_ok);
    put_bool("thm3_ok", r.thm3_ok);
    put_bool("thm8_ok", r.thm8_ok);
    put_bool("thm8_equality_ok", r.thm8_equality_ok);
    put_bool("obs5_ok", r.obs5_ok);
    put_bool("q1_ok", r.q1_ok);
    if (r.error) j["error"] = *r.error;
    return j;
}

inline void render_jsonl(const ScanReport& report, std::ostream& out) {
    for (const auto& r : report.records) out << record_to_json(r).dump() << "\n";
    const auto& s = report.summary;
    nlohmann::json j;
    j["summary"] = {
        {"lines_read", s.lines_read},
        {"parse_errors", s.parse_errors},
        {"filtered_out", s.filtered_out},
        {"evaluated", s.evaluated},
        {"solver_errors", s.errors},
        {"max_n_seen", s.max_n_seen},
        {"extremal", s.extremal},
        {"note", "bounded-range check over the scanned graphs only"},
    };
    auto viol = nlohmann::json::array();
    for (const auto& v : s.theorem_violations) viol.push_back({{"graph6", v.g6}, {"check", v.check}});
    j["summary"]["theorem_violations"] = viol;
    auto cviol = nlohmann::json::array();
    for (const auto& v : s.conjecture_violations) cviol.push_back({{"graph6", v.g6}, {"check", v.check}});
    j["summary"]["conjecture_violations"] = cviol;
    out << j.dump() << "\n";
}

} // namespace ltdom
