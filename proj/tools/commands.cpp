#include "commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <string_view>

#include "stiefelmw/gysin.hpp"
#include "stiefelmw/serialize.hpp"
#include "stiefelmw/version.hpp"

namespace stiefelmw::cli {

using nlohmann::ordered_json;

namespace {

// Column widths count code points, not bytes, so Greek labels stay aligned.
std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], display_width(r[i]));
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) {
                const std::size_t padding = width[i] - display_width(r[i]) + 2;
                line.append(padding, ' ');
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

std::string csv_field(std::string s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

std::string set_text(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += '}';
    return out;
}

std::string set_csv(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string set_latex(const std::vector<int>& xs) {
    if (xs.empty()) return "\\emptyset";
    std::string out = "\\{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += "\\}";
    return out;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
    return s;
}

std::string label_latex(const std::string& label) {
    std::string s = replace_all(label, "β", "\\beta");
    s = replace_all(s, "α", "\\alpha");
    return s;
}

std::string ring_latex(RingKind k) {
    switch (k) {
        case RingKind::MW:
            return "\\mathrm{H}_{\\mathrm{MW}}";
        case RingKind::M:
            return "\\mathrm{H}_{\\mathrm{M}}";
        case RingKind::EtaM:
            return "{}^{\\eta}\\mathrm{H}_{\\mathrm{M}}";
    }
    return "?";
}

std::string degree_text(Bidegree d, bool braced) {
    return braced ? to_braced_string(d) : to_string(d);
}

std::string degree_latex(Bidegree d, bool braced) {
    if (!braced) return fmt::format("({},{})", d.p, d.q);
    const Bidegree b = to_braced(d);
    return fmt::format("({},\\{{{}\\}})", b.p, b.q);
}

std::string block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::TopSingleton:
            return "top_singleton";
        case BlockKind::EvenPair:
            return "pair";
        case BlockKind::BottomSingleton:
            return "bottom_singleton";
    }
    return "?";
}

std::string conv_text(const std::string& name, const Conventions& c) {
    return fmt::format("{} (delta={}, cone_square=({},{}))", name, c.cone_shift_delta,
                       c.cone_square_twist, c.cone_square_shift);
}

ordered_json conv_json(const std::string& name, const Conventions& c) {
    ordered_json j;
    j["name"] = name;
    j["cone_shift_delta"] = c.cone_shift_delta;
    j["cone_square"] = {c.cone_square_twist, c.cone_square_shift};
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string cmd_basis(StiefelIndex idx, const RenderOptions& opt) {
    const std::vector<SubsetBasis> rows = enumerate_basis(idx);
    const std::vector<FreeBlock> blocks = free_blocks(idx);

    switch (opt.format) {
        case Format::Plain: {
            std::string out = fmt::format("basis of {}: {} generators, N = {{{}..{}}}\n",
                                          to_string(idx), rows.size(), idx.bottom(), idx.top());
            out += "blocks:";
            for (const auto& b : blocks) out += " " + block_label(b);
            out += "\n\n";
            std::vector<std::vector<std::string>> table;
            table.push_back({"I", "I_F", "I_T", "label", "d(I)", "(p,{q})", "ring"});
            for (const auto& r : rows)
                table.push_back({set_text(r.elements), set_text(r.free_part),
                                 set_text(r.torsion_part), r.label, to_string(r.degree),
                                 to_braced_string(r.degree), std::string(ring_kind_name(r.ring))});
            return out + render_table(table);
        }
        case Format::Json: {
            ordered_json j;
            j["n"] = idx.n();
            j["k"] = idx.k();
            j["count"] = rows.size();
            ordered_json jblocks = ordered_json::array();
            for (const auto& b : blocks) {
                ordered_json jb;
                jb["kind"] = block_kind_name(b.kind);
                jb["hi"] = b.hi;
                jb["lo"] = b.lo;
                jb["label"] = block_label(b);
                jblocks.push_back(std::move(jb));
            }
            j["blocks"] = std::move(jblocks);
            j["atoms"] = to_json(closed_form(idx));
            ordered_json jrows = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json jr;
                jr["label"] = r.label;
                jr["I"] = r.elements;
                jr["I_F"] = r.free_part;
                jr["I_T"] = r.torsion_part;
                jr["degree"] = {{"p", r.degree.p}, {"q", r.degree.q}};
                const Bidegree b = to_braced(r.degree);
                jr["braced_degree"] = {{"p", b.p}, {"q", b.q}};
                jr["ring"] = ring_kind_name(r.ring);
                jrows.push_back(std::move(jr));
            }
            j["rows"] = std::move(jrows);
            return dump(j);
        }
        case Format::Csv: {
            std::string out =
                csv_row({"label", "I", "I_F", "I_T", "p", "q", "braced_p", "braced_q", "ring"});
            for (const auto& r : rows) {
                const Bidegree b = to_braced(r.degree);
                out += csv_row({r.label, set_csv(r.elements), set_csv(r.free_part),
                                set_csv(r.torsion_part), std::to_string(r.degree.p),
                                std::to_string(r.degree.q), std::to_string(b.p),
                                std::to_string(b.q), std::string(ring_kind_name(r.ring))});
            }
            return out;
        }
        case Format::Latex: {
            std::string out = "\\begin{tabular}{lllll}\n";
            out += "$b_I$ & $I$ & $I_T$ & $\\deg$ & ring \\\\\n\\hline\n";
            for (const auto& r : rows)
                out += fmt::format("${}$ & ${}$ & ${}$ & ${}$ & ${}$ \\\\\n",
                                   label_latex(r.label), set_latex(r.elements),
                                   set_latex(r.torsion_part), degree_latex(r.degree, opt.braced),
                                   ring_latex(r.ring));
            out += "\\end{tabular}\n";
            return out;
        }
    }
    return {};
}

std::string cmd_motive(StiefelIndex idx, const RenderOptions& opt) {
    const MotiveSum m = stiefel_motive(idx, opt.conv);
    const std::string name = convention_name(opt.conv);

    switch (opt.format) {
        case Format::Plain: {
            std::string out = fmt::format("motive of {}  [convention {}]\n", to_string(idx),
                                          conv_text(name, opt.conv));
            for (const auto& t : m.terms()) out += "  " + to_string(t) + "\n";
            out += fmt::format("atoms: {} (cohomology rank {})\n", m.total_multiplicity(),
                               m.cohomology_rank());
            return out;
        }
        case Format::Json: {
            ordered_json j;
            j["n"] = idx.n();
            j["k"] = idx.k();
            j["conventions"] = conv_json(name, opt.conv);
            j["atoms"] = to_json(m);
            j["cohomology_rank"] = m.cohomology_rank();
            return dump(j);
        }
        case Format::Csv: {
            std::string out = csv_row({"kind", "twist", "shift", "mult"});
            for (const auto& t : m.terms())
                out += csv_row({t.atom.kind == MotiveKind::Tate ? "T" : "C",
                                std::to_string(t.atom.twist), std::to_string(t.atom.shift),
                                std::to_string(t.mult)});
            return out;
        }
        case Format::Latex: {
            std::string out = "$";
            bool first = true;
            for (const auto& t : m.terms()) {
                if (!first) out += " \\oplus ";
                first = false;
                const auto& a = t.atom;
                out += a.kind == MotiveKind::Tate
                           ? fmt::format("\\widetilde{{\\mathbb{{Z}}}}({})[{}]", a.twist, a.shift)
                           : fmt::format("C_{{\\eta}}({})[{}]", a.twist, a.shift);
                if (t.mult != 1) out += fmt::format("^{{\\oplus {}}}", t.mult);
            }
            out += "$\n";
            return out;
        }
    }
    return {};
}

std::string cmd_groups(StiefelIndex idx, AxisSpec p, AxisSpec q, const RenderOptions& opt) {
    const FormalSum sum = closed_form(idx);

    struct Entry {
        int p;
        int q;
        GroupExpr g;
    };
    // Zero suppression applies to grids; a single-point query always answers.
    const bool keep_zeros = opt.all || (p.single() && q.single());
    std::vector<Entry> entries;
    for (int pp = p.from; pp <= p.to; ++pp)
        for (int qq = q.from; qq <= q.to; ++qq) {
            GroupExpr g = evaluate_at(sum, pp, qq, opt.flags);
            if (g.is_zero() && !keep_zeros) continue;
            entries.push_back({pp, qq, std::move(g)});
        }

    switch (opt.format) {
        case Format::Plain: {
            if (p.single() && q.single() && !entries.empty()) return entries[0].g.text() + "\n";
            std::string out = fmt::format("groups of {} for p={}..{}, q={}..{}\n", to_string(idx),
                                          p.from, p.to, q.from, q.to);
            if (entries.empty())
                return out + "no nonzero entries in range (use --all to include zeros)\n";
            std::vector<std::vector<std::string>> table;
            table.push_back({"p", "q", "group"});
            for (const auto& e : entries)
                table.push_back({std::to_string(e.p), std::to_string(e.q), e.g.text()});
            return out + render_table(table);
        }
        case Format::Json: {
            ordered_json j;
            j["n"] = idx.n();
            j["k"] = idx.k();
            j["flags"] = to_json(opt.flags);
            ordered_json jent = ordered_json::array();
            for (const auto& e : entries) {
                ordered_json je;
                je["p"] = e.p;
                je["q"] = e.q;
                je["text"] = e.g.text();
                je["group"] = to_json(e.g);
                jent.push_back(std::move(je));
            }
            j["entries"] = std::move(jent);
            return dump(j);
        }
        case Format::Csv: {
            std::string out = csv_row({"p", "q", "group"});
            for (const auto& e : entries)
                out += csv_row({std::to_string(e.p), std::to_string(e.q), e.g.text()});
            return out;
        }
        case Format::Latex: {
            std::string out = "\\begin{tabular}{lll}\n$p$ & $q$ & group \\\\\n\\hline\n";
            for (const auto& e : entries)
                out += fmt::format("{} & {} & ${}$ \\\\\n", e.p, e.q, e.g.latex());
            out += "\\end{tabular}\n";
            return out;
        }
    }
    return {};
}

std::string cmd_euler(StiefelIndex idx, const RenderOptions& opt) {
    const EulerClass e = euler_class(idx);
    const std::string name = fmt::format("e(f_{{{},{}}})", idx.n(), idx.k());

    switch (opt.format) {
        case Format::Plain: {
            if (e.zero) return name + " = 0\n";
            return fmt::format("{} = {}, degree {}\n", name, to_string(e),
                               degree_text(e.degree, opt.braced));
        }
        case Format::Json:
            return dump(euler_json(idx, e));
        case Format::Csv: {
            std::string out = csv_row({"n", "k", "zero", "expr", "p", "q"});
            if (e.zero)
                out += csv_row({std::to_string(idx.n()), std::to_string(idx.k()), "true", "", "",
                                ""});
            else
                out += csv_row({std::to_string(idx.n()), std::to_string(idx.k()), "false",
                                to_string(e), std::to_string(e.degree.p),
                                std::to_string(e.degree.q)});
            return out;
        }
        case Format::Latex: {
            if (e.zero) return fmt::format("${} = 0$\n", name);
            return fmt::format("${} = \\eta\\,\\beta_{{{}}}$, degree ${}$\n", name, e.beta_index,
                               degree_latex(e.degree, opt.braced));
        }
    }
    return {};
}

std::string cmd_crosscheck(const CrosscheckReport& report, const RenderOptions& opt) {
    switch (opt.format) {
        case Format::Plain: {
            std::string out = fmt::format("crosscheck: n <= {}, k = {} ({} pairs)\n",
                                          report.n_max, report.k_rule, report.pair_count());
            out += fmt::format("tool: {} {}\n", kToolName, kVersion);
            out += "conventions:";
            for (std::size_t i = 0; i < report.conventions.size(); ++i)
                out += (i ? "; " : " ") +
                       conv_text(report.conventions[i].name, report.conventions[i].conv);
            out += "\n\n";

            int shown = 0;
            for (const auto& v : report.results) {
                const bool mismatch =
                    !v.a_eq_b || std::any_of(v.motive.begin(), v.motive.end(),
                                             [](const auto& mv) { return !mv.equal; });
                if (!mismatch && !opt.all) continue;
                ++shown;
                std::string line =
                    fmt::format("V_{}(A^{}): A==B {}", v.k, v.n, v.a_eq_b ? "ok" : "MISMATCH");
                for (const auto& mv : v.motive)
                    line += fmt::format(" | A==C[{}] {}", mv.convention,
                                        mv.equal ? "ok" : "MISMATCH");
                out += line + "\n";
                if (!v.a_eq_b) {
                    out += "  A \\ B: " + to_string(v.only_in_a_vs_b) + "\n";
                    out += "  B \\ A: " + to_string(v.only_in_b_vs_a) + "\n";
                }
                for (const auto& mv : v.motive) {
                    if (mv.equal) continue;
                    out += fmt::format("  A \\ C[{}]: {}\n", mv.convention,
                                       to_string(mv.only_in_a));
                    out += fmt::format("  C[{}] \\ A: {}\n", mv.convention,
                                       to_string(mv.only_in_c));
                }
            }
            if (shown == 0) out += "all pairs agree\n";

            out += "\nsummary:\n";
            out += fmt::format("  A == B: {} ({}/{})\n", report.a_eq_b_all ? "ok" : "MISMATCH",
                               report.a_eq_b_all
                                   ? report.pair_count()
                                   : static_cast<int>(std::count_if(
                                         report.results.begin(), report.results.end(),
                                         [](const auto& v) { return v.a_eq_b; })),
                               report.pair_count());
            for (const auto& s : report.motive_summary) {
                if (s.all_equal)
                    out += fmt::format("  A == C[{}]: ok ({}/{})\n", s.convention, s.matches,
                                       report.pair_count());
                else
                    out += fmt::format("  A == C[{}]: MISMATCH ({}/{} agree, first at V_{}(A^{}))\n",
                                       s.convention, s.matches, report.pair_count(),
                                       s.first_mismatch_k, s.first_mismatch_n);
            }
            return out;
        }
        case Format::Json: {
            ordered_json j;
            j["tool"] = kToolName;
            j["version"] = kVersion;
            j["n_max"] = report.n_max;
            j["k_rule"] = report.k_rule;
            j["pairs"] = report.pair_count();
            ordered_json jconv = ordered_json::array();
            for (const auto& c : report.conventions) jconv.push_back(conv_json(c.name, c.conv));
            j["conventions"] = std::move(jconv);
            ordered_json jres = ordered_json::array();
            for (const auto& v : report.results) {
                ordered_json jv;
                jv["n"] = v.n;
                jv["k"] = v.k;
                jv["a_eq_b"] = v.a_eq_b;
                if (!v.a_eq_b) {
                    jv["only_in_closed_form"] = to_json(v.only_in_a_vs_b);
                    jv["only_in_inductive"] = to_json(v.only_in_b_vs_a);
                }
                ordered_json jm = ordered_json::array();
                for (const auto& mv : v.motive) {
                    ordered_json je;
                    je["convention"] = mv.convention;
                    je["equal"] = mv.equal;
                    if (!mv.equal) {
                        je["only_in_closed_form"] = to_json(mv.only_in_a);
                        je["only_in_motive"] = to_json(mv.only_in_c);
                    }
                    jm.push_back(std::move(je));
                }
                jv["motive"] = std::move(jm);
                jres.push_back(std::move(jv));
            }
            j["results"] = std::move(jres);
            ordered_json jsum;
            jsum["a_eq_b_all"] = report.a_eq_b_all;
            ordered_json jms = ordered_json::array();
            for (const auto& s : report.motive_summary) {
                ordered_json js;
                js["convention"] = s.convention;
                js["all_equal"] = s.all_equal;
                js["matches"] = s.matches;
                if (!s.all_equal)
                    js["first_mismatch"] = {{"n", s.first_mismatch_n}, {"k", s.first_mismatch_k}};
                jms.push_back(std::move(js));
            }
            jsum["motive"] = std::move(jms);
            j["summary"] = std::move(jsum);
            return dump(j);
        }
        case Format::Csv: {
            std::vector<std::string> header{"n", "k", "a_eq_b"};
            for (const auto& c : report.conventions) header.push_back("a_eq_c_" + c.name);
            std::string out = csv_row(header);
            for (const auto& v : report.results) {
                std::vector<std::string> row{std::to_string(v.n), std::to_string(v.k),
                                             v.a_eq_b ? "true" : "false"};
                for (const auto& mv : v.motive) row.push_back(mv.equal ? "true" : "false");
                out += csv_row(row);
            }
            return out;
        }
        case Format::Latex: {
            std::string cols = "ll";
            for (std::size_t i = 0; i <= report.conventions.size(); ++i) cols += 'l';
            std::string out = "\\begin{tabular}{" + cols + "}\n$n$ & $k$ & $A=B$";
            for (const auto& c : report.conventions) out += " & $A=C$ [" + c.name + "]";
            out += " \\\\\n\\hline\n";
            for (const auto& v : report.results) {
                out += fmt::format("{} & {} & {}", v.n, v.k, v.a_eq_b ? "ok" : "mismatch");
                for (const auto& mv : v.motive)
                    out += fmt::format(" & {}", mv.equal ? "ok" : "mismatch");
                out += " \\\\\n";
            }
            out += "\\end{tabular}\n";
            return out;
        }
    }
    return {};
}

std::string cmd_report(StiefelIndex idx, const std::string& convention_name,
                       const RenderOptions& opt) {
    const FormalSum a = closed_form(idx);
    const FormalSum b = inductive_cohomology(idx);
    const MotiveSum m = stiefel_motive(idx, opt.conv);
    const FormalSum c = motive_cohomology(m);
    const EulerClass e = euler_class(idx);

    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["n"] = idx.n();
    j["k"] = idx.k();
    j["conventions"] = conv_json(convention_name, opt.conv);
    j["flags"] = to_json(opt.flags);

    ordered_json jblocks = ordered_json::array();
    for (const auto& blk : free_blocks(idx)) {
        ordered_json jb;
        jb["kind"] = block_kind_name(blk.kind);
        jb["hi"] = blk.hi;
        jb["lo"] = blk.lo;
        jb["label"] = block_label(blk);
        jblocks.push_back(std::move(jb));
    }
    j["blocks"] = std::move(jblocks);

    j["closed_form"] = to_json(a);
    j["inductive"] = to_json(b);
    j["motive"] = to_json(m);
    j["motive_cohomology"] = to_json(c);
    j["euler"] = euler_json(idx, e);

    ordered_json agree;
    agree["a_eq_b"] = (a == b);
    agree["a_eq_c"] = (a == c);
    j["agreement"] = std::move(agree);
    return dump(j);
}

}  // namespace stiefelmw::cli
