#include "estrada/render.hpp"

#include <cstdio>
#include <ostream>

namespace estrada {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

}  // namespace

const char* const kInvariantsCsvHeader =
    "graph6,n,m,lambda1,q1,estrada,energy,slee,q_energy,det_a,abs_det_a,singular,"
    "k_nonneg,k_pos,triangles,m0,m1,m2,m3";

void render_invariants_csv(std::ostream& out, const std::string& graph6, const InvariantSet& inv) {
    out << graph6 << ',' << inv.n << ',' << inv.m << ',' << format_double(inv.lambda1) << ','
        << format_double(inv.q1) << ',' << format_double(inv.estrada) << ','
        << format_double(inv.energy) << ',' << format_double(inv.slee) << ','
        << format_double(inv.q_energy) << ',' << format_double(inv.det_a) << ','
        << format_double(inv.abs_det_a) << ',' << bool_str(inv.singular) << ',' << inv.k_nonneg
        << ',' << inv.k_pos << ',' << inv.triangles;
    for (double moment : inv.moments) out << ',' << format_double(moment);
    out << '\n';
}

namespace {

void json_invariant_fields(std::ostream& out, const InvariantSet& inv) {
    out << "\"n\":" << inv.n << ",\"m\":" << inv.m
        << ",\"lambda1\":" << format_double(inv.lambda1) << ",\"q1\":" << format_double(inv.q1)
        << ",\"estrada\":" << format_double(inv.estrada)
        << ",\"energy\":" << format_double(inv.energy) << ",\"slee\":" << format_double(inv.slee)
        << ",\"q_energy\":" << format_double(inv.q_energy)
        << ",\"det_a\":" << format_double(inv.det_a)
        << ",\"abs_det_a\":" << format_double(inv.abs_det_a)
        << ",\"singular\":" << bool_str(inv.singular) << ",\"k_nonneg\":" << inv.k_nonneg
        << ",\"k_pos\":" << inv.k_pos << ",\"triangles\":" << inv.triangles << ",\"moments\":[";
    for (std::size_t i = 0; i < inv.moments.size(); ++i) {
        if (i) out << ',';
        out << format_double(inv.moments[i]);
    }
    out << ']';
}

}  // namespace

void render_invariants_json(std::ostream& out, const std::string& graph6, const InvariantSet& inv) {
    out << "{\"graph6\":" << json_str(graph6) << ',';
    json_invariant_fields(out, inv);
    out << "}\n";
}

const char* const kBoundsCsvHeader =
    "graph6,bound_id,target,direction,bound_value,target_value,applicable,reason,holds,equality";

void render_bounds_csv(std::ostream& out, const BoundReport& report) {
    for (const BoundOutcome& o : report.outcomes) {
        out << report.graph6 << ',' << o.bound_id << ',' << to_string(o.target) << ','
            << to_string(o.direction) << ',';
        if (o.applicable) {
            out << format_double(o.value) << ',' << format_double(target_value(report.inv, o.target))
                << ",true,," << bool_str(*o.holds) << ',' << bool_str(*o.equality);
        } else {
            out << ',' << format_double(target_value(report.inv, o.target)) << ",false," << o.reason
                << ",,";
        }
        out << '\n';
    }
}

void render_bounds_json(std::ostream& out, const BoundReport& report) {
    out << "{\"graph6\":" << json_str(report.graph6) << ",\"invariants\":{";
    json_invariant_fields(out, report.inv);
    out << "},\"bounds\":[";
    bool first = true;
    for (const BoundOutcome& o : report.outcomes) {
        if (!first) out << ',';
        first = false;
        out << "{\"bound_id\":" << json_str(o.bound_id) << ",\"target\":\"" << to_string(o.target)
            << "\",\"direction\":\"" << to_string(o.direction)
            << "\",\"target_value\":" << format_double(target_value(report.inv, o.target))
            << ",\"applicable\":" << bool_str(o.applicable);
        if (o.applicable) {
            out << ",\"value\":" << format_double(o.value) << ",\"holds\":" << bool_str(*o.holds)
                << ",\"equality\":" << bool_str(*o.equality);
        } else {
            out << ",\"reason\":" << json_str(o.reason);
        }
        out << '}';
    }
    out << "]}\n";
}

const char* const kCompareCsvHeader = "family,n,m,estrada,j,cp,jb,j_minus_cp,dominance";

void render_compare_csv(std::ostream& out, const CompareRow& row) {
    out << row.family << ',' << row.n << ',' << row.m << ',' << format_double(row.estrada) << ','
        << format_double(row.j) << ',' << format_double(row.cp) << ',';
    if (row.jb) out << format_double(*row.jb);
    out << ',' << format_double(row.j - row.cp) << ',' << bool_str(row.dominance) << '\n';
}

void render_compare_json(std::ostream& out, const CompareRow& row) {
    out << "{\"family\":" << json_str(row.family) << ",\"n\":" << row.n << ",\"m\":" << row.m
        << ",\"estrada\":" << format_double(row.estrada) << ",\"j\":" << format_double(row.j)
        << ",\"cp\":" << format_double(row.cp) << ",\"jb\":";
    if (row.jb) {
        out << format_double(*row.jb);
    } else {
        out << "null";
    }
    out << ",\"j_minus_cp\":" << format_double(row.j - row.cp)
        << ",\"dominance\":" << bool_str(row.dominance) << "}\n";
}

const char* const kScanCsvHeader = "record,graph6,bound_id,target_value,bound_value,gap,diagnostic";

void render_scan_csv(std::ostream& out, const ScanSummary& summary) {
    out << kScanCsvHeader << '\n';
    out << "scanned," << summary.graphs_scanned << ",,,,,\n";
    for (const Violation& v : summary.violations) {
        out << "violation," << v.graph6 << ',' << v.bound_id << ',' << format_double(v.target)
            << ',' << format_double(v.value) << ',' << format_double(v.gap) << ','
            << bool_str(v.diagnostic) << '\n';
    }
    for (const Equality& e : summary.equalities) {
        out << "equality," << e.graph6 << ',' << e.bound_id << ",,,,\n";
    }
}

void render_scan_json(std::ostream& out, const ScanSummary& summary) {
    out << "{\"graphs_scanned\":" << summary.graphs_scanned << ",\"violations\":[";
    bool first = true;
    for (const Violation& v : summary.violations) {
        if (!first) out << ',';
        first = false;
        out << "{\"graph6\":" << json_str(v.graph6) << ",\"bound_id\":" << json_str(v.bound_id)
            << ",\"target_value\":" << format_double(v.target)
            << ",\"bound_value\":" << format_double(v.value) << ",\"gap\":" << format_double(v.gap)
            << ",\"diagnostic\":" << bool_str(v.diagnostic) << '}';
    }
    out << "],\"equalities\":[";
    first = true;
    for (const Equality& e : summary.equalities) {
        if (!first) out << ',';
        first = false;
        out << "{\"graph6\":" << json_str(e.graph6) << ",\"bound_id\":" << json_str(e.bound_id)
            << '}';
    }
    out << "]}\n";
}

void render_matrix_csv(std::ostream& out, const MatrixReport& report) {
    out << "key,value\n";
    out << "order," << report.order << '\n';
    out << "estrada," << format_double(report.estrada) << '\n';
    out << "trace," << format_double(report.trace) << '\n';
    out << "min_row_sum," << format_double(report.min_row_sum) << '\n';
    out << "max_row_sum," << format_double(report.max_row_sum) << '\n';
    out << "rho1," << format_double(report.rho1) << '\n';
    out << "nonnegative," << bool_str(report.nonnegative) << '\n';
    out << "bracket_holds," << (report.bracket_holds ? bool_str(*report.bracket_holds) : "") << '\n';
    out << "bound_value," << (report.bound_value ? format_double(*report.bound_value) : "") << '\n';
    out << "bound_holds," << (report.bound_holds ? bool_str(*report.bound_holds) : "") << '\n';
    out << "bound_equality," << (report.bound_equality ? bool_str(*report.bound_equality) : "")
        << '\n';
}

void render_matrix_json(std::ostream& out, const MatrixReport& report) {
    out << "{\"order\":" << report.order << ",\"estrada\":" << format_double(report.estrada)
        << ",\"trace\":" << format_double(report.trace)
        << ",\"min_row_sum\":" << format_double(report.min_row_sum)
        << ",\"max_row_sum\":" << format_double(report.max_row_sum)
        << ",\"rho1\":" << format_double(report.rho1)
        << ",\"nonnegative\":" << bool_str(report.nonnegative) << ",\"bracket_holds\":"
        << (report.bracket_holds ? bool_str(*report.bracket_holds) : "null") << ",\"bound_value\":"
        << (report.bound_value ? format_double(*report.bound_value) : "null") << ",\"bound_holds\":"
        << (report.bound_holds ? bool_str(*report.bound_holds) : "null") << ",\"bound_equality\":"
        << (report.bound_equality ? bool_str(*report.bound_equality) : "null") << "}\n";
}

}  // namespace estrada
