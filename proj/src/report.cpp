#include "taft/report.hpp"

#include <json.hpp>
#include <sstream>

#include "taft/comodule.hpp"
#include "taft/series.hpp"

namespace taft {

void VerificationReport::finalize(long long elapsed_ms) {
    summary.total = static_cast<long>(cases.size());
    summary.passed = 0;
    for (const auto& c : cases)
        if (c.pass) ++summary.passed;
    summary.failed = summary.total - summary.passed;
    summary.elapsed_ms = elapsed_ms;
}

namespace {

nlohmann::ordered_json report_to_json_obj(const VerificationReport& r) {
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.params) params[k] = v;
        nlohmann::ordered_json obj{{"case_id", c.case_id},
                                   {"params", params},
                                   {"pass", c.pass}};
        if (!c.detail.empty()) obj["detail"] = c.detail;
        cases.push_back(std::move(obj));
    }
    return nlohmann::ordered_json{
        {"tool_version", r.tool_version},
        {"n", r.n},
        {"root_exponent", r.root_exponent},
        {"suite", r.suite},
        {"cases", std::move(cases)},
        {"summary",
         {{"total", r.summary.total},
          {"passed", r.summary.passed},
          {"failed", r.summary.failed},
          {"elapsed_ms", r.summary.elapsed_ms}}},
    };
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string reports_to_json(std::span<const VerificationReport> reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json_obj(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const VerificationReport> reports) {
    std::ostringstream out;
    out << "suite,n,root,case_id,pass,detail\n";
    for (const auto& r : reports)
        for (const auto& c : r.cases)
            out << r.suite << "," << r.n << "," << r.root_exponent << ","
                << csv_escape(c.case_id) << "," << (c.pass ? "true" : "false")
                << "," << csv_escape(c.detail) << "\n";
    return out.str();
}

std::string reports_to_text(std::span<const VerificationReport> reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << "suite " << r.suite << "  n=" << r.n
            << "  root=" << r.root_exponent << "\n";
        for (const auto& c : r.cases) {
            out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.case_id;
            if (!c.detail.empty()) out << "  -- " << c.detail;
            out << "\n";
        }
        out << "  summary: " << r.summary.passed << "/" << r.summary.total
            << " passed";
        if (r.summary.failed > 0) out << ", " << r.summary.failed << " FAILED";
        out << " (" << r.summary.elapsed_ms << " ms)\n";
    }
    return out.str();
}

std::vector<IdentityRow> identity_table(int n, int root_exponent) {
    CycContext ctx(n, root_exponent);
    std::vector<IdentityRow> rows;
    for (int k = 0; k < n; ++k) {
        // one series expansion per s covers every k
        for (int s = 0; s < n; ++s) {
            const CycScalar lhs = main_identity_lhs(ctx, k, s);
            const CycScalar rhs = main_identity_rhs(ctx, k, s);
            const CycScalar series = beta_coefficients(ctx, s, k)[k];
            IdentityRow row;
            row.n = n;
            row.k = k;
            row.s = s;
            row.lhs = lhs.str();
            row.rhs_qbinom = rhs.str();
            row.rhs_series = series.str();
            row.pass = lhs == rhs && lhs == series;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string table_to_csv(std::span<const IdentityRow> rows) {
    std::ostringstream out;
    out << "n,k,s,lhs,rhs_qbinom,rhs_series,pass\n";
    for (const auto& r : rows)
        out << r.n << "," << r.k << "," << r.s << "," << csv_escape(r.lhs)
            << "," << csv_escape(r.rhs_qbinom) << "," << csv_escape(r.rhs_series)
            << "," << (r.pass ? "true" : "false") << "\n";
    return out.str();
}

std::string table_to_json(std::span<const IdentityRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        arr.push_back(nlohmann::ordered_json{
            {"n", r.n},
            {"k", r.k},
            {"s", r.s},
            {"lhs", r.lhs},
            {"rhs_qbinom", r.rhs_qbinom},
            {"rhs_series", r.rhs_series},
            {"pass", r.pass}});
    return arr.dump(2) + "\n";
}

std::string table_to_text(std::span<const IdentityRow> rows) {
    std::ostringstream out;
    out << "  n  k  s  pass  lhs = qbinom = series\n";
    for (const auto& r : rows) {
        out << "  " << r.n << "  " << r.k << "  " << r.s << "  "
            << (r.pass ? "ok  " : "FAIL") << "  " << r.lhs << " = "
            << r.rhs_qbinom << " = " << r.rhs_series << "\n";
    }
    return out.str();
}

}  // namespace taft
