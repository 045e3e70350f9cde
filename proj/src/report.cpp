#include "parabraid/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace parabraid {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::expected_fail: return "expected-fail";
        case Status::flagged: return "flagged";
    }
    return "unknown";
}

void Report::append(const Report& other) {
    verdicts_.insert(verdicts_.end(), other.verdicts_.begin(), other.verdicts_.end());
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(std::count_if(
        verdicts_.begin(), verdicts_.end(), [s](const Verdict& v) { return v.status == s; }));
}

std::size_t Report::count(const std::string& check, Status s) const {
    return static_cast<std::size_t>(
        std::count_if(verdicts_.begin(), verdicts_.end(),
                      [&](const Verdict& v) { return v.status == s && v.check == check; }));
}

std::string Report::to_jsonl(const std::map<std::string, std::string>& header) const {
    std::ostringstream out;
    nlohmann::ordered_json head;
    head["schema"] = "1";
    for (const auto& [k, v] : header) head[k] = v;
    out << head.dump() << '\n';
    for (const auto& v : verdicts_) {
        nlohmann::ordered_json j;
        j["check"] = v.check;
        j["subject"] = v.subject;
        j["status"] = status_name(v.status);
        if (!v.witness.empty()) j["witness"] = v.witness;
        if (!v.note.empty()) j["note"] = v.note;
        out << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["summary"] = {{"total", verdicts_.size()},
                          {"pass", count(Status::pass)},
                          {"fail", count(Status::fail)},
                          {"expected-fail", count(Status::expected_fail)},
                          {"flagged", count(Status::flagged)}};
    out << summary.dump() << '\n';
    return out.str();
}

std::string Report::to_text() const {
    std::size_t wc = 5, ws = 7;
    for (const auto& v : verdicts_) {
        wc = std::max(wc, v.check.size());
        ws = std::max(ws, v.subject.size());
    }
    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    out << pad("check", wc) << "  " << pad("subject", ws) << "  status\n";
    for (const auto& v : verdicts_) {
        out << pad(v.check, wc) << "  " << pad(v.subject, ws) << "  " << status_name(v.status);
        if (!v.witness.empty()) out << "  residual: " << v.witness;
        if (!v.note.empty()) out << "  (" << v.note << ")";
        out << '\n';
    }
    out << "total " << verdicts_.size() << ", pass " << count(Status::pass) << ", fail "
        << count(Status::fail) << ", expected-fail " << count(Status::expected_fail)
        << ", flagged " << count(Status::flagged) << '\n';
    return out.str();
}

}  // namespace parabraid
