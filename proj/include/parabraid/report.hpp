#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace parabraid {

enum class Status { pass, fail, expected_fail, flagged };

std::string status_name(Status s);

struct Verdict {
    std::string check;
    std::string subject;
    Status status = Status::pass;
    std::string witness;  // rendered residual on anything but pass
    std::string note;
};

class Report {
public:
    void add(Verdict v) { verdicts_.push_back(std::move(v)); }
    void append(const Report& other);
    const std::vector<Verdict>& verdicts() const { return verdicts_; }

    std::size_t count(Status s) const;
    std::size_t count(const std::string& check, Status s) const;
    bool all_pass() const { return count(Status::pass) == verdicts_.size(); }
    bool has_unexpected_failure() const { return count(Status::fail) > 0; }

    /// One JSON object per line: header, verdicts in insertion order, summary.
    std::string to_jsonl(const std::map<std::string, std::string>& header) const;
    std::string to_text() const;

private:
    std::vector<Verdict> verdicts_;
};

}  // namespace parabraid
