#pragma once

#include <optional>
#include <string>
#include <vector>

namespace parabraid {

enum class OutputFormat { automatic, jsonl, text };

struct CommandArgs {
    std::string command;  // check | bracket | table | schur | green
    std::string spec_path;
    std::optional<std::string> spec_text;  // used instead of spec_path when set
    OutputFormat format = OutputFormat::automatic;
    std::optional<int> threads;

    // bracket / table
    std::string side = "left";  // table also accepts "both"
    std::string variant = "alt";
    bool tensor = false;  // species specs: free-algebra bracket instead of the Q-realized one
    std::vector<std::string> operands;

    // schur
    std::string which = "left";
    std::vector<std::string> grades;  // three grades such as "(1,0)"; empty means every triple
    std::vector<long> dims;

    // green
    std::optional<int> order;
    std::optional<int> cutoff;
    std::optional<int> modes;
};

struct CommandResult {
    int exit_code = 0;  // 0 clean or flagged only, 1 unexpected failure, 2 spec or usage error
    std::string out;
    std::string err;
};

CommandResult run_command(const CommandArgs& args);

}  // namespace parabraid
