#include "parabraid/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using parabraid::CommandArgs;
    using parabraid::OutputFormat;

    CLI::App app{"Exact checker for braided graded algebras and ternary para-algebra brackets"};
    app.require_subcommand(1);

    CommandArgs args;
    std::string format = "auto";
    int threads = -1;
    app.add_option("--threads", threads, "Worker threads (0 = PARABRAID_THREADS or all cores)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"auto", "jsonl", "text"}));

    auto spec_arg = [&](CLI::App* sub) {
        sub->add_option("spec", args.spec_path, "Spec file (JSON)")->required();
        sub->add_option("--threads", threads, "Worker threads (0 = PARABRAID_THREADS or all cores)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"auto", "jsonl", "text"}));
    };

    auto* check = app.add_subcommand("check", "Run every checker suite that applies to the input");
    spec_arg(check);

    auto* bracket = app.add_subcommand("bracket", "Evaluate one ternary bracket");
    spec_arg(bracket);
    bracket->add_option("--side", args.side)->check(CLI::IsMember({"left", "right"}));
    bracket->add_option("--variant", args.variant)->check(CLI::IsMember({"alt", "sym"}));
    bracket->add_flag("--tensor", args.tensor, "Free-algebra bracket even when a pairing is declared");
    bracket->add_option("operands", args.operands, "Three generator ids")->expected(3);

    auto* table = app.add_subcommand("table", "Relation table of the Q-realized brackets");
    spec_arg(table);
    table->add_option("--side", args.side)->check(CLI::IsMember({"left", "right", "both"}));

    auto* schur = app.add_subcommand("schur", "Braided symmetrizer coefficients and ranks");
    spec_arg(schur);
    schur->add_option("--which", args.which)->check(CLI::IsMember({"left", "right"}));
    schur->add_option("--grades", args.grades, "Three grades, e.g. (1,0) (0,1) (1,1)")->expected(3);
    schur->add_option("--dims", args.dims, "Component dimensions for the classical identity")->check(CLI::PositiveNumber);

    auto* green = app.add_subcommand("green", "Green-ansatz operator check");
    spec_arg(green);
    int order = 0, cutoff = 0, modes = -1;
    green->add_option("--order", order, "Number of Green components")->check(CLI::Range(1, 4));
    green->add_option("--cutoff", cutoff, "Boson occupation cutoff")->check(CLI::Range(3, 64));
    green->add_option("--modes", modes, "Modes per species (0 = all)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    args.command = app.get_subcommands().front()->get_name();
    if (threads >= 0) args.threads = threads;
    if (format == "jsonl") args.format = OutputFormat::jsonl;
    if (format == "text") args.format = OutputFormat::text;
    if (order > 0) args.order = order;
    if (cutoff > 0) args.cutoff = cutoff;
    if (modes >= 0) args.modes = modes;
    if (args.side == "left" && table->parsed() && table->count("--side") == 0) args.side = "both";

    const auto result = parabraid::run_command(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
