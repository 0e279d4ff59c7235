#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "etale/error.hpp"
#include "etale/parser.hpp"
#include "etale/report.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kBudgetExceeded = 2, kInternalError = 3 };

struct Options {
    std::string file;
    bool certificates = false;
    bool json = false;
    std::string order = "grevlex";
    std::size_t budget_pairs = etale::kDefaultPairBudget;
    std::size_t budget_primitive = etale::kDefaultPrimitiveBudget;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
    return buf.str();
}

int run(const std::string& command, const Options& opts) {
    std::string text;
    try {
        text = read_input(opts.file);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    try {
        const etale::MonomialOrder order =
            opts.order == "lex" ? etale::MonomialOrder::Lex : etale::MonomialOrder::GrevLex;
        etale::AlgebraPresentation presentation = etale::parse_input(text, order);
        if (command == "differentials") {
            etale::DifferentialsReport rep = etale::differentials(presentation, opts.budget_pairs);
            std::cout << (opts.json ? etale::render_json(rep) : etale::render_text(rep));
            return kOk;
        }
        etale::ClassifyOptions copts{order, opts.budget_pairs, opts.budget_primitive, opts.certificates};
        etale::ClassificationReport rep = etale::classify(presentation, copts);
        etale::Section section = etale::Section::Full;
        if (command == "nette") section = etale::Section::Nette;
        if (command == "smooth") section = etale::Section::Smooth;
        if (command == "etale") section = etale::Section::Etale;
        if (command == "decompose") section = etale::Section::Decompose;
        std::cout << (opts.json ? etale::render_json(rep, section) : etale::render_text(rep, section));
        return kOk;
    } catch (const etale::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case etale::ErrorCode::ParseError: return kInputError;
            case etale::ErrorCode::BudgetExceeded:
            case etale::ErrorCode::SearchExhausted: return kBudgetExceeded;
            default: return kInternalError;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether a finitely presented algebra over Q or GF(p) is nette, smooth or etale"};
    app.require_subcommand(1);
    Options opts;
    std::string chosen;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify", "full report"},
        {"nette", "netteness test (unit n-th determinantal ideal)"},
        {"etale", "standard-etale test, dimension and discriminant"},
        {"smooth", "standard and elementary smoothness tests"},
        {"differentials", "presentation of the module of differentials"},
        {"decompose", "product decomposition into monogenic separable factors"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", opts.file, "presentation file, or - for stdin")->required();
        sub->add_flag("--certificates", opts.certificates, "print Bezout combinations or failed ideals");
        sub->add_flag("--json", opts.json, "emit JSON");
        sub->add_option("--order", opts.order, "term order")
            ->check(CLI::IsMember({"grevlex", "lex"}))
            ->default_val("grevlex");
        sub->add_option("--budget-pairs", opts.budget_pairs, "critical-pair budget")
            ->default_val(etale::kDefaultPairBudget);
        sub->add_option("--budget-primitive", opts.budget_primitive, "primitive-element attempt budget")
            ->default_val(etale::kDefaultPrimitiveBudget);
        sub->callback([&chosen, name = name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    return run(chosen, opts);
}
