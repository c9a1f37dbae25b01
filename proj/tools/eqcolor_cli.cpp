#include "eqcolor/construction.hpp"
#include "eqcolor/core.hpp"
#include "eqcolor/feasibility.hpp"
#include "eqcolor/oracle.hpp"
#include "eqcolor/threshold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using eqcolor::Int;
using json = nlohmann::json;

std::vector<Int> read_sizes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw eqcolor::validation_error("cannot open sizes file: " + path);
    std::vector<Int> sizes;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        Int value;
        if (fields >> value) {
            sizes.push_back(value);
            std::string rest;
            if (fields >> rest)
                throw eqcolor::validation_error("sizes file: one integer per line expected");
        } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            throw eqcolor::validation_error("sizes file: malformed line: " + line);
        }
    }
    return sizes;
}

eqcolor::Instance resolve_instance(const std::vector<Int>& positional, const std::string& file) {
    if (!file.empty() && !positional.empty())
        throw eqcolor::validation_error("give sizes either positionally or via --file, not both");
    if (!file.empty()) return eqcolor::make_instance(read_sizes_file(file));
    if (positional.empty()) throw eqcolor::validation_error("no partite-set sizes given");
    return eqcolor::make_instance(positional);
}

json instance_json(const eqcolor::Instance& inst) {
    return json{{"sizes", inst.sizes()}, {"total", inst.total()}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// "2,4,6,8-14" style run-length display of a sorted list.
std::string format_runs(const std::vector<Int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
        if (i) out << ",";
        if (j > i + 1)
            out << values[i] << "-" << values[j];
        else if (j == i + 1)
            out << values[i] << "," << values[j];
        else
            out << values[i];
        i = j + 1;
    }
    return out.str();
}

json coloring_json(const eqcolor::Instance& inst, const eqcolor::EquitableColoring& coloring) {
    return json{{"schema", 1},
                {"instance", instance_json(inst)},
                {"r", coloring.class_count()},
                {"classes", coloring.classes},
                {"empty_classes", coloring.empty_classes}};
}

int run(int argc, char** argv) {
    CLI::App app{"equitable colorings of complete multipartite graphs"};
    app.require_subcommand(1);

    std::vector<Int> sizes;
    std::string sizes_file;
    std::string format = "text";
    bool use_oracle = false;
    Int opt_r = 0;
    Int opt_q = 0;
    Int opt_max = 0;
    std::string coloring_file;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("sizes", sizes, "partite-set sizes");
        cmd->add_option("--file", sizes_file, "read sizes from a file, one per line");
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* cmd_feasible = app.add_subcommand("feasible", "decide equitable r-colorability");
    cmd_feasible->add_option("--r", opt_r, "number of color classes")->required();
    cmd_feasible->add_flag("--oracle", use_oracle, "cross-check against the brute-force oracle");
    add_common(cmd_feasible);

    auto* cmd_p = app.add_subcommand("p", "compute p(q) and its witness d");
    cmd_p->add_option("--q", opt_q, "feasible color count the interval ends at")->required();
    add_common(cmd_p);

    auto* cmd_threshold = app.add_subcommand("threshold", "equitable chromatic threshold");
    cmd_threshold->add_flag("--oracle", use_oracle, "cross-check against the brute-force oracle");
    add_common(cmd_threshold);

    auto* cmd_spectrum = app.add_subcommand("spectrum", "feasible r values up to a bound");
    cmd_spectrum->add_option("--max", opt_max, "largest r to report (default: vertex count)");
    add_common(cmd_spectrum);

    auto* cmd_color = app.add_subcommand("color", "construct an equitable r-coloring");
    cmd_color->add_option("--r", opt_r, "number of color classes")->required();
    add_common(cmd_color);

    auto* cmd_check = app.add_subcommand("check", "verify a coloring document");
    cmd_check->add_option("--coloring", coloring_file, "JSON coloring document")->required();
    add_common(cmd_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool as_json = format == "json";

    if (cmd_feasible->parsed()) {
        const auto inst = resolve_instance(sizes, sizes_file);
        const bool answer = eqcolor::feasible(inst, opt_r);
        json doc{{"schema", 1}, {"instance", instance_json(inst)}, {"r", opt_r},
                 {"feasible", answer}};
        if (use_oracle) {
            const bool oracle_answer = eqcolor::oracle_feasible(inst, opt_r);
            doc["oracle"] = oracle_answer;
            if (oracle_answer != answer) {
                std::cerr << "mismatch: feasible=" << (answer ? "true" : "false")
                          << " oracle=" << (oracle_answer ? "true" : "false") << "\n";
                if (as_json) emit(doc);
                return 1;
            }
        }
        if (as_json)
            emit(doc);
        else
            std::cout << (answer ? "feasible" : "infeasible") << "\n";
        return answer ? 0 : 1;
    }

    if (cmd_p->parsed() || cmd_threshold->parsed()) {
        const auto inst = resolve_instance(sizes, sizes_file);
        const auto result = cmd_p->parsed() ? eqcolor::p_of_q(inst, opt_q)
                                            : eqcolor::equitable_chromatic_threshold(inst);
        json doc{{"schema", 1}, {"instance", instance_json(inst)}, {"q", result.q},
                 {"p", result.p}, {"d", result.d}};
        if (cmd_threshold->parsed() && use_oracle) {
            const Int oracle_p = eqcolor::oracle_threshold(inst);
            doc["oracle"] = oracle_p;
            if (oracle_p != result.p) {
                std::cerr << "mismatch: threshold=" << result.p << " oracle=" << oracle_p << "\n";
                if (as_json) emit(doc);
                return 1;
            }
        }
        if (as_json)
            emit(doc);
        else
            std::cout << "p=" << result.p << " d=" << result.d << "\n";
        return 0;
    }

    if (cmd_spectrum->parsed()) {
        const auto inst = resolve_instance(sizes, sizes_file);
        const Int r_max = cmd_spectrum->count("--max") ? opt_max : inst.total();
        const auto report = eqcolor::spectrum(inst, r_max);
        std::vector<Int> yes, no;
        for (const auto& [r, ok] : report.entries) (ok ? yes : no).push_back(r);
        if (as_json) {
            emit(json{{"schema", 1}, {"instance", instance_json(inst)}, {"max", r_max},
                      {"feasible", yes}, {"infeasible", no}});
        } else {
            std::cout << "feasible: " << format_runs(yes)
                      << "; infeasible: " << format_runs(no) << "\n";
        }
        return 0;
    }

    if (cmd_color->parsed()) {
        const auto inst = resolve_instance(sizes, sizes_file);
        const auto coloring = eqcolor::construct_coloring(inst, opt_r);
        if (as_json) {
            emit(coloring_json(inst, coloring));
        } else {
            for (std::size_t i = 0; i < coloring.classes.size(); ++i) {
                std::cout << "part " << i + 1 << ":";
                for (Int size : coloring.classes[i]) std::cout << " " << size;
                std::cout << "\n";
            }
            if (coloring.empty_classes > 0)
                std::cout << "empty classes: " << coloring.empty_classes << "\n";
        }
        return 0;
    }

    if (cmd_check->parsed()) {
        const auto inst = resolve_instance(sizes, sizes_file);
        std::ifstream in(coloring_file);
        if (!in) throw eqcolor::validation_error("cannot open coloring file: " + coloring_file);
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw eqcolor::validation_error(std::string("malformed coloring document: ") +
                                            e.what());
        }
        eqcolor::EquitableColoring coloring;
        try {
            coloring.classes = doc.at("classes").get<std::vector<std::vector<Int>>>();
            coloring.empty_classes = doc.value("empty_classes", Int{0});
            if (doc.contains("instance") &&
                doc["instance"].value("sizes", inst.sizes()) != inst.sizes())
                throw eqcolor::validation_error(
                    "coloring document was produced for different sizes");
        } catch (const json::exception& e) {
            throw eqcolor::validation_error(std::string("malformed coloring document: ") +
                                            e.what());
        }
        auto issues = eqcolor::verify_issues(inst, coloring);
        if (doc.contains("r") && doc["r"].get<Int>() != coloring.class_count())
            issues.push_back("declared r does not match the class count");
        if (issues.empty()) {
            std::cout << "valid\n";
            return 0;
        }
        std::cout << "invalid:";
        for (const auto& issue : issues) std::cout << " " << issue << ";";
        std::cout << "\n";
        return 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const eqcolor::infeasible_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const eqcolor::oracle_budget_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const eqcolor::validation_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
