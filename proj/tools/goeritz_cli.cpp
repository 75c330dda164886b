#include <CLI11.hpp>

#include "goeritz/colorings.hpp"
#include "goeritz/examples.hpp"
#include "goeritz/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace goeritz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("GOERITZ_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed GOERITZ_ENUM_CAP\n";
    }
    return kDefaultEnumCap;
}

/// Built-in example name, or a path on disk.
std::string read_source(const std::string& ref, bool& io_error) {
    io_error = false;
    if (has_example(ref)) return example_source(ref);
    std::ifstream in(ref);
    if (!in) {
        io_error = true;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ShadingSpec {
    bool unbounded = true;
    int face = 0;
    int value = 0;
};

// "<face>:<0|1>" with face a global face id or "unbounded"/"u".
bool parse_shading_spec(const std::string& text, ShadingSpec& out) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    std::string face = text.substr(0, colon);
    std::string val = text.substr(colon + 1);
    if (val != "0" && val != "1") return false;
    out.value = val == "1" ? 1 : 0;
    if (face == "unbounded" || face == "u") {
        out.unbounded = true;
        return true;
    }
    try {
        out.face = std::stoi(face);
        out.unbounded = false;
        return out.face >= 0;
    } catch (...) {
        return false;
    }
}

Shading make_shading(const Diagram& d, const ShadingSpec& spec) {
    int face = spec.unbounded ? d.unbounded_face() : spec.face;
    return checkerboard_shade(d, face, spec.value);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int load_or_fail(const std::string& ref, Diagram& d) {
    bool io_error = false;
    std::string src = read_source(ref, io_error);
    if (io_error) {
        std::cerr << "error: cannot read '" << ref << "'\n";
        return kExitUsage;
    }
    try {
        d = parse_diagram(src);
    } catch (const ParseError& e) {
        ordered_json j;
        j["ok"] = false;
        j["errors"] = {{{"code", e.code},
                        {"message", e.what()},
                        {"location", std::to_string(e.line) + ":" + std::to_string(e.col)}}};
        emit(j);
        return kExitDomain;
    }
    ValidationReport rep = validate_diagram(d);
    if (!rep.ok) {
        emit(json_report(rep, d));
        return kExitDomain;
    }
    analyze(d);
    return kExitOk;
}

void print_verify_text(const VerifyReport& rep, const std::string& subject) {
    for (const auto& r : rep.rows) {
        std::string state = r.skipped ? "SKIP" : (r.pass ? "pass" : "FAIL");
        std::cout << state << "  " << subject << "  " << r.check;
        if (r.shading >= 0) std::cout << "  s=" << r.shading;
        if (r.modulus > 0) std::cout << "  m=" << r.modulus;
        if (!r.skipped) std::cout << "  expected=" << r.expected << "  actual=" << r.actual;
        if (r.skipped) std::cout << "  (" << r.note << ")";
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fox and Dehn coloring groups of link diagrams via the Goeritz matrix"};
    app.require_subcommand(1);

    std::string input;
    std::string shading_text = "unbounded:0";
    std::string group_spec = "Z";
    std::vector<long long> mods;
    std::string mod_range;
    bool text_output = false;
    bool all_examples = false;
    bool list_names = false;
    std::string emit_name;

    CLI::App* validate = app.add_subcommand("validate", "Parse and validate a diagram");
    validate->add_option("diagram", input, "Built-in name or file path")->required();
    validate->add_flag("--text", text_output);

    CLI::App* goeritz_cmd = app.add_subcommand("goeritz", "Shading, Goeritz matrix and indices");
    goeritz_cmd->add_option("diagram", input)->required();
    goeritz_cmd->add_option("--shading", shading_text, "Reference <face>:<0|1> (default unbounded:0)");

    CLI::App* invariants = app.add_subcommand("invariants", "Coloring groups and counts");
    invariants->add_option("diagram", input)->required();
    invariants->add_option("--shading", shading_text);
    invariants->add_option("--group", group_spec, "Coefficient group, e.g. Z, Z/8, Z^1+Z/2");
    invariants->add_option("--mod", mods, "Modulus for coloring counts (repeatable)");
    invariants->add_flag("--text", text_output);

    CLI::App* verify = app.add_subcommand("verify", "Run the theorem checks");
    verify->add_option("diagram", input);
    verify->add_flag("--all-examples", all_examples);
    verify->add_option("--mod-range", mod_range, "Moduli a..b (default 2..9)");
    verify->add_flag("--text", text_output);

    CLI::App* examples_cmd = app.add_subcommand("examples", "Built-in diagram library");
    examples_cmd->add_flag("--list", list_names);
    examples_cmd->add_option("--emit", emit_name, "Print one diagram source");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    const std::uint64_t cap = enumeration_cap();

    ShadingSpec sspec;
    if (!parse_shading_spec(shading_text, sspec)) {
        std::cerr << "error: bad --shading value '" << shading_text << "'\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed()) {
            bool io_error = false;
            std::string src = read_source(input, io_error);
            if (io_error) {
                std::cerr << "error: cannot read '" << input << "'\n";
                return kExitUsage;
            }
            Diagram d;
            try {
                d = parse_diagram(src);
            } catch (const ParseError& e) {
                if (text_output) {
                    std::cout << "invalid\n"
                              << e.code << "  " << e.what() << "  [" << e.line << ":" << e.col
                              << "]\n";
                } else {
                    ordered_json j;
                    j["ok"] = false;
                    j["errors"] = {
                        {{"code", e.code},
                         {"message", e.what()},
                         {"location", std::to_string(e.line) + ":" + std::to_string(e.col)}}};
                    emit(j);
                }
                return kExitDomain;
            }
            ValidationReport rep = validate_diagram(d);
            if (text_output) {
                std::cout << (rep.ok ? "ok" : "invalid") << "\n";
                for (const auto& err : rep.errors)
                    std::cout << err.code << "  " << err.message
                              << (err.location.empty() ? "" : "  [" + err.location + "]") << "\n";
            } else {
                emit(json_report(rep, d));
            }
            return rep.ok ? kExitOk : kExitDomain;
        }

        if (goeritz_cmd->parsed()) {
            Diagram d;
            if (int rc = load_or_fail(input, d); rc != kExitOk) return rc;
            Shading s = make_shading(d, sspec);
            emit(json_goeritz(d, s, goeritz_matrix(d, s)));
            return kExitOk;
        }

        if (invariants->parsed()) {
            Diagram d;
            if (int rc = load_or_fail(input, d); rc != kExitOk) return rc;
            Shading s = make_shading(d, sspec);
            FgAbelianGroup coeff;
            try {
                coeff = FgAbelianGroup::parse(group_spec);
            } catch (const std::exception& e) {
                std::cerr << "error: bad --group spec: " << e.what() << "\n";
                return kExitUsage;
            }
            ColoringReport rep = coloring_report(d, s, coeff, mods, cap);
            if (text_output) {
                std::cout << "crossings " << rep.crossings << ", arcs " << rep.arcs << ", faces "
                          << rep.faces << ", components " << rep.components << "\n";
                std::cout << "beta " << rep.beta << ", kernel " << rep.kernel.to_string()
                          << ", fox " << rep.fox.to_string() << ", dehn " << rep.dehn.to_string()
                          << "\n";
            } else {
                emit(json_coloring_report(rep));
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            long long lo = 2, hi = 9;
            if (!mod_range.empty()) {
                auto dots = mod_range.find("..");
                bool ok = dots != std::string::npos;
                if (ok) {
                    try {
                        lo = std::stoll(mod_range.substr(0, dots));
                        hi = std::stoll(mod_range.substr(dots + 2));
                    } catch (...) {
                        ok = false;
                    }
                }
                if (!ok || lo < 2 || hi < lo) {
                    std::cerr << "error: bad --mod-range '" << mod_range << "'\n";
                    return kExitUsage;
                }
            }
            std::vector<long long> moduli;
            for (long long m = lo; m <= hi; ++m) moduli.push_back(m);

            std::vector<std::string> subjects;
            if (all_examples) {
                subjects = example_names();
            } else if (!input.empty()) {
                subjects.push_back(input);
            } else {
                std::cerr << "error: verify needs a diagram or --all-examples\n";
                return kExitUsage;
            }

            bool all_ok = true;
            ordered_json out = ordered_json::array();
            for (const std::string& subject : subjects) {
                Diagram d;
                if (int rc = load_or_fail(subject, d); rc != kExitOk) return rc;
                VerifyReport rep = verify_theorems(d, moduli, cap);
                all_ok = all_ok && rep.all_pass();
                if (text_output)
                    print_verify_text(rep, subject);
                else
                    out.push_back(json_verify(rep, subject));
            }
            if (!text_output) emit(out);
            return all_ok ? kExitOk : kExitDomain;
        }

        if (examples_cmd->parsed()) {
            if (list_names) {
                for (const std::string& name : example_names()) std::cout << name << "\n";
                return kExitOk;
            }
            if (!emit_name.empty()) {
                if (!has_example(emit_name)) {
                    std::cerr << "error: unknown example '" << emit_name << "'\n";
                    return kExitUsage;
                }
                std::cout << example_source(emit_name);
                return kExitOk;
            }
            std::cerr << "error: examples needs --list or --emit NAME\n";
            return kExitUsage;
        }
    } catch (const ColoringError& e) {
        std::cerr << "error: " << e.code << ": " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
