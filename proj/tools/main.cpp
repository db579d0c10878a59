// Command line front end; talks to the library through the C API only.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "flagdescent/capi.h"

namespace {

struct FormDeleter {
    void operator()(fd_form* f) const { fd_form_free(f); }
};
using FormPtr = std::unique_ptr<fd_form, FormDeleter>;

struct StringDeleter {
    void operator()(char* s) const { fd_free_string(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int report_error(fd_status st) {
    std::fprintf(stderr, "error: %s\n", fd_last_error());
    return int(st);
}

// comma separated integers; an empty string is the empty list
template <typename T>
bool parse_int_list(const std::string& text, std::vector<T>& out) {
    out.clear();
    if (text.empty()) return true;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) return false;
            out.push_back(T(v));
        } catch (const std::exception&) {
            return false;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return true;
}

int emit(const CString& json_report, const std::string& format) {
    if (format == "json") {
        std::printf("%s\n", json_report.get());
        return 0;
    }
    char* text = nullptr;
    fd_status st = fd_render_text(json_report.get(), &text);
    if (st != FD_OK) return report_error(st);
    CString owned(text);
    std::fputs(owned.get(), stdout);
    return 0;
}

FormPtr parse_form_or_exit(const std::string& spec, int& error) {
    fd_form* raw = nullptr;
    fd_status st = fd_form_parse(spec.c_str(), &raw);
    if (st != FD_OK) {
        error = report_error(st);
        return nullptr;
    }
    error = 0;
    return FormPtr(raw);
}

std::string read_stream(std::FILE* f) {
    std::string data;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) data.append(buf, got);
    return data;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of half-integral parabolic types and equivariant line bundles\n"
                 "on partial flag schemes of the standard Z[1/2]-forms of classical groups"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string form_spec, lambda_text, pi_text;
    bool pi_given = false;
    int max_coord = 1;

    auto add_form = [&](CLI::App* cmd) { cmd->add_option("form", form_spec, "form spec, e.g. u:2,1")->required(); };

    CLI::App* classify = app.add_subcommand("classify", "Dynkin scheme, parabolic types, line bundles");
    add_form(classify);
    classify->add_option("--pi", pi_text, "restrict to one Pi' (comma separated indices; '' = empty set)");
    classify->add_option("--max-coord", max_coord, "bound for example lambda listings");

    CLI::App* check = app.add_subcommand("check", "descent verdict for one character");
    add_form(check);
    check->add_option("--lambda", lambda_text, "character coordinates")->required();
    check->add_option("--pi", pi_text, "Pi' indices ('' = empty set)");

    CLI::App* verify = app.add_subcommand("verify-w", "matrix-level checks for the catalogued w");
    add_form(verify);

    CLI::App* cocycle = app.add_subcommand("cocycle", "the 2-cocycle beta_lambda and its triviality");
    add_form(cocycle);
    cocycle->add_option("--lambda", lambda_text, "character coordinates")->required();

    CLI::App* irr = app.add_subcommand("irr", "Irr partition class of an antidominant character");
    add_form(irr);
    irr->add_option("--lambda", lambda_text, "character coordinates")->required();

    CLI::App* res = app.add_subcommand("res-classify", "Weil-restriction case from a JSON request");
    std::string res_input = "-";
    res->add_option("input", res_input, "request file, or '-' for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // keep 0 for --help, report 2 for bad usage
    }
    pi_given = classify->count("--pi") > 0;

    std::vector<long> lambda;
    if (!parse_int_list(lambda_text, lambda)) {
        std::fprintf(stderr, "error: bad --lambda '%s'\n", lambda_text.c_str());
        return 2;
    }
    std::vector<int> pi;
    if (!parse_int_list(pi_text, pi)) {
        std::fprintf(stderr, "error: bad --pi '%s'\n", pi_text.c_str());
        return 2;
    }

    char* raw = nullptr;
    fd_status st = FD_OK;

    if (res->parsed()) {
        std::string request;
        if (res_input == "-") {
            request = read_stream(stdin);
        } else {
            std::FILE* f = std::fopen(res_input.c_str(), "rb");
            if (!f) {
                std::fprintf(stderr, "error: cannot open '%s'\n", res_input.c_str());
                return 2;
            }
            request = read_stream(f);
            std::fclose(f);
        }
        st = fd_res_classify(request.c_str(), &raw);
        if (st != FD_OK) return report_error(st);
        return emit(CString(raw), format);
    }

    int parse_err = 0;
    FormPtr form = parse_form_or_exit(form_spec, parse_err);
    if (!form) return parse_err;

    if (classify->parsed()) {
        st = fd_classify(form.get(), pi.data(), pi_given ? int(pi.size()) : -1, max_coord, &raw);
    } else if (check->parsed()) {
        st = fd_check(form.get(), lambda.data(), int(lambda.size()), pi.data(), int(pi.size()), &raw);
    } else if (verify->parsed()) {
        st = fd_verify_w(form.get(), &raw);
    } else if (cocycle->parsed()) {
        st = fd_cocycle(form.get(), lambda.data(), int(lambda.size()), &raw);
    } else if (irr->parsed()) {
        st = fd_irr(form.get(), lambda.data(), int(lambda.size()), &raw);
    }
    if (st != FD_OK) return report_error(st);
    return emit(CString(raw), format);
}
