#include "flagdescent/capi.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>

#include "flagdescent/report.hpp"

using nlohmann::json;

struct fd_form {
    fd::StandardForm form;
    std::string name;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fd_status status_of(const fd::Error& e) {
    return e.is_parse() ? FD_ERR_PARSE : FD_ERR_MATH;
}

template <typename Fn>
fd_status guarded(char** json_out, Fn&& fn) {
    if (json_out) *json_out = nullptr;
    try {
        json report = fn();
        if (json_out) *json_out = dup_string(report.dump());
        return FD_OK;
    } catch (const fd::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return FD_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FD_ERR_OTHER;
    }
}

std::vector<int> pi_vector(const int* pi, int pi_len) {
    std::vector<int> out;
    for (int i = 0; i < pi_len; ++i) out.push_back(pi[i]);
    return out;
}

fd::IntVec lambda_vector(const long* lambda, int rank) {
    if (rank < 0 || (rank > 0 && !lambda)) fd::fail(fd::Errc::parse_error, "missing lambda");
    return fd::IntVec(lambda, lambda + rank);
}

} // namespace

extern "C" {

fd_status fd_form_parse(const char* spec, fd_form** out) {
    if (out) *out = nullptr;
    if (!spec || !out) {
        g_last_error = "null argument";
        return FD_ERR_PARSE;
    }
    try {
        auto handle = std::make_unique<fd_form>();
        handle->form = fd::StandardForm::parse(spec);
        handle->name = handle->form.name();
        *out = handle.release();
        return FD_OK;
    } catch (const fd::Error& e) {
        // rejected parameters are spec-level problems here, not math ones
        g_last_error = e.what();
        return FD_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FD_ERR_OTHER;
    }
}

void fd_form_free(fd_form* form) { delete form; }

const char* fd_form_name(const fd_form* form) { return form ? form->name.c_str() : ""; }

int fd_form_rank(const fd_form* form) { return form ? form->form.rank() : -1; }

fd_status fd_classify(const fd_form* form, const int* pi, int pi_len, int max_coord, char** json_out) {
    return guarded(json_out, [&]() {
        if (!form) fd::fail(fd::Errc::parse_error, "null form handle");
        if (pi_len < 0) return fd::classify_report(form->form, nullptr, max_coord);
        std::vector<int> subset = pi_vector(pi, pi_len);
        return fd::classify_report(form->form, &subset, max_coord);
    });
}

fd_status fd_check(const fd_form* form, const long* lambda, int rank, const int* pi, int pi_len,
                   char** json_out) {
    return guarded(json_out, [&]() {
        if (!form) fd::fail(fd::Errc::parse_error, "null form handle");
        return fd::check_report(form->form, lambda_vector(lambda, rank),
                                pi_vector(pi, pi_len < 0 ? 0 : pi_len));
    });
}

fd_status fd_verify_w(const fd_form* form, char** json_out) {
    return guarded(json_out, [&]() {
        if (!form) fd::fail(fd::Errc::parse_error, "null form handle");
        return fd::verify_w_report(form->form);
    });
}

fd_status fd_cocycle(const fd_form* form, const long* lambda, int rank, char** json_out) {
    return guarded(json_out, [&]() {
        if (!form) fd::fail(fd::Errc::parse_error, "null form handle");
        return fd::cocycle_report(form->form, lambda_vector(lambda, rank));
    });
}

fd_status fd_irr(const fd_form* form, const long* lambda, int rank, char** json_out) {
    return guarded(json_out, [&]() {
        if (!form) fd::fail(fd::Errc::parse_error, "null form handle");
        return fd::irr_report(form->form, lambda_vector(lambda, rank));
    });
}

fd_status fd_res_classify(const char* request_json, char** json_out) {
    return guarded(json_out, [&]() {
        if (!request_json) fd::fail(fd::Errc::parse_error, "null request");
        return fd::res_classify_report(json::parse(request_json));
    });
}

fd_status fd_render_text(const char* report_json, char** text_out) {
    if (text_out) *text_out = nullptr;
    try {
        if (!report_json) fd::fail(fd::Errc::parse_error, "null report");
        std::string text = fd::render_text(json::parse(report_json));
        if (text_out) *text_out = dup_string(text);
        return FD_OK;
    } catch (const fd::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FD_ERR_PARSE;
    }
}

const char* fd_last_error(void) { return g_last_error.c_str(); }

void fd_free_string(char* s) { std::free(s); }

} // extern "C"
