#include "ncorr/ncorr.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "errors.hpp"
#include "workbench.hpp"

struct ncorr_ctx {
    ncorr::workbench wb;
    std::string last_msg;
    int last_code = NCORR_OK;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int fail(ncorr_ctx* ctx, int code, const char* msg) {
    if (ctx) {
        ctx->last_code = code;
        ctx->last_msg = msg;
    }
    return code;
}

// translates the in-flight exception; call from a catch block only
int current_failure(ncorr_ctx* ctx) {
    try {
        throw;
    } catch (const ncorr::error& e) {
        return fail(ctx, static_cast<int>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(ctx, NCORR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ctx, NCORR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ctx, NCORR_ERR_INTERNAL, "unknown failure");
    }
}

void clear(ncorr_ctx* ctx) {
    ctx->last_code = NCORR_OK;
    ctx->last_msg.clear();
}

}  // namespace

extern "C" {

ncorr_ctx* ncorr_ctx_new(void) {
    try {
        return new ncorr_ctx();
    } catch (...) {
        return nullptr;
    }
}

void ncorr_ctx_free(ncorr_ctx* ctx) { delete ctx; }

int ncorr_set(ncorr_ctx* ctx, const char* key, const char* value) {
    if (!ctx) return NCORR_ERR_ARGUMENT;
    if (!key || !value) return fail(ctx, NCORR_ERR_ARGUMENT, "null key or value");
    clear(ctx);
    try {
        ctx->wb.set(key, value);
        return NCORR_OK;
    } catch (...) {
        return current_failure(ctx);
    }
}

int ncorr_get(ncorr_ctx* ctx, const char* key, char** value_out) {
    if (!ctx) return NCORR_ERR_ARGUMENT;
    if (!key || !value_out) return fail(ctx, NCORR_ERR_ARGUMENT, "null key or value_out");
    *value_out = nullptr;
    clear(ctx);
    try {
        *value_out = dup_string(ctx->wb.get(key));
        if (!*value_out) return fail(ctx, NCORR_ERR_INTERNAL, "out of memory");
        return NCORR_OK;
    } catch (...) {
        return current_failure(ctx);
    }
}

int ncorr_run(ncorr_ctx* ctx, const char* command, char** records_out, char** table_out,
              int* exit_code_out) {
    if (!ctx) return NCORR_ERR_ARGUMENT;
    if (!command || !exit_code_out)
        return fail(ctx, NCORR_ERR_ARGUMENT, "null command or exit_code_out");
    if (records_out) *records_out = nullptr;
    if (table_out) *table_out = nullptr;
    clear(ctx);
    try {
        ncorr::run_result r = ctx->wb.run(command);
        if (records_out) {
            *records_out = dup_string(r.records);
            if (!*records_out) return fail(ctx, NCORR_ERR_INTERNAL, "out of memory");
        }
        if (table_out) {
            *table_out = dup_string(r.table);
            if (!*table_out) {
                if (records_out) {
                    std::free(*records_out);
                    *records_out = nullptr;
                }
                return fail(ctx, NCORR_ERR_INTERNAL, "out of memory");
            }
        }
        *exit_code_out = r.exit_code;
        return NCORR_OK;
    } catch (...) {
        return current_failure(ctx);
    }
}

void ncorr_string_free(char* s) { std::free(s); }

const char* ncorr_last_error(const ncorr_ctx* ctx) { return ctx ? ctx->last_msg.c_str() : ""; }

int ncorr_last_error_code(const ncorr_ctx* ctx) {
    return ctx ? ctx->last_code : NCORR_ERR_ARGUMENT;
}

const char* ncorr_version(void) { return ncorr::workbench::version(); }

}  // extern "C"
