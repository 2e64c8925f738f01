#include "tabinv.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "appendix.hpp"
#include "bijections.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "partition.hpp"
#include "tableau.hpp"
#include "verify.hpp"

struct tabinv_partition {
    tabinv::Partition value;
};
struct tabinv_tableau {
    tabinv::Tableau value;
};
struct tabinv_distribution {
    tabinv::InversionDistribution value;
};

// the C codes and the internal status enum must stay in lockstep
static_assert(static_cast<int>(tabinv::Status::ok) == TABINV_OK);
static_assert(static_cast<int>(tabinv::Status::parse_error) == TABINV_ERROR_PARSE);
static_assert(static_cast<int>(tabinv::Status::invalid_argument) ==
              TABINV_ERROR_INVALID_ARGUMENT);
static_assert(static_cast<int>(tabinv::Status::unsupported_shape) ==
              TABINV_ERROR_UNSUPPORTED_SHAPE);
static_assert(static_cast<int>(tabinv::Status::wrong_inversion_count) ==
              TABINV_ERROR_WRONG_INVERSION_COUNT);
static_assert(static_cast<int>(tabinv::Status::input_not_standard) ==
              TABINV_ERROR_INPUT_NOT_STANDARD);
static_assert(static_cast<int>(tabinv::Status::shape_mismatch) ==
              TABINV_ERROR_SHAPE_MISMATCH);
static_assert(static_cast<int>(tabinv::Status::budget_exceeded) ==
              TABINV_ERROR_BUDGET_EXCEEDED);
static_assert(static_cast<int>(tabinv::Status::domain_error) == TABINV_ERROR_DOMAIN);
static_assert(static_cast<int>(tabinv::Status::verify_failed) == TABINV_ERROR_VERIFY_FAILED);
static_assert(static_cast<int>(tabinv::Status::internal_error) == TABINV_ERROR_INTERNAL);

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
tabinv_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const tabinv::Error& e) {
        g_last_error = e.what();
        return static_cast<tabinv_status>(e.status());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TABINV_ERROR_INTERNAL;
    }
}

unsigned worker_count(int workers) {
    return workers <= 0 ? 1u : static_cast<unsigned>(workers);
}

std::uint64_t budget_or_default(std::uint64_t budget) {
    return budget == 0 ? tabinv::kDefaultBudget : budget;
}

} // namespace

extern "C" {

const char* tabinv_last_error(void) {
    return g_last_error.c_str();
}

const char* tabinv_status_name(tabinv_status status) {
    switch (status) {
        case TABINV_OK: return "ok";
        case TABINV_ERROR_PARSE: return "parse-error";
        case TABINV_ERROR_INVALID_ARGUMENT: return "invalid-argument";
        case TABINV_ERROR_UNSUPPORTED_SHAPE: return "unsupported-shape";
        case TABINV_ERROR_WRONG_INVERSION_COUNT: return "wrong-inversion-count";
        case TABINV_ERROR_INPUT_NOT_STANDARD: return "input-not-standard";
        case TABINV_ERROR_SHAPE_MISMATCH: return "shape-mismatch";
        case TABINV_ERROR_BUDGET_EXCEEDED: return "budget-exceeded";
        case TABINV_ERROR_DOMAIN: return "domain-error";
        case TABINV_ERROR_VERIFY_FAILED: return "verify-failed";
        case TABINV_ERROR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

void tabinv_string_free(char* s) {
    delete[] s;
}

tabinv_status tabinv_partition_parse(const char* text, tabinv_partition** out) {
    return guarded([&] {
        *out = new tabinv_partition{tabinv::Partition::parse(text ? text : "")};
        return TABINV_OK;
    });
}

void tabinv_partition_free(tabinv_partition* p) {
    delete p;
}

char* tabinv_partition_format(const tabinv_partition* p) {
    return dup_string(p->value.format());
}

size_t tabinv_partition_rows(const tabinv_partition* p) {
    return p->value.rows();
}

uint32_t tabinv_partition_row_length(const tabinv_partition* p, size_t row_1based) {
    if (row_1based < 1 || row_1based > p->value.rows()) return 0;
    return p->value.part(row_1based);
}

uint64_t tabinv_partition_boxes(const tabinv_partition* p) {
    return p->value.box_count();
}

uint64_t tabinv_max_inversions(const tabinv_partition* p) {
    return tabinv::max_inversions(p->value);
}

tabinv_status tabinv_standard_count(const tabinv_partition* p, char** decimal_out) {
    return guarded([&] {
        *decimal_out = dup_string(tabinv::to_decimal(tabinv::standard_count_hook(p->value)));
        return TABINV_OK;
    });
}

tabinv_status tabinv_total_inverted_count(const tabinv_partition* p, char** decimal_out) {
    return guarded([&] {
        *decimal_out = dup_string(tabinv::to_decimal(tabinv::total_inverted_count(p->value)));
        return TABINV_OK;
    });
}

tabinv_status tabinv_stair_steps(const tabinv_partition* p, char** json_out) {
    return guarded([&] {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& [move, shape] : tabinv::stair_step_shapes(p->value))
            j.push_back({{"source_row", move.source_row},
                         {"target_row", move.target_row},
                         {"shape", shape.parts()}});
        *json_out = dup_string(j.dump() + "\n");
        return TABINV_OK;
    });
}

tabinv_status tabinv_tableau_parse(const char* text, tabinv_tableau** out) {
    return guarded([&] {
        *out = new tabinv_tableau{tabinv::Tableau::parse(text ? text : "")};
        return TABINV_OK;
    });
}

void tabinv_tableau_free(tabinv_tableau* t) {
    delete t;
}

char* tabinv_tableau_format(const tabinv_tableau* t) {
    return dup_string(t->value.format());
}

tabinv_status tabinv_tableau_shape(const tabinv_tableau* t, tabinv_partition** out) {
    return guarded([&] {
        *out = new tabinv_partition{t->value.shape()};
        return TABINV_OK;
    });
}

int tabinv_is_row_standard(const tabinv_tableau* t) {
    return tabinv::is_row_standard(t->value) ? 1 : 0;
}

int tabinv_is_column_standard(const tabinv_tableau* t) {
    return tabinv::is_column_standard(t->value) ? 1 : 0;
}

tabinv_status tabinv_inversions(const tabinv_tableau* t, char** json_out) {
    return guarded([&] {
        tabinv::InvertedTableau inv(t->value);
        auto pairs = tabinv::inversions(inv);
        nlohmann::ordered_json j;
        j["tableau"] = t->value.format();
        j["count"] = pairs.size();
        j["pairs"] = nlohmann::ordered_json::array();
        for (const auto& pair : pairs)
            j["pairs"].push_back({{"small", pair.small},
                                  {"large", pair.large},
                                  {"column", pair.column}});
        *json_out = dup_string(j.dump() + "\n");
        return TABINV_OK;
    });
}

tabinv_status tabinv_inversion_count(const tabinv_tableau* t, uint64_t* count_out) {
    return guarded([&] {
        tabinv::InvertedTableau inv(t->value);
        *count_out = tabinv::inversion_count(inv);
        return TABINV_OK;
    });
}

tabinv_status tabinv_standardize(const tabinv_tableau* t, tabinv_tableau** out) {
    return guarded([&] {
        tabinv::InvertedTableau inv(t->value);
        *out = new tabinv_tableau{tabinv::standardize(inv)};
        return TABINV_OK;
    });
}

tabinv_status tabinv_max_inversion_tableau(const tabinv_partition* p, tabinv_tableau** out) {
    return guarded([&] {
        *out = new tabinv_tableau{tabinv::max_inversion_tableau(p->value).tableau()};
        return TABINV_OK;
    });
}

tabinv_status tabinv_distribution_compute(const tabinv_partition* p, int workers,
                                          uint64_t budget, tabinv_distribution** out) {
    return guarded([&] {
        *out = new tabinv_distribution{tabinv::inversion_distribution(
            p->value, worker_count(workers), budget_or_default(budget))};
        return TABINV_OK;
    });
}

void tabinv_distribution_free(tabinv_distribution* d) {
    delete d;
}

size_t tabinv_distribution_length(const tabinv_distribution* d) {
    return d->value.counts.size();
}

uint64_t tabinv_distribution_count(const tabinv_distribution* d, size_t i) {
    return i < d->value.counts.size() ? d->value.counts[i] : 0;
}

uint64_t tabinv_distribution_total(const tabinv_distribution* d) {
    return d->value.total();
}

tabinv_status tabinv_distribution_render(const tabinv_distribution* d, const char* format,
                                         char** out) {
    return guarded([&] {
        std::string f = format ? format : "text";
        if (f == "text")
            *out = dup_string(d->value.to_text());
        else if (f == "json")
            *out = dup_string(d->value.to_json());
        else if (f == "csv")
            *out = dup_string(d->value.to_csv());
        else
            tabinv::fail(tabinv::Status::invalid_argument,
                         "format must be text, json or csv");
        return TABINV_OK;
    });
}

tabinv_status tabinv_fiber(const tabinv_tableau* T, uint64_t budget, char** lines_out,
                           uint64_t* count_out) {
    return guarded([&] {
        auto fiber = tabinv::fiber(T->value, budget_or_default(budget));
        std::string lines;
        for (const auto& t : fiber) {
            lines += t.tableau().format();
            lines += '\n';
        }
        *lines_out = dup_string(lines);
        if (count_out) *count_out = fiber.size();
        return TABINV_OK;
    });
}

tabinv_status tabinv_betti_render(const tabinv_partition* p, int workers, uint64_t budget,
                                  const char* format, char** out) {
    return guarded([&] {
        auto betti = tabinv::betti_numbers(p->value, worker_count(workers),
                                           budget_or_default(budget));
        std::string f = format ? format : "text";
        if (f == "json") {
            *out = dup_string(tabinv::betti_to_json(p->value, betti));
        } else if (f == "csv") {
            std::string s = "m,betti\n";
            for (std::size_t i = 0; i < betti.size(); ++i)
                s += std::to_string(i) + "," + std::to_string(betti[i]) + "\n";
            *out = dup_string(s);
        } else if (f == "text") {
            std::string s;
            for (std::size_t i = 0; i < betti.size(); ++i)
                s += "b" + std::to_string(i) + " " + std::to_string(betti[i]) + "\n";
            *out = dup_string(s);
        } else {
            tabinv::fail(tabinv::Status::invalid_argument,
                         "format must be text, json or csv");
        }
        return TABINV_OK;
    });
}

tabinv_status tabinv_map_phi1(const tabinv_tableau* t, tabinv_tableau** image_out,
                              char** trace_json_out) {
    return guarded([&] {
        tabinv::InvertedTableau inv(t->value);
        auto result = tabinv::phi1_general(inv);
        *image_out = new tabinv_tableau{result.image};
        if (trace_json_out) *trace_json_out = dup_string(result.trace.to_json());
        return TABINV_OK;
    });
}

tabinv_status tabinv_map_phi2(const tabinv_tableau* T, const tabinv_partition* source,
                              tabinv_tableau** image_out, char** trace_json_out) {
    return guarded([&] {
        auto result = source ? tabinv::phi2_general(T->value, source->value)
                             : tabinv::phi2_rect(T->value);
        *image_out = new tabinv_tableau{result.image.tableau()};
        if (trace_json_out) *trace_json_out = dup_string(result.trace.to_json());
        return TABINV_OK;
    });
}

tabinv_status tabinv_verify(const char* claim, const tabinv_verify_options* opts,
                            char** report_json_out) {
    return guarded([&] {
        tabinv::VerifyOptions options;
        if (opts) {
            if (opts->shape) options.shape = tabinv::Partition::parse(opts->shape);
            if (opts->m >= 0) options.m = opts->m;
            if (opts->n >= 0) options.n = opts->n;
            if (opts->i >= 0) options.i = opts->i;
            if (opts->max_n >= 0) options.max_n = opts->max_n;
            options.workers = worker_count(opts->workers);
            options.budget = budget_or_default(opts->budget);
        }
        auto report = tabinv::run_verify(claim ? claim : "", options);
        if (report_json_out) *report_json_out = dup_string(report.to_json());
        return report.status == "fail" ? TABINV_ERROR_VERIFY_FAILED : TABINV_OK;
    });
}

tabinv_status tabinv_appendix(int workers, uint64_t budget, const char* format,
                              char** rendered_out, char** diff_out) {
    return guarded([&] {
        auto result = tabinv::run_appendix(worker_count(workers), budget_or_default(budget),
                                           format ? format : "text");
        if (rendered_out) *rendered_out = dup_string(result.rendered);
        if (diff_out) *diff_out = dup_string(result.diff);
        return result.match ? TABINV_OK : TABINV_ERROR_VERIFY_FAILED;
    });
}

} // extern "C"
