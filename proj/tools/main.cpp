// Command-line front end. All engine work goes through the C interface in
// tabinv.h; this file only parses arguments and shapes the output.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tabinv.h"

namespace {

using Json = nlohmann::ordered_json;

struct CString {
    char* s = nullptr;
    ~CString() { tabinv_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

struct PartitionHandle {
    tabinv_partition* p = nullptr;
    ~PartitionHandle() { tabinv_partition_free(p); }
};

struct TableauHandle {
    tabinv_tableau* t = nullptr;
    ~TableauHandle() { tabinv_tableau_free(t); }
};

struct Options {
    int workers = 1;
    std::uint64_t budget = 0; // 0 = library default
    std::string format = "text";
    std::string out_path;
};

[[noreturn]] void die(tabinv_status status, const std::string& message) {
    Json j;
    j["error"] = {{"code", tabinv_status_name(status)}, {"message", message}};
    std::cerr << j.dump() << "\n";
    std::exit(static_cast<int>(status));
}

void check(tabinv_status status) {
    if (status != TABINV_OK) die(status, tabinv_last_error());
}

void emit(const Options& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) die(TABINV_ERROR_INVALID_ARGUMENT, "cannot open '" + opts.out_path + "'");
    out << payload;
}

PartitionHandle parse_shape(const std::string& text) {
    PartitionHandle h;
    check(tabinv_partition_parse(text.c_str(), &h.p));
    return h;
}

TableauHandle parse_tableau(const std::string& text) {
    TableauHandle h;
    check(tabinv_tableau_parse(text.c_str(), &h.t));
    return h;
}

std::vector<std::uint32_t> shape_parts(const tabinv_partition* p) {
    std::vector<std::uint32_t> parts;
    for (size_t r = 1; r <= tabinv_partition_rows(p); ++r)
        parts.push_back(tabinv_partition_row_length(p, r));
    return parts;
}

// single-value commands share one text/json/csv presentation
void emit_scalar(const Options& opts, const std::string& shape, const std::string& key,
                 const std::string& value, bool numeric) {
    if (opts.format == "json") {
        Json j;
        j["shape"] = shape;
        if (numeric)
            j[key] = Json::parse(value);
        else
            j[key] = value;
        emit(opts, j.dump() + "\n");
    } else if (opts.format == "csv") {
        emit(opts, "shape," + key + "\n\"" + shape + "\"," + value + "\n");
    } else {
        emit(opts, value + "\n");
    }
}

void cmd_count(const Options& opts, const std::string& shape) {
    auto p = parse_shape(shape);
    CString count;
    check(tabinv_standard_count(p.p, &count.s));
    emit_scalar(opts, shape, "standard_count", count.str(), false);
}

void cmd_total(const Options& opts, const std::string& shape) {
    auto p = parse_shape(shape);
    CString count;
    check(tabinv_total_inverted_count(p.p, &count.s));
    emit_scalar(opts, shape, "total_inverted", count.str(), false);
}

void cmd_max(const Options& opts, const std::string& shape) {
    auto p = parse_shape(shape);
    emit_scalar(opts, shape, "max_inversions", std::to_string(tabinv_max_inversions(p.p)),
                true);
}

void cmd_maxtab(const Options& opts, const std::string& shape) {
    auto p = parse_shape(shape);
    TableauHandle t;
    check(tabinv_max_inversion_tableau(p.p, &t.t));
    CString text{tabinv_tableau_format(t.t)};
    if (opts.format == "json") {
        Json j;
        j["shape"] = shape_parts(p.p);
        j["max_inversions"] = tabinv_max_inversions(p.p);
        j["tableau"] = text.str();
        emit(opts, j.dump() + "\n");
    } else {
        emit(opts, text.str() + "\n");
    }
}

void cmd_stairsteps(const Options& opts, const std::string& shape) {
    auto p = parse_shape(shape);
    CString json;
    check(tabinv_stair_steps(p.p, &json.s));
    if (opts.format == "json") {
        emit(opts, json.str());
        return;
    }
    Json moves = Json::parse(json.str());
    auto shape_of = [](const Json& move) {
        std::string s;
        for (const auto& part : move["shape"]) {
            if (!s.empty()) s += ',';
            s += std::to_string(part.get<std::uint32_t>());
        }
        return s;
    };
    std::string payload;
    if (opts.format == "csv") {
        payload = "source_row,target_row,shape\n";
        for (const auto& move : moves)
            payload += std::to_string(move["source_row"].get<std::uint32_t>()) + "," +
                       std::to_string(move["target_row"].get<std::uint32_t>()) + ",\"" +
                       shape_of(move) + "\"\n";
    } else {
        for (const auto& move : moves)
            payload += "row " + std::to_string(move["source_row"].get<std::uint32_t>()) +
                       " -> row " + std::to_string(move["target_row"].get<std::uint32_t>()) +
                       ": " + shape_of(move) + "\n";
    }
    emit(opts, payload);
}

void cmd_distribution(const Options& opts, const std::string& shape) {
    auto p = parse_shape(shape);
    tabinv_distribution* d = nullptr;
    check(tabinv_distribution_compute(p.p, opts.workers, opts.budget, &d));
    std::unique_ptr<tabinv_distribution, decltype(&tabinv_distribution_free)> guard(
        d, &tabinv_distribution_free);
    CString text;
    check(tabinv_distribution_render(d, opts.format.c_str(), &text.s));
    emit(opts, text.str());
}

void cmd_standardize(const Options& opts, const std::string& tableau) {
    auto t = parse_tableau(tableau);
    TableauHandle st;
    check(tabinv_standardize(t.t, &st.t));
    CString text{tabinv_tableau_format(st.t)};
    if (opts.format == "json") {
        Json j;
        j["input"] = tableau;
        j["standardized"] = text.str();
        emit(opts, j.dump() + "\n");
    } else {
        emit(opts, text.str() + "\n");
    }
}

void cmd_inversions(const Options& opts, const std::string& tableau) {
    auto t = parse_tableau(tableau);
    CString json;
    check(tabinv_inversions(t.t, &json.s));
    if (opts.format == "json") {
        emit(opts, json.str());
        return;
    }
    Json j = Json::parse(json.str());
    std::string payload;
    if (opts.format == "csv") {
        payload = "small,large,column\n";
        for (const auto& pair : j["pairs"])
            payload += std::to_string(pair["small"].get<std::uint32_t>()) + "," +
                       std::to_string(pair["large"].get<std::uint32_t>()) + "," +
                       std::to_string(pair["column"].get<std::uint32_t>()) + "\n";
    } else {
        payload = "count " + std::to_string(j["count"].get<std::uint64_t>()) + "\n";
        for (const auto& pair : j["pairs"])
            payload += "(" + std::to_string(pair["small"].get<std::uint32_t>()) + "," +
                       std::to_string(pair["large"].get<std::uint32_t>()) + ") column " +
                       std::to_string(pair["column"].get<std::uint32_t>()) + "\n";
    }
    emit(opts, payload);
}

void cmd_fiber(const Options& opts, const std::string& tableau) {
    auto t = parse_tableau(tableau);
    CString lines;
    uint64_t count = 0;
    check(tabinv_fiber(t.t, opts.budget, &lines.s, &count));
    std::string all = lines.str();
    if (opts.format == "json") {
        Json j;
        j["base"] = tableau;
        j["size"] = count;
        j["fiber"] = Json::array();
        std::size_t pos = 0;
        while (pos < all.size()) {
            std::size_t end = all.find('\n', pos);
            j["fiber"].push_back(all.substr(pos, end - pos));
            pos = end + 1;
        }
        emit(opts, j.dump() + "\n");
    } else if (opts.format == "csv") {
        std::string payload = "index,tableau\n";
        std::size_t pos = 0, index = 0;
        while (pos < all.size()) {
            std::size_t end = all.find('\n', pos);
            payload += std::to_string(index++) + ",\"" + all.substr(pos, end - pos) + "\"\n";
            pos = end + 1;
        }
        emit(opts, payload);
    } else {
        emit(opts, all);
    }
}

void cmd_betti(const Options& opts, const std::string& shape) {
    auto p = parse_shape(shape);
    CString text;
    check(tabinv_betti_render(p.p, opts.workers, opts.budget, opts.format.c_str(), &text.s));
    emit(opts, text.str());
}

void cmd_map(const Options& opts, const std::string& direction, const std::string& tableau,
             const std::string& target) {
    auto t = parse_tableau(tableau);
    TableauHandle image;
    CString trace;
    if (direction == "phi1") {
        check(tabinv_map_phi1(t.t, &image.t, &trace.s));
    } else {
        PartitionHandle source;
        if (!target.empty()) check(tabinv_partition_parse(target.c_str(), &source.p));
        check(tabinv_map_phi2(t.t, source.p, &image.t, &trace.s));
    }
    CString text{tabinv_tableau_format(image.t)};
    PartitionHandle shape;
    check(tabinv_tableau_shape(image.t, &shape.p));
    CString pairs_json;
    check(tabinv_inversions(image.t, &pairs_json.s));
    Json pairs = Json::parse(pairs_json.str());

    if (opts.format == "json") {
        Json j;
        j["direction"] = direction;
        j["input"] = tableau;
        j["image"] = text.str();
        j["shape"] = shape_parts(shape.p);
        j["inversions"] = pairs["pairs"];
        j["trace"] = Json::parse(trace.str());
        emit(opts, j.dump() + "\n");
        return;
    }
    CString shape_text{tabinv_partition_format(shape.p)};
    std::string payload = text.str() + "\n";
    payload += "shape: " + shape_text.str() + "\n";
    payload += "inversions:";
    if (pairs["pairs"].empty()) payload += " none";
    for (const auto& pair : pairs["pairs"])
        payload += " (" + std::to_string(pair["small"].get<std::uint32_t>()) + "," +
                   std::to_string(pair["large"].get<std::uint32_t>()) + ")@" +
                   std::to_string(pair["column"].get<std::uint32_t>());
    payload += "\ntrace: " + trace.str() + "\n";
    emit(opts, payload);
}

void cmd_verify(const Options& opts, const std::string& claim, const std::string& shape,
                std::int64_t m, std::int64_t n, std::int64_t i, std::int64_t max_n) {
    tabinv_verify_options vopts{};
    vopts.shape = shape.empty() ? nullptr : shape.c_str();
    vopts.m = m;
    vopts.n = n;
    vopts.i = i;
    vopts.max_n = max_n;
    vopts.workers = opts.workers;
    vopts.budget = opts.budget;
    CString report;
    tabinv_status status = tabinv_verify(claim.c_str(), &vopts, &report.s);
    if (status != TABINV_OK && status != TABINV_ERROR_VERIFY_FAILED)
        die(status, tabinv_last_error());
    emit(opts, report.str());
    if (status != TABINV_OK) std::exit(static_cast<int>(status));
}

void cmd_appendix(const Options& opts) {
    CString rendered, diff;
    tabinv_status status =
        tabinv_appendix(opts.workers, opts.budget, opts.format.c_str(), &rendered.s, &diff.s);
    if (status != TABINV_OK && status != TABINV_ERROR_VERIFY_FAILED)
        die(status, tabinv_last_error());
    emit(opts, rendered.str());
    if (status != TABINV_OK) die(status, "reference tables differ:\n" + diff.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inverted Young tableaux: counting, enumeration and bijections"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opts;
    app.add_option("--workers", opts.workers, "parallel workers for enumeration")
        ->envname("TABINV_WORKERS")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", opts.budget, "generation budget in tableaux (0 = default 1e8)")
        ->envname("TABINV_BUDGET");
    app.add_option("--format", opts.format, "output format: text, json or csv")
        ->envname("TABINV_FORMAT")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", opts.out_path, "write output to this file instead of stdout")
        ->envname("TABINV_OUT");

    std::string shape, tableau, direction, target, claim;
    std::int64_t m = -1, n = -1, i = -1, max_n = -1;

    auto* count = app.add_subcommand("count", "number of standard fillings (hook lengths)");
    count->add_option("shape", shape, "comma-separated row lengths")->required();

    auto* total = app.add_subcommand("total", "number of row-standard fillings");
    total->add_option("shape", shape)->required();

    auto* max = app.add_subcommand("max", "maximal inversion number");
    max->add_option("shape", shape)->required();

    auto* maxtab = app.add_subcommand("maxtab", "the unique filling attaining the maximum");
    maxtab->add_option("shape", shape)->required();

    auto* stairsteps = app.add_subcommand("stairsteps", "legal corner moves and their shapes");
    stairsteps->add_option("shape", shape)->required();

    auto* distribution =
        app.add_subcommand("distribution", "inversion counts by exhaustive enumeration");
    distribution->add_option("shape", shape)->required();

    auto* standardize = app.add_subcommand("standardize", "sort each column increasing");
    standardize->add_option("tableau", tableau, "rows like \"1 2 8 / 4 5 6 / 3 7 9\"")
        ->required();

    auto* inversions = app.add_subcommand("inversions", "list the inversion pairs");
    inversions->add_option("tableau", tableau)->required();

    auto* fiber = app.add_subcommand("fiber", "row-standard fillings standardizing to this");
    fiber->add_option("tableau", tableau)->required();

    auto* betti = app.add_subcommand("betti", "distribution read from the top degree down");
    betti->add_option("shape", shape)->required();

    auto* map = app.add_subcommand("map", "apply the single-inversion correspondence");
    map->add_option("direction", direction, "phi1 (remove the inversion) or phi2 (create it)")
        ->required()
        ->check(CLI::IsMember({"phi1", "phi2"}));
    map->add_option("tableau", tableau)->required();
    map->add_option("--target", target, "source shape for phi2 on non-rectangular shapes");

    auto* verify = app.add_subcommand("verify", "cross-check a claim against enumeration");
    verify->add_option("claim", claim,
                       "hook totals two-row max-unique rect-i1 general-i1 m1 m2 lemma tail")
        ->required();
    verify->add_option("--shape", shape);
    verify->add_option("--m", m);
    verify->add_option("--n", n);
    verify->add_option("--i", i);
    verify->add_option("--max-n", max_n);

    auto* appendix =
        app.add_subcommand("appendix", "regenerate the reference tables and compare");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) cmd_count(opts, shape);
        else if (total->parsed()) cmd_total(opts, shape);
        else if (max->parsed()) cmd_max(opts, shape);
        else if (maxtab->parsed()) cmd_maxtab(opts, shape);
        else if (stairsteps->parsed()) cmd_stairsteps(opts, shape);
        else if (distribution->parsed()) cmd_distribution(opts, shape);
        else if (standardize->parsed()) cmd_standardize(opts, tableau);
        else if (inversions->parsed()) cmd_inversions(opts, tableau);
        else if (fiber->parsed()) cmd_fiber(opts, tableau);
        else if (betti->parsed()) cmd_betti(opts, shape);
        else if (map->parsed()) cmd_map(opts, direction, tableau, target);
        else if (verify->parsed()) cmd_verify(opts, claim, shape, m, n, i, max_n);
        else if (appendix->parsed()) cmd_appendix(opts);
    } catch (const std::exception& e) {
        die(TABINV_ERROR_INTERNAL, e.what());
    }
    return 0;
}
