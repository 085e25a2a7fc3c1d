#pragma once

// Command-line front end. run_cli() is the whole program; the executable in
// tools/ only forwards argv and the standard streams.

#include <algorithm>
#include <cstdint>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "closed_forms_p2.hpp"
#include "cohomology.hpp"
#include "dyer_lashof.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "schur_data.hpp"

namespace youngcoho {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int user_error = 1;
inline constexpr int missing_data = 2;
inline constexpr int invariant_failure = 3;
}  // namespace exit_code

/// One listed item attached to a record, e.g. a shape family in some degree.
struct DetailRow {
    std::int64_t degree = 0;
    std::string label;
    std::int64_t count = 0;
    friend bool operator==(const DetailRow&, const DetailRow&) = default;
};

/// Result of one query. `values[k]` belongs to degree `degree_from + k`.
struct OutputRecord {
    std::string command;
    int p = 2;
    std::optional<int> d;
    std::optional<std::string> lambda;
    std::optional<std::string> mu;
    std::optional<std::int64_t> degree_from;
    std::optional<std::int64_t> degree_to;
    std::vector<std::int64_t> values;
    std::optional<std::vector<std::int64_t>> oracle_values;
    std::string provenance = "general";  // general | closed-form | oracle
    std::map<std::string, std::string> facts;
    std::vector<DetailRow> details;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;

    /// Values nonnegative, one per degree of a contiguous range.
    void check() const {
        for (auto v : values)
            if (v < 0) throw InvariantViolation("negative value in output record");
        if (degree_from && degree_to && !values.empty() &&
            static_cast<std::int64_t>(values.size()) != *degree_to - *degree_from + 1)
            throw InvariantViolation("output record values do not cover the degree range");
        if (oracle_values && oracle_values->size() != values.size())
            throw InvariantViolation("oracle column length differs from engine column");
    }
};

inline void to_json(nlohmann::json& j, const DetailRow& r) {
    j = nlohmann::json{{"degree", r.degree}, {"label", r.label}, {"count", r.count}};
}

inline void from_json(const nlohmann::json& j, DetailRow& r) {
    j.at("degree").get_to(r.degree);
    j.at("label").get_to(r.label);
    j.at("count").get_to(r.count);
}

inline void to_json(nlohmann::json& j, const OutputRecord& r) {
    j = nlohmann::json::object();
    j["command"] = r.command;
    j["query"] = {{"p", r.p}};
    if (r.d) j["query"]["d"] = *r.d;
    if (r.lambda) j["query"]["lambda"] = *r.lambda;
    if (r.mu) j["query"]["mu"] = *r.mu;
    if (r.degree_from && r.degree_to) j["query"]["degrees"] = {*r.degree_from, *r.degree_to};
    j["values"] = r.values;
    if (r.oracle_values) j["oracle_values"] = *r.oracle_values;
    j["provenance"] = r.provenance;
    if (!r.facts.empty()) j["facts"] = r.facts;
    if (!r.details.empty()) j["details"] = r.details;
}

inline void from_json(const nlohmann::json& j, OutputRecord& r) {
    r = OutputRecord{};
    j.at("command").get_to(r.command);
    const auto& q = j.at("query");
    q.at("p").get_to(r.p);
    if (q.contains("d")) r.d = q.at("d").get<int>();
    if (q.contains("lambda")) r.lambda = q.at("lambda").get<std::string>();
    if (q.contains("mu")) r.mu = q.at("mu").get<std::string>();
    if (q.contains("degrees")) {
        r.degree_from = q.at("degrees").at(0).get<std::int64_t>();
        r.degree_to = q.at("degrees").at(1).get<std::int64_t>();
    }
    j.at("values").get_to(r.values);
    if (j.contains("oracle_values")) r.oracle_values = j.at("oracle_values").get<std::vector<std::int64_t>>();
    j.at("provenance").get_to(r.provenance);
    if (j.contains("facts")) j.at("facts").get_to(r.facts);
    if (j.contains("details")) j.at("details").get_to(r.details);
}

/// "A..B" or a single "A".
inline std::pair<std::int64_t, std::int64_t> parse_degree_range(const std::string& text) {
    auto number = [&](const std::string& s) {
        if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InvalidArgument("malformed degree range: '" + text + "'");
        return static_cast<std::int64_t>(std::stoll(s));
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto a = number(text);
        return {a, a};
    }
    const auto a = number(text.substr(0, dots)), b = number(text.substr(dots + 2));
    if (b < a) throw InvalidArgument("empty degree range: '" + text + "'");
    return {a, b};
}

/// Comma-separated nonnegative integers in any order.
inline std::vector<int> parse_composition(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), [](char c) { return c == ' '; }), token.end());
        if (token.empty() || token.size() > 3 || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InvalidArgument("malformed composition: '" + text + "'");
        out.push_back(std::stoi(token));
    }
    if (out.empty()) throw InvalidArgument("malformed composition: '" + text + "'");
    return out;
}

/// The seven non-projective Young modules for Sigma_6 at p = 2, in table order.
inline const std::vector<Partition>& sigma6_table_partitions() {
    static const std::vector<Partition> rows{{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}, {3, 1, 1, 1}, {2, 2, 2}};
    return rows;
}

/// Evaluates f(0..n-1) on worker threads; results come back in index order.
template <class F>
auto parallel_cells(std::size_t n, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    std::vector<R> out(n);
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t k = w; k < n; k += workers) out[k] = f(k);
        }));
    for (auto& j : jobs) j.get();
    return out;
}

/// Ext^j(Y^lambda, Y^mu) for every lower-triangle pair of the Sigma_6 table.
inline std::vector<OutputRecord> sigma6_ext_table(const DecompositionMatrix& D, std::int64_t from, std::int64_t to) {
    const auto& rows = sigma6_table_partitions();
    std::vector<std::pair<Partition, Partition>> pairs;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b) pairs.emplace_back(rows[a], rows[b]);
    // Warm the shared homology cache once so workers only read it.
    for (auto j = from; j <= to; ++j) homology_simple_multiplicities(2, 6, j, D);
    return parallel_cells(pairs.size(), [&](std::size_t k) {
        OutputRecord r;
        r.command = "ext";
        r.p = 2;
        r.d = 6;
        r.lambda = pairs[k].first.to_string();
        r.mu = pairs[k].second.to_string();
        r.degree_from = from;
        r.degree_to = to;
        for (auto j = from; j <= to; ++j) r.values.push_back(ext_young(2, 6, pairs[k].first, pairs[k].second, j, D));
        return r;
    });
}

/// Same layout as data/golden/sigma6_ext.csv.
inline std::string sigma6_ext_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    os << "lambda,mu";
    if (!records.empty())
        for (auto j = *records[0].degree_from; j <= *records[0].degree_to; ++j) os << ",j" << j;
    os << "\n";
    for (const auto& r : records) {
        os << '"' << *r.lambda << "\",\"" << *r.mu << '"';
        for (auto v : r.values) os << "," << v;
        os << "\n";
    }
    return os.str();
}

namespace detail {

struct CliOptions {
    int p = 2;
    std::optional<int> d;
    std::string lambda;
    std::string mu;
    std::string degrees = "0..5";
    std::string format = "text";
    std::string data_dir;
    bool oracle = false;
    bool closed_form = false;
    std::string reproduce;
};

inline void print_records(std::ostream& out, const std::vector<OutputRecord>& records, const std::string& format) {
    for (const auto& r : records) r.check();
    if (format == "json") {
        const nlohmann::json j = records.size() == 1 ? nlohmann::json(records[0]) : nlohmann::json(records);
        out << j.dump(2) << "\n";
        return;
    }
    const bool csv = format == "csv";
    for (const auto& r : records) {
        if (!r.facts.empty()) {
            for (const auto& [k, v] : r.facts) out << k << (csv ? "," : ": ") << v << "\n";
        }
        if (!r.details.empty()) {
            if (csv) out << "degree,label,count\n";
            for (const auto& row : r.details)
                out << row.degree << (csv ? "," : "  ") << (csv ? "\"" + row.label + "\"" : row.label) << (csv ? "," : "  x")
                    << row.count << "\n";
            continue;
        }
        if (r.values.empty() || !r.degree_from) continue;
        if (csv) {
            out << "degree,value" << (r.oracle_values ? ",oracle" : "") << "\n";
        } else {
            out << "# " << r.command << " p=" << r.p;
            if (r.d) out << " d=" << *r.d;
            if (r.lambda) out << " lambda=" << *r.lambda;
            if (r.mu) out << " mu=" << *r.mu;
            out << " (" << r.provenance << ")\n";
            out << "degree\tvalue" << (r.oracle_values ? "\toracle" : "") << "\n";
        }
        for (std::size_t k = 0; k < r.values.size(); ++k) {
            out << *r.degree_from + static_cast<std::int64_t>(k) << (csv ? "," : "\t") << r.values[k];
            if (r.oracle_values) out << (csv ? "," : "\t") << (*r.oracle_values)[k];
            out << "\n";
        }
    }
}

inline Partition need_partition(const std::string& text, const char* flag) {
    if (text.empty()) throw InvalidArgument(std::string("missing required option ") + flag);
    return Partition::parse(text);
}

inline int degree_for(const CliOptions& o, const Partition& lambda) {
    if (o.d && *o.d != lambda.size())
        throw InvalidArgument(lambda.to_string() + " is not a partition of " + std::to_string(*o.d));
    return lambda.size();
}

inline OutputRecord base_record(const std::string& command, const CliOptions& o) {
    require_prime(o.p);
    OutputRecord r;
    r.command = command;
    r.p = o.p;
    const auto [a, b] = parse_degree_range(o.degrees);
    r.degree_from = a;
    r.degree_to = b;
    return r;
}

}  // namespace detail

/// Runs one command line; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using detail::CliOptions;
    CliOptions o;
    CLI::App app{"Cohomology of Young and permutation modules for symmetric groups in characteristic p"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_mu = false) {
        sub->add_option("-p,--prime", o.p, "characteristic (a prime)")->check(CLI::PositiveNumber);
        sub->add_option("-d,--degree", o.d, "size of the symmetric group; defaults to |lambda|");
        sub->add_option("--lambda", o.lambda, "partition, e.g. 3,3");
        if (needs_mu) sub->add_option("--mu", o.mu, "second partition");
        sub->add_option("--degrees", o.degrees, "cohomological degrees A..B")->capture_default_str();
        sub->add_option("--format", o.format, "text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--data-dir", o.data_dir, "directory with decomposition matrices");
    };

    auto* young = app.add_subcommand("young", "dim H^i(Sigma_d, Y^lambda)");
    add_common(young);
    young->add_flag("--closed-form", o.closed_form, "use the p = 2 closed forms (degrees 1 and 2 only)");
    auto* perm = app.add_subcommand("perm", "dim H^i(Sigma_d, M^lambda); lambda may be a composition");
    add_common(perm);
    perm->add_flag("--oracle", o.oracle, "add a brute-force oracle column (d <= 4)");
    auto* ext = app.add_subcommand("ext", "dim Ext^i(Y^lambda, Y^mu)");
    add_common(ext, true);
    auto* vanishing = app.add_subcommand("vanishing", "whether H^*(Sigma_d, Y^lambda) vanishes identically");
    add_common(vanishing);
    auto* complexity = app.add_subcommand("complexity", "complexity of Y^lambda");
    add_common(complexity);
    auto* shapes = app.add_subcommand("shapes", "monomial shape families of H_i(Sigma_d, V^{(x)d})");
    add_common(shapes);
    auto* table = app.add_subcommand("table", "regenerate a bundled table");
    add_common(table);
    table->add_option("--reproduce", o.reproduce, "sigma6-ext | sigma6-young")
        ->required()
        ->check(CLI::IsMember({"sigma6-ext", "sigma6-young"}));
    auto* decomp = app.add_subcommand("decomp", "decomposition matrix data");
    decomp->require_subcommand(1);
    auto* validate = decomp->add_subcommand("validate", "check checksums and invariants of the bundled matrices");
    add_common(validate);
    auto* oracle = app.add_subcommand("oracle", "brute-force dim H_i(Sigma_d, (V^{(x)d})_lambda) (d <= 4)");
    add_common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::user_error;
    }

    try {
        std::vector<OutputRecord> records;
        const auto store = [&] { return DataStore(resolve_data_dir(o.data_dir)); };

        if (young->parsed()) {
            auto r = detail::base_record("young", o);
            const auto lambda = detail::need_partition(o.lambda, "--lambda");
            const int d = detail::degree_for(o, lambda);
            r.d = d;
            r.lambda = lambda.to_string();
            if (o.closed_form) {
                if (o.p != 2) throw InvalidArgument("closed forms exist only for p = 2");
                if (*r.degree_from < 1 || *r.degree_to > 2) throw InvalidArgument("closed forms cover degrees 1 and 2 only");
                r.provenance = "closed-form";
                for (auto j = *r.degree_from; j <= *r.degree_to; ++j)
                    r.values.push_back(j == 1 ? h1_closed(lambda) : h2_closed(lambda));
            } else {
                const auto s = store();
                const auto& D = s.get(o.p, d);
                for (auto j = *r.degree_from; j <= *r.degree_to; ++j) r.values.push_back(h_young(o.p, d, lambda, j, D));
            }
            records.push_back(std::move(r));
        } else if (perm->parsed()) {
            auto r = detail::base_record("perm", o);
            if (o.lambda.empty()) throw InvalidArgument("missing required option --lambda");
            const auto composition = parse_composition(o.lambda);
            const auto lambda = Partition::from_composition(composition);
            const int d = detail::degree_for(o, lambda);
            r.d = d;
            r.lambda = o.lambda;
            for (auto j = *r.degree_from; j <= *r.degree_to; ++j) r.values.push_back(h_perm(o.p, d, composition, j));
            if (o.oracle) {
                std::vector<std::int64_t> col;
                for (auto j = *r.degree_from; j <= *r.degree_to; ++j)
                    col.push_back(oracle_homology_weight(o.p, d, composition, static_cast<int>(j)));
                r.oracle_values = std::move(col);
                r.facts["oracle_agrees"] = *r.oracle_values == r.values ? "true" : "false";
            }
            records.push_back(std::move(r));
        } else if (ext->parsed()) {
            auto r = detail::base_record("ext", o);
            const auto lambda = detail::need_partition(o.lambda, "--lambda");
            const auto mu = detail::need_partition(o.mu, "--mu");
            const int d = detail::degree_for(o, lambda);
            if (mu.size() != d) throw InvalidArgument(mu.to_string() + " is not a partition of " + std::to_string(d));
            r.d = d;
            r.lambda = lambda.to_string();
            r.mu = mu.to_string();
            const auto s = store();
            const auto& D = s.get(o.p, d);
            for (auto j = *r.degree_from; j <= *r.degree_to; ++j) r.values.push_back(ext_young(o.p, d, lambda, mu, j, D));
            records.push_back(std::move(r));
        } else if (vanishing->parsed() || complexity->parsed()) {
            const bool is_vanishing = vanishing->parsed();
            require_prime(o.p);
            const auto lambda = detail::need_partition(o.lambda, "--lambda");
            OutputRecord r;
            r.command = is_vanishing ? "vanishing" : "complexity";
            r.p = o.p;
            r.d = detail::degree_for(o, lambda);
            r.lambda = lambda.to_string();
            if (is_vanishing) {
                r.facts["vanishes"] = vanishes_identically(o.p, lambda) ? "true" : "false";
            } else {
                r.facts["complexity"] = std::to_string(complexity_young(o.p, lambda));
                r.facts["projective"] = is_projective_young(o.p, lambda) ? "true" : "false";
            }
            records.push_back(std::move(r));
        } else if (shapes->parsed()) {
            auto r = detail::base_record("shapes", o);
            if (!o.d) throw InvalidArgument("missing required option -d");
            r.d = *o.d;
            for (auto j = *r.degree_from; j <= *r.degree_to; ++j) {
                std::int64_t total = 0;
                for (const auto& [fam, count] : shape_families(o.p, *o.d, j)) {
                    r.details.push_back({j, fam.describe(), count});
                    total += count;
                }
                r.values.push_back(total);
            }
            records.push_back(std::move(r));
        } else if (table->parsed()) {
            if (o.p != 2) throw InvalidArgument("the Sigma_6 tables are for p = 2");
            const bool ext_table = o.reproduce == "sigma6-ext";
            const auto range = table->count("--degrees") ? parse_degree_range(o.degrees)
                                                         : std::pair<std::int64_t, std::int64_t>{0, ext_table ? 10 : 20};
            const auto s = store();
            const auto& D = s.get(2, 6);
            if (ext_table) {
                records = sigma6_ext_table(D, range.first, range.second);
                if (o.format != "json") {
                    out << sigma6_ext_csv(records);
                    return exit_code::ok;
                }
            } else {
                for (const auto& lambda : partition_list(6)) {
                    OutputRecord r;
                    r.command = "young";
                    r.p = 2;
                    r.d = 6;
                    r.lambda = lambda.to_string();
                    r.degree_from = range.first;
                    r.degree_to = range.second;
                    for (auto j = range.first; j <= range.second; ++j) r.values.push_back(h_young(2, 6, lambda, j, D));
                    records.push_back(std::move(r));
                }
                if (o.format != "json") {
                    out << "lambda";
                    for (auto j = range.first; j <= range.second; ++j) out << ",j" << j;
                    out << "\n";
                    for (const auto& r : records) {
                        out << '"' << *r.lambda << '"';
                        for (auto v : r.values) out << "," << v;
                        out << "\n";
                    }
                    return exit_code::ok;
                }
            }
        } else if (validate->parsed()) {
            const auto s = store();
            OutputRecord r;
            r.command = "decomp validate";
            r.p = o.p;
            r.provenance = "data";
            const auto checked = s.verify_checksums();
            std::vector<std::pair<int, int>> targets;
            if (o.d) {
                require_prime(o.p);
                targets.emplace_back(o.p, *o.d);
            } else {
                for (const auto& name : checked) {
                    int p = 0, d = 0;
                    if (std::sscanf(name.c_str(), "decomp_p%d_d%d.txt", &p, &d) == 2) targets.emplace_back(p, d);
                }
            }
            for (const auto& [p, d] : targets) {
                const auto& D = s.get(p, d);
                if (decomp_from_cartan(cartan_from_decomp(D)) != D)
                    throw InvariantViolation("Cartan round trip failed for " + DataStore::file_name(p, d));
                r.details.push_back({d, DataStore::file_name(p, d), static_cast<std::int64_t>(D.rank())});
            }
            r.facts["files_checked"] = std::to_string(targets.size());
            r.facts["status"] = "ok";
            records.push_back(std::move(r));
        } else if (oracle->parsed()) {
            auto r = detail::base_record("oracle", o);
            if (o.lambda.empty()) throw InvalidArgument("missing required option --lambda");
            const auto composition = parse_composition(o.lambda);
            const int d = detail::degree_for(o, Partition::from_composition(composition));
            r.d = d;
            r.lambda = o.lambda;
            r.provenance = "oracle";
            for (auto j = *r.degree_from; j <= *r.degree_to; ++j)
                r.values.push_back(oracle_homology_weight(o.p, d, composition, static_cast<int>(j)));
            records.push_back(std::move(r));
        }
        detail::print_records(out, records, o.format);
        return exit_code::ok;
    } catch (const DataUnavailable& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::missing_data;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::invariant_failure;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::user_error;
    } catch (const OracleOutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::user_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::invariant_failure;
    }
}

}  // namespace youngcoho
