#include "eisen/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "eisen/text.hpp"

namespace eisen {

namespace {

std::uint64_t cell_norm(std::int64_t a, std::int64_t b)
{
    return static_cast<std::uint64_t>(a * a - a * b + b * b);
}

std::int64_t max_row(std::uint64_t max_norm)
{
    // a^2 - ab + b^2 >= 3a^2/4, so no row beyond sqrt(4B/3) has a cell in range.
    return static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(max_norm) / 3.0)) + 1;
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned workers, Fn fn)
{
    std::vector<T> out(n);
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, n); ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        out[i] = fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

const char *mode_name(ScanMode m)
{
    return m == ScanMode::mersenne ? "mersenne" : "norm_perfect";
}

ScanMode mode_from_name(const std::string &s)
{
    if (s == "mersenne")
        return ScanMode::mersenne;
    if (s == "norm_perfect")
        return ScanMode::norm_perfect;
    throw std::invalid_argument("unknown scan mode '" + s + "'");
}

ScanCheckpoint start_or_validate(ScanMode mode, const ScanConfig &config, std::optional<ScanCheckpoint> state)
{
    if (!state) {
        ScanCheckpoint c;
        c.mode = mode;
        c.bound = config.bound;
        return c;
    }
    if (state->mode != mode)
        throw std::invalid_argument(std::string("checkpoint is for a ") + mode_name(state->mode) + " scan");
    if (state->bound != config.bound)
        throw std::invalid_argument("checkpoint bound " + std::to_string(state->bound) +
                                    " does not match requested bound " + std::to_string(config.bound));
    return std::move(*state);
}

// Candidate budget for the next batch, honoring halt_after.
std::uint64_t batch_limit(const ScanConfig &config, std::uint64_t done_this_run)
{
    std::uint64_t limit = std::max<std::uint64_t>(config.checkpoint_every, 1);
    if (config.halt_after)
        limit = std::min(limit, *config.halt_after - done_this_run);
    return limit;
}

bool halted(const ScanConfig &config, std::uint64_t done_this_run)
{
    return config.halt_after && done_this_run >= *config.halt_after;
}

} // namespace

std::optional<Cell> next_region_cell(std::optional<Cell> after, std::uint64_t max_norm)
{
    std::int64_t a = after ? after->a : 1;
    std::int64_t b = after ? after->b + 1 : 0;
    const std::int64_t last = max_row(max_norm);
    for (; a <= last; ++a, b = 0)
        for (; b < a; ++b)
            if (cell_norm(a, b) <= max_norm)
                return Cell{a, b};
    return std::nullopt;
}

std::vector<Cell> region_cells(std::uint64_t max_norm)
{
    std::vector<Cell> out;
    for (auto c = next_region_cell(std::nullopt, max_norm); c; c = next_region_cell(c, max_norm))
        out.push_back(*c);
    return out;
}

Json to_json(const ScanCheckpoint &c)
{
    Json j;
    j["format_version"] = c.format_version;
    j["mode"] = mode_name(c.mode);
    j["bound"] = std::to_string(c.bound);
    if (c.mode == ScanMode::norm_perfect)
        j["cursor"] = c.last_cell ? Json{{"a", c.last_cell->a}, {"b", c.last_cell->b}} : Json(nullptr);
    else
        j["cursor"] = c.last_p ? Json{{"p", *c.last_p}} : Json(nullptr);
    j["examined"] = c.examined;
    j["complete"] = c.complete;
    j["found"] = c.found;
    return j;
}

ScanCheckpoint checkpoint_from_json(const Json &j)
{
    ScanCheckpoint c;
    c.format_version = j.at("format_version").get<int>();
    if (c.format_version != ScanCheckpoint::kFormatVersion)
        throw std::invalid_argument("unsupported checkpoint format_version " +
                                    std::to_string(c.format_version));
    c.mode = mode_from_name(j.at("mode").get<std::string>());
    c.bound = std::stoull(j.at("bound").get<std::string>());
    const Json &cursor = j.at("cursor");
    if (!cursor.is_null()) {
        if (c.mode == ScanMode::norm_perfect)
            c.last_cell = Cell{cursor.at("a").get<std::int64_t>(), cursor.at("b").get<std::int64_t>()};
        else
            c.last_p = cursor.at("p").get<unsigned long>();
    }
    c.examined = j.at("examined").get<std::uint64_t>();
    c.complete = j.at("complete").get<bool>();
    for (const auto &row : j.at("found"))
        c.found.push_back(row);
    return c;
}

void save_checkpoint(const ScanCheckpoint &c, const std::filesystem::path &path)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot write checkpoint " + tmp.string());
        os << to_json(c).dump() << '\n';
        os.flush();
        if (!os)
            throw std::runtime_error("failed writing checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

ScanCheckpoint load_checkpoint(const std::filesystem::path &path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot read checkpoint " + path.string());
    return checkpoint_from_json(Json::parse(is));
}

std::optional<ReportRecord> evaluate_norm_perfect_candidate(const EisensteinInt &x, const FactorOptions &opts)
{
    try {
        PrimeFactorization f = factor(x, opts);
        DivisorReport r = divisor_report(x, f);
        if (!r.is_norm_perfect)
            return std::nullopt;
        return make_report_record(f, r);
    } catch (const FactorEffortExceeded &e) {
        return make_skipped_record(x, e.what());
    }
}

ScanCheckpoint run_norm_perfect_scan(const ScanConfig &config, std::optional<ScanCheckpoint> state)
{
    ScanCheckpoint c = start_or_validate(ScanMode::norm_perfect, config, std::move(state));
    std::uint64_t done = 0;
    while (!c.complete && !halted(config, done)) {
        std::uint64_t limit = batch_limit(config, done);
        std::vector<Cell> batch;
        for (auto cell = next_region_cell(c.last_cell, c.bound); cell && batch.size() < limit;
             cell = next_region_cell(cell, c.bound))
            batch.push_back(*cell);
        if (batch.empty()) {
            c.complete = true;
            break;
        }
        auto rows = parallel_map<std::optional<ReportRecord>>(batch.size(), config.workers, [&](std::size_t i) {
            return evaluate_norm_perfect_candidate(EisensteinInt(batch[i].a, batch[i].b), config.factor_options);
        });
        for (auto &row : rows)
            if (row)
                c.found.push_back(to_json(*row));
        c.last_cell = batch.back();
        c.examined += batch.size();
        done += batch.size();
        if (!next_region_cell(c.last_cell, c.bound))
            c.complete = true;
        if (config.checkpoint_path)
            save_checkpoint(c, *config.checkpoint_path);
    }
    if (c.complete && config.checkpoint_path)
        save_checkpoint(c, *config.checkpoint_path);
    return c;
}

ScanCheckpoint run_mersenne_scan(const ScanConfig &config, std::optional<ScanCheckpoint> state)
{
    ScanCheckpoint c = start_or_validate(ScanMode::mersenne, config, std::move(state));
    std::uint64_t done = 0;
    while (!c.complete && !halted(config, done)) {
        std::uint64_t limit = batch_limit(config, done);
        std::vector<unsigned long> batch;
        for (unsigned long p = c.last_p ? *c.last_p + 1 : 2; p <= c.bound && batch.size() < limit; ++p)
            if (is_rational_prime(Integer(p)))
                batch.push_back(p);
        if (batch.empty()) {
            c.complete = true;
            break;
        }
        auto records = parallel_map<MersenneRecord>(batch.size(), config.workers,
                                                    [&](std::size_t i) { return mersenne_record(batch[i]); });
        for (const auto &r : records)
            c.found.push_back(to_json(r));
        // Composite exponents after the last prime are skipped, so the cursor may jump ahead.
        unsigned long cursor = batch.back();
        while (cursor < c.bound && !is_rational_prime(Integer(cursor + 1)))
            ++cursor;
        c.last_p = cursor;
        c.examined += batch.size();
        done += batch.size();
        if (cursor >= c.bound)
            c.complete = true;
        if (config.checkpoint_path)
            save_checkpoint(c, *config.checkpoint_path);
    }
    if (c.complete && config.checkpoint_path)
        save_checkpoint(c, *config.checkpoint_path);
    return c;
}

void write_norm_perfect_output(const ScanCheckpoint &c, OutputFormat format, std::ostream &os)
{
    struct Row {
        Integer norm;
        EisensteinInt subject;
        ReportRecord record;
    };
    std::vector<Row> rows;
    rows.reserve(c.found.size());
    for (const auto &j : c.found) {
        ReportRecord r = report_record_from_json(j);
        EisensteinInt x = parse_eisenstein(r.subject);
        rows.push_back({norm(x), x, std::move(r)});
    }
    std::sort(rows.begin(), rows.end(), [](const Row &l, const Row &r) {
        if (l.norm != r.norm)
            return l.norm < r.norm;
        if (l.subject.a != r.subject.a)
            return l.subject.a < r.subject.a;
        return l.subject.b < r.subject.b;
    });

    std::uint64_t skipped = 0;
    for (const auto &row : rows)
        skipped += row.record.skipped.has_value();
    const std::uint64_t hits = rows.size() - skipped;

    if (format == OutputFormat::csv) {
        os << csv_header_report() << '\n';
        for (const auto &row : rows)
            os << to_csv(row.record) << '\n';
        os << "# max_norm=" << c.bound << " examined=" << c.examined << " hits=" << hits
           << " skipped=" << skipped << '\n';
        return;
    }
    for (const auto &row : rows)
        os << to_json(row.record).dump() << '\n';
    Json summary = {{"summary",
                     {{"max_norm", std::to_string(c.bound)},
                      {"examined", c.examined},
                      {"hits", hits},
                      {"skipped", skipped}}}};
    os << summary.dump() << '\n';
}

} // namespace eisen
