#include "flowshop/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace flowshop {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view token, const std::string& context) {
    token = trim(token);
    double value = 0.0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || token.empty())
        throw std::invalid_argument("non-numeric entry '" + std::string(token) + "' " + context);
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

struct CsvHeader {
    std::optional<int> machines;
    std::optional<int> jobs;
    std::optional<double> ps;
};

// `# machines=M jobs=N ps=P` with any subset of the key=value fields.
CsvHeader parse_header(std::string_view line) {
    CsvHeader header;
    std::istringstream in{std::string(trim(line.substr(1)))};
    std::string field;
    while (in >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed header field '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "machines")
            header.machines = static_cast<int>(parse_number(value, "in header"));
        else if (key == "jobs")
            header.jobs = static_cast<int>(parse_number(value, "in header"));
        else if (key == "ps")
            header.ps = parse_number(value, "in header");
        else
            throw std::invalid_argument("unknown header field '" + key + "'");
    }
    return header;
}

FlowshopInstance parse_csv(std::string_view text) {
    CsvHeader header;
    bool saw_header = false;
    std::vector<std::vector<double>> rows;

    std::size_t line_no = 0;
    for (std::string_view rest = text; !rest.empty() || line_no == 0;) {
        const std::size_t nl = rest.find('\n');
        std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++line_no;

        line = trim(line);
        if (line.empty()) {
            if (rest.empty()) break;
            continue;
        }
        if (line.front() == '#') {
            if (!saw_header && rows.empty() && line.find('=') != std::string_view::npos) {
                header = parse_header(line);
                saw_header = true;
            }
            if (rest.empty()) break;
            continue;
        }

        std::vector<double> row;
        for (std::string_view token : split(line, ','))
            row.push_back(parse_number(token, "at line " + std::to_string(line_no)));
        rows.push_back(std::move(row));
        if (rest.empty()) break;
    }

    if (rows.empty()) throw std::invalid_argument("empty instance: no data rows");
    const std::size_t jobs = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != jobs)
            throw std::invalid_argument("ragged rows: row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(jobs));
    }

    if (header.machines && *header.machines != static_cast<int>(rows.size()))
        throw std::invalid_argument("header declares machines=" + std::to_string(*header.machines) +
                                    " but found " + std::to_string(rows.size()) + " rows");
    if (header.jobs && *header.jobs != static_cast<int>(jobs))
        throw std::invalid_argument("header declares jobs=" + std::to_string(*header.jobs) +
                                    " but rows have " + std::to_string(jobs) + " entries");

    std::vector<double> entries;
    entries.reserve(rows.size() * jobs);
    for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());

    FlowshopInstance instance{
        TimingMatrix(static_cast<int>(rows.size()), static_cast<int>(jobs), std::move(entries)), {}};
    if (header.ps) instance.failure = FailureModel(*header.ps);
    return instance;
}

FlowshopInstance parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed instance JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("machines") || !doc.contains("jobs") || !doc.contains("times"))
        throw std::invalid_argument("instance JSON requires fields machines, jobs, times");

    const int machines = doc.at("machines").get<int>();
    const int jobs = doc.at("jobs").get<int>();
    const auto& times = doc.at("times");
    if (!times.is_array() || static_cast<int>(times.size()) != machines)
        throw std::invalid_argument("times row count does not match machines");

    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(machines) * std::max(jobs, 0));
    for (const auto& row : times) {
        if (!row.is_array() || static_cast<int>(row.size()) != jobs)
            throw std::invalid_argument("ragged rows: times rows must all have `jobs` entries");
        for (const auto& v : row) {
            if (!v.is_number()) throw std::invalid_argument("non-numeric entry in times");
            entries.push_back(v.get<double>());
        }
    }

    FlowshopInstance instance{TimingMatrix(machines, jobs, std::move(entries)), {}};
    if (doc.contains("p_success")) instance.failure = FailureModel(doc.at("p_success").get<double>());
    return instance;
}

}  // namespace

TimingMatrix::TimingMatrix(int machines, int jobs, std::vector<double> row_major)
    : machines_(machines), jobs_(jobs), entries_(std::move(row_major)) {
    if (machines_ < 1 || jobs_ < 1)
        throw std::invalid_argument("empty instance: need at least one machine and one job");
    if (entries_.size() != static_cast<std::size_t>(machines_) * static_cast<std::size_t>(jobs_))
        throw std::invalid_argument("entry count does not match machines x jobs");
    for (double v : entries_) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite entry in timing matrix");
        if (v < 0.0) throw std::invalid_argument("negative entry in timing matrix");
    }
}

double TimingMatrix::at(int machine, int job) const {
    if (machine < 0 || machine >= machines_ || job < 0 || job >= jobs_)
        throw std::out_of_range("timing matrix index out of range");
    return entries_[static_cast<std::size_t>(machine) * jobs_ + job];
}

std::vector<double> TimingMatrix::row(int machine) const {
    if (machine < 0 || machine >= machines_) throw std::out_of_range("machine index out of range");
    const auto begin = entries_.begin() + static_cast<std::ptrdiff_t>(machine) * jobs_;
    return {begin, begin + jobs_};
}

double TimingMatrix::row_sum(int machine) const {
    if (machine < 0 || machine >= machines_) throw std::out_of_range("machine index out of range");
    const auto begin = entries_.begin() + static_cast<std::ptrdiff_t>(machine) * jobs_;
    return std::accumulate(begin, begin + jobs_, 0.0);
}

Schedule::Schedule(std::vector<int> order) : order_(std::move(order)) {
    if (order_.empty()) throw std::invalid_argument("schedule is not a permutation: empty order");
    std::vector<bool> seen(order_.size(), false);
    for (int job : order_) {
        if (job < 0 || job >= static_cast<int>(order_.size()) || seen[job])
            throw std::invalid_argument("schedule is not a permutation of the job indices");
        seen[job] = true;
    }
}

Schedule Schedule::identity(int jobs) {
    std::vector<int> order(jobs);
    std::iota(order.begin(), order.end(), 0);
    return Schedule(std::move(order));
}

Schedule Schedule::from_one_based(const std::vector<int>& order) {
    std::vector<int> shifted;
    shifted.reserve(order.size());
    for (int job : order) shifted.push_back(job - 1);
    return Schedule(std::move(shifted));
}

int Schedule::job_at(int position) const {
    if (position < 0 || position >= size()) throw std::out_of_range("schedule position out of range");
    return order_[position];
}

std::vector<int> Schedule::to_one_based() const {
    std::vector<int> out;
    out.reserve(order_.size());
    for (int job : order_) out.push_back(job + 1);
    return out;
}

Schedule Schedule::inverse() const {
    std::vector<int> inv(order_.size());
    for (int pos = 0; pos < size(); ++pos) inv[order_[pos]] = pos;
    return Schedule(std::move(inv));
}

FailureModel::FailureModel(double ps) : p_success(ps) {
    if (!(ps > 0.0) || ps > 1.0 || !std::isfinite(ps))
        throw std::invalid_argument("p_success outside (0,1]");
}

StaircaseMatrix::StaircaseMatrix(int machines, std::vector<double> row_major)
    : machines_(machines), entries_(std::move(row_major)) {
    if (machines_ < 1 || entries_.size() % machines_ != 0)
        throw std::invalid_argument("staircase layout shape mismatch");
    columns_ = static_cast<int>(entries_.size()) / machines_;
}

double StaircaseMatrix::at(int row, int col) const {
    if (row < 0 || row >= machines_ || col < 0 || col >= columns_)
        throw std::out_of_range("staircase index out of range");
    return entries_[static_cast<std::size_t>(row) * columns_ + col];
}

TimingMatrix apply_schedule(const TimingMatrix& timing, const Schedule& schedule) {
    if (schedule.size() != timing.jobs())
        throw std::invalid_argument("schedule length " + std::to_string(schedule.size()) +
                                    " does not match job count " + std::to_string(timing.jobs()));
    std::vector<double> entries;
    entries.reserve(timing.raw().size());
    for (int i = 0; i < timing.machines(); ++i)
        for (int k = 0; k < timing.jobs(); ++k) entries.push_back(timing.at(i, schedule.job_at(k)));
    return TimingMatrix(timing.machines(), timing.jobs(), std::move(entries));
}

StaircaseMatrix staircase_layout(const TimingMatrix& timing) {
    const int machines = timing.machines();
    const int jobs = timing.jobs();
    const int columns = machines + jobs - 1;
    std::vector<double> entries(static_cast<std::size_t>(machines) * columns, 0.0);
    for (int i = 0; i < machines; ++i) {
        double* row = entries.data() + static_cast<std::size_t>(i) * columns;
        for (int k = 0; k < i; ++k) row[k] = timing.at(k, 0);
        for (int j = 0; j < jobs; ++j) row[i + j] = timing.at(i, j);
    }
    return StaircaseMatrix(machines, std::move(entries));
}

FlowshopInstance parse_instance(std::string_view text) {
    const std::string_view body = trim(text);
    if (body.empty()) throw std::invalid_argument("empty instance: no content");
    if (body.front() == '{') return parse_json(body);
    return parse_csv(body);
}

FlowshopInstance load_instance(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_instance(buffer.str());
}

std::string serialize_instance(const FlowshopInstance& instance) {
    nlohmann::json doc;
    doc["machines"] = instance.timing.machines();
    doc["jobs"] = instance.timing.jobs();
    nlohmann::json times = nlohmann::json::array();
    for (int i = 0; i < instance.timing.machines(); ++i) times.push_back(instance.timing.row(i));
    doc["times"] = std::move(times);
    if (instance.failure) doc["p_success"] = instance.failure->p_success;
    return doc.dump(2) + "\n";
}

}  // namespace flowshop
