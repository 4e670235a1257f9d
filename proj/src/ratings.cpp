#include "ppr/ratings.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ppr/bytes.hpp"
#include "ppr/errors.hpp"

namespace ppr::ratings {

uint8_t RatingMatrix::rating(uint32_t user, uint32_t item) const {
    if (user >= rows_.size()) return 0;
    const auto& row = rows_[user];
    auto it = std::lower_bound(row.begin(), row.end(), item,
                               [](const auto& e, uint32_t j) { return e.first < j; });
    if (it != row.end() && it->first == item) return it->second;
    return 0;
}

const std::vector<std::pair<uint32_t, uint8_t>>& RatingMatrix::row(uint32_t user) const {
    if (user >= rows_.size()) throw ConfigError("user index out of range");
    return rows_[user];
}

std::vector<uint8_t> RatingMatrix::dense_row(uint32_t user) const {
    std::vector<uint8_t> out(num_items_, 0);
    for (const auto& [j, r] : row(user)) out[j] = r;
    return out;
}

void RatingMatrix::insert(uint32_t user, uint32_t item, uint8_t rating) {
    if (rating == 0 || rating > r_max_) {
        throw ParseError("rating " + std::to_string(int(rating)) + " outside {1.." +
                         std::to_string(int(r_max_)) + "}");
    }
    if (user >= rows_.size()) rows_.resize(user + 1);
    if (item >= num_items_) num_items_ = item + 1;
    auto& row = rows_[user];
    auto it = std::lower_bound(row.begin(), row.end(), item,
                               [](const auto& e, uint32_t j) { return e.first < j; });
    if (it != row.end() && it->first == item) throw ParseError("duplicate rating");
    row.insert(it, {item, rating});
    ++num_ratings_;
}

void RatingMatrix::resize(uint32_t users, uint32_t items) {
    if (users > rows_.size()) rows_.resize(users);
    if (items > num_items_) num_items_ = items;
}

namespace {

std::vector<std::string> split_fields(const std::string& line, bool double_colon) {
    std::vector<std::string> out;
    if (double_colon) {
        size_t pos = 0;
        while (true) {
            size_t next = line.find("::", pos);
            if (next == std::string::npos) {
                out.push_back(line.substr(pos));
                break;
            }
            out.push_back(line.substr(pos, next - pos));
            pos = next + 2;
        }
    } else {
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) out.push_back(tok);
    }
    return out;
}

uint64_t parse_uint(const std::string& s, size_t line_no, const char* what) {
    if (s.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty " + what);
    uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + s + "'");
        v = v * 10 + uint64_t(c - '0');
        if (v > 0xffffffffULL) throw ParseError("line " + std::to_string(line_no) + ": " + what + " overflow");
    }
    return v;
}

}  // namespace

RatingMatrix parse_movielens(std::istream& in, uint8_t r_max) {
    RatingMatrix m(r_max);
    std::map<uint32_t, uint32_t> user_map, item_map;
    std::string line;
    size_t line_no = 0;
    bool format_known = false, double_colon = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!format_known) {
            double_colon = line.find("::") != std::string::npos;
            if (!double_colon && line.find('\t') == std::string::npos)
                throw ParseError("line " + std::to_string(line_no) + ": unrecognized rating format");
            format_known = true;
        }
        auto fields = split_fields(line, double_colon);
        if (fields.size() < 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected at least 3 fields");
        uint32_t raw_user = uint32_t(parse_uint(fields[0], line_no, "user id"));
        uint32_t raw_item = uint32_t(parse_uint(fields[1], line_no, "item id"));
        uint64_t r = parse_uint(fields[2], line_no, "rating");
        if (r == 0 || r > r_max)
            throw ParseError("line " + std::to_string(line_no) + ": rating " + fields[2] +
                             " outside {1.." + std::to_string(int(r_max)) + "}");
        auto [uit, uinserted] = user_map.try_emplace(raw_user, uint32_t(m.user_ids.size()));
        if (uinserted) m.user_ids.push_back(raw_user);
        auto [iit, iinserted] = item_map.try_emplace(raw_item, uint32_t(m.item_ids.size()));
        if (iinserted) m.item_ids.push_back(raw_item);
        try {
            m.insert(uit->second, iit->second, uint8_t(r));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (m.num_ratings() == 0) throw ParseError("no ratings");
    return m;
}

void save_snapshot(const RatingMatrix& m, std::ostream& out) {
    ByteWriter w;
    w.u32(m.num_users());
    w.u32(m.num_items());
    w.u32(uint32_t(m.num_ratings()));
    for (uint32_t u = 0; u < m.num_users(); ++u) {
        for (const auto& [j, r] : m.row(u)) {
            w.u32(u);
            w.u32(j);
            w.u8(r);
        }
    }
    const auto& bytes = w.bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

RatingMatrix load_snapshot(std::istream& in, uint8_t r_max) {
    std::vector<uint8_t> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    ByteReader r(data);
    uint32_t users = r.u32(), items = r.u32(), entries = r.u32();
    RatingMatrix m(r_max);
    m.resize(users, items);
    for (uint32_t i = 0; i < entries; ++i) {
        uint32_t u = r.u32(), j = r.u32();
        uint8_t v = r.u8();
        if (u >= users || j >= items) throw ParseError("snapshot entry out of bounds");
        m.insert(u, j, v);
    }
    r.expect_done();
    return m;
}

RatingStats compute_stats(const RatingMatrix& m) {
    if (m.num_ratings() == 0) throw ConfigError("cannot compute stats of an empty matrix");
    RatingStats s;
    s.user_sum.assign(m.num_users(), 0);
    s.user_count.assign(m.num_users(), 0);
    s.item_sum.assign(m.num_items(), 0);
    s.item_count.assign(m.num_items(), 0);
    for (uint32_t u = 0; u < m.num_users(); ++u) {
        for (const auto& [j, r] : m.row(u)) {
            s.total_sum += r;
            ++s.total_count;
            s.user_sum[u] += r;
            ++s.user_count[u];
            s.item_sum[j] += r;
            ++s.item_count[j];
        }
    }
    s.global_mean = double(s.total_sum) / double(s.total_count);
    s.user_mean.resize(m.num_users());
    s.user_bias.resize(m.num_users());
    for (uint32_t u = 0; u < m.num_users(); ++u) {
        s.user_mean[u] = s.user_count[u] ? double(s.user_sum[u]) / s.user_count[u] : s.global_mean;
        s.user_bias[u] = s.user_mean[u] - s.global_mean;
    }
    s.item_mean.resize(m.num_items());
    s.item_bias.resize(m.num_items());
    for (uint32_t j = 0; j < m.num_items(); ++j) {
        s.item_mean[j] = s.item_count[j] ? double(s.item_sum[j]) / s.item_count[j] : s.global_mean;
        s.item_bias[j] = s.item_mean[j] - s.global_mean;
    }
    return s;
}

namespace {

std::vector<uint8_t> deviation_detector(const RatingMatrix& m, const RobDetConfig& cfg) {
    auto stats = m.num_ratings() ? compute_stats(m) : RatingStats{};
    uint32_t n = m.num_users();
    std::vector<uint8_t> verdict(n, 1);
    if (n == 0) return verdict;

    // profile-size population statistics for the filler z-score
    double mean_size = 0.0;
    for (uint32_t u = 0; u < n; ++u) mean_size += double(m.row(u).size());
    mean_size /= n;
    double var_size = 0.0;
    for (uint32_t u = 0; u < n; ++u) {
        double d = double(m.row(u).size()) - mean_size;
        var_size += d * d;
    }
    var_size /= n;
    double sd_size = std::sqrt(var_size);

    for (uint32_t u = 0; u < n; ++u) {
        const auto& row = m.row(u);
        if (row.empty()) continue;
        double dev = 0.0;
        for (const auto& [j, r] : row) dev += std::abs(double(r) - stats.item_mean[j]);
        dev /= double(row.size());
        double z = sd_size > 0.0 ? (double(row.size()) - mean_size) / sd_size : 0.0;
        if (dev > cfg.deviation_threshold || z > cfg.filler_z_threshold) verdict[u] = 0;
    }
    return verdict;
}

std::vector<uint8_t> accept_all_detector(const RatingMatrix& m, const RobDetConfig&) {
    return std::vector<uint8_t>(m.num_users(), 1);
}

}  // namespace

std::vector<uint8_t> robdet_filter(const RatingMatrix& m, const RobDetConfig& cfg) {
    if (cfg.detector == "deviation") return deviation_detector(m, cfg);
    if (cfg.detector == "accept-all") return accept_all_detector(m, cfg);
    throw ConfigError("unknown RobDet detector '" + cfg.detector + "'");
}

std::vector<std::string> robdet_detector_names() { return {"deviation", "accept-all"}; }

}  // namespace ppr::ratings
