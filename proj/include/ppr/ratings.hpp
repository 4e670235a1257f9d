#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ppr::ratings {

// Sparse user x item rating matrix with contiguous 0-based internal indices.
// A stored rating is always in {1..r_max}; zero means "unrated" and is never
// stored. Read-only after construction, safe to share across threads.
class RatingMatrix {
public:
    explicit RatingMatrix(uint8_t r_max = 5) : r_max_(r_max) {}

    uint32_t num_users() const { return uint32_t(rows_.size()); }
    uint32_t num_items() const { return num_items_; }
    uint8_t r_max() const { return r_max_; }
    size_t num_ratings() const { return num_ratings_; }

    // 0 when unrated
    uint8_t rating(uint32_t user, uint32_t item) const;
    bool is_rated(uint32_t user, uint32_t item) const { return rating(user, item) != 0; }
    const std::vector<std::pair<uint32_t, uint8_t>>& row(uint32_t user) const;

    // dense {0,1..r_max} vector of one user's ratings
    std::vector<uint8_t> dense_row(uint32_t user) const;

    // throws ParseError on duplicates and out-of-range ratings
    void insert(uint32_t user, uint32_t item, uint8_t rating);
    void resize(uint32_t users, uint32_t items);

    // raw dataset ids, internal index -> source id; filled by the parser
    std::vector<uint32_t> user_ids;
    std::vector<uint32_t> item_ids;

private:
    std::vector<std::vector<std::pair<uint32_t, uint8_t>>> rows_;
    uint32_t num_items_ = 0;
    size_t num_ratings_ = 0;
    uint8_t r_max_;
};

// Per-user / per-item averages with exact integer accumulators. A user or
// item with no ratings gets mean = global mean, so every bias is defined.
struct RatingStats {
    double global_mean = 0.0;
    std::vector<double> user_mean, item_mean;
    std::vector<double> user_bias, item_bias;  // mean - global_mean
    int64_t total_sum = 0;
    size_t total_count = 0;
    std::vector<int64_t> user_sum, item_sum;
    std::vector<uint32_t> user_count, item_count;
};

// MovieLens "u::i::r::ts" (1M) or tab-separated (100k) lines; format is
// auto-detected from the first data line.
RatingMatrix parse_movielens(std::istream& in, uint8_t r_max = 5);

// snapshot format: u32 num_users, u32 num_items, u32 num_entries,
// then (u32 user, u32 item, u8 rating) triples, all little-endian
void save_snapshot(const RatingMatrix& m, std::ostream& out);
RatingMatrix load_snapshot(std::istream& in, uint8_t r_max = 5);

RatingStats compute_stats(const RatingMatrix& m);

struct RobDetConfig {
    std::string detector = "deviation";
    // reject when the profile's mean |r - item_mean| exceeds this
    double deviation_threshold = 1.5;
    // reject when the profile-size z-score exceeds this
    double filler_z_threshold = 3.0;
    uint64_t seed = 0;
};

// One accept(1)/reject(0) bit per user profile. Deterministic in
// (matrix, config). Unknown detector names raise ConfigError.
std::vector<uint8_t> robdet_filter(const RatingMatrix& m, const RobDetConfig& cfg);

std::vector<std::string> robdet_detector_names();

}  // namespace ppr::ratings
