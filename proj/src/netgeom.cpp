#include "qfmimo/netgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qfmimo {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

int cell_coordinate(double v, int grid_side) {
  return std::min(grid_side - 1, static_cast<int>(std::floor(v * grid_side)));
}

}  // namespace

NetworkRealization::NetworkRealization(std::vector<Point> destinations, int grid_side)
    : destinations_(std::move(destinations)), grid_side_(grid_side) {
  if (grid_side_ < 1) throw ParameterError("grid_side must be >= 1");
  const std::size_t n = destinations_.size();
  source_distance_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = destinations_[i];
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0))
      throw ParameterError("destination outside the unit square");
    source_distance_[i] = distance(kSourcePosition, p);
  }

  const auto cells = static_cast<std::size_t>(grid_side_) * static_cast<std::size_t>(grid_side_);
  std::vector<std::vector<std::size_t>> by_cell(cells);
  for (std::size_t i = 0; i < n; ++i) {
    const int row = cell_coordinate(destinations_[i].y, grid_side_);
    const int col = cell_coordinate(destinations_[i].x, grid_side_);
    by_cell[static_cast<std::size_t>(row) * grid_side_ + col].push_back(i);
  }

  group_of_.resize(n);
  rank_of_.resize(n);
  for (std::size_t c = 0; c < cells; ++c) {
    auto& members = by_cell[c];
    if (members.empty()) continue;
    std::stable_sort(members.begin(), members.end(), [this](std::size_t a, std::size_t b) {
      return source_distance_[a] < source_distance_[b];
    });
    const std::size_t k = groups_.size();
    for (std::size_t r = 0; r < members.size(); ++r) {
      group_of_[members[r]] = k;
      rank_of_[members[r]] = r;
    }
    groups_.push_back(Group{static_cast<int>(c / grid_side_), static_cast<int>(c % grid_side_),
                            std::move(members)});
  }
}

double NetworkRealization::n2_mean() const {
  return groups_.empty() ? 0.0 : static_cast<double>(n()) / static_cast<double>(groups_.size());
}

double NetworkRealization::member_distance(std::size_t k, std::size_t rank) const {
  return source_distance_[groups_.at(k).members.at(rank)];
}

std::vector<std::size_t> NetworkRealization::cell_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(grid_side_) * grid_side_, 0);
  for (const Group& g : groups_)
    counts[static_cast<std::size_t>(g.cell_row) * grid_side_ + g.cell_col] = g.size();
  return counts;
}

int partition_cells(long long n, double q) {
  if (n < 1) throw ParameterError("partition_cells needs n >= 1");
  if (!(q > 0.0 && q < 1.0)) throw ParameterError("partition_cells needs q in (0,1)");
  return std::max(1, static_cast<int>(std::lround(std::pow(static_cast<double>(n), q / 2.0))));
}

NetworkRealization place_nodes(const NetworkParams& params) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.destination_count());
  const double radius = params.exclusion_radius;

  Engine engine = make_engine(params.seed, {key(StreamTag::placement)});
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // The disk of radius 0.1 covers ~3% of the square; the cap only trips on pathological radii.
  constexpr int kMaxAttempts = 10000;
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    int attempts = 0;
    Point p;
    do {
      if (++attempts > kMaxAttempts) throw ParameterError("rejection sampling failed for exclusion_radius");
      p.x = unit(engine);
      p.y = unit(engine);
    } while (radius > 0.0 && !(distance(NetworkRealization::kSourcePosition, p) > radius));
    points.push_back(p);
  }
  return NetworkRealization(std::move(points), partition_cells(static_cast<long long>(n), params.q));
}

OccupancyStats cell_occupancy_stats(const NetworkRealization& realization) {
  const auto counts = realization.cell_counts();
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  return {*lo, *hi, total / static_cast<double>(counts.size())};
}

double min_source_distance(const NetworkRealization& realization) {
  if (realization.n() == 0) throw ParameterError("min_source_distance needs n >= 1");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < realization.n(); ++i) best = std::min(best, realization.source_distance(i));
  return best;
}

}  // namespace qfmimo
