#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qfmimo/params.hpp"
#include "qfmimo/rng.hpp"

namespace qfmimo {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

/// Destinations sharing one grid cell. Members are destination indices sorted by
/// ascending distance to the source; the last member is the farthest.
struct Group {
  int cell_row = 0;
  int cell_col = 0;
  std::vector<std::size_t> members;

  [[nodiscard]] std::size_t size() const { return members.size(); }
};

struct OccupancyStats {
  std::size_t min_count = 0;
  std::size_t max_count = 0;
  double mean_count = 0.0;
};

/// Immutable placement of the source and n destinations plus their cell grouping.
class NetworkRealization {
 public:
  static constexpr Point kSourcePosition{0.5, 0.5};

  /// Groups the given positions on a grid_side x grid_side grid. Throws
  /// ParameterError if a position leaves [0,1]^2 or grid_side < 1.
  NetworkRealization(std::vector<Point> destinations, int grid_side);

  [[nodiscard]] Point source() const { return kSourcePosition; }
  [[nodiscard]] std::span<const Point> destinations() const { return destinations_; }
  [[nodiscard]] std::size_t n() const { return destinations_.size(); }
  [[nodiscard]] int grid_side() const { return grid_side_; }
  [[nodiscard]] double cell_side() const { return 1.0 / grid_side_; }

  /// Nonempty groups ordered by cell index (row-major).
  [[nodiscard]] std::span<const Group> groups() const { return groups_; }
  [[nodiscard]] const Group& group(std::size_t k) const { return groups_.at(k); }
  [[nodiscard]] std::size_t n1() const { return groups_.size(); }
  [[nodiscard]] std::size_t n2_of(std::size_t k) const { return groups_.at(k).size(); }
  [[nodiscard]] double n2_mean() const;

  /// Distance from the source to destination `index`.
  [[nodiscard]] double source_distance(std::size_t index) const { return source_distance_.at(index); }
  /// Distance from the source to member `rank` of group k.
  [[nodiscard]] double member_distance(std::size_t k, std::size_t rank) const;

  /// Group and rank of a destination index.
  [[nodiscard]] std::size_t group_of(std::size_t index) const { return group_of_.at(index); }
  [[nodiscard]] std::size_t rank_of(std::size_t index) const { return rank_of_.at(index); }

  /// Destination counts for all grid_side^2 cells, empty cells included.
  [[nodiscard]] std::vector<std::size_t> cell_counts() const;

 private:
  std::vector<Point> destinations_;
  std::vector<double> source_distance_;
  int grid_side_;
  std::vector<Group> groups_;
  std::vector<std::size_t> group_of_;
  std::vector<std::size_t> rank_of_;
};

/// max(1, round(n^(q/2))), so the grid_side^2 cells approximate n^q cells of area n^-q.
int partition_cells(long long n, double q);

/// Uniform placement outside the exclusion disk, grouped per partition_cells.
NetworkRealization place_nodes(const NetworkParams& params);

OccupancyStats cell_occupancy_stats(const NetworkRealization& realization);

double min_source_distance(const NetworkRealization& realization);

}  // namespace qfmimo
